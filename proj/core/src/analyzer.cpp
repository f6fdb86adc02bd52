#include "graphpack/analyzer.hpp"

#include <cmath>
#include <stdexcept>

namespace graphpack {

VertexSet blue_nbhd(const PackingInstance& inst, int label) {
  return neighborhood(inst.blue(), label);
}

VertexSet red_nbhd(const PackingInstance& inst, const Labelling& lab, int label) {
  VertexSet out(inst.n());
  for (int x : inst.red().adj(lab.vertex_of(label))) out.add(lab.label_of(x));
  return out;
}

VertexSet red_blue_nbhd(const PackingInstance& inst, const Labelling& lab, int label) {
  VertexSet out(inst.n());
  for (int x : inst.red().adj(lab.vertex_of(label)))
    for (int j : inst.blue().adj(lab.label_of(x))) out.add(j);
  return out;
}

VertexSet blue_red_nbhd(const PackingInstance& inst, const Labelling& lab, int label) {
  VertexSet out(inst.n());
  for (int j : inst.blue().adj(label))
    for (int x : inst.red().adj(lab.vertex_of(j))) out.add(lab.label_of(x));
  return out;
}

bool red_blue_link(const PackingInstance& inst, const Labelling& lab, int i, int j) {
  for (int x : inst.red().adj(lab.vertex_of(i)))
    if (inst.blue().has_edge(lab.label_of(x), j)) return true;
  return false;
}

bool blue_red_link(const PackingInstance& inst, const Labelling& lab, int i, int j) {
  for (int mid : inst.blue().adj(i))
    if (inst.red().has_edge(lab.vertex_of(mid), lab.vertex_of(j))) return true;
  return false;
}

NeighborhoodProfile profile(const PackingInstance& inst, const Labelling& lab, int i) {
  if (i < 0 || i >= inst.n()) throw std::out_of_range("profile: label out of range");
  NeighborhoodProfile p;
  p.focus = i;
  p.n1 = blue_nbhd(inst, i);
  p.n2 = red_nbhd(inst, lab, i);
  p.n1n2 = red_blue_nbhd(inst, lab, i);
  p.n2n1 = blue_red_nbhd(inst, lab, i);
  p.a_set = p.n2n1 - p.n1 - p.n2 - p.n1n2;
  p.b_set = p.n1n2 - p.n1 - p.n2 - p.n2n1;
  p.a_star = p.n2n1 - p.n2 - p.n1n2;
  p.b_star = p.n1n2 - p.n1 - p.n2n1;
  return p;
}

CorradiResult corradi_bound(const SetFamily& fam) {
  const double x_size = fam.universe_size;
  const double k = fam.k;
  const double t = fam.t;
  const double denom = k * k - (t - 1) * x_size;
  if (denom <= 0)
    throw std::domain_error("corradi_bound: requires k^2 > (t-1)|X|");

  CorradiResult result;
  result.bound = x_size * (k - (t - 1)) / denom;

  result.hypotheses_ok = true;
  std::vector<VertexSet> sets;
  sets.reserve(fam.sets.size());
  for (const auto& raw : fam.sets) {
    VertexSet s(fam.universe_size);
    for (int v : raw) s.add(v);
    if (s.count() < fam.k) result.hypotheses_ok = false;
    sets.push_back(std::move(s));
  }
  for (std::size_t i = 0; i < sets.size() && result.hypotheses_ok; ++i)
    for (std::size_t j = i + 1; j < sets.size(); ++j)
      if (VertexSet::intersection_size(sets[i], sets[j]) > fam.t - 1) {
        result.hypotheses_ok = false;
        break;
      }
  return result;
}

double c_t(int t) {
  if (t < 2) throw std::domain_error("c_t: requires t >= 2");
  return std::sqrt(1.37) / (0.37 * std::sqrt(t - 1.0)) + std::sqrt(1.37 * (t - 1.0));
}

namespace {

struct LabelGraphs {
  // Neighborhood closures in label space for one direction of the audit.
  const PackingInstance& inst;
  const Labelling& lab;
  bool inner_is_red;  // inner = the first hop (N_in), outer = the second

  VertexSet inner(int i) const {
    return inner_is_red ? red_nbhd(inst, lab, i) : blue_nbhd(inst, i);
  }
  VertexSet outer_of_set(const VertexSet& s) const {
    VertexSet out(inst.n());
    for (int j : s.members()) {
      if (inner_is_red) {
        for (int w : inst.blue().adj(j)) out.add(w);
      } else {
        for (int x : inst.red().adj(lab.vertex_of(j))) out.add(lab.label_of(x));
      }
    }
    return out;
  }
  VertexSet outer(int i) const {
    VertexSet single(inst.n());
    single.add(i);
    return outer_of_set(single);
  }
  int delta_inner() const { return inner_is_red ? inst.delta2() : inst.delta1(); }
  int delta_outer() const { return inner_is_red ? inst.delta1() : inst.delta2(); }
};

BoundAudit audit_direction(const LabelGraphs& view, int a, int b, int t,
                           bool girth_supported) {
  const int n = view.inst.n();
  BoundAudit audit;
  audit.direction = view.inner_is_red ? AuditDirection::red_blue : AuditDirection::blue_red;
  audit.a = a;
  audit.b = b;
  audit.t = t;
  audit.girth_supported = girth_supported;

  const double d_in = view.delta_inner();
  const double d_out = view.delta_outer();
  const double d1 = view.inst.delta1();
  const double d2 = view.inst.delta2();
  audit.k = std::sqrt(1.37 * (t - 1) * d_in);

  const VertexSet in_a = view.inner(a);
  const VertexSet in_b = view.inner(b);
  const VertexSet nbhd_a = view.outer_of_set(in_a);
  const VertexSet nbhd_b = view.outer_of_set(in_b);
  audit.lhs = VertexSet::intersection_size(nbhd_a, nbhd_b);

  // Q_t: members of the composed neighborhood of a covered by the outer
  // neighborhoods of at least t inner neighbors of a.
  VertexSet q_t(n);
  for (int y : nbhd_a.members()) {
    const VertexSet back = view.inner_is_red
                               ? blue_nbhd(view.inst, y)
                               : red_nbhd(view.inst, view.lab, y);
    if (VertexSet::intersection_size(back, in_a) >= t) q_t.add(y);
  }
  audit.q_t_size = q_t.count();

  // D_t: composed neighborhood of a restricted to inner(a) \ inner(b), with
  // Q_t and inner(b) pruned away.
  const VertexSet in_a_only = in_a - in_b;
  const VertexSet d_t = view.outer_of_set(in_a_only) - q_t - in_b;
  audit.d_t_size = d_t.count();

  // R_t(k): inner neighbors of b whose outer neighborhood meets D_t in more
  // than k elements (strict inequality).
  int r_count = 0;
  for (int x : in_b.members()) {
    const VertexSet out_x = view.outer(x);
    if (static_cast<double>(VertexSet::intersection_size(out_x, d_t)) > audit.k)
      ++r_count;
  }
  audit.r_t_size = r_count;
  audit.r_corradi_bound = std::sqrt(1.37) / 0.37 * std::sqrt(d_in / (t - 1.0));

  // Partition accounting of lhs.
  const VertexSet shared_inner = in_a & in_b;
  const VertexSet sep1 = view.outer_of_set(shared_inner);
  audit.sep1_in_lhs = VertexSet::intersection_size(sep1, nbhd_b);
  audit.q_in_lhs = VertexSet::intersection_size(q_t, nbhd_b);
  audit.inner_b_in_lhs = VertexSet::intersection_size(in_b, nbhd_b);
  audit.d_in_lhs = VertexSet::intersection_size(d_t, nbhd_b);

  const double sqrt137 = std::sqrt(1.37);
  audit.rhs = d1 + d2 + std::sqrt(1.37 * (t - 1.0)) * d_in * std::sqrt(d_in) +
              sqrt137 / (0.37 * std::sqrt(t - 1.0)) * d_out * std::sqrt(d_in) +
              d1 * d2 / t;
  audit.holds = static_cast<double>(audit.lhs) <= audit.rhs;
  return audit;
}

}  // namespace

Claim41Audit audit_claim41(const PackingInstance& inst, const Labelling& lab,
                           int a, int b, int t,
                           std::optional<bool> girth_supported) {
  if (a == b) throw std::invalid_argument("audit_claim41: a and b must differ");
  if (t < 2) throw std::domain_error("audit_claim41: requires t >= 2");
  bool supported;
  if (girth_supported) {
    supported = *girth_supported;
  } else {
    supported = !has_c4(inst.red()) && !find_even_short_cycle(inst.blue());
  }
  Claim41Audit out;
  out.red_blue = audit_direction({inst, lab, true}, a, b, t, supported);
  out.blue_red = audit_direction({inst, lab, false}, a, b, t, supported);
  return out;
}

Claim42Audit audit_claim42(const PackingInstance& inst, const Labelling& lab,
                           int u, int v, int t) {
  if (t < 2) throw std::domain_error("audit_claim42: requires t >= 2");
  Claim42Audit audit;
  audit.u = u;
  audit.v = v;
  audit.t = t;
  audit.context_purple = inst.is_purple(lab, u, v);

  const double d1 = inst.delta1();
  const double d2 = inst.delta2();
  audit.bound = d1 + d2 + c_t(t) * d1 * std::sqrt(d1) + d1 * d2 / t;

  const NeighborhoodProfile pu = profile(inst, lab, u);
  const NeighborhoodProfile pv = profile(inst, lab, v);
  audit.n1n2_intersection = VertexSet::intersection_size(pu.n1n2, pv.n1n2);
  audit.n2n1_intersection = VertexSet::intersection_size(pu.n2n1, pv.n2n1);
  audit.a_v = pv.a_set.count();
  audit.b_v = pv.b_set.count();
  audit.a_u = pu.a_set.count();
  audit.b_u = pu.b_set.count();

  audit.all_bounded = audit.n1n2_intersection <= audit.bound &&
                      audit.n2n1_intersection <= audit.bound &&
                      audit.a_v <= audit.bound && audit.b_v <= audit.bound &&
                      audit.a_u <= audit.bound && audit.b_u <= audit.bound;
  return audit;
}

ThresholdReport thresholds(int t) {
  if (t <= 4) throw std::domain_error("thresholds: requires t >= 5");
  ThresholdReport report;
  report.t = t;
  const double ct = c_t(t);
  report.c_t = ct;

  {
    const double a = static_cast<double>(t - 4) * (t - 4);
    const double b = -(544.0 * t * t * ct * ct + 24.0 * t);
    const double c = 144.0 * t * t;
    report.delta2_root = (-b + std::sqrt(b * b - 4 * a * c)) / (2 * a);
  }
  {
    const double a = t - 4;
    const double b = -136.0 * t * ct;
    const double c = -408.0 * t;
    const double y = (-b + std::sqrt(b * b - 4 * a * c)) / (2 * a);
    report.delta1_root = y * y;
  }
  return report;
}

NBoundAudit audit_nbound(const PackingInstance& inst, const Labelling& lab,
                         int u, int v, int t) {
  if (t < 2) throw std::domain_error("audit_nbound: requires t >= 2");
  NBoundAudit audit;
  audit.t = t;
  audit.n_actual = inst.n();

  const double d1 = inst.delta1();
  const double d2 = inst.delta2();
  audit.n_upper = 4.0 * c_t(t) * d1 * std::sqrt(d1) + 4.0 * d1 * d2 / t + 7.0 * (d1 + d2);

  const NeighborhoodProfile pu = profile(inst, lab, u);
  VertexSet cover = pu.n1n2 | pu.a_star | pu.n2;
  int uncovered = 0;
  bool only_v_missing = true;
  for (int w = 0; w < inst.n(); ++w) {
    if (!cover.contains(w)) {
      ++uncovered;
      if (w != v) only_v_missing = false;
    }
  }
  audit.uncovered_count = uncovered;
  audit.covers_all = uncovered == 0;
  audit.covers_all_but_v = uncovered == 0 || (uncovered == 1 && only_v_missing);
  return audit;
}

}  // namespace graphpack
