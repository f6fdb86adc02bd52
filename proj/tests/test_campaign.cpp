#include <doctest.h>

#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

#include "graphpack/campaign.hpp"
#include "graphpack/generator.hpp"
#include "graphpack/graph_io.hpp"

using namespace graphpack;

TEST_CASE("parse_config reads keys, comments, and lists") {
  std::istringstream in(
      "# experiment header\n"
      "kind = campaign\n"
      "count = 12\n"
      "n = 18\n"
      "delta1_cap = 4\n"
      "delta2_cap = 2\n"
      "forbid_girth = true\n"
      "seed = 77\n"
      "restarts = 5\n"
      "t_grid = 2, 5, 15\n"
      "audit_pairs = 3\n"
      "oracle_limit = 6\n"
      "workers = 2\n");
  const ExperimentConfig cfg = parse_config(in);
  CHECK(cfg.count == 12);
  CHECK(cfg.n == 18);
  CHECK(cfg.delta1_cap == 4);
  CHECK(cfg.delta2_cap == 2);
  CHECK(cfg.forbid_girth);
  CHECK(cfg.seed == 77);
  CHECK(cfg.restarts == 5);
  CHECK(cfg.t_grid == std::vector<int>{2, 5, 15});
  CHECK(cfg.audit_pairs == 3);
  CHECK(cfg.oracle_limit == 6);
  CHECK(cfg.workers == 2);
}

TEST_CASE("parse_config rejects malformed input") {
  std::istringstream junk("count 12\n");
  CHECK_THROWS_AS(parse_config(junk), std::invalid_argument);
  std::istringstream unknown("frobnicate = 3\n");
  CHECK_THROWS_AS(parse_config(unknown), std::invalid_argument);
}

namespace {

ExperimentConfig small_campaign() {
  ExperimentConfig cfg;
  cfg.count = 8;
  cfg.n = 7;
  cfg.delta1_cap = 2;
  cfg.delta2_cap = 2;
  cfg.seed = 11;
  cfg.restarts = 4;
  cfg.audit_pairs = 4;
  cfg.oracle_limit = 7;
  cfg.workers = 2;
  return cfg;
}

}  // namespace

TEST_CASE("run_campaign emits one record per instance plus a summary") {
  const ExperimentConfig cfg = small_campaign();
  std::ostringstream records;
  const CampaignSummary summary = run_campaign(cfg, records);
  CHECK(summary.instances == 8);
  CHECK(summary.all_ok());

  std::istringstream lines(records.str());
  std::string line;
  int solve_records = 0;
  int summary_records = 0;
  while (std::getline(lines, line)) {
    const auto record = nlohmann::json::parse(line);  // every line is valid JSON
    if (record.at("kind") == "solve") {
      ++solve_records;
      CHECK(record.at("n") == 7);
      CHECK(record.contains("digest"));
      CHECK(record.contains("oracle"));  // n <= oracle_limit
      CHECK(record.at("replay").contains("perm"));
    } else {
      CHECK(record.at("kind") == "summary");
      ++summary_records;
      CHECK(record.at("instances") == 8);
    }
  }
  CHECK(solve_records == 8);
  CHECK(summary_records == 1);
}

TEST_CASE("run_campaign output is deterministic across worker counts") {
  ExperimentConfig cfg = small_campaign();
  std::ostringstream serial, parallel;
  cfg.workers = 1;
  run_campaign(cfg, serial);
  cfg.workers = 4;
  run_campaign(cfg, parallel);

  // wall_ms differs between runs; compare records with it removed.
  auto canonical = [](const std::string& stream) {
    std::istringstream lines(stream);
    std::string line, out;
    while (std::getline(lines, line)) {
      auto record = nlohmann::ordered_json::parse(line);
      record.erase("wall_ms");
      out += record.dump() + "\n";
    }
    return out;
  };
  CHECK(canonical(serial.str()) == canonical(parallel.str()));
}

TEST_CASE("run_campaign over explicit instance files") {
  const std::string path_a = "campaign_test_instance_a.txt";
  const std::string path_b = "campaign_test_instance_b.txt";
  {
    std::ofstream out(path_a);
    write_instance(out, standard_family(Family::matching, 6),
                   standard_family(Family::matching, 6), GraphFormat::edgelist);
  }
  {
    std::ofstream out(path_b);
    write_instance(out, standard_family(Family::star, 6),
                   standard_family(Family::path, 6), GraphFormat::graph6);
  }
  ExperimentConfig cfg = small_campaign();
  cfg.count = 0;
  cfg.instance_paths = {path_a, path_b};
  std::ostringstream records;
  const CampaignSummary summary = run_campaign(cfg, records);
  CHECK(summary.instances == 2);
  CHECK(summary.all_ok());
  std::remove(path_a.c_str());
  std::remove(path_b.c_str());
}

TEST_CASE("empty campaign returns an empty summary") {
  ExperimentConfig cfg;
  cfg.count = 0;
  std::ostringstream records;
  const CampaignSummary summary = run_campaign(cfg, records);
  CHECK(summary.instances == 0);
  CHECK(summary.all_ok());
}
