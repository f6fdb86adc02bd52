#pragma once

#include <cstdint>
#include <iosfwd>
#include <map>
#include <string>
#include <vector>

namespace graphpack {

/// Flat, fully serializable description of one experiment run. A config plus
/// code version determines all outputs; worker scheduling cannot reorder
/// records because they are emitted in instance order.
struct ExperimentConfig {
  std::string kind = "campaign";  // gen | pack | pack-exact | audit | constants | campaign
  std::vector<std::string> instance_paths;

  // Generated corpus parameters (used when instance_paths is empty).
  int count = 0;
  int n = 20;
  int delta1_cap = 3;
  int delta2_cap = 3;
  bool forbid_girth = false;
  std::uint64_t seed = 1;

  int restarts = 8;
  std::vector<int> t_grid = {2, 5, 15};
  int audit_pairs = 20;
  int oracle_limit = 7;
  int workers = 0;  // 0 = hardware concurrency

  std::string output_path;  // empty = stdout
};

/// One key = value per line; '#' comments; t_grid and instance lists are
/// comma-separated.
ExperimentConfig parse_config(std::istream& in);
ExperimentConfig parse_config_file(const std::string& path);

struct CampaignSummary {
  int instances = 0;
  /// property name -> (pass count, fail count).
  std::map<std::string, std::pair<int, int>> properties;
  bool all_ok() const {
    for (const auto& [name, counts] : properties)
      if (counts.second > 0) return false;
    return true;
  }
};

/// Runs generate -> solve -> audit-at-stuck-points -> oracle cross-check,
/// streaming one JSON record per line to `records`, and returns aggregate
/// pass/fail counts per property.
CampaignSummary run_campaign(const ExperimentConfig& cfg, std::ostream& records);

}  // namespace graphpack
