#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "minrep.hpp"
#include "spaces.hpp"

namespace h1min {

struct ExperimentRecord {
  std::string level;
  double volume = 0.0;
  std::uint32_t b1 = 0;
  double b1_over_vol = 0.0;
  double rlength_norm = 0.0;
  bool rlength_exact = false;
  double thin_fraction = 0.0;
  double R = 0.0;
  std::uint64_t runtime_ms = 0;
  std::string error;  // nonempty when the level failed; carried in JSON only

  bool operator==(const ExperimentRecord& o) const;
};

struct TowerParams {
  std::uint64_t seed = 0;
  RLengthParams rlength;
  double horizon = 0.0;  // 0 picks 2 * max(R) + 1
};

// One record per (level, R), levels in order, R ascending. Per-level failures
// are recorded in the row and the run continues.
std::vector<ExperimentRecord> run_tower_experiment(const TowerSpec& spec,
                                                   std::vector<double> r_list,
                                                   const TowerParams& params = {});

extern const char* kRecordCsvHeader;

// include_timings = false zeroes runtime_ms so same-seed runs emit identical
// bytes.
std::string records_to_csv(const std::vector<ExperimentRecord>& records, bool include_timings);
std::string records_to_json(const std::vector<ExperimentRecord>& records, bool include_timings);
std::vector<ExperimentRecord> records_from_json(const std::string& text);
std::string records_to_svg(const std::vector<ExperimentRecord>& records);

// Writes tower.csv, tower.json and tower.svg under dir.
void emit_report(const std::vector<ExperimentRecord>& records, const std::string& dir,
                 bool include_timings = false);

}  // namespace h1min
