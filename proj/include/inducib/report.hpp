#pragma once

// Run reports. JSON is canonical; CSV is one row per recorded value.
// Exact values are stored as rational strings next to a decimal rendering.

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "inducib/exactmath.hpp"
#include "inducib/oracle.hpp"
#include "inducib/simplex.hpp"
#include "inducib/verify.hpp"

namespace inducib {

inline constexpr int kReportSchemaVersion = 1;
std::string tool_version();

struct ValueField {
  std::string name;
  std::string exact;  // "p/q", an integer, or empty for float-only values
  std::string decimal;
};

ValueField exact_value(std::string name, const ExactRat& q);
ValueField exact_value(std::string name, const ExactInt& z);
ValueField float_value(std::string name, const BigFloat& x, int digits = 30);
ValueField text_value(std::string name, std::string text);

struct CheckRecord {
  std::string name;
  std::string statement;  // what was checked, in words
  std::vector<std::pair<std::string, std::string>> params;
  std::vector<ValueField> values;
  bool pass = true;
  std::string witness;  // set on every FAIL
};

struct RunReport {
  std::string tool_version = inducib::tool_version();
  std::string command;
  std::uint64_t seed = 0;
  unsigned precision = 0;
  std::vector<CheckRecord> checks;
  double wall_time_s = 0;

  bool pass() const;
};

/// Pretty JSON with a stable key order. wall_time_s is the last key and is
/// omitted when include_wall_time is false.
std::string to_json(const RunReport& report, bool include_wall_time = true);
std::string to_csv(const RunReport& report);

// Record builders for the module results.
CheckRecord record(const RatioSweepReport& rep);
CheckRecord record(const ProfileCheck& pc, bool small_band);
CheckRecord record(const PatternSpec& f, const EdgeBudget& eb, bool strict);
CheckRecord record(const StabilityReport& rep);
CheckRecord record(const GrowthReport& rep);
CheckRecord record(const ShiftSweep& sw);
CheckRecord record(const PatternSpec& f, const MultipartitePartition& p, const AdjustmentCheck& adj);
CheckRecord record(const MeanValueReport& rep);
CheckRecord record(const QuinticReport& rep);
CheckRecord record(const CertifyReport& rep);
CheckRecord record(const PatternSpec& f, int n, std::optional<int> max_parts, const PartitionSearch& res);
CheckRecord record(const GraphSearch& res, int n);

}  // namespace inducib
