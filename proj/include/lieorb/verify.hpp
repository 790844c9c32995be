#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "lieorb/chevalley.hpp"

namespace lieorb {

enum class Status { Pass, Fail, Probabilistic };
std::string to_string(Status s);

/// One line of the verification report. A failing report carries a witness
/// or the computed/expected values that disagree.
struct VerdictReport {
  std::string suite;
  std::string check;
  std::string topic;
  Status status = Status::Pass;
  std::string detail;
  nlohmann::json witness;  ///< null when there is nothing to show
  std::optional<double> runtime_ms;
};

nlohmann::json to_json(const VerdictReport& r);

/// Sparse coefficient list [{"basis": "X(1,0)", "index": 0, "coeff": "1/2"}, ...].
nlohmann::json element_json(const ChevalleyAlgebra& g, const LieElement& x);

struct VerifyConfig {
  std::uint64_t seed = 0x5eed;
  int jobs = 1;
  std::vector<std::string> only;  ///< suite names; empty means all
  std::filesystem::path data_dir;
  bool timing = false;
};

struct SuiteInfo {
  std::string name;
  std::string topic;
  std::string summary;
};

/// Suites in declaration order.
const std::vector<SuiteInfo>& verify_suites();

struct VerifyResult {
  std::vector<VerdictReport> reports;
  bool ok() const;
};

/// Runs the selected suites, concurrently when jobs > 1; the report order is
/// the declaration order. Throws std::invalid_argument on unknown suites and
/// DataError on unreadable data files.
VerifyResult verify_paper(const VerifyConfig& config);

}  // namespace lieorb
