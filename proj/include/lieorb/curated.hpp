#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "lieorb/diagram.hpp"
#include "lieorb/partitions.hpp"

namespace lieorb {

/// Cartan type whose rank may depend on a parameter l: rank = coef * l + offset,
/// written "B4", "B_l", "D_{l+1}" or "A_{2l-1}".
struct TypeExpr {
  Family family = Family::A;
  int coef = 0;
  int offset = 0;

  static TypeExpr parse(std::string_view text);
  bool parametric() const { return coef != 0; }
  CartanType at(int l) const;
  std::string str() const;
  bool operator==(const TypeExpr&) const = default;
};

/// Orbit column: a partition, possibly ending in a fill part that is repeated
/// until the standard dimension is reached ("3,1,...,1"), or a named orbit of
/// an exceptional algebra.
struct OrbitSpec {
  std::string name;     ///< exceptional orbit name; empty for partitions
  Partition prefix;     ///< explicit parts
  int fill = 0;         ///< repeated part, 0 if none

  static OrbitSpec parse(std::string_view text);
  bool named() const { return !name.empty(); }
  JordanOrbit at(const CartanType& t) const;
  std::string str() const;
  bool operator==(const OrbitSpec&) const = default;
};

struct SharedOrbitRecord {
  TypeExpr g, g_prime;
  OrbitSpec orbit;
  int degree = 1;
  int line = 0;
  bool operator==(const SharedOrbitRecord& o) const {
    return g == o.g && g_prime == o.g_prime && orbit == o.orbit && degree == o.degree;
  }
};

struct ExceptionalOrbitRecord {
  CartanType g;
  std::string name;
  std::vector<int> labels;
  int dimension = 0;
  int pi1_order = 1;
  std::optional<bool> closure_normal;
  std::string citation;

  WeightedDiagram diagram() const { return {g, labels}; }
};

/// Parse failure carrying the 1-based line of the offending row (0 if unknown).
class DataError : public std::runtime_error {
 public:
  DataError(const std::string& what, int line = 0)
      : std::runtime_error(line ? "line " + std::to_string(line) + ": " + what : what), line_(line) {}
  int line() const { return line_; }

 private:
  int line_;
};

inline constexpr std::string_view kTableHeader = "g\tg_prime\torbit\tdegree";

std::vector<SharedOrbitRecord> parse_table(std::string_view text);
std::vector<SharedOrbitRecord> load_table(const std::filesystem::path& path);
std::string serialize_table(const std::vector<SharedOrbitRecord>& rows);

std::vector<ExceptionalOrbitRecord> parse_exceptional(std::string_view json_text);
std::vector<ExceptionalOrbitRecord> load_exceptional(const std::filesystem::path& path);
std::string serialize_exceptional(const std::vector<ExceptionalOrbitRecord>& recs);
const ExceptionalOrbitRecord* find_exceptional(const std::vector<ExceptionalOrbitRecord>& recs, const CartanType& g,
                                               std::string_view name);

/// Explicit path if given, then $LIEORB_DATA_DIR, then the source-tree data directory.
std::filesystem::path resolve_data_dir(const std::optional<std::filesystem::path>& explicit_dir = std::nullopt);

/// Ranks at which a parametric row is instantiated for validation.
std::vector<int> validation_ranks(const TypeExpr& g);

struct TableCheck {
  int line = 0;
  std::string row;       ///< "g g' orbit degree"
  std::string instance;  ///< e.g. "B3 (3,1,1,1,1)"
  std::string what;
  bool ok = false;
  std::string detail;
};

struct TableReport {
  std::vector<TableCheck> checks;
  int rows = 0;
  bool ok() const;
};

TableReport validate_tables(const std::vector<SharedOrbitRecord>& rows,
                            const std::vector<ExceptionalOrbitRecord>& exceptional);

}  // namespace lieorb
