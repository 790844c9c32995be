#include <doctest.h>

#include <algorithm>
#include <cstdlib>

#include "lieorb/curated.hpp"

using namespace lieorb;

namespace {

std::filesystem::path data_dir() { return resolve_data_dir(); }

std::string table_text() {
  return std::string(kTableHeader) + "\nA2\tG2\t(3)\t3\nB_l\tD_{l+1}\t(3,1,...,1)\t2\n";
}

bool has_row(const std::vector<SharedOrbitRecord>& rows, const char* g, const char* gp, const char* orbit, int deg) {
  return std::any_of(rows.begin(), rows.end(), [&](const SharedOrbitRecord& r) {
    return r.g.str() == g && r.g_prime.str() == gp && r.orbit.str() == orbit && r.degree == deg;
  });
}

}  // namespace

TEST_CASE("type expressions") {
  const TypeExpr d = TypeExpr::parse("D_{l+1}");
  CHECK(d.parametric());
  CHECK(d.at(3).name() == "D4");
  CHECK(TypeExpr::parse("A_{2l-1}").at(3).name() == "A5");
  CHECK(TypeExpr::parse("B_l").at(5).name() == "B5");
  CHECK_FALSE(TypeExpr::parse("F4").parametric());
  for (const char* s : {"B4", "B_l", "D_{l+1}", "A_{2l-1}"}) CHECK(TypeExpr::parse(s).str() == s);
  CHECK_THROWS(TypeExpr::parse("Q_l"));
  CHECK_THROWS(TypeExpr::parse("B_{k}"));
}

TEST_CASE("orbit column") {
  const OrbitSpec s = OrbitSpec::parse("(3,1,...,1)");
  CHECK_FALSE(s.named());
  CHECK(s.at({Family::B, 3}).partition == Partition{3, 1, 1, 1, 1});
  CHECK(s.at({Family::D, 4}).partition == Partition{3, 1, 1, 1, 1, 1});
  CHECK(OrbitSpec::parse("(2,2,1,...,1)").at({Family::C, 2}).partition == Partition{2, 2});
  CHECK(OrbitSpec::parse("short").named());
  CHECK(OrbitSpec::parse("(3,1,...,1)").str() == "(3,1,...,1)");
  CHECK_THROWS(OrbitSpec::parse("(3,,1)"));
  CHECK_THROWS(OrbitSpec::parse("(3,1)").at({Family::B, 3}));
}

TEST_CASE("the shipped table") {
  const auto rows = load_table(data_dir() / "table62.tsv");
  CHECK(rows.size() == 9u);
  CHECK(has_row(rows, "A2", "G2", "(3)", 3));
  CHECK(has_row(rows, "G2", "D4", "sub", 6));
  CHECK(has_row(rows, "G2", "B3", "short", 1));
  CHECK(has_row(rows, "D4", "F4", "(3,2,2,1)", 4));
  for (const auto& r : rows) CHECK(r.degree >= 1);
  const auto ex = load_exceptional(data_dir() / "exceptional_orbits.json");
  const TableReport rep = validate_tables(rows, ex);
  for (const TableCheck& c : rep.checks) {
    CAPTURE(c.row);
    CAPTURE(c.instance);
    CAPTURE(c.detail);
    CHECK(c.ok);
  }
  CHECK(rep.rows == 9);
  CHECK(rep.ok());
}

TEST_CASE("round trips") {
  const auto rows = load_table(data_dir() / "table62.tsv");
  CHECK(parse_table(serialize_table(rows)) == rows);
  const auto ex = load_exceptional(data_dir() / "exceptional_orbits.json");
  const auto back = parse_exceptional(serialize_exceptional(ex));
  REQUIRE(back.size() == ex.size());
  for (std::size_t i = 0; i < ex.size(); ++i) {
    CHECK(back[i].g == ex[i].g);
    CHECK(back[i].name == ex[i].name);
    CHECK(back[i].labels == ex[i].labels);
    CHECK(back[i].dimension == ex[i].dimension);
    CHECK(back[i].pi1_order == ex[i].pi1_order);
    CHECK(back[i].closure_normal == ex[i].closure_normal);
    CHECK(back[i].citation == ex[i].citation);
  }
  CHECK(serialize_exceptional(back) == serialize_exceptional(ex));
}

TEST_CASE("table parse errors carry line numbers") {
  CHECK(parse_table(table_text()).size() == 2u);
  auto line_of = [](const std::string& text) {
    try {
      parse_table(text);
    } catch (const DataError& e) {
      return e.line();
    }
    return -1;
  };
  CHECK(line_of("g\tg'\torbit\tdeg\n") == 1);
  CHECK(line_of(table_text() + "A2\tG2\t(3)\n") == 4);
  CHECK(line_of(table_text() + "A2\tG2\t(3)\t0\n") == 4);
  CHECK(line_of(table_text() + "A2\tG2\t(3)\tx\n") == 4);
  CHECK(line_of("A2\tG2\t(3)\t3\n") == 1);
  CHECK(line_of(std::string(kTableHeader) + "\nZ9\tG2\t(3)\t3\n") == 2);
}

TEST_CASE("exceptional metadata errors") {
  CHECK_THROWS_AS(parse_exceptional("{"), DataError);
  CHECK_THROWS_AS(parse_exceptional(R"({"orbits": [{"g": "G2"}]})"), DataError);
  CHECK_THROWS_AS(parse_exceptional(R"({"orbits": [{"g": "G2", "name": "x", "labels": [0, 3], "dimension": 6,
      "pi1_order": 1, "closure_normal": true, "citation": "c"}]})"),
                  DataError);
  CHECK_THROWS_AS(parse_exceptional(R"({"orbits": [{"g": "G2", "name": "x", "labels": [0, 1], "dimension": 7,
      "pi1_order": 1, "closure_normal": true, "citation": "c"}]})"),
                  DataError);
  CHECK_THROWS_AS(load_table("/nonexistent/table.tsv"), DataError);
}

TEST_CASE("validation reports the failing row") {
  auto rows = load_table(data_dir() / "table62.tsv");
  const auto ex = load_exceptional(data_dir() / "exceptional_orbits.json");
  for (auto& r : rows)
    if (r.g.str() == "D4") r.degree = 2;
  const TableReport rep = validate_tables(rows, ex);
  CHECK_FALSE(rep.ok());
  int failing = 0;
  for (const TableCheck& c : rep.checks)
    if (!c.ok) {
      ++failing;
      CHECK(c.row.find("D4") != std::string::npos);
    }
  CHECK(failing >= 1);

  auto bad_ex = ex;
  for (auto& e : bad_ex)
    if (e.name == "short" && e.g.family == Family::F) e.labels = {0, 0, 1, 0};
  CHECK_FALSE(validate_tables(load_table(data_dir() / "table62.tsv"), bad_ex).ok());
}

TEST_CASE("data directory resolution") {
  CHECK(resolve_data_dir(std::filesystem::path("/tmp/x")) == std::filesystem::path("/tmp/x"));
  ::setenv("LIEORB_DATA_DIR", "/tmp/y", 1);
  CHECK(resolve_data_dir() == std::filesystem::path("/tmp/y"));
  ::unsetenv("LIEORB_DATA_DIR");
  CHECK(std::filesystem::exists(resolve_data_dir() / "table62.tsv"));
}
