#include <doctest.h>

#include <set>

#include "lieorb/curated.hpp"
#include "lieorb/verify.hpp"

using namespace lieorb;

namespace {

VerifyConfig config(int jobs, std::vector<std::string> only = {}) {
  VerifyConfig c;
  c.jobs = jobs;
  c.only = std::move(only);
  c.data_dir = resolve_data_dir();
  return c;
}

std::string dump(const VerifyResult& r) {
  nlohmann::json a = nlohmann::json::array();
  for (const auto& rep : r.reports) a.push_back(to_json(rep));
  return a.dump();
}

}  // namespace

TEST_CASE("full run passes and is deterministic across job counts") {
  const VerifyResult serial = verify_paper(config(1));
  const VerifyResult parallel = verify_paper(config(4));
  CHECK(serial.ok());
  for (const auto& r : serial.reports) {
    CAPTURE(r.check);
    CAPTURE(r.detail);
    CHECK(r.status != Status::Fail);
  }
  CHECK(dump(serial) == dump(parallel));
  CHECK(dump(serial) == dump(verify_paper(config(1))));
}

TEST_CASE("reports follow declaration order and carry known topics") {
  const VerifyResult r = verify_paper(config(3));
  std::vector<std::string> order;
  std::set<std::string> topics;
  for (const auto& s : verify_suites()) {
    order.push_back(s.name);
    topics.insert(s.topic);
  }
  std::size_t pos = 0;
  for (const auto& rep : r.reports) {
    CHECK(topics.count(rep.topic) == 1);
    while (pos < order.size() && order[pos] != rep.suite) ++pos;
    CHECK(pos < order.size());
    CHECK_FALSE(rep.runtime_ms.has_value());
  }
  std::set<std::string> seen;
  for (const auto& rep : r.reports) seen.insert(rep.suite);
  CHECK(seen.size() == order.size());
}

TEST_CASE("suite selection") {
  const VerifyResult r = verify_paper(config(1, {"table62"}));
  REQUIRE_FALSE(r.reports.empty());
  for (const auto& rep : r.reports) CHECK(rep.suite == "table62");
  CHECK_THROWS_AS(verify_paper(config(1, {"no-such-suite"})), std::invalid_argument);
}

TEST_CASE("exceptional dimensions are reported") {
  const VerifyResult r = verify_paper(config(1, {"exceptional-dims"}));
  REQUIRE(r.reports.size() == 5u);
  const char* expected[] = {"5", "15", "21", "33", "57"};
  for (std::size_t i = 0; i < 5; ++i) CHECK(r.reports[i].witness.is_null());
  for (std::size_t i = 0; i < 5; ++i) CHECK(r.reports[i].detail == std::string("computed ") + expected[i] + ", expected " + expected[i]);
}

TEST_CASE("timing is opt-in") {
  VerifyConfig c = config(1, {"sp-model"});
  c.timing = true;
  for (const auto& rep : verify_paper(c).reports) CHECK(rep.runtime_ms.has_value());
}

TEST_CASE("missing data files are a data error") {
  VerifyConfig c = config(1, {"table62"});
  c.data_dir = "/nonexistent";
  CHECK_THROWS_AS(verify_paper(c), DataError);
}

TEST_CASE("report json shape") {
  VerdictReport r{"s", "c", "t", Status::Fail, "d", nlohmann::json{{"x", 1}}, 1.5};
  const auto j = to_json(r);
  CHECK(j["status"] == "fail");
  CHECK(j["witness"]["x"] == 1);
  CHECK(j["runtime_ms"] == 1.5);
  r.runtime_ms.reset();
  CHECK_FALSE(to_json(r).contains("runtime_ms"));
}
