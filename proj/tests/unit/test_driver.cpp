#include <doctest.h>

#include <sstream>

#include "hssv/driver.hpp"

using namespace hssv;

namespace {

RunConfig small_config() {
  RunConfig c;
  c.max_rank = 5;
  c.primes_plucker = {3, 5};
  c.primes_segre = {2};
  c.jacobi_triples = 50;
  c.random_bivectors = 50;
  c.q_elements = 3;
  return c;
}

}  // namespace

TEST_CASE("config validation") {
  RunConfig c;
  CHECK_NOTHROW(validate(c));
  c.max_rank = 3;
  CHECK_THROWS_AS(validate(c), Error);
  c = RunConfig{};
  c.primes_plucker = {4};
  CHECK_THROWS_AS(validate(c), Error);
  c = RunConfig{};
  c.primes_segre = {};
  CHECK_THROWS_AS(validate(c), Error);
  CHECK(parse_primes("5, 7") == std::vector<std::uint32_t>{5, 7});
  CHECK_THROWS_AS(parse_primes("5,,7"), Error);
  CHECK_THROWS_AS(parse_primes("x"), Error);
  CHECK(parse_format("markdown") == OutputFormat::kMarkdown);
  CHECK_THROWS_AS(parse_format("xml"), Error);
  CHECK_THROWS_AS(parse_mode("rho"), Error);
}

TEST_CASE("report serialization round trip") {
  CheckReport r;
  r.check_id = "x";
  r.subject = "y";
  r.status = Status::kIndeterminate;
  CHECK_THROWS(to_json(r, false));
  r.notes = "because";
  const auto j = to_json(r, false);
  CHECK_FALSE(j.contains("duration_ms"));
  CHECK(to_json(r, true).contains("duration_ms"));
  const CheckReport back = report_from_json(j);
  CHECK(back.status == Status::kIndeterminate);
  CHECK(back.notes == "because");
}

TEST_CASE("run_all is deterministic and filtered by rank") {
  const RunConfig c = small_config();
  const Bundle a = run_all(c);
  const Bundle b = run_all(c);
  CHECK(a.json.dump() == b.json.dump());
  CHECK(a.exit_code == 0);
  CHECK(a.json["config"]["seed"] == c.seed);
  std::size_t fails = 0;
  for (const auto& r : a.json["reports"]) {
    CHECK(r["subject"].get<std::string>().rfind("E", 0) != 0);
    fails += r["status"] == "fail";
  }
  CHECK(a.json["summary"]["fail"] == fails);
  CHECK(a.json.dump().find("\"status\":\"fail\"") == std::string::npos);
}

TEST_CASE("markdown carries the same statuses as the JSON bundle") {
  const Bundle a = run_all(small_config());
  const std::string md = bundle_markdown(a.json);
  std::istringstream in(md);
  std::string line;
  std::vector<std::string> statuses;
  while (std::getline(in, line)) {
    if (line.rfind("| ", 0) != 0 || line.rfind("| check", 0) == 0) continue;
    std::vector<std::string> cells;
    std::string cell;
    for (std::size_t i = 1; i < line.size(); ++i) {
      if (line[i] == '|' && line[i - 1] != '\\') {
        cells.push_back(cell);
        cell.clear();
      } else {
        cell += line[i];
      }
    }
    REQUIRE(cells.size() >= 3);
    statuses.push_back(cells[2].substr(1, cells[2].size() - 2));
  }
  REQUIRE(statuses.size() == a.json["reports"].size());
  for (std::size_t k = 0; k < statuses.size(); ++k) CHECK(statuses[k] == a.json["reports"][k]["status"]);
}

TEST_CASE("single checks") {
  CHECK(catalog_report(parse_pair_id("E6:a6/a5")).status == Status::kPass);
  CHECK(degeneracy_report(parse_pair_id("E6:a6/a5"), KernelMode::kTau).status == Status::kPass);
  const CheckReport v = vmrt_chain_report(7);
  CHECK(v.status == Status::kPass);
  CHECK(v.data["chain"].size() == 5);
  CHECK(vmrt_chain_report(5).data["expected"][0] == "D5:a5");
  CHECK_THROWS_AS(pluecker_section_report("e1^", {5, 7}), Error);
  CHECK(pluecker_line_report().status == Status::kPass);
  const Bundle b = make_bundle(RunConfig{}, {catalog_report(parse_pair_id("B4:a1/a2"))});
  CHECK(b.json["summary"]["pass"] == 1);
}
