#include <doctest.h>

#include <set>

#include "../common/oracles.hpp"
#include "hssv/error.hpp"
#include "hssv/rootsys.hpp"

using namespace hssv;

namespace {

std::set<oracle::Coeffs> library_roots(const RootSystem& rs) {
  std::set<oracle::Coeffs> out;
  for (const auto& r : rs.positive_roots()) out.insert(r.coeffs());
  return out;
}

}  // namespace

TEST_CASE("positive roots agree with the string-closure oracle") {
  const std::vector<std::pair<char, int>> types = {{'A', 1}, {'A', 4}, {'B', 2}, {'B', 4}, {'C', 3}, {'C', 4},
                                                   {'D', 4}, {'D', 5}, {'E', 6}, {'E', 7}, {'E', 8}, {'F', 4},
                                                   {'G', 2}};
  for (const auto& [fam, n] : types) {
    const std::string lit = std::string(1, fam) + std::to_string(n);
    CAPTURE(lit);
    const auto rs = build_root_system(DynkinDiagram::parse(lit));
    CHECK(library_roots(*rs) == oracle::positive_roots(oracle::gram(fam, n)));
  }
}

TEST_CASE("positive root counts") {
  CHECK(build_root_system(DynkinDiagram::parse("A4"))->positive_roots().size() == 10);
  CHECK(build_root_system(DynkinDiagram::parse("B4"))->positive_roots().size() == 16);
  CHECK(build_root_system(DynkinDiagram::parse("D5"))->positive_roots().size() == 20);
  CHECK(build_root_system(DynkinDiagram::parse("E6"))->positive_roots().size() == 36);
  CHECK(build_root_system(DynkinDiagram::parse("E7"))->positive_roots().size() == 63);
  CHECK(build_root_system(DynkinDiagram::parse("E8"))->positive_roots().size() == 120);
  CHECK(classical_positive_root_count(Family::D, 6) == 30);
}

TEST_CASE("inner products follow the Bourbaki Gram matrix") {
  for (const auto& [fam, n] : std::vector<std::pair<char, int>>{{'B', 3}, {'C', 3}, {'F', 4}, {'G', 2}, {'E', 7}}) {
    const std::string lit = std::string(1, fam) + std::to_string(n);
    const auto rs = build_root_system(DynkinDiagram::parse(lit));
    const auto g = oracle::gram(fam, n);
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < n; ++j) {
        CHECK(rs->inner_product(rs->simple_root(i), rs->simple_root(j)) == g[i][j]);
      }
    }
  }
}

TEST_CASE("highest roots and cominuscule nodes") {
  const auto e7 = build_root_system(DynkinDiagram::parse("E7"));
  CHECK(e7->highest_root(0).coeffs() == std::vector<int>{2, 2, 3, 4, 3, 2, 1});
  CHECK(is_cominuscule(*e7, 6));
  CHECK_FALSE(is_cominuscule(*e7, 5));
  const auto e6 = build_root_system(DynkinDiagram::parse("E6"));
  CHECK(is_cominuscule(*e6, 0));
  CHECK(is_cominuscule(*e6, 5));
  const auto b4 = build_root_system(DynkinDiagram::parse("B4"));
  CHECK(is_cominuscule(*b4, 0));
  CHECK_FALSE(is_cominuscule(*b4, 3));
}

TEST_CASE("reflections match the oracle and are involutions") {
  const auto rs = build_root_system(DynkinDiagram::parse("F4"));
  const auto g = oracle::gram('F', 4);
  for (const auto& b : rs->positive_roots()) {
    for (NodeIndex i = 0; i < 4; ++i) {
      const Root s = rs->reflect(i, b);
      CHECK(s.coeffs() == oracle::reflect(g, oracle::simple(4, static_cast<int>(i)), b.coeffs()));
      CHECK(rs->reflect(i, s) == b);
      CHECK(rs->is_root(s));
    }
  }
}

TEST_CASE("cartan pairing orientation") {
  const auto rs = build_root_system(DynkinDiagram::parse("B2"));
  // alpha1 long, alpha2 short.
  CHECK(rs->cartan_pairing(rs->simple_root(0), rs->simple_root(1)) == -2);
  CHECK(rs->cartan_pairing(rs->simple_root(1), rs->simple_root(0)) == -1);
}

TEST_CASE("diagram literals and errors") {
  const auto d = DynkinDiagram::parse("A1+A2");
  CHECK(d.size() == 3);
  CHECK(d.label(2) == "a3");
  CHECK(d.components().size() == 2);
  CHECK_THROWS_AS(DynkinDiagram::parse("X3"), Error);
  CHECK_THROWS_AS(DynkinDiagram::parse("E9"), Error);
  const auto md = MarkedDiagram::parse("A1+A2:a1,a3");
  CHECK(md.marks().size() == 2);
  try {
    MarkedDiagram::parse("E7:a6");
    FAIL("expected an error");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::kNonCominuscule);
  }
  try {
    MarkedDiagram::parse("E7:a9");
    FAIL("expected an error");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::kUnknownLabel);
  }
}
