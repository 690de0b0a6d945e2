#include <doctest.h>

#include "../common/oracles.hpp"
#include "hssv/pairs.hpp"

using namespace hssv;

namespace {

char family_of(const std::string& id) { return id[0]; }
int rank_of(const std::string& id) { return std::stoi(id.substr(1, id.find(':') - 1)); }

}  // namespace

TEST_CASE("pair ids") {
  const auto p = parse_pair_id("E7:a7/a6");
  CHECK(p.name() == "(E6/P6 ⊂ E7/P7)");
  CHECK(p.id() == "E7:a7/a6");
  CHECK(parse_pair_id("B4:a1/a2").name() == "(Q^5 ⊂ Q^7)");
  CHECK(parse_pair_id("D5:a5/a3").sub().canonical_name() == "A4:a2");

  auto code = [](const char* id) {
    try {
      parse_pair_id(id);
    } catch (const Error& e) {
      return e.code();
    }
    return ErrorCode::kConfig;
  };
  CHECK(code("E7:a6/a5") == ErrorCode::kNonCominuscule);
  CHECK(code("Q7:a1/a2") == ErrorCode::kParse);
  CHECK(code("E7:a7/a7") == ErrorCode::kInvalidChain);
  CHECK(code("E7:a7") == ErrorCode::kParse);
}

TEST_CASE("catalog rows") {
  std::set<std::string> ids;
  for (const auto& e : catalog(7)) ids.insert(e.pair.id());
  for (const char* want : {"B4:a1/a2", "B4:a1/a3", "D5:a5/a3", "D5:a1/a2", "D5:a1/a3", "E6:a6/a5", "E6:a6/a4",
                           "E7:a7/a6", "E7:a7/a5", "E7:a7/a4"}) {
    CHECK(ids.count(want) == 1);
  }
  for (const auto& e : catalog(5)) CHECK(rank_of(e.pair.id()) <= 5);
  CHECK_THROWS_AS(catalog(3), Error);
}

TEST_CASE("root correspondence invariants against the oracle form") {
  for (const auto& e : catalog(7)) {
    const DeletionPair& p = e.pair;
    CAPTURE(p.id());
    const std::string id = p.id();
    const auto g = oracle::gram(family_of(id), rank_of(id));
    const auto phi = root_correspondence(p);
    const auto& sub_rs = *p.sub().root_system_ptr();
    const std::size_t n0 = sub_rs.rank();
    // Inner products of the images equal the induced sub form.
    for (std::size_t i = 0; i < n0; ++i) {
      for (std::size_t j = 0; j < n0; ++j) {
        CHECK(oracle::form(g, phi.on_simple()[i].coeffs(), phi.on_simple()[j].coeffs()) ==
              g[p.to_ambient(i)][p.to_ambient(j)]);
      }
    }
    CHECK(phi.on_simple()[p.sub_gamma0()] == p.ambient().root_system_ptr()->simple_root(p.gamma()));
    // Additive extension over the sub's noncompact roots lands injectively in the ambient's.
    const auto amb = oracle::positive_roots(g);
    const int mark = static_cast<int>(p.gamma());
    std::set<oracle::Coeffs> images;
    std::size_t count = 0;
    for (const auto& r : sub_rs.positive_roots()) {
      if (r[p.sub_gamma0()] != 1) continue;
      oracle::Coeffs img(g.size(), 0);
      for (std::size_t i = 0; i < n0; ++i) img = oracle::add(img, phi.on_simple()[i].coeffs(), r[i]);
      CHECK(amb.count(img) == 1);
      CHECK(img[mark] == 1);
      CHECK(phi.apply(r).coeffs() == img);
      images.insert(img);
      ++count;
    }
    CHECK(images.size() == count);
    CHECK(phi.image().size() == count);
  }
}

TEST_CASE("chain sum") {
  const auto p = parse_pair_id("E7:a7/a4");
  CHECK(p.chain_sum().coeffs() == std::vector<int>{0, 0, 0, 1, 1, 1, 0});
  CHECK(p.chain().size() == 3);
}

TEST_CASE("maximality") {
  CHECK(is_maximal(parse_pair_id("E7:a7/a6")).maximal);
  CHECK(is_maximal(parse_pair_id("E6:a6/a5")).maximal);
  CHECK(is_maximal(parse_pair_id("D5:a5/a3")).maximal);
  const auto v = is_maximal(parse_pair_id("E6:a6/a4"));
  CHECK_FALSE(v.maximal);
  REQUIRE(v.refinement.size() == 2);
  CHECK(v.refinement[0].id() == "E6:a6/a5");
  const auto w = is_maximal(parse_pair_id("E7:a7/a4"));
  CHECK_FALSE(w.maximal);
  CHECK(w.refinement.size() == 3);
}
