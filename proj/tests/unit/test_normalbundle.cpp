#include <doctest.h>

#include "../common/oracles.hpp"
#include "hssv/normalbundle.hpp"

using namespace hssv;

TEST_CASE("normal bundle partition for the maximal pairs") {
  struct Row {
    const char* id;
    std::vector<std::size_t> sizes;
  };
  for (const Row& row : {Row{"D5:a5/a3", {1, 3}}, Row{"E6:a6/a5", {1, 5}}, Row{"E7:a7/a6", {1, 10}}}) {
    CAPTURE(row.id);
    const auto p = parse_pair_id(row.id);
    const auto phi = root_correspondence(p);
    const auto normal = normal_weights(p);
    CHECK(normal.size() == hss_dimension(p.ambient()) - hss_dimension(p.sub()));
    std::vector<oracle::Coeffs> ws;
    for (const auto& w : normal) {
      CHECK_FALSE(phi.image().contains(w));
      ws.push_back(w.coeffs());
    }
    std::vector<oracle::Coeffs> steps;
    for (std::size_t i = 0; i < phi.on_simple().size(); ++i) {
      if (i != p.sub_gamma0()) steps.push_back(phi.on_simple()[i].coeffs());
    }
    CHECK(oracle::component_sizes(ws, steps) == row.sizes);

    const auto dec = levi_components(p);
    REQUIRE(dec.components.size() == 2);
    CHECK(dec.components[0].size() == row.sizes[0]);
    CHECK(dec.components[1].size() == row.sizes[1]);
    CHECK(dec.highest_weights[0] != dec.highest_weights[1]);
    CHECK(summands_distinct(p).status == Status::kPass);
  }
}

TEST_CASE("hyperquadric ambients are indeterminate with an explanation") {
  for (const char* id : {"B4:a1/a2", "D4:a4/a2", "D5:a1/a2"}) {
    CAPTURE(id);
    const CheckReport r = summands_distinct(parse_pair_id(id));
    CHECK(r.status == Status::kIndeterminate);
    CHECK_FALSE(r.notes.empty());
  }
}
