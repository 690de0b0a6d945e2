#include <doctest.h>

#include <cstdlib>

#include "hssv/chevalley.hpp"

using namespace hssv;

namespace {

std::vector<LieElement> full_basis(const ChevalleyTable& t) {
  std::vector<LieElement> b;
  for (std::size_t k = 0; k < t.num_roots(); ++k) b.push_back(LieElement::e(t.root(k)));
  for (NodeIndex i = 0; i < t.root_system().rank(); ++i) b.push_back(LieElement::h(i));
  return b;
}

}  // namespace

TEST_CASE("Jacobi identity on every basis triple of small systems") {
  for (const char* lit : {"A2", "B2", "G2", "A3", "C3"}) {
    CAPTURE(lit);
    const auto t = build_table(build_root_system(DynkinDiagram::parse(lit)));
    const auto basis = full_basis(t);
    std::size_t bad = 0;
    for (const auto& x : basis) {
      for (const auto& y : basis) {
        for (const auto& z : basis) {
          const auto s = bracket(x, bracket(y, z, t), t) + bracket(y, bracket(z, x, t), t) +
                         bracket(z, bracket(x, y, t), t);
          if (!s.is_zero()) ++bad;
        }
      }
    }
    CHECK(bad == 0);
  }
}

TEST_CASE("structure constants: |N_{a,b}| = p + 1 and sign symmetries") {
  for (const char* lit : {"B3", "F4", "G2", "E6"}) {
    CAPTURE(lit);
    const auto t = build_table(build_root_system(DynkinDiagram::parse(lit)));
    for (std::size_t a = 0; a < t.num_roots(); ++a) {
      for (std::size_t b = 0; b < t.num_roots(); ++b) {
        const Root& ra = t.root(a);
        const Root& rb = t.root(b);
        const int n = t.structure_constant(a, b);
        const auto sum = t.root_index(ra + rb);
        if (!sum) {
          CHECK(n == 0);
          continue;
        }
        // p: largest k with rb - k ra a root.
        int p = 0;
        while (t.root_index(rb - (p + 1) * ra)) ++p;
        CHECK(std::abs(n) == p + 1);
        CHECK(t.structure_constant(b, a) == -n);
        CHECK(t.structure_constant(-ra, -rb) == -n);
      }
    }
  }
}

TEST_CASE("brackets with the Cartan part") {
  const auto t = build_table(build_root_system(DynkinDiagram::parse("A2")));
  const Root a1 = t.root_system().simple_root(0);
  const Root a2 = t.root_system().simple_root(1);
  // [h1, e_a2] = <a2, a1> e_a2 = -e_a2.
  CHECK(bracket(LieElement::h(0), LieElement::e(a2), t) == LieElement::e(a2, -1));
  // [e_a, e_-a] = h_a.
  CHECK(bracket(LieElement::e(a1), LieElement::e(-a1), t) == LieElement::h(0));
  CHECK(bracket(LieElement::e(a1 + a2), LieElement::e(-(a1 + a2)), t) == LieElement::h(0) + LieElement::h(1));
  CHECK_THROWS_AS(bracket(LieElement::e(a1 + a1), LieElement::e(a2), t), Error);
}

TEST_CASE("extraspecial pairs carry N = p + 1 > 0") {
  const auto t = build_table(build_root_system(DynkinDiagram::parse("E7")));
  const auto& pos = t.root_system().positive_roots();
  for (std::size_t k = 0; k < pos.size(); ++k) {
    const auto es = t.extraspecial_pair(k);
    if (pos[k].height() == 1) {
      CHECK_FALSE(es.has_value());
      continue;
    }
    REQUIRE(es.has_value());
    CHECK(pos[es->first] + pos[es->second] == pos[k]);
    CHECK(t.structure_constant(pos[es->first], pos[es->second]) > 0);
  }
}

TEST_CASE("shared table is cached per diagram") {
  const auto rs = build_root_system(DynkinDiagram::parse("D5"));
  CHECK(shared_table(rs).get() == shared_table(rs).get());
  CHECK(shared_table(rs)->num_roots() == 40);
}
