#include <doctest.h>

#include "../common/oracles.hpp"
#include "hssv/hss.hpp"

using namespace hssv;

namespace {

// Psi by definition: mu in Delta^+_n with mu - gamma a (nonzero) root.
std::set<oracle::Coeffs> psi_oracle(char fam, int n, int mark) {
  const auto roots = oracle::positive_roots(oracle::gram(fam, n));
  const auto gamma = oracle::simple(n, mark);
  std::set<oracle::Coeffs> out;
  for (const auto& mu : roots) {
    if (mu[mark] != 1) continue;
    const auto d = oracle::add(mu, gamma, -1);
    auto neg = d;
    for (auto& x : neg) x = -x;
    if (roots.count(d) || roots.count(neg)) out.insert(mu);
  }
  return out;
}

}  // namespace

TEST_CASE("dimensions of Hermitian symmetric spaces") {
  CHECK(hss_dimension(MarkedDiagram::parse("E7:a7")) == 27);
  CHECK(hss_dimension(MarkedDiagram::parse("E6:a6")) == 16);
  CHECK(hss_dimension(MarkedDiagram::parse("D5:a5")) == 10);
  CHECK(hss_dimension(MarkedDiagram::parse("A4:a2")) == 6);
  CHECK(hss_dimension(MarkedDiagram::parse("B4:a1")) == 7);
  CHECK(hss_dimension(MarkedDiagram::parse("C3:a3")) == 6);
  CHECK(hss_dimension(MarkedDiagram::parse("D5:a1")) == 8);
  CHECK(hss_dimension(MarkedDiagram::parse("A1+A2:a1,a3")) == 3);
}

TEST_CASE("noncompact roots have coefficient one at the mark") {
  const auto md = MarkedDiagram::parse("E7:a7");
  const auto w = noncompact_positive_roots(md);
  for (const auto& r : w) CHECK(r[6] == 1);
  CHECK(w.size() == 27);
}

TEST_CASE("psi agrees with its definition") {
  for (const auto& [lit, fam, n, mark] : std::vector<std::tuple<std::string, char, int, int>>{
           {"E7:a7", 'E', 7, 6}, {"E6:a6", 'E', 6, 5}, {"D5:a5", 'D', 5, 4}, {"A4:a2", 'A', 4, 1}, {"B4:a1", 'B', 4, 0}}) {
    CAPTURE(lit);
    const TangentSpace psi = psi_gamma(MarkedDiagram::parse(lit));
    std::set<oracle::Coeffs> got;
    for (const auto& r : psi.weights) got.insert(r.coeffs());
    CHECK(got == psi_oracle(fam, n, mark));
    CHECK(psi.radial);
  }
  CHECK(psi_gamma(MarkedDiagram::parse("E7:a7")).weights.size() == 16);
  CHECK(psi_gamma(MarkedDiagram::parse("E6:a6")).weights.size() == 10);
  CHECK(psi_gamma(MarkedDiagram::parse("D5:a5")).weights.size() == 6);
}

TEST_CASE("VMRT operator") {
  CHECK(vmrt_diagram(MarkedDiagram::parse("E7:a7")).canonical_name() == "E6:a6");
  CHECK(vmrt_diagram(MarkedDiagram::parse("B4:a1")).space_name() == "Q^5");
  CHECK(vmrt_diagram(MarkedDiagram::parse("A4:a2")).canonical_name() == "A1+A2:a1,a2");
  const auto chain = vmrt_chain(MarkedDiagram::parse("E7:a7"), 5);
  std::vector<std::string> names;
  for (const auto& m : chain) names.push_back(m.canonical_name());
  CHECK(names == std::vector<std::string>{"E7:a7", "E6:a6", "D5:a5", "A4:a2", "A1+A2:a1,a2"});
  // The VMRT dimension is |Psi|.
  for (const char* lit : {"E7:a7", "E6:a6", "D5:a5", "B5:a1", "C4:a4"}) {
    const auto md = MarkedDiagram::parse(lit);
    CHECK(hss_dimension(vmrt_diagram(md)) == psi_gamma(md).weights.size());
  }
}

TEST_CASE("weight sets reject non-roots") {
  const auto md = MarkedDiagram::parse("A4:a2");
  WeightSet w(md.root_system_ptr());
  CHECK_THROWS_AS(w.insert(Root({2, 0, 0, 0})), Error);
  w.insert(Root({0, 1, 0, 0}));
  w.insert(Root({0, 1, 0, 0}));
  CHECK(w.size() == 1);
}
