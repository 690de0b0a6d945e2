#include <doctest.h>

#include "../common/oracles.hpp"
#include "hssv/sff.hpp"

using namespace hssv;

namespace {

// Kernel weights by direct double brackets with the generic bracket routine.
// modulo(w) decides whether a weight vanishes in the quotient.
template <class Modulo>
std::set<Root> kernel_oracle(const SffContext& ctx, Modulo modulo) {
  const auto& t = ctx.table();
  const Root& g = ctx.gamma();
  std::set<Root> out;
  for (const auto& v : ctx.ambient_tangent().weights) {
    bool all_zero = true;
    for (const auto& w : ctx.sub_tangent().weights) {
      const LieElement inner = bracket(LieElement::e(w - g), LieElement::e(g), t);
      const LieElement x = bracket(LieElement::e(v - g), inner, t);
      for (const auto& [sym, c] : x.terms()) {
        if (c != 0 && !(sym.kind == BasisSymbol::Kind::kRoot && modulo(sym.root))) all_zero = false;
      }
    }
    if (all_zero) out.insert(v);
  }
  return out;
}

std::set<Root> as_set(const WeightSet& w) { return {w.begin(), w.end()}; }

}  // namespace

TEST_CASE("second fundamental form values") {
  const auto p = parse_pair_id("E7:a7/a6");
  const SffContext ctx(p);
  const auto& psi = ctx.ambient_tangent();
  // Radial arguments vanish.
  CHECK_FALSE(ctx.value(TangentArg::radial(), TangentArg::weight(psi.weights.weights().front())).has_value());
  // Symmetric in its arguments.
  for (const auto& a : psi.weights) {
    for (const auto& b : psi.weights) {
      const auto x = ctx.value(TangentArg::weight(a), TangentArg::weight(b));
      const auto y = ctx.value(TangentArg::weight(b), TangentArg::weight(a));
      REQUIRE(x.has_value() == y.has_value());
      if (x) {
        CHECK(x->weight == a + b - ctx.gamma());
        CHECK(x->coefficient == y->coefficient);
      }
    }
  }
  CHECK_THROWS_AS(ctx.value(TangentArg::weight(ctx.gamma()), TangentArg::radial()), Error);
}

TEST_CASE("sub tangent space is the image of the sub VMRT tangent") {
  for (const char* id : {"D5:a5/a3", "E6:a6/a5", "E7:a7/a6", "B5:a1/a3", "E7:a7/a4"}) {
    CAPTURE(id);
    const auto p = parse_pair_id(id);
    const SffContext ctx(p);
    CHECK(ctx.sub_tangent().weights.size() == psi_gamma(p.sub()).weights.size());
    for (const auto& w : ctx.sub_tangent().weights) CHECK(ctx.ambient_tangent().weights.contains(w));
  }
}

TEST_CASE("sigma and tau kernels of the maximal pairs") {
  struct Row {
    const char* id;
    std::vector<int> witness;
  };
  for (const Row& row : {Row{"D5:a5/a3", {0, 0, 1, 0, 1}}, Row{"E6:a6/a5", {0, 0, 0, 0, 1, 1}},
                         Row{"E7:a7/a6", {0, 0, 0, 0, 0, 1, 1}}}) {
    CAPTURE(row.id);
    const auto p = parse_pair_id(row.id);
    const SffContext ctx(p);
    const auto& tangent = ctx.ambient_tangent().weights;
    auto in_tangent = [&](const Root& r) { return r == ctx.gamma() || tangent.contains(r); };

    const KernelReport s = kernel_sigma(ctx);
    CHECK(s.strict);
    CHECK(as_set(s.kernel.weights) == kernel_oracle(ctx, in_tangent));
    CHECK(std::find(s.witnesses.begin(), s.witnesses.end(), Root(row.witness)) != s.witnesses.end());

    const KernelReport t = kernel_tau(ctx);
    auto in_quotient = [&](const Root& r) { return in_tangent(r) || ctx.x0_tangent().contains(r); };
    CHECK(as_set(t.kernel.weights) == kernel_oracle(ctx, in_quotient));
    CHECK(t.strict);
    for (const auto& w : ctx.sub_tangent().weights) CHECK(t.kernel.weights.contains(w));
    CHECK(t.kernel.weights.size() > ctx.sub_tangent().weights.size());
    CHECK(t.kernel.radial);
  }
}

TEST_CASE("infinity locus identities for the maximal pairs") {
  struct Row {
    const char* id;
    char fam;
    int n;
    std::size_t size;
  };
  for (const Row& row : {Row{"D5:a5/a3", 'D', 5, 6}, Row{"E6:a6/a5", 'E', 6, 10}, Row{"E7:a7/a6", 'E', 7, 16}}) {
    CAPTURE(row.id);
    const auto p = parse_pair_id(row.id);
    const CheckReport r = verify_infinity_locus(p);
    CHECK(r.status == Status::kPass);
    // Both sides enumerated with the oracle form.
    const auto g = oracle::gram(row.fam, row.n);
    const int mark = static_cast<int>(p.gamma());
    const auto gamma = oracle::simple(row.n, mark);
    const auto g0 = oracle::simple(row.n, static_cast<int>(p.gamma0()));
    std::set<oracle::Coeffs> lhs, rhs;
    const auto corr = root_correspondence(p);
    for (const auto& x : corr.image()) lhs.insert(oracle::reflect(g, g0, x.coeffs()));
    for (const auto& b : oracle::positive_roots(g)) {
      if (b[mark] == 1 && oracle::pairing(g, b, gamma) == 1) rhs.insert(b);
    }
    CHECK(lhs == rhs);
    CHECK(lhs.size() == row.size);
    CHECK(r.data["lhs_size"] == row.size);
  }
}

TEST_CASE("infinity locus is skipped where it does not apply") {
  CHECK(verify_infinity_locus(parse_pair_id("E7:a7/a4")).status == Status::kSkipped);
}
