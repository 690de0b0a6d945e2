#include "hssv/sff.hpp"

#include <algorithm>

namespace hssv {

std::optional<SffTerm> sff_value(const TangentArg& nu, const TangentArg& nu2, const TangentSpace& psi,
                                 const Root& gamma, const ChevalleyTable& table) {
  for (const TangentArg* a : {&nu, &nu2}) {
    if (a->is_radial()) {
      if (!psi.radial) throw Error(ErrorCode::kDomain, "radial", "tangent space has no radial direction");
    } else if (!psi.weights.contains(a->root())) {
      throw Error(ErrorCode::kDomain, a->root().to_string(table.root_system().diagram()),
                  "argument is not a weight of the VMRT tangent space");
    }
  }
  if (nu.is_radial() || nu2.is_radial()) return std::nullopt;

  const LieElement inner = bracket(LieElement::e(nu2.root() - gamma), LieElement::e(gamma), table);
  const LieElement outer = bracket(LieElement::e(nu.root() - gamma), inner, table);
  if (outer.is_zero()) return std::nullopt;

  const Root w = nu.root() + nu2.root() - gamma;
  const long c = outer.coefficient(BasisSymbol::root_vector(w));
  if (c == 0 || outer.terms().size() != 1) {
    throw Error(ErrorCode::kDomain, w.to_string(table.root_system().diagram()),
                "double bracket is not a single root vector");
  }
  // Reduce modulo the affine tangent space.
  if (w == gamma || psi.weights.contains(w)) return std::nullopt;
  return SffTerm{c, w};
}

SffContext::SffContext(const DeletionPair& pair)
    : pair_(pair), phi_(root_correspondence(pair)), table_(shared_table(pair.ambient().root_system_ptr())) {
  const RootSystem& rs = pair.ambient().root_system();
  gamma_ = rs.simple_root(pair.gamma());
  ambient_tangent_ = psi_gamma(pair.ambient());

  const TangentSpace sub_psi = psi_gamma(pair.sub());
  const Root sub_g0 = pair.sub().root_system().simple_root(pair.sub_gamma0());
  sub_tangent_ = TangentSpace{WeightSet(pair.ambient().root_system_ptr()), true};
  for (const Root& mu : sub_psi.weights) {
    const Root kappa = pair.embed(mu - sub_g0);
    sub_tangent_.weights.insert(gamma_ + pair.chain_sum() + kappa);
  }
  for (const Root& w : sub_tangent_.weights) {
    if (!ambient_tangent_.weights.contains(w)) {
      throw Error(ErrorCode::kCorrespondence, w.to_string(rs.diagram()),
                  "sub VMRT tangent weight outside the ambient VMRT tangent space");
    }
  }
}

namespace {

template <class Counts>
KernelReport kernel_by(const SffContext& ctx, Counts counts) {
  KernelReport out;
  out.kernel = TangentSpace{WeightSet(ctx.pair().ambient().root_system_ptr()), true};
  for (const Root& nu : ctx.ambient_tangent().weights) {
    bool in_kernel = true;
    for (const Root& nu2 : ctx.sub_tangent().weights) {
      auto v = ctx.value(TangentArg::weight(nu), TangentArg::weight(nu2));
      if (v && counts(*v)) {
        in_kernel = false;
        break;
      }
    }
    if (in_kernel) out.kernel.weights.insert(nu);
  }
  return out;
}

}  // namespace

KernelReport kernel_sigma(const SffContext& ctx) {
  KernelReport out = kernel_by(ctx, [](const SffTerm&) { return true; });
  out.witnesses = out.kernel.weights.weights();
  out.strict = !out.witnesses.empty();
  return out;
}

KernelReport kernel_tau(const SffContext& ctx) {
  const WeightSet& x0 = ctx.x0_tangent();
  KernelReport out = kernel_by(ctx, [&](const SffTerm& t) { return !x0.contains(t.weight); });
  const WeightSet& sub = ctx.sub_tangent().weights;
  bool contains_sub = true;
  for (const Root& w : sub) contains_sub = contains_sub && out.kernel.weights.contains(w);
  for (const Root& w : out.kernel.weights) {
    if (!sub.contains(w)) out.witnesses.push_back(w);
  }
  out.strict = contains_sub && !out.witnesses.empty();
  return out;
}

CheckReport verify_infinity_locus(const DeletionPair& pair) {
  CheckReport r;
  r.check_id = "infinity_locus";
  r.subject = pair.id();

  const MarkedDiagram& amb = pair.ambient();
  const Family fam = amb.diagram().components().front().family;
  if (fam == Family::A || fam == Family::C) {
    r.status = Status::kSkipped;
    r.notes = "ambient of type A or C lies outside the lemma's hypothesis";
    return r;
  }

  const RootSystem& rs = amb.root_system();
  const DynkinDiagram& d = rs.diagram();
  const RootSystem& srs = pair.sub().root_system();
  const DynkinDiagram& sd = srs.diagram();
  const RootCorrespondence phi = root_correspondence(pair);
  const NodeIndex g0 = pair.gamma0();
  const NodeIndex sg0 = pair.sub_gamma0();
  const Root gamma = rs.simple_root(pair.gamma());
  const Root sub_gamma0 = srs.simple_root(sg0);
  const auto sub_neighbors = sd.neighbors(sg0);

  int count_a = 0;
  int count_b = 0;
  WeightSet lhs(amb.root_system_ptr());
  for (const Root& beta : noncompact_positive_roots(pair.sub())) {
    const Root img = phi.apply(beta);
    const Root refl = rs.reflect(g0, img);
    lhs.insert(refl);
    if (beta == sub_gamma0) continue;  // the radial root, covered by (c)
    const int p = srs.cartan_pairing(beta, sub_gamma0);
    auto witness = [&](std::string_view what) {
      r.add_witness({{"check", what},
                     {"beta", weight_json(beta, sd)},
                     {"phi_beta", weight_json(img, d)},
                     {"reflected", weight_json(refl, d)}});
    };
    if (p == 1) {
      ++count_a;
      // beta = gamma0 + theta + Sigma with theta the single neighbour in the
      // support and Sigma supported away from gamma0 and its neighbours.
      int touched = 0;
      bool unit = true;
      for (NodeIndex nb : sub_neighbors) {
        if (beta[nb] != 0) {
          ++touched;
          unit = unit && beta[nb] == 1;
        }
      }
      const bool shape = beta[sg0] == 1 && touched == 1 && unit;
      if (!shape) {
        r.fail("(a) " + beta.to_string(sd) + " is not gamma0 + theta + Sigma");
        witness("a.shape");
      }
      if (refl != img) {
        r.fail("(a) s_gamma0 moves Phi(" + beta.to_string(sd) + ")");
        witness("a.fixed");
      }
    } else if (p == 0) {
      ++count_b;
      const Root expect = img - rs.simple_root(g0);
      if (refl != expect) {
        r.fail("(b) s_gamma0(Phi(" + beta.to_string(sd) + ")) != Phi(beta) - gamma0");
        witness("b.shift");
      }
      std::optional<int> pg;
      try {
        pg = rs.cartan_pairing(gamma, refl);
      } catch (const Error&) {
      }
      if (!pg || *pg != 1) {
        r.fail("(b) <gamma, s_gamma0(Phi(" + beta.to_string(sd) + "))> != 1");
        witness("b.pairing");
      }
    } else {
      r.fail("<" + beta.to_string(sd) + ", gamma0> = " + std::to_string(p) + " is neither 0 nor 1");
      witness("ab.pairing");
    }
  }

  const Root s_gamma = rs.reflect(g0, gamma);
  if (s_gamma != gamma + rs.simple_root(g0)) {
    r.fail("(c) s_gamma0(gamma) != gamma + gamma0");
    r.add_witness({{"check", "c"}, {"reflected", weight_json(s_gamma, d)}});
  }

  WeightSet rhs(amb.root_system_ptr());
  for (const Root& beta : noncompact_positive_roots(amb)) {
    if (rs.cartan_pairing(beta, gamma) == 1) rhs.insert(beta);
  }
  if (!(lhs == rhs)) {
    r.fail("(d) s_gamma0(Phi(T X0)) differs from {beta : <beta,gamma> = 1}");
    for (const Root& w : lhs) {
      if (!rhs.contains(w)) r.add_witness({{"check", "d.only_lhs"}, {"weight", weight_json(w, d)}});
    }
    for (const Root& w : rhs) {
      if (!lhs.contains(w)) r.add_witness({{"check", "d.only_rhs"}, {"weight", weight_json(w, d)}});
    }
  }

  // The lemma concerns the maximal pair cut out by the infinity locus; for
  // refinable pairs the identities are evaluated but not held against them.
  const MaximalityVerdict mv = is_maximal(pair);
  r.data["maximal"] = mv.maximal;
  r.data["identities_hold"] = r.status == Status::kPass;
  if (!mv.maximal) {
    r.status = Status::kSkipped;
    r.append_note(std::string("not a maximal pair; identities ") +
                  (r.data["identities_hold"].get<bool>() ? "hold" : "fail") + " here");
  }
  r.data["case_a_roots"] = count_a;
  r.data["case_b_roots"] = count_b;
  r.data["lhs_size"] = lhs.size();
  r.data["rhs_size"] = rhs.size();
  nlohmann::json ws = nlohmann::json::array();
  for (const Root& w : rhs) ws.push_back(weight_json(w, d));
  r.data["rhs_weights"] = ws;
  return r;
}

}  // namespace hssv
