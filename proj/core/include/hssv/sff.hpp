#pragma once

// Second fundamental form of the VMRT C_x(X) ⊂ P(T_x X) at the base point
// E_gamma, evaluated on weight vectors, and the kernels used by the
// degeneracy checks of a deletion pair.

#include <memory>
#include <optional>
#include <vector>

#include "hssv/chevalley.hpp"
#include "hssv/hss.hpp"
#include "hssv/pairs.hpp"
#include "hssv/report.hpp"

namespace hssv {

// A weight vector of the affine tangent space: a root or the radial direction.
class TangentArg {
 public:
  static TangentArg radial() { return TangentArg(); }
  static TangentArg weight(Root r) { return TangentArg(std::move(r)); }
  bool is_radial() const { return !root_; }
  const Root& root() const { return *root_; }

 private:
  TangentArg() = default;
  explicit TangentArg(Root r) : root_(std::move(r)) {}
  std::optional<Root> root_;
};

// c * E_weight with c != 0.
struct SffTerm {
  long coefficient = 0;
  Root weight;
};

// II(E_nu, E_nu') = [E_{nu-gamma}, [E_{nu'-gamma}, E_gamma]] modulo the
// affine tangent space and the isotropy algebra. nullopt means zero.
// Throws kDomain when an argument lies outside psi.
std::optional<SffTerm> sff_value(const TangentArg& nu, const TangentArg& nu2, const TangentSpace& psi,
                                 const Root& gamma, const ChevalleyTable& table);

// Everything the degeneracy checks of one pair need, computed once.
class SffContext {
 public:
  explicit SffContext(const DeletionPair& pair);

  const DeletionPair& pair() const { return pair_; }
  const RootCorrespondence& correspondence() const { return phi_; }
  const ChevalleyTable& table() const { return *table_; }
  const Root& gamma() const { return gamma_; }
  // Psi_gamma of the ambient.
  const TangentSpace& ambient_tangent() const { return ambient_tangent_; }
  // Root-space image of the sub's affine VMRT tangent: gamma + Gamma + kappa
  // over kappa in {0} ∪ Delta^+_0 with <kappa, gamma0> = -1. Radial included.
  const TangentSpace& sub_tangent() const { return sub_tangent_; }
  // Phi(T_x X0): the sub's noncompact positive roots in ambient coordinates.
  const WeightSet& x0_tangent() const { return phi_.image(); }

  std::optional<SffTerm> value(const TangentArg& nu, const TangentArg& nu2) const {
    return sff_value(nu, nu2, ambient_tangent_, gamma_, *table_);
  }

 private:
  DeletionPair pair_;
  RootCorrespondence phi_;
  std::shared_ptr<const ChevalleyTable> table_;
  Root gamma_;
  TangentSpace ambient_tangent_;
  TangentSpace sub_tangent_;
};

struct KernelReport {
  TangentSpace kernel;
  bool strict = false;
  // Kernel weights outside the sub tangent space.
  std::vector<Root> witnesses;
};

// {v in T : II(v, w) = 0 for all w in the sub tangent}; strict when it has
// a root weight.
KernelReport kernel_sigma(const SffContext& ctx);
// {v in T : II(v, w) in T_x X0 for all w in the sub tangent}; strict when it
// is strictly larger than the sub tangent.
KernelReport kernel_tau(const SffContext& ctx);

// Root-theoretic identities of the infinity locus of the pair.
// Pairs with an ambient of type A or C are skipped.
CheckReport verify_infinity_locus(const DeletionPair& pair);

}  // namespace hssv
