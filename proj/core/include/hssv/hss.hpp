#pragma once

// Weight combinatorics of compact Hermitian symmetric spaces G/P given by a
// cominuscule marked diagram (D, gamma).

#include <cstddef>
#include <vector>

#include "hssv/rootsys.hpp"

namespace hssv {

// Sorted set of roots of one root system. The zero weight is never stored.
class WeightSet {
 public:
  WeightSet() = default;
  explicit WeightSet(RootSystemPtr rs) : rs_(std::move(rs)) {}
  WeightSet(RootSystemPtr rs, const std::vector<Root>& weights);

  // Throws kDomain if `r` is not a root of the system.
  void insert(const Root& r);
  bool contains(const Root& r) const;
  std::size_t size() const { return w_.size(); }
  bool empty() const { return w_.empty(); }
  const std::vector<Root>& weights() const { return w_; }
  auto begin() const { return w_.begin(); }
  auto end() const { return w_.end(); }
  const RootSystem& root_system() const { return *rs_; }
  const RootSystemPtr& root_system_ptr() const { return rs_; }

  bool operator==(const WeightSet& other) const { return w_ == other.w_; }

 private:
  RootSystemPtr rs_;
  std::vector<Root> w_;
};

// Weights of an affinized tangent space: root directions plus the radial
// direction of the cone, which is carried as a flag instead of a zero root.
struct TangentSpace {
  WeightSet weights;
  bool radial = false;

  std::size_t dimension() const { return weights.size() + (radial ? 1 : 0); }
};

// {beta in positive roots : coefficient of the component's mark is 1}. Every
// component must carry exactly one mark. The size is dim G/P.
WeightSet noncompact_positive_roots(const MarkedDiagram& md);
std::size_t hss_dimension(const MarkedDiagram& md);

// Affine tangent space of the VMRT at E_gamma:
// {mu noncompact positive : mu - gamma is a root}, plus the radial gamma.
// Requires a single mark.
TangentSpace psi_gamma(const MarkedDiagram& md);

// Marked diagram of the VMRT: remove gamma and mark its former neighbours.
// Requires an irreducible marked diagram; returns the empty marked diagram
// when nothing survives (the VMRT of P^1).
MarkedDiagram vmrt_diagram(const MarkedDiagram& md);

// start, vmrt(start), vmrt(vmrt(start)), ... with `steps` applications.
// Stops early at a diagram that is not irreducible.
std::vector<MarkedDiagram> vmrt_chain(const MarkedDiagram& start, std::size_t steps);

}  // namespace hssv
