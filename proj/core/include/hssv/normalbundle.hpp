#pragma once

// Weights of the normal module of X0 in X and their partition under the
// compact simple directions of the sub Levi. Connectivity is a proxy for
// irreducibility of the summands; it is not a representation-theoretic proof.

#include <optional>
#include <vector>

#include "hssv/hss.hpp"
#include "hssv/pairs.hpp"
#include "hssv/report.hpp"

namespace hssv {

struct NormalDecomposition {
  WeightSet normal_weights;
  // Partition of normal_weights, components ordered by size, then by their
  // smallest weight.
  std::vector<WeightSet> components;
  // Set when exactly one component has a single weight.
  std::optional<Root> singleton_component;
  // One maximal weight per component (same order as components).
  std::vector<Root> highest_weights;
};

// Ambient noncompact positive roots minus Phi of the sub's.
WeightSet normal_weights(const DeletionPair& pair);

NormalDecomposition levi_components(const DeletionPair& pair);

// Pass iff there are exactly two components with distinct highest weights and
// distinct sizes; indeterminate with the partition otherwise (hyperquadrics).
CheckReport summands_distinct(const DeletionPair& pair);

}  // namespace hssv
