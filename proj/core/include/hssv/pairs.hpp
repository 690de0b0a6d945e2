#pragma once

// Deletion pairs (X0 subset X): the sub diagram is obtained from the ambient
// marked diagram (D, gamma) by removing the chain from gamma towards gamma0
// (gamma0 excluded) and marking gamma0.

#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "hssv/hss.hpp"
#include "hssv/rootsys.hpp"

namespace hssv {

class DeletionPair {
 public:
  // Throws kInvalidChain when the chain has a multiple bond or its removal
  // disconnects the diagram, kInvalidMarking when gamma0 is the mark.
  DeletionPair(MarkedDiagram ambient, NodeIndex gamma0);

  const MarkedDiagram& ambient() const { return ambient_; }
  const MarkedDiagram& sub() const { return sub_; }
  NodeIndex gamma() const { return ambient_.mark(); }
  NodeIndex gamma0() const { return gamma0_; }
  NodeIndex sub_gamma0() const { return sub_.mark(); }

  // Removed nodes, ambient indices, starting at gamma.
  const std::vector<NodeIndex>& chain() const { return chain_; }
  // Sum of the simple roots on the path from gamma to gamma0, gamma0
  // included and gamma excluded; ambient coordinates.
  const Root& chain_sum() const { return chain_sum_; }

  NodeIndex to_ambient(NodeIndex sub_node) const { return to_ambient_.at(sub_node); }
  // Coordinate inclusion of a sub root into the ambient lattice.
  Root embed(const Root& sub_root) const;

  // "E7:a7/a6"
  std::string id() const;
  // "(E6/P6 ⊂ E7/P7)"
  std::string name() const;

 private:
  MarkedDiagram ambient_;
  MarkedDiagram sub_;
  NodeIndex gamma0_;
  std::vector<NodeIndex> chain_;
  Root chain_sum_;
  std::vector<NodeIndex> to_ambient_;
};

// Parses "E7:a7/a6" (ambient marked-diagram literal, then the gamma0 label).
DeletionPair parse_pair_id(std::string_view id);

struct CatalogEntry {
  std::string family;
  DeletionPair pair;
};

// All catalog pairs with ambient rank at most max_rank (>= 4), in family
// order and then by rank.
std::vector<CatalogEntry> catalog(int max_rank);

// The additive map Phi from sub roots to ambient roots:
// gamma0 -> gamma, beta -> beta + Gamma for beta adjacent to gamma0 in the
// sub diagram, beta -> beta otherwise.
class RootCorrespondence {
 public:
  const DeletionPair& pair() const { return pair_; }
  // Phi(alpha_i) for each sub node i.
  const std::vector<Root>& on_simple() const { return simple_images_; }
  Root apply(const Root& sub_root) const;
  // Phi of the sub's noncompact positive roots.
  const WeightSet& image() const { return image_; }

 private:
  friend RootCorrespondence root_correspondence(const DeletionPair& pair);
  explicit RootCorrespondence(const DeletionPair& pair) : pair_(pair) {}

  DeletionPair pair_;
  std::vector<Root> simple_images_;
  WeightSet image_;
};

// Builds Phi and verifies that it preserves inner products, sends the sub's
// noncompact positive roots into the ambient ones, and is injective there.
// Throws kCorrespondence naming the offending root.
RootCorrespondence root_correspondence(const DeletionPair& pair);

struct MaximalityVerdict {
  bool maximal = true;
  // Maximal deletion steps X0 = Y0 ⊂ Y1 ⊂ ... ⊂ Yk = X, listed from the
  // ambient side; a single entry (the pair itself) when maximal.
  std::vector<DeletionPair> refinement;
};

// Searches every intermediate gamma1 for X0 ⊂ X1 ⊂ X with both steps
// deletion pairs; refines recursively to maximal steps.
MaximalityVerdict is_maximal(const DeletionPair& pair);

}  // namespace hssv
