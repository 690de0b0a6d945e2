#pragma once

// Root systems of (possibly disconnected) Dynkin diagrams, Weyl reflections,
// cominuscule markings and the chain-deletion operation.
//
// Node labels follow Bourbaki numbering ("a1", "a2", ...). A diagram keeps
// its labels when a sub-diagram is cut out of it, so a node of the E6 inside
// E7 is still called "a5". Root coordinates are always indexed by the node
// position inside the diagram that owns them.

#include <compare>
#include <cstddef>
#include <map>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "hssv/error.hpp"

namespace hssv {

using NodeIndex = std::size_t;

enum class Family : char { A = 'A', B = 'B', C = 'C', D = 'D', E = 'E', F = 'F', G = 'G' };

// A bond between two nodes. For multiplicity 2 or 3 the arrow points from
// `from` (long root) to `to` (short root); simple bonds carry no direction.
struct Bond {
  NodeIndex from = 0;
  NodeIndex to = 0;
  int multiplicity = 1;
};

// Classified connected component. `bourbaki[k]` is the node carrying
// alpha_{k+1} in Bourbaki numbering.
struct ComponentType {
  Family family = Family::A;
  int rank = 0;
  std::vector<NodeIndex> bourbaki;

  std::string name() const;
  // 1-based Bourbaki index of `node`, or 0 if the node is not in this component.
  int bourbaki_index(NodeIndex node) const;
};

class DynkinDiagram;

// Element of the root lattice in simple-root coordinates.
class Root {
 public:
  Root() = default;
  explicit Root(std::vector<int> coeffs) : c_(std::move(coeffs)) {}

  static Root zero(std::size_t rank) { return Root(std::vector<int>(rank, 0)); }
  static Root simple(std::size_t rank, NodeIndex i);

  std::size_t size() const { return c_.size(); }
  int operator[](std::size_t i) const { return c_[i]; }
  const std::vector<int>& coeffs() const { return c_; }

  int height() const;
  bool is_zero() const;
  // Nonzero with all coefficients >= 0.
  bool is_positive() const;
  bool is_negative() const;

  Root operator-() const;
  Root& operator+=(const Root& other);
  Root& operator-=(const Root& other);
  friend Root operator+(Root a, const Root& b) { return a += b; }
  friend Root operator-(Root a, const Root& b) { return a -= b; }
  friend Root operator*(int k, Root a) {
    for (auto& x : a.c_) x *= k;
    return a;
  }

  auto operator<=>(const Root&) const = default;

  // "a5+a6+2a7" using the diagram's labels; "0" for the zero vector.
  std::string to_string(const DynkinDiagram& diagram) const;

 private:
  std::vector<int> c_;
};

class DynkinDiagram {
 public:
  DynkinDiagram() = default;
  // Validates labels and bonds and classifies every connected component.
  // Throws kInvalidDiagram for malformed data and kUnclassifiableDiagram when
  // some component is not of finite type.
  DynkinDiagram(std::vector<std::string> labels, std::vector<Bond> bonds);

  // Connected diagram of the given type labelled a<first_label>, a<first_label+1>, ...
  static DynkinDiagram standard(Family family, int rank, int first_label = 1);
  // "E7", "B4", "A1+A2". Labels are global across components.
  static DynkinDiagram parse(std::string_view literal);

  std::size_t size() const { return labels_.size(); }
  bool empty() const { return labels_.empty(); }
  const std::string& label(NodeIndex i) const { return labels_.at(i); }
  const std::vector<std::string>& labels() const { return labels_; }
  std::optional<NodeIndex> find(std::string_view label) const;
  // Throws kUnknownLabel.
  NodeIndex index_of(std::string_view label) const;

  const std::vector<Bond>& bonds() const { return bonds_; }
  int multiplicity(NodeIndex a, NodeIndex b) const;
  bool adjacent(NodeIndex a, NodeIndex b) const { return multiplicity(a, b) > 0; }
  std::vector<NodeIndex> neighbors(NodeIndex i) const;

  const std::vector<ComponentType>& components() const { return components_; }
  std::size_t component_of(NodeIndex i) const { return component_of_.at(i); }

  // Symmetrized form (alpha_i, alpha_j); short roots have squared length 2.
  int inner(NodeIndex i, NodeIndex j) const { return form_[i * size() + j]; }

  // Sub-diagram on `keep` (in the given order), labels preserved.
  DynkinDiagram induced(std::span<const NodeIndex> keep) const;
  // Node path from a to b inclusive, if both lie in one component.
  std::optional<std::vector<NodeIndex>> path(NodeIndex a, NodeIndex b) const;

  // Type literal in component order, e.g. "E6" or "A2+A1".
  std::string literal() const;
  // Literal with the node labels spelled out, e.g. "B3{a2,a3,a4}".
  std::string describe() const;

 private:
  void classify();
  void build_form();

  std::vector<std::string> labels_;
  std::vector<Bond> bonds_;
  std::vector<int> adjacency_;  // multiplicity matrix
  std::vector<ComponentType> components_;
  std::vector<std::size_t> component_of_;
  std::vector<int> form_;
};

// Positive system of a Dynkin diagram together with the symmetrized form.
// Immutable once built.
class RootSystem {
 public:
  explicit RootSystem(DynkinDiagram diagram);

  const DynkinDiagram& diagram() const { return diagram_; }
  std::size_t rank() const { return diagram_.size(); }

  // Ordered by height, then lexicographically.
  const std::vector<Root>& positive_roots() const { return positive_; }
  std::optional<std::size_t> positive_index(const Root& r) const;
  bool is_positive_root(const Root& r) const { return positive_index(r).has_value(); }
  bool is_root(const Root& r) const;

  Root simple_root(NodeIndex i) const { return Root::simple(rank(), i); }
  long inner_product(const Root& a, const Root& b) const;
  // Highest root of the given connected component.
  const Root& highest_root(std::size_t component) const { return highest_.at(component); }

  // <beta, gamma> = 2 (beta, gamma) / (gamma, gamma). Throws kDomain when
  // gamma is zero or the quotient is not an integer.
  int cartan_pairing(const Root& beta, const Root& gamma) const;
  // s_i(beta) = beta - <beta, alpha_i> alpha_i.
  Root reflect(NodeIndex node, const Root& beta) const;

 private:
  DynkinDiagram diagram_;
  std::vector<Root> positive_;
  std::map<std::vector<int>, std::size_t> index_;
  std::vector<Root> highest_;
};

using RootSystemPtr = std::shared_ptr<const RootSystem>;

RootSystemPtr build_root_system(DynkinDiagram diagram);
int cartan_pairing(const Root& beta, const Root& gamma, const RootSystem& rs);
Root reflect(NodeIndex node, const Root& beta, const RootSystem& rs);

// Classical number of positive roots of a connected type.
std::size_t classical_positive_root_count(Family family, int rank);

// The highest root has coefficient 1 at `node`.
bool is_cominuscule(const RootSystem& rs, NodeIndex node);

// A Dynkin diagram with a set of marked (cominuscule) nodes, at most one per
// component. The default-constructed value is the empty marked diagram,
// the VMRT of P^1.
class MarkedDiagram {
 public:
  MarkedDiagram() = default;
  MarkedDiagram(RootSystemPtr rs, std::vector<NodeIndex> marks);
  // "E7:a7", "A1+A2:a1,a3".
  static MarkedDiagram parse(std::string_view literal);

  bool empty() const { return rs_ == nullptr || rs_->rank() == 0; }
  const RootSystem& root_system() const { return *rs_; }
  const RootSystemPtr& root_system_ptr() const { return rs_; }
  const DynkinDiagram& diagram() const { return rs_->diagram(); }
  const std::vector<NodeIndex>& marks() const { return marks_; }
  bool is_marked(NodeIndex i) const;
  // The unique mark; throws kInvalidMarking otherwise.
  NodeIndex mark() const;

  // Diagram literal plus mark labels, e.g. "E6:a6" or "B3{a2,a3,a4}:a2".
  std::string literal() const;
  // Isomorphism-class name with standard labels: product factors sorted,
  // marks moved to a fixed representative of their diagram-automorphism orbit.
  std::string canonical_name() const;
  // "E7/P7", "G(2,3)", "Q^5", "P^1xP^2".
  std::string space_name() const;

 private:
  RootSystemPtr rs_;
  std::vector<NodeIndex> marks_;
};

// Nodes on the path from gamma to gamma0 that are removed by a deletion
// (gamma included, gamma0 excluded). Throws kInvalidChain when no type-A path
// joins the two nodes.
std::vector<NodeIndex> deletion_chain(const DynkinDiagram& diagram, NodeIndex gamma, NodeIndex gamma0);

// Removes the chain joining the mark of `ambient` to gamma0 and marks gamma0 in
// the surviving sub-diagram (labels preserved).
MarkedDiagram delete_chain(const MarkedDiagram& ambient, NodeIndex gamma0);

}  // namespace hssv
