#pragma once

// Chevalley basis structure constants N_{a,b} and exact bracket evaluation.
//
// Signs are fixed by the extraspecial-pair construction: positive roots are
// totally ordered lexicographically in simple-root coordinates, the
// extraspecial pair of a non-simple positive root xi is the special pair
// (a, b), a < b, a + b = xi with the smallest a, and N_{a,b} = +(p+1) there.
// Every other constant follows from the standard Chevalley-basis identities.
// Normalization: [E_a, E_{-a}] = h_a (the coroot), N_{-a,-b} = -N_{a,b}.

#include <cstddef>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "hssv/rootsys.hpp"

namespace hssv {

class ChevalleyTable {
 public:
  explicit ChevalleyTable(RootSystemPtr rs);

  const RootSystem& root_system() const { return *rs_; }
  const RootSystemPtr& root_system_ptr() const { return rs_; }

  // All roots: positive roots first (same order as the root system), then
  // their negatives.
  std::size_t num_roots() const { return roots_.size(); }
  const Root& root(std::size_t k) const { return roots_.at(k); }
  std::optional<std::size_t> root_index(const Root& r) const;

  // N_{a,b}; zero when a + b is not a root.
  int structure_constant(std::size_t a, std::size_t b) const { return table_[a * num_roots() + b]; }
  int structure_constant(const Root& a, const Root& b) const;

  // Extraspecial pair (indices into positive roots) of a non-simple positive root.
  std::optional<std::pair<std::size_t, std::size_t>> extraspecial_pair(std::size_t positive) const;

  // Largest p with b - p a a root.
  int string_down(const Root& a, const Root& b) const;

  // h_a = sum_i c_i h_i; returns the c_i.
  std::vector<int> coroot(const Root& a) const;

 private:
  RootSystemPtr rs_;
  std::vector<Root> roots_;
  std::map<std::vector<int>, std::size_t> index_;
  std::vector<int> table_;
  std::vector<std::optional<std::pair<std::size_t, std::size_t>>> extraspecial_;
};

ChevalleyTable build_table(RootSystemPtr rs);

// Process-wide read-only table per diagram (keyed by its labelled shape).
// Safe to call concurrently.
std::shared_ptr<const ChevalleyTable> shared_table(const RootSystemPtr& rs);

// Basis symbol of the Chevalley basis: a root vector E_a or a coroot h_i.
struct BasisSymbol {
  enum class Kind { kRoot, kCartan };
  Kind kind = Kind::kRoot;
  Root root;           // kRoot
  NodeIndex node = 0;  // kCartan

  static BasisSymbol root_vector(Root r) { return {Kind::kRoot, std::move(r), 0}; }
  static BasisSymbol cartan(NodeIndex i) { return {Kind::kCartan, Root(), i}; }

  auto operator<=>(const BasisSymbol&) const = default;
};

// Finitely supported integer combination of basis symbols.
class LieElement {
 public:
  LieElement() = default;
  static LieElement e(const Root& r, long coeff = 1);
  static LieElement h(NodeIndex i, long coeff = 1);

  void add(const BasisSymbol& s, long coeff);
  long coefficient(const BasisSymbol& s) const;
  const std::map<BasisSymbol, long>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  LieElement& operator+=(const LieElement& other);
  LieElement& operator-=(const LieElement& other);
  friend LieElement operator+(LieElement a, const LieElement& b) { return a += b; }
  friend LieElement operator-(LieElement a, const LieElement& b) { return a -= b; }
  friend LieElement operator*(long k, LieElement a);
  bool operator==(const LieElement&) const = default;

  std::string to_string(const DynkinDiagram& d) const;

 private:
  std::map<BasisSymbol, long> terms_;
};

// Bilinear extension of the Chevalley-basis brackets. Throws kDomain when a
// root vector is not a root of the table's system.
LieElement bracket(const LieElement& x, const LieElement& y, const ChevalleyTable& table);

}  // namespace hssv
