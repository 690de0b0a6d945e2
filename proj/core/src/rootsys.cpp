#include "hssv/rootsys.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <queue>
#include <set>
#include <sstream>

namespace hssv {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::kUnclassifiableDiagram: return "unclassifiable_diagram";
    case ErrorCode::kInvalidDiagram: return "invalid_diagram";
    case ErrorCode::kUnknownLabel: return "unknown_label";
    case ErrorCode::kNonCominuscule: return "non_cominuscule";
    case ErrorCode::kInvalidMarking: return "invalid_marking";
    case ErrorCode::kInvalidChain: return "invalid_chain";
    case ErrorCode::kDomain: return "domain";
    case ErrorCode::kCorrespondence: return "correspondence";
    case ErrorCode::kCertification: return "certification";
    case ErrorCode::kParse: return "parse";
    case ErrorCode::kConfig: return "config";
  }
  return "unknown";
}

// ---------------------------------------------------------------------------
// Root

Root Root::simple(std::size_t rank, NodeIndex i) {
  std::vector<int> c(rank, 0);
  c.at(i) = 1;
  return Root(std::move(c));
}

int Root::height() const { return std::accumulate(c_.begin(), c_.end(), 0); }

bool Root::is_zero() const {
  return std::all_of(c_.begin(), c_.end(), [](int x) { return x == 0; });
}

bool Root::is_positive() const {
  return !is_zero() && std::all_of(c_.begin(), c_.end(), [](int x) { return x >= 0; });
}

bool Root::is_negative() const {
  return !is_zero() && std::all_of(c_.begin(), c_.end(), [](int x) { return x <= 0; });
}

Root Root::operator-() const {
  Root r = *this;
  for (auto& x : r.c_) x = -x;
  return r;
}

Root& Root::operator+=(const Root& other) {
  if (other.size() != size()) {
    throw Error(ErrorCode::kDomain, "root", "root vectors of different rank");
  }
  for (std::size_t i = 0; i < c_.size(); ++i) c_[i] += other.c_[i];
  return *this;
}

Root& Root::operator-=(const Root& other) {
  if (other.size() != size()) {
    throw Error(ErrorCode::kDomain, "root", "root vectors of different rank");
  }
  for (std::size_t i = 0; i < c_.size(); ++i) c_[i] -= other.c_[i];
  return *this;
}

std::string Root::to_string(const DynkinDiagram& diagram) const {
  std::ostringstream out;
  bool first = true;
  for (std::size_t i = 0; i < c_.size(); ++i) {
    const int k = c_[i];
    if (k == 0) continue;
    if (k < 0) {
      out << '-';
    } else if (!first) {
      out << '+';
    }
    if (k != 1 && k != -1) out << (k < 0 ? -k : k);
    out << diagram.label(i);
    first = false;
  }
  if (first) return "0";
  return out.str();
}

// ---------------------------------------------------------------------------
// ComponentType

std::string ComponentType::name() const {
  return std::string(1, static_cast<char>(family)) + std::to_string(rank);
}

int ComponentType::bourbaki_index(NodeIndex node) const {
  for (std::size_t k = 0; k < bourbaki.size(); ++k) {
    if (bourbaki[k] == node) return static_cast<int>(k) + 1;
  }
  return 0;
}

// ---------------------------------------------------------------------------
// DynkinDiagram

namespace {

std::string component_subject(const std::vector<std::string>& labels,
                              const std::vector<NodeIndex>& nodes) {
  std::string s = "{";
  for (std::size_t k = 0; k < nodes.size(); ++k) {
    if (k) s += ",";
    s += labels[nodes[k]];
  }
  return s + "}";
}

}  // namespace

DynkinDiagram::DynkinDiagram(std::vector<std::string> labels, std::vector<Bond> bonds)
    : labels_(std::move(labels)), bonds_(std::move(bonds)) {
  const std::size_t n = labels_.size();
  std::set<std::string> seen;
  for (const auto& l : labels_) {
    if (l.empty()) throw Error(ErrorCode::kInvalidDiagram, l, "empty node label");
    if (!seen.insert(l).second) {
      throw Error(ErrorCode::kInvalidDiagram, l, "duplicate node label " + l);
    }
  }
  adjacency_.assign(n * n, 0);
  for (const auto& b : bonds_) {
    if (b.from >= n || b.to >= n || b.from == b.to) {
      throw Error(ErrorCode::kInvalidDiagram, "bond", "bond endpoints out of range");
    }
    if (b.multiplicity < 1 || b.multiplicity > 3) {
      throw Error(ErrorCode::kInvalidDiagram, labels_[b.from] + "-" + labels_[b.to],
                  "bond multiplicity must be 1, 2 or 3");
    }
    if (adjacency_[b.from * n + b.to] != 0) {
      throw Error(ErrorCode::kInvalidDiagram, labels_[b.from] + "-" + labels_[b.to],
                  "duplicate bond");
    }
    adjacency_[b.from * n + b.to] = b.multiplicity;
    adjacency_[b.to * n + b.from] = b.multiplicity;
  }
  classify();
  build_form();
}

int DynkinDiagram::multiplicity(NodeIndex a, NodeIndex b) const {
  return adjacency_.at(a * size() + b);
}

std::vector<NodeIndex> DynkinDiagram::neighbors(NodeIndex i) const {
  std::vector<NodeIndex> out;
  for (NodeIndex j = 0; j < size(); ++j) {
    if (adjacency_[i * size() + j] > 0) out.push_back(j);
  }
  return out;
}

std::optional<NodeIndex> DynkinDiagram::find(std::string_view label) const {
  for (NodeIndex i = 0; i < labels_.size(); ++i) {
    if (labels_[i] == label) return i;
  }
  return std::nullopt;
}

NodeIndex DynkinDiagram::index_of(std::string_view label) const {
  if (auto i = find(label)) return *i;
  throw Error(ErrorCode::kUnknownLabel, std::string(label),
              "no node labelled " + std::string(label) + " in " + describe());
}

void DynkinDiagram::classify() {
  const std::size_t n = size();
  component_of_.assign(n, static_cast<std::size_t>(-1));
  components_.clear();

  for (NodeIndex start = 0; start < n; ++start) {
    if (component_of_[start] != static_cast<std::size_t>(-1)) continue;
    const std::size_t cid = components_.size();
    std::vector<NodeIndex> nodes;
    std::queue<NodeIndex> q;
    q.push(start);
    component_of_[start] = cid;
    while (!q.empty()) {
      const NodeIndex v = q.front();
      q.pop();
      nodes.push_back(v);
      for (NodeIndex w : neighbors(v)) {
        if (component_of_[w] == static_cast<std::size_t>(-1)) {
          component_of_[w] = cid;
          q.push(w);
        }
      }
    }
    std::sort(nodes.begin(), nodes.end());
    const std::string subject = component_subject(labels_, nodes);
    auto fail = [&](const std::string& why) {
      throw Error(ErrorCode::kUnclassifiableDiagram, subject,
                  "component " + subject + " is not a finite-type Dynkin diagram: " + why);
    };

    std::size_t edge_count = 0;
    std::vector<const Bond*> multiple;
    for (const auto& b : bonds_) {
      if (component_of_[b.from] == cid) {
        ++edge_count;
        if (b.multiplicity > 1) multiple.push_back(&b);
      }
    }
    if (edge_count != nodes.size() - 1) fail("contains a cycle");
    if (multiple.size() > 1) fail("more than one multiple bond");

    std::vector<std::size_t> degree(n, 0);
    std::size_t max_degree = 0;
    for (NodeIndex v : nodes) {
      degree[v] = neighbors(v).size();
      max_degree = std::max(max_degree, degree[v]);
    }

    // Walks a path component starting from the endpoint `from`.
    auto walk = [&](NodeIndex from) {
      std::vector<NodeIndex> order{from};
      NodeIndex prev = from;
      NodeIndex cur = from;
      while (true) {
        NodeIndex next = cur;
        for (NodeIndex w : neighbors(cur)) {
          if (w != prev) next = w;
        }
        if (next == cur) break;
        prev = cur;
        cur = next;
        order.push_back(cur);
      }
      return order;
    };

    ComponentType type;
    type.rank = static_cast<int>(nodes.size());

    if (nodes.size() == 1) {
      type.family = Family::A;
      type.bourbaki = nodes;
    } else if (multiple.empty()) {
      if (max_degree <= 2) {
        NodeIndex end = nodes.front();
        for (NodeIndex v : nodes) {
          if (degree[v] == 1) {
            end = v;
            break;
          }
        }
        type.family = Family::A;
        type.bourbaki = walk(end);
      } else {
        std::vector<NodeIndex> branch;
        for (NodeIndex v : nodes) {
          if (degree[v] > 3) fail("node of degree > 3");
          if (degree[v] == 3) branch.push_back(v);
        }
        if (branch.size() != 1) fail("more than one branch node");
        const NodeIndex center = branch.front();
        std::vector<std::vector<NodeIndex>> arms;
        for (NodeIndex first : neighbors(center)) {
          std::vector<NodeIndex> arm{first};
          NodeIndex prev = center;
          NodeIndex cur = first;
          while (true) {
            NodeIndex next = cur;
            for (NodeIndex w : neighbors(cur)) {
              if (w != prev) next = w;
            }
            if (next == cur) break;
            prev = cur;
            cur = next;
            arm.push_back(cur);
          }
          arms.push_back(std::move(arm));
        }
        std::stable_sort(arms.begin(), arms.end(), [](const auto& x, const auto& y) {
          if (x.size() != y.size()) return x.size() < y.size();
          return x.front() < y.front();
        });
        const std::size_t a = arms[0].size(), b = arms[1].size(), c = arms[2].size();
        std::vector<NodeIndex> order;
        if (a == 1 && b == 1) {
          // D_{c+3}: the long arm is alpha_1 .. alpha_{n-3}; for D4 any arm works.
          type.family = Family::D;
          std::vector<NodeIndex> long_arm = arms[2];
          std::vector<NodeIndex> s1 = arms[0], s2 = arms[1];
          if (c == 1) {
            // D4: arms are sorted by node index; the first becomes alpha_1.
            long_arm = arms[0];
            s1 = arms[1];
            s2 = arms[2];
          }
          order.assign(long_arm.rbegin(), long_arm.rend());
          order.push_back(center);
          order.push_back(s1.front());
          order.push_back(s2.front());
        } else if (a == 1 && b == 2 && c >= 2 && c <= 4) {
          type.family = Family::E;
          // alpha_1 = far end of the length-two arm, alpha_2 = short arm.
          order = {arms[1][1], arms[0][0], arms[1][0], center};
          for (NodeIndex v : arms[2]) order.push_back(v);
        } else {
          fail("branch arms do not match D or E");
        }
        type.bourbaki = std::move(order);
      }
    } else {
      if (max_degree > 2) fail("multiple bond on a branched diagram");
      const Bond& mb = *multiple.front();
      if (mb.multiplicity == 3) {
        if (nodes.size() != 2) fail("triple bond outside G2");
        type.family = Family::G;
        type.bourbaki = {mb.to, mb.from};  // alpha_1 short
      } else {
        std::vector<NodeIndex> ends;
        for (NodeIndex v : nodes) {
          if (degree[v] == 1) ends.push_back(v);
        }
        std::vector<NodeIndex> order = walk(ends.front());
        auto pos = [&](NodeIndex v) {
          return static_cast<std::size_t>(std::find(order.begin(), order.end(), v) - order.begin());
        };
        std::size_t lo = std::min(pos(mb.from), pos(mb.to));
        const std::size_t m = order.size();
        if (lo == 0 && m > 2) {
          std::reverse(order.begin(), order.end());
          lo = m - 2;
        }
        if (m == 2) {
          type.family = Family::B;
          order = {mb.from, mb.to};  // B2: alpha_1 long
        } else if (lo == m - 2) {
          type.family = (order.back() == mb.to) ? Family::B : Family::C;
        } else if (m == 4 && lo == 1) {
          if (order[1] != mb.from) std::reverse(order.begin(), order.end());
          type.family = Family::F;
        } else {
          fail("double bond in an unsupported position");
        }
        type.bourbaki = std::move(order);
      }
    }
    components_.push_back(std::move(type));
  }
}

void DynkinDiagram::build_form() {
  const std::size_t n = size();
  // Half squared lengths per node: d(to) * m = d(from) across an m-fold bond.
  std::vector<long> num(n, 0), den(n, 1);
  for (const auto& comp : components_) {
    const NodeIndex root = comp.bourbaki.front();
    num[root] = 1;
    std::queue<NodeIndex> q;
    q.push(root);
    std::vector<bool> seen(n, false);
    seen[root] = true;
    while (!q.empty()) {
      const NodeIndex v = q.front();
      q.pop();
      for (const auto& b : bonds_) {
        NodeIndex w;
        if (b.from == v) {
          w = b.to;
        } else if (b.to == v) {
          w = b.from;
        } else {
          continue;
        }
        if (seen[w]) continue;
        seen[w] = true;
        num[w] = num[v];
        den[w] = den[v];
        if (b.multiplicity > 1) {
          if (b.from == v) {
            den[w] *= b.multiplicity;  // w is short
          } else {
            num[w] *= b.multiplicity;  // w is long
          }
        }
        q.push(w);
      }
    }
    long l = 1;
    for (NodeIndex v : comp.bourbaki) l = std::lcm(l, den[v]);
    long g = 0;
    for (NodeIndex v : comp.bourbaki) {
      num[v] = num[v] * (l / den[v]);
      den[v] = 1;
      g = std::gcd(g, num[v]);
    }
    for (NodeIndex v : comp.bourbaki) num[v] /= g;
  }
  form_.assign(n * n, 0);
  for (NodeIndex i = 0; i < n; ++i) {
    form_[i * n + i] = static_cast<int>(2 * num[i]);
    for (NodeIndex j = 0; j < n; ++j) {
      if (i != j && adjacency_[i * n + j] > 0) {
        form_[i * n + j] = -static_cast<int>(std::max(num[i], num[j]));
      }
    }
  }
}

DynkinDiagram DynkinDiagram::standard(Family family, int rank, int first_label) {
  auto bad = [&](const std::string& why) {
    return Error(ErrorCode::kParse, std::string(1, static_cast<char>(family)) + std::to_string(rank),
                 why);
  };
  switch (family) {
    case Family::A: if (rank < 1) throw bad("A_n needs n >= 1"); break;
    case Family::B: if (rank < 2) throw bad("B_n needs n >= 2"); break;
    case Family::C: if (rank < 3) throw bad("C_n needs n >= 3"); break;
    case Family::D: if (rank < 4) throw bad("D_n needs n >= 4"); break;
    case Family::E: if (rank < 6 || rank > 8) throw bad("E_n needs 6 <= n <= 8"); break;
    case Family::F: if (rank != 4) throw bad("only F4 exists"); break;
    case Family::G: if (rank != 2) throw bad("only G2 exists"); break;
  }
  std::vector<std::string> labels;
  for (int k = 0; k < rank; ++k) labels.push_back("a" + std::to_string(first_label + k));
  std::vector<Bond> bonds;
  const auto n = static_cast<NodeIndex>(rank);
  auto chain = [&](NodeIndex from, NodeIndex to) {
    for (NodeIndex i = from; i + 1 < to; ++i) bonds.push_back({i, i + 1, 1});
  };
  switch (family) {
    case Family::A:
      chain(0, n);
      break;
    case Family::B:
      chain(0, n - 1);
      bonds.push_back({n - 2, n - 1, 2});
      break;
    case Family::C:
      chain(0, n - 1);
      bonds.push_back({n - 1, n - 2, 2});
      break;
    case Family::D:
      chain(0, n - 1);
      bonds.push_back({n - 3, n - 1, 1});
      break;
    case Family::E:
      // a1-a3-a4-...-an with a2 attached to a4.
      bonds.push_back({0, 2, 1});
      bonds.push_back({1, 3, 1});
      for (NodeIndex i = 2; i + 1 < n; ++i) bonds.push_back({i, i + 1, 1});
      break;
    case Family::F:
      bonds = {{0, 1, 1}, {1, 2, 2}, {2, 3, 1}};
      break;
    case Family::G:
      bonds = {{1, 0, 3}};
      break;
  }
  return DynkinDiagram(std::move(labels), std::move(bonds));
}

DynkinDiagram DynkinDiagram::parse(std::string_view literal) {
  std::vector<std::string> labels;
  std::vector<Bond> bonds;
  std::string text;
  for (char ch : literal) {
    if (!std::isspace(static_cast<unsigned char>(ch))) text.push_back(ch);
  }
  if (text.empty()) throw Error(ErrorCode::kParse, std::string(literal), "empty diagram literal");
  std::size_t pos = 0;
  int offset = 1;
  while (true) {
    const std::size_t plus = text.find('+', pos);
    const std::string part = text.substr(pos, plus == std::string::npos ? std::string::npos : plus - pos);
    if (part.size() < 2 || std::string("ABCDEFG").find(part[0]) == std::string::npos ||
        !std::all_of(part.begin() + 1, part.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); })) {
      throw Error(ErrorCode::kParse, std::string(literal), "unknown diagram '" + part + "'");
    }
    const int rank = std::stoi(part.substr(1));
    const DynkinDiagram comp = standard(static_cast<Family>(part[0]), rank, offset);
    const NodeIndex base = labels.size();
    for (const auto& l : comp.labels()) labels.push_back(l);
    for (auto b : comp.bonds()) {
      b.from += base;
      b.to += base;
      bonds.push_back(b);
    }
    offset += rank;
    if (plus == std::string::npos) break;
    pos = plus + 1;
  }
  return DynkinDiagram(std::move(labels), std::move(bonds));
}

DynkinDiagram DynkinDiagram::induced(std::span<const NodeIndex> keep) const {
  std::vector<std::string> labels;
  std::vector<NodeIndex> position(size(), static_cast<NodeIndex>(-1));
  for (std::size_t k = 0; k < keep.size(); ++k) {
    position.at(keep[k]) = k;
    labels.push_back(labels_.at(keep[k]));
  }
  std::vector<Bond> bonds;
  for (const auto& b : bonds_) {
    if (position[b.from] != static_cast<NodeIndex>(-1) && position[b.to] != static_cast<NodeIndex>(-1)) {
      bonds.push_back({position[b.from], position[b.to], b.multiplicity});
    }
  }
  return DynkinDiagram(std::move(labels), std::move(bonds));
}

std::optional<std::vector<NodeIndex>> DynkinDiagram::path(NodeIndex a, NodeIndex b) const {
  if (component_of(a) != component_of(b)) return std::nullopt;
  std::vector<NodeIndex> parent(size(), static_cast<NodeIndex>(-1));
  std::queue<NodeIndex> q;
  q.push(a);
  parent[a] = a;
  while (!q.empty()) {
    const NodeIndex v = q.front();
    q.pop();
    for (NodeIndex w : neighbors(v)) {
      if (parent[w] == static_cast<NodeIndex>(-1)) {
        parent[w] = v;
        q.push(w);
      }
    }
  }
  std::vector<NodeIndex> out{b};
  while (out.back() != a) out.push_back(parent[out.back()]);
  std::reverse(out.begin(), out.end());
  return out;
}

std::string DynkinDiagram::literal() const {
  std::string s;
  for (std::size_t k = 0; k < components_.size(); ++k) {
    if (k) s += "+";
    s += components_[k].name();
  }
  return s;
}

std::string DynkinDiagram::describe() const {
  std::string s;
  for (std::size_t k = 0; k < components_.size(); ++k) {
    if (k) s += "+";
    s += components_[k].name();
    // Spell out labels unless they are the standard a1..an of a lone component.
    bool standard_labels = components_.size() == 1;
    for (std::size_t j = 0; standard_labels && j < components_[k].bourbaki.size(); ++j) {
      standard_labels = labels_[components_[k].bourbaki[j]] == "a" + std::to_string(j + 1);
    }
    if (!standard_labels) s += component_subject(labels_, components_[k].bourbaki);
  }
  return s.empty() ? "empty" : s;
}

// ---------------------------------------------------------------------------
// RootSystem

RootSystem::RootSystem(DynkinDiagram diagram) : diagram_(std::move(diagram)) {
  const std::size_t n = rank();
  for (NodeIndex i = 0; i < n; ++i) {
    index_.emplace(simple_root(i).coeffs(), positive_.size());
    positive_.push_back(simple_root(i));
  }
  // Grow by height: beta + alpha_i is a root iff the alpha_i-string through
  // beta extends upward, i.e. p - <beta, alpha_i> > 0.
  std::size_t level_begin = 0;
  while (level_begin < positive_.size()) {
    const std::size_t level_end = positive_.size();
    std::vector<Root> next;
    for (std::size_t k = level_begin; k < level_end; ++k) {
      const Root beta = positive_[k];
      for (NodeIndex i = 0; i < n; ++i) {
        const Root ai = simple_root(i);
        if (beta == ai) continue;
        int p = 0;
        Root down = beta - ai;
        while (index_.count(down.coeffs())) {
          ++p;
          down -= ai;
        }
        const int q = p - cartan_pairing(beta, ai);
        if (q > 0) {
          Root up = beta + ai;
          if (!index_.count(up.coeffs()) &&
              std::find(next.begin(), next.end(), up) == next.end()) {
            next.push_back(std::move(up));
          }
        }
      }
    }
    std::sort(next.begin(), next.end());
    for (auto& r : next) {
      index_.emplace(r.coeffs(), positive_.size());
      positive_.push_back(std::move(r));
    }
    level_begin = level_end;
  }
  // Simple roots were appended in node order; resort the first level too.
  std::stable_sort(positive_.begin(), positive_.end(), [](const Root& a, const Root& b) {
    if (a.height() != b.height()) return a.height() < b.height();
    return a < b;
  });
  index_.clear();
  for (std::size_t k = 0; k < positive_.size(); ++k) index_.emplace(positive_[k].coeffs(), k);

  highest_.resize(diagram_.components().size());
  for (std::size_t c = 0; c < highest_.size(); ++c) {
    for (const auto& r : positive_) {
      if (diagram_.component_of(static_cast<NodeIndex>(
              std::find_if(r.coeffs().begin(), r.coeffs().end(), [](int x) { return x != 0; }) -
              r.coeffs().begin())) != c) {
        continue;
      }
      if (highest_[c].size() == 0 || r.height() > highest_[c].height()) highest_[c] = r;
    }
  }
}

std::optional<std::size_t> RootSystem::positive_index(const Root& r) const {
  if (r.size() != rank()) return std::nullopt;
  auto it = index_.find(r.coeffs());
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

bool RootSystem::is_root(const Root& r) const {
  return is_positive_root(r) || is_positive_root(-r);
}

long RootSystem::inner_product(const Root& a, const Root& b) const {
  const std::size_t n = rank();
  if (a.size() != n || b.size() != n) {
    throw Error(ErrorCode::kDomain, "inner_product", "root vector rank mismatch");
  }
  long s = 0;
  for (NodeIndex i = 0; i < n; ++i) {
    if (a[i] == 0) continue;
    for (NodeIndex j = 0; j < n; ++j) {
      s += static_cast<long>(a[i]) * b[j] * diagram_.inner(i, j);
    }
  }
  return s;
}

int RootSystem::cartan_pairing(const Root& beta, const Root& gamma) const {
  if (gamma.is_zero()) {
    throw Error(ErrorCode::kDomain, "cartan_pairing", "pairing against the zero vector");
  }
  const long num = 2 * inner_product(beta, gamma);
  const long den = inner_product(gamma, gamma);
  if (num % den != 0) {
    throw Error(ErrorCode::kDomain, gamma.to_string(diagram_),
                "pairing with " + gamma.to_string(diagram_) + " is not integral");
  }
  return static_cast<int>(num / den);
}

Root RootSystem::reflect(NodeIndex node, const Root& beta) const {
  if (node >= rank()) {
    throw Error(ErrorCode::kDomain, std::to_string(node), "reflection index out of range");
  }
  const Root a = simple_root(node);
  return beta - cartan_pairing(beta, a) * a;
}

RootSystemPtr build_root_system(DynkinDiagram diagram) {
  return std::make_shared<const RootSystem>(std::move(diagram));
}

int cartan_pairing(const Root& beta, const Root& gamma, const RootSystem& rs) {
  return rs.cartan_pairing(beta, gamma);
}

Root reflect(NodeIndex node, const Root& beta, const RootSystem& rs) { return rs.reflect(node, beta); }

std::size_t classical_positive_root_count(Family family, int rank) {
  const auto n = static_cast<std::size_t>(rank);
  switch (family) {
    case Family::A: return n * (n + 1) / 2;
    case Family::B:
    case Family::C: return n * n;
    case Family::D: return n * (n - 1);
    case Family::E: return n == 6 ? 36 : n == 7 ? 63 : 120;
    case Family::F: return 24;
    case Family::G: return 6;
  }
  return 0;
}

bool is_cominuscule(const RootSystem& rs, NodeIndex node) {
  return rs.highest_root(rs.diagram().component_of(node))[node] == 1;
}

// ---------------------------------------------------------------------------
// MarkedDiagram

MarkedDiagram::MarkedDiagram(RootSystemPtr rs, std::vector<NodeIndex> marks)
    : rs_(std::move(rs)), marks_(std::move(marks)) {
  if (!rs_) throw Error(ErrorCode::kInvalidMarking, "", "marked diagram without root system");
  std::sort(marks_.begin(), marks_.end());
  if (std::adjacent_find(marks_.begin(), marks_.end()) != marks_.end()) {
    throw Error(ErrorCode::kInvalidMarking, diagram().describe(), "duplicate mark");
  }
  if (marks_.empty() && rs_->rank() > 0) {
    throw Error(ErrorCode::kInvalidMarking, diagram().describe(), "marked diagram needs a mark");
  }
  std::set<std::size_t> used;
  for (NodeIndex m : marks_) {
    if (m >= rs_->rank()) throw Error(ErrorCode::kInvalidMarking, "mark", "mark out of range");
    if (!used.insert(diagram().component_of(m)).second) {
      throw Error(ErrorCode::kInvalidMarking, diagram().label(m),
                  "two marks in the component of " + diagram().label(m));
    }
    if (!is_cominuscule(*rs_, m)) {
      throw Error(ErrorCode::kNonCominuscule, diagram().label(m),
                  diagram().label(m) + " is not cominuscule in " + diagram().describe() +
                      " (highest root " + rs_->highest_root(diagram().component_of(m)).to_string(diagram()) + ")");
    }
  }
}

MarkedDiagram MarkedDiagram::parse(std::string_view literal) {
  const std::string text(literal);
  const std::size_t colon = text.find(':');
  if (colon == std::string::npos) {
    throw Error(ErrorCode::kParse, text, "marked diagram literal needs ':<marks>'");
  }
  auto rs = build_root_system(DynkinDiagram::parse(text.substr(0, colon)));
  std::vector<NodeIndex> marks;
  std::string rest = text.substr(colon + 1);
  std::size_t pos = 0;
  while (pos <= rest.size()) {
    const std::size_t comma = rest.find(',', pos);
    std::string label = rest.substr(pos, comma == std::string::npos ? std::string::npos : comma - pos);
    label.erase(std::remove_if(label.begin(), label.end(), [](char c) { return std::isspace(static_cast<unsigned char>(c)); }),
                label.end());
    marks.push_back(rs->diagram().index_of(label));
    if (comma == std::string::npos) break;
    pos = comma + 1;
  }
  return MarkedDiagram(std::move(rs), std::move(marks));
}

bool MarkedDiagram::is_marked(NodeIndex i) const {
  return std::binary_search(marks_.begin(), marks_.end(), i);
}

NodeIndex MarkedDiagram::mark() const {
  if (marks_.size() != 1) {
    throw Error(ErrorCode::kInvalidMarking, literal(), "expected exactly one mark on " + literal());
  }
  return marks_.front();
}

std::string MarkedDiagram::literal() const {
  if (empty()) return "empty";
  std::string s = diagram().describe() + ":";
  for (std::size_t k = 0; k < marks_.size(); ++k) {
    if (k) s += ",";
    s += diagram().label(marks_[k]);
  }
  return s;
}

namespace {

// Representative of the Bourbaki index `i` under diagram automorphisms.
int canonical_mark(Family f, int n, int i) {
  switch (f) {
    case Family::A: return std::min(i, n + 1 - i);
    case Family::D:
      if (n == 4) return (i == 3 || i == 4) ? 1 : i;
      return i == n - 1 ? n : i;
    case Family::E:
      if (n == 6) return i == 1 ? 6 : (i == 5 ? 3 : i);
      return i;
    default: return i;
  }
}

std::string irreducible_space_name(Family f, int n, int i) {
  const auto s = [](int x) { return std::to_string(x); };
  switch (f) {
    case Family::A: return i == 1 ? "P^" + s(n) : "G(" + s(i) + "," + s(n + 1 - i) + ")";
    case Family::B: return "Q^" + s(2 * n - 1);
    case Family::C: return "G^III(" + s(n) + "," + s(n) + ")";
    case Family::D: return i == 1 ? "Q^" + s(2 * n - 2) : "G^II(" + s(n) + "," + s(n) + ")";
    case Family::E: return "E" + s(n) + "/P" + s(i);
    default: return std::string(1, static_cast<char>(f)) + s(n) + "/P" + s(i);
  }
}

struct CanonicalFactor {
  Family family;
  int rank;
  int mark;  // 0 when unmarked
  auto operator<=>(const CanonicalFactor&) const = default;
};

std::vector<CanonicalFactor> canonical_factors(const MarkedDiagram& md) {
  std::vector<CanonicalFactor> out;
  const auto& comps = md.diagram().components();
  for (std::size_t c = 0; c < comps.size(); ++c) {
    int mark = 0;
    for (NodeIndex m : md.marks()) {
      if (md.diagram().component_of(m) == c) {
        mark = canonical_mark(comps[c].family, comps[c].rank, comps[c].bourbaki_index(m));
      }
    }
    out.push_back({comps[c].family, comps[c].rank, mark});
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

std::string MarkedDiagram::canonical_name() const {
  if (empty()) return "empty";
  std::string types, marks;
  int offset = 0;
  for (const auto& f : canonical_factors(*this)) {
    if (!types.empty()) types += "+";
    types += std::string(1, static_cast<char>(f.family)) + std::to_string(f.rank);
    if (f.mark) {
      if (!marks.empty()) marks += ",";
      marks += "a" + std::to_string(offset + f.mark);
    }
    offset += f.rank;
  }
  return types + ":" + marks;
}

std::string MarkedDiagram::space_name() const {
  if (empty()) return "point";
  std::string s;
  for (const auto& f : canonical_factors(*this)) {
    if (!f.mark) continue;
    if (!s.empty()) s += "x";
    s += irreducible_space_name(f.family, f.rank, f.mark);
  }
  return s;
}

// ---------------------------------------------------------------------------
// Chain deletion

std::vector<NodeIndex> deletion_chain(const DynkinDiagram& diagram, NodeIndex gamma, NodeIndex gamma0) {
  const auto subject = diagram.label(gamma) + "/" + diagram.label(gamma0);
  if (gamma == gamma0) {
    throw Error(ErrorCode::kInvalidChain, subject, "gamma0 must differ from the mark");
  }
  auto p = diagram.path(gamma, gamma0);
  if (!p) {
    throw Error(ErrorCode::kInvalidChain, subject,
                diagram.label(gamma0) + " is not connected to " + diagram.label(gamma));
  }
  for (std::size_t k = 0; k + 1 < p->size(); ++k) {
    if (diagram.multiplicity((*p)[k], (*p)[k + 1]) != 1) {
      throw Error(ErrorCode::kInvalidChain, subject,
                  "the path from " + diagram.label(gamma) + " to " + diagram.label(gamma0) +
                      " is not a type-A chain");
    }
  }
  p->pop_back();
  return *p;
}

MarkedDiagram delete_chain(const MarkedDiagram& ambient, NodeIndex gamma0) {
  const DynkinDiagram& d = ambient.diagram();
  const NodeIndex gamma = ambient.mark();
  const std::vector<NodeIndex> chain = deletion_chain(d, gamma, gamma0);
  std::vector<NodeIndex> keep;
  for (NodeIndex i = 0; i < d.size(); ++i) {
    if (std::find(chain.begin(), chain.end(), i) == chain.end()) keep.push_back(i);
  }
  DynkinDiagram sub = d.induced(keep);
  if (sub.components().size() != d.components().size()) {
    throw Error(ErrorCode::kInvalidChain, d.label(gamma) + "/" + d.label(gamma0),
                "deleting the chain from " + d.label(gamma) + " to " + d.label(gamma0) +
                    " disconnects the diagram");
  }
  const NodeIndex mark = sub.index_of(d.label(gamma0));
  return MarkedDiagram(build_root_system(std::move(sub)), {mark});
}

}  // namespace hssv
