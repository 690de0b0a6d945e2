#include "hssv/chevalley.hpp"

#include <mutex>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace hssv {

namespace {

// Small exact fraction used while solving for structure constants.
struct Fraction {
  long num = 0;
  long den = 1;

  Fraction& operator+=(const Fraction& o) {
    num = num * o.den + o.num * den;
    den *= o.den;
    const long g = std::gcd(num, den);
    if (g > 1) {
      num /= g;
      den /= g;
    }
    return *this;
  }
};

}  // namespace

ChevalleyTable::ChevalleyTable(RootSystemPtr rs) : rs_(std::move(rs)) {
  const RootSystem& sys = *rs_;
  const auto& pos = sys.positive_roots();
  const std::size_t npos = pos.size();
  for (const auto& r : pos) roots_.push_back(r);
  for (const auto& r : pos) roots_.push_back(-r);
  for (std::size_t k = 0; k < roots_.size(); ++k) index_.emplace(roots_[k].coeffs(), k);

  const std::size_t nr = roots_.size();
  constexpr int kUnset = 1 << 20;
  table_.assign(nr * nr, 0);
  // Positive pairs are filled in height order of their sum; kUnset marks
  // pairs whose sum is a root but whose constant is not known yet.
  for (std::size_t a = 0; a < npos; ++a) {
    for (std::size_t b = 0; b < npos; ++b) {
      if (sys.is_positive_root(pos[a] + pos[b])) table_[a * nr + b] = kUnset;
    }
  }

  auto norm = [&](const Root& r) { return sys.inner_product(r, r); };

  // N_{x,y} for arbitrary roots, reduced to positive pairs already known.
  auto general = [&](auto&& self, const Root& x, const Root& y) -> long {
    const Root s = x + y;
    if (s.is_zero() || !sys.is_root(s)) return 0;
    if (x.is_positive() && y.is_positive()) {
      const int v = table_[*sys.positive_index(x) * nr + *sys.positive_index(y)];
      if (v == kUnset) throw std::logic_error("structure constant requested out of order");
      return v;
    }
    if (x.is_negative() && y.is_negative()) return -self(self, -x, -y);
    if (x.is_negative()) return -self(self, y, x);
    // x positive, y negative; z = -(x + y) and N_{x,y}/(z,z) = N_{y,z}/(x,x) = N_{z,x}/(y,y).
    const Root z = -s;
    long scaled;
    long divisor;
    if (s.is_positive()) {
      scaled = norm(z) * -self(self, -y, -z);
      divisor = norm(x);
    } else {
      scaled = norm(z) * self(self, z, x);
      divisor = norm(y);
    }
    if (scaled % divisor != 0) throw std::logic_error("non-integral structure constant");
    return scaled / divisor;
  };

  extraspecial_.assign(npos, std::nullopt);
  for (std::size_t k = 0; k < npos; ++k) {
    const Root& xi = pos[k];
    // Special pairs (a, b) with a < b lexicographically, a + b = xi.
    std::vector<std::pair<std::size_t, std::size_t>> special;
    for (std::size_t a = 0; a < npos; ++a) {
      const Root rest = xi - pos[a];
      auto b = sys.positive_index(rest);
      if (b && pos[a] < pos[*b]) special.emplace_back(a, *b);
    }
    if (special.empty()) continue;
    std::size_t best = 0;
    for (std::size_t s = 1; s < special.size(); ++s) {
      if (pos[special[s].first] < pos[special[best].first]) best = s;
    }
    const auto [g, d] = special[best];
    extraspecial_[k] = special[best];
    const int ngd = string_down(pos[g], pos[d]) + 1;
    table_[g * nr + d] = ngd;
    table_[d * nr + g] = -ngd;

    const Root& gamma = pos[g];
    const Root& delta = pos[d];
    for (const auto& [a, b] : special) {
      if (a == g) continue;
      const Root& alpha = pos[a];
      const Root& beta = pos[b];
      // Four-term identity with r1 = alpha, r2 = beta, r3 = -gamma, r4 = -delta.
      Fraction sum;
      const Root bg = beta - gamma;
      if (!bg.is_zero() && sys.is_root(bg)) {
        sum += {general(general, beta, -gamma) * general(general, alpha, -delta), norm(bg)};
      }
      const Root ag = alpha - gamma;
      if (!ag.is_zero() && sys.is_root(ag)) {
        sum += {general(general, -gamma, alpha) * general(general, beta, -delta), norm(ag)};
      }
      const long num = norm(xi) * sum.num;
      const long den = sum.den * ngd;
      if (num % den != 0) throw std::logic_error("non-integral structure constant");
      const long n_ab = num / den;
      table_[a * nr + b] = static_cast<int>(n_ab);
      table_[b * nr + a] = static_cast<int>(-n_ab);
    }
  }

  for (std::size_t a = 0; a < nr; ++a) {
    for (std::size_t b = 0; b < nr; ++b) {
      if (a < npos && b < npos) continue;
      table_[a * nr + b] = static_cast<int>(general(general, roots_[a], roots_[b]));
    }
  }
}

std::optional<std::size_t> ChevalleyTable::root_index(const Root& r) const {
  auto it = index_.find(r.coeffs());
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

int ChevalleyTable::structure_constant(const Root& a, const Root& b) const {
  auto ia = root_index(a);
  auto ib = root_index(b);
  if (!ia || !ib) {
    throw Error(ErrorCode::kDomain, "structure_constant", "argument is not a root");
  }
  return structure_constant(*ia, *ib);
}

std::optional<std::pair<std::size_t, std::size_t>> ChevalleyTable::extraspecial_pair(
    std::size_t positive) const {
  return extraspecial_.at(positive);
}

int ChevalleyTable::string_down(const Root& a, const Root& b) const {
  int p = 0;
  Root r = b - a;
  while (!r.is_zero() && rs_->is_root(r)) {
    ++p;
    r -= a;
  }
  return p;
}

std::vector<int> ChevalleyTable::coroot(const Root& a) const {
  const long aa = rs_->inner_product(a, a);
  std::vector<int> c(rs_->rank(), 0);
  for (NodeIndex i = 0; i < rs_->rank(); ++i) {
    const long v = a[i] * static_cast<long>(rs_->diagram().inner(i, i));
    if (v % aa != 0) throw std::logic_error("non-integral coroot coefficient");
    c[i] = static_cast<int>(v / aa);
  }
  return c;
}

ChevalleyTable build_table(RootSystemPtr rs) { return ChevalleyTable(std::move(rs)); }

std::shared_ptr<const ChevalleyTable> shared_table(const RootSystemPtr& rs) {
  static std::mutex mu;
  static std::map<std::string, std::shared_ptr<const ChevalleyTable>> cache;
  // Coordinates follow node storage order, so the key records it too.
  std::string key = rs->diagram().describe();
  for (const auto& l : rs->diagram().labels()) key += "|" + l;
  {
    std::lock_guard lock(mu);
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;
  }
  auto table = std::make_shared<const ChevalleyTable>(rs);
  std::lock_guard lock(mu);
  return cache.emplace(key, std::move(table)).first->second;
}

// ---------------------------------------------------------------------------
// LieElement

LieElement LieElement::e(const Root& r, long coeff) {
  LieElement x;
  x.add(BasisSymbol::root_vector(r), coeff);
  return x;
}

LieElement LieElement::h(NodeIndex i, long coeff) {
  LieElement x;
  x.add(BasisSymbol::cartan(i), coeff);
  return x;
}

void LieElement::add(const BasisSymbol& s, long coeff) {
  if (coeff == 0) return;
  auto [it, inserted] = terms_.emplace(s, coeff);
  if (!inserted) {
    it->second += coeff;
    if (it->second == 0) terms_.erase(it);
  }
}

long LieElement::coefficient(const BasisSymbol& s) const {
  auto it = terms_.find(s);
  return it == terms_.end() ? 0 : it->second;
}

LieElement& LieElement::operator+=(const LieElement& other) {
  for (const auto& [s, c] : other.terms_) add(s, c);
  return *this;
}

LieElement& LieElement::operator-=(const LieElement& other) {
  for (const auto& [s, c] : other.terms_) add(s, -c);
  return *this;
}

LieElement operator*(long k, LieElement a) {
  if (k == 0) return {};
  for (auto& [s, c] : a.terms_) c *= k;
  return a;
}

std::string LieElement::to_string(const DynkinDiagram& d) const {
  if (terms_.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (const auto& [s, c] : terms_) {
    if (!first) out << (c < 0 ? " - " : " + ");
    else if (c < 0) out << "-";
    const long a = c < 0 ? -c : c;
    if (a != 1) out << a << "*";
    if (s.kind == BasisSymbol::Kind::kRoot) {
      out << "E[" << s.root.to_string(d) << "]";
    } else {
      out << "h[" << d.label(s.node) << "]";
    }
    first = false;
  }
  return out.str();
}

namespace {

LieElement bracket_basis(const BasisSymbol& x, const BasisSymbol& y, const ChevalleyTable& t) {
  const RootSystem& rs = t.root_system();
  using K = BasisSymbol::Kind;
  if (x.kind == K::kCartan && y.kind == K::kCartan) return {};
  if (x.kind == K::kCartan) {
    return LieElement::e(y.root, rs.cartan_pairing(y.root, rs.simple_root(x.node)));
  }
  if (y.kind == K::kCartan) {
    return LieElement::e(x.root, -rs.cartan_pairing(x.root, rs.simple_root(y.node)));
  }
  const Root sum = x.root + y.root;
  if (sum.is_zero()) {
    LieElement out;
    const auto c = t.coroot(x.root);
    for (NodeIndex i = 0; i < c.size(); ++i) out.add(BasisSymbol::cartan(i), c[i]);
    return out;
  }
  const int n = t.structure_constant(x.root, y.root);
  if (n == 0) return {};
  return LieElement::e(sum, n);
}

void check_support(const LieElement& x, const ChevalleyTable& t) {
  for (const auto& [s, c] : x.terms()) {
    if (s.kind == BasisSymbol::Kind::kRoot && !t.root_index(s.root)) {
      throw Error(ErrorCode::kDomain, "bracket", "root vector outside the table's basis");
    }
    if (s.kind == BasisSymbol::Kind::kCartan && s.node >= t.root_system().rank()) {
      throw Error(ErrorCode::kDomain, "bracket", "coroot index outside the table's basis");
    }
  }
}

}  // namespace

LieElement bracket(const LieElement& x, const LieElement& y, const ChevalleyTable& table) {
  check_support(x, table);
  check_support(y, table);
  LieElement out;
  for (const auto& [sx, cx] : x.terms()) {
    for (const auto& [sy, cy] : y.terms()) {
      out += (cx * cy) * bracket_basis(sx, sy, table);
    }
  }
  return out;
}

}  // namespace hssv
