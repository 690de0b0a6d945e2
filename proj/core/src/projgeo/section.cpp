#include "hssv/projgeo/section.hpp"

#include <algorithm>
#include <optional>
#include <stdexcept>

namespace hssv::projgeo {

namespace {

std::size_t plucker_index(std::size_t i, std::size_t j) {
  // 1-based i < j among 1..5.
  static constexpr std::size_t offset[] = {0, 4, 7, 9};
  return offset[i - 1] + (j - i - 1);
}

}  // namespace

QuadricSystem plucker_system() {
  QuadricSystem sys{"G(2,5)", 10, {}};
  for (std::size_t omit = 5; omit >= 1; --omit) {
    std::vector<std::size_t> s;
    for (std::size_t k = 1; k <= 5; ++k) {
      if (k != omit) s.push_back(k);
    }
    const auto x = [&](std::size_t a, std::size_t b) { return plucker_index(s[a], s[b]); };
    sys.quadrics.push_back({{1, x(0, 1), x(2, 3)}, {-1, x(0, 2), x(1, 3)}, {1, x(0, 3), x(1, 2)}});
  }
  return sys;
}

QuadricSystem segre_system() {
  QuadricSystem sys{"P1xP2", 6, {}};
  for (std::size_t j = 0; j < 3; ++j) {
    for (std::size_t k = j + 1; k < 3; ++k) sys.quadrics.push_back({{1, j, 3 + k}, {-1, k, 3 + j}});
  }
  return sys;
}

namespace {

template <class F>
using E = typename F::Elem;

template <class F>
E<F> eval_ternary(const F& f, const Ternary<F>& q, const Vec<F>& x) {
  const E<F> terms[] = {f.mul(x[0], x[0]), f.mul(x[1], x[1]), f.mul(x[2], x[2]),
                        f.mul(x[0], x[1]), f.mul(x[0], x[2]), f.mul(x[1], x[2])};
  E<F> s = f.zero();
  for (std::size_t k = 0; k < 6; ++k) s = f.add(s, f.mul(q[k], terms[k]));
  return s;
}

// Coefficients of x -> q(u a + v b + w c) by polarization.
template <class F, class Q>
Ternary<F> pull_back(const F& f, Q&& q, const Vec<F>& a, const Vec<F>& b, const Vec<F>& c) {
  const E<F> qa = q(a), qb = q(b), qc = q(c);
  const E<F> one = f.one();
  Ternary<F> out;
  out[0] = qa;
  out[1] = qb;
  out[2] = qc;
  out[3] = f.sub(f.sub(q(lin_comb(f, one, a, one, b)), qa), qb);
  out[4] = f.sub(f.sub(q(lin_comb(f, one, a, one, c)), qa), qc);
  out[5] = f.sub(f.sub(q(lin_comb(f, one, b, one, c)), qb), qc);
  return out;
}

// Binary form alpha s^2 + beta s t + gamma t^2 of q on the line s A + t B.
template <class F>
std::array<E<F>, 3> on_line(const F& f, const Ternary<F>& q, const Vec<F>& a, const Vec<F>& b) {
  const E<F> qa = eval_ternary(f, q, a);
  const E<F> qb = eval_ternary(f, q, b);
  const E<F> one = f.one();
  const E<F> mixed = f.sub(f.sub(eval_ternary(f, q, lin_comb(f, one, a, one, b)), qa), qb);
  return {qa, mixed, qb};
}

template <class F>
bool binary_zero(const F& f, const std::array<E<F>, 3>& b) {
  return f.is_zero(b[0]) && f.is_zero(b[1]) && f.is_zero(b[2]);
}

template <class F>
E<F> eval_binary(const F& f, const std::array<E<F>, 3>& b, const E<F>& s, const E<F>& t) {
  return f.add(f.add(f.mul(b[0], f.mul(s, s)), f.mul(b[1], f.mul(s, t))), f.mul(b[2], f.mul(t, t)));
}

bool rational_sqrt(const Rational& x, Rational& out) {
  if (x < 0) return false;
  const Integer n = numerator(x);
  const Integer d = denominator(x);
  const Integer rn = boost::multiprecision::sqrt(n);
  const Integer rd = boost::multiprecision::sqrt(d);
  if (rn * rn != n || rd * rd != d) return false;
  out = Rational(rn, rd);
  return true;
}

// Roots [s:t] of a nonzero binary quadratic; `irrational` set when some root
// is not defined over the field.
template <class F>
Mat<F> binary_roots(const F& f, const std::array<E<F>, 3>& b, bool& irrational) {
  Mat<F> roots;
  if constexpr (F::kFinite) {
    for (auto& p : projective_points(f, 2)) {
      if (f.is_zero(eval_binary(f, b, p[0], p[1]))) roots.push_back(p);
    }
  } else {
    const Rational& a = b[0];
    const Rational& m = b[1];
    const Rational& c = b[2];
    if (a == 0) {
      roots.push_back({1, 0});
      if (m != 0) roots.push_back(canonical(f, Vec<F>{-c, m}));
    } else {
      Rational root;
      if (rational_sqrt(m * m - 4 * a * c, root)) {
        roots.push_back({(-m + root) / (2 * a), 1});
        if (root != 0) roots.push_back({(-m - root) / (2 * a), 1});
      } else {
        irrational = true;
      }
    }
  }
  std::sort(roots.begin(), roots.end());
  roots.erase(std::unique(roots.begin(), roots.end()), roots.end());
  return roots;
}

// Two points spanning the line {x : L.x = 0}.
template <class F>
std::pair<Vec<F>, Vec<F>> line_points(const F& f, const Vec<F>& l) {
  Mat<F> ns = nullspace(f, Mat<F>{l}, 3);
  return {ns[0], ns[1]};
}

template <class F>
struct ConicLines {
  std::vector<Vec<F>> lines;     // linear forms of lines inside V(q)
  std::optional<Vec<F>> vertex;  // sole F-point of a pair of conjugate lines
};

template <class F>
ConicLines<F> lines_in_form(const F& f, const Ternary<F>& q) {
  ConicLines<F> out;
  if constexpr (F::kFinite) {
    for (auto& l : projective_points(f, 3)) {
      auto [a, b] = line_points(f, l);
      if (binary_zero(f, on_line(f, q, a, b))) out.lines.push_back(l);
    }
    if (out.lines.empty()) {
      Mat<F> pts;
      for (auto& p : projective_points(f, 3)) {
        if (f.is_zero(eval_ternary(f, q, p))) pts.push_back(p);
      }
      if (pts.size() == 1) out.vertex = pts.front();
    }
  } else {
    const Rational h = Rational(1, 2);
    Mat<F> sym = {{q[0], q[3] * h, q[4] * h}, {q[3] * h, q[1], q[5] * h}, {q[4] * h, q[5] * h, q[2]}};
    const std::size_t r = rank(f, sym);
    if (r == 1) {
      for (const auto& row : sym) {
        if (!is_zero_vec(f, row)) {
          out.lines.push_back(canonical(f, row));
          break;
        }
      }
    } else if (r == 2) {
      const Vec<F> s = nullspace(f, sym, 3).front();
      Mat<F> completion;
      for (std::size_t i = 0; i < 3 && completion.size() < 2; ++i) {
        Mat<F> test = completion;
        test.push_back(s);
        test.push_back(unit_vec(f, 3, i));
        if (rank(f, test) == test.size()) completion.push_back(unit_vec(f, 3, i));
      }
      bool irr = false;
      const auto roots = binary_roots(f, on_line(f, q, completion[0], completion[1]), irr);
      if (irr) {
        out.vertex = canonical(f, s);
      } else {
        for (const auto& rt : roots) {
          const Vec<F> pt = lin_comb(f, rt[0], completion[0], rt[1], completion[1]);
          out.lines.push_back(canonical(f, cross(f, s, pt)));
        }
      }
    }
  }
  return out;
}

// Rational roots [u:v] of a binary form sum c_k u^(d-k) v^k, with multiplicity.
std::size_t rational_binary_roots(std::vector<Rational> c, Mat<RationalField>& roots) {
  std::size_t found = 0;
  // Roots at v = 0 correspond to vanishing leading coefficients.
  while (!c.empty() && c.front() == 0) {
    c.erase(c.begin());
    if (found == 0) roots.push_back({1, 0});
    ++found;
  }
  // Remaining roots have v != 0; polynomial in x = u/v, high degree first.
  auto eval = [](const std::vector<Rational>& p, const Rational& x) {
    Rational s = 0;
    for (const auto& a : p) s = s * x + a;
    return s;
  };
  auto deflate = [](std::vector<Rational>& p, const Rational& x) {
    std::vector<Rational> out;
    Rational carry = 0;
    for (std::size_t k = 0; k + 1 < p.size(); ++k) {
      carry = carry * x + p[k];
      out.push_back(carry);
    }
    p = out;
  };
  bool zero_root = false;
  while (c.size() > 1 && c.back() == 0) {
    if (!zero_root) roots.push_back({0, 1});
    zero_root = true;
    c.pop_back();
    ++found;
  }
  if (c.size() <= 1) return found;
  Integer lcm = 1;
  for (const auto& a : c) lcm = boost::multiprecision::lcm(lcm, denominator(a));
  auto divisors = [](Integer n) {
    if (n < 0) n = -n;
    std::vector<Integer> out;
    for (Integer d = 1; d * d <= n; ++d) {
      if (n % d == 0) {
        out.push_back(d);
        if (d * d != n) out.push_back(n / d);
      }
    }
    return out;
  };
  const Integer lead = numerator(Rational(c.front() * lcm));
  const Integer tail = numerator(Rational(c.back() * lcm));
  std::vector<Rational> candidates;
  for (const auto& p : divisors(tail)) {
    for (const auto& q : divisors(lead)) {
      candidates.emplace_back(p, q);
      candidates.emplace_back(-p, q);
    }
  }
  std::sort(candidates.begin(), candidates.end());
  candidates.erase(std::unique(candidates.begin(), candidates.end()), candidates.end());
  for (const auto& x : candidates) {
    bool first = true;
    while (c.size() > 1 && eval(c, x) == 0) {
      if (first) roots.push_back({x, 1});
      first = false;
      deflate(c, x);
      ++found;
    }
  }
  return found;
}

// Binary forms in (u, v) as coefficient vectors, highest power of u first.
using BinPoly = std::vector<Rational>;

BinPoly bp_mul(const BinPoly& a, const BinPoly& b) {
  BinPoly out(a.size() + b.size() - 1, Rational(0));
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
  }
  return out;
}

BinPoly bp_sub(BinPoly a, const BinPoly& b) {
  for (std::size_t i = 0; i < a.size(); ++i) a[i] -= b[i];
  return a;
}

BinPoly bp_scale(const Rational& k, BinPoly a) {
  for (auto& x : a) x *= k;
  return a;
}

// Points of V(forms) when forms[0] is a smooth conic and there are at least
// two forms, by eliminating one coordinate with a resultant.
Mat<RationalField> conic_points(const RationalField& f, const std::vector<Ternary<RationalField>>& forms,
                                bool& irrational) {
  using F = RationalField;
  const Mat<F> tries = {{0, 0, 1}, {1, 0, 0}, {0, 1, 0}, {1, 0, 1}, {0, 1, 1}, {1, 1, 0}, {1, 1, 1}};
  Vec<F> p0;
  for (const auto& t : tries) {
    if (eval_ternary(f, forms[0], t) != 0) {
      p0 = t;
      break;
    }
  }
  Mat<F> basis;
  for (std::size_t i = 0; i < 3 && basis.size() < 2; ++i) {
    Mat<F> test = basis;
    test.push_back(p0);
    test.push_back(unit_vec(f, 3, i));
    if (rank(f, test) == test.size()) basis.push_back(unit_vec(f, 3, i));
  }
  basis.push_back(p0);
  std::vector<Ternary<F>> g;
  for (const auto& q : forms) {
    g.push_back(pull_back(f, [&](const Vec<F>& x) { return eval_ternary(f, q, x); }, basis[0], basis[1],
                          basis[2]));
  }
  // g = A w^2 + B(u,v) w + C(u,v).
  auto parts = [](const Ternary<F>& t) {
    return std::make_tuple(BinPoly{t[2]}, BinPoly{t[4], t[5]}, BinPoly{t[0], t[3], t[1]});
  };
  const auto [a1, b1, c1] = parts(g[0]);
  BinPoly res;
  for (std::size_t k = 1; k < g.size(); ++k) {
    const auto [a2, b2, c2] = parts(g[k]);
    const BinPoly ac = bp_sub(bp_scale(a1[0], c2), bp_scale(a2[0], c1));
    const BinPoly ab = bp_sub(bp_scale(a1[0], b2), bp_scale(a2[0], b1));
    const BinPoly bc = bp_sub(bp_mul(b1, c2), bp_mul(b2, c1));
    res = bp_sub(bp_mul(ac, ac), bp_mul(ab, bc));
    if (std::any_of(res.begin(), res.end(), [](const Rational& x) { return x != 0; })) break;
    res.clear();
  }
  if (res.empty()) throw std::logic_error("resultant vanishes for forms without a common factor");

  Mat<F> uv;
  const std::size_t found = rational_binary_roots(res, uv);
  if (found < res.size() - 1) irrational = true;
  Mat<F> out;
  for (const auto& r : uv) {
    const Vec<F> base = {r[0], r[1], 0};
    const Vec<F> apex = {0, 0, 1};
    const auto roots = binary_roots(f, on_line(f, g[0], base, apex), irrational);
    for (const auto& st : roots) {
      const Vec<F> y = lin_comb(f, st[0], base, st[1], apex);
      bool all = true;
      for (const auto& q : g) all = all && eval_ternary(f, q, y) == 0;
      if (!all) continue;
      Vec<F> x = zero_vec(f, 3);
      for (std::size_t i = 0; i < 3; ++i) x = lin_comb(f, f.one(), x, y[i], basis[i]);
      out.push_back(canonical(f, x));
    }
  }
  return out;
}

template <class F>
Vec<F> to_ambient(const F& f, const Mat<F>& plane, const Vec<F>& y) {
  Vec<F> x = row_times(f, y, plane);
  normalize_point(f, x);
  return x;
}

template <class F>
void verify_description(const F& f, const SectionDescription<F>& d, const QuadricSystem& sys) {
  for (const auto& line : d.lines) {
    for (const auto& q : sys.quadrics) {
      auto qq = [&](const Vec<F>& x) { return eval_quadric(f, q, x); };
      const E<F> one = f.one();
      const E<F> a = qq(line[0]);
      const E<F> b = qq(line[1]);
      const E<F> m = f.sub(f.sub(qq(lin_comb(f, one, line[0], one, line[1])), a), b);
      if (!f.is_zero(a) || !f.is_zero(b) || !f.is_zero(m)) {
        throw std::logic_error("reported line does not lie on " + sys.name);
      }
    }
    for (const auto& p : line) {
      if (!in_span(f, d.plane, p)) throw std::logic_error("reported line leaves the plane");
    }
  }
  for (const auto& p : d.isolated_points) {
    if (!on_variety(f, sys, p) || !in_span(f, d.plane, p)) {
      throw std::logic_error("reported point is not in the section");
    }
  }
}

}  // namespace

template <class F>
std::vector<Ternary<F>> restrict_to_plane(const F& f, const QuadricSystem& sys, const Mat<F>& plane) {
  Mat<F> rows;
  for (const auto& q : sys.quadrics) {
    const auto t = pull_back(f, [&](const Vec<F>& x) { return eval_quadric(f, q, x); }, plane[0], plane[1],
                             plane[2]);
    rows.push_back(Vec<F>(t.begin(), t.end()));
  }
  rref(f, rows);
  std::vector<Ternary<F>> out;
  for (const auto& r : rows) {
    Ternary<F> t;
    std::copy(r.begin(), r.end(), t.begin());
    out.push_back(t);
  }
  return out;
}

template <class F>
SectionDescription<F> plane_section(const F& f, const Mat<F>& plane, const QuadricSystem& sys) {
  if (plane.size() != 3 || rank(f, plane) != 3) {
    throw Error(ErrorCode::kDomain, "plane", "a plane section needs three independent spanning points");
  }
  for (const auto& r : plane) {
    if (r.size() != sys.dim) throw Error(ErrorCode::kDomain, "plane", "coordinate count mismatch");
  }
  SectionDescription<F> d;
  d.plane = plane;
  const auto forms = restrict_to_plane(f, sys, plane);
  if (forms.empty()) {
    d.contains_plane = true;
    return d;
  }

  Mat<F> pts;  // plane coordinates
  std::vector<std::pair<Vec<F>, Vec<F>>> lines;
  const ConicLines<F> cl = lines_in_form(f, forms[0]);
  if (!cl.lines.empty()) {
    for (const auto& l : cl.lines) {
      const auto [a, b] = line_points(f, l);
      std::vector<std::array<E<F>, 3>> bins;
      for (const auto& q : forms) {
        auto bq = on_line(f, q, a, b);
        if (!binary_zero(f, bq)) bins.push_back(bq);
      }
      if (bins.empty()) {
        lines.emplace_back(a, b);
        continue;
      }
      bool irr = false;
      for (const auto& st : binary_roots(f, bins.front(), irr)) {
        bool all = true;
        for (const auto& bq : bins) all = all && f.is_zero(eval_binary(f, bq, st[0], st[1]));
        if (all) pts.push_back(lin_comb(f, st[0], a, st[1], b));
      }
      if (irr) {
        // Conjugate points survive only if every restriction is proportional.
        Mat<F> m;
        for (const auto& bq : bins) m.push_back(Vec<F>(bq.begin(), bq.end()));
        if (rank(f, m) == 1) d.irrational_points = true;
      }
    }
  } else if (cl.vertex) {
    bool all = true;
    for (const auto& q : forms) all = all && f.is_zero(eval_ternary(f, q, *cl.vertex));
    if (all) pts.push_back(*cl.vertex);
    if constexpr (!F::kFinite) {
      d.irrational_points = true;
      d.notes.push_back("a pair of conjugate lines carries points over a quadratic extension");
    }
  } else if (forms.size() == 1) {
    d.conics.push_back(forms[0]);
  } else {
    if constexpr (F::kFinite) {
      for (const auto& p : projective_points(f, 3)) {
        bool all = true;
        for (const auto& q : forms) all = all && f.is_zero(eval_ternary(f, q, p));
        if (all) pts.push_back(p);
      }
    } else {
      bool irr = false;
      pts = conic_points(f, forms, irr);
      if (irr) d.irrational_points = true;
    }
  }

  for (const auto& [a, b] : lines) {
    Mat<F> basis = {row_times(f, a, plane), row_times(f, b, plane)};
    rref(f, basis);
    d.lines.push_back(std::move(basis));
  }
  std::sort(d.lines.begin(), d.lines.end());
  d.lines.erase(std::unique(d.lines.begin(), d.lines.end()), d.lines.end());
  for (const auto& y : pts) {
    const Vec<F> x = to_ambient(f, plane, y);
    bool on_line = false;
    for (const auto& l : d.lines) on_line = on_line || in_span(f, l, x);
    if (!on_line) d.isolated_points.push_back(x);
  }
  std::sort(d.isolated_points.begin(), d.isolated_points.end());
  d.isolated_points.erase(std::unique(d.isolated_points.begin(), d.isolated_points.end()),
                          d.isolated_points.end());
  verify_description(f, d, sys);
  return d;
}

std::set<Vec<PrimeField>> locus_points(const PrimeField& f, const SectionDescription<PrimeField>& d) {
  using F = PrimeField;
  std::set<Vec<F>> out;
  for (const auto& y : projective_points(f, 3)) {
    bool hit = d.contains_plane;
    for (const auto& c : d.conics) hit = hit || f.is_zero(eval_ternary(f, c, y));
    if (hit) out.insert(to_ambient(f, d.plane, y));
  }
  for (const auto& l : d.lines) {
    for (const auto& st : projective_points(f, 2)) out.insert(canonical(f, lin_comb(f, st[0], l[0], st[1], l[1])));
  }
  for (const auto& p : d.isolated_points) out.insert(p);
  return out;
}

std::set<Vec<PrimeField>> enumerate_section(const PrimeField& f, const Mat<PrimeField>& plane,
                                            const QuadricSystem& sys) {
  std::set<Vec<PrimeField>> out;
  for (const auto& y : projective_points(f, 3)) {
    const auto x = to_ambient(f, plane, y);
    if (on_variety(f, sys, x)) out.insert(x);
  }
  return out;
}

void certify(const PrimeField& f, SectionDescription<PrimeField>& d, const QuadricSystem& sys) {
  if (locus_points(f, d) != enumerate_section(f, d.plane, sys)) {
    throw Error(ErrorCode::kCertification, f.name(),
                "described section differs from the enumerated locus over " + f.name());
  }
  d.certified_over.push_back(f.name());
}

namespace {

Vec<RationalField> primitive(const Vec<RationalField>& v) {
  Integer l = 1;
  for (const auto& x : v) l = boost::multiprecision::lcm(l, denominator(x));
  Integer g = 0;
  for (const auto& x : v) g = boost::multiprecision::gcd(g, numerator(Rational(x * l)));
  Vec<RationalField> out;
  for (const auto& x : v) out.push_back(g == 0 ? x : x * l / g);
  return out;
}

Vec<PrimeField> reduce_vec(const PrimeField& f, const Vec<RationalField>& v) {
  Vec<PrimeField> out;
  for (const auto& x : v) out.push_back(f.reduce(x));
  return out;
}

}  // namespace

void certify(SectionDescription<RationalField>& d, const QuadricSystem& sys,
             const std::vector<std::uint32_t>& primes) {
  for (std::uint32_t p : primes) {
    const PrimeField f(p);
    auto bad = [&](const std::string& why) {
      throw Error(ErrorCode::kCertification, f.name(), why + " over " + f.name());
    };
    SectionDescription<PrimeField> red;
    for (const auto& r : d.plane) red.plane.push_back(reduce_vec(f, r));
    if (rank(f, red.plane) != 3) bad("plane degenerates");
    red.contains_plane = d.contains_plane;
    for (const auto& l : d.lines) {
      Mat<PrimeField> b = {reduce_vec(f, primitive(l[0])), reduce_vec(f, primitive(l[1]))};
      if (rank(f, b) != 2) bad("line degenerates");
      red.lines.push_back(b);
    }
    for (const auto& pt : d.isolated_points) red.isolated_points.push_back(canonical(f, reduce_vec(f, primitive(pt))));
    for (const auto& c : d.conics) {
      const auto v = reduce_vec(f, primitive(Vec<RationalField>(c.begin(), c.end())));
      if (is_zero_vec(f, v)) bad("conic degenerates");
      Ternary<PrimeField> t;
      std::copy(v.begin(), v.end(), t.begin());
      red.conics.push_back(t);
    }
    const auto described = locus_points(f, red);
    const auto enumerated = enumerate_section(f, red.plane, sys);
    if (described == enumerated) {
      d.certified_over.push_back(f.name());
      continue;
    }
    const bool subset = std::includes(enumerated.begin(), enumerated.end(), described.begin(), described.end());
    if (d.irrational_points && subset) {
      d.notes.push_back(f.name() + " has " + std::to_string(enumerated.size() - described.size()) +
                        " extra points from conjugate components");
      continue;
    }
    bad("reduced rational section differs from the enumerated locus");
  }
}

template <class F>
nlohmann::json section_json(const F& f, const SectionDescription<F>& d) {
  nlohmann::json j;
  nlohmann::json lines = nlohmann::json::array();
  for (const auto& l : d.lines) lines.push_back({vec_json(f, l[0]), vec_json(f, l[1])});
  nlohmann::json pts = nlohmann::json::array();
  for (const auto& p : d.isolated_points) pts.push_back(vec_json(f, p));
  nlohmann::json conics = nlohmann::json::array();
  for (const auto& c : d.conics) conics.push_back(vec_json(f, Vec<F>(c.begin(), c.end())));
  nlohmann::json plane = nlohmann::json::array();
  for (const auto& r : d.plane) plane.push_back(vec_json(f, r));
  j["field"] = f.name();
  j["plane"] = plane;
  j["lines"] = lines;
  j["isolated_points"] = pts;
  j["conics"] = conics;
  j["contains_plane"] = d.contains_plane;
  j["irrational_points"] = d.irrational_points;
  j["certified_over"] = d.certified_over;
  j["notes"] = d.notes;
  return j;
}

template std::vector<Ternary<RationalField>> restrict_to_plane(const RationalField&, const QuadricSystem&,
                                                               const Mat<RationalField>&);
template std::vector<Ternary<PrimeField>> restrict_to_plane(const PrimeField&, const QuadricSystem&,
                                                            const Mat<PrimeField>&);
template SectionDescription<RationalField> plane_section(const RationalField&, const Mat<RationalField>&,
                                                         const QuadricSystem&);
template SectionDescription<PrimeField> plane_section(const PrimeField&, const Mat<PrimeField>&,
                                                      const QuadricSystem&);
template nlohmann::json section_json(const RationalField&, const SectionDescription<RationalField>&);
template nlohmann::json section_json(const PrimeField&, const SectionDescription<PrimeField>&);

}  // namespace hssv::projgeo
