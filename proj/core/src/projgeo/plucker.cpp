#include "hssv/projgeo/plucker.hpp"

#include <algorithm>
#include <cctype>
#include <future>
#include <thread>

namespace hssv::projgeo {

std::size_t pluecker_index(std::size_t i, std::size_t j) {
  if (i < 1 || j > 5 || i >= j) {
    throw Error(ErrorCode::kDomain, "e" + std::to_string(i) + "^e" + std::to_string(j), "invalid Plücker index");
  }
  static constexpr std::size_t offset[] = {0, 4, 7, 9};
  return offset[i - 1] + (j - i - 1);
}

std::pair<std::size_t, std::size_t> pluecker_pair(std::size_t index) {
  for (std::size_t i = 1; i <= 4; ++i) {
    for (std::size_t j = i + 1; j <= 5; ++j) {
      if (pluecker_index(i, j) == index) return {i, j};
    }
  }
  throw Error(ErrorCode::kDomain, std::to_string(index), "Plücker coordinate index out of range");
}

template <class F>
BiVector<F> wedge(const F& f, const Vec<F>& u, const Vec<F>& v) {
  BiVector<F> w(10, f.zero());
  for (std::size_t i = 1; i <= 5; ++i) {
    for (std::size_t j = i + 1; j <= 5; ++j) {
      w[pluecker_index(i, j)] = f.sub(f.mul(u[i - 1], v[j - 1]), f.mul(u[j - 1], v[i - 1]));
    }
  }
  return w;
}

template <class F>
std::array<typename F::Elem, 5> pluecker_quadrics(const F& f, const BiVector<F>& w) {
  const QuadricSystem sys = plucker_system();
  std::array<typename F::Elem, 5> out;
  const auto two = f.from_int(2);
  for (std::size_t k = 0; k < 5; ++k) out[k] = f.mul(two, eval_quadric(f, sys.quadrics[k], w));
  return out;
}

template <class F>
bool is_decomposable(const F& f, const BiVector<F>& w) {
  static const QuadricSystem sys = plucker_system();
  return on_variety(f, sys, w);
}

template <class F>
Mat<F> alternating_matrix(const F& f, const BiVector<F>& w) {
  Mat<F> m(5, Vec<F>(5, f.zero()));
  for (std::size_t i = 1; i <= 5; ++i) {
    for (std::size_t j = i + 1; j <= 5; ++j) {
      const auto x = w[pluecker_index(i, j)];
      m[i - 1][j - 1] = x;
      m[j - 1][i - 1] = f.neg(x);
    }
  }
  return m;
}

template <class F>
Mat<F> subspace_of(const F& f, const BiVector<F>& w) {
  if (w.size() != 10 || is_zero_vec(f, w) || !is_decomposable(f, w)) {
    throw Error(ErrorCode::kDomain, bivector_to_string(f, w), "point is not on the Grassmannian");
  }
  // For w = u ∧ v the rows of (x_ij) are contractions of w and span <u, v>.
  Mat<F> m = alternating_matrix(f, w);
  rref(f, m);
  return m;
}

template <class F>
bool q_orbit_membership(const F& f, const BiVector<F>& w) {
  if (!grassmannian_membership(f, w)) {
    throw Error(ErrorCode::kDomain, bivector_to_string(f, w), "point is not on the Grassmannian");
  }
  return !f.is_zero(w[pluecker_index(4, 5)]);
}

template <class F>
BiVector<F> transform(const F& f, const Mat<F>& c, const BiVector<F>& w) {
  BiVector<F> out(10, f.zero());
  for (std::size_t k = 0; k < 10; ++k) {
    if (f.is_zero(w[k])) continue;
    const auto [i, j] = pluecker_pair(k);
    const BiVector<F> img = wedge(f, c[i - 1], c[j - 1]);
    out = lin_comb(f, f.one(), out, w[k], img);
  }
  return out;
}

template <class F>
Mat<F> ell_basis(const F& f) {
  return {unit_vec(f, 10, pluecker_index(1, 2)), unit_vec(f, 10, pluecker_index(1, 3))};
}

template <class F>
Mat<F> span_with_ell(const F& f, const BiVector<F>& b) {
  Mat<F> m = ell_basis(f);
  if (in_span(f, m, b)) throw Error(ErrorCode::kDomain, bivector_to_string(f, b), "point lies on the line l");
  m.insert(m.begin(), b);
  return m;
}

template <class F>
std::optional<CollinearityWitness<F>> collinearity_scan(const F& f, const BiVector<F>& b) {
  const Mat<F> wb = subspace_of(f, b);
  const Vec<F> e1 = unit_vec(f, 5, 0);
  // The 4x4 minors of [w1; w2; e1; t e2 + s e3] are linear in (t, s).
  Mat<F> coeffs;
  for (std::size_t drop = 0; drop < 5; ++drop) {
    auto minor = [&](const Vec<F>& last) {
      Mat<F> m;
      for (const Vec<F>* row : {&wb[0], &wb[1], &e1, &last}) {
        Vec<F> r;
        for (std::size_t c = 0; c < 5; ++c) {
          if (c != drop) r.push_back((*row)[c]);
        }
        m.push_back(std::move(r));
      }
      return det(f, m);
    };
    coeffs.push_back({minor(unit_vec(f, 5, 1)), minor(unit_vec(f, 5, 2))});
  }
  const Mat<F> sols = nullspace(f, coeffs, 2);
  if (sols.empty()) return std::nullopt;

  CollinearityWitness<F> w;
  w.every_parameter = sols.size() == 2;
  w.parameter = w.every_parameter ? Vec<F>{f.one(), f.zero()} : canonical(f, sols.front());
  const Vec<F> v = lin_comb(f, w.parameter[0], unit_vec(f, 5, 1), w.parameter[1], unit_vec(f, 5, 2));
  // a w1 + b w2 = c e1 + d v.
  Mat<F> sys(5, Vec<F>(4, f.zero()));
  for (std::size_t r = 0; r < 5; ++r) {
    sys[r] = {wb[0][r], wb[1][r], f.neg(e1[r]), f.neg(v[r])};
  }
  const Mat<F> ns = nullspace(f, sys, 4);
  const Vec<F>& k = ns.front();
  w.common = canonical(f, lin_comb(f, k[0], wb[0], k[1], wb[1]));
  return w;
}

BiVector<RationalField> parse_bivector(std::string_view text) {
  const RationalField f;
  BiVector<RationalField> w(10, 0);
  const std::string src(text);
  std::size_t pos = 0;
  auto fail = [&](const std::string& why) -> void {
    throw Error(ErrorCode::kParse, src, "cannot parse point '" + src + "': " + why);
  };
  auto skip = [&] {
    while (pos < src.size() && std::isspace(static_cast<unsigned char>(src[pos]))) ++pos;
  };
  auto basis_index = [&]() -> std::size_t {
    skip();
    if (pos >= src.size() || src[pos] != 'e') fail("expected e1..e5 at offset " + std::to_string(pos));
    ++pos;
    if (pos >= src.size() || src[pos] < '1' || src[pos] > '5') fail("basis index must be 1..5");
    return static_cast<std::size_t>(src[pos++] - '0');
  };
  bool first = true;
  skip();
  if (pos >= src.size()) fail("empty literal");
  while (true) {
    skip();
    if (pos >= src.size()) break;
    long long sign = 1;
    if (src[pos] == '+' || src[pos] == '-') {
      sign = src[pos] == '-' ? -1 : 1;
      ++pos;
      skip();
    } else if (!first) {
      fail("expected '+' or '-' at offset " + std::to_string(pos));
    }
    Integer coeff = 1;
    if (pos < src.size() && std::isdigit(static_cast<unsigned char>(src[pos]))) {
      std::string digits;
      while (pos < src.size() && std::isdigit(static_cast<unsigned char>(src[pos]))) digits += src[pos++];
      coeff = Integer(digits);
      skip();
      if (pos < src.size() && src[pos] == '*') ++pos;
    }
    const std::size_t i = basis_index();
    skip();
    if (pos >= src.size() || src[pos] != '^') fail("expected '^' at offset " + std::to_string(pos));
    ++pos;
    const std::size_t j = basis_index();
    if (i == j) fail("e" + std::to_string(i) + "^e" + std::to_string(i) + " vanishes");
    const Rational c = Rational(coeff) * sign;
    if (i < j) {
      w[pluecker_index(i, j)] += c;
    } else {
      w[pluecker_index(j, i)] -= c;
    }
    first = false;
  }
  if (is_zero_vec(f, w)) fail("the bivector is zero");
  return w;
}

template <class F>
std::string bivector_to_string(const F& f, const BiVector<F>& w) {
  std::string out;
  for (std::size_t k = 0; k < w.size(); ++k) {
    if (f.is_zero(w[k])) continue;
    const auto [i, j] = pluecker_pair(k);
    std::string c = f.to_string(w[k]);
    bool negative = false;
    if constexpr (!F::kFinite) {
      negative = w[k] < 0;
      if (negative) c = f.to_string(-w[k]);
    }
    if (out.empty()) {
      if (negative) out += "-";
    } else {
      out += negative ? " - " : " + ";
    }
    if (c != "1") out += c + " ";
    out += "e" + std::to_string(i) + "^e" + std::to_string(j);
  }
  return out.empty() ? "0" : out;
}

Mat<PrimeField> grassmannian_points(const PrimeField& f) {
  Mat<PrimeField> out;
  const std::uint32_t q = f.size();
  for (std::size_t c1 = 0; c1 < 5; ++c1) {
    for (std::size_t c2 = c1 + 1; c2 < 5; ++c2) {
      // Free entries: row 1 after c1 except c2, row 2 after c2.
      std::vector<std::pair<int, std::size_t>> free;
      for (std::size_t c = c1 + 1; c < 5; ++c) {
        if (c != c2) free.emplace_back(0, c);
      }
      for (std::size_t c = c2 + 1; c < 5; ++c) free.emplace_back(1, c);
      std::size_t total = 1;
      for (std::size_t k = 0; k < free.size(); ++k) total *= q;
      for (std::size_t idx = 0; idx < total; ++idx) {
        Mat<PrimeField> m(2, Vec<PrimeField>(5, 0));
        m[0][c1] = 1;
        m[1][c2] = 1;
        std::size_t rest = idx;
        for (const auto& [r, c] : free) {
          m[r][c] = static_cast<PrimeField::Elem>(rest % q);
          rest /= q;
        }
        out.push_back(canonical(f, wedge(f, m[0], m[1])));
      }
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

namespace {

struct Partial {
  SurveyResult r;
};

bool line_contains(const PrimeField& f, const Mat<PrimeField>& line, const Vec<PrimeField>& p) {
  return in_span(f, line, p);
}

void survey_point(const PrimeField& f, const QuadricSystem& sys, const Mat<PrimeField>& ell,
                  const Vec<PrimeField>& b, SurveyResult& acc) {
  const auto witness = collinearity_scan(f, b);
  const Mat<PrimeField> wb = subspace_of(f, b);
  const bool axis = in_span(f, wb, unit_vec(f, 5, 0));

  SectionDescription<PrimeField> sec = plane_section(f, span_with_ell(f, b), sys);
  certify(f, sec, sys);
  Mat<PrimeField> ell_rref = ell;
  rref(f, ell_rref);
  const bool exact = sec.lines.size() == 1 && sec.lines.front() == ell_rref && sec.isolated_points.size() == 1 &&
                     sec.isolated_points.front() == b && sec.conics.empty() && !sec.contains_plane;
  bool line_through_b = false;
  for (const auto& l : sec.lines) {
    if (l != ell_rref && line_contains(f, l, b)) line_through_b = true;
  }

  ++acc.surveyed;
  (exact ? acc.exact : acc.extra) += 1;
  if (!witness) ++acc.no_witness;
  if (witness) {
    ++acc.reading1_excluded;
    if (exact) ++acc.witness_without_extra;
  } else {
    if (exact) ++acc.reading1_exact;
    if (line_through_b) ++acc.no_witness_with_line_through_b;
  }
  if (axis) {
    ++acc.reading2_excluded;
  } else {
    (exact ? acc.reading2_exact : acc.reading2_extra) += 1;
  }
  auto& sample = exact ? acc.sample_exact : acc.sample_extra;
  if (sample.size() < 5) sample.push_back(bivector_to_string(f, b));
}

void merge(SurveyResult& into, const SurveyResult& from) {
  into.surveyed += from.surveyed;
  into.exact += from.exact;
  into.extra += from.extra;
  into.no_witness += from.no_witness;
  into.reading1_excluded += from.reading1_excluded;
  into.reading1_exact += from.reading1_exact;
  into.reading2_excluded += from.reading2_excluded;
  into.reading2_exact += from.reading2_exact;
  into.reading2_extra += from.reading2_extra;
  into.witness_without_extra += from.witness_without_extra;
  into.no_witness_with_line_through_b += from.no_witness_with_line_through_b;
  for (const auto* src : {&from.sample_exact, &from.sample_extra}) {
    auto& dst = src == &from.sample_exact ? into.sample_exact : into.sample_extra;
    for (const auto& s : *src) {
      if (dst.size() < 5) dst.push_back(s);
    }
  }
}

}  // namespace

SurveyResult dee_exhaustive_survey(std::uint32_t p) {
  const PrimeField f(p);
  const QuadricSystem sys = plucker_system();
  const Mat<PrimeField> ell = ell_basis(f);
  const Mat<PrimeField> all = grassmannian_points(f);

  SurveyResult result;
  result.p = p;
  result.grassmannian_points = all.size();
  std::vector<Vec<PrimeField>> targets;
  for (const auto& b : all) {
    if (!f.is_zero(b[pluecker_index(4, 5)])) continue;
    ++result.boundary_points;
    if (!in_span(f, ell, b)) targets.push_back(b);
  }

  // Contiguous chunks keep the merged samples in enumeration order.
  const std::size_t workers = std::max(1u, std::min(8u, std::thread::hardware_concurrency()));
  const std::size_t chunk = (targets.size() + workers - 1) / workers;
  std::vector<std::future<SurveyResult>> jobs;
  for (std::size_t start = 0; start < targets.size(); start += chunk) {
    const std::size_t stop = std::min(targets.size(), start + chunk);
    jobs.push_back(std::async(std::launch::async, [&, start, stop] {
      SurveyResult part;
      for (std::size_t k = start; k < stop; ++k) survey_point(f, sys, ell, targets[k], part);
      return part;
    }));
  }
  for (auto& j : jobs) merge(result, j.get());
  return result;
}

CheckReport survey_report(const SurveyResult& s) {
  CheckReport r;
  r.check_id = "pluecker.survey";
  r.subject = "F" + std::to_string(s.p);
  r.data = {{"grassmannian_points", s.grassmannian_points},
            {"boundary_points", s.boundary_points},
            {"surveyed", s.surveyed},
            {"section_exactly_b_and_l", s.exact},
            {"section_with_extra_components", s.extra},
            {"no_collinearity_witness", s.no_witness},
            {"reading_lines_meeting_l", {{"excluded", s.reading1_excluded}, {"exact_among_rest", s.reading1_exact}}},
            {"reading_lines_through_axis_point",
             {{"excluded", s.reading2_excluded},
              {"exact_among_rest", s.reading2_exact},
              {"extra_among_rest", s.reading2_extra}}},
            {"sample_extra", s.sample_extra},
            {"sample_exact", s.sample_exact}};
  if (s.witness_without_extra != 0) {
    r.fail(std::to_string(s.witness_without_extra) + " points with a collinearity witness have no extra component");
  }
  if (s.no_witness_with_line_through_b != 0) {
    r.fail(std::to_string(s.no_witness_with_line_through_b) +
           " points without a witness have an extra line through b");
  }
  if (s.exact + s.extra != s.surveyed) r.fail("classification counts do not add up");
  r.append_note(s.exact == 0 ? "no b in D \\ l has section exactly {b} ∪ l"
                             : std::to_string(s.exact) + " points b have section exactly {b} ∪ l");
  return r;
}

CheckReport survey_agreement(const std::vector<SurveyResult>& results) {
  CheckReport r;
  r.check_id = "pluecker.survey.verdict";
  std::string subject;
  nlohmann::json per = nlohmann::json::object();
  for (const auto& s : results) {
    subject += (subject.empty() ? "F" : ",F") + std::to_string(s.p);
    per["F" + std::to_string(s.p)] = s.exact > 0;
  }
  r.subject = subject;
  r.data["some_b_exact"] = per;
  bool agree = true;
  for (const auto& s : results) agree = agree && ((s.exact > 0) == (results.front().exact > 0));
  if (results.size() < 2) {
    r.status = Status::kIndeterminate;
    r.notes = "fewer than two primes surveyed";
  } else if (!agree) {
    r.fail("primes disagree on whether some b reaches exactly {b} ∪ l");
  } else {
    r.notes = results.front().exact > 0 ? "every prime has points b with section exactly {b} ∪ l"
                                        : "no prime has a point b with section exactly {b} ∪ l";
  }
  return r;
}

SectionDescription<RationalField> pluecker_section(const BiVector<RationalField>& b,
                                                   const std::vector<std::uint32_t>& primes) {
  const RationalField f;
  const QuadricSystem sys = plucker_system();
  auto sec = plane_section(f, span_with_ell(f, b), sys);
  certify(sec, sys, primes);
  return sec;
}

#define HSSV_INSTANTIATE(F)                                                                  \
  template BiVector<F> wedge(const F&, const Vec<F>&, const Vec<F>&);                        \
  template std::array<F::Elem, 5> pluecker_quadrics(const F&, const BiVector<F>&);           \
  template bool is_decomposable(const F&, const BiVector<F>&);                               \
  template Mat<F> alternating_matrix(const F&, const BiVector<F>&);                          \
  template Mat<F> subspace_of(const F&, const BiVector<F>&);                                 \
  template bool q_orbit_membership(const F&, const BiVector<F>&);                            \
  template BiVector<F> transform(const F&, const Mat<F>&, const BiVector<F>&);               \
  template Mat<F> ell_basis(const F&);                                                       \
  template Mat<F> span_with_ell(const F&, const BiVector<F>&);                               \
  template std::optional<CollinearityWitness<F>> collinearity_scan(const F&, const BiVector<F>&); \
  template std::string bivector_to_string(const F&, const BiVector<F>&);

HSSV_INSTANTIATE(RationalField)
HSSV_INSTANTIATE(PrimeField)

#undef HSSV_INSTANTIATE

}  // namespace hssv::projgeo
