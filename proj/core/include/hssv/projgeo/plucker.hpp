#pragma once

// The Grassmannian G(2,5) ⊂ P^9 in Plücker coordinates, the fixed line
// l = {[e1 ∧ (t e2 + s e3)]}, its stabilizer orbit x45 != 0 and the boundary
// divisor D = {x45 = 0}.

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "hssv/projgeo/field.hpp"
#include "hssv/projgeo/linalg.hpp"
#include "hssv/projgeo/section.hpp"
#include "hssv/report.hpp"

namespace hssv::projgeo {

// Index of x_ij, 1 <= i < j <= 5, in the order 12, 13, 14, 15, 23, ..., 45.
std::size_t pluecker_index(std::size_t i, std::size_t j);
std::pair<std::size_t, std::size_t> pluecker_pair(std::size_t index);

// Ten coordinates on the basis e_i ∧ e_j.
template <class F>
using BiVector = Vec<F>;

template <class F>
BiVector<F> wedge(const F& f, const Vec<F>& u, const Vec<F>& v);

// Coordinates of ω ∧ ω on e1234, e1235, e1245, e1345, e2345.
template <class F>
std::array<typename F::Elem, 5> pluecker_quadrics(const F& f, const BiVector<F>& w);

template <class F>
bool is_decomposable(const F& f, const BiVector<F>& w);

// The alternating 5x5 matrix (x_ij).
template <class F>
Mat<F> alternating_matrix(const F& f, const BiVector<F>& w);

// Basis of the 2-plane W with [w] = [∧^2 W]; throws kDomain when w is zero
// or not decomposable.
template <class F>
Mat<F> subspace_of(const F& f, const BiVector<F>& w);

template <class F>
bool grassmannian_membership(const F& f, const BiVector<F>& w) {
  return !is_zero_vec(f, w) && is_decomposable(f, w);
}

// x45 != 0; throws kDomain off the Grassmannian.
template <class F>
bool q_orbit_membership(const F& f, const BiVector<F>& w);

// ∧^2 of the row action e_i -> row i of c.
template <class F>
BiVector<F> transform(const F& f, const Mat<F>& c, const BiVector<F>& w);

// e1∧e2 and e1∧e3.
template <class F>
Mat<F> ell_basis(const F& f);

// Rows b, e1∧e2, e1∧e3; throws kDomain when b lies on l.
template <class F>
Mat<F> span_with_ell(const F& f, const BiVector<F>& b);

template <class F>
struct CollinearityWitness {
  Vec<F> parameter;  // canonical [t : s]
  Vec<F> common;     // canonical vector of W_b ∩ <e1, t e2 + s e3>
  bool every_parameter = false;
};

// Some [t:s] with W_b meeting <e1, t e2 + s e3>, if any; throws kDomain off
// the Grassmannian.
template <class F>
std::optional<CollinearityWitness<F>> collinearity_scan(const F& f, const BiVector<F>& b);

// "e2^e4 - 3 e1^e5"; throws kParse.
BiVector<RationalField> parse_bivector(std::string_view text);

template <class F>
std::string bivector_to_string(const F& f, const BiVector<F>& w);

// All F_p-points of G(2,5), canonical, from the reduced echelon cells.
Mat<PrimeField> grassmannian_points(const PrimeField& f);

struct SurveyResult {
  std::uint32_t p = 0;
  std::size_t grassmannian_points = 0;
  std::size_t boundary_points = 0;  // |D|, l included
  std::size_t surveyed = 0;         // |D \ l|
  std::size_t exact = 0;            // section exactly {b} ∪ l
  std::size_t extra = 0;            // further components
  std::size_t no_witness = 0;
  // Reading 1: lines of G(2,5) meeting l (collinearity witness).
  std::size_t reading1_excluded = 0;
  std::size_t reading1_exact = 0;
  // Reading 2: lines of P^4 through the axis point [e1] (e1 in W_b).
  std::size_t reading2_excluded = 0;
  std::size_t reading2_exact = 0;
  std::size_t reading2_extra = 0;
  // Internal invariants; both must stay zero.
  std::size_t witness_without_extra = 0;
  std::size_t no_witness_with_line_through_b = 0;
  std::vector<std::string> sample_extra;
  std::vector<std::string> sample_exact;
};

// Enumerates every b in D(F_p) \ l; runs the collinearity scan and the
// certified plane section span<b, l> ∩ G(2,5) on each.
SurveyResult dee_exhaustive_survey(std::uint32_t p);

CheckReport survey_report(const SurveyResult& s);
// Compares the qualitative verdict (does any b reach exactly {b} ∪ l) across primes.
CheckReport survey_agreement(const std::vector<SurveyResult>& results);

// Certified rational plane section span<b, l> ∩ G(2,5) with the given primes.
SectionDescription<RationalField> pluecker_section(const BiVector<RationalField>& b,
                                                   const std::vector<std::uint32_t>& primes);

}  // namespace hssv::projgeo
