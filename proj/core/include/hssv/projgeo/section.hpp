#pragma once

// Common zero loci of quadric systems restricted to projective planes,
// described exactly as lines, isolated points and irreducible conics.

#include <array>
#include <cstddef>
#include <set>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "hssv/projgeo/field.hpp"
#include "hssv/projgeo/linalg.hpp"

namespace hssv::projgeo {

// coeff * x_i * x_j
struct QuadTerm {
  long long coeff;
  std::size_t i;
  std::size_t j;
};
using Quadric = std::vector<QuadTerm>;

struct QuadricSystem {
  std::string name;
  std::size_t dim = 0;  // number of homogeneous coordinates
  std::vector<Quadric> quadrics;
};

// The five 4x4 Pfaffians on the ten Plücker coordinates x_ij (i < j,
// lexicographic order 12, 13, ..., 45), indexed by the omitted basis vector
// 5, 4, 3, 2, 1.
QuadricSystem plucker_system();
// 2x2 minors of the 2x3 matrix (z_ab); coordinates z00 z01 z02 z10 z11 z12.
QuadricSystem segre_system();

template <class F>
typename F::Elem eval_quadric(const F& f, const Quadric& q, const Vec<F>& x) {
  auto s = f.zero();
  for (const auto& t : q) s = f.add(s, f.mul(f.from_int(t.coeff), f.mul(x[t.i], x[t.j])));
  return s;
}

template <class F>
bool on_variety(const F& f, const QuadricSystem& sys, const Vec<F>& x) {
  for (const auto& q : sys.quadrics) {
    if (!f.is_zero(eval_quadric(f, q, x))) return false;
  }
  return true;
}

// Ternary quadratic form; coefficient order uu, vv, ww, uv, uw, vw.
template <class F>
using Ternary = std::array<typename F::Elem, 6>;

// Restrictions of the system to the plane spanned by the three rows,
// reduced to a linearly independent list.
template <class F>
std::vector<Ternary<F>> restrict_to_plane(const F& f, const QuadricSystem& sys, const Mat<F>& plane);

template <class F>
struct SectionDescription {
  Mat<F> plane;                   // 3 rows as given
  std::vector<Mat<F>> lines;      // 2-row reduced echelon bases
  Mat<F> isolated_points;         // canonical, off every listed line
  std::vector<Ternary<F>> conics; // irreducible conic components, plane coordinates
  bool contains_plane = false;
  // Points defined only over an extension may exist (rational field only).
  bool irrational_points = false;
  std::vector<std::string> certified_over;
  std::vector<std::string> notes;

  std::size_t component_count() const {
    return lines.size() + isolated_points.size() + conics.size() + (contains_plane ? 1 : 0);
  }
};

// Throws kDomain unless the plane has exactly three independent rows. Every
// reported component is substituted back into the system before returning.
template <class F>
SectionDescription<F> plane_section(const F& f, const Mat<F>& plane, const QuadricSystem& sys);

// Finite fields: all points of the described locus / all points of plane ∩ variety.
std::set<Vec<PrimeField>> locus_points(const PrimeField& f, const SectionDescription<PrimeField>& d);
std::set<Vec<PrimeField>> enumerate_section(const PrimeField& f, const Mat<PrimeField>& plane,
                                            const QuadricSystem& sys);

// Compares the description with exhaustive enumeration; throws kCertification
// on any mismatch and records the field otherwise.
void certify(const PrimeField& f, SectionDescription<PrimeField>& d, const QuadricSystem& sys);
// Reduces the rational description modulo each prime and compares with the
// enumerated locus over that prime. Throws kCertification on mismatch.
void certify(SectionDescription<RationalField>& d, const QuadricSystem& sys, const std::vector<std::uint32_t>& primes);

template <class F>
nlohmann::json elem_json(const F& f, const typename F::Elem& e) {
  if constexpr (F::kFinite) {
    return e;
  } else {
    return f.to_string(e);
  }
}

template <class F>
nlohmann::json vec_json(const F& f, const Vec<F>& v) {
  nlohmann::json j = nlohmann::json::array();
  for (const auto& x : v) j.push_back(elem_json(f, x));
  return j;
}

template <class F>
nlohmann::json section_json(const F& f, const SectionDescription<F>& d);

}  // namespace hssv::projgeo
