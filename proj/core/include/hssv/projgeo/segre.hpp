#pragma once

// The Segre embedding P^1 x P^2 in P^5 over a prime field and the fitting
// configurations "one line plus one point".

#include <cstdint>
#include <vector>

#include "hssv/projgeo/field.hpp"
#include "hssv/projgeo/linalg.hpp"
#include "hssv/projgeo/section.hpp"
#include "hssv/report.hpp"

namespace hssv::projgeo {

// z_ab = x_a y_b in the order z00 z01 z02 z10 z11 z12, canonical.
Vec<PrimeField> segre_point(const PrimeField& f, const Vec<PrimeField>& x, const Vec<PrimeField>& y);

// {x} x L with L = <y1, y2> a line of P^2; 2-row reduced echelon basis in P^5.
Mat<PrimeField> segre_line_01(const PrimeField& f, const Vec<PrimeField>& x, const Mat<PrimeField>& l);
// P^1 x {y}.
Mat<PrimeField> segre_line_10(const PrimeField& f, const Vec<PrimeField>& y);

// Section span<line, point> ∩ Segre is exactly the line and the point.
bool is_point_plus_line(const PrimeField& f, const SectionDescription<PrimeField>& d, const Mat<PrimeField>& line,
                        const Vec<PrimeField>& point);

struct SegreFitting {
  std::uint32_t q = 0;
  std::size_t variety_points = 0;
  std::size_t expected_points = 0;  // (q+1)(q^2+q+1)
  // (a) lines P^1 x {y}, points (a, b) with b != y.
  std::size_t a_configs = 0;
  std::size_t a_failures = 0;
  // (b) lines {x} x L, points (a, b) with a != x, b off L.
  std::size_t b_configs = 0;
  std::size_t b_failures = 0;
  // Point-line pairs in P^5 with exact section, found by a loop over all
  // variety points and all lines contained in the variety.
  std::size_t exact_pairs_direct = 0;
  std::size_t exact_pairs_with_10_line = 0;
  // (c) orbit of one valid configuration under GL2 x GL3.
  std::size_t orbit_size = 0;
  std::size_t orbit_invalid = 0;
};

SegreFitting segre_fitting(std::uint32_t q);
CheckReport segre_fitting_report(const SegreFitting& s);
CheckReport segre_fitting_report(std::uint32_t q);

}  // namespace hssv::projgeo
