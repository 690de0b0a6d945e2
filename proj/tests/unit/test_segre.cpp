#include <doctest.h>

#include "../common/oracles.hpp"
#include "hssv/projgeo/segre.hpp"

using namespace hssv;
using namespace hssv::projgeo;

namespace {

using PVec = std::vector<std::uint32_t>;

bool on_segre(const PVec& z, std::uint32_t q) {
  // 2x2 minors of [[z0 z1 z2], [z3 z4 z5]].
  for (int j = 0; j < 3; ++j) {
    for (int k = j + 1; k < 3; ++k) {
      if ((z[j] * z[3 + k]) % q != (z[k] * z[3 + j]) % q) return false;
    }
  }
  return true;
}

// Number of F_q points of span(rows) on the Segre variety.
std::size_t brute_count(std::uint32_t q, const std::vector<PVec>& rows) {
  std::set<PVec> seen;
  for (const auto& c : oracle::points(q, rows.size())) {
    PVec z(6, 0);
    for (std::size_t r = 0; r < rows.size(); ++r) {
      for (std::size_t k = 0; k < 6; ++k) z[k] = (z[k] + c[r] * rows[r][k]) % q;
    }
    if (on_segre(z, q)) seen.insert(z);
  }
  return seen.size();
}

PVec seg(const PVec& x, const PVec& y, std::uint32_t q) {
  PVec z;
  for (int a = 0; a < 2; ++a) {
    for (int b = 0; b < 3; ++b) z.push_back((x[a] * y[b]) % q);
  }
  return z;
}

}  // namespace

TEST_CASE("Segre point counts") {
  for (std::uint32_t q : {2u, 3u}) {
    std::size_t n = 0;
    for (const auto& z : oracle::points(q, 6)) n += on_segre(z, q);
    CHECK(n == (q + 1) * (q * q + q + 1));
    const SegreFitting s = segre_fitting(q);
    CHECK(s.variety_points == n);
  }
  CHECK(segre_fitting(2).variety_points == 21);
}

TEST_CASE("Segre fitting over F3") {
  const SegreFitting s = segre_fitting(3);
  // Direct counts: 13 points y, 4 points a, 12 points b != y; and 4 x, 13 lines L, 3 a != x, 9 b off L.
  CHECK(s.a_configs == 13 * 4 * 12);
  CHECK(s.b_configs == 4 * 13 * 3 * 9);
  CHECK(s.a_failures == 0);
  CHECK(s.b_failures == 0);
  CHECK(s.exact_pairs_direct == s.b_configs);
  CHECK(s.exact_pairs_with_10_line == 0);
  CHECK(s.orbit_size == s.b_configs);
  CHECK(s.orbit_invalid == 0);
  CHECK(segre_fitting_report(s).status == Status::kPass);
}

TEST_CASE("Segre sections by brute force") {
  const std::uint32_t q = 3;
  const PrimeField f(q);
  // {x} x L with x = [1:0], L = <[1:0:0], [0:1:0]>; point ([0:1], [0:0:1]).
  const PVec l0 = seg({1, 0}, {1, 0, 0}, q), l1 = seg({1, 0}, {0, 1, 0}, q), pt = seg({0, 1}, {0, 0, 1}, q);
  CHECK(brute_count(q, {l0, l1, pt}) == q + 2);
  const auto line = segre_line_01(f, {1, 0}, {{1, 0, 0}, {0, 1, 0}});
  const Vec<PrimeField> point(pt.begin(), pt.end());
  Mat<PrimeField> plane = line;
  plane.push_back(point);
  CHECK(is_point_plus_line(f, plane_section(f, plane, segre_system()), line, point));
  // P^1 x {y} with a point: the joining (0,1) line adds q points.
  const PVec m0 = seg({1, 0}, {1, 0, 0}, q), m1 = seg({0, 1}, {1, 0, 0}, q), pb = seg({1, 0}, {0, 1, 0}, q);
  CHECK(brute_count(q, {m0, m1, pb}) == 2 * q + 1);
}
