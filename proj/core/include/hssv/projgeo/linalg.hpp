#pragma once

// Dense exact linear algebra over a field context.

#include <cstddef>
#include <vector>

namespace hssv::projgeo {

template <class F>
using Vec = std::vector<typename F::Elem>;
template <class F>
using Mat = std::vector<Vec<F>>;

template <class F>
bool is_zero_vec(const F& f, const Vec<F>& v) {
  for (const auto& x : v) {
    if (!f.is_zero(x)) return false;
  }
  return true;
}

template <class F>
Vec<F> zero_vec(const F& f, std::size_t n) {
  return Vec<F>(n, f.zero());
}

template <class F>
Vec<F> unit_vec(const F& f, std::size_t n, std::size_t i) {
  Vec<F> v(n, f.zero());
  v[i] = f.one();
  return v;
}

template <class F>
Vec<F> lin_comb(const F& f, const typename F::Elem& a, const Vec<F>& x, const typename F::Elem& b,
                const Vec<F>& y) {
  Vec<F> out(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) out[i] = f.add(f.mul(a, x[i]), f.mul(b, y[i]));
  return out;
}

template <class F>
typename F::Elem dot(const F& f, const Vec<F>& x, const Vec<F>& y) {
  auto s = f.zero();
  for (std::size_t i = 0; i < x.size(); ++i) s = f.add(s, f.mul(x[i], y[i]));
  return s;
}

// Scales so the first nonzero coordinate is 1. The zero vector is left alone.
template <class F>
void normalize_point(const F& f, Vec<F>& v) {
  for (const auto& x : v) {
    if (!f.is_zero(x)) {
      const auto s = f.inv(x);
      for (auto& y : v) y = f.mul(y, s);
      return;
    }
  }
}

template <class F>
Vec<F> canonical(const F& f, Vec<F> v) {
  normalize_point(f, v);
  return v;
}

// In-place reduced row echelon form; drops zero rows. Returns pivot columns.
template <class F>
std::vector<std::size_t> rref(const F& f, Mat<F>& m) {
  std::vector<std::size_t> pivots;
  if (m.empty()) return pivots;
  const std::size_t cols = m.front().size();
  std::size_t row = 0;
  for (std::size_t c = 0; c < cols && row < m.size(); ++c) {
    std::size_t sel = row;
    while (sel < m.size() && f.is_zero(m[sel][c])) ++sel;
    if (sel == m.size()) continue;
    std::swap(m[row], m[sel]);
    const auto s = f.inv(m[row][c]);
    for (auto& x : m[row]) x = f.mul(x, s);
    for (std::size_t r = 0; r < m.size(); ++r) {
      if (r == row || f.is_zero(m[r][c])) continue;
      const auto k = m[r][c];
      for (std::size_t j = 0; j < cols; ++j) m[r][j] = f.sub(m[r][j], f.mul(k, m[row][j]));
    }
    pivots.push_back(c);
    ++row;
  }
  m.resize(row);
  return pivots;
}

template <class F>
std::size_t rank(const F& f, Mat<F> m) {
  return rref(f, m).size();
}

// Basis of {x : m x = 0}.
template <class F>
Mat<F> nullspace(const F& f, Mat<F> m, std::size_t cols) {
  const auto pivots = rref(f, m);
  std::vector<bool> is_pivot(cols, false);
  for (auto p : pivots) is_pivot[p] = true;
  Mat<F> out;
  for (std::size_t free = 0; free < cols; ++free) {
    if (is_pivot[free]) continue;
    Vec<F> v(cols, f.zero());
    v[free] = f.one();
    for (std::size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = f.neg(m[r][free]);
    out.push_back(std::move(v));
  }
  return out;
}

// x lies in the row space of `basis` (rows).
template <class F>
bool in_span(const F& f, const Mat<F>& basis, const Vec<F>& x) {
  Mat<F> m = basis;
  const std::size_t r = rank(f, m);
  m.push_back(x);
  return rank(f, m) == r;
}

template <class F>
Vec<F> cross(const F& f, const Vec<F>& a, const Vec<F>& b) {
  return {f.sub(f.mul(a[1], b[2]), f.mul(a[2], b[1])), f.sub(f.mul(a[2], b[0]), f.mul(a[0], b[2])),
          f.sub(f.mul(a[0], b[1]), f.mul(a[1], b[0]))};
}

template <class F>
typename F::Elem det3(const F& f, const Mat<F>& m) {
  return dot(f, m[0], cross(f, m[1], m[2]));
}

// Determinant of a square matrix by elimination.
template <class F>
typename F::Elem det(const F& f, Mat<F> m) {
  const std::size_t n = m.size();
  auto d = f.one();
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t sel = c;
    while (sel < n && f.is_zero(m[sel][c])) ++sel;
    if (sel == n) return f.zero();
    if (sel != c) {
      std::swap(m[sel], m[c]);
      d = f.neg(d);
    }
    d = f.mul(d, m[c][c]);
    const auto s = f.inv(m[c][c]);
    for (std::size_t r = c + 1; r < n; ++r) {
      if (f.is_zero(m[r][c])) continue;
      const auto k = f.mul(m[r][c], s);
      for (std::size_t j = c; j < n; ++j) m[r][j] = f.sub(m[r][j], f.mul(k, m[c][j]));
    }
  }
  return d;
}

// Row vector times matrix.
template <class F>
Vec<F> row_times(const F& f, const Vec<F>& x, const Mat<F>& m) {
  Vec<F> out(m.front().size(), f.zero());
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (f.is_zero(x[i])) continue;
    for (std::size_t j = 0; j < out.size(); ++j) out[j] = f.add(out[j], f.mul(x[i], m[i][j]));
  }
  return out;
}

// All points of P^{n-1}(F_q) in canonical form, ordered by leading position
// and then lexicographically.
template <class F>
Mat<F> projective_points(const F& f, std::size_t n) {
  Mat<F> out;
  const auto q = f.size();
  for (std::size_t lead = 0; lead < n; ++lead) {
    const std::size_t free = n - lead - 1;
    std::size_t total = 1;
    for (std::size_t k = 0; k < free; ++k) total *= q;
    for (std::size_t idx = 0; idx < total; ++idx) {
      Vec<F> v(n, f.zero());
      v[lead] = f.one();
      std::size_t rest = idx;
      for (std::size_t k = n; k-- > lead + 1;) {
        v[k] = static_cast<typename F::Elem>(rest % q);
        rest /= q;
      }
      out.push_back(std::move(v));
    }
  }
  return out;
}

}  // namespace hssv::projgeo
