#pragma once

// Reference computations written independently of the library: Gram
// matrices from the Bourbaki diagrams, positive roots by string closure,
// reflections, and brute-force projective enumeration.

#include <algorithm>
#include <cstdint>
#include <map>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

namespace oracle {

using Coeffs = std::vector<int>;
using Gram = std::vector<std::vector<long>>;

// Symmetric form on simple roots, short roots of squared length 2.
inline Gram gram(char family, int n) {
  Gram g(n, std::vector<long>(n, 0));
  auto bond = [&](int i, int j, long v) { g[i - 1][j - 1] = g[j - 1][i - 1] = v; };
  auto len = [&](int i, long v) { g[i - 1][i - 1] = v; };
  switch (family) {
    case 'A':
      for (int i = 1; i <= n; ++i) len(i, 2);
      for (int i = 1; i < n; ++i) bond(i, i + 1, -1);
      break;
    case 'B':
      for (int i = 1; i < n; ++i) len(i, 4);
      len(n, 2);
      for (int i = 1; i < n - 1; ++i) bond(i, i + 1, -2);
      bond(n - 1, n, -2);
      break;
    case 'C':
      for (int i = 1; i < n; ++i) len(i, 2);
      len(n, 4);
      for (int i = 1; i < n - 1; ++i) bond(i, i + 1, -1);
      bond(n - 1, n, -2);
      break;
    case 'D':
      for (int i = 1; i <= n; ++i) len(i, 2);
      for (int i = 1; i < n - 1; ++i) bond(i, i + 1, -1);
      bond(n - 2, n, -1);
      break;
    case 'E':
      for (int i = 1; i <= n; ++i) len(i, 2);
      bond(1, 3, -1);
      bond(2, 4, -1);
      for (int i = 3; i < n; ++i) bond(i, i + 1, -1);
      break;
    case 'F':
      len(1, 4), len(2, 4), len(3, 2), len(4, 2);
      bond(1, 2, -2);
      bond(2, 3, -2);
      bond(3, 4, -1);
      break;
    case 'G':
      len(1, 2), len(2, 6);
      bond(1, 2, -3);
      break;
    default:
      throw std::invalid_argument("family");
  }
  return g;
}

inline long form(const Gram& g, const Coeffs& a, const Coeffs& b) {
  long s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = 0; j < b.size(); ++j) s += a[i] * g[i][j] * b[j];
  }
  return s;
}

// <a, b> = 2 (a, b) / (b, b).
inline long pairing(const Gram& g, const Coeffs& a, const Coeffs& b) { return 2 * form(g, a, b) / form(g, b, b); }

inline Coeffs simple(int n, int i) {
  Coeffs c(n, 0);
  c[i] = 1;
  return c;
}

inline Coeffs add(Coeffs a, const Coeffs& b, int k = 1) {
  for (std::size_t i = 0; i < a.size(); ++i) a[i] += k * b[i];
  return a;
}

// Positive roots: beta + alpha_i is a root iff p - <beta, alpha_i> > 0,
// p the length of the alpha_i-string below beta.
inline std::set<Coeffs> positive_roots(const Gram& g) {
  const int n = static_cast<int>(g.size());
  std::set<Coeffs> roots;
  std::vector<Coeffs> layer;
  for (int i = 0; i < n; ++i) layer.push_back(simple(n, i));
  roots.insert(layer.begin(), layer.end());
  while (!layer.empty()) {
    std::set<Coeffs> next;
    for (const auto& b : layer) {
      for (int i = 0; i < n; ++i) {
        const Coeffs ai = simple(n, i);
        if (b == ai) continue;
        int p = 0;
        while (roots.count(add(b, ai, -(p + 1)))) ++p;
        if (p - pairing(g, b, ai) > 0) next.insert(add(b, ai));
      }
    }
    layer.assign(next.begin(), next.end());
    roots.insert(next.begin(), next.end());
  }
  return roots;
}

inline Coeffs reflect(const Gram& g, const Coeffs& alpha, const Coeffs& beta) {
  return add(beta, alpha, -static_cast<int>(pairing(g, beta, alpha)));
}

// Connected components of a weight set under steps by a given list of roots.
inline std::vector<std::size_t> component_sizes(const std::vector<Coeffs>& weights, const std::vector<Coeffs>& steps) {
  std::vector<int> comp(weights.size(), -1);
  std::vector<std::size_t> sizes;
  for (std::size_t s = 0; s < weights.size(); ++s) {
    if (comp[s] >= 0) continue;
    const int id = static_cast<int>(sizes.size());
    sizes.push_back(0);
    std::vector<std::size_t> stack{s};
    comp[s] = id;
    while (!stack.empty()) {
      const std::size_t u = stack.back();
      stack.pop_back();
      ++sizes.back();
      for (std::size_t v = 0; v < weights.size(); ++v) {
        if (comp[v] >= 0) continue;
        for (const auto& st : steps) {
          if (add(weights[u], st) == weights[v] || add(weights[u], st, -1) == weights[v]) {
            comp[v] = id;
            stack.push_back(v);
            break;
          }
        }
      }
    }
  }
  std::sort(sizes.begin(), sizes.end());
  return sizes;
}

// Gaussian binomial [n choose k]_q.
inline std::uint64_t gaussian_binomial(std::uint64_t n, std::uint64_t k, std::uint64_t q) {
  std::uint64_t num = 1, den = 1;
  for (std::uint64_t i = 0; i < k; ++i) {
    std::uint64_t a = 1, b = 1;
    for (std::uint64_t j = 0; j < n - i; ++j) a *= q;
    for (std::uint64_t j = 0; j < i + 1; ++j) b *= q;
    num *= a - 1;
    den *= b - 1;
  }
  return num / den;
}

// Canonical projective points of P^{n-1}(F_p), first nonzero coordinate 1.
inline std::vector<std::vector<std::uint32_t>> points(std::uint32_t p, std::size_t n) {
  std::vector<std::vector<std::uint32_t>> out;
  std::vector<std::uint32_t> v(n, 0);
  std::uint64_t total = 1;
  for (std::size_t i = 0; i < n; ++i) total *= p;
  for (std::uint64_t idx = 1; idx < total; ++idx) {
    std::uint64_t rest = idx;
    for (std::size_t i = n; i-- > 0;) {
      v[i] = static_cast<std::uint32_t>(rest % p);
      rest /= p;
    }
    const auto lead = std::find_if(v.begin(), v.end(), [](std::uint32_t x) { return x != 0; });
    if (*lead == 1) out.push_back(v);
  }
  return out;
}

}  // namespace oracle
