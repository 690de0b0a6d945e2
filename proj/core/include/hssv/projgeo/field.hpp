#pragma once

// Exact scalar fields used by the projective-geometry labs. Algorithms are
// templates over a field context F exposing Elem and the arithmetic below.

#include <cstdint>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

#include "hssv/error.hpp"

namespace hssv::projgeo {

using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

bool is_prime(std::uint64_t n);

class RationalField {
 public:
  using Elem = Rational;

  static constexpr bool kFinite = false;

  Elem zero() const { return 0; }
  Elem one() const { return 1; }
  Elem from_int(long long v) const { return Elem(v); }
  Elem add(const Elem& a, const Elem& b) const { return a + b; }
  Elem sub(const Elem& a, const Elem& b) const { return a - b; }
  Elem mul(const Elem& a, const Elem& b) const { return a * b; }
  Elem neg(const Elem& a) const { return -a; }
  Elem inv(const Elem& a) const;
  Elem div(const Elem& a, const Elem& b) const { return mul(a, inv(b)); }
  bool is_zero(const Elem& a) const { return a == 0; }
  std::string to_string(const Elem& a) const;
  std::string name() const { return "Q"; }
};

class PrimeField {
 public:
  using Elem = std::uint32_t;

  static constexpr bool kFinite = true;

  // Throws kConfig unless p is a prime below 2^16.
  explicit PrimeField(std::uint32_t p);

  std::uint32_t p() const { return p_; }
  std::uint32_t size() const { return p_; }

  Elem zero() const { return 0; }
  Elem one() const { return 1; }
  Elem from_int(long long v) const;
  Elem add(Elem a, Elem b) const { return (a + b) % p_; }
  Elem sub(Elem a, Elem b) const { return (a + p_ - b) % p_; }
  Elem mul(Elem a, Elem b) const { return static_cast<Elem>((std::uint64_t{a} * b) % p_); }
  Elem neg(Elem a) const { return a == 0 ? 0 : p_ - a; }
  Elem inv(Elem a) const;
  Elem div(Elem a, Elem b) const { return mul(a, inv(b)); }
  bool is_zero(Elem a) const { return a == 0; }
  std::string to_string(Elem a) const { return std::to_string(a); }
  std::string name() const { return "F" + std::to_string(p_); }
  // A generator of the multiplicative group.
  Elem primitive_root() const;
  // Reduction of a rational; throws kCertification when p divides the denominator.
  Elem reduce(const Rational& r) const;

 private:
  std::uint32_t p_;
};

}  // namespace hssv::projgeo
