#include "hssv/projgeo/field.hpp"

namespace hssv::projgeo {

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

RationalField::Elem RationalField::inv(const Elem& a) const {
  if (a == 0) throw Error(ErrorCode::kDomain, "0", "division by zero");
  return 1 / a;
}

std::string RationalField::to_string(const Elem& a) const {
  const Integer n = numerator(a);
  const Integer d = denominator(a);
  return d == 1 ? n.str() : n.str() + "/" + d.str();
}

PrimeField::PrimeField(std::uint32_t p) : p_(p) {
  if (p >= (1u << 16) || !is_prime(p)) {
    throw Error(ErrorCode::kConfig, std::to_string(p), std::to_string(p) + " is not a supported prime");
  }
}

PrimeField::Elem PrimeField::from_int(long long v) const {
  const long long m = v % static_cast<long long>(p_);
  return static_cast<Elem>(m < 0 ? m + p_ : m);
}

PrimeField::Elem PrimeField::inv(Elem a) const {
  if (a == 0) throw Error(ErrorCode::kDomain, "0", "division by zero in " + name());
  // Fermat: a^(p-2).
  Elem result = 1;
  Elem base = a;
  for (std::uint32_t e = p_ - 2; e > 0; e >>= 1) {
    if (e & 1) result = mul(result, base);
    base = mul(base, base);
  }
  return result;
}

PrimeField::Elem PrimeField::primitive_root() const {
  if (p_ == 2) return 1;
  for (Elem g = 2; g < p_; ++g) {
    Elem x = 1;
    std::uint32_t order = 0;
    do {
      x = mul(x, g);
      ++order;
    } while (x != 1);
    if (order == p_ - 1) return g;
  }
  return 1;
}

PrimeField::Elem PrimeField::reduce(const Rational& r) const {
  const Integer n = numerator(r) % p_;
  const Integer d = denominator(r) % p_;
  if (d == 0) {
    throw Error(ErrorCode::kCertification, name(), "denominator of " + r.str() + " vanishes in " + name());
  }
  const auto ni = static_cast<long long>(n);
  const auto di = static_cast<long long>(d);
  return div(from_int(ni), from_int(di));
}

}  // namespace hssv::projgeo
