// Exact coefficient fields: the rationals (GMP-backed) and prime fields F_p.
//
// Both field types expose the same member API so that the linear algebra and
// everything downstream can be written once, generically.  No floating point
// exists anywhere in this library.
#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

#include <gmpxx.h>

namespace qhh {

// Arbitrary-precision rational numbers.
struct RationalField {
  using Elem = mpq_class;

  static constexpr std::uint64_t characteristic() { return 0; }

  Elem zero() const { return Elem(0); }
  Elem one() const { return Elem(1); }
  Elem from_int(long long x) const {
    Elem e;
    e = static_cast<long>(x);  // mpq_class has no long long ctor on LP64 this is lossless
    return e;
  }
  bool is_zero(const Elem& a) const { return sgn(a) == 0; }
  bool equal(const Elem& a, const Elem& b) const { return a == b; }
  Elem add(const Elem& a, const Elem& b) const { return a + b; }
  Elem sub(const Elem& a, const Elem& b) const { return a - b; }
  Elem mul(const Elem& a, const Elem& b) const { return a * b; }
  Elem div(const Elem& a, const Elem& b) const { return a / b; }
  Elem neg(const Elem& a) const { return -a; }
  Elem inv(const Elem& a) const { return Elem(1) / a; }
  std::string str(const Elem& a) const { return a.get_str(); }
  std::string name() const { return "Q"; }
};

// The prime field F_p, elements stored canonically in [0, p).
struct PrimeField {
  using Elem = std::uint64_t;

  explicit PrimeField(std::uint64_t p_) : p(p_) {
    if (p < 2) throw std::invalid_argument("prime field needs p >= 2");
  }

  std::uint64_t characteristic() const { return p; }

  Elem zero() const { return 0; }
  Elem one() const { return 1 % p; }
  Elem from_int(long long x) const {
    long long r = x % static_cast<long long>(p);
    if (r < 0) r += static_cast<long long>(p);
    return static_cast<Elem>(r);
  }
  bool is_zero(const Elem& a) const { return a == 0; }
  bool equal(const Elem& a, const Elem& b) const { return a == b; }
  Elem add(const Elem& a, const Elem& b) const {
    Elem s = a + b;
    return s >= p ? s - p : s;
  }
  Elem sub(const Elem& a, const Elem& b) const { return a >= b ? a - b : a + p - b; }
  Elem mul(const Elem& a, const Elem& b) const {
    return static_cast<Elem>((static_cast<unsigned __int128>(a) * b) % p);
  }
  Elem neg(const Elem& a) const { return a == 0 ? 0 : p - a; }
  Elem inv(const Elem& a) const {
    if (a == 0) throw std::domain_error("division by zero in F_p");
    return pow(a, p - 2);  // Fermat; p is prime by construction of FieldSpec
  }
  Elem div(const Elem& a, const Elem& b) const { return mul(a, inv(b)); }
  Elem pow(Elem base, std::uint64_t e) const {
    Elem r = one();
    while (e) {
      if (e & 1) r = mul(r, base);
      base = mul(base, base);
      e >>= 1;
    }
    return r;
  }
  std::string str(const Elem& a) const { return std::to_string(a); }
  std::string name() const { return "F" + std::to_string(p); }

  std::uint64_t p;
};

// Coefficient field requested by a presentation: p == 0 means Q, otherwise F_p.
struct FieldSpec {
  std::uint64_t p = 0;

  bool is_rational() const { return p == 0; }
  std::string name() const { return p == 0 ? "Q" : "F" + std::to_string(p); }
  bool operator==(const FieldSpec&) const = default;
};

inline bool is_prime_u64(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

// Runs fn with the concrete field object selected by spec.
template <class Fn>
auto with_field(const FieldSpec& spec, Fn&& fn) {
  if (spec.is_rational()) return fn(RationalField{});
  return fn(PrimeField{spec.p});
}

}  // namespace qhh
