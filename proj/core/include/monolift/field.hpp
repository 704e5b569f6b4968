// Exact scalars: arbitrary-precision rationals (GMP) and the prime field
// GF(32003).  No floating point anywhere.
#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace monolift {

using Rat = mpq_class;
using Int = mpz_class;

enum class FieldMode { rationals, prime_field };

inline const char* field_mode_name(FieldMode m) {
  return m == FieldMode::rationals ? "rationals" : "gf(32003)";
}

// GF(p) element, p = 32003 (prime).  Value normalized to [0, p).
class Fp {
 public:
  static constexpr std::int64_t P = 32003;

  Fp() : v_(0) {}
  explicit Fp(std::int64_t v) : v_(((v % P) + P) % P) {}

  static Fp from_rational(const Rat& q) {
    Int num = q.get_num(), den = q.get_den();
    std::int64_t d = mod_of(den);
    if (d == 0) throw std::domain_error("denominator divisible by field characteristic");
    return Fp(mod_of(num)) * Fp(d).inverse();
  }

  std::int64_t value() const { return v_; }
  bool is_zero() const { return v_ == 0; }

  Fp operator+(Fp o) const { return Fp(v_ + o.v_); }
  Fp operator-(Fp o) const { return Fp(v_ - o.v_); }
  Fp operator*(Fp o) const { return Fp(v_ * o.v_); }
  Fp operator-() const { return Fp(-v_); }
  Fp& operator+=(Fp o) { return *this = *this + o; }
  Fp& operator-=(Fp o) { return *this = *this - o; }
  Fp& operator*=(Fp o) { return *this = *this * o; }

  Fp inverse() const {
    if (v_ == 0) throw std::domain_error("inverse of zero in GF(p)");
    // Fermat: v^(p-2)
    std::int64_t base = v_, e = P - 2, acc = 1;
    while (e > 0) {
      if (e & 1) acc = acc * base % P;
      base = base * base % P;
      e >>= 1;
    }
    return Fp(acc);
  }
  Fp operator/(Fp o) const { return *this * o.inverse(); }

  friend bool operator==(Fp a, Fp b) { return a.v_ == b.v_; }

 private:
  static std::int64_t mod_of(const Int& z) {
    Int r = z % P;
    std::int64_t v = r.get_si();
    return ((v % P) + P) % P;
  }
  std::int64_t v_;
};

std::string to_string(const Rat& q);
Rat parse_rational(const std::string& text);

}  // namespace monolift
