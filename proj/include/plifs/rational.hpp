#pragma once

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>

#include <gmp.h>

namespace plifs {

// Exact rational scalar. Always stored in lowest terms with positive
// denominator; there is no floating-point path anywhere in the library.
class Rational {
public:
  Rational() { mpq_init(v_); }
  Rational(long n) {
    mpq_init(v_);
    mpq_set_si(v_, n, 1);
  }
  Rational(long n, long d);
  Rational(const Rational &o) {
    mpq_init(v_);
    mpq_set(v_, o.v_);
  }
  Rational(Rational &&o) noexcept {
    mpq_init(v_);
    mpq_swap(v_, o.v_);
  }
  Rational &operator=(const Rational &o) {
    if (this != &o) mpq_set(v_, o.v_);
    return *this;
  }
  Rational &operator=(Rational &&o) noexcept {
    if (this != &o) mpq_swap(v_, o.v_);
    return *this;
  }
  ~Rational() { mpq_clear(v_); }

  // Parses "p/q" or "p" (decimal integer strings, optional leading '-').
  static Rational parse(std::string_view s);

  std::string str() const;      // "p/q", lowest terms, q > 0, q always printed
  std::string num_str() const;  // numerator as decimal string
  std::string den_str() const;  // denominator as decimal string

  bool is_zero() const { return mpq_sgn(v_) == 0; }
  int sign() const { return mpq_sgn(v_); }
  bool is_integer() const { return mpz_cmp_ui(mpq_denref(v_), 1) == 0; }

  Rational operator-() const {
    Rational r;
    mpq_neg(r.v_, v_);
    return r;
  }
  Rational operator+(const Rational &o) const {
    Rational r;
    mpq_add(r.v_, v_, o.v_);
    return r;
  }
  Rational operator-(const Rational &o) const {
    Rational r;
    mpq_sub(r.v_, v_, o.v_);
    return r;
  }
  Rational operator*(const Rational &o) const {
    Rational r;
    mpq_mul(r.v_, v_, o.v_);
    return r;
  }
  Rational operator/(const Rational &o) const;

  Rational &operator+=(const Rational &o) {
    mpq_add(v_, v_, o.v_);
    return *this;
  }
  Rational &operator-=(const Rational &o) {
    mpq_sub(v_, v_, o.v_);
    return *this;
  }
  Rational &operator*=(const Rational &o) {
    mpq_mul(v_, v_, o.v_);
    return *this;
  }

  bool operator==(const Rational &o) const { return mpq_equal(v_, o.v_) != 0; }
  std::strong_ordering operator<=>(const Rational &o) const {
    int c = mpq_cmp(v_, o.v_);
    if (c < 0) return std::strong_ordering::less;
    if (c > 0) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
  }

  Rational abs() const {
    Rational r;
    mpq_abs(r.v_, v_);
    return r;
  }

  // Largest integer <= value, as a Rational.
  Rational floor() const;
  // Value minus floor(value); always in [0,1).
  Rational frac() const { return *this - floor(); }

  // Exact power with integer exponent (e >= 0, or e < 0 for nonzero values).
  Rational pow(long e) const;

  double approx() const { return mpq_get_d(v_); }

  friend std::ostream &operator<<(std::ostream &os, const Rational &r);

private:
  mpq_t v_;
};

inline Rational min(const Rational &a, const Rational &b) { return a <= b ? a : b; }
inline Rational max(const Rational &a, const Rational &b) { return a >= b ? a : b; }

} // namespace plifs
