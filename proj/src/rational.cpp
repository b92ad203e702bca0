#include "plifs/rational.hpp"

#include <ostream>

#include "plifs/errors.hpp"

namespace plifs {

Rational::Rational(long n, long d) {
  if (d == 0) fail(Errc::parse_error, "zero denominator");
  mpq_init(v_);
  mpq_set_si(v_, n, 1);
  mpq_t den;
  mpq_init(den);
  mpq_set_si(den, d, 1);
  mpq_div(v_, v_, den);
  mpq_clear(den);
}

Rational Rational::parse(std::string_view s) {
  auto digits_ok = [](std::string_view t) {
    if (t.empty()) return false;
    size_t i = (t[0] == '-') ? 1 : 0;
    if (i == t.size()) return false;
    for (; i < t.size(); ++i)
      if (t[i] < '0' || t[i] > '9') return false;
    return true;
  };
  std::string num, den = "1";
  auto slash = s.find('/');
  if (slash == std::string_view::npos) {
    num = std::string(s);
  } else {
    num = std::string(s.substr(0, slash));
    den = std::string(s.substr(slash + 1));
  }
  if (!digits_ok(num) || !digits_ok(den))
    fail(Errc::parse_error, "bad rational literal '" + std::string(s) + "'");
  Rational r;
  mpz_t n, d;
  mpz_init_set_str(n, num.c_str(), 10);
  mpz_init_set_str(d, den.c_str(), 10);
  if (mpz_sgn(d) == 0) {
    mpz_clear(n);
    mpz_clear(d);
    fail(Errc::parse_error, "zero denominator in '" + std::string(s) + "'");
  }
  mpq_set_num(r.v_, n);
  mpq_set_den(r.v_, d);
  mpq_canonicalize(r.v_);
  mpz_clear(n);
  mpz_clear(d);
  return r;
}

Rational Rational::operator/(const Rational &o) const {
  if (o.is_zero()) fail(Errc::parse_error, "division by zero");
  Rational r;
  mpq_div(r.v_, v_, o.v_);
  return r;
}

static std::string mpz_str(const mpz_t z) {
  char *raw = mpz_get_str(nullptr, 10, z);
  std::string s(raw);
  void (*freefn)(void *, size_t);
  mp_get_memory_functions(nullptr, nullptr, &freefn);
  freefn(raw, s.size() + 1);
  return s;
}

std::string Rational::str() const { return num_str() + "/" + den_str(); }
std::string Rational::num_str() const { return mpz_str(mpq_numref(v_)); }
std::string Rational::den_str() const { return mpz_str(mpq_denref(v_)); }

Rational Rational::floor() const {
  Rational r;
  mpz_t q;
  mpz_init(q);
  mpz_fdiv_q(q, mpq_numref(v_), mpq_denref(v_));
  mpq_set_z(r.v_, q);
  mpz_clear(q);
  return r;
}

Rational Rational::pow(long e) const {
  if (e < 0) {
    if (is_zero()) fail(Errc::parse_error, "zero to negative power");
    return (Rational(1) / *this).pow(-e);
  }
  Rational base = *this, acc = 1;
  while (e > 0) {
    if (e & 1) acc *= base;
    base *= base;
    e >>= 1;
  }
  return acc;
}

std::ostream &operator<<(std::ostream &os, const Rational &r) { return os << r.str(); }

const char *errc_name(Errc c) {
  switch (c) {
    case Errc::invalid_arc: return "InvalidArc";
    case Errc::ambient_mismatch: return "AmbientMismatch";
    case Errc::empty_set: return "EmptySet";
    case Errc::not_a_homeomorphism: return "NotAHomeomorphism";
    case Errc::out_of_domain: return "OutOfDomain";
    case Errc::invalid_geometry: return "InvalidGeometry";
    case Errc::infeasible_slopes: return "InfeasibleSlopes";
    case Errc::overflow: return "Overflow";
    case Errc::insufficient_depth: return "InsufficientDepth";
    case Errc::evidence_contradicts_metadata: return "EvidenceContradictsMetadata";
    case Errc::depth_exceeds_data: return "DepthExceedsData";
    case Errc::parse_error: return "ParseError";
  }
  return "UnknownError";
}

} // namespace plifs
