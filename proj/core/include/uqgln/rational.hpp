#pragma once

#include <gmp.h>

#include <iosfwd>
#include <string>
#include <utility>

namespace uqgln {

/// Exact rational scalar. Always stored reduced with a positive denominator,
/// so equality of values is equality of representations. Every quantity in
/// the library (q, z, Bethe variables, matrix entries) is one of these.
class Rational {
 public:
  Rational() { mpq_init(v_); }
  Rational(long n) {  // NOLINT(google-explicit-constructor): scalars convert freely
    mpq_init(v_);
    mpq_set_si(v_, n, 1);
  }
  Rational(long num, unsigned long den);
  Rational(const Rational& o) {
    mpq_init(v_);
    mpq_set(v_, o.v_);
  }
  Rational(Rational&& o) noexcept {
    mpq_init(v_);
    mpq_swap(v_, o.v_);
  }
  ~Rational() { mpq_clear(v_); }

  Rational& operator=(const Rational& o) {
    if (this != &o) mpq_set(v_, o.v_);
    return *this;
  }
  Rational& operator=(Rational&& o) noexcept {
    mpq_swap(v_, o.v_);
    return *this;
  }

  /// Parses "p", "-p", "p/q" or "-p/q" in base 10. Rejects anything else.
  static Rational parse(const std::string& text);

  bool is_zero() const { return mpq_sgn(v_) == 0; }
  int sign() const { return mpq_sgn(v_); }

  Rational& operator+=(const Rational& o) {
    mpq_add(v_, v_, o.v_);
    return *this;
  }
  Rational& operator-=(const Rational& o) {
    mpq_sub(v_, v_, o.v_);
    return *this;
  }
  Rational& operator*=(const Rational& o) {
    mpq_mul(v_, v_, o.v_);
    return *this;
  }
  Rational& operator/=(const Rational& o);

  Rational operator-() const {
    Rational r;
    mpq_neg(r.v_, v_);
    return r;
  }

  /// Multiplicative inverse; the value must be nonzero.
  Rational inverse() const;

  /// Integer power; negative exponents require a nonzero value.
  Rational pow(long e) const;

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

  friend bool operator==(const Rational& a, const Rational& b) { return mpq_equal(a.v_, b.v_) != 0; }
  friend bool operator!=(const Rational& a, const Rational& b) { return !(a == b); }
  friend bool operator<(const Rational& a, const Rational& b) { return mpq_cmp(a.v_, b.v_) < 0; }

  /// Canonical decimal form: "p/q", or "p" when the denominator is 1.
  std::string str() const;

  std::string numerator_str() const;
  std::string denominator_str() const;

 private:
  mpq_t v_;
};

std::ostream& operator<<(std::ostream& os, const Rational& r);

}  // namespace uqgln
