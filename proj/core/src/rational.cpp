#include "uqgln/rational.hpp"

#include <cctype>

#include "uqgln/errors.hpp"
#include "uqgln/util.hpp"

namespace uqgln {

Rational::Rational(long num, unsigned long den) {
  mpq_init(v_);
  if (den == 0) throw DimensionError("rational with zero denominator");
  mpq_set_si(v_, num, den);
  mpq_canonicalize(v_);
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) throw SingularError("division by zero rational");
  mpq_div(v_, v_, o.v_);
  return *this;
}

Rational Rational::inverse() const {
  if (is_zero()) throw SingularError("inverse of zero rational");
  Rational r;
  mpq_inv(r.v_, v_);
  return r;
}

Rational Rational::pow(long e) const {
  if (e == 0) return Rational(1);
  Rational base = e > 0 ? *this : inverse();
  unsigned long n = static_cast<unsigned long>(e > 0 ? e : -e);
  Rational acc(1);
  while (n > 0) {
    if (n & 1ul) acc *= base;
    base *= base;
    n >>= 1;
  }
  return acc;
}

Rational Rational::parse(const std::string& text) {
  // Manual validation first: mpq_set_str is lenient about whitespace.
  auto is_int = [](const std::string& s) {
    if (s.empty()) return false;
    size_t i = s[0] == '-' ? 1 : 0;
    if (i == s.size()) return false;
    for (; i < s.size(); ++i)
      if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
    return true;
  };
  const auto slash = text.find('/');
  bool ok;
  if (slash == std::string::npos) {
    ok = is_int(text);
  } else {
    const std::string num = text.substr(0, slash);
    const std::string den = text.substr(slash + 1);
    ok = is_int(num) && is_int(den) && den[0] != '-';
  }
  if (!ok) throw ConfigError("unparseable rational \"" + text + "\"");
  Rational r;
  if (mpq_set_str(r.v_, text.c_str(), 10) != 0) throw ConfigError("unparseable rational \"" + text + "\"");
  if (mpz_sgn(mpq_denref(r.v_)) == 0) throw ConfigError("rational with zero denominator \"" + text + "\"");
  mpq_canonicalize(r.v_);
  return r;
}

std::string Rational::str() const {
  char* s = mpq_get_str(nullptr, 10, v_);
  std::string out(s);
  void (*freefn)(void*, size_t);
  mp_get_memory_functions(nullptr, nullptr, &freefn);
  freefn(s, out.size() + 1);
  return out;
}

std::string Rational::numerator_str() const {
  char* s = mpz_get_str(nullptr, 10, mpq_numref(v_));
  std::string out(s);
  void (*freefn)(void*, size_t);
  mp_get_memory_functions(nullptr, nullptr, &freefn);
  freefn(s, out.size() + 1);
  return out;
}

std::string Rational::denominator_str() const {
  char* s = mpz_get_str(nullptr, 10, mpq_denref(v_));
  std::string out(s);
  void (*freefn)(void*, size_t);
  mp_get_memory_functions(nullptr, nullptr, &freefn);
  freefn(s, out.size() + 1);
  return out;
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

}  // namespace uqgln
