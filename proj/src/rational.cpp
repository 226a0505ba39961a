#include "invlfp/rational.hpp"

#include <cctype>

#include "invlfp/errors.hpp"

namespace invlfp {

Rational parse_rational(const std::string& text) {
  if (text.empty()) throw ParseError("empty rational literal");
  auto check_int = [&](const std::string& s) {
    if (s.empty()) throw ParseError("malformed rational: '" + text + "'");
    std::size_t start = (s[0] == '-' || s[0] == '+') ? 1 : 0;
    if (start == s.size()) throw ParseError("malformed rational: '" + text + "'");
    for (std::size_t i = start; i < s.size(); ++i)
      if (!std::isdigit(static_cast<unsigned char>(s[i])))
        throw ParseError("malformed rational: '" + text + "'");
  };
  auto slash = text.find('/');
  if (slash == std::string::npos) {
    check_int(text);
    return Rational(mpz_class(text));
  }
  std::string num = text.substr(0, slash);
  std::string den = text.substr(slash + 1);
  check_int(num);
  check_int(den);
  mpz_class d(den);
  if (d == 0) throw ParseError("zero denominator in '" + text + "'");
  Rational q(mpz_class(num), d);
  q.canonicalize();
  return q;
}

std::string to_string(const Rational& q) {
  if (q.get_den() == 1) return q.get_num().get_str();
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

std::string to_string(const RatVector& v) {
  std::string out = "(";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) out += ", ";
    out += to_string(v[i]);
  }
  return out + ")";
}

unsigned long ceil_sqrt(unsigned long n) {
  unsigned long s = 0;
  while (s * s < n) ++s;
  return s;
}

Rational dot(const RatVector& a, const RatVector& b) {
  if (a.size() != b.size()) throw DimensionError("dot: size mismatch");
  Rational acc = 0;
  for (std::size_t i = 0; i < a.size(); ++i) acc += a[i] * b[i];
  return acc;
}

Rational round_to_grid(const Rational& value, const Rational& grid) {
  if (grid <= 0) throw Error("round_to_grid: grid must be positive");
  Rational q = value / grid;
  // round half toward zero
  mpz_class num = q.get_num(), den = q.get_den();
  mpz_class twice = 2 * num;
  mpz_class k;
  mpz_fdiv_q(k.get_mpz_t(), twice.get_mpz_t(), mpz_class(2 * den).get_mpz_t());
  // candidates k, k+1: pick the closer one, ties toward zero
  Rational lo = Rational(k) * grid;
  Rational hi = Rational(k + 1) * grid;
  Rational dlo = abs(value - lo), dhi = abs(hi - value);
  if (dlo < dhi) return lo;
  if (dhi < dlo) return hi;
  return abs(lo) <= abs(hi) ? lo : hi;
}

}  // namespace invlfp
