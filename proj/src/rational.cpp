#include "assoc/rational.hpp"

#include <sstream>
#include <stdexcept>

namespace assoc {

RationalVector rvec(std::initializer_list<Rational> entries) {
  RationalVector v(static_cast<Eigen::Index>(entries.size()));
  Eigen::Index i = 0;
  for (const Rational& e : entries) v[i++] = e;
  return v;
}

Rational parse_rational(const std::string& text) {
  const auto parse_int = [](const std::string& s) -> Integer {
    if (s.empty()) throw std::invalid_argument("empty integer in rational literal");
    std::size_t start = (s[0] == '+' || s[0] == '-') ? 1 : 0;
    if (start == s.size()) throw std::invalid_argument("sign without digits in rational literal");
    for (std::size_t i = start; i < s.size(); ++i)
      if (s[i] < '0' || s[i] > '9')
        throw std::invalid_argument("bad character in rational literal: '" + s + "'");
    const Integer magnitude(s.substr(start));  // GMP rejects a leading '+'
    return s[0] == '-' ? Integer(-magnitude) : magnitude;
  };

  const std::size_t slash = text.find('/');
  Integer num, den;
  if (slash == std::string::npos) {
    num = parse_int(text);
    den = 1;
  } else {
    if (text.find('/', slash + 1) != std::string::npos)
      throw std::invalid_argument("more than one '/' in rational literal: '" + text + "'");
    num = parse_int(text.substr(0, slash));
    den = parse_int(text.substr(slash + 1));
  }
  if (den == 0) throw std::invalid_argument("zero denominator in rational literal: '" + text + "'");
  // The two-integer constructor canonicalises (string construction of
  // mpq_rational does not reduce, so we never use it).
  return Rational(num, den);
}

std::string to_string(const Rational& value) {
  std::ostringstream out;
  out << value;  // GMP prints "p" or "p/q" with q > 0 for canonical values
  return out.str();
}

std::string to_string(const RationalVector& v) {
  std::ostringstream out;
  for (Eigen::Index i = 0; i < v.size(); ++i) {
    if (i) out << ' ';
    out << v[i];
  }
  return out.str();
}

bool vec_eq(const RationalVector& a, const RationalVector& b) {
  if (a.size() != b.size()) return false;
  for (Eigen::Index i = 0; i < a.size(); ++i)
    if (a[i] != b[i]) return false;
  return true;
}

bool lex_less(const RationalVector& a, const RationalVector& b) {
  const Eigen::Index n = std::min(a.size(), b.size());
  for (Eigen::Index i = 0; i < n; ++i) {
    if (a[i] < b[i]) return true;
    if (b[i] < a[i]) return false;
  }
  return a.size() < b.size();
}

Rational primitive_scale(const RationalVector& v) {
  using boost::multiprecision::gcd;
  using boost::multiprecision::lcm;
  Integer den_lcm = 1;
  bool all_zero = true;
  for (Eigen::Index i = 0; i < v.size(); ++i) {
    if (v[i] == 0) continue;
    all_zero = false;
    den_lcm = lcm(den_lcm, Integer(denominator(v[i])));
  }
  if (all_zero) throw std::invalid_argument("primitive_scale of zero vector");
  Integer num_gcd = 0;
  for (Eigen::Index i = 0; i < v.size(); ++i) {
    if (v[i] == 0) continue;
    const Rational scaled = v[i] * den_lcm;  // integer by construction
    num_gcd = gcd(num_gcd, Integer(numerator(scaled)));
  }
  return Rational(den_lcm, num_gcd);
}

RationalVector primitive(const RationalVector& v) {
  const Rational s = primitive_scale(v);
  RationalVector out = v;
  for (Eigen::Index i = 0; i < out.size(); ++i) out[i] *= s;
  return out;
}

}  // namespace assoc
