#pragma once

// Exact scalar type and dense Eigen containers used everywhere else.
// All geometry in this library is rational arithmetic; nothing here may
// round.  The GMP-backed boost type plugs into Eigen via the NumTraits
// specialisations in <boost/multiprecision/eigen.hpp>.

#include <Eigen/Dense>

#include <boost/multiprecision/eigen.hpp>
#include <boost/multiprecision/gmp.hpp>

#include <initializer_list>
#include <string>
#include <vector>

namespace assoc {

using Integer = boost::multiprecision::mpz_int;
using Rational = boost::multiprecision::mpq_rational;

using RationalVector = Eigen::Matrix<Rational, Eigen::Dynamic, 1>;
using RationalMatrix = Eigen::Matrix<Rational, Eigen::Dynamic, Eigen::Dynamic>;

/// Build a vector from a braced list, e.g. rvec({1, Rational(1, 2)}).
RationalVector rvec(std::initializer_list<Rational> entries);

/// Parse "p" or "p/q" (optional sign on p, q positive or negative).
/// The result is always canonical: reduced, denominator > 0.
/// Throws std::invalid_argument on malformed input or q == 0.
Rational parse_rational(const std::string& text);

/// Render canonically as "p" (denominator 1) or "p/q" with q > 0.
std::string to_string(const Rational& value);

/// Space-separated entries, same scalar format as to_string.
std::string to_string(const RationalVector& v);

/// Exact coefficient-wise equality.
bool vec_eq(const RationalVector& a, const RationalVector& b);

/// Lexicographic order on coefficients; used for canonical sorting of
/// vertex lists and facet normals.
bool lex_less(const RationalVector& a, const RationalVector& b);

/// Smallest positive rational lambda such that lambda * v has integer
/// entries with gcd 1.  Throws std::invalid_argument on the zero vector.
Rational primitive_scale(const RationalVector& v);

/// v scaled by primitive_scale(v); the canonical integer representative
/// of the ray spanned by v.
RationalVector primitive(const RationalVector& v);

}  // namespace assoc
