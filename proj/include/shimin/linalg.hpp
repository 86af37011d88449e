#ifndef SHIMIN_LINALG_HPP
#define SHIMIN_LINALG_HPP

#include <gmpxx.h>

#include <optional>
#include <vector>

namespace shimin::linalg {

using Rational = mpq_class;
using RationalMatrix = std::vector<std::vector<Rational>>;
using RationalVector = std::vector<Rational>;

/*
 * Exact Gauss-Jordan elimination over the rationals.
 *
 * Solves A x = b for a matrix with full column rank. Overdetermined systems
 * are accepted as long as they are consistent. Returns nullopt when the system
 * is inconsistent or the columns are linearly dependent.
 */
std::optional<RationalVector> solve(RationalMatrix a, RationalVector b);

/// Floor of a rational as a (possibly large) integer.
mpz_class floor(const Rational& q);

} // namespace shimin::linalg

#endif // SHIMIN_LINALG_HPP
