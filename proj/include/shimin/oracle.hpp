#ifndef SHIMIN_ORACLE_HPP
#define SHIMIN_ORACLE_HPP

#include "shimin/linalg.hpp"
#include "shimin/rootsys.hpp"
#include "shimin/shi.hpp"

#include <cstddef>
#include <map>
#include <optional>
#include <span>
#include <variant>
#include <vector>

namespace shimin {

using RationalPoint = std::vector<linalg::Rational>;

/// An open alcove given by an exact interior point, with kvec_alpha = floor(<point, alpha>).
struct Alcove {
    RationalPoint point;
    ShiVector kvec;
    int depth = 0; // BFS layer, 0 for the fundamental alcove
};

linalg::Rational pairing(const RationalPoint& p, const Root& alpha);

/// Point with <p, alpha_i> = 1/(c+2) on every simple root, c the height of the
/// highest root (for type A the coordinates also sum to zero).
Alcove fundamental_alcove(const RootSystem& rs);

/// Affine reflection in H_{alpha,k}. Throws DomainError if p lies on it.
RationalPoint reflect(const RationalPoint& p, const Root& alpha, long long k);

/// Entrywise floor of the pairings; throws DegeneratePointError on an integer pairing.
ShiVector k_vector(const RootSystem& rs, const RationalPoint& p);

/// Expand exactly `depth` BFS layers.
struct Radius {
    int depth = 0;
};

/*
 * Expand until every discovered region has a member dominating all others
 * (|m_a| <= |k_a| componentwise), at least `target` regions were found, and
 * `quiet_layers` consecutive layers added no new sign type.
 */
struct UntilRegions {
    std::size_t target = 0;
    int quiet_layers = 2;
};

using EnumerationMode = std::variant<Radius, UntilRegions>;

struct EnumerationLimits {
    int max_depth = 64;
    std::size_t max_alcoves = 2'000'000;
    /// When a limit is hit: return what was found (truncated = true) instead of throwing.
    bool allow_partial = false;
    /// Worker threads for layer expansion; 0 picks hardware concurrency.
    unsigned threads = 0;
};

struct AlcoveEnumeration {
    std::vector<Alcove> alcoves; // BFS order, deterministic
    int depth = 0;               // last completed layer
    bool truncated = false;
};

/*
 * Breadth-first closure from the fundamental alcove. The neighbours of an
 * alcove are its reflections in H_{alpha,k} and H_{alpha,k+1} (k = kvec_alpha)
 * for every positive root; alcoves are identified by their K-vector. The
 * output does not depend on the number of threads.
 *
 * Throws ResourceError when a limit is exceeded (unless allow_partial).
 */
AlcoveEnumeration enumerate_alcoves(const RootSystem& rs, EnumerationMode mode, EnumerationLimits limits = {});

/// Alcoves grouped by the sign type of their K-vector; pointers into `alcoves`.
using Region = std::vector<const Alcove*>;
std::map<SignType, Region> regions_by_sign(std::span<const Alcove> alcoves);

/// Member whose K-vector is absolute-value dominated by every member, if any.
std::optional<ShiVector> find_dominating(std::span<const Alcove* const> group);
/// As find_dominating; throws SaturationError when no member dominates.
ShiVector oracle_minimal(std::span<const Alcove* const> group);

} // namespace shimin

#endif // SHIMIN_ORACLE_HPP
