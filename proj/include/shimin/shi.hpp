#ifndef SHIMIN_SHI_HPP
#define SHIMIN_SHI_HPP

#include "shimin/rootsys.hpp"
#include "shimin/weyl.hpp"

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace shimin {

enum class Sign : std::int8_t { Minus = -1, Zero = 0, Plus = 1 };

char to_char(Sign s);
/// Accepts '+', '-', '0' (and the unicode minus is not accepted). Throws DomainError.
Sign parse_sign(char c);

/// One sign per positive root, in canonical root order.
struct SignType {
    std::vector<Sign> signs;

    std::size_t size() const { return signs.size(); }
    /// "(+,0,-)"
    std::string to_string() const;
    friend auto operator<=>(const SignType&, const SignType&) = default;
};

/// Integer vector indexed by the positive roots (canonical order).
struct ShiVector {
    std::vector<long long> entries;

    std::size_t size() const { return entries.size(); }
    /// "1,2,1"
    std::string to_csv() const;
    friend auto operator<=>(const ShiVector&, const ShiVector&) = default;
};

/// (w, P) with w(alpha) positive for every alpha in the antichain P.
struct ParkingFunction {
    SignedPermutation w;
    NonNestingPartition partition;
};

/// Validating constructor; throws DomainError if (w, P) is not a parking function.
ParkingFunction make_parking_function(const RootSystem& rs, SignedPermutation w, std::vector<Root> partition);

/// Every parking function: antichains in canonical order, then compatible w sorted.
std::vector<ParkingFunction> parking_functions(const RootSystem& rs);

/// A failed Shi relation v_c - v_a - v_b = residual with residual not in {0, 1}.
struct ShiViolation {
    AdditionTriple triple;
    long long residual;
};

/// Violations of the Shi relations; empty iff v is the K-vector of an alcove.
/// Throws DomainError if v has the wrong length.
std::vector<ShiViolation> check_shi_relations(const RootSystem& rs, const ShiVector& v);
bool is_shi_vector(const RootSystem& rs, const ShiVector& v);

SignType sign_of(const ShiVector& v);

/*
 * Minimal element of the Shi region of a parking function.
 *
 * With (i, j) the value pair of alpha and eta the arc count of the diagram of
 * (w, P):  m_alpha = eta(i, j)       if w^{-1}(alpha) > 0,
 *          m_alpha = -(eta(i, j)+1)  otherwise.
 */
ShiVector minimal_element(const RootSystem& rs, const ParkingFunction& pf);

SignType sign_type_of_pf(const RootSystem& rs, const ParkingFunction& pf);

/*
 * Athanasiadis-Linusson map for type A: decode the permutation from the
 * counts of {0,+} entries, join the values of every '+' pair by an arc and
 * drop the arcs containing another one. Throws InadmissibleError when the sign
 * type belongs to no Shi region, DomainError for non type A input.
 */
ParkingFunction al_forward(const RootSystem& rs, const SignType& v);

/*
 * Armstrong-Reiner-Rhoades labelling: w from the '-' entries, P the unique
 * antichain whose parking function has sign type v. Throws InadmissibleError
 * if there is no such pair, or if the antichain is not unique.
 */
ParkingFunction arr_forward(const RootSystem& rs, const SignType& v);

bool is_admissible(const RootSystem& rs, const SignType& v);

ShiVector minimal_from_sign(const RootSystem& rs, const SignType& v);

/// Comma separated signs in canonical order, e.g. "+,0,-". Throws DomainError.
SignType parse_sign_csv(const RootSystem& rs, std::string_view text);

/*
 * Type A pyramid: rows listed top first and separated by '/', signs within a
 * row by ','. Row r from the bottom holds v_{i,i+r} for i = 1, 2, ... from the
 * left. A_2 example: "+/+,-" is v13 = +, v12 = +, v23 = -.
 */
SignType parse_pyramid(const RootSystem& rs, std::string_view text);
std::string to_pyramid(const RootSystem& rs, const SignType& v);

} // namespace shimin

#endif // SHIMIN_SHI_HPP
