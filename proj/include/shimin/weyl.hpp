#ifndef SHIMIN_WEYL_HPP
#define SHIMIN_WEYL_HPP

#include "shimin/rootsys.hpp"

#include <compare>
#include <span>
#include <string>
#include <vector>

namespace shimin {

/*
 * A Weyl group element of a classical type realized as a (signed) permutation.
 *
 * images()[i-1] = w(i). For type A_n it is a permutation of 1..n+1; for
 * B/C/D_n a signed permutation of 1..n extended by w(-i) = -w(i), w(0) = 0.
 * Type D additionally requires an even number of negative images.
 */
class SignedPermutation {
public:
    /// Throws DomainError if `images` is not a valid element of the family.
    SignedPermutation(RootSystemKind kind, std::vector<int> images);

    static SignedPermutation identity(RootSystemKind kind);

    const RootSystemKind& kind() const { return kind_; }
    std::span<const int> images() const { return images_; }
    /// Number of points permuted (n+1 for A, n otherwise).
    int degree() const { return static_cast<int>(images_.size()); }

    /// w(i) for i in [-degree, degree]; w(0) = 0.
    int operator()(int i) const;
    /// w^{-1}(v).
    int preimage(int v) const;

    SignedPermutation inverse() const;
    bool is_identity() const;

    /// Composition: (a * b)(i) = a(b(i)).
    friend SignedPermutation operator*(const SignedPermutation& a, const SignedPermutation& b);
    friend bool operator==(const SignedPermutation& a, const SignedPermutation& b)
    {
        return a.kind_ == b.kind_ && a.images_ == b.images_;
    }
    friend auto operator<=>(const SignedPermutation& a, const SignedPermutation& b)
    {
        return a.images_ <=> b.images_;
    }

    /// One-line window notation: "2 1 3" for A, "w(1) .. w(n) | 0 | w(-n) .. w(-1)"
    /// for B/C, and "w(1) .. w(n-1) {w(n)/w(-n)} w(-n+1) .. w(-1)" for D.
    std::string window() const;

private:
    RootSystemKind kind_;
    std::vector<int> images_;
};

/// e_i -> sign(w(i)) e_|w(i)|, extended linearly. Throws DomainError on a
/// dimension mismatch.
Root act(const SignedPermutation& w, const Root& r);
SignedPermutation inverse(const SignedPermutation& w);

/// True iff r is a positive root; throws DomainError if r is not a root at all.
bool is_positive(const RootSystem& rs, const Root& r);

/// The reflection s_alpha as a signed permutation.
SignedPermutation reflection(const RootSystem& rs, const Root& alpha);

/// {alpha in Phi+ : w^{-1}(alpha) in Phi-}, in canonical order.
std::vector<Root> negative_set(const RootSystem& rs, const SignedPermutation& w);

/*
 * The unique w with negative_set(rs, w) == N. Built by peeling off a simple
 * root of N at a time (N(s w') = {alpha_s} + s N(w')). Throws InadmissibleError
 * when N is not the negative set of any element.
 */
SignedPermutation from_negative_set(const RootSystem& rs, std::span<const Root> negatives);

/*
 * Inversion vectors of plain permutations (type A), value-indexed in the
 * Lehmer style: I[v-1] = number of values smaller than v standing to the
 * right of v. Always I[v-1] < v, and the identity encodes to all zeros.
 */
std::vector<int> encode_inversion_vector(const SignedPermutation& pi);
/// Inverse of encode_inversion_vector; the result has kind A_{|I|-1}.
/// Throws DomainError if some I[v-1] >= v or |I| < 2.
SignedPermutation decode_inversion_vector(std::span<const int> inversions);

/// All elements of the finite Weyl group, sorted by images.
std::vector<SignedPermutation> weyl_group_elements(RootSystemKind kind);

} // namespace shimin

#endif // SHIMIN_WEYL_HPP
