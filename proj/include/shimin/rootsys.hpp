#ifndef SHIMIN_ROOTSYS_HPP
#define SHIMIN_ROOTSYS_HPP

#include <compare>
#include <cstddef>
#include <functional>
#include <initializer_list>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <tuple>
#include <unordered_map>
#include <vector>

namespace shimin {

enum class Family : char { A = 'A', B = 'B', C = 'C', D = 'D' };

std::string to_string(Family family);
/// Accepts "A".."D" (case-insensitive); throws ConfigError otherwise.
Family parse_family(std::string_view text);

/// Family plus rank. A needs n >= 1, B and C need n >= 2, D needs n >= 3.
struct RootSystemKind {
    Family family = Family::A;
    int rank = 1;

    /// Throws ConfigError if the rank is not allowed for the family.
    void validate() const;
    /// Dimension of the ambient space: n+1 for A, n otherwise.
    int ambient_dim() const { return family == Family::A ? rank + 1 : rank; }
    std::string to_string() const;

    friend bool operator==(const RootSystemKind&, const RootSystemKind&) = default;
};

/// An integer vector of the ambient space, usually (but not necessarily) a root.
class Root {
public:
    Root() = default;
    explicit Root(std::vector<int> coords) : coords_(std::move(coords)) {}
    Root(std::initializer_list<int> coords) : coords_(coords) {}

    /// e_i (1-based) scaled by `coeff` in dimension `dim`.
    static Root unit(int dim, int i, int coeff = 1);

    std::span<const int> coords() const { return coords_; }
    std::size_t dim() const { return coords_.size(); }
    int operator[](std::size_t i) const { return coords_[i]; }
    bool is_zero() const;

    Root operator-() const;
    friend Root operator+(const Root& a, const Root& b);
    friend Root operator-(const Root& a, const Root& b);
    friend int dot(const Root& a, const Root& b);

    friend auto operator<=>(const Root&, const Root&) = default;
    friend bool operator==(const Root&, const Root&) = default;

    /// Human-readable form such as "e1-e3", "e2+e4", "2e1", "-e2".
    std::string to_string() const;

private:
    std::vector<int> coords_;
};

struct RootHash {
    std::size_t operator()(const Root& r) const noexcept;
};

/// The row of the classical root table a positive root belongs to.
struct RootPattern {
    enum class Shape { Difference, Sum, Double, Single }; // e_i-e_j, e_i+e_j, 2e_i, e_i
    Shape shape;
    int i;     // 1-based
    int j = 0; // 1-based, only for Difference and Sum
};

/// Classifies a positive root of a classical system. Throws DomainError if the
/// coordinates match no row of the table with positive orientation.
RootPattern classify(const Root& r);

/// An antichain of the root poset, stored in canonical root order.
struct NonNestingPartition {
    std::vector<Root> roots;

    bool empty() const { return roots.empty(); }
    std::size_t size() const { return roots.size(); }
    friend bool operator==(const NonNestingPartition&, const NonNestingPartition&) = default;
};

/// Indices (into the canonical positive-root order) with a + b = c, a < b.
struct AdditionTriple {
    std::size_t a;
    std::size_t b;
    std::size_t c;
    friend bool operator==(const AdditionTriple&, const AdditionTriple&) = default;
};

/*
 * A classical root system with its root poset.
 *
 * Canonical order of the positive roots (frozen; sign types and Shi vectors
 * are serialized in it):
 *   A_n:     e_i - e_j, (i, j) lexicographic, 1 <= i < j <= n+1
 *   B/C/D_n: all e_i - e_j lexicographic, then all e_i + e_j lexicographic,
 *            then e_1..e_n (B) or 2e_1..2e_n (C).
 * Simple roots are e_i - e_{i+1} followed, for B/C/D, by e_n, 2e_n or
 * e_{n-1} + e_n respectively.
 *
 * Immutable after construction.
 */
class RootSystem {
public:
    explicit RootSystem(RootSystemKind kind);

    const RootSystemKind& kind() const { return kind_; }
    Family family() const { return kind_.family; }
    int rank() const { return kind_.rank; }
    int ambient_dim() const { return kind_.ambient_dim(); }

    std::span<const Root> positive_roots() const { return positive_; }
    std::span<const Root> simple_roots() const { return simple_; }
    std::size_t size() const { return positive_.size(); }
    const Root& root(std::size_t idx) const { return positive_.at(idx); }

    std::optional<std::size_t> index_of(const Root& r) const;
    /// Index of a positive root; throws DomainError for anything else.
    std::size_t require_index(const Root& r) const;
    bool is_positive_root(const Root& r) const { return index_.contains(r); }
    bool is_root(const Root& r) const { return is_positive_root(r) || is_positive_root(-r); }

    /// Coefficients of a positive root over the simple roots.
    std::span<const int> simple_coefficients(std::size_t idx) const { return coeffs_.at(idx); }

    int height(std::size_t idx) const { return heights_.at(idx); }
    int height(const Root& r) const { return height(require_index(r)); }

    /// Root poset: a <= b iff b - a is a nonnegative integer combination of simple roots.
    bool leq(std::size_t a, std::size_t b) const;
    bool leq(const Root& a, const Root& b) const { return leq(require_index(a), require_index(b)); }
    bool comparable(std::size_t a, std::size_t b) const { return leq(a, b) || leq(b, a); }

    std::size_t highest_root_index() const { return highest_; }
    const Root& highest_root() const { return positive_[highest_]; }

    std::span<const AdditionTriple> addition_triples() const { return triples_; }

    bool is_antichain(std::span<const Root> roots) const;
    /// Validates and canonically sorts; throws DomainError if not an antichain.
    NonNestingPartition make_partition(std::vector<Root> roots) const;

    /// Every antichain, including the empty one, in lexicographic order of
    /// their canonical index sequences.
    std::vector<NonNestingPartition> antichains() const;

private:
    RootSystemKind kind_;
    std::vector<Root> positive_;
    std::vector<Root> simple_;
    std::unordered_map<Root, std::size_t, RootHash> index_;
    std::vector<std::vector<int>> coeffs_;
    std::vector<int> heights_;
    std::vector<AdditionTriple> triples_;
    std::size_t highest_ = 0;
};

RootSystem build_root_system(RootSystemKind kind);
int height(const RootSystem& rs, const Root& r);
bool poset_leq(const RootSystem& rs, const Root& a, const Root& b);
Root highest_root(const RootSystem& rs);
std::vector<std::tuple<Root, Root, Root>> addition_triples(const RootSystem& rs);
std::vector<NonNestingPartition> antichains(const RootSystem& rs);

} // namespace shimin

#endif // SHIMIN_ROOTSYS_HPP
