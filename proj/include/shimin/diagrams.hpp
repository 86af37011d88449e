#ifndef SHIMIN_DIAGRAMS_HPP
#define SHIMIN_DIAGRAMS_HPP

#include "shimin/rootsys.hpp"
#include "shimin/weyl.hpp"

#include <cstddef>
#include <optional>
#include <span>
#include <utility>
#include <vector>

namespace shimin {

/*
 * The line on which an element is written.
 *
 * Slots are labelled by the position whose image they display:
 *   A_n:   1 .. n+1
 *   B/C_n: 1 .. n, 0, -n .. -1
 *   D_n:   1 .. n-1, {n, -n}, -(n-1) .. -1
 * In type D the slots n and -n form the fork: they share one linear
 * coordinate and are incomparable with each other.
 */
class LineLayout {
public:
    explicit LineLayout(RootSystemKind kind);

    const RootSystemKind& kind() const { return kind_; }
    /// Slot labels in display order (the fork lists n before -n).
    std::span<const int> slots() const { return slots_; }
    bool has_slot(int slot) const;
    /// Linear coordinate of a slot, 0-based; both fork slots map to the same one.
    int coordinate(int slot) const;

    bool has_fork() const { return kind_.family == Family::D; }
    bool is_fork(int slot) const;
    /// Fork slot holding w(n) / w(-n); only valid for type D.
    int fork_top() const { return kind_.rank; }
    int fork_bottom() const { return -kind_.rank; }

    /// Strict slot order; false for the two fork slots in either direction.
    bool precedes(int a, int b) const { return coordinate(a) < coordinate(b); }

private:
    RootSystemKind kind_;
    std::vector<int> slots_;
};

LineLayout layout(RootSystemKind kind);

/// An arc between two slots, stored with coordinate(from) <= coordinate(to).
struct Arc {
    int from;
    int to;
    friend auto operator<=>(const Arc&, const Arc&) = default;
};

/// Arcs drawn on a layout whose slots carry the values of a (signed) permutation.
class ArcDiagram {
public:
    /// Normalizes orientation, sorts and removes duplicate arcs. Throws
    /// DomainError for unknown slots, loops, or an arc joining the two fork slots.
    ArcDiagram(LineLayout line, SignedPermutation w, std::vector<Arc> arcs);

    const LineLayout& layout() const { return layout_; }
    const SignedPermutation& permutation() const { return w_; }
    std::span<const Arc> arcs() const { return arcs_; }

    int value_at(int slot) const { return w_(slot); }
    /// Slot holding `value`; throws DomainError for values not on the line.
    int slot_of(int value) const;
    std::pair<int, int> values(const Arc& a) const { return {value_at(a.from), value_at(a.to)}; }

private:
    LineLayout layout_;
    SignedPermutation w_;
    std::vector<Arc> arcs_;
};

/// Position pairs of the arcs a positive root contributes (classical table):
/// e_i-e_j: (i,j),(-j,-i); e_i+e_j: (i,-j),(j,-i); 2e_i: (i,-i); e_i: (i,0),(0,-i).
/// Type A only uses (i,j).
std::vector<std::pair<int, int>> arc_positions(Family family, const Root& r);

/// Value pair used when evaluating eta for a root in the minimal-element formula:
/// e_i-e_j -> (i,j), e_i+e_j -> (i,-j), 2e_i -> (i,-i), e_i -> (i,0).
std::pair<int, int> value_pair(const Root& r);

/// Diagram of a parking function; throws DomainError if (w, P) is not one.
ArcDiagram arcs_from_partition(const RootSystem& rs, const SignedPermutation& w,
                               const NonNestingPartition& partition);

/// Strict-inequality crossing / nesting on linear coordinates. Arcs sharing an
/// endpoint coordinate (including the fork) are neither.
bool crossing(const ArcDiagram& d, const Arc& a1, const Arc& a2);
bool nesting(const ArcDiagram& d, const Arc& a1, const Arc& a2);
bool is_non_nesting(const ArcDiagram& d);

/*
 * Maximum number of pairwise non-crossing arcs lying in the closed slot
 * interval between the values i and j.
 *
 * In type D the fork is resolved by deleting one fork slot together with its
 * arcs and counting on the remaining line; the result is the maximum over the
 * deletions that keep the slots of i and j. Throws DomainError for unknown
 * values, i == j, or i and j sitting on opposite fork slots.
 *
 * Counting is greedy, which assumes a set-partition diagram: away from the
 * fork, no two arcs start (or end) at the same slot. Diagrams built by
 * arcs_from_partition have this shape; eta_bruteforce does not need it.
 */
int eta(const ArcDiagram& d, int i, int j);

/// Same contract as eta, by exhaustive subset search. Throws ResourceError
/// when more than `max_arcs` arcs lie in the interval.
int eta_bruteforce(const ArcDiagram& d, int i, int j, std::size_t max_arcs = 20);

} // namespace shimin

#endif // SHIMIN_DIAGRAMS_HPP
