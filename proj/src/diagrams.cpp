#include "shimin/diagrams.hpp"

#include "shimin/errors.hpp"

#include <algorithm>
#include <bit>
#include <cstdlib>
#include <string>
#include <tuple>

namespace shimin {

// ---------------------------------------------------------------------------
// LineLayout

LineLayout::LineLayout(RootSystemKind kind) : kind_(kind)
{
    kind_.validate();
    const int n = kind_.rank;
    switch (kind_.family) {
    case Family::A:
        for (int p = 1; p <= n + 1; ++p) slots_.push_back(p);
        break;
    case Family::B:
    case Family::C:
        for (int p = 1; p <= n; ++p) slots_.push_back(p);
        slots_.push_back(0);
        for (int p = n; p >= 1; --p) slots_.push_back(-p);
        break;
    case Family::D:
        for (int p = 1; p <= n; ++p) slots_.push_back(p);
        for (int p = n; p >= 1; --p) slots_.push_back(-p);
        break;
    }
}

bool LineLayout::has_slot(int slot) const
{
    return std::find(slots_.begin(), slots_.end(), slot) != slots_.end();
}

int LineLayout::coordinate(int slot) const
{
    const int n = kind_.rank;
    if (!has_slot(slot)) throw DomainError("no slot " + std::to_string(slot) + " on the " + kind_.to_string() + " line");
    switch (kind_.family) {
    case Family::A: return slot - 1;
    case Family::B:
    case Family::C:
        if (slot > 0) return slot - 1;
        if (slot == 0) return n;
        return 2 * n + 1 + slot;
    case Family::D:
        if (slot == n || slot == -n) return n - 1;
        if (slot > 0) return slot - 1;
        return 2 * n - 1 + slot;
    }
    return 0;
}

bool LineLayout::is_fork(int slot) const
{
    return has_fork() && std::abs(slot) == kind_.rank;
}

LineLayout layout(RootSystemKind kind)
{
    return LineLayout(kind);
}

// ---------------------------------------------------------------------------
// ArcDiagram

ArcDiagram::ArcDiagram(LineLayout line, SignedPermutation w, std::vector<Arc> arcs)
    : layout_(std::move(line)), w_(std::move(w)), arcs_(std::move(arcs))
{
    if (!(layout_.kind() == w_.kind())) throw DomainError("layout and permutation of different types");
    for (Arc& a : arcs_) {
        if (a.from == a.to) throw DomainError("arc endpoints must be distinct slots");
        const int ca = layout_.coordinate(a.from);
        const int cb = layout_.coordinate(a.to);
        if (ca == cb) throw DomainError("an arc cannot join the two fork slots");
        if (ca > cb) std::swap(a.from, a.to);
    }
    std::sort(arcs_.begin(), arcs_.end(), [this](const Arc& x, const Arc& y) {
        const auto key = [this](const Arc& a) {
            return std::make_tuple(layout_.coordinate(a.from), layout_.coordinate(a.to), a.from, a.to);
        };
        return key(x) < key(y);
    });
    arcs_.erase(std::unique(arcs_.begin(), arcs_.end()), arcs_.end());
}

int ArcDiagram::slot_of(int value) const
{
    const int slot = w_.preimage(value); // throws for out-of-range values
    if (!layout_.has_slot(slot)) throw DomainError("value " + std::to_string(value) + " is not on the line");
    return slot;
}

// ---------------------------------------------------------------------------
// Table of roots and arcs

std::vector<std::pair<int, int>> arc_positions(Family family, const Root& r)
{
    const RootPattern p = classify(r);
    using Shape = RootPattern::Shape;
    switch (p.shape) {
    case Shape::Difference:
        if (family == Family::A) return {{p.i, p.j}};
        return {{p.i, p.j}, {-p.j, -p.i}};
    case Shape::Sum: return {{p.i, -p.j}, {p.j, -p.i}};
    case Shape::Double: return {{p.i, -p.i}};
    case Shape::Single: return {{p.i, 0}, {0, -p.i}};
    }
    return {};
}

std::pair<int, int> value_pair(const Root& r)
{
    const RootPattern p = classify(r);
    using Shape = RootPattern::Shape;
    switch (p.shape) {
    case Shape::Difference: return {p.i, p.j};
    case Shape::Sum: return {p.i, -p.j};
    case Shape::Double: return {p.i, -p.i};
    case Shape::Single: return {p.i, 0};
    }
    return {0, 0};
}

ArcDiagram arcs_from_partition(const RootSystem& rs, const SignedPermutation& w,
                               const NonNestingPartition& partition)
{
    if (!(w.kind() == rs.kind())) throw DomainError("element and root system of different types");
    if (!rs.is_antichain(partition.roots))
        throw DomainError("partition is not an antichain of the root poset");
    std::vector<Arc> arcs;
    for (const Root& r : partition.roots) {
        if (!rs.is_positive_root(act(w, r)))
            throw DomainError("not a parking function: w(" + r.to_string() + ") is negative");
        for (const auto& [a, b] : arc_positions(rs.family(), r)) arcs.push_back({a, b});
    }
    return ArcDiagram(LineLayout(rs.kind()), w, std::move(arcs));
}

// ---------------------------------------------------------------------------
// Crossing and nesting

namespace {

struct Span {
    int lo;
    int hi;
};

Span span_of(const ArcDiagram& d, const Arc& a)
{
    return {d.layout().coordinate(a.from), d.layout().coordinate(a.to)};
}

bool spans_cross(Span x, Span y)
{
    if (y.lo < x.lo) std::swap(x, y);
    return x.lo < y.lo && y.lo < x.hi && x.hi < y.hi;
}

bool spans_nest(Span x, Span y)
{
    if (y.lo < x.lo) std::swap(x, y);
    return (x.lo < y.lo && y.hi < x.hi) || (y.lo < x.lo && x.hi < y.hi);
}

} // namespace

bool crossing(const ArcDiagram& d, const Arc& a1, const Arc& a2)
{
    return spans_cross(span_of(d, a1), span_of(d, a2));
}

bool nesting(const ArcDiagram& d, const Arc& a1, const Arc& a2)
{
    return spans_nest(span_of(d, a1), span_of(d, a2));
}

bool is_non_nesting(const ArcDiagram& d)
{
    const auto arcs = d.arcs();
    for (std::size_t x = 0; x < arcs.size(); ++x)
        for (std::size_t y = x + 1; y < arcs.size(); ++y)
            if (nesting(d, arcs[x], arcs[y])) return false;
    return true;
}

// ---------------------------------------------------------------------------
// Arc counts

namespace {

/// Candidate lines for counting between two slots: the deleted fork slot, if any.
std::vector<std::optional<int>> counting_lines(const ArcDiagram& d, int s, int t)
{
    const LineLayout& line = d.layout();
    if (!line.has_fork()) return {std::nullopt};
    std::vector<std::optional<int>> out;
    for (int removed : {line.fork_bottom(), line.fork_top()}) {
        if (removed != s && removed != t) out.emplace_back(removed);
    }
    if (out.empty()) throw DomainError("values on opposite fork slots have no line between them");
    return out;
}

/// Spans lying in [lo, hi] that avoid the removed slot.
std::vector<Span> spans_inside(const ArcDiagram& d, std::optional<int> removed, int lo, int hi)
{
    std::vector<Span> out;
    for (const Arc& a : d.arcs()) {
        if (removed && (a.from == *removed || a.to == *removed)) continue;
        const Span sp = span_of(d, a);
        if (lo <= sp.lo && sp.hi <= hi) out.push_back(sp);
    }
    return out;
}

template <class Count>
int count_between(const ArcDiagram& d, int i, int j, Count count)
{
    if (i == j) throw DomainError("eta needs two distinct values");
    const int s = d.slot_of(i);
    const int t = d.slot_of(j);
    const int cs = d.layout().coordinate(s);
    const int ct = d.layout().coordinate(t);
    const int lo = std::min(cs, ct);
    const int hi = std::max(cs, ct);
    int best = 0;
    for (const auto& removed : counting_lines(d, s, t)) best = std::max(best, count(spans_inside(d, removed, lo, hi)));
    return best;
}

} // namespace

int eta(const ArcDiagram& d, int i, int j)
{
    // Non-nesting spans restricted to an interval: interval scheduling by right end.
    return count_between(d, i, j, [](std::vector<Span> spans) {
        std::sort(spans.begin(), spans.end(),
                  [](Span x, Span y) { return x.hi != y.hi ? x.hi < y.hi : x.lo < y.lo; });
        int taken = 0;
        int last_hi = -1;
        for (const Span& sp : spans) {
            if (sp.lo >= last_hi) {
                ++taken;
                last_hi = sp.hi;
            }
        }
        return taken;
    });
}

int eta_bruteforce(const ArcDiagram& d, int i, int j, std::size_t max_arcs)
{
    return count_between(d, i, j, [max_arcs](const std::vector<Span>& spans) {
        if (spans.size() > max_arcs)
            throw ResourceError("eta_bruteforce: " + std::to_string(spans.size()) + " arcs exceed limit " +
                                    std::to_string(max_arcs),
                                0);
        const std::size_t m = spans.size();
        int best = 0;
        for (unsigned long mask = 0; mask < (1ul << m); ++mask) {
            bool ok = true;
            for (std::size_t x = 0; x < m && ok; ++x) {
                if (!(mask >> x & 1ul)) continue;
                for (std::size_t y = x + 1; y < m && ok; ++y) {
                    if (!(mask >> y & 1ul)) continue;
                    const Span a = spans[x];
                    const Span b = spans[y];
                    const bool cross = (a.lo < b.lo && b.lo < a.hi && a.hi < b.hi) ||
                                       (b.lo < a.lo && a.lo < b.hi && b.hi < a.hi);
                    const bool nest = (a.lo < b.lo && b.hi < a.hi) || (b.lo < a.lo && a.hi < b.hi);
                    ok = !cross && !nest;
                }
            }
            if (ok) best = std::max(best, std::popcount(mask));
        }
        return best;
    });
}

} // namespace shimin
