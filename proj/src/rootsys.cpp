#include "shimin/rootsys.hpp"

#include "shimin/errors.hpp"
#include "shimin/linalg.hpp"

#include <algorithm>
#include <cctype>
#include <cstdlib>
#include <sstream>

namespace shimin {

std::string to_string(Family family)
{
    return std::string(1, static_cast<char>(family));
}

Family parse_family(std::string_view text)
{
    if (text.size() == 1) {
        switch (std::toupper(static_cast<unsigned char>(text[0]))) {
        case 'A': return Family::A;
        case 'B': return Family::B;
        case 'C': return Family::C;
        case 'D': return Family::D;
        default: break;
        }
    }
    throw ConfigError("unknown root system family '" + std::string(text) + "'");
}

void RootSystemKind::validate() const
{
    const int min_rank = family == Family::A ? 1 : family == Family::D ? 3 : 2;
    if (rank < min_rank) {
        throw ConfigError("type " + shimin::to_string(family) + " requires rank >= " +
                          std::to_string(min_rank) + ", got " + std::to_string(rank));
    }
}

std::string RootSystemKind::to_string() const
{
    return shimin::to_string(family) + std::to_string(rank);
}

// ---------------------------------------------------------------------------
// Root

Root Root::unit(int dim, int i, int coeff)
{
    std::vector<int> c(static_cast<std::size_t>(dim), 0);
    c.at(static_cast<std::size_t>(i - 1)) = coeff;
    return Root(std::move(c));
}

bool Root::is_zero() const
{
    return std::all_of(coords_.begin(), coords_.end(), [](int c) { return c == 0; });
}

Root Root::operator-() const
{
    std::vector<int> c(coords_);
    for (int& x : c) x = -x;
    return Root(std::move(c));
}

Root operator+(const Root& a, const Root& b)
{
    if (a.dim() != b.dim()) throw DomainError("root dimension mismatch");
    std::vector<int> c(a.coords_);
    for (std::size_t i = 0; i < c.size(); ++i) c[i] += b.coords_[i];
    return Root(std::move(c));
}

Root operator-(const Root& a, const Root& b)
{
    return a + (-b);
}

int dot(const Root& a, const Root& b)
{
    if (a.dim() != b.dim()) throw DomainError("root dimension mismatch");
    int s = 0;
    for (std::size_t i = 0; i < a.dim(); ++i) s += a.coords_[i] * b.coords_[i];
    return s;
}

std::string Root::to_string() const
{
    std::ostringstream out;
    bool first = true;
    for (std::size_t i = 0; i < coords_.size(); ++i) {
        const int c = coords_[i];
        if (c == 0) continue;
        if (c < 0) out << '-';
        else if (!first) out << '+';
        if (std::abs(c) != 1) out << std::abs(c);
        out << 'e' << i + 1;
        first = false;
    }
    if (first) out << '0';
    return out.str();
}

std::size_t RootHash::operator()(const Root& r) const noexcept
{
    std::size_t h = r.dim();
    for (int c : r.coords()) h = h * 31 + static_cast<std::size_t>(c + 7);
    return h;
}

RootPattern classify(const Root& r)
{
    std::vector<std::pair<int, int>> nz; // (1-based index, coefficient)
    for (std::size_t k = 0; k < r.dim(); ++k) {
        if (r[k] != 0) nz.emplace_back(static_cast<int>(k) + 1, r[k]);
    }
    using Shape = RootPattern::Shape;
    if (nz.size() == 2) {
        const auto [i, ci] = nz[0];
        const auto [j, cj] = nz[1];
        if (ci == 1 && cj == -1) return {Shape::Difference, i, j};
        if (ci == 1 && cj == 1) return {Shape::Sum, i, j};
    } else if (nz.size() == 1) {
        const auto [i, c] = nz[0];
        if (c == 2) return {Shape::Double, i, 0};
        if (c == 1) return {Shape::Single, i, 0};
    }
    throw DomainError("not a positive classical root: " + r.to_string());
}

// ---------------------------------------------------------------------------
// RootSystem

namespace {

std::vector<Root> make_positive_roots(const RootSystemKind& kind)
{
    const int n = kind.rank;
    const int dim = kind.ambient_dim();
    std::vector<Root> out;
    if (kind.family == Family::A) {
        for (int i = 1; i <= n + 1; ++i)
            for (int j = i + 1; j <= n + 1; ++j)
                out.push_back(Root::unit(dim, i) - Root::unit(dim, j));
        return out;
    }
    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j)
            out.push_back(Root::unit(dim, i) - Root::unit(dim, j));
    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j)
            out.push_back(Root::unit(dim, i) + Root::unit(dim, j));
    if (kind.family == Family::B)
        for (int i = 1; i <= n; ++i) out.push_back(Root::unit(dim, i));
    if (kind.family == Family::C)
        for (int i = 1; i <= n; ++i) out.push_back(Root::unit(dim, i, 2));
    return out;
}

std::vector<Root> make_simple_roots(const RootSystemKind& kind)
{
    const int n = kind.rank;
    const int dim = kind.ambient_dim();
    std::vector<Root> out;
    const int differences = kind.family == Family::A ? n : n - 1;
    for (int i = 1; i <= differences; ++i) out.push_back(Root::unit(dim, i) - Root::unit(dim, i + 1));
    switch (kind.family) {
    case Family::A: break;
    case Family::B: out.push_back(Root::unit(dim, n)); break;
    case Family::C: out.push_back(Root::unit(dim, n, 2)); break;
    case Family::D: out.push_back(Root::unit(dim, n - 1) + Root::unit(dim, n)); break;
    }
    return out;
}

} // namespace

RootSystem::RootSystem(RootSystemKind kind) : kind_(kind)
{
    kind_.validate();
    positive_ = make_positive_roots(kind_);
    simple_ = make_simple_roots(kind_);
    for (std::size_t i = 0; i < positive_.size(); ++i) index_.emplace(positive_[i], i);

    // Decompose every positive root over the simple roots.
    const auto dim = static_cast<std::size_t>(ambient_dim());
    linalg::RationalMatrix basis(dim, linalg::RationalVector(simple_.size()));
    for (std::size_t col = 0; col < simple_.size(); ++col)
        for (std::size_t row = 0; row < dim; ++row) basis[row][col] = simple_[col][row];

    coeffs_.reserve(positive_.size());
    heights_.reserve(positive_.size());
    for (const Root& r : positive_) {
        linalg::RationalVector rhs(r.coords().begin(), r.coords().end());
        auto sol = linalg::solve(basis, rhs);
        if (!sol) throw Error("internal: root " + r.to_string() + " outside the simple-root span");
        std::vector<int> c;
        int h = 0;
        for (const auto& q : *sol) {
            if (q.get_den() != 1 || q < 0)
                throw Error("internal: root " + r.to_string() + " is not in N-span of simple roots");
            c.push_back(static_cast<int>(q.get_num().get_si()));
            h += c.back();
        }
        coeffs_.push_back(std::move(c));
        heights_.push_back(h);
    }

    for (std::size_t a = 0; a < positive_.size(); ++a) {
        for (std::size_t b = a + 1; b < positive_.size(); ++b) {
            if (auto c = index_of(positive_[a] + positive_[b])) triples_.push_back({a, b, *c});
        }
    }

    highest_ = static_cast<std::size_t>(
        std::max_element(heights_.begin(), heights_.end()) - heights_.begin());
    for (std::size_t i = 0; i < positive_.size(); ++i) {
        if (!leq(i, highest_)) throw Error("internal: root poset has no maximum");
    }
}

std::optional<std::size_t> RootSystem::index_of(const Root& r) const
{
    auto it = index_.find(r);
    if (it == index_.end()) return std::nullopt;
    return it->second;
}

std::size_t RootSystem::require_index(const Root& r) const
{
    if (auto idx = index_of(r)) return *idx;
    throw DomainError(r.to_string() + " is not a positive root of " + kind_.to_string());
}

bool RootSystem::leq(std::size_t a, std::size_t b) const
{
    const auto& ca = coeffs_.at(a);
    const auto& cb = coeffs_.at(b);
    for (std::size_t k = 0; k < ca.size(); ++k) {
        if (cb[k] < ca[k]) return false;
    }
    return true;
}

bool RootSystem::is_antichain(std::span<const Root> roots) const
{
    std::vector<std::size_t> idx;
    for (const Root& r : roots) {
        auto i = index_of(r);
        if (!i) return false;
        idx.push_back(*i);
    }
    for (std::size_t x = 0; x < idx.size(); ++x)
        for (std::size_t y = x + 1; y < idx.size(); ++y)
            if (comparable(idx[x], idx[y])) return false;
    return true;
}

NonNestingPartition RootSystem::make_partition(std::vector<Root> roots) const
{
    if (!is_antichain(roots))
        throw DomainError("roots do not form an antichain of the root poset of " + kind_.to_string());
    std::sort(roots.begin(), roots.end(), [this](const Root& a, const Root& b) {
        return require_index(a) < require_index(b);
    });
    return NonNestingPartition{std::move(roots)};
}

std::vector<NonNestingPartition> RootSystem::antichains() const
{
    std::vector<NonNestingPartition> out;
    std::vector<std::size_t> current;
    auto extend = [&](auto&& self, std::size_t start) -> void {
        NonNestingPartition p;
        for (std::size_t i : current) p.roots.push_back(positive_[i]);
        out.push_back(std::move(p));
        for (std::size_t k = start; k < positive_.size(); ++k) {
            bool free = std::none_of(current.begin(), current.end(),
                                     [&](std::size_t c) { return comparable(c, k); });
            if (!free) continue;
            current.push_back(k);
            self(self, k + 1);
            current.pop_back();
        }
    };
    extend(extend, 0);
    return out;
}

RootSystem build_root_system(RootSystemKind kind)
{
    return RootSystem(kind);
}

int height(const RootSystem& rs, const Root& r)
{
    return rs.height(r);
}

bool poset_leq(const RootSystem& rs, const Root& a, const Root& b)
{
    return rs.leq(a, b);
}

Root highest_root(const RootSystem& rs)
{
    return rs.highest_root();
}

std::vector<std::tuple<Root, Root, Root>> addition_triples(const RootSystem& rs)
{
    std::vector<std::tuple<Root, Root, Root>> out;
    for (const auto& t : rs.addition_triples()) out.emplace_back(rs.root(t.a), rs.root(t.b), rs.root(t.c));
    return out;
}

std::vector<NonNestingPartition> antichains(const RootSystem& rs)
{
    return rs.antichains();
}

} // namespace shimin
