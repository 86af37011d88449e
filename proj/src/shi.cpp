#include "shimin/shi.hpp"

#include "shimin/diagrams.hpp"
#include "shimin/errors.hpp"

#include <algorithm>
#include <sstream>

namespace shimin {

char to_char(Sign s)
{
    switch (s) {
    case Sign::Minus: return '-';
    case Sign::Zero: return '0';
    case Sign::Plus: return '+';
    }
    return '?';
}

Sign parse_sign(char c)
{
    switch (c) {
    case '-': return Sign::Minus;
    case '0': return Sign::Zero;
    case '+': return Sign::Plus;
    default: throw DomainError(std::string("not a sign: '") + c + "'");
    }
}

std::string SignType::to_string() const
{
    std::string out = "(";
    for (std::size_t i = 0; i < signs.size(); ++i) {
        if (i) out += ',';
        out += to_char(signs[i]);
    }
    return out + ")";
}

std::string ShiVector::to_csv() const
{
    std::ostringstream out;
    for (std::size_t i = 0; i < entries.size(); ++i) out << (i ? "," : "") << entries[i];
    return out.str();
}

// ---------------------------------------------------------------------------

ParkingFunction make_parking_function(const RootSystem& rs, SignedPermutation w, std::vector<Root> partition)
{
    if (!(w.kind() == rs.kind())) throw DomainError("element and root system of different types");
    NonNestingPartition p = rs.make_partition(std::move(partition));
    for (const Root& r : p.roots) {
        if (!rs.is_positive_root(act(w, r)))
            throw DomainError("not a parking function: w(" + r.to_string() + ") is negative");
    }
    return ParkingFunction{std::move(w), std::move(p)};
}

std::vector<ParkingFunction> parking_functions(const RootSystem& rs)
{
    const auto group = weyl_group_elements(rs.kind());
    std::vector<ParkingFunction> out;
    for (const auto& p : rs.antichains()) {
        for (const auto& w : group) {
            const bool ok = std::all_of(p.roots.begin(), p.roots.end(),
                                        [&](const Root& r) { return rs.is_positive_root(act(w, r)); });
            if (ok) out.push_back({w, p});
        }
    }
    return out;
}

std::vector<ShiViolation> check_shi_relations(const RootSystem& rs, const ShiVector& v)
{
    if (v.size() != rs.size())
        throw DomainError("Shi vector has " + std::to_string(v.size()) + " entries, expected " +
                          std::to_string(rs.size()));
    std::vector<ShiViolation> out;
    for (const AdditionTriple& t : rs.addition_triples()) {
        const long long eps = v.entries[t.c] - v.entries[t.a] - v.entries[t.b];
        if (eps != 0 && eps != 1) out.push_back({t, eps});
    }
    return out;
}

bool is_shi_vector(const RootSystem& rs, const ShiVector& v)
{
    return check_shi_relations(rs, v).empty();
}

SignType sign_of(const ShiVector& v)
{
    SignType out;
    out.signs.reserve(v.size());
    for (long long x : v.entries) out.signs.push_back(x > 0 ? Sign::Plus : x < 0 ? Sign::Minus : Sign::Zero);
    return out;
}

ShiVector minimal_element(const RootSystem& rs, const ParkingFunction& pf)
{
    const ArcDiagram diagram = arcs_from_partition(rs, pf.w, pf.partition);
    const SignedPermutation winv = pf.w.inverse();
    ShiVector m;
    m.entries.reserve(rs.size());
    for (const Root& alpha : rs.positive_roots()) {
        const auto [i, j] = value_pair(alpha);
        const long long count = eta(diagram, i, j);
        const bool above = rs.is_positive_root(act(winv, alpha));
        m.entries.push_back(above ? count : -(count + 1));
    }
    return m;
}

SignType sign_type_of_pf(const RootSystem& rs, const ParkingFunction& pf)
{
    return sign_of(minimal_element(rs, pf));
}

namespace {

void require_length(const RootSystem& rs, const SignType& v)
{
    if (v.size() != rs.size())
        throw DomainError("sign type has " + std::to_string(v.size()) + " entries, expected " +
                          std::to_string(rs.size()));
}

/// Index of e_i - e_j (i < j) among the type A positive roots.
std::size_t type_a_index(const RootSystem& rs, int i, int j)
{
    const int dim = rs.ambient_dim();
    return rs.require_index(Root::unit(dim, i) - Root::unit(dim, j));
}

} // namespace

ParkingFunction al_forward(const RootSystem& rs, const SignType& v)
{
    if (rs.family() != Family::A) throw DomainError("the Athanasiadis-Linusson map is for type A");
    require_length(rs, v);
    const int m = rs.ambient_dim();
    auto sign = [&](int i, int j) { return v.signs[type_a_index(rs, i, j)]; };

    // {0,+} entries v_{i,j}, i < j, count the smaller values left of j; the
    // inversion vector wants the ones on its right.
    std::vector<int> counts(static_cast<std::size_t>(m), 0);
    for (int j = 1; j <= m; ++j) {
        int left = 0;
        for (int i = 1; i < j; ++i)
            if (sign(i, j) != Sign::Minus) ++left;
        counts[static_cast<std::size_t>(j - 1)] = (j - 1) - left;
    }

    SignedPermutation pi = decode_inversion_vector(counts);
    for (int i = 1; i <= m; ++i) {
        for (int j = i + 1; j <= m; ++j) {
            const bool i_left = pi.preimage(i) < pi.preimage(j);
            if (i_left != (sign(i, j) != Sign::Minus))
                throw InadmissibleError("sign type " + v.to_string() + " has inconsistent '-' entries");
        }
    }

    struct PosArc {
        int lo;
        int hi;
    };
    std::vector<PosArc> arcs;
    for (int i = 1; i <= m; ++i)
        for (int j = i + 1; j <= m; ++j)
            if (sign(i, j) == Sign::Plus) arcs.push_back({pi.preimage(i), pi.preimage(j)});

    std::vector<Root> partition;
    for (const PosArc& a : arcs) {
        const bool contains_other = std::any_of(arcs.begin(), arcs.end(), [&](const PosArc& b) {
            return (b.lo != a.lo || b.hi != a.hi) && a.lo <= b.lo && b.hi <= a.hi;
        });
        if (!contains_other) partition.push_back(Root::unit(m, a.lo) - Root::unit(m, a.hi));
    }

    ParkingFunction pf = [&] {
        try {
            return make_parking_function(rs, pi, std::move(partition));
        } catch (const DomainError& e) {
            throw InadmissibleError("sign type " + v.to_string() + " is not admissible: " + e.what());
        }
    }();
    if (sign_type_of_pf(rs, pf) != v)
        throw InadmissibleError("sign type " + v.to_string() + " is not admissible");
    return pf;
}

ParkingFunction arr_forward(const RootSystem& rs, const SignType& v)
{
    require_length(rs, v);
    std::vector<Root> negatives;
    for (std::size_t k = 0; k < rs.size(); ++k)
        if (v.signs[k] == Sign::Minus) negatives.push_back(rs.root(k));
    SignedPermutation w = from_negative_set(rs, negatives);

    std::vector<ParkingFunction> found;
    for (auto& p : rs.antichains()) {
        const bool ok = std::all_of(p.roots.begin(), p.roots.end(),
                                    [&](const Root& r) { return rs.is_positive_root(act(w, r)); });
        if (!ok) continue;
        ParkingFunction pf{w, std::move(p)};
        if (sign_type_of_pf(rs, pf) == v) found.push_back(std::move(pf));
    }
    if (found.empty()) throw InadmissibleError("sign type " + v.to_string() + " is not admissible");
    if (found.size() > 1)
        throw InadmissibleError("sign type " + v.to_string() + " is realized by " + std::to_string(found.size()) +
                                " parking functions");
    return std::move(found.front());
}

bool is_admissible(const RootSystem& rs, const SignType& v)
{
    try {
        arr_forward(rs, v);
        return true;
    } catch (const InadmissibleError&) {
        return false;
    }
}

ShiVector minimal_from_sign(const RootSystem& rs, const SignType& v)
{
    return minimal_element(rs, arr_forward(rs, v));
}

// ---------------------------------------------------------------------------
// Text forms

namespace {

std::vector<std::string_view> split(std::string_view text, char sep)
{
    std::vector<std::string_view> out;
    std::size_t start = 0;
    while (true) {
        const auto pos = text.find(sep, start);
        out.push_back(text.substr(start, pos == std::string_view::npos ? pos : pos - start));
        if (pos == std::string_view::npos) break;
        start = pos + 1;
    }
    return out;
}

std::string_view strip(std::string_view s)
{
    const auto first = s.find_first_not_of(" \t\r\n()[]");
    if (first == std::string_view::npos) return {};
    const auto last = s.find_last_not_of(" \t\r\n()[]");
    return s.substr(first, last - first + 1);
}

Sign parse_sign_token(std::string_view token)
{
    token = strip(token);
    if (token.size() != 1) throw DomainError("not a sign: '" + std::string(token) + "'");
    return parse_sign(token[0]);
}

} // namespace

SignType parse_sign_csv(const RootSystem& rs, std::string_view text)
{
    SignType v;
    for (auto token : split(strip(text), ',')) v.signs.push_back(parse_sign_token(token));
    require_length(rs, v);
    return v;
}

SignType parse_pyramid(const RootSystem& rs, std::string_view text)
{
    if (rs.family() != Family::A) throw DomainError("pyramid layout is for type A");
    const int m = rs.ambient_dim();
    const auto rows = split(strip(text), '/');
    if (static_cast<int>(rows.size()) != m - 1)
        throw DomainError("pyramid needs " + std::to_string(m - 1) + " rows");
    SignType v;
    v.signs.assign(rs.size(), Sign::Zero);
    for (std::size_t r = 0; r < rows.size(); ++r) {
        const int gap = m - 1 - static_cast<int>(r); // top row first
        const auto cells = split(rows[r], ',');
        if (static_cast<int>(cells.size()) != m - gap)
            throw DomainError("pyramid row " + std::to_string(r + 1) + " needs " + std::to_string(m - gap) +
                              " signs");
        for (int i = 1; i + gap <= m; ++i)
            v.signs[type_a_index(rs, i, i + gap)] = parse_sign_token(cells[static_cast<std::size_t>(i - 1)]);
    }
    return v;
}

std::string to_pyramid(const RootSystem& rs, const SignType& v)
{
    if (rs.family() != Family::A) throw DomainError("pyramid layout is for type A");
    require_length(rs, v);
    const int m = rs.ambient_dim();
    std::string out;
    for (int gap = m - 1; gap >= 1; --gap) {
        if (gap != m - 1) out += '/';
        for (int i = 1; i + gap <= m; ++i) {
            if (i > 1) out += ',';
            out += to_char(v.signs[type_a_index(rs, i, i + gap)]);
        }
    }
    return out;
}

} // namespace shimin
