#include "a2_census.hpp"
#include "shimin/errors.hpp"
#include "shimin/oracle.hpp"

#include <doctest.h>

#include <cstdlib>
#include <numeric>
#include <set>

using namespace shimin;
using linalg::Rational;

namespace {

Root r(std::vector<int> c) { return Root(std::move(c)); }

long long abs_sum(const ShiVector& v)
{
    return std::accumulate(v.entries.begin(), v.entries.end(), 0LL, [](long long s, long long x) { return s + (x < 0 ? -x : x); });
}

} // namespace

TEST_CASE("fundamental alcove")
{
    const RootSystem a2({Family::A, 2});
    const auto fa = fundamental_alcove(a2);
    CHECK(pairing(fa.point, r({1, 0, -1})) == Rational(1, 2));
    CHECK(pairing(fa.point, r({1, -1, 0})) == Rational(1, 4));
    CHECK(fa.kvec == ShiVector{{0, 0, 0}});
    CHECK(fa.depth == 0);

    const RootSystem c2({Family::C, 2});
    CHECK(pairing(fundamental_alcove(c2).point, r({2, 0})) == Rational(3, 5));

    for (auto k : {RootSystemKind{Family::B, 3}, RootSystemKind{Family::D, 4}, RootSystemKind{Family::A, 4}}) {
        const RootSystem rs(k);
        const auto f = fundamental_alcove(rs);
        CHECK(f.kvec == ShiVector{std::vector<long long>(rs.positive_roots().size(), 0)});
        const auto top = pairing(f.point, rs.highest_root());
        CHECK(top > 0);
        CHECK(top < 1);
    }
}

TEST_CASE("affine reflections")
{
    const RootSystem a1({Family::A, 1});
    const Root alpha = r({1, -1});
    const RationalPoint p = {Rational(1, 6), Rational(-1, 6)};
    CHECK(pairing(p, alpha) == Rational(1, 3));
    CHECK(pairing(reflect(p, alpha, 0), alpha) == Rational(-1, 3));
    CHECK(pairing(reflect(p, alpha, 1), alpha) == Rational(5, 3));
    CHECK(reflect(reflect(p, alpha, 1), alpha, 1) == p);
    CHECK_THROWS_AS(reflect({Rational(1, 2), Rational(-1, 2)}, alpha, 1), DomainError);

    const RootSystem b2({Family::B, 2});
    const RationalPoint q = {Rational(2, 7), Rational(1, 9)};
    for (const Root& beta : b2.positive_roots())
        for (long long k : {-2LL, 0LL, 3LL}) CHECK(reflect(reflect(q, beta, k), beta, k) == q);
}

TEST_CASE("k_vector")
{
    const RootSystem a2({Family::A, 2});
    CHECK(k_vector(a2, fundamental_alcove(a2).point) == ShiVector{{0, 0, 0}});
    // pairings (1/2, 1, 1/2): integer on e1-e3
    const RationalPoint degenerate = {Rational(1, 2), Rational(0), Rational(-1, 2)};
    CHECK_THROWS_AS(k_vector(a2, degenerate), DegeneratePointError);
    CHECK_THROWS_AS(k_vector(a2, degenerate), DomainError);

    const auto across = reflect(fundamental_alcove(a2).point, a2.highest_root(), 1);
    CHECK(pairing(across, a2.highest_root()) == Rational(3, 2));
    const auto kv = k_vector(a2, across);
    CHECK(kv == ShiVector{{0, 1, 0}});
    CHECK(is_shi_vector(a2, kv));
}

TEST_CASE("A_1 line of alcoves")
{
    const RootSystem a1({Family::A, 1});
    const auto e = enumerate_alcoves(a1, Radius{3});
    REQUIRE(e.alcoves.size() == 7);
    CHECK(e.depth == 3);
    CHECK_FALSE(e.truncated);
    std::set<long long> ks;
    for (const auto& a : e.alcoves) {
        ks.insert(a.kvec.entries[0]);
        CHECK(a.depth == std::abs(a.kvec.entries[0]));
    }
    CHECK(ks == std::set<long long>{-3, -2, -1, 0, 1, 2, 3});

    const auto regions = regions_by_sign(e.alcoves);
    REQUIRE(regions.size() == 3);
    CHECK(regions.at(SignType{{Sign::Minus}}).size() == 3);
    CHECK(regions.at(SignType{{Sign::Zero}}).size() == 1);
    CHECK(regions.at(SignType{{Sign::Plus}}).size() == 3);
    CHECK(oracle_minimal(regions.at(SignType{{Sign::Minus}})) == ShiVector{{-1}});
    CHECK(oracle_minimal(regions.at(SignType{{Sign::Zero}})) == ShiVector{{0}});
}

TEST_CASE("A_2 census and region minima")
{
    const RootSystem a2({Family::A, 2});
    const auto e = enumerate_alcoves(a2, UntilRegions{16});
    const auto regions = regions_by_sign(e.alcoves);
    std::set<std::string> found, expected;
    for (const auto& [sign, group] : regions) found.insert(sign.to_string());
    for (auto s : a2_sign_types) expected.insert("(" + std::string(s) + ")");
    CHECK(found == expected);

    CHECK(oracle_minimal(regions.at(parse_sign_csv(a2, "+,+,+"))) == ShiVector{{1, 2, 1}});
    CHECK(oracle_minimal(regions.at(parse_sign_csv(a2, "-,0,+"))) == ShiVector{{-1, 0, 1}});
    CHECK(oracle_minimal(regions.at(parse_sign_csv(a2, "0,0,0"))) == ShiVector{{0, 0, 0}});
}

TEST_CASE("oracle invariants")
{
    for (auto k : {RootSystemKind{Family::A, 3}, RootSystemKind{Family::B, 2}, RootSystemKind{Family::C, 2},
                   RootSystemKind{Family::D, 3}}) {
        CAPTURE(k.to_string());
        const RootSystem rs(k);
        const auto e = enumerate_alcoves(rs, UntilRegions{});
        std::set<ShiVector> kvecs;
        int depth = 0;
        for (const auto& a : e.alcoves) {
            CHECK(kvecs.insert(a.kvec).second); // K is injective
            CHECK(k_vector(rs, a.point) == a.kvec);
            CHECK(is_shi_vector(rs, a.kvec));
            CHECK(a.depth >= depth); // BFS order
            depth = a.depth;
        }
        const auto regions = regions_by_sign(e.alcoves);
        for (const auto& [sign, group] : regions) {
            const auto m = oracle_minimal(group);
            CHECK(sign_of(m) == sign);
            for (const Alcove* a : group) CHECK(abs_sum(m) <= abs_sum(a->kvec));
        }
        // two more layers add no sign type
        const auto more = enumerate_alcoves(rs, Radius{e.depth + 2});
        CHECK(regions_by_sign(more.alcoves).size() == regions.size());
    }
}

TEST_CASE("enumeration does not depend on the thread count")
{
    const RootSystem b3({Family::B, 3});
    const auto one = enumerate_alcoves(b3, Radius{6}, {.threads = 1});
    const auto three = enumerate_alcoves(b3, Radius{6}, {.threads = 3});
    REQUIRE(one.alcoves.size() == three.alcoves.size());
    for (std::size_t i = 0; i < one.alcoves.size(); ++i) {
        CHECK(one.alcoves[i].kvec == three.alcoves[i].kvec);
        CHECK(one.alcoves[i].point == three.alcoves[i].point);
    }
}

TEST_CASE("resource limits")
{
    const RootSystem a3({Family::A, 3});
    CHECK_THROWS_AS(enumerate_alcoves(a3, Radius{10}, {.max_alcoves = 50}), ResourceError);
    try {
        enumerate_alcoves(a3, Radius{10}, {.max_alcoves = 50});
    } catch (const ResourceError& err) {
        CHECK(err.has_partial_results());
    }
    const auto partial = enumerate_alcoves(a3, Radius{10}, {.max_alcoves = 50, .allow_partial = true});
    CHECK(partial.truncated);
    CHECK(partial.alcoves.size() <= 50);
    CHECK_THROWS_AS(enumerate_alcoves(a3, UntilRegions{}, {.max_depth = 2}), ResourceError);
}

TEST_CASE("oracle_minimal without a dominating member")
{
    const RootSystem a2({Family::A, 2});
    const Alcove x{{}, ShiVector{{1, 3, 1}}, 0};
    const Alcove y{{}, ShiVector{{2, 2, 1}}, 0};
    const std::vector<const Alcove*> group = {&x, &y};
    CHECK_FALSE(find_dominating(group).has_value());
    CHECK_THROWS_AS(oracle_minimal(group), SaturationError);
    const std::vector<const Alcove*> single = {&x};
    CHECK(oracle_minimal(single) == x.kvec);
}
