#include "brute.hpp"

#include "shimin/errors.hpp"
#include "shimin/weyl.hpp"

#include <doctest.h>

#include <set>

using namespace shimin;

namespace {

const std::vector<RootSystemKind> rank3_kinds = {
    {Family::A, 1}, {Family::A, 2}, {Family::A, 3}, {Family::B, 2}, {Family::B, 3},
    {Family::C, 2}, {Family::C, 3}, {Family::D, 3},
};

} // namespace

TEST_CASE("signed permutation validation")
{
    CHECK_THROWS_AS(SignedPermutation({Family::A, 2}, {1, 1, 2}), DomainError);
    CHECK_THROWS_AS(SignedPermutation({Family::A, 2}, {1, -2, 3}), DomainError);
    CHECK_THROWS_AS(SignedPermutation({Family::B, 2}, {1}), DomainError);
    CHECK_THROWS_AS(SignedPermutation({Family::D, 3}, {-1, 2, 3}), DomainError);
    CHECK_NOTHROW(SignedPermutation({Family::D, 3}, {-1, -2, 3}));
    const SignedPermutation w({Family::B, 2}, {-2, 1});
    CHECK(w(1) == -2);
    CHECK(w(-1) == 2);
    CHECK(w(0) == 0);
    CHECK(w.preimage(1) == 2);
    CHECK(w.preimage(2) == -1);
}

TEST_CASE("group orders")
{
    CHECK(weyl_group_elements({Family::A, 3}).size() == 24);
    CHECK(weyl_group_elements({Family::B, 3}).size() == 48);
    CHECK(weyl_group_elements({Family::D, 3}).size() == 24);
    CHECK(weyl_group_elements({Family::D, 4}).size() == 192);
}

TEST_CASE("act examples")
{
    const RootSystem a2({Family::A, 2});
    CHECK(act(SignedPermutation::identity(a2.kind()), Root{1, 0, -1}) == Root{1, 0, -1});
    CHECK(act(SignedPermutation({Family::A, 2}, {2, 1, 3}), Root{1, -1, 0}) == Root{-1, 1, 0});

    const SignedPermutation w({Family::B, 2}, {-2, 1});
    CHECK(act(w, Root{1, -1}) == Root{-1, -1});
    CHECK_THROWS_AS(act(w, Root{1, -1, 0}), DomainError);
}

TEST_CASE("inverse")
{
    const auto id = SignedPermutation::identity({Family::C, 3});
    CHECK(inverse(id) == id);
    const SignedPermutation t({Family::A, 3}, {1, 4, 3, 2});
    CHECK(inverse(t) == t);

    const SignedPermutation w({Family::B, 2}, {-2, 1});
    // solve u * w = id by search
    std::vector<SignedPermutation> solutions;
    for (const auto& u : weyl_group_elements(w.kind()))
        if ((u * w).is_identity()) solutions.push_back(u);
    REQUIRE(solutions.size() == 1);
    CHECK(solutions[0] == SignedPermutation({Family::B, 2}, {2, -1}));
    CHECK(inverse(w) == solutions[0]);
}

TEST_CASE("action preserves the root system and inverse undoes it")
{
    for (const auto& k : rank3_kinds) {
        CAPTURE(k.to_string());
        const RootSystem rs(k);
        for (const auto& w : weyl_group_elements(k)) {
            const auto winv = w.inverse();
            std::set<Root> image;
            for (const Root& r : rs.positive_roots()) {
                const Root img = act(w, r);
                CHECK(rs.is_root(img));
                CHECK(act(winv, img) == r);
                image.insert(img);
            }
            CHECK(image.size() == rs.size());
        }
    }
}

TEST_CASE("type D elements never produce short or long patterns")
{
    for (int n : {3, 4}) {
        const RootSystem d({Family::D, n});
        for (const auto& w : weyl_group_elements(d.kind()))
            for (const Root& r : d.positive_roots()) {
                const auto shape = classify(is_positive(d, act(w, r)) ? act(w, r) : -act(w, r)).shape;
                CHECK((shape == RootPattern::Shape::Difference || shape == RootPattern::Shape::Sum));
            }
    }
}

TEST_CASE("is_positive")
{
    const RootSystem a2({Family::A, 2});
    CHECK(is_positive(a2, Root{1, -1, 0}));
    CHECK_FALSE(is_positive(a2, Root{-1, 1, 0}));
    CHECK_THROWS_AS(is_positive(a2, Root{1, 1, -2}), DomainError);
    const RootSystem b2({Family::B, 2});
    CHECK_FALSE(is_positive(b2, Root{-1, 0}));
}

TEST_CASE("inversion vectors")
{
    const std::vector<int> zeros{0, 0, 0};
    CHECK(decode_inversion_vector(zeros).is_identity());

    for (const std::vector<int>& line : {std::vector<int>{1, 3, 2}, std::vector<int>{3, 2, 1}}) {
        const SignedPermutation pi({Family::A, 2}, line);
        const auto code = encode_inversion_vector(pi);
        CHECK(decode_inversion_vector(code) == pi);
    }
    // in 1 3 2 only value 3 has a smaller value (2) on its right
    CHECK(encode_inversion_vector(SignedPermutation({Family::A, 2}, {1, 3, 2})) == std::vector<int>{0, 0, 1});
    CHECK(encode_inversion_vector(SignedPermutation({Family::A, 2}, {3, 2, 1})) == std::vector<int>{0, 1, 2});

    const std::vector<int> bad{0, 2, 0};
    CHECK_THROWS_AS(decode_inversion_vector(bad), DomainError);
    const std::vector<int> single{0};
    CHECK_THROWS_AS(decode_inversion_vector(single), DomainError);

    for (const auto& pi : weyl_group_elements({Family::A, 3}))
        CHECK(decode_inversion_vector(encode_inversion_vector(pi)) == pi);
}

TEST_CASE("from_negative_set examples")
{
    const RootSystem a2({Family::A, 2});
    CHECK(from_negative_set(a2, {}).is_identity());

    const std::vector<Root> n1{{1, -1, 0}};
    const auto found = brute::with_negative_set(a2, n1);
    REQUIRE(found.size() == 1);
    CHECK(found[0] == SignedPermutation({Family::A, 2}, {2, 1, 3}));
    CHECK(from_negative_set(a2, n1) == found[0]);

    const std::vector<Root> n2{{1, 0, -1}};
    CHECK(brute::with_negative_set(a2, n2).empty());
    CHECK_THROWS_AS(from_negative_set(a2, n2), InadmissibleError);
}

TEST_CASE("from_negative_set inverts negative_set on whole groups")
{
    for (const auto& k : rank3_kinds) {
        CAPTURE(k.to_string());
        const RootSystem rs(k);
        for (const auto& w : weyl_group_elements(k)) CHECK(from_negative_set(rs, negative_set(rs, w)) == w);
    }
}

TEST_CASE("window notation")
{
    CHECK(SignedPermutation({Family::A, 2}, {2, 1, 3}).window() == "2 1 3");
    CHECK(SignedPermutation({Family::B, 2}, {-2, 1}).window() == "-2 1 | 0 | -1 2");
    CHECK(SignedPermutation::identity({Family::D, 3}).window() == "1 2 {3/-3} -2 -1");
}
