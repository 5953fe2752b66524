#include <doctest.h>

#include <algorithm>
#include <stdexcept>

#include "nonloose/decorated.hpp"
#include "oracles.hpp"

using namespace nonloose;

namespace {
Slope S(const char* t) { return Slope::parse(t); }
constexpr Sign P = Sign::Plus, M = Sign::Minus, U = Sign::Unsigned;

FareyPath path_of(std::initializer_list<const char*> vs) {
    std::vector<Slope> v;
    for (auto t : vs) v.push_back(S(t));
    return FareyPath(v);
}

// inf -> -p-1 -> ... -> -1 -> 0: a stabilisation edge in front of the
// complement of the level-one knot in L(p,1).
DecoratedPath stabilised(Int p, Sign added, int minus_in_block) {
    std::vector<Slope> v{Slope::infinity()};
    for (Int j = p + 1; j >= 1; --j) v.push_back(Slope::integer(-j));
    v.push_back(Slope::integer(0));
    std::vector<Sign> s{added};
    for (Int j = 0; j < p; ++j) s.push_back(j < minus_in_block ? M : P);
    s.push_back(U);
    return DecoratedPath(FareyPath(v), s);
}

std::vector<Sign> random_signs(oracle::Gen& g, const Context& ctx, std::size_t edges) {
    std::vector<Sign> s(edges);
    for (std::size_t i = 0; i < edges; ++i)
        s[i] = !ctx.edge_signed(i, edges) ? U : (g.uniform(0, 1) ? M : P);
    return s;
}

Context random_context(oracle::Gen& g) {
    while (true) {
        Slope a = g.slope(9), b = g.slope(9);
        if (a == b) continue;
        switch (g.uniform(0, 3)) {
            case 0: return Context::thickened_torus(a, b);
            case 1: return Context::lower_solid_torus(a, b);
            case 2: return Context::upper_solid_torus(a, b);
            default: {
                Int p = g.uniform(2, 15), q = g.uniform(1, p - 1);
                if (gcd(p, q) == 1) return Context::lens(p, q);
            }
        }
    }
}
}  // namespace

TEST_CASE("decorated path construction") {
    CHECK_NOTHROW(DecoratedPath(path_of({"-3", "-2", "-1"}), {U, P}));
    CHECK_THROWS_AS(DecoratedPath(path_of({"-3", "-2", "-1", "0"}), {P, U, P}), std::invalid_argument);
    CHECK_THROWS_AS(DecoratedPath(path_of({"-3", "-2", "-1"}), {P}), std::invalid_argument);
    auto ctx = Context::lens(3, 1);
    auto d = DecoratedPath::in_context(ctx, ctx.minimal(), {M});
    CHECK(d.signs() == std::vector<Sign>{U, M, U});
    CHECK(d.str() == "-3/1:u -2/1:- -1/1:u 0/1");
    CHECK_THROWS_AS(DecoratedPath::in_context(ctx, ctx.minimal(), {M, P}), std::invalid_argument);
    CHECK_THROWS_AS(check_in_context(DecoratedPath(ctx.minimal(), {P, P, U}), ctx), std::invalid_argument);
}

TEST_CASE("contexts") {
    CHECK(Context::upper_solid_torus(S("0"), S("-5/2")).str() == "upper:0/1:-5/2");
    CHECK(Context::upper_solid_torus(S("0"), S("-5/2")).first() == S("-5/2"));
    CHECK(Context::lower_solid_torus(S("inf"), S("1")).first() == S("inf"));
    CHECK(Context::lens(5, 2).minimal().str() == "-5/2 -> -2/1 -> -1/1 -> 0/1");
    CHECK_THROWS_AS(Context::lens(4, 2), std::invalid_argument);
    CHECK_THROWS_AS(Context::thickened_torus(S("1"), S("1")), std::invalid_argument);
}

TEST_CASE("canonicalize") {
    auto c = canonicalize(DecoratedPath(path_of({"-4", "-3", "-2", "-1"}), {P, M, P}));
    CHECK(c.minus == std::vector<int>{1});
    CHECK(c.blocks == BlockPartition{{0, 1, 2}});
    CHECK(c.representative().signs() == std::vector<Sign>{M, P, P});

    auto all_plus = canonicalize(DecoratedPath(path_of({"-8/3", "-5/2", "-2", "-1"}), {P, P, P}));
    CHECK(all_plus.minus == std::vector<int>{0, 0});

    auto two = canonicalize(DecoratedPath(path_of({"-8/3", "-5/2", "-2", "-1"}), {M, P, M}));
    CHECK(two.minus == std::vector<int>{1, 1});
    CHECK(two.blocks == BlockPartition{{0, 1}, {2}});

    CHECK_THROWS_AS(canonicalize(DecoratedPath(path_of({"-2", "-3/2", "-1"}), {P, P})), std::domain_error);
}

TEST_CASE("shorten once") {
    for (Int p = 2; p <= 6; ++p) {
        auto plus = shorten_once(stabilised(p, P, 0), 1);
        REQUIRE(plus.has_value());
        CHECK(plus->path().front() == Slope::infinity());
        CHECK(plus->path()[1] == Slope::integer(-p));
        CHECK(plus->signs().front() == P);
        CHECK_FALSE(shorten_once(stabilised(p, M, 0), 1).has_value());
    }
    // -3 and -3/2 are not adjacent
    CHECK_THROWS_AS(shorten_once(DecoratedPath(path_of({"-3", "-2", "-3/2", "-1"}), {U, P, M}), 1),
                    std::domain_error);
    // -3/2 sits between adjacent -2 and -1; the unsigned edge absorbs the minus
    auto ok = shorten_once(DecoratedPath(path_of({"-3", "-2", "-3/2", "-1"}), {P, M, U}), 2);
    REQUIRE(ok.has_value());
    CHECK(ok->signs() == std::vector<Sign>{P, U});
    auto left = shorten_once(DecoratedPath(path_of({"-2", "-3/2", "-1", "0"}), {U, P, M}), 1);
    REQUIRE(left.has_value());
    CHECK(left->signs() == std::vector<Sign>{U, M});
    CHECK_FALSE(shorten_once(DecoratedPath(path_of({"-2", "-3/2", "-1", "0"}), {P, M, P}), 1).has_value());
    CHECK_THROWS_AS(shorten_once(DecoratedPath(path_of({"-2", "-3/2", "-1"}), {P, P}), 0), std::out_of_range);
}

TEST_CASE("tightness of level-one stabilisations in L(p,1)") {
    for (Int p = 2; p <= 8; ++p) {
        auto ctx = Context::upper_solid_torus(S("0"), Slope::infinity());
        CHECK(is_tight(stabilised(p, P, 0), ctx));
        CHECK_FALSE(is_tight(stabilised(p, M, 0), ctx));
        CHECK(is_tight(stabilised(p, M, static_cast<int>(p))));
        CHECK_FALSE(is_tight(stabilised(p, P, static_cast<int>(p))));
        // mixed signs: shuffle the opposite sign next to the new edge
        for (int k = 1; k < p; ++k) {
            CHECK_FALSE(is_tight(stabilised(p, P, k)));
            CHECK_FALSE(is_tight(stabilised(p, M, k)));
        }
    }
    auto ctx = Context::lens(5, 2);
    for (auto signs : {std::vector<Sign>{P}, std::vector<Sign>{M}})
        CHECK(is_tight(DecoratedPath::in_context(ctx, ctx.minimal(), signs), ctx));
}

TEST_CASE("counting and enumeration") {
    CHECK(count_tight(Context::lens(5, 2)) == 2);
    CHECK(count_tight(Context::lens(1, 1)) == 1);
    CHECK(enumerate_tight(Context::lens(1, 1)).size() == 1);
    for (Int p = 1; p <= 12; ++p)
        CHECK(count_tight(Context::thickened_torus(Slope::integer(-p - 1), Slope::integer(-1))) ==
              static_cast<std::uint64_t>(p + 1));
    auto four = enumerate_tight(Context::thickened_torus(S("-4"), S("-1")));
    REQUIRE(four.size() == 4);
    for (int i = 0; i < 4; ++i) CHECK(four[i].minus == std::vector<int>{i});
    CHECK(enumerate_tight(Context::lens(3, 1)).size() == 2);
    CHECK(enumerate_tight(Context::lower_solid_torus(S("inf"), S("0"))).size() == 1);
}

TEST_CASE("relative Euler class") {
    CHECK(relative_euler(DecoratedPath(path_of({"-2", "-1"}), {P})) == SignedVector{1, 0});
    CHECK(relative_euler(DecoratedPath(path_of({"-2", "-1"}), {M})) == SignedVector{-1, 0});
    // complement of the level-one knots in L(p,1): e(D) = p - 2k
    for (Int p = 2; p <= 12; ++p) {
        auto ctx = Context::upper_solid_torus(S("0"), Slope::integer(-p - 1));
        for (const auto& c : enumerate_tight(ctx)) {
            REQUIRE(c.minus.size() == 1);
            CHECK(euler_on_disk(c.representative(), S("0")) == p - 2 * c.minus[0]);
        }
    }
    // L(2n+1,2), level zero: path -n-1 -> ... -> -1 -> 0, rot = (n - 2l)/(2n+1)
    for (Int n = 2; n <= 10; ++n) {
        auto ctx = Context::upper_solid_torus(S("0"), Slope::integer(-n - 1));
        for (const auto& c : enumerate_tight(ctx)) CHECK(euler_on_disk(c.representative(), S("0")) == n - 2 * c.minus[0]);
    }
}

TEST_CASE("property: relative Euler class is odd and additive") {
    oracle::Gen g(31);
    for (int t = 0; t < 500; ++t) {
        Slope a = g.slope(20), b = g.slope(20);
        if (a == b) continue;
        auto v = minimal_path(a, b).vertices();
        v = oracle::insert_mediants(g, v, v.size() - 1 + static_cast<std::size_t>(g.uniform(0, 3)));
        std::size_t m = v.size() - 1;
        std::vector<Sign> s(m);
        for (auto& x : s) x = g.uniform(0, 1) ? M : P;
        DecoratedPath d{FareyPath(v), s};
        std::vector<Sign> flipped(s);
        for (auto& x : flipped) x = x == P ? M : P;
        CHECK(relative_euler(DecoratedPath(FareyPath(v), flipped)) == -relative_euler(d));
        if (m < 2) continue;
        // split at an interior vertex; the second half keeps the same lifts
        std::size_t cut = static_cast<std::size_t>(g.uniform(1, static_cast<Int>(m) - 1));
        std::vector<Slope> v1(v.begin(), v.begin() + static_cast<std::ptrdiff_t>(cut) + 1);
        std::vector<Slope> v2(v.begin() + static_cast<std::ptrdiff_t>(cut), v.end());
        std::vector<Sign> s1(s.begin(), s.begin() + static_cast<std::ptrdiff_t>(cut));
        std::vector<Sign> s2(s.begin() + static_cast<std::ptrdiff_t>(cut), s.end());
        auto lift = lift_path(v);
        Int eps = lift[cut] == vector_of(v[cut]) ? 1 : -1;
        SignedVector e1 = relative_euler(DecoratedPath(FareyPath(v1), s1));
        SignedVector e2 = relative_euler(DecoratedPath(FareyPath(v2), s2));
        CHECK(relative_euler(d) == scaled(e1, eps) + e2);
    }
}

TEST_CASE("property: tightness is invariant under shuffling") {
    oracle::Gen g(32);
    for (int t = 0; t < 300; ++t) {
        Context ctx = random_context(g);
        auto v = ctx.minimal().vertices();
        v = oracle::insert_mediants(g, v, std::min<std::size_t>(7, v.size() - 1 + static_cast<std::size_t>(g.uniform(0, 3))));
        std::vector<Sign> s = random_signs(g, ctx, v.size() - 1);
        bool tight = is_tight(DecoratedPath(FareyPath(v), s), ctx);
        for (auto& b : block_structure(v)) {
            std::vector<std::size_t> signed_edges;
            for (auto e : b)
                if (s[e] != U) signed_edges.push_back(e);
            std::vector<Sign> vals;
            for (auto e : signed_edges) vals.push_back(s[e]);
            std::shuffle(vals.begin(), vals.end(), g.rng);
            for (std::size_t k = 0; k < signed_edges.size(); ++k) s[signed_edges[k]] = vals[k];
        }
        CHECK(is_tight(DecoratedPath(FareyPath(v), s), ctx) == tight);
    }
}

TEST_CASE("property: consistent shortening preserves the tight structure") {
    oracle::Gen g(33);
    for (int t = 0; t < 300; ++t) {
        Context ctx = random_context(g);
        auto v = ctx.minimal().vertices();
        v = oracle::insert_mediants(g, v, std::min<std::size_t>(7, v.size() + 1));
        DecoratedPath d(FareyPath(v), random_signs(g, ctx, v.size() - 1));
        auto before = tight_reductions(d);
        CHECK(before.size() <= 1);
        for (std::size_t i = 1; i + 1 < v.size(); ++i) {
            if (!has_edge(v[i - 1], v[i + 1])) continue;
            auto shorter = shorten_once(d, i);
            if (!shorter) continue;
            auto after = tight_reductions(*shorter);
            // a consistent shortening may only narrow the reachable set
            for (const auto& c : after) CHECK(std::find(before.begin(), before.end(), c) != before.end());
            if (!before.empty()) CHECK(after == before);
        }
    }
}

TEST_CASE("property: tightness agrees with exhaustive search on small paths") {
    oracle::Gen g(34);
    int contexts = 0;
    while (contexts < 120) {
        Context ctx = random_context(g);
        auto v0 = ctx.minimal().vertices();
        if (v0.size() - 1 > 6) continue;
        ++contexts;
        auto v = oracle::insert_mediants(g, v0, std::min<std::size_t>(6, v0.size() + static_cast<std::size_t>(g.uniform(0, 2))));
        std::vector<bool> uns(v.size() - 1);
        for (std::size_t i = 0; i < uns.size(); ++i) uns[i] = !ctx.edge_signed(i, uns.size());
        for (const auto& s : oracle::all_assignments(uns)) {
            DecoratedPath d(FareyPath(v), s);
            auto reach = oracle::reachable_minimal(v, s);
            auto mine = tight_reductions(d);
            CHECK(mine.empty() == reach.empty());
            for (const auto& e : reach) {
                auto c = canonicalize(DecoratedPath(FareyPath(e.v), e.s));
                CHECK(std::find(mine.begin(), mine.end(), c) != mine.end());
            }
        }
        CHECK(count_tight(ctx) == oracle::orbit_count(v0, [&] {
                  std::vector<bool> u(v0.size() - 1);
                  for (std::size_t i = 0; i < u.size(); ++i) u[i] = !ctx.edge_signed(i, u.size());
                  return u;
              }()));
    }
}
