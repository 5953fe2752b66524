#include <doctest.h>

#include <limits>
#include <stdexcept>

#include "nonloose/farey.hpp"
#include "oracles.hpp"

using namespace nonloose;

namespace {
Slope S(const char* t) { return Slope::parse(t); }
const Slope inf = Slope::infinity();
}  // namespace

TEST_CASE("slope parsing and normal form") {
    CHECK(S("4/-6") == Slope(-2, 3));
    CHECK(S("-3") == Slope::integer(-3));
    CHECK(S("inf") == inf);
    CHECK(Slope(-1, 0) == inf);
    CHECK(S("-5/2").str() == "-5/2");
    CHECK(inf.str() == "1/0");
    CHECK_THROWS_AS(Slope(0, 0), std::invalid_argument);
    CHECK_THROWS_AS(S("1/x"), std::invalid_argument);
}

TEST_CASE("checked arithmetic rejects overflow") {
    const Int big = std::numeric_limits<Int>::max();
    CHECK_THROWS_AS(checked_add(big, 1), std::overflow_error);
    CHECK_THROWS_AS(checked_mul(big / 2 + 1, 2), std::overflow_error);
    CHECK(checked_sub(-5, 7) == -12);
}

TEST_CASE("farey sum") {
    CHECK(farey_sum(S("0"), inf) == S("1"));
    CHECK(farey_sum(S("-1"), inf) == S("-2"));
    CHECK(farey_sum(inf, S("-3")) == S("-4"));
    CHECK(farey_sum(S("1/2"), S("1/3")) == S("2/5"));
    CHECK_THROWS_AS(farey_sum(S("0"), S("2")), std::domain_error);
}

TEST_CASE("iterated sum") {
    CHECK(iterated_sum(inf, 0, S("-3")) == inf);
    CHECK(iterated_sum(S("-3"), 1, S("-5/2")) == S("-8/3"));
    for (Int p = 2; p <= 12; ++p)
        for (Int k = 1; k <= 12; ++k) CHECK(iterated_sum(inf, k, Slope(-p, 1)) == Slope(-(k * p + 1), k));
}

TEST_CASE("dot and edges") {
    CHECK(dot(S("1/2"), S("1/3")) == 1);
    CHECK(dot(S("-5/2"), S("-5/2")) == 0);
    CHECK(dot(S("0"), inf) == -1);
    CHECK(has_edge(S("0"), inf));
    CHECK_FALSE(has_edge(S("0"), S("2")));
    CHECK_FALSE(has_edge(S("3/7"), S("3/7")));
}

TEST_CASE("farey difference") {
    CHECK(farey_diff(vector_of(S("-1")), vector_of(S("-2"))) == SignedVector{1, 0});
    CHECK(farey_diff(vector_of(S("2/5")), vector_of(S("2/5"))) == SignedVector{0, 0});
    for (Int n = -6; n <= 6; ++n)
        CHECK(farey_diff(vector_of(Slope::integer(n)), vector_of(Slope::integer(n - 1))) == SignedVector{1, 0});
    // unreduced: doubling survives
    CHECK(farey_diff(SignedVector{3, 1}, SignedVector{1, -1}) == SignedVector{2, 2});
}

TEST_CASE("clockwise intervals") {
    CHECK(cw_between(S("-5/2"), S("-2"), S("-1")));
    CHECK(cw_between(S("1/3"), S("1/3"), S("2")));
    CHECK_FALSE(cw_between(S("0"), S("-1"), inf));
    CHECK(cw_between(S("2"), inf, S("-3")));
    CHECK(cw_between(S("2"), S("-7"), S("-3")));
    CHECK_FALSE(cw_between(S("2"), S("0"), S("-3")));
}

TEST_CASE("dot matches geometric intersection on the torus") {
    auto slopes = oracle::slopes_up_to(5);
    for (const auto& a : slopes)
        for (const auto& b : slopes) {
            Int d = dot(a, b);
            CHECK(std::abs(d) == oracle::intersection_number(a, b));
        }
}

TEST_CASE("property: dot is antisymmetric and sign-stable") {
    oracle::Gen g(11);
    for (int i = 0; i < 2000; ++i) {
        Slope a = g.slope(300), b = g.slope(300);
        CHECK(dot(a, b) == -dot(b, a));
        CHECK(dot(vector_of(a), -vector_of(b)) == -dot(a, b));
    }
}

TEST_CASE("property: farey sum is symmetric and adjacent to both terms") {
    oracle::Gen g(12);
    int tried = 0;
    while (tried < 1000) {
        Slope a = g.slope(60);
        // a random neighbour of a: move a known neighbour by a power of the
        // stabiliser of a
        Unimodular m = Unimodular::to_infinity(a);
        Unimodular back = m.inverse();
        Slope nb = back.apply(Slope::integer(g.uniform(-40, 40)));
        if (nb == a) continue;
        ++tried;
        REQUIRE(has_edge(a, nb));
        Slope s = farey_sum(a, nb);
        CHECK(s == farey_sum(nb, a));
        CHECK(has_edge(s, a));
        CHECK(has_edge(s, nb));
        if (!a.is_infinite() && !nb.is_infinite()) {
            oracle::Q x(a.num(), a.den()), y(nb.num(), nb.den()), z(s.num(), s.den());
            CHECK(std::min(x, y) < z);
            CHECK(z < std::max(x, y));
        }
    }
}

TEST_CASE("property: clockwise order is a strict cyclic order") {
    oracle::Gen g(13);
    for (int i = 0; i < 3000; ++i) {
        Slope a = g.slope(30), x = g.slope(30), b = g.slope(30);
        if (a == x || x == b || a == b) continue;
        // exactly one of the two arcs between a and b contains x
        CHECK(cw_between(a, x, b) != cw_between(b, x, a));
        CHECK(cw_between(a, x, b) == oracle::cw_less_from(a, x, b));
    }
}

TEST_CASE("property: unimodular maps preserve dot") {
    oracle::Gen g(14);
    for (int i = 0; i < 1000; ++i) {
        Slope a = g.slope(50), b = g.slope(50), c = g.slope(50);
        Unimodular m = Unimodular::to_infinity(c);
        CHECK(m.apply(c) == inf);
        CHECK(std::abs(dot(m.apply(a), m.apply(b))) == std::abs(dot(a, b)));
        CHECK(m.inverse().apply(m.apply(a)) == a);
        CHECK((m * m.inverse()).apply(b) == b);
        SignedVector va = vector_of(a), vb = vector_of(b);
        CHECK(dot(m.apply(va), m.apply(vb)) == dot(va, vb));
    }
}

TEST_CASE("lift_path fixes the last vertex and sets consecutive dots to -1") {
    std::vector<Slope> v{S("-8/3"), S("-5/2"), S("-2"), S("-1"), S("0")};
    auto lift = lift_path(v);
    REQUIRE(lift.size() == v.size());
    CHECK(lift.back() == vector_of(v.back()));
    for (std::size_t i = 1; i < v.size(); ++i) {
        CHECK(dot(lift[i - 1], lift[i]) == -1);
        CHECK(lift[i].slope() == v[i]);
    }
    std::vector<Slope> broken{S("-3"), S("-1")};
    CHECK_THROWS_AS(lift_path(broken), std::domain_error);
}

TEST_CASE("floor division and gcd") {
    CHECK(floor_div(-5, 2) == -3);
    CHECK(floor_div(5, 2) == 2);
    CHECK(floor_div(-4, 2) == -2);
    CHECK(gcd(-12, 18) == 6);
    CHECK(gcd(0, -7) == 7);
}
