#pragma once

#include <cstdint>
#include <iosfwd>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace nonloose {

using Int = std::int64_t;

// Overflow-checked arithmetic; throws std::overflow_error.
Int checked_add(Int a, Int b);
Int checked_sub(Int a, Int b);
Int checked_mul(Int a, Int b);

// A vertex of the Farey graph: a point of Q u {inf}, stored as a primitive
// pair with non-negative denominator.  Infinity is 1/0.
class Slope {
public:
    Slope(Int num, Int den);

    static Slope infinity() { return Slope(1, 0); }
    static Slope integer(Int n) { return Slope(n, 1); }
    // Accepts "a/b", "a", "inf".
    static Slope parse(std::string_view text);

    Int num() const { return num_; }
    Int den() const { return den_; }
    bool is_infinite() const { return den_ == 0; }
    bool is_integer() const { return den_ == 1; }

    std::string str() const;

    friend bool operator==(const Slope&, const Slope&) = default;
    // Lexicographic on (num, den); for containers only, not the circular order.
    friend auto operator<=>(const Slope&, const Slope&) = default;

private:
    Slope() = default;
    Int num_ = 0;
    Int den_ = 1;
};

std::ostream& operator<<(std::ostream& os, const Slope& s);

// An integer vector (a, b) representing the slope a/b up to sign.
struct SignedVector {
    Int a = 0;
    Int b = 0;

    friend bool operator==(const SignedVector&, const SignedVector&) = default;
    SignedVector operator+(const SignedVector& o) const;
    SignedVector operator-(const SignedVector& o) const;
    SignedVector operator-() const;
    SignedVector& operator+=(const SignedVector& o);
    Slope slope() const { return Slope(a, b); }
    std::string str() const;
};

SignedVector scaled(const SignedVector& v, Int k);

// (num, den) of the stored primitive pair.
SignedVector vector_of(const Slope& s);

Int dot(const SignedVector& x, const SignedVector& y);
Int dot(const Slope& x, const Slope& y);
bool has_edge(const Slope& x, const Slope& y);

// Mediant of adjacent slopes.  With infinity, the result is taken on the side
// of the finite operand: n (+) inf = n+1 for n >= 0 and n-1 for n < 0.
Slope farey_sum(const Slope& x, const Slope& y);
// x (+) y (+) y ... with k copies of y.
Slope iterated_sum(const Slope& x, Int k, const Slope& y);
// Componentwise difference of supplied representatives.
SignedVector farey_diff(const SignedVector& x, const SignedVector& y);

// Total order with infinity as the maximum; "clockwise" is increasing
// value, wrapping through infinity.
bool precedes(const Slope& x, const Slope& y);
// x lies on the closed clockwise arc from a to b.
bool cw_between(const Slope& a, const Slope& x, const Slope& b);

// Representatives for a clockwise path: the last vertex keeps its stored
// vector and each earlier one is signed so consecutive dots equal -1.
// Throws if two consecutive vertices are not adjacent.
std::vector<SignedVector> lift_path(std::span<const Slope> vertices);

// Orientation-preserving integral Moebius map [[a, b], [c, d]], det = 1.
struct Unimodular {
    Int a = 1, b = 0, c = 0, d = 1;

    Slope apply(const Slope& s) const;
    SignedVector apply(const SignedVector& v) const;
    Unimodular inverse() const;
    Unimodular operator*(const Unimodular& o) const;

    // A map sending s to infinity.
    static Unimodular to_infinity(const Slope& s);
};

Int floor_div(Int a, Int b);
Int gcd(Int a, Int b);

}  // namespace nonloose
