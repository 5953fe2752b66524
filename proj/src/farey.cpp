#include "nonloose/farey.hpp"

#include <charconv>
#include <ostream>
#include <stdexcept>

namespace nonloose {

Int checked_add(Int a, Int b) {
    Int r;
    if (__builtin_add_overflow(a, b, &r)) throw std::overflow_error("integer overflow in addition");
    return r;
}

Int checked_sub(Int a, Int b) {
    Int r;
    if (__builtin_sub_overflow(a, b, &r)) throw std::overflow_error("integer overflow in subtraction");
    return r;
}

Int checked_mul(Int a, Int b) {
    Int r;
    if (__builtin_mul_overflow(a, b, &r)) throw std::overflow_error("integer overflow in multiplication");
    return r;
}

Int gcd(Int a, Int b) {
    a = a < 0 ? checked_sub(0, a) : a;
    b = b < 0 ? checked_sub(0, b) : b;
    while (b != 0) {
        Int t = a % b;
        a = b;
        b = t;
    }
    return a;
}

Int floor_div(Int a, Int b) {
    if (b == 0) throw std::domain_error("division by zero");
    Int q = a / b;
    if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
    return q;
}

Slope::Slope(Int num, Int den) {
    if (num == 0 && den == 0) throw std::invalid_argument("0/0 is not a slope");
    Int g = gcd(num, den);
    num /= g;
    den /= g;
    if (den < 0 || (den == 0 && num < 0)) {
        num = checked_sub(0, num);
        den = checked_sub(0, den);
    }
    num_ = num;
    den_ = den;
}

namespace {

Int parse_int(std::string_view t, std::string_view whole) {
    if (!t.empty() && t.front() == '+') t.remove_prefix(1);
    Int v = 0;
    auto [ptr, ec] = std::from_chars(t.data(), t.data() + t.size(), v);
    if (ec != std::errc() || ptr != t.data() + t.size() || t.empty())
        throw std::invalid_argument("not a slope: '" + std::string(whole) + "'");
    return v;
}

std::string_view trim(std::string_view t) {
    while (!t.empty() && (t.front() == ' ' || t.front() == '\t')) t.remove_prefix(1);
    while (!t.empty() && (t.back() == ' ' || t.back() == '\t')) t.remove_suffix(1);
    return t;
}

}  // namespace

Slope Slope::parse(std::string_view text) {
    auto t = trim(text);
    if (t == "inf" || t == "infinity" || t == "-inf" || t == "+inf") return infinity();
    auto slash = t.find('/');
    if (slash == std::string_view::npos) return Slope(parse_int(t, text), 1);
    Int n = parse_int(trim(t.substr(0, slash)), text);
    Int d = parse_int(trim(t.substr(slash + 1)), text);
    if (n == 0 && d == 0) throw std::invalid_argument("not a slope: '" + std::string(text) + "'");
    return Slope(n, d);
}

std::string Slope::str() const { return std::to_string(num_) + "/" + std::to_string(den_); }

std::ostream& operator<<(std::ostream& os, const Slope& s) { return os << s.str(); }

SignedVector SignedVector::operator+(const SignedVector& o) const {
    return {checked_add(a, o.a), checked_add(b, o.b)};
}
SignedVector SignedVector::operator-(const SignedVector& o) const {
    return {checked_sub(a, o.a), checked_sub(b, o.b)};
}
SignedVector SignedVector::operator-() const { return {checked_sub(0, a), checked_sub(0, b)}; }
SignedVector& SignedVector::operator+=(const SignedVector& o) { return *this = *this + o; }
std::string SignedVector::str() const {
    return "(" + std::to_string(a) + ", " + std::to_string(b) + ")";
}

SignedVector scaled(const SignedVector& v, Int k) { return {checked_mul(v.a, k), checked_mul(v.b, k)}; }

SignedVector vector_of(const Slope& s) { return {s.num(), s.den()}; }

Int dot(const SignedVector& x, const SignedVector& y) {
    return checked_sub(checked_mul(x.a, y.b), checked_mul(x.b, y.a));
}

Int dot(const Slope& x, const Slope& y) { return dot(vector_of(x), vector_of(y)); }

bool has_edge(const Slope& x, const Slope& y) {
    Int d = dot(x, y);
    return d == 1 || d == -1;
}

Slope farey_sum(const Slope& x, const Slope& y) {
    if (!has_edge(x, y))
        throw std::domain_error("farey_sum: " + x.str() + " and " + y.str() + " are not adjacent");
    if (x.is_infinite() || y.is_infinite()) {
        const Slope& n = x.is_infinite() ? y : x;  // an integer, since adjacent to inf
        return Slope::integer(n.num() >= 0 ? checked_add(n.num(), 1) : checked_sub(n.num(), 1));
    }
    return Slope(checked_add(x.num(), y.num()), checked_add(x.den(), y.den()));
}

Slope iterated_sum(const Slope& x, Int k, const Slope& y) {
    if (k < 0) throw std::domain_error("iterated_sum: negative multiplicity");
    Slope r = x;
    for (Int i = 0; i < k; ++i) r = farey_sum(r, y);
    return r;
}

SignedVector farey_diff(const SignedVector& x, const SignedVector& y) { return x - y; }

bool precedes(const Slope& x, const Slope& y) {
    if (x == y) return false;
    if (x.is_infinite()) return false;
    if (y.is_infinite()) return true;
    return checked_mul(x.num(), y.den()) < checked_mul(y.num(), x.den());
}

bool cw_between(const Slope& a, const Slope& x, const Slope& b) {
    if (x == a || x == b) return true;
    if (a == b) return false;
    if (precedes(a, b)) return precedes(a, x) && precedes(x, b);
    return precedes(a, x) || precedes(x, b);
}

std::vector<SignedVector> lift_path(std::span<const Slope> vertices) {
    std::vector<SignedVector> out(vertices.size());
    if (vertices.empty()) return out;
    out.back() = vector_of(vertices.back());
    for (std::size_t i = vertices.size() - 1; i > 0; --i) {
        SignedVector v = vector_of(vertices[i - 1]);
        Int d = dot(v, out[i]);
        if (d == 1) v = -v;
        else if (d != -1)
            throw std::domain_error("lift_path: " + vertices[i - 1].str() + " and " +
                                    vertices[i].str() + " are not adjacent");
        out[i - 1] = v;
    }
    return out;
}

Slope Unimodular::apply(const Slope& s) const {
    auto v = apply(vector_of(s));
    return Slope(v.a, v.b);
}

SignedVector Unimodular::apply(const SignedVector& v) const {
    return {checked_add(checked_mul(a, v.a), checked_mul(b, v.b)),
            checked_add(checked_mul(c, v.a), checked_mul(d, v.b))};
}

Unimodular Unimodular::inverse() const { return {d, checked_sub(0, b), checked_sub(0, c), a}; }

Unimodular Unimodular::operator*(const Unimodular& o) const {
    return {checked_add(checked_mul(a, o.a), checked_mul(b, o.c)),
            checked_add(checked_mul(a, o.b), checked_mul(b, o.d)),
            checked_add(checked_mul(c, o.a), checked_mul(d, o.c)),
            checked_add(checked_mul(c, o.b), checked_mul(d, o.d))};
}

Unimodular Unimodular::to_infinity(const Slope& s) {
    // Bottom row (-den, num) kills s; top row (x, y) with x*num + y*den = 1.
    Int old_r = s.num(), r = s.den();
    Int old_x = 1, x = 0, old_y = 0, y = 1;
    while (r != 0) {
        Int q = floor_div(old_r, r);
        Int t = checked_sub(old_r, checked_mul(q, r));
        old_r = r;
        r = t;
        t = checked_sub(old_x, checked_mul(q, x));
        old_x = x;
        x = t;
        t = checked_sub(old_y, checked_mul(q, y));
        old_y = y;
        y = t;
    }
    if (old_r < 0) {
        old_x = -old_x;
        old_y = -old_y;
    }
    return {old_x, old_y, checked_sub(0, s.den()), s.num()};
}

}  // namespace nonloose
