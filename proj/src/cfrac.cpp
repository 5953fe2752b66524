#include "nonloose/cfrac.hpp"

#include <sstream>
#include <stdexcept>

namespace nonloose {

ContinuedFraction::ContinuedFraction(std::vector<Int> coeffs) : coeffs_(std::move(coeffs)) {
    if (coeffs_.empty()) throw std::invalid_argument("empty continued fraction");
    for (std::size_t i = 1; i < coeffs_.size(); ++i)
        if (coeffs_[i] > -2)
            throw std::invalid_argument("continued fraction coefficient " + std::to_string(coeffs_[i]) +
                                        " at position " + std::to_string(i) + " is not <= -2");
}

ContinuedFraction ContinuedFraction::parse(std::string_view text) {
    std::string t(text);
    for (char& c : t)
        if (c == '[' || c == ']' || c == ',') c = ' ';
    std::istringstream in(t);
    std::vector<Int> out;
    Int v;
    while (in >> v) out.push_back(v);
    if (!in.eof()) throw std::invalid_argument("not a continued fraction: '" + std::string(text) + "'");
    return ContinuedFraction(std::move(out));
}

std::string ContinuedFraction::str() const {
    std::string s = "[";
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(coeffs_[i]);
    }
    return s + "]";
}

ContinuedFraction expand(const Slope& s) {
    if (s.is_infinite()) throw std::domain_error("expand: infinity has no continued fraction");
    if (!s.is_integer() && !precedes(s, Slope::integer(-1)))
        throw std::domain_error("expand: " + s.str() + " is not < -1");
    if (s.is_integer() && s.num() > -1)
        throw std::domain_error("expand: " + s.str() + " is not a negative integer");
    std::vector<Int> out;
    Int n = s.num(), d = s.den();
    while (d != 1) {
        Int a = floor_div(n, d);
        out.push_back(a);
        // x - a = (n - a d)/d;  next = -d / (n - a d)
        Int r = checked_sub(n, checked_mul(a, d));
        n = -d;
        d = r;
    }
    out.push_back(n);
    return ContinuedFraction(std::move(out));
}

Slope value(const ContinuedFraction& cf) {
    // Evaluate from the tail: x = a_i - 1/x.
    const auto& a = cf.coeffs();
    Int n = a.back(), d = 1;
    for (std::size_t i = a.size() - 1; i-- > 0;) {
        Int nn = checked_sub(checked_mul(a[i], n), d);
        d = n;
        n = nn;
    }
    return Slope(n, d);
}

Slope successor(const Slope& s) {
    std::vector<Int> a = expand(s).coeffs();
    a.back() = checked_add(a.back(), 1);
    while (a.size() > 1 && a.back() == -1) {
        a.pop_back();
        a.back() = checked_add(a.back(), 1);
    }
    if (a.size() == 1) return Slope::integer(a[0]);
    return value(ContinuedFraction(std::move(a)));
}

Slope ancestor(const Slope& s) {
    std::vector<Int> a = expand(s).coeffs();
    if (a.size() == 1) return Slope::infinity();
    a.pop_back();
    return value(ContinuedFraction(std::move(a)));
}

FareyPath::FareyPath(std::vector<Slope> vertices) : v_(std::move(vertices)) {
    if (v_.size() < 2) throw std::invalid_argument("a Farey path needs at least two vertices");
    for (std::size_t i = 0; i + 1 < v_.size(); ++i) {
        if (!has_edge(v_[i], v_[i + 1]))
            throw std::invalid_argument("path vertices " + v_[i].str() + " and " + v_[i + 1].str() +
                                        " are not adjacent");
        if (i > 0 && (v_[i + 1] == v_[0] || !cw_between(v_[0], v_[i], v_[i + 1])))
            throw std::invalid_argument("path is not strictly clockwise at " + v_[i + 1].str());
    }
}

std::string FareyPath::str() const {
    std::string s;
    for (std::size_t i = 0; i < v_.size(); ++i) {
        if (i) s += " -> ";
        s += v_[i].str();
    }
    return s;
}

FareyPath minimal_path(const Slope& r, const Slope& s) {
    if (r == s) throw std::domain_error("minimal_path: endpoints coincide");
    std::vector<Slope> out{r};
    Slope u = r;
    while (u != s) {
        Unimodular m = Unimodular::to_infinity(u);
        Slope x = m.apply(s);
        Slope next = m.inverse().apply(Slope::integer(floor_div(x.num(), x.den())));
        out.push_back(next);
        u = next;
    }
    return FareyPath(std::move(out));
}

BlockPartition block_structure(const std::vector<Slope>& v) {
    BlockPartition out;
    if (v.size() < 2) return out;
    out.push_back({0});
    for (std::size_t i = 1; i + 1 < v.size(); ++i) {
        Int d = dot(v[i - 1], v[i + 1]);
        if (d == 2 || d == -2) out.back().push_back(i);
        else out.push_back({i});
    }
    return out;
}

BlockPartition block_structure(const FareyPath& path) { return block_structure(path.vertices()); }

}  // namespace nonloose
