#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "nonloose/farey.hpp"

namespace nonloose {

// Negative continued fraction [a0, ..., an] = a0 - 1/(a1 - 1/(... - 1/an)).
// Every coefficient except the first is <= -2; a single coefficient may be
// any integer.
class ContinuedFraction {
public:
    explicit ContinuedFraction(std::vector<Int> coeffs);
    // Accepts "[-3,-2]" or "-3,-2".
    static ContinuedFraction parse(std::string_view text);

    const std::vector<Int>& coeffs() const { return coeffs_; }
    std::size_t size() const { return coeffs_.size(); }
    Int operator[](std::size_t i) const { return coeffs_[i]; }
    std::string str() const;

    friend bool operator==(const ContinuedFraction&, const ContinuedFraction&) = default;

private:
    std::vector<Int> coeffs_;
};

// Defined for finite s < -1 and for negative integers.
ContinuedFraction expand(const Slope& s);
Slope value(const ContinuedFraction& cf);

// [a0, ..., an + 1], collapsing a trailing -1 into the previous coefficient
// as often as needed.  The fully collapsed case is -1.
Slope successor(const Slope& s);
// [a0, ..., a(n-1)]; infinity for an integer.
Slope ancestor(const Slope& s);

// A simple path in the Farey graph traversed clockwise, consecutive vertices
// adjacent, never wrapping past its start.
class FareyPath {
public:
    explicit FareyPath(std::vector<Slope> vertices);

    const std::vector<Slope>& vertices() const { return v_; }
    const Slope& operator[](std::size_t i) const { return v_[i]; }
    std::size_t vertex_count() const { return v_.size(); }
    std::size_t edge_count() const { return v_.size() - 1; }
    const Slope& front() const { return v_.front(); }
    const Slope& back() const { return v_.back(); }
    std::string str() const;

    friend bool operator==(const FareyPath&, const FareyPath&) = default;
    friend auto operator<=>(const FareyPath&, const FareyPath&) = default;

private:
    std::vector<Slope> v_;
};

// Shortest clockwise path from r to s (r != s).
FareyPath minimal_path(const Slope& r, const Slope& s);

// Partition of edge indices into maximal runs that form continued fraction
// blocks: edges i-1 and i share a block when |dot(r(i-1), r(i+1))| = 2.
using BlockPartition = std::vector<std::vector<std::size_t>>;
BlockPartition block_structure(const FareyPath& path);
BlockPartition block_structure(const std::vector<Slope>& vertices);

}  // namespace nonloose
