#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "nonloose/cfrac.hpp"

namespace nonloose {

enum class Sign : std::uint8_t { Plus, Minus, Unsigned };

char sign_char(Sign s);  // '+', '-', 'u'

// Where a decorated path lives and which of its edges carry signs.
//   ThickenedTorus(s0, s1): path s0 -> s1, every edge signed.
//   LowerSolidTorus(r, s):  path r -> s, first edge unsigned.
//   UpperSolidTorus(r, s):  path s -> r, last edge unsigned.
//   Lens(p, q):             path -p/q -> 0, first and last edges unsigned.
class Context {
public:
    enum class Kind { ThickenedTorus, LowerSolidTorus, UpperSolidTorus, Lens };

    static Context thickened_torus(const Slope& s0, const Slope& s1);
    static Context lower_solid_torus(const Slope& r, const Slope& s);
    static Context upper_solid_torus(const Slope& r, const Slope& s);
    static Context lens(Int p, Int q);

    Kind kind() const { return kind_; }
    const Slope& first() const { return first_; }
    const Slope& last() const { return last_; }
    bool first_unsigned() const { return kind_ == Kind::LowerSolidTorus || kind_ == Kind::Lens; }
    bool last_unsigned() const { return kind_ == Kind::UpperSolidTorus || kind_ == Kind::Lens; }
    bool edge_signed(std::size_t edge, std::size_t edge_count) const;
    std::string str() const;

    FareyPath minimal() const { return minimal_path(first_, last_); }

private:
    Context(Kind k, Slope first, Slope last) : kind_(k), first_(first), last_(last) {}
    Kind kind_;
    Slope first_, last_;
};

class DecoratedPath {
public:
    // One sign per edge; Unsigned only on the first or last edge.
    DecoratedPath(FareyPath path, std::vector<Sign> signs);
    // Signs for the signed edges only; the context fills in unsigned ones.
    static DecoratedPath in_context(const Context& ctx, FareyPath path, const std::vector<Sign>& signed_signs);

    const FareyPath& path() const { return path_; }
    const std::vector<Sign>& signs() const { return signs_; }
    std::string str() const;

    friend bool operator==(const DecoratedPath&, const DecoratedPath&) = default;

private:
    FareyPath path_;
    std::vector<Sign> signs_;
};

// Throws std::invalid_argument if d is not a path of ctx with the right
// unsigned edges.
void check_in_context(const DecoratedPath& d, const Context& ctx);

// A decorated path modulo shuffling within continued fraction blocks.
// `blocks` partitions the signed edges; minus[i] counts minus signs in
// blocks[i].
struct ShuffleClass {
    FareyPath path;
    std::vector<std::size_t> unsigned_edges;
    BlockPartition blocks;
    std::vector<int> minus;

    // Minus signs placed first within each block.
    DecoratedPath representative() const;
    std::string str() const;

    friend bool operator==(const ShuffleClass& a, const ShuffleClass& b) {
        return a.path == b.path && a.unsigned_edges == b.unsigned_edges && a.minus == b.minus;
    }
    friend bool operator<(const ShuffleClass& a, const ShuffleClass& b);
};

// Requires a minimal path.
ShuffleClass canonicalize(const DecoratedPath& d);
// Rebuild from path and per-block minus counts; unsigned edges from ctx.
ShuffleClass shuffle_class(const Context& ctx, FareyPath path, std::vector<int> minus);

// Remove interior vertex i (requires its neighbours to be adjacent).  Empty
// when the two signs disagree; an unsigned edge absorbs its neighbour.
std::optional<DecoratedPath> shorten_once(const DecoratedPath& d, std::size_t vertex);

// Shuffle classes of minimal paths reachable from d by shuffles and
// consistent shortenings.
std::vector<ShuffleClass> tight_reductions(const DecoratedPath& d);
bool is_tight(const DecoratedPath& d);
bool is_tight(const DecoratedPath& d, const Context& ctx);

std::uint64_t count_tight(const Context& ctx);
std::vector<ShuffleClass> enumerate_tight(const Context& ctx);

// Sum of sign * (v_i - v_(i-1)) over signed edges, representatives from
// lift_path.
SignedVector relative_euler(const DecoratedPath& d);
SignedVector relative_euler(const ShuffleClass& c);
// Evaluation of the relative Euler class on the meridian disk of slope m.
Int euler_on_disk(const DecoratedPath& d, const Slope& meridian);

}  // namespace nonloose
