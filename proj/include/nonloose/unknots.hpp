#pragma once

#include "nonloose/rational.hpp"
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "nonloose/decorated.hpp"

namespace nonloose {

using Rational = boost::rational<Int>;
std::string to_string(const Rational& r);  // "a/b", or "n" for integers
Rational parse_rational(std::string_view text);

// L(p, q) = V0 u V1 glued so that the meridian of V0 has slope -p/q.
// L(1, 1) stands for S^3.
struct LensSpace {
    Int p = 1;
    Int q = 1;

    LensSpace(Int p, Int q);
    Int qbar() const;  // inverse of q mod p, in [1, p]
    LensSpace dual() const { return LensSpace(p, qbar()); }
    Slope meridian() const { return Slope(-p, q); }
    std::string str() const;

    friend bool operator==(const LensSpace&, const LensSpace&) = default;
};

enum class Core { K0, K1 };

struct KnotId {
    Core core = Core::K0;
    bool reversed = false;

    static KnotId parse(std::string_view text);  // K0, K1, -K0, -K1
    KnotId operator-() const { return {core, !reversed}; }
    std::string str() const;

    friend bool operator==(const KnotId&, const KnotId&) = default;
};

// Rational unknots up to smooth isotopy: {K0} for p = 2, {K0, -K0} when
// q = +-1 mod p, all four otherwise.
std::vector<KnotId> smooth_unknots(const LensSpace& lens);

// A non-loose Legendrian realisation of a rational unknot, recorded by the
// tight structure on the complement of its standard neighbourhood.
struct NonLooseClass {
    LensSpace lens;
    KnotId knot;
    int level = 0;            // k, with tb = |dot(0, s_k)|/p
    Slope dividing_slope;     // s_k
    ShuffleClass complement;  // s_k -> ... -> 0, last edge unsigned
    Rational tb;
    Rational rot;
    Int euler = 0;            // class in H^2(L(p,q)) = Z/p, as an integer in (-p, p]
    Int disk_euler = 0;       // e(D) on the meridian disk of V1

    std::string str() const;
    friend bool operator==(const NonLooseClass& a, const NonLooseClass& b) {
        return a.lens == b.lens && a.knot == b.knot && a.level == b.level && a.complement == b.complement;
    }
};

// s_k = s_0 (+) k(-p/q'), s_0 the ancestor of -p/q' (q' = q for K0, qbar
// for K1).
Slope slope_k(const LensSpace& lens, const KnotId& knot, int k);

std::vector<NonLooseClass> classes_at_slope(const LensSpace& lens, const KnotId& knot, int k);

// Empty for a loose result.  S+ lowers rot by one, S- raises it.
std::optional<NonLooseClass> stabilize(const NonLooseClass& c, Sign sign);

// Reduce an integer class into (-p, p], keeping it when already there.
Int reduce_euler(Int e, Int p);

enum class RangeKind { V, BackSlash, ForwardSlash };
std::string to_string(RangeKind k);
RangeKind parse_range_kind(std::string_view text);

enum class Arm { Base, Plus, Minus };
std::string to_string(Arm a);

struct RangeMember {
    NonLooseClass cls;
    std::string id;  // "k.i": level k, index i in classes_at_slope
    Arm arm = Arm::Base;
    int height = 0;
    std::string plus_target;   // id of S+ result, or "loose"
    std::string minus_target;  // id of S- result, or "loose"
};

// V: members at (rot + i, tb + i) on the Plus arm and (rot - i, tb + i) on
// the Minus arm.  ForwardSlash uses only the Plus arm, BackSlash only the
// Minus arm.  S+ descends the Plus arm, S- the Minus arm.
struct MountainRange {
    RangeKind kind = RangeKind::V;
    Rational base_rot;
    Rational base_tb;
    Int euler = 0;
    std::vector<RangeMember> members;
};

struct Classification {
    LensSpace lens{1, 1};
    KnotId knot;
    int k_max = 0;
    std::vector<MountainRange> ranges;
    // Classes whose stabilisation pattern does not fit a range below k_max.
    std::vector<RangeMember> unresolved;
};

// Classes of tb level 0..k_max (k_max >= 3), assembled into ranges sorted
// by base tb ascending, then base rot descending.
Classification classify(const LensSpace& lens, const KnotId& knot, int k_max = 5);

// Throws std::logic_error when a member breaks the relations of its kind.
void verify_range(const MountainRange& r);

struct RangeCounts {
    Int v_low = 0;    // V's at the lower tb
    Int slashes = 0;  // back slashes, and as many forward slashes
    Int v_high = 0;   // V's at the higher tb
    Int total() const { return v_low + 2 * slashes + v_high; }
    friend bool operator==(const RangeCounts&, const RangeCounts&) = default;
};
RangeCounts range_counts(const LensSpace& lens, const KnotId& knot);

}  // namespace nonloose
