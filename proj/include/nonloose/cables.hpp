#pragma once

#include "nonloose/farey.hpp"

namespace nonloose {

struct LegendrianInvariants {
    Int tb = 0;
    Int rot = 0;
    friend bool operator==(const LegendrianInvariants&, const LegendrianInvariants&) = default;
};

// The (p, q)-cable: p longitudes plus q meridians, slope q/p.
struct CableSpec {
    Int p = 1;
    Int q = 0;
    CableSpec(Int p, Int q);
    Slope slope() const { return Slope(q, p); }
};

// Legendrian divide on a convex torus of dividing slope q/p.
Int divide_cable_tb(const CableSpec& c);
// Ruling curve of slope q/p on a torus with dividing slope q'/p' != q/p.
Int ruling_cable_tb(const CableSpec& c, const Slope& dividing);
// q r(meridian disk) + p r(Seifert surface).
Int cable_rot(const CableSpec& c, Int r_disk, Int r_seifert);

// Standard positive cable, for q/p > tb(L).  Uses r(meridian disk) = 0.
LegendrianInvariants positive_cable(const LegendrianInvariants& L, const CableSpec& c);
// Standard negative cable tb, for tb(L) - 1 < q/p < tb(L).
Int negative_cable_tb(const LegendrianInvariants& L, const CableSpec& c);
// Number n of stabilisations relating the negative cable of L to the
// positive cable of a stabilisation of L: n = |(tb(L) - 1) p - q|.
Int stab_count_relation(const LegendrianInvariants& L, const CableSpec& c);
// |(s1 - s0) . s| for adjacent s0, s1 and s off the open arc from s0 to s1.
Int seestab_count(const Slope& s0, const Slope& s1, const Slope& s);

Int self_linking(const LegendrianInvariants& L);

struct CableFamily {
    Int tb = 0;
    Int rot = 0;
    Int sl = 0;
    Int count = 0;
};
// Non-loose (2n+1, 2)-cables of the unknot sharing tb, rot and sl.
CableFamily transnonsimple_family(Int n);

}  // namespace nonloose
