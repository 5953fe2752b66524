#pragma once
// Decision table cases: topology facts, flavor, expected verdict.

#include <string>
#include <vector>

#include "nonloose/existence.hpp"

namespace fixture {

using nonloose::Ambient;
using nonloose::Flavor;
using nonloose::TopologyFacts;
using nonloose::Verdict;

struct Case {
    std::string name;
    TopologyFacts facts;
    Flavor flavor;
    Verdict expected;
};

inline TopologyFacts unknot_s3() {
    TopologyFacts f;
    f.ambient = Ambient::S3;
    f.is_rational_unknot = f.is_unknot = f.is_unknot_in_s3 = f.contained_in_ball = true;
    return f;
}

inline TopologyFacts s1_core() {
    TopologyFacts f;
    f.ambient = Ambient::S1xS2;
    f.intersects_essential_sphere_once = true;
    return f;
}

inline TopologyFacts lens_core() {
    TopologyFacts f;
    f.ambient = Ambient::Lens;
    f.is_rational_unknot = true;
    return f;
}

inline TopologyFacts in_ball(Ambient a) {
    TopologyFacts f;
    f.ambient = a;
    f.contained_in_ball = true;
    return f;
}

inline TopologyFacts plain(Ambient a) {
    TopologyFacts f;
    f.ambient = a;
    return f;
}

inline std::vector<Case> cases() {
    TopologyFacts unknot_sfs = in_ball(Ambient::SeifertFibered);
    unknot_sfs.is_unknot = true;
    TopologyFacts untight = plain(Ambient::Unspecified);
    untight.summand_admits_tight = false;
    return {
        {"unknot in S3, legendrian", unknot_s3(), Flavor::Legendrian, Verdict::ExactlyOneStructureKnown},
        {"unknot in S3, transverse", unknot_s3(), Flavor::Transverse, Verdict::None},
        {"S1 x pt in S1 x S2, legendrian", s1_core(), Flavor::Legendrian, Verdict::None},
        {"S1 x pt in S1 x S2, transverse", s1_core(), Flavor::Transverse, Verdict::None},
        {"rational unknot in L(5,2), legendrian", lens_core(), Flavor::Legendrian, Verdict::AtLeastTwo},
        {"rational unknot in L(5,2), transverse", lens_core(), Flavor::Transverse, Verdict::None},
        {"knot in a ball in Mn, legendrian", in_ball(Ambient::Mn), Flavor::Legendrian, Verdict::None},
        {"knot in a ball in Mn, transverse", in_ball(Ambient::Mn), Flavor::Transverse, Verdict::None},
        {"knot outside a ball in Mn, legendrian", plain(Ambient::Mn), Flavor::Legendrian, Verdict::AtLeastTwo},
        {"trefoil in S3, transverse", plain(Ambient::S3), Flavor::Transverse, Verdict::AtLeastTwo},
        {"unknot in a Seifert fibred space, legendrian", unknot_sfs, Flavor::Legendrian, Verdict::AtLeastOne},
        {"knot with non-tight summand, legendrian", untight, Flavor::Legendrian, Verdict::None},
    };
}

}  // namespace fixture
