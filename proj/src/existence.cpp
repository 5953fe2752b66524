#include "nonloose/existence.hpp"

#include <stdexcept>

namespace nonloose {

std::string to_string(Flavor f) { return f == Flavor::Legendrian ? "legendrian" : "transverse"; }

std::string to_string(Ambient a) {
    switch (a) {
        case Ambient::Unspecified: return "unspecified";
        case Ambient::S3: return "S3";
        case Ambient::S1xS2: return "S1xS2";
        case Ambient::Lens: return "lens";
        case Ambient::SeifertFibered: return "seifert";
        case Ambient::RP3SumRP3: return "RP3#RP3";
        case Ambient::Mn: return "Mn";
    }
    return {};
}

std::string to_string(Verdict v) {
    switch (v) {
        case Verdict::None: return "none";
        case Verdict::ExactlyOneStructureKnown: return "exactly-one";
        case Verdict::AtLeastOne: return "at-least-one";
        case Verdict::AtLeastTwo: return "at-least-two";
    }
    return {};
}

Flavor parse_flavor(std::string_view t) {
    if (t == "legendrian" || t == "L") return Flavor::Legendrian;
    if (t == "transverse" || t == "T") return Flavor::Transverse;
    throw std::invalid_argument("unknown flavor '" + std::string(t) + "'");
}

Ambient parse_ambient(std::string_view t) {
    for (Ambient a : {Ambient::Unspecified, Ambient::S3, Ambient::S1xS2, Ambient::Lens, Ambient::SeifertFibered,
                      Ambient::RP3SumRP3, Ambient::Mn})
        if (t == to_string(a)) return a;
    throw std::invalid_argument("unknown ambient manifold '" + std::string(t) + "'");
}

namespace {

void require(bool ok, const char* why) {
    if (!ok) throw std::invalid_argument(std::string("inconsistent facts: ") + why);
}

bool summand_tight(const TopologyFacts& f) {
    std::optional<bool> derived;
    switch (f.ambient) {
        case Ambient::Unspecified: break;
        case Ambient::Mn: derived = !f.contained_in_ball; break;
        default: derived = true; break;
    }
    if (f.summand_admits_tight && derived && *f.summand_admits_tight != *derived)
        throw std::invalid_argument("inconsistent facts: summand tightness contradicts the ambient manifold");
    if (f.summand_admits_tight) return *f.summand_admits_tight;
    if (derived) return *derived;
    throw std::invalid_argument("cannot decide whether the summand admits a tight structure; give it or an ambient");
}

}  // namespace

Verdict admits_nonloose(const TopologyFacts& f, Flavor flavor) {
    require(!f.is_unknot_in_s3 || (f.is_rational_unknot && f.is_unknot),
            "the unknot in S^3 is a rational unknot and an unknot");
    require(!f.is_unknot_in_s3 || f.ambient == Ambient::Unspecified || f.ambient == Ambient::S3,
            "the unknot in S^3 lives in S^3");
    require(!f.is_unknot || !f.intersects_essential_sphere_once, "an unknot lies in a ball");
    require(!f.contained_in_ball || !f.intersects_essential_sphere_once,
            "a knot in a ball meets every sphere algebraically zero times");
    require(!f.is_rational_unknot || f.ambient == Ambient::Unspecified || f.ambient == Ambient::S3 ||
                f.ambient == Ambient::Lens || f.ambient == Ambient::S1xS2,
            "rational unknots live in lens spaces, S^3 or S^1 x S^2");
    require(!f.is_rational_unknot || !f.contained_in_ball || f.is_unknot_in_s3,
            "only the unknot in S^3 is a rational unknot inside a ball");
    require(!(f.ambient == Ambient::S3 && f.intersects_essential_sphere_once), "S^3 has no essential sphere");
    require(!(f.is_unknot && f.ambient == Ambient::S3) || f.is_unknot_in_s3, "an unknot in S^3 is the unknot in S^3");

    // The unknot in S^3 forces its own answer, so tightness of M' = S^3
    // need not be stated.
    bool tight = f.is_unknot_in_s3 ? true : summand_tight(f);
    if (f.is_unknot_in_s3) require(!f.summand_admits_tight || *f.summand_admits_tight, "S^3 admits a tight structure");

    if (f.intersects_essential_sphere_once || !tight) return Verdict::None;
    // an unknot in M counts as a rational unknot here
    if (flavor == Flavor::Transverse)
        return f.is_rational_unknot || f.is_unknot ? Verdict::None : Verdict::AtLeastTwo;
    if (f.is_unknot_in_s3) return Verdict::ExactlyOneStructureKnown;
    if (f.is_unknot) return Verdict::AtLeastOne;
    return Verdict::AtLeastTwo;
}

}  // namespace nonloose
