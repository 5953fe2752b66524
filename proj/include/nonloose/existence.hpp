#pragma once

#include <optional>
#include <string>
#include <string_view>

namespace nonloose {

enum class Flavor { Legendrian, Transverse };

// Coarse description of the ambient manifold M, used to decide whether the
// summand M' carries a tight structure when the caller does not say.
enum class Ambient {
    Unspecified,
    S3,
    S1xS2,
    Lens,
    SeifertFibered,  // Seifert fibred, not one of the M_n below
    RP3SumRP3,
    Mn,              // Seifert fibred with no tight contact structure
};

// Caller-asserted topology.  Write M = M' # M'' with K in M'' and M''
// prime (M'' = S^3 when K lies in a ball).
struct TopologyFacts {
    Ambient ambient = Ambient::Unspecified;
    bool intersects_essential_sphere_once = false;
    std::optional<bool> summand_admits_tight;  // M' admits a tight structure
    bool is_rational_unknot = false;
    bool is_unknot = false;                    // bounds a disk in M
    bool is_unknot_in_s3 = false;
    bool contained_in_ball = false;
};

enum class Verdict { None, ExactlyOneStructureKnown, AtLeastOne, AtLeastTwo };

std::string to_string(Flavor f);
std::string to_string(Ambient a);
std::string to_string(Verdict v);
Flavor parse_flavor(std::string_view t);
Ambient parse_ambient(std::string_view t);

// Whether K has non-loose representatives, and in how many overtwisted
// structures at least.  Throws std::invalid_argument on contradictory facts
// or when summand tightness cannot be decided.
Verdict admits_nonloose(const TopologyFacts& facts, Flavor flavor);

}  // namespace nonloose
