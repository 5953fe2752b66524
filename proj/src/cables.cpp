#include "nonloose/cables.hpp"

#include <stdexcept>
#include <string>

namespace nonloose {

namespace {
Int abs_(Int x) { return x < 0 ? checked_sub(0, x) : x; }
}  // namespace

CableSpec::CableSpec(Int p_, Int q_) : p(p_), q(q_) {
    if (p < 1) throw std::invalid_argument("cable needs p >= 1, got " + std::to_string(p));
    if (gcd(p, q) != 1)
        throw std::invalid_argument("cable (" + std::to_string(p) + "," + std::to_string(q) + ") is not primitive");
}

Int divide_cable_tb(const CableSpec& c) { return checked_mul(c.p, c.q); }

Int ruling_cable_tb(const CableSpec& c, const Slope& dividing) {
    if (dividing == c.slope())
        throw std::domain_error("ruling_cable_tb: dividing slope equals the cable slope; use divide_cable_tb");
    // dividing = q'/p'
    Int cross = checked_sub(checked_mul(c.p, dividing.num()), checked_mul(dividing.den(), c.q));
    return checked_sub(checked_mul(c.p, c.q), abs_(cross));
}

Int cable_rot(const CableSpec& c, Int r_disk, Int r_seifert) {
    return checked_add(checked_mul(c.q, r_disk), checked_mul(c.p, r_seifert));
}

LegendrianInvariants positive_cable(const LegendrianInvariants& L, const CableSpec& c) {
    if (c.q <= checked_mul(c.p, L.tb))
        throw std::domain_error("positive_cable: need q/p > tb = " + std::to_string(L.tb));
    return {ruling_cable_tb(c, Slope::integer(L.tb)), cable_rot(c, 0, L.rot)};
}

Int negative_cable_tb(const LegendrianInvariants& L, const CableSpec& c) {
    Int lo = checked_mul(c.p, checked_sub(L.tb, 1)), hi = checked_mul(c.p, L.tb);
    if (!(lo < c.q && c.q < hi))
        throw std::domain_error("negative_cable_tb: need tb - 1 < q/p < tb with tb = " + std::to_string(L.tb));
    return divide_cable_tb(c);
}

Int stab_count_relation(const LegendrianInvariants& L, const CableSpec& c) {
    Int neg = negative_cable_tb(L, c);
    Int n = abs_(dot(Slope::integer(checked_sub(L.tb, 1)), c.slope()));
    LegendrianInvariants stabilized{checked_sub(L.tb, 1), L.rot};
    if (checked_sub(neg, n) != positive_cable(stabilized, c).tb)
        throw std::logic_error("stab_count_relation: tb bookkeeping does not close");
    return n;
}

Int seestab_count(const Slope& s0, const Slope& s1, const Slope& s) {
    if (!has_edge(s0, s1)) throw std::domain_error("seestab_count: " + s0.str() + " and " + s1.str() + " are not adjacent");
    if (s != s0 && s != s1 && cw_between(s0, s, s1))
        throw std::domain_error("seestab_count: " + s.str() + " lies between " + s0.str() + " and " + s1.str());
    std::vector<Slope> edge{s0, s1};
    auto lift = lift_path(edge);
    return abs_(dot(farey_diff(lift[1], lift[0]), vector_of(s)));
}

Int self_linking(const LegendrianInvariants& L) { return checked_sub(L.tb, L.rot); }

CableFamily transnonsimple_family(Int n) {
    if (n < 1) throw std::domain_error("transnonsimple_family: need n >= 1");
    CableSpec c(checked_add(checked_mul(2, n), 1), 2);
    LegendrianInvariants L{divide_cable_tb(c), cable_rot(c, -1, 1)};
    return {L.tb, L.rot, self_linking(L), n};
}

}  // namespace nonloose
