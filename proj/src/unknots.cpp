#include "nonloose/unknots.hpp"

#include <algorithm>
#include <atomic>
#include <functional>
#include <map>
#include <stdexcept>
#include <thread>

namespace nonloose {

std::string to_string(const Rational& r) {
    if (r.denominator() == 1) return std::to_string(r.numerator());
    return std::to_string(r.numerator()) + "/" + std::to_string(r.denominator());
}

Rational parse_rational(std::string_view text) {
    Slope s = Slope::parse(text);
    if (s.is_infinite()) throw std::invalid_argument("not a rational number: '" + std::string(text) + "'");
    return Rational(s.num(), s.den());
}

LensSpace::LensSpace(Int p_, Int q_) : p(p_), q(q_) {
    bool ok = p == 1 ? q == 1 : (p >= 2 && q >= 1 && q < p && gcd(p, q) == 1);
    if (!ok)
        throw std::invalid_argument("L(" + std::to_string(p) + "," + std::to_string(q) +
                                    ") is not a lens space: need coprime 0 < q < p");
}

Int LensSpace::qbar() const {
    if (p == 1) return 1;
    Int t = Unimodular::to_infinity(Slope(q, p)).a;  // t q + s p = 1
    t %= p;
    return t <= 0 ? t + p : t;
}

std::string LensSpace::str() const { return "L(" + std::to_string(p) + "," + std::to_string(q) + ")"; }

KnotId KnotId::parse(std::string_view text) {
    KnotId k;
    std::string_view t = text;
    if (!t.empty() && t.front() == '-') {
        k.reversed = true;
        t.remove_prefix(1);
    }
    if (t == "K0" || t == "k0") k.core = Core::K0;
    else if (t == "K1" || t == "k1") k.core = Core::K1;
    else throw std::invalid_argument("unknown knot '" + std::string(text) + "' (expected K0, K1, -K0, -K1)");
    return k;
}

std::string KnotId::str() const { return std::string(reversed ? "-" : "") + (core == Core::K0 ? "K0" : "K1"); }

std::vector<KnotId> smooth_unknots(const LensSpace& lens) {
    KnotId k0{Core::K0, false}, k1{Core::K1, false};
    if (lens.p <= 2) return {k0};
    if (lens.q == 1 || lens.q == lens.p - 1) return {k0, -k0};
    return {k0, -k0, k1, -k1};
}

std::string NonLooseClass::str() const {
    return knot.str() + " in " + lens.str() + " k=" + std::to_string(level) + " s=" + dividing_slope.str() +
           " tb=" + to_string(tb) + " rot=" + to_string(rot) + " e=" + std::to_string(euler);
}

Int reduce_euler(Int e, Int p) {
    if (e > -p && e <= p) return e;
    Int r = e % p;  // in (-p, p)
    if (r <= -p) r += p;
    return r;
}

namespace {

LensSpace working_lens(const LensSpace& lens, const KnotId& knot) {
    return knot.core == Core::K1 ? lens.dual() : lens;
}

NonLooseClass reversed(NonLooseClass c) {
    c.knot = -c.knot;
    c.rot = -c.rot;
    return c;
}

NonLooseClass make_class(const LensSpace& lens, const KnotId& knot, int k, const Slope& s, ShuffleClass sc) {
    NonLooseClass c{lens, knot, k, s, std::move(sc), {}, {}, 0, 0};
    Int p = lens.p;
    Int width = dot(Slope::integer(0), s);
    c.tb = Rational(width < 0 ? -width : width, p);
    c.disk_euler = euler_on_disk(c.complement.representative(), Slope::integer(0));
    c.rot = Rational(c.disk_euler, p);
    c.euler = reduce_euler(-c.disk_euler, p);
    if (knot.reversed) c.rot = -c.rot;
    return c;
}

// Runs fn(i) for i in [0, n) on a few worker threads.
void parallel_for(std::size_t n, const std::function<void(std::size_t)>& fn) {
    std::size_t workers = std::min<std::size_t>(n, std::max(1u, std::thread::hardware_concurrency()));
    if (workers <= 1) {
        for (std::size_t i = 0; i < n; ++i) fn(i);
        return;
    }
    std::atomic<std::size_t> next{0};
    std::exception_ptr error;
    std::atomic<bool> failed{false};
    std::vector<std::thread> pool;
    for (std::size_t w = 0; w < workers; ++w)
        pool.emplace_back([&] {
            for (std::size_t i; (i = next++) < n && !failed;) {
                try {
                    fn(i);
                } catch (...) {
                    if (!failed.exchange(true)) error = std::current_exception();
                }
            }
        });
    for (auto& t : pool) t.join();
    if (error) std::rethrow_exception(error);
}

}  // namespace

Slope slope_k(const LensSpace& lens, const KnotId& knot, int k) {
    if (k < 0) throw std::domain_error("slope_k: negative level");
    Slope m = working_lens(lens, knot).meridian();
    return iterated_sum(ancestor(m), k, m);
}

std::vector<NonLooseClass> classes_at_slope(const LensSpace& lens, const KnotId& knot, int k) {
    Slope s = slope_k(lens, knot, k);
    std::vector<NonLooseClass> out;
    for (auto& sc : enumerate_tight(Context::upper_solid_torus(Slope::integer(0), s)))
        out.push_back(make_class(lens, knot, k, s, std::move(sc)));
    return out;
}

std::optional<NonLooseClass> stabilize(const NonLooseClass& c, Sign sign) {
    if (sign == Sign::Unsigned) throw std::invalid_argument("stabilize: sign must be + or -");
    if (c.knot.reversed) {
        auto r = stabilize(reversed(c), sign == Sign::Plus ? Sign::Minus : Sign::Plus);
        if (r) return reversed(*r);
        return r;
    }
    if (c.level == 0) return std::nullopt;
    Slope prev = slope_k(c.lens, c.knot, c.level - 1);
    auto rep = c.complement.representative();
    std::vector<Slope> v{prev};
    v.insert(v.end(), rep.path().vertices().begin(), rep.path().vertices().end());
    std::vector<Sign> s{sign};
    s.insert(s.end(), rep.signs().begin(), rep.signs().end());
    auto hits = tight_reductions(DecoratedPath(FareyPath(std::move(v)), std::move(s)));
    if (hits.empty()) return std::nullopt;
    if (hits.size() > 1)
        throw std::logic_error("stabilization of " + c.str() + " reaches " + std::to_string(hits.size()) +
                               " distinct classes");
    return make_class(c.lens, c.knot, c.level - 1, prev, std::move(hits.front()));
}

std::string to_string(RangeKind k) {
    switch (k) {
        case RangeKind::V: return "V";
        case RangeKind::BackSlash: return "BackSlash";
        case RangeKind::ForwardSlash: return "ForwardSlash";
    }
    return {};
}

RangeKind parse_range_kind(std::string_view t) {
    if (t == "V") return RangeKind::V;
    if (t == "BackSlash") return RangeKind::BackSlash;
    if (t == "ForwardSlash") return RangeKind::ForwardSlash;
    throw std::invalid_argument("unknown range kind '" + std::string(t) + "'");
}

std::string to_string(Arm a) {
    switch (a) {
        case Arm::Base: return "base";
        case Arm::Plus: return "plus";
        case Arm::Minus: return "minus";
    }
    return {};
}

void verify_range(const MountainRange& r) {
    auto fail = [&](const RangeMember& m, const std::string& why) {
        throw std::logic_error(to_string(r.kind) + " at (" + to_string(r.base_rot) + ", " + to_string(r.base_tb) +
                               "): member " + m.id + " " + why);
    };
    for (const auto& m : r.members) {
        Rational h(m.height);
        if (m.cls.tb != r.base_tb + h) fail(m, "has tb " + to_string(m.cls.tb));
        Rational want = m.arm == Arm::Plus ? r.base_rot + h : m.arm == Arm::Minus ? r.base_rot - h : r.base_rot;
        if (m.cls.rot != want) fail(m, "has rot " + to_string(m.cls.rot));
        if (m.arm == Arm::Base && m.height != 0) fail(m, "is a base above height 0");
        if (r.kind == RangeKind::ForwardSlash && m.arm == Arm::Minus) fail(m, "lies on a minus arm");
        if (r.kind == RangeKind::BackSlash && m.arm == Arm::Plus) fail(m, "lies on a plus arm");
        Int p = m.cls.lens.p;
        if (reduce_euler(m.cls.euler - r.euler, p) % p != 0) fail(m, "has a different Euler class");
    }
}

namespace {

void sort_range(MountainRange& r) {
    auto rank = [](const RangeMember& m) { return m.arm == Arm::Base ? 0 : m.arm == Arm::Plus ? 1 : 2; };
    std::stable_sort(r.members.begin(), r.members.end(), [&](const RangeMember& a, const RangeMember& b) {
        if (a.height != b.height) return a.height < b.height;
        return rank(a) < rank(b);
    });
}

void sort_ranges(std::vector<MountainRange>& rs) {
    std::stable_sort(rs.begin(), rs.end(), [](const MountainRange& a, const MountainRange& b) {
        if (a.base_tb != b.base_tb) return a.base_tb < b.base_tb;
        if (a.base_rot != b.base_rot) return a.base_rot > b.base_rot;
        return static_cast<int>(a.kind) < static_cast<int>(b.kind);
    });
}

RangeMember reversed(RangeMember m) {
    m.cls = reversed(std::move(m.cls));
    if (m.arm == Arm::Plus) m.arm = Arm::Minus;
    else if (m.arm == Arm::Minus) m.arm = Arm::Plus;
    std::swap(m.plus_target, m.minus_target);
    return m;
}

Classification reversed(Classification c) {
    c.knot = -c.knot;
    for (auto& r : c.ranges) {
        if (r.kind == RangeKind::BackSlash) r.kind = RangeKind::ForwardSlash;
        else if (r.kind == RangeKind::ForwardSlash) r.kind = RangeKind::BackSlash;
        r.base_rot = -r.base_rot;
        for (auto& m : r.members) m = reversed(std::move(m));
        sort_range(r);
    }
    for (auto& m : c.unresolved) m = reversed(std::move(m));
    sort_ranges(c.ranges);
    return c;
}

std::string id_of(int k, std::size_t i) { return std::to_string(k) + "." + std::to_string(i); }

}  // namespace

Classification classify(const LensSpace& lens, const KnotId& knot, int k_max) {
    if (k_max < 3) throw std::invalid_argument("classify: k_max must be at least 3");
    if (knot.reversed) return reversed(classify(lens, -knot, k_max));

    std::vector<std::vector<NonLooseClass>> level(k_max + 1);
    for (int k = 0; k <= k_max; ++k) level[k] = classes_at_slope(lens, knot, k);

    // Stabilisation targets as indices into the previous level, -1 for loose.
    struct Node {
        int k;
        std::size_t i;
        long plus = -1, minus = -1;
    };
    std::vector<Node> nodes;
    for (int k = 0; k <= k_max; ++k)
        for (std::size_t i = 0; i < level[k].size(); ++i) nodes.push_back({k, i});

    std::vector<std::map<ShuffleClass, std::size_t>> index(k_max + 1);
    for (int k = 0; k <= k_max; ++k)
        for (std::size_t i = 0; i < level[k].size(); ++i) index[k][level[k][i].complement] = i;

    parallel_for(nodes.size(), [&](std::size_t n) {
        Node& node = nodes[n];
        if (node.k == 0) return;
        const auto& c = level[node.k][node.i];
        auto lookup = [&](const std::optional<NonLooseClass>& r) -> long {
            if (!r) return -1;
            auto it = index[node.k - 1].find(r->complement);
            if (it == index[node.k - 1].end())
                throw std::logic_error("stabilization of " + c.str() + " left the enumerated classes");
            return static_cast<long>(it->second);
        };
        node.plus = lookup(stabilize(c, Sign::Plus));
        node.minus = lookup(stabilize(c, Sign::Minus));
    });

    std::vector<std::size_t> offset(k_max + 2, 0);
    for (int k = 0; k <= k_max; ++k) offset[k + 1] = offset[k] + level[k].size();
    auto node_at = [&](int k, std::size_t i) -> Node& { return nodes[offset[k] + i]; };

    auto member_of = [&](const Node& n) {
        RangeMember m{level[n.k][n.i], id_of(n.k, n.i), Arm::Base, 0, {}, {}};
        m.plus_target = n.plus < 0 ? "loose" : id_of(n.k - 1, static_cast<std::size_t>(n.plus));
        m.minus_target = n.minus < 0 ? "loose" : id_of(n.k - 1, static_cast<std::size_t>(n.minus));
        return m;
    };

    Classification out{lens, knot, k_max, {}, {}};

    // Walk every non-base class down to its base along a single sign.
    std::map<std::pair<int, std::size_t>, std::vector<RangeMember>> arms;
    for (const auto& n : nodes) {
        bool base = n.plus < 0 && n.minus < 0;
        if (base) continue;
        auto m = member_of(n);
        if (n.plus >= 0 && n.minus >= 0) {
            out.unresolved.push_back(std::move(m));
            continue;
        }
        Arm arm = n.plus >= 0 ? Arm::Plus : Arm::Minus;
        const Node* cur = &n;
        bool ok = true;
        while (true) {
            long t = arm == Arm::Plus ? cur->plus : cur->minus;
            long other = arm == Arm::Plus ? cur->minus : cur->plus;
            if (t < 0 || other >= 0) {
                ok = false;
                break;
            }
            const Node& next = node_at(cur->k - 1, static_cast<std::size_t>(t));
            cur = &next;
            if (next.plus < 0 && next.minus < 0) break;
        }
        if (!ok) {
            out.unresolved.push_back(std::move(m));
            continue;
        }
        m.arm = arm;
        m.height = n.k - cur->k;
        arms[{cur->k, cur->i}].push_back(std::move(m));
    }

    for (const auto& n : nodes) {
        if (n.plus >= 0 || n.minus >= 0) continue;
        MountainRange r;
        auto base = member_of(n);
        r.base_rot = base.cls.rot;
        r.base_tb = base.cls.tb;
        r.euler = base.cls.euler;
        auto& ms = arms[{n.k, n.i}];
        int span = k_max - n.k;
        bool stable = n.k <= k_max - 2;
        bool has_plus = false, has_minus = false;
        for (Arm a : {Arm::Plus, Arm::Minus}) {
            std::vector<int> seen(span + 1, 0);
            int count = 0;
            for (const auto& m : ms)
                if (m.arm == a) {
                    ++seen[m.height];
                    ++count;
                }
            if (count == 0) continue;
            (a == Arm::Plus ? has_plus : has_minus) = true;
            for (int h = 1; h <= span; ++h)
                if (seen[h] != 1) stable = false;
        }
        if (!has_plus && !has_minus) stable = false;
        r.members.push_back(std::move(base));
        for (auto& m : ms) r.members.push_back(std::move(m));
        if (stable) {
            r.kind = has_plus && has_minus ? RangeKind::V : has_plus ? RangeKind::ForwardSlash : RangeKind::BackSlash;
            sort_range(r);
            try {
                verify_range(r);
                out.ranges.push_back(std::move(r));
                continue;
            } catch (const std::logic_error&) {
            }
        }
        for (auto& m : r.members) out.unresolved.push_back(std::move(m));
    }
    sort_ranges(out.ranges);
    return out;
}

RangeCounts range_counts(const LensSpace& lens, const KnotId& knot) {
    LensSpace l = working_lens(lens, knot);
    if (l.q == 1) return {1, 0, l.p - 1};
    if (l.q == l.p - 1) return {0, 1, 1};
    auto a = expand(l.meridian()).coeffs();
    std::size_t n = a.size() - 1;
    auto abs_ = [](Int x) { return x < 0 ? -x : x; };
    Int head = 1;  // (a0+1)...(a(n-2)+1)
    for (std::size_t i = 0; i + 2 <= n; ++i) head = checked_mul(head, checked_add(a[i], 1));
    Int all = checked_mul(checked_mul(head, checked_add(a[n - 1], 1)), checked_add(a[n], 1));
    RangeCounts c;
    c.v_low = abs_(checked_mul(head, checked_add(a[n - 1], 2)));
    c.slashes = abs_(head);
    c.v_high = abs_(all);
    return c;
}

}  // namespace nonloose
