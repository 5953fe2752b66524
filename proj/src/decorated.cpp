#include "nonloose/decorated.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>
#include <tuple>

namespace nonloose {

char sign_char(Sign s) {
    switch (s) {
        case Sign::Plus: return '+';
        case Sign::Minus: return '-';
        case Sign::Unsigned: return 'u';
    }
    return '?';
}

Context Context::thickened_torus(const Slope& s0, const Slope& s1) {
    if (s0 == s1) throw std::invalid_argument("thickened torus needs distinct boundary slopes");
    return Context(Kind::ThickenedTorus, s0, s1);
}

Context Context::lower_solid_torus(const Slope& r, const Slope& s) {
    if (r == s) throw std::invalid_argument("solid torus needs distinct meridian and boundary slopes");
    return Context(Kind::LowerSolidTorus, r, s);
}

Context Context::upper_solid_torus(const Slope& r, const Slope& s) {
    if (r == s) throw std::invalid_argument("solid torus needs distinct meridian and boundary slopes");
    return Context(Kind::UpperSolidTorus, s, r);
}

Context Context::lens(Int p, Int q) {
    if (p < 1 || q < 1 || q > p || (q == p && p != 1) || gcd(p, q) != 1)
        throw std::invalid_argument("lens space L(" + std::to_string(p) + "," + std::to_string(q) +
                                    ") needs coprime 0 < q < p");
    return Context(Kind::Lens, Slope(-p, q), Slope::integer(0));
}

bool Context::edge_signed(std::size_t edge, std::size_t edge_count) const {
    if (edge == 0 && first_unsigned()) return false;
    if (edge + 1 == edge_count && last_unsigned()) return false;
    return true;
}

std::string Context::str() const {
    switch (kind_) {
        case Kind::ThickenedTorus: return "torus:" + first_.str() + ":" + last_.str();
        case Kind::LowerSolidTorus: return "lower:" + first_.str() + ":" + last_.str();
        case Kind::UpperSolidTorus: return "upper:" + last_.str() + ":" + first_.str();
        case Kind::Lens: return "lens:" + std::to_string(-first_.num()) + ":" + std::to_string(first_.den());
    }
    return {};
}

DecoratedPath::DecoratedPath(FareyPath path, std::vector<Sign> signs)
    : path_(std::move(path)), signs_(std::move(signs)) {
    if (signs_.size() != path_.edge_count())
        throw std::invalid_argument("need one sign per edge: " + std::to_string(path_.edge_count()) +
                                    " edges, " + std::to_string(signs_.size()) + " signs");
    for (std::size_t i = 1; i + 1 < signs_.size(); ++i)
        if (signs_[i] == Sign::Unsigned)
            throw std::invalid_argument("only the first or last edge may be unsigned");
}

DecoratedPath DecoratedPath::in_context(const Context& ctx, FareyPath path,
                                        const std::vector<Sign>& signed_signs) {
    std::size_t m = path.edge_count();
    std::vector<Sign> signs(m, Sign::Unsigned);
    std::size_t k = 0;
    for (std::size_t i = 0; i < m; ++i) {
        if (!ctx.edge_signed(i, m)) continue;
        if (k >= signed_signs.size()) throw std::invalid_argument("too few signs for path " + path.str());
        signs[i] = signed_signs[k++];
        if (signs[i] == Sign::Unsigned) throw std::invalid_argument("edge " + std::to_string(i) + " must be signed");
    }
    if (k != signed_signs.size()) throw std::invalid_argument("too many signs for path " + path.str());
    DecoratedPath d(std::move(path), std::move(signs));
    check_in_context(d, ctx);
    return d;
}

std::string DecoratedPath::str() const {
    std::string s;
    for (std::size_t i = 0; i < signs_.size(); ++i) {
        s += path_[i].str();
        s += ':';
        s += sign_char(signs_[i]);
        s += ' ';
    }
    return s + path_.back().str();
}

void check_in_context(const DecoratedPath& d, const Context& ctx) {
    const auto& p = d.path();
    if (p.front() != ctx.first() || p.back() != ctx.last())
        throw std::invalid_argument("path " + p.str() + " does not run from " + ctx.first().str() + " to " +
                                    ctx.last().str());
    std::size_t m = p.edge_count();
    for (std::size_t i = 0; i < m; ++i) {
        bool want = ctx.edge_signed(i, m);
        bool have = d.signs()[i] != Sign::Unsigned;
        if (want != have)
            throw std::invalid_argument("edge " + std::to_string(i) + (want ? " must be signed" : " must be unsigned") +
                                        " in " + ctx.str());
    }
}

namespace {

BlockPartition signed_blocks(const std::vector<Slope>& v, const std::vector<Sign>& s) {
    BlockPartition out;
    for (auto& b : block_structure(v)) {
        std::vector<std::size_t> kept;
        for (auto i : b)
            if (s[i] != Sign::Unsigned) kept.push_back(i);
        if (!kept.empty()) out.push_back(std::move(kept));
    }
    return out;
}

ShuffleClass make_class(FareyPath path, const std::vector<Sign>& s) {
    ShuffleClass c{std::move(path), {}, {}, {}};
    for (std::size_t i = 0; i < s.size(); ++i)
        if (s[i] == Sign::Unsigned) c.unsigned_edges.push_back(i);
    c.blocks = signed_blocks(c.path.vertices(), s);
    for (auto& b : c.blocks)
        c.minus.push_back(static_cast<int>(std::count_if(b.begin(), b.end(), [&](auto i) { return s[i] == Sign::Minus; })));
    return c;
}

struct State {
    std::vector<Slope> v;
    std::vector<Sign> s;
};

// Minus signs first inside each block.
void normalize(State& st) {
    for (auto& b : signed_blocks(st.v, st.s)) {
        auto m = std::count_if(b.begin(), b.end(), [&](auto i) { return st.s[i] == Sign::Minus; });
        for (std::size_t j = 0; j < b.size(); ++j)
            st.s[b[j]] = static_cast<std::ptrdiff_t>(j) < m ? Sign::Minus : Sign::Plus;
    }
}

std::vector<Int> key_of(const State& st) {
    std::vector<Int> k;
    k.reserve(3 * st.v.size());
    for (auto& x : st.v) {
        k.push_back(x.num());
        k.push_back(x.den());
    }
    for (auto x : st.s) k.push_back(static_cast<Int>(x));
    return k;
}

class Search {
public:
    explicit Search(std::size_t target) : target_(target) {}

    const std::vector<ShuffleClass>& run(const State& st) {
        auto key = key_of(st);
        if (auto it = memo_.find(key); it != memo_.end()) return it->second;
        std::vector<ShuffleClass> out;
        if (st.s.size() == target_) {
            out.push_back(make_class(FareyPath(st.v), st.s));
        } else {
            expand(st, out);
            std::sort(out.begin(), out.end());
            out.erase(std::unique(out.begin(), out.end()), out.end());
        }
        return memo_.emplace(std::move(key), std::move(out)).first->second;
    }

private:
    void expand(const State& st, std::vector<ShuffleClass>& out) {
        auto blocks = signed_blocks(st.v, st.s);
        std::vector<int> block_of(st.s.size(), -1);
        for (std::size_t b = 0; b < blocks.size(); ++b)
            for (auto e : blocks[b]) block_of[e] = static_cast<int>(b);

        auto present = [&](std::size_t edge, Sign want) {
            for (auto e : blocks[block_of[edge]])
                if (st.s[e] == want) return true;
            return false;
        };
        auto bring = [&](State& child, std::size_t edge, Sign want) {
            for (auto e : blocks[block_of[edge]])
                if (child.s[e] == want) {
                    std::swap(child.s[e], child.s[edge]);
                    return;
                }
        };

        for (std::size_t i = 1; i + 1 < st.v.size(); ++i) {
            if (!has_edge(st.v[i - 1], st.v[i + 1])) continue;
            std::size_t left = i - 1, right = i;
            bool lu = st.s[left] == Sign::Unsigned, ru = st.s[right] == Sign::Unsigned;
            // (sign taken from left, sign taken from right, sign of new edge)
            std::vector<std::tuple<Sign, Sign, Sign>> moves;
            if (lu && ru) {
                moves.emplace_back(Sign::Unsigned, Sign::Unsigned, Sign::Unsigned);
            } else if (lu || ru) {
                std::size_t e = lu ? right : left;
                for (Sign sg : {Sign::Plus, Sign::Minus})
                    if (present(e, sg))
                        moves.emplace_back(lu ? Sign::Unsigned : sg, lu ? sg : Sign::Unsigned, Sign::Unsigned);
            } else {
                for (Sign sg : {Sign::Plus, Sign::Minus})
                    if (present(left, sg) && present(right, sg)) moves.emplace_back(sg, sg, sg);
            }
            for (auto [sl, sr, sn] : moves) {
                State child = st;
                if (sl != Sign::Unsigned) bring(child, left, sl);
                if (sr != Sign::Unsigned) bring(child, right, sr);
                child.v.erase(child.v.begin() + static_cast<std::ptrdiff_t>(i));
                child.s[left] = sn;
                child.s.erase(child.s.begin() + static_cast<std::ptrdiff_t>(right));
                normalize(child);
                const auto& sub = run(child);
                out.insert(out.end(), sub.begin(), sub.end());
            }
        }
    }

    std::size_t target_;
    std::map<std::vector<Int>, std::vector<ShuffleClass>> memo_;
};

}  // namespace

bool operator<(const ShuffleClass& a, const ShuffleClass& b) {
    return std::tie(a.path, a.unsigned_edges, a.minus) < std::tie(b.path, b.unsigned_edges, b.minus);
}

DecoratedPath ShuffleClass::representative() const {
    std::vector<Sign> s(path.edge_count(), Sign::Plus);
    for (auto e : unsigned_edges) s[e] = Sign::Unsigned;
    for (std::size_t b = 0; b < blocks.size(); ++b)
        for (std::size_t j = 0; j < blocks[b].size(); ++j)
            s[blocks[b][j]] = static_cast<int>(j) < minus[b] ? Sign::Minus : Sign::Plus;
    return DecoratedPath(path, std::move(s));
}

std::string ShuffleClass::str() const {
    std::string s = path.str() + " minus=[";
    for (std::size_t i = 0; i < minus.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(minus[i]) + "/" + std::to_string(blocks[i].size());
    }
    return s + "]";
}

ShuffleClass canonicalize(const DecoratedPath& d) {
    const auto& p = d.path();
    if (p.edge_count() != minimal_path(p.front(), p.back()).edge_count())
        throw std::domain_error("canonicalize: " + p.str() + " is not a minimal path");
    return make_class(p, d.signs());
}

ShuffleClass shuffle_class(const Context& ctx, FareyPath path, std::vector<int> minus) {
    std::size_t m = path.edge_count();
    std::vector<Sign> s(m, Sign::Plus);
    for (std::size_t i = 0; i < m; ++i)
        if (!ctx.edge_signed(i, m)) s[i] = Sign::Unsigned;
    ShuffleClass c = make_class(std::move(path), s);
    if (minus.size() != c.blocks.size())
        throw std::invalid_argument("expected " + std::to_string(c.blocks.size()) + " block counts, got " +
                                    std::to_string(minus.size()));
    for (std::size_t b = 0; b < minus.size(); ++b)
        if (minus[b] < 0 || minus[b] > static_cast<int>(c.blocks[b].size()))
            throw std::invalid_argument("minus count " + std::to_string(minus[b]) + " out of range for block " +
                                        std::to_string(b));
    c.minus = std::move(minus);
    return c;
}

std::optional<DecoratedPath> shorten_once(const DecoratedPath& d, std::size_t vertex) {
    const auto& v = d.path().vertices();
    if (vertex == 0 || vertex + 1 >= v.size())
        throw std::out_of_range("shorten_once: vertex " + std::to_string(vertex) + " is not interior");
    if (!has_edge(v[vertex - 1], v[vertex + 1]))
        throw std::domain_error("shorten_once: neighbours of " + v[vertex].str() + " are not adjacent");
    Sign l = d.signs()[vertex - 1], r = d.signs()[vertex];
    Sign n;
    if (l == Sign::Unsigned || r == Sign::Unsigned) n = Sign::Unsigned;
    else if (l == r) n = l;
    else return std::nullopt;
    auto nv = v;
    nv.erase(nv.begin() + static_cast<std::ptrdiff_t>(vertex));
    auto ns = d.signs();
    ns[vertex - 1] = n;
    ns.erase(ns.begin() + static_cast<std::ptrdiff_t>(vertex));
    return DecoratedPath(FareyPath(std::move(nv)), std::move(ns));
}

std::vector<ShuffleClass> tight_reductions(const DecoratedPath& d) {
    const auto& p = d.path();
    Search search(minimal_path(p.front(), p.back()).edge_count());
    State st{p.vertices(), d.signs()};
    normalize(st);
    return search.run(st);
}

bool is_tight(const DecoratedPath& d) { return !tight_reductions(d).empty(); }

bool is_tight(const DecoratedPath& d, const Context& ctx) {
    check_in_context(d, ctx);
    return is_tight(d);
}

std::uint64_t count_tight(const Context& ctx) {
    auto path = ctx.minimal();
    std::vector<Sign> s(path.edge_count(), Sign::Plus);
    for (std::size_t i = 0; i < s.size(); ++i)
        if (!ctx.edge_signed(i, s.size())) s[i] = Sign::Unsigned;
    std::uint64_t n = 1;
    for (auto& b : signed_blocks(path.vertices(), s)) {
        if (__builtin_mul_overflow(n, b.size() + 1, &n)) throw std::overflow_error("count_tight overflow");
    }
    return n;
}

std::vector<ShuffleClass> enumerate_tight(const Context& ctx) {
    auto path = ctx.minimal();
    std::vector<ShuffleClass> out;
    std::size_t m = path.edge_count();
    std::vector<Sign> s(m, Sign::Plus);
    for (std::size_t i = 0; i < m; ++i)
        if (!ctx.edge_signed(i, m)) s[i] = Sign::Unsigned;
    ShuffleClass proto = make_class(path, s);
    std::vector<int> minus(proto.blocks.size(), 0);
    while (true) {
        ShuffleClass c = proto;
        c.minus = minus;
        out.push_back(std::move(c));
        // Odometer, last block fastest.
        std::size_t b = minus.size();
        while (b > 0) {
            --b;
            if (minus[b] < static_cast<int>(proto.blocks[b].size())) {
                ++minus[b];
                std::fill(minus.begin() + static_cast<std::ptrdiff_t>(b) + 1, minus.end(), 0);
                break;
            }
            if (b == 0) return out;
        }
        if (minus.empty()) return out;
    }
}

SignedVector relative_euler(const DecoratedPath& d) {
    auto lift = lift_path(d.path().vertices());
    SignedVector e;
    for (std::size_t i = 0; i < d.signs().size(); ++i) {
        Sign s = d.signs()[i];
        if (s == Sign::Unsigned) continue;
        auto diff = farey_diff(lift[i + 1], lift[i]);
        e += s == Sign::Plus ? diff : -diff;
    }
    return e;
}

SignedVector relative_euler(const ShuffleClass& c) { return relative_euler(c.representative()); }

Int euler_on_disk(const DecoratedPath& d, const Slope& meridian) {
    return dot(relative_euler(d), vector_of(meridian));
}

}  // namespace nonloose
