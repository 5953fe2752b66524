#include "nonloose/cli.hpp"

#include <CLI11.hpp>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include "nonloose/cables.hpp"
#include "nonloose/existence.hpp"
#include "nonloose/format.hpp"

namespace nonloose {

namespace {

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

template <class F>
auto token(const std::string& what, const std::string& text, F&& parse) {
    try {
        return parse(text);
    } catch (const std::invalid_argument&) {
        throw UsageError("invalid " + what + ": '" + text + "'");
    } catch (const std::out_of_range&) {
        throw UsageError("invalid " + what + ": '" + text + "'");
    }
}

Slope slope_arg(const std::string& t) {
    return token("slope", t, [](const std::string& s) { return Slope::parse(s); });
}

Int int_arg(const std::string& t) {
    return token("integer", t, [](const std::string& s) {
        std::size_t used = 0;
        long long v = std::stoll(s, &used);
        if (used != s.size()) throw std::invalid_argument(s);
        return static_cast<Int>(v);
    });
}

enum class Format { Table, Json, Csv, Svg };

Format format_arg(const std::string& t) {
    if (t == "table") return Format::Table;
    if (t == "json") return Format::Json;
    if (t == "csv") return Format::Csv;
    if (t == "svg") return Format::Svg;
    throw UsageError("invalid format: '" + t + "' (expected table, json, csv or svg)");
}

std::string default_format() {
    if (const char* env = std::getenv("NONLOOSE_FORMAT"); env && *env) return env;
    return "table";
}

Format plain_format(const std::string& t) {
    Format f = format_arg(t);
    if (f == Format::Svg) throw UsageError("invalid format: 'svg' is only available for classify and mountain");
    return f;
}

std::string join(const std::vector<std::string>& parts, const std::string& sep) {
    std::string s;
    for (std::size_t i = 0; i < parts.size(); ++i) s += (i ? sep : "") + parts[i];
    return s;
}

std::string block_str(const BlockPartition& b) {
    std::vector<std::string> parts;
    for (const auto& blk : b) {
        std::vector<std::string> e;
        for (auto i : blk) e.push_back(std::to_string(i));
        parts.push_back("[" + join(e, ",") + "]");
    }
    return "[" + join(parts, ",") + "]";
}

Context context_arg(const std::string& t) {
    std::vector<std::string> parts;
    std::stringstream ss(t);
    for (std::string p; std::getline(ss, p, ':');) parts.push_back(p);
    if (parts.size() != 3) throw UsageError("invalid context: '" + t + "' (expected kind:a:b)");
    if (parts[0] == "torus") return Context::thickened_torus(slope_arg(parts[1]), slope_arg(parts[2]));
    if (parts[0] == "upper") return Context::upper_solid_torus(slope_arg(parts[1]), slope_arg(parts[2]));
    if (parts[0] == "lower") return Context::lower_solid_torus(slope_arg(parts[1]), slope_arg(parts[2]));
    if (parts[0] == "lens") return Context::lens(int_arg(parts[1]), int_arg(parts[2]));
    throw UsageError("invalid context kind: '" + parts[0] + "'");
}

// "v0:s0 v1:s1 ... vn"; a vertex before an edge with no sign or ":u" marks
// that edge unsigned.
DecoratedPath signs_arg(const std::string& t) {
    std::istringstream in(t);
    std::vector<std::string> toks;
    for (std::string w; in >> w;) toks.push_back(w);
    if (toks.size() < 2) throw UsageError("invalid signs: '" + t + "' (need at least two vertices)");
    std::vector<Slope> v;
    std::vector<Sign> s;
    for (std::size_t i = 0; i < toks.size(); ++i) {
        auto colon = toks[i].rfind(':');
        std::string vert = colon == std::string::npos ? toks[i] : toks[i].substr(0, colon);
        std::string sg = colon == std::string::npos ? "" : toks[i].substr(colon + 1);
        v.push_back(slope_arg(vert));
        if (i + 1 == toks.size()) {
            if (!sg.empty()) throw UsageError("invalid signs: last vertex '" + toks[i] + "' takes no sign");
            break;
        }
        if (sg == "+") s.push_back(Sign::Plus);
        else if (sg == "-") s.push_back(Sign::Minus);
        else if (sg.empty() || sg == "u") s.push_back(Sign::Unsigned);
        else throw UsageError("invalid sign: '" + toks[i] + "'");
    }
    return DecoratedPath(FareyPath(std::move(v)), std::move(s));
}

Classification cached_classify(const LensSpace& lens, const KnotId& knot, int kmax, const std::string& dir) {
    if (dir.empty()) return classify(lens, knot, kmax);
    namespace fs = std::filesystem;
    std::string name = "L" + std::to_string(lens.p) + "_" + std::to_string(lens.q) + "_" +
                       (knot.reversed ? "m" : "") + (knot.core == Core::K0 ? "K0" : "K1") + "_k" +
                       std::to_string(kmax) + ".json";
    fs::path file = fs::path(dir) / name;
    if (fs::exists(file)) {
        std::ifstream in(file);
        return classification_from_json(json::parse(in));
    }
    Classification c = classify(lens, knot, kmax);
    fs::create_directories(dir);
    fs::path tmp = file;
    tmp += ".tmp";
    {
        std::ofstream o(tmp);
        o << to_json(c).dump(2) << "\n";
    }
    fs::rename(tmp, file);
    return c;
}

void print_classification(std::ostream& out, const Classification& c, Format f) {
    switch (f) {
        case Format::Table: out << to_table(c); break;
        case Format::Json: out << to_json(c).dump(2) << "\n"; break;
        case Format::Csv: out << to_csv(c); break;
        case Format::Svg: out << to_svg(c); break;
    }
}

void print_kv(std::ostream& out, Format f, const json& j) {
    if (f == Format::Json) {
        out << j.dump() << "\n";
        return;
    }
    std::vector<std::string> parts;
    for (auto& [k, v] : j.items()) parts.push_back(k + "=" + (v.is_string() ? v.get<std::string>() : v.dump()));
    out << join(parts, " ") << "\n";
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Exact classification of non-loose Legendrian rational unknots in lens spaces", "nonloose"};
    app.require_subcommand(1);
    app.set_help_all_flag("--help-all", "Show help for all subcommands");
    std::string fmt = default_format();
    std::function<void()> action;

    // classify / mountain
    std::string p_s, q_s, knot_s = "K0", cache_dir;
    int kmax = 5;
    for (const char* name : {"classify", "mountain"}) {
        bool svg = std::string(name) == "mountain";
        auto* sub = app.add_subcommand(name, svg ? "Plot the mountain ranges as SVG"
                                                 : "Classify non-loose Legendrian realisations of a rational unknot");
        sub->add_option("p", p_s, "lens space p")->required();
        sub->add_option("q", q_s, "lens space q")->required();
        sub->add_option("--knot", knot_s, "K0, K1, -K0 or -K1")->capture_default_str();
        sub->add_option("--kmax", kmax, "deepest tb level to enumerate (>= 3)")->capture_default_str();
        sub->add_option("--format", fmt, "table, json, csv or svg");
        sub->add_option("--cache-dir", cache_dir, "directory of cached JSON atlases");
        sub->callback([&, svg, sub] {
            action = [&, svg, sub] {
                std::string f = fmt;
                if (svg && sub->count("--format") == 0) f = "svg";
                Format format = format_arg(f);
                KnotId knot = token("knot", knot_s, [](const std::string& s) { return KnotId::parse(s); });
                LensSpace lens(int_arg(p_s), int_arg(q_s));
                print_classification(out, cached_classify(lens, knot, kmax, cache_dir), format);
            };
        });
    }

    // tight-count
    auto* tc = app.add_subcommand("tight-count", "Count tight structures: lens p q | torus s0 s1 | solid upper|lower r s");
    std::vector<std::string> tc_args;
    bool tc_list = false;
    tc->add_option("args", tc_args, "context arguments")->required()->expected(3, 4);
    tc->add_flag("--list", tc_list, "list the shuffle classes");
    tc->add_option("--format", fmt, "table or json");
    tc->callback([&] {
        action = [&] {
            Format f = plain_format(fmt);
            const auto& a = tc_args;
            std::optional<Context> ctx;
            if (a[0] == "lens" && a.size() == 3) ctx = Context::lens(int_arg(a[1]), int_arg(a[2]));
            else if (a[0] == "torus" && a.size() == 3) ctx = Context::thickened_torus(slope_arg(a[1]), slope_arg(a[2]));
            else if (a[0] == "solid" && a.size() == 4 && a[1] == "upper")
                ctx = Context::upper_solid_torus(slope_arg(a[2]), slope_arg(a[3]));
            else if (a[0] == "solid" && a.size() == 4 && a[1] == "lower")
                ctx = Context::lower_solid_torus(slope_arg(a[2]), slope_arg(a[3]));
            else throw UsageError("invalid tight-count context: '" + join(a, " ") + "'");
            if (!tc_list) {
                if (f == Format::Json) out << json({{"count", count_tight(*ctx)}}).dump() << "\n";
                else out << count_tight(*ctx) << "\n";
                return;
            }
            auto all = enumerate_tight(*ctx);
            if (f == Format::Json) {
                json arr = json::array();
                for (const auto& c : all) arr.push_back(to_json(c));
                out << arr.dump() << "\n";
            } else {
                for (const auto& c : all) out << c.representative().str() << "\n";
            }
        };
    });

    // farey
    auto* fa = app.add_subcommand("farey", "Farey graph and continued fraction utilities");
    std::string fa_op;
    std::vector<std::string> fa_args;
    fa->add_option("op", fa_op,
                   "sum|dot|edge|path|blocks|cf|value|successor|ancestor|between|iterated|minimal")
        ->required();
    fa->add_option("args", fa_args, "operands");
    fa->add_option("--format", fmt, "table or json");
    fa->callback([&] {
        action = [&] {
            Format f = plain_format(fmt);
            auto need = [&](std::size_t n) {
                if (fa_args.size() != n)
                    throw UsageError("farey " + fa_op + " takes " + std::to_string(n) + " operand(s), got " +
                                     std::to_string(fa_args.size()));
            };
            auto emit = [&](const json& j, const std::string& text) {
                out << (f == Format::Json ? j.dump() : text) << "\n";
            };
            auto bool_str = [](bool b) { return std::string(b ? "true" : "false"); };
            if (fa_op == "sum") {
                need(2);
                auto s = farey_sum(slope_arg(fa_args[0]), slope_arg(fa_args[1]));
                emit(s.str(), s.str());
            } else if (fa_op == "iterated") {
                need(3);
                auto s = iterated_sum(slope_arg(fa_args[0]), int_arg(fa_args[1]), slope_arg(fa_args[2]));
                emit(s.str(), s.str());
            } else if (fa_op == "dot") {
                need(2);
                Int d = dot(slope_arg(fa_args[0]), slope_arg(fa_args[1]));
                emit(d, std::to_string(d));
            } else if (fa_op == "edge") {
                need(2);
                bool e = has_edge(slope_arg(fa_args[0]), slope_arg(fa_args[1]));
                emit(e, bool_str(e));
            } else if (fa_op == "between") {
                need(3);
                bool b = cw_between(slope_arg(fa_args[0]), slope_arg(fa_args[1]), slope_arg(fa_args[2]));
                emit(b, bool_str(b));
            } else if (fa_op == "path" || fa_op == "minimal" || fa_op == "blocks") {
                // blocks also accepts an explicit vertex list
                if (fa_op != "blocks" || fa_args.size() < 2) need(2);
                std::vector<Slope> vs0;
                for (const auto& a : fa_args) vs0.push_back(slope_arg(a));
                auto p = vs0.size() == 2 ? minimal_path(vs0[0], vs0[1]) : FareyPath(vs0);
                if (fa_op == "blocks") {
                    auto b = block_structure(p);
                    emit(b, block_str(b));
                } else {
                    std::vector<std::string> vs;
                    for (const auto& v : p.vertices()) vs.push_back(v.str());
                    emit(vs, join(vs, " "));
                }
            } else if (fa_op == "cf") {
                need(1);
                auto cf = expand(slope_arg(fa_args[0]));
                emit(cf.coeffs(), cf.str());
            } else if (fa_op == "value") {
                // "[-3,-2]" may arrive split into its entries
                if (fa_args.empty()) need(1);
                auto cf = token("continued fraction", join(fa_args, ","),
                                [](const std::string& s) { return ContinuedFraction::parse(s); });
                auto s = value(cf);
                emit(s.str(), s.str());
            } else if (fa_op == "successor" || fa_op == "ancestor") {
                need(1);
                auto x = slope_arg(fa_args[0]);
                auto s = fa_op == "successor" ? successor(x) : ancestor(x);
                emit(s.str(), s.str());
            } else {
                throw UsageError("unknown farey operation: '" + fa_op + "'");
            }
        };
    });

    // path check
    auto* pa = app.add_subcommand("path", "Decorated path tools");
    auto* pc = pa->add_subcommand("check", "Decide tightness of a decorated path");
    pa->require_subcommand(1);
    std::string ctx_s, signs_s;
    pc->add_option("--context", ctx_s, "torus:s0:s1 | upper:r:s | lower:r:s | lens:p:q")->required();
    pc->add_option("--signs", signs_s, "e.g. \"-8/3:- -5/2:+ -2:- -1\"")->required();
    pc->add_option("--format", fmt, "table or json");
    pc->callback([&] {
        action = [&] {
            Format f = plain_format(fmt);
            Context ctx = context_arg(ctx_s);
            DecoratedPath d = signs_arg(signs_s);
            check_in_context(d, ctx);
            auto hits = tight_reductions(d);
            auto e = relative_euler(d);
            if (f == Format::Json) {
                json arr = json::array();
                for (const auto& h : hits) arr.push_back(to_json(h));
                out << json({{"tight", !hits.empty()}, {"relative_euler", {e.a, e.b}}, {"reductions", arr}}).dump()
                    << "\n";
            } else {
                out << (hits.empty() ? "not tight" : "tight") << "\n";
                out << "relative euler " << e.str() << "\n";
                for (const auto& h : hits) out << "reduces to " << h.representative().str() << "\n";
            }
        };
    });

    // cable
    auto* ca = app.add_subcommand("cable", "Cable invariants: tb|rot|positive|negative|stabs|seestab|sl|family");
    std::string ca_op, dividing_s;
    std::vector<std::string> ca_args;
    ca->add_option("op", ca_op, "operation")->required();
    ca->add_option("args", ca_args, "operands");
    ca->add_option("--dividing", dividing_s, "dividing slope q'/p' for a ruling curve (cable tb)");
    ca->add_option("--format", fmt, "table or json");
    ca->callback([&] {
        action = [&] {
            Format f = plain_format(fmt);
            auto need = [&](std::size_t n) {
                if (ca_args.size() != n)
                    throw UsageError("cable " + ca_op + " takes " + std::to_string(n) + " operand(s), got " +
                                     std::to_string(ca_args.size()));
            };
            auto I = [&](std::size_t i) { return int_arg(ca_args[i]); };
            if (ca_op == "tb") {
                need(2);
                CableSpec c(I(0), I(1));
                Int tb = dividing_s.empty() ? divide_cable_tb(c) : ruling_cable_tb(c, slope_arg(dividing_s));
                print_kv(out, f, {{"tb", tb}});
            } else if (ca_op == "rot") {
                need(4);
                print_kv(out, f, {{"rot", cable_rot(CableSpec(I(0), I(1)), I(2), I(3))}});
            } else if (ca_op == "positive") {
                need(4);
                auto L = positive_cable({I(0), I(1)}, CableSpec(I(2), I(3)));
                print_kv(out, f, {{"tb", L.tb}, {"rot", L.rot}, {"sl", self_linking(L)}});
            } else if (ca_op == "negative") {
                need(4);
                LegendrianInvariants L{I(0), I(1)};
                CableSpec c(I(2), I(3));
                print_kv(out, f, {{"tb", negative_cable_tb(L, c)}, {"stabilizations", stab_count_relation(L, c)}});
            } else if (ca_op == "stabs") {
                need(4);
                print_kv(out, f, {{"n", stab_count_relation({I(0), I(1)}, CableSpec(I(2), I(3)))}});
            } else if (ca_op == "seestab") {
                need(3);
                print_kv(out, f, {{"k", seestab_count(slope_arg(ca_args[0]), slope_arg(ca_args[1]), slope_arg(ca_args[2]))}});
            } else if (ca_op == "sl") {
                need(2);
                print_kv(out, f, {{"sl", self_linking({I(0), I(1)})}});
            } else if (ca_op == "family") {
                need(1);
                auto fam = transnonsimple_family(I(0));
                json j = {{"tb", fam.tb}, {"rot", fam.rot}, {"sl", fam.sl}, {"count", fam.count}};
                print_kv(out, f, j);
            } else {
                throw UsageError("unknown cable operation: '" + ca_op + "'");
            }
        };
    });

    // exists
    auto* ex = app.add_subcommand("exists", "Existence of non-loose representatives from topological facts");
    std::string flavor_s = "legendrian", ambient_s = "unspecified", tight_s;
    bool sphere = false, rational = false, unknot = false, unknot_s3 = false, ball = false;
    ex->add_option("--flavor", flavor_s, "legendrian or transverse")->capture_default_str();
    ex->add_option("--ambient", ambient_s, "S3|S1xS2|lens|seifert|RP3#RP3|Mn|unspecified")->capture_default_str();
    ex->add_option("--summand-tight", tight_s, "yes or no: the summand M' admits a tight structure");
    ex->add_flag("--sphere-once", sphere, "an essential sphere meets K transversely once");
    ex->add_flag("--rational-unknot", rational, "K is a rational unknot");
    ex->add_flag("--unknot", unknot, "K bounds a disk");
    ex->add_flag("--unknot-s3", unknot_s3, "K is the unknot in S^3");
    ex->add_flag("--in-ball", ball, "K lies in a ball");
    ex->add_option("--format", fmt, "table or json");
    ex->callback([&] {
        action = [&] {
            Format f = plain_format(fmt);
            TopologyFacts facts;
            facts.ambient = token("ambient", ambient_s, [](const std::string& s) { return parse_ambient(s); });
            Flavor flavor = token("flavor", flavor_s, [](const std::string& s) { return parse_flavor(s); });
            if (tight_s == "yes") facts.summand_admits_tight = true;
            else if (tight_s == "no") facts.summand_admits_tight = false;
            else if (!tight_s.empty()) throw UsageError("invalid --summand-tight: '" + tight_s + "'");
            facts.intersects_essential_sphere_once = sphere;
            facts.is_rational_unknot = rational || unknot_s3;
            facts.is_unknot = unknot || unknot_s3;
            facts.is_unknot_in_s3 = unknot_s3;
            facts.contained_in_ball = ball || unknot || unknot_s3;
            if (unknot_s3 && facts.ambient == Ambient::Unspecified) facts.ambient = Ambient::S3;
            Verdict v = admits_nonloose(facts, flavor);
            if (f == Format::Json) out << json({{"flavor", to_string(flavor)}, {"verdict", to_string(v)}}).dump() << "\n";
            else out << to_string(v) << "\n";
        };
    });

    try {
        std::vector<std::string> rev(args.rbegin(), args.rend());
        app.parse(rev);
    } catch (const CLI::Success& e) {
        return app.exit(e, out, err);
    } catch (const CLI::ParseError& e) {
        err << "nonloose: " << e.what() << "\n";
        return 2;
    }
    try {
        if (action) action();
        return 0;
    } catch (const UsageError& e) {
        err << "nonloose: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        err << "nonloose: " << e.what() << "\n";
        return 1;
    }
}

}  // namespace nonloose
