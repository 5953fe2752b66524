#include "nonloose/format.hpp"

#include <algorithm>
#include <cstdio>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>

namespace nonloose {

json to_json(const Slope& s) { return s.str(); }

json to_json(const ShuffleClass& c) {
    json path = json::array();
    for (const auto& v : c.path.vertices()) path.push_back(v.str());
    return {{"path", path}, {"minus", c.minus}};
}

json to_json(const NonLooseClass& c) {
    return {{"level", c.level},
            {"slope", c.dividing_slope.str()},
            {"tb", to_string(c.tb)},
            {"rot", to_string(c.rot)},
            {"euler", c.euler},
            {"disk_euler", c.disk_euler},
            {"complement", to_json(c.complement)}};
}

namespace {

json member_json(const RangeMember& m) {
    json j = {{"id", m.id}, {"arm", to_string(m.arm)}, {"height", m.height}};
    json cls = to_json(m.cls);
    for (auto& [k, v] : cls.items()) j[k] = v;
    j["stabilize"] = {{"+", m.plus_target}, {"-", m.minus_target}};
    return j;
}

Arm parse_arm(const std::string& s) {
    if (s == "base") return Arm::Base;
    if (s == "plus") return Arm::Plus;
    if (s == "minus") return Arm::Minus;
    throw std::invalid_argument("unknown arm '" + s + "'");
}

RangeMember member_from_json(const json& j, const LensSpace& lens, const KnotId& knot) {
    Slope s = Slope::parse(j.at("slope").get<std::string>());
    NonLooseClass c{lens,
                    knot,
                    j.at("level").get<int>(),
                    s,
                    shuffle_class_from_json(j.at("complement"), Context::upper_solid_torus(Slope::integer(0), s)),
                    parse_rational(j.at("tb").get<std::string>()),
                    parse_rational(j.at("rot").get<std::string>()),
                    j.at("euler").get<Int>(),
                    j.at("disk_euler").get<Int>()};
    return {std::move(c),
            j.at("id").get<std::string>(),
            parse_arm(j.at("arm").get<std::string>()),
            j.at("height").get<int>(),
            j.at("stabilize").at("+").get<std::string>(),
            j.at("stabilize").at("-").get<std::string>()};
}

}  // namespace

json to_json(const MountainRange& r) {
    json members = json::array();
    for (const auto& m : r.members) members.push_back(member_json(m));
    return {{"kind", to_string(r.kind)},
            {"base", json::array({to_string(r.base_rot), to_string(r.base_tb)})},
            {"euler", r.euler},
            {"members", members}};
}

json to_json(const Classification& c) {
    json ranges = json::array(), unresolved = json::array();
    for (const auto& r : c.ranges) ranges.push_back(to_json(r));
    for (const auto& m : c.unresolved) unresolved.push_back(member_json(m));
    return {{"lens", {{"p", c.lens.p}, {"q", c.lens.q}}},
            {"knot", c.knot.str()},
            {"kmax", c.k_max},
            {"ranges", ranges},
            {"unresolved", unresolved}};
}

ShuffleClass shuffle_class_from_json(const json& j, const Context& ctx) {
    std::vector<Slope> v;
    for (const auto& s : j.at("path")) v.push_back(Slope::parse(s.get<std::string>()));
    return shuffle_class(ctx, FareyPath(std::move(v)), j.at("minus").get<std::vector<int>>());
}

Classification classification_from_json(const json& j) {
    LensSpace lens(j.at("lens").at("p").get<Int>(), j.at("lens").at("q").get<Int>());
    KnotId knot = KnotId::parse(j.at("knot").get<std::string>());
    Classification c{lens, knot, j.at("kmax").get<int>(), {}, {}};
    for (const auto& r : j.at("ranges")) {
        MountainRange m;
        m.kind = parse_range_kind(r.at("kind").get<std::string>());
        m.base_rot = parse_rational(r.at("base").at(0).get<std::string>());
        m.base_tb = parse_rational(r.at("base").at(1).get<std::string>());
        m.euler = r.at("euler").get<Int>();
        for (const auto& x : r.at("members")) m.members.push_back(member_from_json(x, lens, knot));
        c.ranges.push_back(std::move(m));
    }
    for (const auto& x : j.at("unresolved")) c.unresolved.push_back(member_from_json(x, lens, knot));
    return c;
}

std::string to_csv(const Classification& c) {
    std::string out = "kind,rot_base,tb_base,euler\n";
    for (const auto& r : c.ranges)
        out += to_string(r.kind) + "," + to_string(r.base_rot) + "," + to_string(r.base_tb) + "," +
               std::to_string(r.euler) + "\n";
    return out;
}

std::string to_table(const Classification& c) {
    std::vector<std::vector<std::string>> rows{{"kind", "rot", "tb", "euler", "members"}};
    for (const auto& r : c.ranges)
        rows.push_back({to_string(r.kind), to_string(r.base_rot), to_string(r.base_tb), std::to_string(r.euler),
                        std::to_string(r.members.size())});
    std::vector<std::size_t> w(rows[0].size(), 0);
    for (const auto& row : rows)
        for (std::size_t i = 0; i < row.size(); ++i) w[i] = std::max(w[i], row[i].size());
    std::ostringstream os;
    os << c.knot.str() << " in " << c.lens.str() << ", levels 0.." << c.k_max << ": " << c.ranges.size()
       << " mountain ranges\n";
    for (const auto& row : rows) {
        for (std::size_t i = 0; i < row.size(); ++i) {
            os << row[i];
            if (i + 1 < row.size()) os << std::string(w[i] - row[i].size() + 2, ' ');
        }
        os << "\n";
    }
    if (!c.unresolved.empty()) {
        os << "unresolved at this depth:\n";
        for (const auto& m : c.unresolved) os << "  " << m.id << " " << m.cls.str() << "\n";
    }
    return os.str();
}

namespace {

std::string num(double x) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.2f", x);
    return buf;
}

double as_double(const Rational& r) {
    return static_cast<double>(r.numerator()) / static_cast<double>(r.denominator());
}

}  // namespace

std::string to_svg(const Classification& c) {
    const double panel_w = 180, top = 60, plot_h = 260, left = 70, gap = 20, bottom = 50;
    Rational tb_lo(0), tb_hi(1);
    bool first = true;
    for (const auto& r : c.ranges)
        for (const auto& m : r.members) {
            if (first || m.cls.tb < tb_lo) tb_lo = m.cls.tb;
            if (first || m.cls.tb > tb_hi) tb_hi = m.cls.tb;
            first = false;
        }
    if (tb_hi == tb_lo) tb_hi = tb_lo + 1;
    double lo = as_double(tb_lo), hi = as_double(tb_hi);
    auto y_of = [&](const Rational& tb) { return top + plot_h - (as_double(tb) - lo) / (hi - lo) * plot_h; };

    std::size_t n = std::max<std::size_t>(c.ranges.size(), 1);
    double width = left + n * (panel_w + gap), height = top + plot_h + bottom;

    std::ostringstream os;
    os << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
    os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << num(width) << "\" height=\"" << num(height)
       << "\" viewBox=\"0 0 " << num(width) << " " << num(height) << "\" font-family=\"sans-serif\" font-size=\"11\">\n";
    os << "<title>" << c.knot.str() << " in " << c.lens.str() << "</title>\n";
    os << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
    os << "<text x=\"" << num(left) << "\" y=\"20\" font-size=\"14\">Non-loose " << c.knot.str() << " in "
       << c.lens.str() << "</text>\n";

    // tb axis, one tick per distinct tb value
    std::set<Rational> tbs;
    for (const auto& r : c.ranges)
        for (const auto& m : r.members) tbs.insert(m.cls.tb);
    os << "<g class=\"tb-axis\" stroke=\"#888\">\n";
    os << "<line x1=\"" << num(left - 10) << "\" y1=\"" << num(top) << "\" x2=\"" << num(left - 10) << "\" y2=\""
       << num(top + plot_h) << "\"/>\n";
    for (const auto& t : tbs)
        os << "<text x=\"" << num(left - 14) << "\" y=\"" << num(y_of(t) + 4) << "\" text-anchor=\"end\" stroke=\"none\">"
           << to_string(t) << "</text>\n";
    os << "<text x=\"14\" y=\"" << num(top + plot_h / 2) << "\" stroke=\"none\" transform=\"rotate(-90 14 "
       << num(top + plot_h / 2) << ")\">tb</text>\n";
    os << "</g>\n";

    for (std::size_t i = 0; i < c.ranges.size(); ++i) {
        const auto& r = c.ranges[i];
        double x0 = left + i * (panel_w + gap);
        int span = 1;
        for (const auto& m : r.members) span = std::max(span, m.height);
        auto x_of = [&](const Rational& rot) {
            return x0 + panel_w / 2 + as_double(rot - r.base_rot) / span * (panel_w / 2 - 12);
        };
        std::map<std::string, const RangeMember*> by_id;
        for (const auto& m : r.members) by_id[m.id] = &m;

        os << "<g class=\"range\" data-kind=\"" << to_string(r.kind) << "\">\n";
        os << "<rect x=\"" << num(x0) << "\" y=\"" << num(top - 10) << "\" width=\"" << num(panel_w) << "\" height=\""
           << num(plot_h + 20) << "\" fill=\"none\" stroke=\"#ddd\"/>\n";
        for (const auto& m : r.members)
            for (const auto* t : {&m.plus_target, &m.minus_target}) {
                auto it = by_id.find(*t);
                if (it == by_id.end()) continue;
                os << "<line class=\"stabilization\" x1=\"" << num(x_of(m.cls.rot)) << "\" y1=\"" << num(y_of(m.cls.tb))
                   << "\" x2=\"" << num(x_of(it->second->cls.rot)) << "\" y2=\"" << num(y_of(it->second->cls.tb))
                   << "\" stroke=\"#555\"/>\n";
            }
        for (const auto& m : r.members)
            os << "<circle class=\"member\" data-id=\"" << m.id << "\" data-rot=\"" << to_string(m.cls.rot)
               << "\" data-tb=\"" << to_string(m.cls.tb) << "\" cx=\"" << num(x_of(m.cls.rot)) << "\" cy=\""
               << num(y_of(m.cls.tb)) << "\" r=\"4\" fill=\"" << (m.arm == Arm::Base ? "#c00" : "black") << "\"/>\n";
        os << "<text x=\"" << num(x0 + panel_w / 2) << "\" y=\"" << num(top + plot_h + 24)
           << "\" text-anchor=\"middle\">" << to_string(r.kind) << " (" << to_string(r.base_rot) << ", "
           << to_string(r.base_tb) << ")</text>\n";
        os << "<text x=\"" << num(x0 + panel_w / 2) << "\" y=\"" << num(top + plot_h + 40)
           << "\" text-anchor=\"middle\">e = " << r.euler << "</text>\n";
        os << "</g>\n";
    }
    os << "<text x=\"" << num(left + (width - left) / 2) << "\" y=\"" << num(height - 2)
       << "\" text-anchor=\"middle\">rot</text>\n";
    os << "</svg>\n";
    return os.str();
}

}  // namespace nonloose
