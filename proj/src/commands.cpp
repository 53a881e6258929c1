#include "sconv/commands.hpp"

#include <map>

#include "sconv/errors.hpp"

namespace sconv::commands {

using io::json;

namespace {

json rays_json(std::span<const RatVec> rays) { return io::to_json(rays); }

std::vector<double> float_vec(const json& j) {
    if (!j.is_array()) throw ParseError("expected an array of numbers, got " + j.dump());
    std::vector<double> out;
    for (const auto& x : j) {
        if (x.is_number())
            out.push_back(x.get<double>());
        else if (x.is_string())
            out.push_back(parse_rat(x.get<std::string>()).get_d());
        else
            throw ParseError("expected a number, got " + x.dump());
    }
    return out;
}

const json& field(const json& in, const char* name) {
    if (!in.is_object() || !in.contains(name)) throw ParseError(std::string("input is missing \"") + name + "\"");
    return in[name];
}

// Marks a certificate replayable after checking it independently.
json certify(json doc) {
    const auto v = io::replay_document(doc);
    if (!v) throw InternalInconsistency("emitted certificate failed replay: " + v.reason);
    doc["replayable"] = true;
    return doc;
}

json base(const char* cmd, const io::SetDescriptor& d) {
    return {{"command", cmd}, {"gauge", io::to_json(d.gauge)}, {"rays", rays_json(d.rays)}};
}

json cmd_project(const json& in, const Options& o) {
    const auto& pts = field(in, "points");
    if (!pts.is_array() || pts.empty()) throw ParseError("\"points\" must be a nonempty array");
    std::vector<std::vector<double>> xs;
    for (const auto& p : pts) xs.push_back(float_vec(p));
    const Gauge g = io::gauge_from_json(in.contains("gauge") ? in["gauge"] : json("euclidean"), xs.front().size());
    json out = json::array();
    for (const auto& x : xs) {
        auto p = project(g, std::span<const double>(x));
        out.push_back(p ? io::present(p->coords(), o.float_digits) : json(nullptr));
    }
    return certify({{"command", "project"}, {"gauge", io::to_json(g)}, {"points", out}, {"float_digits", o.float_digits}});
}

json cmd_scomb(const json& in, const Options& o) {
    const auto weights = float_vec(field(in, "weights"));
    std::vector<std::vector<double>> xs;
    const bool from_rays = in.contains("rays");
    for (const auto& p : from_rays ? in["rays"] : field(in, "points")) xs.push_back(float_vec(p));
    if (xs.empty()) throw ArgumentError("no points to combine");
    const Gauge g = io::gauge_from_json(in.contains("gauge") ? in["gauge"] : json("euclidean"), xs.front().size());
    std::vector<SpherePoint> pts;
    for (auto& x : xs) {
        if (from_rays) {
            auto p = project(g, std::span<const double>(x));
            if (!p) throw ArgumentError("cannot project the origin onto the sphere");
            pts.push_back(std::move(*p));
        } else {
            pts.push_back(SpherePoint::on(g, std::move(x)));
        }
    }
    const auto r = scomb(g, pts, weights);
    return certify({{"command", "scomb"},
                    {"gauge", io::to_json(g)},
                    {"weights", io::present(weights, o.float_digits)},
                    {"result", io::present(r.coords(), o.float_digits)},
                    {"float_digits", o.float_digits}});
}

json cmd_hull_addible(const json& in, const Options&) {
    const auto rays = io::vecs_from_json(field(in, "rays"));
    const auto h = hull_addible(rays);
    json doc{{"command", "hull-addible"}, {"rays", rays_json(rays)}, {"hull_addible", h.hull_addible}};
    if (h.hull_addible)
        doc["u"] = io::to_json(*h.u);
    else
        doc["lambda"] = io::to_json(std::span<const Rat>(*h.lambda));
    return certify(doc);
}

json cmd_sco_member(const json& in, const Options& o) {
    const auto d = io::set_from_json(in);
    const auto x = io::vec_from_json(field(in, "x"));
    const auto s = make_set(d.gauge, d.rays);
    json doc = base("sco-member", d);
    doc["x"] = io::to_json(x);
    if (auto c = sco_membership(s, x)) {
        doc["member"] = true;
        doc["coefficients"] = io::to_json(std::span<const Rat>(*c));
        doc["presentation"] = {{"point", io::present(project(s.gauge(), x)->coords(), o.float_digits)}};
    } else {
        doc["member"] = false;
        doc["separator"] = io::to_json(*farkas_separator(s.cone(), x));
    }
    return certify(doc);
}

json cmd_separate(const json& in, const Options& o) {
    const auto d = io::set_from_json(in);
    const bool closed = o.closed || in.value("closed", false);
    const auto s = make_set(d.gauge, d.rays);
    const auto c = separating_hemisphere(s, closed);
    json doc = base("separate", d);
    doc["closed"] = closed;
    doc["u"] = io::to_json(c.u);
    doc["alpha"] = io::to_json(c.alpha);
    doc["presentation"] = {{"normalized_u", io::present(c.normalized_u, o.float_digits)}};
    return certify(doc);
}

json cmd_radon(const json& in, const Options& o) {
    const auto d = io::set_from_json(in);
    const auto c = radon_partition(d.gauge, d.rays);
    json doc = base("radon", d);
    doc["partition"] = json::array({json(c.part1), json(c.part2)});
    doc["witness"] = io::to_json(c.witness);
    doc["coefficients"] =
        json::array({io::to_json(std::span<const Rat>(c.coeffs1)), io::to_json(std::span<const Rat>(c.coeffs2))});
    doc["presentation"] = {{"witness_point", io::present(project(d.gauge, c.witness)->coords(), o.float_digits)}};
    return certify(doc);
}

json cmd_helly(const json& in, const Options& o) {
    const auto& sets_in = field(in, "sets");
    if (!sets_in.is_array() || sets_in.empty()) throw ParseError("\"sets\" must be a nonempty array");
    std::vector<std::vector<RatVec>> ray_lists;
    for (const auto& s : sets_in) ray_lists.push_back(io::vecs_from_json(s.is_object() ? s.at("rays") : s));
    if (ray_lists.front().empty()) throw ArgumentError("empty set in family");
    const Gauge g = io::gauge_from_json(in.contains("gauge") ? in["gauge"] : json("euclidean"),
                                        ray_lists.front().front().size());
    std::vector<SphericalSet> sets;
    for (auto& r : ray_lists) sets.push_back(make_set(g, r));
    const std::size_t samples = in.value("samples", o.samples);
    const auto rep = helly_verify(sets, samples, o.seed);

    json sets_out = json::array();
    for (const auto& s : sets) sets_out.push_back(rays_json(s.rays()));
    json inter = json::array();
    for (const auto& s : rep.intersections)
        inter.push_back({{"members", s.members}, {"witness", s.witness ? io::to_json(*s.witness) : json(nullptr)}});
    json cov = json::array();
    for (const auto& s : rep.coverages) cov.push_back({{"members", s.members}, {"coverage", io::to_json(s.coverage)}});

    json doc{{"command", "helly"},
             {"gauge", io::to_json(g)},
             {"sets", sets_out},
             {"samples", samples},
             {"seed", o.seed},
             {"intersections", inter},
             {"first_failing_intersection",
              rep.first_failing_intersection ? json(*rep.first_failing_intersection) : json(nullptr)},
             {"coverages", cov},
             {"covering_subfamilies", rep.covering_subfamilies},
             {"intersection_hypothesis", rep.intersection_hypothesis},
             {"union_hypothesis", rep.union_hypothesis},
             {"hypotheses_hold", rep.hypotheses_hold},
             {"common", rep.common ? io::to_json(*rep.common) : json(nullptr)},
             {"negated_separators", rays_json(rep.negated_separators)}};
    if (rep.common)
        doc["presentation"] = {{"common_point", io::present(project(g, rep.common->x)->coords(), o.float_digits)}};
    return certify(doc);
}

json cmd_caratheodory(const json& in, const Options& o) {
    const auto d = io::set_from_json(in);
    const auto x = io::vec_from_json(field(in, "x"));
    const auto s = make_set(d.gauge, d.rays);
    const auto r = spherical_caratheodory(s, x);
    json pts = json::array();
    for (const auto& p : r.points) pts.push_back(io::present(p.coords(), o.float_digits));
    json doc = base("caratheodory", d);
    doc["x"] = io::to_json(x);
    doc["support"] = r.indices;
    doc["coefficients"] = io::to_json(std::span<const Rat>(r.coeffs));
    doc["presentation"] = {{"points", pts}, {"weights", io::present(r.weights, o.float_digits)}};
    return certify(doc);
}

json cmd_extreme(const json& in, const Options& o) {
    const auto d = io::set_from_json(in);
    const auto s = make_set(d.gauge, d.rays);
    const auto e = sext(s);
    json pts = json::array();
    for (const auto& p : e.points) pts.push_back(io::present(p.coords(), o.float_digits));
    json doc = base("extreme", d);
    doc["extreme"] = e.certificate.extreme;
    doc["extreme_rays"] = rays_json(e.rays);
    doc["certificate"] = io::to_json(e.certificate);
    doc["presentation"] = {{"points", pts}};
    return certify(doc);
}

json cmd_minkowski(const json& in, const Options&) {
    const auto d = io::set_from_json(in);
    const auto s = make_set(d.gauge, d.rays);
    const auto c = minkowski_check(s);
    json coeffs = json::array();
    for (const auto& g : c.generator_coeffs) coeffs.push_back(io::to_json(std::span<const Rat>(g)));
    json doc = base("minkowski", d);
    doc["extreme"] = c.extreme;
    doc["generator_coefficients"] = coeffs;
    doc["holds"] = true;
    doc["sext_nonempty"] = !c.extreme.empty();
    return certify(doc);
}

json cmd_qi(const json& in, const Options&) {
    const auto us = io::vecs_from_json(field(in, "us"));
    const auto x = io::vec_from_json(field(in, "x"));
    std::vector<Rat> lb;
    if (in.contains("lambda_bar")) {
        lb = io::rats_from_json(in["lambda_bar"]);
    } else {
        auto b = barycentric_origin(us);
        if (!b) throw PreconditionError("the origin is not interior to the simplex of us");
        lb = std::move(*b);
    }
    const auto q = qi_decomposition(us, lb, x);
    return certify({{"command", "qi-decompose"},
                    {"us", rays_json(us)},
                    {"lambda_bar", io::to_json(std::span<const Rat>(lb))},
                    {"x", io::to_json(x)},
                    {"j", q.j},
                    {"mu", io::to_json(std::span<const Rat>(q.mu))}});
}

Result cmd_verify(const json& in, const Options& o) {
    if (o.replay) {
        const auto v = io::replay_document(in);
        json doc{{"command", "verify"}, {"mode", "replay"}, {"valid", v.ok}};
        doc["certificate"] = in.is_object() && in.contains("command") ? in["command"] : json(nullptr);
        if (!v.ok) doc["reason"] = v.reason;
        return {doc, v.ok ? 0 : 1};
    }
    if (o.suite == "prop1") {
        const auto d = io::set_from_json(in);
        const auto s = make_set(d.gauge, d.rays);
        const auto rep =
            prop1_suite(s, o.samples, o.seed, o.require_star ? ConvexCheck::Require : ConvexCheck::Auto);
        json doc{{"command", "verify"},
                 {"suite", "prop1"},
                 {"samples", rep.samples},
                 {"seed", o.seed},
                 {"passed", rep.passed},
                 {"checks", {{"sum", rep.checks_sum}, {"hull", rep.checks_hull}, {"star", rep.checks_star}}},
                 {"star_checked", rep.star_checked},
                 {"failures", rep.failures}};
        return {doc, rep.passed ? 0 : 1};
    }
    throw ArgumentError("verify needs --replay or --suite prop1");
}

}  // namespace

const std::vector<std::string>& names() {
    static const std::vector<std::string> n{"project",      "scomb",   "hull-addible", "sco-member",
                                            "separate",     "radon",   "helly",        "caratheodory",
                                            "extreme",      "minkowski", "qi-decompose", "verify"};
    return n;
}

Result run(const std::string& command, const json& input, const Options& opts) {
    using Fn = json (*)(const json&, const Options&);
    static const std::map<std::string, Fn> table{
        {"project", cmd_project},     {"scomb", cmd_scomb},     {"hull-addible", cmd_hull_addible},
        {"sco-member", cmd_sco_member}, {"separate", cmd_separate}, {"radon", cmd_radon},
        {"helly", cmd_helly},         {"caratheodory", cmd_caratheodory}, {"extreme", cmd_extreme},
        {"minkowski", cmd_minkowski}, {"qi-decompose", cmd_qi}};
    try {
        if (command == "verify") return cmd_verify(input, opts);
        auto it = table.find(command);
        if (it == table.end()) throw ArgumentError("unknown command \"" + command + "\"");
        return {it->second(input, opts), 0};
    } catch (const json::exception& e) {
        throw ParseError(std::string("malformed input: ") + e.what());
    }
}

json error_document(const std::string& command, const Error& e) {
    json err{{"kind", e.kind()}, {"message", e.what()}};
    if (const auto* nh = dynamic_cast<const NotHullAddibleError*>(&e)) {
        err["kind"] = "not-hull-addible";
        err["lambda"] = io::to_json(std::span<const Rat>(nh->lambda()));
    }
    return {{"command", command}, {"error", err}};
}

}  // namespace sconv::commands
