#include "sconv/io.hpp"

#include <cmath>
#include <cstdio>
#include <cstdlib>

#include "sconv/errors.hpp"

namespace sconv::io {

json to_json(const Rat& r) { return to_string(r); }

json to_json(const RatVec& v) {
    json a = json::array();
    for (const auto& x : v) a.push_back(to_string(x));
    return a;
}

json to_json(std::span<const Rat> v) {
    json a = json::array();
    for (const auto& x : v) a.push_back(to_string(x));
    return a;
}

json to_json(std::span<const RatVec> vs) {
    json a = json::array();
    for (const auto& v : vs) a.push_back(to_json(v));
    return a;
}

Rat rat_from_json(const json& j) {
    if (j.is_string()) return parse_rat(j.get<std::string>());
    if (j.is_number_integer()) return parse_rat(j.dump());
    throw ParseError("expected a rational string or an integer, got " + j.dump());
}

std::vector<Rat> rats_from_json(const json& j) {
    if (!j.is_array()) throw ParseError("expected an array of rationals, got " + j.dump());
    std::vector<Rat> out;
    for (const auto& x : j) out.push_back(rat_from_json(x));
    return out;
}

RatVec vec_from_json(const json& j) { return RatVec(rats_from_json(j)); }

std::vector<RatVec> vecs_from_json(const json& j) {
    if (!j.is_array()) throw ParseError("expected an array of vectors, got " + j.dump());
    std::vector<RatVec> out;
    for (const auto& v : j) out.push_back(vec_from_json(v));
    return out;
}

std::vector<std::size_t> indices_from_json(const json& j) {
    if (!j.is_array()) throw ParseError("expected an array of indices");
    std::vector<std::size_t> out;
    for (const auto& x : j) {
        if (!x.is_number_unsigned()) throw ParseError("expected a nonnegative index, got " + x.dump());
        out.push_back(x.get<std::size_t>());
    }
    return out;
}

double present(double v, int digits) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.*g", digits, v);
    const double r = std::strtod(buf, nullptr);
    return r == 0.0 ? 0.0 : r;
}

json present(std::span<const double> v, int digits) {
    json a = json::array();
    for (double x : v) a.push_back(present(x, digits));
    return a;
}

json to_json(const Gauge& g) {
    json j{{"kind", to_string(g.kind())}, {"dim", g.dim()}};
    if (g.kind() == GaugeKind::PNorm || g.kind() == GaugeKind::QuasiNorm) j["p"] = g.p();
    if (g.kind() == GaugeKind::Polyhedral) j["functionals"] = to_json(std::span<const RatVec>(g.functionals()));
    return j;
}

Gauge gauge_from_json(const json& j, std::optional<std::size_t> dim_hint) {
    std::string kind;
    std::optional<std::size_t> dim = dim_hint;
    if (j.is_string()) {
        kind = j.get<std::string>();
    } else if (j.is_object()) {
        if (!j.contains("kind") || !j["kind"].is_string()) throw ParseError("gauge descriptor needs a \"kind\" string");
        kind = j["kind"].get<std::string>();
        if (j.contains("dim")) {
            if (!j["dim"].is_number_unsigned()) throw ParseError("gauge \"dim\" must be a nonnegative integer");
            const auto d = j["dim"].get<std::size_t>();
            if (dim_hint && *dim_hint != d)
                throw DimensionError("gauge dimension " + std::to_string(d) + " differs from data dimension " +
                                     std::to_string(*dim_hint));
            dim = d;
        }
    } else {
        throw ParseError("gauge must be a kind string or a descriptor object");
    }

    auto need_p = [&]() {
        if (!j.is_object() || !j.contains("p") || !(j["p"].is_number() || j["p"].is_string()))
            throw ParseError("gauge kind \"" + kind + "\" needs a numeric \"p\"");
        return j["p"].is_number() ? j["p"].get<double>() : parse_rat(j["p"].get<std::string>()).get_d();
    };
    if (kind == "polyhedral") {
        if (!j.is_object() || !j.contains("functionals")) throw ParseError("polyhedral gauge needs \"functionals\"");
        auto fs = vecs_from_json(j["functionals"]);
        if (!fs.empty() && dim && fs.front().size() != *dim) throw DimensionError("functionals differ from gauge dimension");
        return Gauge::polyhedral(std::move(fs));
    }
    if (!dim) throw ParseError("gauge dimension is missing and cannot be inferred");
    if (kind == "euclidean") return Gauge::euclidean(*dim);
    if (kind == "pnorm") return Gauge::pnorm(*dim, need_p());
    if (kind == "quasinorm") return Gauge::quasinorm(*dim, need_p());
    throw ParseError("unknown gauge kind \"" + kind + "\"");
}

json to_json(const ConeVRep& k) {
    return {{"dim", k.dim()}, {"generators", to_json(std::span<const RatVec>(k.generators()))}};
}

ConeVRep cone_from_json(const json& j) {
    if (!j.is_object() || !j.contains("generators")) throw ParseError("cone descriptor needs \"generators\"");
    auto gens = vecs_from_json(j["generators"]);
    if (j.contains("dim") && !gens.empty() && j["dim"].get<std::size_t>() != gens.front().size())
        throw DimensionError("cone \"dim\" differs from generator length");
    return ConeVRep(std::move(gens));
}

SetDescriptor set_from_json(const json& j) {
    if (!j.is_object() || !j.contains("rays")) throw ParseError("set descriptor needs \"rays\"");
    auto rays = vecs_from_json(j["rays"]);
    if (rays.empty()) throw ArgumentError("set descriptor has no rays");
    const std::size_t n = common_dimension(rays);
    Gauge g = j.contains("gauge") ? gauge_from_json(j["gauge"], n) : Gauge::euclidean(n);
    return {std::move(g), std::move(rays)};
}

json to_json(const IntersectionWitness& w) {
    json c = json::array();
    for (const auto& v : w.coeffs) c.push_back(to_json(std::span<const Rat>(v)));
    return {{"x", to_json(w.x)}, {"coefficients", c}};
}

IntersectionWitness intersection_from_json(const json& j) {
    IntersectionWitness w;
    w.x = vec_from_json(j.at("x"));
    for (const auto& c : j.at("coefficients")) w.coeffs.push_back(rats_from_json(c));
    return w;
}

json to_json(const CoverageResult& c) {
    json j{{"verdict", to_string(c.verdict)}, {"exact", c.exact}, {"candidates_checked", c.candidates_checked}};
    j["witness"] = c.witness ? to_json(*c.witness) : json(nullptr);
    j["separators"] = to_json(std::span<const RatVec>(c.separators));
    return j;
}

CoverageResult coverage_from_json(const json& j) {
    CoverageResult c{};
    const auto v = j.at("verdict").get<std::string>();
    if (v == "not-covered")
        c.verdict = Coverage::NotCovered;
    else if (v == "covered-not-falsified")
        c.verdict = Coverage::CoveredNotFalsified;
    else
        throw ParseError("unknown coverage verdict \"" + v + "\"");
    c.exact = j.at("exact").get<bool>();
    if (!j.at("witness").is_null()) c.witness = vec_from_json(j["witness"]);
    c.separators = vecs_from_json(j.at("separators"));
    c.candidates_checked = j.value("candidates_checked", std::size_t{0});
    return c;
}

json to_json(const ExtremeRayCertificate& c) {
    json red = json::array();
    for (const auto& r : c.redundant) {
        json e{{"index", r.index}};
        if (r.same_ray_as)
            e["same_ray_as"] = *r.same_ray_as;
        else
            e["coefficients"] = to_json(std::span<const Rat>(r.coeffs));
        red.push_back(e);
    }
    return {{"extreme", c.extreme}, {"separators", to_json(std::span<const RatVec>(c.separators))}, {"redundant", red}};
}

ExtremeRayCertificate extreme_from_json(const json& j) {
    ExtremeRayCertificate c;
    c.extreme = indices_from_json(j.at("extreme"));
    c.separators = vecs_from_json(j.at("separators"));
    for (const auto& e : j.at("redundant")) {
        ExtremeRayCertificate::Redundant r{e.at("index").get<std::size_t>(), std::nullopt, {}};
        if (e.contains("same_ray_as"))
            r.same_ray_as = e["same_ray_as"].get<std::size_t>();
        else
            r.coeffs = rats_from_json(e.at("coefficients"));
        c.redundant.push_back(std::move(r));
    }
    return c;
}

namespace {

double float_tolerance(const json& doc) {
    const int digits = doc.value("float_digits", 12);
    return std::max(1e-9, 10.0 * std::pow(10.0, -digits));
}

replay::Verdict replay_on_sphere(const Gauge& g, const json& points, double tol) {
    for (const auto& p : points) {
        const auto c = p.get<std::vector<double>>();
        if (c.size() != g.dim()) return replay::Verdict::fail("sphere point of the wrong dimension");
        if (std::abs(g.evaluate(c) - 1.0) > tol) return replay::Verdict::fail("point is off the sphere");
    }
    return replay::Verdict::pass();
}

std::vector<ConeVRep> cones_from_sets(const json& sets) {
    std::vector<ConeVRep> cones;
    for (const auto& s : sets) cones.emplace_back(vecs_from_json(s.is_object() ? s.at("rays") : s));
    return cones;
}

}  // namespace

replay::Verdict replay_document(const json& doc) {
    using replay::Verdict;
    if (!doc.is_object() || !doc.contains("command")) return Verdict::fail("document has no \"command\" field");
    const auto cmd = doc["command"].get<std::string>();

    if (cmd == "hull-addible") {
        const auto rays = vecs_from_json(doc.at("rays"));
        HullAddibility h{doc.at("hull_addible").get<bool>(), std::nullopt, std::nullopt};
        if (h.hull_addible)
            h.u = vec_from_json(doc.at("u"));
        else
            h.lambda = rats_from_json(doc.at("lambda"));
        return replay::hull_addibility(rays, h);
    }
    if (cmd == "sco-member") {
        const auto rays = vecs_from_json(doc.at("rays"));
        const auto x = vec_from_json(doc.at("x"));
        if (x.is_zero()) return Verdict::fail("the origin is not on the sphere");
        if (doc.at("member").get<bool>()) return replay::membership(rays, x, rats_from_json(doc.at("coefficients")));
        return replay::non_membership(rays, x, vec_from_json(doc.at("separator")));
    }
    if (cmd == "separate") {
        SeparationCertificate c;
        c.u = vec_from_json(doc.at("u"));
        c.alpha = rat_from_json(doc.at("alpha"));
        return replay::separation(vecs_from_json(doc.at("rays")), c);
    }
    if (cmd == "radon") {
        RadonCertificate c;
        const auto& part = doc.at("partition");
        const auto& coeffs = doc.at("coefficients");
        c.part1 = indices_from_json(part.at(0));
        c.part2 = indices_from_json(part.at(1));
        c.coeffs1 = rats_from_json(coeffs.at(0));
        c.coeffs2 = rats_from_json(coeffs.at(1));
        c.witness = vec_from_json(doc.at("witness"));
        return replay::radon(vecs_from_json(doc.at("rays")), c);
    }
    if (cmd == "caratheodory") {
        const auto x = vec_from_json(doc.at("x"));
        const auto support = indices_from_json(doc.at("support"));
        const auto coeffs = rats_from_json(doc.at("coefficients"));
        return replay::conic_decomposition(vecs_from_json(doc.at("rays")), x, support, coeffs);
    }
    if (cmd == "extreme") {
        return replay::extreme_rays(vecs_from_json(doc.at("rays")), extreme_from_json(doc.at("certificate")));
    }
    if (cmd == "minkowski") {
        MinkowskiCertificate c;
        c.extreme = indices_from_json(doc.at("extreme"));
        for (const auto& g : doc.at("generator_coefficients")) c.generator_coeffs.push_back(rats_from_json(g));
        return replay::minkowski(vecs_from_json(doc.at("rays")), c);
    }
    if (cmd == "qi-decompose") {
        const auto us = vecs_from_json(doc.at("us"));
        const auto lb = rats_from_json(doc.at("lambda_bar"));
        QiDecomposition d{doc.at("j").get<std::size_t>(), rats_from_json(doc.at("mu"))};
        return replay::qi(us, lb, vec_from_json(doc.at("x")), d);
    }
    if (cmd == "helly") {
        const auto cones = cones_from_sets(doc.at("sets"));
        HellyReport r;
        for (const auto& s : doc.at("intersections")) {
            SubfamilyIntersection si{indices_from_json(s.at("members")), std::nullopt};
            if (!s.at("witness").is_null()) si.witness = intersection_from_json(s["witness"]);
            r.intersections.push_back(std::move(si));
        }
        for (const auto& s : doc.at("coverages"))
            r.coverages.push_back({indices_from_json(s.at("members")), coverage_from_json(s.at("coverage"))});
        r.hypotheses_hold = doc.at("hypotheses_hold").get<bool>();
        const bool inter = doc.at("intersection_hypothesis").get<bool>();
        const bool uni = doc.at("union_hypothesis").get<bool>();
        if (r.hypotheses_hold != (inter && uni)) return Verdict::fail("inconsistent hypothesis flags");
        for (const auto& s : r.intersections)
            if (!s.witness && inter) return Verdict::fail("intersection hypothesis claimed despite a failing subfamily");
        for (const auto& s : r.coverages)
            if (s.coverage.verdict == Coverage::CoveredNotFalsified && uni)
                return Verdict::fail("union hypothesis claimed despite an unrefuted covering subfamily");
        if (!doc.at("common").is_null()) r.common = intersection_from_json(doc["common"]);
        r.negated_separators = vecs_from_json(doc.at("negated_separators"));
        return replay::helly(cones, r);
    }
    if (cmd == "project") {
        const Gauge g = gauge_from_json(doc.at("gauge"));
        json nonzero = json::array();
        for (const auto& p : doc.at("points"))
            if (!p.is_null()) nonzero.push_back(p);
        return replay_on_sphere(g, nonzero, float_tolerance(doc));
    }
    if (cmd == "scomb") {
        const Gauge g = gauge_from_json(doc.at("gauge"));
        return replay_on_sphere(g, json::array({doc.at("result")}), float_tolerance(doc));
    }
    return Verdict::fail("\"" + cmd + "\" documents carry no certificate");
}

}  // namespace sconv::io
