#include "sconv/spherical.hpp"

#include <algorithm>
#include <cmath>
#include <random>

#include "sconv/lp.hpp"

namespace sconv {

namespace {

std::vector<std::vector<std::size_t>> subsets(std::size_t m, std::size_t k) {
    std::vector<std::vector<std::size_t>> out;
    if (k > m) return out;
    std::vector<std::size_t> idx(k);
    for (std::size_t i = 0; i < k; ++i) idx[i] = i;
    for (;;) {
        out.push_back(idx);
        std::size_t i = k;
        while (i > 0 && idx[i - 1] == m - k + i - 1) --i;
        if (i == 0) break;
        ++idx[i - 1];
        for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
    }
    return out;
}

std::vector<ConeVRep> pick(std::span<const ConeVRep> cones, const std::vector<std::size_t>& idx) {
    std::vector<ConeVRep> out;
    out.reserve(idx.size());
    for (auto i : idx) out.push_back(cones[i]);
    return out;
}

void check_rays(std::span<const RatVec> rays) {
    if (rays.empty()) throw ArgumentError("empty ray list");
    common_dimension(rays);
    for (std::size_t i = 0; i < rays.size(); ++i)
        if (rays[i].is_zero()) throw ArgumentError("ray " + std::to_string(i) + " is the zero vector");
}

Rat random_positive_rat(std::mt19937_64& rng) {
    Rat r(static_cast<long>(rng() % 20) + 1, static_cast<long>(rng() % 20) + 1);
    r.canonicalize();
    return r;
}

}  // namespace

HullAddibility hull_addible(std::span<const RatVec> rays) {
    check_rays(rays);
    if (auto u = strict_separator(rays)) return {true, std::move(u), std::nullopt};
    auto lambda = zero_convex_combination(rays);
    if (!lambda) throw InternalInconsistency("rays admit neither a strict separator nor a zero convex combination");
    return {false, std::nullopt, std::move(lambda)};
}

SphericalSet make_set(Gauge g, std::vector<RatVec> rays) {
    check_rays(rays);
    if (rays.front().size() != g.dim())
        throw DimensionError("rays of dimension " + std::to_string(rays.front().size()) + " for a gauge of dimension " +
                             std::to_string(g.dim()));
    auto h = hull_addible(rays);
    if (!h.hull_addible) throw NotHullAddibleError(std::move(*h.lambda));
    return SphericalSet(std::move(g), ConeVRep(std::move(rays)), std::move(*h.u));
}

std::optional<std::vector<Rat>> sco_membership(const SphericalSet& s, const RatVec& x) {
    if (x.size() != s.dim()) throw DimensionError("point of the wrong dimension");
    if (x.is_zero()) throw ArgumentError("the origin is not on the sphere");
    return membership(s.cone(), x);
}

SeparationCertificate separating_hemisphere(const SphericalSet& s, bool closed) {
    const auto& gens = s.rays();
    const std::size_t n = s.dim();
    SeparationCertificate cert;
    cert.closed = closed;
    if (!closed) {
        cert.u = s.strict_witness();
    } else {
        // Stage 1: maximize α s.t. <g_i, u> >= α, -1 <= u_j <= 1. Variables u (free), α (free).
        lp::LinProgram margin(n + 1);
        margin.set_all_free();
        for (const auto& g : gens) {
            RatVec row(n + 1);
            for (std::size_t j = 0; j < n; ++j) row[j] = g[j];
            row[n] = -1;
            margin.add(std::move(row), lp::Relation::GreaterEq, 0);
        }
        for (std::size_t j = 0; j < n; ++j) {
            margin.add(RatVec::unit(n + 1, j), lp::Relation::LessEq, 1);
            margin.add(RatVec::unit(n + 1, j), lp::Relation::GreaterEq, -1);
        }
        margin.maximize(RatVec::unit(n + 1, n));
        auto best = lp::solve(margin);
        if (best.status != lp::Status::Optimal || *best.objective_value <= 0)
            throw InternalInconsistency("pointed cone without a positive separation margin");

        // Stage 2: among maximal-margin u, the smallest ℓ1 norm. Variables u (free), t >= |u|.
        lp::LinProgram tie(2 * n);
        for (std::size_t j = 0; j < n; ++j) tie.set_bound(j, lp::Bound::Free);
        for (const auto& g : gens) {
            RatVec row(2 * n);
            for (std::size_t j = 0; j < n; ++j) row[j] = g[j];
            tie.add(std::move(row), lp::Relation::GreaterEq, *best.objective_value);
        }
        for (std::size_t j = 0; j < n; ++j) {
            RatVec plus(2 * n), minus(2 * n);
            plus[n + j] = 1;
            plus[j] = -1;
            minus[n + j] = 1;
            minus[j] = 1;
            tie.add(std::move(plus), lp::Relation::GreaterEq, 0);
            tie.add(std::move(minus), lp::Relation::GreaterEq, 0);
            tie.add(RatVec::unit(2 * n, j), lp::Relation::LessEq, 1);
            tie.add(RatVec::unit(2 * n, j), lp::Relation::GreaterEq, -1);
        }
        RatVec cost(2 * n);
        for (std::size_t j = 0; j < n; ++j) cost[n + j] = 1;
        tie.minimize(std::move(cost));
        auto out = lp::solve(tie);
        if (out.status != lp::Status::Optimal) throw InternalInconsistency("maximal-margin tie break failed");
        cert.u = RatVec(std::vector<Rat>(out.solution->begin(), out.solution->begin() + static_cast<std::ptrdiff_t>(n)));
    }
    cert.alpha = dot(gens.front(), cert.u);
    for (const auto& g : gens) cert.alpha = std::min(cert.alpha, Rat(dot(g, cert.u)));

    cert.normalized_u = cert.u.to_doubles();
    double norm = 0.0;
    for (double v : cert.normalized_u) norm += v * v;
    norm = std::sqrt(norm);
    for (auto& v : cert.normalized_u) v /= norm;
    return cert;
}

RadonCertificate radon_partition(const Gauge& g, std::span<const RatVec> rays) {
    check_rays(rays);
    const std::size_t n = rays.front().size();
    if (n != g.dim()) throw DimensionError("rays do not match the gauge dimension");
    if (rays.size() < n + 1)
        throw PreconditionError("Radon partition needs at least n+1 = " + std::to_string(n + 1) + " rays, got " +
                                std::to_string(rays.size()));
    auto h = hull_addible(rays);
    if (!h.hull_addible) throw NotHullAddibleError(std::move(*h.lambda));

    auto sol = solve_linear(RatMat::from_columns(rays), RatVec(n));
    if (!sol || sol->nullspace.empty()) throw InternalInconsistency("more than n rays without a linear dependence");
    const RatVec& mu = sol->nullspace.front();

    RadonCertificate cert;
    for (std::size_t i = 0; i < rays.size(); ++i) {
        if (mu[i] > 0) {
            cert.part1.push_back(i);
            cert.coeffs1.push_back(mu[i]);
        } else {
            cert.part2.push_back(i);
            cert.coeffs2.push_back(-mu[i]);
        }
    }
    // Both sign classes are nonempty since o ∉ conv(rays).
    if (cert.part1.empty() || std::all_of(cert.coeffs2.begin(), cert.coeffs2.end(), [](const Rat& c) { return c == 0; }))
        throw InternalInconsistency("linear dependence of hull-addible rays has a single sign");
    cert.witness = RatVec(n);
    for (std::size_t k = 0; k < cert.part1.size(); ++k) cert.witness += cert.coeffs1[k] * rays[cert.part1[k]];
    return cert;
}

HellyReport helly_verify(std::span<const SphericalSet> sets, std::size_t samples, std::uint64_t seed) {
    if (sets.empty()) throw PreconditionError("Helly check of an empty family");
    HellyReport rep;
    rep.n = sets.front().dim();
    rep.m = sets.size();
    for (const auto& s : sets) {
        if (s.dim() != rep.n) throw PreconditionError("sets of mixed dimension");
        if (!(s.gauge() == sets.front().gauge())) throw PreconditionError("sets use different gauges");
    }
    if (rep.m < rep.n)
        throw PreconditionError("Helly check needs m >= n sets (m = " + std::to_string(rep.m) +
                                ", n = " + std::to_string(rep.n) + ")");

    std::vector<ConeVRep> cones;
    for (const auto& s : sets) cones.push_back(s.cone());

    for (auto& idx : subsets(rep.m, rep.n)) {
        auto picked = pick(cones, idx);
        auto w = intersect_nontrivial(picked);
        if (!w && !rep.first_failing_intersection) rep.first_failing_intersection = idx;
        rep.intersections.push_back({std::move(idx), std::move(w)});
    }
    rep.intersection_hypothesis = !rep.first_failing_intersection.has_value();

    for (auto& idx : subsets(rep.m, rep.n + 1)) {
        auto picked = pick(cones, idx);
        auto cov = covers_space(picked, samples, seed);
        if (cov.verdict == Coverage::CoveredNotFalsified) rep.covering_subfamilies.push_back(idx);
        rep.coverages.push_back({std::move(idx), std::move(cov)});
    }
    rep.union_hypothesis = rep.covering_subfamilies.empty();
    rep.hypotheses_hold = rep.intersection_hypothesis && rep.union_hypothesis;

    if (rep.hypotheses_hold) {
        rep.common = intersect_nontrivial(cones);
        if (!rep.common) throw InternalInconsistency("Helly hypotheses hold but the family has no common ray");
        const RatVec neg = -rep.common->x;
        for (const auto& k : cones) {
            auto y = farkas_separator(k, neg);
            if (!y) throw InternalInconsistency("negated common ray lies in a pointed cone");
            rep.negated_separators.push_back(std::move(*y));
        }
    }
    return rep;
}

CaratheodoryResult spherical_caratheodory(const SphericalSet& s, const RatVec& x) {
    if (x.size() != s.dim()) throw DimensionError("point of the wrong dimension");
    if (x.is_zero()) throw PreconditionError("the origin is not on the sphere");
    if (!membership(s.cone(), x)) throw PreconditionError("point " + to_string(x) + " is not in sco S");
    auto d = conic_caratheodory(s.cone(), x);

    CaratheodoryResult r;
    r.indices = std::move(d.indices);
    r.coeffs = std::move(d.coeffs);
    double total = 0.0;
    for (std::size_t k = 0; k < r.indices.size(); ++k) {
        const RatVec& g = s.rays()[r.indices[k]];
        r.points.push_back(*project(s.gauge(), g));
        const double w = r.coeffs[k].get_d() * s.gauge().evaluate(g);
        r.weights.push_back(w);
        total += w;
    }
    for (auto& w : r.weights) w /= total;
    return r;
}

ExtremeRayCertificate certify_extreme_rays(const ConeVRep& k) {
    const auto extreme = extreme_rays(k);
    ExtremeRayCertificate cert;
    cert.extreme = extreme;
    for (std::size_t i = 0; i < k.size(); ++i) {
        std::optional<std::size_t> parallel;
        for (std::size_t j = 0; j < i && !parallel; ++j)
            if (same_ray(k[j], k[i])) parallel = j;
        const bool is_extreme = std::find(extreme.begin(), extreme.end(), i) != extreme.end();

        std::vector<std::size_t> others;
        for (std::size_t j = 0; j < k.size(); ++j)
            if (!same_ray(k[j], k[i])) others.push_back(j);

        if (is_extreme) {
            if (others.empty()) {
                // Every generator lies on this ray: <g, g_i> > 0 on all of them, so rescale -g_i.
                cert.separators.push_back(Rat(-1) / dot(k[i], k[i]) * k[i]);
                continue;
            }
            std::vector<RatVec> rest;
            for (auto j : others) rest.push_back(k[j]);
            auto y = farkas_separator(ConeVRep(std::move(rest)), k[i]);
            if (!y) throw InternalInconsistency("extreme generator without a separator");
            cert.separators.push_back(std::move(*y));
            continue;
        }
        ExtremeRayCertificate::Redundant red{i, parallel, std::vector<Rat>(k.size())};
        if (!parallel) {
            std::vector<RatVec> rest;
            for (auto j : others) rest.push_back(k[j]);
            auto c = membership(ConeVRep(std::move(rest)), k[i]);
            if (!c) throw InternalInconsistency("non-extreme generator without a decomposition");
            for (std::size_t t = 0; t < others.size(); ++t) red.coeffs[others[t]] = (*c)[t];
        }
        cert.redundant.push_back(std::move(red));
    }
    return cert;
}

ExtremePoints sext(const SphericalSet& s) {
    ExtremePoints e;
    e.certificate = certify_extreme_rays(s.cone());
    for (auto i : e.certificate.extreme) {
        e.rays.push_back(s.rays()[i]);
        e.points.push_back(*project(s.gauge(), s.rays()[i]));
    }
    return e;
}

MinkowskiCertificate minkowski_check(const SphericalSet& s) {
    MinkowskiCertificate cert;
    cert.extreme = extreme_rays(s.cone());
    if (cert.extreme.empty()) throw InternalInconsistency("closed s-convex set with no extreme points");
    std::vector<RatVec> ext;
    for (auto i : cert.extreme) ext.push_back(s.rays()[i]);
    const ConeVRep ext_cone(ext);
    for (std::size_t i = 0; i < s.rays().size(); ++i) {
        auto c = membership(ext_cone, s.rays()[i]);
        if (!c)
            throw InternalInconsistency("generator " + std::to_string(i) +
                                        " is not generated by the extreme rays");
        cert.generator_coeffs.push_back(std::move(*c));
    }
    return cert;
}

Prop1Report prop1_suite(const SphericalSet& s, std::size_t samples, std::uint64_t seed, ConvexCheck star) {
    if (samples < 1) throw ArgumentError("prop1 suite needs at least one sample");
    if (star == ConvexCheck::Require && !s.gauge().is_convex())
        throw GatedFeatureError("the ]0,1]S convexity check assumes a convex gauge; " +
                                std::string(to_string(s.gauge().kind())) + " is not convex");
    Prop1Report rep;
    rep.samples = samples;
    rep.star_checked = star != ConvexCheck::Skip && s.gauge().is_convex();

    std::mt19937_64 rng(seed);
    const auto& gens = s.rays();
    auto positive_combination = [&] {
        std::vector<Rat> c;
        for (std::size_t i = 0; i < gens.size(); ++i) c.push_back(random_positive_rat(rng));
        return c;
    };
    auto fail = [&](std::size_t k, const std::string& what) {
        rep.passed = false;
        rep.failures.push_back("sample " + std::to_string(k) + ": " + what);
    };
    auto replays = [&](const RatVec& x, const std::optional<std::vector<Rat>>& c) {
        if (!c) return false;
        for (const auto& v : *c)
            if (v < 0) return false;
        return linear_combination(gens, *c) == x;
    };

    for (std::size_t k = 0; k < samples; ++k) {
        // Sums of members of PS stay in PS.
        const RatVec a = linear_combination(gens, positive_combination());
        const RatVec b = linear_combination(gens, positive_combination());
        const RatVec sum = a + b;
        if (sum.is_zero() || !replays(sum, membership(s.cone(), sum))) fail(k, "sum of members left the cone");
        ++rep.checks_sum;

        // ρ(conv S) = S: a convex combination of generators is a nonzero cone member.
        auto w = positive_combination();
        Rat total = 0;
        for (const auto& v : w) total += v;
        for (auto& v : w) v /= total;
        const RatVec y = linear_combination(gens, w);
        if (y.is_zero() || !replays(y, membership(s.cone(), y))) fail(k, "convex combination is not in sco S");
        ++rep.checks_hull;

        if (!rep.star_checked) continue;
        // x_i = t_i ρ(r_i) ∈ ]0,1]S; their convex combination must have gauge <= 1 and a member ray.
        std::uniform_real_distribution<double> unit(0.0, 1.0);
        const RatVec r1 = linear_combination(gens, positive_combination());
        const RatVec r2 = linear_combination(gens, positive_combination());
        const double t1 = 1.0 - unit(rng), t2 = 1.0 - unit(rng);
        double lam = unit(rng);
        if (lam == 0.0) lam = 0.5;
        const double phi1 = s.gauge().evaluate(r1), phi2 = s.gauge().evaluate(r2);
        const double c1 = lam * t1 / phi1, c2 = (1.0 - lam) * t2 / phi2;
        const auto d1 = r1.to_doubles(), d2 = r2.to_doubles();
        std::vector<double> x(s.dim());
        for (std::size_t j = 0; j < x.size(); ++j) x[j] = c1 * d1[j] + c2 * d2[j];
        const double phi = s.gauge().evaluate(x);
        if (!(phi > 0.0) || phi > 1.0 + kStarTolerance) fail(k, "convex combination in ]0,1]S has gauge " + std::to_string(phi));
        const RatVec exact_ray = Rat(c1) * r1 + Rat(c2) * r2;
        if (!replays(exact_ray, membership(s.cone(), exact_ray))) fail(k, "ray of ]0,1]S combination left the cone");
        ++rep.checks_star;
    }
    return rep;
}

}  // namespace sconv
