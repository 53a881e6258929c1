#include "sconv/replay.hpp"

#include <algorithm>
#include <set>

namespace sconv::replay {

namespace {

std::string idx(std::size_t i) { return std::to_string(i); }

// Σ coeffs_i g_i without going through linear_combination's checks, so that
// malformed certificates fail instead of throwing.
std::optional<RatVec> combine(std::span<const RatVec> gens, std::span<const Rat> coeffs, std::size_t dim) {
    if (gens.size() != coeffs.size()) return std::nullopt;
    RatVec out(dim);
    for (std::size_t i = 0; i < gens.size(); ++i) {
        if (gens[i].size() != dim) return std::nullopt;
        for (std::size_t k = 0; k < dim; ++k) out[k] += coeffs[i] * gens[i][k];
    }
    return out;
}

std::vector<RatVec> select(std::span<const RatVec> gens, std::span<const std::size_t> indices) {
    std::vector<RatVec> out;
    for (auto i : indices) out.push_back(gens[i]);
    return out;
}

}  // namespace

Verdict membership(std::span<const RatVec> gens, const RatVec& x, std::span<const Rat> coeffs) {
    if (coeffs.size() != gens.size()) return Verdict::fail("coefficient count differs from generator count");
    for (std::size_t i = 0; i < coeffs.size(); ++i)
        if (coeffs[i] < 0) return Verdict::fail("negative coefficient at " + idx(i));
    auto sum = combine(gens, coeffs, x.size());
    if (!sum || !(*sum == x)) return Verdict::fail("coefficients do not reconstruct " + to_string(x));
    return Verdict::pass();
}

Verdict non_membership(std::span<const RatVec> gens, const RatVec& x, const RatVec& y) {
    if (y.size() != x.size()) return Verdict::fail("separator has the wrong dimension");
    for (std::size_t i = 0; i < gens.size(); ++i) {
        if (gens[i].size() != y.size()) return Verdict::fail("generator dimension mismatch");
        if (dot(gens[i], y) < 0) return Verdict::fail("separator is negative on generator " + idx(i));
    }
    if (dot(x, y) >= 0) return Verdict::fail("separator does not cut off " + to_string(x));
    return Verdict::pass();
}

Verdict strict_separation(std::span<const RatVec> points, const RatVec& u, const Rat& alpha) {
    if (alpha <= 0) return Verdict::fail("separation margin is not positive");
    for (std::size_t i = 0; i < points.size(); ++i) {
        if (points[i].size() != u.size()) return Verdict::fail("dimension mismatch");
        if (dot(points[i], u) < alpha) return Verdict::fail("margin violated at " + idx(i));
    }
    return Verdict::pass();
}

Verdict zero_convex_combination(std::span<const RatVec> points, std::span<const Rat> lambda) {
    if (points.empty()) return Verdict::fail("empty family");
    if (lambda.size() != points.size()) return Verdict::fail("weight count differs from point count");
    Rat total = 0;
    for (const auto& l : lambda) {
        if (l < 0) return Verdict::fail("negative weight");
        total += l;
    }
    if (total != 1) return Verdict::fail("weights do not sum to 1");
    auto sum = combine(points, lambda, points.front().size());
    if (!sum || !sum->is_zero()) return Verdict::fail("weighted sum is not the origin");
    return Verdict::pass();
}

Verdict pointedness(std::span<const RatVec> gens, const Pointedness& p) {
    if (p.pointed) {
        const auto* w = std::get_if<StrictWitness>(&p.certificate);
        if (!w) return Verdict::fail("pointed verdict without a strict witness");
        return strict_separation(gens, w->u, 1);
    }
    const auto* w = std::get_if<LineWitness>(&p.certificate);
    if (!w) return Verdict::fail("non-pointed verdict without a line witness");
    if (w->x.is_zero()) return Verdict::fail("line witness is zero");
    if (auto v = membership(gens, w->x, w->plus_coeffs); !v) return v;
    return membership(gens, -w->x, w->minus_coeffs);
}

Verdict hull_addibility(std::span<const RatVec> rays, const HullAddibility& h) {
    if (h.hull_addible) {
        if (!h.u) return Verdict::fail("hull-addible verdict without a separator");
        return strict_separation(rays, *h.u, 1);
    }
    if (!h.lambda) return Verdict::fail("non-hull-addible verdict without weights");
    return zero_convex_combination(rays, *h.lambda);
}

Verdict separation(std::span<const RatVec> rays, const SeparationCertificate& c) {
    return strict_separation(rays, c.u, c.alpha);
}

Verdict radon(std::span<const RatVec> rays, const RadonCertificate& c) {
    if (c.part1.empty() || c.part2.empty()) return Verdict::fail("a part of the partition is empty");
    std::set<std::size_t> seen;
    for (auto i : c.part1) seen.insert(i);
    for (auto i : c.part2) seen.insert(i);
    if (seen.size() != c.part1.size() + c.part2.size()) return Verdict::fail("parts overlap or repeat an index");
    if (seen.size() != rays.size() || (!seen.empty() && *seen.rbegin() >= rays.size()))
        return Verdict::fail("partition does not cover the input");
    if (c.witness.is_zero()) return Verdict::fail("witness ray is zero");
    const auto a = select(rays, c.part1), b = select(rays, c.part2);
    if (auto v = membership(a, c.witness, c.coeffs1); !v) return Verdict::fail("first part: " + v.reason);
    if (auto v = membership(b, c.witness, c.coeffs2); !v) return Verdict::fail("second part: " + v.reason);
    return Verdict::pass();
}

Verdict conic_decomposition(std::span<const RatVec> gens, const RatVec& x, std::span<const std::size_t> indices,
                            std::span<const Rat> coeffs) {
    if (indices.empty()) return Verdict::fail("empty support");
    if (indices.size() != coeffs.size()) return Verdict::fail("support and coefficient counts differ");
    if (indices.size() > x.size()) return Verdict::fail("support larger than the dimension");
    for (auto i : indices)
        if (i >= gens.size()) return Verdict::fail("support index out of range");
    for (const auto& c : coeffs)
        if (c <= 0) return Verdict::fail("coefficient is not strictly positive");
    const auto sub = select(gens, indices);
    if (rank(RatMat(sub)) != sub.size()) return Verdict::fail("support is linearly dependent");
    return membership(sub, x, coeffs);
}

Verdict intersection(std::span<const ConeVRep> cones, const IntersectionWitness& w) {
    if (w.x.is_zero()) return Verdict::fail("intersection witness is zero");
    if (w.coeffs.size() != cones.size()) return Verdict::fail("coefficient list count differs from cone count");
    for (std::size_t c = 0; c < cones.size(); ++c)
        if (auto v = membership(cones[c].generators(), w.x, w.coeffs[c]); !v)
            return Verdict::fail("cone " + idx(c) + ": " + v.reason);
    return Verdict::pass();
}

Verdict coverage(std::span<const ConeVRep> cones, const CoverageResult& c) {
    if (c.verdict == Coverage::CoveredNotFalsified) return Verdict::pass();
    if (!c.witness || c.witness->is_zero()) return Verdict::fail("not-covered verdict without a nonzero witness");
    if (c.separators.size() != cones.size()) return Verdict::fail("separator count differs from cone count");
    for (std::size_t k = 0; k < cones.size(); ++k)
        if (auto v = non_membership(cones[k].generators(), *c.witness, c.separators[k]); !v)
            return Verdict::fail("cone " + idx(k) + ": " + v.reason);
    return Verdict::pass();
}

Verdict extreme_rays(std::span<const RatVec> gens, const ExtremeRayCertificate& c) {
    if (c.extreme.empty()) return Verdict::fail("no extreme rays");
    if (c.separators.size() != c.extreme.size()) return Verdict::fail("separator count differs from extreme count");
    std::set<std::size_t> accounted;
    for (std::size_t t = 0; t < c.extreme.size(); ++t) {
        const auto i = c.extreme[t];
        if (i >= gens.size()) return Verdict::fail("extreme index out of range");
        std::vector<RatVec> others;
        for (std::size_t j = 0; j < gens.size(); ++j)
            if (!same_ray(gens[j], gens[i])) others.push_back(gens[j]);
        if (auto v = non_membership(others, gens[i], c.separators[t]); !v)
            return Verdict::fail("extreme " + idx(i) + ": " + v.reason);
        // The lowest index on the ray is the representative.
        for (std::size_t j = 0; j < i; ++j)
            if (same_ray(gens[j], gens[i])) return Verdict::fail("extreme " + idx(i) + " is not the lowest on its ray");
        accounted.insert(i);
    }
    for (const auto& r : c.redundant) {
        if (r.index >= gens.size()) return Verdict::fail("redundant index out of range");
        if (r.same_ray_as) {
            if (*r.same_ray_as >= r.index || !same_ray(gens[*r.same_ray_as], gens[r.index]))
                return Verdict::fail("bad parallel representative for " + idx(r.index));
        } else {
            for (std::size_t j = 0; j < gens.size(); ++j)
                if (r.coeffs.size() == gens.size() && r.coeffs[j] != 0 && same_ray(gens[j], gens[r.index]))
                    return Verdict::fail("decomposition of " + idx(r.index) + " uses its own ray");
            if (auto v = membership(gens, gens[r.index], r.coeffs); !v)
                return Verdict::fail("redundant " + idx(r.index) + ": " + v.reason);
        }
        accounted.insert(r.index);
    }
    if (accounted.size() != gens.size() || c.extreme.size() + c.redundant.size() != gens.size())
        return Verdict::fail("certificate does not classify every generator exactly once");
    return Verdict::pass();
}

Verdict minkowski(std::span<const RatVec> gens, const MinkowskiCertificate& c) {
    if (c.extreme.empty()) return Verdict::fail("sext is empty");
    for (auto i : c.extreme)
        if (i >= gens.size()) return Verdict::fail("extreme index out of range");
    if (c.generator_coeffs.size() != gens.size()) return Verdict::fail("missing generator decompositions");
    const auto ext = select(gens, c.extreme);
    for (std::size_t i = 0; i < gens.size(); ++i)
        if (auto v = membership(ext, gens[i], c.generator_coeffs[i]); !v)
            return Verdict::fail("generator " + idx(i) + ": " + v.reason);
    // The reverse inclusion holds because every extreme ray is one of the generators.
    return Verdict::pass();
}

Verdict barycentric(std::span<const RatVec> us, std::span<const Rat> lambda_bar) {
    for (const auto& l : lambda_bar)
        if (l <= 0) return Verdict::fail("lambda_bar is not strictly positive");
    return zero_convex_combination(us, lambda_bar);
}

Verdict qi(std::span<const RatVec> us, std::span<const Rat> lambda_bar, const RatVec& x, const QiDecomposition& d) {
    if (auto v = barycentric(us, lambda_bar); !v) return v;
    if (d.j >= us.size()) return Verdict::fail("index j out of range");
    if (d.mu.size() != us.size() || d.mu[d.j] != 0) return Verdict::fail("mu_j is not zero");
    return membership(us, x, d.mu);
}

Verdict helly(std::span<const ConeVRep> cones, const HellyReport& r) {
    auto subfamily = [&](const std::vector<std::size_t>& members) {
        std::vector<ConeVRep> out;
        for (auto i : members) out.push_back(cones[i]);
        return out;
    };
    auto in_range = [&](const std::vector<std::size_t>& members) {
        return std::all_of(members.begin(), members.end(), [&](std::size_t i) { return i < cones.size(); });
    };
    for (const auto& s : r.intersections) {
        if (!in_range(s.members)) return Verdict::fail("subfamily index out of range");
        if (s.witness)
            if (auto v = intersection(subfamily(s.members), *s.witness); !v) return v;
    }
    for (const auto& s : r.coverages) {
        if (!in_range(s.members)) return Verdict::fail("subfamily index out of range");
        if (auto v = coverage(subfamily(s.members), s.coverage); !v) return v;
    }
    if (r.hypotheses_hold) {
        if (!r.common) return Verdict::fail("hypotheses hold but no common ray reported");
        if (auto v = intersection(cones, *r.common); !v) return v;
        if (r.negated_separators.size() != cones.size()) return Verdict::fail("missing separators for -x");
        const RatVec neg = -r.common->x;
        for (std::size_t k = 0; k < cones.size(); ++k)
            if (auto v = non_membership(cones[k].generators(), neg, r.negated_separators[k]); !v)
                return Verdict::fail("-x in cone " + idx(k) + ": " + v.reason);
    }
    return Verdict::pass();
}

}  // namespace sconv::replay
