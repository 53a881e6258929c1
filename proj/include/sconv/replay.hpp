#pragma once

// Independent certificate checking. Nothing in here calls the LP solver or
// any of the algorithms that produced the certificate: each check is a
// handful of exact dot products, sign tests and (for independence claims)
// a rank computation.

#include <span>
#include <string>
#include <vector>

#include "sconv/cone.hpp"
#include "sconv/linalg.hpp"
#include "sconv/spherical.hpp"

namespace sconv::replay {

struct Verdict {
    bool ok = true;
    std::string reason;

    static Verdict pass() { return {}; }
    static Verdict fail(std::string why) { return {false, std::move(why)}; }
    explicit operator bool() const noexcept { return ok; }
};

/// coeffs >= 0 and Σ coeffs_i g_i = x.
Verdict membership(std::span<const RatVec> gens, const RatVec& x, std::span<const Rat> coeffs);
/// <g_i, y> >= 0 for all i and <x, y> < 0.
Verdict non_membership(std::span<const RatVec> gens, const RatVec& x, const RatVec& y);
/// <p_i, u> >= alpha for all i, alpha > 0.
Verdict strict_separation(std::span<const RatVec> points, const RatVec& u, const Rat& alpha);
/// λ >= 0, Σλ = 1, Σλ_i p_i = o.
Verdict zero_convex_combination(std::span<const RatVec> points, std::span<const Rat> lambda);

Verdict pointedness(std::span<const RatVec> gens, const Pointedness& p);
Verdict hull_addibility(std::span<const RatVec> rays, const HullAddibility& h);
Verdict separation(std::span<const RatVec> rays, const SeparationCertificate& c);
Verdict radon(std::span<const RatVec> rays, const RadonCertificate& c);
/// Linearly independent support of size <= n, positive coefficients, exact reconstruction.
Verdict conic_decomposition(std::span<const RatVec> gens, const RatVec& x, std::span<const std::size_t> indices,
                            std::span<const Rat> coeffs);
Verdict intersection(std::span<const ConeVRep> cones, const IntersectionWitness& w);
/// NotCovered results must carry a witness refuted by every cone; a
/// CoveredNotFalsified result carries nothing to check.
Verdict coverage(std::span<const ConeVRep> cones, const CoverageResult& c);
Verdict extreme_rays(std::span<const RatVec> gens, const ExtremeRayCertificate& c);
Verdict minkowski(std::span<const RatVec> gens, const MinkowskiCertificate& c);
Verdict barycentric(std::span<const RatVec> us, std::span<const Rat> lambda_bar);
Verdict qi(std::span<const RatVec> us, std::span<const Rat> lambda_bar, const RatVec& x, const QiDecomposition& d);
Verdict helly(std::span<const ConeVRep> cones, const HellyReport& r);

}  // namespace sconv::replay
