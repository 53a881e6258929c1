#pragma once

// Finitely generated s-convex sets and the Radon, Helly, Carathéodory and
// Minkowski type results on them.
//
// A set is stored as the exact rays generating its pointed cone K, and means
// K ∩ 𝕊 for the chosen gauge. Since K is finitely generated it is closed, so
// the set is closed too and its closure needs no separate treatment. Sphere
// points appear only in the presentation fields of the results.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "sconv/cone.hpp"
#include "sconv/errors.hpp"
#include "sconv/gauge.hpp"
#include "sconv/linalg.hpp"

namespace sconv {

/// The rays do not admit a spherical hull; `lambda` is a convex combination
/// of them equal to o.
class NotHullAddibleError : public PreconditionError {
public:
    explicit NotHullAddibleError(std::vector<Rat> lambda)
        : PreconditionError("not hull-addible: the origin is a convex combination of the rays"),
          lambda_(std::move(lambda)) {}

    const std::vector<Rat>& lambda() const noexcept { return lambda_; }

private:
    std::vector<Rat> lambda_;
};

class SphericalSet {
public:
    const Gauge& gauge() const noexcept { return gauge_; }
    const ConeVRep& cone() const noexcept { return cone_; }
    const std::vector<RatVec>& rays() const noexcept { return cone_.generators(); }
    std::size_t dim() const noexcept { return cone_.dim(); }
    /// u with <g, u> >= 1 on every generator.
    const RatVec& strict_witness() const noexcept { return witness_; }

private:
    SphericalSet(Gauge g, ConeVRep k, RatVec u) : gauge_(std::move(g)), cone_(std::move(k)), witness_(std::move(u)) {}
    friend SphericalSet make_set(Gauge g, std::vector<RatVec> rays);

    Gauge gauge_;
    ConeVRep cone_;
    RatVec witness_;
};

struct HullAddibility {
    bool hull_addible;
    std::optional<RatVec> u;                   ///< <p_i, u> >= 1 for all i
    std::optional<std::vector<Rat>> lambda;    ///< λ >= 0, Σλ = 1, Σλ_i p_i = o
};

/// Throws ArgumentError on a zero ray or an empty list.
HullAddibility hull_addible(std::span<const RatVec> rays);

/// sco of the projected rays. Throws NotHullAddibleError if o ∈ conv(rays).
SphericalSet make_set(Gauge g, std::vector<RatVec> rays);

/// Coefficients exhibiting x ∈ cone(rays); nullopt when ρ(x) ∉ sco S.
/// Throws ArgumentError for x = o.
std::optional<std::vector<Rat>> sco_membership(const SphericalSet& s, const RatVec& x);

struct SeparationCertificate {
    RatVec u;
    Rat alpha;                         ///< min_i <g_i, u>, always > 0
    bool closed = false;
    std::vector<double> normalized_u;  ///< u / ‖u‖₂
};

/// closed = false: the smallest-ℓ1 u with <g_i, u> >= 1.
/// closed = true: maximal margin α under ‖u‖∞ <= 1 (ties broken by smallest ℓ1 norm).
SeparationCertificate separating_hemisphere(const SphericalSet& s, bool closed);

struct RadonCertificate {
    std::vector<std::size_t> part1, part2;
    RatVec witness;
    std::vector<Rat> coeffs1, coeffs2;  ///< witness = Σ coeffs1 · rays[part1] = Σ coeffs2 · rays[part2]
};

/// Partition of at least n+1 hull-addible rays whose two cones share a
/// nonzero ray. Built from the first nullspace vector μ of the ray matrix:
/// part1 = {μ > 0}, part2 = {μ <= 0}. Throws PreconditionError if card <= n
/// and NotHullAddibleError if the rays are not hull-addible.
RadonCertificate radon_partition(const Gauge& g, std::span<const RatVec> rays);

struct SubfamilyIntersection {
    std::vector<std::size_t> members;
    std::optional<IntersectionWitness> witness;
};

struct SubfamilyCoverage {
    std::vector<std::size_t> members;
    CoverageResult coverage;
};

struct HellyReport {
    std::size_t n = 0, m = 0;
    std::vector<SubfamilyIntersection> intersections;  ///< every n-subfamily, lexicographic
    std::optional<std::vector<std::size_t>> first_failing_intersection;
    std::vector<SubfamilyCoverage> coverages;           ///< every (n+1)-subfamily, lexicographic
    std::vector<std::vector<std::size_t>> covering_subfamilies;
    bool intersection_hypothesis = false;
    bool union_hypothesis = false;
    bool hypotheses_hold = false;
    /// Present when the hypotheses hold.
    std::optional<IntersectionWitness> common;
    /// Farkas separators proving -common.x lies outside each cone.
    std::vector<RatVec> negated_separators;
};

/// Checks both hypotheses of the Helly-type theorem over all subfamilies and,
/// when they hold, produces a common nonzero ray. A subfamily whose coverage
/// could not be falsified counts against the union hypothesis.
HellyReport helly_verify(std::span<const SphericalSet> sets, std::size_t samples = 1000, std::uint64_t seed = 0);

struct CaratheodoryResult {
    std::vector<std::size_t> indices;
    std::vector<Rat> coeffs;
    std::vector<SpherePoint> points;  ///< ρ(rays[indices])
    std::vector<double> weights;      ///< ∝ coeffs_i · Φ(rays_i), summing to 1
};

/// At most n linearly independent generators, positive coefficients. Throws
/// PreconditionError when ρ(x) ∉ sco S or x = o.
CaratheodoryResult spherical_caratheodory(const SphericalSet& s, const RatVec& x);

/// Extreme-ray data for a pointed cone, checkable without an LP: a Farkas
/// separator for each extreme generator against the generators off its ray,
/// and a decomposition or a parallel representative for every other one.
struct ExtremeRayCertificate {
    struct Redundant {
        std::size_t index;
        std::optional<std::size_t> same_ray_as;
        std::vector<Rat> coeffs;  ///< over all generators, zero on the ray of `index`
    };
    std::vector<std::size_t> extreme;
    std::vector<RatVec> separators;
    std::vector<Redundant> redundant;
};

ExtremeRayCertificate certify_extreme_rays(const ConeVRep& k);

struct ExtremePoints {
    ExtremeRayCertificate certificate;
    std::vector<RatVec> rays;
    std::vector<SpherePoint> points;
};

ExtremePoints sext(const SphericalSet& s);

struct MinkowskiCertificate {
    std::vector<std::size_t> extreme;
    /// generator_coeffs[i]: rays[i] as a nonnegative combination of the extreme rays.
    std::vector<std::vector<Rat>> generator_coeffs;
};

/// Throws InternalInconsistency if some generator is not a combination of
/// the extreme rays or sext is empty.
MinkowskiCertificate minkowski_check(const SphericalSet& s);

enum class ConvexCheck { Auto, Require, Skip };

/// Slack on the gauge bound Φ <= 1 in the ]0,1]S check.
inline constexpr double kStarTolerance = 1e-9;

struct Prop1Report {
    bool passed = true;
    std::size_t samples = 0;
    std::size_t checks_sum = 0;       ///< sums of members stay members
    std::size_t checks_hull = 0;      ///< convex combinations of generators are members
    std::size_t checks_star = 0;      ///< ]0,1]S closed under convex combination (convex gauge)
    bool star_checked = false;
    std::vector<std::string> failures;
};

/// Randomized checks of the s-convexity characterizations. With
/// ConvexCheck::Require on a non-convex gauge, throws GatedFeatureError.
Prop1Report prop1_suite(const SphericalSet& s, std::size_t samples, std::uint64_t seed,
                        ConvexCheck star = ConvexCheck::Auto);

}  // namespace sconv
