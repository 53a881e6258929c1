#pragma once

// Finitely generated convex cones in V-representation.
//
// Every predicate reduces to an exact LP. Results come with data that a third
// party can check by rational arithmetic alone (see replay.hpp).

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <variant>
#include <vector>

#include "sconv/linalg.hpp"

namespace sconv {

/// cone(g_1, ..., g_k) = {Σ λ_i g_i : λ_i >= 0}, all g_i nonzero, common dimension n >= 2.
class ConeVRep {
public:
    explicit ConeVRep(std::vector<RatVec> generators);

    std::size_t dim() const noexcept { return gens_.front().size(); }
    std::size_t size() const noexcept { return gens_.size(); }
    const std::vector<RatVec>& generators() const noexcept { return gens_; }
    const RatVec& operator[](std::size_t i) const { return gens_[i]; }

    friend bool operator==(const ConeVRep&, const ConeVRep&) = default;

private:
    std::vector<RatVec> gens_;
};

/// u with <g_i, u> >= 1 for every generator.
struct StrictWitness {
    RatVec u;
};

/// A nonzero x with x and -x both in the cone, each with its coefficients.
struct LineWitness {
    RatVec x;
    std::vector<Rat> plus_coeffs;
    std::vector<Rat> minus_coeffs;
};

using PointednessCertificate = std::variant<StrictWitness, LineWitness>;

struct Pointedness {
    bool pointed;
    PointednessCertificate certificate;
};

/// Nonnegative λ with Σλ_i g_i = x, or nullopt when x is outside the cone.
std::optional<std::vector<Rat>> membership(const ConeVRep& k, const RatVec& x);

/// Farkas certificate of non-membership: y with <g_i, y> >= 0 for all i and
/// <x, y> <= -1. Present exactly when membership(k, x) is absent.
std::optional<RatVec> farkas_separator(const ConeVRep& k, const RatVec& x);

/// Smallest-ℓ1 u with <p, u> >= 1 for every p, if the points admit strict separation from o.
std::optional<RatVec> strict_separator(std::span<const RatVec> points);

/// λ >= 0, Σλ = 1, Σλ_i p_i = o, if o lies in conv(points).
std::optional<std::vector<Rat>> zero_convex_combination(std::span<const RatVec> points);

Pointedness is_pointed(const ConeVRep& k);

/// One index per extreme ray (the lowest index among parallel generators), ascending.
/// Throws PreconditionError for a non-pointed cone.
std::vector<std::size_t> extreme_rays(const ConeVRep& k);

struct ConicDecomposition {
    std::vector<std::size_t> indices;  ///< linearly independent generators, at most n
    std::vector<Rat> coeffs;           ///< strictly positive
};

/// Throws PreconditionError for x = o or x outside the cone.
ConicDecomposition conic_caratheodory(const ConeVRep& k, const RatVec& x);

struct IntersectionWitness {
    RatVec x;
    std::vector<std::vector<Rat>> coeffs;  ///< membership coefficients of x, one list per cone
};

/// A nonzero common member of all cones, or nullopt if they meet only at o.
/// Throws PreconditionError for an empty list, a non-pointed cone or mixed dimensions.
std::optional<IntersectionWitness> intersect_nontrivial(std::span<const ConeVRep> cones);

enum class Coverage { CoveredNotFalsified, NotCovered };

const char* to_string(Coverage c);

struct CoverageResult {
    Coverage verdict;
    /// True when the verdict is a decision (always for NotCovered; for
    /// CoveredNotFalsified only in dimension 2).
    bool exact;
    std::optional<RatVec> witness;
    /// Farkas separators proving witness ∉ cone_j, one per cone.
    std::vector<RatVec> separators;
    std::size_t candidates_checked = 0;
};

/// Decides whether the union of the cones is all of ℝⁿ. Exact in ℝ² by an
/// angular sweep; in higher dimension it tests deterministic candidates and
/// `samples` seeded random rays, so "covered" only means "not falsified".
CoverageResult covers_space(std::span<const ConeVRep> cones, std::size_t samples, std::uint64_t seed = 0);

/// Strictly positive weights with Σλ̄ = 1 and Σλ̄_l u_l = o, maximizing the
/// smallest weight; nullopt if o is not interior to the simplex.
/// Requires n+1 affinely independent vectors in ℝⁿ (PreconditionError).
std::optional<std::vector<Rat>> barycentric_origin(std::span<const RatVec> us);

/// Q_i = cone{u_l : l ≠ i}.
ConeVRep qi_cone(std::span<const RatVec> us, std::size_t i);

struct QiDecomposition {
    std::size_t j;
    std::vector<Rat> mu;  ///< mu >= 0, mu[j] = 0, Σ mu_l u_l = x
};

/// Certifies x ∈ Q_j for some j. Throws PreconditionError unless `us` is an
/// affinely independent (n+1)-family and `lambda_bar` replays.
QiDecomposition qi_decomposition(std::span<const RatVec> us, std::span<const Rat> lambda_bar, const RatVec& x);

}  // namespace sconv
