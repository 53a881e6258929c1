#pragma once

// Gauge functions and the radial projection onto their level-one sphere.
//
// This is the only floating-point part of the library. The cone and spherical
// layers never consult a gauge to decide anything: every predicate they
// implement is invariant under positive rescaling of rays, so sphere points
// are a presentation of exact rays, not a source of truth.

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "sconv/linalg.hpp"

namespace sconv {

enum class GaugeKind { Euclidean, PNorm, QuasiNorm, Polyhedral };

const char* to_string(GaugeKind k);

class Gauge {
public:
    static Gauge euclidean(std::size_t dim);
    /// p >= 1.
    static Gauge pnorm(std::size_t dim, double p);
    /// 0 < p < 1; (Σ|x_i|^p)^(1/p) is positively homogeneous and definite but not convex.
    static Gauge quasinorm(std::size_t dim, double p);
    /// Φ(x) = max_i <f_i, x>. Rejected unless the maximum is positive on
    /// every nonzero x; the ArgumentError names a nonzero x where it is not.
    static Gauge polyhedral(std::vector<RatVec> functionals);

    GaugeKind kind() const noexcept { return kind_; }
    std::size_t dim() const noexcept { return dim_; }
    double p() const noexcept { return p_; }
    const std::vector<RatVec>& functionals() const noexcept { return functionals_; }

    /// Euclidean, PNorm and Polyhedral gauges are convex; QuasiNorm is not.
    bool is_convex() const noexcept { return kind_ != GaugeKind::QuasiNorm; }

    double evaluate(std::span<const double> x) const;
    double evaluate(const RatVec& x) const;

    friend bool operator==(const Gauge& a, const Gauge& b) = default;

private:
    Gauge(GaugeKind k, std::size_t dim, double p) : kind_(k), dim_(dim), p_(p) {}

    GaugeKind kind_;
    std::size_t dim_;
    double p_;
    std::vector<RatVec> functionals_;
    std::vector<std::vector<double>> functionals_d_;
};

/// Nonzero x with max_i <f_i, x> <= 0, if one exists.
std::optional<RatVec> polyhedral_gauge_defect(std::span<const RatVec> functionals);

inline constexpr double kOnSphereTolerance = 1e-9;
inline constexpr double kDegenerateThreshold = 1e-12;

/// A point of the Φ-sphere, |Φ(x) − 1| <= kOnSphereTolerance.
class SpherePoint {
public:
    /// Throws ArgumentError if coords are off the sphere of g.
    static SpherePoint on(const Gauge& g, std::vector<double> coords);

    const std::vector<double>& coords() const noexcept { return coords_; }
    std::size_t dim() const noexcept { return coords_.size(); }

private:
    explicit SpherePoint(std::vector<double> c) : coords_(std::move(c)) {}
    std::vector<double> coords_;
    friend std::optional<SpherePoint> project(const Gauge&, std::span<const double>);
};

/// ρ(x) = x / Φ(x); nullopt stands for ρ(o) = o.
std::optional<SpherePoint> project(const Gauge& g, std::span<const double> x);
std::optional<SpherePoint> project(const Gauge& g, const RatVec& x);

/// ρ(Σ w_i x_i). Weights must be nonnegative and sum to 1 within 1e-12.
/// Throws DegenerateCombinationError when the combination is numerically o.
SpherePoint scomb(const Gauge& g, std::span<const SpherePoint> points, std::span<const double> weights);

}  // namespace sconv
