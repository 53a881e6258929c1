#include "sconv/gauge.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "sconv/errors.hpp"
#include "sconv/lp.hpp"

namespace sconv {

const char* to_string(GaugeKind k) {
    switch (k) {
        case GaugeKind::Euclidean: return "euclidean";
        case GaugeKind::PNorm: return "pnorm";
        case GaugeKind::QuasiNorm: return "quasinorm";
        case GaugeKind::Polyhedral: return "polyhedral";
    }
    return "?";
}

namespace {

void require_dim(std::size_t dim) {
    if (dim < 2) throw ArgumentError("ambient dimension must be at least 2, got " + std::to_string(dim));
}

}  // namespace

Gauge Gauge::euclidean(std::size_t dim) {
    require_dim(dim);
    return Gauge(GaugeKind::Euclidean, dim, 2.0);
}

Gauge Gauge::pnorm(std::size_t dim, double p) {
    require_dim(dim);
    if (!(p >= 1.0) || !std::isfinite(p)) throw ArgumentError("pnorm gauge needs finite p >= 1");
    return Gauge(GaugeKind::PNorm, dim, p);
}

Gauge Gauge::quasinorm(std::size_t dim, double p) {
    require_dim(dim);
    if (!(p > 0.0 && p < 1.0)) throw ArgumentError("quasinorm gauge needs 0 < p < 1");
    return Gauge(GaugeKind::QuasiNorm, dim, p);
}

std::optional<RatVec> polyhedral_gauge_defect(std::span<const RatVec> functionals) {
    const std::size_t n = common_dimension(functionals);
    // A nonzero x with Fx <= 0 has some coordinate of some sign; rescale it to 1.
    for (std::size_t axis = 0; axis < n; ++axis) {
        for (int sign : {1, -1}) {
            lp::LinProgram prog(n);
            prog.set_all_free();
            for (const auto& f : functionals) prog.add(f, lp::Relation::LessEq, 0);
            prog.add(Rat(sign) * RatVec::unit(n, axis), lp::Relation::GreaterEq, 1);
            auto out = lp::solve(prog);
            if (out.feasible()) return out.solution;
        }
    }
    return std::nullopt;
}

Gauge Gauge::polyhedral(std::vector<RatVec> functionals) {
    if (functionals.empty()) throw ArgumentError("polyhedral gauge needs at least one functional");
    const std::size_t n = common_dimension(functionals);
    require_dim(n);
    if (auto x = polyhedral_gauge_defect(functionals))
        throw ArgumentError("polyhedral gauge vanishes or is negative at nonzero x = " + to_string(*x));
    Gauge g(GaugeKind::Polyhedral, n, 0.0);
    for (const auto& f : functionals) g.functionals_d_.push_back(f.to_doubles());
    g.functionals_ = std::move(functionals);
    return g;
}

double Gauge::evaluate(std::span<const double> x) const {
    if (x.size() != dim_)
        throw ArgumentError("gauge of dimension " + std::to_string(dim_) + " applied to a vector of length " +
                            std::to_string(x.size()));
    switch (kind_) {
        case GaugeKind::Euclidean: {
            double scale = 0.0;
            for (double v : x) scale = std::max(scale, std::abs(v));
            if (scale == 0.0) return 0.0;
            double s = 0.0;
            for (double v : x) s += (v / scale) * (v / scale);
            return scale * std::sqrt(s);
        }
        case GaugeKind::PNorm:
        case GaugeKind::QuasiNorm: {
            double scale = 0.0;
            for (double v : x) scale = std::max(scale, std::abs(v));
            if (scale == 0.0) return 0.0;
            double s = 0.0;
            for (double v : x) s += std::pow(std::abs(v) / scale, p_);
            return scale * std::pow(s, 1.0 / p_);
        }
        case GaugeKind::Polyhedral: {
            double best = -std::numeric_limits<double>::infinity();
            for (const auto& f : functionals_d_) {
                double s = 0.0;
                for (std::size_t i = 0; i < dim_; ++i) s += f[i] * x[i];
                best = std::max(best, s);
            }
            return std::max(best, 0.0);
        }
    }
    return 0.0;
}

double Gauge::evaluate(const RatVec& x) const {
    const auto d = x.to_doubles();
    return evaluate(std::span<const double>(d));
}

SpherePoint SpherePoint::on(const Gauge& g, std::vector<double> coords) {
    const double phi = g.evaluate(coords);
    if (std::abs(phi - 1.0) > kOnSphereTolerance)
        throw ArgumentError("point is not on the gauge sphere (gauge value " + std::to_string(phi) + ")");
    return SpherePoint(std::move(coords));
}

std::optional<SpherePoint> project(const Gauge& g, std::span<const double> x) {
    const double phi = g.evaluate(x);
    if (phi == 0.0) return std::nullopt;
    std::vector<double> out(x.begin(), x.end());
    for (auto& v : out) v /= phi;
    return SpherePoint(std::move(out));
}

std::optional<SpherePoint> project(const Gauge& g, const RatVec& x) {
    if (x.is_zero()) return std::nullopt;
    const auto d = x.to_doubles();
    return project(g, std::span<const double>(d));
}

SpherePoint scomb(const Gauge& g, std::span<const SpherePoint> points, std::span<const double> weights) {
    if (points.empty()) throw ArgumentError("s-convex combination of no points");
    if (points.size() != weights.size()) throw ArgumentError("point and weight counts differ");
    double total = 0.0;
    for (double w : weights) {
        if (!(w >= 0.0)) throw ArgumentError("s-convex combination weights must be nonnegative");
        total += w;
    }
    if (std::abs(total - 1.0) > 1e-12) throw ArgumentError("s-convex combination weights must sum to 1");

    std::vector<double> sum(g.dim(), 0.0);
    double scale = 0.0;
    for (std::size_t k = 0; k < points.size(); ++k) {
        const auto& c = points[k].coords();
        if (c.size() != g.dim()) throw ArgumentError("sphere point of the wrong dimension");
        double inf_norm = 0.0;
        for (std::size_t i = 0; i < c.size(); ++i) {
            sum[i] += weights[k] * c[i];
            inf_norm = std::max(inf_norm, std::abs(c[i]));
        }
        scale += weights[k] * inf_norm;
    }
    const double phi = g.evaluate(sum);
    if (phi < kDegenerateThreshold * scale || phi == 0.0)
        throw DegenerateCombinationError("s-convex combination collapses to the origin");
    return *project(g, sum);
}

}  // namespace sconv
