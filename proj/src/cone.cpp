#include "sconv/cone.hpp"

#include <algorithm>
#include <random>
#include <string>

#include "sconv/errors.hpp"
#include "sconv/lp.hpp"

namespace sconv {

ConeVRep::ConeVRep(std::vector<RatVec> generators) : gens_(std::move(generators)) {
    if (gens_.empty()) throw ArgumentError("a cone needs at least one generator");
    const std::size_t n = common_dimension(gens_);
    if (n < 2) throw ArgumentError("ambient dimension must be at least 2");
    for (std::size_t i = 0; i < gens_.size(); ++i)
        if (gens_[i].is_zero()) throw ArgumentError("generator " + std::to_string(i) + " is the zero vector");
}

namespace {

void require_dim(const ConeVRep& k, const RatVec& x) {
    if (x.size() != k.dim())
        throw ArgumentError("vector of length " + std::to_string(x.size()) + " tested against a cone in dimension " +
                            std::to_string(k.dim()));
}

// Equality rows Σ_i λ_i g_i = x written over `offset` + generator variables.
void add_combination_rows(lp::LinProgram& prog, const ConeVRep& k, std::size_t offset, const RatVec& x) {
    for (std::size_t c = 0; c < k.dim(); ++c) {
        RatVec row(prog.num_vars());
        for (std::size_t i = 0; i < k.size(); ++i) row[offset + i] = k[i][c];
        prog.add(std::move(row), lp::Relation::Eq, x[c]);
    }
}

std::vector<Rat> slice(const RatVec& v, std::size_t from, std::size_t count) {
    return {v.coords().begin() + static_cast<std::ptrdiff_t>(from),
            v.coords().begin() + static_cast<std::ptrdiff_t>(from + count)};
}

bool in_some_cone(std::span<const ConeVRep> cones, const RatVec& x) {
    return std::any_of(cones.begin(), cones.end(), [&](const ConeVRep& k) { return membership(k, x).has_value(); });
}

// Counter-clockwise angular order in the plane starting from the positive x-axis.
bool angle_less(const RatVec& a, const RatVec& b) {
    auto half = [](const RatVec& v) { return (v[1] < 0 || (v[1] == 0 && v[0] < 0)) ? 1 : 0; };
    const int ha = half(a), hb = half(b);
    if (ha != hb) return ha < hb;
    return a[0] * b[1] - a[1] * b[0] > 0;
}

std::vector<RatVec> planar_sweep_candidates(std::span<const ConeVRep> cones) {
    std::vector<RatVec> dirs;
    for (const auto& k : cones)
        for (const auto& g : k.generators()) {
            dirs.push_back(g);
            dirs.push_back(-g);
        }
    std::sort(dirs.begin(), dirs.end(), angle_less);
    std::vector<RatVec> uniq;
    for (auto& d : dirs)
        if (uniq.empty() || !same_ray(uniq.back(), d)) uniq.push_back(std::move(d));
    if (uniq.size() > 1 && same_ray(uniq.front(), uniq.back())) uniq.pop_back();

    // Each cone's membership is constant on the open arcs between consecutive
    // critical directions, so the directions plus one interior ray per arc
    // decide coverage.
    std::vector<RatVec> out;
    for (std::size_t i = 0; i < uniq.size(); ++i) {
        const RatVec& a = uniq[i];
        const RatVec& b = uniq[(i + 1) % uniq.size()];
        out.push_back(a);
        if (a[0] * b[1] - a[1] * b[0] > 0)
            out.push_back(a + b);
        else
            out.push_back(RatVec{-a[1], a[0]});
    }
    return out;
}

}  // namespace

std::optional<std::vector<Rat>> membership(const ConeVRep& k, const RatVec& x) {
    require_dim(k, x);
    if (x.is_zero()) return std::vector<Rat>(k.size());
    lp::LinProgram prog(k.size());
    add_combination_rows(prog, k, 0, x);
    auto out = lp::solve(prog);
    if (!out.feasible()) return std::nullopt;
    return out.solution->coords();
}

std::optional<RatVec> farkas_separator(const ConeVRep& k, const RatVec& x) {
    require_dim(k, x);
    lp::LinProgram prog(k.dim());
    prog.set_all_free();
    for (const auto& g : k.generators()) prog.add(g, lp::Relation::GreaterEq, 0);
    prog.add(x, lp::Relation::LessEq, -1);
    auto out = lp::solve(prog);
    if (!out.feasible()) return std::nullopt;
    return out.solution;
}

std::optional<RatVec> strict_separator(std::span<const RatVec> points) {
    const std::size_t n = common_dimension(points);
    // Variables: u (free) then t >= |u| componentwise; minimize Σ t.
    lp::LinProgram prog(2 * n);
    for (std::size_t j = 0; j < n; ++j) prog.set_bound(j, lp::Bound::Free);
    for (const auto& p : points) {
        RatVec row(2 * n);
        for (std::size_t j = 0; j < n; ++j) row[j] = p[j];
        prog.add(std::move(row), lp::Relation::GreaterEq, 1);
    }
    for (std::size_t j = 0; j < n; ++j) {
        RatVec plus(2 * n), minus(2 * n);
        plus[n + j] = 1;
        plus[j] = -1;
        minus[n + j] = 1;
        minus[j] = 1;
        prog.add(std::move(plus), lp::Relation::GreaterEq, 0);
        prog.add(std::move(minus), lp::Relation::GreaterEq, 0);
    }
    RatVec cost(2 * n);
    for (std::size_t j = 0; j < n; ++j) cost[n + j] = 1;
    prog.minimize(std::move(cost));
    auto out = lp::solve(prog);
    if (out.status != lp::Status::Optimal) return std::nullopt;
    return RatVec(slice(*out.solution, 0, n));
}

std::optional<std::vector<Rat>> zero_convex_combination(std::span<const RatVec> points) {
    const std::size_t n = common_dimension(points);
    const std::size_t k = points.size();
    lp::LinProgram prog(k);
    prog.add(RatVec(std::vector<Rat>(k, Rat(1))), lp::Relation::Eq, 1);
    for (std::size_t c = 0; c < n; ++c) {
        RatVec row(k);
        for (std::size_t i = 0; i < k; ++i) row[i] = points[i][c];
        prog.add(std::move(row), lp::Relation::Eq, 0);
    }
    auto out = lp::solve(prog);
    if (!out.feasible()) return std::nullopt;
    return out.solution->coords();
}

Pointedness is_pointed(const ConeVRep& k) {
    if (auto u = strict_separator(k.generators())) return {true, StrictWitness{std::move(*u)}};
    auto lambda = zero_convex_combination(k.generators());
    if (!lambda) throw InternalInconsistency("cone admits neither a strict separator nor a zero convex combination");
    std::size_t i = 0;
    while ((*lambda)[i] == 0) ++i;
    LineWitness w;
    w.x = k[i];
    w.plus_coeffs.assign(k.size(), Rat(0));
    w.plus_coeffs[i] = 1;
    w.minus_coeffs.resize(k.size());
    for (std::size_t j = 0; j < k.size(); ++j) w.minus_coeffs[j] = j == i ? Rat(0) : Rat((*lambda)[j] / (*lambda)[i]);
    return {false, std::move(w)};
}

std::vector<std::size_t> extreme_rays(const ConeVRep& k) {
    if (!is_pointed(k).pointed) throw PreconditionError("extreme rays requested for a cone that contains a line");
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < k.size(); ++i) {
        bool duplicate = false;
        for (std::size_t j = 0; j < i && !duplicate; ++j) duplicate = same_ray(k[j], k[i]);
        if (duplicate) continue;
        std::vector<RatVec> others;
        for (std::size_t j = 0; j < k.size(); ++j)
            if (!same_ray(k[j], k[i])) others.push_back(k[j]);
        if (others.empty() || !membership(ConeVRep(std::move(others)), k[i])) out.push_back(i);
    }
    return out;
}

ConicDecomposition conic_caratheodory(const ConeVRep& k, const RatVec& x) {
    require_dim(k, x);
    if (x.is_zero()) throw PreconditionError("conic decomposition of the origin");
    lp::LinProgram prog(k.size());
    add_combination_rows(prog, k, 0, x);
    auto out = lp::basic_solution(prog);
    if (!out.feasible()) throw PreconditionError("vector " + to_string(x) + " is not in the cone");
    ConicDecomposition d;
    for (std::size_t i = 0; i < k.size(); ++i)
        if ((*out.solution)[i] != 0) {
            d.indices.push_back(i);
            d.coeffs.push_back((*out.solution)[i]);
        }
    return d;
}

std::optional<IntersectionWitness> intersect_nontrivial(std::span<const ConeVRep> cones) {
    if (cones.empty()) throw PreconditionError("intersection of an empty family");
    const std::size_t n = cones.front().dim();
    std::size_t total = 0;
    std::vector<std::size_t> offset;
    for (const auto& k : cones) {
        if (k.dim() != n) throw PreconditionError("cones of mixed dimension");
        if (!is_pointed(k).pointed) throw PreconditionError("intersection requires pointed cones");
        offset.push_back(total);
        total += k.size();
    }
    // Σλ^(1) = 1 is a valid normalization because o ∉ conv(generators of a pointed cone).
    lp::LinProgram prog(total);
    {
        RatVec row(total);
        for (std::size_t i = 0; i < cones[0].size(); ++i) row[i] = 1;
        prog.add(std::move(row), lp::Relation::Eq, 1);
    }
    for (std::size_t c = 1; c < cones.size(); ++c)
        for (std::size_t d = 0; d < n; ++d) {
            RatVec row(total);
            for (std::size_t i = 0; i < cones[0].size(); ++i) row[i] = cones[0][i][d];
            for (std::size_t i = 0; i < cones[c].size(); ++i) row[offset[c] + i] = -cones[c][i][d];
            prog.add(std::move(row), lp::Relation::Eq, 0);
        }
    auto out = lp::solve(prog);
    if (!out.feasible()) return std::nullopt;

    IntersectionWitness w;
    for (std::size_t c = 0; c < cones.size(); ++c) w.coeffs.push_back(slice(*out.solution, offset[c], cones[c].size()));
    w.x = linear_combination(cones[0].generators(), w.coeffs[0]);
    return w;
}

const char* to_string(Coverage c) {
    return c == Coverage::NotCovered ? "not-covered" : "covered-not-falsified";
}

CoverageResult covers_space(std::span<const ConeVRep> cones, std::size_t samples, std::uint64_t seed) {
    if (cones.empty()) throw PreconditionError("coverage of an empty family");
    const std::size_t n = cones.front().dim();
    for (const auto& k : cones)
        if (k.dim() != n) throw PreconditionError("cones of mixed dimension");

    CoverageResult res{Coverage::CoveredNotFalsified, n == 2, std::nullopt, {}, 0};
    auto found = [&](const RatVec& x) {
        ++res.candidates_checked;
        if (in_some_cone(cones, x)) return false;
        res.verdict = Coverage::NotCovered;
        res.exact = true;
        res.witness = x;
        for (const auto& k : cones) {
            auto y = farkas_separator(k, x);
            if (!y) throw InternalInconsistency("non-member without a Farkas separator");
            res.separators.push_back(std::move(*y));
        }
        return true;
    };

    for (const auto& k : cones)
        for (const auto& g : k.generators())
            if (found(-g)) return res;

    if (n == 2) {
        for (const auto& d : planar_sweep_candidates(cones))
            if (found(d)) return res;
        return res;
    }

    std::vector<RatVec> pool;
    for (const auto& k : cones)
        for (const auto& g : k.generators()) pool.push_back(g);
    for (const auto& g : pool)
        if (found(g)) return res;
    for (std::size_t a = 0; a < pool.size(); ++a)
        for (std::size_t b = a + 1; b < pool.size(); ++b) {
            RatVec s = pool[a] + pool[b];
            if (s.is_zero()) continue;
            if (found(s) || found(-s)) return res;
        }
    for (std::size_t j = 0; j < n; ++j) {
        const RatVec e = RatVec::unit(n, j);
        if (found(e) || found(-e)) return res;
    }
    std::mt19937_64 rng(seed);
    for (std::size_t s = 0; s < samples; ++s) {
        RatVec x(n);
        do {
            for (std::size_t j = 0; j < n; ++j) x[j] = static_cast<long>(rng() % 2001) - 1000;
        } while (x.is_zero());
        if (found(x)) return res;
    }
    return res;
}

std::optional<std::vector<Rat>> barycentric_origin(std::span<const RatVec> us) {
    if (us.empty()) throw PreconditionError("barycentric_origin needs n+1 vectors");
    const std::size_t n = common_dimension(us);
    if (us.size() != n + 1)
        throw PreconditionError("barycentric_origin needs exactly n+1 = " + std::to_string(n + 1) + " vectors");
    if (!affinely_independent(us)) throw PreconditionError("vectors are not affinely independent");

    // Variables λ_1..λ_{n+1} >= 0 and a free t; maximize t with λ_l >= t.
    const std::size_t m = n + 1;
    lp::LinProgram prog(m + 1);
    prog.set_bound(m, lp::Bound::Free);
    {
        RatVec row(m + 1);
        for (std::size_t l = 0; l < m; ++l) row[l] = 1;
        prog.add(std::move(row), lp::Relation::Eq, 1);
    }
    for (std::size_t c = 0; c < n; ++c) {
        RatVec row(m + 1);
        for (std::size_t l = 0; l < m; ++l) row[l] = us[l][c];
        prog.add(std::move(row), lp::Relation::Eq, 0);
    }
    for (std::size_t l = 0; l < m; ++l) {
        RatVec row(m + 1);
        row[l] = 1;
        row[m] = -1;
        prog.add(std::move(row), lp::Relation::GreaterEq, 0);
    }
    prog.maximize(RatVec::unit(m + 1, m));
    auto out = lp::solve(prog);
    if (out.status != lp::Status::Optimal || *out.objective_value <= 0) return std::nullopt;
    return slice(*out.solution, 0, m);
}

ConeVRep qi_cone(std::span<const RatVec> us, std::size_t i) {
    if (i >= us.size()) throw ArgumentError("Q_i index out of range");
    std::vector<RatVec> gens;
    for (std::size_t l = 0; l < us.size(); ++l)
        if (l != i) gens.push_back(us[l]);
    return ConeVRep(std::move(gens));
}

QiDecomposition qi_decomposition(std::span<const RatVec> us, std::span<const Rat> lambda_bar, const RatVec& x) {
    if (us.empty()) throw PreconditionError("qi_decomposition needs n+1 vectors");
    const std::size_t n = common_dimension(us);
    if (us.size() != n + 1) throw PreconditionError("qi_decomposition needs exactly n+1 vectors");
    if (x.size() != n) throw ArgumentError("point has the wrong dimension");
    if (!affinely_independent(us)) throw PreconditionError("vectors are not affinely independent");
    if (lambda_bar.size() != us.size()) throw PreconditionError("lambda_bar has the wrong length");
    Rat total = 0;
    for (const auto& l : lambda_bar) {
        if (l <= 0) throw PreconditionError("lambda_bar must be strictly positive");
        total += l;
    }
    if (total != 1 || !linear_combination(us, lambda_bar).is_zero())
        throw PreconditionError("lambda_bar does not express the origin as a convex combination");

    auto sol = solve_linear(RatMat::from_columns(us), x);
    if (!sol) throw InternalInconsistency("affinely independent (n+1)-family fails to span");
    const RatVec& lambda = sol->particular;

    std::size_t j = 0;
    Rat alpha = lambda[0] / lambda_bar[0];
    for (std::size_t l = 1; l < us.size(); ++l) {
        Rat r = lambda[l] / lambda_bar[l];
        if (r < alpha) {
            alpha = r;
            j = l;
        }
    }
    QiDecomposition d{j, {}};
    d.mu.reserve(us.size());
    for (std::size_t l = 0; l < us.size(); ++l) d.mu.push_back(lambda[l] - alpha * lambda_bar[l]);
    return d;
}

}  // namespace sconv
