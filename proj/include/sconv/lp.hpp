#pragma once

// Exact two-phase simplex over the rationals with Bland's pivoting rule.
//
// Contract for callers: the solver never sees strict inequalities. Wherever a
// cone argument needs "<x, u> > 0" it is rescaled to "<x, u> >= 1", which is
// legitimate because cones are invariant under positive scaling.

#include <cstddef>
#include <optional>
#include <vector>

#include "sconv/linalg.hpp"

namespace sconv::lp {

enum class Relation { LessEq, Eq, GreaterEq };
enum class Bound { NonNegative, Free };
enum class Status { Optimal, Feasible, Infeasible, Unbounded };

const char* to_string(Status s);

struct Constraint {
    RatVec coeffs;
    Relation rel;
    Rat rhs;
};

class LinProgram {
public:
    explicit LinProgram(std::size_t num_vars);

    std::size_t num_vars() const noexcept { return bounds_.size(); }

    /// Objective is maximized. Without one the program is a pure feasibility problem.
    LinProgram& maximize(RatVec objective);
    LinProgram& minimize(RatVec objective);
    LinProgram& add(RatVec coeffs, Relation rel, Rat rhs);
    LinProgram& set_bound(std::size_t var, Bound b);
    LinProgram& set_all_free();

    const std::optional<RatVec>& objective() const noexcept { return objective_; }
    const std::vector<Constraint>& constraints() const noexcept { return constraints_; }
    const std::vector<Bound>& bounds() const noexcept { return bounds_; }

    /// True iff x satisfies every constraint and bound exactly.
    bool satisfied_by(const RatVec& x) const;

private:
    std::optional<RatVec> objective_;
    std::vector<Constraint> constraints_;
    std::vector<Bound> bounds_;
};

struct LpOutcome {
    Status status = Status::Infeasible;
    std::optional<RatVec> solution;
    /// Original variables that are basic in the final tableau, ascending.
    std::optional<std::vector<std::size_t>> basis;
    std::optional<Rat> objective_value;
    /// For Unbounded: a direction d with the program feasible along x + t·d
    /// and strictly improving the objective.
    std::optional<RatVec> ray;

    bool feasible() const noexcept {
        return status == Status::Optimal || status == Status::Feasible || status == Status::Unbounded;
    }
};

/// Throws ArgumentError when a constraint has the wrong number of coefficients.
LpOutcome solve(const LinProgram& p);

/// Basic feasible solution of {A·x = b, x >= 0}. The nonzero entries of the
/// returned solution sit on linearly independent columns of A. Requires every
/// variable nonnegative and every constraint an equality (ArgumentError
/// otherwise); infeasibility is reported through the status.
LpOutcome basic_solution(const LinProgram& p);

}  // namespace sconv::lp
