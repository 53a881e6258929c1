#include "sconv/lp.hpp"

#include <algorithm>
#include <string>

#include "sconv/errors.hpp"

namespace sconv::lp {

const char* to_string(Status s) {
    switch (s) {
        case Status::Optimal: return "optimal";
        case Status::Feasible: return "feasible";
        case Status::Infeasible: return "infeasible";
        case Status::Unbounded: return "unbounded";
    }
    return "?";
}

LinProgram::LinProgram(std::size_t num_vars) : bounds_(num_vars, Bound::NonNegative) {}

LinProgram& LinProgram::maximize(RatVec objective) {
    if (objective.size() != num_vars()) throw ArgumentError("objective length differs from variable count");
    for (std::size_t j = 0; j < objective.size(); ++j) objective[j].canonicalize();
    objective_ = std::move(objective);
    return *this;
}

LinProgram& LinProgram::minimize(RatVec objective) { return maximize(-std::move(objective)); }

LinProgram& LinProgram::add(RatVec coeffs, Relation rel, Rat rhs) {
    if (coeffs.size() != num_vars())
        throw ArgumentError("constraint has " + std::to_string(coeffs.size()) + " coefficients, expected " +
                            std::to_string(num_vars()));
    // mpq equality assumes canonical operands; inputs built from (p, q) pairs may not be.
    for (std::size_t j = 0; j < coeffs.size(); ++j) coeffs[j].canonicalize();
    rhs.canonicalize();
    constraints_.push_back({std::move(coeffs), rel, std::move(rhs)});
    return *this;
}

LinProgram& LinProgram::set_bound(std::size_t var, Bound b) {
    bounds_.at(var) = b;
    return *this;
}

LinProgram& LinProgram::set_all_free() {
    std::fill(bounds_.begin(), bounds_.end(), Bound::Free);
    return *this;
}

bool LinProgram::satisfied_by(const RatVec& x) const {
    if (x.size() != num_vars()) return false;
    for (std::size_t j = 0; j < num_vars(); ++j)
        if (bounds_[j] == Bound::NonNegative && x[j] < 0) return false;
    for (const auto& c : constraints_) {
        const Rat lhs = dot(c.coeffs, x);
        switch (c.rel) {
            case Relation::LessEq:
                if (lhs > c.rhs) return false;
                break;
            case Relation::Eq:
                if (lhs != c.rhs) return false;
                break;
            case Relation::GreaterEq:
                if (lhs < c.rhs) return false;
                break;
        }
    }
    return true;
}

namespace {

// Dense tableau in standard form: maximize c·x s.t. T·x = rhs, x >= 0.
class Tableau {
public:
    Tableau(const LinProgram& p) : prog_(p) {
        const std::size_t n = p.num_vars();
        for (std::size_t j = 0; j < n; ++j) {
            pos_.push_back(ncols_++);
            neg_.push_back(p.bounds()[j] == Bound::Free ? ncols_++ : npos);
        }
        structural_ = ncols_;
        const auto& cons = p.constraints();
        std::vector<std::size_t> slack(cons.size(), npos);
        for (std::size_t i = 0; i < cons.size(); ++i)
            if (cons[i].rel != Relation::Eq) slack[i] = ncols_++;
        first_artificial_ = ncols_;
        ncols_ += cons.size();

        rows_.assign(cons.size(), std::vector<Rat>(ncols_ + 1));
        basis_.resize(cons.size());
        for (std::size_t i = 0; i < cons.size(); ++i) {
            auto& row = rows_[i];
            for (std::size_t j = 0; j < n; ++j) {
                row[pos_[j]] = cons[i].coeffs[j];
                if (neg_[j] != npos) row[neg_[j]] = -cons[i].coeffs[j];
            }
            if (slack[i] != npos) row[slack[i]] = cons[i].rel == Relation::LessEq ? 1 : -1;
            row[ncols_] = cons[i].rhs;
            if (cons[i].rhs < 0)
                for (auto& x : row) x = -x;
            row[first_artificial_ + i] = 1;
            basis_[i] = first_artificial_ + i;
        }
    }

    LpOutcome run() {
        // Phase 1: maximize -(sum of artificials).
        reduced_.assign(ncols_ + 1, Rat(0));
        for (const auto& row : rows_)
            for (std::size_t j = 0; j < ncols_ + 1; ++j)
                if (j < first_artificial_ || j == ncols_) reduced_[j] += row[j];
        allow_artificial_ = true;
        iterate();  // phase 1 is bounded below by zero
        if (-reduced_[ncols_] < 0) return LpOutcome{Status::Infeasible, {}, {}, {}, {}};

        drive_out_artificials();
        allow_artificial_ = false;

        if (!prog_.objective()) return outcome(Status::Feasible);

        const RatVec& c = *prog_.objective();
        cost_.assign(ncols_, Rat(0));
        for (std::size_t j = 0; j < prog_.num_vars(); ++j) {
            cost_[pos_[j]] = c[j];
            if (neg_[j] != npos) cost_[neg_[j]] = -c[j];
        }
        reduced_.assign(ncols_ + 1, Rat(0));
        for (std::size_t j = 0; j < ncols_; ++j) reduced_[j] = cost_[j];
        for (std::size_t i = 0; i < rows_.size(); ++i) {
            const Rat& cb = cost_[basis_[i]];
            if (cb == 0) continue;
            for (std::size_t j = 0; j <= ncols_; ++j) reduced_[j] -= cb * rows_[i][j];
        }
        if (auto unbounded_col = iterate()) {
            LpOutcome out = outcome(Status::Unbounded);
            std::vector<Rat> dir(ncols_);
            dir[*unbounded_col] = 1;
            for (std::size_t i = 0; i < rows_.size(); ++i) dir[basis_[i]] = -rows_[i][*unbounded_col];
            out.ray = to_original(dir);
            out.objective_value.reset();
            return out;
        }
        return outcome(Status::Optimal);
    }

private:
    static constexpr std::size_t npos = static_cast<std::size_t>(-1);

    bool may_enter(std::size_t j) const { return allow_artificial_ || j < first_artificial_; }

    // Runs Bland's-rule simplex to optimality. Returns the entering column if
    // an unbounded direction is detected.
    std::optional<std::size_t> iterate() {
        for (;;) {
            std::size_t enter = npos;
            for (std::size_t j = 0; j < ncols_; ++j)
                if (may_enter(j) && reduced_[j] > 0) {
                    enter = j;
                    break;
                }
            if (enter == npos) return std::nullopt;

            std::size_t leave = npos;
            Rat best;
            for (std::size_t i = 0; i < rows_.size(); ++i) {
                if (rows_[i][enter] <= 0) continue;
                Rat ratio = rows_[i][ncols_] / rows_[i][enter];
                if (leave == npos || ratio < best || (ratio == best && basis_[i] < basis_[leave])) {
                    leave = i;
                    best = std::move(ratio);
                }
            }
            if (leave == npos) return enter;
            pivot(leave, enter);
        }
    }

    void pivot(std::size_t r, std::size_t col) {
        auto& prow = rows_[r];
        const Rat p = prow[col];
        for (auto& x : prow) x /= p;
        for (std::size_t i = 0; i < rows_.size(); ++i) {
            if (i == r || rows_[i][col] == 0) continue;
            const Rat f = rows_[i][col];
            for (std::size_t j = 0; j <= ncols_; ++j)
                if (prow[j] != 0) rows_[i][j] -= f * prow[j];
        }
        if (reduced_[col] != 0) {
            const Rat f = reduced_[col];
            for (std::size_t j = 0; j <= ncols_; ++j)
                if (prow[j] != 0) reduced_[j] -= f * prow[j];
        }
        basis_[r] = col;
    }

    // After a successful phase 1 every artificial still in the basis sits at
    // zero. Pivot it out, or drop its row when the row is redundant.
    void drive_out_artificials() {
        for (std::size_t i = 0; i < rows_.size();) {
            if (basis_[i] < first_artificial_) {
                ++i;
                continue;
            }
            std::size_t col = npos;
            for (std::size_t j = 0; j < first_artificial_; ++j)
                if (rows_[i][j] != 0) {
                    col = j;
                    break;
                }
            if (col != npos) {
                pivot(i, col);
                ++i;
            } else {
                rows_.erase(rows_.begin() + static_cast<std::ptrdiff_t>(i));
                basis_.erase(basis_.begin() + static_cast<std::ptrdiff_t>(i));
            }
        }
    }

    RatVec to_original(const std::vector<Rat>& std_x) const {
        RatVec x(prog_.num_vars());
        for (std::size_t j = 0; j < prog_.num_vars(); ++j) {
            x[j] = std_x[pos_[j]];
            if (neg_[j] != npos) x[j] -= std_x[neg_[j]];
        }
        return x;
    }

    LpOutcome outcome(Status s) const {
        std::vector<Rat> std_x(ncols_);
        for (std::size_t i = 0; i < rows_.size(); ++i) std_x[basis_[i]] = rows_[i][ncols_];
        LpOutcome out;
        out.status = s;
        out.solution = to_original(std_x);
        std::vector<std::size_t> basic;
        for (std::size_t j = 0; j < prog_.num_vars(); ++j) {
            const bool b = std::find(basis_.begin(), basis_.end(), pos_[j]) != basis_.end() ||
                           (neg_[j] != npos && std::find(basis_.begin(), basis_.end(), neg_[j]) != basis_.end());
            if (b) basic.push_back(j);
        }
        out.basis = std::move(basic);
        if (prog_.objective()) out.objective_value = dot(*prog_.objective(), *out.solution);
        return out;
    }

    const LinProgram& prog_;
    std::vector<std::size_t> pos_, neg_;
    std::size_t ncols_ = 0;
    std::size_t structural_ = 0;
    std::size_t first_artificial_ = 0;
    std::vector<std::vector<Rat>> rows_;
    std::vector<std::size_t> basis_;
    std::vector<Rat> reduced_;
    std::vector<Rat> cost_;
    bool allow_artificial_ = true;
};

}  // namespace

LpOutcome solve(const LinProgram& p) {
    for (const auto& c : p.constraints())
        if (c.coeffs.size() != p.num_vars()) throw ArgumentError("constraint length mismatch");
    Tableau t(p);
    LpOutcome out = t.run();
    if (out.status != Status::Infeasible && !p.satisfied_by(*out.solution))
        throw InternalInconsistency("simplex returned a point violating the program");
    return out;
}

LpOutcome basic_solution(const LinProgram& p) {
    for (auto b : p.bounds())
        if (b != Bound::NonNegative) throw ArgumentError("basic_solution requires nonnegative variables");
    for (const auto& c : p.constraints())
        if (c.rel != Relation::Eq) throw ArgumentError("basic_solution requires equality constraints");
    return solve(p);
}

}  // namespace sconv::lp
