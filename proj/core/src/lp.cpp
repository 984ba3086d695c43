#include "hedonic/lp.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <ostream>
#include <stdexcept>
#include <string>

#include "hedonic/errors.hpp"

namespace hedonic {

void LinearProgram::validate() const {
    if (objective.empty())
        throw std::invalid_argument("linear program has no variables");
    if (variable_count() > kMaxVariables)
        throw LimitExceededError("linear program exceeds " +
                                 std::to_string(kMaxVariables) + " variables");
    if (constraints.size() > kMaxConstraints)
        throw LimitExceededError("linear program exceeds " +
                                 std::to_string(kMaxConstraints) + " constraints");
    for (double c : objective)
        if (!std::isfinite(c)) throw std::invalid_argument("non-finite objective");
    for (const LpConstraint& row : constraints) {
        if (row.coeffs.size() != variable_count())
            throw std::invalid_argument("constraint row length mismatch");
        if (!std::isfinite(row.rhs))
            throw std::invalid_argument("non-finite right-hand side");
        for (double c : row.coeffs)
            if (!std::isfinite(c))
                throw std::invalid_argument("non-finite constraint coefficient");
    }
}

namespace {

// Dense tableau for the split nonnegative form. Column layout:
// [2*nvars split variables][one slack/surplus per inequality row][artificials].
// The artificial block is trailing so phase 2 simply shrinks the active width.
class SimplexTableau {
public:
    SimplexTableau(const LinearProgram& lp, const LpOptions& opts)
        : lp_(lp), opts_(opts) {}

    LpSolution run() {
        build();
        if (!phase1()) return finish_failure();
        if (status_ == LpStatus::unbounded) return finish_failure();  // cannot happen cleanly
        if (status_ == LpStatus::infeasible) return finish_status();
        drop_artificials();
        if (!phase2()) return finish_failure();
        if (status_ == LpStatus::unbounded) return finish_status();
        return finish_optimal();
    }

private:
    void build() {
        const std::size_t nvars = lp_.variable_count();
        nsplit_ = 2 * nvars;
        std::size_t n_ineq = 0, n_art = 0;
        for (const LpConstraint& row : lp_.constraints) {
            Relation rel = row.rel;
            if (row.rhs < 0.0) rel = flip(rel);
            if (rel != Relation::eq) ++n_ineq;
            if (rel != Relation::le) ++n_art;
        }
        art_start_ = nsplit_ + n_ineq;
        total_cols_ = art_start_ + n_art;
        active_cols_ = total_cols_;

        const std::size_t m = lp_.constraints.size();
        tab_ = Matrix(m, total_cols_);
        rhs_.assign(m, 0.0);
        basis_.assign(m, 0);

        std::size_t next_ineq = nsplit_, next_art = art_start_;
        for (std::size_t i = 0; i < m; ++i) {
            const LpConstraint& row = lp_.constraints[i];
            const double sign = row.rhs < 0.0 ? -1.0 : 1.0;
            const Relation rel = sign < 0 ? flip(row.rel) : row.rel;
            for (std::size_t j = 0; j < nvars; ++j) {
                tab_(i, 2 * j) = sign * row.coeffs[j];
                tab_(i, 2 * j + 1) = -sign * row.coeffs[j];
            }
            rhs_[i] = sign * row.rhs;
            switch (rel) {
                case Relation::le:
                    tab_(i, next_ineq) = 1.0;
                    basis_[i] = static_cast<int>(next_ineq++);
                    break;
                case Relation::ge:
                    tab_(i, next_ineq++) = -1.0;
                    tab_(i, next_art) = 1.0;
                    basis_[i] = static_cast<int>(next_art++);
                    break;
                case Relation::eq:
                    tab_(i, next_art) = 1.0;
                    basis_[i] = static_cast<int>(next_art++);
                    break;
            }
        }
    }

    static Relation flip(Relation rel) {
        if (rel == Relation::le) return Relation::ge;
        if (rel == Relation::ge) return Relation::le;
        return Relation::eq;
    }

    // Reduced-cost row for cost vector c over the current basis:
    // obj_[j] = c_j - sum_i c_basis(i) * tab(i,j); obj_rhs_ = -objective.
    void price_out(const Vector& cost) {
        obj_ = cost;
        obj_rhs_ = 0.0;
        for (std::size_t i = 0; i < rows(); ++i) {
            const double cb = cost[static_cast<std::size_t>(basis_[i])];
            if (cb == 0.0) continue;
            for (std::size_t j = 0; j < total_cols_; ++j) obj_[j] -= cb * tab_(i, j);
            obj_rhs_ -= cb * rhs_[i];
        }
    }

    bool phase1() {
        Vector cost(total_cols_, 0.0);
        for (std::size_t j = art_start_; j < total_cols_; ++j) cost[j] = -1.0;
        price_out(cost);
        if (!iterate()) return false;
        // -objective accumulates in obj_rhs_, so obj_rhs_ equals the
        // artificial sum at the phase-1 optimum.
        if (obj_rhs_ > opts_.feasibility_tolerance) status_ = LpStatus::infeasible;
        return true;
    }

    void drop_artificials() {
        // Pivot basic artificials onto structural columns; rows with no
        // structural coefficient are redundant and removed.
        for (std::size_t i = 0; i < rows();) {
            if (static_cast<std::size_t>(basis_[i]) < art_start_) {
                ++i;
                continue;
            }
            std::size_t enter = total_cols_;
            for (std::size_t j = 0; j < art_start_; ++j) {
                if (std::abs(tab_(i, j)) > opts_.pivot_tolerance) {
                    enter = j;
                    break;
                }
            }
            if (enter == total_cols_) {
                erase_row(i);
                continue;
            }
            pivot(i, enter);
            ++i;
        }
        active_cols_ = art_start_;
    }

    bool phase2() {
        const std::size_t nvars = lp_.variable_count();
        Vector cost(total_cols_, 0.0);
        for (std::size_t j = 0; j < nvars; ++j) {
            cost[2 * j] = lp_.objective[j];
            cost[2 * j + 1] = -lp_.objective[j];
        }
        price_out(cost);
        return iterate();
    }

    // Bland's rule: entering = lowest improving column, leaving = lowest
    // ratio with ties to the lowest basis index. Returns false on iteration
    // cap; sets status_ on unboundedness.
    bool iterate() {
        for (;;) {
            std::size_t enter = active_cols_;
            for (std::size_t j = 0; j < active_cols_; ++j) {
                if (obj_[j] > opts_.pivot_tolerance) {
                    enter = j;
                    break;
                }
            }
            if (enter == active_cols_) return true;

            std::size_t leave = rows();
            double best_ratio = std::numeric_limits<double>::infinity();
            for (std::size_t i = 0; i < rows(); ++i) {
                const double a = tab_(i, enter);
                if (a <= opts_.pivot_tolerance) continue;
                const double ratio = std::max(rhs_[i], 0.0) / a;
                if (ratio < best_ratio ||
                    (ratio == best_ratio && leave < rows() &&
                     basis_[i] < basis_[leave])) {
                    best_ratio = ratio;
                    leave = i;
                }
            }
            if (leave == rows()) {
                status_ = LpStatus::unbounded;
                return true;
            }
            if (++iterations_ > opts_.max_iterations) return false;
            pivot(leave, enter);
            if (opts_.debug)
                *opts_.debug << iterations_ << ',' << enter << ','
                             << basis_[leave] << ',' << -obj_rhs_ << '\n';
        }
    }

    void pivot(std::size_t row, std::size_t col) {
        const double inv = 1.0 / tab_(row, col);
        for (std::size_t j = 0; j < total_cols_; ++j) tab_(row, j) *= inv;
        rhs_[row] *= inv;
        tab_(row, col) = 1.0;
        for (std::size_t i = 0; i < rows(); ++i) {
            if (i == row) continue;
            const double factor = tab_(i, col);
            if (factor == 0.0) continue;
            for (std::size_t j = 0; j < total_cols_; ++j)
                tab_(i, j) -= factor * tab_(row, j);
            tab_(i, col) = 0.0;
            rhs_[i] -= factor * rhs_[row];
        }
        const double ofactor = obj_[col];
        if (ofactor != 0.0) {
            for (std::size_t j = 0; j < total_cols_; ++j)
                obj_[j] -= ofactor * tab_(row, j);
            obj_[col] = 0.0;
            obj_rhs_ -= ofactor * rhs_[row];
        }
        basis_[row] = static_cast<int>(col);
    }

    void erase_row(std::size_t row) {
        const std::size_t last = rows() - 1;
        if (row != last) {
            for (std::size_t j = 0; j < total_cols_; ++j)
                tab_(row, j) = tab_(last, j);
            rhs_[row] = rhs_[last];
            basis_[row] = basis_[last];
        }
        rhs_.pop_back();
        basis_.pop_back();
    }

    std::size_t rows() const { return rhs_.size(); }

    Vector extract_point() const {
        Vector split(total_cols_, 0.0);
        for (std::size_t i = 0; i < rows(); ++i)
            split[static_cast<std::size_t>(basis_[i])] = rhs_[i];
        const std::size_t nvars = lp_.variable_count();
        Vector x(nvars, 0.0);
        for (std::size_t j = 0; j < nvars; ++j)
            x[j] = split[2 * j] - split[2 * j + 1];
        return x;
    }

    double max_violation(const Vector& x) const {
        double worst = 0.0;
        for (const LpConstraint& row : lp_.constraints) {
            double lhs = 0.0;
            for (std::size_t j = 0; j < x.size(); ++j) lhs += row.coeffs[j] * x[j];
            double v = 0.0;
            switch (row.rel) {
                case Relation::le: v = lhs - row.rhs; break;
                case Relation::ge: v = row.rhs - lhs; break;
                case Relation::eq: v = std::abs(lhs - row.rhs); break;
            }
            worst = std::max(worst, v);
        }
        return worst;
    }

    LpSolution finish_status() {
        return LpSolution{status_, {}, 0.0, iterations_};
    }

    LpSolution finish_failure() {
        return LpSolution{LpStatus::numerical_failure, {}, 0.0, iterations_};
    }

    LpSolution finish_optimal() {
        Vector x = extract_point();
        if (max_violation(x) > opts_.feasibility_tolerance)
            return finish_failure();
        double value = 0.0;
        for (std::size_t j = 0; j < x.size(); ++j)
            value += lp_.objective[j] * x[j];
        return LpSolution{LpStatus::optimal, std::move(x), value, iterations_};
    }

    const LinearProgram& lp_;
    const LpOptions& opts_;
    Matrix tab_;
    Vector rhs_;
    Vector obj_;
    double obj_rhs_ = 0.0;
    std::vector<int> basis_;
    std::size_t nsplit_ = 0, art_start_ = 0, total_cols_ = 0, active_cols_ = 0;
    std::size_t iterations_ = 0;
    LpStatus status_ = LpStatus::optimal;
};

}  // namespace

LpSolution solve_lp(const LinearProgram& lp, const LpOptions& opts) {
    lp.validate();
    return SimplexTableau(lp, opts).run();
}

std::optional<Vector> check_feasible_equalities(const Matrix& a, const Vector& b,
                                                const LpOptions& opts) {
    if (a.rows() != b.size())
        throw std::invalid_argument("matrix/vector size mismatch");
    LinearProgram lp;
    lp.objective.assign(a.cols(), 0.0);
    lp.constraints.reserve(a.rows());
    for (std::size_t r = 0; r < a.rows(); ++r) {
        LpConstraint row;
        row.coeffs.resize(a.cols());
        for (std::size_t c = 0; c < a.cols(); ++c) row.coeffs[c] = a(r, c);
        row.rel = Relation::eq;
        row.rhs = b[r];
        lp.constraints.push_back(std::move(row));
    }
    LpSolution sol = solve_lp(lp, opts);
    switch (sol.status) {
        case LpStatus::optimal: return sol.point;
        case LpStatus::infeasible: return std::nullopt;
        default:
            throw NumericalError("equality feasibility solve failed");
    }
}

}  // namespace hedonic
