#pragma once

#include <cstddef>
#include <iosfwd>
#include <optional>
#include <vector>

#include "hedonic/matrix.hpp"

namespace hedonic {

enum class Relation { le, eq, ge };

struct LpConstraint {
    Vector coeffs;
    Relation rel = Relation::le;
    double rhs = 0.0;
};

/// Dense linear program over free-signed variables: maximize objective
/// subject to the constraint rows. Every row must match the variable count
/// and all coefficients must be finite.
struct LinearProgram {
    Vector objective;
    std::vector<LpConstraint> constraints;

    std::size_t variable_count() const { return objective.size(); }
    void validate() const;  // shape, finiteness, size caps

    static constexpr std::size_t kMaxConstraints = 4096;
    static constexpr std::size_t kMaxVariables = 1024;
};

enum class LpStatus { optimal, infeasible, unbounded, numerical_failure };

struct LpSolution {
    LpStatus status = LpStatus::numerical_failure;
    Vector point;           // variable values when optimal
    double objective = 0.0;
    std::size_t iterations = 0;
};

struct LpOptions {
    double pivot_tolerance = 1e-10;
    double feasibility_tolerance = 1e-7;
    std::size_t max_iterations = 1'000'000;
    /// When set, one line per pivot: iteration,entering,leaving,objective.
    std::ostream* debug = nullptr;
};

/// Two-phase dense simplex with Bland's rule. Free variables are split into
/// differences of nonnegatives. Identical inputs produce identical pivot
/// sequences and bit-identical outputs on one platform.
LpSolution solve_lp(const LinearProgram& lp, const LpOptions& opts = {});

/// Some x with ||Ax - b||_inf within the feasibility tolerance, or nullopt if
/// the equality system is inconsistent. Phase-1 simplex underneath; throws
/// NumericalError when the solve itself fails.
std::optional<Vector> check_feasible_equalities(const Matrix& a, const Vector& b,
                                                const LpOptions& opts = {});

}  // namespace hedonic
