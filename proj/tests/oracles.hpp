#pragma once

#include <optional>

#include "hedonic/allocation.hpp"
#include "hedonic/characteristic_function.hpp"
#include "hedonic/lp.hpp"
#include "hedonic/matrix.hpp"
#include "hedonic/rng.hpp"

// Test-only reference implementations, kept independent of the solver paths
// they check.
namespace hedonic::testing {

// Brute-force LP optimum by enumerating candidate vertices: every
// variable-count subset of constraint rows is solved as an equality system
// and the best feasible candidate wins. Only valid for programs known to be
// feasible and bounded with a vertex optimum.
std::optional<double> vertex_enumeration_optimum(const LinearProgram& lp,
                                                 double feas_tol = 1e-7);

// Least-squares via modified Gram-Schmidt QR (pseudo-inverse route),
// independent of the normal-equations path.
Vector qr_least_squares(const Matrix& a, const Vector& b);

// Random complete game: singleton values uniform on [0, 2], marginals of all
// larger coalitions uniform on [-1, 1].
CharacteristicFunction random_game(int n, Xorshift64& rng);

// Exhaustive search of the best-reply move graph from the all-singleton
// profile: true iff some best-reply fixed point (a Nash-stable profile) is
// reachable through single-player best replies under any scheduling. When
// false, no round-robin run can converge regardless of seed or round budget.
bool stable_profile_reachable(const AllocationRule& rule);

}  // namespace hedonic::testing
