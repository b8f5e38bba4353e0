#pragma once

#include <cstddef>
#include <vector>

#include "boole/rational.hpp"

namespace boole {

enum class LpStatus { Optimal, Infeasible, Unbounded };

/// Outcome of an exact LP solve.
///   Optimal:    objective and a basic optimal point x.
///   Infeasible: a Farkas vector y with y*A <= 0 (componentwise over columns)
///               and y*b > 0 — an exact proof that Ax = b, x >= 0 has no
///               solution. y*b equals the phase-1 optimum.
///   Unbounded:  nothing further.
struct LpSolution {
    LpStatus status = LpStatus::Optimal;
    Rational objective;
    std::vector<Rational> x;
    std::vector<Rational> farkas;
};

/// Minimizes c*x subject to A x = b, x >= 0, in exact rational arithmetic.
/// Dense two-phase tableau simplex with Bland's anti-cycling rule (lowest
/// index entering, lowest basis index leaving), so results are deterministic
/// and certificates reproducible. Sized for desk-scale polytopes, not sparse
/// production LPs.
LpSolution minimize(const std::vector<std::vector<Rational>>& a, const std::vector<Rational>& b,
                    const std::vector<Rational>& c);

}  // namespace boole
