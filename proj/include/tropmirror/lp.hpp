#pragma once

#include <optional>
#include <vector>

#include "tropmirror/core.hpp"

namespace tropmirror {

using QVec = std::vector<Rational>;
using QMat = std::vector<QVec>;

// ---------------------------------------------------------------------------
// Exact dense linear algebra (sizes here are tiny; clarity over speed).

// Solves M x = rhs for square M. Returns nullopt when M is singular.
std::optional<QVec> solve_linear(QMat M, QVec rhs);
Rational determinant(QMat M);
int rank(QMat M);
// One particular solution of an underdetermined consistent system, nullopt if
// inconsistent.
std::optional<QVec> solve_any(QMat M, QVec rhs);

// Smith-normal-form elementary divisors of an integer matrix (nonzero ones).
// The product is the lattice index of the row span; all 1 iff the rows extend
// to a Z-basis.
std::vector<BigInt> elementary_divisors(std::vector<std::vector<BigInt>> M);

// ---------------------------------------------------------------------------
// Exact linear programming.
//
// A half-space is stored as (normal, offset) meaning <normal, x> + offset >= 0.

struct HalfSpace {
    QVec normal;
    Rational offset;
};

enum class LpStatus { Optimal, Unbounded, Infeasible };

struct LpResult {
    LpStatus status;
    Rational value;  // optimal objective (when Optimal)
    QVec x;          // optimizer (when Optimal)
};

// Maximizes <c, x> over {x : <n_j, x> + o_j >= 0}; x is free. Exact rational
// two-phase simplex with Bland's rule.
LpResult lp_maximize(const std::vector<HalfSpace>& region, const QVec& c);

bool region_feasible(const std::vector<HalfSpace>& region, int dim);

// Full-dimensionality certificate: a point with all slacks strictly positive,
// found by maximizing the smallest slack (capped at 1).
struct FullDimResult {
    bool full_dim = false;
    QVec interior;  // valid when full_dim
};
FullDimResult region_full_dim(const std::vector<HalfSpace>& region, int dim);

// True when the (assumed nonempty) region contains no ray.
bool region_bounded(const std::vector<HalfSpace>& region, int dim);

// Dimension of the (assumed nonempty) region: dim minus the rank of the
// implicit-equality normals. Returns -1 for an empty region.
int region_dim(const std::vector<HalfSpace>& region, int dim);

// Does a supporting functional exist which is tight exactly on `tight` and
// strictly below on the rest of `points`? (Face test for point sets.)
bool supporting_face_exists(const std::vector<QVec>& points, const std::vector<int>& tight);

}  // namespace tropmirror
