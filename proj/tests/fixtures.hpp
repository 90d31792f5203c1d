#pragma once

// Shared inline fixture data for the unit and acceptance suites. The genus-2
// datum is the bidegree (3,2) curve with rho values
//   5 2 1 2 / 2 0 0 2 / 2 1 2 5  on [0,3]x[0,2],
// rays (1,0),(0,1),(-1,0),(0,-1) with lambda = (0,0,3,2).

#include <vector>

#include "tropmirror/mirror.hpp"
#include "tropmirror/tropical.hpp"

namespace fixtures {

using namespace tropmirror;

inline WeightedPointSet genus2_points() {
    WeightedPointSet w;
    w.n = 2;
    const long long rho[3][4] = {{5, 2, 1, 2}, {2, 0, 0, 2}, {2, 1, 2, 5}};
    for (long long b = 0; b <= 2; ++b)
        for (long long a = 0; a <= 3; ++a)
            w.points.push_back({{a, b}, Rational(rho[b][a]), "1"});
    return w;
}

inline AmbientToricData genus2_ambient() {
    AmbientToricData amb;
    amb.rays = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};
    amb.lambda = {Rational(0), Rational(0), Rational(3), Rational(2)};
    amb.varpi = {Rational(0), Rational(0), Rational(7) / 2, Rational(5) / 2};
    amb.epsilon = Rational(1) / 10;
    return amb;
}

// Pair of pants in (C*)^n: A = {0, e_1, ..., e_n}, rho = 0, no ambient rays.
inline WeightedPointSet pants_points(int n) {
    WeightedPointSet w;
    w.n = n;
    w.points.push_back({ExponentVector(n, 0), Rational(0), "1"});
    for (int i = 0; i < n; ++i) {
        ExponentVector e(n, 0);
        e[i] = 1;
        w.points.push_back({e, Rational(0), "1"});
    }
    return w;
}

inline AmbientToricData torus_ambient(const Rational& eps = Rational(1) / 10) {
    AmbientToricData amb;
    amb.epsilon = eps;
    return amb;
}

// Hyperplane in P^n: same A, rays e_1..e_n and -(1,..,1) with lambda 0..0,1.
inline AmbientToricData pants_proj_ambient(int n, const Rational& area = Rational(2)) {
    AmbientToricData amb;
    for (int i = 0; i < n; ++i) {
        ExponentVector e(n, 0);
        e[i] = 1;
        amb.rays.push_back(e);
        amb.lambda.push_back(Rational(0));
        amb.varpi.push_back(Rational(0));
    }
    amb.rays.push_back(ExponentVector(n, -1));
    amb.lambda.push_back(Rational(1));
    amb.varpi.push_back(area);
    amb.epsilon = Rational(1) / 10;
    return amb;
}

// ALE: A = {0..k+1} in Z^1. Maximal variant rho(j) = j(j-1)/2, collapsed
// variant rho = 0 (A_red = {0, k+1}).
inline WeightedPointSet ale_points(int k, bool maximal) {
    WeightedPointSet w;
    w.n = 1;
    for (long long j = 0; j <= k + 1; ++j)
        w.points.push_back({{j}, maximal ? Rational(j * (j - 1) / 2) : Rational(0), "1"});
    return w;
}

inline AmbientToricData ale_ambient() {
    AmbientToricData amb;
    amb.rays = {{1}};
    amb.lambda = {Rational(0)};
    amb.varpi = {Rational(0)};
    amb.epsilon = Rational(1) / 10;
    return amb;
}

// Fermat cubic in P^2 (non-maximal): A = {(0,0),(3,0),(0,3)}, rho = 0.
inline WeightedPointSet fermat_points() {
    WeightedPointSet w;
    w.n = 2;
    w.points = {{{0, 0}, Rational(0), "1"}, {{3, 0}, Rational(0), "1"}, {{0, 3}, Rational(0), "1"}};
    return w;
}

inline AmbientToricData fermat_ambient() {
    AmbientToricData amb;
    amb.rays = {{1, 0}, {0, 1}, {-1, -1}};
    amb.lambda = {Rational(0), Rational(0), Rational(3)};
    amb.varpi = {Rational(0), Rational(0), Rational(3)};
    amb.epsilon = Rational(1) / 10;
    return amb;
}

// Bidegree (p,q) datum on [0,p]x[0,q] with the anisotropic quadratic lift
// a^2+ab+b^2 (a maximal triangulation splitting every unit square along the
// antidiagonal).
inline WeightedPointSet bidegree_points(int p, int q) {
    WeightedPointSet w;
    w.n = 2;
    for (long long b = 0; b <= q; ++b)
        for (long long a = 0; a <= p; ++a)
            w.points.push_back({{a, b}, Rational(a * a + a * b + b * b), "1"});
    return w;
}

inline AmbientToricData bidegree_ambient(int p, int q) {
    AmbientToricData amb;
    amb.rays = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};
    amb.lambda = {Rational(0), Rational(0), Rational(p), Rational(q)};
    amb.varpi = {Rational(0), Rational(0), Rational(p), Rational(q)};
    amb.epsilon = Rational(1) / 10;
    return amb;
}

}  // namespace fixtures
