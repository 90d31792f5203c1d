#pragma once

#include <optional>
#include <string>
#include <vector>

#include "tropmirror/core.hpp"
#include "tropmirror/tropical.hpp"

namespace tropmirror {

/// Toric data of the ambient V: primitive ray generators sigma_i, moment
/// polytope offsets varpi_i (<sigma_i,u> + varpi_i >= 0) and the piecewise
/// linear function lambda defining O(H). The blowup size epsilon is carried
/// here as an exact rational; whether it is small enough in the analytic
/// sense (below delta/2 for the chosen Kaehler form) is the caller's
/// responsibility.
struct AmbientToricData {
    std::vector<ExponentVector> rays;
    std::vector<Rational> varpi;
    std::vector<Rational> lambda;
    Rational epsilon = 1;

    int r() const { return static_cast<int>(rays.size()); }
    // Throws ValidationError: non-primitive sigma, epsilon <= 0, size
    // mismatches, or <sigma_i, alpha> + lambda_i violating >= 0 with equality
    // attained on A.
    void validate(const WeightedPointSet& w) const;
};

struct MirrorFacet {
    int label = -1;          // point index into A (member of a_red)
    ExponentVector alpha;
    Rational rho;
    ExponentVector ray;      // (-alpha, 1), the ray generator of Sigma_Y
    bool compact = false;    // component of R^n \ Pi_0 bounded
};

struct MirrorCone {
    std::vector<int> cell_points;      // point indices of the dual P-cell
    std::vector<ExponentVector> rays;  // generators (-alpha, 1), cell vertices only
    BigInt index = 1;                  // lattice index of the generators (1 = smooth)
    bool smooth = false;
    bool simplicial = false;
};

struct MirrorStratum {
    int a = -1, b = -1;   // point indices joined by a P-edge
    bool bounded = false; // P^1 (true) vs A^1 (false)
    long long multiplicity = 1;
};

struct MirrorData {
    int n = 0;
    bool smooth = false;
    MaximalityCertificate maximality;
    std::vector<MirrorFacet> facets;   // per a_red, in a_red order
    std::vector<MirrorCone> cones;     // per maximal cell of P
    std::vector<MirrorStratum> strata; // per P-edge
    // Unimodular map Delta_Y -> (R >= 0)^{n+1} when one exists (single smooth
    // maximal cone): xi |-> M xi + t.
    std::optional<std::pair<QMat, QVec>> orthant_map;
};

struct SuperpotentialTerm {
    std::string name;          // "w0", "v0", "w1".."wr"
    ExponentVector weight;     // toric weight in Z^{n+1}
    NovikovTerm coefficient;
    ChartExpression expr;      // in the designated chart
    int chart = -1;            // a_red point index (alpha_i); -1 if chart-free
};

/// Charts indexed by a_red and the substitution maps between adjacent ones
/// (edges of P). Gluings compose along paths; the exponents telescope, so the
/// composite depends only on the endpoints.
struct ChartAtlas {
    struct Gluing {
        int from = -1, to = -1;      // point indices
        ExponentVector delta;        // beta - alpha
    };
    std::vector<int> charts;         // a_red
    std::vector<Gluing> gluings;     // both orientations per P-edge
    std::vector<std::array<int, 3>> triangles;  // 3-cliques of the edge graph
};

MirrorData build_mirror(const WeightedPointSet& w, const RegularSubdivision& s,
                        const TropicalComplex& tc);

ChartAtlas build_atlas(const WeightedPointSet& w, const RegularSubdivision& s,
                       const TropicalComplex& tc);

// v_alpha^m = v0^{<beta-alpha, m>} v_beta^m termwise; the v0 coordinate is
// fixed. Throws NotRegular when `require_regular` and a negative v0 power
// appears in the image.
ChartExpression glue(const ChartExpression& e, const ExponentVector& from_alpha,
                     const ExponentVector& to_alpha, bool require_regular = false);

// W_0 = w_0 + w_1 + ... + w_r and W_0^H = -v_0 + w_1 + ... + w_r as term lists.
std::vector<SuperpotentialTerm> build_W0(const WeightedPointSet& w, const RegularSubdivision& s,
                                         const AmbientToricData& amb);
std::vector<SuperpotentialTerm> build_W0H(const WeightedPointSet& w, const RegularSubdivision& s,
                                          const AmbientToricData& amb);

// Pairing of the term's toric weight with the ray (-alpha, 1).
long long vanishing_order(const SuperpotentialTerm& term, const ExponentVector& alpha);

// (1 + T^{-eps} w0)^{<alpha - alpha_i, sigma_i>} T^{varpi_i} v_alpha^{sigma_i},
// i.e. the w_i count expressed in the chart of alpha.
ChartExpression express_w_in_chart(const WeightedPointSet& w, const RegularSubdivision& s,
                                   const AmbientToricData& amb, int ray_index,
                                   const ExponentVector& alpha);

// Index of (a chosen) alpha minimizing <sigma_i, alpha> over a_red.
int minimizing_chart(const WeightedPointSet& w, const RegularSubdivision& s,
                     const ExponentVector& sigma);

/// Per-divisor list of W0^H terms vanishing identically, and the divisors on
/// which all of them vanish (components of {W0^H = 0}).
struct SingularFiberInfo {
    struct Entry {
        int label = -1;
        std::vector<std::string> vanishing_terms;  // names with order >= 1
        bool full_component = false;               // every w_i (and v0) vanishes
    };
    std::vector<Entry> entries;  // in a_red order
    std::vector<int> full_components;
};
SingularFiberInfo singular_fiber_components(const WeightedPointSet& w,
                                            const RegularSubdivision& s,
                                            const AmbientToricData& amb);

// Independent check of vanishing orders: number of Pi_0 crossings of a
// generic ray from inside the component of alpha in direction -sigma, counted
// with lattice multiplicity <gamma_before - gamma_after, sigma>. n = 2 only.
long long vanishing_order_by_ray_shooting(const WeightedPointSet& w, const TropicalComplex& tc,
                                          int label, const ExponentVector& sigma);

}  // namespace tropmirror
