#pragma once

#include <optional>
#include <string>
#include <vector>

#include "tropmirror/mirror.hpp"
#include "tropmirror/tropical.hpp"

namespace tropmirror {

/// d tropical polynomials sharing the torus dimension n, with a per-ray
/// lambda value for each hypersurface and a per-hypersurface blowup size.
struct CIDatum {
    int n = 0;
    std::vector<WeightedPointSet> hypersurfaces;
    std::vector<Rational> epsilons;                 // one per hypersurface
    std::vector<ExponentVector> rays;               // ambient rays sigma_j
    std::vector<Rational> varpi;                    // per ray
    std::vector<std::vector<Rational>> lambda;      // lambda[j][i]: ray j, hypersurface i

    int d() const { return static_cast<int>(hypersurfaces.size()); }
    int r() const { return static_cast<int>(rays.size()); }
    void validate() const;
};

/// One component of R^n minus the union of the Pi_i: the tuple of dominant
/// weights together with its full-dimensionality certificate.
struct RealizedTuple {
    std::vector<int> labels;       // point index into hypersurfaces[i]
    std::vector<HalfSpace> inequalities;
    QVec interior_point;
    bool bounded = false;
};

struct RealizedTupleSet {
    std::vector<RealizedTuple> tuples;  // sorted by the alpha-vector tuples
    int find(const std::vector<int>& labels) const;  // -1 when absent
};

struct CIFacet {
    int hypersurface = 0;  // i
    int label = -1;        // point index into A_i (member of its a_red)
    ExponentVector alpha;
    Rational rho;
    ExponentVector ray;    // (-alpha, e_i) in Z^{n+d}
    bool compact = false;
};

struct CICone {
    QVec dual_point;                      // xi* of the refined-complex vertex
    std::vector<std::vector<int>> tight;  // per hypersurface: argmax point indices
    std::vector<ExponentVector> rays;     // generators (-alpha, e_i), argmax cell vertices
    BigInt index = 1;
    bool smooth = false;
    bool simplicial = false;
};

struct CIStratum {
    int a = -1, b = -1;  // indices into RealizedTupleSet::tuples
    bool bounded = false;
};

struct CITerm {
    std::string name;  // "w0_i", "v0_i", "w_j"
    ExponentVector weight;         // Z^{n+d}
    NovikovTerm coefficient;
    ChartExpression expr;          // nvars = n, nv0 = d
    std::vector<int> chart_labels; // per-hypersurface point indices (empty if chart-free)
    bool chart_realized = true;
};

struct CIMirror {
    int n = 0, d = 0;
    bool smooth = false;
    RealizedTupleSet tuples;
    std::vector<CIFacet> facets;
    std::vector<CICone> cones;
    std::vector<CIStratum> strata;
    std::vector<CITerm> W0;
    std::vector<CITerm> W0H;
    std::vector<std::string> warnings;  // e.g. non-transverse Pi_i, unrealized minimizers
};

// Tuples (alpha^1..alpha^d) whose common dominance region is full-dimensional;
// candidates are the product of the per-hypersurface a_red sets, filtered by
// exact LP. For d = 1 this is exactly a_red.
RealizedTupleSet realized_tuples(const CIDatum& ci,
                                 const std::vector<RegularSubdivision>& subs);

CIMirror build_ci_mirror(const CIDatum& ci);

// v_alpha^m = prod_i v_{0,i}^{<beta^i - alpha^i, m>} v_beta^m termwise.
ChartExpression ci_glue(const ChartExpression& e, const std::vector<ExponentVector>& from,
                        const std::vector<ExponentVector>& to, bool require_regular = false);

// Pairing of a term weight with the facet ray (-alpha, e_i).
long long ci_vanishing_order(const CITerm& term, const CIFacet& facet);

// w_j expressed in an arbitrary tuple chart:
// prod_i (1 + T^{-eps_i} w_{0,i})^{<alpha^i - alpha_min^i, sigma_j>} T^{varpi_j} v^{sigma_j}.
ChartExpression ci_express_w_in_chart(const CIDatum& ci,
                                      const std::vector<RegularSubdivision>& subs, int ray_index,
                                      const std::vector<ExponentVector>& chart);

}  // namespace tropmirror
