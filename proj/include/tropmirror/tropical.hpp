#pragma once

#include <array>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "tropmirror/core.hpp"
#include "tropmirror/lp.hpp"

namespace tropmirror {

/// The monomial datum (A, rho): weights alpha with rational lifts. The
/// complex coefficients c_alpha do not enter any computation here; they are
/// accepted and echoed through reports.
struct WeightedPoint {
    ExponentVector alpha;
    Rational rho;
    std::string coeff = "1";
};

struct WeightedPointSet {
    int n = 0;
    std::vector<WeightedPoint> points;

    void validate() const;  // dimensions match, alphas pairwise distinct
    const ExponentVector& alpha(int i) const { return points[i].alpha; }
    const Rational& rho(int i) const { return points[i].rho; }
    int find(const ExponentVector& a) const;  // -1 when absent
};

/// One cell of the regular subdivision P of Conv(A): the set of point indices
/// on which the supporting affine functional <slope, .> + offset is tight
/// (equal to rho), together with the indices that are actual vertices of the
/// cell. For full-dimensional cells the slope is the dual vertex of Pi_0.
struct SubdivisionCell {
    std::vector<int> points;    // all tight point indices, sorted
    std::vector<int> vertices;  // subset of `points` that are polytope vertices
    QVec slope;
    Rational offset;
    int dim = 0;
};

struct RegularSubdivision {
    int n = 0;
    std::vector<SubdivisionCell> cells;  // maximal cells only
    std::vector<int> a_red;              // indices that are vertices of some cell, sorted
    bool degenerate = false;             // Conv(A) not full-dimensional
    int hull_dim = 0;

    bool in_a_red(int i) const;
};

struct MaximalityCertificate {
    bool maximal = false;
    int failing_cell = -1;  // index into cells when not maximal
    std::string reason;
};

/// A face of P of dimension >= 1, collected over all maximal cells. Dual to a
/// cell of Pi_0 of dimension n - dim.
struct PFace {
    std::vector<int> vertices;  // vertex point indices, sorted
    int dim = 0;
    bool on_hull_boundary = false;  // contained in a proper face of Conv(A)
    std::vector<int> incident_cells;  // maximal cells containing the face
};

struct ComplementComponent {
    int label = -1;  // point index into A (member of a_red)
    std::vector<HalfSpace> inequalities;
    QVec interior_point;
    bool bounded = false;
};

/// Pi_0 as a cell complex: k-cells dual to the (n-k)-dimensional faces of P,
/// plus the labelled complement components.
struct TropicalCell {
    int dim = 0;               // dimension as a subset of R^n
    PFace dual;                // the dual face of P
    QMat span_normals;         // affine span { xi : <normal,xi> = rhs }
    QVec span_rhs;
    QVec witness;              // a point on the cell
    bool bounded = false;
};

struct TropicalComplex {
    int n = 0;
    std::vector<std::vector<TropicalCell>> cells_by_dim;  // index k = 0..n-1
    std::vector<ComplementComponent> components;          // one per a_red, in a_red order
    bool degenerate = false;
};

/// The planar tropical curve (n = 2): vertices dual to maximal cells, bounded
/// edges dual to interior P-edges, rays dual to boundary P-edges.
struct TropicalCurveGraph {
    struct Vertex {
        QVec point;
        int dual_cell = -1;
    };
    struct Edge {
        int v0 = -1;
        int v1 = -1;              // -1 for a ray
        ExponentVector ray_dir;   // primitive direction when v1 == -1
        bool bounded = true;
        std::array<int, 2> dual_points{-1, -1};  // endpoints of the dual P-edge
        long long multiplicity = 1;              // lattice length of the dual edge
    };
    std::vector<Vertex> vertices;
    std::vector<Edge> edges;
    int genus = 0;        // first Betti number
    int components = 0;
};

// The convex PL function phi(xi) = max(<alpha,xi> - rho(alpha)) with its full
// argmax set.
std::pair<Rational, std::vector<int>> tropical_value(const WeightedPointSet& w, const QVec& xi);

// Maximal domains of linearity of phi, i.e. the lower-hull subdivision of the
// lifted points (alpha, rho(alpha)). Degenerate (not full-dimensional) input
// is reduced to its affine span, subdivided there, and flagged.
RegularSubdivision lower_hull_subdivision(const WeightedPointSet& w);

// Every maximal cell a unimodular simplex (in the lattice of its span).
MaximalityCertificate is_maximal(const WeightedPointSet& w, const RegularSubdivision& s);

// Faces of P of each dimension >= 1 (deduped across maximal cells).
std::vector<PFace> subdivision_faces(const WeightedPointSet& w, const RegularSubdivision& s);

TropicalComplex build_tropical_complex(const WeightedPointSet& w, const RegularSubdivision& s);

// n = 2 only; throws WrongDimension, DegenerateInput.
TropicalCurveGraph curve_graph(const WeightedPointSet& w, const RegularSubdivision& s,
                               const TropicalComplex& tc);

}  // namespace tropmirror
