#include "tropmirror/tropical.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <sstream>

namespace tropmirror {

void WeightedPointSet::validate() const {
    if (points.empty())
        throw Error(ErrorKind::ValidationError, "weighted point set has no points");
    for (const auto& p : points)
        if (static_cast<int>(p.alpha.size()) != n)
            throw Error(ErrorKind::ValidationError,
                        "weight " + vec_str(p.alpha) + " has wrong dimension");
    for (size_t i = 0; i < points.size(); ++i)
        for (size_t j = i + 1; j < points.size(); ++j)
            if (points[i].alpha == points[j].alpha)
                throw Error(ErrorKind::ValidationError,
                            "duplicate weight " + vec_str(points[i].alpha));
}

int WeightedPointSet::find(const ExponentVector& a) const {
    for (size_t i = 0; i < points.size(); ++i)
        if (points[i].alpha == a) return static_cast<int>(i);
    return -1;
}

bool RegularSubdivision::in_a_red(int i) const {
    return std::find(a_red.begin(), a_red.end(), i) != a_red.end();
}

std::pair<Rational, std::vector<int>> tropical_value(const WeightedPointSet& w, const QVec& xi) {
    if (static_cast<int>(xi.size()) != w.n)
        throw Error(ErrorKind::WrongDimension, "tropical_value: point has wrong dimension");
    Rational best;
    std::vector<int> argmax;
    for (int i = 0; i < static_cast<int>(w.points.size()); ++i) {
        Rational v = -w.rho(i);
        for (int j = 0; j < w.n; ++j) v += Rational(w.alpha(i)[j]) * xi[j];
        if (argmax.empty() || v > best) {
            best = v;
            argmax.assign(1, i);
        } else if (v == best) {
            argmax.push_back(i);
        }
    }
    return {best, argmax};
}

// ---------------------------------------------------------------------------
// Lower hull

namespace {

template <typename F>
void for_each_subset(int n, int k, F&& f) {
    if (k > n || k < 0) return;
    std::vector<int> idx(k);
    std::iota(idx.begin(), idx.end(), 0);
    while (true) {
        f(idx);
        int i = k - 1;
        while (i >= 0 && idx[i] == n - k + i) --i;
        if (i < 0) break;
        ++idx[i];
        for (int j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
    }
}

struct ReducedGeometry {
    int dim = 0;           // dimension of the affine span of A
    std::vector<QVec> ys;  // reduced rational coordinates, one per point
    QMat basis;            // dim rows, each a direction vector in Q^n
};

ReducedGeometry reduce_coordinates(const WeightedPointSet& w) {
    ReducedGeometry g;
    const int N = static_cast<int>(w.points.size());
    for (int i = 1; i < N; ++i) {
        QVec d(w.n);
        for (int j = 0; j < w.n; ++j) d[j] = Rational(w.alpha(i)[j] - w.alpha(0)[j]);
        QMat trial = g.basis;
        trial.push_back(d);
        if (rank(trial) > static_cast<int>(g.basis.size())) g.basis.push_back(d);
    }
    g.dim = static_cast<int>(g.basis.size());
    g.ys.assign(N, QVec(g.dim, 0));
    if (g.dim == 0) return g;
    QMat bt(w.n, QVec(g.dim));
    for (int r = 0; r < w.n; ++r)
        for (int c = 0; c < g.dim; ++c) bt[r][c] = g.basis[c][r];
    for (int i = 0; i < N; ++i) {
        QVec rhs(w.n);
        for (int j = 0; j < w.n; ++j) rhs[j] = Rational(w.alpha(i)[j] - w.alpha(0)[j]);
        auto y = solve_any(bt, rhs);
        if (!y) throw Error(ErrorKind::Internal, "affine-span reduction failed");
        g.ys[i] = *y;
    }
    return g;
}

struct RawCell {
    std::vector<int> tight;
    QVec dual_point;  // xi* in reduced coordinates
    Rational value;   // phi(xi*)
};

// Maximal domains of linearity of phi in reduced coordinates: for each
// (k+1)-subset whose tie system is nonsingular, keep the solution if it
// realizes the global maximum; the cell is the full argmax there.
std::vector<RawCell> lower_cells_reduced(const std::vector<QVec>& ys,
                                         const std::vector<Rational>& rho, int k) {
    const int N = static_cast<int>(ys.size());
    std::vector<RawCell> cells;
    if (k == 0) {
        RawCell c;
        c.tight.resize(N);
        std::iota(c.tight.begin(), c.tight.end(), 0);
        c.value = -rho[0];
        cells.push_back(c);
        return cells;
    }
    std::map<QVec, RawCell> seen;
    for_each_subset(N, k + 1, [&](const std::vector<int>& S) {
        QMat M(k, QVec(k));
        QVec rhs(k);
        for (int r = 0; r < k; ++r) {
            for (int c = 0; c < k; ++c) M[r][c] = ys[S[r + 1]][c] - ys[S[0]][c];
            rhs[r] = rho[S[r + 1]] - rho[S[0]];
        }
        auto xi = solve_linear(M, rhs);
        if (!xi) return;
        if (seen.count(*xi)) return;
        Rational val = -rho[S[0]];
        for (int c = 0; c < k; ++c) val += ys[S[0]][c] * (*xi)[c];
        std::vector<int> tight;
        for (int i = 0; i < N; ++i) {
            Rational v = -rho[i];
            for (int c = 0; c < k; ++c) v += ys[i][c] * (*xi)[c];
            if (v > val) return;
            if (v == val) tight.push_back(i);
        }
        RawCell cell;
        cell.tight = std::move(tight);
        cell.dual_point = *xi;
        cell.value = val;
        seen.emplace(*xi, std::move(cell));
    });
    cells.reserve(seen.size());
    for (auto& [xi, c] : seen) cells.push_back(std::move(c));
    return cells;
}

}  // namespace

RegularSubdivision lower_hull_subdivision(const WeightedPointSet& w) {
    w.validate();
    const int N = static_cast<int>(w.points.size());
    ReducedGeometry geom = reduce_coordinates(w);

    std::vector<Rational> rho(N);
    for (int i = 0; i < N; ++i) rho[i] = w.rho(i);
    std::vector<RawCell> raw = lower_cells_reduced(geom.ys, rho, geom.dim);

    RegularSubdivision sub;
    sub.n = w.n;
    sub.hull_dim = geom.dim;
    sub.degenerate = geom.dim < w.n;

    std::set<int> a_red;
    for (const RawCell& rc : raw) {
        SubdivisionCell cell;
        cell.points = rc.tight;
        cell.dim = geom.dim;
        std::vector<QVec> pts;
        for (int i : rc.tight) pts.push_back(geom.ys[i]);
        for (size_t t = 0; t < rc.tight.size(); ++t) {
            if (pts.size() == 1 || supporting_face_exists(pts, {static_cast<int>(t)}))
                cell.vertices.push_back(rc.tight[t]);
        }
        for (int v : cell.vertices) a_red.insert(v);
        // Lift the tight functional g(alpha) = <xi, alpha> + offset back to
        // ambient coordinates: <xi, basis_j> = dual_point_j, then pin the
        // offset by tightness on the first cell point.
        QVec xi(w.n, 0);
        if (geom.dim > 0) {
            auto sol = solve_any(geom.basis, rc.dual_point);
            if (!sol) throw Error(ErrorKind::Internal, "functional lift failed");
            xi = *sol;
        }
        Rational offset = rho[rc.tight[0]];
        for (int j = 0; j < w.n; ++j) offset -= xi[j] * Rational(w.alpha(rc.tight[0])[j]);
        cell.slope = xi;
        cell.offset = offset;
        sub.cells.push_back(std::move(cell));
    }
    std::sort(sub.cells.begin(), sub.cells.end(),
              [&](const SubdivisionCell& a, const SubdivisionCell& b) {
                  std::vector<ExponentVector> pa, pb;
                  for (int i : a.points) pa.push_back(w.alpha(i));
                  for (int i : b.points) pb.push_back(w.alpha(i));
                  std::sort(pa.begin(), pa.end());
                  std::sort(pb.begin(), pb.end());
                  return pa < pb;
              });
    sub.a_red.assign(a_red.begin(), a_red.end());
    std::sort(sub.a_red.begin(), sub.a_red.end(),
              [&](int a, int b) { return w.alpha(a) < w.alpha(b); });
    return sub;
}

// ---------------------------------------------------------------------------

MaximalityCertificate is_maximal(const WeightedPointSet& w, const RegularSubdivision& s) {
    MaximalityCertificate cert;
    for (size_t c = 0; c < s.cells.size(); ++c) {
        const SubdivisionCell& cell = s.cells[c];
        std::ostringstream name;
        name << "cell {";
        for (size_t i = 0; i < cell.points.size(); ++i)
            name << (i ? "," : "") << vec_str(w.alpha(cell.points[i]));
        name << "}";
        if (static_cast<int>(cell.vertices.size()) != cell.dim + 1 ||
            cell.points.size() != cell.vertices.size())
        {
            cert.failing_cell = static_cast<int>(c);
            cert.reason = name.str() + " is not a simplex";
            return cert;
        }
        if (cell.dim == 0) continue;
        std::vector<std::vector<BigInt>> diffs(cell.dim, std::vector<BigInt>(w.n));
        for (int r = 0; r < cell.dim; ++r)
            for (int j = 0; j < w.n; ++j)
                diffs[r][j] = BigInt(w.alpha(cell.vertices[r + 1])[j] -
                                     w.alpha(cell.vertices[0])[j]);
        BigInt vol = 1;
        for (const BigInt& d : elementary_divisors(diffs)) vol *= d;
        if (vol != 1) {
            cert.failing_cell = static_cast<int>(c);
            cert.reason = name.str() + " has normalized volume " + vol.str();
            return cert;
        }
    }
    cert.maximal = true;
    return cert;
}

// ---------------------------------------------------------------------------
// Faces of P

std::vector<PFace> subdivision_faces(const WeightedPointSet& w, const RegularSubdivision& s) {
    std::map<std::vector<int>, PFace> faces;
    for (size_t c = 0; c < s.cells.size(); ++c) {
        const SubdivisionCell& cell = s.cells[c];
        const int nv = static_cast<int>(cell.vertices.size());
        std::vector<QVec> pts;
        for (int i : cell.vertices) {
            QVec p(w.n);
            for (int j = 0; j < w.n; ++j) p[j] = Rational(w.alpha(i)[j]);
            pts.push_back(p);
        }
        // Candidate faces: subsets of the cell's vertices that admit a
        // supporting functional tight exactly there; plus the cell itself.
        std::vector<std::vector<int>> face_sets;
        for (unsigned mask = 1; mask < (1u << nv); ++mask) {
            std::vector<int> T;
            for (int b = 0; b < nv; ++b)
                if (mask & (1u << b)) T.push_back(b);
            if (static_cast<int>(T.size()) < 2) continue;
            if (static_cast<int>(T.size()) == nv || supporting_face_exists(pts, T)) {
                std::vector<int> verts;
                for (int t : T) verts.push_back(cell.vertices[t]);
                std::sort(verts.begin(), verts.end());
                face_sets.push_back(std::move(verts));
            }
        }
        for (auto& verts : face_sets) {
            auto it = faces.find(verts);
            if (it == faces.end()) {
                PFace f;
                f.vertices = verts;
                QMat diffs;
                for (size_t r = 1; r < verts.size(); ++r) {
                    QVec d(w.n);
                    for (int j = 0; j < w.n; ++j)
                        d[j] = Rational(w.alpha(verts[r])[j] - w.alpha(verts[0])[j]);
                    diffs.push_back(d);
                }
                f.dim = rank(diffs);
                it = faces.emplace(verts, std::move(f)).first;
            }
            it->second.incident_cells.push_back(static_cast<int>(c));
        }
    }
    std::vector<PFace> out;
    for (auto& [verts, f] : faces) {
        std::sort(f.incident_cells.begin(), f.incident_cells.end());
        f.incident_cells.erase(std::unique(f.incident_cells.begin(), f.incident_cells.end()),
                               f.incident_cells.end());
        out.push_back(std::move(f));
    }
    // Deterministic order: by dimension, then by vertex alphas.
    std::sort(out.begin(), out.end(), [&](const PFace& a, const PFace& b) {
        if (a.dim != b.dim) return a.dim < b.dim;
        std::vector<ExponentVector> va, vb;
        for (int i : a.vertices) va.push_back(w.alpha(i));
        for (int i : b.vertices) vb.push_back(w.alpha(i));
        return va < vb;
    });
    return out;
}

// ---------------------------------------------------------------------------
// Tropical complex

namespace {

// Half-space system of the closed dual cell of a face F: all points of F tie
// and dominate every other weight.
std::vector<HalfSpace> dual_cell_region(const WeightedPointSet& w, const std::vector<int>& F) {
    std::vector<HalfSpace> region;
    const int base = F[0];
    for (size_t r = 1; r < F.size(); ++r) {
        HalfSpace ge, le;
        ge.normal.assign(w.n, 0);
        for (int j = 0; j < w.n; ++j) ge.normal[j] = Rational(w.alpha(F[r])[j] - w.alpha(base)[j]);
        ge.offset = -(w.rho(F[r]) - w.rho(base));
        le.normal = ge.normal;
        for (auto& x : le.normal) x = -x;
        le.offset = w.rho(F[r]) - w.rho(base);
        region.push_back(ge);
        region.push_back(le);
    }
    for (int u = 0; u < static_cast<int>(w.points.size()); ++u) {
        if (std::find(F.begin(), F.end(), u) != F.end()) continue;
        HalfSpace dom;  // l_base - l_u >= 0
        dom.normal.assign(w.n, 0);
        for (int j = 0; j < w.n; ++j) dom.normal[j] = Rational(w.alpha(base)[j] - w.alpha(u)[j]);
        dom.offset = w.rho(u) - w.rho(base);
        region.push_back(dom);
    }
    return region;
}

}  // namespace

TropicalComplex build_tropical_complex(const WeightedPointSet& w, const RegularSubdivision& s) {
    TropicalComplex tc;
    tc.n = w.n;
    tc.degenerate = s.degenerate;
    tc.cells_by_dim.assign(std::max(w.n, 0), {});

    std::vector<PFace> faces = subdivision_faces(w, s);
    for (PFace& f : faces) {
        const int k = w.n - f.dim;  // dimension of the dual cell
        if (k < 0 || k >= w.n) continue;
        TropicalCell cell;
        cell.dim = k;
        std::vector<HalfSpace> region = dual_cell_region(w, f.vertices);
        cell.bounded = region_bounded(region, w.n);
        f.on_hull_boundary = !cell.bounded;
        LpResult feas = lp_maximize(region, QVec(w.n, 0));
        if (feas.status != LpStatus::Optimal)
            throw Error(ErrorKind::Internal, "dual cell of a P-face is empty");
        cell.witness = feas.x;
        const int base = f.vertices[0];
        for (size_t r = 1; r < f.vertices.size(); ++r) {
            QVec nrm(w.n);
            for (int j = 0; j < w.n; ++j)
                nrm[j] = Rational(w.alpha(f.vertices[r])[j] - w.alpha(base)[j]);
            cell.span_normals.push_back(std::move(nrm));
            cell.span_rhs.push_back(w.rho(f.vertices[r]) - w.rho(base));
        }
        cell.dual = f;
        tc.cells_by_dim[k].push_back(std::move(cell));
    }

    // Complement components, one per a_red member, labelled in a_red order.
    for (int label : s.a_red) {
        ComplementComponent comp;
        comp.label = label;
        for (int u = 0; u < static_cast<int>(w.points.size()); ++u) {
            if (u == label) continue;
            HalfSpace h;
            h.normal.assign(w.n, 0);
            for (int j = 0; j < w.n; ++j)
                h.normal[j] = Rational(w.alpha(label)[j] - w.alpha(u)[j]);
            h.offset = w.rho(u) - w.rho(label);
            comp.inequalities.push_back(std::move(h));
        }
        FullDimResult fd = region_full_dim(comp.inequalities, w.n);
        if (!fd.full_dim)
            throw Error(ErrorKind::Internal,
                        "component of " + vec_str(w.alpha(label)) + " is not full-dimensional");
        comp.interior_point = fd.interior;
        comp.bounded = region_bounded(comp.inequalities, w.n);
        tc.components.push_back(std::move(comp));
    }
    return tc;
}

// ---------------------------------------------------------------------------
// Curve graph (n = 2)

TropicalCurveGraph curve_graph(const WeightedPointSet& w, const RegularSubdivision& s,
                               const TropicalComplex& tc) {
    if (w.n != 2) throw Error(ErrorKind::WrongDimension, "curve_graph requires n = 2");
    if (s.degenerate)
        throw Error(ErrorKind::DegenerateInput, "curve_graph requires a full-dimensional complex");
    TropicalCurveGraph g;
    for (size_t c = 0; c < s.cells.size(); ++c) {
        TropicalCurveGraph::Vertex v;
        v.point = s.cells[c].slope;
        v.dual_cell = static_cast<int>(c);
        g.vertices.push_back(std::move(v));
    }
    for (const TropicalCell& cell : tc.cells_by_dim[1]) {
        const PFace& f = cell.dual;
        TropicalCurveGraph::Edge e;
        e.dual_points = {f.vertices[0], f.vertices[1]};
        e.multiplicity = content(vec_sub(w.alpha(f.vertices[1]), w.alpha(f.vertices[0])));
        if (f.incident_cells.size() == 2) {
            e.v0 = f.incident_cells[0];
            e.v1 = f.incident_cells[1];
            e.bounded = true;
        } else if (f.incident_cells.size() == 1) {
            e.v0 = f.incident_cells[0];
            e.v1 = -1;
            e.bounded = false;
            // Outward primitive normal of Conv(A) along the edge.
            ExponentVector ev = vec_sub(w.alpha(f.vertices[1]), w.alpha(f.vertices[0]));
            ExponentVector cand{-ev[1], ev[0]};
            cand = make_primitive(cand);
            bool ok = true;
            for (const auto& p : w.points)
                if (dot(vec_sub(p.alpha, w.alpha(f.vertices[0])), cand) > 0) ok = false;
            if (!ok) cand = vec_neg(cand);
            e.ray_dir = cand;
        } else {
            throw Error(ErrorKind::Internal, "P-edge contained in != 1,2 maximal cells");
        }
        g.edges.push_back(std::move(e));
    }
    // Betti number via union-find over bounded edges.
    std::vector<int> parent(g.vertices.size());
    std::iota(parent.begin(), parent.end(), 0);
    std::function<int(int)> find = [&](int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    int eb = 0;
    for (const auto& e : g.edges) {
        if (!e.bounded) continue;
        ++eb;
        parent[find(e.v0)] = find(e.v1);
    }
    std::set<int> roots;
    for (size_t i = 0; i < g.vertices.size(); ++i) roots.insert(find(static_cast<int>(i)));
    g.components = static_cast<int>(roots.size());
    g.genus = eb - static_cast<int>(g.vertices.size()) + g.components;
    return g;
}

}  // namespace tropmirror
