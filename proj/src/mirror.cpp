#include "tropmirror/mirror.hpp"

#include <algorithm>
#include <limits>
#include <map>
#include <set>

namespace tropmirror {

void AmbientToricData::validate(const WeightedPointSet& w) const {
    if (epsilon <= 0)
        throw Error(ErrorKind::ValidationError, "epsilon must be > 0");
    if (varpi.size() != rays.size() || lambda.size() != rays.size())
        throw Error(ErrorKind::ValidationError, "per-ray data length mismatch");
    for (size_t i = 0; i < rays.size(); ++i) {
        if (static_cast<int>(rays[i].size()) != w.n)
            throw Error(ErrorKind::ValidationError,
                        "ray " + vec_str(rays[i]) + " has wrong dimension");
        if (!is_primitive(rays[i]))
            throw Error(ErrorKind::ValidationError,
                        "ray " + vec_str(rays[i]) + " is not primitive");
        bool attained = false;
        for (const auto& p : w.points) {
            Rational v = Rational(dot(rays[i], p.alpha)) + lambda[i];
            if (v < 0)
                throw Error(ErrorKind::ValidationError,
                            "<sigma,alpha> + lambda(sigma) < 0 for sigma = " + vec_str(rays[i]) +
                                ", alpha = " + vec_str(p.alpha));
            if (v == 0) attained = true;
        }
        if (!attained)
            throw Error(ErrorKind::ValidationError,
                        "H is not transverse to the divisor of sigma = " + vec_str(rays[i]) +
                            " (<sigma,alpha> + lambda never vanishes on A)");
    }
}

// ---------------------------------------------------------------------------
// Mirror toric data

namespace {

ExponentVector mirror_ray(const ExponentVector& alpha) {
    ExponentVector r = vec_neg(alpha);
    r.push_back(1);
    return r;
}

}  // namespace

MirrorData build_mirror(const WeightedPointSet& w, const RegularSubdivision& s,
                        const TropicalComplex& tc) {
    MirrorData md;
    md.n = w.n;
    md.maximality = is_maximal(w, s);
    md.smooth = md.maximality.maximal;

    for (size_t k = 0; k < s.a_red.size(); ++k) {
        int label = s.a_red[k];
        MirrorFacet f;
        f.label = label;
        f.alpha = w.alpha(label);
        f.rho = w.rho(label);
        f.ray = mirror_ray(f.alpha);
        f.compact = tc.components[k].bounded;
        md.facets.push_back(std::move(f));
    }

    for (const SubdivisionCell& cell : s.cells) {
        MirrorCone cone;
        cone.cell_points = cell.points;
        for (int v : cell.vertices) cone.rays.push_back(mirror_ray(w.alpha(v)));
        std::vector<std::vector<BigInt>> gen(cone.rays.size(),
                                             std::vector<BigInt>(w.n + 1));
        for (size_t r = 0; r < cone.rays.size(); ++r)
            for (int j = 0; j <= w.n; ++j) gen[r][j] = BigInt(cone.rays[r][j]);
        cone.index = 1;
        for (const BigInt& d : elementary_divisors(gen)) cone.index *= d;
        cone.simplicial = static_cast<int>(cone.rays.size()) == cell.dim + 1;
        cone.smooth = cone.simplicial && cone.index == 1;
        md.cones.push_back(std::move(cone));
    }

    for (const TropicalCell& cell : tc.cells_by_dim.empty() ? std::vector<TropicalCell>{}
                                                            : tc.cells_by_dim[w.n - 1]) {
        if (cell.dual.vertices.size() < 2) continue;
        // The dual face is a P-edge exactly when it has two vertices.
        if (cell.dual.dim != 1) continue;
        MirrorStratum st;
        st.a = cell.dual.vertices[0];
        st.b = cell.dual.vertices[1];
        st.bounded = cell.bounded;
        st.multiplicity = content(vec_sub(w.alpha(st.b), w.alpha(st.a)));
        md.strata.push_back(st);
    }

    // Unimodular identification of Delta_Y with the orthant: possible exactly
    // when Sigma_Y has a single smooth maximal cone; the map rows are the
    // facet data (-alpha, 1 | rho(alpha)).
    if (md.cones.size() == 1 && md.cones[0].smooth &&
        static_cast<int>(md.cones[0].rays.size()) == w.n + 1)
    {
        QMat M;
        QVec t;
        const SubdivisionCell& cell = s.cells[0];
        for (int v : cell.vertices) {
            ExponentVector ray = mirror_ray(w.alpha(v));
            QVec row(w.n + 1);
            for (int j = 0; j <= w.n; ++j) row[j] = Rational(ray[j]);
            M.push_back(std::move(row));
            t.push_back(w.rho(v));
        }
        md.orthant_map = std::make_pair(std::move(M), std::move(t));
    }
    return md;
}

// ---------------------------------------------------------------------------
// Atlas and gluing

ChartAtlas build_atlas(const WeightedPointSet& w, const RegularSubdivision& s,
                       const TropicalComplex& tc) {
    ChartAtlas atlas;
    atlas.charts = s.a_red;
    std::set<std::pair<int, int>> edges;
    if (!tc.cells_by_dim.empty()) {
        for (const TropicalCell& cell : tc.cells_by_dim[w.n - 1]) {
            if (cell.dual.dim != 1) continue;
            int a = cell.dual.vertices[0], b = cell.dual.vertices[1];
            edges.insert({std::min(a, b), std::max(a, b)});
        }
    }
    for (auto [a, b] : edges) {
        atlas.gluings.push_back({a, b, vec_sub(w.alpha(b), w.alpha(a))});
        atlas.gluings.push_back({b, a, vec_sub(w.alpha(a), w.alpha(b))});
    }
    // Triangles in the edge graph (cocycle test sites).
    std::vector<int> verts = s.a_red;
    auto connected = [&](int a, int b) {
        return edges.count({std::min(a, b), std::max(a, b)}) > 0;
    };
    for (size_t i = 0; i < verts.size(); ++i)
        for (size_t j = i + 1; j < verts.size(); ++j) {
            if (!connected(verts[i], verts[j])) continue;
            for (size_t k = j + 1; k < verts.size(); ++k)
                if (connected(verts[i], verts[k]) && connected(verts[j], verts[k]))
                    atlas.triangles.push_back({verts[i], verts[j], verts[k]});
        }
    return atlas;
}

ChartExpression glue(const ChartExpression& e, const ExponentVector& from_alpha,
                     const ExponentVector& to_alpha, bool require_regular) {
    if (e.nv0() != 1)
        throw Error(ErrorKind::WrongDimension, "glue expects a single-v0 chart expression");
    ExponentVector delta = vec_sub(to_alpha, from_alpha);
    ChartExpression out(e.nvars(), 1);
    out.set_chart({to_alpha});
    for (const auto& [k, coeff] : e.terms()) {
        long long shift = dot(delta, k.laurent);
        ExponentVector v0 = k.v0;
        v0[0] += shift;
        if (require_regular && v0[0] < 0)
            throw Error(ErrorKind::NotRegular,
                        "image of monomial v^" + vec_str(k.laurent) +
                            " has negative v0 power " + std::to_string(v0[0]));
        out = expr_add(out, ChartExpression::monomial(e.nvars(), 1, coeff, k.laurent, v0));
    }
    out.set_chart({to_alpha});
    return out;
}

// ---------------------------------------------------------------------------
// Superpotentials

int minimizing_chart(const WeightedPointSet& w, const RegularSubdivision& s,
                     const ExponentVector& sigma) {
    int best = -1;
    long long best_v = std::numeric_limits<long long>::max();
    for (int i : s.a_red) {
        long long v = dot(sigma, w.alpha(i));
        if (v < best_v) {
            best_v = v;
            best = i;
        }
    }
    if (best < 0) throw Error(ErrorKind::Internal, "empty a_red");
    return best;
}

namespace {

SuperpotentialTerm make_wi(const WeightedPointSet& w, const RegularSubdivision& s,
                           const AmbientToricData& amb, int i) {
    SuperpotentialTerm t;
    t.name = "w" + std::to_string(i + 1);
    const ExponentVector& sigma = amb.rays[i];
    t.weight = vec_neg(sigma);
    // lambda(sigma_i) as an integer weight component; the compatibility
    // invariant forces it to be the integer -min <sigma_i, alpha>.
    long long lam = 0;
    {
        bool first = true;
        long long mn = 0;
        for (const auto& p : w.points) {
            long long v = dot(sigma, p.alpha);
            if (first || v < mn) mn = v;
            first = false;
        }
        lam = -mn;
    }
    if (Rational(lam) != amb.lambda[i])
        throw Error(ErrorKind::ValidationError,
                    "lambda(sigma) disagrees with -min <sigma, alpha> for sigma = " +
                        vec_str(sigma));
    t.weight.push_back(lam);
    t.coefficient = NovikovTerm{1, amb.varpi[i]};
    t.chart = minimizing_chart(w, s, sigma);
    t.expr = ChartExpression::monomial1(w.n, NovikovSeries::monomial(1, amb.varpi[i]), sigma, 0);
    t.expr.set_chart({w.alpha(t.chart)});
    return t;
}

}  // namespace

std::vector<SuperpotentialTerm> build_W0(const WeightedPointSet& w, const RegularSubdivision& s,
                                         const AmbientToricData& amb) {
    std::vector<SuperpotentialTerm> terms;
    SuperpotentialTerm w0;
    w0.name = "w0";
    w0.weight.assign(w.n, 0);
    w0.weight.push_back(1);
    w0.coefficient = NovikovTerm{1, amb.epsilon};
    w0.expr = w0_expression(w.n, 1, amb.epsilon);
    terms.push_back(std::move(w0));
    for (int i = 0; i < amb.r(); ++i) terms.push_back(make_wi(w, s, amb, i));
    return terms;
}

std::vector<SuperpotentialTerm> build_W0H(const WeightedPointSet& w, const RegularSubdivision& s,
                                          const AmbientToricData& amb) {
    std::vector<SuperpotentialTerm> terms;
    SuperpotentialTerm v0;
    v0.name = "v0";
    v0.weight.assign(w.n, 0);
    v0.weight.push_back(1);
    v0.coefficient = NovikovTerm{-1, 0};
    v0.expr = ChartExpression::monomial1(w.n, NovikovSeries::constant(-1), ExponentVector(w.n, 0), 1);
    terms.push_back(std::move(v0));
    for (int i = 0; i < amb.r(); ++i) terms.push_back(make_wi(w, s, amb, i));
    return terms;
}

long long vanishing_order(const SuperpotentialTerm& term, const ExponentVector& alpha) {
    ExponentVector ray = vec_neg(alpha);
    ray.push_back(1);
    return dot(term.weight, ray);
}

ChartExpression express_w_in_chart(const WeightedPointSet& w, const RegularSubdivision& s,
                                   const AmbientToricData& amb, int ray_index,
                                   const ExponentVector& alpha) {
    const ExponentVector& sigma = amb.rays[ray_index];
    int amin = minimizing_chart(w, s, sigma);
    long long exponent = dot(vec_sub(alpha, w.alpha(amin)), sigma);
    if (exponent < 0)
        throw Error(ErrorKind::Internal, "minimizer is not minimal");
    ChartExpression e = ChartExpression::monomial1(
        w.n, NovikovSeries::monomial(1, amb.varpi[ray_index]), sigma, exponent);
    e.set_chart({alpha});
    return e;
}

SingularFiberInfo singular_fiber_components(const WeightedPointSet& w,
                                            const RegularSubdivision& s,
                                            const AmbientToricData& amb) {
    SingularFiberInfo info;
    std::vector<SuperpotentialTerm> terms = build_W0H(w, s, amb);
    for (int label : s.a_red) {
        SingularFiberInfo::Entry e;
        e.label = label;
        bool all = true;
        for (const auto& t : terms) {
            long long ord = vanishing_order(t, w.alpha(label));
            if (ord >= 1) e.vanishing_terms.push_back(t.name);
            else all = false;
        }
        e.full_component = all;
        if (all) info.full_components.push_back(label);
        info.entries.push_back(std::move(e));
    }
    return info;
}

// ---------------------------------------------------------------------------
// Ray-shooting oracle (n = 2)

long long vanishing_order_by_ray_shooting(const WeightedPointSet& w, const TropicalComplex& tc,
                                          int label, const ExponentVector& sigma) {
    if (w.n != 2) throw Error(ErrorKind::WrongDimension, "ray shooting implemented for n = 2");
    const ComplementComponent* comp = nullptr;
    for (const auto& c : tc.components)
        if (c.label == label) comp = &c;
    if (!comp) throw Error(ErrorKind::ValidationError, "label is not in a_red");
    QVec d(w.n);
    for (int j = 0; j < w.n; ++j) d[j] = Rational(-sigma[j]);

    // March through the chambers; retry from a perturbed interior point when
    // the ray fails to cross walls transversally at simple ties.
    for (int attempt = 0; attempt < 12; ++attempt) {
        QVec x0 = comp->interior_point;
        if (attempt > 0) {
            // deterministic rational nudges, shrinking with the attempt count
            Rational mag = Rational(1, 97 + 13 * attempt);
            x0[attempt % 2] += ((attempt / 2) % 2 == 0 ? mag : -mag);
            auto [v0, am0] = tropical_value(w, x0);
            (void)v0;
            if (am0.size() != 1 || am0[0] != label) continue;
        }
        long long total = 0;
        int gamma = label;
        Rational tcur = 0;
        bool ok = true;
        for (int step = 0; step < 4 * static_cast<int>(w.points.size()) && ok; ++step) {
            // Next time one of the other forms catches the current dominator.
            bool found = false;
            Rational tbest;
            for (int u = 0; u < static_cast<int>(w.points.size()); ++u) {
                if (u == gamma) continue;
                Rational dnum = 0, dden = 0;
                for (int j = 0; j < w.n; ++j) {
                    dden += Rational(w.alpha(u)[j] - w.alpha(gamma)[j]) * d[j];
                    dnum += Rational(w.alpha(gamma)[j] - w.alpha(u)[j]) * x0[j];
                }
                dnum += w.rho(u) - w.rho(gamma);
                if (dden <= 0) continue;  // cannot catch up in this direction
                Rational t = dnum / dden;
                if (t <= tcur) continue;
                if (!found || t < tbest) {
                    found = true;
                    tbest = t;
                }
            }
            if (!found) break;  // final chamber reached
            QVec xstar(w.n);
            for (int j = 0; j < w.n; ++j) xstar[j] = x0[j] + tbest * d[j];
            auto [val, argmax] = tropical_value(w, xstar);
            (void)val;
            // New dominator: the argmax member maximizing <., d>.
            int delta = -1;
            long long bestpair = 0;
            bool tie = false;
            for (int u : argmax) {
                long long pd = -dot(w.alpha(u), sigma);
                if (delta < 0 || pd > bestpair) {
                    delta = u;
                    bestpair = pd;
                    tie = false;
                } else if (pd == bestpair) {
                    tie = true;
                }
            }
            if (tie || delta == gamma) {
                ok = false;  // ray runs along Pi_0; perturb and retry
                break;
            }
            total += dot(vec_sub(w.alpha(gamma), w.alpha(delta)), sigma);
            gamma = delta;
            tcur = tbest;
        }
        if (ok) return total;
    }
    throw Error(ErrorKind::Internal, "ray shooting failed to find a generic ray");
}

}  // namespace tropmirror
