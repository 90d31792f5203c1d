#include "tropmirror/ci.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <sstream>

namespace tropmirror {

void CIDatum::validate() const {
    if (hypersurfaces.empty())
        throw Error(ErrorKind::ValidationError, "complete intersection needs d >= 1");
    if (static_cast<int>(epsilons.size()) != d())
        throw Error(ErrorKind::ValidationError, "need one epsilon per hypersurface");
    for (const auto& e : epsilons)
        if (e <= 0) throw Error(ErrorKind::ValidationError, "epsilon must be > 0");
    for (const auto& h : hypersurfaces) {
        if (h.n != n)
            throw Error(ErrorKind::ValidationError, "hypersurfaces must share the torus dimension");
        h.validate();
    }
    if (varpi.size() != rays.size() || lambda.size() != rays.size())
        throw Error(ErrorKind::ValidationError, "per-ray data length mismatch");
    for (size_t j = 0; j < rays.size(); ++j) {
        if (static_cast<int>(rays[j].size()) != n)
            throw Error(ErrorKind::ValidationError, "ray dimension mismatch");
        if (!is_primitive(rays[j]))
            throw Error(ErrorKind::ValidationError,
                        "ray " + vec_str(rays[j]) + " is not primitive");
        if (static_cast<int>(lambda[j].size()) != d())
            throw Error(ErrorKind::ValidationError, "need one lambda per hypersurface per ray");
        for (int i = 0; i < d(); ++i) {
            bool attained = false;
            for (const auto& p : hypersurfaces[i].points) {
                Rational v = Rational(dot(rays[j], p.alpha)) + lambda[j][i];
                if (v < 0)
                    throw Error(ErrorKind::ValidationError,
                                "<sigma,alpha> + lambda < 0 for sigma = " + vec_str(rays[j]));
                if (v == 0) attained = true;
            }
            if (!attained)
                throw Error(ErrorKind::ValidationError,
                            "equality not attained for sigma = " + vec_str(rays[j]) +
                                " on hypersurface " + std::to_string(i + 1));
        }
    }
}

int RealizedTupleSet::find(const std::vector<int>& labels) const {
    for (size_t i = 0; i < tuples.size(); ++i)
        if (tuples[i].labels == labels) return static_cast<int>(i);
    return -1;
}

// ---------------------------------------------------------------------------

namespace {

std::vector<HalfSpace> dominance_region(const WeightedPointSet& w, int label) {
    std::vector<HalfSpace> out;
    for (int u = 0; u < static_cast<int>(w.points.size()); ++u) {
        if (u == label) continue;
        HalfSpace h;
        h.normal.assign(w.n, 0);
        for (int j = 0; j < w.n; ++j)
            h.normal[j] = Rational(w.alpha(label)[j] - w.alpha(u)[j]);
        h.offset = w.rho(u) - w.rho(label);
        out.push_back(std::move(h));
    }
    return out;
}

std::vector<ExponentVector> tuple_alphas(const CIDatum& ci, const std::vector<int>& labels) {
    std::vector<ExponentVector> out;
    for (int i = 0; i < ci.d(); ++i) out.push_back(ci.hypersurfaces[i].alpha(labels[i]));
    return out;
}

}  // namespace

RealizedTupleSet realized_tuples(const CIDatum& ci,
                                 const std::vector<RegularSubdivision>& subs) {
    RealizedTupleSet out;
    std::vector<int> idx(ci.d(), 0);
    // product over per-hypersurface a_red
    while (true) {
        std::vector<int> labels(ci.d());
        for (int i = 0; i < ci.d(); ++i) labels[i] = subs[i].a_red[idx[i]];
        std::vector<HalfSpace> region;
        for (int i = 0; i < ci.d(); ++i) {
            auto r = dominance_region(ci.hypersurfaces[i], labels[i]);
            region.insert(region.end(), r.begin(), r.end());
        }
        FullDimResult fd = region_full_dim(region, ci.n);
        if (fd.full_dim) {
            RealizedTuple t;
            t.labels = labels;
            t.inequalities = std::move(region);
            t.interior_point = fd.interior;
            t.bounded = region_bounded(t.inequalities, ci.n);
            out.tuples.push_back(std::move(t));
        }
        int i = ci.d() - 1;
        while (i >= 0 && idx[i] + 1 == static_cast<int>(subs[i].a_red.size())) {
            idx[i] = 0;
            --i;
        }
        if (i < 0) break;
        ++idx[i];
    }
    std::sort(out.tuples.begin(), out.tuples.end(),
              [&](const RealizedTuple& a, const RealizedTuple& b) {
                  return tuple_alphas(ci, a.labels) < tuple_alphas(ci, b.labels);
              });
    return out;
}

// ---------------------------------------------------------------------------

ChartExpression ci_glue(const ChartExpression& e, const std::vector<ExponentVector>& from,
                        const std::vector<ExponentVector>& to, bool require_regular) {
    if (e.nv0() != static_cast<int>(from.size()) || from.size() != to.size())
        throw Error(ErrorKind::WrongDimension, "ci_glue chart tuple size mismatch");
    ChartExpression out(e.nvars(), e.nv0());
    out.set_chart(to);
    for (const auto& [k, coeff] : e.terms()) {
        ExponentVector v0 = k.v0;
        for (size_t i = 0; i < from.size(); ++i) {
            v0[i] += dot(vec_sub(to[i], from[i]), k.laurent);
            if (require_regular && v0[i] < 0)
                throw Error(ErrorKind::NotRegular, "negative v0 power in ci gluing image");
        }
        out = expr_add(out, ChartExpression::monomial(e.nvars(), e.nv0(), coeff, k.laurent, v0));
    }
    out.set_chart(to);
    return out;
}

long long ci_vanishing_order(const CITerm& term, const CIFacet& facet) {
    return dot(term.weight, facet.ray);
}

ChartExpression ci_express_w_in_chart(const CIDatum& ci,
                                      const std::vector<RegularSubdivision>& subs, int ray_index,
                                      const std::vector<ExponentVector>& chart) {
    const ExponentVector& sigma = ci.rays[ray_index];
    ExponentVector v0(ci.d());
    for (int i = 0; i < ci.d(); ++i) {
        int amin = minimizing_chart(ci.hypersurfaces[i], subs[i], sigma);
        long long ex = dot(vec_sub(chart[i], ci.hypersurfaces[i].alpha(amin)), sigma);
        if (ex < 0) throw Error(ErrorKind::Internal, "minimizer is not minimal");
        v0[i] = ex;
    }
    ChartExpression e = ChartExpression::monomial(
        ci.n, ci.d(), NovikovSeries::monomial(1, ci.varpi[ray_index]), sigma, v0);
    e.set_chart(chart);
    return e;
}

// ---------------------------------------------------------------------------

namespace {

// Vertices of the complex refining all Pi_i: solutions of n independent tie
// equations (each between two weights of one hypersurface) at which the
// per-hypersurface argmax cells have dimensions summing to n.
struct TieHyperplane {
    int hyp;
    int a, b;  // point indices
};

std::vector<CICone> enumerate_cones(const CIDatum& ci) {
    std::vector<TieHyperplane> ties;
    for (int i = 0; i < ci.d(); ++i) {
        const auto& w = ci.hypersurfaces[i];
        for (int a = 0; a < static_cast<int>(w.points.size()); ++a)
            for (int b = a + 1; b < static_cast<int>(w.points.size()); ++b)
                ties.push_back({i, a, b});
    }
    std::map<QVec, CICone> seen;
    std::vector<int> idx(ci.n);
    std::function<void(int, int)> rec = [&](int start, int depth) {
        if (depth == ci.n) {
            QMat M(ci.n, QVec(ci.n));
            QVec rhs(ci.n);
            for (int r = 0; r < ci.n; ++r) {
                const TieHyperplane& t = ties[idx[r]];
                const auto& w = ci.hypersurfaces[t.hyp];
                for (int c = 0; c < ci.n; ++c)
                    M[r][c] = Rational(w.alpha(t.a)[c] - w.alpha(t.b)[c]);
                rhs[r] = w.rho(t.a) - w.rho(t.b);
            }
            auto xi = solve_linear(M, rhs);
            if (!xi || seen.count(*xi)) return;
            CICone cone;
            cone.dual_point = *xi;
            int dimsum = 0;
            for (int i = 0; i < ci.d(); ++i) {
                auto [val, argmax] = tropical_value(ci.hypersurfaces[i], *xi);
                (void)val;
                QMat diffs;
                for (size_t r = 1; r < argmax.size(); ++r) {
                    QVec dv(ci.n);
                    for (int c = 0; c < ci.n; ++c)
                        dv[c] = Rational(ci.hypersurfaces[i].alpha(argmax[r])[c] -
                                         ci.hypersurfaces[i].alpha(argmax[0])[c]);
                    diffs.push_back(dv);
                }
                dimsum += rank(diffs);
                cone.tight.push_back(argmax);
            }
            if (dimsum != ci.n) return;
            // Ray generators: vertices of each argmax cell.
            int gens = 0;
            for (int i = 0; i < ci.d(); ++i) {
                const auto& w = ci.hypersurfaces[i];
                std::vector<QVec> pts;
                for (int p : cone.tight[i]) {
                    QVec q(ci.n);
                    for (int c = 0; c < ci.n; ++c) q[c] = Rational(w.alpha(p)[c]);
                    pts.push_back(q);
                }
                for (size_t t = 0; t < cone.tight[i].size(); ++t) {
                    if (pts.size() > 1 && !supporting_face_exists(pts, {static_cast<int>(t)}))
                        continue;
                    ExponentVector ray = vec_neg(w.alpha(cone.tight[i][t]));
                    for (int s = 0; s < ci.d(); ++s) ray.push_back(s == i ? 1 : 0);
                    cone.rays.push_back(std::move(ray));
                    ++gens;
                }
            }
            std::vector<std::vector<BigInt>> gmat(cone.rays.size(),
                                                  std::vector<BigInt>(ci.n + ci.d()));
            for (size_t r = 0; r < cone.rays.size(); ++r)
                for (int c = 0; c < ci.n + ci.d(); ++c) gmat[r][c] = BigInt(cone.rays[r][c]);
            cone.index = 1;
            for (const BigInt& dd : elementary_divisors(gmat)) cone.index *= dd;
            cone.simplicial = gens == ci.n + ci.d();
            cone.smooth = cone.simplicial && cone.index == 1;
            seen.emplace(*xi, std::move(cone));
            return;
        }
        for (int t = start; t < static_cast<int>(ties.size()); ++t) {
            idx[depth] = t;
            rec(t + 1, depth + 1);
        }
    };
    if (ci.n > 0) rec(0, 0);
    std::vector<CICone> out;
    for (auto& [xi, c] : seen) out.push_back(std::move(c));
    return out;
}

}  // namespace

CIMirror build_ci_mirror(const CIDatum& ci) {
    ci.validate();
    CIMirror mir;
    mir.n = ci.n;
    mir.d = ci.d();

    std::vector<RegularSubdivision> subs;
    std::vector<TropicalComplex> complexes;
    for (const auto& w : ci.hypersurfaces) {
        subs.push_back(lower_hull_subdivision(w));
        complexes.push_back(build_tropical_complex(w, subs.back()));
    }
    mir.tuples = realized_tuples(ci, subs);

    // Facets: (i, alpha) over each hypersurface's a_red.
    for (int i = 0; i < ci.d(); ++i) {
        const auto& w = ci.hypersurfaces[i];
        for (size_t k = 0; k < subs[i].a_red.size(); ++k) {
            int label = subs[i].a_red[k];
            CIFacet f;
            f.hypersurface = i;
            f.label = label;
            f.alpha = w.alpha(label);
            f.rho = w.rho(label);
            f.ray = vec_neg(f.alpha);
            for (int s = 0; s < ci.d(); ++s) f.ray.push_back(s == i ? 1 : 0);
            f.compact = ci.d() == 1 && complexes[i].components[k].bounded;
            mir.facets.push_back(std::move(f));
        }
    }

    mir.cones = enumerate_cones(ci);
    mir.smooth = !mir.cones.empty();
    for (const auto& c : mir.cones)
        if (!c.smooth) mir.smooth = false;

    // Strata: pairs of realized tuples sharing an (n-1)-dimensional boundary.
    for (size_t a = 0; a < mir.tuples.tuples.size(); ++a)
        for (size_t b = a + 1; b < mir.tuples.tuples.size(); ++b) {
            std::vector<HalfSpace> joint = mir.tuples.tuples[a].inequalities;
            joint.insert(joint.end(), mir.tuples.tuples[b].inequalities.begin(),
                         mir.tuples.tuples[b].inequalities.end());
            if (region_dim(joint, ci.n) != ci.n - 1) continue;
            CIStratum st;
            st.a = static_cast<int>(a);
            st.b = static_cast<int>(b);
            st.bounded = region_bounded(joint, ci.n);
            mir.strata.push_back(st);
        }

    // Superpotentials.
    for (int i = 0; i < ci.d(); ++i) {
        CITerm w0;
        w0.name = ci.d() == 1 ? "w0" : "w0_" + std::to_string(i + 1);
        w0.weight.assign(ci.n, 0);
        for (int s = 0; s < ci.d(); ++s) w0.weight.push_back(s == i ? 1 : 0);
        w0.coefficient = NovikovTerm{1, ci.epsilons[i]};
        w0.expr = w0_expression(ci.n, ci.d(), ci.epsilons[i], i);
        mir.W0.push_back(w0);

        CITerm v0;
        v0.name = ci.d() == 1 ? "v0" : "v0_" + std::to_string(i + 1);
        v0.weight = w0.weight;
        v0.coefficient = NovikovTerm{-1, 0};
        ExponentVector slot(ci.d(), 0);
        slot[i] = 1;
        v0.expr = ChartExpression::monomial(ci.n, ci.d(), NovikovSeries::constant(-1),
                                            ExponentVector(ci.n, 0), slot);
        mir.W0H.push_back(v0);
    }
    for (int j = 0; j < ci.r(); ++j) {
        CITerm t;
        t.name = "w" + std::to_string(j + 1);
        t.weight = vec_neg(ci.rays[j]);
        std::vector<int> min_labels(ci.d());
        for (int i = 0; i < ci.d(); ++i) {
            min_labels[i] = minimizing_chart(ci.hypersurfaces[i], subs[i], ci.rays[j]);
            long long lam = -dot(ci.rays[j], ci.hypersurfaces[i].alpha(min_labels[i]));
            if (Rational(lam) != ci.lambda[j][i])
                throw Error(ErrorKind::ValidationError,
                            "lambda disagrees with -min <sigma, alpha> for sigma = " +
                                vec_str(ci.rays[j]));
            t.weight.push_back(lam);
        }
        t.coefficient = NovikovTerm{1, ci.varpi[j]};
        t.chart_labels = min_labels;
        t.chart_realized = mir.tuples.find(min_labels) >= 0;
        if (!t.chart_realized) {
            std::ostringstream os;
            os << "MinimizerNotRealized: the simultaneous minimizer tuple (";
            for (int i = 0; i < ci.d(); ++i)
                os << (i ? "," : "") << vec_str(ci.hypersurfaces[i].alpha(min_labels[i]));
            os << ") for sigma = " << vec_str(ci.rays[j])
               << " is not a complement component; the toric weight is still well-defined";
            mir.warnings.push_back(os.str());
        }
        t.expr = ChartExpression::monomial(ci.n, ci.d(),
                                           NovikovSeries::monomial(1, ci.varpi[j]), ci.rays[j],
                                           ExponentVector(ci.d(), 0));
        std::vector<ExponentVector> chart_alphas;
        for (int i = 0; i < ci.d(); ++i)
            chart_alphas.push_back(ci.hypersurfaces[i].alpha(min_labels[i]));
        t.expr.set_chart(chart_alphas);
        mir.W0.push_back(t);
        mir.W0H.push_back(t);
    }

    // Transversality heuristic: warn when codimension-1 cells of two tropical
    // complexes overlap in an (n-1)-dimensional set.
    for (int i = 0; i < ci.d(); ++i)
        for (int j = i + 1; j < ci.d(); ++j) {
            if (ci.n - 1 < 0 || complexes[i].cells_by_dim.empty()) continue;
            for (const auto& ca : complexes[i].cells_by_dim[ci.n - 1])
                for (const auto& cb : complexes[j].cells_by_dim[ci.n - 1]) {
                    std::vector<HalfSpace> joint;
                    auto add_cell = [&](const TropicalCell& c, int hyp) {
                        auto reg = dominance_region(ci.hypersurfaces[hyp], c.dual.vertices[0]);
                        joint.insert(joint.end(), reg.begin(), reg.end());
                        for (size_t r = 0; r < c.span_normals.size(); ++r) {
                            HalfSpace ge{c.span_normals[r], -c.span_rhs[r]};
                            HalfSpace le{c.span_normals[r], -c.span_rhs[r]};
                            for (auto& x : le.normal) x = -x;
                            le.offset = c.span_rhs[r];
                            joint.push_back(ge);
                            joint.push_back(le);
                        }
                    };
                    add_cell(ca, i);
                    add_cell(cb, j);
                    if (region_dim(joint, ci.n) == ci.n - 1) {
                        mir.warnings.push_back(
                            "tropical hypersurfaces " + std::to_string(i + 1) + " and " +
                            std::to_string(j + 1) +
                            " share a codimension-1 piece (non-transverse intersection)");
                        goto done_transversality;
                    }
                }
        }
done_transversality:
    return mir;
}

}  // namespace tropmirror
