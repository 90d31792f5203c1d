#include "tropmirror/wallcross.hpp"

#include <algorithm>
#include <map>

namespace tropmirror {

WallTransform WallTransform::wall(const Rational& area, ExponentVector boundary,
                                  ExponentVector cycle, std::vector<NovikovSeries> h) {
    if (area <= 0)
        throw Error(ErrorKind::ValidationError, "wall area omega(beta) must be > 0");
    if (h.empty() || !h[0].is_one())
        throw Error(ErrorKind::ValidationError, "h must have leading coefficient 1");
    if (boundary.size() != cycle.size())
        throw Error(ErrorKind::WrongDimension, "boundary and cycle dimensions differ");
    if (dot(cycle, boundary) != 0)
        throw Error(ErrorKind::ValidationError,
                    "wall cycle must pair to zero with the boundary class");
    WallTransform t;
    t.kind = Kind::Wall;
    t.area = area;
    t.boundary = std::move(boundary);
    t.cycle = std::move(cycle);
    t.h = std::move(h);
    return t;
}

WallTransform WallTransform::flux(QVec shift) {
    WallTransform t;
    t.kind = Kind::Flux;
    t.shift = std::move(shift);
    return t;
}

namespace {

// h(z_beta) as a chart expression: sum_j h_j T^{j omega} z^{j del_beta}.
ChartExpression h_of_zbeta(const WallTransform& t, int nvars, int nv0,
                           const std::optional<Rational>& cutoff) {
    ChartExpression acc = ChartExpression::zero(nvars, nv0);
    for (size_t j = 0; j < t.h.size(); ++j) {
        NovikovSeries cj = series_mul(t.h[j], NovikovSeries::monomial(1, t.area * Rational(j)));
        if (cutoff) cj = cj.truncated(cutoff);
        if (cj.is_zero()) continue;
        acc = expr_add(acc, ChartExpression::monomial(nvars, nv0, cj,
                                                      vec_scale(static_cast<long long>(j),
                                                                t.boundary),
                                                      ExponentVector(nv0, 0)));
    }
    return acc;
}

bool h_is_trivial(const WallTransform& t) {
    return t.h.size() == 1;  // h = 1: the transform is the identity
}

}  // namespace

ChartExpression apply_wall(const WallTransform& t, const ChartExpression& e,
                           const std::optional<Rational>& cutoff) {
    if (t.kind != WallTransform::Kind::Wall)
        throw Error(ErrorKind::ValidationError, "apply_wall needs a wall-kind transform");
    if (static_cast<int>(t.boundary.size()) != e.nvars())
        throw Error(ErrorKind::WrongDimension, "wall transform dimension mismatch");
    std::optional<Rational> cut = min_cutoff(cutoff, e.cutoff());
    if (h_is_trivial(t) || is_zero(t.cycle)) return e.truncated(cut);

    ChartExpression hz = h_of_zbeta(t, e.nvars(), e.nv0(), cut);
    std::map<long long, ChartExpression> powers;
    ChartExpression out = ChartExpression::zero(e.nvars(), e.nv0());
    out.set_chart(e.chart());
    for (const auto& [k, coeff] : e.terms()) {
        long long expnt = dot(t.cycle, k.laurent);
        auto it = powers.find(expnt);
        if (it == powers.end()) {
            if (expnt < 0 && !cut)
                throw Error(ErrorKind::CutoffRequired,
                            "negative wall exponent requires a finite cutoff");
            it = powers.emplace(expnt, expr_pow(hz, expnt, cut)).first;
        }
        ChartExpression term = ChartExpression::monomial(e.nvars(), e.nv0(), coeff, k.laurent, k.v0);
        out = expr_add(out, expr_mul(it->second, term));
    }
    return out.truncated(cut);
}

ChartExpression apply_flux(const QVec& shift, const ChartExpression& e) {
    if (static_cast<int>(shift.size()) != e.nvars())
        throw Error(ErrorKind::WrongDimension, "flux shift dimension mismatch");
    ChartExpression out = ChartExpression::zero(e.nvars(), e.nv0());
    out.set_chart(e.chart());
    for (const auto& [k, coeff] : e.terms()) {
        Rational d = 0;
        for (int j = 0; j < e.nvars(); ++j) d += shift[j] * Rational(k.laurent[j]);
        NovikovSeries shifted = series_mul(coeff, NovikovSeries::monomial(1, d));
        out = expr_add(out, ChartExpression::monomial(e.nvars(), e.nv0(), shifted, k.laurent, k.v0));
    }
    return out;
}

// ---------------------------------------------------------------------------
// Converse construction

ConverseChartPair build_converse(const WeightedPointSet& w, const RegularSubdivision& s,
                                 const std::vector<NovikovSeries>& kappa) {
    if (!kappa.empty() && kappa.size() != s.a_red.size())
        throw Error(ErrorKind::ValidationError, "kappa must have one entry per a_red weight");
    for (const auto& k : kappa)
        if (!k.is_zero() && k.valuation() <= 0)
            throw Error(ErrorKind::ValidationError, "kappa corrections must have valuation > 0");
    ConverseChartPair out;

    // f~ = sum over A_red of (1 + kappa_alpha) tau^{rho(alpha)} x^alpha.
    ChartExpression ft = ChartExpression::zero(w.n, 0);
    // U' potential built independently, term by term, with the z'^{-1} factor.
    ChartExpression up = ChartExpression::zero(w.n, 1);
    for (size_t i = 0; i < s.a_red.size(); ++i) {
        int label = s.a_red[i];
        NovikovSeries c = NovikovSeries::one();
        if (!kappa.empty()) c = series_add(c, kappa[i]);
        NovikovSeries coeff = series_mul(c, NovikovSeries::monomial(1, w.rho(label)));
        ft = expr_add(ft, ChartExpression::monomial(w.n, 0, coeff, w.alpha(label), {}));
        up = expr_add(up, ChartExpression::monomial1(w.n, coeff, w.alpha(label), -1));
    }
    out.ftilde = ft;
    out.uprime_potential = up;
    // U'' potential: the unique section class through each point contributes
    // y'' with count 1.
    out.udoubleprime_potential =
        ChartExpression::monomial1(w.n, NovikovSeries::one(), ExponentVector(w.n, 0), 1);

    // Derived gluing y'' = f~(x) z'^{-1}, computed by an actual division of
    // f~ (placed in the z' chart) by the monomial z'.
    ChartExpression ft_slot = ChartExpression::zero(w.n, 1);
    for (const auto& [k, coeff] : ft.terms())
        ft_slot = expr_add(ft_slot, ChartExpression::monomial1(w.n, coeff, k.laurent, 0));
    ChartExpression zprime =
        ChartExpression::monomial1(w.n, NovikovSeries::one(), ExponentVector(w.n, 0), 1);
    out.gluing = expr_mul(ft_slot, expr_invert(zprime));

    // Symbolic consistency: substituting y'' = gluing into the U'' potential
    // must reproduce the U' potential, and gluing * z' must return f~.
    out.verified = (out.gluing == out.uprime_potential) &&
                   (expr_mul(out.gluing, zprime) == ft_slot);
    return out;
}

}  // namespace tropmirror
