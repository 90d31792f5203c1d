#pragma once

#include <optional>
#include <vector>

#include "tropmirror/core.hpp"
#include "tropmirror/tropical.hpp"

namespace tropmirror {

/// A wall-crossing transform z_i -> h(z_beta)^{<C_beta, e_i>} z_i, where
/// z_beta is the formal monomial T^{omega(beta)} z^{del_beta}, or a flux
/// rescaling z_i -> T^{lambda_i} z_i.
///
/// Wall data requires <cycle, boundary> = 0 (the transform fixes z_beta);
/// this holds for every wall produced by a disc moduli evaluation cycle and
/// is what makes the negated cycle an inverse.
struct WallTransform {
    enum class Kind { Wall, Flux };
    Kind kind = Kind::Wall;

    // wall data
    Rational area;                    // omega(beta) > 0
    ExponentVector boundary;          // del_beta
    ExponentVector cycle;             // C_beta under H_{n-1}(L) ~ Z^n
    std::vector<NovikovSeries> h;     // h coefficients, h[0] = 1

    // flux data
    QVec shift;                       // lambda

    static WallTransform wall(const Rational& area, ExponentVector boundary, ExponentVector cycle,
                              std::vector<NovikovSeries> h);
    static WallTransform flux(QVec shift);
};

// Monomial-wise h(z_beta)^{<C,m>} z^m, extended linearly; truncated at
// `cutoff` (or the expression's own). Negative exponents with a non-monomial
// h require a finite cutoff (CutoffRequired).
ChartExpression apply_wall(const WallTransform& t, const ChartExpression& e,
                           const std::optional<Rational>& cutoff = std::nullopt);

// z_i -> T^{lambda_i} z_i.
ChartExpression apply_flux(const QVec& shift, const ChartExpression& e);

/// The leading-order converse charts: potential on U' (Laurent in x with a
/// z'^{-1} factor), potential on U'' (just y''), and the derived gluing
/// y'' = f~(x) z'^{-1} with f~ = sum over A_red of tau^{rho} x^alpha.
/// kappa corrections default to zero; a slot is kept for user-supplied values.
struct ConverseChartPair {
    ChartExpression ftilde;             // nv0 = 0, Laurent in x only
    ChartExpression uprime_potential;   // nv0 = 1 (slot = z'), powers may be -1
    ChartExpression udoubleprime_potential;  // nv0 = 1 (slot = y''), the monomial y''
    ChartExpression gluing;             // y'' expressed on U': f~ * z'^{-1}
    bool verified = false;              // substitution reproduces y''
};

ConverseChartPair build_converse(const WeightedPointSet& w, const RegularSubdivision& s,
                                 const std::vector<NovikovSeries>& kappa = {});

}  // namespace tropmirror
