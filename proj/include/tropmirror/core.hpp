#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include <boost/multiprecision/gmp.hpp>

namespace tropmirror {

using Rational = boost::multiprecision::mpq_rational;
using BigInt = boost::multiprecision::mpz_int;

// Error taxonomy shared across modules. `kind` is stable and machine-checkable;
// `what()` carries the human-readable detail.
enum class ErrorKind {
    ZeroSeries,
    NotInvertible,
    CutoffRequired,
    NotRegular,
    WrongDimension,
    DegenerateInput,
    NotClosedTrivalent,
    MinimizerNotRealized,
    ParseError,
    ValidationError,
    Internal,
};

class Error : public std::runtime_error {
  public:
    Error(ErrorKind kind, const std::string& msg) : std::runtime_error(msg), kind_(kind) {}
    ErrorKind kind() const { return kind_; }

  private:
    ErrorKind kind_;
};

const char* error_kind_name(ErrorKind k);

// ---------------------------------------------------------------------------
// Rational helpers

// Parses "p/q" or "p" (arbitrary precision, q > 0 after canonicalization).
Rational parse_rational(const std::string& s);
// Formats as "p/q", or "p" when the denominator is 1.
std::string rational_str(const Rational& q);

// ---------------------------------------------------------------------------
// Exponent vectors (lattice points, ray generators, boundary classes, ...)

using ExponentVector = std::vector<long long>;

long long dot(const ExponentVector& a, const ExponentVector& b);
ExponentVector vec_add(const ExponentVector& a, const ExponentVector& b);
ExponentVector vec_sub(const ExponentVector& a, const ExponentVector& b);
ExponentVector vec_neg(const ExponentVector& a);
ExponentVector vec_scale(long long k, const ExponentVector& a);
bool is_zero(const ExponentVector& a);
// gcd of absolute values; 0 for the zero vector.
long long content(const ExponentVector& a);
bool is_primitive(const ExponentVector& a);
ExponentVector make_primitive(const ExponentVector& a);
std::string vec_str(const ExponentVector& a);

// ---------------------------------------------------------------------------
// Novikov scalars

/// One monomial c*T^e of the Novikov field; exponents are kept rational so
/// all comparisons are decidable.
struct NovikovTerm {
    Rational coeff;
    Rational exp;

    bool operator==(const NovikovTerm& o) const { return coeff == o.coeff && exp == o.exp; }
};

/// A finite Novikov sum with an optional truncation energy. Terms are kept
/// sorted by strictly increasing exponent, zero coefficients dropped, and all
/// exponents strictly below the cutoff (nullopt = no truncation).
class NovikovSeries {
  public:
    NovikovSeries() = default;
    NovikovSeries(std::vector<NovikovTerm> terms, std::optional<Rational> cutoff);

    static NovikovSeries zero();
    static NovikovSeries one();
    static NovikovSeries monomial(const Rational& coeff, const Rational& exp);
    static NovikovSeries constant(const Rational& c);

    const std::vector<NovikovTerm>& terms() const { return terms_; }
    const std::optional<Rational>& cutoff() const { return cutoff_; }

    bool is_zero() const { return terms_.empty(); }
    bool is_one() const;
    bool is_monomial() const { return terms_.size() == 1 && !cutoff_; }
    // Smallest exponent; throws ZeroSeries on the zero series.
    Rational valuation() const;

    NovikovSeries neg() const;
    NovikovSeries truncated(const std::optional<Rational>& cutoff) const;
    std::string str() const;

    bool operator==(const NovikovSeries& o) const;

  private:
    std::vector<NovikovTerm> terms_;
    std::optional<Rational> cutoff_;  // nullopt = infinity
    void normalize();
};

NovikovSeries series_add(const NovikovSeries& a, const NovikovSeries& b);
NovikovSeries series_sub(const NovikovSeries& a, const NovikovSeries& b);
// Product truncated at min(cutoff(a), cutoff(b)); exact when both are infinite.
NovikovSeries series_mul(const NovikovSeries& a, const NovikovSeries& b);
// Inverse with valuation -val(a). Requires a monomial or a finite cutoff;
// the result carries cutoff(a) - 2*val(a) in the finite case.
NovikovSeries series_invert(const NovikovSeries& a);
NovikovSeries series_pow(const NovikovSeries& a, long long k);
// Equality of the truncations of a and b below `cutoff`, ignoring carried cutoffs.
bool series_equal_mod(const NovikovSeries& a, const NovikovSeries& b, const Rational& cutoff);

std::optional<Rational> min_cutoff(const std::optional<Rational>& a, const std::optional<Rational>& b);

// ---------------------------------------------------------------------------
// Chart expressions

/// A term key: Laurent exponents in the chart coordinates v_1..v_n together
/// with the powers of the distinguished coordinates v_{0,1}..v_{0,d} (d = 1
/// for hypersurfaces). Keeping the v_0 powers separate makes regularity on Y
/// checkable by inspection.
struct ExprKey {
    ExponentVector laurent;
    ExponentVector v0;

    bool operator<(const ExprKey& o) const {
        if (laurent != o.laurent) return laurent < o.laurent;
        return v0 < o.v0;
    }
    bool operator==(const ExprKey& o) const { return laurent == o.laurent && v0 == o.v0; }
};

/// Element of the ring of Novikov-coefficient Laurent terms in (v_1..v_n)
/// and polynomial-or-Laurent terms in the v_0 coordinates. Immutable in
/// spirit: all operations return new values.
class ChartExpression {
  public:
    ChartExpression() : nvars_(0), nv0_(0) {}
    ChartExpression(int nvars, int nv0) : nvars_(nvars), nv0_(nv0) {}

    static ChartExpression zero(int nvars, int nv0);
    static ChartExpression one(int nvars, int nv0);
    static ChartExpression monomial(int nvars, int nv0, const NovikovSeries& coeff,
                                    const ExponentVector& laurent, const ExponentVector& v0);
    // Convenience for the hypersurface case (single v0 power).
    static ChartExpression monomial1(int nvars, const NovikovSeries& coeff,
                                     const ExponentVector& laurent, long long v0pow);

    int nvars() const { return nvars_; }
    int nv0() const { return nv0_; }
    const std::map<ExprKey, NovikovSeries>& terms() const { return terms_; }

    // Chart label: the weight tuple (alpha^1..alpha^d) the expression is
    // written in; empty when the expression is chart-independent.
    const std::vector<ExponentVector>& chart() const { return chart_; }
    void set_chart(std::vector<ExponentVector> chart) { chart_ = std::move(chart); }

    bool is_zero() const { return terms_.empty(); }
    size_t term_count() const { return terms_.size(); }
    // All v0 powers nonnegative (regular on Y rather than just on Y^0).
    bool regular_on_Y() const;
    std::optional<Rational> cutoff() const;

    ChartExpression truncated(const std::optional<Rational>& cutoff) const;
    std::string str() const;

    bool operator==(const ChartExpression& o) const;

    friend ChartExpression expr_add(const ChartExpression& a, const ChartExpression& b);
    friend ChartExpression expr_sub(const ChartExpression& a, const ChartExpression& b);
    friend ChartExpression expr_mul(const ChartExpression& a, const ChartExpression& b);

  private:
    int nvars_;
    int nv0_;
    std::map<ExprKey, NovikovSeries> terms_;
    std::vector<ExponentVector> chart_;
    void insert_term(const ExprKey& k, const NovikovSeries& s);
};

ChartExpression expr_add(const ChartExpression& a, const ChartExpression& b);
ChartExpression expr_sub(const ChartExpression& a, const ChartExpression& b);
ChartExpression expr_mul(const ChartExpression& a, const ChartExpression& b);
ChartExpression expr_neg(const ChartExpression& a);
ChartExpression expr_scale(const NovikovSeries& c, const ChartExpression& a);
// Inverse of a unit: either a single invertible term, or unit + higher
// valuation tail (then a finite cutoff is required, from the expression or
// `cutoff`). Throws NotInvertible / CutoffRequired.
ChartExpression expr_invert(const ChartExpression& a,
                            const std::optional<Rational>& cutoff = std::nullopt);
// Integer powers, negative ones via expr_invert.
ChartExpression expr_pow(const ChartExpression& e, long long k,
                         const std::optional<Rational>& cutoff = std::nullopt);
bool expr_equal_mod(const ChartExpression& a, const ChartExpression& b, const Rational& cutoff);

// w_0 = -T^eps + T^eps * v_{0,slot} as an expression; 1 + T^{-eps} w_0
// normalizes to the monomial v_{0,slot} exactly.
ChartExpression w0_expression(int nvars, int nv0, const Rational& epsilon, int slot = 0);

}  // namespace tropmirror
