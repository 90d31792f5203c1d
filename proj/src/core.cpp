#include "tropmirror/core.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace tropmirror {

const char* error_kind_name(ErrorKind k) {
    switch (k) {
        case ErrorKind::ZeroSeries: return "ZeroSeries";
        case ErrorKind::NotInvertible: return "NotInvertible";
        case ErrorKind::CutoffRequired: return "CutoffRequired";
        case ErrorKind::NotRegular: return "NotRegular";
        case ErrorKind::WrongDimension: return "WrongDimension";
        case ErrorKind::DegenerateInput: return "DegenerateInput";
        case ErrorKind::NotClosedTrivalent: return "NotClosedTrivalent";
        case ErrorKind::MinimizerNotRealized: return "MinimizerNotRealized";
        case ErrorKind::ParseError: return "ParseError";
        case ErrorKind::ValidationError: return "ValidationError";
        case ErrorKind::Internal: return "Internal";
    }
    return "Unknown";
}

// ---------------------------------------------------------------------------
// Rational helpers

Rational parse_rational(const std::string& s) {
    if (s.empty()) throw Error(ErrorKind::ParseError, "empty rational literal");
    // mpq accepts "p/q" directly but also things like "1.5"; keep the format strict.
    size_t slash = s.find('/');
    auto check_int = [&](const std::string& t) {
        if (t.empty()) return false;
        size_t i = (t[0] == '-' || t[0] == '+') ? 1 : 0;
        if (i == t.size()) return false;
        for (; i < t.size(); ++i)
            if (!std::isdigit(static_cast<unsigned char>(t[i]))) return false;
        return true;
    };
    try {
        if (slash == std::string::npos) {
            if (!check_int(s)) throw Error(ErrorKind::ParseError, "bad rational literal '" + s + "'");
            return Rational(BigInt(s));
        }
        std::string p = s.substr(0, slash), q = s.substr(slash + 1);
        if (!check_int(p) || !check_int(q))
            throw Error(ErrorKind::ParseError, "bad rational literal '" + s + "'");
        BigInt den(q);
        if (den == 0) throw Error(ErrorKind::ParseError, "zero denominator in '" + s + "'");
        return Rational(BigInt(p)) / Rational(den);
    } catch (const Error&) {
        throw;
    } catch (const std::exception&) {
        throw Error(ErrorKind::ParseError, "bad rational literal '" + s + "'");
    }
}

std::string rational_str(const Rational& q) { return q.str(); }

// ---------------------------------------------------------------------------
// Exponent vectors

long long dot(const ExponentVector& a, const ExponentVector& b) {
    if (a.size() != b.size())
        throw Error(ErrorKind::WrongDimension, "dot of vectors of different dimension");
    long long s = 0;
    for (size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

ExponentVector vec_add(const ExponentVector& a, const ExponentVector& b) {
    if (a.size() != b.size()) throw Error(ErrorKind::WrongDimension, "vec_add dimension mismatch");
    ExponentVector r(a.size());
    for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
    return r;
}

ExponentVector vec_sub(const ExponentVector& a, const ExponentVector& b) {
    if (a.size() != b.size()) throw Error(ErrorKind::WrongDimension, "vec_sub dimension mismatch");
    ExponentVector r(a.size());
    for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
    return r;
}

ExponentVector vec_neg(const ExponentVector& a) {
    ExponentVector r(a.size());
    for (size_t i = 0; i < a.size(); ++i) r[i] = -a[i];
    return r;
}

ExponentVector vec_scale(long long k, const ExponentVector& a) {
    ExponentVector r(a.size());
    for (size_t i = 0; i < a.size(); ++i) r[i] = k * a[i];
    return r;
}

bool is_zero(const ExponentVector& a) {
    return std::all_of(a.begin(), a.end(), [](long long x) { return x == 0; });
}

long long content(const ExponentVector& a) {
    long long g = 0;
    for (long long x : a) g = std::gcd(g, x < 0 ? -x : x);
    return g;
}

bool is_primitive(const ExponentVector& a) { return content(a) == 1; }

ExponentVector make_primitive(const ExponentVector& a) {
    long long g = content(a);
    if (g == 0) return a;
    ExponentVector r(a.size());
    for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] / g;
    return r;
}

std::string vec_str(const ExponentVector& a) {
    std::ostringstream os;
    os << "(";
    for (size_t i = 0; i < a.size(); ++i) {
        if (i) os << ",";
        os << a[i];
    }
    os << ")";
    return os.str();
}

// ---------------------------------------------------------------------------
// NovikovSeries

NovikovSeries::NovikovSeries(std::vector<NovikovTerm> terms, std::optional<Rational> cutoff)
    : terms_(std::move(terms)), cutoff_(std::move(cutoff)) {
    normalize();
}

void NovikovSeries::normalize() {
    std::sort(terms_.begin(), terms_.end(),
              [](const NovikovTerm& a, const NovikovTerm& b) { return a.exp < b.exp; });
    std::vector<NovikovTerm> out;
    for (const auto& t : terms_) {
        if (cutoff_ && t.exp >= *cutoff_) continue;
        if (!out.empty() && out.back().exp == t.exp) {
            out.back().coeff += t.coeff;
        } else {
            out.push_back(t);
        }
    }
    out.erase(std::remove_if(out.begin(), out.end(),
                             [](const NovikovTerm& t) { return t.coeff == 0; }),
              out.end());
    terms_ = std::move(out);
}

NovikovSeries NovikovSeries::zero() { return NovikovSeries({}, std::nullopt); }
NovikovSeries NovikovSeries::one() { return monomial(1, 0); }

NovikovSeries NovikovSeries::monomial(const Rational& coeff, const Rational& exp) {
    return NovikovSeries({NovikovTerm{coeff, exp}}, std::nullopt);
}

NovikovSeries NovikovSeries::constant(const Rational& c) { return monomial(c, 0); }

bool NovikovSeries::is_one() const {
    return terms_.size() == 1 && terms_[0].coeff == 1 && terms_[0].exp == 0;
}

Rational NovikovSeries::valuation() const {
    if (terms_.empty()) throw Error(ErrorKind::ZeroSeries, "valuation of the zero series");
    return terms_[0].exp;
}

NovikovSeries NovikovSeries::neg() const {
    std::vector<NovikovTerm> t = terms_;
    for (auto& x : t) x.coeff = -x.coeff;
    return NovikovSeries(std::move(t), cutoff_);
}

NovikovSeries NovikovSeries::truncated(const std::optional<Rational>& cutoff) const {
    return NovikovSeries(terms_, min_cutoff(cutoff_, cutoff));
}

std::string NovikovSeries::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    for (size_t i = 0; i < terms_.size(); ++i) {
        const auto& t = terms_[i];
        if (i) os << (t.coeff > 0 ? " + " : " - ");
        else if (t.coeff < 0) os << "-";
        Rational c = abs(t.coeff);
        if (t.exp == 0) {
            os << rational_str(c);
        } else {
            if (c != 1) os << rational_str(c) << "*";
            os << "T^" << rational_str(t.exp);
        }
    }
    if (cutoff_) os << " (mod T^" << rational_str(*cutoff_) << ")";
    return os.str();
}

bool NovikovSeries::operator==(const NovikovSeries& o) const {
    return terms_ == o.terms_ && cutoff_ == o.cutoff_;
}

std::optional<Rational> min_cutoff(const std::optional<Rational>& a, const std::optional<Rational>& b) {
    if (!a) return b;
    if (!b) return a;
    return std::min(*a, *b);
}

NovikovSeries series_add(const NovikovSeries& a, const NovikovSeries& b) {
    std::vector<NovikovTerm> t = a.terms();
    t.insert(t.end(), b.terms().begin(), b.terms().end());
    return NovikovSeries(std::move(t), min_cutoff(a.cutoff(), b.cutoff()));
}

NovikovSeries series_sub(const NovikovSeries& a, const NovikovSeries& b) {
    return series_add(a, b.neg());
}

NovikovSeries series_mul(const NovikovSeries& a, const NovikovSeries& b) {
    std::vector<NovikovTerm> t;
    t.reserve(a.terms().size() * b.terms().size());
    for (const auto& x : a.terms())
        for (const auto& y : b.terms())
            t.push_back(NovikovTerm{x.coeff * y.coeff, x.exp + y.exp});
    return NovikovSeries(std::move(t), min_cutoff(a.cutoff(), b.cutoff()));
}

NovikovSeries series_invert(const NovikovSeries& a) {
    if (a.is_zero()) throw Error(ErrorKind::ZeroSeries, "cannot invert the zero series");
    const Rational v = a.valuation();
    const Rational c = a.terms()[0].coeff;
    if (a.terms().size() == 1) {
        std::optional<Rational> cut;
        if (a.cutoff()) cut = *a.cutoff() - 2 * v;
        return NovikovSeries({NovikovTerm{1 / c, -v}}, cut);
    }
    if (!a.cutoff())
        throw Error(ErrorKind::CutoffRequired,
                    "inverting a non-monomial series requires a finite cutoff");
    // a = c T^v (1 + u), val(u) > 0; expand (1+u)^{-1} geometrically mod T^{E-v}.
    const Rational unit_cut = *a.cutoff() - v;
    std::vector<NovikovTerm> ut;
    for (size_t i = 1; i < a.terms().size(); ++i)
        ut.push_back(NovikovTerm{a.terms()[i].coeff / c, a.terms()[i].exp - v});
    NovikovSeries u(std::move(ut), unit_cut);
    NovikovSeries acc = NovikovSeries::one().truncated(unit_cut);
    NovikovSeries pow = acc;
    NovikovSeries mu = u.neg();
    while (true) {
        pow = series_mul(pow, mu);
        if (pow.is_zero()) break;
        acc = series_add(acc, pow);
    }
    std::vector<NovikovTerm> rt;
    for (const auto& t : acc.terms()) rt.push_back(NovikovTerm{t.coeff / c, t.exp - v});
    return NovikovSeries(std::move(rt), *a.cutoff() - 2 * v);
}

NovikovSeries series_pow(const NovikovSeries& a, long long k) {
    if (k < 0) return series_pow(series_invert(a), -k);
    NovikovSeries acc = NovikovSeries::one().truncated(a.cutoff());
    NovikovSeries base = a;
    unsigned long long e = static_cast<unsigned long long>(k);
    while (e) {
        if (e & 1) acc = series_mul(acc, base);
        base = series_mul(base, base);
        e >>= 1;
    }
    return acc;
}

bool series_equal_mod(const NovikovSeries& a, const NovikovSeries& b, const Rational& cutoff) {
    NovikovSeries ta = a.truncated(cutoff), tb = b.truncated(cutoff);
    return ta.terms() == tb.terms();
}

// ---------------------------------------------------------------------------
// ChartExpression

ChartExpression ChartExpression::zero(int nvars, int nv0) { return ChartExpression(nvars, nv0); }

ChartExpression ChartExpression::one(int nvars, int nv0) {
    return monomial(nvars, nv0, NovikovSeries::one(), ExponentVector(nvars, 0),
                    ExponentVector(nv0, 0));
}

ChartExpression ChartExpression::monomial(int nvars, int nv0, const NovikovSeries& coeff,
                                          const ExponentVector& laurent, const ExponentVector& v0) {
    if (static_cast<int>(laurent.size()) != nvars || static_cast<int>(v0.size()) != nv0)
        throw Error(ErrorKind::WrongDimension, "monomial exponent dimension mismatch");
    ChartExpression e(nvars, nv0);
    e.insert_term(ExprKey{laurent, v0}, coeff);
    return e;
}

ChartExpression ChartExpression::monomial1(int nvars, const NovikovSeries& coeff,
                                           const ExponentVector& laurent, long long v0pow) {
    return monomial(nvars, 1, coeff, laurent, ExponentVector{v0pow});
}

void ChartExpression::insert_term(const ExprKey& k, const NovikovSeries& s) {
    if (s.is_zero()) return;
    auto it = terms_.find(k);
    if (it == terms_.end()) {
        terms_.emplace(k, s);
    } else {
        NovikovSeries sum = series_add(it->second, s);
        if (sum.is_zero()) terms_.erase(it);
        else it->second = sum;
    }
}

bool ChartExpression::regular_on_Y() const {
    for (const auto& [k, s] : terms_)
        for (long long p : k.v0)
            if (p < 0) return false;
    return true;
}

std::optional<Rational> ChartExpression::cutoff() const {
    std::optional<Rational> c;
    for (const auto& [k, s] : terms_) c = min_cutoff(c, s.cutoff());
    return c;
}

ChartExpression ChartExpression::truncated(const std::optional<Rational>& cutoff) const {
    ChartExpression r(nvars_, nv0_);
    r.chart_ = chart_;
    for (const auto& [k, s] : terms_) r.insert_term(k, s.truncated(cutoff));
    return r;
}

std::string ChartExpression::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [k, s] : terms_) {
        if (!first) os << " + ";
        first = false;
        os << "(" << s.str() << ")";
        for (int i = 0; i < nvars_; ++i)
            if (k.laurent[i] != 0) os << "*v" << (i + 1) << "^" << k.laurent[i];
        for (int i = 0; i < nv0_; ++i)
            if (k.v0[i] != 0) {
                os << "*v0";
                if (nv0_ > 1) os << "_" << (i + 1);
                if (k.v0[i] != 1) os << "^" << k.v0[i];
            }
    }
    return os.str();
}

bool ChartExpression::operator==(const ChartExpression& o) const {
    return nvars_ == o.nvars_ && nv0_ == o.nv0_ && terms_ == o.terms_;
}

static void check_same_shape(const ChartExpression& a, const ChartExpression& b) {
    if (a.nvars() != b.nvars() || a.nv0() != b.nv0())
        throw Error(ErrorKind::WrongDimension, "chart expression shape mismatch");
}

ChartExpression expr_add(const ChartExpression& a, const ChartExpression& b) {
    check_same_shape(a, b);
    ChartExpression r(a.nvars_, a.nv0_);
    r.chart_ = a.chart_.empty() ? b.chart_ : a.chart_;
    for (const auto& [k, s] : a.terms_) r.insert_term(k, s);
    for (const auto& [k, s] : b.terms_) r.insert_term(k, s);
    return r;
}

ChartExpression expr_sub(const ChartExpression& a, const ChartExpression& b) {
    return expr_add(a, expr_neg(b));
}

ChartExpression expr_neg(const ChartExpression& a) {
    return expr_scale(NovikovSeries::constant(-1), a);
}

ChartExpression expr_scale(const NovikovSeries& c, const ChartExpression& a) {
    ChartExpression r(a.nvars(), a.nv0());
    r.set_chart(a.chart());
    for (const auto& [k, s] : a.terms()) {
        ChartExpression t = ChartExpression::monomial(a.nvars(), a.nv0(), series_mul(c, s),
                                                      k.laurent, k.v0);
        r = expr_add(r, t);
    }
    return r;
}

ChartExpression expr_mul(const ChartExpression& a, const ChartExpression& b) {
    check_same_shape(a, b);
    ChartExpression r(a.nvars_, a.nv0_);
    r.chart_ = a.chart_.empty() ? b.chart_ : a.chart_;
    for (const auto& [ka, sa] : a.terms_)
        for (const auto& [kb, sb] : b.terms_)
            r.insert_term(ExprKey{vec_add(ka.laurent, kb.laurent), vec_add(ka.v0, kb.v0)},
                          series_mul(sa, sb));
    return r;
}

ChartExpression expr_invert(const ChartExpression& a, const std::optional<Rational>& cutoff) {
    if (a.is_zero()) throw Error(ErrorKind::ZeroSeries, "cannot invert the zero expression");
    if (a.term_count() == 1) {
        const auto& [k, s] = *a.terms().begin();
        ChartExpression r = ChartExpression::monomial(a.nvars(), a.nv0(),
                                                      series_invert(s.truncated(cutoff)),
                                                      vec_neg(k.laurent), vec_neg(k.v0));
        r.set_chart(a.chart());
        return r;
    }
    // Unit plus higher-valuation tail: find the unique term of strictly
    // minimal valuation; it must be a Novikov monomial.
    const std::map<ExprKey, NovikovSeries>& ts = a.terms();
    auto lead = ts.end();
    Rational lead_val;
    bool tie = false;
    for (auto it = ts.begin(); it != ts.end(); ++it) {
        Rational v = it->second.valuation();
        if (lead == ts.end() || v < lead_val) {
            lead = it;
            lead_val = v;
            tie = false;
        } else if (v == lead_val) {
            tie = true;
        }
    }
    if (tie || lead->second.terms().size() != 1)
        throw Error(ErrorKind::NotInvertible,
                    "expression has no dominant invertible term");
    std::optional<Rational> cut = min_cutoff(a.cutoff(), cutoff);
    if (!cut)
        throw Error(ErrorKind::CutoffRequired,
                    "inverting a multi-term expression requires a finite cutoff");
    ChartExpression uinv =
        ChartExpression::monomial(a.nvars(), a.nv0(), series_invert(lead->second),
                                  vec_neg(lead->first.laurent), vec_neg(lead->first.v0));
    ChartExpression w = expr_sub(expr_mul(a, uinv), ChartExpression::one(a.nvars(), a.nv0()));
    w = w.truncated(cut);
    for (const auto& [k, s] : w.terms())
        if (s.valuation() <= 0)
            throw Error(ErrorKind::NotInvertible, "tail of expression is not of positive valuation");
    ChartExpression acc = ChartExpression::one(a.nvars(), a.nv0()).truncated(cut);
    ChartExpression pw = acc;
    ChartExpression mw = expr_neg(w);
    while (true) {
        pw = expr_mul(pw, mw).truncated(cut);
        if (pw.is_zero()) break;
        acc = expr_add(acc, pw);
    }
    ChartExpression r = expr_mul(acc, uinv).truncated(cut);
    r.set_chart(a.chart());
    return r;
}

ChartExpression expr_pow(const ChartExpression& e, long long k,
                         const std::optional<Rational>& cutoff) {
    if (k == 0) {
        ChartExpression r = ChartExpression::one(e.nvars(), e.nv0()).truncated(cutoff);
        r.set_chart(e.chart());
        return r;
    }
    ChartExpression base = k < 0 ? expr_invert(e, cutoff) : e.truncated(cutoff);
    unsigned long long n = k < 0 ? static_cast<unsigned long long>(-k)
                                 : static_cast<unsigned long long>(k);
    ChartExpression acc = ChartExpression::one(e.nvars(), e.nv0()).truncated(base.cutoff());
    acc.set_chart(e.chart());
    while (n) {
        if (n & 1) acc = expr_mul(acc, base);
        base = expr_mul(base, base);
        n >>= 1;
    }
    return acc;
}

bool expr_equal_mod(const ChartExpression& a, const ChartExpression& b, const Rational& cutoff) {
    if (a.nvars() != b.nvars() || a.nv0() != b.nv0()) return false;
    ChartExpression ta = a.truncated(cutoff), tb = b.truncated(cutoff);
    if (ta.term_count() != tb.term_count()) return false;
    auto ia = ta.terms().begin();
    auto ib = tb.terms().begin();
    for (; ia != ta.terms().end(); ++ia, ++ib) {
        if (!(ia->first == ib->first)) return false;
        if (ia->second.terms() != ib->second.terms()) return false;
    }
    return true;
}

ChartExpression w0_expression(int nvars, int nv0, const Rational& epsilon, int slot) {
    ExponentVector zero_m(nvars, 0), zero_p(nv0, 0), v0p(nv0, 0);
    v0p[slot] = 1;
    ChartExpression c = ChartExpression::monomial(nvars, nv0,
                                                  NovikovSeries::monomial(-1, epsilon), zero_m,
                                                  zero_p);
    ChartExpression v = ChartExpression::monomial(nvars, nv0,
                                                  NovikovSeries::monomial(1, epsilon), zero_m,
                                                  v0p);
    return expr_add(c, v);
}

}  // namespace tropmirror
