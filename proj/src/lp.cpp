#include "tropmirror/lp.hpp"

#include <algorithm>
#include <cstddef>

namespace tropmirror {

// ---------------------------------------------------------------------------
// Linear algebra

std::optional<QVec> solve_linear(QMat M, QVec rhs) {
    const size_t n = M.size();
    for (size_t col = 0; col < n; ++col) {
        size_t piv = col;
        while (piv < n && M[piv][col] == 0) ++piv;
        if (piv == n) return std::nullopt;
        std::swap(M[piv], M[col]);
        std::swap(rhs[piv], rhs[col]);
        Rational p = M[col][col];
        for (size_t j = col; j < n; ++j) M[col][j] /= p;
        rhs[col] /= p;
        for (size_t r = 0; r < n; ++r) {
            if (r == col || M[r][col] == 0) continue;
            Rational f = M[r][col];
            for (size_t j = col; j < n; ++j) M[r][j] -= f * M[col][j];
            rhs[r] -= f * rhs[col];
        }
    }
    return rhs;
}

Rational determinant(QMat M) {
    const size_t n = M.size();
    Rational det = 1;
    for (size_t col = 0; col < n; ++col) {
        size_t piv = col;
        while (piv < n && M[piv][col] == 0) ++piv;
        if (piv == n) return 0;
        if (piv != col) {
            std::swap(M[piv], M[col]);
            det = -det;
        }
        det *= M[col][col];
        Rational p = M[col][col];
        for (size_t r = col + 1; r < n; ++r) {
            if (M[r][col] == 0) continue;
            Rational f = M[r][col] / p;
            for (size_t j = col; j < n; ++j) M[r][j] -= f * M[col][j];
        }
    }
    return det;
}

int rank(QMat M) {
    if (M.empty()) return 0;
    const size_t rows = M.size(), cols = M[0].size();
    int rk = 0;
    size_t r = 0;
    for (size_t c = 0; c < cols && r < rows; ++c) {
        size_t piv = r;
        while (piv < rows && M[piv][c] == 0) ++piv;
        if (piv == rows) continue;
        std::swap(M[piv], M[r]);
        Rational p = M[r][c];
        for (size_t j = c; j < cols; ++j) M[r][j] /= p;
        for (size_t i = 0; i < rows; ++i) {
            if (i == r || M[i][c] == 0) continue;
            Rational f = M[i][c];
            for (size_t j = c; j < cols; ++j) M[i][j] -= f * M[r][j];
        }
        ++r;
        ++rk;
    }
    return rk;
}

std::optional<QVec> solve_any(QMat M, QVec rhs) {
    if (M.empty()) return QVec{};
    const size_t rows = M.size(), cols = M[0].size();
    std::vector<int> pivot_col;
    size_t r = 0;
    for (size_t c = 0; c < cols && r < rows; ++c) {
        size_t piv = r;
        while (piv < rows && M[piv][c] == 0) ++piv;
        if (piv == rows) continue;
        std::swap(M[piv], M[r]);
        std::swap(rhs[piv], rhs[r]);
        Rational p = M[r][c];
        for (size_t j = c; j < cols; ++j) M[r][j] /= p;
        rhs[r] /= p;
        for (size_t i = 0; i < rows; ++i) {
            if (i == r || M[i][c] == 0) continue;
            Rational f = M[i][c];
            for (size_t j = c; j < cols; ++j) M[i][j] -= f * M[r][j];
            rhs[i] -= f * rhs[r];
        }
        pivot_col.push_back(static_cast<int>(c));
        ++r;
    }
    for (size_t i = r; i < rows; ++i)
        if (rhs[i] != 0) return std::nullopt;
    QVec x(cols, 0);
    for (size_t i = 0; i < pivot_col.size(); ++i) x[pivot_col[i]] = rhs[i];
    return x;
}

std::vector<BigInt> elementary_divisors(std::vector<std::vector<BigInt>> M) {
    using boost::multiprecision::abs;
    std::vector<BigInt> divs;
    size_t top = 0;
    while (true) {
        // Find a nonzero entry at or below/right of (top, top block).
        size_t pr = M.size(), pc = 0;
        for (size_t i = top; i < M.size() && pr == M.size(); ++i)
            for (size_t j = top; j < (M.empty() ? 0 : M[0].size()); ++j)
                if (M[i][j] != 0) {
                    pr = i;
                    pc = j;
                    break;
                }
        if (pr == M.size()) break;
        std::swap(M[top], M[pr]);
        for (auto& row : M) std::swap(row[top], row[pc]);
        // Euclidean sweeps until the pivot divides its row and column.
        bool again = true;
        while (again) {
            again = false;
            for (size_t i = top + 1; i < M.size(); ++i) {
                while (M[i][top] != 0) {
                    BigInt q = M[i][top] / M[top][top];
                    for (size_t j = top; j < M[0].size(); ++j) M[i][j] -= q * M[top][j];
                    if (M[i][top] != 0) {
                        std::swap(M[i], M[top]);
                        again = true;
                    }
                }
            }
            for (size_t j = top + 1; j < M[0].size(); ++j) {
                while (M[top][j] != 0) {
                    BigInt q = M[top][j] / M[top][top];
                    for (size_t i = top; i < M.size(); ++i) M[i][j] -= q * M[i][top];
                    if (M[top][j] != 0) {
                        for (size_t i = 0; i < M.size(); ++i) std::swap(M[i][j], M[i][top]);
                        again = true;
                    }
                }
            }
        }
        divs.push_back(abs(M[top][top]));
        ++top;
        if (top >= M.size() || top >= M[0].size()) {
            // Collect any remaining nonzero block? Loop guard handles it.
            bool nonzero_left = false;
            for (size_t i = top; i < M.size(); ++i)
                for (size_t j = top; j < M[0].size(); ++j)
                    if (M[i][j] != 0) nonzero_left = true;
            if (nonzero_left)
                throw Error(ErrorKind::Internal, "SNF reduction left a nonzero block");
            break;
        }
    }
    return divs;
}

// ---------------------------------------------------------------------------
// Simplex
//
// Internal standard form: maximize c.z with A z <= b, z >= 0, where every free
// variable x_i is split as x_i = z_{2i} - z_{2i+1}. Tableau with Bland's rule.

namespace {

struct Tableau {
    // rows: m constraints; columns: nv structural vars + m slacks.
    // basis[i] = variable index basic in row i.
    QMat a;       // m x (nv + m)
    QVec b;       // m
    QVec cost;    // nv + m
    Rational obj = 0;
    std::vector<int> basis;

    size_t rows() const { return a.size(); }
    size_t cols() const { return a.empty() ? 0 : a[0].size(); }

    void pivot(size_t r, size_t c) {
        Rational p = a[r][c];
        for (auto& v : a[r]) v /= p;
        b[r] /= p;
        for (size_t i = 0; i < rows(); ++i) {
            if (i == r || a[i][c] == 0) continue;
            Rational f = a[i][c];
            for (size_t j = 0; j < cols(); ++j) a[i][j] -= f * a[r][j];
            b[i] -= f * b[r];
        }
        if (cost[c] != 0) {
            Rational f = cost[c];
            for (size_t j = 0; j < cols(); ++j) cost[j] -= f * a[r][j];
            obj += f * b[r];
        }
        basis[r] = static_cast<int>(c);
    }

    // Bland: entering = lowest-index improving column; leaving = lowest basic
    // index among the min-ratio rows. Returns Optimal or Unbounded.
    LpStatus run() {
        while (true) {
            size_t enter = cols();
            for (size_t j = 0; j < cols(); ++j)
                if (cost[j] > 0) {
                    enter = j;
                    break;
                }
            if (enter == cols()) return LpStatus::Optimal;
            size_t leave = rows();
            Rational best;
            for (size_t i = 0; i < rows(); ++i) {
                if (a[i][enter] <= 0) continue;
                Rational ratio = b[i] / a[i][enter];
                if (leave == rows() || ratio < best ||
                    (ratio == best && basis[i] < basis[leave]))
                {
                    leave = i;
                    best = ratio;
                }
            }
            if (leave == rows()) return LpStatus::Unbounded;
            pivot(leave, enter);
        }
    }
};

}  // namespace

LpResult lp_maximize(const std::vector<HalfSpace>& region, const QVec& c) {
    const size_t n = c.size();
    const size_t m = region.size();
    const size_t nv = 2 * n;
    // <normal, x> + offset >= 0  ->  -<normal, x> <= offset.
    Tableau t;
    t.a.assign(m, QVec(nv + m, 0));
    t.b.assign(m, 0);
    for (size_t i = 0; i < m; ++i) {
        for (size_t j = 0; j < n; ++j) {
            t.a[i][2 * j] = -region[i].normal[j];
            t.a[i][2 * j + 1] = region[i].normal[j];
        }
        t.a[i][nv + i] = 1;
        t.b[i] = region[i].offset;
    }
    t.basis.resize(m);
    for (size_t i = 0; i < m; ++i) t.basis[i] = static_cast<int>(nv + i);

    // Phase 1 when some b < 0: one auxiliary column x0 with a[i][x0] = -1.
    bool need_phase1 = false;
    for (size_t i = 0; i < m; ++i)
        if (t.b[i] < 0) need_phase1 = true;
    if (need_phase1) {
        for (size_t i = 0; i < m; ++i) t.a[i].push_back(-1);
        t.cost.assign(nv + m + 1, 0);
        t.cost[nv + m] = -1;
        t.obj = 0;
        size_t worst = 0;
        for (size_t i = 1; i < m; ++i)
            if (t.b[i] < t.b[worst]) worst = i;
        t.pivot(worst, nv + m);
        LpStatus st = t.run();
        (void)st;  // phase-1 objective is bounded above by 0
        if (t.obj != 0) return LpResult{LpStatus::Infeasible, 0, {}};
        // Drive x0 out of the basis if still there (degenerate case); a row
        // where that is impossible is vacuous and gets dropped.
        for (size_t i = 0; i < t.rows(); ++i) {
            if (t.basis[i] != static_cast<int>(nv + m)) continue;
            for (size_t j = 0; j < nv + m; ++j)
                if (t.a[i][j] != 0) {
                    t.pivot(i, j);
                    break;
                }
        }
        for (size_t i = t.rows(); i-- > 0;) {
            if (t.basis[i] == static_cast<int>(nv + m)) {
                t.a.erase(t.a.begin() + i);
                t.b.erase(t.b.begin() + i);
                t.basis.erase(t.basis.begin() + i);
            }
        }
        for (auto& row : t.a) row.pop_back();
    }

    t.cost.assign(nv + m, 0);
    t.obj = 0;
    for (size_t j = 0; j < n; ++j) {
        t.cost[2 * j] = c[j];
        t.cost[2 * j + 1] = -c[j];
    }
    // Price out basic columns.
    for (size_t i = 0; i < t.rows(); ++i) {
        int bc = t.basis[i];
        if (t.cost[bc] == 0) continue;
        Rational f = t.cost[bc];
        for (size_t j = 0; j < t.cols(); ++j) t.cost[j] -= f * t.a[i][j];
        t.obj += f * t.b[i];
    }
    LpStatus st = t.run();
    if (st == LpStatus::Unbounded) return LpResult{LpStatus::Unbounded, 0, {}};
    QVec z(nv + m, 0);
    for (size_t i = 0; i < t.rows(); ++i) z[t.basis[i]] = t.b[i];
    QVec x(n);
    for (size_t j = 0; j < n; ++j) x[j] = z[2 * j] - z[2 * j + 1];
    return LpResult{LpStatus::Optimal, t.obj, x};
}

bool region_feasible(const std::vector<HalfSpace>& region, int dim) {
    return lp_maximize(region, QVec(dim, 0)).status == LpStatus::Optimal;
}

FullDimResult region_full_dim(const std::vector<HalfSpace>& region, int dim) {
    // Maximize t (capped at 1) with <n_j, x> + o_j >= t.
    std::vector<HalfSpace> r2;
    r2.reserve(region.size() + 1);
    for (const auto& h : region) {
        HalfSpace g;
        g.normal = h.normal;
        g.normal.push_back(-1);
        g.offset = h.offset;
        r2.push_back(std::move(g));
    }
    HalfSpace cap;
    cap.normal.assign(dim, 0);
    cap.normal.push_back(-1);
    cap.offset = 1;  // 1 - t >= 0
    r2.push_back(cap);
    QVec c(dim + 1, 0);
    c[dim] = 1;
    LpResult res = lp_maximize(r2, c);
    FullDimResult out;
    if (res.status != LpStatus::Optimal || res.value <= 0) return out;
    out.full_dim = true;
    out.interior.assign(res.x.begin(), res.x.begin() + dim);
    return out;
}

bool region_bounded(const std::vector<HalfSpace>& region, int dim) {
    for (int i = 0; i < dim; ++i) {
        for (int sgn : {1, -1}) {
            QVec c(dim, 0);
            c[i] = sgn;
            if (lp_maximize(region, c).status == LpStatus::Unbounded) return false;
        }
    }
    return true;
}

int region_dim(const std::vector<HalfSpace>& region, int dim) {
    if (!region_feasible(region, dim)) return -1;
    QMat eq_normals;
    for (size_t j = 0; j < region.size(); ++j) {
        // Is constraint j an implicit equality? Maximize its slack.
        QVec c = region[j].normal;
        LpResult res = lp_maximize(region, c);
        if (res.status == LpStatus::Optimal && res.value + region[j].offset == 0)
            eq_normals.push_back(region[j].normal);
    }
    return dim - rank(eq_normals);
}

bool supporting_face_exists(const std::vector<QVec>& points, const std::vector<int>& tight) {
    if (points.empty()) return false;
    const int d = static_cast<int>(points[0].size());
    std::vector<bool> in_tight(points.size(), false);
    for (int i : tight) in_tight[i] = true;
    // Variables (g, c): <g,u> = c on tight, <g,u> <= c - 1 elsewhere.
    std::vector<HalfSpace> region;
    for (size_t i = 0; i < points.size(); ++i) {
        HalfSpace lo;  // c - <g,u> - (0 or 1) >= 0
        lo.normal.assign(d + 1, 0);
        for (int j = 0; j < d; ++j) lo.normal[j] = -points[i][j];
        lo.normal[d] = 1;
        lo.offset = in_tight[i] ? 0 : -1;
        region.push_back(lo);
        if (in_tight[i]) {
            HalfSpace hi;  // <g,u> - c >= 0
            hi.normal.assign(d + 1, 0);
            for (int j = 0; j < d; ++j) hi.normal[j] = points[i][j];
            hi.normal[d] = -1;
            hi.offset = 0;
            region.push_back(hi);
        }
    }
    return region_feasible(region, d + 1);
}

}  // namespace tropmirror
