#include "toruslab/linalg.hpp"

namespace toruslab {

Mat mat_mul(const Mat& a, const Mat& b) {
    std::size_t n = a.size(), m = b[0].size(), k = b.size();
    Mat out = mat_zero(n, m);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t l = 0; l < k; ++l) {
            if (a[i][l] == 0) continue;
            for (std::size_t j = 0; j < m; ++j) out[i][j] += a[i][l] * b[l][j];
        }
    return out;
}

Vec mat_apply(const Mat& a, const Vec& v) {
    Vec out(a.size(), Rational(0));
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < v.size(); ++j) out[i] += a[i][j] * v[j];
    return out;
}

Mat mat_transpose(const Mat& a) {
    Mat out = mat_zero(a[0].size(), a.size());
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < a[0].size(); ++j) out[j][i] = a[i][j];
    return out;
}

Rational mat_det(Mat a) {
    std::size_t n = a.size();
    Rational det(1);
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t pivot = col;
        while (pivot < n && a[pivot][col] == 0) ++pivot;
        if (pivot == n) return Rational(0);
        if (pivot != col) {
            std::swap(a[pivot], a[col]);
            det = -det;
        }
        det *= a[col][col];
        for (std::size_t r = col + 1; r < n; ++r) {
            if (a[r][col] == 0) continue;
            Rational factor = a[r][col] / a[col][col];
            for (std::size_t c = col; c < n; ++c) a[r][c] -= factor * a[col][c];
        }
    }
    return det;
}

Rational mat_trace(const Mat& a) {
    Rational t(0);
    for (std::size_t i = 0; i < a.size(); ++i) t += a[i][i];
    return t;
}

namespace {

// Row-reduce [a | b-columns]; returns pivot column of each pivot row.
std::vector<std::size_t> row_echelon(Mat& m, std::size_t lead_cols) {
    std::vector<std::size_t> pivots;
    std::size_t row = 0;
    for (std::size_t col = 0; col < lead_cols && row < m.size(); ++col) {
        std::size_t pivot = row;
        while (pivot < m.size() && m[pivot][col] == 0) ++pivot;
        if (pivot == m.size()) continue;
        std::swap(m[pivot], m[row]);
        Rational inv = Rational(1) / m[row][col];
        for (auto& x : m[row]) x *= inv;
        for (std::size_t r = 0; r < m.size(); ++r) {
            if (r == row || m[r][col] == 0) continue;
            Rational f = m[r][col];
            for (std::size_t c = 0; c < m[r].size(); ++c) m[r][c] -= f * m[row][c];
        }
        pivots.push_back(col);
        ++row;
    }
    return pivots;
}

}  // namespace

std::optional<Vec> mat_solve(Mat a, Vec b) {
    std::size_t rows = a.size(), cols = a.empty() ? 0 : a[0].size();
    for (std::size_t i = 0; i < rows; ++i) a[i].push_back(b[i]);
    auto pivots = row_echelon(a, cols);
    for (std::size_t r = pivots.size(); r < rows; ++r) {
        if (a[r][cols] != 0) return std::nullopt;
    }
    Vec x(cols, Rational(0));
    for (std::size_t i = 0; i < pivots.size(); ++i) x[pivots[i]] = a[i][cols];
    return x;
}

std::vector<Vec> mat_kernel(Mat a) {
    std::size_t cols = a.empty() ? 0 : a[0].size();
    auto pivots = row_echelon(a, cols);
    std::vector<bool> is_pivot(cols, false);
    for (auto p : pivots) is_pivot[p] = true;
    std::vector<Vec> basis;
    for (std::size_t free_col = 0; free_col < cols; ++free_col) {
        if (is_pivot[free_col]) continue;
        Vec v(cols, Rational(0));
        v[free_col] = 1;
        for (std::size_t i = 0; i < pivots.size(); ++i) v[pivots[i]] = -a[i][free_col];
        basis.push_back(std::move(v));
    }
    return basis;
}

std::optional<Mat> mat_inverse(const Mat& a) {
    std::size_t n = a.size();
    Mat m = a;
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) m[i].push_back(i == j ? Rational(1) : Rational(0));
    }
    auto pivots = row_echelon(m, n);
    if (pivots.size() != n) return std::nullopt;
    Mat inv = mat_zero(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) inv[i][j] = m[i][n + j];
    return inv;
}

std::pair<Mat, Vec> symmetric_diagonalize(Mat g) {
    std::size_t n = g.size();
    Mat p = mat_identity(n);
    auto add_col = [&](std::size_t dst, std::size_t src, const Rational& f) {
        // column operation plus the mirrored row operation keeps g congruent
        for (std::size_t i = 0; i < n; ++i) g[i][dst] += f * g[i][src];
        for (std::size_t j = 0; j < n; ++j) g[dst][j] += f * g[src][j];
        for (std::size_t i = 0; i < n; ++i) p[i][dst] += f * p[i][src];
    };
    auto swap_cols = [&](std::size_t a, std::size_t b) {
        for (std::size_t i = 0; i < n; ++i) std::swap(g[i][a], g[i][b]);
        for (std::size_t j = 0; j < n; ++j) std::swap(g[a][j], g[b][j]);
        for (std::size_t i = 0; i < n; ++i) std::swap(p[i][a], p[i][b]);
    };
    for (std::size_t k = 0; k < n; ++k) {
        if (g[k][k] == 0) {
            std::size_t j = k + 1;
            while (j < n && g[j][j] == 0) ++j;
            if (j < n) {
                swap_cols(k, j);
            } else {
                // all remaining diagonal entries vanish; bring in an
                // off-diagonal entry via x -> x + y
                bool found = false;
                for (std::size_t r = k; r < n && !found; ++r)
                    for (std::size_t c = r + 1; c < n && !found; ++c)
                        if (g[r][c] != 0) {
                            if (r != k) swap_cols(k, r);
                            add_col(k, c, Rational(1));
                            found = true;
                        }
                if (!found) break;  // remaining block is zero
            }
        }
        for (std::size_t j = k + 1; j < n; ++j) {
            if (g[k][j] != 0) add_col(j, k, -g[k][j] / g[k][k]);
        }
    }
    Vec d(n);
    for (std::size_t i = 0; i < n; ++i) d[i] = g[i][i];
    return {p, d};
}

}  // namespace toruslab
