#pragma once

#include "toruslab/numbers.hpp"

#include <optional>
#include <vector>

namespace toruslab {

using Vec = std::vector<Rational>;
using Mat = std::vector<std::vector<Rational>>;

inline Mat mat_zero(std::size_t r, std::size_t c) {
    return Mat(r, std::vector<Rational>(c, Rational(0)));
}

inline Mat mat_identity(std::size_t n) {
    Mat m = mat_zero(n, n);
    for (std::size_t i = 0; i < n; ++i) m[i][i] = 1;
    return m;
}

Mat mat_mul(const Mat& a, const Mat& b);
Vec mat_apply(const Mat& a, const Vec& v);
Mat mat_transpose(const Mat& a);
Rational mat_det(Mat a);
Rational mat_trace(const Mat& a);

/// One solution of A x = b, or nullopt when inconsistent.
std::optional<Vec> mat_solve(Mat a, Vec b);

/// Basis of the kernel of A.
std::vector<Vec> mat_kernel(Mat a);

std::optional<Mat> mat_inverse(const Mat& a);

/// Congruence diagonalization of a symmetric matrix: returns (P, d) with
/// P^T G P = diag(d). Zero diagonal entries may appear when G is singular.
std::pair<Mat, Vec> symmetric_diagonalize(Mat g);

}  // namespace toruslab
