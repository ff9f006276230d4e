#include "zerorect/matrix.hpp"

#include <Eigen/Dense>
#include <cmath>

namespace zr {

MatrixD to_double(const MatrixQ& M) {
    MatrixD out(M.rows(), M.cols());
    for (int i = 0; i < M.rows(); ++i)
        for (int j = 0; j < M.cols(); ++j) out(i, j) = to_double(M(i, j));
    return out;
}

MatrixQ to_rational(const MatrixD& M) {
    MatrixQ out(M.rows(), M.cols());
    for (int i = 0; i < M.rows(); ++i)
        for (int j = 0; j < M.cols(); ++j) out(i, j) = rat_from_double(M(i, j));
    return out;
}

SvdResult svd(const MatrixD& M, double tol) {
    if (tol <= 0) throw Error(Err::InvalidParams, "svd tolerance must be positive");
    Eigen::MatrixXd E(M.rows(), M.cols());
    for (int i = 0; i < M.rows(); ++i)
        for (int j = 0; j < M.cols(); ++j) E(i, j) = M(i, j);

    Eigen::BDCSVD<Eigen::MatrixXd> dec(E, Eigen::ComputeThinU | Eigen::ComputeThinV);
    if (dec.info() != Eigen::Success)
        throw Error(Err::NumericalFailure, "SVD did not converge on a " + std::to_string(M.rows()) +
                                               "x" + std::to_string(M.cols()) + " matrix");

    const auto& sv = dec.singularValues();
    double s1 = sv.size() ? sv(0) : 0.0;
    int r = 0;
    for (int k = 0; k < sv.size(); ++k)
        if (sv(k) > tol * s1) ++r;
    if (r == 0) r = 0; // zero matrix: empty decomposition

    SvdResult out;
    out.tol = tol;
    out.rank = r;
    out.sigma.assign(sv.data(), sv.data() + r);
    out.nuclear = 0;
    for (double s : out.sigma) out.nuclear += s;
    if (r > 0) {
        out.U = MatrixD(M.rows(), r);
        out.V = MatrixD(M.cols(), r);
        for (int i = 0; i < M.rows(); ++i)
            for (int k = 0; k < r; ++k) out.U(i, k) = dec.matrixU()(i, k);
        for (int j = 0; j < M.cols(); ++j)
            for (int k = 0; k < r; ++k) out.V(j, k) = dec.matrixV()(j, k);
    }
    return out;
}

int exact_rank(const MatrixQ& M) {
    int m = M.rows(), n = M.cols();
    std::vector<std::vector<Rat>> a(m, std::vector<Rat>(n));
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < n; ++j) a[i][j] = M(i, j);

    int rank = 0;
    for (int col = 0; col < n && rank < m; ++col) {
        int pivot = -1;
        for (int i = rank; i < m; ++i)
            if (a[i][col] != 0) {
                pivot = i;
                break;
            }
        if (pivot < 0) continue;
        std::swap(a[rank], a[pivot]);
        Rat inv = Rat(1) / a[rank][col];
        for (int i = rank + 1; i < m; ++i) {
            if (a[i][col] == 0) continue;
            Rat f = a[i][col] * inv;
            for (int j = col; j < n; ++j) a[i][j] -= f * a[rank][j];
        }
        ++rank;
    }
    return rank;
}

int numerical_rank(const MatrixD& M, double tol) { return svd(M, tol).rank; }

} // namespace zr
