#pragma once

#include <algorithm>
#include <numeric>
#include <vector>

#include "zerorect/error.hpp"
#include "zerorect/rat.hpp"

namespace zr {

// Row and column index sets identifying M[A x B]. Indices are kept sorted.
struct Selection {
    std::vector<int> rows, cols;

    Selection() = default;
    Selection(std::vector<int> r, std::vector<int> c) : rows(std::move(r)), cols(std::move(c)) {
        std::sort(rows.begin(), rows.end());
        std::sort(cols.begin(), cols.end());
    }

    bool empty() const { return rows.empty() || cols.empty(); }
    long long area() const { return (long long)rows.size() * (long long)cols.size(); }
    int side() const { return int(std::min(rows.size(), cols.size())); }

    static Selection full(int m, int n) {
        Selection s;
        s.rows.resize(m);
        s.cols.resize(n);
        std::iota(s.rows.begin(), s.rows.end(), 0);
        std::iota(s.cols.begin(), s.cols.end(), 0);
        return s;
    }

    // Interpret `this` as a selection into the rows/cols named by `outer`.
    Selection compose(const Selection& outer) const {
        Selection out;
        out.rows.reserve(rows.size());
        out.cols.reserve(cols.size());
        for (int i : rows) out.rows.push_back(outer.rows[i]);
        for (int j : cols) out.cols.push_back(outer.cols[j]);
        return out;
    }

    bool operator==(const Selection& o) const { return rows == o.rows && cols == o.cols; }
};

// Dense row-major matrix. Two entry modes are used throughout: T = Rat for
// exact oracles and T = double for the pipelines.
template <class T>
class Matrix {
  public:
    Matrix() : m_(0), n_(0) {}
    Matrix(int m, int n, T fill = T(0)) : m_(m), n_(n), e_(size_t(m) * n, fill) {
        if (m < 1 || n < 1) throw Error(Err::InvalidParams, "matrix dimensions must be >= 1");
    }

    int rows() const { return m_; }
    int cols() const { return n_; }

    T& operator()(int i, int j) { return e_[size_t(i) * n_ + j]; }
    const T& operator()(int i, int j) const { return e_[size_t(i) * n_ + j]; }

    const std::vector<T>& data() const { return e_; }

    Matrix submatrix(const Selection& s) const {
        Matrix out(int(s.rows.size()), int(s.cols.size()));
        for (size_t i = 0; i < s.rows.size(); ++i)
            for (size_t j = 0; j < s.cols.size(); ++j) out(int(i), int(j)) = (*this)(s.rows[i], s.cols[j]);
        return out;
    }

    Matrix shifted(const T& c) const { // M - c*J
        Matrix out = *this;
        for (auto& v : out.e_) v -= c;
        return out;
    }

    bool operator==(const Matrix& o) const { return m_ == o.m_ && n_ == o.n_ && e_ == o.e_; }

  private:
    int m_, n_;
    std::vector<T> e_;
};

using MatrixD = Matrix<double>;
using MatrixQ = Matrix<Rat>;

// p(M): average entry.
template <class T>
T p_of(const Matrix<T>& M) {
    T s(0);
    for (const T& v : M.data()) s += v;
    return s / T(M.rows() * M.cols());
}

// q(M): mean squared deviation from p(M). Zero iff M is constant.
template <class T>
T q_of(const Matrix<T>& M) {
    T p = p_of(M);
    T s(0);
    for (const T& v : M.data()) s += (v - p) * (v - p);
    return s / T(M.rows() * M.cols());
}

template <class T>
T frobenius_sq(const Matrix<T>& M) {
    T s(0);
    for (const T& v : M.data()) s += v * v;
    return s;
}

// No entry in the open interval (0,1).
template <class T>
bool is_separated(const Matrix<T>& M) {
    for (const T& v : M.data())
        if (v > T(0) && v < T(1)) return false;
    return true;
}

template <class T>
bool is_nonnegative(const Matrix<T>& M) {
    for (const T& v : M.data())
        if (v < T(0)) return false;
    return true;
}

template <class T>
bool is_constant(const Matrix<T>& M) {
    for (const T& v : M.data())
        if (v != M.data()[0]) return false;
    return true;
}

MatrixD to_double(const MatrixQ& M);
MatrixQ to_rational(const MatrixD& M); // exact: doubles are dyadic

// SVD contract. Columns of U and V are orthonormal; rank is numerical
// (sigma_k > tol * sigma_1); nuclear = sum of kept singular values.
struct SvdResult {
    MatrixD U;                  // m x r
    std::vector<double> sigma;  // descending, length r
    MatrixD V;                  // n x r
    double tol = 0;
    int rank = 0;
    double nuclear = 0;
};

SvdResult svd(const MatrixD& M, double tol = 1e-10);

// Ground-truth rank by exact Gaussian elimination over the rationals.
int exact_rank(const MatrixQ& M);

inline int exact_rank(const MatrixD& M) { return exact_rank(to_rational(M)); }

// Numerical rank via SVD with relative tolerance.
int numerical_rank(const MatrixD& M, double tol = 1e-10);

} // namespace zr
