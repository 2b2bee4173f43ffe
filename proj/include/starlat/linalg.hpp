#pragma once

// Small dense matrices over a generic scalar ring (R, C or H) with the
// right-module convention: scalars multiply vectors on the right, so left
// matrix multiplication is K-linear.  Factorizations and rank decisions
// route through the real embedding and Eigen; orthonormal bases are built
// directly in K by pivoted modified Gram-Schmidt.

#include <algorithm>
#include <cassert>
#include <stdexcept>
#include <utility>
#include <vector>

#include <Eigen/Dense>

#include "starlat/scalar.hpp"

namespace starlat {

template <class K>
class Mat {
 public:
  Mat() = default;
  Mat(int rows, int cols) : rows_(rows), cols_(cols), a_(static_cast<size_t>(rows) * cols, K{}) {}

  static Mat identity(int n) {
    Mat m(n, n);
    for (int i = 0; i < n; ++i) m(i, i) = ScalarTraits<K>::unit(0);
    return m;
  }

  int rows() const { return rows_; }
  int cols() const { return cols_; }

  K& operator()(int i, int j) { return a_[static_cast<size_t>(j) * rows_ + i]; }
  const K& operator()(int i, int j) const { return a_[static_cast<size_t>(j) * rows_ + i]; }

  Mat col(int j) const {
    Mat c(rows_, 1);
    for (int i = 0; i < rows_; ++i) c(i, 0) = (*this)(i, j);
    return c;
  }

  void set_col(int j, const Mat& c) {
    for (int i = 0; i < rows_; ++i) (*this)(i, j) = c(i, 0);
  }

  Mat adjoint() const {
    Mat t(cols_, rows_);
    for (int i = 0; i < rows_; ++i)
      for (int j = 0; j < cols_; ++j) t(j, i) = ScalarTraits<K>::conjugate((*this)(i, j));
    return t;
  }

  Mat operator+(const Mat& b) const {
    check_same_shape(b);
    Mat r(rows_, cols_);
    for (size_t t = 0; t < a_.size(); ++t) r.a_[t] = a_[t] + b.a_[t];
    return r;
  }

  Mat operator-(const Mat& b) const {
    check_same_shape(b);
    Mat r(rows_, cols_);
    for (size_t t = 0; t < a_.size(); ++t) r.a_[t] = a_[t] - b.a_[t];
    return r;
  }

  Mat operator*(const Mat& b) const {
    if (cols_ != b.rows_) throw std::invalid_argument("Mat shape mismatch in product");
    Mat r(rows_, b.cols_);
    for (int j = 0; j < b.cols_; ++j)
      for (int l = 0; l < cols_; ++l) {
        const K& blj = b(l, j);
        for (int i = 0; i < rows_; ++i) r(i, j) += (*this)(i, l) * blj;
      }
    return r;
  }

  Mat scaled(double a) const {
    Mat r(rows_, cols_);
    for (size_t t = 0; t < a_.size(); ++t) r.a_[t] = a * a_[t];
    return r;
  }

  double max_abs() const {
    double m = 0.0;
    for (const K& v : a_) m = std::max(m, std::sqrt(ScalarTraits<K>::abs2(v)));
    return m;
  }

  double frobenius2() const {
    double s = 0.0;
    for (const K& v : a_) s += ScalarTraits<K>::abs2(v);
    return s;
  }

 private:
  void check_same_shape(const Mat& b) const {
    if (rows_ != b.rows_ || cols_ != b.cols_) throw std::invalid_argument("Mat shape mismatch");
  }

  int rows_ = 0, cols_ = 0;
  std::vector<K> a_;
};

using MatR = Mat<double>;
using MatC = Mat<Complex>;
using MatH = Mat<Quaternion>;

// f(x, y) = sum_i conj(x_i) y_i on columns; right-linear in y.
template <class K>
K hermitian_form(const Mat<K>& x, const Mat<K>& y) {
  if (x.cols() != 1 || y.cols() != 1 || x.rows() != y.rows())
    throw std::invalid_argument("hermitian_form expects equal-length column vectors");
  K s{};
  for (int i = 0; i < x.rows(); ++i) s += ScalarTraits<K>::conjugate(x(i, 0)) * y(i, 0);
  return s;
}

// Realification: a (d*rows) x (d*cols) real matrix with embed(AB) = embed(A)embed(B)
// and embed(adjoint A) = embed(A)^T.
template <class K>
Eigen::MatrixXd embed(const Mat<K>& m) {
  constexpr int d = ScalarTraits<K>::dim;
  Eigen::MatrixXd r(d * m.rows(), d * m.cols());
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < m.cols(); ++j) r.block(d * i, d * j, d, d) = embed_real(m(i, j));
  return r;
}

inline Eigen::MatrixXd kron(const Eigen::MatrixXd& a, const Eigen::MatrixXd& b) {
  Eigen::MatrixXd out(a.rows() * b.rows(), a.cols() * b.cols());
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j)
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
  return out;
}

inline Eigen::VectorXd kron_vec(const Eigen::VectorXd& a, const Eigen::VectorXd& b) {
  Eigen::VectorXd out(a.size() * b.size());
  for (int i = 0; i < a.size(); ++i) out.segment(i * b.size(), b.size()) = a(i) * b;
  return out;
}

// Unit-scaled inputs assumed throughout: a matrix whose largest singular
// value sits below kZeroMatrixFloor is the zero matrix, not a rank witness.
inline constexpr double kZeroMatrixFloor = 1e-11;

inline int numeric_rank(const Eigen::MatrixXd& m, double rel_tol = 1e-8) {
  if (m.rows() == 0 || m.cols() == 0) return 0;
  Eigen::JacobiSVD<Eigen::MatrixXd> svd(m);
  const auto& sv = svd.singularValues();
  if (sv.size() == 0 || sv(0) < kZeroMatrixFloor) return 0;
  int r = 0;
  for (int i = 0; i < sv.size(); ++i)
    if (sv(i) > rel_tol * sv(0)) ++r;
  return r;
}

// Orthonormal basis of the null space (right singular vectors at ~zero).
inline Eigen::MatrixXd nullspace(const Eigen::MatrixXd& m, double rel_tol = 1e-10) {
  if (m.cols() == 0) return Eigen::MatrixXd(0, 0);
  if (m.rows() == 0) return Eigen::MatrixXd::Identity(m.cols(), m.cols());
  Eigen::JacobiSVD<Eigen::MatrixXd> svd(m, Eigen::ComputeFullV);
  const auto& sv = svd.singularValues();
  double top = sv.size() ? sv(0) : 0.0;
  int r = 0;
  for (int i = 0; i < sv.size(); ++i)
    if (top >= kZeroMatrixFloor && sv(i) > rel_tol * top) ++r;
  return svd.matrixV().rightCols(m.cols() - r);
}

// Orthonormal K-basis of the column span.  When rank >= 0 exactly that many
// columns are produced (pivoted, two orthogonalization passes); otherwise the
// rank comes from the real-embedded singular values at rel_tol * sigma_max.
template <class K>
Mat<K> orthonormalize_columns(Mat<K> x, int rank = -1, double rel_tol = 1e-8) {
  const int n = x.rows();
  if (rank < 0) {
    int rr = numeric_rank(embed(x), rel_tol);
    if (rr % ScalarTraits<K>::dim != 0)
      throw std::runtime_error("orthonormalize_columns: real rank not a multiple of the ring dimension");
    rank = rr / ScalarTraits<K>::dim;
  }
  Mat<K> q(n, rank);
  if (rank == 0) return q;

  std::vector<int> remaining(x.cols());
  for (int j = 0; j < x.cols(); ++j) remaining[j] = j;

  for (int t = 0; t < rank; ++t) {
    // pivot on the largest residual column; ties break to the smallest index
    int best = -1, best_pos = -1;
    double best_norm2 = -1.0;
    for (size_t p = 0; p < remaining.size(); ++p) {
      double n2 = x.col(remaining[p]).frobenius2();
      if (n2 > best_norm2 * (1.0 + 1e-12)) {
        best_norm2 = n2;
        best = remaining[p];
        best_pos = static_cast<int>(p);
      }
    }
    if (best < 0 || best_norm2 <= 0.0)
      throw std::runtime_error("orthonormalize_columns: rank exceeds numerical column span");
    Mat<K> u = x.col(best);
    for (int pass = 0; pass < 2; ++pass) {
      for (int s = 0; s < t; ++s) {
        Mat<K> qs = q.col(s);
        K c = hermitian_form(qs, u);
        for (int i = 0; i < n; ++i) u(i, 0) = u(i, 0) - qs(i, 0) * c;
      }
    }
    double nu = std::sqrt(u.frobenius2());
    if (nu <= 0.0)
      throw std::runtime_error("orthonormalize_columns: rank exceeds numerical column span");
    q.set_col(t, u.scaled(1.0 / nu));
    remaining.erase(remaining.begin() + best_pos);
    // deflate the remaining columns against the new direction
    Mat<K> qt = q.col(t);
    for (int j : remaining) {
      Mat<K> cj = x.col(j);
      K c = hermitian_form(qt, cj);
      for (int i = 0; i < n; ++i) cj(i, 0) = cj(i, 0) - qt(i, 0) * c;
      x.set_col(j, cj);
    }
  }
  return q;
}

// Eigenvalue clustering: ranges [begin, end) over an ascending-sorted vector,
// split where the gap exceeds rel_tol * max|value|.
inline std::vector<std::pair<int, int>> cluster_sorted(const Eigen::VectorXd& vals,
                                                       double rel_tol = 1e-8) {
  std::vector<std::pair<int, int>> out;
  const int n = static_cast<int>(vals.size());
  if (n == 0) return out;
  double scale = std::max(vals.cwiseAbs().maxCoeff(), 1e-300);
  int begin = 0;
  for (int i = 1; i < n; ++i) {
    if (vals(i) - vals(i - 1) > rel_tol * scale) {
      out.emplace_back(begin, i);
      begin = i;
    }
  }
  out.emplace_back(begin, n);
  return out;
}

}  // namespace starlat
