#pragma once

// Tensor products of *-algebras and the locality deficit: how much of the
// symmetric (observable) part of A1 (x) A2 is NOT spanned by products of the
// factors' observables.  Zero for complex matrix algebras under the C-tensor,
// positive for real and quaternionic ones.

#include <stdexcept>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "starlat/linalg.hpp"
#include "starlat/star_algebra.hpp"

namespace starlat {

// real tensor product, lexicographic basis order (i, p) -> i*dim2 + p
inline StarAlgebra tensor_product(const StarAlgebra& a1, const StarAlgebra& a2) {
  StarAlgebra t;
  t.dim = a1.dim * a2.dim;
  t.structure.assign(static_cast<size_t>(t.dim) * t.dim, {});
  t.basis_names.reserve(t.dim);
  for (int i = 0; i < a1.dim; ++i)
    for (int p = 0; p < a2.dim; ++p)
      t.basis_names.push_back(a1.basis_names[i] + "(x)" + a2.basis_names[p]);
  t.involution = kron(a1.involution, a2.involution);
  t.unit = kron_vec(a1.unit, a2.unit);
  for (int i = 0; i < a1.dim; ++i)
    for (int j = 0; j < a1.dim; ++j) {
      const auto& c1 = a1.terms(i, j);
      if (c1.empty()) continue;
      for (int p = 0; p < a2.dim; ++p)
        for (int q = 0; q < a2.dim; ++q)
          for (const auto& [k, v1] : c1)
            for (const auto& [r, v2] : a2.terms(p, q))
              t.add_term(i * a2.dim + p, j * a2.dim + q, k * a2.dim + r, v1 * v2);
    }
  return t;
}

struct DeficitRow {
  int sym_dim = 0;
  int span_dim = 0;
  int deficit = 0;
};

// sym_dim of A1 (x) A2 versus the rank of { s (x) t : s, t symmetric }
inline DeficitRow observable_span_deficit(const StarAlgebra& a1, const StarAlgebra& a2) {
  SymmetricSplit s1 = symmetric_basis(a1);
  SymmetricSplit s2 = symmetric_basis(a2);
  const int d1 = a1.dim, d2 = a2.dim;

  Eigen::MatrixXd st = kron(a1.involution, a2.involution);
  DeficitRow row;
  row.sym_dim = d1 * d2 - numeric_rank(st - Eigen::MatrixXd::Identity(d1 * d2, d1 * d2), 1e-8);

  Eigen::MatrixXd span(d1 * d2, s1.symmetric.size() * s2.symmetric.size());
  int col = 0;
  for (const auto& s : s1.symmetric)
    for (const auto& t : s2.symmetric) span.col(col++) = kron_vec(s, t);
  row.span_dim = numeric_rank(span, 1e-8);
  row.deficit = row.sym_dim - row.span_dim;
  return row;
}

// ---------------------------------------------------------------------------
// C-tensor of complex matrix algebras, realized inside the real formalism by
// quotienting the real tensor by the two-sided ideal that identifies
// (i 1) (x) 1 with 1 (x) (i 1).

inline Eigen::VectorXd imaginary_unit_coords(const MatrixAlgebra& ma) {
  Eigen::VectorXd v = Eigen::VectorXd::Zero(ma.algebra.dim);
  for (int t = 0; t < ma.algebra.dim; ++t) {
    const auto& bi = ma.index[t];
    if (ma.blocks[bi.block].ring != Ring::C)
      throw std::invalid_argument("imaginary_unit_coords: factor is not a complex matrix algebra");
    if (bi.row == bi.col && bi.unit == 1) v(t) = 1.0;
  }
  return v;
}

struct ComplexTensorAlgebra {
  StarAlgebra algebra;       // quotient, with structure constants when requested
  Eigen::MatrixXd section;   // columns: orthonormal basis of the ideal's complement
  int real_tensor_dim = 0;
  Eigen::MatrixXd section_involution;
  Eigen::VectorXd section_unit;
};

inline ComplexTensorAlgebra complex_tensor_product(const MatrixAlgebra& ma1,
                                                   const MatrixAlgebra& ma2,
                                                   bool with_structure_constants = true) {
  StarAlgebra t = tensor_product(ma1.algebra, ma2.algebra);
  const int dt = t.dim;

  Eigen::VectorXd z = kron_vec(imaginary_unit_coords(ma1), ma2.algebra.unit) -
                      kron_vec(ma1.algebra.unit, imaginary_unit_coords(ma2));

  // span of { e_a z e_b } accumulated as a Gram matrix; its null space is the
  // orthogonal section realizing the quotient
  Eigen::MatrixXd gram = Eigen::MatrixXd::Zero(dt, dt);
  for (int a = 0; a < dt; ++a) {
    Eigen::VectorXd az = t.product(t.basis_coords(a), z);
    for (int b = 0; b < dt; ++b) {
      Eigen::VectorXd v = t.product(az, t.basis_coords(b));
      std::vector<int> nz;
      for (int i = 0; i < dt; ++i)
        if (v(i) != 0.0) nz.push_back(i);
      for (int i : nz)
        for (int j : nz) gram(i, j) += v(i) * v(j);
    }
  }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(gram);
  double lmax = std::max(es.eigenvalues()(dt - 1), 0.0);
  int null_count = 0;
  while (null_count < dt && es.eigenvalues()(null_count) <= 1e-9 * std::max(lmax, 1e-30))
    ++null_count;

  ComplexTensorAlgebra out;
  out.real_tensor_dim = dt;
  out.section = es.eigenvectors().leftCols(null_count);
  const Eigen::MatrixXd& q = out.section;
  out.section_involution = q.transpose() * t.involution * q;
  out.section_unit = q.transpose() * t.unit;

  StarAlgebra& qa = out.algebra;
  qa.dim = null_count;
  qa.basis_names.reserve(null_count);
  for (int i = 0; i < null_count; ++i) qa.basis_names.push_back("q" + std::to_string(i));
  qa.involution = out.section_involution;
  qa.unit = out.section_unit;
  qa.structure.assign(static_cast<size_t>(null_count) * null_count, {});
  if (with_structure_constants) {
    for (int i = 0; i < null_count; ++i)
      for (int j = 0; j < null_count; ++j) {
        Eigen::VectorXd prod = q.transpose() * t.product(q.col(i), q.col(j));
        for (int k = 0; k < null_count; ++k)
          if (std::abs(prod(k)) > 1e-13) qa.add_term(i, j, k, prod(k));
      }
  }
  return out;
}

// deficit for the C-tensor of M_n(C) and M_m(C), computed on the quotient
// section without materializing quotient structure constants
inline DeficitRow complex_observable_span_deficit(int n, int m) {
  MatrixAlgebra a1 = matrix_algebra({{n, Ring::C}});
  MatrixAlgebra a2 = matrix_algebra({{m, Ring::C}});
  ComplexTensorAlgebra ct = complex_tensor_product(a1, a2, false);
  const Eigen::MatrixXd& q = ct.section;

  DeficitRow row;
  Eigen::MatrixXd fix = ct.section_involution -
                        Eigen::MatrixXd::Identity(q.cols(), q.cols());
  row.sym_dim = static_cast<int>(q.cols()) - numeric_rank(fix, 1e-8);

  SymmetricSplit s1 = symmetric_basis(a1.algebra);
  SymmetricSplit s2 = symmetric_basis(a2.algebra);
  Eigen::MatrixXd span(q.cols(), s1.symmetric.size() * s2.symmetric.size());
  int col = 0;
  for (const auto& s : s1.symmetric)
    for (const auto& t : s2.symmetric) span.col(col++) = q.transpose() * kron_vec(s, t);
  row.span_dim = numeric_rank(span, 1e-8);
  row.deficit = row.sym_dim - row.span_dim;
  return row;
}

// one table row as the CLI reports it: real tensor for R and H, C-tensor for C
inline DeficitRow deficit_row(Ring ring, int n, int m) {
  if (n < 1 || m < 1) throw std::invalid_argument("deficit_row: sizes must be >= 1");
  if (ring == Ring::C) return complex_observable_span_deficit(n, m);
  StarAlgebra a1 = matrix_algebra({{n, ring}}).algebra;
  StarAlgebra a2 = matrix_algebra({{m, ring}}).algebra;
  return observable_span_deficit(a1, a2);
}

}  // namespace starlat
