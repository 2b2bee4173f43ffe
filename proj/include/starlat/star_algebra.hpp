#pragma once

// Finite-dimensional real *-algebras given by structure constants and an
// involution matrix, plus the two canonical constructors: direct sums of
// matrix algebras over R/C/H and cyclic group algebras.

#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <Eigen/Dense>
#include <json.hpp>

#include "starlat/linalg.hpp"
#include "starlat/report.hpp"
#include "starlat/scalar.hpp"

namespace starlat {

class AlgebraMismatchError : public std::invalid_argument {
 public:
  AlgebraMismatchError() : std::invalid_argument("operands belong to different algebras") {}
};

// e_i e_j = sum_k c[i][j][k] e_k, stored sparsely per (i, j);
// e_i^* = sum_k S(k, i) e_k, i.e. coords(x^*) = S * coords(x).
struct StarAlgebra {
  int dim = 0;
  std::vector<std::string> basis_names;
  std::vector<std::vector<std::pair<int, double>>> structure;  // [i*dim + j] -> {(k, c)}
  Eigen::MatrixXd involution;
  Eigen::VectorXd unit;

  const std::vector<std::pair<int, double>>& terms(int i, int j) const {
    return structure[static_cast<size_t>(i) * dim + j];
  }

  void add_term(int i, int j, int k, double v) {
    if (v != 0.0) structure[static_cast<size_t>(i) * dim + j].emplace_back(k, v);
  }

  double max_structure_constant() const {
    double m = 0.0;
    for (const auto& cell : structure)
      for (const auto& [k, v] : cell) m = std::max(m, std::abs(v));
    return m;
  }

  // coords of x*y
  Eigen::VectorXd product(const Eigen::VectorXd& x, const Eigen::VectorXd& y) const {
    Eigen::VectorXd out = Eigen::VectorXd::Zero(dim);
    for (int i = 0; i < dim; ++i) {
      if (x(i) == 0.0) continue;
      for (int j = 0; j < dim; ++j) {
        double xy = x(i) * y(j);
        if (xy == 0.0) continue;
        for (const auto& [k, v] : terms(i, j)) out(k) += xy * v;
      }
    }
    return out;
  }

  // matrix of left multiplication by x on coefficient space
  Eigen::MatrixXd left_mult(const Eigen::VectorXd& x) const {
    Eigen::MatrixXd m = Eigen::MatrixXd::Zero(dim, dim);
    for (int i = 0; i < dim; ++i) {
      if (x(i) == 0.0) continue;
      for (int j = 0; j < dim; ++j)
        for (const auto& [k, v] : terms(i, j)) m(k, j) += x(i) * v;
    }
    return m;
  }

  Eigen::MatrixXd right_mult(const Eigen::VectorXd& y) const {
    Eigen::MatrixXd m = Eigen::MatrixXd::Zero(dim, dim);
    for (int j = 0; j < dim; ++j) {
      if (y(j) == 0.0) continue;
      for (int i = 0; i < dim; ++i)
        for (const auto& [k, v] : terms(i, j)) m(k, i) += y(j) * v;
    }
    return m;
  }

  std::vector<Eigen::MatrixXd> left_regular_basis() const {
    std::vector<Eigen::MatrixXd> ls;
    ls.reserve(dim);
    for (int i = 0; i < dim; ++i) {
      Eigen::MatrixXd m = Eigen::MatrixXd::Zero(dim, dim);
      for (int j = 0; j < dim; ++j)
        for (const auto& [k, v] : terms(i, j)) m(k, j) += v;
      ls.push_back(std::move(m));
    }
    return ls;
  }

  Eigen::VectorXd basis_coords(int i) const {
    Eigen::VectorXd e = Eigen::VectorXd::Zero(dim);
    e(i) = 1.0;
    return e;
  }
};

struct AlgebraElement {
  const StarAlgebra* algebra = nullptr;
  Eigen::VectorXd coords;

  AlgebraElement() = default;
  AlgebraElement(const StarAlgebra& a, Eigen::VectorXd c) : algebra(&a), coords(std::move(c)) {
    if (coords.size() != a.dim) throw std::invalid_argument("coordinate length != algebra dim");
  }
};

inline AlgebraElement multiply(const AlgebraElement& x, const AlgebraElement& y) {
  if (x.algebra != y.algebra) throw AlgebraMismatchError();
  return {*x.algebra, x.algebra->product(x.coords, y.coords)};
}

inline AlgebraElement involute(const AlgebraElement& x) {
  return {*x.algebra, x.algebra->involution * x.coords};
}

inline AlgebraElement operator*(const AlgebraElement& x, const AlgebraElement& y) { return multiply(x, y); }
inline AlgebraElement operator+(const AlgebraElement& x, const AlgebraElement& y) {
  if (x.algebra != y.algebra) throw AlgebraMismatchError();
  return {*x.algebra, x.coords + y.coords};
}
inline AlgebraElement operator-(const AlgebraElement& x, const AlgebraElement& y) {
  if (x.algebra != y.algebra) throw AlgebraMismatchError();
  return {*x.algebra, x.coords - y.coords};
}
inline AlgebraElement operator*(double a, const AlgebraElement& x) { return {*x.algebra, a * x.coords}; }

inline AlgebraElement unit_element(const StarAlgebra& a) { return {a, a.unit}; }

// Axiom battery: associativity, unit laws, involution involutivity,
// anti-homomorphism and linearity, each with its worst residual relative to
// the largest structure constant.
inline Report verify_algebra_axioms(const StarAlgebra& a) {
  Report rep;
  rep.suite = "algebra-axioms";
  const double scale = std::max(a.max_structure_constant(), 1.0);
  const double tol = 1e-10 * scale;

  double assoc = 0.0;
  std::optional<std::vector<double>> assoc_witness;
  for (int i = 0; i < a.dim; ++i) {
    Eigen::VectorXd ei = a.basis_coords(i);
    for (int j = 0; j < a.dim; ++j) {
      Eigen::VectorXd eij = a.product(ei, a.basis_coords(j));
      for (int k = 0; k < a.dim; ++k) {
        Eigen::VectorXd lhs = a.product(eij, a.basis_coords(k));
        Eigen::VectorXd rhs = a.product(ei, a.product(a.basis_coords(j), a.basis_coords(k)));
        double r = (lhs - rhs).cwiseAbs().maxCoeff();
        if (r > assoc) {
          assoc = r;
          if (r > tol) assoc_witness = std::vector<double>{double(i), double(j), double(k)};
        }
      }
    }
  }
  rep.add("associativity", assoc <= tol, assoc, assoc_witness);

  double unit_res = 0.0;
  for (int i = 0; i < a.dim; ++i) {
    Eigen::VectorXd ei = a.basis_coords(i);
    unit_res = std::max(unit_res, (a.product(a.unit, ei) - ei).cwiseAbs().maxCoeff());
    unit_res = std::max(unit_res, (a.product(ei, a.unit) - ei).cwiseAbs().maxCoeff());
  }
  rep.add("unit_laws", unit_res <= tol, unit_res);

  double invol = (a.involution * a.involution - Eigen::MatrixXd::Identity(a.dim, a.dim))
                     .cwiseAbs()
                     .maxCoeff();
  rep.add("involution_involutive", invol <= tol, invol);

  double antihom = 0.0;
  std::optional<std::vector<double>> anti_witness;
  for (int i = 0; i < a.dim; ++i)
    for (int j = 0; j < a.dim; ++j) {
      Eigen::VectorXd lhs = a.involution * a.product(a.basis_coords(i), a.basis_coords(j));
      Eigen::VectorXd rhs =
          a.product(a.involution * a.basis_coords(j), a.involution * a.basis_coords(i));
      double r = (lhs - rhs).cwiseAbs().maxCoeff();
      if (r > antihom) {
        antihom = r;
        if (r > tol) anti_witness = std::vector<double>{double(i), double(j)};
      }
    }
  rep.add("involution_antihomomorphism", antihom <= tol, antihom, anti_witness);

  // the involution is stored as a matrix, so linearity is structural
  rep.add("involution_linear", true, 0.0);
  return rep;
}

// Orthonormal bases of the +1 (symmetric) and -1 (skew) subspaces of the
// involution.  dim(sym) + dim(skew) = dim because S is an involution.
struct SymmetricSplit {
  std::vector<Eigen::VectorXd> symmetric;
  std::vector<Eigen::VectorXd> skew;
};

inline SymmetricSplit symmetric_basis(const StarAlgebra& a) {
  SymmetricSplit out;
  Eigen::MatrixXd eye = Eigen::MatrixXd::Identity(a.dim, a.dim);
  Eigen::MatrixXd sym = nullspace(a.involution - eye);
  Eigen::MatrixXd skew = nullspace(a.involution + eye);
  for (int j = 0; j < sym.cols(); ++j) out.symmetric.push_back(sym.col(j));
  for (int j = 0; j < skew.cols(); ++j) out.skew.push_back(skew.col(j));
  if (static_cast<int>(out.symmetric.size() + out.skew.size()) != a.dim)
    throw std::runtime_error("involution eigenspace dimensions do not add up");
  return out;
}

inline int symmetric_dimension(const StarAlgebra& a) {
  Eigen::MatrixXd eye = Eigen::MatrixXd::Identity(a.dim, a.dim);
  return a.dim - numeric_rank(a.involution - eye, 1e-8);
}

// ---------------------------------------------------------------------------
// Matrix *-algebras: direct sums of M_n(K) with conjugate-transpose involution,
// realified in the basis {E_ab u_r}, ordered block-major then row-major.

struct MatrixBlock {
  int n = 0;
  Ring ring = Ring::R;
};

struct MatrixAlgebra {
  StarAlgebra algebra;
  std::vector<MatrixBlock> blocks;

  struct BasisIndex {
    int block, row, col, unit;
  };
  std::vector<BasisIndex> index;  // one entry per algebra basis element
  int rep_dim = 0;                // realified defining representation size

  // realified defining representation of an element
  Eigen::MatrixXd rep(const Eigen::VectorXd& coords) const {
    Eigen::MatrixXd m = Eigen::MatrixXd::Zero(rep_dim, rep_dim);
    for (int t = 0; t < algebra.dim; ++t) {
      if (coords(t) == 0.0) continue;
      m += coords(t) * rep_basis_[t];
    }
    return m;
  }

  const Eigen::MatrixXd& rep_basis(int t) const { return rep_basis_[t]; }

  // the K-matrix of an element restricted to one block (as a realified block
  // is awkward for callers, expose the typed extraction per ring)
  template <class K>
  Mat<K> block_matrix(const Eigen::VectorXd& coords, int block) const {
    if (ScalarTraits<K>::ring != blocks[block].ring)
      throw std::invalid_argument("block_matrix: ring mismatch");
    const int n = blocks[block].n;
    Mat<K> m(n, n);
    for (int t = 0; t < algebra.dim; ++t) {
      const BasisIndex& bi = index[t];
      if (bi.block != block || coords(t) == 0.0) continue;
      m(bi.row, bi.col) += coords(t) * ScalarTraits<K>::unit(bi.unit);
    }
    return m;
  }

  template <class K>
  Eigen::VectorXd coords_of_block_matrix(const Mat<K>& m, int block) const {
    if (ScalarTraits<K>::ring != blocks[block].ring)
      throw std::invalid_argument("coords_of_block_matrix: ring mismatch");
    Eigen::VectorXd coords = Eigen::VectorXd::Zero(algebra.dim);
    std::array<double, 4> c{};
    for (int t = 0; t < algebra.dim; ++t) {
      const BasisIndex& bi = index[t];
      if (bi.block != block) continue;
      ScalarTraits<K>::to_coeffs(m(bi.row, bi.col), c.data());
      coords(t) = c[bi.unit];
    }
    return coords;
  }

  std::vector<Eigen::MatrixXd> rep_basis_;  // filled by matrix_algebra()
};

inline MatrixAlgebra matrix_algebra(const std::vector<MatrixBlock>& blocks) {
  if (blocks.empty()) throw std::invalid_argument("matrix_algebra: at least one block required");
  MatrixAlgebra out;
  out.blocks = blocks;

  int dim = 0, rep_dim = 0;
  for (const auto& b : blocks) {
    if (b.n < 1) throw std::invalid_argument("matrix_algebra: block size must be >= 1");
    dim += real_dim(b.ring) * b.n * b.n;
    rep_dim += real_dim(b.ring) * b.n;
  }

  StarAlgebra& a = out.algebra;
  a.dim = dim;
  a.structure.assign(static_cast<size_t>(dim) * dim, {});
  a.involution = Eigen::MatrixXd::Zero(dim, dim);
  a.unit = Eigen::VectorXd::Zero(dim);
  out.rep_dim = rep_dim;

  // index layout: block-major, then row, col, ring unit
  std::vector<int> block_offset(blocks.size(), 0);
  {
    int off = 0;
    for (size_t b = 0; b < blocks.size(); ++b) {
      block_offset[b] = off;
      off += real_dim(blocks[b].ring) * blocks[b].n * blocks[b].n;
    }
  }
  auto flat = [&](int b, int row, int col, int r) {
    const int n = blocks[b].n, d = real_dim(blocks[b].ring);
    return block_offset[b] + ((row * n + col) * d + r);
  };

  for (size_t b = 0; b < blocks.size(); ++b) {
    const int n = blocks[b].n, d = real_dim(blocks[b].ring);
    const Ring k = blocks[b].ring;
    for (int row = 0; row < n; ++row)
      for (int col = 0; col < n; ++col)
        for (int r = 0; r < d; ++r) {
          int t = flat(static_cast<int>(b), row, col, r);
          out.index.push_back({static_cast<int>(b), row, col, r});
          a.basis_names.push_back("B" + std::to_string(b) + ":E" + std::to_string(row + 1) +
                                  std::to_string(col + 1) +
                                  (d == 1 ? "" : std::string(":") + "1ijk"[r]));
          // involution: (E_ab u_r)^* = E_ba conj(u_r)
          a.involution(flat(static_cast<int>(b), col, row, r), t) = unit_conj_sign(k, r);
          if (row == col && r == 0) a.unit(t) = 1.0;
        }
    // products within the block: (E_ab u_r)(E_cd u_s) = delta_bc E_ad (u_r u_s)
    for (int row = 0; row < n; ++row)
      for (int mid = 0; mid < n; ++mid)
        for (int col = 0; col < n; ++col)
          for (int r = 0; r < d; ++r)
            for (int s = 0; s < d; ++s) {
              auto [t, sign] = unit_product(k, r, s);
              a.add_term(flat(static_cast<int>(b), row, mid, r), flat(static_cast<int>(b), mid, col, s),
                         flat(static_cast<int>(b), row, col, t), sign);
            }
  }

  // realified defining representation
  std::vector<int> rep_offset(blocks.size(), 0);
  {
    int off = 0;
    for (size_t b = 0; b < blocks.size(); ++b) {
      rep_offset[b] = off;
      off += real_dim(blocks[b].ring) * blocks[b].n;
    }
  }
  out.rep_basis_.reserve(dim);
  for (int t = 0; t < dim; ++t) {
    const auto& bi = out.index[t];
    const int d = real_dim(blocks[bi.block].ring);
    Eigen::MatrixXd m = Eigen::MatrixXd::Zero(rep_dim, rep_dim);
    Eigen::MatrixXd u;
    switch (blocks[bi.block].ring) {
      case Ring::R: u = embed_real(ScalarTraits<double>::unit(bi.unit)); break;
      case Ring::C: u = embed_real(ScalarTraits<Complex>::unit(bi.unit)); break;
      default: u = embed_real(ScalarTraits<Quaternion>::unit(bi.unit)); break;
    }
    m.block(rep_offset[bi.block] + d * bi.row, rep_offset[bi.block] + d * bi.col, d, d) = u;
    out.rep_basis_.push_back(std::move(m));
  }
  return out;
}

// Real group algebra of the cyclic group C_n with involution g -> g^{-1}.
inline StarAlgebra group_star_algebra(int n) {
  if (n < 1) throw std::invalid_argument("group_star_algebra: order must be >= 1");
  StarAlgebra a;
  a.dim = n;
  a.structure.assign(static_cast<size_t>(n) * n, {});
  a.involution = Eigen::MatrixXd::Zero(n, n);
  a.unit = Eigen::VectorXd::Zero(n);
  a.unit(0) = 1.0;
  for (int i = 0; i < n; ++i) {
    a.basis_names.push_back("g^" + std::to_string(i));
    a.involution((n - i) % n, i) = 1.0;
    for (int j = 0; j < n; ++j) a.add_term(i, j, (i + j) % n, 1.0);
  }
  return a;
}

// Conjugate the basis by an invertible Q: f_p = sum_i Q(i,p) e_i.
inline StarAlgebra change_basis(const StarAlgebra& a, const Eigen::MatrixXd& q) {
  Eigen::MatrixXd qinv = q.inverse();
  StarAlgebra out;
  out.dim = a.dim;
  out.basis_names.resize(a.dim);
  for (int i = 0; i < a.dim; ++i) out.basis_names[i] = "f" + std::to_string(i);
  out.structure.assign(static_cast<size_t>(a.dim) * a.dim, {});
  out.involution = qinv * a.involution * q;
  out.unit = qinv * a.unit;
  for (int p = 0; p < a.dim; ++p)
    for (int r = 0; r < a.dim; ++r) {
      Eigen::VectorXd prod = qinv * a.product(q.col(p), q.col(r));
      for (int k = 0; k < a.dim; ++k)
        if (std::abs(prod(k)) > 1e-14) out.add_term(p, r, k, prod(k));
    }
  return out;
}

// ---------------------------------------------------------------------------
// JSON schema:
// { "dim": int, "basis_names": [string],
//   "structure_constants": [[i, j, k, value]...],
//   "involution": [[row-major dim x dim reals]], "unit": [dim reals] }

inline nlohmann::ordered_json algebra_to_json(const StarAlgebra& a) {
  nlohmann::ordered_json j;
  j["dim"] = a.dim;
  j["basis_names"] = a.basis_names;
  nlohmann::ordered_json sc = nlohmann::ordered_json::array();
  for (int i = 0; i < a.dim; ++i)
    for (int jj = 0; jj < a.dim; ++jj)
      for (const auto& [k, v] : a.terms(i, jj))
        sc.push_back(nlohmann::ordered_json::array({i, jj, k, v}));
  j["structure_constants"] = std::move(sc);
  nlohmann::ordered_json invol = nlohmann::ordered_json::array();
  for (int r = 0; r < a.dim; ++r) {
    nlohmann::ordered_json row = nlohmann::ordered_json::array();
    for (int c = 0; c < a.dim; ++c) row.push_back(a.involution(r, c));
    invol.push_back(std::move(row));
  }
  j["involution"] = std::move(invol);
  nlohmann::ordered_json u = nlohmann::ordered_json::array();
  for (int i = 0; i < a.dim; ++i) u.push_back(a.unit(i));
  j["unit"] = std::move(u);
  return j;
}

inline StarAlgebra algebra_from_json(const nlohmann::json& j) {
  try {
    StarAlgebra a;
    a.dim = j.at("dim").get<int>();
    if (a.dim < 1) throw ParseError("algebra dim must be >= 1");
    a.basis_names = j.at("basis_names").get<std::vector<std::string>>();
    if (static_cast<int>(a.basis_names.size()) != a.dim)
      throw ParseError("basis_names length != dim");
    a.structure.assign(static_cast<size_t>(a.dim) * a.dim, {});
    for (const auto& t : j.at("structure_constants")) {
      if (!t.is_array() || t.size() != 4) throw ParseError("structure constant entries must be [i,j,k,value]");
      int i = t[0].get<int>(), jj = t[1].get<int>(), k = t[2].get<int>();
      double v = t[3].get<double>();
      if (i < 0 || i >= a.dim || jj < 0 || jj >= a.dim || k < 0 || k >= a.dim)
        throw ParseError("structure constant index out of range");
      a.add_term(i, jj, k, v);
    }
    const auto& invol = j.at("involution");
    if (static_cast<int>(invol.size()) != a.dim) throw ParseError("involution row count != dim");
    a.involution.resize(a.dim, a.dim);
    for (int r = 0; r < a.dim; ++r) {
      if (static_cast<int>(invol[r].size()) != a.dim) throw ParseError("involution row length != dim");
      for (int c = 0; c < a.dim; ++c) a.involution(r, c) = invol[r][c].get<double>();
    }
    const auto& u = j.at("unit");
    if (static_cast<int>(u.size()) != a.dim) throw ParseError("unit length != dim");
    a.unit.resize(a.dim);
    for (int i = 0; i < a.dim; ++i) a.unit(i) = u[i].get<double>();
    return a;
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("algebra file does not match schema: ") + e.what());
  }
}

}  // namespace starlat
