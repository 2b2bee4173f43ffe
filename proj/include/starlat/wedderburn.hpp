#pragma once

// Numerical Wedderburn-Artin decomposition of a semisimple real *-algebra:
// split the left-regular carrier into simple-ideal blocks via a random
// symmetric central element, refine each block into irreducibles via a random
// symmetric commutant element, then identify the division ring of every block
// from the commutant dimension with the Hermitian count as independent witness.

#include <algorithm>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include <Eigen/Dense>
#include <json.hpp>

#include "starlat/random.hpp"
#include "starlat/star_algebra.hpp"

namespace starlat {

class NonSemisimpleError : public std::runtime_error {
 public:
  explicit NonSemisimpleError(int radical_dim)
      : std::runtime_error("algebra is not semisimple: Jacobson radical has dimension " +
                           std::to_string(radical_dim)),
        radical_dim(radical_dim) {}
  int radical_dim;
};

class RingIdentificationError : public std::runtime_error {
 public:
  explicit RingIdentificationError(const std::string& what) : std::runtime_error(what) {}
};

struct BlockInfo {
  int n = 0;
  Ring ring = Ring::R;
  int multiplicity = 0;  // isotypic multiplicity in the analyzed representation
  int carrier_dim = 0;   // multiplicity * n * real_dim(ring)
};

struct BlockDecomposition {
  std::vector<BlockInfo> blocks;
  Eigen::MatrixXd change_of_basis;      // x_block = M x, matrices go M L M^{-1}
  Eigen::MatrixXd change_of_basis_inv;
  double residual = 0.0;
  std::uint64_t seed = 0;
  std::vector<std::uint64_t> draw_seeds;  // seeds actually used (after retries)
  bool hermitian_count_consistent = false;
};

namespace detail {

// orthonormal basis of {x : M x ~ 0} for PSD M; eigenvalue scale below the
// zero floor (squared singular values) means M is the zero matrix
inline Eigen::MatrixXd psd_nullspace(const Eigen::MatrixXd& m, double rel_tol = 1e-9) {
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(0.5 * (m + m.transpose()));
  double lmax = std::max(es.eigenvalues()(m.rows() - 1), 0.0);
  if (lmax < kZeroMatrixFloor * kZeroMatrixFloor) return Eigen::MatrixXd::Identity(m.rows(), m.cols());
  double tol = rel_tol * lmax;
  int nz = 0;
  while (nz < m.rows() && es.eigenvalues()(nz) <= tol) ++nz;
  return es.eigenvectors().leftCols(nz);
}

}  // namespace detail

// Basis of {X : A_i X = X A_i for all i} as matrices.
inline std::vector<Eigen::MatrixXd> commutant_basis(const std::vector<Eigen::MatrixXd>& action) {
  if (action.empty()) throw std::invalid_argument("commutant_basis: empty action");
  const int m = static_cast<int>(action[0].rows());
  Eigen::MatrixXd eye = Eigen::MatrixXd::Identity(m, m);
  Eigen::MatrixXd sys = Eigen::MatrixXd::Zero(m * m, m * m);
  for (const auto& a : action) {
    Eigen::MatrixXd k = kron(eye, a) - kron(a.transpose(), eye);
    sys += k.transpose() * k;
  }
  Eigen::MatrixXd null = detail::psd_nullspace(sys);
  std::vector<Eigen::MatrixXd> out;
  out.reserve(null.cols());
  for (int j = 0; j < null.cols(); ++j)
    out.push_back(Eigen::Map<const Eigen::MatrixXd>(null.col(j).data(), m, m));
  return out;
}

// commutant real dimension 1 -> R, 2 -> C, 4 -> H
inline Ring identify_division_ring(const std::vector<Eigen::MatrixXd>& irreducible_action) {
  int c = static_cast<int>(commutant_basis(irreducible_action).size());
  switch (c) {
    case 1: return Ring::R;
    case 2: return Ring::C;
    case 4: return Ring::H;
    default:
      throw RingIdentificationError("commutant dimension " + std::to_string(c) +
                                    " is not 1, 2 or 4; block is not irreducible");
  }
}

inline int hermitian_dimension(int n, Ring k) {
  switch (k) {
    case Ring::R: return n * (n + 1) / 2;
    case Ring::C: return n * n;
    default: return n * (2 * n - 1);
  }
}

inline double verify_decomposition(const StarAlgebra& a, const BlockDecomposition& d) {
  const Eigen::MatrixXd& m = d.change_of_basis;
  const Eigen::MatrixXd& minv = d.change_of_basis_inv;
  std::vector<int> sizes;
  for (const auto& b : d.blocks) sizes.push_back(b.carrier_dim);

  auto off_block_residual = [&](const Eigen::MatrixXd& t) {
    double r = 0.0;
    int row0 = 0;
    for (size_t p = 0; p < sizes.size(); ++p) {
      int col0 = 0;
      for (size_t q = 0; q < sizes.size(); ++q) {
        if (p != q) {
          double blk = t.block(row0, col0, sizes[p], sizes[q]).cwiseAbs().maxCoeff();
          r = std::max(r, blk);
        }
        col0 += sizes[q];
      }
      row0 += sizes[p];
    }
    return r;
  };

  double res = 0.0;
  for (int i = 0; i < a.dim; ++i)
    res = std::max(res, off_block_residual(m * a.left_mult(a.basis_coords(i)) * minv));
  // the involution must map each simple block to itself
  res = std::max(res, off_block_residual(m * a.involution * minv));
  return res;
}

inline BlockDecomposition block_diagonalize(const StarAlgebra& a, std::uint64_t seed) {
  const int n = a.dim;
  std::vector<Eigen::MatrixXd> lbasis = a.left_regular_basis();

  // semisimplicity: the trace form of the regular representation must be
  // nondegenerate (char 0)
  Eigen::MatrixXd trace_form(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) trace_form(i, j) = (lbasis[i] * lbasis[j]).trace();
  {
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(
        0.5 * (trace_form + trace_form.transpose()), Eigen::EigenvaluesOnly);
    double lmax = es.eigenvalues().cwiseAbs().maxCoeff();
    int rank = 0;
    for (int i = 0; i < n; ++i)
      if (std::abs(es.eigenvalues()(i)) > 1e-10 * std::max(lmax, 1e-30)) ++rank;
    if (rank < n) throw NonSemisimpleError(n - rank);
  }

  // orthogonalize the regular representation with the star pairing tr(x^* y)
  Eigen::MatrixXd gram = a.involution.transpose() * trace_form / n;
  gram = 0.5 * (gram + gram.transpose());
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> ges(gram);
  if (ges.eigenvalues()(0) <= 1e-10 * std::max(ges.eigenvalues()(n - 1), 0.0))
    throw RingIdentificationError(
        "the pairing tr(x^* y) is not positive definite; the involution admits no faithful state");
  Eigen::VectorXd sq = ges.eigenvalues().cwiseSqrt();
  Eigen::MatrixXd w = sq.asDiagonal() * ges.eigenvectors().transpose();
  Eigen::MatrixXd winv = ges.eigenvectors() * sq.cwiseInverse().asDiagonal();
  std::vector<Eigen::MatrixXd> pi(n);
  for (int i = 0; i < n; ++i) pi[i] = w * lbasis[i] * winv;

  // symmetric central elements: one real dimension per simple ideal
  Eigen::MatrixXd central_sys = Eigen::MatrixXd::Zero(n, n);
  for (int i = 0; i < n; ++i) {
    Eigen::MatrixXd c = a.left_mult(a.basis_coords(i)) - a.right_mult(a.basis_coords(i));
    central_sys += c.transpose() * c;
  }
  Eigen::MatrixXd fix = a.involution - Eigen::MatrixXd::Identity(n, n);
  central_sys += fix.transpose() * fix;
  Eigen::MatrixXd zsym = detail::psd_nullspace(central_sys);
  const int n_blocks = static_cast<int>(zsym.cols());
  if (n_blocks < 1) throw std::runtime_error("no symmetric central elements found");

  BlockDecomposition out;
  out.seed = seed;

  // split the carrier by the spectrum of a random symmetric central element
  struct RawBlock {
    Eigen::MatrixXd carrier;  // orthonormal columns in pi coordinates
  };
  std::vector<RawBlock> raw;
  for (int attempt = 0;; ++attempt) {
    if (attempt >= 5)
      throw std::runtime_error("block_diagonalize: central element spectrum stayed degenerate");
    std::uint64_t draw = seed + 7919ULL * static_cast<std::uint64_t>(attempt);
    out.draw_seeds.push_back(draw);
    Rng rng = sample_rng(draw, 0);
    Eigen::VectorXd zeta = Eigen::VectorXd::Zero(n);
    for (int t = 0; t < n_blocks; ++t) zeta += rng.gaussian() * zsym.col(t);
    Eigen::MatrixXd pz = Eigen::MatrixXd::Zero(n, n);
    for (int i = 0; i < n; ++i)
      if (zeta(i) != 0.0) pz += zeta(i) * pi[i];
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(0.5 * (pz + pz.transpose()));
    auto clusters = cluster_sorted(es.eigenvalues(), 1e-8);
    if (static_cast<int>(clusters.size()) != n_blocks) continue;  // collision, redraw
    raw.clear();
    for (auto [b, e] : clusters) raw.push_back({es.eigenvectors().middleCols(b, e - b)});
    break;
  }

  // refine each simple block into irreducibles and identify its ring
  struct Analyzed {
    BlockInfo info;
    Eigen::MatrixXd carrier;  // columns ordered by irreducible cluster
  };
  std::vector<Analyzed> analyzed;
  for (size_t bidx = 0; bidx < raw.size(); ++bidx) {
    const Eigen::MatrixXd& v = raw[bidx].carrier;
    const int m = static_cast<int>(v.cols());
    std::vector<Eigen::MatrixXd> restricted(n);
    for (int i = 0; i < n; ++i) restricted[i] = v.transpose() * pi[i] * v;

    std::vector<Eigen::MatrixXd> comm = commutant_basis(restricted);
    Eigen::MatrixXd refine_basis;  // m x m orthogonal, columns grouped by irreducible
    int mult = 0;
    for (int attempt = 0;; ++attempt) {
      if (attempt >= 5)
        throw std::runtime_error("block_diagonalize: commutant spectrum stayed degenerate");
      std::uint64_t draw = seed + 104729ULL * (bidx + 1) + 7919ULL * static_cast<std::uint64_t>(attempt);
      out.draw_seeds.push_back(draw);
      Rng rng = sample_rng(draw, 1);
      Eigen::MatrixXd x = Eigen::MatrixXd::Zero(m, m);
      for (const auto& c : comm) x += rng.gaussian() * c;
      Eigen::MatrixXd xs = 0.5 * (x + x.transpose());
      Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(xs);
      auto clusters = cluster_sorted(es.eigenvalues(), 1e-8);
      int k = static_cast<int>(clusters.size());
      if (m % k != 0) continue;
      bool even = true;
      for (auto [b, e] : clusters) even = even && (e - b == m / k);
      if (!even) continue;
      mult = k;
      refine_basis = es.eigenvectors();
      break;
    }

    const int w_dim = m / mult;
    Eigen::MatrixXd first = refine_basis.leftCols(w_dim);
    std::vector<Eigen::MatrixXd> irr(n);
    for (int i = 0; i < n; ++i) irr[i] = first.transpose() * restricted[i] * first;
    Ring ring = identify_division_ring(irr);
    const int d = real_dim(ring);
    if (w_dim % d != 0)
      throw RingIdentificationError("irreducible carrier dimension " + std::to_string(w_dim) +
                                    " is not divisible by the ring dimension " + std::to_string(d));
    Analyzed an;
    an.info = {w_dim / d, ring, mult, m};
    an.carrier = v * refine_basis;
    analyzed.push_back(std::move(an));
  }

  // in the regular representation each simple ideal M_n(K) carries its
  // irreducible with multiplicity n
  for (const auto& an : analyzed)
    if (an.info.multiplicity != an.info.n)
      throw RingIdentificationError(
          "regular-representation multiplicity " + std::to_string(an.info.multiplicity) +
          " does not match block size " + std::to_string(an.info.n));

  // blocks ordered by (ring dimension, n) ascending, ties by spectral order
  std::stable_sort(analyzed.begin(), analyzed.end(), [](const Analyzed& x, const Analyzed& y) {
    if (real_dim(x.info.ring) != real_dim(y.info.ring))
      return real_dim(x.info.ring) < real_dim(y.info.ring);
    return x.info.n < y.info.n;
  });

  Eigen::MatrixXd vfull(n, n);
  int col = 0;
  for (const auto& an : analyzed) {
    out.blocks.push_back(an.info);
    vfull.middleCols(col, an.carrier.cols()) = an.carrier;
    col += static_cast<int>(an.carrier.cols());
  }
  out.change_of_basis = vfull.transpose() * w;
  out.change_of_basis_inv = winv * vfull;

  // bookkeeping: sum of d_K n^2 must equal dim, Hermitian counts must match
  int total = 0, herm = 0;
  for (const auto& b : out.blocks) {
    total += real_dim(b.ring) * b.n * b.n;
    herm += hermitian_dimension(b.n, b.ring);
  }
  if (total != n)
    throw RingIdentificationError("block dimensions sum to " + std::to_string(total) +
                                  " but the algebra has dimension " + std::to_string(n));
  out.hermitian_count_consistent = (herm == symmetric_dimension(a));
  if (!out.hermitian_count_consistent)
    throw RingIdentificationError(
        "commutant-based ring identification disagrees with the Hermitian dimension count");

  out.residual = verify_decomposition(a, out);
  return out;
}

inline nlohmann::ordered_json decomposition_to_json(const BlockDecomposition& d) {
  nlohmann::ordered_json j;
  nlohmann::ordered_json blocks = nlohmann::ordered_json::array();
  for (const auto& b : d.blocks) {
    nlohmann::ordered_json e;
    e["n"] = b.n;
    e["ring"] = ring_name(b.ring);
    blocks.push_back(std::move(e));
  }
  j["blocks"] = std::move(blocks);
  j["residual"] = d.residual;
  j["seed"] = d.seed;
  return j;
}

}  // namespace starlat
