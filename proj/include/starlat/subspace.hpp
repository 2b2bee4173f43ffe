#pragma once

// Lattices of subspaces of K^n for K in {R, C, H} with the standard Hermitian
// form: orthocomplement, meet and join, sampled verification of the lattice
// axioms (double complement, orthomodularity, order reversal, covering), and
// the mutually-orthogonal-atom construction from overlapping generators.
//
// Subspaces are right K-modules represented by orthonormal column bases; all
// comparisons go through projectors, since bases are not unique.

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <vector>

#include <Eigen/Dense>

#include "starlat/linalg.hpp"
#include "starlat/random.hpp"
#include "starlat/report.hpp"
#include "starlat/scalar.hpp"

namespace starlat {

template <class K>
struct Subspace {
  int ambient = 0;
  Mat<K> basis;  // ambient x k, orthonormal columns

  Subspace() = default;
  Subspace(int n, Mat<K> b) : ambient(n), basis(std::move(b)) {
    if (basis.rows() != n) throw std::invalid_argument("Subspace: basis row count != ambient");
  }
  int dim() const { return basis.cols(); }
};

template <class K>
Subspace<K> zero_subspace(int n) {
  return Subspace<K>(n, Mat<K>(n, 0));
}

template <class K>
Subspace<K> full_space(int n) {
  return Subspace<K>(n, Mat<K>::identity(n));
}

template <class K>
Subspace<K> span_columns(const Mat<K>& cols, int rank = -1) {
  return Subspace<K>(cols.rows(), orthonormalize_columns(cols, rank));
}

template <class K>
Subspace<K> coordinate_span(int n, const std::vector<int>& indices) {
  Mat<K> b(n, static_cast<int>(indices.size()));
  for (size_t j = 0; j < indices.size(); ++j) b(indices[j], static_cast<int>(j)) = ScalarTraits<K>::unit(0);
  return Subspace<K>(n, b);
}

template <class K>
Mat<K> projector(const Subspace<K>& m) {
  if (m.dim() == 0) return Mat<K>(m.ambient, m.ambient);
  return m.basis * m.basis.adjoint();
}

template <class K>
double projector_distance(const Subspace<K>& m, const Subspace<K>& n) {
  return (projector(m) - projector(n)).max_abs();
}

template <class K>
bool subspace_eq(const Subspace<K>& m, const Subspace<K>& n, double tol = 1e-8) {
  return projector_distance(m, n) < tol;
}

// M <= N  <=>  P_N P_M = P_M
template <class K>
bool subspace_leq(const Subspace<K>& m, const Subspace<K>& n, double tol = 1e-8) {
  Mat<K> pm = projector(m);
  return (projector(n) * pm - pm).max_abs() < tol;
}

template <class K>
Subspace<K> ortho_complement(const Subspace<K>& m) {
  const int n = m.ambient;
  if (m.dim() == 0) return full_space<K>(n);
  if (m.dim() == n) return zero_subspace<K>(n);
  Mat<K> residual = Mat<K>::identity(n) - projector(m);
  return Subspace<K>(n, orthonormalize_columns(residual, n - m.dim()));
}

template <class K>
Subspace<K> join(const Subspace<K>& m, const Subspace<K>& n) {
  if (m.ambient != n.ambient) throw std::invalid_argument("join: ambient mismatch");
  if (m.dim() == 0) return n;
  if (n.dim() == 0) return m;
  Mat<K> cols(m.ambient, m.dim() + n.dim());
  for (int j = 0; j < m.dim(); ++j) cols.set_col(j, m.basis.col(j));
  for (int j = 0; j < n.dim(); ++j) cols.set_col(m.dim() + j, n.basis.col(j));
  return span_columns(cols);
}

template <class K>
Subspace<K> meet(const Subspace<K>& m, const Subspace<K>& n) {
  return ortho_complement(join(ortho_complement(m), ortho_complement(n)));
}

template <class K>
Subspace<K> random_subspace(int n, Rng& rng, int dim = -1) {
  if (dim < 0) dim = rng.uniform_int(0, n);
  if (dim == 0) return zero_subspace<K>(n);
  constexpr int d = ScalarTraits<K>::dim;
  Mat<K> cols(n, dim);
  for (int j = 0; j < dim; ++j)
    for (int i = 0; i < n; ++i) {
      std::array<double, 4> c{};
      for (int t = 0; t < d; ++t) c[t] = rng.gaussian();
      cols(i, j) = ScalarTraits<K>::from_coeffs(c.data());
    }
  return span_columns(cols, dim);
}

// random subspace of a given subspace (for nested pairs)
template <class K>
Subspace<K> random_subspace_of(const Subspace<K>& n, Rng& rng, int dim = -1) {
  if (n.dim() == 0) return n;
  if (dim < 0) dim = rng.uniform_int(0, n.dim());
  if (dim == 0) return zero_subspace<K>(n.ambient);
  constexpr int d = ScalarTraits<K>::dim;
  Mat<K> coeff(n.dim(), dim);
  for (int j = 0; j < dim; ++j)
    for (int i = 0; i < n.dim(); ++i) {
      std::array<double, 4> c{};
      for (int t = 0; t < d; ++t) c[t] = rng.gaussian();
      coeff(i, j) = ScalarTraits<K>::from_coeffs(c.data());
    }
  return span_columns(n.basis * coeff, dim);
}

// ---------------------------------------------------------------------------
// sampled axiom battery for the subspace lattice of K^n

template <class K>
Report verify_pointwise_axioms_t(int n, long n_samples, std::uint64_t seed) {
  Report rep;
  rep.suite = std::string("subspace-axioms-") + ring_name(ScalarTraits<K>::ring) + "-" +
              std::to_string(n);
  rep.seed = seed;

  double res_dc = 0.0, res_om = 0.0, res_dim = 0.0;
  bool eq4_ok = true, covering_ok = true;
  long covering_checked = 0;
  std::optional<std::vector<double>> w_eq4, w_cov;

  for (long s = 0; s < n_samples; ++s) {
    Rng rng = sample_rng(seed, static_cast<std::uint64_t>(s));

    Subspace<K> big = random_subspace<K>(n, rng);
    Subspace<K> small = random_subspace_of(big, rng);
    Subspace<K> other = random_subspace<K>(n, rng);

    // (a) double complement
    Subspace<K> oc = ortho_complement(big);
    res_dim = std::max(res_dim, double(std::abs(big.dim() + oc.dim() - n)));
    res_dc = std::max(res_dc, projector_distance(ortho_complement(oc), big));

    // (b) orthomodular identity on the nested pair
    Subspace<K> om = join(small, meet(big, ortho_complement(small)));
    res_om = std::max(res_om, projector_distance(om, big));

    // (c) order reversal, on the nested (true) pair and a random pair
    if (subspace_leq(ortho_complement(big), ortho_complement(small)) !=
        subspace_leq(small, big)) {
      eq4_ok = false;
      if (!w_eq4) w_eq4 = std::vector<double>{double(s)};
    }
    if (subspace_leq(other, big) !=
        subspace_leq(ortho_complement(big), ortho_complement(other))) {
      eq4_ok = false;
      if (!w_eq4) w_eq4 = std::vector<double>{double(s)};
    }

    // (d) covering: an atom joined to a disjoint element moves one step up
    Subspace<K> line = random_subspace<K>(n, rng, 1);
    Subspace<K> base = random_subspace<K>(n, rng, rng.uniform_int(0, n - 1));
    if (meet(line, base).dim() == 0) {
      ++covering_checked;
      if (join(base, line).dim() != base.dim() + 1) {
        covering_ok = false;
        if (!w_cov) w_cov = std::vector<double>{double(s)};
      }
    }
  }

  rep.add("double_complement", res_dc < 1e-8, res_dc);
  rep.add("complement_dimension", res_dim == 0.0, res_dim);
  rep.add("orthomodular_identity", res_om < 1e-8, res_om);
  rep.add("order_reversal", eq4_ok, eq4_ok ? 0.0 : 1.0, w_eq4);
  rep.add("covering_property", covering_ok && covering_checked > 0,
          covering_ok ? 0.0 : 1.0, w_cov);

  // (e) distributivity counterexample: three coplanar lines
  if (n >= 2) {
    Subspace<K> l1 = coordinate_span<K>(n, {0});
    Subspace<K> l2 = coordinate_span<K>(n, {1});
    Mat<K> diag(n, 1);
    diag(0, 0) = ScalarTraits<K>::unit(0);
    diag(1, 0) = ScalarTraits<K>::unit(0);
    Subspace<K> l3 = span_columns(diag, 1);
    bool lhs_is_l1 = subspace_eq(meet(l1, join(l2, l3)), l1);
    bool rhs_is_zero = join(meet(l1, l2), meet(l1, l3)).dim() == 0;
    rep.add("distributivity_counterexample", lhs_is_l1 && rhs_is_zero,
            lhs_is_l1 && rhs_is_zero ? 0.0 : 1.0);
  }
  return rep;
}

inline Report verify_pointwise_axioms(Ring ring, int n, long n_samples, std::uint64_t seed) {
  switch (ring) {
    case Ring::R: return verify_pointwise_axioms_t<double>(n, n_samples, seed);
    case Ring::C: return verify_pointwise_axioms_t<Complex>(n, n_samples, seed);
    default: return verify_pointwise_axioms_t<Quaternion>(n, n_samples, seed);
  }
}

// ---------------------------------------------------------------------------
// b_alpha = a_alpha AND (meet over beta != alpha of NOT a_beta) for the
// coordinate generators a_alpha = span(e_alpha .. e_{alpha+overlap-1 mod n})

template <class K>
struct AtomFamily {
  std::vector<Subspace<K>> generators;
  std::vector<Subspace<K>> members;
  int nonzero = 0;
  double max_cross = 0.0;  // largest entry of P_alpha P_beta over alpha != beta
  Report report;
};

template <class K>
AtomFamily<K> orthogonal_atom_family(int n, int overlap = 2) {
  if (n < 2) throw std::invalid_argument("orthogonal_atom_family: need ambient dimension >= 2");
  if (overlap < 1 || overlap > n) throw std::invalid_argument("orthogonal_atom_family: bad overlap");
  AtomFamily<K> out;
  out.report.suite = "orthogonal-atom-family";
  for (int a = 0; a < n; ++a) {
    std::vector<int> idx;
    for (int t = 0; t < overlap; ++t) idx.push_back((a + t) % n);
    out.generators.push_back(coordinate_span<K>(n, idx));
  }
  for (int a = 0; a < n; ++a) {
    Subspace<K> acc = out.generators[a];
    for (int b = 0; b < n; ++b) {
      if (b == a) continue;
      acc = meet(acc, ortho_complement(out.generators[b]));
    }
    // extract an atom (a line) from any higher-dimensional member; the first
    // basis column is the deterministic choice
    if (acc.dim() > 1) acc = Subspace<K>(n, acc.basis.col(0));
    out.members.push_back(acc);
    if (acc.dim() > 0) ++out.nonzero;
  }
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      if (a != b)
        out.max_cross =
            std::max(out.max_cross, (projector(out.members[a]) * projector(out.members[b])).max_abs());
  out.report.add("pairwise_orthogonal", out.max_cross < 1e-9, out.max_cross);
  out.report.add("nonzero_members", true, double(out.nonzero));
  return out;
}

}  // namespace starlat
