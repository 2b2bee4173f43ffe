#pragma once

// States on a real *-algebra (symmetric positive normalized forms), the
// state-space sup norm, the Banach/C*-condition sweeps, the positivity
// equivalence check and the finite-dimensional GNS construction.

#include <cmath>
#include <optional>
#include <thread>
#include <vector>

#include <Eigen/Dense>

#include "starlat/random.hpp"
#include "starlat/report.hpp"
#include "starlat/star_algebra.hpp"

namespace starlat {

class NoStateError : public std::runtime_error {
 public:
  explicit NoStateError(const std::string& what) : std::runtime_error(what) {}
};

class InvalidStateError : public std::runtime_error {
 public:
  explicit InvalidStateError(const std::string& what) : std::runtime_error(what) {}
};

struct State {
  const StarAlgebra* algebra = nullptr;
  Eigen::VectorXd form;
  std::optional<Eigen::MatrixXd> density;  // realified defining-rep density, when known

  State() = default;
  State(const StarAlgebra& a, Eigen::VectorXd f) : algebra(&a), form(std::move(f)) {
    if (form.size() != a.dim) throw std::invalid_argument("form length != algebra dim");
  }
};

inline double expectation(const State& phi, const AlgebraElement& x) {
  if (phi.algebra != x.algebra) throw AlgebraMismatchError();
  return phi.form.dot(x.coords);
}

// G[i][j] = phi(e_i^* e_j)
inline Eigen::MatrixXd gram_matrix(const StarAlgebra& a, const Eigen::VectorXd& form) {
  Eigen::MatrixXd g(a.dim, a.dim);
  for (int i = 0; i < a.dim; ++i) {
    Eigen::VectorXd istar = a.involution * a.basis_coords(i);
    Eigen::MatrixXd l = a.left_mult(istar);
    for (int j = 0; j < a.dim; ++j) g(i, j) = form.dot(l.col(j));
  }
  return g;
}

inline double min_eigenvalue(const Eigen::MatrixXd& sym) {
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(0.5 * (sym + sym.transpose()),
                                                    Eigen::EigenvaluesOnly);
  return es.eigenvalues()(0);
}

// scale-invariant PSD threshold: eigenvalue >= -1e-10 * (trace / dim)
inline double psd_threshold(const Eigen::MatrixXd& g) {
  double scale = std::abs(g.trace()) / std::max<int>(1, static_cast<int>(g.rows()));
  return -1e-10 * std::max(scale, 1e-12);
}

inline Report is_state(const StarAlgebra& a, const Eigen::VectorXd& form) {
  Report rep;
  rep.suite = "state";
  double sym_res = (a.involution.transpose() * form - form).cwiseAbs().maxCoeff();
  rep.add("symmetric", sym_res < 1e-10 * std::max(1.0, form.cwiseAbs().maxCoeff()), sym_res);

  Eigen::MatrixXd g = gram_matrix(a, form);
  double lmin = min_eigenvalue(g);
  rep.add("positive", lmin >= psd_threshold(g), std::max(0.0, -lmin));

  double norm_res = std::abs(form.dot(a.unit) - 1.0);
  rep.add("normalized", norm_res < 1e-10, norm_res);
  return rep;
}

// phi(a^*a) >= 0 for all a  versus  phi(s^2) >= 0 for all symmetric s,
// decided independently and compared.
inline Report check_positivity_equivalence(const StarAlgebra& a, const Eigen::VectorXd& form) {
  Report rep;
  rep.suite = "positivity-equivalence";

  Eigen::MatrixXd g = gram_matrix(a, form);
  double lmin_full = min_eigenvalue(g);
  bool cond_a = lmin_full >= psd_threshold(g);
  rep.add("starsquare_positive", cond_a, std::max(0.0, -lmin_full));

  SymmetricSplit split = symmetric_basis(a);
  const int ns = static_cast<int>(split.symmetric.size());
  Eigen::MatrixXd h(ns, ns);
  for (int p = 0; p < ns; ++p)
    for (int q = 0; q < ns; ++q) {
      Eigen::VectorXd pq = a.product(split.symmetric[p], split.symmetric[q]);
      Eigen::VectorXd qp = a.product(split.symmetric[q], split.symmetric[p]);
      h(p, q) = 0.5 * (form.dot(pq) + form.dot(qp));
    }
  double lmin_sym = min_eigenvalue(h);
  bool cond_b = lmin_sym >= psd_threshold(h);
  rep.add("square_positive", cond_b, std::max(0.0, -lmin_sym));

  std::optional<std::vector<double>> witness;
  if (cond_a != cond_b) witness = std::vector<double>(form.data(), form.data() + form.size());
  rep.add("agreement", cond_a == cond_b, cond_a == cond_b ? 0.0 : 1.0, witness);
  return rep;
}

// Per-algebra cache for the sup norm of Eq-style state suprema: conjugates the
// left-regular representation into coordinates where the involution becomes
// the transpose, so positive elements have symmetric matrices.
class NormContext {
 public:
  explicit NormContext(const StarAlgebra& a) : algebra_(&a) {
    const int n = a.dim;
    std::vector<Eigen::MatrixXd> lbasis = a.left_regular_basis();
    // trace form T[i][j] = tr L(e_i e_j), then the star pairing S^T T / n
    Eigen::MatrixXd t(n, n);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) t(i, j) = (lbasis[i] * lbasis[j]).trace();
    Eigen::MatrixXd g = a.involution.transpose() * t / n;
    g = 0.5 * (g + g.transpose());
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(g);
    double lmax = es.eigenvalues()(n - 1);
    if (lmax <= 0.0 || es.eigenvalues()(0) <= 1e-10 * lmax)
      throw NoStateError("state space is degenerate: the pairing tr(x^* y) is not positive definite");
    Eigen::VectorXd sqrt_l = es.eigenvalues().cwiseSqrt();
    w_ = sqrt_l.asDiagonal() * es.eigenvectors().transpose();
    winv_ = es.eigenvectors() * sqrt_l.cwiseInverse().asDiagonal();
    conj_left_.reserve(n);
    for (int i = 0; i < n; ++i) conj_left_.push_back(w_ * lbasis[i] * winv_);
  }

  const StarAlgebra& algebra() const { return *algebra_; }

  Eigen::MatrixXd orthogonal_left_mult(const Eigen::VectorXd& x) const {
    Eigen::MatrixXd m = Eigen::MatrixXd::Zero(algebra_->dim, algebra_->dim);
    for (int i = 0; i < algebra_->dim; ++i)
      if (x(i) != 0.0) m += x(i) * conj_left_[i];
    return m;
  }

  // || x || = sqrt(sup over states of phi(x^* x)) = sqrt(lambda_max(x^* x))
  double sup_norm(const Eigen::VectorXd& x) const {
    Eigen::VectorXd y = algebra_->product(algebra_->involution * x, x);
    Eigen::MatrixXd m = orthogonal_left_mult(y);
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(0.5 * (m + m.transpose()),
                                                      Eigen::EigenvaluesOnly);
    return std::sqrt(std::max(0.0, es.eigenvalues()(algebra_->dim - 1)));
  }

  double min_eig_unit_plus_star_square(const Eigen::VectorXd& x) const {
    Eigen::VectorXd y = algebra_->unit + algebra_->product(algebra_->involution * x, x);
    Eigen::MatrixXd m = orthogonal_left_mult(y);
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(0.5 * (m + m.transpose()),
                                                      Eigen::EigenvaluesOnly);
    return es.eigenvalues()(0);
  }

 private:
  const StarAlgebra* algebra_;
  Eigen::MatrixXd w_, winv_;
  std::vector<Eigen::MatrixXd> conj_left_;
};

inline double sup_norm(const StarAlgebra& a, const AlgebraElement& x) {
  return NormContext(a).sup_norm(x.coords);
}

inline Eigen::VectorXd random_element_coords(const StarAlgebra& a, Rng& rng) {
  Eigen::VectorXd x(a.dim);
  for (int i = 0; i < a.dim; ++i) x(i) = rng.gaussian();
  return x;
}

// random symmetric normalized form (not necessarily positive)
inline Eigen::VectorXd random_symmetric_form(const StarAlgebra& a, Rng& rng) {
  for (int attempt = 0; attempt < 64; ++attempt) {
    Eigen::VectorXd v(a.dim);
    for (int i = 0; i < a.dim; ++i) v(i) = rng.gaussian();
    Eigen::VectorXd f = 0.5 * (v + a.involution.transpose() * v);
    double u = f.dot(a.unit);
    if (std::abs(u) > 0.2) return f / u;
  }
  throw std::runtime_error("random_symmetric_form: could not normalize");
}

inline State tracial_state(const StarAlgebra& a) {
  Eigen::VectorXd f(a.dim);
  std::vector<Eigen::MatrixXd> lbasis = a.left_regular_basis();
  for (int i = 0; i < a.dim; ++i) f(i) = lbasis[i].trace() / a.dim;
  return State(a, f);
}

// states of matrix algebras from realified densities: phi(x) = tr(rho rep(x))
inline State state_from_density(const MatrixAlgebra& ma, const Eigen::MatrixXd& rho) {
  Eigen::VectorXd f(ma.algebra.dim);
  for (int i = 0; i < ma.algebra.dim; ++i) f(i) = (rho * ma.rep_basis(i)).trace();
  State s(ma.algebra, f);
  s.density = rho;
  return s;
}

inline State maximally_mixed_state(const MatrixAlgebra& ma) {
  return state_from_density(ma, Eigen::MatrixXd::Identity(ma.rep_dim, ma.rep_dim) / ma.rep_dim);
}

inline State vector_state(const MatrixAlgebra& ma, const Eigen::VectorXd& v) {
  Eigen::VectorXd u = v / v.norm();
  return state_from_density(ma, u * u.transpose());
}

// recover the realified density of a state on a matrix algebra
inline Eigen::MatrixXd density_from_state(const MatrixAlgebra& ma, const Eigen::VectorXd& form) {
  SymmetricSplit split = symmetric_basis(ma.algebra);
  const int ns = static_cast<int>(split.symmetric.size());
  std::vector<Eigen::MatrixXd> mats(ns);
  for (int p = 0; p < ns; ++p) mats[p] = ma.rep(split.symmetric[p]);
  Eigen::MatrixXd g(ns, ns);
  Eigen::VectorXd r(ns);
  for (int p = 0; p < ns; ++p) {
    r(p) = form.dot(split.symmetric[p]);
    for (int q = 0; q < ns; ++q) g(p, q) = (mats[p] * mats[q]).trace();
  }
  Eigen::VectorXd mu = g.ldlt().solve(r);
  Eigen::MatrixXd rho = Eigen::MatrixXd::Zero(ma.rep_dim, ma.rep_dim);
  for (int p = 0; p < ns; ++p) rho += mu(p) * mats[p];
  return rho;
}

// ---------------------------------------------------------------------------
// Banach and C*-condition sweep.  Per-sample generators keep the report
// independent of the worker split; witnesses are smallest failing indices.

namespace detail {

struct BanachPartial {
  double triangle = 0.0, submult = 0.0, homogeneity = 0.0;
  double cstar_identity = 0.0;     // relative residual of ||x^*x|| = ||x||^2 = ||x^*||^2
  double invertibility = 0.0;      // max(0, (1 - 1e-9) - min eig(1 + x^*x)) style deficit
  double argument_min_ratio = 1e300;  // min of ||y^*y + (xy)^*(xy)|| / ||y||^2
  long first_fail = -1;

  void merge(const BanachPartial& o) {
    triangle = std::max(triangle, o.triangle);
    submult = std::max(submult, o.submult);
    homogeneity = std::max(homogeneity, o.homogeneity);
    cstar_identity = std::max(cstar_identity, o.cstar_identity);
    invertibility = std::max(invertibility, o.invertibility);
    argument_min_ratio = std::min(argument_min_ratio, o.argument_min_ratio);
    if (o.first_fail >= 0 && (first_fail < 0 || o.first_fail < first_fail)) first_fail = o.first_fail;
  }
};

inline BanachPartial banach_sample_range(const NormContext& ctx, std::uint64_t seed, long begin,
                                         long end) {
  const StarAlgebra& a = ctx.algebra();
  BanachPartial p;
  for (long s = begin; s < end; ++s) {
    Rng rng = sample_rng(seed, static_cast<std::uint64_t>(s));
    Eigen::VectorXd x = random_element_coords(a, rng);
    Eigen::VectorXd y = random_element_coords(a, rng);
    double lambda = rng.gaussian();

    double nx = ctx.sup_norm(x), ny = ctx.sup_norm(y);
    double nxy = ctx.sup_norm(a.product(x, y));
    double nsum = ctx.sup_norm(x + y);
    double scale = std::max(1.0, nx + ny);

    double tri = (nsum - (nx + ny)) / scale;
    double sub = (nxy - nx * ny) / std::max(1.0, nx * ny);
    double hom = std::abs(ctx.sup_norm(lambda * x) - std::abs(lambda) * nx) /
                 std::max(1.0, std::abs(lambda) * nx);

    double nstar = ctx.sup_norm(a.involution * x);
    double nss = ctx.sup_norm(a.product(a.involution * x, x));
    double ref = std::max(nx * nx, 1e-300);
    double cstar = std::max(std::abs(nss - nx * nx), std::abs(nstar * nstar - nx * nx)) / ref;

    double mineig = ctx.min_eig_unit_plus_star_square(x);
    double invert = std::max(0.0, (1.0 - 1e-9) - mineig);

    // were 1 + x^*x singular there would be y != 0 with y^*y + (xy)^*(xy) = 0;
    // the spectral norm of that positive element must stay >= ||y||^2
    Eigen::VectorXd xy = a.product(x, y);
    Eigen::VectorXd arg =
        a.product(a.involution * y, y) + a.product(a.involution * xy, xy);
    Eigen::MatrixXd margs = ctx.orthogonal_left_mult(arg);
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(0.5 * (margs + margs.transpose()),
                                                      Eigen::EigenvaluesOnly);
    double norm_arg = std::max(0.0, es.eigenvalues()(a.dim - 1));
    p.argument_min_ratio = std::min(p.argument_min_ratio, norm_arg / std::max(ny * ny, 1e-300));

    p.triangle = std::max(p.triangle, tri);
    p.submult = std::max(p.submult, sub);
    p.homogeneity = std::max(p.homogeneity, hom);
    p.cstar_identity = std::max(p.cstar_identity, cstar);
    p.invertibility = std::max(p.invertibility, invert);
    bool fail = tri > 1e-9 || sub > 1e-9 || hom > 1e-9 || cstar > 1e-9 || invert > 0.0;
    if (fail && p.first_fail < 0) p.first_fail = s;
  }
  return p;
}

}  // namespace detail

inline Report verify_banach_cstar(const StarAlgebra& a, long n_samples, std::uint64_t seed,
                                  int workers = 1) {
  NormContext ctx(a);
  detail::BanachPartial total;
  if (workers <= 1) {
    total = detail::banach_sample_range(ctx, seed, 0, n_samples);
  } else {
    std::vector<detail::BanachPartial> parts(workers);
    std::vector<std::thread> threads;
    long chunk = (n_samples + workers - 1) / workers;
    for (int w = 0; w < workers; ++w) {
      long begin = w * chunk, end = std::min(n_samples, begin + chunk);
      threads.emplace_back([&, w, begin, end] {
        parts[w] = detail::banach_sample_range(ctx, seed, begin, end);
      });
    }
    for (auto& t : threads) t.join();
    for (const auto& p : parts) total.merge(p);
  }

  Report rep;
  rep.suite = "banach-cstar";
  rep.seed = seed;
  std::optional<std::vector<double>> witness;
  if (total.first_fail >= 0) witness = std::vector<double>{double(total.first_fail)};
  rep.add("triangle_inequality", total.triangle <= 1e-9, std::max(0.0, total.triangle), witness);
  rep.add("product_inequality", total.submult <= 1e-9, std::max(0.0, total.submult));
  rep.add("homogeneity", total.homogeneity <= 1e-9, total.homogeneity);
  rep.add("cstar_identity", total.cstar_identity <= 1e-9, total.cstar_identity);
  rep.add("unit_plus_square_invertible", total.invertibility <= 0.0, total.invertibility);
  double arg_deficit = std::max(0.0, (1.0 - 1e-9) - total.argument_min_ratio);
  rep.add("positivity_argument", arg_deficit <= 0.0, arg_deficit);
  return rep;
}

// ---------------------------------------------------------------------------
// GNS: quotient the pairing phi(x^* y) by its null space, orthonormalize, and
// represent left multiplication there.

struct GnsRepresentation {
  int carrier_dim = 0;
  std::vector<Eigen::MatrixXd> representation;  // one matrix per basis element
  Eigen::VectorXd cyclic_vector;
  bool ill_conditioned = false;  // kept/dropped eigenvalues inside the warn band
};

inline GnsRepresentation gns_representation(const StarAlgebra& a, const State& phi) {
  if (phi.algebra != &a) throw AlgebraMismatchError();
  Report state_rep = is_state(a, phi.form);
  if (!state_rep.all_pass()) throw InvalidStateError("gns_representation: form is not a state");

  Eigen::MatrixXd g = gram_matrix(a, phi.form);
  g = 0.5 * (g + g.transpose());
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(g);
  const Eigen::VectorXd& ev = es.eigenvalues();
  double lmax = std::max(ev(a.dim - 1), 0.0);
  if (lmax <= 0.0) throw InvalidStateError("gns_representation: zero pairing");

  GnsRepresentation out;
  int kept = 0;
  for (int i = 0; i < a.dim; ++i) {
    double rel = ev(i) / lmax;
    if (rel > 1e-10) ++kept;
    if (rel > 1e-10 && rel < 1e-6) out.ill_conditioned = true;
  }
  out.carrier_dim = kept;

  Eigen::MatrixXd u = es.eigenvectors().rightCols(kept);
  Eigen::VectorXd lam = ev.tail(kept);
  Eigen::MatrixXd t = lam.cwiseSqrt().asDiagonal() * u.transpose();         // A -> carrier
  Eigen::MatrixXd tplus = u * lam.cwiseSqrt().cwiseInverse().asDiagonal();  // section

  out.representation.reserve(a.dim);
  for (int i = 0; i < a.dim; ++i)
    out.representation.push_back(t * a.left_mult(a.basis_coords(i)) * tplus);
  out.cyclic_vector = t * a.unit;
  return out;
}

// ---------------------------------------------------------------------------
// State JSON schema: { "algebra": string (file reference), "form": [dim reals] }

struct StateFile {
  std::string algebra_ref;
  Eigen::VectorXd form;
};

inline nlohmann::ordered_json state_file_to_json(const std::string& algebra_ref,
                                                 const Eigen::VectorXd& form) {
  nlohmann::ordered_json j;
  j["algebra"] = algebra_ref;
  nlohmann::ordered_json f = nlohmann::ordered_json::array();
  for (int i = 0; i < form.size(); ++i) f.push_back(form(i));
  j["form"] = std::move(f);
  return j;
}

inline StateFile state_file_from_json(const nlohmann::json& j) {
  try {
    StateFile s;
    s.algebra_ref = j.at("algebra").get<std::string>();
    const auto& f = j.at("form");
    s.form.resize(f.size());
    for (size_t i = 0; i < f.size(); ++i) s.form(static_cast<int>(i)) = f[i].get<double>();
    return s;
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("state file does not match schema: ") + e.what());
  }
}

// contract checks: *-homomorphism property and Born-rule reconstruction
inline Report gns_contract_report(const StarAlgebra& a, const State& phi,
                                  const GnsRepresentation& gns) {
  Report rep;
  rep.suite = "gns-contract";
  auto pi = [&](const Eigen::VectorXd& x) {
    Eigen::MatrixXd m = Eigen::MatrixXd::Zero(gns.carrier_dim, gns.carrier_dim);
    for (int i = 0; i < a.dim; ++i)
      if (x(i) != 0.0) m += x(i) * gns.representation[i];
    return m;
  };
  double hom = 0.0, star = 0.0, born = 0.0;
  for (int i = 0; i < a.dim; ++i) {
    Eigen::VectorXd ei = a.basis_coords(i);
    star = std::max(star, (pi(a.involution * ei) - gns.representation[i].transpose())
                              .cwiseAbs()
                              .maxCoeff());
    born = std::max(born, std::abs(phi.form(i) - gns.cyclic_vector.dot(
                                                     gns.representation[i] * gns.cyclic_vector)));
    for (int j = 0; j < a.dim; ++j) {
      Eigen::MatrixXd lhs = pi(a.product(ei, a.basis_coords(j)));
      Eigen::MatrixXd rhs = gns.representation[i] * gns.representation[j];
      hom = std::max(hom, (lhs - rhs).cwiseAbs().maxCoeff());
    }
  }
  rep.add("homomorphism", hom < 1e-9, hom);
  rep.add("star_to_transpose", star < 1e-9, star);
  rep.add("reconstruction", born < 1e-9, born);
  return rep;
}

}  // namespace starlat
