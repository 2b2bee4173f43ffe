#include <catch2/catch_amalgamated.hpp>

#include "starlat/linalg.hpp"
#include "starlat/random.hpp"
#include "starlat/scalar.hpp"

using namespace starlat;

namespace {

Quaternion random_quat(Rng& rng) {
  return {rng.gaussian(), rng.gaussian(), rng.gaussian(), rng.gaussian()};
}

}  // namespace

TEST_CASE("quaternion defining relations", "[scalar]") {
  Quaternion i{0, 1, 0, 0}, j{0, 0, 1, 0}, k{0, 0, 0, 1};
  Quaternion ij = i * j;
  CHECK(abs(ij - k) < 1e-15);
  CHECK(abs(j * i + k) < 1e-15);
  CHECK(abs(i * i + Quaternion{1, 0, 0, 0}) < 1e-15);

  // (1+i)(1-i) = 2
  Quaternion p{1, 1, 0, 0}, q{1, -1, 0, 0};
  CHECK(abs(p * q - Quaternion{2, 0, 0, 0}) < 1e-15);
}

TEST_CASE("quaternion product agrees with the 4x4 real embedding", "[scalar]") {
  Rng rng(101);
  for (int t = 0; t < 100; ++t) {
    Quaternion p = random_quat(rng), q = random_quat(rng), r = random_quat(rng);
    // associativity against the embedding oracle
    Eigen::MatrixXd lhs = embed_real((p * q) * r);
    Eigen::MatrixXd rhs = embed_real(p) * embed_real(q) * embed_real(r);
    CHECK((lhs - rhs).cwiseAbs().maxCoeff() < 1e-12);
    CHECK((embed_real(p * q) - embed_real(p) * embed_real(q)).cwiseAbs().maxCoeff() < 1e-12);
  }
}

TEST_CASE("conjugation", "[scalar]") {
  CHECK(abs(conj(Quaternion{0, 1, 0, 0}) + Quaternion{0, 1, 0, 0}) < 1e-15);
  CHECK(ScalarTraits<double>::conjugate(3.0) == 3.0);
  CHECK(ScalarTraits<Complex>::conjugate({1.0, 2.0}) == Complex(1.0, -2.0));

  Rng rng(202);
  for (int t = 0; t < 100; ++t) {
    Quaternion p = random_quat(rng), q = random_quat(rng);
    // anti-automorphism by direct expansion
    CHECK(abs(conj(p * q) - conj(q) * conj(p)) < 1e-12);
  }
}

TEST_CASE("conj is an involution and |s|^2 is the coefficient norm", "[scalar]") {
  Rng rng(303);
  for (int t = 0; t < 1000; ++t) {
    double r = rng.gaussian();
    CHECK(ScalarTraits<double>::conjugate(ScalarTraits<double>::conjugate(r)) == r);
    Complex c{rng.gaussian(), rng.gaussian()};
    CHECK(std::abs(std::conj(std::conj(c)) - c) == 0.0);
    Quaternion q = random_quat(rng);
    CHECK(abs(conj(conj(q)) - q) == 0.0);

    // real part of conj(s) s equals the sum of squared coefficients
    double direct = q.w * q.w + q.x * q.x + q.y * q.y + q.z * q.z;
    CHECK(std::abs((conj(q) * q).w - direct) < 1e-12 * std::max(1.0, direct));
    CHECK(std::abs(abs2(q) - direct) == 0.0);
  }
}

TEST_CASE("embed_real is a homomorphism with conj -> transpose", "[scalar]") {
  CHECK((embed_real(Quaternion{1, 0, 0, 0}) - Eigen::MatrixXd::Identity(4, 4)).norm() == 0.0);
  Eigen::MatrixXd ei = embed_real(Complex{0, 1});
  CHECK((ei * ei + Eigen::MatrixXd::Identity(2, 2)).norm() < 1e-15);

  Rng rng(404);
  for (int t = 0; t < 100; ++t) {
    Quaternion q = random_quat(rng);
    CHECK((embed_real(conj(q)) - embed_real(q).transpose()).cwiseAbs().maxCoeff() < 1e-13);
    // injectivity: nonzero scalars embed to nonzero matrices
    if (abs(q) > 1e-8) CHECK(embed_real(q).cwiseAbs().maxCoeff() > 1e-9);
  }
}

TEST_CASE("unit product table matches direct multiplication", "[scalar]") {
  for (int r = 0; r < 4; ++r)
    for (int s = 0; s < 4; ++s) {
      auto [t, sign] = unit_product(Ring::H, r, s);
      Quaternion direct = ScalarTraits<Quaternion>::unit(r) * ScalarTraits<Quaternion>::unit(s);
      CHECK(abs(direct - sign * ScalarTraits<Quaternion>::unit(t)) < 1e-15);
    }
  for (int r = 0; r < 2; ++r)
    for (int s = 0; s < 2; ++s) {
      auto [t, sign] = unit_product(Ring::C, r, s);
      Complex direct = ScalarTraits<Complex>::unit(r) * ScalarTraits<Complex>::unit(s);
      CHECK(std::abs(direct - sign * ScalarTraits<Complex>::unit(t)) < 1e-15);
    }
}

TEST_CASE("ring tags", "[scalar]") {
  CHECK(real_dim(Ring::R) == 1);
  CHECK(real_dim(Ring::C) == 2);
  CHECK(real_dim(Ring::H) == 4);
  CHECK(ring_from_name("H") == Ring::H);
  CHECK_THROWS_AS(ring_from_name("Q"), std::invalid_argument);
  CHECK(ScalarRing{Ring::C}.dim() == 2);
}

TEST_CASE("Mat orthonormalization", "[scalar]") {
  Rng rng(505);
  Mat<Quaternion> x(4, 3);
  for (int j = 0; j < 3; ++j)
    for (int i = 0; i < 4; ++i) x(i, j) = random_quat(rng);
  Mat<Quaternion> q = orthonormalize_columns(x, 3);
  Mat<Quaternion> gram = q.adjoint() * q;
  CHECK((gram - Mat<Quaternion>::identity(3)).max_abs() < 1e-12);

  // rank-deficient input: duplicate column detected via the real embedding
  Mat<Quaternion> y(4, 2);
  for (int i = 0; i < 4; ++i) {
    y(i, 0) = x(i, 0);
    y(i, 1) = x(i, 0) * Quaternion{0.5, -1, 2, 0};  // right multiple, same span
  }
  CHECK(orthonormalize_columns(y).cols() == 1);
}
