#pragma once

// Bundled fixtures, all regenerated from the library constructors (no
// hand-typed structure constants).  The CLI writes them to disk; the tests
// and the acceptance suite consume the same definitions.

#include <functional>
#include <string>
#include <vector>

#include <json.hpp>

#include "starlat/locality.hpp"
#include "starlat/ortholattice.hpp"
#include "starlat/random.hpp"
#include "starlat/star_algebra.hpp"
#include "starlat/states.hpp"

namespace starlat {

struct Fixture {
  std::string name;  // also the file name
  std::string kind;  // "algebra" or "lattice"
  std::string description;
  std::function<nlohmann::ordered_json()> make;
};

inline Eigen::MatrixXd random_orthogonal(int n, std::uint64_t seed) {
  Rng rng = sample_rng(seed, 0);
  Eigen::MatrixXd g(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) g(i, j) = rng.gaussian();
  Eigen::HouseholderQR<Eigen::MatrixXd> qr(g);
  return qr.householderQ();
}

inline const std::vector<Fixture>& bundled_fixtures() {
  static const std::vector<Fixture> fixtures = {
      {"m2r.json", "algebra", "M_2(R) with transpose involution",
       [] { return algebra_to_json(matrix_algebra({{2, Ring::R}}).algebra); }},
      {"m2c.json", "algebra", "M_2(C) as a real *-algebra with conjugate-transpose involution",
       [] { return algebra_to_json(matrix_algebra({{2, Ring::C}}).algebra); }},
      {"h-quaternions.json", "algebra", "the quaternions H = M_1(H) with quaternion conjugation",
       [] { return algebra_to_json(matrix_algebra({{1, Ring::H}}).algebra); }},
      {"broken-assoc.json", "algebra", "M_2(R) with one structure constant perturbed by 0.1",
       [] {
         StarAlgebra a = matrix_algebra({{2, Ring::R}}).algebra;
         a.add_term(0, 0, 0, 0.1);
         return algebra_to_json(a);
       }},
      {"group-c3.json", "algebra", "real group algebra R[C_3], involution g -> g^-1",
       [] { return algebra_to_json(group_star_algebra(3)); }},
      {"group-c4.json", "algebra", "real group algebra R[C_4], involution g -> g^-1",
       [] { return algebra_to_json(group_star_algebra(4)); }},
      {"scrambled-m2-m3.json", "algebra",
       "M_2(R) + M_3(R) conjugated by a fixed random orthogonal basis change",
       [] {
         StarAlgebra a = matrix_algebra({{2, Ring::R}, {3, Ring::R}}).algebra;
         return algebra_to_json(change_basis(a, random_orthogonal(a.dim, 0x5ca1ab1eULL)));
       }},
      {"tracial-m2r.json", "state", "the tracial state tr/2 on M_2(R), referencing m2r.json",
       [] {
         State phi = tracial_state(matrix_algebra({{2, Ring::R}}).algebra);
         return state_file_to_json("m2r.json", phi.form);
       }},
      {"boolean-b3.json", "lattice", "Boolean lattice of subsets of a 3-set",
       [] { return lattice_to_json(boolean_lattice(3)); }},
      {"mo2.json", "lattice", "MO2, four complement-paired incomparable atoms",
       [] { return lattice_to_json(mo_lattice(2)); }},
      {"o6.json", "lattice", "O6 benzene ring: orthocomplemented but not orthomodular",
       [] { return lattice_to_json(o6_lattice()); }},
      {"nonreversing-6.json", "lattice",
       "6-element bounded poset with involutive complement violating order reversal",
       [] {
         auto w = find_nonreversing_complement(6);
         if (!w) throw std::runtime_error("nonreversing witness search came up empty");
         return lattice_to_json(*w);
       }},
  };
  return fixtures;
}

}  // namespace starlat
