#include <catch2/catch_amalgamated.hpp>

#include "starlat/ortholattice.hpp"
#include "starlat/random.hpp"

using namespace starlat;

TEST_CASE("verify_poset", "[ortholattice]") {
  CHECK(verify_poset(boolean_lattice(3)).all_pass());

  // a <= b and b <= a with a != b breaks antisymmetry
  FiniteOrtholattice broken;
  broken.size = 2;
  broken.labels = {"a", "b"};
  broken.leq = {1, 1, 1, 1};
  Report rep = verify_poset(broken);
  CHECK_FALSE(rep.find("antisymmetric")->pass);
  CHECK(rep.find("antisymmetric")->witness.has_value());
}

TEST_CASE("random DAG closure yields a poset", "[ortholattice]") {
  Rng rng(515);
  const int n = 20;
  FiniteOrtholattice l;
  l.size = n;
  l.labels.assign(n, "x");
  l.leq.assign(n * n, 0);
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b)
      if (rng.uniform01() < 0.15) l.set_le(a, b);  // edges respect the index order: acyclic
  reflexive_transitive_closure(l);
  CHECK(verify_poset(l).all_pass());
}

TEST_CASE("meet and join on B3", "[ortholattice]") {
  FiniteOrtholattice b3 = boolean_lattice(3);
  int s1 = 1, s2 = 2;  // {1} and {2} as bitmasks
  CHECK(join(b3, s1, s2) == 3);  // {1,2}
  CHECK(meet(b3, s1, s2) == 0);  // empty set
  CHECK(verify_lattice(b3).all_pass());
}

TEST_CASE("join in the O6 benzene ring", "[ortholattice]") {
  FiniteOrtholattice o6 = o6_lattice();
  // a join (not b) = a join b' = 1
  CHECK(join(o6, 1, 3) == 5);
  CHECK(verify_lattice(o6).all_pass());
}

TEST_CASE("meet that does not exist raises", "[ortholattice]") {
  // two maximal elements over two minimal ones: no join of the minimals
  FiniteOrtholattice l = lattice_from_pairs(4, {{0, 2}, {0, 3}, {1, 2}, {1, 3}}, 0, 3);
  CHECK_FALSE(try_join(l, 0, 1).has_value());
  CHECK_THROWS_AS(join(l, 0, 1), NotLatticeError);
}

TEST_CASE("verify_orthocomplement", "[ortholattice]") {
  CHECK(verify_orthocomplement(boolean_lattice(3)).all_pass());
  // {0, x-axis, y-axis, R^2} with the orthogonal complement is MO1
  CHECK(verify_orthocomplement(mo_lattice(1)).all_pass());
  CHECK(verify_orthocomplement(o6_lattice()).all_pass());
}

TEST_CASE("bundled nonreversing witness fails exactly the order-reversal clause",
          "[ortholattice]") {
  auto witness = find_nonreversing_complement(6);
  REQUIRE(witness.has_value());
  Report rep = verify_orthocomplement(*witness);
  CHECK(rep.find("involutive")->pass);
  CHECK(rep.find("complement_law")->pass);
  CHECK_FALSE(rep.find("order_reversal")->pass);
  REQUIRE(rep.find("order_reversal")->witness.has_value());
  // the witness pair really violates reversal
  auto w = *rep.find("order_reversal")->witness;
  int a = int(w[0]), b = int(w[1]);
  const auto& c = *witness->complement;
  CHECK(witness->le(a, b) != witness->le(c[b], c[a]));
}

TEST_CASE("find_nonreversing_complement finds nothing below size 6", "[ortholattice]") {
  CHECK_FALSE(find_nonreversing_complement(2).has_value());
  CHECK_FALSE(find_nonreversing_complement(4).has_value());
  CHECK_FALSE(find_nonreversing_complement(5).has_value());
  CHECK(find_nonreversing_complement(6).has_value());
  CHECK_THROWS_AS(find_nonreversing_complement(9), std::invalid_argument);
}

TEST_CASE("verify_orthomodular", "[ortholattice]") {
  Report b3 = verify_orthomodular(boolean_lattice(3));
  CHECK(b3.find("orthomodular_law")->pass);
  CHECK(b3.find("orthocomplement_map_count")->max_residual == 1.0);
  CHECK(b3.find("orthocomplement_unique_up_to_automorphism")->pass);

  Report o6 = verify_orthomodular(o6_lattice());
  REQUIRE_FALSE(o6.find("orthomodular_law")->pass);
  auto w = *o6.find("orthomodular_law")->witness;
  // witness a <= b with a join (b meet not-a) = a != b
  FiniteOrtholattice l = o6_lattice();
  int a = int(w[0]), b = int(w[1]);
  CHECK(l.le(a, b));
  int reconstructed = join(l, a, meet(l, b, (*l.complement)[a]));
  CHECK(reconstructed == a);
  CHECK(reconstructed != b);

  Report mo2 = verify_orthomodular(mo_lattice(2));
  CHECK(mo2.find("orthomodular_law")->pass);
  // three pairings of the four atoms all work, one class under automorphisms
  CHECK(mo2.find("orthocomplement_map_count")->max_residual == 3.0);
  CHECK(mo2.find("orthocomplement_unique_up_to_automorphism")->pass);
}

TEST_CASE("atoms, atomisticity, covering", "[ortholattice]") {
  FiniteOrtholattice b3 = boolean_lattice(3);
  CHECK(atoms(b3) == std::vector<int>{1, 2, 4});
  CHECK(verify_atomistic(b3).all_pass());
  CHECK(verify_covering(b3).all_pass());

  FiniteOrtholattice mo2 = mo_lattice(2);
  CHECK(atoms(mo2).size() == 4);
  CHECK(verify_atomistic(mo2).all_pass());
  CHECK(verify_covering(mo2).all_pass());

  // chain 0 < m < 1: the only atom is m, and join(m) = m != 1
  FiniteOrtholattice chain = chain_lattice(3);
  CHECK(atoms(chain) == std::vector<int>{1});
  Report rep = verify_atomistic(chain);
  CHECK_FALSE(rep.all_pass());
  CHECK((*rep.find("atomistic")->witness)[0] == 2.0);
}

TEST_CASE("soler_family on Boolean lattices", "[ortholattice]") {
  FiniteOrtholattice b4 = boolean_lattice(4);
  // disjoint singletons reproduce themselves
  SolerFamily disjoint = soler_family(b4, {1, 2, 4, 8});
  CHECK(disjoint.elements == std::vector<int>{1, 2, 4, 8});
  CHECK(disjoint.nonzero == 4);
  CHECK(disjoint.report.all_pass());

  // overlapping {1,2} and {2,3} shrink to {1} and {3}
  SolerFamily overlap = soler_family(b4, {1 | 2, 2 | 4});
  CHECK(overlap.elements == std::vector<int>{1, 4});
  CHECK(overlap.report.all_pass());

  CHECK_THROWS_AS(soler_family(b4, {1, 1}), std::invalid_argument);
}

TEST_CASE("soler_family zero members are flagged", "[ortholattice]") {
  FiniteOrtholattice mo2 = mo_lattice(2);
  // two non-complementary atoms meet each other's complements at 0
  SolerFamily fam = soler_family(mo2, {1, 3});
  CHECK(fam.elements == std::vector<int>{0, 0});
  CHECK(fam.nonzero == 0);
  CHECK(fam.report.find("pairwise_orthogonal")->pass);
}

TEST_CASE("soler_family outputs stay orthogonal on every fixture", "[ortholattice]") {
  std::vector<FiniteOrtholattice> fixtures = {boolean_lattice(3), boolean_lattice(4),
                                              mo_lattice(2), mo_lattice(3), o6_lattice()};
  Rng rng(999);
  for (const auto& l : fixtures) {
    for (int trial = 0; trial < 40; ++trial) {
      int count = rng.uniform_int(1, std::min(4, l.size));
      std::vector<int> gens;
      while (static_cast<int>(gens.size()) < count) {
        int g = rng.uniform_int(0, l.size - 1);
        if (std::find(gens.begin(), gens.end(), g) == gens.end()) gens.push_back(g);
      }
      SolerFamily fam = soler_family(l, gens);
      CHECK(fam.report.find("pairwise_orthogonal")->pass);
    }
  }
}

TEST_CASE("extract_atom picks the smallest-index atom below", "[ortholattice]") {
  FiniteOrtholattice b4 = boolean_lattice(4);
  CHECK(extract_atom(b4, 1 | 2) == 1);     // {1,2} -> {1}
  CHECK(extract_atom(b4, 2 | 8) == 2);     // {2,4} -> {2}
  CHECK_FALSE(extract_atom(b4, 0).has_value());
  FiniteOrtholattice o6 = o6_lattice();
  CHECK(extract_atom(o6, 2) == 1);  // below b sits the atom a
}

TEST_CASE("De Morgan follows from order reversal", "[ortholattice]") {
  for (const auto& l : {boolean_lattice(3), mo_lattice(2), o6_lattice()}) {
    REQUIRE(verify_orthocomplement(l).all_pass());
    const auto& c = *l.complement;
    for (int a = 0; a < l.size; ++a)
      for (int b = 0; b < l.size; ++b)
        CHECK(c[join(l, a, b)] == meet(l, c[a], c[b]));
  }
}

TEST_CASE("is_distributive", "[ortholattice]") {
  CHECK(is_distributive(boolean_lattice(3)).first);
  auto [mo2_dist, mo2_w] = is_distributive(mo_lattice(2));
  CHECK_FALSE(mo2_dist);
  REQUIRE(mo2_w.has_value());
  auto [m3_dist, m3_w] = is_distributive(diamond_m3());
  CHECK_FALSE(m3_dist);
  auto [o6_dist, o6_w] = is_distributive(o6_lattice());
  CHECK_FALSE(o6_dist);
}

TEST_CASE("lattice JSON round trip", "[ortholattice]") {
  FiniteOrtholattice l = o6_lattice();
  FiniteOrtholattice back = lattice_from_json(lattice_to_json(l));
  CHECK(back.size == l.size);
  CHECK(back.leq == l.leq);
  CHECK(back.complement == l.complement);
  CHECK(back.bottom == l.bottom);
  CHECK(back.top == l.top);

  nlohmann::json bad = lattice_to_json(l);
  bad["complement"] = {0, 1};
  CHECK_THROWS_AS(lattice_from_json(bad), ParseError);
}

TEST_CASE("DOT export lists the covering edges", "[ortholattice]") {
  std::string dot = lattice_to_dot(o6_lattice());
  CHECK(dot.find("digraph hasse") != std::string::npos);
  CHECK(dot.find("n0 -> n1") != std::string::npos);  // 0 -> a
  CHECK(dot.find("n1 -> n2") != std::string::npos);  // a -> b
  CHECK(dot.find("n0 -> n2") == std::string::npos);  // transitive edge omitted
}
