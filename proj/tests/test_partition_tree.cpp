#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "spintree/partition_tree.hpp"
#include "spintree/random.hpp"

#include <cmath>

using namespace spintree;

namespace {

const std::vector<std::vector<int>> kSquareSets = {
    {1}, {2}, {3}, {4}, {1, 3}, {2, 4}, {1, 2, 3, 4}};

// Caterpillar tree on five sites: ((1,3)+2)+5, then +4.
const std::vector<std::vector<int>> kFiveSets = {
    {1}, {2}, {3}, {4}, {5}, {1, 3}, {1, 2, 3}, {1, 2, 3, 5}, {1, 2, 3, 4, 5}};

}  // namespace

TEST_CASE("validate_family: accepts partition trees") {
  CHECK(validate_family(4, kSquareSets).ok);
  CHECK(validate_family(5, kFiveSets).ok);
  CHECK(validate_family(1, {{1}}).ok);
  CHECK(validate_family(2, {{1}, {2}, {1, 2}}).ok);
  // Duplicates collapse; unsorted members are fine.
  CHECK(validate_family(2, {{2, 1}, {1}, {2}, {1}}).ok);
}

TEST_CASE("validate_family: reports the first violated clause") {
  auto c = validate_family(3, {{1}, {2}, {3}, {1, 2}});  // no root
  CHECK(!c.ok);
  CHECK(c.clause == 1);

  c = validate_family(3, {{1}, {2}, {3}, {}, {1, 2, 3}});  // empty set
  CHECK(!c.ok);
  CHECK(c.clause == 1);

  c = validate_family(2, {{1}, {2}, {3}, {1, 2}});  // label out of range
  CHECK(!c.ok);
  CHECK(c.clause == 1);

  // {1,2} and {2,3} overlap without nesting.
  c = validate_family(3, {{1}, {2}, {3}, {1, 2}, {2, 3}, {1, 2, 3}});
  CHECK(!c.ok);
  CHECK(c.clause == 2);

  // Root would need three children {1,2},{3},{4}.
  c = validate_family(4, {{1}, {2}, {3}, {4}, {1, 2}, {1, 2, 3, 4}});
  CHECK(!c.ok);
  CHECK(c.clause == 3);
  CHECK(c.message.find("{1,2,3,4}") != std::string::npos);
}

TEST_CASE("from_sets: canonical node order and links") {
  PartitionTree t = PartitionTree::from_sets(4, kSquareSets);
  REQUIRE(t.node_count() == 7);
  CHECK(t.n() == 4);
  // Singletons first in label order, then by (size, lexicographic members).
  CHECK(t.node(0).members == std::vector<int>{1});
  CHECK(t.node(3).members == std::vector<int>{4});
  CHECK(t.node(4).members == std::vector<int>{1, 3});
  CHECK(t.node(5).members == std::vector<int>{2, 4});
  CHECK(t.node(6).members == std::vector<int>{1, 2, 3, 4});
  CHECK(t.root() == 6);
  CHECK(t.leaf(3) == 2);
  CHECK(t.internal_nodes() == std::vector<int>{4, 5, 6});

  CHECK(t.node(6).parent == -1);
  CHECK(t.node(6).child1 == 4);  // {1,3} has the smaller minimum
  CHECK(t.node(6).child2 == 5);
  CHECK(t.node(4).parent == 6);
  CHECK(t.node(4).child1 == 0);
  CHECK(t.node(4).child2 == 2);
  CHECK(t.node(0).parent == 4);
  CHECK(t.is_leaf(0));
  CHECK(!t.is_leaf(4));

  CHECK(t.find({3, 1}) == 4);
  CHECK(!t.find({1, 2}).has_value());

  CHECK_THROWS(PartitionTree::from_sets(3, {{1}, {2}, {3}}));
}

TEST_CASE("meet and construction paths") {
  PartitionTree t = PartitionTree::from_sets(4, kSquareSets);
  CHECK(t.meet(1, 3) == 4);
  CHECK(t.meet(3, 1) == 4);
  CHECK(t.meet(2, 4) == 5);
  CHECK(t.meet(1, 2) == 6);
  CHECK(t.meet(3, 4) == 6);
  CHECK(t.meet(1, 1) == 0);  // meet of a site with itself is its leaf
  CHECK(t.construction_path(1) == std::vector<int>{6, 4, 0});
  CHECK(t.construction_path(2) == std::vector<int>{6, 5, 1});

  PartitionTree c = PartitionTree::from_sets(5, kFiveSets);
  CHECK(c.node(5).members == std::vector<int>{1, 3});
  CHECK(c.node(6).members == std::vector<int>{1, 2, 3});
  CHECK(c.node(7).members == std::vector<int>{1, 2, 3, 5});
  CHECK(c.meet(2, 3) == 6);
  CHECK(c.meet(3, 5) == 7);
  CHECK(c.meet(4, 5) == 8);
  CHECK(c.construction_path(3) == std::vector<int>{8, 7, 6, 5, 2});
}

TEST_CASE("BJSystem validation and step coefficients") {
  PartitionTree t = PartitionTree::from_sets(2, {{1}, {2}, {1, 2}});
  CHECK_THROWS(BJSystem::make(t, {0.0, 0.0}));            // wrong size
  CHECK_THROWS(BJSystem::make(t, {0.5, 0.0, 1.0}));       // nonzero leaf
  BJSystem sys = BJSystem::make(t, {0.0, 0.0, 2.5});
  CHECK(sys.coupling_of(2) == 2.5);
  CHECK(sys.step_coefficient(2) == 2.5);        // root: J - 0
  CHECK(sys.step_coefficient(0) == -2.5);       // leaf under the root
}

TEST_CASE("hamiltonian_couplings reproduces the meet rule") {
  PartitionTree t = PartitionTree::from_sets(4, kSquareSets);
  BJSystem sys = BJSystem::make(t, {0, 0, 0, 0, 0, 0, 1.0});
  CouplingMatrix j = hamiltonian_couplings(sys);
  CHECK(j.get(1, 2) == 1.0);
  CHECK(j.get(1, 3) == 0.0);
  CHECK(j.get(1, 4) == 1.0);
  CHECK(j.get(2, 3) == 1.0);
  CHECK(j.get(2, 4) == 0.0);
  CHECK(j.get(3, 4) == 1.0);

  // Distinct values on every node: J_{mu nu} picks out exactly the meet.
  BJSystem wsys = BJSystem::make(t, {0, 0, 0, 0, -1.5, 0.25, 4.0});
  CouplingMatrix w = hamiltonian_couplings(wsys);
  CHECK(w.get(1, 3) == -1.5);
  CHECK(w.get(2, 4) == 0.25);
  CHECK(w.get(1, 4) == 4.0);
}

TEST_CASE("casimir form: dimer closed form") {
  PartitionTree t = PartitionTree::from_sets(2, {{1}, {2}, {1, 2}});
  BJSystem sys = BJSystem::make(t, {0.0, 0.0, 1.0});
  CasimirForm form = casimir_form(sys);
  // H = 1/2 |S|^2 - 1 for a unit-coupled dimer.
  CHECK(form.coeff[2] == 1.0);
  CHECK(form.coeff[0] == -1.0);
  CHECK(form.constant == -1.0);

  auto parallel = SpinConfiguration::unit({{0, 0, 1}, {0, 0, 1}});
  auto anti = SpinConfiguration::unit({{0, 0, 1}, {0, 0, -1}});
  auto ortho = SpinConfiguration::unit({{0, 0, 1}, {1, 0, 0}});
  CHECK(casimir_energy(form, t, parallel) == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(casimir_energy(form, t, anti) == doctest::Approx(-1.0).epsilon(1e-12));
  CHECK(casimir_energy(form, t, ortho) == doctest::Approx(0.0).epsilon(1e-12));
}

TEST_CASE("casimir form matches the pairwise Hamiltonian") {
  Rng rng(20240514);
  for (const auto& [n, sets] :
       {std::pair<int, std::vector<std::vector<int>>>{4, kSquareSets},
        {5, kFiveSets}}) {
    PartitionTree t = PartitionTree::from_sets(n, sets);
    std::vector<double> j(t.node_count(), 0.0);
    for (int idx : t.internal_nodes()) j[idx] = 2.0 * rng.uniform() - 1.0;
    BJSystem sys = BJSystem::make(t, j);
    CasimirForm form = casimir_form(sys);
    CouplingMatrix couplings = hamiltonian_couplings(sys);
    for (int rep = 0; rep < 10; ++rep) {
      SpinConfiguration cfg = random_configuration(n, rng);
      double direct = evaluate_observable(couplings, cfg);
      double viacasimir = casimir_energy(form, t, cfg);
      CHECK(std::abs(direct - viacasimir) < 1e-12);
    }
  }
}

TEST_CASE("commuting family: frozen square patterns") {
  PartitionTree t = PartitionTree::from_sets(4, kSquareSets);
  auto family = commuting_family_for_tree(t);
  REQUIRE(family.size() == 3);
  // {1,3}: the single pair (1,3).
  CHECK(family[0].get(1, 3) == 1.0);
  CHECK(family[0].get(1, 2) == 0.0);
  CHECK(family[0].get(2, 4) == 0.0);
  // {2,4}: the single pair (2,4).
  CHECK(family[1].get(2, 4) == 1.0);
  CHECK(family[1].get(1, 3) == 0.0);
  // Root: cross pairs between {1,3} and {2,4}.
  CHECK(family[2].get(1, 2) == 1.0);
  CHECK(family[2].get(1, 4) == 1.0);
  CHECK(family[2].get(2, 3) == 1.0);
  CHECK(family[2].get(3, 4) == 1.0);
  CHECK(family[2].get(1, 3) == 0.0);
  CHECK(family[2].get(2, 4) == 0.0);

  for (std::size_t a = 0; a < family.size(); ++a)
    for (std::size_t b = a + 1; b < family.size(); ++b)
      CHECK(commute_exactly(family[a], family[b]));
  CHECK(independence_rank(family) == 3);
}

TEST_CASE("commuting family: conserved under the tree Hamiltonian") {
  Rng rng(977001);
  PartitionTree t = PartitionTree::from_sets(5, kFiveSets);
  auto family = commuting_family_for_tree(t);
  REQUIRE(family.size() == 4);
  CHECK(independence_rank(family) == 4);

  std::vector<double> j(t.node_count(), 0.0);
  for (int idx : t.internal_nodes()) j[idx] = 2.0 * rng.uniform() - 1.0;
  BJSystem sys = BJSystem::make(t, j);
  CouplingMatrix h = hamiltonian_couplings(sys);

  for (const auto& e : family) {
    // Exact commutation with each other and (numerically) with H.
    for (const auto& f : family) CHECK(commute_exactly(e, f));
    for (int rep = 0; rep < 5; ++rep) {
      SpinConfiguration cfg = random_configuration(5, rng);
      CHECK(std::abs(poisson_bracket_value(e, h, cfg)) < 1e-10);
    }
  }

  // The family elements are Casimir differences: E_M relates |S_M|^2 to the
  // children via |S_M|^2 = |S_M1|^2 + |S_M2|^2 + 2 E_M(s).
  Rng rng2(41);
  SpinConfiguration cfg = random_configuration(5, rng2);
  int node = 7;  // {1,2,3,5} = {1,2,3} + {5}
  const auto& nd = t.node(node);
  double lhs = total_spin(cfg, t.node(node).members).norm2();
  double rhs = total_spin(cfg, t.node(nd.child1).members).norm2() +
               total_spin(cfg, t.node(nd.child2).members).norm2() +
               2.0 * evaluate_observable(family[2], cfg);
  CHECK(lhs == doctest::Approx(rhs).epsilon(1e-12));
}
