#pragma once

#include "spintree/exact.hpp"
#include "spintree/heisenberg.hpp"
#include "spintree/partition_tree.hpp"

#include <string>
#include <vector>

namespace spintree {

// Coefficient rows of the linear commutation system for fixed E: one row per
// vertex triple (lexicographic), one column per pair (pair_index order).  An
// observable F commutes with E iff it lies in the nullspace.
exact::RatMatrix commutation_system(const CouplingMatrix& e);

struct ComReport {
  // Nullspace basis of the commutation system for H, each element scaled so
  // its first nonzero entry is +1, ordered by the free column it solves for.
  std::vector<CouplingMatrix> basis;
  int system_rank = 0;
  // Explicit commuting family when the couplings form a tree system (empty
  // otherwise), with its pairwise exact-commutation table.
  std::vector<CouplingMatrix> selected_family;
  std::vector<std::vector<bool>> pairwise_commuting;
};

// Full solution space of observables commuting with H, computed exactly.
ComReport solve_commutant(const CouplingMatrix& j);

// The per-internal-node cross patterns of the system's tree.
std::vector<CouplingMatrix> commuting_family_for_tree(const BJSystem& sys);

struct FamilyFailure {
  enum class Check { kCommutesWithH, kPairCommutes, kIndependence };
  Check check;
  int a = -1, b = -1;  // family indices; b unused for kCommutesWithH
  std::vector<TripleResidual> residuals;  // offending triples
};

struct FamilyReport {
  bool ok = true;
  int rank = 0;
  std::vector<FamilyFailure> failures;
};

// Checks that every member commutes with H, all pairs commute, and the family
// is linearly independent.  Residuals beyond tol are reported as witnesses.
FamilyReport verify_family(const std::vector<CouplingMatrix>& family,
                           const CouplingMatrix& j, double tol = 1e-10);

enum class FamilySearchStatus { kFound, kNone, kNotAttempted };

struct FamilySearchResult {
  FamilySearchStatus status = FamilySearchStatus::kNotAttempted;
  std::vector<CouplingMatrix> family;  // populated when status == kFound
  int commutant_dimension = 0;
  std::string note;
};

// Decide whether the commutant of H contains N-1 independent pairwise
// commuting observables.  Tree systems use the explicit construction, and
// commutant dimension d < N-1 certifies non-existence outright.  Otherwise,
// for d <= 8 and N <= 5, the commutation pairings restricted to the nullspace
// decide most cases exactly: an abelian commutant or a center of dimension
// >= N-2 yields a family, d == N-1 without commutativity rules one out, and
// a 3-dimensional center quotient is settled by the span of the pairing
// kernels.  Cases the certificates cannot settle report kNotAttempted.
FamilySearchResult search_commuting_family(const CouplingMatrix& j);

}  // namespace spintree
