#pragma once

#include "spintree/vec3.hpp"

#include <vector>

namespace spintree {

// N unit spins.  All indices in the public API are 1-based, matching the
// usual physics convention for site labels.
class SpinConfiguration {
 public:
  // Validated constructor: rejects vectors whose norm deviates from 1 by more
  // than tol, then renormalizes exactly.  Default tolerance is the stored-
  // configuration invariant; file loaders pass a looser 1e-6.
  static SpinConfiguration unit(std::vector<Vec3> spins, double tol = 1e-12);

  // Unchecked: for integrator states whose norm drift is itself a diagnostic.
  static SpinConfiguration raw(std::vector<Vec3> spins);

  int size() const { return static_cast<int>(s_.size()); }
  const Vec3& spin(int mu) const { return s_[mu - 1]; }  // 1-based
  Vec3& spin(int mu) { return s_[mu - 1]; }
  const std::vector<Vec3>& spins() const { return s_; }
  std::vector<Vec3>& spins() { return s_; }

  // max_mu | |s_mu| - 1 |
  double max_norm_deviation() const;

 private:
  explicit SpinConfiguration(std::vector<Vec3> s) : s_(std::move(s)) {}
  std::vector<Vec3> s_;
};

// Symmetric coupling matrix with zero diagonal; stores the upper triangle.
// Doubles as a Heisenberg observable E (same structure).
class CouplingMatrix {
 public:
  CouplingMatrix() : n_(0) {}
  explicit CouplingMatrix(int n);

  int n() const { return n_; }
  int pair_count() const { return n_ * (n_ - 1) / 2; }

  double get(int mu, int nu) const;       // 1-based, mu != nu
  void set(int mu, int nu, double val);   // sets both (mu,nu) and (nu,mu)

  // Pairs enumerated (1,2),(1,3),...,(1,n),(2,3),...,(n-1,n); this fixes the
  // coordinate order used by rank/span computations.
  static int pair_index(int n, int mu, int nu);
  const std::vector<double>& packed() const { return j_; }
  std::vector<double>& packed() { return j_; }

  bool operator==(const CouplingMatrix& o) const {
    return n_ == o.n_ && j_ == o.j_;
  }

 private:
  int n_;
  std::vector<double> j_;  // upper triangle, pair_index order
};

using FieldVector = Vec3;

// H(s) = sum_{mu<nu} E_{mu nu} s_mu . s_nu.  The vector overload accepts
// arbitrary (not necessarily unit) spins, which finite-difference tests rely
// on: the observable is a polynomial on all of R^{3N}.
double evaluate_observable(const CouplingMatrix& e, const std::vector<Vec3>& spins);
double evaluate_observable(const CouplingMatrix& e, const SpinConfiguration& cfg);

// S_A = sum_{mu in A} s_mu (1-based indices in subset).
Vec3 total_spin(const SpinConfiguration& cfg, const std::vector<int>& subset);
Vec3 total_spin(const SpinConfiguration& cfg);  // full set

// Total energy including the Zeeman term B.S.
double total_energy(const CouplingMatrix& j, const FieldVector& b,
                    const SpinConfiguration& cfg);

struct TripleResidual {
  int mu, nu, lam;  // mu < nu < lam
  double value;
};

// Residual of the commutation condition per vertex triple:
//   E_{mn}(F_{ml}-F_{nl}) + E_{ml}(F_{nl}-F_{mn}) + E_{nl}(F_{mn}-F_{ml}).
// {E,F} vanishes identically iff all residuals are zero.  Empty for n < 3.
std::vector<TripleResidual> commutation_residuals(const CouplingMatrix& e,
                                                  const CouplingMatrix& f);

// Same condition decided in exact rational arithmetic (doubles are dyadic).
bool commute_exactly(const CouplingMatrix& e, const CouplingMatrix& f);

// Rank of the observables viewed as vectors of length n(n-1)/2, exact.
int independence_rank(const std::vector<CouplingMatrix>& observables);

// ds_mu/dt = h_mu x s_mu with h_mu = sum_nu J_{mu nu} s_nu + B.
std::vector<Vec3> eom_rhs(const CouplingMatrix& j, const SpinConfiguration& cfg,
                          const FieldVector& field);

// Value of the Poisson bracket {E,F} at cfg via the analytic gradients:
//   {E,F}(s) = sum_mu s_mu . (g_mu(E) x g_mu(F)),  g_mu(E) = sum_nu E_{mu nu} s_nu.
// Independent of the residual path; used as the numerical oracle.
double poisson_bracket_value(const CouplingMatrix& e, const CouplingMatrix& f,
                             const SpinConfiguration& cfg);

// N=4 determinant criterion.  The 3x3 matrix of coupling differences has rows
//   (J13-J23, J23-J12, 0), (J14-J24, 0, J24-J12), (0, J14-J34, J34-J13);
// the system is H-integrable iff its determinant vanishes.  Exact.
bool is_integrable_n4(const CouplingMatrix& j);
double integrability_determinant_n4(const CouplingMatrix& j);

}  // namespace spintree
