#include "spintree/heisenberg.hpp"

#include "spintree/exact.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace spintree {

SpinConfiguration SpinConfiguration::unit(std::vector<Vec3> spins, double tol) {
  if (spins.empty()) throw std::invalid_argument("configuration needs N >= 1 spins");
  for (size_t i = 0; i < spins.size(); ++i) {
    double n = spins[i].norm();
    if (!(std::abs(n - 1.0) <= tol))
      throw std::invalid_argument("spin " + std::to_string(i + 1) +
                                  " has norm " + std::to_string(n) +
                                  ", outside tolerance " + std::to_string(tol));
    spins[i] = {spins[i].x / n, spins[i].y / n, spins[i].z / n};
  }
  return SpinConfiguration(std::move(spins));
}

SpinConfiguration SpinConfiguration::raw(std::vector<Vec3> spins) {
  if (spins.empty()) throw std::invalid_argument("configuration needs N >= 1 spins");
  return SpinConfiguration(std::move(spins));
}

double SpinConfiguration::max_norm_deviation() const {
  double worst = 0.0;
  for (const auto& v : s_) worst = std::max(worst, std::abs(v.norm() - 1.0));
  return worst;
}

CouplingMatrix::CouplingMatrix(int n) : n_(n) {
  if (n < 1) throw std::invalid_argument("coupling matrix needs n >= 1");
  j_.assign(static_cast<size_t>(n) * (n - 1) / 2, 0.0);
}

int CouplingMatrix::pair_index(int n, int mu, int nu) {
  if (mu > nu) std::swap(mu, nu);
  if (mu < 1 || nu > n || mu == nu)
    throw std::out_of_range("bad pair (" + std::to_string(mu) + "," +
                            std::to_string(nu) + ") for n=" + std::to_string(n));
  // pairs (1,2)..(1,n),(2,3)..: offset of row mu is sum_{k<mu}(n-k)
  int row_offset = (mu - 1) * n - mu * (mu - 1) / 2;
  return row_offset + (nu - mu - 1);
}

double CouplingMatrix::get(int mu, int nu) const {
  return j_[pair_index(n_, mu, nu)];
}

void CouplingMatrix::set(int mu, int nu, double val) {
  if (!std::isfinite(val)) throw std::invalid_argument("coupling must be finite");
  j_[pair_index(n_, mu, nu)] = val;
}

double evaluate_observable(const CouplingMatrix& e, const std::vector<Vec3>& spins) {
  if (e.n() != static_cast<int>(spins.size()))
    throw std::invalid_argument("observable/configuration dimension mismatch");
  double sum = 0.0;
  int k = 0;
  for (int mu = 1; mu <= e.n(); ++mu)
    for (int nu = mu + 1; nu <= e.n(); ++nu, ++k) {
      double c = e.packed()[k];
      if (c != 0.0) sum += c * dot(spins[mu - 1], spins[nu - 1]);
    }
  return sum;
}

double evaluate_observable(const CouplingMatrix& e, const SpinConfiguration& cfg) {
  return evaluate_observable(e, cfg.spins());
}

Vec3 total_spin(const SpinConfiguration& cfg, const std::vector<int>& subset) {
  if (subset.empty()) throw std::invalid_argument("total_spin: empty subset");
  Vec3 s;
  for (int mu : subset) {
    if (mu < 1 || mu > cfg.size())
      throw std::out_of_range("total_spin: index " + std::to_string(mu));
    s += cfg.spin(mu);
  }
  return s;
}

Vec3 total_spin(const SpinConfiguration& cfg) {
  Vec3 s;
  for (const auto& v : cfg.spins()) s += v;
  return s;
}

double total_energy(const CouplingMatrix& j, const FieldVector& b,
                    const SpinConfiguration& cfg) {
  return evaluate_observable(j, cfg) + dot(b, total_spin(cfg));
}

std::vector<TripleResidual> commutation_residuals(const CouplingMatrix& e,
                                                  const CouplingMatrix& f) {
  if (e.n() != f.n())
    throw std::invalid_argument("commutation_residuals: dimension mismatch");
  const int n = e.n();
  std::vector<TripleResidual> out;
  for (int mu = 1; mu <= n; ++mu)
    for (int nu = mu + 1; nu <= n; ++nu)
      for (int lam = nu + 1; lam <= n; ++lam) {
        double r = e.get(mu, nu) * (f.get(mu, lam) - f.get(nu, lam)) +
                   e.get(mu, lam) * (f.get(nu, lam) - f.get(mu, nu)) +
                   e.get(nu, lam) * (f.get(mu, nu) - f.get(mu, lam));
        out.push_back({mu, nu, lam, r});
      }
  return out;
}

bool commute_exactly(const CouplingMatrix& e, const CouplingMatrix& f) {
  if (e.n() != f.n())
    throw std::invalid_argument("commute_exactly: dimension mismatch");
  using exact::Rat;
  const int n = e.n();
  for (int mu = 1; mu <= n; ++mu)
    for (int nu = mu + 1; nu <= n; ++nu)
      for (int lam = nu + 1; lam <= n; ++lam) {
        Rat r = Rat(e.get(mu, nu)) * (Rat(f.get(mu, lam)) - Rat(f.get(nu, lam))) +
                Rat(e.get(mu, lam)) * (Rat(f.get(nu, lam)) - Rat(f.get(mu, nu))) +
                Rat(e.get(nu, lam)) * (Rat(f.get(mu, nu)) - Rat(f.get(mu, lam)));
        if (r != 0) return false;
      }
  return true;
}

int independence_rank(const std::vector<CouplingMatrix>& observables) {
  if (observables.empty()) return 0;
  const int n = observables.front().n();
  exact::RatMatrix m;
  for (const auto& e : observables) {
    if (e.n() != n)
      throw std::invalid_argument("independence_rank: dimension mismatch");
    std::vector<exact::Rat> row;
    row.reserve(e.packed().size());
    for (double v : e.packed()) row.emplace_back(v);
    m.push_back(std::move(row));
  }
  return exact::rank(std::move(m));
}

std::vector<Vec3> eom_rhs(const CouplingMatrix& j, const SpinConfiguration& cfg,
                          const FieldVector& field) {
  if (j.n() != cfg.size())
    throw std::invalid_argument("eom_rhs: dimension mismatch");
  const int n = j.n();
  std::vector<Vec3> h(n, field);
  int k = 0;
  for (int mu = 1; mu <= n; ++mu)
    for (int nu = mu + 1; nu <= n; ++nu, ++k) {
      double c = j.packed()[k];
      if (c != 0.0) {
        h[mu - 1] += c * cfg.spin(nu);
        h[nu - 1] += c * cfg.spin(mu);
      }
    }
  std::vector<Vec3> rhs(n);
  for (int mu = 0; mu < n; ++mu) rhs[mu] = cross(h[mu], cfg.spins()[mu]);
  return rhs;
}

double poisson_bracket_value(const CouplingMatrix& e, const CouplingMatrix& f,
                             const SpinConfiguration& cfg) {
  if (e.n() != f.n() || e.n() != cfg.size())
    throw std::invalid_argument("poisson_bracket_value: dimension mismatch");
  const int n = e.n();
  std::vector<Vec3> ge(n), gf(n);
  for (int mu = 1; mu <= n; ++mu)
    for (int nu = mu + 1; nu <= n; ++nu) {
      double ce = e.get(mu, nu), cf = f.get(mu, nu);
      if (ce != 0.0) {
        ge[mu - 1] += ce * cfg.spin(nu);
        ge[nu - 1] += ce * cfg.spin(mu);
      }
      if (cf != 0.0) {
        gf[mu - 1] += cf * cfg.spin(nu);
        gf[nu - 1] += cf * cfg.spin(mu);
      }
    }
  double sum = 0.0;
  for (int mu = 0; mu < n; ++mu)
    sum += dot(cfg.spins()[mu], cross(ge[mu], gf[mu]));
  return sum;
}

namespace {

exact::RatMatrix n4_difference_matrix(const CouplingMatrix& j) {
  using exact::Rat;
  auto J = [&](int a, int b) { return Rat(j.get(a, b)); };
  return {
      {J(1, 3) - J(2, 3), J(2, 3) - J(1, 2), Rat(0)},
      {J(1, 4) - J(2, 4), Rat(0), J(2, 4) - J(1, 2)},
      {Rat(0), J(1, 4) - J(3, 4), J(3, 4) - J(1, 3)},
  };
}

}  // namespace

bool is_integrable_n4(const CouplingMatrix& j) {
  if (j.n() != 4) throw std::invalid_argument("is_integrable_n4 needs n=4");
  return exact::determinant(n4_difference_matrix(j)) == 0;
}

double integrability_determinant_n4(const CouplingMatrix& j) {
  if (j.n() != 4) throw std::invalid_argument("needs n=4");
  return static_cast<double>(exact::determinant(n4_difference_matrix(j)));
}

}  // namespace spintree
