#include "spintree/com_solver.hpp"

#include "spintree/spin_graph.hpp"

#include <algorithm>
#include <cstdint>
#include <sstream>
#include <stdexcept>

namespace spintree {

namespace {

using exact::Rat;
using exact::RatMatrix;

struct Triple {
  int mu, nu, lam;
};

std::vector<Triple> all_triples(int n) {
  std::vector<Triple> out;
  for (int mu = 1; mu <= n; ++mu)
    for (int nu = mu + 1; nu <= n; ++nu)
      for (int lam = nu + 1; lam <= n; ++lam) out.push_back({mu, nu, lam});
  return out;
}

// Exact commutation pairing of two packed observables, per triple:
//   x_mn (y_ml - y_nl) + x_ml (y_nl - y_mn) + x_nl (y_mn - y_ml).
Rat pairing(const std::vector<Rat>& x, const std::vector<Rat>& y, int n,
            const Triple& t) {
  int mn = CouplingMatrix::pair_index(n, t.mu, t.nu);
  int ml = CouplingMatrix::pair_index(n, t.mu, t.lam);
  int nl = CouplingMatrix::pair_index(n, t.nu, t.lam);
  return x[mn] * (y[ml] - y[nl]) + x[ml] * (y[nl] - y[mn]) +
         x[nl] * (y[mn] - y[ml]);
}

CouplingMatrix matrix_from_rat(int n, const std::vector<Rat>& v) {
  CouplingMatrix e(n);
  for (std::size_t q = 0; q < v.size(); ++q)
    e.packed()[q] = static_cast<double>(v[q]);
  return e;
}

void normalize_first_nonzero(std::vector<Rat>& v) {
  for (const Rat& x : v)
    if (x != 0) {
      Rat scale = x;
      for (Rat& y : v) y /= scale;
      return;
    }
}

std::vector<std::vector<Rat>> commutant_basis_rat(const CouplingMatrix& j) {
  auto basis = exact::nullspace(commutation_system(j), j.pair_count());
  for (auto& v : basis) normalize_first_nonzero(v);
  return basis;
}

}  // namespace

RatMatrix commutation_system(const CouplingMatrix& e) {
  int n = e.n();
  RatMatrix rows;
  for (const Triple& t : all_triples(n)) {
    std::vector<Rat> row(e.pair_count(), Rat(0));
    Rat emn = exact::rat(e.get(t.mu, t.nu));
    Rat eml = exact::rat(e.get(t.mu, t.lam));
    Rat enl = exact::rat(e.get(t.nu, t.lam));
    row[CouplingMatrix::pair_index(n, t.mu, t.nu)] = enl - eml;
    row[CouplingMatrix::pair_index(n, t.mu, t.lam)] = emn - enl;
    row[CouplingMatrix::pair_index(n, t.nu, t.lam)] = eml - emn;
    rows.push_back(std::move(row));
  }
  return rows;
}

ComReport solve_commutant(const CouplingMatrix& j) {
  if (j.n() < 2)
    throw std::invalid_argument("commutant solve needs at least two sites");
  ComReport report;
  report.system_rank = exact::rank(commutation_system(j));
  for (const auto& v : commutant_basis_rat(j))
    report.basis.push_back(matrix_from_rat(j.n(), v));

  if (auto sys = decompose_couplings(j)) {
    report.selected_family = commuting_family_for_tree(sys->tree);
    std::size_t k = report.selected_family.size();
    report.pairwise_commuting.assign(k, std::vector<bool>(k, false));
    for (std::size_t a = 0; a < k; ++a)
      for (std::size_t b = 0; b < k; ++b)
        report.pairwise_commuting[a][b] = commute_exactly(
            report.selected_family[a], report.selected_family[b]);
  }
  return report;
}

std::vector<CouplingMatrix> commuting_family_for_tree(const BJSystem& sys) {
  return commuting_family_for_tree(sys.tree);
}

FamilyReport verify_family(const std::vector<CouplingMatrix>& family,
                           const CouplingMatrix& j, double tol) {
  for (const auto& e : family)
    if (e.n() != j.n())
      throw std::invalid_argument("family and coupling dimensions differ");

  FamilyReport report;
  auto offending = [tol](const CouplingMatrix& a, const CouplingMatrix& b) {
    std::vector<TripleResidual> bad;
    for (const auto& r : commutation_residuals(a, b))
      if (std::abs(r.value) > tol) bad.push_back(r);
    return bad;
  };

  for (std::size_t a = 0; a < family.size(); ++a) {
    auto bad = offending(family[a], j);
    if (!bad.empty()) {
      report.ok = false;
      report.failures.push_back({FamilyFailure::Check::kCommutesWithH,
                                 static_cast<int>(a), -1, std::move(bad)});
    }
  }
  for (std::size_t a = 0; a < family.size(); ++a)
    for (std::size_t b = a + 1; b < family.size(); ++b) {
      auto bad = offending(family[a], family[b]);
      if (!bad.empty()) {
        report.ok = false;
        report.failures.push_back({FamilyFailure::Check::kPairCommutes,
                                   static_cast<int>(a), static_cast<int>(b),
                                   std::move(bad)});
      }
    }
  report.rank = independence_rank(family);
  if (report.rank != static_cast<int>(family.size())) {
    report.ok = false;
    report.failures.push_back(
        {FamilyFailure::Check::kIndependence, -1, -1, {}});
  }
  return report;
}

FamilySearchResult search_commuting_family(const CouplingMatrix& j) {
  const int n = j.n();
  const int target = n - 1;
  FamilySearchResult result;

  if (auto sys = decompose_couplings(j)) {
    result.status = FamilySearchStatus::kFound;
    result.family = commuting_family_for_tree(sys->tree);
    auto basis = commutant_basis_rat(j);
    result.commutant_dimension = static_cast<int>(basis.size());
    result.note = "tree construction";
    return result;
  }

  auto basis = commutant_basis_rat(j);
  const int d = static_cast<int>(basis.size());
  result.commutant_dimension = d;
  if (d < target) {
    result.status = FamilySearchStatus::kNone;
    result.note = "commutant dimension " + std::to_string(d) +
                  " is below N-1 = " + std::to_string(target);
    return result;
  }

  // Commutation pairings restricted to the nullspace: one antisymmetric
  // d x d form per vertex triple.
  auto triples = all_triples(n);
  std::vector<RatMatrix> forms;
  bool all_zero = true;
  for (const Triple& t : triples) {
    RatMatrix form(d, std::vector<Rat>(d, Rat(0)));
    for (int a = 0; a < d; ++a)
      for (int b = a + 1; b < d; ++b) {
        form[a][b] = pairing(basis[a], basis[b], n, t);
        form[b][a] = -form[a][b];
        if (form[a][b] != 0) all_zero = false;
      }
    forms.push_back(std::move(form));
  }
  if (all_zero) {
    result.status = FamilySearchStatus::kFound;
    for (int a = 0; a < target; ++a)
      result.family.push_back(matrix_from_rat(n, basis[a]));
    result.note = "commutant is abelian";
    return result;
  }
  if (d == target) {
    // The family would have to be the whole commutant, which is not abelian.
    result.status = FamilySearchStatus::kNone;
    result.note = "commutant dimension equals N-1 but is not abelian";
    return result;
  }

  if (d > 8 || n > 5) {
    result.status = FamilySearchStatus::kNotAttempted;
    result.note = "outside search bounds (d <= 8, N <= 5)";
    return result;
  }

  // Center of the commutant: vectors pairing to zero with the whole basis.
  RatMatrix center_rows;
  for (const auto& form : forms)
    for (int b = 0; b < d; ++b) {
      std::vector<Rat> row(d);
      for (int a = 0; a < d; ++a) row[a] = form[a][b];
      center_rows.push_back(std::move(row));
    }
  auto center = exact::nullspace(center_rows, d);
  const int z = static_cast<int>(center.size());

  // Coordinate vectors (in nullspace coordinates) -> observables.
  auto emit_family = [&](const std::vector<std::vector<Rat>>& coords) {
    for (const auto& c : coords) {
      std::vector<Rat> v(j.pair_count(), Rat(0));
      for (int a = 0; a < d; ++a)
        for (int q = 0; q < j.pair_count(); ++q) v[q] += c[a] * basis[a][q];
      normalize_first_nonzero(v);
      result.family.push_back(matrix_from_rat(n, v));
    }
  };
  auto unit_coord = [&](int idx) {
    std::vector<Rat> e(d, Rat(0));
    e[idx] = 1;
    return e;
  };

  if (z >= target) {
    result.status = FamilySearchStatus::kFound;
    emit_family({center.begin(), center.begin() + target});
    result.note = "center of the commutant has dimension " + std::to_string(z);
    return result;
  }

  // Any maximal commuting subspace contains the center, and the center plus
  // one arbitrary extra direction still commutes, so z = N-2 suffices.
  if (z == target - 1) {
    for (int idx = 0; idx < d; ++idx) {
      RatMatrix stacked = center;
      stacked.push_back(unit_coord(idx));
      if (exact::rank(stacked) == z + 1) {
        result.status = FamilySearchStatus::kFound;
        emit_family(stacked);
        result.note = "center of dimension " + std::to_string(z) +
                      " plus one extra direction";
        return result;
      }
    }
  }

  // Quotient by the center (it lies in the radical of every pairing): with a
  // 3-dimensional quotient and two more dimensions needed, a commuting plane
  // exists iff the kernels of the nonzero quotient pairings span at most a
  // plane, since each nonzero antisymmetric form on 3 dimensions has rank 2
  // and a plane is isotropic for it exactly when the kernel lies inside.
  if (d - z == 3 && target - z == 2) {
    // Complement coordinates: the free columns of the center's echelon form.
    std::vector<int> free_cols;
    {
      RatMatrix m = center;
      std::vector<char> is_pivot(d, 0);
      int row = 0;
      for (int col = 0; col < d && row < z; ++col) {
        int pivot = -1;
        for (int r = row; r < z; ++r)
          if (m[r][col] != 0) {
            pivot = r;
            break;
          }
        if (pivot < 0) continue;
        std::swap(m[row], m[pivot]);
        for (int r = 0; r < z; ++r) {
          if (r == row || m[r][col] == 0) continue;
          Rat f = m[r][col] / m[row][col];
          for (int cc = 0; cc < d; ++cc) m[r][cc] -= f * m[row][cc];
        }
        is_pivot[col] = 1;
        ++row;
      }
      for (int col = 0; col < d; ++col)
        if (!is_pivot[col]) free_cols.push_back(col);
    }
    RatMatrix kernels;
    for (const auto& form : forms) {
      RatMatrix q(3, std::vector<Rat>(3));
      bool nonzero = false;
      for (int a = 0; a < 3; ++a)
        for (int b = 0; b < 3; ++b) {
          q[a][b] = form[free_cols[a]][free_cols[b]];
          if (q[a][b] != 0) nonzero = true;
        }
      if (!nonzero) continue;
      auto kern = exact::nullspace(q, 3);
      for (auto& k : kern) kernels.push_back(std::move(k));
    }
    if (exact::rank(kernels) <= 2) {
      // Assemble a plane containing every kernel, extending if they share a
      // line; lift through the free coordinates and append the center.
      RatMatrix plane;
      for (const auto& k : kernels) {
        RatMatrix stacked = plane;
        stacked.push_back(k);
        if (exact::rank(stacked) > static_cast<int>(plane.size()))
          plane.push_back(k);
        if (plane.size() == 2) break;
      }
      for (int idx = 0; idx < 3 && plane.size() < 2; ++idx) {
        std::vector<Rat> e(3, Rat(0));
        e[idx] = 1;
        RatMatrix stacked = plane;
        stacked.push_back(e);
        if (exact::rank(stacked) > static_cast<int>(plane.size()))
          plane.push_back(e);
      }
      RatMatrix coords = center;
      for (const auto& p : plane) {
        std::vector<Rat> v(d, Rat(0));
        for (int a = 0; a < 3; ++a) v[free_cols[a]] = p[a];
        coords.push_back(std::move(v));
      }
      result.status = FamilySearchStatus::kFound;
      emit_family(coords);
      result.note = "center plus an isotropic plane in the 3-dimensional quotient";
      return result;
    }
    result.status = FamilySearchStatus::kNone;
    result.note = "quotient pairing kernels span the whole 3-dimensional "
                  "quotient; no commuting plane exists";
    return result;
  }

  result.status = FamilySearchStatus::kNotAttempted;
  std::ostringstream note;
  note << "certificates inconclusive: dimension " << d << ", center dimension "
       << z;
  result.note = note.str();
  return result;
}

}  // namespace spintree
