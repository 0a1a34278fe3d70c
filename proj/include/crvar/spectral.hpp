#pragma once

#include <map>
#include <utility>

#include "crvar/poly.hpp"

namespace crvar {

using Bidegree = std::pair<int, int>;

/// f = sum over (p,q) of restrictions of ambient harmonic polynomials.
struct HarmonicDecomposition {
  int dimension = 1;
  /// Restricted components, normal form.
  std::map<Bidegree, SpherePoly> components;
  /// The bihomogeneous ambient harmonic representative of each component.
  std::map<Bidegree, Poly> ambient;
};

/// Ambient operator sum_j d^2/dz_j dzbar_j.
Poly ambient_laplacian(const Poly& p);

HarmonicDecomposition harmonic_decompose(const SpherePoly& f);

/// pq + n(p+q)/2
Rational eigenvalue(int p, int q, int n);

/// -sum lambda_{p,q,n} f_{p,q}
SpherePoly sublaplacian(const SpherePoly& f);

/// 2 sum lambda_{p,q,n} ||f_{p,q}||^2 (probability measure). Requires real f.
Rational dirichlet_energy(const SpherePoly& f);

/// Dirichlet energy calibration constant.
inline constexpr int kEnergyCalibration = 2;

}  // namespace crvar
