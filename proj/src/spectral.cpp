#include "crvar/spectral.hpp"

#include "crvar/error.hpp"

namespace crvar {

Poly ambient_laplacian(const Poly& p) {
  Poly r(p.dimension());
  for (int j = 0; j <= p.dimension(); ++j) r += p.d_z(j).d_zbar(j);
  return r;
}

HarmonicDecomposition harmonic_decompose(const SpherePoly& f) {
  const int n = f.dimension();
  const int N = n + 1;
  std::map<Bidegree, Poly> groups;
  for (const auto& [m, c] : f.terms())
    groups.try_emplace({m.holo_degree(), m.anti_degree()}, n).first->second.add_term(m, c);

  HarmonicDecomposition out;
  out.dimension = n;
  const Poly r = Poly::radius_squared(n);
  for (auto& [bideg, part] : groups) {
    auto [p, q] = bideg;
    Poly rest = part;
    for (int k = std::min(p, q); k >= 0; --k) {
      Poly h = rest;
      for (int i = 0; i < k; ++i) h = ambient_laplacian(h);
      const int s = N + p + q - 2 * k;
      Rational denom = 1;
      for (int i = 1; i <= k; ++i) denom *= Rational(i * (s + i - 1));
      h *= ExactScalar(Rational(1) / denom);
      if (h.is_zero()) continue;
      Poly rk(n, 1);
      for (int i = 0; i < k; ++i) rk = rk * r;
      rest -= rk * h;
      out.ambient.try_emplace({p - k, q - k}, n).first->second += h;
    }
    if (!rest.is_zero()) throw Error("harmonic_decompose: internal residue");
  }
  for (auto it = out.ambient.begin(); it != out.ambient.end();) {
    if (it->second.is_zero()) {
      it = out.ambient.erase(it);
      continue;
    }
    out.components.emplace(it->first, normal_form(it->second));
    ++it;
  }
  return out;
}

Rational eigenvalue(int p, int q, int n) {
  Rational v = Rational(p * q) + Rational(n * (p + q), 2);
  v.canonicalize();
  return v;
}

SpherePoly sublaplacian(const SpherePoly& f) {
  const int n = f.dimension();
  SpherePoly out(n);
  for (const auto& [bd, comp] : harmonic_decompose(f).components)
    out -= comp * ExactScalar(eigenvalue(bd.first, bd.second, n));
  return out;
}

Rational dirichlet_energy(const SpherePoly& f) {
  if (!f.is_real()) throw Error("dirichlet_energy: input must be real-valued");
  const int n = f.dimension();
  Rational e = 0;
  for (const auto& [bd, comp] : harmonic_decompose(f).components)
    e += eigenvalue(bd.first, bd.second, n) * l2_norm_squared(comp);
  return kEnergyCalibration * e;
}

}  // namespace crvar
