#pragma once

#include <compare>
#include <functional>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "crvar/poly.hpp"

namespace crvar {

/// Index pair (j, k), 0-based, j < k, of a Geller field Z_jk or form theta_jk.
using GellerPair = std::pair<int, int>;

/// All Geller pairs for S^{2n+1}, lexicographic.
std::vector<GellerPair> geller_pairs(int n);

enum class FrameKind { Reeb, Geller, GellerBar };

struct FrameIndex {
  FrameKind kind = FrameKind::Reeb;
  GellerPair pair{0, 0};
  auto operator<=>(const FrameIndex&) const = default;
  /// "T", "Z12", "Zb12" (1-based labels).
  std::string label() const;
};

/// Complex vector field on the sphere written in ambient coordinates,
/// sum_a v_a d/dz_a + w_a d/dzbar_a.
class FrameVector {
 public:
  FrameVector() = default;
  explicit FrameVector(int n);
  FrameVector(int n, std::vector<SpherePoly> holo, std::vector<SpherePoly> anti);

  /// T = (i/2) sum (z d/dz - zbar d/dzbar)
  static FrameVector reeb(int n);
  /// Z_jk = zbar_j d/dz_k - zbar_k d/dz_j
  static FrameVector geller(int n, int j, int k);
  /// conj(Z_jk) = z_j d/dzbar_k - z_k d/dzbar_j
  static FrameVector geller_bar(int n, int j, int k);
  static FrameVector frame(int n, const FrameIndex& idx);
  /// Re-assembles sum c_idx * frame(idx).
  static FrameVector from_frame(int n, const std::map<FrameIndex, SpherePoly>& coeffs);

  int dimension() const { return n_; }
  const SpherePoly& holo(int a) const { return holo_.at(a); }
  const SpherePoly& anti(int a) const { return anti_.at(a); }
  /// Component along coordinate u_a, u = (z_0..z_n, zbar_0..zbar_n).
  const SpherePoly& component(int a) const;

  bool is_zero() const;
  /// The field annihilates sum z zbar - 1.
  bool is_tangent() const;
  /// Tangent, of type (1,0): a section of H.
  bool is_holomorphic_type() const;
  /// Tangent, of type (0,1): a section of conj(H).
  bool is_antiholomorphic_type() const;

  FrameVector conj() const;
  /// Parts along H and conj(H) of a tangent field.
  FrameVector holo_part() const;
  FrameVector anti_part() const;

  /// Canonical coefficients: theta(X) on T, theta_jk(X) on Z_jk, conj(theta_jk)(X) on conj(Z_jk).
  /// Zero coefficients are omitted.
  std::map<FrameIndex, SpherePoly> frame_components() const;

  FrameVector& operator+=(const FrameVector& o);
  FrameVector& operator-=(const FrameVector& o);
  FrameVector& operator*=(const ExactScalar& c);
  FrameVector& operator*=(const SpherePoly& f);
  friend FrameVector operator+(FrameVector a, const FrameVector& b) { return a += b; }
  friend FrameVector operator-(FrameVector a, const FrameVector& b) { return a -= b; }
  friend FrameVector operator*(FrameVector a, const ExactScalar& c) { return a *= c; }
  friend FrameVector operator*(const ExactScalar& c, FrameVector a) { return a *= c; }
  friend FrameVector operator*(const SpherePoly& f, FrameVector a) { return a *= f; }
  friend bool operator==(const FrameVector& a, const FrameVector& b) {
    return a.n_ == b.n_ && a.holo_ == b.holo_ && a.anti_ == b.anti_;
  }

 private:
  int n_ = 1;
  std::vector<SpherePoly> holo_;
  std::vector<SpherePoly> anti_;
};

/// Differential form of degree 1 or 2 on the sphere in ambient coordinates
/// du_a, u = (z_0..z_n, zbar_0..zbar_n). Evaluation restricts to tangent vectors.
class FrameForm {
 public:
  FrameForm() = default;
  FrameForm(int n, int degree);

  /// theta = i sum (z dzbar - zbar dz)
  static FrameForm contact(int n);
  /// theta_jk = z_j dz_k - z_k dz_j
  static FrameForm geller(int n, int j, int k);
  /// conj(theta_jk) = zbar_j dzbar_k - zbar_k dzbar_j
  static FrameForm geller_bar(int n, int j, int k);
  static FrameForm frame(int n, const FrameIndex& idx);
  /// sum_a c_a du_a
  static FrameForm one_form(int n, std::vector<SpherePoly> coeffs);

  int dimension() const { return n_; }
  int degree() const { return degree_; }

  /// Coefficient of du_a (degree 1) or du_a ^ du_b with a < b (degree 2).
  SpherePoly coefficient(int a) const;
  SpherePoly coefficient(int a, int b) const;
  void add(int a, const SpherePoly& c);
  void add(int a, int b, const SpherePoly& c);

  FrameForm exterior_derivative() const;
  FrameForm conj() const;
  SpherePoly operator()(const FrameVector& x) const;
  SpherePoly operator()(const FrameVector& x, const FrameVector& y) const;

  /// Degree-1 components on the dual family: alpha(T), alpha(Z_jk), alpha(conj Z_jk).
  std::map<FrameIndex, SpherePoly> frame_components() const;

  FrameForm& operator+=(const FrameForm& o);
  FrameForm& operator*=(const SpherePoly& f);
  friend FrameForm operator+(FrameForm a, const FrameForm& b) { return a += b; }
  friend FrameForm operator*(const SpherePoly& f, FrameForm a) { return a *= f; }

  friend FrameForm wedge(const FrameForm& a, const FrameForm& b);

 private:
  int n_ = 1;
  int degree_ = 1;
  std::map<std::pair<int, int>, SpherePoly> c_;  // degree 1 uses key (a, -1)
};

/// X(f), reduced to normal form.
SpherePoly field_apply(const FrameVector& x, const SpherePoly& f);
/// [X, Y]
FrameVector bracket(const FrameVector& x, const FrameVector& y);
SpherePoly form_eval(const FrameForm& form, const FrameVector& x);

/// L(V, conj W) = -(i/2) d theta(V, conj W) = sum_a v_a conj(w_a); V, W of type (1,0).
SpherePoly levi_pairing(const FrameVector& v, const FrameVector& w);
/// The (1,0)-form alpha with alpha(V) = levi_pairing(V, W) for conj(W) = wbar.
FrameForm sharp_inverse(const FrameVector& wbar);

/// Tanaka-Webster derivative along T (the sphere is torsion free, so this is [T, X]).
FrameVector covariant_T(const FrameVector& x);
/// Tanaka-Webster derivative along a (1,0) field X.
FrameVector covariant_Z(const FrameVector& x, const FrameVector& target);

/// Section sum c_{(jk),(lm)} conj(Z_jk) (x) theta_lm of Hom(H, conj H).
class TensorField {
 public:
  using Key = std::pair<GellerPair, GellerPair>;

  TensorField() = default;
  explicit TensorField(int n) : n_(n) {}

  int dimension() const { return n_; }
  const std::map<Key, SpherePoly>& coefficients() const { return c_; }
  SpherePoly coefficient(const GellerPair& bar, const GellerPair& form) const;
  void set(const GellerPair& bar, const GellerPair& form, SpherePoly c);

  /// S(X) = sum c theta_lm(X) conj(Z_jk)
  FrameVector apply(const FrameVector& x) const;
  /// Pointwise sum |c|^2 (the tensor norm when coefficients are canonical).
  SpherePoly pointwise_norm2() const;
  /// Coefficientwise conjugate: sum conj(c) Z_jk (x) conj(theta_lm).
  TensorField conj_coefficients() const;

  friend bool operator==(const TensorField& a, const TensorField& b) {
    return a.n_ == b.n_ && a.c_ == b.c_;
  }

 private:
  int n_ = 1;
  std::map<Key, SpherePoly> c_;
};

/// Canonical coefficients of a (1,0) -> (0,1) map: c_{(jk),(lm)} = conj(theta_jk)(S(Z_lm)).
TensorField tight_expand(int n, const std::function<FrameVector(const FrameVector&)>& map);
TensorField tight_expand(const TensorField& raw);
/// Canonical coefficients of a vector: theta_jk(V) for (1,0) V.
std::map<GellerPair, SpherePoly> tight_expand(const FrameVector& v);

/// Leibniz rule on conj(Z) (x) theta: coefficient c goes to T c + (weight) c.
TensorField covariant_T(const TensorField& s);

/// Constant w with covariant_T(Z_jk) = w Z_jk, read off from the bracket.
ExactScalar geller_reeb_weight(int n);

/// Ambient symmetric-matrix description of a tensor: the (1,0) vector v maps to the
/// (0,1) field with components M v, projected to conj(H).
class AmbientTensor {
 public:
  explicit AmbientTensor(int n);
  int dimension() const { return n_; }
  SpherePoly& at(int a, int b) { return m_.at(a * (n_ + 1) + b); }
  const SpherePoly& at(int a, int b) const { return m_.at(a * (n_ + 1) + b); }
  bool is_symmetric() const;
  FrameVector apply(const FrameVector& v) const;

 private:
  int n_;
  std::vector<SpherePoly> m_;
};

TensorField tight_expand(const AmbientTensor& m);

}  // namespace crvar
