#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "smashcoh/complexes/dg_algebra.hpp"
#include "smashcoh/resolutions/smash_complex.hpp"

namespace smashcoh {

class NotLinear : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// An algebra B with an algebra map R -> B (dim B x dim R).
struct AlgebraExtension {
  FinDimAlgebra source;
  FinDimAlgebra target;
  Matrix map;
};

/// B = R with the identity map.
AlgebraExtension identity_extension(const FinDimAlgebra& r);
/// B = k with the map given by a character eps of R.
AlgebraExtension character_extension(const FinDimAlgebra& r, const Vec& eps);
/// Unitality and multiplicativity on basis pairs; empty when valid.
std::vector<std::string> validate_extension(const AlgebraExtension& e);

/// B-valued coefficients for cochains on an A-bimodule resolution: where A and Gamma land in B.
struct Coefficients {
  FinDimAlgebra algebra;
  Matrix from_a;
  /// dim B x dim Gamma; empty (0 columns) when no Gamma-action is wanted.
  Matrix from_gamma;
  std::optional<HopfAlgebra> hopf;
};

/// Coefficients for Hom_{A^e}(K, B) where B extends A # Gamma.
Coefficients smash_coefficients(const ModuleAlgebraAction& act, const AlgebraExtension& ext);
/// Coefficients for Hom_{R^e}(P, B) without any Gamma.
Coefficients plain_coefficients(const AlgebraExtension& ext);

/// Right Gamma-module dg algebra with the action given degreewise.
class InnerAlgebra : public DgAlgebra {
 public:
  virtual const HopfAlgebra& hopf() const = 0;
  /// f -> f . e_g on degree q.
  virtual const SparseMatrix& right_action(int q, int g) const = 0;
};

/// Hom_{A^e}(K, B) = Hom_k(Kbar_q, B) on generators, index m * dim B + b, with
///   (df)(m) = -(-1)^q f(d m),
///   (fg)(m) = sum (-1)^{|f||g|} a f(m_1) a'' g(m_2) a' over omega(m),
///   (f . gamma)(m) = S(gamma_1) f(gamma_2 m) gamma_3.
class HomAeAlgebra : public InnerAlgebra {
 public:
  HomAeAlgebra(const FreeBimoduleResolution& k, Coefficients c, int top);

  const ModuleComplex& complex() const override { return complex_; }
  Vec product(int n1, const Vec& x, int n2, const Vec& y) const override;
  const HopfAlgebra& hopf() const override;
  const SparseMatrix& right_action(int q, int g) const override;

  const FreeBimoduleResolution& resolution() const { return *k_; }
  const Coefficients& coefficients() const { return c_; }
  int bdim() const { return c_.algebra.dim(); }
  /// a f(m) a' for a full basis element (a, m, a') of K_q.
  SparseVec evaluate(int q, const Vec& f, std::int64_t full) const;
  /// Generator values of an element of Hom_k(K_q, B) given on the full basis; throws NotLinear.
  Vec from_full(int q, const Vec& full) const;

 private:
  const FreeBimoduleResolution* k_;
  Coefficients c_;
  int top_;
  ModuleComplex complex_;
  std::vector<SparseVec> sa_, sg_;
  std::vector<std::vector<SparseMatrix>> action_;
};

/// Hom_{R^e}(K # L^, B) on generators: C^n = Hom_k(V_n, B), index v * dim B + b, with
/// (d theta)(v) = -(-1)^n theta(d x_v) and (theta theta')(v) = sum (-1)^{|theta||theta'|}
/// r0 theta(v1) r1 theta'(v2) r2 over the smash diagonal.
class SmashCochains : public DgAlgebra {
 public:
  /// diag may be null; products then throw.
  SmashCochains(const SmashComplex& x, const SmashDiagonal* diag, AlgebraExtension ext);

  const ModuleComplex& complex() const override { return complex_; }
  Vec product(int n1, const Vec& x, int n2, const Vec& y) const override;

  const SmashComplex& source() const { return *x_; }
  const AlgebraExtension& extension() const { return ext_; }
  int bdim() const { return ext_.target.dim(); }
  /// Generator values of an element of Hom_k(X_n, B) given on the full basis; throws NotLinear.
  Vec from_full(int n, const Vec& full) const;

 private:
  SparseVec sandwich(int r, const SparseVec& b, int r2) const;

  const SmashComplex* x_;
  const SmashDiagonal* diag_;
  AlgebraExtension ext_;
  ModuleComplex complex_;
  std::vector<SparseVec> sr_;
};

/// Dense slice [offset, offset + len) as a sparse vector.
SparseVec slice(const Vec& v, std::int64_t offset, std::int64_t len);

}  // namespace smashcoh
