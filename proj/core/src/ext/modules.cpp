#include "smashcoh/ext/modules.hpp"

namespace smashcoh {

Matrix SmashModule::of_a(int a) const { return rho[static_cast<std::size_t>(a * action.hopf.dim() + action.algebra.unit_index())]; }

Matrix SmashModule::of_gamma(int g) const {
  return rho[static_cast<std::size_t>(action.algebra.unit_index() * action.hopf.dim() + g)];
}

Matrix SmashModule::of_gamma(const SparseVec& gamma) const {
  Matrix out(field(), dim, dim);
  for (const auto& [g, c] : gamma.terms) out = out + of_gamma(static_cast<int>(g)).scaled(c);
  return out;
}

SmashModule smash_module(const ModuleAlgebraAction& act, const std::vector<Matrix>& a_action,
                         const std::vector<Matrix>& gamma_action) {
  if (act.algebra.unit_index() < 0 || act.hopf.algebra().unit_index() < 0)
    throw std::invalid_argument("smash_module: units must be basis vectors");
  if (static_cast<int>(a_action.size()) != act.algebra.dim() || static_cast<int>(gamma_action.size()) != act.hopf.dim())
    throw std::invalid_argument("smash_module: one matrix per basis element required");
  SmashModule m{act, a_action.empty() ? 0 : a_action[0].rows(), {}};
  for (const auto& ma : a_action)
    for (const auto& mg : gamma_action) m.rho.push_back(ma * mg);
  auto bad = validate_smash_module(m);
  if (!bad.empty()) throw ValidationError("invalid A # Gamma-module", bad);
  return m;
}

SmashModule character_module(const ModuleAlgebraAction& act, const Vec& chi_a) {
  const Field& f = act.field();
  std::vector<Matrix> a, g;
  for (const auto& c : chi_a) a.push_back(Matrix::from_rows(f, {{c}}, 1));
  for (const auto& c : act.hopf.counit()) g.push_back(Matrix::from_rows(f, {{c}}, 1));
  return smash_module(act, a, g);
}

SmashModule regular_module(const ModuleAlgebraAction& act) {
  FinDimAlgebra r = smash_product(act);
  SmashModule m{act, r.dim(), {}};
  for (int i = 0; i < r.dim(); ++i) m.rho.push_back(r.left_mult(i));
  return m;
}

std::vector<std::string> validate_smash_module(const SmashModule& m) {
  std::vector<std::string> out;
  FinDimAlgebra r = smash_product(m.action);
  if (static_cast<int>(m.rho.size()) != r.dim()) return {"one action matrix per basis element of A # Gamma required"};
  for (const auto& x : m.rho)
    if (x.rows() != m.dim || x.cols() != m.dim) return {"action matrices must be square of the carrier dimension"};
  Matrix unit(m.field(), m.dim, m.dim);
  for (int i = 0; i < r.dim(); ++i)
    if (!r.unit()[i].is_zero()) unit = unit + m.rho[i].scaled(r.unit()[i]);
  if (unit != Matrix::identity(m.field(), m.dim)) out.push_back("the unit does not act as the identity");
  for (int i = 0; i < r.dim(); ++i)
    for (int j = 0; j < r.dim(); ++j) {
      Matrix prod(m.field(), m.dim, m.dim);
      for (const auto& [k, c] : r.product(i, j).terms) prod = prod + m.rho[k].scaled(c);
      if (m.rho[i] * m.rho[j] != prod) out.push_back("action is not associative on (" + r.label(i) + ", " + r.label(j) + ")");
    }
  // gamma (a m) = (gamma_1 . a)(gamma_2 m)
  const HopfAlgebra& h = m.action.hopf;
  for (int g = 0; g < h.dim(); ++g)
    for (int a = 0; a < m.action.algebra.dim(); ++a) {
      Matrix rhs(m.field(), m.dim, m.dim);
      for (const auto& [idx, c] : h.coproduct(g).terms) {
        int g1 = static_cast<int>(idx / h.dim()), g2 = static_cast<int>(idx % h.dim());
        for (const auto& [a2, c2] : m.action.apply(g1, a).terms)
          rhs = rhs + (m.of_a(static_cast<int>(a2)) * m.of_gamma(g2)).scaled(c * c2);
      }
      if (m.of_gamma(g) * m.of_a(a) != rhs)
        out.push_back("Gamma-action is not compatible with the A-action at (" + h.algebra().label(g) + ", " +
                      m.action.algebra.label(a) + ")");
    }
  return out;
}

BimoduleStructure hom_k_bimodule(const SmashModule& m, const SmashModule& n) {
  FinDimAlgebra r = smash_product(m.action);
  const Field& f = m.field();
  int d = n.dim * m.dim;
  BimoduleStructure b{r, d, {}, {}};
  for (int i = 0; i < r.dim(); ++i) {
    Matrix left(f, d, d), right(f, d, d);
    for (int y = 0; y < n.dim; ++y)
      for (int x = 0; x < m.dim; ++x) {
        // E_{yx} -> rho_N(r) E_{yx} and E_{yx} rho_M(r)
        for (int y2 = 0; y2 < n.dim; ++y2) left.set(y2 * m.dim + x, y * m.dim + x, n.rho[i](y2, y));
        for (int x2 = 0; x2 < m.dim; ++x2) right.set(y * m.dim + x2, y * m.dim + x, m.rho[i](x, x2));
      }
    b.left.push_back(std::move(left));
    b.right.push_back(std::move(right));
  }
  return b;
}

AlgebraExtension endomorphism_extension(const SmashModule& m) {
  FinDimAlgebra r = smash_product(m.action);
  const Field& f = m.field();
  Matrix map(f, m.dim * m.dim, r.dim());
  for (int i = 0; i < r.dim(); ++i)
    for (int y = 0; y < m.dim; ++y)
      for (int x = 0; x < m.dim; ++x) map.set(y * m.dim + x, i, m.rho[i](y, x));
  return {r, matrix_algebra(f, m.dim), map};
}

}  // namespace smashcoh
