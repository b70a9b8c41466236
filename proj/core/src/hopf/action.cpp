#include "smashcoh/hopf/action.hpp"

namespace smashcoh {

SparseVec ModuleAlgebraAction::apply(int g, int a) const {
  return SparseVec::from_dense(act[static_cast<std::size_t>(g)].col(a));
}

Vec ModuleAlgebraAction::apply(const Vec& gamma, const Vec& a) const {
  Vec r(static_cast<std::size_t>(algebra.dim()));
  for (int g = 0; g < hopf.dim(); ++g)
    if (!gamma[g].is_zero()) axpy(r, gamma[g], act[g].apply(a));
  return r;
}

ModuleAlgebraAction trivial_action(const HopfAlgebra& h, const FinDimAlgebra& a) {
  ModuleAlgebraAction m{h, a, {}};
  for (int g = 0; g < h.dim(); ++g) m.act.push_back(Matrix::identity(a.field(), a.dim()).scaled(h.counit()[g]));
  return m;
}

ModuleAlgebraAction group_action(const HopfAlgebra& kg, const FinDimAlgebra& a, std::vector<Matrix> per_element) {
  if (static_cast<int>(per_element.size()) != kg.dim()) throw std::invalid_argument("one matrix per group element required");
  return ModuleAlgebraAction{kg, a, std::move(per_element)};
}

ModuleAlgebraAction sign_action_on_dual_numbers(const Field& f) {
  HopfAlgebra kg = group_algebra(cyclic_group(2), f);
  FinDimAlgebra a = truncated_polynomial(f, 2);
  return group_action(kg, a, {Matrix::identity(f, 2), Matrix::from_ints(f, {{1, 0}, {0, -1}})});
}

ModuleAlgebraAction sweedler_on_dual_numbers(const Field& f) {
  HopfAlgebra h = sweedler_h4(f);
  FinDimAlgebra a = truncated_polynomial(f, 2, "y");
  // basis of A: 1, y; of H4: 1, g, x, gx
  Matrix one = Matrix::identity(f, 2);
  Matrix g = Matrix::from_ints(f, {{1, 0}, {0, -1}});
  Matrix x = Matrix::from_ints(f, {{0, 1}, {0, 0}});
  Matrix gx = g * x;
  return ModuleAlgebraAction{h, a, {one, g, x, gx}};
}

std::vector<std::string> validate_action(const ModuleAlgebraAction& act) {
  std::vector<std::string> out;
  const HopfAlgebra& h = act.hopf;
  const FinDimAlgebra& a = act.algebra;
  const Field& f = a.field();
  int dg = h.dim(), da = a.dim();
  if (static_cast<int>(act.act.size()) != dg) {
    out.push_back("action must give one matrix per basis element of Gamma");
    return out;
  }
  for (const auto& m : act.act)
    if (m.rows() != da || m.cols() != da) {
      out.push_back("action matrix has wrong shape");
      return out;
    }
  Matrix unit_action(f, da, da);
  for (int g = 0; g < dg; ++g) unit_action = unit_action + act.act[g].scaled(h.algebra().unit()[g]);
  if (unit_action != Matrix::identity(f, da)) out.push_back("unit of Gamma does not act as the identity");
  const FinDimAlgebra& G = h.algebra();
  for (int g = 0; g < dg; ++g)
    for (int k = 0; k < dg; ++k) {
      Matrix lhs(f, da, da);
      for (const auto& [j, c] : G.product(g, k).terms) lhs = lhs + act.act[j].scaled(c);
      if (lhs != act.act[g] * act.act[k])
        out.push_back("module axiom (gk).a = g.(k.a) fails on (" + G.label(g) + ", " + G.label(k) + ")");
    }
  for (int g = 0; g < dg; ++g) {
    if (act.act[g].apply(a.unit()) != scaled(a.unit(), h.counit()[g]))
      out.push_back(G.label(g) + " . 1 != eps(" + G.label(g) + ") 1");
    for (int i = 0; i < da; ++i)
      for (int j = 0; j < da; ++j) {
        Vec lhs = act.act[g].apply(a.product(i, j).to_dense(static_cast<std::size_t>(da)));
        Vec rhs(static_cast<std::size_t>(da));
        for (const auto& [idx, c] : h.coproduct(g).terms) {
          int g1 = static_cast<int>(idx / dg), g2 = static_cast<int>(idx % dg);
          axpy(rhs, c, a.multiply(act.act[g1].col(i), act.act[g2].col(j)));
        }
        if (lhs != rhs)
          out.push_back("measuring condition fails for " + G.label(g) + " on (" + a.label(i) + ", " + a.label(j) + ")");
      }
  }
  return out;
}

FinDimAlgebra smash_product(const ModuleAlgebraAction& act) {
  auto v = validate_hopf(act.hopf);
  for (auto& s : validate_algebra(act.algebra)) v.push_back("algebra: " + s);
  for (auto& s : validate_action(act)) v.push_back("action: " + s);
  if (!v.empty()) throw ValidationError("smash product inputs are invalid", v);
  const HopfAlgebra& h = act.hopf;
  const FinDimAlgebra& a = act.algebra;
  const FinDimAlgebra& G = h.algebra();
  int dg = h.dim(), da = a.dim(), d = da * dg;
  std::vector<std::string> labels;
  for (int i = 0; i < da; ++i)
    for (int g = 0; g < dg; ++g) labels.push_back(a.label(i) + "#" + G.label(g));
  std::vector<SparseVec> acted(static_cast<std::size_t>(dg) * da);
  for (int g = 0; g < dg; ++g)
    for (int i = 0; i < da; ++i) acted[static_cast<std::size_t>(g) * da + i] = act.apply(g, i);
  std::vector<SparseVec> table(static_cast<std::size_t>(d) * d);
  for (int i = 0; i < da; ++i)
    for (int g = 0; g < dg; ++g)
      for (int j = 0; j < da; ++j)
        for (int k = 0; k < dg; ++k) {
          Accumulator acc;
          for (const auto& [idx, c] : h.coproduct(g).terms) {
            int g1 = static_cast<int>(idx / dg), g2 = static_cast<int>(idx % dg);
            SparseVec left = a.multiply(SparseVec{{{i, a.field().one()}}}, acted[static_cast<std::size_t>(g1) * da + j]);
            const SparseVec& right = G.product(g2, k);
            for (const auto& [p, x] : left.terms)
              for (const auto& [q, y] : right.terms) acc.add(p * dg + q, c * x * y);
          }
          table[static_cast<std::size_t>(i * dg + g) * d + (j * dg + k)] = acc.finish();
        }
  Vec unit(static_cast<std::size_t>(d));
  for (int i = 0; i < da; ++i)
    for (int g = 0; g < dg; ++g) unit[i * dg + g] = a.unit()[i] * G.unit()[g];
  FinDimAlgebra r(a.field(), std::move(labels), std::move(table), std::move(unit));
  auto rv = validate_algebra(r);
  if (!rv.empty()) throw ValidationError("smash product is not associative", rv);
  return r;
}

Matrix smash_inclusion_A(const ModuleAlgebraAction& act) {
  int dg = act.hopf.dim(), da = act.algebra.dim();
  Matrix m(act.field(), da * dg, da);
  for (int i = 0; i < da; ++i)
    for (int g = 0; g < dg; ++g)
      if (!act.hopf.algebra().unit()[g].is_zero()) m.set(i * dg + g, i, act.hopf.algebra().unit()[g]);
  return m;
}

Matrix smash_inclusion_Gamma(const ModuleAlgebraAction& act) {
  int dg = act.hopf.dim(), da = act.algebra.dim();
  Matrix m(act.field(), da * dg, dg);
  for (int i = 0; i < da; ++i)
    for (int g = 0; g < dg; ++g)
      if (!act.algebra.unit()[i].is_zero()) m.set(i * dg + g, g, act.algebra.unit()[i]);
  return m;
}

}  // namespace smashcoh
