#include "smashcoh/hopf/group.hpp"

#include <algorithm>

namespace smashcoh {

FiniteGroup::FiniteGroup(std::vector<std::string> labels, std::vector<std::vector<int>> table)
    : labels_(std::move(labels)), table_(std::move(table)) {
  int n = order();
  if (n == 0) throw NotAGroup("empty group");
  if (static_cast<int>(table_.size()) != n) throw NotAGroup("table has wrong number of rows");
  for (const auto& row : table_) {
    if (static_cast<int>(row.size()) != n) throw NotAGroup("table has a row of wrong length");
    for (int v : row)
      if (v < 0 || v >= n) throw NotAGroup("closure fails: product index out of range");
  }
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c)
        if (mul(mul(a, b), c) != mul(a, mul(b, c)))
          throw NotAGroup("associativity fails on (" + label(a) + ", " + label(b) + ", " + label(c) + ")");
  identity_ = -1;
  for (int e = 0; e < n && identity_ < 0; ++e) {
    bool ok = true;
    for (int a = 0; a < n && ok; ++a) ok = mul(e, a) == a && mul(a, e) == a;
    if (ok) identity_ = e;
  }
  if (identity_ < 0) throw NotAGroup("identity axiom fails: no two-sided identity");
  inverse_.assign(static_cast<std::size_t>(n), -1);
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b)
      if (mul(a, b) == identity_ && mul(b, a) == identity_) inverse_[a] = b;
    if (inverse_[a] < 0) throw NotAGroup("inverse axiom fails for " + label(a));
  }
}

int FiniteGroup::index_of(const std::string& label) const {
  auto it = std::find(labels_.begin(), labels_.end(), label);
  return it == labels_.end() ? -1 : static_cast<int>(it - labels_.begin());
}

FiniteGroup trivial_group() { return FiniteGroup({"1"}, {{0}}); }

FiniteGroup cyclic_group(int n, const std::string& gen) {
  std::vector<std::string> labels;
  for (int i = 0; i < n; ++i) labels.push_back(i == 0 ? "1" : (i == 1 ? gen : gen + "^" + std::to_string(i)));
  std::vector<std::vector<int>> t(static_cast<std::size_t>(n), std::vector<int>(static_cast<std::size_t>(n)));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) t[i][j] = (i + j) % n;
  return FiniteGroup(std::move(labels), std::move(t));
}

FiniteGroup symmetric_group_3() {
  std::vector<std::vector<int>> perms;
  std::vector<int> p{0, 1, 2};
  do perms.push_back(p);
  while (std::next_permutation(p.begin(), p.end()));
  std::vector<std::string> labels;
  for (const auto& q : perms) labels.push_back("[" + std::to_string(q[0] + 1) + std::to_string(q[1] + 1) + std::to_string(q[2] + 1) + "]");
  int n = static_cast<int>(perms.size());
  std::vector<std::vector<int>> t(static_cast<std::size_t>(n), std::vector<int>(static_cast<std::size_t>(n)));
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      std::vector<int> c(3);
      for (int i = 0; i < 3; ++i) c[i] = perms[a][perms[b][i]];  // a after b
      t[a][b] = static_cast<int>(std::find(perms.begin(), perms.end(), c) - perms.begin());
    }
  return FiniteGroup(std::move(labels), std::move(t));
}

void validate_group_action(const FiniteGroup& n, const FiniteGroup& g, const GroupAction& act) {
  if (static_cast<int>(act.perm.size()) != g.order()) throw NotAnAction("action must list every element of G");
  for (int x = 0; x < g.order(); ++x) {
    const auto& p = act.perm[x];
    if (static_cast<int>(p.size()) != n.order()) throw NotAnAction("action of " + g.label(x) + " has wrong length");
    std::vector<int> sorted = p;
    std::sort(sorted.begin(), sorted.end());
    for (int i = 0; i < n.order(); ++i)
      if (sorted[i] != i) throw NotAnAction(g.label(x) + " does not act bijectively");
    for (int a = 0; a < n.order(); ++a)
      for (int b = 0; b < n.order(); ++b)
        if (p[n.mul(a, b)] != n.mul(p[a], p[b]))
          throw NotAnAction(g.label(x) + " is not multiplicative on (" + n.label(a) + ", " + n.label(b) + ")");
  }
  for (int a = 0; a < n.order(); ++a)
    if (act.perm[g.identity()][a] != a) throw NotAnAction("identity of G acts nontrivially");
  for (int x = 0; x < g.order(); ++x)
    for (int y = 0; y < g.order(); ++y)
      for (int a = 0; a < n.order(); ++a)
        if (act.perm[g.mul(x, y)][a] != act.perm[x][act.perm[y][a]])
          throw NotAnAction("not a homomorphism on (" + g.label(x) + ", " + g.label(y) + ")");
}

FiniteGroup semidirect_product(const FiniteGroup& n, const FiniteGroup& g, const GroupAction& act) {
  validate_group_action(n, g, act);
  int N = n.order(), G = g.order(), d = N * G;
  std::vector<std::string> labels;
  for (int a = 0; a < N; ++a)
    for (int x = 0; x < G; ++x) labels.push_back("(" + n.label(a) + "," + g.label(x) + ")");
  std::vector<std::vector<int>> t(static_cast<std::size_t>(d), std::vector<int>(static_cast<std::size_t>(d)));
  for (int a = 0; a < N; ++a)
    for (int x = 0; x < G; ++x)
      for (int b = 0; b < N; ++b)
        for (int y = 0; y < G; ++y) t[a * G + x][b * G + y] = n.mul(a, act.perm[x][b]) * G + g.mul(x, y);
  return FiniteGroup(std::move(labels), std::move(t));
}

}  // namespace smashcoh
