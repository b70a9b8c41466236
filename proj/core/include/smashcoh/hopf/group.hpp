#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace smashcoh {

class NotAGroup : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class NotAnAction : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Finite group given by its multiplication table on labelled elements.
class FiniteGroup {
 public:
  FiniteGroup() = default;
  /// table[i][j] = index of g_i g_j. Throws NotAGroup naming the failing axiom.
  FiniteGroup(std::vector<std::string> labels, std::vector<std::vector<int>> table);

  int order() const { return static_cast<int>(labels_.size()); }
  int mul(int a, int b) const { return table_[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)]; }
  int identity() const { return identity_; }
  int inverse(int a) const { return inverse_[static_cast<std::size_t>(a)]; }
  const std::string& label(int a) const { return labels_[static_cast<std::size_t>(a)]; }
  const std::vector<std::string>& labels() const { return labels_; }
  const std::vector<std::vector<int>>& table() const { return table_; }
  int index_of(const std::string& label) const;

 private:
  std::vector<std::string> labels_;
  std::vector<std::vector<int>> table_;
  int identity_ = 0;
  std::vector<int> inverse_;
};

FiniteGroup trivial_group();
/// Z/n with elements labelled by a power of `gen` ("1", "t", "t^2", ...).
FiniteGroup cyclic_group(int n, const std::string& gen = "t");
/// S_3 as permutations of {1,2,3}.
FiniteGroup symmetric_group_3();

/// Action of G on N by automorphisms: perm[g][n] = g . n.
struct GroupAction {
  std::vector<std::vector<int>> perm;
};

/// Throws NotAnAction when some g does not act by an automorphism or the map
/// g -> perm[g] is not a homomorphism.
void validate_group_action(const FiniteGroup& n, const FiniteGroup& g, const GroupAction& act);

/// N x| G with (n,g)(n',g') = (n (g.n'), g g'); element (n,g) has index n*|G| + g.
FiniteGroup semidirect_product(const FiniteGroup& n, const FiniteGroup& g, const GroupAction& act);

}  // namespace smashcoh
