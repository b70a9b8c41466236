#pragma once

#include <functional>
#include <stdexcept>
#include <vector>

#include "smashcoh/linalg/elimination.hpp"

namespace smashcoh {

class LiftFailed : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// e_left * x_base * e_right; -1 means no factor on that side.
struct FreeTerm {
  std::int64_t base;
  int left;
  int right;
  Scalar coef;
};

/// A complex free on base spaces: only generators and their boundaries are needed.
struct FreeSource {
  std::vector<std::int64_t> base_dims;
  /// d(x_b) for a generator of degree n >= 1, as terms in degree n - 1.
  std::function<std::vector<FreeTerm>(int n, std::int64_t b)> boundary;
};

struct LiftTarget {
  /// Target differential from degree n to n - 1 (n >= 1).
  std::function<SparseMatrix(int n)> d;
  /// e_left * v * e_right in target degree n.
  std::function<SparseVec(int n, const SparseVec& v, int left, int right)> act;
};

/// maps[n][b] = image of generator b of degree n.
using FreeMap = std::vector<std::vector<SparseVec>>;

/// Image of a free combination under a map known on generators (degree shift is implicit).
SparseVec apply_free(const FreeMap& f, const LiftTarget& tgt, int n, int target_degree,
                     const std::vector<FreeTerm>& terms);

/// Lifts degree by degree: f_n(x) solves d f_n(x) = f_{n-1}(d x). Throws LiftFailed.
FreeMap lift_chain_map(const FreeSource& src, const LiftTarget& tgt, std::vector<SparseVec> degree0, int top);

/// h with d h + h d = f - g on generators through degree top; h[n][b] lies in degree n + 1.
FreeMap lift_homotopy(const FreeSource& src, const LiftTarget& tgt, const FreeMap& f, const FreeMap& g, int top);

}  // namespace smashcoh
