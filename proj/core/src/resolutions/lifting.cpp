#include "smashcoh/resolutions/lifting.hpp"

#include <string>

namespace smashcoh {

SparseVec apply_free(const FreeMap& f, const LiftTarget& tgt, int n, int target_degree,
                     const std::vector<FreeTerm>& terms) {
  Accumulator acc;
  for (const auto& t : terms) {
    const SparseVec& img = f[static_cast<std::size_t>(n)][static_cast<std::size_t>(t.base)];
    if (img.empty()) continue;
    if (t.left < 0 && t.right < 0)
      acc.add(img, t.coef);
    else
      acc.add(tgt.act(target_degree, img, t.left, t.right), t.coef);
  }
  return acc.finish();
}

namespace {

std::vector<SparseVec> solve_or_fail(const SparseMatrix& d, const std::vector<SparseVec>& targets, int n,
                                     const char* what) {
  try {
    return solve(d, targets);
  } catch (const NoSolution& e) {
    throw LiftFailed(std::string(what) + " inconsistent in degree " + std::to_string(n) + ": " + e.what());
  }
}

}  // namespace

FreeMap lift_chain_map(const FreeSource& src, const LiftTarget& tgt, std::vector<SparseVec> degree0, int top) {
  FreeMap f;
  f.push_back(std::move(degree0));
  for (int n = 1; n <= top; ++n) {
    std::vector<SparseVec> targets;
    for (std::int64_t b = 0; b < src.base_dims[static_cast<std::size_t>(n)]; ++b)
      targets.push_back(apply_free(f, tgt, n - 1, n - 1, src.boundary(n, b)));
    f.push_back(solve_or_fail(tgt.d(n), targets, n, "chain-map lift"));
  }
  return f;
}

FreeMap lift_homotopy(const FreeSource& src, const LiftTarget& tgt, const FreeMap& f, const FreeMap& g, int top) {
  FreeMap h;
  for (int n = 0; n <= top; ++n) {
    std::vector<SparseVec> targets;
    for (std::int64_t b = 0; b < src.base_dims[static_cast<std::size_t>(n)]; ++b) {
      Accumulator acc;
      acc.add(f[n][b]);
      acc.add(g[n][b], Scalar(-1));
      if (n > 0) acc.add(apply_free(h, tgt, n - 1, n, src.boundary(n, b)), Scalar(-1));
      targets.push_back(acc.finish());
    }
    h.push_back(solve_or_fail(tgt.d(n + 1), targets, n, "homotopy lift"));
  }
  return h;
}

}  // namespace smashcoh
