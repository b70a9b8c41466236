#include "smashcoh/ext/group_cohomology.hpp"

namespace smashcoh {

namespace {

std::int64_t ipow(std::int64_t b, int e) {
  std::int64_t r = 1;
  for (int i = 0; i < e; ++i) r *= b;
  return r;
}

}  // namespace

GroupCochains::GroupCochains(FiniteGroup g, Field f, int top) : g_(std::move(g)), top_(top) {
  const int m = g_.order() - 1;
  std::vector<int> nonid;
  std::vector<int> digit(static_cast<std::size_t>(g_.order()), -1);
  for (int i = 0; i < g_.order(); ++i)
    if (i != g_.identity()) {
      digit[i] = static_cast<int>(nonid.size());
      nonid.push_back(i);
    }
  std::vector<std::int64_t> dims;
  for (int n = 0; n <= top; ++n) dims.push_back(ipow(m, n));
  complex_ = ModuleComplex(f, 0, dims, 1);
  complex_.trusted_hi = top - 1;
  for (int n = 0; n < top; ++n) {
    std::vector<Accumulator> cols(static_cast<std::size_t>(dims[n]));
    std::vector<int> t(static_cast<std::size_t>(n + 1));
    for (std::int64_t row = 0; row < dims[n + 1]; ++row) {
      std::int64_t r = row;
      for (int i = n; i >= 0; --i) {
        t[i] = nonid[static_cast<std::size_t>(r % m)];
        r /= m;
      }
      // index of a tuple of n group elements; -1 when some entry is the identity
      auto index = [&](const std::vector<int>& u) {
        std::int64_t idx = 0;
        for (int e : u) {
          if (e == g_.identity()) return std::int64_t(-1);
          idx = idx * m + digit[e];
        }
        return idx;
      };
      std::vector<int> u(t.begin() + 1, t.end());
      cols[static_cast<std::size_t>(index(u))].add(row, f.one());
      for (int i = 0; i < n; ++i) {
        u.assign(t.begin(), t.begin() + i);
        u.push_back(g_.mul(t[i], t[i + 1]));
        u.insert(u.end(), t.begin() + i + 2, t.end());
        std::int64_t c = index(u);
        if (c >= 0) cols[static_cast<std::size_t>(c)].add(row, f.from_int((i + 1) % 2 == 0 ? 1 : -1));
      }
      u.assign(t.begin(), t.end() - 1);
      cols[static_cast<std::size_t>(index(u))].add(row, f.from_int((n + 1) % 2 == 0 ? 1 : -1));
    }
    SparseMatrix d(f, static_cast<int>(dims[n + 1]), static_cast<int>(dims[n]));
    for (std::size_t c = 0; c < cols.size(); ++c) d.set_column(static_cast<int>(c), cols[c].finish());
    complex_.set_differential(n, std::move(d));
  }
}

Vec GroupCochains::product(int n1, const Vec& x, int n2, const Vec& y) const {
  if (n1 + n2 > top_) throw std::out_of_range("GroupCochains::product beyond top");
  std::int64_t d2 = complex_.dim(n2);
  Vec out(static_cast<std::size_t>(complex_.dim(n1 + n2)));
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (x[i].is_zero()) continue;
    for (std::int64_t j = 0; j < d2; ++j)
      if (!y[j].is_zero()) out[static_cast<std::size_t>(static_cast<std::int64_t>(i) * d2 + j)] = x[i] * y[j];
  }
  return out;
}

CohomologyRing group_cohomology_oracle(const FiniteGroup& g, const Field& f, int maxdeg) {
  return cohomology_ring(GroupCochains(g, f, maxdeg + 1), maxdeg);
}

}  // namespace smashcoh
