#include "liebra/counting.hpp"

#include "liebra/trees.hpp"

namespace liebra {

std::vector<long long> count_by_increasing_edges(int n) {
  if (n < 1) throw DomainError("alphabet size must be positive");
  if (n > 9) throw DomainError("exhaustive count too large (n > 9)");
  std::vector<long long> a(n);
  for_each_rooted_tree(n, [&](const RootedTree& t) {
    int inc = 0;
    for (int v = 1; v <= t.n; ++v)
      if (v != t.root && t.parent[v] < v) ++inc;
    ++a[inc];
  });
  return a;
}

std::vector<long long> increasing_edge_polynomial(int n) {
  if (n < 1) throw DomainError("alphabet size must be positive");
  if (n > 16) throw DomainError("coefficients would overflow 64 bits (n > 16)");
  std::vector<long long> coeff{1};
  for (int k = 1; k <= n - 1; ++k) {
    std::vector<long long> next(coeff.size() + 1, 0);
    for (std::size_t i = 0; i < coeff.size(); ++i) {
      next[i] += coeff[i] * (n - k);  // constant part
      next[i + 1] += coeff[i] * k;    // x part
    }
    coeff = std::move(next);
  }
  return coeff;
}

}  // namespace liebra
