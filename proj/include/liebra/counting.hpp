#pragma once

#include <vector>

namespace liebra {

// a[k] = number of rooted trees on {1..n} whose edge set has exactly k edges
// oriented low-to-high (parent below child in label order), k = 0..n-1.
// Exhaustive; guarded to n <= 9.
std::vector<long long> count_by_increasing_edges(int n);

// Ascending coefficients of prod_{k=1}^{n-1} (k x + (n - k)); the same vector
// as above, in closed form. Guarded to n <= 16 (the total n^(n-1) must fit in
// 64 bits).
std::vector<long long> increasing_edge_polynomial(int n);

}  // namespace liebra
