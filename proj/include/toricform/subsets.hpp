#pragma once

#include <algorithm>
#include <vector>

namespace toricform {

// Index subset of {0,...,n-1}, kept sorted ascending.
using Subset = std::vector<int>;

// All p-element subsets of {0,...,n-1} in lexicographic order.
inline std::vector<Subset> subsets_of_size(int n, int p) {
  std::vector<Subset> out;
  if (p < 0 || p > n) return out;
  Subset cur(p);
  for (int i = 0; i < p; ++i) cur[i] = i;
  while (true) {
    out.push_back(cur);
    int i = p - 1;
    while (i >= 0 && cur[i] == n - p + i) --i;
    if (i < 0) break;
    ++cur[i];
    for (int j = i + 1; j < p; ++j) cur[j] = cur[j - 1] + 1;
  }
  return out;
}

// Position of subset s in the lexicographic enumeration; -1 if absent.
inline int subset_rank(const std::vector<Subset>& all, const Subset& s) {
  auto it = std::lower_bound(all.begin(), all.end(), s);
  if (it == all.end() || *it != s) return -1;
  return static_cast<int>(it - all.begin());
}

// Sign of the permutation sorting v ascending; 0 if v has a repeat.
inline int sort_sign(std::vector<int>& v) {
  int sign = 1;
  for (size_t i = 0; i < v.size(); ++i)
    for (size_t j = i + 1; j < v.size(); ++j) {
      if (v[i] == v[j]) return 0;
      if (v[i] > v[j]) {
        std::swap(v[i], v[j]);
        sign = -sign;
      }
    }
  return sign;
}

}  // namespace toricform
