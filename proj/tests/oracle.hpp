#pragma once

// Literal definitions used to cross-check the library. Slow on purpose.

#include <algorithm>
#include <functional>
#include <numeric>
#include <vector>

#include "permstat/permutation.hpp"
#include "permstat/poly.hpp"

namespace oracle {

using permstat::Permutation;

inline std::vector<Permutation> all(int n) {
  std::vector<int> w(static_cast<std::size_t>(n));
  std::iota(w.begin(), w.end(), 1);
  std::vector<Permutation> out;
  do out.emplace_back(w);
  while (std::next_permutation(w.begin(), w.end()));
  return out;
}

inline int inv_at(const Permutation& p, int v) {
  for (int i = 1; i <= p.size(); ++i)
    if (p(i) == v) return i;
  return 0;
}

inline int des(const Permutation& p) {
  int c = 0;
  for (int i = 1; i < p.size(); ++i) c += p(i) > p(i + 1);
  return c;
}

inline int exc(const Permutation& p) {
  int c = 0;
  for (int i = 1; i <= p.size(); ++i) c += p(i) > i;
  return c;
}

inline int fix(const Permutation& p) {
  int c = 0;
  for (int i = 1; i <= p.size(); ++i) c += p(i) == i;
  return c;
}

inline int cyc(const Permutation& p) {
  std::vector<bool> seen(static_cast<std::size_t>(p.size()) + 1);
  int c = 0;
  for (int i = 1; i <= p.size(); ++i) {
    if (seen[i]) continue;
    ++c;
    for (int j = i; !seen[j]; j = p(j)) seen[j] = true;
  }
  return c;
}

inline std::vector<int> des2_set(const Permutation& p) {
  std::vector<int> out;
  for (int i = 1; i < p.size(); ++i) {
    if (p(i) <= p(i + 1)) continue;
    bool ok = true;
    for (int j = 1; j < i; ++j) ok = ok && p(j) < p(i);
    if (ok) out.push_back(i);
  }
  return out;
}

inline std::vector<int> pex_set(const Permutation& p) {
  std::vector<int> out;
  for (int i = 1; i <= p.size(); ++i) {
    if (p(i) <= i) continue;
    bool ok = true;
    for (int j = 1; j < i; ++j) ok = ok && !(p(j) >= i && p(j) <= p(i));
    if (ok) out.push_back(i);
  }
  return out;
}

inline std::vector<int> pdrop_set(const Permutation& p) {
  std::vector<int> out;
  for (int i = 1; i <= p.size(); ++i) {
    if (p(i) >= i) continue;
    bool ok = true;
    for (int j = i + 1; j <= p.size(); ++j) ok = ok && !(p(j) >= p(i) && p(j) <= i);
    if (ok) out.push_back(i);
  }
  return out;
}

/// Exclusive antirecords that are cycle peaks, straight from the definitions.
inline std::vector<int> ear_set(const Permutation& p) {
  std::vector<int> out;
  const int n = p.size();
  for (int i = 1; i <= n; ++i) {
    bool rec = true, arec = true;
    for (int j = 1; j < i; ++j) rec = rec && p(j) < p(i);
    for (int j = i + 1; j <= n; ++j) arec = arec && p(j) > p(i);
    const bool cpeak = inv_at(p, i) < i && i > p(i);
    if (arec && !rec && cpeak) out.push_back(i);
  }
  return out;
}

/// Value p(i) with p(0) = 0, p(n+1) = n+1.
inline int padded(const Permutation& p, int i) { return i == 0 ? 0 : i == p.size() + 1 ? p.size() + 1 : p(i); }

inline int fmax(const Permutation& p) {
  int c = 0;
  for (int i = 1; i <= p.size(); ++i) {
    const bool dasc = padded(p, i - 1) < p(i) && p(i) < padded(p, i + 1);
    bool rec = true;
    for (int j = 1; j < i; ++j) rec = rec && p(j) < p(i);
    c += dasc && rec;
  }
  return c;
}

inline int p31_2(const Permutation& p, int v) {
  int c = 0;
  for (int j = 2; j < inv_at(p, v); ++j) c += p(j) < v && v < p(j - 1);
  return c;
}

inline int p2_31(const Permutation& p, int v) {
  int c = 0;
  for (int j = inv_at(p, v) + 1; j < p.size(); ++j) c += p(j + 1) < v && v < p(j);
  return c;
}

/// Sum over every Motzkin path of length n of its weight, by explicit listing.
inline permstat::Poly motzkin_sum(int n, const std::function<permstat::Poly(int)>& gamma,
                                  const std::function<permstat::Poly(int)>& beta) {
  permstat::Poly total;
  std::vector<int> steps(static_cast<std::size_t>(n));
  std::function<void(int, int)> go = [&](int k, int h) {
    if (h > n - k) return;
    if (k == n) {
      if (h != 0) return;
      permstat::Poly w(1L);
      int height = 0;
      for (int s : steps) {
        if (s == 0) w *= gamma(height);
        if (s == 1) ++height;
        if (s == -1) w *= beta(height--);
      }
      total += w;
      return;
    }
    for (int s : {-1, 0, 1}) {
      if (h + s < 0) continue;
      steps[static_cast<std::size_t>(k)] = s;
      go(k + 1, h + s);
    }
  };
  go(0, 0);
  return total;
}

}  // namespace oracle
