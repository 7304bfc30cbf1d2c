#pragma once

// Map-reduce over S_n. The parallel kernels split S_n into the n blocks of
// permutations sharing a first letter; the serial versions walk S_n in
// lexicographic order and serve as the reference.

#include <algorithm>
#include <cstdint>
#include <exception>
#include <map>
#include <optional>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "permstat/permutation.hpp"
#include "permstat/poly.hpp"

namespace permstat {

/// Worker count for the parallel kernels; 0 keeps the OpenMP default.
void set_threads(int threads);
int max_threads();

template <class Key>
using Tally = std::map<Key, std::uint64_t>;

/// fn(p) returns the key to count, or nullopt to skip p.
template <class Key, class Fn>
Tally<Key> tally_serial(int n, Filter filter, Fn&& fn, int n_max = kHardNCeiling) {
  Tally<Key> out;
  for_each_permutation(
      n, filter,
      [&](const Permutation& p) {
        if (std::optional<Key> k = fn(p)) ++out[*k];
      },
      n_max);
  return out;
}

template <class Key, class Fn>
Tally<Key> tally_parallel(int n, Filter filter, Fn&& fn, int n_max = kHardNCeiling) {
  check_n(n, n_max);
  if (n <= 1) return tally_serial<Key>(n, filter, fn, n_max);
  std::vector<Tally<Key>> parts(static_cast<std::size_t>(n));
  std::vector<std::exception_ptr> errors(static_cast<std::size_t>(n));
#pragma omp parallel for schedule(dynamic, 1)
  for (int first = 1; first <= n; ++first) {
    auto& local = parts[static_cast<std::size_t>(first - 1)];
    try {
      for_each_with_first(n, first, filter, [&](const Permutation& p) {
        if (std::optional<Key> k = fn(p)) ++local[*k];
      });
    } catch (...) {
      errors[static_cast<std::size_t>(first - 1)] = std::current_exception();
    }
  }
  for (auto& e : errors)
    if (e) std::rethrow_exception(e);
  Tally<Key> out;
  for (auto& part : parts)
    for (auto& [k, c] : part) out[k] += c;
  return out;
}

/// Lexicographically least permutation on which ok(p) is false.
template <class Pred>
std::optional<Permutation> first_violation_serial(int n, Filter filter, Pred&& ok, int n_max = kHardNCeiling) {
  check_n(n, n_max);
  if (n == 0) {
    const Permutation empty;
    if (passes(empty, filter) && !ok(empty)) return empty;
    return std::nullopt;
  }
  for (int first = 1; first <= n; ++first) {
    std::optional<Permutation> bad;
    for_each_with_first(n, first, filter, [&](const Permutation& p) {
      if (!bad && !ok(p)) bad = p;
    });
    if (bad) return bad;
  }
  return std::nullopt;
}

template <class Pred>
std::optional<Permutation> first_violation(int n, Filter filter, Pred&& ok, int n_max = kHardNCeiling) {
  check_n(n, n_max);
  if (n <= 1) return first_violation_serial(n, filter, ok, n_max);
  std::vector<std::optional<Permutation>> found(static_cast<std::size_t>(n));
  std::vector<std::exception_ptr> errors(static_cast<std::size_t>(n));
#pragma omp parallel for schedule(dynamic, 1)
  for (int first = 1; first <= n; ++first) {
    auto& slot = found[static_cast<std::size_t>(first - 1)];
    try {
      for_each_with_first(n, first, filter, [&](const Permutation& p) {
        if (!slot && !ok(p)) slot = p;
      });
    } catch (...) {
      errors[static_cast<std::size_t>(first - 1)] = std::current_exception();
    }
  }
  for (auto& e : errors)
    if (e) std::rethrow_exception(e);
  for (auto& f : found)
    if (f) return f;
  return std::nullopt;
}

/// Sum of monomials over the permutations passing the filter.
template <class Fn>
Poly monomial_sum(int n, Filter filter, Fn&& fn, int n_max = kHardNCeiling) {
  const auto t = tally_parallel<Monomial>(n, filter, fn, n_max);
  Poly out;
  for (const auto& [m, c] : t) out.add_term(m, Rational(static_cast<unsigned long>(c)));
  return out;
}

/// Generating polynomial of a statistic tuple: prod vars[i]^stats[i].
template <class Fn>
Poly stat_poly(int n, Filter filter, const std::vector<VarId>& vars, Fn&& stats, int n_max = kHardNCeiling) {
  return monomial_sum(
      n, filter,
      [&](const Permutation& p) -> std::optional<Monomial> {
        const std::vector<int> s = stats(p);
        Monomial m;
        for (std::size_t i = 0; i < vars.size(); ++i)
          if (s[i] > 0) m *= Monomial::of(vars[i], static_cast<std::uint32_t>(s[i]));
        return m;
      },
      n_max);
}

}  // namespace permstat
