#pragma once

// Master polynomials over S_n with indexed indeterminates a, b, c, d, e,
// their J-fractions, the two linear versions, and the named substitution
// schemes.
//
// Indeterminate names: a[l,m], b[l,m], c[l,m], d[l,m], e[l] for the first
// master; the second master and its dual use a[l] with one index. The
// cycle marker is the variable lam.

#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "permstat/permutation.hpp"
#include "permstat/poly.hpp"
#include "permstat/series.hpp"

namespace permstat {

enum class Master { First, Second, Dual, Linear1, Linear2 };

std::string_view master_name(Master m);
Master parse_master(std::string_view name);

struct WeightScheme {
  std::string name;
  Assignment assign;
  /// Weight cycles by lam^pcyc instead of lam^cyc and drop the lam in front
  /// of e_n in the second J-fraction. Equivalent to e = w/lam with e = w.
  bool e_includes_lambda = false;
};

/// Identity scheme.
WeightScheme scheme_symbolic();
/// Names: symbolic, case1, case2, case3, gamma1 (alias case1bis0), gamma2, gamma3, case1bis.
WeightScheme scheme_by_name(std::string_view name);
const std::vector<std::string>& scheme_names();

/// Raised when a shifted index in a linear version would be negative.
class NegativeIndex : public std::logic_error {
 public:
  NegativeIndex(const Permutation& p, int value);
  const Permutation& witness() const noexcept { return witness_; }

 private:
  Permutation witness_;
};

/// Fully symbolic sums. For the second master and its dual, lam marks cyc,
/// or pcyc when lam_on_pcyc is set.
Poly Q_first_symbolic(int n, int n_max = kDefaultNMax);
Poly Q_second_symbolic(int n, bool lam_on_pcyc = false, int n_max = kDefaultNMax);
Poly Q_dual_symbolic(int n, bool lam_on_pcyc = false, int n_max = kDefaultNMax);
Poly Q_linear1_symbolic(int n, int n_max = kDefaultNMax);
Poly Q_linear2_symbolic(int n, int n_max = kDefaultNMax);

Poly Q_first(int n, const WeightScheme& s, int n_max = kDefaultNMax);
Poly Q_second(int n, const WeightScheme& s, int n_max = kDefaultNMax);
Poly Q_second_dual(int n, const WeightScheme& s, int n_max = kDefaultNMax);
Poly Q_linear_first(int n, const WeightScheme& s, int n_max = kDefaultNMax);
Poly Q_linear_second(int n, const WeightScheme& s, int n_max = kDefaultNMax);
Poly Q_master(Master which, int n, const WeightScheme& s, int n_max = kDefaultNMax);

/// J-fraction of the first master (also used by the linear versions) or of
/// the second master (also its dual), with the scheme substituted.
JFractionSpec Q_cf_spec(Master which, const WeightScheme& s);
Series Q_cf(Master which, const WeightScheme& s, int order);

}  // namespace permstat
