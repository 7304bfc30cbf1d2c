#pragma once

// Truncated power series in z with polynomial coefficients, J-fraction
// expansion, and the named polynomial families built on top of them.

#include <functional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "permstat/permutation.hpp"
#include "permstat/poly.hpp"

namespace permstat {

class BadConstantTerm : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

class NotGammaExpressible : public std::domain_error {
 public:
  explicit NotGammaExpressible(Poly residual);
  const Poly& residual() const noexcept { return residual_; }

 private:
  Poly residual_;
};

/// Coefficients of z^0 .. z^order.
class Series {
 public:
  Series() = default;
  explicit Series(int order) : c_(static_cast<std::size_t>(order) + 1) {}
  explicit Series(std::vector<Poly> coeffs) : c_(std::move(coeffs)) {}

  int order() const { return static_cast<int>(c_.size()) - 1; }
  const Poly& operator[](int n) const { return c_[static_cast<std::size_t>(n)]; }
  Poly& operator[](int n) { return c_[static_cast<std::size_t>(n)]; }
  const std::vector<Poly>& coeffs() const { return c_; }

  /// JSON list of canonical polynomial forms.
  std::string to_json() const;

  friend bool operator==(const Series&, const Series&) = default;

 private:
  std::vector<Poly> c_;
};

Series series_add(const Series& a, const Series& b);
Series series_mul(const Series& a, const Series& b);
Series series_scale(const Series& a, const Poly& c);
/// Requires a zero constant term.
Series series_exp(const Series& s);
/// Requires constant term 1.
Series series_log(const Series& s);
/// Requires a nonzero rational constant term.
Series series_inverse(const Series& s);

struct JFractionSpec {
  std::function<Poly(int)> gamma;  // n >= 0
  std::function<Poly(int)> beta;   // n >= 1
};

enum class CfBackend { Motzkin, Nested };

/// Weighted Motzkin paths: level step at height h weighs gamma(h), down step
/// from height h weighs beta(h).
Series jfraction_expand(const JFractionSpec& spec, int order, CfBackend backend = CfBackend::Motzkin);
/// Bottom-up inversion of the truncated nested fraction.
Series jfraction_nested(const JFractionSpec& spec, int order);

enum class Family { A, B, C, D, GammaD };

std::string_view family_name(Family f);
/// Accepts A, B, C, D, conj52 (alias of C) and gamma.
Family parse_family(std::string_view name);

/// Variables: t, lam, y, w.
JFractionSpec family_spec(Family f);

Poly A_poly(int n, int n_max = kDefaultNMax);
Poly B_poly(int n, int n_max = kDefaultNMax);
Poly C_poly(int n, int n_max = kDefaultNMax);
Poly D_poly(int n, int n_max = kDefaultNMax);
Poly family_poly(Family f, int n, int n_max = kDefaultNMax);

/// The exponential generating function exp(wz) ((e^{tz} - t e^z)/(1-t))^(-lam).
Series egf_B(int order);

/// Coefficients gamma_k, k = 0..n/2, with P = sum gamma_k t^k (1+t)^(n-2k).
std::vector<Poly> gamma_decompose(const Poly& p, int n, VarId tvar);

}  // namespace permstat
