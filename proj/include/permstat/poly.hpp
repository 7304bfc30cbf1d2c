#pragma once

// Sparse multivariate polynomials with exact rational coefficients over an
// interned, session-wide set of named variables. Names are either plain
// identifiers ("t", "lam") or indexed ("a[2,0]", "e[3]").

#include <cstdint>
#include <functional>
#include <initializer_list>
#include <map>
#include <optional>
#include <ostream>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <gmpxx.h>

namespace permstat {

using Rational = mpq_class;
using VarId = std::uint32_t;

struct VarInfo {
  std::string name;
  std::string base;
  std::vector<int> indices;
};

/// Interns a variable name; thread-safe.
VarId var(std::string_view name);
/// Interns base[i0,i1,...].
VarId var(std::string_view base, std::initializer_list<int> indices);
VarId var(std::string_view base, std::span<const int> indices);
/// Copy of the record for an interned id.
VarInfo var_info(VarId id);
const std::string& var_name(VarId id);

/// Sorted (variable, exponent) pairs, exponents positive.
class Monomial {
 public:
  Monomial() = default;
  static Monomial of(VarId v, std::uint32_t exp = 1);

  std::span<const std::pair<VarId, std::uint32_t>> factors() const { return f_; }
  std::uint32_t exponent(VarId v) const;
  std::uint32_t degree() const;
  bool is_one() const { return f_.empty(); }

  Monomial operator*(const Monomial& o) const;
  Monomial& operator*=(const Monomial& o) { return *this = *this * o; }
  /// Same monomial with v's exponent set to zero.
  Monomial without(VarId v) const;

  friend bool operator==(const Monomial&, const Monomial&) = default;
  friend auto operator<=>(const Monomial&, const Monomial&) = default;

 private:
  std::vector<std::pair<VarId, std::uint32_t>> f_;
};

class Poly;

/// Simultaneous substitution rules. Exact variable rules win over family
/// rules; family rules are tried in insertion order.
class Assignment {
 public:
  using IndexPredicate = std::function<bool(std::span<const int>)>;

  Assignment& set(VarId v, Poly value);
  Assignment& set(std::string_view name, Poly value);
  /// Every base[...] whose indices satisfy `match` maps to `value`.
  Assignment& set_family(std::string base, IndexPredicate match, Poly value);
  /// Every base[...] maps to value_of(indices).
  Assignment& set_family(std::string base, std::function<Poly(std::span<const int>)> value_of);

  std::optional<Poly> lookup(VarId v) const;

 private:
  struct FamilyRule {
    std::string base;
    std::function<std::optional<Poly>(std::span<const int>)> value;
  };
  std::map<VarId, Poly> exact_;
  std::vector<FamilyRule> rules_;
};

class NotDivisible : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

class Poly {
 public:
  using Terms = std::map<Monomial, Rational>;

  Poly() = default;
  Poly(long c);  // NOLINT(google-explicit-constructor)
  Poly(const Rational& c);  // NOLINT(google-explicit-constructor)
  static Poly variable(VarId v);
  static Poly variable(std::string_view name) { return variable(var(name)); }
  static Poly monomial(Monomial m, Rational c = 1);

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t term_count() const { return terms_.size(); }
  /// Constant term if the polynomial is constant.
  std::optional<Rational> as_constant() const;

  Poly& operator+=(const Poly& o);
  Poly& operator-=(const Poly& o);
  Poly& operator*=(const Poly& o) { return *this = *this * o; }
  Poly operator-() const;
  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator*(const Poly& a, const Poly& b);

  Poly scale(const Rational& c) const;
  Poly pow(unsigned k) const;

  /// Adds c * m in place.
  void add_term(const Monomial& m, const Rational& c);

  /// Coefficient of v^k, as a polynomial in the remaining variables.
  Poly coefficient_of(VarId v, unsigned k) const;
  unsigned degree(VarId v) const;
  unsigned total_degree() const;
  std::vector<VarId> variables() const;

  /// Every variable must be bound.
  Rational eval(const std::map<VarId, Rational>& point) const;

  /// Exact quotient by `divisor`, treating both as univariate in v with
  /// polynomial coefficients. The divisor's leading coefficient in v must be
  /// a nonzero rational constant. Throws NotDivisible on a nonzero remainder.
  Poly divide_exact(const Poly& divisor, VarId v) const;

  /// Human-diffable text, terms in canonical order, e.g. "1 + 4*t + t^2".
  std::string to_string() const;
  /// Canonical JSON: [{"vars":{"t":2},"coeff":"1/1"}, ...].
  std::string to_json() const;
  static Poly from_json(std::string_view json);

  friend bool operator==(const Poly&, const Poly&) = default;

 private:
  Terms terms_;
};

inline std::ostream& operator<<(std::ostream& os, const Poly& p) { return os << p.to_string(); }

Poly substitute(const Poly& p, const Assignment& a);

/// Canonical term order used for printing: total degree, then variable names.
std::vector<std::pair<Monomial, Rational>> canonical_terms(const Poly& p);

std::string rational_string(const Rational& r);

}  // namespace permstat
