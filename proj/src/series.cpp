#include "permstat/series.hpp"

#include <algorithm>

namespace permstat {

namespace {

Poly t_() { return Poly::variable("t"); }
Poly lam_() { return Poly::variable("lam"); }
Poly y_() { return Poly::variable("y"); }
Poly w_() { return Poly::variable("w"); }

Rational factorial(int n) {
  Rational f = 1;
  for (int i = 2; i <= n; ++i) f *= i;
  return f;
}

}  // namespace

NotGammaExpressible::NotGammaExpressible(Poly residual)
    : std::domain_error("not expressible in the gamma basis; residual " + residual.to_string()),
      residual_(std::move(residual)) {}

std::string Series::to_json() const {
  std::string out = "[";
  for (std::size_t i = 0; i < c_.size(); ++i) {
    if (i) out += ",";
    out += c_[i].to_json();
  }
  return out + "]";
}

Series series_add(const Series& a, const Series& b) {
  const int n = std::min(a.order(), b.order());
  Series r(n);
  for (int i = 0; i <= n; ++i) r[i] = a[i] + b[i];
  return r;
}

Series series_mul(const Series& a, const Series& b) {
  const int n = std::min(a.order(), b.order());
  Series r(n);
  for (int i = 0; i <= n; ++i) {
    if (a[i].is_zero()) continue;
    for (int j = 0; i + j <= n; ++j)
      if (!b[j].is_zero()) r[i + j] += a[i] * b[j];
  }
  return r;
}

Series series_scale(const Series& a, const Poly& c) {
  Series r(a.order());
  for (int i = 0; i <= a.order(); ++i) r[i] = a[i] * c;
  return r;
}

Series series_exp(const Series& s) {
  if (!s[0].is_zero()) throw BadConstantTerm("exp needs a zero constant term");
  const int n = s.order();
  Series e(n);
  e[0] = Poly(1L);
  for (int m = 1; m <= n; ++m) {
    Poly acc;
    for (int k = 1; k <= m; ++k)
      if (!s[k].is_zero()) acc += (s[k] * e[m - k]).scale(Rational(k));
    e[m] = acc.scale(Rational(1, m));
  }
  return e;
}

Series series_log(const Series& s) {
  if (s[0] != Poly(1L)) throw BadConstantTerm("log needs constant term 1");
  const int n = s.order();
  Series l(n);
  for (int m = 1; m <= n; ++m) {
    Poly acc = s[m].scale(Rational(m));
    for (int k = 1; k < m; ++k)
      if (!l[k].is_zero() && !s[m - k].is_zero()) acc -= (l[k] * s[m - k]).scale(Rational(k));
    l[m] = acc.scale(Rational(1, m));
  }
  return l;
}

Series series_inverse(const Series& s) {
  const auto c0 = s[0].as_constant();
  if (!c0 || *c0 == 0) throw BadConstantTerm("inverse needs a nonzero constant term");
  const Rational inv0 = 1 / *c0;
  const int n = s.order();
  Series r(n);
  r[0] = Poly(inv0);
  for (int m = 1; m <= n; ++m) {
    Poly acc;
    for (int k = 1; k <= m; ++k)
      if (!s[k].is_zero()) acc += s[k] * r[m - k];
    r[m] = (-acc).scale(inv0);
  }
  return r;
}

Series jfraction_expand(const JFractionSpec& spec, int order, CfBackend backend) {
  if (order < 0) throw std::invalid_argument("negative order");
  if (backend == CfBackend::Nested) return jfraction_nested(spec, order);
  const int hmax = order / 2;
  std::vector<Poly> gamma(static_cast<std::size_t>(hmax) + 1), beta(static_cast<std::size_t>(hmax) + 1);
  for (int h = 0; h <= hmax; ++h) gamma[h] = spec.gamma(h);
  for (int h = 1; h <= hmax; ++h) beta[h] = spec.beta(h);

  Series out(order);
  std::vector<Poly> cur(static_cast<std::size_t>(hmax) + 2), next(cur.size());
  cur[0] = Poly(1L);
  out[0] = cur[0];
  for (int m = 1; m <= order; ++m) {
    std::fill(next.begin(), next.end(), Poly());
    // A path of length `order` that sits at height h after m steps must
    // still come down, so h <= order - m.
    const int top = std::min(hmax, order - m);
    for (int h = 0; h <= std::min(hmax, m - 1); ++h) {
      if (cur[h].is_zero()) continue;
      if (h + 1 <= top) next[h + 1] += cur[h];
      if (h <= top && !gamma[h].is_zero()) next[h] += cur[h] * gamma[h];
      if (h >= 1 && h - 1 <= top && !beta[h].is_zero()) next[h - 1] += cur[h] * beta[h];
    }
    std::swap(cur, next);
    out[m] = cur[0];
  }
  return out;
}

Series jfraction_nested(const JFractionSpec& spec, int order) {
  const int depth = order / 2 + 1;
  // Level k only influences coefficients from z^(2k) on.
  Series below(std::max(order - 2 * depth, 0));
  below[0] = Poly(1L);
  for (int k = depth - 1; k >= 0; --k) {
    const int ord = order - 2 * k;
    Series denom(ord);
    denom[0] = Poly(1L);
    if (ord >= 1) denom[1] = -spec.gamma(k);
    const Poly b = spec.beta(k + 1);
    for (int i = 0; i + 2 <= ord; ++i)
      if (i <= below.order()) denom[i + 2] -= b * below[i];
    below = series_inverse(denom);
  }
  return below;
}

std::string_view family_name(Family f) {
  switch (f) {
    case Family::A: return "A";
    case Family::B: return "B";
    case Family::C: return "C";
    case Family::D: return "D";
    case Family::GammaD: return "gamma";
  }
  return "?";
}

Family parse_family(std::string_view name) {
  if (name == "A") return Family::A;
  if (name == "B") return Family::B;
  if (name == "C" || name == "conj52") return Family::C;
  if (name == "D") return Family::D;
  if (name == "gamma") return Family::GammaD;
  throw std::invalid_argument("unknown family '" + std::string(name) + "'");
}

JFractionSpec family_spec(Family f) {
  const Poly t = t_(), lam = lam_(), y = y_(), w = w_();
  auto shifted = [](const Poly& v, int n) { return v + Poly(static_cast<long>(n - 1)); };
  switch (f) {
    case Family::A:
      return {[=](int n) { return w + Poly(static_cast<long>(n)) * (t + Poly(1L)); },
              [=](int n) { return t * shifted(lam, n) * shifted(y, n); }};
    case Family::B:
      return {[=](int n) { return w + Poly(static_cast<long>(n)) * (t + Poly(1L)); },
              [=](int n) { return Poly(static_cast<long>(n)) * t * shifted(lam, n); }};
    case Family::C:
      return {[=](int n) { return lam + Poly(2L * n); },
              [=](int n) { return shifted(lam, n) * shifted(y, n); }};
    case Family::D:
      return {[=](int n) { return Poly(static_cast<long>(n)) * (t + Poly(1L)); },
              [=](int n) { return t * shifted(lam, n) * shifted(y, n); }};
    case Family::GammaD:
      return {[](int n) { return Poly(static_cast<long>(n)); },
              [=](int n) { return t * shifted(lam, n) * shifted(y, n); }};
  }
  throw std::logic_error("unreachable");
}

Poly family_poly(Family f, int n, int n_max) {
  check_n(n, n_max);
  return jfraction_expand(family_spec(f), n)[n];
}

Poly A_poly(int n, int n_max) { return family_poly(Family::A, n, n_max); }
Poly B_poly(int n, int n_max) { return family_poly(Family::B, n, n_max); }
Poly C_poly(int n, int n_max) { return family_poly(Family::C, n, n_max); }
Poly D_poly(int n, int n_max) { return family_poly(Family::D, n, n_max); }

Series egf_B(int order) {
  const VarId t = var("t");
  const Poly one_minus_t = Poly(1L) - Poly::variable(t);
  Series g(order);
  g[0] = Poly(1L);
  for (int n = 2; n <= order; ++n) {
    const Poly numer = Poly::monomial(Monomial::of(t, n)) - Poly::variable(t);
    g[n] = numer.divide_exact(one_minus_t, t).scale(1 / factorial(n));
  }
  Series wz(order);
  if (order >= 1) wz[1] = w_();
  const Series tail = series_exp(series_scale(series_log(g), -lam_()));
  return series_mul(series_exp(wz), tail);
}

std::vector<Poly> gamma_decompose(const Poly& p, int n, VarId tvar) {
  if (static_cast<int>(p.degree(tvar)) > n)
    throw std::invalid_argument("gamma_decompose: degree in t exceeds n");
  const Poly one_plus_t = Poly(1L) + Poly::variable(tvar);
  Poly residual = p;
  std::vector<Poly> out;
  for (int k = 0; 2 * k <= n; ++k) {
    Poly g = residual.coefficient_of(tvar, static_cast<unsigned>(k));
    residual -= g * Poly::monomial(Monomial::of(tvar, static_cast<std::uint32_t>(k))) *
                one_plus_t.pow(static_cast<unsigned>(n - 2 * k));
    out.push_back(std::move(g));
  }
  if (!residual.is_zero()) throw NotGammaExpressible(std::move(residual));
  return out;
}

}  // namespace permstat
