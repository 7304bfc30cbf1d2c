#include "permstat/master.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <tuple>

#include "permstat/reduce.hpp"
#include "permstat/refined.hpp"
#include "permstat/stats.hpp"

namespace permstat {

namespace {

Poly v(std::string_view name) { return Poly::variable(name); }

Monomial ix(std::string_view base, std::initializer_list<int> idx) { return Monomial::of(var(base, idx)); }

bool first_zero(std::span<const int> i) { return !i.empty() && i[0] == 0; }
bool second_zero(std::span<const int> i) { return i.size() > 1 && i[1] == 0; }
bool any_index(std::span<const int>) { return true; }

// Memo of symbolic sums; they are reused across schemes.
template <class Fn>
Poly memo(int kind, int n, bool flag, Fn&& compute) {
  static std::mutex mu;
  static std::map<std::tuple<int, int, bool>, Poly> cache;
  const auto key = std::make_tuple(kind, n, flag);
  {
    std::lock_guard lock(mu);
    if (auto it = cache.find(key); it != cache.end()) return it->second;
  }
  Poly p = compute();
  std::lock_guard lock(mu);
  return cache.emplace(key, std::move(p)).first->second;
}

std::vector<int> inverse_table(const Permutation& p) {
  std::vector<int> inv(static_cast<std::size_t>(p.size()) + 1, 0);
  for (int i = 1; i <= p.size(); ++i) inv[p(i)] = i;
  return inv;
}

Monomial first_weight(const Permutation& p) {
  const auto prof = refined_profile(p);
  const auto cs = cycle_classify(p);
  Monomial m;
  for (int i : cs.cval) m *= ix("a", {prof[i].ucross, prof[i].unest});
  for (int i : cs.cpeak) m *= ix("b", {prof[i].lcross, prof[i].lnest});
  for (int i : cs.cdfall) m *= ix("c", {prof[i].lcross, prof[i].lnest});
  for (int i : cs.cdrise) m *= ix("d", {prof[i].ucross, prof[i].unest});
  for (int i : cs.fix) m *= ix("e", {prof[i].lev});
  return m;
}

Monomial lam_power(const Permutation& p, bool lam_on_pcyc) {
  const int cyc = cycle_count(p);
  const int k = lam_on_pcyc ? cyc - static_cast<int>(cycle_classify(p).fix.size()) : cyc;
  return Monomial::of(var("lam"), static_cast<std::uint32_t>(k));
}

Monomial second_weight(const Permutation& p, bool lam_on_pcyc) {
  const auto prof = refined_profile(p);
  const auto cs = cycle_classify(p);
  const auto inv = inverse_table(p);
  Monomial m = lam_power(p, lam_on_pcyc);
  for (int i : cs.cval) m *= ix("a", {prof[i].ucross + prof[i].unest});
  for (int i : cs.cpeak) m *= ix("b", {prof[i].lcross, prof[i].lnest});
  for (int i : cs.cdfall) m *= ix("c", {prof[i].lcross, prof[i].lnest});
  for (int i : cs.cdrise) m *= ix("d", {prof[i].ucross + prof[i].unest, prof[inv[i]].unest});
  for (int i : cs.fix) m *= ix("e", {prof[i].lev});
  return m;
}

Monomial dual_weight(const Permutation& p, bool lam_on_pcyc) {
  const auto prof = refined_profile(p);
  const auto cs = cycle_classify(p);
  const auto inv = inverse_table(p);
  Monomial m = lam_power(p, lam_on_pcyc);
  for (int i : cs.cval) m *= ix("b", {prof[i].ucross, prof[i].unest});
  for (int i : cs.cpeak) m *= ix("a", {prof[i].lcross + prof[i].lnest});
  for (int i : cs.cdfall) m *= ix("d", {prof[i].lcross + prof[i].lnest, prof[inv[i]].lnest});
  for (int i : cs.cdrise) m *= ix("c", {prof[i].ucross, prof[i].unest});
  for (int i : cs.fix) m *= ix("e", {prof[i].lev});
  return m;
}

bool contains(const IndexSet& s, int x) { return std::binary_search(s.begin(), s.end(), x); }

Monomial linear1_weight(const Permutation& p) {
  const auto a = pattern_31_2(p);
  const auto b = pattern_2_31(p);
  const auto ls = linear_classify(p, Boundary::ZeroInf);
  auto A = [&](int i) { return a[static_cast<std::size_t>(i - 1)]; };
  auto B = [&](int i) { return b[static_cast<std::size_t>(i - 1)]; };
  Monomial m;
  for (int i : ls.val) m *= ix("a", {A(i), B(i)});
  for (int i : ls.peak) m *= ix("b", {A(i), B(i)});
  for (int i : ls.ddes) m *= ix("c", {A(i), B(i)});
  for (int i : ls.dasc) {
    if (contains(ls.fmax(), i)) {
      m *= ix("e", {B(i)});
    } else {
      if (A(i) < 1) throw NegativeIndex(p, i);
      m *= ix("d", {A(i) - 1, B(i)});
    }
  }
  return m;
}

Monomial linear2_weight(const Permutation& p) {
  const auto a = pattern_31_2(p);
  const auto b = pattern_2_31(p);
  const auto ls = linear_classify(p, Boundary::ZeroInf);
  auto A = [&](int i) { return a[static_cast<std::size_t>(i - 1)]; };
  auto B = [&](int i) { return b[static_cast<std::size_t>(i - 1)]; };
  Monomial m;
  for (int i : ls.val) m *= ix("a", {B(i), A(i)});
  for (int i : ls.peak) m *= ix("b", {B(i), A(i)});
  for (int i : ls.ddes) m *= ix("d", {B(i), A(i)});
  for (int i : ls.dasc) {
    if (contains(ls.arda(), i)) {
      m *= ix("e", {A(i)});
    } else {
      if (B(i) < 1) throw NegativeIndex(p, i);
      m *= ix("c", {B(i) - 1, A(i)});
    }
  }
  return m;
}

template <class Fn>
Poly enumerate_sum(int n, int n_max, Fn&& weight) {
  check_n(n, n_max);
  return monomial_sum(n, Filter::All, [&](const Permutation& p) -> std::optional<Monomial> { return weight(p); });
}

// Family rules are tried in insertion order, special indices first.
WeightScheme case1_with(std::string name, Poly c, Poly d, Poly e) {
  WeightScheme s{std::move(name), {}, false};
  s.assign.set_family("a", first_zero, v("lam") * v("t"))
      .set_family("a", any_index, v("t"))
      .set_family("b", second_zero, v("y"))
      .set_family("b", any_index, Poly(1L))
      .set_family("c", any_index, std::move(c))
      .set_family("d", any_index, std::move(d))
      .set_family("e", any_index, std::move(e));
  return s;
}

WeightScheme case2_with(std::string name, Poly d, Poly e) {
  WeightScheme s{std::move(name), {}, true};
  s.assign.set_family("a", any_index, v("t"))
      .set_family("b", second_zero, v("y"))
      .set_family("b", any_index, Poly(1L))
      .set_family("c", any_index, Poly(1L))
      .set_family("d", any_index, std::move(d))
      .set_family("e", any_index, std::move(e));
  return s;
}

WeightScheme case3_with(std::string name, Poly c, Poly e) {
  WeightScheme s{std::move(name), {}, true};
  s.assign.set_family("a", any_index, Poly(1L))
      .set_family("b", first_zero, v("t") * v("y"))
      .set_family("b", any_index, v("t"))
      .set_family("c", any_index, std::move(c))
      .set_family("d", any_index, Poly(1L))
      .set_family("e", any_index, std::move(e));
  return s;
}

}  // namespace

NegativeIndex::NegativeIndex(const Permutation& p, int value)
    : std::logic_error("negative shifted index at value " + std::to_string(value) + " of " + p.to_string()),
      witness_(p) {}

std::string_view master_name(Master m) {
  switch (m) {
    case Master::First: return "first";
    case Master::Second: return "second";
    case Master::Dual: return "dual";
    case Master::Linear1: return "linear1";
    case Master::Linear2: return "linear2";
  }
  return "?";
}

Master parse_master(std::string_view name) {
  for (Master m : {Master::First, Master::Second, Master::Dual, Master::Linear1, Master::Linear2})
    if (master_name(m) == name) return m;
  throw std::invalid_argument("unknown master '" + std::string(name) + "'");
}

WeightScheme scheme_symbolic() { return WeightScheme{"symbolic", {}, false}; }

const std::vector<std::string>& scheme_names() {
  static const std::vector<std::string> names = {"symbolic", "case1",  "case2",  "case3",
                                                 "gamma1",   "gamma2", "gamma3", "case1bis", "case1bis0"};
  return names;
}

WeightScheme scheme_by_name(std::string_view name) {
  if (name == "symbolic") return scheme_symbolic();
  if (name == "case1") return case1_with("case1", Poly(1L), v("t"), v("w"));
  if (name == "case2") return case2_with("case2", v("t"), v("w"));
  if (name == "case3") return case3_with("case3", v("t"), v("w"));
  if (name == "gamma1" || name == "case1bis0") return case1_with(std::string(name), Poly(1L), Poly(), Poly());
  if (name == "gamma2") return case2_with("gamma2", Poly(), Poly());
  if (name == "gamma3") return case3_with("gamma3", Poly(), Poly());
  if (name == "case1bis") return case1_with("case1bis", Poly(), v("t"), Poly());
  throw std::invalid_argument("unknown scheme '" + std::string(name) + "'");
}

Poly Q_first_symbolic(int n, int n_max) {
  check_n(n, n_max);
  return memo(0, n, false, [&] { return enumerate_sum(n, n_max, first_weight); });
}

Poly Q_second_symbolic(int n, bool lam_on_pcyc, int n_max) {
  check_n(n, n_max);
  return memo(1, n, lam_on_pcyc, [&] {
    return enumerate_sum(n, n_max, [&](const Permutation& p) { return second_weight(p, lam_on_pcyc); });
  });
}

Poly Q_dual_symbolic(int n, bool lam_on_pcyc, int n_max) {
  check_n(n, n_max);
  return memo(2, n, lam_on_pcyc, [&] {
    return enumerate_sum(n, n_max, [&](const Permutation& p) { return dual_weight(p, lam_on_pcyc); });
  });
}

Poly Q_linear1_symbolic(int n, int n_max) {
  check_n(n, n_max);
  return memo(3, n, false, [&] { return enumerate_sum(n, n_max, linear1_weight); });
}

Poly Q_linear2_symbolic(int n, int n_max) {
  check_n(n, n_max);
  return memo(4, n, false, [&] { return enumerate_sum(n, n_max, linear2_weight); });
}

Poly Q_first(int n, const WeightScheme& s, int n_max) { return substitute(Q_first_symbolic(n, n_max), s.assign); }

Poly Q_second(int n, const WeightScheme& s, int n_max) {
  return substitute(Q_second_symbolic(n, s.e_includes_lambda, n_max), s.assign);
}

Poly Q_second_dual(int n, const WeightScheme& s, int n_max) {
  return substitute(Q_dual_symbolic(n, s.e_includes_lambda, n_max), s.assign);
}

Poly Q_linear_first(int n, const WeightScheme& s, int n_max) {
  return substitute(Q_linear1_symbolic(n, n_max), s.assign);
}

Poly Q_linear_second(int n, const WeightScheme& s, int n_max) {
  return substitute(Q_linear2_symbolic(n, n_max), s.assign);
}

Poly Q_master(Master which, int n, const WeightScheme& s, int n_max) {
  switch (which) {
    case Master::First: return Q_first(n, s, n_max);
    case Master::Second: return Q_second(n, s, n_max);
    case Master::Dual: return Q_second_dual(n, s, n_max);
    case Master::Linear1: return Q_linear_first(n, s, n_max);
    case Master::Linear2: return Q_linear_second(n, s, n_max);
  }
  throw std::logic_error("unreachable");
}

JFractionSpec Q_cf_spec(Master which, const WeightScheme& s) {
  auto sub = [assign = s.assign](const Poly& p) { return substitute(p, assign); };
  auto star = [](std::string_view base, int m) {
    Poly out;
    for (int l = 0; l <= m; ++l) out += Poly::variable(var(base, {l, m - l}));
    return out;
  };
  if (which == Master::First || which == Master::Linear1 || which == Master::Linear2) {
    return {[=](int n) {
              Poly g = Poly::variable(var("e", {n}));
              if (n >= 1) g += star("c", n - 1) + star("d", n - 1);
              return sub(g);
            },
            [=](int n) { return sub(star("a", n - 1) * star("b", n - 1)); }};
  }
  const bool plain_e = s.e_includes_lambda;
  return {[=](int n) {
            Poly g = Poly::variable(var("e", {n}));
            if (!plain_e) g *= Poly::variable("lam");
            if (n >= 1) {
              g += star("c", n - 1);
              for (int l = 0; l <= n - 1; ++l) g += Poly::variable(var("d", {n - 1, l}));
            }
            return sub(g);
          },
          [=](int n) {
            const Poly lam_shift = Poly::variable("lam") + Poly(static_cast<long>(n - 1));
            return sub(lam_shift * Poly::variable(var("a", {n - 1})) * star("b", n - 1));
          }};
}

Series Q_cf(Master which, const WeightScheme& s, int order) {
  return jfraction_expand(Q_cf_spec(which, s), order);
}

}  // namespace permstat
