#include "permstat/verify.hpp"

#include <algorithm>
#include <chrono>
#include <random>
#include <set>

#include <json.hpp>

#include "permstat/bijections.hpp"
#include "permstat/master.hpp"
#include "permstat/reduce.hpp"
#include "permstat/refined.hpp"
#include "permstat/series.hpp"
#include "permstat/stats.hpp"

namespace permstat {

namespace {

using Key = std::vector<int>;

struct Run {
  const VerifyConfig& cfg;
  int lo = 0;
  int hi = 0;
  bool conjecture = false;
  bool failed = false;
  std::vector<std::string> witnesses;
  std::vector<std::string> notes;

  void fail(std::string w) {
    failed = true;
    witnesses.push_back(std::move(w));
  }
};

constexpr std::size_t kMaxWitnessChars = 600;

std::string clip(std::string s) {
  if (s.size() > kMaxWitnessChars) s = s.substr(0, kMaxWitnessChars) + " ...";
  return s;
}

std::string perm_witness(int n, const Permutation& p, const std::string& detail) {
  std::string s = "n=" + std::to_string(n) + " [" + p.to_string() + "]";
  if (!detail.empty()) s += ": " + detail;
  return clip(std::move(s));
}

/// Records a witness and returns false when lhs != rhs.
bool same(Run& run, int n, const std::string& what, const Poly& lhs, const Poly& rhs) {
  if (lhs == rhs) return true;
  run.fail(clip("n=" + std::to_string(n) + " " + what + ": lhs - rhs = " + (lhs - rhs).to_string()));
  return false;
}

/// bad(p) describes the violation, or is empty when p is fine.
template <class Bad>
bool holds(Run& run, int n, Filter filter, Bad&& bad) {
  auto v = first_violation(n, filter, [&](const Permutation& p) { return bad(p).empty(); });
  if (!v) return true;
  run.fail(perm_witness(n, *v, bad(*v)));
  return false;
}

/// Stops at the first failing n so the witness is minimal.
template <class Fn>
void for_n(Run& run, Fn&& fn) {
  for (int n = run.lo; n <= run.hi; ++n)
    if (!fn(n)) return;
}

std::string ints(const std::vector<int>& v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
  return s + ")";
}

std::string set_str(const IndexSet& s) {
  std::string out = "{";
  for (std::size_t i = 0; i < s.size(); ++i) out += (i ? "," : "") + std::to_string(s[i]);
  return out + "}";
}

std::vector<int> pick(const StatVector& sv, std::initializer_list<Stat> stats) {
  std::vector<int> out;
  for (Stat s : stats) out.push_back(sv[s]);
  return out;
}

std::string mismatch(const char* lhs, const std::vector<int>& a, const char* rhs, const std::vector<int>& b) {
  if (a == b) return {};
  return std::string(lhs) + "=" + ints(a) + " " + rhs + "=" + ints(b);
}

Tally<Key> joint(int n, Filter filter, const std::vector<Stat>& stats) {
  return tally_parallel<Key>(n, filter, [&](const Permutation& p) -> std::optional<Key> {
    const StatVector sv = stat_vector(p);
    Key k;
    k.reserve(stats.size());
    for (Stat s : stats) k.push_back(sv[s]);
    return k;
  });
}

Monomial mono(std::initializer_list<std::pair<VarId, int>> f) {
  Monomial m;
  for (auto [v, e] : f) {
    if (e < 0) throw std::logic_error("negative exponent for " + var_name(v));
    if (e > 0) m *= Monomial::of(v, static_cast<std::uint32_t>(e));
  }
  return m;
}

template <class Fn>
Poly from_tally(const Tally<Key>& t, Fn&& fn) {
  Poly out;
  for (const auto& [k, c] : t)
    if (std::optional<Monomial> m = fn(k)) out.add_term(*m, Rational(static_cast<unsigned long>(c)));
  return out;
}

struct Vars {
  VarId t = var("t"), lam = var("lam"), y = var("y"), w = var("w"), x = var("x");
};

Poly swap_vars(const Poly& p, VarId a, VarId b) {
  Assignment s;
  s.set(a, Poly::variable(b)).set(b, Poly::variable(a));
  return substitute(p, s);
}

Series family_series(Family f, int order) { return jfraction_expand(family_spec(f), std::max(order, 0)); }

// ---- checks ---------------------------------------------------------------

void thm1_2(Run& run) {
  const Vars v;
  const Series A = family_series(Family::A, run.hi);
  for_n(run, [&](int n) {
    enum { exc, pex, ear, fix, pcyc };
    const auto t = joint(n, Filter::All, {Stat::exc, Stat::pex, Stat::ear, Stat::fix, Stat::pcyc});
    const Poly e1 = from_tally(t, [&](const Key& k) { return mono({{v.t, k[exc]}, {v.lam, k[pex]}, {v.y, k[ear]}, {v.w, k[fix]}}); });
    const Poly e2 = from_tally(t, [&](const Key& k) { return mono({{v.t, k[exc]}, {v.lam, k[pcyc]}, {v.y, k[ear]}, {v.w, k[fix]}}); });
    const Poly e3 = from_tally(t, [&](const Key& k) { return mono({{v.t, k[exc]}, {v.lam, k[pcyc]}, {v.y, k[pex]}, {v.w, k[fix]}}); });
    return same(run, n, "t^exc lam^pex y^ear w^fix vs A", e1, A[n]) && same(run, n, "t^exc lam^pcyc y^ear w^fix vs A", e2, A[n]) &&
           same(run, n, "t^exc lam^pcyc y^pex w^fix vs A", e3, A[n]);
  });
}

void cor1_3(Run& run) {
  const Vars v;
  for_n(run, [&](int n) {
    const auto t = joint(n, Filter::All, {Stat::pex, Stat::ear, Stat::pcyc});
    auto bi = [&](int i, int j) { return from_tally(t, [&](const Key& k) { return mono({{v.x, k[i]}, {v.y, k[j]}}); }); };
    const Poly base = bi(0, 1);
    const std::pair<int, int> pairs[] = {{1, 0}, {1, 2}, {2, 1}, {0, 2}, {2, 0}};
    const char* names[] = {"(ear,pex)", "(ear,pcyc)", "(pcyc,ear)", "(pex,pcyc)", "(pcyc,pex)"};
    for (std::size_t i = 0; i < 5; ++i)
      if (!same(run, n, std::string(names[i]) + " vs (pex,ear)", bi(pairs[i].first, pairs[i].second), base))
        return false;
    return true;
  });
}

void thm1_4(Run& run) {
  const Vars v;
  const Series B = family_series(Family::B, run.hi);
  const Series egf = egf_B(std::max(run.hi, 0));
  Rational fact = 1;
  for_n(run, [&](int n) {
    if (n > 0) fact *= n;
    enum { exc, pcyc, fix, ear, pex, des, des2, fmax };
    const auto t = joint(n, Filter::All,
                         {Stat::exc, Stat::pcyc, Stat::fix, Stat::ear, Stat::pex, Stat::des, Stat::des2, Stat::fmax});
    const Poly f1 = from_tally(t, [&](const Key& k) { return mono({{v.t, k[exc]}, {v.lam, k[pcyc]}, {v.w, k[fix]}}); });
    const Poly f2 = from_tally(t, [&](const Key& k) { return mono({{v.t, k[exc]}, {v.lam, k[ear]}, {v.w, k[fix]}}); });
    const Poly f3 = from_tally(t, [&](const Key& k) { return mono({{v.t, k[exc]}, {v.lam, k[pex]}, {v.w, k[fix]}}); });
    const Poly f4 = from_tally(t, [&](const Key& k) { return mono({{v.t, k[des]}, {v.lam, k[des2]}, {v.w, k[fmax]}}); });
    return same(run, n, "t^exc lam^pcyc w^fix vs B", f1, B[n]) && same(run, n, "t^exc lam^ear w^fix vs B", f2, B[n]) &&
           same(run, n, "t^exc lam^pex w^fix vs B", f3, B[n]) && same(run, n, "t^des lam^des2 w^fmax vs B", f4, B[n]) &&
           same(run, n, "n! [z^n] egf vs B", egf[n].scale(fact), B[n]);
  });
}

void cor1_5(Run& run) {
  const Vars v;
  for_n(run, [&](int n) {
    enum { exc, pcyc, ear, des, des2, pex };
    const auto t = joint(n, Filter::All, {Stat::exc, Stat::pcyc, Stat::ear, Stat::des, Stat::des2, Stat::pex});
    auto bi = [&](int i, int j) { return from_tally(t, [&](const Key& k) { return mono({{v.x, k[i]}, {v.y, k[j]}}); }); };
    const Poly base = bi(exc, pcyc);
    return same(run, n, "(exc,ear) vs (exc,pcyc)", bi(exc, ear), base) &&
           same(run, n, "(des,des2) vs (exc,pcyc)", bi(des, des2), base) &&
           same(run, n, "(exc,pex) vs (exc,pcyc)", bi(exc, pex), base);
  });
}

void thm1_6c(Run& run) {
  const Vars v;
  const Series C = family_series(Family::C, run.hi);
  for_n(run, [&](int n) {
    enum { pex, ear, pcyc, fix, cyc };
    const auto t = joint(n, Filter::All, {Stat::pex, Stat::ear, Stat::pcyc, Stat::fix, Stat::cyc});
    struct Form {
      const char* name;
      int ystat;
      int lstat;
      int lextra;  // -1 for none
    };
    const Form forms[] = {
        {"y^pex lam^(ear+fix)", pex, ear, fix},   {"y^ear lam^(pex+fix)", ear, pex, fix},
        {"y^pcyc lam^(ear+fix)", pcyc, ear, fix}, {"y^ear lam^cyc", ear, cyc, -1},
        {"y^pcyc lam^(pex+fix)", pcyc, pex, fix}, {"y^pex lam^cyc", pex, cyc, -1},
    };
    for (const Form& f : forms) {
      const Poly p = from_tally(t, [&](const Key& k) {
        return mono({{v.y, k[f.ystat]}, {v.lam, k[f.lstat] + (f.lextra < 0 ? 0 : k[f.lextra])}});
      });
      if (!same(run, n, std::string(f.name) + " vs C", p, C[n])) return false;
    }
    return true;
  });
}

void derangements(Run& run) {
  const Vars v;
  const Series D = family_series(Family::D, run.hi);
  for_n(run, [&](int n) {
    enum { exc, pex, ear, cyc };
    const auto t = joint(n, Filter::Derangement, {Stat::exc, Stat::pex, Stat::ear, Stat::cyc});
    const Poly d1 = from_tally(t, [&](const Key& k) { return mono({{v.t, k[exc]}, {v.lam, k[pex]}, {v.y, k[ear]}}); });
    const Poly d2 = from_tally(t, [&](const Key& k) { return mono({{v.t, k[exc]}, {v.lam, k[cyc]}, {v.y, k[ear]}}); });
    const Poly d3 = from_tally(t, [&](const Key& k) { return mono({{v.t, k[exc]}, {v.lam, k[cyc]}, {v.y, k[pex]}}); });
    return same(run, n, "t^exc lam^pex y^ear vs D", d1, D[n]) && same(run, n, "t^exc lam^cyc y^ear vs D", d2, D[n]) &&
           same(run, n, "t^exc lam^cyc y^pex vs D", d3, D[n]);
  });
}

bool nonnegative_integer(const Poly& p) {
  return std::all_of(p.terms().begin(), p.terms().end(),
                     [](const auto& kv) { return kv.second.get_den() == 1 && kv.second >= 0; });
}

void gamma(Run& run) {
  const Vars v;
  const Series D = family_series(Family::D, run.hi);
  const Series G = family_series(Family::GammaD, run.hi);
  const int numeric_hi = std::min(run.hi, run.cfg.numeric_cap);
  for_n(run, [&](int n) {
    std::vector<Poly> g;
    try {
      g = gamma_decompose(D[n], n, v.t);
    } catch (const NotGammaExpressible& e) {
      run.fail("n=" + std::to_string(n) + " D_n not gamma-expressible, residual " + clip(e.residual().to_string()));
      return false;
    }
    enum { exc, pex, ear, cyc };
    const auto t = joint(n, Filter::DerangementNoCdrise, {Stat::exc, Stat::pex, Stat::ear, Stat::cyc});
    const std::pair<int, int> forms[] = {{pex, ear}, {cyc, ear}, {cyc, pex}};
    const char* names[] = {"gamma1 lam^pex y^ear", "gamma2 lam^cyc y^ear", "gamma3 lam^cyc y^pex"};
    Poly gt;
    for (std::size_t k = 0; k < g.size(); ++k) {
      if (!nonnegative_integer(g[k])) {
        run.fail("n=" + std::to_string(n) + " gamma_" + std::to_string(k) + " = " + g[k].to_string());
        return false;
      }
      gt += g[k] * Poly::monomial(mono({{v.t, static_cast<int>(k)}}));
      for (std::size_t f = 0; f < 3; ++f) {
        const auto [ls, ys] = forms[f];
        const Poly e = from_tally(t, [&](const Key& key) -> std::optional<Monomial> {
          if (key[exc] != static_cast<int>(k)) return std::nullopt;
          return mono({{v.lam, key[ls]}, {v.y, key[ys]}});
        });
        if (!same(run, n, std::string(names[f]) + " k=" + std::to_string(k), e, g[k])) return false;
      }
    }
    if (!same(run, n, "sum gamma_k t^k vs gamma J-fraction", gt, G[n])) return false;
    if (n <= numeric_hi) {
      if (!same(run, n, "first master under gamma1", Q_first(n, scheme_by_name("gamma1")), G[n])) return false;
      if (!same(run, n, "second master under gamma2", Q_second(n, scheme_by_name("gamma2")), G[n])) return false;
      if (!same(run, n, "dual master under gamma3", Q_second_dual(n, scheme_by_name("gamma3")), G[n])) return false;
    }
    return true;
  });
}

void gamma_inverse(Run& run) {
  for_n(run, [&](int n) {
    const bool ok = holds(run, n, Filter::DerangementNoCdrise, [](const Permutation& p) -> std::string {
      const Permutation q = inverse(p);
      const StatVector a = stat_vector(p), b = stat_vector(q);
      if (b[Stat::fix] != 0) return "inverse has a fixed point";
      if (b[Stat::drop] != a[Stat::exc]) return "drop(inverse) != exc";
      if (b[Stat::cdfall] != 0) return "inverse has a cycle double fall";
      return {};
    });
    if (!ok) return false;
    const auto star = tally_parallel<int>(n, Filter::DerangementNoCdrise,
                                          [](const Permutation& p) -> std::optional<int> { return stat_vector(p)[Stat::exc]; });
    const auto dstar = tally_parallel<int>(n, Filter::Derangement, [](const Permutation& p) -> std::optional<int> {
      const StatVector s = stat_vector(p);
      if (s[Stat::cdfall] != 0) return std::nullopt;
      return s[Stat::drop];
    });
    if (star != dstar) {
      run.fail("n=" + std::to_string(n) + " exc counts over cdrise-free derangements differ from drop counts over cdfall-free ones");
      return false;
    }
    return true;
  });
}

void thm1_8(Run& run) {
  for_n(run, [&](int n) {
    const bool ok = holds(run, n, Filter::All, [](const Permutation& p) -> std::string {
      const StatVector a = stat_vector(p);
      const Permutation q = phi1(p);
      const StatVector b = stat_vector(q);
      if (auto m = mismatch("(des,des2)", pick(a, {Stat::des, Stat::des2}), "(exc,ear)Phi1", pick(b, {Stat::exc, Stat::ear}));
          !m.empty())
        return m;
      if (phi1_inverse(q) != p) return "Phi1 round trip fails";
      const StatVector c = stat_vector(phi2(p));
      return mismatch("(des,des2,fmax)", pick(a, {Stat::des, Stat::des2, Stat::fmax}), "(exc,pex,fix)Phi2",
                      pick(c, {Stat::exc, Stat::pex, Stat::fix}));
    });
    if (!ok) return false;
    const auto images = tally_parallel<Permutation>(
        n, Filter::All, [](const Permutation& p) -> std::optional<Permutation> { return phi2(p); });
    std::uint64_t fact = 1;
    for (int i = 2; i <= n; ++i) fact *= static_cast<std::uint64_t>(i);
    if (images.size() != fact) {
      for (const auto& [q, c] : images)
        if (c > 1) {
          run.fail(perm_witness(n, q, "Phi2 image hit " + std::to_string(c) + " times"));
          return false;
        }
    }
    return true;
  });
}

void lemma1_12(Run& run) {
  for_n(run, [&](int n) {
    return holds(run, n, Filter::All, [](const Permutation& p) {
      return mismatch("(drop,pdrop,fix)", pick(stat_vector(p), {Stat::drop, Stat::pdrop, Stat::fix}),
                      "(exc,pex,fix)zeta", pick(stat_vector(zeta(p)), {Stat::exc, Stat::pex, Stat::fix}));
    });
  });
}

void lemma2_1(Run& run) {
  for_n(run, [&](int n) {
    return holds(run, n, Filter::All, [](const Permutation& p) -> std::string {
      const auto rhs = pick(stat_vector(p), {Stat::pcyc, Stat::exc, Stat::fix, Stat::cyc});
      if (auto m = mismatch("(des2,des,fmax,rec)varphi",
                            pick(stat_vector(foata_varphi(p)), {Stat::des2, Stat::des, Stat::fmax, Stat::rec}),
                            "(pcyc,exc,fix,cyc)", rhs);
          !m.empty())
        return m;
      return mismatch("(asc2,asc,fmin,lrm)phi",
                      pick(stat_vector(foata_phi(p)), {Stat::asc2, Stat::asc, Stat::fmin, Stat::lrm}),
                      "(pcyc,exc,fix,cyc)", rhs);
    });
  });
}

void lemma2_3(Run& run) {
  for_n(run, [&](int n) {
    return holds(run, n, Filter::All, [](const Permutation& p) -> std::string {
      const CycleSets cs = cycle_classify(p);
      const RefinedProfile prof = refined_profile(p);
      if (excedance_set(p).size() != cs.cval.size() + cs.cdrise.size()) return "exc != cval + cdrise";
      IndexSet pex, ear;
      for (int i : cs.cval)
        if (prof[i].ucross == 0) pex.push_back(i);
      for (int i : cs.cpeak)
        if (prof[i].lnest == 0) ear.push_back(i);
      if (pex != pex_set(p)) return "Pex=" + set_str(pex_set(p)) + " but cval with ucross 0 is " + set_str(pex);
      if (ear != ear_set(p)) return "Ear=" + set_str(ear_set(p)) + " but cpeak with lnest 0 is " + set_str(ear);
      if (ear != ear_set_by_records(p)) return "record reading of Ear gives " + set_str(ear_set_by_records(p));
      return {};
    });
  });
}

void pdrop_char(Run& run) {
  for_n(run, [&](int n) {
    return holds(run, n, Filter::All, [](const Permutation& p) -> std::string {
      const CycleSets cs = cycle_classify(p);
      const RefinedProfile prof = refined_profile(p);
      IndexSet pd;
      for (int i : cs.cpeak)
        if (prof[i].lcross == 0) pd.push_back(i);
      if (pd != pdrop_set(p)) return "Pdrop=" + set_str(pdrop_set(p)) + " but cpeak with lcross 0 is " + set_str(pd);
      return {};
    });
  });
}

void lemma2_5(Run& run) {
  for_n(run, [&](int n) {
    return holds(run, n, Filter::All, [](const Permutation& p) -> std::string {
      const RefinedProfile prof = refined_profile(phi1(p));
      const auto a = pattern_31_2(p), b = pattern_2_31(p);
      for (int i = 1; i <= p.size(); ++i) {
        if (prof[i].nest != a[static_cast<std::size_t>(i - 1)])
          return "nest(" + std::to_string(i) + ") != (31-2)(" + std::to_string(i) + ")";
        if (prof[i].icross != b[static_cast<std::size_t>(i - 1)])
          return "icross(" + std::to_string(i) + ") != (2-31)(" + std::to_string(i) + ")";
      }
      return {};
    });
  });
}

IndexSet set_union(const IndexSet& a, const IndexSet& b) {
  IndexSet out;
  std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

void lemma2_7(Run& run) {
  for_n(run, [&](int n) {
    return holds(run, n, Filter::All, [](const Permutation& p) -> std::string {
      const CycleSets cs = cycle_classify(phi1(p));
      const LinearSets ls = linear_classify(p, Boundary::ZeroInf);
      if (cs.cpeak != ls.peak) return "Cpeak(Phi1)=" + set_str(cs.cpeak) + " Peak=" + set_str(ls.peak);
      if (cs.cval != ls.val) return "Cval(Phi1)=" + set_str(cs.cval) + " Valley=" + set_str(ls.val);
      if (cs.cdrise != ls.ddes) return "Cdrise(Phi1)=" + set_str(cs.cdrise) + " Ddes=" + set_str(ls.ddes);
      if (const IndexSet u = set_union(cs.cdfall, cs.fix); u != ls.dasc)
        return "Cdfall+Fix(Phi1)=" + set_str(u) + " Dasc=" + set_str(ls.dasc);
      return {};
    });
  });
}

void lemma2_8(Run& run) {
  for_n(run, [&](int n) {
    return holds(run, n, Filter::All, [](const Permutation& p) -> std::string {
      const RefinedProfile prof = refined_profile(phi_sz(p));
      const auto a = pattern_31_2(p), b = pattern_2_31(p);
      for (int i = 1; i <= p.size(); ++i) {
        if (prof[i].cross != a[static_cast<std::size_t>(i - 1)])
          return "cross(" + std::to_string(i) + ") != (31-2)(" + std::to_string(i) + ")";
        if (prof[i].nest != b[static_cast<std::size_t>(i - 1)])
          return "nest(" + std::to_string(i) + ") != (2-31)(" + std::to_string(i) + ")";
      }
      return {};
    });
  });
}

void lemma2_9(Run& run) {
  for_n(run, [&](int n) {
    return holds(run, n, Filter::All, [](const Permutation& p) -> std::string {
      const Permutation q = phi_sz(p);
      if (auto m = mismatch("(des,des2,fmax)", pick(stat_vector(p), {Stat::des, Stat::des2, Stat::fmax}),
                            "(drop,pdrop,fix)PhiSZ", pick(stat_vector(q), {Stat::drop, Stat::pdrop, Stat::fix}));
          !m.empty())
        return m;
      const CycleSets cs = cycle_classify(q);
      const LinearSets ls = linear_classify(p, Boundary::ZeroInf);
      if (cs.cval != ls.val) return "Cval(PhiSZ)=" + set_str(cs.cval) + " Valley=" + set_str(ls.val);
      if (cs.cpeak != ls.peak) return "Cpeak(PhiSZ)=" + set_str(cs.cpeak) + " Peak=" + set_str(ls.peak);
      if (cs.cdfall != ls.ddes) return "Cdfall(PhiSZ)=" + set_str(cs.cdfall) + " Ddes=" + set_str(ls.ddes);
      if (const IndexSet u = set_union(cs.cdrise, cs.fix); u != ls.dasc)
        return "Cdrise+Fix(PhiSZ)=" + set_str(u) + " Dasc=" + set_str(ls.dasc);
      if (cs.fix != ls.fmax()) return "Fix(PhiSZ)=" + set_str(cs.fix) + " Fmax=" + set_str(ls.fmax());
      return {};
    });
  });
}

void eq_comp(Run& run) {
  for_n(run, [&](int n) {
    return holds(run, n, Filter::All, [](const Permutation& p) {
      return mismatch("(des2,des,fmax,rec)", pick(stat_vector(p), {Stat::des2, Stat::des, Stat::fmax, Stat::rec}),
                      "(asc2,asc,fmin,lrm)complement",
                      pick(stat_vector(complement(p)), {Stat::asc2, Stat::asc, Stat::fmin, Stat::lrm}));
    });
  });
}

void master_vs_cf(Run& run, Master m, const std::vector<std::string>& schemes) {
  const int sym_hi = std::min(run.hi, run.cfg.symbolic_cap);
  const int num_hi = std::min(run.hi, run.cfg.numeric_cap);
  const Series A = family_series(Family::A, num_hi);
  if (sym_hi >= run.lo) {
    const Series cf = Q_cf(m, scheme_symbolic(), sym_hi);
    for (int n = run.lo; n <= sym_hi; ++n) {
      const Poly enumerated =
          m == Master::First ? Q_first_symbolic(n) : Q_second_symbolic(n, false);
      if (!same(run, n, "symbolic enumeration vs J-fraction", enumerated, cf[n])) return;
    }
  }
  for (const std::string& name : schemes) {
    const WeightScheme s = scheme_by_name(name);
    const Series cf = Q_cf(m, s, std::max(num_hi, 0));
    for (int n = run.lo; n <= num_hi; ++n) {
      const Poly enumerated = Q_master(m, n, s);
      if (!same(run, n, name + " enumeration vs J-fraction", enumerated, cf[n])) return;
      if (name.rfind("case", 0) == 0 && name != "case1bis" && !same(run, n, name + " vs A", enumerated, A[n])) return;
    }
  }
}

void thm1_9(Run& run) { master_vs_cf(run, Master::First, {"case1", "gamma1", "case1bis"}); }
void thm1_11(Run& run) { master_vs_cf(run, Master::Second, {"case2", "gamma2", "case3", "gamma3"}); }

void prop1_10(Run& run) {
  const int sym_hi = std::min(run.hi, run.cfg.symbolic_cap);
  const int num_hi = std::min(run.hi, run.cfg.numeric_cap);
  for (int n = run.lo; n <= sym_hi; ++n)
    for (bool flag : {false, true})
      if (!same(run, n, flag ? "second vs dual (lam^pcyc)" : "second vs dual", Q_second_symbolic(n, flag),
                Q_dual_symbolic(n, flag)))
        return;
  const Series A = family_series(Family::A, num_hi);
  for (int n = run.lo; n <= num_hi; ++n)
    if (!same(run, n, "dual under case3 vs A", Q_second_dual(n, scheme_by_name("case3")), A[n])) return;
}

void linear_vs_cyclic(Run& run, Master which) {
  const int sym_hi = std::min(run.hi, run.cfg.symbolic_cap);
  const int num_hi = std::min(run.hi, run.cfg.numeric_cap);
  const char* name = which == Master::Linear1 ? "linear1" : "linear2";
  try {
    for (int n = run.lo; n <= sym_hi; ++n) {
      const Poly lin = which == Master::Linear1 ? Q_linear1_symbolic(n) : Q_linear2_symbolic(n);
      if (!same(run, n, std::string(name) + " vs first master", lin, Q_first_symbolic(n))) return;
    }
    const Series A = family_series(Family::A, num_hi);
    const WeightScheme s = scheme_by_name("case1");
    for (int n = std::max(run.lo, sym_hi + 1); n <= num_hi; ++n)
      if (!same(run, n, std::string(name) + " under case1 vs A", Q_master(which, n, s), A[n])) return;
  } catch (const NegativeIndex& e) {
    run.fail(perm_witness(e.witness().size(), e.witness(), e.what()));
  }
}

void thm3_1(Run& run) { linear_vs_cyclic(run, Master::Linear1); }
void thm3_2(Run& run) { linear_vs_cyclic(run, Master::Linear2); }

void arda_fix(Run& run) {
  for_n(run, [&](int n) {
    return holds(run, n, Filter::All, [](const Permutation& p) -> std::string {
      const IndexSet arda = linear_classify(p, Boundary::ZeroInf).arda();
      const IndexSet fix = cycle_classify(phi1(p)).fix;
      if (arda == fix) return {};
      return "Arda=" + set_str(arda) + " Fix(Phi1)=" + set_str(fix);
    });
  });
}

void linear_a(Run& run) {
  const Vars v;
  const Series A = family_series(Family::A, run.hi);
  bool unpadded_noted = false;
  for_n(run, [&](int n) {
    const auto t = tally_parallel<Key>(n, Filter::All, [](const Permutation& p) -> std::optional<Key> {
      const StatVector s = stat_vector(p);
      const PureCounts pc = pval_ppeak(p);
      return Key{s[Stat::asc_padded], s[Stat::asc], s[Stat::fmax], pc.pval, pc.ppeak};
    });
    if (!unpadded_noted)
      for (const auto& [k, c] : t)
        if (k[1] < k[2]) {
          run.notes.push_back("unpadded asc - fmax is negative at n=" + std::to_string(n) + "; the identity needs asc with position n counted");
          unpadded_noted = true;
          break;
        }
    const Poly lin = from_tally(t, [&](const Key& k) {
      return mono({{v.t, k[0] - k[2]}, {v.lam, k[3]}, {v.y, k[4]}, {v.w, k[2]}});
    });
    return same(run, n, "linear A vs A", lin, A[n]);
  });
}

std::vector<int> subset_of(unsigned mask, int n) {
  std::vector<int> S;
  for (int x = 1; x <= n; ++x)
    if (mask & (1u << (x - 1))) S.push_back(x);
  return S;
}

void lemma4_4(Run& run) {
  const int hi = std::min(run.hi, run.cfg.orbit_cap);
  const int all_hi = run.cfg.hop_cap;
  const int samples = run.cfg.hop_samples;
  auto quint = [](const Permutation& p) {
    const StatVector s = stat_vector(p);
    const PureCounts pc = pval_ppeak(p);
    return std::vector<int>{s[Stat::peak], s[Stat::val], s[Stat::fmax], pc.ppeak, pc.pval};
  };
  for (int n = run.lo; n <= hi; ++n) {
    const bool ok = holds(run, n, Filter::All, [&](const Permutation& p) -> std::string {
      const auto base = quint(p);
      auto test = [&](unsigned mask) -> std::string {
        const auto S = subset_of(mask, n);
        const Permutation q = valley_hop_set(p, S);
        if (quint(q) == base) return {};
        return "S=" + ints(S) + " gives [" + q.to_string() + "], (peak,val,fmax,ppeak,pval) " + ints(base) +
               " -> " + ints(quint(q));
      };
      if (n <= all_hi) {
        for (unsigned mask = 0; mask < (1u << n); ++mask)
          if (auto m = test(mask); !m.empty()) return m;
      } else {
        std::seed_seq seq(p.word().begin(), p.word().end());
        std::mt19937 rng(seq);
        std::uniform_int_distribution<unsigned> pickm(0, (1u << n) - 1);
        for (int i = 0; i < samples; ++i)
          if (auto m = test(pickm(rng)); !m.empty()) return m;
      }
      return {};
    });
    if (!ok) return;
  }
  if (hi > all_hi)
    run.notes.push_back(std::to_string(samples) + " sampled subsets per permutation for n > " + std::to_string(all_hi));
}

void orbit(Run& run) {
  const Vars v;
  const int hi = std::min(run.hi, run.cfg.orbit_cap);
  const Poly t = Poly::variable(v.t);
  const Poly one_t = t + Poly(1L);
  for (int n = run.lo; n <= hi; ++n) {
    std::set<Permutation> seen;
    std::uint64_t covered = 0;
    for (const Permutation& p : enumerate(n, Filter::All, kHardNCeiling)) {
      if (seen.count(p)) continue;
      Orbit o;
      try {
        o = orbit_of(p);
      } catch (const std::logic_error& e) {
        run.fail(perm_witness(n, p, e.what()));
        return;
      }
      Poly sum;
      for (const Permutation& q : o.members) {
        const StatVector s = stat_vector(q);
        sum += Poly::monomial(mono({{v.t, s[Stat::asc_padded] - s[Stat::fmax]}}));
        seen.insert(q);
      }
      covered += o.members.size();
      const StatVector r = stat_vector(o.representative);
      const Poly expect = Poly::monomial(mono({{v.t, r[Stat::val]}})) *
                          one_t.pow(static_cast<unsigned>(r[Stat::dasc] - r[Stat::fmax]));
      if (sum != expect) {
        run.fail(perm_witness(n, o.representative, "orbit sum " + sum.to_string() + " expected " + expect.to_string()));
        return;
      }
    }
    std::uint64_t fact = 1;
    for (int i = 2; i <= n; ++i) fact *= static_cast<std::uint64_t>(i);
    if (covered != fact) {
      run.fail("n=" + std::to_string(n) + " orbits cover " + std::to_string(covered) + " permutations");
      return;
    }
  }
}

void thm4_3(Run& run) {
  const Vars v;
  const Series D = family_series(Family::D, run.hi);
  const Poly one_t = Poly::variable(v.t) + Poly(1L);
  for_n(run, [&](int n) {
    enum { ascp, fmax, pval, ppeak, ddes, des };
    const auto t = tally_parallel<Key>(n, Filter::All, [](const Permutation& p) -> std::optional<Key> {
      const StatVector s = stat_vector(p);
      const PureCounts pc = pval_ppeak(p);
      return Key{s[Stat::asc_padded], s[Stat::fmax], pc.pval, pc.ppeak, s[Stat::ddes], s[Stat::des]};
    });
    const Poly dlin = from_tally(t, [&](const Key& k) -> std::optional<Monomial> {
      if (k[fmax] != 0) return std::nullopt;
      return mono({{v.t, k[ascp]}, {v.lam, k[pval]}, {v.y, k[ppeak]}});
    });
    if (!same(run, n, "linear D vs D", dlin, D[n])) return false;
    // S*_{n,j}(k): fmax = j, no double descents, des = k.
    auto star = [&](int j, int k) {
      return from_tally(t, [&](const Key& key) -> std::optional<Monomial> {
        if (key[fmax] != j || key[ddes] != 0 || key[des] != k) return std::nullopt;
        return mono({{v.lam, key[pval]}, {v.y, key[ppeak]}});
      });
    };
    const std::vector<Poly> g = gamma_decompose(D[n], n, v.t);
    for (std::size_t k = 0; k < g.size(); ++k)
      if (!same(run, n, "gamma4 k=" + std::to_string(k), star(0, static_cast<int>(k)), g[k])) return false;
    for (int j = 0; j <= n; ++j) {
      const Poly lhs = from_tally(t, [&](const Key& key) -> std::optional<Monomial> {
        if (key[fmax] != j) return std::nullopt;
        return mono({{v.t, key[ascp] - j}, {v.lam, key[pval]}, {v.y, key[ppeak]}});
      });
      Poly rhs;
      for (int k = 0; 2 * k <= n - j; ++k)
        rhs += star(j, k) * Poly::monomial(mono({{v.t, k}})) * one_t.pow(static_cast<unsigned>(n - j - 2 * k));
      if (!same(run, n, "fmax gamma expansion j=" + std::to_string(j), lhs, rhs)) return false;
    }
    return true;
  });
}

Poly bivariate(const Tally<Key>& t, int i, int j) {
  const Vars v;
  return from_tally(t, [&](const Key& k) { return mono({{v.x, k[static_cast<std::size_t>(i)]}, {v.y, k[static_cast<std::size_t>(j)]}}); });
}

void conj1_1(Run& run) {
  for_n(run, [&](int n) {
    const auto t = joint(n, Filter::All, {Stat::des2, Stat::pex, Stat::cyc});
    return same(run, n, "(des2,cyc) vs (pex,cyc)", bivariate(t, 0, 2), bivariate(t, 1, 2));
  });
}

void conj5_1(Run& run) {
  const Vars v;
  for_n(run, [&](int n) {
    const Poly P = bivariate(joint(n, Filter::All, {Stat::des2, Stat::ear}), 0, 1);
    return same(run, n, "P(x,y) vs P(y,x)", P, swap_vars(P, v.x, v.y));
  });
}

void conj5_2(Run& run) {
  const Vars v;
  const Series C = family_series(parse_family("conj52"), run.hi);
  for_n(run, [&](int n) {
    const auto t = joint(n, Filter::All, {Stat::des2, Stat::cyc});
    const Poly p = from_tally(t, [&](const Key& k) { return mono({{v.y, k[0]}, {v.lam, k[1]}}); });
    return same(run, n, "sum y^des2 lam^cyc vs J-fraction", p, C[n]);
  });
}

/// First monomial on which two polynomials disagree, with both coefficients.
std::string first_difference(const Poly& a, const Poly& b) {
  const Poly d = a - b;
  const auto terms = canonical_terms(d);
  if (terms.empty()) return {};
  const Monomial& m = terms.front().first;
  auto coeff = [&](const Poly& p) {
    auto it = p.terms().find(m);
    return it == p.terms().end() ? std::string("0") : rational_string(it->second);
  };
  return Poly::monomial(m).to_string() + ": " + coeff(a) + " vs " + coeff(b);
}

void negative_results(Run& run) {
  const Vars v;
  {
    const auto t = joint(4, Filter::All, {Stat::des2, Stat::pex, Stat::fix});
    const Poly a = bivariate(t, 0, 2), b = bivariate(t, 1, 2);
    if (a == b)
      run.fail("n=4 (des2,fix) and (pex,fix) are equidistributed");
    else
      run.witnesses.push_back("n=4 (des2,fix) vs (pex,fix) differ at x^i y^j = " + first_difference(a, b));
  }
  {
    const Poly P = bivariate(joint(6, Filter::All, {Stat::des2, Stat::pex}), 0, 1);
    const Poly Q = swap_vars(P, v.x, v.y);
    if (P == Q)
      run.fail("n=6 sum x^des2 y^pex is symmetric");
    else
      run.witnesses.push_back("n=6 sum x^des2 y^pex vs its swap differ at " + first_difference(P, Q));
  }
}

void symmetry_a(Run& run) {
  const Vars v;
  const int hi = std::min(run.hi, run.cfg.cf_order);
  const Series A = family_series(Family::A, hi), B = family_series(Family::B, hi), C = family_series(Family::C, hi),
               D = family_series(Family::D, hi);
  const Poly lam = Poly::variable(v.lam);
  for (int n = run.lo; n <= hi; ++n) {
    if (!same(run, n, "A(t,lam,y,w) vs A(t,y,lam,w)", A[n], swap_vars(A[n], v.lam, v.y))) return;
    Assignment yb;
    yb.set(v.y, Poly(1L));
    if (!same(run, n, "A at y=1 vs B", substitute(A[n], yb), B[n])) return;
    Assignment wd;
    wd.set(v.w, Poly());
    if (!same(run, n, "A at w=0 vs D", substitute(A[n], wd), D[n])) return;
    Assignment tc;
    tc.set(v.t, Poly(1L)).set(v.w, lam);
    if (!same(run, n, "A at t=1, w=lam vs C", substitute(A[n], tc), C[n])) return;
  }
}

void upsnest_lpsnest(Run& run) {
  const int hi = std::min(run.hi, run.cfg.engine_cap);
  for (int n = run.lo; n <= hi; ++n) {
    const bool ok = holds(run, n, Filter::All, [](const Permutation& p) -> std::string {
      const ArcTotals a = arc_totals(p);
      if (a.upsnest != a.lpsnest)
        return "upsnest=" + std::to_string(a.upsnest) + " lpsnest=" + std::to_string(a.lpsnest);
      return {};
    });
    if (!ok) return;
  }
}

void refined_engines(Run& run) {
  const int hi = std::min(run.hi, run.cfg.engine_cap);
  for (int n = run.lo; n <= hi; ++n) {
    const bool ok = holds(run, n, Filter::All, [](const Permutation& p) -> std::string {
      const RefinedProfile fast = refined_profile(p), slow = refined_profile_reference(p);
      if (fast == slow) return {};
      for (int i = 1; i <= p.size(); ++i)
        if (!(fast[i] == slow[i])) return "vertex " + std::to_string(i) + " differs";
      return "profiles differ";
    });
    if (!ok) return;
  }
}

void cf_engines(Run& run) {
  const int order = run.cfg.cf_order;
  for (Family f : {Family::A, Family::B, Family::C, Family::D, Family::GammaD}) {
    const Series a = jfraction_expand(family_spec(f), order, CfBackend::Motzkin);
    const Series b = jfraction_expand(family_spec(f), order, CfBackend::Nested);
    for (int n = 0; n <= order; ++n)
      if (!same(run, n, std::string(family_name(f)) + " Motzkin vs nested", a[n], b[n])) return;
  }
  for (const char* name : {"case1", "case2"}) {
    const Master m = std::string(name) == "case1" ? Master::First : Master::Second;
    const JFractionSpec spec = Q_cf_spec(m, scheme_by_name(name));
    const Series a = jfraction_expand(spec, order, CfBackend::Motzkin);
    const Series b = jfraction_expand(spec, order, CfBackend::Nested);
    for (int n = 0; n <= order; ++n)
      if (!same(run, n, std::string(name) + " master J-fraction Motzkin vs nested", a[n], b[n])) return;
  }
  const int sym = run.cfg.symbolic_cap;
  const JFractionSpec spec = Q_cf_spec(Master::First, scheme_symbolic());
  const Series a = jfraction_expand(spec, sym, CfBackend::Motzkin);
  const Series b = jfraction_expand(spec, sym, CfBackend::Nested);
  for (int n = 0; n <= sym; ++n)
    if (!same(run, n, "symbolic first J-fraction Motzkin vs nested", a[n], b[n])) return;
}

// ---- registry -------------------------------------------------------------

struct Entry {
  CheckInfo info;
  void (*run)(Run&);
  // Range for a requested n_max; caps come from the config.
  std::pair<int, int> (*range)(int n_max, const VerifyConfig& cfg);
};

std::pair<int, int> upto(int n_max, const VerifyConfig&) { return {0, n_max}; }
std::pair<int, int> upto_engine(int n_max, const VerifyConfig& c) { return {0, std::min(n_max, c.engine_cap)}; }
std::pair<int, int> upto_orbit(int n_max, const VerifyConfig& c) { return {0, std::min(n_max, c.orbit_cap)}; }
std::pair<int, int> upto_numeric(int n_max, const VerifyConfig& c) {
  return {0, std::min(n_max, std::max(c.numeric_cap, c.symbolic_cap))};
}
std::pair<int, int> upto_cf(int n_max, const VerifyConfig& c) { return {0, std::min(n_max, c.cf_order)}; }
std::pair<int, int> fixed_4_6(int, const VerifyConfig&) { return {4, 6}; }
std::pair<int, int> cf_only(int, const VerifyConfig& c) { return {0, c.cf_order}; }

const std::vector<Entry>& entries() {
  static const std::vector<Entry> e = {
      {{"thm1.2", "three cyclic interpretations of A against its J-fraction", false}, thm1_2, upto},
      {{"cor1.3", "six bistatistics on pex, ear, pcyc equidistributed", false}, cor1_3, upto},
      {{"thm1.4", "four interpretations of B and its exponential generating function", false}, thm1_4, upto},
      {{"cor1.5", "(exc,pcyc), (exc,ear), (des,des2), (exc,pex) equidistributed", false}, cor1_5, upto},
      {{"thm1.6c", "six interpretations of C", false}, thm1_6c, upto},
      {{"derangements", "three interpretations of D over derangements", false}, derangements, upto},
      {{"gamma", "gamma coefficients of D against cdrise-free derangements", false}, gamma, upto},
      {{"gamma-inverse", "inverse maps cdrise-free derangements to cdfall-free ones", false}, gamma_inverse, upto},
      {{"thm1.8", "Phi1 and Phi2 transport des, des2, fmax", false}, thm1_8, upto},
      {{"lemma1.12", "(drop,pdrop,fix) = (exc,pex,fix) after zeta", false}, lemma1_12, upto},
      {{"lemma2.1", "Foata-type maps send cycle statistics to record statistics", false}, lemma2_1, upto},
      {{"lemma2.3", "exc = cval + cdrise; Pex and Ear through crossings and nestings", false}, lemma2_3, upto},
      {{"pdrop-char", "Pdrop is the set of cycle peaks with no lower crossing", false}, pdrop_char, upto},
      {{"lemma2.5", "nest and icross of Phi1 are the vincular pattern counts", false}, lemma2_5, upto},
      {{"lemma2.7", "cycle types of Phi1 are linear types", false}, lemma2_7, upto},
      {{"lemma2.8", "cross and nest of PhiSZ are the vincular pattern counts", false}, lemma2_8, upto},
      {{"lemma2.9", "PhiSZ sends (des,des2,fmax) to (drop,pdrop,fix), set version included", false}, lemma2_9, upto},
      {{"eq-comp", "(des2,des,fmax,rec) = (asc2,asc,fmin,lrm) after complement", false}, eq_comp, upto},
      {{"thm1.9", "first master polynomial equals its J-fraction", false}, thm1_9, upto_numeric},
      {{"thm1.11", "second master polynomial equals its J-fraction", false}, thm1_11, upto_numeric},
      {{"prop1.10", "second master polynomial equals its dual form", false}, prop1_10, upto_numeric},
      {{"thm3.1", "first linear version equals the first master polynomial", false}, thm3_1, upto_numeric},
      {{"thm3.2", "second linear version equals the first master polynomial", false}, thm3_2, upto_numeric},
      {{"arda-fix", "Arda equals Fix after Phi1", false}, arda_fix, upto},
      {{"linearA", "linear interpretation of A", false}, linear_a, upto},
      {{"lemma4.4", "(peak,val,fmax,ppeak,pval) invariant under valley hopping", false}, lemma4_4, upto_orbit},
      {{"orbit", "orbit sums of t^(asc-fmax)", false}, orbit, upto_orbit},
      {{"thm4.3", "linear D, its gamma coefficients and the fmax refinement", false}, thm4_3, upto},
      {{"symmetry-A", "A symmetric in lam and y; B, C, D as specializations", false}, symmetry_a, upto_cf},
      {{"upsnest-lpsnest", "upper and lower pseudo-nestings agree", false}, upsnest_lpsnest, upto_engine},
      {{"refined-engines", "O(n^2) and O(n^4) refined statistics agree", false}, refined_engines, upto_engine},
      {{"cf-engines", "Motzkin and nested J-fraction backends agree", false}, cf_engines, cf_only},
      {{"negative-results", "(des2,fix) vs (pex,fix) differ on S4; (des2,pex) asymmetric on S6", false},
       negative_results, fixed_4_6},
      {{"conj1.1", "(des2,cyc) and (pex,cyc) equidistributed", true}, conj1_1, upto},
      {{"conj5.1", "(des2,ear) symmetric", true}, conj5_1, upto},
      {{"conj5.2", "sum y^des2 lam^cyc has J-fraction gamma=lam+2n, beta=(lam+n-1)(y+n-1)", true}, conj5_2, upto},
  };
  return e;
}

const Entry& find_entry(std::string_view id) {
  for (const Entry& e : entries())
    if (e.info.id == id) return e;
  throw UnknownCheckId(std::string(id));
}

}  // namespace

std::string_view verdict_name(Verdict v) {
  switch (v) {
    case Verdict::Pass: return "pass";
    case Verdict::Fail: return "fail";
    case Verdict::ConjectureHolds: return "conjecture-holds";
    case Verdict::ConjectureFails: return "conjecture-fails";
  }
  return "?";
}

UnknownCheckId::UnknownCheckId(const std::string& id) : std::invalid_argument("unknown check id '" + id + "'") {}

std::string Report::to_json() const {
  nlohmann::ordered_json j;
  j["check_id"] = check_id;
  j["n_range"] = {n_min, n_max};
  j["verdict"] = verdict_name(verdict);
  j["witnesses"] = witnesses;
  if (!notes.empty()) j["notes"] = notes;
  j["runtime_ms"] = runtime_ms;
  return j.dump();
}

const std::vector<CheckInfo>& check_list() {
  static const std::vector<CheckInfo> list = [] {
    std::vector<CheckInfo> out;
    for (const Entry& e : entries()) out.push_back(e.info);
    return out;
  }();
  return list;
}

Report check(std::string_view check_id, int n_max, const VerifyConfig& cfg) {
  const Entry& e = find_entry(check_id);
  if (n_max < 0) throw std::invalid_argument("n_max must be non-negative");
  check_n(n_max, kHardNCeiling);
  auto [lo, hi] = e.range(n_max, cfg);
  if (auto it = cfg.caps.find(e.info.id); it != cfg.caps.end()) hi = std::min(hi, it->second);

  Run run{cfg, lo, hi, e.info.conjecture, false, {}, {}};
  const auto start = std::chrono::steady_clock::now();
  e.run(run);
  const auto stop = std::chrono::steady_clock::now();

  Report r;
  r.check_id = e.info.id;
  r.n_min = lo;
  r.n_max = hi;
  if (e.info.conjecture)
    r.verdict = run.failed ? Verdict::ConjectureFails : Verdict::ConjectureHolds;
  else
    r.verdict = run.failed ? Verdict::Fail : Verdict::Pass;
  r.witnesses = std::move(run.witnesses);
  r.notes = std::move(run.notes);
  r.runtime_ms = std::chrono::duration<double, std::milli>(stop - start).count();
  return r;
}

std::vector<Report> run_all(int n_max, const VerifyConfig& cfg) {
  std::vector<Report> out;
  for (const Entry& e : entries()) out.push_back(check(e.info.id, n_max, cfg));
  return out;
}

bool any_theorem_failed(const std::vector<Report>& reports) {
  return std::any_of(reports.begin(), reports.end(), [](const Report& r) { return r.failed_theorem(); });
}

std::string summarize(const std::vector<Report>& reports, DigestFormat format) {
  if (format == DigestFormat::Json) {
    nlohmann::ordered_json j;
    j["reports"] = nlohmann::json::array();
    for (const Report& r : reports) j["reports"].push_back(nlohmann::ordered_json::parse(r.to_json()));
    std::vector<std::string> non_pass;
    for (const Report& r : reports)
      if (r.verdict != Verdict::Pass && r.verdict != Verdict::ConjectureHolds) non_pass.push_back(r.check_id);
    j["non_pass"] = non_pass;
    j["theorem_failure"] = any_theorem_failed(reports);
    return j.dump(2) + "\n";
  }
  std::string out;
  int theorems = 0, passed = 0, conj_hold = 0, conj_total = 0;
  for (const Report& r : reports) {
    char line[160];
    std::snprintf(line, sizeof line, "%-18s n=%d..%-3d %-17s %9.1f ms\n", r.check_id.c_str(), r.n_min, r.n_max,
                  std::string(verdict_name(r.verdict)).c_str(), r.runtime_ms);
    out += line;
    for (const auto& w : r.witnesses) out += "    witness: " + w + "\n";
    for (const auto& n : r.notes) out += "    note: " + n + "\n";
    if (r.is_conjecture()) {
      ++conj_total;
      conj_hold += r.verdict == Verdict::ConjectureHolds;
    } else {
      ++theorems;
      passed += r.verdict == Verdict::Pass;
    }
  }
  out += "theorems: " + std::to_string(passed) + "/" + std::to_string(theorems) + " pass; conjectures: " +
         std::to_string(conj_hold) + "/" + std::to_string(conj_total) + " hold\n";
  return out;
}

}  // namespace permstat
