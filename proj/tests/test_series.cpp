#include <gtest/gtest.h>

#include "oracle.hpp"
#include "permstat/reduce.hpp"
#include "permstat/series.hpp"
#include "permstat/stats.hpp"

using namespace permstat;

namespace {

Poly v(const char* name) { return Poly::variable(name); }

Series from(std::vector<Poly> c) { return Series(std::move(c)); }

Rational factorial(int n) {
  Rational f = 1;
  for (int i = 2; i <= n; ++i) f *= i;
  return f;
}

}  // namespace

TEST(Series, ExpLogInverse) {
  const Series z = from({Poly(), Poly(1L), Poly(), Poly()});
  EXPECT_EQ(series_exp(z), from({Poly(1L), Poly(1L), Poly(Rational(1, 2)), Poly(Rational(1, 6))}));
  const Series one_plus_z = from({Poly(1L), Poly(1L), Poly(), Poly()});
  EXPECT_EQ(series_log(one_plus_z), from({Poly(), Poly(1L), Poly(Rational(-1, 2)), Poly(Rational(1, 3))}));
  const Series one_minus_z = from({Poly(1L), Poly(-1L), Poly(), Poly(), Poly()});
  EXPECT_EQ(series_inverse(one_minus_z), from({Poly(1L), Poly(1L), Poly(1L), Poly(1L), Poly(1L)}));
  EXPECT_THROW(series_exp(one_plus_z), BadConstantTerm);
  EXPECT_THROW(series_log(z), BadConstantTerm);
  EXPECT_THROW(series_inverse(z), BadConstantTerm);
}

TEST(Series, ExpOfLogIsIdentity) {
  const Series s = from({Poly(1L), v("t"), v("lam") * v("t"), Poly(3L), v("y")});
  EXPECT_EQ(series_exp(series_log(s)), s);
  EXPECT_EQ(series_mul(s, series_inverse(s)), from({Poly(1L), Poly(), Poly(), Poly(), Poly()}));
}

TEST(JFraction, HandExpansion) {
  const Series a = jfraction_expand(family_spec(Family::A), 2);
  EXPECT_EQ(a[0], Poly(1L));
  EXPECT_EQ(a[1], v("w"));
  EXPECT_EQ(a[2], v("w").pow(2) + v("t") * v("lam") * v("y"));
}

TEST(JFraction, Catalan) {
  const JFractionSpec dyck{[](int) { return Poly(); }, [](int) { return Poly(1L); }};
  const long catalan[] = {1, 1, 2, 5, 14, 42};
  for (CfBackend b : {CfBackend::Motzkin, CfBackend::Nested}) {
    const Series s = jfraction_expand(dyck, 10, b);
    for (int n = 0; n <= 10; ++n) EXPECT_EQ(s[n], n % 2 ? Poly() : Poly(catalan[n / 2])) << n;
  }
}

TEST(JFraction, Geometric) {
  const JFractionSpec geo{[](int n) { return n == 0 ? Poly::variable("w") : Poly(); }, [](int) { return Poly(); }};
  const Series s = jfraction_expand(geo, 6);
  for (int n = 0; n <= 6; ++n) EXPECT_EQ(s[n], v("w").pow(static_cast<unsigned>(n)));
}

TEST(JFraction, MatchesPathListing) {
  for (Family f : {Family::A, Family::C, Family::GammaD}) {
    const JFractionSpec spec = family_spec(f);
    const Series s = jfraction_expand(spec, 7);
    for (int n = 0; n <= 7; ++n) EXPECT_EQ(s[n], oracle::motzkin_sum(n, spec.gamma, spec.beta)) << n;
  }
}

TEST(JFraction, BackendsAgree) {
  for (Family f : {Family::A, Family::B, Family::C, Family::D, Family::GammaD})
    EXPECT_EQ(jfraction_expand(family_spec(f), 10, CfBackend::Motzkin),
              jfraction_expand(family_spec(f), 10, CfBackend::Nested))
        << family_name(f);
}

TEST(Families, SmallValues) {
  const Poly t = v("t"), lam = v("lam"), y = v("y"), w = v("w");
  // Hand count over S_3 of t^exc lam^pex y^ear w^fix.
  EXPECT_EQ(A_poly(3), w.pow(3) + (t * lam * y * w).scale(3) + t * lam * y + t * t * lam * y);
  EXPECT_EQ(D_poly(2), t * lam * y);
  EXPECT_EQ(D_poly(3), t * lam * y + t * t * lam * y);
  Assignment ones;
  ones.set("lam", Poly(1L)).set("y", Poly(1L)).set("w", Poly(1L));
  EXPECT_EQ(substitute(A_poly(3), ones), Poly(1L) + t.scale(4) + t * t);
  Assignment all_ones = ones;
  all_ones.set("t", Poly(1L));
  for (int n = 0; n <= 8; ++n) EXPECT_EQ(substitute(A_poly(n), all_ones), Poly(factorial(n))) << n;
  Assignment d_count;
  d_count.set("t", Poly(1L)).set("lam", Poly(1L)).set("y", Poly(1L));
  EXPECT_EQ(substitute(D_poly(4), d_count), Poly(9L));
}

TEST(Families, EulerianAgainstDescents) {
  const VarId t = var("t");
  Assignment ones;
  ones.set("lam", Poly(1L)).set("y", Poly(1L)).set("w", Poly(1L));
  for (int n = 1; n <= 7; ++n) {
    const Poly des = stat_poly(n, Filter::All, {t}, [](const Permutation& p) { return std::vector<int>{oracle::des(p)}; });
    EXPECT_EQ(substitute(A_poly(n), ones), des) << n;
  }
}

TEST(Families, Specializations) {
  for (int n = 0; n <= 8; ++n) {
    Assignment y1, swap, w0, c;
    y1.set("y", Poly(1L));
    swap.set("lam", Poly(1L)).set("y", v("lam"));
    w0.set("w", Poly());
    c.set("t", Poly(1L)).set("w", v("lam"));
    EXPECT_EQ(substitute(A_poly(n), y1), B_poly(n));
    EXPECT_EQ(substitute(A_poly(n), swap), B_poly(n));
    EXPECT_EQ(substitute(A_poly(n), w0), D_poly(n));
    EXPECT_EQ(substitute(A_poly(n), c), C_poly(n));
  }
}

TEST(Families, ParseNames) {
  EXPECT_EQ(parse_family("A"), Family::A);
  EXPECT_EQ(parse_family("conj52"), Family::C);
  EXPECT_EQ(parse_family("gamma"), Family::GammaD);
  EXPECT_THROW(parse_family("E"), std::invalid_argument);
}

TEST(Egf, MatchesB) {
  const Series e = egf_B(8);
  EXPECT_EQ(e[0], Poly(1L));
  for (int n = 0; n <= 8; ++n) EXPECT_EQ(e[n].scale(factorial(n)), B_poly(n)) << n;
}

TEST(Gamma, Decompose) {
  const VarId t = var("t");
  const Poly T = v("t"), lam = v("lam"), y = v("y");
  const auto g2 = gamma_decompose(D_poly(2), 2, t);
  ASSERT_EQ(g2.size(), 2u);
  EXPECT_EQ(g2[0], Poly());
  EXPECT_EQ(g2[1], lam * y);
  const auto g5 = gamma_decompose((T + Poly(1L)).pow(5), 5, t);
  EXPECT_EQ(g5[0], Poly(1L));
  for (std::size_t k = 1; k < g5.size(); ++k) EXPECT_EQ(g5[k], Poly());
  // t + t^2 is not symmetric about degree 1.
  EXPECT_THROW(gamma_decompose(T + T * T, 2, t), NotGammaExpressible);
  EXPECT_THROW(gamma_decompose(T.pow(4), 3, t), std::invalid_argument);
}

TEST(Gamma, ReconstructsD) {
  const VarId t = var("t");
  const Poly T = v("t"), one_t = T + Poly(1L);
  for (int n = 0; n <= 9; ++n) {
    const auto g = gamma_decompose(D_poly(n), n, t);
    Poly back;
    for (std::size_t k = 0; k < g.size(); ++k)
      back += g[k] * T.pow(static_cast<unsigned>(k)) * one_t.pow(static_cast<unsigned>(n - 2 * static_cast<int>(k)));
    EXPECT_EQ(back, D_poly(n)) << n;
  }
}
