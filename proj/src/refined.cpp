#include "permstat/refined.hpp"

#include "permstat/stats.hpp"

namespace permstat {

namespace {

std::vector<int> inverse_table(const Permutation& p) {
  std::vector<int> inv(static_cast<std::size_t>(p.size()) + 1, 0);
  for (int i = 1; i <= p.size(); ++i) inv[p(i)] = i;
  return inv;
}

// cross / nest / icross from the raw counts and the cycle type of i.
void assemble(const Permutation& p, const std::vector<int>& inv, RefinedProfile& prof) {
  for (int i = 1; i <= p.size(); ++i) {
    auto& v = prof.vertex[static_cast<std::size_t>(i - 1)];
    const int before = inv[i], after = p(i);
    const bool fixed = after == i;
    const bool cval = before > i && after > i;
    const bool cdrise = before < i && i < after;
    const bool cdfall = before > i && i > after;
    if (fixed) {
      v.icross = v.lcross;
      v.cross = v.ucross;
      v.nest = v.lev;
    } else {
      if (cval || cdrise) v.icross = v.ucross;
      else if (cdfall) v.icross = v.lcross + 1;
      else v.icross = v.lcross;  // cycle peak

      if (cval) v.cross = v.ucross;
      else if (cdrise) v.cross = v.ucross + 1;
      else v.cross = v.lcross;  // cycle peak or double fall

      v.nest = i < after ? v.unest : v.lnest;
    }
  }
}

void fill_patterns(const Permutation& p, RefinedProfile& prof) {
  const auto a = pattern_31_2(p);
  const auto b = pattern_2_31(p);
  for (int i = 1; i <= p.size(); ++i) {
    prof.vertex[static_cast<std::size_t>(i - 1)].p31_2 = a[static_cast<std::size_t>(i - 1)];
    prof.vertex[static_cast<std::size_t>(i - 1)].p2_31 = b[static_cast<std::size_t>(i - 1)];
  }
}

}  // namespace

std::string RefinedProfile::to_json() const {
  std::string out = "[";
  for (std::size_t k = 0; k < vertex.size(); ++k) {
    const auto& v = vertex[k];
    if (k) out += ",";
    out += "{\"i\":" + std::to_string(k + 1) + ",\"ucross\":" + std::to_string(v.ucross) +
           ",\"unest\":" + std::to_string(v.unest) + ",\"lcross\":" + std::to_string(v.lcross) +
           ",\"lnest\":" + std::to_string(v.lnest) + ",\"lev\":" + std::to_string(v.lev) +
           ",\"cross\":" + std::to_string(v.cross) + ",\"nest\":" + std::to_string(v.nest) +
           ",\"icross\":" + std::to_string(v.icross) + ",\"31-2\":" + std::to_string(v.p31_2) +
           ",\"2-31\":" + std::to_string(v.p2_31) + "}";
  }
  return out + "]";
}

RefinedProfile refined_profile(const Permutation& p) {
  const int n = p.size();
  RefinedProfile prof;
  prof.vertex.resize(static_cast<std::size_t>(n));
  const auto inv = inverse_table(p);
  for (int v = 1; v <= n; ++v) {
    auto& s = prof.vertex[static_cast<std::size_t>(v - 1)];
    const int pv = p(v);
    if (pv > v) {
      // v plays j in i < j < k < l with an upper arc from some i < j.
      for (int i = 1; i < v; ++i) {
        const int pi = p(i);
        if (pi > v && pi < pv) ++s.ucross;
        if (pi > pv) ++s.unest;
      }
    } else if (pv < v) {
      // v plays k with a lower arc landing on j = p(v); l > k arcs back.
      for (int l = v + 1; l <= n; ++l) {
        const int pl = p(l);
        if (pl > pv && pl < v) ++s.lcross;
        if (pl < pv) ++s.lnest;
      }
    } else {
      for (int i = 1; i < v; ++i)
        if (p(i) > v) ++s.lev;
    }
  }
  assemble(p, inv, prof);
  fill_patterns(p, prof);
  return prof;
}

RefinedProfile refined_profile_reference(const Permutation& p) {
  const int n = p.size();
  RefinedProfile prof;
  prof.vertex.resize(static_cast<std::size_t>(n));
  auto at = [&](int x) -> VertexStats& { return prof.vertex[static_cast<std::size_t>(x - 1)]; };
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j)
      for (int k = j + 1; k <= n; ++k)
        for (int l = k + 1; l <= n; ++l) {
          if (k == p(i) && l == p(j)) ++at(j).ucross;
          if (k == p(j) && l == p(i)) ++at(j).unest;
          if (i == p(k) && j == p(l)) ++at(k).lcross;
          if (i == p(l) && j == p(k)) ++at(k).lnest;
        }
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j)
      for (int l = j + 1; l <= n; ++l)
        if (p(j) == j && l == p(i)) ++at(j).lev;
  assemble(p, inverse_table(p), prof);

  // Patterns straight from their definitions.
  const auto inv = inverse_table(p);
  for (int v = 1; v <= n; ++v) {
    const int pos = inv[v];
    for (int j = 2; j < pos; ++j)
      if (p(j) < v && v < p(j - 1)) ++at(v).p31_2;
    for (int j = pos + 1; j < n; ++j)
      if (p(j + 1) < v && v < p(j)) ++at(v).p2_31;
  }
  return prof;
}

std::vector<int> pattern_31_2(const Permutation& p) {
  const int n = p.size();
  std::vector<int> out(static_cast<std::size_t>(n), 0);
  // Each descent p(j-1) > p(j) contributes to every value strictly between
  // the two that sits to the right of position j.
  const auto inv = inverse_table(p);
  for (int j = 2; j <= n; ++j) {
    if (p(j - 1) <= p(j)) continue;
    for (int v = p(j) + 1; v < p(j - 1); ++v)
      if (inv[v] > j) ++out[static_cast<std::size_t>(v - 1)];
  }
  return out;
}

std::vector<int> pattern_2_31(const Permutation& p) {
  const int n = p.size();
  std::vector<int> out(static_cast<std::size_t>(n), 0);
  const auto inv = inverse_table(p);
  for (int j = 1; j < n; ++j) {
    if (p(j) <= p(j + 1)) continue;
    for (int v = p(j + 1) + 1; v < p(j); ++v)
      if (inv[v] < j) ++out[static_cast<std::size_t>(v - 1)];
  }
  return out;
}

std::vector<int> pattern_31_2_from_one(const Permutation& p) {
  // j = 1 reads p(0); only an infinite left pad lets that term fire.
  auto out = pattern_31_2(p);
  const int n = p.size();
  for (int pos = 2; pos <= n; ++pos)
    if (p(1) < p(pos)) ++out[static_cast<std::size_t>(p(pos) - 1)];
  return out;
}

PureCounts pval_ppeak(const Permutation& p) {
  const auto ls = linear_classify(p, Boundary::ZeroInf);
  const auto a = pattern_31_2(p);
  const auto b = pattern_2_31(p);
  PureCounts c;
  for (int v : ls.val)
    if (a[static_cast<std::size_t>(v - 1)] == 0) ++c.pval;
  for (int v : ls.peak)
    if (b[static_cast<std::size_t>(v - 1)] == 0) ++c.ppeak;
  return c;
}

ArcTotals arc_totals(const Permutation& p) {
  const int n = p.size();
  ArcTotals t;
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j) {
      for (int k = j + 1; k <= n; ++k)
        for (int l = k + 1; l <= n; ++l) {
          if (k == p(i) && l == p(j)) ++t.ucross;
          if (l == p(i) && k == p(j)) ++t.unest;
          if (i == p(k) && j == p(l)) ++t.lcross;
          if (i == p(l) && j == p(k)) ++t.lnest;
        }
      for (int l = j + 1; l <= n; ++l) {
        if (p(j) != j) continue;
        if (l == p(i)) ++t.upsnest;
        if (i == p(l)) ++t.lpsnest;
      }
    }
  return t;
}

}  // namespace permstat
