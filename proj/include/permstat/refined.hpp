#pragma once

// Per-vertex crossing and nesting statistics of the arc diagram (an arc
// i -> p(i) above the axis when p(i) > i, below when p(i) < i), the vincular
// pattern counts (31-2) and (2-31), and the derived pval/ppeak.

#include <string>
#include <vector>

#include "permstat/permutation.hpp"

namespace permstat {

struct VertexStats {
  int ucross = 0;
  int unest = 0;
  int lcross = 0;
  int lnest = 0;
  int lev = 0;
  int cross = 0;
  int nest = 0;
  int icross = 0;
  int p31_2 = 0;  // (31-2) of the value i
  int p2_31 = 0;  // (2-31) of the value i

  friend bool operator==(const VertexStats&, const VertexStats&) = default;
};

/// Entry i-1 holds the statistics of vertex (equivalently value) i.
struct RefinedProfile {
  std::vector<VertexStats> vertex;

  const VertexStats& operator[](int i) const { return vertex[static_cast<std::size_t>(i - 1)]; }
  int size() const { return static_cast<int>(vertex.size()); }

  /// JSON array of per-vertex objects.
  std::string to_json() const;

  friend bool operator==(const RefinedProfile&, const RefinedProfile&) = default;
};

/// O(n^2) sweep.
RefinedProfile refined_profile(const Permutation& p);
/// Literal quadruple/triple counting, O(n^4). Reference for the sweep.
RefinedProfile refined_profile_reference(const Permutation& p);

/// Indexed by value: entry i-1 is (31-2)(i, p).
std::vector<int> pattern_31_2(const Permutation& p);
/// Indexed by value: entry i-1 is (2-31)(i, p).
std::vector<int> pattern_2_31(const Permutation& p);
/// Variant of (31-2) that also admits j = 1, reading p(0) as +infinity.
std::vector<int> pattern_31_2_from_one(const Permutation& p);

struct PureCounts {
  int pval = 0;
  int ppeak = 0;
};
/// Valleys with (31-2) = 0 and peaks with (2-31) = 0, under p(0)=0, p(n+1)=inf.
PureCounts pval_ppeak(const Permutation& p);

struct ArcTotals {
  long ucross = 0, unest = 0, lcross = 0, lnest = 0, upsnest = 0, lpsnest = 0;
};
/// Totals by enumerating all quadruples/triples of vertices.
ArcTotals arc_totals(const Permutation& p);

}  // namespace permstat
