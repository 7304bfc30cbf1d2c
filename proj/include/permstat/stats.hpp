#pragma once

// Coarse permutation statistics: the descent/excedance family, records,
// the cycle classification and the boundary-dependent linear statistics.
//
// Index sets are sorted ascending. Cycle-classification sets and descent,
// excedance and record sets hold indices i in [n]; the linear sets (peak,
// valley, double ascent, ...) hold values p(i), which is how those
// statistics are attached to letters.

#include <array>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "permstat/permutation.hpp"

namespace permstat {

using IndexSet = std::vector<int>;

enum class Stat {
  des,
  asc,
  exc,
  drop,
  des2,
  asc2,
  pex,
  pdrop,
  cyc,
  fix,
  pcyc,
  ear,
  rec,
  arec,
  erec,
  earec,
  lrm,
  fmax,
  fmin,
  peak,
  val,
  dasc,
  ddes,
  cval,
  cpeak,
  cdrise,
  cdfall,
  // Ascents counted with p(n+1) = n+1, i.e. valleys plus double ascents.
  asc_padded,
};

inline constexpr std::size_t kStatCount = static_cast<std::size_t>(Stat::asc_padded) + 1;

std::string_view stat_name(Stat s);
/// Throws std::invalid_argument on an unknown name.
Stat parse_stat(std::string_view name);
const std::array<Stat, kStatCount>& all_stats();

/// Padding used for p(0) and p(n+1).
enum class Boundary {
  ZeroInf,      // p(0) = 0, p(n+1) = +inf
  InfZero,      // p(0) = +inf, p(n+1) = 0
  ZeroNPlus1,   // p(0) = 0, p(n+1) = n+1; identical to ZeroInf on S_n
};

std::string_view boundary_name(Boundary b);

class BoundaryMismatch : public std::logic_error {
 public:
  BoundaryMismatch(std::string_view stat, Boundary given);
};

class StatVector {
 public:
  int& operator[](Stat s) { return v_[static_cast<std::size_t>(s)]; }
  int operator[](Stat s) const { return v_[static_cast<std::size_t>(s)]; }

  /// Flat JSON object, keys in enumeration order.
  std::string to_json() const;

  friend bool operator==(const StatVector&, const StatVector&) = default;

 private:
  std::array<int, kStatCount> v_{};
};

IndexSet descent_set(const Permutation& p);
IndexSet ascent_set(const Permutation& p);
IndexSet excedance_set(const Permutation& p);
IndexSet drop_set(const Permutation& p);

/// Descents i whose value exceeds every earlier value.
IndexSet des2_set(const Permutation& p);
/// Excedances i with no p(j), j < i, inside [i, p(i)].
IndexSet pex_set(const Permutation& p);
/// Drops i with no p(j), j > i, inside [p(i), i].
IndexSet pdrop_set(const Permutation& p);

struct CycleSets {
  IndexSet cval, cpeak, cdrise, cdfall, fix;
};
CycleSets cycle_classify(const Permutation& p);

struct RecordSets {
  IndexSet rec, arec, erec, earec, lrm;
};
RecordSets records(const Permutation& p);

/// Cycle peaks i with no later value below p(i) (zero lower nesting).
IndexSet ear_set(const Permutation& p);
/// Same statistic read off the record definitions: Earec intersected with Cpeak.
IndexSet ear_set_by_records(const Permutation& p);

int cycle_count(const Permutation& p);

class LinearSets {
 public:
  Boundary boundary;
  IndexSet peak, val, dasc, ddes;

  /// Foremaxima: double ascents that are records. Zero-left boundaries only.
  const IndexSet& fmax() const;
  /// Antirecords that are double ascents. Zero-left boundaries only.
  const IndexSet& arda() const;
  /// Foreminima: double descents that are left-to-right minima. InfZero only.
  const IndexSet& fmin() const;
  /// Indices i < n with p(i) < p(i+1) and p(i) a left-to-right minimum. InfZero only.
  const IndexSet& asc2() const;

 private:
  friend LinearSets linear_classify(const Permutation& p, Boundary b);
  std::optional<IndexSet> fmax_, arda_, fmin_, asc2_;
};

LinearSets linear_classify(const Permutation& p, Boundary b);

StatVector stat_vector(const Permutation& p);

}  // namespace permstat
