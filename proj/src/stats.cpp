#include "permstat/stats.hpp"

#include <algorithm>
#include <climits>

namespace permstat {

namespace {

constexpr std::array<std::string_view, kStatCount> kNames = {
    "des",  "asc",  "exc",  "drop", "des2", "asc2", "pex",   "pdrop", "cyc",  "fix",
    "pcyc", "ear",  "rec",  "arec", "erec", "earec", "lrm",  "fmax",  "fmin", "peak",
    "val",  "dasc", "ddes", "cval", "cpeak", "cdrise", "cdfall", "asc_padded"};

std::vector<int> inverse_table(const Permutation& p) {
  std::vector<int> inv(static_cast<std::size_t>(p.size()) + 1, 0);
  for (int i = 1; i <= p.size(); ++i) inv[p(i)] = i;
  return inv;
}

IndexSet intersect(const IndexSet& a, const IndexSet& b) {
  IndexSet out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

IndexSet difference(const IndexSet& a, const IndexSet& b) {
  IndexSet out;
  std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

int count(const IndexSet& s) { return static_cast<int>(s.size()); }

}  // namespace

std::string_view stat_name(Stat s) { return kNames[static_cast<std::size_t>(s)]; }

Stat parse_stat(std::string_view name) {
  for (std::size_t i = 0; i < kStatCount; ++i)
    if (kNames[i] == name) return static_cast<Stat>(i);
  throw std::invalid_argument("unknown statistic '" + std::string(name) + "'");
}

const std::array<Stat, kStatCount>& all_stats() {
  static const auto table = [] {
    std::array<Stat, kStatCount> a{};
    for (std::size_t i = 0; i < kStatCount; ++i) a[i] = static_cast<Stat>(i);
    return a;
  }();
  return table;
}

std::string_view boundary_name(Boundary b) {
  switch (b) {
    case Boundary::ZeroInf: return "zero-inf";
    case Boundary::InfZero: return "inf-zero";
    case Boundary::ZeroNPlus1: return "zero-(n+1)";
  }
  return "?";
}

BoundaryMismatch::BoundaryMismatch(std::string_view stat, Boundary given)
    : std::logic_error(std::string(stat) + " is not defined under the " +
                       std::string(boundary_name(given)) + " boundary") {}

std::string StatVector::to_json() const {
  std::string out = "{";
  for (std::size_t i = 0; i < kStatCount; ++i) {
    if (i) out += ",";
    out += "\"";
    out += kNames[i];
    out += "\":";
    out += std::to_string(v_[i]);
  }
  out += "}";
  return out;
}

IndexSet descent_set(const Permutation& p) {
  IndexSet s;
  for (int i = 1; i < p.size(); ++i)
    if (p(i) > p(i + 1)) s.push_back(i);
  return s;
}

IndexSet ascent_set(const Permutation& p) {
  IndexSet s;
  for (int i = 1; i < p.size(); ++i)
    if (p(i) < p(i + 1)) s.push_back(i);
  return s;
}

IndexSet excedance_set(const Permutation& p) {
  IndexSet s;
  for (int i = 1; i <= p.size(); ++i)
    if (p(i) > i) s.push_back(i);
  return s;
}

IndexSet drop_set(const Permutation& p) {
  IndexSet s;
  for (int i = 1; i <= p.size(); ++i)
    if (p(i) < i) s.push_back(i);
  return s;
}

IndexSet des2_set(const Permutation& p) {
  IndexSet s;
  int running_max = 0;
  for (int i = 1; i < p.size(); ++i) {
    if (p(i) > running_max && p(i) > p(i + 1)) s.push_back(i);
    running_max = std::max(running_max, p(i));
  }
  return s;
}

IndexSet pex_set(const Permutation& p) {
  IndexSet s;
  for (int i = 1; i <= p.size(); ++i) {
    if (p(i) <= i) continue;
    bool pure = true;
    for (int j = 1; j < i && pure; ++j) pure = p(j) < i || p(j) > p(i);
    if (pure) s.push_back(i);
  }
  return s;
}

IndexSet pdrop_set(const Permutation& p) {
  IndexSet s;
  const int n = p.size();
  for (int i = 1; i <= n; ++i) {
    if (p(i) >= i) continue;
    bool pure = true;
    for (int j = i + 1; j <= n && pure; ++j) pure = p(j) < p(i) || p(j) > i;
    if (pure) s.push_back(i);
  }
  return s;
}

CycleSets cycle_classify(const Permutation& p) {
  CycleSets c;
  const auto inv = inverse_table(p);
  for (int i = 1; i <= p.size(); ++i) {
    const int before = inv[i];
    const int after = p(i);
    if (before == i) {
      c.fix.push_back(i);
    } else if (before < i && after < i) {
      c.cpeak.push_back(i);
    } else if (before > i && after > i) {
      c.cval.push_back(i);
    } else if (before < i) {
      c.cdrise.push_back(i);
    } else {
      c.cdfall.push_back(i);
    }
  }
  return c;
}

RecordSets records(const Permutation& p) {
  RecordSets r;
  const int n = p.size();
  int running_max = 0;
  int running_min = INT_MAX;
  for (int i = 1; i <= n; ++i) {
    if (p(i) > running_max) r.rec.push_back(i);
    if (p(i) < running_min) r.lrm.push_back(i);
    running_max = std::max(running_max, p(i));
    running_min = std::min(running_min, p(i));
  }
  int suffix_min = INT_MAX;
  for (int i = n; i >= 1; --i) {
    if (p(i) < suffix_min) r.arec.push_back(i);
    suffix_min = std::min(suffix_min, p(i));
  }
  std::reverse(r.arec.begin(), r.arec.end());
  r.erec = difference(r.rec, r.arec);
  r.earec = difference(r.arec, r.rec);
  return r;
}

IndexSet ear_set(const Permutation& p) {
  IndexSet s;
  const auto cs = cycle_classify(p);
  for (int i : cs.cpeak) {
    bool nested = false;
    for (int l = i + 1; l <= p.size() && !nested; ++l) nested = p(l) < p(i);
    if (!nested) s.push_back(i);
  }
  return s;
}

IndexSet ear_set_by_records(const Permutation& p) {
  return intersect(records(p).earec, cycle_classify(p).cpeak);
}

int cycle_count(const Permutation& p) {
  const int n = p.size();
  std::vector<char> seen(static_cast<std::size_t>(n) + 1, 0);
  int cycles = 0;
  for (int i = 1; i <= n; ++i) {
    if (seen[i]) continue;
    ++cycles;
    for (int j = i; !seen[j]; j = p(j)) seen[j] = 1;
  }
  return cycles;
}

const IndexSet& LinearSets::fmax() const {
  if (!fmax_) throw BoundaryMismatch("fmax", boundary);
  return *fmax_;
}

const IndexSet& LinearSets::arda() const {
  if (!arda_) throw BoundaryMismatch("Arda", boundary);
  return *arda_;
}

const IndexSet& LinearSets::fmin() const {
  if (!fmin_) throw BoundaryMismatch("fmin", boundary);
  return *fmin_;
}

const IndexSet& LinearSets::asc2() const {
  if (!asc2_) throw BoundaryMismatch("asc2", boundary);
  return *asc2_;
}

LinearSets linear_classify(const Permutation& p, Boundary b) {
  const int n = p.size();
  const bool zero_left = b != Boundary::InfZero;
  // Values are padded with sentinels below 1 and above n.
  const int left = zero_left ? 0 : n + 1;
  const int right = zero_left ? n + 1 : 0;
  auto at = [&](int i) { return i == 0 ? left : (i == n + 1 ? right : p(i)); };

  LinearSets ls;
  ls.boundary = b;
  for (int i = 1; i <= n; ++i) {
    const int prev = at(i - 1), cur = p(i), next = at(i + 1);
    if (prev < cur && cur < next) ls.dasc.push_back(cur);
    else if (prev > cur && cur > next) ls.ddes.push_back(cur);
    else if (prev < cur) ls.peak.push_back(cur);
    else ls.val.push_back(cur);
  }
  for (auto* s : {&ls.peak, &ls.val, &ls.dasc, &ls.ddes}) std::sort(s->begin(), s->end());

  const auto r = records(p);
  auto values_at = [&](const IndexSet& idx) {
    IndexSet v;
    for (int i : idx) v.push_back(p(i));
    std::sort(v.begin(), v.end());
    return v;
  };
  if (zero_left) {
    ls.fmax_ = intersect(ls.dasc, values_at(r.rec));
    ls.arda_ = intersect(ls.dasc, values_at(r.arec));
  } else {
    ls.fmin_ = intersect(ls.ddes, values_at(r.lrm));
    IndexSet asc2;
    const IndexSet lrm(r.lrm.begin(), r.lrm.end());
    for (int i = 1; i < n; ++i)
      if (p(i) < p(i + 1) && std::binary_search(lrm.begin(), lrm.end(), i)) asc2.push_back(i);
    ls.asc2_ = std::move(asc2);
  }
  return ls;
}

StatVector stat_vector(const Permutation& p) {
  StatVector v;
  const auto cs = cycle_classify(p);
  const auto r = records(p);
  const auto zi = linear_classify(p, Boundary::ZeroInf);
  const auto iz = linear_classify(p, Boundary::InfZero);

  v[Stat::des] = count(descent_set(p));
  v[Stat::asc] = count(ascent_set(p));
  v[Stat::exc] = count(excedance_set(p));
  v[Stat::drop] = count(drop_set(p));
  v[Stat::des2] = count(des2_set(p));
  v[Stat::asc2] = count(iz.asc2());
  v[Stat::pex] = count(pex_set(p));
  v[Stat::pdrop] = count(pdrop_set(p));
  v[Stat::cyc] = cycle_count(p);
  v[Stat::fix] = count(cs.fix);
  v[Stat::pcyc] = v[Stat::cyc] - v[Stat::fix];
  v[Stat::ear] = count(ear_set(p));
  v[Stat::rec] = count(r.rec);
  v[Stat::arec] = count(r.arec);
  v[Stat::erec] = count(r.erec);
  v[Stat::earec] = count(r.earec);
  v[Stat::lrm] = count(r.lrm);
  v[Stat::fmax] = count(zi.fmax());
  v[Stat::fmin] = count(iz.fmin());
  v[Stat::peak] = count(zi.peak);
  v[Stat::val] = count(zi.val);
  v[Stat::dasc] = count(zi.dasc);
  v[Stat::ddes] = count(zi.ddes);
  v[Stat::cval] = count(cs.cval);
  v[Stat::cpeak] = count(cs.cpeak);
  v[Stat::cdrise] = count(cs.cdrise);
  v[Stat::cdfall] = count(cs.cdfall);
  v[Stat::asc_padded] = v[Stat::val] + v[Stat::dasc];
  return v;
}

}  // namespace permstat
