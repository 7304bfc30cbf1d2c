#include "permstat/bijections.hpp"

#include <algorithm>
#include <deque>

#include "permstat/refined.hpp"
#include "permstat/stats.hpp"

namespace permstat {

namespace {

std::string join(const std::vector<int>& v, const char* sep) {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) out += sep;
    out += std::to_string(v[i]);
  }
  return out;
}

std::string json_list(const std::vector<int>& v) { return "[" + join(v, ",") + "]"; }

enum class Eligible { Greater, AtMost, Less, AtLeast };

struct Orientation {
  bool from_largest;  // order in which the top row is filled
  Eligible eligible;
  bool pick_largest;  // rank counted from the largest eligible entry
};

bool admits(Eligible e, int x, int j) {
  switch (e) {
    case Eligible::Greater: return x > j;
    case Eligible::AtMost: return x <= j;
    case Eligible::Less: return x < j;
    case Eligible::AtLeast: return x >= j;
  }
  return false;
}

Biword fill(const std::vector<int>& top, const std::vector<int>& candidates, const std::vector<int>& rank,
            Orientation o) {
  Biword b{top, std::vector<int>(top.size(), 0)};
  std::vector<char> used(candidates.size(), 0);
  std::vector<std::size_t> order(top.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = o.from_largest ? order.size() - 1 - i : i;
  for (std::size_t col : order) {
    const int j = top[col];
    std::vector<int> eligible;
    for (std::size_t c = 0; c < candidates.size(); ++c)
      if (!used[c] && admits(o.eligible, candidates[c], j)) eligible.push_back(static_cast<int>(c));
    const auto k = static_cast<std::size_t>(rank[static_cast<std::size_t>(j - 1)]);
    if (k >= eligible.size())
      throw ConstructionFailure("no eligible entry for " + std::to_string(j) + " at rank " + std::to_string(k + 1));
    const int pick = o.pick_largest ? eligible[eligible.size() - 1 - k] : eligible[k];
    used[static_cast<std::size_t>(pick)] = 1;
    b.bottom[col] = candidates[static_cast<std::size_t>(pick)];
  }
  return b;
}

std::vector<int> complement_in(int n, const std::vector<int>& s) {
  std::vector<int> out;
  for (int v = 1; v <= n; ++v)
    if (!std::binary_search(s.begin(), s.end(), v)) out.push_back(v);
  return out;
}

// Shared construction. When tops_first, the top row of the f-part holds the
// descent tops (Phi_SZ); otherwise the descent bottoms (Phi_1).
Permutation build(const Permutation& p, bool tops_first, Orientation fo, Orientation go, BiwordTrace* trace) {
  const int n = p.size();
  std::vector<int> tops, bottoms;
  for (int i = 1; i < n; ++i)
    if (p(i) > p(i + 1)) {
      tops.push_back(p(i));
      bottoms.push_back(p(i + 1));
    }
  std::sort(tops.begin(), tops.end());
  std::sort(bottoms.begin(), bottoms.end());
  const std::vector<int>& F = tops_first ? tops : bottoms;
  const std::vector<int>& Fp = tops_first ? bottoms : tops;
  const auto G = complement_in(n, F);
  const auto Gp = complement_in(n, Fp);
  const auto rank = pattern_31_2(p);

  Biword fb = fill(F, Fp, rank, fo);
  Biword gb = fill(G, Gp, rank, go);
  std::vector<int> word(static_cast<std::size_t>(n), 0);
  for (const Biword* b : {&fb, &gb})
    for (std::size_t c = 0; c < b->top.size(); ++c) word[static_cast<std::size_t>(b->top[c] - 1)] = b->bottom[c];
  if (trace) *trace = BiwordTrace{F, Fp, G, Gp, fb, gb, rank};
  return Permutation(std::move(word));
}

}  // namespace

std::string Biword::to_string() const { return "(" + join(top, " ") + " / " + join(bottom, " ") + ")"; }

std::string BiwordTrace::to_json() const {
  return "{\"F\":" + json_list(F) + ",\"Fp\":" + json_list(Fp) + ",\"G\":" + json_list(G) +
         ",\"Gp\":" + json_list(Gp) + ",\"f\":{\"top\":" + json_list(fpart.top) +
         ",\"bottom\":" + json_list(fpart.bottom) + "},\"g\":{\"top\":" + json_list(gpart.top) +
         ",\"bottom\":" + json_list(gpart.bottom) + "},\"31-2\":" + json_list(p31_2) + "}";
}

Permutation foata_phi(const Permutation& p) {
  std::vector<int> word;
  for (const auto& cycle : cycle_decompose(p, true).cycles) word.insert(word.end(), cycle.begin(), cycle.end());
  return from_word_unchecked(std::move(word));
}

Permutation foata_varphi(const Permutation& p) { return complement(foata_phi(p)); }

Permutation phi1(const Permutation& p, BiwordTrace* trace) {
  return build(p, false, {true, Eligible::Greater, true}, {false, Eligible::AtMost, false}, trace);
}

Permutation phi_sz(const Permutation& p, BiwordTrace* trace) {
  return build(p, true, {false, Eligible::Less, true}, {true, Eligible::AtLeast, false}, trace);
}

Permutation phi2(const Permutation& p) { return zeta(phi_sz(p)); }

Permutation phi1_inverse(const Permutation& q, std::vector<std::string>* trace) {
  const int n = q.size();
  const auto prof = refined_profile(q);
  std::vector<int> inv(static_cast<std::size_t>(n) + 1, 0);
  for (int i = 1; i <= n; ++i) inv[q(i)] = i;

  struct Block {
    bool open;  // still carries the infinity in front
    std::vector<int> letters;
  };
  std::vector<Block> blocks;

  // Index into `blocks` of the k-th open block (0-based), or blocks.size().
  auto kth_open = [&](int k) {
    for (std::size_t b = 0; b < blocks.size(); ++b)
      if (blocks[b].open && k-- == 0) return b;
    return blocks.size();
  };
  auto render = [&] {
    std::string s;
    for (const auto& b : blocks) {
      s += "(";
      std::vector<std::string> parts;
      if (b.open) parts.emplace_back("∞");
      for (int x : b.letters) parts.push_back(std::to_string(x));
      for (std::size_t i = 0; i < parts.size(); ++i) s += (i ? "," : "") + parts[i];
      s += ")";
    }
    return s;
  };

  for (int i = 1; i <= n; ++i) {
    const bool exc_position = q(i) > i;         // i in f
    const bool exc_value = inv[i] < i;          // i in f'
    const int k = prof[i].nest;
    const std::size_t target = kth_open(k);
    if (exc_position && !exc_value) {  // opener
      blocks.insert(blocks.begin() + static_cast<std::ptrdiff_t>(target), Block{true, {i}});
    } else if (!exc_position && !exc_value) {  // outsider
      blocks.insert(blocks.begin() + static_cast<std::ptrdiff_t>(target), Block{false, {i}});
    } else {
      if (target == blocks.size())
        throw MalformedBlocks("no open block number " + std::to_string(k + 1) + " for " + std::to_string(i));
      auto& b = blocks[target];
      if (exc_position) {  // insider, right after the infinity
        b.letters.insert(b.letters.begin(), i);
      } else {  // closer
        b.letters.insert(b.letters.begin(), i);
        b.open = false;
      }
    }
    if (trace) trace->push_back(render());
  }
  std::vector<int> word;
  for (const auto& b : blocks) {
    if (b.open) throw MalformedBlocks("block left open: " + render());
    word.insert(word.end(), b.letters.begin(), b.letters.end());
  }
  return Permutation(std::move(word));
}

Permutation valley_hop(const Permutation& p, int x) {
  const int n = p.size();
  if (x < 1 || x > n) throw std::out_of_range("hop letter out of range");
  const auto ls = linear_classify(p, Boundary::ZeroNPlus1);
  if (std::binary_search(ls.peak.begin(), ls.peak.end(), x) ||
      std::binary_search(ls.fmax().begin(), ls.fmax().end(), x))
    return p;
  const auto w = p.word();
  const auto pos = static_cast<std::size_t>(std::find(w.begin(), w.end(), x) - w.begin());
  std::size_t lo = pos, hi = pos + 1;
  while (lo > 0 && w[lo - 1] < x) --lo;
  while (hi < w.size() && w[hi] < x) ++hi;
  // w2 = [lo, pos), w3 = [pos+1, hi)
  std::vector<int> out(w.begin(), w.begin() + static_cast<std::ptrdiff_t>(lo));
  out.insert(out.end(), w.begin() + static_cast<std::ptrdiff_t>(pos) + 1, w.begin() + static_cast<std::ptrdiff_t>(hi));
  out.push_back(x);
  out.insert(out.end(), w.begin() + static_cast<std::ptrdiff_t>(lo), w.begin() + static_cast<std::ptrdiff_t>(pos));
  out.insert(out.end(), w.begin() + static_cast<std::ptrdiff_t>(hi), w.end());
  return from_word_unchecked(std::move(out));
}

Permutation valley_hop_set(const Permutation& p, const std::vector<int>& S) {
  std::vector<int> xs = S;
  std::sort(xs.begin(), xs.end());
  xs.erase(std::unique(xs.begin(), xs.end()), xs.end());
  Permutation cur = p;
  for (int x : xs) cur = valley_hop(cur, x);
  return cur;
}

Orbit orbit_of(const Permutation& p) {
  Orbit o;
  std::deque<Permutation> work{p};
  o.members.insert(p);
  while (!work.empty()) {
    const Permutation cur = work.front();
    work.pop_front();
    for (int x = 1; x <= cur.size(); ++x) {
      Permutation next = valley_hop(cur, x);
      if (o.members.insert(next).second) work.push_back(std::move(next));
    }
  }
  int found = 0;
  for (const auto& m : o.members)
    if (linear_classify(m, Boundary::ZeroNPlus1).ddes.empty()) {
      o.representative = m;
      ++found;
    }
  if (found != 1) throw std::logic_error("orbit has " + std::to_string(found) + " members without double descents");
  return o;
}

}  // namespace permstat
