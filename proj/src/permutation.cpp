#include "permstat/permutation.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <numeric>
#include <sstream>

namespace permstat {

namespace {

std::string kind_name(ParseError::Kind k) {
  switch (k) {
    case ParseError::Kind::DuplicateValue: return "duplicate value";
    case ParseError::Kind::OutOfRange: return "value out of range";
    case ParseError::Kind::EmptyToken: return "empty token";
    case ParseError::Kind::BadToken: return "not an integer";
  }
  return "parse error";
}

}  // namespace

ParseError::ParseError(Kind kind, std::string token)
    : std::invalid_argument(kind_name(kind) + ": '" + token + "'"),
      kind_(kind),
      token_(std::move(token)) {}

NTooLarge::NTooLarge(int n, int limit)
    : std::out_of_range("n = " + std::to_string(n) + " exceeds the configured limit " +
                        std::to_string(limit)),
      n_(n),
      limit_(limit) {}

void check_n(int n, int n_max) {
  if (n < 0) throw std::invalid_argument("n must be non-negative");
  if (n > n_max || n > kHardNCeiling) throw NTooLarge(n, std::min(n_max, kHardNCeiling));
}

Permutation::Permutation(std::vector<int> word) : word_(std::move(word)) {
  const int n = size();
  std::vector<char> seen(static_cast<std::size_t>(n) + 1, 0);
  for (int v : word_) {
    if (v < 1 || v > n) throw ParseError(ParseError::Kind::OutOfRange, std::to_string(v));
    if (seen[v]) throw ParseError(ParseError::Kind::DuplicateValue, std::to_string(v));
    seen[v] = 1;
  }
}

Permutation from_word_unchecked(std::vector<int> word) {
  return Permutation(std::move(word), Permutation::Unchecked{});
}

Permutation Permutation::identity(int n) {
  std::vector<int> w(static_cast<std::size_t>(n));
  std::iota(w.begin(), w.end(), 1);
  return from_word_unchecked(std::move(w));
}

std::string Permutation::to_string() const {
  std::string out;
  for (std::size_t i = 0; i < word_.size(); ++i) {
    if (i) out += ' ';
    out += std::to_string(word_[i]);
  }
  return out;
}

Permutation parse(std::string_view text) {
  // Separators are whitespace runs and single commas; ",," or a dangling
  // comma is an empty token.
  std::vector<std::string> tokens;
  std::string cur;
  bool token_since_comma = false;
  bool saw_comma = false;
  auto flush = [&] {
    if (!cur.empty()) tokens.push_back(cur);
    cur.clear();
  };
  for (char ch : text) {
    if (ch == ',') {
      if (!token_since_comma) throw ParseError(ParseError::Kind::EmptyToken, "");
      flush();
      token_since_comma = false;
      saw_comma = true;
    } else if (std::isspace(static_cast<unsigned char>(ch))) {
      flush();
    } else {
      cur += ch;
      token_since_comma = true;
    }
  }
  if (saw_comma && !token_since_comma) throw ParseError(ParseError::Kind::EmptyToken, "");
  flush();

  const int n = static_cast<int>(tokens.size());
  std::vector<int> word;
  word.reserve(tokens.size());
  std::vector<char> seen(static_cast<std::size_t>(n) + 1, 0);
  for (const auto& tok : tokens) {
    int v = 0;
    auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
    if (ec == std::errc::result_out_of_range) throw ParseError(ParseError::Kind::OutOfRange, tok);
    if (ec != std::errc() || ptr != tok.data() + tok.size())
      throw ParseError(ParseError::Kind::BadToken, tok);
    if (v < 1 || v > n) throw ParseError(ParseError::Kind::OutOfRange, tok);
    if (seen[v]) throw ParseError(ParseError::Kind::DuplicateValue, tok);
    seen[v] = 1;
    word.push_back(v);
  }
  return from_word_unchecked(std::move(word));
}

Permutation inverse(const Permutation& p) {
  const int n = p.size();
  std::vector<int> q(static_cast<std::size_t>(n));
  for (int i = 1; i <= n; ++i) q[p(i) - 1] = i;
  return from_word_unchecked(std::move(q));
}

Permutation complement(const Permutation& p) {
  const int n = p.size();
  std::vector<int> q(static_cast<std::size_t>(n));
  for (int i = 1; i <= n; ++i) q[i - 1] = n + 1 - p(i);
  return from_word_unchecked(std::move(q));
}

Permutation reversal(const Permutation& p) {
  const int n = p.size();
  std::vector<int> q(static_cast<std::size_t>(n));
  for (int i = 1; i <= n; ++i) q[i - 1] = p(n + 1 - i);
  return from_word_unchecked(std::move(q));
}

Permutation zeta(const Permutation& p) { return complement(reversal(p)); }

std::string CycleDecomposition::to_string() const {
  std::string out;
  for (const auto& c : cycles) {
    out += '(';
    for (std::size_t i = 0; i < c.size(); ++i) {
      if (i) out += ' ';
      out += std::to_string(c[i]);
    }
    out += ')';
  }
  return out;
}

CycleDecomposition cycle_decompose(const Permutation& p, bool standard) {
  const int n = p.size();
  CycleDecomposition d;
  d.standard = standard;
  std::vector<char> seen(static_cast<std::size_t>(n) + 1, 0);
  // Scanning i upward makes i the minimum of each new cycle.
  for (int i = 1; i <= n; ++i) {
    if (seen[i]) continue;
    std::vector<int> cycle;
    for (int j = i; !seen[j]; j = p(j)) {
      seen[j] = 1;
      cycle.push_back(j);
    }
    d.cycles.push_back(std::move(cycle));
  }
  if (standard) std::reverse(d.cycles.begin(), d.cycles.end());
  return d;
}

Permutation from_cycles(const CycleDecomposition& d, int n) {
  std::vector<int> w(static_cast<std::size_t>(n), 0);
  for (const auto& c : d.cycles) {
    for (std::size_t k = 0; k < c.size(); ++k) w[c[k] - 1] = c[(k + 1) % c.size()];
  }
  return Permutation(std::move(w));
}

bool passes(const Permutation& p, Filter filter) {
  if (filter == Filter::All) return true;
  const int n = p.size();
  for (int i = 1; i <= n; ++i)
    if (p(i) == i) return false;
  if (filter == Filter::Derangement) return true;
  std::vector<int> inv(static_cast<std::size_t>(n) + 1);
  for (int i = 1; i <= n; ++i) inv[p(i)] = i;
  for (int i = 1; i <= n; ++i)
    if (inv[i] < i && i < p(i)) return false;
  return true;
}

void for_each_with_first(int n, int first, Filter filter,
                         const std::function<void(const Permutation&)>& fn) {
  if (n == 0) return;
  std::vector<int> rest;
  for (int v = 1; v <= n; ++v)
    if (v != first) rest.push_back(v);
  std::vector<int> w(static_cast<std::size_t>(n));
  w[0] = first;
  do {
    std::copy(rest.begin(), rest.end(), w.begin() + 1);
    Permutation p = from_word_unchecked(w);
    if (passes(p, filter)) fn(p);
  } while (std::next_permutation(rest.begin(), rest.end()));
}

void for_each_permutation(int n, Filter filter, const std::function<void(const Permutation&)>& fn,
                          int n_max) {
  check_n(n, n_max);
  if (n == 0) {
    Permutation empty;
    if (passes(empty, filter)) fn(empty);
    return;
  }
  for (int first = 1; first <= n; ++first) for_each_with_first(n, first, filter, fn);
}

std::vector<Permutation> enumerate(int n, Filter filter, int n_max) {
  std::vector<Permutation> out;
  for_each_permutation(n, filter, [&](const Permutation& p) { out.push_back(p); }, n_max);
  return out;
}

std::vector<Permutation> enumerate(int n, const std::function<bool(const Permutation&)>& keep,
                                   int n_max) {
  std::vector<Permutation> out;
  for_each_permutation(
      n, Filter::All,
      [&](const Permutation& p) {
        if (keep(p)) out.push_back(p);
      },
      n_max);
  return out;
}

}  // namespace permstat
