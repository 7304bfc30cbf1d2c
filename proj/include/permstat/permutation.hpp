#pragma once

// Permutations of [n] in one-line notation, 1-based throughout.

#include <compare>
#include <cstddef>
#include <functional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace permstat {

inline constexpr int kDefaultNMax = 9;
inline constexpr int kHardNCeiling = 12;

class ParseError : public std::invalid_argument {
 public:
  enum class Kind { DuplicateValue, OutOfRange, EmptyToken, BadToken };

  ParseError(Kind kind, std::string token);

  Kind kind() const noexcept { return kind_; }
  const std::string& token() const noexcept { return token_; }

 private:
  Kind kind_;
  std::string token_;
};

class NTooLarge : public std::out_of_range {
 public:
  NTooLarge(int n, int limit);
  int n() const noexcept { return n_; }
  int limit() const noexcept { return limit_; }

 private:
  int n_;
  int limit_;
};

/// An element of S_n. Immutable once built; the word is validated on construction.
class Permutation {
 public:
  Permutation() = default;
  explicit Permutation(std::vector<int> word);

  static Permutation identity(int n);

  int size() const noexcept { return static_cast<int>(word_.size()); }
  bool empty() const noexcept { return word_.empty(); }

  /// p(i) for 1 <= i <= n.
  int operator()(int i) const { return word_[static_cast<std::size_t>(i - 1)]; }

  std::span<const int> word() const noexcept { return word_; }

  /// Space-separated canonical form, e.g. "2 3 1".
  std::string to_string() const;

  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend auto operator<=>(const Permutation&, const Permutation&) = default;

 private:
  struct Unchecked {};
  Permutation(std::vector<int> word, Unchecked) : word_(std::move(word)) {}
  friend Permutation from_word_unchecked(std::vector<int> word);

  std::vector<int> word_;
};

/// Skips validation; for callers that produce bijections by construction.
Permutation from_word_unchecked(std::vector<int> word);

/// Parses whitespace- and/or comma-separated values.
Permutation parse(std::string_view text);

Permutation inverse(const Permutation& p);
Permutation complement(const Permutation& p);
Permutation reversal(const Permutation& p);
/// Rotation by 180 degrees: complement of the reversal.
Permutation zeta(const Permutation& p);

struct CycleDecomposition {
  std::vector<std::vector<int>> cycles;
  bool standard = false;

  std::string to_string() const;
};

/// Non-standard: cycles by increasing smallest element, each starting at its
/// minimum. Standard: each cycle starts at its minimum and the minima
/// decrease from left to right.
CycleDecomposition cycle_decompose(const Permutation& p, bool standard);

/// Rebuilds the permutation a decomposition describes.
Permutation from_cycles(const CycleDecomposition& d, int n);

enum class Filter {
  All,
  Derangement,
  /// Derangements without cycle double rises.
  DerangementNoCdrise,
};

bool passes(const Permutation& p, Filter filter);

/// Calls fn on each element of S_n in lexicographic order.
void for_each_permutation(int n, Filter filter, const std::function<void(const Permutation&)>& fn,
                          int n_max = kDefaultNMax);

/// Same, restricted to permutations whose first letter is `first`.
/// The blocks for first = 1..n partition S_n in lexicographic order.
void for_each_with_first(int n, int first, Filter filter,
                         const std::function<void(const Permutation&)>& fn);

std::vector<Permutation> enumerate(int n, Filter filter = Filter::All, int n_max = kDefaultNMax);
std::vector<Permutation> enumerate(int n, const std::function<bool(const Permutation&)>& keep,
                                   int n_max = kDefaultNMax);

void check_n(int n, int n_max);

}  // namespace permstat
