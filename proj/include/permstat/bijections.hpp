#pragma once

// Bijections on S_n: the Foata-type map and its complement, the biword maps
// Phi_1 and Phi_SZ (with Phi_1's block-building inverse), Phi_2, and
// valley hopping with its orbits.

#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "permstat/permutation.hpp"

namespace permstat {

class ConstructionFailure : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

class MalformedBlocks : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

struct Biword {
  std::vector<int> top;
  std::vector<int> bottom;

  std::string to_string() const;
};

/// Intermediate data of a biword construction.
struct BiwordTrace {
  std::vector<int> F, Fp, G, Gp;
  Biword fpart, gpart;
  std::vector<int> p31_2;  // indexed by value

  std::string to_json() const;
};

Permutation foata_phi(const Permutation& p);
/// Complement of foata_phi.
Permutation foata_varphi(const Permutation& p);

Permutation phi1(const Permutation& p, BiwordTrace* trace = nullptr);
/// Each entry is the block state after inserting one letter, e.g. "(4)(∞,1)(∞,3,2)".
Permutation phi1_inverse(const Permutation& q, std::vector<std::string>* trace = nullptr);
Permutation phi_sz(const Permutation& p, BiwordTrace* trace = nullptr);
/// zeta after phi_sz.
Permutation phi2(const Permutation& p);

/// Hops under the boundary p(0) = 0, p(n+1) = n+1. Peaks, valleys and
/// foremaxima are fixed.
Permutation valley_hop(const Permutation& p, int x);
/// Applies the hops for x in S in ascending order.
Permutation valley_hop_set(const Permutation& p, const std::vector<int>& S);

struct Orbit {
  Permutation representative;
  std::set<Permutation> members;
};

Orbit orbit_of(const Permutation& p);

}  // namespace permstat
