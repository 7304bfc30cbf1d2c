#pragma once

// Registry of identity and conjecture checks, each run by exhaustive
// enumeration up to a size bound.

#include <functional>
#include <map>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace permstat {

enum class Verdict { Pass, Fail, ConjectureHolds, ConjectureFails };

std::string_view verdict_name(Verdict v);

struct Report {
  std::string check_id;
  int n_min = 0;
  int n_max = 0;
  Verdict verdict = Verdict::Pass;
  std::vector<std::string> witnesses;
  std::vector<std::string> notes;
  double runtime_ms = 0;

  bool is_conjecture() const { return verdict == Verdict::ConjectureHolds || verdict == Verdict::ConjectureFails; }
  bool failed_theorem() const { return verdict == Verdict::Fail; }
  std::string to_json() const;
};

struct VerifyConfig {
  int symbolic_cap = 6;  // fully symbolic master identities
  int numeric_cap = 8;   // master identities under numeric schemes
  int engine_cap = 7;    // comparisons against the O(n^4) reference
  int hop_cap = 6;       // every subset S of [n]
  int orbit_cap = 7;     // orbit sums and sampled hop sets
  int hop_samples = 8;   // sampled subsets per permutation above hop_cap
  int cf_order = 10;
  /// Per-check overrides of the upper bound.
  std::map<std::string, int> caps;
};

class UnknownCheckId : public std::invalid_argument {
 public:
  explicit UnknownCheckId(const std::string& id);
};

struct CheckInfo {
  std::string id;
  std::string description;
  bool conjecture = false;
};

/// Registry order, which is also the run_all order.
const std::vector<CheckInfo>& check_list();

Report check(std::string_view check_id, int n_max, const VerifyConfig& cfg = {});
std::vector<Report> run_all(int n_max, const VerifyConfig& cfg = {});

enum class DigestFormat { Text, Json };
std::string summarize(const std::vector<Report>& reports, DigestFormat format);

/// True iff some theorem check failed.
bool any_theorem_failed(const std::vector<Report>& reports);

}  // namespace permstat
