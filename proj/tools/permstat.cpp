#include <cstdint>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "permstat/bijections.hpp"
#include "permstat/master.hpp"
#include "permstat/reduce.hpp"
#include "permstat/series.hpp"
#include "permstat/stats.hpp"
#include "permstat/verify.hpp"

using namespace permstat;
using nlohmann::ordered_json;
namespace fs = std::filesystem;

namespace {

constexpr const char* kCacheVersion = "v1";

struct Config {
  int n_max = kDefaultNMax;
  int symbolic_cap = 6;
  std::string cache_dir;
  std::string format = "auto";
  int threads = 0;
};

std::string fmt(const Config& c, const char* fallback) { return c.format == "auto" ? fallback : c.format; }

std::uint64_t fnv1a(std::string_view s) {
  std::uint64_t h = 1469598103934665603ull;
  for (unsigned char ch : s) {
    h ^= ch;
    h *= 1099511628211ull;
  }
  return h;
}

std::string hex(std::uint64_t v) {
  std::ostringstream os;
  os << std::hex << v;
  return os.str();
}

std::string cache_dir(const Config& c) {
  if (const char* env = std::getenv("PERMSTAT_CACHE"); env && *env) return env;
  return c.cache_dir;
}

// Reads <dir>/<key>_<n>_<version>.json, recomputing when missing or when the
// stored hash does not match the stored polynomial.
template <class Fn>
Poly cached(const Config& c, const std::string& key, int n, Fn&& compute) {
  const std::string dir = cache_dir(c);
  if (dir.empty()) return compute();
  const fs::path file = fs::path(dir) / (key + "_" + std::to_string(n) + "_" + kCacheVersion + ".json");
  if (std::ifstream in(file); in) {
    try {
      const auto j = nlohmann::json::parse(in);
      const std::string body = j.at("poly").dump();
      if (j.at("hash").get<std::string>() == hex(fnv1a(body))) return Poly::from_json(body);
      std::cerr << "cache entry " << file << " failed its hash check; recomputing\n";
    } catch (const std::exception& e) {
      std::cerr << "cache entry " << file << " unreadable (" << e.what() << "); recomputing\n";
    }
  }
  Poly p = compute();
  const std::string body = nlohmann::json::parse(p.to_json()).dump();
  ordered_json j;
  j["key"] = key;
  j["n"] = n;
  j["version"] = kCacheVersion;
  j["poly"] = nlohmann::json::parse(body);
  j["hash"] = hex(fnv1a(body));
  std::error_code ec;
  fs::create_directories(dir, ec);
  if (std::ofstream out(file); out) out << j.dump() << "\n";
  return p;
}

void emit_poly(const Config& c, const std::string& label, int n, const Poly& p) {
  const std::string f = fmt(c, "json");
  if (f == "json") {
    ordered_json j;
    j["name"] = label;
    j["n"] = n;
    j["poly"] = ordered_json::parse(p.to_json());
    std::cout << j.dump() << "\n";
  } else if (f == "csv") {
    std::cout << "monomial,coeff\n";
    for (const auto& [m, q] : canonical_terms(p))
      std::cout << Poly::monomial(m).to_string() << "," << rational_string(q) << "\n";
  } else {
    std::cout << p.to_string() << "\n";
  }
}

Filter parse_filter(const std::string& s) {
  if (s == "all") return Filter::All;
  if (s == "derangement") return Filter::Derangement;
  if (s == "dstar") return Filter::DerangementNoCdrise;
  throw std::invalid_argument("unknown filter '" + s + "'");
}

std::vector<int> parse_subset(std::string_view s) {
  std::vector<int> out;
  std::string tok;
  std::istringstream is{std::string(s)};
  while (std::getline(is, tok, ','))
    if (!tok.empty()) out.push_back(std::stoi(tok));
  return out;
}

int cmd_stats(const Config& c, const std::string& text) {
  const Permutation p = parse(text);
  const StatVector sv = stat_vector(p);
  const std::string f = fmt(c, "json");
  if (f == "json") {
    std::cout << sv.to_json() << "\n";
  } else if (f == "csv") {
    std::string header, row;
    for (Stat s : all_stats()) {
      header += (header.empty() ? "" : ",") + std::string(stat_name(s));
      row += (row.empty() ? "" : ",") + std::to_string(sv[s]);
    }
    std::cout << header << "\n" << row << "\n";
  } else {
    for (Stat s : all_stats()) std::cout << stat_name(s) << " " << sv[s] << "\n";
  }
  return 0;
}

int cmd_biject(const Config& c, const std::string& map, const std::string& text, bool trace) {
  const Permutation p = parse(text);
  Permutation q;
  BiwordTrace bt;
  std::vector<std::string> blocks;
  bool has_trace = false;
  if (map == "foata") {
    q = foata_phi(p);
  } else if (map == "foata-c") {
    q = foata_varphi(p);
  } else if (map == "phi1") {
    q = phi1(p, trace ? &bt : nullptr);
    has_trace = trace;
  } else if (map == "phi1-inv") {
    q = phi1_inverse(p, trace ? &blocks : nullptr);
  } else if (map == "phisz") {
    q = phi_sz(p, trace ? &bt : nullptr);
    has_trace = trace;
  } else if (map == "phi2") {
    q = phi2(p);
  } else if (map == "zeta") {
    q = zeta(p);
  } else if (map.rfind("hop:", 0) == 0) {
    q = valley_hop_set(p, parse_subset(std::string_view(map).substr(4)));
  } else {
    std::cerr << "unknown map '" << map << "'\n";
    return 2;
  }
  if (fmt(c, "text") == "json" || trace) {
    ordered_json j;
    j["map"] = map;
    j["input"] = p.to_string();
    j["output"] = q.to_string();
    if (has_trace) j["trace"] = ordered_json::parse(bt.to_json());
    if (!blocks.empty()) j["trace"] = blocks;
    std::cout << j.dump() << "\n";
  } else {
    std::cout << q.to_string() << "\n";
  }
  return 0;
}

int cmd_poly(const Config& c, const std::string& family, int n) {
  const Family f = parse_family(family);
  check_n(n, c.n_max);
  const Poly p = cached(c, std::string(family_name(f)), n, [&] { return family_poly(f, n, c.n_max); });
  emit_poly(c, std::string(family_name(f)), n, p);
  return 0;
}

int cmd_cf(const Config& c, const std::string& spec, int order, const std::string& backend) {
  const Family f = parse_family(spec);
  const CfBackend b = backend == "nested" ? CfBackend::Nested : CfBackend::Motzkin;
  if (backend != "nested" && backend != "motzkin") throw std::invalid_argument("unknown backend '" + backend + "'");
  const Series s = jfraction_expand(family_spec(f), order, b);
  const std::string fm = fmt(c, "json");
  if (fm == "json") {
    std::cout << s.to_json() << "\n";
  } else {
    if (fm == "csv") std::cout << "n,coefficient\n";
    for (int n = 0; n <= s.order(); ++n)
      std::cout << n << (fm == "csv" ? "," : ": ") << s[n].to_string() << "\n";
  }
  return 0;
}

int cmd_gamma(const Config& c, int n) {
  check_n(n, c.n_max);
  const Poly d = cached(c, "D", n, [&] { return D_poly(n, c.n_max); });
  const std::vector<Poly> g = gamma_decompose(d, n, var("t"));
  const std::string fm = fmt(c, "json");
  if (fm == "json") {
    ordered_json j;
    j["n"] = n;
    j["gamma"] = nlohmann::json::array();
    for (const Poly& p : g) j["gamma"].push_back(ordered_json::parse(p.to_json()));
    std::cout << j.dump() << "\n";
  } else {
    if (fm == "csv") std::cout << "k,gamma\n";
    for (std::size_t k = 0; k < g.size(); ++k) std::cout << k << (fm == "csv" ? "," : ": ") << g[k].to_string() << "\n";
  }
  return 0;
}

int cmd_master(const Config& c, const std::string& which, int n, const std::string& scheme) {
  const Master m = parse_master(which);
  const WeightScheme s = scheme_by_name(scheme);
  const int cap = scheme == "symbolic" ? c.symbolic_cap : c.n_max;
  check_n(n, cap);
  const Poly p = cached(c, "master-" + which + "-" + scheme, n, [&] { return Q_master(m, n, s, c.n_max); });
  emit_poly(c, "master-" + which + "-" + scheme, n, p);
  return 0;
}

int cmd_verify(const Config& c, const std::string& id, int n_max, bool list) {
  if (list) {
    for (const CheckInfo& info : check_list())
      std::cout << info.id << (info.conjecture ? " [conjecture] " : " ") << info.description << "\n";
    return 0;
  }
  VerifyConfig vc;
  vc.symbolic_cap = c.symbolic_cap;
  const int k = n_max >= 0 ? n_max : c.n_max;
  std::vector<Report> reports;
  if (id.empty())
    reports = run_all(k, vc);
  else
    reports.push_back(check(id, k, vc));
  std::cout << summarize(reports, fmt(c, "text") == "json" ? DigestFormat::Json : DigestFormat::Text);
  return any_theorem_failed(reports) ? 1 : 0;
}

int cmd_orbit(const Config& c, const std::string& text) {
  const Permutation p = parse(text);
  const Orbit o = orbit_of(p);
  const VarId t = var("t");
  Poly sum;
  for (const Permutation& q : o.members) {
    const StatVector s = stat_vector(q);
    sum += Poly::monomial(Monomial::of(t, static_cast<std::uint32_t>(s[Stat::asc_padded] - s[Stat::fmax])));
  }
  const std::string fm = fmt(c, "text");
  if (fm == "json") {
    ordered_json j;
    j["representative"] = o.representative.to_string();
    j["size"] = o.members.size();
    std::vector<std::string> members;
    for (const auto& q : o.members) members.push_back(q.to_string());
    j["members"] = members;
    j["asc_minus_fmax"] = ordered_json::parse(sum.to_json());
    std::cout << j.dump() << "\n";
  } else {
    std::cout << "representative " << o.representative.to_string() << "\n";
    std::cout << "size " << o.members.size() << "\n";
    std::cout << "sum t^(asc-fmax) = " << sum.to_string() << "\n";
    for (const auto& q : o.members) std::cout << q.to_string() << "\n";
  }
  return 0;
}

int cmd_dist(const Config& c, const std::string& stats, int n, const std::string& filter) {
  check_n(n, c.n_max);
  std::vector<Stat> list;
  std::istringstream is(stats);
  for (std::string tok; std::getline(is, tok, ',');) list.push_back(parse_stat(tok));
  if (list.empty()) throw std::invalid_argument("no statistics given");
  const auto t = tally_parallel<std::vector<int>>(n, parse_filter(filter), [&](const Permutation& p) {
    const StatVector sv = stat_vector(p);
    std::vector<int> k;
    for (Stat s : list) k.push_back(sv[s]);
    return std::optional<std::vector<int>>(k);
  });
  if (fmt(c, "csv") == "json") {
    ordered_json j = ordered_json::array();
    for (const auto& [k, cnt] : t) {
      ordered_json row;
      for (std::size_t i = 0; i < list.size(); ++i) row[std::string(stat_name(list[i]))] = k[i];
      row["count"] = cnt;
      j.push_back(row);
    }
    std::cout << j.dump() << "\n";
    return 0;
  }
  for (Stat s : list) std::cout << stat_name(s) << ",";
  std::cout << "count\n";
  for (const auto& [k, cnt] : t) {
    for (int v : k) std::cout << v << ",";
    std::cout << cnt << "\n";
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Permutation statistics, master polynomials and their continued fractions"};
  app.require_subcommand(1);
  Config cfg;
  app.add_option("--format", cfg.format, "Output format")->check(CLI::IsMember({"auto", "json", "csv", "text"}));
  app.add_option("--threads", cfg.threads, "Worker threads (0 = OpenMP default)")->check(CLI::NonNegativeNumber);
  app.add_option("--cache-dir", cfg.cache_dir, "Polynomial cache directory (PERMSTAT_CACHE overrides)");
  app.add_option("--symbolic-cap", cfg.symbolic_cap, "Largest n for fully symbolic master polynomials");
  app.add_option("--max-n", cfg.n_max, "Largest n accepted for enumeration")->check(CLI::Range(0, kHardNCeiling));

  std::string perm, map, family, spec, backend = "motzkin", which = "first", scheme = "symbolic", check_id;
  std::string dist_stats = "des2,ear", filter = "all";
  int n = 0, order = 10, verify_n = -1;
  bool trace = false, list = false;

  auto* stats = app.add_subcommand("stats", "All statistics of a permutation");
  stats->add_option("perm", perm, "Permutation in one-line notation")->required();

  auto* biject = app.add_subcommand("biject", "Apply a bijection");
  biject->add_option("--map", map, "foata|foata-c|phi1|phi1-inv|phisz|phi2|zeta|hop:S")->required();
  biject->add_option("perm", perm)->required();
  biject->add_flag("--trace", trace, "Emit intermediate states as JSON");

  auto* poly = app.add_subcommand("poly", "Polynomial of a family");
  poly->add_option("family", family, "A|B|C|D")->required();
  poly->add_option("--n", n)->required();

  auto* cf = app.add_subcommand("cf", "J-fraction expansion");
  cf->add_option("--spec", spec, "A|B|C|D|conj52|gamma")->required();
  cf->add_option("--order", order)->required();
  cf->add_option("--backend", backend)->check(CLI::IsMember({"motzkin", "nested"}));

  auto* gamma = app.add_subcommand("gamma", "Gamma coefficients of D_n");
  gamma->add_option("--n", n)->required();

  auto* master = app.add_subcommand("master", "Master polynomial under a weight scheme");
  master->add_option("--which", which)->check(CLI::IsMember({"first", "second", "dual", "linear1", "linear2"}));
  master->add_option("--n", n)->required();
  master->add_option("--scheme", scheme)->check(CLI::IsMember(scheme_names()));

  auto* verify = app.add_subcommand("verify", "Run identity and conjecture checks");
  verify->add_option("--check", check_id);
  verify->add_option("--n-max", verify_n)->check(CLI::Range(0, kHardNCeiling));
  verify->add_flag("--list", list, "List check ids");

  auto* orbit = app.add_subcommand("orbit", "Valley-hopping orbit");
  orbit->add_option("perm", perm)->required();

  auto* dist = app.add_subcommand("dist", "Joint distribution table");
  dist->add_option("--stats", dist_stats, "Comma-separated statistic names");
  dist->add_option("--n", n)->required();
  dist->add_option("--filter", filter)->check(CLI::IsMember({"all", "derangement", "dstar"}));

  CLI11_PARSE(app, argc, argv);

  if (cfg.symbolic_cap < 0 || cfg.symbolic_cap > cfg.n_max) {
    std::cerr << "need 0 <= symbolic-cap <= max-n <= " << kHardNCeiling << "\n";
    return 2;
  }
  set_threads(cfg.threads);

  try {
    if (*stats) return cmd_stats(cfg, perm);
    if (*biject) return cmd_biject(cfg, map, perm, trace);
    if (*poly) return cmd_poly(cfg, family, n);
    if (*cf) return cmd_cf(cfg, spec, order, backend);
    if (*gamma) return cmd_gamma(cfg, n);
    if (*master) return cmd_master(cfg, which, n, scheme);
    if (*verify) return cmd_verify(cfg, check_id, verify_n, list);
    if (*orbit) return cmd_orbit(cfg, perm);
    if (*dist) return cmd_dist(cfg, dist_stats, n, filter);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
