#include "permstat/poly.hpp"

#include <algorithm>
#include <cctype>
#include <deque>
#include <mutex>
#include <shared_mutex>
#include <unordered_map>

#include <json.hpp>

namespace permstat {

namespace {

class VarTable {
 public:
  VarId intern(std::string_view name) {
    {
      std::shared_lock lock(mu_);
      if (auto it = ids_.find(std::string(name)); it != ids_.end()) return it->second;
    }
    std::unique_lock lock(mu_);
    if (auto it = ids_.find(std::string(name)); it != ids_.end()) return it->second;
    VarInfo info = split(name);
    const auto id = static_cast<VarId>(infos_.size());
    infos_.push_back(std::move(info));
    ids_.emplace(std::string(name), id);
    return id;
  }

  const VarInfo& info(VarId id) const {
    std::shared_lock lock(mu_);
    if (id >= infos_.size()) throw std::out_of_range("unknown variable id");
    // deque never relocates existing elements.
    return infos_[id];
  }

 private:
  static VarInfo split(std::string_view name) {
    VarInfo info;
    info.name = std::string(name);
    const auto open = name.find('[');
    if (open == std::string_view::npos) {
      if (name.empty() || !(std::isalpha(static_cast<unsigned char>(name[0])) || name[0] == '_'))
        throw std::invalid_argument("bad variable name '" + std::string(name) + "'");
      info.base = info.name;
      return info;
    }
    if (name.back() != ']') throw std::invalid_argument("bad variable name '" + std::string(name) + "'");
    info.base = std::string(name.substr(0, open));
    std::string_view body = name.substr(open + 1, name.size() - open - 2);
    while (!body.empty()) {
      const auto comma = body.find(',');
      const auto tok = body.substr(0, comma);
      info.indices.push_back(std::stoi(std::string(tok)));
      if (comma == std::string_view::npos) break;
      body.remove_prefix(comma + 1);
    }
    return info;
  }

  mutable std::shared_mutex mu_;
  std::unordered_map<std::string, VarId> ids_;
  std::deque<VarInfo> infos_;
};

VarTable& table() {
  static VarTable t;
  return t;
}

std::string indexed_name(std::string_view base, std::span<const int> indices) {
  std::string name(base);
  name += '[';
  for (std::size_t i = 0; i < indices.size(); ++i) {
    if (i) name += ',';
    name += std::to_string(indices[i]);
  }
  name += ']';
  return name;
}

// Names of the factors, for ordering independent of interning order.
std::vector<std::pair<std::string, std::uint32_t>> named(const Monomial& m) {
  std::vector<std::pair<std::string, std::uint32_t>> out;
  for (auto [v, e] : m.factors()) out.emplace_back(var_name(v), e);
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

VarId var(std::string_view name) { return table().intern(name); }

VarId var(std::string_view base, std::initializer_list<int> indices) {
  return var(base, std::span<const int>(indices.begin(), indices.size()));
}

VarId var(std::string_view base, std::span<const int> indices) {
  return table().intern(indexed_name(base, indices));
}

VarInfo var_info(VarId id) { return table().info(id); }
const std::string& var_name(VarId id) { return table().info(id).name; }

Monomial Monomial::of(VarId v, std::uint32_t exp) {
  Monomial m;
  if (exp > 0) m.f_.emplace_back(v, exp);
  return m;
}

std::uint32_t Monomial::exponent(VarId v) const {
  for (auto [u, e] : f_)
    if (u == v) return e;
  return 0;
}

std::uint32_t Monomial::degree() const {
  std::uint32_t d = 0;
  for (auto [u, e] : f_) d += e;
  return d;
}

Monomial Monomial::operator*(const Monomial& o) const {
  Monomial r;
  r.f_.reserve(f_.size() + o.f_.size());
  auto a = f_.begin(), b = o.f_.begin();
  while (a != f_.end() && b != o.f_.end()) {
    if (a->first < b->first) r.f_.push_back(*a++);
    else if (b->first < a->first) r.f_.push_back(*b++);
    else {
      r.f_.emplace_back(a->first, a->second + b->second);
      ++a;
      ++b;
    }
  }
  r.f_.insert(r.f_.end(), a, f_.end());
  r.f_.insert(r.f_.end(), b, o.f_.end());
  return r;
}

Monomial Monomial::without(VarId v) const {
  Monomial r;
  for (auto f : f_)
    if (f.first != v) r.f_.push_back(f);
  return r;
}

Assignment& Assignment::set(VarId v, Poly value) {
  exact_[v] = std::move(value);
  return *this;
}

Assignment& Assignment::set(std::string_view name, Poly value) { return set(var(name), std::move(value)); }

Assignment& Assignment::set_family(std::string base, IndexPredicate match, Poly value) {
  rules_.push_back({std::move(base), [match = std::move(match), value = std::move(value)](
                                         std::span<const int> idx) -> std::optional<Poly> {
                      if (match(idx)) return value;
                      return std::nullopt;
                    }});
  return *this;
}

Assignment& Assignment::set_family(std::string base, std::function<Poly(std::span<const int>)> value_of) {
  rules_.push_back({std::move(base), [value_of = std::move(value_of)](std::span<const int> idx)
                                         -> std::optional<Poly> { return value_of(idx); }});
  return *this;
}

std::optional<Poly> Assignment::lookup(VarId v) const {
  if (auto it = exact_.find(v); it != exact_.end()) return it->second;
  if (rules_.empty()) return std::nullopt;
  const VarInfo& info = table().info(v);
  for (const auto& rule : rules_) {
    if (rule.base != info.base) continue;
    if (auto value = rule.value(info.indices)) return value;
  }
  return std::nullopt;
}

Poly::Poly(long c) {
  if (c != 0) terms_.emplace(Monomial{}, Rational(c));
}

Poly::Poly(const Rational& c) { add_term(Monomial{}, c); }

Poly Poly::variable(VarId v) { return monomial(Monomial::of(v)); }

Poly Poly::monomial(Monomial m, Rational c) {
  Poly p;
  p.add_term(m, c);
  return p;
}

std::optional<Rational> Poly::as_constant() const {
  if (terms_.empty()) return Rational(0);
  if (terms_.size() == 1 && terms_.begin()->first.is_one()) return terms_.begin()->second;
  return std::nullopt;
}

void Poly::add_term(const Monomial& m, const Rational& c) {
  if (c == 0) return;
  Rational q = c;
  q.canonicalize();
  auto [it, inserted] = terms_.try_emplace(m, q);
  if (!inserted) {
    it->second += q;
    if (it->second == 0) terms_.erase(it);
  }
}

Poly& Poly::operator+=(const Poly& o) {
  for (const auto& [m, c] : o.terms_) add_term(m, c);
  return *this;
}

Poly& Poly::operator-=(const Poly& o) {
  for (const auto& [m, c] : o.terms_) add_term(m, Rational(-c));
  return *this;
}

Poly Poly::operator-() const {
  Poly r = *this;
  for (auto& [m, c] : r.terms_) c = -c;
  return r;
}

Poly operator*(const Poly& a, const Poly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  // Accumulate in a hash of monomials before sorting into the map.
  struct Hash {
    std::size_t operator()(const Monomial& m) const noexcept {
      std::size_t h = 1469598103934665603ull;
      for (auto [v, e] : m.factors()) {
        h ^= (static_cast<std::size_t>(v) << 8) ^ e;
        h *= 1099511628211ull;
      }
      return h;
    }
  };
  std::unordered_map<Monomial, Rational, Hash> acc;
  acc.reserve(a.terms_.size() * b.terms_.size());
  Rational prod;
  for (const auto& [ma, ca] : a.terms_)
    for (const auto& [mb, cb] : b.terms_) {
      mpq_mul(prod.get_mpq_t(), ca.get_mpq_t(), cb.get_mpq_t());
      auto [it, inserted] = acc.try_emplace(ma * mb, prod);
      if (!inserted) it->second += prod;
    }
  Poly r;
  for (auto& [m, c] : acc)
    if (c != 0) r.terms_.emplace(m, std::move(c));
  return r;
}

Poly Poly::scale(const Rational& c) const {
  if (c == 0) return {};
  Poly r = *this;
  for (auto& [m, k] : r.terms_) k *= c;
  return r;
}

Poly Poly::pow(unsigned k) const {
  Poly result(1L);
  Poly base = *this;
  while (k) {
    if (k & 1u) result *= base;
    k >>= 1u;
    if (k) base *= base;
  }
  return result;
}

Poly Poly::coefficient_of(VarId v, unsigned k) const {
  Poly r;
  for (const auto& [m, c] : terms_)
    if (m.exponent(v) == k) r.terms_.emplace(m.without(v), c);
  return r;
}

unsigned Poly::degree(VarId v) const {
  unsigned d = 0;
  for (const auto& [m, c] : terms_) d = std::max(d, m.exponent(v));
  return d;
}

unsigned Poly::total_degree() const {
  unsigned d = 0;
  for (const auto& [m, c] : terms_) d = std::max(d, m.degree());
  return d;
}

std::vector<VarId> Poly::variables() const {
  std::vector<VarId> vs;
  for (const auto& [m, c] : terms_)
    for (auto [v, e] : m.factors()) vs.push_back(v);
  std::sort(vs.begin(), vs.end());
  vs.erase(std::unique(vs.begin(), vs.end()), vs.end());
  return vs;
}

Rational Poly::eval(const std::map<VarId, Rational>& point) const {
  Rational total = 0;
  for (const auto& [m, c] : terms_) {
    Rational term = c;
    for (auto [v, e] : m.factors()) {
      auto it = point.find(v);
      if (it == point.end()) throw std::invalid_argument("eval: variable '" + var_name(v) + "' is unbound");
      for (std::uint32_t i = 0; i < e; ++i) term *= it->second;
    }
    total += term;
  }
  return total;
}

Poly Poly::divide_exact(const Poly& divisor, VarId v) const {
  if (divisor.is_zero()) throw std::domain_error("division by zero polynomial");
  const unsigned dd = divisor.degree(v);
  const auto lead = divisor.coefficient_of(v, dd).as_constant();
  if (!lead || *lead == 0)
    throw std::domain_error("divide_exact: leading coefficient must be a rational constant");
  Poly remainder = *this;
  Poly quotient;
  while (!remainder.is_zero()) {
    const unsigned rd = remainder.degree(v);
    if (rd < dd) break;
    const Poly top = remainder.coefficient_of(v, rd).scale(Rational(1 / *lead));
    const Poly step = top * Poly::monomial(Monomial::of(v, rd - dd));
    quotient += step;
    remainder -= step * divisor;
  }
  if (!remainder.is_zero()) throw NotDivisible("divide_exact: nonzero remainder " + remainder.to_string());
  return quotient;
}

std::vector<std::pair<Monomial, Rational>> canonical_terms(const Poly& p) {
  std::vector<std::tuple<std::uint32_t, std::vector<std::pair<std::string, std::uint32_t>>, const Monomial*,
                         const Rational*>>
      keyed;
  keyed.reserve(p.term_count());
  for (const auto& [m, c] : p.terms()) keyed.emplace_back(m.degree(), named(m), &m, &c);
  std::sort(keyed.begin(), keyed.end(), [](const auto& a, const auto& b) {
    if (std::get<0>(a) != std::get<0>(b)) return std::get<0>(a) < std::get<0>(b);
    return std::get<1>(a) < std::get<1>(b);
  });
  std::vector<std::pair<Monomial, Rational>> out;
  out.reserve(keyed.size());
  for (const auto& k : keyed) out.emplace_back(*std::get<2>(k), *std::get<3>(k));
  return out;
}

std::string rational_string(const Rational& r) { return r.get_str(); }

std::string Poly::to_string() const {
  if (is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [m, c] : canonical_terms(*this)) {
    Rational mag = abs(c);
    if (first) {
      if (c < 0) out += "-";
    } else {
      out += c < 0 ? " - " : " + ";
    }
    first = false;
    const auto factors = named(m);
    if (factors.empty()) {
      out += mag.get_str();
      continue;
    }
    if (mag != 1) out += mag.get_str() + "*";
    for (std::size_t i = 0; i < factors.size(); ++i) {
      if (i) out += "*";
      out += factors[i].first;
      if (factors[i].second > 1) out += "^" + std::to_string(factors[i].second);
    }
  }
  return out;
}

std::string Poly::to_json() const {
  std::string out = "[";
  bool first = true;
  for (const auto& [m, c] : canonical_terms(*this)) {
    if (!first) out += ",";
    first = false;
    out += "{\"vars\":{";
    const auto factors = named(m);
    for (std::size_t i = 0; i < factors.size(); ++i) {
      if (i) out += ",";
      out += "\"" + factors[i].first + "\":" + std::to_string(factors[i].second);
    }
    out += "},\"coeff\":\"" + c.get_num().get_str() + "/" + c.get_den().get_str() + "\"}";
  }
  return out + "]";
}

Poly Poly::from_json(std::string_view text) {
  const auto doc = nlohmann::json::parse(text);
  if (!doc.is_array()) throw std::invalid_argument("polynomial JSON must be an array");
  Poly p;
  for (const auto& term : doc) {
    Monomial m;
    for (const auto& [name, exp] : term.at("vars").items())
      m *= Monomial::of(var(name), exp.get<std::uint32_t>());
    Rational c(term.at("coeff").get<std::string>());
    c.canonicalize();
    p.add_term(m, c);
  }
  return p;
}

Poly substitute(const Poly& p, const Assignment& a) {
  std::map<VarId, std::optional<Poly>> images;
  std::map<std::pair<VarId, std::uint32_t>, Poly> powers;
  auto power = [&](VarId v, std::uint32_t e) -> const Poly& {
    auto key = std::make_pair(v, e);
    if (auto it = powers.find(key); it != powers.end()) return it->second;
    return powers.emplace(key, images.at(v)->pow(e)).first->second;
  };
  Poly out;
  for (const auto& [m, c] : p.terms()) {
    Monomial kept;
    Poly factor(c);
    for (auto [v, e] : m.factors()) {
      auto it = images.find(v);
      if (it == images.end()) it = images.emplace(v, a.lookup(v)).first;
      if (!it->second) {
        kept *= Monomial::of(v, e);
      } else {
        factor *= power(v, e);
        if (factor.is_zero()) break;
      }
    }
    if (factor.is_zero()) continue;
    out += factor * Poly::monomial(kept);
  }
  return out;
}

}  // namespace permstat
