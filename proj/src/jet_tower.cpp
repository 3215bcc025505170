#include "jetci/jet_tower.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace jetci {

int jet_dimension(int n, int k) { return n + k * (n - 1); }

BigInt M_coeff(int n, int l, int j) {
  if (j < 0 || j > l) {
    throw std::invalid_argument("M_coeff: need 0 <= j <= l (got l=" + std::to_string(l) + ", j=" + std::to_string(j) +
                                ")");
  }
  static std::mutex mutex;
  static std::map<std::tuple<int, int, int>, BigInt> memo;
  const auto key = std::make_tuple(n, l, j);
  {
    std::lock_guard lock(mutex);
    if (auto it = memo.find(key); it != memo.end()) return it->second;
  }
  BigInt sum = 0;
  for (int i = 0; i <= l - j; ++i) {
    BigInt term = binomial(n - 2 + i + j, i);
    if (i % 2 == 1) term = -term;
    sum += term;
  }
  std::lock_guard lock(mutex);
  memo.emplace(key, sum);
  return sum;
}

// --- JetClass ---------------------------------------------------------------

std::size_t JetClass::KeyHash::operator()(const Key& key) const noexcept {
  std::size_t seed = key.size();
  for (int e : key) seed ^= static_cast<std::size_t>(e) + 0x9e3779b97f4a7c15ULL + (seed << 6) + (seed >> 2);
  return seed;
}

JetClass::JetClass(const ModelParams& params, int level)
    : params_(params), level_(level), max_degree_(jet_dimension(params.n(), level)) {
  if (level < 0) throw std::invalid_argument("JetClass: negative tower level");
}

JetClass JetClass::one(const ModelParams& params, int level) {
  JetClass out(params, level);
  out.add_term(Key(static_cast<std::size_t>(params.n() + 1 + level), 0), 1);
  return out;
}

JetClass JetClass::h(const ModelParams& params, int level) {
  JetClass out(params, level);
  Key key(static_cast<std::size_t>(params.n() + 1 + level), 0);
  key[0] = 1;
  out.add_term(key, 1);
  return out;
}

JetClass JetClass::u(const ModelParams& params, int level, int i) {
  if (i < 1 || i > level) {
    throw std::invalid_argument("JetClass::u: index " + std::to_string(i) + " outside 1.." + std::to_string(level));
  }
  JetClass out(params, level);
  Key key(static_cast<std::size_t>(params.n() + 1 + level), 0);
  key[static_cast<std::size_t>(params.n() + i)] = 1;
  out.add_term(key, 1);
  return out;
}

JetClass JetClass::base_segre(const ModelParams& params, int level, int i) {
  if (i == 0) return one(params, level);
  JetClass out(params, level);
  if (i < 0 || i > params.n()) return out;
  Key key(static_cast<std::size_t>(params.n() + 1 + level), 0);
  key[static_cast<std::size_t>(i)] = 1;
  out.add_term(key, 1);
  return out;
}

int JetClass::degree_of(const Key& key) const {
  const int n = params_.n();
  int deg = key[0];
  for (int i = 1; i <= n; ++i) deg += i * key[static_cast<std::size_t>(i)];
  for (std::size_t j = static_cast<std::size_t>(n + 1); j < key.size(); ++j) deg += key[j];
  return deg;
}

BigInt JetClass::coefficient(const Key& key) const {
  auto it = terms_.find(key);
  return it == terms_.end() ? BigInt(0) : it->second;
}

void JetClass::add_term(const Key& key, const BigInt& coeff) {
  if (key.size() != static_cast<std::size_t>(params_.n() + 1 + level_)) {
    throw std::invalid_argument("JetClass: key length does not match the tower level");
  }
  if (coeff == 0 || degree_of(key) > max_degree_) return;
  auto [it, inserted] = terms_.try_emplace(key, coeff);
  if (!inserted) {
    it->second += coeff;
    if (it->second == 0) terms_.erase(it);
  }
}

JetClass JetClass::lift(int level) const {
  if (level < level_) throw std::invalid_argument("JetClass::lift: cannot lift to a lower level");
  if (level == level_) return *this;
  JetClass out(params_, level);
  out.terms_.reserve(terms_.size());
  for (const auto& [key, coeff] : terms_) {
    Key lifted = key;
    lifted.resize(key.size() + static_cast<std::size_t>(level - level_), 0);
    out.terms_.emplace(std::move(lifted), coeff);
  }
  return out;
}

void JetClass::require_compatible(const JetClass& other) const {
  if (!(params_ == other.params_) || level_ != other.level_) {
    throw std::invalid_argument("JetClass: operands live on different models or tower levels");
  }
}

JetClass& JetClass::operator+=(const JetClass& other) {
  require_compatible(other);
  for (const auto& [key, coeff] : other.terms_) add_term(key, coeff);
  return *this;
}

JetClass& JetClass::operator-=(const JetClass& other) {
  require_compatible(other);
  for (const auto& [key, coeff] : other.terms_) add_term(key, -coeff);
  return *this;
}

JetClass& JetClass::operator*=(const BigInt& scalar) {
  if (scalar == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [key, coeff] : terms_) coeff *= scalar;
  return *this;
}

JetClass operator*(const JetClass& lhs, const JetClass& rhs) {
  lhs.require_compatible(rhs);
  JetClass out(lhs.params_, lhs.level_);
  if (lhs.is_zero() || rhs.is_zero()) return out;

  struct Entry {
    const JetClass::Key* key;
    const BigInt* coeff;
    int degree;
  };
  auto entries = [](const JetClass& x) {
    std::vector<Entry> v;
    v.reserve(x.terms_.size());
    for (const auto& [key, coeff] : x.terms_) v.push_back({&key, &coeff, x.degree_of(key)});
    return v;
  };
  const std::vector<Entry> left = entries(lhs);
  const std::vector<Entry> right = entries(rhs);

  JetClass::Key key(left.front().key->size());
  BigInt prod;
  for (const Entry& l : left) {
    for (const Entry& r : right) {
      if (l.degree + r.degree > out.max_degree_) continue;
      for (std::size_t i = 0; i < key.size(); ++i) key[i] = (*l.key)[i] + (*r.key)[i];
      prod = *l.coeff * *r.coeff;
      auto [it, inserted] = out.terms_.try_emplace(key, prod);
      if (!inserted) {
        it->second += prod;
        if (it->second == 0) out.terms_.erase(it);
      }
    }
  }
  return out;
}

bool operator==(const JetClass& lhs, const JetClass& rhs) {
  return lhs.params_ == rhs.params_ && lhs.level_ == rhs.level_ && lhs.terms_ == rhs.terms_;
}

JetClass JetClass::pow(int exponent) const {
  if (exponent < 0) throw std::invalid_argument("JetClass::pow: negative exponent");
  JetClass result = one(params_, level_);
  JetClass base = *this;
  while (exponent > 0) {
    if (exponent & 1) result = result * base;
    exponent >>= 1;
    if (exponent > 0) base = base * base;
  }
  return result;
}

std::string JetClass::to_string() const {
  if (terms_.empty()) return "0";
  const int n = params_.n();
  // highest degree first, then lexicographically larger keys first
  std::vector<std::pair<Key, BigInt>> sorted(terms_.begin(), terms_.end());
  std::sort(sorted.begin(), sorted.end(), [this](const auto& a, const auto& b) {
    const int da = degree_of(a.first);
    const int db = degree_of(b.first);
    if (da != db) return da > db;
    return std::lexicographical_compare(b.first.rbegin(), b.first.rend(), a.first.rbegin(), a.first.rend());
  });
  std::ostringstream out;
  bool first = true;
  for (const auto& [key, coeff] : sorted) {
    std::vector<std::string> factors;
    for (int j = level_; j >= 1; --j) {
      const int e = key[static_cast<std::size_t>(n + j)];
      if (e > 0) factors.push_back("u" + std::to_string(j) + (e > 1 ? "^" + std::to_string(e) : ""));
    }
    if (key[0] > 0) factors.push_back("h" + (key[0] > 1 ? "^" + std::to_string(key[0]) : std::string()));
    for (int i = 1; i <= n; ++i) {
      const int e = key[static_cast<std::size_t>(i)];
      if (e > 0) factors.push_back("s0_" + std::to_string(i) + (e > 1 ? "^" + std::to_string(e) : ""));
    }
    const bool negative = coeff < 0;
    const BigInt magnitude = abs(coeff);
    if (first) {
      if (negative) out << '-';
    } else {
      out << (negative ? " - " : " + ");
    }
    first = false;
    std::string mono;
    for (const auto& f : factors) mono += (mono.empty() ? "" : "*") + f;
    if (mono.empty()) {
      out << magnitude.get_str();
    } else {
      if (magnitude != 1) out << magnitude.get_str() << '*';
      out << mono;
    }
  }
  return out.str();
}

// --- JetTower ---------------------------------------------------------------

JetTower::JetTower(const ModelParams& params) : params_(params), base_segre_(segre_cotangent(params, 0)) {}

JetClass JetTower::expand_segre(int k, int l) const {
  if (k < 0) throw std::invalid_argument("expand_segre: negative level");
  if (l < 0) return JetClass(params_, k);
  if (l == 0) return JetClass::one(params_, k);
  if (k == 0) return JetClass::base_segre(params_, 0, l);
  if (l > jet_dimension(params_.n(), k)) return JetClass(params_, k);

  {
    std::lock_guard lock(cache_mutex_);
    if (auto it = segre_cache_.find({k, l}); it != segre_cache_.end()) return *it->second;
  }

  const int n = params_.n();
  const std::size_t u_slot = static_cast<std::size_t>(n + k);
  JetClass out(params_, k);
  for (int j = 0; j <= l; ++j) {
    const BigInt coeff = M_coeff(n, l, j);
    if (coeff == 0) continue;
    const JetClass lower = expand_segre(k - 1, j);
    for (const auto& [key, c] : lower.terms()) {
      JetClass::Key lifted = key;
      lifted.push_back(0);
      lifted[u_slot] = l - j;
      out.add_term(lifted, c * coeff);
    }
  }

  std::lock_guard lock(cache_mutex_);
  auto [it, inserted] = segre_cache_.try_emplace({k, l}, std::make_shared<const JetClass>(std::move(out)));
  return *it->second;
}

JetClass JetTower::pushforward_once(const JetClass& x) const {
  const int k = x.level();
  if (k < 1) throw std::invalid_argument("pushforward_once: class already lives on X");
  if (!(x.params() == params_)) throw std::invalid_argument("pushforward_once: class from a different model");
  const int n = params_.n();

  // Collect by the power of u_k; each block is a class on X_{k-1}.
  std::map<int, JetClass> blocks;
  for (const auto& [key, coeff] : x.terms()) {
    const int p = key.back();
    const int segre_index = p - (n - 1);
    if (segre_index < 0) continue;
    auto it = blocks.find(p);
    if (it == blocks.end()) it = blocks.emplace(p, JetClass(params_, k - 1)).first;
    JetClass::Key lower(key.begin(), key.end() - 1);
    it->second.add_term(lower, coeff);
  }

  JetClass out(params_, k - 1);
  for (const auto& [p, block] : blocks) {
    out += expand_segre(k - 1, p - (n - 1)) * block;
  }
  return out;
}

ChowClass JetTower::chow_of_level0(const JetClass::Key& key) const {
  const int n = params_.n();
  ChowClass out = ChowClass::h_power(params_, key[0]);
  for (int i = 1; i <= n; ++i) {
    const int e = key[static_cast<std::size_t>(i)];
    if (e > 0) out = out * base_segre_[static_cast<std::size_t>(i)].pow(e);
  }
  return out;
}

MultidegreePoly JetTower::integrate_jet_normalized(const JetClass& x, IntegrationDiagnostics* diagnostics) const {
  if (!(x.params() == params_)) throw std::invalid_argument("integrate_jet: class from a different model");
  JetClass current = x;
  const int target = jet_dimension(params_.n(), x.level());
  std::size_t low = 0;
  for (const auto& [key, coeff] : x.terms()) {
    if (x.degree_of(key) < target) ++low;
  }
  while (current.level() > 0) current = pushforward_once(current);

  ChowClass total(params_);
  for (const auto& [key, coeff] : current.terms()) {
    if (current.degree_of(key) != params_.n()) continue;
    total += chow_of_level0(key) * coeff;
  }
  if (diagnostics != nullptr) {
    diagnostics->dropped_terms = low;
    diagnostics->dropped_low_degree = low > 0;
  }
  return total.coeff(params_.n());
}

MultidegreePoly JetTower::integrate_jet(const JetClass& x, IntegrationDiagnostics* diagnostics) const {
  return integrate_jet_normalized(x, diagnostics) * elementary_symmetric(params_.c(), params_.c());
}

JetClass JetTower::ell_class(int k) const {
  if (k < 1) throw std::invalid_argument("ell_class: level must be >= 1 (got " + std::to_string(k) + ")");
  JetClass out = JetClass::u(params_, k, k);
  BigInt weight = 2;
  for (int i = k - 1; i >= 1; --i) {
    out += JetClass::u(params_, k, i) * weight;
    weight *= 3;
  }
  out += JetClass::h(params_, k) * weight;
  return out;
}

MorseCertificate JetTower::morse_certificate(int a, const std::vector<BigInt>& degrees) const {
  const int kappa = params_.kappa();
  const int top = jet_dimension(params_.n(), kappa);

  JetClass sum(params_, kappa);
  for (int i = 1; i <= kappa; ++i) sum += ell_class(i).lift(kappa);
  long long m = 1;
  for (int i = 0; i < kappa; ++i) m *= 3;
  m -= 1;

  const JetClass power_below = sum.pow(top - 1);
  const JetClass power_top = power_below * sum;
  const JetClass mixed = power_below * JetClass::h(params_, kappa);

  MorseCertificate cert{params_, a, m, MultidegreePoly(params_.c()), {}, std::nullopt, std::nullopt};
  cert.difference = integrate_jet_normalized(power_top) -
                    integrate_jet_normalized(mixed) * (BigInt(top) * BigInt(static_cast<long>(m + a)));
  if (!degrees.empty()) {
    cert.evaluated_at = degrees;
    cert.value = cert.difference.eval(std::span<const BigInt>(degrees));
    cert.positive = *cert.value > 0;
  }
  return cert;
}

MultidegreePoly JetTower::base_segre_integral(const std::vector<int>& indices, int extra_h) const {
  ChowClass product = ChowClass::h_power(params_, extra_h);
  for (int i : indices) {
    if (i < 0 || i > params_.n()) return MultidegreePoly(params_.c());
    product = product * base_segre_[static_cast<std::size_t>(i)];
  }
  return integrate(product);
}

std::optional<int> uniform_positivity_frontier(const MultidegreePoly& p, int d_max) {
  if (d_max < 1) throw std::invalid_argument("degree scan: d_max must be >= 1");
  std::optional<int> frontier;
  for (int r = d_max; r >= 1; --r) {
    if (p.eval_uniform(BigInt(r)) <= 0) break;
    frontier = r;
  }
  return frontier;
}

std::optional<int> kappa_degree_search(const ModelParams& params, int a, int d_max) {
  const JetTower tower(params);
  return uniform_positivity_frontier(tower.morse_certificate(a).difference, d_max);
}

}  // namespace jetci
