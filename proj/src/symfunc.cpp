#include "daha/symfunc.hpp"

#include <algorithm>
#include <mutex>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace daha {

bool is_partition(const Partition& mu) {
  for (size_t i = 0; i < mu.size(); ++i) {
    if (mu[i] <= 0) return false;
    if (i > 0 && mu[i] > mu[i - 1]) return false;
  }
  return true;
}

namespace {

void gen_partitions(int n, int maxpart, Partition& cur,
                    std::vector<Partition>& out) {
  if (n == 0) {
    out.push_back(cur);
    return;
  }
  for (int a = std::min(n, maxpart); a >= 1; --a) {
    cur.push_back(a);
    gen_partitions(n - a, a, cur, out);
    cur.pop_back();
  }
}

// All distinct arrangements of mu padded with zeros to nvars slots.
std::vector<std::vector<int>> distinct_arrangements(const Partition& mu,
                                                    int nvars) {
  std::vector<int> v(nvars, 0);
  std::copy(mu.begin(), mu.end(), v.begin());
  std::sort(v.begin(), v.end());
  std::vector<std::vector<int>> out;
  do {
    out.push_back(v);
  } while (std::next_permutation(v.begin(), v.end()));
  return out;
}

std::mutex cache_mu;

}  // namespace

std::vector<Partition> partitions_of(int n) {
  if (n < 0) throw std::invalid_argument("partitions_of: negative degree");
  static std::map<int, std::vector<Partition>> cache;
  std::lock_guard<std::mutex> lock(cache_mu);
  auto it = cache.find(n);
  if (it != cache.end()) return it->second;
  std::vector<Partition> out;
  Partition cur;
  gen_partitions(n, n == 0 ? 1 : n, cur, out);
  cache[n] = out;
  return out;
}

void SymFn::add_term(const Partition& mu, const RatQT& c) {
  if (c.is_zero()) return;
  auto it = terms_.find(mu);
  if (it == terms_.end()) {
    terms_.emplace(mu, c);
    return;
  }
  it->second = it->second + c;
  if (it->second.is_zero()) terms_.erase(it);
}

SymFn SymFn::one() { return m({}); }

SymFn SymFn::m(const Partition& mu, RatQT c) {
  if (!is_partition(mu)) throw std::invalid_argument("m: not a partition");
  int d = std::accumulate(mu.begin(), mu.end(), 0);
  if (d > kSymDegreeCap) throw std::domain_error("m: degree cap exceeded");
  SymFn f;
  f.add_term(mu, c);
  return f;
}

SymFn SymFn::h(int n) {
  if (n < 0) throw std::invalid_argument("h: negative degree");
  SymFn f;
  for (const auto& mu : partitions_of(n)) f.add_term(mu, RatQT(1));
  return f;
}

SymFn SymFn::p(int n) {
  if (n < 1) throw std::invalid_argument("p: degree must be positive");
  return m({n});
}

SymFn SymFn::e(int n) {
  if (n < 0) throw std::invalid_argument("e: negative degree");
  return m(Partition(n, 1));
}

RatQT SymFn::coeff(const Partition& mu) const {
  auto it = terms_.find(mu);
  return it == terms_.end() ? RatQT() : it->second;
}

int SymFn::degree() const {
  int d = 0;
  for (const auto& [mu, c] : terms_)
    d = std::max(d, std::accumulate(mu.begin(), mu.end(), 0));
  return d;
}

SymFn SymFn::operator+(const SymFn& o) const {
  SymFn out = *this;
  for (const auto& [mu, c] : o.terms_) out.add_term(mu, c);
  return out;
}

SymFn SymFn::operator-(const SymFn& o) const {
  SymFn out = *this;
  for (const auto& [mu, c] : o.terms_) out.add_term(mu, -c);
  return out;
}

SymFn SymFn::operator-() const {
  SymFn out;
  for (const auto& [mu, c] : terms_) out.terms_.emplace(mu, -c);
  return out;
}

SymFn SymFn::scale(const RatQT& c) const {
  SymFn out;
  if (c.is_zero()) return out;
  for (const auto& [mu, co] : terms_) out.terms_.emplace(mu, co * c);
  return out;
}

namespace {

// m_lam * m_mu expanded back into the monomial basis. Working alphabet of
// len(lam)+len(mu) variables suffices: every product partition fits.
std::map<Partition, long> m_times_m(const Partition& lam, const Partition& mu) {
  static std::map<std::pair<Partition, Partition>, std::map<Partition, long>>
      cache;
  auto key = lam <= mu ? std::make_pair(lam, mu) : std::make_pair(mu, lam);
  {
    std::lock_guard<std::mutex> lock(cache_mu);
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;
  }
  int nvars = static_cast<int>(lam.size() + mu.size());
  if (nvars == 0) nvars = 1;
  std::map<Partition, long> out;
  auto arr_a = distinct_arrangements(key.first, nvars);
  auto arr_b = distinct_arrangements(key.second, nvars);
  for (const auto& a : arr_a) {
    for (const auto& b : arr_b) {
      std::vector<int> g(nvars);
      bool decreasing = true;
      for (int i = 0; i < nvars; ++i) {
        g[i] = a[i] + b[i];
        if (i > 0 && g[i] > g[i - 1]) {
          decreasing = false;
          break;
        }
      }
      if (!decreasing) continue;
      while (!g.empty() && g.back() == 0) g.pop_back();
      ++out[g];
    }
  }
  std::lock_guard<std::mutex> lock(cache_mu);
  cache[key] = out;
  return out;
}

}  // namespace

SymFn SymFn::operator*(const SymFn& o) const {
  if (degree() + o.degree() > kSymDegreeCap)
    throw std::domain_error("symmetric product: degree cap exceeded");
  SymFn out;
  for (const auto& [lam, c1] : terms_) {
    for (const auto& [mu, c2] : o.terms_) {
      RatQT c = c1 * c2;
      for (const auto& [nu, n] : m_times_m(lam, mu))
        out.add_term(nu, c * RatQT(n));
    }
  }
  return out;
}

std::string SymFn::str() const {
  if (terms_.empty()) return "0";
  // Highest degree first, then lexicographic.
  std::vector<const std::pair<const Partition, RatQT>*> ordered;
  for (const auto& t : terms_) ordered.push_back(&t);
  std::sort(ordered.begin(), ordered.end(), [](auto* a, auto* b) {
    int da = std::accumulate(a->first.begin(), a->first.end(), 0);
    int db = std::accumulate(b->first.begin(), b->first.end(), 0);
    if (da != db) return da > db;
    return a->first > b->first;
  });
  std::ostringstream os;
  bool first = true;
  for (auto* t : ordered) {
    std::string cs = t->second.str();
    bool neg = cs.size() > 1 && cs[0] == '-' &&
               cs.find(" + ") == std::string::npos &&
               cs.find(" - ") == std::string::npos;
    if (first) {
      first = false;
    } else if (neg) {
      os << " - ";
      cs = cs.substr(1);
    } else {
      os << " + ";
    }
    std::string ms;
    if (!t->first.empty()) {
      std::ostringstream ms_os;
      ms_os << "m[";
      for (size_t i = 0; i < t->first.size(); ++i) {
        if (i) ms_os << ",";
        ms_os << t->first[i];
      }
      ms_os << "]";
      ms = ms_os.str();
    }
    if (ms.empty()) {
      os << cs;
    } else if (cs == "1") {
      os << ms;
    } else if (cs == "-1") {
      os << "-" << ms;
    } else {
      bool paren = cs.find(' ') != std::string::npos ||
                   cs.find('/') != std::string::npos;
      os << (paren ? "(" + cs + ")*" : cs + "*") << ms;
    }
  }
  return os.str();
}

namespace {

// p_lam in the monomial basis (integer coefficients).
SymFn p_to_m(const Partition& lam) {
  static std::map<Partition, SymFn> cache;
  {
    std::lock_guard<std::mutex> lock(cache_mu);
    auto it = cache.find(lam);
    if (it != cache.end()) return it->second;
  }
  SymFn out = SymFn::one();
  for (int part : lam) out = out * SymFn::p(part);
  std::lock_guard<std::mutex> lock(cache_mu);
  cache[lam] = out;
  return out;
}

// Inverse of the degree-d transition matrix A[lam][nu] (p_lam = sum A m_nu),
// by Gauss-Jordan over the rationals.
std::vector<std::vector<mpq_class>> m_to_p_matrix(int d) {
  static std::map<int, std::vector<std::vector<mpq_class>>> cache;
  {
    std::lock_guard<std::mutex> lock(cache_mu);
    auto it = cache.find(d);
    if (it != cache.end()) return it->second;
  }
  auto parts = partitions_of(d);
  int n = static_cast<int>(parts.size());
  std::vector<std::vector<mpq_class>> a(n, std::vector<mpq_class>(2 * n, 0));
  for (int r = 0; r < n; ++r) {
    SymFn pr = p_to_m(parts[r]);
    for (int c = 0; c < n; ++c) {
      RatQT co = pr.coeff(parts[c]);
      if (co.is_zero()) continue;
      // Transition entries are plain integers.
      if (co.den().t_deg() != 0 || co.den().q_deg() != 0 ||
          co.num().t_deg() != 0 || co.num().q_deg() != 0)
        throw std::logic_error("m_to_p_matrix: non-constant entry");
      a[r][c] = mpq_class(co.num().rows.empty() ? mpz_class(0)
                                                : co.num().rows[0][0],
                          co.den().rows[0][0]);
    }
    a[r][n + r] = 1;
  }
  for (int col = 0; col < n; ++col) {
    int piv = -1;
    for (int r = col; r < n; ++r)
      if (a[r][col] != 0) {
        piv = r;
        break;
      }
    if (piv < 0) throw std::logic_error("m_to_p_matrix: singular");
    std::swap(a[col], a[piv]);
    mpq_class inv = 1 / a[col][col];
    for (auto& v : a[col]) v *= inv;
    for (int r = 0; r < n; ++r) {
      if (r == col || a[r][col] == 0) continue;
      mpq_class f = a[r][col];
      for (int c = 0; c < 2 * n; ++c) a[r][c] -= f * a[col][c];
    }
  }
  std::vector<std::vector<mpq_class>> b(n, std::vector<mpq_class>(n));
  for (int r = 0; r < n; ++r)
    for (int c = 0; c < n; ++c) b[r][c] = a[r][n + c];
  std::lock_guard<std::mutex> lock(cache_mu);
  cache[d] = b;
  return b;
}

}  // namespace

std::map<Partition, RatQT> to_power_sums(const SymFn& f) {
  std::map<Partition, RatQT> out;
  std::map<int, std::map<Partition, RatQT>> graded;
  for (const auto& [mu, c] : f.terms())
    graded[std::accumulate(mu.begin(), mu.end(), 0)][mu] = c;
  for (const auto& [d, piece] : graded) {
    if (d == 0) {
      out[{}] = out.count(Partition{}) ? out[{}] + piece.begin()->second
                                       : piece.begin()->second;
      continue;
    }
    auto parts = partitions_of(d);
    auto b = m_to_p_matrix(d);
    int n = static_cast<int>(parts.size());
    // d_lam = sum_nu c_nu * B[nu][lam]  (B is the inverse of p->m).
    for (int l = 0; l < n; ++l) {
      RatQT acc;
      for (int v = 0; v < n; ++v) {
        auto it = piece.find(parts[v]);
        if (it == piece.end()) continue;
        if (b[v][l] == 0) continue;
        acc = acc + it->second * RatQT::from_mpq(b[v][l]);
      }
      if (!acc.is_zero()) out[parts[l]] = acc;
    }
  }
  return out;
}

SymFn from_power_sums(const std::map<Partition, RatQT>& exp) {
  SymFn out;
  for (const auto& [lam, c] : exp) {
    if (lam.empty()) {
      out.add_term({}, c);
      continue;
    }
    SymFn plam = p_to_m(lam);
    for (const auto& [mu, co] : plam.terms()) out.add_term(mu, c * co);
  }
  return out;
}

SymFn pleth_one_minus_t(const SymFn& f) {
  auto exp = to_power_sums(f);
  std::map<Partition, RatQT> out;
  for (const auto& [lam, c] : exp) {
    RatQT factor(1);
    for (int part : lam)
      factor = factor * (RatQT(1) - RatQT::t(part));
    out[lam] = c * factor;
  }
  return from_power_sums(out);
}

std::map<int, SymFn> add_letter(const SymFn& f) {
  std::map<int, SymFn> out;
  for (const auto& [mu, c] : f.terms()) {
    out[0] += SymFn::m(mu, c);
    int prev = 0;
    for (size_t i = 0; i < mu.size(); ++i) {
      if (mu[i] == prev) continue;  // each distinct part once
      prev = mu[i];
      Partition rest = mu;
      rest.erase(rest.begin() + static_cast<long>(i));
      out[mu[i]] += SymFn::m(rest, c);
    }
  }
  for (auto it = out.begin(); it != out.end();)
    it = it->second.is_zero() ? out.erase(it) : std::next(it);
  return out;
}

LaurentPoly eval_finite(const SymFn& f, int first, int last, int rank) {
  if (first < 1 || last > rank)
    throw std::invalid_argument("eval_finite: alphabet outside rank");
  int nvars = last - first + 1;
  LaurentPoly out(rank);
  for (const auto& [mu, c] : f.terms()) {
    if (static_cast<int>(mu.size()) > std::max(nvars, 0)) continue;
    if (mu.empty()) {
      out += LaurentPoly::constant(rank, c);
      continue;
    }
    for (const auto& arr : distinct_arrangements(mu, nvars)) {
      Exps e(rank, 0);
      for (int i = 0; i < nvars; ++i) e[first - 1 + i] = arr[i];
      out += LaurentPoly::monomial(rank, e, c);
    }
  }
  return out;
}

SymFn from_finite(const LaurentPoly& f, int first) {
  int rank = f.rank();
  SymFn out;
  for (const auto& [e, c] : f.terms()) {
    for (int i = 0; i < first - 1; ++i)
      if (e[i] != 0)
        throw std::domain_error("from_finite: depends on head variables");
    bool decreasing = true;
    for (int i = first; i < rank && decreasing; ++i)
      if (e[i] > e[i - 1] || e[i] < 0) decreasing = false;
    if (e[first - 1] < 0)
      throw std::domain_error("from_finite: negative exponent");
    if (!decreasing) continue;
    Partition mu(e.begin() + (first - 1), e.end());
    while (!mu.empty() && mu.back() == 0) mu.pop_back();
    out += SymFn::m(mu, c);
  }
  if (eval_finite(out, first, rank, rank) != f)
    throw std::domain_error("from_finite: input not symmetric in the tail");
  return out;
}

}  // namespace daha
