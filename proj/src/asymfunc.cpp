#include "daha/asymfunc.hpp"

#include <algorithm>
#include <functional>
#include <mutex>
#include <sstream>
#include <stdexcept>

#include "daha/daharep.hpp"

namespace daha {

namespace {

std::vector<int> distinct_parts(const Partition& mu) {
  std::vector<int> out;
  for (int a : mu)
    if (out.empty() || out.back() != a) out.push_back(a);
  return out;
}

Partition remove_part(const Partition& mu, int a) {
  Partition out;
  bool done = false;
  for (int b : mu) {
    if (!done && b == a) {
      done = true;
      continue;
    }
    out.push_back(b);
  }
  if (!done) throw std::logic_error("remove_part: value absent");
  return out;
}

// One component of the signed expansion of m_mu over the alphabet enlarged
// by one letter y: weight = power of y, rest = leftover partition,
// mult = signed ordered-removal multinomial.
struct LowerComp {
  int weight;
  Partition rest;
  long mult;
};

// m_mu[X] = sum over submultisets R of mu of
//   (-1)^{|R|} (|R|)!/prod(r_v!) y^{weight of R} m_{mu - R}[X + y].
// Enumerated over multiplicity vectors r_v per distinct value v.
std::vector<LowerComp> lower_components(const Partition& mu) {
  std::vector<int> vals = distinct_parts(mu);
  std::vector<int> mult(vals.size());
  for (size_t v = 0; v < vals.size(); ++v)
    mult[v] = static_cast<int>(std::count(mu.begin(), mu.end(), vals[v]));
  std::vector<LowerComp> out;
  std::vector<int> r(vals.size(), 0);
  auto factorial = [](int n) {
    long f = 1;
    for (int i = 2; i <= n; ++i) f *= i;
    return f;
  };
  while (true) {
    int total = 0, weight = 0;
    for (size_t v = 0; v < vals.size(); ++v) {
      total += r[v];
      weight += r[v] * vals[v];
    }
    long coeff = factorial(total);
    for (size_t v = 0; v < vals.size(); ++v) coeff /= factorial(r[v]);
    if (total % 2 == 1) coeff = -coeff;
    Partition rest;
    for (size_t v = 0; v < vals.size(); ++v)
      for (int c = 0; c < mult[v] - r[v]; ++c) rest.push_back(vals[v]);
    std::sort(rest.begin(), rest.end(), std::greater<int>());
    out.push_back({weight, rest, coeff});
    size_t pos = 0;
    while (pos < r.size() && r[pos] == mult[pos]) r[pos++] = 0;
    if (pos == r.size()) break;
    ++r[pos];
  }
  return out;
}

AsymFn from_working(const std::map<std::pair<Exps, Partition>, RatQT>& w) {
  AsymFn out;
  for (const auto& [key, c] : w)
    add_term_canonical(out, key.first, key.second, c);
  return out;
}

void require_positive(int i, const char* who) {
  if (i < 1) throw std::invalid_argument(std::string(who) + ": index < 1");
}

}  // namespace

// Rewrites x^alpha m_mu[X_j] (len(alpha) = j) in canonical coordinates by
// absorbing trailing-zero head slots into the tail alphabet:
// m_mu[X_j] = m_mu[X_{j-1}] - sum over part values a of x_j^a m_{mu-a}[X_j].
void add_term_canonical(AsymFn& out, Exps alpha, Partition mu,
                        const RatQT& c) {
  if (c.is_zero()) return;
  int j = static_cast<int>(alpha.size());
  if (j == 0 || alpha.back() != 0) {
    out.add(AsymIndex(alpha, mu), c);
    return;
  }
  Exps head(alpha.begin(), alpha.end() - 1);
  add_term_canonical(out, head, mu, c);
  for (int a : distinct_parts(mu)) {
    Exps beta = alpha;
    beta[j - 1] = a;
    add_term_canonical(out, beta, remove_part(mu, a), -c);
  }
}

void AsymFn::add(const AsymIndex& idx, const RatQT& c) {
  auto it = coords_.find(idx);
  if (it == coords_.end()) {
    if (!c.is_zero()) coords_.emplace(idx, c);
    return;
  }
  it->second += c;
  if (it->second.is_zero()) coords_.erase(it);
}

AsymFn AsymFn::basis(const AsymIndex& idx, RatQT c) {
  AsymIndex checked(idx.lambda, idx.mu);  // revalidates the invariants
  AsymFn out;
  out.add(checked, c);
  return out;
}

AsymFn AsymFn::term(int j, const Exps& alpha, const Partition& mu, RatQT c) {
  if (static_cast<int>(alpha.size()) != j)
    throw std::invalid_argument("term: alphabet size mismatch");
  for (int e : alpha)
    if (e < 0) throw std::domain_error("term: negative exponent");
  AsymFn out;
  add_term_canonical(out, alpha, mu, c);
  return out;
}

AsymFn AsymFn::from_poly(const LaurentPoly& f) {
  if (!f.is_polynomial())
    throw std::domain_error("from_poly: negative exponents");
  AsymFn out;
  for (const auto& [e, c] : f.terms()) add_term_canonical(out, e, {}, c);
  return out;
}

AsymFn AsymFn::from_symfn(const SymFn& g) {
  AsymFn out;
  for (const auto& [mu, c] : g.terms()) out.add(AsymIndex({}, mu), c);
  return out;
}

int AsymFn::rank() const {
  int r = 0;
  for (const auto& [idx, c] : coords_)
    r = std::max(r, static_cast<int>(idx.lambda.size()));
  return r;
}

int AsymFn::degree() const {
  int d = 0;
  for (const auto& [idx, c] : coords_) d = std::max(d, idx.total());
  return d;
}

RatQT AsymFn::coeff(const AsymIndex& idx) const {
  auto it = coords_.find(idx);
  return it == coords_.end() ? RatQT() : it->second;
}

AsymFn AsymFn::operator+(const AsymFn& o) const {
  AsymFn out = *this;
  for (const auto& [idx, c] : o.coords_) out.add(idx, c);
  return out;
}

AsymFn AsymFn::operator-(const AsymFn& o) const { return *this + (-o); }

AsymFn AsymFn::operator-() const { return scale(RatQT(-1)); }

AsymFn AsymFn::scale(const RatQT& c) const {
  AsymFn out;
  if (c.is_zero()) return out;
  for (const auto& [idx, cc] : coords_) out.coords_.emplace(idx, cc * c);
  return out;
}

std::string AsymFn::str() const {
  if (coords_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [idx, c] : coords_) {
    if (!first) os << " + ";
    first = false;
    std::string body;
    for (size_t i = 0; i < idx.lambda.size(); ++i) {
      if (idx.lambda[i] == 0) continue;
      if (!body.empty()) body += "*";
      body += "x" + std::to_string(i + 1);
      if (idx.lambda[i] != 1) body += "^" + std::to_string(idx.lambda[i]);
    }
    if (!idx.mu.empty()) {
      if (!body.empty()) body += "*";
      body += "m[";
      for (size_t i = 0; i < idx.mu.size(); ++i) {
        if (i) body += ",";
        body += std::to_string(idx.mu[i]);
      }
      body += "][X" + std::to_string(idx.lambda.size()) + "]";
    }
    std::string cs = c.str();
    if (body.empty())
      os << cs;
    else if (cs == "1")
      os << body;
    else if (cs.find(' ') != std::string::npos ||
             cs.find('/') != std::string::npos || cs[0] == '-')
      os << "(" << cs << ")*" << body;
    else
      os << cs << "*" << body;
  }
  return os.str();
}

std::string AsymFn::json() const {
  std::ostringstream os;
  os << "{\"rank\": " << rank() << ", \"terms\": [";
  bool first = true;
  for (const auto& [idx, c] : coords_) {
    if (!first) os << ", ";
    first = false;
    os << "{\"lambda\": [";
    for (size_t i = 0; i < idx.lambda.size(); ++i)
      os << (i ? ", " : "") << idx.lambda[i];
    os << "], \"mu\": [";
    for (size_t i = 0; i < idx.mu.size(); ++i)
      os << (i ? ", " : "") << idx.mu[i];
    os << "], \"coeff\": \"" << c.str() << "\"}";
  }
  os << "]}";
  return os.str();
}

std::map<AsymIndex, RatQT> to_mas_basis(const AsymFn& f) { return f.coords(); }

std::map<std::pair<Exps, Partition>, RatQT> raise_terms(const AsymFn& f,
                                                        int k) {
  if (k < f.rank()) throw std::invalid_argument("raise_terms: k below rank");
  std::map<std::pair<Exps, Partition>, RatQT> out;
  for (const auto& [idx, c] : f.coords()) {
    std::map<std::pair<Exps, Partition>, RatQT> cur;
    cur[{Exps(idx.lambda), Partition(idx.mu)}] = c;
    for (int j = static_cast<int>(idx.lambda.size()); j < k; ++j) {
      std::map<std::pair<Exps, Partition>, RatQT> nxt;
      for (const auto& [key, cc] : cur) {
        for (const auto& [a, g] : add_letter(SymFn::m(key.second))) {
          Exps e2 = key.first;
          e2.push_back(a);
          for (const auto& [rho, c2] : g.terms()) {
            auto& slot = nxt[{e2, rho}];
            slot += cc * c2;
          }
        }
      }
      cur = std::move(nxt);
    }
    for (const auto& [key, cc] : cur) {
      auto& slot = out[key];
      slot += cc;
    }
  }
  for (auto it = out.begin(); it != out.end();)
    it = it->second.is_zero() ? out.erase(it) : std::next(it);
  return out;
}

AsymFn raise_rank(const AsymFn& f, int k) {
  // The tail alphabet is part of the basis, not of the value; re-expressing
  // at a higher rank and canonicalizing must give back the same coordinates.
  AsymFn out = from_working(raise_terms(f, k));
  if (out != f) throw std::logic_error("raise_rank: value changed");
  return out;
}

LaurentPoly truncate(const AsymFn& f, int n) {
  if (n < f.rank()) throw std::invalid_argument("truncate: rank too small");
  LaurentPoly out(n);
  for (const auto& [idx, c] : f.coords()) {
    int l = static_cast<int>(idx.lambda.size());
    Exps e(n, 0);
    std::copy(idx.lambda.begin(), idx.lambda.end(), e.begin());
    out += LaurentPoly::monomial(n, e, c) *
           eval_finite(SymFn::m(idx.mu), l + 1, n, n);
  }
  return out;
}

namespace {

// Working form at rank k grouped into one polynomial per tail partition.
std::map<Partition, LaurentPoly> grouped_working(const AsymFn& f, int k) {
  std::map<Partition, LaurentPoly> polys;
  for (const auto& [key, c] : raise_terms(f, k)) {
    auto it = polys.find(key.second);
    if (it == polys.end())
      it = polys.emplace(key.second, LaurentPoly(k)).first;
    it->second += LaurentPoly::monomial(k, key.first, c);
  }
  return polys;
}

AsymFn apply_headwise(const AsymFn& f, int k,
                      const std::function<LaurentPoly(const LaurentPoly&)>& op) {
  AsymFn out;
  for (auto& [mu, g] : grouped_working(f, k)) {
    LaurentPoly h = op(g);
    for (const auto& [e, c] : h.terms()) add_term_canonical(out, e, mu, c);
  }
  return out;
}

}  // namespace

AsymFn limit_T(int i, const AsymFn& f) {
  require_positive(i, "limit_T");
  if (f.is_zero()) return f;
  int k = std::max(f.rank(), i + 1);
  return apply_headwise(f, k,
                        [i](const LaurentPoly& g) { return apply_T(i, g); });
}

AsymFn limit_T_inv(int i, const AsymFn& f) {
  require_positive(i, "limit_T_inv");
  if (f.is_zero()) return f;
  int k = std::max(f.rank(), i + 1);
  return apply_headwise(
      f, k, [i](const LaurentPoly& g) { return apply_T_inv(i, g); });
}

AsymFn limit_X(int i, const AsymFn& f) {
  require_positive(i, "limit_X");
  if (f.is_zero()) return f;
  int k = std::max(f.rank(), i);
  AsymFn out;
  for (const auto& [key, c] : raise_terms(f, k)) {
    Exps e = key.first;
    e[i - 1] += 1;
    add_term_canonical(out, e, key.second, c);
  }
  return out;
}

namespace {

// First limit operator in closed form. Derivation: conjugate the finite-rank
// operator t^k pr_1 rot^{-1} T_{k-1}^{-1}..T_1^{-1} past the tail alphabet.
// After the inverse Hecke chain, split the tail as X_{k-1} = x_k + X_k with
// signed multiplicities, rotate heads up one slot, and resum the geometric
// part of the x_k power n into sum_{b=1}^{n} (q x_1)^b h_{n-b}[(1-t) X_k],
// with the tail re-expanded over X_k + q x_1.
AsymFn limit_Y1(const AsymFn& f) {
  if (f.is_zero()) return f;
  int k = std::max(1, f.rank());
  auto polys = grouped_working(f, k);
  for (auto& [mu, g] : polys)
    for (int j = 1; j <= k - 1; ++j) g = apply_T_inv(j, g);
  AsymFn out;
  for (const auto& [mu, g] : polys) {
    auto comps = lower_components(mu);
    for (const auto& [lam, c] : g.terms()) {
      Exps shifted(k, 0);
      for (int j = 0; j + 1 < k; ++j) shifted[j + 1] = lam[j];
      for (const auto& comp : comps) {
        int n = lam[k - 1] + comp.weight;
        if (n == 0) continue;
        RatQT base = c * RatQT(comp.mult) * RatQT::t(k);
        auto added = add_letter(SymFn::m(comp.rest));
        for (int b = 1; b <= n; ++b) {
          SymFn hb = pleth_one_minus_t(SymFn::h(n - b));
          for (const auto& [a, ga] : added) {
            SymFn s = ga * hb;
            Exps e = shifted;
            e[0] += a + b;
            RatQT cc = base * RatQT::q(a + b);
            for (const auto& [nu, c2] : s.terms())
              add_term_canonical(out, e, nu, cc * c2);
          }
        }
      }
    }
  }
  return out;
}

}  // namespace

AsymFn limit_Y(int i, const AsymFn& f) {
  require_positive(i, "limit_Y");
  if (i == 1) return limit_Y1(f);
  AsymFn g = f;
  for (int j = i - 1; j >= 1; --j) g = limit_T(j, g);
  g = limit_Y1(g);
  for (int j = 1; j <= i - 1; ++j) g = limit_T(j, g);
  return g.scale(RatQT::t(1 - i));
}

RatQT limit_y_eigenvalue(const AsymIndex& idx, int i) {
  require_positive(i, "limit_y_eigenvalue");
  if (sgn_stat(idx.lambda, i) == 0) return RatQT();
  Weight cat = idx.lambda;
  cat.insert(cat.end(), idx.mu.begin(), idx.mu.end());
  return RatQT::q(idx.lambda[i - 1]) * RatQT::t(u_stat(cat, i));
}

ConvergenceReport verify_limit_convergence(int i, const AsymFn& f, int n_lo,
                                           int n_hi) {
  require_positive(i, "verify_limit_convergence");
  ConvergenceReport rep;
  rep.C = i + f.degree();
  rep.pass = true;
  AsymFn lim = limit_Y(i, f);
  int need = std::max({f.rank(), lim.rank(), i});
  if (n_lo < need)
    throw std::invalid_argument("verify_limit_convergence: window too low");
  std::optional<int> prev;
  for (int n = n_lo; n <= n_hi; ++n) {
    LaurentPoly r = apply_Y(i, truncate(f, n)) - truncate(lim, n);
    std::optional<int> ord;
    for (const auto& [e, c] : r.terms()) {
      auto o = c.t_order();
      if (!o) continue;
      if (!ord || *o < *ord) ord = o;
    }
    rep.orders.emplace_back(n, ord);
    if (ord) {
      if (*ord < n - rep.C) rep.pass = false;
      if (prev && *ord <= *prev) rep.pass = false;
      prev = ord;
    }
  }
  return rep;
}

namespace {

Weight strip_zeros(const Weight& lam) {
  Weight out = lam;
  while (!out.empty() && out.back() == 0) out.pop_back();
  return out;
}

// Reconstruct the stable form of a packed (all parts positive) weight from
// one finite rank: group monomials by their exponents on the first a slots
// and read each tail off as a symmetric function of x_{a+1}..x_N.
AsymFn read_stable_form(const LaurentPoly& e, int a, int n) {
  std::map<Exps, LaurentPoly> groups;
  for (const auto& [ex, c] : e.terms()) {
    Exps head(ex.begin(), ex.begin() + a);
    Exps tail(ex);
    std::fill(tail.begin(), tail.begin() + a, 0);
    auto it = groups.find(head);
    if (it == groups.end()) it = groups.emplace(head, LaurentPoly(n)).first;
    it->second += LaurentPoly::monomial(n, tail, c);
  }
  AsymFn out;
  for (const auto& [head, g] : groups) {
    SymFn tail = from_finite(g, a + 1);
    for (const auto& [nu, c] : tail.terms())
      add_term_canonical(out, head, nu, c);
  }
  return out;
}

}  // namespace

AsymFn limit_macdonald(const Weight& lam_in) {
  Weight lam = strip_zeros(lam_in);
  static std::map<Weight, AsymFn> cache;
  static std::mutex mtx;
  {
    std::lock_guard<std::mutex> lock(mtx);
    auto it = cache.find(lam);
    if (it != cache.end()) return it->second;
  }
  AsymFn result;
  if (lam.empty()) {
    result = AsymFn::from_symfn(SymFn::one());
  } else {
    int zero_at = 0;
    for (size_t i = 0; i + 1 < lam.size(); ++i)
      if (lam[i] == 0 && lam[i + 1] > 0) {
        zero_at = static_cast<int>(i) + 1;
        break;
      }
    if (zero_at > 0) {
      Weight swapped = lam;
      std::swap(swapped[zero_at - 1], swapped[zero_at]);
      result = limit_T(zero_at, limit_macdonald(swapped));
    } else {
      // Packed weight: the truncations are exactly the finite eigenfunctions,
      // so three consecutive ranks must produce identical readouts.
      int a = static_cast<int>(lam.size());
      int d = 0;
      for (int v : lam) d += v;
      std::optional<AsymFn> agreed;
      for (int n = a + d + 1; n <= a + d + 3; ++n) {
        Weight padded = lam;
        padded.resize(n, 0);
        LaurentPoly e = macdonald_E(padded);
        for (int j = a + 1; j <= n - 1; ++j)
          if (swap_action(e, j) != e)
            throw std::logic_error("limit_macdonald: tail not symmetric");
        AsymFn f = read_stable_form(e, a, n);
        if (agreed && f != *agreed)
          throw std::logic_error("limit_macdonald: readout not stable");
        if (!agreed) {
          if (truncate(f, n) != e)
            throw std::logic_error("limit_macdonald: truncation mismatch");
          agreed = f;
        }
      }
      result = *agreed;
      AsymIndex idx(lam, {});
      for (int i = 1; i <= a + 1; ++i)
        if (limit_Y(i, result) != result.scale(limit_y_eigenvalue(idx, i)))
          throw std::logic_error("limit_macdonald: eigenvalue check failed");
    }
  }
  std::lock_guard<std::mutex> lock(mtx);
  return cache.emplace(lam, result).first->second;
}

AsymFn macdonald_P(const Partition& mu) {
  if (!is_partition(mu)) throw std::invalid_argument("macdonald_P: not a partition");
  static std::map<Partition, AsymFn> cache;
  static std::mutex mtx;
  {
    std::lock_guard<std::mutex> lock(mtx);
    auto it = cache.find(mu);
    if (it != cache.end()) return it->second;
  }
  AsymFn result;
  if (mu.empty()) {
    result = AsymFn::from_symfn(SymFn::one());
  } else {
    // P_mu is the unique eigenfunction of the symmetric operator Y_1+..+Y_n
    // that is unitriangular against the monomial basis in dominance order.
    // n = |mu| variables separate the monomials of that degree, and the
    // operator is dominance-triangular with pairwise distinct diagonal, so
    // the coefficients solve by back-substitution; every structural
    // assumption is checked as it is used.
    int d = 0;
    for (int v : mu) d += v;
    int n = d;
    auto dom_leq = [](const Partition& a, const Partition& b) {
      size_t len = std::max(a.size(), b.size());
      int sa = 0, sb = 0;
      for (size_t i = 0; i < len; ++i) {
        sa += i < a.size() ? a[i] : 0;
        sb += i < b.size() ? b[i] : 0;
        if (sa > sb) return false;
      }
      return true;
    };
    std::vector<Partition> basis;
    for (const auto& nu : partitions_of(d))
      if (dom_leq(nu, mu)) basis.push_back(nu);
    // Lexicographic descent refines dominance descent, so mu comes first.
    std::sort(basis.begin(), basis.end(),
              [](const Partition& a, const Partition& b) { return a > b; });
    if (basis.empty() || basis.front() != mu)
      throw std::logic_error("macdonald_P: index not maximal in its ideal");
    size_t nb = basis.size();
    std::map<Partition, size_t> pos;
    for (size_t b = 0; b < nb; ++b) pos.emplace(basis[b], b);
    std::vector<RatQT> eps(nb);
    std::vector<std::map<Partition, RatQT>> image(nb);
    for (size_t b = 0; b < nb; ++b) {
      Weight padded = basis[b];
      padded.resize(n, 0);
      for (int i = 1; i <= n; ++i) eps[b] += y_eigenvalue(padded, i);
      LaurentPoly mb = eval_finite(SymFn::m(basis[b]), 1, n, n);
      LaurentPoly acc(n);
      for (int i = 1; i <= n; ++i) acc += apply_Y(i, mb);
      SymFn img = from_finite(acc, 1);
      for (const auto& [nu, c] : img.terms()) {
        if (!pos.count(nu))
          throw std::logic_error("macdonald_P: operator not triangular");
        image[b].emplace(nu, c);
      }
      if (image[b].count(basis[b]) ? image[b][basis[b]] != eps[b]
                                   : !eps[b].is_zero())
        throw std::logic_error("macdonald_P: diagonal mismatch");
      if (b > 0 && eps[b] == eps[0])
        throw std::logic_error("macdonald_P: repeated eigenvalue");
    }
    std::vector<RatQT> coef(nb);
    coef[0] = RatQT(1);
    for (size_t b = 1; b < nb; ++b) {
      RatQT s;
      for (size_t a = 0; a < b; ++a) {
        auto it = image[a].find(basis[b]);
        if (it != image[a].end()) s += coef[a] * it->second;
      }
      coef[b] = s / (eps[0] - eps[b]);
    }
    SymFn g;
    for (size_t b = 0; b < nb; ++b) g += SymFn::m(basis[b], coef[b]);
    result = AsymFn::from_symfn(g);
  }
  std::lock_guard<std::mutex> lock(mtx);
  return cache.emplace(mu, result).first->second;
}

RatQT v_mu_factor(const Partition& mu) {
  RatQT out(1);
  for (int v : distinct_parts(mu)) {
    int m = static_cast<int>(std::count(mu.begin(), mu.end(), v));
    for (int j = 1; j <= m; ++j) {
      RatQT sum(0);
      for (int d = 0; d < j; ++d) sum += RatQT::t(d);
      out *= sum;
    }
  }
  return out;
}

std::vector<AsymIndex> asym_indices_of_degree(int d, int max_len) {
  std::vector<AsymIndex> out;
  for (int len = 0; len <= max_len; ++len) {
    std::vector<Exps> heads;
    Exps cur(len, 0);
    // enumerate all of N^len with sum <= d
    std::function<void(int, int)> rec = [&](int pos, int left) {
      if (pos == len) {
        if (len == 0 || cur.back() > 0) heads.push_back(cur);
        return;
      }
      for (int v = 0; v <= left; ++v) {
        cur[pos] = v;
        rec(pos + 1, left - v);
      }
      cur[pos] = 0;
    };
    rec(0, d);
    for (const auto& head : heads) {
      int s = 0;
      for (int v : head) s += v;
      for (const auto& mu : partitions_of(d - s)) out.emplace_back(head, mu);
    }
  }
  return out;
}

AsymFn tilde_E(const AsymIndex& idx) {
  AsymIndex checked(idx.lambda, idx.mu);
  if (checked.lambda.empty()) return macdonald_P(checked.mu);

  int d = checked.total();
  int max_len = static_cast<int>(checked.lambda.size());
  std::vector<AsymIndex> support;
  for (const auto& j : asym_indices_of_degree(d, max_len))
    if (as_order_leq(j, checked)) support.push_back(j);
  std::map<AsymIndex, int> col;
  for (size_t j = 0; j < support.size(); ++j) col[support[j]] = static_cast<int>(j);
  if (!col.count(checked)) throw std::logic_error("tilde_E: index not in its own ideal");

  int ncols = static_cast<int>(support.size());
  int nops = static_cast<int>(checked.lambda.size() + checked.mu.size());
  std::vector<std::vector<RatQT>> rows;
  for (int i = 1; i <= nops; ++i) {
    RatQT alpha = limit_y_eigenvalue(checked, i);
    // columns of the operator restricted to the order ideal
    std::vector<std::map<int, RatQT>> cols(ncols);
    for (int j = 0; j < ncols; ++j) {
      AsymFn img = limit_Y(i, AsymFn::basis(support[j]));
      for (const auto& [k, c] : img.coords()) {
        auto it = col.find(k);
        if (it == col.end())
          throw std::logic_error("tilde_E: image leaves the order ideal");
        cols[j][it->second] = c;
      }
    }
    for (int k = 0; k < ncols; ++k) {
      std::vector<RatQT> row(ncols + 1);
      for (int j = 0; j < ncols; ++j) {
        auto it = cols[j].find(k);
        if (it != cols[j].end()) row[j] = it->second;
        if (j == k) row[j] -= alpha;
      }
      rows.push_back(std::move(row));
    }
  }
  {
    std::vector<RatQT> row(ncols + 1);
    row[col[checked]] = RatQT(1);
    row[ncols] = RatQT(1);
    rows.push_back(std::move(row));
  }

  // Gauss-Jordan elimination over the coefficient field.
  int nrows = static_cast<int>(rows.size());
  std::vector<int> pivot_col;
  int r = 0;
  for (int c = 0; c < ncols && r < nrows; ++c) {
    int sel = -1;
    for (int i = r; i < nrows; ++i)
      if (!rows[i][c].is_zero()) {
        sel = i;
        break;
      }
    if (sel < 0) continue;
    std::swap(rows[r], rows[sel]);
    RatQT inv = rows[r][c].inv();
    for (int j = c; j <= ncols; ++j) rows[r][j] *= inv;
    for (int i = 0; i < nrows; ++i) {
      if (i == r || rows[i][c].is_zero()) continue;
      RatQT f = rows[i][c];
      for (int j = c; j <= ncols; ++j) rows[i][j] -= f * rows[r][j];
    }
    pivot_col.push_back(c);
    ++r;
  }
  if (r < ncols)
    throw std::runtime_error("tilde_E: eigenvalue system does not determine "
                             "the function uniquely");
  for (int i = r; i < nrows; ++i)
    if (!rows[i][ncols].is_zero())
      throw std::runtime_error("tilde_E: eigenvalue system inconsistent");

  AsymFn out;
  for (int i = 0; i < r; ++i) {
    const RatQT& v = rows[i][ncols];
    if (!v.is_zero()) out = out + AsymFn::basis(support[pivot_col[i]], v);
  }
  if (out.coeff(checked) != RatQT(1))
    throw std::logic_error("tilde_E: leading coefficient is not one");
  return out;
}

bool check_cY_triangularity(const AsymIndex& idx, int i) {
  AsymFn g = limit_Y(i, AsymFn::basis(idx));
  if (g.coeff(idx) != limit_y_eigenvalue(idx, i)) return false;
  for (const auto& [j, c] : g.coords()) {
    if (j == idx) continue;
    if (!as_order_leq(j, idx)) return false;
  }
  return true;
}

}  // namespace daha
