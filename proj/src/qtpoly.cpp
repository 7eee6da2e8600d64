#include "daha/qtpoly.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>
#include <tuple>

namespace daha {

ZPoly zp_trim(ZPoly a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
  return a;
}

bool zp_is_zero(const ZPoly& a) {
  for (const auto& c : a)
    if (c != 0) return false;
  return true;
}

int zp_deg(const ZPoly& a) {
  for (int i = static_cast<int>(a.size()) - 1; i >= 0; --i)
    if (a[i] != 0) return i;
  return -1;
}

ZPoly zp_add(const ZPoly& a, const ZPoly& b) {
  ZPoly r(std::max(a.size(), b.size()), mpz_class(0));
  for (size_t i = 0; i < a.size(); ++i) r[i] += a[i];
  for (size_t i = 0; i < b.size(); ++i) r[i] += b[i];
  return zp_trim(std::move(r));
}

ZPoly zp_sub(const ZPoly& a, const ZPoly& b) {
  ZPoly r(std::max(a.size(), b.size()), mpz_class(0));
  for (size_t i = 0; i < a.size(); ++i) r[i] += a[i];
  for (size_t i = 0; i < b.size(); ++i) r[i] -= b[i];
  return zp_trim(std::move(r));
}

ZPoly zp_neg(ZPoly a) {
  for (auto& c : a) c = -c;
  return a;
}

ZPoly zp_mul(const ZPoly& a, const ZPoly& b) {
  if (zp_is_zero(a) || zp_is_zero(b)) return {};
  ZPoly r(a.size() + b.size() - 1, mpz_class(0));
  for (size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (size_t j = 0; j < b.size(); ++j) {
      if (b[j] == 0) continue;
      r[i + j] += a[i] * b[j];
    }
  }
  return zp_trim(std::move(r));
}

ZPoly zp_mul_mpz(ZPoly a, const mpz_class& c) {
  if (c == 0) return {};
  for (auto& x : a) x *= c;
  return zp_trim(std::move(a));
}

mpz_class zp_content(const ZPoly& a) {
  mpz_class g = 0;
  for (const auto& c : a) {
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
    if (g == 1) break;
  }
  return g;
}

ZPoly zp_divexact_mpz(ZPoly a, const mpz_class& c) {
  if (c == 0) throw std::domain_error("zp_divexact_mpz: division by zero");
  for (auto& x : a) {
    if (x % c != 0) throw std::domain_error("zp_divexact_mpz: not divisible");
    x /= c;
  }
  return zp_trim(std::move(a));
}

namespace {

// Primitive part with positive leading coefficient; zero stays zero.
ZPoly zp_pp(const ZPoly& a) {
  mpz_class c = zp_content(a);
  if (c == 0) return {};
  ZPoly r = zp_divexact_mpz(a, c);
  if (r.back() < 0) r = zp_neg(std::move(r));
  return r;
}

}  // namespace

ZPoly zp_gcd(ZPoly a, ZPoly b) {
  a = zp_trim(std::move(a));
  b = zp_trim(std::move(b));
  if (zp_is_zero(a)) {
    if (zp_is_zero(b)) return {};
    if (b.back() < 0) b = zp_neg(std::move(b));
    return b;
  }
  if (zp_is_zero(b)) {
    if (a.back() < 0) a = zp_neg(std::move(a));
    return a;
  }
  mpz_class ca = zp_content(a), cb = zp_content(b), cg;
  mpz_gcd(cg.get_mpz_t(), ca.get_mpz_t(), cb.get_mpz_t());
  ZPoly A = zp_pp(a), B = zp_pp(b);
  if (zp_deg(A) < zp_deg(B)) std::swap(A, B);
  while (!zp_is_zero(B)) {
    // Pseudo-remainder: repeatedly scale A by lead(B) and cancel the top term.
    ZPoly R = A;
    while (!zp_is_zero(R) && zp_deg(R) >= zp_deg(B)) {
      int s = zp_deg(R) - zp_deg(B);
      mpz_class lr = R.back(), lb = B.back();
      ZPoly shifted(s, mpz_class(0));
      shifted.insert(shifted.end(), B.begin(), B.end());
      R = zp_sub(zp_mul_mpz(R, lb), zp_mul_mpz(std::move(shifted), lr));
    }
    A = B;
    B = zp_pp(R);
  }
  return zp_mul_mpz(zp_pp(A), cg);
}

ZPoly zp_divexact(const ZPoly& a, const ZPoly& b) {
  ZPoly A = zp_trim(a), B = zp_trim(b);
  if (zp_is_zero(B)) throw std::domain_error("zp_divexact: division by zero");
  if (zp_is_zero(A)) return {};
  if (zp_deg(A) < zp_deg(B)) throw std::domain_error("zp_divexact: not divisible");
  ZPoly Q(zp_deg(A) - zp_deg(B) + 1, mpz_class(0));
  ZPoly R = A;
  while (!zp_is_zero(R)) {
    int dr = zp_deg(R), db = zp_deg(B);
    if (dr < db) throw std::domain_error("zp_divexact: not divisible");
    mpz_class c;
    if (R[dr] % B[db] != 0) throw std::domain_error("zp_divexact: not divisible");
    c = R[dr] / B[db];
    Q[dr - db] = c;
    ZPoly shifted(dr - db, mpz_class(0));
    shifted.insert(shifted.end(), B.begin(), B.end());
    R = zp_sub(R, zp_mul_mpz(std::move(shifted), c));
  }
  return zp_trim(std::move(Q));
}

QTPoly::QTPoly(long c) {
  if (c != 0) rows.push_back(ZPoly{mpz_class(c)});
}

QTPoly::QTPoly(const mpz_class& c) {
  if (c != 0) rows.push_back(ZPoly{c});
}

QTPoly QTPoly::q(int e) { return monomial(1, e, 0); }

QTPoly QTPoly::t(int e) { return monomial(1, 0, e); }

QTPoly QTPoly::monomial(const mpz_class& c, int qe, int te) {
  QTPoly r;
  if (c == 0) return r;
  if (qe < 0 || te < 0) throw std::domain_error("QTPoly: negative exponent");
  r.rows.resize(te + 1);
  r.rows[te].assign(qe + 1, mpz_class(0));
  r.rows[te][qe] = c;
  return r;
}

bool QTPoly::is_zero() const {
  for (const auto& r : rows)
    if (!zp_is_zero(r)) return false;
  return true;
}

void QTPoly::trim() {
  for (auto& r : rows) r = zp_trim(std::move(r));
  while (!rows.empty() && rows.back().empty()) rows.pop_back();
}

int QTPoly::t_deg() const {
  for (int i = static_cast<int>(rows.size()) - 1; i >= 0; --i)
    if (!zp_is_zero(rows[i])) return i;
  return -1;
}

int QTPoly::t_low() const {
  for (int i = 0; i < static_cast<int>(rows.size()); ++i)
    if (!zp_is_zero(rows[i])) return i;
  return -1;
}

int QTPoly::q_deg() const {
  int d = -1;
  for (const auto& r : rows) d = std::max(d, zp_deg(r));
  return d;
}

int QTPoly::q_low() const {
  int lo = -1;
  for (const auto& r : rows) {
    for (int j = 0; j < static_cast<int>(r.size()); ++j) {
      if (r[j] != 0) {
        if (lo < 0 || j < lo) lo = j;
        break;
      }
    }
  }
  return lo;
}

int QTPoly::total_deg() const {
  int d = -1;
  for (int i = 0; i < static_cast<int>(rows.size()); ++i) {
    int dq = zp_deg(rows[i]);
    if (dq >= 0) d = std::max(d, dq + i);
  }
  return d;
}

int QTPoly::norm_sign() const {
  bool found = false;
  int best_total = 0, best_q = 0;
  int sign = 0;
  for (int i = 0; i < static_cast<int>(rows.size()); ++i) {
    for (int j = 0; j < static_cast<int>(rows[i].size()); ++j) {
      if (rows[i][j] == 0) continue;
      int tot = i + j;
      if (!found || tot < best_total || (tot == best_total && j > best_q)) {
        found = true;
        best_total = tot;
        best_q = j;
        sign = sgn(rows[i][j]);
      }
    }
  }
  return sign;
}

QTPoly QTPoly::mul_zp(const ZPoly& c) const {
  QTPoly r;
  r.rows.reserve(rows.size());
  for (const auto& row : rows) r.rows.push_back(zp_mul(row, c));
  r.trim();
  return r;
}

QTPoly QTPoly::mul_mpz(const mpz_class& c) const {
  QTPoly r;
  r.rows.reserve(rows.size());
  for (const auto& row : rows) r.rows.push_back(zp_mul_mpz(row, c));
  r.trim();
  return r;
}

QTPoly QTPoly::shift_t(int s) const {
  QTPoly r;
  if (is_zero()) return r;
  if (s < 0) throw std::domain_error("QTPoly::shift_t: negative shift");
  r.rows.assign(s, ZPoly{});
  r.rows.insert(r.rows.end(), rows.begin(), rows.end());
  r.trim();
  return r;
}

ZPoly QTPoly::content_q() const {
  ZPoly g;
  for (const auto& r : rows) g = zp_gcd(g, r);
  return g;
}

QTPoly operator+(const QTPoly& a, const QTPoly& b) {
  QTPoly r;
  r.rows.resize(std::max(a.rows.size(), b.rows.size()));
  for (size_t i = 0; i < r.rows.size(); ++i) {
    const ZPoly* x = i < a.rows.size() ? &a.rows[i] : nullptr;
    const ZPoly* y = i < b.rows.size() ? &b.rows[i] : nullptr;
    if (x && y)
      r.rows[i] = zp_add(*x, *y);
    else if (x)
      r.rows[i] = *x;
    else if (y)
      r.rows[i] = *y;
  }
  r.trim();
  return r;
}

QTPoly operator-(const QTPoly& a, const QTPoly& b) { return a + (-b); }

QTPoly operator*(const QTPoly& a, const QTPoly& b) {
  QTPoly r;
  if (a.is_zero() || b.is_zero()) return r;
  r.rows.assign(a.rows.size() + b.rows.size() - 1, ZPoly{});
  for (size_t i = 0; i < a.rows.size(); ++i) {
    if (zp_is_zero(a.rows[i])) continue;
    for (size_t j = 0; j < b.rows.size(); ++j) {
      if (zp_is_zero(b.rows[j])) continue;
      r.rows[i + j] = zp_add(r.rows[i + j], zp_mul(a.rows[i], b.rows[j]));
    }
  }
  r.trim();
  return r;
}

QTPoly QTPoly::operator-() const {
  QTPoly r;
  r.rows.reserve(rows.size());
  for (const auto& row : rows) r.rows.push_back(zp_neg(row));
  r.trim();
  return r;
}

bool QTPoly::operator==(const QTPoly& o) const { return (*this - o).is_zero(); }

namespace {

QTPoly qt_pp_t(const QTPoly& a, ZPoly* content_out = nullptr) {
  ZPoly c = a.content_q();
  if (content_out) *content_out = c;
  if (zp_is_zero(c)) return QTPoly{};
  QTPoly r;
  r.rows.reserve(a.rows.size());
  for (const auto& row : a.rows) r.rows.push_back(zp_divexact(row, c));
  r.trim();
  return r;
}

const ZPoly& qt_lead_row(const QTPoly& a) { return a.rows[a.t_deg()]; }

}  // namespace

QTPoly qt_gcd(QTPoly a, QTPoly b) {
  a.trim();
  b.trim();
  auto normalize = [](QTPoly p) {
    if (p.norm_sign() < 0) p = -p;
    return p;
  };
  if (a.is_zero()) return normalize(b);
  if (b.is_zero()) return normalize(a);
  ZPoly ca, cb;
  QTPoly A = qt_pp_t(a, &ca), B = qt_pp_t(b, &cb);
  ZPoly cg = zp_gcd(ca, cb);
  if (A.t_deg() < B.t_deg()) std::swap(A, B);
  while (!B.is_zero()) {
    QTPoly R = A;
    while (!R.is_zero() && R.t_deg() >= B.t_deg()) {
      int s = R.t_deg() - B.t_deg();
      ZPoly lr = qt_lead_row(R), lb = qt_lead_row(B);
      R = R.mul_zp(lb) - B.mul_zp(lr).shift_t(s);
    }
    A = B;
    B = qt_pp_t(R);
  }
  return normalize(A.mul_zp(cg));
}

QTPoly qt_divexact(const QTPoly& a, const QTPoly& b) {
  QTPoly A = a, B = b;
  A.trim();
  B.trim();
  if (B.is_zero()) throw std::domain_error("qt_divexact: division by zero");
  if (A.is_zero()) return QTPoly{};
  if (A.t_deg() < B.t_deg()) throw std::domain_error("qt_divexact: not divisible");
  QTPoly Q;
  Q.rows.assign(A.t_deg() - B.t_deg() + 1, ZPoly{});
  while (!A.is_zero()) {
    int s = A.t_deg() - B.t_deg();
    if (s < 0) throw std::domain_error("qt_divexact: not divisible");
    ZPoly qrow = zp_divexact(qt_lead_row(A), qt_lead_row(B));
    Q.rows[s] = zp_add(Q.rows[s], qrow);
    A = A - B.mul_zp(qrow).shift_t(s);
  }
  Q.trim();
  return Q;
}

std::string QTPoly::str() const {
  if (is_zero()) return "0";
  // Terms ordered by total degree, then t-degree, then q-degree.
  std::vector<std::tuple<int, int, int>> mons;  // (total, te, qe)
  for (int i = 0; i < static_cast<int>(rows.size()); ++i)
    for (int j = 0; j < static_cast<int>(rows[i].size()); ++j)
      if (rows[i][j] != 0) mons.emplace_back(i + j, i, j);
  std::sort(mons.begin(), mons.end());
  std::ostringstream os;
  bool first = true;
  for (auto [tot, te, qe] : mons) {
    (void)tot;
    mpz_class c = rows[te][qe];
    std::string sign = c < 0 ? "-" : "+";
    mpz_class ac = abs(c);
    if (first) {
      if (c < 0) os << "-";
      first = false;
    } else {
      os << " " << sign << " ";
    }
    std::string body;
    if (qe > 0) body += "q" + (qe > 1 ? "^" + std::to_string(qe) : "");
    if (te > 0) {
      if (!body.empty()) body += "*";
      body += "t" + (te > 1 ? "^" + std::to_string(te) : "");
    }
    if (body.empty()) {
      os << ac.get_str();
    } else if (ac == 1) {
      os << body;
    } else {
      os << ac.get_str() << "*" << body;
    }
  }
  return os.str();
}

}  // namespace daha
