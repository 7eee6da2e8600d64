#pragma once

#include <gmpxx.h>

#include <string>
#include <vector>

namespace daha {

// Integer polynomials in q, dense coefficient vector. Invariant after trim:
// empty vector represents zero, otherwise back() != 0.
using ZPoly = std::vector<mpz_class>;

ZPoly zp_trim(ZPoly a);
bool zp_is_zero(const ZPoly& a);
int zp_deg(const ZPoly& a);  // -1 for zero
ZPoly zp_add(const ZPoly& a, const ZPoly& b);
ZPoly zp_sub(const ZPoly& a, const ZPoly& b);
ZPoly zp_neg(ZPoly a);
ZPoly zp_mul(const ZPoly& a, const ZPoly& b);
ZPoly zp_mul_mpz(ZPoly a, const mpz_class& c);
// Nonnegative gcd of all coefficients; 0 for the zero polynomial.
mpz_class zp_content(const ZPoly& a);
ZPoly zp_divexact_mpz(ZPoly a, const mpz_class& c);
// Gcd in Z[q] (including integer content), positive leading coefficient.
ZPoly zp_gcd(ZPoly a, ZPoly b);
// Exact division in Z[q]; throws std::domain_error if b does not divide a.
ZPoly zp_divexact(const ZPoly& a, const ZPoly& b);

// Polynomials in q and t over the integers. rows[i] is the coefficient of
// t^i as a ZPoly in q. Invariant after trim: no trailing zero rows, every
// row individually trimmed.
class QTPoly {
 public:
  std::vector<ZPoly> rows;

  QTPoly() = default;
  explicit QTPoly(long c);
  explicit QTPoly(const mpz_class& c);
  static QTPoly q(int e = 1);
  static QTPoly t(int e = 1);
  static QTPoly monomial(const mpz_class& c, int qe, int te);

  bool is_zero() const;
  void trim();
  int t_deg() const;  // -1 for zero
  int t_low() const;  // smallest i with rows[i] != 0; -1 for zero
  int q_deg() const;
  int q_low() const;
  int total_deg() const;  // max qe+te over support; -1 for zero

  // Sign of the coefficient of the normalization anchor monomial: the
  // graded-lex lowest one (min total degree, ties broken by larger
  // q-exponent). 0 for zero. Keeps denominators like 1 - t positive.
  int norm_sign() const;

  QTPoly mul_zp(const ZPoly& c) const;
  QTPoly mul_mpz(const mpz_class& c) const;
  QTPoly shift_t(int s) const;
  // Gcd over Z[q] of all rows; zero polynomial for zero.
  ZPoly content_q() const;

  std::string str() const;

  friend QTPoly operator+(const QTPoly& a, const QTPoly& b);
  friend QTPoly operator-(const QTPoly& a, const QTPoly& b);
  friend QTPoly operator*(const QTPoly& a, const QTPoly& b);
  QTPoly operator-() const;
  bool operator==(const QTPoly& o) const;
  bool operator!=(const QTPoly& o) const { return !(*this == o); }
};

// Gcd in Z[q,t] via primitive PRS in t over Z[q]; normalized so the
// graded-lex leading coefficient is positive. qt_gcd(0,0) = 0.
QTPoly qt_gcd(QTPoly a, QTPoly b);
// Exact division; throws std::domain_error if b does not divide a.
QTPoly qt_divexact(const QTPoly& a, const QTPoly& b);

}  // namespace daha
