#include "daha/ratqt.hpp"

#include <stdexcept>

namespace daha {

RatQT::RatQT(const QTPoly& n, const QTPoly& d) : num_(n), den_(d) {
  num_.trim();
  den_.trim();
  if (den_.is_zero()) throw std::domain_error("RatQT: zero denominator");
  reduce();
}

void RatQT::reduce() {
  if (num_.is_zero()) {
    den_ = QTPoly(1);
    return;
  }
  QTPoly g = qt_gcd(num_, den_);
  num_ = qt_divexact(num_, g);
  den_ = qt_divexact(den_, g);
  if (den_.norm_sign() < 0) {
    num_ = -num_;
    den_ = -den_;
  }
}

RatQT RatQT::q(int e) {
  if (e >= 0) return RatQT(QTPoly::q(e), QTPoly(1));
  return RatQT(QTPoly(1), QTPoly::q(-e));
}

RatQT RatQT::t(int e) {
  if (e >= 0) return RatQT(QTPoly::t(e), QTPoly(1));
  return RatQT(QTPoly(1), QTPoly::t(-e));
}

RatQT RatQT::from_mpq(const mpq_class& c) {
  return RatQT(QTPoly(mpz_class(c.get_num())), QTPoly(mpz_class(c.get_den())));
}

std::optional<int> RatQT::t_order() const {
  if (num_.is_zero()) return std::nullopt;
  return num_.t_low() - den_.t_low();
}

RatQT RatQT::inv() const {
  if (is_zero()) throw std::domain_error("RatQT::inv: zero");
  return RatQT(den_, num_);
}

RatQT RatQT::pow(long e) const {
  if (e < 0) return inv().pow(-e);
  RatQT r(1), base = *this;
  while (e > 0) {
    if (e & 1) r = r * base;
    base = base * base;
    e >>= 1;
  }
  return r;
}

RatQT operator+(const RatQT& a, const RatQT& b) {
  if (a.is_zero()) return b;
  if (b.is_zero()) return a;
  if (a.den_ == b.den_) return RatQT(a.num_ + b.num_, a.den_);
  return RatQT(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

RatQT operator-(const RatQT& a, const RatQT& b) { return a + (-b); }

RatQT operator*(const RatQT& a, const RatQT& b) {
  if (a.is_zero() || b.is_zero()) return RatQT();
  // Cross-reduction keeps the intermediate products small.
  QTPoly g1 = qt_gcd(a.num_, b.den_);
  QTPoly g2 = qt_gcd(b.num_, a.den_);
  QTPoly n = qt_divexact(a.num_, g1) * qt_divexact(b.num_, g2);
  QTPoly d = qt_divexact(a.den_, g2) * qt_divexact(b.den_, g1);
  return RatQT(n, d);
}

RatQT operator/(const RatQT& a, const RatQT& b) { return a * b.inv(); }

RatQT RatQT::operator-() const {
  RatQT r;
  r.num_ = -num_;
  r.den_ = den_;
  return r;
}

bool RatQT::operator==(const RatQT& o) const {
  return num_ == o.num_ && den_ == o.den_;
}

std::string RatQT::str() const {
  if (is_zero()) return "0";
  std::string n = num_.str();
  if (den_ == QTPoly(1)) return n;
  bool npar = num_.t_deg() + num_.q_deg() > 0 || n.find(' ') != std::string::npos;
  std::string d = den_.str();
  bool dpar = den_.t_deg() + den_.q_deg() > 0 || d.find(' ') != std::string::npos;
  std::string r = npar ? "(" + n + ")" : n;
  r += "/";
  r += dpar ? "(" + d + ")" : d;
  return r;
}

}  // namespace daha
