#pragma once

#include <optional>
#include <string>

#include "daha/qtpoly.hpp"

namespace daha {

// Rational functions in q and t over the rationals, kept in canonical form:
// gcd(num, den) has unit content, den has positive graded-lex leading
// coefficient, and zero is 0/1. Equality is therefore componentwise.
class RatQT {
 public:
  RatQT() : num_(), den_(1) {}
  RatQT(long c) : num_(c), den_(1) {}
  RatQT(const QTPoly& n, const QTPoly& d);

  static RatQT q(int e = 1);  // e may be negative
  static RatQT t(int e = 1);
  static RatQT from_mpq(const mpq_class& c);

  const QTPoly& num() const { return num_; }
  const QTPoly& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }

  // Order of vanishing at t = 0; nullopt encodes +infinity (the zero element).
  std::optional<int> t_order() const;

  RatQT inv() const;
  RatQT pow(long e) const;

  friend RatQT operator+(const RatQT& a, const RatQT& b);
  friend RatQT operator-(const RatQT& a, const RatQT& b);
  friend RatQT operator*(const RatQT& a, const RatQT& b);
  friend RatQT operator/(const RatQT& a, const RatQT& b);
  RatQT operator-() const;
  RatQT& operator+=(const RatQT& o) { return *this = *this + o; }
  RatQT& operator-=(const RatQT& o) { return *this = *this - o; }
  RatQT& operator*=(const RatQT& o) { return *this = *this * o; }
  RatQT& operator/=(const RatQT& o) { return *this = *this / o; }
  bool operator==(const RatQT& o) const;
  bool operator!=(const RatQT& o) const { return !(*this == o); }

  std::string str() const;

 private:
  QTPoly num_, den_;
  void reduce();
};

}  // namespace daha
