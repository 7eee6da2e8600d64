#pragma once

#include <gmpxx.h>

#include <map>
#include <optional>
#include <string>
#include <utility>

namespace daha {

// Polynomials in q and h with rational coefficients, sparse. Invariant:
// no zero coefficients stored; exponents nonnegative.
class PolyQH {
 public:
  PolyQH() = default;
  PolyQH(long c);
  static PolyQH q(int e = 1);
  static PolyQH h(int e = 1);
  static PolyQH monomial(const mpq_class& c, int qe, int he);

  bool is_zero() const { return terms_.empty(); }
  // Order of vanishing at h = 0; nullopt encodes +infinity (the zero element).
  std::optional<int> h_order() const;
  int h_deg() const;
  mpq_class coeff(int qe, int he) const;
  // Coefficient of h^he as a map qe -> c.
  std::map<int, mpq_class> h_slice(int he) const;

  friend PolyQH operator+(const PolyQH& a, const PolyQH& b);
  friend PolyQH operator-(const PolyQH& a, const PolyQH& b);
  friend PolyQH operator*(const PolyQH& a, const PolyQH& b);
  PolyQH operator-() const;
  PolyQH& operator+=(const PolyQH& o) { return *this = *this + o; }
  PolyQH& operator-=(const PolyQH& o) { return *this = *this - o; }
  PolyQH& operator*=(const PolyQH& o) { return *this = *this * o; }
  bool operator==(const PolyQH& o) const { return terms_ == o.terms_; }
  bool operator!=(const PolyQH& o) const { return !(*this == o); }

  PolyQH scale(const mpq_class& c) const;
  const std::map<std::pair<int, int>, mpq_class>& terms() const { return terms_; }

  std::string str() const;

 private:
  // (q-exponent, h-exponent) -> coefficient
  std::map<std::pair<int, int>, mpq_class> terms_;
  void add_term(int qe, int he, const mpq_class& c);
};

}  // namespace daha
