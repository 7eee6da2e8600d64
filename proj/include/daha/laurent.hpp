#pragma once

#include <map>
#include <string>
#include <vector>

#include "daha/ratqt.hpp"

namespace daha {

using Exps = std::vector<int>;

// Sparse Laurent polynomial in x_1..x_k with RatQT coefficients.
// Invariant: no zero coefficients stored; every exponent vector has
// length exactly rank().
class LaurentPoly {
 public:
  LaurentPoly() = default;
  explicit LaurentPoly(int rank) : rank_(rank) {}

  static LaurentPoly constant(int rank, const RatQT& c);
  static LaurentPoly monomial(int rank, Exps e, RatQT c = RatQT(1));
  static LaurentPoly x(int rank, int i, int e = 1);  // x_i^e, i 1-based

  int rank() const { return rank_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_polynomial() const;  // all exponents nonnegative
  const std::map<Exps, RatQT>& terms() const { return terms_; }
  RatQT coeff(const Exps& e) const;
  int total_degree() const;  // max term degree; 0 for the zero polynomial
  bool is_homogeneous() const;

  LaurentPoly operator+(const LaurentPoly& o) const;
  LaurentPoly operator-(const LaurentPoly& o) const;
  LaurentPoly operator*(const LaurentPoly& o) const;
  LaurentPoly operator-() const;
  LaurentPoly& operator+=(const LaurentPoly& o) { return *this = *this + o; }
  LaurentPoly& operator-=(const LaurentPoly& o) { return *this = *this - o; }
  LaurentPoly& operator*=(const LaurentPoly& o) { return *this = *this * o; }
  LaurentPoly scale(const RatQT& c) const;
  bool operator==(const LaurentPoly& o) const;
  bool operator!=(const LaurentPoly& o) const { return !(*this == o); }

  // Terms in graded lexicographic order (highest first), coefficients
  // parenthesized when they are sums or quotients.
  std::string str() const;

 private:
  int rank_ = 0;
  std::map<Exps, RatQT> terms_;
  void add_term(const Exps& e, const RatQT& c);
};

LaurentPoly operator*(const RatQT& c, const LaurentPoly& f);

// s_i acting by swapping x_i and x_{i+1}.
LaurentPoly swap_action(const LaurentPoly& f, int i);

// Set x_k = 0 and drop the last variable slot (rank k -> k-1).
// Throws on a negative x_k exponent.
LaurentPoly evaluate_at_zero_last(const LaurentPoly& f);

}  // namespace daha
