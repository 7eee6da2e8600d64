#pragma once

#include <map>
#include <string>
#include <vector>

#include "daha/laurent.hpp"
#include "daha/ratqt.hpp"

namespace daha {

// Partition: weakly decreasing positive parts; empty = the unit.
using Partition = std::vector<int>;

bool is_partition(const Partition& mu);
std::vector<Partition> partitions_of(int n);

// Hard degree cap. All suites are bounded-degree; overflow is an error,
// never a silent truncation.
inline constexpr int kSymDegreeCap = 8;

// Symmetric function stored in the monomial basis with RatQT coefficients.
class SymFn {
 public:
  SymFn() = default;
  static SymFn one();
  static SymFn m(const Partition& mu, RatQT c = RatQT(1));
  static SymFn h(int n);  // complete homogeneous: sum of all m_mu, mu |- n
  static SymFn p(int n);  // power sum: m_(n)
  static SymFn e(int n);  // elementary: m_(1^n)

  const std::map<Partition, RatQT>& terms() const { return terms_; }
  RatQT coeff(const Partition& mu) const;
  bool is_zero() const { return terms_.empty(); }
  int degree() const;  // max |mu|; 0 for zero

  SymFn operator+(const SymFn& o) const;
  SymFn operator-(const SymFn& o) const;
  SymFn operator*(const SymFn& o) const;  // throws past the degree cap
  SymFn operator-() const;
  SymFn& operator+=(const SymFn& o) { return *this = *this + o; }
  SymFn& operator-=(const SymFn& o) { return *this = *this - o; }
  SymFn& operator*=(const SymFn& o) { return *this = *this * o; }
  SymFn scale(const RatQT& c) const;
  bool operator==(const SymFn& o) const { return terms_ == o.terms_; }
  bool operator!=(const SymFn& o) const { return !(*this == o); }

  std::string str() const;  // "m[2,1] + 2*m[1,1,1]" style

 private:
  std::map<Partition, RatQT> terms_;
  void add_term(const Partition& mu, const RatQT& c);
  friend SymFn from_power_sums(const std::map<Partition, RatQT>& exp);
};

// Expansion in the power-sum basis (exact, per graded piece).
std::map<Partition, RatQT> to_power_sums(const SymFn& f);
SymFn from_power_sums(const std::map<Partition, RatQT>& exp);

// f[(1-t)X]: p_m -> (1-t^m) p_m, re-expanded in the monomial basis.
SymFn pleth_one_minus_t(const SymFn& f);

// f[X+y] for one letter y: key = power of y, value = coefficient in Sym[X].
// m_mu[X+y] = sum over a in distinct parts of mu (plus 0) of y^a m_{mu-a}[X].
std::map<int, SymFn> add_letter(const SymFn& f);

// Evaluate on the finite alphabet x_first..x_last inside rank `rank`.
// Empty alphabet (last < first) sends every positive-degree m_mu to zero.
LaurentPoly eval_finite(const SymFn& f, int first, int last, int rank);

// Inverse readout: f must be symmetric in x_first..x_rank (verified; throws
// std::domain_error otherwise) and constant in the earlier slots.
SymFn from_finite(const LaurentPoly& f, int first);

}  // namespace daha
