#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "daha/laurent.hpp"
#include "daha/symfunc.hpp"
#include "daha/weyl.hpp"

namespace daha {

// Element of the almost-symmetric module: a finite sum of basis terms
// x^lambda * m_mu[X_l], where l = len(lambda), lambda has no trailing zero,
// and X_l denotes the tail alphabet {x_{l+1}, x_{l+2}, ...}. Stored in these
// canonical coordinates, which are unique; the minimal supporting rank is
// recoverable as the largest head length.
class AsymFn {
 public:
  AsymFn() = default;

  static AsymFn basis(const AsymIndex& idx, RatQT c = RatQT(1));
  // x^alpha * m_mu[X_j] with len(alpha) == j, canonicalized.
  static AsymFn term(int j, const Exps& alpha, const Partition& mu,
                     RatQT c = RatQT(1));
  // Rank-k polynomial (empty tails). Throws on Laurent input.
  static AsymFn from_poly(const LaurentPoly& f);
  // Pure symmetric function in the full alphabet X_0.
  static AsymFn from_symfn(const SymFn& g);

  const std::map<AsymIndex, RatQT>& coords() const { return coords_; }
  int rank() const;    // minimal k with the value in P(k)+
  int degree() const;  // max total degree; 0 for zero
  bool is_zero() const { return coords_.empty(); }
  RatQT coeff(const AsymIndex& idx) const;

  AsymFn operator+(const AsymFn& o) const;
  AsymFn operator-(const AsymFn& o) const;
  AsymFn operator-() const;
  AsymFn scale(const RatQT& c) const;
  bool operator==(const AsymFn& o) const { return coords_ == o.coords_; }
  bool operator!=(const AsymFn& o) const { return !(*this == o); }

  std::string str() const;
  std::string json() const;

 private:
  std::map<AsymIndex, RatQT> coords_;
  void add(const AsymIndex& idx, const RatQT& c);
  friend void add_term_canonical(AsymFn& out, Exps alpha, Partition mu,
                                 const RatQT& c);
};

std::map<AsymIndex, RatQT> to_mas_basis(const AsymFn& f);

// Working form at a common rank k >= rank(f): coefficients of x^e * m_mu[X_k].
std::map<std::pair<Exps, Partition>, RatQT> raise_terms(const AsymFn& f, int k);
// Value-preserving; provided for symmetry with the working form.
AsymFn raise_rank(const AsymFn& f, int k);

// Substitute the tail alphabet by the concrete variables x_{l+1}..x_n.
LaurentPoly truncate(const AsymFn& f, int n);

// Limit operators. All auto-raise as needed and return canonical forms.
AsymFn limit_T(int i, const AsymFn& f);
AsymFn limit_T_inv(int i, const AsymFn& f);
AsymFn limit_X(int i, const AsymFn& f);
AsymFn limit_Y(int i, const AsymFn& f);

// sgn_i(lambda) * q^{lambda_i} * t^{u_{lambda*mu}(i)}
RatQT limit_y_eigenvalue(const AsymIndex& idx, int i);

struct ConvergenceReport {
  int C = 0;
  // (n, min t-order of the rank-n residual); nullopt means exact zero.
  std::vector<std::pair<int, std::optional<int>>> orders;
  bool pass = false;
};

// Residual t-order analysis of Y_i^{(n)} Pi_n f - Pi_n(limit_Y(i, f)) over
// n in [n_lo, n_hi]. Passes iff orders are >= n - C and strictly increase.
ConvergenceReport verify_limit_convergence(int i, const AsymFn& f, int n_lo,
                                           int n_hi);

// Limit Macdonald function for a weight (trailing zeros immaterial). Packed
// weights are reconstructed from three consecutive truncation ranks, which
// must agree exactly; other weights descend through Hecke intertwiners.
AsymFn limit_macdonald(const Weight& lam);

// Monic symmetric Macdonald function in the m-basis (rank-0 element).
AsymFn macdonald_P(const Partition& mu);

// prod over part values of (multiplicity)_t!
RatQT v_mu_factor(const Partition& mu);

// Joint eigenfunction with leading term m_idx. Solved from the eigenvalue
// equations inside the order ideal of idx; throws if that system does not
// pin the function down uniquely.
AsymFn tilde_E(const AsymIndex& idx);

// Diagonal coefficient and strict order-triangularity of limit_Y on a basis
// element.
bool check_cY_triangularity(const AsymIndex& idx, int i);

// All canonical indices of the given total degree with head length <= max_len.
std::vector<AsymIndex> asym_indices_of_degree(int d, int max_len);

}  // namespace daha
