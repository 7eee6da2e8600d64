#pragma once

#include <string>
#include <vector>

#include "daha/laurent.hpp"
#include "daha/weyl.hpp"

namespace daha {

// Finite-rank polynomial representation, quadratic relation (T_i-1)(T_i+t)=0.

// Demazure-Lusztig action; preserves polynomials and extends to Laurent terms.
LaurentPoly apply_T(int i, const LaurentPoly& f);
LaurentPoly apply_T_inv(int i, const LaurentPoly& f);

// omega f = f(q^{-1}x_k, x_1, ..., x_{k-1}); inverse is f(x_2,...,x_k, q x_1).
LaurentPoly apply_omega(const LaurentPoly& f, bool inverse = false);

// Same rotation restricted to the first i variables (identity past slot i).
LaurentPoly apply_omega_inv_partial(int i, const LaurentPoly& f);

// Projection onto the span of monomials divisible by x_1.
LaurentPoly pr1(const LaurentPoly& f);

// omega-tilde = t^{1-k} T_{k-1}...T_1 x_1^{-1};
// inverse = x_1 T_1^{-1}...T_{k-1}^{-1} t^{k-1}.
LaurentPoly apply_omega_tilde(const LaurentPoly& f, bool inverse = false);

// Cherednik operator Y_i = t^{k+1-i} T_{i-1}..T_1 omega^{-1} T_{k-1}^{-1}..T_i^{-1}
// and its deformation with pr1 spliced after the rotation (polynomials only).
LaurentPoly apply_Y(int i, const LaurentPoly& f);
LaurentPoly apply_Y_deformed(int i, const LaurentPoly& f);

// q^{lam_i} t^{u_lam(i)}
RatQT y_eigenvalue(const Weight& lam, int i);

// Operator words, applied right to left (composition order).
struct OpAtom {
  enum class Kind {
    T, TInv, X, XInv, Y, YDef,
    Omega, OmegaInv, OmegaTilde, OmegaTildeInv, Pr1, PiLast
  };
  Kind kind;
  int index = 0;
};
using OpWord = std::vector<OpAtom>;

// Tokens: T2, T2^-1, X1, X1^-1, Y3, Yd3, w, w^-1, wt, wt^-1, pr1, pi.
OpWord parse_op_word(const std::string& text);
LaurentPoly apply_op_word(const OpWord& word, LaurentPoly f);

// Nonsymmetric Macdonald polynomial, monic at x^lam, cached.
LaurentPoly macdonald_E(const Weight& lam);
// Same polynomial by an independent recursion path (no cache sharing).
LaurentPoly macdonald_E_alt(const Weight& lam);

bool check_E_eigen(const Weight& lam);
bool check_Y_triangular(int i, const Weight& lam);
bool check_Ytilde_triangular(int i, const Weight& lam);
bool check_Y_minus_Ytilde(int i, int k, const Weight& lam);
bool check_int3(const Weight& lam);
bool check_pos_system(int k, int max_deg);
// Requires a(lam) = p(lam): divisibility by x_1..x_a and the kernel identity.
bool check_div_lemma(const Weight& lam);
// Evaluating the last slot of E_{lam 0^n} at zero recovers E_{lam 0^{n-1}}.
bool check_E_limit_step(const Weight& lam, int n);

// Partial symmetrizer over the block x_{k+1}..x_n acting on rank-n input.
LaurentPoly symmetrizer_eps(int k, int n, const LaurentPoly& f);

// All defining relations plus the determinant/conjugation identities, as
// operator identities on every monomial of degree <= max_deg.
bool check_daha_relations(int k, int max_deg, std::string* first_failure = nullptr);
bool check_Y_commutativity(int k, int max_deg);

std::vector<Weight> weights_of_degree(int k, int deg);
std::vector<Weight> weights_up_to_degree(int k, int deg);

}  // namespace daha
