#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "daha/polyqh.hpp"
#include "daha/weyl.hpp"

namespace daha {

// Generators of the rank-k algebra over Q[q,h]: X_i, Y_i (degree 1, index
// 1..k) and T_i, T_i^{-1} (degree 0, index 1..k-1), with T_i - T_i^{-1} = h.
// This layer never mixes with the (T_i - 1)(T_i + t) = 0 normalization used
// by the polynomial representation.
struct GenAtom {
  enum class Kind { X, Y, T, Tinv };
  Kind kind;
  int index;
  bool operator==(const GenAtom& o) const {
    return kind == o.kind && index == o.index;
  }
  std::string str() const;
};

// Word in the generators; rank is fixed at construction and validates
// indices. Letters are stored left to right in multiplication order.
class GenWord {
 public:
  explicit GenWord(int k);
  // Whitespace-separated atoms "X1 Y1 T2 T2^-1".
  static GenWord parse(int k, const std::string& text);

  GenWord& x(int i);
  GenWord& y(int i);
  GenWord& t(int i);
  GenWord& tinv(int i);
  GenWord& append(const GenAtom& a);
  GenWord& append(const GenWord& other);  // other must have rank <= k

  int rank() const { return k_; }
  const std::vector<GenAtom>& letters() const { return letters_; }
  int deg_x() const;
  int deg_y() const;
  std::string str() const;

 private:
  int k_;
  std::vector<GenAtom> letters_;
};

// Swaps X and Y letters and T with T^{-1}. On coefficients the matching
// involution sends h to -h; callers adjust signs themselves.
GenWord involute(const GenWord& wd);

// Palindromic word T_a .. T_{b-1} .. T_a (inverse letters when inverse is
// set); as an algebra element it is the basis element of the transposition
// (a,b).
GenWord tab_word(int k, int a, int b, bool inverse = false);

// tab_word with one X/Y letter spliced in. descending = true inserts after
// the occurrence of T_i in the apex/descent part, false after the ascending
// occurrence; i = a-1 (ascending only) prepends the letter.
GenWord tab_word_inserted(int k, int a, int b, int i, bool descending,
                          const GenAtom& letter, bool inverse = false);

// Index of a basis element X_mu Y_nu T_w; mu, nu are exponent vectors of
// length k, w in S_k.
struct PBWIndex {
  Weight mu;
  Weight nu;
  Perm w;
  bool operator<(const PBWIndex& o) const;
  bool operator==(const PBWIndex& o) const;
  std::string str() const;
};

// Element of the rank-k algebra written in the X_mu Y_nu T_w basis with
// coefficients in Q[q,h]. Invariant: no zero coefficients stored.
class PBWElem {
 public:
  explicit PBWElem(int k);
  static PBWElem one(int k);
  static PBWElem basis(const PBWIndex& idx, const PolyQH& c = PolyQH(1));

  int rank() const { return k_; }
  const std::map<PBWIndex, PolyQH>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  PolyQH coeff(const PBWIndex& idx) const;
  void add(const PBWIndex& idx, const PolyQH& c);

  // Right multiplication by one generator; the engine behind straighten.
  PBWElem times_t(int i, int sign) const;
  PBWElem times_x(int c) const;
  PBWElem times_y(int c) const;
  PBWElem times_word(const GenWord& wd) const;
  // Term-by-term concatenation product: expands each basis index of o as a
  // word and right-multiplies.
  PBWElem times(const PBWElem& o) const;

  friend PBWElem operator+(const PBWElem& a, const PBWElem& b);
  friend PBWElem operator-(const PBWElem& a, const PBWElem& b);
  PBWElem operator-() const;
  PBWElem scale(const PolyQH& c) const;
  bool operator==(const PBWElem& o) const;
  bool operator!=(const PBWElem& o) const { return !(*this == o); }

  std::string str() const;
  std::string json() const;

 private:
  int k_;
  std::map<PBWIndex, PolyQH> terms_;
};

PBWElem straighten(const GenWord& wd);
PBWElem straighten(int k, const std::string& text);

// Per-slot word over a paired alphabet with a trailing permutation: slot j
// uses only the letters X_j, Y_j; slot strings use the characters 'X', 'Y'.
class StdWord {
 public:
  StdWord(std::vector<std::string> slots, Perm w);

  int r() const { return static_cast<int>(slots_.size()); }
  const std::vector<std::string>& slots() const { return slots_; }
  const Perm& w() const { return w_; }
  int deg_x() const;
  int deg_y() const;
  // Concatenated generator word at rank k: slot letters in slot order, then
  // a reduced word of w.
  GenWord concat(int k) const;
  std::vector<std::vector<int>> gap_data() const;
  std::vector<int> m_data() const;  // per-slot Y-degrees
  std::vector<int> z_data() const;
  std::string str() const;

 private:
  std::vector<std::string> slots_;
  Perm w_;
};

// Image of a standard word in the rank-k algebra, fully straightened.
PBWElem phi_k(const StdWord& sw, int k);

// h-adic order of the coefficient at idx; nullopt encodes +infinity.
std::optional<int> ord_coeff(const PBWElem& e, const PBWIndex& idx);

// Gap sequence of a word over {X,Y} ('X'/'Y' characters): g_i counts the X
// letters between consecutive Y letters scanning right to left; length is
// deg_Y + 1. The correspondence word <-> sequence is bijective.
std::vector<int> gap_sequence(const std::string& xy_word);
std::string word_from_gaps(const std::vector<int>& g);

// Smallest index with a nonzero entry, or len-1 when all entries vanish.
int z_stat(const std::vector<int>& a);

// Prefix-sum dominance; the shorter sequence is padded with zeros.
bool dominance_leq(const std::vector<int>& a, const std::vector<int>& b);

// The (m+1)-cycle (j, N, N-1, ..., N-m+1) inside S_k.
Perm cycle_jnm(int k, int j, int N, int m);

// Basis index X_j^{a_m+1} X_{N-m+z+1}^{a_{m-1}} .. X_N^{a_z-1} *
// Y_j Y_{N-m+z+1} .. Y_{N-1} Y_N^z T_{(j,N,..,N-m+z+1)} for z < m, and
// (X_j^{a_m}, Y_j^m, id) for z = m. Requires k > N >= m+j and len(a) = m+1.
PBWIndex m_special(const std::vector<int>& a, int k, int j, int m, int N);

// Product of the slot elements above with slot j using N_j = k - m_r - ..
// - m_{j+1}; the slot cycles are disjoint and their product is the T-index.
// Requires k >= sum(m_j) + r.
PBWIndex m_special_multi(const std::vector<std::vector<int>>& slots, int k);

// Normal form in the h = 0 quotient of the rank-k algebra: the permutation
// collects on the right, letters land in the slot given by the running
// permutation, and within one slot y x = q x y. The image of any word is a
// single basis element q^{q_power} X_mu Y_nu T_w.
struct Ev0Form {
  std::vector<std::string> slot_words;  // index 0 unused; free words pre-swap
  Weight mu;
  Weight nu;
  Perm w;
  int q_power;
};
Ev0Form ev0_normal_form(const GenWord& wd);

struct VerifyReport {
  bool pass = true;
  long checked = 0;
  std::vector<std::string> violations;  // capped at 32 entries
  void note(bool ok, const std::string& msg);
  std::string str() const;
};

// Defining relations, the k-dependent commutation relations, and the
// relation Y_1 X_1..X_k = q X_1..X_k Y_1, all compared after straightening.
VerifyReport verify_relations(int k);

// The twelve insertion identities for T_{(a,b)} with one X or Y letter
// inside, plus their images under the involution, for 1 <= a < b <= max_b.
VerifyReport verify_tab_identities(int k, int max_b);

// Every term X_mu Y_nu T_w of phi_k(sw) has coefficient order >= the
// reflection length of w. Requires trivial sw.w, deg <= 5, r <= 3, k <= 5.
VerifyReport verify_upsilon_bound(const StdWord& sw, int k);

// Order bounds for the special indices in phi_k(sw): the bound |m - z(a)|,
// the trailing permutation, the z comparison, per-slot dominance at equal z,
// and the leading coefficient q^{|m-z|} h^{|m-z|}. Requires per-slot Y-degree
// <= 3 and k >= sum(m_j) + r.
VerifyReport verify_main_theorem(const StdWord& sw, int k);

struct PartsYzParams {
  int N = 4;             // rank for the cycle family; at most 5
  int z = 2;             // largest Y-power; at most 3
  int parts_rank = 3;    // exhaustive S_rank box for the distinct-parts bound
  int parts_deg = 3;     // largest |lambda| in that box
  int ordineq_rank = 3;  // exhaustive S_rank x S_rank, all four sign pairs
  bool yz_embed = true;  // rerun the cycle family at rank N+1
};

// Three order-bound statements checked by direct straightening: the
// distinct-parts bound for terms of T_w Y_lambda X_eta, the cycle-family
// bound for T_sigma Y_1^z, and the reflection-length inequality for products
// T_{w1}^{s1} T_{w2}^{s2} together with its equality case.
VerifyReport verify_parts_and_yz(const PartsYzParams& p);

// The straightened image of count seeded random words agrees with the h = 0
// normal form: a single term q^{q_power} X_mu Y_nu T_w at order 0, all other
// coefficients of order >= 1.
VerifyReport verify_ev0_random(int k, int count, unsigned seed, int max_deg,
                               int max_len);

}  // namespace daha
