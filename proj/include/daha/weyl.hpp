#pragma once

#include <string>
#include <vector>

namespace daha {

// Weight: integer vector, one entry per variable slot (rank = size).
using Weight = std::vector<int>;

// Permutation of {1..k} in one-line notation: img[i-1] = w(i).
class Perm {
 public:
  Perm() = default;
  explicit Perm(std::vector<int> one_line);
  static Perm identity(int k);
  static Perm transposition(int k, int a, int b);  // (a,b), 1-based
  static Perm from_word(int k, const std::vector<int>& word);  // product of s_i

  int rank() const { return static_cast<int>(img_.size()); }
  int operator()(int i) const { return img_[i - 1]; }  // 1-based
  const std::vector<int>& one_line() const { return img_; }

  Perm compose(const Perm& o) const;  // (this*o)(i) = this(o(i))
  Perm inverse() const;
  Perm mul_right_s(int i) const;  // this * s_i
  Perm mul_left_s(int i) const;   // s_i * this
  int length() const;             // inversion count
  bool is_identity() const;
  int cycle_count() const;  // fixed points included

  // Positions permuted: result[w(i)-1] = lam[i-1].
  Weight act(const Weight& lam) const;

  // One reduced word (indices of simple reflections, leftmost factor first).
  std::vector<int> reduced_word() const;
  // All reduced words; factorial growth, use only on short elements.
  std::vector<std::vector<int>> all_reduced_words() const;

  bool operator==(const Perm& o) const { return img_ == o.img_; }
  bool operator!=(const Perm& o) const { return !(*this == o); }
  bool operator<(const Perm& o) const { return img_ < o.img_; }

  std::string str() const;

 private:
  std::vector<int> img_;
};

// Reflection length: k minus the number of cycles.
int kappa_min(const Perm& w);

// All elements of S_k, deterministic order.
std::vector<Perm> all_perms(int k);

// Simple affine reflection s_i acting on weights; i = 0 uses the affine one.
Weight affine_s(int i, const Weight& lam);
// Pairing <alpha_i, lam> with <delta, lam> = 1.
int affine_pairing(int i, const Weight& lam);
// General affine reflection s_{n delta + e_i - e_j} and its pairing.
Weight affine_reflect(int n, int i, int j, const Weight& lam);
int affine_reflect_pairing(int n, int i, int j, const Weight& lam);

bool is_minuscule(const Weight& lam);

// Affine permutation in window notation: win[i-1] = w(i), w(i+k) = w(i)+k.
// Only used for length bookkeeping of minimal orbit representatives.
struct AffinePerm {
  std::vector<long> win;
  int rank() const { return static_cast<int>(win.size()); }
  static AffinePerm identity(int k);
  AffinePerm mul_right_s(int i) const;  // i in 0..k-1
};

// Minimal-length w with w(minuscule(lam)) = lam, as a simple-reflection word
// (leftmost factor applied last to the minuscule weight). Word length equals
// the Bruhat distance to the minuscule element.
std::vector<int> min_affine_word(const Weight& lam);

// u_lam(i) = #{j <= i : lam_j > lam_i} + #{j >= i : lam_j >= lam_i}, 1-based.
int u_stat(const Weight& lam, int i);
// 0 if i exceeds the length or lam_i = 0, else 1.
int sgn_stat(const Weight& lam, int i);

// Bruhat order on weights of equal rank (affine symmetric group orbits).
bool bruhat_leq(const Weight& lam, const Weight& mu);
// Independent ground-truth comparison by explicit reflection BFS.
// Requires nonnegative entries, rank <= 4, entries <= 4.
bool bruhat_leq_bfs_oracle(const Weight& lam, const Weight& mu);

Weight sort_orbit(const Weight& lam, bool dominant);

// Index of the almost-symmetric monomial basis: x^lambda * m_mu over the
// variables past position len(lambda).
struct AsymIndex {
  std::vector<int> lambda;  // strict composition: empty or last entry > 0
  std::vector<int> mu;      // partition: weakly decreasing, positive entries

  AsymIndex() = default;
  AsymIndex(std::vector<int> l, std::vector<int> m);
  bool operator==(const AsymIndex& o) const {
    return lambda == o.lambda && mu == o.mu;
  }
  bool operator<(const AsymIndex& o) const {
    return std::pair(lambda, mu) < std::pair(o.lambda, o.mu);
  }
  int total() const;
  std::string str() const;
};

bool as_order_leq(const AsymIndex& a, const AsymIndex& b);

}  // namespace daha
