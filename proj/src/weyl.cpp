#include "daha/weyl.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <queue>
#include <set>
#include <sstream>
#include <stdexcept>

namespace daha {

Perm::Perm(std::vector<int> one_line) : img_(std::move(one_line)) {
  std::vector<int> seen(img_.size(), 0);
  for (int v : img_) {
    if (v < 1 || v > static_cast<int>(img_.size()) || seen[v - 1]++)
      throw std::domain_error("Perm: not a bijection of {1..k}");
  }
}

Perm Perm::identity(int k) {
  std::vector<int> v(k);
  std::iota(v.begin(), v.end(), 1);
  Perm p;
  p.img_ = std::move(v);
  return p;
}

Perm Perm::transposition(int k, int a, int b) {
  Perm p = identity(k);
  std::swap(p.img_[a - 1], p.img_[b - 1]);
  return p;
}

Perm Perm::from_word(int k, const std::vector<int>& word) {
  Perm p = identity(k);
  for (int i : word) p = p.mul_right_s(i);
  return p;
}

Perm Perm::compose(const Perm& o) const {
  Perm r;
  r.img_.resize(img_.size());
  for (size_t i = 0; i < img_.size(); ++i) r.img_[i] = img_[o.img_[i] - 1];
  return r;
}

Perm Perm::inverse() const {
  Perm r;
  r.img_.resize(img_.size());
  for (size_t i = 0; i < img_.size(); ++i) r.img_[img_[i] - 1] = static_cast<int>(i) + 1;
  return r;
}

Perm Perm::mul_right_s(int i) const {
  Perm r = *this;
  std::swap(r.img_[i - 1], r.img_[i]);
  return r;
}

Perm Perm::mul_left_s(int i) const {
  Perm r = *this;
  for (auto& v : r.img_) {
    if (v == i)
      v = i + 1;
    else if (v == i + 1)
      v = i;
  }
  return r;
}

int Perm::length() const {
  int inv = 0;
  for (size_t i = 0; i < img_.size(); ++i)
    for (size_t j = i + 1; j < img_.size(); ++j)
      if (img_[i] > img_[j]) ++inv;
  return inv;
}

bool Perm::is_identity() const {
  for (size_t i = 0; i < img_.size(); ++i)
    if (img_[i] != static_cast<int>(i) + 1) return false;
  return true;
}

int Perm::cycle_count() const {
  int k = rank(), count = 0;
  std::vector<char> seen(k, 0);
  for (int i = 0; i < k; ++i) {
    if (seen[i]) continue;
    ++count;
    int j = i;
    while (!seen[j]) {
      seen[j] = 1;
      j = img_[j] - 1;
    }
  }
  return count;
}

Weight Perm::act(const Weight& lam) const {
  if (lam.size() != img_.size()) throw std::domain_error("Perm::act: rank mismatch");
  Weight r(lam.size());
  for (size_t i = 0; i < img_.size(); ++i) r[img_[i] - 1] = lam[i];
  return r;
}

std::vector<int> Perm::reduced_word() const {
  Perm w = *this;
  std::vector<int> word;
  for (;;) {
    int i = 0;
    for (int j = 1; j < w.rank(); ++j) {
      if (w.img_[j - 1] > w.img_[j]) {
        i = j;
        break;
      }
    }
    if (i == 0) break;
    w = w.mul_right_s(i);
    word.push_back(i);
  }
  std::reverse(word.begin(), word.end());
  return word;
}

std::vector<std::vector<int>> Perm::all_reduced_words() const {
  if (is_identity()) return {{}};
  std::vector<std::vector<int>> result;
  for (int i = 1; i < rank(); ++i) {
    if (img_[i - 1] > img_[i]) {  // right descent: l(w s_i) < l(w)
      for (auto word : mul_right_s(i).all_reduced_words()) {
        word.push_back(i);
        result.push_back(std::move(word));
      }
    }
  }
  return result;
}

std::string Perm::str() const {
  std::ostringstream os;
  os << "[";
  for (size_t i = 0; i < img_.size(); ++i) os << (i ? " " : "") << img_[i];
  os << "]";
  return os.str();
}

int kappa_min(const Perm& w) { return w.rank() - w.cycle_count(); }

std::vector<Perm> all_perms(int k) {
  std::vector<int> v(k);
  std::iota(v.begin(), v.end(), 1);
  std::vector<Perm> r;
  do {
    r.push_back(Perm(v));
  } while (std::next_permutation(v.begin(), v.end()));
  return r;
}

int affine_pairing(int i, const Weight& lam) {
  int k = static_cast<int>(lam.size());
  if (i == 0) return 1 - lam[0] + lam[k - 1];
  return lam[i - 1] - lam[i];
}

Weight affine_s(int i, const Weight& lam) {
  Weight r = lam;
  int k = static_cast<int>(lam.size());
  if (i == 0) {
    r[0] = lam[k - 1] + 1;
    r[k - 1] = lam[0] - 1;
  } else {
    std::swap(r[i - 1], r[i]);
  }
  return r;
}

Weight affine_reflect(int n, int i, int j, const Weight& lam) {
  Weight r = lam;
  r[i - 1] = lam[j - 1] - n;
  r[j - 1] = lam[i - 1] + n;
  return r;
}

int affine_reflect_pairing(int n, int i, int j, const Weight& lam) {
  return n + lam[i - 1] - lam[j - 1];
}

bool is_minuscule(const Weight& lam) {
  for (size_t i = 0; i + 1 < lam.size(); ++i)
    if (lam[i] < lam[i + 1]) return false;
  return lam.empty() || lam.front() - lam.back() <= 1;
}

AffinePerm AffinePerm::identity(int k) {
  AffinePerm w;
  w.win.resize(k);
  std::iota(w.win.begin(), w.win.end(), 1);
  return w;
}

AffinePerm AffinePerm::mul_right_s(int i) const {
  // (w s_i)(j) = w(s_i(j)); s_0 swaps positions 0 and k through the window shift.
  int k = rank();
  AffinePerm r = *this;
  if (i == 0) {
    long a = win[k - 1] - k, b = win[0] + k;
    r.win[0] = a;
    r.win[k - 1] = b;
  } else {
    std::swap(r.win[i - 1], r.win[i]);
  }
  return r;
}

std::vector<int> min_affine_word(const Weight& lam) {
  Weight cur = lam;
  std::vector<int> word;
  for (;;) {
    int k = static_cast<int>(cur.size());
    int pick = -1;
    for (int i = 0; i < k; ++i) {
      if (affine_pairing(i, cur) < 0) {
        pick = i;
        break;
      }
    }
    if (pick < 0) break;
    cur = affine_s(pick, cur);
    word.push_back(pick);
  }
  return word;  // applying word left to right to the minuscule weight gives lam
}

int u_stat(const Weight& lam, int i) {
  int k = static_cast<int>(lam.size());
  if (i < 1 || i > k) throw std::domain_error("u_stat: index out of range");
  int c = 0;
  for (int j = 1; j <= i; ++j)
    if (lam[j - 1] > lam[i - 1]) ++c;
  for (int j = i; j <= k; ++j)
    if (lam[j - 1] >= lam[i - 1]) ++c;
  return c;
}

int sgn_stat(const Weight& lam, int i) {
  if (i < 1 || i > static_cast<int>(lam.size())) return 0;
  return lam[i - 1] > 0 ? 1 : 0;
}

namespace {

using WPair = std::pair<Weight, Weight>;

bool bruhat_leq_impl(const Weight& lam, const Weight& mu, std::map<WPair, bool>& memo) {
  if (lam == mu) return true;
  auto it = memo.find({lam, mu});
  if (it != memo.end()) return it->second;
  int k = static_cast<int>(lam.size());
  bool res;
  int pick = -1;
  for (int i = 0; i < k; ++i) {
    if (affine_pairing(i, mu) < 0) {
      pick = i;
      break;
    }
  }
  if (pick < 0) {
    res = false;  // mu minuscule and lam != mu
  } else {
    Weight lmin = affine_pairing(pick, lam) >= 0 ? lam : affine_s(pick, lam);
    res = bruhat_leq_impl(lmin, affine_s(pick, mu), memo);
  }
  memo[{lam, mu}] = res;
  return res;
}

}  // namespace

bool bruhat_leq(const Weight& lam, const Weight& mu) {
  if (lam.size() != mu.size()) throw std::domain_error("bruhat_leq: rank mismatch");
  if (std::accumulate(lam.begin(), lam.end(), 0) !=
      std::accumulate(mu.begin(), mu.end(), 0))
    return false;
  static std::map<WPair, bool> memo;
  return bruhat_leq_impl(lam, mu, memo);
}

bool bruhat_leq_bfs_oracle(const Weight& lam, const Weight& mu) {
  int k = static_cast<int>(lam.size());
  if (static_cast<int>(mu.size()) != k) throw std::domain_error("oracle: rank mismatch");
  if (k > 4) throw std::domain_error("oracle: rank guard exceeded");
  for (int v : lam)
    if (v < 0 || v > 4) throw std::domain_error("oracle: entry guard exceeded");
  for (int v : mu)
    if (v < 0 || v > 4) throw std::domain_error("oracle: entry guard exceeded");
  int sum = std::accumulate(lam.begin(), lam.end(), 0);
  if (sum != std::accumulate(mu.begin(), mu.end(), 0)) return false;

  // Raising reflections stay inside the nonnegative orthant on any chain
  // below mu, so restricting the search space loses nothing.
  std::set<Weight> seen{lam};
  std::queue<Weight> todo;
  todo.push(lam);
  while (!todo.empty()) {
    Weight v = todo.front();
    todo.pop();
    if (v == mu) return true;
    auto push = [&](const Weight& w) {
      bool ok = true;
      for (int x : w)
        if (x < 0 || x > sum) ok = false;
      if (ok && seen.insert(w).second) todo.push(w);
    };
    for (int i = 1; i <= k; ++i) {
      for (int j = 1; j <= k; ++j) {
        if (i == j) continue;
        if (i < j && affine_reflect_pairing(0, i, j, v) > 0)
          push(affine_reflect(0, i, j, v));
        for (int n = 1; n <= sum + 1; ++n)
          if (affine_reflect_pairing(n, i, j, v) > 0)
            push(affine_reflect(n, i, j, v));
      }
    }
  }
  return seen.count(mu) > 0;
}

Weight sort_orbit(const Weight& lam, bool dominant) {
  Weight r = lam;
  std::sort(r.begin(), r.end());
  if (dominant) std::reverse(r.begin(), r.end());
  return r;
}

AsymIndex::AsymIndex(std::vector<int> l, std::vector<int> m)
    : lambda(std::move(l)), mu(std::move(m)) {
  if (!lambda.empty() && lambda.back() == 0)
    throw std::domain_error("AsymIndex: lambda must be strict");
  for (int v : lambda)
    if (v < 0) throw std::domain_error("AsymIndex: negative entry");
  for (size_t i = 0; i < mu.size(); ++i) {
    if (mu[i] <= 0 || (i > 0 && mu[i - 1] < mu[i]))
      throw std::domain_error("AsymIndex: mu must be a partition");
  }
}

int AsymIndex::total() const {
  int s = 0;
  for (int v : lambda) s += v;
  for (int v : mu) s += v;
  return s;
}

std::string AsymIndex::str() const {
  std::ostringstream os;
  os << "<";
  for (size_t i = 0; i < lambda.size(); ++i) os << (i ? "," : "") << lambda[i];
  os << "|";
  for (size_t i = 0; i < mu.size(); ++i) os << (i ? "," : "") << mu[i];
  os << ">";
  return os.str();
}

bool as_order_leq(const AsymIndex& a, const AsymIndex& b) {
  if (a.lambda.size() > b.lambda.size()) return false;
  Weight A = a.lambda;
  A.resize(b.lambda.size(), 0);
  A.insert(A.end(), a.mu.begin(), a.mu.end());
  Weight B = b.lambda;
  B.insert(B.end(), b.mu.begin(), b.mu.end());
  size_t L = std::max(A.size(), B.size());
  A.resize(L, 0);
  B.resize(L, 0);
  return bruhat_leq(A, B);
}

}  // namespace daha
