// Integration gate: ten acceptance criteria, one pass/fail line each.
// Run all by default, or a single one with --only N. Exit 0 iff all pass.
#include <algorithm>
#include <chrono>
#include <cstring>
#include <functional>
#include <iostream>
#include <string>
#include <vector>

#include "daha/asymfunc.hpp"
#include "daha/daharep.hpp"
#include "daha/pbw.hpp"

namespace {

using namespace daha;

struct Outcome {
  bool pass = true;
  long checked = 0;
  std::string first_fail;
};

void note(Outcome& o, bool ok, const std::string& what) {
  o.checked++;
  if (!ok) {
    o.pass = false;
    if (o.first_fail.empty()) o.first_fail = what;
  }
}

void absorb(Outcome& o, const VerifyReport& r, const std::string& what) {
  o.checked += r.checked;
  if (!r.pass) {
    o.pass = false;
    if (o.first_fail.empty())
      o.first_fail =
          what + (r.violations.empty() ? "" : ": " + r.violations.front());
  }
}

std::string wstr(const Weight& w) {
  std::string s = "(";
  for (size_t i = 0; i < w.size(); ++i)
    s += (i ? "," : "") + std::to_string(w[i]);
  return s + ")";
}

std::vector<Weight> weight_box(int k, int hi) {
  std::vector<Weight> out;
  Weight cur(k, 0);
  while (true) {
    out.push_back(cur);
    int i = 0;
    while (i < k && cur[i] == hi) cur[i++] = 0;
    if (i == k) break;
    cur[i]++;
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<std::string> xy_words(int len) {
  std::vector<std::string> out;
  for (int mask = 0; mask < (1 << len); ++mask) {
    std::string s(len, 'X');
    for (int i = 0; i < len; ++i)
      if (mask >> i & 1) s[i] = 'Y';
    out.push_back(s);
  }
  return out;
}

// Compositions with positive parts and total <= cap.
std::vector<Weight> positive_comps(int cap) {
  std::vector<Weight> out;
  Weight cur;
  std::function<void(int)> rec = [&](int rem) {
    out.push_back(cur);
    for (int p = 1; p <= rem; ++p) {
      cur.push_back(p);
      rec(rem - p);
      cur.pop_back();
    }
  };
  rec(cap);
  return out;
}

// 1: all defining operator relations, the determinant relation, the
// single-pair exchange, and both rotation conjugations, as operator
// identities on every monomial of degree <= 4 at ranks 2, 3, 4.
Outcome crit1() {
  Outcome o;
  for (int k = 2; k <= 4; ++k) {
    std::string fail;
    bool ok = check_daha_relations(k, 4, &fail);
    note(o, ok, "rank " + std::to_string(k) + ": " + fail);
  }
  return o;
}

// 2: eigenvalue equations Y_i E_lam = q^{lam_i} t^{u(i)} E_lam on the
// declared weight boxes.
Outcome crit2() {
  Outcome o;
  for (int k = 1; k <= 4; ++k) {
    int dcap = k <= 3 ? 5 : 4;
    for (const auto& lam : weights_up_to_degree(k, dcap))
      note(o, check_E_eigen(lam), "eigen at " + wstr(lam));
  }
  return o;
}

// 3: triangularity of Y and the deformed Y with exact leading coefficients
// at ranks <= 3, |lam| <= 4; limit-Y triangularity on indices with head
// length <= 2 and total degree <= 4, i <= 3.
Outcome crit3() {
  Outcome o;
  for (int k = 1; k <= 3; ++k)
    for (const auto& lam : weights_up_to_degree(k, 4))
      for (int i = 1; i <= k; ++i) {
        note(o, check_Y_triangular(i, lam),
             "Y triangular, i=" + std::to_string(i) + " at " + wstr(lam));
        note(o, check_Ytilde_triangular(i, lam),
             "deformed Y triangular, i=" + std::to_string(i) + " at " +
                 wstr(lam));
      }
  for (int d = 0; d <= 4; ++d)
    for (const auto& idx : asym_indices_of_degree(d, 2))
      for (int i = 1; i <= 3; ++i)
        note(o, check_cY_triangularity(idx, i),
             "limit Y triangular, i=" + std::to_string(i) + " at " +
                 idx.str());
  return o;
}

// 4: the exact identity relating Y and its deformation at ranks <= 4,
// |lam| <= 4, all i; residual t-orders of the finite-rank operators on
// basis elements of degree <= 3 grow at least like n - C and strictly
// increase over a 4-wide rank window.
Outcome crit4() {
  Outcome o;
  for (int k = 2; k <= 4; ++k)
    for (const auto& lam : weights_up_to_degree(k, 4))
      for (int i = 1; i <= k; ++i)
        note(o, check_Y_minus_Ytilde(i, k, lam),
             "Y vs deformed Y, i=" + std::to_string(i) + " at " + wstr(lam));
  for (int d = 0; d <= 3; ++d)
    for (const auto& idx : asym_indices_of_degree(d, 3)) {
      AsymFn f = AsymFn::basis(idx);
      for (int i = 1; i <= 3; ++i) {
        // the limit operator can raise the head rank up to i, so the window
        // must start above both ranks
        int lo = std::max(f.rank(), i) + 2;
        ConvergenceReport cr = verify_limit_convergence(i, f, lo, lo + 3);
        note(o, cr.pass, "finite-rank convergence, i=" + std::to_string(i) +
                             " at " + idx.str());
      }
    }
  return o;
}

// 5: setting the last variable to zero sends E_{lam 0^n} to E_{lam 0^{n-1}}
// for weights with no internal zeros, |lam| <= 4, n <= 3; the stable-limit
// functions satisfy the limit eigenvalue equations.
Outcome crit5() {
  Outcome o;
  for (const auto& lam : positive_comps(4))
    for (int n = 1; n <= 3; ++n)
      note(o, check_E_limit_step(lam, n),
           "stability at " + wstr(lam) + ", n=" + std::to_string(n));
  for (int len = 1; len <= 3; ++len)
    for (const auto& lam : weights_up_to_degree(len, 4)) {
      if (lam.empty() || lam.back() == 0) continue;
      AsymFn e = limit_macdonald(lam);
      AsymIndex idx(lam, {});
      for (int i = 1; i <= len + 1; ++i)
        note(o, limit_Y(i, e) == e.scale(limit_y_eigenvalue(idx, i)),
             "limit eigen, i=" + std::to_string(i) + " at " + wstr(lam));
    }
  return o;
}

// 6: joint eigenfunctions indexed by head|tail with |head|+|tail| <= 4 and
// head length <= 2: unit coefficient at the index, eigenvalue equations,
// and support inside the downward order ideal.
Outcome crit6() {
  Outcome o;
  for (int d = 0; d <= 4; ++d)
    for (const auto& idx : asym_indices_of_degree(d, 2)) {
      AsymFn f = tilde_E(idx);
      note(o, f.coeff(idx) == RatQT(1),
           "unit leading coefficient at " + idx.str());
      bool down = true;
      for (const auto& [j, c] : f.coords())
        if (!as_order_leq(j, idx)) down = false;
      note(o, down, "support ideal at " + idx.str());
      for (int i = 1; i <= 3; ++i)
        note(o, limit_Y(i, f) == f.scale(limit_y_eigenvalue(idx, i)),
             "eigen, i=" + std::to_string(i) + " at " + idx.str());
    }
  return o;
}

// 7: straightening: defining relations and k-dependent commutations at
// ranks 2..5, the twelve insertion identities with their involuted forms
// for b <= 4 at rank 5, and agreement with the h = 0 normal form on 200
// seeded random words of degree <= 4.
Outcome crit7() {
  Outcome o;
  for (int k = 2; k <= 5; ++k)
    absorb(o, verify_relations(k), "relations, rank " + std::to_string(k));
  absorb(o, verify_tab_identities(5, 4), "insertion identities");
  for (int k = 2; k <= 5; ++k)
    absorb(o, verify_ev0_random(k, 50, 1000 + k, 4, 8),
           "h = 0 normal form, rank " + std::to_string(k));
  return o;
}

// 8: reflection-length lower bound for every straightened term of every
// standard word with at most two slots and degree <= 4 at rank 5, plus the
// distinct-parts, cycle-family, and length-inequality statements on their
// declared boxes.
Outcome crit8() {
  Outcome o;
  for (int d = 0; d <= 4; ++d)
    for (const auto& u : xy_words(d))
      absorb(o, verify_upsilon_bound(StdWord({u}, Perm::identity(1)), 5),
             "order bound for [" + u + "]");
  for (int d1 = 0; d1 <= 4; ++d1)
    for (int d2 = 0; d2 + d1 <= 4; ++d2)
      for (const auto& u1 : xy_words(d1))
        for (const auto& u2 : xy_words(d2))
          absorb(o,
                 verify_upsilon_bound(StdWord({u1, u2}, Perm::identity(2)), 5),
                 "order bound for [" + u1 + "|" + u2 + "]");
  absorb(o, verify_parts_and_yz(PartsYzParams{}), "order statements");
  return o;
}

// 9: order bounds (i)-(iv) and exact leading coefficients at the
// distinguished indices for all single-slot words with <= 2 Y letters and
// <= 3 X letters at rank m+3, and for two-slot words with nontrivial
// permutation.
Outcome crit9() {
  Outcome o;
  for (int m = 0; m <= 2; ++m)
    for (int x = 0; x <= 3; ++x) {
      int len = m + x;
      for (int mask = 0; mask < (1 << len); ++mask) {
        if (__builtin_popcount(static_cast<unsigned>(mask)) != m) continue;
        std::string u(len, 'X');
        for (int i = 0; i < len; ++i)
          if (mask >> i & 1) u[i] = 'Y';
        absorb(o, verify_main_theorem(StdWord({u}, Perm::identity(1)), m + 3),
               "single slot [" + u + "]");
      }
    }
  Perm s1 = Perm::transposition(2, 1, 2);
  absorb(o, verify_main_theorem(StdWord({"YX", "Y"}, s1), 4),
         "two slots [YX|Y]");
  absorb(o, verify_main_theorem(StdWord({"XY", "YX"}, s1), 4),
         "two slots [XY|YX]");
  absorb(o, verify_main_theorem(StdWord({"X", "YX"}, s1), 4),
         "two slots [X|YX]");
  return o;
}

// 10: the weight order agrees with the BFS oracle on all pairs at ranks
// <= 3 with entries <= 3; reflection-pairing signs, growth of the last
// position, nonnegative-orthant closure, and deletion of equal coordinates
// on the same box.
Outcome crit10() {
  Outcome o;
  for (int k = 1; k <= 3; ++k)
    for (const auto& lam : weight_box(k, 3))
      for (const auto& mu : weight_box(k, 3))
        note(o, bruhat_leq(lam, mu) == bruhat_leq_bfs_oracle(lam, mu),
             "order vs oracle at " + wstr(lam) + " , " + wstr(mu));
  for (int k = 2; k <= 3; ++k)
    for (const auto& lam : weight_box(k, 3))
      for (int i = 1; i <= k; ++i)
        for (int j = 1; j <= k; ++j) {
          if (i == j) continue;
          for (int n = 0; n <= 2; ++n) {
            if (!((n == 0 && i < j) || n >= 1)) continue;
            Weight s = affine_reflect(n, i, j, lam);
            int pairing = affine_reflect_pairing(n, i, j, lam);
            bool ok = pairing > 0   ? bruhat_leq(lam, s) && s != lam
                      : pairing < 0 ? !bruhat_leq(lam, s) && bruhat_leq(s, lam)
                                    : s == lam;
            note(o, ok, "pairing sign at " + wstr(lam) + " root (" +
                            std::to_string(n) + "," + std::to_string(i) + "," +
                            std::to_string(j) + ")");
          }
        }
  for (int k = 2; k <= 3; ++k)
    for (const auto& lam : weight_box(k, 3)) {
      Weight mu = sort_orbit(lam, true);
      std::sort(mu.begin(), mu.end());
      do {
        if (bruhat_leq(lam, mu))
          note(o, lam[k - 1] <= mu[k - 1],
               "last position at " + wstr(lam) + " , " + wstr(mu));
      } while (std::next_permutation(mu.begin(), mu.end()));
    }
  {
    Weight lam(3), mu(3);
    for (lam[0] = -1; lam[0] <= 2; ++lam[0])
      for (lam[1] = -1; lam[1] <= 2; ++lam[1])
        for (lam[2] = -1; lam[2] <= 2; ++lam[2])
          for (mu[0] = -1; mu[0] <= 2; ++mu[0])
            for (mu[1] = -1; mu[1] <= 2; ++mu[1])
              for (mu[2] = -1; mu[2] <= 2; ++mu[2]) {
                bool mu_nonneg = mu[0] >= 0 && mu[1] >= 0 && mu[2] >= 0;
                if (!mu_nonneg || !bruhat_leq(lam, mu)) continue;
                note(o,
                     lam[0] >= 0 && lam[1] >= 0 && lam[2] >= 0,
                     "orthant at " + wstr(lam) + " , " + wstr(mu));
              }
  }
  for (const auto& lam : weight_box(3, 2))
    for (const auto& mu0 : weight_box(3, 2))
      for (int p = 0; p <= 2; ++p) {
        Weight mu = mu0;
        mu[p] = lam[p];
        if (!bruhat_leq(lam, mu)) continue;
        Weight lam2, mu2;
        for (int i = 0; i < 3; ++i) {
          if (i == p) continue;
          lam2.push_back(lam[i]);
          mu2.push_back(mu[i]);
        }
        note(o, bruhat_leq(lam2, mu2),
             "deletion at " + wstr(lam) + " , " + wstr(mu) + " position " +
                 std::to_string(p + 1));
      }
  return o;
}

struct Criterion {
  const char* label;
  Outcome (*run)();
};

const Criterion kCriteria[] = {
    {"operator relation suite on monomials of degree <= 4, ranks 2..4",
     crit1},
    {"Y eigenvalue equations on the declared weight boxes", crit2},
    {"triangularity with exact leading coefficients", crit3},
    {"deformed-operator identity and finite-rank residual orders", crit4},
    {"trailing-variable stability and limit eigenfunctions", crit5},
    {"joint eigenfunctions: unit coefficient, eigenvalues, support ideal",
     crit6},
    {"straightening relations, insertion identities, h = 0 normal forms",
     crit7},
    {"order lower bounds for straightened standard words", crit8},
    {"distinguished-index bounds and leading coefficients", crit9},
    {"weight order vs oracle and its structural properties", crit10},
};

}  // namespace

int main(int argc, char** argv) {
  int only = 0;
  for (int a = 1; a < argc; ++a) {
    if (std::strcmp(argv[a], "--only") == 0 && a + 1 < argc) {
      only = std::atoi(argv[++a]);
    } else {
      std::cerr << "usage: acceptance [--only N]\n";
      return 2;
    }
  }
  if (only < 0 || only > 10) {
    std::cerr << "--only expects 1..10\n";
    return 2;
  }
  bool all_pass = true;
  for (int i = 1; i <= 10; ++i) {
    if (only && i != only) continue;
    auto t0 = std::chrono::steady_clock::now();
    Outcome o = kCriteria[i - 1].run();
    auto t1 = std::chrono::steady_clock::now();
    double secs =
        std::chrono::duration_cast<std::chrono::milliseconds>(t1 - t0)
            .count() /
        1000.0;
    std::cout << "criterion " << i << ": " << (o.pass ? "PASS" : "FAIL")
              << "  " << kCriteria[i - 1].label << "  (" << o.checked
              << " checks, " << secs << "s)";
    if (!o.pass) std::cout << "  first failure: " << o.first_fail;
    std::cout << "\n" << std::flush;
    if (!o.pass) all_pass = false;
  }
  return all_pass ? 0 : 1;
}
