#include "daha/pbw.hpp"

#include <algorithm>
#include <functional>
#include <random>
#include <sstream>
#include <stdexcept>

namespace daha {

namespace {

// Sum of c * T_w and sum of c * Y_gamma T_w; no zero coefficients stored.
using TMap = std::map<Perm, PolyQH>;
using YTKey = std::pair<Weight, Perm>;
using YTMap = std::map<YTKey, PolyQH>;

void add_t(TMap& m, const Perm& w, const PolyQH& c) {
  if (c.is_zero()) return;
  auto it = m.find(w);
  if (it == m.end()) {
    m.emplace(w, c);
  } else {
    it->second += c;
    if (it->second.is_zero()) m.erase(it);
  }
}

void add_yt(YTMap& m, const YTKey& key, const PolyQH& c) {
  if (c.is_zero()) return;
  auto it = m.find(key);
  if (it == m.end()) {
    m.emplace(key, c);
  } else {
    it->second += c;
    if (it->second.is_zero()) m.erase(it);
  }
}

// T_w * T_i^{sign}; the quadratic relation contributes h T_w on descent
// (sign > 0) and -h T_w on ascent (sign < 0).
TMap t_mul_right_s(const TMap& m, int i, int sign) {
  TMap out;
  for (const auto& [w, c] : m) {
    Perm ws = w.mul_right_s(i);
    bool up = ws.length() > w.length();
    add_t(out, ws, c);
    if (sign > 0 && !up) add_t(out, w, c * PolyQH::h());
    if (sign < 0 && up) add_t(out, w, -(c * PolyQH::h()));
  }
  return out;
}

int right_descent(const Perm& w) {
  for (int i = 1; i < w.rank(); ++i)
    if (w(i) > w(i + 1)) return i;
  return 0;
}

// T_w X_c = sum coeff * X_d T_{w'}; keys are (d, w').
using XTMap = std::map<std::pair<int, Perm>, PolyQH>;

void add_xt(XTMap& m, int d, const Perm& w, const PolyQH& c) {
  if (c.is_zero()) return;
  auto key = std::make_pair(d, w);
  auto it = m.find(key);
  if (it == m.end()) {
    m.emplace(key, c);
  } else {
    it->second += c;
    if (it->second.is_zero()) m.erase(it);
  }
}

XTMap xt_append_t(const XTMap& m, int i) {
  XTMap out;
  for (const auto& [key, c] : m) {
    TMap tm;
    tm.emplace(key.second, c);
    for (const auto& [w2, c2] : t_mul_right_s(tm, i, +1)) add_xt(out, key.first, w2, c2);
  }
  return out;
}

void xt_merge(XTMap& into, const XTMap& from, const PolyQH& scale) {
  for (const auto& [key, c] : from) add_xt(into, key.first, key.second, c * scale);
}

XTMap hecke_x_commute(const Perm& w, int c) {
  if (w.is_identity()) {
    XTMap out;
    add_xt(out, c, w, PolyQH(1));
    return out;
  }
  int i = right_descent(w);
  Perm w1 = w.mul_right_s(i);
  XTMap out;
  if (c == i) {
    // T_i X_i = X_{i+1} T_i + h X_i
    xt_merge(out, xt_append_t(hecke_x_commute(w1, i + 1), i), PolyQH(1));
    xt_merge(out, hecke_x_commute(w1, i), PolyQH::h());
  } else if (c == i + 1) {
    // T_i X_{i+1} = X_i T_i - h X_i
    xt_merge(out, xt_append_t(hecke_x_commute(w1, i), i), PolyQH(1));
    xt_merge(out, hecke_x_commute(w1, i), -PolyQH::h());
  } else {
    xt_merge(out, xt_append_t(hecke_x_commute(w1, c), i), PolyQH(1));
  }
  return out;
}

XTMap hecke_y_commute(const Perm& w, int c) {
  if (w.is_identity()) {
    XTMap out;
    add_xt(out, c, w, PolyQH(1));
    return out;
  }
  int i = right_descent(w);
  Perm w1 = w.mul_right_s(i);
  XTMap out;
  if (c == i) {
    // T_i Y_i = Y_{i+1} T_i - h Y_{i+1}
    XTMap a = hecke_y_commute(w1, i + 1);
    xt_merge(out, xt_append_t(a, i), PolyQH(1));
    xt_merge(out, a, -PolyQH::h());
  } else if (c == i + 1) {
    // T_i Y_{i+1} = Y_i T_i + h Y_{i+1}
    xt_merge(out, xt_append_t(hecke_y_commute(w1, i), i), PolyQH(1));
    xt_merge(out, hecke_y_commute(w1, i + 1), PolyQH::h());
  } else {
    xt_merge(out, xt_append_t(hecke_y_commute(w1, c), i), PolyQH(1));
  }
  return out;
}

// T_i^{sign} Y_i^p Y_{i+1}^q as a sum of Y_i^{p'} Y_{i+1}^{q'} (T_i^{sign}).
struct PQTerm {
  int p, q;
  bool has_t;
  PolyQH c;
};

std::vector<PQTerm> push_t_through_block(int p, int q, int sign) {
  if (p == 0 && q == 0) return {{0, 0, true, PolyQH(1)}};
  std::vector<PQTerm> out;
  if (p >= 1) {
    for (const auto& t : push_t_through_block(p - 1, q, sign))
      out.push_back({t.p, t.q + 1, t.has_t, t.c});
    // T_i Y_i = Y_{i+1} T_i - h Y_{i+1};  T_i^{-1} Y_i = Y_{i+1} T_i^{-1} - h Y_i
    if (sign > 0)
      out.push_back({p - 1, q + 1, false, -PolyQH::h()});
    else
      out.push_back({p, q, false, -PolyQH::h()});
  } else {
    for (const auto& t : push_t_through_block(0, q - 1, sign))
      out.push_back({t.p + 1, t.q, t.has_t, t.c});
    // T_i Y_{i+1} = Y_i T_i + h Y_{i+1};  T_i^{-1} Y_{i+1} = Y_i T_i^{-1} + h Y_i
    if (sign > 0)
      out.push_back({0, q, false, PolyQH::h()});
    else
      out.push_back({1, q - 1, false, PolyQH::h()});
  }
  return out;
}

// T_i^{sign} * (Y_gamma T_w): the T letter filters through the Y block and
// then multiplies T_w from the left.
YTMap yt_mul_left_s(int i, int sign, const YTMap& m) {
  YTMap out;
  for (const auto& [key, c] : m) {
    const Weight& gamma = key.first;
    const Perm& w = key.second;
    for (const auto& t : push_t_through_block(gamma[i - 1], gamma[i], sign)) {
      Weight g2 = gamma;
      g2[i - 1] = t.p;
      g2[i] = t.q;
      PolyQH cc = c * t.c;
      if (!t.has_t) {
        add_yt(out, {g2, w}, cc);
        continue;
      }
      Perm sw = w.mul_left_s(i);
      bool up = sw.length() > w.length();
      add_yt(out, {g2, sw}, cc);
      if (sign > 0 && !up) add_yt(out, {g2, w}, cc * PolyQH::h());
      if (sign < 0 && up) add_yt(out, {g2, w}, -(cc * PolyQH::h()));
    }
  }
  return out;
}

std::vector<int> palindromic_letters(int a, int b) {
  std::vector<int> word;
  for (int i = a; i <= b - 1; ++i) word.push_back(i);
  for (int i = b - 2; i >= a; --i) word.push_back(i);
  return word;
}

// T_{(a,b)}^{sign} * m; the palindromic word is applied rightmost letter
// first. The word is its own reversal, so both signs use the same order.
YTMap yt_mul_left_chunk(int a, int b, int sign, YTMap m) {
  auto word = palindromic_letters(a, b);
  for (auto it = word.rbegin(); it != word.rend(); ++it) m = yt_mul_left_s(*it, sign, m);
  return m;
}

YTMap yt_add_y(int f, const YTMap& m) {
  YTMap out;
  for (const auto& [key, c] : m) {
    Weight g2 = key.first;
    g2[f - 1] += 1;
    add_yt(out, {g2, key.second}, c);
  }
  return out;
}

YTMap yt_scale(const YTMap& m, const PolyQH& s) {
  YTMap out;
  for (const auto& [key, c] : m) add_yt(out, key, c * s);
  return out;
}

int nnz(const Weight& v) {
  int n = 0;
  for (int e : v)
    if (e != 0) n++;
  return n;
}

Perm embed_perm(const Perm& w, int k) {
  std::vector<int> img(k);
  for (int i = 1; i <= k; ++i) img[i - 1] = i <= w.rank() ? w(i) : i;
  return Perm(img);
}

Perm cycle_from_list(int k, const std::vector<int>& cyc) {
  std::vector<int> img(k);
  for (int i = 1; i <= k; ++i) img[i - 1] = i;
  for (size_t t = 0; t < cyc.size(); ++t) img[cyc[t] - 1] = cyc[(t + 1) % cyc.size()];
  return Perm(img);
}

std::string kind_prefix(GenAtom::Kind kind) {
  switch (kind) {
    case GenAtom::Kind::X:
      return "X";
    case GenAtom::Kind::Y:
      return "Y";
    case GenAtom::Kind::T:
      return "T";
    default:
      return "T";
  }
}

}  // namespace

std::string GenAtom::str() const {
  std::string s = kind_prefix(kind) + std::to_string(index);
  if (kind == Kind::Tinv) s += "^-1";
  return s;
}

GenWord::GenWord(int k) : k_(k) {
  if (k < 1) throw std::invalid_argument("GenWord: rank must be positive");
}

GenWord& GenWord::append(const GenAtom& a) {
  bool deg = a.kind == GenAtom::Kind::X || a.kind == GenAtom::Kind::Y;
  int hi = deg ? k_ : k_ - 1;
  if (a.index < 1 || a.index > hi) throw std::invalid_argument("GenWord: index out of range");
  letters_.push_back(a);
  return *this;
}

GenWord& GenWord::append(const GenWord& other) {
  if (other.k_ > k_) throw std::invalid_argument("GenWord: appended word has larger rank");
  for (const auto& a : other.letters_) append(a);
  return *this;
}

GenWord& GenWord::x(int i) { return append({GenAtom::Kind::X, i}); }
GenWord& GenWord::y(int i) { return append({GenAtom::Kind::Y, i}); }
GenWord& GenWord::t(int i) { return append({GenAtom::Kind::T, i}); }
GenWord& GenWord::tinv(int i) { return append({GenAtom::Kind::Tinv, i}); }

GenWord GenWord::parse(int k, const std::string& text) {
  GenWord wd(k);
  std::istringstream is(text);
  std::string tok;
  while (is >> tok) {
    bool inv = false;
    if (tok.size() > 3 && tok.substr(tok.size() - 3) == "^-1") {
      inv = true;
      tok = tok.substr(0, tok.size() - 3);
    }
    if (tok.size() < 2) throw std::invalid_argument("GenWord: bad atom '" + tok + "'");
    char kc = tok[0];
    int idx;
    try {
      size_t used = 0;
      idx = std::stoi(tok.substr(1), &used);
      if (used != tok.size() - 1) throw std::invalid_argument("");
    } catch (...) {
      throw std::invalid_argument("GenWord: bad atom '" + tok + "'");
    }
    if (inv && kc != 'T') throw std::invalid_argument("GenWord: only T atoms can be inverted");
    switch (kc) {
      case 'X':
        wd.x(idx);
        break;
      case 'Y':
        wd.y(idx);
        break;
      case 'T':
        inv ? wd.tinv(idx) : wd.t(idx);
        break;
      default:
        throw std::invalid_argument("GenWord: bad atom '" + tok + "'");
    }
  }
  return wd;
}

int GenWord::deg_x() const {
  int d = 0;
  for (const auto& a : letters_) d += a.kind == GenAtom::Kind::X;
  return d;
}

int GenWord::deg_y() const {
  int d = 0;
  for (const auto& a : letters_) d += a.kind == GenAtom::Kind::Y;
  return d;
}

std::string GenWord::str() const {
  std::string s;
  for (const auto& a : letters_) {
    if (!s.empty()) s += " ";
    s += a.str();
  }
  return s;
}

GenWord involute(const GenWord& wd) {
  GenWord out(wd.rank());
  for (const auto& a : wd.letters()) {
    switch (a.kind) {
      case GenAtom::Kind::X:
        out.y(a.index);
        break;
      case GenAtom::Kind::Y:
        out.x(a.index);
        break;
      case GenAtom::Kind::T:
        out.tinv(a.index);
        break;
      case GenAtom::Kind::Tinv:
        out.t(a.index);
        break;
    }
  }
  return out;
}

GenWord tab_word(int k, int a, int b, bool inverse) {
  if (!(1 <= a && a < b && b <= k)) throw std::invalid_argument("tab_word: need 1 <= a < b <= k");
  GenWord wd(k);
  for (int i : palindromic_letters(a, b)) inverse ? wd.tinv(i) : wd.t(i);
  return wd;
}

GenWord tab_word_inserted(int k, int a, int b, int i, bool descending, const GenAtom& letter,
                          bool inverse) {
  if (!(1 <= a && a < b && b <= k))
    throw std::invalid_argument("tab_word_inserted: need 1 <= a < b <= k");
  int pos;
  if (descending) {
    if (!(a <= i && i <= b - 1)) throw std::invalid_argument("tab_word_inserted: bad position");
    pos = i == b - 1 ? b - 1 - a : (b - 1 - a) + (b - 1 - i);
  } else {
    if (!(a - 1 <= i && i <= b - 1)) throw std::invalid_argument("tab_word_inserted: bad position");
    pos = i - a;  // -1 puts the letter in front
  }
  GenWord wd(k);
  auto word = palindromic_letters(a, b);
  if (pos == -1) wd.append(letter);
  for (int t = 0; t < static_cast<int>(word.size()); ++t) {
    inverse ? wd.tinv(word[t]) : wd.t(word[t]);
    if (t == pos) wd.append(letter);
  }
  return wd;
}

bool PBWIndex::operator<(const PBWIndex& o) const {
  if (mu != o.mu) return mu < o.mu;
  if (nu != o.nu) return nu < o.nu;
  return w < o.w;
}

bool PBWIndex::operator==(const PBWIndex& o) const {
  return mu == o.mu && nu == o.nu && w == o.w;
}

std::string PBWIndex::str() const {
  std::string s;
  auto emit = [&s](const char* letter, const Weight& v) {
    for (size_t i = 0; i < v.size(); ++i) {
      if (v[i] == 0) continue;
      if (!s.empty()) s += "*";
      s += letter + std::to_string(i + 1);
      if (v[i] > 1) s += "^" + std::to_string(v[i]);
    }
  };
  emit("X", mu);
  emit("Y", nu);
  if (!w.is_identity()) {
    if (!s.empty()) s += "*";
    s += "T" + w.str();
  }
  return s.empty() ? "1" : s;
}

PBWElem::PBWElem(int k) : k_(k) {
  if (k < 1) throw std::invalid_argument("PBWElem: rank must be positive");
}

PBWElem PBWElem::one(int k) {
  PBWElem e(k);
  e.add({Weight(k, 0), Weight(k, 0), Perm::identity(k)}, PolyQH(1));
  return e;
}

PBWElem PBWElem::basis(const PBWIndex& idx, const PolyQH& c) {
  PBWElem e(static_cast<int>(idx.mu.size()));
  e.add(idx, c);
  return e;
}

PolyQH PBWElem::coeff(const PBWIndex& idx) const {
  auto it = terms_.find(idx);
  return it == terms_.end() ? PolyQH() : it->second;
}

void PBWElem::add(const PBWIndex& idx, const PolyQH& c) {
  if (static_cast<int>(idx.mu.size()) != k_ || static_cast<int>(idx.nu.size()) != k_ ||
      idx.w.rank() != k_)
    throw std::invalid_argument("PBWElem: index rank mismatch");
  for (int e : idx.mu)
    if (e < 0) throw std::invalid_argument("PBWElem: negative X exponent");
  for (int e : idx.nu)
    if (e < 0) throw std::invalid_argument("PBWElem: negative Y exponent");
  if (c.is_zero()) return;
  auto it = terms_.find(idx);
  if (it == terms_.end()) {
    terms_.emplace(idx, c);
  } else {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

PBWElem PBWElem::times_t(int i, int sign) const {
  if (i < 1 || i > k_ - 1) throw std::invalid_argument("times_t: index out of range");
  PBWElem out(k_);
  for (const auto& [idx, c] : terms_) {
    TMap tm;
    tm.emplace(idx.w, c);
    for (const auto& [w2, c2] : t_mul_right_s(tm, i, sign)) out.add({idx.mu, idx.nu, w2}, c2);
  }
  return out;
}

PBWElem PBWElem::times_y(int c) const {
  if (c < 1 || c > k_) throw std::invalid_argument("times_y: index out of range");
  PBWElem out(k_);
  for (const auto& [idx, co] : terms_) {
    for (const auto& [key, c1] : hecke_y_commute(idx.w, c)) {
      Weight nu = idx.nu;
      nu[key.first - 1] += 1;
      out.add({idx.mu, nu, key.second}, co * c1);
    }
  }
  return out;
}

PBWElem PBWElem::times_x(int c) const {
  if (c < 1 || c > k_) throw std::invalid_argument("times_x: index out of range");
  PolyQH h = PolyQH::h();
  PolyQH q = PolyQH::q();
  PBWElem out(k_);
  struct St {
    Weight prefix;
    int x;
    YTMap yt;
  };
  for (const auto& [idx, co] : terms_) {
    for (const auto& [key, c1] : hecke_x_commute(idx.w, c)) {
      std::vector<St> stack;
      YTMap start;
      start.emplace(YTKey{Weight(k_, 0), key.second}, co * c1);
      stack.push_back({idx.nu, key.first, std::move(start)});
      while (!stack.empty()) {
        St st = std::move(stack.back());
        stack.pop_back();
        int b = 0;
        for (int v = k_; v >= 1; --v)
          if (st.prefix[v - 1] > 0) {
            b = v;
            break;
          }
        if (b == 0) {
          for (const auto& [ytk, cc] : st.yt) {
            Weight mu = idx.mu;
            mu[st.x - 1] += 1;
            out.add({mu, ytk.first, ytk.second}, cc);
          }
          continue;
        }
        Weight pf = st.prefix;
        pf[b - 1] -= 1;
        if (b > st.x) {
          // Y_b X_a = X_a Y_b - h X_a Y_a T_{(a,b)} with a = x < b
          stack.push_back({pf, st.x, yt_add_y(b, st.yt)});
          stack.push_back({pf, st.x, yt_scale(yt_add_y(st.x, yt_mul_left_chunk(st.x, b, +1, st.yt)), -h)});
        } else if (b < st.x) {
          // Y_a X_b = X_b Y_a - h Y_a X_a T_{(a,b)}^{-1} with a = b(peel) < x
          stack.push_back({pf, st.x, yt_add_y(b, st.yt)});
          stack.push_back({st.prefix, b, yt_scale(yt_mul_left_chunk(b, st.x, -1, st.yt), -h)});
        } else {
          // Y_a X_a expands with a q coefficient and transposition tails on
          // both sides; lower-slot copies X_i Y_i keep travelling as X_i.
          int a = st.x;
          stack.push_back({pf, a, yt_scale(yt_add_y(a, st.yt), q)});
          for (int j = a + 1; j <= k_; ++j) {
            YTMap mj = yt_mul_left_chunk(a, j, +1, st.yt);
            stack.push_back({pf, a, yt_scale(yt_add_y(a, mj), q * h)});
            for (int i2 = 1; i2 < a; ++i2)
              stack.push_back(
                  {pf, i2, yt_scale(yt_add_y(i2, yt_mul_left_chunk(i2, a, +1, mj)), q * h * h)});
          }
          for (int i2 = 1; i2 < a; ++i2)
            stack.push_back(
                {pf, i2, yt_scale(yt_add_y(i2, yt_mul_left_chunk(i2, a, +1, st.yt)), q * h)});
        }
      }
    }
  }
  return out;
}

PBWElem PBWElem::times_word(const GenWord& wd) const {
  if (wd.rank() > k_) throw std::invalid_argument("times_word: rank mismatch");
  PBWElem acc = *this;
  for (const auto& a : wd.letters()) {
    switch (a.kind) {
      case GenAtom::Kind::X:
        acc = acc.times_x(a.index);
        break;
      case GenAtom::Kind::Y:
        acc = acc.times_y(a.index);
        break;
      case GenAtom::Kind::T:
        acc = acc.times_t(a.index, +1);
        break;
      case GenAtom::Kind::Tinv:
        acc = acc.times_t(a.index, -1);
        break;
    }
  }
  return acc;
}

PBWElem PBWElem::times(const PBWElem& o) const {
  if (o.k_ != k_) throw std::invalid_argument("times: rank mismatch");
  PBWElem out(k_);
  for (const auto& [idx, c] : o.terms_) {
    GenWord wd(k_);
    for (int i = 1; i <= k_; ++i)
      for (int e = 0; e < idx.mu[i - 1]; ++e) wd.x(i);
    for (int i = 1; i <= k_; ++i)
      for (int e = 0; e < idx.nu[i - 1]; ++e) wd.y(i);
    for (int i : idx.w.reduced_word()) wd.t(i);
    out = out + times_word(wd).scale(c);
  }
  return out;
}

PBWElem operator+(const PBWElem& a, const PBWElem& b) {
  if (a.k_ != b.k_) throw std::invalid_argument("PBWElem: rank mismatch");
  PBWElem out = a;
  for (const auto& [idx, c] : b.terms_) out.add(idx, c);
  return out;
}

PBWElem operator-(const PBWElem& a, const PBWElem& b) { return a + (-b); }

PBWElem PBWElem::operator-() const {
  PBWElem out(k_);
  for (const auto& [idx, c] : terms_) out.add(idx, -c);
  return out;
}

PBWElem PBWElem::scale(const PolyQH& c) const {
  PBWElem out(k_);
  for (const auto& [idx, co] : terms_) out.add(idx, co * c);
  return out;
}

bool PBWElem::operator==(const PBWElem& o) const { return k_ == o.k_ && terms_ == o.terms_; }

std::string PBWElem::str() const {
  if (terms_.empty()) return "0";
  std::string s;
  for (const auto& [idx, c] : terms_) {
    if (!s.empty()) s += " + ";
    std::string body = idx.str();
    if (c == PolyQH(1) && body != "1")
      s += body;
    else if (body == "1")
      s += "(" + c.str() + ")";
    else
      s += "(" + c.str() + ")*" + body;
  }
  return s;
}

std::string PBWElem::json() const {
  std::ostringstream os;
  os << "{\"rank\":" << k_ << ",\"terms\":[";
  bool first = true;
  auto arr = [&os](const std::vector<int>& v) {
    os << "[";
    for (size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << v[i];
    os << "]";
  };
  for (const auto& [idx, c] : terms_) {
    if (!first) os << ",";
    first = false;
    os << "{\"mu\":";
    arr(idx.mu);
    os << ",\"nu\":";
    arr(idx.nu);
    os << ",\"w\":";
    arr(idx.w.one_line());
    os << ",\"coeff\":\"" << c.str() << "\"}";
  }
  os << "]}";
  return os.str();
}

PBWElem straighten(const GenWord& wd) { return PBWElem::one(wd.rank()).times_word(wd); }

PBWElem straighten(int k, const std::string& text) { return straighten(GenWord::parse(k, text)); }

StdWord::StdWord(std::vector<std::string> slots, Perm w) : slots_(std::move(slots)), w_(w) {
  if (slots_.empty()) throw std::invalid_argument("StdWord: need at least one slot");
  if (w_.rank() != static_cast<int>(slots_.size()))
    throw std::invalid_argument("StdWord: permutation rank must equal the slot count");
  for (const auto& s : slots_)
    for (char ch : s)
      if (ch != 'X' && ch != 'Y') throw std::invalid_argument("StdWord: slot letters are X or Y");
}

int StdWord::deg_x() const {
  int d = 0;
  for (const auto& s : slots_) d += static_cast<int>(std::count(s.begin(), s.end(), 'X'));
  return d;
}

int StdWord::deg_y() const {
  int d = 0;
  for (const auto& s : slots_) d += static_cast<int>(std::count(s.begin(), s.end(), 'Y'));
  return d;
}

GenWord StdWord::concat(int k) const {
  if (k < r()) throw std::invalid_argument("StdWord: rank must be at least the slot count");
  GenWord wd(k);
  for (int j = 1; j <= r(); ++j)
    for (char ch : slots_[j - 1]) ch == 'X' ? wd.x(j) : wd.y(j);
  for (int i : w_.reduced_word()) wd.t(i);
  return wd;
}

std::vector<std::vector<int>> StdWord::gap_data() const {
  std::vector<std::vector<int>> g;
  for (const auto& s : slots_) g.push_back(gap_sequence(s));
  return g;
}

std::vector<int> StdWord::m_data() const {
  std::vector<int> m;
  for (const auto& s : slots_) m.push_back(static_cast<int>(std::count(s.begin(), s.end(), 'Y')));
  return m;
}

std::vector<int> StdWord::z_data() const {
  std::vector<int> z;
  for (const auto& g : gap_data()) z.push_back(z_stat(g));
  return z;
}

std::string StdWord::str() const {
  std::string s = "[";
  for (size_t j = 0; j < slots_.size(); ++j) {
    if (j) s += "|";
    s += slots_[j].empty() ? "e" : slots_[j];
  }
  return s + "] w=" + w_.str();
}

PBWElem phi_k(const StdWord& sw, int k) { return straighten(sw.concat(k)); }

std::optional<int> ord_coeff(const PBWElem& e, const PBWIndex& idx) {
  return e.coeff(idx).h_order();
}

std::vector<int> gap_sequence(const std::string& xy_word) {
  std::vector<int> g;
  int run = 0;
  for (auto it = xy_word.rbegin(); it != xy_word.rend(); ++it) {
    if (*it == 'X') {
      run++;
    } else if (*it == 'Y') {
      g.push_back(run);
      run = 0;
    } else {
      throw std::invalid_argument("gap_sequence: letters are X or Y");
    }
  }
  g.push_back(run);
  return g;
}

std::string word_from_gaps(const std::vector<int>& g) {
  if (g.empty()) throw std::invalid_argument("word_from_gaps: empty sequence");
  std::string s;
  for (int i = static_cast<int>(g.size()) - 1; i >= 0; --i) {
    s.append(g[i], 'X');
    if (i > 0) s.push_back('Y');
  }
  return s;
}

int z_stat(const std::vector<int>& a) {
  if (a.empty()) throw std::invalid_argument("z_stat: empty sequence");
  for (int i = 0; i < static_cast<int>(a.size()); ++i)
    if (a[i] != 0) return i;
  return static_cast<int>(a.size()) - 1;
}

bool dominance_leq(const std::vector<int>& a, const std::vector<int>& b) {
  size_t n = std::max(a.size(), b.size());
  long sa = 0, sb = 0;
  for (size_t i = 0; i < n; ++i) {
    sa += i < a.size() ? a[i] : 0;
    sb += i < b.size() ? b[i] : 0;
    if (sa > sb) return false;
  }
  return true;
}

Perm cycle_jnm(int k, int j, int N, int m) {
  if (!(1 <= j && j <= N && N <= k && m >= 0 && N - m >= j))
    throw std::invalid_argument("cycle_jnm: bad parameters");
  Perm c = Perm::identity(k);
  for (int i = N; i >= N - m + 1; --i) c = Perm::transposition(k, j, i).compose(c);
  return c;
}

namespace {

// Exponent contributions and cycle of one slot; N = k is allowed here, the
// strict bound is enforced by m_special only.
void slot_special(const std::vector<int>& a, int k, int j, int m, int N, Weight& mu, Weight& nu,
                  Perm& w) {
  if (static_cast<int>(a.size()) != m + 1)
    throw std::invalid_argument("m_special: composition length must be m+1");
  for (int e : a)
    if (e < 0) throw std::invalid_argument("m_special: negative entry");
  if (!(N <= k && N >= m + j && j >= 1))
    throw std::invalid_argument("m_special: need k >= N >= m+j");
  int z = z_stat(a);
  if (z == m) {
    mu[j - 1] += a[m];
    nu[j - 1] += m;
    return;
  }
  mu[j - 1] += a[m] + 1;
  for (int t = 1; t <= m - z - 1; ++t) mu[N - m + z + t - 1] += a[m - t];
  mu[N - 1] += a[z] - 1;
  nu[j - 1] += 1;
  for (int s = N - m + z + 1; s <= N - 1; ++s) nu[s - 1] += 1;
  nu[N - 1] += z;
  w = cycle_jnm(k, j, N, m - z).compose(w);
}

}  // namespace

PBWIndex m_special(const std::vector<int>& a, int k, int j, int m, int N) {
  if (!(k > N)) throw std::invalid_argument("m_special: need k > N");
  Weight mu(k, 0), nu(k, 0);
  Perm w = Perm::identity(k);
  slot_special(a, k, j, m, N, mu, nu, w);
  return {mu, nu, w};
}

PBWIndex m_special_multi(const std::vector<std::vector<int>>& slots, int k) {
  int r = static_cast<int>(slots.size());
  if (r < 1) throw std::invalid_argument("m_special_multi: need at least one slot");
  std::vector<int> m(r);
  int mtot = 0;
  for (int j = 1; j <= r; ++j) {
    if (slots[j - 1].empty()) throw std::invalid_argument("m_special_multi: empty slot");
    m[j - 1] = static_cast<int>(slots[j - 1].size()) - 1;
    mtot += m[j - 1];
  }
  if (k < mtot + r) throw std::invalid_argument("m_special_multi: need k >= |m| + r");
  Weight mu(k, 0), nu(k, 0);
  Perm w = Perm::identity(k);
  int N = k;
  for (int j = r; j >= 1; --j) {
    slot_special(slots[j - 1], k, j, m[j - 1], N, mu, nu, w);
    N -= m[j - 1];
  }
  return {mu, nu, w};
}

Ev0Form ev0_normal_form(const GenWord& wd) {
  int k = wd.rank();
  Perm w = Perm::identity(k);
  std::vector<std::string> slot(k + 1);
  for (const auto& a : wd.letters()) {
    switch (a.kind) {
      case GenAtom::Kind::T:
      case GenAtom::Kind::Tinv:
        w = w.mul_right_s(a.index);
        break;
      case GenAtom::Kind::X:
        slot[w(a.index)] += 'X';
        break;
      case GenAtom::Kind::Y:
        slot[w(a.index)] += 'Y';
        break;
    }
  }
  Ev0Form f;
  f.slot_words = slot;
  f.w = w;
  f.q_power = 0;
  f.mu.assign(k, 0);
  f.nu.assign(k, 0);
  for (int d = 1; d <= k; ++d) {
    int ys = 0;
    for (char ch : slot[d]) {
      if (ch == 'Y') {
        ys++;
      } else {
        f.mu[d - 1] += 1;
        f.q_power += ys;
      }
    }
    f.nu[d - 1] = ys;
  }
  return f;
}

void VerifyReport::note(bool ok, const std::string& msg) {
  checked++;
  if (!ok) {
    pass = false;
    if (violations.size() < 32) violations.push_back(msg);
  }
}

std::string VerifyReport::str() const {
  std::ostringstream os;
  os << (pass ? "pass" : "FAIL") << " (" << checked << " checks";
  if (!pass) {
    os << ", " << violations.size() << "+ violations";
    for (const auto& v : violations) os << "; " << v;
  }
  os << ")";
  return os.str();
}

VerifyReport verify_relations(int k) {
  VerifyReport rep;
  PolyQH h = PolyQH::h();
  PolyQH q = PolyQH::q();
  auto S = [](const GenWord& w) { return straighten(w); };
  auto eq = [&rep](const PBWElem& a, const PBWElem& b, const std::string& msg) {
    rep.note(a == b, msg);
  };
  for (int i = 1; i <= k - 1; ++i) {
    eq(S(GenWord(k).t(i)) - S(GenWord(k).tinv(i)), PBWElem::one(k).scale(h),
       "quadratic at i=" + std::to_string(i));
    for (int j = i + 2; j <= k - 1; ++j)
      eq(S(GenWord(k).t(i).t(j)), S(GenWord(k).t(j).t(i)),
         "distant TT " + std::to_string(i) + "," + std::to_string(j));
    if (i <= k - 2)
      eq(S(GenWord(k).t(i).t(i + 1).t(i)), S(GenWord(k).t(i + 1).t(i).t(i + 1)),
         "braid at i=" + std::to_string(i));
    eq(S(GenWord(k).tinv(i).x(i).tinv(i)), S(GenWord(k).x(i + 1)),
       "X lift at i=" + std::to_string(i));
    eq(S(GenWord(k).t(i).y(i).t(i)), S(GenWord(k).y(i + 1)), "Y lift at i=" + std::to_string(i));
    for (int j = 1; j <= k; ++j) {
      if (j == i || j == i + 1) continue;
      eq(S(GenWord(k).t(i).x(j)), S(GenWord(k).x(j).t(i)),
         "distant TX " + std::to_string(i) + "," + std::to_string(j));
      eq(S(GenWord(k).t(i).y(j)), S(GenWord(k).y(j).t(i)),
         "distant TY " + std::to_string(i) + "," + std::to_string(j));
    }
  }
  for (int i = 1; i <= k; ++i)
    for (int j = i + 1; j <= k; ++j) {
      eq(S(GenWord(k).x(i).x(j)), S(GenWord(k).x(j).x(i)),
         "XX " + std::to_string(i) + "," + std::to_string(j));
      eq(S(GenWord(k).y(i).y(j)), S(GenWord(k).y(j).y(i)),
         "YY " + std::to_string(i) + "," + std::to_string(j));
    }
  if (k >= 2)
    eq(S(GenWord(k).y(1).t(1).x(1)), S(GenWord(k).x(2).y(1).t(1)), "cross relation");
  {
    GenWord lhs(k), rhs(k);
    lhs.y(1);
    for (int i = 1; i <= k; ++i) lhs.x(i);
    for (int i = 1; i <= k; ++i) rhs.x(i);
    rhs.y(1);
    eq(S(lhs), S(rhs).scale(q), "det relation");
  }
  {
    PBWElem rhs = S(GenWord(k).x(1).y(1));
    for (int i = 1; i <= k - 1; ++i)
      rhs = rhs + S(GenWord(k).x(1).y(1).append(tab_word(k, 1, i + 1))).scale(h);
    eq(S(GenWord(k).y(1).x(1)), rhs.scale(q), "first-slot relation");
  }
  for (int a = 1; a <= k; ++a) {
    PBWElem rhs = S(GenWord(k).x(a).y(a));
    for (int j = a + 1; j <= k; ++j)
      rhs = rhs + S(GenWord(k).x(a).y(a).append(tab_word(k, a, j))).scale(h);
    for (int i = 1; i < a; ++i) {
      rhs = rhs + S(GenWord(k).x(i).y(i).append(tab_word(k, i, a))).scale(h);
      for (int j = a + 1; j <= k; ++j)
        rhs = rhs +
              S(GenWord(k).x(i).y(i).append(tab_word(k, i, a)).append(tab_word(k, a, j)))
                  .scale(h * h);
    }
    eq(S(GenWord(k).y(a).x(a)), rhs.scale(q), "diagonal relation a=" + std::to_string(a));
  }
  for (int a = 1; a <= k; ++a)
    for (int b = a + 1; b <= k; ++b) {
      std::string ab = std::to_string(a) + "," + std::to_string(b);
      eq(S(GenWord(k).x(b).y(a)),
         S(GenWord(k).y(a).x(b)) + S(GenWord(k).append(tab_word(k, a, b, true)).y(b).x(b)).scale(h),
         "XY chain form " + ab);
      eq(S(GenWord(k).x(b).y(a)),
         S(GenWord(k).y(a).x(b)) + S(GenWord(k).y(a).x(a).append(tab_word(k, a, b, true))).scale(h),
         "XY short form " + ab);
      eq(S(GenWord(k).y(b).x(a)),
         S(GenWord(k).x(a).y(b)) - S(GenWord(k).append(tab_word(k, a, b)).x(b).y(b)).scale(h),
         "YX chain form " + ab);
      eq(S(GenWord(k).y(b).x(a)),
         S(GenWord(k).x(a).y(b)) - S(GenWord(k).x(a).y(a).append(tab_word(k, a, b))).scale(h),
         "YX short form " + ab);
    }
  for (int i = 1; i <= k - 1; ++i) {
    std::string si = std::to_string(i);
    eq(S(GenWord(k).t(i).x(i)), S(GenWord(k).x(i + 1).t(i)) + S(GenWord(k).x(i)).scale(h),
       "TX straightening " + si);
    eq(S(GenWord(k).tinv(i).x(i)), S(GenWord(k).x(i + 1).tinv(i)) + S(GenWord(k).x(i + 1)).scale(h),
       "TinvX straightening " + si);
    eq(S(GenWord(k).t(i).x(i + 1)), S(GenWord(k).x(i).t(i)) - S(GenWord(k).x(i)).scale(h),
       "TX' straightening " + si);
    eq(S(GenWord(k).tinv(i).x(i + 1)),
       S(GenWord(k).x(i).tinv(i)) - S(GenWord(k).x(i + 1)).scale(h), "TinvX' straightening " + si);
    eq(S(GenWord(k).t(i).y(i)), S(GenWord(k).y(i + 1).t(i)) - S(GenWord(k).y(i + 1)).scale(h),
       "TY straightening " + si);
    eq(S(GenWord(k).tinv(i).y(i)), S(GenWord(k).y(i + 1).tinv(i)) - S(GenWord(k).y(i)).scale(h),
       "TinvY straightening " + si);
    eq(S(GenWord(k).t(i).y(i + 1)), S(GenWord(k).y(i).t(i)) + S(GenWord(k).y(i + 1)).scale(h),
       "TY' straightening " + si);
    eq(S(GenWord(k).tinv(i).y(i + 1)), S(GenWord(k).y(i).tinv(i)) + S(GenWord(k).y(i)).scale(h),
       "TinvY' straightening " + si);
  }
  return rep;
}

VerifyReport verify_tab_identities(int k, int max_b) {
  VerifyReport rep;
  if (max_b > k) throw std::invalid_argument("verify_tab_identities: need max_b <= k");
  auto S = [](const GenWord& w) { return straighten(w); };
  for (int inv = 0; inv <= 1; ++inv) {
    bool iv = inv != 0;
    PolyQH hh = iv ? -PolyQH::h() : PolyQH::h();
    PolyQH hh2 = hh * hh;
    auto AX = [&](int i) { return GenAtom{iv ? GenAtom::Kind::Y : GenAtom::Kind::X, i}; };
    auto AY = [&](int i) { return GenAtom{iv ? GenAtom::Kind::X : GenAtom::Kind::Y, i}; };
    auto tw = [&](int a, int b) { return tab_word(k, a, b, iv); };
    auto ins = [&](int a, int b, int i, bool desc, const GenAtom& at) {
      return tab_word_inserted(k, a, b, i, desc, at, iv);
    };
    auto lw = [&](const GenAtom& at) { return GenWord(k).append(at); };
    auto cat = [](GenWord a, const GenWord& b) {
      a.append(b);
      return a;
    };
    for (int a = 1; a < max_b; ++a)
      for (int b = a + 1; b <= max_b; ++b) {
        std::string tag = (iv ? "inv " : "") + std::to_string(a) + "," + std::to_string(b);
        for (int i = a; i <= b - 2; ++i) {
          std::string ti = tag + ",i=" + std::to_string(i);
          rep.note(S(ins(a, b, i, true, AX(i))) ==
                       S(ins(a, b, i + 1, true, AX(i + 1))) +
                           S(cat(ins(a, i + 1, i, true, AX(i)), tw(i + 1, b))).scale(hh),
                   "X-a " + ti);
          rep.note(S(ins(a, b, i, false, AX(i))) ==
                       S(cat(lw(AX(i + 1)), tw(a, b))) +
                           S(cat(tw(i + 1, b), ins(a, i + 1, i - 1, false, AX(i)))).scale(hh),
                   "X-c " + ti);
          rep.note(S(ins(a, b, i, true, AX(i + 1))) ==
                       S(ins(a, b, i, false, AX(i))) -
                           S(cat(ins(a, i + 1, i, true, AX(i)), tw(i + 1, b))).scale(hh),
                   "X-d " + ti);
          rep.note(S(ins(a, b, i, false, AX(i + 1))) ==
                       S(ins(a, b, i - 1, false, AX(i))) -
                           S(cat(tw(i + 1, b), ins(a, i + 1, i - 1, false, AX(i)))).scale(hh),
                   "X-f " + ti);
          rep.note(S(ins(a, b, i, true, AY(i))) ==
                       S(ins(a, b, i + 1, true, AY(i + 1))) -
                           S(cat(tw(a, i + 1), ins(i + 1, b, i + 1, true, AY(i + 1)))).scale(hh),
                   "Y-a " + ti);
          rep.note(S(ins(a, b, i, false, AY(i))) ==
                       S(cat(lw(AY(i + 1)), tw(a, b))) -
                           S(cat(lw(AY(i + 1)), cat(tw(i + 1, b), tw(a, i + 1)))).scale(hh),
                   "Y-c " + ti);
          rep.note(S(ins(a, b, i, true, AY(i + 1))) ==
                       S(ins(a, b, i, false, AY(i))) +
                           S(cat(tw(a, i + 1), ins(i + 1, b, i + 1, true, AY(i + 1)))).scale(hh),
                   "Y-d " + ti);
          rep.note(S(ins(a, b, i, false, AY(i + 1))) ==
                       S(ins(a, b, i - 1, false, AY(i))) +
                           S(cat(lw(AY(i + 1)), cat(tw(i + 1, b), tw(a, i + 1)))).scale(hh),
                   "Y-f " + ti);
        }
        rep.note(S(ins(a, b, b - 1, true, AX(b - 1))) ==
                     S(cat(lw(AX(b)), tw(a, b))) + S(lw(AX(a))).scale(hh),
                 "X-b " + tag);
        rep.note(S(ins(a, b, b - 1, true, AX(b))) ==
                     S(ins(a, b, b - 2, false, AX(b - 1))) - S(lw(AX(a))).scale(hh),
                 "X-e " + tag);
        {
          PBWElem sum_b = S(cat(lw(AY(b)), tw(a, b))) - S(lw(AY(b))).scale(hh);
          PBWElem sum_e = S(ins(a, b, b - 2, false, AY(b - 1))) + S(lw(AY(b))).scale(hh);
          for (int j = a + 1; j <= b - 1; ++j) {
            sum_b = sum_b - S(cat(lw(AY(b)), tw(a, j))).scale(hh2);
            sum_e = sum_e + S(cat(lw(AY(b)), tw(a, j))).scale(hh2);
          }
          rep.note(S(ins(a, b, b - 1, true, AY(b - 1))) == sum_b, "Y-b " + tag);
          rep.note(S(ins(a, b, b - 1, true, AY(b))) == sum_e, "Y-e " + tag);
        }
      }
  }
  return rep;
}

VerifyReport verify_upsilon_bound(const StdWord& sw, int k) {
  if (!sw.w().is_identity())
    throw std::invalid_argument("verify_upsilon_bound: trailing permutation must be trivial");
  if (sw.deg_x() + sw.deg_y() > 5 || sw.r() > 3 || k > 5 || k < sw.r())
    throw std::invalid_argument("verify_upsilon_bound: out of the guard box");
  VerifyReport rep;
  PBWElem e = phi_k(sw, k);
  for (const auto& [idx, c] : e.terms()) {
    auto ord = c.h_order();
    rep.note(ord.has_value() && *ord >= kappa_min(idx.w),
             "order below reflection length at " + idx.str() + " in " + sw.str());
  }
  return rep;
}

namespace {

void compositions_rec(int parts, int total, std::vector<int>& cur,
                      std::vector<std::vector<int>>& out) {
  if (parts == 1) {
    cur.push_back(total);
    out.push_back(cur);
    cur.pop_back();
    return;
  }
  for (int v = 0; v <= total; ++v) {
    cur.push_back(v);
    compositions_rec(parts - 1, total - v, cur, out);
    cur.pop_back();
  }
}

std::vector<std::vector<int>> compositions_with_sum(int parts, int total) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur;
  compositions_rec(parts, total, cur, out);
  return out;
}

bool is_kappa_factor(const Perm& w, const Perm& f) {
  for (const auto& sg : all_perms(w.rank())) {
    Perm tau = f.inverse().compose(sg.inverse()).compose(w);
    if (kappa_min(w) == kappa_min(sg) + kappa_min(f) + kappa_min(tau)) return true;
  }
  return false;
}

// Every reduced expression of w admits an omission of exactly s letters
// whose product is v.
bool omission_reaches(const Perm& w, const Perm& v, int s) {
  for (const auto& rw : w.all_reduced_words()) {
    int n = static_cast<int>(rw.size());
    bool found = false;
    for (unsigned mask = 0; mask < (1u << n) && !found; ++mask) {
      if (__builtin_popcount(mask) != s) continue;
      Perm p = Perm::identity(w.rank());
      for (int t = 0; t < n; ++t)
        if (!(mask & (1u << t))) p = p.mul_right_s(rw[t]);
      found = p == v;
    }
    if (!found) return false;
  }
  return true;
}

// Exponent dominance in decreasing variable order.
bool monomial_leq(const Weight& a, const Weight& b) {
  std::vector<int> ra(a.rbegin(), a.rend()), rb(b.rbegin(), b.rend());
  return dominance_leq(ra, rb);
}

}  // namespace

VerifyReport verify_main_theorem(const StdWord& sw, int k) {
  auto m = sw.m_data();
  auto g = sw.gap_data();
  auto zw = sw.z_data();
  int r = sw.r();
  int mtot = 0;
  for (int mj : m) {
    if (mj > 3) throw std::invalid_argument("verify_main_theorem: per-slot Y-degree above 3");
    mtot += mj;
  }
  if (k < mtot + r) throw std::invalid_argument("verify_main_theorem: need k >= |m| + r");
  VerifyReport rep;
  PBWElem e = phi_k(sw, k);
  int dx = sw.deg_x();
  int bound_w = mtot;
  for (int zj : zw) bound_w -= zj;

  // All slot composition sequences with the given per-slot lengths and total
  // weight dx, paired with every trailing permutation in S_r.
  std::vector<std::vector<std::vector<int>>> cands;
  std::function<void(int, int, std::vector<std::vector<int>>&)> rec =
      [&](int j, int left, std::vector<std::vector<int>>& cur) {
        if (j == r) {
          if (left == 0) cands.push_back(cur);
          return;
        }
        for (int s = 0; s <= left; ++s)
          for (auto& a : compositions_with_sum(m[j] + 1, s)) {
            cur.push_back(a);
            rec(j + 1, left - s, cur);
            cur.pop_back();
          }
      };
  std::vector<std::vector<int>> cur;
  rec(0, dx, cur);

  auto perms_r = all_perms(r);
  for (const auto& aa : cands) {
    PBWIndex base = m_special_multi(aa, k);
    int bound = mtot;
    std::vector<int> za(r);
    for (int j = 0; j < r; ++j) {
      za[j] = z_stat(aa[j]);
      bound -= za[j];
    }
    for (const auto& wa : perms_r) {
      // The candidate permutation is the product of the slot cycles with the
      // trailing factor; lengths add unless a trivial slot follows a
      // nontrivial one, and the index is the product either way.
      Perm wfull = base.w.compose(embed_perm(wa, k));
      PBWIndex idx{base.mu, base.nu, wfull};
      auto ord = ord_coeff(e, idx);
      std::string tag = idx.str() + " in " + sw.str();
      rep.note(!ord.has_value() || *ord >= bound, "order bound at " + tag);
      if (ord.has_value() && *ord == bound) {
        rep.note(wa == sw.w(), "trailing permutation at " + tag);
        bool zgeq = true, zeq = true;
        for (int j = 0; j < r; ++j) {
          zgeq = zgeq && za[j] >= zw[j];
          zeq = zeq && za[j] == zw[j];
        }
        rep.note(zgeq, "z comparison at " + tag);
        if (zeq)
          for (int j = 0; j < r; ++j)
            rep.note(dominance_leq(aa[j], g[j]), "dominance at " + tag);
      }
    }
  }
  {
    PBWIndex base = m_special_multi(g, k);
    Perm wfull = base.w.compose(embed_perm(sw.w(), k));
    auto slice = e.coeff({base.mu, base.nu, wfull}).h_slice(bound_w);
    bool lead = slice.size() == 1 && slice.count(bound_w) == 1 && slice.at(bound_w) == 1;
    rep.note(lead, "leading coefficient of " + sw.str());
  }

  // Single-slot family with a free window parameter below the rank.
  if (r == 1) {
    int m1 = m[0];
    for (int N = m1 + 1; N < k; ++N) {
      for (auto& a : compositions_with_sum(m1 + 1, dx)) {
        PBWIndex idx = m_special(a, k, 1, m1, N);
        int zeta = z_stat(a);
        auto ord = ord_coeff(e, idx);
        std::string tag = idx.str() + " (window " + std::to_string(N) + ") in " + sw.str();
        rep.note(!ord.has_value() || *ord >= m1 - zeta, "order bound at " + tag);
        if (ord.has_value() && *ord == m1 - zeta) {
          rep.note(zeta >= zw[0], "z comparison at " + tag);
          if (zeta == zw[0]) {
            PBWIndex idg = m_special(g[0], k, 1, m1, N);
            rep.note(monomial_leq(idx.mu, idg.mu), "monomial dominance at " + tag);
            rep.note(dominance_leq(a, g[0]), "dominance at " + tag);
          }
        }
      }
      PBWIndex idg = m_special(g[0], k, 1, m1, N);
      auto slice = e.coeff(idg).h_slice(m1 - zw[0]);
      bool lead = slice.size() == 1 && slice.count(m1 - zw[0]) == 1 && slice.at(m1 - zw[0]) == 1;
      rep.note(lead, "leading coefficient (window " + std::to_string(N) + ") of " + sw.str());
    }
  }
  return rep;
}

VerifyReport verify_parts_and_yz(const PartsYzParams& p) {
  if (p.N > 5 || p.z > 3) throw std::invalid_argument("verify_parts_and_yz: out of the guard box");
  VerifyReport rep;

  // Distinct-parts bound: terms of T_w Y_lambda X_eta whose Y-exponent has
  // s more nonzero entries than lambda have order at least s; at equality
  // with no X letters the permutation is a subword of every reduced
  // expression of w with exactly s omissions.
  {
    int n = p.parts_rank;
    std::vector<Weight> lams;
    for (int d = 0; d <= p.parts_deg; ++d)
      for (auto& v : compositions_with_sum(n, d)) lams.push_back(v);
    for (const auto& w : all_perms(n))
      for (const auto& lam : lams)
        for (int xc = 0; xc <= n; ++xc) {
          GenWord wd(n);
          for (int i : w.reduced_word()) wd.t(i);
          for (int i = 1; i <= n; ++i)
            for (int e = 0; e < lam[i - 1]; ++e) wd.y(i);
          if (xc > 0) wd.x(xc);
          PBWElem e = straighten(wd);
          for (const auto& [idx, c] : e.terms()) {
            int s = nnz(idx.nu) - nnz(lam);
            if (s < 1) continue;
            auto ord = c.h_order();
            rep.note(ord.has_value() && *ord >= s, "distinct-parts bound at " + idx.str() +
                                                       " in T_w Y^lam, w=" + w.str());
            if (ord.has_value() && *ord == s && xc == 0 && nnz(idx.mu) == 0)
              rep.note(omission_reaches(w, idx.w, s),
                       "omission property at " + idx.str() + ", w=" + w.str());
          }
        }
  }

  // Cycle family: sigma = (1,N,d_{l-1},..,d_1), tau = (1,N,N-1,..); the
  // complement indices force order at least s+1 unless s = 0 and sigma = tau.
  {
    int N = p.N;
    for (int len = 1; len + 0 <= N - 1; ++len)
      for (int s = 0; len + s <= N - 1; ++s) {
        std::vector<int> window;
        for (int v = N - (len + s - 1); v <= N; ++v) window.push_back(v);
        if (len + s == 0) continue;
        // choose len-1 ordered values besides N
        std::vector<int> pool;
        for (int v : window)
          if (v != N) pool.push_back(v);
        std::vector<int> pick;
        std::function<void()> run = [&]() {
          std::vector<int> taulist = {1};
          for (int v = N; v >= N - (len + s - 1); --v) taulist.push_back(v);
          Perm tau = cycle_from_list(N, taulist);
          std::vector<int> siglist = {1, N};
          for (auto it = pick.rbegin(); it != pick.rend(); ++it) siglist.push_back(*it);
          Perm sigma = cycle_from_list(N, siglist);
          std::vector<int> comp;
          for (int v : pool)
            if (std::find(pick.begin(), pick.end(), v) == pick.end()) comp.push_back(v);
          for (int z = s; z <= p.z; ++z) {
            for (int kk = N; kk <= (p.yz_embed ? N + 1 : N); ++kk) {
              GenWord wd(kk);
              Perm sig_k = embed_perm(sigma, kk);
              for (int i : sig_k.reduced_word()) wd.t(i);
              for (int t = 0; t < z; ++t) wd.y(1);
              PBWElem e = straighten(wd);
              Weight nu(kk, 0);
              for (int v : comp) nu[v - 1] += 1;
              nu[N - 1] += z - s;
              PBWIndex idx{Weight(kk, 0), nu, embed_perm(tau, kk)};
              auto ord = ord_coeff(e, idx);
              std::string tag = idx.str() + " in T_sigma Y_1^" + std::to_string(z) +
                                ", sigma=" + sigma.str() + ", rank " + std::to_string(kk);
              if (s == 0 && sigma == tau)
                rep.note(ord.has_value() && *ord == 0, "diagonal case at " + tag);
              else
                rep.note(!ord.has_value() || *ord >= s + 1, "cycle bound at " + tag);
            }
          }
        };
        std::function<void()> choose = [&]() {
          if (static_cast<int>(pick.size()) == len - 1) {
            run();
            return;
          }
          for (int v : pool) {
            if (std::find(pick.begin(), pick.end(), v) != pick.end()) continue;
            pick.push_back(v);
            choose();
            pick.pop_back();
          }
        };
        choose();
      }
  }

  // Reflection-length inequality for T_{w1}^{s1} T_{w2}^{s2}.
  {
    int n = p.ordineq_rank;
    for (const auto& w1 : all_perms(n))
      for (const auto& w2 : all_perms(n))
        for (int s1 : {+1, -1})
          for (int s2 : {+1, -1}) {
            GenWord wd(n);
            auto emit = [&wd](const Perm& w, int sg) {
              auto rw = w.reduced_word();
              if (sg > 0)
                for (int i : rw) wd.t(i);
              else
                for (auto it = rw.rbegin(); it != rw.rend(); ++it) wd.tinv(*it);
            };
            emit(w1, s1);
            emit(w2, s2);
            Perm prod = (s1 > 0 ? w1 : w1.inverse()).compose(s2 > 0 ? w2 : w2.inverse());
            int kp = kappa_min(prod);
            PBWElem e = straighten(wd);
            for (const auto& [idx, c] : e.terms()) {
              auto ord = c.h_order();
              int kw = kappa_min(idx.w);
              rep.note(ord.has_value() && kp + *ord >= kw,
                       "length inequality at " + idx.str() + " from " + wd.str());
              if (ord.has_value() && kp + *ord == kw)
                rep.note(is_kappa_factor(idx.w, prod),
                         "factor property at " + idx.str() + " from " + wd.str());
            }
          }
  }
  return rep;
}

VerifyReport verify_ev0_random(int k, int count, unsigned seed, int max_deg,
                               int max_len) {
  if (k < 2 || k > 6) throw std::invalid_argument("verify_ev0_random: rank must be in [2,6]");
  VerifyReport rep;
  std::mt19937 rng(seed);
  std::uniform_int_distribution<int> kind(0, 3);
  std::uniform_int_distribution<int> degidx(1, k);
  std::uniform_int_distribution<int> tidx(1, k - 1);
  for (int trial = 0; trial < count; ++trial) {
    GenWord wd(k);
    int deg = 0, len = 0;
    while (len < max_len) {
      int c = kind(rng);
      if (c <= 1 && deg >= max_deg) {
        len++;
        continue;
      }
      switch (c) {
        case 0:
          wd.x(degidx(rng));
          deg++;
          break;
        case 1:
          wd.y(degidx(rng));
          deg++;
          break;
        case 2:
          wd.t(tidx(rng));
          break;
        default:
          wd.tinv(tidx(rng));
          break;
      }
      len++;
    }
    PBWElem e = straighten(wd);
    Ev0Form f = ev0_normal_form(wd);
    PBWIndex main{f.mu, f.nu, f.w};
    auto slice = e.coeff(main).h_slice(0);
    rep.note(slice == std::map<int, mpq_class>{{f.q_power, mpq_class(1)}},
             "order-0 coefficient of " + wd.str());
    for (const auto& [idx, c] : e.terms()) {
      if (idx == main) continue;
      auto ord = c.h_order();
      rep.note(ord.has_value() && *ord >= 1,
               "positive order at " + idx.str() + " in " + wd.str());
    }
  }
  return rep;
}

}  // namespace daha
