#include "daha/laurent.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace daha {

void LaurentPoly::add_term(const Exps& e, const RatQT& c) {
  if (c.is_zero()) return;
  auto it = terms_.find(e);
  if (it == terms_.end()) {
    terms_.emplace(e, c);
    return;
  }
  it->second = it->second + c;
  if (it->second.is_zero()) terms_.erase(it);
}

LaurentPoly LaurentPoly::constant(int rank, const RatQT& c) {
  LaurentPoly f(rank);
  f.add_term(Exps(rank, 0), c);
  return f;
}

LaurentPoly LaurentPoly::monomial(int rank, Exps e, RatQT c) {
  if (static_cast<int>(e.size()) != rank)
    throw std::invalid_argument("monomial: exponent vector length != rank");
  LaurentPoly f(rank);
  f.add_term(e, c);
  return f;
}

LaurentPoly LaurentPoly::x(int rank, int i, int e) {
  if (i < 1 || i > rank) throw std::invalid_argument("x: index out of range");
  Exps exps(rank, 0);
  exps[i - 1] = e;
  return monomial(rank, exps);
}

bool LaurentPoly::is_polynomial() const {
  for (const auto& [e, c] : terms_)
    for (int v : e)
      if (v < 0) return false;
  return true;
}

RatQT LaurentPoly::coeff(const Exps& e) const {
  auto it = terms_.find(e);
  return it == terms_.end() ? RatQT() : it->second;
}

int LaurentPoly::total_degree() const {
  int d = 0;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    int s = std::accumulate(e.begin(), e.end(), 0);
    if (first || s > d) d = s;
    first = false;
  }
  return d;
}

bool LaurentPoly::is_homogeneous() const {
  bool first = true;
  int d = 0;
  for (const auto& [e, c] : terms_) {
    int s = std::accumulate(e.begin(), e.end(), 0);
    if (first) {
      d = s;
      first = false;
    } else if (s != d) {
      return false;
    }
  }
  return true;
}

LaurentPoly LaurentPoly::operator+(const LaurentPoly& o) const {
  if (rank_ != o.rank_) throw std::invalid_argument("poly add: rank mismatch");
  LaurentPoly out = *this;
  for (const auto& [e, c] : o.terms_) out.add_term(e, c);
  return out;
}

LaurentPoly LaurentPoly::operator-(const LaurentPoly& o) const {
  if (rank_ != o.rank_) throw std::invalid_argument("poly sub: rank mismatch");
  LaurentPoly out = *this;
  for (const auto& [e, c] : o.terms_) out.add_term(e, -c);
  return out;
}

LaurentPoly LaurentPoly::operator*(const LaurentPoly& o) const {
  if (rank_ != o.rank_) throw std::invalid_argument("poly mul: rank mismatch");
  LaurentPoly out(rank_);
  for (const auto& [e1, c1] : terms_) {
    for (const auto& [e2, c2] : o.terms_) {
      Exps e(rank_);
      for (int i = 0; i < rank_; ++i) e[i] = e1[i] + e2[i];
      out.add_term(e, c1 * c2);
    }
  }
  return out;
}

LaurentPoly LaurentPoly::operator-() const {
  LaurentPoly out(rank_);
  for (const auto& [e, c] : terms_) out.terms_.emplace(e, -c);
  return out;
}

LaurentPoly LaurentPoly::scale(const RatQT& c) const {
  LaurentPoly out(rank_);
  if (c.is_zero()) return out;
  for (const auto& [e, co] : terms_) out.terms_.emplace(e, co * c);
  return out;
}

bool LaurentPoly::operator==(const LaurentPoly& o) const {
  return rank_ == o.rank_ && terms_ == o.terms_;
}

LaurentPoly operator*(const RatQT& c, const LaurentPoly& f) { return f.scale(c); }

namespace {

// Graded lex, highest first.
bool term_before(const Exps& a, const Exps& b) {
  int da = std::accumulate(a.begin(), a.end(), 0);
  int db = std::accumulate(b.begin(), b.end(), 0);
  if (da != db) return da > db;
  return a > b;
}

std::string monomial_str(const Exps& e) {
  std::ostringstream os;
  bool any = false;
  for (size_t i = 0; i < e.size(); ++i) {
    if (e[i] == 0) continue;
    if (any) os << "*";
    os << "x" << (i + 1);
    if (e[i] != 1) os << "^" << e[i];
    any = true;
  }
  return any ? os.str() : std::string();
}

}  // namespace

std::string LaurentPoly::str() const {
  if (terms_.empty()) return "0";
  std::vector<const std::pair<const Exps, RatQT>*> ordered;
  for (const auto& t : terms_) ordered.push_back(&t);
  std::sort(ordered.begin(), ordered.end(),
            [](auto* a, auto* b) { return term_before(a->first, b->first); });
  std::ostringstream os;
  bool first = true;
  for (auto* t : ordered) {
    std::string cs = t->second.str();
    bool neg = cs.size() > 1 && cs[0] == '-' &&
               cs.find(" + ") == std::string::npos &&
               cs.find(" - ") == std::string::npos;
    if (first) {
      first = false;
    } else if (neg) {
      os << " - ";
      cs = cs.substr(1);
    } else {
      os << " + ";
    }
    std::string ms = monomial_str(t->first);
    if (ms.empty()) {
      os << cs;
      continue;
    }
    if (cs == "1") {
      os << ms;
    } else if (cs == "-1") {
      os << "-" << ms;
    } else {
      bool paren = cs.find(' ') != std::string::npos ||
                   cs.find('/') != std::string::npos;
      if (paren)
        os << "(" << cs << ")*" << ms;
      else
        os << cs << "*" << ms;
    }
  }
  return os.str();
}

LaurentPoly swap_action(const LaurentPoly& f, int i) {
  if (i < 1 || i >= f.rank())
    throw std::invalid_argument("swap_action: index out of range");
  LaurentPoly out(f.rank());
  for (const auto& [e, c] : f.terms()) {
    Exps e2 = e;
    std::swap(e2[i - 1], e2[i]);
    out += LaurentPoly::monomial(f.rank(), e2, c);
  }
  return out;
}

LaurentPoly evaluate_at_zero_last(const LaurentPoly& f) {
  int k = f.rank();
  if (k < 1)
    throw std::invalid_argument("evaluate_at_zero_last: rank must be >= 1");
  LaurentPoly out(k - 1);
  for (const auto& [e, c] : f.terms()) {
    if (e[k - 1] < 0)
      throw std::domain_error("evaluate_at_zero_last: negative exponent");
    if (e[k - 1] > 0) continue;
    out += LaurentPoly::monomial(k - 1, Exps(e.begin(), e.end() - 1), c);
  }
  return out;
}

}  // namespace daha
