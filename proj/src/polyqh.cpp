#include "daha/polyqh.hpp"

#include <sstream>
#include <stdexcept>

namespace daha {

PolyQH::PolyQH(long c) {
  if (c != 0) terms_[{0, 0}] = mpq_class(c);
}

PolyQH PolyQH::q(int e) { return monomial(1, e, 0); }

PolyQH PolyQH::h(int e) { return monomial(1, 0, e); }

PolyQH PolyQH::monomial(const mpq_class& c, int qe, int he) {
  if (qe < 0 || he < 0) throw std::domain_error("PolyQH: negative exponent");
  PolyQH r;
  if (c != 0) r.terms_[{qe, he}] = c;
  return r;
}

void PolyQH::add_term(int qe, int he, const mpq_class& c) {
  auto key = std::make_pair(qe, he);
  auto it = terms_.find(key);
  if (it == terms_.end()) {
    if (c != 0) terms_[key] = c;
  } else {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

std::optional<int> PolyQH::h_order() const {
  if (terms_.empty()) return std::nullopt;
  int lo = -1;
  for (const auto& [k, c] : terms_) {
    (void)c;
    if (lo < 0 || k.second < lo) lo = k.second;
  }
  return lo;
}

int PolyQH::h_deg() const {
  int d = -1;
  for (const auto& [k, c] : terms_) {
    (void)c;
    if (k.second > d) d = k.second;
  }
  return d;
}

mpq_class PolyQH::coeff(int qe, int he) const {
  auto it = terms_.find({qe, he});
  return it == terms_.end() ? mpq_class(0) : it->second;
}

std::map<int, mpq_class> PolyQH::h_slice(int he) const {
  std::map<int, mpq_class> r;
  for (const auto& [k, c] : terms_)
    if (k.second == he) r[k.first] = c;
  return r;
}

PolyQH operator+(const PolyQH& a, const PolyQH& b) {
  PolyQH r = a;
  for (const auto& [k, c] : b.terms_) r.add_term(k.first, k.second, c);
  return r;
}

PolyQH operator-(const PolyQH& a, const PolyQH& b) { return a + (-b); }

PolyQH operator*(const PolyQH& a, const PolyQH& b) {
  PolyQH r;
  for (const auto& [ka, ca] : a.terms_)
    for (const auto& [kb, cb] : b.terms_)
      r.add_term(ka.first + kb.first, ka.second + kb.second, ca * cb);
  return r;
}

PolyQH PolyQH::operator-() const {
  PolyQH r;
  for (const auto& [k, c] : terms_) r.terms_[k] = -c;
  return r;
}

PolyQH PolyQH::scale(const mpq_class& c) const {
  PolyQH r;
  if (c == 0) return r;
  for (const auto& [k, v] : terms_) r.terms_[k] = v * c;
  return r;
}

std::string PolyQH::str() const {
  if (terms_.empty()) return "0";
  // Terms ordered by total degree, then h-exponent, then q-exponent.
  std::vector<std::tuple<int, int, int>> mons;
  for (const auto& [k, c] : terms_) {
    (void)c;
    mons.emplace_back(k.first + k.second, k.second, k.first);
  }
  std::sort(mons.begin(), mons.end());
  std::ostringstream os;
  bool first = true;
  for (auto [tot, he, qe] : mons) {
    (void)tot;
    mpq_class c = coeff(qe, he);
    bool neg = c < 0;
    mpq_class ac = abs(c);
    if (first) {
      if (neg) os << "-";
      first = false;
    } else {
      os << (neg ? " - " : " + ");
    }
    std::string body;
    if (qe > 0) body += "q" + (qe > 1 ? "^" + std::to_string(qe) : "");
    if (he > 0) {
      if (!body.empty()) body += "*";
      body += "h" + (he > 1 ? "^" + std::to_string(he) : "");
    }
    if (body.empty()) {
      os << ac.get_str();
    } else if (ac == 1) {
      os << body;
    } else {
      os << ac.get_str() << "*" << body;
    }
  }
  return os.str();
}

}  // namespace daha
