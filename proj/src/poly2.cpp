#include "binoconv/poly2.hpp"

#include <vector>

namespace binoconv {

Poly2 Poly2::monomial(int deg_k, int deg_l, const Rat& coeff) {
  Poly2 p;
  p.add_term({deg_k, deg_l}, coeff);
  return p;
}

void Poly2::add_term(const Monomial& m, const Rat& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

bool Poly2::is_constant() const {
  if (terms_.empty()) return true;
  return terms_.size() == 1 && terms_.begin()->first == Monomial{0, 0};
}

int Poly2::deg_k() const {
  int d = -1;
  for (const auto& [m, c] : terms_)
    if (m.k > d) d = m.k;
  return d;
}

int Poly2::deg_l() const {
  int d = -1;
  for (const auto& [m, c] : terms_)
    if (m.l > d) d = m.l;
  return d;
}

Rat Poly2::coeff(int deg_k, int deg_l) const {
  const auto it = terms_.find({deg_k, deg_l});
  return it == terms_.end() ? Rat(0) : it->second;
}

Rat Poly2::eval(const Rat& kval, const Rat& lval) const {
  const int dk = deg_k(), dl = deg_l();
  std::vector<Rat> kp(static_cast<size_t>(dk < 0 ? 0 : dk) + 1, Rat(1));
  std::vector<Rat> lp(static_cast<size_t>(dl < 0 ? 0 : dl) + 1, Rat(1));
  for (size_t e = 1; e < kp.size(); ++e) kp[e] = kp[e - 1] * kval;
  for (size_t e = 1; e < lp.size(); ++e) lp[e] = lp[e - 1] * lval;
  Rat acc(0);
  for (const auto& [m, c] : terms_) acc += c * kp[static_cast<size_t>(m.k)] * lp[static_cast<size_t>(m.l)];
  return acc;
}

Poly2 Poly2::shift_var(const Rat& c, bool in_k) const {
  // Expand (X + c)^e termwise via the binomial theorem.
  Poly2 out;
  for (const auto& [m, co] : terms_) {
    const int e = in_k ? m.k : m.l;
    Int binom(1);
    for (int g = e; g >= 0; --g) {
      // binom walks C(e, g) downward from C(e, e) = 1.
      Rat term = co * Rat(binom) * rat_pow(c, static_cast<unsigned long>(e - g));
      out.add_term(in_k ? Monomial{g, m.l} : Monomial{m.k, g}, term);
      if (g > 0) binom = exact_div(binom * g, Int(e - g + 1));
    }
  }
  return out;
}

Poly2 Poly2::shift_k(const Rat& c) const { return c == 0 ? *this : shift_var(c, true); }
Poly2 Poly2::shift_l(const Rat& c) const { return c == 0 ? *this : shift_var(c, false); }

Poly2& Poly2::operator+=(const Poly2& o) {
  for (const auto& [m, c] : o.terms_) add_term(m, c);
  return *this;
}

Poly2& Poly2::operator-=(const Poly2& o) {
  for (const auto& [m, c] : o.terms_) {
    Rat neg = -c;
    add_term(m, neg);
  }
  return *this;
}

Poly2 operator*(const Poly2& a, const Poly2& b) {
  Poly2 out;
  for (const auto& [ma, ca] : a.terms_)
    for (const auto& [mb, cb] : b.terms_) {
      Rat c = ca * cb;
      out.add_term({ma.k + mb.k, ma.l + mb.l}, c);
    }
  return out;
}

Poly2& Poly2::operator*=(const Poly2& o) {
  *this = *this * o;
  return *this;
}

Poly2& Poly2::operator*=(const Rat& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [m, co] : terms_) co *= c;
  return *this;
}

Poly2 Poly2::operator-() const {
  Poly2 out(*this);
  for (auto& [m, co] : out.terms_) co = -co;
  return out;
}

std::string Poly2::str() const {
  if (terms_.empty()) return "0";
  std::string out;
  // highest monomial first
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [m, c] = *it;
    const bool neg = c < 0;
    Rat a = neg ? Rat(-c) : c;
    if (out.empty())
      out += neg ? "-" : "";
    else
      out += neg ? " - " : " + ";
    std::string mono;
    if (m.k > 0) mono += m.k == 1 ? "K" : "K^" + std::to_string(m.k);
    if (m.l > 0) {
      if (!mono.empty()) mono += "*";
      mono += m.l == 1 ? "L" : "L^" + std::to_string(m.l);
    }
    if (mono.empty())
      out += to_string(a);
    else if (a == 1)
      out += mono;
    else
      out += to_string(a) + "*" + mono;
  }
  return out;
}

}  // namespace binoconv
