#ifndef BINOCONV_POLY2_HPP
#define BINOCONV_POLY2_HPP

#include <compare>
#include <map>
#include <string>

#include "binoconv/numeric.hpp"

namespace binoconv {

// Exponent pair of a monomial K^k * L^l.
struct Monomial {
  int k = 0;
  int l = 0;
  friend auto operator<=>(const Monomial&, const Monomial&) = default;
};

// Bivariate polynomial over Rat in the indeterminates K and L.
// Canonical sparse form: the term map never stores a zero coefficient,
// so structural equality of the maps is polynomial equality.
class Poly2 {
 public:
  using TermMap = std::map<Monomial, Rat>;

  Poly2() = default;  // the zero polynomial
  Poly2(const Rat& c) { add_term({0, 0}, c); }
  Poly2(const Int& c) { add_term({0, 0}, Rat(c)); }
  Poly2(long c) { add_term({0, 0}, Rat(c)); }

  static Poly2 var_k() { return monomial(1, 0, Rat(1)); }
  static Poly2 var_l() { return monomial(0, 1, Rat(1)); }
  static Poly2 monomial(int deg_k, int deg_l, const Rat& coeff);

  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  // Constant term; equals the whole polynomial only when is_constant().
  Rat constant_value() const { return coeff(0, 0); }

  // Degree in one indeterminate; -1 for the zero polynomial.
  int deg_k() const;
  int deg_l() const;

  const TermMap& terms() const { return terms_; }
  Rat coeff(int deg_k, int deg_l) const;

  // Exact substitution K := kval, L := lval.
  Rat eval(const Rat& kval, const Rat& lval) const;

  // Variable shifts K := K + c and L := L + c.
  Poly2 shift_k(const Rat& c) const;
  Poly2 shift_l(const Rat& c) const;

  std::string str() const;

  Poly2& operator+=(const Poly2& o);
  Poly2& operator-=(const Poly2& o);
  Poly2& operator*=(const Poly2& o);
  Poly2& operator*=(const Rat& c);
  Poly2 operator-() const;

  friend Poly2 operator+(Poly2 a, const Poly2& b) { return a += b; }
  friend Poly2 operator-(Poly2 a, const Poly2& b) { return a -= b; }
  friend Poly2 operator*(const Poly2& a, const Poly2& b);
  friend Poly2 operator*(Poly2 a, const Rat& c) { return a *= c; }
  friend Poly2 operator*(const Rat& c, Poly2 a) { return a *= c; }
  friend bool operator==(const Poly2& a, const Poly2& b) { return a.terms_ == b.terms_; }

 private:
  TermMap terms_;
  void add_term(const Monomial& m, const Rat& c);
  Poly2 shift_var(const Rat& c, bool shift_k) const;
};

}  // namespace binoconv

#endif
