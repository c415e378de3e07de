#include "binoconv/identities.hpp"

#include <array>
#include <stdexcept>
#include <string>

#include "binoconv/oracles.hpp"

namespace binoconv {

namespace {

long checked_n(const Int& n, const char* op) {
  if (n < 0) throw std::domain_error(std::string(op) + ": n must be >= 0");
  return to_long(n, op);
}

void divexact_ui(Int& v, unsigned long d) {
  mpz_divexact_ui(v.get_mpz_t(), v.get_mpz_t(), d);
}

// Powers base^0..base^count with the 0^0 = 1 convention.
std::vector<Int> power_table(const Int& base, long count) {
  std::vector<Int> pw(static_cast<size_t>(count) + 1);
  pw[0] = 1;
  for (long e = 1; e <= count; ++e) pw[static_cast<size_t>(e)] = pw[static_cast<size_t>(e - 1)] * base;
  return pw;
}

}  // namespace

Int conv_p(const Int& a, const Int& n) {
  const long nn = checked_n(n, "conv_p");
  Int total(0);
  for (long i = 0; i <= nn; ++i) {
    const long j = nn - i;
    total += binom_int(Int(a * i), Int(i)) * binom_int(Int(a * j), Int(j));
  }
  return total;
}

Poly2 t1_lhs(const Int& a, const Int& n) {
  const long nn = checked_n(n, "t1_lhs");
  const Poly2 kml = Poly2::var_k() - Poly2::var_l();
  const Poly2 el = Poly2::var_l();
  Poly2 total;
  for (long i = 0; i <= nn; ++i) {
    const long j = nn - i;
    Poly2 left = binom_poly(Poly2(Int(a * i)) + kml, Int(i));
    Poly2 right = binom_poly(Poly2(Int(a * j)) + el, Int(j));
    total += left * right;
  }
  return total;
}

Poly2 t1_mid(const Int& a, const Int& n) {
  const long nn = checked_n(n, "t1_mid");
  const Poly2 ek = Poly2::var_k();
  Poly2 total;
  for (long i = 0; i <= nn; ++i) {
    const long j = nn - i;
    Poly2 left = binom_poly(Poly2(Int(a * i)) + ek, Int(i));
    total += left * Poly2(binom_int(Int(a * j), Int(j)));
  }
  return total;
}

Poly2 t1_eq6(const Int& a, const Int& n) {
  const long nn = checked_n(n, "t1_eq6");
  const Poly2 y = Poly2(Int(a * n + 1)) + Poly2::var_k();
  const Int am1 = a - 1;
  Poly2 total;
  Poly2 b(1L);  // C(y, i), extended one factor per iteration
  for (long i = 0; i <= nn; ++i) {
    if (i > 0) {
      b *= y - Poly2(i - 1);
      b *= make_rat(Int(1), Int(i));
    }
    total += Poly2(pow0(am1, Int(nn - i))) * b;
  }
  return total;
}

Poly2 t1_eq7(const Int& a, const Int& n) {
  const long nn = checked_n(n, "t1_eq7");
  const Poly2 x0 = Poly2(Int((a - 1) * n)) + Poly2::var_k();
  Poly2 total;
  Poly2 b(1L);  // C(x0 + i, i), via C(x0+i, i) = C(x0+i-1, i-1) * (x0+i) / i
  for (long i = 0; i <= nn; ++i) {
    if (i > 0) {
      b *= x0 + Poly2(i);
      b *= make_rat(Int(1), Int(i));
    }
    total += Poly2(pow0(a, Int(nn - i))) * b;
  }
  return total;
}

Poly2 s_sum(const Int& a, const Int& n) {
  const long nn = checked_n(n, "s_sum");
  const Poly2 el = Poly2::var_l();
  Poly2 total;
  for (long i = 0; i <= nn; ++i) {
    Poly2 left = binom_poly(el - Poly2(Int((a - 1) * i)), Int(i));
    Poly2 right = binom_poly(el - Poly2(Int(a * i)), Int(nn - i));
    Poly2 term = left * right;
    if (i % 2 == 0)
      total += term;
    else
      total -= term;
  }
  return total;
}

Poly2 t2_lhs(const Int& a, const Int& n) {
  const long nn = checked_n(n, "t2_lhs");
  const Poly2 el = Poly2::var_l();
  Poly2 total;
  for (long i = 0; i <= nn; ++i) {
    const long j = nn - i;
    const Poly2 arg = el - Poly2(Int(a * i));
    Poly2 term = multichoose_poly(arg, Int(i)) * binom_poly(arg, Int(j));
    if (i % 2 == 0)
      total += term;
    else
      total -= term;
  }
  return total;
}

IdentityReport theorem1_check(const Int& a, const Int& n, CheckMode mode) {
  const long nn = checked_n(n, "theorem1_check");
  IdentityReport rep;
  rep.id = IdentityId::Thm1;
  rep.params = {{"a", a}, {"n", n}};
  rep.mode = mode;
  rep.holds = true;

  const Poly2 lhs = t1_lhs(a, n);
  const Poly2 mid = t1_mid(a, n);
  const Poly2 e6 = t1_eq6(a, n);
  const Poly2 e7 = t1_eq7(a, n);
  const std::array<std::pair<const char*, const Poly2*>, 3> others = {
      {{"mid", &mid}, {"eq6", &e6}, {"eq7", &e7}}};

  if (mode == CheckMode::Symbolic) {
    if (lhs.deg_l() > 0) {
      rep.holds = false;
      rep.witness = Witness{"t1_lhs has L-degree " + std::to_string(lhs.deg_l()), lhs.str(), "an L-free polynomial"};
      return rep;
    }
    for (const auto& [name, p] : others) {
      if (!(lhs == *p)) {
        rep.holds = false;
        rep.witness = Witness{std::string("lhs vs ") + name, lhs.str(), p->str()};
        return rep;
      }
    }
  } else {
    for (const auto& [name, p] : others) {
      const GridVerdict v = grid_equal(lhs, *p, nn, nn);
      if (!v.equal) {
        rep.holds = false;
        const GridWitness& w = *v.witness;
        rep.witness = Witness{std::string("lhs vs ") + name + " at K=" + to_string(w.kval) + ", L=" + to_string(w.lval),
                              to_string(w.fval), to_string(w.gval)};
        return rep;
      }
    }
  }
  return rep;
}

IdentityReport lemma1_check(const Int& a, const Int& n) {
  const long nn = checked_n(n, "lemma1_check");
  IdentityReport rep;
  rep.id = IdentityId::Lemma1;
  rep.params = {{"a", a}, {"n", n}};

  Poly2 lhs;
  for (long p = 0; p <= nn; ++p) lhs += Poly2(binom_int(n, Int(p))) * s_sum(a, Int(p));
  const Poly2 rhs = s_sum(a + 1, n).shift_l(Rat(Int(n)));

  rep.holds = lhs == rhs;
  if (!rep.holds) rep.witness = Witness{"binomial transform vs shifted sum", lhs.str(), rhs.str()};
  return rep;
}

IdentityReport lemma2_check(const Int& a, const Int& n) {
  checked_n(n, "lemma2_check");
  IdentityReport rep;
  rep.id = IdentityId::Lemma2;
  rep.params = {{"a", a}, {"n", n}};

  const Poly2 s = s_sum(a, n);
  const Poly2 expected(pow0(a - 1, n));
  rep.holds = s == expected;
  if (!rep.holds) rep.witness = Witness{"s_sum vs (a-1)^n", s.str(), expected.str()};
  return rep;
}

IdentityReport thm2_check(const Int& a, const Int& n) {
  const long nn = checked_n(n, "thm2_check");
  IdentityReport rep;
  rep.id = IdentityId::Thm2;
  rep.params = {{"a", a}, {"n", n}};

  const Poly2 t = t2_lhs(a, n);
  if (nn == 0) {
    // The closed form a*(a-1)^(n-1) does not cover n = 0; record the value only.
    rep.holds = t == Poly2(1L);
    rep.note = "n=0 out of closed-form range, LHS=1";
    if (!rep.holds) rep.witness = Witness{"n=0 sum vs 1", t.str(), "1"};
    return rep;
  }
  const Poly2 expected(Int(a * pow0(a - 1, Int(nn - 1))));
  rep.holds = t == expected;
  if (!rep.holds) rep.witness = Witness{"t2_lhs vs a*(a-1)^(n-1)", t.str(), expected.str()};
  return rep;
}

IdentityReport eq3_eq4_check(const Int& n) {
  const long nn = checked_n(n, "eq3_eq4_check");
  IdentityReport rep;
  rep.params = {{"n", n}};

  const Int conv = conv_p(Int(2), n);
  const Int pow4 = pow0(Int(4), n);
  Int half_row(0);  // sum_{i<=n} C(2n+1, i)
  Int shifted(0);   // sum_{i<=n} 2^(n-i) C(n+i, i)
  const std::vector<Int> pw2 = power_table(Int(2), nn);
  for (long i = 0; i <= nn; ++i) {
    half_row += binom_int(Int(2 * nn + 1), Int(i));
    shifted += pw2[static_cast<size_t>(nn - i)] * binom_int(Int(nn + i), Int(i));
  }

  rep.holds = conv == pow4 && half_row == pow4 && shifted == pow4;
  if (conv != pow4) {
    rep.id = IdentityId::Eq1;
    rep.witness = Witness{"conv_p(2,n) vs 4^n", to_string(conv), to_string(pow4)};
  } else if (half_row != pow4) {
    rep.id = IdentityId::Eq3;
    rep.witness = Witness{"sum C(2n+1,i) vs 4^n", to_string(half_row), to_string(pow4)};
  } else if (shifted != pow4) {
    rep.id = IdentityId::Eq4;
    rep.witness = Witness{"sum 2^(n-i) C(n+i,i) vs 4^n", to_string(shifted), to_string(pow4)};
  } else {
    rep.id = IdentityId::Eq3;
    rep.note = "common value " + to_string(pow4);
  }
  return rep;
}

IdentityReport a34_display_check(const Int& a, const Int& n) {
  if (a != 3 && a != 4) throw std::invalid_argument("a34_display_check: a must be 3 or 4");
  const long nn = checked_n(n, "a34_display_check");
  IdentityReport rep;
  rep.id = a == 3 ? IdentityId::A3Forms : IdentityId::A4Forms;
  rep.params = {{"a", a}, {"n", n}};

  const Int conv = conv_p(a, n);
  Int d6(0), d7(0);
  const std::vector<Int> pw_am1 = power_table(Int(a - 1), nn);
  const std::vector<Int> pw_a = power_table(a, nn);
  for (long i = 0; i <= nn; ++i) {
    const long j = nn - i;
    d6 += pw_am1[static_cast<size_t>(i)] * binom_int(Int(a * n + 1), Int(j));
    d7 += pw_a[static_cast<size_t>(i)] * binom_int(Int((a - 1) * n + j), Int(j));
  }

  rep.holds = conv == d6 && conv == d7;
  if (conv != d6)
    rep.witness = Witness{"conv_p vs sum (a-1)^i C(an+1, j)", to_string(conv), to_string(d6)};
  else if (conv != d7)
    rep.witness = Witness{"conv_p vs sum a^i C((a-1)n+j, j)", to_string(conv), to_string(d7)};
  else
    rep.note = "value " + to_string(conv);
  return rep;
}

const char* to_string(EvalForm f) {
  switch (f) {
    case EvalForm::Naive: return "naive";
    case EvalForm::Eq6: return "eq6";
    case EvalForm::Eq7: return "eq7";
  }
  return "?";
}

Rat seq_value(EvalForm f, const Int& a, const Int& n, const Rat& k) {
  const long nn = checked_n(n, "seq_value");
  Rat total(0);
  switch (f) {
    case EvalForm::Naive: {
      for (long i = 0; i <= nn; ++i) {
        const long j = nn - i;
        Rat left = binom_rat(Rat(Int(a * i)) + k, Int(i));
        total += left * Rat(binom_int(Int(a * j), Int(j)));
      }
      break;
    }
    case EvalForm::Eq6: {
      const Rat y = Rat(Int(a * n + 1)) + k;
      const Int am1 = a - 1;
      Rat b(1);
      for (long i = 0; i <= nn; ++i) {
        if (i > 0) {
          Rat factor = y - (i - 1);
          b *= factor;
          b /= i;
        }
        total += Rat(pow0(am1, Int(nn - i))) * b;
      }
      break;
    }
    case EvalForm::Eq7: {
      const Rat x0 = Rat(Int((a - 1) * n)) + k;
      Rat b(1);
      for (long i = 0; i <= nn; ++i) {
        if (i > 0) {
          Rat factor = x0 + i;
          b *= factor;
          b /= i;
        }
        total += Rat(pow0(a, Int(nn - i))) * b;
      }
      break;
    }
  }
  return total;
}

std::vector<Int> form_series(EvalForm f, const Int& a, long n_max) {
  if (n_max < 0) throw std::domain_error("form_series: n_max must be >= 0");
  std::vector<Int> out;
  out.reserve(static_cast<size_t>(n_max) + 1);
  switch (f) {
    case EvalForm::Naive: {
      std::vector<Int> c(static_cast<size_t>(n_max) + 1);
      for (long i = 0; i <= n_max; ++i) c[static_cast<size_t>(i)] = binom_int(Int(a * i), Int(i));
      for (long m = 0; m <= n_max; ++m) {
        Int s(0);
        for (long i = 0; i <= m; ++i) s += c[static_cast<size_t>(i)] * c[static_cast<size_t>(m - i)];
        out.push_back(s);
      }
      break;
    }
    case EvalForm::Eq6: {
      const std::vector<Int> pw = power_table(Int(a - 1), n_max);
      for (long m = 0; m <= n_max; ++m) {
        const Int y = a * m + 1;
        Int b(1), s(0);
        for (long i = 0; i <= m; ++i) {
          if (i > 0) {
            b *= y - (i - 1);
            divexact_ui(b, static_cast<unsigned long>(i));
          }
          s += pw[static_cast<size_t>(m - i)] * b;
        }
        out.push_back(s);
      }
      break;
    }
    case EvalForm::Eq7: {
      const std::vector<Int> pw = power_table(a, n_max);
      for (long m = 0; m <= n_max; ++m) {
        const Int x0 = (a - 1) * m;
        Int b(1), s(0);
        for (long i = 0; i <= m; ++i) {
          if (i > 0) {
            b *= x0 + i;
            divexact_ui(b, static_cast<unsigned long>(i));
          }
          s += pw[static_cast<size_t>(m - i)] * b;
        }
        out.push_back(s);
      }
      break;
    }
  }
  return out;
}

}  // namespace binoconv
