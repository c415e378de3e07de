#include "binoconv/numeric.hpp"

#include <stdexcept>

namespace binoconv {

Int exact_div(const Int& n, const Int& d) {
  if (d == 0) throw std::domain_error("exact_div: division by zero");
  if (!mpz_divisible_p(n.get_mpz_t(), d.get_mpz_t()))
    throw std::domain_error("exact_div: " + to_string(n) + " not divisible by " + to_string(d));
  Int q;
  mpz_divexact(q.get_mpz_t(), n.get_mpz_t(), d.get_mpz_t());
  return q;
}

Int pow0(const Int& b, const Int& e) {
  if (e < 0) throw std::domain_error("pow0: negative exponent");
  const unsigned long ul = static_cast<unsigned long>(to_long(e, "pow0 exponent"));
  Int r;
  mpz_pow_ui(r.get_mpz_t(), b.get_mpz_t(), ul);  // GMP defines 0^0 = 1
  return r;
}

Rat rat_pow(const Rat& b, unsigned long e) {
  Rat r;
  mpz_pow_ui(mpq_numref(r.get_mpq_t()), mpq_numref(b.get_mpq_t()), e);
  mpz_pow_ui(mpq_denref(r.get_mpq_t()), mpq_denref(b.get_mpq_t()), e);
  return r;  // powers of a canonical rational stay canonical
}

Rat make_rat(const Int& num, const Int& den) {
  if (den == 0) throw std::domain_error("make_rat: zero denominator");
  Rat r(num, den);
  r.canonicalize();
  return r;
}

Rat parse_rat(const std::string& text) {
  if (text.empty()) throw std::invalid_argument("parse_rat: empty string");
  const auto digits = [](const std::string& s, size_t from) {
    if (from >= s.size()) return false;
    for (size_t i = from; i < s.size(); ++i)
      if (s[i] < '0' || s[i] > '9') return false;
    return true;
  };
  const auto slash = text.find('/');
  std::string num = (slash == std::string::npos) ? text : text.substr(0, slash);
  std::string den = (slash == std::string::npos) ? "1" : text.substr(slash + 1);
  if (!digits(num, num[0] == '-' ? 1 : 0) || !digits(den, 0))
    throw std::invalid_argument("parse_rat: malformed rational '" + text + "'");
  return make_rat(Int(num), Int(den));
}

std::string to_string(const Int& v) { return v.get_str(); }

std::string to_string(const Rat& v) {
  if (v.get_den() == 1) return v.get_num().get_str();
  return v.get_num().get_str() + "/" + v.get_den().get_str();
}

long to_long(const Int& v, const char* what) {
  if (!v.fits_slong_p()) throw std::overflow_error(std::string(what) + ": value out of range");
  return v.get_si();
}

}  // namespace binoconv
