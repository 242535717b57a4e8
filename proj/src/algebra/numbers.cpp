#include "irrwalk/algebra/numbers.hpp"

#include <cctype>
#include <string>

#include "irrwalk/errors.hpp"

namespace irrwalk {

std::string to_string(const Int& x) { return x.get_str(); }

std::string to_string(const Rat& x) { return x.get_str(); }

namespace {

bool is_integer_literal(std::string_view s) {
  if (s.empty()) return false;
  std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
  if (i == s.size()) return false;
  for (; i < s.size(); ++i)
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
  return true;
}

}  // namespace

Int parse_integer(std::string_view text) {
  if (!is_integer_literal(text)) throw InvalidArgument("malformed integer '" + std::string(text) + "'");
  std::string s(text);
  if (s[0] == '+') s.erase(0, 1);
  return Int(s, 10);
}

Rat parse_rational(std::string_view text) {
  auto slash = text.find('/');
  if (slash == std::string_view::npos) return Rat(parse_integer(text));
  Int num = parse_integer(text.substr(0, slash));
  auto den_text = text.substr(slash + 1);
  if (!den_text.empty() && (den_text[0] == '-' || den_text[0] == '+'))
    throw InvalidArgument("malformed rational '" + std::string(text) + "'");
  Int den = parse_integer(den_text);
  if (den == 0) throw InvalidArgument("zero denominator in '" + std::string(text) + "'");
  Rat r(num, den);
  r.canonicalize();
  return r;
}

Int pow(const Int& base, unsigned long exp) {
  Int r;
  mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), exp);
  return r;
}

Rat pow(const Rat& base, unsigned long exp) {
  Rat r(pow(base.get_num(), exp), pow(base.get_den(), exp));
  r.canonicalize();
  return r;
}

Int binomial(unsigned long n, unsigned long k) {
  Int r;
  mpz_bin_uiui(r.get_mpz_t(), n, k);
  return r;
}

Int floor(const Rat& x) {
  Int r;
  mpz_fdiv_q(r.get_mpz_t(), x.get_num_mpz_t(), x.get_den_mpz_t());
  return r;
}

Int ceil(const Rat& x) {
  Int r;
  mpz_cdiv_q(r.get_mpz_t(), x.get_num_mpz_t(), x.get_den_mpz_t());
  return r;
}

Rat mul_2exp(const Rat& x, long e) {
  Rat r;
  if (e >= 0)
    mpq_mul_2exp(r.get_mpq_t(), x.get_mpq_t(), static_cast<unsigned long>(e));
  else
    mpq_div_2exp(r.get_mpq_t(), x.get_mpq_t(), static_cast<unsigned long>(-e));
  return r;
}

double to_double(const Rat& x) { return x.get_d(); }

}  // namespace irrwalk
