#include "dsort/exact.hpp"

#include <stdexcept>

namespace dsort {

BigInt factorial(std::size_t n) {
  BigInt out;
  mpz_fac_ui(out.get_mpz_t(), n);
  return out;
}

std::string to_fraction_string(const Rational& q) {
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

std::string to_decimal_string(const Rational& q, int digits) {
  if (digits < 0) throw std::invalid_argument("negative digit count");
  BigInt scale;
  mpz_ui_pow_ui(scale.get_mpz_t(), 10, static_cast<unsigned long>(digits));

  const bool negative = sgn(q) < 0;
  const BigInt num = abs(q.get_num()) * scale;
  const BigInt& den = q.get_den();
  BigInt whole;
  BigInt rem;
  mpz_fdiv_qr(whole.get_mpz_t(), rem.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
  const int cmp_half = cmp(BigInt(2 * rem), den);
  if (cmp_half > 0 || (cmp_half == 0 && mpz_odd_p(whole.get_mpz_t()))) ++whole;

  std::string s = whole.get_str();
  if (digits > 0) {
    if (s.size() <= static_cast<std::size_t>(digits)) {
      s.insert(0, static_cast<std::size_t>(digits) + 1 - s.size(), '0');
    }
    s.insert(s.size() - static_cast<std::size_t>(digits), ".");
  }
  if (negative && whole != 0) s.insert(0, "-");
  return s;
}

double to_double(const Rational& q) { return q.get_d(); }

}  // namespace dsort
