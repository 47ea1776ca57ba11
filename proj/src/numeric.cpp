#include "compcov/numeric.hpp"

#include <stdexcept>

namespace compcov {

std::string to_fraction_string(const ExactRational& q) {
  ExactRational c = q;
  c.canonicalize();
  return c.get_str();
}

ExactRational parse_fraction(const std::string& text) {
  ExactRational q;
  if (q.set_str(text, 10) != 0 || q.get_den() == 0)
    throw std::invalid_argument("not a rational: " + text);
  q.canonicalize();
  return q;
}

Real to_real(const ExactInteger& z) {
  Real r;
  mpfr_set_z(r.backend().data(), z.get_mpz_t(), MPFR_RNDN);
  return r;
}

Real to_real(const ExactRational& q) {
  Real r;
  mpfr_set_q(r.backend().data(), q.get_mpq_t(), MPFR_RNDN);
  return r;
}

std::string to_fixed(const Real& x, int places) {
  if (places < 0) throw std::invalid_argument("negative decimal places");
  char* buf = nullptr;
  if (mpfr_asprintf(&buf, "%.*RNf", places, x.backend().data()) < 0) throw std::runtime_error("formatting failed");
  std::string out(buf);
  mpfr_free_str(buf);
  return out;
}

std::string sqrt_to_fixed(const ExactRational& r, int places) {
  if (sgn(r) < 0) throw std::domain_error("sqrt of a negative rational");
  if (places < 0) throw std::invalid_argument("negative decimal places");
  ExactInteger scale;
  mpz_ui_pow_ui(scale.get_mpz_t(), 10, 2 * static_cast<unsigned long>(places));
  const ExactInteger num = r.get_num() * scale;
  const ExactInteger& den = r.get_den();

  ExactInteger floor_t = num / den;
  ExactInteger k;
  mpz_sqrt(k.get_mpz_t(), floor_t.get_mpz_t());
  // Round sqrt(num/den) to the nearest integer: compare with k + 1/2 exactly.
  const ExactInteger lhs = 4 * num;
  const ExactInteger odd = 2 * k + 1;
  const ExactInteger rhs = odd * odd * den;
  const int cmp_half = cmp(lhs, rhs);
  if (cmp_half > 0 || (cmp_half == 0 && mpz_odd_p(k.get_mpz_t()))) k += 1;

  std::string digits = k.get_str();
  if (places == 0) return digits;
  if (static_cast<int>(digits.size()) <= places)
    digits.insert(0, static_cast<std::size_t>(places + 1 - static_cast<int>(digits.size())), '0');
  digits.insert(digits.size() - static_cast<std::size_t>(places), ".");
  return digits;
}

}  // namespace compcov
