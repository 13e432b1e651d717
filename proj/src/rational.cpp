#include "degbound/rational.hpp"

#include <sstream>

#include "degbound/errors.hpp"

namespace degbound {

BigInt falling_factorial(const BigInt& x, long long i) {
  if (i < 0) fail(ErrorKind::domain_error, "falling factorial needs i >= 0");
  BigInt result = 1;
  BigInt factor = x;
  for (long long j = 0; j < i; ++j) {
    result *= factor;
    if (result == 0) break;
    factor -= 1;
  }
  return result;
}

BigInt floor_rational(const Rational& q) {
  BigInt out;
  mpz_fdiv_q(out.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  return out;
}

long long floor_to_ll(const Rational& q) {
  BigInt f = floor_rational(q);
  if (!f.fits_slong_p()) fail(ErrorKind::range_error, "floor does not fit in a machine word");
  return f.get_si();
}

std::string rational_to_string(const Rational& q) {
  if (q.get_den() == 1) return q.get_num().get_str();
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

Rational rational_from_string(const std::string& s) {
  auto slash = s.find('/');
  try {
    BigInt num(slash == std::string::npos ? s : s.substr(0, slash));
    BigInt den(slash == std::string::npos ? std::string("1") : s.substr(slash + 1));
    if (den == 0) fail(ErrorKind::parse_error, "zero denominator in '" + s + "'");
    return make_rational(num, den);
  } catch (const std::invalid_argument&) {
    fail(ErrorKind::parse_error, "malformed rational '" + s + "'");
  }
}

std::string rational_to_decimal(const Rational& q, int significant_digits) {
  if (significant_digits < 1) significant_digits = 1;
  if (q == 0) return "0";
  const bool negative = q < 0;
  BigInt a = abs(q.get_num());
  BigInt b = q.get_den();

  // Decimal exponent e with |q| in [10^e, 10^{e+1}).
  long e = static_cast<long>(mpz_sizeinbase(a.get_mpz_t(), 10)) -
           static_cast<long>(mpz_sizeinbase(b.get_mpz_t(), 10));
  auto cmp_pow = [&](long k) {
    // sign of |q| - 10^k
    BigInt lhs = a, rhs = b;
    if (k >= 0) {
      BigInt p;
      mpz_ui_pow_ui(p.get_mpz_t(), 10, static_cast<unsigned long>(k));
      rhs *= p;
    } else {
      BigInt p;
      mpz_ui_pow_ui(p.get_mpz_t(), 10, static_cast<unsigned long>(-k));
      lhs *= p;
    }
    return cmp(lhs, rhs);
  };
  while (cmp_pow(e) < 0) --e;
  while (cmp_pow(e + 1) >= 0) ++e;

  // Round a/b * 10^(digits-1-e) to the nearest integer (ties away from zero).
  long shift = significant_digits - 1 - e;
  BigInt num = a, den = b;
  if (shift >= 0) {
    BigInt p;
    mpz_ui_pow_ui(p.get_mpz_t(), 10, static_cast<unsigned long>(shift));
    num *= p;
  } else {
    BigInt p;
    mpz_ui_pow_ui(p.get_mpz_t(), 10, static_cast<unsigned long>(-shift));
    den *= p;
  }
  BigInt digits = (2 * num + den) / (2 * den);
  std::string ds = digits.get_str();
  if (static_cast<int>(ds.size()) > significant_digits) {
    // rounding carried into a new leading digit
    ds.pop_back();
    ++e;
  }

  std::ostringstream out;
  if (negative) out << '-';
  if (e >= significant_digits || e >= 15 || e < -5) {
    out << ds.substr(0, 1);
    std::string frac = ds.substr(1);
    while (!frac.empty() && frac.back() == '0') frac.pop_back();
    if (!frac.empty()) out << '.' << frac;
    out << 'e' << (e >= 0 ? "+" : "") << e;
  } else if (e >= 0) {
    out << ds.substr(0, e + 1);
    std::string frac = ds.substr(e + 1);
    while (!frac.empty() && frac.back() == '0') frac.pop_back();
    if (!frac.empty()) out << '.' << frac;
  } else {
    out << "0.";
    for (long i = 0; i < -e - 1; ++i) out << '0';
    std::string frac = ds;
    while (frac.size() > 1 && frac.back() == '0') frac.pop_back();
    out << frac;
  }
  return out.str();
}

}  // namespace degbound
