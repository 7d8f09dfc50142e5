#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

namespace trinomial {

/// Arbitrary-precision signed integer. Expression templates are disabled so
/// that `a + b` is an ExactInt and generic ring code sees a plain value type.
using ExactInt = boost::multiprecision::number<boost::multiprecision::cpp_int_backend<>,
                                               boost::multiprecision::et_off>;

class exact_division_error : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Quotient of `dividend / divisor`, throwing when the division is not exact.
inline ExactInt exact_div(const ExactInt& dividend, const ExactInt& divisor) {
  if (divisor == 0) {
    throw exact_division_error("exact_div: division by zero");
  }
  ExactInt quotient;
  ExactInt remainder;
  boost::multiprecision::divide_qr(dividend, divisor, quotient, remainder);
  if (remainder != 0) {
    throw exact_division_error("exact_div: " + dividend.str() + " is not divisible by " +
                               divisor.str());
  }
  return quotient;
}

inline ExactInt ipow(ExactInt base, std::uint64_t exponent) {
  ExactInt result = 1;
  while (exponent != 0) {
    if (exponent & 1U) result *= base;
    exponent >>= 1U;
    if (exponent != 0) base *= base;
  }
  return result;
}

inline ExactInt binomial(std::int64_t n, std::int64_t k) {
  if (n < 0 || k < 0 || k > n) return 0;
  if (k > n - k) k = n - k;
  ExactInt result = 1;
  for (std::int64_t i = 1; i <= k; ++i) {
    result *= n - k + i;
    result /= i;  // exact: result holds C(n-k+i, i) after this step
  }
  return result;
}

/// (-1)^n as an ExactInt.
inline ExactInt sign_power(std::int64_t n) { return (n % 2 == 0) ? ExactInt(1) : ExactInt(-1); }

/// Parses an optionally signed decimal literal; rejects anything else.
inline ExactInt parse_exact_int(std::string_view text) {
  std::string_view digits = text;
  if (!digits.empty() && (digits.front() == '-' || digits.front() == '+')) digits.remove_prefix(1);
  if (digits.empty()) throw std::invalid_argument("not an integer: '" + std::string(text) + "'");
  for (char c : digits) {
    if (c < '0' || c > '9') throw std::invalid_argument("not an integer: '" + std::string(text) + "'");
  }
  ExactInt value(std::string{digits});
  return text.front() == '-' ? ExactInt(-value) : value;
}

inline std::string to_string(const ExactInt& value) { return value.str(); }

}  // namespace trinomial
