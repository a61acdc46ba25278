#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <string>

#include "cphi/errors.hpp"

namespace cphi {

using Integer = mpz_class;
using Natural = mpz_class;  // non-negative by convention

inline Natural pow2(std::size_t k) {
  Natural r;
  mpz_setbit(r.get_mpz_t(), k);
  return r;
}

// Least natural residue of x mod 2^k (also for negative x).
inline Natural mod_pow2(const Integer& x, std::size_t k) {
  Natural r;
  mpz_fdiv_r_2exp(r.get_mpz_t(), x.get_mpz_t(), k);
  return r;
}

inline bool test_bit(const Natural& x, std::size_t i) {
  return mpz_tstbit(x.get_mpz_t(), i) != 0;
}

/// A 2-adic integer known through its first `precision` binary digits.
///
/// The stored value is always the least natural representative, so
/// 0 <= value < 2^precision. Digit i of the value is digit d_i of every
/// 2-adic extending the window.
class DigitWindow {
 public:
  DigitWindow() = default;
  DigitWindow(const Integer& value, std::size_t precision)
      : value_(mod_pow2(value, precision)), precision_(precision) {}

  const Natural& value() const noexcept { return value_; }
  std::size_t precision() const noexcept { return precision_; }

  bool digit(std::size_t i) const {
    if (i >= precision_) {
      throw precision_error("digit " + std::to_string(i) + " outside window of precision " +
                            std::to_string(precision_));
    }
    return test_bit(value_, i);
  }

  bool is_odd() const noexcept { return precision_ > 0 && test_bit(value_, 0); }

  DigitWindow truncate(std::size_t k) const {
    if (k > precision_) {
      throw precision_error("cannot truncate precision " + std::to_string(precision_) +
                            " to " + std::to_string(k));
    }
    return DigitWindow(value_, k);
  }

  friend bool operator==(const DigitWindow& a, const DigitWindow& b) {
    return a.precision_ == b.precision_ && a.value_ == b.value_;
  }

 private:
  Natural value_ = 0;
  std::size_t precision_ = 0;
};

namespace detail {

inline void require_same_precision(const DigitWindow& x, const DigitWindow& y, const char* op) {
  if (x.precision() != y.precision()) {
    throw precision_error(std::string(op) + ": precision mismatch (" +
                          std::to_string(x.precision()) + " vs " +
                          std::to_string(y.precision()) + ")");
  }
}

}  // namespace detail

inline DigitWindow window_add(const DigitWindow& x, const DigitWindow& y) {
  detail::require_same_precision(x, y, "window_add");
  return DigitWindow(x.value() + y.value(), x.precision());
}

inline DigitWindow window_sub(const DigitWindow& x, const DigitWindow& y) {
  detail::require_same_precision(x, y, "window_sub");
  return DigitWindow(x.value() - y.value(), x.precision());
}

inline DigitWindow window_mul(const DigitWindow& x, const DigitWindow& y) {
  detail::require_same_precision(x, y, "window_mul");
  return DigitWindow(x.value() * y.value(), x.precision());
}

inline DigitWindow operator+(const DigitWindow& x, const DigitWindow& y) { return window_add(x, y); }
inline DigitWindow operator-(const DigitWindow& x, const DigitWindow& y) { return window_sub(x, y); }
inline DigitWindow operator*(const DigitWindow& x, const DigitWindow& y) { return window_mul(x, y); }

/// Inverse of an odd residue mod 2^K by Newton iteration; each step doubles
/// the number of correct low bits, starting from 3 (x*x == 1 mod 8 for odd x).
inline DigitWindow inv_odd(const DigitWindow& x) {
  const std::size_t k = x.precision();
  if (k == 0) return x;
  if (!x.is_odd()) throw domain_error("inv_odd: even residue has no inverse mod 2^K");
  Natural y = x.value();
  for (std::size_t bits = 3; bits < k; bits *= 2) {
    Natural t = mod_pow2(x.value() * y, k);
    y = mod_pow2(y * (2 - t), k);
  }
  return DigitWindow(y, k);
}

/// L_k: least natural congruent to the window mod 2^k.
inline Natural left_part(const DigitWindow& x, std::size_t k) {
  if (k > x.precision()) {
    throw precision_error("left_part: k=" + std::to_string(k) + " exceeds window precision " +
                          std::to_string(x.precision()));
  }
  return mod_pow2(x.value(), k);
}

}  // namespace cphi
