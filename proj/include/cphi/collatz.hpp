#pragma once

#include <cstddef>

#include "cphi/errors.hpp"
#include "cphi/rational.hpp"
#include "cphi/window.hpp"

namespace cphi {

/// The 3x+1 map: (3x+1)/2 on odd 2-adics, x/2 on even ones.
inline OddRational t_map(const OddRational& x) {
  if (x.is_odd()) return (OddRational(3) * x + OddRational(1)) / OddRational(2);
  return x / OddRational(2);
}

/// The shift: drops digit d_0.
inline OddRational sigma_map(const OddRational& x) {
  if (x.is_odd()) return (x - OddRational(1)) / OddRational(2);
  return x / OddRational(2);
}

/// Digit i is T^i(x) Mod 2; the window is Phi^-1(x) truncated.
struct ParityVector {
  DigitWindow window;
};

inline ParityVector parity_vector(const OddRational& x, std::size_t precision) {
  Natural bits = 0;
  OddRational y = x;
  for (std::size_t i = 0; i < precision; ++i) {
    if (y.is_odd()) mpz_setbit(bits.get_mpz_t(), i);
    if (i + 1 < precision) y = t_map(y);
  }
  return {DigitWindow(bits, precision)};
}

/// T on a window. Halving consumes a digit, so the result has precision K-1.
inline DigitWindow t_map_window(const DigitWindow& x) {
  const std::size_t k = x.precision();
  if (k == 0) throw precision_error("t_map_window: empty window");
  Integer y = x.value();
  if (x.is_odd()) y = 3 * y + 1;
  mpz_fdiv_q_2exp(y.get_mpz_t(), y.get_mpz_t(), 1);
  return DigitWindow(y, k - 1);
}

/// sigma on a window; also consumes a digit.
inline DigitWindow sigma_window(const DigitWindow& x) {
  const std::size_t k = x.precision();
  if (k == 0) throw precision_error("sigma_window: empty window");
  Integer y = x.value();
  mpz_fdiv_q_2exp(y.get_mpz_t(), y.get_mpz_t(), 1);
  return DigitWindow(y, k - 1);
}

}  // namespace cphi
