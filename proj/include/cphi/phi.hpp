#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <map>
#include <mutex>
#include <shared_mutex>

#include "cphi/periodic.hpp"
#include "cphi/rational.hpp"
#include "cphi/window.hpp"

// The conjugacy Phi with Phi o sigma = T o Phi. For a 2-adic with one digits
// at positions e_0 < e_1 < ...,
//
//     Phi(x) = -sum_i 2^{e_i} 3^{-(i+1)}
//
// Note the exponent -(i+1): it is the form under which Phi(-1) = -1,
// Phi(1/3) = 1/3 and Phi(1) == 5 mod 8. The parity-vector oracle tests pin it.

namespace cphi {

/// 3^-1 mod 2^K, computed once per precision. Entries are never modified
/// after insertion, so returned references stay valid and readers only share
/// the lock.
inline const Natural& inverse_of_three(std::size_t precision) {
  static std::map<std::size_t, Natural> cache;
  static std::shared_mutex mutex;
  {
    std::shared_lock lock(mutex);
    if (auto it = cache.find(precision); it != cache.end()) return it->second;
  }
  Natural inv = inv_odd(DigitWindow(3, precision)).value();
  std::unique_lock lock(mutex);
  return cache.try_emplace(precision, std::move(inv)).first->second;
}

/// Phi mod 2^K. Only the window's digits enter the sum (solenoidality).
inline DigitWindow phi_window(const DigitWindow& x) {
  const std::size_t k = x.precision();
  if (k == 0) return {};
  const Natural& inv3 = inverse_of_three(k);
  Natural weight = inv3;  // 3^-(i+1)
  Natural sum = 0;
  const mpz_srcptr xv = x.value().get_mpz_t();
  for (mp_bitcnt_t e = mpz_scan1(xv, 0); e < k; e = mpz_scan1(xv, e + 1)) {
    sum += weight << e;
    weight = mod_pow2(weight * inv3, k);
  }
  return DigitWindow(-sum, k);
}

namespace detail {

// sum_j 2^{e_j} 3^{m-1-j} over the one positions of a natural, by Horner.
inline Natural bernstein_numerator(const Natural& a) {
  Natural acc = 0;
  const mpz_srcptr av = a.get_mpz_t();
  if (a == 0) return acc;
  for (mp_bitcnt_t e = mpz_scan1(av, 0); e != ~mp_bitcnt_t{0}; e = mpz_scan1(av, e + 1)) {
    acc = 3 * acc + pow2(e);
  }
  return acc;
}

inline Natural pow3(std::size_t m) {
  Natural r;
  mpz_ui_pow_ui(r.get_mpz_t(), 3, m);
  return r;
}

}  // namespace detail

/// Exact Phi of a natural number: -(sum_j 2^{e_j} 3^{m-1-j}) / 3^m, m = alpha(a).
inline OddRational phi_natural(const Natural& a) {
  if (a < 0) throw domain_error("phi_natural: negative argument");
  if (a == 0) return OddRational(0);
  return OddRational(-detail::bernstein_numerator(a), detail::pow3(alpha(a)));
}

/// Exact Phi of the purely periodic 2-adic bbar_{v,inf}:
/// Phi(b) * 3^m / (3^m - 2^v) with m = alpha(b).
inline OddRational phi_repeating_block(const Natural& b, std::size_t v) {
  detail::require_block(b, v, "phi_repeating_block");
  const std::size_t m = alpha(b);
  return OddRational(-detail::bernstein_numerator(b), detail::pow3(m) - pow2(v));
}

/// Exact Phi on Q_odd through q = a + 2^k bbar_{v,inf}:
/// Phi(q) = Phi(a) + 2^k Phi(bbar_{v,inf}) / 3^alpha(a).
inline OddRational phi_of_decomposition(const Natural& a, std::size_t k, const Natural& b, std::size_t v) {
  if (a < 0 || a >= pow2(k)) throw domain_error("phi: preperiod value does not fit in k digits");
  const OddRational tail = phi_repeating_block(b, v);
  return phi_natural(a) + OddRational(pow2(k) * tail.numerator(), detail::pow3(alpha(a)) * tail.denominator());
}

inline OddRational phi_rational(const OddRational& q) {
  if (q.is_integer() && q.numerator() >= 0) return phi_natural(q.numerator());
  const PeriodicDigits p = rational_to_periodic(q);
  return phi_of_decomposition(p.a(), p.k(), p.b(), p.v());
}

}  // namespace cphi
