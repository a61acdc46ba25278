#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "cphi/errors.hpp"
#include "cphi/rational.hpp"
#include "cphi/window.hpp"

namespace cphi {

using Bits = std::vector<std::uint8_t>;  // LSB first, each entry 0 or 1

/// Number of one digits of a natural.
inline std::size_t alpha(const Natural& x) {
  if (x < 0) throw domain_error("alpha: negative argument");
  return mpz_popcount(x.get_mpz_t());
}

inline Natural bits_to_natural(const Bits& bits) {
  Natural r = 0;
  for (std::size_t i = 0; i < bits.size(); ++i) {
    if (bits[i]) mpz_setbit(r.get_mpz_t(), i);
  }
  return r;
}

inline Bits natural_to_bits(const Natural& x, std::size_t length) {
  Bits bits(length);
  for (std::size_t i = 0; i < length; ++i) bits[i] = test_bit(x, i) ? 1 : 0;
  return bits;
}

namespace detail {

inline void require_block(const Natural& b, std::size_t v, const char* op) {
  if (v == 0) throw domain_error(std::string(op) + ": block length v must be >= 1");
  if (b < 0 || b >= pow2(v)) {
    throw domain_error(std::string(op) + ": block " + b.get_str() + " does not fit in " +
                       std::to_string(v) + " bits");
  }
}

}  // namespace detail

/// t copies of the v-bit block b.
inline Natural bbar_finite(const Natural& b, std::size_t v, std::size_t t) {
  detail::require_block(b, v, "bbar_finite");
  Natural r = 0;
  for (std::size_t i = 0; i < t; ++i) r += b << static_cast<mp_bitcnt_t>(v * i);
  return r;
}

/// The infinite repetition of the block, -b/(2^v - 1).
inline OddRational bbar_infinite(const Natural& b, std::size_t v) {
  detail::require_block(b, v, "bbar_infinite");
  return OddRational(-b, pow2(v) - 1);
}

/// Residue q Mod 2^K, computed as numerator * denominator^-1.
inline DigitWindow rational_window(const OddRational& q, std::size_t precision) {
  if (precision == 0) return {};
  const DigitWindow den_inv = inv_odd(DigitWindow(q.denominator(), precision));
  return DigitWindow(q.numerator() * den_inv.value(), precision);
}

/// L_k(q): the first k digits as the least natural residue.
inline Natural left_part(const OddRational& q, std::size_t k) {
  return rational_window(q, k).value();
}

/// R_k(q) = sigma^k(q), so that q = L_k(q) + 2^k R_k(q).
inline OddRational right_part(const OddRational& q, std::size_t k) {
  if (k == 0) return q;
  return (q - OddRational(left_part(q, k))) / OddRational(pow2(k));
}

/// Eventually periodic digit expansion: `preperiod` followed by `period`
/// repeated forever. Represents a + 2^k * bbar_infinite(b, v).
struct PeriodicDigits {
  Bits preperiod;
  Bits period{0};

  std::size_t k() const { return preperiod.size(); }
  std::size_t v() const { return period.size(); }
  Natural a() const { return bits_to_natural(preperiod); }
  Natural b() const { return bits_to_natural(period); }

  friend bool operator==(const PeriodicDigits&, const PeriodicDigits&) = default;
};

inline OddRational periodic_to_rational(const PeriodicDigits& p) {
  if (p.period.empty()) throw domain_error("periodic_to_rational: empty period");
  return OddRational(p.a()) + shift_left(bbar_infinite(p.b(), p.v()), p.k());
}

/// Canonical expansion with minimal preperiod, then minimal period.
///
/// With q = n/d (d odd, fixed), sigma maps n to (n - d_0 d)/2. The expansion
/// is purely periodic exactly when -d <= n <= 0, and states inside that
/// interval never leave it, so the first state in range starts the period and
/// its first recurrence closes it.
inline PeriodicDigits rational_to_periodic(const OddRational& q) {
  const Integer d = q.denominator();
  const Integer neg_d = -d;
  Integer n = q.numerator();
  PeriodicDigits out;
  out.period.clear();

  auto step = [&](Bits& sink) {
    const bool bit = mpz_odd_p(n.get_mpz_t()) != 0;
    sink.push_back(bit ? 1 : 0);
    if (bit) n -= d;
    mpz_fdiv_q_2exp(n.get_mpz_t(), n.get_mpz_t(), 1);
  };

  while (n > 0 || n < neg_d) step(out.preperiod);
  const Integer start = n;
  do {
    step(out.period);
  } while (n != start);
  return out;
}

inline OddRational right_part(const PeriodicDigits& p, std::size_t k) {
  return right_part(periodic_to_rational(p), k);
}

}  // namespace cphi
