#pragma once

#include <cstddef>
#include <string>

#include "cphi/errors.hpp"
#include "cphi/periodic.hpp"
#include "cphi/phi.hpp"
#include "cphi/rational.hpp"
#include "cphi/window.hpp"

// Instance checkers for the algebraic identities of Phi. Every side is
// evaluated exactly; a false return is a counterexample.

namespace cphi {

/// Phi(a + 2^k x) == Phi(a) + 2^k Phi(x) / 3^alpha(a), for a < 2^k.
inline bool check_pseudohomo(const Natural& a, std::size_t k, const OddRational& x) {
  if (a < 0 || a >= pow2(k)) throw domain_error("check_pseudohomo: requires 0 <= a < 2^k");
  const OddRational lhs = phi_rational(OddRational(a) + shift_left(x, k));
  const OddRational rhs =
      phi_rational(OddRational(a)) + shift_left(phi_rational(x), k) / OddRational(detail::pow3(alpha(a)));
  return lhs == rhs;
}

/// 3^(2^n) == 1 mod 2^(n+2), by n modular squarings.
inline bool check_3power(std::size_t n) {
  if (n == 0) throw domain_error("check_3power: n must be positive");
  Natural x = 3;
  for (std::size_t i = 0; i < n; ++i) x = mod_pow2(x * x, n + 2);
  return x == 1;
}

/// Phi(a + 2^k bbar_{v,t}) == Phi(q) - 2^(k+tv) Phi(bbar_{v,inf}) / 3^(mt + alpha(a))
/// with q = a + 2^k bbar_{v,inf} and m = alpha(b). The left side is Phi of a
/// natural number; the right side uses the closed forms.
inline bool check_truncation_identity(const Natural& a, std::size_t k, const Natural& b, std::size_t v,
                                      std::size_t t) {
  if (a < 0 || a >= pow2(k)) throw domain_error("check_truncation_identity: requires 0 <= a < 2^k");
  detail::require_block(b, v, "check_truncation_identity");
  if (t == 0) throw domain_error("check_truncation_identity: t must be positive");
  const OddRational lhs = phi_natural(a + (bbar_finite(b, v, t) << static_cast<mp_bitcnt_t>(k)));
  const OddRational q = OddRational(a) + shift_left(bbar_infinite(b, v), k);
  const OddRational block = phi_repeating_block(b, v);
  const std::size_t exponent = alpha(b) * t + alpha(a);
  const OddRational rhs =
      phi_rational(q) - shift_left(block, k + t * v) / OddRational(detail::pow3(exponent));
  return lhs == rhs;
}

/// Preperiod and period lengths of the canonical expansions of q and Phi(q).
struct TailShape {
  std::size_t k = 0;  // preperiod length of q
  std::size_t v = 1;  // period length of q
  std::size_t u = 0;  // preperiod length of Phi(q)
  std::size_t p = 1;  // period length of Phi(q)

  /// Smallest t with k + t v >= u.
  std::size_t min_t() const { return u > k ? (u - k + v - 1) / v : 0; }
};

inline TailShape tail_shape(const OddRational& q) {
  const PeriodicDigits in = rational_to_periodic(q);
  const PeriodicDigits out = rational_to_periodic(phi_rational(q));
  return {in.k(), in.v(), out.k(), out.v()};
}

/// R_c Phi L_c(q): the tail beyond c digits of Phi of the c-digit truncation.
inline OddRational truncated_tail(const OddRational& q, std::size_t c) {
  return right_part(phi_natural(left_part(q, c)), c);
}

/// R_{k+tv} Phi L_{k+tv}(q) == R_{k+(t+p 2^H)v} Phi L_{k+(t+p 2^H)v}(q) mod 2^(H+2),
/// with (k, v) from q's canonical expansion and (u, p) from Phi(q)'s.
inline bool check_tail_congruence(const OddRational& q, std::size_t t, std::size_t h) {
  if (h == 0) throw domain_error("check_tail_congruence: H must be positive");
  const TailShape s = tail_shape(q);
  if (s.k + t * s.v < s.u) {
    throw domain_error("check_tail_congruence: k + t v < u for q = " + q.str() + "; need t >= " +
                       std::to_string(s.min_t()));
  }
  const std::size_t c1 = s.k + t * s.v;
  const std::size_t c2 = s.k + (t + s.p * (std::size_t{1} << h)) * s.v;
  return rational_window(truncated_tail(q, c1), h + 2) == rational_window(truncated_tail(q, c2), h + 2);
}

}  // namespace cphi
