#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "cphi/errors.hpp"
#include "cphi/phi.hpp"
#include "cphi/rational.hpp"
#include "cphi/window.hpp"

namespace cphi {

struct SearchLimits {
  std::size_t r_max = 100;
  std::uint64_t node_cap = std::uint64_t{1} << 20;
};

/// Result of a farPoint search.
///
/// Finite: the live set of fixed-point extensions first emptied at depth r,
/// so fP(x,k) = r exactly. ExceedsBound: extensions were still alive at depth
/// `bound` (or the node cap stopped the search there); fP >= bound, possibly
/// infinite.
struct FarPointOutcome {
  enum class Kind { Finite, ExceedsBound };

  Kind kind = Kind::Finite;
  std::size_t r = 0;
  std::size_t bound = 0;
  std::uint64_t nodes_explored = 0;
  std::uint64_t max_live_set = 0;
  bool node_cap_hit = false;

  bool finite() const noexcept { return kind == Kind::Finite; }

  friend bool operator==(const FarPointOutcome&, const FarPointOutcome&) = default;
};

/// Fixed-point extension tree search for fP(x, k).
///
/// Level r holds every p < 2^(k+r) extending x with Phi(p) == p mod 2^(k+r).
/// Each node carries Phi(p) mod 2^W and alpha(p), so appending a one digit at
/// position j subtracts 2^j 3^-(alpha+1) and appending a zero changes nothing.
/// W = k + r_max + 1 is fixed up front; Finite answers never depend on it.
inline FarPointOutcome farpoint(const Natural& x, std::size_t k, const SearchLimits& limits = {}) {
  if (x < 0 || x >= pow2(k)) {
    throw domain_error("farpoint: prefix " + x.get_str() + " does not fit in " + std::to_string(k) + " digits");
  }
  const std::size_t width = k + limits.r_max + 1;
  const Natural& inv3 = inverse_of_three(width);

  std::vector<Natural> inv3_powers{Natural(1)};  // inv3_powers[i] = 3^-i mod 2^W
  auto inv3_power = [&](std::size_t i) -> const Natural& {
    while (inv3_powers.size() <= i) inv3_powers.push_back(mod_pow2(inv3_powers.back() * inv3, width));
    return inv3_powers[i];
  };

  struct Node {
    Natural prefix;
    Natural phi;  // Phi(prefix) mod 2^W
    std::size_t ones;
  };

  FarPointOutcome out;
  Node root{x, phi_window(DigitWindow(x, width)).value(), alpha(x)};
  if (mod_pow2(root.phi - root.prefix, k) != 0) {
    out.kind = FarPointOutcome::Kind::Finite;
    out.r = 0;
    return out;
  }

  std::vector<Node> live{std::move(root)};
  std::vector<Node> next;
  out.nodes_explored = 1;
  out.max_live_set = 1;

  for (std::size_t r = 0; r < limits.r_max; ++r) {
    const std::size_t j = k + r;  // position of the digit being appended
    next.clear();
    for (const Node& node : live) {
      if (mod_pow2(node.phi - node.prefix, j + 1) == 0) next.push_back(node);

      Node one{node.prefix + pow2(j), mod_pow2(node.phi - (inv3_power(node.ones + 1) << j), width),
               node.ones + 1};
      if (mod_pow2(one.phi - node.phi, j) != 0) {
        throw std::logic_error("farpoint: appending digit " + std::to_string(j) + " changed lower digits of Phi");
      }
      if (mod_pow2(one.phi - one.prefix, j + 1) == 0) next.push_back(std::move(one));
    }
    live.swap(next);
    out.nodes_explored += live.size();
    out.max_live_set = std::max<std::uint64_t>(out.max_live_set, live.size());
    if (live.empty()) {
      out.kind = FarPointOutcome::Kind::Finite;
      out.r = r + 1;
      return out;
    }
    if (out.nodes_explored > limits.node_cap) {
      out.kind = FarPointOutcome::Kind::ExceedsBound;
      out.bound = r + 1;
      out.node_cap_hit = true;
      return out;
    }
  }
  out.kind = FarPointOutcome::Kind::ExceedsBound;
  out.bound = limits.r_max;
  return out;
}

/// A prefix: the first k digits of a 2-adic, as the natural x < 2^k.
struct Prefix {
  Natural x;
  std::size_t k = 0;

  friend bool operator==(const Prefix&, const Prefix&) = default;
};

enum class Family { MinusOne, ThirdA, ThirdB };

inline std::string family_name(Family f) {
  switch (f) {
    case Family::MinusOne: return "minus-one";
    case Family::ThirdA: return "third-a";
    case Family::ThirdB: return "third-b";
  }
  return "?";
}

inline std::optional<Family> parse_family(const std::string& name) {
  if (name == "minus-one") return Family::MinusOne;
  if (name == "third-a") return Family::ThirdA;
  if (name == "third-b") return Family::ThirdB;
  return std::nullopt;
}

/// n ones then a zero: (2^n - 1, n + 1).
inline Prefix family_minus_one(std::size_t n) { return {pow2(n) - 1, n + 1}; }

namespace detail {

// 1 + sum_{i=0}^{n} 2^(2i+1): the first 2n+2 digits of 1/3.
inline Natural third_head(std::size_t n) {
  Natural x = 1;
  for (std::size_t i = 0; i <= n; ++i) mpz_setbit(x.get_mpz_t(), 2 * i + 1);
  return x;
}

}  // namespace detail

/// Agrees with 1/3 through digit 2n+2, then a zero where 1/3 has a one.
inline Prefix family_third_a(std::size_t n) { return {detail::third_head(n), 2 * n + 4}; }

/// Agrees with 1/3 through digit 2n+1, then a one where 1/3 has a zero.
inline Prefix family_third_b(std::size_t n) { return {detail::third_head(n) + pow2(2 * n + 2), 2 * n + 3}; }

inline Prefix family_prefix(Family f, std::size_t n) {
  switch (f) {
    case Family::MinusOne: return family_minus_one(n);
    case Family::ThirdA: return family_third_a(n);
    case Family::ThirdB: return family_third_b(n);
  }
  throw domain_error("unknown family");
}

/// Index shift after which a finite farPoint f recurs: 2^H with
/// H = max(1, f-1) for the -1 family, 2^(H+1) for the 1/3 families.
inline Natural predicted_period(Family f, std::size_t farpoint_value) {
  const std::size_t h = std::max<std::size_t>(1, farpoint_value > 0 ? farpoint_value - 1 : 0);
  return pow2(f == Family::MinusOne ? h : h + 1);
}

/// A fixed point of Phi extending the prefix, if one of the known ones does:
/// 0, or 2^j * (-1) or 2^j * (1/3) for j < k.
inline std::optional<OddRational> known_fixed_point_extending(const Prefix& p) {
  if (p.x == 0) return OddRational(0);
  for (std::size_t j = 0; j < p.k; ++j) {
    for (const OddRational& base : {OddRational(-1), OddRational(1, 3)}) {
      const OddRational fixed = shift_left(base, j);
      const Integer den_inv = inv_odd(DigitWindow(fixed.denominator(), p.k)).value();
      if (mod_pow2(fixed.numerator() * den_inv, p.k) == p.x) return fixed;
    }
  }
  return std::nullopt;
}

}  // namespace cphi
