#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <variant>

#include "cphi/errors.hpp"
#include "cphi/periodic.hpp"
#include "cphi/rational.hpp"
#include "cphi/window.hpp"

// Text formats. Digit strings are LSB first, mirroring 1/3 = 1101010...:
//   "1(10)"   eventually periodic expansion, parenthesized block repeats
//   "1101..." a window; the known digits followed by "..." (or U+2026)
//   "-7/3"    a rational; an optional sign (ASCII or U+2212) and "/den"

namespace cphi {

inline std::string format_bits(const Bits& bits) {
  std::string s;
  s.reserve(bits.size());
  for (auto b : bits) s.push_back(b ? '1' : '0');
  return s;
}

inline std::string format_periodic(const PeriodicDigits& p) {
  return format_bits(p.preperiod) + "(" + format_bits(p.period) + ")";
}

/// The window's digits, LSB first, without the trailing marker.
inline std::string format_window_digits(const DigitWindow& w) {
  return format_bits(natural_to_bits(w.value(), w.precision()));
}

inline std::string format_window(const DigitWindow& w) { return format_window_digits(w) + "..."; }

inline std::string format_rational(const OddRational& q) { return q.str(); }

namespace detail {

inline constexpr std::string_view kUnicodeMinus = "\xE2\x88\x92";
inline constexpr std::string_view kEllipsis = "\xE2\x80\xA6";

inline bool is_bit(char c) { return c == '0' || c == '1'; }

inline bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (c < '0' || c > '9') return false;
  }
  return true;
}

}  // namespace detail

inline PeriodicDigits parse_periodic(std::string_view text) {
  PeriodicDigits p;
  p.period.clear();
  std::size_t i = 0;
  for (; i < text.size() && detail::is_bit(text[i]); ++i) p.preperiod.push_back(text[i] - '0');
  if (i == text.size() || text[i] != '(') throw parse_error("expected '(' opening the repeating block", i);
  ++i;
  for (; i < text.size() && detail::is_bit(text[i]); ++i) p.period.push_back(text[i] - '0');
  if (i == text.size() || text[i] != ')') throw parse_error("expected binary digit or ')'", i);
  if (p.period.empty()) throw parse_error("empty repeating block", i);
  if (i + 1 != text.size()) throw parse_error("trailing characters after ')'", i + 1);
  return p;
}

inline DigitWindow parse_window(std::string_view text) {
  std::string_view body = text;
  if (body.ends_with("...")) {
    body.remove_suffix(3);
  } else if (body.ends_with(detail::kEllipsis)) {
    body.remove_suffix(detail::kEllipsis.size());
  } else {
    throw parse_error("window digits must end with '...'", text.size());
  }
  Natural v = 0;
  for (std::size_t i = 0; i < body.size(); ++i) {
    if (!detail::is_bit(body[i])) throw parse_error("expected binary digit", i);
    if (body[i] == '1') mpz_setbit(v.get_mpz_t(), i);
  }
  return DigitWindow(v, body.size());
}

inline OddRational parse_rational(std::string_view text) {
  std::size_t pos = 0;
  bool negative = false;
  if (text.starts_with(detail::kUnicodeMinus)) {
    negative = true;
    pos = detail::kUnicodeMinus.size();
  } else if (!text.empty() && (text[0] == '-' || text[0] == '+')) {
    negative = text[0] == '-';
    pos = 1;
  }
  const std::string_view rest = text.substr(pos);
  const auto slash = rest.find('/');
  const std::string_view num = rest.substr(0, slash);
  if (!detail::all_digits(num)) {
    std::size_t bad = 0;
    while (bad < num.size() && num[bad] >= '0' && num[bad] <= '9') ++bad;
    throw parse_error("expected decimal numerator", pos + bad);
  }
  Integer n(std::string(num), 10);
  Integer d = 1;
  if (slash != std::string_view::npos) {
    const std::string_view den = rest.substr(slash + 1);
    if (!detail::all_digits(den)) {
      std::size_t bad = 0;
      while (bad < den.size() && den[bad] >= '0' && den[bad] <= '9') ++bad;
      throw parse_error("expected decimal denominator", pos + slash + 1 + bad);
    }
    d = Integer(std::string(den), 10);
    if (d == 0) throw parse_error("zero denominator", pos + slash + 1);
    Integer g;
    mpz_gcd(g.get_mpz_t(), n.get_mpz_t(), d.get_mpz_t());
    if (mpz_even_p(Integer(d / g).get_mpz_t())) {
      throw parse_error("denominator must be odd in lowest terms (not a 2-adic integer)", pos + slash + 1);
    }
  }
  if (negative) n = -n;
  return OddRational(n, d);
}

using ParsedValue = std::variant<OddRational, DigitWindow>;

/// Dispatches on the text shape: "(...)" periodic, "..." window, else rational.
inline ParsedValue parse_value(std::string_view text) {
  if (text.empty()) throw parse_error("empty input", 0);
  if (text.find('(') != std::string_view::npos) return periodic_to_rational(parse_periodic(text));
  if (text.ends_with("...") || text.ends_with(detail::kEllipsis)) return parse_window(text);
  return parse_rational(text);
}

}  // namespace cphi
