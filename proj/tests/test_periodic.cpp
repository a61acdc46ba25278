#include <gtest/gtest.h>

#include <random>

#include "cphi/digits_io.hpp"
#include "cphi/periodic.hpp"

using namespace cphi;

namespace {

OddRational Q(long n, long d = 1) { return OddRational(Integer(n), Integer(d)); }

// Expansion digits by repeated sigma on the rational, independent of the
// modular-inverse path used by rational_window.
Natural digits_by_shifting(OddRational q, std::size_t k) {
  Natural out = 0;
  for (std::size_t i = 0; i < k; ++i) {
    if (q.is_odd()) {
      mpz_setbit(out.get_mpz_t(), i);
      q = q - Q(1);
    }
    q = q / Q(2);
  }
  return out;
}

}  // namespace

TEST(OddRational, RejectsEvenDenominator) {
  EXPECT_THROW(Q(1, 2), domain_error);
  EXPECT_THROW(Q(1, 0), domain_error);
  EXPECT_EQ(Q(2, 6), Q(1, 3));
  EXPECT_EQ(Q(4, 2), Q(2));
  EXPECT_THROW(Q(1) / Q(2), domain_error);
}

TEST(Alpha, Examples) {
  EXPECT_EQ(alpha(0), 0u);
  for (std::size_t n = 0; n < 80; ++n) EXPECT_EQ(alpha(pow2(n)), 1u);
  for (std::size_t k = 0; k < 80; ++k) EXPECT_EQ(alpha(pow2(k) - 1), k);
}

TEST(Bbar, Finite) {
  EXPECT_EQ(bbar_finite(1, 1, 3), 7);
  EXPECT_EQ(bbar_finite(2, 2, 2), 10);
  EXPECT_EQ(bbar_finite(5, 3, 0), 0);
  EXPECT_THROW(bbar_finite(4, 2, 1), domain_error);
}

TEST(Bbar, Infinite) {
  EXPECT_EQ(bbar_infinite(1, 1), Q(-1));
  EXPECT_EQ(bbar_infinite(1, 2), Q(-1, 3));
  EXPECT_EQ(bbar_infinite(0, 5), Q(0));
  EXPECT_THROW(bbar_infinite(2, 1), domain_error);
}

TEST(Bbar, InfiniteTruncatesToFinite) {
  for (std::size_t v = 1; v <= 6; ++v) {
    for (unsigned long b = 0; b < (1UL << v); ++b) {
      for (std::size_t t = 0; t <= 8; ++t) {
        ASSERT_EQ(rational_window(bbar_infinite(b, v), t * v).value(), bbar_finite(b, v, t))
            << "b=" << b << " v=" << v << " t=" << t;
      }
    }
  }
}

TEST(RationalWindow, Examples) {
  EXPECT_EQ(rational_window(Q(1, 3), 4).value(), 11);
  EXPECT_EQ(format_window_digits(rational_window(Q(1, 3), 4)), "1101");
  EXPECT_EQ(rational_window(Q(-1), 5).value(), 31);
  EXPECT_EQ(rational_window(Q(0), 40).value(), 0);
  EXPECT_EQ(rational_window(Q(1, 3), 0), DigitWindow());
}

TEST(RationalWindow, AgreesWithShiftedDigits) {
  for (long d : {1L, 3L, 5L, 7L, 9L, 15L, 21L, 127L}) {
    for (long n = -40; n <= 40; ++n) {
      const OddRational q{Integer(n), Integer(d)};
      ASSERT_EQ(rational_window(q, 48).value(), digits_by_shifting(q, 48)) << q.str();
    }
  }
}

TEST(LeftRightParts, Examples) {
  EXPECT_EQ(left_part(Q(1, 3), 3), 3);
  EXPECT_EQ(right_part(Q(1, 3), 3), Q(-1, 3));
  for (std::size_t k = 0; k < 10; ++k) {
    EXPECT_EQ(left_part(Q(0), k), 0);
    EXPECT_EQ(right_part(Q(0), k), Q(0));
  }
  // -1 = ...111: least residue mod 4 is 3 and one shift leaves it unchanged.
  EXPECT_EQ(left_part(Q(-1), 2), 3);
  EXPECT_EQ(right_part(Q(-1), 1), Q(-1));
}

TEST(LeftRightParts, Reassemble) {
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<long> num(-5000, 5000);
  std::uniform_int_distribution<long> den(0, 200);
  for (int i = 0; i < 2000; ++i) {
    const OddRational q(Integer(num(rng)), Integer(2 * den(rng) + 1));
    for (std::size_t k : {0u, 1u, 3u, 17u, 64u}) {
      ASSERT_EQ(OddRational(left_part(q, k)) + shift_left(right_part(q, k), k), q) << q.str() << " k=" << k;
    }
    // sigma undoes prepending a digit.
    const Natural d0 = left_part(q, 1);
    ASSERT_EQ(right_part(OddRational(d0) + shift_left(q, 1), 1), q);
  }
}

TEST(LeftPart, WindowOfRationalIsConsistent) {
  for (long n : {-7L, -1L, 1L, 5L, 22L}) {
    const OddRational q{Integer(n), Integer(9)};
    const DigitWindow w = rational_window(q, 40);
    for (std::size_t k = 0; k <= 40; ++k) ASSERT_EQ(left_part(w, k), rational_window(q, k).value());
  }
}

TEST(Periodic, CanonicalExpansions) {
  const PeriodicDigits third = rational_to_periodic(Q(1, 3));
  EXPECT_EQ(third.preperiod, (Bits{1}));
  EXPECT_EQ(third.period, (Bits{1, 0}));
  EXPECT_EQ(periodic_to_rational(third), Q(1, 3));

  const PeriodicDigits minus_one = rational_to_periodic(Q(-1));
  EXPECT_TRUE(minus_one.preperiod.empty());
  EXPECT_EQ(minus_one.period, (Bits{1}));

  const PeriodicDigits five = rational_to_periodic(Q(5));
  EXPECT_EQ(five.preperiod, (Bits{1, 0, 1}));
  EXPECT_EQ(five.period, (Bits{0}));

  EXPECT_EQ(format_periodic(rational_to_periodic(Q(0))), "(0)");
  EXPECT_EQ(format_periodic(rational_to_periodic(Q(-1, 3))), "(10)");
  EXPECT_EQ(format_periodic(rational_to_periodic(Q(1, 7))), "1(110)");
}

TEST(Periodic, RoundTripAndMinimality) {
  std::mt19937_64 rng(11);
  std::uniform_int_distribution<long> num(-3000, 3000);
  std::uniform_int_distribution<long> den(0, 300);
  for (int i = 0; i < 3000; ++i) {
    const OddRational q(Integer(num(rng)), Integer(2 * den(rng) + 1));
    const PeriodicDigits p = rational_to_periodic(q);
    ASSERT_EQ(periodic_to_rational(p), q) << q.str();
    // Minimal period: no proper divisor of v repeats the block.
    for (std::size_t w = 1; w < p.v(); ++w) {
      if (p.v() % w != 0) continue;
      bool repeats = true;
      for (std::size_t j = w; j < p.v(); ++j) repeats &= p.period[j] == p.period[j - w];
      ASSERT_FALSE(repeats) << q.str();
    }
    // Minimal preperiod: the last preperiod digit differs from the last period digit.
    if (p.k() > 0) {
      ASSERT_NE(p.preperiod.back(), p.period.back()) << q.str();
    }
    // The expansion matches the digits themselves.
    const std::size_t len = p.k() + 3 * p.v();
    const Natural w = rational_window(q, len).value();
    for (std::size_t j = 0; j < len; ++j) {
      const auto expected = j < p.k() ? p.preperiod[j] : p.period[(j - p.k()) % p.v()];
      ASSERT_EQ(test_bit(w, j), expected == 1) << q.str() << " digit " << j;
    }
  }
}

TEST(Periodic, AnyDecompositionGivesSameRational) {
  // 1/3 = 1(10) = 11(01) = 1(1010)
  EXPECT_EQ(periodic_to_rational({{1, 1}, {0, 1}}), Q(1, 3));
  EXPECT_EQ(periodic_to_rational({{1}, {1, 0, 1, 0}}), Q(1, 3));
  EXPECT_EQ(right_part(PeriodicDigits{{1}, {1, 0}}, 3), Q(-1, 3));
}

TEST(DigitsIo, ParseValues) {
  EXPECT_EQ(std::get<OddRational>(parse_value("1(10)")), Q(1, 3));
  EXPECT_EQ(std::get<OddRational>(parse_value("(1)")), Q(-1));
  EXPECT_EQ(std::get<OddRational>(parse_value("101(0)")), Q(5));
  EXPECT_EQ(std::get<OddRational>(parse_value("-7/3")), Q(-7, 3));
  EXPECT_EQ(std::get<OddRational>(parse_value("\xE2\x88\x92" "1")), Q(-1));
  EXPECT_EQ(std::get<OddRational>(parse_value("+6/9")), Q(2, 3));
  EXPECT_EQ(std::get<DigitWindow>(parse_value("101...")), DigitWindow(5, 3));
  EXPECT_EQ(std::get<DigitWindow>(parse_value("0011\xE2\x80\xA6")), DigitWindow(12, 4));
}

TEST(DigitsIo, ParseErrorsCarryPosition) {
  auto position_of = [](const std::string& s) -> std::size_t {
    try {
      parse_value(s);
    } catch (const parse_error& e) {
      return e.position();
    }
    return std::string::npos;
  };
  EXPECT_EQ(position_of("1(12)"), 3u);
  EXPECT_EQ(position_of("1()"), 2u);
  EXPECT_EQ(position_of("1(1)0"), 4u);
  EXPECT_EQ(position_of("12a"), 2u);
  EXPECT_EQ(position_of("1/2"), 2u);
  EXPECT_EQ(position_of("1/x"), 2u);
  EXPECT_EQ(position_of("1021..."), 2u);
  EXPECT_EQ(position_of(""), 0u);
}

TEST(DigitsIo, FormatRoundTrip) {
  for (const char* s : {"1(10)", "(1)", "101(0)", "(0)", "0110(011)"}) {
    EXPECT_EQ(format_periodic(rational_to_periodic(std::get<OddRational>(parse_value(s)))), s);
  }
}
