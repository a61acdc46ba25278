#include <gtest/gtest.h>

#include "cphi/window.hpp"

using namespace cphi;

TEST(DigitWindow, ReducesToLeastResidue) {
  EXPECT_EQ(DigitWindow(-1, 5).value(), 31);
  EXPECT_EQ(DigitWindow(16, 4).value(), 0);
  EXPECT_EQ(DigitWindow(7, 0).value(), 0);
  EXPECT_TRUE(DigitWindow(5, 3).digit(0));
  EXPECT_FALSE(DigitWindow(5, 3).digit(1));
  EXPECT_THROW(DigitWindow(5, 3).digit(3), precision_error);
}

TEST(DigitWindow, RingOperations) {
  EXPECT_EQ(DigitWindow(3, 4) + DigitWindow(13, 4), DigitWindow(0, 4));
  EXPECT_EQ(DigitWindow(9, 6) + DigitWindow(0, 6), DigitWindow(9, 6));
  EXPECT_EQ(DigitWindow(1, 8) * DigitWindow(171, 8), DigitWindow(171, 8));
  EXPECT_EQ(DigitWindow(3, 8) * DigitWindow(171, 8), DigitWindow(1, 8));
  EXPECT_EQ(DigitWindow(2, 4) - DigitWindow(5, 4), DigitWindow(13, 4));
}

TEST(DigitWindow, MismatchedPrecisionFails) {
  EXPECT_THROW(window_add(DigitWindow(1, 4), DigitWindow(1, 5)), precision_error);
  EXPECT_THROW(window_sub(DigitWindow(1, 4), DigitWindow(1, 5)), precision_error);
  EXPECT_THROW(window_mul(DigitWindow(1, 4), DigitWindow(1, 5)), precision_error);
}

TEST(InvOdd, Examples) {
  EXPECT_EQ(inv_odd(DigitWindow(3, 2)), DigitWindow(3, 2));
  EXPECT_EQ(inv_odd(DigitWindow(1, 64)), DigitWindow(1, 64));

  // Brute-force scan of residues mod 256 for the inverse of 3.
  unsigned found = 0;
  for (unsigned y = 0; y < 256; ++y) {
    if ((3 * y) % 256 == 1) found = y;
  }
  ASSERT_EQ(found, 171u);
  EXPECT_EQ(inv_odd(DigitWindow(3, 8)), DigitWindow(found, 8));
}

TEST(InvOdd, EvenInputIsDomainError) {
  EXPECT_THROW(inv_odd(DigitWindow(2, 8)), domain_error);
  EXPECT_THROW(inv_odd(DigitWindow(0, 1)), domain_error);
}

TEST(InvOdd, ExhaustiveUpTo16Digits) {
  for (std::size_t k = 1; k <= 16; ++k) {
    const unsigned long mod = 1UL << k;
    for (unsigned long x = 1; x < mod; x += 2) {
      const DigitWindow inv = inv_odd(DigitWindow(x, k));
      ASSERT_EQ((x * inv.value().get_ui()) % mod, 1UL) << "x=" << x << " K=" << k;
    }
  }
}

TEST(InvOdd, WidePrecision) {
  const DigitWindow x(Natural("123456789012345678901234567890123456789"), 300);
  EXPECT_EQ(x * inv_odd(x), DigitWindow(1, 300));
}

TEST(LeftPart, Window) {
  const DigitWindow w(0b1011, 4);
  EXPECT_EQ(left_part(w, 0), 0);
  EXPECT_EQ(left_part(w, 2), 3);
  EXPECT_EQ(left_part(w, 4), 11);
  EXPECT_THROW(left_part(w, 5), precision_error);
}

TEST(DigitWindow, Truncate) {
  EXPECT_EQ(DigitWindow(0b1011, 4).truncate(2), DigitWindow(3, 2));
  EXPECT_THROW(DigitWindow(1, 2).truncate(3), precision_error);
}
