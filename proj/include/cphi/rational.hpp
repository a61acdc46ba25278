#pragma once

#include <gmpxx.h>

#include <string>
#include <utility>

#include "cphi/errors.hpp"
#include "cphi/window.hpp"

namespace cphi {

/// An exact element of Q_odd: a reduced fraction whose denominator is odd,
/// i.e. a rational that is also a 2-adic integer.
class OddRational {
 public:
  OddRational() = default;
  OddRational(long n) : q_(n) {}  // NOLINT(google-explicit-constructor)
  OddRational(const Integer& n) : q_(n) {}  // NOLINT(google-explicit-constructor)
  OddRational(const Integer& num, const Integer& den) {
    if (den == 0) throw domain_error("zero denominator");
    q_ = mpq_class(num, den);
    q_.canonicalize();
    check();
  }

  static OddRational from_mpq(mpq_class q) {
    q.canonicalize();
    OddRational r;
    r.q_ = std::move(q);
    r.check();
    return r;
  }

  Integer numerator() const { return q_.get_num(); }
  Integer denominator() const { return q_.get_den(); }
  const mpq_class& mpq() const noexcept { return q_; }

  // d_0 of the 2-adic expansion; the denominator is odd, so this is the
  // numerator's parity.
  bool is_odd() const { return mpz_odd_p(q_.get_num_mpz_t()) != 0; }
  bool is_integer() const { return q_.get_den() == 1; }

  std::string str() const { return q_.get_str(); }

  friend OddRational operator+(const OddRational& a, const OddRational& b) {
    return from_mpq(a.q_ + b.q_);
  }
  friend OddRational operator-(const OddRational& a, const OddRational& b) {
    return from_mpq(a.q_ - b.q_);
  }
  friend OddRational operator*(const OddRational& a, const OddRational& b) {
    return from_mpq(a.q_ * b.q_);
  }
  // Only defined when the quotient stays in Q_odd.
  friend OddRational operator/(const OddRational& a, const OddRational& b) {
    if (b.q_ == 0) throw domain_error("division by zero");
    return from_mpq(a.q_ / b.q_);
  }
  OddRational operator-() const { return from_mpq(-q_); }

  friend bool operator==(const OddRational& a, const OddRational& b) { return a.q_ == b.q_; }

 private:
  void check() const {
    if (mpz_even_p(q_.get_den_mpz_t())) {
      throw domain_error(q_.get_str() + " is not in Q_odd (even denominator)");
    }
  }

  mpq_class q_{0};
};

inline OddRational shift_left(const OddRational& q, std::size_t k) {
  return q * OddRational(pow2(k));
}

}  // namespace cphi
