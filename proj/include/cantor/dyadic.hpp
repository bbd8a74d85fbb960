#ifndef CANTOR_DYADIC_HPP
#define CANTOR_DYADIC_HPP

#include <compare>
#include <gmpxx.h>

#include "cantor/errors.hpp"

namespace cantor {

/// Exact dyadic rational u/2^g, kept normalized: u odd, or g = 0.
class DyadicRational {
 public:
  DyadicRational() : num_(0), exp_(0) {}

  DyadicRational(mpz_class numerator, int exponent)
      : num_(std::move(numerator)), exp_(exponent) {
    if (exponent < 0) throw precondition_error("dyadic exponent must be >= 0");
    normalize();
  }

  static DyadicRational from_int(long v) { return DyadicRational(mpz_class(v), 0); }

  const mpz_class& numerator() const { return num_; }
  int exponent() const { return exp_; }

  bool is_zero() const { return num_ == 0; }
  bool is_integer() const { return exp_ == 0; }

  /// Numerator after rescaling to denominator 2^g (g >= exponent()).
  mpz_class numerator_at(int g) const {
    if (g < exp_) throw precondition_error("cannot rescale below exponent");
    return num_ << (g - exp_);
  }

  friend DyadicRational operator+(const DyadicRational& a, const DyadicRational& b) {
    int g = std::max(a.exp_, b.exp_);
    return DyadicRational(a.numerator_at(g) + b.numerator_at(g), g);
  }
  friend DyadicRational operator-(const DyadicRational& a, const DyadicRational& b) {
    int g = std::max(a.exp_, b.exp_);
    return DyadicRational(a.numerator_at(g) - b.numerator_at(g), g);
  }

  friend bool operator==(const DyadicRational& a, const DyadicRational& b) {
    return a.exp_ == b.exp_ && a.num_ == b.num_;
  }
  friend std::strong_ordering operator<=>(const DyadicRational& a,
                                          const DyadicRational& b) {
    int g = std::max(a.exp_, b.exp_);
    int c = cmp(a.numerator_at(g), b.numerator_at(g));
    if (c < 0) return std::strong_ordering::less;
    if (c > 0) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
  }

 private:
  void normalize() {
    if (num_ == 0) {
      exp_ = 0;
      return;
    }
    while (exp_ > 0 && mpz_even_p(num_.get_mpz_t())) {
      num_ >>= 1;
      --exp_;
    }
  }

  mpz_class num_;
  int exp_;
};

/// Exact midpoint (q1 + q2) / 2.
inline DyadicRational dyadic_mid(const DyadicRational& q1, const DyadicRational& q2) {
  int g = std::max(q1.exponent(), q2.exponent());
  return DyadicRational(q1.numerator_at(g) + q2.numerator_at(g), g + 1);
}

}  // namespace cantor

#endif
