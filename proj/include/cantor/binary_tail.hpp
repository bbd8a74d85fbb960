#ifndef CANTOR_BINARY_TAIL_HPP
#define CANTOR_BINARY_TAIL_HPP

#include <vector>

#include "cantor/dyadic.hpp"
#include "cantor/errors.hpp"

namespace cantor {

/// A 2-adic integer with eventually-constant binary digits: a finite digit
/// prefix (b_0, ..., b_{m-1}) followed by a constant tail bit. Canonical form
/// trims the prefix so it never ends in the tail bit, making equality
/// structural.
class BinaryTail {
 public:
  BinaryTail(std::vector<int> prefix, int tail) : prefix_(std::move(prefix)), tail_(tail) {
    if (tail_ != 0 && tail_ != 1) throw precondition_error("tail bit must be 0 or 1");
    for (int b : prefix_)
      if (b != 0 && b != 1) throw precondition_error("prefix bits must be 0 or 1");
    while (!prefix_.empty() && prefix_.back() == tail_) prefix_.pop_back();
  }

  const std::vector<int>& prefix() const { return prefix_; }
  int tail() const { return tail_; }

  /// Digit at any position, tail included.
  int digit(std::size_t i) const {
    return i < prefix_.size() ? prefix_[i] : tail_;
  }

  friend bool operator==(const BinaryTail&, const BinaryTail&) = default;

 private:
  std::vector<int> prefix_;
  int tail_;
};

/// phi( sum b_i 2^i ) = sum b_i / 2^{i+1}; the constant tail contributes the
/// exact geometric sum t / 2^m. Always a dyadic rational.
inline DyadicRational phi_eval(const BinaryTail& t) {
  int m = static_cast<int>(t.prefix().size());
  mpz_class num = 0;
  for (int i = 0; i < m; ++i)
    if (t.prefix()[static_cast<std::size_t>(i)])
      num += mpz_class(1) << (m - 1 - i);
  num += t.tail();
  return DyadicRational(num, m);
}

}  // namespace cantor

#endif
