#ifndef CANTOR_PRIME_HPP
#define CANTOR_PRIME_HPP

#include <cstdint>
#include <gmpxx.h>

#include "cantor/errors.hpp"

namespace cantor {

/// Validated prime modulus; the p of Z_p.
class Prime {
 public:
  explicit Prime(std::uint64_t p) : value_(p) {
    mpz_class z(static_cast<unsigned long>(p));
    if (p < 2 || mpz_probab_prime_p(z.get_mpz_t(), 32) == 0)
      throw precondition_error("not a prime: " + std::to_string(p));
  }

  std::uint64_t value() const { return value_; }

  /// p^n as an exact integer.
  mpz_class pow(int n) const {
    mpz_class r;
    mpz_ui_pow_ui(r.get_mpz_t(), static_cast<unsigned long>(value_),
                  static_cast<unsigned long>(n));
    return r;
  }

  friend bool operator==(const Prime&, const Prime&) = default;

 private:
  std::uint64_t value_;
};

inline void require_same_prime(const Prime& a, const Prime& b) {
  if (!(a == b)) throw precondition_error("prime mismatch");
}

}  // namespace cantor

#endif
