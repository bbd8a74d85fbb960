#ifndef CANTOR_BALL_HPP
#define CANTOR_BALL_HPP

#include <optional>
#include <vector>
#include <gmpxx.h>

#include "cantor/errors.hpp"
#include "cantor/prime.hpp"

namespace cantor {

/// Basic open of Z_p: the residue class a mod p^n. Depth 0 is the whole space.
class Ball {
 public:
  Ball(Prime p, int depth, mpz_class residue)
      : p_(p), depth_(depth), residue_(std::move(residue)) {
    if (depth < 0) throw precondition_error("ball depth must be >= 0");
    if (residue_ < 0 || residue_ >= p_.pow(depth_))
      throw precondition_error("ball residue out of range for depth");
  }

  static Ball root(Prime p) { return Ball(p, 0, 0); }

  const Prime& prime() const { return p_; }
  int depth() const { return depth_; }
  const mpz_class& residue() const { return residue_; }
  bool is_root() const { return depth_ == 0; }

  /// Base-p digit i of the residue (0 for i >= depth).
  unsigned long digit(int i) const {
    mpz_class q = residue_ / p_.pow(i);
    mpz_class d = q % static_cast<unsigned long>(p_.value());
    return d.get_ui();
  }

  /// The containing ball at a shallower depth d.
  Ball ancestor(int d) const {
    if (d < 0 || d > depth_) throw precondition_error("ancestor depth out of range");
    return Ball(p_, d, residue_ % p_.pow(d));
  }

  friend bool operator==(const Ball& a, const Ball& b) {
    return a.p_ == b.p_ && a.depth_ == b.depth_ && a.residue_ == b.residue_;
  }
  /// Canonical (depth, residue) order; used for leaf sorting and map keys.
  friend bool operator<(const Ball& a, const Ball& b) {
    if (a.depth_ != b.depth_) return a.depth_ < b.depth_;
    return a.residue_ < b.residue_;
  }

 private:
  Prime p_;
  int depth_;
  mpz_class residue_;
};

enum class BallRelation { Equal, Below, Above, Disjoint };

/// Containment lattice of two balls with the same prime: balls of Z_p are
/// nested or disjoint, never partially overlapping.
inline BallRelation ball_compare(const Ball& b1, const Ball& b2) {
  require_same_prime(b1.prime(), b2.prime());
  int d = std::min(b1.depth(), b2.depth());
  mpz_class m = b1.prime().pow(d);
  if (b1.residue() % m != b2.residue() % m) return BallRelation::Disjoint;
  if (b1.depth() == b2.depth()) return BallRelation::Equal;
  return b1.depth() > b2.depth() ? BallRelation::Below : BallRelation::Above;
}

/// Meet of two balls: empty when disjoint, otherwise the deeper one.
inline std::optional<Ball> ball_meet(const Ball& b1, const Ball& b2) {
  switch (ball_compare(b1, b2)) {
    case BallRelation::Disjoint:
      return std::nullopt;
    case BallRelation::Below:
    case BallRelation::Equal:
      return b1;
    case BallRelation::Above:
      return b2;
  }
  return std::nullopt;  // unreachable
}

/// The p children of depth n+1: residues a + x*p^n for x = 0..p-1,
/// ascending. They are pairwise disjoint and join back to b.
inline std::vector<Ball> ball_children(const Ball& b) {
  std::vector<Ball> kids;
  kids.reserve(b.prime().value());
  mpz_class step = b.prime().pow(b.depth());
  for (std::uint64_t x = 0; x < b.prime().value(); ++x)
    kids.emplace_back(b.prime(), b.depth() + 1,
                      b.residue() + mpz_class(static_cast<unsigned long>(x)) * step);
  return kids;
}

/// All depth-D descendants of b (b itself when D == depth), residue order.
inline std::vector<Ball> ball_descendants_at(const Ball& b, int D) {
  if (D < b.depth()) throw precondition_error("descendant depth above ball depth");
  std::vector<Ball> out;
  mpz_class step = b.prime().pow(b.depth());
  mpz_class count = b.prime().pow(D - b.depth());
  for (mpz_class j = 0; j < count; ++j)
    out.emplace_back(b.prime(), D, b.residue() + j * step);
  return out;
}

}  // namespace cantor

#endif
