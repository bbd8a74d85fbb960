#ifndef CANTOR_CLOPEN_HPP
#define CANTOR_CLOPEN_HPP

#include <vector>

#include "cantor/ball.hpp"
#include "cantor/prime.hpp"

namespace cantor {

/// A clopen element of L(Z_p): a finite union of balls kept in canonical
/// antichain form. Canonical means: no leaf contained in another, no complete
/// set of p siblings (they merge into the parent), leaves sorted by
/// (depth, residue). Top is {B(0,0)}, Bottom is {}.
///
/// Structural equality coincides with equality of the denoted residue sets.
class Clopen {
 public:
  /// Bottom.
  explicit Clopen(Prime p) : p_(p) {}

  /// Validating constructor: leaves must already be canonical.
  Clopen(Prime p, std::vector<Ball> leaves);

  static Clopen bottom(Prime p) { return Clopen(p); }
  static Clopen top(Prime p) { return Clopen(p, {Ball::root(p)}); }

  const Prime& prime() const { return p_; }
  const std::vector<Ball>& leaves() const { return leaves_; }

  bool is_bottom() const { return leaves_.empty(); }
  bool is_top() const { return leaves_.size() == 1 && leaves_[0].is_root(); }

  /// Depth of the deepest leaf; 0 for Bottom.
  int max_leaf_depth() const;

  friend bool operator==(const Clopen& a, const Clopen& b) {
    return a.p_ == b.p_ && a.leaves_ == b.leaves_;
  }

 private:
  struct canonical_tag {};
  Clopen(Prime p, std::vector<Ball> leaves, canonical_tag)
      : p_(p), leaves_(std::move(leaves)) {}

  friend Clopen clopen_normalize(const Prime& p, const std::vector<Ball>& balls);

  Prime p_;
  std::vector<Ball> leaves_;  // canonical
};

/// Canonicalize an arbitrary list of balls (same prime) into a Clopen with
/// the same residue-set semantics. Idempotent.
Clopen clopen_normalize(const Prime& p, const std::vector<Ball>& balls);

inline Clopen clopen_from_ball(const Ball& b) {
  return Clopen(b.prime(), std::vector<Ball>{b});
}

Clopen clopen_meet(const Clopen& x, const Clopen& y);
Clopen clopen_join(const Clopen& x, const Clopen& y);
Clopen clopen_complement(const Clopen& x);

/// Heyting implication; on clopens this is the Boolean ¬x ∨ a.
Clopen clopen_imp(const Clopen& x, const Clopen& a);

/// x ≤ y in the inclusion order, i.e. meet(x, y) = x.
bool clopen_leq(const Clopen& x, const Clopen& y);

/// {b} ≤ x. On canonical clopens this holds iff some leaf contains b.
bool clopen_contains_ball(const Clopen& x, const Ball& b);

/// All depth-D balls below x; requires D >= max leaf depth of x.
std::vector<Ball> clopen_decompose_at(const Clopen& x, int D);

}  // namespace cantor

#endif
