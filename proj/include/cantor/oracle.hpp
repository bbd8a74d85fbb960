#ifndef CANTOR_ORACLE_HPP
#define CANTOR_ORACLE_HPP

#include <cstddef>
#include <vector>

#include "cantor/clopen.hpp"

namespace cantor {

/// Brute-force finite model of the clopen algebra: subsets of Z/p^D as
/// bitsets. Referee for every algebraic operation; deliberately naive and
/// kept independent of the trie machinery.
class ResidueSet {
 public:
  ResidueSet(Prime p, int D) : p_(p), D_(D), members_(size_of(p, D), false) {}

  static std::size_t size_of(Prime p, int D);

  const Prime& prime() const { return p_; }
  int depth() const { return D_; }
  std::size_t size() const { return members_.size(); }

  bool test(std::size_t r) const { return members_[r]; }
  void set(std::size_t r, bool v = true) { members_[r] = v; }

  std::size_t count() const;
  bool none() const { return count() == 0; }
  bool all() const { return count() == size(); }

  ResidueSet operator&(const ResidueSet& o) const;
  ResidueSet operator|(const ResidueSet& o) const;
  ResidueSet operator~() const;

  friend bool operator==(const ResidueSet&, const ResidueSet&) = default;

 private:
  Prime p_;
  int D_;
  std::vector<bool> members_;
};

/// Faithful finite semantics of a clopen at cutoff depth D (which must
/// dominate every leaf depth).
ResidueSet to_residues(const Clopen& x, int D);

/// Inverse direction: canonical clopen denoting exactly s. Built by its own
/// recursive merge, not by clopen_normalize.
Clopen from_residues(const ResidueSet& s);

}  // namespace cantor

#endif
