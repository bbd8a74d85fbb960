#include "cantor/oracle.hpp"

#include <algorithm>

namespace cantor {

std::size_t ResidueSet::size_of(Prime p, int D) {
  mpz_class n = p.pow(D);
  if (!n.fits_ulong_p() || n.get_ui() > (1u << 24))
    throw precondition_error("oracle cutoff too large");
  return n.get_ui();
}

std::size_t ResidueSet::count() const {
  return static_cast<std::size_t>(std::count(members_.begin(), members_.end(), true));
}

ResidueSet ResidueSet::operator&(const ResidueSet& o) const {
  require_same_prime(p_, o.p_);
  if (D_ != o.D_) throw precondition_error("oracle depth mismatch");
  ResidueSet r(p_, D_);
  for (std::size_t i = 0; i < size(); ++i) r.members_[i] = members_[i] && o.members_[i];
  return r;
}

ResidueSet ResidueSet::operator|(const ResidueSet& o) const {
  require_same_prime(p_, o.p_);
  if (D_ != o.D_) throw precondition_error("oracle depth mismatch");
  ResidueSet r(p_, D_);
  for (std::size_t i = 0; i < size(); ++i) r.members_[i] = members_[i] || o.members_[i];
  return r;
}

ResidueSet ResidueSet::operator~() const {
  ResidueSet r(p_, D_);
  for (std::size_t i = 0; i < size(); ++i) r.members_[i] = !members_[i];
  return r;
}

ResidueSet to_residues(const Clopen& x, int D) {
  if (x.max_leaf_depth() > D)
    throw precondition_error("oracle cutoff below deepest leaf");
  ResidueSet s(x.prime(), D);
  for (const Ball& leaf : x.leaves()) {
    // all r in [0, p^D) with r = leaf.residue mod p^depth
    std::size_t step = leaf.prime().pow(leaf.depth()).get_ui();
    std::size_t start = leaf.residue().get_ui();
    for (std::size_t r = start; r < s.size(); r += step) s.set(r);
  }
  return s;
}

namespace {

// Recursive merge: emit the class (prefix mod p^depth) as one ball when it is
// entirely inside s, recurse into the p subclasses otherwise.
void merge(const ResidueSet& s, std::size_t prefix, int depth, std::vector<Ball>& out) {
  std::size_t step = s.prime().pow(depth).get_ui();
  bool all = true, any = false;
  for (std::size_t r = prefix; r < s.size(); r += step) {
    if (s.test(r))
      any = true;
    else
      all = false;
  }
  if (all) {
    out.emplace_back(s.prime(), depth, mpz_class(static_cast<unsigned long>(prefix)));
    return;
  }
  if (!any || depth == s.depth()) return;
  for (std::uint64_t d = 0; d < s.prime().value(); ++d)
    merge(s, prefix + static_cast<std::size_t>(d) * step, depth + 1, out);
}

}  // namespace

Clopen from_residues(const ResidueSet& s) {
  std::vector<Ball> leaves;
  merge(s, 0, 0, leaves);
  std::sort(leaves.begin(), leaves.end());
  return Clopen(s.prime(), std::move(leaves));
}

}  // namespace cantor
