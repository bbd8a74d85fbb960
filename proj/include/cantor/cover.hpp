#ifndef CANTOR_COVER_HPP
#define CANTOR_COVER_HPP

#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "cantor/clopen.hpp"

namespace cantor {

/// A lazily enumerated cover candidate: clopens over one prime, pulled one at
/// a time. Elements already read are cached by the extractor, so the source
/// is consumed in a single pass.
struct CoverStream {
  Prime p;
  std::function<std::optional<Clopen>()> next;  // nullopt = exhausted
  std::uint64_t budget = 1;

  static CoverStream from_vector(Prime p, std::vector<Clopen> elems,
                                 std::uint64_t budget);
};

struct SubcoverEntry {
  std::size_t index;  // position in the stream
  Clopen element;
};

/// Choice-free König extraction: keep a frontier of undischarged balls
/// (initially the root); each round reads one stream element, discharges
/// every frontier ball below it, then splits the smallest (depth, residue)
/// undischarged ball into its p children, checking the children against all
/// elements read so far. Succeeds when the frontier empties; the chosen
/// elements join to Top.
///
/// Throws budget_exhausted after `budget` rounds; a non-cover and a
/// too-small budget are indistinguishable.
std::vector<SubcoverEntry> finite_subcover(const CoverStream& c);

/// Disjoint refinement: v_i = u_i ∧ ¬(u_1 ∨ ... ∨ u_{i-1}) with zeros
/// dropped. Output is a partition of the input's join and depends on input
/// order.
std::vector<Clopen> disjointify(const std::vector<Clopen>& cover);

/// Ultranormal separation: given a ∨ b = Top, returns c = ¬b, which
/// satisfies c ≤ a and ¬c ≤ b.
Clopen separate(const Clopen& a, const Clopen& b);

}  // namespace cantor

#endif
