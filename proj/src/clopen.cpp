#include "cantor/clopen.hpp"

#include <algorithm>

namespace cantor {
namespace {

// p-ary trie with fully-merged nodes: a Split node never has all-Empty or
// all-Full children, so structural form is canonical.
struct Trie {
  enum Kind { Empty, Full, Split };
  Kind kind = Empty;
  std::vector<Trie> kids;  // size p iff Split
};

void collapse(Trie& t) {
  if (t.kind != Trie::Split) return;
  bool all_full = true, all_empty = true;
  for (const Trie& k : t.kids) {
    all_full &= k.kind == Trie::Full;
    all_empty &= k.kind == Trie::Empty;
  }
  if (all_full || all_empty) {
    t.kind = all_full ? Trie::Full : Trie::Empty;
    t.kids.clear();
  }
}

void insert(Trie& t, unsigned long p, const mpz_class& residue, int depth) {
  if (t.kind == Trie::Full) return;
  if (depth == 0) {
    t.kind = Trie::Full;
    t.kids.clear();
    return;
  }
  if (t.kind == Trie::Empty) {
    t.kind = Trie::Split;
    t.kids.assign(p, Trie{});
  }
  unsigned long d = mpz_fdiv_ui(residue.get_mpz_t(), p);
  insert(t.kids[d], p, residue / p, depth - 1);
  collapse(t);
}

Trie build(const Prime& p, const std::vector<Ball>& balls) {
  Trie t;
  for (const Ball& b : balls) {
    require_same_prime(p, b.prime());
    insert(t, p.value(), b.residue(), b.depth());
  }
  return t;
}

void collect(const Trie& t, const Prime& p, const mpz_class& acc,
             const mpz_class& scale, int depth, std::vector<Ball>& out) {
  if (t.kind == Trie::Empty) return;
  if (t.kind == Trie::Full) {
    out.emplace_back(p, depth, acc);
    return;
  }
  for (std::uint64_t i = 0; i < p.value(); ++i)
    collect(t.kids[i], p, acc + mpz_class(static_cast<unsigned long>(i)) * scale,
            scale * static_cast<unsigned long>(p.value()), depth + 1, out);
}

std::vector<Ball> leaves_of(const Trie& t, const Prime& p) {
  std::vector<Ball> out;
  collect(t, p, 0, 1, 0, out);
  std::sort(out.begin(), out.end());
  return out;
}

Trie meet(const Trie& a, const Trie& b) {
  if (a.kind == Trie::Empty || b.kind == Trie::Empty) return Trie{};
  if (a.kind == Trie::Full) return b;
  if (b.kind == Trie::Full) return a;
  Trie r;
  r.kind = Trie::Split;
  r.kids.resize(a.kids.size());
  for (std::size_t i = 0; i < a.kids.size(); ++i) r.kids[i] = meet(a.kids[i], b.kids[i]);
  collapse(r);
  return r;
}

Trie join(const Trie& a, const Trie& b) {
  if (a.kind == Trie::Full || b.kind == Trie::Full)
    return Trie{Trie::Full, {}};
  if (a.kind == Trie::Empty) return b;
  if (b.kind == Trie::Empty) return a;
  Trie r;
  r.kind = Trie::Split;
  r.kids.resize(a.kids.size());
  for (std::size_t i = 0; i < a.kids.size(); ++i) r.kids[i] = join(a.kids[i], b.kids[i]);
  collapse(r);
  return r;
}

Trie complement(const Trie& t) {
  if (t.kind == Trie::Empty) return Trie{Trie::Full, {}};
  if (t.kind == Trie::Full) return Trie{};
  Trie r;
  r.kind = Trie::Split;
  r.kids.reserve(t.kids.size());
  for (const Trie& k : t.kids) r.kids.push_back(complement(k));
  return r;  // complement of canonical is canonical
}

Clopen make(const Prime& p, const Trie& t) {
  return clopen_normalize(p, leaves_of(t, p));
}

}  // namespace

Clopen::Clopen(Prime p, std::vector<Ball> leaves) : p_(p), leaves_(std::move(leaves)) {
  Clopen canon = clopen_normalize(p_, leaves_);
  if (!(canon.leaves_ == leaves_))
    throw precondition_error("clopen leaves not in canonical form");
}

int Clopen::max_leaf_depth() const {
  int d = 0;
  for (const Ball& b : leaves_) d = std::max(d, b.depth());
  return d;
}

Clopen clopen_normalize(const Prime& p, const std::vector<Ball>& balls) {
  Trie t = build(p, balls);
  return Clopen(p, leaves_of(t, p), Clopen::canonical_tag{});
}

Clopen clopen_meet(const Clopen& x, const Clopen& y) {
  require_same_prime(x.prime(), y.prime());
  return make(x.prime(), meet(build(x.prime(), x.leaves()), build(y.prime(), y.leaves())));
}

Clopen clopen_join(const Clopen& x, const Clopen& y) {
  require_same_prime(x.prime(), y.prime());
  return make(x.prime(), join(build(x.prime(), x.leaves()), build(y.prime(), y.leaves())));
}

Clopen clopen_complement(const Clopen& x) {
  return make(x.prime(), complement(build(x.prime(), x.leaves())));
}

Clopen clopen_imp(const Clopen& x, const Clopen& a) {
  require_same_prime(x.prime(), a.prime());
  return clopen_join(clopen_complement(x), a);
}

bool clopen_leq(const Clopen& x, const Clopen& y) {
  require_same_prime(x.prime(), y.prime());
  return clopen_meet(x, y) == x;
}

bool clopen_contains_ball(const Clopen& x, const Ball& b) {
  require_same_prime(x.prime(), b.prime());
  for (const Ball& leaf : x.leaves()) {
    BallRelation r = ball_compare(b, leaf);
    if (r == BallRelation::Equal || r == BallRelation::Below) return true;
  }
  return false;
}

std::vector<Ball> clopen_decompose_at(const Clopen& x, int D) {
  if (D < x.max_leaf_depth())
    throw precondition_error("decomposition depth below deepest leaf");
  std::vector<Ball> out;
  for (const Ball& leaf : x.leaves()) {
    std::vector<Ball> part = ball_descendants_at(leaf, D);
    out.insert(out.end(), part.begin(), part.end());
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace cantor
