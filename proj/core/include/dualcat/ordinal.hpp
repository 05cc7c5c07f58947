#pragma once

#include <functional>
#include <optional>
#include <utility>
#include <vector>

#include "dualcat/errors.hpp"

namespace dualcat {

// Positions inside a word are 1-based: a word of length k occupies <1..k>.

struct Interval {
  int lo = 1;
  int hi = 0;  // lo > hi encodes the empty interval
  int size() const { return hi < lo ? 0 : hi - lo + 1; }
  bool contains(int p) const { return lo <= p && p <= hi; }
  bool operator==(const Interval&) const = default;
};

// A subset of <1..ambient> with set semantics, kept sorted.
class PosSet {
 public:
  PosSet() = default;
  PosSet(int ambient, std::vector<int> elems);
  static PosSet empty(int ambient) { return PosSet(ambient, {}); }
  static PosSet full(int ambient);

  int ambient() const { return ambient_; }
  int size() const { return static_cast<int>(elems_.size()); }
  bool is_empty() const { return elems_.empty(); }
  bool contains(int p) const;
  // 1-based rank of a member; throws InternalError if p is absent.
  int rank(int p) const;
  // member at 1-based rank r.
  int at(int r) const;
  PosSet complement() const;
  PosSet intersection(const PosSet& other) const;
  const std::vector<int>& elements() const { return elems_; }
  bool operator==(const PosSet&) const = default;

 private:
  int ambient_ = 0;
  std::vector<int> elems_;
};

// Ordinal sum: b's members are shifted past a's ambient.
PosSet concat(const PosSet& a, const PosSet& b);

// The unique order-preserving bijection A -> B sends a to cobber(a, A, B).
// Requires |A| = |B| and a in A.
int cobber(int a, const PosSet& A, const PosSet& B);

// A partial involution on <1..ambient>: the strand pairing of a region.
class Pairing {
 public:
  explicit Pairing(int ambient = 0) : partner_(ambient + 1, 0) {}
  int ambient() const { return static_cast<int>(partner_.size()) - 1; }
  void link(int a, int b);
  bool covers(int p) const;
  std::optional<int> partner(int p) const;
  // (min,max) pairs ordered by first element.
  std::vector<std::pair<int, int>> pairs() const;
  bool operator==(const Pairing&) const = default;

 private:
  std::vector<int> partner_;
};

// Letter compatibility for a candidate pair m < n: true when (m,n) may be
// joined by a strand. Instantiated by marks for the one-dual-pair case and
// by sigma-successor tests for general signatures.
using PairCompat = std::function<bool(int, int)>;

// iv is a cup for `marks` when its size is even and the marked positions in
// iv are exactly its final half. Caps are the mirror image (initial half).
bool is_cup(Interval iv, const PosSet& marks);
bool is_cap(Interval iv, const PosSet& marks);

// iv admits the fully nested pairing (lo+d, hi-d) under compat.
bool is_nested_block(Interval iv, const PairCompat& compat);

// Bracket-matches each maximal run of `region`: scanning left to right,
// every position either opens an arc or closes the innermost open arc it is
// compatible with, giving a non-crossing pairing. Returns nullopt when no
// matching exists. When several exist the earliest compatible closer wins;
// all choices glue to the same composites.
std::optional<Pairing> region_pairing(const PosSet& region,
                                      const PairCompat& compat);

// One-directional partners: the other end of the strand opened at a.
// cup_partner is absent when a is marked (a cup opens at an unmarked
// position); cap_partner is absent when a is unmarked. Both are absent when
// a lies outside the region or the region admits no cup (cap) matching.
std::optional<int> cup_partner(int a, const PosSet& region,
                               const PosSet& marks);
std::optional<int> cap_partner(int a, const PosSet& region,
                               const PosSet& marks);

// Alternating walk out of `start`: follow the cup pairing, then the cap
// pairing, and so on, while the walk stays inside H. Returns the first
// point reached outside H, or nullopt when no move is available. `start`
// must lie outside H and be covered by at most one of the two pairings.
std::optional<int> snake(int start, const PosSet& H, const Pairing& cups,
                         const Pairing& caps);

// Middle-word data for gluing two stacked morphisms: B and C are the
// through-point subsets of the lower and upper morphism, caps pairs the
// complement of B, cups pairs the complement of C.
struct MiddleStructure {
  PosSet B;
  PosSet C;
  Pairing caps;
  Pairing cups;
};

// Through-strand subsets of the glued composite: E collects the members of
// A whose strand survives into the second morphism, F the members of D
// whose strand survives into the first.
std::pair<PosSet, PosSet> transit_subsets(const PosSet& A, const PosSet& D,
                                          const MiddleStructure& mid);

// One factor of the alternating tensor decomposition. Invertible pieces are
// the maximal rank blocks of (A,B); elementary pieces are the gaps between
// them. Ranges with length 0 stand for the empty word.
struct FactorPiece {
  bool invertible = false;
  int dom_lo = 1;
  int dom_len = 0;
  int cod_lo = 1;
  int cod_len = 0;
  bool operator==(const FactorPiece&) const = default;
};

// Splits (A,B) into the canonical alternating sequence
// invertible, elementary, invertible, ..., invertible.
// Boundary invertible pieces on the empty word appear exactly when the
// morphism starts or ends with elementary material.
std::vector<FactorPiece> split_factors(const PosSet& A, const PosSet& B);

}  // namespace dualcat
