#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "dualcat/errors.hpp"
#include "dualcat/ordinal.hpp"

namespace dualcat {

// A word in a single self-paired letter where each position is either plain
// ('-') or marked ('+'). The empty word is the tensor unit.
class MarkedWord {
 public:
  MarkedWord() : marks_(0, {}) {}
  MarkedWord(int length, std::vector<int> plus)
      : marks_(length, std::move(plus)) {}
  // Parses a string of '-' and '+' characters; "" is the unit.
  explicit MarkedWord(std::string_view text);

  int length() const { return marks_.ambient(); }
  bool marked(int p) const { return marks_.contains(p); }
  const PosSet& marks() const { return marks_; }
  std::string str() const;

  bool operator==(const MarkedWord&) const = default;

 private:
  PosSet marks_;
};

MarkedWord tensor(const MarkedWord& a, const MarkedWord& b);
MarkedWord subword(const MarkedWord& w, int lo, int len);

// "-"^h followed by "+"^h; its counterpart swaps the halves.
MarkedWord cup_word(int h);
MarkedWord cap_word(int h);

// A morphism of marked words: a mark-preserving bijection between a
// downward-closed-by-cups choice of through positions. The subset A of the
// domain and B of the codomain pick the through strands in order, A's
// complement splits into cups and B's complement into caps.
class DiagMorphism {
 public:
  DiagMorphism(MarkedWord dom, MarkedWord cod, PosSet A, PosSet B);

  // Reports the first failed condition instead of throwing.
  // Conditions: 0 structural, 1 cardinality, 2 mark preservation,
  // 3 domain complement splits into cups, 4 codomain complement into caps.
  static ValidationResult check(const MarkedWord& dom, const MarkedWord& cod,
                                const PosSet& A, const PosSet& B);

  const MarkedWord& dom() const { return dom_; }
  const MarkedWord& cod() const { return cod_; }
  const PosSet& dom_through() const { return A_; }
  const PosSet& cod_through() const { return B_; }

  bool operator==(const DiagMorphism&) const = default;

 private:
  MarkedWord dom_, cod_;
  PosSet A_, B_;
};

DiagMorphism identity(const MarkedWord& w);

// Diagrammatic order: the domain of the result is the domain of f.
DiagMorphism compose(const DiagMorphism& f, const DiagMorphism& g);

DiagMorphism tensor(const DiagMorphism& f, const DiagMorphism& g);

bool is_invertible(const DiagMorphism& f);

// counit(h): cup_word(h) -> unit, unit(h): unit -> cap_word(h).
DiagMorphism counit(int h);
DiagMorphism unit(int h);

// Splits f into the alternating tensor factors [invertible, elementary, ...,
// invertible]. Tensoring the factors back together in order returns f.
std::vector<DiagMorphism> decompose(const DiagMorphism& f);

}  // namespace dualcat
