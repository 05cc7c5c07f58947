#pragma once

#include <vector>

#include "dualcat/dpr.hpp"
#include "dualcat/ordinal.hpp"
#include "dualcat/signature.hpp"

namespace dualcat {

// An interval is a cup in a word when the right half reads off the
// successors of the left half from outside in; a cap is the mirror image.
bool is_sig_cup(const Signature& sig, const Word& w, Interval iv);
bool is_sig_cap(const Signature& sig, const Word& w, Interval iv);

// Position-pair tests closing over sig and w; both must outlive the result.
PairCompat sig_cup_compat(const Signature& sig, const Word& w);
PairCompat sig_cap_compat(const Signature& sig, const Word& w);

// The signature-parameterized analogue of DiagMorphism: a letter-preserving
// order bijection between through positions whose domain complement splits
// into cups and codomain complement into caps.
class SigMorphism {
 public:
  SigMorphism(Signature sig, Word dom, Word cod, PosSet A, PosSet B);

  static ValidationResult check(const Signature& sig, const Word& dom,
                                const Word& cod, const PosSet& A,
                                const PosSet& B);

  const Signature& sig() const { return sig_; }
  const Word& dom() const { return dom_; }
  const Word& cod() const { return cod_; }
  const PosSet& dom_through() const { return A_; }
  const PosSet& cod_through() const { return B_; }

  bool operator==(const SigMorphism&) const = default;

 private:
  Signature sig_;
  Word dom_, cod_;
  PosSet A_, B_;
};

SigMorphism sig_identity(const Signature& sig, const Word& w);
SigMorphism sig_compose(const SigMorphism& f, const SigMorphism& g);
SigMorphism sig_tensor(const SigMorphism& f, const SigMorphism& g);
bool sig_is_invertible(const SigMorphism& f);

// cup_block(y1..yh) = y1..yh s(yh)..s(y1); cap_block mirrors it. Every
// letter must have a successor.
Word cup_block(const Signature& sig, const Word& letters);
Word cap_block(const Signature& sig, const Word& letters);
SigMorphism sig_counit(const Signature& sig, const Word& letters);
SigMorphism sig_unit(const Signature& sig, const Word& letters);

std::vector<SigMorphism> sig_decompose(const SigMorphism& f);

// Translation between the two presentations of the '-'/'+' instance.
SigMorphism to_sig(const DiagMorphism& f);
DiagMorphism from_sig(const SigMorphism& f);

// Marked words correspond to nonempty sequences of naturals: the empty word
// is (0), '-' raises the last entry, '+' appends a 0. The correspondence is
// a monoid map when sequences multiply by gluing at the seam.
std::vector<int> word_to_tree(const MarkedWord& w);
MarkedWord tree_to_word(const std::vector<int>& code);
std::vector<int> tree_tensor(const std::vector<int>& a,
                             const std::vector<int>& b);

}  // namespace dualcat
