#pragma once

#include <string>
#include <utility>
#include <vector>

#include "dualcat/sigcat.hpp"

namespace dualcat {

// A complete, duplicate-free hom-set between two words.
struct HomSet {
  Signature sig;
  Word dom, cod;
  std::vector<SigMorphism> morphisms;
};

// Outcome of one verified claim, ready for text or JSON reporting.
struct CheckReport {
  std::string claim;
  std::string instance;
  std::string expected;
  std::string actual;
  bool pass = false;
};

// One datum of the coend presentation of a hom-set after adjoining a dual:
// the middle word(s) summed over plus the component morphisms, (f,g) when
// only one side of the pair (U,V) contains dual letters and (f,g,h) when
// both do. Over a free base every equivalence class is a singleton, so the
// datum is stored directly.
struct CoendElement {
  std::vector<Word> middles;
  std::vector<SigMorphism> parts;
};

// All valid morphisms dom -> cod, sorted by their through sets. Throws
// ResourceError when |dom|+|cod| exceeds bound.
HomSet enumerate_homs(const Signature& sig, const Word& dom, const Word& cod,
                      int bound = 16);

// The unique successor pair (j, j dual) of a signature built by adjoining
// one dual letter; ConfigError for any other signature shape.
std::pair<Symbol, Symbol> dual_pair(const Signature& sig);

// Splits w at the dual letter: w = blocks[0] j' blocks[1] j' ... blocks[m]
// where j' is the dual letter, so the block count is one more than the
// number of dual letters in w.
std::vector<Word> split_at_dual(const Signature& sig, const Word& w);

// The canonical composites assembling a morphism U -> V from a coend datum.
// zeta_m0 applies when only U contains dual letters (middle X, parts f,g),
// zeta_0n when only V does (middle Y, parts f,g), zeta_mn when both do
// (middles X,Y, parts f,g,h). Endpoint mismatches throw CompositionError.
SigMorphism zeta_m0(const Signature& sig, const Word& U, const Word& V,
                    const CoendElement& e);
SigMorphism zeta_0n(const Signature& sig, const Word& U, const Word& V,
                    const CoendElement& e);
SigMorphism zeta_mn(const Signature& sig, const Word& U, const Word& V,
                    const CoendElement& e);

// Dispatches to the zeta builder matching the dual-letter shape of (U,V);
// when neither side has dual letters the datum is its own image.
SigMorphism zeta_image(const Signature& sig, const Word& U, const Word& V,
                       const CoendElement& e);

// Every coend datum for hom(U,V) whose middle words have length <= bound
// (default |U|+|V|+2). Over a free base the component g is forced, so the
// middle words solve a word equation; every solution family is finite once
// the bound caps the middle length.
std::vector<CoendElement> coend_elements(const Signature& sig, const Word& U,
                                         const Word& V, int bound = -1);

// Comparison of the coend presentation against direct enumeration.
struct ZetaReport {
  int m = 0;
  int n = 0;
  int elements = 0;
  int distinct_images = 0;
  int hom_count = 0;
  bool injective = false;
  bool surjective = false;
  bool contained = false;
  bool stable = false;
  bool expected_bijective = false;
  CheckReport summary;
};

// Enumerates coend data up to the middle bound, maps each through its zeta,
// and compares with enumerate_homs. A bijection is expected exactly when at
// most one of U, V contains dual letters; otherwise only containment and
// bound stability are claimed, and surjectivity is reported as observed.
ZetaReport check_zeta_bijective(const Signature& sig, const Word& U,
                                const Word& V, int bound = -1);

// For every pair of dual-free words u, v with |u|+|v| <= bound, checks that
// adjoining the dual letter leaves hom(u,v) with exactly the identity when
// u = v and empty otherwise.
CheckReport check_omega_ff(const Signature& sig, int bound = 8);

}  // namespace dualcat
