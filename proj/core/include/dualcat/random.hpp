#pragma once

#include <random>
#include <vector>

#include "dualcat/dpr.hpp"
#include "dualcat/sigcat.hpp"

namespace dualcat {

// Letters random words draw from: the registered table when the signature
// keeps one, a small sample around zero for the rule-based alphabets.
std::vector<Symbol> sample_letters(const Signature& sig);

// A word of length at most max_len over the sample letters.
Word random_word(std::mt19937& rng, const Signature& sig, int max_len);

// A morphism out of dom assembled from `layers` elementary steps, each an
// identity tensored with one counit (contracting a cup interval) or one
// unit (inserting a cap block). Intermediate words never grow past max_len;
// a step with no room to insert and no cup to contract is the identity.
SigMorphism random_sig_morphism(std::mt19937& rng, const Signature& sig,
                                const Word& dom, int layers, int max_len);

// A composable chain out of a random start word: the codomain of each entry
// is the domain of the next.
std::vector<SigMorphism> random_sig_chain(std::mt19937& rng,
                                          const Signature& sig, int count,
                                          int layers, int max_len);

// The '-'/'+' specializations of the two builders above.
DiagMorphism random_morphism(std::mt19937& rng, const MarkedWord& dom,
                             int layers, int max_len);
std::vector<DiagMorphism> random_chain(std::mt19937& rng, int count,
                                       int layers, int max_len);

}  // namespace dualcat
