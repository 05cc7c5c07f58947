#pragma once

#include <utility>
#include <vector>

#include "dualcat/dpr.hpp"

namespace dualcat {

// One end of a strand: a 1-based position on the domain or codomain word.
struct Endpoint {
  int side = 0;  // 0 domain, 1 codomain
  int pos = 0;
  bool operator==(const Endpoint&) const = default;
  auto operator<=>(const Endpoint&) const = default;
};

using Strand = std::pair<Endpoint, Endpoint>;

// A morphism drawn as a planar perfect matching on the boundary points of a
// strip: cups pair domain points, caps pair codomain points, through strands
// join a domain point to a codomain point with the same mark. The pairing is
// checked to be crossing-free against the boundary order of the strip.
class Matching {
 public:
  Matching(MarkedWord dom, MarkedWord cod, std::vector<Strand> strands);

  const MarkedWord& dom() const { return dom_; }
  const MarkedWord& cod() const { return cod_; }
  // Normalized: endpoints ordered within each strand, strands sorted.
  const std::vector<Strand>& strands() const { return strands_; }

  bool operator==(const Matching&) const = default;

 private:
  MarkedWord dom_, cod_;
  std::vector<Strand> strands_;
};

Matching to_matching(const DiagMorphism& m);
DiagMorphism from_matching(const Matching& mt);

// Stacks f under g, joins strands across the shared middle word, and reads
// off the boundary pairing of the glued picture. Paths are contracted with
// a union-find over the middle points, a mechanism deliberately different
// from the walk used by compose. A class with no boundary point would be a
// closed loop; the orientation of strands makes that impossible, so finding
// one raises an internal error.
Matching glue_compose(const Matching& f, const Matching& g);

}  // namespace dualcat
