#pragma once

#include <vector>

#include "dualcat/dpr.hpp"

namespace dualcat {

// An order-preserving map between finite ordinals {0,..,m-1} -> {0,..,n-1},
// stored as its value list. Values are 0-based; this module is the only
// place 0-based indices cross into the 1-based position world.
class SimplicialMap {
 public:
  SimplicialMap(int n, std::vector<int> values);

  int m() const { return static_cast<int>(values_.size()); }
  int n() const { return n_; }
  const std::vector<int>& values() const { return values_; }
  int operator()(int i) const { return values_[static_cast<std::size_t>(i)]; }

  // indices i with value(i) == value(i+1)
  std::vector<int> collapsed_indices() const;
  // codomain values that are never hit
  std::vector<int> missed_values() const;

  bool operator==(const SimplicialMap&) const = default;

 private:
  int n_;
  std::vector<int> values_;
};

SimplicialMap simplicial_identity(int n);
// the injection {0,..,n-1} -> {0,..,n} skipping value i
SimplicialMap face(int n, int i);
// the surjection {0,..,n} -> {0,..,n-1} taking i twice
SimplicialMap degeneracy(int n, int i);
// diagrammatic order: apply f first, then g
SimplicialMap simplicial_compose(const SimplicialMap& f,
                                 const SimplicialMap& g);
SimplicialMap ordinal_sum(const SimplicialMap& f, const SimplicialMap& g);
std::vector<SimplicialMap> all_monotone_maps(int m, int n);

// the strictly alternating marked word ("+-")^n
MarkedWord alternating_word(int n);
bool is_alternating(const MarkedWord& w);

// Embeds a monotone map as a morphism alternating_word(m) ->
// alternating_word(n): collapsed indices become width-2 cups, missed values
// become width-2 caps.
DiagMorphism to_morphism(const SimplicialMap& xi);

// Inverse of to_morphism on morphisms between alternating words.
SimplicialMap from_morphism(const DiagMorphism& f);

}  // namespace dualcat
