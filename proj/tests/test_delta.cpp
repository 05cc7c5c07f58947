#include "doctest.h"
#include "dualcat/delta.hpp"

using namespace dualcat;

TEST_CASE("monotone map construction and derived data") {
  SimplicialMap xi(4, {0, 1, 2, 2, 3});
  CHECK(xi.m() == 5);
  CHECK(xi.n() == 4);
  CHECK(xi(3) == 2);
  CHECK(xi.collapsed_indices() == std::vector<int>{2});
  CHECK(xi.missed_values().empty());
  SimplicialMap psi(5, {0, 1, 3, 4});
  CHECK(psi.collapsed_indices().empty());
  CHECK(psi.missed_values() == std::vector<int>{2});
  CHECK_THROWS_AS(SimplicialMap(2, {0, 2}), ConfigError);
  CHECK_THROWS_AS(SimplicialMap(2, {1, 0}), ConfigError);
  CHECK_THROWS_AS(SimplicialMap(-1, {}), ConfigError);
}

TEST_CASE("generators and simplicial identities") {
  CHECK(face(4, 2) == SimplicialMap(5, {0, 1, 3, 4}));
  CHECK(degeneracy(4, 2) == SimplicialMap(4, {0, 1, 2, 2, 3}));
  CHECK(simplicial_identity(3) == SimplicialMap(3, {0, 1, 2}));
  for (int n = 1; n <= 4; ++n)
    for (int i = 0; i < n; ++i)
      CHECK(simplicial_compose(face(n, i), degeneracy(n, i)) ==
            simplicial_identity(n));
  CHECK(simplicial_compose(face(3, 0), face(4, 0)).missed_values() ==
        std::vector<int>{0, 1});
  CHECK_THROWS_AS(simplicial_compose(face(2, 0), face(2, 0)),
                  CompositionError);
}

TEST_CASE("ordinal sum") {
  CHECK(ordinal_sum(simplicial_identity(2), simplicial_identity(3)) ==
        simplicial_identity(5));
  CHECK(ordinal_sum(face(1, 0), degeneracy(1, 0)) ==
        SimplicialMap(3, {1, 2, 2}));
}

TEST_CASE("monotone map enumeration counts stars and bars") {
  CHECK(all_monotone_maps(0, 0).size() == 1);
  CHECK(all_monotone_maps(2, 0).empty());
  CHECK(all_monotone_maps(0, 3).size() == 1);
  CHECK(all_monotone_maps(2, 2).size() == 3);
  CHECK(all_monotone_maps(3, 2).size() == 4);
  CHECK(all_monotone_maps(2, 3).size() == 6);
  CHECK(all_monotone_maps(5, 5).size() == 126);
}

TEST_CASE("alternating words") {
  CHECK(alternating_word(0) == MarkedWord(""));
  CHECK(alternating_word(1) == MarkedWord("+-"));
  CHECK(alternating_word(4) == MarkedWord("+-+-+-+-"));
  CHECK(is_alternating(MarkedWord("+-+-")));
  CHECK_FALSE(is_alternating(MarkedWord("-+")));
  CHECK_FALSE(is_alternating(MarkedWord("+")));
}

TEST_CASE("embedding sends collapses to cups and misses to caps") {
  DiagMorphism s2 = to_morphism(degeneracy(4, 2));
  CHECK(s2.dom() == alternating_word(5));
  CHECK(s2.cod() == alternating_word(4));
  CHECK(s2.dom_through().complement().elements() == std::vector<int>{6, 7});
  CHECK(s2.cod_through().complement().is_empty());

  DiagMorphism d2 = to_morphism(face(4, 2));
  CHECK(d2.dom_through().complement().is_empty());
  CHECK(d2.cod_through().complement().elements() == std::vector<int>{5, 6});

  CHECK(to_morphism(simplicial_identity(3)) ==
        identity(alternating_word(3)));
}

TEST_CASE("embedding inverts on alternating endpoints") {
  for (int m = 0; m <= 5; ++m)
    for (int n = 0; n <= 5; ++n)
      for (const SimplicialMap& xi : all_monotone_maps(m, n))
        CHECK(from_morphism(to_morphism(xi)) == xi);
  CHECK_THROWS_AS(from_morphism(identity(MarkedWord("-"))), ConfigError);
}

TEST_CASE("embedding is functorial") {
  for (int m = 0; m <= 4; ++m)
    for (int n = 0; n <= 4; ++n)
      for (int p = 0; p <= 4; ++p)
        for (const SimplicialMap& xi : all_monotone_maps(m, n))
          for (const SimplicialMap& psi : all_monotone_maps(n, p))
            CHECK(to_morphism(simplicial_compose(xi, psi)) ==
                  compose(to_morphism(xi), to_morphism(psi)));
}

TEST_CASE("embedding turns ordinal sums into tensors") {
  for (int m = 0; m <= 2; ++m)
    for (int n = 0; n <= 2; ++n)
      for (int p = 0; p <= 2; ++p)
        for (int q = 0; q <= 2; ++q)
          for (const SimplicialMap& xi : all_monotone_maps(m, n))
            for (const SimplicialMap& psi : all_monotone_maps(p, q))
              CHECK(to_morphism(ordinal_sum(xi, psi)) ==
                    tensor(to_morphism(xi), to_morphism(psi)));
}
