#include <vector>

#include "doctest.h"
#include "dualcat/matching.hpp"

using namespace dualcat;

namespace {

PosSet bits_to_set(int mask, int ambient) {
  std::vector<int> elems;
  for (int p = 1; p <= ambient; ++p)
    if (mask & (1 << (p - 1))) elems.push_back(p);
  return PosSet(ambient, elems);
}

std::vector<DiagMorphism> all_morphisms(const MarkedWord& dom,
                                        const MarkedWord& cod) {
  std::vector<DiagMorphism> out;
  int m = dom.length(), n = cod.length();
  for (int am = 0; am < (1 << m); ++am) {
    PosSet a = bits_to_set(am, m);
    for (int bm = 0; bm < (1 << n); ++bm) {
      PosSet b = bits_to_set(bm, n);
      if (a.size() != b.size()) continue;
      if (DiagMorphism::check(dom, cod, a, b).ok)
        out.push_back(DiagMorphism(dom, cod, a, b));
    }
  }
  return out;
}

std::vector<MarkedWord> words_up_to(int len) {
  std::vector<MarkedWord> out{MarkedWord()};
  for (int k = 1; k <= len; ++k)
    for (int mask = 0; mask < (1 << k); ++mask) {
      std::vector<int> plus;
      for (int p = 1; p <= k; ++p)
        if (mask & (1 << (p - 1))) plus.push_back(p);
      out.push_back(MarkedWord(k, plus));
    }
  return out;
}

}  // namespace

TEST_CASE("generators as matchings") {
  Matching id2 = to_matching(identity(MarkedWord("-+")));
  CHECK(id2.strands() ==
        std::vector<Strand>{{Endpoint{0, 1}, Endpoint{1, 1}},
                            {Endpoint{0, 2}, Endpoint{1, 2}}});
  Matching eps = to_matching(counit(1));
  CHECK(eps.strands() ==
        std::vector<Strand>{{Endpoint{0, 1}, Endpoint{0, 2}}});
  Matching eta = to_matching(unit(1));
  CHECK(eta.strands() ==
        std::vector<Strand>{{Endpoint{1, 1}, Endpoint{1, 2}}});
}

TEST_CASE("a structured morphism draws with nested strands") {
  DiagMorphism f(MarkedWord("--+++-+-"), MarkedWord("+++---"),
                 PosSet(8, {5, 8}), PosSet(6, {1, 6}));
  Matching mt = to_matching(f);
  CHECK(mt.strands() ==
        std::vector<Strand>{{Endpoint{0, 1}, Endpoint{0, 4}},
                            {Endpoint{0, 2}, Endpoint{0, 3}},
                            {Endpoint{0, 5}, Endpoint{1, 1}},
                            {Endpoint{0, 6}, Endpoint{0, 7}},
                            {Endpoint{0, 8}, Endpoint{1, 6}},
                            {Endpoint{1, 2}, Endpoint{1, 5}},
                            {Endpoint{1, 3}, Endpoint{1, 4}}});
  CHECK(from_matching(mt) == f);
}

TEST_CASE("matching validation") {
  MarkedWord w2("-+");
  // crossing through strands
  CHECK_THROWS_AS(Matching(w2, MarkedWord("+-"),
                           {{Endpoint{0, 1}, Endpoint{1, 2}},
                            {Endpoint{0, 2}, Endpoint{1, 1}}}),
                  ValidationError);
  // reused endpoint
  CHECK_THROWS_AS(Matching(w2, MarkedWord(),
                           {{Endpoint{0, 1}, Endpoint{0, 1}}}),
                  ValidationError);
  // a domain pair must open unmarked and close marked
  CHECK_THROWS_AS(Matching(MarkedWord("+-"), MarkedWord(),
                           {{Endpoint{0, 1}, Endpoint{0, 2}}}),
                  ValidationError);
  // a through strand must preserve the mark
  CHECK_THROWS_AS(Matching(MarkedWord("-"), MarkedWord("+"),
                           {{Endpoint{0, 1}, Endpoint{1, 1}}}),
                  ValidationError);
  // uncovered points
  CHECK_THROWS_AS(Matching(w2, w2, {{Endpoint{0, 1}, Endpoint{1, 1}}}),
                  ValidationError);
}

TEST_CASE("gluing the snake pair yields the identity strand") {
  DiagMorphism f(MarkedWord("-"), MarkedWord("-+-"), PosSet(1, {1}),
                 PosSet(3, {1}));
  DiagMorphism g(MarkedWord("-+-"), MarkedWord("-"), PosSet(3, {3}),
                 PosSet(1, {1}));
  Matching glued = glue_compose(to_matching(f), to_matching(g));
  CHECK(glued == to_matching(identity(MarkedWord("-"))));
}

TEST_CASE("gluing against an identity changes nothing") {
  DiagMorphism f(MarkedWord("--+++-+-"), MarkedWord("+++---"),
                 PosSet(8, {5, 8}), PosSet(6, {1, 6}));
  Matching mt = to_matching(f);
  CHECK(glue_compose(to_matching(identity(f.dom())), mt) == mt);
  CHECK(glue_compose(mt, to_matching(identity(f.cod()))) == mt);
}

TEST_CASE("gluing the stacked pair reproduces the composite normal form") {
  DiagMorphism f(MarkedWord("-++---+--++"), MarkedWord("+--+---++-+"),
                 PosSet(11, {3, 4, 5, 8, 9, 10, 11}),
                 PosSet(11, {1, 2, 3, 6, 7, 8, 11}));
  DiagMorphism g(MarkedWord("+--+---++-+"), MarkedWord("+-++---"),
                 PosSet(11, {1, 2, 5}), PosSet(7, {1, 2, 7}));
  Matching glued = glue_compose(to_matching(f), to_matching(g));
  DiagMorphism composite = compose(f, g);
  CHECK(composite.dom_through() == PosSet(11, {3, 4, 5}));
  CHECK(composite.cod_through() == PosSet(7, {1, 2, 7}));
  CHECK(glued == to_matching(composite));
  CHECK(from_matching(glued) == composite);
}

TEST_CASE("gluing agrees when cups land beside each other") {
  // Capping f folds its domain into the arc pattern (()()), so the glued
  // strands pair 1-6, 2-3, and 4-5.
  DiagMorphism f(MarkedWord("--+-++"), MarkedWord("-+"), PosSet(6, {1, 6}),
                 PosSet(2, {1, 2}));
  Matching glued = glue_compose(to_matching(f), to_matching(counit(1)));
  DiagMorphism composite = compose(f, counit(1));
  CHECK(glued == to_matching(composite));
  CHECK(glued.strands() ==
        std::vector<Strand>{{{0, 1}, {0, 6}}, {{0, 2}, {0, 3}},
                            {{0, 4}, {0, 5}}});
}

TEST_CASE("gluing rejects mismatched middle words") {
  Matching a = to_matching(counit(1));
  Matching b = to_matching(identity(MarkedWord("-")));
  CHECK_THROWS_AS(glue_compose(b, a), CompositionError);
}

TEST_CASE("round trip through the drawn form") {
  for (const MarkedWord& u : words_up_to(3))
    for (const MarkedWord& v : words_up_to(3))
      for (const DiagMorphism& f : all_morphisms(u, v))
        CHECK(from_matching(to_matching(f)) == f);
}

TEST_CASE("gluing and snaking agree on every composable pair") {
  std::vector<MarkedWord> words = words_up_to(4);
  int nw = static_cast<int>(words.size());
  std::vector<std::vector<std::vector<DiagMorphism>>> homs(nw);
  for (int i = 0; i < nw; ++i)
    for (int j = 0; j < nw; ++j)
      homs[i].push_back(all_morphisms(words[i], words[j]));
  int checked = 0;
  for (int i = 0; i < nw; ++i)
    for (int j = 0; j < nw; ++j) {
      if (homs[i][j].empty()) continue;
      for (int k = 0; k < nw; ++k)
        for (const DiagMorphism& f : homs[i][j])
          for (const DiagMorphism& g : homs[j][k]) {
            Matching glued = glue_compose(to_matching(f), to_matching(g));
            CHECK(from_matching(glued) == compose(f, g));
            ++checked;
          }
    }
  // Exhaustive count of composable pairs over words of length up to 4.
  CHECK(checked == 500);
}
