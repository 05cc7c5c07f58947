#include "doctest.h"
#include "dualcat/dpr.hpp"

#include <numeric>

using namespace dualcat;

TEST_CASE("marked word parsing and printing") {
  MarkedWord w("-++-");
  CHECK(w.length() == 4);
  CHECK(w.str() == "-++-");
  CHECK(w.marked(2));
  CHECK_FALSE(w.marked(1));
  CHECK(MarkedWord().length() == 0);
  CHECK(MarkedWord("").str() == "");
  CHECK_THROWS_AS(MarkedWord("-x"), std::invalid_argument);
  CHECK(tensor(MarkedWord("-+"), MarkedWord("+")).str() == "-++");
  CHECK(subword(MarkedWord("-++-"), 2, 2).str() == "++");
  CHECK(subword(MarkedWord("-++-"), 1, 0).str() == "");
  CHECK(cup_word(2).str() == "--++");
  CHECK(cap_word(3).str() == "+++---");
  CHECK(cup_word(0).str() == "");
}

TEST_CASE("validation accepts the structured example") {
  MarkedWord dom("--+++-+-");
  MarkedWord cod("+++---");
  auto r = DiagMorphism::check(dom, cod, PosSet(8, {5, 8}), PosSet(6, {1, 6}));
  CHECK(r.ok);
  DiagMorphism f(dom, cod, PosSet(8, {5, 8}), PosSet(6, {1, 6}));
  CHECK(f.dom_through().elements() == std::vector<int>{5, 8});
}

TEST_CASE("validation reports the first broken condition") {
  auto r0 = DiagMorphism::check(MarkedWord("-"), MarkedWord("-"),
                                PosSet(2, {1}), PosSet(1, {1}));
  CHECK_FALSE(r0.ok);
  CHECK(r0.condition == 0);

  auto r1 = DiagMorphism::check(MarkedWord("-"), MarkedWord(""),
                                PosSet(1, {1}), PosSet(0, {}));
  CHECK_FALSE(r1.ok);
  CHECK(r1.condition == 1);

  auto r2 = DiagMorphism::check(MarkedWord("-"), MarkedWord("+"),
                                PosSet(1, {1}), PosSet(1, {1}));
  CHECK_FALSE(r2.ok);
  CHECK(r2.condition == 2);

  auto r3 = DiagMorphism::check(MarkedWord("+-"), MarkedWord(""),
                                PosSet(2, {}), PosSet(0, {}));
  CHECK_FALSE(r3.ok);
  CHECK(r3.condition == 3);

  auto r4 = DiagMorphism::check(MarkedWord("-+"), MarkedWord("-+"),
                                PosSet(2, {}), PosSet(2, {}));
  CHECK_FALSE(r4.ok);
  CHECK(r4.condition == 4);

  CHECK_THROWS_AS(DiagMorphism(MarkedWord("-"), MarkedWord("+"),
                               PosSet(1, {1}), PosSet(1, {1})),
                  ValidationError);
}

TEST_CASE("identity and invertibility") {
  MarkedWord w("-+-");
  DiagMorphism id = identity(w);
  CHECK(id.dom() == w);
  CHECK(id.cod() == w);
  CHECK(is_invertible(id));
  CHECK_FALSE(is_invertible(counit(1)));
  CHECK(counit(1).dom().str() == "-+");
  CHECK(unit(2).cod().str() == "++--");
}

TEST_CASE("zig zag composites collapse to identities") {
  // "-" -> "-+-" keeping the left strand, then "-+-" -> "-" keeping the right
  DiagMorphism f(MarkedWord("-"), MarkedWord("-+-"), PosSet(1, {1}),
                 PosSet(3, {1}));
  DiagMorphism g(MarkedWord("-+-"), MarkedWord("-"), PosSet(3, {3}),
                 PosSet(1, {1}));
  CHECK(compose(f, g) == identity(MarkedWord("-")));

  // the marked version: "+" -> "+-+" then back
  DiagMorphism fm(MarkedWord("+"), MarkedWord("+-+"), PosSet(1, {1}),
                  PosSet(3, {3}));
  DiagMorphism gm(MarkedWord("+-+"), MarkedWord("+"), PosSet(3, {1}),
                  PosSet(1, {1}));
  CHECK(compose(fm, gm) == identity(MarkedWord("+")));
}

TEST_CASE("composition follows the snake through nested middles") {
  DiagMorphism f(MarkedWord("-++---+--++"), MarkedWord("+--+---++-+"),
                 PosSet(11, {3, 4, 5, 8, 9, 10, 11}),
                 PosSet(11, {1, 2, 3, 6, 7, 8, 11}));
  DiagMorphism g(MarkedWord("+--+---++-+"), MarkedWord("+-++---"),
                 PosSet(11, {1, 2, 5}), PosSet(7, {1, 2, 7}));
  DiagMorphism h = compose(f, g);
  CHECK(h.dom().str() == "-++---+--++");
  CHECK(h.cod().str() == "+-++---");
  CHECK(h.dom_through().elements() == std::vector<int>{3, 4, 5});
  CHECK(h.cod_through().elements() == std::vector<int>{1, 2, 7});
}

TEST_CASE("composition rejects mismatched middles") {
  CHECK_THROWS_AS(compose(counit(1), counit(1)), CompositionError);
}

TEST_CASE("composition stays valid when cups land beside each other") {
  // Capping the two through strands of f folds its domain into the arc
  // pattern (()()), which no split into nested blocks covers. The composite
  // must still validate, keeping composition closed.
  DiagMorphism f(MarkedWord("--+-++"), MarkedWord("-+"), PosSet(6, {1, 6}),
                 PosSet(2, {1, 2}));
  DiagMorphism h = compose(f, counit(1));
  CHECK(h.dom().str() == "--+-++");
  CHECK(h.cod().str() == "");
  CHECK(h.dom_through().is_empty());
  auto r = DiagMorphism::check(h.dom(), h.cod(), h.dom_through(),
                               h.cod_through());
  CHECK(r.ok);
}

TEST_CASE("identity laws around a fixed morphism") {
  DiagMorphism f(MarkedWord("--+++-+-"), MarkedWord("+++---"),
                 PosSet(8, {5, 8}), PosSet(6, {1, 6}));
  CHECK(compose(identity(f.dom()), f) == f);
  CHECK(compose(f, identity(f.cod())) == f);
}

TEST_CASE("tensor concatenates strands") {
  DiagMorphism t = tensor(counit(1), identity(MarkedWord("-")));
  CHECK(t.dom().str() == "-+-");
  CHECK(t.cod().str() == "-");
  CHECK(t.dom_through().elements() == std::vector<int>{3});
  CHECK(t.cod_through().elements() == std::vector<int>{1});
  // tensor unit is neutral
  DiagMorphism f = counit(2);
  CHECK(tensor(f, identity(MarkedWord())) == f);
  CHECK(tensor(identity(MarkedWord()), f) == f);
}

TEST_CASE("decompose produces alternating factors that tensor back") {
  DiagMorphism f(MarkedWord("--+++-+-"), MarkedWord("+++---"),
                 PosSet(8, {5, 8}), PosSet(6, {1, 6}));
  auto parts = decompose(f);
  REQUIRE(parts.size() == 5);
  CHECK(parts[0] == identity(MarkedWord()));
  CHECK(parts[1].dom().str() == "--++");
  CHECK(parts[1].cod().str() == "");
  CHECK(parts[2] == identity(MarkedWord("+")));
  CHECK(parts[3].dom().str() == "-+");
  CHECK(parts[3].cod().str() == "++--");
  CHECK(parts[4] == identity(MarkedWord("-")));
  for (std::size_t i = 0; i < parts.size(); ++i)
    CHECK(is_invertible(parts[i]) == (i % 2 == 0));
  DiagMorphism back = parts[0];
  for (std::size_t i = 1; i < parts.size(); ++i) back = tensor(back, parts[i]);
  CHECK(back == f);
}

TEST_CASE("decompose of an identity and of an elementary morphism") {
  auto idparts = decompose(identity(MarkedWord("-+")));
  REQUIRE(idparts.size() == 1);
  CHECK(idparts[0] == identity(MarkedWord("-+")));

  auto eparts = decompose(counit(2));
  REQUIRE(eparts.size() == 3);
  CHECK(eparts[0] == identity(MarkedWord()));
  CHECK(eparts[1] == counit(2));
  CHECK(eparts[2] == identity(MarkedWord()));
}
