#include "doctest.h"
#include "dualcat/homs.hpp"

#include <set>
#include <string>
#include <vector>

#include "dualcat/delta.hpp"

using namespace dualcat;

namespace {

PosSet bits_to_set(int ambient, unsigned mask) {
  std::vector<int> elems;
  for (int p = 1; p <= ambient; ++p)
    if (mask & (1u << (p - 1))) elems.push_back(p);
  return PosSet(ambient, std::move(elems));
}

using Key = std::pair<std::vector<int>, std::vector<int>>;

Key key_of(const SigMorphism& f) {
  return {f.dom_through().elements(), f.cod_through().elements()};
}

std::set<Key> brute_force(const Signature& sig, const Word& dom,
                          const Word& cod) {
  std::set<Key> out;
  int dn = static_cast<int>(dom.size());
  int cn = static_cast<int>(cod.size());
  for (unsigned am = 0; am < (1u << dn); ++am)
    for (unsigned bm = 0; bm < (1u << cn); ++bm) {
      PosSet A = bits_to_set(dn, am);
      PosSet B = bits_to_set(cn, bm);
      if (SigMorphism::check(sig, dom, cod, A, B).ok)
        out.insert({A.elements(), B.elements()});
    }
  return out;
}

std::vector<Word> dpr_words_up_to(const Signature& sig, int len) {
  std::vector<Word> out;
  for (int n = 0; n <= len; ++n)
    for (unsigned mask = 0; mask < (1u << n); ++mask) {
      Word w;
      for (int i = 0; i < n; ++i)
        w.push_back((mask & (1u << i)) ? "+" : "-");
      out.push_back(std::move(w));
    }
  return out;
}

long long binom(int a, int b) {
  if (b < 0 || b > a) return 0;
  long long r = 1;
  for (int i = 1; i <= b; ++i) r = r * (a - b + i) / i;
  return r;
}

}  // namespace

TEST_CASE("enumeration agrees with the subset brute force") {
  Signature dpr = Signature::dpr();
  auto words = dpr_words_up_to(dpr, 3);
  for (const Word& d : words)
    for (const Word& c : words) {
      HomSet hs = enumerate_homs(dpr, d, c);
      std::set<Key> got;
      for (const SigMorphism& f : hs.morphisms) got.insert(key_of(f));
      CHECK(got.size() == hs.morphisms.size());
      CHECK(got == brute_force(dpr, d, c));
    }
}

TEST_CASE("generator hom sets") {
  Signature dpr = Signature::dpr();
  HomSet unit = enumerate_homs(dpr, {}, {"+", "-"});
  REQUIRE(unit.morphisms.size() == 1);
  CHECK(unit.morphisms[0].dom_through().is_empty());
  CHECK(unit.morphisms[0].cod_through().is_empty());
  CHECK(enumerate_homs(dpr, {"-"}, {"+"}).morphisms.empty());
  CHECK(enumerate_homs(dpr, {"-", "+"}, {}).morphisms.size() == 1);
  CHECK(enumerate_homs(dpr, {"+", "-"}, {}).morphisms.empty());
}

TEST_CASE("hom sets into alternating words are singletons") {
  // The cap matching of (+-)^n is forced, pairing 2i-1 with 2i, so the
  // empty-domain hom stays a singleton for every n.
  Signature dpr = Signature::dpr();
  for (int n = 1; n <= 5; ++n) {
    Word cod = dpr.parse_word(alternating_word(n).str());
    CHECK(enumerate_homs(dpr, {}, cod).morphisms.size() == 1);
  }
}

TEST_CASE("alternating hom counts follow the monotone map formula") {
  Signature dpr = Signature::dpr();
  for (int m = 0; m <= 4; ++m)
    for (int n = 0; n <= 4; ++n) {
      Word d = dpr.parse_word(alternating_word(m).str());
      Word c = dpr.parse_word(alternating_word(n).str());
      std::size_t count = enumerate_homs(dpr, d, c).morphisms.size();
      CHECK(count == all_monotone_maps(m, n).size());
      if (m + n >= 1)
        CHECK(static_cast<long long>(count) == binom(m + n - 1, m));
    }
}

TEST_CASE("resource bound guards the enumeration") {
  Signature dpr = Signature::dpr();
  Word theta5 = dpr.parse_word(alternating_word(5).str());
  CHECK_THROWS_AS(enumerate_homs(dpr, theta5, theta5), ResourceError);
  CHECK(enumerate_homs(dpr, theta5, theta5, 20).morphisms.size() == 126);
}

TEST_CASE("dual adjunction signature basics") {
  Signature sig = Signature::parse_descriptor("cjv:x:x");
  auto [j, dual] = dual_pair(sig);
  CHECK(j == "x");
  CHECK(dual == "x^");
  CHECK_THROWS_AS(dual_pair(Signature::dpr()), ConfigError);
  auto blocks = split_at_dual(sig, {"x", "x^", "x", "x^", "x", "x"});
  REQUIRE(blocks.size() == 3);
  CHECK(blocks[0] == Word{"x"});
  CHECK(blocks[1] == Word{"x"});
  CHECK(blocks[2] == Word{"x", "x"});
}

TEST_CASE("dual-free words keep exactly their identities") {
  Signature sig = Signature::parse_descriptor("cjv:x:x");
  CheckReport rep = check_omega_ff(sig, 8);
  CHECK(rep.pass);
  CHECK(enumerate_homs(sig, {"x", "x"}, {"x", "x"}).morphisms.size() == 1);
  CHECK(enumerate_homs(sig, {"x"}, {"x", "x"}).morphisms.empty());
}

TEST_CASE("capping the tail reproduces the counit") {
  Signature sig = Signature::parse_descriptor("cjv:x:x");
  Word U{"x", "x^"};
  Word V{};
  auto elems = coend_elements(sig, U, V);
  REQUIRE(elems.size() == 1);
  CHECK(elems[0].middles == std::vector<Word>{{}});
  CHECK(zeta_m0(sig, U, V, elems[0]) == sig_counit(sig, {"x"}));
  ZetaReport rep = check_zeta_bijective(sig, U, V);
  CHECK(rep.m == 1);
  CHECK(rep.n == 0);
  CHECK(rep.expected_bijective);
  CHECK(rep.hom_count == 1);
  CHECK(rep.summary.pass);
}

TEST_CASE("two dual letters feed the same tail check") {
  Signature sig = Signature::parse_descriptor("cjv:x:x");
  Word U{"x", "x^", "x", "x", "x^"};
  Word V{"x"};
  auto elems = coend_elements(sig, U, V);
  REQUIRE(elems.size() == 1);
  CHECK(elems[0].middles == std::vector<Word>{{"x"}});
  SigMorphism im = zeta_m0(sig, U, V, elems[0]);
  CHECK(im.dom_through() == PosSet(5, {3}));
  CHECK(im.cod_through() == PosSet(1, {1}));
  ZetaReport rep = check_zeta_bijective(sig, U, V);
  CHECK(rep.hom_count == 1);
  CHECK(rep.surjective);
  CHECK(rep.summary.pass);
}

TEST_CASE("padding with the unit reproduces the cap") {
  Signature sig = Signature::parse_descriptor("cjv:x:x");
  Word U{"x"};
  Word V{"x^", "x", "x"};
  auto elems = coend_elements(sig, U, V);
  REQUIRE(elems.size() == 1);
  SigMorphism expected =
      sig_tensor(sig_unit(sig, {"x"}), sig_identity(sig, {"x"}));
  CHECK(zeta_0n(sig, U, V, elems[0]) == expected);
  ZetaReport rep = check_zeta_bijective(sig, U, V);
  CHECK(rep.m == 0);
  CHECK(rep.n == 1);
  CHECK(rep.hom_count == 1);
  CHECK(rep.summary.pass);
}

TEST_CASE("a second block threads the unit deeper") {
  Signature sig = Signature::parse_descriptor("cjv:x:x");
  Word U{"x", "x"};
  Word V{"x", "x^", "x", "x^", "x", "x"};
  auto elems = coend_elements(sig, U, V);
  REQUIRE(elems.size() == 1);
  CHECK(elems[0].middles == std::vector<Word>{{"x"}});
  SigMorphism im = zeta_0n(sig, U, V, elems[0]);
  CHECK(im.dom_through() == PosSet(2, {1, 2}));
  CHECK(im.cod_through() == PosSet(6, {1, 6}));
  ZetaReport rep = check_zeta_bijective(sig, U, V);
  CHECK(rep.hom_count == 1);
  CHECK(rep.surjective);
  CHECK(rep.stable);
  CHECK(rep.summary.pass);
}

TEST_CASE("both-sided data miss the identities") {
  // Every two-sided composite factors through a dual-free word, so the
  // identity, which carries its dual letter straight through, is never hit.
  Signature sig = Signature::parse_descriptor("cjv:x:x");
  Word U{"x", "x^", "x"};
  auto elems = coend_elements(sig, U, U);
  REQUIRE(elems.size() == 1);
  SigMorphism expected = sig_compose(
      sig_tensor(sig_counit(sig, {"x"}), sig_identity(sig, {"x"})),
      sig_tensor(sig_identity(sig, {"x"}), sig_unit(sig, {"x"})));
  CHECK(zeta_mn(sig, U, U, elems[0]) == expected);
  ZetaReport rep = check_zeta_bijective(sig, U, U);
  CHECK(rep.m == 1);
  CHECK(rep.n == 1);
  CHECK_FALSE(rep.expected_bijective);
  CHECK(rep.elements == 1);
  CHECK(rep.injective);
  CHECK(rep.hom_count == 2);
  CHECK_FALSE(rep.surjective);
  CHECK(rep.contained);
  CHECK(rep.stable);
  CHECK(rep.summary.pass);
}

TEST_CASE("middles can outgrow the codomain head") {
  Signature sig = Signature::parse_descriptor("cjv:x:x");
  Word U{"x", "x^", "x", "x", "x", "x^"};
  Word V{"x", "x^", "x", "x"};
  auto elems = coend_elements(sig, U, V);
  REQUIRE(elems.size() == 1);
  CHECK(elems[0].middles ==
        std::vector<Word>{{"x", "x"}, {"x"}});
  SigMorphism im = zeta_mn(sig, U, V, elems[0]);
  CHECK(im.dom_through() == PosSet(6, {3, 4}));
  CHECK(im.cod_through() == PosSet(4, {1, 4}));
  ZetaReport rep = check_zeta_bijective(sig, U, V);
  CHECK(rep.elements == 1);
  CHECK(rep.hom_count == 2);
  CHECK_FALSE(rep.surjective);
  CHECK(rep.stable);
  CHECK(rep.summary.pass);
}

TEST_CASE("the dual generator alone has an empty coend") {
  Signature sig = Signature::parse_descriptor("cjv:x:x");
  Word U{"x^"};
  CHECK(coend_elements(sig, U, U).empty());
  ZetaReport rep = check_zeta_bijective(sig, U, U);
  CHECK(rep.elements == 0);
  CHECK(rep.hom_count == 1);
  CHECK_FALSE(rep.surjective);
  CHECK(rep.injective);
  CHECK(rep.stable);
  CHECK(rep.summary.pass);
}

TEST_CASE("zeta rejects mismatched data") {
  Signature sig = Signature::parse_descriptor("cjv:x:x");
  Word U{"x", "x^"};
  Word V{};
  auto elems = coend_elements(sig, U, V);
  REQUIRE(elems.size() == 1);
  CHECK_THROWS_AS(zeta_0n(sig, U, V, elems[0]), CompositionError);
  CHECK_THROWS_AS(zeta_mn(sig, U, V, elems[0]), CompositionError);
  CoendElement distorted = elems[0];
  distorted.middles[0] = {"x"};
  CHECK_THROWS_AS(zeta_m0(sig, U, V, distorted), CompositionError);
}
