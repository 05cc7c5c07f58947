#include "dualcat/homs.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace dualcat {

namespace {

Word cat(const Word& a, const Word& b) {
  Word out = a;
  out.insert(out.end(), b.begin(), b.end());
  return out;
}

bool is_prefix(const Word& p, const Word& w) {
  return p.size() <= w.size() && std::equal(p.begin(), p.end(), w.begin());
}

bool is_suffix(const Word& s, const Word& w) {
  return s.size() <= w.size() && std::equal(s.rbegin(), s.rend(), w.rbegin());
}

// blocks[lo..hi] rejoined with the dual letter between consecutive blocks.
Word join_blocks(const std::vector<Word>& blocks, std::size_t lo,
                 std::size_t hi, const Symbol& dual) {
  Word out;
  for (std::size_t i = lo; i <= hi; ++i) {
    if (i > lo) out.push_back(dual);
    out.insert(out.end(), blocks[i].begin(), blocks[i].end());
  }
  return out;
}

// Enumerates the through-position sets of w whose complement runs admit a
// matching. Every reachable matcher stack is tracked at once, since a letter
// may both open an arc and close one; a stack holds the letters required to
// close the currently open arcs, innermost last. A through position needs an
// empty reachable stack (its run must already be matched), and it resets the
// tracked set to just the empty stack.
void side_dfs(const Signature& sig, const Word& w, bool cups, std::size_t p,
              const std::set<std::vector<Symbol>>& stacks,
              std::vector<int>& chosen, std::vector<std::vector<int>>& out) {
  if (p == w.size()) {
    if (stacks.count({})) out.push_back(chosen);
    return;
  }
  if (stacks.count({})) {
    chosen.push_back(static_cast<int>(p) + 1);
    side_dfs(sig, w, cups, p + 1, {{}}, chosen, out);
    chosen.pop_back();
  }
  const Symbol& x = w[p];
  auto closer = cups ? sig.next(x) : sig.prev(x);
  std::set<std::vector<Symbol>> evolved;
  std::size_t room = w.size() - p - 1;
  for (const auto& s : stacks) {
    if (!s.empty() && s.back() == x) {
      auto t = s;
      t.pop_back();
      evolved.insert(std::move(t));
    }
    if (closer && s.size() < room) {
      auto t = s;
      t.push_back(*closer);
      evolved.insert(std::move(t));
    }
  }
  if (!evolved.empty()) side_dfs(sig, w, cups, p + 1, evolved, chosen, out);
}

std::vector<std::vector<int>> side_subsets(const Signature& sig, const Word& w,
                                           bool cups) {
  std::vector<std::vector<int>> out;
  std::vector<int> chosen;
  side_dfs(sig, w, cups, 0, {{}}, chosen, out);
  return out;
}

Word letters_at(const Word& w, const std::vector<int>& positions) {
  Word out;
  out.reserve(positions.size());
  for (int p : positions) out.push_back(w[static_cast<std::size_t>(p) - 1]);
  return out;
}

using MorphKey = std::pair<std::vector<int>, std::vector<int>>;

MorphKey key_of(const SigMorphism& f) {
  return {f.dom_through().elements(), f.cod_through().elements()};
}

}  // namespace

HomSet enumerate_homs(const Signature& sig, const Word& dom, const Word& cod,
                      int bound) {
  int total = static_cast<int>(dom.size() + cod.size());
  if (total > bound)
    throw ResourceError("enumerate_homs: " + std::to_string(total) +
                        " positions exceed the bound " +
                        std::to_string(bound));
  std::map<Word, std::vector<std::vector<int>>> byA, byB;
  for (auto& a : side_subsets(sig, dom, true))
    byA[letters_at(dom, a)].push_back(std::move(a));
  for (auto& b : side_subsets(sig, cod, false))
    byB[letters_at(cod, b)].push_back(std::move(b));
  HomSet hs{sig, dom, cod, {}};
  for (const auto& [key, as] : byA) {
    auto it = byB.find(key);
    if (it == byB.end()) continue;
    for (const auto& a : as)
      for (const auto& b : it->second)
        hs.morphisms.emplace_back(
            sig, dom, cod, PosSet(static_cast<int>(dom.size()), a),
            PosSet(static_cast<int>(cod.size()), b));
  }
  std::sort(hs.morphisms.begin(), hs.morphisms.end(),
            [](const SigMorphism& f, const SigMorphism& g) {
              return key_of(f) < key_of(g);
            });
  return hs;
}

std::pair<Symbol, Symbol> dual_pair(const Signature& sig) {
  std::vector<std::pair<Symbol, Symbol>> found;
  for (const Symbol& s : sig.letters())
    if (auto n = sig.next(s)) found.emplace_back(s, *n);
  if (found.size() != 1)
    throw ConfigError(
        "dual_pair: signature must adjoin exactly one dual letter");
  return found.front();
}

std::vector<Word> split_at_dual(const Signature& sig, const Word& w) {
  const Symbol dual = dual_pair(sig).second;
  std::vector<Word> blocks(1);
  for (const Symbol& s : w) {
    if (s == dual)
      blocks.emplace_back();
    else
      blocks.back().push_back(s);
  }
  return blocks;
}

namespace {

void require(bool ok, const std::string& what) {
  if (!ok) throw CompositionError(what);
}

}  // namespace

SigMorphism zeta_m0(const Signature& sig, const Word& U, const Word& V,
                    const CoendElement& e) {
  auto [j, dual] = dual_pair(sig);
  auto ub = split_at_dual(sig, U);
  std::size_t m = ub.size() - 1;
  require(m >= 1, "zeta_m0: domain has no dual letters");
  require(e.middles.size() == 1 && e.parts.size() == 2,
          "zeta_m0: datum must carry one middle and two parts");
  const Word& X = e.middles[0];
  const SigMorphism& f = e.parts[0];
  const SigMorphism& g = e.parts[1];
  Word head = join_blocks(ub, 0, m - 1, dual);
  const Word& tail = ub.back();
  require(f.dom() == head && f.cod() == cat(X, {j}),
          "zeta_m0: first part endpoints mismatch");
  require(g.dom() == cat(X, tail) && g.cod() == V,
          "zeta_m0: second part endpoints mismatch");
  SigMorphism s1 = sig_tensor(sig_tensor(f, sig_identity(sig, {dual})),
                              sig_identity(sig, tail));
  SigMorphism s2 = sig_tensor(
      sig_tensor(sig_identity(sig, X), sig_counit(sig, {j})),
      sig_identity(sig, tail));
  return sig_compose(sig_compose(s1, s2), g);
}

SigMorphism zeta_0n(const Signature& sig, const Word& U, const Word& V,
                    const CoendElement& e) {
  auto [j, dual] = dual_pair(sig);
  auto vb = split_at_dual(sig, V);
  std::size_t n = vb.size() - 1;
  require(n >= 1, "zeta_0n: codomain has no dual letters");
  require(e.middles.size() == 1 && e.parts.size() == 2,
          "zeta_0n: datum must carry one middle and two parts");
  const Word& Y = e.middles[0];
  const SigMorphism& f = e.parts[0];
  const SigMorphism& g = e.parts[1];
  const Word& head = vb.front();
  Word rest = join_blocks(vb, 1, n, dual);
  require(f.dom() == U && f.cod() == cat(head, Y),
          "zeta_0n: first part endpoints mismatch");
  require(g.dom() == cat({j}, Y) && g.cod() == rest,
          "zeta_0n: second part endpoints mismatch");
  SigMorphism s2 = sig_tensor(
      sig_tensor(sig_identity(sig, head), sig_unit(sig, {j})),
      sig_identity(sig, Y));
  SigMorphism s3 = sig_tensor(
      sig_tensor(sig_identity(sig, head), sig_identity(sig, {dual})), g);
  return sig_compose(sig_compose(f, s2), s3);
}

SigMorphism zeta_mn(const Signature& sig, const Word& U, const Word& V,
                    const CoendElement& e) {
  auto [j, dual] = dual_pair(sig);
  auto ub = split_at_dual(sig, U);
  auto vb = split_at_dual(sig, V);
  std::size_t m = ub.size() - 1;
  std::size_t n = vb.size() - 1;
  require(m >= 1 && n >= 1, "zeta_mn: both sides need dual letters");
  require(e.middles.size() == 2 && e.parts.size() == 3,
          "zeta_mn: datum must carry two middles and three parts");
  const Word& X = e.middles[0];
  const Word& Y = e.middles[1];
  const SigMorphism& f = e.parts[0];
  const SigMorphism& g = e.parts[1];
  const SigMorphism& h = e.parts[2];
  Word uhead = join_blocks(ub, 0, m - 1, dual);
  const Word& utail = ub.back();
  const Word& vhead = vb.front();
  Word vrest = join_blocks(vb, 1, n, dual);
  require(f.dom() == uhead && f.cod() == cat(X, {j}),
          "zeta_mn: first part endpoints mismatch");
  require(g.dom() == cat(X, utail) && g.cod() == cat(vhead, Y),
          "zeta_mn: second part endpoints mismatch");
  require(h.dom() == cat({j}, Y) && h.cod() == vrest,
          "zeta_mn: third part endpoints mismatch");
  SigMorphism s1 = sig_tensor(sig_tensor(f, sig_identity(sig, {dual})),
                              sig_identity(sig, utail));
  SigMorphism s2 = sig_tensor(
      sig_tensor(sig_identity(sig, X), sig_counit(sig, {j})),
      sig_identity(sig, utail));
  SigMorphism s4 = sig_tensor(
      sig_tensor(sig_identity(sig, vhead), sig_unit(sig, {j})),
      sig_identity(sig, Y));
  SigMorphism s5 = sig_tensor(
      sig_tensor(sig_identity(sig, vhead), sig_identity(sig, {dual})), h);
  return sig_compose(
      sig_compose(sig_compose(sig_compose(s1, s2), g), s4), s5);
}

SigMorphism zeta_image(const Signature& sig, const Word& U, const Word& V,
                       const CoendElement& e) {
  std::size_t m = split_at_dual(sig, U).size() - 1;
  std::size_t n = split_at_dual(sig, V).size() - 1;
  if (m == 0 && n == 0) {
    require(e.middles.empty() && e.parts.size() == 1,
            "zeta_image: dual-free datum must be a single morphism");
    require(e.parts[0].dom() == U && e.parts[0].cod() == V,
            "zeta_image: dual-free datum endpoints mismatch");
    return e.parts[0];
  }
  if (n == 0) return zeta_m0(sig, U, V, e);
  if (m == 0) return zeta_0n(sig, U, V, e);
  return zeta_mn(sig, U, V, e);
}

std::vector<CoendElement> coend_elements(const Signature& sig, const Word& U,
                                         const Word& V, int bound) {
  auto [j, dual] = dual_pair(sig);
  auto ub = split_at_dual(sig, U);
  auto vb = split_at_dual(sig, V);
  std::size_t m = ub.size() - 1;
  std::size_t n = vb.size() - 1;
  if (bound < 0) bound = static_cast<int>(U.size() + V.size()) + 2;
  // Component hom-sets never exceed the endpoint sizes plus one middle word
  // plus the cup letter, so this bound cannot trip on them.
  int inner = static_cast<int>(U.size() + V.size()) + 2 * bound + 4;
  std::vector<CoendElement> out;
  if (m == 0 && n == 0) {
    if (U == V) out.push_back({{}, {sig_identity(sig, U)}});
    return out;
  }
  if (n == 0) {
    const Word& tail = ub.back();
    Word head = join_blocks(ub, 0, m - 1, dual);
    if (!is_suffix(tail, V)) return out;
    Word X(V.begin(), V.end() - static_cast<std::ptrdiff_t>(tail.size()));
    if (static_cast<int>(X.size()) > bound) return out;
    SigMorphism g = sig_identity(sig, cat(X, tail));
    for (auto& f : enumerate_homs(sig, head, cat(X, {j}), inner).morphisms)
      out.push_back({{X}, {f, g}});
    return out;
  }
  if (m == 0) {
    const Word& vhead = vb.front();
    Word vrest = join_blocks(vb, 1, n, dual);
    if (!is_prefix(vhead, U)) return out;
    Word Y(U.begin() + static_cast<std::ptrdiff_t>(vhead.size()), U.end());
    if (static_cast<int>(Y.size()) > bound) return out;
    SigMorphism f = sig_identity(sig, U);
    for (auto& g : enumerate_homs(sig, cat({j}, Y), vrest, inner).morphisms)
      out.push_back({{Y}, {f, g}});
    return out;
  }
  const Word& utail = ub.back();
  Word uhead = join_blocks(ub, 0, m - 1, dual);
  const Word& vhead = vb.front();
  Word vrest = join_blocks(vb, 1, n, dual);
  auto add = [&](const Word& X, const Word& Y) {
    auto fs = enumerate_homs(sig, uhead, cat(X, {j}), inner).morphisms;
    if (fs.empty()) return;
    auto hs = enumerate_homs(sig, cat({j}, Y), vrest, inner).morphisms;
    if (hs.empty()) return;
    SigMorphism g = sig_identity(sig, cat(X, utail));
    for (const auto& f : fs)
      for (const auto& h : hs) out.push_back({{X, Y}, {f, g, h}});
  };
  // The forced middle part equates X+utail with vhead+Y. Either X is a
  // prefix of vhead and the leftover of vhead must begin utail, or X extends
  // vhead by an arbitrary dual-free word that Y then carries.
  for (std::size_t t = 0; t <= vhead.size(); ++t) {
    Word rem(vhead.begin() + static_cast<std::ptrdiff_t>(t), vhead.end());
    if (!is_prefix(rem, utail)) continue;
    Word X(vhead.begin(), vhead.begin() + static_cast<std::ptrdiff_t>(t));
    Word Y(utail.begin() + static_cast<std::ptrdiff_t>(rem.size()),
           utail.end());
    if (static_cast<int>(std::max(X.size(), Y.size())) <= bound) add(X, Y);
  }
  std::vector<Symbol> base;
  for (const Symbol& s : sig.letters())
    if (s != dual) base.push_back(s);
  std::vector<Word> level{{}};
  while (!level.empty()) {
    std::vector<Word> grown;
    for (const Word& t : level)
      for (const Symbol& s : base) {
        Word u = t;
        u.push_back(s);
        if (static_cast<int>(vhead.size() + u.size()) <= bound)
          grown.push_back(std::move(u));
      }
    for (const Word& T : grown) {
      Word X = cat(vhead, T);
      Word Y = cat(T, utail);
      if (static_cast<int>(Y.size()) <= bound) add(X, Y);
    }
    level = std::move(grown);
  }
  return out;
}

namespace {

std::set<MorphKey> image_keys(const Signature& sig, const Word& U,
                              const Word& V, int bound) {
  std::set<MorphKey> keys;
  for (const CoendElement& e : coend_elements(sig, U, V, bound)) {
    SigMorphism im = zeta_image(sig, U, V, e);
    if (im.dom() != U || im.cod() != V)
      throw InternalError("check_zeta_bijective: image endpoints drifted");
    keys.insert(key_of(im));
  }
  return keys;
}

}  // namespace

ZetaReport check_zeta_bijective(const Signature& sig, const Word& U,
                                const Word& V, int bound) {
  ZetaReport rep;
  rep.m = static_cast<int>(split_at_dual(sig, U).size()) - 1;
  rep.n = static_cast<int>(split_at_dual(sig, V).size()) - 1;
  if (bound < 0) bound = static_cast<int>(U.size() + V.size()) + 2;
  auto elements = coend_elements(sig, U, V, bound);
  auto keys = image_keys(sig, U, V, bound);
  rep.elements = static_cast<int>(elements.size());
  rep.distinct_images = static_cast<int>(keys.size());
  rep.injective = rep.distinct_images == rep.elements;
  HomSet hs = enumerate_homs(sig, U, V,
                             static_cast<int>(U.size() + V.size()));
  rep.hom_count = static_cast<int>(hs.morphisms.size());
  std::set<MorphKey> hom_keys;
  for (const SigMorphism& f : hs.morphisms) hom_keys.insert(key_of(f));
  rep.surjective =
      std::includes(keys.begin(), keys.end(), hom_keys.begin(),
                    hom_keys.end());
  rep.contained =
      std::includes(hom_keys.begin(), hom_keys.end(), keys.begin(),
                    keys.end());
  rep.stable = image_keys(sig, U, V, bound + 2) == keys;
  rep.expected_bijective = rep.m == 0 || rep.n == 0;
  rep.summary.claim =
      rep.expected_bijective
          ? "coend presentation is a bijection onto the hom-set"
          : "coend presentation lands injectively in the hom-set";
  rep.summary.instance = sig.descriptor() + ": \"" + sig.print_word(U) +
                         "\" -> \"" + sig.print_word(V) + "\"";
  rep.summary.expected =
      rep.expected_bijective
          ? "every morphism hit exactly once, bound stable"
          : "distinct valid images only, bound stable";
  rep.summary.actual = std::to_string(rep.elements) + " data, " +
                       std::to_string(rep.distinct_images) +
                       " distinct images, " + std::to_string(rep.hom_count) +
                       " morphisms";
  bool sound = rep.injective && rep.contained && rep.stable;
  rep.summary.pass = rep.expected_bijective ? sound && rep.surjective : sound;
  return rep;
}

CheckReport check_omega_ff(const Signature& sig, int bound) {
  const Symbol dual = dual_pair(sig).second;
  std::vector<Symbol> base;
  for (const Symbol& s : sig.letters())
    if (s != dual) base.push_back(s);
  std::vector<Word> words{{}};
  std::vector<Word> level{{}};
  for (int len = 1; len <= bound; ++len) {
    std::vector<Word> grown;
    for (const Word& w : level)
      for (const Symbol& s : base) {
        Word u = w;
        u.push_back(s);
        grown.push_back(std::move(u));
      }
    words.insert(words.end(), grown.begin(), grown.end());
    level = std::move(grown);
  }
  CheckReport rep;
  rep.pass = true;
  int tested = 0;
  for (const Word& u : words)
    for (const Word& v : words) {
      if (static_cast<int>(u.size() + v.size()) > bound) continue;
      ++tested;
      std::size_t count = enumerate_homs(sig, u, v, bound).morphisms.size();
      std::size_t expect = (u == v) ? 1 : 0;
      if (count != expect && rep.pass) {
        rep.pass = false;
        rep.actual = "hom(\"" + sig.print_word(u) + "\", \"" +
                     sig.print_word(v) + "\") has " + std::to_string(count) +
                     " morphisms";
      }
    }
  rep.claim = "dual-free words keep exactly their identities";
  rep.instance =
      sig.descriptor() + ", total length <= " + std::to_string(bound);
  rep.expected = "hom(u,v) singleton when u = v, else empty, over " +
                 std::to_string(tested) + " pairs";
  if (rep.pass)
    rep.actual = "all " + std::to_string(tested) + " pairs as expected";
  return rep;
}

}  // namespace dualcat
