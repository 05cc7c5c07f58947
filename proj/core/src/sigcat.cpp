#include "dualcat/sigcat.hpp"

#include <algorithm>
#include <utility>

namespace dualcat {

PairCompat sig_cup_compat(const Signature& sig, const Word& w) {
  return [&sig, &w](int a, int b) {
    auto n = sig.next(w[static_cast<std::size_t>(a) - 1]);
    return n && *n == w[static_cast<std::size_t>(b) - 1];
  };
}

PairCompat sig_cap_compat(const Signature& sig, const Word& w) {
  return [&sig, &w](int a, int b) {
    auto n = sig.next(w[static_cast<std::size_t>(b) - 1]);
    return n && *n == w[static_cast<std::size_t>(a) - 1];
  };
}

bool is_sig_cup(const Signature& sig, const Word& w, Interval iv) {
  if (iv.lo < 1 || iv.hi > static_cast<int>(w.size())) return false;
  return is_nested_block(iv, sig_cup_compat(sig, w));
}

bool is_sig_cap(const Signature& sig, const Word& w, Interval iv) {
  if (iv.lo < 1 || iv.hi > static_cast<int>(w.size())) return false;
  return is_nested_block(iv, sig_cap_compat(sig, w));
}

ValidationResult SigMorphism::check(const Signature& sig, const Word& dom,
                                    const Word& cod, const PosSet& A,
                                    const PosSet& B) {
  for (const Symbol& s : dom)
    if (!sig.has_letter(s)) return {false, 0, "domain letter " + s + " unknown"};
  for (const Symbol& s : cod)
    if (!sig.has_letter(s))
      return {false, 0, "codomain letter " + s + " unknown"};
  if (A.ambient() != static_cast<int>(dom.size()))
    return {false, 0, "domain subset ambient does not match the word"};
  if (B.ambient() != static_cast<int>(cod.size()))
    return {false, 0, "codomain subset ambient does not match the word"};
  if (A.size() != B.size())
    return {false, 1, "through subsets have different cardinality"};
  for (int r = 1; r <= A.size(); ++r) {
    if (dom[static_cast<std::size_t>(A.at(r)) - 1] !=
        cod[static_cast<std::size_t>(B.at(r)) - 1])
      return {false, 2, "corresponding through positions carry different letters"};
  }
  if (!region_pairing(A.complement(), sig_cup_compat(sig, dom)))
    return {false, 3, "domain complement admits no cup matching"};
  if (!region_pairing(B.complement(), sig_cap_compat(sig, cod)))
    return {false, 4, "codomain complement admits no cap matching"};
  return {};
}

SigMorphism::SigMorphism(Signature sig, Word dom, Word cod, PosSet A, PosSet B)
    : sig_(std::move(sig)),
      dom_(std::move(dom)),
      cod_(std::move(cod)),
      A_(std::move(A)),
      B_(std::move(B)) {
  ValidationResult r = check(sig_, dom_, cod_, A_, B_);
  if (!r.ok) throw ValidationError(r.condition, r.message);
}

SigMorphism sig_identity(const Signature& sig, const Word& w) {
  PosSet full = PosSet::full(static_cast<int>(w.size()));
  return SigMorphism(sig, w, w, full, full);
}

SigMorphism sig_compose(const SigMorphism& f, const SigMorphism& g) {
  if (!(f.sig() == g.sig()))
    throw CompositionError("compose: factors live over different signatures");
  if (f.cod() != g.dom())
    throw CompositionError("compose: codomain of the first factor differs from domain of the second");
  const Word& mid = f.cod();
  auto caps = region_pairing(f.cod_through().complement(),
                             sig_cap_compat(f.sig(), mid));
  auto cups = region_pairing(g.dom_through().complement(),
                             sig_cup_compat(f.sig(), mid));
  if (!caps || !cups)
    throw InternalError("compose: middle word lost its cup or cap structure");
  MiddleStructure m{f.cod_through(), g.dom_through(), std::move(*caps),
                    std::move(*cups)};
  auto [E, F] = transit_subsets(f.dom_through(), g.cod_through(), m);
  return SigMorphism(f.sig(), f.dom(), g.cod(), std::move(E), std::move(F));
}

SigMorphism sig_tensor(const SigMorphism& f, const SigMorphism& g) {
  if (!(f.sig() == g.sig()))
    throw CompositionError("tensor: factors live over different signatures");
  Word dom = f.dom();
  dom.insert(dom.end(), g.dom().begin(), g.dom().end());
  Word cod = f.cod();
  cod.insert(cod.end(), g.cod().begin(), g.cod().end());
  return SigMorphism(f.sig(), std::move(dom), std::move(cod),
                     concat(f.dom_through(), g.dom_through()),
                     concat(f.cod_through(), g.cod_through()));
}

bool sig_is_invertible(const SigMorphism& f) {
  return f.dom_through().size() == static_cast<int>(f.dom().size()) &&
         f.cod_through().size() == static_cast<int>(f.cod().size());
}

Word cup_block(const Signature& sig, const Word& letters) {
  Word out = letters;
  for (auto it = letters.rbegin(); it != letters.rend(); ++it) {
    auto n = sig.next(*it);
    if (!n) throw ConfigError("cup_block: letter " + *it + " has no successor");
    out.push_back(*n);
  }
  return out;
}

Word cap_block(const Signature& sig, const Word& letters) {
  Word out;
  for (const Symbol& s : letters) {
    auto n = sig.next(s);
    if (!n) throw ConfigError("cap_block: letter " + s + " has no successor");
    out.push_back(*n);
  }
  out.insert(out.end(), letters.rbegin(), letters.rend());
  return out;
}

SigMorphism sig_counit(const Signature& sig, const Word& letters) {
  Word dom = cup_block(sig, letters);
  int n = static_cast<int>(dom.size());
  return SigMorphism(sig, std::move(dom), {}, PosSet::empty(n),
                     PosSet::empty(0));
}

SigMorphism sig_unit(const Signature& sig, const Word& letters) {
  Word cod = cap_block(sig, letters);
  int n = static_cast<int>(cod.size());
  return SigMorphism(sig, {}, std::move(cod), PosSet::empty(0),
                     PosSet::empty(n));
}

std::vector<SigMorphism> sig_decompose(const SigMorphism& f) {
  std::vector<SigMorphism> out;
  auto slice = [](const Word& w, int lo, int len) {
    return Word(w.begin() + lo - 1, w.begin() + lo - 1 + len);
  };
  for (const FactorPiece& p : split_factors(f.dom_through(), f.cod_through())) {
    Word d = slice(f.dom(), p.dom_lo, p.dom_len);
    Word c = slice(f.cod(), p.cod_lo, p.cod_len);
    if (p.invertible) {
      out.push_back(SigMorphism(f.sig(), std::move(d), std::move(c),
                                PosSet::full(p.dom_len),
                                PosSet::full(p.cod_len)));
    } else {
      out.push_back(SigMorphism(f.sig(), std::move(d), std::move(c),
                                PosSet::empty(p.dom_len),
                                PosSet::empty(p.cod_len)));
    }
  }
  return out;
}

namespace {

Word marked_to_word(const MarkedWord& w) {
  Word out;
  out.reserve(static_cast<std::size_t>(w.length()));
  for (int p = 1; p <= w.length(); ++p)
    out.push_back(w.marked(p) ? "+" : "-");
  return out;
}

MarkedWord word_to_marked(const Word& w) {
  std::vector<int> plus;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (w[i] == "+") {
      plus.push_back(static_cast<int>(i) + 1);
    } else if (w[i] != "-") {
      throw ConfigError("expected a word over '-' and '+', found " + w[i]);
    }
  }
  return MarkedWord(static_cast<int>(w.size()), std::move(plus));
}

}  // namespace

SigMorphism to_sig(const DiagMorphism& f) {
  return SigMorphism(Signature::dpr(), marked_to_word(f.dom()),
                     marked_to_word(f.cod()), f.dom_through(),
                     f.cod_through());
}

DiagMorphism from_sig(const SigMorphism& f) {
  if (f.sig().kind() != Signature::Kind::Dpr)
    throw ConfigError("from_sig: morphism is not over the '-'/'+' signature");
  return DiagMorphism(word_to_marked(f.dom()), word_to_marked(f.cod()),
                      f.dom_through(), f.cod_through());
}

std::vector<int> word_to_tree(const MarkedWord& w) {
  std::vector<int> code{0};
  for (int p = 1; p <= w.length(); ++p) {
    if (w.marked(p)) {
      code.push_back(0);
    } else {
      ++code.back();
    }
  }
  return code;
}

MarkedWord tree_to_word(const std::vector<int>& code) {
  if (code.empty()) throw ConfigError("tree code must be nonempty");
  for (int e : code)
    if (e < 0) throw ConfigError("tree code entries must be nonnegative");
  std::vector<int> plus;
  int pos = 0;
  for (std::size_t i = 0; i < code.size(); ++i) {
    if (i > 0) plus.push_back(++pos);
    pos += code[i];
  }
  return MarkedWord(pos, std::move(plus));
}

std::vector<int> tree_tensor(const std::vector<int>& a,
                             const std::vector<int>& b) {
  if (a.empty() || b.empty()) throw ConfigError("tree code must be nonempty");
  std::vector<int> out(a.begin(), a.end() - 1);
  out.push_back(a.back() + b.front());
  out.insert(out.end(), b.begin() + 1, b.end());
  return out;
}

}  // namespace dualcat
