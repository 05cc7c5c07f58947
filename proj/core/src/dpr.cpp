#include "dualcat/dpr.hpp"

#include <utility>

namespace dualcat {

namespace {

PairCompat cup_compat(const PosSet& marks) {
  return [&marks](int a, int b) {
    return !marks.contains(a) && marks.contains(b);
  };
}

PairCompat cap_compat(const PosSet& marks) {
  return [&marks](int a, int b) {
    return marks.contains(a) && !marks.contains(b);
  };
}

}  // namespace

MarkedWord::MarkedWord(std::string_view text) : marks_(0, {}) {
  std::vector<int> plus;
  for (std::size_t i = 0; i < text.size(); ++i) {
    if (text[i] == '+') {
      plus.push_back(static_cast<int>(i) + 1);
    } else if (text[i] != '-') {
      throw std::invalid_argument("MarkedWord: expected only '-' and '+'");
    }
  }
  marks_ = PosSet(static_cast<int>(text.size()), std::move(plus));
}

std::string MarkedWord::str() const {
  std::string out(static_cast<std::size_t>(length()), '-');
  for (int p : marks_.elements()) out[static_cast<std::size_t>(p) - 1] = '+';
  return out;
}

MarkedWord tensor(const MarkedWord& a, const MarkedWord& b) {
  PosSet m = concat(a.marks(), b.marks());
  return MarkedWord(m.ambient(), m.elements());
}

MarkedWord subword(const MarkedWord& w, int lo, int len) {
  if (len < 0 || lo < 1 || lo + len - 1 > w.length())
    throw InternalError("subword: range out of bounds");
  std::vector<int> plus;
  for (int p = lo; p < lo + len; ++p)
    if (w.marked(p)) plus.push_back(p - lo + 1);
  return MarkedWord(len, std::move(plus));
}

MarkedWord cup_word(int h) {
  std::vector<int> plus;
  for (int p = h + 1; p <= 2 * h; ++p) plus.push_back(p);
  return MarkedWord(2 * h, std::move(plus));
}

MarkedWord cap_word(int h) {
  std::vector<int> plus;
  for (int p = 1; p <= h; ++p) plus.push_back(p);
  return MarkedWord(2 * h, std::move(plus));
}

ValidationResult DiagMorphism::check(const MarkedWord& dom,
                                     const MarkedWord& cod, const PosSet& A,
                                     const PosSet& B) {
  if (A.ambient() != dom.length())
    return {false, 0, "domain subset ambient does not match the word"};
  if (B.ambient() != cod.length())
    return {false, 0, "codomain subset ambient does not match the word"};
  if (A.size() != B.size())
    return {false, 1, "through subsets have different cardinality"};
  for (int r = 1; r <= A.size(); ++r) {
    if (dom.marked(A.at(r)) != cod.marked(B.at(r)))
      return {false, 2, "corresponding through positions disagree on marks"};
  }
  if (!region_pairing(A.complement(), cup_compat(dom.marks())))
    return {false, 3, "domain complement admits no cup matching"};
  if (!region_pairing(B.complement(), cap_compat(cod.marks())))
    return {false, 4, "codomain complement admits no cap matching"};
  return {};
}

DiagMorphism::DiagMorphism(MarkedWord dom, MarkedWord cod, PosSet A, PosSet B)
    : dom_(std::move(dom)),
      cod_(std::move(cod)),
      A_(std::move(A)),
      B_(std::move(B)) {
  ValidationResult r = check(dom_, cod_, A_, B_);
  if (!r.ok) throw ValidationError(r.condition, r.message);
}

DiagMorphism identity(const MarkedWord& w) {
  PosSet full = PosSet::full(w.length());
  return DiagMorphism(w, w, full, full);
}

DiagMorphism compose(const DiagMorphism& f, const DiagMorphism& g) {
  if (!(f.cod() == g.dom()))
    throw CompositionError("compose: codomain of the first factor differs from domain of the second");
  const MarkedWord& mid = f.cod();
  auto caps = region_pairing(f.cod_through().complement(), cap_compat(mid.marks()));
  auto cups = region_pairing(g.dom_through().complement(), cup_compat(mid.marks()));
  if (!caps || !cups)
    throw InternalError("compose: middle word lost its cup or cap structure");
  MiddleStructure m{f.cod_through(), g.dom_through(), std::move(*caps),
                    std::move(*cups)};
  auto [E, F] = transit_subsets(f.dom_through(), g.cod_through(), m);
  return DiagMorphism(f.dom(), g.cod(), std::move(E), std::move(F));
}

DiagMorphism tensor(const DiagMorphism& f, const DiagMorphism& g) {
  return DiagMorphism(tensor(f.dom(), g.dom()), tensor(f.cod(), g.cod()),
                      concat(f.dom_through(), g.dom_through()),
                      concat(f.cod_through(), g.cod_through()));
}

bool is_invertible(const DiagMorphism& f) {
  return f.dom_through().size() == f.dom().length() &&
         f.cod_through().size() == f.cod().length();
}

DiagMorphism counit(int h) {
  return DiagMorphism(cup_word(h), MarkedWord(), PosSet::empty(2 * h),
                      PosSet::empty(0));
}

DiagMorphism unit(int h) {
  return DiagMorphism(MarkedWord(), cap_word(h), PosSet::empty(0),
                      PosSet::empty(2 * h));
}

std::vector<DiagMorphism> decompose(const DiagMorphism& f) {
  std::vector<DiagMorphism> out;
  for (const FactorPiece& p : split_factors(f.dom_through(), f.cod_through())) {
    MarkedWord d = subword(f.dom(), p.dom_lo, p.dom_len);
    MarkedWord c = subword(f.cod(), p.cod_lo, p.cod_len);
    if (p.invertible) {
      out.push_back(DiagMorphism(d, c, PosSet::full(p.dom_len),
                                 PosSet::full(p.cod_len)));
    } else {
      out.push_back(DiagMorphism(d, c, PosSet::empty(p.dom_len),
                                 PosSet::empty(p.cod_len)));
    }
  }
  return out;
}

}  // namespace dualcat
