#include "dualcat/random.hpp"

namespace dualcat {

namespace {

int pick(std::mt19937& rng, int lo, int hi) {
  return std::uniform_int_distribution<int>(lo, hi)(rng);
}

template <typename T>
const T& pick_one(std::mt19937& rng, const std::vector<T>& items) {
  return items[static_cast<std::size_t>(
      pick(rng, 0, static_cast<int>(items.size()) - 1))];
}

// One elementary step out of w: contract a random cup interval or insert a
// random cap block, whichever the coin and the candidates allow.
SigMorphism random_layer(std::mt19937& rng, const Signature& sig,
                         const Word& w, int max_len) {
  int k = static_cast<int>(w.size());
  std::vector<Interval> cups;
  for (int lo = 1; lo <= k; ++lo)
    for (int hi = lo + 1; hi <= k; hi += 2)
      if (is_sig_cup(sig, w, {lo, hi})) cups.push_back({lo, hi});
  std::vector<Symbol> closable;
  for (const Symbol& s : sample_letters(sig))
    if (sig.next(s)) closable.push_back(s);
  bool can_insert = !closable.empty() && k + 2 <= max_len;
  bool contract = !cups.empty() && (!can_insert || pick(rng, 0, 1) == 0);
  if (contract) {
    Interval iv = pick_one(rng, cups);
    Word cod;
    std::vector<int> through;
    for (int p = 1; p <= k; ++p) {
      if (iv.contains(p)) continue;
      cod.push_back(w[static_cast<std::size_t>(p) - 1]);
      through.push_back(p);
    }
    int shorter = static_cast<int>(cod.size());
    return SigMorphism(sig, w, std::move(cod), PosSet(k, std::move(through)),
                       PosSet::full(shorter));
  }
  if (!can_insert) return sig_identity(sig, w);
  int h = (k + 4 <= max_len && pick(rng, 0, 2) == 0) ? 2 : 1;
  Word letters;
  for (int i = 0; i < h; ++i) letters.push_back(pick_one(rng, closable));
  Word block = cap_block(sig, letters);
  int at = pick(rng, 0, k);
  Word cod;
  std::vector<int> through;
  for (int p = 1; p <= at; ++p) {
    cod.push_back(w[static_cast<std::size_t>(p) - 1]);
    through.push_back(p);
  }
  cod.insert(cod.end(), block.begin(), block.end());
  for (int p = at + 1; p <= k; ++p) {
    cod.push_back(w[static_cast<std::size_t>(p) - 1]);
    through.push_back(p + static_cast<int>(block.size()));
  }
  int longer = static_cast<int>(cod.size());
  return SigMorphism(sig, w, std::move(cod), PosSet::full(k),
                     PosSet(longer, std::move(through)));
}

}  // namespace

std::vector<Symbol> sample_letters(const Signature& sig) {
  if (!sig.letters().empty()) return sig.letters();
  switch (sig.kind()) {
    case Signature::Kind::Dpr:
      return {"-", "+"};
    case Signature::Kind::Nat:
      return {"0", "1", "2"};
    case Signature::Kind::Int:
      return {"-1", "0", "1"};
    default:
      return {};
  }
}

Word random_word(std::mt19937& rng, const Signature& sig, int max_len) {
  std::vector<Symbol> pool = sample_letters(sig);
  Word w;
  int len = pick(rng, 0, max_len);
  for (int i = 0; i < len; ++i) w.push_back(pick_one(rng, pool));
  return w;
}

SigMorphism random_sig_morphism(std::mt19937& rng, const Signature& sig,
                                const Word& dom, int layers, int max_len) {
  SigMorphism m = sig_identity(sig, dom);
  for (int i = 0; i < layers; ++i)
    m = sig_compose(m, random_layer(rng, sig, m.cod(), max_len));
  return m;
}

std::vector<SigMorphism> random_sig_chain(std::mt19937& rng,
                                          const Signature& sig, int count,
                                          int layers, int max_len) {
  std::vector<SigMorphism> chain;
  Word cur = random_word(rng, sig, max_len);
  for (int i = 0; i < count; ++i) {
    chain.push_back(random_sig_morphism(rng, sig, cur, layers, max_len));
    cur = chain.back().cod();
  }
  return chain;
}

DiagMorphism random_morphism(std::mt19937& rng, const MarkedWord& dom,
                             int layers, int max_len) {
  Word w;
  for (int p = 1; p <= dom.length(); ++p)
    w.push_back(dom.marked(p) ? "+" : "-");
  return from_sig(random_sig_morphism(rng, Signature::dpr(), w, layers,
                                      max_len));
}

std::vector<DiagMorphism> random_chain(std::mt19937& rng, int count,
                                       int layers, int max_len) {
  std::vector<DiagMorphism> out;
  for (const SigMorphism& f :
       random_sig_chain(rng, Signature::dpr(), count, layers, max_len))
    out.push_back(from_sig(f));
  return out;
}

}  // namespace dualcat
