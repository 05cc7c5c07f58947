#include "dualcat/ordinal.hpp"

#include <algorithm>
#include <stdexcept>

namespace dualcat {

PosSet::PosSet(int ambient, std::vector<int> elems)
    : ambient_(ambient), elems_(std::move(elems)) {
  if (ambient_ < 0) throw std::invalid_argument("PosSet: negative ambient");
  std::sort(elems_.begin(), elems_.end());
  for (std::size_t i = 0; i < elems_.size(); ++i) {
    if (elems_[i] < 1 || elems_[i] > ambient_)
      throw std::invalid_argument("PosSet: position out of range");
    if (i > 0 && elems_[i] == elems_[i - 1])
      throw std::invalid_argument("PosSet: duplicate position");
  }
}

PosSet PosSet::full(int ambient) {
  std::vector<int> all(static_cast<std::size_t>(std::max(ambient, 0)));
  for (int p = 1; p <= ambient; ++p) all[p - 1] = p;
  return PosSet(ambient, std::move(all));
}

bool PosSet::contains(int p) const {
  return std::binary_search(elems_.begin(), elems_.end(), p);
}

int PosSet::rank(int p) const {
  auto it = std::lower_bound(elems_.begin(), elems_.end(), p);
  if (it == elems_.end() || *it != p)
    throw InternalError("PosSet::rank: position not a member");
  return static_cast<int>(it - elems_.begin()) + 1;
}

int PosSet::at(int r) const {
  if (r < 1 || r > size()) throw InternalError("PosSet::at: rank out of range");
  return elems_[static_cast<std::size_t>(r) - 1];
}

PosSet PosSet::complement() const {
  std::vector<int> out;
  out.reserve(static_cast<std::size_t>(ambient_ - size()));
  std::size_t i = 0;
  for (int p = 1; p <= ambient_; ++p) {
    if (i < elems_.size() && elems_[i] == p) {
      ++i;
    } else {
      out.push_back(p);
    }
  }
  return PosSet(ambient_, std::move(out));
}

PosSet PosSet::intersection(const PosSet& other) const {
  if (ambient_ != other.ambient_)
    throw InternalError("PosSet::intersection: ambient mismatch");
  std::vector<int> out;
  std::set_intersection(elems_.begin(), elems_.end(), other.elems_.begin(),
                        other.elems_.end(), std::back_inserter(out));
  return PosSet(ambient_, std::move(out));
}

PosSet concat(const PosSet& a, const PosSet& b) {
  std::vector<int> out = a.elements();
  out.reserve(out.size() + b.elements().size());
  for (int p : b.elements()) out.push_back(p + a.ambient());
  return PosSet(a.ambient() + b.ambient(), std::move(out));
}

int cobber(int a, const PosSet& A, const PosSet& B) {
  if (A.size() != B.size())
    throw InternalError("cobber: sets of different cardinality");
  return B.at(A.rank(a));
}

void Pairing::link(int a, int b) {
  if (a == b || a < 1 || b < 1 || a > ambient() || b > ambient())
    throw InternalError("Pairing::link: bad endpoints");
  if (partner_[static_cast<std::size_t>(a)] != 0 ||
      partner_[static_cast<std::size_t>(b)] != 0)
    throw InternalError("Pairing::link: endpoint already paired");
  partner_[static_cast<std::size_t>(a)] = b;
  partner_[static_cast<std::size_t>(b)] = a;
}

bool Pairing::covers(int p) const {
  return p >= 1 && p <= ambient() && partner_[static_cast<std::size_t>(p)] != 0;
}

std::optional<int> Pairing::partner(int p) const {
  if (!covers(p)) return std::nullopt;
  return partner_[static_cast<std::size_t>(p)];
}

std::vector<std::pair<int, int>> Pairing::pairs() const {
  std::vector<std::pair<int, int>> out;
  for (int p = 1; p <= ambient(); ++p) {
    int q = partner_[static_cast<std::size_t>(p)];
    if (q > p) out.emplace_back(p, q);
  }
  return out;
}

bool is_cup(Interval iv, const PosSet& marks) {
  int n = iv.size();
  if (n == 0 || n % 2 != 0) return false;
  int mid = iv.lo + n / 2;
  for (int p = iv.lo; p < mid; ++p)
    if (marks.contains(p)) return false;
  for (int p = mid; p <= iv.hi; ++p)
    if (!marks.contains(p)) return false;
  return true;
}

bool is_cap(Interval iv, const PosSet& marks) {
  int n = iv.size();
  if (n == 0 || n % 2 != 0) return false;
  int mid = iv.lo + n / 2;
  for (int p = iv.lo; p < mid; ++p)
    if (!marks.contains(p)) return false;
  for (int p = mid; p <= iv.hi; ++p)
    if (marks.contains(p)) return false;
  return true;
}

bool is_nested_block(Interval iv, const PairCompat& compat) {
  int n = iv.size();
  if (n == 0 || n % 2 != 0) return false;
  for (int d = 0; d < n / 2; ++d)
    if (!compat(iv.lo + d, iv.hi - d)) return false;
  return true;
}

namespace {

// Matches positions p..hi against the arcs left open so far. Closing the
// innermost open arc is tried before opening a new one, so the earliest
// compatible closer wins; a dead end backtracks through both choices.
bool match_from(int p, int hi, const PairCompat& compat,
                std::vector<int>& open,
                std::vector<std::pair<int, int>>& pairs) {
  if (p > hi) return open.empty();
  if (!open.empty() && compat(open.back(), p)) {
    int a = open.back();
    open.pop_back();
    pairs.emplace_back(a, p);
    if (match_from(p + 1, hi, compat, open, pairs)) return true;
    pairs.pop_back();
    open.push_back(a);
  }
  // Every open arc needs a later closer, so opening past the midpoint of
  // what remains is hopeless.
  if (static_cast<int>(open.size()) + 1 > hi - p) return false;
  open.push_back(p);
  if (match_from(p + 1, hi, compat, open, pairs)) return true;
  open.pop_back();
  return false;
}

// Bracket-matches the run [lo,hi] and records the resulting pairs.
bool pair_run(int lo, int hi, const PairCompat& compat, Pairing& out) {
  int n = hi - lo + 1;
  if (n % 2 != 0) return false;
  std::vector<int> open;
  std::vector<std::pair<int, int>> pairs;
  pairs.reserve(static_cast<std::size_t>(n) / 2);
  if (!match_from(lo, hi, compat, open, pairs)) return false;
  for (auto [a, b] : pairs) out.link(a, b);
  return true;
}

}  // namespace

std::optional<Pairing> region_pairing(const PosSet& region,
                                      const PairCompat& compat) {
  Pairing out(region.ambient());
  const auto& el = region.elements();
  std::size_t i = 0;
  while (i < el.size()) {
    std::size_t j = i;
    while (j + 1 < el.size() && el[j + 1] == el[j] + 1) ++j;
    if (!pair_run(el[i], el[j], compat, out)) return std::nullopt;
    i = j + 1;
  }
  return out;
}

std::optional<int> cup_partner(int a, const PosSet& region,
                               const PosSet& marks) {
  if (!region.contains(a) || marks.contains(a)) return std::nullopt;
  auto pairing = region_pairing(region, [&](int m, int n) {
    return !marks.contains(m) && marks.contains(n);
  });
  if (!pairing) return std::nullopt;
  return pairing->partner(a);
}

std::optional<int> cap_partner(int a, const PosSet& region,
                               const PosSet& marks) {
  if (!region.contains(a) || !marks.contains(a)) return std::nullopt;
  auto pairing = region_pairing(region, [&](int m, int n) {
    return marks.contains(m) && !marks.contains(n);
  });
  if (!pairing) return std::nullopt;
  return pairing->partner(a);
}

std::optional<int> snake(int start, const PosSet& H, const Pairing& cups,
                         const Pairing& caps) {
  if (H.contains(start)) throw InternalError("snake: start lies inside H");
  bool in_cups = cups.covers(start);
  bool in_caps = caps.covers(start);
  if (in_cups && in_caps)
    throw InternalError("snake: start covered by both pairings");
  if (!in_cups && !in_caps) return std::nullopt;
  bool use_cup = in_cups;
  int cur = start;
  int limit = H.ambient() + 2;
  for (int steps = 0; steps < limit; ++steps) {
    auto nxt = use_cup ? cups.partner(cur) : caps.partner(cur);
    if (!nxt) return std::nullopt;
    if (!H.contains(*nxt)) return *nxt;
    cur = *nxt;
    use_cup = !use_cup;
  }
  throw InternalError("snake: cycle detected");
}

std::pair<PosSet, PosSet> transit_subsets(const PosSet& A, const PosSet& D,
                                          const MiddleStructure& mid) {
  if (A.size() != mid.B.size() || D.size() != mid.C.size())
    throw InternalError("transit_subsets: through-set cardinality mismatch");
  PosSet H = mid.B.complement().intersection(mid.C.complement());
  std::vector<int> E, F;
  for (int x : A.elements()) {
    int y = cobber(x, A, mid.B);
    if (mid.C.contains(y)) {
      E.push_back(x);
      continue;
    }
    auto exit = snake(y, H, mid.cups, mid.caps);
    if (!exit) throw InternalError("transit_subsets: snake died in gluing");
    if (mid.C.contains(*exit)) {
      E.push_back(x);
    } else if (!mid.B.contains(*exit)) {
      throw InternalError("transit_subsets: snake exited outside B and C");
    }
  }
  for (int z : D.elements()) {
    int y = cobber(z, D, mid.C);
    if (mid.B.contains(y)) {
      F.push_back(z);
      continue;
    }
    auto exit = snake(y, H, mid.cups, mid.caps);
    if (!exit) throw InternalError("transit_subsets: snake died in gluing");
    if (mid.B.contains(*exit)) {
      F.push_back(z);
    } else if (!mid.C.contains(*exit)) {
      throw InternalError("transit_subsets: snake exited outside B and C");
    }
  }
  return {PosSet(A.ambient(), std::move(E)), PosSet(D.ambient(), std::move(F))};
}

std::vector<FactorPiece> split_factors(const PosSet& A, const PosSet& B) {
  if (A.size() != B.size())
    throw InternalError("split_factors: subset cardinality mismatch");
  const int dlen = A.ambient();
  const int clen = B.ambient();
  std::vector<FactorPiece> out;
  auto unit_piece = [](int dpos, int cpos) {
    return FactorPiece{true, dpos, 0, cpos, 0};
  };
  if (A.is_empty()) {
    if (dlen == 0 && clen == 0) {
      out.push_back(unit_piece(1, 1));
      return out;
    }
    out.push_back(unit_piece(1, 1));
    out.push_back(FactorPiece{false, 1, dlen, 1, clen});
    out.push_back(unit_piece(dlen + 1, clen + 1));
    return out;
  }
  const int k = A.size();
  std::vector<std::pair<int, int>> blocks;
  int start = 1;
  for (int r = 1; r < k; ++r) {
    bool adjacent = A.at(r + 1) == A.at(r) + 1 && B.at(r + 1) == B.at(r) + 1;
    if (!adjacent) {
      blocks.emplace_back(start, r);
      start = r + 1;
    }
  }
  blocks.emplace_back(start, k);

  int d0 = A.at(1) - 1;
  int c0 = B.at(1) - 1;
  if (d0 > 0 || c0 > 0) {
    out.push_back(unit_piece(1, 1));
    out.push_back(FactorPiece{false, 1, d0, 1, c0});
  }
  for (std::size_t i = 0; i < blocks.size(); ++i) {
    auto [r1, r2] = blocks[i];
    int dlo = A.at(r1), dhi = A.at(r2);
    int clo = B.at(r1), chi = B.at(r2);
    out.push_back(FactorPiece{true, dlo, dhi - dlo + 1, clo, chi - clo + 1});
    int dnext = (i + 1 < blocks.size()) ? A.at(blocks[i + 1].first) : dlen + 1;
    int cnext = (i + 1 < blocks.size()) ? B.at(blocks[i + 1].first) : clen + 1;
    int gd = dnext - dhi - 1;
    int gc = cnext - chi - 1;
    if (gd > 0 || gc > 0) {
      out.push_back(FactorPiece{false, dhi + 1, gd, chi + 1, gc});
      if (i + 1 == blocks.size()) out.push_back(unit_piece(dlen + 1, clen + 1));
    }
  }
  return out;
}

}  // namespace dualcat
