#include "dualcat/matching.hpp"

#include <algorithm>
#include <numeric>
#include <string>

namespace dualcat {

namespace {

std::string endpoint_str(const Endpoint& e) {
  return (e.side == 0 ? "dom:" : "cod:") + std::to_string(e.pos);
}

// Boundary order of the strip, counterclockwise: domain left to right, then
// codomain right to left.
int boundary_key(const Endpoint& e, int m, int n) {
  return e.side == 0 ? e.pos : m + n + 1 - e.pos;
}

void validate(const MarkedWord& dom, const MarkedWord& cod,
              const std::vector<Strand>& strands) {
  int m = dom.length(), n = cod.length();
  if ((m + n) % 2 != 0 ||
      static_cast<int>(strands.size()) * 2 != m + n)
    throw ValidationError(0, "strand count does not cover the boundary");
  std::vector<int> owner(m + n + 1, -1);
  for (int s = 0; s < static_cast<int>(strands.size()); ++s) {
    for (const Endpoint* e : {&strands[s].first, &strands[s].second}) {
      int len = e->side == 0 ? m : n;
      if (e->pos < 1 || e->pos > len)
        throw ValidationError(0, "endpoint " + endpoint_str(*e) +
                                     " is outside its word");
      int key = boundary_key(*e, m, n);
      if (owner[key] != -1)
        throw ValidationError(0,
                              "endpoint " + endpoint_str(*e) + " is reused");
      owner[key] = s;
    }
  }
  for (const auto& [a, b] : strands) {
    if (a.side == 0 && b.side == 0) {
      int lo = std::min(a.pos, b.pos), hi = std::max(a.pos, b.pos);
      if (dom.marked(lo) || !dom.marked(hi))
        throw ValidationError(3, "domain pair " + std::to_string(lo) + "," +
                                     std::to_string(hi) + " is not a cup");
    } else if (a.side == 1 && b.side == 1) {
      int lo = std::min(a.pos, b.pos), hi = std::max(a.pos, b.pos);
      if (!cod.marked(lo) || cod.marked(hi))
        throw ValidationError(4, "codomain pair " + std::to_string(lo) + "," +
                                     std::to_string(hi) + " is not a cap");
    } else {
      const Endpoint& d = a.side == 0 ? a : b;
      const Endpoint& c = a.side == 0 ? b : a;
      if (dom.marked(d.pos) != cod.marked(c.pos))
        throw ValidationError(2, "through strand " + endpoint_str(d) + "->" +
                                     endpoint_str(c) + " changes the mark");
    }
  }
  // Crossing-free means the boundary keys nest like balanced brackets.
  std::vector<int> other(m + n + 1, 0);
  for (const auto& [a, b] : strands) {
    int ka = boundary_key(a, m, n), kb = boundary_key(b, m, n);
    other[ka] = kb;
    other[kb] = ka;
  }
  std::vector<int> stack;
  for (int k = 1; k <= m + n; ++k) {
    if (other[k] > k) {
      stack.push_back(k);
    } else {
      if (stack.empty() || stack.back() != other[k])
        throw ValidationError(0, "strands cross");
      stack.pop_back();
    }
  }
}

Strand normalized(Strand s) {
  if (s.second < s.first) std::swap(s.first, s.second);
  return s;
}

}  // namespace

Matching::Matching(MarkedWord dom, MarkedWord cod, std::vector<Strand> strands)
    : dom_(std::move(dom)), cod_(std::move(cod)), strands_(std::move(strands)) {
  validate(dom_, cod_, strands_);
  for (Strand& s : strands_) s = normalized(s);
  std::sort(strands_.begin(), strands_.end());
}

Matching to_matching(const DiagMorphism& m) {
  std::vector<Strand> strands;
  const PosSet& A = m.dom_through();
  const PosSet& B = m.cod_through();
  for (int r = 1; r <= A.size(); ++r)
    strands.push_back({Endpoint{0, A.at(r)}, Endpoint{1, B.at(r)}});
  const PosSet& marks_dom = m.dom().marks();
  PosSet aprime = A.complement();
  for (int p : aprime.elements()) {
    auto q = cup_partner(p, aprime, marks_dom);
    if (q) strands.push_back({Endpoint{0, p}, Endpoint{0, *q}});
  }
  const PosSet& marks_cod = m.cod().marks();
  PosSet bprime = B.complement();
  for (int p : bprime.elements()) {
    auto q = cap_partner(p, bprime, marks_cod);
    if (q) strands.push_back({Endpoint{1, p}, Endpoint{1, *q}});
  }
  return Matching(m.dom(), m.cod(), std::move(strands));
}

DiagMorphism from_matching(const Matching& mt) {
  std::vector<int> a, b;
  for (const auto& [x, y] : mt.strands()) {
    if (x.side == 0 && y.side == 1) {
      a.push_back(x.pos);
      b.push_back(y.pos);
    }
  }
  return DiagMorphism(mt.dom(), mt.cod(), PosSet(mt.dom().length(), a),
                      PosSet(mt.cod().length(), b));
}

namespace {

struct UnionFind {
  std::vector<int> parent;
  explicit UnionFind(int n) : parent(n) {
    std::iota(parent.begin(), parent.end(), 0);
  }
  int find(int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  void unite(int x, int y) { parent[find(x)] = find(y); }
};

}  // namespace

Matching glue_compose(const Matching& f, const Matching& g) {
  if (f.cod() != g.dom())
    throw CompositionError("matchings are not composable: middle words \"" +
                           f.cod().str() + "\" and \"" + g.dom().str() +
                           "\" differ");
  int m = f.dom().length();
  int k = f.cod().length();
  int n = g.cod().length();
  // Point ids: domain of f, then the middle word, then codomain of g.
  auto f_id = [&](const Endpoint& e) {
    return e.side == 0 ? e.pos - 1 : m + e.pos - 1;
  };
  auto g_id = [&](const Endpoint& e) {
    return e.side == 0 ? m + e.pos - 1 : m + k + e.pos - 1;
  };
  UnionFind uf(m + k + n);
  for (const auto& [a, b] : f.strands()) uf.unite(f_id(a), f_id(b));
  for (const auto& [a, b] : g.strands()) uf.unite(g_id(a), g_id(b));
  std::vector<std::vector<int>> boundary(m + k + n);
  for (int p = 1; p <= m; ++p) boundary[uf.find(p - 1)].push_back(p - 1);
  for (int q = 1; q <= n; ++q)
    boundary[uf.find(m + k + q - 1)].push_back(m + k + q - 1);
  std::vector<char> outer_class(m + k + n, 0);
  std::vector<Strand> strands;
  auto endpoint_of = [&](int id) {
    return id < m ? Endpoint{0, id + 1} : Endpoint{1, id - m - k + 1};
  };
  for (int id = 0; id < m + k + n; ++id) {
    const auto& pts = boundary[id];
    if (pts.empty()) continue;
    if (pts.size() != 2)
      throw InternalError("glued path with " + std::to_string(pts.size()) +
                          " boundary points");
    outer_class[id] = 1;
    strands.push_back({endpoint_of(pts[0]), endpoint_of(pts[1])});
  }
  for (int p = 1; p <= k; ++p)
    if (!outer_class[uf.find(m + p - 1)])
      throw InternalError("glued strands form a closed loop");
  return Matching(f.dom(), g.cod(), std::move(strands));
}

}  // namespace dualcat
