#include "dualcat/delta.hpp"

#include <algorithm>

namespace dualcat {

SimplicialMap::SimplicialMap(int n, std::vector<int> values)
    : n_(n), values_(std::move(values)) {
  if (n_ < 0) throw ConfigError("monotone map: negative codomain size");
  for (std::size_t i = 0; i < values_.size(); ++i) {
    if (values_[i] < 0 || values_[i] >= n_)
      throw ConfigError("monotone map: value out of range");
    if (i > 0 && values_[i] < values_[i - 1])
      throw ConfigError("monotone map: values must be weakly increasing");
  }
}

std::vector<int> SimplicialMap::collapsed_indices() const {
  std::vector<int> out;
  for (int i = 0; i + 1 < m(); ++i)
    if (values_[static_cast<std::size_t>(i)] ==
        values_[static_cast<std::size_t>(i) + 1])
      out.push_back(i);
  return out;
}

std::vector<int> SimplicialMap::missed_values() const {
  std::vector<char> hit(static_cast<std::size_t>(n_), 0);
  for (int v : values_) hit[static_cast<std::size_t>(v)] = 1;
  std::vector<int> out;
  for (int j = 0; j < n_; ++j)
    if (!hit[static_cast<std::size_t>(j)]) out.push_back(j);
  return out;
}

SimplicialMap simplicial_identity(int n) {
  std::vector<int> v(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) v[static_cast<std::size_t>(i)] = i;
  return SimplicialMap(n, std::move(v));
}

SimplicialMap face(int n, int i) {
  if (i < 0 || i > n) throw ConfigError("face index out of range");
  std::vector<int> v;
  for (int k = 0; k < n; ++k) v.push_back(k < i ? k : k + 1);
  return SimplicialMap(n + 1, std::move(v));
}

SimplicialMap degeneracy(int n, int i) {
  if (i < 0 || i >= n) throw ConfigError("degeneracy index out of range");
  std::vector<int> v;
  for (int k = 0; k <= n; ++k) v.push_back(k <= i ? std::min(k, i) : k - 1);
  return SimplicialMap(n, std::move(v));
}

SimplicialMap simplicial_compose(const SimplicialMap& f,
                                 const SimplicialMap& g) {
  if (f.n() != g.m())
    throw CompositionError("monotone maps do not meet in the middle ordinal");
  std::vector<int> v;
  v.reserve(static_cast<std::size_t>(f.m()));
  for (int i = 0; i < f.m(); ++i) v.push_back(g(f(i)));
  return SimplicialMap(g.n(), std::move(v));
}

SimplicialMap ordinal_sum(const SimplicialMap& f, const SimplicialMap& g) {
  std::vector<int> v = f.values();
  for (int i = 0; i < g.m(); ++i) v.push_back(g(i) + f.n());
  return SimplicialMap(f.n() + g.n(), std::move(v));
}

std::vector<SimplicialMap> all_monotone_maps(int m, int n) {
  std::vector<SimplicialMap> out;
  if (m == 0) {
    out.push_back(SimplicialMap(n, {}));
    return out;
  }
  if (n == 0) return out;
  std::vector<int> v(static_cast<std::size_t>(m), 0);
  while (true) {
    out.push_back(SimplicialMap(n, v));
    int i = m - 1;
    while (i >= 0 && v[static_cast<std::size_t>(i)] == n - 1) --i;
    if (i < 0) break;
    int next = v[static_cast<std::size_t>(i)] + 1;
    for (int k = i; k < m; ++k) v[static_cast<std::size_t>(k)] = next;
  }
  return out;
}

MarkedWord alternating_word(int n) {
  std::vector<int> plus;
  for (int k = 0; k < n; ++k) plus.push_back(2 * k + 1);
  return MarkedWord(2 * n, std::move(plus));
}

bool is_alternating(const MarkedWord& w) {
  return w.length() % 2 == 0 && w == alternating_word(w.length() / 2);
}

DiagMorphism to_morphism(const SimplicialMap& xi) {
  std::vector<int> a_cut, b_cut;
  for (int i : xi.collapsed_indices()) {
    a_cut.push_back(2 * i + 2);
    a_cut.push_back(2 * i + 3);
  }
  for (int j : xi.missed_values()) {
    b_cut.push_back(2 * j + 1);
    b_cut.push_back(2 * j + 2);
  }
  PosSet A = PosSet(2 * xi.m(), std::move(a_cut)).complement();
  PosSet B = PosSet(2 * xi.n(), std::move(b_cut)).complement();
  return DiagMorphism(alternating_word(xi.m()), alternating_word(xi.n()),
                      std::move(A), std::move(B));
}

SimplicialMap from_morphism(const DiagMorphism& f) {
  if (!is_alternating(f.dom()) || !is_alternating(f.cod()))
    throw ConfigError("from_morphism: endpoints are not alternating words");
  int m = f.dom().length() / 2;
  int n = f.cod().length() / 2;
  auto pair_starts = [](const PosSet& cut, bool even_start,
                        const char* side) {
    std::vector<int> starts;
    const auto& el = cut.elements();
    if (el.size() % 2 != 0)
      throw InternalError(std::string("from_morphism: odd ") + side);
    for (std::size_t k = 0; k < el.size(); k += 2) {
      if (el[k + 1] != el[k] + 1 || (el[k] % 2 == 0) != even_start)
        throw InternalError(std::string("from_morphism: misaligned ") + side);
      starts.push_back(el[k]);
    }
    return starts;
  };
  std::vector<char> collapsed(static_cast<std::size_t>(std::max(m - 1, 0)), 0);
  for (int lo : pair_starts(f.dom_through().complement(), true, "cups"))
    collapsed[static_cast<std::size_t>((lo - 2) / 2)] = 1;
  std::vector<char> missed(static_cast<std::size_t>(n), 0);
  for (int lo : pair_starts(f.cod_through().complement(), false, "caps"))
    missed[static_cast<std::size_t>((lo - 1) / 2)] = 1;

  std::vector<int> image;
  for (int j = 0; j < n; ++j)
    if (!missed[static_cast<std::size_t>(j)]) image.push_back(j);
  std::vector<int> values;
  std::size_t k = 0;
  for (int i = 0; i < m; ++i) {
    values.push_back(image.at(k));
    if (i >= m - 1 || !collapsed[static_cast<std::size_t>(i)]) ++k;
  }
  return SimplicialMap(n, std::move(values));
}

}  // namespace dualcat
