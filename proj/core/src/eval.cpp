#include "dualcat/eval.hpp"

#include <utility>

namespace dualcat {

IntMatrix::IntMatrix(int rows, int cols) : rows_(rows), cols_(cols) {
  if (rows < 0 || cols < 0) throw InternalError("IntMatrix: negative size");
  data_.assign(static_cast<std::size_t>(rows) * cols, 0);
}

IntMatrix IntMatrix::identity(int n) {
  IntMatrix m(n, n);
  for (int i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

IntMatrix matmul(const IntMatrix& a, const IntMatrix& b) {
  if (a.cols() != b.rows()) throw InternalError("matmul: size mismatch");
  IntMatrix out(a.rows(), b.cols());
  for (int i = 0; i < a.rows(); ++i)
    for (int k = 0; k < a.cols(); ++k) {
      std::int64_t aik = a.at(i, k);
      if (aik == 0) continue;
      for (int j = 0; j < b.cols(); ++j) out.at(i, j) += aik * b.at(k, j);
    }
  return out;
}

IntMatrix kron(const IntMatrix& a, const IntMatrix& b) {
  IntMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j) {
      std::int64_t aij = a.at(i, j);
      if (aij == 0) continue;
      for (int r = 0; r < b.rows(); ++r)
        for (int c = 0; c < b.cols(); ++c)
          out.at(i * b.rows() + r, j * b.cols() + c) = aij * b.at(r, c);
    }
  return out;
}

void DualPairTarget::register_letter(const Symbol& s, int dim) {
  if (dim < 0) throw ConfigError("target: negative dimension for " + s);
  if (dims_.count(s)) throw ConfigError("target: letter " + s + " already registered");
  dims_[s] = dim;
}

void DualPairTarget::register_duality(const Symbol& s, const Symbol& t,
                                      const IntMatrix& counit,
                                      const IntMatrix& unit) {
  int ds = dim(s), dt = dim(t);
  if (counit.rows() != 1 || counit.cols() != ds * dt)
    throw ConfigError("target: counit for " + s + " has the wrong shape");
  if (unit.rows() != dt * ds || unit.cols() != 1)
    throw ConfigError("target: unit for " + t + " has the wrong shape");
  if (counits_.count(s) || units_.count(t))
    throw ConfigError("target: duality for " + s + " already registered");
  // first snake: s -> s⊗t⊗s -> s must be the identity on s
  IntMatrix left = matmul(kron(counit, IntMatrix::identity(ds)),
                          kron(IntMatrix::identity(ds), unit));
  if (!(left == IntMatrix::identity(ds)))
    throw ConfigError("target: first snake composite is not the identity");
  // second snake: t -> t⊗s⊗t -> t
  IntMatrix right = matmul(kron(IntMatrix::identity(dt), counit),
                           kron(unit, IntMatrix::identity(dt)));
  if (!(right == IntMatrix::identity(dt)))
    throw ConfigError("target: second snake composite is not the identity");
  counits_.emplace(s, Pair{t, counit});
  units_.emplace(t, Pair{s, unit});
}

DualPairTarget DualPairTarget::matrix_pair(int d) {
  if (d < 1) throw ConfigError("matrix_pair: dimension must be positive");
  DualPairTarget target;
  target.register_letter("-", d);
  target.register_letter("+", d);
  IntMatrix counit(1, d * d);
  IntMatrix unit(d * d, 1);
  for (int i = 0; i < d; ++i) {
    counit.at(0, i * d + i) = 1;
    unit.at(i * d + i, 0) = 1;
  }
  target.register_duality("-", "+", counit, unit);
  return target;
}

int DualPairTarget::dim(const Symbol& s) const {
  auto it = dims_.find(s);
  if (it == dims_.end())
    throw ConfigError("target: letter " + s + " is not registered");
  return it->second;
}

int DualPairTarget::dim_word(const Word& w) const {
  long long total = 1;
  for (const Symbol& s : w) {
    total *= dim(s);
    if (total > (1 << 26))
      throw ConfigError("target: word dimension too large to evaluate");
  }
  return static_cast<int>(total);
}

const Symbol& DualPairTarget::partner(const Symbol& opener) const {
  auto it = counits_.find(opener);
  if (it == counits_.end())
    throw ConfigError("target: no duality registered for " + opener);
  return it->second.partner;
}

const IntMatrix& DualPairTarget::counit(const Symbol& cup_opener) const {
  auto it = counits_.find(cup_opener);
  if (it == counits_.end())
    throw ConfigError("target: no counit registered for " + cup_opener);
  return it->second.mat;
}

const IntMatrix& DualPairTarget::unit(const Symbol& cap_opener) const {
  auto it = units_.find(cap_opener);
  if (it == units_.end())
    throw ConfigError("target: no unit registered for " + cap_opener);
  return it->second.mat;
}

namespace {

// Mixed-radix digits of col over the letter dimensions, leftmost letter
// most significant, matching the Kronecker index convention.
std::vector<int> digits_of(const DualPairTarget& target, const Word& w,
                           int col) {
  std::vector<int> digits(w.size(), 0);
  for (std::size_t i = w.size(); i-- > 0;) {
    int d = target.dim(w[i]);
    if (d == 0) throw InternalError("digits_of: zero-dimensional letter");
    digits[i] = col % d;
    col /= d;
  }
  return digits;
}

IntMatrix counit_row(const DualPairTarget& target, const Signature& sig,
                     const Word& w) {
  int total = target.dim_word(w);
  int n = static_cast<int>(w.size());
  auto pairing = region_pairing(PosSet::full(n), sig_cup_compat(sig, w));
  if (!pairing) throw InternalError("counit_row: word admits no cup matching");
  IntMatrix out(1, total);
  for (int col = 0; col < total; ++col) {
    auto digits = digits_of(target, w, col);
    std::int64_t val = 1;
    for (auto [a, b] : pairing->pairs()) {
      const Symbol& opener = w[static_cast<std::size_t>(a) - 1];
      const IntMatrix& eps = target.counit(opener);
      int db = target.dim(w[static_cast<std::size_t>(b) - 1]);
      val *= eps.at(0, digits[static_cast<std::size_t>(a) - 1] * db +
                           digits[static_cast<std::size_t>(b) - 1]);
      if (val == 0) break;
    }
    out.at(0, col) = val;
  }
  return out;
}

IntMatrix unit_column(const DualPairTarget& target, const Signature& sig,
                      const Word& w) {
  int total = target.dim_word(w);
  int n = static_cast<int>(w.size());
  auto pairing = region_pairing(PosSet::full(n), sig_cap_compat(sig, w));
  if (!pairing) throw InternalError("unit_column: word admits no cap matching");
  IntMatrix out(total, 1);
  for (int row = 0; row < total; ++row) {
    auto digits = digits_of(target, w, row);
    std::int64_t val = 1;
    for (auto [a, b] : pairing->pairs()) {
      const Symbol& opener = w[static_cast<std::size_t>(a) - 1];
      const IntMatrix& eta = target.unit(opener);
      int db = target.dim(w[static_cast<std::size_t>(b) - 1]);
      val *= eta.at(digits[static_cast<std::size_t>(a) - 1] * db +
                        digits[static_cast<std::size_t>(b) - 1],
                    0);
      if (val == 0) break;
    }
    out.at(row, 0) = val;
  }
  return out;
}

}  // namespace

IntMatrix evaluate(const DualPairTarget& target, const SigMorphism& f) {
  IntMatrix acc = IntMatrix::identity(1);
  for (const SigMorphism& piece : sig_decompose(f)) {
    IntMatrix m = sig_is_invertible(piece)
                      ? IntMatrix::identity(target.dim_word(piece.dom()))
                      : matmul(unit_column(target, f.sig(), piece.cod()),
                               counit_row(target, f.sig(), piece.dom()));
    acc = kron(acc, m);
  }
  return acc;
}

IntMatrix evaluate(const DualPairTarget& target, const DiagMorphism& f) {
  return evaluate(target, to_sig(f));
}

}  // namespace dualcat
