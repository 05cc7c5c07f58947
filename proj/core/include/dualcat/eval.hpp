#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include "dualcat/dpr.hpp"
#include "dualcat/sigcat.hpp"

namespace dualcat {

// Dense row-major integer matrix. Zero rows or columns are allowed; the
// 1x1 identity plays the tensor unit.
class IntMatrix {
 public:
  IntMatrix(int rows, int cols);
  static IntMatrix identity(int n);

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  std::int64_t& at(int r, int c) {
    return data_[static_cast<std::size_t>(r) * cols_ + c];
  }
  std::int64_t at(int r, int c) const {
    return data_[static_cast<std::size_t>(r) * cols_ + c];
  }

  bool operator==(const IntMatrix&) const = default;

 private:
  int rows_, cols_;
  std::vector<std::int64_t> data_;
};

IntMatrix matmul(const IntMatrix& a, const IntMatrix& b);
IntMatrix kron(const IntMatrix& a, const IntMatrix& b);

// Assigns a dimension to each letter and a counit/unit matrix pair to each
// successor pair; registration replays both snake composites numerically
// and rejects assignments that fail them.
class DualPairTarget {
 public:
  void register_letter(const Symbol& s, int dim);
  // t closes s on the right: counit is 1 x (dim s * dim t) for s⊗t -> unit,
  // unit is (dim t * dim s) x 1 for unit -> t⊗s
  void register_duality(const Symbol& s, const Symbol& t,
                        const IntMatrix& counit, const IntMatrix& unit);

  // the '-'/'+' letters in one dimension-d pair with the delta-pairing
  // counit and unit (both flatten the identity matrix)
  static DualPairTarget matrix_pair(int d);

  bool knows(const Symbol& s) const { return dims_.count(s) > 0; }
  int dim(const Symbol& s) const;
  int dim_word(const Word& w) const;
  const Symbol& partner(const Symbol& opener) const;
  const IntMatrix& counit(const Symbol& cup_opener) const;
  const IntMatrix& unit(const Symbol& cap_opener) const;

 private:
  std::map<Symbol, int> dims_;
  struct Pair {
    Symbol partner;
    IntMatrix mat;
  };
  std::map<Symbol, Pair> counits_;  // keyed by the cup opener s
  std::map<Symbol, Pair> units_;    // keyed by the cap opener t
};

IntMatrix evaluate(const DualPairTarget& target, const SigMorphism& f);
IntMatrix evaluate(const DualPairTarget& target, const DiagMorphism& f);

}  // namespace dualcat
