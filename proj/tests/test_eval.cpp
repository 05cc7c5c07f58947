#include "doctest.h"
#include "dualcat/eval.hpp"

using namespace dualcat;

namespace {

IntMatrix vec_row(int d) {
  IntMatrix m(1, d * d);
  for (int i = 0; i < d; ++i) m.at(0, i * d + i) = 1;
  return m;
}

IntMatrix vec_col(int d) {
  IntMatrix m(d * d, 1);
  for (int i = 0; i < d; ++i) m.at(i * d + i, 0) = 1;
  return m;
}

}  // namespace

TEST_CASE("matrix arithmetic") {
  IntMatrix a(2, 3), b(3, 2);
  int v = 1;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 3; ++j) a.at(i, j) = v++;
  v = 1;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 2; ++j) b.at(i, j) = v++;
  IntMatrix c = matmul(a, b);
  CHECK(c.at(0, 0) == 22);
  CHECK(c.at(0, 1) == 28);
  CHECK(c.at(1, 0) == 49);
  CHECK(c.at(1, 1) == 64);
  CHECK(matmul(IntMatrix::identity(2), a) == a);
  IntMatrix k = kron(IntMatrix::identity(2), b);
  CHECK(k.rows() == 6);
  CHECK(k.cols() == 4);
  CHECK(k.at(0, 0) == 1);
  CHECK(k.at(3, 2) == 1);
  CHECK(k.at(3, 0) == 0);
  CHECK(kron(IntMatrix::identity(1), a) == a);
  CHECK_THROWS_AS(matmul(a, a), InternalError);
}

TEST_CASE("registration enforces the snake composites") {
  for (int d : {1, 2, 3}) {
    DualPairTarget t = DualPairTarget::matrix_pair(d);
    CHECK(t.dim("-") == d);
    CHECK(t.partner("-") == Symbol("+"));
  }
  DualPairTarget bad;
  bad.register_letter("-", 2);
  bad.register_letter("+", 2);
  IntMatrix broken(1, 4);
  broken.at(0, 0) = 1;  // drops the second diagonal entry
  CHECK_THROWS_AS(bad.register_duality("-", "+", broken, vec_col(2)),
                  ConfigError);
  DualPairTarget shape;
  shape.register_letter("a", 2);
  shape.register_letter("b", 3);
  CHECK_THROWS_AS(shape.register_duality("a", "b", vec_row(2), vec_col(2)),
                  ConfigError);
}

TEST_CASE("generator matrices") {
  DualPairTarget t = DualPairTarget::matrix_pair(2);
  IntMatrix eps = evaluate(t, counit(1));
  CHECK(eps.rows() == 1);
  CHECK(eps.cols() == 4);
  CHECK(eps == vec_row(2));
  IntMatrix eta = evaluate(t, unit(1));
  CHECK(eta.rows() == 4);
  CHECK(eta.cols() == 1);
  CHECK(eta == vec_col(2));
  CHECK(evaluate(t, identity(MarkedWord("-+-"))) == IntMatrix::identity(8));
  CHECK(evaluate(t, identity(MarkedWord())) == IntMatrix::identity(1));
}

TEST_CASE("evaluation at dimension one collapses to scalars") {
  DualPairTarget t = DualPairTarget::matrix_pair(1);
  CHECK(evaluate(t, counit(2)) == IntMatrix::identity(1));
  CHECK(evaluate(t, unit(3)).rows() == 1);
}

TEST_CASE("nested generators contract pairwise") {
  DualPairTarget t = DualPairTarget::matrix_pair(2);
  IntMatrix eps2 = evaluate(t, counit(2));  // "--++" -> unit
  CHECK(eps2.rows() == 1);
  CHECK(eps2.cols() == 16);
  for (int col = 0; col < 16; ++col) {
    int i1 = (col >> 3) & 1, i2 = (col >> 2) & 1, i3 = (col >> 1) & 1,
        i4 = col & 1;
    CHECK(eps2.at(0, col) == ((i1 == i4 && i2 == i3) ? 1 : 0));
  }
}

TEST_CASE("functoriality on the snake composite") {
  DualPairTarget t = DualPairTarget::matrix_pair(2);
  DiagMorphism f(MarkedWord("-"), MarkedWord("-+-"), PosSet(1, {1}),
                 PosSet(3, {1}));
  DiagMorphism g(MarkedWord("-+-"), MarkedWord("-"), PosSet(3, {3}),
                 PosSet(1, {1}));
  CHECK(matmul(evaluate(t, g), evaluate(t, f)) == IntMatrix::identity(2));
  CHECK(evaluate(t, compose(f, g)) == IntMatrix::identity(2));
}

TEST_CASE("functoriality on a structured composite") {
  DualPairTarget t = DualPairTarget::matrix_pair(2);
  DiagMorphism f(MarkedWord("--+++-+-"), MarkedWord("+++---"),
                 PosSet(8, {5, 8}), PosSet(6, {1, 6}));
  DiagMorphism g(MarkedWord("+++---"), MarkedWord("++++----"),
                 PosSet::full(6), PosSet(8, {1, 2, 3, 6, 7, 8}));
  CHECK(evaluate(t, compose(f, g)) ==
        matmul(evaluate(t, g), evaluate(t, f)));
}

TEST_CASE("monoidality") {
  DualPairTarget t = DualPairTarget::matrix_pair(2);
  DiagMorphism f = counit(1);
  DiagMorphism g = unit(1);
  CHECK(evaluate(t, tensor(f, g)) == kron(evaluate(t, f), evaluate(t, g)));
  DiagMorphism h = identity(MarkedWord("+"));
  CHECK(evaluate(t, tensor(h, f)) == kron(IntMatrix::identity(2), evaluate(t, f)));
}

TEST_CASE("sequence signature targets chain dualities") {
  Signature n = Signature::nat();
  DualPairTarget t;
  t.register_letter("0", 2);
  t.register_letter("1", 2);
  t.register_letter("2", 2);
  t.register_duality("0", "1", vec_row(2), vec_col(2));
  t.register_duality("1", "2", vec_row(2), vec_col(2));
  SigMorphism eps = sig_counit(n, {"0"});
  SigMorphism eta = sig_unit(n, {"0"});
  SigMorphism snake = sig_compose(
      sig_tensor(sig_identity(n, {"0"}), eta),
      sig_tensor(eps, sig_identity(n, {"0"})));
  CHECK(evaluate(t, snake) == IntMatrix::identity(2));
  // the nested two-letter generator over letters "1", "0"
  SigMorphism eps2 = sig_counit(n, {"1", "0"});
  CHECK(eps2.dom() == Word{"1", "0", "1", "2"});
  IntMatrix m = evaluate(t, eps2);
  CHECK(m.rows() == 1);
  CHECK(m.cols() == 16);
  CHECK(evaluate(t, sig_identity(n, {"0", "1"})) == IntMatrix::identity(4));
  // unregistered letters are reported
  CHECK_THROWS_AS(evaluate(t, sig_identity(n, {"7"})), ConfigError);
}
