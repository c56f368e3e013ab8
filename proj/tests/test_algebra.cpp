#include <doctest.h>

#include <random>

#include "vnw/algebra.hpp"

using namespace vnw;
using namespace vnw::algebra;

namespace {

std::vector<StarAlgebra> test_algebras() {
  std::vector<StarAlgebra> out;
  out.push_back(build_group_algebra(groups::cyclic(2), Field::Complex));
  out.push_back(build_group_algebra(groups::symmetric(3), Field::Complex));
  out.push_back(build_group_algebra(groups::symmetric(3), Field::Real));
  out.push_back(build_matrix_algebra(MatrixKind::Complex, 2));
  out.push_back(build_matrix_algebra(MatrixKind::Real, 2));
  out.push_back(build_matrix_algebra(MatrixKind::Quaternionic, 1));
  out.push_back(build_matrix_algebra(MatrixKind::Quaternionic, 2));
  return out;
}

Element random_element(const StarAlgebra& a, std::mt19937& rng) {
  std::uniform_int_distribution<int> coord(-5, 5);
  Element x = zero_element(a);
  for (int i = 0; i < a.dim; ++i) {
    x[i].re = coord(rng);
    if (a.field == Field::Complex) x[i].im = coord(rng);
  }
  return x;
}

}  // namespace

TEST_CASE("group algebra basics") {
  auto z2 = build_group_algebra(groups::cyclic(2), Field::Complex);
  CHECK(z2.dim == 2);
  CHECK(z2.trace[0] == Scalar(1));
  CHECK(z2.trace[1] == Scalar(0));
  CHECK(mul(z2, basis_element(z2, 1), basis_element(z2, 1)) == basis_element(z2, 0));

  auto s3 = build_group_algebra(groups::symmetric(3), Field::Complex);
  CHECK(s3.dim == 6);
  // two distinct involutions multiply to a nontrivial element, so trace 0
  auto g = groups::symmetric(3);
  std::vector<int> invols;
  for (int x = 1; x < 6; ++x)
    if (g.mul(x, x) == g.identity) invols.push_back(x);
  REQUIRE(invols.size() == 3);
  CHECK(trace_of(s3, mul(s3, basis_element(s3, invols[0]), basis_element(s3, invols[1]))) ==
        Scalar(0));

  // Gram = identity for any group algebra
  for (int i = 0; i < 6; ++i)
    for (int j = 0; j < 6; ++j) CHECK(s3.gram[i][j] == Scalar(i == j ? 1 : 0));
}

TEST_CASE("matrix algebra basics") {
  auto m2 = build_matrix_algebra(MatrixKind::Complex, 2);
  CHECK(m2.dim == 4);
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j)
      CHECK(m2.gram[i][j] == (i == j ? Scalar(Rational(1, 2)) : Scalar(0)));

  auto h1 = build_matrix_algebra(MatrixKind::Quaternionic, 1);
  CHECK(h1.dim == 4);
  // <(e^1)^2> = <-e^0> = -1
  CHECK(trace_of(h1, mul(h1, basis_element(h1, 1), basis_element(h1, 1))) == Scalar(-1));

  auto r1 = build_matrix_algebra(MatrixKind::Real, 1);
  CHECK(r1.dim == 1);
  CHECK(trace_of(r1, r1.unit) == Scalar(1));

  CHECK_THROWS_AS(build_matrix_algebra(MatrixKind::Real, 0), std::invalid_argument);
}

TEST_CASE("direct sum") {
  auto c1 = build_matrix_algebra(MatrixKind::Complex, 1);
  auto one_block = direct_sum({{c1, Rational(1)}});
  CHECK(one_block.dim == 1);
  CHECK(trace_of(one_block, one_block.unit) == Scalar(1));

  // C[Z2] splits into two lines with equal weights; the idempotents (1+s)/2
  // and (1-s)/2 correspond to the block units.
  auto z2 = build_group_algebra(groups::cyclic(2), Field::Complex);
  auto split = direct_sum({{c1, Rational(1, 2)}, {c1, Rational(1, 2)}});
  CHECK(split.dim == z2.dim);
  Scalar half(Rational(1, 2));
  Element idem_plus = add(scale(basis_element(z2, 0), half), scale(basis_element(z2, 1), half));
  Element block0 = basis_element(split, 0);
  CHECK(trace_of(z2, idem_plus) == trace_of(split, block0));
  // and the image of b_s = block0 - block1 has matching trace and square
  Element s_image = add(basis_element(split, 0), scale(basis_element(split, 1), Scalar(-1)));
  CHECK(trace_of(split, s_image) == trace_of(z2, basis_element(z2, 1)));
  CHECK(mul(split, s_image, s_image) == split.unit);

  CHECK_THROWS_AS(direct_sum({{c1, Rational(1, 2)}}), std::invalid_argument);
  auto r1 = build_matrix_algebra(MatrixKind::Real, 1);
  CHECK_THROWS_AS(direct_sum({{c1, Rational(1, 2)}, {r1, Rational(1, 2)}}),
                  std::invalid_argument);
}

TEST_CASE("trace words") {
  auto s3 = build_group_algebra(groups::symmetric(3), Field::Complex);
  auto g = groups::symmetric(3);
  int t = -1;
  for (int x = 1; x < 6; ++x)
    if (g.mul(x, x) == g.identity) {
      t = x;
      break;
    }
  WordLetter w[] = {{t, false}, {t, false}};
  CHECK(trace_word(s3, w) == Scalar(1));

  auto h1 = build_matrix_algebra(MatrixKind::Quaternionic, 1);
  WordLetter quat[] = {{1, false}, {2, false}, {1, true}, {2, true}};
  CHECK(trace_word(h1, quat) == Scalar(-1));

  CHECK(trace_word(h1, {}) == Scalar(1));
}

TEST_CASE("gram inverse") {
  auto s3 = build_group_algebra(groups::symmetric(3), Field::Complex);
  for (int i = 0; i < 6; ++i)
    for (int j = 0; j < 6; ++j) CHECK(gram_inverse(s3)[i][j] == Scalar(i == j ? 1 : 0));

  for (int n : {1, 2, 3}) {
    auto mc = build_matrix_algebra(MatrixKind::Complex, n);
    for (int i = 0; i < mc.dim; ++i)
      for (int j = 0; j < mc.dim; ++j)
        CHECK(gram_inverse(mc)[i][j] == (i == j ? Scalar(Rational(n)) : Scalar(0)));
  }

  auto h1 = build_matrix_algebra(MatrixKind::Quaternionic, 1);
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) CHECK(gram_inverse(h1)[i][j] == Scalar(i == j ? 1 : 0));
}

TEST_CASE("axiom checks pass on built-ins") {
  for (auto& a : test_algebras()) {
    auto rep = check_star_trace_axioms(a);
    INFO(a.name, ": ", rep.first_violation);
    CHECK(rep.ok);
  }
}

TEST_CASE("axiom checks name violations") {
  // corrupt one structure constant of C[Z3]: associativity breaks
  auto z3 = build_group_algebra(groups::cyclic(3), Field::Complex);
  auto structure = z3.structure;
  structure[2][2] = {{2, Scalar(1)}};  // b_2 b_2 = b_2 instead of b_1
  auto bad = from_parts(3, Field::Complex, z3.labels, structure, z3.star, z3.trace, "corrupt");
  auto rep = check_star_trace_axioms(bad);
  CHECK(!rep.ok);
  CHECK(rep.first_violation.find("associativity") == 0);

  // real-flagged algebra with a nonreal trace value
  auto imag = from_parts(1, Field::Real, {"u"}, {{{{0, Scalar(1)}}}}, {{{0, Scalar(1)}}},
                         {Scalar(Rational(1), Rational(1))}, "imag-trace");
  auto rep2 = check_star_trace_axioms(imag);
  CHECK(!rep2.ok);
  CHECK(rep2.first_violation.find("field violation") == 0);
}

TEST_CASE("singular Gram matrices are reported") {
  // Z2 table with trace 1 on both basis vectors: Gram = [[1,1],[1,1]]
  auto z2 = build_group_algebra(groups::cyclic(2), Field::Complex);
  auto degenerate = from_parts(2, Field::Complex, z2.labels, z2.structure, z2.star,
                               {Scalar(1), Scalar(1)}, "degenerate");
  CHECK(!degenerate.has_gram_inverse());
  CHECK_THROWS_AS(gram_inverse(degenerate), std::domain_error);
  auto rep = check_star_trace_axioms(degenerate);
  CHECK(!rep.ok);
  CHECK(rep.first_violation.find("gram") == 0);
}

TEST_CASE("trivial group algebra") {
  auto z1 = build_group_algebra(groups::build_group("Z1"), Field::Real);
  CHECK(z1.dim == 1);
  CHECK(check_star_trace_axioms(z1).ok);
  CHECK(groups::hom_count_orientable(groups::cyclic(1), 2) == 1);
}

TEST_CASE("propagator symmetry on all basis pairs") {
  for (auto& a : test_algebras())
    for (int i = 0; i < a.dim; ++i)
      for (int j = 0; j < a.dim; ++j)
        CHECK(trace_of(a, mul(a, basis_element(a, i), basis_element(a, j))) ==
              trace_of(a, mul(a, basis_element(a, j), basis_element(a, i))));
}

TEST_CASE("reconstruction identity on pseudo-random elements") {
  std::mt19937 rng(20240811);
  for (auto& a : test_algebras()) {
    for (int trial = 0; trial < 100; ++trial) {
      Element x = random_element(a, rng);
      CHECK(reconstruct(a, x) == x);
    }
  }
}

TEST_CASE("reality: word trace equals reversed starred word trace") {
  std::mt19937 rng(7);
  for (auto& a : test_algebras()) {
    if (a.field != Field::Real) continue;
    std::uniform_int_distribution<int> len(0, 6), idx(0, a.dim - 1), star(0, 1);
    for (int trial = 0; trial < 100; ++trial) {
      std::vector<WordLetter> w(len(rng));
      for (auto& l : w) l = {idx(rng), star(rng) == 1};
      std::vector<WordLetter> rev(w.rbegin(), w.rend());
      for (auto& l : rev) l.starred = !l.starred;
      CHECK(trace_word(a, w) == trace_word(a, rev));
    }
  }
}

TEST_CASE("cyclicity of trace words") {
  std::mt19937 rng(11);
  for (auto& a : test_algebras()) {
    std::uniform_int_distribution<int> len(1, 6), idx(0, a.dim - 1), star(0, 1);
    for (int trial = 0; trial < 100; ++trial) {
      std::vector<WordLetter> w(len(rng));
      for (auto& l : w) l = {idx(rng), star(rng) == 1};
      std::vector<WordLetter> rot(w.begin() + 1, w.end());
      rot.push_back(w.front());
      CHECK(trace_word(a, w) == trace_word(a, rot));
    }
  }
}

TEST_CASE("algebra JSON round trip") {
  for (auto& a : test_algebras()) {
    auto back = algebra_from_json(algebra_to_json(a));
    CHECK(back.fingerprint == a.fingerprint);
    CHECK(back.dim == a.dim);
    CHECK(back.gram == a.gram);
    CHECK(check_star_trace_axioms(back).ok);
  }
  CHECK_THROWS_AS(algebra_from_json("{\"dim\": 1, \"field\": \"imaginary\"}"),
                  std::invalid_argument);
}
