#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>
#include <set>

#include "helpers.hpp"

using namespace qbx;
using namespace qbxtest;

namespace {

std::set<std::string> basis_labels(const FDAlgebra& alg) {
  std::set<std::string> out;
  for (const auto& b : alg.basis()) out.insert(b.label);
  return out;
}

}  // namespace

TEST_CASE("running example: dimension 8 with the expected normal forms") {
  FDAlgebra alg = build_algebra(ex35(), Q());
  CHECK(alg.dim() == 8);
  // shorter-first normal forms: the class of a11^3 = a12*a21 is carried by
  // the length-2 path
  CHECK(basis_labels(alg) == std::set<std::string>{"e_1", "e_2", "a11", "a12", "a21", "a11*a11",
                                                   "a12*a21", "a21*a12"});
  // Peirce dimensions match the matrix form: K[a]/(a^4), Ka12, Ka21,
  // K[a21 a12]/(..)^2
  CHECK(peirce_component(alg, 0, 0).dim() == 4);
  CHECK(peirce_component(alg, 0, 1).dim() == 1);
  CHECK(peirce_component(alg, 1, 0).dim() == 1);
  CHECK(peirce_component(alg, 1, 1).dim() == 2);
  CHECK_THROWS_AS(peirce_component(alg, 0, 5), compute_error);
  CHECK(!alg.check_associativity().has_value());
  CHECK(!alg.check_idempotents().has_value());
}

TEST_CASE("tiny algebras") {
  Presentation one;
  one.quiver = make_quiver({"1"}, {});
  FDAlgebra k = build_algebra(one, Q());
  CHECK(k.dim() == 1);

  FDAlgebra a2alg = build_algebra(a2(), Q());
  CHECK(a2alg.dim() == 3);
  CHECK(basis_labels(a2alg) == std::set<std::string>{"e_1", "e_2", "a"});
}

TEST_CASE("non-finite-dimensional input is rejected") {
  Presentation freeloop;
  freeloop.quiver = make_quiver({"1"}, {{"x", 0, 0}});
  CHECK_THROWS_AS(build_algebra(freeloop, Q(), 12), compute_error);
  CHECK_THROWS_AS(make_quiver({}, {}), validation_error);
}

TEST_CASE("evaluate_phi is the normal form map") {
  Presentation pres = ex35();
  FDAlgebra alg = build_algebra(pres, Q());
  QuiverPtr q = pres.quiver;
  SparseVec lhs = evaluate_phi(alg, path_comb(q, {"a12", "a21"}));
  SparseVec rhs = evaluate_phi(alg, path_comb(q, {"a11", "a11", "a11"}));
  CHECK(!lhs.empty());
  CHECK(sparse_equal(lhs, rhs));  // a11^3 = a12 a21 in R

  CHECK(evaluate_phi(alg, path_comb(q, {"a11", "a12"})).empty());
  SparseVec e1 = evaluate_phi(alg, PathCombination::of_path(Path::stationary(q, 0), one()));
  CHECK(sparse_equal(e1, sparse_unit(alg.idempotent(0), Q())));

  QuiverPtr foreign = make_quiver({"1", "2"}, {{"a11", 0, 0}});
  CHECK_THROWS_AS(evaluate_phi(alg, PathCombination::of_path(Path::of_labels(foreign, {"a11"}),
                                                             one())),
                  compute_error);
}

TEST_CASE("phi is a ring map on random elements, per corpus algebra") {
  std::mt19937 rng(5);
  for (const auto& pres : {ex35(), kxn(3), a3zero(), square(), random_admissible(20240811)}) {
    FDAlgebra alg = build_algebra(pres, Q());
    QuiverPtr q = pres.quiver;
    std::uniform_int_distribution<int> len(0, 4), coef(-3, 3), nv(0, q->num_vertices() - 1);
    auto random_comb = [&]() {
      PathCombination x(q, Q());
      for (int t = 0; t < 3; ++t) {
        int v = nv(rng);
        std::vector<int> arrows;
        for (int k = len(rng); k > 0; --k) {
          const auto& out = q->arrows_from(v);
          if (out.empty()) break;
          std::uniform_int_distribution<int> pa(0, static_cast<int>(out.size()) - 1);
          int a = out[pa(rng)];
          arrows.push_back(a);
          v = q->arrow(a).tgt;
        }
        Path p = arrows.empty() ? Path::stationary(q, v) : Path::of_arrows(q, arrows);
        x.add_term(p, Scalar::of(Q(), coef(rng)));
      }
      return x;
    };
    for (int k = 0; k < 500; ++k) {
      PathCombination x = random_comb(), y = random_comb();
      SparseVec lhs = evaluate_phi(alg, multiply(x, y));
      SparseVec rhs = alg.mul_vec(evaluate_phi(alg, x), evaluate_phi(alg, y));
      CHECK(sparse_equal(lhs, rhs));
    }
  }
}

TEST_CASE("radical powers") {
  Presentation pres = ex35();
  FDAlgebra alg = build_algebra(pres, Q());
  QuiverPtr q = pres.quiver;
  CHECK(radical_power(alg, 0).dim() == 8);
  CHECK(radical_power(alg, 1).dim() == 6);  // dim R - #vertices

  Subspace j2 = radical_power(alg, 2);
  Subspace expect(alg.dim(), Q());
  expect.add(evaluate_phi(alg, path_comb(q, {"a11", "a11"})));
  expect.add(evaluate_phi(alg, path_comb(q, {"a11", "a11", "a11"})));
  expect.add(evaluate_phi(alg, path_comb(q, {"a21", "a12"})));
  CHECK(j2 == expect);

  CHECK(radical_power(alg, 10).dim() == 0);
  CHECK_THROWS_AS(radical_power(alg, -1), compute_error);

  // weakly decreasing, strictly until zero
  int prev = radical_power(alg, 0).dim();
  for (int k = 1; k <= 5; ++k) {
    int cur = radical_power(alg, k).dim();
    CHECK(cur <= prev);
    if (prev > 0) CHECK(cur < prev);
    prev = cur;
  }
}

TEST_CASE("socles") {
  Presentation pres = ex35();
  FDAlgebra alg = build_algebra(pres, Q());
  QuiverPtr q = pres.quiver;

  Subspace s1 = socle_right(alg, 0);
  CHECK(s1.dim() == 1);
  CHECK(s1.contains(evaluate_phi(alg, path_comb(q, {"a11", "a11", "a11"}))));

  Subspace s2 = socle_right(alg, 1);
  CHECK(s2.dim() == 1);
  CHECK(s2.contains(evaluate_phi(alg, path_comb(q, {"a21", "a12"}))));

  // socle elements annihilate J on the right
  for (const auto& s : s1.basis_rows())
    for (const auto& r : alg.radical().basis_rows()) CHECK(alg.mul_vec(s, r).empty());

  // maximality: anything in e_1 R outside the socle moves under J
  for (int b = 0; b < alg.dim(); ++b) {
    if (alg.basis()[b].src != 0) continue;
    SparseVec u = sparse_unit(b, Q());
    if (s1.contains(u)) continue;
    bool killed = true;
    for (const auto& r : alg.radical().basis_rows())
      if (!alg.mul_vec(u, r).empty()) killed = false;
    CHECK_FALSE(killed);
  }

  // left socles mirror the right ones for this algebra
  Subspace l1 = socle_left(alg, 0);
  CHECK(l1.dim() == 1);
  CHECK(l1.contains(evaluate_phi(alg, path_comb(q, {"a11", "a11", "a11"}))));
  for (const auto& s : l1.basis_rows())
    for (const auto& r : alg.radical().basis_rows()) CHECK(alg.mul_vec(r, s).empty());

  Presentation one;
  one.quiver = make_quiver({"1"}, {});
  FDAlgebra k = build_algebra(one, Q());
  CHECK(socle_right(k, 0).dim() == 1);  // the whole 1-dim algebra
  CHECK_THROWS_AS(socle_right(alg, 7), compute_error);
}

TEST_CASE("quiver of an algebra") {
  FDAlgebra alg = build_algebra(ex35(), Q());
  AlgebraQuiver aq = quiver_of_algebra(alg);
  CHECK(same_multigraph(*aq.quiver, *ex35().quiver));

  FDAlgebra ss = build_algebra(kxk(), Q());
  CHECK(quiver_of_algebra(ss).quiver->num_arrows() == 0);

  FDAlgebra kx3alg = build_algebra(kxn(3), Q());
  AlgebraQuiver aq3 = quiver_of_algebra(kx3alg);
  CHECK(aq3.quiver->num_arrows() == 1);  // dim J/J^2 = 1
}

TEST_CASE("presentation recovery over the corpus") {
  for (const auto& pres : {ex35(), kxn(2), kxn(3), kxn(4), a3zero(), square(),
                           random_admissible(20240811)}) {
    FDAlgebra alg = build_algebra(pres, Q());
    AlgebraQuiver aq = quiver_of_algebra(alg);
    CHECK(same_multigraph(*aq.quiver, *pres.quiver));
  }
}

TEST_CASE("quotient by a Peirce-homogeneous ideal") {
  Presentation pres = ex35();
  FDAlgebra alg = build_algebra(pres, Q());
  QuiverPtr q = pres.quiver;
  Subspace ideal =
      ideal_generated_by(alg, {evaluate_phi(alg, path_comb(q, {"a12", "a21"}))});
  CHECK(ideal.dim() == 1);  // the socle class is already a two-sided ideal
  FDAlgebra quo = quotient_algebra(alg, ideal);
  CHECK(quo.dim() == 7);
  CHECK(!quo.check_associativity().has_value());
  CHECK(!quo.check_idempotents().has_value());
}

TEST_CASE("inhomogeneous relation with fractional coefficients") {
  // x^2 = (1/2) x^3 forces x^2 = 0 in the admissible closure
  QuiverPtr q = make_quiver({"1"}, {{"x", 0, 0}});
  Presentation p;
  p.quiver = q;
  PathCombination rel = path_comb(q, {"x", "x"}) -
                        path_comb(q, {"x", "x", "x"}).scaled(Scalar::parse("1/2", Q()));
  p.relations.push_back(rel);
  FDAlgebra alg = build_algebra(p, Q());
  CHECK(alg.dim() == 2);
  CHECK(evaluate_phi(alg, path_comb(q, {"x", "x"})).empty());
  CHECK(!evaluate_phi(alg, path_comb(q, {"x"})).empty());
}

TEST_CASE("prime field build") {
  Field g7 = Field::prime(7);
  FDAlgebra alg = build_algebra(ex35(g7), g7);
  CHECK(alg.dim() == 8);
  CHECK(radical_power(alg, 1).dim() == 6);
}
