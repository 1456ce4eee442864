#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <random>

#include "qbx/linalg.hpp"

using namespace qbx;

namespace {
Field q = Field::rationals();
Scalar s(long long n, long long d = 1) { return Scalar::rational(BigRat(BigInt(n), BigInt(d))); }
SparseVec vec(std::initializer_list<std::pair<int, long long>> entries) {
  SparseVec v;
  for (auto [i, c] : entries)
    if (c != 0) v.emplace_back(i, s(c));
  std::sort(v.begin(), v.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  return v;
}
}  // namespace

TEST_CASE("echelon reduce and insert") {
  EchelonBasis e(q);
  CHECK(e.insert(vec({{0, 1}, {2, 1}})));        // pivot 2
  CHECK(e.insert(vec({{0, 1}, {1, 1}})));        // pivot 1
  CHECK_FALSE(e.insert(vec({{1, 1}, {2, 1}, {0, 2}})));  // dependent
  CHECK(e.dim() == 2);
  CHECK(e.contains(vec({{0, 2}, {1, 1}, {2, 1}})));
  CHECK_FALSE(e.contains(vec({{0, 1}})));
}

TEST_CASE("canonical form is order independent") {
  std::mt19937 rng(3);
  std::uniform_int_distribution<int> coef(-4, 4);
  std::vector<SparseVec> vs;
  for (int k = 0; k < 6; ++k) {
    SparseVec v;
    for (int i = 0; i < 5; ++i) {
      int c = coef(rng);
      if (c) v.emplace_back(i, s(c));
    }
    vs.push_back(v);
  }
  EchelonBasis a(q), b(q);
  for (const auto& v : vs) a.insert(v);
  for (auto it = vs.rbegin(); it != vs.rend(); ++it) b.insert(*it);
  CHECK(a == b);
}

TEST_CASE("coordinates over the stored rows") {
  EchelonBasis e(q);
  e.insert(vec({{0, 1}, {2, 1}}));
  e.insert(vec({{1, 1}}));
  SparseVec target = vec({{0, 3}, {1, -2}, {2, 3}});
  auto coords = e.coordinates(target);
  CHECK(coords.size() == 2);
  CHECK(coords.at(2) == s(3));
  CHECK(coords.at(1) == s(-2));
  CHECK_THROWS_AS(e.coordinates(vec({{0, 1}})), compute_error);
}

TEST_CASE("nullspace") {
  // x0 + x1 = 0, x1 + x2 = 0  ->  kernel spanned by (1,-1,1)
  std::vector<SparseVec> rows{vec({{0, 1}, {1, 1}}), vec({{1, 1}, {2, 1}})};
  Subspace k = nullspace(rows, 3, q);
  CHECK(k.dim() == 1);
  CHECK(k.contains(vec({{0, 1}, {1, -1}, {2, 1}})));
}

TEST_CASE("sum and intersection") {
  Subspace u(4, q), v(4, q);
  u.add(vec({{0, 1}, {1, 1}}));
  u.add(vec({{2, 1}}));
  v.add(vec({{1, 1}}));
  v.add(vec({{2, 1}, {3, 1}}));
  Subspace w = u.intersect(v);
  // u  = span{e0+e1, e2}, v = span{e1, e2+e3}: intersection is 0... except
  // dim(u+v) = 4, so dim intersection = 0
  CHECK(u.sum(v).dim() == 4);
  CHECK(w.dim() == 0);

  Subspace a(3, q), b(3, q);
  a.add(vec({{0, 1}}));
  a.add(vec({{1, 1}}));
  b.add(vec({{0, 1}, {1, 1}}));
  b.add(vec({{2, 1}}));
  Subspace c = a.intersect(b);
  CHECK(c.dim() == 1);
  CHECK(c.contains(vec({{0, 1}, {1, 1}})));
}

TEST_CASE("intersection property on random subspaces") {
  std::mt19937 rng(17);
  std::uniform_int_distribution<int> coef(-3, 3);
  const int n = 6;
  for (int trial = 0; trial < 50; ++trial) {
    Subspace u(n, q), v(n, q);
    for (int k = 0; k < 3; ++k) {
      SparseVec a, b;
      for (int i = 0; i < n; ++i) {
        int c1 = coef(rng), c2 = coef(rng);
        if (c1) a.emplace_back(i, s(c1));
        if (c2) b.emplace_back(i, s(c2));
      }
      u.add(a);
      v.add(b);
    }
    Subspace w = u.intersect(v);
    CHECK(w.dim() == u.dim() + v.dim() - u.sum(v).dim());
    for (const auto& row : w.basis_rows()) {
      CHECK(u.contains(row));
      CHECK(v.contains(row));
    }
  }
}

TEST_CASE("rank") {
  CHECK(rank_of({vec({{0, 1}}), vec({{0, 2}}), vec({{1, 1}})}, q) == 2);
}
