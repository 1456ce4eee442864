#pragma once

// Shared corpus builders for the test suites.  Everything is constructed
// programmatically so the unit tests do not depend on the data files.

#include <random>
#include <string>
#include <vector>

#include "qbx/algebra.hpp"
#include "qbx/block.hpp"
#include "qbx/quiver.hpp"

namespace qbxtest {

using namespace qbx;

inline Field Q() { return Field::rationals(); }

inline Scalar one() { return Scalar::one(Q()); }

inline PathCombination path_comb(const QuiverPtr& q, const std::vector<std::string>& labels,
                                 const Field& f = Field::rationals()) {
  return PathCombination::of_path(Path::of_labels(q, labels), Scalar::one(f));
}

// The running example: loop a11 at 1, arrows a12: 1->2, a21: 2->1,
// relations a11^3 - a12 a21, a11 a12, a21 a11.
inline Presentation ex35(const Field& f = Field::rationals()) {
  QuiverPtr q = make_quiver({"1", "2"}, {{"a11", 0, 0}, {"a12", 0, 1}, {"a21", 1, 0}});
  Presentation p;
  p.quiver = q;
  p.relations.push_back(path_comb(q, {"a11", "a11", "a11"}, f) -
                        path_comb(q, {"a12", "a21"}, f));
  p.relations.push_back(path_comb(q, {"a11", "a12"}, f));
  p.relations.push_back(path_comb(q, {"a21", "a11"}, f));
  return p;
}

// K[x]/(x^n): one vertex, one loop, relation x^n.
inline Presentation kxn(int n, const Field& f = Field::rationals()) {
  QuiverPtr q = make_quiver({"1"}, {{"x", 0, 0}});
  Presentation p;
  p.quiver = q;
  std::vector<std::string> word(n, "x");
  p.relations.push_back(path_comb(q, word, f));
  return p;
}

// path algebra of 1 -> 2, no relations
inline Presentation a2(const Field& f = Field::rationals()) {
  (void)f;
  Presentation p;
  p.quiver = make_quiver({"1", "2"}, {{"a", 0, 1}});
  return p;
}

// A3 with the zero relation on the unique length-2 path
inline Presentation a3zero(const Field& f = Field::rationals()) {
  QuiverPtr q = make_quiver({"1", "2", "3"}, {{"a", 0, 1}, {"b", 1, 2}});
  Presentation p;
  p.quiver = q;
  p.relations.push_back(path_comb(q, {"a", "b"}, f));
  return p;
}

// commutative square: ac = bd
inline Presentation square(const Field& f = Field::rationals()) {
  QuiverPtr q = make_quiver({"1", "2", "3", "4"},
                            {{"a", 0, 1}, {"b", 0, 2}, {"c", 1, 3}, {"d", 2, 3}});
  Presentation p;
  p.quiver = q;
  p.relations.push_back(path_comb(q, {"a", "c"}, f) - path_comb(q, {"b", "d"}, f));
  return p;
}

// semisimple K x K
inline Presentation kxk() {
  Presentation p;
  p.quiver = make_quiver({"1", "2"}, {});
  return p;
}

// serial self-injective 2-cycle with radical square zero; its Nakayama
// permutation swaps the vertices
inline Presentation cyc2(const Field& f = Field::rationals()) {
  QuiverPtr q = make_quiver({"1", "2"}, {{"a", 0, 1}, {"b", 1, 0}});
  Presentation p;
  p.quiver = q;
  p.relations.push_back(path_comb(q, {"a", "b"}, f));
  p.relations.push_back(path_comb(q, {"b", "a"}, f));
  return p;
}

// deterministic "random" admissible presentation: random quiver, all paths
// of length 3 as relations (plus the seed-chosen arrows)
inline Presentation random_admissible(unsigned seed, const Field& f = Field::rationals()) {
  std::mt19937 rng(seed);
  std::uniform_int_distribution<int> nv(2, 3);
  const int m = nv(rng);
  std::vector<std::string> vertices;
  for (int v = 0; v < m; ++v) vertices.push_back("v" + std::to_string(v + 1));
  std::uniform_int_distribution<int> na(3, 4);
  std::uniform_int_distribution<int> pick(0, m - 1);
  const int arrows = na(rng);
  std::vector<Arrow> as;
  for (int a = 0; a < arrows; ++a)
    as.push_back(Arrow{"r" + std::to_string(a + 1), pick(rng), pick(rng)});
  QuiverPtr q = make_quiver(vertices, as);

  Presentation p;
  p.quiver = q;
  // kill J^3: every path of length 3 becomes a relation
  std::vector<std::vector<int>> len2;
  for (int a = 0; a < q->num_arrows(); ++a)
    for (int b : q->arrows_from(q->arrow(a).tgt)) len2.push_back({a, b});
  for (const auto& ab : len2)
    for (int c : q->arrows_from(q->arrow(ab[1]).tgt)) {
      Path path = Path::of_arrows(q, {ab[0], ab[1], c});
      p.relations.push_back(PathCombination::of_path(path, Scalar::one(f)));
    }
  return p;
}

// all block specs with sum(n) <= total for m rows
inline std::vector<BlockSpec> all_specs(int m, int total) {
  std::vector<BlockSpec> out;
  std::vector<int> cur(m, 1);
  while (true) {
    int sum = 0;
    for (int v : cur) sum += v;
    if (sum <= total) out.push_back(BlockSpec{cur});
    // odometer
    int k = m - 1;
    while (k >= 0) {
      ++cur[k];
      int s = 0;
      for (int v : cur) s += v;
      if (s <= total) break;
      cur[k] = 1;
      --k;
    }
    if (k < 0) break;
  }
  return out;
}

}  // namespace qbxtest
