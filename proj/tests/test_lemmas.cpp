#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "helpers.hpp"
#include "qbx/matrix_model.hpp"

using namespace qbx;
using namespace qbxtest;

namespace {

// random element of KQ+ (positive-length paths only)
PathCombination random_positive(const QuiverPtr& q, std::mt19937& rng, int max_len = 4) {
  PathCombination x(q, Field::rationals());
  std::uniform_int_distribution<int> terms(1, 3), coef(-3, 3), len(1, max_len),
      start(0, q->num_vertices() - 1);
  for (int t = terms(rng); t > 0; --t) {
    int v = start(rng);
    std::vector<int> arrows;
    for (int l = len(rng); l > 0; --l) {
      const auto& out = q->arrows_from(v);
      if (out.empty()) break;
      std::uniform_int_distribution<int> pa(0, static_cast<int>(out.size()) - 1);
      int a = out[pa(rng)];
      arrows.push_back(a);
      v = q->arrow(a).tgt;
    }
    if (arrows.empty()) continue;
    x.add_term(Path::of_arrows(q, arrows), Scalar::of(Field::rationals(), coef(rng)));
  }
  return x;
}

}  // namespace

TEST_CASE("vanishing transfer: phi(p) = 0 iff phi'(e(p)) = 0") {
  std::mt19937 rng(2024);
  Presentation pres = ex35();
  FDAlgebra R = build_algebra(pres, Q());
  BlockSpec spec{{3, 2}};
  BlockQuiver bq = block_quiver(pres, spec);
  BlockMatrixAlgebra P = build_block_algebra(R, spec);

  // relations and random kernel elements map to zero
  for (const auto& rel : pres.relations) CHECK(phi_prime(P, bq, extend(bq, rel)).empty());

  int zero_checked = 0, nonzero_checked = 0;
  while (zero_checked < 100 || nonzero_checked < 100) {
    PathCombination p = random_positive(pres.quiver, rng);
    if (p.is_zero()) continue;
    bool vanishes = evaluate_phi(R, p).empty();
    SparseVec image = phi_prime(P, bq, extend(bq, p));
    if (vanishes && zero_checked < 100) {
      CHECK(image.empty());
      ++zero_checked;
    } else if (!vanishes && nonzero_checked < 100) {
      CHECK(!image.empty());
      ++nonzero_checked;
    }
  }

  // kernel elements found by linear algebra: u * rel * v sweeps
  QuiverPtr q = pres.quiver;
  std::vector<PathCombination> kernel;
  for (const auto& rel : pres.relations) {
    kernel.push_back(rel);
    for (int a = 0; a < q->num_arrows(); ++a) {
      PathCombination arrow = PathCombination::of_path(Path::of_arrows(q, {a}), one());
      PathCombination left = multiply(arrow, rel);
      PathCombination right = multiply(rel, arrow);
      if (!left.is_zero()) kernel.push_back(left);
      if (!right.is_zero()) kernel.push_back(right);
    }
  }
  std::uniform_int_distribution<int> pickk(0, static_cast<int>(kernel.size()) - 1),
      coef(-3, 3);
  for (int t = 0; t < 100; ++t) {
    PathCombination p(q, Q());
    for (int s = 0; s < 2; ++s)
      p = p + kernel[pickk(rng)].scaled(Scalar::of(Q(), coef(rng)));
    if (p.is_zero()) continue;
    CHECK(evaluate_phi(R, p).empty());
    CHECK(phi_prime(P, bq, extend(bq, p)).empty());
  }
}

TEST_CASE("cross-composition law over the corpus") {
  std::mt19937 rng(7);
  for (const auto& pres : {ex35(), kxn(3), square()}) {
    BlockSpec spec{std::vector<int>(pres.quiver->num_vertices(), 2)};
    BlockQuiver bq = block_quiver(pres, spec);
    QuiverPtr q = pres.quiver;
    int done = 0, guard = 0;
    while (done < 100 && ++guard < 10000) {
      std::uniform_int_distribution<int> start(0, q->num_vertices() - 1), len(1, 3);
      int v = start(rng);
      std::vector<int> pa;
      for (int l = len(rng); l > 0; --l) {
        const auto& out = q->arrows_from(v);
        if (out.empty()) break;
        std::uniform_int_distribution<int> pk(0, static_cast<int>(out.size()) - 1);
        pa.push_back(out[pk(rng)]);
        v = q->arrow(pa.back()).tgt;
      }
      int mid = v;
      std::vector<int> qa;
      for (int l = len(rng); l > 0; --l) {
        const auto& out = q->arrows_from(v);
        if (out.empty()) break;
        std::uniform_int_distribution<int> pk(0, static_cast<int>(out.size()) - 1);
        qa.push_back(out[pk(rng)]);
        v = q->arrow(qa.back()).tgt;
      }
      if (pa.empty() || qa.empty()) continue;
      Path p = Path::of_arrows(q, pa), r = Path::of_arrows(q, qa);
      Path lhs = extend_path(bq, *compose(p, r));
      Path rhs =
          *compose(*compose(extend_path(bq, p), bq.delta_path(mid)), extend_path(bq, r));
      CHECK(lhs == rhs);
      ++done;
    }
    CHECK(done == 100);
  }
}

TEST_CASE("socle membership of theta prime over QF corpus members") {
  for (const auto& pres : {ex35(), kxn(2), kxn(3), kxn(4)}) {
    const int m = pres.quiver->num_vertices();
    FDAlgebra R = build_algebra(pres, Q());
    QfResult qf = qf_check(R);
    REQUIRE(qf.qf);
    std::vector<Path> theta;
    for (int i = 0; i < m; ++i) theta.push_back(socle_path(R, i, qf.perm));
    for (const auto& spec : {BlockSpec{std::vector<int>(m, 1)},
                             BlockSpec{std::vector<int>(m, 2)}}) {
      BlockQuiver bq = block_quiver(pres, spec);
      BlockMatrixAlgebra P = build_block_algebra(R, spec);
      P.alg.set_radical(radical_trace_form(P.alg));
      CHECK(lemma_socle_check(P, bq, qf.perm, theta).ok());
    }
  }
}
