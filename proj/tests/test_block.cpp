#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>
#include <set>

#include "helpers.hpp"

using namespace qbx;
using namespace qbxtest;

TEST_CASE("block quiver of the running example") {
  Presentation pres = ex35();
  BlockQuiver bq = block_quiver(pres, BlockSpec{{3, 2}});
  const Quiver& q = *bq.quiver;
  CHECK(q.vertices() == std::vector<std::string>{"1_1", "1_2", "1_3", "2_1", "2_2"});
  REQUIRE(q.num_arrows() == 6);
  auto arrow = [&](const std::string& l) {
    int a = q.arrow_index(l);
    REQUIRE(a >= 0);
    return q.arrow(a);
  };
  CHECK(q.vertex_label(arrow("d_1_1").src) == "1_1");
  CHECK(q.vertex_label(arrow("d_1_1").tgt) == "1_2");
  CHECK(q.vertex_label(arrow("d_1_2").src) == "1_2");
  CHECK(q.vertex_label(arrow("d_1_2").tgt) == "1_3");
  CHECK(q.vertex_label(arrow("d_2_1").src) == "2_1");
  CHECK(q.vertex_label(arrow("d_2_1").tgt) == "2_2");
  CHECK(q.vertex_label(arrow("b_a11").src) == "1_3");
  CHECK(q.vertex_label(arrow("b_a11").tgt) == "1_1");
  CHECK(q.vertex_label(arrow("b_a12").src) == "1_3");
  CHECK(q.vertex_label(arrow("b_a12").tgt) == "2_1");
  CHECK(q.vertex_label(arrow("b_a21").src) == "2_2");
  CHECK(q.vertex_label(arrow("b_a21").tgt) == "1_1");

  CHECK_THROWS_AS(block_quiver(pres, BlockSpec{{3}}), validation_error);
  CHECK_THROWS_AS(block_quiver(pres, BlockSpec{{3, 0}}), validation_error);
}

TEST_CASE("degenerate block spec reproduces the input quiver") {
  Presentation pres = ex35();
  BlockQuiver bq = block_quiver(pres, BlockSpec{{1, 1}});
  QuiverPtr expect = make_quiver({"1_1", "2_1"},
                                 {{"b_a11", 0, 0}, {"b_a12", 0, 1}, {"b_a21", 1, 0}});
  CHECK(same_multigraph(*bq.quiver, *expect));
}

TEST_CASE("one loop, two blocks") {
  Presentation pres = kxn(2);
  BlockQuiver bq = block_quiver(pres, BlockSpec{{2}});
  CHECK(bq.quiver->vertices() == std::vector<std::string>{"1_1", "1_2"});
  REQUIRE(bq.quiver->num_arrows() == 2);
  CHECK(bq.quiver->arrow(0).label == "d_1_1");
  CHECK(bq.quiver->arrow(1).label == "b_x");
}

TEST_CASE("extension map on paths") {
  Presentation pres = ex35();
  BlockQuiver bq = block_quiver(pres, BlockSpec{{3, 2}});
  QuiverPtr q = pres.quiver;

  CHECK(extend_path(bq, Path::of_labels(q, {"a11", "a12"})).text() ==
        "b_a11*d_1_1*d_1_2*b_a12");
  CHECK(extend_path(bq, Path::of_labels(q, {"a12", "a21"})).text() == "b_a12*d_2_1*b_a21");
  CHECK(extend_path(bq, Path::of_labels(q, {"a12"})).text() == "b_a12");
  CHECK(extend_path(bq, Path::of_labels(q, {"a11", "a11", "a11"})).text() ==
        "b_a11*d_1_1*d_1_2*b_a11*d_1_1*d_1_2*b_a11");

  CHECK_THROWS_AS(extend_path(bq, Path::stationary(q, 0)), compute_error);

  PathCombination mixed = path_comb(q, {"a11", "a11", "a11"}) - path_comb(q, {"a12", "a21"});
  PathCombination ext = extend(bq, mixed);
  CHECK(ext.num_terms() == 2);
  CHECK(ext.text() ==
        "b_a11*d_1_1*d_1_2*b_a11*d_1_1*d_1_2*b_a11 - b_a12*d_2_1*b_a21");
}

TEST_CASE("delta chains for singleton rows are stationary") {
  Presentation pres = ex35();
  BlockQuiver bq = block_quiver(pres, BlockSpec{{1, 1}});
  CHECK(bq.delta_path(0).is_stationary());
  QuiverPtr q = pres.quiver;
  // extension through stationary chains: e(a11 a12) = b_a11 b_a12
  CHECK(extend_path(bq, Path::of_labels(q, {"a11", "a12"})).text() == "b_a11*b_a12");
}

TEST_CASE("block presentation of the running example") {
  Presentation pres = ex35();
  Presentation bp = block_presentation(pres, BlockSpec{{3, 2}});
  REQUIRE(bp.relations.size() == 3);
  CHECK(bp.relations[0].text() ==
        "b_a11*d_1_1*d_1_2*b_a11*d_1_1*d_1_2*b_a11 - b_a12*d_2_1*b_a21");
  CHECK(bp.relations[1].text() == "b_a11*d_1_1*d_1_2*b_a12");
  CHECK(bp.relations[2].text() == "b_a21*d_1_1*d_1_2*b_a11");
  CHECK(validate_presentation(bp).empty());

  // the symbolic quotient has the expected dimension
  FDAlgebra sym = build_algebra(bp, Q());
  CHECK(sym.dim() == 52);
}

TEST_CASE("one loop with relation x^2, two blocks") {
  Presentation pres = kxn(2);
  Presentation bp = block_presentation(pres, BlockSpec{{2}});
  REQUIRE(bp.relations.size() == 1);
  CHECK(bp.relations[0].text() == "b_x*d_1_1*b_x");
  CHECK(build_algebra(bp, Q()).dim() == 7);  // matches the Def 2.2 grid by hand
}

TEST_CASE("degenerate spec keeps relations up to relabeling") {
  Presentation pres = ex35();
  BlockQuiver bq = block_quiver(pres, BlockSpec{{1, 1}});
  Presentation bp = block_presentation(pres, bq);
  REQUIRE(bp.relations.size() == 3);
  CHECK(bp.relations[0].text() == "b_a11*b_a11*b_a11 - b_a12*b_a21");
  CHECK(bp.relations[1].text() == "b_a11*b_a12");
  CHECK(bp.relations[2].text() == "b_a21*b_a11");
  CHECK(build_algebra(bp, Q()).dim() == 8);
}

TEST_CASE("block presentations recover their block quiver") {
  for (const auto& pres : {ex35(), kxn(3), a3zero()}) {
    const int m = pres.quiver->num_vertices();
    for (const auto& spec :
         {BlockSpec{std::vector<int>(m, 1)}, BlockSpec{std::vector<int>(m, 2)}}) {
      BlockQuiver bq = block_quiver(pres, spec);
      Presentation bp = block_presentation(pres, bq);
      FDAlgebra sym = build_algebra(bp, Q());
      CHECK(same_multigraph(*quiver_of_algebra(sym).quiver, *bq.quiver));
    }
  }
}

TEST_CASE("extension map is injective on random paths") {
  std::mt19937 rng(31);
  Presentation pres = ex35();
  BlockQuiver bq = block_quiver(pres, BlockSpec{{3, 2}});
  QuiverPtr q = pres.quiver;
  std::set<std::string> seen_in, seen_out;
  std::uniform_int_distribution<int> len(1, 5), start(0, 1);
  for (int k = 0; k < 300; ++k) {
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
    Path p = Path::of_arrows(q, arrows);
    bool new_in = seen_in.insert(p.text()).second;
    bool new_out = seen_out.insert(extend_path(bq, p).text()).second;
    CHECK(new_in == new_out);  // distinct paths map to distinct paths
  }
}

TEST_CASE("cross-composition law e(pq) = e(p) delta_j e(q)") {
  std::mt19937 rng(47);
  for (const auto& pres : {ex35(), a3zero(), square()}) {
    for (const auto& spec : {BlockSpec{std::vector<int>(pres.quiver->num_vertices(), 2)},
                             BlockSpec{std::vector<int>(pres.quiver->num_vertices(), 1)}}) {
      BlockQuiver bq = block_quiver(pres, spec);
      QuiverPtr q = pres.quiver;
      int done = 0;
      int guard = 0;
      while (done < 100 && ++guard < 5000) {
        std::uniform_int_distribution<int> start(0, q->num_vertices() - 1), len(1, 3);
        int v = start(rng);
        std::vector<int> pa, qa;
        for (int l = len(rng); l > 0; --l) {
          const auto& out = q->arrows_from(v);
          if (out.empty()) break;
          std::uniform_int_distribution<int> pk(0, static_cast<int>(out.size()) - 1);
          int a = out[pk(rng)];
          pa.push_back(a);
          v = q->arrow(a).tgt;
        }
        int mid = v;
        for (int l = len(rng); l > 0; --l) {
          const auto& out = q->arrows_from(v);
          if (out.empty()) break;
          std::uniform_int_distribution<int> pk(0, static_cast<int>(out.size()) - 1);
          int a = out[pk(rng)];
          qa.push_back(a);
          v = q->arrow(a).tgt;
        }
        if (pa.empty() || qa.empty()) continue;
        Path p = Path::of_arrows(q, pa), r = Path::of_arrows(q, qa);
        Path pq = *compose(p, r);
        Path lhs = extend_path(bq, pq);
        Path rhs = *compose(*compose(extend_path(bq, p), bq.delta_path(mid)),
                            extend_path(bq, r));
        CHECK(lhs == rhs);
        ++done;
      }
      CHECK(done == 100);
    }
  }
}
