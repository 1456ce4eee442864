#pragma once

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <tuple>
#include <vector>

#include "qbx/harada.hpp"

namespace qbx {

// One basis element of P: the R-basis element rbasis placed at matrix
// position (row (i,j), column (s,t)); i,s are 0-based vertex indices, j,t
// are 1-based block positions.
struct BMEntry {
  int i, j, s, t;
  int rbasis;
};

// P = R(n_1,...,n_m) built literally as a structure-constant algebra with
// matrix-style multiplication.
struct BlockMatrixAlgebra {
  FDAlgebra alg;
  std::shared_ptr<const FDAlgebra> base;  // R
  BlockSpec spec;
  std::vector<BMEntry> entries;
  std::map<std::tuple<int, int, int, int, int>, int> index;

  BlockMatrixAlgebra(FDAlgebra a) : alg(std::move(a)) {}

  int find(int i, int j, int s, int t, int rbasis) const {
    auto it = index.find({i, j, s, t, rbasis});
    return it == index.end() ? -1 : it->second;
  }
  // P vertex index of (i,j); vertices are ordered row-major like Q'
  int vertex(int i, int j) const;
};

BlockMatrixAlgebra build_block_algebra(const FDAlgebra& algR, const BlockSpec& spec);

// Dickson's characteristic-zero criterion: the radical is the kernel of
// T(x,y) = trace(L_x L_y).  Refuses over GF(p).
Subspace radical_trace_form(const FDAlgebra& alg);

// phi': KQ' -> P  (delta_ij to the unit at ((i,j),(i,j+1)), beta to the
// arrow class at ((i,n_i),(s,1))).
SparseVec phi_prime(const BlockMatrixAlgebra& P, const BlockQuiver& bq, const Path& path);
SparseVec phi_prime(const BlockMatrixAlgebra& P, const BlockQuiver& bq, const PathCombination& x);

struct ReportLeg {
  std::string name;
  std::string status;  // pass | fail | skip | undecided
  std::string detail;
};

struct VerifyReport {
  std::vector<ReportLeg> legs;
  std::vector<std::pair<std::string, long>> dims;

  void pass(const std::string& name, const std::string& detail = "");
  void fail(const std::string& name, const std::string& detail = "");
  void skip(const std::string& name, const std::string& detail = "");
  void leg(const std::string& name, bool ok, const std::string& detail = "");
  void dim(const std::string& name, long v) { dims.emplace_back(name, v); }
  bool ok() const;
};

// Computed trace-form J(P) and J(P)^2 against the block radical tables
// assembled from R.
VerifyReport verify_radical_formula(const BlockMatrixAlgebra& P);

// (a) quiver of P equals the symbolic quiver, (b) relations vanish under
// phi', (c) symbolic dimension equals dim P.
VerifyReport verify_block_presentation(const Presentation& block_pres,
                                       const BlockMatrixAlgebra& P, const BlockQuiver& bq,
                                       const Field& f, int max_len = 64);

// The staircase ideal X of Def 2.4 assembled from the socle witnesses.
Subspace staircase_ideal(const BlockMatrixAlgebra& P, const NakayamaPermutation& perm,
                         const StaircaseSpec& stair);

VerifyReport verify_harada_presentation(const HaradaResult& hres, const BlockMatrixAlgebra& P,
                                        const Subspace& X, const Field& f, int max_len = 64);

// soc membership of phi'(theta'_i) for every vertex (nonzero and
// right-annihilated by J(P)).
VerifyReport lemma_socle_check(const BlockMatrixAlgebra& P, const BlockQuiver& bq,
                               const NakayamaPermutation& perm, const std::vector<Path>& theta);

// Definition of left Harada algebras: (1) f_{i1}A injective (dual is a
// projective left module), (2) f_ij A isomorphic to f_{i,j-1} J(A).
VerifyReport verify_harada_conditions(const FDAlgebra& alg,
                                      const std::vector<std::vector<int>>& arrangement,
                                      unsigned seed = 0);

// Full oracle run for the CLI / python surface.
VerifyReport verify_pipeline(const Presentation& pres, const BlockSpec& spec,
                             const std::optional<StaircaseSpec>& stair, const Field& f,
                             int max_len = 64, unsigned seed = 0);

}  // namespace qbx
