#pragma once

#include <optional>
#include <string>
#include <vector>

#include "qbx/algebra.hpp"
#include "qbx/block.hpp"

namespace qbx {

struct NakayamaPermutation {
  std::vector<int> sigma;             // vertex index -> vertex index
  std::vector<SparseVec> right_socle;  // spanning vector of soc(e_i A)
  std::vector<SparseVec> left_socle;   // spanning vector of soc(A e_sigma(i))
};

struct QfResult {
  bool qf = false;
  NakayamaPermutation perm;
  std::vector<std::string> diagnostics;  // why not QF
};

// Two-sided Nakayama socle criterion: every soc(e_i A) and soc(A e_j) is
// one-dimensional, the right-socle vertex map is a bijection, and
// soc(A e_sigma(i)) sits at vertex i.
QfResult qf_check(const FDAlgebra& alg);

// A path theta_i from i to sigma(i) whose class spans soc(e_i A);
// deterministic choice: shortest, then lexicographically least.  Throws
// compute_error when no pure path spans the socle.
Path socle_path(const FDAlgebra& alg, int i, const NakayamaPermutation& perm);

// The staircase sequences c_{i1} <= ... <= c_{in_i}, one row per vertex.
struct StaircaseSpec {
  std::vector<std::vector<int>> c;
  // row lengths match spec.n, rows nondecreasing, entries >= 1
  void validate(const BlockSpec& spec) const;
};

// Row breakpoints: l_{i0} = 0 < l_{i1} < ... < l_{iu_i} = n_i with c
// constant on each block and strictly increasing across block boundaries.
struct Breakpoints {
  std::vector<std::vector<int>> l;  // l[i] = (l_{i0}, ..., l_{iu_i})
  std::vector<int> u;
};

Breakpoints breakpoints(const StaircaseSpec& stair);

// theta'_i(u,v) of the staircase construction; theta_ext = e(theta_i).
// Requires 1 <= u <= n_i and 1 <= v <= n_{sigma(i)} - 1.
Path theta_prime(const BlockQuiver& bq, const NakayamaPermutation& perm, const Path& theta_ext,
                 int i, int u, int v);

// theta'_i = delta_i e(theta_i) delta_sigma(i)
Path theta_prime_full(const BlockQuiver& bq, const NakayamaPermutation& perm,
                      const Path& theta_ext, int i);

struct HaradaResult {
  Presentation presentation;      // block relations + theta' generators
  BlockQuiver bq;
  NakayamaPermutation perm;
  Breakpoints bp;
  std::vector<Path> theta;        // per vertex, in the input quiver
  std::vector<Path> generators;   // the emitted theta'_i(l_ij, c_il_ij) paths
};

// The quiver with relations of the upper staircase factor algebra P/X.
// Requires a quasi-Frobenius input; generators with c = n_{sigma(i)} are
// skipped (their staircase rows vanish).
HaradaResult harada_presentation(const Presentation& pres, const BlockSpec& spec,
                                 const StaircaseSpec& stair, const Field& f, int max_len = 64);

}  // namespace qbx
