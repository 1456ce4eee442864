#pragma once

#include <string>
#include <vector>

#include "qbx/quiver.hpp"

namespace qbx {

// Block sizes n_1..n_m, indexed like the vertices of the input quiver.
struct BlockSpec {
  std::vector<int> n;

  int rows() const { return static_cast<int>(n.size()); }
  int total() const;
  void validate(int num_vertices) const;
};

// The quiver Q' of the block extension: vertices (i,j), delta arrows
// (i,j) -> (i,j+1), beta arrows (i,n_i) -> (s,1) in bijection with the
// input arrows.
struct BlockQuiver {
  QuiverPtr quiver;
  QuiverPtr source;  // the input quiver
  BlockSpec spec;
  std::vector<std::vector<int>> vertex_of;  // [i][j-1] -> Q' vertex index
  std::vector<std::vector<int>> delta_of;   // [i][j-1] -> Q' arrow index (j < n_i)
  std::vector<int> beta_of;                 // input arrow index -> Q' arrow index

  int vertex(int i, int j) const { return vertex_of[i][j - 1]; }  // 1-based j
  int delta(int i, int j) const { return delta_of[i][j - 1]; }
  int beta(int a) const { return beta_of[a]; }

  // delta_i = d_{i,1} ... d_{i,n_i-1}; the stationary path at (i,1) when
  // n_i = 1.
  Path delta_path(int i) const;
  // d_{i,a} ... d_{i,b} (1-based, inclusive); stationary at (i,a) if a > b.
  Path delta_path(int i, int a, int b) const;
};

std::string block_vertex_label(const std::string& vertex_label, int j);
std::string block_delta_label(const std::string& vertex_label, int j);
std::string block_beta_label(const std::string& arrow_label);

BlockQuiver block_quiver(const Presentation& pres, const BlockSpec& spec);

// The extension map e: KQ+ -> KQ'+ replacing each arrow by its beta and
// inserting the full delta chain of every intermediate vertex.
Path extend_path(const BlockQuiver& bq, const Path& p);
PathCombination extend(const BlockQuiver& bq, const PathCombination& p);

// Presentation of P = R(n_1,...,n_m) on Q' with relations e(rho_k).
Presentation block_presentation(const Presentation& pres, const BlockSpec& spec);
Presentation block_presentation(const Presentation& pres, const BlockQuiver& bq);

}  // namespace qbx
