#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "qbx/linalg.hpp"
#include "qbx/quiver.hpp"

namespace qbx {

struct BasisElement {
  std::string label;
  int src;
  int tgt;
  int path_length;  // -1 when the element does not come from a path
};

// Reduction data kept by algebras built from a presentation.
struct PresentedData {
  Presentation pres;
  int cap = 0;                    // paths of length < cap were enumerated
  std::vector<Path> paths;        // canonical enumeration
  std::map<Path, int> path_index;
  EchelonBasis reducer;           // row space of the truncated relation ideal
  std::vector<int> basis_path;    // basis position -> enumeration index
  std::vector<int> class_of;      // enumeration index -> basis position, -1 for pivots

  explicit PresentedData(const Field& f) : reducer(f) {}
};

// Finite-dimensional algebra as labeled basis + structure constants +
// distinguished orthogonal idempotents, with every basis element sitting in
// a single Peirce component.
class FDAlgebra {
 public:
  FDAlgebra(Field f, std::vector<std::string> vertex_labels, std::vector<BasisElement> basis,
            std::vector<int> idempotents, std::vector<std::vector<SparseVec>> table)
      : field_(f),
        vertex_labels_(std::move(vertex_labels)),
        basis_(std::move(basis)),
        idempotent_(std::move(idempotents)),
        table_(std::move(table)) {}

  int dim() const { return static_cast<int>(basis_.size()); }
  int num_vertices() const { return static_cast<int>(vertex_labels_.size()); }
  const Field& field() const { return field_; }
  const std::vector<std::string>& vertex_labels() const { return vertex_labels_; }
  const std::vector<BasisElement>& basis() const { return basis_; }
  int idempotent(int vertex) const { return idempotent_[vertex]; }

  const SparseVec& mul(int b, int c) const { return table_[b][c]; }
  SparseVec mul_vec(const SparseVec& x, const SparseVec& y) const;
  SparseVec identity() const;

  // The Jacobson radical.  Set at construction time: the arrow-ideal span
  // for presented algebras, the trace-form radical for oracle-built ones.
  const Subspace& radical() const;
  void set_radical(Subspace j) { radical_ = std::move(j); }
  bool has_radical() const { return radical_.has_value(); }

  const std::shared_ptr<PresentedData>& presented() const { return presented_; }
  void set_presented(std::shared_ptr<PresentedData> p) { presented_ = std::move(p); }

  // Peirce projection of a coefficient vector: keep coordinates with the
  // given (src, tgt).
  SparseVec peirce_project(const SparseVec& v, int i, int j) const;

  // empty optional = ok, otherwise a description of the first failure
  std::optional<std::string> check_associativity() const;
  std::optional<std::string> check_idempotents() const;

  std::string element_text(const SparseVec& v) const;

 private:
  Field field_;
  std::vector<std::string> vertex_labels_;
  std::vector<BasisElement> basis_;
  std::vector<int> idempotent_;
  std::vector<std::vector<SparseVec>> table_;
  std::optional<Subspace> radical_;
  std::shared_ptr<PresentedData> presented_;
};

// KQ/<relations> with a basis of path normal forms, via length-capped
// elimination; throws compute_error when the stabilization certificate is
// not met by max_len.
FDAlgebra build_algebra(const Presentation& pres, const Field& f, int max_len = 64);

// Normal form of an element of KQ in the algebra's basis coordinates.
SparseVec evaluate_phi(const FDAlgebra& alg, const PathCombination& x);

// Echelon basis of J^k; J^0 is the whole algebra.
Subspace radical_power(const FDAlgebra& alg, int k);

// span{x*y : x in A, y in B}
Subspace product_span(const FDAlgebra& alg, const std::vector<SparseVec>& a,
                      const std::vector<SparseVec>& b);

// Two-sided ideal generated by the given vectors.
Subspace ideal_generated_by(const FDAlgebra& alg, const std::vector<SparseVec>& gens);

Subspace peirce_component(const FDAlgebra& alg, int i, int j);

// {x in e_i A : x J = 0} resp. {x in A e_i : J x = 0}.
Subspace socle_right(const FDAlgebra& alg, int i);
Subspace socle_left(const FDAlgebra& alg, int i);

struct AlgebraQuiver {
  QuiverPtr quiver;
  // one representative radical element per arrow, classes forming a basis
  // of e_i (J/J^2) e_j
  std::vector<SparseVec> arrow_reps;
};

// The Gabriel quiver of a basic algebra: d_ij = dim e_i (J/J^2) e_j arrows
// from i to j.
AlgebraQuiver quiver_of_algebra(const FDAlgebra& alg);

// A/I for a Peirce-homogeneous two-sided ideal; basis elements are classes
// of the surviving original basis elements.
FDAlgebra quotient_algebra(const FDAlgebra& alg, const Subspace& ideal);

// Labeled-multigraph equality: same vertex label set and, for each ordered
// label pair, the same number of arrows.
bool same_multigraph(const Quiver& a, const Quiver& b);

}  // namespace qbx
