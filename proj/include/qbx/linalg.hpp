#pragma once

#include <map>
#include <utility>
#include <vector>

#include "qbx/scalar.hpp"

namespace qbx {

// Sparse coefficient vector: (index, nonzero scalar) pairs sorted by index.
using SparseVec = std::vector<std::pair<int, Scalar>>;

SparseVec sparse_unit(int index, const Field& f);
SparseVec sparse_scale(const SparseVec& v, const Scalar& c);
// dst += c * src
void sparse_axpy(SparseVec& dst, const Scalar& c, const SparseVec& src);
Scalar sparse_coeff(const SparseVec& v, int index, const Field& f);
bool sparse_equal(const SparseVec& a, const SparseVec& b);
std::vector<Scalar> sparse_to_dense(const SparseVec& v, int n, const Field& f);
SparseVec dense_to_sparse(const std::vector<Scalar>& v);

// Reduced row-echelon basis with the pivot of each row at its LARGEST
// support index, pivot coefficient 1, rows mutually reduced.  With this
// convention the RREF of a subspace is unique, so equality of subspaces is
// equality of row sets, and reducing a path vector rewrites large paths in
// terms of canonically smaller ones.
class EchelonBasis {
 public:
  explicit EchelonBasis(const Field& f) : field_(f) {}

  // v minus its projection onto the span; every pivot index is eliminated.
  SparseVec reduce(SparseVec v) const;
  // Inserts v if independent; keeps full RREF.  Returns true when the
  // dimension grew.
  bool insert(SparseVec v);

  bool contains(const SparseVec& v) const { return reduce(v).empty(); }
  int dim() const { return static_cast<int>(rows_.size()); }
  const std::map<int, SparseVec>& rows() const { return rows_; }
  const Field& field() const { return field_; }
  bool operator==(const EchelonBasis& o) const;

  // Coordinates of v over the stored rows, keyed by pivot index.  Throws if
  // v is outside the span.
  std::map<int, Scalar> coordinates(const SparseVec& v) const;

 private:
  Field field_;
  std::map<int, SparseVec> rows_;  // pivot index -> row
};

// A subspace of a fixed coordinate space.
class Subspace {
 public:
  Subspace(int ambient_dim, const Field& f) : ambient_(ambient_dim), basis_(f) {}

  int ambient_dim() const { return ambient_; }
  int dim() const { return basis_.dim(); }
  const Field& field() const { return basis_.field(); }
  const EchelonBasis& echelon() const { return basis_; }

  bool add(SparseVec v) { return basis_.insert(std::move(v)); }
  bool contains(const SparseVec& v) const { return basis_.contains(v); }
  bool contains(const Subspace& other) const;
  bool operator==(const Subspace& o) const {
    return ambient_ == o.ambient_ && basis_ == o.basis_;
  }

  std::vector<SparseVec> basis_rows() const;

  Subspace sum(const Subspace& other) const;
  Subspace intersect(const Subspace& other) const;  // Zassenhaus

  static Subspace full(int ambient_dim, const Field& f);
  static Subspace zero(int ambient_dim, const Field& f) { return Subspace(ambient_dim, f); }

 private:
  int ambient_;
  EchelonBasis basis_;
};

// Kernel {x : M x = 0} of the linear map whose constraint rows (over the
// unknowns 0..n-1) are given.
Subspace nullspace(const std::vector<SparseVec>& constraint_rows, int n, const Field& f);

// Rank of a list of vectors.
int rank_of(const std::vector<SparseVec>& vecs, const Field& f);

}  // namespace qbx
