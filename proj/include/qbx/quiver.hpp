#pragma once

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "qbx/scalar.hpp"

namespace qbx {

struct Arrow {
  std::string label;
  int src;
  int tgt;
};

// Finite directed multigraph.  Immutable after construction; shared by
// every Path/PathCombination built over it.
class Quiver {
 public:
  Quiver(std::vector<std::string> vertices, std::vector<Arrow> arrows);

  int num_vertices() const { return static_cast<int>(vertices_.size()); }
  int num_arrows() const { return static_cast<int>(arrows_.size()); }
  const std::vector<std::string>& vertices() const { return vertices_; }
  const std::vector<Arrow>& arrows() const { return arrows_; }
  const Arrow& arrow(int i) const { return arrows_[i]; }
  const std::string& vertex_label(int v) const { return vertices_[v]; }

  int vertex_index(const std::string& label) const;  // -1 if absent
  int arrow_index(const std::string& label) const;   // -1 if absent
  const std::vector<int>& arrows_from(int v) const { return out_[v]; }

 private:
  std::vector<std::string> vertices_;
  std::vector<Arrow> arrows_;
  std::map<std::string, int> vertex_by_label_;
  std::map<std::string, int> arrow_by_label_;
  std::vector<std::vector<int>> out_;
};

using QuiverPtr = std::shared_ptr<const Quiver>;

QuiverPtr make_quiver(std::vector<std::string> vertices, std::vector<Arrow> arrows);

// A path: either the stationary path at a vertex or a composable arrow
// sequence, read left to right ("first p, then q").
class Path {
 public:
  static Path stationary(QuiverPtr q, int vertex);
  static Path of_arrows(QuiverPtr q, std::vector<int> arrows);
  static Path of_labels(QuiverPtr q, const std::vector<std::string>& labels);

  const QuiverPtr& quiver() const { return quiver_; }
  int length() const { return static_cast<int>(arrows_.size()); }
  bool is_stationary() const { return arrows_.empty(); }
  int source() const;
  int target() const;
  const std::vector<int>& arrows() const { return arrows_; }

  // Canonical order: by length, then lexicographically by arrow declaration
  // indices; stationary paths by vertex.
  bool operator<(const Path& o) const;
  bool operator==(const Path& o) const;

  std::string text() const;  // "e_<v>" or "a*b*c"

 private:
  Path() = default;
  QuiverPtr quiver_;
  int base_ = -1;  // source vertex (meaningful for stationary paths)
  std::vector<int> arrows_;
};

// Composition: concatenation when target(p) = source(q), the zero of KQ
// otherwise (signalled by nullopt).  Stationary paths act as local units.
std::optional<Path> compose(const Path& p, const Path& q);

// Element of the path algebra KQ: finite linear combination of paths.
class PathCombination {
 public:
  PathCombination(QuiverPtr q, const Field& f) : quiver_(std::move(q)), field_(f) {}
  static PathCombination of_path(const Path& p, const Scalar& c);
  static PathCombination of_path(const Path& p);

  const QuiverPtr& quiver() const { return quiver_; }
  const Field& field() const { return field_; }
  const std::map<Path, Scalar>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  int num_terms() const { return static_cast<int>(terms_.size()); }

  void add_term(const Path& p, const Scalar& c);

  PathCombination operator+(const PathCombination& o) const;
  PathCombination operator-(const PathCombination& o) const;
  PathCombination scaled(const Scalar& c) const;

  // All constituent paths share one source and one target.
  bool is_basic() const;
  int basic_source() const;  // throws when not basic or zero
  int basic_target() const;
  int min_path_length() const;  // throws when zero

  bool operator==(const PathCombination& o) const;

  std::string text() const;  // canonical form, largest path first

 private:
  QuiverPtr quiver_;
  Field field_;
  std::map<Path, Scalar> terms_;

  void check_same_quiver(const PathCombination& o) const;
};

// Bilinear extension of compose; non-composable products drop out.
PathCombination multiply(const PathCombination& x, const PathCombination& y);

struct Presentation {
  QuiverPtr quiver;
  std::vector<PathCombination> relations;
};

// Diagnostics (empty = ok): relation basicness, minimum path length 2,
// nonzero relations, matching quivers.
std::vector<std::string> validate_presentation(const Presentation& p);

}  // namespace qbx
