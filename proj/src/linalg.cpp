#include "qbx/linalg.hpp"

#include <algorithm>

namespace qbx {

SparseVec sparse_unit(int index, const Field& f) { return {{index, Scalar::one(f)}}; }

SparseVec sparse_scale(const SparseVec& v, const Scalar& c) {
  if (c.is_zero()) return {};
  SparseVec out;
  out.reserve(v.size());
  for (const auto& [i, a] : v) {
    Scalar b = a * c;
    if (!b.is_zero()) out.emplace_back(i, b);
  }
  return out;
}

void sparse_axpy(SparseVec& dst, const Scalar& c, const SparseVec& src) {
  if (c.is_zero() || src.empty()) return;
  SparseVec out;
  out.reserve(dst.size() + src.size());
  auto a = dst.begin();
  auto b = src.begin();
  while (a != dst.end() && b != src.end()) {
    if (a->first < b->first) {
      out.push_back(*a++);
    } else if (a->first > b->first) {
      Scalar s = b->second * c;
      if (!s.is_zero()) out.emplace_back(b->first, s);
      ++b;
    } else {
      Scalar s = a->second + b->second * c;
      if (!s.is_zero()) out.emplace_back(a->first, s);
      ++a;
      ++b;
    }
  }
  out.insert(out.end(), a, dst.end());
  for (; b != src.end(); ++b) {
    Scalar s = b->second * c;
    if (!s.is_zero()) out.emplace_back(b->first, s);
  }
  dst = std::move(out);
}

Scalar sparse_coeff(const SparseVec& v, int index, const Field& f) {
  auto it = std::lower_bound(v.begin(), v.end(), index,
                             [](const auto& p, int i) { return p.first < i; });
  if (it != v.end() && it->first == index) return it->second;
  return Scalar::zero(f);
}

bool sparse_equal(const SparseVec& a, const SparseVec& b) {
  if (a.size() != b.size()) return false;
  for (size_t k = 0; k < a.size(); ++k)
    if (a[k].first != b[k].first || a[k].second != b[k].second) return false;
  return true;
}

std::vector<Scalar> sparse_to_dense(const SparseVec& v, int n, const Field& f) {
  std::vector<Scalar> out(n, Scalar::zero(f));
  for (const auto& [i, c] : v) out[i] = c;
  return out;
}

SparseVec dense_to_sparse(const std::vector<Scalar>& v) {
  SparseVec out;
  for (int i = 0; i < static_cast<int>(v.size()); ++i)
    if (!v[i].is_zero()) out.emplace_back(i, v[i]);
  return out;
}

namespace {

// entries sorted by index, duplicates merged, zeros dropped
void normalize(SparseVec& v) {
  bool sorted = true;
  for (size_t k = 1; k < v.size(); ++k)
    if (v[k - 1].first >= v[k].first) {
      sorted = false;
      break;
    }
  if (sorted) return;
  std::sort(v.begin(), v.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  SparseVec out;
  for (auto& [i, c] : v) {
    if (!out.empty() && out.back().first == i)
      out.back().second += c;
    else
      out.emplace_back(i, c);
  }
  v.clear();
  for (auto& [i, c] : out)
    if (!c.is_zero()) v.emplace_back(i, c);
}

}  // namespace

SparseVec EchelonBasis::reduce(SparseVec v) const {
  normalize(v);
  // Eliminating a pivot only introduces smaller indices, so repeatedly
  // clearing the largest remaining pivot terminates.
  while (!v.empty()) {
    bool hit = false;
    for (auto rit = v.rbegin(); rit != v.rend(); ++rit) {
      auto it = rows_.find(rit->first);
      if (it != rows_.end()) {
        sparse_axpy(v, -rit->second, it->second);
        hit = true;
        break;
      }
    }
    if (!hit) break;
  }
  return v;
}

bool EchelonBasis::insert(SparseVec v) {
  v = reduce(std::move(v));
  if (v.empty()) return false;
  int pivot = v.back().first;
  Scalar lead = v.back().second;
  v = sparse_scale(v, lead.inverse());
  // back-substitute into existing rows
  for (auto& [p, row] : rows_) {
    Scalar c = sparse_coeff(row, pivot, field_);
    if (!c.is_zero()) sparse_axpy(row, -c, v);
  }
  rows_.emplace(pivot, std::move(v));
  return true;
}

bool EchelonBasis::operator==(const EchelonBasis& o) const {
  if (rows_.size() != o.rows_.size()) return false;
  auto a = rows_.begin();
  auto b = o.rows_.begin();
  for (; a != rows_.end(); ++a, ++b) {
    if (a->first != b->first || !sparse_equal(a->second, b->second)) return false;
  }
  return true;
}

std::map<int, Scalar> EchelonBasis::coordinates(const SparseVec& v) const {
  // Rows are fully reduced with pivot coefficient 1, so the coordinate of v
  // over the row with pivot p is simply v's residual coefficient at p.
  std::map<int, Scalar> coords;
  SparseVec w = v;
  while (!w.empty()) {
    auto it = rows_.find(w.back().first);
    if (it == rows_.end()) throw compute_error("vector outside subspace in coordinates()");
    Scalar c = w.back().second;
    coords[it->first] = c;
    sparse_axpy(w, -c, it->second);
  }
  return coords;
}

bool Subspace::contains(const Subspace& other) const {
  for (const auto& [p, row] : other.basis_.rows())
    if (!contains(row)) return false;
  return true;
}

std::vector<SparseVec> Subspace::basis_rows() const {
  std::vector<SparseVec> out;
  out.reserve(basis_.rows().size());
  for (const auto& [p, row] : basis_.rows()) out.push_back(row);
  return out;
}

Subspace Subspace::sum(const Subspace& other) const {
  Subspace s = *this;
  for (const auto& row : other.basis_rows()) s.add(row);
  return s;
}

Subspace Subspace::intersect(const Subspace& other) const {
  // Zassenhaus: echelonize rows (u | u) and (v | 0) with the "sum" block on
  // the high indices; rows whose high block vanished have intersection
  // vectors in the low block.
  const int n = ambient_;
  EchelonBasis stacked(field());
  auto lift = [&](const SparseVec& v, bool both) {
    SparseVec w;
    if (both)
      for (const auto& [i, c] : v) w.emplace_back(i, c);
    for (const auto& [i, c] : v) w.emplace_back(i + n, c);
    return w;
  };
  for (const auto& row : basis_rows()) stacked.insert(lift(row, true));
  for (const auto& row : other.basis_rows()) stacked.insert(lift(row, false));
  Subspace result(n, field());
  for (const auto& [p, row] : stacked.rows()) {
    if (p < n) result.add(row);  // high block empty: row lives in low indices
  }
  return result;
}

Subspace Subspace::full(int ambient_dim, const Field& f) {
  Subspace s(ambient_dim, f);
  for (int i = 0; i < ambient_dim; ++i) s.add(sparse_unit(i, f));
  return s;
}

Subspace nullspace(const std::vector<SparseVec>& constraint_rows, int n, const Field& f) {
  EchelonBasis rowspace(f);
  for (const auto& r : constraint_rows) rowspace.insert(r);
  Subspace kernel(n, f);
  std::vector<bool> is_pivot(n, false);
  for (const auto& [p, row] : rowspace.rows()) is_pivot[p] = true;
  for (int free = 0; free < n; ++free) {
    if (is_pivot[free]) continue;
    // x_free = 1; for every row with pivot p: x_p = -row[free]
    SparseVec x{{free, Scalar::one(f)}};
    for (const auto& [p, row] : rowspace.rows()) {
      Scalar c = sparse_coeff(row, free, f);
      if (!c.is_zero()) x.emplace_back(p, -c);
    }
    std::sort(x.begin(), x.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
    kernel.add(std::move(x));
  }
  return kernel;
}

int rank_of(const std::vector<SparseVec>& vecs, const Field& f) {
  EchelonBasis e(f);
  for (const auto& v : vecs) e.insert(v);
  return e.dim();
}

}  // namespace qbx
