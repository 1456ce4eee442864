#include "qbx/algebra.hpp"

#include <algorithm>
#include <map>

#include "qbx/errors.hpp"

namespace qbx {

namespace {
constexpr long kPathBudget = 500000;
}

SparseVec FDAlgebra::mul_vec(const SparseVec& x, const SparseVec& y) const {
  std::map<int, Scalar> acc;
  for (const auto& [b, a] : x) {
    for (const auto& [c, bb] : y) {
      const SparseVec& prod = table_[b][c];
      if (prod.empty()) continue;
      Scalar s = a * bb;
      for (const auto& [d, g] : prod) {
        auto it = acc.find(d);
        if (it == acc.end())
          acc.emplace(d, s * g);
        else
          it->second += s * g;
      }
    }
  }
  SparseVec out;
  for (auto& [d, c] : acc)
    if (!c.is_zero()) out.emplace_back(d, c);
  return out;
}

SparseVec FDAlgebra::identity() const {
  SparseVec one;
  std::vector<int> ids = idempotent_;
  std::sort(ids.begin(), ids.end());
  for (int b : ids) one.emplace_back(b, Scalar::one(field_));
  return one;
}

const Subspace& FDAlgebra::radical() const {
  if (!radical_) throw compute_error("algebra has no radical attached");
  return *radical_;
}

SparseVec FDAlgebra::peirce_project(const SparseVec& v, int i, int j) const {
  SparseVec out;
  for (const auto& [b, c] : v)
    if (basis_[b].src == i && basis_[b].tgt == j) out.emplace_back(b, c);
  return out;
}

std::optional<std::string> FDAlgebra::check_associativity() const {
  const int n = dim();
  // non-composable products must vanish outright
  for (int b = 0; b < n; ++b)
    for (int c = 0; c < n; ++c)
      if (basis_[b].tgt != basis_[c].src && !table_[b][c].empty())
        return "product of non-composable basis elements " + basis_[b].label + ", " +
               basis_[c].label + " is nonzero";
  // composable triples
  std::vector<std::vector<int>> by_src(num_vertices());
  for (int b = 0; b < n; ++b) by_src[basis_[b].src].push_back(b);
  for (int b = 0; b < n; ++b) {
    for (int c : by_src[basis_[b].tgt]) {
      const SparseVec bc = table_[b][c];
      for (int d : by_src[basis_[c].tgt]) {
        SparseVec left = mul_vec(bc, sparse_unit(d, field_));
        SparseVec right = mul_vec(sparse_unit(b, field_), table_[c][d]);
        if (!sparse_equal(left, right))
          return "associativity fails on (" + basis_[b].label + ", " + basis_[c].label + ", " +
                 basis_[d].label + ")";
      }
    }
  }
  return std::nullopt;
}

std::optional<std::string> FDAlgebra::check_idempotents() const {
  for (int i = 0; i < num_vertices(); ++i) {
    for (int j = 0; j < num_vertices(); ++j) {
      SparseVec prod = table_[idempotent_[i]][idempotent_[j]];
      SparseVec expect = i == j ? sparse_unit(idempotent_[i], field_) : SparseVec{};
      if (!sparse_equal(prod, expect))
        return "idempotents at vertices " + vertex_labels_[i] + ", " + vertex_labels_[j] +
               " are not orthogonal idempotent";
    }
  }
  SparseVec one = identity();
  for (int b = 0; b < dim(); ++b) {
    SparseVec u = sparse_unit(b, field_);
    SparseVec l = mul_vec(sparse_unit(idempotent_[basis_[b].src], field_), u);
    SparseVec r = mul_vec(u, sparse_unit(idempotent_[basis_[b].tgt], field_));
    if (!sparse_equal(l, u) || !sparse_equal(r, u))
      return "basis element " + basis_[b].label + " is not fixed by its Peirce idempotents";
    if (!sparse_equal(mul_vec(one, u), u) || !sparse_equal(mul_vec(u, one), u))
      return "identity does not act as unit on " + basis_[b].label;
  }
  return std::nullopt;
}

std::string FDAlgebra::element_text(const SparseVec& v) const {
  if (v.empty()) return "0";
  std::string s;
  bool first = true;
  for (auto it = v.rbegin(); it != v.rend(); ++it) {
    const Scalar& c = it->second;
    Scalar abs = c.is_negative() ? -c : c;
    if (first) {
      if (c.is_negative()) s += "-";
      first = false;
    } else {
      s += c.is_negative() ? " - " : " + ";
    }
    if (!abs.is_one()) s += abs.text() + "*";
    s += basis_[it->first].label;
  }
  return s;
}

namespace {

// All paths of length < cap, canonically ordered (stationaries first by
// vertex, then by length and lexicographic arrow sequence).
std::vector<Path> enumerate_paths(const QuiverPtr& q, int cap) {
  std::vector<Path> all;
  std::vector<Path> level;
  for (int v = 0; v < q->num_vertices(); ++v) level.push_back(Path::stationary(q, v));
  all.insert(all.end(), level.begin(), level.end());
  for (int len = 1; len < cap; ++len) {
    std::vector<Path> next;
    for (const Path& p : level) {
      for (int a : q->arrows_from(p.target())) {
        std::vector<int> arrows = p.arrows();
        arrows.push_back(a);
        next.push_back(Path::of_arrows(q, std::move(arrows)));
      }
    }
    if (next.empty()) break;
    if (static_cast<long>(all.size()) + static_cast<long>(next.size()) > kPathBudget)
      throw compute_error("not finite-dimensional within bound: path space exceeded budget");
    all.insert(all.end(), next.begin(), next.end());
    level = std::move(next);
  }
  return all;
}

struct CapResult {
  std::shared_ptr<PresentedData> data;
  int dim = 0;
  bool certified = false;  // every path of length cap-1 reduces to zero
};

CapResult reduce_at_cap(const Presentation& pres, const Field& f, int cap) {
  CapResult res;
  res.data = std::make_shared<PresentedData>(f);
  PresentedData& D = *res.data;
  D.pres = pres;
  D.cap = cap;
  D.paths = enumerate_paths(pres.quiver, cap);
  for (int i = 0; i < static_cast<int>(D.paths.size()); ++i) D.path_index.emplace(D.paths[i], i);

  // bucket paths by endpoint for the u/v loops
  const int m = pres.quiver->num_vertices();
  std::vector<std::vector<int>> by_target(m), by_source(m);
  for (int i = 0; i < static_cast<int>(D.paths.size()); ++i) {
    by_target[D.paths[i].target()].push_back(i);
    by_source[D.paths[i].source()].push_back(i);
  }

  for (const auto& rel : pres.relations) {
    if (rel.is_zero()) continue;
    const int s = rel.basic_source();
    const int t = rel.basic_target();
    const int minlen = rel.min_path_length();
    for (int ui : by_target[s]) {
      const Path& u = D.paths[ui];
      if (u.length() + minlen >= cap) continue;
      for (int vi : by_source[t]) {
        const Path& v = D.paths[vi];
        if (u.length() + minlen + v.length() >= cap) continue;
        std::map<int, Scalar> row;
        for (const auto& [w, c] : rel.terms()) {
          if (u.length() + w.length() + v.length() >= cap) continue;
          auto uw = compose(u, w);
          auto uwv = compose(*uw, v);
          int idx = D.path_index.at(*uwv);
          auto it = row.find(idx);
          if (it == row.end())
            row.emplace(idx, c);
          else
            it->second += c;
        }
        SparseVec rv;
        for (auto& [i, c] : row)
          if (!c.is_zero()) rv.emplace_back(i, c);
        if (!rv.empty()) D.reducer.insert(std::move(rv));
      }
    }
  }

  res.dim = static_cast<int>(D.paths.size()) - D.reducer.dim();
  res.certified = true;
  for (int i = 0; i < static_cast<int>(D.paths.size()); ++i) {
    if (D.paths[i].length() != cap - 1) continue;
    if (!D.reducer.contains(sparse_unit(i, f))) {
      res.certified = false;
      break;
    }
  }
  return res;
}

}  // namespace

FDAlgebra build_algebra(const Presentation& pres, const Field& f, int max_len) {
  auto issues = validate_presentation(pres);
  if (!issues.empty()) throw validation_error("invalid presentation: " + issues.front());

  CapResult prev = reduce_at_cap(pres, f, 1);
  CapResult cur;
  bool done = false;
  for (int cap = 2; cap <= max_len; ++cap) {
    cur = reduce_at_cap(pres, f, cap);
    if (cur.certified && cur.dim == prev.dim) {
      done = true;
      break;
    }
    prev = std::move(cur);
  }
  if (!done)
    throw compute_error(
        "not finite-dimensional within bound max-len=" + std::to_string(max_len) +
        " (non-admissible ideal or too small a cap)");

  PresentedData& D = *cur.data;
  const int npaths = static_cast<int>(D.paths.size());
  D.class_of.assign(npaths, -1);
  std::vector<int> basis_paths;
  for (int i = 0; i < npaths; ++i) {
    if (D.reducer.rows().count(i)) continue;  // pivot: rewritten away
    // paths of length >= cap-1 are zero classes
    if (D.paths[i].length() >= D.cap - 1) continue;
    D.class_of[i] = static_cast<int>(basis_paths.size());
    basis_paths.push_back(i);
  }
  D.basis_path = basis_paths;

  std::vector<BasisElement> basis;
  basis.reserve(basis_paths.size());
  for (int i : basis_paths) {
    const Path& p = D.paths[i];
    basis.push_back(BasisElement{p.text(), p.source(), p.target(), p.length()});
  }
  std::vector<int> idem(pres.quiver->num_vertices());
  for (int v = 0; v < pres.quiver->num_vertices(); ++v) {
    // stationary paths are enumerated first and never eliminated
    idem[v] = D.class_of[v];
  }

  const int n = static_cast<int>(basis_paths.size());
  auto reduce_path = [&](const Path& p) -> SparseVec {
    SparseVec out;
    if (p.length() >= D.cap - 1) return out;
    SparseVec residual = D.reducer.reduce(sparse_unit(D.path_index.at(p), f));
    for (const auto& [idx, c] : residual) out.emplace_back(D.class_of[idx], c);
    std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
    return out;
  };

  std::vector<std::vector<SparseVec>> table(n, std::vector<SparseVec>(n));
  for (int a = 0; a < n; ++a) {
    const Path& pa = D.paths[basis_paths[a]];
    for (int b = 0; b < n; ++b) {
      const Path& pb = D.paths[basis_paths[b]];
      auto pq = compose(pa, pb);
      if (!pq) continue;
      table[a][b] = reduce_path(*pq);
    }
  }

  FDAlgebra alg(f, pres.quiver->vertices(), std::move(basis), std::move(idem), std::move(table));
  alg.set_presented(cur.data);

  // arrow-ideal radical: the span of positive-length normal forms
  Subspace j(alg.dim(), f);
  for (int b = 0; b < alg.dim(); ++b)
    if (alg.basis()[b].path_length >= 1) j.add(sparse_unit(b, f));
  alg.set_radical(std::move(j));
  return alg;
}

SparseVec evaluate_phi(const FDAlgebra& alg, const PathCombination& x) {
  const auto& D = alg.presented();
  if (!D) throw compute_error("evaluate_phi needs an algebra built from a presentation");
  if (x.quiver() != D->pres.quiver)
    throw compute_error("element belongs to a different quiver than the algebra");
  std::map<int, Scalar> acc;
  for (const auto& [p, c] : x.terms()) {
    if (p.length() >= D->cap - 1) continue;  // J^{cap-1} = 0
    SparseVec residual = D->reducer.reduce(sparse_unit(D->path_index.at(p), alg.field()));
    for (const auto& [idx, a] : residual) {
      int cls = D->class_of[idx];
      auto it = acc.find(cls);
      if (it == acc.end())
        acc.emplace(cls, a * c);
      else
        it->second += a * c;
    }
  }
  SparseVec out;
  for (auto& [b, c] : acc)
    if (!c.is_zero()) out.emplace_back(b, c);
  return out;
}

Subspace product_span(const FDAlgebra& alg, const std::vector<SparseVec>& a,
                      const std::vector<SparseVec>& b) {
  Subspace out(alg.dim(), alg.field());
  for (const auto& x : a) {
    // columns of left multiplication by x
    std::vector<SparseVec> lx(alg.dim());
    for (const auto& [bb, coef] : x)
      for (int c = 0; c < alg.dim(); ++c) {
        const SparseVec& prod = alg.mul(bb, c);
        if (!prod.empty()) sparse_axpy(lx[c], coef, prod);
      }
    for (const auto& y : b) {
      SparseVec prod;
      for (const auto& [c, yc] : y) sparse_axpy(prod, yc, lx[c]);
      out.add(std::move(prod));
    }
  }
  return out;
}

Subspace radical_power(const FDAlgebra& alg, int k) {
  if (k < 0) throw compute_error("radical_power needs k >= 0");
  if (k == 0) return Subspace::full(alg.dim(), alg.field());
  Subspace cur = alg.radical();
  std::vector<SparseVec> jrows = alg.radical().basis_rows();
  for (int i = 2; i <= k; ++i) {
    cur = product_span(alg, cur.basis_rows(), jrows);
    if (cur.dim() == 0) break;
  }
  return cur;
}

Subspace ideal_generated_by(const FDAlgebra& alg, const std::vector<SparseVec>& gens) {
  std::vector<SparseVec> units;
  units.push_back(alg.identity());
  for (int b = 0; b < alg.dim(); ++b) units.push_back(sparse_unit(b, alg.field()));
  Subspace span(alg.dim(), alg.field());
  for (const auto& g : gens) span.add(g);
  // grow until two-sided closure
  while (true) {
    Subspace left = product_span(alg, units, span.basis_rows());
    Subspace next = left.sum(span);
    Subspace right = product_span(alg, next.basis_rows(), units);
    next = next.sum(right);
    if (next.dim() == span.dim()) return next;
    span = std::move(next);
  }
}

Subspace peirce_component(const FDAlgebra& alg, int i, int j) {
  if (i < 0 || i >= alg.num_vertices() || j < 0 || j >= alg.num_vertices())
    throw compute_error("peirce_component: unknown vertex");
  Subspace s(alg.dim(), alg.field());
  for (int b = 0; b < alg.dim(); ++b)
    if (alg.basis()[b].src == i && alg.basis()[b].tgt == j) s.add(sparse_unit(b, alg.field()));
  return s;
}

namespace {

Subspace socle_impl(const FDAlgebra& alg, int i, bool right) {
  if (i < 0 || i >= alg.num_vertices()) throw compute_error("socle: unknown vertex");
  const Field& f = alg.field();
  std::vector<int> unknowns;
  for (int b = 0; b < alg.dim(); ++b) {
    const auto& be = alg.basis()[b];
    if ((right ? be.src : be.tgt) == i) unknowns.push_back(b);
  }
  const auto jrows = alg.radical().basis_rows();
  // constraints indexed by (radical row, output coordinate)
  std::map<std::pair<int, int>, SparseVec> rows;
  for (int uidx = 0; uidx < static_cast<int>(unknowns.size()); ++uidx) {
    SparseVec unit = sparse_unit(unknowns[uidx], f);
    for (int r = 0; r < static_cast<int>(jrows.size()); ++r) {
      SparseVec prod = right ? alg.mul_vec(unit, jrows[r]) : alg.mul_vec(jrows[r], unit);
      for (const auto& [d, c] : prod) {
        SparseVec& row = rows[{r, d}];
        row.emplace_back(uidx, c);
      }
    }
  }
  std::vector<SparseVec> constraints;
  constraints.reserve(rows.size());
  for (auto& [key, row] : rows) {
    std::sort(row.begin(), row.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
    constraints.push_back(std::move(row));
  }
  Subspace kernel = nullspace(constraints, static_cast<int>(unknowns.size()), f);
  Subspace out(alg.dim(), f);
  for (const auto& v : kernel.basis_rows()) {
    SparseVec w;
    for (const auto& [uidx, c] : v) w.emplace_back(unknowns[uidx], c);
    std::sort(w.begin(), w.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
    out.add(std::move(w));
  }
  return out;
}

}  // namespace

Subspace socle_right(const FDAlgebra& alg, int i) { return socle_impl(alg, i, true); }
Subspace socle_left(const FDAlgebra& alg, int i) { return socle_impl(alg, i, false); }

AlgebraQuiver quiver_of_algebra(const FDAlgebra& alg) {
  const Field& f = alg.field();
  const Subspace& j1 = alg.radical();
  Subspace j2 = radical_power(alg, 2);
  const int m = alg.num_vertices();

  std::vector<Arrow> arrows;
  std::vector<SparseVec> reps;
  for (int i = 0; i < m; ++i) {
    for (int j = 0; j < m; ++j) {
      // Peirce pieces of J and J^2
      Subspace jij(alg.dim(), f), j2ij(alg.dim(), f);
      for (const auto& row : j1.basis_rows()) jij.add(alg.peirce_project(row, i, j));
      for (const auto& row : j2.basis_rows()) j2ij.add(alg.peirce_project(row, i, j));
      EchelonBasis mod = j2ij.echelon();
      int t = 0;
      for (const auto& [p, row] : jij.echelon().rows()) {
        if (mod.insert(row)) {
          ++t;
          arrows.push_back(Arrow{"x_" + alg.vertex_labels()[i] + "_" + alg.vertex_labels()[j] +
                                     "_" + std::to_string(t),
                                 i, j});
          reps.push_back(row);
        }
      }
    }
  }
  AlgebraQuiver out;
  out.quiver = make_quiver(alg.vertex_labels(), std::move(arrows));
  out.arrow_reps = std::move(reps);
  return out;
}

FDAlgebra quotient_algebra(const FDAlgebra& alg, const Subspace& ideal) {
  const Field& f = alg.field();
  // the ideal must be Peirce homogeneous so classes keep a (src, tgt)
  for (const auto& row : ideal.basis_rows()) {
    int src = alg.basis()[row.front().first].src;
    int tgt = alg.basis()[row.front().first].tgt;
    for (const auto& [b, c] : row)
      if (alg.basis()[b].src != src || alg.basis()[b].tgt != tgt)
        throw compute_error("quotient by a non-Peirce-homogeneous ideal");
  }
  const auto& rows = ideal.echelon();
  std::vector<int> keep;
  std::vector<int> class_of(alg.dim(), -1);
  for (int b = 0; b < alg.dim(); ++b) {
    if (rows.rows().count(b)) continue;
    class_of[b] = static_cast<int>(keep.size());
    keep.push_back(b);
  }
  auto project = [&](const SparseVec& v) {
    SparseVec r = rows.reduce(v);
    SparseVec out;
    for (const auto& [b, c] : r) out.emplace_back(class_of[b], c);
    std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
    return out;
  };

  std::vector<BasisElement> basis;
  for (int b : keep) {
    BasisElement e = alg.basis()[b];
    basis.push_back(e);
  }
  std::vector<int> idem;
  for (int v = 0; v < alg.num_vertices(); ++v) {
    int cls = class_of[alg.idempotent(v)];
    if (cls < 0) throw compute_error("ideal contains an idempotent; quotient not unital over the same vertices");
    idem.push_back(cls);
  }
  const int n = static_cast<int>(keep.size());
  std::vector<std::vector<SparseVec>> table(n, std::vector<SparseVec>(n));
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) table[a][b] = project(alg.mul(keep[a], keep[b]));

  FDAlgebra out(f, alg.vertex_labels(), std::move(basis), std::move(idem), std::move(table));
  if (alg.has_radical()) {
    Subspace j(out.dim(), f);
    for (const auto& row : alg.radical().basis_rows()) j.add(project(row));
    out.set_radical(std::move(j));
  }
  return out;
}

bool same_multigraph(const Quiver& a, const Quiver& b) {
  if (a.num_vertices() != b.num_vertices() || a.num_arrows() != b.num_arrows()) return false;
  std::vector<std::string> la = a.vertices(), lb = b.vertices();
  std::sort(la.begin(), la.end());
  std::sort(lb.begin(), lb.end());
  if (la != lb) return false;
  std::map<std::pair<std::string, std::string>, int> ca, cb;
  for (const auto& ar : a.arrows()) ca[{a.vertex_label(ar.src), a.vertex_label(ar.tgt)}]++;
  for (const auto& ar : b.arrows()) cb[{b.vertex_label(ar.src), b.vertex_label(ar.tgt)}]++;
  return ca == cb;
}

}  // namespace qbx
