#include "qbx/harada.hpp"

#include <algorithm>

#include "qbx/errors.hpp"

namespace qbx {

namespace {

// vertex of a one-dimensional right (resp. left) socle: the common target
// (resp. source) of the supporting basis elements
int socle_vertex(const FDAlgebra& alg, const SparseVec& witness, bool right) {
  int v = -1;
  for (const auto& [b, c] : witness) {
    int w = right ? alg.basis()[b].tgt : alg.basis()[b].src;
    if (v == -1) v = w;
    if (w != v) return -1;
  }
  return v;
}

}  // namespace

QfResult qf_check(const FDAlgebra& alg) {
  QfResult res;
  const int m = alg.num_vertices();
  res.perm.sigma.assign(m, -1);
  res.perm.right_socle.resize(m);
  res.perm.left_socle.resize(m);

  for (int i = 0; i < m; ++i) {
    Subspace soc = socle_right(alg, i);
    if (soc.dim() != 1) {
      res.diagnostics.push_back("soc(e_" + alg.vertex_labels()[i] + " R) has dimension " +
                                std::to_string(soc.dim()) + " (need 1)");
      continue;
    }
    SparseVec w = soc.basis_rows().front();
    int v = socle_vertex(alg, w, true);
    if (v < 0) {
      res.diagnostics.push_back("soc(e_" + alg.vertex_labels()[i] +
                                " R) is not Peirce-homogeneous");
      continue;
    }
    res.perm.sigma[i] = v;
    res.perm.right_socle[i] = std::move(w);
  }
  if (!res.diagnostics.empty()) return res;

  std::vector<int> seen(m, -1);
  for (int i = 0; i < m; ++i) {
    int v = res.perm.sigma[i];
    if (seen[v] != -1) {
      res.diagnostics.push_back("socle vertex map is not injective: soc(e_" +
                                alg.vertex_labels()[seen[v]] + " R) and soc(e_" +
                                alg.vertex_labels()[i] + " R) both sit at vertex " +
                                alg.vertex_labels()[v]);
    }
    seen[v] = i;
  }
  if (!res.diagnostics.empty()) return res;

  for (int i = 0; i < m; ++i) {
    int si = res.perm.sigma[i];
    Subspace soc = socle_left(alg, si);
    if (soc.dim() != 1) {
      res.diagnostics.push_back("soc(R e_" + alg.vertex_labels()[si] + ") has dimension " +
                                std::to_string(soc.dim()) + " (need 1)");
      continue;
    }
    SparseVec w = soc.basis_rows().front();
    int v = socle_vertex(alg, w, false);
    if (v != i) {
      res.diagnostics.push_back("soc(R e_" + alg.vertex_labels()[si] + ") sits at vertex " +
                                alg.vertex_labels()[v] + ", expected " + alg.vertex_labels()[i]);
      continue;
    }
    res.perm.left_socle[i] = std::move(w);
  }
  if (!res.diagnostics.empty()) return res;

  res.qf = true;
  return res;
}

Path socle_path(const FDAlgebra& alg, int i, const NakayamaPermutation& perm) {
  const auto& D = alg.presented();
  if (!D) throw compute_error("socle_path needs a presented algebra");
  const QuiverPtr& q = D->pres.quiver;
  const int target = perm.sigma[i];
  const Subspace soc = socle_right(alg, i);

  // paths in canonical order: increasing length, lexicographic within
  const int max_len = D->cap - 2;  // J^{cap-1} = 0
  std::vector<Path> level{Path::stationary(q, i)};
  for (int len = 1; len <= max_len; ++len) {
    std::vector<Path> next;
    for (const Path& p : level)
      for (int a : q->arrows_from(p.target())) {
        std::vector<int> arrows = p.arrows();
        arrows.push_back(a);
        next.push_back(Path::of_arrows(q, std::move(arrows)));
      }
    for (const Path& p : next) {
      if (p.target() != target) continue;
      SparseVec v = evaluate_phi(alg, PathCombination::of_path(p, Scalar::one(alg.field())));
      if (!v.empty() && soc.contains(v)) return p;
    }
    level = std::move(next);
  }
  throw compute_error("no pure path from " + q->vertex_label(i) + " to " +
                      q->vertex_label(target) + " spans the socle");
}

void StaircaseSpec::validate(const BlockSpec& spec) const {
  if (c.size() != spec.n.size())
    throw validation_error("staircase has " + std::to_string(c.size()) + " rows for " +
                           std::to_string(spec.n.size()) + " vertices");
  for (size_t i = 0; i < c.size(); ++i) {
    if (static_cast<int>(c[i].size()) != spec.n[i])
      throw validation_error("staircase row " + std::to_string(i + 1) + " has " +
                             std::to_string(c[i].size()) + " entries, block size is " +
                             std::to_string(spec.n[i]));
    for (size_t j = 0; j < c[i].size(); ++j) {
      if (c[i][j] < 1)
        throw validation_error("staircase entries must be >= 1");
      if (j > 0 && c[i][j] < c[i][j - 1])
        throw validation_error("staircase row " + std::to_string(i + 1) +
                               " is not nondecreasing");
    }
  }
}

Breakpoints breakpoints(const StaircaseSpec& stair) {
  Breakpoints bp;
  for (const auto& row : stair.c) {
    std::vector<int> l{0};
    const int n = static_cast<int>(row.size());
    for (int j = 1; j <= n; ++j) {
      if (j == n || row[j] != row[j - 1]) l.push_back(j);
    }
    bp.u.push_back(static_cast<int>(l.size()) - 1);
    bp.l.push_back(std::move(l));
  }
  return bp;
}

Path theta_prime(const BlockQuiver& bq, const NakayamaPermutation& perm, const Path& theta_ext,
                 int i, int u, int v) {
  const int ni = bq.spec.n[i];
  const int si = perm.sigma[i];
  const int nsi = bq.spec.n[si];
  if (u < 1 || u > ni) throw compute_error("theta_prime: u out of range");
  if (v < 1 || v > nsi - 1) throw compute_error("theta_prime: v out of range (need v <= n_sigma(i) - 1)");
  Path head = u == ni ? Path::stationary(bq.quiver, bq.vertex(i, ni)) : bq.delta_path(i, u, ni - 1);
  Path tail = bq.delta_path(si, 1, v);
  auto a = compose(head, theta_ext);
  auto b = compose(*a, tail);
  return *b;
}

Path theta_prime_full(const BlockQuiver& bq, const NakayamaPermutation& perm,
                      const Path& theta_ext, int i) {
  auto a = compose(bq.delta_path(i), theta_ext);
  auto b = compose(*a, bq.delta_path(perm.sigma[i]));
  return *b;
}

HaradaResult harada_presentation(const Presentation& pres, const BlockSpec& spec,
                                 const StaircaseSpec& stair, const Field& f, int max_len) {
  spec.validate(pres.quiver->num_vertices());
  stair.validate(spec);

  FDAlgebra alg = build_algebra(pres, f, max_len);
  QfResult qf = qf_check(alg);
  if (!qf.qf) {
    std::string msg = "input algebra is not quasi-Frobenius";
    for (const auto& d : qf.diagnostics) msg += "; " + d;
    throw compute_error(msg);
  }

  // staircase bounds need sigma: 1 <= c_ij <= n_sigma(i)
  for (int i = 0; i < spec.rows(); ++i) {
    int bound = spec.n[qf.perm.sigma[i]];
    for (int v : stair.c[i])
      if (v > bound)
        throw validation_error("staircase entry " + std::to_string(v) + " in row " +
                               pres.quiver->vertex_label(i) + " exceeds n_sigma(i) = " +
                               std::to_string(bound));
  }

  HaradaResult res;
  res.bq = block_quiver(pres, spec);
  res.perm = qf.perm;
  res.bp = breakpoints(stair);
  res.presentation.quiver = res.bq.quiver;
  for (const auto& rel : pres.relations) res.presentation.relations.push_back(extend(res.bq, rel));

  for (int i = 0; i < spec.rows(); ++i) {
    res.theta.push_back(socle_path(alg, i, qf.perm));
  }
  for (int i = 0; i < spec.rows(); ++i) {
    Path theta_ext = extend_path(res.bq, res.theta[i]);
    const int nsi = spec.n[qf.perm.sigma[i]];
    for (int j = 1; j <= res.bp.u[i]; ++j) {
      int lij = res.bp.l[i][j];
      int cval = stair.c[i][lij - 1];
      if (cval > nsi - 1) continue;  // staircase row of S is entirely zero
      Path g = theta_prime(res.bq, qf.perm, theta_ext, i, lij, cval);
      res.generators.push_back(g);
      res.presentation.relations.push_back(
          PathCombination::of_path(g, Scalar::one(f)));
    }
  }
  return res;
}

}  // namespace qbx
