#include "qbx/block.hpp"

#include "qbx/errors.hpp"

namespace qbx {

int BlockSpec::total() const {
  int t = 0;
  for (int k : n) t += k;
  return t;
}

void BlockSpec::validate(int num_vertices) const {
  if (static_cast<int>(n.size()) != num_vertices)
    throw validation_error("block spec has " + std::to_string(n.size()) + " entries for " +
                           std::to_string(num_vertices) + " vertices");
  for (int k : n)
    if (k < 1) throw validation_error("block sizes must be >= 1");
}

std::string block_vertex_label(const std::string& vertex_label, int j) {
  return vertex_label + "_" + std::to_string(j);
}

std::string block_delta_label(const std::string& vertex_label, int j) {
  return "d_" + vertex_label + "_" + std::to_string(j);
}

std::string block_beta_label(const std::string& arrow_label) { return "b_" + arrow_label; }

BlockQuiver block_quiver(const Presentation& pres, const BlockSpec& spec) {
  const Quiver& q = *pres.quiver;
  spec.validate(q.num_vertices());

  std::vector<std::string> vertices;
  BlockQuiver bq;
  bq.source = pres.quiver;
  bq.spec = spec;
  bq.vertex_of.resize(q.num_vertices());
  for (int i = 0; i < q.num_vertices(); ++i) {
    for (int j = 1; j <= spec.n[i]; ++j) {
      bq.vertex_of[i].push_back(static_cast<int>(vertices.size()));
      vertices.push_back(block_vertex_label(q.vertex_label(i), j));
    }
  }

  std::vector<Arrow> arrows;
  bq.delta_of.resize(q.num_vertices());
  for (int i = 0; i < q.num_vertices(); ++i) {
    for (int j = 1; j < spec.n[i]; ++j) {
      bq.delta_of[i].push_back(static_cast<int>(arrows.size()));
      arrows.push_back(Arrow{block_delta_label(q.vertex_label(i), j), bq.vertex(i, j),
                             bq.vertex(i, j + 1)});
    }
  }
  for (int a = 0; a < q.num_arrows(); ++a) {
    const Arrow& ar = q.arrow(a);
    bq.beta_of.push_back(static_cast<int>(arrows.size()));
    arrows.push_back(Arrow{block_beta_label(ar.label), bq.vertex(ar.src, spec.n[ar.src]),
                           bq.vertex(ar.tgt, 1)});
  }
  bq.quiver = make_quiver(std::move(vertices), std::move(arrows));
  return bq;
}

Path BlockQuiver::delta_path(int i) const { return delta_path(i, 1, spec.n[i] - 1); }

Path BlockQuiver::delta_path(int i, int a, int b) const {
  if (a > b) return Path::stationary(quiver, vertex(i, a));
  std::vector<int> arrows;
  for (int j = a; j <= b; ++j) arrows.push_back(delta(i, j));
  return Path::of_arrows(quiver, std::move(arrows));
}

Path extend_path(const BlockQuiver& bq, const Path& p) {
  if (p.quiver() != bq.source) throw compute_error("extension map: path from a different quiver");
  if (p.is_stationary())
    throw compute_error("extension map defined on KQ+ only (stationary path)");
  std::vector<int> arrows;
  const auto& in = p.arrows();
  for (size_t k = 0; k < in.size(); ++k) {
    if (k > 0) {
      int mid = bq.source->arrow(in[k]).src;  // = target of previous arrow
      for (int j = 1; j < bq.spec.n[mid]; ++j) arrows.push_back(bq.delta(mid, j));
    }
    arrows.push_back(bq.beta(in[k]));
  }
  return Path::of_arrows(bq.quiver, std::move(arrows));
}

PathCombination extend(const BlockQuiver& bq, const PathCombination& p) {
  if (p.quiver() != bq.source)
    throw compute_error("extension map: element over a different quiver");
  PathCombination out(bq.quiver, p.field());
  for (const auto& [path, c] : p.terms()) out.add_term(extend_path(bq, path), c);
  return out;
}

Presentation block_presentation(const Presentation& pres, const BlockQuiver& bq) {
  auto issues = validate_presentation(pres);
  if (!issues.empty()) throw validation_error("invalid presentation: " + issues.front());
  Presentation out;
  out.quiver = bq.quiver;
  for (const auto& rel : pres.relations) out.relations.push_back(extend(bq, rel));
  return out;
}

Presentation block_presentation(const Presentation& pres, const BlockSpec& spec) {
  return block_presentation(pres, block_quiver(pres, spec));
}

}  // namespace qbx
