#include "qbx/quiver.hpp"

#include <algorithm>

#include "qbx/errors.hpp"

namespace qbx {

Quiver::Quiver(std::vector<std::string> vertices, std::vector<Arrow> arrows)
    : vertices_(std::move(vertices)), arrows_(std::move(arrows)) {
  if (vertices_.empty()) throw validation_error("quiver has no vertices");
  for (int v = 0; v < static_cast<int>(vertices_.size()); ++v) {
    if (!vertex_by_label_.emplace(vertices_[v], v).second)
      throw validation_error("duplicate vertex label '" + vertices_[v] + "'");
  }
  out_.resize(vertices_.size());
  for (int a = 0; a < static_cast<int>(arrows_.size()); ++a) {
    const Arrow& ar = arrows_[a];
    if (ar.src < 0 || ar.src >= num_vertices() || ar.tgt < 0 || ar.tgt >= num_vertices())
      throw validation_error("arrow '" + ar.label + "' references a missing vertex");
    if (!arrow_by_label_.emplace(ar.label, a).second)
      throw validation_error("duplicate arrow label '" + ar.label + "'");
    out_[ar.src].push_back(a);
  }
}

int Quiver::vertex_index(const std::string& label) const {
  auto it = vertex_by_label_.find(label);
  return it == vertex_by_label_.end() ? -1 : it->second;
}

int Quiver::arrow_index(const std::string& label) const {
  auto it = arrow_by_label_.find(label);
  return it == arrow_by_label_.end() ? -1 : it->second;
}

QuiverPtr make_quiver(std::vector<std::string> vertices, std::vector<Arrow> arrows) {
  return std::make_shared<Quiver>(std::move(vertices), std::move(arrows));
}

Path Path::stationary(QuiverPtr q, int vertex) {
  if (vertex < 0 || vertex >= q->num_vertices())
    throw validation_error("stationary path at missing vertex");
  Path p;
  p.quiver_ = std::move(q);
  p.base_ = vertex;
  return p;
}

Path Path::of_arrows(QuiverPtr q, std::vector<int> arrows) {
  if (arrows.empty()) throw validation_error("of_arrows needs a nonempty arrow list");
  for (size_t k = 0; k < arrows.size(); ++k) {
    if (arrows[k] < 0 || arrows[k] >= q->num_arrows())
      throw validation_error("path references a missing arrow");
    if (k > 0 && q->arrow(arrows[k - 1]).tgt != q->arrow(arrows[k]).src)
      throw validation_error("arrows '" + q->arrow(arrows[k - 1]).label + "' and '" +
                             q->arrow(arrows[k]).label + "' do not compose");
  }
  Path p;
  p.base_ = q->arrow(arrows.front()).src;
  p.quiver_ = std::move(q);
  p.arrows_ = std::move(arrows);
  return p;
}

Path Path::of_labels(QuiverPtr q, const std::vector<std::string>& labels) {
  std::vector<int> idx;
  idx.reserve(labels.size());
  for (const auto& l : labels) {
    int a = q->arrow_index(l);
    if (a < 0) throw validation_error("unknown arrow '" + l + "'");
    idx.push_back(a);
  }
  return of_arrows(std::move(q), std::move(idx));
}

int Path::source() const { return arrows_.empty() ? base_ : quiver_->arrow(arrows_.front()).src; }

int Path::target() const { return arrows_.empty() ? base_ : quiver_->arrow(arrows_.back()).tgt; }

bool Path::operator<(const Path& o) const {
  if (length() != o.length()) return length() < o.length();
  if (arrows_.empty()) return base_ < o.base_;
  return arrows_ < o.arrows_;
}

bool Path::operator==(const Path& o) const {
  return length() == o.length() && (arrows_.empty() ? base_ == o.base_ : arrows_ == o.arrows_);
}

std::string Path::text() const {
  if (arrows_.empty()) return "e_" + quiver_->vertex_label(base_);
  std::string s;
  for (size_t k = 0; k < arrows_.size(); ++k) {
    if (k) s += "*";
    s += quiver_->arrow(arrows_[k]).label;
  }
  return s;
}

std::optional<Path> compose(const Path& p, const Path& q) {
  if (p.quiver() != q.quiver()) throw compute_error("composing paths from different quivers");
  if (p.target() != q.source()) return std::nullopt;
  if (p.is_stationary()) return q;
  if (q.is_stationary()) return p;
  std::vector<int> arrows = p.arrows();
  arrows.insert(arrows.end(), q.arrows().begin(), q.arrows().end());
  return Path::of_arrows(p.quiver(), std::move(arrows));
}

PathCombination PathCombination::of_path(const Path& p, const Scalar& c) {
  PathCombination x(p.quiver(), c.field());
  x.add_term(p, c);
  return x;
}

PathCombination PathCombination::of_path(const Path& p) {
  return of_path(p, Scalar::one(Field::rationals()));
}

void PathCombination::add_term(const Path& p, const Scalar& c) {
  if (p.quiver() != quiver_) throw compute_error("path from a different quiver");
  if (c.field() != field_) throw compute_error("coefficient from a different field");
  if (c.is_zero()) return;
  auto it = terms_.find(p);
  if (it == terms_.end()) {
    terms_.emplace(p, c);
  } else {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

void PathCombination::check_same_quiver(const PathCombination& o) const {
  if (quiver_ != o.quiver_) throw compute_error("path combinations over different quivers");
}

PathCombination PathCombination::operator+(const PathCombination& o) const {
  check_same_quiver(o);
  PathCombination out = *this;
  for (const auto& [p, c] : o.terms_) out.add_term(p, c);
  return out;
}

PathCombination PathCombination::operator-(const PathCombination& o) const {
  check_same_quiver(o);
  PathCombination out = *this;
  for (const auto& [p, c] : o.terms_) out.add_term(p, -c);
  return out;
}

PathCombination PathCombination::scaled(const Scalar& c) const {
  PathCombination out(quiver_, field_);
  for (const auto& [p, a] : terms_) out.add_term(p, a * c);
  return out;
}

bool PathCombination::is_basic() const {
  if (terms_.empty()) return true;
  int s = terms_.begin()->first.source();
  int t = terms_.begin()->first.target();
  for (const auto& [p, c] : terms_)
    if (p.source() != s || p.target() != t) return false;
  return true;
}

int PathCombination::basic_source() const {
  if (terms_.empty() || !is_basic()) throw compute_error("element is not basic");
  return terms_.begin()->first.source();
}

int PathCombination::basic_target() const {
  if (terms_.empty() || !is_basic()) throw compute_error("element is not basic");
  return terms_.begin()->first.target();
}

int PathCombination::min_path_length() const {
  if (terms_.empty()) throw compute_error("zero element has no minimum length");
  return terms_.begin()->first.length();  // map is ordered by (length, ...)
}

bool PathCombination::operator==(const PathCombination& o) const {
  if (quiver_ != o.quiver_ || terms_.size() != o.terms_.size()) return false;
  auto a = terms_.begin();
  auto b = o.terms_.begin();
  for (; a != terms_.end(); ++a, ++b)
    if (!(a->first == b->first) || a->second != b->second) return false;
  return true;
}

std::string PathCombination::text() const {
  if (terms_.empty()) return "0";
  std::string s;
  bool first = true;
  // largest path first, matching the usual leading-term convention
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const Scalar& c = it->second;
    Scalar abs = c.is_negative() ? -c : c;
    if (first) {
      if (c.is_negative()) s += "-";
      first = false;
    } else {
      s += c.is_negative() ? " - " : " + ";
    }
    if (!abs.is_one()) s += abs.text() + "*";
    s += it->first.text();
  }
  return s;
}

PathCombination multiply(const PathCombination& x, const PathCombination& y) {
  if (x.quiver() != y.quiver()) throw compute_error("multiplying over different quivers");
  PathCombination out(x.quiver(), x.field());
  for (const auto& [p, a] : x.terms()) {
    for (const auto& [q, b] : y.terms()) {
      auto pq = compose(p, q);
      if (pq) out.add_term(*pq, a * b);
    }
  }
  return out;
}

std::vector<std::string> validate_presentation(const Presentation& pres) {
  std::vector<std::string> issues;
  for (size_t k = 0; k < pres.relations.size(); ++k) {
    const auto& rel = pres.relations[k];
    std::string tag = "relation " + std::to_string(k + 1);
    if (rel.quiver() != pres.quiver) {
      issues.push_back(tag + ": built over a different quiver");
      continue;
    }
    if (rel.is_zero()) {
      issues.push_back(tag + ": zero element");
      continue;
    }
    if (!rel.is_basic()) issues.push_back(tag + ": not basic (" + rel.text() + ")");
    if (rel.min_path_length() < 2)
      issues.push_back(tag + ": contains a path of length < 2 (" + rel.text() + ")");
  }
  return issues;
}

}  // namespace qbx
