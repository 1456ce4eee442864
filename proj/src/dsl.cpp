#include "qbx/dsl.hpp"

#include <cctype>
#include <fstream>
#include <sstream>

#include "json.hpp"
#include "qbx/errors.hpp"

namespace qbx {

namespace {

using Json = nlohmann::ordered_json;

struct Token {
  enum Kind { Word, Int, Punct, End } kind = End;
  std::string text;
  int line = 0, col = 0;
};

std::vector<Token> lex(const std::string& src) {
  std::vector<Token> out;
  int line = 1, col = 1;
  size_t i = 0;
  auto push = [&](Token::Kind k, std::string t, int l, int c) {
    out.push_back(Token{k, std::move(t), l, c});
  };
  while (i < src.size()) {
    char ch = src[i];
    if (ch == '\n') {
      ++line;
      col = 1;
      ++i;
      continue;
    }
    if (ch == ' ' || ch == '\t' || ch == '\r') {
      ++col;
      ++i;
      continue;
    }
    if (ch == '#') {
      while (i < src.size() && src[i] != '\n') ++i;
      continue;
    }
    int tl = line, tc = col;
    if (std::isalnum(static_cast<unsigned char>(ch)) || ch == '_') {
      std::string w;
      bool digits_only = true;
      while (i < src.size() &&
             (std::isalnum(static_cast<unsigned char>(src[i])) || src[i] == '_')) {
        if (!std::isdigit(static_cast<unsigned char>(src[i]))) digits_only = false;
        w += src[i];
        ++i;
        ++col;
      }
      push(digits_only ? Token::Int : Token::Word, std::move(w), tl, tc);
      continue;
    }
    if (ch == '-' && i + 1 < src.size() && src[i + 1] == '>') {
      push(Token::Punct, "->", tl, tc);
      i += 2;
      col += 2;
      continue;
    }
    static const std::string puncts = "{}():;,*+-/";
    if (puncts.find(ch) != std::string::npos) {
      push(Token::Punct, std::string(1, ch), tl, tc);
      ++i;
      ++col;
      continue;
    }
    throw parse_error(std::string("unexpected character '") + ch + "'", tl, tc);
  }
  push(Token::End, "", line, col);
  return out;
}

class Parser {
 public:
  Parser(const std::string& src, const Field& f) : toks_(lex(src)), field_(f) {}

  ParsedFile run() {
    ParsedFile file;
    expect_word("quiver");
    file.name = expect_name("quiver name");
    expect_punct("{");
    expect_word("vertices");
    expect_punct(":");
    std::vector<std::string> vertices;
    vertices.push_back(expect_name("vertex label"));
    while (accept_punct(",")) vertices.push_back(expect_name("vertex label"));
    expect_punct(";");

    std::vector<Arrow> arrows;
    std::map<std::string, int> vmap;
    for (int v = 0; v < static_cast<int>(vertices.size()); ++v) {
      if (!vmap.emplace(vertices[v], v).second)
        throw parse_error("duplicate vertex label '" + vertices[v] + "'", cur().line, cur().col);
    }
    if (at_section("arrows")) {
      expect_word("arrows");
      expect_punct(":");
      while (!at_section("relations") && !at_punct("}")) {
        Token lab = cur();
        if (lab.kind != Token::Word)
          throw parse_error("expected an arrow label (arrow labels cannot be numbers)", lab.line,
                            lab.col);
        advance();
        expect_punct(":");
        std::string s = expect_name("source vertex");
        expect_punct("->");
        std::string t = expect_name("target vertex");
        expect_punct(";");
        auto si = vmap.find(s), ti = vmap.find(t);
        if (si == vmap.end()) throw parse_error("unknown vertex '" + s + "'", lab.line, lab.col);
        if (ti == vmap.end()) throw parse_error("unknown vertex '" + t + "'", lab.line, lab.col);
        arrows.push_back(Arrow{lab.text, si->second, ti->second});
      }
    }
    QuiverPtr quiver;
    try {
      quiver = make_quiver(vertices, arrows);
    } catch (const validation_error& e) {
      throw parse_error(e.what(), cur().line, cur().col);
    }
    file.presentation.quiver = quiver;

    if (at_section("relations")) {
      expect_word("relations");
      expect_punct(":");
      file.presentation.relations.push_back(parse_relation(quiver));
      while (accept_punct(";")) {
        if (at_punct("}")) break;
        file.presentation.relations.push_back(parse_relation(quiver));
      }
    }
    expect_punct("}");

    if (at_word("extend")) {
      advance();
      expect_punct("(");
      BlockSpec spec;
      spec.n.push_back(expect_int("block size"));
      while (accept_punct(",")) spec.n.push_back(expect_int("block size"));
      expect_punct(")");
      accept_punct(";");
      file.block = std::move(spec);
    }
    if (at_word("staircase")) {
      advance();
      expect_punct("{");
      std::map<std::string, std::vector<int>> rows;
      while (!at_punct("}")) {
        Token key = cur();
        std::string label = expect_name("vertex label");
        if (vmap.find(label) == vmap.end())
          throw parse_error("staircase row for unknown vertex '" + label + "'", key.line, key.col);
        if (rows.count(label))
          throw parse_error("duplicate staircase row for vertex '" + label + "'", key.line,
                            key.col);
        expect_punct(":");
        std::vector<int> row;
        row.push_back(expect_int("staircase entry"));
        while (accept_punct(",")) row.push_back(expect_int("staircase entry"));
        expect_punct(";");
        rows.emplace(label, std::move(row));
      }
      expect_punct("}");
      StaircaseSpec stair;
      for (const auto& v : vertices) {
        auto it = rows.find(v);
        if (it == rows.end())
          throw parse_error("staircase is missing a row for vertex '" + v + "'", cur().line,
                            cur().col);
        stair.c.push_back(it->second);
      }
      file.staircase = std::move(stair);
    }
    if (cur().kind != Token::End)
      throw parse_error("unexpected trailing input '" + cur().text + "'", cur().line, cur().col);
    return file;
  }

 private:
  std::vector<Token> toks_;
  size_t pos_ = 0;
  Field field_;

  const Token& cur() const { return toks_[pos_]; }
  const Token& peek(int k = 1) const {
    return toks_[std::min(pos_ + k, toks_.size() - 1)];
  }
  void advance() {
    if (pos_ + 1 < toks_.size()) ++pos_;
  }
  bool at_punct(const std::string& p) const {
    return cur().kind == Token::Punct && cur().text == p;
  }
  bool at_word(const std::string& w) const {
    return cur().kind == Token::Word && cur().text == w;
  }
  bool at_section(const std::string& w) const {
    return at_word(w) && peek().kind == Token::Punct && peek().text == ":";
  }
  bool accept_punct(const std::string& p) {
    if (!at_punct(p)) return false;
    advance();
    return true;
  }
  void expect_punct(const std::string& p) {
    if (!at_punct(p))
      throw parse_error("expected '" + p + "', found '" + cur().text + "'", cur().line, cur().col);
    advance();
  }
  void expect_word(const std::string& w) {
    if (!at_word(w))
      throw parse_error("expected '" + w + "', found '" + cur().text + "'", cur().line, cur().col);
    advance();
  }
  std::string expect_name(const std::string& what) {
    if (cur().kind != Token::Word && cur().kind != Token::Int)
      throw parse_error("expected a " + what + ", found '" + cur().text + "'", cur().line,
                        cur().col);
    std::string s = cur().text;
    advance();
    return s;
  }
  int expect_int(const std::string& what) {
    if (cur().kind != Token::Int)
      throw parse_error("expected an integer " + what + ", found '" + cur().text + "'",
                        cur().line, cur().col);
    int v = 0;
    try {
      v = std::stoi(cur().text);
    } catch (...) {
      throw parse_error("integer out of range", cur().line, cur().col);
    }
    advance();
    return v;
  }

  Scalar parse_coeff() {
    Token t = cur();
    std::string num = t.text;
    advance();
    if (accept_punct("/")) {
      std::string den = expect_int_text();
      return Scalar::parse(num + "/" + den, field_);
    }
    if (at_word("mod")) {
      advance();
      std::string pm = expect_int_text();
      if (!field_.is_prime())
        throw parse_error("'mod' literal outside a GF(p) session", t.line, t.col);
      try {
        return Scalar::parse(num + " mod " + pm, field_);
      } catch (const parse_error& e) {
        throw parse_error(e.what(), t.line, t.col);
      }
    }
    return Scalar::parse(num, field_);
  }

  std::string expect_int_text() {
    if (cur().kind != Token::Int)
      throw parse_error("expected an integer, found '" + cur().text + "'", cur().line, cur().col);
    std::string s = cur().text;
    advance();
    return s;
  }

  // (coeff "*")? IDENT ("*" IDENT)*; zero when the chain is non-composable
  void parse_term(const QuiverPtr& q, PathCombination& acc, const Scalar& sign) {
    Scalar coeff = Scalar::one(field_);
    if (cur().kind == Token::Int) {
      coeff = parse_coeff();
      expect_punct("*");
    }
    std::vector<int> arrows;
    bool composable = true;
    while (true) {
      Token t = cur();
      if (t.kind != Token::Word)
        throw parse_error("expected an arrow name, found '" + t.text + "'", t.line, t.col);
      int a = q->arrow_index(t.text);
      if (a < 0) throw parse_error("unknown arrow '" + t.text + "'", t.line, t.col);
      if (!arrows.empty() && q->arrow(arrows.back()).tgt != q->arrow(a).src) composable = false;
      arrows.push_back(a);
      advance();
      if (!accept_punct("*")) break;
      if (cur().kind == Token::Int)
        throw parse_error("coefficient must come first in a term", cur().line, cur().col);
    }
    if (!composable) return;  // the product is zero in KQ
    acc.add_term(Path::of_arrows(q, std::move(arrows)), coeff * sign);
  }

  PathCombination parse_relation(const QuiverPtr& q) {
    PathCombination acc(q, field_);
    Scalar sign = Scalar::one(field_);
    if (accept_punct("-"))
      sign = -sign;
    else
      accept_punct("+");
    parse_term(q, acc, sign);
    while (at_punct("+") || at_punct("-")) {
      Scalar s = at_punct("-") ? -Scalar::one(field_) : Scalar::one(field_);
      advance();
      parse_term(q, acc, s);
    }
    return acc;
  }
};

}  // namespace

ParsedFile parse(const std::string& text, const Field& f) { return Parser(text, f).run(); }

ParsedFile parse_file(const std::string& path, const Field& f) {
  std::ifstream in(path);
  if (!in) throw parse_error("cannot open '" + path + "'");
  std::stringstream ss;
  ss << in.rdbuf();
  return parse(ss.str(), f);
}

std::string emit_canonical(const ParsedFile& file) {
  const Quiver& q = *file.presentation.quiver;
  std::string out = "# format_version 1\n";
  out += "quiver " + file.name + " {\n  vertices: ";
  for (int v = 0; v < q.num_vertices(); ++v) {
    if (v) out += ", ";
    out += q.vertex_label(v);
  }
  out += ";\n";
  if (q.num_arrows() > 0) {
    out += "  arrows:\n";
    for (const auto& a : q.arrows())
      out += "    " + a.label + ": " + q.vertex_label(a.src) + " -> " + q.vertex_label(a.tgt) +
             ";\n";
  }
  if (!file.presentation.relations.empty()) {
    out += "  relations:\n";
    for (const auto& r : file.presentation.relations) out += "    " + r.text() + ";\n";
  }
  out += "}\n";
  if (file.block) {
    out += "extend (";
    for (size_t i = 0; i < file.block->n.size(); ++i) {
      if (i) out += ", ";
      out += std::to_string(file.block->n[i]);
    }
    out += ")\n";
  }
  if (file.staircase) {
    out += "staircase {\n";
    for (int i = 0; i < q.num_vertices(); ++i) {
      out += "  " + q.vertex_label(i) + ": ";
      const auto& row = file.staircase->c[i];
      for (size_t j = 0; j < row.size(); ++j) {
        if (j) out += ", ";
        out += std::to_string(row[j]);
      }
      out += ";\n";
    }
    out += "}\n";
  }
  return out;
}

namespace {

Json quiver_to_json(const Quiver& q, const BlockQuiver* bq) {
  Json j;
  j["vertices"] = Json::array();
  for (const auto& v : q.vertices()) j["vertices"].push_back(v);
  j["arrows"] = Json::array();
  for (int a = 0; a < q.num_arrows(); ++a) {
    const Arrow& ar = q.arrow(a);
    Json ja;
    ja["label"] = ar.label;
    ja["src"] = q.vertex_label(ar.src);
    ja["tgt"] = q.vertex_label(ar.tgt);
    std::string kind = "alpha";
    if (bq) {
      kind = "beta";
      for (int i = 0; i < bq->spec.rows(); ++i)
        for (int jj = 1; jj < bq->spec.n[i]; ++jj)
          if (bq->delta(i, jj) == a) kind = "delta";
      if (kind == "beta") {
        for (int s = 0; s < bq->source->num_arrows(); ++s)
          if (bq->beta(s) == a) ja["alpha"] = bq->source->arrow(s).label;
      }
    }
    ja["kind"] = kind;
    j["arrows"].push_back(ja);
  }
  return j;
}

Json relations_to_json(const std::vector<PathCombination>& rels) {
  Json out = Json::array();
  for (const auto& r : rels) {
    Json jr = Json::array();
    for (auto it = r.terms().rbegin(); it != r.terms().rend(); ++it) {
      Json term;
      term["coeff"] = it->second.text();
      term["path"] = Json::array();
      for (int a : it->first.arrows())
        term["path"].push_back(it->first.quiver()->arrow(a).label);
      jr.push_back(term);
    }
    out.push_back(jr);
  }
  return out;
}

}  // namespace

std::string emit_json_presentation(const ParsedFile& file, const BlockQuiver* bq) {
  Json j;
  j["format_version"] = 1;
  j["name"] = file.name;
  Json q = quiver_to_json(*file.presentation.quiver, bq);
  j["vertices"] = q["vertices"];
  j["arrows"] = q["arrows"];
  j["relations"] = relations_to_json(file.presentation.relations);
  if (file.block) j["extend"] = file.block->n;
  if (file.staircase) {
    Json st;
    for (int i = 0; i < file.presentation.quiver->num_vertices(); ++i)
      st[file.presentation.quiver->vertex_label(i)] = file.staircase->c[i];
    j["staircase"] = st;
  }
  return j.dump(2) + "\n";
}

std::string emit_json_report(const VerifyReport& rep, const Field& f) {
  Json j;
  j["format_version"] = 1;
  j["field"] = f.name();
  Json dims;
  for (const auto& [k, v] : rep.dims) dims[k] = v;
  j["dims"] = dims;
  j["legs"] = Json::array();
  for (const auto& l : rep.legs) {
    Json jl;
    jl["name"] = l.name;
    jl["status"] = l.status;
    if (!l.detail.empty()) jl["detail"] = l.detail;
    j["legs"].push_back(jl);
  }
  j["ok"] = rep.ok();
  return j.dump(2) + "\n";
}

std::string emit_dot(const Quiver& q, const std::string& name, const BlockQuiver* bq) {
  std::vector<std::pair<std::string, std::string>> nodes;  // id, display
  for (int v = 0; v < q.num_vertices(); ++v) {
    std::string display = q.vertex_label(v);
    if (bq) {
      for (int i = 0; i < bq->spec.rows(); ++i)
        for (int jj = 1; jj <= bq->spec.n[i]; ++jj)
          if (bq->vertex(i, jj) == v)
            display = "(" + bq->source->vertex_label(i) + "," + std::to_string(jj) + ")";
    }
    nodes.emplace_back(q.vertex_label(v), display);
  }
  std::sort(nodes.begin(), nodes.end());
  std::vector<std::tuple<std::string, std::string, std::string>> edges;  // label, src, tgt
  for (const auto& a : q.arrows())
    edges.emplace_back(a.label, q.vertex_label(a.src), q.vertex_label(a.tgt));
  std::sort(edges.begin(), edges.end());

  std::string out = "// format_version 1\ndigraph " + name + " {\n";
  for (const auto& [id, display] : nodes)
    out += "  \"" + id + "\" [label=\"" + display + "\"];\n";
  for (const auto& [label, s, t] : edges)
    out += "  \"" + s + "\" -> \"" + t + "\" [label=\"" + label + "\"];\n";
  out += "}\n";
  return out;
}

std::string display_arrow_name(const std::string& label, const BlockQuiver* bq) {
  if (!bq) return label;
  if (label.rfind("d_", 0) == 0) return "δ" + label.substr(1);
  if (label.rfind("b_", 0) == 0) return "β" + label.substr(1);
  return label;
}

}  // namespace qbx
