#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"
#include "qbx/dsl.hpp"

namespace {

using nlohmann::ordered_json;

struct Options {
  std::string file;
  std::string field = "q";
  int max_len = 64;
  std::string format = "text";
  std::string out;
  unsigned seed = 0;
  std::string n_override;
};

void add_common(CLI::App* cmd, Options& opt) {
  cmd->add_option("file", opt.file, "input .qpr file")->required();
  cmd->add_option("--field", opt.field, "ground field: q or gf:<p> (default q)");
  cmd->add_option("--max-len", opt.max_len, "length cap for the quotient construction");
  cmd->add_option("--format", opt.format, "output format: text, json or dot")
      ->check(CLI::IsMember({"text", "json", "dot"}));
  cmd->add_option("--out", opt.out, "write output to a file instead of stdout");
  cmd->add_option("--seed", opt.seed, "seed for the module-isomorphism search");
}

void write_out(const Options& opt, const std::string& text) {
  if (opt.out.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream f(opt.out);
  if (!f) throw qbx::compute_error("cannot write to '" + opt.out + "'");
  f << text;
}

qbx::BlockSpec resolve_spec(const qbx::ParsedFile& file, const Options& opt) {
  if (!opt.n_override.empty()) {
    qbx::BlockSpec spec;
    std::string cur;
    try {
      for (char c : opt.n_override + ",") {
        if (c == ',') {
          if (!cur.empty()) spec.n.push_back(std::stoi(cur));
          cur.clear();
        } else {
          cur += c;
        }
      }
    } catch (...) {
      throw qbx::validation_error("bad --n value '" + opt.n_override + "' (expected e.g. 3,2)");
    }
    return spec;
  }
  if (file.block) return *file.block;
  throw qbx::validation_error("no block sizes: add an extend(...) clause or pass --n");
}

std::string quiver_text(const qbx::Quiver& q, const qbx::BlockQuiver* bq) {
  std::string out;
  out += "vertices (" + std::to_string(q.num_vertices()) + "):";
  for (const auto& v : q.vertices()) out += " " + v;
  out += "\n";
  out += "arrows (" + std::to_string(q.num_arrows()) + "):\n";
  for (const auto& a : q.arrows()) {
    out += "  " + a.label;
    std::string display = qbx::display_arrow_name(a.label, bq);
    if (display != a.label) out += " [" + display + "]";
    out += ": " + q.vertex_label(a.src) + " -> " + q.vertex_label(a.tgt) + "\n";
  }
  return out;
}

int run_check(const Options& opt) {
  qbx::Field f = qbx::Field::parse(opt.field);
  qbx::ParsedFile file = qbx::parse_file(opt.file, f);
  auto issues = qbx::validate_presentation(file.presentation);
  if (!issues.empty()) {
    for (const auto& s : issues) std::cerr << "error: " << s << "\n";
    return 1;
  }
  qbx::FDAlgebra alg = qbx::build_algebra(file.presentation, f, opt.max_len);
  if (opt.format == "dot") {
    write_out(opt, qbx::emit_dot(*file.presentation.quiver, file.name));
    return 0;
  }
  if (opt.format == "json") {
    ordered_json j = ordered_json::parse(qbx::emit_json_presentation(file));
    j["field"] = f.name();
    j["dimension"] = alg.dim();
    j["basis"] = ordered_json::array();
    for (const auto& b : alg.basis()) {
      ordered_json jb;
      jb["label"] = b.label;
      jb["src"] = alg.vertex_labels()[b.src];
      jb["tgt"] = alg.vertex_labels()[b.tgt];
      jb["len"] = b.path_length;
      j["basis"].push_back(jb);
    }
    write_out(opt, j.dump(2) + "\n");
    return 0;
  }
  std::string out = "input: " + opt.file + "\nfield: " + f.name() + "\nname: " + file.name + "\n";
  out += quiver_text(*file.presentation.quiver, nullptr);
  out += "relations (" + std::to_string(file.presentation.relations.size()) + "):\n";
  for (const auto& r : file.presentation.relations) out += "  " + r.text() + "\n";
  out += "dimension: " + std::to_string(alg.dim()) + "\n";
  out += "basis (" + std::to_string(alg.dim()) + "):\n";
  for (const auto& b : alg.basis())
    out += "  " + b.label + "  [" + alg.vertex_labels()[b.src] + " -> " +
           alg.vertex_labels()[b.tgt] + ", len " + std::to_string(b.path_length) + "]\n";
  write_out(opt, out);
  return 0;
}

int run_extend(const Options& opt) {
  qbx::Field f = qbx::Field::parse(opt.field);
  qbx::ParsedFile file = qbx::parse_file(opt.file, f);
  auto issues = qbx::validate_presentation(file.presentation);
  if (!issues.empty()) {
    for (const auto& s : issues) std::cerr << "error: " << s << "\n";
    return 1;
  }
  qbx::BlockSpec spec = resolve_spec(file, opt);
  qbx::BlockQuiver bq = qbx::block_quiver(file.presentation, spec);
  qbx::Presentation bpres = qbx::block_presentation(file.presentation, spec);

  if (opt.format == "dot") {
    write_out(opt, qbx::emit_dot(*bq.quiver, file.name + "_ext", &bq));
    return 0;
  }
  qbx::ParsedFile efile;
  efile.name = file.name + "_ext";
  efile.presentation = bpres;
  if (opt.format == "json") {
    write_out(opt, qbx::emit_json_presentation(efile, &bq));
    return 0;
  }
  std::string out = "block extension of " + file.name + " by n = (";
  for (size_t i = 0; i < spec.n.size(); ++i)
    out += (i ? ", " : "") + std::to_string(spec.n[i]);
  out += ")\n";
  out += quiver_text(*bq.quiver, &bq);
  out += "relations (" + std::to_string(bpres.relations.size()) + "):\n";
  for (const auto& r : bpres.relations) out += "  " + r.text() + ";\n";
  out += "arrow map:\n";
  for (int a = 0; a < bq.source->num_arrows(); ++a)
    out += "  " + bq.source->arrow(a).label + " -> " + bq.quiver->arrow(bq.beta(a)).label + "\n";
  write_out(opt, out);
  return 0;
}

int run_qf(const Options& opt) {
  qbx::Field f = qbx::Field::parse(opt.field);
  qbx::ParsedFile file = qbx::parse_file(opt.file, f);
  auto issues = qbx::validate_presentation(file.presentation);
  if (!issues.empty()) {
    for (const auto& s : issues) std::cerr << "error: " << s << "\n";
    return 1;
  }
  qbx::FDAlgebra alg = qbx::build_algebra(file.presentation, f, opt.max_len);
  qbx::QfResult qf = qbx::qf_check(alg);
  if (opt.format == "json") {
    ordered_json j;
    j["format_version"] = 1;
    j["field"] = f.name();
    j["quasi_frobenius"] = qf.qf;
    if (qf.qf) {
      ordered_json sigma;
      for (int i = 0; i < alg.num_vertices(); ++i)
        sigma[alg.vertex_labels()[i]] = alg.vertex_labels()[qf.perm.sigma[i]];
      j["sigma"] = sigma;
      ordered_json wit;
      for (int i = 0; i < alg.num_vertices(); ++i)
        wit[alg.vertex_labels()[i]] = alg.element_text(qf.perm.right_socle[i]);
      j["socle_witness"] = wit;
    } else {
      j["diagnostics"] = qf.diagnostics;
    }
    write_out(opt, j.dump(2) + "\n");
    return 0;
  }
  std::string out = "quasi-Frobenius: " + std::string(qf.qf ? "yes" : "no") + "\n";
  if (qf.qf) {
    out += "nakayama permutation:\n";
    for (int i = 0; i < alg.num_vertices(); ++i)
      out += "  " + alg.vertex_labels()[i] + " -> " + alg.vertex_labels()[qf.perm.sigma[i]] +
             "   (socle witness: " + alg.element_text(qf.perm.right_socle[i]) + ")\n";
  } else {
    for (const auto& d : qf.diagnostics) out += "  " + d + "\n";
  }
  write_out(opt, out);
  return 0;
}

int run_harada(const Options& opt) {
  qbx::Field f = qbx::Field::parse(opt.field);
  qbx::ParsedFile file = qbx::parse_file(opt.file, f);
  auto issues = qbx::validate_presentation(file.presentation);
  if (!issues.empty()) {
    for (const auto& s : issues) std::cerr << "error: " << s << "\n";
    return 1;
  }
  qbx::BlockSpec spec = resolve_spec(file, opt);
  if (!file.staircase) throw qbx::validation_error("harada needs a staircase { ... } clause");
  qbx::HaradaResult res =
      qbx::harada_presentation(file.presentation, spec, *file.staircase, f, opt.max_len);

  if (opt.format == "dot") {
    write_out(opt, qbx::emit_dot(*res.bq.quiver, file.name + "_harada", &res.bq));
    return 0;
  }
  const qbx::Quiver& q = *file.presentation.quiver;
  if (opt.format == "json") {
    qbx::ParsedFile hfile;
    hfile.name = file.name + "_harada";
    hfile.presentation = res.presentation;
    ordered_json j = ordered_json::parse(qbx::emit_json_presentation(hfile, &res.bq));
    ordered_json sigma, theta, bp;
    for (int i = 0; i < q.num_vertices(); ++i) {
      sigma[q.vertex_label(i)] = q.vertex_label(res.perm.sigma[i]);
      theta[q.vertex_label(i)] = res.theta[i].text();
      ordered_json row;
      row["l"] = res.bp.l[i];
      row["u"] = res.bp.u[i];
      bp[q.vertex_label(i)] = row;
    }
    j["sigma"] = sigma;
    j["theta"] = theta;
    j["breakpoints"] = bp;
    write_out(opt, j.dump(2) + "\n");
    return 0;
  }
  std::string out;
  for (int i = 0; i < q.num_vertices(); ++i) {
    out += "# sigma(" + q.vertex_label(i) + ") = " + q.vertex_label(res.perm.sigma[i]) +
           ", theta = " + res.theta[i].text() + ", l = (";
    for (size_t k = 0; k < res.bp.l[i].size(); ++k)
      out += (k ? ", " : "") + std::to_string(res.bp.l[i][k]);
    out += "), u = " + std::to_string(res.bp.u[i]) + "\n";
  }
  qbx::ParsedFile hfile;
  hfile.name = file.name + "_harada";
  hfile.presentation = res.presentation;
  out += qbx::emit_canonical(hfile);
  write_out(opt, out);
  return 0;
}

int run_verify(const Options& opt) {
  qbx::Field f = qbx::Field::parse(opt.field);
  qbx::ParsedFile file = qbx::parse_file(opt.file, f);
  auto issues = qbx::validate_presentation(file.presentation);
  if (!issues.empty()) {
    for (const auto& s : issues) std::cerr << "error: " << s << "\n";
    return 1;
  }
  qbx::BlockSpec spec = resolve_spec(file, opt);
  qbx::VerifyReport rep =
      qbx::verify_pipeline(file.presentation, spec, file.staircase, f, opt.max_len, opt.seed);
  if (opt.format == "json") {
    write_out(opt, qbx::emit_json_report(rep, f));
  } else {
    std::string out = "verify: " + opt.file + "\nfield: " + f.name() + "\n";
    for (const auto& [k, v] : rep.dims) out += k + " = " + std::to_string(v) + "\n";
    for (const auto& l : rep.legs) {
      std::string tag = l.status == "pass" ? "PASS" : l.status == "skip" ? "SKIP" : "FAIL";
      out += tag + " " + l.name;
      if (!l.detail.empty()) out += "  (" + l.detail + ")";
      out += "\n";
    }
    out += std::string("verdict: ") + (rep.ok() ? "ok" : "mismatch") + "\n";
    write_out(opt, out);
  }
  return rep.ok() ? 0 : 3;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"quivers with relations of block extensions and Harada algebras"};
  app.require_subcommand(1);
  Options opt;

  CLI::App* check = app.add_subcommand("check", "parse, validate and build the algebra");
  add_common(check, opt);
  CLI::App* extend = app.add_subcommand("extend", "quiver with relations of the block extension");
  add_common(extend, opt);
  extend->add_option("--n", opt.n_override, "block sizes, e.g. 3,2 (overrides the file)");
  CLI::App* qf = app.add_subcommand("qf", "quasi-Frobenius check with Nakayama permutation");
  add_common(qf, opt);
  CLI::App* harada = app.add_subcommand("harada", "quiver with relations of the staircase factor");
  add_common(harada, opt);
  harada->add_option("--n", opt.n_override, "block sizes, e.g. 3,2 (overrides the file)");
  CLI::App* verify = app.add_subcommand("verify", "matrix-model oracle run over every output");
  add_common(verify, opt);
  verify->add_option("--n", opt.n_override, "block sizes, e.g. 3,2 (overrides the file)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e);
  }

  try {
    if (check->parsed()) return run_check(opt);
    if (extend->parsed()) return run_extend(opt);
    if (qf->parsed()) return run_qf(opt);
    if (harada->parsed()) return run_harada(opt);
    if (verify->parsed()) return run_verify(opt);
  } catch (const qbx::parse_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const qbx::validation_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const qbx::compute_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
