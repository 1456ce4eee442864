#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "qbx/dsl.hpp"

namespace py = pybind11;
using namespace qbx;

namespace {

Field field_of(const std::string& name) { return Field::parse(name); }

struct PyAlgebra {
  std::shared_ptr<FDAlgebra> alg;
  int dim() const { return alg->dim(); }
  std::vector<std::string> basis_labels() const {
    std::vector<std::string> out;
    for (const auto& b : alg->basis()) out.push_back(b.label);
    return out;
  }
  std::vector<std::string> vertices() const { return alg->vertex_labels(); }
};

struct PyParsed {
  ParsedFile file;
  Field field;
};

PyParsed py_parse(const std::string& text, const std::string& field) {
  PyParsed p{parse(text, field_of(field)), field_of(field)};
  return p;
}

}  // namespace

PYBIND11_MODULE(qbx, m) {
  m.doc() = "quivers with relations of block extensions and Harada algebras";

  py::register_exception<parse_error>(m, "ParseError");
  py::register_exception<validation_error>(m, "ValidationError");
  py::register_exception<compute_error>(m, "ComputeError");

  py::class_<PyParsed>(m, "Parsed")
      .def_property_readonly("name", [](const PyParsed& p) { return p.file.name; })
      .def_property_readonly("num_vertices",
                             [](const PyParsed& p) {
                               return p.file.presentation.quiver->num_vertices();
                             })
      .def_property_readonly("num_arrows",
                             [](const PyParsed& p) {
                               return p.file.presentation.quiver->num_arrows();
                             })
      .def_property_readonly("num_relations",
                             [](const PyParsed& p) {
                               return p.file.presentation.relations.size();
                             })
      .def_property_readonly("block",
                             [](const PyParsed& p) -> py::object {
                               if (!p.file.block) return py::none();
                               return py::cast(p.file.block->n);
                             })
      .def_property_readonly("staircase",
                             [](const PyParsed& p) -> py::object {
                               if (!p.file.staircase) return py::none();
                               return py::cast(p.file.staircase->c);
                             })
      .def("canonical", [](const PyParsed& p) { return emit_canonical(p.file); })
      .def("json", [](const PyParsed& p) { return emit_json_presentation(p.file); })
      .def("dot", [](const PyParsed& p) {
        return emit_dot(*p.file.presentation.quiver, p.file.name);
      });

  py::class_<PyAlgebra>(m, "Algebra")
      .def_property_readonly("dim", &PyAlgebra::dim)
      .def_property_readonly("basis", &PyAlgebra::basis_labels)
      .def_property_readonly("vertices", &PyAlgebra::vertices);

  m.def("parse", &py_parse, py::arg("text"), py::arg("field") = "q",
        "parse presentation text (.qpr grammar)");

  m.def(
      "validate",
      [](const PyParsed& p) { return validate_presentation(p.file.presentation); },
      "diagnostics for a parsed presentation; empty means valid");

  m.def(
      "build_algebra",
      [](const PyParsed& p, int max_len) {
        auto alg = std::make_shared<FDAlgebra>(build_algebra(p.file.presentation, p.field, max_len));
        return PyAlgebra{alg};
      },
      py::arg("parsed"), py::arg("max_len") = 64);

  m.def(
      "extend",
      [](const PyParsed& p, const std::vector<int>& n) {
        BlockSpec spec{n};
        ParsedFile out;
        out.name = p.file.name + "_ext";
        out.presentation = block_presentation(p.file.presentation, spec);
        BlockQuiver bq = block_quiver(p.file.presentation, spec);
        return emit_json_presentation(out, &bq);
      },
      py::arg("parsed"), py::arg("n"),
      "JSON of the block-extension presentation for block sizes n");

  m.def(
      "qf_check",
      [](const PyParsed& p, int max_len) {
        FDAlgebra alg = build_algebra(p.file.presentation, p.field, max_len);
        QfResult qf = qf_check(alg);
        py::dict d;
        d["qf"] = qf.qf;
        if (qf.qf) {
          py::dict sigma;
          for (int i = 0; i < alg.num_vertices(); ++i)
            sigma[py::str(alg.vertex_labels()[i])] = alg.vertex_labels()[qf.perm.sigma[i]];
          d["sigma"] = sigma;
        } else {
          d["diagnostics"] = qf.diagnostics;
        }
        return d;
      },
      py::arg("parsed"), py::arg("max_len") = 64);

  m.def(
      "harada",
      [](const PyParsed& p, int max_len) {
        if (!p.file.block || !p.file.staircase)
          throw validation_error("harada needs extend(...) and staircase{...} clauses");
        HaradaResult res = harada_presentation(p.file.presentation, *p.file.block,
                                               *p.file.staircase, p.field, max_len);
        py::dict d;
        ParsedFile out;
        out.name = p.file.name + "_harada";
        out.presentation = res.presentation;
        d["canonical"] = emit_canonical(out);
        py::dict bp;
        for (int i = 0; i < p.file.presentation.quiver->num_vertices(); ++i) {
          py::dict row;
          row["l"] = res.bp.l[i];
          row["u"] = res.bp.u[i];
          bp[py::str(p.file.presentation.quiver->vertex_label(i))] = row;
        }
        d["breakpoints"] = bp;
        py::dict theta;
        for (int i = 0; i < p.file.presentation.quiver->num_vertices(); ++i)
          theta[py::str(p.file.presentation.quiver->vertex_label(i))] = res.theta[i].text();
        d["theta"] = theta;
        return d;
      },
      py::arg("parsed"), py::arg("max_len") = 64);

  m.def(
      "verify",
      [](const PyParsed& p, int max_len, unsigned seed) {
        if (!p.file.block) throw validation_error("verify needs an extend(...) clause");
        VerifyReport rep = verify_pipeline(p.file.presentation, *p.file.block, p.file.staircase,
                                           p.field, max_len, seed);
        py::dict d;
        d["ok"] = rep.ok();
        py::dict dims;
        for (const auto& [k, v] : rep.dims) dims[py::str(k)] = v;
        d["dims"] = dims;
        py::list legs;
        for (const auto& l : rep.legs) {
          py::dict jl;
          jl["name"] = l.name;
          jl["status"] = l.status;
          jl["detail"] = l.detail;
          legs.append(jl);
        }
        d["legs"] = legs;
        d["json"] = emit_json_report(rep, p.field);
        return d;
      },
      py::arg("parsed"), py::arg("max_len") = 64, py::arg("seed") = 0);
}
