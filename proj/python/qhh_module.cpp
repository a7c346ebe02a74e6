// Python bindings for the core operations: parsing/serializing presentations,
// cohomology dimensions, Lie profile of HH^1, gluing/splitting, the identity
// verifier, and the bar-complex oracle.
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "qhh/bar.hpp"
#include "qhh/dsl.hpp"
#include "qhh/errors.hpp"
#include "qhh/glue.hpp"
#include "qhh/lie.hpp"
#include "qhh/paircomplex.hpp"
#include "qhh/rsz.hpp"
#include "qhh/verify.hpp"

namespace py = pybind11;
using namespace qhh;

namespace {

FieldSpec field_from_str(const std::string& s) {
  if (s == "Q" || s.empty()) return FieldSpec{0};
  if (s.size() > 1 && (s[0] == 'F' || s[0] == 'f')) {
    std::uint64_t p = std::stoull(s.substr(1));
    if (!is_prime_u64(p))
      throw SemanticError("field order " + std::to_string(p) + " is not prime");
    return FieldSpec{p};
  }
  throw SemanticError("bad field '" + s + "' (use Q or F<p>)");
}

// A presentation together with its coefficient field, the unit the bindings
// pass around.
struct PyAlgebra {
  Presentation pres;
  FieldSpec field;
};

PyAlgebra parse_algebra(const std::string& text, const std::string& field) {
  ParsedInput in = parse_dsl(text);
  FieldSpec f = in.field.value_or(FieldSpec{0});
  if (!field.empty()) f = field_from_str(field);
  return PyAlgebra{std::move(in.pres), f};
}

py::dict hh_dict(const PyAlgebra& alg, int upto, bool use_oracle,
                 long long budget) {
  py::dict out;
  with_field(alg.field, [&](const auto& K) {
    CmonComplex c = build_cmon(alg.pres);
    auto an = analyze_cmon(K, c);
    py::dict dims;
    dims[py::int_(0)] = an.hh0_dim;
    dims[py::int_(1)] = an.hh1_dim;
    if (upto >= 2) {
      std::vector<int> hd;
      if (use_oracle) {
        BarComplex bar(alg.pres, upto, budget);
        hd = bar_hh_dims(K, bar, upto);
      } else if (alg.pres.is_rsz()) {
        RszComplex rc(alg.pres, upto, budget);
        hd = rsz_hh_dims(K, rc, upto);
      } else {
        throw SemanticError(
            "degrees >= 2 need oracle=True for a non radical-square-zero "
            "algebra");
      }
      for (int n = 2; n <= upto; ++n) dims[py::int_(n)] = hd[n];
    }
    out["dims"] = dims;

    BracketCache bc(c);
    auto prof = lie_profile(K, hh1_lie(K, c, bc, an));
    out["hh1_profile"] = profile_str(prof);
    py::list reps;
    for (const auto& r : an.hh1_reps.basis)
      reps.append(render_vec(K, c, true, r));
    out["hh1_representatives"] = reps;
  });
  return out;
}

py::dict glue_dict(const PyAlgebra& alg, const std::string& v1,
                   const std::string& v2) {
  auto e1 = alg.pres.quiver().vertex_index(v1);
  auto en = alg.pres.quiver().vertex_index(v2);
  if (!e1 || !en) throw SemanticError("unknown vertex in glue()");
  Gluing g = glue(alg.pres, *e1, *en);
  auto shape = gluing_shape(alg.pres, g);
  CmonComplex cA = build_cmon(alg.pres), cB = build_cmon(g.B);
  auto spaths = special_paths(alg.pres, g, cA, cB);
  auto spairs = special_pairs(alg.pres, g, cB);
  int kspp = with_field(alg.field, [&](const auto& K) {
    return z_spp(K, cB, spairs, analyze_cmon(K, cB).ker_d1).dim();
  });

  py::dict out;
  out["presentation"] = serialize_dsl(g.B, alg.field);
  out["dim_A"] = alg.pres.dim();
  out["dim_B"] = g.B.dim();
  out["same_block"] = shape.same_block;
  out["source_sink"] = shape.source_sink;
  out["sp"] = spaths.sp();
  out["nsp"] = spaths.nsp();
  out["spp_count"] = spairs.count();
  out["kspp"] = kspp;
  auto assume = check_assumption(alg.pres, *e1, *en, alg.field);
  out["assumption_ok"] = assume.ok;
  return out;
}

py::dict split_dict(const PyAlgebra& alg, const std::string& at,
                    const std::vector<std::string>& sources_to_second,
                    const std::vector<std::string>& targets_to_second) {
  auto f = alg.pres.quiver().vertex_index(at);
  if (!f) throw SemanticError("unknown vertex in split()");
  auto to_set = [&](const std::vector<std::string>& names) {
    std::set<int> s;
    for (const auto& n : names) {
      auto a = alg.pres.quiver().arrow_index(n);
      if (!a) throw SemanticError("unknown arrow '" + n + "' in split()");
      s.insert(*a);
    }
    return s;
  };
  auto res = split_vertex(alg.pres, *f, to_set(sources_to_second),
                          to_set(targets_to_second));
  py::dict out;
  out["presentation"] = serialize_dsl(res.A, alg.field);
  out["first"] = res.A.quiver().vertex_name(res.e1);
  out["second"] = res.A.quiver().vertex_name(res.en);
  out["dim_A"] = res.A.dim();
  return out;
}

py::dict verify_dict(const PyAlgebra& alg, const std::string& v1,
                     const std::string& v2,
                     const std::vector<std::string>& suites) {
  auto e1 = alg.pres.quiver().vertex_index(v1);
  auto en = alg.pres.quiver().vertex_index(v2);
  if (!e1 || !en) throw SemanticError("unknown vertex in verify()");
  VerifyOptions vo;
  vo.field = alg.field;
  for (const auto& s : suites)
    if (s != "all") vo.suites.insert(s);
  VerifyResult vr = verify_gluing(alg.pres, *e1, *en, vo);
  py::dict out;
  out["advisory"] = vr.advisory;
  out["all_pass"] = vr.all_pass();
  py::list checks;
  for (const auto& c : vr.checks) {
    py::dict cj;
    cj["name"] = c.name;
    cj["pass"] = c.pass;
    cj["detail"] = c.detail;
    checks.append(cj);
  }
  out["checks"] = checks;
  return out;
}

std::vector<int> oracle_dims(const PyAlgebra& alg, int upto,
                             long long budget) {
  return with_field(alg.field, [&](const auto& K) {
    BarComplex bar(alg.pres, upto, budget);
    return bar_hh_dims(K, bar, upto);
  });
}

}  // namespace

PYBIND11_MODULE(_qhh, m) {
  m.doc() =
      "exact Hochschild cohomology of monomial bound quiver algebras "
      "(core bindings)";

  py::register_exception<ParseError>(m, "QhhParseError");
  py::register_exception<SemanticError>(m, "QhhSemanticError");
  py::register_exception<IdentityError>(m, "QhhIdentityError");
  py::register_exception<BudgetError>(m, "QhhBudgetError");

  py::class_<PyAlgebra>(m, "Algebra")
      .def_property_readonly(
          "dim", [](const PyAlgebra& a) { return a.pres.dim(); })
      .def_property_readonly(
          "n_vertices",
          [](const PyAlgebra& a) { return a.pres.quiver().n_vertices(); })
      .def_property_readonly(
          "n_arrows",
          [](const PyAlgebra& a) { return a.pres.quiver().n_arrows(); })
      .def_property_readonly(
          "n_relations",
          [](const PyAlgebra& a) { return a.pres.relations().size(); })
      .def_property_readonly(
          "field", [](const PyAlgebra& a) { return a.field.name(); })
      .def_property_readonly(
          "radical_square_zero",
          [](const PyAlgebra& a) { return a.pres.is_rsz(); })
      .def_property_readonly("basis",
                             [](const PyAlgebra& a) {
                               std::vector<std::string> out;
                               for (const auto& p : a.pres.basis())
                                 out.push_back(path_str(a.pres.quiver(), p));
                               return out;
                             })
      .def("serialize",
           [](const PyAlgebra& a) { return serialize_dsl(a.pres, a.field); })
      .def("hh", &hh_dict, py::arg("upto") = 1, py::arg("oracle") = false,
           py::arg("budget") = 2000000LL)
      .def("glue", &glue_dict, py::arg("v1"), py::arg("v2"))
      .def("split", &split_dict, py::arg("at"),
           py::arg("sources_to_second") = std::vector<std::string>{},
           py::arg("targets_to_second") = std::vector<std::string>{})
      .def("verify", &verify_dict, py::arg("v1"), py::arg("v2"),
           py::arg("suites") = std::vector<std::string>{})
      .def("oracle_dims", &oracle_dims, py::arg("upto") = 2,
           py::arg("budget") = 2000000LL)
      .def("__repr__", [](const PyAlgebra& a) {
        std::ostringstream s;
        s << "<Algebra over " << a.field.name() << ", "
          << a.pres.quiver().n_vertices() << " vertices, "
          << a.pres.quiver().n_arrows() << " arrows, dim " << a.pres.dim()
          << ">";
        return s.str();
      });

  m.def("parse", &parse_algebra, py::arg("text"), py::arg("field") = "",
        "parse a bound-quiver presentation from DSL text");
}
