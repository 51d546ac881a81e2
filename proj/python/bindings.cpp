#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "commands.hpp"
#include "rsdl/closed_forms.hpp"
#include "rsdl/exact_counts.hpp"
#include "rsdl/parse.hpp"
#include "rsdl/rs_metrics.hpp"

namespace py = pybind11;
using namespace rsdl;

namespace {

// Big integers and rationals cross the boundary as decimal strings.
py::object to_py(const mpz_class& v) { return py::int_(py::str(v.get_str())); }
py::object to_py(const mpq_class& v) {
  return py::module_::import("fractions").attr("Fraction")(to_py(v.get_num()), to_py(v.get_den()));
}

Exec exec_of(unsigned workers, std::uint64_t budget) { return {budget, workers}; }

RSCode code_of(const std::string& field, std::size_t k, bool primitive) {
  const Field F = parse_field(field);
  return primitive ? RSCode::primitive(F, k) : RSCode::standard(F, k);
}

Word word_of(const RSCode& code, const std::vector<Elem>& values) {
  Word u{code.field, code.domain, values};
  u.validate();
  return u;
}

}  // namespace

PYBIND11_MODULE(_rsdl, m) {
  py::exception<Error>(m, "RsdlError", PyExc_ValueError);
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const Error& e) {
      const py::object type = py::module_::import("rsdl._rsdl").attr("RsdlError");
      const py::object exc = type(e.what());
      exc.attr("kind") = to_string(e.kind());
      PyErr_SetObject(type.ptr(), exc.ptr());
    }
  });

  m.def("field_info", [](const std::string& field) {
    const Field F = parse_field(field);
    py::dict d;
    d["p"] = F.p();
    d["e"] = F.e();
    d["q"] = F.q();
    d["modulus"] = F.modulus();
    return d;
  });

  m.def(
      "count_n_all",
      [](const std::string& field, const std::string& f, std::size_t k, unsigned workers, std::uint64_t budget) {
        const Field F = parse_field(field);
        return count_N_all(parse_poly(f, F), k, exec_of(workers, budget));
      },
      py::arg("field"), py::arg("f"), py::arg("k"), py::arg("workers") = 1, py::arg("budget") = kDefaultBudget);
  m.def(
      "count_m",
      [](const std::string& field, const std::string& f, std::size_t k, std::size_t r, std::uint64_t budget) {
        const Field F = parse_field(field);
        return count_M_subsets(parse_poly(f, F), k, r, exec_of(1, budget));
      },
      py::arg("field"), py::arg("f"), py::arg("k"), py::arg("r"), py::arg("budget") = kDefaultBudget);
  m.def(
      "count_n2",
      [](const std::string& field, const std::string& target, std::size_t r, std::size_t d, std::size_t mm,
         bool star) {
        const Field F = parse_field(field);
        const Poly t = parse_poly(target, F);
        return star ? count_N2_star(t, r, d, mm) : count_N2(t, r, d, mm);
      },
      py::arg("field"), py::arg("target"), py::arg("r"), py::arg("d"), py::arg("m"), py::arg("star") = false);

  m.def("knopfmacher_nxk", [](long q, long k, long r) { return to_py(knopfmacher_Nxk(q, k, r)); });
  m.def("macwilliams_n0", [](long q, long k, long r) { return to_py(macwilliams_N0(q, k, r)); });
  m.def("main_term", [](long q, long k, long mm, long r) { return to_py(thm15_main_term(q, k, mm, r)); });

  m.def(
      "verify_bound",
      [](const std::string& field, const std::string& f, std::size_t k, unsigned precision) {
        const Field F = parse_field(field);
        py::list out;
        for (const auto& row : verify_bound_all_r(parse_poly(f, F), k, Exec{}, precision)) {
          py::dict d;
          d["r"] = row.r;
          d["m"] = row.m;
          d["count"] = to_py(*row.report.oracle_value);
          d["main"] = to_py(row.report.main_term);
          d["bound"] = row.report.error_bound.to_double();
          d["holds"] = *row.report.holds;
          out.append(d);
        }
        return out;
      },
      py::arg("field"), py::arg("f"), py::arg("k"), py::arg("precision") = kDefaultPrecisionBits);

  m.def(
      "distance_distribution",
      [](const std::string& field, std::size_t k, const std::vector<Elem>& word, bool primitive) {
        const RSCode code = code_of(field, k, primitive);
        return distance_distribution(word_of(code, word), code);
      },
      py::arg("field"), py::arg("k"), py::arg("word"), py::arg("primitive") = false);
  m.def(
      "classify",
      [](const std::string& field, std::size_t k, const std::vector<Elem>& word, bool primitive) {
        const RSCode code = code_of(field, k, primitive);
        return std::string(to_string(classify(word_of(code, word), code)));
      },
      py::arg("field"), py::arg("k"), py::arg("word"), py::arg("primitive") = false);
  m.def(
      "census",
      [](const std::string& field, std::size_t k, bool primitive, unsigned workers) {
        const CensusReport rep = deep_hole_census(code_of(field, k, primitive), exec_of(workers, kDefaultBudget));
        py::dict d;
        d["words"] = rep.words;
        d["deep_holes"] = rep.deep_holes;
        d["deep_holes_of_degree_k"] = rep.deep_holes_of_degree_k;
        d["covering_radius"] = rep.covering_radius;
        d["bounds_hold"] = rep.bounds_hold;
        py::list holes;
        for (const auto& e : rep.entries) holes.append(e.word);
        d["holes"] = holes;
        return d;
      },
      py::arg("field"), py::arg("k"), py::arg("primitive") = false, py::arg("workers") = 1);

  m.def("run_cli", [](const std::vector<std::string>& args) {
    std::vector<std::string> full{"rsdl"};
    full.insert(full.end(), args.begin(), args.end());
    std::vector<const char*> argv;
    for (const auto& a : full) argv.push_back(a.c_str());
    std::ostringstream out, err;
    int code = 0;
    {
      py::gil_scoped_release release;
      code = cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
    }
    return py::make_tuple(code, out.str(), err.str());
  });
}
