// pybind11 surface of the weyl library. Structured values cross the
// boundary as JSON text; the Python package turns them into dicts.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "weyl/io.hpp"
#include "weyl/selftest.hpp"

namespace py = pybind11;
using namespace weyl;

namespace {

struct Algebra {
  SessionConfig cfg;
};

Json parse_json(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw Error(ErrorCode::InvalidArgument, std::string("invalid JSON: ") + e.what());
  }
}

Algebra make_algebra(const std::string& config_json) { return Algebra{config_from_json(parse_json(config_json))}; }

// Moves `w` onto `sig` after checking both describe the same algebra.
Element rebase(const SignaturePtr& sig, const Element& w) {
  if (!(*sig == w.sig())) throw Error(ErrorCode::SignatureMismatch, "element and automorphism live in different algebras");
  return terms_from_json(sig, terms_json(w));
}

bool is_functional(const Json& j) { return j.is_object() && j.contains("images"); }

NormalFormAut as_normal_form(const Json& j, Mode& mode) {
  if (is_functional(j)) {
    FunctionalAut phi = functional_from_json(j);
    mode = phi.mode;
    return decompose_automorphism(phi);
  }
  LoadedNormalForm nf = normal_form_from_json(j);
  mode = nf.mode;
  return nf.aut;
}

Element apply_aut(const std::string& aut, const Element& w) {
  Json j = parse_json(aut);
  if (is_functional(j)) {
    FunctionalAut phi = functional_from_json(j);
    return apply_functional(phi, rebase(phi.signature(), w));
  }
  NormalFormAut a = normal_form_from_json(j).aut;
  return apply_normal_form(a, rebase(a.sig, w));
}

std::string compose(const std::string& a_text, const std::string& b_text) {
  Mode mode = Mode::Lie, ignored = Mode::Lie;
  NormalFormAut a = as_normal_form(parse_json(a_text), mode);
  NormalFormAut b = as_normal_form(parse_json(b_text), ignored);
  if (!(*a.sig == *b.sig)) throw Error(ErrorCode::SignatureMismatch, "the two automorphisms act on different algebras");
  b.sig = a.sig;
  b.u.u = rebase(a.sig, b.u.u);
  if (mode == Mode::Assoc && (a.eps == 1 || b.eps == 1))
    throw Error(ErrorCode::Sigma1NotSupported, "the sigma1 factor is not an associative automorphism");
  NormalFormAut ab = (a.eps == 0 && b.eps == 0) ? compose_normal_forms(a, b) : compose_via_functional(a, b, mode);
  return normal_form_json(ab, mode).dump();
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Exact arithmetic for Weyl-type algebras";

  static py::exception<Error> weyl_error(m, "WeylError", PyExc_ValueError);
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const Error& e) {
      PyErr_SetObject(weyl_error.ptr(), py::make_tuple(e.what(), std::string(error_name(e.code()))).ptr());
    }
  });

  py::class_<Element>(m, "Element")
      .def("__str__", [](const Element& e) { return print_element(e); })
      .def("__repr__", [](const Element& e) { return "Element(" + print_element(e) + ")"; })
      .def("__add__", [](const Element& a, const Element& b) { return a + b; })
      .def("__sub__", [](const Element& a, const Element& b) { return a - b; })
      .def("__mul__", [](const Element& a, const Element& b) { return a * b; })
      .def("__neg__", [](const Element& a) { return -a; })
      .def("__eq__", [](const Element& a, const Element& b) { return a == b; })
      .def("scale", [](const Element& a, const std::string& c) { return parse_rational(c) * a; })
      .def("is_zero", &Element::is_zero)
      .def("__len__", &Element::size)
      .def("max_level", &Element::max_level)
      .def("to_json", [](const Element& e) { return element_json(e).dump(); });

  py::class_<Algebra>(m, "Algebra")
      .def(py::init(&make_algebra), py::arg("config_json"))
      .def("parse", [](const Algebra& a, const std::string& src) { return parse_and_eval(src, a.cfg); })
      .def("ast", [](const Algebra& a, const std::string& src) { return parse_element(src, a.cfg).describe(); })
      .def("element_from_json",
           [](const Algebra& a, const std::string& text) { return element_from_json(parse_json(text), a.cfg.signature); })
      .def("one", [](const Algebra& a) { return Element::one(a.cfg.signature); })
      .def("d", [](const Algebra& a, std::size_t q, int power) { return Element::d(a.cfg.signature, q, power); },
           py::arg("q"), py::arg("power") = 1)
      .def("signature_json", [](const Algebra& a) { return signature_json(*a.cfg.signature).dump(); })
      .def_property_readonly("mode", [](const Algebra& a) { return std::string(mode_name(a.cfg.mode)); })
      .def_property_readonly("seed", [](const Algebra& a) { return a.cfg.seed; });

  m.def("bracket", &bracket);
  m.def("sigma1", &apply_sigma1);
  m.def("exp_ad", [](const Element& u, const Element& w) { return apply_exp_ad(InnerExp::from(u), w); });
  m.def("apply_aut", &apply_aut, py::arg("aut_json"), py::arg("element"));
  m.def("compose", &compose, py::arg("a_json"), py::arg("b_json"));
  m.def("decompose", [](const std::string& text) {
    Mode mode = Mode::Lie;
    Json j = parse_json(text);
    NormalFormAut a = as_normal_form(j, mode);
    if (!is_functional(j)) a = decompose_automorphism(to_functional(a, mode));
    return normal_form_json(a, mode).dump();
  });
  m.def("expand", [](const std::string& text) {
    Mode mode = Mode::Lie;
    NormalFormAut a = as_normal_form(parse_json(text), mode);
    return functional_json(to_functional(a, mode)).dump();
  });
  m.def(
      "verify",
      [](const std::string& text, int trials, std::uint64_t seed) {
        Json j = parse_json(text);
        if (is_functional(j)) return verify_report_json(verify_automorphism(functional_from_json(j), trials, seed)).dump();
        LoadedNormalForm nf = normal_form_from_json(j);
        return verify_report_json(verify_automorphism(nf.aut, nf.mode, trials, seed)).dump();
      },
      py::arg("aut_json"), py::arg("trials") = 100, py::arg("seed") = 1);
  m.def(
      "iso_search",
      [](const Algebra& src, const Algebra& dst, int bound, std::uint64_t cap, int trials, std::uint64_t seed) {
        return iso_result_json(iso_search_bounded(src.cfg.signature, dst.cfg.signature, bound, cap, trials, seed)).dump();
      },
      py::arg("src"), py::arg("dst"), py::arg("bound") = 2, py::arg("cap") = 2'000'000, py::arg("trials") = 20,
      py::arg("seed") = 1);
  m.def(
      "classify",
      [](const Element& w, int steps) { return ad_behavior_json(w.sig(), classify_ad_behavior(w, steps)).dump(); },
      py::arg("element"), py::arg("steps") = 5);
  m.def("witness", [](const Element& u) -> std::optional<std::string> {
    auto w = faithfulness_witness(u);
    if (!w) return std::nullopt;
    return witness_json(*w).dump();
  });
  m.def("suite_names", &suite_names);
  m.def(
      "selftest",
      [](const std::string& suite, std::uint64_t seed) {
        SuiteResult r = run_suite(suite, seed);
        return py::make_tuple(r.passed, format_suite(r));
      },
      py::arg("suite"), py::arg("seed") = 1);
}
