#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "prr/corpus.hpp"
#include "prr/diagonal.hpp"
#include "prr/partial.hpp"
#include "prr/surface.hpp"

namespace py = pybind11;
using namespace prr;

namespace {

// Python ints are unbounded, so naturals cross as decimal text.
py::object nat_to_py(const Nat& n) {
  return py::reinterpret_steal<py::object>(PyLong_FromString(n.str().c_str(), nullptr, 10));
}

Nat nat_from_py(const py::handle& h) {
  if (py::isinstance<py::bool_>(h) || !py::isinstance<py::int_>(h))
    throw py::type_error("expected a natural number");
  Nat n(py::str(h).cast<std::string>());
  if (n < 0) throw py::value_error("naturals are non-negative");
  return n;
}

// () and None are the unit value; 2-tuples are pairs.
Value value_from_py(const py::handle& h) {
  if (h.is_none()) return Value::unit();
  if (py::isinstance<py::tuple>(h)) {
    auto t = h.cast<py::tuple>();
    if (t.size() == 0) return Value::unit();
    if (t.size() == 2) return Value::pair(value_from_py(t[0]), value_from_py(t[1]));
    throw py::value_error("values are (), naturals, or pairs");
  }
  return Value::nat(nat_from_py(h));
}

py::object value_to_py(const Value& v) {
  switch (v.kind()) {
    case Value::Kind::Unit:
      return py::tuple();
    case Value::Kind::Nat:
      return nat_to_py(v.as_nat());
    case Value::Kind::Pair:
      return py::make_tuple(value_to_py(v.left()), value_to_py(v.right()));
  }
  return py::none();
}

Term as_term(const py::handle& h) {
  if (py::isinstance<py::str>(h)) return parse_term(h.cast<std::string>());
  return h.cast<Term>();
}

py::list ords(const std::vector<OrdPoly>& xs) {
  py::list out;
  for (const auto& x : xs) out.append(x.bracket());
  return out;
}

}  // namespace

PYBIND11_MODULE(prr, m) {
  m.doc() = "Primitive-recursive terms, codes and the step machine.";

  py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);
  py::register_exception<TypeMismatch>(m, "TypeMismatch", PyExc_TypeError);
  py::register_exception<EvalError>(m, "EvalError", PyExc_RuntimeError);
  py::register_exception<IllTyped>(m, "IllTyped", PyExc_ValueError);
  py::register_exception<NotAPredicateCode>(m, "NotAPredicateCode", PyExc_ValueError);
  py::register_exception<UnsupportedConstructor>(m, "UnsupportedConstructor", PyExc_ValueError);

  py::class_<Term>(m, "Term")
      .def_property_readonly("dom", [](const Term& t) { return print_obj(t.dom()); })
      .def_property_readonly("cod", [](const Term& t) { return print_obj(t.cod()); })
      .def_property_readonly("complexity", [](const Term& t) { return t.complexity().bracket(); })
      .def_property_readonly("depth", &Term::depth)
      .def("__eq__", [](const Term& a, const Term& b) { return a == b; })
      .def("__hash__", &Term::hash)
      .def("__str__", [](const Term& t) { return render_term(t); })
      .def("__repr__", [](const Term& t) { return "<Term " + render_term(t) + ">"; });

  m.def("parse", [](const std::string& src) { return parse_term(src); }, py::arg("source"));
  m.def("stdlib", [] {
    py::dict d;
    for (const auto& [name, t] : stdlib()) d[py::str(name)] = t;
    return d;
  });
  m.def("print_term", [](const Term& t) { return print_term(t); });

  m.def(
      "eval",
      [](const py::object& term, const py::object& arg, bool intrinsics) {
        Term t = as_term(term);
        EvalOptions o;
        o.intrinsics = intrinsics;
        return value_to_py(eval_structural(t, value_from_py(arg), o));
      },
      py::arg("term"), py::arg("arg"), py::arg("intrinsics") = true,
      "Structural evaluation.");

  m.def(
      "run",
      [](const py::object& term, const py::object& arg, std::uint64_t fuel) {
        Term t = as_term(term);
        RunOptions opts;
        opts.fuel = fuel;
        opts.tail = 0;
        Outcome o = eval_iterative(t, value_from_py(arg), opts);
        py::dict d;
        d["verdict"] = verdict_name(o.verdict);
        d["value"] = o.done() ? value_to_py(o.value) : py::none();
        d["steps"] = o.steps;
        d["fuel_used"] = o.fuel_used;
        d["message"] = o.message;
        d["complexities"] = ords(o.complexities);
        d["descent_ok"] = descent_check(o.complexities).ok();
        return d;
      },
      py::arg("term"), py::arg("arg"), py::arg("fuel") = 1'000'000,
      "Iterative evaluation on the step machine.");

  m.def("quote", [](const py::object& term) { return print_code(quote(as_term(term))); });
  m.def("num", [](const py::object& term) { return nat_to_py(num(quote(as_term(term)))); });
  m.def("from_num", [](const py::object& n) { return decode(code_from_num(nat_from_py(n))); });

  m.def("cantor_pair", [](const py::object& x, const py::object& y) {
    return nat_to_py(cantor_pair(nat_from_py(x), nat_from_py(y)));
  });
  m.def("cantor_unpair", [](const py::object& n) {
    auto [x, y] = cantor_unpair(nat_from_py(n));
    return py::make_tuple(nat_to_py(x), nat_to_py(y));
  });
  m.def("pred_count_hash", [](const py::object& n) { return pred_count_hash_term(nat_from_py(n)); });
  m.def("pred_count_inverse",
        [](const py::object& term) { return nat_to_py(pred_count_inverse(quote(as_term(term)))); });

  m.def("mu", [](const py::object& phi, const py::object& a, std::uint64_t fuel) -> py::object {
    auto r = mu_search(as_term(phi), value_from_py(a), fuel);
    return r ? nat_to_py(*r) : py::none();
  }, py::arg("phi"), py::arg("a"), py::arg("fuel") = 1000);

  m.def("middle_inverse", [](const py::object& f) {
    StructuralInverse s = structural_middle_inverse(as_term(f));
    return py::make_tuple(s.term, inverse_kind_name(s.kind));
  });

  m.def("cci", [](const std::string& src, const py::object& a, std::uint64_t fuel) {
    CciOutcome o = cci_run(parse_cci_instance(src), value_from_py(a), fuel);
    py::dict d;
    d["verdict"] = verdict_name(o.verdict);
    d["value"] = value_to_py(o.value);
    d["index"] = nat_to_py(o.index);
    d["message"] = o.message;
    return d;
  }, py::arg("source"), py::arg("a"), py::arg("fuel") = 1'000'000);

  m.def("liar", [](std::uint64_t fuel) { return run_liar(fuel).serialize(); }, py::arg("fuel") = 100000);
}
