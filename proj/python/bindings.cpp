#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "orderdim/bounds.hpp"
#include "orderdim/diagonal.hpp"
#include "orderdim/dimension.hpp"
#include "orderdim/generators.hpp"
#include "orderdim/io.hpp"
#include "orderdim/separators.hpp"

namespace py = pybind11;
using namespace orderdim;

namespace {

using Orders = std::vector<std::vector<std::size_t>>;

Realizer to_realizer(const Orders& orders) {
  Realizer R;
  for (const auto& o : orders) R.exts.emplace_back(o);
  return R;
}

Orders to_orders(const Realizer& R) {
  Orders out;
  for (const auto& e : R.exts) out.push_back(e.order());
  return out;
}

py::object fraction(const Rational& q) {
  static py::object Fraction = py::module_::import("fractions").attr("Fraction");
  return Fraction(q.get_str());
}

// Fraction, int or "p/q" string
Rational rational(const py::handle& obj) {
  if (py::isinstance<py::float_>(obj)) throw py::type_error("use fractions.Fraction, not float");
  return Rational(py::str(obj).cast<std::string>());
}

PyObject* error_type = nullptr;

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Order dimension toolkit";

  static py::exception<Error> exc(m, "OrderDimError", PyExc_ValueError);
  error_type = exc.ptr();
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const Error& e) {
      py::object err = py::reinterpret_borrow<py::object>(error_type)(e.what());
      err.attr("code") = std::string(to_string(e.code()));
      PyErr_SetObject(error_type, err.ptr());
    }
  });

  py::class_<Poset>(m, "Poset")
      .def(py::init([](std::vector<std::string> labels, std::vector<NamePair> pairs) {
             return build_poset(std::move(labels), pairs);
           }),
           py::arg("labels"), py::arg("relation"))
      .def("__len__", &Poset::size)
      .def_property_readonly("labels", &Poset::labels)
      .def("label", &Poset::label)
      .def("index_of", [](const Poset& P, const std::string& s) { return P.index_of(s); })
      .def("less", &Poset::less)
      .def("incomparable", &Poset::incomparable)
      .def("strict_pairs", &Poset::strict_pairs)
      .def("cover_pairs", &Poset::cover_pairs)
      .def("__eq__", &Poset::operator==)
      .def("__repr__", [](const Poset& P) { return "<Poset with " + std::to_string(P.size()) + " elements>"; });

  m.def("extend_acyclic", [](std::vector<std::string> labels, std::vector<NamePair> pairs) {
    return extend_acyclic(std::move(labels), pairs);
  });
  m.def("linearize", [](const Poset& P) { return linearize(P).order(); });
  m.def("is_chain", [](const Poset& P, const ElementSet& s) { return is_chain(P, s); });
  m.def("incomparable_pairs", &incomparable_pairs);

  m.def(
      "verify_realizer",
      [](const Poset& P, const Orders& R) -> py::object {
        const auto v = verify_realizer(P, to_realizer(R));
        if (v) return py::none();
        return py::make_tuple(v.lower, v.upper);
      },
      "None if the orders realize P, else an incomparable pair (x, y) that no order puts y before x");
  m.def("standard_realization", [](const Poset& P) { return to_orders(standard_realization(P)); });
  m.def(
      "dimension",
      [](const Poset& P, std::size_t max_t, std::uint64_t budget) {
        const auto res = dimension_exact(P, DimensionOptions{max_t, budget});
        return py::make_tuple(res.dim, to_orders(res.witness), res.nodes);
      },
      py::arg("poset"), py::arg("max_t") = 64, py::arg("node_budget") = 10'000'000,
      "(dim, witness orders, search nodes)");
  m.def("dimension_oracle", &dimension_oracle);

  m.def("dbi", [](const Poset& P, const ChainSet& C, const Orders& R) { return to_orders(dbi(P, C, to_realizer(R))); });
  m.def("dbc", [](const Poset& P, const ChainSet& C, const Orders& R) { return to_orders(dbc(P, C, to_realizer(R))); });
  m.def("db_point",
        [](const Poset& P, std::size_t x0, const Orders& R) { return to_orders(db_point(P, x0, to_realizer(R))); });
  m.def("remove_elements", [](const Poset& P, const ElementSet& drop) {
    const auto sub = remove_elements(P, drop);
    return py::make_tuple(sub.poset, sub.parent_index);
  });

  py::enum_<SeparatorMode>(m, "SeparatorMode")
      .value("minimal", SeparatorMode::minimal)
      .value("maximal", SeparatorMode::maximal);

  py::class_<SeparatorInstance>(m, "SeparatorInstance")
      .def(py::init([](std::vector<std::size_t> order, ElementSet lower, ElementSet upper) {
             return make_instance(LinearExtension(std::move(order)), std::move(lower), std::move(upper));
           }),
           py::arg("order"), py::arg("lower"), py::arg("upper"))
      .def_property_readonly("order", [](const SeparatorInstance& s) { return s.order.order(); })
      .def_readonly("lower", &SeparatorInstance::lower)
      .def_readonly("upper", &SeparatorInstance::upper)
      .def("__len__", &SeparatorInstance::size);

  m.def("ls", &ls, py::arg("instance"), py::arg("mode") = SeparatorMode::minimal);
  m.def("ls_star", [](const std::vector<SeparatorInstance>& v, SeparatorMode mode) { return ls_star(v, mode); },
        py::arg("instances"), py::arg("mode") = SeparatorMode::minimal);
  m.def("is_separator", [](const SeparatorInstance& s, const ElementSet& B) { return is_separator(s, B); });
  m.def("separator_elements", [](const std::vector<SeparatorInstance>& v) { return separator_elements(v); });
  m.def("solution_interval", [](const SeparatorInstance& s) {
    const auto A = solution_interval(s);
    return py::make_tuple(fraction(A.lo), fraction(A.hi));
  });
  m.def("ls_to_point", [](const SeparatorInstance& s) { return fraction(ls_to_point(s)); });
  m.def("point_to_separator",
        [](const SeparatorInstance& s, const py::object& x) { return point_to_separator(s, rational(x)); });
  m.def(
      "xc1_via_ls",
      [](const py::object& lo, const py::object& hi, std::size_t depth) {
        return fraction(xc1_via_ls(RationalInterval(rational(lo), rational(hi)), depth));
      },
      py::arg("lo"), py::arg("hi"), py::arg("depth") = 8);

  m.def("gen_fn", [](std::size_t n) {
    const auto ex = gen_fn(n);
    return py::make_tuple(ex.poset, to_orders(ex.realizer));
  });
  m.def(
      "gen_sharpness",
      [](const std::string& id, std::size_t n) {
        const char* ids[] = {"e31", "e32", "e33", "e34", "e35"};
        SharpnessSpec spec;
        const auto* it = std::find(std::begin(ids), std::end(ids), id);
        if (it == std::end(ids)) throw Error(ErrorCode::ParseError, "unknown example " + id);
        spec.kind = static_cast<SharpnessSpec::Kind>(it - std::begin(ids));
        spec.n = n;
        const auto ex = gen_sharpness(spec);
        py::dict d;
        d["poset"] = ex.poset;
        d["chains"] = ex.chains;
        d["dim_before"] = ex.dim_before;
        d["dim_after"] = ex.dim_after;
        d["reduced"] = ex.reduced.poset;
        d["reduced_realizer"] = to_orders(ex.reduced_realizer);
        return d;
      },
      py::arg("id"), py::arg("n") = 0);
  m.def(
      "separation_pipeline",
      [](const std::string& variant, std::vector<std::size_t> f, std::vector<std::size_t> g, std::size_t N,
         std::size_t n) {
        VariantSpec spec;
        spec.kind = variant == "thm46"   ? VariantSpec::Kind::thm46
                    : variant == "thm48" ? VariantSpec::Kind::thm48
                    : variant == "thm49" ? VariantSpec::Kind::thm49
                                         : throw Error(ErrorCode::ParseError, "unknown variant " + variant);
        spec.n = n;
        const auto v = gen_pk_chain_variant(spec, InjectionPair{std::move(f), std::move(g), N});
        const auto out = run_pipeline(v);
        return py::make_tuple(out.A, to_orders(out.realizer), v.lp.poset);
      },
      py::arg("variant"), py::arg("f"), py::arg("g"), py::arg("N"), py::arg("n") = 0,
      "(A, realizer, poset) for one chain-removal variant");
  m.def("random_poset", &random_poset, py::arg("n"), py::arg("p"), py::arg("seed"));
  m.def("random_instance", &random_instance, py::arg("n"), py::arg("seed"));

  m.def(
      "diagonalize",
      [](const std::string& config_text) {
        const DiagonalConfig cfg = parse_diagonal_config(config_text);
        const auto programs = materialize_copies(cfg.k, cfg.assignment, cfg.programs, cfg.copies, cfg.stages);
        const auto run = run_diagonalization(cfg.k, cfg.assignment, programs, cfg.stages);
        const auto verdicts = check_requirements(run.instances, run.transcript, programs, cfg.stages);
        py::list out;
        for (const auto& v : verdicts) {
          py::dict d;
          d["clause"] = v.clause;
          d["unresolved"] = v.unresolved;
          d["describe"] = v.describe();
          out.append(d);
        }
        return py::make_tuple(out, run.transcript.log(), run.instances);
      },
      "(verdicts, transcript log, instances) for a diagonal-config document");

  m.def("parse_poset", [](const std::string& text) { return parse_poset(text).poset; });
  m.def("dump_poset", [](const Poset& P) { return dump_poset(poset_document(P)); });
  m.def("dump_realizer",
        [](const Poset& P, const Orders& R) { return dump_realizer(RealizerDocument{poset_document(P), to_realizer(R)}); });
  m.def("parse_realizer", [](const std::string& text) {
    const auto doc = parse_realizer(text);
    return py::make_tuple(doc.poset.poset, to_orders(doc.realizer));
  });
}
