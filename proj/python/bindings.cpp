#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <optional>
#include <sstream>

#include "ntcodes/cli.hpp"
#include "ntcodes/codes.hpp"
#include "ntcodes/enumerators.hpp"
#include "ntcodes/errors.hpp"
#include "ntcodes/macwilliams.hpp"
#include "ntcodes/numtheory.hpp"
#include "ntcodes/qcalc.hpp"

namespace py = pybind11;
using namespace ntcodes;

namespace {

py::object to_py_int(const BigInt& v) {
  const std::string s = v.str();
  return py::reinterpret_steal<py::object>(PyLong_FromString(s.c_str(), nullptr, 10));
}

// Round-trips through Python's json module so nested dicts come back as plain objects.
py::object to_py(const nlohmann::json& j) {
  return py::module_::import("json").attr("loads")(j.dump());
}

nlohmann::json from_py(const py::object& o) {
  return nlohmann::json::parse(py::module_::import("json").attr("dumps")(o).cast<std::string>());
}

py::dict enumerator_dict(const enumerators::Enumerator& e) {
  py::dict d = to_py(e.to_json());
  d["text"] = to_text(e.poly);
  return d;
}

codes::CodeSpec spec_from(const py::object& spec) {
  return codes::CodeSpec::from_json(from_py(spec));
}

}  // namespace

PYBIND11_MODULE(_ntcodes, m) {
  m.doc() = "Weight enumerators of number-theoretic codes";

  py::register_exception<BudgetExceeded>(m, "BudgetExceeded", PyExc_RuntimeError);
  py::register_exception<NotAnInteger>(m, "NotAnInteger", PyExc_ArithmeticError);
  py::register_exception<NonDivisible>(m, "NonDivisible", PyExc_ArithmeticError);

  m.def("euler_phi", &numtheory::euler_phi);
  m.def("mobius", &numtheory::mobius);
  m.def("divisors", &numtheory::divisors);
  m.def("ramanujan_sum", &numtheory::ramanujan_sum, py::arg("d"), py::arg("a"));

  m.def(
      "q_multinomial",
      [](const std::vector<std::uint32_t>& parts) { return to_text(qcalc::q_multinomial(qcalc::Composition(parts))); },
      py::arg("parts"));

  m.def(
      "tenengolts_spec",
      [](std::size_t n, std::uint32_t r, std::int64_t a1, std::int64_t a2, const std::string& variant) {
        return to_py(codes::tenengolts(n, r, a1, a2, codes::parse_variant(variant)).to_json());
      },
      py::arg("n"), py::arg("r"), py::arg("a1"), py::arg("a2"), py::arg("variant") = "gt");

  m.def(
      "tenengolts_cardinality",
      [](std::size_t n, std::uint32_t r, std::int64_t a1, std::int64_t a2, const std::string& variant) {
        return to_py_int(enumerators::tenengolts_cardinality(n, r, a1, a2, codes::parse_variant(variant)));
      },
      py::arg("n"), py::arg("r"), py::arg("a1"), py::arg("a2"), py::arg("variant") = "gt");

  m.def(
      "tenengolts_hamming",
      [](std::size_t n, std::uint32_t r, std::int64_t a1, std::int64_t a2, const std::string& variant) {
        return enumerator_dict(enumerators::tenengolts_hamming(n, r, a1, a2, codes::parse_variant(variant)));
      },
      py::arg("n"), py::arg("r"), py::arg("a1"), py::arg("a2"), py::arg("variant") = "gt");

  m.def(
      "lc_hamming",
      [](std::size_t n, std::int64_t mod, std::uint32_t r, const std::vector<std::int64_t>& h, std::int64_t a) {
        return enumerator_dict(enumerators::lc_hamming(n, mod, r, h, a));
      },
      py::arg("n"), py::arg("m"), py::arg("r"), py::arg("h"), py::arg("a"));

  m.def(
      "enumerator",
      [](const py::object& spec, const std::string& kind, const std::string& method,
         std::optional<std::uint64_t> limit) {
        const auto s = spec_from(spec);
        const auto budget = limit.value_or(codes::default_budget());
        enumerators::Enumerator e = [&] {
          py::gil_scoped_release release;
          if (method == "oracle") return enumerators::oracle_extended(s, budget);
          if (method != "auto" && method != "formula")
            throw std::invalid_argument("method must be auto, formula or oracle");
          enumerators::CharacterSumOptions opts;
          opts.budget = budget;
          opts.allow_filter_fast_path = method == "auto";
          return enumerators::character_sum_extended(s, opts);
        }();
        return enumerator_dict(enumerators::specialize(e, enumerators::parse_kind(kind)));
      },
      py::arg("spec"), py::arg("kind") = "hamming", py::arg("method") = "auto",
      py::arg("budget") = py::none());

  m.def(
      "enumerate_codewords",
      [](const py::object& spec, std::optional<std::uint64_t> budget) {
        const auto words = codes::enumerate_codewords(spec_from(spec), budget.value_or(codes::default_budget()));
        std::vector<std::string> out;
        for (const auto& w : words) out.push_back(w.to_string());
        return out;
      },
      py::arg("spec"), py::arg("budget") = py::none());

  m.def(
      "macwilliams",
      [](std::uint32_t r, const std::string& H) {
        const auto rep = macwilliams::verify_macwilliams(macwilliams::build_code(r, macwilliams::parse_matrix(H)));
        py::dict d = to_py(rep.to_json());
        d["full_rank"] = rep.full_rank;
        return d;
      },
      py::arg("r"), py::arg("H"));

  m.def(
      "run_cli",
      [](const std::vector<std::string>& args) {
        std::ostringstream out, err;
        const int code = cli::run(args, out, err);
        return py::make_tuple(code, out.str(), err.str());
      },
      py::arg("args"));
}
