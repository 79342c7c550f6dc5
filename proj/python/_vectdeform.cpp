// Python bindings. Commands return the report as a JSON string; the package
// wrapper decodes it. Scalars cross the boundary as canonical strings.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "vectdeform/central.hpp"
#include "vectdeform/reports.hpp"
#include "vectdeform/sl2.hpp"

namespace py = pybind11;
using namespace vectdeform;

namespace {

std::string dump(const VerificationReport& r) { return r.to_json().dump(); }

ParamScalar scalar(const std::string& text)
{
	try {
		return ParamScalar::parse(text);
	} catch (const Error& e) {
		throw UsageError(e.what());
	}
}

CSpec c_spec(const std::string& params, bool symbolic, const std::optional<std::string>& universal)
{
	CSpec c;
	c.params = ParamSpec::parse(params, symbolic);
	if (universal && *universal != "plus" && *universal != "minus")
		throw UsageError("universal branch must be 'plus' or 'minus'");
	c.universal_branch = universal;
	return c;
}

} // namespace

PYBIND11_MODULE(_vectdeform, m)
{
	m.doc() = "Exact checks for deformations of Vect(S^1) into Poisson algebras of Laurent series";
	m.attr("engine_version") = kEngineVersion;

	static py::exception<Error> error(m, "Error", PyExc_RuntimeError);
	static py::exception<UsageError> usage_error(m, "UsageError", PyExc_ValueError);
	static py::exception<InsufficientDepth> depth_error(m, "InsufficientDepth", error.ptr());
	py::register_exception_translator([](std::exception_ptr p) {
		try {
			if (p)
				std::rethrow_exception(p);
		} catch (const UsageError& e) {
			PyErr_SetString(usage_error.ptr(), e.what());
		} catch (const InsufficientDepth& e) {
			PyErr_SetString(depth_error.ptr(), e.what());
		} catch (const Error& e) {
			PyErr_SetString(error.ptr(), e.what());
		}
	});

	m.def("normalize", [](const std::string& s) { return scalar(s).str(); }, py::arg("expression"),
	      "Canonical rendering of a scalar expression.");
	m.def(
	    "integrability_lhs",
	    [](const std::string& a, const std::string& b, const std::string& c) {
		    return integrability_lhs(scalar(a), scalar(b), scalar(c)).str();
	    },
	    py::arg("c0") = "c0", py::arg("c1") = "c1", py::arg("c2") = "c2");
	m.def(
	    "universal_coefficient",
	    [](const std::string& l, const std::string& u, int k) {
		    if (k < 0)
			    throw UsageError("k must be >= 0");
		    return universal_coefficient(scalar(l), scalar(u), k).str();
	    },
	    py::arg("lam") = "lambda", py::arg("mu") = "mu", py::arg("k") = 1);
	m.def(
	    "formal_coefficient",
	    [](const std::string& l, int k) {
		    if (k < 0)
			    throw UsageError("k must be >= 0");
		    return formal_coefficient(scalar(l), k).str();
	    },
	    py::arg("lam") = "lambda", py::arg("k") = 2);
	m.def(
	    "casimir",
	    [](const std::string& l, const std::string& u) { return casimir(sl2_images(scalar(l), scalar(u))).str(); },
	    py::arg("lam") = "lambda", py::arg("mu") = "mu");
	m.def(
	    "gelfand_fuks", [](int a, int b) { return gelfand_fuks(basis_field(a), basis_field(b)).str(); },
	    py::arg("m"), py::arg("n"));

	m.def(
	    "verify_homomorphism",
	    [](const std::string& map, const std::string& params, bool symbolic, int window, int floor, int order,
	       const std::optional<std::string>& table) {
		    MapSpec spec;
		    spec.kind = MapSpec::kind_from_name(map);
		    spec.params = ParamSpec::parse(params, symbolic);
		    spec.order = order;
		    if (spec.kind == MapSpec::Kind::table) {
			    if (!table)
				    throw UsageError("map 'table' needs a table");
			    try {
				    spec.table = nlohmann::json::parse(*table);
			    } catch (const nlohmann::json::exception& e) {
				    throw UsageError(std::string("table is not valid JSON: ") + e.what());
			    }
			    spec.table_source = "<python>";
		    }
		    py::gil_scoped_release release;
		    return dump(cmd_verify_homomorphism(spec, window, floor));
	    },
	    py::arg("map") = "standard", py::arg("params") = "", py::arg("symbolic") = false, py::arg("window") = 4,
	    py::arg("floor") = -6, py::arg("order") = 4, py::arg("table") = py::none());
	m.def(
	    "solve_recursion",
	    [](const std::string& params, bool symbolic, const std::optional<std::string>& universal, int K) {
		    return dump(cmd_solve_recursion(c_spec(params, symbolic, universal), K));
	    },
	    py::arg("params") = "", py::arg("symbolic") = false, py::arg("universal") = py::none(), py::arg("K") = 5);
	m.def(
	    "check_integrability",
	    [](const std::string& params, bool symbolic, const std::optional<std::string>& universal) {
		    return dump(cmd_check_integrability(c_spec(params, symbolic, universal)));
	    },
	    py::arg("params") = "", py::arg("symbolic") = false, py::arg("universal") = py::none());
	m.def(
	    "formal_solve",
	    [](const std::string& params, bool symbolic, const std::optional<std::string>& universal, int order,
	       const std::map<std::pair<int, int>, std::string>& slots, bool lambda_family) {
		    FreeSlots free;
		    for (const auto& [key, value] : slots)
			    free.emplace(key, scalar(value));
		    return dump(cmd_formal_solve(c_spec(params, symbolic, universal), order, free, lambda_family));
	    },
	    py::arg("params") = "", py::arg("symbolic") = false, py::arg("universal") = py::none(),
	    py::arg("order") = 3, py::arg("slots") = std::map<std::pair<int, int>, std::string>{},
	    py::arg("lambda_family") = false);
	m.def(
	    "cocycle_report", [](const std::vector<int>& which, int window) { return dump(cmd_cocycle_report(which, window)); },
	    py::arg("which") = std::vector<int>{0, 1, 2}, py::arg("window") = 6);
	m.def(
	    "coboundary_search",
	    [](int which, const std::optional<std::string>& shift, int window, int grade_min, int grade_max,
	       int derivative_cap) {
		    std::optional<TruncatedLaurent> F;
		    if (shift) {
			    try {
				    F = TruncatedLaurent::from_json(nlohmann::json::parse(*shift));
			    } catch (const nlohmann::json::exception& e) {
				    throw UsageError(std::string("malformed shift: ") + e.what());
			    }
		    }
		    WindowSpec w{window, grade_min, grade_max, derivative_cap};
		    py::gil_scoped_release release;
		    return dump(cmd_coboundary_search(which, F, w));
	    },
	    py::arg("which") = -1, py::arg("shift") = py::none(), py::arg("window") = 6, py::arg("grade_min") = -3,
	    py::arg("grade_max") = 1, py::arg("derivative_cap") = 4);
	m.def(
	    "moment_map",
	    [](const std::string& params, bool symbolic) { return dump(cmd_moment_map(ParamSpec::parse(params, symbolic))); },
	    py::arg("params") = "", py::arg("symbolic") = false);
	m.def(
	    "central_extension",
	    [](const std::string& params, bool symbolic, int depth, int max_m) {
		    return dump(cmd_central_extension(ParamSpec::parse(params, symbolic), depth, max_m));
	    },
	    py::arg("params") = "", py::arg("symbolic") = false, py::arg("depth") = 3, py::arg("max_m") = 3);
	m.def("report_errata", [] { return dump(cmd_report_errata()); });
}
