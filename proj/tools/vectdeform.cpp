// vectdeform: exact verification of deformations of circle vector fields in
// Poisson algebras of Laurent series. Prints a JSON (or text) report and
// exits 0 pass, 2 fail, 3 obstruction, 4 usage.

#include <fstream>
#include <iostream>

#include <CLI11.hpp>

#include "vectdeform/reports.hpp"

using namespace vectdeform;

namespace {

constexpr int kUsageExit = 4;

nlohmann::json read_json_file(const std::string& path)
{
	std::ifstream in(path);
	if (!in)
		throw UsageError("cannot open '" + path + "'");
	try {
		return nlohmann::json::parse(in);
	} catch (const nlohmann::json::exception& e) {
		throw UsageError("'" + path + "' is not valid JSON: " + e.what());
	}
}

// "k,j=value" for the free slots alpha^k_j.
std::pair<std::pair<int, int>, ParamScalar> parse_slot(const std::string& text)
{
	const auto comma = text.find(',');
	const auto eq = text.find('=');
	if (comma == std::string::npos || eq == std::string::npos || eq < comma)
		throw UsageError("slot '" + text + "' is not of the form k,j=value");
	try {
		const int k = std::stoi(text.substr(0, comma));
		const int j = std::stoi(text.substr(comma + 1, eq - comma - 1));
		return {{k, j}, ParamScalar::parse(text.substr(eq + 1))};
	} catch (const std::logic_error&) {
		throw UsageError("slot '" + text + "' has a malformed index");
	} catch (const Error& e) {
		throw UsageError("slot '" + text + "': " + e.what());
	}
}

struct ParamOptions {
	bool symbolic = false;
	std::string params;

	void attach(CLI::App* cmd)
	{
		cmd->add_flag("--symbolic", symbolic, "Treat unset parameters as indeterminates");
		cmd->add_option("--params", params, "Parameter values, e.g. lambda=1/2,mu=3");
	}
	ParamSpec spec() const { return ParamSpec::parse(params, symbolic); }
};

} // namespace

int main(int argc, char** argv)
{
	CLI::App app{"Exact checks for deformations of Vect(S^1) into Poisson algebras of Laurent series"};
	app.require_subcommand(1);
	app.fallthrough();
	bool text = false;
	app.add_flag("--text", text, "Render the report as text instead of JSON");
	app.add_flag("--json", [&](std::int64_t) { text = false; }, "Emit the report as JSON (default)");

	std::function<VerificationReport()> run;

	// verify-homomorphism
	auto* verify = app.add_subcommand("verify-homomorphism", "Check {pi(X), pi(Y)} = pi([X, Y]) on basis pairs");
	ParamOptions verify_params;
	verify_params.attach(verify);
	std::string map_name = "standard";
	std::string table_path;
	int window = 4;
	int floor = -6;
	int order = 4;
	verify->add_option("--map", map_name, "standard | infinitesimal | universal | formal | table")->capture_default_str();
	verify->add_option("--table", table_path, "Rule table (JSON) for --map table");
	verify->add_option("--window", window, "Basis window |m|, |n| <= N")->capture_default_str();
	verify->add_option("--floor", floor, "Lowest xi-grade checked")->capture_default_str();
	verify->add_option("--order", order, "t-order of the formal map")->capture_default_str();
	verify->callback([&] {
		run = [&] {
			MapSpec spec;
			spec.kind = MapSpec::kind_from_name(map_name);
			spec.params = verify_params.spec();
			spec.order = order;
			if (spec.kind == MapSpec::Kind::table) {
				if (table_path.empty())
					throw UsageError("--map table needs --table FILE");
				spec.table = read_json_file(table_path);
				spec.table_source = table_path;
			}
			return cmd_verify_homomorphism(spec, window, floor);
		};
	});

	// Commands on infinitesimal data (c0, c1, c2).
	ParamOptions c_params;
	std::string branch;
	auto attach_c = [&](CLI::App* cmd) {
		c_params.attach(cmd);
		cmd->add_option("--universal", branch, "Use the universal family at (lambda, mu) on branch plus|minus")
		    ->check(CLI::IsMember({"plus", "minus"}));
	};
	auto c_spec = [&] {
		CSpec c;
		c.params = c_params.spec();
		if (!branch.empty())
			c.universal_branch = branch;
		return c;
	};

	auto* solve = app.add_subcommand("solve-recursion", "Solve the homogeneous identities up to order K");
	attach_c(solve);
	int K = 5;
	solve->add_option("-K,--order", K, "Highest identity order")->capture_default_str();
	solve->callback([&] { run = [&] { return cmd_solve_recursion(c_spec(), K); }; });

	auto* integrability = app.add_subcommand("check-integrability", "Evaluate the integrability polynomial");
	attach_c(integrability);
	integrability->callback([&] { run = [&] { return cmd_check_integrability(c_spec()); }; });

	auto* formal = app.add_subcommand("formal-solve", "Solve the deformation relation order by order in t");
	attach_c(formal);
	int t_order = 3;
	std::vector<std::string> slot_texts;
	bool lambda_family = false;
	formal->add_option("--order", t_order, "Highest t-order")->capture_default_str();
	formal->add_option("--slot", slot_texts, "Free slot alpha^k_j as k,j=value (j in {1, 2})");
	formal->add_flag("--lambda-family", lambda_family, "Use c = (1, 0, 0) with the slots of the lambda family");
	formal->callback([&] {
		run = [&] {
			FreeSlots slots;
			for (const auto& s : slot_texts)
				slots.insert(parse_slot(s));
			return cmd_formal_solve(c_spec(), t_order, slots, lambda_family);
		};
	});

	// Cohomology
	auto* cocycles = app.add_subcommand("cocycle-report", "Cocycle identity and window nontriviality of C0, C1, C2");
	std::string which = "all";
	int cocycle_window = 6;
	cocycles->add_option("--cocycle", which, "0 | 1 | 2 | all")->capture_default_str();
	cocycles->add_option("--window", cocycle_window, "Basis window N")->capture_default_str();
	cocycles->callback([&] {
		run = [&] {
			std::vector<int> list;
			if (which == "all")
				list = {0, 1, 2};
			else if (which == "0" || which == "1" || which == "2")
				list = {which[0] - '0'};
			else
				throw UsageError("--cocycle must be 0, 1, 2 or all");
			return cmd_cocycle_report(list, cocycle_window);
		};
	});

	auto* search = app.add_subcommand("coboundary-search", "Search for F with C(L_m) = {pi(L_m), F} in a window");
	int search_cocycle = -1;
	std::string shift_path;
	WindowSpec spec;
	spec.fourier_window = 6;
	search->add_option("--cocycle", search_cocycle, "Standard cocycle 0 | 1 | 2 (-1: none)")->capture_default_str();
	search->add_option("--shift", shift_path, "Add the coboundary of this Laurent polynomial (JSON)");
	search->add_option("--window", spec.fourier_window, "Basis and Fourier window N")->capture_default_str();
	search->add_option("--grade-min", spec.grade_min, "Lowest grade of F")->capture_default_str();
	search->add_option("--grade-max", spec.grade_max, "Highest grade of F")->capture_default_str();
	search->add_option("--derivative-cap", spec.derivative_cap, "Largest derivative order in the cochain")
	    ->capture_default_str();
	search->callback([&] {
		run = [&] {
			std::optional<TruncatedLaurent> shift;
			if (!shift_path.empty()) {
				try {
					shift = TruncatedLaurent::from_json(read_json_file(shift_path));
				} catch (const nlohmann::json::exception& e) {
					throw UsageError(std::string("malformed shift: ") + e.what());
				}
			}
			return cmd_coboundary_search(search_cocycle, shift, spec);
		};
	});

	// sl2 and central extensions
	auto* moment = app.add_subcommand("moment-map", "sl2 images, Casimir and orbit type");
	ParamOptions moment_params;
	moment_params.attach(moment);
	moment->callback([&] { run = [&] { return cmd_moment_map(moment_params.spec()); }; });

	auto* central = app.add_subcommand("central-extension", "Gelfand-Fuks and averaged Kirillov cocycles");
	ParamOptions central_params;
	central_params.attach(central);
	int depth = 3;
	int max_m = 3;
	central->add_option("--depth", depth, "Evaluation depth of the universal map")->capture_default_str();
	central->add_option("--max-m", max_m, "Largest |m| tabulated")->capture_default_str();
	central->callback([&] { run = [&] { return cmd_central_extension(central_params.spec(), depth, max_m); }; });

	auto* errata = app.add_subcommand("report-errata", "Recompute stated-versus-derived discrepancies");
	errata->callback([&] { run = [] { return cmd_report_errata(); }; });

	try {
		app.parse(argc, argv);
	} catch (const CLI::ParseError& e) {
		const int code = app.exit(e);
		return e.get_exit_code() == 0 ? code : kUsageExit;
	}

	try {
		const VerificationReport report = run();
		std::cout << (text ? report.to_text() : report.to_json().dump(2) + "\n");
		return report.exit_code();
	} catch (const UsageError& e) {
		std::cerr << "vectdeform: " << e.what() << "\n";
		return kUsageExit;
	} catch (const InsufficientDepth& e) {
		std::cerr << "vectdeform: " << e.what() << "\n";
		return kUsageExit;
	} catch (const Error& e) {
		std::cerr << "vectdeform: error: " << e.what() << "\n";
		return 1;
	}
}
