#pragma once

// Command implementations behind the vectdeform CLI. Every command returns a
// VerificationReport whose JSON form is the single source of truth; the text
// form is a rendering of it.

#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "vectdeform/cohomology.hpp"
#include "vectdeform/recursion.hpp"

namespace vectdeform {

inline constexpr const char* kEngineVersion = "vectdeform 0.1.0";

enum class Verdict { pass, fail, obstruction, erratum_detected };
std::string_view verdict_name(Verdict v);

struct VerificationReport {
	std::string command;
	nlohmann::json inputs = nlohmann::json::object();
	Verdict verdict = Verdict::pass;
	nlohmann::json details = nlohmann::json::object();
	std::string engine_version = kEngineVersion;

	nlohmann::json to_json() const;
	std::string to_text() const;
	/// 0 pass or erratum_detected, 2 fail, 3 obstruction.
	int exit_code() const;
};

/// Malformed command input; the CLI maps it to exit code 4.
class UsageError : public Error {
public:
	using Error::Error;
};

/// Parameter values: bound names take the given value, unbound names stay
/// indeterminates when `symbolic` is set and are an error otherwise.
struct ParamSpec {
	bool symbolic = false;
	ParamScalar::Bindings values;

	/// "lambda=1/2,mu=-3" (Greek letters accepted).
	static ParamSpec parse(std::string_view text, bool symbolic);
	ParamScalar get(Var v) const;
	nlohmann::json to_json() const;
};

struct MapSpec {
	enum class Kind { standard, infinitesimal, universal, formal, table };
	Kind kind = Kind::standard;
	ParamSpec params;
	/// t-order of the formal map.
	int order = 4;
	/// Rule table for Kind::table (see DeformationMap::from_json).
	nlohmann::json table;
	std::string table_source;

	static Kind kind_from_name(std::string_view name);
	nlohmann::json to_json() const;
};

/// Infinitesimal data: c0, c1, c2 from the parameters, or the universal
/// family at (lambda, mu) on the chosen c2 branch ("plus" or "minus").
struct CSpec {
	ParamSpec params;
	std::optional<std::string> universal_branch;

	std::array<ParamScalar, 3> resolve() const;
	nlohmann::json to_json() const;
};

/// Worker count from VECTDEFORM_WORKERS (default: hardware concurrency).
unsigned worker_count();

VerificationReport cmd_verify_homomorphism(const MapSpec& map, int window, int floor);
VerificationReport cmd_solve_recursion(const CSpec& c, int K);
VerificationReport cmd_check_integrability(const CSpec& c);
VerificationReport cmd_formal_solve(const CSpec& c, int t_order, const FreeSlots& slots, bool lambda_family);
VerificationReport cmd_cocycle_report(const std::vector<int>& which, int window);
VerificationReport cmd_coboundary_search(int which, const std::optional<TruncatedLaurent>& shift, const WindowSpec& w);
VerificationReport cmd_moment_map(const ParamSpec& params);
VerificationReport cmd_central_extension(const ParamSpec& params, int depth, int max_m);
VerificationReport cmd_report_errata();

} // namespace vectdeform
