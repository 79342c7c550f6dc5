#include "vectdeform/reports.hpp"

#include <atomic>
#include <cstdlib>
#include <sstream>
#include <thread>

#include "vectdeform/central.hpp"
#include "vectdeform/sl2.hpp"

namespace vectdeform {

std::string_view verdict_name(Verdict v)
{
	switch (v) {
	case Verdict::pass:
		return "pass";
	case Verdict::fail:
		return "fail";
	case Verdict::obstruction:
		return "obstruction";
	case Verdict::erratum_detected:
		return "erratum_detected";
	}
	return "";
}

// ---------------------------------------------------------------------------
// VerificationReport

nlohmann::json VerificationReport::to_json() const
{
	return {{"command", command},
	        {"inputs", inputs},
	        {"verdict", verdict_name(verdict)},
	        {"details", details},
	        {"engine_version", engine_version}};
}

namespace {

void render(std::ostringstream& os, const nlohmann::json& j, int indent)
{
	const std::string pad(static_cast<std::size_t>(indent), ' ');
	if (j.is_object()) {
		for (const auto& [k, v] : j.items()) {
			if (v.is_structured() && !v.empty()) {
				os << pad << k << ":\n";
				render(os, v, indent + 2);
			} else {
				os << pad << k << ": " << (v.is_string() ? v.get<std::string>() : v.dump()) << "\n";
			}
		}
	} else if (j.is_array()) {
		for (const auto& v : j) {
			if (v.is_structured() && !v.empty()) {
				os << pad << "-\n";
				render(os, v, indent + 2);
			} else {
				os << pad << "- " << (v.is_string() ? v.get<std::string>() : v.dump()) << "\n";
			}
		}
	} else {
		os << pad << (j.is_string() ? j.get<std::string>() : j.dump()) << "\n";
	}
}

} // namespace

std::string VerificationReport::to_text() const
{
	std::ostringstream os;
	render(os, to_json(), 0);
	return os.str();
}

int VerificationReport::exit_code() const
{
	switch (verdict) {
	case Verdict::fail:
		return 2;
	case Verdict::obstruction:
		return 3;
	default:
		return 0;
	}
}

// ---------------------------------------------------------------------------
// Inputs

ParamSpec ParamSpec::parse(std::string_view text, bool symbolic)
{
	ParamSpec spec;
	spec.symbolic = symbolic;
	std::size_t pos = 0;
	while (pos < text.size()) {
		std::size_t end = text.find(',', pos);
		if (end == std::string_view::npos)
			end = text.size();
		const std::string_view item = text.substr(pos, end - pos);
		pos = end + 1;
		if (item.empty())
			continue;
		const std::size_t eq = item.find('=');
		if (eq == std::string_view::npos)
			throw UsageError("parameter '" + std::string(item) + "' is not of the form name=value");
		ParamScalar name;
		ParamScalar value;
		try {
			name = ParamScalar::parse(item.substr(0, eq));
			value = ParamScalar::parse(item.substr(eq + 1));
		} catch (const Error& e) {
			throw UsageError("parameter '" + std::string(item) + "': " + e.what());
		}
		std::optional<Var> var;
		for (std::size_t v = 0; v < kNumVars; ++v)
			if (name == ParamScalar::var(static_cast<Var>(v)))
				var = static_cast<Var>(v);
		if (!var)
			throw UsageError("'" + std::string(item.substr(0, eq)) + "' is not a parameter name");
		spec.values[*var] = value;
	}
	return spec;
}

ParamScalar ParamSpec::get(Var v) const
{
	auto it = values.find(v);
	if (it != values.end())
		return it->second;
	if (symbolic)
		return ParamScalar::var(v);
	throw UsageError("no value for parameter '" + std::string(var_name(v)) + "' (pass --params or --symbolic)");
}

nlohmann::json ParamSpec::to_json() const
{
	nlohmann::json bound = nlohmann::json::object();
	for (const auto& [v, value] : values)
		bound[std::string(var_name(v))] = value.str();
	return {{"symbolic", symbolic}, {"values", bound}};
}

MapSpec::Kind MapSpec::kind_from_name(std::string_view name)
{
	if (name == "standard")
		return Kind::standard;
	if (name == "infinitesimal")
		return Kind::infinitesimal;
	if (name == "universal")
		return Kind::universal;
	if (name == "formal")
		return Kind::formal;
	if (name == "table")
		return Kind::table;
	throw UsageError("unknown map '" + std::string(name) +
	                 "' (expected standard, infinitesimal, universal, formal or table)");
}

nlohmann::json MapSpec::to_json() const
{
	static const char* names[] = {"standard", "infinitesimal", "universal", "formal", "table"};
	nlohmann::json j = {{"kind", names[static_cast<int>(kind)]}, {"params", params.to_json()}};
	if (kind == Kind::formal)
		j["order"] = order;
	if (kind == Kind::table) {
		j["table"] = table;
		j["table_source"] = table_source;
	}
	return j;
}

std::array<ParamScalar, 3> CSpec::resolve() const
{
	if (!universal_branch)
		return {params.get(Var::c0), params.get(Var::c1), params.get(Var::c2)};
	const ParamScalar lambda = params.get(Var::lambda);
	const ParamScalar mu = params.get(Var::mu);
	auto c = universal_parameters(lambda, mu);
	if (*universal_branch == "minus")
		c[2] = c2_branches(lambda, mu).minus;
	else if (*universal_branch != "plus")
		throw UsageError("universal branch must be 'plus' or 'minus'");
	return c;
}

nlohmann::json CSpec::to_json() const
{
	nlohmann::json j = {{"params", params.to_json()}};
	j["universal_branch"] = universal_branch ? nlohmann::json(*universal_branch) : nlohmann::json(nullptr);
	return j;
}

unsigned worker_count()
{
	if (const char* env = std::getenv("VECTDEFORM_WORKERS")) {
		char* end = nullptr;
		const long n = std::strtol(env, &end, 10);
		if (end != env && *end == '\0' && n >= 1)
			return static_cast<unsigned>(std::min(n, 256L));
	}
	return std::max(1u, std::thread::hardware_concurrency());
}

namespace {

// Runs fn(i) for i < n on the configured workers; results keep index order,
// and the first exception (by index) is rethrown.
template <class Fn>
auto parallel_map(std::size_t n, Fn fn) -> std::vector<decltype(fn(std::size_t{}))>
{
	using R = decltype(fn(std::size_t{}));
	std::vector<std::optional<R>> slots(n);
	std::vector<std::exception_ptr> errors(n);
	std::atomic<std::size_t> next{0};
	auto work = [&] {
		for (std::size_t i = next++; i < n; i = next++) {
			try {
				slots[i] = fn(i);
			} catch (...) {
				errors[i] = std::current_exception();
			}
		}
	};
	const unsigned workers = static_cast<unsigned>(std::min<std::size_t>(worker_count(), n));
	std::vector<std::thread> pool;
	for (unsigned w = 1; w < workers; ++w)
		pool.emplace_back(work);
	work();
	for (auto& t : pool)
		t.join();
	for (auto& e : errors)
		if (e)
			std::rethrow_exception(e);
	std::vector<R> out;
	out.reserve(n);
	for (auto& s : slots)
		out.push_back(std::move(*s));
	return out;
}

std::vector<std::pair<int, int>> basis_pairs(int window)
{
	std::vector<std::pair<int, int>> pairs;
	for (int m = -window; m <= window; ++m)
		for (int n = -window; n <= window; ++n)
			pairs.emplace_back(m, n);
	return pairs;
}

nlohmann::json grades_json(const TruncatedLaurent& t)
{
	nlohmann::json g = nlohmann::json::object();
	for (const auto& [k, f] : t.grades())
		g[std::to_string(k)] = f.to_json();
	return g;
}

DeformationMap build_map(const MapSpec& spec, int floor)
{
	switch (spec.kind) {
	case MapSpec::Kind::standard:
		return DeformationMap::standard();
	case MapSpec::Kind::infinitesimal:
		return DeformationMap::infinitesimal(spec.params.get(Var::c0), spec.params.get(Var::c1),
		                                     spec.params.get(Var::c2));
	case MapSpec::Kind::universal:
		if (floor > 1)
			throw UsageError("floor must be <= 1");
		return DeformationMap::universal(spec.params.get(Var::lambda), spec.params.get(Var::mu), floor);
	case MapSpec::Kind::formal:
		if (spec.order < 0)
			throw UsageError("formal order must be >= 0");
		return DeformationMap::formal(spec.params.get(Var::lambda), spec.order);
	case MapSpec::Kind::table:
		try {
			return DeformationMap::from_json(spec.table);
		} catch (const nlohmann::json::exception& e) {
			throw UsageError(std::string("malformed table: ") + e.what());
		}
	}
	throw UsageError("unknown map kind");
}

} // namespace

// ---------------------------------------------------------------------------
// verify-homomorphism

VerificationReport cmd_verify_homomorphism(const MapSpec& spec, int window, int floor)
{
	if (window < 0)
		throw UsageError("window must be >= 0");
	VerificationReport r;
	r.command = "verify-homomorphism";
	r.inputs = {{"map", spec.to_json()}, {"window", window}, {"floor", floor}};

	const DeformationMap pi = build_map(spec, floor);
	int check_floor = floor;
	if (pi.kind() == DeformationMap::Kind::formal && pi.floor() && check_floor < *pi.floor()) {
		// Grades below 1 - order carry only powers of t beyond the order.
		check_floor = *pi.floor();
	}
	const auto pairs = basis_pairs(window);
	const auto defects = parallel_map(pairs.size(), [&](std::size_t i) {
		return homomorphism_defect(pi, basis_field(pairs[i].first), basis_field(pairs[i].second), check_floor);
	});

	nlohmann::json bad = nlohmann::json::array();
	std::optional<int> first_bad;
	for (std::size_t i = 0; i < pairs.size(); ++i) {
		if (defects[i].is_zero())
			continue;
		const int top = defects[i].grades().rbegin()->first;
		first_bad = first_bad ? std::max(*first_bad, top) : top;
		bad.push_back({{"m", pairs[i].first}, {"n", pairs[i].second}, {"grades", grades_json(defects[i])}});
	}
	r.details = {{"map", pi.descriptor()},
	             {"pairs_checked", pairs.size()},
	             {"check_floor", check_floor},
	             {"nonzero_defects", bad},
	             {"first_bad_grade", first_bad ? nlohmann::json(*first_bad) : nlohmann::json(nullptr)}};
	r.verdict = first_bad ? Verdict::fail : Verdict::pass;
	return r;
}

// ---------------------------------------------------------------------------
// Recursion commands

VerificationReport cmd_solve_recursion(const CSpec& c, int K)
{
	if (K < 3)
		throw UsageError("K must be >= 3");
	VerificationReport r;
	r.command = "solve-recursion";
	r.inputs = {{"c", c.to_json()}, {"K", K}};

	const auto [c0, c1, c2] = c.resolve();
	const ObstructionReport rep = homogeneous_solve(c0, c1, c2, K);

	nlohmann::json identities = nlohmann::json::object();
	for (int k = 3; k <= K; ++k) {
		nlohmann::json eqs = nlohmann::json::array();
		for (const auto& e : expand_identity(k))
			eqs.push_back(e.str(k));
		identities[std::to_string(k)] = eqs;
	}
	r.details = to_json(rep);
	r.details["c"] = {c0.str(), c1.str(), c2.str()};
	r.details["identities"] = identities;
	r.verdict = rep.obstructed() ? Verdict::obstruction : Verdict::pass;

	if (c.universal_branch && *c.universal_branch == "plus") {
		const ParamScalar lambda = c.params.get(Var::lambda);
		const ParamScalar mu = c.params.get(Var::mu);
		bool all = true;
		nlohmann::json cmp = nlohmann::json::object();
		for (const auto& [k, p] : rep.solved.P) {
			if (k < 3)
				continue;
			const bool same = p == universal_coefficient(lambda, mu, k);
			all = all && same;
			cmp["P" + std::to_string(k)] = same;
		}
		r.details["matches_universal_coefficients"] = cmp;
		if (!all && r.verdict == Verdict::pass)
			r.verdict = Verdict::fail;
	}
	return r;
}

VerificationReport cmd_check_integrability(const CSpec& c)
{
	VerificationReport r;
	r.command = "check-integrability";
	r.inputs = {{"c", c.to_json()}};

	const auto [c0, c1, c2] = c.resolve();
	const ParamScalar E = integrability_lhs(c0, c1, c2);
	const auto tilde = tilde_coordinates(c0, c1, c2);
	const auto stated = tilde_coordinates_stated(c0, c1, c2);
	r.details = {
	    {"c", {c0.str(), c1.str(), c2.str()}},
	    {"integrability_lhs", E.str()},
	    {"tilde", {{"c1", tilde.c1.str()}, {"c2", tilde.c2.str()}}},
	    {"tilde_relation", (tilde.c2.pow(2) - tilde.c1.pow(3)).str()},
	    {"tilde_relation_equals_lhs", tilde.c2.pow(2) - tilde.c1.pow(3) == E},
	    {"tilde_stated", {{"c1", stated.c1.str()}, {"c2", stated.c2.str()}}},
	    {"tilde_stated_relation", (stated.c1.pow(3) + stated.c2.pow(2)).str()},
	};
	if (c.universal_branch) {
		const auto b = c2_branches(c.params.get(Var::lambda), c.params.get(Var::mu));
		r.details["c2_branches"] = {{"plus", b.plus.str()}, {"minus", b.minus.str()}};
	}
	r.verdict = E.is_zero() ? Verdict::pass : Verdict::obstruction;
	return r;
}

VerificationReport cmd_formal_solve(const CSpec& c, int t_order, const FreeSlots& slots, bool lambda_family)
{
	if (t_order < 2)
		throw UsageError("t-order must be >= 2");
	VerificationReport r;
	r.command = "formal-solve";
	nlohmann::json slot_json = nlohmann::json::object();
	for (const auto& [kj, v] : slots)
		slot_json["alpha^" + std::to_string(kj.first) + "_" + std::to_string(kj.second)] = v.str();
	r.inputs = {{"c", c.to_json()}, {"t_order", t_order}, {"slots", slot_json}, {"lambda_family", lambda_family}};

	std::array<ParamScalar, 3> cs;
	FreeSlots used = slots;
	ParamScalar lambda;
	if (lambda_family) {
		lambda = c.params.get(Var::lambda);
		cs = {ParamScalar(1), ParamScalar(), ParamScalar()};
		for (auto& [kj, v] : lambda_family_slots(lambda))
			used.try_emplace(kj, v);
	} else {
		cs = c.resolve();
	}
	const FormalObstructionReport rep = formal_solve(cs[0], cs[1], cs[2], t_order, used);
	r.details = to_json(rep);
	r.details["c"] = {cs[0].str(), cs[1].str(), cs[2].str()};

	// Every solved alpha^k_j with j >= k must vanish.
	bool lower_triangular = true;
	for (const auto& [kj, v] : rep.solved.alpha)
		if (kj.second >= kj.first && !v.is_zero())
			lower_triangular = false;
	r.details["alpha_vanishes_for_j_ge_k"] = lower_triangular;
	r.verdict = rep.obstructed() ? Verdict::obstruction : (lower_triangular ? Verdict::pass : Verdict::fail);

	if (lambda_family) {
		bool all = true;
		nlohmann::json cmp = nlohmann::json::object();
		for (int k = 1; k <= rep.solved.max_order; ++k) {
			const bool same = rep.solved.at(k, k - 1) == formal_coefficient(lambda, k);
			all = all && same;
			cmp[std::to_string(k)] = same;
		}
		r.details["matches_formal_coefficients"] = cmp;
		if (!all && r.verdict == Verdict::pass)
			r.verdict = Verdict::fail;
	}
	return r;
}

// ---------------------------------------------------------------------------
// Cohomology commands

VerificationReport cmd_cocycle_report(const std::vector<int>& which, int window)
{
	if (window < 0)
		throw UsageError("window must be >= 0");
	VerificationReport r;
	r.command = "cocycle-report";
	r.inputs = {{"cocycles", which}, {"window", window}};

	bool ok = true;
	nlohmann::json per = nlohmann::json::object();
	const auto pairs = basis_pairs(window);
	for (int w : which) {
		if (w < 0 || w > 2)
			throw UsageError("cocycle selector must be 0, 1 or 2");
		const OneCochain C = standard_cocycle(w);
		const auto defects = parallel_map(pairs.size(), [&](std::size_t i) {
			return cocycle_defect(C, basis_field(pairs[i].first), basis_field(pairs[i].second));
		});
		nlohmann::json bad = nlohmann::json::array();
		for (std::size_t i = 0; i < pairs.size(); ++i)
			if (!defects[i].is_zero())
				bad.push_back({{"m", pairs[i].first}, {"n", pairs[i].second}, {"grades", grades_json(defects[i])}});
		WindowSpec spec;
		spec.fourier_window = window;
		const WitnessSearchResult search = coboundary_witness_search(C, spec);
		const bool nontrivial = !search.witness.has_value();
		ok = ok && bad.empty() && nontrivial;
		per[C.name()] = {{"pairs_checked", pairs.size()},
		                 {"nonzero_defects", bad},
		                 {"search", search.to_json()},
		                 {"nontrivial_within_window", nontrivial}};
	}
	r.details = {{"cocycles", per},
	             {"scope", "nontriviality is certified only within the finite window (exact rank of the finite "
	                       "system)"}};
	r.verdict = ok ? Verdict::pass : Verdict::fail;
	return r;
}

VerificationReport cmd_coboundary_search(int which, const std::optional<TruncatedLaurent>& shift,
                                         const WindowSpec& w)
{
	VerificationReport r;
	r.command = "coboundary-search";
	r.inputs = {{"cocycle", which},
	            {"shift", shift ? shift->to_json() : nlohmann::json(nullptr)},
	            {"window",
	             {{"fourier_window", w.fourier_window},
	              {"grade_min", w.grade_min},
	              {"grade_max", w.grade_max},
	              {"derivative_cap", w.derivative_cap}}}};
	try {
		w.validate();
	} catch (const Error& e) {
		throw UsageError(e.what());
	}
	if (which < -1 || which > 2)
		throw UsageError("cocycle selector must be 0, 1, 2 (or -1 for none)");
	if (which < 0 && !shift)
		throw UsageError("nothing to search: give a cocycle or a shift");
	if (shift && !shift->is_exact())
		throw UsageError("shift must be an exact Laurent polynomial");

	std::optional<OneCochain> C;
	if (which >= 0)
		C = standard_cocycle(which);
	if (shift) {
		const OneCochain d = zero_cochain_coboundary(*shift);
		C = C ? *C + d : d;
	}
	const WitnessSearchResult search = coboundary_witness_search(*C, w);
	r.details = {{"cochain", C->name()},
	             {"search", search.to_json()},
	             {"trivial_within_window", search.witness.has_value()}};
	r.verdict = Verdict::pass;
	return r;
}

// ---------------------------------------------------------------------------
// sl2 and central extensions

VerificationReport cmd_moment_map(const ParamSpec& params)
{
	VerificationReport r;
	r.command = "moment-map";
	r.inputs = {{"params", params.to_json()}};

	const ParamScalar lambda = params.get(Var::lambda);
	const ParamScalar mu = params.get(Var::mu);
	const Sl2Triple T = sl2_images(lambda, mu);
	const Sl2Triple S = sl2_images_stated(lambda, mu);
	const bool closure = sl2_closure(T).holds();
	const ParamScalar derived = casimir(T);
	const ParamScalar stated_triple = casimir(S);
	const ParamScalar stated = lambda * mu;

	r.details = {{"triple", T.to_json()},
	             {"closure", closure},
	             {"casimir", derived.str()},
	             {"stated_triple", S.to_json()},
	             {"stated_triple_closure", sl2_closure(S).holds()},
	             {"stated_triple_casimir", stated_triple.str()},
	             {"stated_casimir", stated.str()},
	             {"F3_grade_minus_one", {{"derived", T.F3.grade(-1).coefficient(0).str()},
	                                     {"stated", S.F3.grade(-1).coefficient(0).str()}}}};
	if (derived.is_constant()) {
		const OrbitClass o = orbit_classify(T);
		r.details["orbit"] = o.tag_name();
	} else {
		r.details["orbit"] = nullptr;
		r.details["orbit_note"] = "classification needs numeric parameters";
	}
	r.details["trichotomy_note"] = "derived: cone iff mu = 0, otherwise the sign of -mu^2 decides; the stated "
	                               "trichotomy is in terms of lambda*mu";
	if (!closure)
		r.verdict = Verdict::fail;
	else
		r.verdict = derived == stated ? Verdict::pass : Verdict::erratum_detected;
	return r;
}

VerificationReport cmd_central_extension(const ParamSpec& params, int depth, int max_m)
{
	if (depth < 1)
		throw UsageError("depth must be >= 1");
	if (max_m < 1)
		throw UsageError("max m must be >= 1");
	VerificationReport r;
	r.command = "central-extension";
	r.inputs = {{"params", params.to_json()}, {"depth", depth}, {"max_m", max_m}};

	const ParamScalar lambda = params.get(Var::lambda);
	const ParamScalar mu = params.get(Var::mu);
	const DeformationMap pi = DeformationMap::universal(lambda, mu, -depth);

	nlohmann::json table = nlohmann::json::array();
	bool off_diagonal_zero = true;
	for (int m = -max_m; m <= max_m; ++m) {
		for (int n = -max_m; n <= max_m; ++n) {
			const TruncatedLaurent F = pi(basis_field(m));
			const TruncatedLaurent G = pi(basis_field(n));
			const ParamScalar gf = gelfand_fuks(basis_field(m), basis_field(n));
			const ParamScalar xi = kirillov_averaged(F, G, Cycle::xi_cycle);
			const ParamScalar x = kirillov_averaged(F, G, Cycle::x_cycle);
			if (m + n != 0) {
				off_diagonal_zero = off_diagonal_zero && gf.is_zero() && xi.is_zero() && x.is_zero();
				continue;
			}
			for (const auto& v : {TwoCocycleValue{gf, m, n, Cycle::gelfand_fuks},
			                      TwoCocycleValue{xi, m, n, Cycle::xi_cycle},
			                      TwoCocycleValue{x, m, n, Cycle::x_cycle}})
				table.push_back(v.to_json());
		}
	}

	const CubicFit gf = gelfand_fuks_fit();
	const CubicFit xi = gf_class_fit(lambda, mu, Cycle::xi_cycle, depth);
	const CubicFit x = gf_class_fit(lambda, mu, Cycle::x_cycle, depth);
	const CycleRatio ratio = cycle_ratio(x, xi, mu);
	const bool extrapolates = gf.extrapolates && xi.extrapolates && x.extrapolates;

	r.details = {{"values", table},
	             {"off_diagonal_zero", off_diagonal_zero},
	             {"fits",
	              {{"gelfand_fuks", gf.to_json()}, {"xi_cycle", xi.to_json()}, {"x_cycle", x.to_json()}}},
	             {"class", {{"xi_cycle", gf_class(xi).str()}, {"x_cycle", gf_class(x).str()}}},
	             {"class_stated", {{"xi_cycle", "lambda^2"}, {"x_cycle", "lambda^2*mu^2"}}},
	             {"ratio", ratio.to_json()},
	             {"averaging",
	              "values are the (x-mode 0, xi-grade 0) coefficient of F dG, i.e. the cycle integral averaged over "
	              "the transverse coordinate"}};
	if (!off_diagonal_zero || !extrapolates)
		r.verdict = Verdict::fail;
	else
		r.verdict = ratio.matches ? Verdict::pass : Verdict::erratum_detected;
	return r;
}

// ---------------------------------------------------------------------------
// report-errata

VerificationReport cmd_report_errata()
{
	VerificationReport r;
	r.command = "report-errata";
	const ParamScalar lambda = ParamScalar::var(Var::lambda);
	const ParamScalar mu = ParamScalar::var(Var::mu);
	nlohmann::json entries = nlohmann::json::object();
	bool any = false;
	auto entry = [&](const std::string& key, const nlohmann::json& stated, const nlohmann::json& derived,
	                 bool agree, const std::string& note) {
		entries[key] = {{"stated", stated}, {"derived", derived}, {"agree", agree}, {"note", note}};
		any = any || !agree;
	};

	{
		const ParamScalar stated = formal_coefficient_stated(lambda, 2);
		const ParamScalar derived = formal_coefficient(lambda, 2);
		bool closed_ok = true;
		for (int k = 1; k <= 12; ++k)
			closed_ok = closed_ok && formal_coefficient(lambda, k) == formal_coefficient_closed(lambda, k);
		entry("formal_coefficient_sign", stated.str(), derived.str(), stated == derived,
		      std::string("k = 2 coefficient of t^k f^(k) xi^(1-k); derived by substituting lambda -> t, mu -> "
		                  "lambda t; closed form (1+(k-1)lambda)(1-lambda)^(k-1)/k! agrees for k <= 12: ") +
		          (closed_ok ? "yes" : "no"));
	}
	{
		const auto c = universal_parameters(lambda, mu);
		const auto derived = tilde_coordinates(c[0], c[1], c[2]);
		const auto stated = tilde_coordinates_stated(c[0], c[1], c[2]);
		entry("tilde_constant_term",
		      {{"c2_tilde", stated.c2.str()}, {"relation c1~^3 + c2~^2", (stated.c1.pow(3) + stated.c2.pow(2)).str()}},
		      {{"c2_tilde", derived.c2.str()}, {"relation c2~^2 - c1~^3", (derived.c2.pow(2) - derived.c1.pow(3)).str()}},
		      stated.c2 == derived.c2,
		      "evaluated on the universal family; the constant term of c2~ must be c0^3 for c2~ = mu^3");
	}
	{
		const Sl2Triple T = sl2_images(lambda, mu);
		const Sl2Triple S = sl2_images_stated(lambda, mu);
		const ParamScalar derived = casimir(T);
		entry("sl2_casimir",
		      {{"casimir", (lambda * mu).str()},
		       {"F3_grade_minus_one", S.F3.grade(-1).coefficient(0).str()},
		       {"casimir_of_stated_triple", casimir(S).str()}},
		      {{"casimir", derived.str()}, {"F3_grade_minus_one", T.F3.grade(-1).coefficient(0).str()}},
		      derived == lambda * mu, "F1 F3 - F2^2 from the universal deformation images");
	}
	{
		const CubicFit xi = gf_class_fit(lambda, mu, Cycle::xi_cycle, 2);
		const CubicFit x = gf_class_fit(lambda, mu, Cycle::x_cycle, 2);
		const ParamScalar cxi = gf_class(xi);
		const ParamScalar cx = gf_class(x);
		entry("kirillov_proportionality", {{"xi_cycle", (lambda * lambda).str()}, {"x_cycle", (lambda * lambda * mu * mu).str()}},
		      {{"xi_cycle", cxi.str()}, {"x_cycle", cx.str()}},
		      cxi == lambda * lambda && cx == lambda * lambda * mu * mu,
		      "Gelfand-Fuks class of the transverse-averaged cocycles on universal deformation images");
	}
	{
		// Total derivative order of the monomials matched in identity 3.
		const auto eqs = expand_identity(3);
		const int order = eqs.front().f_order + eqs.front().g_order;
		entry("identity_derivative_index", "(fg'-f'g)^(k), total derivative order k+1",
		      "(fg'-f'g)^(k+1), total derivative order k+" + std::to_string(order - 3), order == 3 + 1,
		      "derived from the homomorphism relation; reproduces 2P3 = 2P0P2 - P1^2, 5P4, 9P5 and 5P5");
	}
	r.details = {{"entries", entries}};
	r.verdict = any ? Verdict::erratum_detected : Verdict::pass;
	return r;
}

} // namespace vectdeform
