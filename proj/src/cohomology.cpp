#include "vectdeform/cohomology.hpp"

#include <map>
#include <tuple>

namespace vectdeform {

// ---------------------------------------------------------------------------
// OneCochain

OneCochain OneCochain::from_rules(std::vector<HomogeneousRule> rules, std::string name)
{
	for (const auto& r : rules)
		if (r.derivative < 0)
			throw Error("cochain rule with negative derivative order");
	OneCochain c;
	c.rules_ = rules;
	c.name_ = std::move(name);
	c.rule_ = [rules = std::move(rules)](const VectorField& X) {
		TruncatedLaurent r(X.f.basis());
		for (const auto& rule : rules)
			r.add(rule.grade, X.f.derivative(rule.derivative) * rule.coefficient);
		return r;
	};
	return c;
}

OneCochain OneCochain::from_function(Rule rule, std::string name)
{
	OneCochain c;
	c.rule_ = std::move(rule);
	c.name_ = std::move(name);
	return c;
}

TruncatedLaurent OneCochain::operator()(const VectorField& X) const { return rule_(X); }

bool OneCochain::is_degree_one() const
{
	if (!rules_)
		throw Error("degree check needs a cochain in rule-table form");
	for (const auto& r : *rules_)
		if (!r.coefficient.is_zero() && r.grade + r.derivative != 1)
			return false;
	return true;
}

OneCochain operator+(const OneCochain& a, const OneCochain& b)
{
	const std::string name = a.name_ + " + " + b.name_;
	if (a.rules_ && b.rules_) {
		auto rules = *a.rules_;
		rules.insert(rules.end(), b.rules_->begin(), b.rules_->end());
		return OneCochain::from_rules(std::move(rules), name);
	}
	return OneCochain::from_function([a, b](const VectorField& X) { return a(X) + b(X); }, name);
}

OneCochain operator*(const ParamScalar& c, const OneCochain& a)
{
	const std::string name = "(" + c.str() + ")*" + a.name_;
	if (a.rules_) {
		auto rules = *a.rules_;
		for (auto& r : rules)
			r.coefficient = c * r.coefficient;
		return OneCochain::from_rules(std::move(rules), name);
	}
	return OneCochain::from_function([a, c](const VectorField& X) { return a(X) * c; }, name);
}

// ---------------------------------------------------------------------------
// Standard cocycles and coboundaries

OneCochain standard_cocycle(int which)
{
	if (which < 0 || which > 2)
		throw Error("standard cocycle selector must be 0, 1 or 2, got " + std::to_string(which));
	return OneCochain::from_rules({{-which, which + 1, ParamScalar(1)}}, "C" + std::to_string(which));
}

TruncatedLaurent standard_cocycle(int which, const VectorField& X) { return standard_cocycle(which)(X); }

TruncatedLaurent cocycle_defect(const OneCochain& C, const VectorField& X, const VectorField& Y)
{
	return poisson_bracket(standard_embedding(X), C(Y)) - poisson_bracket(standard_embedding(Y), C(X)) -
	       C(vect_bracket(X, Y));
}

OneCochain zero_cochain_coboundary(const TruncatedLaurent& F)
{
	if (!F.is_exact())
		throw Error("zero_cochain_coboundary: F must be an exact Laurent polynomial");
	return OneCochain::from_function([F](const VectorField& X) { return poisson_bracket(standard_embedding(X), F); },
	                                 "d(" + F.str() + ")");
}

// ---------------------------------------------------------------------------
// Witness search

void WindowSpec::validate() const
{
	if (fourier_window < 0)
		throw Error("window: fourier_window must be >= 0");
	if (grade_min > grade_max)
		throw Error("window: grade_min must not exceed grade_max");
	if (derivative_cap < 0)
		throw Error("window: derivative_cap must be >= 0");
}

nlohmann::json WitnessSearchResult::to_json() const
{
	nlohmann::json j = {{"unknowns", unknowns}, {"equations", equations}, {"rank", rank}, {"mode_bound", mode_bound}};
	j["witness"] = witness ? witness->to_json() : nlohmann::json(nullptr);
	return j;
}

WitnessSearchResult coboundary_witness_search(const OneCochain& C, const WindowSpec& w)
{
	w.validate();
	if (C.rules()) {
		for (const auto& r : *C.rules()) {
			if (r.grade < w.grade_min || r.grade > w.grade_max)
				throw Error("cochain rule at grade " + std::to_string(r.grade) + " lies outside the grade window");
			if (r.derivative > w.derivative_cap)
				throw Error("cochain rule with derivative order " + std::to_string(r.derivative) +
				            " exceeds the derivative cap");
		}
	}

	const int N = w.fourier_window;
	WitnessSearchResult result;
	result.mode_bound = N;

	std::vector<std::pair<int, int>> columns; // (grade, mode)
	for (int g = w.grade_min; g <= w.grade_max; ++g)
		for (int p = -N; p <= N; ++p)
			columns.emplace_back(g, p);

	auto numeric = [](const ParamScalar& s) {
		if (!s.is_constant())
			throw Error("witness search needs numeric cochain values, got " + s.str());
		return s.is_zero() ? GaussianRational() : s.constant_value();
	};

	std::map<std::tuple<int, int, int>, SparseRow> rows; // (m, grade, mode)
	for (int m = -N; m <= N; ++m) {
		const TruncatedLaurent image = standard_embedding(basis_field(m));
		for (std::size_t col = 0; col < columns.size(); ++col) {
			const auto [g, p] = columns[col];
			const TruncatedLaurent B = poisson_bracket(image, TruncatedLaurent::term(g, CircleFunction::mode(p)));
			for (const auto& [grade, f] : B.grades())
				for (const auto& [mode, c] : f.coefficients())
					rows[{m, grade, mode}].entries.emplace_back(col, numeric(c));
		}
		const TruncatedLaurent target = C(basis_field(m));
		if (!target.is_exact())
			throw Error("witness search needs a cochain with exact values");
		for (const auto& [grade, f] : target.grades())
			for (const auto& [mode, c] : f.coefficients())
				rows[{m, grade, mode}].rhs = numeric(c);
	}

	std::vector<SparseRow> system;
	system.reserve(rows.size());
	for (auto& [key, row] : rows)
		system.push_back(std::move(row));

	const LinearSolveResult solved = solve_exact(system, columns.size());
	result.unknowns = columns.size();
	result.equations = system.size();
	result.rank = solved.rank;
	if (!solved.consistent)
		return result;

	TruncatedLaurent F;
	for (std::size_t col = 0; col < columns.size(); ++col)
		if (!solved.solution[col].is_zero())
			F.add(columns[col].first, CircleFunction::mode(columns[col].second, ParamScalar(solved.solution[col])));

	for (int m = -N; m <= N; ++m)
		if (!(poisson_bracket(standard_embedding(basis_field(m)), F) == C(basis_field(m))))
			throw Error("witness search: solution failed verification at L_" + std::to_string(m));
	result.witness = std::move(F);
	return result;
}

HomogeneityCheck homogeneity_filter(const OneCochain& C, const WindowSpec& w)
{
	HomogeneityCheck check;
	check.degree_one = C.is_degree_one();
	if (!check.degree_one)
		check.search = coboundary_witness_search(C, w);
	return check;
}

} // namespace vectdeform
