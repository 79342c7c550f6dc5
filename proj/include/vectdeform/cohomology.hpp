#pragma once

// 1-cochains on vector fields with values in the Laurent algebra (a module
// through the standard embedding), the standard cocycles C0, C1, C2, the
// coboundary of a 0-cochain and a window-bounded search for trivializing
// witnesses.

#include <functional>
#include <optional>

#include "vectdeform/deformations.hpp"
#include "vectdeform/linalg.hpp"

namespace vectdeform {

class OneCochain {
public:
	using Rule = std::function<TruncatedLaurent(const VectorField&)>;

	/// X -> sum coefficient * f^{(derivative)} xi^grade
	static OneCochain from_rules(std::vector<HomogeneousRule> rules, std::string name = {});
	static OneCochain from_function(Rule rule, std::string name);

	TruncatedLaurent operator()(const VectorField& X) const;

	const std::string& name() const { return name_; }
	/// Homogeneous rules when the cochain has a finite table form.
	const std::optional<std::vector<HomogeneousRule>>& rules() const { return rules_; }
	/// Every rule satisfies grade + derivative == 1.
	bool is_degree_one() const;

	friend OneCochain operator+(const OneCochain& a, const OneCochain& b);
	friend OneCochain operator*(const ParamScalar& c, const OneCochain& a);

private:
	Rule rule_;
	std::optional<std::vector<HomogeneousRule>> rules_;
	std::string name_;
};

/// C0: f', C1: f'' xi^-1, C2: f''' xi^-2.
OneCochain standard_cocycle(int which);
TruncatedLaurent standard_cocycle(int which, const VectorField& X);

/// {pi(X), C(Y)} - {pi(Y), C(X)} - C([X, Y]) with pi the standard embedding.
TruncatedLaurent cocycle_defect(const OneCochain& C, const VectorField& X, const VectorField& Y);

/// X -> {pi(X), F}; F must be exact.
OneCochain zero_cochain_coboundary(const TruncatedLaurent& F);

struct WindowSpec {
	/// Basis fields L_m with |m| <= fourier_window.
	int fourier_window = 4;
	int grade_min = -3;
	int grade_max = 1;
	/// Largest derivative order appearing in tested cochain rules.
	int derivative_cap = 4;

	void validate() const;
};

struct WitnessSearchResult {
	/// F with C(L_m) = {pi(L_m), F} for every |m| <= N; nothing when the
	/// finite system is inconsistent.
	std::optional<TruncatedLaurent> witness;
	std::size_t unknowns = 0;
	std::size_t equations = 0;
	std::size_t rank = 0;
	/// Fourier modes of F range over |p| <= mode_bound.
	int mode_bound = 0;

	nlohmann::json to_json() const;
};

/// Exact search for F = sum_{grade, |p|} a_{grade,p} e^{ipx} xi^grade inside
/// the window. The coefficients of C(L_m) must be numeric.
WitnessSearchResult coboundary_witness_search(const OneCochain& C, const WindowSpec& w);

struct HomogeneityCheck {
	bool degree_one = true;
	/// Search run only for cochains of degree other than one, which must be
	/// trivial.
	std::optional<WitnessSearchResult> search;
};

/// Flags table cochains with a rule whose grade + derivative differs from 1
/// and looks for a trivializing witness for them.
HomogeneityCheck homogeneity_filter(const OneCochain& C, const WindowSpec& w);

} // namespace vectdeform
