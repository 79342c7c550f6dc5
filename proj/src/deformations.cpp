#include "vectdeform/deformations.hpp"

#include <algorithm>

namespace vectdeform {

namespace {

Integer factorial(int n)
{
	Integer r = 1;
	for (int k = 2; k <= n; ++k)
		r *= k;
	return r;
}

ParamScalar over_factorial(const ParamScalar& p, int n) { return p.div_exact(GaussianRational(Rational(factorial(n)))); }

TruncatedLaurent apply_rules(const std::vector<HomogeneousRule>& rules, const VectorField& X, bool exact,
                             int floor)
{
	TruncatedLaurent r = exact ? TruncatedLaurent(X.f.basis()) : TruncatedLaurent::truncation(floor, X.f.basis());
	for (const auto& rule : rules)
		if (!rule.coefficient.is_zero())
			r.add(rule.grade, X.f.derivative(rule.derivative) * rule.coefficient);
	return r;
}

} // namespace

nlohmann::json HomogeneousRule::to_json() const
{
	return {{"grade", grade}, {"derivative", derivative}, {"coefficient", coefficient.str()}};
}

// ---------------------------------------------------------------------------
// Closed forms

TruncatedLaurent standard_embedding(const VectorField& X) { return TruncatedLaurent::term(1, X.f); }

TruncatedLaurent infinitesimal_embedding(const ParamScalar& c0, const ParamScalar& c1, const ParamScalar& c2,
                                         const VectorField& X)
{
	return DeformationMap::infinitesimal(c0, c1, c2)(X);
}

ParamScalar universal_coefficient(const ParamScalar& lambda, const ParamScalar& mu, int k)
{
	if (k < 0)
		throw Error("universal_coefficient: k must be non-negative");
	const ParamScalar shift = lambda - mu;
	return over_factorial(mu * shift.pow(static_cast<unsigned>(k)), k) +
	       over_factorial(shift.pow(static_cast<unsigned>(k + 1)), k + 1);
}

TruncatedLaurent universal_deformation(const ParamScalar& lambda, const ParamScalar& mu, const VectorField& X,
                                       int floor)
{
	return DeformationMap::universal(lambda, mu, floor)(X);
}

ParamScalar formal_coefficient(const ParamScalar& lambda, int k)
{
	if (k < 0)
		throw Error("formal_coefficient: k must be non-negative");
	if (k == 0)
		return 1;
	// t^k f^{(k)} xi^{1-k} is the grade -(k-1) term of the universal map.
	const ParamScalar t = ParamScalar::var(Var::t);
	const ParamScalar c = universal_coefficient(ParamScalar::var(Var::lambda), ParamScalar::var(Var::mu), k - 1);
	const ParamScalar in_t = c.substitute({{Var::lambda, t}, {Var::mu, ParamScalar::var(Var::lambda) * t}});
	// in_t = coefficient * t^k; strip the power of t, then bind lambda.
	ParamScalar stripped;
	for (const auto& [m, v] : in_t.terms()) {
		auto reduced = m;
		if (reduced[static_cast<std::size_t>(Var::t)] != k)
			throw Error("formal_coefficient: unexpected t-degree in substitution");
		reduced[static_cast<std::size_t>(Var::t)] = 0;
		stripped += ParamScalar::monomial(reduced, v);
	}
	return stripped.substitute_partial({{Var::lambda, lambda}});
}

ParamScalar formal_coefficient_closed(const ParamScalar& lambda, int k)
{
	if (k < 1)
		throw Error("formal_coefficient_closed: k must be >= 1");
	return over_factorial((ParamScalar(1) + ParamScalar(k - 1) * lambda) *
	                          (ParamScalar(1) - lambda).pow(static_cast<unsigned>(k - 1)),
	                      k);
}

ParamScalar formal_coefficient_stated(const ParamScalar& lambda, int k)
{
	if (k < 1)
		throw Error("formal_coefficient_stated: k must be >= 1");
	return over_factorial((ParamScalar(1) - ParamScalar(k - 1) * lambda) *
	                          (ParamScalar(1) - lambda).pow(static_cast<unsigned>(k - 1)),
	                      k);
}

TruncatedLaurent formal_deformation(const ParamScalar& lambda, int t_order, const VectorField& X)
{
	return DeformationMap::formal(lambda, t_order)(X);
}

// ---------------------------------------------------------------------------
// DeformationMap

DeformationMap DeformationMap::standard()
{
	DeformationMap m;
	m.kind_ = Kind::standard;
	m.rules_ = {{1, 0, ParamScalar(1)}};
	return m;
}

DeformationMap DeformationMap::infinitesimal(const ParamScalar& c0, const ParamScalar& c1, const ParamScalar& c2)
{
	DeformationMap m;
	m.kind_ = Kind::infinitesimal;
	m.params_ = {c0, c1, c2};
	m.rules_ = {{1, 0, ParamScalar(1)}, {0, 1, c0}, {-1, 2, c1}, {-2, 3, c2}};
	return m;
}

DeformationMap DeformationMap::universal(const ParamScalar& lambda, const ParamScalar& mu, int floor)
{
	if (floor > 1)
		throw Error("universal deformation: floor must be <= 1");
	DeformationMap m;
	m.kind_ = Kind::universal;
	m.params_ = {lambda, mu};
	m.rules_.push_back({1, 0, ParamScalar(1)});
	if ((lambda - mu).is_zero()) {
		// The argument shift vanishes: f xi + mu f'.
		m.rules_.push_back({0, 1, mu});
		return m;
	}
	for (int k = 0; -k >= floor; ++k)
		m.rules_.push_back({-k, k + 1, universal_coefficient(lambda, mu, k)});
	m.floor_ = floor;
	m.tail_min_derivative_ = -floor + 2;
	return m;
}

DeformationMap DeformationMap::formal(const ParamScalar& lambda, int t_order)
{
	if (t_order < 0)
		throw Error("formal deformation: t_order must be >= 0");
	DeformationMap m;
	m.kind_ = Kind::formal;
	m.params_ = {lambda, ParamScalar(t_order)};
	const ParamScalar t = ParamScalar::var(Var::t);
	for (int k = 0; k <= t_order; ++k)
		m.rules_.push_back({1 - k, k, formal_coefficient(lambda, k) * t.pow(static_cast<unsigned>(k))});
	m.floor_ = 1 - t_order;
	m.tail_min_derivative_ = t_order + 1;
	return m;
}

DeformationMap DeformationMap::table(std::vector<HomogeneousRule> rules, std::optional<int> floor)
{
	DeformationMap m;
	m.kind_ = Kind::table;
	m.rules_ = std::move(rules);
	m.floor_ = floor;
	if (floor)
		for (const auto& r : m.rules_)
			if (r.grade < *floor)
				throw Error("table rule at grade " + std::to_string(r.grade) + " lies below the table floor");
	return m;
}

DeformationMap DeformationMap::from_json(const nlohmann::json& j)
{
	std::vector<HomogeneousRule> rules;
	for (const auto& r : j.at("rules")) {
		const auto& c = r.at("coefficient");
		rules.push_back({r.at("grade").get<int>(), r.at("derivative").get<int>(),
		                 c.is_string() ? ParamScalar::parse(c.get<std::string>()) : ParamScalar(c.get<long>())});
		if (rules.back().derivative < 0)
			throw Error("table rule with negative derivative order");
	}
	std::optional<int> floor;
	if (j.contains("floor") && !j.at("floor").is_null())
		floor = j.at("floor").get<int>();
	return table(std::move(rules), floor);
}

DeformationMap DeformationMap::with_floor(int floor) const
{
	switch (kind_) {
	case Kind::universal:
		return universal(params_[0], params_[1], floor);
	case Kind::gauged:
		return apply_gauge(base_->with_floor(floor), *gauge_);
	case Kind::table:
	case Kind::formal:
		if (floor_ && floor < *floor_)
			throw InsufficientDepth("map is only known down to grade " + std::to_string(*floor_), *floor_);
		return *this;
	default:
		return *this;
	}
}

std::optional<std::pair<VarMask, unsigned>> DeformationMap::weight_truncation() const
{
	if (kind_ == Kind::formal)
		return std::make_pair(mask_of(Var::t), static_cast<unsigned>(1 - *floor_));
	if (kind_ != Kind::gauged)
		return std::nullopt;
	VarMask mask = 0;
	for (const auto& g : gauge_->generators)
		mask |= g.weight.variables();
	unsigned order = gauge_->order;
	if (auto inner = base_->weight_truncation()) {
		mask |= inner->first;
		order = std::min(order, inner->second);
	}
	return std::make_pair(mask, order);
}

TruncatedLaurent DeformationMap::operator()(const VectorField& X) const
{
	if (kind_ != Kind::gauged) {
		bool exact = !floor_.has_value();
		if (!exact && tail_min_derivative_ && X.f.basis() == Basis::polynomial) {
			// Every omitted rule differentiates past the degree of f.
			auto d = X.f.degree();
			if (!d || *d < *tail_min_derivative_)
				exact = true;
		}
		return apply_rules(rules_, X, exact, floor_.value_or(0));
	}

	const auto [mask, order] = *weight_truncation();
	auto cut = [mask = mask, order = order](const ParamScalar& p) { return p.truncate_degree(mask, order); };
	TruncatedLaurent image = (*base_)(X);
	TruncatedLaurent result = image;
	TruncatedLaurent term = image;
	for (unsigned n = 1; n <= order; ++n) {
		TruncatedLaurent next(image.basis());
		bool first = true;
		for (const auto& g : gauge_->generators) {
			TruncatedLaurent piece = poisson_bracket(g.F, term) * g.weight;
			if (first) {
				next = piece;
				first = false;
			} else {
				next += piece;
			}
		}
		term = next.map_coefficients([&](const ParamScalar& p) { return cut(p.div_exact(long(n))); });
		result += term;
	}
	return result.map_coefficients(cut);
}

nlohmann::json DeformationMap::descriptor() const
{
	nlohmann::json j;
	switch (kind_) {
	case Kind::standard:
		j["kind"] = "standard";
		break;
	case Kind::infinitesimal:
		j = {{"kind", "infinitesimal"}, {"c0", params_[0].str()}, {"c1", params_[1].str()}, {"c2", params_[2].str()}};
		break;
	case Kind::universal:
		j = {{"kind", "universal"}, {"lambda", params_[0].str()}, {"mu", params_[1].str()}};
		break;
	case Kind::formal:
		j = {{"kind", "formal"}, {"lambda", params_[0].str()}, {"t_order", params_[1].str()}};
		break;
	case Kind::table: {
		j["kind"] = "table";
		nlohmann::json rules = nlohmann::json::array();
		for (const auto& r : rules_)
			rules.push_back(r.to_json());
		j["rules"] = rules;
		break;
	}
	case Kind::gauged: {
		j["kind"] = "gauged";
		j["base"] = base_->descriptor();
		nlohmann::json gens = nlohmann::json::array();
		for (const auto& g : gauge_->generators)
			gens.push_back({{"weight", g.weight.str()}, {"F", g.F.to_json()}});
		j["generators"] = gens;
		j["order"] = gauge_->order;
		break;
	}
	}
	j["floor"] = floor_ ? nlohmann::json(*floor_) : nlohmann::json(nullptr);
	return j;
}

// ---------------------------------------------------------------------------

TruncatedLaurent homomorphism_defect(const DeformationMap& pi, const VectorField& X, const VectorField& Y,
                                     int check_floor)
{
	TruncatedLaurent defect = poisson_bracket(pi(X), pi(Y)) - pi(vect_bracket(X, Y));
	if (!defect.is_exact() && defect.floor() > check_floor) {
		const int depth = pi.floor().value_or(check_floor);
		throw InsufficientDepth("homomorphism defect is reliable only down to grade " +
		                            std::to_string(defect.floor()) + ", asked for " + std::to_string(check_floor),
		                        depth - (defect.floor() - check_floor));
	}
	if (auto trunc = pi.weight_truncation()) {
		const auto [mask, order] = *trunc;
		defect = defect.map_coefficients([mask = mask, order = order](const ParamScalar& p) {
			return p.truncate_degree(mask, order);
		});
	}
	return defect.truncated(check_floor);
}

DeformationMap apply_gauge(const DeformationMap& pi, const GaugeSeries& gauge)
{
	if (gauge.order < 1)
		throw Error("apply_gauge: exponential order must be >= 1");
	for (const auto& g : gauge.generators) {
		if (!g.F.is_exact())
			throw Error("apply_gauge: gauge generators must be exact Laurent polynomials");
		if (g.weight.size() != 1 || g.weight.total_degree() == 0)
			throw Error("apply_gauge: generator weights must be non-constant monomials");
	}
	if (gauge.generators.empty())
		return pi;
	DeformationMap m;
	m.kind_ = DeformationMap::Kind::gauged;
	m.floor_ = pi.floor_;
	m.base_ = std::make_shared<const DeformationMap>(pi);
	m.gauge_ = std::make_shared<const GaugeSeries>(gauge);
	return m;
}

} // namespace vectdeform
