#include "vectdeform/central.hpp"

#include <algorithm>

namespace vectdeform {

std::string_view cycle_name(Cycle c)
{
	switch (c) {
	case Cycle::x_cycle:
		return "x_cycle";
	case Cycle::xi_cycle:
		return "xi_cycle";
	case Cycle::gelfand_fuks:
		return "gelfand_fuks";
	}
	return "";
}

Cycle cycle_from_name(std::string_view name)
{
	for (Cycle c : {Cycle::x_cycle, Cycle::xi_cycle, Cycle::gelfand_fuks})
		if (cycle_name(c) == name)
			return c;
	throw Error("unknown cycle '" + std::string(name) + "' (expected x_cycle, xi_cycle or gelfand_fuks)");
}

nlohmann::json TwoCocycleValue::to_json() const
{
	return {{"cycle", cycle_name(cycle)}, {"m", m}, {"n", n}, {"value", value.str()}};
}

ParamScalar gelfand_fuks(const VectorField& X, const VectorField& Y)
{
	if (X.f.basis() != Basis::fourier || Y.f.basis() != Basis::fourier) {
		if (!X.f.is_zero() || !Y.f.is_zero())
			throw Error("gelfand_fuks: circle integral needs the Fourier basis");
	}
	return (X.f.derivative(1) * Y.f.derivative(2)).mean();
}

ParamScalar kirillov_averaged(const TruncatedLaurent& F, const TruncatedLaurent& G, Cycle cycle)
{
	TruncatedLaurent dG;
	switch (cycle) {
	case Cycle::xi_cycle:
		dG = G.x_derivative();
		break;
	case Cycle::x_cycle:
		dG = G.euler_xi() * ParamScalar::i();
		break;
	default:
		throw Error("kirillov_averaged: cycle must be x_cycle or xi_cycle");
	}
	const TruncatedLaurent product = laurent_product(F, dG);
	if (!product.is_exact() && product.floor() > 0) {
		const int have = std::min(F.is_exact() ? 0 : F.floor(), G.is_exact() ? 0 : G.floor());
		throw InsufficientDepth("grade 0 of F dG is not reliable (product floor " +
		                            std::to_string(product.floor()) + ")",
		                        have - product.floor());
	}
	const CircleFunction g0 = product.grade(0);
	if (g0.basis() != Basis::fourier && !g0.is_zero())
		throw Error("kirillov_averaged: torus average needs the Fourier basis");
	return g0.is_zero() ? ParamScalar() : g0.mean();
}

nlohmann::json CubicFit::to_json() const
{
	return {{"alpha", alpha.str()},
	        {"beta", beta.str()},
	        {"values", {values[0].str(), values[1].str(), values[2].str()}},
	        {"extrapolates", extrapolates}};
}

namespace {

CubicFit fit_from(const std::function<ParamScalar(int)>& value)
{
	CubicFit fit;
	for (int m = 1; m <= 3; ++m)
		fit.values[m - 1] = value(m);
	fit.alpha = (fit.values[1] - fit.values[0] * ParamScalar(2)).div_exact(6);
	fit.beta = fit.values[0] - fit.alpha;
	fit.extrapolates = fit.values[2] == fit.alpha * ParamScalar(27) + fit.beta * ParamScalar(3);
	return fit;
}

} // namespace

CubicFit gelfand_fuks_fit()
{
	return fit_from([](int m) { return gelfand_fuks(basis_field(m), basis_field(-m)); });
}

CubicFit gf_class_fit(const ParamScalar& lambda, const ParamScalar& mu, Cycle cycle, int depth)
{
	if (depth < 1)
		throw Error("gf_class_fit: depth must be >= 1");
	const DeformationMap pi = DeformationMap::universal(lambda, mu, -depth);
	return fit_from([&](int m) { return kirillov_averaged(pi(basis_field(m)), pi(basis_field(-m)), cycle); });
}

ParamScalar gf_class(const CubicFit& fit) { return fit.alpha.div_exact(gelfand_fuks_fit().alpha.constant_value()); }

nlohmann::json CycleRatio::to_json() const
{
	return {{"ratio", ratio ? nlohmann::json(ratio->str()) : nlohmann::json(nullptr)},
	        {"expected", expected.str()},
	        {"matches", matches}};
}

CycleRatio cycle_ratio(const CubicFit& x_fit, const CubicFit& xi_fit, const ParamScalar& mu)
{
	CycleRatio r;
	r.expected = mu.pow(2);
	if (!xi_fit.alpha.is_zero())
		r.ratio = x_fit.alpha.divide(xi_fit.alpha);
	r.matches = r.ratio && *r.ratio == r.expected;
	return r;
}

} // namespace vectdeform
