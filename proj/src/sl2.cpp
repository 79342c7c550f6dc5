#include "vectdeform/sl2.hpp"

namespace vectdeform {

namespace {

VectorField monomial_field(int n) { return {CircleFunction::monomial(n)}; }

TruncatedLaurent poly_term(int grade, int power, const ParamScalar& c)
{
	return TruncatedLaurent::term(grade, CircleFunction::monomial(power, c));
}

} // namespace

nlohmann::json Sl2Triple::to_json() const
{
	return {{"F1", F1.str()}, {"F2", F2.str()}, {"F3", F3.str()}};
}

Sl2Triple sl2_images(const ParamScalar& lambda, const ParamScalar& mu)
{
	// Floor -1 covers every nonzero term: x^2 has no third derivative.
	const DeformationMap pi = DeformationMap::universal(lambda, mu, -1);
	Sl2Triple T{pi(monomial_field(0)), pi(monomial_field(1)), pi(monomial_field(2))};
	for (const auto* F : {&T.F1, &T.F2, &T.F3})
		if (!F->is_exact())
			throw Error("sl2_images: generator image is not a finite Laurent polynomial");
	return T;
}

Sl2Triple sl2_images_stated(const ParamScalar& lambda, const ParamScalar& mu)
{
	Sl2Triple T;
	T.F1 = poly_term(1, 0, 1);
	T.F2 = poly_term(1, 1, 1) + poly_term(0, 0, lambda);
	T.F3 = poly_term(1, 2, 1) + poly_term(0, 1, ParamScalar(2) * lambda) + poly_term(-1, 0, lambda * (lambda - mu));
	return T;
}

bool Sl2ClosureCheck::holds() const
{
	for (const auto& d : defects)
		if (!d.is_zero())
			return false;
	return true;
}

Sl2ClosureCheck sl2_closure(const Sl2Triple& T)
{
	return {{poisson_bracket(T.F1, T.F2) - T.F1, poisson_bracket(T.F1, T.F3) - T.F2 * ParamScalar(2),
	         poisson_bracket(T.F2, T.F3) - T.F3}};
}

ParamScalar casimir(const Sl2Triple& T)
{
	const TruncatedLaurent q = laurent_product(T.F1, T.F3) - laurent_product(T.F2, T.F2);
	if (!q.is_exact())
		throw Error("casimir: triple is not exact");
	ParamScalar value;
	for (const auto& [grade, f] : q.grades()) {
		for (const auto& [power, c] : f.coefficients()) {
			if (grade != 0 || power != 0)
				throw Error("casimir: F1 F3 - F2^2 is not constant (term x^" + std::to_string(power) + " xi^" +
				            std::to_string(grade) + ")");
			value = c;
		}
	}
	return value;
}

std::string_view OrbitClass::tag_name() const
{
	switch (tag) {
	case Tag::cone:
		return "cone";
	case Tag::two_sheet_branch:
		return "two_sheet_branch";
	case Tag::one_sheet:
		return "one_sheet";
	}
	return "";
}

OrbitClass orbit_classify(const Sl2Triple& T)
{
	OrbitClass o;
	o.casimir = casimir(T);
	if (!o.casimir.is_constant())
		throw Error("orbit_classify: Casimir " + o.casimir.str() + " is symbolic; supply numeric parameters");
	if (o.casimir.is_zero())
		return o;
	const GaussianRational v = o.casimir.constant_value();
	if (!v.is_real())
		throw Error("orbit_classify: Casimir " + v.str() + " is not real");
	o.tag = sgn(v.re()) > 0 ? OrbitClass::Tag::two_sheet_branch : OrbitClass::Tag::one_sheet;
	return o;
}

} // namespace vectdeform
