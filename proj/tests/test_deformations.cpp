#include <doctest.h>

#include "vectdeform/deformations.hpp"

using namespace vectdeform;

namespace {

const ParamScalar lambda = ParamScalar::var(Var::lambda);
const ParamScalar mu = ParamScalar::var(Var::mu);
const ParamScalar t = ParamScalar::var(Var::t);
const ParamScalar c0 = ParamScalar::var(Var::c0);
const ParamScalar c1 = ParamScalar::var(Var::c1);
const ParamScalar c2 = ParamScalar::var(Var::c2);
const ParamScalar I = ParamScalar::i();

TruncatedLaurent mono(int grade, int mode, const ParamScalar& c = 1)
{
	return TruncatedLaurent::term(grade, CircleFunction::mode(mode, c));
}

TruncatedLaurent poly(int grade, int power, const ParamScalar& c = 1)
{
	return TruncatedLaurent::term(grade, CircleFunction::monomial(power, c));
}

ParamScalar factorial(int n)
{
	ParamScalar r(1);
	for (int k = 2; k <= n; ++k)
		r = r * ParamScalar(k);
	return r;
}

bool defect_vanishes(const DeformationMap& pi, int window, int check_floor)
{
	for (int m = -window; m <= window; ++m)
		for (int n = -window; n <= window; ++n)
			if (!homomorphism_defect(pi, basis_field(m), basis_field(n), check_floor).is_zero())
				return false;
	return true;
}

} // namespace

TEST_CASE("standard embedding")
{
	CHECK(standard_embedding({CircleFunction::monomial(0)}) == poly(1, 0));
	CHECK(standard_embedding({CircleFunction::monomial(1)}) == poly(1, 1));
	CHECK(standard_embedding({CircleFunction()}).is_zero());
	CHECK(standard_embedding({CircleFunction::mode(2)}).is_exact());
}

TEST_CASE("infinitesimal embedding")
{
	const VectorField x2{CircleFunction::monomial(2)};
	CHECK(infinitesimal_embedding(c0, c1, c2, x2) == poly(1, 2) + poly(0, 1, ParamScalar(2) * c0) + poly(-1, 0, ParamScalar(2) * c1));
	const VectorField e{CircleFunction::mode(1)};
	CHECK(infinitesimal_embedding(c0, c1, c2, e) ==
	      mono(1, 1) + mono(0, 1, I * c0) + mono(-1, 1, -c1) + mono(-2, 1, -(I * c2)));
	CHECK(infinitesimal_embedding(0, 0, 0, e) == standard_embedding(e));
}

TEST_CASE("universal deformation coefficients")
{
	CHECK(universal_coefficient(lambda, mu, 0) == lambda);
	CHECK(universal_coefficient(lambda, mu, 1) == ParamScalar::parse("1/2*lambda^2 - 1/2*mu^2"));
	for (int k = 0; k <= 8; ++k)
		CHECK(universal_coefficient(lambda, 0, k) == lambda.pow(k + 1).div_exact(factorial(k + 1).constant_value()));

	const VectorField X{CircleFunction::monomial(5)};
	const TruncatedLaurent U = universal_deformation(lambda, mu, X, -3);
	CHECK_FALSE(U.is_exact());
	CHECK(U.floor() == -3);
	CHECK(U.grade(1) == X.f);
	CHECK(U.grade(0) == X.f.derivative() * lambda);
	CHECK(U.grade(-2) == X.f.derivative(3) * universal_coefficient(lambda, mu, 2));

	const TruncatedLaurent diagonal = universal_deformation(mu, mu, X, -10);
	CHECK(diagonal.is_exact());
	CHECK(diagonal == poly(1, 5) + poly(0, 4, ParamScalar(5) * mu));
}

TEST_CASE("mirror symmetry of the low grades")
{
	const VectorField X = basis_field(3);
	const TruncatedLaurent a = universal_deformation(lambda, mu, X, -1);
	const TruncatedLaurent b = universal_deformation(lambda, -mu, X, -1);
	CHECK(a == b);
}

TEST_CASE("formal coefficients")
{
	CHECK(formal_coefficient(lambda, 0) == ParamScalar(1));
	CHECK(formal_coefficient(lambda, 1) == ParamScalar(1));
	CHECK(formal_coefficient(lambda, 2) == ParamScalar::parse("1/2 - 1/2*lambda^2"));
	CHECK_FALSE(formal_coefficient(lambda, 2) == formal_coefficient_stated(lambda, 2));
	for (int k = 1; k <= 12; ++k) {
		CHECK(formal_coefficient(lambda, k) == formal_coefficient_closed(lambda, k));
		CHECK(formal_coefficient(0, k) == ParamScalar(1).div_exact(factorial(k).constant_value()));
	}

	const VectorField X{CircleFunction::monomial(4)};
	const TruncatedLaurent F = formal_deformation(lambda, 3, X);
	CHECK(F.grade(1) == X.f);
	CHECK(F.grade(0) == X.f.derivative() * t);
	CHECK(F.grade(-2) == X.f.derivative(3) * t.pow(3) * formal_coefficient(lambda, 3));
}

TEST_CASE("homomorphism defect")
{
	CHECK(defect_vanishes(DeformationMap::standard(), 3, -5));
	CHECK(defect_vanishes(DeformationMap::universal(lambda, mu, -8), 3, -7));
	CHECK(defect_vanishes(DeformationMap::infinitesimal(c0, 0, 0), 3, -8));

	const DeformationMap bad = DeformationMap::infinitesimal(0, 0, 1);
	bool seen = false;
	for (int m = -3; m <= 3 && !seen; ++m)
		for (int n = -3; n <= 3 && !seen; ++n) {
			// {f''' xi^-2, g''' xi^-2} sits at grade -5.
			const TruncatedLaurent d = homomorphism_defect(bad, basis_field(m), basis_field(n), -5);
			seen = !d.grade(-5).is_zero();
			CHECK(d.top().value_or(-10) <= -5);
		}
	CHECK(seen);

	// Grades below 1 - order of a formal map are unknown.
	const DeformationMap formal = DeformationMap::formal(lambda, 4);
	CHECK(defect_vanishes(formal, 2, -3));
	CHECK_THROWS_AS(homomorphism_defect(DeformationMap::universal(lambda, mu, -2), basis_field(1), basis_field(2), -6),
	                InsufficientDepth);
}

TEST_CASE("insufficient depth reports the required floor")
{
	try {
		homomorphism_defect(DeformationMap::universal(lambda, mu, -2), basis_field(1), basis_field(2), -6);
		FAIL("expected InsufficientDepth");
	} catch (const InsufficientDepth& e) {
		CHECK(e.required_floor() <= -6);
		CHECK(homomorphism_defect(DeformationMap::universal(lambda, mu, e.required_floor()), basis_field(1),
		                          basis_field(2), -6)
		          .is_zero());
	}
	CHECK_THROWS_AS(DeformationMap::formal(lambda, 3).with_floor(-6), InsufficientDepth);
}

TEST_CASE("polynomial fields of low degree evaluate exactly")
{
	const DeformationMap U = DeformationMap::universal(lambda, mu, -2);
	const TruncatedLaurent x = U({CircleFunction::monomial(1)});
	CHECK(x.is_exact());
	CHECK(x == poly(1, 1) + poly(0, 0, lambda));
}

TEST_CASE("rule tables")
{
	const DeformationMap table = DeformationMap::from_json(nlohmann::json::parse(R"({
		"rules": [{"grade": 1, "derivative": 0, "coefficient": "1"},
		          {"grade": 0, "derivative": 1, "coefficient": "lambda"}]})"));
	CHECK_FALSE(table.floor().has_value());
	CHECK(defect_vanishes(table, 3, -6));
	CHECK_THROWS_AS(DeformationMap::table({{-3, 4, 1}}, -2), Error);
}

TEST_CASE("linearity")
{
	const DeformationMap U = DeformationMap::universal(lambda, mu, -4);
	const VectorField X = basis_field(2);
	const VectorField Y = basis_field(-3);
	const ParamScalar a = ParamScalar::parse("2/3 + i");
	CHECK(U(X + Y * a) == U(X) + U(Y) * a);
}

TEST_CASE("gauge transformations")
{
	const DeformationMap pi = DeformationMap::standard();
	CHECK(apply_gauge(pi, {{}, 2}).kind() == DeformationMap::Kind::standard);

	const TruncatedLaurent a = mono(0, 1, ParamScalar(3)) + mono(0, -2, I);
	const DeformationMap g = apply_gauge(pi, {{{t, a}}, 1});
	CHECK(g.kind() == DeformationMap::Kind::gauged);
	for (int m = -2; m <= 2; ++m) {
		const VectorField X = basis_field(m);
		CHECK(g(X) == pi(X) + poisson_bracket(a, pi(X)) * t);
	}
	CHECK(defect_vanishes(g, 3, -3));

	// A second-order gauge of the universal family by a grade -1 generator.
	const TruncatedLaurent F = mono(-1, 1) + mono(1, -1, ParamScalar(2));
	const DeformationMap h = apply_gauge(DeformationMap::universal(lambda, mu, -6), {{{t, F}}, 2});
	CHECK(defect_vanishes(h, 2, -4));

	CHECK_THROWS_AS(apply_gauge(pi, {{{ParamScalar(1), a}}, 1}), Error);
	CHECK_THROWS_AS(apply_gauge(pi, {{{t, a.truncated(-1)}}, 1}), Error);
	CHECK_THROWS_AS(apply_gauge(pi, {{{t, a}}, 0}), Error);
}
