#include <doctest.h>

#include "vectdeform/laurent.hpp"

using namespace vectdeform;

namespace {

const ParamScalar lambda = ParamScalar::var(Var::lambda);
const ParamScalar I = ParamScalar::i();

TruncatedLaurent mono(int grade, int mode, const ParamScalar& c = 1)
{
	return TruncatedLaurent::term(grade, CircleFunction::mode(mode, c));
}

TruncatedLaurent poly(int grade, int power, const ParamScalar& c = 1)
{
	return TruncatedLaurent::term(grade, CircleFunction::monomial(power, c));
}

} // namespace

TEST_CASE("derivatives")
{
	CHECK(cf_derive(CircleFunction::constant(1)).is_zero());
	CHECK(cf_derive(CircleFunction::mode(3)) == CircleFunction::mode(3, I * ParamScalar(3)));
	CHECK(cf_derive(CircleFunction::monomial(2)) == CircleFunction::monomial(1, 2));
	CHECK(CircleFunction::monomial(2).derivative(3).is_zero());
	CHECK(CircleFunction::mode(-2).derivative(2) == CircleFunction::mode(-2, -4));
	CHECK_THROWS_AS(CircleFunction::monomial(-1), Error);
}

TEST_CASE("vector field bracket")
{
	const VectorField d{CircleFunction::monomial(0)};
	const VectorField xd{CircleFunction::monomial(1)};
	const VectorField x2d{CircleFunction::monomial(2)};
	CHECK(vect_bracket(d, xd) == d);
	CHECK(vect_bracket(xd, x2d) == x2d);
	CHECK(vect_bracket(x2d, x2d).f.is_zero());
	CHECK_THROWS_AS(vect_bracket(d, basis_field(1)), Error);
	// Witt relations [L_m, L_n] = (n - m) L_{m+n}.
	for (int m = -3; m <= 3; ++m)
		for (int n = -3; n <= 3; ++n)
			CHECK(vect_bracket(basis_field(m), basis_field(n)) == basis_field(m + n) * ParamScalar(n - m));
}

TEST_CASE("poisson bracket")
{
	const CircleFunction f = CircleFunction::mode(2, 3) + CircleFunction::mode(-1, lambda);
	const CircleFunction g = CircleFunction::mode(1, I);
	const TruncatedLaurent fx = TruncatedLaurent::term(1, f);
	const TruncatedLaurent gx = TruncatedLaurent::term(1, g);
	CHECK(poisson_bracket(fx, gx) == TruncatedLaurent::term(1, f * g.derivative() - f.derivative() * g));
	CHECK(poisson_bracket(mono(1, 0), mono(1, 0)).is_zero());
	for (int a = -2; a <= 2; ++a)
		for (int b = -2; b <= 2; ++b)
			CHECK(poisson_bracket(mono(a, 3), mono(b, -5)) == mono(a + b - 1, -2, I * ParamScalar(a * -5 - b * 3)));
	CHECK_THROWS_AS(poisson_bracket(mono(1, 0), poly(1, 0)), Error);
}

TEST_CASE("laurent product")
{
	CHECK(laurent_product(mono(1, 0), mono(-1, 0)) == mono(0, 0));
	const TruncatedLaurent F2 = poly(1, 1) + poly(0, 0, lambda);
	CHECK(laurent_product(F2, F2) == poly(2, 2) + poly(1, 1, ParamScalar(2) * lambda) + poly(0, 0, lambda * lambda));
	CHECK(laurent_product(F2, TruncatedLaurent(Basis::polynomial)).is_zero());
}

TEST_CASE("floor contract")
{
	const TruncatedLaurent F = (mono(1, 1) + mono(0, 2) + mono(-1, 0)).truncated(-1);
	const TruncatedLaurent G = (mono(1, -1) + mono(-2, 1)).truncated(-3);
	const TruncatedLaurent B = poisson_bracket(F, G);
	CHECK_FALSE(B.is_exact());
	CHECK(B.floor() == std::max(-1 + 1, -3 + 1) - 1);
	const TruncatedLaurent P = laurent_product(F, G);
	CHECK(P.floor() == std::max(-1 + 1, -3 + 1));
	CHECK_THROWS_AS(B.grade(B.floor() - 1), Error);
	CHECK_THROWS_AS(B.agrees_with(B, B.floor() - 1), Error);

	// One exact operand constrains the result only through the other's tail.
	const TruncatedLaurent E = mono(1, 1);
	CHECK(poisson_bracket(E, G).floor() == -3 + 1 - 1);
	CHECK(poisson_bracket(E, mono(0, 2)).is_exact());
}

TEST_CASE("truncation and equality")
{
	const TruncatedLaurent A = mono(1, 0) + mono(-4, 1);
	const TruncatedLaurent B = mono(1, 0).truncated(-2);
	CHECK(A == B);
	CHECK_FALSE(A.truncated(-5) == B.truncated(-2).truncated(-2) + mono(-1, 0));
	CHECK(B.str() == "[(1)*e^{0ix}]*xi^1 + O(xi^-3)");
	CHECK_THROWS_AS(B.truncated(-3), Error);
}

TEST_CASE("json round trip")
{
	const TruncatedLaurent F = (mono(1, 2, lambda) + mono(-3, -1, I)).truncated(-4);
	const nlohmann::json j = F.to_json();
	CHECK(j["floor"] == -4);
	CHECK(j["top"] == 1);
	CHECK(j["exact"] == false);
	CHECK(j["grades"]["-3"]["-1"] == "i");
	const TruncatedLaurent back = TruncatedLaurent::from_json(j);
	CHECK(back == F);
	CHECK(back.floor() == -4);
}

TEST_CASE("tensor density action")
{
	const VectorField X{CircleFunction::mode(2, 5) + CircleFunction::mode(-1, 1)};
	const CircleFunction a = CircleFunction::mode(3, lambda) + CircleFunction::mode(0, 2);
	CHECK(density_action({0}, X, a) == X.f * a.derivative());
	const VectorField d{CircleFunction::constant(1)};
	CHECK(density_action({lambda}, d, a) == a.derivative());
	for (int m = -2; m <= 3; ++m) {
		const TruncatedLaurent B = poisson_bracket(TruncatedLaurent::term(1, X.f), TruncatedLaurent::term(m, a));
		CHECK(B.grade(m) == density_action({ParamScalar(m)}, X, a));
	}
}
