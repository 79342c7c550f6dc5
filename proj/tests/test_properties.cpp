#include <doctest.h>

#include "properties.hpp"

using namespace vectdeform;

TEST_CASE("randomized algebra laws")
{
	for (const laws::LawResult& r : laws::all_laws(500)) {
		INFO(r.name);
		CHECK(r.cases == 500);
		CHECK(r.failures == 0);
	}
}

TEST_CASE("floor contract is tight on a known tail")
{
	// A truncated input must not certify grades its tail could still reach.
	const TruncatedLaurent F = TruncatedLaurent::term(1, CircleFunction::mode(1)).truncated(-1);
	const TruncatedLaurent tail = TruncatedLaurent::term(-2, CircleFunction::mode(2));
	const TruncatedLaurent G = TruncatedLaurent::term(1, CircleFunction::mode(-3));
	const TruncatedLaurent B = poisson_bracket(F, G);
	const TruncatedLaurent full = poisson_bracket(TruncatedLaurent::term(1, CircleFunction::mode(1)) + tail, G);
	CHECK(B.agrees_with(full, B.floor()));
	CHECK_FALSE(full.grade(-2).is_zero());
	CHECK(B.floor() > -2);
}
