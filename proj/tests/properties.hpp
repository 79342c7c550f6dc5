#pragma once

// Randomized algebra laws for the Laurent algebra, shared by the unit tests
// and the acceptance runner.

#include <random>
#include <string>
#include <vector>

#include "vectdeform/laurent.hpp"

namespace vectdeform::laws {

struct LawResult {
	std::string name;
	int cases = 0;
	int failures = 0;
	bool ok() const { return cases > 0 && failures == 0; }
};

class Sampler {
public:
	explicit Sampler(unsigned seed) : rng_(seed) {}

	int uniform(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng_); }

	ParamScalar scalar()
	{
		ParamScalar c(GaussianRational(Rational(uniform(-4, 4), uniform(1, 3)), uniform(-2, 2)));
		if (uniform(0, 3) == 0)
			c = c * ParamScalar::var(Var::lambda);
		return c.is_zero() ? ParamScalar(1) : c;
	}

	CircleFunction function(int terms)
	{
		CircleFunction f;
		for (int k = 0; k < terms; ++k)
			f += CircleFunction::mode(uniform(-3, 3), scalar());
		return f;
	}

	TruncatedLaurent element()
	{
		TruncatedLaurent F;
		const int terms = uniform(1, 3);
		for (int k = 0; k < terms; ++k)
			F += TruncatedLaurent::term(uniform(-3, 2), function(uniform(1, 2)));
		return F;
	}

private:
	std::mt19937 rng_;
};

inline LawResult jacobi(int cases, unsigned seed = 101)
{
	Sampler s(seed);
	LawResult r{"jacobi"};
	for (; r.cases < cases; ++r.cases) {
		const TruncatedLaurent F = s.element(), G = s.element(), H = s.element();
		const TruncatedLaurent sum = poisson_bracket(F, poisson_bracket(G, H)) +
		                             poisson_bracket(G, poisson_bracket(H, F)) +
		                             poisson_bracket(H, poisson_bracket(F, G));
		r.failures += !sum.is_zero();
	}
	return r;
}

inline LawResult leibniz(int cases, unsigned seed = 202)
{
	Sampler s(seed);
	LawResult r{"leibniz"};
	for (; r.cases < cases; ++r.cases) {
		const TruncatedLaurent F = s.element(), G = s.element(), H = s.element();
		const TruncatedLaurent lhs = poisson_bracket(F, laurent_product(G, H));
		const TruncatedLaurent rhs =
		    laurent_product(poisson_bracket(F, G), H) + laurent_product(G, poisson_bracket(F, H));
		r.failures += !(lhs - rhs).is_zero();
	}
	return r;
}

inline LawResult antisymmetry(int cases, unsigned seed = 303)
{
	Sampler s(seed);
	LawResult r{"antisymmetry"};
	for (; r.cases < cases; ++r.cases) {
		const TruncatedLaurent F = s.element(), G = s.element(), H = s.element();
		const ParamScalar a = s.scalar();
		bool ok = (poisson_bracket(F, G) + poisson_bracket(G, F)).is_zero();
		ok = ok && (poisson_bracket(F * a + H, G) - poisson_bracket(F, G) * a - poisson_bracket(H, G)).is_zero();
		const VectorField X{s.function(2)}, Y{s.function(2)};
		ok = ok && (vect_bracket(X, Y) + vect_bracket(Y, X)).f.is_zero();
		r.failures += !ok;
	}
	return r;
}

inline LawResult module_axiom(int cases, unsigned seed = 404)
{
	Sampler s(seed);
	LawResult r{"module_axiom"};
	for (; r.cases < cases; ++r.cases) {
		const DensityWeight w{s.scalar()};
		const VectorField X{s.function(2)}, Y{s.function(2)};
		const CircleFunction a = s.function(3);
		const CircleFunction lhs = density_action(w, vect_bracket(X, Y), a);
		const CircleFunction rhs = density_action(w, X, density_action(w, Y, a)) -
		                           density_action(w, Y, density_action(w, X, a));
		r.failures += !(lhs == rhs);
	}
	return r;
}

inline LawResult floor_soundness(int cases, unsigned seed = 505)
{
	Sampler s(seed);
	LawResult r{"floor_soundness"};
	for (; r.cases < cases; ++r.cases) {
		const TruncatedLaurent F = s.element(), G = s.element();
		const TruncatedLaurent Ft = F.truncated(s.uniform(-4, 1));
		const TruncatedLaurent Gt = s.uniform(0, 2) == 0 ? G : G.truncated(s.uniform(-4, 1));
		const TruncatedLaurent B = poisson_bracket(Ft, Gt);
		const TruncatedLaurent P = laurent_product(Ft, Gt);
		bool ok = B.agrees_with(poisson_bracket(F, G), B.floor());
		ok = ok && P.agrees_with(laurent_product(F, G), P.floor());
		r.failures += !ok;
	}
	return r;
}

inline std::vector<LawResult> all_laws(int cases)
{
	return {jacobi(cases), leibniz(cases), antisymmetry(cases), module_axiom(cases), floor_soundness(cases)};
}

} // namespace vectdeform::laws
