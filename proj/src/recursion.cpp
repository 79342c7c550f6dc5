#include "vectdeform/recursion.hpp"

#include <sstream>

namespace vectdeform {

namespace {

Integer binomial(int n, int r)
{
	if (r < 0 || r > n)
		return 0;
	Integer b;
	mpz_bin_uiui(b.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(r));
	return b;
}

ParamScalar normalized(const ParamScalar& p) { return p.clear_denominators().sign_normalized(); }

std::string monomial_name(std::pair<int, int> m)
{
	return "f^(" + std::to_string(m.first) + ")*g^(" + std::to_string(m.second) + ")";
}

// Shared consistency bookkeeping: the first equation with a nonzero linear
// coefficient determines the unknown, every other equation is compared to it.
struct Determination {
	std::optional<ParamScalar> value;
	std::vector<Obstruction> obstructions;
};

Determination determine(int order, int grade, const std::vector<IdentityEquation>& eqs,
                        const std::vector<ParamScalar>& rhs)
{
	Determination d;
	std::size_t first = eqs.size();
	for (std::size_t e = 0; e < eqs.size(); ++e) {
		if (eqs[e].linear != 0) {
			first = e;
			break;
		}
	}
	if (first < eqs.size())
		d.value = rhs[first].div_exact(GaussianRational(Rational(eqs[first].linear)));

	for (std::size_t e = 0; e < eqs.size(); ++e) {
		if (e == first)
			continue;
		ParamScalar diff;
		std::pair<int, int> a{eqs[e].f_order, eqs[e].g_order};
		std::pair<int, int> b = a;
		if (first < eqs.size()) {
			diff = rhs[e] * GaussianRational(Rational(eqs[first].linear)) -
			       rhs[first] * GaussianRational(Rational(eqs[e].linear));
			a = {eqs[first].f_order, eqs[first].g_order};
		} else {
			diff = rhs[e];
		}
		if (diff.is_zero())
			continue;
		Obstruction o;
		o.order = order;
		o.grade = grade;
		o.first_monomial = a;
		o.second_monomial = b;
		o.polynomial = normalized(diff);
		o.primitive = diff.primitive().sign_normalized();
		d.obstructions.push_back(std::move(o));
	}
	return d;
}

} // namespace

// ---------------------------------------------------------------------------
// Identities

std::string IdentityEquation::str(int k) const
{
	std::ostringstream os;
	os << (linear == 1 ? std::string() : linear.get_str() + "*") << "P" << k << " = ";
	if (quadratic.empty()) {
		os << "0";
		return os.str();
	}
	bool first = true;
	for (const auto& q : quadratic) {
		Integer c = q.coefficient;
		if (first) {
			if (c < 0)
				os << "-";
		} else {
			os << (c < 0 ? " - " : " + ");
		}
		first = false;
		Integer a = abs(c);
		if (a != 1)
			os << a.get_str() << "*";
		os << "P" << q.i << "*P" << q.j;
	}
	return os.str();
}

std::vector<IdentityEquation> expand_identity(int k)
{
	if (k < 3)
		throw Error("expand_identity: k must be >= 3 (P0, P1, P2 are the free parameters c0, c1, c2)");

	// Coefficients of f^{(a)} g^{(k+2-a)}, a = 0..k+2.
	std::vector<Integer> linear(static_cast<std::size_t>(k + 3));
	std::vector<std::map<std::pair<int, int>, Integer>> quad(static_cast<std::size_t>(k + 3));

	// Right side: P_k (f g' - f' g)^{(k+1)}.
	for (int a = 0; a <= k + 2; ++a)
		linear[a] = binomial(k + 1, a) - binomial(k + 1, a - 1);

	// Left side: {P_i f^{(i+1)} xi^{-i}, P_j g^{(j+1)} xi^{-j}} with P_{-1} = 1
	// and i + j = k - 1 contributes -i f^{(i+1)} g^{(j+2)} + j f^{(i+2)} g^{(j+1)}.
	for (int i = -1; i <= k; ++i) {
		const int j = k - 1 - i;
		auto put = [&](int a, long c) {
			if (c == 0)
				return;
			if (i == -1 || j == -1) {
				linear[a] -= c;
			} else {
				auto key = std::minmax(i, j);
				quad[a][{key.first, key.second}] += c;
			}
		};
		put(i + 1, -i);
		put(i + 2, j);
	}

	std::vector<IdentityEquation> eqs;
	for (int a = 0; 2 * a < k + 2; ++a) {
		IdentityEquation e;
		e.f_order = a;
		e.g_order = k + 2 - a;
		e.linear = linear[a];
		for (const auto& [ij, c] : quad[a])
			if (c != 0)
				e.quadratic.push_back({ij.first, ij.second, c});
		if (!e.trivial())
			eqs.push_back(std::move(e));
	}
	return eqs;
}

ParamScalar evaluate_quadratic(const IdentityEquation& e, const std::map<int, ParamScalar>& P)
{
	ParamScalar r;
	for (const auto& q : e.quadratic)
		r += P.at(q.i) * P.at(q.j) * GaussianRational(Rational(q.coefficient));
	return r;
}

// ---------------------------------------------------------------------------
// Serialization

nlohmann::json Obstruction::to_json() const
{
	nlohmann::json j = {{"order", order},
	                    {"grade", grade},
	                    {"monomials", {monomial_name(first_monomial), monomial_name(second_monomial)}},
	                    {"polynomial", polynomial.str()},
	                    {"primitive", primitive.str()}};
	if (in_integrability_ideal)
		j["in_integrability_ideal"] = *in_integrability_ideal;
	return j;
}

nlohmann::json HomogeneousSolution::to_json() const
{
	nlohmann::json p = nlohmann::json::object();
	for (const auto& [k, v] : P)
		p["P" + std::to_string(k)] = v.str();
	return {{"max_order", max_order}, {"P", p}};
}

ParamScalar FormalSolution::at(int k, int j) const
{
	auto it = alpha.find({k, j});
	return it == alpha.end() ? ParamScalar() : it->second;
}

nlohmann::json FormalSolution::to_json() const
{
	nlohmann::json a = nlohmann::json::object();
	for (const auto& [kj, v] : alpha)
		if (!v.is_zero())
			a["alpha^" + std::to_string(kj.first) + "_" + std::to_string(kj.second)] = v.str();
	return {{"max_order", max_order}, {"alpha", a}};
}

namespace {

template <class R>
nlohmann::json report_json(const R& r)
{
	nlohmann::json obs = nlohmann::json::array();
	for (const auto& o : r.obstructions)
		obs.push_back(o.to_json());
	return {{"solved", r.solved.to_json()}, {"obstructions", obs}};
}

} // namespace

nlohmann::json to_json(const ObstructionReport& r) { return report_json(r); }
nlohmann::json to_json(const FormalObstructionReport& r) { return report_json(r); }

// ---------------------------------------------------------------------------
// Homogeneous deformations

ObstructionReport homogeneous_solve(const ParamScalar& c0, const ParamScalar& c1, const ParamScalar& c2, int K)
{
	if (K < 3)
		throw Error("homogeneous_solve: K must be >= 3");
	const ParamScalar E = integrability_lhs(c0, c1, c2);

	ObstructionReport report;
	std::map<int, ParamScalar> P{{0, c0}, {1, c1}, {2, c2}};
	report.solved.P = P;
	bool consistent = true;

	for (int k = 3; k <= K; ++k) {
		const auto eqs = expand_identity(k);
		std::vector<ParamScalar> rhs;
		for (const auto& e : eqs)
			rhs.push_back(evaluate_quadratic(e, P));
		auto d = determine(k, k, eqs, rhs);
		if (!d.value)
			throw Error("identity " + std::to_string(k) + " does not determine P" + std::to_string(k));
		P[k] = *d.value;
		for (auto& o : d.obstructions) {
			o.in_integrability_ideal = !E.is_zero() && o.polynomial.divide(E).has_value();
			report.obstructions.push_back(std::move(o));
		}
		if (!d.obstructions.empty())
			consistent = false;
		if (consistent) {
			report.solved.P[k] = P[k];
			report.solved.max_order = k;
		}
	}
	return report;
}

DeformationMap homogeneous_table(const HomogeneousSolution& s)
{
	std::vector<HomogeneousRule> rules{{1, 0, ParamScalar(1)}};
	for (const auto& [k, p] : s.P)
		if (k <= s.max_order)
			rules.push_back({-k, k + 1, p});
	return DeformationMap::table(std::move(rules), -s.max_order);
}

ParamScalar integrability_lhs(const ParamScalar& c0, const ParamScalar& c1, const ParamScalar& c2)
{
	return ParamScalar(6) * c0.pow(3) * c2 - ParamScalar(3) * (c0 * c1).pow(2) - ParamScalar(18) * c0 * c1 * c2 +
	       ParamScalar(8) * c1.pow(3) + ParamScalar(9) * c2.pow(2);
}

TildeCoordinates tilde_coordinates(const ParamScalar& c0, const ParamScalar& c1, const ParamScalar& c2)
{
	return {c0.pow(2) - ParamScalar(2) * c1, ParamScalar(3) * (c2 - c0 * c1) + c0.pow(3)};
}

TildeCoordinates tilde_coordinates_stated(const ParamScalar& c0, const ParamScalar& c1, const ParamScalar& c2)
{
	return {c0.pow(2) - ParamScalar(2) * c1, ParamScalar(3) * (c2 - c0 * c1) + ParamScalar(1)};
}

C2Branches c2_branches(const ParamScalar& lambda, const ParamScalar& mu)
{
	const ParamScalar even = lambda.pow(3).div_exact(6) - (lambda * mu.pow(2)).div_exact(2);
	const ParamScalar odd = mu.pow(3).div_exact(3);
	return {even + odd, even - odd};
}

std::array<ParamScalar, 3> universal_parameters(const ParamScalar& lambda, const ParamScalar& mu)
{
	return {lambda, (lambda.pow(2) - mu.pow(2)).div_exact(2), c2_branches(lambda, mu).plus};
}

// ---------------------------------------------------------------------------
// Formal deformations

FreeSlots lambda_family_slots(const ParamScalar& lambda)
{
	const ParamScalar one(1);
	return {{{2, 1}, (one - lambda.pow(2)).div_exact(2)},
	        {{3, 2}, ((one + ParamScalar(2) * lambda) * (one - lambda).pow(2)).div_exact(6)}};
}

FormalObstructionReport formal_solve(const ParamScalar& c0, const ParamScalar& c1, const ParamScalar& c2,
                                     int t_order, const FreeSlots& slots)
{
	if (t_order < 2)
		throw Error("formal_solve: t_order must be >= 2");
	for (const auto& [kj, v] : slots)
		if (kj.first < 2 || (kj.second != 1 && kj.second != 2))
			throw Error("formal_solve: free slots are alpha^k_1 and alpha^k_2 with k >= 2");

	FormalObstructionReport report;
	auto& alpha = report.solved.alpha;
	alpha[{1, 0}] = c0;
	alpha[{1, 1}] = c1;
	alpha[{1, 2}] = c2;
	report.solved.max_order = 1;

	std::map<int, std::vector<IdentityEquation>> identities;
	auto at = [&](int k, int j) { return report.solved.at(k, j); };

	for (int k = 2; k <= t_order; ++k) {
		std::map<std::pair<int, int>, ParamScalar> next;
		next[{k, 0}] = ParamScalar();
		for (int j : {1, 2}) {
			auto it = slots.find({k, j});
			next[{k, j}] = it == slots.end() ? ParamScalar() : it->second;
		}
		std::vector<Obstruction> found;
		for (int j = 3; j <= 3 * k - 1; ++j) {
			auto [it, inserted] = identities.try_emplace(j);
			if (inserted)
				it->second = expand_identity(j);
			const auto& eqs = it->second;
			std::vector<ParamScalar> rhs;
			for (const auto& e : eqs) {
				ParamScalar r;
				for (const auto& q : e.quadratic) {
					// t^k coefficient of P_i(t) P_j(t), pi_0 carrying no P_i.
					ParamScalar cauchy;
					for (int p = 1; p < k; ++p)
						cauchy += at(p, q.i) * at(k - p, q.j);
					r += cauchy * GaussianRational(Rational(q.coefficient));
				}
				rhs.push_back(std::move(r));
			}
			auto d = determine(k, j, eqs, rhs);
			if (!d.value)
				throw Error("identity " + std::to_string(j) + " does not determine alpha");
			next[{k, j}] = *d.value;
			for (auto& o : d.obstructions)
				found.push_back(std::move(o));
		}
		if (!found.empty()) {
			report.obstructions = std::move(found);
			break;
		}
		for (auto& [kj, v] : next)
			alpha[kj] = std::move(v);
		report.solved.max_order = k;
	}
	return report;
}

} // namespace vectdeform
