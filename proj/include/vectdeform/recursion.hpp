#pragma once

// Order-by-order solution of the identities satisfied by homogeneous
// deformations f d/dx -> f xi + sum_{k>=0} P_k f^{(k+1)} xi^{-k}, the
// integrability polynomial they produce, and the formal (power series in t)
// version with the obstructions at orders 2 and 3.

#include <array>
#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "vectdeform/deformations.hpp"

namespace vectdeform {

/// One coefficient match at the monomial f^{(f_order)} g^{(g_order)}:
///   linear * P_k = sum_q coefficient_q * P_{i_q} P_{j_q}.
struct IdentityEquation {
	struct Quadratic {
		int i = 0;
		int j = 0; // i <= j
		Integer coefficient;
	};

	int f_order = 0;
	int g_order = 0;
	Integer linear;
	std::vector<Quadratic> quadratic;

	bool trivial() const { return linear == 0 && quadratic.empty(); }
	/// e.g. "9*P5 = 4*P0*P4 - P1*P3"
	std::string str(int k) const;
};

/// Nontrivial equations of identity k, one per monomial with f_order <
/// g_order (the mirrored monomial gives the negated equation).
std::vector<IdentityEquation> expand_identity(int k);

/// Right-hand side evaluated on known lower-order values.
ParamScalar evaluate_quadratic(const IdentityEquation& e, const std::map<int, ParamScalar>& P);

struct Obstruction {
	int order = 0;
	/// Index of the identity (xi-grade -grade) that produced it.
	int grade = 0;
	/// The two monomials whose determinations disagree.
	std::pair<int, int> first_monomial;
	std::pair<int, int> second_monomial;
	/// L_1 * rhs_2 - L_2 * rhs_1 with denominators cleared, leading
	/// coefficient positive.
	ParamScalar polynomial;
	/// Same polynomial with its integer content removed.
	ParamScalar primitive;
	/// Exact divisibility by the integrability polynomial; set by the
	/// homogeneous solver only.
	std::optional<bool> in_integrability_ideal;

	nlohmann::json to_json() const;
};

struct HomogeneousSolution {
	std::map<int, ParamScalar> P;
	int max_order = 2;

	nlohmann::json to_json() const;
};

struct FormalSolution {
	/// alpha[{k, j}]: t-order k, coefficient of f^{(j+1)} xi^{-j}.
	std::map<std::pair<int, int>, ParamScalar> alpha;
	int max_order = 1;

	ParamScalar at(int k, int j) const;
	nlohmann::json to_json() const;
};

template <class Solution>
struct BasicObstructionReport {
	/// Valid up to the first inconsistent order.
	Solution solved;
	std::vector<Obstruction> obstructions;

	bool obstructed() const { return !obstructions.empty(); }
};

using ObstructionReport = BasicObstructionReport<HomogeneousSolution>;
using FormalObstructionReport = BasicObstructionReport<FormalSolution>;

nlohmann::json to_json(const ObstructionReport& r);
nlohmann::json to_json(const FormalObstructionReport& r);

/// Solves identities 3..K. After an inconsistent order the first
/// determination is kept so later obstructions are still reported.
ObstructionReport homogeneous_solve(const ParamScalar& c0, const ParamScalar& c1, const ParamScalar& c2, int K);

/// Table map f -> f xi + sum_k P_k f^{(k+1)} xi^{-k} for the solved orders,
/// reliable down to grade -max_order.
DeformationMap homogeneous_table(const HomogeneousSolution& s);

/// 6 c0^3 c2 - 3 (c0 c1)^2 - 18 c0 c1 c2 + 8 c1^3 + 9 c2^2
ParamScalar integrability_lhs(const ParamScalar& c0, const ParamScalar& c1, const ParamScalar& c2);

struct TildeCoordinates {
	ParamScalar c1;
	ParamScalar c2;
};
/// c~1 = c0^2 - 2 c1, c~2 = 3 (c2 - c0 c1) + c0^3, so that
/// c~2^2 - c~1^3 = integrability_lhs.
TildeCoordinates tilde_coordinates(const ParamScalar& c0, const ParamScalar& c1, const ParamScalar& c2);
/// Same with the constant term 1 in place of c0^3, as stated.
TildeCoordinates tilde_coordinates_stated(const ParamScalar& c0, const ParamScalar& c1, const ParamScalar& c2);

struct C2Branches {
	ParamScalar plus;
	ParamScalar minus;
};
/// lambda^3/6 - lambda mu^2/2 +- mu^3/3
C2Branches c2_branches(const ParamScalar& lambda, const ParamScalar& mu);

/// Infinitesimal data (c0, c1, c2) of the universal deformation:
/// (lambda, (lambda^2 - mu^2)/2, c2+).
std::array<ParamScalar, 3> universal_parameters(const ParamScalar& lambda, const ParamScalar& mu);

/// Caller-chosen values of the slots alpha^k_1, alpha^k_2 (k >= 2) that no
/// equation fixes; unlisted slots are zero.
using FreeSlots = std::map<std::pair<int, int>, ParamScalar>;

/// Slots reproducing the formal deformation with parameter lambda when
/// (c0, c1, c2) = (1, 0, 0).
FreeSlots lambda_family_slots(const ParamScalar& lambda);

/// Solves the deformation relation order by order in t with the ansatz
/// pi_k(f) = sum_j alpha^k_j f^{(j+1)} xi^{-j}, alpha^1 = (c0, c1, c2) and
/// alpha^k_0 = 0 for k >= 2. Stops after the first obstructed order.
FormalObstructionReport formal_solve(const ParamScalar& c0, const ParamScalar& c1, const ParamScalar& c2,
                                     int t_order, const FreeSlots& slots = {});

} // namespace vectdeform
