#pragma once

// Embeddings of circle vector fields into the Poisson algebra of Laurent
// series: the standard embedding, the infinitesimal family, the two-parameter
// universal deformation, the one-parameter formal deformation, table-driven
// homogeneous maps and gauge transformations by interior automorphisms.

#include <memory>
#include <optional>
#include <vector>

#include "vectdeform/laurent.hpp"

namespace vectdeform {

/// Raised when a computation would need grades below what its inputs
/// reliably provide.
class InsufficientDepth : public Error {
public:
	InsufficientDepth(const std::string& what, int required_floor)
	    : Error(what + " (requires evaluation floor <= " + std::to_string(required_floor) + ")"),
	      required_floor_(required_floor)
	{
	}
	int required_floor() const { return required_floor_; }

private:
	int required_floor_;
};

/// The term coefficient * f^{(derivative)} * xi^grade.
struct HomogeneousRule {
	int grade = 0;
	int derivative = 0;
	ParamScalar coefficient;

	nlohmann::json to_json() const;
};

struct GaugeGenerator {
	/// Monomial in the parameters, e.g. t or t^2.
	ParamScalar weight;
	/// Exact Laurent polynomial.
	TruncatedLaurent F;
};

/// exp(sum_i weight_i * ad_{F_i}), expanded to `order` in the weights.
struct GaugeSeries {
	std::vector<GaugeGenerator> generators;
	unsigned order = 1;
};

class DeformationMap {
public:
	enum class Kind { standard, infinitesimal, universal, formal, table, gauged };

	static DeformationMap standard();
	static DeformationMap infinitesimal(const ParamScalar& c0, const ParamScalar& c1, const ParamScalar& c2);
	/// Evaluated down to grade `floor`; exact when lambda == mu.
	static DeformationMap universal(const ParamScalar& lambda, const ParamScalar& mu, int floor);
	/// Terms t^k for k <= t_order; reliable down to grade 1 - t_order.
	static DeformationMap formal(const ParamScalar& lambda, int t_order);
	/// A finite rule table. With a floor it is a truncation of a series
	/// (nothing is known below the floor); without one it is exact.
	static DeformationMap table(std::vector<HomogeneousRule> rules, std::optional<int> floor = std::nullopt);
	/// {"rules": [{"grade", "derivative", "coefficient"}], "floor"?: int}
	static DeformationMap from_json(const nlohmann::json& j);

	Kind kind() const { return kind_; }
	/// Lowest reliable grade of evaluations; nothing for exact maps.
	std::optional<int> floor() const { return floor_; }
	/// Re-evaluation depth for closed-form maps (universal, gauged universal).
	DeformationMap with_floor(int floor) const;

	/// Homogeneous rules; empty for gauged maps.
	const std::vector<HomogeneousRule>& rules() const { return rules_; }
	/// Parameter-degree truncation carried by formal and gauged maps.
	std::optional<std::pair<VarMask, unsigned>> weight_truncation() const;

	TruncatedLaurent operator()(const VectorField& X) const;

	nlohmann::json descriptor() const;

private:
	friend DeformationMap apply_gauge(const DeformationMap& pi, const GaugeSeries& gauge);

	DeformationMap() = default;

	Kind kind_ = Kind::standard;
	std::vector<ParamScalar> params_;
	std::vector<HomogeneousRule> rules_;
	std::optional<int> floor_;
	// Smallest derivative order among rules that would sit below the floor;
	// polynomial fields of lower degree evaluate exactly.
	std::optional<int> tail_min_derivative_;
	std::shared_ptr<const DeformationMap> base_;
	std::shared_ptr<const GaugeSeries> gauge_;
};

TruncatedLaurent standard_embedding(const VectorField& X);

/// f d/dx -> f xi + c0 f' + c1 f'' xi^-1 + c2 f''' xi^-2
TruncatedLaurent infinitesimal_embedding(const ParamScalar& c0, const ParamScalar& c1, const ParamScalar& c2,
                                         const VectorField& X);

/// Coefficient of f^{(k+1)} xi^{-k} in the universal deformation, k >= 0:
/// mu (lambda-mu)^k / k! + (lambda-mu)^{k+1} / (k+1)!
ParamScalar universal_coefficient(const ParamScalar& lambda, const ParamScalar& mu, int k);

/// f(x + (lambda-mu)/xi) xi + mu f'(x + (lambda-mu)/xi), expanded to `floor`.
TruncatedLaurent universal_deformation(const ParamScalar& lambda, const ParamScalar& mu, const VectorField& X,
                                       int floor);

/// Coefficient of t^k f^{(k)} xi^{1-k} in the formal deformation, obtained by
/// substituting lambda -> t, mu -> lambda t into the universal coefficient.
ParamScalar formal_coefficient(const ParamScalar& lambda, int k);
/// Closed form (1 + (k-1) lambda)(1 - lambda)^{k-1} / k!, k >= 1.
ParamScalar formal_coefficient_closed(const ParamScalar& lambda, int k);
/// The form with (1 - (k-1) lambda) that appears in print, k >= 1.
ParamScalar formal_coefficient_stated(const ParamScalar& lambda, int k);

TruncatedLaurent formal_deformation(const ParamScalar& lambda, int t_order, const VectorField& X);

/// {pi(X), pi(Y)} - pi([X, Y]) on grades >= check_floor.
TruncatedLaurent homomorphism_defect(const DeformationMap& pi, const VectorField& X, const VectorField& Y,
                                     int check_floor);

DeformationMap apply_gauge(const DeformationMap& pi, const GaugeSeries& gauge);

} // namespace vectdeform
