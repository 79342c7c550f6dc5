#pragma once

// Two-cocycles behind central extensions: the Gelfand-Fuks cocycle on
// vector fields and the Kirillov cocycles F dG on the torus (x, xi = e^{iy}),
// averaged over the transverse coordinate, together with the cubic fit that
// isolates the Gelfand-Fuks class.

#include "vectdeform/deformations.hpp"

namespace vectdeform {

enum class Cycle { x_cycle, xi_cycle, gelfand_fuks };

std::string_view cycle_name(Cycle c);
Cycle cycle_from_name(std::string_view name);

struct TwoCocycleValue {
	ParamScalar value;
	int m = 0;
	int n = 0;
	Cycle cycle = Cycle::gelfand_fuks;

	nlohmann::json to_json() const;
};

/// Mean over the circle of f' g''. Fourier basis only.
ParamScalar gelfand_fuks(const VectorField& X, const VectorField& Y);

/// Mode (x^0, xi^0) of F G_x (xi_cycle) or of F * i xi G_xi (x_cycle).
/// Throws InsufficientDepth when the grade-0 part of the product is not
/// reliable.
ParamScalar kirillov_averaged(const TruncatedLaurent& F, const TruncatedLaurent& G, Cycle cycle);

/// value(m) = alpha m^3 + beta m, interpolated from m = 1, 2.
struct CubicFit {
	ParamScalar alpha;
	ParamScalar beta;
	/// Sampled values at m = 1, 2, 3.
	std::array<ParamScalar, 3> values;
	/// value(3) == 27 alpha + 3 beta
	bool extrapolates = false;

	nlohmann::json to_json() const;
};

/// Fit of the Gelfand-Fuks cocycle itself on (L_m, L_-m).
CubicFit gelfand_fuks_fit();

/// Fit of the averaged Kirillov cocycle on images of (L_m, L_-m) under the
/// universal deformation evaluated down to grade -depth.
CubicFit gf_class_fit(const ParamScalar& lambda, const ParamScalar& mu, Cycle cycle, int depth);

/// alpha of a fit divided by alpha of the Gelfand-Fuks fit.
ParamScalar gf_class(const CubicFit& fit);

struct CycleRatio {
	/// alpha(x_cycle) / alpha(xi_cycle) when the division is exact.
	std::optional<ParamScalar> ratio;
	ParamScalar expected;
	bool matches = false;

	nlohmann::json to_json() const;
};

/// Compares alpha(x_cycle) / alpha(xi_cycle) with mu^2.
CycleRatio cycle_ratio(const CubicFit& x_fit, const CubicFit& xi_fit, const ParamScalar& mu);

} // namespace vectdeform
