#pragma once

// Images of d/dx, x d/dx, x^2 d/dx under the universal deformation, their
// sl2 relations, the quadratic invariant F1 F3 - F2^2 and the orbit type it
// selects.

#include "vectdeform/deformations.hpp"

namespace vectdeform {

struct Sl2Triple {
	TruncatedLaurent F1;
	TruncatedLaurent F2;
	TruncatedLaurent F3;

	nlohmann::json to_json() const;
};

/// Universal deformation of the three generators (polynomial basis); exact.
Sl2Triple sl2_images(const ParamScalar& lambda, const ParamScalar& mu);

/// Triple with F3 = x^2 xi + 2 lambda x + lambda (lambda - mu) xi^-1, kept as
/// a comparison fixture.
Sl2Triple sl2_images_stated(const ParamScalar& lambda, const ParamScalar& mu);

struct Sl2ClosureCheck {
	/// {F1, F2} - F1, {F1, F3} - 2 F2, {F2, F3} - F3
	std::array<TruncatedLaurent, 3> defects;
	bool holds() const;
};

Sl2ClosureCheck sl2_closure(const Sl2Triple& T);

/// Constant value of F1 F3 - F2^2; throws if it is not constant.
ParamScalar casimir(const Sl2Triple& T);

struct OrbitClass {
	enum class Tag { cone, two_sheet_branch, one_sheet };
	Tag tag = Tag::cone;
	ParamScalar casimir;

	std::string_view tag_name() const;
};

/// Zero: cone; positive: one sheet of the two-sheet hyperboloid; negative:
/// one-sheet hyperboloid. Needs a rational Casimir.
OrbitClass orbit_classify(const Sl2Triple& T);

} // namespace vectdeform
