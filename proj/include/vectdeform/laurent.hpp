#pragma once

// Graded algebra core: coefficient functions on the circle (finite Fourier
// sums) or on the line (polynomials in x), vector fields, and xi-graded
// Laurent elements with a reliability floor.

#include <functional>
#include <map>
#include <optional>

#include <nlohmann/json.hpp>

#include "vectdeform/scalars.hpp"

namespace vectdeform {

enum class Basis { fourier, polynomial };

std::string_view basis_name(Basis b);

/// Finite sum of e^{inx} (Fourier basis) or x^n, n >= 0 (polynomial basis)
/// with ParamScalar coefficients. Zero coefficients are never stored.
class CircleFunction {
public:
	explicit CircleFunction(Basis basis = Basis::fourier) : basis_(basis) {}

	/// c * e^{inx}
	static CircleFunction mode(int n, const ParamScalar& c = 1);
	/// c * x^n
	static CircleFunction monomial(int n, const ParamScalar& c = 1);
	static CircleFunction constant(const ParamScalar& c, Basis basis = Basis::fourier);

	Basis basis() const { return basis_; }
	const std::map<int, ParamScalar>& coefficients() const { return coeffs_; }
	ParamScalar coefficient(int n) const;
	bool is_zero() const { return coeffs_.empty(); }
	/// Highest x-degree; polynomial basis only.
	std::optional<int> degree() const;

	void add(int n, const ParamScalar& c);

	CircleFunction derivative(int order = 1) const;
	/// Constant Fourier mode, i.e. the mean over the circle.
	ParamScalar mean() const;
	CircleFunction map_coefficients(const std::function<ParamScalar(const ParamScalar&)>& fn) const;

	CircleFunction& operator+=(const CircleFunction& o);
	CircleFunction& operator-=(const CircleFunction& o);
	CircleFunction& operator*=(const ParamScalar& c);
	friend CircleFunction operator+(CircleFunction a, const CircleFunction& b) { return a += b; }
	friend CircleFunction operator-(CircleFunction a, const CircleFunction& b) { return a -= b; }
	friend CircleFunction operator*(CircleFunction a, const ParamScalar& c) { return a *= c; }
	friend CircleFunction operator*(const ParamScalar& c, CircleFunction a) { return a *= c; }
	friend CircleFunction operator*(const CircleFunction& a, const CircleFunction& b);
	CircleFunction operator-() const { return *this * ParamScalar(-1); }

	friend bool operator==(const CircleFunction& a, const CircleFunction& b)
	{
		return a.basis_ == b.basis_ && a.coeffs_ == b.coeffs_;
	}

	nlohmann::json to_json() const;
	std::string str() const;

private:
	Basis basis_;
	std::map<int, ParamScalar> coeffs_;
};

CircleFunction cf_derive(const CircleFunction& f);

/// The vector field f(x) d/dx.
struct VectorField {
	CircleFunction f;

	friend bool operator==(const VectorField& a, const VectorField& b) { return a.f == b.f; }
	VectorField operator+(const VectorField& o) const { return {f + o.f}; }
	VectorField operator*(const ParamScalar& c) const { return {f * c}; }
};

/// L_n = z^{n+1} d/dz with z = e^{ix}, i.e. -i e^{inx} d/dx.
VectorField basis_field(int n);

/// [f d/dx, g d/dx] = (f g' - f' g) d/dx
VectorField vect_bracket(const VectorField& X, const VectorField& Y);

/// Element sum_k xi^k f_k(x) known on grades >= floor.
///
/// An exact element is a genuine Laurent polynomial (an element of A(S^1)):
/// every grade is known and only finitely many are nonzero. An inexact
/// element is a truncation of a formal Laurent series: grades below
/// `floor()` are unknown and must never be inspected.
class TruncatedLaurent {
public:
	explicit TruncatedLaurent(Basis basis = Basis::fourier) : basis_(basis) {}

	static TruncatedLaurent exact(Basis basis = Basis::fourier) { return TruncatedLaurent(basis); }
	static TruncatedLaurent truncation(int floor, Basis basis = Basis::fourier);
	/// c * f(x) * xi^grade, exact.
	static TruncatedLaurent term(int grade, const CircleFunction& f);

	Basis basis() const { return basis_; }
	bool is_exact() const { return exact_; }
	/// Lowest reliable grade. Exact elements report their lowest stored grade
	/// (0 when zero); every grade below it is zero.
	int floor() const;
	/// Upper bound for the grades of the represented element; nothing for
	/// the exact zero.
	std::optional<int> top() const;

	const std::map<int, CircleFunction>& grades() const { return grades_; }
	/// Coefficient of xi^k. Throws when k lies below the floor of an inexact
	/// element.
	CircleFunction grade(int k) const;
	void add(int k, const CircleFunction& f);

	/// Restricts to grades >= new_floor and marks the result inexact.
	TruncatedLaurent truncated(int new_floor) const;
	/// Zero on every reliable grade.
	bool is_zero() const { return grades_.empty(); }
	/// Compares grades >= down_to; throws if down_to lies below a floor.
	bool agrees_with(const TruncatedLaurent& o, int down_to) const;

	TruncatedLaurent map_coefficients(const std::function<ParamScalar(const ParamScalar&)>& fn) const;
	/// Derivative in x, grade by grade.
	TruncatedLaurent x_derivative() const;
	/// xi d/dxi: multiplies grade k by k.
	TruncatedLaurent euler_xi() const;

	TruncatedLaurent& operator+=(const TruncatedLaurent& o);
	TruncatedLaurent& operator-=(const TruncatedLaurent& o);
	TruncatedLaurent& operator*=(const ParamScalar& c);
	friend TruncatedLaurent operator+(TruncatedLaurent a, const TruncatedLaurent& b) { return a += b; }
	friend TruncatedLaurent operator-(TruncatedLaurent a, const TruncatedLaurent& b) { return a -= b; }
	friend TruncatedLaurent operator*(TruncatedLaurent a, const ParamScalar& c) { return a *= c; }
	friend TruncatedLaurent operator*(const ParamScalar& c, TruncatedLaurent a) { return a *= c; }

	/// Equality on grades >= the larger of the two floors.
	friend bool operator==(const TruncatedLaurent& a, const TruncatedLaurent& b);

	/// {"basis", "exact", "floor", "top", "grades": {grade: {mode: scalar}}}
	nlohmann::json to_json() const;
	static TruncatedLaurent from_json(const nlohmann::json& j);
	std::string str() const;

private:
	friend TruncatedLaurent poisson_bracket(const TruncatedLaurent&, const TruncatedLaurent&);
	friend TruncatedLaurent laurent_product(const TruncatedLaurent&, const TruncatedLaurent&);

	void drop_below(int k);

	Basis basis_;
	std::map<int, CircleFunction> grades_;
	bool exact_ = true;
	int floor_ = 0; // meaningful only when !exact_
};

/// {F, G} = F_xi G_x - F_x G_xi
TruncatedLaurent poisson_bracket(const TruncatedLaurent& F, const TruncatedLaurent& G);
/// Graded convolution product.
TruncatedLaurent laurent_product(const TruncatedLaurent& F, const TruncatedLaurent& G);

/// Weight of the tensor-density module F_lambda (densities of degree -lambda).
struct DensityWeight {
	ParamScalar lambda;
};

/// L^{(lambda)}_{f d/dx}(a) = f a' - lambda f' a
CircleFunction density_action(const DensityWeight& w, const VectorField& X, const CircleFunction& a);

} // namespace vectdeform
