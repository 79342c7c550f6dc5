#pragma once

// Exact scalar field Q(i) and sparse multivariate polynomials over it in the
// fixed deformation-parameter universe {lambda, mu, t, c0, c1, c2}.

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace vectdeform {

class Error : public std::runtime_error {
public:
	using std::runtime_error::runtime_error;
};

using Rational = mpq_class;
using Integer = mpz_class;

std::string to_string(const Rational& q);

/// Element re + im*i of the Gaussian rationals. Both parts are kept
/// canonical (lowest terms, positive denominator) by GMP.
class GaussianRational {
public:
	GaussianRational() = default;
	GaussianRational(long v) : re_(v) {}
	GaussianRational(Rational re, Rational im = 0);

	static GaussianRational i() { return {0, 1}; }

	const Rational& re() const { return re_; }
	const Rational& im() const { return im_; }

	bool is_zero() const { return sgn(re_) == 0 && sgn(im_) == 0; }
	bool is_real() const { return sgn(im_) == 0; }
	bool is_gaussian_integer() const;

	GaussianRational conj() const { return {re_, -im_}; }
	Rational norm() const { return re_ * re_ + im_ * im_; }

	GaussianRational& operator+=(const GaussianRational& o);
	GaussianRational& operator-=(const GaussianRational& o);
	GaussianRational& operator*=(const GaussianRational& o);
	GaussianRational& operator/=(const GaussianRational& o);

	friend GaussianRational operator+(GaussianRational a, const GaussianRational& b) { return a += b; }
	friend GaussianRational operator-(GaussianRational a, const GaussianRational& b) { return a -= b; }
	friend GaussianRational operator*(GaussianRational a, const GaussianRational& b) { return a *= b; }
	friend GaussianRational operator/(GaussianRational a, const GaussianRational& b) { return a /= b; }
	GaussianRational operator-() const { return {-re_, -im_}; }

	friend bool operator==(const GaussianRational& a, const GaussianRational& b)
	{
		return a.re_ == b.re_ && a.im_ == b.im_;
	}

	/// Least common multiple of the two denominators.
	Integer denominator_lcm() const;

	std::string str() const;

private:
	Rational re_{0};
	Rational im_{0};
};

enum class Var : std::uint8_t { lambda, mu, t, c0, c1, c2 };
inline constexpr std::size_t kNumVars = 6;

std::string_view var_name(Var v);
std::optional<Var> var_from_name(std::string_view name);

using VarMask = std::uint8_t;
constexpr VarMask mask_of(Var v) { return VarMask(1u << static_cast<unsigned>(v)); }

/// Sparse polynomial over GaussianRational in the parameter universe.
///
/// Terms are stored in the canonical monomial order (higher total degree
/// first, then lexicographically larger exponent vectors in the order
/// lambda > mu > t > c0 > c1 > c2), so structural equality is polynomial
/// equality and rendering is deterministic.
class ParamScalar {
public:
	using Monomial = std::array<std::uint16_t, kNumVars>;

	struct MonomialOrder {
		bool operator()(const Monomial& a, const Monomial& b) const;
	};
	using Terms = std::map<Monomial, GaussianRational, MonomialOrder>;

	ParamScalar() = default;
	ParamScalar(long c);
	ParamScalar(const GaussianRational& c);
	ParamScalar(const Rational& c) : ParamScalar(GaussianRational(c)) {}

	static ParamScalar var(Var v);
	static ParamScalar monomial(const Monomial& m, const GaussianRational& c = 1);
	static ParamScalar i() { return ParamScalar(GaussianRational::i()); }

	/// Parses expressions like "1/2*lambda^2 - 1/2*mu^2", "(1+2*i)*c0*c1",
	/// "(lambda-mu)^3/6". Greek letters and c0/c1/c2 with subscript digits
	/// are accepted as aliases.
	static ParamScalar parse(std::string_view text);

	const Terms& terms() const { return terms_; }
	std::size_t size() const { return terms_.size(); }
	bool is_zero() const { return terms_.empty(); }
	bool is_constant() const;
	/// Throws unless the polynomial is constant.
	GaussianRational constant_value() const;
	GaussianRational coefficient(const Monomial& m) const;

	unsigned total_degree() const;
	unsigned degree_in(Var v) const;
	VarMask variables() const;

	ParamScalar& operator+=(const ParamScalar& o);
	ParamScalar& operator-=(const ParamScalar& o);
	ParamScalar& operator*=(const ParamScalar& o);
	ParamScalar& operator*=(const GaussianRational& c);

	friend ParamScalar operator+(ParamScalar a, const ParamScalar& b) { return a += b; }
	friend ParamScalar operator-(ParamScalar a, const ParamScalar& b) { return a -= b; }
	friend ParamScalar operator*(const ParamScalar& a, const ParamScalar& b);
	friend ParamScalar operator*(ParamScalar a, const GaussianRational& c) { return a *= c; }
	friend ParamScalar operator*(const GaussianRational& c, ParamScalar a) { return a *= c; }
	ParamScalar operator-() const;

	friend bool operator==(const ParamScalar& a, const ParamScalar& b) { return a.terms_ == b.terms_; }

	ParamScalar pow(unsigned e) const;

	/// Exact division of every coefficient by a nonzero integer.
	ParamScalar div_exact(long n) const;
	/// Exact division by a nonzero field element.
	ParamScalar div_exact(const GaussianRational& c) const;

	/// Multivariate exact division: the quotient if `d` divides this
	/// polynomial, nothing otherwise.
	std::optional<ParamScalar> divide(const ParamScalar& d) const;

	using Bindings = std::map<Var, ParamScalar>;
	/// Simultaneous substitution; every occurring indeterminate must be bound.
	ParamScalar substitute(const Bindings& bindings) const;
	/// Substitution that leaves unbound indeterminates in place.
	ParamScalar substitute_partial(const Bindings& bindings) const;

	/// Drops every term whose total degree in `vars` exceeds `order`.
	ParamScalar truncate_degree(VarMask vars, unsigned order) const;

	/// p * L where L is the least common multiple of all denominators.
	ParamScalar clear_denominators() const;
	/// Denominator-free form divided by the gcd of all integer parts.
	ParamScalar primitive() const;
	/// Sign-normalized: the leading coefficient has positive real part (or,
	/// if purely imaginary, positive imaginary part).
	ParamScalar sign_normalized() const;

	std::string str() const;

private:
	void add_term(const Monomial& m, const GaussianRational& c);
	Terms terms_;
};

std::ostream& operator<<(std::ostream& os, const GaussianRational& g);
std::ostream& operator<<(std::ostream& os, const ParamScalar& p);

} // namespace vectdeform
