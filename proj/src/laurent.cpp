#include "vectdeform/laurent.hpp"

#include <algorithm>
#include <limits>
#include <sstream>

namespace vectdeform {

std::string_view basis_name(Basis b) { return b == Basis::fourier ? "fourier" : "polynomial"; }

namespace {

void require_same_basis(Basis a, Basis b, const char* op)
{
	if (a != b)
		throw Error(std::string(op) + ": basis mismatch (" + std::string(basis_name(a)) + " vs " +
		            std::string(basis_name(b)) + ")");
}

} // namespace

// ---------------------------------------------------------------------------
// CircleFunction

CircleFunction CircleFunction::mode(int n, const ParamScalar& c)
{
	CircleFunction f(Basis::fourier);
	f.add(n, c);
	return f;
}

CircleFunction CircleFunction::monomial(int n, const ParamScalar& c)
{
	if (n < 0)
		throw Error("polynomial basis has no negative powers of x");
	CircleFunction f(Basis::polynomial);
	f.add(n, c);
	return f;
}

CircleFunction CircleFunction::constant(const ParamScalar& c, Basis basis)
{
	CircleFunction f(basis);
	f.add(0, c);
	return f;
}

ParamScalar CircleFunction::coefficient(int n) const
{
	auto it = coeffs_.find(n);
	return it == coeffs_.end() ? ParamScalar() : it->second;
}

std::optional<int> CircleFunction::degree() const
{
	if (basis_ != Basis::polynomial || coeffs_.empty())
		return std::nullopt;
	return coeffs_.rbegin()->first;
}

void CircleFunction::add(int n, const ParamScalar& c)
{
	if (c.is_zero())
		return;
	if (basis_ == Basis::polynomial && n < 0)
		throw Error("polynomial basis has no negative powers of x");
	auto [it, inserted] = coeffs_.try_emplace(n, c);
	if (!inserted) {
		it->second += c;
		if (it->second.is_zero())
			coeffs_.erase(it);
	}
}

CircleFunction CircleFunction::derivative(int order) const
{
	if (order < 0)
		throw Error("negative derivative order");
	if (order == 0)
		return *this;
	CircleFunction r(basis_);
	if (basis_ == Basis::fourier) {
		for (const auto& [n, c] : coeffs_) {
			if (n == 0)
				continue;
			// (i n)^order
			GaussianRational factor(1);
			for (int k = 0; k < order; ++k)
				factor *= GaussianRational(0, n);
			r.coeffs_.emplace(n, c * factor);
		}
	} else {
		for (const auto& [n, c] : coeffs_) {
			if (n < order)
				continue;
			long falling = 1;
			for (int k = 0; k < order; ++k)
				falling *= n - k;
			r.coeffs_.emplace(n - order, c * GaussianRational(falling));
		}
	}
	return r;
}

ParamScalar CircleFunction::mean() const
{
	if (basis_ != Basis::fourier)
		throw Error("mean over the circle requires the Fourier basis");
	return coefficient(0);
}

CircleFunction CircleFunction::map_coefficients(const std::function<ParamScalar(const ParamScalar&)>& fn) const
{
	CircleFunction r(basis_);
	for (const auto& [n, c] : coeffs_)
		r.add(n, fn(c));
	return r;
}

CircleFunction& CircleFunction::operator+=(const CircleFunction& o)
{
	if (o.coeffs_.empty())
		return *this;
	if (coeffs_.empty())
		basis_ = o.basis_;
	require_same_basis(basis_, o.basis_, "add");
	for (const auto& [n, c] : o.coeffs_)
		add(n, c);
	return *this;
}

CircleFunction& CircleFunction::operator-=(const CircleFunction& o)
{
	if (o.coeffs_.empty())
		return *this;
	if (coeffs_.empty())
		basis_ = o.basis_;
	require_same_basis(basis_, o.basis_, "subtract");
	for (const auto& [n, c] : o.coeffs_)
		add(n, -c);
	return *this;
}

CircleFunction& CircleFunction::operator*=(const ParamScalar& c)
{
	if (c.is_zero()) {
		coeffs_.clear();
		return *this;
	}
	for (auto it = coeffs_.begin(); it != coeffs_.end();) {
		it->second *= c;
		it = it->second.is_zero() ? coeffs_.erase(it) : std::next(it);
	}
	return *this;
}

CircleFunction operator*(const CircleFunction& a, const CircleFunction& b)
{
	require_same_basis(a.basis_, b.basis_, "multiply");
	CircleFunction r(a.basis_);
	for (const auto& [na, ca] : a.coeffs_)
		for (const auto& [nb, cb] : b.coeffs_)
			r.add(na + nb, ca * cb);
	return r;
}

nlohmann::json CircleFunction::to_json() const
{
	nlohmann::json j = nlohmann::json::object();
	for (const auto& [n, c] : coeffs_)
		j[std::to_string(n)] = c.str();
	return j;
}

std::string CircleFunction::str() const
{
	if (coeffs_.empty())
		return "0";
	std::ostringstream os;
	bool first = true;
	for (const auto& [n, c] : coeffs_) {
		if (!first)
			os << " + ";
		first = false;
		os << "(" << c.str() << ")";
		if (basis_ == Basis::fourier)
			os << "*e^{" << n << "ix}";
		else
			os << "*x^" << n;
	}
	return os.str();
}

CircleFunction cf_derive(const CircleFunction& f) { return f.derivative(1); }

// ---------------------------------------------------------------------------
// Vector fields

VectorField basis_field(int n) { return {CircleFunction::mode(n, ParamScalar(GaussianRational(0, -1)))}; }

VectorField vect_bracket(const VectorField& X, const VectorField& Y)
{
	require_same_basis(X.f.basis(), Y.f.basis(), "vect_bracket");
	return {X.f * Y.f.derivative() - X.f.derivative() * Y.f};
}

// ---------------------------------------------------------------------------
// TruncatedLaurent

TruncatedLaurent TruncatedLaurent::truncation(int floor, Basis basis)
{
	TruncatedLaurent r(basis);
	r.exact_ = false;
	r.floor_ = floor;
	return r;
}

TruncatedLaurent TruncatedLaurent::term(int grade, const CircleFunction& f)
{
	TruncatedLaurent r(f.basis());
	r.add(grade, f);
	return r;
}

int TruncatedLaurent::floor() const
{
	if (!exact_)
		return floor_;
	return grades_.empty() ? 0 : grades_.begin()->first;
}

std::optional<int> TruncatedLaurent::top() const
{
	if (!grades_.empty())
		return grades_.rbegin()->first;
	if (!exact_)
		return floor_ - 1;
	return std::nullopt;
}

CircleFunction TruncatedLaurent::grade(int k) const
{
	if (!exact_ && k < floor_)
		throw Error("grade " + std::to_string(k) + " lies below the reliability floor " +
		            std::to_string(floor_));
	auto it = grades_.find(k);
	return it == grades_.end() ? CircleFunction(basis_) : it->second;
}

void TruncatedLaurent::add(int k, const CircleFunction& f)
{
	if (f.is_zero())
		return;
	require_same_basis(basis_, f.basis(), "add grade");
	if (!exact_ && k < floor_)
		return;
	auto [it, inserted] = grades_.try_emplace(k, f);
	if (!inserted) {
		it->second += f;
		if (it->second.is_zero())
			grades_.erase(it);
	}
}

void TruncatedLaurent::drop_below(int k)
{
	grades_.erase(grades_.begin(), grades_.lower_bound(k));
}

TruncatedLaurent TruncatedLaurent::truncated(int new_floor) const
{
	if (!exact_ && new_floor < floor_)
		throw Error("cannot truncate below the existing floor " + std::to_string(floor_));
	TruncatedLaurent r = *this;
	r.exact_ = false;
	r.floor_ = new_floor;
	r.drop_below(new_floor);
	return r;
}

bool TruncatedLaurent::agrees_with(const TruncatedLaurent& o, int down_to) const
{
	if ((!exact_ && down_to < floor_) || (!o.exact_ && down_to < o.floor_))
		throw Error("comparison below the reliability floor (requested grade " + std::to_string(down_to) + ")");
	if (!is_zero() && !o.is_zero())
		require_same_basis(basis_, o.basis_, "compare");
	auto a = grades_.lower_bound(down_to);
	auto b = o.grades_.lower_bound(down_to);
	return std::equal(a, grades_.end(), b, o.grades_.end());
}

bool operator==(const TruncatedLaurent& a, const TruncatedLaurent& b)
{
	int down_to = std::numeric_limits<int>::min();
	if (!a.exact_)
		down_to = std::max(down_to, a.floor_);
	if (!b.exact_)
		down_to = std::max(down_to, b.floor_);
	return a.agrees_with(b, down_to);
}

TruncatedLaurent TruncatedLaurent::map_coefficients(const std::function<ParamScalar(const ParamScalar&)>& fn) const
{
	TruncatedLaurent r = *this;
	r.grades_.clear();
	for (const auto& [k, f] : grades_)
		r.add(k, f.map_coefficients(fn));
	return r;
}

TruncatedLaurent TruncatedLaurent::x_derivative() const
{
	TruncatedLaurent r = *this;
	r.grades_.clear();
	for (const auto& [k, f] : grades_)
		r.add(k, f.derivative());
	return r;
}

TruncatedLaurent TruncatedLaurent::euler_xi() const
{
	TruncatedLaurent r = *this;
	r.grades_.clear();
	for (const auto& [k, f] : grades_)
		r.add(k, f * ParamScalar(k));
	return r;
}

TruncatedLaurent& TruncatedLaurent::operator+=(const TruncatedLaurent& o)
{
	if (grades_.empty() && exact_)
		basis_ = o.basis_;
	if (!o.grades_.empty())
		require_same_basis(basis_, o.basis_, "add");
	if (!o.exact_) {
		floor_ = exact_ ? o.floor_ : std::max(floor_, o.floor_);
		exact_ = false;
		drop_below(floor_);
	}
	for (const auto& [k, f] : o.grades_)
		add(k, f);
	return *this;
}

TruncatedLaurent& TruncatedLaurent::operator-=(const TruncatedLaurent& o) { return *this += o * ParamScalar(-1); }

TruncatedLaurent& TruncatedLaurent::operator*=(const ParamScalar& c)
{
	for (auto it = grades_.begin(); it != grades_.end();) {
		it->second *= c;
		it = it->second.is_zero() ? grades_.erase(it) : std::next(it);
	}
	return *this;
}

nlohmann::json TruncatedLaurent::to_json() const
{
	nlohmann::json grades = nlohmann::json::object();
	for (const auto& [k, f] : grades_)
		grades[std::to_string(k)] = f.to_json();
	nlohmann::json j;
	j["basis"] = basis_name(basis_);
	j["exact"] = exact_;
	j["floor"] = floor();
	auto t = top();
	j["top"] = t ? nlohmann::json(*t) : nlohmann::json(nullptr);
	j["grades"] = grades;
	return j;
}

TruncatedLaurent TruncatedLaurent::from_json(const nlohmann::json& j)
{
	Basis basis = j.value("basis", std::string("fourier")) == "polynomial" ? Basis::polynomial : Basis::fourier;
	TruncatedLaurent r(basis);
	if (!j.value("exact", true)) {
		r.exact_ = false;
		r.floor_ = j.at("floor").get<int>();
	}
	for (const auto& [gk, modes] : j.at("grades").items()) {
		CircleFunction f(basis);
		for (const auto& [mk, v] : modes.items())
			f.add(std::stoi(mk), ParamScalar::parse(v.get<std::string>()));
		r.add(std::stoi(gk), f);
	}
	return r;
}

std::string TruncatedLaurent::str() const
{
	std::ostringstream os;
	bool first = true;
	for (auto it = grades_.rbegin(); it != grades_.rend(); ++it) {
		if (!first)
			os << " + ";
		first = false;
		os << "[" << it->second.str() << "]*xi^" << it->first;
	}
	if (first)
		os << "0";
	if (!exact_)
		os << " + O(xi^" << floor_ - 1 << ")";
	return os.str();
}

// ---------------------------------------------------------------------------
// Products

namespace {

// Lowest reliable grade of a binary graded operation whose grade shift is
// `shift` (-1 for the bracket, 0 for the product). An exact operand has no
// unknown tail and contributes no constraint.
std::optional<int> result_floor(const TruncatedLaurent& F, const TruncatedLaurent& G, int shift)
{
	if (F.is_exact() && G.is_exact())
		return std::nullopt;
	int floor = std::numeric_limits<int>::min();
	if (!F.is_exact())
		floor = std::max(floor, F.floor() + *G.top());
	if (!G.is_exact())
		floor = std::max(floor, G.floor() + *F.top());
	return floor + shift;
}

bool exact_zero(const TruncatedLaurent& F) { return F.is_exact() && F.is_zero(); }

} // namespace

TruncatedLaurent poisson_bracket(const TruncatedLaurent& F, const TruncatedLaurent& G)
{
	if (!exact_zero(F) && !exact_zero(G))
		require_same_basis(F.basis(), G.basis(), "poisson_bracket");
	if (exact_zero(F) || exact_zero(G))
		return TruncatedLaurent(F.basis());

	const auto floor = result_floor(F, G, -1);
	TruncatedLaurent r = floor ? TruncatedLaurent::truncation(*floor, F.basis()) : TruncatedLaurent(F.basis());

	std::map<int, CircleFunction> dF, dG;
	for (const auto& [a, f] : F.grades_)
		dF.emplace(a, f.derivative());
	for (const auto& [b, g] : G.grades_)
		dG.emplace(b, g.derivative());

	for (const auto& [a, f] : F.grades_) {
		for (const auto& [b, g] : G.grades_) {
			const int k = a + b - 1;
			if (floor && k < *floor)
				continue;
			CircleFunction term(F.basis());
			if (a != 0)
				term += (f * dG.at(b)) * ParamScalar(a);
			if (b != 0)
				term -= (dF.at(a) * g) * ParamScalar(b);
			r.add(k, term);
		}
	}
	return r;
}

TruncatedLaurent laurent_product(const TruncatedLaurent& F, const TruncatedLaurent& G)
{
	if (!exact_zero(F) && !exact_zero(G))
		require_same_basis(F.basis(), G.basis(), "laurent_product");
	if (exact_zero(F) || exact_zero(G))
		return TruncatedLaurent(F.basis());

	const auto floor = result_floor(F, G, 0);
	TruncatedLaurent r = floor ? TruncatedLaurent::truncation(*floor, F.basis()) : TruncatedLaurent(F.basis());
	for (const auto& [a, f] : F.grades_) {
		for (const auto& [b, g] : G.grades_) {
			if (floor && a + b < *floor)
				continue;
			r.add(a + b, f * g);
		}
	}
	return r;
}

CircleFunction density_action(const DensityWeight& w, const VectorField& X, const CircleFunction& a)
{
	if (X.f.is_zero() || a.is_zero())
		return CircleFunction(a.basis());
	require_same_basis(X.f.basis(), a.basis(), "density_action");
	return X.f * a.derivative() - (X.f.derivative() * a) * w.lambda;
}

} // namespace vectdeform
