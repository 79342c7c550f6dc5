#include "vectdeform/scalars.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <ostream>
#include <sstream>
#include <vector>

namespace vectdeform {

std::string to_string(const Rational& q) { return q.get_str(); }

// ---------------------------------------------------------------------------
// GaussianRational

GaussianRational::GaussianRational(Rational re, Rational im) : re_(std::move(re)), im_(std::move(im))
{
	re_.canonicalize();
	im_.canonicalize();
}

bool GaussianRational::is_gaussian_integer() const
{
	return re_.get_den() == 1 && im_.get_den() == 1;
}

GaussianRational& GaussianRational::operator+=(const GaussianRational& o)
{
	re_ += o.re_;
	im_ += o.im_;
	return *this;
}

GaussianRational& GaussianRational::operator-=(const GaussianRational& o)
{
	re_ -= o.re_;
	im_ -= o.im_;
	return *this;
}

GaussianRational& GaussianRational::operator*=(const GaussianRational& o)
{
	if (sgn(im_) == 0 && sgn(o.im_) == 0) {
		re_ *= o.re_;
		return *this;
	}
	Rational re = re_ * o.re_ - im_ * o.im_;
	Rational im = re_ * o.im_ + im_ * o.re_;
	re_ = std::move(re);
	im_ = std::move(im);
	return *this;
}

GaussianRational& GaussianRational::operator/=(const GaussianRational& o)
{
	if (o.is_zero())
		throw Error("division by zero in Gaussian rationals");
	if (sgn(o.im_) == 0) {
		re_ /= o.re_;
		im_ /= o.re_;
		return *this;
	}
	Rational n = o.norm();
	*this *= o.conj();
	re_ /= n;
	im_ /= n;
	return *this;
}

Integer GaussianRational::denominator_lcm() const
{
	Integer l;
	mpz_lcm(l.get_mpz_t(), re_.get_den_mpz_t(), im_.get_den_mpz_t());
	return l;
}

std::string GaussianRational::str() const
{
	if (sgn(im_) == 0)
		return to_string(re_);
	std::string imag;
	if (im_ == 1)
		imag = "i";
	else if (im_ == -1)
		imag = "-i";
	else
		imag = to_string(im_) + "*i";
	if (sgn(re_) == 0)
		return imag;
	std::string out = "(" + to_string(re_);
	out += imag[0] == '-' ? imag : "+" + imag;
	return out + ")";
}

std::ostream& operator<<(std::ostream& os, const GaussianRational& g) { return os << g.str(); }

// ---------------------------------------------------------------------------
// Indeterminates

namespace {
constexpr std::array<std::string_view, kNumVars> kVarNames = {"lambda", "mu", "t", "c0", "c1", "c2"};
}

std::string_view var_name(Var v) { return kVarNames[static_cast<std::size_t>(v)]; }

std::optional<Var> var_from_name(std::string_view name)
{
	for (std::size_t k = 0; k < kNumVars; ++k)
		if (kVarNames[k] == name)
			return static_cast<Var>(k);
	return std::nullopt;
}

// ---------------------------------------------------------------------------
// ParamScalar

namespace {

unsigned degree(const ParamScalar::Monomial& m)
{
	return std::accumulate(m.begin(), m.end(), 0u);
}

ParamScalar::Monomial mono_mul(const ParamScalar::Monomial& a, const ParamScalar::Monomial& b)
{
	ParamScalar::Monomial r{};
	for (std::size_t k = 0; k < kNumVars; ++k)
		r[k] = static_cast<std::uint16_t>(a[k] + b[k]);
	return r;
}

bool mono_divides(const ParamScalar::Monomial& d, const ParamScalar::Monomial& m)
{
	for (std::size_t k = 0; k < kNumVars; ++k)
		if (d[k] > m[k])
			return false;
	return true;
}

ParamScalar::Monomial mono_div(const ParamScalar::Monomial& m, const ParamScalar::Monomial& d)
{
	ParamScalar::Monomial r{};
	for (std::size_t k = 0; k < kNumVars; ++k)
		r[k] = static_cast<std::uint16_t>(m[k] - d[k]);
	return r;
}

} // namespace

bool ParamScalar::MonomialOrder::operator()(const Monomial& a, const Monomial& b) const
{
	unsigned da = degree(a), db = degree(b);
	if (da != db)
		return da > db;
	return a > b;
}

ParamScalar::ParamScalar(long c) : ParamScalar(GaussianRational(c)) {}

ParamScalar::ParamScalar(const GaussianRational& c)
{
	if (!c.is_zero())
		terms_.emplace(Monomial{}, c);
}

ParamScalar ParamScalar::var(Var v)
{
	Monomial m{};
	m[static_cast<std::size_t>(v)] = 1;
	return monomial(m);
}

ParamScalar ParamScalar::monomial(const Monomial& m, const GaussianRational& c)
{
	ParamScalar p;
	p.add_term(m, c);
	return p;
}

void ParamScalar::add_term(const Monomial& m, const GaussianRational& c)
{
	if (c.is_zero())
		return;
	auto [it, inserted] = terms_.try_emplace(m, c);
	if (!inserted) {
		it->second += c;
		if (it->second.is_zero())
			terms_.erase(it);
	}
}

bool ParamScalar::is_constant() const
{
	return terms_.empty() || (terms_.size() == 1 && degree(terms_.begin()->first) == 0);
}

GaussianRational ParamScalar::constant_value() const
{
	if (!is_constant())
		throw Error("expected a constant, got " + str());
	return terms_.empty() ? GaussianRational{} : terms_.begin()->second;
}

GaussianRational ParamScalar::coefficient(const Monomial& m) const
{
	auto it = terms_.find(m);
	return it == terms_.end() ? GaussianRational{} : it->second;
}

unsigned ParamScalar::total_degree() const
{
	return terms_.empty() ? 0 : degree(terms_.begin()->first);
}

unsigned ParamScalar::degree_in(Var v) const
{
	unsigned d = 0;
	for (const auto& [m, c] : terms_)
		d = std::max<unsigned>(d, m[static_cast<std::size_t>(v)]);
	return d;
}

VarMask ParamScalar::variables() const
{
	VarMask mask = 0;
	for (const auto& [m, c] : terms_)
		for (std::size_t k = 0; k < kNumVars; ++k)
			if (m[k] != 0)
				mask |= VarMask(1u << k);
	return mask;
}

ParamScalar& ParamScalar::operator+=(const ParamScalar& o)
{
	for (const auto& [m, c] : o.terms_)
		add_term(m, c);
	return *this;
}

ParamScalar& ParamScalar::operator-=(const ParamScalar& o)
{
	for (const auto& [m, c] : o.terms_)
		add_term(m, -c);
	return *this;
}

ParamScalar operator*(const ParamScalar& a, const ParamScalar& b)
{
	ParamScalar r;
	for (const auto& [ma, ca] : a.terms_)
		for (const auto& [mb, cb] : b.terms_)
			r.add_term(mono_mul(ma, mb), ca * cb);
	return r;
}

ParamScalar& ParamScalar::operator*=(const ParamScalar& o) { return *this = *this * o; }

ParamScalar& ParamScalar::operator*=(const GaussianRational& c)
{
	if (c.is_zero()) {
		terms_.clear();
		return *this;
	}
	for (auto& [m, v] : terms_)
		v *= c;
	return *this;
}

ParamScalar ParamScalar::operator-() const
{
	ParamScalar r = *this;
	for (auto& [m, v] : r.terms_)
		v = -v;
	return r;
}

ParamScalar ParamScalar::pow(unsigned e) const
{
	ParamScalar result(1), base = *this;
	while (e) {
		if (e & 1u)
			result *= base;
		e >>= 1;
		if (e)
			base *= base;
	}
	return result;
}

ParamScalar ParamScalar::div_exact(long n) const
{
	if (n == 0)
		throw Error("div_exact: division by zero");
	return div_exact(GaussianRational(n));
}

ParamScalar ParamScalar::div_exact(const GaussianRational& c) const
{
	if (c.is_zero())
		throw Error("div_exact: division by zero");
	ParamScalar r = *this;
	for (auto& [m, v] : r.terms_)
		v /= c;
	return r;
}

std::optional<ParamScalar> ParamScalar::divide(const ParamScalar& d) const
{
	if (d.is_zero())
		throw Error("divide: division by the zero polynomial");
	const auto& [lead_m, lead_c] = *d.terms_.begin();
	ParamScalar q, r = *this;
	while (!r.is_zero()) {
		const auto [rm, rc] = *r.terms_.begin();
		if (!mono_divides(lead_m, rm))
			return std::nullopt;
		ParamScalar step = monomial(mono_div(rm, lead_m), rc / lead_c);
		q += step;
		r -= step * d;
	}
	return q;
}

ParamScalar ParamScalar::substitute(const Bindings& bindings) const
{
	VarMask used = variables();
	for (std::size_t k = 0; k < kNumVars; ++k)
		if ((used >> k) & 1u)
			if (!bindings.count(static_cast<Var>(k)))
				throw Error("substitute: unbound indeterminate '" +
				            std::string(var_name(static_cast<Var>(k))) + "'");
	return substitute_partial(bindings);
}

ParamScalar ParamScalar::substitute_partial(const Bindings& bindings) const
{
	// Powers are cached per variable; the expansion is a sum of products.
	std::array<std::vector<ParamScalar>, kNumVars> powers;
	auto power_of = [&](std::size_t k, unsigned e) -> const ParamScalar& {
		auto& cache = powers[k];
		if (cache.empty())
			cache.push_back(ParamScalar(1));
		while (cache.size() <= e)
			cache.push_back(cache.back() * bindings.at(static_cast<Var>(k)));
		return cache[e];
	};
	ParamScalar result;
	for (const auto& [m, c] : terms_) {
		Monomial kept{};
		ParamScalar term(c);
		for (std::size_t k = 0; k < kNumVars; ++k) {
			if (m[k] == 0)
				continue;
			if (bindings.count(static_cast<Var>(k)))
				term *= power_of(k, m[k]);
			else
				kept[k] = m[k];
		}
		result += term * monomial(kept);
	}
	return result;
}

ParamScalar ParamScalar::truncate_degree(VarMask vars, unsigned order) const
{
	ParamScalar r;
	for (const auto& [m, c] : terms_) {
		unsigned d = 0;
		for (std::size_t k = 0; k < kNumVars; ++k)
			if ((vars >> k) & 1u)
				d += m[k];
		if (d <= order)
			r.terms_.emplace_hint(r.terms_.end(), m, c);
	}
	return r;
}

ParamScalar ParamScalar::clear_denominators() const
{
	Integer l = 1;
	for (const auto& [m, c] : terms_)
		mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.denominator_lcm().get_mpz_t());
	return *this * GaussianRational(Rational(l));
}

ParamScalar ParamScalar::primitive() const
{
	ParamScalar p = clear_denominators();
	Integer g = 0;
	for (const auto& [m, c] : p.terms_) {
		mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.re().get_num_mpz_t());
		mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.im().get_num_mpz_t());
	}
	if (g == 0 || g == 1)
		return p;
	return p.div_exact(GaussianRational(Rational(g)));
}

ParamScalar ParamScalar::sign_normalized() const
{
	if (terms_.empty())
		return *this;
	const GaussianRational& lead = terms_.begin()->second;
	int s = sgn(lead.re()) != 0 ? sgn(lead.re()) : sgn(lead.im());
	return s < 0 ? -*this : *this;
}

std::string ParamScalar::str() const
{
	if (terms_.empty())
		return "0";
	std::string out;
	bool first = true;
	for (const auto& [m, c] : terms_) {
		std::string mono;
		for (std::size_t k = 0; k < kNumVars; ++k) {
			if (m[k] == 0)
				continue;
			if (!mono.empty())
				mono += "*";
			mono += kVarNames[k];
			if (m[k] > 1)
				mono += "^" + std::to_string(m[k]);
		}
		std::string term;
		if (mono.empty())
			term = c.str();
		else if (c == GaussianRational(1))
			term = mono;
		else if (c == GaussianRational(-1))
			term = "-" + mono;
		else
			term = c.str() + "*" + mono;
		if (first)
			out = term;
		else if (term[0] == '-')
			out += " - " + term.substr(1);
		else
			out += " + " + term;
		first = false;
	}
	return out;
}

std::ostream& operator<<(std::ostream& os, const ParamScalar& p) { return os << p.str(); }

// ---------------------------------------------------------------------------
// Parser

namespace {

std::string ascii_aliases(std::string_view in)
{
	static const std::pair<std::string_view, std::string_view> kAliases[] = {
	    {"\xCE\xBB", "lambda"}, {"\xCE\xBC", "mu"},  {"\xC2\xB5", "mu"},
	    {"\xE2\x82\x80", "0"},  {"\xE2\x82\x81", "1"}, {"\xE2\x82\x82", "2"},
	    {"\xE2\x88\x92", "-"},  {"\xC2\xB7", "*"},   {"\xC2\xB2", "^2"},
	    {"\xC2\xB3", "^3"},
	};
	std::string out;
	for (std::size_t pos = 0; pos < in.size();) {
		bool replaced = false;
		for (const auto& [from, to] : kAliases) {
			if (in.substr(pos, from.size()) == from) {
				out += to;
				pos += from.size();
				replaced = true;
				break;
			}
		}
		if (!replaced)
			out += in[pos++];
	}
	return out;
}

class Parser {
public:
	explicit Parser(std::string text) : s_(std::move(text)) {}

	ParamScalar run()
	{
		ParamScalar r = expr();
		skip();
		if (pos_ != s_.size())
			fail("unexpected character '" + std::string(1, s_[pos_]) + "'");
		return r;
	}

private:
	[[noreturn]] void fail(const std::string& what) const
	{
		throw Error("cannot parse scalar \"" + s_ + "\" at offset " + std::to_string(pos_) + ": " + what);
	}

	void skip()
	{
		while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_])))
			++pos_;
	}

	bool eat(char c)
	{
		skip();
		if (pos_ < s_.size() && s_[pos_] == c) {
			++pos_;
			return true;
		}
		return false;
	}

	ParamScalar expr()
	{
		ParamScalar r = term();
		for (;;) {
			if (eat('+'))
				r += term();
			else if (eat('-'))
				r -= term();
			else
				return r;
		}
	}

	ParamScalar term()
	{
		ParamScalar r = unary();
		for (;;) {
			if (eat('*')) {
				r *= unary();
			} else if (eat('/')) {
				ParamScalar d = unary();
				if (!d.is_constant() || d.is_zero())
					fail("division only by nonzero constants");
				r = r.div_exact(d.constant_value());
			} else {
				return r;
			}
		}
	}

	ParamScalar unary()
	{
		if (eat('-'))
			return -unary();
		if (eat('+'))
			return unary();
		return power();
	}

	ParamScalar power()
	{
		ParamScalar base = atom();
		if (eat('^')) {
			skip();
			std::size_t start = pos_;
			while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_])))
				++pos_;
			if (start == pos_)
				fail("expected exponent");
			base = base.pow(static_cast<unsigned>(std::stoul(s_.substr(start, pos_ - start))));
		}
		return base;
	}

	ParamScalar atom()
	{
		skip();
		if (pos_ >= s_.size())
			fail("unexpected end of input");
		char c = s_[pos_];
		if (c == '(') {
			++pos_;
			ParamScalar r = expr();
			if (!eat(')'))
				fail("expected ')'");
			return r;
		}
		if (std::isdigit(static_cast<unsigned char>(c))) {
			std::size_t start = pos_;
			while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_])))
				++pos_;
			return ParamScalar(GaussianRational(Rational(Integer(s_.substr(start, pos_ - start)))));
		}
		if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
			std::size_t start = pos_;
			while (pos_ < s_.size() &&
			       (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_'))
				++pos_;
			std::string name = s_.substr(start, pos_ - start);
			if (name == "i")
				return ParamScalar::i();
			if (auto v = var_from_name(name))
				return ParamScalar::var(*v);
			fail("unknown indeterminate '" + name + "'");
		}
		fail("unexpected character '" + std::string(1, c) + "'");
	}

	std::string s_;
	std::size_t pos_ = 0;
};

} // namespace

ParamScalar ParamScalar::parse(std::string_view text) { return Parser(ascii_aliases(text)).run(); }

} // namespace vectdeform
