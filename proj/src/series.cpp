#include "qschur/series.hpp"

#include <sstream>

namespace qschur {

TruncationBox::TruncationBox(int r_, int qmax_, int umax_, int dmax_, int xmax_)
    : qmax(qmax_), umax(umax_), dmax(dmax_), xmax(xmax_), r(r_)
{
	if (r < 1 || r > kMaxColours)
		throw UsageError("colour count must be between 1 and 5");
	/* 127 keeps one guard bit per packed field */
	for (int b : {qmax, umax, dmax, xmax}) {
		if (b < 0 || b > 127)
			throw UsageError("truncation bounds must lie in [0, 127]");
	}
}

std::string TruncationBox::str() const
{
	std::ostringstream os;
	os << "q<=" << qmax << ", u1.." << "u" << r << "<=" << umax
	   << ", d<=" << dmax << ", x<=" << xmax;
	return os.str();
}

TruncationBox meet(const TruncationBox& a, const TruncationBox& b)
{
	if (a.r != b.r)
		throw UsageError("colour count mismatch between truncation boxes");
	return TruncationBox(a.r, std::min(a.qmax, b.qmax), std::min(a.umax, b.umax),
	                     std::min(a.dmax, b.dmax), std::min(a.xmax, b.xmax));
}

Mono Mono::u(int i, int e)
{
	if (i < 1 || i > kMaxColours)
		throw UsageError("colour variable index out of range");
	return from_field(i, e);
}

Mono Mono::from_field(int field, int e)
{
	if (e < 0 || e > 255)
		throw UsageError("exponent out of range");
	return Mono(uint64_t(e) << shift(field));
}

bool box_admits(const TruncationBox& box, Mono m)
{
	if (m.q_exp() > box.qmax || m.d_exp() > box.dmax || m.x_exp() > box.xmax)
		return false;
	for (int i = 1; i <= kMaxColours; ++i) {
		int bound = (i <= box.r) ? box.umax : 0;
		if (m.u_exp(i) > bound) return false;
	}
	return true;
}

MultiSeries MultiSeries::one(const TruncationBox& box)
{
	return monomial(box, Mono(), 1);
}

MultiSeries MultiSeries::monomial(const TruncationBox& box, Mono m, const mpz_class& coeff)
{
	MultiSeries s(box);
	s.add_term(m, coeff);
	return s;
}

mpz_class MultiSeries::coeff(Mono m) const
{
	auto it = terms_.find(m.packed());
	return it == terms_.end() ? mpz_class(0) : it->second;
}

void MultiSeries::add_term(Mono m, const mpz_class& c)
{
	if (c == 0 || !box_admits(box_, m)) return;
	auto [it, inserted] = terms_.emplace(m.packed(), c);
	if (!inserted) {
		it->second += c;
		if (it->second == 0) terms_.erase(it);
	}
}

void MultiSeries::retruncate(const TruncationBox& box)
{
	for (auto it = terms_.begin(); it != terms_.end();) {
		if (!box_admits(box, Mono::from_packed(it->first)))
			it = terms_.erase(it);
		else
			++it;
	}
	box_ = box;
}

MultiSeries MultiSeries::operator-() const
{
	MultiSeries out(box_);
	for (const auto& [k, c] : terms_) out.terms_.emplace(k, -c);
	return out;
}

MultiSeries& MultiSeries::operator+=(const MultiSeries& o)
{
	*this = *this + o;
	return *this;
}

MultiSeries& MultiSeries::operator-=(const MultiSeries& o)
{
	*this = *this - o;
	return *this;
}

bool MultiSeries::operator==(const MultiSeries& o) const
{
	if (box_ != o.box_)
		throw UsageError("series comparison requires a common truncation box");
	return terms_ == o.terms_;
}

MultiSeries operator+(const MultiSeries& a, const MultiSeries& b)
{
	TruncationBox box = meet(a.box_, b.box_);
	MultiSeries out = a;
	out.retruncate(box);
	for (const auto& [k, c] : b.terms_) out.add_term(Mono::from_packed(k), c);
	return out;
}

MultiSeries operator-(const MultiSeries& a, const MultiSeries& b)
{
	TruncationBox box = meet(a.box_, b.box_);
	MultiSeries out = a;
	out.retruncate(box);
	for (const auto& [k, c] : b.terms_) out.add_term(Mono::from_packed(k), -c);
	return out;
}

MultiSeries operator*(const MultiSeries& a, const MultiSeries& b)
{
	TruncationBox box = meet(a.box_, b.box_);
	const MultiSeries& small = (a.term_count() <= b.term_count()) ? a : b;
	const MultiSeries& large = (a.term_count() <= b.term_count()) ? b : a;

	MultiSeries out(box);
	for (const auto& [ks, cs] : small.terms_) {
		for (const auto& [kl, cl] : large.terms_) {
			/* field sums stay below 256: bounds are capped at 127 */
			Mono m = Mono::from_packed(ks + kl);
			if (!box_admits(box, m)) continue;
			mpz_class& acc = out.terms_[m.packed()];
			mpz_addmul(acc.get_mpz_t(), cs.get_mpz_t(), cl.get_mpz_t());
		}
	}
	for (auto it = out.terms_.begin(); it != out.terms_.end();) {
		if (it->second == 0)
			it = out.terms_.erase(it);
		else
			++it;
	}
	return out;
}

MultiSeries operator*(const mpz_class& c, const MultiSeries& a)
{
	MultiSeries out(a.box());
	if (c == 0) return out;
	for (const auto& [k, v] : a.terms()) out.add_term(Mono::from_packed(k), c * v);
	return out;
}

std::optional<Mono> first_mismatch(const MultiSeries& a, const MultiSeries& b)
{
	if (a.box() != b.box())
		throw UsageError("series comparison requires a common truncation box");
	auto ia = a.terms().begin(), ib = b.terms().begin();
	while (ia != a.terms().end() && ib != b.terms().end()) {
		if (ia->first != ib->first)
			return Mono::from_packed(std::min(ia->first, ib->first));
		if (ia->second != ib->second) return Mono::from_packed(ia->first);
		++ia;
		++ib;
	}
	if (ia != a.terms().end()) return Mono::from_packed(ia->first);
	if (ib != b.terms().end()) return Mono::from_packed(ib->first);
	return std::nullopt;
}

MultiSeries invert_unit(const MultiSeries& a)
{
	mpz_class c0 = a.coeff(Mono());
	if (c0 != 1 && c0 != -1)
		throw DomainError("inversion requires constant term +1 or -1");

	/* 1/a = c0 * sum_k t^k with t = 1 - c0*a (no constant term); every
	 * power of t raises the minimum total degree, so the sum stabilizes
	 * within the box. */
	const TruncationBox& box = a.box();
	MultiSeries t = MultiSeries::one(box) - (c0 == 1 ? a : -a);
	MultiSeries sum = MultiSeries::one(box);
	MultiSeries acc = MultiSeries::one(box);
	int degree_budget = box.qmax + box.r * box.umax + box.dmax + box.xmax;
	for (int k = 0; k < degree_budget; ++k) {
		acc = acc * t;
		if (acc.is_zero()) break;
		sum += acc;
	}
	return c0 == 1 ? sum : -sum;
}

MultiSeries geometric_series(const TruncationBox& box, Mono m)
{
	if (m.is_constant())
		throw DomainError("geometric series needs a non-constant monomial");
	MultiSeries out(box);
	Mono power;
	while (box_admits(box, power)) {
		out.add_term(power, 1);
		power = power * m;
	}
	return out;
}

MultiSeries pochhammer_inf(const TruncationBox& box, Mono m, int sign)
{
	if (sign != 1 && sign != -1)
		throw UsageError("pochhammer sign must be +1 or -1");
	if (m.is_constant())
		throw DomainError("infinite pochhammer of a constant does not stabilize");

	MultiSeries out = MultiSeries::one(box);
	if (!box_admits(box, m)) return out; /* every factor is 1 within the box */

	Mono factor_mono = m;
	for (int j = 0; m.q_exp() + j <= box.qmax; ++j) {
		if (box_admits(box, factor_mono)) {
			MultiSeries factor = MultiSeries::one(box);
			factor.add_term(factor_mono, -sign);
			out = out * factor;
		}
		factor_mono = factor_mono * Mono::q(1);
	}
	return out;
}

namespace {

/* dense product by (1 - q^t) */
std::vector<mpz_class> mul_one_minus_qt(const std::vector<mpz_class>& a, int t)
{
	std::vector<mpz_class> out(a.size() + t);
	for (std::size_t i = 0; i < a.size(); ++i) {
		out[i] += a[i];
		out[i + t] -= a[i];
	}
	return out;
}

/* dense exact division by (1 - q^t); the remainder must vanish */
std::vector<mpz_class> div_one_minus_qt(const std::vector<mpz_class>& a, int t)
{
	if (a.empty()) return a;
	std::vector<mpz_class> b(a.size());
	for (std::size_t i = 0; i < a.size(); ++i) {
		b[i] = a[i];
		if (i >= std::size_t(t)) b[i] += b[i - t];
	}
	for (std::size_t i = a.size() >= std::size_t(t) ? a.size() - t : 0; i < a.size(); ++i) {
		if (b[i] != 0)
			throw DomainError("inexact polynomial division in q-binomial");
	}
	b.resize(a.size() >= std::size_t(t) ? a.size() - t : 0);
	return b;
}

} // namespace

std::vector<mpz_class> qbinomial_poly(int m, int k)
{
	if (k < 0 || m < 0 || k > m) return {};
	std::vector<mpz_class> poly{1};
	for (int j = 0; j < k; ++j) poly = mul_one_minus_qt(poly, m - j);
	for (int j = 0; j < k; ++j) poly = div_one_minus_qt(poly, j + 1);
	return poly;
}

MultiSeries qbinomial(int m, int k, const TruncationBox& box)
{
	MultiSeries out(box);
	std::vector<mpz_class> poly = qbinomial_poly(m, k);
	for (std::size_t i = 0; i < poly.size(); ++i) {
		if (int(i) > box.qmax) break;
		if (i <= 255) out.add_term(Mono::q(int(i)), poly[i]);
	}
	return out;
}

MultiSeries product_side(int r, const TruncationBox& box)
{
	if (box.r != r)
		throw UsageError("product_side: box carries a different colour count");
	MultiSeries out = MultiSeries::one(box);
	for (int k = 1; k <= r; ++k) {
		out = out * pochhammer_inf(box, Mono::u(k, 1), -1);
		/* 1/(d u_k; q)_infty, one geometric factor per power of q */
		for (int j = 0; j <= box.qmax; ++j) {
			Mono m = Mono::d(1) * Mono::u(k, 1) * Mono::q(j);
			if (!box_admits(box, m)) continue;
			out = out * geometric_series(box, m);
		}
	}
	return out;
}

MultiSeries colour_weight_sum(const TruncationBox& box, int num_vars, int weight)
{
	MultiSeries out(box);
	if (weight == 0) return MultiSeries::one(box);
	if (weight < 0 || weight > num_vars) return out;
	for (int mask = 1; mask < (1 << num_vars); ++mask) {
		if (__builtin_popcount(unsigned(mask)) != weight) continue;
		Mono m;
		for (int i = 1; i <= num_vars; ++i)
			if (mask & (1 << (i - 1))) m = m * Mono::u(i, 1);
		out.add_term(m, 1);
	}
	return out;
}

MultiSeries substitute_x_power(const MultiSeries& s, int i)
{
	if (i < 0) throw UsageError("substitute_x_power needs a non-negative shift");
	if (i == 0) return s;
	MultiSeries out(s.box());
	for (const auto& [k, c] : s.terms()) {
		Mono m = Mono::from_packed(k);
		long eq = long(m.q_exp()) + long(i) * m.x_exp();
		if (eq > s.box().qmax) continue;
		out.add_term(m * Mono::q(i * m.x_exp()), c);
	}
	return out;
}

MultiSeries eval_x_one(const MultiSeries& s)
{
	MultiSeries out(s.box());
	for (const auto& [k, c] : s.terms()) {
		Mono m = Mono::from_packed(k & ~uint64_t(0xff)); /* clear the x field */
		out.add_term(m, c);
	}
	return out;
}

std::string MultiSeries::canonical_text() const
{
	std::ostringstream os;
	for (const auto& [k, c] : terms_) {
		Mono m = Mono::from_packed(k);
		os << m.q_exp();
		for (int i = 1; i <= box_.r; ++i) os << ' ' << m.u_exp(i);
		os << ' ' << m.d_exp() << ' ' << m.x_exp() << ' ' << c.get_str() << '\n';
	}
	return os.str();
}

MultiSeries parse_canonical_text(const TruncationBox& box, const std::string& text)
{
	MultiSeries out(box);
	std::istringstream is(text);
	std::string line;
	while (std::getline(is, line)) {
		if (line.empty()) continue;
		std::istringstream ls(line);
		int eq = 0, ed = 0, ex = 0;
		std::vector<int> eu(box.r, 0);
		std::string coeff;
		ls >> eq;
		for (int i = 0; i < box.r; ++i) ls >> eu[i];
		ls >> ed >> ex >> coeff;
		if (!ls) throw UsageError("malformed series term: " + line);
		Mono m = Mono::q(eq) * Mono::d(ed) * Mono::x(ex);
		for (int i = 1; i <= box.r; ++i) m = m * Mono::u(i, eu[i - 1]);
		out.add_term(m, mpz_class(coeff));
	}
	return out;
}

} // namespace qschur
