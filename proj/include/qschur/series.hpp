#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace qschur {

/* The series ring has the variables q, u1..ur (colour markers, r <= 5),
 * d (marks non-overlined parts) and x (marks the number of parts). */
inline constexpr int kMaxColours = 5;

/* Caller error: incompatible operands or malformed input. The CLI maps
 * this to exit code 2. */
struct UsageError : std::invalid_argument {
	using std::invalid_argument::invalid_argument;
};

/* Mathematically undefined request (non-unit inversion, diverging
 * product, value outside a subset-sum alphabet, ...). Also exit code 2. */
struct DomainError : std::domain_error {
	using std::domain_error::domain_error;
};

/* Per-variable exponent ceilings. Every operation discards monomials
 * exceeding a ceiling in any coordinate. All operations used here are
 * lower-triangular in the componentwise exponent order (a result
 * coefficient only ever depends on operand coefficients with smaller or
 * equal exponent vectors), so each stored coefficient always equals the
 * corresponding coefficient of the untruncated series. */
struct TruncationBox {
	int qmax = 0;
	int umax = 0; /* bound for each of u1..ur */
	int dmax = 0;
	int xmax = 0;
	int r = 1;    /* number of u-variables */

	TruncationBox() = default;
	TruncationBox(int r_, int qmax_, int umax_, int dmax_, int xmax_);

	bool operator==(const TruncationBox&) const = default;
	std::string str() const;
};

/* Componentwise minimum of the bounds; both boxes must carry the same
 * number of colours. */
TruncationBox meet(const TruncationBox& a, const TruncationBox& b);

/* An exponent vector packed into 64 bits, eight bits per variable, most
 * significant first: e_q, e_u1, ..., e_u5, e_d, e_x. Bounds are capped at
 * 127 so that adding two in-box monomials never carries across fields,
 * and unsigned comparison of the packed value is lexicographic comparison
 * of (e_q, e_u1, ..., e_u5, e_d, e_x). */
class Mono {
public:
	constexpr Mono() = default;

	static Mono q(int e) { return from_field(0, e); }
	static Mono u(int i, int e); /* i in 1..kMaxColours */
	static Mono d(int e) { return from_field(6, e); }
	static Mono x(int e) { return from_field(7, e); }

	/* field 0 = q, 1..5 = u1..u5, 6 = d, 7 = x */
	int exp(int field) const { return int((bits_ >> shift(field)) & 0xff); }
	int q_exp() const { return exp(0); }
	int u_exp(int i) const { return exp(i); }
	int d_exp() const { return exp(6); }
	int x_exp() const { return exp(7); }

	/* exponentwise sum; valid as long as both factors fit their boxes */
	Mono operator*(Mono o) const { return Mono(bits_ + o.bits_); }

	bool is_constant() const { return bits_ == 0; }
	uint64_t packed() const { return bits_; }
	static Mono from_packed(uint64_t b) { return Mono(b); }

	auto operator<=>(const Mono&) const = default;

private:
	explicit constexpr Mono(uint64_t b) : bits_(b) {}
	static int shift(int field) { return 8 * (7 - field); }
	static Mono from_field(int field, int e);

	uint64_t bits_ = 0;
};

bool box_admits(const TruncationBox& box, Mono m);

/* Exact sparse truncated power series over the integers. Immutable in
 * spirit: all operations return fresh values. */
class MultiSeries {
public:
	explicit MultiSeries(const TruncationBox& box) : box_(box) {}

	static MultiSeries zero(const TruncationBox& box) { return MultiSeries(box); }
	static MultiSeries one(const TruncationBox& box);
	static MultiSeries monomial(const TruncationBox& box, Mono m,
	                            const mpz_class& coeff = 1);

	const TruncationBox& box() const { return box_; }
	const std::map<uint64_t, mpz_class>& terms() const { return terms_; }
	bool is_zero() const { return terms_.empty(); }
	std::size_t term_count() const { return terms_.size(); }

	/* coefficient of m, zero when absent */
	mpz_class coeff(Mono m) const;

	/* accumulate one term, dropping out-of-box keys and zero results */
	void add_term(Mono m, const mpz_class& c);

	MultiSeries operator-() const;
	MultiSeries& operator+=(const MultiSeries& o);
	MultiSeries& operator-=(const MultiSeries& o);

	/* term maps compared under a common box; differing boxes are a usage
	 * error, not inequality */
	bool operator==(const MultiSeries& o) const;

	std::string canonical_text() const;

private:
	TruncationBox box_;
	std::map<uint64_t, mpz_class> terms_;

	friend MultiSeries operator+(const MultiSeries&, const MultiSeries&);
	friend MultiSeries operator-(const MultiSeries&, const MultiSeries&);
	friend MultiSeries operator*(const MultiSeries&, const MultiSeries&);
	void retruncate(const TruncationBox& box);
};

MultiSeries operator+(const MultiSeries& a, const MultiSeries& b);
MultiSeries operator-(const MultiSeries& a, const MultiSeries& b);
MultiSeries operator*(const MultiSeries& a, const MultiSeries& b);
MultiSeries operator*(const mpz_class& c, const MultiSeries& a);

/* smallest exponent vector (packed order) where the two series differ */
std::optional<Mono> first_mismatch(const MultiSeries& a, const MultiSeries& b);

/* 1/a for a with constant term +-1, by graded iteration of the
 * geometric series 1/(1-t) in t = 1 - a/c0. */
MultiSeries invert_unit(const MultiSeries& a);

/* sum_{k>=0} m^k, i.e. 1/(1-m) for a non-constant monomial */
MultiSeries geometric_series(const TruncationBox& box, Mono m);

/* Truncated (sign*M; q)_infty = prod_{j>=0} (1 - sign*M*q^j). Factors
 * whose least contribution already exceeds the box are skipped; a
 * constant M has no stabilizing variable and is rejected. */
MultiSeries pochhammer_inf(const TruncationBox& box, Mono m, int sign);

/* The Gaussian polynomial [m, k]_q as a dense coefficient vector,
 * computed by exact division with a remainder-zero assertion; zero when
 * k < 0 or k > m. */
std::vector<mpz_class> qbinomial_poly(int m, int k);
MultiSeries qbinomial(int m, int k, const TruncationBox& box);

/* prod_{k=1}^{r} (-u_k;q)_infty / (d u_k;q)_infty -- the congruence-side
 * generating function in all r colour markers. */
MultiSeries product_side(int r, const TruncationBox& box);

/* Elementary symmetric sum of weight w in u_1..u_num_vars: the sum of
 * u_{i_1}...u_{i_w} over colour masks below 2^num_vars of that weight.
 * Weight 0 gives 1, weights above num_vars give 0. */
MultiSeries colour_weight_sum(const TruncationBox& box, int num_vars, int weight);

/* x^m -> x^m q^{i m} in every term (the map f(x) -> f(x q^i)) */
MultiSeries substitute_x_power(const MultiSeries& s, int i);

/* Sum over all x-exponents (evaluation at x = 1). Only sound when the
 * true series has x-degree within the box for every other monomial;
 * callers on the enumerative side guarantee xmax >= r * umax. */
MultiSeries eval_x_one(const MultiSeries& s);

/* Canonical text form: one `e_q e_u1 .. e_ur e_d e_x coeff` line per
 * term, lexicographically sorted. */
MultiSeries parse_canonical_text(const TruncationBox& box, const std::string& text);

} // namespace qschur
