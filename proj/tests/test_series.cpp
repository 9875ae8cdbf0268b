#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "qschur/series.hpp"

#include <random>

using namespace qschur;

namespace {

TruncationBox small_box(int r = 1, int qmax = 8, int umax = 3, int dmax = 3, int xmax = 3)
{
	return TruncationBox(r, qmax, umax, dmax, xmax);
}

MultiSeries random_series(const TruncationBox& box, std::mt19937_64& rng, int terms)
{
	MultiSeries s(box);
	std::uniform_int_distribution<int> coeff(-9, 9);
	std::uniform_int_distribution<int> eq(0, box.qmax), eu(0, box.umax),
	    ed(0, box.dmax), ex(0, box.xmax);
	for (int t = 0; t < terms; ++t) {
		Mono m = Mono::q(eq(rng)) * Mono::d(ed(rng)) * Mono::x(ex(rng));
		for (int i = 1; i <= box.r; ++i) m = m * Mono::u(i, eu(rng));
		s.add_term(m, coeff(rng));
	}
	return s;
}

} // namespace

TEST_CASE("addition basics")
{
	TruncationBox box = small_box();
	MultiSeries one = MultiSeries::one(box);
	MultiSeries q = MultiSeries::monomial(box, Mono::q(1));

	CHECK((one + q) + (one - q) == MultiSeries::monomial(box, Mono(), 2));

	std::mt19937_64 rng(7);
	MultiSeries s = random_series(box, rng, 10);
	CHECK(s + MultiSeries::zero(box) == s);

	MultiSeries u1q = MultiSeries::monomial(box, Mono::u(1, 1) * Mono::q(1));
	CHECK(u1q + u1q == MultiSeries::monomial(box, Mono::u(1, 1) * Mono::q(1), 2));
}

TEST_CASE("multiplication basics")
{
	TruncationBox box = small_box();
	MultiSeries one = MultiSeries::one(box);
	MultiSeries q = MultiSeries::monomial(box, Mono::q(1));

	MultiSeries expect = one - MultiSeries::monomial(box, Mono::q(2));
	CHECK((one + q) * (one - q) == expect);

	std::mt19937_64 rng(11);
	MultiSeries s = random_series(box, rng, 12);
	CHECK(s * one == s);

	MultiSeries a = one + MultiSeries::monomial(box, Mono::u(1, 1) * Mono::q(1));
	MultiSeries b = one + MultiSeries::monomial(box, Mono::u(1, 1) * Mono::q(2));
	MultiSeries prod = a * b;
	CHECK(prod.coeff(Mono()) == 1);
	CHECK(prod.coeff(Mono::u(1, 1) * Mono::q(1)) == 1);
	CHECK(prod.coeff(Mono::u(1, 1) * Mono::q(2)) == 1);
	CHECK(prod.coeff(Mono::u(1, 2) * Mono::q(3)) == 1);
	CHECK(prod.term_count() == 4);
}

TEST_CASE("colour count mismatch is a usage error")
{
	TruncationBox b1 = small_box(1), b2 = small_box(2);
	MultiSeries s1 = MultiSeries::one(b1), s2 = MultiSeries::one(b2);
	CHECK_THROWS_AS((void)(s1 + s2), UsageError);
	CHECK_THROWS_AS((void)(s1 * s2), UsageError);
	CHECK_THROWS_AS((void)meet(b1, b2), UsageError);
}

TEST_CASE("unit inversion")
{
	TruncationBox box = small_box();
	MultiSeries one = MultiSeries::one(box);
	MultiSeries q = MultiSeries::monomial(box, Mono::q(1));

	MultiSeries geo = invert_unit(one - q);
	for (int n = 0; n <= box.qmax; ++n) CHECK(geo.coeff(Mono::q(n)) == 1);
	CHECK(int(geo.term_count()) == box.qmax + 1);

	CHECK(invert_unit(one) == one);

	MultiSeries du1 = MultiSeries::monomial(box, Mono::d(1) * Mono::u(1, 1));
	MultiSeries inv = invert_unit(one - du1);
	for (int k = 0; k <= 3; ++k)
		CHECK(inv.coeff(Mono::d(k) * Mono::u(1, k)) == 1);
	CHECK(inv.term_count() == 4);

	CHECK_THROWS_AS(invert_unit(q), DomainError);
	CHECK_THROWS_AS(invert_unit(one + one), DomainError);

	/* random units with constant term +-1 invert exactly */
	std::mt19937_64 rng(23);
	for (int trial = 0; trial < 20; ++trial) {
		MultiSeries s = random_series(box, rng, 6);
		s.add_term(Mono(), 1 - s.coeff(Mono())); /* force constant term 1 */
		if (trial % 2 == 1) s = -s;
		CHECK(invert_unit(s) * s == MultiSeries::one(box));
	}
}

TEST_CASE("infinite pochhammer")
{
	TruncationBox box(1, 4, 0, 0, 0);
	/* (1+q)(1+q^2)(1+q^3)(1+q^4), expanded by hand as the oracle */
	MultiSeries prod = MultiSeries::one(box);
	for (int j = 1; j <= 4; ++j) {
		MultiSeries f = MultiSeries::one(box);
		f.add_term(Mono::q(j), 1);
		prod = prod * f;
	}
	CHECK(pochhammer_inf(box, Mono::q(1), -1) == prod);
	CHECK(prod.coeff(Mono::q(3)) == 2);
	CHECK(prod.coeff(Mono::q(4)) == 2);

	TruncationBox u0(1, 6, 0, 0, 0);
	CHECK(pochhammer_inf(u0, Mono::u(1, 1), +1) == MultiSeries::one(u0));

	CHECK_THROWS_AS(pochhammer_inf(u0, Mono(), -1), DomainError);
	CHECK_THROWS_AS(pochhammer_inf(u0, Mono::q(1), 2), UsageError);
}

TEST_CASE("fourteen overpartitions of four")
{
	TruncationBox box(1, 6, 0, 0, 0);
	MultiSeries s = pochhammer_inf(box, Mono::q(1), -1) *
	                invert_unit(pochhammer_inf(box, Mono::q(1), +1));
	CHECK(s.coeff(Mono::q(4)) == 14);
	CHECK(s.coeff(Mono::q(0)) == 1);
	CHECK(s.coeff(Mono::q(1)) == 2);
	CHECK(s.coeff(Mono::q(2)) == 4);
	CHECK(s.coeff(Mono::q(3)) == 8);
}

TEST_CASE("gaussian polynomials")
{
	TruncationBox box(1, 40, 0, 0, 0);
	MultiSeries b31 = qbinomial(3, 1, box);
	CHECK(b31.coeff(Mono::q(0)) == 1);
	CHECK(b31.coeff(Mono::q(1)) == 1);
	CHECK(b31.coeff(Mono::q(2)) == 1);
	CHECK(b31.term_count() == 3);

	CHECK(qbinomial(2, 3, box).is_zero());

	MultiSeries b42 = qbinomial(4, 2, box);
	CHECK(b42.coeff(Mono::q(0)) == 1);
	CHECK(b42.coeff(Mono::q(1)) == 1);
	CHECK(b42.coeff(Mono::q(2)) == 2);
	CHECK(b42.coeff(Mono::q(3)) == 1);
	CHECK(b42.coeff(Mono::q(4)) == 1);
	CHECK(b42.term_count() == 5);
}

TEST_CASE("pascal recursions for gaussian polynomials")
{
	TruncationBox box(1, 80, 0, 0, 0);
	auto qpow = [&](int e) { return MultiSeries::monomial(box, Mono::q(e)); };
	for (int m = 1; m <= 12; ++m) {
		for (int k = 0; k <= m; ++k) {
			MultiSeries lhs = qbinomial(m, k, box);
			CHECK(lhs == qpow(k) * qbinomial(m - 1, k, box) + qbinomial(m - 1, k - 1, box));
			CHECK(lhs == qbinomial(m - 1, k, box) + qpow(m - k) * qbinomial(m - 1, k - 1, box));
		}
	}
}

TEST_CASE("finite q-binomial theorem")
{
	/* prod_{k<m}(1+z q^k) = sum_k z^k q^{k(k-1)/2} [m, k]_q with z = x */
	TruncationBox box(1, 60, 0, 0, 12);
	for (int m = 1; m <= 10; ++m) {
		MultiSeries lhs = MultiSeries::one(box);
		for (int k = 0; k < m; ++k) {
			MultiSeries f = MultiSeries::one(box);
			f.add_term(Mono::x(1) * Mono::q(k), 1);
			lhs = lhs * f;
		}
		MultiSeries rhs(box);
		for (int k = 0; k <= m; ++k)
			rhs += MultiSeries::monomial(box, Mono::x(k) * Mono::q(k * (k - 1) / 2)) *
			       qbinomial(m, k, box);
		CHECK(lhs == rhs);
	}
}

TEST_CASE("cross q-binomial identity")
{
	TruncationBox box(1, 120, 0, 0, 0);
	for (int m = 1; m <= 10; ++m) {
		for (int i = 0; i <= 10; ++i) {
			for (int k = 0; k <= std::min(m - 1, i); ++k) {
				MultiSeries lhs =
				    qbinomial(m - 1, k, box) * qbinomial(i + m - k - 1, m - 1, box);
				MultiSeries rhs =
				    qbinomial(i, k, box) * qbinomial(i + m - k - 1, m - k - 1, box);
				CHECK(lhs == rhs);
			}
		}
	}
}

TEST_CASE("colour product expansion")
{
	TruncationBox box(1, 8, 3, 3, 0);
	MultiSeries p = product_side(1, box);
	/* a single overlined part of any size */
	for (int n = 1; n <= box.qmax; ++n)
		CHECK(p.coeff(Mono::u(1, 1) * Mono::q(n)) == 1);
	/* a single non-overlined zero */
	CHECK(p.coeff(Mono::u(1, 1) * Mono::d(1)) == 1);
	CHECK(p.coeff(Mono()) == 1);

	TruncationBox wrong(2, 8, 3, 3, 0);
	CHECK_THROWS_AS(product_side(1, wrong), UsageError);
}

TEST_CASE("x substitution and evaluation")
{
	TruncationBox box(1, 10, 2, 2, 4);
	MultiSeries x = MultiSeries::monomial(box, Mono::x(1));
	CHECK(substitute_x_power(x, 1) == MultiSeries::monomial(box, Mono::x(1) * Mono::q(1)));

	std::mt19937_64 rng(31);
	for (int trial = 0; trial < 10; ++trial) {
		MultiSeries s = random_series(box, rng, 15);
		CHECK(substitute_x_power(s, 0) == s);
	}

	MultiSeries m = MultiSeries::monomial(box, Mono::x(2) * Mono::u(1, 1));
	CHECK(substitute_x_power(m, 2) ==
	      MultiSeries::monomial(box, Mono::x(2) * Mono::q(4) * Mono::u(1, 1)));

	MultiSeries sum = MultiSeries::one(box) +
	                  MultiSeries::monomial(box, Mono::x(1) * Mono::q(1)) +
	                  MultiSeries::monomial(box, Mono::x(2) * Mono::q(2));
	MultiSeries expect = MultiSeries::one(box) + MultiSeries::monomial(box, Mono::q(1)) +
	                     MultiSeries::monomial(box, Mono::q(2));
	CHECK(eval_x_one(sum) == expect);
	CHECK(eval_x_one(MultiSeries::monomial(box, Mono(), 5)) ==
	      MultiSeries::monomial(box, Mono(), 5));
}

TEST_CASE("ring axioms on random series")
{
	TruncationBox box(2, 6, 2, 2, 2);
	std::mt19937_64 rng(1234);
	for (int trial = 0; trial < 15; ++trial) {
		MultiSeries a = random_series(box, rng, 8);
		MultiSeries b = random_series(box, rng, 8);
		MultiSeries c = random_series(box, rng, 8);
		CHECK(a + b == b + a);
		CHECK((a + b) + c == a + (b + c));
		CHECK(a * b == b * a);
		CHECK((a * b) * c == a * (b * c));
		CHECK(a * (b + c) == a * b + a * c);
	}
}

TEST_CASE("canonical text form")
{
	TruncationBox box(1, 3, 2, 2, 0);
	MultiSeries p = product_side(1, box);
	std::string text = p.canonical_text();
	CHECK(parse_canonical_text(box, text) == p);

	/* golden listing: overpartitions with at most two parts, weight <= 3
	 * (l in the u column, k in the d column) */
	const char* golden =
	    "0 0 0 0 1\n"
	    "0 1 0 0 1\n"
	    "0 1 1 0 1\n"
	    "0 2 1 0 1\n"
	    "0 2 2 0 1\n"
	    "1 1 0 0 1\n"
	    "1 1 1 0 1\n"
	    "1 2 0 0 1\n"
	    "1 2 1 0 2\n"
	    "1 2 2 0 1\n"
	    "2 1 0 0 1\n"
	    "2 1 1 0 1\n"
	    "2 2 0 0 1\n"
	    "2 2 1 0 3\n"
	    "2 2 2 0 2\n"
	    "3 1 0 0 1\n"
	    "3 1 1 0 1\n"
	    "3 2 0 0 2\n"
	    "3 2 1 0 4\n"
	    "3 2 2 0 2\n";
	CHECK(text == golden);
}

TEST_CASE("truncation bounds validated")
{
	CHECK_THROWS_AS(TruncationBox(0, 4, 4, 4, 4), UsageError);
	CHECK_THROWS_AS(TruncationBox(6, 4, 4, 4, 4), UsageError);
	CHECK_THROWS_AS(TruncationBox(1, 200, 4, 4, 4), UsageError);
	CHECK_THROWS_AS(TruncationBox(1, -1, 4, 4, 4), UsageError);
}

TEST_CASE("arithmetic at the packing boundary")
{
	/* qmax = 127 is the largest admissible bound; squaring the geometric
	 * series must give the full run of coefficients n+1 */
	TruncationBox box(1, 127, 0, 0, 0);
	MultiSeries geo = invert_unit(MultiSeries::one(box) -
	                              MultiSeries::monomial(box, Mono::q(1)));
	MultiSeries sq = geo * geo;
	for (int n = 0; n <= 127; ++n) CHECK(sq.coeff(Mono::q(n)) == n + 1);
}
