#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "qschur/qdiff.hpp"

#include "qschur/colour.hpp"

using namespace qschur;

TEST_CASE("family basics at one colour")
{
	TruncationBox box(1, 10, 3, 3, 3);
	SeriesFamily fam = build_family(1, box);
	CHECK(fam.f().coeff(Mono()) == 1);
	/* one overlined part of each size */
	for (int n = 0; n <= box.qmax; ++n)
		CHECK(fam.f().coeff(Mono::x(1) * Mono::u(1, 1) * Mono::q(n)) == 1);
}

TEST_CASE("family needs room for the part count")
{
	TruncationBox box(2, 8, 3, 3, 4); /* xmax < r*umax */
	CHECK_THROWS_AS(build_family(2, box), UsageError);
}

TEST_CASE("detaching equations hold")
{
	TruncationBox box(2, 10, 2, 2, 4);
	SeriesFamily fam = build_family(2, box);
	CHECK(check_family_difference_equations(fam).pass);
	CHECK(check_neighbour_elimination(fam).pass);
}

TEST_CASE("elimination chain")
{
	TruncationBox box(2, 10, 2, 2, 4);
	SeriesFamily fam = build_family(2, box);
	/* level one is the trivial identity */
	CHECK(check_elimination_chain(fam, 1).pass);
	CHECK(check_elimination_chain(fam, 2).pass);
	CHECK_THROWS_AS(check_elimination_chain(fam, 3), UsageError);
}

TEST_CASE("one-colour equation in closed form")
{
	/* (1 - dxu1) f(x) = (1 + xu1) f(xq) */
	TruncationBox box(1, 10, 3, 3, 3);
	SeriesFamily fam = build_family(1, box);
	MultiSeries lhs = fam.f();
	{
		MultiSeries factor = MultiSeries::one(box);
		factor.add_term(Mono::d(1) * Mono::x(1) * Mono::u(1, 1), -1);
		lhs = lhs * factor;
	}
	MultiSeries rhs = substitute_x_power(fam.f(), 1);
	{
		MultiSeries factor = MultiSeries::one(box);
		factor.add_term(Mono::x(1) * Mono::u(1, 1), 1);
		rhs = factor * rhs;
	}
	CHECK(lhs == rhs);
	CHECK(check_q_difference_equation(fam).pass);
}

TEST_CASE("prefactor transform")
{
	TruncationBox box(2, 10, 2, 2, 4);
	SeriesFamily fam = build_family(2, box);
	auto [F, A] = transform_F(fam.f(), 2);
	CHECK(A.at.at(0) == MultiSeries::one(box));
	CHECK(check_prefactor_equation(F, 2).pass);

	KernelCoefficients ker(2, box);
	CHECK(check_recurrence(A, RecurrenceKind::full, ker).pass);
	CHECK(check_recurrence(A, RecurrenceKind::product, ker).pass);

	DownshiftResult down = transform_down(A, 2);
	CHECK(down.a.at.at(0) == MultiSeries::one(box));
	CHECK(check_downshift_prefactor_equation(down.G, 2).pass);
	CHECK(check_recurrence(down.a, RecurrenceKind::downshift, ker).pass);
	CHECK(check_downshift_base(down, A, 2).pass);
}

TEST_CASE("kernel identities for several colour counts")
{
	for (int r = 1; r <= 4; ++r) {
		TruncationBox box(r, 12, 2, 2, 4);
		KernelCoefficients ker(r, box);
		CHECK(check_kernel_identities(ker).pass);
		/* empty colour ranges give a vanishing block */
		for (int m = 1; m <= r; ++m)
			for (int i = 1; i <= r; ++i)
				if (i + m - 1 > r) CHECK(ker.b(m, i).is_zero());
	}
}

TEST_CASE("series equality with the colour product")
{
	CHECK(check_main(1, TruncationBox(1, 10, 3, 3, 3)).pass);
	CHECK(check_main(2, TruncationBox(2, 10, 2, 2, 4)).pass);
}

TEST_CASE("pipeline and its negative control")
{
	TruncationBox box(1, 10, 2, 2, 2);
	auto reports = run_qdiff_pipeline(1, box);
	for (const auto& rep : reports) CHECK(rep.pass);

	auto bad = run_qdiff_pipeline(1, box, true);
	bool any_failed = false;
	for (const auto& rep : bad) {
		if (!rep.pass) {
			any_failed = true;
			CHECK(rep.mismatch.has_value());
		}
	}
	CHECK(any_failed);
}
