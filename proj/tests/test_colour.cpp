#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "qschur/colour.hpp"

using namespace qschur;

TEST_CASE("primary membership bits")
{
	Colour c = make_colour(5, 3); /* u1*u3 */
	CHECK(uses_primary(c, 1));
	CHECK(!uses_primary(c, 2));
	CHECK(uses_primary(c, 3));
	CHECK_THROWS_AS(uses_primary(c, 4), UsageError);
	CHECK_THROWS_AS(make_colour(0, 3), UsageError);
	CHECK_THROWS_AS(make_colour(8, 3), UsageError);
}

TEST_CASE("weight and extreme primaries")
{
	Colour c5 = make_colour(5, 3);
	CHECK(weight(c5) == 2);
	CHECK(min_primary(c5) == 1);
	CHECK(max_primary(c5) == 3);

	Colour c1 = make_colour(1, 3);
	CHECK(weight(c1) == 1);
	CHECK(min_primary(c1) == 1);
	CHECK(max_primary(c1) == 1);

	for (int r = 1; r <= 5; ++r) CHECK(weight(make_colour((1 << r) - 1, r)) == r);

	for (int r = 1; r <= 5; ++r) {
		for (int mask = 1; mask < (1 << r); ++mask) {
			Colour c = make_colour(mask, r);
			CHECK(min_primary(c) <= max_primary(c));
			CHECK((min_primary(c) == max_primary(c)) == (weight(c) == 1));
		}
	}
}

TEST_CASE("strict colour separation")
{
	CHECK(strictly_below(make_colour(1, 2), make_colour(2, 2)) == 1);
	CHECK(strictly_below(make_colour(2, 2), make_colour(1, 2)) == 0);
	for (int r = 1; r <= 5; ++r) {
		for (int a = 1; a < (1 << r); ++a) {
			CHECK(strictly_below(make_colour(a, r), make_colour(a, r)) == 0);
			for (int b = 1; b < (1 << r); ++b) {
				if (strictly_below(make_colour(a, r), make_colour(b, r)))
					CHECK(strictly_below(make_colour(b, r), make_colour(a, r)) == 0);
			}
		}
	}
}

TEST_CASE("permutation action")
{
	Permutation swap12 = make_permutation({2, 1});
	CHECK(apply(swap12, make_colour(1, 2)) == make_colour(2, 2));
	CHECK(apply(Permutation::identity(3), make_colour(5, 3)) == make_colour(5, 3));

	CHECK_THROWS_AS(make_permutation({1, 1}), UsageError);
	CHECK_THROWS_AS(make_permutation({0, 2}), UsageError);

	for (int r = 1; r <= 5; ++r) {
		auto all = all_permutations(r);
		CHECK(int(all.size()) <= 120);
		for (const auto& s : all) {
			for (const auto& t : all) {
				Permutation st = compose(s, t);
				for (int mask = 1; mask < (1 << r); ++mask) {
					Colour c = make_colour(mask, r);
					CHECK(apply(st, c) == apply(s, apply(t, c)));
					CHECK(weight(apply(s, c)) == weight(c));
				}
			}
			/* bijectivity on colours */
			std::vector<bool> seen(1 << r, false);
			for (int mask = 1; mask < (1 << r); ++mask) {
				int image = apply(s, make_colour(mask, r)).mask;
				CHECK(!seen[image]);
				seen[image] = true;
			}
		}
	}
}

TEST_CASE("colour rendering")
{
	CHECK(to_string(make_colour(5, 3)) == "u1*u3");
	CHECK(to_string(make_colour(1, 1)) == "u1");
	CHECK(to_string(make_colour(7, 3)) == "u1*u2*u3");
}
