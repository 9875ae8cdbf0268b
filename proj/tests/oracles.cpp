#include "oracles.hpp"

using namespace qschur;

namespace oracles {

std::vector<long long> schur_distinct_counts(int nmax)
{
	std::vector<long long> counts(nmax + 1, 0);
	counts[0] = 1;
	for (int part = 1; part <= nmax; ++part) {
		if (part % 3 == 0) continue;
		for (int n = nmax; n >= part; --n) counts[n] += counts[n - part];
	}
	return counts;
}

std::vector<long long> schur_gap_counts(int nmax)
{
	std::vector<long long> counts(nmax + 1, 0);
	/* extend downward from the previous (smaller) part */
	auto rec = [&](auto&& self, int prev, int remaining) -> void {
		counts[nmax - remaining] += 1;
		int hi = prev < 0 ? remaining : std::min(remaining, prev - 3);
		for (int v = hi; v >= 1; --v) {
			if (prev >= 0 && prev % 3 == 0 && v % 3 == 0 && prev - v == 3) continue;
			self(self, v, remaining - v);
		}
	};
	rec(rec, -1, nmax);
	return counts;
}

namespace {

struct AndrewsSearch {
	const Alphabet& alph;
	Side side;
	const TruncationBox& bounds;
	CountTable& table;

	std::array<int, kMaxColours> l_used{};
	int n_used = 0;
	Mono stats{};

	int residue(int value) const
	{
		return least_positive_residue(side == Side::plus ? value : -value,
		                              alph.modulus());
	}

	bool in_domain(int value) const { return alph.is_subset_sum(residue(value)); }

	bool fits(int value) const
	{
		int mask = alph.mask_of(residue(value));
		for (int i = 1; i <= alph.r(); ++i)
			if ((mask >> (i - 1)) & 1 && l_used[i - 1] + 1 > bounds.umax) return false;
		return true;
	}

	int gap_below(int prev) const
	{
		/* bound depending on the smaller part (plus side) or the larger
		 * one (minus side) */
		int beta = residue(prev);
		return alph.modulus() * alph.sum_weight(beta) + alph.min_summand(beta) - beta;
	}

	bool final_ok(int value) const
	{
		if (side == Side::plus) return true;
		int beta = residue(value);
		return value >= alph.modulus() * (alph.sum_weight(beta) - 1);
	}

	void rec(int prev)
	{
		table.add(stats, 1);
		int hi = bounds.qmax - n_used;
		if (prev > 0) {
			if (side == Side::minus) {
				hi = std::min(hi, prev - gap_below(prev));
			}
		}
		for (int v = hi; v >= 1; --v) {
			if (!in_domain(v) || !fits(v)) continue;
			if (side == Side::plus && prev > 0) {
				int beta = residue(v);
				int need = alph.modulus() * alph.sum_weight(beta) +
				           alph.min_summand(beta) - beta;
				if (prev - v < need) continue;
			}
			if (!final_ok(v)) continue;
			int mask = alph.mask_of(residue(v));
			Mono saved = stats;
			for (int i = 1; i <= alph.r(); ++i)
				if ((mask >> (i - 1)) & 1) ++l_used[i - 1];
			n_used += v;
			stats = stats * colour_mono(Colour{mask, alph.r()}) * Mono::q(v);
			rec(v);
			stats = saved;
			n_used -= v;
			for (int i = 1; i <= alph.r(); ++i)
				if ((mask >> (i - 1)) & 1) --l_used[i - 1];
		}
	}
};

} // namespace

CountTable andrews_plus_table(const Alphabet& alph, const TruncationBox& bounds)
{
	CountTable table(bounds);
	AndrewsSearch search{alph, Side::plus, bounds, table};
	search.rec(0);
	return table;
}

CountTable andrews_minus_table(const Alphabet& alph, const TruncationBox& bounds)
{
	CountTable table(bounds);
	AndrewsSearch search{alph, Side::minus, bounds, table};
	search.rec(0);
	return table;
}

CountTable mod3_overpartition_table(const TruncationBox& bounds)
{
	CountTable table(bounds);
	struct Search {
		const TruncationBox& bounds;
		CountTable& table;
		int l1 = 0, l2 = 0, k = 0, n = 0;
		Mono stats{};

		void rec(int prev, bool prev_known)
		{
			table.add(stats, 1);
			for (bool overlined : {true, false}) {
				if (!overlined && k + 1 > bounds.dmax) continue;
				int hi = bounds.qmax - n;
				if (prev_known) {
					int chi = overlined ? 1 : 0;
					/* the bound depends on the residue of the candidate */
					for (int v = hi; v >= 1; --v) {
						int need = (v % 3 == 0 ? 1 : 0) + 3 * chi;
						if (prev - v < need) continue;
						try_push(v, overlined);
					}
					continue;
				}
				for (int v = hi; v >= 1; --v) try_push(v, overlined);
			}
		}

		void try_push(int v, bool overlined)
		{
			bool uses1 = v % 3 == 1 || v % 3 == 0;
			bool uses2 = v % 3 == 2 || v % 3 == 0;
			if (uses1 && l1 + 1 > bounds.umax) return;
			if (uses2 && l2 + 1 > bounds.umax) return;
			Mono saved = stats;
			l1 += uses1 ? 1 : 0;
			l2 += uses2 ? 1 : 0;
			k += overlined ? 0 : 1;
			n += v;
			Mono delta = Mono::q(v);
			if (uses1) delta = delta * Mono::u(1, 1);
			if (uses2) delta = delta * Mono::u(2, 1);
			if (!overlined) delta = delta * Mono::d(1);
			stats = stats * delta;
			rec(v, true);
			stats = saved;
			n -= v;
			k -= overlined ? 0 : 1;
			l1 -= uses1 ? 1 : 0;
			l2 -= uses2 ? 1 : 0;
		}
	};
	Search search{bounds, table};
	search.rec(0, false);
	return table;
}

} // namespace oracles
