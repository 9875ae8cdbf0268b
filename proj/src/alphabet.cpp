#include "qschur/alphabet.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace qschur {

int least_positive_residue(long long m, int N)
{
	if (N < 1) throw UsageError("modulus must be positive");
	if (m == 0) throw DomainError("least positive residue of zero is undefined");
	long long rem = ((m % N) + N) % N;
	return rem == 0 ? N : int(rem);
}

Alphabet::Alphabet(int N, std::vector<int> a) : N_(N), a_(std::move(a))
{
	int r = int(a_.size());
	if (r < 1 || r > kMaxColours)
		throw UsageError("alphabet size must be between 1 and 5");
	int prefix = 0;
	for (int k = 0; k < r; ++k) {
		if (a_[k] < 1)
			throw UsageError("alphabet entries must be positive");
		if (prefix >= a_[k])
			throw UsageError("alphabet must be super-increasing: each entry must "
			                 "exceed the sum of the previous ones");
		prefix += a_[k];
	}
	if (N_ < prefix)
		throw UsageError("modulus must be at least the sum of the alphabet");

	mask_by_sum_.assign(prefix + 1, 0);
	for (int mask = 1; mask < (1 << r); ++mask)
		mask_by_sum_[subset_sum(mask)] = mask;
}

int Alphabet::subset_sum(int mask) const
{
	if (mask < 1 || mask >= (1 << r()))
		throw UsageError("subset mask out of range");
	int s = 0;
	for (int i = 1; i <= r(); ++i)
		if (mask & (1 << (i - 1))) s += a_[i - 1];
	return s;
}

bool Alphabet::is_subset_sum(int value) const
{
	return value >= 1 && value < int(mask_by_sum_.size()) && mask_by_sum_[value] != 0;
}

int Alphabet::mask_of(int subset_sum_value) const
{
	if (!is_subset_sum(subset_sum_value))
		throw DomainError("value is not a sum of distinct alphabet entries");
	return mask_by_sum_[subset_sum_value];
}

int Alphabet::sum_weight(int alpha) const
{
	return weight(Colour{mask_of(alpha), r()});
}

int Alphabet::min_summand(int alpha) const
{
	return a_[min_primary(Colour{mask_of(alpha), r()}) - 1];
}

int Alphabet::max_summand(int alpha) const
{
	return a_[max_primary(Colour{mask_of(alpha), r()}) - 1];
}

int Alphabet::strictly_below(int alpha, int beta) const
{
	return max_summand(alpha) < min_summand(beta) ? 1 : 0;
}

int Alphabet::permute_sum(const Permutation& sigma, int alpha) const
{
	Colour c{mask_of(alpha), r()};
	return subset_sum(apply(sigma, c).mask);
}

VerificationReport check_lemma_comparison(const Alphabet& alph)
{
	VerificationReport rep;
	rep.check = "summand-comparison-lemma";
	rep.param("N", std::to_string(alph.modulus()));
	{
		std::ostringstream os;
		for (int i = 1; i <= alph.r(); ++i) os << (i > 1 ? "," : "") << alph.a(i);
		rep.param("a", os.str());
	}
	int top = (1 << alph.r()) - 1;
	rep.box = std::to_string(top * top) + " pairs";
	rep.sound_region = rep.box;
	for (int ma = 1; ma <= top; ++ma) {
		for (int mb = 1; mb <= top; ++mb) {
			int alpha = alph.subset_sum(ma), beta = alph.subset_sum(mb);
			bool via_value = alph.min_summand(alpha) > beta;
			bool via_summand = alph.min_summand(alpha) > alph.max_summand(beta);
			if (via_value != via_summand) {
				rep.fail("alpha=" + std::to_string(alpha) + ", beta=" + std::to_string(beta),
				         via_value ? "1" : "0", via_summand ? "1" : "0");
				return rep;
			}
		}
	}
	return rep;
}

DilatedPart dilate_plus(const Alphabet& alph, const Part& p)
{
	if (p.colour.r != alph.r())
		throw UsageError("part colour does not match the alphabet size");
	return DilatedPart{alph.modulus() * p.value + alph.subset_sum(p.colour.mask),
	                   p.overlined};
}

DilatedPart dilate_minus(const Alphabet& alph, const Part& p)
{
	if (p.colour.r != alph.r())
		throw UsageError("part colour does not match the alphabet size");
	return DilatedPart{alph.modulus() * (weight(p.colour) + p.value) -
	                       alph.subset_sum(p.colour.mask),
	                   p.overlined};
}

int minimal_difference(const Alphabet& alph, const Permutation& sigma, Side side,
                       int x, int y, int chi)
{
	if (sigma.r() != alph.r())
		throw UsageError("permutation size does not match the alphabet size");
	if (chi != 0 && chi != 1) throw UsageError("chi must be 0 or 1");
	int N = alph.modulus();
	if (side == Side::plus) {
		if (!alph.is_subset_sum(x) || !alph.is_subset_sum(y))
			throw DomainError("residue is not realized on this side");
		int sx = alph.permute_sum(sigma, x), sy = alph.permute_sum(sigma, y);
		return N * (alph.sum_weight(y) - 1 + chi + alph.strictly_below(sx, sy)) + x - y;
	}
	int alpha = -x, beta = -y;
	if (!alph.is_subset_sum(alpha) || !alph.is_subset_sum(beta))
		throw DomainError("residue is not realized on this side");
	int sa = alph.permute_sum(sigma, alpha), sb = alph.permute_sum(sigma, beta);
	return N * (alph.sum_weight(alpha) - 1 + chi + alph.strictly_below(sa, sb)) +
	       beta - alpha;
}

namespace {

struct ClassInfo {
	int mask;       /* subset mask of the governing sum */
	int smallest;   /* smallest positive part in the class */
	int sum;        /* the subset sum itself */
};

/* part classes of the difference-condition side: one per subset sum */
std::vector<ClassInfo> sequence_classes(const Alphabet& alph, Side side)
{
	int N = alph.modulus();
	std::vector<ClassInfo> out;
	for (int mask = 1; mask < (1 << alph.r()); ++mask) {
		int s = alph.subset_sum(mask);
		if (side == Side::plus) {
			out.push_back(ClassInfo{mask, s, s});
		} else {
			int rep = ((N - s) % N + N) % N;
			out.push_back(ClassInfo{mask, rep == 0 ? N : rep, s});
		}
	}
	return out;
}

/* classes of the congruence side: one per alphabet entry */
std::vector<ClassInfo> multiset_classes(const Alphabet& alph, Side side)
{
	int N = alph.modulus();
	std::vector<ClassInfo> out;
	for (int i = 1; i <= alph.r(); ++i) {
		int s = alph.a(i);
		if (side == Side::plus) {
			out.push_back(ClassInfo{1 << (i - 1), s, s});
		} else {
			int rep = ((N - s) % N + N) % N;
			out.push_back(ClassInfo{1 << (i - 1), rep == 0 ? N : rep, s});
		}
	}
	return out;
}

/* largest value <= hi congruent to smallest mod N, or 0 if none */
int largest_in_class(int hi, int smallest, int N)
{
	if (hi < smallest) return 0;
	return smallest + (hi - smallest) / N * N;
}

struct DilatedSeqSearch {
	DilatedSeqSearch(const Alphabet* alph_, Side side_, const Permutation* sigma_,
	                 const TruncationBox& bounds_,
	                 const std::function<void(const std::vector<DilatedPart>&, Mono)>* visit_,
	                 std::vector<ClassInfo> classes_)
	    : alph(alph_), side(side_), sigma(sigma_), bounds(bounds_), visit(visit_),
	      classes(std::move(classes_))
	{
	}

	const Alphabet* alph;
	Side side;
	const Permutation* sigma;
	TruncationBox bounds;
	const std::function<void(const std::vector<DilatedPart>&, Mono)>* visit;
	std::vector<ClassInfo> classes;

	std::vector<DilatedPart> parts;
	std::vector<int> part_masks;
	std::array<int, kMaxColours> l_used{};
	int k_used = 0;
	int n_used = 0;
	Mono stats;

	int N() const { return alph->modulus(); }

	bool colour_fits(int mask) const
	{
		for (int i = 1; i <= alph->r(); ++i)
			if ((mask >> (i - 1)) & 1 && l_used[i - 1] + 1 > bounds.umax) return false;
		return true;
	}

	/* minus-side lower bound on a part: N*w - alpha, i.e. the image of a
	 * non-negative coloured value */
	int floor_value(const ClassInfo& cls) const
	{
		if (side == Side::plus) return 1;
		return N() * weight(Colour{cls.mask, alph->r()}) - cls.sum;
	}

	int gap(int prev_sum, const ClassInfo& next, bool next_ov) const
	{
		int chi = next_ov ? 1 : 0;
		int sx = alph->permute_sum(*sigma, prev_sum);
		int sy = alph->permute_sum(*sigma, next.sum);
		if (side == Side::plus) {
			return N() * (alph->sum_weight(next.sum) - 1 + chi +
			              alph->strictly_below(sx, sy)) +
			       prev_sum - next.sum;
		}
		return N() * (alph->sum_weight(prev_sum) - 1 + chi +
		              alph->strictly_below(sx, sy)) +
		       next.sum - prev_sum;
	}

	void push(const ClassInfo& cls, int value, bool overlined)
	{
		parts.push_back(DilatedPart{value, overlined});
		part_masks.push_back(cls.mask);
		for (int i = 1; i <= alph->r(); ++i)
			if ((cls.mask >> (i - 1)) & 1) ++l_used[i - 1];
		if (!overlined) ++k_used;
		n_used += value;
		Mono delta = colour_mono(Colour{cls.mask, alph->r()}) * Mono::q(value);
		if (!overlined) delta = delta * Mono::d(1);
		stats = stats * delta;
	}

	void pop(Mono saved)
	{
		int mask = part_masks.back();
		for (int i = 1; i <= alph->r(); ++i)
			if ((mask >> (i - 1)) & 1) --l_used[i - 1];
		if (!parts.back().overlined) --k_used;
		n_used -= parts.back().value;
		stats = saved;
		parts.pop_back();
		part_masks.pop_back();
	}

	void extend(int prev_value, int prev_sum)
	{
		const bool first = parts.empty();
		for (const ClassInfo& cls : classes) {
			if (!colour_fits(cls.mask)) continue;
			for (bool overlined : {true, false}) {
				if (!overlined && k_used + 1 > bounds.dmax) continue;
				int hi = bounds.qmax - n_used;
				if (!first) hi = std::min(hi, prev_value - gap(prev_sum, cls, overlined));
				/* the last-part floor: parts below it can never head a
				 * valid tail, so the branch is dead */
				int lo = floor_value(cls);
				for (int v = largest_in_class(hi, cls.smallest, N()); v >= std::max(lo, 1);
				     v -= N()) {
					Mono saved = stats;
					push(cls, v, overlined);
					(*visit)(parts, stats);
					extend(v, cls.sum);
					pop(saved);
				}
			}
		}
	}
};

} // namespace

DilatedTables enumerate_dilated(const Alphabet& alph, Side side,
                                const Permutation& sigma, const TruncationBox& bounds)
{
	if (sigma.r() != alph.r())
		throw UsageError("permutation size does not match the alphabet size");
	if (bounds.r != alph.r())
		throw UsageError("bound box carries a different colour count");

	DilatedTables tables{CountTable(bounds), CountTable(bounds)};

	/* difference-condition side */
	tables.sequence.add(Mono(), 1);
	{
		std::function<void(const std::vector<DilatedPart>&, Mono)> record =
		    [&tables](const std::vector<DilatedPart>&, Mono stats) {
			    tables.sequence.add(stats, 1);
		    };
		DilatedSeqSearch search{&alph, side, &sigma, bounds, &record,
		                        sequence_classes(alph, side)};
		search.extend(0, 0);
	}

	/* congruence side: per class, overlined values form a set and
	 * non-overlined ones a multiset; classes convolve independently */
	{
		tables.multiset.add(Mono(), 1);
		for (const ClassInfo& cls : multiset_classes(alph, side)) {
			CountTable one_class(bounds);
			struct Gen {
				Gen(const ClassInfo& cls_, const TruncationBox& bounds_, int N_,
				    int colour_index_, CountTable& table_)
				    : cls(cls_), bounds(bounds_), N(N_), colour_index(colour_index_),
				      table(table_)
				{
				}

				const ClassInfo& cls;
				const TruncationBox& bounds;
				int N;
				int colour_index;
				CountTable& table;
				int l_used = 0, k_used = 0, n_used = 0;
				Mono stats;

				void record() { table.add(stats, 1); }

				void multiset(int hi)
				{
					record();
					if (l_used >= bounds.umax || k_used >= bounds.dmax) return;
					for (int v = largest_in_class(std::min(hi, bounds.qmax - n_used),
					                              cls.smallest, N);
					     v >= 1; v -= N) {
						Mono saved = stats;
						++l_used, ++k_used, n_used += v;
						stats = stats * Mono::u(colour_index, 1) * Mono::d(1) * Mono::q(v);
						multiset(v);
						--l_used, --k_used, n_used -= v;
						stats = saved;
					}
				}

				void set(int hi)
				{
					multiset(bounds.qmax - n_used);
					if (l_used >= bounds.umax) return;
					for (int v = largest_in_class(std::min(hi, bounds.qmax - n_used),
					                              cls.smallest, N);
					     v >= 1; v -= N) {
						Mono saved = stats;
						++l_used, n_used += v;
						stats = stats * Mono::u(colour_index, 1) * Mono::q(v);
						set(v - 1);
						--l_used, n_used -= v;
						stats = saved;
					}
				}
			};
			int colour_index = min_primary(Colour{cls.mask, alph.r()});
			Gen gen{cls, bounds, alph.modulus(), colour_index, one_class};
			gen.set(bounds.qmax);

			CountTable next(bounds);
			for (const auto& [ka, ca] : tables.multiset.counts)
				for (const auto& [kb, cb] : one_class.counts) {
					Mono key = Mono::from_packed(ka + kb);
					if (box_admits(bounds, key)) next.add(key, ca * cb);
				}
			tables.multiset = next;
		}
	}
	return tables;
}

void for_each_dilated_sequence(const Alphabet& alph, Side side, const Permutation& sigma,
                               const TruncationBox& bounds,
                               const std::function<void(const std::vector<DilatedPart>&)>& visit)
{
	std::function<void(const std::vector<DilatedPart>&, Mono)> record =
	    [&visit](const std::vector<DilatedPart>& parts, Mono) { visit(parts); };
	visit({});
	DilatedSeqSearch search{&alph, side, &sigma, bounds, &record,
	                        sequence_classes(alph, side)};
	search.extend(0, 0);
}

void for_each_dilated_multiset(const Alphabet& alph, Side side, const TruncationBox& bounds,
                               const std::function<void(const std::vector<DilatedPart>&)>& visit)
{
	/* joint search across classes; every complete choice is one object */
	struct Joint {
		Joint(const Alphabet& alph_, Side side_, const TruncationBox& bounds_,
		      const std::function<void(const std::vector<DilatedPart>&)>& visit_,
		      std::vector<ClassInfo> classes_)
		    : alph(alph_), side(side_), bounds(bounds_), visit(visit_),
		      classes(std::move(classes_))
		{
		}

		const Alphabet& alph;
		Side side;
		const TruncationBox& bounds;
		const std::function<void(const std::vector<DilatedPart>&)>& visit;
		std::vector<ClassInfo> classes;
		std::vector<DilatedPart> parts;
		std::array<int, kMaxColours> l_used{};
		int k_used = 0, n_used = 0;

		void level(std::size_t idx, int hi, bool in_set)
		{
			const ClassInfo& cls = classes[idx];
			int ci = min_primary(Colour{cls.mask, alph.r()});
			if (in_set) {
				level(idx, bounds.qmax - n_used, false);
				if (l_used[ci - 1] >= bounds.umax) return;
				for (int v = largest_in_class(std::min(hi, bounds.qmax - n_used),
				                              cls.smallest, alph.modulus());
				     v >= 1; v -= alph.modulus()) {
					parts.push_back(DilatedPart{v, true});
					++l_used[ci - 1], n_used += v;
					level(idx, v - 1, true);
					--l_used[ci - 1], n_used -= v;
					parts.pop_back();
				}
				return;
			}
			if (idx + 1 < classes.size())
				level(idx + 1, bounds.qmax - n_used, true);
			else
				visit(parts);
			if (l_used[ci - 1] >= bounds.umax || k_used >= bounds.dmax) return;
			for (int v = largest_in_class(std::min(hi, bounds.qmax - n_used),
			                              cls.smallest, alph.modulus());
			     v >= 1; v -= alph.modulus()) {
				parts.push_back(DilatedPart{v, false});
				++l_used[ci - 1], ++k_used, n_used += v;
				level(idx, v, false);
				--l_used[ci - 1], --k_used, n_used -= v;
				parts.pop_back();
			}
		}
	};
	Joint joint{alph, side, bounds, visit, multiset_classes(alph, side)};
	joint.level(0, bounds.qmax, true);
}

std::string render_dilated(const std::vector<DilatedPart>& parts)
{
	if (parts.empty()) return "(empty)";
	std::ostringstream os;
	bool first = true;
	for (const DilatedPart& p : parts) {
		if (!first) os << ' ';
		os << p.value << '(' << (p.overlined ? 1 : 0) << ')';
		first = false;
	}
	return os.str();
}

} // namespace qschur
