#include "qschur/weighted_words.hpp"

#include <atomic>
#include <cstdlib>
#include <sstream>
#include <thread>

namespace qschur {

Mono pack_stats(const StatsKey& s)
{
	Mono m = Mono::q(s.n) * Mono::d(s.k) * Mono::x(s.m);
	for (int i = 1; i <= kMaxColours; ++i)
		if (s.l[i - 1] > 0) m = m * Mono::u(i, s.l[i - 1]);
	return m;
}

StatsKey unpack_stats(Mono m)
{
	StatsKey s;
	s.n = m.q_exp();
	s.k = m.d_exp();
	s.m = m.x_exp();
	for (int i = 1; i <= kMaxColours; ++i) s.l[i - 1] = m.u_exp(i);
	return s;
}

std::string render_stats(Mono key, int r, bool with_m)
{
	StatsKey s = unpack_stats(key);
	std::ostringstream os;
	os << "(l=";
	for (int i = 0; i < r; ++i) os << (i ? "," : "") << s.l[i];
	os << "; k=" << s.k;
	if (with_m) os << "; m=" << s.m;
	os << "; n=" << s.n << ")";
	return os.str();
}

void CountTable::add(Mono key, long long c)
{
	if (c == 0 || !box_admits(box, key)) return;
	auto [it, inserted] = counts.emplace(key.packed(), c);
	if (!inserted) {
		it->second += c;
		if (it->second == 0) counts.erase(it);
	}
}

long long CountTable::at(Mono key) const
{
	auto it = counts.find(key.packed());
	return it == counts.end() ? 0 : it->second;
}

bool CountTable::operator==(const CountTable& o) const
{
	if (box != o.box)
		throw UsageError("count-table comparison requires a common bound box");
	return counts == o.counts;
}

MultiSeries CountTable::to_series(const TruncationBox& series_box) const
{
	MultiSeries out(series_box);
	for (const auto& [k, c] : counts)
		out.add_term(Mono::from_packed(k), mpz_class(long(c)));
	return out;
}

CountTable CountTable::slice_k0() const
{
	CountTable out(box);
	for (const auto& [k, c] : counts)
		if (Mono::from_packed(k).d_exp() == 0) out.counts.emplace(k, c);
	return out;
}

std::vector<long long> CountTable::by_weight() const
{
	std::vector<long long> out(box.qmax + 1, 0);
	for (const auto& [k, c] : counts) out[Mono::from_packed(k).q_exp()] += c;
	return out;
}

std::optional<Mono> first_mismatch(const CountTable& a, const CountTable& b)
{
	if (a.box != b.box)
		throw UsageError("count-table comparison requires a common bound box");
	auto ia = a.counts.begin(), ib = b.counts.begin();
	while (ia != a.counts.end() && ib != b.counts.end()) {
		if (ia->first != ib->first)
			return Mono::from_packed(std::min(ia->first, ib->first));
		if (ia->second != ib->second) return Mono::from_packed(ia->first);
		++ia;
		++ib;
	}
	if (ia != a.counts.end()) return Mono::from_packed(ia->first);
	if (ib != b.counts.end()) return Mono::from_packed(ib->first);
	return std::nullopt;
}

int required_gap(const Permutation& sigma, Colour prev, Colour next, bool next_overlined)
{
	return weight(next) + (next_overlined ? 1 : 0) - 1 +
	       strictly_below(apply(sigma, prev), apply(sigma, next));
}

int worker_thread_cap()
{
	const char* env = std::getenv("QSCHUR_THREADS");
	if (!env) return 1;
	int v = std::atoi(env);
	if (v < 1) return 1;
	return std::min(v, 64);
}

namespace {

void validate_weighted_bounds(int r, const Permutation& sigma, const TruncationBox& bounds)
{
	if (r < 1 || r > kMaxColours)
		throw UsageError("colour count must be between 1 and 5");
	if (sigma.r() != r)
		throw UsageError("permutation size does not match the colour count");
	if (bounds.r != r)
		throw UsageError("bound box carries a different colour count");
	if (r * bounds.umax > 127)
		throw UsageError("part-count range r*umax must stay below 128");
}

struct SeqSearch {
	SeqSearch(int r_, const Permutation* sigma_, const TruncationBox& bounds_,
	          const std::function<void(const std::vector<Part>&, Mono)>* visit_)
	    : r(r_), sigma(sigma_), bounds(bounds_), visit(visit_)
	{
	}

	int r;
	const Permutation* sigma;
	TruncationBox bounds;
	const std::function<void(const std::vector<Part>&, Mono)>* visit;

	std::vector<Part> parts;
	std::array<int, kMaxColours> l_used{};
	int k_used = 0;
	int n_used = 0;
	Mono stats;

	bool colour_fits(Colour c) const
	{
		for (int i = 1; i <= r; ++i)
			if (uses_primary(c, i) && l_used[i - 1] + 1 > bounds.umax) return false;
		return true;
	}

	void push(const Part& p)
	{
		parts.push_back(p);
		for (int i = 1; i <= r; ++i)
			if (uses_primary(p.colour, i)) ++l_used[i - 1];
		if (!p.overlined) ++k_used;
		n_used += p.value;
		Mono delta = colour_mono(p.colour) * Mono::q(p.value) * Mono::x(1);
		if (!p.overlined) delta = delta * Mono::d(1);
		stats = stats * delta;
	}

	void pop(Mono saved_stats)
	{
		const Part& p = parts.back();
		for (int i = 1; i <= r; ++i)
			if (uses_primary(p.colour, i)) --l_used[i - 1];
		if (!p.overlined) --k_used;
		n_used -= p.value;
		stats = saved_stats;
		parts.pop_back();
	}

	/* extend below the current last part, visiting each new sequence */
	void extend()
	{
		const bool first = parts.empty();
		const int n_room = bounds.qmax - n_used;
		for (int mask = 1; mask < (1 << r); ++mask) {
			Colour c{mask, r};
			if (!colour_fits(c)) continue;
			for (bool overlined : {true, false}) {
				if (!overlined && k_used + 1 > bounds.dmax) continue;
				int hi = n_room;
				if (!first) {
					const Part& prev = parts.back();
					int gap = required_gap(*sigma, prev.colour, c, overlined);
					hi = std::min(hi, prev.value - gap);
				}
				for (int v = hi; v >= 0; --v) {
					Mono saved = stats;
					push(Part{v, c, overlined});
					(*visit)(parts, stats);
					extend();
					pop(saved);
				}
			}
		}
	}
};

} // namespace

void for_each_weighted_sequence(
    int r, const Permutation& sigma, const TruncationBox& bounds,
    const std::function<void(const std::vector<Part>&, Mono)>& visit)
{
	validate_weighted_bounds(r, sigma, bounds);
	SeqSearch search{r, &sigma, bounds, &visit};
	visit(search.parts, search.stats); /* the empty overpartition */
	search.extend();
}

namespace {

Mono clear_m(Mono key)
{
	return Mono::from_packed(key.packed() & ~uint64_t(0xff));
}

/* first-part choices, used as independent subtree tasks */
std::vector<Part> first_parts(int r, const TruncationBox& bounds)
{
	std::vector<Part> out;
	for (int mask = 1; mask < (1 << r); ++mask) {
		for (bool overlined : {true, false}) {
			if (!overlined && bounds.dmax < 1) continue;
			for (int v = bounds.qmax; v >= 0; --v)
				out.push_back(Part{v, Colour{mask, r}, overlined});
		}
	}
	return out;
}

} // namespace

CountTable enumerate_E(int r, const Permutation& sigma, const TruncationBox& bounds)
{
	validate_weighted_bounds(r, sigma, bounds);
	CountTable table(bounds);
	table.add(Mono(), 1); /* empty overpartition */

	int hw = int(std::thread::hardware_concurrency());
	int threads = std::min(worker_thread_cap(), std::max(hw, 1));
	std::vector<Part> tasks = first_parts(r, bounds);
	if (threads <= 1 || tasks.size() < 2) {
		auto record = [&table](const std::vector<Part>& parts, Mono stats) {
			if (!parts.empty()) table.add(clear_m(stats), 1);
		};
		std::function<void(const std::vector<Part>&, Mono)> visit = record;
		SeqSearch search{r, &sigma, bounds, &visit};
		search.extend();
		return table;
	}

	/* split at the first part; per-thread tables merged in a fixed order */
	threads = int(std::min<std::size_t>(std::size_t(threads), tasks.size()));
	std::vector<CountTable> partial(threads, CountTable(bounds));
	std::atomic<std::size_t> next{0};
	std::vector<std::thread> pool;
	for (int t = 0; t < threads; ++t) {
		pool.emplace_back([&, t]() {
			auto record = [&partial, t](const std::vector<Part>& parts, Mono stats) {
				if (!parts.empty()) partial[t].add(clear_m(stats), 1);
			};
			std::function<void(const std::vector<Part>&, Mono)> visit = record;
			for (std::size_t i = next.fetch_add(1); i < tasks.size();
			     i = next.fetch_add(1)) {
				const Part& p = tasks[i];
				SeqSearch search{r, &sigma, bounds, &visit};
				if (!search.colour_fits(p.colour)) continue;
				if (!p.overlined && bounds.dmax < 1) continue;
				if (p.value > bounds.qmax) continue;
				search.push(p);
				visit(search.parts, search.stats);
				search.extend();
			}
		});
	}
	for (auto& th : pool) th.join();
	for (const auto& part : partial)
		for (const auto& [k, c] : part.counts) table.add(Mono::from_packed(k), c);
	return table;
}

namespace {

/* Joint per-colour search over (overlined set, non-overlined multiset)
 * pairs: the overlined values strictly decrease, then the non-overlined
 * values weakly decrease. Each complete choice across all colours is one
 * object. */
struct MultisetSearch {
	MultisetSearch(int r_, const TruncationBox& bounds_,
	               const std::function<void(const std::vector<Part>&, Mono)>* visit_)
	    : r(r_), bounds(bounds_), visit(visit_)
	{
	}

	int r;
	TruncationBox bounds;
	const std::function<void(const std::vector<Part>&, Mono)>* visit;

	std::vector<Part> parts;
	std::array<int, kMaxColours> l_used{};
	int k_used = 0;
	int n_used = 0;
	Mono stats;

	void emit() { (*visit)(parts, stats); }

	void add_part(int colour_index, int v, bool overlined)
	{
		parts.push_back(Part{v, Colour{1 << (colour_index - 1), r}, overlined});
		++l_used[colour_index - 1];
		if (!overlined) ++k_used;
		n_used += v;
		Mono delta = Mono::u(colour_index, 1) * Mono::q(v) * Mono::x(1);
		if (!overlined) delta = delta * Mono::d(1);
		stats = stats * delta;
	}

	void drop_part(Mono saved)
	{
		const Part& p = parts.back();
		--l_used[min_primary(p.colour) - 1];
		if (!p.overlined) --k_used;
		n_used -= p.value;
		stats = saved;
		parts.pop_back();
	}

	void multiset_level(int colour_index, int hi)
	{
		if (colour_index < r)
			set_level(colour_index + 1, bounds.qmax - n_used);
		else
			emit();
		if (l_used[colour_index - 1] >= bounds.umax || k_used >= bounds.dmax) return;
		for (int v = std::min(hi, bounds.qmax - n_used); v >= 0; --v) {
			Mono saved = stats;
			add_part(colour_index, v, false);
			multiset_level(colour_index, v);
			drop_part(saved);
		}
	}

	void set_level(int colour_index, int hi)
	{
		multiset_level(colour_index, bounds.qmax - n_used);
		if (l_used[colour_index - 1] >= bounds.umax) return;
		for (int v = std::min(hi, bounds.qmax - n_used); v >= 0; --v) {
			Mono saved = stats;
			add_part(colour_index, v, true);
			set_level(colour_index, v - 1);
			drop_part(saved);
		}
	}
};

} // namespace

void for_each_multiset_object(
    int r, const TruncationBox& bounds,
    const std::function<void(const std::vector<Part>&, Mono)>& visit)
{
	validate_weighted_bounds(r, Permutation::identity(r), bounds);
	MultisetSearch search{r, bounds, &visit};
	search.set_level(1, bounds.qmax);
}

CountTable enumerate_D(int r, const TruncationBox& bounds)
{
	validate_weighted_bounds(r, Permutation::identity(r), bounds);
	CountTable table(bounds);
	for_each_multiset_object(r, bounds,
	                         [&table](const std::vector<Part>&, Mono stats) {
		                         table.add(Mono::from_packed(stats.packed() & ~uint64_t(0xff)), 1);
	                         });
	return table;
}

EnumerationIndex::EnumerationIndex(int r, const TruncationBox& bounds)
    : r_(r),
      tbox_(r, bounds.qmax, bounds.umax, bounds.dmax,
            std::min(127, std::max(bounds.xmax, r * bounds.umax))),
      empty_(tbox_)
{
	validate_weighted_bounds(r, Permutation::identity(r), bounds);
	empty_.add(Mono(), 1);
	Permutation id = Permutation::identity(r);
	TruncationBox enum_bounds(r, bounds.qmax, bounds.umax, bounds.dmax, tbox_.xmax);
	for_each_weighted_sequence(
	    r, id, enum_bounds, [this](const std::vector<Part>& parts, Mono stats) {
		    if (parts.empty()) return;
		    const Part& last = parts.back();
		    auto key = std::make_pair(last.value, last.colour.mask);
		    auto it = buckets_.find(key);
		    if (it == buckets_.end())
			    it = buckets_.emplace(key, CountTable(tbox_)).first;
		    it->second.add(stats, 1);
	    });
}

void EnumerationIndex::perturb_one_count()
{
	if (buckets_.empty() || buckets_.begin()->second.counts.empty()) {
		empty_.add(Mono(), 1);
		return;
	}
	auto& [key, count] = *buckets_.begin()->second.counts.begin();
	count += 1;
	(void)key;
}

CountTable EnumerationIndex::p_table(int value, int colour_mask) const
{
	if (value < 0) throw UsageError("smallest-part value must be non-negative");
	make_colour(colour_mask, r_);
	CountTable out = empty_;
	auto from = buckets_.lower_bound(std::make_pair(value, colour_mask));
	for (auto it = from; it != buckets_.end(); ++it)
		for (const auto& [k, c] : it->second.counts) out.add(Mono::from_packed(k), c);
	return out;
}

CountTable count_p(Colour colour, int value, int r, const TruncationBox& bounds)
{
	if (colour.r != r)
		throw UsageError("colour does not match the requested colour count");
	EnumerationIndex index(r, bounds);
	return index.p_table(value, colour.mask);
}

VerificationReport check_lemma_recurrences(int r, const TruncationBox& bounds)
{
	EnumerationIndex index(r, bounds);
	return check_lemma_recurrences(index, bounds);
}

VerificationReport check_lemma_recurrences(const EnumerationIndex& index,
                                           const TruncationBox& bounds)
{
	const int r = index.r();
	VerificationReport rep;
	rep.check = "smallest-part-count-identities";
	rep.param("r", std::to_string(r));
	rep.box = bounds.str();
	rep.sound_region = bounds.str();

	const TruncationBox& tb = index.table_box();
	int top = (1 << r) - 1;
	std::vector<CountTable> p0;
	for (int j = 1; j <= top; ++j) p0.push_back(index.p_table(0, j));
	CountTable p1u1 = index.p_table(1, 1);

	auto p0_at = [&](int mask, const StatsKey& s) -> long long {
		if (s.n < 0 || s.k < 0 || s.m < 0) return 0;
		for (int i = 0; i < r; ++i)
			if (s.l[i] < 0) return 0;
		return p0[mask - 1].at(pack_stats(s));
	};

	StatsKey s;
	std::array<int, kMaxColours>& l = s.l;
	auto scan = [&](auto&& self, int i) -> void {
		if (!rep.pass) return;
		if (i < r) {
			for (l[i] = 0; l[i] <= bounds.umax; ++l[i]) self(self, i + 1);
			l[i] = 0;
			return;
		}
		int m_top = bounds.xmax > 0 ? std::min(bounds.xmax, tb.xmax) : tb.xmax;
		for (s.k = 0; s.k <= bounds.dmax; ++s.k)
			for (s.m = 0; s.m <= m_top; ++s.m)
				for (s.n = 0; s.n <= bounds.qmax; ++s.n) {
					Mono key = pack_stats(s);
					/* removing a smallest part 0 coloured j */
					for (int j = 1; j <= top; ++j) {
						Colour cj{j, r};
						int w = weight(cj), vmask = 1 << (min_primary(cj) - 1);
						StatsKey t = s;
						for (int b = 0; b < r; ++b)
							if (uses_primary(cj, b + 1)) --t.l[b];
						t.m = s.m - 1;
						t.n = s.n - (s.m - 1) * w;
						StatsKey t2 = t;
						t2.k = s.k - 1;
						t2.n = s.n - (s.m - 1) * (w - 1);
						long long lhs, rhs;
						if (j < top) {
							lhs = p0[j - 1].at(key) - p0[j].at(key);
							rhs = p0_at(vmask, t) + p0_at(vmask, t2);
						} else {
							lhs = p0[top - 1].at(key) - p1u1.at(key);
							rhs = p0_at(1, t) + p0_at(1, t2);
						}
						if (lhs != rhs) {
							rep.fail("j=" + std::to_string(j) + " " + render_stats(key, r, true),
							         std::to_string(lhs), std::to_string(rhs));
							return;
						}
					}
					/* lowering every part by one */
					StatsKey t = s;
					t.n = s.n - s.m;
					long long lhs = p1u1.at(key);
					long long rhs = (t.n < 0) ? 0 : p0[0].at(pack_stats(t));
					if (lhs != rhs) {
						rep.fail("shift " + render_stats(key, r, true),
						         std::to_string(lhs), std::to_string(rhs));
						return;
					}
				}
	};
	scan(scan, 0);
	return rep;
}

std::string render_parts(const std::vector<Part>& parts)
{
	if (parts.empty()) return "(empty)";
	std::ostringstream os;
	bool first = true;
	for (const Part& p : parts) {
		if (!first) os << ' ';
		os << p.value << '(' << to_string(p.colour) << ',' << (p.overlined ? 1 : 0)
		   << ')';
		first = false;
	}
	return os.str();
}

} // namespace qschur
