#pragma once

#include "qschur/colour.hpp"
#include "qschur/report.hpp"
#include "qschur/series.hpp"

#include <array>
#include <functional>
#include <map>
#include <vector>

namespace qschur {

/* One coloured, possibly overlined, non-negative part. */
struct Part {
	int value = 0;
	Colour colour;
	bool overlined = false;
};

/* Statistics of a counted object, packed with the same field layout as a
 * series monomial: n in the q field, l_1..l_r in the u fields, k in the
 * d field, the part count m in the x field. A count table therefore
 * converts to a generating series by reinterpreting keys. */
struct StatsKey {
	int n = 0;
	std::array<int, kMaxColours> l{};
	int k = 0;
	int m = 0;
};

Mono pack_stats(const StatsKey& s);
StatsKey unpack_stats(Mono m);
std::string render_stats(Mono key, int r, bool with_m);

struct CountTable {
	TruncationBox box;
	std::map<uint64_t, long long> counts;

	explicit CountTable(const TruncationBox& b) : box(b) {}

	void add(Mono key, long long c = 1);
	long long at(Mono key) const;
	bool operator==(const CountTable& o) const;
	MultiSeries to_series(const TruncationBox& series_box) const;
	CountTable slice_k0() const; /* keys with k = 0 only */

	/* counts by n alone (all other statistics summed out) */
	std::vector<long long> by_weight() const;
};

std::optional<Mono> first_mismatch(const CountTable& a, const CountTable& b);

/* Minimal admissible difference between a part below prev and the next
 * part: w(c(next)) + chi(next overlined) - 1 + [sigma(c(prev)) strictly
 * below sigma(c(next))]. */
int required_gap(const Permutation& sigma, Colour prev, Colour next, bool next_overlined);

/* Visits every difference-condition sequence within the bounds (the
 * empty one included), parts chosen largest first; the callback receives
 * the parts and the packed statistics (with m). */
void for_each_weighted_sequence(
    int r, const Permutation& sigma, const TruncationBox& bounds,
    const std::function<void(const std::vector<Part>&, Mono)>& visit);

/* Visits every congruence-side object: per primary colour a set of
 * distinct overlined values plus a multiset of non-overlined values. */
void for_each_multiset_object(
    int r, const TruncationBox& bounds,
    const std::function<void(const std::vector<Part>&, Mono)>& visit);

/* Count tables keyed by (l_1..l_r, k, n). enumerate_E honours the
 * QSCHUR_THREADS cap by splitting the search at the first part. */
CountTable enumerate_D(int r, const TruncationBox& bounds);
CountTable enumerate_E(int r, const Permutation& sigma, const TruncationBox& bounds);

/* Sequences whose smallest part is at least value_{colour}, keyed by
 * (l, k, m, n). One-shot convenience over EnumerationIndex. */
CountTable count_p(Colour colour, int value, int r, const TruncationBox& bounds);

/* The sequence-side enumeration at sigma = id, bucketed by smallest part
 * so that the smallest-part-restricted counts come out by suffix
 * summation over the coloured-integer order. */
class EnumerationIndex {
public:
	EnumerationIndex(int r, const TruncationBox& bounds);

	int r() const { return r_; }
	/* bounds with the part count tracked up to r*umax */
	const TruncationBox& table_box() const { return tbox_; }

	/* counts of sequences whose smallest part is at least value_{colour},
	 * keyed by (l, k, m, n); the empty sequence belongs to every table */
	CountTable p_table(int value, int colour_mask) const;

	/* checker self-test: bump one bucketed count so every identity over
	 * this index must fail */
	void perturb_one_count();

private:
	int r_;
	TruncationBox tbox_;
	CountTable empty_;
	std::map<std::pair<int, int>, CountTable> buckets_;
};

/* The three smallest-part count identities: removing a smallest part
 * 0_{colour j} lowers the other m-1 parts by w (overlined) or w-1 (not),
 * and removing value 1 from every part turns p at 1_{u_1} into p at
 * 0_{u_1} with n lowered by m. Verified densely over the bounds. */
VerificationReport check_lemma_recurrences(int r, const TruncationBox& bounds);
VerificationReport check_lemma_recurrences(const EnumerationIndex& index,
                                           const TruncationBox& bounds);

std::string render_parts(const std::vector<Part>& parts);

int worker_thread_cap();

} // namespace qschur
