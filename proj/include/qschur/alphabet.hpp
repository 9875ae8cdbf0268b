#pragma once

#include "qschur/colour.hpp"
#include "qschur/report.hpp"
#include "qschur/weighted_words.hpp"

#include <vector>

namespace qschur {

/* least positive residue of m mod N, in [1, N]; m must be nonzero */
int least_positive_residue(long long m, int N);

/* A super-increasing alphabet a(1) < ... < a(r) with modulus N: every
 * a(k) exceeds the sum of its predecessors (so all 2^r - 1 subset sums
 * are distinct) and N bounds the full sum. Validation happens here
 * because everything downstream silently assumes it. */
class Alphabet {
public:
	Alphabet(int N, std::vector<int> a);

	int modulus() const { return N_; }
	int r() const { return int(a_.size()); }
	int a(int i) const { return a_.at(i - 1); } /* 1-based */

	/* subset sum alpha(mask) = sum of a(i) over the bits of mask */
	int subset_sum(int mask) const;
	bool is_subset_sum(int value) const;
	int mask_of(int subset_sum_value) const; /* inverse; DomainError off A' */

	int sum_weight(int alpha) const;  /* number of summands of alpha */
	int min_summand(int alpha) const; /* smallest a(i) in alpha */
	int max_summand(int alpha) const; /* largest a(i) in alpha */

	/* 1 exactly when max_summand(alpha) < min_summand(beta) */
	int strictly_below(int alpha, int beta) const;

	/* alpha = a(i_1)+...+a(i_s)  ->  a(sigma(i_1))+...+a(sigma(i_s)) */
	int permute_sum(const Permutation& sigma, int alpha) const;

private:
	int N_;
	std::vector<int> a_;
	std::vector<int> mask_by_sum_; /* subset sum -> mask, 0 = not a sum */
};

/* max_summand(beta) <= beta, and super-increase pushes the next a(i)
 * past every earlier subset sum, so comparing min_summand(alpha) against
 * beta or against max_summand(beta) is the same test. Checked over all
 * pairs of subset sums. */
VerificationReport check_lemma_comparison(const Alphabet& alph);

struct DilatedPart {
	int value = 0;
	bool overlined = false;
};

/* value -> N*value + alpha(colour): parts land in the classes of the
 * subset sums */
DilatedPart dilate_plus(const Alphabet& alph, const Part& p);
/* value -> N*(w(colour) + value) - alpha(colour): parts land in the
 * classes of the negated subset sums */
DilatedPart dilate_minus(const Alphabet& alph, const Part& p);

enum class Side { plus, minus };

struct DilatedTables {
	CountTable multiset; /* distinct-overlined congruence side */
	CountTable sequence; /* difference-condition side */
};

/* Both tables of the dilated identity on the requested side, keyed by
 * (l_1..l_r, k, n) with n <= bounds.qmax, l_i <= bounds.umax,
 * k <= bounds.dmax. Enumeration works directly on dilated parts with
 * residue lookups. */
DilatedTables enumerate_dilated(const Alphabet& alph, Side side,
                                const Permutation& sigma, const TruncationBox& bounds);

/* object streams for --list */
void for_each_dilated_multiset(const Alphabet& alph, Side side, const TruncationBox& bounds,
                               const std::function<void(const std::vector<DilatedPart>&)>& visit);
void for_each_dilated_sequence(const Alphabet& alph, Side side, const Permutation& sigma,
                               const TruncationBox& bounds,
                               const std::function<void(const std::vector<DilatedPart>&)>& visit);

/* Minimal admissible difference between consecutive parts with residues
 * x (above) and y (below). On the plus side x, y are subset sums; on the
 * minus side they are given negated (x = -alpha). chi is 1 when the
 * lower part is overlined. */
int minimal_difference(const Alphabet& alph, const Permutation& sigma, Side side,
                       int x, int y, int chi);

std::string render_dilated(const std::vector<DilatedPart>& parts);

} // namespace qschur
