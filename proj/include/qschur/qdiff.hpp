#pragma once

#include "qschur/report.hpp"
#include "qschur/series.hpp"
#include "qschur/weighted_words.hpp"

#include <utility>
#include <vector>

namespace qschur {

/* The generating functions of the smallest-part-restricted counts:
 * f0[j-1] generates sequences with smallest part at least 0 coloured by
 * mask j, f1_u1 those with smallest part at least 1_{u1}. Exponents: q
 * carries the weight, u_i the colour counts, d the non-overlined count,
 * x the number of parts. */
struct SeriesFamily {
	int r = 1;
	TruncationBox box;
	std::vector<MultiSeries> f0;
	MultiSeries f1_u1;

	const MultiSeries& f0_colour(int mask) const { return f0.at(mask - 1); }
	const MultiSeries& f0_primary(int k) const { return f0_colour(1 << (k - 1)); }
	const MultiSeries& f() const { return f0.front(); } /* f at 0_{u1} */
};

/* Requires box.xmax >= r * box.umax so the later x = 1 evaluation sees
 * every part count the colour bounds allow. */
SeriesFamily build_family(int r, const TruncationBox& box);
SeriesFamily build_family(const EnumerationIndex& index, const TruncationBox& box);

/* Polynomial kernels of the coefficient recurrences. c and b arise from
 * rewriting the q-difference equation for the product-prefactored
 * series; e and f from the downshifted one. */
class KernelCoefficients {
public:
	KernelCoefficients(int r, const TruncationBox& box);

	int r() const { return r_; }
	const TruncationBox& box() const { return box_; }

	MultiSeries c(int k, int i) const; /* d^k u_r^k q^{k(k+1)/2} [i-1, k]_q */
	MultiSeries b(int m, int i) const; /* all-colour weight block, [i+m-1, m-1]_q */
	MultiSeries e(int m, int i) const; /* (r-1)-colour weight block */
	MultiSeries f(int m, int k) const; /* u_r^k q^{k(k+1)/2} [m-1, k]_q */
	MultiSeries esum(int num_vars, int w) const;

private:
	int r_;
	TruncationBox box_;
};

/* sum_{i=1}^{s} (sum_{m=0}^{s-i} d^m sum_{w(j)=i+m, j<2^s} x ~u_j
 * ((-x)^{m-1} [i+m-1, m-1]_q + (-x)^m [i+m, m]_q))
 * prod_{h<i}(1-xq^h) f(xq^i) -- the elimination sum shared by the
 * staged difference equations. */
MultiSeries elimination_sum(const MultiSeries& f, int s);

/* f0 at colour j minus f0 at colour j+1 detaches a smallest part
 * 0_{~u_j}; the last colour detaches against f1_u1; and f1_u1 is f0_u1
 * shifted by x -> xq. */
VerificationReport check_family_difference_equations(const SeriesFamily& fam);

/* Eliminating f0 at u_k against u_{k-1} (and f1_u1 against u_r), checked
 * multiplied through by q to keep exponents non-negative. */
VerificationReport check_neighbour_elimination(const SeriesFamily& fam);

/* The inductive elimination identity at level k:
 * prod_{i<k}(1-dxu_i) f = f0_{u_k} + elimination_sum(f, k-1). */
VerificationReport check_elimination_chain(const SeriesFamily& fam, int k);

/* The closed q-difference equation:
 * prod_{i<=r}(1-dxu_i) f(x) = f(xq) + elimination_sum(f, r). */
VerificationReport check_q_difference_equation(const SeriesFamily& fam);

struct CoefficientSequence {
	std::vector<MultiSeries> at; /* index n = 0..xmax, no x dependence */
};

/* F(x) = f(x) prod_{n>=0} (1-dxu_r q^n)/(1-xq^n) and its x-coefficients. */
std::pair<MultiSeries, CoefficientSequence> transform_F(const MultiSeries& f, int r);

/* The q-difference equation satisfied by F. */
VerificationReport check_prefactor_equation(const MultiSeries& F, int r);

/* The q-difference equation satisfied by G = sum a_n x^n (the same
 * left-hand polynomial as F's equation, with the one-variable-down
 * kernel on the right). */
VerificationReport check_downshift_prefactor_equation(const MultiSeries& G, int r);

enum class RecurrenceKind {
	full,      /* (1-q^n) A_n on the prefactored coefficients */
	product,   /* the same sequence against the f/e kernel form */
	downshift, /* (1-q^n) a_n after dividing out prod (1+u_r q^k) */
};

VerificationReport check_recurrence(const CoefficientSequence& A, RecurrenceKind kind,
                                    const KernelCoefficients& ker);

struct DownshiftResult {
	CoefficientSequence a; /* a_n = A_n / prod_{k<n}(1+u_r q^k) */
	MultiSeries G;         /* sum a_n x^n */
	MultiSeries g;         /* G(x) prod_{n>=0}(1-xq^n) */
};

DownshiftResult transform_down(const CoefficientSequence& A, int r);

/* a_0 = 1 and g(0) = 1; multiplying a_n back by prod_{k<n}(1+u_r q^k)
 * recovers A_n; g satisfies the level-(r-1) q-difference equation and
 * coincides with the independently enumerated (r-1)-colour family (with
 * 1 at r = 1). */
VerificationReport check_downshift_base(const DownshiftResult& down,
                                        const CoefficientSequence& A, int r);

/* T_{m,i} = T'_{m,i}, the n-uniform kernel equality (with x standing in
 * for q^{n-m}), the constant-block equality f_{m,0} e_{m,0}, and the
 * u_r-split of c_{k,i} b_{m-k,i}. */
VerificationReport check_kernel_identities(const KernelCoefficients& ker);

/* x = 1 evaluation of the family equals the colour product
 * prod_k (-u_k;q)_infty / (d u_k;q)_infty. */
VerificationReport check_main(int r, const TruncationBox& box);
VerificationReport check_main_for(const SeriesFamily& fam);

/* The full staged verification; with corrupt set, one family coefficient
 * is perturbed first so a failure must surface. */
std::vector<VerificationReport> run_qdiff_pipeline(int r, const TruncationBox& box,
                                                   bool corrupt = false);

} // namespace qschur
