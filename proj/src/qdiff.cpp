#include "qschur/qdiff.hpp"

#include "qschur/colour.hpp"

#include <sstream>

namespace qschur {

namespace {

std::string render_mono(Mono m, int r)
{
	std::ostringstream os;
	os << "q^" << m.q_exp();
	for (int i = 1; i <= r; ++i) os << " u" << i << "^" << m.u_exp(i);
	os << " d^" << m.d_exp() << " x^" << m.x_exp();
	return os.str();
}

void compare_series(VerificationReport& rep, const std::string& what,
                    const MultiSeries& lhs, const MultiSeries& rhs)
{
	if (!rep.pass) return;
	auto diff = first_mismatch(lhs, rhs);
	if (diff) {
		rep.fail(what + " at " + render_mono(*diff, lhs.box().r),
		         lhs.coeff(*diff).get_str(), rhs.coeff(*diff).get_str());
	}
}

MultiSeries mono_series(const TruncationBox& box, Mono m, const mpz_class& c = 1)
{
	return MultiSeries::monomial(box, m, c);
}

/* 1 - d x u_i as a series factor */
MultiSeries one_minus_dxu(const TruncationBox& box, int i)
{
	MultiSeries s = MultiSeries::one(box);
	s.add_term(Mono::d(1) * Mono::x(1) * Mono::u(i, 1), -1);
	return s;
}

MultiSeries prefix_product(const TruncationBox& box, const MultiSeries& f, int upto)
{
	MultiSeries out = f;
	for (int i = 1; i <= upto; ++i) out = out * one_minus_dxu(box, i);
	return out;
}

/* the x-degree-n slice of s, with the x exponent cleared */
MultiSeries x_coefficient(const MultiSeries& s, int n)
{
	MultiSeries out(s.box());
	for (const auto& [k, c] : s.terms()) {
		Mono m = Mono::from_packed(k);
		if (m.x_exp() != n) continue;
		out.add_term(Mono::from_packed(k & ~uint64_t(0xff)), c);
	}
	return out;
}

} // namespace

SeriesFamily build_family(int r, const TruncationBox& box)
{
	if (box.xmax < r * box.umax)
		throw UsageError("family box needs xmax >= r*umax (got xmax=" +
		                 std::to_string(box.xmax) + ", need " +
		                 std::to_string(r * box.umax) + ") for the x = 1 evaluation");
	EnumerationIndex index(r, box);
	return build_family(index, box);
}

SeriesFamily build_family(const EnumerationIndex& index, const TruncationBox& box)
{
	if (box.xmax < index.r() * box.umax)
		throw UsageError("family box needs xmax >= r*umax for the x = 1 evaluation");
	SeriesFamily fam{index.r(), box, {}, MultiSeries(box)};
	for (int j = 1; j < (1 << fam.r); ++j)
		fam.f0.push_back(index.p_table(0, j).to_series(box));
	fam.f1_u1 = index.p_table(1, 1).to_series(box);
	return fam;
}

VerificationReport check_family_difference_equations(const SeriesFamily& fam)
{
	VerificationReport rep;
	rep.check = "family-difference-equations";
	rep.param("r", std::to_string(fam.r));
	rep.box = fam.box.str();
	rep.sound_region = fam.box.str();

	const TruncationBox& box = fam.box;
	int top = (1 << fam.r) - 1;
	for (int j = 1; j <= top; ++j) {
		Colour cj{j, fam.r};
		int w = weight(cj);
		const MultiSeries& fv = fam.f0_primary(min_primary(cj));
		MultiSeries rhs =
		    mono_series(box, Mono::x(1) * colour_mono(cj)) * substitute_x_power(fv, w) +
		    mono_series(box, Mono::d(1) * Mono::x(1) * colour_mono(cj)) *
		        substitute_x_power(fv, w - 1);
		MultiSeries lhs = (j < top) ? fam.f0_colour(j) - fam.f0_colour(j + 1)
		                            : fam.f0_colour(top) - fam.f1_u1;
		compare_series(rep, "detach 0 coloured " + to_string(cj), lhs, rhs);
		if (!rep.pass) return rep;
	}
	compare_series(rep, "shift x->xq", fam.f1_u1, substitute_x_power(fam.f(), 1));
	return rep;
}

VerificationReport check_neighbour_elimination(const SeriesFamily& fam)
{
	VerificationReport rep;
	rep.check = "neighbour-elimination";
	rep.param("r", std::to_string(fam.r));
	rep.box = fam.box.str();
	rep.sound_region = fam.box.str();

	const TruncationBox& box = fam.box;
	auto rhs_for = [&](int lower) {
		/* q (1-dxu_lower) f0_{u_lower}(x) - u_lower f(xq)
		 *   + u_lower (1-xq) f0_{u_lower}(xq), the whole identity
		 * multiplied through by q */
		MultiSeries shifted = substitute_x_power(fam.f0_primary(lower), 1);
		MultiSeries one_minus_xq = MultiSeries::one(box);
		one_minus_xq.add_term(Mono::x(1) * Mono::q(1), -1);
		return mono_series(box, Mono::q(1)) * (fam.f0_primary(lower) * one_minus_dxu(box, lower)) -
		       mono_series(box, Mono::u(lower, 1)) * substitute_x_power(fam.f(), 1) +
		       mono_series(box, Mono::u(lower, 1)) * (one_minus_xq * shifted);
	};
	for (int k = 2; k <= fam.r; ++k) {
		MultiSeries lhs = mono_series(box, Mono::q(1)) * fam.f0_primary(k);
		compare_series(rep, "eliminate u" + std::to_string(k), lhs, rhs_for(k - 1));
		if (!rep.pass) return rep;
	}
	MultiSeries lhs = mono_series(box, Mono::q(1)) * fam.f1_u1;
	compare_series(rep, "eliminate shifted u1", lhs, rhs_for(fam.r));
	return rep;
}

MultiSeries elimination_sum(const MultiSeries& f, int s)
{
	const TruncationBox& box = f.box();
	MultiSeries out(box);
	for (int i = 1; i <= s; ++i) {
		MultiSeries coeff(box);
		for (int m = 0; m <= s - i; ++m) {
			MultiSeries weight_sum = colour_weight_sum(box, s, i + m);
			if (weight_sum.is_zero()) continue;
			MultiSeries bracket(box);
			if (m >= 1) {
				mpz_class sign = (m - 1) % 2 == 0 ? 1 : -1;
				bracket += mono_series(box, Mono::x(m) * Mono::d(m), sign) *
				           qbinomial(i + m - 1, m - 1, box);
			}
			mpz_class sign = m % 2 == 0 ? 1 : -1;
			bracket += mono_series(box, Mono::x(m + 1) * Mono::d(m), sign) *
			           qbinomial(i + m, m, box);
			coeff += weight_sum * bracket;
		}
		if (coeff.is_zero()) continue;
		MultiSeries term = coeff;
		for (int h = 1; h <= i - 1; ++h) {
			MultiSeries one_minus_xqh = MultiSeries::one(box);
			if (h <= box.qmax) one_minus_xqh.add_term(Mono::x(1) * Mono::q(h), -1);
			term = term * one_minus_xqh;
		}
		out += term * substitute_x_power(f, i);
	}
	return out;
}

VerificationReport check_elimination_chain(const SeriesFamily& fam, int k)
{
	if (k < 1 || k > fam.r)
		throw UsageError("elimination level must lie in 1..r");
	VerificationReport rep;
	rep.check = "elimination-chain";
	rep.param("r", std::to_string(fam.r));
	rep.param("level", std::to_string(k));
	rep.box = fam.box.str();
	rep.sound_region = fam.box.str();

	MultiSeries lhs = prefix_product(fam.box, fam.f(), k - 1);
	MultiSeries rhs = fam.f0_primary(k) + elimination_sum(fam.f(), k - 1);
	compare_series(rep, "level " + std::to_string(k), lhs, rhs);
	return rep;
}

VerificationReport check_q_difference_equation(const SeriesFamily& fam)
{
	VerificationReport rep;
	rep.check = "q-difference-equation";
	rep.param("r", std::to_string(fam.r));
	rep.box = fam.box.str();
	rep.sound_region = fam.box.str();

	MultiSeries lhs = prefix_product(fam.box, fam.f(), fam.r);
	MultiSeries rhs = substitute_x_power(fam.f(), 1) + elimination_sum(fam.f(), fam.r);
	compare_series(rep, "closed equation", lhs, rhs);
	return rep;
}

KernelCoefficients::KernelCoefficients(int r, const TruncationBox& box)
    : r_(r), box_(box)
{
	if (box.r != r)
		throw UsageError("kernel box carries a different colour count");
}

MultiSeries KernelCoefficients::esum(int num_vars, int w) const
{
	return colour_weight_sum(box_, num_vars, w);
}

MultiSeries KernelCoefficients::c(int k, int i) const
{
	int qexp = k * (k + 1) / 2;
	if (k < 0 || qexp > box_.qmax) return MultiSeries(box_);
	return mono_series(box_, Mono::d(k) * Mono::u(r_, k) * Mono::q(qexp)) *
	       qbinomial(i - 1, k, box_);
}

MultiSeries KernelCoefficients::b(int m, int i) const
{
	if (m < 1) return MultiSeries(box_);
	MultiSeries blocks = mono_series(box_, Mono::d(m - 1)) * esum(r_, i + m - 1) +
	                     mono_series(box_, Mono::d(m)) * esum(r_, i + m);
	return blocks * qbinomial(i + m - 1, m - 1, box_);
}

MultiSeries KernelCoefficients::e(int m, int i) const
{
	if (m < 1 || i < 0) return MultiSeries(box_);
	MultiSeries blocks = mono_series(box_, Mono::d(m - 1)) * esum(r_ - 1, i + m - 1) +
	                     mono_series(box_, Mono::d(m)) * esum(r_ - 1, i + m);
	return blocks * qbinomial(i + m - 1, m - 1, box_);
}

MultiSeries KernelCoefficients::f(int m, int k) const
{
	int qexp = k * (k + 1) / 2;
	if (k < 0 || qexp > box_.qmax) return MultiSeries(box_);
	return mono_series(box_, Mono::u(r_, k) * Mono::q(qexp)) * qbinomial(m - 1, k, box_);
}

std::pair<MultiSeries, CoefficientSequence> transform_F(const MultiSeries& f, int r)
{
	const TruncationBox& box = f.box();
	if (box.r != r)
		throw UsageError("series box carries a different colour count");
	MultiSeries F = f;
	for (int n = 0; n <= box.qmax; ++n) {
		Mono up = Mono::d(1) * Mono::x(1) * Mono::u(r, 1) * Mono::q(n);
		if (box_admits(box, up)) {
			MultiSeries factor = MultiSeries::one(box);
			factor.add_term(up, -1);
			F = F * factor;
		}
		Mono down = Mono::x(1) * Mono::q(n);
		if (box_admits(box, down)) F = F * geometric_series(box, down);
	}
	CoefficientSequence A;
	for (int n = 0; n <= box.xmax; ++n) A.at.push_back(x_coefficient(F, n));
	return {F, A};
}

namespace {

/* 1 + sum_i (-x)^i (d^{i-1} esum(i-1) + d^i esum(i)) over the first r-1
 * colours: the left-hand polynomial shared by the two prefactored
 * equations */
MultiSeries prefactor_lhs_poly(const KernelCoefficients& ker)
{
	const TruncationBox& box = ker.box();
	MultiSeries poly = MultiSeries::one(box);
	for (int i = 1; i <= ker.r(); ++i) {
		mpz_class sign = i % 2 == 0 ? 1 : -1;
		MultiSeries blocks =
		    mono_series(box, Mono::d(i - 1)) * ker.esum(ker.r() - 1, i - 1) +
		    mono_series(box, Mono::d(i)) * ker.esum(ker.r() - 1, i);
		poly += mono_series(box, Mono::x(i), sign) * blocks;
	}
	return poly;
}

} // namespace

VerificationReport check_prefactor_equation(const MultiSeries& F, int r)
{
	const TruncationBox& box = F.box();
	VerificationReport rep;
	rep.check = "prefactor-equation";
	rep.param("r", std::to_string(r));
	rep.box = box.str();
	rep.sound_region = box.str();
	rep.notes.push_back("kernel c(k,i) carries q^{k(k+1)/2}; the k(k-1)/2 variant fails this check");

	KernelCoefficients ker(r, box);
	MultiSeries lhs = prefactor_lhs_poly(ker) * F;

	MultiSeries rhs = substitute_x_power(F, 1);
	for (int i = 1; i <= r; ++i) {
		MultiSeries shifted = substitute_x_power(F, i);
		for (int l = 1; l <= r; ++l) {
			MultiSeries coeff(box);
			for (int k = 0; k <= std::min(i - 1, l - 1); ++k)
				coeff += ker.c(k, i) * ker.b(l - k, i);
			if (coeff.is_zero()) continue;
			mpz_class sign = (l - 1) % 2 == 0 ? 1 : -1;
			rhs += mono_series(box, Mono::x(l), sign) * coeff * shifted;
		}
	}
	compare_series(rep, "prefactored equation", lhs, rhs);
	return rep;
}

VerificationReport check_downshift_prefactor_equation(const MultiSeries& G, int r)
{
	const TruncationBox& box = G.box();
	VerificationReport rep;
	rep.check = "downshift-prefactor-equation";
	rep.param("r", std::to_string(r));
	rep.box = box.str();
	rep.sound_region = box.str();

	KernelCoefficients ker(r, box);
	MultiSeries lhs = prefactor_lhs_poly(ker) * G;

	MultiSeries rhs = substitute_x_power(G, 1);
	for (int i = 1; i <= r; ++i) {
		MultiSeries shifted = substitute_x_power(G, i);
		for (int m = 1; m <= r - i; ++m) {
			MultiSeries kernel = ker.e(m, i);
			if (kernel.is_zero()) continue;
			mpz_class sign = (m + 1) % 2 == 0 ? 1 : -1;
			rhs += mono_series(box, Mono::x(m), sign) * kernel * shifted;
		}
	}
	compare_series(rep, "downshifted equation", lhs, rhs);
	return rep;
}

VerificationReport check_recurrence(const CoefficientSequence& A, RecurrenceKind kind,
                                    const KernelCoefficients& ker)
{
	const TruncationBox& box = ker.box();
	const int r = ker.r();
	VerificationReport rep;
	switch (kind) {
	case RecurrenceKind::full: rep.check = "coefficient-recurrence"; break;
	case RecurrenceKind::product: rep.check = "product-form-recurrence"; break;
	case RecurrenceKind::downshift: rep.check = "downshift-recurrence"; break;
	}
	rep.param("r", std::to_string(r));
	rep.box = box.str();
	rep.sound_region = box.str();
	rep.notes.push_back("recurrence kernels are read with the colour-sum index i throughout");

	/* q^{e} as a series, zero when e escapes the box */
	auto qpow = [&box](int e) {
		MultiSeries s(box);
		if (e <= box.qmax) s.add_term(Mono::q(e), 1);
		return s;
	};

	for (int n = 1; n < int(A.at.size()); ++n) {
		MultiSeries one_minus_qn = MultiSeries::one(box);
		if (n <= box.qmax) one_minus_qn.add_term(Mono::q(n), -1);
		MultiSeries lhs = one_minus_qn * A.at[n];

		MultiSeries rhs(box);
		for (int m = 1; m <= std::min(r, n); ++m) {
			MultiSeries kernel(box);
			if (kind == RecurrenceKind::full) {
				kernel += mono_series(box, Mono::d(m - 1)) * ker.esum(r - 1, m - 1) +
				          mono_series(box, Mono::d(m)) * ker.esum(r - 1, m);
				for (int i = 1; i <= r; ++i) {
					if (std::int64_t(i) * (n - m) > box.qmax) continue;
					MultiSeries block(box);
					for (int k = 0; k <= std::min(i - 1, m - 1); ++k)
						block += ker.c(k, i) * ker.b(m - k, i);
					kernel += block * qpow(i * (n - m));
				}
			} else if (kind == RecurrenceKind::product) {
				for (int nu = 0; nu <= r - 1; ++nu) {
					if (std::int64_t(nu) * (n - m) > box.qmax) continue;
					MultiSeries block(box);
					for (int mu = 0; mu <= std::min(m - 1, nu); ++mu)
						block += ker.f(m, mu) * ker.e(m, nu - mu);
					kernel += block * qpow(nu * (n - m));
				}
				for (int nu = 1; nu <= r; ++nu) {
					if (std::int64_t(nu) * (n - m) > box.qmax) continue;
					MultiSeries block(box);
					for (int mu = 0; mu <= std::min(m - 1, nu - 1); ++mu)
						block += ker.f(m, mu) * ker.e(m, nu - mu - 1);
					kernel += mono_series(box, Mono::u(r, 1)) * block * qpow(nu * (n - m));
				}
			} else {
				for (int i = 0; i <= r - 1; ++i) {
					if (std::int64_t(i) * (n - m) > box.qmax) continue;
					kernel += ker.e(m, i) * qpow(i * (n - m));
				}
			}
			mpz_class sign = (m + 1) % 2 == 0 ? 1 : -1;
			rhs += sign * (kernel * A.at[n - m]);
		}
		compare_series(rep, "n=" + std::to_string(n), lhs, rhs);
		if (!rep.pass) return rep;
	}
	return rep;
}

DownshiftResult transform_down(const CoefficientSequence& A, int r)
{
	if (A.at.empty()) throw UsageError("empty coefficient sequence");
	const TruncationBox& box = A.at.front().box();
	if (box.r != r)
		throw UsageError("series box carries a different colour count");

	DownshiftResult out{CoefficientSequence{}, MultiSeries(box), MultiSeries(box)};

	/* incremental inverse of prod_{k<n}(1+u_r q^k) via alternating
	 * geometric factors */
	MultiSeries inv_acc = MultiSeries::one(box);
	for (int n = 0; n < int(A.at.size()); ++n) {
		if (n >= 1) {
			Mono m = Mono::u(r, 1) * Mono::q(n - 1);
			if (box_admits(box, m)) {
				MultiSeries alt(box);
				Mono power;
				mpz_class sign = 1;
				while (box_admits(box, power)) {
					alt.add_term(power, sign);
					power = power * m;
					sign = -sign;
				}
				inv_acc = inv_acc * alt;
			}
		}
		out.a.at.push_back(A.at[n] * inv_acc);
	}

	for (int n = 0; n < int(out.a.at.size()); ++n)
		out.G += mono_series(box, Mono::x(n)) * out.a.at[n];

	out.g = out.G;
	for (int n = 0; n <= box.qmax; ++n) {
		Mono m = Mono::x(1) * Mono::q(n);
		if (!box_admits(box, m)) continue;
		MultiSeries factor = MultiSeries::one(box);
		factor.add_term(m, -1);
		out.g = out.g * factor;
	}
	return out;
}

VerificationReport check_downshift_base(const DownshiftResult& down,
                                        const CoefficientSequence& A, int r)
{
	const TruncationBox& box = down.g.box();
	VerificationReport rep;
	rep.check = "downshift-base-equation";
	rep.param("r", std::to_string(r));
	rep.box = box.str();
	rep.sound_region = box.str();

	/* a_0 = 1 and g(0) = 1 */
	compare_series(rep, "a_0", down.a.at.at(0), MultiSeries::one(box));
	if (!rep.pass) return rep;
	compare_series(rep, "g(0)", x_coefficient(down.g, 0), MultiSeries::one(box));
	if (!rep.pass) return rep;

	/* multiplying back recovers the prefactored coefficients */
	MultiSeries pocket = MultiSeries::one(box);
	for (int n = 0; n < int(down.a.at.size()); ++n) {
		if (n >= 1) {
			Mono m = Mono::u(r, 1) * Mono::q(n - 1);
			if (box_admits(box, m)) {
				MultiSeries factor = MultiSeries::one(box);
				factor.add_term(m, 1);
				pocket = pocket * factor;
			}
		}
		compare_series(rep, "product coefficient n=" + std::to_string(n),
		               down.a.at[n] * pocket, A.at[n]);
		if (!rep.pass) return rep;
	}

	/* g satisfies the level-(r-1) q-difference equation */
	MultiSeries lhs = prefix_product(box, down.g, r - 1);
	MultiSeries rhs = substitute_x_power(down.g, 1) + elimination_sum(down.g, r - 1);
	compare_series(rep, "level " + std::to_string(r - 1) + " equation", lhs, rhs);
	if (!rep.pass) return rep;

	/* g equals the independently enumerated family one colour down */
	MultiSeries expected(box);
	if (r == 1) {
		expected = MultiSeries::one(box);
	} else {
		TruncationBox small(r - 1, box.qmax, box.umax, box.dmax, box.xmax);
		SeriesFamily fam = build_family(r - 1, small);
		for (const auto& [k, c] : fam.f().terms())
			expected.add_term(Mono::from_packed(k), c);
	}
	compare_series(rep, "g against the smaller enumeration", down.g, expected);
	return rep;
}

VerificationReport check_kernel_identities(const KernelCoefficients& ker)
{
	const TruncationBox& box = ker.box();
	const int r = ker.r();
	VerificationReport rep;
	rep.check = "kernel-identities";
	rep.param("r", std::to_string(r));
	rep.box = box.str();
	rep.sound_region = box.str();
	rep.notes.push_back("cross q-binomial identity applied in base q");

	auto T = [&](int m, int i) {
		MultiSeries out(box);
		for (int k = 0; k <= std::min(i - 1, m - 1); ++k)
			out += ker.c(k, i) * ker.b(m - k, i);
		return out;
	};
	auto Tp = [&](int m, int i) {
		MultiSeries out(box);
		for (int k = 0; k <= std::min(m - 1, i); ++k)
			out += ker.f(m, k) * ker.e(m, i - k);
		MultiSeries carry(box);
		for (int k = 0; k <= std::min(m - 1, i - 1); ++k)
			carry += ker.f(m, k) * ker.e(m, i - k - 1);
		return out + mono_series(box, Mono::u(r, 1)) * carry;
	};

	for (int m = 1; m <= r && rep.pass; ++m) {
		for (int i = 1; i <= r && rep.pass; ++i)
			compare_series(rep, "kernel T m=" + std::to_string(m) + " i=" + std::to_string(i),
			               T(m, i), Tp(m, i));
	}
	if (!rep.pass) return rep;

	/* constant blocks agree */
	for (int m = 1; m <= r && rep.pass; ++m) {
		MultiSeries blocks = mono_series(box, Mono::d(m - 1)) * ker.esum(r - 1, m - 1) +
		                     mono_series(box, Mono::d(m)) * ker.esum(r - 1, m);
		compare_series(rep, "constant block m=" + std::to_string(m),
		               ker.f(m, 0) * ker.e(m, 0), blocks);
	}
	if (!rep.pass) return rep;

	/* n-uniform kernel equality, x standing in for q^{n-m} */
	for (int m = 1; m <= r && rep.pass; ++m) {
		MultiSeries lhs = mono_series(box, Mono::d(m - 1)) * ker.esum(r - 1, m - 1) +
		                  mono_series(box, Mono::d(m)) * ker.esum(r - 1, m);
		for (int i = 1; i <= r; ++i)
			lhs += mono_series(box, Mono::x(i)) * T(m, i);
		MultiSeries rhs = ker.f(m, 0) * ker.e(m, 0);
		for (int nu = 1; nu <= r; ++nu)
			rhs += mono_series(box, Mono::x(nu)) * Tp(m, nu);
		compare_series(rep, "marker sum m=" + std::to_string(m), lhs, rhs);
	}
	if (!rep.pass) return rep;

	/* u_r-split of c(k,i) b(m-k,i) into colour sums one variable down */
	for (int m = 1; m <= r && rep.pass; ++m) {
		for (int i = 1; i <= r && rep.pass; ++i) {
			for (int k = 0; k <= std::min(i - 1, m - 1) && rep.pass; ++k) {
				int qexp = k * (k + 1) / 2;
				MultiSeries lhs = ker.c(k, i) * ker.b(m - k, i);
				MultiSeries rhs(box);
				if (qexp <= box.qmax) {
					MultiSeries shared = mono_series(box, Mono::q(qexp)) *
					                     qbinomial(i - 1, k, box) *
					                     qbinomial(i + m - k - 1, m - k - 1, box);
					MultiSeries plain =
					    mono_series(box, Mono::d(m - 1)) * ker.esum(r - 1, i + m - k - 1) +
					    mono_series(box, Mono::d(m)) * ker.esum(r - 1, i + m - k);
					MultiSeries carry =
					    mono_series(box, Mono::d(m - 1)) * ker.esum(r - 1, i + m - k - 2) +
					    mono_series(box, Mono::d(m)) * ker.esum(r - 1, i + m - k - 1);
					rhs = shared * (mono_series(box, Mono::u(r, k)) * plain +
					                mono_series(box, Mono::u(r, k + 1)) * carry);
				}
				compare_series(rep,
				               "split m=" + std::to_string(m) + " i=" + std::to_string(i) +
				                   " k=" + std::to_string(k),
				               lhs, rhs);
			}
		}
	}
	return rep;
}

VerificationReport check_main_for(const SeriesFamily& fam)
{
	VerificationReport rep;
	rep.check = "series-equality-main";
	rep.param("r", std::to_string(fam.r));
	rep.box = fam.box.str();
	rep.sound_region = fam.box.str();
	compare_series(rep, "x=1 evaluation against the colour product",
	               eval_x_one(fam.f()), product_side(fam.r, fam.box));
	return rep;
}

VerificationReport check_main(int r, const TruncationBox& box)
{
	return check_main_for(build_family(r, box));
}

std::vector<VerificationReport> run_qdiff_pipeline(int r, const TruncationBox& box,
                                                   bool corrupt)
{
	std::vector<VerificationReport> reports;

	EnumerationIndex index(r, box);
	reports.push_back(check_lemma_recurrences(index, box));

	SeriesFamily fam = build_family(index, box);
	if (corrupt) {
		/* negative-control hook: bump one family coefficient */
		fam.f0[0].add_term(Mono::q(std::min(1, box.qmax)), 1);
	}

	reports.push_back(check_family_difference_equations(fam));
	for (int k = 1; k <= r; ++k) reports.push_back(check_elimination_chain(fam, k));
	reports.push_back(check_neighbour_elimination(fam));
	reports.push_back(check_q_difference_equation(fam));

	auto [F, A] = transform_F(fam.f(), r);
	reports.push_back(check_prefactor_equation(F, r));
	{
		VerificationReport base;
		base.check = "prefactor-initial-coefficient";
		base.param("r", std::to_string(r));
		base.box = box.str();
		base.sound_region = box.str();
		compare_series(base, "A_0", A.at.at(0), MultiSeries::one(box));
		reports.push_back(base);
	}

	KernelCoefficients ker(r, box);
	reports.push_back(check_recurrence(A, RecurrenceKind::full, ker));
	reports.push_back(check_recurrence(A, RecurrenceKind::product, ker));
	reports.push_back(check_kernel_identities(ker));

	DownshiftResult down = transform_down(A, r);
	reports.push_back(check_downshift_prefactor_equation(down.G, r));
	reports.push_back(check_recurrence(down.a, RecurrenceKind::downshift, ker));
	reports.push_back(check_downshift_base(down, A, r));

	reports.push_back(check_main_for(fam));
	return reports;
}

} // namespace qschur
