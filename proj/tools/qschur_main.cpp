/* qschur -- exact verifier for coloured-overpartition identities.
 *
 * verify weighted   congruence-side vs difference-condition tables
 * verify dilated    the modulus-N instances over a super-increasing alphabet
 * verify qdiff      the staged q-difference-equation machinery
 * expand            truncated product expansions
 * enumerate         raw tables and object listings
 *
 * Exit codes: 0 all checks pass, 1 a verified mismatch, 2 bad configuration.
 * QSCHUR_THREADS caps enumeration worker threads (default 1).
 */

#include "qschur/alphabet.hpp"
#include "qschur/colour.hpp"
#include "qschur/qdiff.hpp"
#include "qschur/report.hpp"
#include "qschur/series.hpp"
#include "qschur/weighted_words.hpp"

#include <CLI11.hpp>

#include <cmath>
#include <iostream>
#include <sstream>

namespace {

using namespace qschur;

struct Options {
	int r = 2;
	int N = 3;
	std::vector<int> a{1, 2};
	std::string sigma; /* empty = all permutations for verify commands */
	int qmax = 12;
	int umax = 3;
	int dmax = 3;
	int xmax = 6;
	bool json = false;
	bool list = false;
	bool corrupt = false;
	bool invert = false;
	int weight_filter = -1;
	double max_cost = 5e9;
	std::string family = "weighted-e";
	std::string monomial = "q";
	int sign = -1;
};

std::vector<int> parse_int_list(const std::string& text)
{
	std::vector<int> out;
	std::stringstream ss(text);
	std::string item;
	while (std::getline(ss, item, ',')) {
		try {
			size_t pos = 0;
			out.push_back(std::stoi(item, &pos));
			if (pos != item.size()) throw std::invalid_argument(item);
		} catch (const std::exception&) {
			throw UsageError("expected a comma-separated integer list, got '" + text + "'");
		}
	}
	if (out.empty()) throw UsageError("empty integer list");
	return out;
}

std::vector<Permutation> sigmas_for(const Options& opt, int r)
{
	if (opt.sigma.empty()) return all_permutations(r);
	if (opt.sigma == "id") return {Permutation::identity(r)};
	return {make_permutation(parse_int_list(opt.sigma))};
}

Mono parse_monomial(const std::string& spec)
{
	Mono out;
	std::stringstream ss(spec);
	std::string token;
	while (std::getline(ss, token, '*')) {
		std::string base = token;
		int exponent = 1;
		if (auto caret = token.find('^'); caret != std::string::npos) {
			base = token.substr(0, caret);
			try {
				size_t pos = 0;
				exponent = std::stoi(token.substr(caret + 1), &pos);
				if (pos != token.size() - caret - 1 || exponent < 0)
					throw std::invalid_argument(token);
			} catch (const std::exception&) {
				throw UsageError("bad exponent in monomial token '" + token + "'");
			}
		}
		if (base == "q")
			out = out * Mono::q(exponent);
		else if (base == "d")
			out = out * Mono::d(exponent);
		else if (base == "x")
			out = out * Mono::x(exponent);
		else if (base.size() == 2 && base[0] == 'u' && base[1] >= '1' && base[1] <= '5')
			out = out * Mono::u(base[1] - '0', exponent);
		else
			throw UsageError("bad monomial token '" + token +
			                 "' (expected q, u1..u5, d or x, optionally ^k)");
	}
	return out;
}

void enforce_cost_ceiling(double projected, double ceiling)
{
	if (projected > ceiling) {
		std::ostringstream os;
		os << "projected enumeration cost " << projected << " exceeds the ceiling "
		   << ceiling << "; raise --max-cost to override";
		throw UsageError(os.str());
	}
}

double weighted_cost(const Options& opt, int r, std::size_t sigma_count)
{
	double keys = std::pow(opt.umax + 1, r) * (opt.dmax + 1) * (opt.qmax + 1);
	double domain = double(opt.qmax + 1) * ((1 << r) - 1) * 2;
	return keys * domain * double(sigma_count ? sigma_count : 1);
}

int finish(const std::vector<VerificationReport>& reports, bool json)
{
	bool all_pass = true;
	if (json) {
		std::cout << "[";
		for (std::size_t i = 0; i < reports.size(); ++i)
			std::cout << (i ? ",\n" : "\n") << to_json_text(reports[i]);
		std::cout << "\n]\n";
	}
	for (const auto& rep : reports) {
		if (!json) std::cout << render_text(rep) << "\n";
		all_pass = all_pass && rep.pass;
	}
	if (!json)
		std::cout << (all_pass ? "all checks passed" : "MISMATCH FOUND") << " ("
		          << reports.size() << " checks)\n";
	return all_pass ? 0 : 1;
}

int run_verify_weighted(const Options& opt)
{
	if (opt.r < 1 || opt.r > kMaxColours)
		throw UsageError("--r must lie in 1..5");
	TruncationBox bounds(opt.r, opt.qmax, opt.umax, opt.dmax, 0);
	auto sigmas = sigmas_for(opt, opt.r);
	enforce_cost_ceiling(weighted_cost(opt, opt.r, sigmas.size()), opt.max_cost);

	CountTable d_table = enumerate_D(opt.r, bounds);
	std::vector<VerificationReport> reports;
	bool first = true;
	for (const auto& sigma : sigmas) {
		CountTable e_table = enumerate_E(opt.r, sigma, bounds);
		if (opt.corrupt && first)
			e_table.add(Mono::q(std::min(1, opt.qmax)) * Mono::u(1, 1), 1);
		first = false;

		VerificationReport rep;
		rep.check = "congruence-vs-difference-tables";
		rep.param("r", std::to_string(opt.r));
		std::ostringstream os;
		for (int i = 1; i <= sigma.r(); ++i) os << (i > 1 ? "," : "") << sigma(i);
		rep.param("sigma", os.str());
		rep.box = bounds.str();
		rep.sound_region = bounds.str();
		if (auto bad = first_mismatch(d_table, e_table)) {
			rep.fail(render_stats(*bad, opt.r, false),
			         std::to_string(d_table.at(*bad)), std::to_string(e_table.at(*bad)));
		}
		reports.push_back(rep);
	}
	return finish(reports, opt.json);
}

int run_verify_dilated(const Options& opt)
{
	Alphabet alph(opt.N, opt.a);
	const int r = alph.r();
	TruncationBox bounds(r, opt.qmax, opt.umax, opt.dmax, 0);
	auto sigmas = sigmas_for(opt, r);
	enforce_cost_ceiling(weighted_cost(opt, r, 2 * sigmas.size()), opt.max_cost);

	std::vector<VerificationReport> reports;
	reports.push_back(check_lemma_comparison(alph));

	bool first = true;
	for (const auto& sigma : sigmas) {
		std::ostringstream os;
		for (int i = 1; i <= sigma.r(); ++i) os << (i > 1 ? "," : "") << sigma(i);
		for (Side side : {Side::plus, Side::minus}) {
			DilatedTables tables = enumerate_dilated(alph, side, sigma, bounds);
			if (opt.corrupt && first && side == Side::plus)
				tables.sequence.add(Mono::q(std::min(alph.a(1), opt.qmax)) * Mono::u(1, 1), 1);
			first = false;

			VerificationReport rep;
			rep.check = side == Side::plus ? "dilated-tables-plus" : "dilated-tables-minus";
			rep.param("N", std::to_string(opt.N));
			rep.param("sigma", os.str());
			rep.box = bounds.str();
			rep.sound_region = bounds.str();
			if (opt.N == 3 && r == 2)
				rep.notes.push_back("N=3 residue-2 rows of the summary table collapse "
				                    "under congruence reduction; entries come from the "
				                    "general minimal-difference formula");
			if (auto bad = first_mismatch(tables.multiset, tables.sequence)) {
				rep.fail(render_stats(*bad, r, false),
				         std::to_string(tables.multiset.at(*bad)),
				         std::to_string(tables.sequence.at(*bad)));
			}
			reports.push_back(rep);
		}
	}

	if (r == 2 && alph.a(1) == 1 && alph.a(2) == 2) {
		/* cross-check the 3x3 minimal-difference tables */
		VerificationReport rep;
		rep.check = "minimal-difference-matrices";
		rep.param("N", std::to_string(opt.N));
		rep.box = "9 entries x 2 sides x chi in {0,1}";
		rep.sound_region = rep.box;
		const int N = opt.N;
		Permutation swap_sigma = make_permutation({2, 1});
		Permutation id = Permutation::identity(2);
		for (int chi = 0; chi <= 1 && rep.pass; ++chi) {
			int plus_expect[3][3] = {
			    {N * chi, N * chi - 1, N * (chi + 1) - 2},
			    {N * (chi + 1) + 1, N * chi, N * (chi + 1) - 1},
			    {N * chi + 2, N * chi + 1, N * (chi + 1)}};
			int minus_expect[3][3] = {
			    {N * chi, N * (chi + 1) + 1, N * chi + 2},
			    {N * chi - 1, N * chi, N * chi + 1},
			    {N * (chi + 1) - 2, N * (chi + 1) - 1, N * (chi + 1)}};
			for (int x = 1; x <= 3 && rep.pass; ++x) {
				for (int y = 1; y <= 3 && rep.pass; ++y) {
					int got = minimal_difference(alph, swap_sigma, Side::plus, x, y, chi);
					if (got != plus_expect[x - 1][y - 1])
						rep.fail("plus (" + std::to_string(x) + "," + std::to_string(y) +
						             ") chi=" + std::to_string(chi),
						         std::to_string(got),
						         std::to_string(plus_expect[x - 1][y - 1]));
					got = minimal_difference(alph, id, Side::minus, -x, -y, chi);
					if (rep.pass && got != minus_expect[x - 1][y - 1])
						rep.fail("minus (-" + std::to_string(x) + ",-" + std::to_string(y) +
						             ") chi=" + std::to_string(chi),
						         std::to_string(got),
						         std::to_string(minus_expect[x - 1][y - 1]));
				}
			}
		}
		reports.push_back(rep);
	}
	return finish(reports, opt.json);
}

int run_verify_qdiff(const Options& opt)
{
	if (opt.r < 1 || opt.r > kMaxColours)
		throw UsageError("--r must lie in 1..5");
	if (opt.xmax < opt.r * opt.umax)
		throw UsageError("--xmax must be at least r*umax = " +
		                 std::to_string(opt.r * opt.umax) +
		                 " so the x = 1 evaluation is exact");
	TruncationBox box(opt.r, opt.qmax, opt.umax, opt.dmax, opt.xmax);
	enforce_cost_ceiling(weighted_cost(opt, opt.r, 1) * (opt.xmax + 1), opt.max_cost);
	return finish(run_qdiff_pipeline(opt.r, box, opt.corrupt), opt.json);
}

int run_expand(const Options& opt, const std::string& what)
{
	if (what == "overpartitions") {
		TruncationBox box(1, opt.qmax, 0, 0, 0);
		MultiSeries s = pochhammer_inf(box, Mono::q(1), -1) *
		                invert_unit(pochhammer_inf(box, Mono::q(1), +1));
		for (int n = 0; n <= opt.qmax; ++n)
			std::cout << n << " " << s.coeff(Mono::q(n)).get_str() << "\n";
		return 0;
	}
	if (what == "schur") {
		/* distinct parts in the residue classes 1 and 2 mod 3 */
		TruncationBox box(1, opt.qmax, 0, 0, 0);
		MultiSeries s = MultiSeries::one(box);
		for (int n = 1; n <= opt.qmax; ++n) {
			if (n % 3 == 0) continue;
			MultiSeries factor = MultiSeries::one(box);
			factor.add_term(Mono::q(n), 1);
			s = s * factor;
		}
		for (int n = 0; n <= opt.qmax; ++n)
			std::cout << n << " " << s.coeff(Mono::q(n)).get_str() << "\n";
		return 0;
	}
	if (what == "product") {
		TruncationBox box(opt.r, opt.qmax, opt.umax, opt.dmax, 0);
		std::cout << product_side(opt.r, box).canonical_text();
		return 0;
	}
	if (what == "poch") {
		TruncationBox box(opt.r, opt.qmax, opt.umax, opt.dmax, opt.xmax);
		Mono m = parse_monomial(opt.monomial);
		if (opt.sign != 1 && opt.sign != -1)
			throw UsageError("--sign must be +1 or -1");
		MultiSeries s = pochhammer_inf(box, m, opt.sign);
		if (opt.invert) s = invert_unit(s);
		std::cout << s.canonical_text();
		return 0;
	}
	throw UsageError("unknown expansion '" + what + "'");
}

int run_matrix(const Options& opt)
{
	Alphabet alph(opt.N, opt.a);
	const int r = alph.r();
	Permutation sigma = opt.sigma.empty() || opt.sigma == "id"
	                        ? Permutation::identity(r)
	                        : make_permutation(parse_int_list(opt.sigma));
	Side side = opt.family == "minus" ? Side::minus : Side::plus;
	if (opt.family != "plus" && opt.family != "minus")
		throw UsageError("--side must be plus or minus");

	/* the realized residues, in subset-sum order */
	std::vector<int> sums;
	for (int mask = 1; mask < (1 << r); ++mask) sums.push_back(alph.subset_sum(mask));
	std::sort(sums.begin(), sums.end());

	auto label = [&](int s) {
		std::ostringstream os;
		if (side == Side::minus) os << '-';
		os << s << " mod " << opt.N;
		return os.str();
	};

	for (int chi = 0; chi <= 1; ++chi) {
		std::cout << "minimal differences, lower part "
		          << (chi ? "overlined" : "not overlined") << " (rows: upper residue, "
		          << "columns: lower residue)\n";
		std::cout << "          ";
		for (int y : sums) std::cout << label(y) << "  ";
		std::cout << "\n";
		for (int x : sums) {
			std::cout << label(x) << " :";
			for (int y : sums) {
				int sx = side == Side::plus ? x : -x;
				int sy = side == Side::plus ? y : -y;
				std::cout << "  " << minimal_difference(alph, sigma, side, sx, sy, chi);
			}
			std::cout << "\n";
		}
	}
	return 0;
}

int run_enumerate(const Options& opt)
{
	auto want = [&](long long total) {
		return opt.weight_filter < 0 || total == opt.weight_filter;
	};
	auto weighted_total = [](const std::vector<Part>& parts) {
		long long t = 0;
		for (const auto& p : parts) t += p.value;
		return t;
	};
	auto dilated_total = [](const std::vector<DilatedPart>& parts) {
		long long t = 0;
		for (const auto& p : parts) t += p.value;
		return t;
	};

	if (opt.family == "weighted-e" || opt.family == "weighted-d") {
		TruncationBox bounds(opt.r, opt.qmax, opt.umax, opt.dmax, 0);
		enforce_cost_ceiling(weighted_cost(opt, opt.r, 1), opt.max_cost);
		if (opt.list) {
			auto emit = [&](const std::vector<Part>& parts, Mono) {
				if (want(weighted_total(parts))) std::cout << render_parts(parts) << "\n";
			};
			if (opt.family == "weighted-e") {
				Permutation sigma = opt.sigma.empty() || opt.sigma == "id"
				                        ? Permutation::identity(opt.r)
				                        : make_permutation(parse_int_list(opt.sigma));
				for_each_weighted_sequence(opt.r, sigma, bounds, emit);
			} else {
				for_each_multiset_object(opt.r, bounds, emit);
			}
			return 0;
		}
		Permutation sigma = opt.sigma.empty() || opt.sigma == "id"
		                        ? Permutation::identity(opt.r)
		                        : make_permutation(parse_int_list(opt.sigma));
		CountTable t = opt.family == "weighted-e" ? enumerate_E(opt.r, sigma, bounds)
		                                          : enumerate_D(opt.r, bounds);
		for (const auto& [k, c] : t.counts)
			std::cout << render_stats(Mono::from_packed(k), opt.r, false) << " " << c << "\n";
		return 0;
	}

	Alphabet alph(opt.N, opt.a);
	TruncationBox bounds(alph.r(), opt.qmax, opt.umax, opt.dmax, 0);
	Side side = (opt.family == "dilated-e" || opt.family == "dilated-d") ? Side::plus
	                                                                     : Side::minus;
	bool sequence_side = opt.family == "dilated-e" || opt.family == "dilated-g";
	if (opt.family != "dilated-e" && opt.family != "dilated-d" &&
	    opt.family != "dilated-f" && opt.family != "dilated-g")
		throw UsageError("unknown family '" + opt.family + "'");
	Permutation sigma = opt.sigma.empty() || opt.sigma == "id"
	                        ? Permutation::identity(alph.r())
	                        : make_permutation(parse_int_list(opt.sigma));
	if (opt.list) {
		auto emit = [&](const std::vector<DilatedPart>& parts) {
			if (want(dilated_total(parts))) std::cout << render_dilated(parts) << "\n";
		};
		if (sequence_side)
			for_each_dilated_sequence(alph, side, sigma, bounds, emit);
		else
			for_each_dilated_multiset(alph, side, bounds, emit);
		return 0;
	}
	DilatedTables tables = enumerate_dilated(alph, side, sigma, bounds);
	const CountTable& t = sequence_side ? tables.sequence : tables.multiset;
	for (const auto& [k, c] : t.counts)
		std::cout << render_stats(Mono::from_packed(k), alph.r(), false) << " " << c << "\n";
	return 0;
}

} // namespace

int main(int argc, char** argv)
{
	Options opt;
	std::string expand_what = "overpartitions";
	std::string a_list = "1,2";
	int exit_code = 0;

	CLI::App app{"exact verifier for coloured-overpartition identities"};
	app.require_subcommand(1);
	app.footer("QSCHUR_THREADS caps enumeration worker threads (default 1).");

	auto add_bounds = [&](CLI::App* cmd, bool with_x) {
		cmd->add_option("--qmax", opt.qmax, "weight bound (exponent of q)");
		cmd->add_option("--umax", opt.umax, "per-colour part-count bound");
		cmd->add_option("--dmax", opt.dmax, "non-overlined part bound");
		if (with_x) cmd->add_option("--xmax", opt.xmax, "part-count marker bound");
		cmd->add_option("--max-cost", opt.max_cost, "enumeration cost ceiling");
	};

	CLI::App* verify = app.add_subcommand("verify", "run identity checks");
	verify->require_subcommand(1);

	CLI::App* vw = verify->add_subcommand("weighted", "colour-level tables");
	vw->add_option("--r", opt.r, "number of primary colours");
	vw->add_option("--sigma", opt.sigma, "one permutation (image list or 'id'); default all");
	add_bounds(vw, false);
	vw->add_flag("--json", opt.json, "machine-readable reports");
	vw->add_flag("--corrupt", opt.corrupt, "perturb one count first (checker self-test)");
	vw->callback([&]() { exit_code = run_verify_weighted(opt); });

	CLI::App* vd = verify->add_subcommand("dilated", "modulus-N tables and matrices");
	vd->add_option("--N", opt.N, "modulus");
	vd->add_option("--a", a_list, "alphabet, e.g. 1,2");
	vd->add_option("--sigma", opt.sigma, "one permutation (image list or 'id'); default all");
	add_bounds(vd, false);
	vd->add_flag("--json", opt.json, "machine-readable reports");
	vd->add_flag("--corrupt", opt.corrupt, "perturb one count first (checker self-test)");
	vd->callback([&]() {
		opt.a = parse_int_list(a_list);
		exit_code = run_verify_dilated(opt);
	});

	CLI::App* vq = verify->add_subcommand("qdiff", "staged q-difference machinery");
	vq->add_option("--r", opt.r, "number of primary colours");
	add_bounds(vq, true);
	vq->add_flag("--json", opt.json, "machine-readable reports");
	vq->add_flag("--corrupt", opt.corrupt, "perturb one coefficient first (checker self-test)");
	vq->callback([&]() { exit_code = run_verify_qdiff(opt); });

	CLI::App* expand = app.add_subcommand("expand", "print truncated expansions");
	expand->add_option("what", expand_what,
	                   "overpartitions | schur | product | poch")
	    ->required();
	expand->add_option("--r", opt.r, "number of primary colours");
	expand->add_option("--monomial", opt.monomial, "poch monomial, e.g. u1*q^2");
	expand->add_option("--sign", opt.sign, "poch sign (+1 or -1)");
	expand->add_flag("--invert", opt.invert, "print the reciprocal series");
	add_bounds(expand, true);
	expand->callback([&]() { exit_code = run_expand(opt, expand_what); });

	CLI::App* matrix = app.add_subcommand("matrix", "print a minimal-difference table");
	matrix->add_option("--N", opt.N, "modulus");
	matrix->add_option("--a", a_list, "alphabet, e.g. 1,2");
	matrix->add_option("--side", opt.family, "plus | minus")->default_val("plus");
	matrix->add_option("--sigma", opt.sigma, "permutation image list or 'id'");
	matrix->callback([&]() {
		opt.a = parse_int_list(a_list);
		exit_code = run_matrix(opt);
	});

	CLI::App* enumerate = app.add_subcommand("enumerate", "tables or object listings");
	enumerate->add_option("--family", opt.family,
	                      "weighted-e | weighted-d | dilated-e | dilated-d | dilated-f | dilated-g");
	enumerate->add_option("--r", opt.r, "number of primary colours (weighted families)");
	enumerate->add_option("--N", opt.N, "modulus (dilated families)");
	enumerate->add_option("--a", a_list, "alphabet (dilated families)");
	enumerate->add_option("--sigma", opt.sigma, "permutation image list or 'id'");
	enumerate->add_option("--n", opt.weight_filter, "only objects of this exact weight");
	enumerate->add_flag("--list", opt.list, "stream objects instead of counts");
	add_bounds(enumerate, false);
	enumerate->callback([&]() {
		opt.a = parse_int_list(a_list);
		exit_code = run_enumerate(opt);
	});

	try {
		app.parse(argc, argv);
	} catch (const CLI::CallForHelp& e) {
		return app.exit(e);
	} catch (const CLI::ParseError& e) {
		app.exit(e);
		return 2;
	} catch (const UsageError& e) {
		std::cerr << "error: " << e.what() << "\n";
		return 2;
	} catch (const DomainError& e) {
		std::cerr << "error: " << e.what() << "\n";
		return 2;
	}
	return exit_code;
}
