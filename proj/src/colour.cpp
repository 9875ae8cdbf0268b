#include "qschur/colour.hpp"

#include <algorithm>
#include <bit>

namespace qschur {

Colour make_colour(int mask, int r)
{
	if (r < 1 || r > kMaxColours)
		throw UsageError("colour count must be between 1 and 5");
	if (mask < 1 || mask >= (1 << r))
		throw UsageError("colour mask must be a nonzero subset of the primaries");
	return Colour{mask, r};
}

bool uses_primary(Colour c, int k)
{
	if (k < 1 || k > c.r)
		throw UsageError("primary colour index out of range");
	return (c.mask >> (k - 1)) & 1;
}

int weight(Colour c)
{
	return std::popcount(unsigned(c.mask));
}

int min_primary(Colour c)
{
	return std::countr_zero(unsigned(c.mask)) + 1;
}

int max_primary(Colour c)
{
	return std::bit_width(unsigned(c.mask));
}

int strictly_below(Colour a, Colour b)
{
	return max_primary(a) < min_primary(b) ? 1 : 0;
}

Permutation Permutation::identity(int r)
{
	Permutation p;
	for (int i = 1; i <= r; ++i) p.image.push_back(i);
	return p;
}

Permutation Permutation::reversal(int r)
{
	Permutation p;
	for (int i = 1; i <= r; ++i) p.image.push_back(r + 1 - i);
	return p;
}

Permutation make_permutation(std::vector<int> image)
{
	int r = int(image.size());
	if (r < 1 || r > kMaxColours)
		throw UsageError("permutation size must be between 1 and 5");
	std::vector<bool> seen(r, false);
	for (int v : image) {
		if (v < 1 || v > r || seen[v - 1])
			throw UsageError("permutation image list is not a bijection");
		seen[v - 1] = true;
	}
	return Permutation{std::move(image)};
}

Permutation compose(const Permutation& a, const Permutation& b)
{
	if (a.r() != b.r())
		throw UsageError("permutation size mismatch");
	Permutation out;
	for (int i = 1; i <= b.r(); ++i) out.image.push_back(a(b(i)));
	return out;
}

std::vector<Permutation> all_permutations(int r)
{
	std::vector<int> image;
	for (int i = 1; i <= r; ++i) image.push_back(i);
	std::vector<Permutation> out;
	do {
		out.push_back(Permutation{image});
	} while (std::next_permutation(image.begin(), image.end()));
	return out;
}

Colour apply(const Permutation& sigma, Colour c)
{
	if (sigma.r() != c.r)
		throw UsageError("permutation size does not match the colour count");
	int mask = 0;
	for (int k = 1; k <= c.r; ++k) {
		if ((c.mask >> (k - 1)) & 1) mask |= 1 << (sigma(k) - 1);
	}
	return Colour{mask, c.r};
}

std::string to_string(Colour c)
{
	std::string out;
	for (int k = 1; k <= c.r; ++k) {
		if (!((c.mask >> (k - 1)) & 1)) continue;
		if (!out.empty()) out += '*';
		out += 'u';
		out += char('0' + k);
	}
	return out;
}

Mono colour_mono(Colour c)
{
	Mono m;
	for (int k = 1; k <= c.r; ++k) {
		if ((c.mask >> (k - 1)) & 1) m = m * Mono::u(k, 1);
	}
	return m;
}

} // namespace qschur
