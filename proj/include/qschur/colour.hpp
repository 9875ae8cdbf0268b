#pragma once

#include "qschur/series.hpp"

#include <string>
#include <vector>

namespace qschur {

/* A product colour over r primary colours, identified by its nonzero
 * bitmask: bit k-1 set means the primary colour u_k appears. The natural
 * colour order is integer order on masks. */
struct Colour {
	int mask = 1;
	int r = 1;

	auto operator<=>(const Colour&) const = default;
};

Colour make_colour(int mask, int r);

/* does primary colour u_k appear in c? */
bool uses_primary(Colour c, int k);

int weight(Colour c);      /* number of primary colours in c */
int min_primary(Colour c); /* 1-based index of the smallest primary */
int max_primary(Colour c); /* 1-based index of the largest primary */

/* 1 exactly when every primary of a lies strictly below every primary of
 * b, i.e. max_primary(a) < min_primary(b). */
int strictly_below(Colour a, Colour b);

/* A permutation of {1..r} given by its image list (1-based). */
struct Permutation {
	std::vector<int> image;

	static Permutation identity(int r);
	static Permutation reversal(int r);
	int r() const { return int(image.size()); }
	int operator()(int i) const { return image[i - 1]; }

	bool operator==(const Permutation&) const = default;
};

Permutation make_permutation(std::vector<int> image);
Permutation compose(const Permutation& a, const Permutation& b); /* a after b */
std::vector<Permutation> all_permutations(int r);

/* relabel primaries: bit k-1 of c moves to bit sigma(k)-1 */
Colour apply(const Permutation& sigma, Colour c);

std::string to_string(Colour c); /* "u1*u3" */

/* The colour marker monomial u_{i1}...u_{iw} of c. */
Mono colour_mono(Colour c);

} // namespace qschur
