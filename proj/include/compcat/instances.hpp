#ifndef COMPCAT_INSTANCES_HPP
#define COMPCAT_INSTANCES_HPP

#include <set>
#include <string>

#include "compcat/fincat.hpp"

namespace compcat {

// Skeleton of the category of sets with at most two elements: objects
// "0","1","2", eleven maps. Morphism names: i0n: 0 -> n, k0/k1: 1 -> 2 pick
// an element, bang: 2 -> 1, tau swaps, c0/c1: 2 -> 2 are constant.
FinCategory finset2();

// The eight injections of finset2: identities, i01, i02, k0, k1, tau.
std::set<MorId> finset2_injections();

// finset2 with the one-element set doubled: objects "0","1","1p","2",
// eighteen maps. u: 1 -> 1p and v: 1p -> 1 are the connecting isomorphisms;
// primed names are the 1p-sided copies (k0p, k1p, bangp, i01p).
FinCategory finset2prime();

// All fourteen injections of finset2prime.
std::set<MorId> finset2prime_injections();

// The injections minus k1 (1 -> 2) and k0p (1p -> 2): still stable under
// pullback because the doubled object supplies a parallel displayed copy,
// but not replete.
std::set<MorId> finset2prime_displays();

// Poset {bot < x < top, bot < y < top} with all binary meets and a top:
// carrier of a clan where every map is displayed.
FinCategory diamond_poset();

}  // namespace compcat

#endif
