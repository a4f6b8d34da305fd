#pragma once

#include <array>
#include <string>
#include <vector>

#include "tpp/group.hpp"
#include "tpp/triple.hpp"

namespace tpp {

/**
 * The triple product property for subsets S, T, U of a finite group:
 * whenever s' s^-1 t' t^-1 u' u^-1 = 1 with s,s' in S, t,t' in T, u,u' in U,
 * then s = s', t = t' and u = u'.
 *
 * check_tpp_naive walks all sextuples (the definition itself, O(m^2 p^2 q^2)
 * with early exit) and is the reference implementation. check_tpp_quotient
 * works on the right-quotient sets RQ(X) = { x' * x^-1 } instead: the
 * property holds iff q1 q2 q3 = 1 with qi in RQ(S), RQ(T), RQ(U) forces
 * q1 = q2 = q3 = 1. Both decide exactly the same predicate.
 */
bool check_tpp_naive(const Group& g, const TppTriple& t);
bool check_tpp_quotient(const Group& g, const TppTriple& t);

// RQ(X) = { x' * x^-1 : x, x' in X }, sorted, always contains the identity.
std::vector<int> right_quotient_set(const Group& g, const Subset& x);

// |image| of (x,y) -> x^-1 y over X x Y.
int epsilon_image_size(const Group& g, const Subset& x, const Subset& y);

// Injectivity of the three index maps eps_mp(s,t) = s^-1 t,
// eps_pq(t,u) = t^-1 u, eps_mq(s,u) = s^-1 u, plus their image sizes
// (the map is injective iff its image size equals the product of the
// subset sizes).
struct InjectivityReport {
    bool eps_mp = false, eps_pq = false, eps_mq = false;
    int im_mp = 0, im_pq = 0, im_mq = 0;

    bool all() const { return eps_mp && eps_pq && eps_mq; }
};
InjectivityReport epsilon_injectivity(const Group& g, const TppTriple& t);

// True when all pairwise intersections S&T, T&U, S&U have at most one
// element. Necessary for the triple product property.
bool minimal_disjointness(const TppTriple& t);

/**
 * Structural classification of how S, T, U overlap, for triples that
 * satisfy minimal disjointness. The label groups by the type number
 * w = m + p + q - |S u T u U|:
 *
 *   w=0  "i"    all three pairwise disjoint
 *   w=1  "ii"   only S&T share an element
 *        "iii"  only T&U share an element
 *        "iv"   only S&U share an element
 *   w=2  "v"    one element common to all three subsets
 *        "vi"   T&U empty, the other two pairs share
 *        "vii"  S&U empty, the other two pairs share
 *        "viii" S&T empty, the other two pairs share
 *   w=3  "ix"   three pairwise-distinct shared elements
 *
 * If some pairwise intersection has 2+ elements the label is
 * "violates-minimal-disjointness" (w is still reported).
 * r = |G| - |S u T u U| is the number of unused elements, so that
 * n = (m + p + q - w) + r always holds.
 */
struct DisjointnessReport {
    int a_st = 0, a_tu = 0, a_su = 0;  // pairwise intersection sizes
    int union_size = 0;
    int w = 0;
    int r = 0;
    std::string case_label;
};
DisjointnessReport classify(const Group& g, const TppTriple& t);

// The six arrangements of (S,T,U) in a fixed order:
// STU, SUT, TSU, TUS, UST, UTS.
std::array<TppTriple, 6> sym3_orbit(const TppTriple& t);

}  // namespace tpp
