#pragma once

#include <string>

#include <boost/multiprecision/cpp_int.hpp>

#include "tpp/errors.hpp"

namespace tpp {

using bigint = boost::multiprecision::cpp_int;

// Smallest c >= 1 with c^3 >= n.
long long icbrt_ceil(long long n);

// Number of candidate subset triples for a group of order n, counting the
// 2^n - (n+1) subsets with at least two elements in each slot:
// [2^n - (n+1)]^3. Grows past 64 bits at n = 64, hence the bigint.
bigint search_space_count(long long n);

// Size bounds for a group of order n. The multiplicative upper bound is the
// strict ceiling mpq < n^(3/2); it is kept in exact integer form as the
// predicate mpq^2 < n^3, so the report carries n^3 rather than a rounded
// root. Additive bounds: 3*ceil(n^(1/3)) <= m+p+q <= n+3. Individual sizes
// for proper triples: 2 <= m,p,q <= n-1.
struct BoundsReport {
    long long n = 0;
    long long mult_lower = 0;   // n <= mpq (maximal triples)
    bigint n_cubed;             // mpq passes the upper bound iff mpq^2 < n_cubed
    long long add_lower = 0;    // 3 * icbrt_ceil(n)
    long long add_upper = 0;    // n + 3
    long long indiv_lower = 2;
    long long indiv_upper = 0;  // n - 1
    bigint search_space;
};
BoundsReport bounds_for(long long n);

// pass/fail verdict with the violated side named ("lower" or "upper").
struct BoundCheck {
    bool pass = true;
    std::string violated;
};

// Multiplicative test for a triple of sizes (m,p,q) in a group of order n.
// The strict upper bound mpq^2 < n^3 applies to every triple; the lower
// bound n <= mpq only constrains maximal triples, so it is checked only
// when `maximal` is set.
BoundCheck check_multiplicative(long long n, long long m, long long p, long long q,
                                bool maximal);

// Additive test: m+p+q <= n+3 always; 3*ceil(n^(1/3)) <= m+p+q only for
// maximal triples.
BoundCheck check_additive(long long n, long long m, long long p, long long q,
                          bool maximal);

}  // namespace tpp
