#include "tpp/bounds.hpp"

namespace tpp {

namespace {

void require_positive(long long v, const char* what) {
    if (v < 1) throw input_error(std::string(what) + " must be at least 1");
}

constexpr long long kBoundsOrderLimit = 1'000'000;

}  // namespace

long long icbrt_ceil(long long n) {
    require_positive(n, "n");
    long long lo = 1, hi = 1;
    while (static_cast<unsigned __int128>(hi) * hi * hi < static_cast<unsigned __int128>(n))
        hi *= 2;
    while (lo < hi) {
        const long long mid = lo + (hi - lo) / 2;
        if (static_cast<unsigned __int128>(mid) * mid * mid >=
            static_cast<unsigned __int128>(n))
            hi = mid;
        else
            lo = mid + 1;
    }
    return lo;
}

bigint search_space_count(long long n) {
    require_positive(n, "n");
    if (n > kBoundsOrderLimit)
        throw guard_error("search-space count capped at order " +
                          std::to_string(kBoundsOrderLimit) + "; got " + std::to_string(n));
    bigint subsets = (bigint(1) << static_cast<unsigned>(n)) - (n + 1);
    if (subsets < 0) subsets = 0;  // n = 1 has no subsets of size >= 2
    return subsets * subsets * subsets;
}

BoundsReport bounds_for(long long n) {
    require_positive(n, "n");
    if (n > kBoundsOrderLimit)
        throw guard_error("bounds report capped at order " + std::to_string(kBoundsOrderLimit) +
                          "; got " + std::to_string(n));
    BoundsReport r;
    r.n = n;
    r.mult_lower = n;
    r.n_cubed = bigint(n) * n * n;
    r.add_lower = 3 * icbrt_ceil(n);
    r.add_upper = n + 3;
    r.indiv_upper = n - 1;
    r.search_space = search_space_count(n);
    return r;
}

BoundCheck check_multiplicative(long long n, long long m, long long p, long long q,
                                bool maximal) {
    require_positive(n, "n");
    require_positive(m, "m");
    require_positive(p, "p");
    require_positive(q, "q");
    const bigint mpq = bigint(m) * p * q;
    if (maximal && mpq < n) return {false, "lower"};
    if (mpq * mpq >= bigint(n) * n * n) return {false, "upper"};
    return {};
}

BoundCheck check_additive(long long n, long long m, long long p, long long q, bool maximal) {
    require_positive(n, "n");
    require_positive(m, "m");
    require_positive(p, "p");
    require_positive(q, "q");
    const long long sum = m + p + q;
    if (maximal && sum < 3 * icbrt_ceil(n)) return {false, "lower"};
    if (sum > n + 3) return {false, "upper"};
    return {};
}

}  // namespace tpp
