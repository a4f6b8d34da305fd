#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "tpp/analysis.hpp"
#include "tpp/group.hpp"
#include "tpp/triple.hpp"

namespace tpp {

enum class SearchMode { enumerate, maximal };

/**
 * Exhaustive search over subset triples of a group.
 *
 * The search builds S, then T, then U depth-first as sorted id sequences
 * and checks the quotient form of the triple product property incrementally:
 * as soon as the quotients of the already-chosen elements admit a violation,
 * the whole branch is cut. A triple that survives to completion therefore
 * satisfies the property exactly; no separate final check is needed.
 *
 * Each equivalence class under permuting (S,T,U) is reported once, by its
 * canonical form (the lexicographically least arrangement); structurally
 * the search only ever visits arrangements with S <= T <= U.
 *
 * Optional prune filters (all on by default) cut branches earlier using
 * necessary conditions, so they never change the result set:
 *  - prune_disjointness: pairwise intersections must stay <= 1 element
 *  - prune_injectivity:  the index maps s^-1 t, t^-1 u, s^-1 u must stay
 *                        collision-free
 *  - prune_mult_upper:   the strict size ceiling (mpq)^2 < n^3 applies to
 *                        every triple of a group with n >= 2; in maximal
 *                        mode this flag additionally cuts branches whose
 *                        remaining capacity cannot beat the incumbent
 *
 * Orders above kSearchOrderGuard are refused with guard_error unless
 * cfg.force is set: the subset lattice grows as 2^n and enumeration output
 * can be enormous.
 *
 * Determinism: results are emitted in lexicographic order of (S,T,U) and
 * repeated runs produce identical streams. With workers > 1 the top-level
 * branches (partitioned by the first element of S) run concurrently, are
 * buffered, and are merged back into the same deterministic order.
 */
struct SearchConfig {
    int min_size = 1;
    std::optional<std::uint64_t> max_results;  // enumerate mode only
    SearchMode mode = SearchMode::enumerate;
    bool prune_disjointness = true;
    bool prune_injectivity = true;
    bool prune_mult_upper = true;
    int workers = 1;
    bool force = false;  // override the order guard
};

inline constexpr int kSearchOrderGuard = 12;

struct SearchResult {
    TppTriple triple;  // canonical arrangement
    long long mpq = 0;
    int sum = 0;  // m + p + q
    DisjointnessReport report;
    bool canonical = true;
};

// Lexicographically least arrangement of the three subsets.
TppTriple canonicalize(const TppTriple& t);

// Streams every canonical triple satisfying the property, sizes >= min_size.
void enumerate_tpp(const Group& g, const SearchConfig& cfg,
                   const std::function<void(const SearchResult&)>& emit);

// Convenience wrapper collecting the stream into a vector.
std::vector<SearchResult> enumerate_tpp_all(const Group& g, const SearchConfig& cfg);

// Best triple by mpq (ties broken by enumeration order, i.e. the first one
// found); nullopt when no triple meets min_size. The incumbent's mpq is
// shared across workers so hopeless branches are cut early.
std::optional<SearchResult> find_maximal(const Group& g, const SearchConfig& cfg);

}  // namespace tpp
