#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "tpp/errors.hpp"

namespace tpp {

/**
 * Finite group stored as a full Cayley table over dense element ids.
 *
 * Conventions:
 *  - elements are the ids 0..order()-1 and the identity is always id 0
 *  - mul(a,b) is the table lookup for a*b, inv(a) the two-sided inverse
 *  - every constructed table is verified on the spot: closure, identity at
 *    id 0, two-sided inverses, and associativity. Associativity is decided
 *    with Light's test (check a*(g*c) == (a*g)*c for g in a generating set),
 *    which is exact and avoids the cubic triple scan.
 *
 * Descriptor grammar accepted by from_spec / build_group:
 *  - "cyc:n"        cyclic group of order n
 *  - "dih:k"        dihedral group with k rotations (order 2k);
 *                   id i + k*j encodes r^i s^j
 *  - "sym:k"        symmetric group on k points (order k!); ids rank the
 *                   permutations lexicographically by one-line notation,
 *                   and (a*b) acts as the composition "apply b, then a"
 *  - "prod:(x,y,..)" direct product of two or more descriptors; ids are
 *                   mixed-radix with the first factor most significant
 *  - "file:path"    JSON Cayley table of shape {"n": int, "table": [[..]]}
 *
 * Groups larger than the order cap are refused with guard_error before any
 * table is allocated (the table costs O(n^2) memory).
 */
class Group {
public:
    using elem = std::uint16_t;

    static constexpr int kDefaultOrderCap = 5040;
    // Absolute ceiling, independent of any cap override: keeps the table
    // under ~800MB and inside the elem storage type.
    static constexpr int kHardOrderCap = 20000;

    static Group from_spec(const std::string& spec, int order_cap = kDefaultOrderCap);
    static Group from_table(const std::vector<std::vector<int>>& table,
                            const std::string& spec = "file:<inline>",
                            int order_cap = kDefaultOrderCap);

    int order() const { return n_; }
    const std::string& spec() const { return spec_; }
    int identity() const { return 0; }
    bool is_abelian() const { return abelian_; }

    // Checked accessors; throw input_error on out-of-range ids.
    int mul(int a, int b) const;
    int inv(int a) const;

    // Unchecked fast paths for inner loops.
    int mul_u(int a, int b) const { return table_[static_cast<std::size_t>(a) * n_ + b]; }
    int inv_u(int a) const { return inverse_[a]; }

    // Human-readable element name ("g^2", "r*s", "[2,0,1]", "(g,e)", ...).
    const std::string& element_name(int a) const;

    bool operator==(const Group& o) const { return n_ == o.n_ && table_ == o.table_; }

private:
    Group() = default;

    int n_ = 0;
    std::string spec_;
    std::vector<elem> table_;     // row-major n*n
    std::vector<elem> inverse_;
    std::vector<std::string> names_;
    bool abelian_ = false;

    friend Group finish_group(int n, std::vector<elem> table,
                              std::vector<std::string> names, std::string spec);
};

// Result of checking the four group axioms on a raw table.
// On failure, `axiom` is one of "closure", "identity", "inverse",
// "associativity" and `witness` holds the offending ids.
struct AxiomReport {
    bool ok = true;
    std::string axiom;
    std::vector<int> witness;
    std::string detail;
};

// Checks closure, identity-at-0, two-sided inverses and associativity of a
// raw n x n table. Throws input_error if the table is not square; axiom
// violations are reported, not thrown.
AxiomReport verify_group_axioms(const std::vector<std::vector<int>>& table);

// Convenience alias for Group::from_spec.
Group build_group(const std::string& spec, int order_cap = Group::kDefaultOrderCap);

}  // namespace tpp
