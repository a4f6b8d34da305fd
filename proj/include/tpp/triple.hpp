#pragma once

#include <algorithm>
#include <compare>
#include <vector>

#include "tpp/errors.hpp"
#include "tpp/group.hpp"

namespace tpp {

// Nonempty subset of group elements, kept as a strictly increasing id
// sequence. Comparison is lexicographic on that sequence.
class Subset {
public:
    explicit Subset(std::vector<int> ids) : ids_(std::move(ids)) {
        if (ids_.empty()) throw input_error("subset must be nonempty");
        std::sort(ids_.begin(), ids_.end());
        if (std::adjacent_find(ids_.begin(), ids_.end()) != ids_.end())
            throw input_error("subset contains a duplicate id");
        if (ids_.front() < 0) throw input_error("subset contains a negative id");
    }

    int size() const { return static_cast<int>(ids_.size()); }
    const std::vector<int>& ids() const { return ids_; }
    bool contains(int x) const { return std::binary_search(ids_.begin(), ids_.end(), x); }

    void validate(const Group& g) const {
        if (ids_.back() >= g.order())
            throw input_error("subset id " + std::to_string(ids_.back()) +
                              " out of range for group of order " + std::to_string(g.order()));
    }

    auto operator<=>(const Subset& o) const { return ids_ <=> o.ids_; }
    bool operator==(const Subset& o) const { return ids_ == o.ids_; }

private:
    std::vector<int> ids_;
};

// Ordered triple of subsets (S, T, U) of one group.
struct TppTriple {
    Subset S, T, U;

    int m() const { return S.size(); }
    int p() const { return T.size(); }
    int q() const { return U.size(); }

    void validate(const Group& g) const {
        S.validate(g);
        T.validate(g);
        U.validate(g);
    }

    bool operator==(const TppTriple& o) const { return S == o.S && T == o.T && U == o.U; }
};

inline int intersection_size(const Subset& a, const Subset& b) {
    int k = 0;
    auto i = a.ids().begin();
    auto j = b.ids().begin();
    while (i != a.ids().end() && j != b.ids().end()) {
        if (*i < *j) ++i;
        else if (*j < *i) ++j;
        else { ++k; ++i; ++j; }
    }
    return k;
}

}  // namespace tpp
