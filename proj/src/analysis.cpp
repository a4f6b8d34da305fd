#include "tpp/analysis.hpp"

#include <algorithm>

namespace tpp {

bool check_tpp_naive(const Group& g, const TppTriple& t) {
    t.validate(g);
    const auto& S = t.S.ids();
    const auto& T = t.T.ids();
    const auto& U = t.U.ids();
    for (int s : S)
        for (int s2 : S) {
            const int v1 = g.mul_u(s2, g.inv_u(s));
            for (int u : U)
                for (int u2 : U) {
                    const int v3 = g.mul_u(u2, g.inv_u(u));
                    for (int tt : T)
                        for (int t2 : T) {
                            const int v2 = g.mul_u(t2, g.inv_u(tt));
                            if (g.mul_u(g.mul_u(v1, v2), v3) == 0 &&
                                !(s == s2 && tt == t2 && u == u2))
                                return false;
                        }
                }
        }
    return true;
}

std::vector<int> right_quotient_set(const Group& g, const Subset& x) {
    x.validate(g);
    std::vector<std::uint8_t> in(g.order(), 0);
    std::vector<int> out;
    for (int a : x.ids())
        for (int b : x.ids()) {
            const int q = g.mul_u(a, g.inv_u(b));
            if (!in[q]) {
                in[q] = 1;
                out.push_back(q);
            }
        }
    std::sort(out.begin(), out.end());
    return out;
}

bool check_tpp_quotient(const Group& g, const TppTriple& t) {
    t.validate(g);
    const std::vector<int> rqs = right_quotient_set(g, t.S);
    const std::vector<int> rqt = right_quotient_set(g, t.T);
    std::vector<std::uint8_t> rqu(g.order(), 0);
    for (int a : t.U.ids())
        for (int b : t.U.ids()) rqu[g.mul_u(a, g.inv_u(b))] = 1;

    // q1 q2 q3 = 1 pins q3 = (q1 q2)^-1; a violation is such a q3 lying in
    // RQ(U) while (q1, q2, q3) != (1, 1, 1). When q1 = q2 = 1 the pinned q3
    // is 1 itself, which is never a violation.
    for (int q1 : rqs)
        for (int q2 : rqt) {
            if (q1 == 0 && q2 == 0) continue;
            const int need = g.inv_u(g.mul_u(q1, q2));
            if (rqu[need]) return false;
        }
    return true;
}

int epsilon_image_size(const Group& g, const Subset& x, const Subset& y) {
    x.validate(g);
    y.validate(g);
    std::vector<std::uint8_t> in(g.order(), 0);
    int count = 0;
    for (int a : x.ids())
        for (int b : y.ids()) {
            const int v = g.mul_u(g.inv_u(a), b);
            if (!in[v]) {
                in[v] = 1;
                ++count;
            }
        }
    return count;
}

InjectivityReport epsilon_injectivity(const Group& g, const TppTriple& t) {
    InjectivityReport r;
    r.im_mp = epsilon_image_size(g, t.S, t.T);
    r.im_pq = epsilon_image_size(g, t.T, t.U);
    r.im_mq = epsilon_image_size(g, t.S, t.U);
    r.eps_mp = r.im_mp == t.m() * t.p();
    r.eps_pq = r.im_pq == t.p() * t.q();
    r.eps_mq = r.im_mq == t.m() * t.q();
    return r;
}

bool minimal_disjointness(const TppTriple& t) {
    return intersection_size(t.S, t.T) <= 1 && intersection_size(t.T, t.U) <= 1 &&
           intersection_size(t.S, t.U) <= 1;
}

namespace {

// The single shared element of two subsets known to intersect in exactly one.
int shared_element(const Subset& a, const Subset& b) {
    for (int x : a.ids())
        if (b.contains(x)) return x;
    return -1;
}

}  // namespace

DisjointnessReport classify(const Group& g, const TppTriple& t) {
    t.validate(g);
    DisjointnessReport rep;
    rep.a_st = intersection_size(t.S, t.T);
    rep.a_tu = intersection_size(t.T, t.U);
    rep.a_su = intersection_size(t.S, t.U);

    std::vector<std::uint8_t> in(g.order(), 0);
    for (const Subset* s : {&t.S, &t.T, &t.U})
        for (int x : s->ids()) in[x] = 1;
    rep.union_size = static_cast<int>(std::count(in.begin(), in.end(), std::uint8_t{1}));
    rep.w = t.m() + t.p() + t.q() - rep.union_size;
    rep.r = g.order() - rep.union_size;

    if (rep.a_st > 1 || rep.a_tu > 1 || rep.a_su > 1) {
        rep.case_label = "violates-minimal-disjointness";
        return rep;
    }
    const int pairs = rep.a_st + rep.a_tu + rep.a_su;
    switch (pairs) {
        case 0:
            rep.case_label = "i";
            break;
        case 1:
            rep.case_label = rep.a_st ? "ii" : (rep.a_tu ? "iii" : "iv");
            break;
        case 2:
            rep.case_label = rep.a_tu == 0 ? "vi" : (rep.a_su == 0 ? "vii" : "viii");
            break;
        default: {
            // With all three pairs sharing exactly one element, the three
            // shared elements are either one and the same or pairwise
            // distinct; a partial coincidence would force a full one.
            const int x = shared_element(t.S, t.T);
            const int y = shared_element(t.T, t.U);
            const int z = shared_element(t.S, t.U);
            rep.case_label = (x == y && y == z) ? "v" : "ix";
            break;
        }
    }
    return rep;
}

std::array<TppTriple, 6> sym3_orbit(const TppTriple& t) {
    return {TppTriple{t.S, t.T, t.U}, TppTriple{t.S, t.U, t.T}, TppTriple{t.T, t.S, t.U},
            TppTriple{t.T, t.U, t.S}, TppTriple{t.U, t.S, t.T}, TppTriple{t.U, t.T, t.S}};
}

}  // namespace tpp
