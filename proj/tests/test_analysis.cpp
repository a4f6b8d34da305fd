#include <random>

#include "doctest.h"
#include "oracle.hpp"
#include "tpp/analysis.hpp"

using tpp::Group;
using tpp::Subset;
using tpp::TppTriple;

namespace {

TppTriple make(std::vector<int> s, std::vector<int> t, std::vector<int> u) {
    return TppTriple{Subset(std::move(s)), Subset(std::move(t)), Subset(std::move(u))};
}

}  // namespace

TEST_CASE("subset invariants") {
    CHECK(Subset({3, 1, 2}).ids() == std::vector<int>{1, 2, 3});
    CHECK(Subset({5}).contains(5));
    CHECK_FALSE(Subset({5}).contains(4));
    CHECK_THROWS_AS(Subset({}), tpp::input_error);
    CHECK_THROWS_AS(Subset({1, 1}), tpp::input_error);
    CHECK_THROWS_AS(Subset({-1}), tpp::input_error);
    CHECK(Subset({0, 1}) < Subset({1}));  // lexicographic on sequences
    CHECK(Subset({0}) < Subset({0, 1}));

    const Group g = tpp::build_group("cyc:4");
    CHECK_THROWS_AS(Subset({4}).validate(g), tpp::input_error);
    CHECK_THROWS_AS(make({0}, {0}, {9}).validate(g), tpp::input_error);
}

TEST_CASE("both checkers on pinned examples") {
    const Group g = tpp::build_group("cyc:6");

    // Three pairwise-sharing two-element subsets: not a property triple.
    const TppTriple bad = make({0, 1}, {1, 2}, {2, 0});
    CHECK_FALSE(tpp::check_tpp_naive(g, bad));
    CHECK_FALSE(tpp::check_tpp_quotient(g, bad));

    const TppTriple good = make({0}, {0, 2}, {0, 3});
    CHECK(tpp::check_tpp_naive(g, good));
    CHECK(tpp::check_tpp_quotient(g, good));

    // All index maps injective, yet the property still fails: injectivity
    // alone is not sufficient.
    const TppTriple subtle = make({0, 1}, {0, 2}, {0, 3});
    CHECK(tpp::epsilon_injectivity(g, subtle).all());
    CHECK_FALSE(tpp::check_tpp_naive(g, subtle));
    CHECK_FALSE(tpp::check_tpp_quotient(g, subtle));

    // Singletons always qualify.
    CHECK(tpp::check_tpp_naive(g, make({3}, {1}, {4})));

    // The whole group in one slot, singletons elsewhere, also qualifies.
    CHECK(tpp::check_tpp_quotient(g, make({2}, {5}, {0, 1, 2, 3, 4, 5})));
    CHECK(tpp::check_tpp_naive(g, make({2}, {5}, {0, 1, 2, 3, 4, 5})));
}

TEST_CASE("checkers agree everywhere (sizes <= 2 in cyc:5 and dih:2)") {
    for (const char* spec : {"cyc:5", "dih:2"}) {
        const Group g = tpp::build_group(spec);
        const auto subs = testoracle::subsets(g.order(), 1, 2);
        for (const auto& s : subs)
            for (const auto& t : subs)
                for (const auto& u : subs) {
                    const TppTriple trip = make(s, t, u);
                    const bool naive = tpp::check_tpp_naive(g, trip);
                    CHECK(naive == tpp::check_tpp_quotient(g, trip));
                    CHECK(naive == testoracle::tpp_by_definition(g, s, t, u));
                }
    }
}

TEST_CASE("right-quotient sets") {
    const Group g = tpp::build_group("cyc:6");
    CHECK(tpp::right_quotient_set(g, Subset({0, 1})) == std::vector<int>{0, 1, 5});
    CHECK(tpp::right_quotient_set(g, Subset({2})) == std::vector<int>{0});
    CHECK(tpp::right_quotient_set(g, Subset({0, 2, 4})) == std::vector<int>{0, 2, 4});

    const Group d = tpp::build_group("dih:3");
    // {e, s}: quotients e, s (s is an involution)
    CHECK(tpp::right_quotient_set(d, Subset({0, 3})) == std::vector<int>{0, 3});
}

TEST_CASE("epsilon image sizes and injectivity") {
    const Group g = tpp::build_group("cyc:6");
    const TppTriple t = make({0, 1}, {1, 2}, {2, 0});
    const auto rep = tpp::epsilon_injectivity(g, t);
    CHECK(rep.im_mp == 3);
    CHECK(rep.im_pq == 4);
    CHECK(rep.im_mq == 4);
    CHECK_FALSE(rep.eps_mp);
    CHECK(rep.eps_pq);
    CHECK(rep.eps_mq);
    CHECK_FALSE(rep.all());

    // In cyc:4, S = T = {0,2} collapses the image to the subgroup {0,2}.
    const Group c4 = tpp::build_group("cyc:4");
    CHECK(tpp::epsilon_image_size(c4, Subset({0, 2}), Subset({0, 2})) == 2);
}

TEST_CASE("overlap classification covers all nine cases") {
    const Group g = tpp::build_group("cyc:6");
    auto label = [&](const TppTriple& t) { return tpp::classify(g, t).case_label; };

    CHECK(label(make({0}, {1}, {2})) == "i");
    CHECK(label(make({0}, {0}, {1})) == "ii");
    CHECK(label(make({1}, {0}, {0})) == "iii");
    CHECK(label(make({0}, {1}, {0})) == "iv");
    CHECK(label(make({0}, {0}, {0})) == "v");
    CHECK(label(make({0, 1}, {0}, {1})) == "vi");
    CHECK(label(make({0}, {0, 1}, {1})) == "vii");
    CHECK(label(make({1}, {0}, {0, 1})) == "viii");
    CHECK(label(make({0, 1}, {1, 2}, {2, 0})) == "ix");
    CHECK(label(make({0, 1}, {0, 1}, {2})) == "violates-minimal-disjointness");

    const auto ix = tpp::classify(g, make({0, 1}, {1, 2}, {2, 0}));
    CHECK(ix.w == 3);
    CHECK(ix.r == 3);
    CHECK(ix.union_size == 3);
    CHECK(ix.a_st == 1);
    CHECK(ix.a_tu == 1);
    CHECK(ix.a_su == 1);

    const auto v = tpp::classify(g, make({2}, {2}, {2}));
    CHECK(v.case_label == "v");
    CHECK(v.w == 2);
    CHECK(v.r == 5);

    const auto viol = tpp::classify(g, make({0, 1}, {0, 1}, {3}));
    CHECK(viol.case_label == "violates-minimal-disjointness");
    CHECK(viol.w == 2);  // w is still reported
    CHECK(viol.r == 3);

    CHECK(tpp::minimal_disjointness(make({0, 1}, {1, 2}, {2, 0})));
    CHECK_FALSE(tpp::minimal_disjointness(make({0, 1}, {0, 1}, {3})));
}

TEST_CASE("partition identity n = (m+p+q-w) + r for random triples") {
    std::mt19937 rng(424242);
    for (const char* spec : {"cyc:7", "dih:3", "prod:(cyc:2,cyc:2)"}) {
        const Group g = tpp::build_group(spec);
        const int n = g.order();
        for (int trial = 0; trial < 200; ++trial) {
            auto pick = [&]() {
                std::vector<int> ids;
                for (int x = 0; x < n; ++x)
                    if (rng() % 2) ids.push_back(x);
                if (ids.empty()) ids.push_back(static_cast<int>(rng() % n));
                return Subset(ids);
            };
            const TppTriple t{pick(), pick(), pick()};
            const auto rep = tpp::classify(g, t);
            CHECK(n == (t.m() + t.p() + t.q() - rep.w) + rep.r);
            CHECK(rep.union_size == t.m() + t.p() + t.q() - rep.w);
        }
    }
}

TEST_CASE("verdict and w are invariant over the six arrangements") {
    const Group g = tpp::build_group("cyc:6");
    const auto orbit = tpp::sym3_orbit(make({0}, {0, 2}, {0, 3}));
    // fixed arrangement order: STU, SUT, TSU, TUS, UST, UTS
    CHECK(orbit[0].S.ids() == std::vector<int>{0});
    CHECK(orbit[1].T.ids() == std::vector<int>{0, 3});
    CHECK(orbit[5].S.ids() == std::vector<int>{0, 3});
    for (const auto& arr : orbit) {
        CHECK(tpp::check_tpp_quotient(g, arr));
        CHECK(tpp::classify(g, arr).w == 2);  // common element 0 in all three
    }
    const auto bad_orbit = tpp::sym3_orbit(make({0, 1}, {1, 2}, {2, 0}));
    for (const auto& arr : bad_orbit) {
        CHECK_FALSE(tpp::check_tpp_quotient(g, arr));
        CHECK(tpp::classify(g, arr).w == 3);
    }
}
