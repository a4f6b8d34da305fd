#include <cstdio>
#include <fstream>
#include <random>

#include "doctest.h"
#include "oracle.hpp"
#include "tpp/group.hpp"

using tpp::Group;

namespace {

std::vector<std::vector<int>> cyclic_table(int n) {
    std::vector<std::vector<int>> t(n, std::vector<int>(n));
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) t[a][b] = (a + b) % n;
    return t;
}

std::string write_temp_json(const std::string& name, const std::string& body) {
    const std::string path = "/tmp/" + name;
    std::ofstream out(path);
    out << body;
    return path;
}

}  // namespace

TEST_CASE("cyclic groups") {
    const Group g = tpp::build_group("cyc:6");
    CHECK(g.order() == 6);
    CHECK(g.identity() == 0);
    CHECK(g.is_abelian());
    CHECK(g.mul(2, 5) == 1);
    CHECK(g.inv(2) == 4);
    CHECK(g.inv(0) == 0);
    CHECK(g.element_name(0) == "e");
    CHECK(g.element_name(1) == "g");
    CHECK(g.element_name(4) == "g^4");
    CHECK(g.spec() == "cyc:6");

    const Group trivial = tpp::build_group("cyc:1");
    CHECK(trivial.order() == 1);
    CHECK(trivial.mul(0, 0) == 0);
}

TEST_CASE("dihedral groups") {
    const Group g = tpp::build_group("dih:3");
    CHECK(g.order() == 6);
    CHECK_FALSE(g.is_abelian());
    // ids: 0..2 rotations r^i, 3..5 reflections r^i s
    CHECK(g.mul(1, 2) == 0);   // r * r^2 = e
    CHECK(g.mul(1, 3) == 4);   // r * s = r s
    CHECK(g.mul(3, 1) == 5);   // s * r = r^-1 s = r^2 s
    CHECK(g.mul(3, 3) == 0);   // s^2 = e
    const std::vector<int> expected_inv = {0, 2, 1, 3, 4, 5};
    for (int a = 0; a < 6; ++a) CHECK(g.inv(a) == expected_inv[a]);
    CHECK(g.element_name(1) == "r");
    CHECK(g.element_name(3) == "s");
    CHECK(g.element_name(5) == "r^2*s");

    // dih:1 and dih:2 are the small abelian degenerate cases.
    CHECK(tpp::build_group("dih:1").order() == 2);
    CHECK(tpp::build_group("dih:2").is_abelian());
}

TEST_CASE("symmetric groups rank permutations lexicographically") {
    const Group g = tpp::build_group("sym:3");
    CHECK(g.order() == 6);
    CHECK_FALSE(g.is_abelian());
    CHECK(g.element_name(0) == "[0,1,2]");
    CHECK(g.element_name(1) == "[0,2,1]");
    CHECK(g.element_name(5) == "[2,1,0]");
    // rank 1 = (1 2) swap, rank 2 = (0 1) swap; composition applies the
    // right factor first.
    CHECK(g.mul(1, 2) == 4);
    CHECK(g.mul(2, 1) == 3);
    CHECK(g.mul(1, 1) == 0);

    const Group s4 = tpp::build_group("sym:4");
    CHECK(s4.order() == 24);
    // every element times its inverse is the identity, both ways
    for (int a = 0; a < 24; ++a) {
        CHECK(s4.mul(a, s4.inv(a)) == 0);
        CHECK(s4.mul(s4.inv(a), a) == 0);
    }
}

TEST_CASE("direct products use mixed-radix ids, first factor most significant") {
    const Group g = tpp::build_group("prod:(cyc:2,cyc:2,cyc:2)");
    CHECK(g.order() == 8);
    CHECK(g.is_abelian());
    // 4 = (1,0,0), 2 = (0,1,0), 1 = (0,0,1)
    CHECK(g.mul(4, 2) == 6);
    CHECK(g.mul(6, 1) == 7);
    CHECK(g.inv(5) == 5);
    CHECK(g.element_name(4) == "(g,e,e)");
    CHECK(g.element_name(7) == "(g,g,g)");

    const Group m = tpp::build_group("prod:(cyc:2,cyc:3)");
    CHECK(m.order() == 6);
    // (1,2) * (1,2) = (0,1) -> id 1: strides are (3,1)
    CHECK(m.mul(5, 5) == 1);
    CHECK(m.element_name(5) == "(g,g^2)");

    const Group nested = tpp::build_group("prod:(cyc:2,prod:(cyc:2,cyc:2))");
    CHECK(nested.order() == 8);
    CHECK(nested.element_name(7) == "(g,(g,g))");

    const Group spaced = tpp::build_group("prod:(cyc:2, cyc:3)");
    CHECK(spaced.order() == 6);
}

TEST_CASE("descriptor parse errors") {
    CHECK_THROWS_AS(tpp::build_group("bogus:3"), tpp::input_error);
    CHECK_THROWS_AS(tpp::build_group("cyc:"), tpp::input_error);
    CHECK_THROWS_AS(tpp::build_group("cyc:0"), tpp::input_error);
    CHECK_THROWS_AS(tpp::build_group("cyc:-4"), tpp::input_error);
    CHECK_THROWS_AS(tpp::build_group("cyc:3x"), tpp::input_error);
    CHECK_THROWS_AS(tpp::build_group("prod:(cyc:2)"), tpp::input_error);
    CHECK_THROWS_AS(tpp::build_group("prod:(cyc:2,cyc:3"), tpp::input_error);
    CHECK_THROWS_AS(tpp::build_group("prod:cyc:2,cyc:3"), tpp::input_error);
    CHECK_THROWS_AS(tpp::build_group(""), tpp::input_error);
    CHECK_THROWS_AS(tpp::build_group("file:"), tpp::input_error);
}

TEST_CASE("order caps refuse oversized groups") {
    CHECK_THROWS_AS(tpp::build_group("cyc:5041"), tpp::guard_error);
    CHECK_THROWS_AS(tpp::build_group("sym:8"), tpp::guard_error);
    CHECK_THROWS_AS(tpp::build_group("cyc:10", 9), tpp::guard_error);
    CHECK(tpp::build_group("cyc:10", 10).order() == 10);
    // the hard ceiling wins over any larger cap
    CHECK_THROWS_AS(tpp::build_group("cyc:20001", 100000), tpp::guard_error);
    CHECK_THROWS_AS(tpp::build_group("cyc:2", 0), tpp::input_error);
    // sym:7 is exactly the default cap
    CHECK(tpp::build_group("sym:7").order() == 5040);
}

TEST_CASE("cayley tables from file") {
    const std::string good = write_temp_json(
        "tpp_group_good.json", R"({"n": 3, "table": [[0,1,2],[1,2,0],[2,0,1]]})");
    const Group g = tpp::build_group("file:" + good);
    CHECK(g.order() == 3);
    CHECK(g.mul(1, 1) == 2);
    CHECK(g.is_abelian());

    const std::string bad_assoc = write_temp_json(
        "tpp_group_bad.json", R"({"n": 3, "table": [[0,1,2],[1,1,0],[2,0,1]]})");
    CHECK_THROWS_AS(tpp::build_group("file:" + bad_assoc), tpp::input_error);

    const std::string bad_json = write_temp_json("tpp_group_badjson.json", "{not json");
    CHECK_THROWS_AS(tpp::build_group("file:" + bad_json), tpp::input_error);

    const std::string bad_shape = write_temp_json(
        "tpp_group_badshape.json", R"({"n": 3, "table": [[0,1,2],[1,2,0]]})");
    CHECK_THROWS_AS(tpp::build_group("file:" + bad_shape), tpp::input_error);

    CHECK_THROWS_AS(tpp::build_group("file:/nonexistent/nowhere.json"), tpp::input_error);

    const Group t = Group::from_table(cyclic_table(4), "my-table");
    CHECK(t.order() == 4);
    CHECK(t.spec() == "my-table");
}

TEST_CASE("axiom verification pinpoints the broken axiom") {
    auto t = cyclic_table(3);
    CHECK(tpp::verify_group_axioms(t).ok);

    SUBCASE("closure") {
        t[1][1] = 7;
        const auto rep = tpp::verify_group_axioms(t);
        CHECK_FALSE(rep.ok);
        CHECK(rep.axiom == "closure");
    }
    SUBCASE("identity") {
        t[0][1] = 2;
        t[0][2] = 1;
        const auto rep = tpp::verify_group_axioms(t);
        CHECK_FALSE(rep.ok);
        CHECK(rep.axiom == "identity");
    }
    SUBCASE("inverse") {
        const std::vector<std::vector<int>> no_inv = {{0, 1}, {1, 1}};
        const auto rep = tpp::verify_group_axioms(no_inv);
        CHECK_FALSE(rep.ok);
        CHECK(rep.axiom == "inverse");
        CHECK(rep.witness == std::vector<int>{1});
    }
    SUBCASE("associativity, with a genuine witness") {
        t[1][1] = 1;  // keeps identity row/col and inverses intact
        const auto rep = tpp::verify_group_axioms(t);
        CHECK_FALSE(rep.ok);
        CHECK(rep.axiom == "associativity");
        REQUIRE(rep.witness.size() == 3);
        const int a = rep.witness[0], b = rep.witness[1], c = rep.witness[2];
        CHECK(t[t[a][b]][c] != t[a][t[b][c]]);
    }
    SUBCASE("non-square tables are rejected outright") {
        t[2].push_back(0);
        CHECK_THROWS_AS(tpp::verify_group_axioms(t), tpp::input_error);
        CHECK_THROWS_AS(tpp::verify_group_axioms({}), tpp::input_error);
    }
}

TEST_CASE("generating-set associativity test agrees with the cubic scan") {
    // Random corruptions of real tables: the fast verifier and the
    // definition-following one must agree on whether the table is a group
    // (and, on failure, on which axiom class they report).
    std::mt19937 rng(987654);
    for (int trial = 0; trial < 60; ++trial) {
        const int n = 4 + static_cast<int>(rng() % 3);
        auto t = cyclic_table(n);
        const int corruptions = static_cast<int>(rng() % 3);
        for (int k = 0; k < corruptions; ++k) {
            const int a = 1 + static_cast<int>(rng() % (n - 1));
            const int b = 1 + static_cast<int>(rng() % (n - 1));
            t[a][b] = static_cast<int>(rng() % n);
        }
        const auto fast = tpp::verify_group_axioms(t);
        const auto slow = testoracle::axioms_by_definition(t);
        CHECK(fast.ok == slow.ok);
        if (!fast.ok) CHECK(fast.axiom == slow.axiom);
    }
}

TEST_CASE("checked accessors reject out-of-range ids") {
    const Group g = tpp::build_group("cyc:4");
    CHECK_THROWS_AS(g.mul(0, 4), tpp::input_error);
    CHECK_THROWS_AS(g.mul(-1, 0), tpp::input_error);
    CHECK_THROWS_AS(g.inv(4), tpp::input_error);
    CHECK_THROWS_AS(g.element_name(-1), tpp::input_error);
}
