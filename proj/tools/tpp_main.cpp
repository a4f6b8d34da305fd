// Command-line front end for the triple-product-property toolkit.
//
// Subcommands: check, classify, inject, bounds, search, matmul, space,
// group-info. All results go to stdout as single-line JSON; search emits one
// JSON line per triple followed by a summary line, with its wall time on
// stderr so stdout stays byte-identical across runs.
//
// Exit codes: 0 success, 2 bad input (parse errors, malformed files,
// non-group tables), 3 refused by a size guard (group order cap, search
// guard) — pass --force or raise TPP_ORDER_CAP where applicable.

#include <chrono>
#include <cstdlib>
#include <iostream>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "tpp/algebra.hpp"
#include "tpp/analysis.hpp"
#include "tpp/bounds.hpp"
#include "tpp/errors.hpp"
#include "tpp/group.hpp"
#include "tpp/io.hpp"
#include "tpp/search.hpp"
#include "tpp/triple.hpp"

namespace {

int order_cap_from_env() {
    const char* raw = std::getenv("TPP_ORDER_CAP");
    if (!raw) return tpp::Group::kDefaultOrderCap;
    char* end = nullptr;
    const long v = std::strtol(raw, &end, 10);
    if (end == raw || *end != '\0' || v < 1)
        throw tpp::input_error("TPP_ORDER_CAP must be a positive integer, got \"" +
                               std::string(raw) + "\"");
    return static_cast<int>(std::min<long>(v, tpp::Group::kHardOrderCap));
}

// Shared options for the subcommands that take a (group, S, T, U) input,
// either inline or via a triple file.
struct TripleArgs {
    std::string group;
    std::vector<int> s, t, u;
    std::string triple_file;

    void attach(CLI::App* cmd) {
        cmd->add_option("--group", group, "group descriptor, e.g. cyc:6 or prod:(cyc:2,cyc:3)");
        cmd->add_option("--s", s, "elements of S (ids)")->delimiter(',');
        cmd->add_option("--t", t, "elements of T (ids)")->delimiter(',');
        cmd->add_option("--u", u, "elements of U (ids)")->delimiter(',');
        cmd->add_option("--triple", triple_file,
                        "JSON triple file {\"group\",\"S\",\"T\",\"U\"} instead of the flags");
    }

    std::pair<tpp::Group, tpp::TppTriple> resolve(int order_cap) const {
        std::string spec = group;
        std::vector<int> sv = s, tv = t, uv = u;
        if (!triple_file.empty()) {
            if (!group.empty() || !s.empty() || !t.empty() || !u.empty())
                throw tpp::input_error(
                    "pass either --triple or --group with --s/--t/--u, not both");
            const tpp::TripleFile f = tpp::load_triple_file(triple_file);
            spec = f.group_spec;
            sv = f.s;
            tv = f.t;
            uv = f.u;
        } else if (spec.empty()) {
            throw tpp::input_error("missing --group (or a --triple file)");
        } else if (sv.empty() || tv.empty() || uv.empty()) {
            throw tpp::input_error("all of --s, --t, --u must be given and nonempty");
        }
        tpp::Group g = tpp::build_group(spec, order_cap);
        tpp::TppTriple t3{tpp::Subset(std::move(sv)), tpp::Subset(std::move(tv)),
                          tpp::Subset(std::move(uv))};
        t3.validate(g);
        return {std::move(g), std::move(t3)};
    }
};

void print_json(const nlohmann::json& j) { std::cout << j.dump() << "\n"; }

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"triple product property toolkit for finite groups"};
    app.require_subcommand(1);

    TripleArgs check_args, classify_args, inject_args, matmul_args;

    auto* cmd_check = app.add_subcommand(
        "check", "decide the triple product property for S, T, U in a group");
    check_args.attach(cmd_check);

    auto* cmd_classify =
        app.add_subcommand("classify", "report the overlap structure of S, T, U");
    classify_args.attach(cmd_classify);

    auto* cmd_inject = app.add_subcommand(
        "inject", "injectivity and image sizes of the three index maps");
    inject_args.attach(cmd_inject);

    auto* cmd_bounds =
        app.add_subcommand("bounds", "size bounds for triples in a group of order n");
    long long bounds_n = 0;
    long long bounds_m = 0, bounds_p = 0, bounds_q = 0;
    bool bounds_maximal = false;
    cmd_bounds->add_option("--n", bounds_n, "group order")->required();
    auto* opt_m = cmd_bounds->add_option("--m", bounds_m, "size of S");
    auto* opt_p = cmd_bounds->add_option("--p", bounds_p, "size of T");
    auto* opt_q = cmd_bounds->add_option("--q", bounds_q, "size of U");
    cmd_bounds->add_flag("--maximal", bounds_maximal,
                         "also apply the lower bounds, which only constrain maximal triples");

    auto* cmd_search = app.add_subcommand(
        "search", "enumerate triples with the property, or find one of maximal mpq");
    std::string search_group, search_mode = "enumerate";
    int search_min_size = 1, search_workers = 1;
    std::uint64_t search_max_results = 0;
    bool search_force = false;
    bool no_prune_disj = false, no_prune_inj = false, no_prune_mult = false;
    cmd_search->add_option("--group", search_group, "group descriptor")->required();
    cmd_search->add_option("--mode", search_mode, "enumerate (default) or maximal")
        ->check(CLI::IsMember({"enumerate", "maximal"}));
    cmd_search->add_option("--min-size", search_min_size,
                           "smallest allowed subset size (default 1)");
    auto* opt_max_results = cmd_search->add_option(
        "--max-results", search_max_results, "stop the enumeration after this many triples");
    cmd_search->add_option("--workers", search_workers,
                           "worker threads (results stay in deterministic order)");
    cmd_search->add_flag("--force", search_force, "search past the order guard");
    cmd_search->add_flag("--no-prune-disjointness", no_prune_disj,
                         "disable the pairwise-overlap prune");
    cmd_search->add_flag("--no-prune-injectivity", no_prune_inj,
                         "disable the index-map-collision prune");
    cmd_search->add_flag("--no-prune-mult-upper", no_prune_mult,
                         "disable the size-ceiling prune");

    auto* cmd_matmul = app.add_subcommand(
        "matmul", "multiply two rational matrices through the group algebra");
    matmul_args.attach(cmd_matmul);
    std::string matmul_a, matmul_b;
    cmd_matmul->add_option("--a", matmul_a, "left matrix file (m x p)")->required();
    cmd_matmul->add_option("--b", matmul_b, "right matrix file (p x q)")->required();

    auto* cmd_space = app.add_subcommand(
        "space", "count candidate subset triples (sizes >= 2) for a group of order n");
    long long space_n = 0;
    cmd_space->add_option("--n", space_n, "group order")->required();

    auto* cmd_info = app.add_subcommand("group-info", "build a group and describe it");
    std::string info_group;
    cmd_info->add_option("--group", info_group, "group descriptor")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        const int cap = order_cap_from_env();

        if (cmd_check->parsed()) {
            auto [g, t] = check_args.resolve(cap);
            const bool naive = tpp::check_tpp_naive(g, t);
            const bool quot = tpp::check_tpp_quotient(g, t);
            print_json({{"tpp", naive}, {"naive", naive}, {"quotient", quot}});
        } else if (cmd_classify->parsed()) {
            auto [g, t] = classify_args.resolve(cap);
            nlohmann::json j = tpp::report_to_json(tpp::classify(g, t));
            j["n"] = g.order();
            j["m"] = t.m();
            j["p"] = t.p();
            j["q"] = t.q();
            j["minimal_disjointness"] = tpp::minimal_disjointness(t);
            print_json(j);
        } else if (cmd_inject->parsed()) {
            auto [g, t] = inject_args.resolve(cap);
            print_json(tpp::injectivity_to_json(tpp::epsilon_injectivity(g, t)));
        } else if (cmd_bounds->parsed()) {
            nlohmann::json j = tpp::bounds_to_json(tpp::bounds_for(bounds_n));
            const int given = static_cast<int>(opt_m->count() > 0) + (opt_p->count() > 0) +
                              (opt_q->count() > 0);
            if (given == 3) {
                const tpp::BoundCheck mult = tpp::check_multiplicative(
                    bounds_n, bounds_m, bounds_p, bounds_q, bounds_maximal);
                const tpp::BoundCheck add =
                    tpp::check_additive(bounds_n, bounds_m, bounds_p, bounds_q, bounds_maximal);
                j["multiplicative"] = {{"pass", mult.pass}, {"violated", mult.violated}};
                j["additive"] = {{"pass", add.pass}, {"violated", add.violated}};
            } else if (given != 0) {
                throw tpp::input_error("pass all of --m, --p, --q or none of them");
            }
            print_json(j);
        } else if (cmd_search->parsed()) {
            tpp::SearchConfig cfg;
            cfg.min_size = search_min_size;
            cfg.workers = search_workers;
            cfg.force = search_force;
            cfg.prune_disjointness = !no_prune_disj;
            cfg.prune_injectivity = !no_prune_inj;
            cfg.prune_mult_upper = !no_prune_mult;
            if (opt_max_results->count() > 0) cfg.max_results = search_max_results;
            cfg.mode = search_mode == "maximal" ? tpp::SearchMode::maximal
                                                : tpp::SearchMode::enumerate;
            const tpp::Group g = tpp::build_group(search_group, cap);

            std::uint64_t count = 0;
            long long max_mpq = 0;
            std::map<std::string, std::uint64_t> cases;
            const auto started = std::chrono::steady_clock::now();
            const auto tally = [&](const tpp::SearchResult& r) {
                print_json(tpp::search_result_to_json(r));
                ++count;
                max_mpq = std::max(max_mpq, r.mpq);
                ++cases[r.report.case_label];
            };
            if (cfg.mode == tpp::SearchMode::maximal) {
                if (const auto best = tpp::find_maximal(g, cfg)) tally(*best);
            } else {
                tpp::enumerate_tpp(g, cfg, tally);
            }
            const auto elapsed = std::chrono::steady_clock::now() - started;

            nlohmann::json summary = {{"summary", true},
                                      {"results", count},
                                      {"max_mpq", nlohmann::json()},
                                      {"cases", cases}};
            if (count > 0) summary["max_mpq"] = max_mpq;
            print_json(summary);
            std::cerr << "search wall time: "
                      << std::chrono::duration_cast<std::chrono::milliseconds>(elapsed).count()
                      << " ms\n";
        } else if (cmd_matmul->parsed()) {
            auto [g, t] = matmul_args.resolve(cap);
            const tpp::Matrix a = tpp::load_matrix_file(matmul_a);
            const tpp::Matrix b = tpp::load_matrix_file(matmul_b);
            const tpp::Matrix product = tpp::multiply_via_group(g, t, a, b);
            nlohmann::json j = {{"product", tpp::matrix_to_json(product)},
                                {"matches_direct", product == tpp::direct_matmul(a, b)}};
            print_json(j);
        } else if (cmd_space->parsed()) {
            print_json({{"n", space_n}, {"triples", tpp::search_space_count(space_n).str()}});
        } else if (cmd_info->parsed()) {
            const tpp::Group g = tpp::build_group(info_group, cap);
            nlohmann::json elems = nlohmann::json::array();
            for (int a = 0; a < g.order(); ++a)
                elems.push_back({{"id", a},
                                 {"name", g.element_name(a)},
                                 {"inverse", g.inv(a)}});
            print_json({{"spec", g.spec()},
                        {"order", g.order()},
                        {"abelian", g.is_abelian()},
                        {"identity", g.identity()},
                        {"elements", std::move(elems)}});
        }
        return 0;
    } catch (const tpp::guard_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const tpp::input_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
