#include "tpp/group.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <utility>

#include "json.hpp"

namespace tpp {

namespace {

using elem = Group::elem;

int table_at(const std::vector<elem>& t, int n, int a, int b) {
    return t[static_cast<std::size_t>(a) * n + b];
}

// Axiom check on a flat table whose entries are already in range.
// Associativity uses Light's test: pick a generating set greedily by closure,
// then a*(g*c) == (a*g)*c for all a, c and generators g decides the axiom
// for the whole table.
AxiomReport verify_flat(const std::vector<elem>& t, int n, std::vector<elem>* inverse_out) {
    auto at = [&](int a, int b) { return table_at(t, n, a, b); };

    for (int a = 0; a < n; ++a) {
        if (at(0, a) != a)
            return {false, "identity", {0, a},
                    "0 * " + std::to_string(a) + " != " + std::to_string(a)};
        if (at(a, 0) != a)
            return {false, "identity", {a, 0},
                    std::to_string(a) + " * 0 != " + std::to_string(a)};
    }

    std::vector<elem> inverse(n);
    for (int a = 0; a < n; ++a) {
        int found = -1;
        for (int b = 0; b < n; ++b) {
            if (at(a, b) == 0 && at(b, a) == 0) {
                found = b;
                break;
            }
        }
        if (found < 0)
            return {false, "inverse", {a},
                    "element " + std::to_string(a) + " has no two-sided inverse"};
        inverse[a] = static_cast<elem>(found);
    }

    // Greedy generating set: walk the elements, adding any not yet generated,
    // and close under the operation as we go.
    std::vector<int> gens;
    std::vector<std::uint8_t> seen(n, 0);
    std::vector<int> members;
    members.reserve(n);
    std::size_t processed = 0;
    auto absorb = [&](int v) {
        if (!seen[v]) {
            seen[v] = 1;
            members.push_back(v);
        }
    };
    for (int x = 0; x < n; ++x) {
        if (seen[x]) continue;
        gens.push_back(x);
        absorb(x);
        while (processed < members.size()) {
            int e = members[processed++];
            for (std::size_t i = 0; i < members.size(); ++i) {
                int f = members[i];
                absorb(at(e, f));
                absorb(at(f, e));
            }
        }
    }

    for (int gidx : gens) {
        for (int a = 0; a < n; ++a) {
            int ag = at(a, gidx);
            for (int c = 0; c < n; ++c) {
                if (at(ag, c) != at(a, at(gidx, c)))
                    return {false, "associativity", {a, gidx, c},
                            "(" + std::to_string(a) + " * " + std::to_string(gidx) + ") * " +
                                std::to_string(c) + " != " + std::to_string(a) + " * (" +
                                std::to_string(gidx) + " * " + std::to_string(c) + ")"};
            }
        }
    }

    if (inverse_out) *inverse_out = std::move(inverse);
    return {};
}

struct RawGroup {
    int n = 0;
    std::vector<elem> table;
    std::vector<std::string> names;
};

RawGroup make_cyclic(int n) {
    RawGroup g;
    g.n = n;
    g.table.resize(static_cast<std::size_t>(n) * n);
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            g.table[static_cast<std::size_t>(a) * n + b] = static_cast<elem>((a + b) % n);
    g.names.reserve(n);
    for (int a = 0; a < n; ++a)
        g.names.push_back(a == 0 ? "e" : (a == 1 ? "g" : "g^" + std::to_string(a)));
    return g;
}

// id = i + k*j encodes r^i s^j with r^k = s^2 = 1, s r = r^-1 s.
RawGroup make_dihedral(int k) {
    RawGroup g;
    g.n = 2 * k;
    g.table.resize(static_cast<std::size_t>(g.n) * g.n);
    for (int i1 = 0; i1 < k; ++i1)
        for (int j1 = 0; j1 < 2; ++j1)
            for (int i2 = 0; i2 < k; ++i2)
                for (int j2 = 0; j2 < 2; ++j2) {
                    int i = j1 == 0 ? (i1 + i2) % k : (i1 - i2 + k) % k;
                    int j = j1 ^ j2;
                    g.table[static_cast<std::size_t>(i1 + k * j1) * g.n + (i2 + k * j2)] =
                        static_cast<elem>(i + k * j);
                }
    g.names.reserve(g.n);
    for (int j = 0; j < 2; ++j)
        for (int i = 0; i < k; ++i) {
            std::string rot = i == 0 ? "" : (i == 1 ? "r" : "r^" + std::to_string(i));
            if (j == 0) g.names.push_back(rot.empty() ? "e" : rot);
            else g.names.push_back(rot.empty() ? "s" : rot + "*s");
        }
    return g;
}

// Permutations of 0..k-1, ranked lexicographically by one-line notation, so
// the identity ranks 0. (a*b)(x) = a(b(x)).
RawGroup make_symmetric(int k, int order) {
    std::vector<std::vector<int>> perms;
    perms.reserve(order);
    std::vector<int> p(k);
    for (int i = 0; i < k; ++i) p[i] = i;
    do {
        perms.push_back(p);
    } while (std::next_permutation(p.begin(), p.end()));

    // Perm -> rank lookup via base-8 keys (k <= 7 under the hard order cap).
    std::size_t keyspace = 1;
    for (int i = 0; i < k; ++i) keyspace *= 8;
    std::vector<int> rank_of(keyspace, -1);
    auto key_of = [&](const std::vector<int>& q) {
        std::size_t key = 0;
        for (int i = k - 1; i >= 0; --i) key = key * 8 + q[i];
        return key;
    };
    for (int r = 0; r < order; ++r) rank_of[key_of(perms[r])] = r;

    RawGroup g;
    g.n = order;
    g.table.resize(static_cast<std::size_t>(order) * order);
    std::vector<int> comp(k);
    for (int a = 0; a < order; ++a)
        for (int b = 0; b < order; ++b) {
            for (int x = 0; x < k; ++x) comp[x] = perms[a][perms[b][x]];
            g.table[static_cast<std::size_t>(a) * order + b] =
                static_cast<elem>(rank_of[key_of(comp)]);
        }
    g.names.reserve(order);
    for (int r = 0; r < order; ++r) {
        std::string s = "[";
        for (int i = 0; i < k; ++i) {
            if (i) s += ",";
            s += std::to_string(perms[r][i]);
        }
        s += "]";
        g.names.push_back(std::move(s));
    }
    return g;
}

// Mixed-radix ids, first factor most significant.
RawGroup make_product(const std::vector<RawGroup>& factors) {
    long long total = 1;
    for (const auto& f : factors) total *= f.n;
    const int n = static_cast<int>(total);
    const int nf = static_cast<int>(factors.size());

    std::vector<int> stride(nf, 1);
    for (int i = nf - 2; i >= 0; --i) stride[i] = stride[i + 1] * factors[i + 1].n;

    std::vector<std::vector<int>> digits(n, std::vector<int>(nf));
    for (int x = 0; x < n; ++x) {
        int rest = x;
        for (int i = 0; i < nf; ++i) {
            digits[x][i] = rest / stride[i];
            rest %= stride[i];
        }
    }

    RawGroup g;
    g.n = n;
    g.table.resize(static_cast<std::size_t>(n) * n);
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) {
            int id = 0;
            for (int i = 0; i < nf; ++i)
                id += table_at(factors[i].table, factors[i].n, digits[a][i], digits[b][i]) *
                      stride[i];
            g.table[static_cast<std::size_t>(a) * n + b] = static_cast<elem>(id);
        }
    g.names.reserve(n);
    for (int x = 0; x < n; ++x) {
        std::string s = "(";
        for (int i = 0; i < nf; ++i) {
            if (i) s += ",";
            s += factors[i].names[digits[x][i]];
        }
        s += ")";
        g.names.push_back(std::move(s));
    }
    return g;
}

// ---- descriptor parsing ----

struct SpecNode {
    enum Kind { Cyc, Dih, Sym, Prod, File } kind = Cyc;
    long long param = 0;
    std::string path;
    std::vector<SpecNode> kids;
};

long long parse_positive_int(const std::string& s, std::size_t& pos) {
    std::size_t start = pos;
    while (pos < s.size() && s[pos] >= '0' && s[pos] <= '9') ++pos;
    if (pos == start) throw input_error("expected a positive integer in group descriptor at \"" +
                                        s.substr(start) + "\"");
    long long v = 0;
    auto res = std::from_chars(s.data() + start, s.data() + pos, v);
    if (res.ec != std::errc() || v <= 0)
        throw input_error("bad integer in group descriptor: \"" + s.substr(start, pos - start) +
                          "\"");
    return v;
}

SpecNode parse_spec_node(const std::string& s, std::size_t& pos) {
    while (pos < s.size() && s[pos] == ' ') ++pos;
    auto starts_with = [&](const char* kw) {
        return s.compare(pos, std::char_traits<char>::length(kw), kw) == 0;
    };
    SpecNode node;
    if (starts_with("cyc:")) {
        pos += 4;
        node.kind = SpecNode::Cyc;
        node.param = parse_positive_int(s, pos);
    } else if (starts_with("dih:")) {
        pos += 4;
        node.kind = SpecNode::Dih;
        node.param = parse_positive_int(s, pos);
    } else if (starts_with("sym:")) {
        pos += 4;
        node.kind = SpecNode::Sym;
        node.param = parse_positive_int(s, pos);
    } else if (starts_with("prod:(")) {
        pos += 6;
        node.kind = SpecNode::Prod;
        for (;;) {
            node.kids.push_back(parse_spec_node(s, pos));
            while (pos < s.size() && s[pos] == ' ') ++pos;
            if (pos < s.size() && s[pos] == ',') {
                ++pos;
                continue;
            }
            if (pos < s.size() && s[pos] == ')') {
                ++pos;
                break;
            }
            throw input_error("expected ',' or ')' in product descriptor");
        }
        if (node.kids.size() < 2)
            throw input_error("product descriptor needs at least two factors");
    } else if (starts_with("file:")) {
        pos += 5;
        node.kind = SpecNode::File;
        node.path = s.substr(pos);
        pos = s.size();
        if (node.path.empty()) throw input_error("file descriptor is missing a path");
    } else {
        throw input_error("unknown group descriptor at \"" + s.substr(pos) +
                          "\" (expected cyc:, dih:, sym:, prod:(...), file:)");
    }
    return node;
}

constexpr long long kOrderOverflow = 1LL << 40;

long long order_of(const SpecNode& node) {
    switch (node.kind) {
        case SpecNode::Cyc: return node.param;
        case SpecNode::Dih: return 2 * node.param;
        case SpecNode::Sym: {
            long long f = 1;
            for (long long i = 2; i <= node.param; ++i) {
                f *= i;
                if (f > kOrderOverflow) return kOrderOverflow;
            }
            return f;
        }
        case SpecNode::Prod: {
            long long f = 1;
            for (const auto& kid : node.kids) {
                f *= order_of(kid);
                if (f > kOrderOverflow) return kOrderOverflow;
            }
            return f;
        }
        case SpecNode::File: break;
    }
    return 0;  // file orders are read from the file itself
}

std::vector<std::vector<int>> load_cayley_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw input_error("cannot open cayley file: " + path);
    nlohmann::json j;
    try {
        in >> j;
    } catch (const nlohmann::json::exception& e) {
        throw input_error("cannot parse cayley file " + path + ": " + e.what());
    }
    if (!j.is_object() || !j.contains("n") || !j.contains("table") ||
        !j["n"].is_number_integer() || !j["table"].is_array())
        throw input_error("cayley file " + path + " must hold {\"n\": int, \"table\": [[..]]}");
    long long n = j["n"].get<long long>();
    if (n < 1) throw input_error("cayley file order must be at least 1");
    std::vector<std::vector<int>> table;
    table.reserve(j["table"].size());
    for (const auto& row : j["table"]) {
        if (!row.is_array())
            throw input_error("cayley table rows must be arrays");
        std::vector<int> r;
        r.reserve(row.size());
        for (const auto& v : row) {
            if (!v.is_number_integer()) throw input_error("cayley table entries must be integers");
            r.push_back(v.get<int>());
        }
        table.push_back(std::move(r));
    }
    if (static_cast<long long>(table.size()) != n)
        throw input_error("cayley file declares n=" + std::to_string(n) + " but has " +
                          std::to_string(table.size()) + " rows");
    return table;
}

RawGroup build_node(const SpecNode& node, int order_cap);

RawGroup from_int_table(const std::vector<std::vector<int>>& table) {
    AxiomReport rep = verify_group_axioms(table);
    if (!rep.ok) throw input_error("table is not a group (" + rep.axiom + "): " + rep.detail);
    RawGroup g;
    g.n = static_cast<int>(table.size());
    g.table.resize(static_cast<std::size_t>(g.n) * g.n);
    for (int a = 0; a < g.n; ++a)
        for (int b = 0; b < g.n; ++b)
            g.table[static_cast<std::size_t>(a) * g.n + b] = static_cast<elem>(table[a][b]);
    g.names.reserve(g.n);
    for (int a = 0; a < g.n; ++a) g.names.push_back(a == 0 ? "e" : "x" + std::to_string(a));
    return g;
}

void check_cap(long long order, int order_cap, const std::string& what) {
    if (order > order_cap)
        throw guard_error("group " + what + " has order " + std::to_string(order) +
                          ", beyond the cap of " + std::to_string(order_cap) +
                          " (raise TPP_ORDER_CAP to override, hard ceiling " +
                          std::to_string(Group::kHardOrderCap) + ")");
}

RawGroup build_node(const SpecNode& node, int order_cap) {
    switch (node.kind) {
        case SpecNode::Cyc:
            check_cap(node.param, order_cap, "cyc:" + std::to_string(node.param));
            return make_cyclic(static_cast<int>(node.param));
        case SpecNode::Dih:
            check_cap(2 * node.param, order_cap, "dih:" + std::to_string(node.param));
            return make_dihedral(static_cast<int>(node.param));
        case SpecNode::Sym:
            check_cap(order_of(node), order_cap, "sym:" + std::to_string(node.param));
            return make_symmetric(static_cast<int>(node.param),
                                  static_cast<int>(order_of(node)));
        case SpecNode::Prod: {
            check_cap(order_of(node), order_cap, "product");
            std::vector<RawGroup> kids;
            kids.reserve(node.kids.size());
            for (const auto& k : node.kids) kids.push_back(build_node(k, order_cap));
            return make_product(kids);
        }
        case SpecNode::File: {
            auto table = load_cayley_file(node.path);
            check_cap(static_cast<long long>(table.size()), order_cap, "file:" + node.path);
            return from_int_table(table);
        }
    }
    throw input_error("unreachable descriptor kind");
}

}  // namespace

Group finish_group(int n, std::vector<elem> table, std::vector<std::string> names,
                   std::string spec) {
    std::vector<elem> inverse;
    AxiomReport rep = verify_flat(table, n, &inverse);
    if (!rep.ok)
        throw input_error("constructed table for " + spec + " is not a group (" + rep.axiom +
                          "): " + rep.detail);
    Group g;
    g.n_ = n;
    g.spec_ = std::move(spec);
    g.table_ = std::move(table);
    g.inverse_ = std::move(inverse);
    g.names_ = std::move(names);
    g.abelian_ = true;
    for (int a = 0; a < n && g.abelian_; ++a)
        for (int b = a + 1; b < n; ++b)
            if (g.mul_u(a, b) != g.mul_u(b, a)) {
                g.abelian_ = false;
                break;
            }
    return g;
}

AxiomReport verify_group_axioms(const std::vector<std::vector<int>>& table) {
    const int n = static_cast<int>(table.size());
    if (n == 0) throw input_error("table must be nonempty");
    for (int a = 0; a < n; ++a)
        if (static_cast<int>(table[a].size()) != n)
            throw input_error("table is not square: row " + std::to_string(a) + " has " +
                              std::to_string(table[a].size()) + " entries, expected " +
                              std::to_string(n));
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            if (table[a][b] < 0 || table[a][b] >= n)
                return {false, "closure", {a, b},
                        std::to_string(a) + " * " + std::to_string(b) + " = " +
                            std::to_string(table[a][b]) + " is outside 0.." +
                            std::to_string(n - 1)};

    std::vector<elem> flat(static_cast<std::size_t>(n) * n);
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            flat[static_cast<std::size_t>(a) * n + b] = static_cast<elem>(table[a][b]);
    return verify_flat(flat, n, nullptr);
}

Group Group::from_spec(const std::string& spec, int order_cap) {
    if (order_cap < 1) throw input_error("order cap must be positive");
    order_cap = std::min(order_cap, kHardOrderCap);
    std::size_t pos = 0;
    SpecNode node = parse_spec_node(spec, pos);
    while (pos < spec.size() && spec[pos] == ' ') ++pos;
    if (pos != spec.size())
        throw input_error("trailing characters in group descriptor: \"" + spec.substr(pos) +
                          "\"");
    RawGroup raw = build_node(node, order_cap);
    return finish_group(raw.n, std::move(raw.table), std::move(raw.names), spec);
}

Group Group::from_table(const std::vector<std::vector<int>>& table, const std::string& spec,
                        int order_cap) {
    if (order_cap < 1) throw input_error("order cap must be positive");
    order_cap = std::min(order_cap, kHardOrderCap);
    check_cap(static_cast<long long>(table.size()), order_cap, spec);
    RawGroup raw = from_int_table(table);
    return finish_group(raw.n, std::move(raw.table), std::move(raw.names), spec);
}

int Group::mul(int a, int b) const {
    if (a < 0 || a >= n_ || b < 0 || b >= n_)
        throw input_error("element id out of range in mul(" + std::to_string(a) + ", " +
                          std::to_string(b) + ") for group of order " + std::to_string(n_));
    return mul_u(a, b);
}

int Group::inv(int a) const {
    if (a < 0 || a >= n_)
        throw input_error("element id out of range in inv(" + std::to_string(a) +
                          ") for group of order " + std::to_string(n_));
    return inv_u(a);
}

const std::string& Group::element_name(int a) const {
    if (a < 0 || a >= n_)
        throw input_error("element id out of range in element_name(" + std::to_string(a) + ")");
    return names_[a];
}

Group build_group(const std::string& spec, int order_cap) {
    return Group::from_spec(spec, order_cap);
}

}  // namespace tpp
