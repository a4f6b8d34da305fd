#include "tpp/io.hpp"

#include <fstream>

namespace tpp {

namespace {

nlohmann::json load_json_file(const std::string& path, const char* what) {
    std::ifstream in(path);
    if (!in) throw input_error(std::string("cannot open ") + what + " file: " + path);
    try {
        nlohmann::json j;
        in >> j;
        return j;
    } catch (const nlohmann::json::exception& e) {
        throw input_error(std::string("cannot parse ") + what + " file " + path + ": " +
                          e.what());
    }
}

std::vector<int> int_array(const nlohmann::json& j, const char* key) {
    if (!j.contains(key) || !j[key].is_array())
        throw input_error(std::string("expected an integer array at key \"") + key + "\"");
    std::vector<int> out;
    out.reserve(j[key].size());
    for (const auto& v : j[key]) {
        if (!v.is_number_integer())
            throw input_error(std::string("non-integer entry in array \"") + key + "\"");
        out.push_back(v.get<int>());
    }
    return out;
}

}  // namespace

nlohmann::json matrix_to_json(const Matrix& m) {
    nlohmann::json rows = nlohmann::json::array();
    for (int i = 0; i < m.rows; ++i) {
        nlohmann::json row = nlohmann::json::array();
        for (int j = 0; j < m.cols; ++j) {
            const Rational& v = m.at(i, j);
            if (v.denominator() == 1)
                row.push_back(v.numerator());
            else
                row.push_back(format_rational(v));
        }
        rows.push_back(std::move(row));
    }
    return {{"rows", m.rows}, {"cols", m.cols}, {"entries", std::move(rows)}};
}

Matrix matrix_from_json(const nlohmann::json& j) {
    if (!j.is_object() || !j.contains("rows") || !j.contains("cols") || !j.contains("entries") ||
        !j["rows"].is_number_integer() || !j["cols"].is_number_integer() ||
        !j["entries"].is_array())
        throw input_error(
            "matrix json must hold {\"rows\": int, \"cols\": int, \"entries\": [[..]]}");
    const int rows = j["rows"].get<int>();
    const int cols = j["cols"].get<int>();
    if (rows <= 0 || cols <= 0) throw input_error("matrix dimensions must be positive");
    Matrix m(rows, cols);
    if (static_cast<int>(j["entries"].size()) != rows)
        throw input_error("matrix json declares " + std::to_string(rows) + " rows but has " +
                          std::to_string(j["entries"].size()));
    for (int i = 0; i < rows; ++i) {
        const auto& row = j["entries"][i];
        if (!row.is_array() || static_cast<int>(row.size()) != cols)
            throw input_error("matrix row " + std::to_string(i) + " must be an array of " +
                              std::to_string(cols) + " entries");
        for (int k = 0; k < cols; ++k) {
            const auto& v = row[k];
            if (v.is_number_integer())
                m.at(i, k) = Rational(v.get<long long>());
            else if (v.is_string())
                m.at(i, k) = parse_rational(v.get<std::string>());
            else
                throw input_error(
                    "matrix entries must be integers or \"a/b\" strings (exact values only)");
        }
    }
    return m;
}

Matrix load_matrix_file(const std::string& path) {
    return matrix_from_json(load_json_file(path, "matrix"));
}

TripleFile load_triple_file(const std::string& path) {
    const nlohmann::json j = load_json_file(path, "triple");
    if (!j.is_object() || !j.contains("group") || !j["group"].is_string())
        throw input_error(
            "triple file must hold {\"group\": \"...\", \"S\": [..], \"T\": [..], \"U\": [..]}");
    TripleFile f;
    f.group_spec = j["group"].get<std::string>();
    f.s = int_array(j, "S");
    f.t = int_array(j, "T");
    f.u = int_array(j, "U");
    return f;
}

nlohmann::json report_to_json(const DisjointnessReport& r) {
    return {{"case", r.case_label}, {"w", r.w},
            {"r", r.r},             {"union_size", r.union_size},
            {"a_st", r.a_st},       {"a_tu", r.a_tu},
            {"a_su", r.a_su}};
}

nlohmann::json injectivity_to_json(const InjectivityReport& r) {
    return {{"eps_mp", r.eps_mp}, {"eps_pq", r.eps_pq}, {"eps_mq", r.eps_mq},
            {"im_mp", r.im_mp},   {"im_pq", r.im_pq},   {"im_mq", r.im_mq}};
}

nlohmann::json bounds_to_json(const BoundsReport& r) {
    return {{"n", r.n},
            {"mult_lower", r.mult_lower},
            {"n_cubed", r.n_cubed.str()},
            {"add_lower", r.add_lower},
            {"add_upper", r.add_upper},
            {"indiv_lower", r.indiv_lower},
            {"indiv_upper", r.indiv_upper},
            {"search_space", r.search_space.str()}};
}

nlohmann::json search_result_to_json(const SearchResult& r) {
    nlohmann::json j = report_to_json(r.report);
    j["S"] = r.triple.S.ids();
    j["T"] = r.triple.T.ids();
    j["U"] = r.triple.U.ids();
    j["m"] = r.triple.m();
    j["p"] = r.triple.p();
    j["q"] = r.triple.q();
    j["mpq"] = r.mpq;
    j["sum"] = r.sum;
    j["canonical"] = r.canonical;
    return j;
}

}  // namespace tpp
