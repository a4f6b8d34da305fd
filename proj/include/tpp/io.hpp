#pragma once

#include <string>

#include "json.hpp"

#include "tpp/algebra.hpp"
#include "tpp/analysis.hpp"
#include "tpp/bounds.hpp"
#include "tpp/search.hpp"

namespace tpp {

// JSON wire formats shared by the CLI and the tests.
//
// Matrix file:  {"rows": 2, "cols": 2, "entries": [[1, "1/2"], [0, -3]]}
//               entries are integers or "a/b" strings (exact rationals).
// Triple file:  {"group": "cyc:6", "S": [0,1], "T": [1,2], "U": [2,0]}
// Cayley file:  {"n": 3, "table": [[0,1,2],[1,2,0],[2,0,1]]}  (read by the
//               "file:" group descriptor; identity must be id 0).

nlohmann::json matrix_to_json(const Matrix& m);
Matrix matrix_from_json(const nlohmann::json& j);
Matrix load_matrix_file(const std::string& path);

struct TripleFile {
    std::string group_spec;
    std::vector<int> s, t, u;
};
TripleFile load_triple_file(const std::string& path);

nlohmann::json report_to_json(const DisjointnessReport& r);
nlohmann::json injectivity_to_json(const InjectivityReport& r);
nlohmann::json bounds_to_json(const BoundsReport& r);
nlohmann::json search_result_to_json(const SearchResult& r);

}  // namespace tpp
