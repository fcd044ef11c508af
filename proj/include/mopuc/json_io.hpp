#pragma once

#include <string>

#include <json.hpp>

#include "mopuc/overlap.hpp"
#include "mopuc/report.hpp"
#include "mopuc/schur.hpp"

namespace mopuc::io {

using json = nlohmann::json;

inline constexpr int schema_version = 1;

json to_json(const Matrix& m);
Matrix matrix_from_json(const json& j);
// Accepts a one-column matrix or a plain list of [re, im] pairs.
Vector vector_from_json(const json& j);

json to_json(const SchurParameterSequence& p);
SchurParameterSequence params_from_json(const json& j);

json to_json(const MatrixSeries& s);
MatrixSeries series_from_json(const json& j);

json to_json(const VerificationReport& r);
json to_json(const IndexSubspace& v);
json to_json(const SubspacePartition& p);
json to_json(const OverlapFactorization& f);
json to_json(const OverlapVerdict& v);

IndexSubspace parse_index_list(const std::string& s, std::size_t ambient);
// Tokens of the form L=0,1 C=2 R=3,4,5 (an empty list is written L=).
SubspacePartition parse_partition(const std::vector<std::string>& tokens, std::size_t ambient);

json read_json_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& text);
std::string dump(const json& j);

}  // namespace mopuc::io
