#pragma once

#include <string>

#include <json.hpp>

#include "ncx/mor.hpp"

namespace ncx {

using Json = nlohmann::ordered_json;

// Parsers throw Error(ParseError) with a JSON-pointer style location.

Json to_json(const Field& field);
Field field_from_json(const Json& j, const std::string& where = "$");
/// --field flag: "q" or "fp:<p>".
Field field_from_flag(const std::string& text);

/// Row-major array of scalar strings.
Json to_json(const Matrix& m);
Matrix matrix_from_json(const Json& j, const Field& field, std::size_t rows, std::size_t cols, const std::string& where);

/// {"N", "field", "min_degree", "dims", "diffs"}; shapes are checked, d^N = 0 is not.
Json to_json(const NComplex& x);
NComplex ncomplex_from_json(const Json& j, const std::string& where = "$");
/// Adds the "blocks": [[degree, source_degree], ...] sidecar.
Json to_json(const BlockComplex& x);

/// {"source", "target", "min_degree", "maps"}.
Json to_json(const ChainMap& f);
ChainMap chainmap_from_json(const Json& j, const std::string& where = "$");

/// {"alpha": <chain map>, "beta": <chain map>}.
Json to_json(const ShortExactSeq& ses);
ShortExactSeq ses_from_json(const Json& j, const std::string& where = "$");

/// {"field", "dims": [a, b, d, e], "f", "x", "y", "g"}.
Json to_json(const ExactSquare& sq);
ExactSquare square_from_json(const Json& j, const std::string& where = "$");

/// {"field", "dims", "maps"}.
Json to_json(const MorObject& m);
MorObject mor_from_json(const Json& j, const Field& fallback, const std::string& where = "$");

Json to_json(const HomologyTable& table);
Json to_json(const ExactnessReport& report);
Json to_json(const std::vector<MuBlock>& blocks);
Json to_json(const HomotopyWitness& s, const Field& field);

/// Reads and parses a file; errors carry the path.
Json read_json_file(const std::string& path);

}  // namespace ncx
