#include "ncx/io.hpp"

#include <fstream>
#include <sstream>

namespace ncx {

namespace {

[[noreturn]] void fail(const std::string& where, const std::string& what) {
    throw Error(ErrorKind::ParseError, where + ": " + what);
}

const Json& member(const Json& j, const char* key, const std::string& where) {
    if (!j.is_object()) fail(where, "expected an object");
    auto it = j.find(key);
    if (it == j.end()) fail(where, std::string("missing key \"") + key + "\"");
    return *it;
}

long long as_int(const Json& j, const std::string& where) {
    if (!j.is_number_integer()) fail(where, "expected an integer");
    return j.get<long long>();
}

int as_degree(const Json& j, const std::string& where) {
    const long long v = as_int(j, where);
    if (v < -(1LL << 30) || v > (1LL << 30)) fail(where, "integer out of range");
    return static_cast<int>(v);
}

std::size_t as_dim(const Json& j, const std::string& where) {
    const long long v = as_int(j, where);
    if (v < 0 || v > 4096) fail(where, "expected a dimension in [0, 4096]");
    return static_cast<std::size_t>(v);
}

std::vector<std::size_t> dims_from_json(const Json& j, const std::string& where) {
    if (!j.is_array()) fail(where, "expected an array");
    std::vector<std::size_t> dims;
    for (std::size_t k = 0; k < j.size(); ++k) dims.push_back(as_dim(j[k], where + "[" + std::to_string(k) + "]"));
    return dims;
}

}  // namespace

Json to_json(const Field& field) {
    if (field.is_rational()) return Json{{"kind", "Q"}};
    return Json{{"kind", "Fp"}, {"p", field.characteristic()}};
}

Field field_from_json(const Json& j, const std::string& where) {
    const Json& kind = member(j, "kind", where);
    if (kind == "Q") return Field::rationals();
    if (kind != "Fp") fail(where + ".kind", "expected \"Q\" or \"Fp\"");
    const long long p = as_int(member(j, "p", where), where + ".p");
    if (p < 2 || p >= (1LL << 31) || !is_prime(static_cast<std::uint64_t>(p))) fail(where + ".p", "expected a prime below 2^31");
    return Field::prime(static_cast<std::uint64_t>(p));
}

Field field_from_flag(const std::string& text) {
    if (text == "q" || text == "Q") return Field::rationals();
    if (text.rfind("fp:", 0) == 0) {
        Json j{{"kind", "Fp"}};
        try {
            std::size_t used = 0;
            const long long p = std::stoll(text.substr(3), &used);
            if (used != text.size() - 3) fail("--field", "bad modulus");
            j["p"] = p;
        } catch (const std::logic_error&) {
            fail("--field", "bad modulus");
        }
        return field_from_json(j, "--field");
    }
    fail("--field", "expected q or fp:<p>");
}

Json to_json(const Matrix& m) {
    Json rows = Json::array();
    for (std::size_t r = 0; r < m.rows(); ++r) {
        Json row = Json::array();
        for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(m.field().format(m.at(r, c)));
        rows.push_back(std::move(row));
    }
    return rows;
}

Matrix matrix_from_json(const Json& j, const Field& field, std::size_t rows, std::size_t cols, const std::string& where) {
    if (!j.is_array()) fail(where, "expected an array of rows");
    if (j.size() != rows) fail(where, "expected " + std::to_string(rows) + " rows, found " + std::to_string(j.size()));
    Matrix m(field, rows, cols);
    for (std::size_t r = 0; r < rows; ++r) {
        const std::string at_row = where + "[" + std::to_string(r) + "]";
        if (!j[r].is_array() || j[r].size() != cols) fail(at_row, "expected a row of " + std::to_string(cols) + " entries");
        for (std::size_t c = 0; c < cols; ++c) {
            const std::string at = at_row + "[" + std::to_string(c) + "]";
            if (!j[r][c].is_string()) fail(at, "scalars must be strings");
            try {
                m.set(r, c, field.parse(j[r][c].get<std::string>()));
            } catch (const Error& e) {
                fail(at, e.what());
            }
        }
    }
    return m;
}

Json to_json(const NComplex& x) {
    Json j;
    j["N"] = x.N();
    j["field"] = to_json(x.field());
    j["min_degree"] = x.is_zero() ? 0 : x.lo();
    j["dims"] = x.dims();
    Json diffs = Json::array();
    for (const auto& d : x.diffs()) diffs.push_back(to_json(d));
    j["diffs"] = std::move(diffs);
    return j;
}

NComplex ncomplex_from_json(const Json& j, const std::string& where) {
    const long long N = as_int(member(j, "N", where), where + ".N");
    if (N < 2 || N > 64) fail(where + ".N", "expected 2 <= N <= 64");
    const Field field = field_from_json(member(j, "field", where), where + ".field");
    const int lo = as_degree(member(j, "min_degree", where), where + ".min_degree");
    const auto dims = dims_from_json(member(j, "dims", where), where + ".dims");
    const Json& dj = member(j, "diffs", where);
    const std::size_t expected = dims.empty() ? 0 : dims.size() - 1;
    if (!dj.is_array() || dj.size() != expected) fail(where + ".diffs", "expected " + std::to_string(expected) + " matrices");
    std::vector<Matrix> diffs;
    for (std::size_t k = 0; k < expected; ++k) {
        diffs.push_back(matrix_from_json(dj[k], field, dims[k + 1], dims[k], where + ".diffs[" + std::to_string(k) + "]"));
    }
    return NComplex(static_cast<int>(N), field, lo, dims, std::move(diffs));
}

Json to_json(const BlockComplex& x) {
    Json j = to_json(x.complex);
    Json blocks = Json::array();
    for (const auto& b : x.blocks) blocks.push_back(Json::array({b.degree, b.source_degree}));
    j["blocks"] = std::move(blocks);
    return j;
}

Json to_json(const ChainMap& f) {
    Json j;
    j["source"] = to_json(f.source());
    j["target"] = to_json(f.target());
    const int lo = f.lo();
    const int hi = f.hi();
    j["min_degree"] = hi < lo ? 0 : lo;
    Json maps = Json::array();
    for (int i = lo; i <= hi; ++i) maps.push_back(to_json(f.at(i)));
    j["maps"] = std::move(maps);
    return j;
}

ChainMap chainmap_from_json(const Json& j, const std::string& where) {
    NComplex source = ncomplex_from_json(member(j, "source", where), where + ".source");
    NComplex target = ncomplex_from_json(member(j, "target", where), where + ".target");
    if (source.N() != target.N()) fail(where, "source and target have different N");
    if (source.field() != target.field()) fail(where, "source and target have different fields");
    const int lo = as_degree(member(j, "min_degree", where), where + ".min_degree");
    const Json& mj = member(j, "maps", where);
    if (!mj.is_array()) fail(where + ".maps", "expected an array");
    std::vector<Matrix> maps;
    for (std::size_t k = 0; k < mj.size(); ++k) {
        const int i = lo + static_cast<int>(k);
        maps.push_back(matrix_from_json(mj[k], source.field(), target.dim(i), source.dim(i), where + ".maps[" + std::to_string(k) + "]"));
    }
    return ChainMap(std::move(source), std::move(target), lo, std::move(maps));
}

Json to_json(const ShortExactSeq& ses) { return Json{{"alpha", to_json(ses.alpha)}, {"beta", to_json(ses.beta)}}; }

ShortExactSeq ses_from_json(const Json& j, const std::string& where) {
    ChainMap alpha = chainmap_from_json(member(j, "alpha", where), where + ".alpha");
    ChainMap beta = chainmap_from_json(member(j, "beta", where), where + ".beta");
    if (alpha.target() != beta.source()) fail(where, "alpha.target differs from beta.source");
    return {std::move(alpha), std::move(beta)};
}

Json to_json(const ExactSquare& sq) {
    Json j;
    j["field"] = to_json(sq.f.field());
    j["dims"] = {sq.f.cols(), sq.f.rows(), sq.x.rows(), sq.y.rows()};
    j["f"] = to_json(sq.f);
    j["x"] = to_json(sq.x);
    j["y"] = to_json(sq.y);
    j["g"] = to_json(sq.g);
    return j;
}

ExactSquare square_from_json(const Json& j, const std::string& where) {
    const Field field = field_from_json(member(j, "field", where), where + ".field");
    const auto dims = dims_from_json(member(j, "dims", where), where + ".dims");
    if (dims.size() != 4) fail(where + ".dims", "expected [A, B, D, E]");
    const std::size_t a = dims[0], b = dims[1], d = dims[2], e = dims[3];
    return {matrix_from_json(member(j, "f", where), field, b, a, where + ".f"),
            matrix_from_json(member(j, "x", where), field, d, a, where + ".x"),
            matrix_from_json(member(j, "y", where), field, e, b, where + ".y"),
            matrix_from_json(member(j, "g", where), field, e, d, where + ".g")};
}

Json to_json(const MorObject& m) {
    Json maps = Json::array();
    for (const auto& a : m.maps) maps.push_back(to_json(a));
    return Json{{"field", to_json(m.field)}, {"dims", m.dims}, {"maps", std::move(maps)}};
}

MorObject mor_from_json(const Json& j, const Field& fallback, const std::string& where) {
    MorObject m;
    m.field = j.is_object() && j.contains("field") ? field_from_json(j["field"], where + ".field") : fallback;
    m.dims = dims_from_json(member(j, "dims", where), where + ".dims");
    const Json& mj = member(j, "maps", where);
    const std::size_t expected = m.dims.empty() ? 0 : m.dims.size() - 1;
    if (!mj.is_array() || mj.size() != expected) fail(where + ".maps", "expected " + std::to_string(expected) + " matrices");
    for (std::size_t k = 0; k < expected; ++k) {
        m.maps.push_back(matrix_from_json(mj[k], m.field, m.dims[k + 1], m.dims[k], where + ".maps[" + std::to_string(k) + "]"));
    }
    return m;
}

Json to_json(const HomologyTable& table) {
    Json rows = Json::array();
    for (const auto& [key, dim] : table) rows.push_back(Json{{"degree", key.first}, {"amplitude", key.second}, {"dim", dim}});
    return rows;
}

Json to_json(const ExactnessReport& report) {
    Json nodes = Json::array();
    for (const auto& n : report.nodes) {
        nodes.push_back(Json{{"degree", n.degree},
                             {"amplitude", n.amplitude},
                             {"object", n.object},
                             {"dim", n.dim},
                             {"rank_in", n.rank_in},
                             {"dim_ker_out", n.dim_ker_out},
                             {"exact", n.exact}});
    }
    return Json{{"exact", report.exact()}, {"failures", report.failures()}, {"nodes", std::move(nodes)}};
}

Json to_json(const std::vector<MuBlock>& blocks) {
    Json out = Json::array();
    for (const auto& b : blocks) out.push_back(Json{{"r", b.r}, {"s", b.s}, {"m", b.m}});
    return out;
}

Json to_json(const HomotopyWitness& s, const Field& field) {
    Json maps = Json::array();
    for (const auto& m : s.maps) maps.push_back(m.field() == field ? to_json(m) : Json::array());
    return Json{{"min_degree", s.min_degree}, {"maps", std::move(maps)}};
}

Json read_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error(ErrorKind::ParseError, path + ": cannot open file");
    std::stringstream buffer;
    buffer << in.rdbuf();
    try {
        return Json::parse(buffer.str());
    } catch (const Json::parse_error& e) {
        throw Error(ErrorKind::ParseError, path + ": byte " + std::to_string(e.byte) + ": malformed JSON");
    }
}

}  // namespace ncx
