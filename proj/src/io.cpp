#include "uinv/io.hpp"

#include "uinv/errors.hpp"

#include <cctype>
#include <fstream>
#include <iostream>
#include <sstream>

namespace uinv::io {

namespace {

std::string gen_key(GenIndex idx) { return "J[" + std::to_string(idx.k) + "][" + std::to_string(idx.i) + "]"; }
std::string coord_key(GenIndex idx) { return "s[" + std::to_string(idx.k) + "][" + std::to_string(idx.i) + "]"; }

int read_n(const Json& j) {
    if (!j.is_object() || !j.contains("n") || !j["n"].is_number_integer()) {
        throw ParseError("expected an object with integer field \"n\"");
    }
    const int n = j["n"].get<int>();
    if (n < 1) throw ParseError("\"n\" must be >= 1");
    return n;
}

Rational read_rational(const Json& j) {
    if (j.is_string()) return Rational::parse(j.get<std::string>());
    if (j.is_number_integer()) return Rational(j.get<long>());
    throw ParseError("expected a rational string or integer, got " + j.dump());
}

std::string_view trim(std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    return s;
}

Json parse_json(std::string_view text) {
    try {
        return Json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw ParseError(std::string("malformed JSON: ") + e.what());
    }
}

}  // namespace

Json poly_to_json(const Poly& p) {
    Json terms = Json::array();
    for (const auto& t : p.terms()) {
        Json exps = Json::array();
        for (const auto& pw : t.mono.powers()) exps.push_back(Json::array({pw.var.name(), pw.exp}));
        terms.push_back(Json{{"coeff", t.coeff.str()}, {"exps", std::move(exps)}});
    }
    return terms;
}

Poly poly_from_json(const Json& j, int n) {
    if (!j.is_array()) throw ParseError("polynomial JSON must be an array of terms");
    PolyBuilder b;
    for (const auto& term : j) {
        if (!term.is_object() || !term.contains("coeff") || !term.contains("exps") || !term["exps"].is_array()) {
            throw ParseError("polynomial term must have \"coeff\" and \"exps\"");
        }
        std::vector<Power> powers;
        for (const auto& e : term["exps"]) {
            if (!e.is_array() || e.size() != 2 || !e[0].is_string() || !e[1].is_number_unsigned()) {
                throw ParseError("exponent entry must be [\"var\", power]");
            }
            const auto v = VarId::parse(e[0].get<std::string>(), n);
            if (!v) throw ParseError("invalid variable " + e[0].dump());
            powers.push_back({*v, e[1].get<std::uint32_t>()});
        }
        b.add(Monomial::from_powers(std::move(powers)), read_rational(term["coeff"]));
    }
    return b.build();
}

Json matrix_to_json(const PolyMatrix& m) {
    Json rows = Json::array();
    for (Eigen::Index r = 0; r < m.rows(); ++r) {
        Json row = Json::array();
        for (Eigen::Index c = 0; c < m.cols(); ++c) row.push_back(to_text(m(r, c)));
        rows.push_back(std::move(row));
    }
    return Json{{"n", m.rows()}, {"entries", std::move(rows)}};
}

Json matrix_to_json(const RatMatrix& m) { return matrix_to_json(to_poly(m)); }

PolyMatrix poly_matrix_from_json(const Json& j) {
    const int n = read_n(j);
    if (!j.contains("entries") || !j["entries"].is_array() || static_cast<int>(j["entries"].size()) != n) {
        throw ParseError("\"entries\" must be an array of n rows");
    }
    PolyMatrix m(n, n);
    for (int r = 0; r < n; ++r) {
        const Json& row = j["entries"][r];
        if (!row.is_array() || static_cast<int>(row.size()) != n) throw ParseError("matrix row has wrong length");
        for (int c = 0; c < n; ++c) {
            const Json& e = row[c];
            if (e.is_string()) {
                m(r, c) = parse_poly(e.get<std::string>(), n);
            } else if (e.is_number_integer()) {
                m(r, c) = Poly(Rational(e.get<long>()));
            } else {
                throw ParseError("matrix entry must be a string or integer");
            }
        }
    }
    return m;
}

RatMatrix matrix_from_json(const Json& j) {
    const PolyMatrix m = poly_matrix_from_json(j);
    if (!is_constant(m)) throw ParseError("matrix has non-constant entries");
    return to_rational(m);
}

RatMatrix matrix_from_csv(std::string_view text) {
    std::vector<std::vector<Rational>> rows;
    std::istringstream in{std::string(text)};
    std::string line;
    while (std::getline(in, line)) {
        const auto body = trim(line);
        if (body.empty() || body.front() == '#') continue;
        std::vector<Rational> row;
        std::size_t start = 0;
        while (true) {
            const auto comma = body.find(',', start);
            row.push_back(Rational::parse(body.substr(start, comma - start)));
            if (comma == std::string_view::npos) break;
            start = comma + 1;
        }
        rows.push_back(std::move(row));
    }
    const auto n = static_cast<Eigen::Index>(rows.size());
    if (n == 0) throw ParseError("empty CSV matrix");
    RatMatrix m(n, n);
    for (Eigen::Index r = 0; r < n; ++r) {
        if (static_cast<Eigen::Index>(rows[r].size()) != n) throw ParseError("CSV matrix is not square");
        for (Eigen::Index c = 0; c < n; ++c) m(r, c) = rows[r][c];
    }
    return m;
}

std::vector<RatMatrix> read_matrices(std::string_view text) {
    const auto body = trim(text);
    std::vector<RatMatrix> out;
    if (body.empty()) return out;
    if (body.front() == '{' || body.front() == '[') {
        const Json j = parse_json(body);
        if (j.is_object() && j.contains("matrices")) {
            if (!j["matrices"].is_array()) throw ParseError("\"matrices\" must be an array");
            for (const auto& m : j["matrices"]) out.push_back(matrix_from_json(m));
        } else if (j.is_object()) {
            out.push_back(matrix_from_json(j));
        } else {
            for (const auto& m : j) out.push_back(matrix_from_json(m));
        }
        return out;
    }
    // CSV: blank lines separate matrices.
    std::istringstream in{std::string(body)};
    std::string line;
    std::string block;
    auto flush = [&] {
        if (!trim(block).empty()) out.push_back(matrix_from_csv(block));
        block.clear();
    };
    while (std::getline(in, line)) {
        if (trim(line).empty()) {
            flush();
        } else {
            block += line;
            block += '\n';
        }
    }
    flush();
    return out;
}

Json fingerprint_to_json(const Fingerprint& fp) {
    Json values = Json::object();
    for (const GenIndex idx : all_indices(fp.n)) values[gen_key(idx)] = fp.at(idx).str();
    return Json{{"n", fp.n}, {"values", std::move(values)}};
}

Fingerprint fingerprint_from_json(const Json& j) {
    Fingerprint fp;
    fp.n = read_n(j);
    if (!j.contains("values") || !j["values"].is_object()) throw ParseError("\"values\" must be an object");
    for (const GenIndex idx : all_indices(fp.n)) {
        const std::string key = gen_key(idx);
        if (!j["values"].contains(key)) throw ParseError("missing value " + key);
        fp.values.push_back(read_rational(j["values"][key]));
    }
    if (j["values"].size() != fp.values.size()) throw ParseError("unexpected keys in \"values\"");
    return fp;
}

Json slice_point_to_json(const SlicePoint& p) {
    Json coords = Json::object();
    for (const GenIndex idx : all_indices(p.n)) coords[coord_key(idx)] = p.at(idx).str();
    return Json{{"n", p.n}, {"coords", std::move(coords)}};
}

SlicePoint slice_point_from_json(const Json& j) {
    SlicePoint p;
    p.n = read_n(j);
    if (!j.contains("coords") || !j["coords"].is_object()) throw ParseError("\"coords\" must be an object");
    for (const GenIndex idx : all_indices(p.n)) {
        const std::string key = coord_key(idx);
        if (!j["coords"].contains(key)) throw ParseError("missing coordinate " + key);
        p.coords.push_back(read_rational(j["coords"][key]));
    }
    if (j["coords"].size() != p.coords.size()) throw ParseError("unexpected keys in \"coords\"");
    return p;
}

Json genset_to_json(const GenSet& gens, const std::vector<Poly>& restrictions) {
    Json out = Json::array();
    for (std::size_t j = 0; j < gens.members.size(); ++j) {
        const auto& m = gens.members[j];
        Json entry{{"k", m.index.k},         {"i", m.index.i},     {"n", gens.n},
                   {"degree", m.degree},     {"terms", m.terms},   {"poly", to_text(m.poly)}};
        if (!restrictions.empty()) entry["restricted"] = to_text(restrictions.at(j));
        out.push_back(std::move(entry));
    }
    return out;
}

std::string read_file(const std::string& path) {
    if (path == "-") {
        std::ostringstream ss;
        ss << std::cin.rdbuf();
        return ss.str();
    }
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error("cannot open " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

}  // namespace uinv::io
