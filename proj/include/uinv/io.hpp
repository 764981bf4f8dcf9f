#pragma once

// File formats. Rationals are written as canonical "p/q" strings ("p" for
// integers), polynomials in the canonical text form, and JSON objects keep a
// fixed key order so output is byte-stable.

#include "uinv/generators.hpp"
#include "uinv/slice.hpp"

#include <json.hpp>

#include <string>
#include <string_view>
#include <vector>

namespace uinv::io {

using Json = nlohmann::ordered_json;

/// [{"coeff": "p/q", "exps": [["x[1][1]", 2], ...]}, ...] in canonical term order.
Json poly_to_json(const Poly& p);
Poly poly_from_json(const Json& j, int n);

/// {"n": n, "entries": [[...], ...]} with canonical polynomial text entries.
Json matrix_to_json(const PolyMatrix& m);
Json matrix_to_json(const RatMatrix& m);

/// Reads {"n", "entries"}; entries may be polynomial strings or integers.
PolyMatrix poly_matrix_from_json(const Json& j);
/// As poly_matrix_from_json, requiring constant entries.
RatMatrix matrix_from_json(const Json& j);

/// Rows of comma-separated rationals. Throws ParseError unless square.
RatMatrix matrix_from_csv(std::string_view text);

/// Reads one or more numeric matrices: a JSON matrix object, a JSON array of
/// them, {"matrices": [...]}, or CSV blocks separated by blank lines.
std::vector<RatMatrix> read_matrices(std::string_view text);

/// {"n": n, "values": {"J[k][i]": "p/q", ...}} in (k, i) order.
Json fingerprint_to_json(const Fingerprint& fp);
Fingerprint fingerprint_from_json(const Json& j);

/// {"n": n, "coords": {"s[k][i]": "p/q", ...}} in (k, i) order.
Json slice_point_to_json(const SlicePoint& p);
SlicePoint slice_point_from_json(const Json& j);

/// Generator dump: [{"k", "i", "n", "degree", "terms", "poly"}, ...] by (k, i).
/// When `restrictions` is non-empty, each entry also carries "restricted".
Json genset_to_json(const GenSet& gens, const std::vector<Poly>& restrictions = {});

std::string read_file(const std::string& path);

}  // namespace uinv::io
