#pragma once

#include <string>
#include <string_view>

#include <json.hpp>

#include "eisenlat/classification.hpp"
#include "eisenlat/eisenstein.hpp"
#include "eisenlat/fibration.hpp"
#include "eisenlat/smith.hpp"

namespace eisenlat {

using Json = nlohmann::ordered_json;

// Matrix text format:
//
//   # comment
//   3
//   -2  1  0
//    1 -2  1
//    0  1 -2
//
// The header is "n" (square) or "rows cols". '#' starts a comment running to
// the end of the line. Errors are ParseError with "line L, column C" in the
// message.
IntMatrix parse_matrix_text(std::string_view text);
IntMatrix read_matrix_file(const std::string& path);
std::string format_matrix_text(const IntMatrix& m);

// Square matrix text checked by make_lattice.
Lattice parse_gram_text(std::string_view text, std::string name = {});
Lattice read_gram_file(const std::string& path);

// Entries are JSON integers when they fit in 64 bits, decimal strings
// otherwise; both forms are accepted on input.
Json matrix_to_json(const IntMatrix& m);
IntMatrix matrix_from_json(const Json& j);

// {name, rank, gram, det, signature: [p, q, z], invariant_factors} with
// invariant_factors null for degenerate lattices.
Json lattice_to_json(const Lattice& l);
// Reads name and gram; the derived fields are checked when present.
Lattice lattice_from_json(const Json& j);

Json to_json(const EisNum& z);  // {"a": "p/q", "b": "r/s"}
EisNum eis_from_json(const Json& j);
Json to_json(const EisMatrix& m);

Json to_json(const SmithDecomposition& s);
Json to_json(const FixedLocusType& t);
Json to_json(const RowReport& r);
Json to_json(const ConfigAnalysis& a);

}  // namespace eisenlat
