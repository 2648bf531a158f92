#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "asmg/matrix.hpp"

namespace asmg {

/// Thrown on malformed matrix input (ragged rows, non-integers, bad JSON).
class ParseError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Text format: one row per line, entries space-separated decimal integers;
/// a blank line (or end of input) terminates the matrix. Reads the next
/// matrix from the stream; nullopt once the stream is exhausted.
std::optional<IntMatrix> read_matrix_text(std::istream& in);

/// Structured format: {"n": <size>, "entries": [[...], ...]}.
IntMatrix matrix_from_json(const nlohmann::json& j);
nlohmann::json matrix_to_json(const IntMatrix& m);

/// Sniffs the input: a leading '{' or '[' selects the structured format,
/// anything else the text format. Reads exactly one matrix.
IntMatrix read_matrix_any(std::istream& in);

/// All matrices from a stream, either one JSON array/object or a sequence of
/// text matrices separated by blank lines.
std::vector<IntMatrix> read_matrix_list(std::istream& in);

void write_matrix_text(std::ostream& out, const IntMatrix& m);
std::string matrix_to_text(const IntMatrix& m);

}  // namespace asmg
