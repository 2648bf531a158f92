#include "asmg/io.hpp"

#include <istream>
#include <ostream>
#include <sstream>

namespace asmg {

namespace {

std::vector<Int> parse_row(const std::string& line, int lineno) {
    std::istringstream ss(line);
    std::vector<Int> row;
    std::string tok;
    while (ss >> tok) {
        try {
            std::size_t used = 0;
            const long long v = std::stoll(tok, &used);
            if (used != tok.size()) throw std::invalid_argument(tok);
            row.push_back(v);
        } catch (const std::exception&) {
            throw ParseError("line " + std::to_string(lineno) + ": '" + tok +
                             "' is not an integer");
        }
    }
    return row;
}

bool blank(const std::string& s) {
    return s.find_first_not_of(" \t\r\n") == std::string::npos;
}

}  // namespace

std::optional<IntMatrix> read_matrix_text(std::istream& in) {
    std::vector<std::vector<Int>> rows;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (blank(line)) {
            if (rows.empty()) continue;  // skip leading blank lines
            break;
        }
        rows.push_back(parse_row(line, lineno));
    }
    if (rows.empty()) return std::nullopt;
    const std::size_t n = rows.size();
    for (const auto& r : rows)
        if (r.size() != n)
            throw ParseError("matrix is not square: " + std::to_string(n) + " rows but a row of " +
                             std::to_string(r.size()) + " entries");
    return IntMatrix::from_rows(rows);
}

IntMatrix matrix_from_json(const nlohmann::json& j) {
    if (!j.is_object() || !j.contains("n") || !j.contains("entries"))
        throw ParseError("structured matrix needs fields \"n\" and \"entries\"");
    const int n = j.at("n").get<int>();
    const auto& entries = j.at("entries");
    if (!entries.is_array() || static_cast<int>(entries.size()) != n)
        throw ParseError("\"entries\" must be an array of n rows");
    std::vector<std::vector<Int>> rows;
    rows.reserve(entries.size());
    for (const auto& row : entries) {
        if (!row.is_array() || static_cast<int>(row.size()) != n)
            throw ParseError("every row of \"entries\" must hold n integers");
        rows.push_back(row.get<std::vector<Int>>());
    }
    return IntMatrix::from_rows(rows);
}

nlohmann::json matrix_to_json(const IntMatrix& m) {
    nlohmann::json rows = nlohmann::json::array();
    for (int i = 0; i < m.size(); ++i) {
        nlohmann::json row = nlohmann::json::array();
        for (int j = 0; j < m.size(); ++j) row.push_back(m(i, j));
        rows.push_back(std::move(row));
    }
    return nlohmann::json{{"n", m.size()}, {"entries", std::move(rows)}};
}

IntMatrix read_matrix_any(std::istream& in) {
    int c = in.peek();
    while (c == ' ' || c == '\t' || c == '\n' || c == '\r') {
        in.get();
        c = in.peek();
    }
    if (c == '{' || c == '[') {
        nlohmann::json j;
        try {
            in >> j;
        } catch (const nlohmann::json::exception& ex) {
            throw ParseError(std::string("bad structured matrix: ") + ex.what());
        }
        if (j.is_array()) {
            if (j.empty()) throw ParseError("empty matrix list");
            return matrix_from_json(j.front());
        }
        return matrix_from_json(j);
    }
    auto m = read_matrix_text(in);
    if (!m) throw ParseError("no matrix in input");
    return *m;
}

std::vector<IntMatrix> read_matrix_list(std::istream& in) {
    int c = in.peek();
    while (c == ' ' || c == '\t' || c == '\n' || c == '\r') {
        in.get();
        c = in.peek();
    }
    std::vector<IntMatrix> out;
    if (c == '{' || c == '[') {
        nlohmann::json j;
        try {
            in >> j;
        } catch (const nlohmann::json::exception& ex) {
            throw ParseError(std::string("bad structured matrix list: ") + ex.what());
        }
        if (j.is_object()) {
            out.push_back(matrix_from_json(j));
        } else {
            for (const auto& el : j) out.push_back(matrix_from_json(el));
        }
        return out;
    }
    while (auto m = read_matrix_text(in)) out.push_back(std::move(*m));
    if (out.empty()) throw ParseError("no matrix in input");
    return out;
}

void write_matrix_text(std::ostream& out, const IntMatrix& m) {
    for (int i = 0; i < m.size(); ++i) {
        for (int j = 0; j < m.size(); ++j) {
            if (j) out << ' ';
            out << m(i, j);
        }
        out << '\n';
    }
}

std::string matrix_to_text(const IntMatrix& m) {
    std::ostringstream ss;
    write_matrix_text(ss, m);
    return ss.str();
}

}  // namespace asmg
