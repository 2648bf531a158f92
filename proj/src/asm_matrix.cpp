#include "asmg/asm_matrix.hpp"

#include <algorithm>
#include <utility>

namespace asmg {

std::string AsmViolation::describe() const {
    switch (kind) {
        case Kind::entry_out_of_range:
            return "entry outside {-1,0,1} at row " + std::to_string(row) + ", column " + std::to_string(col);
        case Kind::row_prefix:
            return "row " + std::to_string(row) + " prefix sum leaves {0,1} at column " + std::to_string(col);
        case Kind::row_sum:
            return "row " + std::to_string(row) + " does not sum to 1";
        case Kind::column_prefix:
            return "column " + std::to_string(col) + " prefix sum leaves {0,1} at row " + std::to_string(row);
        case Kind::column_sum:
            return "column " + std::to_string(col) + " does not sum to 1";
    }
    return "unknown violation";
}

std::optional<AsmViolation> first_asm_violation(const IntMatrix& m) {
    const int n = m.size();
    for (int i = 0; i < n; ++i) {
        Int s = 0;
        for (int j = 0; j < n; ++j) {
            const Int v = m(i, j);
            if (v < -1 || v > 1)
                return AsmViolation{AsmViolation::Kind::entry_out_of_range, i + 1, j + 1};
            s += v;
            if (s != 0 && s != 1)
                return AsmViolation{AsmViolation::Kind::row_prefix, i + 1, j + 1};
        }
        if (s != 1) return AsmViolation{AsmViolation::Kind::row_sum, i + 1, 0};
    }
    for (int j = 0; j < n; ++j) {
        Int s = 0;
        for (int i = 0; i < n; ++i) {
            s += m(i, j);
            if (s != 0 && s != 1)
                return AsmViolation{AsmViolation::Kind::column_prefix, i + 1, j + 1};
        }
        if (s != 1) return AsmViolation{AsmViolation::Kind::column_sum, 0, j + 1};
    }
    return std::nullopt;
}

bool is_asm(const IntMatrix& m) { return !first_asm_violation(m).has_value(); }

Asm Asm::from(IntMatrix m) {
    if (auto v = first_asm_violation(m))
        throw std::invalid_argument("not an alternating sign matrix: " + v->describe());
    return Asm(std::move(m));
}

std::optional<Asm> Asm::try_from(IntMatrix m) {
    if (is_asm(m)) return Asm(std::move(m));
    return std::nullopt;
}

Asm transpose(const Asm& a) { return Asm::from(transpose(a.matrix())); }

namespace {

bool trivial_diagonal(const IntMatrix& m, int i) {
    if (m(i, i) != 1) return false;
    for (int j = 0; j < m.size(); ++j) {
        if (j == i) continue;
        if (m(i, j) != 0 || m(j, i) != 0) return false;
    }
    return true;
}

IntMatrix delete_row_col(const IntMatrix& m, int k) {
    IntMatrix out(m.size() - 1);
    for (int i = 0, oi = 0; i < m.size(); ++i) {
        if (i == k) continue;
        for (int j = 0, oj = 0; j < m.size(); ++j) {
            if (j == k) continue;
            out(oi, oj) = m(i, j);
            ++oj;
        }
        ++oi;
    }
    return out;
}

}  // namespace

bool is_reduced_form(const Asm& a) {
    const auto& m = a.matrix();
    for (int i = 0; i < m.size(); ++i) {
        if (m(i, i) != 1) continue;
        bool has_negative = false;
        for (int j = 0; j < m.size() && !has_negative; ++j)
            if (m(i, j) == -1 || m(j, i) == -1) has_negative = true;
        if (!has_negative) return false;
    }
    return true;
}

ReducedFormResult reduced_form(const Asm& a) {
    IntMatrix cur = a.matrix();
    std::vector<int> alive(static_cast<std::size_t>(cur.size()));
    for (int i = 0; i < cur.size(); ++i) alive[static_cast<std::size_t>(i)] = i + 1;
    std::vector<int> deleted;
    bool changed = true;
    while (changed) {
        changed = false;
        for (int i = 0; i < cur.size(); ++i) {
            if (trivial_diagonal(cur, i)) {
                deleted.push_back(alive[static_cast<std::size_t>(i)]);
                alive.erase(alive.begin() + i);
                cur = delete_row_col(cur, i);
                changed = true;
                break;
            }
        }
    }
    std::sort(deleted.begin(), deleted.end());
    return ReducedFormResult{Asm::from(std::move(cur)), std::move(deleted)};
}

Asm diagonal_extension(const Asm& a, std::span<const int> insert_positions) {
    const int n = a.size();
    const int k = static_cast<int>(insert_positions.size());
    const int out_n = n + k;
    std::vector<char> inserted(static_cast<std::size_t>(out_n) + 1, 0);
    int prev = 0;
    for (int p : insert_positions) {
        if (p < 1 || p > out_n || p <= prev)
            throw std::invalid_argument("insert positions must be sorted, distinct and within the extended size");
        inserted[static_cast<std::size_t>(p)] = 1;
        prev = p;
    }
    // map surviving output indices onto the original rows/columns, in order
    std::vector<int> src(static_cast<std::size_t>(out_n), -1);
    int next = 0;
    for (int i = 1; i <= out_n; ++i)
        if (!inserted[static_cast<std::size_t>(i)]) src[static_cast<std::size_t>(i) - 1] = next++;
    IntMatrix out(out_n);
    for (int i = 0; i < out_n; ++i) {
        if (src[static_cast<std::size_t>(i)] < 0) {
            out(i, i) = 1;
            continue;
        }
        for (int j = 0; j < out_n; ++j)
            if (src[static_cast<std::size_t>(j)] >= 0)
                out(i, j) = a.matrix()(src[static_cast<std::size_t>(i)], src[static_cast<std::size_t>(j)]);
    }
    return Asm::from(std::move(out));
}

int negative_entry_count(const Asm& a) {
    int c = 0;
    for (Int v : a.matrix().data())
        if (v == -1) ++c;
    return c;
}

}  // namespace asmg
