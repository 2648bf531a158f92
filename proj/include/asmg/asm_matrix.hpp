#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "asmg/matrix.hpp"

namespace asmg {

/// Names the first violated alternating-sign condition, for diagnostics.
/// Indices are 1-based; a prefix violation reports the cell where the running
/// prefix sum first left {0,1}, a sum violation the row/column whose total is not 1.
struct AsmViolation {
    enum class Kind { entry_out_of_range, row_prefix, row_sum, column_prefix, column_sum };
    Kind kind;
    int row = 0;
    int col = 0;
    std::string describe() const;
};

bool is_asm(const IntMatrix& m);
std::optional<AsmViolation> first_asm_violation(const IntMatrix& m);

/// An IntMatrix validated against the alternating-sign conditions: every
/// row/column prefix sum is 0 or 1 and every full row/column sums to 1.
/// The 0x0 matrix is admitted as the (empty) ASM.
class Asm {
public:
    /// Validates; throws std::invalid_argument naming the first violation.
    static Asm from(IntMatrix m);
    static std::optional<Asm> try_from(IntMatrix m);

    const IntMatrix& matrix() const { return m_; }
    int size() const { return m_.size(); }

    friend bool operator==(const Asm&, const Asm&) = default;
    friend auto operator<=>(const Asm&, const Asm&) = default;

private:
    explicit Asm(IntMatrix m) : m_(std::move(m)) {}
    IntMatrix m_;
};

Asm transpose(const Asm& a);

/// True iff every diagonal 1 has a negative entry somewhere in its row or column.
bool is_reduced_form(const Asm& a);

struct ReducedFormResult {
    Asm reduced;
    /// Deleted diagonal positions in the coordinates of the original matrix,
    /// sorted ascending; diagonal_extension(reduced, deleted_indices)
    /// reconstructs the original exactly.
    std::vector<int> deleted_indices;
};

/// Repeatedly deletes rows/columns whose only nonzero is a diagonal +1 with an
/// otherwise empty row and column. The result is the unique reduced form.
ReducedFormResult reduced_form(const Asm& a);

/// Inserts, at each 1-based target index of the extended matrix, a new row and
/// column whose only nonzero entry is +1 on the diagonal. insert_positions must
/// be sorted, duplicate-free and within 1..(a.size()+count).
Asm diagonal_extension(const Asm& a, std::span<const int> insert_positions);

int negative_entry_count(const Asm& a);

}  // namespace asmg
