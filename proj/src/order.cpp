#include "asmg/order.hpp"

#include <unordered_set>
#include <utility>

namespace asmg {

OrderVerdict detect_order(const IntMatrix& a, OrderBounds bounds) {
    if (bounds.cap < 1) throw std::invalid_argument("order cap must be >= 1");
    std::vector<IntMatrix> powers{a};
    std::unordered_set<IntMatrix, MatrixHash> seen{a};
    for (int k = 1; k <= bounds.cap; ++k) {
        IntMatrix next = multiply(powers.back(), a);
        if (max_abs_entry(next) > bounds.magnitude_bound)
            return OrderVerdict::none(NoFiniteOrderReason::magnitude_exceeded);
        if (next == a) {
            const int r = rank(a);
            return OrderVerdict::finite(
                FiniteOrderInfo{k, powers.back(), r, a.size() - r, std::move(powers)});
        }
        if (seen.contains(next))
            return OrderVerdict::none(NoFiniteOrderReason::repeat_not_at_start);
        seen.insert(next);
        powers.push_back(std::move(next));
    }
    return OrderVerdict::none(NoFiniteOrderReason::cap_exceeded);
}

AsmCycleVerdict detect_asm_cycle_order(const IntMatrix& a, int cap) {
    std::vector<IntMatrix> powers{a};
    for (int k = 1; k <= cap; ++k) {
        IntMatrix next = multiply(powers.back(), a);
        if (!is_asm(next)) return {};
        if (next == a) {
            const int r = rank(a);
            return {FiniteOrderInfo{k, powers.back(), r, a.size() - r, std::move(powers)}, false};
        }
        for (const auto& p : powers)
            if (p == next) return {};  // periodic away from a
        powers.push_back(std::move(next));
    }
    return {std::nullopt, true};
}

bool is_idempotent(const IntMatrix& a) { return multiply(a, a) == a; }

int nullity(const IntMatrix& a) { return a.size() - rank(a); }

namespace {

bool same_span(std::vector<std::vector<Int>> ra, std::vector<std::vector<Int>> rb) {
    const int rank_a = detail::rank_rows(ra);
    const int rank_b = detail::rank_rows(rb);
    if (rank_a != rank_b) return false;
    std::vector<std::vector<Int>> stacked = std::move(ra);
    stacked.insert(stacked.end(), rb.begin(), rb.end());
    return detail::rank_rows(std::move(stacked)) == rank_a;
}

std::vector<std::vector<Int>> row_list(const IntMatrix& m) {
    std::vector<std::vector<Int>> rows(static_cast<std::size_t>(m.size()));
    for (int i = 0; i < m.size(); ++i)
        rows[static_cast<std::size_t>(i)].assign(m.row(i).begin(), m.row(i).end());
    return rows;
}

}  // namespace

bool same_rowspace(const IntMatrix& a, const IntMatrix& b) {
    if (a.size() != b.size())
        throw std::invalid_argument("dimension mismatch in rowspace comparison");
    return same_span(row_list(a), row_list(b));
}

bool same_columnspace(const IntMatrix& a, const IntMatrix& b) {
    return same_rowspace(transpose(a), transpose(b));
}

}  // namespace asmg
