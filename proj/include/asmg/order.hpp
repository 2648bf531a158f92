#pragma once

#include <optional>
#include <vector>

#include "asmg/asm_matrix.hpp"
#include "asmg/matrix.hpp"

namespace asmg {

/// A has finite multiplicative order k when k is minimal with A^{k+1} = A.
/// Order 1 means idempotent. The identity of the cycle is A^k, an idempotent
/// that need not be the identity matrix (and need not be an ASM).
struct FiniteOrderInfo {
    int order;
    IntMatrix identity;  // A^order
    int rank;            // rank of A (shared by the whole cycle)
    int nullity;
    std::vector<IntMatrix> powers;  // [A, A^2, ..., A^order]
};

enum class NoFiniteOrderReason {
    /// Some later power recurred without the sequence returning to A.
    /// This is a proof: eventual periodicity that excludes A rules out A^{k+1}=A.
    repeat_not_at_start,
    /// An entry magnitude exceeded the configured bound.
    magnitude_exceeded,
    /// The iteration count exceeded the configured cap.
    cap_exceeded,
};

class OrderVerdict {
public:
    static OrderVerdict finite(FiniteOrderInfo info) { return OrderVerdict(std::move(info)); }
    static OrderVerdict none(NoFiniteOrderReason r) { return OrderVerdict(r); }

    bool is_finite() const { return info_.has_value(); }
    const FiniteOrderInfo& info() const { return *info_; }
    NoFiniteOrderReason reason() const { return *reason_; }

private:
    explicit OrderVerdict(FiniteOrderInfo i) : info_(std::move(i)) {}
    explicit OrderVerdict(NoFiniteOrderReason r) : reason_(r) {}
    std::optional<FiniteOrderInfo> info_;
    std::optional<NoFiniteOrderReason> reason_;
};

struct OrderBounds {
    int cap = 64;
    Int magnitude_bound = 1'000'000'000;
};

/// Iterates powers with a seen-set keyed by the row-major entry encoding.
/// An integer matrix whose powers never repeat must have unbounded entries,
/// so the magnitude bound converts "no finite order" into a fast verdict.
OrderVerdict detect_order(const IntMatrix& a, OrderBounds bounds = {});

struct AsmCycleVerdict {
    /// Engaged iff an all-ASM power cycle returning to a was found.
    std::optional<FiniteOrderInfo> info;
    /// Neither resolved nor excluded within the cap (surfaced as a warning by
    /// the classification report; does not occur at the default cap for n <= 8).
    bool cap_exceeded = false;
};

/// Order of a within the multiplicative world of ASMs: the minimal k with
/// A^{k+1} = A such that every power A, A^2, ..., A^k is an ASM, which is exactly the
/// condition for a singular ASM to generate a cyclic group of ASMs. Powers
/// that leave the ASM class or recur away from a end the search immediately;
/// a matrix of finite order whose cycle strays outside the ASM class gets no
/// info here even though detect_order reports it as finite.
AsmCycleVerdict detect_asm_cycle_order(const IntMatrix& a, int cap = 64);

bool is_idempotent(const IntMatrix& a);

int nullity(const IntMatrix& a);

/// Exact rational row-space comparison: spaces coincide iff each matrix's rank
/// equals the rank of the two row sets stacked together.
bool same_rowspace(const IntMatrix& a, const IntMatrix& b);
bool same_columnspace(const IntMatrix& a, const IntMatrix& b);

}  // namespace asmg
