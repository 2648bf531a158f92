#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <set>
#include <stdexcept>
#include <vector>

#include "asmg/asm_matrix.hpp"
#include "asmg/group.hpp"
#include "asmg/order.hpp"

namespace asmg {

/// Thrown when an enumeration request exceeds the configured size guards.
class ResourceGuardError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

inline constexpr int kMaxEnumerationSize = 8;  // full scans
inline constexpr int kMaxAtlasSize = 7;        // group atlas / censuses

/// Serial reference enumeration: visits every n x n ASM exactly once, in a
/// deterministic order (lexicographic by row choices, rows ordered by their
/// -1/0/+1 entries). Kept alongside the sharded kernel as its test oracle.
void for_each_asm(int n, const std::function<void(const IntMatrix&)>& visit);

/// Number of n x n ASMs by exhaustive generation (jobs > 1 shards the search).
std::uint64_t count_asms(int n, int jobs = 1);

struct FiniteOrderElement {
    Asm matrix;
    FiniteOrderInfo info;
};

/// Every singular n x n ASM generating a cyclic group of ASMs, with its order
/// data, in deterministic enumeration order.
std::vector<FiniteOrderElement> collect_finite_order(int n, int jobs = 1);

struct ClassificationReport {
    int n = 0;
    std::uint64_t total_asm_count = 0;
    std::uint64_t singular_count = 0;
    /// order -> number of singular ASMs of that order (ASM power cycles).
    std::map<int, std::uint64_t> order_counts;
    std::uint64_t idempotent_count = 0;
    std::vector<Asm> idempotents;  // retained for n <= 7
    /// order -> (negative entry count -> number of matrices).
    std::map<int, std::map<int, std::uint64_t>> negatives_by_order;
    /// Singular ASMs whose order search hit the iteration cap (warning; zero
    /// at the default cap for n <= 8).
    std::uint64_t bounded_verdicts = 0;

    friend bool operator==(const ClassificationReport&, const ClassificationReport&) = default;
};

/// Full scan of SA_n: totals, per-order counts, idempotent census. jobs > 1
/// runs the search sharded across threads with a deterministic merge; the
/// result is identical to the serial run.
ClassificationReport classify(int n, int jobs = 1);

struct IdempotentRecord {
    Asm matrix;
    Asm reduced;
    std::vector<int> deleted_indices;
    int nullity;
};

/// All idempotent singular ASMs of size n with their reduced-form attribution.
std::vector<IdempotentRecord> idempotent_census(int n, int jobs = 1);

struct GroupAtlas {
    int n = 0;
    /// Maximal multiplicative groups of singular ASMs, one entry per maximal
    /// closed subset of an identity class, deterministically ordered.
    std::vector<SingularGroup> maximal_groups;
    /// Orders of all groups of singular ASMs of size n (every subgroup found
    /// while growing the maximal ones).
    std::set<int> subgroup_orders;
    std::set<int> nonabelian_subgroup_orders;
    int max_group_order = 0;
};

/// Partitions the finite-order singular ASMs by identity and extracts every
/// maximal multiplication-closed subset containing the identity.
GroupAtlas group_atlas(int n, int max_group_size = 256, int jobs = 1);

struct SquareRootEntry {
    Asm idempotent;
    std::vector<Asm> roots;  // order-2 singular ASMs squaring to the idempotent
};

/// For each idempotent, the order-2 singular ASMs whose square it is.
std::vector<SquareRootEntry> square_root_census(int n, int jobs = 1);

}  // namespace asmg
