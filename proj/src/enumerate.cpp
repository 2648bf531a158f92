#include "asmg/enumerate.hpp"

#include <algorithm>
#include <unordered_map>
#include <utility>

namespace asmg {

namespace {

/// An admissible row as a pair of bitmasks over the columns. A row is
/// compatible with the column-prefix state s (bit j set <=> column j prefix
/// sum is 1) iff its +1s sit on zero columns and its -1s on one columns; it
/// then flips exactly those bits.
struct RowCandidate {
    std::uint32_t plus;
    std::uint32_t minus;
};

/// All {-1,0,1} rows whose own prefix sums stay in {0,1} and total 1, in the
/// enumeration's canonical order (entry order -1 < 0 < +1 at each position).
std::vector<RowCandidate> candidate_rows(int n) {
    std::vector<RowCandidate> out;
    std::function<void(int, int, std::uint32_t, std::uint32_t)> rec =
        [&](int pos, int pref, std::uint32_t plus, std::uint32_t minus) {
            if (pos == n) {
                if (pref == 1) out.push_back({plus, minus});
                return;
            }
            const std::uint32_t bit = 1u << pos;
            if (pref - 1 >= 0) rec(pos + 1, pref - 1, plus, minus | bit);
            rec(pos + 1, pref, plus, minus);
            if (pref + 1 <= 1) rec(pos + 1, pref + 1, plus | bit, minus);
        };
    rec(0, 0, 0, 0);
    return out;
}

IntMatrix materialize(int n, const std::vector<RowCandidate>& stack) {
    IntMatrix m(n);
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            const std::uint32_t bit = 1u << j;
            if (stack[static_cast<std::size_t>(i)].plus & bit)
                m(i, j) = 1;
            else if (stack[static_cast<std::size_t>(i)].minus & bit)
                m(i, j) = -1;
        }
    }
    return m;
}

/// Depth-first search below a fixed row prefix. The column-prefix constraint
/// is the ASM condition itself, so there are no dead branches: at the final
/// row exactly one column prefix is still 0 and the forced completion is
/// always a valid row.
template <typename Visit>
void dfs_from(int n, const std::vector<RowCandidate>& rows, std::vector<RowCandidate>& stack,
              std::uint32_t state, Visit&& visit) {
    const int depth = static_cast<int>(stack.size());
    if (depth == n - 1) {
        const std::uint32_t mask = (n == 32) ? ~0u : ((1u << n) - 1);
        stack.push_back({~state & mask, 0});
        visit(materialize(n, stack));
        stack.pop_back();
        return;
    }
    for (const auto& r : rows) {
        if ((r.plus & state) != 0) continue;
        if ((r.minus & ~state) != 0) continue;
        stack.push_back(r);
        dfs_from(n, rows, stack, state ^ r.plus ^ r.minus, visit);
        stack.pop_back();
    }
}

struct Prefix {
    std::vector<RowCandidate> rows;
    std::uint32_t state;
};

/// Leading-row assignments in enumeration order; sharding the scan over these
/// preserves the serial visiting order after an in-order merge.
std::vector<Prefix> shard_prefixes(int n, int depth) {
    const auto rows = candidate_rows(n);
    std::vector<Prefix> prefixes;
    std::vector<RowCandidate> stack;
    std::function<void(std::uint32_t)> rec = [&](std::uint32_t state) {
        if (static_cast<int>(stack.size()) == depth) {
            prefixes.push_back({stack, state});
            return;
        }
        for (const auto& r : rows) {
            if ((r.plus & state) != 0 || (r.minus & ~state) != 0) continue;
            stack.push_back(r);
            rec(state ^ r.plus ^ r.minus);
            stack.pop_back();
        }
    };
    rec(0);
    return prefixes;
}

void guard_scan_size(int n) {
    if (n < 1) throw std::invalid_argument("enumeration size must be >= 1");
    if (n > kMaxEnumerationSize)
        throw ResourceGuardError("enumeration beyond n = " +
                                 std::to_string(kMaxEnumerationSize) + " is refused");
}

/// Per-shard accumulation of everything the reports need.
struct ShardTally {
    std::uint64_t total = 0;
    std::uint64_t singular = 0;
    std::uint64_t bounded = 0;
    std::vector<FiniteOrderElement> finite;

    void absorb(ShardTally&& other) {
        total += other.total;
        singular += other.singular;
        bounded += other.bounded;
        finite.insert(finite.end(), std::make_move_iterator(other.finite.begin()),
                      std::make_move_iterator(other.finite.end()));
    }
};

void tally_one(const IntMatrix& m, ShardTally& t) {
    ++t.total;
    if (rank(m) == m.size()) return;
    ++t.singular;
    auto verdict = detect_asm_cycle_order(m);
    if (verdict.cap_exceeded) ++t.bounded;
    if (verdict.info)
        t.finite.push_back(FiniteOrderElement{Asm::from(m), std::move(*verdict.info)});
}

/// Runs the classification scan; jobs > 1 shards the DFS by its first two
/// rows across OpenMP threads. Shards share no mutable state and are merged
/// in prefix order, so the outcome is bit-identical to the serial scan.
ShardTally scan(int n, int jobs) {
    guard_scan_size(n);
    const auto rows = candidate_rows(n);
    if (jobs <= 1 || n < 4) {
        ShardTally t;
        std::vector<RowCandidate> stack;
        if (n == 1) {
            tally_one(IntMatrix::identity(1), t);
            return t;
        }
        dfs_from(n, rows, stack, 0, [&](const IntMatrix& m) { tally_one(m, t); });
        return t;
    }
    const auto prefixes = shard_prefixes(n, 2);
    std::vector<ShardTally> parts(prefixes.size());
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic, 1) num_threads(jobs)
#endif
    for (std::size_t i = 0; i < prefixes.size(); ++i) {
        std::vector<RowCandidate> stack = prefixes[i].rows;
        dfs_from(n, rows, stack, prefixes[i].state,
                 [&](const IntMatrix& m) { tally_one(m, parts[i]); });
    }
    ShardTally merged;
    for (auto& p : parts) merged.absorb(std::move(p));
    return merged;
}

}  // namespace

void for_each_asm(int n, const std::function<void(const IntMatrix&)>& visit) {
    guard_scan_size(n);
    if (n == 1) {
        visit(IntMatrix::identity(1));
        return;
    }
    const auto rows = candidate_rows(n);
    std::vector<RowCandidate> stack;
    dfs_from(n, rows, stack, 0, visit);
}

std::uint64_t count_asms(int n, int jobs) { return scan(n, jobs).total; }

std::vector<FiniteOrderElement> collect_finite_order(int n, int jobs) {
    return std::move(scan(n, jobs).finite);
}

ClassificationReport classify(int n, int jobs) {
    ShardTally t = scan(n, jobs);
    ClassificationReport r;
    r.n = n;
    r.total_asm_count = t.total;
    r.singular_count = t.singular;
    r.bounded_verdicts = t.bounded;
    for (const auto& el : t.finite) {
        ++r.order_counts[el.info.order];
        ++r.negatives_by_order[el.info.order][negative_entry_count(el.matrix)];
        if (el.info.order == 1) {
            ++r.idempotent_count;
            if (n <= 7) r.idempotents.push_back(el.matrix);
        }
    }
    return r;
}

std::vector<IdempotentRecord> idempotent_census(int n, int jobs) {
    if (n > kMaxAtlasSize)
        throw ResourceGuardError("idempotent census beyond n = " +
                                 std::to_string(kMaxAtlasSize) + " is refused");
    std::vector<IdempotentRecord> out;
    for (const auto& el : collect_finite_order(n, jobs)) {
        if (el.info.order != 1) continue;
        auto rf = reduced_form(el.matrix);
        out.push_back(IdempotentRecord{el.matrix, std::move(rf.reduced),
                                       std::move(rf.deleted_indices), el.info.nullity});
    }
    std::sort(out.begin(), out.end(), [](const IdempotentRecord& a, const IdempotentRecord& b) {
        return a.matrix < b.matrix;
    });
    return out;
}

namespace {

/// Closes a seed set inside one identity class; nullopt when a product leaves
/// the class or the subgroup would exceed the bound.
std::optional<std::vector<int>> close_in_class(std::vector<int> seed,
                                               const std::vector<std::vector<int>>& prod,
                                               int max_size) {
    std::vector<char> in(prod.size(), 0);
    std::vector<int> members;
    std::vector<int> work = std::move(seed);
    for (int x : work) {
        if (!in[static_cast<std::size_t>(x)]) {
            in[static_cast<std::size_t>(x)] = 1;
            members.push_back(x);
        }
    }
    for (std::size_t next = 0; next < members.size(); ++next) {
        for (std::size_t j = 0; j <= next; ++j) {
            for (auto [a, b] : {std::pair{members[next], members[j]},
                                std::pair{members[j], members[next]}}) {
                const int p = prod[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)];
                if (p < 0) return std::nullopt;
                if (!in[static_cast<std::size_t>(p)]) {
                    in[static_cast<std::size_t>(p)] = 1;
                    members.push_back(p);
                    if (static_cast<int>(members.size()) > max_size) return std::nullopt;
                }
            }
        }
    }
    std::sort(members.begin(), members.end());
    return members;
}

}  // namespace

GroupAtlas group_atlas(int n, int max_group_size, int jobs) {
    if (n > kMaxAtlasSize)
        throw ResourceGuardError("group atlas beyond n = " + std::to_string(kMaxAtlasSize) +
                                 " is refused");
    auto finite = collect_finite_order(n, jobs);

    GroupAtlas atlas;
    atlas.n = n;

    // identity classes, deterministically ordered by identity matrix
    std::map<IntMatrix, std::vector<const FiniteOrderElement*>> classes;
    for (const auto& el : finite) classes[el.info.identity].push_back(&el);

    for (const auto& [identity, members_ptrs] : classes) {
        std::vector<IntMatrix> members;
        members.reserve(members_ptrs.size());
        for (auto* el : members_ptrs) members.push_back(el->matrix.matrix());
        std::sort(members.begin(), members.end());

        std::unordered_map<IntMatrix, int, MatrixHash> index;
        for (std::size_t i = 0; i < members.size(); ++i)
            index.emplace(members[i], static_cast<int>(i));
        const int m = static_cast<int>(members.size());
        // partial product table: -1 when a product leaves the class
        std::vector<std::vector<int>> prod(static_cast<std::size_t>(m),
                                           std::vector<int>(static_cast<std::size_t>(m), -1));
        for (int i = 0; i < m; ++i)
            for (int j = 0; j < m; ++j) {
                auto it = index.find(multiply(members[static_cast<std::size_t>(i)],
                                              members[static_cast<std::size_t>(j)]));
                if (it != index.end())
                    prod[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = it->second;
            }
        const int e = index.at(identity);

        // grow subgroups: cyclic seeds first, then adjoin outside elements
        std::set<std::vector<int>> subgroups;
        for (int x = 0; x < m; ++x)
            if (auto s = close_in_class({e, x}, prod, max_group_size)) subgroups.insert(*s);
        bool grew = true;
        while (grew) {
            grew = false;
            for (const auto& s : std::vector(subgroups.begin(), subgroups.end())) {
                for (int y = 0; y < m; ++y) {
                    if (std::binary_search(s.begin(), s.end(), y)) continue;
                    auto seed = s;
                    seed.push_back(y);
                    if (auto t = close_in_class(std::move(seed), prod, max_group_size))
                        grew |= subgroups.insert(*t).second;
                }
            }
        }

        for (const auto& s : subgroups) {
            atlas.subgroup_orders.insert(static_cast<int>(s.size()));
            atlas.max_group_order = std::max(atlas.max_group_order, static_cast<int>(s.size()));
            bool abelian = true;
            for (std::size_t i = 0; i < s.size() && abelian; ++i)
                for (std::size_t j = i + 1; j < s.size() && abelian; ++j)
                    abelian = prod[static_cast<std::size_t>(s[i])][static_cast<std::size_t>(s[j])] ==
                              prod[static_cast<std::size_t>(s[j])][static_cast<std::size_t>(s[i])];
            if (!abelian) atlas.nonabelian_subgroup_orders.insert(static_cast<int>(s.size()));
        }
        for (const auto& s : subgroups) {
            const bool maximal = std::none_of(subgroups.begin(), subgroups.end(),
                                              [&](const std::vector<int>& t) {
                                                  return t.size() > s.size() &&
                                                         std::includes(t.begin(), t.end(),
                                                                       s.begin(), s.end());
                                              });
            if (!maximal) continue;
            std::vector<IntMatrix> elems;
            elems.reserve(s.size());
            for (int i : s) elems.push_back(members[static_cast<std::size_t>(i)]);
            atlas.maximal_groups.push_back(SingularGroup::from_elements(std::move(elems)));
        }
    }

    std::sort(atlas.maximal_groups.begin(), atlas.maximal_groups.end(),
              [](const SingularGroup& a, const SingularGroup& b) {
                  if (a.order() != b.order()) return a.order() > b.order();
                  return a.elements() < b.elements();
              });
    return atlas;
}

std::vector<SquareRootEntry> square_root_census(int n, int jobs) {
    if (n > kMaxAtlasSize)
        throw ResourceGuardError("square-root census beyond n = " +
                                 std::to_string(kMaxAtlasSize) + " is refused");
    auto finite = collect_finite_order(n, jobs);
    std::map<Asm, std::vector<Asm>> table;
    for (const auto& el : finite)
        if (el.info.order == 1) table.emplace(el.matrix, std::vector<Asm>{});
    for (const auto& el : finite) {
        if (el.info.order != 2) continue;
        auto square = Asm::from(el.info.identity);
        table.at(square).push_back(el.matrix);
    }
    std::vector<SquareRootEntry> out;
    out.reserve(table.size());
    for (auto& [idem, roots] : table) {
        std::sort(roots.begin(), roots.end());
        out.push_back(SquareRootEntry{idem, std::move(roots)});
    }
    return out;
}

}  // namespace asmg
