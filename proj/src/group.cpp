#include "asmg/group.hpp"

#include <algorithm>
#include <unordered_map>
#include <utility>

namespace asmg {

namespace {

std::unordered_map<IntMatrix, int, MatrixHash> index_of(const std::vector<IntMatrix>& elems) {
    std::unordered_map<IntMatrix, int, MatrixHash> idx;
    idx.reserve(elems.size());
    for (std::size_t i = 0; i < elems.size(); ++i) idx.emplace(elems[i], static_cast<int>(i));
    return idx;
}

struct BuildResult {
    std::vector<IntMatrix> elements;
    std::vector<std::vector<int>> cayley;
    int identity = -1;
    std::vector<int> generators;
};

/// Sorts and validates; nullopt reasons: not closed -> not_a_group is decided
/// by the caller, so this reports the precise failure instead.
std::variant<BuildResult, ClosureError> build_group(std::vector<IntMatrix> elements,
                                                    const std::vector<IntMatrix>& gens) {
    std::sort(elements.begin(), elements.end());
    elements.erase(std::unique(elements.begin(), elements.end()), elements.end());
    const int n = static_cast<int>(elements.size());
    auto idx = index_of(elements);

    BuildResult r;
    r.cayley.assign(static_cast<std::size_t>(n), std::vector<int>(static_cast<std::size_t>(n), -1));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            auto it = idx.find(multiply(elements[static_cast<std::size_t>(i)],
                                        elements[static_cast<std::size_t>(j)]));
            if (it == idx.end()) return ClosureError::not_a_group;
            r.cayley[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = it->second;
        }
    for (int e = 0; e < n && r.identity < 0; ++e) {
        bool two_sided = true;
        for (int x = 0; x < n && two_sided; ++x)
            two_sided = r.cayley[static_cast<std::size_t>(e)][static_cast<std::size_t>(x)] == x &&
                        r.cayley[static_cast<std::size_t>(x)][static_cast<std::size_t>(e)] == x;
        if (two_sided) r.identity = e;
    }
    if (r.identity < 0) return ClosureError::no_identity;
    for (int x = 0; x < n; ++x) {
        int cur = x;
        bool reaches_identity = false;
        for (int step = 0; step < n; ++step) {
            if (cur == r.identity) {
                reaches_identity = true;
                break;
            }
            cur = r.cayley[static_cast<std::size_t>(cur)][static_cast<std::size_t>(x)];
        }
        if (!reaches_identity) return ClosureError::not_a_group;
    }
    for (const auto& m : gens) r.generators.push_back(idx.at(m));
    std::sort(r.generators.begin(), r.generators.end());
    r.generators.erase(std::unique(r.generators.begin(), r.generators.end()), r.generators.end());
    r.elements = std::move(elements);
    return r;
}

}  // namespace

SingularGroup SingularGroup::from_elements(std::vector<IntMatrix> elements,
                                           std::vector<int> generator_indices) {
    if (elements.empty()) throw std::invalid_argument("a group needs at least one element");
    std::vector<IntMatrix> gens;
    gens.reserve(generator_indices.size());
    for (int gi : generator_indices) gens.push_back(elements.at(static_cast<std::size_t>(gi)));
    auto built = build_group(std::move(elements), gens);
    if (std::holds_alternative<ClosureError>(built))
        throw std::invalid_argument(describe(std::get<ClosureError>(built)));
    auto& r = std::get<BuildResult>(built);
    SingularGroup g;
    g.elements_ = std::move(r.elements);
    g.cayley_ = std::move(r.cayley);
    g.identity_ = r.identity;
    g.generators_ = std::move(r.generators);
    return g;
}

bool SingularGroup::all_elements_asm() const {
    return std::all_of(elements_.begin(), elements_.end(),
                       [](const IntMatrix& m) { return is_asm(m); });
}

int SingularGroup::element_order(int i) const {
    int cur = i, k = 1;
    while (cur != identity_) {
        cur = product_index(cur, i);
        ++k;
    }
    return k;
}

const char* describe(ClosureError e) {
    switch (e) {
        case ClosureError::exceeded_max_size: return "closure exceeds the configured maximum size";
        case ClosureError::no_identity: return "element set has no two-sided identity";
        case ClosureError::not_a_group: return "element set is not a group (not closed, or an element has no inverse power)";
    }
    return "unknown closure failure";
}

std::variant<SingularGroup, ClosureError> closure(std::span<const IntMatrix> generators,
                                                  int max_size) {
    if (generators.empty()) throw std::invalid_argument("closure needs at least one generator");
    const int n = generators.front().size();
    for (const auto& g : generators)
        if (g.size() != n) throw std::invalid_argument("closure generators must share one size");

    std::vector<IntMatrix> elems;
    std::unordered_map<IntMatrix, int, MatrixHash> seen;
    auto push = [&](IntMatrix m) {
        if (seen.emplace(m, static_cast<int>(elems.size())).second) elems.push_back(std::move(m));
    };
    for (const auto& g : generators) push(g);

    for (std::size_t next = 0; next < elems.size(); ++next) {
        for (std::size_t j = 0; j <= next; ++j) {
            push(multiply(elems[next], elems[j]));
            push(multiply(elems[j], elems[next]));
            if (static_cast<int>(elems.size()) > max_size) return ClosureError::exceeded_max_size;
        }
    }

    std::vector<IntMatrix> gens(generators.begin(), generators.end());
    auto built = build_group(std::move(elems), gens);
    if (std::holds_alternative<ClosureError>(built)) return std::get<ClosureError>(built);
    auto& r = std::get<BuildResult>(built);
    SingularGroup g;
    g.elements_ = std::move(r.elements);
    g.cayley_ = std::move(r.cayley);
    g.identity_ = r.identity;
    g.generators_ = std::move(r.generators);
    return g;
}

GroupFingerprint fingerprint(const SingularGroup& g) {
    GroupFingerprint f;
    f.order = g.order();
    f.abelian = true;
    f.center_size = 0;
    for (int i = 0; i < g.order(); ++i) {
        bool central = true;
        for (int j = 0; j < g.order(); ++j)
            if (g.product_index(i, j) != g.product_index(j, i)) {
                central = false;
                f.abelian = false;
            }
        if (central) ++f.center_size;
        ++f.element_order_histogram[g.element_order(i)];
    }
    return f;
}

std::vector<IntMatrix> lift_to_linear_group(const SingularGroup& g) {
    const IntMatrix t = subtract(IntMatrix::identity(g.identity().size()), g.identity());
    std::vector<IntMatrix> lifted;
    lifted.reserve(static_cast<std::size_t>(g.order()));
    for (const auto& x : g.elements()) lifted.push_back(add(x, t));
    return lifted;
}

std::vector<OrbitElement> idempotent_orbit(const Asm& idem, std::span<const Permutation> phi) {
    if (!is_idempotent(idem.matrix()))
        throw std::invalid_argument("idempotent_orbit needs an idempotent matrix");
    for (const auto& p : phi)
        if (p.size() != idem.size())
            throw std::invalid_argument("permutation size mismatch in idempotent_orbit");

    // close the permutations first
    std::vector<Permutation> group{Permutation::identity(idem.size())};
    auto contains = [&](const Permutation& p) {
        return std::find(group.begin(), group.end(), p) != group.end();
    };
    for (const auto& p : phi)
        if (!contains(p)) group.push_back(p);
    for (std::size_t i = 0; i < group.size(); ++i)
        for (std::size_t j = 0; j < group.size(); ++j) {
            auto prod = group[i].compose(group[j]);
            if (!contains(prod)) group.push_back(prod);
        }

    std::vector<OrbitElement> orbit;
    std::unordered_map<IntMatrix, bool, MatrixHash> emitted;
    for (const auto& p : group) {
        IntMatrix x = multiply(idem.matrix(), permutation_matrix(p));
        if (!emitted.emplace(x, true).second) continue;
        orbit.push_back(OrbitElement{x, is_asm(x), same_rowspace(x, idem.matrix())});
    }
    std::sort(orbit.begin(), orbit.end(),
              [](const OrbitElement& a, const OrbitElement& b) { return a.element < b.element; });
    return orbit;
}

}  // namespace asmg
