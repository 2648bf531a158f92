#pragma once

#include <map>
#include <span>
#include <variant>
#include <vector>

#include "asmg/asm_matrix.hpp"
#include "asmg/matrix.hpp"
#include "asmg/order.hpp"

namespace asmg {

class SingularGroup;

enum class ClosureError { exceeded_max_size, no_identity, not_a_group };

const char* describe(ClosureError e);

/// Breadth-first product closure of the generators. Succeeds iff the closure
/// stabilizes within max_size elements, contains a two-sided identity, and
/// every element has an inverse power.
std::variant<SingularGroup, ClosureError> closure(std::span<const IntMatrix> generators,
                                                  int max_size = 256);

/// A finite set of matrices closed under multiplication with a two-sided
/// idempotent identity and an inverse power for every element. Elements are
/// stored in canonical (lexicographic) order together with the Cayley table.
class SingularGroup {
public:
    /// Validates closure, identity and inverses; throws std::invalid_argument.
    static SingularGroup from_elements(std::vector<IntMatrix> elements,
                                       std::vector<int> generator_indices = {});

    int order() const { return static_cast<int>(elements_.size()); }
    const std::vector<IntMatrix>& elements() const { return elements_; }
    int identity_index() const { return identity_; }
    const IntMatrix& identity() const { return elements_[static_cast<std::size_t>(identity_)]; }
    /// cayley()[i][j] is the index of elements()[i] * elements()[j].
    const std::vector<std::vector<int>>& cayley() const { return cayley_; }
    int product_index(int i, int j) const {
        return cayley_[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
    }
    const std::vector<int>& generator_indices() const { return generators_; }

    bool all_elements_asm() const;
    /// Order of an element within the group, read off the Cayley table.
    int element_order(int i) const;

private:
    SingularGroup() = default;
    friend std::variant<SingularGroup, ClosureError> closure(std::span<const IntMatrix>, int);

    std::vector<IntMatrix> elements_;
    std::vector<std::vector<int>> cayley_;
    int identity_ = -1;
    std::vector<int> generators_;
};

struct GroupFingerprint {
    int order;
    bool abelian;
    std::map<int, int> element_order_histogram;
    int center_size;
};

GroupFingerprint fingerprint(const SingularGroup& g);

/// The associated nonsingular group {X + T : X in g} with T = I - E. Elements
/// are returned in the same order as g.elements(); the map X -> X + T is a
/// group isomorphism, so the induced Cayley table equals g's.
std::vector<IntMatrix> lift_to_linear_group(const SingularGroup& g);

struct OrbitElement {
    IntMatrix element;  // E * H
    bool is_asm;
    bool same_rowspace;
};

/// Right-multiplies the idempotent by every element of the permutation group
/// generated by phi, reporting which products are ASMs and which preserve the
/// idempotent's rowspace. Duplicate products are reported once.
std::vector<OrbitElement> idempotent_orbit(const Asm& idem, std::span<const Permutation> phi);

}  // namespace asmg
