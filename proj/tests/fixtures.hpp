#pragma once

// Hand-transcribed reference matrices used as entrywise anchors across the
// test suites. Names describe the object: sizes, orders, group roles.

#include "asmg/asm_matrix.hpp"
#include "asmg/matrix.hpp"

namespace fixtures {

using asmg::IntMatrix;

// 5x5: the idempotent of nullity 2 in reduced form, and the order-2 matrix
// with the same row/column space; together {idem5, order2_5} is a group.
inline IntMatrix idem5() {
    return IntMatrix::from_rows({{0, 0, 1, 0, 0},
                                 {0, 1, -1, 0, 1},
                                 {0, 0, 1, 0, 0},
                                 {1, 0, -1, 1, 0},
                                 {0, 0, 1, 0, 0}});
}

inline IntMatrix order2_5() {
    return IntMatrix::from_rows({{0, 0, 1, 0, 0},
                                 {1, 0, -1, 1, 0},
                                 {0, 0, 1, 0, 0},
                                 {0, 1, -1, 0, 1},
                                 {0, 0, 1, 0, 0}});
}

// permutation (1 2)(4 5): right multiplication carries idem5 to order2_5
inline IntMatrix perm_col_swap() {
    return IntMatrix::from_rows({{0, 1, 0, 0, 0},
                                 {1, 0, 0, 0, 0},
                                 {0, 0, 1, 0, 0},
                                 {0, 0, 0, 0, 1},
                                 {0, 0, 0, 1, 0}});
}

// permutation (2 4): left multiplication carries idem5 to order2_5
inline IntMatrix perm_row_swap() {
    return IntMatrix::from_rows({{1, 0, 0, 0, 0},
                                 {0, 0, 0, 1, 0},
                                 {0, 0, 1, 0, 0},
                                 {0, 1, 0, 0, 0},
                                 {0, 0, 0, 0, 1}});
}

// order2_5 + (I - idem5): the nonsingular lift of order2_5
inline IntMatrix lifted_order2_5() {
    return IntMatrix::from_rows({{1, 0, 0, 0, 0},
                                 {1, 0, 0, 1, -1},
                                 {0, 0, 1, 0, 0},
                                 {-1, 1, 0, 0, 1},
                                 {0, 0, 0, 0, 1}});
}

// the unique 3x3 ASM that is not a permutation matrix; no finite order
inline IntMatrix center_negative_3() {
    return IntMatrix::from_rows({{0, 1, 0}, {1, -1, 1}, {0, 1, 0}});
}

// 6x6 rank-4 family: klein_e is idempotent, klein_a..klein_d square to it,
// and {e, a, b, c} is a Klein four group; <d> is maximal.
inline IntMatrix klein_e() {
    return IntMatrix::from_rows({{0, 0, 0, 1, 0, 0},
                                 {0, 1, 0, -1, 0, 1},
                                 {0, 0, 1, 0, 0, 0},
                                 {0, 0, 0, 1, 0, 0},
                                 {1, 0, 0, -1, 1, 0},
                                 {0, 0, 0, 1, 0, 0}});
}

inline IntMatrix klein_a() {
    return IntMatrix::from_rows({{0, 0, 0, 1, 0, 0},
                                 {1, 0, 0, -1, 1, 0},
                                 {0, 0, 1, 0, 0, 0},
                                 {0, 0, 0, 1, 0, 0},
                                 {0, 1, 0, -1, 0, 1},
                                 {0, 0, 0, 1, 0, 0}});
}

inline IntMatrix klein_b() {
    return IntMatrix::from_rows({{0, 0, 1, 0, 0, 0},
                                 {0, 1, -1, 0, 0, 1},
                                 {0, 0, 0, 1, 0, 0},
                                 {0, 0, 1, 0, 0, 0},
                                 {1, 0, -1, 0, 1, 0},
                                 {0, 0, 1, 0, 0, 0}});
}

inline IntMatrix klein_c() {
    return IntMatrix::from_rows({{0, 0, 1, 0, 0, 0},
                                 {1, 0, -1, 0, 1, 0},
                                 {0, 0, 0, 1, 0, 0},
                                 {0, 0, 1, 0, 0, 0},
                                 {0, 1, -1, 0, 0, 1},
                                 {0, 0, 1, 0, 0, 0}});
}

inline IntMatrix klein_d() {
    return IntMatrix::from_rows({{0, 0, 0, 1, 0, 0},
                                 {0, 0, 1, 0, 0, 0},
                                 {0, 1, 0, -1, 0, 1},
                                 {0, 0, 0, 1, 0, 0},
                                 {1, 0, 0, -1, 1, 0},
                                 {0, 0, 0, 1, 0, 0}});
}

// 6x6 non-permutation matrix whose left action carries klein_e to klein_b
inline IntMatrix klein_left_factor() {
    return IntMatrix::from_rows({{0, 0, 1, 0, 0, 0},
                                 {1, 1, -1, 0, 0, 0},
                                 {1, 0, 0, 0, 0, 0},
                                 {-1, 0, 1, 1, 0, 0},
                                 {1, 0, -1, 0, 1, 0},
                                 {0, 0, 1, 1, 0, -1}});
}

// 7x7 generators of a nonabelian order-6 group (orders 3 and 2)
inline IntMatrix sym3_e() {
    return IntMatrix::from_rows({{0, 0, 1, 0, 0, 0, 0},
                                 {0, 1, -1, 0, 0, 0, 1},
                                 {0, 0, 1, 0, 0, 0, 0},
                                 {0, 0, 0, 1, 0, 0, 0},
                                 {0, 0, 0, 0, 1, 0, 0},
                                 {1, 0, -1, 0, 0, 1, 0},
                                 {0, 0, 1, 0, 0, 0, 0}});
}

inline IntMatrix sym3_a() {
    return IntMatrix::from_rows({{0, 0, 0, 0, 1, 0, 0},
                                 {0, 1, 0, 0, -1, 0, 1},
                                 {0, 0, 0, 0, 1, 0, 0},
                                 {0, 0, 1, 0, 0, 0, 0},
                                 {0, 0, 0, 1, 0, 0, 0},
                                 {1, 0, 0, 0, -1, 1, 0},
                                 {0, 0, 0, 0, 1, 0, 0}});
}

inline IntMatrix sym3_b() {
    return IntMatrix::from_rows({{0, 0, 0, 0, 1, 0, 0},
                                 {0, 1, 0, 0, -1, 0, 1},
                                 {0, 0, 0, 0, 1, 0, 0},
                                 {0, 0, 0, 1, 0, 0, 0},
                                 {0, 0, 1, 0, 0, 0, 0},
                                 {1, 0, 0, 0, -1, 1, 0},
                                 {0, 0, 0, 0, 1, 0, 0}});
}

// 7x7 generators of a nonabelian order-8 group (orders 4 and 2)
inline IntMatrix oct_a() {
    return IntMatrix::from_rows({{0, 0, 0, 1, 0, 0, 0},
                                 {0, 0, 0, 0, 0, 1, 0},
                                 {0, 1, 0, -1, 0, 0, 1},
                                 {0, 0, 0, 1, 0, 0, 0},
                                 {0, 0, 1, 0, 0, 0, 0},
                                 {1, 0, 0, -1, 1, 0, 0},
                                 {0, 0, 0, 1, 0, 0, 0}});
}

inline IntMatrix oct_b() {
    return IntMatrix::from_rows({{0, 0, 0, 1, 0, 0, 0},
                                 {1, 0, 0, -1, 1, 0, 0},
                                 {0, 0, 1, 0, 0, 0, 0},
                                 {0, 0, 0, 1, 0, 0, 0},
                                 {0, 1, 0, -1, 0, 0, 1},
                                 {0, 0, 0, 0, 0, 1, 0},
                                 {0, 0, 0, 1, 0, 0, 0}});
}

// 7x7 generators of a nonabelian order-12 group (orders 6 and 2)
inline IntMatrix dih_a() {
    return IntMatrix::from_rows({{0, 0, 0, 1, 0, 0, 0},
                                 {1, 0, 0, -1, 0, 1, 0},
                                 {0, 0, 0, 0, 1, 0, 0},
                                 {0, 0, 1, 0, 0, 0, 0},
                                 {0, 0, 0, 1, 0, 0, 0},
                                 {0, 1, 0, -1, 0, 0, 1},
                                 {0, 0, 0, 1, 0, 0, 0}});
}

inline IntMatrix dih_b() {
    return IntMatrix::from_rows({{0, 0, 0, 0, 1, 0, 0},
                                 {1, 0, 0, 0, -1, 1, 0},
                                 {0, 0, 0, 1, 0, 0, 0},
                                 {0, 0, 1, 0, 0, 0, 0},
                                 {0, 0, 0, 0, 1, 0, 0},
                                 {0, 1, 0, 0, -1, 0, 1},
                                 {0, 0, 0, 0, 1, 0, 0}});
}

// 7x7 order-2 matrix with three negative entries, and its square
inline IntMatrix threeneg_a() {
    return IntMatrix::from_rows({{0, 0, 0, 0, 1, 0, 0},
                                 {0, 0, 1, 0, -1, 1, 0},
                                 {0, 0, 0, 0, 1, 0, 0},
                                 {1, 0, -1, 1, 0, 0, 0},
                                 {0, 0, 1, 0, 0, 0, 0},
                                 {0, 1, 0, 0, -1, 0, 1},
                                 {0, 0, 0, 0, 1, 0, 0}});
}

inline IntMatrix threeneg_e() {
    return IntMatrix::from_rows({{0, 0, 1, 0, 0, 0, 0},
                                 {0, 1, -1, 0, 0, 0, 1},
                                 {0, 0, 1, 0, 0, 0, 0},
                                 {1, 0, -1, 1, 0, 0, 0},
                                 {0, 0, 0, 0, 1, 0, 0},
                                 {0, 0, 0, 0, 0, 1, 0},
                                 {0, 0, 1, 0, 0, 0, 0}});
}

// 7x7 frames of a 3-cycle with variant A (order 3) and variant B (order 6)
inline IntMatrix frame3_variant_a() {
    return IntMatrix::from_rows({{0, 0, 0, 0, 1, 0, 0},
                                 {0, 1, 0, 0, -1, 0, 1},
                                 {0, 0, 0, 0, 1, 0, 0},
                                 {0, 0, 1, 0, 0, 0, 0},
                                 {0, 0, 0, 1, 0, 0, 0},
                                 {1, 0, 0, 0, -1, 1, 0},
                                 {0, 0, 0, 0, 1, 0, 0}});
}

inline IntMatrix frame3_variant_b() {
    return IntMatrix::from_rows({{0, 0, 0, 0, 1, 0, 0},
                                 {1, 0, 0, 0, -1, 1, 0},
                                 {0, 0, 0, 0, 1, 0, 0},
                                 {0, 0, 1, 0, 0, 0, 0},
                                 {0, 0, 0, 1, 0, 0, 0},
                                 {0, 1, 0, 0, -1, 0, 1},
                                 {0, 0, 0, 0, 1, 0, 0}});
}

// 8x8 generators of a group of order 24 (orders 4 and 2)
inline IntMatrix sym4_s() {
    return IntMatrix::from_rows({{0, 0, 0, 0, 0, 1, 0, 0},
                                 {0, 1, 0, 0, 0, -1, 0, 1},
                                 {0, 0, 0, 0, 0, 1, 0, 0},
                                 {0, 0, 1, 0, 0, 0, 0, 0},
                                 {0, 0, 0, 1, 0, 0, 0, 0},
                                 {0, 0, 0, 0, 1, 0, 0, 0},
                                 {1, 0, 0, 0, 0, -1, 1, 0},
                                 {0, 0, 0, 0, 0, 1, 0, 0}});
}

inline IntMatrix sym4_t() {
    return IntMatrix::from_rows({{0, 0, 0, 0, 0, 1, 0, 0},
                                 {0, 1, 0, 0, 0, -1, 0, 1},
                                 {0, 0, 0, 0, 0, 1, 0, 0},
                                 {0, 0, 0, 1, 0, 0, 0, 0},
                                 {0, 0, 0, 0, 1, 0, 0, 0},
                                 {0, 0, 1, 0, 0, 0, 0, 0},
                                 {1, 0, 0, 0, 0, -1, 1, 0},
                                 {0, 0, 0, 0, 0, 1, 0, 0}});
}

// 9x9 embedded ASMs of order 3 and 4 (even-index 3-cycle and 4-cycle)
inline IntMatrix embed9_order3() {
    return IntMatrix::from_rows({{0, 0, 0, 0, 1, 0, 0, 0, 0},
                                 {1, 0, 0, 0, -1, 1, 0, 0, 0},
                                 {0, 0, 0, 0, 1, 0, 0, 0, 0},
                                 {0, 1, 0, 0, -1, 0, 1, 0, 0},
                                 {0, 0, 0, 0, 1, 0, 0, 0, 0},
                                 {0, 0, 0, 1, -1, 0, 0, 0, 1},
                                 {0, 0, 0, 0, 1, 0, 0, 0, 0},
                                 {0, 0, 1, 0, -1, 0, 0, 1, 0},
                                 {0, 0, 0, 0, 1, 0, 0, 0, 0}});
}

inline IntMatrix embed9_order4() {
    return IntMatrix::from_rows({{0, 0, 0, 0, 1, 0, 0, 0, 0},
                                 {0, 0, 1, 0, -1, 0, 0, 1, 0},
                                 {0, 0, 0, 0, 1, 0, 0, 0, 0},
                                 {0, 1, 0, 0, -1, 0, 1, 0, 0},
                                 {0, 0, 0, 0, 1, 0, 0, 0, 0},
                                 {0, 0, 0, 1, -1, 0, 0, 0, 1},
                                 {0, 0, 0, 0, 1, 0, 0, 0, 0},
                                 {1, 0, 0, 0, -1, 1, 0, 0, 0},
                                 {0, 0, 0, 0, 1, 0, 0, 0, 0}});
}

// 9x9 low-rank transposition generator (swap of the first two even indices)
inline IntMatrix embed9_swap() {
    return IntMatrix::from_rows({{0, 0, 0, 0, 1, 0, 0, 0, 0},
                                 {0, 0, 0, 1, -1, 0, 0, 0, 1},
                                 {0, 0, 0, 0, 1, 0, 0, 0, 0},
                                 {0, 1, 0, 0, -1, 0, 1, 0, 0},
                                 {0, 0, 0, 0, 1, 0, 0, 0, 0},
                                 {1, 0, 0, 0, -1, 1, 0, 0, 0},
                                 {0, 0, 0, 0, 1, 0, 0, 0, 0},
                                 {0, 0, 1, 0, -1, 0, 0, 1, 0},
                                 {0, 0, 0, 0, 1, 0, 0, 0, 0}});
}

// the 5-cycle whose matrix has its 1s on the subdiagonal
inline IntMatrix cycle5_matrix() {
    return IntMatrix::from_rows({{0, 0, 0, 0, 1},
                                 {1, 0, 0, 0, 0},
                                 {0, 1, 0, 0, 0},
                                 {0, 0, 1, 0, 0},
                                 {0, 0, 0, 1, 0}});
}

// 13x13 order-20 matrix: embed9_order4 with its center expanded by the 5-cycle
inline IntMatrix expanded13_order20() {
    return IntMatrix::from_rows({{0, 0, 0, 0, 0, 0, 0, 0, 1, 0, 0, 0, 0},
                                 {0, 0, 1, 0, 0, 0, 0, 0, -1, 0, 0, 1, 0},
                                 {0, 0, 0, 0, 0, 0, 0, 0, 1, 0, 0, 0, 0},
                                 {0, 1, 0, 0, 0, 0, 0, 0, -1, 0, 1, 0, 0},
                                 {0, 0, 0, 0, 0, 0, 0, 0, 1, 0, 0, 0, 0},
                                 {0, 0, 0, 0, 1, 0, 0, 0, 0, 0, 0, 0, 0},
                                 {0, 0, 0, 0, 0, 1, 0, 0, 0, 0, 0, 0, 0},
                                 {0, 0, 0, 0, 0, 0, 1, 0, 0, 0, 0, 0, 0},
                                 {0, 0, 0, 0, 0, 0, 0, 1, 0, 0, 0, 0, 0},
                                 {0, 0, 0, 1, 0, 0, 0, 0, -1, 0, 0, 0, 1},
                                 {0, 0, 0, 0, 0, 0, 0, 0, 1, 0, 0, 0, 0},
                                 {1, 0, 0, 0, 0, 0, 0, 0, -1, 1, 0, 0, 0},
                                 {0, 0, 0, 0, 0, 0, 0, 0, 1, 0, 0, 0, 0}});
}

// 7x7 rank-6 ASM with A^6 = A whose intermediate powers are not ASMs: finite
// order in the raw sense but no cyclic group of ASMs (its idempotent has
// nullity 1 and falls outside the ASM class).
inline IntMatrix order5_outside_asm_cycle() {
    return IntMatrix::from_rows({{0, 0, 0, 0, 0, 0, 1},
                                 {0, 0, 0, 0, 0, 1, 0},
                                 {0, 0, 0, 1, 0, 0, 0},
                                 {0, 1, 0, 0, 0, 0, 0},
                                 {0, 0, 1, -1, 1, 0, 0},
                                 {1, 0, 0, 0, 0, 0, 0},
                                 {0, 0, 0, 1, 0, 0, 0}});
}

}  // namespace fixtures
