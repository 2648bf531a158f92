#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "asmg/asm_matrix.hpp"
#include "asmg/group.hpp"
#include "asmg/matrix.hpp"

namespace asmg {

/// Corner-block pattern of the frame construction. Variant A places the 1s of
/// the 2x2 corner blocks at (2,2) on top and (1,1) on the bottom; variant B at
/// (2,1) on top and (1,2) on the bottom.
enum class FrameVariant { A, B };

/// Metadata for an ASM built (or viewed) as a frame around a central
/// permutation block: the block's position, its permutation, and the
/// block-relative column carrying the frame's +-1 column.
struct FrameMeta {
    int block_row;  // 1-based row of the block's top-left corner
    int block_col;  // 1-based column of the block's top-left corner
    Permutation central;
    int x_col;  // 1-based column within the block
};

class FramedAsm {
public:
    FramedAsm(Asm a, std::optional<FrameMeta> meta) : asm_(std::move(a)), meta_(std::move(meta)) {}

    /// Views an existing ASM as a frame around the 1x1 identity block at
    /// (row, col); requires that cell to hold a 1.
    static FramedAsm around_center(Asm a, int row, int col);

    const Asm& contents() const { return asm_; }
    const IntMatrix& matrix() const { return asm_.matrix(); }
    int size() const { return asm_.size(); }
    const std::optional<FrameMeta>& meta() const { return meta_; }

private:
    Asm asm_;
    std::optional<FrameMeta> meta_;
};

/// The (n+4)x(n+4) singular ASM wrapping an n x n permutation block in the
/// fixed border pattern, with the +-1 column at the block's last column.
/// Variant A has the same order as p; variant B doubles odd orders.
FramedAsm build_frame(const Permutation& p, FrameVariant variant);

/// Column criterion for two frames to generate cyclic groups with the same
/// identity: the nonzero entries of the x-columns of both central permutation
/// blocks sit in the same row.
bool shares_identity(const FramedAsm& a, const FramedAsm& b);

/// Frame generators whose closure is the full symmetric group on n letters:
/// the n-cycle and the (1 n) transposition, both framed with variant A
/// corners. The closure has order n! and consists of singular ASMs.
std::pair<FramedAsm, FramedAsm> symmetric_group_frame_generators(int n);

/// The (4k+1)x(4k+1) idempotent ASM whose four 2k x 2k corner blocks are
/// diagonal with 0/1 alternating down the diagonal and whose central column
/// alternates +1/-1. Rank 2k+1, nullity 2k, in reduced form.
Asm alternating_idempotent(int k);

/// Four-entry +-[[1,-1],[-1,1]] pattern at rows {i1,i2} x columns {j1,j2}
/// (not necessarily adjacent); sign +1 puts the positive entries at (i1,j1)
/// and (i2,j2).
struct TBlock {
    int i1, j1, i2, j2;  // 1-based, i1 < i2, j1 < j2
    int sign;
    IntMatrix to_matrix(int n) const;
};

/// The 2k T-blocks with alternating_idempotent(k) == I - (sum of blocks);
/// each block is idempotent and all pairwise products of distinct blocks
/// vanish.
std::vector<TBlock> t_block_decomposition(int k);

/// True iff p fixes every odd index.
bool fixes_odd_indices(const Permutation& p);

/// Lifts a permutation q of {1..2k} onto the even indices of {1..4k+1},
/// fixing all odd indices.
Permutation even_index_permutation(const Permutation& q, int k);

/// P * alternating_idempotent(k) for a permutation fixing all odd indices.
/// Always a singular ASM; the map is multiplicative and order-preserving, so
/// the images of a permutation group form an isomorphic group of ASMs.
Asm odd_fixing_embed(const Permutation& p, int k);

/// Generators of a copy of the symmetric group on n letters consisting of
/// rank-(2k+1) ASMs in size 4k+1 with k = ceil(n/2): the cycle on the first
/// n even indices and the swap of the first two, pushed through
/// odd_fixing_embed.
std::pair<Asm, Asm> symmetric_group_low_rank_generators(int n);

/// Replaces the framed ASM's central permutation block with p, re-indexing so
/// the frame's +-1 column tracks the final column of the new block.
FramedAsm expand_center(const FramedAsm& a, const Permutation& p);

/// The group {x (x) y} of Kronecker products, isomorphic to the direct
/// product; all elements are ASMs when g and h consist of ASMs, and element
/// orders are lcms of the component orders.
SingularGroup kronecker_group(const SingularGroup& g, const SingularGroup& h);

}  // namespace asmg
