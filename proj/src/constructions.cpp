#include "asmg/constructions.hpp"

#include <algorithm>
#include <utility>

namespace asmg {

FramedAsm FramedAsm::around_center(Asm a, int row, int col) {
    if (row < 1 || row > a.size() || col < 1 || col > a.size())
        throw std::invalid_argument("center position out of range");
    if (a.matrix()(row - 1, col - 1) != 1)
        throw std::invalid_argument("center cell must hold a 1");
    FrameMeta meta{row, col, Permutation::identity(1), 1};
    return FramedAsm(std::move(a), std::move(meta));
}

FramedAsm build_frame(const Permutation& p, FrameVariant variant) {
    const int n = p.size();
    if (n < 1) throw std::invalid_argument("frame needs a nonempty permutation");
    const int outer = n + 4;
    IntMatrix m(outer);
    const IntMatrix pm = permutation_matrix(p);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) m(2 + i, 2 + j) = pm(i, j);
    const int xc = 2 + n - 1;  // absolute column of the block's last column
    m(0, xc) = 1;
    m(1, xc) = -1;
    m(outer - 2, xc) = -1;
    m(outer - 1, xc) = 1;
    if (variant == FrameVariant::A) {
        m(1, 1) = 1;
        m(1, outer - 1) = 1;
        m(outer - 2, 0) = 1;
        m(outer - 2, outer - 2) = 1;
    } else {
        m(1, 0) = 1;
        m(1, outer - 2) = 1;
        m(outer - 2, 1) = 1;
        m(outer - 2, outer - 1) = 1;
    }
    FrameMeta meta{3, 3, p, n};
    return FramedAsm(Asm::from(std::move(m)), std::move(meta));
}

bool shares_identity(const FramedAsm& a, const FramedAsm& b) {
    if (!a.meta() || !b.meta()) throw std::invalid_argument("shares_identity needs frame metadata");
    if (a.size() != b.size()) throw std::invalid_argument("frames must have equal outer size");
    // row of the nonzero entry in the x-column of each central block
    const auto& ma = *a.meta();
    const auto& mb = *b.meta();
    return ma.central.image(ma.x_col) == mb.central.image(mb.x_col);
}

std::pair<FramedAsm, FramedAsm> symmetric_group_frame_generators(int n) {
    if (n < 1) throw std::invalid_argument("symmetric group degree must be >= 1");
    // Both generators take variant A corners: the identity frame of the family
    // is the variant-A frame of the identity permutation, and a variant-B
    // transposition frame would adjoin a corner involution that doubles the
    // closure for even n.
    return {build_frame(Permutation::cycle(n), FrameVariant::A),
            build_frame(Permutation::transposition(n, 1, n), FrameVariant::A)};
}

Asm alternating_idempotent(int k) {
    if (k < 1) throw std::invalid_argument("alternating idempotent index must be >= 1");
    const int n = 4 * k + 1;
    const int m = 2 * k + 1;  // central index, 1-based
    IntMatrix e(n);
    for (int i = 1; i <= n; ++i) {
        if (i % 2 == 1) {
            e(i - 1, m - 1) = 1;
        } else {
            const int j = i <= 2 * k ? i : i - m;
            e(i - 1, j - 1) = 1;
            e(i - 1, m - 1) = -1;
            e(i - 1, j + m - 1) = 1;
        }
    }
    return Asm::from(std::move(e));
}

IntMatrix TBlock::to_matrix(int n) const {
    IntMatrix m(n);
    m(i1 - 1, j1 - 1) = sign;
    m(i2 - 1, j2 - 1) = sign;
    m(i1 - 1, j2 - 1) = -sign;
    m(i2 - 1, j1 - 1) = -sign;
    return m;
}

std::vector<TBlock> t_block_decomposition(int k) {
    if (k < 1) throw std::invalid_argument("alternating idempotent index must be >= 1");
    const int m = 2 * k + 1;
    std::vector<TBlock> blocks;
    blocks.reserve(static_cast<std::size_t>(2 * k));
    for (int j = 1; j <= 2 * k; j += 2) blocks.push_back(TBlock{j, j, m + j, m, +1});
    for (int j = 2; j <= 2 * k; j += 2) blocks.push_back(TBlock{j, m, m + j, m + j, +1});
    return blocks;
}

bool fixes_odd_indices(const Permutation& p) {
    for (int i = 1; i <= p.size(); i += 2)
        if (p.image(i) != i) return false;
    return true;
}

Permutation even_index_permutation(const Permutation& q, int k) {
    const int n = 4 * k + 1;
    if (q.size() > 2 * k)
        throw std::invalid_argument("even-index permutation must act on at most 2k letters");
    std::vector<int> im(static_cast<std::size_t>(n));
    for (int i = 1; i <= n; ++i) im[static_cast<std::size_t>(i) - 1] = i;
    for (int i = 1; i <= q.size(); ++i) im[static_cast<std::size_t>(2 * i) - 1] = 2 * q.image(i);
    return Permutation(std::move(im));
}

Asm odd_fixing_embed(const Permutation& p, int k) {
    if (p.size() != 4 * k + 1)
        throw std::invalid_argument("permutation size must be 4k+1");
    if (!fixes_odd_indices(p))
        throw std::invalid_argument("permutation must fix every odd index");
    return Asm::from(multiply(permutation_matrix(p), alternating_idempotent(k).matrix()));
}

std::pair<Asm, Asm> symmetric_group_low_rank_generators(int n) {
    if (n < 1) throw std::invalid_argument("symmetric group degree must be >= 1");
    const int k = (n + 1) / 2;
    const Permutation cyc = even_index_permutation(Permutation::cycle(n), k);
    const Permutation swp =
        even_index_permutation(n >= 2 ? Permutation::transposition(n, 1, 2) : Permutation::identity(1), k);
    return {odd_fixing_embed(cyc, k), odd_fixing_embed(swp, k)};
}

FramedAsm expand_center(const FramedAsm& a, const Permutation& p) {
    if (!a.meta()) throw std::invalid_argument("expand_center needs frame metadata");
    const FrameMeta& meta = *a.meta();
    const int q = meta.central.size();
    if (meta.x_col != q)
        throw std::invalid_argument("expand_center needs the +-1 column at the block's last column");
    const int qn = p.size();
    const int n = a.size();
    const int out_n = n - q + qn;
    const int r0 = meta.block_row;  // 1-based
    const int c0 = meta.block_col;

    const auto& src = a.matrix();
    // outside the block's column range, the frame rows may only touch the
    // block columns at the x-column
    for (int i = 1; i <= n; ++i) {
        if (i >= r0 && i < r0 + q) continue;
        for (int j = c0; j < c0 + q; ++j)
            if (j != c0 + meta.x_col - 1 && src(i - 1, j - 1) != 0)
                throw std::invalid_argument("frame rows intrude into the central block columns");
    }

    IntMatrix out(out_n);
    const int new_x_abs = c0 + qn - 1;  // 1-based absolute column of the new x-column
    for (int i = 1; i <= n; ++i) {
        if (i >= r0 && i < r0 + q) continue;
        const int oi = i < r0 ? i : i + qn - q;
        for (int j = 1; j <= n; ++j) {
            const Int v = src(i - 1, j - 1);
            if (v == 0) continue;
            int oj;
            if (j >= c0 && j < c0 + q)
                oj = new_x_abs;  // the x-column tracks the new block's last column
            else
                oj = j < c0 ? j : j + qn - q;
            out(oi - 1, oj - 1) = v;
        }
    }
    const IntMatrix pm = permutation_matrix(p);
    for (int bi = 0; bi < qn; ++bi)
        for (int bj = 0; bj < qn; ++bj) out(r0 - 1 + bi, c0 - 1 + bj) = pm(bi, bj);

    FrameMeta out_meta{r0, c0, p, qn};
    return FramedAsm(Asm::from(std::move(out)), std::move(out_meta));
}

SingularGroup kronecker_group(const SingularGroup& g, const SingularGroup& h) {
    std::vector<IntMatrix> elems;
    elems.reserve(static_cast<std::size_t>(g.order()) * static_cast<std::size_t>(h.order()));
    for (const auto& x : g.elements())
        for (const auto& y : h.elements()) elems.push_back(kronecker(x, y));
    return SingularGroup::from_elements(std::move(elems));
}

}  // namespace asmg
