#include "asmg/matrix.hpp"

#include <algorithm>
#include <numeric>
#include <optional>
#include <utility>

namespace asmg {

IntMatrix IntMatrix::identity(int n) {
    IntMatrix m(n);
    for (int i = 0; i < n; ++i) m(i, i) = 1;
    return m;
}

IntMatrix IntMatrix::from_rows(const std::vector<std::vector<Int>>& rows) {
    const int n = static_cast<int>(rows.size());
    IntMatrix m(n);
    for (int i = 0; i < n; ++i) {
        if (static_cast<int>(rows[i].size()) != n)
            throw std::invalid_argument("matrix rows must form a square grid");
        for (int j = 0; j < n; ++j) m(i, j) = rows[i][j];
    }
    return m;
}

IntMatrix multiply(const IntMatrix& a, const IntMatrix& b) {
    if (a.size() != b.size())
        throw std::invalid_argument("dimension mismatch in matrix multiply");
    const int n = a.size();
    IntMatrix c(n);
    for (int i = 0; i < n; ++i) {
        for (int k = 0; k < n; ++k) {
            const Int aik = a(i, k);
            if (aik == 0) continue;
            for (int j = 0; j < n; ++j) {
                const Int bkj = b(k, j);
                if (bkj == 0) continue;
                c(i, j) = checked_add(c(i, j), checked_mul(aik, bkj));
            }
        }
    }
    return c;
}

IntMatrix add(const IntMatrix& a, const IntMatrix& b) {
    if (a.size() != b.size())
        throw std::invalid_argument("dimension mismatch in matrix add");
    IntMatrix c(a.size());
    for (int i = 0; i < a.size(); ++i)
        for (int j = 0; j < a.size(); ++j) c(i, j) = checked_add(a(i, j), b(i, j));
    return c;
}

IntMatrix subtract(const IntMatrix& a, const IntMatrix& b) {
    if (a.size() != b.size())
        throw std::invalid_argument("dimension mismatch in matrix subtract");
    IntMatrix c(a.size());
    for (int i = 0; i < a.size(); ++i)
        for (int j = 0; j < a.size(); ++j) c(i, j) = checked_add(a(i, j), -b(i, j));
    return c;
}

IntMatrix transpose(const IntMatrix& a) {
    IntMatrix t(a.size());
    for (int i = 0; i < a.size(); ++i)
        for (int j = 0; j < a.size(); ++j) t(j, i) = a(i, j);
    return t;
}

IntMatrix power(const IntMatrix& a, int k) {
    if (k < 1) throw std::invalid_argument("power exponent must be >= 1");
    IntMatrix p = a;
    for (int i = 1; i < k; ++i) p = multiply(p, a);
    return p;
}

IntMatrix kronecker(const IntMatrix& a, const IntMatrix& b) {
    const int m = a.size(), n = b.size();
    IntMatrix c(m * n);
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j) {
            const Int aij = a(i, j);
            if (aij == 0) continue;
            for (int p = 0; p < n; ++p)
                for (int q = 0; q < n; ++q)
                    c(i * n + p, j * n + q) = checked_mul(aij, b(p, q));
        }
    return c;
}

Int max_abs_entry(const IntMatrix& a) {
    Int m = 0;
    for (Int v : a.data()) m = std::max(m, v < 0 ? -v : v);
    return m;
}

namespace detail {

namespace {

// Fraction-free Bareiss elimination; intermediates are minors of the input so
// divisions are exact. Returns nullopt when T-arithmetic would overflow.
template <typename T>
std::optional<int> bareiss_rank(std::vector<std::vector<T>>& a) {
    const int m = static_cast<int>(a.size());
    if (m == 0) return 0;
    const int n = static_cast<int>(a[0].size());
    int r = 0;
    T prev = 1;
    for (int c = 0; c < n && r < m; ++c) {
        int piv = -1;
        for (int i = r; i < m; ++i)
            if (a[i][c] != 0) { piv = i; break; }
        if (piv < 0) continue;
        std::swap(a[r], a[piv]);
        const T p = a[r][c];
        for (int i = r + 1; i < m; ++i) {
            for (int j = c + 1; j < n; ++j) {
                T t1, t2, t3;
                if (__builtin_mul_overflow(p, a[i][j], &t1) ||
                    __builtin_mul_overflow(a[i][c], a[r][j], &t2) ||
                    __builtin_sub_overflow(t1, t2, &t3))
                    return std::nullopt;
                a[i][j] = t3 / prev;
            }
            a[i][c] = 0;
        }
        prev = p;
        ++r;
    }
    return r;
}

}  // namespace

int rank_rows(std::vector<std::vector<Int>> rows) {
    {
        auto work = rows;
        if (auto r = bareiss_rank(work)) return *r;
    }
    const int m = static_cast<int>(rows.size());
    std::vector<std::vector<__int128>> wide(static_cast<std::size_t>(m));
    for (int i = 0; i < m; ++i)
        wide[static_cast<std::size_t>(i)].assign(rows[static_cast<std::size_t>(i)].begin(),
                                                 rows[static_cast<std::size_t>(i)].end());
    if (auto r = bareiss_rank(wide)) return *r;
    throw std::overflow_error("integer overflow in rank computation");
}

}  // namespace detail

int rank(const IntMatrix& a) {
    std::vector<std::vector<Int>> rows(a.size());
    for (int i = 0; i < a.size(); ++i) rows[i].assign(a.row(i).begin(), a.row(i).end());
    return detail::rank_rows(std::move(rows));
}

Permutation::Permutation(std::vector<int> images) : images_(std::move(images)) {
    const int n = static_cast<int>(images_.size());
    std::vector<char> seen(static_cast<std::size_t>(n) + 1, 0);
    for (int v : images_) {
        if (v < 1 || v > n || seen[static_cast<std::size_t>(v)])
            throw std::invalid_argument("permutation images must be a bijection on 1..n");
        seen[static_cast<std::size_t>(v)] = 1;
    }
}

Permutation Permutation::identity(int n) {
    std::vector<int> im(static_cast<std::size_t>(n));
    std::iota(im.begin(), im.end(), 1);
    return Permutation(std::move(im));
}

Permutation Permutation::cycle(int n) {
    std::vector<int> im(static_cast<std::size_t>(n));
    for (int i = 1; i <= n; ++i) im[static_cast<std::size_t>(i) - 1] = i % n + 1;
    return Permutation(std::move(im));
}

Permutation Permutation::transposition(int n, int a, int b) {
    if (a < 1 || a > n || b < 1 || b > n)
        throw std::invalid_argument("transposition points out of range");
    auto p = identity(n);
    std::swap(p.images_[static_cast<std::size_t>(a) - 1], p.images_[static_cast<std::size_t>(b) - 1]);
    return p;
}

Permutation Permutation::compose(const Permutation& other) const {
    if (size() != other.size())
        throw std::invalid_argument("permutation size mismatch in compose");
    std::vector<int> im(images_.size());
    for (int i = 1; i <= size(); ++i) im[static_cast<std::size_t>(i) - 1] = image(other.image(i));
    return Permutation(std::move(im));
}

Permutation Permutation::inverse() const {
    std::vector<int> im(images_.size());
    for (int i = 1; i <= size(); ++i) im[static_cast<std::size_t>(image(i)) - 1] = i;
    return Permutation(std::move(im));
}

int Permutation::order() const {
    auto cur = *this;
    const auto id = identity(size());
    int k = 1;
    while (!(cur == id)) {
        cur = cur.compose(*this);
        ++k;
    }
    return k;
}

IntMatrix permutation_matrix(const Permutation& p) {
    IntMatrix m(p.size());
    for (int j = 1; j <= p.size(); ++j) m(p.image(j) - 1, j - 1) = 1;
    return m;
}

}  // namespace asmg
