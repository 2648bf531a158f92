#pragma once

#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace asmg {

using Int = std::int64_t;

/// Overflow-checked 64-bit arithmetic. All matrix operations are exact:
/// they either return the true integer result or throw std::overflow_error.
inline Int checked_add(Int a, Int b) {
    Int r;
    if (__builtin_add_overflow(a, b, &r))
        throw std::overflow_error("integer overflow in matrix arithmetic (add)");
    return r;
}

inline Int checked_mul(Int a, Int b) {
    Int r;
    if (__builtin_mul_overflow(a, b, &r))
        throw std::overflow_error("integer overflow in matrix arithmetic (mul)");
    return r;
}

/// Dense square matrix of exact 64-bit integers, row-major.
/// Immutable in practice: operations return new matrices. The 0x0 matrix is
/// a valid value (it is the reduced form of every identity matrix).
class IntMatrix {
public:
    IntMatrix() = default;
    explicit IntMatrix(int n) : n_(require_size(n)), e_(static_cast<std::size_t>(n) * n, 0) {}

    static IntMatrix identity(int n);
    /// Builds from rows; throws std::invalid_argument unless the grid is square.
    static IntMatrix from_rows(const std::vector<std::vector<Int>>& rows);

    int size() const { return n_; }
    bool empty() const { return n_ == 0; }

    Int operator()(int i, int j) const { return e_[idx(i, j)]; }
    Int& operator()(int i, int j) { return e_[idx(i, j)]; }

    std::span<const Int> row(int i) const {
        return {e_.data() + idx(i, 0), static_cast<std::size_t>(n_)};
    }

    /// Row-major entries; doubles as the canonical encoding for seen-sets.
    const std::vector<Int>& data() const { return e_; }

    friend bool operator==(const IntMatrix&, const IntMatrix&) = default;
    /// Lexicographic by (size, row-major entries); fixes canonical element order.
    friend auto operator<=>(const IntMatrix&, const IntMatrix&) = default;

private:
    static int require_size(int n) {
        if (n < 0) throw std::invalid_argument("matrix size must be non-negative");
        return n;
    }
    std::size_t idx(int i, int j) const {
        return static_cast<std::size_t>(i) * n_ + j;
    }

    int n_ = 0;
    std::vector<Int> e_;
};

struct MatrixHash {
    std::size_t operator()(const IntMatrix& m) const {
        std::size_t h = static_cast<std::size_t>(m.size());
        for (Int v : m.data()) h = h * 1099511628211ULL + static_cast<std::size_t>(v) + 0x9e3779b97f4a7c15ULL;
        return h;
    }
};

IntMatrix multiply(const IntMatrix& a, const IntMatrix& b);
IntMatrix add(const IntMatrix& a, const IntMatrix& b);
IntMatrix subtract(const IntMatrix& a, const IntMatrix& b);
IntMatrix transpose(const IntMatrix& a);

/// k-th power by repeated multiplication, k >= 1. Deliberately iterative so
/// callers observing intermediate powers (order detection) share the code path.
IntMatrix power(const IntMatrix& a, int k);

/// Kronecker product: block (i,j) equals a(i,j) * b.
IntMatrix kronecker(const IntMatrix& a, const IntMatrix& b);

/// Exact rank over the rationals via fraction-free (Bareiss) elimination.
/// No floating point anywhere; singularity decisions are exact.
int rank(const IntMatrix& a);

Int max_abs_entry(const IntMatrix& a);

namespace detail {
/// Bareiss rank of an arbitrary (possibly rectangular) integer row list.
int rank_rows(std::vector<std::vector<Int>> rows);
}  // namespace detail

/// Permutation of {1..n} in one-line notation: image(i) is where i is sent.
class Permutation {
public:
    explicit Permutation(std::vector<int> images);
    static Permutation identity(int n);
    /// The n-cycle 1 -> 2 -> ... -> n -> 1.
    static Permutation cycle(int n);
    static Permutation transposition(int n, int a, int b);

    int size() const { return static_cast<int>(images_.size()); }
    int image(int i) const { return images_[static_cast<std::size_t>(i) - 1]; }
    const std::vector<int>& images() const { return images_; }

    /// (this o other): apply other first, then this.
    Permutation compose(const Permutation& other) const;
    Permutation inverse() const;
    int order() const;

    friend bool operator==(const Permutation&, const Permutation&) = default;

private:
    std::vector<int> images_;
};

/// The 0/1 matrix with a 1 at (p(j), j) for every j. Multiplying on the left
/// moves row j to row p(j); permutation_matrix(p) * permutation_matrix(q)
/// equals permutation_matrix(p.compose(q)).
IntMatrix permutation_matrix(const Permutation& p);

}  // namespace asmg
