#pragma once

#include <cstdint>
#include <cstddef>
#include <optional>
#include <vector>

// Dense bit-packed linear algebra over GF(2).  Everything downstream
// (basis enumeration, homology, the Hochschild solve) reduces to rank,
// kernel and solve on matrices of at most a few thousand columns, so
// rows are packed into 64-bit words and eliminated with XOR.

namespace zz {

class BitVec {
public:
    BitVec() = default;
    explicit BitVec(std::size_t n) : n_(n), w_((n + 63) / 64, 0) {}

    std::size_t size() const { return n_; }
    bool get(std::size_t i) const { return (w_[i >> 6] >> (i & 63)) & 1u; }
    void set(std::size_t i, bool v = true) {
        if (v) w_[i >> 6] |= (std::uint64_t{1} << (i & 63));
        else   w_[i >> 6] &= ~(std::uint64_t{1} << (i & 63));
    }
    void flip(std::size_t i) { w_[i >> 6] ^= (std::uint64_t{1} << (i & 63)); }

    void xor_with(const BitVec& o);
    bool any() const;
    bool is_zero() const { return !any(); }
    std::size_t popcount() const;
    std::size_t first_set() const;   // size() when zero
    std::vector<std::size_t> set_bits() const;

    bool operator==(const BitVec& o) const { return n_ == o.n_ && w_ == o.w_; }
    bool operator!=(const BitVec& o) const { return !(*this == o); }

private:
    std::size_t n_ = 0;
    std::vector<std::uint64_t> w_;
};

class BitMatrix {
public:
    BitMatrix() = default;
    BitMatrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), wpr_((cols + 63) / 64), data_(rows * wpr_, 0) {}

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    bool get(std::size_t r, std::size_t c) const {
        return (data_[r * wpr_ + (c >> 6)] >> (c & 63)) & 1u;
    }
    void set(std::size_t r, std::size_t c, bool v = true) {
        std::uint64_t& w = data_[r * wpr_ + (c >> 6)];
        if (v) w |= (std::uint64_t{1} << (c & 63));
        else   w &= ~(std::uint64_t{1} << (c & 63));
    }
    void flip(std::size_t r, std::size_t c) {
        data_[r * wpr_ + (c >> 6)] ^= (std::uint64_t{1} << (c & 63));
    }

    void xor_rows(std::size_t dst, std::size_t src);
    void swap_rows(std::size_t a, std::size_t b);
    BitVec row(std::size_t r) const;
    void set_row(std::size_t r, const BitVec& v);

    BitMatrix transposed() const;

    // y = M x  (column-vector convention)
    BitVec apply(const BitVec& x) const;
    BitMatrix operator*(const BitMatrix& o) const;
    bool operator==(const BitMatrix& o) const {
        return rows_ == o.rows_ && cols_ == o.cols_ && data_ == o.data_;
    }

private:
    std::size_t rows_ = 0, cols_ = 0, wpr_ = 0;
    std::vector<std::uint64_t> data_;
};

std::size_t rank(const BitMatrix& m);

// Basis of {x : Mx = 0}; size cols - rank, deterministic (pivots on the
// first nonzero column / lowest row, free columns in increasing order).
std::vector<BitVec> kernel(const BitMatrix& m);

// Some x with Mx = b, or nullopt when inconsistent.
std::optional<BitVec> solve(const BitMatrix& m, const BitVec& b);

// Incrementally maintained row space in echelon form.  absorb() reduces the
// row against the current pivots and either swallows it (returns false) or
// installs it as a new pivot row (returns true).  Used for ideal saturation,
// algebra closures and the streaming Hochschild elimination.
class RowSpace {
public:
    explicit RowSpace(std::size_t cols) : cols_(cols) {}

    std::size_t cols() const { return cols_; }
    std::size_t dim() const { return rows_.size(); }

    bool absorb(BitVec v);
    BitVec reduce(BitVec v) const;
    bool contains(const BitVec& v) const { return reduce(v).is_zero(); }
    bool pivot_at(std::size_t col) const;

    const std::vector<BitVec>& rows() const { return rows_; }
    const std::vector<std::size_t>& pivots() const { return pivcols_; }

private:
    std::size_t cols_;
    std::vector<BitVec> rows_;          // pivot columns strictly increasing
    std::vector<std::size_t> pivcols_;
};

} // namespace zz
