#include "zz/gf2.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

namespace zz {

void BitVec::xor_with(const BitVec& o) {
    if (n_ != o.n_) throw std::invalid_argument("BitVec::xor_with: size mismatch");
    for (std::size_t i = 0; i < w_.size(); ++i) w_[i] ^= o.w_[i];
}

bool BitVec::any() const {
    for (auto w : w_) if (w) return true;
    return false;
}

std::size_t BitVec::popcount() const {
    std::size_t c = 0;
    for (auto w : w_) c += std::popcount(w);
    return c;
}

std::size_t BitVec::first_set() const {
    for (std::size_t i = 0; i < w_.size(); ++i)
        if (w_[i]) return i * 64 + std::countr_zero(w_[i]);
    return n_;
}

std::vector<std::size_t> BitVec::set_bits() const {
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < w_.size(); ++i) {
        std::uint64_t w = w_[i];
        while (w) {
            out.push_back(i * 64 + std::countr_zero(w));
            w &= w - 1;
        }
    }
    return out;
}

void BitMatrix::xor_rows(std::size_t dst, std::size_t src) {
    std::uint64_t* d = data_.data() + dst * wpr_;
    const std::uint64_t* s = data_.data() + src * wpr_;
    for (std::size_t i = 0; i < wpr_; ++i) d[i] ^= s[i];
}

void BitMatrix::swap_rows(std::size_t a, std::size_t b) {
    if (a == b) return;
    std::uint64_t* pa = data_.data() + a * wpr_;
    std::uint64_t* pb = data_.data() + b * wpr_;
    for (std::size_t i = 0; i < wpr_; ++i) std::swap(pa[i], pb[i]);
}

BitVec BitMatrix::row(std::size_t r) const {
    BitVec v(cols_);
    for (std::size_t c = 0; c < cols_; ++c)
        if (get(r, c)) v.set(c);
    return v;
}

void BitMatrix::set_row(std::size_t r, const BitVec& v) {
    if (v.size() != cols_) throw std::invalid_argument("BitMatrix::set_row: size mismatch");
    for (std::size_t c = 0; c < cols_; ++c) set(r, c, v.get(c));
}

BitMatrix BitMatrix::transposed() const {
    BitMatrix t(cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t c = 0; c < cols_; ++c)
            if (get(r, c)) t.set(c, r);
    return t;
}

BitVec BitMatrix::apply(const BitVec& x) const {
    if (x.size() != cols_) throw std::invalid_argument("BitMatrix::apply: size mismatch");
    BitVec y(rows_);
    for (std::size_t r = 0; r < rows_; ++r) {
        bool acc = false;
        const std::uint64_t* rw = data_.data() + r * wpr_;
        for (std::size_t c = 0; c < cols_; ++c)
            if ((rw[c >> 6] >> (c & 63)) & 1u)
                acc ^= x.get(c);
        y.set(r, acc);
    }
    return y;
}

BitMatrix BitMatrix::operator*(const BitMatrix& o) const {
    if (cols_ != o.rows_) throw std::invalid_argument("BitMatrix::operator*: shape mismatch");
    BitMatrix out(rows_, o.cols_);
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t k = 0; k < cols_; ++k)
            if (get(r, k))
                for (std::size_t i = 0; i < o.wpr_; ++i)
                    out.data_[r * out.wpr_ + i] ^= o.data_[k * o.wpr_ + i];
    return out;
}

namespace {

// Forward elimination; returns pivot (row, col) pairs.  Pivoting is
// deterministic: scan columns left to right, take the lowest-index row.
std::vector<std::pair<std::size_t, std::size_t>> eliminate(BitMatrix& m) {
    std::vector<std::pair<std::size_t, std::size_t>> piv;
    std::size_t next_row = 0;
    for (std::size_t c = 0; c < m.cols() && next_row < m.rows(); ++c) {
        std::size_t p = next_row;
        while (p < m.rows() && !m.get(p, c)) ++p;
        if (p == m.rows()) continue;
        m.swap_rows(next_row, p);
        for (std::size_t r = 0; r < m.rows(); ++r)
            if (r != next_row && m.get(r, c)) m.xor_rows(r, next_row);
        piv.emplace_back(next_row, c);
        ++next_row;
    }
    return piv;
}

} // namespace

std::size_t rank(const BitMatrix& m) {
    BitMatrix w = m;
    return eliminate(w).size();
}

std::vector<BitVec> kernel(const BitMatrix& m) {
    BitMatrix w = m;
    auto piv = eliminate(w);
    std::vector<bool> is_pivot_col(m.cols(), false);
    for (auto [r, c] : piv) is_pivot_col[c] = true;
    std::vector<BitVec> out;
    for (std::size_t free = 0; free < m.cols(); ++free) {
        if (is_pivot_col[free]) continue;
        BitVec v(m.cols());
        v.set(free);
        for (auto [r, c] : piv)
            if (w.get(r, free)) v.set(c);
        out.push_back(std::move(v));
    }
    return out;
}

std::optional<BitVec> solve(const BitMatrix& m, const BitVec& b) {
    if (b.size() != m.rows()) throw std::invalid_argument("solve: rhs length != rows");
    // eliminate the augmented matrix [M | b]
    BitMatrix w(m.rows(), m.cols() + 1);
    for (std::size_t r = 0; r < m.rows(); ++r) {
        for (std::size_t c = 0; c < m.cols(); ++c)
            if (m.get(r, c)) w.set(r, c);
        if (b.get(r)) w.set(r, m.cols());
    }
    std::vector<std::pair<std::size_t, std::size_t>> piv;
    std::size_t next_row = 0;
    for (std::size_t c = 0; c < m.cols() && next_row < m.rows(); ++c) {
        std::size_t p = next_row;
        while (p < w.rows() && !w.get(p, c)) ++p;
        if (p == w.rows()) continue;
        w.swap_rows(next_row, p);
        for (std::size_t r = 0; r < w.rows(); ++r)
            if (r != next_row && w.get(r, c)) w.xor_rows(r, next_row);
        piv.emplace_back(next_row, c);
        ++next_row;
    }
    for (std::size_t r = next_row; r < w.rows(); ++r)
        if (w.get(r, m.cols())) return std::nullopt;
    BitVec x(m.cols());
    for (auto [r, c] : piv)
        if (w.get(r, m.cols())) x.set(c);
    return x;
}

bool RowSpace::absorb(BitVec v) {
    if (v.size() != cols_) throw std::invalid_argument("RowSpace::absorb: size mismatch");
    for (std::size_t i = 0; i < rows_.size(); ++i)
        if (v.get(pivcols_[i])) v.xor_with(rows_[i]);
    std::size_t lead = v.first_set();
    if (lead == v.size()) return false;
    // keep existing rows reduced against the new pivot
    for (std::size_t i = 0; i < rows_.size(); ++i)
        if (rows_[i].get(lead)) rows_[i].xor_with(v);
    std::size_t pos = 0;
    while (pos < pivcols_.size() && pivcols_[pos] < lead) ++pos;
    rows_.insert(rows_.begin() + pos, std::move(v));
    pivcols_.insert(pivcols_.begin() + pos, lead);
    return true;
}

BitVec RowSpace::reduce(BitVec v) const {
    if (v.size() != cols_) throw std::invalid_argument("RowSpace::reduce: size mismatch");
    for (std::size_t i = 0; i < rows_.size(); ++i)
        if (v.get(pivcols_[i])) v.xor_with(rows_[i]);
    return v;
}

bool RowSpace::pivot_at(std::size_t col) const {
    return std::binary_search(pivcols_.begin(), pivcols_.end(), col);
}

} // namespace zz
