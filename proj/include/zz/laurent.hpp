#pragma once

#include <gmpxx.h>

#include <string>
#include <vector>

// Exact Laurent polynomials in q with arbitrary-precision integer
// coefficients, and dense matrices of them.  Enough arithmetic for the
// Temperley-Lieb / braid relation checks and integer specialization.

namespace zz {

class LaurentPoly {
public:
    LaurentPoly() = default;
    // c * q^e
    static LaurentPoly term(long c, int e = 0);

    bool is_zero() const { return coeffs_.empty(); }
    int min_exp() const { return lo_; }
    int max_exp() const { return lo_ + static_cast<int>(coeffs_.size()) - 1; }
    mpz_class coeff(int e) const;

    LaurentPoly operator+(const LaurentPoly& o) const;
    LaurentPoly operator-(const LaurentPoly& o) const;
    LaurentPoly operator*(const LaurentPoly& o) const;
    bool operator==(const LaurentPoly& o) const;
    bool operator!=(const LaurentPoly& o) const { return !(*this == o); }

    mpz_class specialize(long q0) const;
    std::string to_string() const;

private:
    void normalize();
    int lo_ = 0;
    std::vector<mpz_class> coeffs_;   // coeffs_[k] is the coefficient of q^(lo_+k)
};

class LaurentMatrix {
public:
    LaurentMatrix() = default;
    LaurentMatrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), a_(rows * cols) {}

    static LaurentMatrix identity(std::size_t n);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    const LaurentPoly& at(std::size_t r, std::size_t c) const { return a_[r * cols_ + c]; }
    LaurentPoly& at(std::size_t r, std::size_t c) { return a_[r * cols_ + c]; }

    LaurentMatrix operator+(const LaurentMatrix& o) const;
    LaurentMatrix operator-(const LaurentMatrix& o) const;
    LaurentMatrix operator*(const LaurentMatrix& o) const;
    LaurentMatrix scale(const LaurentPoly& s) const;
    bool operator==(const LaurentMatrix& o) const;
    bool operator!=(const LaurentMatrix& o) const { return !(*this == o); }

    // entrywise integer specialization at q = q0
    std::vector<std::vector<mpz_class>> specialize(long q0) const;

private:
    std::size_t rows_ = 0, cols_ = 0;
    std::vector<LaurentPoly> a_;
};

} // namespace zz
