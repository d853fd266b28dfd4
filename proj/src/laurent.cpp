#include "zz/laurent.hpp"

#include <stdexcept>

namespace zz {

LaurentPoly LaurentPoly::term(long c, int e) {
    LaurentPoly p;
    if (c != 0) {
        p.lo_ = e;
        p.coeffs_.assign(1, mpz_class(c));
    }
    return p;
}

mpz_class LaurentPoly::coeff(int e) const {
    int k = e - lo_;
    if (k < 0 || k >= static_cast<int>(coeffs_.size())) return 0;
    return coeffs_[k];
}

void LaurentPoly::normalize() {
    std::size_t lead = 0;
    while (lead < coeffs_.size() && coeffs_[lead] == 0) ++lead;
    std::size_t trail = coeffs_.size();
    while (trail > lead && coeffs_[trail - 1] == 0) --trail;
    if (lead == trail) {
        coeffs_.clear();
        lo_ = 0;
        return;
    }
    if (lead > 0 || trail < coeffs_.size()) {
        coeffs_ = std::vector<mpz_class>(coeffs_.begin() + lead, coeffs_.begin() + trail);
        lo_ += static_cast<int>(lead);
    }
}

LaurentPoly LaurentPoly::operator+(const LaurentPoly& o) const {
    if (is_zero()) return o;
    if (o.is_zero()) return *this;
    LaurentPoly out;
    out.lo_ = std::min(lo_, o.lo_);
    int hi = std::max(max_exp(), o.max_exp());
    out.coeffs_.assign(hi - out.lo_ + 1, 0);
    for (std::size_t k = 0; k < coeffs_.size(); ++k)
        out.coeffs_[lo_ + static_cast<int>(k) - out.lo_] += coeffs_[k];
    for (std::size_t k = 0; k < o.coeffs_.size(); ++k)
        out.coeffs_[o.lo_ + static_cast<int>(k) - out.lo_] += o.coeffs_[k];
    out.normalize();
    return out;
}

LaurentPoly LaurentPoly::operator-(const LaurentPoly& o) const {
    LaurentPoly neg = o;
    for (auto& c : neg.coeffs_) c = -c;
    return *this + neg;
}

LaurentPoly LaurentPoly::operator*(const LaurentPoly& o) const {
    LaurentPoly out;
    if (is_zero() || o.is_zero()) return out;
    out.lo_ = lo_ + o.lo_;
    out.coeffs_.assign(coeffs_.size() + o.coeffs_.size() - 1, 0);
    for (std::size_t a = 0; a < coeffs_.size(); ++a)
        for (std::size_t b = 0; b < o.coeffs_.size(); ++b)
            out.coeffs_[a + b] += coeffs_[a] * o.coeffs_[b];
    out.normalize();
    return out;
}

bool LaurentPoly::operator==(const LaurentPoly& o) const {
    return lo_ == o.lo_ && coeffs_ == o.coeffs_;
}

mpz_class LaurentPoly::specialize(long q0) const {
    if (is_zero()) return 0;
    if (lo_ < 0 && q0 == 0) throw std::invalid_argument("specialize: q = 0 with negative exponents");
    // evaluate p(q0) * q0^lo as exact integers; negative lo requires q0 = +-1
    mpz_class acc = 0;
    for (std::size_t k = coeffs_.size(); k-- > 0;) acc = acc * q0 + coeffs_[k];
    if (lo_ >= 0) {
        mpz_class p;
        mpz_ui_pow_ui(p.get_mpz_t(), static_cast<unsigned long>(std::abs(q0)), lo_);
        if (q0 < 0 && lo_ % 2 != 0) p = -p;
        return acc * p;
    }
    if (q0 == 1) return acc;
    if (q0 == -1) return lo_ % 2 == 0 ? acc : -acc;
    throw std::invalid_argument("specialize: negative exponents need q = +-1");
}

std::string LaurentPoly::to_string() const {
    if (is_zero()) return "0";
    std::string s;
    for (std::size_t k = 0; k < coeffs_.size(); ++k) {
        if (coeffs_[k] == 0) continue;
        int e = lo_ + static_cast<int>(k);
        if (!s.empty()) s += " + ";
        if (e == 0) {
            s += coeffs_[k].get_str();
        } else {
            if (coeffs_[k] != 1) s += coeffs_[k].get_str() + "*";
            s += e == 1 ? "q" : "q^" + std::to_string(e);
        }
    }
    return s;
}

LaurentMatrix LaurentMatrix::identity(std::size_t n) {
    LaurentMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = LaurentPoly::term(1);
    return m;
}

LaurentMatrix LaurentMatrix::operator+(const LaurentMatrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_)
        throw std::invalid_argument("LaurentMatrix: shape mismatch");
    LaurentMatrix out(rows_, cols_);
    for (std::size_t i = 0; i < a_.size(); ++i) out.a_[i] = a_[i] + o.a_[i];
    return out;
}

LaurentMatrix LaurentMatrix::operator-(const LaurentMatrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_)
        throw std::invalid_argument("LaurentMatrix: shape mismatch");
    LaurentMatrix out(rows_, cols_);
    for (std::size_t i = 0; i < a_.size(); ++i) out.a_[i] = a_[i] - o.a_[i];
    return out;
}

LaurentMatrix LaurentMatrix::operator*(const LaurentMatrix& o) const {
    if (cols_ != o.rows_) throw std::invalid_argument("LaurentMatrix: shape mismatch");
    LaurentMatrix out(rows_, o.cols_);
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t k = 0; k < cols_; ++k) {
            if (at(r, k).is_zero()) continue;
            for (std::size_t c = 0; c < o.cols_; ++c)
                out.at(r, c) = out.at(r, c) + at(r, k) * o.at(k, c);
        }
    return out;
}

LaurentMatrix LaurentMatrix::scale(const LaurentPoly& s) const {
    LaurentMatrix out(rows_, cols_);
    for (std::size_t i = 0; i < a_.size(); ++i) out.a_[i] = a_[i] * s;
    return out;
}

bool LaurentMatrix::operator==(const LaurentMatrix& o) const {
    return rows_ == o.rows_ && cols_ == o.cols_ && a_ == o.a_;
}

std::vector<std::vector<mpz_class>> LaurentMatrix::specialize(long q0) const {
    std::vector<std::vector<mpz_class>> out(rows_, std::vector<mpz_class>(cols_));
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t c = 0; c < cols_; ++c) out[r][c] = at(r, c).specialize(q0);
    return out;
}

} // namespace zz
