#include "hashcost/gf2.hpp"

#include <bit>
#include <stdexcept>
#include <utility>

namespace hashcost {

Gf2Matrix Gf2Matrix::identity(std::size_t n) {
    Gf2Matrix m(n);
    for (std::size_t i = 0; i < n; ++i) m.set(i, i, true);
    return m;
}

std::size_t Gf2Matrix::popcount() const {
    std::size_t k = 0;
    for (auto w : bits_) k += std::popcount(w);
    return k;
}

std::size_t Gf2Matrix::row_weight(std::size_t r) const {
    std::size_t k = 0;
    for (std::size_t i = 0; i < stride_; ++i) k += std::popcount(row(r)[i]);
    return k;
}

Gf2Matrix Gf2Matrix::operator*(const Gf2Matrix& o) const {
    if (o.n_ != n_) throw std::invalid_argument("GF(2) size mismatch");
    Gf2Matrix out(n_);
    for (std::size_t r = 0; r < n_; ++r) {
        auto* dst = out.row(r);
        for (std::size_t k = 0; k < n_; ++k)
            if (get(r, k)) {
                const auto* src = o.row(k);
                for (std::size_t i = 0; i < stride_; ++i) dst[i] ^= src[i];
            }
    }
    return out;
}

std::optional<Gf2Matrix> Gf2Matrix::inverse() const {
    Gf2Matrix a = *this, inv = identity(n_);
    for (std::size_t col = 0; col < n_; ++col) {
        std::size_t piv = col;
        while (piv < n_ && !a.get(piv, col)) ++piv;
        if (piv == n_) return std::nullopt;
        if (piv != col)
            for (std::size_t i = 0; i < stride_; ++i) {
                std::swap(a.row(piv)[i], a.row(col)[i]);
                std::swap(inv.row(piv)[i], inv.row(col)[i]);
            }
        for (std::size_t r = 0; r < n_; ++r)
            if (r != col && a.get(r, col))
                for (std::size_t i = 0; i < stride_; ++i) {
                    a.row(r)[i] ^= a.row(col)[i];
                    inv.row(r)[i] ^= inv.row(col)[i];
                }
    }
    return inv;
}

}  // namespace hashcost
