#pragma once

#include <cstdint>
#include <optional>
#include <vector>

namespace hashcost {

// Dense square matrix over GF(2), rows packed into 64-bit words.
class Gf2Matrix {
public:
    explicit Gf2Matrix(std::size_t n = 0) : n_(n), stride_((n + 63) / 64), bits_(n * stride_, 0) {}

    static Gf2Matrix identity(std::size_t n);

    std::size_t size() const { return n_; }
    bool get(std::size_t r, std::size_t c) const { return (row(r)[c >> 6] >> (c & 63)) & 1; }
    void set(std::size_t r, std::size_t c, bool v) {
        auto m = std::uint64_t{1} << (c & 63);
        auto& w = row(r)[c >> 6];
        w = v ? (w | m) : (w & ~m);
    }
    void flip(std::size_t r, std::size_t c) { row(r)[c >> 6] ^= std::uint64_t{1} << (c & 63); }

    std::uint64_t* row(std::size_t r) { return bits_.data() + r * stride_; }
    const std::uint64_t* row(std::size_t r) const { return bits_.data() + r * stride_; }
    std::size_t stride() const { return stride_; }

    std::size_t popcount() const;
    std::size_t row_weight(std::size_t r) const;

    Gf2Matrix operator*(const Gf2Matrix& o) const;
    friend bool operator==(const Gf2Matrix&, const Gf2Matrix&) = default;

    // Gauss-Jordan; nullopt when singular.
    std::optional<Gf2Matrix> inverse() const;

private:
    std::size_t n_, stride_;
    std::vector<std::uint64_t> bits_;
};

}  // namespace hashcost
