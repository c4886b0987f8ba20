/**
 * Bit-packed GF(2) vectors and matrices, 64 entries per word.
 */
#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <vector>

namespace toric {

class BitVector {
public:
    BitVector() = default;
    explicit BitVector(std::size_t size) : size_(size), words_((size + 63) / 64, 0) {}

    std::size_t size() const noexcept { return size_; }

    bool get(std::size_t i) const { return (words_[i >> 6] >> (i & 63)) & 1u; }
    void set(std::size_t i) { words_[i >> 6] |= std::uint64_t{1} << (i & 63); }
    void flip(std::size_t i) { words_[i >> 6] ^= std::uint64_t{1} << (i & 63); }

    std::size_t popcount() const {
        std::size_t c = 0;
        for (auto w : words_) c += static_cast<std::size_t>(std::popcount(w));
        return c;
    }

    bool none() const {
        for (auto w : words_)
            if (w) return false;
        return true;
    }

    BitVector& operator^=(const BitVector& o) {
        for (std::size_t i = 0; i < words_.size(); ++i) words_[i] ^= o.words_[i];
        return *this;
    }

    friend bool operator==(const BitVector&, const BitVector&) = default;

    const std::vector<std::uint64_t>& words() const noexcept { return words_; }

private:
    std::size_t size_ = 0;
    std::vector<std::uint64_t> words_;
};

/// Row-major packed matrix; each row occupies a whole number of words.
class BitMatrix {
public:
    BitMatrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), stride_((cols + 63) / 64), data_(rows * stride_, 0) {}

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }

    bool get(std::size_t r, std::size_t c) const {
        return (data_[r * stride_ + (c >> 6)] >> (c & 63)) & 1u;
    }
    void flip(std::size_t r, std::size_t c) { data_[r * stride_ + (c >> 6)] ^= std::uint64_t{1} << (c & 63); }

    /// Rank by forward elimination; pivot rows are taken lowest index first.
    /// Destroys the contents.
    std::size_t eliminate() {
        std::size_t rank = 0;
        for (std::size_t col = 0; col < cols_ && rank < rows_; ++col) {
            const std::size_t w = col >> 6;
            const std::uint64_t bit = std::uint64_t{1} << (col & 63);
            std::size_t piv = rank;
            while (piv < rows_ && !(data_[piv * stride_ + w] & bit)) ++piv;
            if (piv == rows_) continue;
            if (piv != rank)
                for (std::size_t k = w; k < stride_; ++k)
                    std::swap(data_[piv * stride_ + k], data_[rank * stride_ + k]);
            const std::uint64_t* src = &data_[rank * stride_];
            for (std::size_t r = rank + 1; r < rows_; ++r) {
                std::uint64_t* dst = &data_[r * stride_];
                if (!(dst[w] & bit)) continue;
                // columns left of `col` are already zero in both rows
                for (std::size_t k = w; k < stride_; ++k) dst[k] ^= src[k];
            }
            ++rank;
        }
        return rank;
    }

private:
    std::size_t rows_, cols_, stride_;
    std::vector<std::uint64_t> data_;
};

}  // namespace toric
