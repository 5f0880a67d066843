#pragma once

#include <bit>
#include <cstdint>
#include <vector>

namespace ejnet {

// Dense rows-by-cols bit field; row r tracks which column ids node r has
// heard from.
class BitMatrix {
public:
    BitMatrix() = default;
    BitMatrix(int64_t rows, int64_t cols)
        : rows_(rows), cols_(cols), words_per_row_((cols + 63) / 64),
          bits_(static_cast<size_t>(rows * words_per_row_), 0) {}

    int64_t rows() const { return rows_; }
    int64_t cols() const { return cols_; }

    bool get(int64_t r, int64_t c) const {
        return (word(r, c) >> (c & 63)) & 1u;
    }
    void set(int64_t r, int64_t c) { word(r, c) |= uint64_t{1} << (c & 63); }

    void or_row_from(int64_t dst, const BitMatrix& src, int64_t src_row) {
        uint64_t* d = &bits_[static_cast<size_t>(dst * words_per_row_)];
        const uint64_t* s = &src.bits_[static_cast<size_t>(src_row * src.words_per_row_)];
        for (int64_t w = 0; w < words_per_row_; ++w) d[w] |= s[w];
    }

    int64_t popcount_row(int64_t r) const {
        const uint64_t* p = &bits_[static_cast<size_t>(r * words_per_row_)];
        int64_t n = 0;
        for (int64_t w = 0; w < words_per_row_; ++w) n += std::popcount(p[w]);
        return n;
    }

private:
    uint64_t& word(int64_t r, int64_t c) {
        return bits_[static_cast<size_t>(r * words_per_row_ + (c >> 6))];
    }
    const uint64_t& word(int64_t r, int64_t c) const {
        return bits_[static_cast<size_t>(r * words_per_row_ + (c >> 6))];
    }

    int64_t rows_ = 0;
    int64_t cols_ = 0;
    int64_t words_per_row_ = 0;
    std::vector<uint64_t> bits_;
};

} // namespace ejnet
