#ifndef BSAT_BITROW_HPP
#define BSAT_BITROW_HPP

#include <bit>
#include <cstdint>
#include <span>

// Word-parallel helpers over bit rows stored as little-endian uint64 arrays.
// Bit i of a row lives in word i/64 at position i%64.

namespace bsat::bits {

inline constexpr int kWordBits = 64;

constexpr int words_for(int nbits) { return (nbits + kWordBits - 1) / kWordBits; }

inline bool test(std::span<const std::uint64_t> row, int i) {
    return (row[i / kWordBits] >> (i % kWordBits)) & 1u;
}

inline void set(std::span<std::uint64_t> row, int i) {
    row[i / kWordBits] |= std::uint64_t{1} << (i % kWordBits);
}

inline void reset(std::span<std::uint64_t> row, int i) {
    row[i / kWordBits] &= ~(std::uint64_t{1} << (i % kWordBits));
}

inline int count(std::span<const std::uint64_t> row) {
    int c = 0;
    for (auto w : row) c += std::popcount(w);
    return c;
}

inline int count_and(std::span<const std::uint64_t> a, std::span<const std::uint64_t> b) {
    int c = 0;
    for (std::size_t i = 0; i < a.size(); ++i) c += std::popcount(a[i] & b[i]);
    return c;
}

inline void and_into(std::span<std::uint64_t> dst, std::span<const std::uint64_t> src) {
    for (std::size_t i = 0; i < dst.size(); ++i) dst[i] &= src[i];
}

inline bool is_subset(std::span<const std::uint64_t> a, std::span<const std::uint64_t> b) {
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i] & ~b[i]) return false;
    return true;
}

// Calls f(i) for every set bit i, in increasing order.
template <typename F>
void for_each_bit(std::span<const std::uint64_t> row, F&& f) {
    for (std::size_t w = 0; w < row.size(); ++w) {
        std::uint64_t x = row[w];
        while (x) {
            int b = std::countr_zero(x);
            f(static_cast<int>(w) * kWordBits + b);
            x &= x - 1;
        }
    }
}

}  // namespace bsat::bits

#endif
