#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace neumaier {

using Vertex = std::uint32_t;
using VertexSet = std::vector<Vertex>;

namespace bits {

inline constexpr std::size_t word_bits = 64;

constexpr std::size_t words_for(std::size_t n) { return (n + word_bits - 1) / word_bits; }

inline bool test(std::span<const std::uint64_t> w, std::size_t i)
{
    return (w[i / word_bits] >> (i % word_bits)) & 1U;
}

inline void set(std::span<std::uint64_t> w, std::size_t i) { w[i / word_bits] |= std::uint64_t{1} << (i % word_bits); }

inline void reset(std::span<std::uint64_t> w, std::size_t i)
{
    w[i / word_bits] &= ~(std::uint64_t{1} << (i % word_bits));
}

inline std::size_t count(std::span<const std::uint64_t> w)
{
    std::size_t c = 0;
    for (auto x : w)
        c += static_cast<std::size_t>(std::popcount(x));
    return c;
}

inline std::size_t and_count(std::span<const std::uint64_t> a, std::span<const std::uint64_t> b)
{
    std::size_t c = 0;
    for (std::size_t i = 0; i < a.size(); ++i)
        c += static_cast<std::size_t>(std::popcount(a[i] & b[i]));
    return c;
}

inline bool any(std::span<const std::uint64_t> w)
{
    for (auto x : w)
        if (x)
            return true;
    return false;
}

/// Calls f(i) for every set bit i, in increasing order.
template <typename F>
void for_each(std::span<const std::uint64_t> w, F&& f)
{
    for (std::size_t i = 0; i < w.size(); ++i) {
        auto x = w[i];
        while (x) {
            auto b = static_cast<std::size_t>(std::countr_zero(x));
            f(i * word_bits + b);
            x &= x - 1;
        }
    }
}

} // namespace bits

/// Fixed-size dynamic bitset over vertex indices.
class Bitset {
public:
    Bitset() = default;
    explicit Bitset(std::size_t n) : n_(n), words_(bits::words_for(n), 0) {}

    static Bitset from(std::size_t n, std::span<const Vertex> members)
    {
        Bitset b(n);
        for (auto v : members)
            b.set(v);
        return b;
    }

    std::size_t size() const { return n_; }
    bool test(std::size_t i) const { return bits::test(words_, i); }
    void set(std::size_t i) { bits::set(words_, i); }
    void reset(std::size_t i) { bits::reset(words_, i); }
    std::size_t count() const { return bits::count(words_); }
    bool any() const { return bits::any(words_); }

    std::span<const std::uint64_t> words() const { return words_; }
    std::span<std::uint64_t> words() { return words_; }

    Bitset& operator&=(std::span<const std::uint64_t> o)
    {
        for (std::size_t i = 0; i < words_.size(); ++i)
            words_[i] &= o[i];
        return *this;
    }

    Bitset& operator|=(std::span<const std::uint64_t> o)
    {
        for (std::size_t i = 0; i < words_.size(); ++i)
            words_[i] |= o[i];
        return *this;
    }

    Bitset& subtract(std::span<const std::uint64_t> o)
    {
        for (std::size_t i = 0; i < words_.size(); ++i)
            words_[i] &= ~o[i];
        return *this;
    }

    VertexSet members() const
    {
        VertexSet out;
        bits::for_each(words_, [&](std::size_t i) { out.push_back(static_cast<Vertex>(i)); });
        return out;
    }

    bool operator==(const Bitset&) const = default;

private:
    std::size_t n_ = 0;
    std::vector<std::uint64_t> words_;
};

} // namespace neumaier
