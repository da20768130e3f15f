#ifndef SUMCOL_BITSET_HPP
#define SUMCOL_BITSET_HPP

#include <bit>
#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace sumcol {

/// Fixed-size dynamic bitset over 64-bit words. Used for adjacency rows and
/// candidate sets in the clique search, so the hot operations (and, count,
/// first set bit) stay word-parallel.
class Bitset {
public:
    using word_type = std::uint64_t;
    static constexpr std::size_t word_bits = 64;

    Bitset() = default;
    explicit Bitset(std::size_t size)
        : size_(size)
        , words_((size + word_bits - 1) / word_bits, 0)
    {
    }

    std::size_t size() const { return size_; }
    std::size_t word_count() const { return words_.size(); }

    bool test(std::size_t i) const
    {
        return (words_[i / word_bits] >> (i % word_bits)) & 1u;
    }
    void set(std::size_t i) { words_[i / word_bits] |= word_type{1} << (i % word_bits); }
    void reset(std::size_t i) { words_[i / word_bits] &= ~(word_type{1} << (i % word_bits)); }

    void set_all()
    {
        for (auto& w : words_)
            w = ~word_type{0};
        trim();
    }
    void reset_all()
    {
        for (auto& w : words_)
            w = 0;
    }

    std::size_t count() const
    {
        std::size_t c = 0;
        for (auto w : words_)
            c += static_cast<std::size_t>(std::popcount(w));
        return c;
    }

    bool none() const
    {
        for (auto w : words_)
            if (w)
                return false;
        return true;
    }
    bool any() const { return !none(); }

    bool intersects(const Bitset& o) const
    {
        for (std::size_t k = 0; k < words_.size(); ++k)
            if (words_[k] & o.words_[k])
                return true;
        return false;
    }

    std::size_t intersection_count(const Bitset& o) const
    {
        std::size_t c = 0;
        for (std::size_t k = 0; k < words_.size(); ++k)
            c += static_cast<std::size_t>(std::popcount(words_[k] & o.words_[k]));
        return c;
    }

    /// Index of the lowest set bit, or size() when empty.
    std::size_t find_first() const { return find_from_word(0); }

    /// Index of the lowest set bit strictly after i, or size().
    std::size_t find_next(std::size_t i) const
    {
        ++i;
        if (i >= size_)
            return size_;
        std::size_t k = i / word_bits;
        word_type w = words_[k] & (~word_type{0} << (i % word_bits));
        if (w)
            return k * word_bits + static_cast<std::size_t>(std::countr_zero(w));
        return find_from_word(k + 1);
    }

    Bitset& operator&=(const Bitset& o)
    {
        for (std::size_t k = 0; k < words_.size(); ++k)
            words_[k] &= o.words_[k];
        return *this;
    }
    Bitset& operator|=(const Bitset& o)
    {
        for (std::size_t k = 0; k < words_.size(); ++k)
            words_[k] |= o.words_[k];
        return *this;
    }
    /// this &= ~o
    Bitset& subtract(const Bitset& o)
    {
        for (std::size_t k = 0; k < words_.size(); ++k)
            words_[k] &= ~o.words_[k];
        return *this;
    }

    friend Bitset operator&(Bitset a, const Bitset& b) { return a &= b; }
    friend Bitset operator|(Bitset a, const Bitset& b) { return a |= b; }

    bool operator==(const Bitset& o) const = default;
    auto operator<=>(const Bitset& o) const = default;

    std::span<const word_type> words() const { return words_; }

    /// Set bit indices in increasing order.
    std::vector<std::size_t> indices() const
    {
        std::vector<std::size_t> out;
        out.reserve(count());
        for (std::size_t i = find_first(); i < size_; i = find_next(i))
            out.push_back(i);
        return out;
    }

    template <typename F> void for_each(F&& f) const
    {
        for (std::size_t k = 0; k < words_.size(); ++k) {
            word_type w = words_[k];
            while (w) {
                f(k * word_bits + static_cast<std::size_t>(std::countr_zero(w)));
                w &= w - 1;
            }
        }
    }

private:
    std::size_t find_from_word(std::size_t k) const
    {
        for (; k < words_.size(); ++k)
            if (words_[k])
                return k * word_bits + static_cast<std::size_t>(std::countr_zero(words_[k]));
        return size_;
    }

    void trim()
    {
        if (size_ % word_bits && !words_.empty())
            words_.back() &= (word_type{1} << (size_ % word_bits)) - 1;
    }

    std::size_t size_ = 0;
    std::vector<word_type> words_;
};

} // namespace sumcol

#endif // SUMCOL_BITSET_HPP
