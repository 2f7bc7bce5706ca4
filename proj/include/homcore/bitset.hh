#ifndef HOMCORE_BITSET_HH
#define HOMCORE_BITSET_HH

#include <cstdint>
#include <cstddef>
#include <vector>

namespace homcore {

// Dynamic fixed-size bitset used for vertex sets and adjacency rows.
// Size is fixed at construction; all binary operations assume equal sizes.
class Bitset {
public:
    static constexpr std::size_t npos = static_cast<std::size_t>(-1);

    Bitset() = default;

    explicit Bitset(std::size_t n, bool value = false)
        : n_bits_(n), words_((n + 63) / 64, value ? ~std::uint64_t{0} : 0)
    {
        trim();
    }

    std::size_t size() const { return n_bits_; }

    bool test(std::size_t i) const { return (words_[i >> 6] >> (i & 63)) & 1; }

    void set(std::size_t i) { words_[i >> 6] |= std::uint64_t{1} << (i & 63); }

    void reset(std::size_t i) { words_[i >> 6] &= ~(std::uint64_t{1} << (i & 63)); }

    void set_all()
    {
        for (auto & w : words_)
            w = ~std::uint64_t{0};
        trim();
    }

    void reset_all()
    {
        for (auto & w : words_)
            w = 0;
    }

    std::size_t count() const
    {
        std::size_t c = 0;
        for (auto w : words_)
            c += static_cast<std::size_t>(__builtin_popcountll(w));
        return c;
    }

    bool none() const
    {
        for (auto w : words_)
            if (w != 0)
                return false;
        return true;
    }

    bool any() const { return ! none(); }

    void and_with(const Bitset & other)
    {
        for (std::size_t i = 0; i < words_.size(); ++i)
            words_[i] &= other.words_[i];
    }

    void or_with(const Bitset & other)
    {
        for (std::size_t i = 0; i < words_.size(); ++i)
            words_[i] |= other.words_[i];
    }

    void and_not_with(const Bitset & other)
    {
        for (std::size_t i = 0; i < words_.size(); ++i)
            words_[i] &= ~other.words_[i];
    }

    bool intersects(const Bitset & other) const
    {
        for (std::size_t i = 0; i < words_.size(); ++i)
            if (words_[i] & other.words_[i])
                return true;
        return false;
    }

    bool is_subset_of(const Bitset & other) const
    {
        for (std::size_t i = 0; i < words_.size(); ++i)
            if (words_[i] & ~other.words_[i])
                return false;
        return true;
    }

    std::size_t find_first() const { return find_next_from(0); }

    // first set bit at position >= i, or npos
    std::size_t find_next_from(std::size_t i) const
    {
        if (i >= n_bits_)
            return npos;
        std::size_t wi = i >> 6;
        std::uint64_t w = words_[wi] & (~std::uint64_t{0} << (i & 63));
        while (true) {
            if (w != 0)
                return (wi << 6) + static_cast<std::size_t>(__builtin_ctzll(w));
            if (++wi == words_.size())
                return npos;
            w = words_[wi];
        }
    }

    bool operator==(const Bitset & other) const = default;

private:
    void trim()
    {
        if (n_bits_ & 63)
            words_.back() &= (~std::uint64_t{0}) >> (64 - (n_bits_ & 63));
    }

    std::size_t n_bits_ = 0;
    std::vector<std::uint64_t> words_;
};

}

#endif
