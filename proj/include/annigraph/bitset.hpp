#ifndef ANNIGRAPH_BITSET_HPP
#define ANNIGRAPH_BITSET_HPP

#include <cstdint>
#include <cstddef>
#include <vector>

namespace annigraph {

// Fixed-capacity dynamic bitset used for element sets of finite rings,
// modules and graphs. Capacity is set at construction and never grows.
class DynBitset {
public:
    DynBitset() = default;
    explicit DynBitset(std::size_t nbits)
        : nbits_(nbits), words_((nbits + 63) / 64, 0) {}

    std::size_t size() const { return nbits_; }

    void set(std::size_t i) { words_[i >> 6] |= (uint64_t{1} << (i & 63)); }
    void reset(std::size_t i) { words_[i >> 6] &= ~(uint64_t{1} << (i & 63)); }
    bool test(std::size_t i) const {
        return (words_[i >> 6] >> (i & 63)) & 1;
    }

    std::size_t count() const;
    bool any() const;
    bool none() const { return !any(); }

    DynBitset& operator&=(const DynBitset& o);
    DynBitset& operator|=(const DynBitset& o);
    friend DynBitset operator&(DynBitset a, const DynBitset& b) { a &= b; return a; }
    friend DynBitset operator|(DynBitset a, const DynBitset& b) { a |= b; return a; }

    bool operator==(const DynBitset& o) const {
        return nbits_ == o.nbits_ && words_ == o.words_;
    }
    bool operator!=(const DynBitset& o) const { return !(*this == o); }

    // subset test: every bit of *this is set in o
    bool subset_of(const DynBitset& o) const;

    // lexicographic order on the word vectors; total and deterministic
    bool operator<(const DynBitset& o) const;

    // visit set bits in ascending order
    template <class F>
    void for_each(F&& f) const {
        for (std::size_t w = 0; w < words_.size(); ++w) {
            uint64_t v = words_[w];
            while (v) {
                unsigned b = static_cast<unsigned>(__builtin_ctzll(v));
                f(w * 64 + b);
                v &= v - 1;
            }
        }
    }

    std::vector<int> to_vector() const;

    std::size_t hash() const;

private:
    std::size_t nbits_ = 0;
    std::vector<uint64_t> words_;
};

} // namespace annigraph

#endif
