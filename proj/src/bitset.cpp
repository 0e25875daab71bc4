#include "annigraph/bitset.hpp"

namespace annigraph {

std::size_t DynBitset::count() const {
    std::size_t c = 0;
    for (uint64_t w : words_) c += static_cast<std::size_t>(__builtin_popcountll(w));
    return c;
}

bool DynBitset::any() const {
    for (uint64_t w : words_)
        if (w) return true;
    return false;
}

DynBitset& DynBitset::operator&=(const DynBitset& o) {
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= o.words_[i];
    return *this;
}

DynBitset& DynBitset::operator|=(const DynBitset& o) {
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= o.words_[i];
    return *this;
}

bool DynBitset::subset_of(const DynBitset& o) const {
    for (std::size_t i = 0; i < words_.size(); ++i)
        if (words_[i] & ~o.words_[i]) return false;
    return true;
}

bool DynBitset::operator<(const DynBitset& o) const {
    if (nbits_ != o.nbits_) return nbits_ < o.nbits_;
    return words_ < o.words_;
}

std::vector<int> DynBitset::to_vector() const {
    std::vector<int> out;
    out.reserve(count());
    for_each([&](std::size_t i) { out.push_back(static_cast<int>(i)); });
    return out;
}

std::size_t DynBitset::hash() const {
    std::size_t h = nbits_;
    for (uint64_t w : words_) h = h * 1099511628211ULL + static_cast<std::size_t>(w);
    return h;
}

} // namespace annigraph
