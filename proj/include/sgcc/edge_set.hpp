#pragma once

#include <algorithm>
#include <bit>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <vector>

namespace sgcc {

using VertexId = int;
using EdgeId = int;

/// Set of edge ids 1..universe backed by a dynamic bitset.
class EdgeSet {
public:
    EdgeSet() = default;
    explicit EdgeSet(int universe) : universe_(universe), words_(static_cast<std::size_t>(universe / 64 + 1), 0) {}
    EdgeSet(int universe, std::initializer_list<EdgeId> ids) : EdgeSet(universe) {
        for (EdgeId e : ids) insert(e);
    }
    template <typename Range>
    static EdgeSet from(int universe, const Range& ids) {
        EdgeSet s(universe);
        for (EdgeId e : ids) s.insert(e);
        return s;
    }

    int universe() const { return universe_; }

    void insert(EdgeId e) { words_[word(e)] |= bit(e); }
    void erase(EdgeId e) { words_[word(e)] &= ~bit(e); }
    void toggle(EdgeId e) { words_[word(e)] ^= bit(e); }
    bool contains(EdgeId e) const {
        return e >= 1 && e <= universe_ && (words_[word(e)] & bit(e)) != 0;
    }

    int size() const {
        int c = 0;
        for (auto w : words_) c += std::popcount(w);
        return c;
    }
    bool empty() const {
        return std::all_of(words_.begin(), words_.end(), [](std::uint64_t w) { return w == 0; });
    }

    EdgeSet& operator|=(const EdgeSet& o) {
        for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= o.words_[i];
        return *this;
    }
    EdgeSet& operator&=(const EdgeSet& o) {
        for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= o.words_[i];
        return *this;
    }
    EdgeSet& operator^=(const EdgeSet& o) {
        for (std::size_t i = 0; i < words_.size(); ++i) words_[i] ^= o.words_[i];
        return *this;
    }
    EdgeSet& operator-=(const EdgeSet& o) {
        for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= ~o.words_[i];
        return *this;
    }
    friend EdgeSet operator|(EdgeSet a, const EdgeSet& b) { return a |= b; }
    friend EdgeSet operator&(EdgeSet a, const EdgeSet& b) { return a &= b; }
    friend EdgeSet operator^(EdgeSet a, const EdgeSet& b) { return a ^= b; }
    friend EdgeSet operator-(EdgeSet a, const EdgeSet& b) { return a -= b; }

    bool intersects(const EdgeSet& o) const {
        for (std::size_t i = 0; i < words_.size(); ++i)
            if (words_[i] & o.words_[i]) return true;
        return false;
    }
    bool subset_of(const EdgeSet& o) const {
        for (std::size_t i = 0; i < words_.size(); ++i)
            if (words_[i] & ~o.words_[i]) return false;
        return true;
    }

    template <typename F>
    void for_each(F&& f) const {
        for (std::size_t i = 0; i < words_.size(); ++i) {
            std::uint64_t w = words_[i];
            while (w) {
                int b = std::countr_zero(w);
                f(static_cast<EdgeId>(i * 64 + static_cast<std::size_t>(b)));
                w &= w - 1;
            }
        }
    }

    std::vector<EdgeId> ids() const {
        std::vector<EdgeId> out;
        for_each([&](EdgeId e) { out.push_back(e); });
        return out;
    }

    EdgeId first() const {
        for (std::size_t i = 0; i < words_.size(); ++i)
            if (words_[i]) return static_cast<EdgeId>(i * 64 + static_cast<std::size_t>(std::countr_zero(words_[i])));
        return 0;
    }

    friend bool operator==(const EdgeSet& a, const EdgeSet& b) {
        return a.universe_ == b.universe_ && a.words_ == b.words_;
    }

    std::size_t hash() const {
        std::size_t h = 0;
        for (auto w : words_) h = h * 0x9e3779b97f4a7c15ULL ^ std::hash<std::uint64_t>{}(w);
        return h;
    }

private:
    static std::size_t word(EdgeId e) { return static_cast<std::size_t>(e) / 64; }
    static std::uint64_t bit(EdgeId e) { return std::uint64_t{1} << (static_cast<unsigned>(e) % 64); }

    int universe_ = 0;
    std::vector<std::uint64_t> words_;
};

/// Lexicographic order on the sorted id sequences ({1,2} < {1,3} < {2}; a prefix sorts first).
inline bool lex_less(const EdgeSet& a, const EdgeSet& b) {
    auto x = a.ids();
    auto y = b.ids();
    return std::lexicographical_compare(x.begin(), x.end(), y.begin(), y.end());
}

struct EdgeSetHash {
    std::size_t operator()(const EdgeSet& s) const { return s.hash(); }
};

}  // namespace sgcc
