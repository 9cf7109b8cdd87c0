#pragma once

#include <bit>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <vector>

namespace p5hom {

/// Vertices are 0-based inside the library; file formats and the CLI use 1-based ids.
using Vertex = int;

/// Fixed-universe bitset of vertices. Set semantics; iteration is in increasing id order.
class VertexSet {
public:
    VertexSet() = default;
    explicit VertexSet(int universe) : universe_(universe), words_(word_count(universe), 0) {}
    VertexSet(int universe, std::initializer_list<Vertex> vs) : VertexSet(universe)
    {
        for (auto v : vs)
            insert(v);
    }

    static VertexSet full(int universe)
    {
        VertexSet s(universe);
        for (int v = 0; v < universe; ++v)
            s.insert(v);
        return s;
    }

    [[nodiscard]] int universe() const { return universe_; }

    [[nodiscard]] bool contains(Vertex v) const
    {
        return v >= 0 && v < universe_ && ((words_[v >> 6] >> (v & 63)) & 1U);
    }
    void insert(Vertex v) { words_[v >> 6] |= bit(v); }
    void erase(Vertex v) { words_[v >> 6] &= ~bit(v); }

    [[nodiscard]] int size() const
    {
        int c = 0;
        for (auto w : words_)
            c += std::popcount(w);
        return c;
    }
    [[nodiscard]] bool empty() const
    {
        for (auto w : words_)
            if (w)
                return false;
        return true;
    }

    [[nodiscard]] bool intersects(const VertexSet & o) const
    {
        for (std::size_t i = 0; i < words_.size(); ++i)
            if (words_[i] & o.words_[i])
                return true;
        return false;
    }
    [[nodiscard]] bool is_subset_of(const VertexSet & o) const
    {
        for (std::size_t i = 0; i < words_.size(); ++i)
            if (words_[i] & ~o.words_[i])
                return false;
        return true;
    }

    /// Smallest member, or -1 when empty.
    [[nodiscard]] Vertex first() const { return next(0); }
    /// Smallest member >= from, or -1.
    [[nodiscard]] Vertex next(Vertex from) const
    {
        if (from >= universe_)
            return -1;
        std::size_t i = static_cast<std::size_t>(from) >> 6;
        std::uint64_t w = words_[i] & (~std::uint64_t{0} << (from & 63));
        while (true) {
            if (w)
                return static_cast<Vertex>(i * 64 + std::countr_zero(w));
            if (++i == words_.size())
                return -1;
            w = words_[i];
        }
    }

    template <typename F>
    void for_each(F && f) const
    {
        for (std::size_t i = 0; i < words_.size(); ++i)
            for (auto w = words_[i]; w; w &= w - 1)
                f(static_cast<Vertex>(i * 64 + std::countr_zero(w)));
    }

    [[nodiscard]] std::vector<Vertex> to_vector() const
    {
        std::vector<Vertex> out;
        out.reserve(static_cast<std::size_t>(size()));
        for_each([&](Vertex v) { out.push_back(v); });
        return out;
    }

    VertexSet & operator&=(const VertexSet & o)
    {
        for (std::size_t i = 0; i < words_.size(); ++i)
            words_[i] &= o.words_[i];
        return *this;
    }
    VertexSet & operator|=(const VertexSet & o)
    {
        for (std::size_t i = 0; i < words_.size(); ++i)
            words_[i] |= o.words_[i];
        return *this;
    }
    VertexSet & operator-=(const VertexSet & o)
    {
        for (std::size_t i = 0; i < words_.size(); ++i)
            words_[i] &= ~o.words_[i];
        return *this;
    }
    friend VertexSet operator&(VertexSet a, const VertexSet & b) { return a &= b; }
    friend VertexSet operator|(VertexSet a, const VertexSet & b) { return a |= b; }
    friend VertexSet operator-(VertexSet a, const VertexSet & b) { return a -= b; }

    friend bool operator==(const VertexSet &, const VertexSet &) = default;

    /// Lexicographic order on the sorted member lists.
    friend std::strong_ordering operator<=>(const VertexSet & a, const VertexSet & b)
    {
        auto x = a.first();
        auto y = b.first();
        while (x != -1 && y != -1) {
            if (x != y)
                return x <=> y;
            x = a.next(x + 1);
            y = b.next(y + 1);
        }
        if (x == -1 && y == -1)
            return a.universe_ <=> b.universe_;
        return x == -1 ? std::strong_ordering::less : std::strong_ordering::greater;
    }

    [[nodiscard]] std::size_t hash() const
    {
        std::size_t h = static_cast<std::size_t>(universe_) * 0x9e3779b97f4a7c15ULL;
        for (auto w : words_)
            h = (h ^ w) * 0x100000001b3ULL + (h >> 29);
        return h;
    }

    [[nodiscard]] const std::vector<std::uint64_t> & words() const { return words_; }

private:
    static std::size_t word_count(int universe) { return (static_cast<std::size_t>(universe) + 63) / 64; }
    static std::uint64_t bit(Vertex v) { return std::uint64_t{1} << (v & 63); }

    int universe_ = 0;
    std::vector<std::uint64_t> words_;
};

struct VertexSetHash {
    std::size_t operator()(const VertexSet & s) const { return s.hash(); }
};

}
