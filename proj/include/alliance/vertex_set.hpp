#pragma once

#include "error.hpp"

#include <algorithm>
#include <bit>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

namespace alliance {

using Vertex = std::uint32_t;

/**
 * A subset of the vertex indices 0..universe-1, stored as a packed bitset.
 *
 * The universe size is part of the value: two sets over different universes
 * never compare equal, and binary operations require matching universes.
 * Cardinality is maintained incrementally so size() is O(1).
 */
class VertexSet {
public:
    using Word = std::uint64_t;
    static constexpr std::size_t word_bits = 64;

    VertexSet() = default;

    explicit VertexSet(std::size_t universe)
        : universe_(universe), words_((universe + word_bits - 1) / word_bits, 0) {}

    VertexSet(std::size_t universe, std::initializer_list<Vertex> members)
        : VertexSet(universe) {
        for (Vertex v : members) insert(v);
    }

    template <typename Range>
    static VertexSet from_range(std::size_t universe, const Range& members) {
        VertexSet s(universe);
        for (auto v : members) s.insert(static_cast<Vertex>(v));
        return s;
    }

    static VertexSet full(std::size_t universe) {
        VertexSet s(universe);
        for (std::size_t v = 0; v < universe; ++v) s.insert(static_cast<Vertex>(v));
        return s;
    }

    /// Low `universe` bits of `mask` (universe <= 64).
    static VertexSet from_mask(std::size_t universe, std::uint64_t mask) {
        if (universe > word_bits)
            throw InvalidArgument("VertexSet::from_mask: universe exceeds 64");
        VertexSet s(universe);
        if (universe == 0) return s;
        if (universe < word_bits) mask &= (Word{1} << universe) - 1;
        s.words_[0] = mask;
        s.count_ = static_cast<std::size_t>(std::popcount(mask));
        return s;
    }

    std::size_t universe() const noexcept { return universe_; }
    std::size_t size() const noexcept { return count_; }
    bool empty() const noexcept { return count_ == 0; }

    bool contains(Vertex v) const {
        check(v);
        return (words_[v / word_bits] >> (v % word_bits)) & Word{1};
    }

    void insert(Vertex v) {
        check(v);
        Word& w = words_[v / word_bits];
        const Word bit = Word{1} << (v % word_bits);
        if (!(w & bit)) {
            w |= bit;
            ++count_;
        }
    }

    void erase(Vertex v) {
        check(v);
        Word& w = words_[v / word_bits];
        const Word bit = Word{1} << (v % word_bits);
        if (w & bit) {
            w &= ~bit;
            --count_;
        }
    }

    VertexSet complement() const {
        VertexSet out(universe_);
        for (std::size_t i = 0; i < words_.size(); ++i) out.words_[i] = ~words_[i];
        out.trim();
        out.recount();
        return out;
    }

    /// |this ∩ other| without materializing the intersection.
    std::size_t intersection_size(const VertexSet& other) const {
        same_universe(other);
        std::size_t c = 0;
        for (std::size_t i = 0; i < words_.size(); ++i)
            c += static_cast<std::size_t>(std::popcount(words_[i] & other.words_[i]));
        return c;
    }

    VertexSet& operator|=(const VertexSet& other) {
        same_universe(other);
        for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= other.words_[i];
        recount();
        return *this;
    }

    VertexSet& operator&=(const VertexSet& other) {
        same_universe(other);
        for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= other.words_[i];
        recount();
        return *this;
    }

    /// Set difference.
    VertexSet& operator-=(const VertexSet& other) {
        same_universe(other);
        for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= ~other.words_[i];
        recount();
        return *this;
    }

    friend VertexSet operator|(VertexSet a, const VertexSet& b) { return a |= b; }
    friend VertexSet operator&(VertexSet a, const VertexSet& b) { return a &= b; }
    friend VertexSet operator-(VertexSet a, const VertexSet& b) { return a -= b; }

    bool is_subset_of(const VertexSet& other) const {
        same_universe(other);
        for (std::size_t i = 0; i < words_.size(); ++i)
            if (words_[i] & ~other.words_[i]) return false;
        return true;
    }

    bool disjoint_from(const VertexSet& other) const { return intersection_size(other) == 0; }

    /// Members in increasing order.
    std::vector<Vertex> members() const {
        std::vector<Vertex> out;
        out.reserve(count_);
        for_each([&](Vertex v) { out.push_back(v); });
        return out;
    }

    template <typename F>
    void for_each(F&& f) const {
        for (std::size_t i = 0; i < words_.size(); ++i) {
            Word w = words_[i];
            while (w) {
                const auto bit = static_cast<std::size_t>(std::countr_zero(w));
                f(static_cast<Vertex>(i * word_bits + bit));
                w &= w - 1;
            }
        }
    }

    std::span<const Word> words() const noexcept { return words_; }

    /// Lexicographic order on the sorted member sequences.
    bool lex_less(const VertexSet& other) const {
        const auto a = members();
        const auto b = other.members();
        return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
    }

    friend bool operator==(const VertexSet& a, const VertexSet& b) {
        return a.universe_ == b.universe_ && a.words_ == b.words_;
    }

    std::string to_string() const {
        std::string s = "{";
        bool first = true;
        for_each([&](Vertex v) {
            if (!first) s += ",";
            s += std::to_string(v);
            first = false;
        });
        return s + "}";
    }

private:
    void check(Vertex v) const {
        if (v >= universe_)
            throw InvalidArgument("vertex " + std::to_string(v) + " out of range for universe of size " +
                                  std::to_string(universe_));
    }

    void same_universe(const VertexSet& other) const {
        if (other.universe_ != universe_)
            throw InvalidArgument("vertex sets over different universes");
    }

    void trim() {
        const std::size_t tail = universe_ % word_bits;
        if (tail != 0 && !words_.empty()) words_.back() &= (Word{1} << tail) - 1;
    }

    void recount() {
        count_ = 0;
        for (Word w : words_) count_ += static_cast<std::size_t>(std::popcount(w));
    }

    std::size_t universe_ = 0;
    std::vector<Word> words_;
    std::size_t count_ = 0;
};

} // namespace alliance
