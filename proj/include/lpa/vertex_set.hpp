#ifndef LPA_VERTEX_SET_HPP
#define LPA_VERTEX_SET_HPP

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <vector>

namespace lpa {

using VertexId = std::uint32_t;

/// Set of vertices of a fixed ambient graph, stored as a bitset over vertex
/// indices. Two sets are comparable only when their universes agree; mixing
/// universes throws. The first 64 bits live inline, so sets over graphs with
/// at most 64 vertices never allocate.
class VertexSet {
public:
    VertexSet() = default;
    explicit VertexSet(std::size_t universe)
        : universe_(universe),
          tail_(universe > 64 ? (universe + 63) / 64 - 1 : 0, 0) {}

    static VertexSet all(std::size_t universe) {
        VertexSet s(universe);
        for (std::size_t w = 0; w < s.word_count(); ++w)
            s.word(w) = ~std::uint64_t{0};
        s.trim();
        return s;
    }

    /// Builds a set from a bitmask; only usable for universes of at most 64.
    static VertexSet from_mask(std::size_t universe, std::uint64_t mask) {
        if (universe > 64)
            throw std::invalid_argument("VertexSet::from_mask: universe exceeds 64");
        VertexSet s(universe);
        s.head_ = mask;
        s.trim();
        return s;
    }

    std::size_t universe() const { return universe_; }

    bool contains(VertexId v) const {
        check_vertex(v);
        return (word(v >> 6) >> (v & 63)) & 1u;
    }

    void insert(VertexId v) {
        check_vertex(v);
        word(v >> 6) |= std::uint64_t{1} << (v & 63);
    }

    void erase(VertexId v) {
        check_vertex(v);
        word(v >> 6) &= ~(std::uint64_t{1} << (v & 63));
    }

    bool empty() const {
        for (std::size_t w = 0; w < word_count(); ++w)
            if (word(w)) return false;
        return true;
    }

    std::size_t count() const {
        std::size_t n = 0;
        for (std::size_t w = 0; w < word_count(); ++w)
            n += static_cast<std::size_t>(__builtin_popcountll(word(w)));
        return n;
    }

    bool is_subset_of(const VertexSet& other) const {
        check_same(other);
        for (std::size_t w = 0; w < word_count(); ++w)
            if (word(w) & ~other.word(w)) return false;
        return true;
    }

    bool intersects(const VertexSet& other) const {
        check_same(other);
        for (std::size_t w = 0; w < word_count(); ++w)
            if (word(w) & other.word(w)) return true;
        return false;
    }

    VertexSet& unite(const VertexSet& other) {
        check_same(other);
        for (std::size_t w = 0; w < word_count(); ++w)
            word(w) |= other.word(w);
        return *this;
    }

    VertexSet& intersect(const VertexSet& other) {
        check_same(other);
        for (std::size_t w = 0; w < word_count(); ++w)
            word(w) &= other.word(w);
        return *this;
    }

    VertexSet& subtract(const VertexSet& other) {
        check_same(other);
        for (std::size_t w = 0; w < word_count(); ++w)
            word(w) &= ~other.word(w);
        return *this;
    }

    VertexSet complement() const {
        VertexSet s(universe_);
        for (std::size_t w = 0; w < word_count(); ++w)
            s.word(w) = ~word(w);
        s.trim();
        return s;
    }

    bool operator==(const VertexSet& other) const {
        if (universe_ != other.universe_) return false;
        for (std::size_t w = 0; w < word_count(); ++w)
            if (word(w) != other.word(w)) return false;
        return true;
    }
    bool operator!=(const VertexSet& other) const { return !(*this == other); }

    /// Lexicographic order on the underlying words; a total order usable as a
    /// map key. Sets over smaller universes sort first.
    bool operator<(const VertexSet& other) const {
        if (universe_ != other.universe_) return universe_ < other.universe_;
        for (std::size_t w = word_count(); w-- > 0;)
            if (word(w) != other.word(w)) return word(w) < other.word(w);
        return false;
    }

    std::vector<VertexId> to_vector() const {
        std::vector<VertexId> out;
        out.reserve(count());
        for (std::size_t w = 0; w < word_count(); ++w) {
            std::uint64_t bits = word(w);
            while (bits) {
                int b = __builtin_ctzll(bits);
                out.push_back(static_cast<VertexId>(w * 64 + static_cast<std::size_t>(b)));
                bits &= bits - 1;
            }
        }
        return out;
    }

    template <typename Fn>
    void for_each(Fn&& fn) const {
        for (std::size_t w = 0; w < word_count(); ++w) {
            std::uint64_t bits = word(w);
            while (bits) {
                int b = __builtin_ctzll(bits);
                fn(static_cast<VertexId>(w * 64 + static_cast<std::size_t>(b)));
                bits &= bits - 1;
            }
        }
    }

    /// The bitmask over a universe of at most 64 vertices.
    std::uint64_t mask() const {
        if (universe_ > 64)
            throw std::logic_error("VertexSet::mask: universe exceeds 64");
        return head_;
    }

private:
    std::size_t word_count() const { return universe_ == 0 ? 0 : (universe_ + 63) / 64; }

    std::uint64_t& word(std::size_t w) { return w == 0 ? head_ : tail_[w - 1]; }
    std::uint64_t word(std::size_t w) const { return w == 0 ? head_ : tail_[w - 1]; }

    void trim() {
        if (universe_ == 0) {
            head_ = 0;
            return;
        }
        std::size_t last = word_count() - 1;
        std::size_t used = universe_ - last * 64;
        if (used < 64)
            word(last) &= (std::uint64_t{1} << used) - 1;
    }

    void check_vertex(VertexId v) const {
        if (v >= universe_)
            throw std::invalid_argument("VertexSet: vertex index outside universe");
    }
    void check_same(const VertexSet& other) const {
        if (universe_ != other.universe_)
            throw std::invalid_argument("VertexSet: universe mismatch");
    }

    std::size_t universe_ = 0;
    std::uint64_t head_ = 0;
    std::vector<std::uint64_t> tail_;
};

inline VertexSet set_union(VertexSet a, const VertexSet& b) { return a.unite(b); }
inline VertexSet set_intersection(VertexSet a, const VertexSet& b) { return a.intersect(b); }
inline VertexSet set_difference(VertexSet a, const VertexSet& b) { return a.subtract(b); }

} // namespace lpa

#endif // LPA_VERTEX_SET_HPP
