#ifndef HOLLOW_VERTEX_SET_HPP
#define HOLLOW_VERTEX_SET_HPP

#include <bit>
#include <cstdint>
#include <vector>

namespace hollow {

// Subset of vertex identifiers with bitset semantics.  Two machine words,
// which caps graphs at 128 vertices; every downstream search is
// subset-intensive, so set operations must be word ops.
class VertexSet {
public:
    static constexpr int kCapacity = 128;

    constexpr VertexSet() : w_{0, 0} {}

    static VertexSet single(int v) {
        VertexSet s;
        s.add(v);
        return s;
    }

    static VertexSet full(int n) {
        VertexSet s;
        if (n >= 64) {
            s.w_[0] = ~0ull;
            s.w_[1] = (n == 128) ? ~0ull : ((1ull << (n - 64)) - 1);
        } else {
            s.w_[0] = (n == 64) ? ~0ull : ((1ull << n) - 1);
        }
        return s;
    }

    static VertexSet of(std::initializer_list<int> vs) {
        VertexSet s;
        for (int v : vs) s.add(v);
        return s;
    }

    static VertexSet from(const std::vector<int>& vs) {
        VertexSet s;
        for (int v : vs) s.add(v);
        return s;
    }

    void add(int v) { w_[v >> 6] |= 1ull << (v & 63); }
    void remove(int v) { w_[v >> 6] &= ~(1ull << (v & 63)); }
    bool contains(int v) const { return (w_[v >> 6] >> (v & 63)) & 1; }

    int size() const {
        return std::popcount(w_[0]) + std::popcount(w_[1]);
    }
    bool empty() const { return (w_[0] | w_[1]) == 0; }

    // Smallest member, or -1 when empty.
    int min() const {
        if (w_[0]) return std::countr_zero(w_[0]);
        if (w_[1]) return 64 + std::countr_zero(w_[1]);
        return -1;
    }

    VertexSet operator|(VertexSet o) const {
        return VertexSet(w_[0] | o.w_[0], w_[1] | o.w_[1]);
    }
    VertexSet operator&(VertexSet o) const {
        return VertexSet(w_[0] & o.w_[0], w_[1] & o.w_[1]);
    }
    // Set difference.
    VertexSet operator-(VertexSet o) const {
        return VertexSet(w_[0] & ~o.w_[0], w_[1] & ~o.w_[1]);
    }
    VertexSet& operator|=(VertexSet o) { return *this = *this | o; }
    VertexSet& operator&=(VertexSet o) { return *this = *this & o; }
    VertexSet& operator-=(VertexSet o) { return *this = *this - o; }

    bool operator==(const VertexSet& o) const = default;

    bool intersects(VertexSet o) const {
        return ((w_[0] & o.w_[0]) | (w_[1] & o.w_[1])) != 0;
    }
    bool subset_of(VertexSet o) const {
        return (w_[0] & ~o.w_[0]) == 0 && (w_[1] & ~o.w_[1]) == 0;
    }
    bool proper_subset_of(VertexSet o) const {
        return subset_of(o) && *this != o;
    }

    // Members in ascending order.
    std::vector<int> to_vector() const {
        std::vector<int> out;
        out.reserve(static_cast<std::size_t>(size()));
        for (int word = 0; word < 2; ++word) {
            std::uint64_t bits = w_[word];
            while (bits) {
                out.push_back(64 * word + std::countr_zero(bits));
                bits &= bits - 1;
            }
        }
        return out;
    }

    template <typename F>
    void for_each(F&& f) const {
        for (int word = 0; word < 2; ++word) {
            std::uint64_t bits = w_[word];
            while (bits) {
                f(64 * word + std::countr_zero(bits));
                bits &= bits - 1;
            }
        }
    }

    // Order matching lexicographic comparison of the ascending member
    // sequences; used wherever a canonical choice among sets is needed.
    static bool seq_less(const VertexSet& a, const VertexSet& b) {
        std::uint64_t da0 = a.w_[0] ^ b.w_[0];
        std::uint64_t da1 = a.w_[1] ^ b.w_[1];
        if (!da0 && !da1) return false;
        int i = -1, j = -1;  // walk both ascending
        while (true) {
            i = a.next_after(i);
            j = b.next_after(j);
            if (i == -1) return true;   // a exhausted first: prefix, smaller
            if (j == -1) return false;  // b exhausted first
            if (i != j) return i < j;
        }
    }

    // Next member strictly greater than v, or -1.
    int next_after(int v) const {
        for (int u = v + 1; u < kCapacity; ++u) {
            if (u < 64) {
                std::uint64_t rest = w_[0] & ~((u == 0) ? 0ull : ((1ull << u) - 1));
                if (rest) return std::countr_zero(rest);
                u = 63;
            } else {
                std::uint64_t rest = w_[1] & ~((u == 64) ? 0ull : ((1ull << (u - 64)) - 1));
                if (rest) return 64 + std::countr_zero(rest);
                return -1;
            }
        }
        return -1;
    }

    std::uint64_t word(int i) const { return w_[i]; }

    // Strict total order for use as a map key (not the sequence order).
    bool operator<(const VertexSet& o) const {
        if (w_[1] != o.w_[1]) return w_[1] < o.w_[1];
        return w_[0] < o.w_[0];
    }

private:
    constexpr VertexSet(std::uint64_t lo, std::uint64_t hi) : w_{lo, hi} {}
    std::uint64_t w_[2];
};

}  // namespace hollow

#endif
