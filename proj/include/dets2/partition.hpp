#pragma once

#include <numeric>
#include <optional>
#include <string>
#include <vector>

#include "dets2/edge_tensor.hpp"
#include "dets2/random.hpp"

namespace dets2 {

// Edge coloring of K_{2d} with colors 1..d, i.e. an ordered d-tuple of
// spanning subgraphs whose edge sets partition E(K_{2d}). Stored flat in
// colex edge order.
class Partition {
public:
    Partition(int d, std::vector<int> colors) : d_(d), colors_(std::move(colors)) {
        if (d_ < 1) throw std::invalid_argument("Partition: d must be >= 1");
        if (static_cast<int>(colors_.size()) != edge_count(d_))
            throw std::invalid_argument("Partition: expected " + std::to_string(edge_count(d_)) +
                                        " edge colors, got " + std::to_string(colors_.size()));
        for (int c : colors_)
            if (c < 1 || c > d_)
                throw std::invalid_argument("Partition: color " + std::to_string(c) +
                                            " out of range 1.." + std::to_string(d_));
    }

    static Partition constant(int d, int color) {
        return Partition(d, std::vector<int>(static_cast<std::size_t>(edge_count(d)), color));
    }

    int d() const { return d_; }
    int color(Edge e) const { return colors_[static_cast<std::size_t>(column_index(e, d_)) - 1]; }
    const std::vector<int>& colors() const { return colors_; }

    Partition with_color(Edge e, int c) const {
        Partition out = *this;
        out.set_color(e, c);
        return out;
    }

    void set_color(Edge e, int c) {
        if (c < 1 || c > d_) throw std::invalid_argument("Partition: color out of range");
        colors_[static_cast<std::size_t>(column_index(e, d_)) - 1] = c;
    }

    friend bool operator==(const Partition&, const Partition&) = default;

private:
    int d_;
    std::vector<int> colors_;
};

class DisjointSets {
public:
    explicit DisjointSets(int n) : parent_(static_cast<std::size_t>(n)), size_(static_cast<std::size_t>(n), 1) {
        std::iota(parent_.begin(), parent_.end(), 0);
    }

    int find(int x) {
        while (parent_[static_cast<std::size_t>(x)] != x) {
            parent_[static_cast<std::size_t>(x)] = parent_[static_cast<std::size_t>(parent_[static_cast<std::size_t>(x)])];
            x = parent_[static_cast<std::size_t>(x)];
        }
        return x;
    }

    // false if a and b were already connected
    bool unite(int a, int b) {
        int ra = find(a), rb = find(b);
        if (ra == rb) return false;
        if (size_[static_cast<std::size_t>(ra)] < size_[static_cast<std::size_t>(rb)]) std::swap(ra, rb);
        parent_[static_cast<std::size_t>(rb)] = ra;
        size_[static_cast<std::size_t>(ra)] += size_[static_cast<std::size_t>(rb)];
        return true;
    }

private:
    std::vector<int> parent_;
    std::vector<int> size_;
};

struct CycleFreeReport {
    bool cycle_free = false;
    std::vector<bool> per_color; // per_color[c-1]: color class c is acyclic
};

// union-find per color class; the independent DFS second opinion lives in
// the oracle header
inline CycleFreeReport cycle_free_report(const Partition& p) {
    const int d = p.d();
    CycleFreeReport rep;
    rep.per_color.assign(static_cast<std::size_t>(d), true);
    std::vector<DisjointSets> forests(static_cast<std::size_t>(d), DisjointSets(vertex_count(d)));
    for (Edge e : edges(d)) {
        const int c = p.color(e);
        if (!rep.per_color[static_cast<std::size_t>(c - 1)]) continue;
        if (!forests[static_cast<std::size_t>(c - 1)].unite(e.i - 1, e.j - 1))
            rep.per_color[static_cast<std::size_t>(c - 1)] = false;
    }
    rep.cycle_free = true;
    for (bool ok : rep.per_color) rep.cycle_free = rep.cycle_free && ok;
    return rep;
}

inline bool is_cycle_free(const Partition& p) { return cycle_free_report(p).cycle_free; }

inline std::vector<int> color_class_sizes(const Partition& p) {
    std::vector<int> n(static_cast<std::size_t>(p.d()), 0);
    for (int c : p.colors()) ++n[static_cast<std::size_t>(c - 1)];
    return n;
}

// every color class has exactly 2d-1 edges
inline bool is_homogeneous(const Partition& p) {
    for (int n : color_class_sizes(p))
        if (n != 2 * p.d() - 1) return false;
    return true;
}

template <class F>
EdgeTensor<typename F::Scalar> partition_to_tensor(const Partition& p, F field) {
    EdgeTensor<typename F::Scalar> t(p.d(), field);
    for (Edge e : edges(p.d())) {
        VectorX<typename F::Scalar> v(p.d());
        v.fill(field.zero());
        v(p.color(e) - 1) = field.one();
        t.set_vec(e, v);
    }
    return t;
}

template <class S>
Partition tensor_to_partition(const EdgeTensor<S>& t) {
    auto labels = basis_labels(t);
    if (!labels)
        throw InputError("tensor_to_partition: some slot is not a standard basis vector");
    return Partition(t.d(), std::move(*labels));
}

// The unique homogeneous cycle-free partition that agrees with p outside the
// triangle {x,y,z} and differs on at least two of its edges. Found by trying
// all d^3 recolorings of the three triangle edges; zero or several candidates
// contradict the uniqueness guarantee and throw.
inline Partition triple_flip(const Partition& p, int x, int y, int z) {
    const int d = p.d();
    if (!(1 <= x && x < y && y < z && z <= vertex_count(d)))
        throw std::invalid_argument("triple_flip: need 1 <= x < y < z <= 2d");
    if (!is_homogeneous(p) || !is_cycle_free(p))
        throw std::invalid_argument("triple_flip: partition must be homogeneous and cycle-free");
    const Edge exy{x, y}, exz{x, z}, eyz{y, z};
    std::optional<Partition> found;
    int count = 0;
    Partition cand = p;
    for (int c1 = 1; c1 <= d; ++c1)
        for (int c2 = 1; c2 <= d; ++c2)
            for (int c3 = 1; c3 <= d; ++c3) {
                const int differs = (c1 != p.color(exy)) + (c2 != p.color(exz)) + (c3 != p.color(eyz));
                if (differs < 2) continue;
                cand.set_color(exy, c1);
                cand.set_color(exz, c2);
                cand.set_color(eyz, c3);
                if (!is_homogeneous(cand) || !is_cycle_free(cand)) continue;
                ++count;
                found = cand;
            }
    if (count != 1)
        throw InvariantViolation("triple_flip at (" + std::to_string(x) + "," + std::to_string(y) +
                                 "," + std::to_string(z) + "): " + std::to_string(count) +
                                 " candidates, expected exactly 1");
    return *found;
}

// Exhaustive stream over all d^{d(2d-1)} colorings, odometer order with the
// colex-first edge as the least significant digit. Exhaustion is only
// sensible for d=2 (64 partitions); d=3 (3^15 = 14,348,907) must be asked
// for explicitly, and larger d is refused outright.
class PartitionEnumerator {
public:
    explicit PartitionEnumerator(int d, bool allow_large = false) : d_(d) {
        if (d < 2) throw InputError("enumeration requires d >= 2");
        if (d == 3 && !allow_large)
            throw InputError("exhaustive enumeration at d=3 iterates 3^15 partitions; pass the override to allow it");
        if (d > 3) throw InputError("exhaustive enumeration is not traversable for d >= 4");
        digits_.assign(static_cast<std::size_t>(edge_count(d)), 1);
    }

    std::uint64_t total() const {
        std::uint64_t n = 1;
        for (int e = 0; e < edge_count(d_); ++e) n *= static_cast<std::uint64_t>(d_);
        return n;
    }

    std::optional<Partition> next() {
        if (done_) return std::nullopt;
        Partition out(d_, digits_);
        // advance the odometer
        std::size_t pos = 0;
        while (pos < digits_.size()) {
            if (digits_[pos] < d_) {
                ++digits_[pos];
                break;
            }
            digits_[pos] = 1;
            ++pos;
        }
        if (pos == digits_.size()) done_ = true;
        return out;
    }

private:
    int d_;
    std::vector<int> digits_;
    bool done_ = false;
};

inline Partition random_partition(SeededRng& rng, int d) {
    std::vector<int> colors(static_cast<std::size_t>(edge_count(d)));
    for (auto& c : colors) c = 1 + static_cast<int>(rng.below(static_cast<std::uint64_t>(d)));
    return Partition(d, std::move(colors));
}

// Seeded i.i.d. uniform colorings; same seed, same stream.
class PartitionSampler {
public:
    PartitionSampler(int d, std::uint64_t seed) : d_(d), rng_(seed) {}
    Partition next() { return random_partition(rng_, d_); }

private:
    int d_;
    SeededRng rng_;
};

inline std::vector<Partition> sample_partitions(int d, int count, std::uint64_t seed) {
    PartitionSampler s(d, seed);
    std::vector<Partition> out;
    out.reserve(static_cast<std::size_t>(count));
    for (int i = 0; i < count; ++i) out.push_back(s.next());
    return out;
}

// rejection sampling; the homogeneous cycle-free fraction is large enough at
// desk scale (d <= 3) for this to terminate quickly
inline Partition random_homogeneous_cycle_free(SeededRng& rng, int d) {
    for (;;) {
        Partition p = random_partition(rng, d);
        if (is_homogeneous(p) && is_cycle_free(p)) return p;
    }
}

// Partition with a monochromatic cycle of the given length planted on the
// first `length` vertices in color 1; every other edge gets a random color.
inline Partition planted_cycle_partition(SeededRng& rng, int d, int length) {
    if (length < 3 || length > vertex_count(d))
        throw std::invalid_argument("planted_cycle_partition: bad cycle length");
    Partition p = random_partition(rng, d);
    for (int v = 1; v <= length; ++v) {
        int w = v == length ? 1 : v + 1;
        Edge e{std::min(v, w), std::max(v, w)};
        p.set_color(e, 1);
    }
    return p;
}

} // namespace dets2
