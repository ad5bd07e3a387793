#pragma once

#include <cstdint>
#include <cstdlib>
#include <stdexcept>
#include <string>
#include <vector>

namespace sdfa {

// Bad arguments, parse failures, violated preconditions. CLI exit code 2.
struct input_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Order cap or ideal-lattice cap exceeded. CLI exit code 3.
struct resource_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// A fast criterion disagreed with the brute-force oracle, or an internal
// assertion failed. Never caught silently; CLI reports it and exits 1.
struct defect_error : std::logic_error {
    using std::logic_error::logic_error;
};

// Parse error carrying a byte offset into the input spec string.
struct parse_error : input_error {
    parse_error(const std::string& msg, std::size_t position)
        : input_error(msg + " (at position " + std::to_string(position) + ")"),
          pos(position) {}
    std::size_t pos;
};

constexpr int kDefaultOrderCap = 4096;
constexpr int kDefaultLatticeCap = 100000;

// Element order cap for constructed rings; SDFA_ORDER_CAP overrides.
inline int order_cap() {
    static const int cap = [] {
        if (const char* s = std::getenv("SDFA_ORDER_CAP")) {
            char* end = nullptr;
            long v = std::strtol(s, &end, 10);
            if (end && *end == '\0' && v >= 2) return static_cast<int>(v);
        }
        return kDefaultOrderCap;
    }();
    return cap;
}

// Subset of 0..n-1 as a packed bitset. Ideals and cached element sets use
// this; comparisons scan bit 0 upward so orderings are reproducible.
class ElemSet {
public:
    ElemSet() = default;
    explicit ElemSet(int n) : n_(n), w_((n + 63) / 64, 0) {}

    int universe() const { return n_; }
    bool contains(int i) const { return (w_[i >> 6] >> (i & 63)) & 1u; }
    void insert(int i) {
        if (!contains(i)) {
            w_[i >> 6] |= std::uint64_t{1} << (i & 63);
            ++count_;
        }
    }
    int size() const { return count_; }
    bool empty() const { return count_ == 0; }

    std::vector<int> elements() const {
        std::vector<int> out;
        out.reserve(count_);
        for (int i = 0; i < n_; ++i)
            if (contains(i)) out.push_back(i);
        return out;
    }

    bool operator==(const ElemSet& o) const { return n_ == o.n_ && w_ == o.w_; }
    bool operator!=(const ElemSet& o) const { return !(*this == o); }

    bool subset_of(const ElemSet& o) const {
        for (std::size_t k = 0; k < w_.size(); ++k)
            if (w_[k] & ~o.w_[k]) return false;
        return true;
    }

    // (size, then first differing bit with "absent" ordered first): the
    // deterministic ideal ordering used by lattice enumeration.
    static bool size_lex_less(const ElemSet& a, const ElemSet& b) {
        if (a.count_ != b.count_) return a.count_ < b.count_;
        for (std::size_t k = 0; k < a.w_.size(); ++k) {
            if (a.w_[k] != b.w_[k]) {
                std::uint64_t diff = a.w_[k] ^ b.w_[k];
                std::uint64_t low = diff & (~diff + 1);
                return (a.w_[k] & low) == 0;
            }
        }
        return false;
    }

    std::size_t hash() const {
        std::size_t h = static_cast<std::size_t>(n_) * 1099511628211ull;
        for (std::uint64_t word : w_) {
            h ^= static_cast<std::size_t>(word);
            h *= 1099511628211ull;
        }
        return h;
    }

private:
    int n_ = 0;
    int count_ = 0;
    std::vector<std::uint64_t> w_;
};

// Deterministic RNG for the sampled checks. splitmix64: stable across
// platforms, unlike std::uniform_int_distribution.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ull);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
        return z ^ (z >> 31);
    }

    // uniform in [0, bound) by rejection
    int below(int bound) {
        std::uint64_t limit = ~std::uint64_t{0} - ~std::uint64_t{0} % bound;
        std::uint64_t v;
        do {
            v = next();
        } while (v >= limit);
        return static_cast<int>(v % bound);
    }

private:
    std::uint64_t state_;
};

}  // namespace sdfa
