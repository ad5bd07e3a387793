#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "sdfa/ring.hpp"

namespace sdfa {

// Certified decision. A false verdict always carries the lexicographically
// least failing pair in element-index order, re-checkable against the
// definition named by `method`.
struct Verdict {
    bool holds = true;
    std::optional<std::pair<int, int>> witness;
    std::string method;
};

// Every ideal of a ring: join-closure of the principal ideals, deduplicated
// by bitset and sorted by (size, lexicographic bitset). Throws resource_error
// past max_ideals.
std::vector<Ideal> enumerate_ideals(const RingPtr& r, int max_ideals = kDefaultLatticeCap);

// smallest ideal containing gens (closure fixpoint)
inline Ideal ideal_generated(const RingPtr& r, std::vector<int> gens) {
    return Ideal::generated(r, std::move(gens));
}

// No pair a, b outside I with ab in I. Witness on failure.
Verdict is_prime(const Ideal& i);

// Decided against the enumerated lattice: proper with no strictly larger
// proper ideal.
bool is_maximal(const Ideal& i, std::span<const Ideal> lattice);

// Second route, cross-asserted in tests: R/I is a field.
bool is_maximal_via_quotient(const Ideal& i);

// {a : a^k in I for some k <= order}
Ideal radical(const Ideal& i);
bool is_radical(const Ideal& i);

// least n >= 1 with n*1 in I
long quotient_char(const Ideal& i);

// primes containing I, minimal under inclusion (in a finite commutative ring
// every prime is maximal, so these are simply the primes over I)
std::vector<Ideal> minimal_primes_over(const Ideal& i, std::span<const Ideal> lattice);

struct PrimeDecomposition {
    enum class Kind { comaximal, irredundant, none };
    std::vector<Ideal> primes;
    Kind kind = Kind::none;
    std::vector<long> chars;  // char(R/P_i), aligned with primes
};

// Expresses I as the intersection of its minimal primes when possible;
// kind=none when I is not radical.
PrimeDecomposition prime_decomposition(const Ideal& i, std::span<const Ideal> lattice);

// f surjective with ker(f) contained in I guarantees an ideal; the image set
// is checked to be one regardless. Non-surjective f is rejected.
Ideal hom_image_ideal(const RingHom& f, const Ideal& i);
Ideal hom_preimage_ideal(const RingHom& f, const Ideal& j);

Ideal nil_ideal(const RingPtr& r);
Ideal jacobson_radical(const RingPtr& r, std::span<const Ideal> lattice);

// Exact whole-ring queries; lattice-backed flags computed from the
// enumerated ideals (von Neumann regular = reduced with every prime maximal).
struct RingFlags {
    long characteristic = 0;
    int units = 0;
    int nilpotents = 0;
    int zero_divisors = 0;
    bool reduced = false;
    bool field = false;
    bool local = false;
    bool von_neumann_regular = false;
    bool boolean = false;
    Ideal jacobson;
    std::vector<int> maximal_indices;  // into the lattice
    std::vector<int> prime_indices;
};

RingFlags ring_flags(const RingPtr& r, std::span<const Ideal> lattice);

}  // namespace sdfa
