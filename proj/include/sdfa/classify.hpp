#pragma once

#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "sdfa/ideal.hpp"
#include "sdfa/ring.hpp"

namespace sdfa {

// --- brute-force oracles ---------------------------------------------------
//
// The definitional scans. Witnesses are the lexicographically least failing
// pair in element-index order.

// true iff for all nonzero a, b with a^2 - b^2 in I, a+b in I or a-b in I
Verdict is_sdf_bruteforce(const Ideal& i);

// same scan with the extra guard a^2 - b^2 != 0
Verdict is_weakly_sdf_bruteforce(const Ideal& i);

// whenever 0 != ab in I, a in I or b in I
Verdict is_weakly_prime(const Ideal& i);

// Equivalent criterion: for every a, b outside I with ab in I, the system
// x + y = a, x - y = b has no solution with x, y both nonzero. Must agree
// with is_sdf_bruteforce on every input.
Verdict sdf_via_linear_system(const Ideal& i);

// independent re-checks for certified witnesses
bool verify_sdf_witness(const Ideal& i, int a, int b);
bool verify_weakly_sdf_witness(const Ideal& i, int a, int b);
bool verify_weakly_prime_witness(const Ideal& i, int a, int b);
bool verify_prime_witness(const Ideal& i, int a, int b);
bool verify_linear_system_witness(const Ideal& i, int a, int b);

// --- closed forms -----------------------------------------------------------

// {0} is sdf-absorbing in Z_n iff n = 4, n = 9, n prime, or n = 2p, p odd prime
bool zero_ideal_zn_closed_form(long n);

// Decides whether nZ is sdf-absorbing in Z by brute force on the ideal (n)
// inside Z_{4n}; asserts agreement with the closed form (n prime or n = 2q
// for an odd prime q) and returns the brute-force answer.
bool sdf_in_z(long n);
bool sdf_in_z_closed_form(long n);

struct NilZnClassification {
    bool sdf;             // nil(Z_n) sdf-absorbing
    bool weakly_not_sdf;  // nil(Z_n) weakly sdf-absorbing but not sdf-absorbing
};
// From the factorization of n: sdf iff n = q^m or n = 2^i p^k (p odd);
// weakly-not-sdf iff n squarefree with two odd prime factors or >= 3 factors.
NilZnClassification nil_zn_classification(long n);

// --- structural criteria ----------------------------------------------------

// When I decomposes as an intersection of comaximal (or irredundant) primes:
// sdf iff at most one residue characteristic differs from 2. Absent when no
// decomposition exists.
std::optional<bool> fast_sdf_comaximal(const Ideal& i, std::span<const Ideal> lattice);
std::optional<bool> fast_sdf_comaximal(const PrimeDecomposition& d);

// Product rule, dispatching on the zero / nonzero-proper / improper shape of
// each component. Not both components may be improper.
bool product_sdf(const Ideal& i1, const Ideal& i2);

// Idealization rule for the ideal I(+)N of R(+)M, with M = base/J and the
// submodule N given as an ideal of the base containing J. The I = {0},
// N = {0} case falls back to brute force on the constructed idealization.
bool idealization_sdf(const Ideal& i, const ModuleSpec& m, const Ideal& n_ideal);

// I |x|_J B is sdf iff I is (nonzero proper I). The zero ideal genuinely
// differs and is rejected toward brute force.
bool amalgamation_sdf(const RingPtr& a, const RingPtr& b, const RingHom& f,
                      const Ideal& j, const Ideal& i);

enum class Section3Clause {
    quasilocal,
    vnr_two_unit,
    vnr_char_two,
    vnr_two_zero_divisor,
    general,
};
const char* to_string(Section3Clause c);

struct AllIdealsReport {
    bool all_proper = false;          // every proper ideal sdf (exhaustive)
    bool all_nonzero_proper = false;  // every nonzero proper ideal sdf (exhaustive)
    bool structural_prediction = false;
    Section3Clause clause = Section3Clause::general;
};

// Exhaustive answers plus the prediction of the applicable structural clause;
// throws defect_error if the prediction contradicts the exhaustive answer.
// precomputed_sdf, when supplied, is is_sdf per lattice ideal (improper
// entries ignored).
AllIdealsReport all_ideals_sdf_report(const RingPtr& r, std::span<const Ideal> lattice,
                                      const RingFlags& flags,
                                      std::span<const char> precomputed_sdf = {});

// Weakly product rules: I x R2 for nonzero weakly-sdf I (equivalent to I
// sdf), and I x J when both components are weakly-but-not-sdf. Absent when
// no clause applies.
std::optional<bool> weakly_sdf_fast(const Ideal& i, const Ideal& j);

// every square difference landing in I is 0 (all a, b, including zero)
bool square_differences_into_ideal_vanish(const Ideal& i);

struct WeaklyStructure {
    bool subset_nil;           // I inside nil(R)
    bool two_i_sq_zero;        // 2 i^2 = 0 for every i in I
    bool reduced_forces_zero;  // R reduced implies I = {0}
};
// Requires I weakly-sdf but not sdf (re-checked; violations are input errors).
WeaklyStructure weakly_structure_checks(const Ideal& i);

// --- whole-ring classification ----------------------------------------------

struct ClassificationRecord {
    Ideal ideal;
    bool is_proper = false;
    bool is_prime = false;
    bool is_maximal = false;
    bool is_radical = false;
    bool is_sdf = false;
    bool is_weakly_sdf = false;
    bool is_weakly_prime = false;
    long quotient_char = 1;
    // criterion name -> verdict; absent value = criterion inapplicable
    std::map<std::string, std::optional<bool>> fast_verdicts;
    // definitional verdicts with witnesses; absent for the improper ideal
    std::optional<Verdict> prime_v, sdf_v, weakly_sdf_v, weakly_prime_v, linear_system_v;
    PrimeDecomposition decomposition;
};

struct RingAnalysis {
    RingPtr ring;
    std::vector<Ideal> lattice;
    RingFlags flags;
    std::vector<ClassificationRecord> records;  // aligned with lattice
    AllIdealsReport section3;
};

// Full classification of every ideal, all fast criteria populated and checked
// against the oracle (disagreement throws defect_error).
RingAnalysis analyze_ring(const RingPtr& r);

// --- decomposition helpers for constructed rings -----------------------------

// membership of I1 x I2 inside a two-factor product ring
Ideal product_ideal(const RingPtr& prod, const Ideal& i1, const Ideal& i2);
// projection of an ideal of a product ring onto factor `which`
Ideal project_ideal(const Ideal& k, int which);

// membership of I(+)N inside an idealization (N given as base ideal over J);
// verifies the set is an ideal
Ideal idealization_ideal(const RingPtr& ring, const Ideal& i, const Ideal& n_ideal);
struct IdealizationParts {
    bool homogeneous = false;
    Ideal i;        // projection to the base
    Ideal n_ideal;  // submodule as a base ideal containing J
};
IdealizationParts split_idealization_ideal(const Ideal& k);

// membership of I |x|_J B inside an amalgamation ring
Ideal amalgamation_ideal(const RingPtr& ring, const Ideal& i);
// base ideal I when K = I |x|_J B, absent otherwise
std::optional<Ideal> split_amalgamation_ideal(const Ideal& k);

// J such that the idealization's module is base/J
Ideal idealization_module_kernel(const RingPtr& ring);

}  // namespace sdfa
