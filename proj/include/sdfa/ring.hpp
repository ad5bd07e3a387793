#pragma once

#include <memory>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "sdfa/common.hpp"

namespace sdfa {

class FiniteRing;
using RingPtr = std::shared_ptr<const FiniteRing>;

// Construction metadata. Reports render elements through it (tuples for
// products, pairs for idealizations, coefficient lists for polynomial
// quotients) and the classifier uses it to decide which structural criteria
// apply to a ring.
struct ZnShape {
    long n;
};
struct ProductShape {
    std::vector<RingPtr> factors;
};
struct PolyQuotientShape {
    long p;
    std::vector<long> modulus;  // coefficients low-to-high, monic
};
struct IdealizationShape {
    RingPtr base;
    std::vector<int> module_reps;    // coset representatives of M = R/J
    std::vector<int> module_rep_of;  // base element -> its coset position
};
struct AmalgamationShape {
    RingPtr a;
    RingPtr b;
    std::vector<int> hom;      // a-index -> b-index
    std::vector<int> j_elems;  // members of J, ascending
};
struct QuotientShape {
    RingPtr base;
    std::vector<int> coset_reps;  // minimal element index per coset
    std::vector<int> rep_of;      // base element -> coset position
};
struct LocalizationShape {
    RingPtr base;
    int idempotent;
    std::vector<int> elems;  // members of eR, ascending
};
struct OpaqueShape {};  // hand-assembled tables (tests, mutants)

using Construction =
    std::variant<ZnShape, ProductShape, PolyQuotientShape, IdealizationShape,
                 AmalgamationShape, QuotientShape, LocalizationShape, OpaqueShape>;

// A finite commutative ring with identity. Elements are indices 0..order-1
// with dense operation tables; zero is always index 0. Immutable after
// construction (derived element sets are computed eagerly), so instances are
// safe to share across threads.
class FiniteRing : public std::enable_shared_from_this<FiniteRing> {
public:
    // Takes ownership of the tables; verifies the ring axioms (full check for
    // order <= 64, randomized 10^4-triple spot check above) unless skip_axioms.
    FiniteRing(std::vector<int> add, std::vector<int> mul, std::vector<int> neg,
               int one, std::string label, Construction shape,
               bool skip_axiom_check = false);

    int order() const { return order_; }
    int zero() const { return 0; }
    int one() const { return one_; }
    int two() const { return two_; }

    int add(int a, int b) const { return add_[static_cast<std::size_t>(a) * order_ + b]; }
    int mul(int a, int b) const { return mul_[static_cast<std::size_t>(a) * order_ + b]; }
    int neg(int a) const { return neg_[a]; }
    int sub(int a, int b) const { return add(a, neg_[b]); }
    int pow(int a, long k) const;

    const std::string& label() const { return label_; }
    const Construction& construction() const { return shape_; }

    // Construction-specific element rendering; raw index otherwise.
    std::string render(int a) const;

    long characteristic() const { return characteristic_; }
    const ElemSet& units() const { return units_; }
    const ElemSet& nilpotents() const { return nilpotents_; }
    const ElemSet& zero_divisors() const { return zero_divisors_; }
    bool is_reduced() const { return nilpotents_.size() == 1; }
    bool is_field() const { return units_.size() == order_ - 1; }
    bool is_boolean() const;

    // Throws defect_error naming the violated axiom; used at construction and
    // by the mutation smoke test.
    void check_axioms() const;

private:
    int order_;
    int one_;
    int two_;
    std::vector<int> add_, mul_, neg_;
    std::string label_;
    Construction shape_;
    long characteristic_;
    ElemSet units_, nilpotents_, zero_divisors_;
};

// An ideal: membership bitset plus the generators it was built from (empty
// for {0} or when enumerated). Holds a shared reference to its ring.
class Ideal {
public:
    Ideal() = default;

    static Ideal zero(RingPtr r);
    static Ideal whole(RingPtr r);
    // Closure fixpoint: all R-multiples of the generators, closed under
    // addition.
    static Ideal generated(RingPtr r, std::vector<int> gens);
    // Adopts a membership set; verifies closure under +, neg and ambient
    // multiplication unless trusted.
    static Ideal from_members(RingPtr r, ElemSet members, bool trusted = false);

    const RingPtr& ring() const { return ring_; }
    const ElemSet& members() const { return members_; }
    const std::vector<int>& generators() const { return gens_; }

    bool contains(int a) const { return members_.contains(a); }
    int size() const { return members_.size(); }
    bool is_zero() const { return members_.size() == 1; }
    bool is_proper() const { return members_.size() < ring_->order(); }
    std::vector<int> elements() const { return members_.elements(); }

    bool operator==(const Ideal& o) const { return members_ == o.members_; }
    bool operator!=(const Ideal& o) const { return members_ != o.members_; }

    // Greedy minimal-ish generating set by ascending index (deterministic);
    // used for display when an ideal came from lattice enumeration.
    std::vector<int> compute_generators() const;

private:
    RingPtr ring_;
    ElemSet members_;
    std::vector<int> gens_;
};

Ideal ideal_sum(const Ideal& a, const Ideal& b);
Ideal ideal_intersection(const Ideal& a, const Ideal& b);
Ideal ideal_product(const Ideal& a, const Ideal& b);

// Unital ring homomorphism as an element-index table.
struct RingHom {
    RingPtr source;
    RingPtr target;
    std::vector<int> map;
    std::string label;

    int operator()(int a) const { return map[a]; }
    bool is_injective() const;
    bool is_surjective() const;
    Ideal kernel() const;
    // Exhaustive check of f(1)=1, f(a+b)=f(a)+f(b), f(ab)=f(a)f(b);
    // throws input_error on violation.
    void validate() const;
};

// M = base/quotient_by as a module over base; quotient_by = {0} gives M = R.
struct ModuleSpec {
    RingPtr base;
    Ideal quotient_by;
};

// --- constructions -------------------------------------------------------

RingPtr make_zn(long n);

// Componentwise operations; element encoding is mixed-radix with the FIRST
// factor least significant: index(x1,..,xk) = x1 + o1*(x2 + o2*(...)).
RingPtr make_product(std::vector<RingPtr> factors);

// Z_p[X]/(f) for monic f of degree d >= 1; order p^d; element index is the
// base-p digit string of coefficients (constant coefficient least
// significant, so X has index p).
RingPtr make_poly_quotient(long p, const std::vector<long>& f);

// Same, but requires f irreducible over Z_p; builds the field F_{p^d}.
RingPtr make_gf(long p, const std::vector<long>& f);

// R(+)M with (r,m)(s,n) = (rs, rn+sm); identity (1,0).
// Element index = r + |R| * coset_position(m).
RingPtr make_idealization(RingPtr r, const ModuleSpec& m);

// A |x|_J B = {(a, f(a)+j) : a in A, j in J}; element index = pos(a) +
// |A| * pos(j) with J's members in ascending order.
RingPtr make_amalgamation(RingPtr a, RingPtr b, const RingHom& f, const Ideal& j);

// Coset ring with representatives chosen as the minimal element index per
// coset; returns the ring and the canonical projection.
std::pair<RingPtr, RingHom> make_quotient(RingPtr r, const Ideal& i);

// Finite-ring localization at a multiplicatively closed S with 1 in S and
// 0 not in S: the product t of S has an idempotent power e, and R_S = eR
// with identity e via r -> er. Every image of an S element is a unit of eR.
std::pair<RingPtr, RingHom> localize(RingPtr r, const std::vector<int>& s);

// Canonical projection hom for an already-constructed quotient ring.
RingHom quotient_projection(RingPtr base, RingPtr quot);

// The inclusion n*1 -> n*1_T of the prime subring Z_char(T) into T.
RingHom prime_subring_inclusion(RingPtr zchar, RingPtr t);

// r -> (r, r) into a product of two copies of the same ring.
RingHom diagonal_hom(RingPtr r, RingPtr rxr);

// a -> (a, f(a)) into an amalgamation built from f.
RingHom amalgamation_embedding(RingPtr a, RingPtr amalg);

// Canonical reduction Z_m -> Z_n for n | m.
RingHom zn_reduction(RingPtr zm, RingPtr zn);

RingHom identity_hom(RingPtr r);

}  // namespace sdfa
