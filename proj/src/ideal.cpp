#include "sdfa/ideal.hpp"

#include <algorithm>
#include <deque>
#include <unordered_set>

namespace sdfa {

std::vector<Ideal> enumerate_ideals(const RingPtr& r, int max_ideals) {
    const FiniteRing& R = *r;
    const int n = R.order();

    // distinct principal ideals
    std::vector<Ideal> principals;
    {
        std::unordered_set<std::size_t> seen;
        for (int a = 0; a < n; ++a) {
            Ideal p = Ideal::generated(r, {a});
            if (seen.insert(p.members().hash()).second) principals.push_back(std::move(p));
        }
    }

    struct Hash {
        std::size_t operator()(const ElemSet& s) const { return s.hash(); }
    };
    std::unordered_set<ElemSet, Hash> seen;
    std::vector<Ideal> out;
    std::deque<int> work;  // indices into out
    auto push = [&](Ideal i) {
        if (seen.insert(i.members()).second) {
            if (static_cast<int>(out.size()) >= max_ideals)
                throw resource_error("ideal lattice exceeds cap of " +
                                     std::to_string(max_ideals) + " in " + R.label());
            work.push_back(static_cast<int>(out.size()));
            out.push_back(std::move(i));
        }
    };

    push(Ideal::zero(r));
    for (const Ideal& p : principals) push(p);
    while (!work.empty()) {
        int idx = work.front();
        work.pop_front();
        for (const Ideal& p : principals) {
            if (p.members().subset_of(out[idx].members())) continue;
            push(ideal_sum(out[idx], p));
        }
    }

    std::sort(out.begin(), out.end(), [](const Ideal& a, const Ideal& b) {
        return ElemSet::size_lex_less(a.members(), b.members());
    });
    return out;
}

Verdict is_prime(const Ideal& i) {
    if (!i.is_proper()) throw input_error("is_prime requires a proper ideal");
    const FiniteRing& R = *i.ring();
    for (int a = 0; a < R.order(); ++a) {
        if (i.contains(a)) continue;
        for (int b = 0; b < R.order(); ++b) {
            if (i.contains(b)) continue;
            if (i.contains(R.mul(a, b)))
                return {false, std::make_pair(a, b), "prime-scan"};
        }
    }
    return {true, std::nullopt, "prime-scan"};
}

bool is_maximal(const Ideal& i, std::span<const Ideal> lattice) {
    if (!i.is_proper()) throw input_error("is_maximal requires a proper ideal");
    for (const Ideal& j : lattice) {
        if (!j.is_proper() || j.size() <= i.size()) continue;
        if (j != i && i.members().subset_of(j.members())) return false;
    }
    return true;
}

bool is_maximal_via_quotient(const Ideal& i) {
    if (!i.is_proper()) throw input_error("is_maximal requires a proper ideal");
    auto [q, proj] = make_quotient(i.ring(), i);
    return q->is_field();
}

Ideal radical(const Ideal& i) {
    const FiniteRing& R = *i.ring();
    ElemSet out(R.order());
    for (int a = 0; a < R.order(); ++a) {
        int x = a;
        for (int k = 0; k < R.order(); ++k) {  // nilpotency-style bound k <= order
            if (i.contains(x)) {
                out.insert(a);
                break;
            }
            x = R.mul(x, a);
        }
    }
    return Ideal::from_members(i.ring(), std::move(out), /*trusted=*/true);
}

bool is_radical(const Ideal& i) { return radical(i) == i; }

long quotient_char(const Ideal& i) {
    const FiniteRing& R = *i.ring();
    long n = 1;
    int s = R.one();
    while (!i.contains(s)) {
        s = R.add(s, R.one());
        ++n;
    }
    return n;
}

std::vector<Ideal> minimal_primes_over(const Ideal& i, std::span<const Ideal> lattice) {
    if (!i.is_proper()) throw input_error("minimal_primes_over requires a proper ideal");
    std::vector<Ideal> over;
    for (const Ideal& p : lattice) {
        if (!p.is_proper()) continue;
        if (!i.members().subset_of(p.members())) continue;
        if (is_prime(p).holds) over.push_back(p);
    }
    std::vector<Ideal> minimal;
    for (const Ideal& p : over) {
        bool min = true;
        for (const Ideal& q : over)
            if (q != p && q.members().subset_of(p.members())) min = false;
        if (min) minimal.push_back(p);
    }
    return minimal;
}

PrimeDecomposition prime_decomposition(const Ideal& i, std::span<const Ideal> lattice) {
    if (!i.is_proper()) throw input_error("prime_decomposition requires a proper ideal");
    PrimeDecomposition d;
    d.primes = minimal_primes_over(i, lattice);

    Ideal inter = Ideal::whole(i.ring());
    for (const Ideal& p : d.primes) inter = ideal_intersection(inter, p);
    if (inter != i) {
        d.kind = PrimeDecomposition::Kind::none;
        d.primes.clear();
        return d;
    }

    for (const Ideal& p : d.primes) d.chars.push_back(quotient_char(p));

    bool comaximal = true;
    for (std::size_t a = 0; a < d.primes.size() && comaximal; ++a)
        for (std::size_t b = a + 1; b < d.primes.size(); ++b)
            if (ideal_sum(d.primes[a], d.primes[b]).is_proper()) {
                comaximal = false;
                break;
            }
    if (comaximal) {
        d.kind = PrimeDecomposition::Kind::comaximal;
        return d;
    }

    bool irredundant = true;
    for (std::size_t drop = 0; drop < d.primes.size() && irredundant; ++drop) {
        Ideal rest = Ideal::whole(i.ring());
        for (std::size_t k = 0; k < d.primes.size(); ++k)
            if (k != drop) rest = ideal_intersection(rest, d.primes[k]);
        if (rest == i) irredundant = false;
    }
    d.kind = irredundant ? PrimeDecomposition::Kind::irredundant
                         : PrimeDecomposition::Kind::none;
    if (d.kind == PrimeDecomposition::Kind::none) {
        d.primes.clear();
        d.chars.clear();
    }
    return d;
}

Ideal hom_image_ideal(const RingHom& f, const Ideal& i) {
    if (i.ring() != f.source) throw input_error("hom_image_ideal: ideal not in the source");
    if (!f.is_surjective())
        throw input_error("hom_image_ideal requires a surjective homomorphism");
    ElemSet out(f.target->order());
    for (int a : i.elements()) out.insert(f(a));
    // under ker(f) <= I the image is an ideal; verified, not assumed
    return Ideal::from_members(f.target, std::move(out), /*trusted=*/false);
}

Ideal hom_preimage_ideal(const RingHom& f, const Ideal& j) {
    if (j.ring() != f.target) throw input_error("hom_preimage_ideal: ideal not in the target");
    ElemSet out(f.source->order());
    for (int a = 0; a < f.source->order(); ++a)
        if (j.contains(f(a))) out.insert(a);
    return Ideal::from_members(f.source, std::move(out), /*trusted=*/true);
}

Ideal nil_ideal(const RingPtr& r) {
    ElemSet out(r->order());
    for (int a : r->nilpotents().elements()) out.insert(a);
    return Ideal::from_members(r, std::move(out), /*trusted=*/true);
}

Ideal jacobson_radical(const RingPtr& r, std::span<const Ideal> lattice) {
    Ideal out = Ideal::whole(r);
    for (const Ideal& m : lattice)
        if (m.is_proper() && is_maximal(m, lattice)) out = ideal_intersection(out, m);
    return out;
}

RingFlags ring_flags(const RingPtr& r, std::span<const Ideal> lattice) {
    RingFlags f;
    f.characteristic = r->characteristic();
    f.units = r->units().size();
    f.nilpotents = r->nilpotents().size();
    f.zero_divisors = r->zero_divisors().size();
    f.reduced = r->is_reduced();
    f.field = r->is_field();
    f.boolean = r->is_boolean();

    bool every_prime_maximal = true;
    for (int k = 0; k < static_cast<int>(lattice.size()); ++k) {
        const Ideal& p = lattice[k];
        if (!p.is_proper()) continue;
        bool prime = is_prime(p).holds;
        bool maximal = is_maximal(p, lattice);
        if (prime) {
            f.prime_indices.push_back(k);
            if (!maximal) every_prime_maximal = false;
        }
        if (maximal) f.maximal_indices.push_back(k);
    }
    f.local = f.maximal_indices.size() == 1;
    f.von_neumann_regular = f.reduced && every_prime_maximal;
    f.jacobson = jacobson_radical(r, lattice);
    return f;
}

}  // namespace sdfa
