#include "sdfa/ring.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <sstream>
#include <unordered_set>

namespace sdfa {

namespace {

bool is_prime_long(long n) {
    if (n < 2) return false;
    for (long d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

std::string join_longs(const std::vector<long>& v) {
    std::ostringstream os;
    os << '[';
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) os << ',';
        os << v[i];
    }
    os << ']';
    return os.str();
}

std::string join_ints(const std::vector<int>& v) {
    std::ostringstream os;
    os << '[';
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) os << ',';
        os << v[i];
    }
    os << ']';
    return os.str();
}

void check_order_cap(long long order) {
    if (order > order_cap())
        throw resource_error("ring order " + std::to_string(order) +
                             " exceeds cap " + std::to_string(order_cap()));
}

}  // namespace

FiniteRing::FiniteRing(std::vector<int> add, std::vector<int> mul,
                       std::vector<int> neg, int one, std::string label,
                       Construction shape, bool skip_axiom_check)
    : order_(static_cast<int>(neg.size())),
      one_(one),
      add_(std::move(add)),
      mul_(std::move(mul)),
      neg_(std::move(neg)),
      label_(std::move(label)),
      shape_(std::move(shape)),
      units_(order_),
      nilpotents_(order_),
      zero_divisors_(order_) {
    if (order_ < 2) throw input_error("ring must have at least 2 elements: " + label_);
    two_ = this->add(one_, one_);
    if (!skip_axiom_check) check_axioms();

    // additive order of 1
    characteristic_ = 1;
    for (int s = one_; s != 0; s = this->add(s, one_)) ++characteristic_;

    for (int a = 0; a < order_; ++a) {
        for (int b = 0; b < order_; ++b) {
            if (this->mul(a, b) == one_) {
                units_.insert(a);
                break;
            }
        }
        int x = a;
        for (int k = 0; k < order_; ++k) {
            if (x == 0) {
                nilpotents_.insert(a);
                break;
            }
            x = this->mul(x, a);
        }
        for (int b = 1; b < order_; ++b) {
            if (this->mul(a, b) == 0) {
                zero_divisors_.insert(a);
                break;
            }
        }
    }
}

int FiniteRing::pow(int a, long k) const {
    int acc = one_;
    int base = a;
    for (long e = k; e > 0; e >>= 1) {
        if (e & 1) acc = mul(acc, base);
        base = mul(base, base);
    }
    return acc;
}

bool FiniteRing::is_boolean() const {
    for (int a = 0; a < order_; ++a)
        if (mul(a, a) != a) return false;
    return true;
}

void FiniteRing::check_axioms() const {
    const int n = order_;
    auto fail = [&](const char* what) {
        throw defect_error(std::string("ring axiom violated (") + what + ") in " + label_);
    };
    if (one_ == 0) fail("one != zero");
    if (static_cast<long long>(add_.size()) != 1LL * n * n ||
        static_cast<long long>(mul_.size()) != 1LL * n * n)
        fail("table size");
    for (int v : add_)
        if (v < 0 || v >= n) fail("add range");
    for (int v : mul_)
        if (v < 0 || v >= n) fail("mul range");
    for (int v : neg_)
        if (v < 0 || v >= n) fail("neg range");

    for (int a = 0; a < n; ++a) {
        if (add(a, 0) != a) fail("additive identity");
        if (add(a, neg_[a]) != 0) fail("additive inverse");
        if (mul(a, one_) != a) fail("multiplicative identity");
    }
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) {
            if (add(a, b) != add(b, a)) fail("add commutativity");
            if (mul(a, b) != mul(b, a)) fail("mul commutativity");
        }

    auto triple = [&](int a, int b, int c) {
        if (add(add(a, b), c) != add(a, add(b, c))) fail("add associativity");
        if (mul(mul(a, b), c) != mul(a, mul(b, c))) fail("mul associativity");
        if (mul(a, add(b, c)) != add(mul(a, b), mul(a, c))) fail("distributivity");
    };
    if (n <= 64) {
        for (int a = 0; a < n; ++a)
            for (int b = 0; b < n; ++b)
                for (int c = 0; c < n; ++c) triple(a, b, c);
    } else {
        Rng rng(0x5dfa);
        for (int k = 0; k < 10000; ++k) triple(rng.below(n), rng.below(n), rng.below(n));
    }
}

std::string FiniteRing::render(int a) const {
    struct Visitor {
        const FiniteRing* r;
        int a;
        std::string operator()(const ZnShape&) const { return std::to_string(a); }
        std::string operator()(const OpaqueShape&) const { return std::to_string(a); }
        std::string operator()(const ProductShape& s) const {
            std::ostringstream os;
            os << '(';
            int rest = a;
            for (std::size_t i = 0; i < s.factors.size(); ++i) {
                int o = s.factors[i]->order();
                if (i) os << ',';
                os << s.factors[i]->render(rest % o);
                rest /= o;
            }
            os << ')';
            return os.str();
        }
        std::string operator()(const PolyQuotientShape& s) const {
            int d = static_cast<int>(s.modulus.size()) - 1;
            std::ostringstream os;
            os << '[';
            int rest = a;
            for (int i = 0; i < d; ++i) {
                if (i) os << ',';
                os << rest % s.p;
                rest /= static_cast<int>(s.p);
            }
            os << ']';
            return os.str();
        }
        std::string operator()(const IdealizationShape& s) const {
            int bo = s.base->order();
            return "(" + s.base->render(a % bo) + "," +
                   s.base->render(s.module_reps[a / bo]) + ")";
        }
        std::string operator()(const AmalgamationShape& s) const {
            int ao = s.a->order();
            int ai = a % ao;
            int j = s.j_elems[a / ao];
            return "(" + s.a->render(ai) + "," + s.b->render(s.b->add(s.hom[ai], j)) + ")";
        }
        std::string operator()(const QuotientShape& s) const {
            return s.base->render(s.coset_reps[a]);
        }
        std::string operator()(const LocalizationShape& s) const {
            return s.base->render(s.elems[a]);
        }
    };
    return std::visit(Visitor{this, a}, shape_);
}

// --- Ideal ----------------------------------------------------------------

Ideal Ideal::zero(RingPtr r) {
    Ideal i;
    i.ring_ = std::move(r);
    i.members_ = ElemSet(i.ring_->order());
    i.members_.insert(0);
    return i;
}

Ideal Ideal::whole(RingPtr r) {
    Ideal i;
    i.ring_ = std::move(r);
    i.members_ = ElemSet(i.ring_->order());
    for (int a = 0; a < i.ring_->order(); ++a) i.members_.insert(a);
    i.gens_ = {i.ring_->one()};
    return i;
}

Ideal Ideal::generated(RingPtr r, std::vector<int> gens) {
    const FiniteRing& R = *r;
    const int n = R.order();
    for (int g : gens)
        if (g < 0 || g >= n) throw input_error("generator index out of range");

    ElemSet members(n);
    members.insert(0);
    std::vector<int> elems = {0};
    std::deque<int> work;
    auto push = [&](int x) {
        if (!members.contains(x)) {
            members.insert(x);
            elems.push_back(x);
            work.push_back(x);
        }
    };
    for (int g : gens) push(g);
    while (!work.empty()) {
        int x = work.front();
        work.pop_front();
        for (int t = 0; t < n; ++t) push(R.mul(t, x));
        // pair x with everything known so far; later arrivals pair when popped
        for (std::size_t i = 0; i < elems.size(); ++i) push(R.add(x, elems[i]));
    }

    Ideal i;
    i.ring_ = std::move(r);
    i.members_ = std::move(members);
    i.gens_ = std::move(gens);
    return i;
}

Ideal Ideal::from_members(RingPtr r, ElemSet members, bool trusted) {
    const FiniteRing& R = *r;
    if (members.universe() != R.order())
        throw input_error("member set universe does not match ring order");
    if (!trusted) {
        if (!members.contains(0)) throw input_error("ideal must contain 0");
        auto elems = members.elements();
        for (int a : elems) {
            if (!members.contains(R.neg(a))) throw input_error("ideal not closed under negation");
            for (int b : elems)
                if (!members.contains(R.add(a, b)))
                    throw input_error("ideal not closed under addition");
            for (int t = 0; t < R.order(); ++t)
                if (!members.contains(R.mul(t, a)))
                    throw input_error("ideal not closed under ambient multiplication");
        }
    }
    Ideal i;
    i.ring_ = std::move(r);
    i.members_ = std::move(members);
    return i;
}

std::vector<int> Ideal::compute_generators() const {
    std::vector<int> gens;
    Ideal cur = Ideal::zero(ring_);
    while (cur.members_ != members_) {
        int next = -1;
        for (int a = 0; a < ring_->order(); ++a) {
            if (members_.contains(a) && !cur.members_.contains(a)) {
                next = a;
                break;
            }
        }
        gens.push_back(next);
        cur = Ideal::generated(ring_, gens);
    }
    return gens;
}

Ideal ideal_sum(const Ideal& a, const Ideal& b) {
    const FiniteRing& R = *a.ring();
    ElemSet out(R.order());
    for (int x : a.elements())
        for (int y : b.elements()) out.insert(R.add(x, y));
    return Ideal::from_members(a.ring(), std::move(out), /*trusted=*/true);
}

Ideal ideal_intersection(const Ideal& a, const Ideal& b) {
    ElemSet out(a.ring()->order());
    for (int x : a.elements())
        if (b.contains(x)) out.insert(x);
    return Ideal::from_members(a.ring(), std::move(out), /*trusted=*/true);
}

Ideal ideal_product(const Ideal& a, const Ideal& b) {
    std::vector<int> gens;
    const FiniteRing& R = *a.ring();
    std::unordered_set<int> seen;
    for (int x : a.elements())
        for (int y : b.elements())
            if (seen.insert(R.mul(x, y)).second) gens.push_back(R.mul(x, y));
    return Ideal::generated(a.ring(), std::move(gens));
}

// --- RingHom --------------------------------------------------------------

bool RingHom::is_injective() const {
    std::vector<char> hit(target->order(), 0);
    for (int v : map) {
        if (hit[v]) return false;
        hit[v] = 1;
    }
    return true;
}

bool RingHom::is_surjective() const {
    std::vector<char> hit(target->order(), 0);
    int count = 0;
    for (int v : map)
        if (!hit[v]) {
            hit[v] = 1;
            ++count;
        }
    return count == target->order();
}

Ideal RingHom::kernel() const {
    ElemSet ker(source->order());
    for (int a = 0; a < source->order(); ++a)
        if (map[a] == 0) ker.insert(a);
    return Ideal::from_members(source, std::move(ker), /*trusted=*/true);
}

void RingHom::validate() const {
    const int n = source->order();
    if (static_cast<int>(map.size()) != n)
        throw input_error("hom table length does not match source order");
    for (int v : map)
        if (v < 0 || v >= target->order()) throw input_error("hom image out of range");
    if (map[source->one()] != target->one())
        throw input_error("hom does not map 1 to 1: " + label);
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) {
            if (map[source->add(a, b)] != target->add(map[a], map[b]))
                throw input_error("hom does not preserve addition: " + label);
            if (map[source->mul(a, b)] != target->mul(map[a], map[b]))
                throw input_error("hom does not preserve multiplication: " + label);
        }
}

// --- constructions --------------------------------------------------------

RingPtr make_zn(long n) {
    if (n < 2) throw input_error("zn requires n >= 2");
    check_order_cap(n);
    const int m = static_cast<int>(n);
    std::vector<int> add(static_cast<std::size_t>(m) * m), mul(add.size()), neg(m);
    for (int a = 0; a < m; ++a) {
        neg[a] = (m - a) % m;
        for (int b = 0; b < m; ++b) {
            add[static_cast<std::size_t>(a) * m + b] = (a + b) % m;
            mul[static_cast<std::size_t>(a) * m + b] =
                static_cast<int>((1LL * a * b) % m);
        }
    }
    return std::make_shared<FiniteRing>(std::move(add), std::move(mul), std::move(neg),
                                        1, "zn(" + std::to_string(n) + ")",
                                        ZnShape{n});
}

RingPtr make_product(std::vector<RingPtr> factors) {
    if (factors.size() < 2) throw input_error("prod requires at least 2 factors");
    long long order = 1;
    for (const auto& f : factors) {
        order *= f->order();
        check_order_cap(order);
    }
    const int n = static_cast<int>(order);
    const int k = static_cast<int>(factors.size());

    std::vector<std::vector<int>> digits(n, std::vector<int>(k));
    for (int a = 0; a < n; ++a) {
        int rest = a;
        for (int i = 0; i < k; ++i) {
            digits[a][i] = rest % factors[i]->order();
            rest /= factors[i]->order();
        }
    }
    auto encode = [&](const std::vector<int>& d) {
        int idx = 0;
        for (int i = k - 1; i >= 0; --i) idx = idx * factors[i]->order() + d[i];
        return idx;
    };

    std::vector<int> add(static_cast<std::size_t>(n) * n), mul(add.size()), neg(n);
    std::vector<int> tmp(k);
    for (int a = 0; a < n; ++a) {
        for (int i = 0; i < k; ++i) tmp[i] = factors[i]->neg(digits[a][i]);
        neg[a] = encode(tmp);
        for (int b = 0; b < n; ++b) {
            for (int i = 0; i < k; ++i) tmp[i] = factors[i]->add(digits[a][i], digits[b][i]);
            add[static_cast<std::size_t>(a) * n + b] = encode(tmp);
            for (int i = 0; i < k; ++i) tmp[i] = factors[i]->mul(digits[a][i], digits[b][i]);
            mul[static_cast<std::size_t>(a) * n + b] = encode(tmp);
        }
    }
    for (int i = 0; i < k; ++i) tmp[i] = factors[i]->one();
    int one = encode(tmp);

    std::ostringstream label;
    label << "prod(";
    for (int i = 0; i < k; ++i) {
        if (i) label << ',';
        label << factors[i]->label();
    }
    label << ')';
    return std::make_shared<FiniteRing>(std::move(add), std::move(mul), std::move(neg),
                                        one, label.str(), ProductShape{std::move(factors)});
}

namespace {

// polynomials over Z_p as digit vectors (low-to-high), reduced mod monic f
std::vector<int> poly_mulmod(const std::vector<int>& a, const std::vector<int>& b,
                             const std::vector<long>& f, long p) {
    const int d = static_cast<int>(f.size()) - 1;
    std::vector<int> prod(2 * d - 1, 0);
    for (int i = 0; i < d; ++i) {
        if (!a[i]) continue;
        for (int j = 0; j < d; ++j)
            prod[i + j] = static_cast<int>((prod[i + j] + 1LL * a[i] * b[j]) % p);
    }
    for (int i = 2 * d - 2; i >= d; --i) {
        int c = prod[i];
        if (!c) continue;
        prod[i] = 0;
        for (int j = 0; j < d; ++j) {
            long sub = (f[j] % p) * c % p;
            prod[i - d + j] = static_cast<int>(((prod[i - d + j] - sub) % p + p) % p);
        }
    }
    prod.resize(d);
    return prod;
}

RingPtr build_poly_quotient(long p, std::vector<long> f, const std::string& tag) {
    if (!is_prime_long(p)) throw input_error(tag + " requires a prime modulus p");
    for (long& c : f) c = ((c % p) + p) % p;
    if (f.size() < 2 || f.back() != 1)
        throw input_error(tag + " requires a monic modulus of degree >= 1");
    const int d = static_cast<int>(f.size()) - 1;
    long long order = 1;
    for (int i = 0; i < d; ++i) {
        order *= p;
        check_order_cap(order);
    }
    const int n = static_cast<int>(order);

    std::vector<std::vector<int>> digits(n, std::vector<int>(d));
    for (int a = 0; a < n; ++a) {
        int rest = a;
        for (int i = 0; i < d; ++i) {
            digits[a][i] = rest % static_cast<int>(p);
            rest /= static_cast<int>(p);
        }
    }
    auto encode = [&](const std::vector<int>& v) {
        int idx = 0;
        for (int i = d - 1; i >= 0; --i) idx = idx * static_cast<int>(p) + v[i];
        return idx;
    };

    std::vector<int> add(static_cast<std::size_t>(n) * n), mul(add.size()), neg(n);
    std::vector<int> tmp(d);
    for (int a = 0; a < n; ++a) {
        for (int i = 0; i < d; ++i)
            tmp[i] = static_cast<int>((p - digits[a][i]) % p);
        neg[a] = encode(tmp);
        for (int b = 0; b < n; ++b) {
            for (int i = 0; i < d; ++i)
                tmp[i] = static_cast<int>((digits[a][i] + digits[b][i]) % p);
            add[static_cast<std::size_t>(a) * n + b] = encode(tmp);
            mul[static_cast<std::size_t>(a) * n + b] =
                encode(poly_mulmod(digits[a], digits[b], f, p));
        }
    }
    std::string label = tag + "(" + std::to_string(p) + "," + join_longs(f) + ")";
    return std::make_shared<FiniteRing>(std::move(add), std::move(mul), std::move(neg),
                                        1, label, PolyQuotientShape{p, std::move(f)});
}

// trial division by monic polynomials of degree 1..deg(f)/2
bool poly_irreducible(long p, const std::vector<long>& f) {
    const int d = static_cast<int>(f.size()) - 1;
    if (d == 1) return true;
    for (int gd = 1; gd <= d / 2; ++gd) {
        long long count = 1;
        for (int i = 0; i < gd; ++i) count *= p;
        for (long long c = 0; c < count; ++c) {
            std::vector<long> g(gd + 1);
            long long rest = c;
            for (int i = 0; i < gd; ++i) {
                g[i] = rest % p;
                rest /= p;
            }
            g[gd] = 1;
            // remainder of f by g
            std::vector<long> rem(f);
            for (int i = d; i >= gd; --i) {
                long q = rem[i] % p;
                if (!q) continue;
                for (int j = 0; j <= gd; ++j)
                    rem[i - gd + j] = ((rem[i - gd + j] - q * g[j]) % p + p) % p;
            }
            bool zero = true;
            for (int i = 0; i < gd; ++i)
                if (rem[i] % p != 0) zero = false;
            if (zero) return false;
        }
    }
    return true;
}

}  // namespace

RingPtr make_poly_quotient(long p, const std::vector<long>& f) {
    return build_poly_quotient(p, f, "polyq");
}

RingPtr make_gf(long p, const std::vector<long>& f) {
    std::vector<long> norm(f);
    if (!is_prime_long(p)) throw input_error("gf requires a prime p");
    for (long& c : norm) c = ((c % p) + p) % p;
    if (norm.size() < 2 || norm.back() != 1)
        throw input_error("gf requires a monic modulus of degree >= 1");
    if (!poly_irreducible(p, norm))
        throw input_error("gf modulus is reducible over Z_" + std::to_string(p));
    return build_poly_quotient(p, norm, "gf");
}

namespace {

// minimal-index coset representatives of R modulo an ideal
void coset_split(const FiniteRing& R, const Ideal& I, std::vector<int>& reps,
                 std::vector<int>& rep_of) {
    const int n = R.order();
    rep_of.assign(n, -1);
    reps.clear();
    auto mem = I.elements();
    for (int a = 0; a < n; ++a) {
        if (rep_of[a] >= 0) continue;
        int pos = static_cast<int>(reps.size());
        reps.push_back(a);
        for (int i : mem) rep_of[R.add(a, i)] = pos;
    }
}

}  // namespace

RingPtr make_idealization(RingPtr r, const ModuleSpec& m) {
    if (m.base != r || m.quotient_by.ring() != r)
        throw input_error("idealize: module base must be the given ring");
    const FiniteRing& R = *r;
    const Ideal& J = m.quotient_by;

    std::vector<int> reps, rep_of;
    coset_split(R, J, reps, rep_of);
    const int mo = static_cast<int>(reps.size());
    const int ro = R.order();
    long long order = 1LL * ro * mo;
    check_order_cap(order);
    const int n = static_cast<int>(order);

    std::vector<int> add(static_cast<std::size_t>(n) * n), mul(add.size()), neg(n);
    for (int x = 0; x < n; ++x) {
        int r1 = x % ro, m1 = reps[x / ro];
        neg[x] = R.neg(r1) + ro * rep_of[R.neg(m1)];
        for (int y = 0; y < n; ++y) {
            int r2 = y % ro, m2 = reps[y / ro];
            add[static_cast<std::size_t>(x) * n + y] =
                R.add(r1, r2) + ro * rep_of[R.add(m1, m2)];
            mul[static_cast<std::size_t>(x) * n + y] =
                R.mul(r1, r2) + ro * rep_of[R.add(R.mul(r1, m2), R.mul(r2, m1))];
        }
    }

    std::string jpart = J.is_zero() ? "0" : join_ints(J.generators().empty()
                                                          ? J.compute_generators()
                                                          : J.generators());
    std::string label = "idealize(" + R.label() + ";mod=" + jpart + ")";
    auto ring = std::make_shared<FiniteRing>(
        std::move(add), std::move(mul), std::move(neg), R.one(), label,
        IdealizationShape{r, reps, rep_of});

    // elements of {0}(+)M square to zero
    for (int mp = 0; mp < mo; ++mp) {
        int x = ro * mp;
        if (ring->mul(x, x) != 0)
            throw defect_error("idealization: (0,m)^2 != 0 in " + label);
    }
    return ring;
}

RingPtr make_amalgamation(RingPtr a, RingPtr b, const RingHom& f, const Ideal& j) {
    if (f.source != a || f.target != b)
        throw input_error("amalg: hom endpoints do not match the given rings");
    if (j.ring() != b) throw input_error("amalg: J must be an ideal of B");
    f.validate();
    const FiniteRing& A = *a;
    const FiniteRing& B = *b;

    std::vector<int> j_elems = j.elements();
    const int jo = static_cast<int>(j_elems.size());
    const int ao = A.order();
    long long order = 1LL * ao * jo;
    check_order_cap(order);
    const int n = static_cast<int>(order);

    std::vector<int> jpos_of(B.order(), -1);
    for (int i = 0; i < jo; ++i) jpos_of[j_elems[i]] = i;

    // (a, j) -> (a, f(a)+j) is injective; the pair set must have full size
    {
        std::unordered_set<long long> pairs;
        for (int ai = 0; ai < ao; ++ai)
            for (int ji = 0; ji < jo; ++ji)
                pairs.insert(1LL * ai * B.order() + B.add(f(ai), j_elems[ji]));
        if (static_cast<long long>(pairs.size()) != order)
            throw defect_error("amalgamation pair map is not injective");
    }

    auto bpart = [&](int x) { return B.add(f(x % ao), j_elems[x / ao]); };
    std::vector<int> add(static_cast<std::size_t>(n) * n), mul(add.size()), neg(n);
    for (int x = 0; x < n; ++x) {
        int a1 = x % ao, b1 = bpart(x);
        {
            int an = A.neg(a1);
            int jn = jpos_of[B.sub(B.neg(b1), f(an))];
            neg[x] = an + ao * jn;
        }
        for (int y = 0; y < n; ++y) {
            int a2 = y % ao, b2 = bpart(y);
            int as = A.add(a1, a2);
            add[static_cast<std::size_t>(x) * n + y] =
                as + ao * jpos_of[B.sub(B.add(b1, b2), f(as))];
            int am = A.mul(a1, a2);
            mul[static_cast<std::size_t>(x) * n + y] =
                am + ao * jpos_of[B.sub(B.mul(b1, b2), f(am))];
        }
    }

    std::string jgens = join_ints(j.generators().empty() ? j.compute_generators()
                                                         : j.generators());
    std::string label = "amalg(" + A.label() + "," + B.label() + ",hom=" + f.label +
                        ",j=" + jgens + ")";
    return std::make_shared<FiniteRing>(std::move(add), std::move(mul), std::move(neg),
                                        A.one(), label,
                                        AmalgamationShape{a, b, f.map, j_elems});
}

std::pair<RingPtr, RingHom> make_quotient(RingPtr r, const Ideal& i) {
    if (i.ring() != r) throw input_error("quotient: ideal belongs to a different ring");
    if (!i.is_proper()) throw input_error("quotient by the improper ideal");
    const FiniteRing& R = *r;

    std::vector<int> reps, rep_of;
    coset_split(R, i, reps, rep_of);
    const int n = static_cast<int>(reps.size());

    std::vector<int> add(static_cast<std::size_t>(n) * n), mul(add.size()), neg(n);
    for (int x = 0; x < n; ++x) {
        neg[x] = rep_of[R.neg(reps[x])];
        for (int y = 0; y < n; ++y) {
            add[static_cast<std::size_t>(x) * n + y] = rep_of[R.add(reps[x], reps[y])];
            mul[static_cast<std::size_t>(x) * n + y] = rep_of[R.mul(reps[x], reps[y])];
        }
    }
    std::string gens = join_ints(i.generators().empty() ? i.compute_generators()
                                                        : i.generators());
    std::string label = "quot(" + R.label() + ";gens=" + gens + ")";
    auto quot = std::make_shared<FiniteRing>(std::move(add), std::move(mul),
                                             std::move(neg), rep_of[R.one()], label,
                                             QuotientShape{r, reps, rep_of});
    RingHom proj{r, quot, rep_of, "proj"};
    return {quot, proj};
}

std::pair<RingPtr, RingHom> localize(RingPtr r, const std::vector<int>& s) {
    const FiniteRing& R = *r;
    ElemSet sset(R.order());
    for (int x : s) {
        if (x < 0 || x >= R.order()) throw input_error("localize: element out of range");
        sset.insert(x);
    }
    if (sset.contains(0))
        throw input_error("localize: 0 in S gives the degenerate localization");
    if (!sset.contains(R.one())) throw input_error("localize: S must contain 1");
    auto selems = sset.elements();
    for (int x : selems)
        for (int y : selems)
            if (!sset.contains(R.mul(x, y)))
                throw input_error("localize: S is not multiplicatively closed");

    int t = R.one();
    for (int x : selems) t = R.mul(t, x);
    int e = -1;
    int p = t;
    for (int k = 0; k <= 2 * R.order() + 1; ++k) {
        if (R.mul(p, p) == p) {
            e = p;
            break;
        }
        p = R.mul(p, t);
    }
    if (e < 0) throw defect_error("localize: no idempotent power found");

    std::vector<int> elems;
    std::vector<int> pos_of(R.order(), -1);
    for (int a = 0; a < R.order(); ++a) {
        int ea = R.mul(e, a);
        if (pos_of[ea] < 0) {
            pos_of[ea] = -2;  // mark; fill positions after sort
        }
    }
    for (int a = 0; a < R.order(); ++a)
        if (pos_of[a] == -2) {
            pos_of[a] = static_cast<int>(elems.size());
            elems.push_back(a);
        }
    const int n = static_cast<int>(elems.size());

    std::vector<int> add(static_cast<std::size_t>(n) * n), mul(add.size()), neg(n);
    for (int x = 0; x < n; ++x) {
        neg[x] = pos_of[R.neg(elems[x])];
        for (int y = 0; y < n; ++y) {
            add[static_cast<std::size_t>(x) * n + y] = pos_of[R.add(elems[x], elems[y])];
            mul[static_cast<std::size_t>(x) * n + y] = pos_of[R.mul(elems[x], elems[y])];
        }
    }
    std::vector<int> sorted_s(selems);
    std::string label = "loc(" + R.label() + ";s=" + join_ints(sorted_s) + ")";
    auto loc = std::make_shared<FiniteRing>(std::move(add), std::move(mul),
                                            std::move(neg), pos_of[e], label,
                                            LocalizationShape{r, e, elems});
    std::vector<int> hommap(R.order());
    for (int a = 0; a < R.order(); ++a) hommap[a] = pos_of[R.mul(e, a)];
    RingHom hom{r, loc, std::move(hommap), "localize"};

    for (int x : selems)
        if (!loc->units().contains(hom(x)))
            throw defect_error("localize: image of an S element is not a unit");
    return {loc, hom};
}

// --- hom builders ----------------------------------------------------------

RingHom quotient_projection(RingPtr base, RingPtr quot) {
    const auto* shape = std::get_if<QuotientShape>(&quot->construction());
    if (!shape || shape->base != base)
        throw input_error("quotient_projection: ring is not a quotient of the base");
    return RingHom{base, quot, shape->rep_of, "proj"};
}

RingHom prime_subring_inclusion(RingPtr zchar, RingPtr t) {
    const auto* shape = std::get_if<ZnShape>(&zchar->construction());
    if (!shape || shape->n != t->characteristic())
        throw input_error("prime_subring_inclusion: source must be Z_char(T)");
    std::vector<int> map(zchar->order());
    int cur = 0;
    for (int i = 0; i < zchar->order(); ++i) {
        map[i] = cur;
        cur = t->add(cur, t->one());
    }
    return RingHom{zchar, t, std::move(map), "prime-subring"};
}

RingHom diagonal_hom(RingPtr r, RingPtr rxr) {
    const auto* shape = std::get_if<ProductShape>(&rxr->construction());
    if (!shape || shape->factors.size() != 2 || shape->factors[0] != r ||
        shape->factors[1] != r)
        throw input_error("diagonal_hom: target must be the product of two copies");
    std::vector<int> map(r->order());
    for (int a = 0; a < r->order(); ++a) map[a] = a + r->order() * a;
    return RingHom{r, rxr, std::move(map), "diagonal"};
}

RingHom amalgamation_embedding(RingPtr a, RingPtr amalg) {
    const auto* shape = std::get_if<AmalgamationShape>(&amalg->construction());
    if (!shape || shape->a != a)
        throw input_error("amalgamation_embedding: target was not built from this A");
    std::vector<int> map(a->order());
    for (int x = 0; x < a->order(); ++x) map[x] = x;  // j = 0 slice
    return RingHom{a, amalg, std::move(map), "amalg-embed"};
}

RingHom zn_reduction(RingPtr zm, RingPtr zn) {
    const auto* sm = std::get_if<ZnShape>(&zm->construction());
    const auto* sn = std::get_if<ZnShape>(&zn->construction());
    if (!sm || !sn || sm->n % sn->n != 0)
        throw input_error("zn_reduction requires Z_m -> Z_n with n | m");
    std::vector<int> map(zm->order());
    for (int i = 0; i < zm->order(); ++i) map[i] = static_cast<int>(i % sn->n);
    return RingHom{zm, zn, std::move(map), "mod"};
}

RingHom identity_hom(RingPtr r) {
    std::vector<int> map(r->order());
    std::iota(map.begin(), map.end(), 0);
    return RingHom{r, r, std::move(map), "id"};
}

}  // namespace sdfa
