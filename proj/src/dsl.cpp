#include "sdfa/dsl.hpp"

#include <cctype>

namespace sdfa {

namespace {

class Parser {
public:
    explicit Parser(const std::string& text) : s_(text) {}

    RingPtr ring() {
        std::string name = ident();
        if (name == "zn") {
            expect('(');
            long n = integer();
            expect(')');
            return make_zn(n);
        }
        if (name == "prod") {
            expect('(');
            std::vector<RingPtr> factors;
            factors.push_back(ring());
            while (peek() == ',') {
                expect(',');
                factors.push_back(ring());
            }
            expect(')');
            return make_product(std::move(factors));
        }
        if (name == "gf" || name == "polyq") {
            expect('(');
            long p = integer();
            expect(',');
            auto coeffs = long_list();
            expect(')');
            return name == "gf" ? make_gf(p, coeffs) : make_poly_quotient(p, coeffs);
        }
        if (name == "idealize") {
            expect('(');
            RingPtr base = ring();
            expect(';');
            keyword("mod");
            expect('=');
            Ideal j = Ideal::zero(base);
            if (peek() == '[')
                j = Ideal::generated(base, element_list(base));
            else if (integer() != 0)
                fail("mod expects 0 or a generator list");
            expect(')');
            return make_idealization(base, ModuleSpec{base, j});
        }
        if (name == "amalg") {
            expect('(');
            RingPtr a = ring();
            expect(',');
            std::size_t b_at = pos_;
            RingPtr b = ring();
            expect(',');
            keyword("hom");
            expect('=');
            std::size_t hom_at = pos_;
            std::string hname = ident();
            expect(',');
            keyword("j");
            expect('=');
            RingHom f;
            if (hname == "id") {
                if (b->label() != a->label())
                    fail_at("hom=id requires identical rings", b_at);
                b = a;  // same object, so the hom endpoints line up
                f = identity_hom(a);
            } else if (hname == "mod") {
                f = zn_reduction(a, b);
            } else {
                fail_at("unknown hom name '" + hname + "' (expected id or mod)", hom_at);
            }
            Ideal j = Ideal::generated(b, element_list(b));
            expect(')');
            return make_amalgamation(a, b, f, j);
        }
        fail_at("unknown constructor '" + name + "'", start_of_last_ident_);
        return nullptr;
    }

    ParsedIdeal ideal_spec() {
        std::size_t save = pos_;
        std::string name = ident();
        if (name == "ideal") {
            expect('(');
            RingPtr r = ring();
            expect(';');
            keyword("gens");
            expect('=');
            auto gens = element_list(r);
            expect(')');
            end();
            return {r, Ideal::generated(r, gens)};
        }
        pos_ = save;
        RingPtr r = ring();
        end();
        return {r, Ideal::zero(r)};
    }

    RingPtr ring_only() {
        RingPtr r = ring();
        end();
        return r;
    }

    int element(const RingPtr& r) {
        skip();
        if (peek() == '(') return tuple_element(r);
        std::size_t at = pos_;
        long v = integer();
        if (v < 0 || v >= r->order())
            fail_at("element index " + std::to_string(v) + " out of range for " + r->label(), at);
        return static_cast<int>(v);
    }

    std::vector<int> element_list(const RingPtr& r) {
        std::vector<int> out;
        expect('[');
        skip();
        if (peek() != ']') {
            out.push_back(element(r));
            while (peek() == ',') {
                expect(',');
                out.push_back(element(r));
            }
        }
        expect(']');
        return out;
    }

    // bare list without brackets, for CLI --gens
    std::vector<int> loose_element_list(const RingPtr& r) {
        skip();
        if (done()) return {};
        if (peek() == '[') {
            auto out = element_list(r);
            end();
            return out;
        }
        std::vector<int> out;
        out.push_back(element(r));
        while (peek() == ',') {
            expect(',');
            out.push_back(element(r));
        }
        end();
        return out;
    }

    void end() {
        skip();
        if (!done()) fail("trailing input");
    }

private:
    int tuple_element(const RingPtr& r) {
        std::size_t at = pos_;
        expect('(');
        if (const auto* s = std::get_if<ProductShape>(&r->construction())) {
            int idx = 0, radix = 1;
            for (std::size_t i = 0; i < s->factors.size(); ++i) {
                if (i) expect(',');
                idx += radix * element(s->factors[i]);
                radix *= s->factors[i]->order();
            }
            expect(')');
            return idx;
        }
        if (const auto* s = std::get_if<IdealizationShape>(&r->construction())) {
            int rpart = element(s->base);
            expect(',');
            int mpart = element(s->base);
            expect(')');
            return rpart + s->base->order() * s->module_rep_of[mpart];
        }
        if (const auto* s = std::get_if<AmalgamationShape>(&r->construction())) {
            int apart = element(s->a);
            expect(',');
            std::size_t b_at = pos_;
            int bpart = element(s->b);
            expect(')');
            int j = s->b->sub(bpart, s->hom[apart]);
            for (std::size_t jp = 0; jp < s->j_elems.size(); ++jp)
                if (s->j_elems[jp] == j)
                    return apart + s->a->order() * static_cast<int>(jp);
            fail_at("pair is not an element of the amalgamation", b_at);
        }
        fail_at("tuple elements are only valid for product, idealization or "
                "amalgamation rings",
                at);
        return -1;
    }

    void skip() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }
    bool done() {
        skip();
        return pos_ >= s_.size();
    }
    char peek() {
        skip();
        return pos_ < s_.size() ? s_[pos_] : '\0';
    }
    void expect(char c) {
        skip();
        if (pos_ >= s_.size() || s_[pos_] != c)
            fail(std::string("expected '") + c + "'");
        ++pos_;
    }
    void keyword(const std::string& kw) {
        std::size_t at = pos_;
        if (ident() != kw) fail_at("expected '" + kw + "'", at);
    }
    std::string ident() {
        skip();
        start_of_last_ident_ = pos_;
        std::size_t start = pos_;
        while (pos_ < s_.size() &&
               (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '_'))
            ++pos_;
        if (pos_ == start) fail("expected an identifier");
        return s_.substr(start, pos_ - start);
    }
    long integer() {
        skip();
        std::size_t start = pos_;
        if (pos_ < s_.size() && (s_[pos_] == '-' || s_[pos_] == '+')) ++pos_;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
        if (pos_ == start || (pos_ == start + 1 && !std::isdigit(static_cast<unsigned char>(s_[start]))))
            fail("expected an integer");
        return std::stol(s_.substr(start, pos_ - start));
    }
    std::vector<long> long_list() {
        std::vector<long> out;
        expect('[');
        skip();
        if (peek() != ']') {
            out.push_back(integer());
            while (peek() == ',') {
                expect(',');
                out.push_back(integer());
            }
        }
        expect(']');
        return out;
    }

    [[noreturn]] void fail(const std::string& msg) { throw parse_error(msg, pos_); }
    [[noreturn]] void fail_at(const std::string& msg, std::size_t at) {
        throw parse_error(msg, at);
    }

    const std::string& s_;
    std::size_t pos_ = 0;
    std::size_t start_of_last_ident_ = 0;
};

}  // namespace

RingPtr parse_ring_spec(const std::string& text) {
    Parser p(text);
    return p.ring_only();
}

ParsedIdeal parse_ideal_spec(const std::string& text) {
    Parser p(text);
    return p.ideal_spec();
}

int parse_element(const std::string& text, const RingPtr& ring) {
    Parser p(text);
    int e = p.element(ring);
    p.end();
    return e;
}

std::vector<int> parse_element_list(const std::string& text, const RingPtr& ring) {
    Parser p(text);
    return p.loose_element_list(ring);
}

}  // namespace sdfa
