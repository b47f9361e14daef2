#include "wchow/io.hpp"

#include <cctype>
#include <sstream>

namespace wchow {

namespace {

template <typename C>
void print_magnitude(std::ostream& os, const C& mag, const Monomial& m, const RingSpec& ring) {
    bool unit = (mag == C(1));
    bool wrote = false;
    if (!unit || m.is_one()) {
        os << mag;
        wrote = true;
    }
    for (std::size_t i = 0; i < m.size(); ++i) {
        if (m[i] == 0) continue;
        if (wrote) os << '*';
        os << ring.var(i).name;
        if (m[i] > 1) os << '^' << m[i];
        wrote = true;
    }
}

template <typename C>
std::string poly_to_string(const PolyT<C>& p) {
    if (p.is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [m, c] : p.terms()) {
        bool neg = sgn(c) < 0;
        if (first) {
            if (neg) os << '-';
        } else {
            os << (neg ? '-' : '+');
        }
        C mag = neg ? C(-c) : c;
        print_magnitude(os, mag, m, *p.ring());
        first = false;
    }
    return os.str();
}

struct Cursor {
    std::string_view s;
    std::size_t pos = 0;

    void skip_ws() {
        while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
    }
    bool done() {
        skip_ws();
        return pos >= s.size();
    }
    char peek() {
        skip_ws();
        return s[pos];
    }
    char take() {
        skip_ws();
        return s[pos++];
    }
};

std::string parse_digits(Cursor& c) {
    c.skip_ws();
    std::string out;
    while (c.pos < c.s.size() && std::isdigit(static_cast<unsigned char>(c.s[c.pos])))
        out.push_back(c.s[c.pos++]);
    if (out.empty()) throw ring_error("parse error: expected digits at position " +
                                      std::to_string(c.pos));
    return out;
}

std::string parse_ident(Cursor& c) {
    c.skip_ws();
    std::string out;
    if (c.pos >= c.s.size() || !std::isalpha(static_cast<unsigned char>(c.s[c.pos])))
        throw ring_error("parse error: expected variable at position " + std::to_string(c.pos));
    while (c.pos < c.s.size() && (std::isalnum(static_cast<unsigned char>(c.s[c.pos])) ||
                                  c.s[c.pos] == '_'))
        out.push_back(c.s[c.pos++]);
    return out;
}

}  // namespace

std::string to_string(const GradedPolynomial& p) { return poly_to_string(p); }
std::string to_string(const RationalGradedPolynomial& p) { return poly_to_string(p); }

GradedPolynomial parse_polynomial(const RingPtr& ring, std::string_view text) {
    Cursor c{text};
    std::vector<std::pair<Monomial, Int>> terms;
    bool any = false;
    while (!c.done()) {
        int sign = 1;
        while (!c.done() && (c.peek() == '+' || c.peek() == '-')) {
            if (c.take() == '-') sign = -sign;
        }
        if (c.done()) throw ring_error("parse error: dangling sign");
        Int coeff(sign);
        Monomial m(ring->nvars());
        bool expect_factor = true;
        bool saw_coeff = false;
        while (expect_factor) {
            if (std::isdigit(static_cast<unsigned char>(c.peek()))) {
                if (saw_coeff) throw ring_error("parse error: repeated coefficient");
                coeff *= Int(parse_digits(c));
                saw_coeff = true;
            } else {
                std::string name = parse_ident(c);
                int idx = ring->var_index(name);
                if (idx < 0)
                    throw ring_error("parse error: unknown variable '" + name + "' in ring " +
                                     ring->name());
                std::uint32_t e = 1;
                if (!c.done() && c.peek() == '^') {
                    c.take();
                    e = static_cast<std::uint32_t>(std::stoul(parse_digits(c)));
                }
                m.exps[static_cast<std::size_t>(idx)] += e;
            }
            expect_factor = false;
            if (!c.done() && c.peek() == '*') {
                c.take();
                expect_factor = true;
            }
        }
        terms.emplace_back(std::move(m), std::move(coeff));
        any = true;
    }
    if (!any) throw ring_error("parse error: empty polynomial text");
    return GradedPolynomial::from_terms(ring, terms);
}

}  // namespace wchow
