#pragma once

// Exact multivariate polynomial arithmetic over arbitrary-precision integers
// and rationals, in weighted-graded rings with optional reduction rules:
// prime torsion on coefficients of monomial multiples, and degree-homogeneous
// rewrite rules. Every value is immutable after construction and is kept in
// canonical normal form, so equality is term-wise comparison and all
// operations are deterministic.

#include <gmpxx.h>

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace wchow {

using Int = mpz_class;
using Rat = mpq_class;

struct ring_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct not_divisible_error : ring_error {
    using ring_error::ring_error;
};
struct integrality_error : ring_error {
    using ring_error::ring_error;
};
struct not_symmetric_error : ring_error {
    using ring_error::ring_error;
};

// ---------------------------------------------------------------------------
// Monomial: exponent vector, one entry per ring variable.

struct Monomial {
    std::vector<std::uint32_t> exps;

    Monomial() = default;
    explicit Monomial(std::size_t nvars) : exps(nvars, 0) {}
    explicit Monomial(std::vector<std::uint32_t> e) : exps(std::move(e)) {}

    std::size_t size() const { return exps.size(); }
    std::uint32_t operator[](std::size_t i) const { return exps[i]; }

    bool is_one() const {
        for (auto e : exps)
            if (e != 0) return false;
        return true;
    }
    bool divisible_by(const Monomial& d) const {
        for (std::size_t i = 0; i < exps.size(); ++i)
            if (exps[i] < d.exps[i]) return false;
        return true;
    }
    Monomial times(const Monomial& o) const {
        Monomial r(*this);
        for (std::size_t i = 0; i < exps.size(); ++i) r.exps[i] += o.exps[i];
        return r;
    }
    // exact quotient; caller must ensure divisibility
    Monomial over(const Monomial& d) const {
        Monomial r(*this);
        for (std::size_t i = 0; i < exps.size(); ++i) r.exps[i] -= d.exps[i];
        return r;
    }
    friend bool operator==(const Monomial& a, const Monomial& b) { return a.exps == b.exps; }
};

// ---------------------------------------------------------------------------
// RingSpec: variables with weighted degrees plus reduction relations.

struct Variable {
    std::string name;
    int degree = 1;
};

// Coefficients of monomials divisible by `divisor` are reduced modulo `prime`
// into {0, ..., prime-1}.
struct TorsionRule {
    unsigned prime = 2;
    Monomial divisor;
};

// A term divisible by `lead` is rewritten with `replacement` substituted for
// `lead`. The replacement must be homogeneous of the same weighted degree and
// strictly lower the exponent of a designated variable so reduction
// terminates.
struct RewriteRule {
    Monomial lead;
    std::vector<std::pair<Monomial, Int>> replacement;
};

class RingSpec;
using RingPtr = std::shared_ptr<const RingSpec>;

class RingSpec {
public:
    RingSpec(std::string name, std::vector<Variable> vars, std::vector<TorsionRule> torsion = {},
             std::vector<RewriteRule> rewrites = {})
        : name_(std::move(name)),
          vars_(std::move(vars)),
          torsion_(std::move(torsion)),
          rewrites_(std::move(rewrites)) {}

    static RingPtr make(std::string name, std::vector<Variable> vars,
                        std::vector<TorsionRule> torsion = {},
                        std::vector<RewriteRule> rewrites = {}) {
        return std::make_shared<const RingSpec>(std::move(name), std::move(vars),
                                                std::move(torsion), std::move(rewrites));
    }

    const std::string& name() const { return name_; }
    std::size_t nvars() const { return vars_.size(); }
    const std::vector<Variable>& vars() const { return vars_; }
    const Variable& var(std::size_t i) const { return vars_[i]; }
    const std::vector<TorsionRule>& torsion() const { return torsion_; }
    const std::vector<RewriteRule>& rewrites() const { return rewrites_; }
    bool has_torsion() const { return !torsion_.empty(); }
    bool has_rewrites() const { return !rewrites_.empty(); }
    bool is_domain() const { return torsion_.empty() && rewrites_.empty(); }

    int var_index(std::string_view n) const {
        for (std::size_t i = 0; i < vars_.size(); ++i)
            if (vars_[i].name == n) return static_cast<int>(i);
        return -1;
    }

    long degree(const Monomial& m) const {
        long d = 0;
        for (std::size_t i = 0; i < m.size(); ++i)
            d += static_cast<long>(m[i]) * vars_[i].degree;
        return d;
    }

private:
    std::string name_;
    std::vector<Variable> vars_;
    std::vector<TorsionRule> torsion_;
    std::vector<RewriteRule> rewrites_;
};

// Descending graded-lexicographic order: map::begin() is the leading term.
struct GlexDesc {
    const RingSpec* ring = nullptr;
    bool operator()(const Monomial& a, const Monomial& b) const {
        long da = ring->degree(a), db = ring->degree(b);
        if (da != db) return da > db;
        return a.exps > b.exps;
    }
};

namespace detail {
inline bool coeff_is_zero(const Int& c) { return sgn(c) == 0; }
inline bool coeff_is_zero(const Rat& c) { return sgn(c) == 0; }
}  // namespace detail

// ---------------------------------------------------------------------------
// PolyT: sparse polynomial keyed by exponent vector, canonical normal form.

template <typename C>
class PolyT {
public:
    using TermMap = std::map<Monomial, C, GlexDesc>;

    PolyT() = default;
    explicit PolyT(RingPtr ring) : ring_(std::move(ring)), terms_(GlexDesc{ring_.get()}) {
        check_coeff_kind();
    }

    static PolyT zero(RingPtr ring) { return PolyT(std::move(ring)); }

    static PolyT constant(RingPtr ring, C value) {
        PolyT p(std::move(ring));
        if (!detail::coeff_is_zero(value)) p.terms_.emplace(Monomial(p.ring_->nvars()), std::move(value));
        p.normalize();
        return p;
    }

    static PolyT variable(RingPtr ring, std::size_t idx, std::uint32_t power = 1) {
        PolyT p(std::move(ring));
        Monomial m(p.ring_->nvars());
        m.exps[idx] = power;
        p.terms_.emplace(std::move(m), C(1));
        p.normalize();
        return p;
    }

    static PolyT from_terms(RingPtr ring, const std::vector<std::pair<Monomial, C>>& ts) {
        PolyT p(std::move(ring));
        for (const auto& [m, c] : ts) p.add_term(m, c);
        p.normalize();
        return p;
    }

    const RingPtr& ring() const { return ring_; }
    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t term_count() const { return terms_.size(); }

    // max weighted degree of the stored terms; -1 for the zero polynomial
    long degree() const {
        long d = -1;
        for (const auto& [m, c] : terms_) d = std::max(d, ring_->degree(m));
        return d;
    }

    bool is_homogeneous() const {
        if (terms_.empty()) return true;
        long d = ring_->degree(terms_.begin()->first);
        for (const auto& [m, c] : terms_)
            if (ring_->degree(m) != d) return false;
        return true;
    }
    bool is_homogeneous_of(long d) const {
        for (const auto& [m, c] : terms_)
            if (ring_->degree(m) != d) return false;
        return true;
    }

    const std::pair<const Monomial, C>& leading_term() const {
        if (terms_.empty()) throw ring_error("leading term of zero polynomial");
        return *terms_.begin();
    }

    PolyT graded_component(long d) const {
        PolyT r(ring_);
        for (const auto& [m, c] : terms_)
            if (ring_->degree(m) == d) r.terms_.emplace(m, c);
        return r;
    }

    PolyT operator-() const {
        PolyT r(*this);
        for (auto& [m, c] : r.terms_) c = -c;
        return r;
    }

    friend PolyT operator+(const PolyT& a, const PolyT& b) {
        a.require_same_ring(b);
        PolyT r(a);
        for (const auto& [m, c] : b.terms_) r.add_term(m, c);
        r.normalize();
        return r;
    }
    friend PolyT operator-(const PolyT& a, const PolyT& b) {
        a.require_same_ring(b);
        PolyT r(a);
        for (const auto& [m, c] : b.terms_) r.add_term(m, -c);
        r.normalize();
        return r;
    }
    friend PolyT operator*(const PolyT& a, const PolyT& b) {
        a.require_same_ring(b);
        PolyT r(a.ring_);
        for (const auto& [ma, ca] : a.terms_)
            for (const auto& [mb, cb] : b.terms_) r.add_term(ma.times(mb), ca * cb);
        r.normalize();
        return r;
    }
    friend PolyT operator*(const PolyT& a, const C& s) {
        PolyT r(a);
        for (auto& [m, c] : r.terms_) c *= s;
        r.normalize();
        return r;
    }
    friend PolyT operator*(const C& s, const PolyT& a) { return a * s; }

    PolyT& operator+=(const PolyT& b) { return *this = *this + b; }
    PolyT& operator-=(const PolyT& b) { return *this = *this - b; }
    PolyT& operator*=(const PolyT& b) { return *this = *this * b; }

    PolyT times_monomial(const Monomial& m, const C& c) const {
        PolyT r(ring_);
        for (const auto& [mm, cc] : terms_) r.terms_.emplace(mm.times(m), cc * c);
        r.normalize();
        return r;
    }

    PolyT pow(unsigned e) const {
        PolyT r = constant(ring_, C(1));
        PolyT base(*this);
        while (e) {
            if (e & 1u) r = r * base;
            base = (e >>= 1) ? base * base : base;
        }
        return r;
    }

    friend bool operator==(const PolyT& a, const PolyT& b) {
        if (a.ring_.get() != b.ring_.get()) return false;
        if (a.terms_.size() != b.terms_.size()) return false;
        auto it = a.terms_.begin(), jt = b.terms_.begin();
        for (; it != a.terms_.end(); ++it, ++jt)
            if (!(it->first == jt->first) || it->second != jt->second) return false;
        return true;
    }
    friend bool operator!=(const PolyT& a, const PolyT& b) { return !(a == b); }

    // total order used only for deterministic sorting of polynomial lists
    static int compare(const PolyT& a, const PolyT& b) {
        GlexDesc lt{a.ring_.get()};
        auto it = a.terms_.begin(), jt = b.terms_.begin();
        for (; it != a.terms_.end() && jt != b.terms_.end(); ++it, ++jt) {
            if (lt(it->first, jt->first)) return -1;
            if (lt(jt->first, it->first)) return 1;
            if (it->second != jt->second) return it->second < jt->second ? -1 : 1;
        }
        if (it != a.terms_.end()) return 1;
        if (jt != b.terms_.end()) return -1;
        return 0;
    }

    void require_same_ring(const PolyT& o) const {
        if (ring_.get() != o.ring_.get()) throw ring_error("ring mismatch");
    }

private:
    void check_coeff_kind() const {
        if constexpr (std::is_same_v<C, Rat>) {
            if (ring_ && ring_->has_torsion())
                throw ring_error("rational coefficients are not supported in torsion rings");
        }
    }

    void add_term(const Monomial& m, const C& c) {
        if (detail::coeff_is_zero(c)) return;
        auto [it, inserted] = terms_.try_emplace(m, c);
        if (!inserted) {
            it->second += c;
            if (detail::coeff_is_zero(it->second)) terms_.erase(it);
        }
    }

    // rewrite reduction followed by torsion reduction
    void normalize() {
        if (ring_ && ring_->has_rewrites()) {
            bool changed = true;
            while (changed) {
                changed = false;
                std::vector<std::pair<Monomial, C>> pending;
                for (auto it = terms_.begin(); it != terms_.end();) {
                    const RewriteRule* hit = nullptr;
                    for (const auto& rule : ring_->rewrites())
                        if (it->first.divisible_by(rule.lead)) {
                            hit = &rule;
                            break;
                        }
                    if (hit) {
                        Monomial q = it->first.over(hit->lead);
                        for (const auto& [rm, rc] : hit->replacement)
                            pending.emplace_back(q.times(rm), C(it->second * rc));
                        it = terms_.erase(it);
                        changed = true;
                    } else {
                        ++it;
                    }
                }
                for (auto& [m, c] : pending) add_term(m, c);
            }
        }
        if constexpr (std::is_same_v<C, Int>) {
            if (ring_ && ring_->has_torsion()) {
                for (auto it = terms_.begin(); it != terms_.end();) {
                    bool erased = false;
                    for (const auto& rule : ring_->torsion()) {
                        if (it->first.divisible_by(rule.divisor)) {
                            Int r;
                            mpz_fdiv_r_ui(r.get_mpz_t(), it->second.get_mpz_t(), rule.prime);
                            it->second = r;
                            if (detail::coeff_is_zero(it->second)) {
                                it = terms_.erase(it);
                                erased = true;
                            }
                            break;
                        }
                    }
                    if (!erased) ++it;
                }
            }
        }
    }

    RingPtr ring_;
    TermMap terms_{GlexDesc{nullptr}};

    template <typename>
    friend class PolyT;
    friend PolyT<Rat> to_rational(const PolyT<Int>&);
    friend PolyT<Int> to_integral(const PolyT<Rat>&);
    friend PolyT<Int> transfer(const PolyT<Int>&, const RingPtr&);
};

using GradedPolynomial = PolyT<Int>;
using RationalGradedPolynomial = PolyT<Rat>;

// ---------------------------------------------------------------------------
// Conversions.

inline RationalGradedPolynomial to_rational(const GradedPolynomial& p) {
    RationalGradedPolynomial r(p.ring());
    for (const auto& [m, c] : p.terms()) r.terms_.emplace(m, Rat(c));
    return r;
}

// Companion integrality assertion: all denominators must be 1.
inline GradedPolynomial to_integral(const RationalGradedPolynomial& p) {
    GradedPolynomial r(p.ring());
    for (const auto& [m, c] : p.terms()) {
        Rat cc(c);
        cc.canonicalize();
        if (cc.get_den() != 1) throw integrality_error("integrality violation");
        r.terms_.emplace(m, cc.get_num());
    }
    return GradedPolynomial::from_terms(p.ring(), {r.terms_.begin(), r.terms_.end()});
}

// Move a polynomial into another ring spec, matching variables by name.
// Variables absent from the target must not occur; degrees must agree.
inline GradedPolynomial transfer(const GradedPolynomial& p, const RingPtr& target) {
    std::vector<int> map(p.ring()->nvars(), -1);
    for (std::size_t i = 0; i < p.ring()->nvars(); ++i) {
        int j = target->var_index(p.ring()->var(i).name);
        if (j >= 0 && target->var(j).degree != p.ring()->var(i).degree)
            throw ring_error("transfer: variable degree mismatch for " + p.ring()->var(i).name);
        map[i] = j;
    }
    std::vector<std::pair<Monomial, Int>> ts;
    for (const auto& [m, c] : p.terms()) {
        Monomial mm(target->nvars());
        for (std::size_t i = 0; i < m.size(); ++i) {
            if (m[i] == 0) continue;
            if (map[i] < 0)
                throw ring_error("transfer: variable " + p.ring()->var(i).name +
                                 " not present in ring " + target->name());
            mm.exps[static_cast<std::size_t>(map[i])] += m[i];
        }
        ts.emplace_back(std::move(mm), c);
    }
    return GradedPolynomial::from_terms(target, ts);
}

// ---------------------------------------------------------------------------
// Exact division in an integral domain (no reduction relations).

GradedPolynomial exact_divide(const GradedPolynomial& num, const GradedPolynomial& den);

// Divide every coefficient by k, failing if any is not divisible.
GradedPolynomial divide_scalar_exact(const GradedPolynomial& p, const Int& k);

// ---------------------------------------------------------------------------
// Substitution. Bindings map variable index -> homogeneous replacement of the
// variable's degree (scalar multiples allowed, zero allowed); unbound
// variables map to themselves.

RationalGradedPolynomial substitute(
    const GradedPolynomial& p, const std::map<std::size_t, RationalGradedPolynomial>& bindings);

// ---------------------------------------------------------------------------
// Symmetric-function reduction: rewrite a polynomial that is symmetric in the
// designated root variables in terms of prescribed images of the elementary
// symmetric polynomials; other variables pass through by index map.

struct SymmetrizeMap {
    RingPtr source;
    RingPtr target;
    std::vector<std::size_t> root_vars;                // indices in source
    std::vector<GradedPolynomial> e_images;            // images of e_1..e_n in target
    std::vector<std::pair<std::size_t, std::size_t>> passthrough;  // (source, target)
};

GradedPolynomial symmetrize(const GradedPolynomial& p, const SymmetrizeMap& map);

}  // namespace wchow
