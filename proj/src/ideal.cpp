#include "wchow/ideal.hpp"

#include <algorithm>
#include <map>

namespace wchow {

namespace {

bool matvec_equals(const IntegerMatrix& A, const std::vector<Int>& x, const std::vector<Int>& b) {
    std::vector<Int> acc(A.rows, Int(0));
    for (std::size_t j = 0; j < A.cols; ++j) {
        if (sgn(x[j]) == 0) continue;
        for (std::size_t r = 0; r < A.rows; ++r) acc[r] += A.col[j][r] * x[j];
    }
    return acc == b;
}

}  // namespace

std::optional<std::vector<Int>> hermite_solve(const IntegerMatrix& A, const std::vector<Int>& b) {
    if (b.size() != A.rows) throw ring_error("hermite_solve: dimension mismatch");
    IntegerMatrix M = A;
    // U tracks the column operations: M = A * U throughout
    IntegerMatrix U(A.cols, A.cols);
    for (std::size_t j = 0; j < A.cols; ++j) U.col[j][j] = 1;

    // col_j -= q * col_p, in place
    auto submul_cols = [&](std::size_t j, std::size_t p, const Int& q) {
        for (std::size_t rr = 0; rr < A.rows; ++rr)
            mpz_submul(M.col[j][rr].get_mpz_t(), q.get_mpz_t(), M.col[p][rr].get_mpz_t());
        for (std::size_t rr = 0; rr < A.cols; ++rr)
            mpz_submul(U.col[j][rr].get_mpz_t(), q.get_mpz_t(), U.col[p][rr].get_mpz_t());
    };
    std::vector<std::pair<std::size_t, std::size_t>> pivots;  // (row, col)
    std::size_t next_col = 0;
    Int q;
    for (std::size_t r = 0; r < A.rows && next_col < A.cols; ++r) {
        // Euclidean passes across the row: repeatedly bring the smallest
        // nonzero entry to the front and reduce the others by it; entries in
        // the row shrink below the pivot every pass, so this terminates at
        // the row gcd without inflating the pivot column
        while (true) {
            std::size_t best = A.cols;
            for (std::size_t j = next_col; j < A.cols; ++j) {
                if (sgn(M.col[j][r]) == 0) continue;
                if (best == A.cols ||
                    mpz_cmpabs(M.col[j][r].get_mpz_t(), M.col[best][r].get_mpz_t()) < 0)
                    best = j;
            }
            if (best == A.cols) break;  // row is zero past next_col
            if (best != next_col) {
                std::swap(M.col[best], M.col[next_col]);
                std::swap(U.col[best], U.col[next_col]);
            }
            bool others = false;
            for (std::size_t j = next_col + 1; j < A.cols; ++j) {
                if (sgn(M.col[j][r]) == 0) continue;
                mpz_fdiv_q(q.get_mpz_t(), M.col[j][r].get_mpz_t(),
                           M.col[next_col][r].get_mpz_t());
                if (sgn(q) != 0) submul_cols(j, next_col, q);
                if (sgn(M.col[j][r]) != 0) others = true;
            }
            if (!others) {
                if (sgn(M.col[next_col][r]) < 0) {
                    for (auto& w : M.col[next_col]) w = -w;
                    for (auto& w : U.col[next_col]) w = -w;
                }
                pivots.emplace_back(r, next_col);
                ++next_col;
                break;
            }
        }
    }

    // forward solve: scan rows in order, spending pivot columns as they appear
    std::vector<Int> z(A.cols, Int(0));
    std::vector<Int> w(A.rows, Int(0));
    std::size_t pi = 0;
    for (std::size_t r = 0; r < A.rows; ++r) {
        if (pi < pivots.size() && pivots[pi].first == r) {
            std::size_t j = pivots[pi].second;
            Int need = b[r] - w[r];
            Int q, rem;
            mpz_tdiv_qr(q.get_mpz_t(), rem.get_mpz_t(), need.get_mpz_t(),
                        M.col[j][r].get_mpz_t());
            if (sgn(rem) != 0) return std::nullopt;
            if (sgn(q) != 0) {
                z[j] = q;
                for (std::size_t rr = 0; rr < A.rows; ++rr) w[rr] += q * M.col[j][rr];
            }
            ++pi;
        } else if (w[r] != b[r]) {
            return std::nullopt;
        }
    }

    std::vector<Int> x(A.cols, Int(0));
    for (std::size_t j = 0; j < A.cols; ++j) {
        if (sgn(z[j]) == 0) continue;
        for (std::size_t i = 0; i < A.cols; ++i) x[i] += U.col[j][i] * z[j];
    }
    if (!matvec_equals(A, x, b)) throw ring_error("hermite_solve: internal verification failed");
    return x;
}

std::vector<Monomial> monomials_of_degree(const RingPtr& ring, long d) {
    std::vector<Monomial> out;
    if (d < 0) return out;
    Monomial cur(ring->nvars());
    auto in_normal_form = [&](const Monomial& m) {
        for (const auto& rule : ring->rewrites())
            if (m.divisible_by(rule.lead)) return false;
        return true;
    };
    // depth-first over variables, consuming degree
    auto rec = [&](auto&& self, std::size_t i, long rem) -> void {
        if (i == ring->nvars()) {
            if (rem == 0 && in_normal_form(cur)) out.push_back(cur);
            return;
        }
        int vd = ring->var(i).degree;
        long maxe = rem / vd;
        for (long e = 0; e <= maxe; ++e) {
            cur.exps[i] = static_cast<std::uint32_t>(e);
            self(self, i + 1, rem - e * vd);
        }
        cur.exps[i] = 0;
    };
    rec(rec, 0, d);
    GlexDesc lt{ring.get()};
    std::sort(out.begin(), out.end(), lt);
    return out;
}

bool MembershipCertificate::verify() const {
    GradedPolynomial acc(target.ring());
    for (std::size_t i = 0; i < generators.size(); ++i) acc += cofactors[i] * generators[i];
    acc += residual;
    return acc == target;
}

MembershipCertificate graded_membership(const GradedPolynomial& target,
                                        const std::vector<GradedPolynomial>& gens) {
    const RingPtr& ring = target.ring();
    for (const auto& g : gens) target.require_same_ring(g);
    if (!target.is_homogeneous()) throw ring_error("graded_membership: target not homogeneous");
    for (const auto& g : gens)
        if (!g.is_homogeneous())
            throw ring_error("graded_membership: generators must be homogeneous");

    const long D = target.is_zero() ? 0 : target.degree();

    MembershipCertificate cert;
    cert.target = target;
    cert.generators = gens;
    cert.residual = GradedPolynomial(ring);
    for (std::size_t i = 0; i < gens.size(); ++i) cert.cofactors.emplace_back(ring);
    if (target.is_zero()) {
        cert.member = true;
        return cert;
    }

    auto basis = monomials_of_degree(ring, D);
    std::map<Monomial, std::size_t, GlexDesc> row_of{GlexDesc{ring.get()}};
    for (std::size_t r = 0; r < basis.size(); ++r) row_of.emplace(basis[r], r);

    struct ColInfo {
        std::size_t gen;  // generator index, or SIZE_MAX for torsion columns
        Monomial mult;
    };
    std::vector<ColInfo> info;
    std::vector<std::vector<Int>> columns;
    auto poly_to_vec = [&](const GradedPolynomial& p) {
        std::vector<Int> v(basis.size(), Int(0));
        for (const auto& [m, c] : p.terms()) v[row_of.at(m)] = c;
        return v;
    };

    for (std::size_t i = 0; i < gens.size(); ++i) {
        if (gens[i].is_zero()) continue;
        for (const auto& m : monomials_of_degree(ring, D - gens[i].degree())) {
            auto col = poly_to_vec(gens[i].times_monomial(m, Int(1)));
            bool zero = std::all_of(col.begin(), col.end(), [](const Int& c) { return sgn(c) == 0; });
            if (zero) continue;
            info.push_back({i, m});
            columns.push_back(std::move(col));
        }
    }
    // torsion lifting: p * (each monomial divisible by the rule's divisor)
    for (const auto& rule : ring->torsion()) {
        for (const auto& m : monomials_of_degree(ring, D)) {
            if (!m.divisible_by(rule.divisor)) continue;
            std::vector<Int> v(basis.size(), Int(0));
            v[row_of.at(m)] = Int(rule.prime);
            info.push_back({SIZE_MAX, m});
            columns.push_back(std::move(v));
        }
    }

    IntegerMatrix A(basis.size(), columns.size());
    for (std::size_t j = 0; j < columns.size(); ++j) A.col[j] = std::move(columns[j]);
    auto x = hermite_solve(A, poly_to_vec(target));
    if (!x) {
        cert.member = false;
        cert.residual = target;
        return cert;
    }
    for (std::size_t j = 0; j < info.size(); ++j) {
        if (info[j].gen == SIZE_MAX || sgn((*x)[j]) == 0) continue;
        cert.cofactors[info[j].gen] +=
            GradedPolynomial::from_terms(ring, {{info[j].mult, (*x)[j]}});
    }
    cert.member = true;
    if (!cert.verify()) throw ring_error("graded_membership: certificate verification failed");
    return cert;
}

std::vector<GradedPolynomial> minimal_generators(const std::vector<GradedPolynomial>& gens) {
    std::vector<std::size_t> order(gens.size());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
    std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        return gens[a].degree() < gens[b].degree();
    });
    std::vector<GradedPolynomial> kept;
    for (auto i : order) {
        if (gens[i].is_zero()) continue;
        if (!kept.empty() && graded_membership(gens[i], kept).member) continue;
        kept.push_back(gens[i]);
    }
    return kept;
}

IdealEqualResult ideal_equal(const std::vector<GradedPolynomial>& a,
                             const std::vector<GradedPolynomial>& b,
                             const std::vector<GradedPolynomial>& torsion_extras) {
    auto with_extras = [&](const std::vector<GradedPolynomial>& side) {
        std::vector<GradedPolynomial> s = side;
        for (const auto& e : torsion_extras)
            if (!e.is_zero()) s.push_back(e);
        return s;
    };
    auto ae = with_extras(a), be = with_extras(b);
    IdealEqualResult res;
    res.equal = true;
    for (const auto& g : ae) {
        res.a_in_b.push_back(graded_membership(g, be));
        res.equal = res.equal && res.a_in_b.back().member;
    }
    for (const auto& g : be) {
        res.b_in_a.push_back(graded_membership(g, ae));
        res.equal = res.equal && res.b_in_a.back().member;
    }
    return res;
}

std::optional<GradedPolynomial> graded_solve(const GradedPolynomial& divisor,
                                             const GradedPolynomial& target, long xi_degree) {
    divisor.require_same_ring(target);
    const RingPtr& ring = divisor.ring();
    if (divisor.is_zero()) throw ring_error("graded_solve: zero divisor polynomial");
    auto cols_basis = monomials_of_degree(ring, xi_degree);
    auto rows_basis = monomials_of_degree(ring, xi_degree + divisor.degree());
    std::map<Monomial, std::size_t, GlexDesc> row_of{GlexDesc{ring.get()}};
    for (std::size_t r = 0; r < rows_basis.size(); ++r) row_of.emplace(rows_basis[r], r);

    IntegerMatrix A(rows_basis.size(), cols_basis.size());
    for (std::size_t j = 0; j < cols_basis.size(); ++j) {
        auto prod = divisor.times_monomial(cols_basis[j], Int(1));
        for (const auto& [m, c] : prod.terms()) A.col[j][row_of.at(m)] = c;
    }
    std::vector<Int> bvec(rows_basis.size(), Int(0));
    for (const auto& [m, c] : target.terms()) bvec[row_of.at(m)] = c;

    auto x = hermite_solve(A, bvec);
    if (!x) return std::nullopt;
    std::vector<std::pair<Monomial, Int>> ts;
    for (std::size_t j = 0; j < cols_basis.size(); ++j)
        if (sgn((*x)[j]) != 0) ts.emplace_back(cols_basis[j], (*x)[j]);
    return GradedPolynomial::from_terms(ring, ts);
}

}  // namespace wchow
