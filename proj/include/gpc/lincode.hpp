#ifndef GPC_LINCODE_HPP
#define GPC_LINCODE_HPP

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "gpc/bits.hpp"
#include "gpc/gf2poly.hpp"

namespace gpc {

/* [n, k] binary linear code held as a full-rank generator plus its check matrix */
struct LinearCode {
    std::size_t n = 0;
    std::size_t k = 0;
    BitMatrix gen;    /* k x n */
    BitMatrix check;  /* (n-k) x n with gen * check^T = 0 */
    std::string name;

    BitVector encode(const BitVector& x) const {
        if (x.size() != k) throw std::invalid_argument("LinearCode::encode: message length mismatch");
        BitVector c(n);
        for (std::size_t i = 0; i < k; ++i)
            if (x.get(i)) c ^= gen.row(i);
        return c;
    }

    BitVector syndrome(const BitVector& v) const { return check.mul_vec(v); }

    bool in_code(const BitVector& v) const { return syndrome(v).is_zero(); }
};

/*
 * Builds a LinearCode from generator rows. Independent rows are kept as
 * given; dependent row sets are rejected unless allow_reduce is set, in
 * which case the row space's reduced echelon basis is used instead.
 */
inline LinearCode make_linear_code(const BitMatrix& rows, const std::string& name = "",
                                   bool allow_reduce = false) {
    BitMatrix g = rows;
    std::size_t r = g.rank();
    if (r != g.rows()) {
        if (!allow_reduce) throw std::invalid_argument("make_linear_code: generator rows are dependent");
        BitMatrix red = rows;
        red.rref();
        BitMatrix keep(0, rows.cols());
        for (std::size_t i = 0; i < r; ++i) keep.append_row(red.row(i));
        g = keep;
    }
    LinearCode c;
    c.n = g.cols();
    c.k = g.rows();
    c.gen = g;
    c.check = g.kernel();
    c.name = name;
    if (c.check.rows() != c.n - c.k) throw std::runtime_error("make_linear_code: check matrix rank mismatch");
    for (std::size_t i = 0; i < c.k; ++i)
        if (!c.check.mul_vec(c.gen.row(i)).is_zero())
            throw std::runtime_error("make_linear_code: G H^T != 0");
    return c;
}

/* cyclic code of length n generated by g(z), which must divide z^n + 1 */
inline LinearCode cyclic_code(int n, const Poly2& g, const std::string& name = "") {
    if (n <= 0) throw std::invalid_argument("cyclic_code: n must be positive");
    if (g.is_zero()) throw std::invalid_argument("cyclic_code: zero generator polynomial");
    Poly2 xn1 = Poly2::monomial(n) + Poly2::one();
    if (!poly_divides(g, xn1)) throw std::invalid_argument("cyclic_code: generator does not divide z^n + 1");
    int k = n - g.degree();
    BitMatrix rows(0, std::size_t(n));
    for (int i = 0; i < k; ++i) rows.append_row(g.shifted(i).to_bitvector(std::size_t(n)));
    return make_linear_code(rows, name);
}

/* appends an overall parity coordinate, mapping f to (f; f(1)) */
inline LinearCode extend_parity(const LinearCode& c, const std::string& name = "") {
    BitMatrix rows(0, c.n + 1);
    for (std::size_t i = 0; i < c.k; ++i) {
        BitVector ext(c.n + 1);
        for (std::size_t j = 0; j < c.n; ++j)
            if (c.gen.row(i).get(j)) ext.set(j, true);
        ext.set(c.n, c.gen.row(i).weight() & 1);
        rows.append_row(ext);
    }
    return make_linear_code(rows, name.empty() ? c.name : name);
}

/* the |u|u+v| combination of two codes of equal length */
inline LinearCode u_u_plus_v(const LinearCode& a, const LinearCode& b, const std::string& name = "") {
    if (a.n != b.n) throw std::invalid_argument("u_u_plus_v: length mismatch");
    BitMatrix rows(0, 2 * a.n);
    for (std::size_t i = 0; i < a.k; ++i) rows.append_row(concat(a.gen.row(i), a.gen.row(i)));
    BitVector z(a.n);
    for (std::size_t i = 0; i < b.k; ++i) rows.append_row(concat(z, b.gen.row(i)));
    return make_linear_code(rows, name);
}

inline LinearCode dual(const LinearCode& c, const std::string& name = "") {
    LinearCode d;
    d.n = c.n;
    d.k = c.n - c.k;
    d.gen = c.check;
    d.check = c.gen;
    d.name = name.empty() ? c.name + "-dual" : name;
    return d;
}

/* true iff sub's row space lies inside sup's */
inline bool contains(const LinearCode& sup, const LinearCode& sub) {
    return row_space_contains(sup.gen, sub.gen);
}

/*
 * Reed-Muller code RM(r, m): evaluation vectors of all monomials of degree
 * at most r in m boolean variables, coordinate j being the evaluation at
 * the point with bits of j as variable values.
 */
inline LinearCode reed_muller(int r, int m, const std::string& name = "") {
    if (m < 1 || r < 0 || r > m) throw std::invalid_argument("reed_muller: need 0 <= r <= m");
    std::size_t n = std::size_t(1) << m;
    BitMatrix rows(0, n);
    std::vector<std::uint32_t> masks_by_degree;
    for (int d = 0; d <= r; ++d) {
        /* all variable subsets of size d, in increasing mask order */
        std::vector<std::uint32_t> masks;
        for (std::uint32_t mask = 0; mask < (1u << m); ++mask)
            if (std::popcount(mask) == d) masks.push_back(mask);
        for (std::uint32_t mask : masks) {
            BitVector row(n);
            for (std::size_t j = 0; j < n; ++j)
                if ((j & mask) == mask) row.set(j, true);
            rows.append_row(row);
        }
    }
    return make_linear_code(rows, name);
}

/*
 * The 2^(m-1) shared coset representatives of the Goethals/Preparata
 * constructions: t_i = (z^i; 1; z^i theta_1(z); 0) for i = 0..n-1 over the
 * degree-(m-1) field, followed by the all-zero representative.
 */
inline std::vector<BitVector> coset_reps_gp(const FieldTable& f, int m) {
    if (m < 6 || m % 2 != 0) throw std::invalid_argument("coset_reps_gp: m must be even and >= 6");
    if (f.w() != m - 1) throw std::invalid_argument("coset_reps_gp: field width must be m - 1");
    int n = int(f.order());
    Poly2 theta1 = idempotent(f, 1);
    if (theta1.eval_at_one()) throw std::runtime_error("coset_reps_gp: theta_1(1) != 0");
    std::size_t len = std::size_t(2) << (m - 1);  /* 2^m */
    std::vector<BitVector> reps;
    for (int i = 0; i < n; ++i) {
        BitVector t(len);
        t.set(std::size_t(i), true);
        t.set(std::size_t(n), true);  /* extension bit of z^i */
        Poly2 g = theta1.shifted(i).mod_xn1(n);
        for (int j = 0; j < n; ++j)
            if (g.coeff(j)) t.set(std::size_t(n) + 1 + j, true);
        /* extension bit of z^i theta_1 is theta_1(1) = 0 */
        reps.push_back(t);
    }
    reps.push_back(BitVector(len));
    return reps;
}

}  // namespace gpc

#endif
