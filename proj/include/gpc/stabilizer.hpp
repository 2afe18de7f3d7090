#ifndef GPC_STABILIZER_HPP
#define GPC_STABILIZER_HPP

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

#include "gpc/bits.hpp"
#include "gpc/gf2poly.hpp"
#include "gpc/lincode.hpp"
#include "gpc/symplectic.hpp"

namespace gpc {

/*
 * Stabilizer code on n qubits encoding k. The normalizer is the symplectic
 * dual of the stabilizer, and the logical pairs obey the hyperbolic
 * commutation pattern. Fields are public so tests can corrupt a code and
 * watch audit() object.
 */
struct StabilizerCode {
    std::size_t n = 0;
    std::size_t k = 0;
    AdditiveSympCode stab;
    AdditiveSympCode norm;
    std::vector<SympVector> logical_x, logical_z;
    int claimed_d = 0;  /* 0 when no distance is claimed */
    std::string name;
};

/*
 * Symplectic Gram-Schmidt on the normalizer modulo the stabilizer: picks
 * normalizer generators independent of the stabilizer, pairs them into
 * hyperbolic pairs, and clears all cross inner products.
 */
inline void extract_logicals(StabilizerCode& s) {
    s.logical_x.clear();
    s.logical_z.clear();
    Eliminator elim(2 * s.n);
    for (std::size_t i = 0; i < s.stab.rank(); ++i) elim.add(s.stab.gens.row(i));
    std::vector<SympVector> cand;
    for (std::size_t i = 0; i < s.norm.rank(); ++i)
        if (elim.add(s.norm.gens.row(i))) cand.push_back(s.norm.generator(i));
    if (cand.size() != 2 * s.k) throw std::logic_error("extract_logicals: quotient dimension mismatch");
    while (!cand.empty()) {
        SympVector u = cand.front();
        cand.erase(cand.begin());
        std::size_t j = cand.size();
        for (std::size_t i = 0; i < cand.size(); ++i)
            if (symp_inner(u, cand[i])) {
                j = i;
                break;
            }
        if (j == cand.size()) throw std::logic_error("extract_logicals: degenerate quotient form");
        SympVector v = cand[j];
        cand.erase(cand.begin() + j);
        for (SympVector& q : cand) {
            if (symp_inner(q, v)) q ^= u;
            if (symp_inner(q, u)) q ^= v;
        }
        s.logical_x.push_back(u);
        s.logical_z.push_back(v);
    }
}

/* stabilizer code from explicit commuting generators; normalizer derived */
inline StabilizerCode stabilizer_from_generators(std::size_t n, const BitMatrix& rows,
                                                 const std::string& name = "", int claimed_d = 0) {
    StabilizerCode s;
    s.stab = make_additive_code(n, rows, name + "-stab");
    if (!is_self_orthogonal(s.stab))
        throw std::invalid_argument("stabilizer_from_generators: generators do not commute");
    s.n = n;
    s.k = n - s.stab.rank();
    s.norm = symplectic_dual(s.stab, name + "-norm");
    s.claimed_d = claimed_d;
    s.name = name;
    extract_logicals(s);
    return s;
}

/* CSS code [[n, 2k - n]] from a classical [n, k] code containing its dual */
inline StabilizerCode css(const LinearCode& c, const std::string& name = "") {
    LinearCode d = dual(c);
    if (!contains(c, d)) throw std::invalid_argument("css: code must contain its dual");
    StabilizerCode s;
    s.n = c.n;
    s.k = 2 * c.k - c.n;
    s.name = name.empty() ? "css-" + c.name : name;
    BitVector zero(c.n);
    BitMatrix srows(0, 2 * c.n), nrows(0, 2 * c.n);
    for (std::size_t i = 0; i < d.gen.rows(); ++i) srows.append_row(concat(d.gen.row(i), zero));
    for (std::size_t i = 0; i < d.gen.rows(); ++i) srows.append_row(concat(zero, d.gen.row(i)));
    for (std::size_t i = 0; i < c.gen.rows(); ++i) nrows.append_row(concat(c.gen.row(i), zero));
    for (std::size_t i = 0; i < c.gen.rows(); ++i) nrows.append_row(concat(zero, c.gen.row(i)));
    s.stab = make_additive_code(c.n, srows, s.name + "-stab");
    s.norm = make_additive_code(c.n, nrows, s.name + "-norm");
    extract_logicals(s);
    return s;
}

/*
 * Invertible dim x dim matrix without nonzero fixed points: the companion
 * matrix of an irreducible polynomial p with p(0) = p(1) = 1, so that both
 * A and A + I have full rank. Both ranks are verified.
 */
inline BitMatrix fixed_point_free(std::size_t dim) {
    if (dim < 2) throw std::invalid_argument("fixed_point_free: dim must be >= 2");
    Poly2 p = default_field_modulus(int(dim));
    BitMatrix a(dim, dim);
    for (std::size_t i = 0; i + 1 < dim; ++i) a.set(i, i + 1, true);
    for (std::size_t j = 0; j < dim; ++j) a.set(dim - 1, j, p.coeff(int(j)));
    BitMatrix api = a;
    for (std::size_t i = 0; i < dim; ++i) api.set(i, i, !api.get(i, i));
    if (a.rank() != dim || api.rank() != dim)
        throw std::logic_error("fixed_point_free: companion matrix check failed");
    return a;
}

/* rows extending sub to sup, so that sup = sub (+) rowspace(result) */
inline BitMatrix complement_basis(const LinearCode& sub, const LinearCode& sup) {
    if (sub.n != sup.n || !contains(sup, sub))
        throw std::invalid_argument("complement_basis: codes not nested");
    Eliminator elim(sub.n);
    for (std::size_t i = 0; i < sub.gen.rows(); ++i) elim.add(sub.gen.row(i));
    BitMatrix d(0, sub.n);
    for (std::size_t i = 0; i < sup.gen.rows(); ++i)
        if (elim.add(sup.gen.row(i))) d.append_row(sup.gen.row(i));
    return d;
}

/*
 * Enlargement of a CSS code: from a dual-containing [n, k] code C and a
 * larger [n, k'] code C' with k' >= k + 2, build an [[n, k + k' - n]]
 * stabilizer code. The normalizer is spanned by (G | 0), (0 | G) and
 * (D | A D), with D a complement basis of C in C' and A fixed-point free;
 * the stabilizer is the symplectic dual of the normalizer.
 */
inline StabilizerCode steane_enlarge(const LinearCode& c, const LinearCode& cp, const BitMatrix& d,
                                     const BitMatrix& a, const std::string& name = "") {
    if (!contains(c, dual(c)))
        throw std::invalid_argument("steane_enlarge: smaller code must contain its dual");
    if (!contains(cp, c)) throw std::invalid_argument("steane_enlarge: codes not nested");
    if (cp.k < c.k + 2) throw std::invalid_argument("steane_enlarge: enlargement needs k' >= k + 2");
    std::size_t n = c.n, delta = cp.k - c.k;
    if (d.rows() != delta || d.cols() != n || a.rows() != delta || a.cols() != delta)
        throw std::invalid_argument("steane_enlarge: complement or mixing matrix has wrong shape");
    BitMatrix ad = a.mul(d);
    BitVector zero(n);
    BitMatrix nrows(0, 2 * n);
    for (std::size_t i = 0; i < c.gen.rows(); ++i) nrows.append_row(concat(c.gen.row(i), zero));
    for (std::size_t i = 0; i < c.gen.rows(); ++i) nrows.append_row(concat(zero, c.gen.row(i)));
    for (std::size_t i = 0; i < delta; ++i) nrows.append_row(concat(d.row(i), ad.row(i)));
    StabilizerCode s;
    s.n = n;
    s.k = c.k + cp.k - n;
    s.name = name.empty() ? "enlarged-" + c.name : name;
    s.norm = make_additive_code(n, nrows, s.name + "-norm");
    s.stab = symplectic_dual(s.norm, s.name + "-stab");
    extract_logicals(s);
    return s;
}

inline StabilizerCode steane_enlarge(const LinearCode& c, const LinearCode& cp,
                                     const std::string& name = "") {
    if (!contains(cp, c)) throw std::invalid_argument("steane_enlarge: codes not nested");
    if (cp.k < c.k + 2) throw std::invalid_argument("steane_enlarge: enlargement needs k' >= k + 2");
    BitMatrix d = complement_basis(c, cp);
    return steane_enlarge(c, cp, d, fixed_point_free(cp.k - c.k), name);
}

struct AuditCheck {
    std::string name;
    bool pass;
    std::string detail;
};

/* structural consistency checks; every failure is reported, none throws */
inline std::vector<AuditCheck> audit(const StabilizerCode& s) {
    std::vector<AuditCheck> out;
    auto push = [&](const std::string& name, bool pass, const std::string& detail) {
        out.push_back({name, pass, detail});
    };

    bool ranks = s.stab.rank() + s.k == s.n && s.norm.rank() == s.n + s.k;
    push("ranks", ranks,
         "stab " + std::to_string(s.stab.rank()) + ", norm " + std::to_string(s.norm.rank()) +
             ", n " + std::to_string(s.n) + ", k " + std::to_string(s.k));

    push("stabilizer-commutes", is_self_orthogonal(s.stab), "pairwise generator inner products");

    bool sub = true;
    for (std::size_t i = 0; i < s.stab.rank(); ++i) sub &= s.norm.in_code(s.stab.gens.row(i));
    push("stabilizer-in-normalizer", sub, "every stabilizer generator lies in the normalizer");

    bool dualrel = s.norm.rank() == 2 * s.n - s.stab.rank();
    for (std::size_t i = 0; i < s.norm.rank() && dualrel; ++i)
        for (std::size_t j = 0; j < s.stab.rank(); ++j)
            dualrel &= !symp_inner(s.norm.generator(i), s.stab.generator(j));
    push("normalizer-is-dual", dualrel, "normalizer = symplectic dual of the stabilizer");

    bool count = s.logical_x.size() == s.k && s.logical_z.size() == s.k;
    push("logical-count", count,
         std::to_string(s.logical_x.size()) + " + " + std::to_string(s.logical_z.size()) +
             " logicals for k " + std::to_string(s.k));

    bool pairs = count;
    for (std::size_t i = 0; i < s.logical_x.size() && pairs; ++i)
        for (std::size_t j = 0; j < s.logical_x.size(); ++j) {
            pairs &= symp_inner(s.logical_x[i], s.logical_z[j]) == (i == j);
            pairs &= !symp_inner(s.logical_x[i], s.logical_x[j]);
            pairs &= !symp_inner(s.logical_z[i], s.logical_z[j]);
        }
    push("logical-commutation", pairs, "hyperbolic pairing of logical operators");

    bool central = true;
    for (std::size_t j = 0; j < s.stab.rank(); ++j) {
        SympVector g = s.stab.generator(j);
        for (const SympVector& l : s.logical_x) central &= !symp_inner(l, g);
        for (const SympVector& l : s.logical_z) central &= !symp_inner(l, g);
    }
    push("logicals-commute-with-stabilizer", central, "logicals centralize the stabilizer");

    bool placed = true;
    for (const SympVector& l : s.logical_x)
        placed &= s.norm.in_code(l) && !s.stab.in_code(l.packed());
    for (const SympVector& l : s.logical_z)
        placed &= s.norm.in_code(l) && !s.stab.in_code(l.packed());
    push("logicals-in-normalizer", placed, "logicals lie in the normalizer, outside the stabilizer");

    return out;
}

inline bool audit_ok(const StabilizerCode& s) {
    for (const AuditCheck& c : audit(s))
        if (!c.pass) return false;
    return true;
}

}  // namespace gpc

#endif
