#ifndef GPC_SYMPLECTIC_HPP
#define GPC_SYMPLECTIC_HPP

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "gpc/bits.hpp"

namespace gpc {

/*
 * Binary symplectic vector (g_x | g_z) of length 2n, encoding the Pauli
 * string sigma_x^g_x sigma_z^g_z up to phase: per position, (0,0) = I,
 * (1,0) = X, (1,1) = Y, (0,1) = Z.
 */
struct SympVector {
    BitVector x;
    BitVector z;

    SympVector() = default;
    explicit SympVector(std::size_t n) : x(n), z(n) {}
    SympVector(BitVector gx, BitVector gz) : x(std::move(gx)), z(std::move(gz)) {
        if (x.size() != z.size()) throw std::invalid_argument("SympVector: half length mismatch");
    }

    std::size_t n() const { return x.size(); }

    bool operator==(const SympVector& o) const { return x == o.x && z == o.z; }
    bool operator!=(const SympVector& o) const { return !(*this == o); }

    SympVector& operator^=(const SympVector& o) {
        x ^= o.x;
        z ^= o.z;
        return *this;
    }
    friend SympVector operator^(SympVector a, const SympVector& b) { return a ^= b; }

    bool is_zero() const { return x.is_zero() && z.is_zero(); }

    BitVector packed() const { return concat(x, z); }

    static SympVector from_packed(const BitVector& v) {
        if (v.size() % 2) throw std::invalid_argument("SympVector::from_packed: odd length");
        std::size_t n = v.size() / 2;
        return SympVector(v.slice(0, n), v.slice(n, n));
    }
};

/* symplectic inner product; 0 means the Pauli operators commute */
inline bool symp_inner(const SympVector& u, const SympVector& v) {
    if (u.n() != v.n()) throw std::invalid_argument("symp_inner: length mismatch");
    return u.x.dot(v.z) ^ u.z.dot(v.x);
}

/* number of positions acted on non-trivially */
inline std::size_t symp_weight(const SympVector& v) { return (v.x | v.z).weight(); }

/* per-position Pauli symbols, e.g. "XZZXI" */
inline std::string gf4_symbols(const SympVector& v) {
    std::string s(v.n(), 'I');
    for (std::size_t i = 0; i < v.n(); ++i) {
        bool a = v.x.get(i), b = v.z.get(i);
        s[i] = a ? (b ? 'Y' : 'X') : (b ? 'Z' : 'I');
    }
    return s;
}

inline SympVector parse_paulis(const std::string& s) {
    SympVector v(s.size());
    for (std::size_t i = 0; i < s.size(); ++i) {
        switch (s[i]) {
            case 'I': break;
            case 'X': v.x.set(i, true); break;
            case 'Y': v.x.set(i, true); v.z.set(i, true); break;
            case 'Z': v.z.set(i, true); break;
            default: throw std::invalid_argument("parse_paulis: symbols must be I, X, Y or Z");
        }
    }
    return v;
}

/* (a|b) -> (b|a); Euclidean orthogonality to swapped vectors is symplectic orthogonality */
inline BitVector swap_halves(const BitVector& v) {
    if (v.size() % 2) throw std::invalid_argument("swap_halves: odd length");
    std::size_t n = v.size() / 2;
    return concat(v.slice(n, n), v.slice(0, n));
}

/* additive (GF(2)-linear) code of symplectic vectors, generators independent */
struct AdditiveSympCode {
    std::size_t n = 0;       /* number of positions; vectors live in F_2^(2n) */
    BitMatrix gens;          /* rank x 2n packed rows */
    BitMatrix euclid_check;  /* membership test: v in code iff euclid_check * v = 0 */
    std::string name;

    std::size_t rank() const { return gens.rows(); }

    SympVector generator(std::size_t i) const { return SympVector::from_packed(gens.row(i)); }

    bool in_code(const BitVector& packed) const { return euclid_check.mul_vec(packed).is_zero(); }
    bool in_code(const SympVector& v) const { return in_code(v.packed()); }
};

inline AdditiveSympCode make_additive_code(std::size_t n, const BitMatrix& rows,
                                           const std::string& name = "", bool allow_reduce = false) {
    if (rows.cols() != 2 * n) throw std::invalid_argument("make_additive_code: rows must have 2n columns");
    BitMatrix g = rows;
    std::size_t r = g.rank();
    if (r != g.rows()) {
        if (!allow_reduce) throw std::invalid_argument("make_additive_code: generators are dependent");
        BitMatrix red = rows;
        red.rref();
        BitMatrix keep(0, rows.cols());
        for (std::size_t i = 0; i < r; ++i) keep.append_row(red.row(i));
        g = keep;
    }
    AdditiveSympCode c;
    c.n = n;
    c.gens = g;
    c.euclid_check = g.kernel();
    c.name = name;
    return c;
}

/*
 * Symplectic dual: all vectors commuting with every generator. Computed as
 * the kernel of the generator matrix with halves swapped.
 */
inline AdditiveSympCode symplectic_dual(const AdditiveSympCode& c, const std::string& name = "") {
    BitMatrix swapped(0, 2 * c.n);
    for (std::size_t i = 0; i < c.rank(); ++i) swapped.append_row(swap_halves(c.gens.row(i)));
    BitMatrix dual_gens = swapped.kernel();
    return make_additive_code(c.n, dual_gens, name.empty() ? c.name + "-sdual" : name);
}

/* true iff all generators pairwise commute */
inline bool is_self_orthogonal(const AdditiveSympCode& c) {
    for (std::size_t i = 0; i < c.rank(); ++i)
        for (std::size_t j = i + 1; j < c.rank(); ++j)
            if (symp_inner(c.generator(i), c.generator(j))) return false;
    return true;
}

}  // namespace gpc

#endif
