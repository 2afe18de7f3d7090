#ifndef GPC_ORACLE_HPP
#define GPC_ORACLE_HPP

#include <bit>
#include <cmath>
#include <complex>
#include <cstdint>
#include <stdexcept>
#include <vector>

#include "gpc/stabilizer.hpp"
#include "gpc/symplectic.hpp"

namespace gpc {

/*
 * Dense state-vector oracle for tiny codes: builds explicit codespace
 * bases and checks error-correction conditions numerically, with no
 * shared machinery with the search-based verification path.
 */

using Amp = std::complex<double>;
using DenseState = std::vector<Amp>;

inline Amp inner(const DenseState& a, const DenseState& b) {
    Amp acc(0);
    for (std::size_t i = 0; i < a.size(); ++i) acc += std::conj(a[i]) * b[i];
    return acc;
}

inline double norm2(const DenseState& a) { return inner(a, a).real(); }

/* X^x Z^z scaled by i^(#Y), which is Hermitian and squares to identity */
struct PauliOp {
    std::uint64_t x = 0, z = 0;
    Amp phase = 1.0;
};

inline PauliOp hermitian_pauli(const SympVector& v) {
    if (v.n() > 64) throw std::invalid_argument("hermitian_pauli: too many qubits");
    PauliOp p;
    p.x = v.n() ? v.x.word(0) : 0;
    p.z = v.n() ? v.z.word(0) : 0;
    static const Amp table[4] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};
    p.phase = table[std::popcount(p.x & p.z) % 4];
    return p;
}

inline DenseState apply_pauli(const PauliOp& p, const DenseState& in) {
    DenseState out(in.size(), Amp(0));
    for (std::size_t j = 0; j < in.size(); ++j) {
        if (in[j] == Amp(0)) continue;
        double sign = (std::popcount(j & p.z) & 1) ? -1.0 : 1.0;
        out[j ^ p.x] = p.phase * sign * in[j];
    }
    return out;
}

/* in + P in, halved: one factor of the stabilizer projector */
inline DenseState project_onto(const PauliOp& p, const DenseState& in) {
    DenseState out = apply_pauli(p, in);
    for (std::size_t j = 0; j < in.size(); ++j) out[j] = 0.5 * (out[j] + in[j]);
    return out;
}

/*
 * Orthonormal basis of the code space, built by projecting computational
 * basis states. The projector trace is verified to equal 2^k, which
 * certifies that the generators cut the space exactly in half each.
 */
inline std::vector<DenseState> codespace(const StabilizerCode& s) {
    if (s.n > 6) throw std::invalid_argument("codespace: dense oracle limited to 6 qubits");
    const std::size_t dim = std::size_t(1) << s.n;
    std::vector<PauliOp> gens;
    for (std::size_t i = 0; i < s.stab.rank(); ++i) gens.push_back(hermitian_pauli(s.stab.generator(i)));
    auto stab_project = [&](DenseState v) {
        for (const PauliOp& g : gens) v = project_onto(g, v);
        return v;
    };

    double trace = 0;
    for (std::size_t j = 0; j < dim; ++j) {
        DenseState e(dim, Amp(0));
        e[j] = 1;
        trace += stab_project(e)[j].real();
    }
    if (std::abs(trace - double(std::size_t(1) << s.k)) > 1e-6)
        throw std::runtime_error("codespace: projector trace does not match 2^k");

    std::vector<PauliOp> zbar;
    for (const SympVector& l : s.logical_z) zbar.push_back(hermitian_pauli(l));
    DenseState zero;
    for (std::size_t seed = 0; seed < dim; ++seed) {
        DenseState e(dim, Amp(0));
        e[seed] = 1;
        DenseState v = stab_project(e);
        for (const PauliOp& g : zbar) v = project_onto(g, v);
        if (norm2(v) > 1e-12) {
            zero = v;
            break;
        }
    }
    if (zero.empty()) throw std::runtime_error("codespace: logical zero not found");
    /* normalize with the first nonzero amplitude real positive */
    double n2 = norm2(zero);
    Amp anchor;
    for (const Amp& a : zero)
        if (std::abs(a) > 1e-9) {
            anchor = a;
            break;
        }
    Amp scale = std::conj(anchor) / (std::abs(anchor) * std::sqrt(n2));
    for (Amp& a : zero) a *= scale;

    std::vector<DenseState> basis(std::size_t(1) << s.k);
    for (std::size_t i = 0; i < basis.size(); ++i) {
        DenseState v = zero;
        for (std::size_t bit = 0; bit < s.k; ++bit)
            if ((i >> bit) & 1) v = apply_pauli(hermitian_pauli(s.logical_x[bit]), v);
        basis[i] = std::move(v);
    }
    for (std::size_t a = 0; a < basis.size(); ++a)
        for (std::size_t b = 0; b < basis.size(); ++b)
            if (std::abs(inner(basis[a], basis[b]) - (a == b ? 1.0 : 0.0)) > 1e-9)
                throw std::runtime_error("codespace: basis failed the orthonormality check");
    return basis;
}

/*
 * Basis of a union of translated code spaces: the translations must move
 * the code space onto pairwise orthogonal subspaces, which is verified
 * through the Gram matrix.
 */
inline std::vector<DenseState> union_codespace(const StabilizerCode& s,
                                               const std::vector<SympVector>& translations) {
    std::vector<DenseState> base = codespace(s);
    if (translations.empty()) throw std::invalid_argument("union_codespace: no translations");
    if (translations.size() * base.size() > (std::size_t(1) << s.n))
        throw std::invalid_argument("union_codespace: union larger than the whole space");
    std::vector<DenseState> out;
    for (const SympVector& t : translations) {
        PauliOp op = hermitian_pauli(t);
        for (const DenseState& v : base) out.push_back(apply_pauli(op, v));
    }
    for (std::size_t a = 0; a < out.size(); ++a)
        for (std::size_t b = a; b < out.size(); ++b)
            if (std::abs(inner(out[a], out[b]) - (a == b ? 1.0 : 0.0)) > 1e-9)
                throw std::runtime_error("union_codespace: translated spaces are not orthogonal");
    return out;
}

/*
 * Exact distance from first principles: the smallest weight of a Pauli
 * error E for which <a| E |b> deviates from lambda(E) delta_ab. Every
 * Pauli of each weight is tried in turn, so the first violating weight is
 * the distance.
 */
inline int knill_laflamme_distance(const std::vector<DenseState>& basis, std::size_t n) {
    if (n > 5) throw std::invalid_argument("knill_laflamme_distance: dense oracle limited to 5 qubits");
    if (basis.size() < 2) throw std::invalid_argument("knill_laflamme_distance: need at least two basis states");
    const double tol = 1e-9;

    std::vector<std::size_t> positions;
    auto violates = [&](const PauliOp& e) {
        Amp lambda(0);
        bool have_lambda = false;
        for (std::size_t a = 0; a < basis.size(); ++a) {
            DenseState eb = apply_pauli(e, basis[a]);
            for (std::size_t b = 0; b < basis.size(); ++b) {
                Amp m = inner(basis[b], eb);  /* <b| E |a> */
                if (a == b) {
                    if (!have_lambda) {
                        lambda = m;
                        have_lambda = true;
                    } else if (std::abs(m - lambda) > tol) {
                        return true;
                    }
                } else if (std::abs(m) > tol) {
                    return true;
                }
            }
        }
        return false;
    };

    /* all Paulis of symplectic weight w on the chosen positions */
    for (std::size_t w = 1; w <= n; ++w) {
        bool hit = false;
        std::vector<std::size_t> pos(w);
        std::vector<int> sym(w);
        auto rec = [&](auto&& self, std::size_t depth, std::size_t from) -> void {
            if (hit) return;
            if (depth == w) {
                PauliOp e;
                for (std::size_t i = 0; i < w; ++i) {
                    if (sym[i] != 1) e.x |= std::uint64_t(1) << pos[i];
                    if (sym[i] != 0) e.z |= std::uint64_t(1) << pos[i];
                }
                if (violates(e)) hit = true;
                return;
            }
            for (std::size_t p = from; p < n && !hit; ++p) {
                pos[depth] = p;
                for (int sgn = 0; sgn < 3 && !hit; ++sgn) {
                    sym[depth] = sgn;
                    self(self, depth + 1, p + 1);
                }
            }
        };
        rec(rec, 0, 0);
        if (hit) return int(w);
    }
    throw std::logic_error("knill_laflamme_distance: no violating error up to full weight");
}

/*
 * Exhaustive minimum symplectic weight over shift + rowspace(gens); the
 * Gray-code walk touches every element once.
 */
inline std::size_t brute_min_symp_weight(const BitMatrix& gens, const BitVector& shift,
                                         bool exclude_zero) {
    if (gens.rows() > 24) throw std::invalid_argument("brute_min_symp_weight: too many generators");
    std::size_t best = SIZE_MAX;
    BitVector word = shift;
    auto consider = [&](const BitVector& v) {
        if (exclude_zero && v.is_zero()) return;
        std::size_t w = symp_weight(SympVector::from_packed(v));
        if (w < best) best = w;
    };
    consider(word);
    for (std::uint64_t i = 1; i < (std::uint64_t(1) << gens.rows()); ++i) {
        word ^= gens.row(std::size_t(std::countr_zero(i)));
        consider(word);
    }
    return best;
}

}  // namespace gpc

#endif
