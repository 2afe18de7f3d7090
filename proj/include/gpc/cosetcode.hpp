#ifndef GPC_COSETCODE_HPP
#define GPC_COSETCODE_HPP

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

#include "gpc/bits.hpp"
#include "gpc/gf2poly.hpp"
#include "gpc/lincode.hpp"

namespace gpc {

/* parameters shared by the Goethals/Preparata pair at a given even m */
struct GPParams {
    int m;      /* code length is 2^m */
    int n;      /* 2^(m-1) - 1, length of the underlying cyclic codes */
    int r;      /* 1 + 2^(m/2-2) */
    int s;      /* 1 + 2^(m/2-1) */
    int sigma;  /* 2^(m/2-1), the Preparata power parameter */
    int K;      /* 2^(m-1), number of cosets */
};

inline GPParams gp_params(int m) {
    if (m % 2 != 0 || m < 6)
        throw std::invalid_argument(
            "gp_params: m must be even and >= 6 (at m = 4 the exponent r = 2 collapses mu_r into mu_1)");
    GPParams p;
    p.m = m;
    p.n = (1 << (m - 1)) - 1;
    p.sigma = 1 << (m / 2 - 1);
    p.r = 1 + (1 << (m / 2 - 2));
    p.s = 1 + p.sigma;
    p.K = 1 << (m - 1);
    if (!gp_gcd_identity_holds(m)) throw std::runtime_error("gp_params: gcd identity failed");
    if (std::gcd(p.sigma + 1, p.n) != 1 || std::gcd(p.sigma - 1, p.n) != 1)
        throw std::runtime_error("gp_params: gcd(sigma +- 1, n) != 1");
    return p;
}

/* union of cosets of a linear base code, one representative per coset */
struct CosetUnionCode {
    LinearCode base;
    std::vector<BitVector> reps;  /* pairwise distinct modulo base; zero at zero_rep_index */
    std::size_t zero_rep_index = 0;
    std::string label;

    std::size_t coset_count() const { return reps.size(); }

    /* log2 of the total codeword count */
    std::size_t log2_size() const {
        std::size_t c = coset_count(), bits = 0;
        while (c > 1) {
            if (c & 1) throw std::logic_error("CosetUnionCode: coset count not a power of two");
            c >>= 1;
            ++bits;
        }
        return base.k + bits;
    }

    std::optional<std::size_t> coset_index_of(const BitVector& v) const {
        auto it = synd_to_rep_.find(packed_syndrome(base.syndrome(v)));
        if (it == synd_to_rep_.end()) return std::nullopt;
        return it->second;
    }

    bool contains_vector(const BitVector& v) const { return coset_index_of(v).has_value(); }

    static std::uint64_t packed_syndrome(const BitVector& s) {
        if (s.size() > 64) throw std::invalid_argument("CosetUnionCode: syndrome wider than 64 bits");
        return s.size() == 0 ? 0 : s.word(0);
    }

    std::unordered_map<std::uint64_t, std::size_t> synd_to_rep_;
};

inline CosetUnionCode make_coset_union(LinearCode base, std::vector<BitVector> reps,
                                       const std::string& label = "") {
    CosetUnionCode u;
    u.base = std::move(base);
    u.reps = std::move(reps);
    u.label = label;
    if (u.reps.empty()) throw std::invalid_argument("make_coset_union: no representatives");
    bool saw_zero = false;
    for (std::size_t i = 0; i < u.reps.size(); ++i) {
        const BitVector& t = u.reps[i];
        if (t.size() != u.base.n) throw std::invalid_argument("make_coset_union: representative length mismatch");
        if (t.is_zero()) {
            if (saw_zero) throw std::invalid_argument("make_coset_union: duplicate zero representative");
            saw_zero = true;
            u.zero_rep_index = i;
        }
        std::uint64_t key = CosetUnionCode::packed_syndrome(u.base.syndrome(t));
        if (!u.synd_to_rep_.emplace(key, i).second)
            throw std::invalid_argument("make_coset_union: representatives not in distinct cosets");
    }
    if (!saw_zero) throw std::invalid_argument("make_coset_union: zero representative missing");
    return u;
}

/* the classical ingredients shared by both code families at a given m */
struct GpClassicalPair {
    GPParams params;
    FieldTable field;
    Poly2 mu1, mu_r, mu_s, theta1;
    LinearCode cg;  /* [2^m, 2^m-4m+2] */
    LinearCode cp;  /* [2^m, 2^m-3m+1] */
    std::vector<BitVector> reps;
};

inline GpClassicalPair gp_classical_pair(int m) {
    GPParams p = gp_params(m);
    FieldTable f(m - 1);
    Poly2 mu1 = minimal_polynomial(f, 1);
    Poly2 mu_r = minimal_polynomial(f, p.r);
    Poly2 mu_s = minimal_polynomial(f, p.s);
    LinearCode c1 = cyclic_code(p.n, mu1, "c1");
    LinearCode c2 = cyclic_code(p.n, mu1 * mu_r * mu_s, "c2");
    LinearCode c3 = cyclic_code(p.n, mu1 * mu_s, "c3");
    GpClassicalPair out{p,
                        f,
                        mu1,
                        mu_r,
                        mu_s,
                        idempotent(f, 1),
                        u_u_plus_v(extend_parity(c1), extend_parity(c2), "goethals-base"),
                        u_u_plus_v(extend_parity(c1), extend_parity(c3), "preparata-base"),
                        coset_reps_gp(f, m)};
    std::size_t want_g = (std::size_t(1) << m) - 4 * m + 2;
    std::size_t want_p = (std::size_t(1) << m) - 3 * m + 1;
    if (out.cg.k != want_g) throw std::runtime_error("gp_classical_pair: Goethals base dimension mismatch");
    if (out.cp.k != want_p) throw std::runtime_error("gp_classical_pair: Preparata base dimension mismatch");
    if (!contains(out.cp, out.cg)) throw std::runtime_error("gp_classical_pair: base containment failed");
    return out;
}

/* Goethals code of length 2^m as a union of 2^(m-1) cosets */
inline CosetUnionCode goethals(int m) {
    GpClassicalPair p = gp_classical_pair(m);
    return make_coset_union(p.cg, p.reps, "goethals");
}

/* extended Preparata code of length 2^m as a union of 2^(m-1) cosets */
inline CosetUnionCode preparata(int m) {
    GpClassicalPair p = gp_classical_pair(m);
    return make_coset_union(p.cp, p.reps, "preparata");
}

/*
 * Subset pair (X, Y) over GF(2^(m-1)): the codeword is the juxtaposition
 * of the characteristic vectors of X and Y over the points
 * (alpha^0, ..., alpha^(n-1), 0).
 */
struct SetPair {
    std::vector<FieldTable::Elem> x;
    std::vector<FieldTable::Elem> y;
};

inline SetPair vector_to_setpair(const FieldTable& f, const BitVector& v) {
    std::size_t n = f.order();
    if (v.size() != 2 * (n + 1)) throw std::invalid_argument("vector_to_setpair: length must be 2^m");
    SetPair p;
    for (std::size_t i = 0; i < n; ++i) {
        if (v.get(i)) p.x.push_back(f.alpha_pow(std::int64_t(i)));
        if (v.get(n + 1 + i)) p.y.push_back(f.alpha_pow(std::int64_t(i)));
    }
    if (v.get(n)) p.x.push_back(0);
    if (v.get(2 * n + 1)) p.y.push_back(0);
    return p;
}

inline BitVector setpair_to_vector(const FieldTable& f, const SetPair& p) {
    std::size_t n = f.order();
    BitVector v(2 * (n + 1));
    auto place = [&](const std::vector<FieldTable::Elem>& s, std::size_t base, std::size_t zero_pos) {
        for (FieldTable::Elem e : s) {
            std::size_t pos = e == 0 ? zero_pos : base + f.log(e);
            if (v.get(pos)) throw std::invalid_argument("setpair_to_vector: repeated element");
            v.set(pos, true);
        }
    };
    place(p.x, 0, n);
    place(p.y, n + 1, 2 * n + 1);
    return v;
}

inline FieldTable::Elem power_sum(const FieldTable& f, const std::vector<FieldTable::Elem>& s,
                                  std::int64_t e) {
    FieldTable::Elem acc = 0;
    for (FieldTable::Elem v : s) acc ^= f.pow(v, e);
    return acc;
}

/*
 * Subset-pair membership conditions for the Goethals code: even sizes,
 * matching element sums, and the two power-sum identities at exponents
 * r and s.
 */
inline bool goethals_conditions(const FieldTable& f, const SetPair& p, int r, int s) {
    if (p.x.size() % 2 || p.y.size() % 2) return false;
    FieldTable::Elem sx = power_sum(f, p.x, 1);
    if (sx != power_sum(f, p.y, 1)) return false;
    for (int e : {r, s})
        if ((power_sum(f, p.x, e) ^ f.pow(sx, e)) != power_sum(f, p.y, e)) return false;
    return true;
}

/*
 * Subset-pair membership conditions for the Preparata code with power
 * parameter sigma (a power of two with gcd(sigma +- 1, n) = 1).
 */
inline bool preparata_conditions(const FieldTable& f, const SetPair& p, int sigma) {
    if (sigma < 2 || (sigma & (sigma - 1)) != 0)
        throw std::invalid_argument("preparata_conditions: sigma must be a power of two >= 2");
    std::int64_t n = f.order();
    if (std::gcd<std::int64_t>(sigma + 1, n) != 1 || std::gcd<std::int64_t>(sigma - 1, n) != 1)
        throw std::invalid_argument("preparata_conditions: gcd(sigma +- 1, n) != 1");
    if (p.x.size() % 2 || p.y.size() % 2) return false;
    FieldTable::Elem sx = power_sum(f, p.x, 1);
    if (sx != power_sum(f, p.y, 1)) return false;
    return (power_sum(f, p.x, sigma + 1) ^ f.pow(sx, sigma + 1)) == power_sum(f, p.y, sigma + 1);
}

}  // namespace gpc

#endif
