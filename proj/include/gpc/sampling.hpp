#ifndef GPC_SAMPLING_HPP
#define GPC_SAMPLING_HPP

#include <algorithm>
#include <cstdint>
#include <random>
#include <set>
#include <stdexcept>
#include <vector>

#include "gpc/cosetcode.hpp"
#include "gpc/lincode.hpp"
#include "gpc/stabilizer.hpp"
#include "gpc/unioncode.hpp"

namespace gpc {

inline BitVector random_bitvector(std::size_t n, std::mt19937_64& rng) {
    BitVector v(n);
    for (std::size_t i = 0; i < n; ++i)
        if (rng() & 1) v.set(i, true);
    return v;
}

inline BitVector random_codeword(const LinearCode& c, std::mt19937_64& rng) {
    return c.encode(random_bitvector(c.k, rng));
}

inline BitVector random_coset_word(const CosetUnionCode& u, std::mt19937_64& rng) {
    return random_codeword(u.base, rng) ^ u.reps[rng() % u.reps.size()];
}

inline LinearCode random_linear_code(std::size_t n, std::size_t k, std::mt19937_64& rng,
                                     const std::string& name = "random") {
    if (k > n) throw std::invalid_argument("random_linear_code: k > n");
    BitMatrix rows(0, n);
    Eliminator span(n);
    while (rows.rows() < k) {
        BitVector v = random_bitvector(n, rng);
        if (span.add(v)) rows.append_row(v);
    }
    return make_linear_code(rows, name);
}

/* stabilizer code with a uniformly shuffled choice of r commuting,
   independent generators */
inline StabilizerCode random_stabilizer(std::size_t n, std::size_t r, std::mt19937_64& rng,
                                        const std::string& name = "random") {
    if (r > n) throw std::invalid_argument("random_stabilizer: rank exceeds qubit count");
    if (n > 12) throw std::invalid_argument("random_stabilizer: pool enumeration limited to 12 qubits");
    std::vector<std::uint32_t> pool;
    pool.reserve((std::size_t(1) << (2 * n)) - 1);
    for (std::uint32_t v = 1; v < (std::uint32_t(1) << (2 * n)); ++v) pool.push_back(v);
    std::shuffle(pool.begin(), pool.end(), rng);

    BitMatrix rows(0, 2 * n);
    Eliminator span(2 * n);
    std::vector<SympVector> chosen;
    for (std::uint32_t raw : pool) {
        if (rows.rows() == r) break;
        BitVector packed(2 * n);
        for (std::size_t i = 0; i < 2 * n; ++i)
            if ((raw >> i) & 1) packed.set(i, true);
        if (span.contains(packed)) continue;
        SympVector sv = SympVector::from_packed(packed);
        bool commutes = true;
        for (const SympVector& c : chosen)
            if (symp_inner(c, sv)) {
                commutes = false;
                break;
            }
        if (!commutes) continue;
        span.add(packed);
        rows.append_row(packed);
        chosen.push_back(sv);
    }
    if (rows.rows() != r) throw std::logic_error("random_stabilizer: completion failed");
    return stabilizer_from_generators(n, rows, name);
}

/*
 * Random union stabilizer code on a few qubits: a random base code plus
 * K translations in distinct normalizer cosets, identity included. The
 * union dimension is kept at least 2 so a distance is defined.
 */
inline UnionStabilizerCode random_union_code(std::mt19937_64& rng, std::size_t min_n = 3,
                                             std::size_t max_n = 5) {
    if (min_n < 2 || max_n < min_n) throw std::invalid_argument("random_union_code: bad qubit range");
    std::size_t n = min_n + rng() % (max_n - min_n + 1);
    std::size_t r = 1 + rng() % n;
    std::size_t k = n - r;

    std::vector<std::size_t> choices;
    for (std::size_t cand : {std::size_t(1), std::size_t(2), std::size_t(4)})
        if (cand <= (std::size_t(1) << r) && cand * (std::size_t(1) << k) >= 2) choices.push_back(cand);
    std::size_t K = choices[rng() % choices.size()];

    StabilizerCode base = random_stabilizer(n, r, rng);

    std::vector<std::uint32_t> pool;
    for (std::uint32_t v = 1; v < (std::uint32_t(1) << (2 * n)); ++v) pool.push_back(v);
    std::shuffle(pool.begin(), pool.end(), rng);
    std::vector<SympVector> ts = {SympVector(n)};
    std::set<BitVector> seen = {stab_syndrome(base.stab, ts[0])};
    for (std::uint32_t raw : pool) {
        if (ts.size() == K) break;
        BitVector packed(2 * n);
        for (std::size_t i = 0; i < 2 * n; ++i)
            if ((raw >> i) & 1) packed.set(i, true);
        SympVector sv = SympVector::from_packed(packed);
        if (seen.insert(stab_syndrome(base.stab, sv)).second) ts.push_back(sv);
    }
    if (ts.size() != K) throw std::logic_error("random_union_code: coset sampling failed");
    return make_union_code(std::move(base), std::move(ts), "random-union");
}

}  // namespace gpc

#endif
