#ifndef GPC_UNIONCODE_HPP
#define GPC_UNIONCODE_HPP

#include <bit>
#include <chrono>
#include <cmath>
#include <cstdint>
#include <map>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "gpc/cosetcode.hpp"
#include "gpc/distsearch.hpp"
#include "gpc/stabilizer.hpp"
#include "gpc/symplectic.hpp"

namespace gpc {

/*
 * Union of translated copies of a stabilizer code: the code space is the
 * direct sum of t applied to the base code space over all translations t.
 * Translations sit in pairwise distinct normalizer cosets, with the
 * identity first, so the dimension is K * 2^k.
 */
struct UnionStabilizerCode {
    StabilizerCode base;
    std::vector<SympVector> translations;
    std::string name;

    std::size_t K() const { return translations.size(); }
    double log2_dim() const { return double(base.k) + std::log2(double(translations.size())); }
};

/* commutation pattern of t against the stabilizer generators; equal
   syndromes mean the same normalizer coset */
inline BitVector stab_syndrome(const AdditiveSympCode& stab, const SympVector& t) {
    BitVector syn(stab.rank());
    for (std::size_t i = 0; i < stab.rank(); ++i)
        if (symp_inner(stab.generator(i), t)) syn.set(i, true);
    return syn;
}

inline UnionStabilizerCode make_union_code(StabilizerCode base, std::vector<SympVector> translations,
                                           const std::string& name = "") {
    if (translations.empty()) throw std::invalid_argument("make_union_code: no translations");
    std::size_t zero_at = translations.size();
    for (std::size_t i = 0; i < translations.size(); ++i) {
        if (translations[i].n() != base.n)
            throw std::invalid_argument("make_union_code: translation length mismatch");
        if (translations[i].is_zero()) {
            if (zero_at != translations.size())
                throw std::invalid_argument("make_union_code: duplicate identity translation");
            zero_at = i;
        }
    }
    if (zero_at == translations.size())
        throw std::invalid_argument("make_union_code: identity translation missing");
    if (zero_at != 0) std::swap(translations[0], translations[zero_at]);

    std::set<BitVector> seen;
    for (const SympVector& t : translations)
        if (!seen.insert(stab_syndrome(base.stab, t)).second)
            throw std::invalid_argument("make_union_code: translations share a normalizer coset");

    UnionStabilizerCode u;
    u.name = name.empty() ? "union-" + base.name : name;
    u.base = std::move(base);
    u.translations = std::move(translations);
    return u;
}

/*
 * Basis of the subgroup of the stabilizer commuting with every
 * translation, as packed (x|z) rows. Errors inside it act identically on
 * the whole union space, so they are excluded from the distance.
 */
inline BitMatrix tilde_c0(const AdditiveSympCode& stab, const std::vector<SympVector>& translations) {
    std::size_t r = stab.rank();
    BitMatrix b(translations.size(), r);
    for (std::size_t j = 0; j < translations.size(); ++j)
        for (std::size_t i = 0; i < r; ++i)
            if (symp_inner(stab.generator(i), translations[j])) b.set(j, i, true);
    BitMatrix coeffs = b.kernel();
    BitMatrix gens(0, 2 * stab.n);
    for (std::size_t i = 0; i < r; ++i) gens.append_row(stab.generator(i).packed());
    return coeffs.mul(gens);
}

/* least symplectic weight moving copy j onto copy i: the lightest vector
   in the normalizer coset shifted by the translation difference */
inline SearchOutcome coset_distance(const UnionStabilizerCode& u, std::size_t i, std::size_t j,
                                    std::size_t radius, unsigned budget_log2 = 64) {
    if (i >= u.K() || j >= u.K()) throw std::out_of_range("coset_distance: translation index");
    SympVector shift = u.translations[i] ^ u.translations[j];
    return symp_min_weight(u.base.norm, shift, radius, budget_log2, true);
}

struct UnionDistanceResult {
    std::size_t distance = 0;
    BitVector witness;              /* packed (x|z) achieving it */
    std::size_t difference_floor = 0; /* least nonzero weight over all differences */
    std::size_t tilde_dim = 0;
};

/*
 * Exact distance by full enumeration: the least symplectic weight over
 * all differences of union-normalizer codewords, excluding the subgroup
 * that acts identically. Feasible while the normalizer rank stays small.
 */
inline UnionDistanceResult distance_exact_small(const UnionStabilizerCode& u,
                                                unsigned budget_log2 = 26) {
    const std::size_t rho = u.base.norm.rank();
    if (rho > 24) throw std::invalid_argument("distance_exact_small: normalizer too large");
    if (u.K() == 1 && u.base.k == 0)
        throw std::invalid_argument("distance_exact_small: one-dimensional code has no distance");

    std::map<BitVector, SympVector> cosets;
    for (const SympVector& a : u.translations)
        for (const SympVector& b : u.translations) {
            SympVector diff = a ^ b;
            cosets.emplace(stab_syndrome(u.base.stab, diff), diff);
        }
    ensure_budget(double(cosets.size()) * std::pow(2.0, double(rho)), budget_log2);

    BitMatrix tilde = tilde_c0(u.base.stab, u.translations);
    Eliminator excluded(2 * u.base.n);
    for (std::size_t i = 0; i < tilde.rows(); ++i) excluded.add(tilde.row(i));

    UnionDistanceResult out;
    out.tilde_dim = tilde.rows();
    std::size_t best = SIZE_MAX, floor = SIZE_MAX;
    for (const auto& [syn, diff] : cosets) {
        const bool can_hit_excluded = syn.is_zero(); /* only the normalizer itself meets the subgroup */
        SympVector v = diff;
        std::uint64_t total = std::uint64_t(1) << rho;
        for (std::uint64_t step = 0;; ++step) {
            if (!v.is_zero()) {
                std::size_t w = symp_weight(v);
                if (w < floor) floor = w;
                if (w < best && !(can_hit_excluded && excluded.contains(v.packed()))) {
                    best = w;
                    out.witness = v.packed();
                }
            }
            if (step + 1 == total) break;
            v ^= u.base.norm.generator(std::size_t(std::countr_zero(step + 1)));
        }
    }
    if (best == SIZE_MAX)
        throw std::logic_error("distance_exact_small: every difference acts identically");
    out.distance = best;
    out.difference_floor = floor;
    return out;
}

/* all (t_a | t_b) pairs over the shared coset representatives, identity
   pair first */
inline std::vector<SympVector> gp_translations(const std::vector<BitVector>& reps) {
    std::size_t zero_at = reps.size();
    for (std::size_t i = 0; i < reps.size(); ++i)
        if (reps[i].is_zero()) zero_at = i;
    if (zero_at == reps.size()) throw std::invalid_argument("gp_translations: zero representative missing");
    std::vector<BitVector> ordered;
    ordered.push_back(reps[zero_at]);
    for (std::size_t i = 0; i < reps.size(); ++i)
        if (i != zero_at) ordered.push_back(reps[i]);
    std::vector<SympVector> out;
    out.reserve(ordered.size() * ordered.size());
    for (const BitVector& a : ordered)
        for (const BitVector& b : ordered) out.emplace_back(a, b);
    return out;
}

struct GpQuantumCode {
    GpClassicalPair classical;
    BitMatrix d_complement; /* rows extending the smaller base to the larger */
    BitMatrix a_map;        /* fixed-point free mix applied to the z-side complement */
    UnionStabilizerCode code;
};

/*
 * The quantum Goethals-Preparata code of length 2^m: enlarge the CSS code
 * of the Goethals base by the Preparata base, then adjoin all pairs of
 * classical coset representatives as translations. The result is a
 * ((2^m, 2^(2^m-5m+1), 8)) code.
 */
inline GpQuantumCode build_gp_code(int m) {
    GpClassicalPair pair = gp_classical_pair(m);
    BitMatrix d = complement_basis(pair.cg, pair.cp);
    BitMatrix a = fixed_point_free(d.rows());
    StabilizerCode base = steane_enlarge(pair.cg, pair.cp, d, a, "gp-base-m" + std::to_string(m));
    base.claimed_d = 8;
    UnionStabilizerCode code =
        make_union_code(std::move(base), gp_translations(pair.reps), "gp-m" + std::to_string(m));

    std::size_t n = std::size_t(1) << m;
    std::size_t want_k = n - 7 * std::size_t(m) + 3;
    std::size_t want_K = (std::size_t(1) << (m - 1)) * (std::size_t(1) << (m - 1));
    if (code.base.n != n || code.base.k != want_k || code.K() != want_K)
        throw std::logic_error("build_gp_code: parameter mismatch");
    return GpQuantumCode{std::move(pair), std::move(d), std::move(a), std::move(code)};
}

/* inputs of the distance certification, overridable piece by piece */
struct GpVerifyInputs {
    GpClassicalPair pair;
    LinearCode cg, cp;
    BitMatrix d_complement;
    BitMatrix a_map;
};

inline GpVerifyInputs gp_verify_inputs(int m) {
    GpClassicalPair pair = gp_classical_pair(m);
    LinearCode cg = pair.cg, cp = pair.cp;
    BitMatrix d = complement_basis(cg, cp);
    BitMatrix a = fixed_point_free(d.rows());
    return GpVerifyInputs{std::move(pair), std::move(cg), std::move(cp), std::move(d), std::move(a)};
}

struct VerifyCheck {
    std::string name;
    bool pass = false;
    std::string detail;
    double seconds = 0;
};

struct GpVerifyReport {
    int m = 0;
    std::vector<VerifyCheck> checks;
    bool certified = false;
    int distance = 0;
};

struct GpVerifyOptions {
    std::size_t radius_g = 7;     /* weights ruled out in the x/z halves, base case */
    std::size_t radius_p = 5;     /* weights ruled out in the x/z halves, mixed case */
    std::size_t radius_span = 3;  /* weights ruled out for the xor of the halves */
    unsigned workers = 0;
    unsigned budget_log2 = 40;
};

/*
 * Distance certification of the quantum Goethals-Preparata code. Every
 * difference of union-normalizer codewords is (x | z) with
 *   x = c1 + v + dx,  z = c2 + w + dz,
 * where c1, c2 lie in the smaller base code, (v, w) = (lambda D, lambda A D)
 * is the enlargement pair, and dx, dz are differences of coset
 * representatives. Its symplectic weight is
 *   (wgt(x) + wgt(z) + wgt(x + z)) / 2.
 * When lambda = 0, each nonzero half is a difference of Goethals codewords
 * (check 1: weight >= 8). When lambda != 0, both halves are differences of
 * Preparata codewords (check 2: weight >= 6), and x + z lands in the span
 * of the larger base with all representatives (check 3: weight >= 4)
 * without vanishing: its second half splits into parts of two codes that
 * intersect trivially (check 4), forcing x + z = 0 to collapse onto a
 * nonzero larger-base codeword of weight >= 6 equal to a representative
 * combination of weight <= 4. Check 5 confirms the enlargement pairing
 * that keeps lambda D and lambda A D nonzero and distinct, and check 6
 * exhibits a weight-8 difference outside the identically-acting subgroup,
 * pinning the distance to exactly 8.
 */
inline GpVerifyReport verify_gp_distance(const GpVerifyInputs& in, const GpVerifyOptions& opt = {}) {
    GpVerifyReport rep;
    rep.m = in.pair.params.m;
    const std::size_t n = std::size_t(1) << rep.m;
    const std::size_t nc = in.pair.params.n; /* cyclic length 2^(m-1) - 1 */

    std::vector<BitVector> diffs;
    for (std::size_t i = 0; i < in.pair.reps.size(); ++i)
        for (std::size_t j = i + 1; j < in.pair.reps.size(); ++j)
            diffs.push_back(in.pair.reps[i] ^ in.pair.reps[j]);

    auto run = [&](const std::string& name, auto&& body) {
        VerifyCheck c;
        c.name = name;
        auto t0 = std::chrono::steady_clock::now();
        try {
            body(c);
        } catch (const BudgetError&) {
            throw;
        } catch (const std::exception& e) {
            c.pass = false;
            c.detail = std::string("error: ") + e.what();
        }
        c.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        rep.checks.push_back(std::move(c));
    };

    auto coset_family_floor = [&](const LinearCode& code, std::size_t radius, VerifyCheck& c) {
        SearchOutcome self = min_weight(code, radius, opt.budget_log2);
        if (self.found) {
            c.pass = false;
            c.detail = "weight " + std::to_string(self.weight) + " word inside " + code.name;
            return;
        }
        std::vector<SearchOutcome> got =
            batch_coset_min_weight(code, diffs, radius, opt.workers, opt.budget_log2);
        for (std::size_t i = 0; i < got.size(); ++i)
            if (got[i].found) {
                c.pass = false;
                c.detail = "weight " + std::to_string(got[i].weight) +
                           " word in representative-difference coset " + std::to_string(i);
                return;
            }
        c.pass = true;
        c.detail = "no word of weight <= " + std::to_string(radius) + " in " + code.name + " or its " +
                   std::to_string(diffs.size()) + " representative-difference cosets";
    };

    run("goethals-cosets-clear-7", [&](VerifyCheck& c) { coset_family_floor(in.cg, opt.radius_g, c); });
    run("preparata-cosets-clear-5", [&](VerifyCheck& c) { coset_family_floor(in.cp, opt.radius_p, c); });

    run("mixed-span-clear-3", [&](VerifyCheck& c) {
        BitMatrix rows = in.cp.gen;
        for (const BitVector& r : in.pair.reps)
            if (!r.is_zero()) rows.append_row(r);
        LinearCode span = make_linear_code(rows, "preparata-plus-reps", true);
        std::size_t want = n - std::size_t(rep.m) - 1;
        if (span.k != want) {
            c.pass = false;
            c.detail = "span dimension " + std::to_string(span.k) + ", expected " + std::to_string(want);
            return;
        }
        SearchOutcome got = min_weight(span, opt.radius_span, opt.budget_log2);
        c.pass = !got.found;
        c.detail = got.found ? "weight " + std::to_string(got.weight) + " word in the span"
                             : "dimension " + std::to_string(span.k) + ", no word of weight <= " +
                                   std::to_string(opt.radius_span);
    });

    run("second-halves-separated", [&](VerifyCheck& c) {
        BitVector theta = in.pair.theta1.to_bitvector(nc);
        BitMatrix shifts(0, nc);
        for (std::size_t s = 0; s < nc; ++s) {
            BitVector rot(nc);
            for (std::size_t j = 0; j < nc; ++j)
                if (theta.get(j)) rot.set((j + s) % nc, true);
            shifts.append_row(rot);
        }
        LinearCode theta_code = extend_parity(make_linear_code(shifts, "theta-shifts", true));
        LinearCode mu_code = extend_parity(cyclic_code(int(nc), in.pair.mu1, "mu1"));

        Eliminator in_theta(nc + 1), in_mu(nc + 1);
        for (std::size_t i = 0; i < theta_code.gen.rows(); ++i) in_theta.add(theta_code.gen.row(i));
        for (std::size_t i = 0; i < mu_code.gen.rows(); ++i) in_mu.add(mu_code.gen.row(i));
        for (const BitVector& r : in.pair.reps)
            if (!in_theta.contains(r.slice(nc + 1, nc + 1))) {
                c.pass = false;
                c.detail = "representative second half outside the shift span";
                return;
            }
        for (std::size_t i = 0; i < in.cp.gen.rows(); ++i)
            if (!in_mu.contains(in.cp.gen.row(i).slice(nc + 1, nc + 1))) {
                c.pass = false;
                c.detail = "larger-base second half outside the single-root code";
                return;
            }

        BitMatrix stack = theta_code.gen;
        for (std::size_t i = 0; i < mu_code.gen.rows(); ++i) stack.append_row(mu_code.gen.row(i));
        std::size_t rank = stack.rank();
        c.pass = rank == theta_code.k + mu_code.k && rank == nc;
        c.detail = "dims " + std::to_string(theta_code.k) + " + " + std::to_string(mu_code.k) +
                   ", stacked rank " + std::to_string(rank);
    });

    run("enlargement-pairing", [&](VerifyCheck& c) {
        std::size_t delta = in.cp.k - in.cg.k;
        BitMatrix ad = in.a_map.mul(in.d_complement);
        BitMatrix iad = in.a_map;
        for (std::size_t i = 0; i < iad.rows(); ++i) iad.set(i, i, !iad.get(i, i));
        BitMatrix sum = iad.mul(in.d_complement);
        BitMatrix stack = in.cg.gen;
        for (std::size_t i = 0; i < in.d_complement.rows(); ++i)
            stack.append_row(in.d_complement.row(i));
        bool ok = in.d_complement.rows() == delta && in.d_complement.rank() == delta &&
                  ad.rank() == delta && sum.rank() == delta && stack.rank() == in.cp.k;
        for (std::size_t i = 0; i < in.d_complement.rows() && ok; ++i)
            ok = in.cp.in_code(in.d_complement.row(i)) && !in.cg.in_code(in.d_complement.row(i));
        c.pass = ok;
        c.detail = "complement rank " + std::to_string(in.d_complement.rank()) + ", mixed rank " +
                   std::to_string(ad.rank()) + ", xor rank " + std::to_string(sum.rank()) + " of " +
                   std::to_string(delta);
    });

    run("weight-8-witness", [&](VerifyCheck& c) {
        SearchOutcome w8 = min_weight(in.cg, 8, opt.budget_log2);
        if (!w8.found || w8.weight != 8) {
            c.pass = false;
            c.detail = w8.found ? "lightest word has weight " + std::to_string(w8.weight)
                                : "no word of weight <= 8 found";
            return;
        }
        StabilizerCode base =
            steane_enlarge(in.cg, in.cp, in.d_complement, in.a_map, "gp-base-m" + std::to_string(rep.m));
        std::vector<SympVector> ts = gp_translations(in.pair.reps);
        BitMatrix tilde = tilde_c0(base.stab, ts);
        Eliminator excluded(2 * n);
        for (std::size_t i = 0; i < tilde.rows(); ++i) excluded.add(tilde.row(i));

        SympVector v(w8.witness, BitVector(n));
        bool in_norm = base.norm.in_code(v);
        bool outside = !excluded.contains(v.packed());
        c.pass = in_norm && outside && symp_weight(v) == 8;
        c.detail = "witness " + w8.witness.to_hex() + (in_norm ? ", inside the difference set" : "") +
                   (outside ? ", outside the identically-acting subgroup (dim " +
                                  std::to_string(tilde.rows()) + ")"
                            : ", but acts identically");
    });

    rep.certified = true;
    for (const VerifyCheck& c : rep.checks) rep.certified = rep.certified && c.pass;
    rep.distance = rep.certified ? 8 : 0;
    return rep;
}

}  // namespace gpc

#endif
