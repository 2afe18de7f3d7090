#include <gtest/gtest.h>

#include <random>
#include <set>

#include "gpc/oracle.hpp"
#include "gpc/sampling.hpp"
#include "gpc/unioncode.hpp"

using namespace gpc;

namespace {

StabilizerCode five_qubit() {
    BitMatrix rows(0, 10);
    rows.append_row(parse_paulis("XZZXI").packed());
    rows.append_row(parse_paulis("IXZZX").packed());
    rows.append_row(parse_paulis("XIXZZ").packed());
    rows.append_row(parse_paulis("ZXIXZ").packed());
    return stabilizer_from_generators(5, rows, "five", 3);
}

StabilizerCode four_two_two() {
    BitMatrix rows(0, 8);
    rows.append_row(parse_paulis("XXXX").packed());
    rows.append_row(parse_paulis("ZZZZ").packed());
    return stabilizer_from_generators(4, rows, "four", 2);
}

}  // namespace

TEST(MakeUnion, ValidatesTranslations) {
    EXPECT_THROW(make_union_code(four_two_two(), {}), std::invalid_argument);
    EXPECT_THROW(make_union_code(four_two_two(), {parse_paulis("XIII")}), std::invalid_argument);
    EXPECT_THROW(make_union_code(four_two_two(), {parse_paulis("IIII"), parse_paulis("III")}),
                 std::invalid_argument);
    /* XXII lies in the normalizer, hence in the identity's coset */
    EXPECT_THROW(make_union_code(four_two_two(), {parse_paulis("IIII"), parse_paulis("XXII")}),
                 std::invalid_argument);
    /* XIII and IXII differ by the normalizer element XXII */
    EXPECT_THROW(
        make_union_code(four_two_two(),
                        {parse_paulis("IIII"), parse_paulis("XIII"), parse_paulis("IXII")}),
        std::invalid_argument);

    UnionStabilizerCode u =
        make_union_code(four_two_two(), {parse_paulis("XIII"), parse_paulis("IIII")});
    EXPECT_TRUE(u.translations[0].is_zero());
    EXPECT_EQ(u.K(), 2u);
    EXPECT_DOUBLE_EQ(u.log2_dim(), 3.0);
}

TEST(TildeC0, TrivialTranslationKeepsWholeStabilizer) {
    UnionStabilizerCode u = make_union_code(five_qubit(), {SympVector(5)});
    BitMatrix tilde = tilde_c0(u.base.stab, u.translations);
    EXPECT_EQ(tilde.rows(), 4u);

    UnionDistanceResult got = distance_exact_small(u);
    EXPECT_EQ(got.distance, 3u);
    EXPECT_EQ(got.tilde_dim, 4u);
    EXPECT_EQ(got.difference_floor, 3u);
}

TEST(TildeC0, AnticommutingTranslationShrinksIt) {
    UnionStabilizerCode u =
        make_union_code(four_two_two(), {parse_paulis("IIII"), parse_paulis("XIII")});
    BitMatrix tilde = tilde_c0(u.base.stab, u.translations);
    ASSERT_EQ(tilde.rows(), 1u);
    EXPECT_EQ(tilde.row(0), parse_paulis("XXXX").packed());

    /* the translation itself is an undetectable weight-1 operation */
    UnionDistanceResult got = distance_exact_small(u);
    EXPECT_EQ(got.distance, 1u);
}

TEST(DistanceExactSmall, RejectsOneDimensionalCode) {
    BitMatrix rows(0, 4);
    rows.append_row(parse_paulis("XX").packed());
    rows.append_row(parse_paulis("ZZ").packed());
    StabilizerCode bell = stabilizer_from_generators(2, rows, "bell");
    UnionStabilizerCode u = make_union_code(std::move(bell), {SympVector(2)});
    EXPECT_THROW(distance_exact_small(u), std::invalid_argument);
}

TEST(DistanceExactSmall, BudgetGate) {
    UnionStabilizerCode u = make_union_code(five_qubit(), {SympVector(5)});
    EXPECT_THROW(distance_exact_small(u, 0), BudgetError);
}

TEST(DistanceExactSmall, MatchesDenseOracleOnRandomUnions) {
    std::mt19937_64 rng(20260817);
    for (int trial = 0; trial < 30; ++trial) {
        UnionStabilizerCode u = random_union_code(rng);
        UnionDistanceResult exact = distance_exact_small(u);

        std::vector<DenseState> basis = union_codespace(u.base, u.translations);
        ASSERT_EQ(basis.size(), u.K() << u.base.k);
        int kl = knill_laflamme_distance(basis, u.base.n);
        ASSERT_EQ(exact.distance, std::size_t(kl)) << "trial " << trial << " on " << u.base.n
                                                   << " qubits, K=" << u.K() << " k=" << u.base.k;

        EXPECT_GE(exact.distance, exact.difference_floor);
        SympVector w = SympVector::from_packed(exact.witness);
        EXPECT_EQ(symp_weight(w), exact.distance);
    }
}

TEST(CosetDistance, MatchesBruteForceAndBoundsTheDistance) {
    std::mt19937_64 rng(777);
    for (int trial = 0; trial < 10; ++trial) {
        UnionStabilizerCode u = random_union_code(rng);
        BitMatrix gens(0, 2 * u.base.n);
        for (std::size_t i = 0; i < u.base.norm.rank(); ++i)
            gens.append_row(u.base.norm.generator(i).packed());

        UnionDistanceResult exact = distance_exact_small(u);
        for (std::size_t i = 0; i < u.K(); ++i)
            for (std::size_t j = 0; j < u.K(); ++j) {
                SearchOutcome got = coset_distance(u, i, j, u.base.n);
                BitVector shift = (u.translations[i] ^ u.translations[j]).packed();
                std::size_t brute = brute_min_symp_weight(gens, shift, true);
                ASSERT_TRUE(got.found);
                ASSERT_EQ(got.weight, brute);
                if (i != j) EXPECT_LE(exact.distance, got.weight);
            }
    }
}

TEST(GpQuantum, BuildAtM6) {
    GpQuantumCode q = build_gp_code(6);
    EXPECT_EQ(q.code.base.n, 64u);
    EXPECT_EQ(q.code.base.k, 25u);
    EXPECT_EQ(q.code.base.stab.rank(), 39u);
    EXPECT_EQ(q.code.base.norm.rank(), 89u);
    EXPECT_EQ(q.code.K(), 1024u);
    EXPECT_DOUBLE_EQ(q.code.log2_dim(), 35.0);
    EXPECT_EQ(q.code.base.claimed_d, 8);
    EXPECT_TRUE(q.code.translations[0].is_zero());
    EXPECT_TRUE(audit_ok(q.code.base));
}

TEST(GpQuantum, TranslationsAreAllRepresentativePairs) {
    GpQuantumCode q = build_gp_code(6);
    std::set<BitVector> reps(q.classical.reps.begin(), q.classical.reps.end());
    std::set<BitVector> distinct;
    for (const SympVector& t : q.code.translations) {
        EXPECT_TRUE(reps.count(t.x));
        EXPECT_TRUE(reps.count(t.z));
        distinct.insert(t.packed());
    }
    EXPECT_EQ(distinct.size(), 1024u);
}

TEST(VerifyGp, CertifiesDistanceEightAtM6) {
    GpVerifyReport rep = verify_gp_distance(gp_verify_inputs(6));
    ASSERT_EQ(rep.checks.size(), 6u);
    for (const VerifyCheck& c : rep.checks)
        EXPECT_TRUE(c.pass) << c.name << ": " << c.detail;
    EXPECT_TRUE(rep.certified);
    EXPECT_EQ(rep.distance, 8);
    EXPECT_EQ(rep.checks[0].name, "goethals-cosets-clear-7");
    EXPECT_EQ(rep.checks[5].name, "weight-8-witness");
}

TEST(VerifyGp, IdentityMixBreaksThePairing) {
    GpVerifyInputs in = gp_verify_inputs(6);
    in.a_map = identity(in.d_complement.rows());
    GpVerifyOptions opt;
    opt.radius_g = opt.radius_p = opt.radius_span = 1;
    GpVerifyReport rep = verify_gp_distance(in, opt);
    EXPECT_FALSE(rep.certified);
    EXPECT_EQ(rep.distance, 0);
    bool pairing_failed = false;
    for (const VerifyCheck& c : rep.checks)
        if (c.name == "enlargement-pairing") pairing_failed = !c.pass;
    EXPECT_TRUE(pairing_failed);
}

TEST(VerifyGp, WeakenedBaseFailsTheWeightFloor) {
    GpVerifyInputs in = gp_verify_inputs(6);
    in.cg = in.cp; /* the larger base contains weight-6 words */
    GpVerifyOptions opt;
    opt.radius_g = 6;
    GpVerifyReport rep = verify_gp_distance(in, opt);
    EXPECT_FALSE(rep.certified);
    EXPECT_FALSE(rep.checks[0].pass);
    EXPECT_NE(rep.checks[0].detail.find("weight 6"), std::string::npos);
}

TEST(VerifyGp, PropagatesBudgetErrors) {
    GpVerifyInputs in = gp_verify_inputs(6);
    GpVerifyOptions opt;
    opt.budget_log2 = 0;
    EXPECT_THROW(verify_gp_distance(in, opt), BudgetError);
}
