#include <gtest/gtest.h>

#include "gpc/cosetcode.hpp"
#include "gpc/stabilizer.hpp"

using namespace gpc;

namespace {

StabilizerCode five_qubit() {
    BitMatrix rows(0, 10);
    for (const char* s : {"XZZXI", "IXZZX", "XIXZZ", "ZXIXZ"})
        rows.append_row(parse_paulis(s).packed());
    return stabilizer_from_generators(5, rows, "five", 3);
}

LinearCode even_weight(std::size_t n) {
    BitMatrix rows(0, n);
    for (std::size_t i = 0; i + 1 < n; ++i) {
        BitVector v(n);
        v.set(i, true);
        v.set(i + 1, true);
        rows.append_row(v);
    }
    return make_linear_code(rows, "even" + std::to_string(n));
}

}  // namespace

TEST(FiveQubit, Structure) {
    StabilizerCode s = five_qubit();
    EXPECT_EQ(s.n, 5u);
    EXPECT_EQ(s.k, 1u);
    EXPECT_EQ(s.claimed_d, 3);
    EXPECT_EQ(s.stab.rank(), 4u);
    EXPECT_EQ(s.norm.rank(), 6u);
    ASSERT_EQ(s.logical_x.size(), 1u);
    ASSERT_EQ(s.logical_z.size(), 1u);
    EXPECT_EQ(symp_inner(s.logical_x[0], s.logical_z[0]), 1);
    EXPECT_TRUE(audit_ok(s));
}

TEST(FiveQubit, RejectsAnticommutingGenerators) {
    BitMatrix rows(0, 10);
    rows.append_row(parse_paulis("XIIII").packed());
    rows.append_row(parse_paulis("ZIIII").packed());
    EXPECT_THROW(stabilizer_from_generators(5, rows), std::invalid_argument);
}

TEST(Css, FourQubitEvenWeight) {
    StabilizerCode s = css(even_weight(4));
    EXPECT_EQ(s.n, 4u);
    EXPECT_EQ(s.k, 2u);
    EXPECT_EQ(s.stab.rank(), 2u);
    EXPECT_EQ(s.norm.rank(), 6u);
    /* the dual of the even-weight code is the repetition code */
    EXPECT_EQ(gf4_symbols(s.stab.generator(0)), "XXXX");
    EXPECT_EQ(gf4_symbols(s.stab.generator(1)), "ZZZZ");
    EXPECT_TRUE(audit_ok(s));
}

TEST(Css, SelfDualGivesKZero) {
    BitMatrix rows(0, 2);
    BitVector v(2);
    v.set(0, true);
    v.set(1, true);
    rows.append_row(v);
    StabilizerCode s = css(make_linear_code(rows, "rep2"));
    EXPECT_EQ(s.k, 0u);
    EXPECT_TRUE(s.logical_x.empty());
    EXPECT_TRUE(s.logical_z.empty());
    EXPECT_TRUE(audit_ok(s));
    /* normalizer and stabilizer coincide */
    for (std::size_t i = 0; i < s.norm.rank(); ++i)
        EXPECT_TRUE(s.stab.in_code(s.norm.gens.row(i)));
}

TEST(Css, RejectsNonDualContaining) {
    BitMatrix rows(0, 4);
    BitVector e0(4), e1(4);
    e0.set(0, true);
    e1.set(1, true);
    rows.append_row(e0);
    rows.append_row(e1);
    EXPECT_THROW(css(make_linear_code(rows)), std::invalid_argument);
}

TEST(FixedPointFree, AllTableSizes) {
    for (std::size_t dim = 2; dim <= 12; ++dim) {
        BitMatrix a = fixed_point_free(dim);
        EXPECT_EQ(a.rank(), dim);
        /* exhaustive: x A != x for every nonzero x */
        for (std::uint64_t bits = 1; bits < (std::uint64_t(1) << dim); ++bits) {
            BitVector x(dim), ax(dim);
            for (std::size_t i = 0; i < dim; ++i)
                if ((bits >> i) & 1) {
                    x.set(i, true);
                    ax ^= a.row(i);
                }
            EXPECT_NE(ax, x);
        }
    }
    EXPECT_THROW(fixed_point_free(1), std::invalid_argument);
}

TEST(ComplementBasis, SplitsNestedCodes) {
    GpClassicalPair p = gp_classical_pair(6);
    BitMatrix d = complement_basis(p.cg, p.cp);
    EXPECT_EQ(d.rows(), 5u);
    Eliminator elim(64);
    for (std::size_t i = 0; i < p.cg.gen.rows(); ++i) elim.add(p.cg.gen.row(i));
    for (std::size_t i = 0; i < d.rows(); ++i) {
        EXPECT_TRUE(p.cp.in_code(d.row(i)));
        EXPECT_FALSE(p.cg.in_code(d.row(i)));
        EXPECT_TRUE(elim.add(d.row(i)));
    }
    EXPECT_EQ(elim.rank(), p.cp.k);
    EXPECT_THROW(complement_basis(p.cp, p.cg), std::invalid_argument);
}

TEST(SteaneEnlarge, GpBasePair) {
    GpClassicalPair p = gp_classical_pair(6);
    StabilizerCode s = steane_enlarge(p.cg, p.cp, "gp-base");
    EXPECT_EQ(s.n, 64u);
    EXPECT_EQ(s.k, 25u);
    EXPECT_EQ(s.stab.rank(), 39u);
    EXPECT_EQ(s.norm.rank(), 89u);
    EXPECT_EQ(s.logical_x.size(), 25u);
    EXPECT_TRUE(audit_ok(s));
}

TEST(SteaneEnlarge, SmallNestedPair) {
    /* even-weight [8,7] over self-dual-containing RM(1,3) = [8,4] */
    LinearCode rm13 = reed_muller(1, 3);
    LinearCode rm23 = reed_muller(2, 3);
    StabilizerCode s = steane_enlarge(rm13, rm23, "rm-pair");
    EXPECT_EQ(s.n, 8u);
    EXPECT_EQ(s.k, 3u);  /* 4 + 7 - 8 */
    EXPECT_EQ(s.stab.rank(), 5u);
    EXPECT_TRUE(audit_ok(s));
}

TEST(SteaneEnlarge, Rejections) {
    GpClassicalPair p = gp_classical_pair(6);
    /* arguments swapped: not nested */
    EXPECT_THROW(steane_enlarge(p.cp, p.cg), std::invalid_argument);
    /* enlargement by a single dimension is not allowed */
    LinearCode even4 = even_weight(4);
    LinearCode full4 = make_linear_code(identity(4), "full4");
    EXPECT_THROW(steane_enlarge(even4, full4), std::invalid_argument);
    /* smaller code must contain its dual */
    BitMatrix rows(0, 4);
    BitVector e0(4), e1(4);
    e0.set(0, true);
    e1.set(1, true);
    rows.append_row(e0);
    rows.append_row(e1);
    EXPECT_THROW(steane_enlarge(make_linear_code(rows), full4), std::invalid_argument);
}

TEST(Audit, DetectsCorruptedLogical) {
    StabilizerCode s = five_qubit();
    s.logical_x[0] = parse_paulis("XIIII");  /* anticommutes with some stabilizer */
    EXPECT_FALSE(audit_ok(s));
    bool failed_central = false;
    for (const AuditCheck& c : audit(s))
        if (c.name == "logicals-commute-with-stabilizer") failed_central = !c.pass;
    EXPECT_TRUE(failed_central);
}

TEST(Audit, DetectsCorruptedStabilizer) {
    StabilizerCode s = five_qubit();
    /* swap a stabilizer generator for a logical: self-orthogonality survives
       but the normalizer no longer centralizes the stabilizer */
    BitMatrix rows = s.stab.gens;
    rows.row(0) = s.logical_x[0].packed();
    s.stab = make_additive_code(5, rows, "corrupt");
    EXPECT_FALSE(audit_ok(s));
}

TEST(Audit, DetectsWrongK) {
    StabilizerCode s = five_qubit();
    s.k = 2;
    EXPECT_FALSE(audit_ok(s));
}
