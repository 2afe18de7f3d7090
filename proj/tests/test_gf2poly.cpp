#include <gtest/gtest.h>

#include <numeric>
#include <random>
#include <set>

#include "gpc/gf2poly.hpp"

using namespace gpc;

TEST(Poly2, DegreeSentinel) {
    Poly2 z;
    EXPECT_TRUE(z.is_zero());
    EXPECT_EQ(z.degree(), Poly2::kNegInfDegree);
    EXPECT_EQ(Poly2::one().degree(), 0);
    EXPECT_EQ(Poly2::monomial(67).degree(), 67);
}

TEST(Poly2, Arithmetic) {
    Poly2 a = Poly2::from_exponents({1, 0});       /* z + 1 */
    EXPECT_EQ(a * a, Poly2::from_exponents({2, 0})); /* (z+1)^2 = z^2 + 1 */
    EXPECT_TRUE((a + a).is_zero());

    Poly2 f = Poly2::from_exponents({5, 2, 0});
    auto [q, r] = divmod(f, a);
    EXPECT_EQ(q * a + r, f);
    EXPECT_LT(r.degree(), a.degree());

    EXPECT_TRUE(poly_divides(a, Poly2::from_exponents({2, 0})));
    EXPECT_FALSE(poly_divides(Poly2::from_exponents({2, 1, 0}), f));
    EXPECT_THROW(divmod(f, Poly2::zero()), std::invalid_argument);
}

TEST(Poly2, ModXn1) {
    /* z^31 = 1, so z^33 + z folds to z^2 + z */
    Poly2 f = Poly2::from_exponents({33, 1});
    EXPECT_EQ(f.mod_xn1(31), Poly2::from_exponents({2, 1}));
    Poly2 xn1 = Poly2::monomial(31) + Poly2::one();
    EXPECT_TRUE(xn1.mod_xn1(31).is_zero());
}

TEST(Poly2, CrossCheckMulAgainstNaive) {
    /* naive convolution oracle over explicit coefficient arrays */
    std::mt19937_64 rng(3);
    for (int t = 0; t < 50; ++t) {
        std::vector<int> ca(1 + rng() % 90), cb(1 + rng() % 90);
        Poly2 a, b;
        for (std::size_t i = 0; i < ca.size(); ++i) {
            ca[i] = rng() & 1;
            if (ca[i]) a.set_coeff(int(i), true);
        }
        for (std::size_t i = 0; i < cb.size(); ++i) {
            cb[i] = rng() & 1;
            if (cb[i]) b.set_coeff(int(i), true);
        }
        std::vector<int> cc(ca.size() + cb.size(), 0);
        for (std::size_t i = 0; i < ca.size(); ++i)
            for (std::size_t j = 0; j < cb.size(); ++j) cc[i + j] ^= ca[i] & cb[j];
        Poly2 want;
        for (std::size_t i = 0; i < cc.size(); ++i)
            if (cc[i]) want.set_coeff(int(i), true);
        EXPECT_EQ(a * b, want);
    }
}

TEST(FieldTable, Gf32Basics) {
    FieldTable f(5);
    EXPECT_EQ(f.order(), 31u);
    EXPECT_EQ(f.modulus(), Poly2::from_exponents({5, 2, 0}));
    /* alpha^5 = alpha^2 + 1 under z^5 + z^2 + 1 */
    EXPECT_EQ(f.alpha_pow(5), (1u << 2) | 1u);
    EXPECT_EQ(f.alpha_pow(31), 1u);
    /* all 31 powers distinct */
    std::set<FieldTable::Elem> powers;
    for (int e = 0; e < 31; ++e) powers.insert(f.alpha_pow(e));
    EXPECT_EQ(powers.size(), 31u);
    /* multiplicative inverse */
    for (FieldTable::Elem a = 1; a <= 31; ++a) EXPECT_EQ(f.mul(a, f.inv(a)), 1u);
}

TEST(FieldTable, RejectsBadModuli) {
    /* reducible: z^5+z^4+z^3+z^2+z+1 = (z+1)(z^4+z^2+1)-style product */
    EXPECT_THROW(FieldTable(5, Poly2::from_exponents({5, 4, 3, 2, 1, 0})), std::invalid_argument);
    /* irreducible but non-primitive does not exist at degree 5; degree mismatch and width guards: */
    EXPECT_THROW(FieldTable(5, Poly2::from_exponents({4, 1, 0})), std::invalid_argument);
    EXPECT_THROW(FieldTable(1, Poly2::from_exponents({1, 0})), std::invalid_argument);
    /* z^4 + z^3 + z^2 + z + 1 is irreducible but has order-5 root: not primitive */
    EXPECT_THROW(FieldTable(4, Poly2::from_exponents({4, 3, 2, 1, 0})), std::invalid_argument);
}

TEST(FieldTable, PowAndEval) {
    FieldTable f(5);
    FieldTable::Elem a3 = f.alpha_pow(3);
    EXPECT_EQ(f.pow(2 /* alpha */, 3), a3);
    EXPECT_EQ(f.pow(0, 5), 0u);
    EXPECT_EQ(f.pow(a3, 0), 1u);
    /* modulus evaluates to zero at alpha */
    EXPECT_EQ(f.eval(f.modulus(), 2), 0u);
    /* f(1) equals parity of weight */
    EXPECT_EQ(f.eval(Poly2::from_exponents({5, 2, 0}), 1), 1u);
}

TEST(CyclotomicCosets, Mod31) {
    EXPECT_EQ(cyclotomic_coset(31, 0), (std::vector<int>{0}));
    EXPECT_EQ(cyclotomic_coset(31, 1), (std::vector<int>{1, 2, 4, 8, 16}));
    EXPECT_EQ(cyclotomic_coset(31, 3), (std::vector<int>{3, 6, 12, 17, 24}));
    EXPECT_EQ(cyclotomic_coset(31, 5), (std::vector<int>{5, 9, 10, 18, 20}));
    EXPECT_EQ(coset_representatives(31), (std::vector<int>{0, 1, 3, 5, 7, 11, 15}));
    /* cosets partition Z_31 */
    std::set<int> all;
    for (int r : coset_representatives(31))
        for (int x : cyclotomic_coset(31, r)) all.insert(x);
    EXPECT_EQ(all.size(), 31u);
    EXPECT_THROW(cyclotomic_coset(30, 1), std::invalid_argument);
}

TEST(MinimalPolynomial, Gf32) {
    FieldTable f(5);
    /* alpha is a root of its own minimal polynomial, the field modulus */
    EXPECT_EQ(minimal_polynomial(f, 1), f.modulus());
    EXPECT_EQ(minimal_polynomial(f, 0), Poly2::from_exponents({1, 0}));

    Poly2 xn1 = Poly2::monomial(31) + Poly2::one();
    Poly2 product = Poly2::one();
    for (int r : coset_representatives(31)) {
        Poly2 mu = minimal_polynomial(f, r);
        EXPECT_EQ(mu.degree(), int(cyclotomic_coset(31, r).size()));
        EXPECT_TRUE(poly_divides(mu, xn1)) << r;
        /* roots are exactly the coset of r */
        std::vector<int> cs = cyclotomic_coset(31, r);
        std::set<int> coset(cs.begin(), cs.end());
        for (int j = 0; j < 31; ++j)
            EXPECT_EQ(f.eval(mu, f.alpha_pow(j)) == 0, coset.count(j) == 1) << r << " " << j;
        product = product * mu;
    }
    /* product over all cosets reconstructs z^31 + 1 */
    EXPECT_EQ(product, xn1);
}

TEST(MinimalPolynomial, ConjugateInvariance) {
    FieldTable f(5);
    EXPECT_EQ(minimal_polynomial(f, 3), minimal_polynomial(f, 6));
    EXPECT_EQ(minimal_polynomial(f, 3), minimal_polynomial(f, 24));
}

TEST(Idempotent, Gf32) {
    FieldTable f(5);
    /* theta_0 = sum of all monomials: geometric sums vanish off coset {0} */
    Poly2 theta0 = idempotent(f, 0);
    for (int i = 0; i < 31; ++i) EXPECT_TRUE(theta0.coeff(i));

    Poly2 theta1 = idempotent(f, 1);
    EXPECT_LT(theta1.degree(), 31);
    EXPECT_FALSE(theta1.eval_at_one());  /* 0 is not in the coset of 1 */
    EXPECT_EQ((theta1 * theta1).mod_xn1(31), theta1);
    for (int j = 0; j < 31; ++j) {
        bool in_coset = j == 1 || j == 2 || j == 4 || j == 8 || j == 16;
        EXPECT_EQ(f.eval(theta1, f.alpha_pow(j)) == 1, in_coset) << j;
    }
}

TEST(Idempotent, PartitionOfUnity) {
    FieldTable f(5);
    /* sum over all coset idempotents evaluates to 1 everywhere */
    Poly2 sum;
    for (int r : coset_representatives(31)) sum += idempotent(f, r);
    for (int j = 0; j < 31; ++j) EXPECT_EQ(f.eval(sum, f.alpha_pow(j)), 1u) << j;
}

TEST(GcdIdentity, SmallEvenM) {
    for (int m : {4, 6, 8, 10}) EXPECT_TRUE(gp_gcd_identity_holds(m)) << m;
    EXPECT_THROW(gp_gcd_identity_holds(5), std::invalid_argument);
}

TEST(FieldTable, Gf128ForLargerLengths) {
    FieldTable f(7);
    EXPECT_EQ(f.order(), 127u);
    EXPECT_EQ(minimal_polynomial(f, 1), f.modulus());
    EXPECT_EQ(cyclotomic_coset(127, 9), (std::vector<int>{9, 17, 18, 34, 36, 68, 72}));
}
