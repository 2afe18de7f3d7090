#include <gtest/gtest.h>

#include <bit>
#include <random>
#include <set>

#include "gpc/distsearch.hpp"

using namespace gpc;

namespace {

LinearCode random_code(std::size_t n, std::size_t k, std::mt19937_64& rng) {
    BitMatrix rows(0, n);
    Eliminator elim(n);
    while (rows.rows() < k) {
        BitVector v(n);
        for (std::size_t i = 0; i < n; ++i) v.set(i, rng() & 1);
        if (elim.add(v)) rows.append_row(v);
    }
    return make_linear_code(rows, "rnd");
}

BitVector random_vector(std::size_t n, std::mt19937_64& rng) {
    BitVector v(n);
    for (std::size_t i = 0; i < n; ++i) v.set(i, rng() & 1);
    return v;
}

struct BruteBest {
    bool found = false;
    std::size_t weight = 0;
    BitVector witness;
};

/* exhaustive (weight, lex)-least element of shift + C within the radius */
BruteBest brute_coset_best(const LinearCode& c, const BitVector& shift, std::size_t radius,
                           bool exclude_zero) {
    BruteBest best;
    auto consider = [&](const BitVector& v) {
        std::size_t w = v.weight();
        if (w > radius || (exclude_zero && w == 0)) return;
        if (!best.found || w < best.weight || (w == best.weight && v < best.witness)) {
            best.found = true;
            best.weight = w;
            best.witness = v;
        }
    };
    BitVector word = shift;
    consider(word);
    for (std::uint64_t i = 1; i < (std::uint64_t(1) << c.k); ++i) {
        word ^= c.gen.row(std::size_t(std::countr_zero(i)));
        consider(word);
    }
    return best;
}

AdditiveSympCode random_additive(std::size_t n, std::size_t rank, std::mt19937_64& rng) {
    BitMatrix rows(0, 2 * n);
    Eliminator elim(2 * n);
    while (rows.rows() < rank) {
        BitVector v = random_vector(2 * n, rng);
        if (elim.add(v)) rows.append_row(v);
    }
    return make_additive_code(n, rows, "rnd-add");
}

BruteBest brute_symp_best(const AdditiveSympCode& c, const SympVector& shift, std::size_t radius,
                          bool exclude_zero) {
    BruteBest best;
    auto consider = [&](const BitVector& packed) {
        std::size_t w = symp_weight(SympVector::from_packed(packed));
        if (w > radius || (exclude_zero && w == 0)) return;
        if (!best.found || w < best.weight || (w == best.weight && packed < best.witness)) {
            best.found = true;
            best.weight = w;
            best.witness = packed;
        }
    };
    BitVector word = shift.packed();
    consider(word);
    for (std::uint64_t i = 1; i < (std::uint64_t(1) << c.rank()); ++i) {
        word ^= c.gens.row(std::size_t(std::countr_zero(i)));
        consider(word);
    }
    return best;
}

void expect_same(const SearchOutcome& got, const BruteBest& want, const std::string& ctx) {
    ASSERT_EQ(got.found, want.found) << ctx;
    if (want.found) {
        EXPECT_EQ(got.weight, want.weight) << ctx;
        EXPECT_EQ(got.witness, want.witness) << ctx;
    }
}

}  // namespace

TEST(RevolvingDoor, VisitsEveryCombinationOnce) {
    const std::size_t n = 7;
    const std::size_t binom[8] = {1, 7, 21, 35, 35, 21, 7, 1};
    for (std::size_t t = 0; t <= n; ++t) {
        RevolvingDoor door(n, t);
        std::set<std::uint64_t> seen;
        std::uint64_t mask = 0;
        for (std::size_t j = 0; j < t; ++j) mask |= std::uint64_t(1) << door.indices()[j];
        for (;;) {
            /* ascending slots, mask consistent */
            std::uint64_t check = 0;
            for (std::size_t j = 0; j < t; ++j) {
                if (j) EXPECT_LT(door.indices()[j - 1], door.indices()[j]);
                check |= std::uint64_t(1) << door.indices()[j];
            }
            EXPECT_EQ(check, mask);
            EXPECT_TRUE(seen.insert(mask).second);
            long rem, add;
            if (!door.next(rem, add)) break;
            /* exactly one element swapped */
            EXPECT_TRUE(mask & (std::uint64_t(1) << rem));
            EXPECT_FALSE(mask & (std::uint64_t(1) << add));
            mask ^= (std::uint64_t(1) << rem) | (std::uint64_t(1) << add);
        }
        EXPECT_EQ(seen.size(), binom[t]) << "t = " << t;
    }
    EXPECT_THROW(RevolvingDoor(3, 4), std::invalid_argument);
}

TEST(Budget, EnumerationSizeAndGate) {
    EXPECT_DOUBLE_EQ(combination_enumeration_size(5, 2), 16.0);
    EXPECT_DOUBLE_EQ(combination_enumeration_size(5, 2, 3.0), 106.0);
    EXPECT_DOUBLE_EQ(combination_enumeration_size(4, 9), 16.0);
    EXPECT_NO_THROW(ensure_budget(1024.0, 10));
    EXPECT_THROW(ensure_budget(1025.0, 10), BudgetError);
    std::mt19937_64 rng(3);
    LinearCode c = random_code(12, 5, rng);
    EXPECT_THROW(min_weight(c, 6, 0), BudgetError);
    EXPECT_THROW(coset_min_weight(c, BitVector(12), 6, 0), BudgetError);
}

TEST(MinWeight, MatchesBruteForceAtEveryRadius) {
    std::mt19937_64 rng(101);
    for (int trial = 0; trial < 12; ++trial) {
        std::size_t n = 6 + rng() % 7;                       /* 6..12 */
        std::size_t k = 1 + rng() % std::min<std::size_t>(n - 1, 8);
        LinearCode c = random_code(n, k, rng);
        for (std::size_t radius = 0; radius <= n; ++radius) {
            SearchOutcome got = min_weight(c, radius);
            BruteBest want = brute_coset_best(c, BitVector(n), radius, true);
            expect_same(got, want, c.name + " radius " + std::to_string(radius));
            if (got.found) {
                EXPECT_TRUE(c.in_code(got.witness));
                EXPECT_EQ(got.witness.weight(), got.weight);
            }
        }
    }
}

TEST(CosetMinWeight, MatchesBruteForceAtEveryRadius) {
    std::mt19937_64 rng(202);
    for (int trial = 0; trial < 12; ++trial) {
        std::size_t n = 6 + rng() % 7;
        std::size_t k = 1 + rng() % std::min<std::size_t>(n - 1, 8);
        LinearCode c = random_code(n, k, rng);
        BitVector shift = random_vector(n, rng);
        for (std::size_t radius = 0; radius <= n; ++radius) {
            SearchOutcome got = coset_min_weight(c, shift, radius);
            BruteBest want = brute_coset_best(c, shift, radius, false);
            expect_same(got, want, "radius " + std::to_string(radius));
            if (got.found) EXPECT_EQ(c.syndrome(got.witness), c.syndrome(shift));
        }
    }
}

TEST(CosetMinWeight, ShiftInsideCode) {
    std::mt19937_64 rng(7);
    LinearCode c = random_code(10, 4, rng);
    SearchOutcome got = coset_min_weight(c, c.gen.row(0) ^ c.gen.row(2), 3);
    ASSERT_TRUE(got.found);
    EXPECT_EQ(got.weight, 0u);
    EXPECT_TRUE(got.witness.is_zero());
    EXPECT_THROW(coset_min_weight(c, BitVector(10), 11), std::invalid_argument);
}

TEST(Batch, AgreesWithIndividualSearchesAcrossWorkerCounts) {
    std::mt19937_64 rng(303);
    LinearCode c = random_code(14, 6, rng);
    std::vector<BitVector> shifts;
    for (int i = 0; i < 24; ++i) shifts.push_back(random_vector(14, rng));
    std::vector<SearchOutcome> one = batch_coset_min_weight(c, shifts, 6, 1);
    std::vector<SearchOutcome> four = batch_coset_min_weight(c, shifts, 6, 4);
    ASSERT_EQ(one.size(), shifts.size());
    for (std::size_t i = 0; i < shifts.size(); ++i) {
        SearchOutcome solo = coset_min_weight(c, shifts[i], 6);
        EXPECT_EQ(one[i].found, solo.found);
        EXPECT_EQ(four[i].found, solo.found);
        if (solo.found) {
            EXPECT_EQ(one[i].weight, solo.weight);
            EXPECT_EQ(one[i].witness, solo.witness);
            EXPECT_EQ(four[i].weight, solo.weight);
            EXPECT_EQ(four[i].witness, solo.witness);
        }
    }
}

TEST(Determinism, RepeatedRunsIdentical) {
    std::mt19937_64 rng(404);
    LinearCode c = random_code(12, 6, rng);
    BitVector shift = random_vector(12, rng);
    SearchOutcome a = coset_min_weight(c, shift, 7);
    SearchOutcome b = coset_min_weight(c, shift, 7);
    EXPECT_EQ(a.found, b.found);
    if (a.found) {
        EXPECT_EQ(a.weight, b.weight);
        EXPECT_EQ(a.witness, b.witness);
    }
}

TEST(WideSyndrome, PlantedLowWeightWordsAtLength80) {
    /* k = 8 leaves a 72-bit syndrome, exercising the wide-key path */
    std::mt19937_64 rng(505);
    BitMatrix rows(0, 80);
    Eliminator elim(80);
    BitVector planted(80);
    planted.set(3, true);
    planted.set(31, true);
    planted.set(64, true);
    planted.set(79, true);
    elim.add(planted);
    rows.append_row(planted);
    while (rows.rows() < 8) {
        BitVector v = random_vector(80, rng);
        if (elim.add(v)) rows.append_row(v);
    }
    LinearCode c = make_linear_code(rows, "planted80");
    for (std::size_t radius : {4, 5}) {
        SearchOutcome got = min_weight(c, radius);
        BruteBest want = brute_coset_best(c, BitVector(80), radius, true);
        expect_same(got, want, "planted radius " + std::to_string(radius));
    }
    /* coset shifted by a small error off a codeword */
    BitVector shift = planted;
    shift.flip(40);
    shift.flip(41);
    SearchOutcome got = coset_min_weight(c, shift, 4);
    BruteBest want = brute_coset_best(c, shift, 4, false);
    expect_same(got, want, "planted coset");
}

TEST(SympMinWeight, MatchesExhaustiveOnSmallCodes) {
    std::mt19937_64 rng(606);
    for (int trial = 0; trial < 15; ++trial) {
        std::size_t n = 3 + rng() % 3;  /* 3..5 */
        std::size_t rank = 1 + rng() % std::min<std::size_t>(2 * n - 1, 6);
        AdditiveSympCode c = random_additive(n, rank, rng);
        SympVector shift(random_vector(n, rng), random_vector(n, rng));
        for (std::size_t radius = 0; radius <= n; ++radius) {
            SearchOutcome got = symp_min_weight(c, shift, radius);
            BruteBest want = brute_symp_best(c, shift, radius, false);
            expect_same(got, want, "symp radius " + std::to_string(radius));
            if (got.found) {
                /* witness lies in the right coset */
                BitVector diff = got.witness ^ shift.packed();
                EXPECT_TRUE(c.in_code(diff));
                EXPECT_EQ(symp_weight(SympVector::from_packed(got.witness)), got.weight);
            }
        }
    }
}

TEST(SympMinWeight, ExcludeZeroFindsCodeDistance) {
    /* the five-qubit code: nonzero stabilizer elements all have weight 4 */
    BitMatrix rows(0, 10);
    for (const char* s : {"XZZXI", "IXZZX", "XIXZZ", "ZXIXZ"})
        rows.append_row(parse_paulis(s).packed());
    AdditiveSympCode stab = make_additive_code(5, rows, "five");
    SearchOutcome got = symp_min_weight(stab, SympVector(5), 5, 64, true);
    ASSERT_TRUE(got.found);
    EXPECT_EQ(got.weight, 4u);
    SearchOutcome below = symp_min_weight(stab, SympVector(5), 3, 64, true);
    EXPECT_FALSE(below.found);
    EXPECT_THROW(symp_min_weight(stab, SympVector(5), 5, 0, true), BudgetError);
}
