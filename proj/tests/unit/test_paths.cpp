#include <gtest/gtest.h>

#include <set>

#include "oplin/paths.hpp"
#include "oplin/weights.hpp"
#include "test_systems.hpp"

using namespace oplin;

TEST(Path, ParseRenderAndGeometry) {
    Path p = Path::parse("1:UHXD");
    EXPECT_EQ(p.to_string(), "1:UHXD");
    EXPECT_EQ(p.length(), 5u);
    EXPECT_EQ(p.end_level(), 1u);
    EXPECT_TRUE(p.is_generalized());
    auto v = p.vertices();
    ASSERT_EQ(v.size(), 5u);
    EXPECT_EQ(v[2], (Path::Vertex{2, 2}));
    EXPECT_EQ(v[3], (Path::Vertex{4, 2}));
    EXPECT_THROW(Path::parse("0:D"), InputError);
    EXPECT_THROW(Path::parse("0:UQ"), InputError);
}

TEST(Path, MotzkinPathsAreCountedByMotzkinNumbers) {
    auto motzkin = testkit::motzkin_numbers(10);
    EXPECT_EQ(motzkin[8], 323u);
    for (unsigned k = 0; k < 10; ++k) {
        EXPECT_EQ(enumerate_paths(0, 0, k, false).size(), motzkin[k]) << k;
        EXPECT_EQ(dp_count(0, 0, k, false), motzkin[k]) << k;
    }
}

TEST(Path, EnumerationIsCompleteAndDistinct) {
    for (unsigned m = 0; m <= 3; ++m)
        for (unsigned n = 0; n <= 3; ++n)
            for (unsigned k = 0; k <= 6; ++k)
                for (bool hh : {false, true}) {
                    auto paths = enumerate_paths(m, n, k, hh);
                    std::set<Path> unique(paths.begin(), paths.end());
                    EXPECT_EQ(unique.size(), paths.size());
                    EXPECT_EQ(paths.size(), dp_count(m, n, k, hh));
                    for (const auto& p : paths) {
                        EXPECT_EQ(p.length(), k);
                        EXPECT_EQ(p.end_level(), n);
                        EXPECT_EQ(p.is_generalized() && !hh, false);
                    }
                }
}

TEST(Paving, CountsFollowTheFibonacciLikeRecurrence) {
    std::vector<std::size_t> f{1, 2};
    for (unsigned k = 2; k <= 9; ++k) f.push_back(2 * f[k - 1] + f[k - 2]);
    for (unsigned k = 0; k <= 9; ++k) {
        auto pavings = enumerate_pavings(k);
        EXPECT_EQ(pavings.size(), f[k]) << k;
        EXPECT_TRUE(std::is_sorted(pavings.begin(), pavings.end()));
    }
}

TEST(Paving, ValidationAndRendering) {
    Paving pi(9, {{5, 1}, {2, 2}});
    EXPECT_EQ(pi.to_string(), "[{2,3},{5}] on 1..9");
    EXPECT_EQ(pi.isolated_count(), 6u);
    EXPECT_EQ(pi.isolated_points(), (std::vector<unsigned>{1, 4, 6, 7, 8, 9}));
    EXPECT_THROW(Paving(3, {{2, 2}, {3, 1}}), InputError);
    EXPECT_THROW(Paving(3, {{3, 2}}), InputError);
    EXPECT_THROW(Paving(3, {{1, 3}}), InputError);
}

TEST(Merge, IsolatedPointsKeepStepsAndBlocksBecomeHorizontalOrValleys) {
    Path p = Path::parse("0:UD");
    Paving domino(4, {{2, 2}});
    EXPECT_EQ(merge_pair(p, domino).to_string(), "0:UDUD");
    EXPECT_EQ(merge_pair_generalized(p, domino).to_string(), "0:UXD");
    EXPECT_EQ(merge_pair(Path::parse("0:UUD"), Paving(4, {{4, 1}})).to_string(), "0:UUDH");
    Path flat = Path::parse("0:HH");
    Paving low(4, {{1, 2}});
    EXPECT_FALSE(merge_is_admissible(flat, low));
    EXPECT_THROW(merge_pair(flat, low), InputError);
    EXPECT_EQ(merge_pair_generalized(flat, low).to_string(), "0:XHH");
    EXPECT_THROW(merge_pair(p, Paving(3, {})), InputError);
    EXPECT_THROW(merge_pair(Path::parse("0:X"), Paving(2, {})), InputError);
}

TEST(Merge, PreimagesInvertTheMerge) {
    for (unsigned k = 0; k <= 6; ++k)
        for (const auto& p : enumerate_paths(0, 0, k, false))
            for (const auto& [q, pi] : merge_preimages(p)) {
                EXPECT_EQ(merge_pair(q, pi), p);
                EXPECT_EQ(pi.ground_size(), k);
            }
    // A DU can be kept or covered by a domino; an H is a monomino or an
    // isolated H.
    EXPECT_EQ(merge_preimages(Path::parse("1:DU")).size(), 2u);
    EXPECT_EQ(merge_preimages(Path::parse("0:HUHD")).size(), 4u);
}

TEST(Merge, AdmissiblePairsMatchPreimageCounts) {
    // Every admissible (path, paving) pair is a preimage of its merge.
    for (unsigned k = 0; k <= 6; ++k)
        for (unsigned m = 0; m <= 2; ++m)
            for (unsigned n = 0; n <= 2; ++n) {
                std::size_t pairs = 0, preimages = 0;
                for (const auto& pi : enumerate_pavings(k))
                    for (const auto& q : enumerate_paths(m, n, pi.isolated_count(), false))
                        if (merge_is_admissible(q, pi)) ++pairs;
                for (const auto& p : enumerate_paths(m, n, k, false)) preimages += merge_preimages(p).size();
                EXPECT_EQ(pairs, preimages) << m << n << k;
            }
}
