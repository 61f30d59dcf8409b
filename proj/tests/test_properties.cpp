#include <gtest/gtest.h>

#include "gtm/properties.hpp"
#include "support/params.hpp"

namespace gtm {
namespace {

TEST(ShortBispecialExpectation, Rows) {
    const auto p = Params::make(4, 5);
    EXPECT_FALSE(short_bispecial_expectation(p, 0));
    EXPECT_EQ(short_bispecial_expectation(p, 1), (ShortBispecialRow{0, 1}));
    EXPECT_EQ(short_bispecial_expectation(p, 3), (ShortBispecialRow{0, 1}));
    EXPECT_EQ(short_bispecial_expectation(p, 4), (ShortBispecialRow{1, 2}));
    EXPECT_EQ(short_bispecial_expectation(p, 5), (ShortBispecialRow{0, 1}));
    EXPECT_EQ(short_bispecial_expectation(p, 6), (ShortBispecialRow{0, 1}));
    EXPECT_EQ(short_bispecial_expectation(p, 7), (ShortBispecialRow{-1, 0}));
    EXPECT_FALSE(short_bispecial_expectation(p, 8));
    EXPECT_FALSE(short_bispecial_expectation(Params::make(3, 2), 1));
}

TEST(PropertySuite, PassesOnAllPairs) {
    for (auto [b, m] : testing::kPairs) {
        const auto params = Params::make(b, m);
        const auto results = run_property_suite(Language(params));
        EXPECT_TRUE(all_passed(results)) << b << "," << m;
        for (const auto& r : results) {
            EXPECT_NE(r.status, PropertyStatus::Fail) << b << "," << m << " " << r.id << ": " << r.witness;
            if (!params.periodic) EXPECT_EQ(r.status, PropertyStatus::Pass) << r.id;
        }
    }
}

TEST(PropertySuite, AperiodicOnlyChecksAreSkippedWhenPeriodic) {
    const auto results = run_property_suite(Language(Params::make(3, 2)));
    for (const auto& r : results) {
        const bool aperiodic_only = r.id == "property_x" || r.id == "short_bispecials" ||
                                    r.id == "bilateral_from_extensions" || r.id == "long_bispecials";
        EXPECT_EQ(r.status == PropertyStatus::NotApplicable, aperiodic_only) << r.id;
    }
}

TEST(PropertySuite, StableIds) {
    const auto results = run_property_suite(Language(Params::make(2, 2)));
    std::vector<std::string> ids;
    for (const auto& r : results) ids.push_back(r.id);
    EXPECT_EQ(ids, (std::vector<std::string>{
                       "property_i", "property_ii", "property_iii", "property_iv", "property_v", "property_vi",
                       "property_vii", "property_viii", "property_ix", "property_x", "property_xi", "factorial",
                       "second_difference", "non_bispecial_palindromes", "short_bispecials",
                       "bilateral_from_extensions", "long_bispecials"}));
}

TEST(PropertySuite, AllPassedTreatsNotApplicableAsPass) {
    std::vector<PropertyResult> rs(2);
    rs[0].status = PropertyStatus::NotApplicable;
    EXPECT_TRUE(all_passed(rs));
    rs[1].status = PropertyStatus::Fail;
    EXPECT_FALSE(all_passed(rs));
}

}  // namespace
}  // namespace gtm
