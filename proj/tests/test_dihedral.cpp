#include <gtest/gtest.h>

#include <algorithm>
#include <set>

#include "gtm/dihedral.hpp"
#include "support/oracle.hpp"

namespace gtm {
namespace {

GroupElement pi(std::int64_t x, std::uint32_t m) { return GroupElement::morphism(x, m); }
GroupElement psi(std::int64_t x, std::uint32_t m) { return GroupElement::antimorphism(x, m); }

TEST(Apply, Examples) {
    EXPECT_EQ(apply_element(pi(0, 3), parse_word("0121", 3)), parse_word("0121", 3));
    EXPECT_EQ(apply_element(psi(1, 2), parse_word("01", 2)), parse_word("01", 2));
    EXPECT_EQ(apply_element(psi(0, 3), parse_word("012", 3)), parse_word("120", 3));
    EXPECT_TRUE(apply_element(psi(2, 5), Word{}).empty());
}

TEST(Apply, MatchesLetterDefinition) {
    for (std::uint32_t m = 1; m <= 5; ++m) {
        for (const auto& word : oracle::all_words(4, m)) {
            for (std::uint32_t x = 0; x < m; ++x) {
                EXPECT_EQ(apply_element(pi(x, m), word), oracle::act(false, x, m, word));
                EXPECT_EQ(apply_element(psi(x, m), word), oracle::act(true, x, m, word));
            }
        }
    }
}

TEST(Compose, Examples) {
    EXPECT_EQ(compose(psi(0, 4), psi(0, 4)), pi(0, 4));
    EXPECT_EQ(compose(psi(1, 3), psi(0, 3)), pi(1, 3));
    EXPECT_EQ(compose(pi(1, 2), pi(1, 2)), pi(0, 2));
    EXPECT_THROW(compose(pi(1, 2), pi(1, 3)), std::invalid_argument);
}

TEST(Compose, PsiOnePsiZeroOnAllPairs) {
    const auto composed = compose(psi(1, 3), psi(0, 3));
    for (const auto& word : oracle::all_words(2, 3)) {
        EXPECT_EQ(apply_element(composed, word), apply_element(psi(1, 3), apply_element(psi(0, 3), word)));
        EXPECT_EQ(apply_element(composed, word), apply_element(pi(1, 3), word));
    }
}

TEST(Compose, RespectsActionExhaustively) {
    for (std::uint32_t m = 1; m <= 5; ++m) {
        const auto group = all_elements(m);
        for (std::size_t len = 0; len <= 6; ++len) {
            if (len > 4 && m > 3) continue;  // keep the exhaustive sweep quick
            for (const auto& word : oracle::all_words(len, m)) {
                for (const auto& a : group) {
                    for (const auto& b : group) {
                        ASSERT_EQ(apply_element(compose(a, b), word), apply_element(a, apply_element(b, word)))
                            << to_string(a) << " " << to_string(b);
                    }
                }
            }
        }
    }
}

TEST(Group, Axioms) {
    for (std::uint32_t m = 1; m <= 6; ++m) {
        const auto group = all_elements(m);
        const std::set<GroupElement> members(group.begin(), group.end());
        const auto id = GroupElement::identity(m);
        for (const auto& a : group) {
            EXPECT_EQ(compose(id, a), a);
            EXPECT_EQ(compose(a, id), a);
            EXPECT_EQ(compose(a, a.inverse()), id);
            EXPECT_EQ(compose(a.inverse(), a), id);
            for (const auto& b : group) {
                EXPECT_TRUE(members.count(compose(a, b)));
                for (const auto& c : group) {
                    ASSERT_EQ(compose(compose(a, b), c), compose(a, compose(b, c)));
                }
            }
        }
    }
}

TEST(Group, DihedralPresentation) {
    for (std::uint32_t m = 1; m <= 8; ++m) {
        const auto id = GroupElement::identity(m);
        auto power = pi(1, m);
        std::uint32_t order = 1;
        while (power != id) {
            power = compose(power, pi(1, m));
            ++order;
        }
        EXPECT_EQ(order, m);
        EXPECT_EQ(compose(psi(0, m), psi(0, m)), id);
        const auto r = compose(psi(0, m), pi(1, m));
        EXPECT_EQ(compose(r, r), id);
    }
}

TEST(Commutation, SubstitutionIntertwinesTheGroup) {
    for (std::uint32_t b = 2; b <= 5; ++b) {
        for (std::uint32_t m = 1; m <= 5; ++m) {
            const auto p = Params::make(b, m);
            for (std::size_t len = 0; len <= 4; ++len) {
                for (const auto& word : oracle::all_words(len, m)) {
                    const auto image = substitution_apply(word, p);
                    for (std::uint32_t x = 0; x < m; ++x) {
                        EXPECT_EQ(apply_element(pi(x, m), image), substitution_apply(apply_element(pi(x, m), word), p));
                        EXPECT_EQ(apply_element(psi(x, m), image),
                                  substitution_apply(apply_element(psi(std::int64_t{x} - b + 1, m), word), p));
                    }
                }
            }
        }
    }
}

TEST(Commutation, OppositeShiftFailsWhenTwiceBMinusOneIsNonzero) {
    // Psi_0(phi(0)) = Psi_0(01) = 20 = phi(2) over Z_3, while Psi_{0+b-1}(0) = 1.
    const auto p = Params::make(2, 3);
    const Word zero{0};
    EXPECT_EQ(apply_element(psi(0, 3), substitution_apply(zero, p)), parse_word("20", 3));
    EXPECT_NE(apply_element(psi(0, 3), substitution_apply(zero, p)),
              substitution_apply(apply_element(psi(1, 3), zero), p));
}

TEST(Conjugate, Examples) {
    EXPECT_EQ(conjugate_antimorphism(pi(0, 4), psi(3, 4)), psi(3, 4));
    EXPECT_EQ(conjugate_antimorphism(pi(1, 3), psi(0, 3)), psi(2, 3));
    EXPECT_EQ(conjugate_antimorphism(psi(0, 3), psi(0, 3)), psi(0, 3));
    EXPECT_THROW(conjugate_antimorphism(pi(1, 3), pi(1, 3)), std::invalid_argument);
}

TEST(Conjugate, IsAlwaysAnAntimorphism) {
    for (std::uint32_t m = 1; m <= 6; ++m) {
        for (const auto& nu : all_elements(m)) {
            for (std::uint32_t x = 0; x < m; ++x) {
                const auto c = conjugate_antimorphism(nu, psi(x, m));
                EXPECT_TRUE(c.is_antimorphism());
                EXPECT_EQ(c, compose(compose(nu, psi(x, m)), nu.inverse()));
            }
        }
    }
}

TEST(Elements, Listing) {
    EXPECT_EQ(all_elements(1), (std::vector{pi(0, 1), psi(0, 1)}));
    EXPECT_EQ(all_elements(2), (std::vector{pi(0, 2), pi(1, 2), psi(0, 2), psi(1, 2)}));
    EXPECT_EQ(all_elements(3).size(), 6u);
    for (std::uint32_t m = 1; m <= 7; ++m) {
        const auto g = all_elements(m);
        EXPECT_EQ(std::set<GroupElement>(g.begin(), g.end()).size(), 2u * m);
        EXPECT_TRUE(std::is_sorted(g.begin(), g.end()));
    }
}

TEST(Elements, InvolutiveAntimorphisms) {
    EXPECT_EQ(involutive_antimorphisms(2), (std::vector{psi(0, 2), psi(1, 2)}));
    EXPECT_EQ(involutive_antimorphisms(3), (std::vector{psi(0, 3), psi(1, 3), psi(2, 3)}));
    EXPECT_EQ(involutive_antimorphisms(1), (std::vector{psi(0, 1)}));
}

TEST(Elements, Rendering) {
    EXPECT_EQ(to_string(pi(2, 5)), "Pi_2");
    EXPECT_EQ(to_string(psi(-1, 5)), "Psi_4");
}

}  // namespace
}  // namespace gtm
