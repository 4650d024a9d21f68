#include "ramsey/search.hpp"

#include "ramsey/errors.hpp"

#include <doctest.h>

#include <stdexcept>

using namespace ramsey;

TEST_CASE("good colorings exist below the Ramsey numbers") {
    // R_1(3) = 3: K_2 yes, K_3 no
    ColoringSearch at2 = exists_good_coloring(2, 1);
    REQUIRE(at2.witness);
    CHECK(verify_witness(*at2.witness, 1, 2));
    CHECK_FALSE(exists_good_coloring(3, 1).witness);

    // R_2(3) = 6: K_5 yes, K_6 no
    ColoringSearch at5 = exists_good_coloring(5, 2);
    REQUIRE(at5.witness);
    CHECK(verify_witness(*at5.witness, 2, 5));
    CHECK(at5.nodes > 0);
    ColoringSearch at6 = exists_good_coloring(6, 2);
    CHECK_FALSE(at6.witness);
    CHECK(at6.nodes > 0);
}

TEST_CASE("absence is monotone in N") {
    // no triangle-free 2-coloring of K_6 implies none of K_7 either
    CHECK_FALSE(exists_good_coloring(6, 2).witness);
    CHECK_FALSE(exists_good_coloring(7, 2).witness);
}

TEST_CASE("searcher output always satisfies the checker") {
    for (unsigned N = 2; N <= 8; ++N) {
        ColoringSearch r = exists_good_coloring(N, 3);
        if (r.witness) {
            CHECK(verify_witness(*r.witness, 3, N));
            CHECK_FALSE(find_mono_triangle(*r.witness));
        }
    }
}

TEST_CASE("identical results for every worker count") {
    for (auto [N, n] : {std::pair<unsigned, unsigned>{5, 2}, {6, 2}, {8, 3}}) {
        ColoringSearch base = exists_good_coloring(N, n, {}, 1);
        for (unsigned workers : {2u, 3u, 8u}) {
            ColoringSearch other = exists_good_coloring(N, n, {}, workers);
            CHECK_EQ(base.nodes, other.nodes);
            CHECK_EQ(base.witness.has_value(), other.witness.has_value());
            if (base.witness && other.witness)
                CHECK(*base.witness == *other.witness);
        }
    }
}

TEST_CASE("budget exhaustion is a distinct outcome, not a verdict") {
    SearchBudget tiny{10};
    try {
        (void)exists_good_coloring(6, 2, tiny);
        FAIL("expected BudgetExceeded");
    } catch (const BudgetExceeded& e) {
        CHECK_EQ(e.nodes(), 10);
    }
    // the same instance with room to finish proves absence
    CHECK_FALSE(exists_good_coloring(6, 2, SearchBudget{1u << 20}).witness);
}

TEST_CASE("search domain errors") {
    CHECK_THROWS_AS((void)exists_good_coloring(65, 2), std::domain_error);
    CHECK_THROWS_AS((void)exists_good_coloring(5, 0), std::domain_error);
}

TEST_CASE("Schur numbers 1, 4, 13 with frozen node counts") {
    SchurSearch s1 = schur_number(1, 10);
    CHECK_FALSE(s1.exceeds_limit);
    CHECK_EQ(s1.value, 1);
    CHECK_EQ(s1.nodes, 1);

    SchurSearch s2 = schur_number(2, 10);
    CHECK_FALSE(s2.exceeds_limit);
    CHECK_EQ(s2.value, 4);
    CHECK_EQ(s2.nodes, 5);
    REQUIRE(s2.witness);
    CHECK_EQ(s2.witness->block(1), 0);
    CHECK_EQ(s2.witness->block(2), 1);
    CHECK_EQ(s2.witness->block(3), 1);
    CHECK_EQ(s2.witness->block(4), 0);
    CHECK_FALSE(find_schur_violation(*s2.witness));

    SchurSearch s3 = schur_number(3, 20);
    CHECK_FALSE(s3.exceeds_limit);
    CHECK_EQ(s3.value, 13);
    CHECK_EQ(s3.nodes, 326);
    REQUIRE(s3.witness);
    CHECK_EQ(s3.witness->bound(), 13);
    CHECK_FALSE(find_schur_violation(*s3.witness));
}

TEST_CASE("Schur values are nondecreasing in the block count") {
    unsigned previous = 0;
    for (unsigned n = 1; n <= 3; ++n) {
        SchurSearch s = schur_number(n, 14);
        CHECK_FALSE(s.exceeds_limit);
        CHECK(s.value >= previous);
        previous = s.value;
    }
}

TEST_CASE("a window no larger than S(n) reports exceeds-limit") {
    SchurSearch s = schur_number(2, 4);
    CHECK(s.exceeds_limit);
    CHECK_EQ(s.value, 4);
    REQUIRE(s.witness);
    CHECK_EQ(s.witness->bound(), 4);
    CHECK_FALSE(find_schur_violation(*s.witness));

    SchurSearch t = schur_number(3, 13);
    CHECK(t.exceeds_limit);
    CHECK_EQ(t.value, 13);

    // smallest legal window
    SchurSearch u = schur_number(1, 1);
    CHECK(u.exceeds_limit);
    CHECK_EQ(u.value, 1);
}

TEST_CASE("Schur search respects its budget") {
    try {
        (void)schur_number(4, 50, SearchBudget{1000});
        FAIL("expected BudgetExceeded");
    } catch (const BudgetExceeded& e) {
        CHECK_EQ(e.nodes(), 1000);
    }
}

TEST_CASE("Schur search domain errors") {
    CHECK_THROWS_AS((void)schur_number(0, 10), std::domain_error);
    CHECK_THROWS_AS((void)schur_number(2, 0), std::domain_error);
    CHECK_THROWS_AS((void)schur_number(2, kMaxSchurLimit + 1), std::domain_error);
}
