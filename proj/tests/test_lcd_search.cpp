#include <gtest/gtest.h>

#include <set>

#include "lcdring/lcd_search.hpp"

using namespace lcdring;

namespace {

bool has_params(const SearchOutcome& o, std::size_t n, std::size_t k, std::size_t d) {
    return std::any_of(o.results.begin(), o.results.end(),
                       [&](const SearchResult& r) { return r.length == n && r.k == k && r.d == d; });
}

std::vector<std::string> tuples_of(const SearchOutcome& o) {
    std::vector<std::string> out;
    for (const auto& r : o.results) {
        std::string s;
        for (const auto& g : r.code.components()) s += g.to_tuple();
        out.push_back(s);
    }
    return out;
}

}  // namespace

TEST(Divisors, CountsMatchFactorization) {
    const Field f5 = Field::make(5);
    EXPECT_EQ(divisors_of_xn_minus_1(f5, 6).size(), 16u);   // four distinct irreducible factors
    EXPECT_EQ(divisors_of_xn_minus_1(f5, 10).size(), 36u);  // (x+1)^5 (x+4)^5
    const auto one = divisors_of_xn_minus_1(f5, 1);
    ASSERT_EQ(one.size(), 2u);
    EXPECT_EQ(one[0], Poly::constant(f5, 1));
    EXPECT_EQ(one[1], parse_tuple(f5, "(1,4)"));
}

TEST(Divisors, AllDivideAndAreDistinctAndSorted) {
    for (std::uint32_t p : {3u, 5u, 7u, 13u}) {
        const Field f = Field::make(p);
        for (std::size_t n = 1; n <= 14; ++n) {
            const auto divs = divisors_of_xn_minus_1(f, n);
            const Poly xn = Poly::x_n_minus_1(f, n);
            std::set<std::string> seen;
            for (std::size_t i = 0; i < divs.size(); ++i) {
                ASSERT_TRUE((xn % divs[i]).is_zero());
                ASSERT_TRUE(divs[i].is_monic());
                ASSERT_TRUE(seen.insert(divs[i].to_tuple()).second);
                if (i > 0) ASSERT_TRUE(divs[i - 1].canonical_less(divs[i]));
            }
        }
    }
}

TEST(Divisors, BudgetExceeded) {
    try {
        divisors_of_xn_minus_1(Field::make(5), 10, 20);
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), ErrorCode::BudgetExceeded);
    }
}

TEST(Divisors, SelfReciprocal) {
    const Field f5 = Field::make(5);
    std::set<std::string> got;
    for (const auto& r : self_reciprocal_divisors(f5, 6)) {
        EXPECT_TRUE(r.multiplicity_compliant);
        got.insert(r.poly.to_tuple());
    }
    for (const char* t : {"(1)", "(1,4)", "(1,1,1)", "(1,2,2,1)", "(1,0,0,0,0,0,4)"}) EXPECT_TRUE(got.count(t)) << t;
    EXPECT_EQ(got.size(), 16u);  // every irreducible factor of x^6 - 1 over F_5 is self-reciprocal
    const Field f7 = Field::make(7);
    std::set<std::string> g7;
    for (const auto& r : self_reciprocal_divisors(f7, 3)) g7.insert(r.poly.to_tuple());
    EXPECT_TRUE(g7.count("(1,6)"));
    EXPECT_TRUE(g7.count("(1,1,1)"));
    // non-compliant: partial powers of x + 4 in x^10 - 1 over F5
    bool some_non_compliant = false;
    for (const auto& r : self_reciprocal_divisors(f5, 10)) some_non_compliant |= !r.multiplicity_compliant;
    EXPECT_TRUE(some_non_compliant);
}

TEST(Search, NonFreeLcdOverF5) {
    SearchSpec s;
    s.p = 5;
    s.e = 2;
    s.n_min = s.n_max = 6;
    s.gray_rows = {{1, 4}, {1, 1}};
    s.lcd_only = true;
    s.non_free_only = true;
    const auto out = search(s);
    ASSERT_FALSE(out.results.empty());
    EXPECT_TRUE(has_params(out, 12, 8, 4));
    for (const auto& r : out.results) {
        EXPECT_TRUE(r.lcd);
        EXPECT_FALSE(r.free);
        EXPECT_EQ(r.hull, 0u);
        EXPECT_EQ(r.singleton_defect, r.length - r.k + 1 - r.d);
    }
    for (std::size_t i = 1; i < out.results.size(); ++i) {
        const auto& a = out.results[i - 1];
        const auto& b = out.results[i];
        EXPECT_TRUE(a.d > b.d || (a.d == b.d && a.k >= b.k));
    }
    EXPECT_FALSE(out.truncated);
}

TEST(Search, LcdLength3OverF7) {
    SearchSpec s;
    s.p = 7;
    s.e = 2;
    s.n_min = s.n_max = 3;
    s.gray_rows = {{1, 6}, {1, 1}};
    s.lcd_only = true;
    const auto out = search(s);
    EXPECT_TRUE(has_params(out, 6, 3, 4));
}

TEST(Search, LengthOneUnfiltered) {
    SearchSpec s;
    s.p = 3;
    s.e = 2;
    s.gray_rows = {{1, 1}, {1, 2}};
    s.allow_any_gamma = true;
    const auto out = search(s);
    EXPECT_EQ(out.results.size(), 4u);
    EXPECT_EQ(out.examined, 4u);
}

TEST(Search, DeterministicAcrossJobs) {
    SearchSpec s;
    s.p = 5;
    s.e = 2;
    s.n_min = 4;
    s.n_max = 6;
    s.gray_rows = {{1, 4}, {1, 1}};
    const auto a = search(s);
    s.jobs = 3;
    const auto b = search(s);
    EXPECT_EQ(tuples_of(a), tuples_of(b));
    s.seed = 99;
    EXPECT_EQ(tuples_of(search(s)), tuples_of(a));
}

TEST(Search, LcdFlagAgreesWithHull) {
    SearchSpec s;
    s.p = 5;
    s.e = 2;
    s.n_min = s.n_max = 10;
    s.gray_rows = {{1, 4}, {1, 1}};
    s.max_combinations = 400;
    const auto out = search(s);
    for (const auto& r : out.results) EXPECT_EQ(r.lcd, r.hull == 0);
}

TEST(Search, TruncationIsReported) {
    SearchSpec s;
    s.p = 5;
    s.e = 2;
    s.n_min = s.n_max = 6;
    s.gray_rows = {{1, 4}, {1, 1}};
    s.max_combinations = 10;
    const auto out = search(s);
    EXPECT_TRUE(out.truncated);
    EXPECT_EQ(out.examined, 10u);
    EXPECT_FALSE(out.truncation_notes.empty());
}

TEST(Search, FiltersApply) {
    SearchSpec s;
    s.p = 5;
    s.e = 2;
    s.n_min = s.n_max = 6;
    s.gray_rows = {{1, 4}, {1, 1}};
    s.min_k = 8;
    s.min_d = 3;
    for (const auto& r : search(s).results) {
        EXPECT_GE(r.k, 8u);
        EXPECT_GE(r.d, 3u);
    }
    s.n_min = 0;
    EXPECT_THROW(search(s), Error);
}

TEST(Labels, MdsAndTable) {
    EXPECT_EQ(optimality_label(11, 10, 6, 5), "MDS");
    EXPECT_EQ(optimality_label(5, 12, 8, 4), "Optimal");
    EXPECT_EQ(optimality_label(5, 12, 8, 3), "");
    EXPECT_EQ(optimality_label(5, 12, 8, 5), "MDS");
    EXPECT_FALSE(best_known_table().empty());
    for (const auto& e : best_known_table()) {
        EXPECT_TRUE(e.label == "Optimal" || e.label == "BKLC") << e.label;
        EXPECT_LE(e.d, e.n - e.k + 1);
    }
}

TEST(Search, SwappingComponentsWithMatrixRowsKeepsParameters) {
    const Field f = Field::make(5);
    const Ring r = Ring::make(f, 2);
    const auto m = validate_matrix(parse_matrix(f, "1,4;1,1"), r);
    const auto swapped = validate_matrix(parse_matrix(f, "1,1;1,4"), r);
    const auto divs = divisors_of_xn_minus_1(f, 6);
    for (const auto& a : divs)
        for (const auto& b : divs) {
            const auto x = gray_image(RingCyclicCode::build(r, 6, {a, b}, m));
            const auto y = gray_image(RingCyclicCode::build(r, 6, {b, a}, swapped));
            ASSERT_EQ(x.k(), y.k());
            ASSERT_EQ(min_distance(x).d, min_distance(y).d);
        }
}
