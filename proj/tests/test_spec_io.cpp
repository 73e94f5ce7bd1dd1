#include <gtest/gtest.h>

#include "lcdring/spec_io.hpp"
#include "lcdring/tables.hpp"

using namespace lcdring;
using nlohmann::json;

TEST(SpecIo, RoundTrip) {
    const json j = json::parse(R"({"p":5,"e":2,"n":10,"g":[[1,4],[1,3,0,2,4]],"M":[[3,2],[2,2]],"label":"ex"})");
    const auto spec = code_from_json(j);
    EXPECT_EQ(spec.label, "ex");
    EXPECT_EQ(spec.code.components()[0].to_tuple(), "(1,4)");
    const json back = code_to_json(spec.code, spec.label);
    EXPECT_FALSE(back.contains("roots"));
    const auto again = code_from_json(back);
    EXPECT_EQ(again.code.components(), spec.code.components());
    EXPECT_EQ(again.code.gray_matrix()->rows(), spec.code.gray_matrix()->rows());
}

TEST(SpecIo, NegativeEntriesAndRoots) {
    const json j = json::parse(R"({"p":7,"e":3,"n":3,"g":[[1,-1],[1],[1,1,1]],"roots":[4,2,1]})");
    const auto spec = code_from_json(j);
    EXPECT_EQ(spec.code.components()[0].to_tuple(), "(1,6)");
    const json back = code_to_json(spec.code);
    ASSERT_TRUE(back.contains("roots"));
    EXPECT_EQ(back["roots"], json::parse("[4,2,1]"));
}

TEST(SpecIo, ExtensionFieldStrings) {
    const Field f9 = Field::make(3, 2);
    const Elem w = f9.parse("w");
    EXPECT_EQ(elem_to_json(f9, 2), json(2));
    EXPECT_TRUE(elem_to_json(f9, w).is_string());
    EXPECT_EQ(elem_from_json(f9, elem_to_json(f9, w)), w);
    for (Elem x = 0; x < 9; ++x) EXPECT_EQ(elem_from_json(f9, elem_to_json(f9, x)), x);
}

TEST(SpecIo, Errors) {
    auto code_of = [](const char* s) {
        try {
            code_from_json(json::parse(s));
        } catch (const Error& e) {
            return e.code();
        }
        return ErrorCode::InvalidArgument;  // sentinel: nothing thrown
    };
    EXPECT_EQ(code_of(R"({"e":2,"n":6,"g":[[1],[1]]})"), ErrorCode::ParseError);
    EXPECT_EQ(code_of(R"({"p":5,"e":2,"n":6,"g":"x"})"), ErrorCode::ParseError);
    EXPECT_EQ(code_of(R"({"p":5,"e":2,"n":-6,"g":[[1],[1]]})"), ErrorCode::ParseError);
    EXPECT_EQ(code_of(R"({"p":5,"e":2,"n":6,"g":[[1],[true]]})"), ErrorCode::ParseError);
    EXPECT_EQ(code_of(R"({"p":5,"e":2,"n":6,"g":[[1,1,1,1],[1]]})"), ErrorCode::NotADivisor);
    EXPECT_EQ(code_of(R"({"p":6,"e":2,"n":6,"g":[[1],[1]]})"), ErrorCode::NotPrime);
}

TEST(Tables, FixtureCounts) {
    std::size_t t1 = 0, t2 = 0, t3 = 0;
    for (const auto& f : code_fixtures()) {
        t1 += f.table == "tab1";
        t2 += f.table == "tab2";
        t3 += f.table == "tab3";
    }
    EXPECT_EQ(t1, 22u);
    EXPECT_EQ(t2, 7u);
    EXPECT_EQ(t3, 10u);
    EXPECT_FALSE(idempotent_fixtures().empty());
}

TEST(Tables, ReplayIdempotents) {
    for (const auto& r : replay_tables("tabA")) EXPECT_EQ(r.status, RowStatus::Pass) << r.label << " " << r.detail;
}

TEST(Tables, ReplayTab3) {
    for (const auto& r : replay_tables("tab3")) EXPECT_EQ(r.status, RowStatus::Pass) << r.label << " " << r.detail;
}

TEST(Tables, RejectsUnknownTable) { EXPECT_THROW(replay_tables("tab9"), Error); }
