#include <gtest/gtest.h>

#include <random>

#include "lcdring/lcd_search.hpp"
#include "lcdring/ring_cyclic.hpp"

using namespace lcdring;

namespace {

RingCyclicCode make(std::uint32_t p, std::uint32_t e, std::size_t n, const std::vector<std::string>& g,
                    const std::string& m = "") {
    const Field f = Field::make(p);
    const Ring r = Ring::make(f, e);
    std::vector<Poly> comps;
    for (const auto& t : g) comps.push_back(parse_tuple(f, t));
    std::optional<GrayMatrix> gm;
    if (!m.empty()) gm = validate_matrix(parse_matrix(f, m), r);
    return RingCyclicCode::build(r, n, comps, gm);
}

// Dual of a field code computed independently by null space.
bool same_code(const LinearCode& a, const LinearCode& b) { return a == b; }

}  // namespace

TEST(RingCyclic, BuildValidates) {
    const Field f = Field::make(5);
    const Ring r = Ring::make(f, 2);
    EXPECT_THROW(RingCyclicCode::build(r, 6, {parse_tuple(f, "(1,4)")}), Error);
    EXPECT_THROW(RingCyclicCode::build(r, 6, {parse_tuple(f, "(1,4)"), parse_tuple(f, "(1,2)")}), Error);
    EXPECT_THROW(RingCyclicCode::build(r, 6, {parse_tuple(f, "(1,4)"), parse_tuple(f, "(2,3)")}), Error);
    try {
        RingCyclicCode::build(r, 4, {parse_tuple(f, "(1,4)"), parse_tuple(f, "(1,1,1)")});
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), ErrorCode::NotADivisor);
    }
}

TEST(RingCyclic, Example31) {
    const auto c = make(5, 2, 10, {"(1,4)", "(1,3,0,2,4)"}, "3,2;2,2");
    const auto img = gray_image(c);
    EXPECT_EQ(img.n(), 20u);
    EXPECT_EQ(img.k(), 15u);
    EXPECT_EQ(min_distance(img).d, 4u);
    EXPECT_FALSE(is_free(c));
    // x^10 - 1 = (x+1)^5 (x+4)^5, g_1 = x + 4 carries multiplicity 1, not 5
    const auto cert = is_lcd(c);
    EXPECT_FALSE(cert.lcd);
    EXPECT_FALSE(cert.coprime_length);
    EXPECT_EQ(cert.failing_component, 0u);
    EXPECT_GT(hull_dim(img), 0u);
}

TEST(RingCyclic, Example32IsFreeMds) {
    const auto c = make(11, 2, 5, {"(1,7,3)", "(1,2,9)"}, "9,2;2,2");
    EXPECT_TRUE(is_free(c));
    const auto img = gray_image(c);
    EXPECT_EQ(img.k(), 6u);
    EXPECT_EQ(min_distance(img).d, 5u);
}

TEST(RingCyclic, Example41NonFreeLcd) {
    const auto c = make(5, 2, 6, {"(1,4)", "(1,2,2,1)"}, "1,4;1,1");
    EXPECT_FALSE(is_free(c));
    EXPECT_TRUE(is_lcd(c).lcd);
    const auto img = gray_image(c);
    EXPECT_EQ(hull_dim(img), 0u);
    EXPECT_EQ(img.k(), 8u);
    EXPECT_EQ(min_distance(img).d, 4u);
}

TEST(RingCyclic, Example42ThreeComponents) {
    const Field f = Field::make(7);
    const Ring r = Ring::make(f, 3, std::vector<Elem>{4, 2, 1});
    const auto gm = validate_matrix(parse_matrix(f, "2,1,2;5,2,1;1,2,5"), r);
    const auto c =
        RingCyclicCode::build(r, 3, {parse_tuple(f, "(1,6)"), parse_tuple(f, "(1)"), parse_tuple(f, "(1,1,1)")}, gm);
    EXPECT_FALSE(is_free(c));
    EXPECT_TRUE(is_lcd(c).lcd);
    const auto img = gray_image(c);
    EXPECT_EQ(img.n(), 9u);
    EXPECT_EQ(img.k(), 6u);
    EXPECT_EQ(min_distance(img).d, 3u);
    EXPECT_EQ(hull_dim(img), 0u);
}

TEST(RingCyclic, MultiplicityConditionWhenLengthSharesCharacteristic) {
    // g_2 = (x+1)(x+4)^3: self-reciprocal, but (x+4) has multiplicity 3 against 5
    const auto c = make(5, 2, 10, {"(1,4)", "(1,3,0,2,4)"});
    const auto cert = is_lcd(c);
    EXPECT_FALSE(cert.lcd);
    const auto ok = make(5, 2, 10, {"(1)", "(1,0,0,0,0,4)"});  // (x+4)^5 = x^5 - 1
    EXPECT_TRUE(is_lcd(ok).lcd);
    EXPECT_EQ(hull_dim(gray_image(ok, find_matrix(ok.ring()))), 0u);
}

TEST(RingCyclic, FullAndZeroCodes) {
    const auto full = make(7, 3, 4, {"(1)", "(1)", "(1)"});
    EXPECT_TRUE(is_lcd(full).lcd);
    EXPECT_TRUE(is_free(full));
    EXPECT_FALSE(is_self_dual(full));
    EXPECT_EQ(full.log_size(), 12u);
    const auto d = dual(full);
    for (const auto& g : d.components()) EXPECT_EQ(g, Poly::x_n_minus_1(full.field(), 4));
    EXPECT_EQ(d.log_size(), 0u);
}

TEST(RingCyclic, DualComponentsAreMonicReciprocalsOfCofactors) {
    const auto c = make(5, 2, 6, {"(1,4)", "(1,2,2,1)"});
    const auto d = dual(c);
    for (std::size_t i = 0; i < 2; ++i) {
        const Poly h = divmod(Poly::x_n_minus_1(c.field(), 6), c.components()[i]).first;
        Poly rev(c.field(), {h.coeffs().rbegin(), h.coeffs().rend()});
        EXPECT_EQ(d.components()[i], rev.monic());
        // orthogonality of the component codes
        const auto a = c.component_code(i), b = d.component_code(i);
        EXPECT_EQ(lcdring::dual(a), b);
    }
    EXPECT_EQ(dual(d).components(), c.components());
    EXPECT_EQ(c.log_size() + d.log_size(), 2 * 6u);
    EXPECT_EQ(c.dual_log_size(), d.log_size());
}

TEST(RingCyclic, RingGeneratorIdentity) {
    const auto c = make(5, 2, 10, {"(1,4)", "(1,3,0,2,4)"});
    const auto gen = ring_generator(c);
    EXPECT_EQ(ring_poly_mul(gen.g, gen.h), ring_x_n_minus_1(c.ring(), 10));
    // degrees 1 and 4: g has degree 4 with leading coefficient mu_2, a zero divisor
    ASSERT_EQ(gen.g.size(), 5u);
    EXPECT_EQ(gen.g.back(), c.ring().mu(1));
    EXPECT_FALSE(c.ring().is_unit(gen.g.back()));
    // equal components collapse to the common polynomial
    const auto same = make(5, 2, 6, {"(1,1,1)", "(1,1,1)"});
    const auto gs = ring_generator(same).g;
    ASSERT_EQ(gs.size(), 3u);
    for (const auto& x : gs) EXPECT_EQ(x, same.ring().one());
}

TEST(RingCyclic, FreeIffLeadingCoefficientIsUnit) {
    const Field f = Field::make(5);
    const Ring r = Ring::make(f, 2);
    const auto divs = divisors_of_xn_minus_1(f, 6);
    for (const auto& a : divs)
        for (const auto& b : divs) {
            const auto c = RingCyclicCode::build(r, 6, {a, b});
            const auto g = ring_generator(c).g;
            ASSERT_EQ(is_free(c), a.degree() == b.degree());
            ASSERT_EQ(is_free(c), r.is_unit(g.back()));
        }
}

TEST(RingCyclic, GrayImageSizeLaw) {
    const auto c = make(7, 3, 6, {"(1,6)", "(1,1,1)", "(1,0,0,0,0,0,6)"});
    const auto img = gray_image(c, find_matrix(c.ring()));
    EXPECT_EQ(img.n(), 18u);
    EXPECT_EQ(img.k(), c.log_size());
    EXPECT_EQ(img.k(), 5u + 4u + 0u);
    EXPECT_THROW(gray_image(c), Error);  // no Gray matrix attached
}

TEST(RingCyclic, GrayImageOfDualIsDualOfGrayImage) {
    std::mt19937 rng(21);
    for (auto [p, e, n] : std::vector<std::tuple<std::uint32_t, std::uint32_t, std::size_t>>{
             {5, 2, 6}, {7, 3, 6}, {13, 4, 4}, {7, 2, 7}, {5, 4, 5}}) {
        const Field f = Field::make(p);
        const Ring r = Ring::make(f, e);
        const auto gm = find_matrix(r);
        const auto divs = divisors_of_xn_minus_1(f, n);
        std::uniform_int_distribution<std::size_t> pick(0, divs.size() - 1);
        for (int t = 0; t < 10; ++t) {
            std::vector<Poly> comps;
            for (std::uint32_t i = 0; i < e; ++i) comps.push_back(divs[pick(rng)]);
            const auto c = RingCyclicCode::build(r, n, comps, gm);
            ASSERT_TRUE(same_code(gray_image(dual(c)), lcdring::dual(gray_image(c))));
            ASSERT_EQ(is_lcd(c).lcd, hull_dim(gray_image(c)) == 0);
            ASSERT_EQ(is_self_dual(c), lcdring::is_self_dual(gray_image(c)));
        }
    }
}

TEST(RingCyclic, NoSelfDualCodesInOddCharacteristic) {
    // x - 1 has odd multiplicity p^a in x^n - 1, so no component can equal its dual
    for (auto [p, n] : std::vector<std::pair<std::uint32_t, std::size_t>>{{5, 10}, {7, 7}, {3, 6}}) {
        const Field f = Field::make(p);
        const Ring r = Ring::make(f, 2);
        const auto gm = find_matrix(r);
        const auto divs = divisors_of_xn_minus_1(f, n);
        for (const auto& g : divs) {
            const Poly h = divmod(Poly::x_n_minus_1(f, n), g).first;
            Poly hs(f, {h.coeffs().rbegin(), h.coeffs().rend()});
            ASSERT_NE(cyclic_code(g, n), cyclic_code(hs.monic(), n));
        }
        for (const auto& a : divs)
            for (const auto& b : divs) {
                const auto c = RingCyclicCode::build(r, n, {a, b}, gm);
                ASSERT_FALSE(is_self_dual(c));
                ASSERT_FALSE(lcdring::is_self_dual(gray_image(c)));
            }
    }
}

TEST(RingLinear, DualViaNullSpaceMatchesComponents) {
    const Field f = Field::make(7);
    const Ring r = Ring::make(f, 3);
    const RingLinearCode c(r, 3, {{r.element({1, 2}), r.zero(), r.element({0, 0, 3})}, {r.mu(0), r.mu(1), r.one()}});
    const auto d = c.dual();
    EXPECT_EQ(c.fq_basis().rows() + d.fq_basis().rows(), 9u);
    for (std::size_t i = 0; i < 3; ++i) EXPECT_EQ(lcdring::dual(c.component(i)), d.component(i));
    const auto gm = find_matrix(r);
    EXPECT_EQ(d.gray_image(gm), lcdring::dual(c.gray_image(gm)));
}
