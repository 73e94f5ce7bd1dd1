#include <gtest/gtest.h>

#include <numeric>

#include "lcdring/gf.hpp"

using namespace lcdring;

namespace {

// Naive multiplicative order by repeated multiplication in the basis representation.
std::uint32_t naive_order(const Field& f, Elem a) {
    Elem x = a;
    std::uint32_t k = 1;
    while (x != 1) {
        x = f.mul_basis(x, a);
        ++k;
    }
    return k;
}

const std::vector<std::pair<std::uint32_t, std::uint32_t>> kSmallFields = {
    {3, 1}, {5, 1}, {7, 1}, {11, 1}, {13, 1}, {3, 2}, {5, 2}, {7, 2}, {3, 3}, {3, 4}};

}  // namespace

TEST(Field, PrimeFieldPrimitiveElement) {
    const Field f5 = Field::make(5);
    EXPECT_EQ(f5.order(), 5u);
    EXPECT_EQ(f5.primitive(), 2u);
    EXPECT_EQ(naive_order(f5, 2), 4u);
}

TEST(Field, F9ConwayModulusMakesWPrimitive) {
    const Field f9 = Field::make(3, 2);
    EXPECT_EQ(f9.modulus(), (std::vector<std::uint32_t>{2, 2, 1}));  // x^2 + 2x + 2
    const Elem w = 3;                                                   // residue class of x
    EXPECT_EQ(f9.primitive(), w);
    for (std::uint32_t k = 1; k < 8; ++k) EXPECT_NE(f9.pow(w, k), 1u) << k;
    EXPECT_EQ(f9.pow(w, 8), 1u);
    EXPECT_EQ(f9.format(w), "w");
    EXPECT_EQ(f9.format(f9.pow(w, 5)), "w^5");
}

TEST(Field, BuiltInModuliAreIrreducible) {
    // A quadratic or cubic is irreducible iff it has no root.
    for (auto [p, m] : std::vector<std::pair<std::uint32_t, std::uint32_t>>{{3, 2}, {5, 2}, {7, 2}, {3, 3}}) {
        const Field f = Field::make(p, m);
        const auto& mod = f.modulus();
        ASSERT_EQ(mod.size(), m + 1);
        for (std::uint32_t x = 0; x < p; ++x) {
            std::uint64_t v = 0;
            for (std::size_t i = mod.size(); i-- > 0;) v = (v * x + mod[i]) % p;
            EXPECT_NE(v, 0u) << "root " << x << " mod " << p;
        }
    }
}

TEST(Field, RejectsNonOddPrimes) {
    for (std::uint32_t p : {0u, 1u, 2u, 4u, 9u, 15u}) {
        try {
            Field::make(p);
            FAIL() << p;
        } catch (const Error& e) {
            EXPECT_EQ(e.code(), ErrorCode::NotPrime);
        }
    }
}

TEST(Field, RejectsReducibleOrMisshapedModulus) {
    // x^2 + 1 = (x + 2)(x + 3) over F_5
    EXPECT_THROW(Field::make(5, 2, std::vector<std::uint32_t>{1, 0, 1}), Error);
    try {
        Field::make(5, 2, std::vector<std::uint32_t>{1, 0, 1});
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), ErrorCode::ReducibleModulus);
    }
    EXPECT_THROW(Field::make(5, 2, std::vector<std::uint32_t>{2, 1}), Error);
    // x^2 + 2 is irreducible over F_5 (2 is a non-residue)
    const Field f = Field::make(5, 2, std::vector<std::uint32_t>{2, 0, 1});
    EXPECT_EQ(f.order(), 25u);
}

TEST(Field, SmallArithmeticFacts) {
    const Field f7 = Field::make(7);
    EXPECT_EQ(f7.div(3, 3), 1u);
    EXPECT_EQ(f7.mul(4, 2), 1u);
    const Field f5 = Field::make(5);
    EXPECT_EQ(f5.div(1, 2), 3u);
    EXPECT_EQ(f5.from_int(-2), 3u);
    EXPECT_THROW(f5.div(1, 0), Error);
    EXPECT_THROW(f5.inv(0), Error);
}

TEST(Field, TableMultiplicationMatchesBasisMultiplication) {
    for (auto [p, m] : kSmallFields) {
        const Field f = Field::make(p, m);
        for (Elem a = 0; a < f.order(); ++a)
            for (Elem b = 0; b < f.order(); ++b) ASSERT_EQ(f.mul(a, b), f.mul_basis(a, b)) << p << "^" << m;
    }
}

TEST(Field, InverseMatchesEuclid) {
    for (auto [p, m] : kSmallFields) {
        const Field f = Field::make(p, m);
        for (Elem a = 1; a < f.order(); ++a) {
            ASSERT_EQ(f.inv(a), f.inv_euclid(a));
            ASSERT_EQ(f.mul_basis(a, f.inv_euclid(a)), 1u);
        }
    }
}

TEST(Field, FieldAxiomsOnSamples) {
    for (auto [p, m] : kSmallFields) {
        const Field f = Field::make(p, m);
        const Elem q = f.order();
        for (Elem a = 0; a < q; a += 1 + q / 17)
            for (Elem b = 0; b < q; b += 1 + q / 13)
                for (Elem c = 0; c < q; c += 1 + q / 11) {
                    ASSERT_EQ(f.mul(a, f.add(b, c)), f.add(f.mul(a, b), f.mul(a, c)));
                    ASSERT_EQ(f.add(f.add(a, b), c), f.add(a, f.add(b, c)));
                    ASSERT_EQ(f.sub(f.add(a, b), b), a);
                }
    }
}

TEST(Field, PowerSemantics) {
    for (auto [p, m] : kSmallFields) {
        const Field f = Field::make(p, m);
        for (Elem a = 1; a < f.order(); ++a) {
            ASSERT_EQ(f.pow(a, f.order() - 1), 1u);
            ASSERT_EQ(f.pow(a, -1), f.inv(a));
            Elem acc = 1;
            for (int k = 0; k < 5; ++k) {
                ASSERT_EQ(f.pow(a, k), acc);
                acc = f.mul_basis(acc, a);
            }
        }
        EXPECT_EQ(f.pow(0, 0), 1u);
        EXPECT_EQ(f.pow(0, 3), 0u);
        EXPECT_THROW(f.pow(0, -1), Error);
    }
}

TEST(Field, PrimitiveElementHasFullOrder) {
    for (auto [p, m] : kSmallFields) {
        const Field f = Field::make(p, m);
        EXPECT_EQ(naive_order(f, f.primitive()), f.order() - 1);
        EXPECT_EQ(f.multiplicative_order(f.primitive()), f.order() - 1);
    }
}

TEST(Field, MultiplicativeOrderMatchesNaive) {
    const Field f = Field::make(3, 3);
    for (Elem a = 1; a < f.order(); ++a) EXPECT_EQ(f.multiplicative_order(a), naive_order(f, a));
}

TEST(Field, LogExpRoundTrip) {
    const Field f = Field::make(7, 2);
    for (Elem a = 1; a < f.order(); ++a) EXPECT_EQ(f.exp(f.log(a)), a);
}

TEST(Field, SquaresMatchEnumeration) {
    for (auto [p, m] : kSmallFields) {
        const Field f = Field::make(p, m);
        std::vector<bool> sq(f.order(), false);
        for (Elem x = 0; x < f.order(); ++x) sq[f.mul_basis(x, x)] = true;
        for (Elem a = 1; a < f.order(); ++a) ASSERT_EQ(f.is_square(a), sq[a]);
        EXPECT_THROW(f.is_square(0), Error);
    }
}

TEST(Field, RootsOfUnity) {
    const Field f7 = Field::make(7);
    EXPECT_EQ(f7.nth_roots_of_unity(3), (std::vector<Elem>{1, 2, 4}));
    EXPECT_EQ(f7.nth_roots_of_unity(2), (std::vector<Elem>{1, 6}));
    EXPECT_THROW(f7.nth_roots_of_unity(4), Error);
    const Field f9 = Field::make(3, 2);
    const auto r = f9.nth_roots_of_unity(4);
    ASSERT_EQ(r.size(), 4u);
    for (Elem x : r) EXPECT_EQ(f9.pow(x, 4), 1u);
}

TEST(Field, CoefficientsRoundTrip) {
    const Field f = Field::make(5, 2);
    for (Elem a = 0; a < f.order(); ++a) {
        const auto c = f.coefficients(a);
        ASSERT_EQ(c.size(), 2u);
        EXPECT_EQ(c[0] + 5 * c[1], a);
        EXPECT_EQ(f.from_coefficients(c), a);
    }
}

TEST(Field, FormatParseRoundTrip) {
    for (auto [p, m] : kSmallFields) {
        const Field f = Field::make(p, m);
        for (Elem a = 0; a < f.order(); ++a) ASSERT_EQ(f.parse(f.format(a)), a) << f.format(a);
    }
    const Field f9 = Field::make(3, 2);
    EXPECT_EQ(f9.parse("-w^2"), f9.neg(f9.pow(3, 2)));
    EXPECT_EQ(f9.parse("-2"), 1u);
    EXPECT_THROW(f9.parse("v"), Error);
    EXPECT_THROW(f9.parse(""), Error);
}

TEST(FieldElement, OperatorsAndMismatch) {
    const Field f7 = Field::make(7);
    const FieldElement a(f7, 3), b(f7, 5);
    EXPECT_EQ((a + b).value(), 1u);
    EXPECT_EQ((a - b).value(), 5u);
    EXPECT_EQ((a * b).value(), 1u);
    EXPECT_EQ((a / a).value(), 1u);
    EXPECT_EQ((-a).value(), 4u);
    EXPECT_EQ(a.inv().value(), 5u);
    EXPECT_EQ(a.pow(6).value(), 1u);
    EXPECT_FALSE(a.is_square());
    EXPECT_TRUE(FieldElement(f7, 2).is_square());
    const FieldElement c(Field::make(5), 3);
    try {
        (void)(a + c);
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.code(), ErrorCode::FieldMismatch);
    }
    EXPECT_THROW((void)(a / FieldElement(f7, 0)), Error);
}

TEST(Primes, Helpers) {
    EXPECT_TRUE(is_prime(2));
    EXPECT_TRUE(is_prime(49999));
    EXPECT_FALSE(is_prime(1));
    EXPECT_FALSE(is_prime(49));
    EXPECT_EQ(prime_divisors(360), (std::vector<std::uint64_t>{2, 3, 5}));
}
