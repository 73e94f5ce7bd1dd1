/**
 * @file poly.hpp
 * @brief Dense univariate polynomials over F_q and their factorization.
 *
 * Coefficients are stored in ascending order with no trailing zeros; the zero
 * polynomial has degree kZeroDegree. The text form follows the coefficient
 * tuple convention of the code tables: `(1,3,0,2,4)` is x^4 + 3x^3 + 2x + 4.
 */
#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "lcdring/gf.hpp"

namespace lcdring {

class Poly {
public:
    static constexpr int kZeroDegree = -1;

    explicit Poly(Field field) : field_(std::move(field)) {}
    Poly(Field field, std::vector<Elem> ascending);

    static Poly constant(const Field& f, Elem c);
    static Poly monomial(const Field& f, Elem c, std::size_t degree);
    static Poly x_n_minus_1(const Field& f, std::size_t n);
    static Poly from_descending(const Field& f, const std::vector<Elem>& descending);

    const Field& field() const noexcept { return field_; }
    const std::vector<Elem>& coeffs() const noexcept { return c_; }
    int degree() const noexcept { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const noexcept { return c_.empty(); }
    bool is_one() const noexcept { return c_.size() == 1 && c_[0] == 1; }
    bool is_monic() const noexcept { return !c_.empty() && c_.back() == 1; }
    Elem coeff(std::size_t i) const noexcept { return i < c_.size() ? c_[i] : 0; }
    Elem leading() const noexcept { return c_.empty() ? 0 : c_.back(); }
    std::vector<Elem> descending() const { return {c_.rbegin(), c_.rend()}; }

    Elem eval(Elem x) const;
    Poly monic() const;
    Poly derivative() const;
    Poly scaled(Elem s) const;
    Poly shifted(std::size_t k) const;  ///< x^k * this

    Poly operator+(const Poly& o) const;
    Poly operator-(const Poly& o) const;
    Poly operator*(const Poly& o) const;
    Poly operator-() const;
    bool operator==(const Poly& o) const;

    /// Canonical order: degree first, then coefficients from the leading term down.
    bool canonical_less(const Poly& o) const;

    /// `(1,3,0,2,4)`
    std::string to_tuple() const;
    /// `x^4 + 3x^3 + 2x + 4`
    std::string to_string(char var = 'x') const;

private:
    void check_same(const Poly& o) const;
    void trim();
    Field field_;
    std::vector<Elem> c_;
};

/// Parses `(1,3,0,2,4)` or `1,3,0,2,4` (descending coefficients).
Poly parse_tuple(const Field& f, std::string_view text);

std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b);
Poly operator%(const Poly& a, const Poly& b);
bool divides(const Poly& d, const Poly& f);

/// Monic gcd; gcd(0, 0) is an error.
Poly gcd(const Poly& a, const Poly& b);

struct Xgcd {
    Poly g;  ///< monic gcd
    Poly z;  ///< coefficient of a
    Poly h;  ///< coefficient of b
};
/// z*a + h*b == g with deg z < deg b - deg g and deg h < deg a - deg g.
Xgcd xgcd(const Poly& a, const Poly& b);

Poly pow_mod(const Poly& base, std::uint64_t k, const Poly& mod);
Poly pow(const Poly& base, std::uint64_t k);

struct Reciprocal {
    Poly poly;
    bool degree_preserved;  ///< false when f(0) == 0
};
/// x^{deg f} f(1/x): the coefficient vector reversed.
Reciprocal reciprocal(const Poly& f);

/// True iff the monic normalization of the reciprocal equals f. Requires f monic with f(0) != 0.
bool is_self_reciprocal(const Poly& f);

struct Factor {
    Poly poly;  ///< monic irreducible
    std::uint32_t multiplicity;
};

struct Factorization {
    Elem unit = 0;
    std::vector<Factor> factors;  ///< canonical order, pairwise distinct

    Poly product(const Field& f) const;
    std::string to_string() const;
};

inline constexpr std::uint64_t kDefaultSeed = 0x5eed'1cd5'eed5ULL;

/// Square-free decomposition, distinct-degree then equal-degree (Cantor-Zassenhaus) splitting.
Factorization factor(const Poly& f, std::uint64_t seed = kDefaultSeed);

/// x^n - 1 = prod f_i^{p^a} with n = p^a n' and f_i the factors of x^{n'} - 1.
Factorization factor_xn_minus_1(const Field& f, std::size_t n, std::uint64_t seed = kDefaultSeed);

}  // namespace lcdring
