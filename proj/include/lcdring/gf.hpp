/**
 * @file gf.hpp
 * @brief Finite fields F_q, q = p^m, p odd.
 *
 * Elements are encoded as integers in [0, q): the polynomial-basis coefficient
 * vector (c_0, ..., c_{m-1}) maps to c_0 + c_1 p + ... + c_{m-1} p^{m-1}. The
 * numeric order of the encoding is therefore lexicographic on
 * (c_{m-1}, ..., c_0), which is the canonical element order used throughout.
 *
 * Built-in moduli (used when none is supplied):
 *
 *     F_9  : x^2 + 2x + 2      F_25 : x^2 + 4x + 2
 *     F_27 : x^3 + 2x + 1      F_49 : x^2 + 6x + 3
 *
 * These are the Conway polynomials, so the residue class of x is primitive and
 * is printed as `w`. Other extension degrees fall back to the first monic
 * irreducible polynomial in canonical order.
 */
#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "lcdring/error.hpp"

namespace lcdring {

using Elem = std::uint32_t;

class Field {
public:
    /// Largest supported field order.
    static constexpr std::uint32_t kMaxOrder = 1u << 20;

    /// Builds F_{p^m}. `modulus` is monic, ascending coefficients, degree m.
    static Field make(std::uint32_t p, std::uint32_t m = 1,
                      std::optional<std::vector<std::uint32_t>> modulus = std::nullopt);

    std::uint32_t characteristic() const noexcept;
    std::uint32_t degree() const noexcept;
    std::uint32_t order() const noexcept;
    /// Ascending coefficients of the defining polynomial; {0, 1} (i.e. x) for m = 1.
    const std::vector<std::uint32_t>& modulus() const noexcept;

    Elem zero() const noexcept { return 0; }
    Elem one() const noexcept { return 1; }
    Elem primitive() const noexcept;

    /// Image of an integer in the prime subfield.
    Elem from_int(long long v) const noexcept;
    bool in_prime_subfield(Elem a) const noexcept { return a < characteristic(); }

    Elem add(Elem a, Elem b) const noexcept;
    Elem sub(Elem a, Elem b) const noexcept;
    Elem neg(Elem a) const noexcept;
    Elem mul(Elem a, Elem b) const noexcept;
    Elem div(Elem a, Elem b) const;
    Elem inv(Elem a) const;
    Elem pow(Elem a, long long k) const;

    /// Inverse by extended Euclid against the modulus (independent of the tables).
    Elem inv_euclid(Elem a) const;
    /// Multiplication directly in the polynomial basis (independent of the tables).
    Elem mul_basis(Elem a, Elem b) const;

    bool is_square(Elem a) const;
    std::uint32_t multiplicative_order(Elem a) const;
    /// Discrete logarithm to base primitive(); a must be nonzero.
    std::uint32_t log(Elem a) const;
    Elem exp(long long k) const noexcept;

    std::vector<std::uint32_t> coefficients(Elem a) const;
    Elem from_coefficients(std::span<const std::uint32_t> c) const;

    /// The e distinct e-th roots of unity in canonical order.
    std::vector<Elem> nth_roots_of_unity(std::uint32_t e) const;

    /// Prime-subfield elements as decimals, others as `w^k` (`w` for k = 1).
    std::string format(Elem a) const;
    /// Accepts decimals (reduced mod p), `w`, `w^k`, optionally negated with a leading '-'.
    Elem parse(std::string_view text) const;

    /// Structural equality: same p, m and modulus.
    bool operator==(const Field& other) const noexcept;

private:
    struct Impl;
    explicit Field(std::shared_ptr<const Impl> impl) : impl_(std::move(impl)) {}
    std::shared_ptr<const Impl> impl_;
};

/// A field element that remembers its field; mixing fields throws FieldMismatch.
class FieldElement {
public:
    FieldElement(Field field, Elem value) : field_(std::move(field)), value_(value) {}

    const Field& field() const noexcept { return field_; }
    Elem value() const noexcept { return value_; }
    bool is_zero() const noexcept { return value_ == 0; }

    FieldElement operator+(const FieldElement& o) const;
    FieldElement operator-(const FieldElement& o) const;
    FieldElement operator*(const FieldElement& o) const;
    FieldElement operator/(const FieldElement& o) const;
    FieldElement operator-() const;
    FieldElement pow(long long k) const;
    FieldElement inv() const;
    bool is_square() const;

    bool operator==(const FieldElement& o) const;
    std::string to_string() const { return field_.format(value_); }

private:
    void check_same(const FieldElement& o) const;
    Field field_;
    Elem value_;
};

bool is_prime(std::uint64_t n) noexcept;
/// Distinct prime divisors in increasing order.
std::vector<std::uint64_t> prime_divisors(std::uint64_t n);

}  // namespace lcdring
