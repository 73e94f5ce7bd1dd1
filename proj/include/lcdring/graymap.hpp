/**
 * @file graymap.hpp
 * @brief Gray maps R^n -> F_q^{en} defined by an e x e matrix M with M M^T = gamma I.
 *
 * Each ring coordinate r = sum s_i mu_i is sent to the block (s_1, ..., s_e) M.
 * The map is an F_q-linear bijection, isometric for the induced Gray weight,
 * and scales inner products by gamma, so it carries duals to duals.
 */
#pragma once

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "lcdring/ring.hpp"

namespace lcdring {

class GrayMatrix {
public:
    const Ring& ring() const noexcept { return ring_; }
    std::uint32_t e() const noexcept { return ring_.e(); }
    Elem gamma() const noexcept { return gamma_; }
    Elem at(std::size_t r, std::size_t c) const { return entries_[r * e() + c]; }
    std::span<const Elem> row(std::size_t r) const { return {entries_.data() + r * e(), e()}; }
    const std::vector<Elem>& entries() const noexcept { return entries_; }
    /// True when gamma^e is a square; always true for matrices from validate_matrix without the escape flag.
    bool gamma_condition() const;

    /// Rows joined by ';' and entries by ','.
    std::string to_string() const;
    std::vector<std::vector<Elem>> rows() const;

private:
    friend GrayMatrix validate_matrix(const std::vector<std::vector<Elem>>&, const Ring&, bool);
    GrayMatrix(Ring ring, std::vector<Elem> entries, Elem gamma)
        : ring_(std::move(ring)), entries_(std::move(entries)), gamma_(gamma) {}
    Ring ring_;
    std::vector<Elem> entries_;
    Elem gamma_;
};

/// Checks M M^T = gamma I with gamma != 0 and, unless `allow_any_gamma`, that gamma^e is a square.
/// Errors: NotGrayMatrix (shape, non-scalar M M^T, gamma = 0), GammaNotSquare.
GrayMatrix validate_matrix(const std::vector<std::vector<Elem>>& rows, const Ring& ring, bool allow_any_gamma = false);

/// First valid matrix in row-lexicographic canonical order; restricted to e <= 4, q <= 49.
/// Without `gamma`, candidates are tried in canonical order. Errors: SearchExhausted, InvalidArgument.
GrayMatrix find_matrix(const Ring& ring, std::optional<Elem> gamma = std::nullopt, bool allow_any_gamma = false);

/// `3,2;2,2` -> rows; entries parsed by the field (negative integers allowed).
std::vector<std::vector<Elem>> parse_matrix(const Field& f, std::string_view text);

/// Image of one ring element: decompose(r) * M.
std::vector<Elem> gray(const RingElement& r, const GrayMatrix& m);
/// Concatenated blocks for a vector of ring elements.
std::vector<Elem> gray(std::span<const RingElement> v, const GrayMatrix& m);
/// Inverse map: each block times M^{-1}, then compose.
std::vector<RingElement> gray_inverse(std::span<const Elem> word, const GrayMatrix& m);

std::size_t gray_weight(const RingElement& r, const GrayMatrix& m);
std::size_t gray_weight(std::span<const RingElement> v, const GrayMatrix& m);
std::size_t gray_distance(std::span<const RingElement> x, std::span<const RingElement> y, const GrayMatrix& m);

std::size_t hamming_weight(std::span<const Elem> v);

}  // namespace lcdring
