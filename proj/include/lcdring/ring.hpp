/**
 * @file ring.hpp
 * @brief The ring R = F_q[u]/(u^e - 1) with e | q - 1 and its idempotent (CRT) coordinates.
 *
 * u^e - 1 splits as prod (u - alpha_i). With G_i = u - alpha_i and
 * Ghat_i = (u^e - 1)/G_i, a Bezout relation z_i G_i + h_i Ghat_i = 1 gives the
 * orthogonal idempotents mu_i = h_i Ghat_i. Every r in R is uniquely
 * sum s_i mu_i, and s_i = r(alpha_i).
 *
 * Roots are indexed in canonical element order unless an explicit order is
 * supplied, which lets fixtures match a printed mu_1, ..., mu_e labelling.
 */
#pragma once

#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "lcdring/gf.hpp"
#include "lcdring/poly.hpp"

namespace lcdring {

struct IdempotentSystem {
    std::vector<Poly> G;     ///< u - alpha_i
    std::vector<Poly> Ghat;  ///< (u^e - 1) / G_i
    std::vector<Poly> z;     ///< Bezout coefficient of G_i
    std::vector<Poly> h;     ///< Bezout coefficient of Ghat_i
    std::vector<Poly> mus;   ///< h_i Ghat_i mod (u^e - 1), degree < e
};

IdempotentSystem compute_idempotents(const Field& f, std::span<const Elem> roots);

class RingElement;

class Ring {
public:
    /// Throws InvalidArgument unless e >= 2 and e | q - 1, or if `root_order`
    /// is not a permutation of the e-th roots of unity.
    static Ring make(const Field& f, std::uint32_t e, std::optional<std::vector<Elem>> root_order = std::nullopt);

    const Field& field() const noexcept;
    std::uint32_t e() const noexcept;
    const std::vector<Elem>& roots() const noexcept;
    const IdempotentSystem& idempotents() const noexcept;

    RingElement element(std::vector<Elem> ucoeffs) const;
    RingElement zero() const;
    RingElement one() const;
    RingElement mu(std::size_t i) const;
    RingElement scalar(Elem c) const;

    /// s_i = r(alpha_i).
    std::vector<Elem> decompose(const RingElement& r) const;
    /// s_i recovered from r * mu_i = s_i mu_i; independent of evaluation.
    std::vector<Elem> decompose_bezout(const RingElement& r) const;
    /// sum s_i mu_i.
    RingElement compose(std::span<const Elem> s) const;

    bool is_unit(const RingElement& r) const;

    /// Same field, same e and same root order.
    bool operator==(const Ring& o) const noexcept;

    std::string describe() const;

private:
    struct Impl;
    explicit Ring(std::shared_ptr<const Impl> impl) : impl_(std::move(impl)) {}
    std::shared_ptr<const Impl> impl_;
};

/// a_0 + a_1 u + ... + a_{e-1} u^{e-1}, always reduced mod u^e - 1.
class RingElement {
public:
    RingElement(Ring ring, std::vector<Elem> ucoeffs);

    const Ring& ring() const noexcept { return ring_; }
    const std::vector<Elem>& ucoeffs() const noexcept { return a_; }
    bool is_zero() const noexcept;

    RingElement operator+(const RingElement& o) const;
    RingElement operator-(const RingElement& o) const;
    RingElement operator*(const RingElement& o) const;
    RingElement operator-() const;
    RingElement scaled(Elem c) const;
    bool operator==(const RingElement& o) const;

    /// `a0 + a1*u + ... + a_{e-1}*u^{e-1}` with zero terms omitted.
    std::string to_string() const;

private:
    void check_same(const RingElement& o) const;
    Ring ring_;
    std::vector<Elem> a_;
};

}  // namespace lcdring
