/**
 * @file ring_cyclic.hpp
 * @brief Cyclic codes over R = F_q[u]/(u^e - 1).
 *
 * A cyclic code of length n over R is C = mu_1 C_1 + ... + mu_e C_e with each
 * C_i = <g_i(x)> cyclic over F_q. It is generated by the single polynomial
 * g(x) = sum mu_i g_i(x), which divides x^n - 1 in R[x] with cofactor
 * h(x) = sum mu_i h_i(x). Its dual is generated by sum mu_i h_i^*(x).
 *
 * All ideal arithmetic goes through the components; R[x] has no division
 * algorithm once the leading coefficient is a zero divisor.
 */
#pragma once

#include <optional>
#include <string>
#include <vector>

#include "lcdring/graymap.hpp"
#include "lcdring/linear_code.hpp"
#include "lcdring/poly.hpp"
#include "lcdring/ring.hpp"

namespace lcdring {

/// Polynomial over R, ascending in x.
using RingPoly = std::vector<RingElement>;

RingPoly ring_poly_mul(const RingPoly& a, const RingPoly& b);
/// Drops trailing zero coefficients.
void ring_poly_trim(RingPoly& a);
std::string ring_poly_to_string(const RingPoly& a);

class RingCyclicCode {
public:
    /// Errors: InvalidArgument (component count, non-monic), NotADivisor.
    static RingCyclicCode build(const Ring& ring, std::size_t n, std::vector<Poly> components,
                                std::optional<GrayMatrix> gray_matrix = std::nullopt);

    const Ring& ring() const noexcept { return ring_; }
    const Field& field() const noexcept { return ring_.field(); }
    std::size_t n() const noexcept { return n_; }
    const std::vector<Poly>& components() const noexcept { return g_; }
    /// h_i = (x^n - 1) / g_i
    const std::vector<Poly>& cofactors() const noexcept { return h_; }
    const std::optional<GrayMatrix>& gray_matrix() const noexcept { return m_; }
    RingCyclicCode with_gray_matrix(GrayMatrix m) const;

    /// log_q |C| = sum (n - deg g_i)
    std::size_t log_size() const;
    /// log_q |C^⊥| = sum deg g_i
    std::size_t dual_log_size() const;

    LinearCode component_code(std::size_t i) const { return cyclic_code(g_[i], n_); }

private:
    RingCyclicCode(Ring ring, std::size_t n, std::vector<Poly> g, std::vector<Poly> h, std::optional<GrayMatrix> m)
        : ring_(std::move(ring)), n_(n), g_(std::move(g)), h_(std::move(h)), m_(std::move(m)) {}
    Ring ring_;
    std::size_t n_;
    std::vector<Poly> g_;
    std::vector<Poly> h_;
    std::optional<GrayMatrix> m_;
};

struct RingGenerator {
    RingPoly g;  ///< sum mu_i g_i(x)
    RingPoly h;  ///< sum mu_i h_i(x)
};

/// Both generators; g * h == x^n - 1 is checked by direct multiplication in R[x].
RingGenerator ring_generator(const RingCyclicCode& c);
/// sum mu_i p_i(x) for polynomials p_i over F_q.
RingPoly combine(const Ring& ring, const std::vector<Poly>& parts);
/// x^n - 1 as a polynomial over R.
RingPoly ring_x_n_minus_1(const Ring& ring, std::size_t n);

/// Components are the monic reciprocals of the cofactors h_i.
RingCyclicCode dual(const RingCyclicCode& c);

/// All component degrees equal.
bool is_free(const RingCyclicCode& c);

struct LcdCertificate {
    bool lcd = true;
    bool coprime_length = true;  ///< gcd(n, q) == 1
    std::optional<std::size_t> failing_component;
    std::string violated;  ///< empty when lcd
};

/// Componentwise criterion: every g_i self-reciprocal and, when gcd(n, q) != 1,
/// every irreducible factor of g_i with its full multiplicity in x^n - 1.
LcdCertificate is_lcd(const RingCyclicCode& c);

/// Every component code equals its own dual.
bool is_self_dual(const RingCyclicCode& c);

/// [en, sum(n - deg g_i)] code spanned by the Gray images of mu_i * (rows of <g_i>).
LinearCode gray_image(const RingCyclicCode& c, const GrayMatrix& m);
/// Uses the code's own Gray matrix; InvalidArgument when it has none.
LinearCode gray_image(const RingCyclicCode& c);

/// A linear code over R given by generator vectors; used where general
/// (not necessarily cyclic) codes over the ring are needed.
class RingLinearCode {
public:
    RingLinearCode(Ring ring, std::size_t n, std::vector<std::vector<RingElement>> generators);

    const Ring& ring() const noexcept { return ring_; }
    std::size_t n() const noexcept { return n_; }
    const std::vector<std::vector<RingElement>>& generators() const noexcept { return gens_; }

    /// F_q-basis of the R-span in u-basis coordinates (coordinate j*e + t holds the u^t coefficient of x_j).
    Matrix fq_basis() const;
    /// Dual computed by solving x . g = 0 in u-basis coordinates.
    RingLinearCode dual() const;
    /// The i-th CRT component code C_i.
    LinearCode component(std::size_t i) const;
    LinearCode gray_image(const GrayMatrix& m) const;

private:
    Ring ring_;
    std::size_t n_;
    std::vector<std::vector<RingElement>> gens_;
};

}  // namespace lcdring
