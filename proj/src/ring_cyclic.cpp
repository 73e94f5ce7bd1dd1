#include "lcdring/ring_cyclic.hpp"

#include <algorithm>
#include <map>

namespace lcdring {

RingPoly ring_poly_mul(const RingPoly& a, const RingPoly& b) {
    if (a.empty() || b.empty()) return {};
    const Ring& ring = a.front().ring();
    RingPoly out(a.size() + b.size() - 1, ring.zero());
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i].is_zero()) continue;
        for (std::size_t j = 0; j < b.size(); ++j) out[i + j] = out[i + j] + a[i] * b[j];
    }
    ring_poly_trim(out);
    return out;
}

void ring_poly_trim(RingPoly& a) {
    while (!a.empty() && a.back().is_zero()) a.pop_back();
}

std::string ring_poly_to_string(const RingPoly& a) {
    std::string out;
    for (std::size_t i = a.size(); i-- > 0;) {
        if (a[i].is_zero()) continue;
        if (!out.empty()) out += " + ";
        out += "(" + a[i].to_string() + ")";
        if (i == 1) out += "x";
        if (i > 1) out += "x^" + std::to_string(i);
    }
    return out.empty() ? "0" : out;
}

RingCyclicCode RingCyclicCode::build(const Ring& ring, std::size_t n, std::vector<Poly> components,
                                     std::optional<GrayMatrix> gray_matrix) {
    if (n == 0) throw Error(ErrorCode::InvalidArgument, "length must be positive");
    if (components.size() != ring.e())
        throw Error(ErrorCode::InvalidArgument, "expected " + std::to_string(ring.e()) + " component generators, got " +
                                                    std::to_string(components.size()));
    if (gray_matrix && !(gray_matrix->ring() == ring))
        throw Error(ErrorCode::FieldMismatch, "Gray matrix belongs to a different ring");
    const Poly xn1 = Poly::x_n_minus_1(ring.field(), n);
    std::vector<Poly> cofactors;
    for (std::size_t i = 0; i < components.size(); ++i) {
        const Poly& g = components[i];
        if (!(g.field() == ring.field())) throw Error(ErrorCode::FieldMismatch, "component over a different field");
        if (!g.is_monic())
            throw Error(ErrorCode::InvalidArgument, "component g_" + std::to_string(i + 1) + " is not monic");
        auto [h, rem] = divmod(xn1, g);
        if (!rem.is_zero())
            throw Error(ErrorCode::NotADivisor, "g_" + std::to_string(i + 1) + " = " + g.to_tuple() +
                                                    " does not divide x^" + std::to_string(n) + " - 1");
        cofactors.push_back(std::move(h));
    }
    RingCyclicCode code(ring, n, std::move(components), std::move(cofactors), std::move(gray_matrix));
    ring_generator(code);  // throws if g * h != x^n - 1 in R[x]
    return code;
}

RingCyclicCode RingCyclicCode::with_gray_matrix(GrayMatrix m) const {
    if (!(m.ring() == ring_)) throw Error(ErrorCode::FieldMismatch, "Gray matrix belongs to a different ring");
    return RingCyclicCode(ring_, n_, g_, h_, std::move(m));
}

std::size_t RingCyclicCode::log_size() const {
    std::size_t s = 0;
    for (const auto& g : g_) s += n_ - static_cast<std::size_t>(g.degree());
    return s;
}

std::size_t RingCyclicCode::dual_log_size() const {
    std::size_t s = 0;
    for (const auto& g : g_) s += static_cast<std::size_t>(g.degree());
    return s;
}

RingPoly combine(const Ring& ring, const std::vector<Poly>& parts) {
    std::size_t len = 0;
    for (const auto& p : parts) len = std::max(len, p.coeffs().size());
    RingPoly out(len, ring.zero());
    for (std::size_t i = 0; i < parts.size(); ++i) {
        const RingElement mu = ring.mu(i);
        for (std::size_t t = 0; t < parts[i].coeffs().size(); ++t)
            if (parts[i].coeff(t) != 0) out[t] = out[t] + mu.scaled(parts[i].coeff(t));
    }
    ring_poly_trim(out);
    return out;
}

RingPoly ring_x_n_minus_1(const Ring& ring, std::size_t n) {
    RingPoly out(n + 1, ring.zero());
    out[0] = ring.scalar(ring.field().neg(1));
    out[n] = ring.one();
    return out;
}

RingGenerator ring_generator(const RingCyclicCode& c) {
    RingGenerator gen{combine(c.ring(), c.components()), combine(c.ring(), c.cofactors())};
    const RingPoly prod = ring_poly_mul(gen.g, gen.h);
    if (!(prod == ring_x_n_minus_1(c.ring(), c.n())))
        throw Error(ErrorCode::NotADivisor, "g(x) h(x) != x^n - 1 in R[x]");
    return gen;
}

RingCyclicCode dual(const RingCyclicCode& c) {
    std::vector<Poly> comps;
    for (const auto& h : c.cofactors()) comps.push_back(reciprocal(h).poly.monic());
    return RingCyclicCode::build(c.ring(), c.n(), std::move(comps), c.gray_matrix());
}

bool is_free(const RingCyclicCode& c) {
    const auto& g = c.components();
    return std::all_of(g.begin(), g.end(), [&](const Poly& p) { return p.degree() == g.front().degree(); });
}

LcdCertificate is_lcd(const RingCyclicCode& c) {
    LcdCertificate cert;
    const Field& f = c.field();
    cert.coprime_length = c.n() % f.characteristic() != 0;
    std::map<std::vector<Elem>, std::uint32_t> full_mult;
    if (!cert.coprime_length)
        for (const auto& fac : factor_xn_minus_1(f, c.n()).factors) full_mult[fac.poly.coeffs()] = fac.multiplicity;

    for (std::size_t i = 0; i < c.components().size(); ++i) {
        const Poly& g = c.components()[i];
        if (!is_self_reciprocal(g)) {
            cert.lcd = false;
            cert.failing_component = i;
            cert.violated = "g_" + std::to_string(i + 1) + " is not self-reciprocal";
            return cert;
        }
        if (cert.coprime_length) continue;
        for (const auto& fac : factor(g).factors) {
            const auto full = full_mult.at(fac.poly.coeffs());
            if (fac.multiplicity != full) {
                cert.lcd = false;
                cert.failing_component = i;
                cert.violated = "factor " + fac.poly.to_tuple() + " of g_" + std::to_string(i + 1) + " has multiplicity " +
                                std::to_string(fac.multiplicity) + " but " + std::to_string(full) + " in x^n - 1";
                return cert;
            }
        }
    }
    return cert;
}

bool is_self_dual(const RingCyclicCode& c) {
    for (std::size_t i = 0; i < c.components().size(); ++i) {
        const Poly hstar = reciprocal(c.cofactors()[i]).poly.monic();
        if (!(c.component_code(i) == cyclic_code(hstar, c.n()))) return false;
    }
    return true;
}

LinearCode gray_image(const RingCyclicCode& c, const GrayMatrix& m) {
    if (!(m.ring() == c.ring())) throw Error(ErrorCode::FieldMismatch, "Gray matrix belongs to a different ring");
    const Field& f = c.field();
    const std::size_t e = c.ring().e(), n = c.n();
    Matrix gen(f, 0, e * n);
    std::vector<Elem> word(e * n);
    for (std::size_t i = 0; i < e; ++i) {
        const LinearCode comp = c.component_code(i);
        const auto mrow = m.row(i);
        for (std::size_t r = 0; r < comp.k(); ++r) {
            const auto row = comp.generator().row(r);
            // mu_i * row has CRT vector row[j] * e_i at coordinate j
            for (std::size_t j = 0; j < n; ++j)
                for (std::size_t t = 0; t < e; ++t) word[j * e + t] = f.mul(row[j], mrow[t]);
            gen.append_row(word);
        }
    }
    return LinearCode::from_generator(std::move(gen));
}

LinearCode gray_image(const RingCyclicCode& c) {
    if (!c.gray_matrix()) throw Error(ErrorCode::InvalidArgument, "code has no Gray matrix");
    return gray_image(c, *c.gray_matrix());
}

RingLinearCode::RingLinearCode(Ring ring, std::size_t n, std::vector<std::vector<RingElement>> generators)
    : ring_(std::move(ring)), n_(n), gens_(std::move(generators)) {
    for (const auto& g : gens_) {
        if (g.size() != n_) throw Error(ErrorCode::InvalidArgument, "generator of wrong length");
        for (const auto& r : g)
            if (!(r.ring() == ring_)) throw Error(ErrorCode::FieldMismatch, "generator entry from a different ring");
    }
}

Matrix RingLinearCode::fq_basis() const {
    const std::size_t e = ring_.e();
    Matrix m(ring_.field(), 0, e * n_);
    std::vector<Elem> word(e * n_);
    RingElement u = ring_.element({0, 1});
    for (const auto& g : gens_) {
        std::vector<RingElement> v = g;
        for (std::size_t s = 0; s < e; ++s) {
            for (std::size_t j = 0; j < n_; ++j)
                for (std::size_t t = 0; t < e; ++t) word[j * e + t] = v[j].ucoeffs()[t];
            m.append_row(word);
            for (auto& x : v) x = x * u;
        }
    }
    m.reduce();
    return m;
}

RingLinearCode RingLinearCode::dual() const {
    const std::size_t e = ring_.e();
    const Field& f = ring_.field();
    // (x . g)_s = sum_j sum_t x_{j,t} g_{j,(s - t) mod e}
    Matrix eqs(f, 0, e * n_);
    std::vector<Elem> row(e * n_);
    for (const auto& g : gens_) {
        for (std::size_t s = 0; s < e; ++s) {
            for (std::size_t j = 0; j < n_; ++j)
                for (std::size_t t = 0; t < e; ++t) row[j * e + t] = g[j].ucoeffs()[(s + e - t) % e];
            eqs.append_row(row);
        }
    }
    const Matrix basis = null_space(eqs);
    std::vector<std::vector<RingElement>> gens;
    for (std::size_t r = 0; r < basis.rows(); ++r) {
        std::vector<RingElement> v;
        for (std::size_t j = 0; j < n_; ++j) {
            auto block = basis.row(r).subspan(j * e, e);
            v.push_back(ring_.element({block.begin(), block.end()}));
        }
        gens.push_back(std::move(v));
    }
    return RingLinearCode(ring_, n_, std::move(gens));
}

LinearCode RingLinearCode::component(std::size_t i) const {
    Matrix m(ring_.field(), 0, n_);
    std::vector<Elem> row(n_);
    for (const auto& g : gens_) {
        for (std::size_t j = 0; j < n_; ++j) row[j] = ring_.decompose(g[j])[i];
        m.append_row(row);
    }
    return LinearCode::from_generator(std::move(m));
}

LinearCode RingLinearCode::gray_image(const GrayMatrix& m) const {
    const std::size_t e = ring_.e();
    const Matrix basis = fq_basis();
    Matrix gen(ring_.field(), 0, e * n_);
    for (std::size_t r = 0; r < basis.rows(); ++r) {
        std::vector<RingElement> v;
        for (std::size_t j = 0; j < n_; ++j) {
            auto block = basis.row(r).subspan(j * e, e);
            v.push_back(ring_.element({block.begin(), block.end()}));
        }
        gen.append_row(lcdring::gray(v, m));
    }
    return LinearCode::from_generator(std::move(gen));
}

}  // namespace lcdring
