#include "lcdring/ring.hpp"

#include <algorithm>

namespace lcdring {

IdempotentSystem compute_idempotents(const Field& f, std::span<const Elem> roots) {
    const std::size_t e = roots.size();
    const Poly modulus = Poly::x_n_minus_1(f, e);
    IdempotentSystem sys;
    for (Elem alpha : roots) {
        Poly G(f, {f.neg(alpha), 1});
        auto [Ghat, rem] = divmod(modulus, G);
        if (!rem.is_zero()) throw Error(ErrorCode::InvalidArgument, "root does not annihilate u^e - 1");
        Xgcd bez = xgcd(G, Ghat);
        if (!bez.g.is_one()) throw Error(ErrorCode::InvalidArgument, "repeated root in u^e - 1");
        sys.mus.push_back((bez.h * Ghat) % modulus);
        sys.G.push_back(std::move(G));
        sys.Ghat.push_back(std::move(Ghat));
        sys.z.push_back(std::move(bez.z));
        sys.h.push_back(std::move(bez.h));
    }
    return sys;
}

struct Ring::Impl {
    explicit Impl(Field f) : field(std::move(f)) {}
    Field field;
    std::uint32_t e = 0;
    std::vector<Elem> roots;
    IdempotentSystem idem;
    // roots[i]^t, row-major e x e
    std::vector<Elem> powers;
    // per idempotent: index of its first nonzero u-coefficient
    std::vector<std::size_t> pivot;
};

Ring Ring::make(const Field& f, std::uint32_t e, std::optional<std::vector<Elem>> root_order) {
    if (e < 2) throw Error(ErrorCode::InvalidArgument, "e must be at least 2");
    if ((f.order() - 1) % e != 0)
        throw Error(ErrorCode::InvalidArgument,
                    "e = " + std::to_string(e) + " does not divide q - 1 = " + std::to_string(f.order() - 1));
    auto impl = std::make_shared<Impl>(f);
    impl->e = e;
    impl->roots = f.nth_roots_of_unity(e);
    if (root_order) {
        auto given = *root_order;
        auto sorted = given;
        std::sort(sorted.begin(), sorted.end());
        if (sorted != impl->roots)
            throw Error(ErrorCode::InvalidArgument, "root order is not a permutation of the e-th roots of unity");
        impl->roots = std::move(given);
    }
    impl->idem = compute_idempotents(f, impl->roots);
    impl->powers.resize(static_cast<std::size_t>(e) * e);
    for (std::size_t i = 0; i < e; ++i) {
        Elem x = 1;
        for (std::size_t t = 0; t < e; ++t) {
            impl->powers[i * e + t] = x;
            x = f.mul(x, impl->roots[i]);
        }
    }
    for (const auto& mu : impl->idem.mus) {
        std::size_t t = 0;
        while (mu.coeff(t) == 0) ++t;
        impl->pivot.push_back(t);
    }
    return Ring(std::move(impl));
}

const Field& Ring::field() const noexcept { return impl_->field; }
std::uint32_t Ring::e() const noexcept { return impl_->e; }
const std::vector<Elem>& Ring::roots() const noexcept { return impl_->roots; }
const IdempotentSystem& Ring::idempotents() const noexcept { return impl_->idem; }

RingElement Ring::element(std::vector<Elem> ucoeffs) const { return RingElement(*this, std::move(ucoeffs)); }
RingElement Ring::zero() const { return element({}); }
RingElement Ring::one() const { return element({1}); }
RingElement Ring::scalar(Elem c) const { return element({c}); }
RingElement Ring::mu(std::size_t i) const { return element(impl_->idem.mus.at(i).coeffs()); }

std::vector<Elem> Ring::decompose(const RingElement& r) const {
    if (!(r.ring() == *this)) throw Error(ErrorCode::FieldMismatch, "element belongs to a different ring");
    const Field& f = impl_->field;
    const std::size_t e = impl_->e;
    std::vector<Elem> s(e, 0);
    for (std::size_t i = 0; i < e; ++i) {
        Elem acc = 0;
        for (std::size_t t = 0; t < e; ++t) acc = f.add(acc, f.mul(r.ucoeffs()[t], impl_->powers[i * e + t]));
        s[i] = acc;
    }
    return s;
}

std::vector<Elem> Ring::decompose_bezout(const RingElement& r) const {
    const Field& f = impl_->field;
    std::vector<Elem> s(impl_->e, 0);
    for (std::size_t i = 0; i < impl_->e; ++i) {
        const RingElement prod = r * mu(i);
        const std::size_t t = impl_->pivot[i];
        s[i] = f.div(prod.ucoeffs()[t], impl_->idem.mus[i].coeff(t));
    }
    return s;
}

RingElement Ring::compose(std::span<const Elem> s) const {
    if (s.size() != impl_->e)
        throw Error(ErrorCode::InvalidArgument,
                    "expected " + std::to_string(impl_->e) + " components, got " + std::to_string(s.size()));
    const Field& f = impl_->field;
    std::vector<Elem> a(impl_->e, 0);
    for (std::size_t i = 0; i < impl_->e; ++i) {
        if (s[i] == 0) continue;
        const auto& mu = impl_->idem.mus[i];
        for (std::size_t t = 0; t < impl_->e; ++t) a[t] = f.add(a[t], f.mul(s[i], mu.coeff(t)));
    }
    return element(std::move(a));
}

bool Ring::is_unit(const RingElement& r) const {
    const auto s = decompose(r);
    return std::none_of(s.begin(), s.end(), [](Elem x) { return x == 0; });
}

bool Ring::operator==(const Ring& o) const noexcept {
    if (impl_ == o.impl_) return true;
    return impl_->e == o.impl_->e && impl_->field == o.impl_->field && impl_->roots == o.impl_->roots;
}

std::string Ring::describe() const {
    const Field& f = impl_->field;
    std::string out = "R_{" + std::to_string(impl_->e) + "," + std::to_string(f.order()) + "} = F_" +
                      std::to_string(f.order()) + "[u]/(u^" + std::to_string(impl_->e) + " - 1)";
    return out;
}

RingElement::RingElement(Ring ring, std::vector<Elem> ucoeffs) : ring_(std::move(ring)) {
    const Field& f = ring_.field();
    const std::size_t e = ring_.e();
    a_.assign(e, 0);
    // reduce mod u^e - 1 eagerly
    for (std::size_t t = 0; t < ucoeffs.size(); ++t) a_[t % e] = f.add(a_[t % e], ucoeffs[t] % f.order());
}

bool RingElement::is_zero() const noexcept {
    return std::all_of(a_.begin(), a_.end(), [](Elem x) { return x == 0; });
}

void RingElement::check_same(const RingElement& o) const {
    if (!(ring_ == o.ring_)) throw Error(ErrorCode::FieldMismatch, "elements belong to different rings");
}

RingElement RingElement::operator+(const RingElement& o) const {
    check_same(o);
    std::vector<Elem> v(a_);
    for (std::size_t t = 0; t < v.size(); ++t) v[t] = ring_.field().add(v[t], o.a_[t]);
    return {ring_, std::move(v)};
}

RingElement RingElement::operator-(const RingElement& o) const {
    check_same(o);
    std::vector<Elem> v(a_);
    for (std::size_t t = 0; t < v.size(); ++t) v[t] = ring_.field().sub(v[t], o.a_[t]);
    return {ring_, std::move(v)};
}

RingElement RingElement::operator*(const RingElement& o) const {
    check_same(o);
    const Field& f = ring_.field();
    const std::size_t e = a_.size();
    std::vector<Elem> v(e, 0);
    for (std::size_t i = 0; i < e; ++i) {
        if (a_[i] == 0) continue;
        for (std::size_t j = 0; j < e; ++j) v[(i + j) % e] = f.add(v[(i + j) % e], f.mul(a_[i], o.a_[j]));
    }
    return {ring_, std::move(v)};
}

RingElement RingElement::operator-() const { return ring_.zero() - *this; }

RingElement RingElement::scaled(Elem c) const {
    std::vector<Elem> v(a_);
    for (auto& x : v) x = ring_.field().mul(x, c);
    return {ring_, std::move(v)};
}

bool RingElement::operator==(const RingElement& o) const { return ring_ == o.ring_ && a_ == o.a_; }

std::string RingElement::to_string() const {
    const Field& f = ring_.field();
    std::string out;
    for (std::size_t t = 0; t < a_.size(); ++t) {
        if (a_[t] == 0) continue;
        if (!out.empty()) out += " + ";
        if (t == 0) {
            out += f.format(a_[t]);
            continue;
        }
        if (a_[t] != 1) out += f.format(a_[t]) + "*";
        out += t == 1 ? std::string("u") : "u^" + std::to_string(t);
    }
    return out.empty() ? "0" : out;
}

}  // namespace lcdring
