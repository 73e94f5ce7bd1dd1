#include "lcdring/poly.hpp"

#include <algorithm>
#include <map>
#include <random>
#include <sstream>

namespace lcdring {

Poly::Poly(Field field, std::vector<Elem> ascending) : field_(std::move(field)), c_(std::move(ascending)) { trim(); }

Poly Poly::constant(const Field& f, Elem c) { return Poly(f, {c}); }

Poly Poly::monomial(const Field& f, Elem c, std::size_t degree) {
    std::vector<Elem> v(degree + 1, 0);
    v[degree] = c;
    return Poly(f, std::move(v));
}

Poly Poly::x_n_minus_1(const Field& f, std::size_t n) {
    std::vector<Elem> v(n + 1, 0);
    v[n] = 1;
    v[0] = f.neg(1);
    return Poly(f, std::move(v));
}

Poly Poly::from_descending(const Field& f, const std::vector<Elem>& descending) {
    return Poly(f, {descending.rbegin(), descending.rend()});
}

void Poly::trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

void Poly::check_same(const Poly& o) const {
    if (!(field_ == o.field_)) throw Error(ErrorCode::FieldMismatch, "polynomials over different fields");
}

Elem Poly::eval(Elem x) const {
    Elem acc = 0;
    for (std::size_t i = c_.size(); i-- > 0;) acc = field_.add(field_.mul(acc, x), c_[i]);
    return acc;
}

Poly Poly::monic() const {
    if (is_zero()) return *this;
    return scaled(field_.inv(leading()));
}

Poly Poly::derivative() const {
    std::vector<Elem> d;
    if (c_.size() > 1) d.resize(c_.size() - 1);
    for (std::size_t i = 1; i < c_.size(); ++i) d[i - 1] = field_.mul(field_.from_int(static_cast<long long>(i)), c_[i]);
    return Poly(field_, std::move(d));
}

Poly Poly::scaled(Elem s) const {
    std::vector<Elem> v(c_);
    for (auto& x : v) x = field_.mul(x, s);
    return Poly(field_, std::move(v));
}

Poly Poly::shifted(std::size_t k) const {
    if (is_zero()) return *this;
    std::vector<Elem> v(k, 0);
    v.insert(v.end(), c_.begin(), c_.end());
    return Poly(field_, std::move(v));
}

Poly Poly::operator+(const Poly& o) const {
    check_same(o);
    std::vector<Elem> v(std::max(c_.size(), o.c_.size()), 0);
    for (std::size_t i = 0; i < v.size(); ++i) v[i] = field_.add(coeff(i), o.coeff(i));
    return Poly(field_, std::move(v));
}

Poly Poly::operator-(const Poly& o) const {
    check_same(o);
    std::vector<Elem> v(std::max(c_.size(), o.c_.size()), 0);
    for (std::size_t i = 0; i < v.size(); ++i) v[i] = field_.sub(coeff(i), o.coeff(i));
    return Poly(field_, std::move(v));
}

Poly Poly::operator*(const Poly& o) const {
    check_same(o);
    if (is_zero() || o.is_zero()) return Poly(field_);
    std::vector<Elem> v(c_.size() + o.c_.size() - 1, 0);
    for (std::size_t i = 0; i < c_.size(); ++i) {
        if (c_[i] == 0) continue;
        for (std::size_t j = 0; j < o.c_.size(); ++j) v[i + j] = field_.add(v[i + j], field_.mul(c_[i], o.c_[j]));
    }
    return Poly(field_, std::move(v));
}

Poly Poly::operator-() const { return Poly(field_) - *this; }

bool Poly::operator==(const Poly& o) const { return field_ == o.field_ && c_ == o.c_; }

bool Poly::canonical_less(const Poly& o) const {
    if (degree() != o.degree()) return degree() < o.degree();
    return std::lexicographical_compare(c_.rbegin(), c_.rend(), o.c_.rbegin(), o.c_.rend());
}

std::string Poly::to_tuple() const {
    std::string out = "(";
    if (is_zero()) return "(0)";
    for (std::size_t i = c_.size(); i-- > 0;) {
        out += field_.format(c_[i]);
        if (i) out += ',';
    }
    return out + ")";
}

std::string Poly::to_string(char var) const {
    if (is_zero()) return "0";
    std::string out;
    for (std::size_t i = c_.size(); i-- > 0;) {
        if (c_[i] == 0) continue;
        if (!out.empty()) out += " + ";
        const std::string c = field_.format(c_[i]);
        const bool decimal = field_.in_prime_subfield(c_[i]);
        if (i == 0) {
            out += c;
            continue;
        }
        if (c_[i] != 1) out += decimal ? c : c + "*";
        out += var;
        if (i > 1) out += "^" + std::to_string(i);
    }
    return out;
}

Poly parse_tuple(const Field& f, std::string_view text) {
    std::string s(text);
    s.erase(std::remove_if(s.begin(), s.end(), [](char ch) { return ch == ' ' || ch == '\t'; }), s.end());
    if (!s.empty() && s.front() == '(') {
        if (s.back() != ')') throw Error(ErrorCode::ParseError, "unbalanced parentheses in '" + std::string(text) + "'");
        s = s.substr(1, s.size() - 2);
    }
    if (s.empty()) throw Error(ErrorCode::ParseError, "empty coefficient tuple");
    std::vector<Elem> desc;
    std::stringstream ss(s);
    std::string tok;
    while (std::getline(ss, tok, ',')) desc.push_back(f.parse(tok));
    return Poly::from_descending(f, desc);
}

std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b) {
    if (b.is_zero()) throw Error(ErrorCode::DivisionByZero, "division by the zero polynomial");
    if (!(a.field() == b.field())) throw Error(ErrorCode::FieldMismatch, "polynomials over different fields");
    const Field& f = a.field();
    if (a.degree() < b.degree()) return {Poly(f), a};
    std::vector<Elem> r = a.coeffs();
    const auto& bc = b.coeffs();
    const std::size_t db = bc.size() - 1;
    std::vector<Elem> quot(r.size() - db, 0);
    const Elem lead_inv = f.inv(b.leading());
    for (std::size_t i = r.size(); i-- > db;) {
        if (r[i] == 0) continue;
        const Elem factor = f.mul(r[i], lead_inv);
        quot[i - db] = factor;
        for (std::size_t j = 0; j <= db; ++j) r[i - db + j] = f.sub(r[i - db + j], f.mul(factor, bc[j]));
    }
    r.resize(db);
    return {Poly(f, std::move(quot)), Poly(f, std::move(r))};
}

Poly operator%(const Poly& a, const Poly& b) { return divmod(a, b).second; }

bool divides(const Poly& d, const Poly& f) { return (f % d).is_zero(); }

Poly gcd(const Poly& a, const Poly& b) { return xgcd(a, b).g; }

Xgcd xgcd(const Poly& a, const Poly& b) {
    const Field& f = a.field();
    if (a.is_zero() && b.is_zero()) throw Error(ErrorCode::InvalidArgument, "gcd of two zero polynomials");
    Poly r0 = a, r1 = b;
    Poly s0 = Poly::constant(f, 1), s1(f);
    Poly t0(f), t1 = Poly::constant(f, 1);
    while (!r1.is_zero()) {
        auto [quot, rem] = divmod(r0, r1);
        Poly s2 = s0 - quot * s1;
        Poly t2 = t0 - quot * t1;
        r0 = std::exchange(r1, std::move(rem));
        s0 = std::exchange(s1, std::move(s2));
        t0 = std::exchange(t1, std::move(t2));
    }
    const Elem lead_inv = f.inv(r0.leading());
    return {r0.scaled(lead_inv), s0.scaled(lead_inv), t0.scaled(lead_inv)};
}

Poly pow_mod(const Poly& base, std::uint64_t k, const Poly& mod) {
    Poly result = Poly::constant(base.field(), 1) % mod;
    Poly b = base % mod;
    while (k) {
        if (k & 1) result = (result * b) % mod;
        k >>= 1;
        if (k) b = (b * b) % mod;
    }
    return result;
}

Poly pow(const Poly& base, std::uint64_t k) {
    Poly result = Poly::constant(base.field(), 1);
    Poly b = base;
    while (k) {
        if (k & 1) result = result * b;
        k >>= 1;
        if (k) b = b * b;
    }
    return result;
}

Reciprocal reciprocal(const Poly& f) {
    std::vector<Elem> v(f.coeffs().rbegin(), f.coeffs().rend());
    const bool preserved = f.is_zero() || f.coeff(0) != 0;
    return {Poly(f.field(), std::move(v)), preserved};
}

bool is_self_reciprocal(const Poly& f) {
    if (!f.is_monic()) throw Error(ErrorCode::InvalidArgument, "is_self_reciprocal expects a monic polynomial");
    if (f.coeff(0) == 0) throw Error(ErrorCode::InvalidArgument, "is_self_reciprocal expects f(0) != 0");
    return reciprocal(f).poly.monic() == f;
}

Poly Factorization::product(const Field& f) const {
    Poly acc = Poly::constant(f, unit);
    for (const auto& fac : factors) acc = acc * pow(fac.poly, fac.multiplicity);
    return acc;
}

std::string Factorization::to_string() const {
    if (factors.empty()) return std::to_string(unit);
    std::string out;
    if (unit != 1) out = factors.front().poly.field().format(unit);
    for (const auto& fac : factors) {
        out += "(" + fac.poly.to_string() + ")";
        if (fac.multiplicity > 1) out += "^" + std::to_string(fac.multiplicity);
    }
    return out;
}

namespace {

Poly x_poly(const Field& f) { return Poly::monomial(f, 1, 1); }

// Inverse Frobenius on a polynomial whose exponents are all multiples of p.
Poly pth_root(const Poly& g) {
    const Field& f = g.field();
    const std::uint32_t p = f.characteristic();
    std::uint64_t root_exp = 1;  // a^{1/p} = a^{p^{m-1}}
    for (std::uint32_t i = 1; i < f.degree(); ++i) root_exp *= p;
    std::vector<Elem> v(g.coeffs().size() / p + 1, 0);
    for (std::size_t i = 0; i < g.coeffs().size(); i += p) v[i / p] = f.pow(g.coeffs()[i], static_cast<long long>(root_exp));
    return Poly(f, std::move(v));
}

void square_free(const Poly& f, std::uint32_t scale, std::map<std::uint32_t, std::vector<Poly>>& out) {
    const Field& fld = f.field();
    if (f.degree() < 1) return;
    Poly c = gcd(f, f.derivative());
    Poly w = divmod(f, c).first;
    std::uint32_t i = 1;
    while (w.degree() > 0) {
        Poly y = gcd(w, c);
        Poly fac = divmod(w, y).first;
        if (fac.degree() > 0) out[i * scale].push_back(fac.monic());
        w = y;
        c = divmod(c, y).first;
        ++i;
    }
    if (c.degree() > 0) square_free(pth_root(c).monic(), scale * fld.characteristic(), out);
}

std::vector<std::pair<Poly, int>> distinct_degree(Poly f) {
    std::vector<std::pair<Poly, int>> out;
    const Field& fld = f.field();
    const Poly x = x_poly(fld);
    Poly h = x % f;
    for (int d = 1; f.degree() >= 2 * d; ++d) {
        h = pow_mod(h, fld.order(), f);
        Poly g = gcd(h - x, f);
        if (g.degree() > 0) {
            out.emplace_back(g, d);
            f = divmod(f, g).first;
            h = h % f;
        }
    }
    if (f.degree() > 0) out.emplace_back(f.monic(), f.degree());
    return out;
}

Poly random_poly(const Field& fld, int below_degree, std::mt19937_64& rng) {
    std::uniform_int_distribution<Elem> dist(0, fld.order() - 1);
    std::vector<Elem> v(static_cast<std::size_t>(below_degree));
    for (auto& c : v) c = dist(rng);
    return Poly(fld, std::move(v));
}

void equal_degree(const Poly& f, int d, std::mt19937_64& rng, std::vector<Poly>& out) {
    if (f.degree() == d) {
        out.push_back(f.monic());
        return;
    }
    const Field& fld = f.field();
    const std::uint64_t q = fld.order();
    const Poly one = Poly::constant(fld, 1);
    for (;;) {
        Poly a = random_poly(fld, f.degree(), rng);
        if (a.degree() < 1) continue;
        Poly g = gcd(a, f);
        if (g.degree() <= 0) {
            // a^{(q^d - 1)/2} = (a^{1 + q + ... + q^{d-1}})^{(q-1)/2}
            Poly t = a % f, acc = a % f;
            for (int i = 1; i < d; ++i) {
                t = pow_mod(t, q, f);
                acc = (acc * t) % f;
            }
            Poly b = pow_mod(acc, (q - 1) / 2, f);
            g = gcd(b - one, f);
        }
        if (g.degree() > 0 && g.degree() < f.degree()) {
            equal_degree(g, d, rng, out);
            equal_degree(divmod(f, g).first, d, rng, out);
            return;
        }
    }
}

void canonicalize(Factorization& fz) {
    std::sort(fz.factors.begin(), fz.factors.end(),
              [](const Factor& a, const Factor& b) { return a.poly.canonical_less(b.poly); });
    std::vector<Factor> merged;
    for (auto& fac : fz.factors) {
        if (!merged.empty() && merged.back().poly == fac.poly)
            merged.back().multiplicity += fac.multiplicity;
        else
            merged.push_back(std::move(fac));
    }
    fz.factors = std::move(merged);
}

}  // namespace

Factorization factor(const Poly& f, std::uint64_t seed) {
    if (f.is_zero()) throw Error(ErrorCode::InvalidArgument, "cannot factor the zero polynomial");
    Factorization out;
    out.unit = f.leading();
    if (f.degree() == 0) return out;
    std::mt19937_64 rng(seed);
    std::map<std::uint32_t, std::vector<Poly>> sqf;
    square_free(f.monic(), 1, sqf);
    for (const auto& [mult, parts] : sqf) {
        for (const auto& part : parts) {
            for (const auto& [block, d] : distinct_degree(part)) {
                std::vector<Poly> irreducibles;
                equal_degree(block, d, rng, irreducibles);
                for (auto& g : irreducibles) out.factors.push_back({std::move(g), mult});
            }
        }
    }
    canonicalize(out);
    return out;
}

Factorization factor_xn_minus_1(const Field& f, std::size_t n, std::uint64_t seed) {
    if (n == 0) throw Error(ErrorCode::InvalidArgument, "length must be positive");
    const std::uint32_t p = f.characteristic();
    std::size_t core = n;
    std::uint32_t ppow = 1;
    while (core % p == 0) {
        core /= p;
        ppow *= p;
    }
    Factorization fz = factor(Poly::x_n_minus_1(f, core), seed);
    for (auto& fac : fz.factors) fac.multiplicity *= ppow;
    return fz;
}

}  // namespace lcdring
