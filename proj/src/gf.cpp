#include "lcdring/gf.hpp"

#include <algorithm>
#include <charconv>
#include <map>
#include <utility>

namespace lcdring {

const char* error_code_name(ErrorCode code) noexcept {
    switch (code) {
        case ErrorCode::InvalidArgument: return "invalid_argument";
        case ErrorCode::NotPrime: return "not_prime";
        case ErrorCode::ReducibleModulus: return "reducible_modulus";
        case ErrorCode::FieldMismatch: return "field_mismatch";
        case ErrorCode::DivisionByZero: return "division_by_zero";
        case ErrorCode::NotADivisor: return "not_a_divisor";
        case ErrorCode::NotGrayMatrix: return "not_gray_matrix";
        case ErrorCode::GammaNotSquare: return "gamma_not_square";
        case ErrorCode::SearchExhausted: return "search_exhausted";
        case ErrorCode::BudgetExceeded: return "budget_exceeded";
        case ErrorCode::ParseError: return "parse_error";
    }
    return "unknown";
}

bool is_prime(std::uint64_t n) noexcept {
    if (n < 2) return false;
    for (std::uint64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

std::vector<std::uint64_t> prime_divisors(std::uint64_t n) {
    std::vector<std::uint64_t> out;
    for (std::uint64_t d = 2; d * d <= n; ++d) {
        if (n % d == 0) {
            out.push_back(d);
            while (n % d == 0) n /= d;
        }
    }
    if (n > 1) out.push_back(n);
    return out;
}

namespace {

using Coeffs = std::vector<std::uint32_t>;

// Small helpers over F_p[x] with ascending coefficient vectors; only used to
// validate moduli and to invert by Euclid, so they favour clarity over speed.
void trim(Coeffs& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

std::uint32_t inv_mod_p(std::uint32_t a, std::uint32_t p) {
    std::int64_t t = 0, nt = 1, r = p, nr = a;
    while (nr != 0) {
        const std::int64_t qt = r / nr;
        t = std::exchange(nt, t - qt * nt);
        r = std::exchange(nr, r - qt * nr);
    }
    return static_cast<std::uint32_t>((t % p + p) % p);
}

Coeffs poly_mod(Coeffs a, const Coeffs& b, std::uint32_t p) {
    trim(a);
    const std::uint32_t lead_inv = inv_mod_p(b.back(), p);
    while (a.size() >= b.size()) {
        const std::uint64_t factor = static_cast<std::uint64_t>(a.back()) * lead_inv % p;
        const std::size_t shift = a.size() - b.size();
        for (std::size_t i = 0; i < b.size(); ++i)
            a[shift + i] = static_cast<std::uint32_t>((a[shift + i] + p - factor * b[i] % p) % p);
        trim(a);
    }
    return a;
}

Coeffs poly_mul(const Coeffs& a, const Coeffs& b, std::uint32_t p) {
    if (a.empty() || b.empty()) return {};
    Coeffs out(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j)
            out[i + j] = static_cast<std::uint32_t>((out[i + j] + static_cast<std::uint64_t>(a[i]) * b[j]) % p);
    trim(out);
    return out;
}

Coeffs poly_sub(Coeffs a, const Coeffs& b, std::uint32_t p) {
    if (a.size() < b.size()) a.resize(b.size(), 0);
    for (std::size_t i = 0; i < b.size(); ++i) a[i] = (a[i] + p - b[i]) % p;
    trim(a);
    return a;
}

// Irreducible iff no monic polynomial of degree 1..m/2 divides it.
bool is_irreducible(const Coeffs& f, std::uint32_t p) {
    const std::size_t m = f.size() - 1;
    for (std::size_t d = 1; d <= m / 2; ++d) {
        std::uint64_t count = 1;
        for (std::size_t i = 0; i < d; ++i) count *= p;
        for (std::uint64_t idx = 0; idx < count; ++idx) {
            Coeffs g(d + 1, 0);
            g[d] = 1;
            std::uint64_t v = idx;
            for (std::size_t i = 0; i < d; ++i, v /= p) g[i] = static_cast<std::uint32_t>(v % p);
            if (poly_mod(f, g, p).empty()) return false;
        }
    }
    return true;
}

std::optional<Coeffs> builtin_modulus(std::uint32_t p, std::uint32_t m) {
    static const std::map<std::pair<std::uint32_t, std::uint32_t>, Coeffs> table = {
        {{3, 2}, {2, 2, 1}},
        {{5, 2}, {2, 4, 1}},
        {{3, 3}, {1, 2, 0, 1}},
        {{7, 2}, {3, 6, 1}},
    };
    auto it = table.find({p, m});
    if (it == table.end()) return std::nullopt;
    return it->second;
}

Coeffs first_irreducible(std::uint32_t p, std::uint32_t m) {
    std::uint64_t count = 1;
    for (std::uint32_t i = 0; i < m; ++i) count *= p;
    for (std::uint64_t idx = 0; idx < count; ++idx) {
        Coeffs f(m + 1, 0);
        f[m] = 1;
        std::uint64_t v = idx;
        // canonical order compares the high coefficients first
        for (std::uint32_t i = 0; i < m; ++i, v /= p) f[i] = static_cast<std::uint32_t>(v % p);
        if (f[0] != 0 && is_irreducible(f, p)) return f;
    }
    throw Error(ErrorCode::InvalidArgument, "no irreducible polynomial found");
}

}  // namespace

struct Field::Impl {
    std::uint32_t p = 0;
    std::uint32_t m = 0;
    std::uint32_t q = 0;
    Coeffs modulus;
    Elem primitive = 0;
    // log/exp tables; filled for every field so that mul/inv/log are O(1)
    std::vector<Elem> exp_table;       // size q - 1
    std::vector<std::uint32_t> log_table;  // size q, log_table[0] unused

    Coeffs coeffs(Elem a) const {
        Coeffs c(m, 0);
        for (std::uint32_t i = 0; i < m; ++i, a /= p) c[i] = a % p;
        return c;
    }
    Elem encode(const Coeffs& c) const {
        Elem v = 0;
        for (std::size_t i = c.size(); i-- > 0;) v = v * p + c[i];
        return v;
    }
    Elem mul_basis(Elem a, Elem b) const {
        if (m == 1) return static_cast<Elem>(static_cast<std::uint64_t>(a) * b % p);
        Coeffs prod = poly_mul(coeffs(a), coeffs(b), p);
        if (prod.size() > m) prod = poly_mod(std::move(prod), modulus, p);
        prod.resize(m, 0);
        return encode(prod);
    }
    Elem pow_basis(Elem a, std::uint64_t k) const {
        Elem r = 1;
        while (k) {
            if (k & 1) r = mul_basis(r, a);
            a = mul_basis(a, a);
            k >>= 1;
        }
        return r;
    }
};

Field Field::make(std::uint32_t p, std::uint32_t m, std::optional<Coeffs> modulus) {
    if (p < 3 || !is_prime(p))
        throw Error(ErrorCode::NotPrime, "characteristic " + std::to_string(p) + " is not an odd prime");
    if (m == 0) throw Error(ErrorCode::InvalidArgument, "extension degree must be positive");
    std::uint64_t q = 1;
    for (std::uint32_t i = 0; i < m; ++i) {
        q *= p;
        if (q > kMaxOrder) throw Error(ErrorCode::InvalidArgument, "field order exceeds 2^20");
    }

    auto impl = std::make_shared<Impl>();
    impl->p = p;
    impl->m = m;
    impl->q = static_cast<std::uint32_t>(q);

    if (m == 1) {
        impl->modulus = {0, 1};
    } else if (modulus) {
        Coeffs f = *modulus;
        for (auto& c : f) c %= p;
        trim(f);
        if (f.size() != m + 1 || f.back() != 1)
            throw Error(ErrorCode::ReducibleModulus, "modulus must be monic of degree " + std::to_string(m));
        if (!is_irreducible(f, p)) throw Error(ErrorCode::ReducibleModulus, "modulus is reducible over F_p");
        impl->modulus = std::move(f);
    } else {
        auto f = builtin_modulus(p, m);
        impl->modulus = f ? *f : first_irreducible(p, m);
    }

    const auto factors = prime_divisors(q - 1);
    for (Elem g = 2; g < q; ++g) {
        bool primitive = true;
        for (auto r : factors) {
            if (impl->pow_basis(g, (q - 1) / r) == 1) {
                primitive = false;
                break;
            }
        }
        if (primitive) {
            impl->primitive = g;
            break;
        }
    }

    impl->exp_table.resize(q - 1);
    impl->log_table.assign(q, 0);
    Elem x = 1;
    for (std::uint32_t k = 0; k + 1 < q; ++k) {
        impl->exp_table[k] = x;
        impl->log_table[x] = k;
        x = impl->mul_basis(x, impl->primitive);
    }
    return Field(std::move(impl));
}

std::uint32_t Field::characteristic() const noexcept { return impl_->p; }
std::uint32_t Field::degree() const noexcept { return impl_->m; }
std::uint32_t Field::order() const noexcept { return impl_->q; }
const std::vector<std::uint32_t>& Field::modulus() const noexcept { return impl_->modulus; }
Elem Field::primitive() const noexcept { return impl_->primitive; }

Elem Field::from_int(long long v) const noexcept {
    const long long p = impl_->p;
    return static_cast<Elem>(((v % p) + p) % p);
}

Elem Field::add(Elem a, Elem b) const noexcept {
    const std::uint32_t p = impl_->p;
    if (impl_->m == 1) {
        const Elem s = a + b;
        return s >= p ? s - p : s;
    }
    Elem out = 0, scale = 1;
    while (a || b) {
        Elem d = a % p + b % p;
        if (d >= p) d -= p;
        out += d * scale;
        scale *= p;
        a /= p;
        b /= p;
    }
    return out;
}

Elem Field::neg(Elem a) const noexcept {
    const std::uint32_t p = impl_->p;
    if (impl_->m == 1) return a == 0 ? 0 : p - a;
    Elem out = 0, scale = 1;
    while (a) {
        const Elem d = a % p;
        out += (d == 0 ? 0 : p - d) * scale;
        scale *= p;
        a /= p;
    }
    return out;
}

Elem Field::sub(Elem a, Elem b) const noexcept {
    if (impl_->m == 1) {
        const std::uint32_t p = impl_->p;
        return a >= b ? a - b : a + p - b;
    }
    return add(a, neg(b));
}

Elem Field::mul(Elem a, Elem b) const noexcept {
    if (a == 0 || b == 0) return 0;
    if (impl_->m == 1) return static_cast<Elem>(static_cast<std::uint64_t>(a) * b % impl_->p);
    std::uint32_t s = impl_->log_table[a] + impl_->log_table[b];
    const std::uint32_t n = impl_->q - 1;
    if (s >= n) s -= n;
    return impl_->exp_table[s];
}

Elem Field::inv(Elem a) const {
    if (a == 0) throw Error(ErrorCode::DivisionByZero, "inverse of zero");
    const std::uint32_t n = impl_->q - 1;
    return impl_->exp_table[(n - impl_->log_table[a]) % n];
}

Elem Field::div(Elem a, Elem b) const {
    if (b == 0) throw Error(ErrorCode::DivisionByZero, "division by zero");
    return mul(a, inv(b));
}

Elem Field::pow(Elem a, long long k) const {
    if (k < 0) {
        if (a == 0) throw Error(ErrorCode::DivisionByZero, "negative power of zero");
        a = inv(a);
        k = -k;
    }
    if (k == 0) return 1;
    if (a == 0) return 0;
    const std::uint64_t n = impl_->q - 1;
    return impl_->exp_table[(static_cast<std::uint64_t>(impl_->log_table[a]) * (static_cast<std::uint64_t>(k) % n)) % n];
}

Elem Field::inv_euclid(Elem a) const {
    if (a == 0) throw Error(ErrorCode::DivisionByZero, "inverse of zero");
    const std::uint32_t p = impl_->p;
    if (impl_->m == 1) return inv_mod_p(a, p);
    // Track t with t * a == r (mod modulus).
    Coeffs r0 = impl_->modulus, r1 = impl_->coeffs(a);
    Coeffs t0, t1 = {1};
    trim(r1);
    while (r1.size() > 1) {
        Coeffs quot;
        Coeffs rem = r0;
        const std::uint32_t lead_inv = inv_mod_p(r1.back(), p);
        quot.assign(rem.size() - r1.size() + 1, 0);
        while (rem.size() >= r1.size()) {
            const std::uint32_t f = static_cast<std::uint32_t>(static_cast<std::uint64_t>(rem.back()) * lead_inv % p);
            const std::size_t shift = rem.size() - r1.size();
            quot[shift] = f;
            for (std::size_t i = 0; i < r1.size(); ++i)
                rem[shift + i] = static_cast<std::uint32_t>((rem[shift + i] + p - static_cast<std::uint64_t>(f) * r1[i] % p) % p);
            trim(rem);
        }
        trim(quot);
        Coeffs t2 = poly_sub(t0, poly_mul(quot, t1, p), p);
        r0 = std::exchange(r1, rem);
        t0 = std::exchange(t1, t2);
    }
    // r1 is a nonzero constant c: a * t1 = c
    const std::uint32_t c_inv = inv_mod_p(r1[0], p);
    Coeffs out(impl_->m, 0);
    for (std::size_t i = 0; i < t1.size() && i < out.size(); ++i)
        out[i] = static_cast<std::uint32_t>(static_cast<std::uint64_t>(t1[i]) * c_inv % p);
    return impl_->encode(out);
}

Elem Field::mul_basis(Elem a, Elem b) const { return impl_->mul_basis(a, b); }

bool Field::is_square(Elem a) const {
    if (a == 0) throw Error(ErrorCode::InvalidArgument, "is_square is defined on nonzero elements");
    return pow(a, (impl_->q - 1) / 2) == 1;
}

std::uint32_t Field::multiplicative_order(Elem a) const {
    if (a == 0) throw Error(ErrorCode::InvalidArgument, "zero has no multiplicative order");
    std::uint32_t order = impl_->q - 1;
    for (auto r : prime_divisors(order)) {
        while (order % r == 0 && pow(a, order / r) == 1) order /= static_cast<std::uint32_t>(r);
    }
    return order;
}

std::uint32_t Field::log(Elem a) const {
    if (a == 0) throw Error(ErrorCode::InvalidArgument, "logarithm of zero");
    return impl_->log_table[a];
}

Elem Field::exp(long long k) const noexcept {
    const long long n = impl_->q - 1;
    return impl_->exp_table[static_cast<std::size_t>(((k % n) + n) % n)];
}

std::vector<std::uint32_t> Field::coefficients(Elem a) const { return impl_->coeffs(a); }

Elem Field::from_coefficients(std::span<const std::uint32_t> c) const {
    Coeffs v(impl_->m, 0);
    for (std::size_t i = 0; i < c.size() && i < v.size(); ++i) v[i] = c[i] % impl_->p;
    return impl_->encode(v);
}

std::vector<Elem> Field::nth_roots_of_unity(std::uint32_t e) const {
    const std::uint32_t n = impl_->q - 1;
    if (e == 0 || n % e != 0)
        throw Error(ErrorCode::InvalidArgument,
                    std::to_string(e) + " does not divide q-1 = " + std::to_string(n));
    std::vector<Elem> roots;
    roots.reserve(e);
    for (std::uint32_t j = 0; j < e; ++j) roots.push_back(exp(static_cast<long long>(j) * (n / e)));
    std::sort(roots.begin(), roots.end());
    return roots;
}

std::string Field::format(Elem a) const {
    if (a < impl_->p) return std::to_string(a);
    const auto k = log(a);
    return k == 1 ? std::string("w") : "w^" + std::to_string(k);
}

Elem Field::parse(std::string_view text) const {
    auto strip = [](std::string_view s) {
        while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
        while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
        return s;
    };
    std::string_view s = strip(text);
    bool negate = false;
    if (!s.empty() && s.front() == '-' && s.size() > 1 && s[1] == 'w') {
        negate = true;
        s.remove_prefix(1);
    }
    if (!s.empty() && s.front() == 'w') {
        long long k = 1;
        std::string_view rest = strip(s.substr(1));
        if (!rest.empty()) {
            if (rest.front() != '^') throw Error(ErrorCode::ParseError, "bad field element '" + std::string(text) + "'");
            rest = strip(rest.substr(1));
            auto [ptr, ec] = std::from_chars(rest.data(), rest.data() + rest.size(), k);
            if (ec != std::errc{} || ptr != rest.data() + rest.size())
                throw Error(ErrorCode::ParseError, "bad exponent in '" + std::string(text) + "'");
        }
        const Elem v = exp(k);
        return negate ? neg(v) : v;
    }
    long long v = 0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (s.empty() || ec != std::errc{} || ptr != s.data() + s.size())
        throw Error(ErrorCode::ParseError, "bad field element '" + std::string(text) + "'");
    return from_int(v);
}

bool Field::operator==(const Field& other) const noexcept {
    if (impl_ == other.impl_) return true;
    return impl_->p == other.impl_->p && impl_->m == other.impl_->m && impl_->modulus == other.impl_->modulus;
}

void FieldElement::check_same(const FieldElement& o) const {
    if (!(field_ == o.field_)) throw Error(ErrorCode::FieldMismatch, "operands belong to different fields");
}

FieldElement FieldElement::operator+(const FieldElement& o) const {
    check_same(o);
    return {field_, field_.add(value_, o.value_)};
}
FieldElement FieldElement::operator-(const FieldElement& o) const {
    check_same(o);
    return {field_, field_.sub(value_, o.value_)};
}
FieldElement FieldElement::operator*(const FieldElement& o) const {
    check_same(o);
    return {field_, field_.mul(value_, o.value_)};
}
FieldElement FieldElement::operator/(const FieldElement& o) const {
    check_same(o);
    return {field_, field_.div(value_, o.value_)};
}
FieldElement FieldElement::operator-() const { return {field_, field_.neg(value_)}; }
FieldElement FieldElement::pow(long long k) const { return {field_, field_.pow(value_, k)}; }
FieldElement FieldElement::inv() const { return {field_, field_.inv(value_)}; }
bool FieldElement::is_square() const { return field_.is_square(value_); }
bool FieldElement::operator==(const FieldElement& o) const {
    check_same(o);
    return value_ == o.value_;
}

}  // namespace lcdring
