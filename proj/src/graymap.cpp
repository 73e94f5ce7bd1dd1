#include "lcdring/graymap.hpp"

#include <algorithm>
#include <sstream>

namespace lcdring {

namespace {

Elem dot(const Field& f, std::span<const Elem> a, std::span<const Elem> b) {
    Elem acc = 0;
    for (std::size_t i = 0; i < a.size(); ++i) acc = f.add(acc, f.mul(a[i], b[i]));
    return acc;
}

std::vector<Elem> row_times(const Field& f, std::span<const Elem> s, const std::vector<Elem>& mat, std::size_t e) {
    std::vector<Elem> out(e, 0);
    for (std::size_t i = 0; i < e; ++i) {
        if (s[i] == 0) continue;
        for (std::size_t j = 0; j < e; ++j) out[j] = f.add(out[j], f.mul(s[i], mat[i * e + j]));
    }
    return out;
}

constexpr std::size_t kSearchNodeLimit = 2'000'000;

}  // namespace

bool GrayMatrix::gamma_condition() const {
    const Field& f = ring_.field();
    return f.is_square(f.pow(gamma_, e()));
}

std::string GrayMatrix::to_string() const {
    const Field& f = ring_.field();
    std::string out;
    for (std::size_t r = 0; r < e(); ++r) {
        if (r) out += ';';
        for (std::size_t c = 0; c < e(); ++c) {
            if (c) out += ',';
            out += f.format(at(r, c));
        }
    }
    return out;
}

std::vector<std::vector<Elem>> GrayMatrix::rows() const {
    std::vector<std::vector<Elem>> out;
    for (std::size_t r = 0; r < e(); ++r) out.emplace_back(row(r).begin(), row(r).end());
    return out;
}

GrayMatrix validate_matrix(const std::vector<std::vector<Elem>>& rows, const Ring& ring, bool allow_any_gamma) {
    const Field& f = ring.field();
    const std::size_t e = ring.e();
    if (rows.size() != e)
        throw Error(ErrorCode::NotGrayMatrix, "Gray matrix must be " + std::to_string(e) + "x" + std::to_string(e));
    std::vector<Elem> entries;
    for (const auto& r : rows) {
        if (r.size() != e)
            throw Error(ErrorCode::NotGrayMatrix, "Gray matrix must be " + std::to_string(e) + "x" + std::to_string(e));
        for (Elem x : r) entries.push_back(x % f.order());
    }
    const Elem gamma = dot(f, {entries.data(), e}, {entries.data(), e});
    for (std::size_t i = 0; i < e; ++i)
        for (std::size_t j = 0; j < e; ++j) {
            const Elem v = dot(f, {entries.data() + i * e, e}, {entries.data() + j * e, e});
            if (v != (i == j ? gamma : 0)) throw Error(ErrorCode::NotGrayMatrix, "M M^T is not a scalar matrix");
        }
    if (gamma == 0) throw Error(ErrorCode::NotGrayMatrix, "M M^T = 0; gamma must be nonzero");
    if (!allow_any_gamma && !f.is_square(f.pow(gamma, static_cast<long long>(e))))
        throw Error(ErrorCode::GammaNotSquare, "gamma^e is not a square (gamma = " + f.format(gamma) + ")");
    return GrayMatrix(ring, std::move(entries), gamma);
}

GrayMatrix find_matrix(const Ring& ring, std::optional<Elem> gamma, bool allow_any_gamma) {
    const Field& f = ring.field();
    const std::size_t e = ring.e();
    const std::uint32_t q = f.order();
    if (e > 4 || q > 49) throw Error(ErrorCode::InvalidArgument, "find_matrix is limited to e <= 4 and q <= 49");
    if (gamma && *gamma == 0) throw Error(ErrorCode::NotGrayMatrix, "gamma must be nonzero");

    std::vector<Elem> candidates;
    if (gamma) {
        candidates.push_back(*gamma);
    } else {
        for (Elem g = 1; g < q; ++g) candidates.push_back(g);
    }
    std::size_t total = 1;
    for (std::size_t i = 0; i < e; ++i) total *= q;

    for (Elem g : candidates) {
        if (!allow_any_gamma && !f.is_square(f.pow(g, static_cast<long long>(e)))) {
            if (gamma) throw Error(ErrorCode::GammaNotSquare, "gamma^e is not a square (gamma = " + f.format(g) + ")");
            continue;
        }
        // every vector of norm g, in row-lexicographic order
        std::vector<std::vector<Elem>> norm_g;
        std::vector<Elem> v(e);
        for (std::size_t idx = 0; idx < total; ++idx) {
            std::size_t x = idx;
            for (std::size_t i = e; i-- > 0; x /= q) v[i] = static_cast<Elem>(x % q);
            if (dot(f, v, v) == g) norm_g.push_back(v);
        }
        std::vector<std::size_t> chosen;
        std::size_t nodes = 0;
        auto extend = [&](auto&& self) -> bool {
            if (chosen.size() == e) return true;
            for (std::size_t c = 0; c < norm_g.size(); ++c) {
                if (++nodes > kSearchNodeLimit) return false;
                bool orthogonal = true;
                for (auto prev : chosen)
                    if (dot(f, norm_g[prev], norm_g[c]) != 0) {
                        orthogonal = false;
                        break;
                    }
                if (!orthogonal) continue;
                chosen.push_back(c);
                if (self(self)) return true;
                chosen.pop_back();
            }
            return false;
        };
        if (extend(extend)) {
            std::vector<std::vector<Elem>> rows;
            for (auto c : chosen) rows.push_back(norm_g[c]);
            return validate_matrix(rows, ring, allow_any_gamma);
        }
    }
    throw Error(ErrorCode::SearchExhausted, "no Gray matrix found in the search space");
}

std::vector<std::vector<Elem>> parse_matrix(const Field& f, std::string_view text) {
    std::vector<std::vector<Elem>> rows;
    std::stringstream ss{std::string(text)};
    std::string row;
    while (std::getline(ss, row, ';')) {
        std::vector<Elem> r;
        std::stringstream rs(row);
        std::string tok;
        while (std::getline(rs, tok, ',')) r.push_back(f.parse(tok));
        if (r.empty()) throw Error(ErrorCode::ParseError, "empty row in matrix '" + std::string(text) + "'");
        rows.push_back(std::move(r));
    }
    if (rows.empty()) throw Error(ErrorCode::ParseError, "empty matrix");
    return rows;
}

std::vector<Elem> gray(const RingElement& r, const GrayMatrix& m) {
    if (!(r.ring() == m.ring())) throw Error(ErrorCode::FieldMismatch, "element and Gray matrix use different rings");
    const auto s = m.ring().decompose(r);
    return row_times(m.ring().field(), s, m.entries(), m.e());
}

std::vector<Elem> gray(std::span<const RingElement> v, const GrayMatrix& m) {
    std::vector<Elem> out;
    out.reserve(v.size() * m.e());
    for (const auto& r : v) {
        auto block = gray(r, m);
        out.insert(out.end(), block.begin(), block.end());
    }
    return out;
}

std::vector<RingElement> gray_inverse(std::span<const Elem> word, const GrayMatrix& m) {
    const std::size_t e = m.e();
    if (word.size() % e != 0) throw Error(ErrorCode::InvalidArgument, "word length is not a multiple of e");
    const Field& f = m.ring().field();
    // M^{-1} = gamma^{-1} M^T
    const Elem ginv = f.inv(m.gamma());
    std::vector<Elem> minv(e * e);
    for (std::size_t i = 0; i < e; ++i)
        for (std::size_t j = 0; j < e; ++j) minv[i * e + j] = f.mul(ginv, m.at(j, i));
    std::vector<RingElement> out;
    for (std::size_t b = 0; b < word.size(); b += e) {
        const auto s = row_times(f, word.subspan(b, e), minv, e);
        out.push_back(m.ring().compose(s));
    }
    return out;
}

std::size_t hamming_weight(std::span<const Elem> v) {
    return static_cast<std::size_t>(std::count_if(v.begin(), v.end(), [](Elem x) { return x != 0; }));
}

std::size_t gray_weight(const RingElement& r, const GrayMatrix& m) { return hamming_weight(gray(r, m)); }

std::size_t gray_weight(std::span<const RingElement> v, const GrayMatrix& m) {
    std::size_t w = 0;
    for (const auto& r : v) w += gray_weight(r, m);
    return w;
}

std::size_t gray_distance(std::span<const RingElement> x, std::span<const RingElement> y, const GrayMatrix& m) {
    if (x.size() != y.size()) throw Error(ErrorCode::InvalidArgument, "vectors of different lengths");
    std::size_t w = 0;
    for (std::size_t i = 0; i < x.size(); ++i) w += gray_weight(x[i] - y[i], m);
    return w;
}

}  // namespace lcdring
