#include "lcdring/linear_code.hpp"

#include <algorithm>
#include <cmath>
#include <thread>

namespace lcdring {

Matrix::Matrix(Field field, std::size_t cols, const std::vector<std::vector<Elem>>& rows)
    : field_(std::move(field)), rows_(0), cols_(cols) {
    for (const auto& r : rows) append_row(r);
}

void Matrix::append_row(std::span<const Elem> r) {
    if (r.size() != cols_)
        throw Error(ErrorCode::InvalidArgument,
                    "row of length " + std::to_string(r.size()) + " in a matrix with " + std::to_string(cols_) + " columns");
    data_.insert(data_.end(), r.begin(), r.end());
    ++rows_;
}

Matrix Matrix::transpose() const {
    Matrix t(field_, cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t c = 0; c < cols_; ++c) t.at(c, r) = at(r, c);
    return t;
}

Matrix Matrix::operator*(const Matrix& o) const {
    if (cols_ != o.rows_) throw Error(ErrorCode::InvalidArgument, "matrix dimensions do not agree");
    if (!(field_ == o.field_)) throw Error(ErrorCode::FieldMismatch, "matrices over different fields");
    Matrix out(field_, rows_, o.cols_);
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t t = 0; t < cols_; ++t) {
            const Elem a = at(r, t);
            if (a == 0) continue;
            for (std::size_t c = 0; c < o.cols_; ++c) out.at(r, c) = field_.add(out.at(r, c), field_.mul(a, o.at(t, c)));
        }
    return out;
}

bool Matrix::operator==(const Matrix& o) const {
    return field_ == o.field_ && rows_ == o.rows_ && cols_ == o.cols_ && data_ == o.data_;
}

std::vector<std::size_t> Matrix::reduce() {
    const Field& f = field_;
    std::vector<std::size_t> pivots;
    std::size_t lead = 0;
    for (std::size_t c = 0; c < cols_ && lead < rows_; ++c) {
        std::size_t piv = lead;
        while (piv < rows_ && at(piv, c) == 0) ++piv;
        if (piv == rows_) continue;
        if (piv != lead)
            std::swap_ranges(data_.begin() + static_cast<std::ptrdiff_t>(piv * cols_),
                             data_.begin() + static_cast<std::ptrdiff_t>((piv + 1) * cols_),
                             data_.begin() + static_cast<std::ptrdiff_t>(lead * cols_));
        const Elem inv = f.inv(at(lead, c));
        for (std::size_t j = c; j < cols_; ++j) at(lead, j) = f.mul(at(lead, j), inv);
        for (std::size_t r = 0; r < rows_; ++r) {
            if (r == lead) continue;
            const Elem factor = at(r, c);
            if (factor == 0) continue;
            for (std::size_t j = c; j < cols_; ++j) at(r, j) = f.sub(at(r, j), f.mul(factor, at(lead, j)));
        }
        pivots.push_back(c);
        ++lead;
    }
    rows_ = lead;
    data_.resize(rows_ * cols_);
    return pivots;
}

std::size_t rank(Matrix m) { return m.reduce().size(); }

Matrix null_space(const Matrix& m) {
    const Field& f = m.field();
    Matrix r = m;
    const auto pivots = r.reduce();
    std::vector<bool> is_pivot(m.cols(), false);
    for (auto p : pivots) is_pivot[p] = true;
    Matrix out(f, 0, m.cols());
    std::vector<Elem> x(m.cols());
    for (std::size_t free = 0; free < m.cols(); ++free) {
        if (is_pivot[free]) continue;
        std::fill(x.begin(), x.end(), 0);
        x[free] = 1;
        for (std::size_t i = 0; i < pivots.size(); ++i) x[pivots[i]] = f.neg(r.at(i, free));
        out.append_row(x);
    }
    return out;
}

LinearCode LinearCode::from_generator(Matrix gen) {
    if (gen.cols() == 0) throw Error(ErrorCode::InvalidArgument, "generator matrix has no columns");
    gen.reduce();
    return LinearCode(std::move(gen));
}

LinearCode LinearCode::zero(const Field& f, std::size_t n) { return from_generator(Matrix(f, 0, n)); }

LinearCode LinearCode::full(const Field& f, std::size_t n) {
    Matrix m(f, n, n);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
    return from_generator(std::move(m));
}

bool LinearCode::contains(std::span<const Elem> word) const {
    Matrix m = gen_;
    m.append_row(word);
    return rank(std::move(m)) == k();
}

LinearCode rref(const Matrix& gen) { return LinearCode::from_generator(gen); }

LinearCode dual(const LinearCode& c) {
    if (c.k() == 0) return LinearCode::full(c.field(), c.n());
    return LinearCode::from_generator(null_space(c.generator()));
}

LinearCode sum(const LinearCode& a, const LinearCode& b) {
    Matrix m = a.generator();
    for (std::size_t r = 0; r < b.k(); ++r) m.append_row(b.generator().row(r));
    return LinearCode::from_generator(std::move(m));
}

LinearCode intersection(const LinearCode& a, const LinearCode& b) { return dual(sum(dual(a), dual(b))); }

LinearCode cyclic_code(const Poly& g, std::size_t n) {
    const Field& f = g.field();
    if (g.is_zero() || !divides(g, Poly::x_n_minus_1(f, n)))
        throw Error(ErrorCode::NotADivisor, g.to_tuple() + " does not divide x^" + std::to_string(n) + " - 1");
    const std::size_t deg = static_cast<std::size_t>(g.degree());
    Matrix m(f, n - deg, n);
    for (std::size_t i = 0; i + deg < n; ++i)
        for (std::size_t j = 0; j <= deg; ++j) m.at(i, i + j) = g.coeff(j);
    return LinearCode::from_generator(std::move(m));
}

BigInt WeightDistribution::total() const {
    BigInt t = 0;
    for (const auto& a : counts) t += a;
    return t;
}

std::size_t WeightDistribution::min_distance() const {
    for (std::size_t w = 1; w < counts.size(); ++w)
        if (counts[w] > 0) return w;
    return 0;
}

namespace {

double enumeration_cost(std::uint32_t q, std::size_t k, std::size_t n) {
    return std::pow(static_cast<double>(q), static_cast<double>(k)) * static_cast<double>(std::max<std::size_t>(n, 1));
}

struct SparseRow {
    std::vector<std::uint32_t> pos;
    std::vector<Elem> val;
};

// Messages whose last coordinate equals `top`. The other k - 1 coordinates
// are spread over the F_p-basis multiples x^t * row (t < m), each of additive
// order p, and walked in p-ary Gray-code order so each step adds one row.
void enumerate_slice(const Field& f, const std::vector<SparseRow>& rows, std::size_t n, Elem top,
                     std::vector<std::uint64_t>& hist) {
    const std::size_t k = rows.size();
    const std::uint32_t p = f.characteristic();
    std::vector<Elem> word(n, 0);
    std::size_t weight = 0;
    auto add_row = [&](const SparseRow& r) {
        for (std::size_t i = 0; i < r.pos.size(); ++i) {
            Elem& slot = word[r.pos[i]];
            const Elem old = slot;
            slot = f.add(old, r.val[i]);
            weight += (slot != 0);
            weight -= (old != 0);
        }
    };
    auto scaled = [&](const SparseRow& r, Elem c) {
        SparseRow out{r.pos, r.val};
        for (auto& v : out.val) v = f.mul(c, v);
        return out;
    };
    std::vector<SparseRow> basis;
    for (std::size_t r = 0; r + 1 < k; ++r) {
        Elem pt = 1;
        for (std::uint32_t t = 0; t < f.degree(); ++t, pt *= p) basis.push_back(scaled(rows[r], pt));
    }
    if (top != 0) add_row(scaled(rows[k - 1], top));
    ++hist[weight];
    const std::size_t digits = basis.size();
    std::vector<std::uint32_t> counter(digits, 0);
    for (;;) {
        std::size_t j = 0;
        while (j < digits && counter[j] == p - 1) counter[j++] = 0;
        if (j == digits) break;
        ++counter[j];
        add_row(basis[j]);
        ++hist[weight];
    }
}

}  // namespace

WeightDistribution weight_distribution(const LinearCode& c, const EnumerationOptions& opt) {
    const Field& f = c.field();
    const std::size_t n = c.n(), k = c.k();
    WeightDistribution out;
    out.counts.assign(n + 1, 0);
    if (k == 0) {
        out.counts[0] = 1;
        return out;
    }
    if (enumeration_cost(f.order(), k, n) > opt.budget)
        throw Error(ErrorCode::BudgetExceeded, "enumerating q^k = " + std::to_string(f.order()) + "^" + std::to_string(k) +
                                                   " codewords exceeds the budget");
    std::vector<SparseRow> rows(k);
    for (std::size_t r = 0; r < k; ++r)
        for (std::size_t j = 0; j < n; ++j)
            if (const Elem v = c.generator().at(r, j); v != 0) {
                rows[r].pos.push_back(static_cast<std::uint32_t>(j));
                rows[r].val.push_back(v);
            }

    const std::uint32_t q = f.order();
    unsigned jobs = opt.jobs == 0 ? std::max(1u, std::thread::hardware_concurrency()) : opt.jobs;
    jobs = std::min<unsigned>(jobs, q);
    std::vector<std::vector<std::uint64_t>> hists(jobs, std::vector<std::uint64_t>(n + 1, 0));
    auto worker = [&](unsigned id) {
        for (Elem top = id; top < q; top += jobs) enumerate_slice(f, rows, n, top, hists[id]);
    };
    if (jobs == 1) {
        worker(0);
    } else {
        std::vector<std::thread> pool;
        for (unsigned id = 0; id < jobs; ++id) pool.emplace_back(worker, id);
        for (auto& t : pool) t.join();
    }
    for (const auto& h : hists)
        for (std::size_t w = 0; w <= n; ++w) out.counts[w] += h[w];
    return out;
}

WeightDistribution macwilliams(const WeightDistribution& w, std::size_t n, std::size_t k, std::uint32_t q) {
    if (w.counts.size() != n + 1) throw Error(ErrorCode::InvalidArgument, "distribution length does not match n");
    std::vector<std::vector<BigInt>> binom(n + 1, std::vector<BigInt>(n + 1, 0));
    for (std::size_t i = 0; i <= n; ++i) {
        binom[i][0] = 1;
        for (std::size_t j = 1; j <= i; ++j) binom[i][j] = binom[i - 1][j - 1] + (j <= i - 1 ? binom[i - 1][j] : BigInt(0));
    }
    std::vector<BigInt> qm1_pow(n + 1, 1);
    for (std::size_t i = 1; i <= n; ++i) qm1_pow[i] = qm1_pow[i - 1] * (q - 1);
    BigInt size = 1;
    for (std::size_t i = 0; i < k; ++i) size *= q;

    WeightDistribution out;
    out.counts.assign(n + 1, 0);
    for (std::size_t j = 0; j <= n; ++j) {
        BigInt acc = 0;
        for (std::size_t i = 0; i <= n; ++i) {
            if (w.counts[i] == 0) continue;
            // Krawtchouk K_j(i)
            BigInt kj = 0;
            for (std::size_t s = 0; s <= j && s <= i; ++s) {
                if (j - s > n - i) continue;
                BigInt term = qm1_pow[j - s] * binom[i][s] * binom[n - i][j - s];
                if (s % 2) kj -= term;
                else kj += term;
            }
            acc += w.counts[i] * kj;
        }
        if (acc < 0 || acc % size != 0)
            throw Error(ErrorCode::InvalidArgument, "MacWilliams transform is not a valid distribution at weight " +
                                                        std::to_string(j));
        out.counts[j] = acc / size;
    }
    return out;
}

const char* method_name(DistanceMethod m) noexcept {
    switch (m) {
        case DistanceMethod::Trivial: return "trivial";
        case DistanceMethod::Direct: return "direct";
        case DistanceMethod::DualMacWilliams: return "dual_macwilliams";
    }
    return "unknown";
}

DistanceResult min_distance(const LinearCode& c, const EnumerationOptions& opt) {
    const std::size_t n = c.n(), k = c.k();
    const std::uint32_t q = c.field().order();
    if (k == 0) return {0, DistanceMethod::Trivial};
    if (k == n) return {1, DistanceMethod::Trivial};
    const double direct = enumeration_cost(q, k, n);
    const double via_dual = enumeration_cost(q, n - k, n);
    if (direct <= opt.budget && direct <= via_dual)
        return {weight_distribution(c, opt).min_distance(), DistanceMethod::Direct};
    if (via_dual <= opt.budget) {
        const auto dual_w = weight_distribution(dual(c), opt);
        return {macwilliams(dual_w, n, n - k, q).min_distance(), DistanceMethod::DualMacWilliams};
    }
    if (direct <= opt.budget) return {weight_distribution(c, opt).min_distance(), DistanceMethod::Direct};
    throw Error(ErrorCode::BudgetExceeded, "neither the code nor its dual fits the enumeration budget");
}

std::size_t hull_dim(const LinearCode& c) {
    if (c.k() == 0) return 0;
    const Matrix& g = c.generator();
    return c.k() - rank(g * g.transpose());
}

bool is_lcd(const LinearCode& c) { return hull_dim(c) == 0; }
bool is_self_orthogonal(const LinearCode& c) { return hull_dim(c) == c.k(); }
bool is_self_dual(const LinearCode& c) { return 2 * c.k() == c.n() && is_self_orthogonal(c); }

std::string bracket(std::size_t n, std::size_t k, std::size_t d, std::uint32_t q) {
    return "[" + std::to_string(n) + "," + std::to_string(k) + "," + std::to_string(d) + "]_" + std::to_string(q);
}

}  // namespace lcdring
