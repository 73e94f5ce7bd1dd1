/**
 * @file linear_code.hpp
 * @brief F_q-linear codes given by generator matrices.
 *
 * A LinearCode always stores its generator in reduced row-echelon form, so two
 * codes are equal iff their generators are equal. Minimum distance is certified
 * exactly, either by enumerating the code or by enumerating the dual and
 * applying the MacWilliams transform, whichever fits the budget.
 */
#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "lcdring/gf.hpp"
#include "lcdring/poly.hpp"

namespace lcdring {

using BigInt = boost::multiprecision::cpp_int;

/// Dense row-major matrix over a finite field.
class Matrix {
public:
    Matrix(Field field, std::size_t rows, std::size_t cols)
        : field_(std::move(field)), rows_(rows), cols_(cols), data_(rows * cols, 0) {}
    Matrix(Field field, std::size_t cols, const std::vector<std::vector<Elem>>& rows);

    const Field& field() const noexcept { return field_; }
    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }
    Elem& at(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    Elem at(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }
    std::span<const Elem> row(std::size_t r) const { return {data_.data() + r * cols_, cols_}; }
    std::span<Elem> row(std::size_t r) { return {data_.data() + r * cols_, cols_}; }

    void append_row(std::span<const Elem> r);
    Matrix transpose() const;
    Matrix operator*(const Matrix& o) const;
    bool operator==(const Matrix& o) const;

    /// In-place reduced row-echelon form; returns the pivot columns.
    std::vector<std::size_t> reduce();

private:
    Field field_;
    std::size_t rows_;
    std::size_t cols_;
    std::vector<Elem> data_;
};

std::size_t rank(Matrix m);
/// Basis (as rows) of {x : m x^T = 0}.
Matrix null_space(const Matrix& m);

class LinearCode {
public:
    /// Row space of `gen`, canonicalized. Throws InvalidArgument on an empty matrix (no columns).
    static LinearCode from_generator(Matrix gen);
    static LinearCode zero(const Field& f, std::size_t n);
    static LinearCode full(const Field& f, std::size_t n);

    const Field& field() const noexcept { return gen_.field(); }
    std::size_t n() const noexcept { return gen_.cols(); }
    std::size_t k() const noexcept { return gen_.rows(); }
    const Matrix& generator() const noexcept { return gen_; }

    bool contains(std::span<const Elem> word) const;
    bool operator==(const LinearCode& o) const { return gen_ == o.gen_; }

private:
    explicit LinearCode(Matrix gen) : gen_(std::move(gen)) {}
    Matrix gen_;
};

LinearCode rref(const Matrix& gen);
LinearCode dual(const LinearCode& c);
LinearCode intersection(const LinearCode& a, const LinearCode& b);
LinearCode sum(const LinearCode& a, const LinearCode& b);

/// Generator rows x^i g(x), 0 <= i < n - deg g. Throws NotADivisor unless g | x^n - 1.
LinearCode cyclic_code(const Poly& g, std::size_t n);

struct WeightDistribution {
    std::vector<BigInt> counts;  ///< A_0 .. A_n

    std::size_t length() const { return counts.empty() ? 0 : counts.size() - 1; }
    BigInt total() const;
    /// Least w >= 1 with A_w > 0, or 0 for the zero code.
    std::size_t min_distance() const;
    bool operator==(const WeightDistribution& o) const { return counts == o.counts; }
};

struct EnumerationOptions {
    /// Symbol operations allowed per enumeration, counted as q^k * n.
    double budget = 1e8;
    /// Worker threads for the enumeration; 0 picks hardware concurrency.
    unsigned jobs = 1;
};

/// Exact distribution by walking F_q^k in Gray-code order. Throws BudgetExceeded.
WeightDistribution weight_distribution(const LinearCode& c, const EnumerationOptions& opt = {});

/// Distribution of the [n, n-k] dual from that of an [n, k] code over F_q.
/// Throws InvalidArgument if the result is not a nonnegative integer vector.
WeightDistribution macwilliams(const WeightDistribution& w, std::size_t n, std::size_t k, std::uint32_t q);

enum class DistanceMethod { Trivial, Direct, DualMacWilliams };
const char* method_name(DistanceMethod m) noexcept;

struct DistanceResult {
    std::size_t d = 0;  ///< 0 for the zero code
    DistanceMethod method = DistanceMethod::Trivial;
};

/// Direct enumeration when affordable, else dual enumeration + MacWilliams.
DistanceResult min_distance(const LinearCode& c, const EnumerationOptions& opt = {});

/// dim(C ∩ C^⊥) = k - rank(G G^T).
std::size_t hull_dim(const LinearCode& c);
bool is_lcd(const LinearCode& c);
bool is_self_orthogonal(const LinearCode& c);
bool is_self_dual(const LinearCode& c);

/// `[n,k,d]_q`
std::string bracket(std::size_t n, std::size_t k, std::size_t d, std::uint32_t q);

}  // namespace lcdring
