/**
 * @file lcd_search.hpp
 * @brief Exhaustive search over component generators of cyclic codes over R_{e,q}.
 */
#pragma once

#include <optional>
#include <string>
#include <vector>

#include "lcdring/graymap.hpp"
#include "lcdring/linear_code.hpp"
#include "lcdring/poly.hpp"
#include "lcdring/ring_cyclic.hpp"

namespace lcdring {

inline constexpr std::size_t kDefaultDivisorBudget = 100'000;

/// Every monic divisor of x^n - 1, in canonical order. BudgetExceeded past `budget` divisors.
std::vector<Poly> divisors_of_xn_minus_1(const Field& f, std::size_t n, std::size_t budget = kDefaultDivisorBudget,
                                         std::uint64_t seed = kDefaultSeed);

struct ReciprocalDivisor {
    Poly poly;
    /// Each irreducible factor appears with its full multiplicity in x^n - 1
    /// (always true when gcd(n, q) = 1).
    bool multiplicity_compliant;
};

std::vector<ReciprocalDivisor> self_reciprocal_divisors(const Field& f, std::size_t n,
                                                        std::size_t budget = kDefaultDivisorBudget,
                                                        std::uint64_t seed = kDefaultSeed);

struct SearchSpec {
    std::uint32_t p = 0;
    std::uint32_t m = 1;
    std::uint32_t e = 2;
    std::size_t n_min = 1;
    std::size_t n_max = 1;
    /// Gray matrix rows; found with find_matrix when empty.
    std::vector<std::vector<Elem>> gray_rows;
    bool allow_any_gamma = false;

    bool lcd_only = false;
    bool non_free_only = false;
    std::size_t min_k = 0;
    std::size_t min_d = 0;

    /// Component tuples examined per length before truncating.
    std::size_t max_combinations = 100'000;
    EnumerationOptions enumeration{1e7, 1};
    /// Worker threads over component tuples.
    unsigned jobs = 1;
    std::uint64_t seed = kDefaultSeed;
};

struct SearchResult {
    explicit SearchResult(RingCyclicCode c) : code(std::move(c)) {}

    RingCyclicCode code;
    std::size_t length = 0;  ///< e n
    std::size_t k = 0;
    std::size_t d = 0;
    DistanceMethod method = DistanceMethod::Trivial;
    bool free = false;
    bool lcd = false;
    bool self_dual = false;
    /// Gray-image hull dimension; zero exactly when lcd.
    std::size_t hull = 0;
    /// length - k + 1 - d
    std::size_t singleton_defect = 0;
    /// "MDS", "Optimal", "BKLC" or empty.
    std::string optimal_ref;
};

struct SearchOutcome {
    std::vector<SearchResult> results;
    bool truncated = false;
    std::vector<std::string> truncation_notes;
    std::size_t examined = 0;
};

/// Ranked by d desc, k desc, n asc, then canonical generator order.
SearchOutcome search(const SearchSpec& spec);

/// Label for [length, k, d]_q from the bundled best-known reference; "MDS" when d = length - k + 1.
std::string optimality_label(std::uint32_t q, std::size_t length, std::size_t k, std::size_t d);

struct BestKnownEntry {
    std::uint32_t q;
    std::size_t n, k, d;
    std::string label;
};
const std::vector<BestKnownEntry>& best_known_table();

}  // namespace lcdring
