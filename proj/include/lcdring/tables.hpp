/**
 * @file tables.hpp
 * @brief Published parameter tables as fixtures, and their replay.
 */
#pragma once

#include <string>
#include <vector>

#include "lcdring/linear_code.hpp"

namespace lcdring {

struct CodeFixture {
    std::string table;  ///< "tab1", "tab2" or "tab3"
    std::uint32_t p, m;
    std::size_t n;        ///< length used to build the code
    std::size_t printed_n_ring;  ///< n as printed; differs from `n` for corrected rows
    std::string g1, g2;   ///< descending tuples as printed
    std::string gray;     ///< Gray matrix rows
    std::size_t len, k, d;  ///< printed Gray-image parameters
    std::string remark;     ///< "Optimal", "BKLC" or "MDS"
    /// Set for rows whose printed k contradicts the generator degrees; the row is reported as DISPUTED.
    bool disputed = false;
    std::string note;
};

/// Rows of the idempotent table: root order and the printed idempotents as c * prod (u + a).
struct IdempotentFixture {
    std::uint32_t e, q;
    std::vector<Elem> roots;
    struct Factored {
        Elem c;
        std::vector<Elem> shifts;
    };
    std::vector<Factored> mus;
    /// s_i coefficients on a_0..a_{e-1}
    std::vector<std::vector<Elem>> s;
    std::string note;
};

const std::vector<CodeFixture>& code_fixtures();
const std::vector<IdempotentFixture>& idempotent_fixtures();

enum class RowStatus { Pass, Fail, Disputed };
const char* status_name(RowStatus s) noexcept;

struct RowReport {
    std::string table;
    std::string label;     ///< row identification
    std::string expected;
    std::string computed;
    RowStatus status;
    std::string detail;
};

/// Replays `which` in {"tabA", "tab1", "tab2", "tab3", "all"}.
std::vector<RowReport> replay_tables(const std::string& which, const EnumerationOptions& opt = {});

}  // namespace lcdring
