/**
 * @file spec_io.hpp
 * @brief JSON code specs: {p, m, e, n, g: [descending coefficient vectors], M: rows, label}.
 *
 * Entries may be integers (reduced mod p, negatives allowed) or strings such
 * as "w^5". An optional "roots" array fixes the idempotent order.
 */
#pragma once

#include <string>

#include <json.hpp>

#include "lcdring/ring_cyclic.hpp"

namespace lcdring {

struct CodeSpec {
    RingCyclicCode code;
    std::string label;
};

/// Errors: ParseError on missing or mistyped keys; the domain errors of the builders otherwise.
CodeSpec code_from_json(const nlohmann::json& j, bool allow_any_gamma = false);
nlohmann::json code_to_json(const RingCyclicCode& c, const std::string& label = "");

/// Field element as written in specs: a number in the prime subfield, a string otherwise.
nlohmann::json elem_to_json(const Field& f, Elem x);
Elem elem_from_json(const Field& f, const nlohmann::json& j);

}  // namespace lcdring
