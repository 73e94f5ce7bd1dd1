#include "lcdring/spec_io.hpp"

#include <algorithm>

namespace lcdring {

namespace {

using nlohmann::json;

const json& require(const json& j, const char* key) {
    if (!j.is_object() || !j.contains(key)) throw Error(ErrorCode::ParseError, std::string("spec is missing '") + key + "'");
    return j.at(key);
}

std::uint32_t get_uint(const json& j, const char* key) {
    const json& v = require(j, key);
    if (!v.is_number_integer() || v.get<long long>() < 0)
        throw Error(ErrorCode::ParseError, std::string("'") + key + "' must be a non-negative integer");
    return v.get<std::uint32_t>();
}

std::vector<Elem> elems(const Field& f, const json& arr, const char* what) {
    if (!arr.is_array()) throw Error(ErrorCode::ParseError, std::string(what) + " must be an array");
    std::vector<Elem> out;
    for (const auto& x : arr) out.push_back(elem_from_json(f, x));
    return out;
}

}  // namespace

json elem_to_json(const Field& f, Elem x) {
    if (f.in_prime_subfield(x)) return x;
    return f.format(x);
}

Elem elem_from_json(const Field& f, const json& j) {
    if (j.is_number_integer()) return f.from_int(j.get<long long>());
    if (j.is_string()) return f.parse(j.get<std::string>());
    throw Error(ErrorCode::ParseError, "field element must be an integer or a string, got " + j.dump());
}

CodeSpec code_from_json(const json& j, bool allow_any_gamma) {
    const std::uint32_t p = get_uint(j, "p");
    const std::uint32_t m = j.contains("m") ? get_uint(j, "m") : 1;
    const std::uint32_t e = get_uint(j, "e");
    const std::uint32_t n = get_uint(j, "n");
    const Field f = Field::make(p, m);

    std::optional<std::vector<Elem>> roots;
    if (j.contains("roots")) roots = elems(f, j.at("roots"), "roots");
    const Ring ring = Ring::make(f, e, roots);

    const json& g = require(j, "g");
    if (!g.is_array()) throw Error(ErrorCode::ParseError, "'g' must be an array of coefficient vectors");
    std::vector<Poly> comps;
    for (const auto& v : g) comps.push_back(Poly::from_descending(f, elems(f, v, "generator")));

    std::optional<GrayMatrix> gm;
    if (j.contains("M") && !j.at("M").is_null()) {
        const json& rows = j.at("M");
        if (!rows.is_array()) throw Error(ErrorCode::ParseError, "'M' must be an array of rows");
        std::vector<std::vector<Elem>> mat;
        for (const auto& r : rows) mat.push_back(elems(f, r, "matrix row"));
        gm = validate_matrix(mat, ring, allow_any_gamma);
    }
    std::string label = j.contains("label") && j.at("label").is_string() ? j.at("label").get<std::string>() : "";
    return {RingCyclicCode::build(ring, n, std::move(comps), std::move(gm)), std::move(label)};
}

json code_to_json(const RingCyclicCode& c, const std::string& label) {
    const Field& f = c.field();
    json j;
    j["p"] = f.characteristic();
    j["m"] = f.degree();
    j["e"] = c.ring().e();
    j["n"] = c.n();
    json g = json::array();
    for (const auto& comp : c.components()) {
        json v = json::array();
        for (Elem x : comp.descending()) v.push_back(elem_to_json(f, x));
        g.push_back(std::move(v));
    }
    j["g"] = std::move(g);
    if (c.gray_matrix()) {
        json rows = json::array();
        for (const auto& r : c.gray_matrix()->rows()) {
            json v = json::array();
            for (Elem x : r) v.push_back(elem_to_json(f, x));
            rows.push_back(std::move(v));
        }
        j["M"] = std::move(rows);
    }
    auto sorted = c.ring().roots();
    std::sort(sorted.begin(), sorted.end());
    if (sorted != c.ring().roots()) {
        json r = json::array();
        for (Elem x : c.ring().roots()) r.push_back(elem_to_json(f, x));
        j["roots"] = std::move(r);
    }
    j["label"] = label;
    return j;
}

}  // namespace lcdring
