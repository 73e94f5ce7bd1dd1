// lcdring: command-line front end for cyclic and LCD codes over F_q[u]/(u^e - 1).

#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "lcdring/lcd_search.hpp"
#include "lcdring/spec_io.hpp"
#include "lcdring/tables.hpp"

using nlohmann::json;
using namespace lcdring;

namespace {

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct Common {
    std::string format = "text";
    std::string out;
    std::uint64_t seed = kDefaultSeed;
    unsigned jobs = 1;
    double budget = 1e8;
};

struct CodeArgs {
    std::string spec;
    std::uint32_t p = 0, m = 1, e = 2;
    std::size_t n = 0;
    std::vector<std::string> g;
    std::string gray_matrix;
    std::string roots;
    std::string label;
    bool allow_any_gamma = false;
};

void add_code_options(CLI::App* cmd, CodeArgs& a) {
    cmd->add_option("--spec", a.spec, "JSON code spec file");
    cmd->add_option("--p", a.p, "characteristic");
    cmd->add_option("--m", a.m, "extension degree");
    cmd->add_option("--e", a.e, "ring parameter e (e | q - 1)");
    cmd->add_option("--n", a.n, "code length over the ring");
    cmd->add_option("--g", a.g, "component generator as a descending tuple, once per component");
    cmd->add_option("--gray-matrix", a.gray_matrix, "Gray matrix rows, e.g. 3,2;2,2");
    cmd->add_option("--roots", a.roots, "idempotent root order, e.g. 4,2,1");
    cmd->add_option("--label", a.label, "free-form label stored in the spec");
    cmd->add_flag("--allow-any-gamma", a.allow_any_gamma, "accept Gray matrices whose gamma^e is not a square");
}

std::vector<Elem> parse_list(const Field& f, const std::string& text) {
    std::vector<Elem> out;
    std::stringstream ss(text);
    std::string tok;
    while (std::getline(ss, tok, ',')) out.push_back(f.parse(tok));
    return out;
}

Ring make_ring(const Field& f, std::uint32_t e, const std::string& roots) {
    if (roots.empty()) return Ring::make(f, e);
    return Ring::make(f, e, parse_list(f, roots));
}

CodeSpec load_code(const CodeArgs& a) {
    if (!a.spec.empty()) {
        std::ifstream in(a.spec);
        if (!in) throw UsageError("cannot open spec file '" + a.spec + "'");
        json j;
        try {
            j = json::parse(in);
        } catch (const json::parse_error& err) {
            throw Error(ErrorCode::ParseError, std::string("malformed spec file: ") + err.what());
        }
        return code_from_json(j, a.allow_any_gamma);
    }
    if (a.p == 0 || a.n == 0 || a.g.empty()) throw UsageError("give --spec or all of --p, --n and --g");
    const Field f = Field::make(a.p, a.m);
    const Ring ring = make_ring(f, a.e, a.roots);
    std::vector<Poly> comps;
    for (const auto& t : a.g) comps.push_back(parse_tuple(f, t));
    std::optional<GrayMatrix> gm;
    if (!a.gray_matrix.empty()) gm = validate_matrix(parse_matrix(f, a.gray_matrix), ring, a.allow_any_gamma);
    return {RingCyclicCode::build(ring, a.n, std::move(comps), std::move(gm)), a.label};
}

GrayMatrix matrix_for(const RingCyclicCode& c, const CodeArgs& a) {
    if (!a.gray_matrix.empty() && !a.spec.empty())
        return validate_matrix(parse_matrix(c.field(), a.gray_matrix), c.ring(), a.allow_any_gamma);
    if (c.gray_matrix()) return *c.gray_matrix();
    return find_matrix(c.ring(), std::nullopt, a.allow_any_gamma);
}

void emit(const Common& c, const std::string& text, const json& j) {
    std::string payload = c.format == "json" ? j.dump(2) + "\n" : text;
    if (c.out.empty()) {
        std::cout << payload;
        return;
    }
    std::ofstream out(c.out);
    if (!out) throw UsageError("cannot write '" + c.out + "'");
    out << payload;
}

json classification(const RingCyclicCode& c) {
    const auto cert = is_lcd(c);
    json lcd = {{"lcd", cert.lcd}, {"coprime_length", cert.coprime_length}};
    if (!cert.lcd) {
        lcd["failing_component"] = *cert.failing_component + 1;
        lcd["violated"] = cert.violated;
    }
    return {{"free", is_free(c)}, {"lcd", cert.lcd}, {"self_dual", is_self_dual(c)}, {"lcd_certificate", lcd}};
}

std::string matrix_text(const Matrix& m) {
    std::string out;
    for (std::size_t r = 0; r < m.rows(); ++r) {
        out += "  ";
        for (std::size_t c = 0; c < m.cols(); ++c) out += (c ? " " : "") + m.field().format(m.at(r, c));
        out += "\n";
    }
    return out;
}

json matrix_json(const Matrix& m) {
    json rows = json::array();
    for (std::size_t r = 0; r < m.rows(); ++r) {
        json row = json::array();
        for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(elem_to_json(m.field(), m.at(r, c)));
        rows.push_back(std::move(row));
    }
    return rows;
}

// ---- verbs ----

void run_factor(const Common& c, std::uint32_t p, std::uint32_t m, std::size_t n, const std::string& poly) {
    const Field f = Field::make(p, m);
    Factorization fac;
    std::string what;
    if (!poly.empty()) {
        fac = factor(parse_tuple(f, poly), c.seed);
        what = parse_tuple(f, poly).to_string();
    } else {
        if (n == 0) throw UsageError("give --n or --poly");
        fac = factor_xn_minus_1(f, n, c.seed);
        what = "x^" + std::to_string(n) + " - 1";
    }
    json factors = json::array();
    std::string text = what + " = " + fac.to_string() + "\n";
    for (const auto& fc : fac.factors) {
        json v = json::array();
        for (Elem x : fc.poly.descending()) v.push_back(elem_to_json(f, x));
        factors.push_back({{"poly", v}, {"tuple", fc.poly.to_tuple()}, {"multiplicity", fc.multiplicity}});
        text += "  " + fc.poly.to_tuple() + (fc.multiplicity > 1 ? "^" + std::to_string(fc.multiplicity) : "") + "\n";
    }
    emit(c, text, {{"q", f.order()}, {"input", what}, {"unit", elem_to_json(f, fac.unit)}, {"factors", factors}});
}

void run_idempotents(const Common& c, std::uint32_t p, std::uint32_t m, std::uint32_t e, const std::string& roots) {
    const Field f = Field::make(p, m);
    const Ring ring = make_ring(f, e, roots);
    std::string text = ring.describe() + "\n";
    json mus = json::array();
    for (std::size_t i = 0; i < e; ++i) {
        const RingElement mu_i = ring.mu(i);
        const Poly mu(f, mu_i.ucoeffs());
        const std::string name = "mu_" + std::to_string(i + 1);
        text += name + " = " + mu.to_string('u') + "    (G_" + std::to_string(i + 1) + " = " +
                ring.idempotents().G[i].to_string('u') + ", root " + f.format(ring.roots()[i]) + ")\n";
        json coeffs = json::array();
        for (Elem x : mu_i.ucoeffs()) coeffs.push_back(elem_to_json(f, x));
        mus.push_back({{"index", i + 1}, {"root", elem_to_json(f, ring.roots()[i])}, {"mu", mu.to_string('u')},
                       {"ucoeffs", coeffs}});
    }
    emit(c, text, {{"q", f.order()}, {"e", e}, {"idempotents", mus}});
}

void run_build(const Common& c, const CodeArgs& a) {
    const CodeSpec spec = load_code(a);
    const auto& code = spec.code;
    const auto gen = ring_generator(code);
    json j = code_to_json(code, spec.label);
    j["ring_generator"] = ring_poly_to_string(gen.g);
    j["log_q_size"] = code.log_size();
    j["classification"] = classification(code);
    std::string text = "ring " + code.ring().describe() + ", n = " + std::to_string(code.n()) + "\n";
    for (std::size_t i = 0; i < code.components().size(); ++i)
        text += "g_" + std::to_string(i + 1) + " = " + code.components()[i].to_tuple() + "\n";
    text += "g(x) = " + ring_poly_to_string(gen.g) + "\n";
    text += "|C| = q^" + std::to_string(code.log_size()) + "\n";
    text += "free: " + std::string(is_free(code) ? "yes" : "no") + ", lcd: " + (is_lcd(code).lcd ? "yes" : "no") +
            ", self-dual: " + (is_self_dual(code) ? "yes" : "no") + "\n";
    emit(c, text, j);
}

void run_gray(const Common& c, const CodeArgs& a) {
    const CodeSpec spec = load_code(a);
    const GrayMatrix gm = matrix_for(spec.code, a);
    const LinearCode img = gray_image(spec.code, gm);
    std::string text = "Gray matrix " + gm.to_string() + " (gamma = " + spec.code.field().format(gm.gamma()) + ")\n";
    text += "[" + std::to_string(img.n()) + "," + std::to_string(img.k()) + "] generator (rref):\n" + matrix_text(img.generator());
    emit(c, text, {{"n", img.n()}, {"k", img.k()}, {"q", spec.code.field().order()}, {"M", gm.to_string()},
                   {"generator", matrix_json(img.generator())}});
}

void run_distance(const Common& c, const CodeArgs& a) {
    const CodeSpec spec = load_code(a);
    const GrayMatrix gm = matrix_for(spec.code, a);
    const LinearCode img = gray_image(spec.code, gm);
    const auto d = min_distance(img, {c.budget, c.jobs});
    const auto q = spec.code.field().order();
    const std::string params = bracket(img.n(), img.k(), d.d, q);
    emit(c, params + " (" + method_name(d.method) + ")\n",
         {{"params", params}, {"n", img.n()}, {"k", img.k()}, {"d", d.d}, {"q", q}, {"method", method_name(d.method)}});
}

void run_check(const Common& c, const CodeArgs& a) {
    const CodeSpec spec = load_code(a);
    const auto& code = spec.code;
    const GrayMatrix gm = matrix_for(code, a);
    const LinearCode img = gray_image(code, gm);
    const auto d = min_distance(img, {c.budget, c.jobs});
    const auto q = code.field().order();
    const bool mds = img.k() > 0 && d.d == img.n() - img.k() + 1;
    const std::string ref = optimality_label(q, img.n(), img.k(), d.d);
    json j = classification(code);
    j["params"] = bracket(img.n(), img.k(), d.d, q);
    j["method"] = method_name(d.method);
    j["mds"] = mds;
    j["optimal_ref"] = ref;
    j["hull_dim"] = hull_dim(img);
    j["label"] = spec.label;
    const auto cert = is_lcd(code);
    std::string text = j["params"].get<std::string>() + " (" + method_name(d.method) + ")\n";
    text += "free: " + std::string(is_free(code) ? "yes" : "no") + "\n";
    text += "lcd: " + std::string(cert.lcd ? "yes" : "no (" + cert.violated + ")") + "; Gray image hull dim " +
            std::to_string(hull_dim(img)) + "\n";
    text += "self-dual: " + std::string(is_self_dual(code) ? "yes" : "no") + "\n";
    text += "mds: " + std::string(mds ? "yes" : "no") + (ref.empty() || ref == "MDS" ? "" : ", " + ref) + "\n";
    emit(c, text, j);
}

struct SearchArgs {
    std::uint32_t p = 0, m = 1, e = 2;
    std::string n;
    std::string gray_matrix;
    bool lcd = false, non_free = false, allow_any_gamma = false;
    std::size_t min_k = 0, min_d = 0, max_combinations = 100'000;
    std::size_t limit = 0;
};

void run_search(const Common& c, const SearchArgs& a) {
    SearchSpec s;
    s.p = a.p;
    s.m = a.m;
    s.e = a.e;
    if (a.n.empty()) throw UsageError("--n is required (a length or a range like 3-8)");
    try {
        if (auto dash = a.n.find('-'); dash != std::string::npos) {
            s.n_min = std::stoul(a.n.substr(0, dash));
            s.n_max = std::stoul(a.n.substr(dash + 1));
        } else {
            s.n_min = s.n_max = std::stoul(a.n);
        }
    } catch (const std::logic_error&) {
        throw UsageError("--n must be a length or a range like 3-8");
    }
    const Field f = Field::make(a.p, a.m);
    if (!a.gray_matrix.empty()) s.gray_rows = parse_matrix(f, a.gray_matrix);
    s.allow_any_gamma = a.allow_any_gamma;
    s.lcd_only = a.lcd;
    s.non_free_only = a.non_free;
    s.min_k = a.min_k;
    s.min_d = a.min_d;
    s.max_combinations = a.max_combinations;
    s.enumeration = {c.budget, 1};
    s.jobs = c.jobs;
    s.seed = c.seed;
    const auto outcome = search(s);

    json arr = json::array();
    std::string text;
    std::size_t shown = 0;
    for (const auto& r : outcome.results) {
        if (a.limit && shown == a.limit) break;
        ++shown;
        const auto params = bracket(r.length, r.k, r.d, f.order());
        json j = {{"spec", code_to_json(r.code)},
                  {"params", params},
                  {"n", r.length},
                  {"k", r.k},
                  {"d", r.d},
                  {"method", method_name(r.method)},
                  {"free", r.free},
                  {"lcd", r.lcd},
                  {"self_dual", r.self_dual},
                  {"hull_dim", r.hull},
                  {"singleton_defect", r.singleton_defect},
                  {"optimal_ref", r.optimal_ref}};
        arr.push_back(std::move(j));
        text += params + "  n=" + std::to_string(r.code.n());
        for (const auto& g : r.code.components()) text += " " + g.to_tuple();
        text += std::string(r.free ? "  free" : "  non-free") + (r.lcd ? " lcd" : "") + (r.self_dual ? " self-dual" : "");
        text += "  defect " + std::to_string(r.singleton_defect) + (r.optimal_ref.empty() ? "" : "  " + r.optimal_ref) + "\n";
    }
    text += std::to_string(outcome.results.size()) + " codes from " + std::to_string(outcome.examined) + " component tuples\n";
    for (const auto& note : outcome.truncation_notes) text += "truncated: " + note + "\n";
    // The JSON array is the result list; truncation is reported on stderr.
    for (const auto& note : outcome.truncation_notes)
        if (c.format == "json") std::cerr << json({{"truncated", note}}).dump() << "\n";
    emit(c, text, arr);
}

void run_tables(const Common& c, const std::string& which) {
    const auto reports = replay_tables(which, {c.budget, c.jobs});
    json arr = json::array();
    std::string text;
    std::size_t pass = 0, fail = 0, disputed = 0;
    for (const auto& r : reports) {
        const std::string status = status_name(r.status);
        text += status + std::string(10 - status.size(), ' ') + r.table + "  " + r.label;
        if (r.table != "tabA") text += "  printed " + r.expected + "  computed " + r.computed;
        if (!r.detail.empty()) text += "  (" + r.detail + ")";
        text += "\n";
        arr.push_back({{"table", r.table}, {"row", r.label}, {"expected", r.expected}, {"computed", r.computed},
                       {"status", status}, {"detail", r.detail}});
        pass += r.status == RowStatus::Pass;
        fail += r.status == RowStatus::Fail;
        disputed += r.status == RowStatus::Disputed;
    }
    text += std::to_string(pass) + " passed, " + std::to_string(fail) + " failed, " + std::to_string(disputed) +
            " disputed\n";
    emit(c, text, {{"rows", arr}, {"passed", pass}, {"failed", fail}, {"disputed", disputed}});
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Cyclic and LCD codes over F_q[u]/(u^e - 1) and their Gray images"};
    app.require_subcommand(1);
    Common common;
    app.add_option("--format", common.format, "output format")->check(CLI::IsMember({"text", "json"}));
    app.add_option("--out", common.out, "write output to this file instead of stdout");
    app.add_option("--seed", common.seed, "seed for randomized factorization");
    app.add_option("--jobs", common.jobs, "worker threads");
    app.add_option("--budget", common.budget, "enumeration budget (q^k * n)");
    // accept the global options after the verb as well
    app.fallthrough();

    std::uint32_t p = 0, m = 1, e = 2;
    std::size_t n = 0;
    std::string poly, roots, which = "all";

    auto* factor_cmd = app.add_subcommand("factor", "factor x^n - 1 or a given polynomial");
    factor_cmd->add_option("--p", p)->required();
    factor_cmd->add_option("--m", m);
    factor_cmd->add_option("--n", n);
    factor_cmd->add_option("--poly", poly, "descending tuple");

    auto* idem_cmd = app.add_subcommand("idempotents", "idempotent system of F_q[u]/(u^e - 1)");
    idem_cmd->add_option("--p", p)->required();
    idem_cmd->add_option("--m", m);
    idem_cmd->add_option("--e", e)->required();
    idem_cmd->add_option("--roots", roots, "root order, e.g. 4,2,1");

    CodeArgs code_args;
    auto* build_cmd = app.add_subcommand("build", "build a cyclic code and emit its spec");
    add_code_options(build_cmd, code_args);
    auto* gray_cmd = app.add_subcommand("gray", "generator matrix of the Gray image");
    add_code_options(gray_cmd, code_args);
    auto* dist_cmd = app.add_subcommand("distance", "certified [n,k,d] of the Gray image");
    add_code_options(dist_cmd, code_args);
    auto* check_cmd = app.add_subcommand("check", "classification and parameters");
    add_code_options(check_cmd, code_args);

    SearchArgs search_args;
    auto* search_cmd = app.add_subcommand("search", "enumerate component generators and rank Gray images");
    search_cmd->add_option("--p", search_args.p)->required();
    search_cmd->add_option("--m", search_args.m);
    search_cmd->add_option("--e", search_args.e);
    search_cmd->add_option("--n", search_args.n, "length or range a-b")->required();
    search_cmd->add_option("--gray-matrix", search_args.gray_matrix);
    search_cmd->add_flag("--lcd", search_args.lcd, "LCD codes only");
    search_cmd->add_flag("--non-free", search_args.non_free, "non-free codes only");
    search_cmd->add_option("--min-k", search_args.min_k);
    search_cmd->add_option("--min-d", search_args.min_d);
    search_cmd->add_option("--max-combinations", search_args.max_combinations);
    search_cmd->add_option("--limit", search_args.limit, "print at most this many results");
    search_cmd->add_flag("--allow-any-gamma", search_args.allow_any_gamma);

    auto* tables_cmd = app.add_subcommand("tables", "replay the published tables");
    tables_cmd->add_option("--which", which)->check(CLI::IsMember({"tabA", "tab1", "tab2", "tab3", "all"}));

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& err) {
        const int rc = app.exit(err);
        return rc == 0 ? 0 : 2;
    }

    try {
        if (*factor_cmd) run_factor(common, p, m, n, poly);
        else if (*idem_cmd) run_idempotents(common, p, m, e, roots);
        else if (*build_cmd) run_build(common, code_args);
        else if (*gray_cmd) run_gray(common, code_args);
        else if (*dist_cmd) run_distance(common, code_args);
        else if (*check_cmd) run_check(common, code_args);
        else if (*search_cmd) run_search(common, search_args);
        else if (*tables_cmd) run_tables(common, which);
    } catch (const UsageError& err) {
        std::cerr << "usage error: " << err.what() << "\n";
        return 2;
    } catch (const Error& err) {
        if (common.format == "json")
            std::cerr << json({{"error", error_code_name(err.code())}, {"message", err.what()}}).dump() << "\n";
        else
            std::cerr << "error (" << error_code_name(err.code()) << "): " << err.what() << "\n";
        return 1;
    }
    return 0;
}
