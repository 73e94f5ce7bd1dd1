#include "lcdring/lcd_search.hpp"

#include <algorithm>
#include <atomic>
#include <thread>

#include <json.hpp>

#include "best_known.hpp"

namespace lcdring {

namespace {

// Exponent vectors a_j in [0, mult_j], odometer order.
template <typename Fn>
void for_each_exponent(const Factorization& fac, Fn&& fn) {
    std::vector<std::uint32_t> a(fac.factors.size(), 0);
    for (;;) {
        fn(a);
        std::size_t j = 0;
        while (j < a.size() && a[j] == fac.factors[j].multiplicity) a[j++] = 0;
        if (j == a.size()) return;
        ++a[j];
    }
}

std::size_t divisor_count(const Factorization& fac, std::size_t budget) {
    std::size_t count = 1;
    for (const auto& f : fac.factors) {
        count *= f.multiplicity + 1;
        if (count > budget)
            throw Error(ErrorCode::BudgetExceeded, "x^n - 1 has more than " + std::to_string(budget) + " divisors");
    }
    return count;
}

Poly product(const Field& f, const Factorization& fac, const std::vector<std::uint32_t>& a) {
    Poly out = Poly::constant(f, 1);
    for (std::size_t j = 0; j < a.size(); ++j) out = out * pow(fac.factors[j].poly, a[j]);
    return out;
}

bool canonical_tuple_less(const std::vector<Poly>& a, const std::vector<Poly>& b) {
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i].canonical_less(b[i])) return true;
        if (b[i].canonical_less(a[i])) return false;
    }
    return false;
}

}  // namespace

std::vector<Poly> divisors_of_xn_minus_1(const Field& f, std::size_t n, std::size_t budget, std::uint64_t seed) {
    const auto fac = factor_xn_minus_1(f, n, seed);
    std::vector<Poly> out;
    out.reserve(divisor_count(fac, budget));
    for_each_exponent(fac, [&](const auto& a) { out.push_back(product(f, fac, a)); });
    std::sort(out.begin(), out.end(), [](const Poly& x, const Poly& y) { return x.canonical_less(y); });
    return out;
}

std::vector<ReciprocalDivisor> self_reciprocal_divisors(const Field& f, std::size_t n, std::size_t budget,
                                                        std::uint64_t seed) {
    const auto fac = factor_xn_minus_1(f, n, seed);
    divisor_count(fac, budget);
    std::vector<ReciprocalDivisor> out;
    for_each_exponent(fac, [&](const auto& a) {
        Poly d = product(f, fac, a);
        if (!is_self_reciprocal(d)) return;
        bool compliant = true;
        for (std::size_t j = 0; j < a.size(); ++j)
            compliant = compliant && (a[j] == 0 || a[j] == fac.factors[j].multiplicity);
        out.push_back({std::move(d), compliant});
    });
    std::sort(out.begin(), out.end(),
              [](const ReciprocalDivisor& x, const ReciprocalDivisor& y) { return x.poly.canonical_less(y.poly); });
    return out;
}

const std::vector<BestKnownEntry>& best_known_table() {
    static const std::vector<BestKnownEntry> table = [] {
        std::vector<BestKnownEntry> out;
        const auto j = nlohmann::json::parse(detail::kBestKnownJson);
        for (const auto& e : j.at("entries"))
            out.push_back({e.at("q").get<std::uint32_t>(), e.at("n").get<std::size_t>(), e.at("k").get<std::size_t>(),
                           e.at("d").get<std::size_t>(), e.at("label").get<std::string>()});
        return out;
    }();
    return table;
}

std::string optimality_label(std::uint32_t q, std::size_t length, std::size_t k, std::size_t d) {
    if (k > 0 && d == length - k + 1) return "MDS";
    for (const auto& e : best_known_table())
        if (e.q == q && e.n == length && e.k == k && d >= e.d) return e.label;
    return "";
}

SearchOutcome search(const SearchSpec& spec) {
    const Field f = Field::make(spec.p, spec.m);
    const Ring ring = Ring::make(f, spec.e);
    const GrayMatrix gm = spec.gray_rows.empty() ? find_matrix(ring, std::nullopt, spec.allow_any_gamma)
                                                 : validate_matrix(spec.gray_rows, ring, spec.allow_any_gamma);
    if (spec.n_min == 0 || spec.n_max < spec.n_min) throw Error(ErrorCode::InvalidArgument, "empty length range");

    SearchOutcome outcome;
    for (std::size_t n = spec.n_min; n <= spec.n_max; ++n) {
        std::vector<Poly> choices;
        if (spec.lcd_only) {
            // only self-reciprocal, multiplicity-compliant components can appear in an LCD code
            for (auto& r : self_reciprocal_divisors(f, n, kDefaultDivisorBudget, spec.seed))
                if (r.multiplicity_compliant) choices.push_back(std::move(r.poly));
        } else {
            choices = divisors_of_xn_minus_1(f, n, kDefaultDivisorBudget, spec.seed);
        }

        // odometer over e-tuples of choices, last component varying fastest
        std::vector<std::vector<Poly>> tuples;
        std::vector<std::size_t> idx(spec.e, 0);
        bool exhausted = choices.empty();
        while (!exhausted) {
            std::vector<Poly> t;
            for (auto i : idx) t.push_back(choices[i]);
            const bool equal_deg = std::all_of(t.begin(), t.end(), [&](const Poly& g) { return g.degree() == t[0].degree(); });
            std::size_t k = 0;
            for (const auto& g : t) k += n - static_cast<std::size_t>(g.degree());
            if (!(spec.non_free_only && equal_deg) && k >= spec.min_k) {
                if (tuples.size() == spec.max_combinations) {
                    outcome.truncated = true;
                    outcome.truncation_notes.push_back("n=" + std::to_string(n) + ": stopped after " +
                                                       std::to_string(spec.max_combinations) + " component tuples");
                    break;
                }
                tuples.push_back(std::move(t));
            }
            std::size_t j = spec.e;
            while (j > 0 && idx[j - 1] + 1 == choices.size()) idx[--j] = 0;
            if (j == 0) exhausted = true;
            else ++idx[j - 1];
        }

        std::vector<std::optional<SearchResult>> slots(tuples.size());
        std::vector<std::string> notes(tuples.size());
        std::atomic<std::size_t> next{0};
        auto worker = [&] {
            for (std::size_t i; (i = next.fetch_add(1)) < tuples.size();) {
                auto code = RingCyclicCode::build(ring, n, tuples[i], gm);
                const auto cert = is_lcd(code);
                if (spec.lcd_only && !cert.lcd) continue;
                const LinearCode img = gray_image(code);
                DistanceResult dist;
                try {
                    dist = min_distance(img, spec.enumeration);
                } catch (const Error& err) {
                    if (err.code() != ErrorCode::BudgetExceeded) throw;
                    notes[i] = "n=" + std::to_string(n) + ": distance budget exceeded for " +
                               tuples[i][0].to_tuple() + "...";
                    continue;
                }
                if (dist.d < spec.min_d) continue;
                SearchResult r(code);
                r.length = img.n();
                r.k = img.k();
                r.d = dist.d;
                r.method = dist.method;
                r.free = is_free(code);
                r.lcd = cert.lcd;
                r.self_dual = is_self_dual(code);
                r.hull = hull_dim(img);
                r.singleton_defect = r.length - r.k + 1 - r.d;
                r.optimal_ref = optimality_label(f.order(), r.length, r.k, r.d);
                slots[i] = std::move(r);
            }
        };
        const unsigned jobs = std::max(1u, spec.jobs);
        if (jobs == 1) {
            worker();
        } else {
            std::vector<std::thread> pool;
            for (unsigned t = 0; t < jobs; ++t) pool.emplace_back(worker);
            for (auto& t : pool) t.join();
        }
        outcome.examined += tuples.size();
        for (std::size_t i = 0; i < tuples.size(); ++i) {
            if (!notes[i].empty()) {
                outcome.truncated = true;
                outcome.truncation_notes.push_back(notes[i]);
            }
            if (slots[i]) outcome.results.push_back(std::move(*slots[i]));
        }
    }

    std::stable_sort(outcome.results.begin(), outcome.results.end(), [](const SearchResult& a, const SearchResult& b) {
        if (a.d != b.d) return a.d > b.d;
        if (a.k != b.k) return a.k > b.k;
        if (a.code.n() != b.code.n()) return a.code.n() < b.code.n();
        return canonical_tuple_less(a.code.components(), b.code.components());
    });
    return outcome;
}

}  // namespace lcdring
