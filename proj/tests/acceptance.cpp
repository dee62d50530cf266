// Acceptance suite: prints one PASS/FAIL line per criterion and exits
// non-zero if any criterion fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "../tools/cli.hpp"
#include "support.hpp"

using namespace kacpal;

namespace {

// Runtime limits in seconds.
constexpr double kGoldenTableLimit = 10.0;
constexpr double kRelationSuiteLimit = 300.0;
constexpr double kDimensionSuiteLimit = 600.0;

const std::vector<std::pair<unsigned, unsigned>> kRelationCases{{2, 2}, {3, 2}, {4, 2}, {2, 3}, {3, 3}, {2, 4}};
const std::vector<std::pair<unsigned, unsigned>> kSmallCases{{2, 2}, {3, 2}, {2, 3}};

struct Outcome {
    bool passed = true;
    std::string detail;
    std::vector<std::string> notes;

    void fail(const std::string& why) {
        if (passed) detail = why;
        passed = false;
    }
};

std::string pair_str(unsigned n, unsigned m) { return "(" + std::to_string(n) + "," + std::to_string(m) + ")"; }

Outcome golden_table() {
    Outcome o;
    std::ostringstream out, err;
    const int code = cli::run_cli({"table", "--n", "2", "--m", "3", "--format", "json", "--expanded"}, out, err);
    if (code != 0) {
        o.fail("table exited with " + std::to_string(code) + ": " + err.str());
        return o;
    }
    const json table = json::parse(out.str());
    const auto& irreps = table["irreps"];
    if (irreps.size() != 10) o.fail("expected 10 irreps, got " + std::to_string(irreps.size()));

    std::vector<std::uint64_t> dims;
    std::uint64_t sum_sq = 0;
    std::map<std::string, AlgebraElement> by_spec;
    for (const auto& r : irreps) {
        dims.push_back(r["dimension"].get<std::uint64_t>());
        sum_sq += dims.back() * dims.back();
        by_spec.emplace(r["beta"]["spec"].get<std::string>(), algebra_from_json(r["idempotent"]));
    }
    if (dims != std::vector<std::uint64_t>{1, 2, 1, 3, 3, 1, 2, 1, 3, 3}) o.fail("dimension sequence differs");
    if (sum_sq != 48) o.fail("sum of squares " + std::to_string(sum_sq));

    const auto alg = GroupAlgebra::get(2, 3);
    const auto one = AlgebraElement::identity(alg);
    const auto s1 = s_element(alg, 1), s2 = s_element(alg, 2);
    const auto lam = [&](ZnVector v) { return lambda_idempotent(alg, v); };
    const auto sym = one + s1 + s2 + s1 * s2 + s2 * s1 + s1 * s2 * s1;
    const auto alt = one - s1 - s2 + s1 * s2 + s2 * s1 - s1 * s2 * s1;
    const auto mixed = (one + s1) * (one - s1 * s2 * s1);
    const Rational sixth = make_rational(1, 6), third = make_rational(1, 3), half = make_rational(1, 2);
    const std::vector<std::tuple<const char*, std::string, AlgebraElement>> expected{
        {"a", "0:3", lam({0, 0, 0}) * sym * sixth},
        {"b", "0:2,1", lam({0, 0, 0}) * mixed * third},
        {"c", "0:1,1,1", lam({0, 0, 0}) * alt * sixth},
        {"g", "0:2;1:1", lam({0, 0, 1}) * (one + s1) * half},
        {"h", "0:1,1;1:1", lam({0, 0, 1}) * (one - s1) * half},
        {"d", "1:3", lam({1, 1, 1}) * sym * sixth},
        {"e", "1:2,1", lam({1, 1, 1}) * mixed * third},
        {"f", "1:1,1,1", lam({1, 1, 1}) * alt * sixth},
        // printed with Lambda_(1,1,0); the non-decreasing representative is (0,1,1)
        {"i", "0:1;1:2", lam({0, 1, 1}) * (one + s2) * half},
        {"j", "0:1;1:1,1", lam({0, 1, 1}) * (one - s2) * half},
    };
    for (const auto& [row, spec, value] : expected) {
        auto it = by_spec.find(spec);
        if (it == by_spec.end())
            o.fail(std::string("row (") + row + ") missing");
        else if (it->second != value)
            o.fail(std::string("row (") + row + ") idempotent differs");
    }

    // the printed form for rows (i), (j): (1/2) Lambda_110 (1 +- s2)
    for (int sign : {1, -1}) {
        const auto literal = lam({1, 1, 0}) * (sign > 0 ? one + s2 : one - s2) * half;
        const bool idem = literal * literal == literal;
        const bool doubled_idem = (literal * Rational(2)) * (literal * Rational(2)) == literal * Rational(2);
        o.notes.push_back(std::string("row (") + (sign > 0 ? "i" : "j") + ") as printed: idempotent=" +
                          (idem ? "yes" : "no") + ", without the 1/2 idempotent=" + (doubled_idem ? "yes" : "no") +
                          ", dim H e = " + std::to_string(left_ideal_dimension(literal)));
    }
    return o;
}

Outcome relation_suite() {
    Outcome o;
    for (auto [n, m] : kRelationCases) {
        const auto report = verify_defining_relations(n, m);
        for (const char* family : {"x_power", "x_commute", "z_x_exchange", "z_commute", "z_braid", "z_square", "s_x_exchange",
                                   "s_square", "s_commute", "s_braid", "y_order", "z_square_y", "z_lambda_action",
                                   "lambda_family"}) {
            const auto* c = report.find(family);
            if (c == nullptr)
                o.fail(pair_str(n, m) + " missing family " + family);
            else if (!c->passed)
                o.fail(pair_str(n, m) + " " + family + ": " + c->counterexample);
        }
    }
    return o;
}

Outcome classification_counts() {
    Outcome o;
    for (auto [n, m] : kRelationCases) {
        TableOptions opts;
        opts.conjugacy = true;
        const auto t = irrep_table(n, m, opts);
        const auto brute = kacpal::testing::commuting_pairs_class_count(n, m);
        if (t.records.size() != t.count_formula) o.fail(pair_str(n, m) + " record count vs formula");
        if (!t.conjugacy_classes || *t.conjugacy_classes != t.records.size()) o.fail(pair_str(n, m) + " conjugacy count");
        if (brute != t.records.size()) o.fail(pair_str(n, m) + " commuting-pairs oracle " + std::to_string(brute));
        if (t.sum_dim_squares != wreath_order(n, m)) o.fail(pair_str(n, m) + " sum of squared dimensions");
        o.notes.push_back(pair_str(n, m) + ": " + std::to_string(t.records.size()) + " irreps, sum dim^2 = " +
                          std::to_string(t.sum_dim_squares));
    }
    return o;
}

Outcome dimension_agreement() {
    Outcome o;
    for (auto [n, m] : kSmallCases) {
        TableOptions opts;
        opts.idempotency = opts.ranks = opts.orthogonality = true;
        const auto t = irrep_table(n, m, opts);
        for (const auto& r : t.records) {
            if (r.dim_formula != r.dim_hook || r.dim_rank != r.dim_formula)
                o.fail(pair_str(n, m) + " " + r.beta.to_spec() + " dimensions disagree");
            if (r.self_sandwich != 1u) o.fail(pair_str(n, m) + " " + r.beta.to_spec() + " dim eHe != 1");
        }
        for (const auto& [name, c] : t.checks)
            if (!c.passed) o.fail(pair_str(n, m) + " " + name + ": " + c.detail);
    }
    return o;
}

Outcome hopf_axioms() {
    Outcome o;
    for (auto [n, m] : kSmallCases) {
        const auto report = verify_hopf(n, m);
        for (const auto& c : report.checks)
            if (!c.passed) o.fail(pair_str(n, m) + " " + c.family + ": " + c.counterexample);
        for (const auto& w : report.witnesses) {
            if (w.generator.front() != 'z') continue;
            if (w.symmetric)
                o.fail(pair_str(n, m) + " Delta(" + w.generator + ") is symmetric");
            else
                o.notes.push_back(pair_str(n, m) + " Delta(" + w.generator + ") - Delta^op at (" + std::to_string(w.left) +
                                  "," + std::to_string(w.right) + ") = " + w.difference);
        }
    }
    return o;
}

Outcome combinatorial_oracles() {
    Outcome o;
    for (int k = 1; k <= 8; ++k) {
        std::uint64_t sum_sq = 0;
        for (const auto& mu : partitions_of(k)) {
            const auto f = standard_tableaux_count(mu);
            if (f != kacpal::testing::brute_force_standard_tableaux(mu.parts())) o.fail("f" + mu.to_string());
            sum_sq += f * f;
        }
        if (sum_sq != factorial(static_cast<unsigned>(k))) o.fail("sum f^2 != " + std::to_string(k) + "!");
        if (partition_count(k) != kacpal::testing::brute_force_partition_count(k)) o.fail("p(" + std::to_string(k) + ")");
    }
    for (int k = 1; k <= 6; ++k)
        for (const auto& mu : partitions_of(k)) {
            const auto e = young_symmetrizer(row_consecutive_tableau(mu));
            if (e * e != e) o.fail("symmetrizer " + mu.to_string() + " not idempotent");
        }
    return o;
}

Outcome field_core() {
    Outcome o;
    auto g = kacpal::testing::rng(77);
    for (unsigned n = 1; n <= 6; ++n) {
        const unsigned order = 2 * n;
        const CycNumber zero = CycNumber::zero(order), one = CycNumber::one(order);
        for (int t = 0; t < 20; ++t) {
            const auto a = kacpal::testing::random_cyc(g, order), b = kacpal::testing::random_cyc(g, order),
                       c = kacpal::testing::random_cyc(g, order);
            const bool ok = a + b == b + a && a * b == b * a && (a * b) * c == a * (b * c) && a * (b + c) == a * b + a * c &&
                            a + zero == a && a * one == a && (a.is_zero() || a * a.inverse() == one);
            if (!ok) o.fail("field axioms at order " + std::to_string(order));
            for (const auto& x : {a, b, c})
                if (cyc_from_json(json::parse(cyc_to_json(x).dump())) != x) o.fail("json round trip at order " + std::to_string(order));
        }
        CycNumber p = one;
        for (unsigned k = 1; k <= order; ++k) {
            p *= zeta_power(order, 1);
            if (p.is_one() != (k == order)) o.fail("zeta_" + std::to_string(order) + " not primitive");
        }
        for (long a = 0; a < static_cast<long>(n); ++a)
            for (long b = 0; b < static_cast<long>(n); ++b)
                if (gauss_sum_check(n, a, b) != zeta_power(order, 2 * a * b) * Rational(n))
                    o.fail("gauss sum n=" + std::to_string(n));
    }
    for (auto [n, m] : kSmallCases) {
        const auto alg = GroupAlgebra::get(n, m);
        for (int t = 0; t < 10; ++t) {
            const auto a = kacpal::testing::random_element(g, alg, 8);
            if (algebra_from_json(json::parse(algebra_to_json(a).dump())) != a) o.fail("algebra json round trip");
        }
        for (const auto& beta : enumerate_labelled_partitions(n, m)) {
            const auto e = idempotent_from_beta(alg, beta);
            if (algebra_from_json(json::parse(algebra_to_json(e).dump())) != e) o.fail("idempotent json round trip");
        }
    }
    return o;
}

}  // namespace

int main() {
    struct Criterion {
        int id;
        const char* title;
        std::function<Outcome()> run;
        double limit;  // seconds, 0 for none
    };
    const std::vector<Criterion> criteria{
        {1, "H_{2,3} golden table", golden_table, kGoldenTableLimit},
        {2, "relation suite", relation_suite, kRelationSuiteLimit},
        {3, "classification counts", classification_counts, 0},
        {4, "dimension triple agreement and orthogonality", dimension_agreement, kDimensionSuiteLimit},
        {5, "Hopf axioms", hopf_axioms, 0},
        {6, "combinatorial oracles", combinatorial_oracles, 0},
        {7, "field core and JSON round trips", field_core, 0},
    };
    int failures = 0;
    for (const auto& c : criteria) {
        const auto start = std::chrono::steady_clock::now();
        Outcome o;
        try {
            o = c.run();
        } catch (const std::exception& e) {
            o.fail(std::string("exception: ") + e.what());
        }
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        if (c.limit > 0 && secs > c.limit) {
            char buf[64];
            std::snprintf(buf, sizeof buf, "runtime %.1fs over limit %.0fs", secs, c.limit);
            o.fail(buf);
        }
        char timing[32];
        std::snprintf(timing, sizeof timing, "%.2fs", secs);
        std::cout << "AC" << c.id << " " << (o.passed ? "PASS" : "FAIL") << "  " << c.title << "  [" << timing << "]";
        if (!o.passed) std::cout << "  -- " << o.detail;
        std::cout << "\n";
        for (const auto& note : o.notes) std::cout << "    " << note << "\n";
        failures += !o.passed;
    }
    std::cout << (failures ? std::to_string(failures) + " criteria failed" : "all criteria passed") << "\n";
    return failures ? 1 : 0;
}
