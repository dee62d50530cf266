#pragma once

// Command-line front end. run_cli takes the argument list without the
// program name and writes to the given streams, so tests can drive it
// in-process.

#include <fstream>
#include <iostream>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include <kacpal/kacpal.hpp>

namespace kacpal::cli {

enum ExitCode : int { kOk = 0, kCheckFailed = 1, kUsage = 2 };

struct RunConfig {
    unsigned n = 0;
    unsigned m = 0;
    std::string format = "text";
    std::string checks;
    std::string beta;
    bool expanded = false;
    std::uint64_t cap_group_order = 0;  // 0: use defaults / KACPAL_CAP
    std::string out;
};

class usage_error : public std::invalid_argument {
   public:
    using std::invalid_argument::invalid_argument;
};

inline const std::set<std::string>& known_checks() {
    static const std::set<std::string> names{"relations", "idempotency", "ranks", "orthogonality", "hopf", "conjugacy"};
    return names;
}

inline std::set<std::string> parse_checks(const std::string& list, const std::set<std::string>& fallback) {
    if (list.empty()) return fallback;
    std::set<std::string> out;
    std::stringstream ss(list);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (item.empty()) continue;
        if (!known_checks().count(item)) throw usage_error("unknown check '" + item + "'");
        out.insert(item);
    }
    return out;
}

inline Caps caps_for(const RunConfig& cfg) {
    return cfg.cap_group_order ? Caps::uniform(cfg.cap_group_order) : Caps::from_env();
}

inline std::string join_lambda(const ZnVector& v) {
    std::string s;
    for (std::size_t i = 0; i < v.size(); ++i) s += (i ? " " : "") + std::to_string(v[i]);
    return s;
}

inline std::string perm_string(const Perm& p) {
    std::string s;
    for (std::size_t i = 0; i < p.size(); ++i) s += (i ? " " : "") + std::to_string(p(i));
    return s;
}

// --- table ----------------------------------------------------------------------

inline TableOptions table_options(const std::set<std::string>& checks, const Caps& caps, bool include) {
    TableOptions opts;
    opts.idempotency = checks.count("idempotency") > 0;
    opts.ranks = checks.count("ranks") > 0;
    opts.orthogonality = checks.count("orthogonality") > 0;
    opts.conjugacy = checks.count("conjugacy") > 0;
    opts.include_idempotents = include;
    opts.caps = caps;
    return opts;
}

inline int cmd_table(const RunConfig& cfg, std::ostream& out) {
    const auto checks = parse_checks(cfg.checks, {});
    if (checks.count("relations") || checks.count("hopf"))
        throw usage_error("table accepts only idempotency, ranks, orthogonality, conjugacy checks");
    const IrrepTable table = irrep_table(cfg.n, cfg.m, table_options(checks, caps_for(cfg), cfg.expanded));
    if (cfg.format == "json") {
        out << irrep_table_to_json(table).dump(2) << "\n";
    } else if (cfg.format == "csv") {
        out << "beta_spec,lambda,dim_formula,dim_hook,dim_rank\n";
        for (const auto& r : table.records)
            out << '"' << r.beta.to_spec() << "\"," << join_lambda(r.lambda) << ',' << r.dim_formula << ',' << r.dim_hook
                << ',' << (r.dim_rank ? std::to_string(*r.dim_rank) : "") << "\n";
    } else {
        out << "H_{" << cfg.n << "," << cfg.m << "}: " << table.records.size() << " irreducible representations\n";
        for (const auto& r : table.records) {
            out << "  " << r.beta.to_display() << "  lambda=(" << join_lambda(r.lambda) << ")  dim=" << r.dim_formula;
            if (r.dim_rank) out << "  rank=" << *r.dim_rank;
            out << "\n";
        }
        out << "sum of squared dimensions: " << table.sum_dim_squares << " (group order " << table.group_order << ")\n";
        if (table.conjugacy_classes) out << "conjugacy classes: " << *table.conjugacy_classes << "\n";
        for (const auto& [name, c] : table.checks)
            out << "check " << name << ": " << (c.passed ? "pass" : "FAIL " + c.detail) << "\n";
    }
    return table.all_passed() ? kOk : kCheckFailed;
}

// --- verify ---------------------------------------------------------------------

inline int cmd_verify(const RunConfig& cfg, std::ostream& out, const std::set<std::string>& defaults) {
    const auto checks = parse_checks(cfg.checks, defaults);
    const Caps caps = caps_for(cfg);
    const std::uint64_t order = wreath_order(cfg.n, cfg.m);
    // fail before doing any work if one of the requested families is too large
    if (checks.count("relations")) enforce_cap("relations", order, caps.relations);
    if (checks.count("idempotency")) enforce_cap("idempotency", order, caps.relations);
    if (checks.count("ranks")) enforce_cap("ranks", order, caps.ranks);
    if (checks.count("orthogonality")) enforce_cap("orthogonality", order, caps.ranks);
    if (checks.count("conjugacy")) enforce_cap("conjugacy", order, caps.conjugacy);
    if (checks.count("hopf")) enforce_cap("hopf", order, caps.hopf);

    json report{{"n", cfg.n}, {"m", cfg.m}};
    json families = json::object();
    bool passed = true;
    std::vector<std::string> failures;
    if (checks.count("relations")) {
        const auto r = verify_defining_relations(cfg.n, cfg.m, caps.relations);
        families["relations"] = verification_to_json(r);
        if (!r.all_passed()) {
            passed = false;
            for (const auto& c : r.checks)
                if (!c.passed && !c.informational) failures.push_back(c.family + ": " + c.counterexample);
        }
    }
    std::set<std::string> table_checks;
    for (const char* name : {"idempotency", "ranks", "orthogonality", "conjugacy"})
        if (checks.count(name)) table_checks.insert(name);
    if (!table_checks.empty()) {
        const auto t = irrep_table(cfg.n, cfg.m, table_options(table_checks, caps, false));
        json tj = table_checks_to_json(t);
        for (auto& [name, c] : t.checks) {
            if (!c.passed) failures.push_back(name + ": " + c.detail);
        }
        passed = passed && t.all_passed();
        families["classification"] = std::move(tj);
    }
    if (checks.count("hopf")) {
        const auto h = verify_hopf(cfg.n, cfg.m, caps.hopf);
        families["hopf"] = hopf_to_json(h);
        if (!h.all_passed()) {
            passed = false;
            for (const auto& c : h.checks)
                if (!c.passed && !c.informational) failures.push_back(c.family + ": " + c.counterexample);
        }
    }
    report["passed"] = passed;
    report["checks"] = std::move(families);

    if (cfg.format == "json") {
        out << report.dump(2) << "\n";
    } else if (cfg.format == "csv") {
        out << "group,family,result\n";
        for (const auto& [group, body] : report["checks"].items()) {
            const json* entries = &body;
            if (body.contains("relations")) entries = &body["relations"];
            if (body.contains("axioms")) entries = &body["axioms"];
            for (const auto& [family, v] : entries->items()) out << group << ',' << family << ',' << v["result"].get<std::string>() << "\n";
        }
    } else {
        out << "H_{" << cfg.n << "," << cfg.m << "}: " << (passed ? "all checks passed" : "CHECK FAILURE") << "\n";
        for (const auto& [group, body] : report["checks"].items()) {
            const json* entries = &body;
            if (body.contains("relations")) entries = &body["relations"];
            if (body.contains("axioms")) entries = &body["axioms"];
            for (const auto& [family, v] : entries->items()) {
                out << "  " << group << "/" << family << ": " << v["result"].get<std::string>();
                if (v.contains("informational")) out << " (informational)";
                out << "\n";
            }
            if (body.contains("cocommutativity"))
                for (const auto& w : body["cocommutativity"])
                    if (!w["symmetric"].get<bool>())
                        out << "  witness Delta(" << w["generator"].get<std::string>() << ") != Delta^op at ("
                            << w["coordinate"]["left_index"] << "," << w["coordinate"]["right_index"]
                            << "), difference " << w["difference"].get<std::string>() << "\n";
        }
        for (const auto& f : failures) out << "first counterexample: " << f << "\n";
    }
    return passed ? kOk : kCheckFailed;
}

// --- idempotent -----------------------------------------------------------------

inline int cmd_idempotent(const RunConfig& cfg, std::ostream& out) {
    if (cfg.beta.empty()) throw usage_error("--beta is required");
    const LabelledPartition beta = parse_beta_spec(cfg.beta, cfg.n, cfg.m);
    if (!cfg.expanded) {
        const json j = factored_idempotent_to_json(beta);
        if (cfg.format == "json") {
            out << j.dump(2) << "\n";
        } else {
            out << "e_" << beta.to_display() << " = " << j["prefactor"][0].get<std::string>() << "/"
                << j["prefactor"][1].get<std::string>() << " Lambda(" << join_lambda(lambda_from_beta(beta)) << ")";
            for (const auto& f : j["symmetrizers"])
                out << " iota_" << f["label"] << "[T=" << f["tableau"].dump() << " on slots " << f["slots"][0] << ".."
                    << f["slots"][1] << "]";
            out << "\n";
        }
        return kOk;
    }
    const Caps caps = caps_for(cfg);
    enforce_cap("idempotent", wreath_order(cfg.n, cfg.m), caps.relations);
    const AlgebraPtr alg = GroupAlgebra::get(cfg.n, cfg.m);
    const AlgebraElement e = idempotent_from_beta(alg, beta);
    if (cfg.format == "json") {
        out << algebra_to_json(e).dump(2) << "\n";
    } else if (cfg.format == "csv") {
        out << "index,twists,perm,coeff\n";
        for (const auto& [g, c] : e.terms()) {
            const auto el = alg->group().element(g);
            out << g << ',' << join_lambda(el.twists) << ',' << perm_string(el.perm) << ",\"" << c.to_string() << "\"\n";
        }
    } else {
        out << "e_" << beta.to_display() << " (" << e.support_size() << " terms, z = zeta_" << alg->field_order() << ")\n";
        for (const auto& [g, c] : e.terms()) {
            const auto el = alg->group().element(g);
            out << "  [" << g << "] twists=(" << join_lambda(el.twists) << ") perm=(" << perm_string(el.perm) << "): "
                << c.to_string() << "\n";
        }
    }
    return kOk;
}

// --- count ----------------------------------------------------------------------

inline int cmd_count(const RunConfig& cfg, std::ostream& out) {
    const auto checks = parse_checks(cfg.checks, {});
    for (const auto& c : checks)
        if (c != "conjugacy") throw usage_error("count accepts only the conjugacy check");
    const std::uint64_t formula = labelled_partition_count(cfg.n, cfg.m);
    std::optional<std::uint64_t> classes;
    if (checks.count("conjugacy")) classes = conjugacy_class_count(cfg.n, cfg.m, caps_for(cfg).conjugacy);
    const bool ok = !classes || *classes == formula;
    if (cfg.format == "json") {
        json j{{"n", cfg.n}, {"m", cfg.m}, {"count", formula}};
        if (classes) {
            j["conjugacy_classes"] = *classes;
            j["passed"] = ok;
        }
        out << j.dump(2) << "\n";
    } else if (cfg.format == "csv") {
        out << "n,m,count" << (classes ? ",conjugacy_classes" : "") << "\n";
        out << cfg.n << ',' << cfg.m << ',' << formula;
        if (classes) out << ',' << *classes;
        out << "\n";
    } else {
        out << formula << "\n";
        if (classes) out << "conjugacy classes: " << *classes << (ok ? "" : " (MISMATCH)") << "\n";
    }
    return ok ? kOk : kCheckFailed;
}

// --- entry point ----------------------------------------------------------------

inline int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Exact computations in the generalised Kac-Paljutkin algebras H_{n,m}", "kacpal"};
    app.require_subcommand(1);
    RunConfig cfg;

    auto common = [&](CLI::App* sub) {
        sub->add_option("--n", cfg.n, "order of the cyclic factor (n >= 1)")->required()->check(CLI::PositiveNumber);
        sub->add_option("--m", cfg.m, "number of slots (m >= 1)")->required()->check(CLI::PositiveNumber);
        sub->add_option("--format", cfg.format, "text, json or csv")->check(CLI::IsMember({"text", "json", "csv"}));
        sub->add_option("--cap-group-order", cfg.cap_group_order, "override every group-order cap")
            ->check(CLI::PositiveNumber);
        sub->add_option("--out", cfg.out, "write output to this file");
    };
    auto* table = app.add_subcommand("table", "irreducible representations and their dimensions");
    common(table);
    table->add_option("--checks", cfg.checks, "comma list from idempotency,ranks,orthogonality,conjugacy");
    table->add_flag("--expanded", cfg.expanded, "include expanded idempotents (json)");
    auto* verify = app.add_subcommand("verify", "run verification suites");
    common(verify);
    verify->add_option("--checks", cfg.checks,
                       "comma list from relations,idempotency,ranks,orthogonality,hopf,conjugacy "
                       "(default relations,idempotency)");
    auto* hopf = app.add_subcommand("hopf-check", "Hopf axioms and cocommutativity witnesses");
    common(hopf);
    auto* idem = app.add_subcommand("idempotent", "the idempotent for one labelled partition");
    common(idem);
    idem->add_option("--beta", cfg.beta, "labelled partition, e.g. \"0:3,2,2;2:1,1,1\"")->required();
    idem->add_flag("--expanded", cfg.expanded, "expand in the group basis");
    auto* count = app.add_subcommand("count", "number of irreducible representations");
    common(count);
    count->add_option("--checks", cfg.checks, "conjugacy: compare with a brute-force class count");

    std::vector<const char*> argv{"kacpal"};
    for (const auto& a : args) argv.push_back(a.c_str());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kOk : kUsage;
    }

    std::ofstream file;
    std::ostream* sink = &out;
    if (!cfg.out.empty()) {
        file.open(cfg.out);
        if (!file) {
            err << "error: cannot open output file '" << cfg.out << "'\n";
            return kUsage;
        }
        sink = &file;
    }

    try {
        if (table->parsed()) return cmd_table(cfg, *sink);
        if (verify->parsed()) return cmd_verify(cfg, *sink, {"relations", "idempotency"});
        if (hopf->parsed()) return cmd_verify(cfg, *sink, {"hopf"});
        if (idem->parsed()) return cmd_idempotent(cfg, *sink);
        if (count->parsed()) return cmd_count(cfg, *sink);
    } catch (const cap_exceeded& e) {
        err << "error: " << e.what() << "; remove '" << e.check()
            << "' from --checks or raise the cap with --cap-group-order / KACPAL_CAP\n";
        return kUsage;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << "\n";
        return kUsage;
    } catch (const std::overflow_error& e) {
        err << "error: " << e.what() << "\n";
        return kUsage;
    }
    return kUsage;
}

}  // namespace kacpal::cli
