#pragma once

// JSON encodings. Integers inside rationals are decimal strings so values of
// any size survive a round trip.

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "algebra.hpp"
#include "classifier.hpp"
#include "cyclotomic.hpp"
#include "hopf.hpp"
#include "partitions.hpp"
#include "relations.hpp"
#include "wreath.hpp"

namespace kacpal {

using json = nlohmann::ordered_json;

class json_format_error : public std::invalid_argument {
   public:
    using std::invalid_argument::invalid_argument;
};

namespace detail {

inline Integer integer_from_string(const std::string& s) {
    if (s.empty()) throw json_format_error("empty integer string");
    Integer v;
    if (v.set_str(s, 10) != 0) throw json_format_error("invalid integer string '" + s + "'");
    return v;
}

inline const json& require(const json& j, const char* key) {
    if (!j.is_object() || !j.contains(key)) throw json_format_error(std::string("missing key '") + key + "'");
    return j.at(key);
}

inline void require_array(const json& j, const char* what) {
    if (!j.is_array()) throw json_format_error(std::string(what) + " must be an array");
}

}  // namespace detail

// --- rationals and field elements -------------------------------------------

inline json rational_to_json(const Rational& r) { return json::array({r.get_num().get_str(), r.get_den().get_str()}); }

inline Rational rational_from_json(const json& j) {
    detail::require_array(j, "rational");
    if (j.size() != 2 || !j[0].is_string() || !j[1].is_string())
        throw json_format_error("rational must be [\"num\",\"den\"]");
    const Integer den = detail::integer_from_string(j[1].get<std::string>());
    if (den == 0) throw json_format_error("zero denominator");
    return make_rational(detail::integer_from_string(j[0].get<std::string>()), den);
}

/// {"order": N, "coeffs": [[num, den], ...]} in the power basis, length phi(N).
inline json cyc_to_json(const CycNumber& c) {
    json coeffs = json::array();
    for (const auto& r : c.coeffs()) coeffs.push_back(rational_to_json(r));
    return json{{"order", c.order()}, {"coeffs", std::move(coeffs)}};
}

inline CycNumber cyc_from_json(const json& j) {
    const json& order = detail::require(j, "order");
    if (!order.is_number_unsigned() || order.get<unsigned>() == 0) throw json_format_error("order must be a positive integer");
    const auto field = CyclotomicField::get(order.get<unsigned>());
    const json& coeffs = detail::require(j, "coeffs");
    detail::require_array(coeffs, "coeffs");
    if (coeffs.size() != field->degree())
        throw json_format_error("coeffs has " + std::to_string(coeffs.size()) + " entries, field degree is " +
                                std::to_string(field->degree()));
    std::vector<Rational> poly;
    for (const auto& c : coeffs) poly.push_back(rational_from_json(c));
    return CycNumber::from_polynomial(field, poly);
}

// --- group and algebra --------------------------------------------------------

inline json wreath_to_json(const WreathElement& g) { return json{{"twists", g.twists}, {"perm", g.perm.images()}}; }

inline WreathElement wreath_from_json(const json& j, const WreathGroup& group) {
    WreathElement g;
    try {
        g.twists = detail::require(j, "twists").get<std::vector<int>>();
        g.perm = Perm(detail::require(j, "perm").get<std::vector<int>>());
    } catch (const nlohmann::json::exception& e) {
        throw json_format_error(std::string("wreath element: ") + e.what());
    }
    group.validate(g);
    return g;
}

/// {"n", "m", "terms": [{"index", "coeff"}]} with indices ascending.
inline json algebra_to_json(const AlgebraElement& a) {
    json terms = json::array();
    for (const auto& [g, c] : a.terms()) terms.push_back(json{{"index", g}, {"coeff", cyc_to_json(c)}});
    return json{{"n", a.n()}, {"m", a.m()}, {"terms", std::move(terms)}};
}

inline AlgebraElement algebra_from_json(const json& j) {
    const json& n = detail::require(j, "n");
    const json& m = detail::require(j, "m");
    if (!n.is_number_unsigned() || !m.is_number_unsigned()) throw json_format_error("n and m must be positive integers");
    const AlgebraPtr alg = GroupAlgebra::get(n.get<unsigned>(), m.get<unsigned>());
    AlgebraElement e(alg);
    const json& terms = detail::require(j, "terms");
    detail::require_array(terms, "terms");
    for (const auto& t : terms) {
        const json& index = detail::require(t, "index");
        if (!index.is_number_unsigned() || index.get<std::uint64_t>() >= alg->dimension())
            throw json_format_error("term index out of range");
        CycNumber c = cyc_from_json(detail::require(t, "coeff"));
        if (c.order() != alg->field_order())
            throw json_format_error("coefficient order " + std::to_string(c.order()) + " does not match algebra field order " +
                                    std::to_string(alg->field_order()));
        e.add_term(index.get<GroupIndex>(), c);
    }
    return e;
}

// --- combinatorics ------------------------------------------------------------

inline json partition_to_json(const Partition& p) { return json(p.parts()); }

inline Partition partition_from_json(const json& j) {
    detail::require_array(j, "partition");
    return Partition(j.get<std::vector<int>>());
}

inline json tableau_to_json(const Tableau& t) { return json(t.rows()); }

inline Tableau tableau_from_json(const json& j) {
    detail::require_array(j, "tableau");
    return Tableau(j.get<std::vector<std::vector<int>>>());
}

inline json beta_to_json(const LabelledPartition& beta) {
    json blocks = json::array();
    for (const auto& b : beta.blocks()) blocks.push_back(partition_to_json(b));
    return json{{"spec", beta.to_spec()}, {"display", beta.to_display()}, {"blocks", std::move(blocks)}};
}

/// e_beta as Lambda_lambda times per-block row-consecutive tableaux, each
/// symmetrizer carrying its prefactor f_mu / k!.
inline json factored_idempotent_to_json(const LabelledPartition& beta) {
    json factors = json::array();
    Rational total = 1;
    for (unsigned i = 0; i < beta.n(); ++i) {
        if (beta.block(i).empty()) continue;
        const Tableau t = row_consecutive_tableau(beta.block(i));
        Integer kfact = 1;
        for (unsigned k = 2; k <= beta.block_size(i); ++k) kfact *= k;
        const Rational pre = make_rational(Integer(standard_tableaux_count(beta.block(i))), kfact);
        total *= pre;
        factors.push_back(json{{"label", i},
                               {"slots", json::array({beta.offset(i) + 1, beta.offset(i) + beta.block_size(i)})},
                               {"tableau", tableau_to_json(t)},
                               {"prefactor", rational_to_json(pre)}});
    }
    return json{{"beta", beta_to_json(beta)},
                {"lambda", lambda_from_beta(beta)},
                {"prefactor", rational_to_json(total)},
                {"symmetrizers", std::move(factors)}};
}

// --- reports ------------------------------------------------------------------

inline json relation_check_to_json(const RelationCheck& c) {
    json j{{"result", c.passed ? "pass" : "fail"}, {"instances", c.instances}};
    if (!c.passed) j["counterexample"] = c.counterexample;
    if (c.informational) {
        j["informational"] = true;
        j["note"] = c.note;
    }
    return j;
}

inline json verification_to_json(const VerificationReport& r) {
    json families = json::object();
    for (const auto& c : r.checks) families[c.family] = relation_check_to_json(c);
    return json{{"n", r.n}, {"m", r.m}, {"passed", r.all_passed()}, {"relations", std::move(families)}};
}

inline json hopf_to_json(const HopfReport& r) {
    const WreathGroup& group = GroupAlgebra::get(r.n, r.m)->group();
    json axioms = json::object();
    for (const auto& c : r.checks) axioms[c.family] = relation_check_to_json(c);
    json witnesses = json::array();
    for (const auto& w : r.witnesses) {
        json wj{{"generator", w.generator}, {"symmetric", w.symmetric}};
        if (!w.symmetric) {
            wj["coordinate"] = json{{"left", wreath_to_json(group.element(w.left))},
                                    {"right", wreath_to_json(group.element(w.right))},
                                    {"left_index", w.left},
                                    {"right_index", w.right}};
            wj["difference"] = w.difference;
        }
        witnesses.push_back(std::move(wj));
    }
    return json{{"n", r.n},
                {"m", r.m},
                {"passed", r.all_passed()},
                {"axioms", std::move(axioms)},
                {"cocommutativity", std::move(witnesses)},
                {"counit", r.counit_note}};
}

inline json table_checks_to_json(const IrrepTable& t) {
    json checks = json::object();
    for (const auto& [name, c] : t.checks) {
        json cj{{"result", c.passed ? "pass" : "fail"}};
        if (!c.passed) cj["detail"] = c.detail;
        checks[name] = std::move(cj);
    }
    return checks;
}

inline json irrep_table_to_json(const IrrepTable& t) {
    json irreps = json::array();
    for (const auto& rec : t.records) {
        json r{{"beta", beta_to_json(rec.beta)},
               {"lambda", rec.lambda},
               {"dimension", rec.dim_formula},
               {"dim_formula", rec.dim_formula},
               {"dim_hook", rec.dim_hook}};
        if (rec.dim_rank) r["dim_rank"] = *rec.dim_rank;
        if (rec.is_idempotent) r["is_idempotent"] = *rec.is_idempotent;
        if (rec.self_sandwich) r["self_sandwich_dimension"] = *rec.self_sandwich;
        if (rec.idempotent) r["idempotent"] = algebra_to_json(*rec.idempotent);
        irreps.push_back(std::move(r));
    }
    json summary{{"count", t.records.size()},
                 {"count_formula", t.count_formula},
                 {"sum_dim_squares", t.sum_dim_squares},
                 {"group_order", t.group_order}};
    if (t.conjugacy_classes) summary["conjugacy_classes"] = *t.conjugacy_classes;
    return json{{"n", t.n},
                {"m", t.m},
                {"irreps", std::move(irreps)},
                {"summary", std::move(summary)},
                {"checks", table_checks_to_json(t)}};
}

}  // namespace kacpal
