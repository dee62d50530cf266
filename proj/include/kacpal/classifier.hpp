#pragma once

// Labelled partitions and the idempotents e_beta that index the irreducible
// representations of H_{n,m}.
//
// For beta = (mu_0, ..., mu_{n-1}) with l_i = |mu_i|:
//   lambda_beta = (0^{l_0}, 1^{l_1}, ..., (n-1)^{l_{n-1}}),
//   e_beta = Lambda_{lambda_beta} iota_0(e_{T_0}) ... iota_{n-1}(e_{T_{n-1}}),
// where T_i is the row-consecutive tableau of mu_i and iota_i places S_{l_i}
// on the slots of block i. Empty blocks contribute no factor.

#include <algorithm>
#include <cctype>
#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "algebra.hpp"
#include "caps.hpp"
#include "linalg.hpp"
#include "partitions.hpp"
#include "wreath.hpp"

namespace kacpal {

class LabelledPartition {
   public:
    explicit LabelledPartition(std::vector<Partition> blocks) : blocks_(std::move(blocks)) {
        if (blocks_.empty()) throw std::invalid_argument("LabelledPartition: need at least one label");
    }

    unsigned n() const { return static_cast<unsigned>(blocks_.size()); }
    unsigned m() const {
        unsigned total = 0;
        for (const auto& b : blocks_) total += static_cast<unsigned>(b.size());
        return total;
    }
    const std::vector<Partition>& blocks() const { return blocks_; }
    const Partition& block(unsigned label) const { return blocks_.at(label); }
    unsigned block_size(unsigned label) const { return static_cast<unsigned>(blocks_.at(label).size()); }
    /// First slot (0-based) occupied by the given label.
    unsigned offset(unsigned label) const {
        unsigned off = 0;
        for (unsigned i = 0; i < label; ++i) off += block_size(i);
        return off;
    }

    /// "label:part,part;..." with empty labels omitted, e.g. "0:3,2,2;2:1,1,1".
    std::string to_spec() const {
        std::string out;
        for (unsigned i = 0; i < n(); ++i) {
            if (blocks_[i].empty()) continue;
            if (!out.empty()) out += ";";
            out += std::to_string(i) + ":";
            const auto& parts = blocks_[i].parts();
            for (std::size_t k = 0; k < parts.size(); ++k) out += (k ? "," : "") + std::to_string(parts[k]);
        }
        return out;
    }

    /// Tuple notation with * for empty blocks, e.g. "((2,1),*)".
    std::string to_display() const {
        std::string out = "(";
        for (unsigned i = 0; i < n(); ++i) {
            if (i) out += ",";
            out += blocks_[i].empty() ? "*" : blocks_[i].to_string();
        }
        return out + ")";
    }

    friend auto operator<=>(const LabelledPartition&, const LabelledPartition&) = default;
    friend bool operator==(const LabelledPartition&, const LabelledPartition&) = default;

   private:
    std::vector<Partition> blocks_;
};

class beta_parse_error : public std::invalid_argument {
   public:
    using std::invalid_argument::invalid_argument;
};

/// Parses a beta spec string for labels [0, n) and checks that it totals m.
inline LabelledPartition parse_beta_spec(const std::string& spec, unsigned n, unsigned m) {
    if (n == 0) throw beta_parse_error("n must be positive");
    std::vector<Partition> blocks(n);
    std::vector<bool> seen(n, false);
    std::stringstream entries(spec);
    std::string entry;
    auto parse_int = [&](const std::string& tok, const std::string& what) {
        if (tok.empty()) throw beta_parse_error("empty " + what + " in beta spec '" + spec + "'");
        for (char ch : tok)
            if (!std::isdigit(static_cast<unsigned char>(ch)))
                throw beta_parse_error("invalid " + what + " '" + tok + "' in beta spec '" + spec + "'");
        if (tok.size() > 9) throw beta_parse_error(what + " '" + tok + "' too large");
        return std::stoi(tok);
    };
    while (std::getline(entries, entry, ';')) {
        if (entry.empty()) continue;
        const auto colon = entry.find(':');
        if (colon == std::string::npos) throw beta_parse_error("missing ':' in beta entry '" + entry + "'");
        const int label = parse_int(entry.substr(0, colon), "label");
        if (label >= static_cast<int>(n))
            throw beta_parse_error("label " + std::to_string(label) + " out of range [0," + std::to_string(n) + ")");
        if (seen[static_cast<std::size_t>(label)]) throw beta_parse_error("label " + std::to_string(label) + " repeated");
        seen[static_cast<std::size_t>(label)] = true;
        std::vector<int> parts;
        std::stringstream ps(entry.substr(colon + 1));
        std::string tok;
        while (std::getline(ps, tok, ',')) parts.push_back(parse_int(tok, "part"));
        try {
            blocks[static_cast<std::size_t>(label)] = Partition(parts);
        } catch (const std::invalid_argument& e) {
            throw beta_parse_error("label " + std::to_string(label) + ": " + e.what());
        }
    }
    LabelledPartition beta(std::move(blocks));
    if (beta.m() != m)
        throw beta_parse_error("beta spec '" + spec + "' totals " + std::to_string(beta.m()) + ", expected m = " +
                               std::to_string(m));
    return beta;
}

namespace detail {
inline void compositions_rec(unsigned parts, unsigned remaining, std::vector<unsigned>& cur,
                             std::vector<std::vector<unsigned>>& out) {
    if (cur.size() + 1 == parts) {
        cur.push_back(remaining);
        out.push_back(cur);
        cur.pop_back();
        return;
    }
    for (unsigned k = 0; k <= remaining; ++k) {
        cur.push_back(k);
        compositions_rec(parts, remaining - k, cur, out);
        cur.pop_back();
    }
}
}  // namespace detail

/// Weak compositions of m into n parts, lexicographically ascending.
inline std::vector<std::vector<unsigned>> compositions(unsigned n, unsigned m) {
    if (n == 0) throw std::invalid_argument("compositions: n must be positive");
    std::vector<std::vector<unsigned>> out;
    std::vector<unsigned> cur;
    detail::compositions_rec(n, m, cur, out);
    return out;
}

/// sum over l_1 + ... + l_n = m of p(l_1) ... p(l_n).
inline std::uint64_t labelled_partition_count(unsigned n, unsigned m) {
    std::uint64_t total = 0;
    for (const auto& comp : compositions(n, m)) {
        std::uint64_t prod = 1;
        for (unsigned l : comp) prod *= partition_count(static_cast<int>(l));
        total += prod;
    }
    return total;
}

/// Compositions in table order: by the first label holding the largest
/// block (ascending), then that block's size (descending), then
/// lexicographically descending. For (n, m) = (2, 3) this is
/// (3,0), (2,1), (0,3), (1,2).
inline std::vector<std::vector<unsigned>> table_ordered_compositions(unsigned n, unsigned m) {
    auto comps = compositions(n, m);
    auto key = [](const std::vector<unsigned>& c) {
        const auto top = std::max_element(c.begin(), c.end());
        return std::make_pair(static_cast<std::size_t>(top - c.begin()), *top);
    };
    std::sort(comps.begin(), comps.end(), [&](const auto& a, const auto& b) {
        const auto ka = key(a), kb = key(b);
        if (ka.first != kb.first) return ka.first < kb.first;
        if (ka.second != kb.second) return ka.second > kb.second;
        return a > b;
    });
    return comps;
}

/// All [n]-labelled partitions of m: compositions in table order, then the
/// blocks' partitions in reverse-lexicographic order with label 0 varying
/// slowest.
inline std::vector<LabelledPartition> enumerate_labelled_partitions(unsigned n, unsigned m) {
    std::vector<LabelledPartition> out;
    for (const auto& comp : table_ordered_compositions(n, m)) {
        std::vector<std::vector<Partition>> choices;
        for (unsigned l : comp) choices.push_back(partitions_of(static_cast<int>(l)));
        std::vector<std::size_t> pick(n, 0);
        while (true) {
            std::vector<Partition> blocks;
            for (unsigned i = 0; i < n; ++i) blocks.push_back(choices[i][pick[i]]);
            out.emplace_back(std::move(blocks));
            std::size_t i = n;
            while (i-- > 0) {
                if (++pick[i] < choices[i].size()) break;
                pick[i] = 0;
            }
            if (i == static_cast<std::size_t>(-1)) break;
        }
    }
    return out;
}

/// Non-decreasing vector with l_i entries equal to label i.
inline ZnVector lambda_from_beta(const LabelledPartition& beta) {
    ZnVector lambda;
    for (unsigned i = 0; i < beta.n(); ++i) lambda.insert(lambda.end(), beta.block_size(i), static_cast<int>(i));
    return lambda;
}

/// Pushes a formal sum over S_{l_i} onto the slots of block `label`.
inline AlgebraElement iota_embed(const AlgebraPtr& alg, const LabelledPartition& beta, unsigned label,
                                 const SymFormalSum& s) {
    if (beta.n() != alg->n() || beta.m() != alg->m()) throw std::invalid_argument("iota_embed: beta does not match algebra");
    const unsigned len = beta.block_size(label);
    if (len == 0) throw std::invalid_argument("iota_embed: block " + std::to_string(label) + " is empty");
    if (s.size() != len)
        throw std::invalid_argument("iota_embed: formal sum over S_" + std::to_string(s.size()) + " for block of size " +
                                    std::to_string(len));
    const unsigned off = beta.offset(label);
    AlgebraElement e(alg);
    const WreathGroup& group = alg->group();
    for (const auto& [perm, coeff] : s.terms()) {
        WreathElement g = group.identity();
        std::vector<int> im = g.perm.images();
        for (unsigned j = 0; j < len; ++j) im[off + j] = static_cast<int>(off) + perm(j);
        g.perm = Perm(std::move(im));
        e.add_term(group.index(g), alg->scalar(coeff));
    }
    return e;
}

/// e_beta, multiplied left to right.
inline AlgebraElement idempotent_from_beta(const AlgebraPtr& alg, const LabelledPartition& beta) {
    AlgebraElement e = lambda_idempotent(alg, lambda_from_beta(beta));
    for (unsigned i = 0; i < beta.n(); ++i) {
        if (beta.block(i).empty()) continue;
        e = e * iota_embed(alg, beta, i, young_symmetrizer(row_consecutive_tableau(beta.block(i))));
    }
    return e;
}

struct IrrepDimensions {
    std::uint64_t formula;  // m! / prod l_i! * prod f_i, f_i by the branching rule
    std::uint64_t hook;     // m! / prod of all hook lengths
};

inline IrrepDimensions irrep_dimension(const LabelledPartition& beta) {
    auto fact = [](unsigned k) {
        Integer r = 1;
        for (unsigned i = 2; i <= k; ++i) r *= i;
        return r;
    };
    const Integer mfact = fact(beta.m());
    Integer formula = mfact;
    Integer hooks = 1;
    for (unsigned i = 0; i < beta.n(); ++i) {
        const Partition& mu = beta.block(i);
        formula /= fact(beta.block_size(i));
        formula *= static_cast<unsigned long>(standard_tableaux_count_branching(mu));
        for (std::size_t r = 0; r < mu.length(); ++r)
            for (std::size_t c = 0; c < static_cast<std::size_t>(mu[r]); ++c) hooks *= hook_length(mu, r, c);
    }
    if (mfact % hooks != 0) throw std::logic_error("irrep_dimension: hook product does not divide m!");
    const Integer hook = mfact / hooks;
    if (!formula.fits_ulong_p() || !hook.fits_ulong_p()) throw std::overflow_error("irrep_dimension: too large");
    return {formula.get_ui(), hook.get_ui()};
}

struct IrrepRecord {
    LabelledPartition beta;
    ZnVector lambda;
    std::uint64_t dim_formula = 0;
    std::uint64_t dim_hook = 0;
    std::optional<std::uint64_t> dim_rank;
    std::optional<AlgebraElement> idempotent;
    std::optional<bool> is_idempotent;
    std::optional<std::uint64_t> self_sandwich;
};

struct TableOptions {
    bool idempotency = false;    // e^2 = e and e != 0
    bool ranks = false;          // dim H e by rank
    bool orthogonality = false;  // dim e H e = 1, dim e H f = 0
    bool conjugacy = false;      // brute-force class count
    bool include_idempotents = false;
    Caps caps{};
};

struct CheckOutcome {
    bool passed = true;
    std::string detail;
};

struct IrrepTable {
    unsigned n = 0;
    unsigned m = 0;
    std::vector<IrrepRecord> records;
    std::uint64_t group_order = 0;
    std::uint64_t count_formula = 0;
    std::uint64_t sum_dim_squares = 0;
    std::optional<std::uint64_t> conjugacy_classes;
    std::map<std::string, CheckOutcome> checks;

    bool all_passed() const {
        for (const auto& [name, c] : checks)
            if (!c.passed) return false;
        return true;
    }
};

/// The full classification for (n, m) with the requested cross-checks.
/// Caps are enforced before any expensive work starts.
inline IrrepTable irrep_table(unsigned n, unsigned m, const TableOptions& opts = {}) {
    const std::uint64_t order = wreath_order(n, m);
    const bool need_elements = opts.idempotency || opts.ranks || opts.orthogonality || opts.include_idempotents;
    if (opts.idempotency || opts.include_idempotents) enforce_cap("idempotency", order, opts.caps.relations);
    if (opts.ranks) enforce_cap("ranks", order, opts.caps.ranks);
    if (opts.orthogonality) enforce_cap("orthogonality", order, opts.caps.ranks);
    if (opts.conjugacy) enforce_cap("conjugacy", order, opts.caps.conjugacy);

    IrrepTable table;
    table.n = n;
    table.m = m;
    table.group_order = order;
    table.count_formula = labelled_partition_count(n, m);

    AlgebraPtr alg = need_elements ? GroupAlgebra::get(n, m) : nullptr;
    CheckOutcome dims_agree, idem_ok, rank_ok, ortho_ok;
    for (auto& beta : enumerate_labelled_partitions(n, m)) {
        IrrepRecord rec{beta, lambda_from_beta(beta), 0, 0, {}, {}, {}, {}};
        const auto dims = irrep_dimension(beta);
        rec.dim_formula = dims.formula;
        rec.dim_hook = dims.hook;
        if (dims.formula != dims.hook && dims_agree.passed)
            dims_agree = {false, beta.to_spec() + ": formula " + std::to_string(dims.formula) + " vs hook " +
                                     std::to_string(dims.hook)};
        table.sum_dim_squares += dims.formula * dims.formula;
        if (alg) {
            AlgebraElement e = idempotent_from_beta(alg, beta);
            if (opts.idempotency) {
                rec.is_idempotent = !e.is_zero() && e * e == e;
                if (!*rec.is_idempotent && idem_ok.passed) idem_ok = {false, beta.to_spec() + ": e^2 != e or e = 0"};
            }
            if (opts.ranks) {
                rec.dim_rank = left_ideal_dimension(e, opts.caps.ranks);
                if (*rec.dim_rank != dims.formula && rank_ok.passed)
                    rank_ok = {false, beta.to_spec() + ": rank " + std::to_string(*rec.dim_rank) + " vs formula " +
                                          std::to_string(dims.formula)};
            }
            rec.idempotent = std::move(e);
        }
        table.records.push_back(std::move(rec));
    }

    if (opts.orthogonality) {
        for (std::size_t a = 0; a < table.records.size(); ++a)
            for (std::size_t b = 0; b < table.records.size(); ++b) {
                const auto d = sandwich_dimension(*table.records[a].idempotent, *table.records[b].idempotent, opts.caps.ranks);
                if (a == b) table.records[a].self_sandwich = d;
                const std::uint64_t expected = a == b ? 1 : 0;
                if (d != expected && ortho_ok.passed)
                    ortho_ok = {false, "dim e H f = " + std::to_string(d) + " for " + table.records[a].beta.to_spec() +
                                           " / " + table.records[b].beta.to_spec()};
            }
    }
    if (!opts.include_idempotents)
        for (auto& rec : table.records) rec.idempotent.reset();

    table.checks["count_formula"] = table.records.size() == table.count_formula
                                        ? CheckOutcome{}
                                        : CheckOutcome{false, std::to_string(table.records.size()) + " records vs formula " +
                                                                  std::to_string(table.count_formula)};
    table.checks["sum_dim_squares"] =
        table.sum_dim_squares == order
            ? CheckOutcome{}
            : CheckOutcome{false, "sum of squares " + std::to_string(table.sum_dim_squares) + " vs " + std::to_string(order)};
    table.checks["dimension_formulas_agree"] = dims_agree;
    if (opts.idempotency) table.checks["idempotency"] = idem_ok;
    if (opts.ranks) table.checks["ranks"] = rank_ok;
    if (opts.orthogonality) table.checks["orthogonality"] = ortho_ok;
    if (opts.conjugacy) {
        table.conjugacy_classes = conjugacy_class_count(n, m, opts.caps.conjugacy);
        table.checks["conjugacy"] = *table.conjugacy_classes == table.records.size()
                                        ? CheckOutcome{}
                                        : CheckOutcome{false, std::to_string(*table.conjugacy_classes) +
                                                                  " conjugacy classes vs " +
                                                                  std::to_string(table.records.size()) + " records"};
    }
    return table;
}

}  // namespace kacpal
