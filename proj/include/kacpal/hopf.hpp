#pragma once

// Coalgebra and antipode of H_{n,m} on the group-algebra realisation.
//
// Every basis element factors as (t, p) = x^t * s_{l_1} ... s_{l_k} with the
// s-word taken from the bubble-sort decomposition of p. Delta is group-like on
// x-monomials, Delta(s_l) = Delta(y_l) Delta(z_l), and S is extended
// anti-multiplicatively with S(s_l) = z_l S(y_l).

#include <array>
#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "algebra.hpp"
#include "partitions.hpp"
#include "relations.hpp"
#include "wreath.hpp"

namespace kacpal {

inline constexpr std::uint64_t kDefaultHopfCap = 100;

/// Sparse element of the K-fold tensor power of the algebra.
template <std::size_t K>
class Tensor {
   public:
    using Key = std::array<GroupIndex, K>;
    using Terms = std::map<Key, CycNumber>;

    explicit Tensor(AlgebraPtr alg) : alg_(std::move(alg)) {}

    const AlgebraPtr& algebra() const { return alg_; }
    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t support_size() const { return terms_.size(); }

    CycNumber coefficient(const Key& key) const {
        auto it = terms_.find(key);
        return it == terms_.end() ? alg_->zero() : it->second;
    }

    void add_term(const Key& key, const CycNumber& c) {
        if (c.is_zero()) return;
        auto [it, inserted] = terms_.try_emplace(key, c);
        if (inserted) return;
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }

    Tensor& operator+=(const Tensor& o) {
        check(o);
        for (const auto& [k, c] : o.terms_) add_term(k, c);
        return *this;
    }
    Tensor& operator-=(const Tensor& o) {
        check(o);
        for (const auto& [k, c] : o.terms_) add_term(k, -c);
        return *this;
    }
    friend Tensor operator+(Tensor a, const Tensor& b) { return a += b; }
    friend Tensor operator-(Tensor a, const Tensor& b) { return a -= b; }

    /// Componentwise convolution.
    friend Tensor operator*(const Tensor& a, const Tensor& b) {
        a.check(b);
        const WreathTable& table = a.alg_->table();
        Terms acc;
        for (const auto& [ka, ca] : a.terms_)
            for (const auto& [kb, cb] : b.terms_) {
                Key k;
                for (std::size_t i = 0; i < K; ++i) k[i] = table.multiply(ka[i], kb[i]);
                acc.try_emplace(k, a.alg_->field()).first->second.add_product(ca, cb);
            }
        Tensor r(a.alg_);
        for (auto& [k, c] : acc)
            if (!c.is_zero()) r.terms_.emplace_hint(r.terms_.end(), k, std::move(c));
        return r;
    }

    friend bool operator==(const Tensor& a, const Tensor& b) {
        return a.alg_->n() == b.alg_->n() && a.alg_->m() == b.alg_->m() && a.terms_ == b.terms_;
    }
    friend bool operator!=(const Tensor& a, const Tensor& b) { return !(a == b); }

   private:
    void check(const Tensor& o) const {
        if (o.alg_->n() != alg_->n() || o.alg_->m() != alg_->m())
            throw std::invalid_argument("Tensor: parameter mismatch");
    }

    AlgebraPtr alg_;
    Terms terms_;
};

using TensorElement = Tensor<2>;

inline TensorElement tensor(const AlgebraElement& a, const AlgebraElement& b) {
    if (a.n() != b.n() || a.m() != b.m()) throw std::invalid_argument("tensor: parameter mismatch");
    TensorElement t(a.algebra());
    for (const auto& [g, c] : a.terms())
        for (const auto& [h, d] : b.terms()) t.add_term({g, h}, c * d);
    return t;
}

inline TensorElement tensor_mul(const TensorElement& u, const TensorElement& v) { return u * v; }

inline TensorElement flip(const TensorElement& u) {
    TensorElement r(u.algebra());
    for (const auto& [k, c] : u.terms()) r.add_term({k[1], k[0]}, c);
    return r;
}

/// Sum of coefficients; the group-like counit.
inline CycNumber counit(const AlgebraElement& a) {
    CycNumber total = a.algebra()->zero();
    for (const auto& [g, c] : a.terms()) total += c;
    return total;
}

/// Sum over x-monomials of c_i x^i (x) x^i, where c_i are the coefficients of a.
/// Requires a to lie in the span of x-monomials.
inline TensorElement diagonal_lift(const AlgebraElement& a) {
    TensorElement t(a.algebra());
    for (const auto& [g, c] : a.terms()) {
        if (!a.algebra()->group().element(g).perm.is_identity())
            throw std::invalid_argument("diagonal_lift: element has a non-monomial term");
        t.add_term({g, g}, c);
    }
    return t;
}

/// ((1/n) sum_{i,j=0}^{n-1} q^-ij x_l^i (x) x_{l+1}^j)(z_l (x) z_l).
inline TensorElement delta_z_formula(const AlgebraPtr& alg, unsigned l) {
    check_adjacent_index(alg, l);
    const long n = alg->n();
    const Rational inv_n(1, static_cast<unsigned long>(n));
    TensorElement prefactor(alg);
    for (long i = 0; i < n; ++i)
        for (long j = 0; j < n; ++j) {
            ZnVector left(alg->m(), 0), right(alg->m(), 0);
            left[l - 1] = static_cast<int>(i);
            right[l] = static_cast<int>(j);
            prefactor.add_term({alg->group().index(alg->group().monomial(left)),
                                alg->group().index(alg->group().monomial(right))},
                               alg->q(-i * j) * inv_n);
        }
    const AlgebraElement z = z_element(alg, l);
    return prefactor * tensor(z, z);
}

/// Delta and S with per-basis-element memoisation. Not thread-safe.
class HopfStructure {
   public:
    explicit HopfStructure(AlgebraPtr alg)
        : alg_(std::move(alg)), delta_memo_(alg_->dimension()), antipode_memo_(alg_->dimension()) {
        for (unsigned l = 1; l < alg_->m(); ++l) {
            const AlgebraElement y = y_element(alg_, l);
            delta_s_.push_back(diagonal_lift(y) * delta_z_formula(alg_, l));
            AlgebraElement s_y(alg_);  // S(y_l) = sum_i c_i x^-i
            for (const auto& [g, c] : y.terms()) s_y.add_term(alg_->table().inverse(g), c);
            antipode_s_.push_back(z_element(alg_, l) * s_y);
        }
    }

    const AlgebraPtr& algebra() const { return alg_; }

    const TensorElement& delta_basis(GroupIndex g) {
        auto& slot = delta_memo_.at(g);
        if (!slot) {
            const auto [mono, word] = split(g);
            TensorElement t(alg_);
            t.add_term({mono, mono}, alg_->scalar(1));
            for (unsigned l : word) t = t * delta_s_[l - 1];
            slot = std::move(t);
        }
        return *slot;
    }

    const AlgebraElement& antipode_basis(GroupIndex g) {
        auto& slot = antipode_memo_.at(g);
        if (!slot) {
            const auto [mono, word] = split(g);
            AlgebraElement r = AlgebraElement::identity(alg_);
            for (auto it = word.rbegin(); it != word.rend(); ++it) r = r * antipode_s_[*it - 1];
            slot = r.right_translate(alg_->table().inverse(mono));
        }
        return *slot;
    }

    TensorElement delta(const AlgebraElement& a) {
        check(a);
        TensorElement t(alg_);
        for (const auto& [g, c] : a.terms())
            for (const auto& [k, d] : delta_basis(g).terms()) t.add_term(k, c * d);
        return t;
    }

    AlgebraElement antipode(const AlgebraElement& a) {
        check(a);
        AlgebraElement r(alg_);
        for (const auto& [g, c] : a.terms()) r += antipode_basis(g) * c;
        return r;
    }

    /// (Delta (x) id)(u) and (id (x) Delta)(u).
    std::pair<Tensor<3>, Tensor<3>> coassociativity_sides(const TensorElement& u) {
        Tensor<3> left(alg_), right(alg_);
        for (const auto& [k, c] : u.terms()) {
            for (const auto& [d, e] : delta_basis(k[0]).terms()) left.add_term({d[0], d[1], k[1]}, c * e);
            for (const auto& [d, e] : delta_basis(k[1]).terms()) right.add_term({k[0], d[0], d[1]}, c * e);
        }
        return {std::move(left), std::move(right)};
    }

    /// (eps (x) id)(u) and (id (x) eps)(u).
    std::pair<AlgebraElement, AlgebraElement> counit_sides(const TensorElement& u) const {
        AlgebraElement left(alg_), right(alg_);
        for (const auto& [k, c] : u.terms()) {
            left.add_term(k[1], c);
            right.add_term(k[0], c);
        }
        return {std::move(left), std::move(right)};
    }

    /// m(S (x) id)(u) and m(id (x) S)(u).
    std::pair<AlgebraElement, AlgebraElement> antipode_sides(const TensorElement& u) {
        AlgebraElement left(alg_), right(alg_);
        for (const auto& [k, c] : u.terms()) {
            left += antipode_basis(k[0]).right_translate(k[1]) * c;
            right += antipode_basis(k[1]).left_translate(k[0]) * c;
        }
        return {std::move(left), std::move(right)};
    }

   private:
    // (monomial index, 1-based s-word) with g = monomial * s_{w_1} ... s_{w_k}
    std::pair<GroupIndex, std::vector<unsigned>> split(GroupIndex g) const {
        const WreathGroup& group = alg_->group();
        const WreathElement el = group.element(g);
        std::vector<unsigned> word;
        for (auto pos : el.perm.adjacent_word()) word.push_back(static_cast<unsigned>(pos) + 1);
        return {group.index(group.monomial(el.twists)), std::move(word)};
    }

    void check(const AlgebraElement& a) const {
        if (a.n() != alg_->n() || a.m() != alg_->m()) throw std::invalid_argument("HopfStructure: parameter mismatch");
    }

    AlgebraPtr alg_;
    std::vector<TensorElement> delta_s_;
    std::vector<AlgebraElement> antipode_s_;
    std::vector<std::optional<TensorElement>> delta_memo_;
    std::vector<std::optional<AlgebraElement>> antipode_memo_;
};

struct CocommutativityWitness {
    std::string generator;
    bool symmetric = true;
    // one coordinate where Delta and Delta^op differ, when not symmetric
    GroupIndex left = 0;
    GroupIndex right = 0;
    std::string difference;
};

struct HopfReport {
    unsigned n = 0;
    unsigned m = 0;
    std::vector<RelationCheck> checks;
    std::vector<CocommutativityWitness> witnesses;
    std::string counit_note;

    bool all_passed() const {
        for (const auto& c : checks)
            if (!c.informational && !c.passed) return false;
        return true;
    }
    const RelationCheck* find(const std::string& family) const {
        for (const auto& c : checks)
            if (c.family == family) return &c;
        return nullptr;
    }
};

inline CocommutativityWitness cocommutativity_witness(const std::string& name, const TensorElement& d) {
    CocommutativityWitness w;
    w.generator = name;
    const TensorElement diff = d - flip(d);
    if (diff.is_zero()) return w;
    const auto& [k, c] = *diff.terms().begin();
    w.symmetric = false;
    w.left = k[0];
    w.right = k[1];
    w.difference = c.to_string();
    return w;
}

namespace detail {

class TensorRecorder {
   public:
    explicit TensorRecorder(std::string family) { check_.family = std::move(family); }

    template <class T>
    void expect_equal(const T& lhs, const T& rhs, const std::string& instance) {
        ++check_.instances;
        if (!check_.passed || lhs == rhs) return;
        check_.passed = false;
        check_.counterexample = instance + ": sides differ";
    }
    RelationCheck take() { return std::move(check_); }

   private:
    RelationCheck check_;
};

}  // namespace detail

/// Every Hopf axiom on the generators x_i, z_l (and s_l), relation
/// preservation of Delta, consistency of the basis-word Delta with the
/// closed form for Delta(z_l), and the Delta vs Delta^op witnesses.
inline HopfReport verify_hopf(unsigned n, unsigned m, std::uint64_t cap = kDefaultHopfCap) {
    enforce_cap("hopf", wreath_order(n, m), cap);
    const AlgebraPtr alg = GroupAlgebra::get(n, m);
    HopfStructure hopf(alg);
    const AlgebraElement one = AlgebraElement::identity(alg);
    const GeneratorSet gens = GeneratorSet::standard(alg);
    HopfReport report{n, m, {}, {}, ""};
    report.counit_note =
        "counit is not given with the structure maps; eps(g) = 1 on group elements is the unique choice with "
        "(eps (x) id) Delta(x_i) = x_i, and it is then checked on every generator";

    struct Named {
        std::string name;
        AlgebraElement element;
    };
    std::vector<Named> generators;
    for (unsigned i = 1; i <= m; ++i) generators.push_back({detail::idx("x", i), gens.x[i - 1]});
    for (unsigned l = 1; l < m; ++l) generators.push_back({detail::idx("z", l), gens.z[l - 1]});
    for (unsigned l = 1; l < m; ++l) generators.push_back({detail::idx("s", l), gens.s[l - 1]});

    std::vector<TensorElement> delta_x, delta_z;
    for (unsigned i = 1; i <= m; ++i) delta_x.push_back(hopf.delta(gens.x[i - 1]));
    for (unsigned l = 1; l < m; ++l) delta_z.push_back(delta_z_formula(alg, l));

    {
        detail::TensorRecorder rec("delta_generators");
        for (unsigned i = 1; i <= m; ++i)
            rec.expect_equal(delta_x[i - 1], tensor(gens.x[i - 1], gens.x[i - 1]),
                             "Delta(" + detail::idx("x", i) + ") = x (x) x");
        for (unsigned l = 1; l < m; ++l)
            rec.expect_equal(hopf.delta(gens.z[l - 1]), delta_z[l - 1],
                             "Delta(" + detail::idx("z", l) + ") from basis words = closed form");
        rec.expect_equal(hopf.delta(one), tensor(one, one), "Delta(1) = 1 (x) 1");
        report.checks.push_back(rec.take());
    }
    {
        detail::TensorRecorder rec("coassociativity");
        for (const auto& g : generators) {
            const auto [left, right] = hopf.coassociativity_sides(hopf.delta(g.element));
            rec.expect_equal(left, right, "(Delta (x) id) Delta(" + g.name + ") = (id (x) Delta) Delta(" + g.name + ")");
        }
        report.checks.push_back(rec.take());
    }
    {
        detail::TensorRecorder rec("counit");
        for (const auto& g : generators) {
            const auto [left, right] = hopf.counit_sides(hopf.delta(g.element));
            rec.expect_equal(left, g.element, "(eps (x) id) Delta(" + g.name + ")");
            rec.expect_equal(right, g.element, "(id (x) eps) Delta(" + g.name + ")");
        }
        report.checks.push_back(rec.take());
    }
    {
        detail::TensorRecorder rec("antipode");
        for (const auto& g : generators) {
            const AlgebraElement expected = AlgebraElement::scalar(alg, counit(g.element));
            const auto [left, right] = hopf.antipode_sides(hopf.delta(g.element));
            rec.expect_equal(left, expected, "m(S (x) id) Delta(" + g.name + ")");
            rec.expect_equal(right, expected, "m(id (x) S) Delta(" + g.name + ")");
        }
        for (unsigned i = 1; i <= m; ++i)
            rec.expect_equal(hopf.antipode(gens.x[i - 1]), gens.x[i - 1].pow(n - 1), "S(" + detail::idx("x", i) + ") = x^(n-1)");
        for (unsigned l = 1; l < m; ++l)
            rec.expect_equal(hopf.antipode(gens.z[l - 1]), gens.z[l - 1], "S(" + detail::idx("z", l) + ") = z");
        report.checks.push_back(rec.take());
    }
    {
        // Delta applied to both sides of each defining relation, using the
        // closed forms for Delta(x_i) and Delta(z_l).
        detail::TensorRecorder rec("delta_relations");
        const TensorElement unit = tensor(one, one);
        auto pow = [&](const TensorElement& t, unsigned k) {
            TensorElement r = unit;
            for (unsigned i = 0; i < k; ++i) r = r * t;
            return r;
        };
        for (unsigned i = 1; i <= m; ++i) {
            rec.expect_equal(pow(delta_x[i - 1], n), unit, detail::idx("x", i) + "^n = 1");
            for (unsigned j = i + 1; j <= m; ++j)
                rec.expect_equal(delta_x[i - 1] * delta_x[j - 1], delta_x[j - 1] * delta_x[i - 1],
                                 detail::idx("x", i) + " " + detail::idx("x", j) + " commute");
        }
        for (unsigned l = 1; l < m; ++l) {
            const TensorElement& dz = delta_z[l - 1];
            for (unsigned i = 1; i <= m; ++i) {
                const unsigned si = i == l ? l + 1 : (i == l + 1 ? l : i);
                rec.expect_equal(dz * delta_x[i - 1], delta_x[si - 1] * dz,
                                 detail::idx("z", l) + " " + detail::idx("x", i) + " exchange");
            }
            for (unsigned k = l + 2; k < m; ++k)
                rec.expect_equal(dz * delta_z[k - 1], delta_z[k - 1] * dz,
                                 detail::idx("z", l) + " " + detail::idx("z", k) + " commute");
            if (l + 1 < m)
                rec.expect_equal(dz * delta_z[l] * dz, delta_z[l] * dz * delta_z[l], "braid at " + detail::idx("z", l));
            rec.expect_equal(dz * dz, hopf.delta(z_square_rhs(alg, l, 0)), detail::idx("z", l) + "^2");
        }
        report.checks.push_back(rec.take());
    }

    for (unsigned i = 1; i <= m; ++i) report.witnesses.push_back(cocommutativity_witness(detail::idx("x", i), delta_x[i - 1]));
    for (unsigned l = 1; l < m; ++l) report.witnesses.push_back(cocommutativity_witness(detail::idx("z", l), delta_z[l - 1]));
    {
        detail::CheckRecorder rec("non_cocommutativity");
        for (const auto& w : report.witnesses) {
            const bool is_x = w.generator.front() == 'x';
            rec.expect(is_x ? w.symmetric : !w.symmetric, "Delta(" + w.generator + ") vs Delta^op",
                       is_x ? "group-like element is not symmetric" : "Delta(z_l) = Delta^op(z_l)");
        }
        report.checks.push_back(rec.take());
    }
    return report;
}

class non_rational_projection : public std::domain_error {
   public:
    using std::domain_error::domain_error;
};

/// (twists, perm) -> perm, extended linearly. Throws when a projected
/// coefficient is not rational.
inline SymFormalSum quotient_to_sym(const AlgebraElement& a) {
    const WreathGroup& group = a.algebra()->group();
    std::map<Perm, CycNumber> acc;
    for (const auto& [g, c] : a.terms()) {
        auto perm = group.element(g).perm;
        auto it = acc.find(perm);
        if (it == acc.end())
            acc.emplace(std::move(perm), c);
        else
            it->second += c;
    }
    SymFormalSum out(a.m());
    for (const auto& [perm, c] : acc) {
        if (c.is_zero()) continue;
        if (!c.is_rational())
            throw non_rational_projection("quotient_to_sym: coefficient " + c.to_string() + " of " + [&] {
                std::string s = "[";
                for (std::size_t i = 0; i < perm.size(); ++i) s += (i ? "," : "") + std::to_string(perm(i));
                return s + "]";
            }() + " is not rational");
        out.add_term(perm, c.rational_part());
    }
    return out;
}

}  // namespace kacpal
