#pragma once

// The algebra H_{n,m}, realised as the group algebra Q(zeta_{2n})[Z_n wr S_m].
//
// Basis elements are group indices. The generators are
//   x_i = a_i,   s_l = b_l,   z_l = y_l^{-1} s_l,
// with Lambda_lambda the character idempotents of Q[Z_n^m] and
//   y_l = sum_lambda zeta^(-lambda_l lambda_{l+1}) Lambda_lambda.
// Scalars live in Q(zeta) with zeta a primitive 2n-th root of unity, q = zeta^2.

#include <cstddef>
#include <cstdint>
#include <functional>
#include <map>
#include <memory>
#include <mutex>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "cyclotomic.hpp"
#include "wreath.hpp"

namespace kacpal {

/// A vector in Z_n^m; entries are kept in [0, n).
using ZnVector = std::vector<int>;

/// All of Z_n^m, slot 0 varying fastest.
inline std::vector<ZnVector> zn_vectors(unsigned n, unsigned m) {
    std::vector<ZnVector> out;
    ZnVector cur(m, 0);
    const std::uint64_t count = checked_power(n, m);
    out.reserve(count);
    for (std::uint64_t k = 0; k < count; ++k) {
        out.push_back(cur);
        for (std::size_t i = 0; i < m; ++i) {
            if (++cur[i] < static_cast<int>(n)) break;
            cur[i] = 0;
        }
    }
    return out;
}

/// (v_{sigma_l(1)}, ..., v_{sigma_l(m)}) for the adjacent transposition sigma_l (1-based l).
inline ZnVector swap_adjacent(ZnVector v, unsigned l) {
    if (l < 1 || l >= v.size()) throw std::out_of_range("swap_adjacent: index out of range");
    std::swap(v[l - 1], v[l]);
    return v;
}

class GroupAlgebra {
   public:
    static std::shared_ptr<const GroupAlgebra> get(unsigned n, unsigned m) {
        static std::mutex mu;
        static std::map<std::pair<unsigned, unsigned>, std::shared_ptr<const GroupAlgebra>> registry;
        std::lock_guard lock(mu);
        auto& slot = registry[{n, m}];
        if (!slot) slot = std::shared_ptr<const GroupAlgebra>(new GroupAlgebra(n, m));
        return slot;
    }

    unsigned n() const { return n_; }
    unsigned m() const { return m_; }
    /// Order of zeta, 2n.
    unsigned field_order() const { return 2 * n_; }
    const CycNumber::FieldPtr& field() const { return field_; }
    const WreathGroup& group() const { return table_->group(); }
    const WreathTable& table() const { return *table_; }
    GroupIndex dimension() const { return table_->order(); }

    /// zeta^k.
    const CycNumber& zeta(long k) const {
        const long order = static_cast<long>(field_order());
        return zeta_powers_[static_cast<std::size_t>(((k % order) + order) % order)];
    }
    /// q^k = zeta^(2k).
    const CycNumber& q(long k) const { return zeta(2 * k); }

    CycNumber zero() const { return CycNumber(field_); }
    CycNumber scalar(const Rational& r) const { return CycNumber(field_, r); }

   private:
    GroupAlgebra(unsigned n, unsigned m)
        : n_(n), m_(m), field_(CyclotomicField::get(2 * n)), table_(WreathTable::get(n, m)) {
        for (unsigned k = 0; k < 2 * n; ++k) zeta_powers_.push_back(zeta_power(2 * n, k));
    }

    unsigned n_;
    unsigned m_;
    CycNumber::FieldPtr field_;
    std::shared_ptr<const WreathTable> table_;
    std::vector<CycNumber> zeta_powers_;
};

using AlgebraPtr = std::shared_ptr<const GroupAlgebra>;

/// A finitely supported map from group indices to scalars.
class AlgebraElement {
   public:
    using Terms = std::map<GroupIndex, CycNumber>;

    explicit AlgebraElement(AlgebraPtr alg) : alg_(std::move(alg)) {}

    static AlgebraElement basis(const AlgebraPtr& alg, GroupIndex g, const Rational& c = 1) {
        AlgebraElement e(alg);
        e.add_term(g, alg->scalar(c));
        return e;
    }
    static AlgebraElement basis(const AlgebraPtr& alg, const WreathElement& g) {
        return basis(alg, alg->group().index(g));
    }
    static AlgebraElement identity(const AlgebraPtr& alg) { return basis(alg, GroupIndex{0}); }
    static AlgebraElement scalar(const AlgebraPtr& alg, const CycNumber& c) {
        AlgebraElement e(alg);
        e.add_term(0, c);
        return e;
    }

    const AlgebraPtr& algebra() const { return alg_; }
    unsigned n() const { return alg_->n(); }
    unsigned m() const { return alg_->m(); }
    const Terms& terms() const { return terms_; }
    std::size_t support_size() const { return terms_.size(); }
    bool is_zero() const { return terms_.empty(); }

    CycNumber coefficient(GroupIndex g) const {
        auto it = terms_.find(g);
        return it == terms_.end() ? alg_->zero() : it->second;
    }

    void add_term(GroupIndex g, const CycNumber& c) {
        if (g >= alg_->dimension()) throw std::out_of_range("AlgebraElement: group index out of range");
        if (c.is_zero()) return;
        auto [it, inserted] = terms_.try_emplace(g, c);
        if (!inserted) {
            it->second += c;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }

    AlgebraElement& operator+=(const AlgebraElement& o) {
        check(o);
        for (const auto& [g, c] : o.terms_) add_term(g, c);
        return *this;
    }
    AlgebraElement& operator-=(const AlgebraElement& o) {
        check(o);
        for (const auto& [g, c] : o.terms_) add_term(g, -c);
        return *this;
    }
    AlgebraElement& operator*=(const CycNumber& c) {
        if (c.is_zero()) {
            terms_.clear();
            return *this;
        }
        for (auto& [g, v] : terms_) v = v * c;
        return *this;
    }
    AlgebraElement& operator*=(const Rational& r) {
        if (r == 0) {
            terms_.clear();
            return *this;
        }
        for (auto& [g, v] : terms_) v *= r;
        return *this;
    }

    friend AlgebraElement operator+(AlgebraElement a, const AlgebraElement& b) { return a += b; }
    friend AlgebraElement operator-(AlgebraElement a, const AlgebraElement& b) { return a -= b; }
    friend AlgebraElement operator*(AlgebraElement a, const CycNumber& c) { return a *= c; }
    friend AlgebraElement operator*(const CycNumber& c, AlgebraElement a) { return a *= c; }
    friend AlgebraElement operator*(AlgebraElement a, const Rational& r) { return a *= r; }
    friend AlgebraElement operator*(const Rational& r, AlgebraElement a) { return a *= r; }
    AlgebraElement operator-() const {
        AlgebraElement r(*this);
        for (auto& [g, v] : r.terms_) v = -v;
        return r;
    }

    /// Convolution product.
    friend AlgebraElement operator*(const AlgebraElement& a, const AlgebraElement& b) {
        a.check(b);
        const WreathTable& table = a.alg_->table();
        Terms acc;
        for (const auto& [g, c] : a.terms_)
            for (const auto& [h, d] : b.terms_)
                acc.try_emplace(table.multiply(g, h), a.alg_->field()).first->second.add_product(c, d);
        AlgebraElement r(a.alg_);
        for (auto& [g, c] : acc)
            if (!c.is_zero()) r.terms_.emplace_hint(r.terms_.end(), g, std::move(c));
        return r;
    }

    /// g * this for a group element g; a permutation of coefficients.
    AlgebraElement left_translate(GroupIndex g) const {
        AlgebraElement r(alg_);
        const WreathTable& table = alg_->table();
        for (const auto& [h, c] : terms_) r.terms_.emplace(table.multiply(g, h), c);
        return r;
    }
    /// this * g for a group element g.
    AlgebraElement right_translate(GroupIndex g) const {
        AlgebraElement r(alg_);
        const WreathTable& table = alg_->table();
        for (const auto& [h, c] : terms_) r.terms_.emplace(table.multiply(h, g), c);
        return r;
    }

    AlgebraElement pow(unsigned k) const {
        AlgebraElement result = identity(alg_);
        for (unsigned i = 0; i < k; ++i) result = result * *this;
        return result;
    }

    friend bool operator==(const AlgebraElement& a, const AlgebraElement& b) {
        return a.n() == b.n() && a.m() == b.m() && a.terms_ == b.terms_;
    }
    friend bool operator!=(const AlgebraElement& a, const AlgebraElement& b) { return !(a == b); }

    /// Human-readable term list, e.g. "1/2*[0] + -1/2*[3]".
    std::string to_string(std::size_t max_terms = 8) const {
        if (terms_.empty()) return "0";
        std::string out;
        std::size_t shown = 0;
        for (const auto& [g, c] : terms_) {
            if (shown == max_terms) {
                out += " + ...";
                break;
            }
            if (shown++) out += " + ";
            out += "(" + c.to_string() + ")*[" + std::to_string(g) + "]";
        }
        return out;
    }

   private:
    void check(const AlgebraElement& o) const {
        if (o.n() != n() || o.m() != m())
            throw std::invalid_argument("AlgebraElement: parameter mismatch (" + std::to_string(n()) + "," +
                                        std::to_string(m()) + ") vs (" + std::to_string(o.n()) + "," +
                                        std::to_string(o.m()) + ")");
    }

    AlgebraPtr alg_;
    Terms terms_;
};

// --- distinguished elements -------------------------------------------------

/// x^i = x_1^{i_1} ... x_m^{i_m}.
inline AlgebraElement x_monomial(const AlgebraPtr& alg, const ZnVector& exponents) {
    return AlgebraElement::basis(alg, alg->group().monomial(exponents));
}

/// x_i (1-based).
inline AlgebraElement x_element(const AlgebraPtr& alg, unsigned i) {
    return AlgebraElement::basis(alg, alg->group().generator_a(i));
}

/// s_l (1-based), the group element b_l.
inline AlgebraElement s_element(const AlgebraPtr& alg, unsigned l) {
    return AlgebraElement::basis(alg, alg->group().generator_b(l));
}

inline long dot(const ZnVector& a, const ZnVector& b) {
    long s = 0;
    for (std::size_t i = 0; i < a.size(); ++i) s += static_cast<long>(a[i]) * b[i];
    return s;
}

/// sum_lambda weight(lambda) Lambda_lambda, expanded in the x-monomial basis:
/// the coefficient of x^i is n^{-m} sum_lambda weight(lambda) q^(lambda . i).
inline AlgebraElement character_combination(const AlgebraPtr& alg, const std::function<CycNumber(const ZnVector&)>& weight) {
    const auto vecs = zn_vectors(alg->n(), alg->m());
    std::vector<CycNumber> weights;
    weights.reserve(vecs.size());
    for (const auto& lambda : vecs) weights.push_back(weight(lambda));
    const Rational norm(1, static_cast<unsigned long>(vecs.size()));
    AlgebraElement e(alg);
    for (const auto& i : vecs) {
        CycNumber c = alg->zero();
        for (std::size_t k = 0; k < vecs.size(); ++k)
            if (!weights[k].is_zero()) c.add_product(weights[k], alg->q(dot(vecs[k], i)));
        c *= norm;
        e.add_term(alg->group().index(alg->group().monomial(i)), c);
    }
    return e;
}

/// Lambda_lambda = n^{-m} sum_i q^(lambda . i) x^i.
inline AlgebraElement lambda_idempotent(const AlgebraPtr& alg, const ZnVector& lambda) {
    if (lambda.size() != alg->m()) throw std::invalid_argument("lambda_idempotent: wrong length");
    for (int v : lambda)
        if (v < 0 || v >= static_cast<int>(alg->n())) throw std::invalid_argument("lambda_idempotent: entry out of range");
    const auto vecs = zn_vectors(alg->n(), alg->m());
    const Rational norm(1, static_cast<unsigned long>(vecs.size()));
    AlgebraElement e(alg);
    for (const auto& i : vecs) e.add_term(alg->group().index(alg->group().monomial(i)), alg->q(dot(lambda, i)) * norm);
    return e;
}

inline void check_adjacent_index(const AlgebraPtr& alg, unsigned l) {
    if (l < 1 || l + 1 > alg->m()) throw std::out_of_range("generator index l=" + std::to_string(l) + " out of range");
}

/// y_l = sum_lambda zeta^(-lambda_l lambda_{l+1}) Lambda_lambda, with lambda entries in [0, n).
inline AlgebraElement y_element(const AlgebraPtr& alg, unsigned l) {
    check_adjacent_index(alg, l);
    return character_combination(
        alg, [&](const ZnVector& lam) { return alg->zeta(-static_cast<long>(lam[l - 1]) * lam[l]); });
}

/// y_l^{-1}, by inverting each eigenvalue.
inline AlgebraElement y_inverse_element(const AlgebraPtr& alg, unsigned l) {
    check_adjacent_index(alg, l);
    return character_combination(alg,
                                 [&](const ZnVector& lam) { return alg->zeta(static_cast<long>(lam[l - 1]) * lam[l]); });
}

/// z_l = y_l^{-1} s_l.
inline AlgebraElement z_element(const AlgebraPtr& alg, unsigned l) { return y_inverse_element(alg, l) * s_element(alg, l); }

/// (1/n) sum_{i,j=from}^{n-1} q^(-ij) x_l^i x_{l+1}^j; from = 0 gives the
/// square of z_l.
inline AlgebraElement z_square_rhs(const AlgebraPtr& alg, unsigned l, unsigned from = 0) {
    check_adjacent_index(alg, l);
    const long n = alg->n();
    AlgebraElement e(alg);
    const Rational inv_n(1, static_cast<unsigned long>(n));
    for (long i = from; i < n; ++i)
        for (long j = from; j < n; ++j) {
            ZnVector exps(alg->m(), 0);
            exps[l - 1] = static_cast<int>(i);
            exps[l] = static_cast<int>(j);
            e.add_term(alg->group().index(alg->group().monomial(exps)), alg->q(-i * j) * inv_n);
        }
    return e;
}

}  // namespace kacpal
