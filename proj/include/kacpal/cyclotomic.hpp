#pragma once

// Exact arithmetic in the cyclotomic field Q(zeta_N).
//
// Elements are stored in the power basis 1, zeta, ..., zeta^(phi(N)-1),
// i.e. as polynomials reduced modulo the N-th cyclotomic polynomial.
// Because Phi_N is irreducible the representation is canonical: two
// numbers are equal iff their coefficient vectors are equal.

#include <gmpxx.h>

#include <cstddef>
#include <map>
#include <memory>
#include <mutex>
#include <numeric>
#include <ostream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace kacpal {

using Integer = mpz_class;
using Rational = mpq_class;

inline Rational make_rational(const Integer& num, const Integer& den) {
    if (den == 0) throw std::domain_error("rational with zero denominator");
    Rational r(num, den);
    r.canonicalize();
    return r;
}

class order_mismatch : public std::invalid_argument {
   public:
    using std::invalid_argument::invalid_argument;
};

namespace detail {

using IntPoly = std::vector<Integer>;   // low degree first
using RatPoly = std::vector<Rational>;  // low degree first

inline void trim(IntPoly& p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
}
inline void trim(RatPoly& p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
}

// Exact quotient of `num` by a monic `den`; throws if the remainder is nonzero.
inline IntPoly exact_divide_monic(IntPoly num, const IntPoly& den) {
    trim(num);
    const std::size_t dd = den.size() - 1;
    if (num.size() < den.size()) {
        if (!num.empty()) throw std::logic_error("inexact polynomial division");
        return {};
    }
    IntPoly q(num.size() - dd, 0);
    for (std::size_t k = num.size(); k-- > dd;) {
        const Integer c = num[k];
        if (c == 0) continue;
        q[k - dd] = c;
        for (std::size_t j = 0; j <= dd; ++j) num[k - dd + j] -= c * den[j];
    }
    trim(num);
    if (!num.empty()) throw std::logic_error("inexact polynomial division");
    return q;
}

// Polynomial division over Q: returns (quotient, remainder).
inline std::pair<RatPoly, RatPoly> divmod(RatPoly a, const RatPoly& b) {
    trim(a);
    if (b.empty()) throw std::domain_error("polynomial division by zero");
    if (a.size() < b.size()) return {{}, a};
    const std::size_t db = b.size() - 1;
    RatPoly q(a.size() - db, 0);
    const Rational lead = b.back();
    for (std::size_t k = a.size(); k-- > db;) {
        if (a[k] == 0) continue;
        const Rational c = a[k] / lead;
        q[k - db] = c;
        for (std::size_t j = 0; j <= db; ++j) a[k - db + j] -= c * b[j];
    }
    trim(a);
    trim(q);
    return {q, a};
}

inline RatPoly mul(const RatPoly& a, const RatPoly& b) {
    if (a.empty() || b.empty()) return {};
    RatPoly r(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
    }
    trim(r);
    return r;
}

inline RatPoly sub(RatPoly a, const RatPoly& b) {
    if (a.size() < b.size()) a.resize(b.size(), 0);
    for (std::size_t i = 0; i < b.size(); ++i) a[i] -= b[i];
    trim(a);
    return a;
}

}  // namespace detail

/// Coefficients of Phi_N, lowest degree first. Computed by dividing x^N - 1
/// by Phi_d for every proper divisor d of N.
inline std::vector<Integer> cyclotomic_polynomial(unsigned order) {
    if (order == 0) throw std::invalid_argument("cyclotomic_polynomial: order must be positive");
    static std::mutex mu;
    static std::map<unsigned, std::vector<Integer>> memo;
    {
        std::lock_guard lock(mu);
        if (auto it = memo.find(order); it != memo.end()) return it->second;
    }
    detail::IntPoly p(order + 1, 0);
    p[0] = -1;
    p[order] = 1;
    for (unsigned d = 1; d < order; ++d) {
        if (order % d == 0) p = detail::exact_divide_monic(p, cyclotomic_polynomial(d));
    }
    std::lock_guard lock(mu);
    memo.emplace(order, p);
    return p;
}

inline unsigned euler_totient(unsigned n) {
    unsigned result = n;
    for (unsigned p = 2; p * p <= n; ++p) {
        if (n % p != 0) continue;
        while (n % p == 0) n /= p;
        result -= result / p;
    }
    if (n > 1) result -= result / n;
    return result;
}

/// Shared per-order data: the modulus and the reductions x^k mod Phi_N.
class CyclotomicField {
   public:
    static std::shared_ptr<const CyclotomicField> get(unsigned order) {
        if (order == 0) throw std::invalid_argument("cyclotomic field order must be positive");
        static std::mutex mu;
        static std::map<unsigned, std::shared_ptr<const CyclotomicField>> registry;
        std::lock_guard lock(mu);
        auto& slot = registry[order];
        if (!slot) slot = std::shared_ptr<const CyclotomicField>(new CyclotomicField(order));
        return slot;
    }

    unsigned order() const { return order_; }
    std::size_t degree() const { return degree_; }
    const std::vector<Integer>& modulus() const { return modulus_; }

    /// x^k mod Phi_N as an integer vector of length degree(); valid for
    /// 0 <= k < power_table_size().
    const std::vector<long>& power(std::size_t k) const { return powers_.at(k); }
    std::size_t power_table_size() const { return powers_.size(); }

   private:
    explicit CyclotomicField(unsigned order)
        : order_(order), modulus_(cyclotomic_polynomial(order)), degree_(modulus_.size() - 1) {
        const std::size_t count = std::max<std::size_t>(order, 2 * degree_);
        std::vector<Integer> cur(degree_, 0);
        if (degree_ == 0) throw std::logic_error("degenerate cyclotomic polynomial");
        cur[0] = 1;
        for (std::size_t k = 0; k < count; ++k) {
            std::vector<long> row(degree_);
            for (std::size_t j = 0; j < degree_; ++j) {
                if (!cur[j].fits_slong_p()) throw std::overflow_error("cyclotomic reduction table overflow");
                row[j] = cur[j].get_si();
            }
            powers_.push_back(std::move(row));
            // multiply by x and reduce with the monic modulus
            Integer top = cur[degree_ - 1];
            for (std::size_t j = degree_ - 1; j > 0; --j) cur[j] = cur[j - 1];
            cur[0] = 0;
            if (top != 0) {
                for (std::size_t j = 0; j < degree_; ++j) cur[j] -= top * modulus_[j];
            }
        }
    }

    unsigned order_;
    std::vector<Integer> modulus_;
    std::size_t degree_;
    std::vector<std::vector<long>> powers_;
};

/// An element of Q(zeta_N).
class CycNumber {
   public:
    using FieldPtr = std::shared_ptr<const CyclotomicField>;

    explicit CycNumber(unsigned order) : CycNumber(CyclotomicField::get(order)) {}
    explicit CycNumber(FieldPtr field) : field_(std::move(field)), coeffs_(field_->degree(), 0) {}
    CycNumber(FieldPtr field, const Rational& value) : CycNumber(std::move(field)) { coeffs_[0] = value; }
    CycNumber(unsigned order, const Rational& value) : CycNumber(CyclotomicField::get(order), value) {}

    /// Builds a number from an arbitrary polynomial in zeta (any length),
    /// reducing it into canonical form.
    static CycNumber from_polynomial(FieldPtr field, const std::vector<Rational>& poly) {
        CycNumber r(field);
        r.accumulate_reduced(poly);
        return r;
    }

    static CycNumber zero(unsigned order) { return CycNumber(order); }
    static CycNumber one(unsigned order) { return CycNumber(order, Rational(1)); }

    unsigned order() const { return field_->order(); }
    const FieldPtr& field() const { return field_; }
    const std::vector<Rational>& coeffs() const { return coeffs_; }

    bool is_zero() const {
        for (const auto& c : coeffs_)
            if (c != 0) return false;
        return true;
    }
    bool is_rational() const {
        for (std::size_t i = 1; i < coeffs_.size(); ++i)
            if (coeffs_[i] != 0) return false;
        return true;
    }
    bool is_one() const { return is_rational() && coeffs_[0] == 1; }
    /// Constant term; only meaningful when is_rational().
    const Rational& rational_part() const { return coeffs_[0]; }

    CycNumber& operator+=(const CycNumber& o) {
        check(o);
        for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
        return *this;
    }
    CycNumber& operator-=(const CycNumber& o) {
        check(o);
        for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
        return *this;
    }
    CycNumber& operator*=(const Rational& r) {
        if (r == 0) {
            for (auto& c : coeffs_) c = 0;
        } else if (r != 1) {
            for (auto& c : coeffs_)
                if (c != 0) c *= r;
        }
        return *this;
    }
    CycNumber& operator*=(const CycNumber& o) {
        *this = *this * o;
        return *this;
    }
    CycNumber& operator/=(const CycNumber& o) { return *this *= o.inverse(); }

    /// this += a * b, without a temporary for the product.
    void add_product(const CycNumber& a, const CycNumber& b) {
        check(a);
        check(b);
        const std::size_t d = coeffs_.size();
        if (a.is_rational() && b.is_rational()) {
            coeffs_[0] += a.coeffs_[0] * b.coeffs_[0];
            return;
        }
        if (a.is_rational()) {
            if (a.coeffs_[0] == 0) return;
            for (std::size_t i = 0; i < d; ++i)
                if (b.coeffs_[i] != 0) coeffs_[i] += a.coeffs_[0] * b.coeffs_[i];
            return;
        }
        if (b.is_rational()) {
            if (b.coeffs_[0] == 0) return;
            for (std::size_t i = 0; i < d; ++i)
                if (a.coeffs_[i] != 0) coeffs_[i] += a.coeffs_[i] * b.coeffs_[0];
            return;
        }
        std::vector<Rational> prod(2 * d - 1, 0);
        for (std::size_t i = 0; i < d; ++i) {
            if (a.coeffs_[i] == 0) continue;
            for (std::size_t j = 0; j < d; ++j) {
                if (b.coeffs_[j] == 0) continue;
                prod[i + j] += a.coeffs_[i] * b.coeffs_[j];
            }
        }
        accumulate_reduced(prod);
    }

    friend CycNumber operator+(CycNumber a, const CycNumber& b) { return a += b; }
    friend CycNumber operator-(CycNumber a, const CycNumber& b) { return a -= b; }
    friend CycNumber operator*(const CycNumber& a, const CycNumber& b) {
        CycNumber r(a.field_);
        r.add_product(a, b);
        return r;
    }
    friend CycNumber operator*(CycNumber a, const Rational& r) { return a *= r; }
    friend CycNumber operator*(const Rational& r, CycNumber a) { return a *= r; }
    friend CycNumber operator/(const CycNumber& a, const CycNumber& b) { return a * b.inverse(); }
    CycNumber operator-() const {
        CycNumber r(*this);
        for (auto& c : r.coeffs_) c = -c;
        return r;
    }

    friend bool operator==(const CycNumber& a, const CycNumber& b) {
        return a.order() == b.order() && a.coeffs_ == b.coeffs_;
    }
    friend bool operator!=(const CycNumber& a, const CycNumber& b) { return !(a == b); }

    /// Multiplicative inverse by the extended Euclidean algorithm against Phi_N.
    CycNumber inverse() const {
        if (is_zero()) throw std::domain_error("CycNumber: division by zero");
        if (is_rational()) return CycNumber(field_, 1 / coeffs_[0]);
        using detail::RatPoly;
        RatPoly r0(field_->modulus().begin(), field_->modulus().end());
        RatPoly r1(coeffs_.begin(), coeffs_.end());
        detail::trim(r1);
        RatPoly t0, t1{Rational(1)};
        while (!r1.empty()) {
            auto [q, r] = detail::divmod(r0, r1);
            RatPoly t = detail::sub(t0, detail::mul(q, t1));
            r0 = std::move(r1);
            r1 = std::move(r);
            t0 = std::move(t1);
            t1 = std::move(t);
        }
        // r0 is a nonzero constant since Phi_N is irreducible
        if (r0.size() != 1) throw std::logic_error("CycNumber::inverse: modulus not irreducible");
        const Rational scale = 1 / r0[0];
        for (auto& c : t0) c *= scale;
        return from_polynomial(field_, t0);
    }

    CycNumber pow(long k) const {
        if (k < 0) return inverse().pow(-k);
        CycNumber result(field_, Rational(1));
        CycNumber base(*this);
        while (k > 0) {
            if (k & 1) result = result * base;
            k >>= 1;
            if (k) base = base * base;
        }
        return result;
    }

    std::string to_string() const {
        std::string out;
        for (std::size_t i = 0; i < coeffs_.size(); ++i) {
            if (coeffs_[i] == 0) continue;
            if (!out.empty()) out += " + ";
            out += coeffs_[i].get_str();
            if (i == 1) out += "*z";
            if (i > 1) out += "*z^" + std::to_string(i);
        }
        return out.empty() ? "0" : out;
    }
    friend std::ostream& operator<<(std::ostream& os, const CycNumber& c) { return os << c.to_string(); }

   private:
    void check(const CycNumber& o) const {
        if (field_ != o.field_ && field_->order() != o.field_->order())
            throw order_mismatch("CycNumber: operands have different orders (" + std::to_string(order()) +
                                 " vs " + std::to_string(o.order()) + ")");
    }

    void accumulate_reduced(const std::vector<Rational>& poly) {
        const std::size_t d = coeffs_.size();
        for (std::size_t k = 0; k < poly.size(); ++k) {
            if (poly[k] == 0) continue;
            if (k < d) {
                coeffs_[k] += poly[k];
                continue;
            }
            if (k >= field_->power_table_size()) {
                // fold high powers through zeta^N = 1 first
                std::vector<Rational> folded(field_->order(), 0);
                for (std::size_t j = k; j < poly.size(); ++j) folded[j % field_->order()] += poly[j];
                accumulate_reduced(folded);
                return;
            }
            const auto& row = field_->power(k);
            for (std::size_t j = 0; j < d; ++j) {
                const long c = row[j];
                if (c == 0) continue;
                if (c == 1)
                    coeffs_[j] += poly[k];
                else if (c == -1)
                    coeffs_[j] -= poly[k];
                else
                    coeffs_[j] += poly[k] * c;
            }
        }
    }

    FieldPtr field_;
    std::vector<Rational> coeffs_;
};

/// zeta^(k mod N).
inline CycNumber zeta_power(unsigned order, long k) {
    auto field = CyclotomicField::get(order);
    const long n = static_cast<long>(order);
    const auto idx = static_cast<std::size_t>(((k % n) + n) % n);
    CycNumber r(field);
    const auto& row = field->power(idx);
    std::vector<Rational> poly(row.begin(), row.end());
    return CycNumber::from_polynomial(field, poly);
}

/// Sum over i, j in Z_n of q^(-ij - a*i - b*j), with q = zeta_{2n}^2.
/// The identity this sum is checked against is n * q^(ab).
inline CycNumber gauss_sum_check(unsigned n, long a, long b) {
    if (n == 0) throw std::invalid_argument("gauss_sum_check: n must be positive");
    const unsigned order = 2 * n;
    CycNumber sum = CycNumber::zero(order);
    const long nn = static_cast<long>(n);
    for (long i = 0; i < nn; ++i)
        for (long j = 0; j < nn; ++j) sum += zeta_power(order, 2 * (-i * j - a * i - b * j));
    return sum;
}

}  // namespace kacpal
