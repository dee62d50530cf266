#pragma once

// Integer partitions, Young tableaux and normalised Young symmetrizers.

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <map>
#include <numeric>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "cyclotomic.hpp"
#include "wreath.hpp"

namespace kacpal {

class Partition {
   public:
    Partition() = default;
    explicit Partition(std::vector<int> parts) : parts_(std::move(parts)) {
        for (std::size_t i = 0; i < parts_.size(); ++i) {
            if (parts_[i] <= 0) throw std::invalid_argument("Partition: parts must be positive");
            if (i > 0 && parts_[i] > parts_[i - 1]) throw std::invalid_argument("Partition: parts must be non-increasing");
        }
    }

    const std::vector<int>& parts() const { return parts_; }
    std::size_t length() const { return parts_.size(); }
    bool empty() const { return parts_.empty(); }
    int size() const { return std::accumulate(parts_.begin(), parts_.end(), 0); }
    int operator[](std::size_t row) const { return parts_[row]; }

    bool contains_box(std::size_t row, std::size_t col) const {
        return row < parts_.size() && col < static_cast<std::size_t>(parts_[row]);
    }

    Partition conjugate() const {
        std::vector<int> c;
        if (!parts_.empty()) {
            c.resize(static_cast<std::size_t>(parts_[0]), 0);
            for (int p : parts_)
                for (int j = 0; j < p; ++j) ++c[static_cast<std::size_t>(j)];
        }
        return Partition(std::move(c));
    }

    std::string to_string() const {
        std::string s = "(";
        for (std::size_t i = 0; i < parts_.size(); ++i) s += (i ? "," : "") + std::to_string(parts_[i]);
        return s + ")";
    }

    friend auto operator<=>(const Partition&, const Partition&) = default;
    friend bool operator==(const Partition&, const Partition&) = default;

   private:
    std::vector<int> parts_;
};

namespace detail {
inline void partitions_rec(int remaining, int max_part, std::vector<int>& cur, std::vector<Partition>& out) {
    if (remaining == 0) {
        out.emplace_back(cur);
        return;
    }
    for (int p = std::min(remaining, max_part); p >= 1; --p) {
        cur.push_back(p);
        partitions_rec(remaining - p, p, cur, out);
        cur.pop_back();
    }
}
}  // namespace detail

/// All partitions of k in reverse-lexicographic order: (k), (k-1,1), ..., (1^k).
inline std::vector<Partition> partitions_of(int k) {
    if (k < 0) throw std::invalid_argument("partitions_of: k must be non-negative");
    std::vector<Partition> out;
    std::vector<int> cur;
    detail::partitions_rec(k, k, cur, out);
    return out;
}

/// p(k) by the standard part-size recurrence.
inline std::uint64_t partition_count(int k) {
    if (k < 0) throw std::invalid_argument("partition_count: k must be non-negative");
    std::vector<std::uint64_t> p(static_cast<std::size_t>(k) + 1, 0);
    p[0] = 1;
    for (int part = 1; part <= k; ++part)
        for (int s = part; s <= k; ++s) p[static_cast<std::size_t>(s)] += p[static_cast<std::size_t>(s - part)];
    return p[static_cast<std::size_t>(k)];
}

/// Boxes to the right, below, and the box itself. Rows and columns are 0-based.
inline int hook_length(const Partition& mu, std::size_t row, std::size_t col) {
    if (!mu.contains_box(row, col))
        throw std::out_of_range("hook_length: box (" + std::to_string(row) + "," + std::to_string(col) + ") outside shape " +
                                mu.to_string());
    const int arm = mu[row] - static_cast<int>(col) - 1;
    int leg = 0;
    for (std::size_t r = row + 1; r < mu.length() && mu.contains_box(r, col); ++r) ++leg;
    return arm + leg + 1;
}

/// f_mu = k! / prod of hook lengths.
inline std::uint64_t standard_tableaux_count(const Partition& mu) {
    Integer num = 1;
    for (int i = 2; i <= mu.size(); ++i) num *= i;
    Integer den = 1;
    for (std::size_t r = 0; r < mu.length(); ++r)
        for (std::size_t c = 0; c < static_cast<std::size_t>(mu[r]); ++c) den *= hook_length(mu, r, c);
    if (num % den != 0) throw std::logic_error("hook length formula produced a non-integer");
    const Integer q = num / den;
    return q.get_ui();
}

/// f_mu via the branching rule f_mu = sum over removable corners of f_{mu - corner}.
inline std::uint64_t standard_tableaux_count_branching(const Partition& mu) {
    if (mu.size() <= 1) return 1;
    std::uint64_t total = 0;
    for (std::size_t r = 0; r < mu.length(); ++r) {
        const bool corner = r + 1 == mu.length() || mu[r + 1] < mu[r];
        if (!corner) continue;
        std::vector<int> parts = mu.parts();
        if (--parts[r] == 0) parts.pop_back();
        total += standard_tableaux_count_branching(Partition(std::move(parts)));
    }
    return total;
}

/// A filling of a Young diagram, stored row by row with entries 1..k.
class Tableau {
   public:
    explicit Tableau(std::vector<std::vector<int>> rows) : rows_(std::move(rows)) {
        std::vector<int> lengths;
        int k = 0;
        for (const auto& row : rows_) {
            lengths.push_back(static_cast<int>(row.size()));
            k += static_cast<int>(row.size());
        }
        shape_ = Partition(lengths);
        std::vector<bool> seen(static_cast<std::size_t>(k) + 1, false);
        for (const auto& row : rows_)
            for (int v : row) {
                if (v < 1 || v > k || seen[static_cast<std::size_t>(v)])
                    throw std::invalid_argument("Tableau: entries must be a bijection onto 1..k");
                seen[static_cast<std::size_t>(v)] = true;
            }
    }

    const Partition& shape() const { return shape_; }
    const std::vector<std::vector<int>>& rows() const { return rows_; }
    int size() const { return shape_.size(); }
    int at(std::size_t row, std::size_t col) const { return rows_.at(row).at(col); }

    std::vector<std::vector<int>> columns() const {
        std::vector<std::vector<int>> cols;
        if (rows_.empty()) return cols;
        cols.resize(rows_[0].size());
        for (const auto& row : rows_)
            for (std::size_t c = 0; c < row.size(); ++c) cols[c].push_back(row[c]);
        return cols;
    }

    bool is_standard() const {
        for (std::size_t r = 0; r < rows_.size(); ++r)
            for (std::size_t c = 0; c < rows_[r].size(); ++c) {
                if (c + 1 < rows_[r].size() && rows_[r][c] >= rows_[r][c + 1]) return false;
                if (r + 1 < rows_.size() && c < rows_[r + 1].size() && rows_[r][c] >= rows_[r + 1][c]) return false;
            }
        return true;
    }

   private:
    std::vector<std::vector<int>> rows_;
    Partition shape_;
};

/// The standard tableau whose rows hold consecutive integers.
inline Tableau row_consecutive_tableau(const Partition& mu) {
    std::vector<std::vector<int>> rows;
    int next = 1;
    for (int len : mu.parts()) {
        std::vector<int> row(static_cast<std::size_t>(len));
        std::iota(row.begin(), row.end(), next);
        next += len;
        rows.push_back(std::move(row));
    }
    return Tableau(std::move(rows));
}

/// A finitely supported rational combination of permutations of {0..size-1}.
/// Multiplication follows the composition convention (g h)(i) = g(h(i)).
class SymFormalSum {
   public:
    explicit SymFormalSum(std::size_t size) : size_(size) {}

    static SymFormalSum single(const Perm& g, const Rational& c = 1) {
        SymFormalSum s(g.size());
        s.add_term(g, c);
        return s;
    }

    std::size_t size() const { return size_; }
    const std::map<Perm, Rational>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    Rational coefficient(const Perm& g) const {
        auto it = terms_.find(g);
        return it == terms_.end() ? Rational(0) : it->second;
    }

    void add_term(const Perm& g, const Rational& c) {
        if (g.size() != size_) throw std::invalid_argument("SymFormalSum: permutation size mismatch");
        if (c == 0) return;
        auto [it, inserted] = terms_.emplace(g, c);
        if (!inserted) {
            it->second += c;
            if (it->second == 0) terms_.erase(it);
        }
    }

    SymFormalSum& operator+=(const SymFormalSum& o) {
        check(o);
        for (const auto& [g, c] : o.terms_) add_term(g, c);
        return *this;
    }
    SymFormalSum& operator-=(const SymFormalSum& o) {
        check(o);
        for (const auto& [g, c] : o.terms_) add_term(g, -c);
        return *this;
    }
    SymFormalSum& operator*=(const Rational& r) {
        if (r == 0) {
            terms_.clear();
            return *this;
        }
        for (auto& [g, c] : terms_) c *= r;
        return *this;
    }
    friend SymFormalSum operator+(SymFormalSum a, const SymFormalSum& b) { return a += b; }
    friend SymFormalSum operator-(SymFormalSum a, const SymFormalSum& b) { return a -= b; }
    friend SymFormalSum operator*(SymFormalSum a, const Rational& r) { return a *= r; }
    friend SymFormalSum operator*(const Rational& r, SymFormalSum a) { return a *= r; }
    friend SymFormalSum operator*(const SymFormalSum& a, const SymFormalSum& b) {
        a.check(b);
        SymFormalSum r(a.size_);
        for (const auto& [g, c] : a.terms_)
            for (const auto& [h, d] : b.terms_) r.add_term(g.compose(h), c * d);
        return r;
    }
    friend bool operator==(const SymFormalSum&, const SymFormalSum&) = default;

   private:
    void check(const SymFormalSum& o) const {
        if (o.size_ != size_) throw std::invalid_argument("SymFormalSum: ambient size mismatch");
    }

    std::size_t size_;
    std::map<Perm, Rational> terms_;
};

namespace detail {
// All permutations of {0..k-1} that map every block (a set of 1-based
// entries) onto itself.
inline std::vector<Perm> block_preserving(int k, const std::vector<std::vector<int>>& blocks) {
    std::vector<Perm> out{Perm::identity(static_cast<std::size_t>(k))};
    for (const auto& block : blocks) {
        if (block.size() < 2) continue;
        std::vector<int> sorted = block;
        std::sort(sorted.begin(), sorted.end());
        std::vector<Perm> local;
        std::vector<int> arrangement = sorted;
        do {
            std::vector<int> im(static_cast<std::size_t>(k));
            std::iota(im.begin(), im.end(), 0);
            for (std::size_t i = 0; i < sorted.size(); ++i)
                im[static_cast<std::size_t>(sorted[i] - 1)] = arrangement[i] - 1;
            local.emplace_back(std::move(im));
        } while (std::next_permutation(arrangement.begin(), arrangement.end()));
        std::vector<Perm> next;
        next.reserve(out.size() * local.size());
        for (const auto& g : out)
            for (const auto& h : local) next.push_back(g.compose(h));
        out = std::move(next);
    }
    std::sort(out.begin(), out.end());
    return out;
}
}  // namespace detail

/// Permutations preserving every row of T (as sets of entries).
inline std::vector<Perm> horizontal_group(const Tableau& t) { return detail::block_preserving(t.size(), t.rows()); }

/// Permutations preserving every column of T.
inline std::vector<Perm> vertical_group(const Tableau& t) { return detail::block_preserving(t.size(), t.columns()); }

/// e_T = (f_mu / k!) h_T v_T with h_T the row sum and v_T the signed column sum.
inline SymFormalSum young_symmetrizer(const Tableau& t) {
    if (!t.is_standard()) throw std::invalid_argument("young_symmetrizer: tableau must be standard");
    const auto k = static_cast<std::size_t>(t.size());
    SymFormalSum h(k), v(k);
    for (const auto& g : horizontal_group(t)) h.add_term(g, 1);
    for (const auto& g : vertical_group(t)) v.add_term(g, g.sign());
    const Rational scale = make_rational(Integer(static_cast<unsigned long>(standard_tableaux_count(t.shape()))),
                                         Integer(static_cast<unsigned long>(factorial(static_cast<unsigned>(k)))));
    return (h * v) * scale;
}

}  // namespace kacpal
