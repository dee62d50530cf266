#pragma once

// Exact rank over Q(zeta) and the ideal dimensions built on it.

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <utility>
#include <vector>

#include "algebra.hpp"
#include "cyclotomic.hpp"

namespace kacpal {

inline constexpr std::uint64_t kDefaultRankCap = 2000;

/// Dense row-major matrix of cyclotomic numbers.
class CycMatrix {
   public:
    CycMatrix(std::size_t rows, std::size_t cols, const CycNumber::FieldPtr& field)
        : rows_(rows), cols_(cols), entries_(rows * cols, CycNumber(field)) {}

    static CycMatrix identity(std::size_t k, const CycNumber::FieldPtr& field) {
        CycMatrix m(k, k, field);
        for (std::size_t i = 0; i < k; ++i) m(i, i) = CycNumber(field, Rational(1));
        return m;
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    CycNumber& operator()(std::size_t r, std::size_t c) { return entries_[r * cols_ + c]; }
    const CycNumber& operator()(std::size_t r, std::size_t c) const { return entries_[r * cols_ + c]; }

    void swap_rows(std::size_t a, std::size_t b) {
        if (a == b) return;
        for (std::size_t c = 0; c < cols_; ++c) std::swap(entries_[a * cols_ + c], entries_[b * cols_ + c]);
    }

   private:
    std::size_t rows_;
    std::size_t cols_;
    std::vector<CycNumber> entries_;
};

/// Rank by Gaussian elimination. Columns are scanned left to right and the
/// first row with a nonzero entry becomes the pivot.
inline std::size_t rank(CycMatrix m) {
    std::size_t pivot_row = 0;
    for (std::size_t col = 0; col < m.cols() && pivot_row < m.rows(); ++col) {
        std::size_t found = m.rows();
        for (std::size_t r = pivot_row; r < m.rows(); ++r)
            if (!m(r, col).is_zero()) {
                found = r;
                break;
            }
        if (found == m.rows()) continue;
        m.swap_rows(pivot_row, found);
        const CycNumber inv = m(pivot_row, col).inverse();
        for (std::size_t c = col; c < m.cols(); ++c) m(pivot_row, c) = m(pivot_row, c) * inv;
        for (std::size_t r = pivot_row + 1; r < m.rows(); ++r) {
            if (m(r, col).is_zero()) continue;
            const CycNumber factor = -m(r, col);
            for (std::size_t c = col; c < m.cols(); ++c)
                if (!m(pivot_row, c).is_zero()) m(r, c).add_product(factor, m(pivot_row, c));
        }
        ++pivot_row;
    }
    return pivot_row;
}

/// Rank of a family of algebra elements, as coordinate vectors in the group basis.
inline std::size_t span_dimension(const std::vector<AlgebraElement>& vectors, const AlgebraPtr& alg) {
    CycMatrix mat(vectors.size(), alg->dimension(), alg->field());
    for (std::size_t r = 0; r < vectors.size(); ++r)
        for (const auto& [g, c] : vectors[r].terms()) mat(r, g) = c;
    return rank(std::move(mat));
}

/// dim H e = rank of {g e : g in G}.
inline std::size_t left_ideal_dimension(const AlgebraElement& e, std::uint64_t cap = kDefaultRankCap) {
    const auto& alg = e.algebra();
    enforce_cap("ranks", alg->dimension(), cap);
    std::vector<AlgebraElement> vectors;
    vectors.reserve(alg->dimension());
    for (GroupIndex g = 0; g < alg->dimension(); ++g) vectors.push_back(e.left_translate(g));
    return span_dimension(vectors, alg);
}

/// dim e H f = rank of {e g f : g in G}.
inline std::size_t sandwich_dimension(const AlgebraElement& e, const AlgebraElement& f,
                                      std::uint64_t cap = kDefaultRankCap) {
    const auto& alg = e.algebra();
    if (f.n() != e.n() || f.m() != e.m()) throw std::invalid_argument("sandwich_dimension: parameter mismatch");
    enforce_cap("orthogonality", alg->dimension(), cap);
    std::vector<AlgebraElement> vectors;
    vectors.reserve(alg->dimension());
    for (GroupIndex g = 0; g < alg->dimension(); ++g) {
        AlgebraElement v = e * f.left_translate(g);
        if (!v.is_zero()) vectors.push_back(std::move(v));
    }
    if (vectors.empty()) return 0;
    return span_dimension(vectors, alg);
}

}  // namespace kacpal
