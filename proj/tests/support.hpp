#pragma once

// Generators and independent oracles shared by the test suites. Nothing here
// calls into the library for the quantity being checked.

#include <algorithm>
#include <complex>
#include <cstdint>
#include <numeric>
#include <random>
#include <vector>

#include <kacpal/kacpal.hpp>

namespace kacpal::testing {

inline std::mt19937_64 rng(std::uint64_t salt = 0) { return std::mt19937_64(0x6b61637061ULL ^ salt); }

inline Rational random_rational(std::mt19937_64& g, int span = 7) {
    std::uniform_int_distribution<int> num(-span, span), den(1, span);
    return make_rational(Integer(num(g)), Integer(den(g)));
}

inline CycNumber random_cyc(std::mt19937_64& g, unsigned order) {
    auto field = CyclotomicField::get(order);
    std::vector<Rational> poly(field->degree());
    for (auto& c : poly) c = random_rational(g);
    return CycNumber::from_polynomial(field, poly);
}

inline AlgebraElement random_element(std::mt19937_64& g, const AlgebraPtr& alg, std::size_t terms) {
    std::uniform_int_distribution<GroupIndex> pick(0, alg->dimension() - 1);
    AlgebraElement e(alg);
    for (std::size_t i = 0; i < terms; ++i) e.add_term(pick(g), random_cyc(g, alg->field_order()));
    return e;
}

/// Standard tableaux of shape mu by trying every filling of the boxes with a
/// permutation of 1..k and checking rows and columns increase.
inline std::uint64_t brute_force_standard_tableaux(const std::vector<int>& mu) {
    const int k = std::accumulate(mu.begin(), mu.end(), 0);
    std::vector<int> fill(static_cast<std::size_t>(k));
    std::iota(fill.begin(), fill.end(), 1);
    std::uint64_t count = 0;
    do {
        std::vector<std::vector<int>> grid;
        std::size_t pos = 0;
        for (int len : mu) {
            grid.emplace_back(fill.begin() + static_cast<long>(pos), fill.begin() + static_cast<long>(pos + len));
            pos += static_cast<std::size_t>(len);
        }
        bool ok = true;
        for (std::size_t r = 0; r < grid.size() && ok; ++r)
            for (std::size_t c = 0; c < grid[r].size() && ok; ++c) {
                if (c > 0 && grid[r][c] < grid[r][c - 1]) ok = false;
                if (r > 0 && grid[r][c] < grid[r - 1][c]) ok = false;
            }
        count += ok;
    } while (std::next_permutation(fill.begin(), fill.end()));
    return count;
}

/// Partitions of k by listing non-increasing sequences with a stack.
inline std::uint64_t brute_force_partition_count(int k) {
    std::uint64_t count = 0;
    std::vector<std::pair<int, int>> stack{{k, k}};  // (remaining, max part)
    while (!stack.empty()) {
        auto [rem, maxp] = stack.back();
        stack.pop_back();
        if (rem == 0) {
            ++count;
            continue;
        }
        for (int p = 1; p <= std::min(rem, maxp); ++p) stack.push_back({rem - p, p});
    }
    return count;
}

/// Number of conjugacy classes as |{(g,h) : gh = hg}| / |G|, using only the
/// group multiplication rule.
inline std::uint64_t commuting_pairs_class_count(unsigned n, unsigned m) {
    const auto group = WreathGroup::get(n, m);
    const auto elements = group->enumerate();
    std::uint64_t pairs = 0;
    for (const auto& g : elements)
        for (const auto& h : elements) pairs += group->multiply(g, h) == group->multiply(h, g);
    return pairs / elements.size();
}

/// Numerical value of a cyclotomic number at zeta = exp(2 pi i / N).
inline std::complex<double> numeric_value(const CycNumber& c) {
    const double pi = std::acos(-1.0);
    std::complex<double> z = std::polar(1.0, 2 * pi / c.order()), acc = 0, power = 1;
    for (const auto& r : c.coeffs()) {
        acc += r.get_d() * power;
        power *= z;
    }
    return acc;
}

}  // namespace kacpal::testing
