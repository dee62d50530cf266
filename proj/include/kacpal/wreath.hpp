#pragma once

// The generalised symmetric group Z_n wr S_m.
//
// Elements are pairs (twists, perm) with twists in Z_n^m and perm a
// permutation of {0, ..., m-1} in one-line notation. The product is
//
//   (a, g)(b, h) = (a_i + b_{g^-1(i)}, g o h),   (g o h)(i) = g(h(i)).
//
// Slots and points are 0-based internally; the generator constructors take
// the conventional 1-based subscripts a_1..a_m, b_1..b_{m-1}.

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <numeric>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace kacpal {

using GroupIndex = std::uint32_t;

inline std::uint64_t factorial(unsigned k) {
    if (k > 20) throw std::overflow_error("factorial: argument too large");
    std::uint64_t r = 1;
    for (unsigned i = 2; i <= k; ++i) r *= i;
    return r;
}

inline std::uint64_t checked_power(std::uint64_t base, unsigned exp) {
    std::uint64_t r = 1;
    for (unsigned i = 0; i < exp; ++i) {
        if (base != 0 && r > UINT64_MAX / base) throw std::overflow_error("integer power overflow");
        r *= base;
    }
    return r;
}

/// n^m * m!, saturating at UINT64_MAX.
inline std::uint64_t wreath_order(unsigned n, unsigned m) {
    try {
        const std::uint64_t a = checked_power(n, m);
        const std::uint64_t b = factorial(m);
        if (a != 0 && b > UINT64_MAX / a) return UINT64_MAX;
        return a * b;
    } catch (const std::overflow_error&) {
        return UINT64_MAX;
    }
}

/// A permutation of {0, ..., size-1} in one-line notation.
class Perm {
   public:
    Perm() = default;
    explicit Perm(std::vector<int> images) : images_(std::move(images)) {
        std::vector<bool> seen(images_.size(), false);
        for (int v : images_) {
            if (v < 0 || static_cast<std::size_t>(v) >= images_.size() || seen[static_cast<std::size_t>(v)])
                throw std::invalid_argument("Perm: images are not a bijection");
            seen[static_cast<std::size_t>(v)] = true;
        }
    }
    static Perm identity(std::size_t size) {
        std::vector<int> im(size);
        std::iota(im.begin(), im.end(), 0);
        return Perm(std::move(im));
    }
    /// The transposition of points i and j (0-based).
    static Perm transposition(std::size_t size, std::size_t i, std::size_t j) {
        Perm p = identity(size);
        std::swap(p.images_.at(i), p.images_.at(j));
        return p;
    }

    std::size_t size() const { return images_.size(); }
    int operator()(std::size_t i) const { return images_[i]; }
    const std::vector<int>& images() const { return images_; }

    bool is_identity() const {
        for (std::size_t i = 0; i < images_.size(); ++i)
            if (images_[i] != static_cast<int>(i)) return false;
        return true;
    }

    Perm inverse() const {
        std::vector<int> inv(images_.size());
        for (std::size_t i = 0; i < images_.size(); ++i) inv[static_cast<std::size_t>(images_[i])] = static_cast<int>(i);
        Perm r;
        r.images_ = std::move(inv);
        return r;
    }

    /// (this o other)(i) = this(other(i)).
    Perm compose(const Perm& other) const {
        if (other.size() != size()) throw std::invalid_argument("Perm::compose: size mismatch");
        Perm r;
        r.images_.resize(size());
        for (std::size_t i = 0; i < size(); ++i) r.images_[i] = images_[static_cast<std::size_t>(other.images_[i])];
        return r;
    }

    int sign() const {
        std::vector<bool> seen(size(), false);
        int s = 1;
        for (std::size_t i = 0; i < size(); ++i) {
            if (seen[i]) continue;
            std::size_t len = 0;
            for (std::size_t j = i; !seen[j]; j = static_cast<std::size_t>(images_[j])) {
                seen[j] = true;
                ++len;
            }
            if (len % 2 == 0) s = -s;
        }
        return s;
    }

    /// Lehmer-code rank in [0, size!).
    std::uint64_t lehmer_rank() const {
        std::uint64_t rank = 0;
        const std::size_t m = size();
        for (std::size_t i = 0; i < m; ++i) {
            std::uint64_t smaller = 0;
            for (std::size_t j = i + 1; j < m; ++j)
                if (images_[j] < images_[i]) ++smaller;
            rank = rank * (m - i) + smaller;
        }
        return rank;
    }

    static Perm from_lehmer_rank(std::size_t m, std::uint64_t rank) {
        if (rank >= factorial(static_cast<unsigned>(m))) throw std::out_of_range("Perm::from_lehmer_rank: rank out of range");
        std::vector<std::uint64_t> digits(m, 0);
        for (std::size_t i = m; i-- > 0;) {
            const std::uint64_t radix = m - i;
            digits[i] = rank % radix;
            rank /= radix;
        }
        std::vector<int> pool(m);
        std::iota(pool.begin(), pool.end(), 0);
        std::vector<int> im(m);
        for (std::size_t i = 0; i < m; ++i) {
            im[i] = pool[digits[i]];
            pool.erase(pool.begin() + static_cast<long>(digits[i]));
        }
        Perm r;
        r.images_ = std::move(im);
        return r;
    }

    /// Adjacent-transposition word (0-based positions l, meaning (l l+1))
    /// whose left-to-right product equals this permutation. Obtained by
    /// bubble-sorting the one-line notation.
    std::vector<std::size_t> adjacent_word() const {
        std::vector<int> p = images_;
        std::vector<std::size_t> swaps;
        bool changed = true;
        while (changed) {
            changed = false;
            for (std::size_t i = 0; i + 1 < p.size(); ++i) {
                if (p[i] > p[i + 1]) {
                    std::swap(p[i], p[i + 1]);  // p <- p o (i i+1)
                    swaps.push_back(i);
                    changed = true;
                }
            }
        }
        std::reverse(swaps.begin(), swaps.end());
        return swaps;
    }

    friend auto operator<=>(const Perm&, const Perm&) = default;
    friend bool operator==(const Perm&, const Perm&) = default;

   private:
    std::vector<int> images_;
};

struct WreathElement {
    std::vector<int> twists;
    Perm perm;

    friend bool operator==(const WreathElement&, const WreathElement&) = default;
};

/// The group Z_n wr S_m with a dense index for every element:
///   index = lehmer(perm) * n^m + sum_i twists[i] * n^i.
class WreathGroup {
   public:
    static std::shared_ptr<const WreathGroup> get(unsigned n, unsigned m) {
        static std::mutex mu;
        static std::map<std::pair<unsigned, unsigned>, std::shared_ptr<const WreathGroup>> registry;
        std::lock_guard lock(mu);
        auto& slot = registry[{n, m}];
        if (!slot) slot = std::shared_ptr<const WreathGroup>(new WreathGroup(n, m));
        return slot;
    }

    WreathGroup(unsigned n, unsigned m) : n_(n), m_(m) {
        if (n == 0 || m == 0) throw std::invalid_argument("WreathGroup: n and m must be positive");
        const std::uint64_t order = wreath_order(n, m);
        if (order > UINT32_MAX) throw std::overflow_error("WreathGroup: group too large to index");
        order_ = order;
        twist_count_ = checked_power(n, m);
    }

    unsigned n() const { return n_; }
    unsigned m() const { return m_; }
    std::uint64_t order() const { return order_; }
    /// n^m, the size of the normal subgroup Z_n^m.
    std::uint64_t twist_count() const { return twist_count_; }

    WreathElement identity() const { return {std::vector<int>(m_, 0), Perm::identity(m_)}; }

    void validate(const WreathElement& u) const {
        if (u.twists.size() != m_ || u.perm.size() != m_)
            throw std::invalid_argument("WreathElement does not match group parameters");
        for (int t : u.twists)
            if (t < 0 || t >= static_cast<int>(n_)) throw std::invalid_argument("WreathElement twist out of range");
    }

    WreathElement multiply(const WreathElement& u, const WreathElement& v) const {
        validate(u);
        validate(v);
        const Perm uinv = u.perm.inverse();
        WreathElement r;
        r.twists.resize(m_);
        for (std::size_t i = 0; i < m_; ++i)
            r.twists[i] = (u.twists[i] + v.twists[static_cast<std::size_t>(uinv(i))]) % static_cast<int>(n_);
        r.perm = u.perm.compose(v.perm);
        return r;
    }

    WreathElement inverse(const WreathElement& u) const {
        validate(u);
        WreathElement r;
        r.twists.resize(m_);
        const int n = static_cast<int>(n_);
        for (std::size_t j = 0; j < m_; ++j) r.twists[j] = (n - u.twists[static_cast<std::size_t>(u.perm(j))]) % n;
        r.perm = u.perm.inverse();
        return r;
    }

    /// a_i: unit twist in slot i (1-based).
    WreathElement generator_a(unsigned i) const {
        if (i < 1 || i > m_) throw std::out_of_range("generator_a: index " + std::to_string(i) + " out of range");
        WreathElement r = identity();
        r.twists[i - 1] = 1 % static_cast<int>(n_);
        return r;
    }

    /// b_l: the transposition (l l+1) (1-based), zero twist.
    WreathElement generator_b(unsigned l) const {
        if (l < 1 || l + 1 > m_) throw std::out_of_range("generator_b: index " + std::to_string(l) + " out of range");
        WreathElement r = identity();
        r.perm = Perm::transposition(m_, l - 1, l);
        return r;
    }

    /// The element (twists, identity).
    WreathElement monomial(const std::vector<int>& twists) const {
        WreathElement r{twists, Perm::identity(m_)};
        for (auto& t : r.twists) t = ((t % static_cast<int>(n_)) + static_cast<int>(n_)) % static_cast<int>(n_);
        validate(r);
        return r;
    }

    GroupIndex index(const WreathElement& u) const {
        validate(u);
        std::uint64_t twist = 0;
        for (std::size_t i = m_; i-- > 0;) twist = twist * n_ + static_cast<std::uint64_t>(u.twists[i]);
        return static_cast<GroupIndex>(u.perm.lehmer_rank() * twist_count_ + twist);
    }

    WreathElement element(GroupIndex ix) const {
        if (ix >= order_) throw std::out_of_range("WreathGroup::element: index out of range");
        std::uint64_t twist = ix % twist_count_;
        const std::uint64_t rank = ix / twist_count_;
        WreathElement r;
        r.twists.resize(m_);
        for (std::size_t i = 0; i < m_; ++i) {
            r.twists[i] = static_cast<int>(twist % n_);
            twist /= n_;
        }
        r.perm = Perm::from_lehmer_rank(m_, rank);
        return r;
    }

    std::vector<WreathElement> enumerate() const {
        std::vector<WreathElement> all;
        all.reserve(order_);
        for (std::uint64_t i = 0; i < order_; ++i) all.push_back(element(static_cast<GroupIndex>(i)));
        return all;
    }

   private:
    unsigned n_;
    unsigned m_;
    std::uint64_t order_ = 0;
    std::uint64_t twist_count_ = 0;
};

/// Thrown when a requested computation exceeds a configured group-order cap.
class cap_exceeded : public std::runtime_error {
   public:
    cap_exceeded(std::string check, std::uint64_t order, std::uint64_t cap)
        : std::runtime_error(check + ": group order " + std::to_string(order) + " exceeds cap " + std::to_string(cap)),
          check_(std::move(check)) {}
    const std::string& check() const { return check_; }

   private:
    std::string check_;
};

inline void enforce_cap(const std::string& check, std::uint64_t order, std::uint64_t cap) {
    if (order > cap) throw cap_exceeded(check, order, cap);
}

/// Dense multiplication table; index pairs -> product index.
class WreathTable {
   public:
    explicit WreathTable(std::shared_ptr<const WreathGroup> group) : group_(std::move(group)) {
        const auto order = static_cast<std::size_t>(group_->order());
        elements_ = group_->enumerate();
        inverse_.resize(order);
        for (std::size_t i = 0; i < order; ++i) inverse_[i] = group_->index(group_->inverse(elements_[i]));
        if (order <= kDenseLimit) {
            products_.resize(order * order);
            for (std::size_t a = 0; a < order; ++a)
                for (std::size_t b = 0; b < order; ++b)
                    products_[a * order + b] = group_->index(group_->multiply(elements_[a], elements_[b]));
        }
    }

    static std::shared_ptr<const WreathTable> get(unsigned n, unsigned m) {
        static std::mutex mu;
        static std::map<std::pair<unsigned, unsigned>, std::shared_ptr<const WreathTable>> registry;
        std::lock_guard lock(mu);
        auto& slot = registry[{n, m}];
        if (!slot) slot = std::make_shared<const WreathTable>(WreathGroup::get(n, m));
        return slot;
    }

    const WreathGroup& group() const { return *group_; }
    GroupIndex multiply(GroupIndex a, GroupIndex b) const {
        if (!products_.empty()) return products_[static_cast<std::size_t>(a) * elements_.size() + b];
        return group_->index(group_->multiply(elements_[a], elements_[b]));
    }
    GroupIndex order() const { return static_cast<GroupIndex>(elements_.size()); }
    GroupIndex inverse(GroupIndex a) const { return inverse_[a]; }
    const WreathElement& element(GroupIndex a) const { return elements_[a]; }

   private:
    static constexpr std::size_t kDenseLimit = 2048;

    std::shared_ptr<const WreathGroup> group_;
    std::vector<WreathElement> elements_;
    std::vector<GroupIndex> inverse_;
    std::vector<GroupIndex> products_;
};

/// Number of conjugacy classes, by sweeping conjugation orbits.
inline std::uint64_t conjugacy_class_count(unsigned n, unsigned m, std::uint64_t cap = 10000) {
    enforce_cap("conjugacy", wreath_order(n, m), cap);
    const auto& table = *WreathTable::get(n, m);
    const GroupIndex order = table.order();
    std::vector<bool> visited(order, false);
    std::uint64_t classes = 0;
    for (GroupIndex x = 0; x < order; ++x) {
        if (visited[x]) continue;
        ++classes;
        for (GroupIndex g = 0; g < order; ++g) visited[table.multiply(table.multiply(g, x), table.inverse(g))] = true;
    }
    return classes;
}

}  // namespace kacpal
