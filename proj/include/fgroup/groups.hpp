#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <span>
#include <string>
#include <vector>

#include "fgroup/smith.hpp"

namespace fgroup {

using AbelianElement = std::vector<std::int64_t>;

/// ⊕ Z/m_i, elements as residue tuples.
class FiniteAbelianGroup {
public:
    FiniteAbelianGroup() = default;
    explicit FiniteAbelianGroup(std::vector<std::int64_t> moduli)
        : moduli_(std::move(moduli))
    {
        for (auto m : moduli_) {
            if (m < 1) {
                fail(ErrorCode::MalformedHom, "group moduli must be at least 1");
            }
        }
    }

    std::span<const std::int64_t> moduli() const { return moduli_; }
    std::size_t rank() const { return moduli_.size(); }

    BigInt order() const
    {
        BigInt p = 1;
        for (auto m : moduli_) {
            p *= big(m);
        }
        return p;
    }

    AbelianElement zero() const { return AbelianElement(moduli_.size(), 0); }

    bool contains(const AbelianElement& a) const
    {
        if (a.size() != moduli_.size()) {
            return false;
        }
        for (std::size_t i = 0; i < a.size(); ++i) {
            if (a[i] < 0 || a[i] >= moduli_[i]) {
                return false;
            }
        }
        return true;
    }

    AbelianElement add(const AbelianElement& a, const AbelianElement& b) const
    {
        AbelianElement out(a.size());
        for (std::size_t i = 0; i < a.size(); ++i) {
            out[i] = (a[i] + b[i]) % moduli_[i];
        }
        return out;
    }

    void add_into(AbelianElement& acc, const AbelianElement& b) const
    {
        for (std::size_t i = 0; i < acc.size(); ++i) {
            acc[i] = (acc[i] + b[i]) % moduli_[i];
        }
    }

    AbelianElement neg(const AbelianElement& a) const
    {
        AbelianElement out(a.size());
        for (std::size_t i = 0; i < a.size(); ++i) {
            out[i] = (moduli_[i] - a[i]) % moduli_[i];
        }
        return out;
    }

    AbelianElement scale(const AbelianElement& a, std::int64_t n) const
    {
        AbelianElement out(a.size());
        for (std::size_t i = 0; i < a.size(); ++i) {
            auto r = static_cast<std::int64_t>((static_cast<__int128>(a[i]) * n) % moduli_[i]);
            out[i] = r < 0 ? r + moduli_[i] : r;
        }
        return out;
    }

    static bool is_zero(const AbelianElement& a)
    {
        return std::all_of(a.begin(), a.end(), [](auto v) { return v == 0; });
    }

    std::int64_t element_order(const AbelianElement& a) const
    {
        std::int64_t l = 1;
        for (std::size_t i = 0; i < a.size(); ++i) {
            l = lcm_checked(l, moduli_[i] / std::gcd(a[i], moduli_[i]));
        }
        return l;
    }

    /// Mixed-radix index; the first coordinate is most significant, so index
    /// order is lexicographic order of residue tuples.
    std::uint64_t encode(const AbelianElement& a) const
    {
        std::uint64_t idx = 0;
        for (std::size_t i = 0; i < a.size(); ++i) {
            idx = idx * static_cast<std::uint64_t>(moduli_[i]) + static_cast<std::uint64_t>(a[i]);
        }
        return idx;
    }

    AbelianElement decode(std::uint64_t idx) const
    {
        AbelianElement out(moduli_.size());
        for (std::size_t i = moduli_.size(); i-- > 0;) {
            auto m = static_cast<std::uint64_t>(moduli_[i]);
            out[i] = static_cast<std::int64_t>(idx % m);
            idx /= m;
        }
        return out;
    }

    /// Order of the subgroup generated by `gens`.
    BigInt subgroup_order(std::span<const AbelianElement> gens) const
    {
        const std::size_t n = moduli_.size();
        if (n == 0) {
            return 1;
        }
        IntMatrix rows;
        rows.reserve(gens.size() + n);
        for (const auto& g : gens) {
            std::vector<BigInt> row(n);
            for (std::size_t i = 0; i < n; ++i) {
                row[i] = big(g[i]);
            }
            rows.push_back(std::move(row));
        }
        for (std::size_t i = 0; i < n; ++i) {
            std::vector<BigInt> row(n, BigInt(0));
            row[i] = big(moduli_[i]);
            rows.push_back(std::move(row));
        }
        BigInt cokernel = 1;
        for (const auto& d : invariant_factors(std::move(rows), n)) {
            cokernel *= d;
        }
        return order() / cokernel;
    }

    bool generated_by(std::span<const AbelianElement> gens) const { return subgroup_order(gens) == order(); }

    friend bool operator==(const FiniteAbelianGroup&, const FiniteAbelianGroup&) = default;

private:
    std::vector<std::int64_t> moduli_;
};

/// 0-based one-line notation; p[x] is the image of x.
using Permutation = std::vector<std::uint32_t>;

/// Cycle length -> number of cycles of that length.
using CycleTypeMap = std::map<std::int64_t, std::uint64_t>;

namespace perm {

inline Permutation identity(std::size_t n)
{
    Permutation p(n);
    std::iota(p.begin(), p.end(), 0u);
    return p;
}

/// Right action: first `a`, then `b`.
inline Permutation compose(const Permutation& a, const Permutation& b)
{
    Permutation out(a.size());
    for (std::size_t x = 0; x < a.size(); ++x) {
        out[x] = b[a[x]];
    }
    return out;
}

inline Permutation inverse(const Permutation& a)
{
    Permutation out(a.size());
    for (std::size_t x = 0; x < a.size(); ++x) {
        out[a[x]] = static_cast<std::uint32_t>(x);
    }
    return out;
}

inline bool is_identity(const Permutation& a)
{
    for (std::size_t x = 0; x < a.size(); ++x) {
        if (a[x] != x) {
            return false;
        }
    }
    return true;
}

inline bool is_bijection(const Permutation& a)
{
    std::vector<bool> seen(a.size(), false);
    for (auto y : a) {
        if (y >= a.size() || seen[y]) {
            return false;
        }
        seen[y] = true;
    }
    return true;
}

/// [a, b] = a b a⁻¹ b⁻¹.
inline Permutation commutator(const Permutation& a, const Permutation& b)
{
    return compose(compose(compose(a, b), inverse(a)), inverse(b));
}

inline CycleTypeMap cycle_type(const Permutation& a)
{
    CycleTypeMap out;
    std::vector<bool> seen(a.size(), false);
    for (std::size_t x = 0; x < a.size(); ++x) {
        if (seen[x]) {
            continue;
        }
        std::int64_t len = 0;
        for (std::size_t y = x; !seen[y]; y = a[y]) {
            seen[y] = true;
            ++len;
        }
        ++out[len];
    }
    return out;
}

inline std::int64_t order(const Permutation& a)
{
    std::int64_t l = 1;
    for (const auto& [len, count] : cycle_type(a)) {
        l = lcm_checked(l, len);
    }
    return l;
}

/// Whether the group generated by `gens` acts transitively on the points.
inline bool transitive(std::span<const Permutation> gens, std::size_t degree)
{
    if (degree == 0) {
        return false;
    }
    std::vector<bool> seen(degree, false);
    std::vector<std::uint32_t> stack {0};
    seen[0] = true;
    std::size_t reached = 1;
    while (!stack.empty()) {
        auto x = stack.back();
        stack.pop_back();
        for (const auto& g : gens) {
            auto y = g[x];
            if (!seen[y]) {
                seen[y] = true;
                ++reached;
                stack.push_back(y);
            }
        }
    }
    return reached == degree;
}

} // namespace perm

} // namespace fgroup
