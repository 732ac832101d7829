#pragma once

#include <cstdint>
#include <numeric>
#include <span>
#include <vector>

#include "fgroup/bigint.hpp"

namespace fgroup {

struct GcdSubsetProducts {
    BigInt pairwise;     ///< ∏_{i<j} gcd(n_i, n_j)
    BigInt subset_gcds;  ///< ∏_{s=1}^{k-1} gcd of all s-subset products
    BigInt lcm;          ///< lcm(n_1, ..., n_k)
    BigInt cofactor_gcd; ///< gcd of all (k-1)-subset products
    BigInt product;      ///< ∏ n_i

    bool gcd_identity_holds() const { return pairwise == subset_gcds; }
    bool lcm_identity_holds() const { return lcm * cofactor_gcd == product; }
};

/// Both sides of the gcd-product identity by direct subset enumeration, plus
/// the data of lcm · gcd((k−1)-subset products) = ∏ n_i.
inline GcdSubsetProducts gcd_subset_products(std::span<const std::int64_t> n)
{
    if (n.empty()) {
        fail(ErrorCode::EmptyInput, "need at least one integer");
    }
    if (n.size() > 20) {
        fail(ErrorCode::BoundExceeded, "subset enumeration limited to 20 integers");
    }
    for (auto v : n) {
        if (v < 1) {
            fail(ErrorCode::InvalidPeriod, "entries must be positive");
        }
    }
    const std::size_t k = n.size();
    GcdSubsetProducts out {1, 1, 1, 0, 1};
    for (std::size_t i = 0; i < k; ++i) {
        out.product *= big(n[i]);
        out.lcm = lcm(out.lcm, big(n[i]));
        for (std::size_t j = i + 1; j < k; ++j) {
            out.pairwise *= big(std::gcd(n[i], n[j]));
        }
    }
    std::vector<BigInt> by_size(k + 1, BigInt(0));
    for (std::uint32_t mask = 1; mask < (1u << k); ++mask) {
        BigInt p = 1;
        for (std::size_t i = 0; i < k; ++i) {
            if (mask & (1u << i)) {
                p *= big(n[i]);
            }
        }
        auto s = static_cast<std::size_t>(__builtin_popcount(mask));
        by_size[s] = gcd(by_size[s], p);
    }
    for (std::size_t s = 1; s + 1 <= k; ++s) {
        out.subset_gcds *= by_size[s];
    }
    // The empty product for k = 1: the (k-1)-subsets are {∅}, product 1.
    out.cofactor_gcd = k == 1 ? BigInt(1) : by_size[k - 1];
    return out;
}

} // namespace fgroup
