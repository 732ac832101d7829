#pragma once

#include <algorithm>
#include <cstdint>
#include <functional>
#include <vector>

#include "fgroup/induced.hpp"

namespace fgroup {

/// Visits every hom Δ → target (or every surjective one) in lexicographic order
/// of flattened image tuples. The visitor returns false to stop early.
inline void for_each_abelian_hom(const Signature& source, const FiniteAbelianGroup& target, bool surjective_only,
                                 const std::function<bool(const AbelianHom&)>& visit, const Limits& limits = {})
{
    const BigInt order = target.order();
    if (order > limits.abelian_target_order) {
        fail(ErrorCode::BoundExceeded, "target order " + order.get_str() + " exceeds "
                                           + std::to_string(limits.abelian_target_order));
    }
    const auto shape = explicit_shape(source, limits);
    const auto n = order.get_ui();
    std::vector<AbelianElement> elements;
    elements.reserve(n);
    for (std::uint64_t i = 0; i < n; ++i) {
        elements.push_back(target.decode(i));
    }
    const std::size_t total = shape.generator_count();
    const std::size_t first_torsion = 2 * shape.g;
    const std::size_t first_delta = 2 * shape.g + shape.r;

    // δ_ℓ ranges over elements killed by n_ℓ.
    std::vector<std::vector<std::size_t>> candidates(total);
    for (std::size_t pos = 0; pos < total; ++pos) {
        for (std::size_t e = 0; e < n; ++e) {
            if (pos < first_delta
                || FiniteAbelianGroup::is_zero(target.scale(elements[e], shape.periods[pos - first_delta]))) {
                candidates[pos].push_back(e);
            }
        }
    }
    const bool determined = total > first_torsion;
    const std::size_t free_count = determined ? total - 1 : total;

    std::vector<std::size_t> choice(total, 0);
    std::vector<AbelianElement> sums(total + 1, target.zero());
    std::uint64_t produced = 0;
    bool stop = false;

    auto emit = [&]() {
        std::vector<AbelianElement> flat(total);
        for (std::size_t pos = 0; pos < total; ++pos) {
            flat[pos] = elements[choice[pos]];
        }
        if (surjective_only && !target.generated_by(flat)) {
            return;
        }
        if (++produced > limits.max_results) {
            fail(ErrorCode::BoundExceeded, "more than " + std::to_string(limits.max_results) + " homs");
        }
        AbelianHom h {source, target, {}};
        auto it = flat.begin();
        h.images.alpha.assign(it, it + static_cast<std::ptrdiff_t>(shape.g));
        it += static_cast<std::ptrdiff_t>(shape.g);
        h.images.beta.assign(it, it + static_cast<std::ptrdiff_t>(shape.g));
        it += static_cast<std::ptrdiff_t>(shape.g);
        h.images.gamma.assign(it, it + static_cast<std::ptrdiff_t>(shape.r));
        it += static_cast<std::ptrdiff_t>(shape.r);
        h.images.delta.assign(it, flat.end());
        stop = !visit(h);
    };

    std::function<void(std::size_t)> descend = [&](std::size_t pos) {
        if (stop) {
            return;
        }
        if (pos == free_count) {
            if (determined) {
                auto last = target.neg(sums[pos]);
                auto idx = target.encode(last);
                const auto& c = candidates[pos];
                if (!std::binary_search(c.begin(), c.end(), static_cast<std::size_t>(idx))) {
                    return;
                }
                choice[pos] = static_cast<std::size_t>(idx);
            }
            emit();
            return;
        }
        for (auto e : candidates[pos]) {
            choice[pos] = e;
            sums[pos + 1] = pos >= first_torsion ? target.add(sums[pos], elements[e]) : sums[pos];
            descend(pos + 1);
            if (stop) {
                return;
            }
        }
    };
    descend(0);
}

inline std::vector<AbelianHom> enumerate_abelian_homs(const Signature& source, const FiniteAbelianGroup& target,
                                                      bool surjective_only, const Limits& limits = {})
{
    std::vector<AbelianHom> out;
    for_each_abelian_hom(
        source, target, surjective_only,
        [&](const AbelianHom& h) {
            out.push_back(h);
            return true;
        },
        limits);
    return out;
}

/// Transitive permutation representations of the given degree, by backtracking
/// with period-order pruning; the last torsion generator is forced by the long relation.
inline void for_each_perm_hom(const Signature& source, std::size_t degree,
                              const std::function<bool(const PermHom&)>& visit, const Limits& limits = {})
{
    if (degree < 1) {
        fail(ErrorCode::DomainError, "degree must be positive");
    }
    if (degree > limits.perm_degree) {
        fail(ErrorCode::BoundExceeded, "degree " + std::to_string(degree) + " exceeds "
                                           + std::to_string(limits.perm_degree));
    }
    const auto shape = explicit_shape(source, limits);
    const std::size_t total = shape.generator_count();
    if (degree == 1) {
        // S_1 is trivial: the one hom needs no search
        PermHom h {source, 1, {}};
        h.images.alpha.assign(shape.g, perm::identity(1));
        h.images.beta.assign(shape.g, perm::identity(1));
        h.images.gamma.assign(shape.r, perm::identity(1));
        h.images.delta.assign(shape.periods.size(), perm::identity(1));
        visit(h);
        return;
    }
    if (total > limits.perm_generators) {
        fail(ErrorCode::BoundExceeded, std::to_string(total) + " generators exceed "
                                           + std::to_string(limits.perm_generators));
    }

    std::vector<Permutation> all;
    for (auto p = perm::identity(degree);;) {
        all.push_back(p);
        if (!std::next_permutation(p.begin(), p.end())) {
            break;
        }
    }
    std::vector<std::int64_t> orders;
    orders.reserve(all.size());
    for (const auto& p : all) {
        orders.push_back(perm::order(p));
    }
    const std::size_t first_torsion = 2 * shape.g;
    const std::size_t first_delta = first_torsion + shape.r;
    auto admissible = [&](std::size_t pos, std::int64_t ord) {
        return pos < first_delta || shape.periods[pos - first_delta] % ord == 0;
    };
    std::vector<std::vector<std::size_t>> candidates(total);
    for (std::size_t pos = 0; pos < total; ++pos) {
        for (std::size_t i = 0; i < all.size(); ++i) {
            if (admissible(pos, orders[i])) {
                candidates[pos].push_back(i);
            }
        }
    }
    const bool determined = total > first_torsion;
    const std::size_t free_count = determined ? total - 1 : total;

    std::vector<Permutation> chosen(total);
    std::vector<Permutation> words(total + 1, perm::identity(degree));
    std::uint64_t produced = 0;
    bool stop = false;

    auto emit = [&]() {
        if (!perm::transitive(chosen, degree)) {
            return;
        }
        if (++produced > limits.max_results) {
            fail(ErrorCode::BoundExceeded, "more than " + std::to_string(limits.max_results) + " homs");
        }
        PermHom h {source, degree, {}};
        auto it = chosen.begin();
        auto take = [&](std::vector<Permutation>& dst, std::size_t count) {
            dst.assign(it, it + static_cast<std::ptrdiff_t>(count));
            it += static_cast<std::ptrdiff_t>(count);
        };
        take(h.images.alpha, shape.g);
        take(h.images.beta, shape.g);
        take(h.images.gamma, shape.r);
        take(h.images.delta, shape.periods.size());
        stop = !visit(h);
    };

    // words[pos] is the long-relation prefix once all α, β are fixed.
    auto commutator_word = [&]() {
        auto w = perm::identity(degree);
        for (std::size_t i = 0; i < shape.g; ++i) {
            w = perm::compose(w, perm::commutator(chosen[i], chosen[shape.g + i]));
        }
        return w;
    };

    std::function<void(std::size_t)> descend = [&](std::size_t pos) {
        if (stop) {
            return;
        }
        if (pos == first_torsion && pos > 0) {
            words[pos] = commutator_word();
        }
        if (pos == free_count) {
            if (determined) {
                auto last = perm::inverse(words[pos]);
                if (!admissible(pos, perm::order(last))) {
                    return;
                }
                chosen[pos] = std::move(last);
            } else if (!perm::is_identity(words[pos])) {
                return;
            }
            emit();
            return;
        }
        for (auto i : candidates[pos]) {
            chosen[pos] = all[i];
            if (pos >= first_torsion) {
                words[pos + 1] = perm::compose(words[pos], all[i]);
            }
            descend(pos + 1);
            if (stop) {
                return;
            }
        }
    };
    descend(0);
}

inline std::vector<PermHom> enumerate_perm_homs(const Signature& source, std::size_t degree,
                                                const Limits& limits = {})
{
    std::vector<PermHom> out;
    for_each_perm_hom(
        source, degree,
        [&](const PermHom& h) {
            out.push_back(h);
            return true;
        },
        limits);
    return out;
}

} // namespace fgroup
