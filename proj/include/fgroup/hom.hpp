#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "fgroup/core.hpp"
#include "fgroup/groups.hpp"

namespace fgroup {

enum class GeneratorKind { Alpha, Beta, Gamma, Delta };

constexpr std::string_view generator_kind_name(GeneratorKind k) noexcept
{
    switch (k) {
    case GeneratorKind::Alpha: return "alpha";
    case GeneratorKind::Beta: return "beta";
    case GeneratorKind::Gamma: return "gamma";
    case GeneratorKind::Delta: return "delta";
    }
    return "?";
}

/// α_i, β_i, γ_j or δ_ℓ; index is 1-based.
struct GeneratorLabel {
    GeneratorKind kind;
    std::size_t index;

    std::string str() const { return std::string(generator_kind_name(kind)) + std::to_string(index); }
    friend bool operator==(const GeneratorLabel&, const GeneratorLabel&) = default;
};

/// The image of every presentation generator. δ's follow the sorted period order.
template <class T>
struct GeneratorImages {
    std::vector<T> alpha;
    std::vector<T> beta;
    std::vector<T> gamma;
    std::vector<T> delta;

    const std::vector<T>& of(GeneratorKind k) const
    {
        switch (k) {
        case GeneratorKind::Alpha: return alpha;
        case GeneratorKind::Beta: return beta;
        case GeneratorKind::Gamma: return gamma;
        case GeneratorKind::Delta: break;
        }
        return delta;
    }

    const T& at(GeneratorLabel label) const
    {
        const auto& v = of(label.kind);
        if (label.index < 1 || label.index > v.size()) {
            fail(ErrorCode::MalformedHom, "no generator " + label.str());
        }
        return v[label.index - 1];
    }

    /// α_1..α_g, β_1..β_g, γ_1..γ_r, δ_1..δ_k.
    std::vector<T> flat() const
    {
        std::vector<T> out;
        out.reserve(alpha.size() + beta.size() + gamma.size() + delta.size());
        for (auto k : {GeneratorKind::Alpha, GeneratorKind::Beta, GeneratorKind::Gamma, GeneratorKind::Delta}) {
            const auto& v = of(k);
            out.insert(out.end(), v.begin(), v.end());
        }
        return out;
    }

    friend bool operator==(const GeneratorImages&, const GeneratorImages&) = default;
};

/// Generator counts of a signature small enough to write homs for explicitly.
struct ExplicitShape {
    std::size_t g;
    std::size_t r;
    std::vector<std::int64_t> periods;

    std::size_t generator_count() const { return 2 * g + r + periods.size(); }
};

inline ExplicitShape explicit_shape(const Signature& sig, const Limits& limits = {})
{
    ExplicitShape s {sig.small_genus(limits.explicit_generators), sig.small_cusps(limits.explicit_generators),
                     sig.periods(limits.explicit_generators)};
    if (s.generator_count() > limits.explicit_generators) {
        fail(ErrorCode::BoundExceeded, "too many generators for an explicit hom");
    }
    return s;
}

struct AbelianHom {
    Signature source;
    FiniteAbelianGroup target;
    GeneratorImages<AbelianElement> images;

    friend bool operator==(const AbelianHom&, const AbelianHom&) = default;
};

struct PermHom {
    Signature source;
    std::size_t degree = 1;
    GeneratorImages<Permutation> images;

    friend bool operator==(const PermHom&, const PermHom&) = default;
};

namespace detail {

template <class T>
void check_counts(const GeneratorImages<T>& im, const ExplicitShape& s)
{
    if (im.alpha.size() != s.g || im.beta.size() != s.g || im.gamma.size() != s.r
        || im.delta.size() != s.periods.size()) {
        fail(ErrorCode::MalformedHom, "generator images do not match the source signature");
    }
}

inline void check_structure(const AbelianHom& h, const ExplicitShape& s)
{
    check_counts(h.images, s);
    for (const auto& x : h.images.flat()) {
        if (!h.target.contains(x)) {
            fail(ErrorCode::MalformedHom, "image is not a reduced element of the target");
        }
    }
}

inline void check_structure(const PermHom& h, const ExplicitShape& s)
{
    if (h.degree < 1) {
        fail(ErrorCode::MalformedHom, "degree must be positive");
    }
    check_counts(h.images, s);
    for (const auto& p : h.images.flat()) {
        if (p.size() != h.degree || !perm::is_bijection(p)) {
            fail(ErrorCode::MalformedHom, "image is not a permutation of the stated degree");
        }
    }
}

} // namespace detail

/// Σγ + Σδ = 0 and n_ℓ·δ_ℓ = 0 in the target.
inline bool verify_abelian_hom(const AbelianHom& h, const Limits& limits = {})
{
    auto shape = explicit_shape(h.source, limits);
    detail::check_structure(h, shape);
    auto sum = h.target.zero();
    for (const auto& x : h.images.gamma) {
        h.target.add_into(sum, x);
    }
    for (std::size_t l = 0; l < shape.periods.size(); ++l) {
        const auto& x = h.images.delta[l];
        h.target.add_into(sum, x);
        if (!FiniteAbelianGroup::is_zero(h.target.scale(x, shape.periods[l]))) {
            return false;
        }
    }
    return FiniteAbelianGroup::is_zero(sum);
}

/// ∏[α_i,β_i]·∏γ_j·∏δ_ℓ under the right action.
inline Permutation long_relation(const PermHom& h)
{
    auto w = perm::identity(h.degree);
    for (std::size_t i = 0; i < h.images.alpha.size(); ++i) {
        w = perm::compose(w, perm::commutator(h.images.alpha[i], h.images.beta[i]));
    }
    for (const auto& x : h.images.gamma) {
        w = perm::compose(w, x);
    }
    for (const auto& x : h.images.delta) {
        w = perm::compose(w, x);
    }
    return w;
}

/// Long relation, period relations and transitivity.
inline bool verify_perm_hom(const PermHom& h, const Limits& limits = {})
{
    auto shape = explicit_shape(h.source, limits);
    detail::check_structure(h, shape);
    if (!perm::is_identity(long_relation(h))) {
        return false;
    }
    for (std::size_t l = 0; l < shape.periods.size(); ++l) {
        if (shape.periods[l] % perm::order(h.images.delta[l]) != 0) {
            return false;
        }
    }
    auto all = h.images.flat();
    return perm::transitive(all, h.degree);
}

} // namespace fgroup
