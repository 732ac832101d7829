#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include "fgroup/tower.hpp"

namespace fgroup {

struct TorsionKernelStep {
    friend bool operator==(const TorsionKernelStep&, const TorsionKernelStep&) = default;
};
/// Kernel of Δ → (Δ_tf)^ab / n.
struct ModNStep {
    std::int64_t n;
    friend bool operator==(const ModNStep&, const ModNStep&) = default;
};
/// Kernel of ψ: Δ → Z/ℓ with δ_{i1} ↦ 1, δ_{i2} ↦ −1, every other generator ↦ 0.
struct PrimeCharacterStep {
    std::int64_t prime;
    std::size_t i1; ///< 1-based, sorted period order
    std::size_t i2;
    friend bool operator==(const PrimeCharacterStep&, const PrimeCharacterStep&) = default;
};
/// Kernel of an explicit hom to Z/2 on a torsion-free stage.
struct CuspDoublingStep {
    AbelianHom hom;
    friend bool operator==(const CuspDoublingStep&, const CuspDoublingStep&) = default;
};

using CoverKind = std::variant<TorsionKernelStep, ModNStep, PrimeCharacterStep, CuspDoublingStep>;

inline std::string cover_kind_name(const CoverKind& k)
{
    struct {
        std::string operator()(const TorsionKernelStep&) const { return "TorsionKernel"; }
        std::string operator()(const ModNStep& s) const { return "ModN(" + std::to_string(s.n) + ")"; }
        std::string operator()(const PrimeCharacterStep& s) const
        {
            return "PrimeCharacter(" + std::to_string(s.prime) + "," + std::to_string(s.i1) + ","
                + std::to_string(s.i2) + ")";
        }
        std::string operator()(const CuspDoublingStep&) const { return "CuspDoubling"; }
    } visitor;
    return std::visit(visitor, k);
}

struct CoverStep {
    CoverKind kind;
    InducedSignatureResult result;
};

/// Δ = H_0 ⊇ H_1 ⊇ ... ⊇ H_s, each normal in the previous with abelian quotient.
struct CoverChain {
    Signature base;
    std::vector<CoverStep> steps;
    BigInt total_index {1};
    int quotient_derived_length = 0;

    const Signature& final_signature() const { return steps.empty() ? base : steps.back().result.subgroup; }
};

/// (Δ_tf)^ab / n: α_i ↦ e_i, β_i ↦ e_{g+i}, γ, δ ↦ 0.
inline AbelianHom mod_n_hom(const Signature& sig, std::int64_t n, const Limits& limits = {})
{
    const auto shape = explicit_shape(sig, limits);
    AbelianHom h {sig, FiniteAbelianGroup(std::vector<std::int64_t>(2 * shape.g, n)), {}};
    for (std::size_t i = 0; i < 2 * shape.g; ++i) {
        auto e = h.target.zero();
        e[i] = 1;
        (i < shape.g ? h.images.alpha : h.images.beta).push_back(std::move(e));
    }
    h.images.gamma.assign(shape.r, h.target.zero());
    h.images.delta.assign(shape.periods.size(), h.target.zero());
    return h;
}

inline AbelianHom prime_character_hom(const Signature& sig, const PrimeCharacterStep& step,
                                      const Limits& limits = {})
{
    const auto shape = explicit_shape(sig, limits);
    const auto k = shape.periods.size();
    if (step.prime < 2 || step.i1 < 1 || step.i1 >= step.i2 || step.i2 > k
        || shape.periods[step.i1 - 1] % step.prime != 0 || shape.periods[step.i2 - 1] % step.prime != 0) {
        fail(ErrorCode::MalformedHom, "prime character parameters do not fit " + sig.str());
    }
    AbelianHom h {sig, FiniteAbelianGroup({step.prime}), {}};
    h.images.alpha.assign(shape.g, {0});
    h.images.beta.assign(shape.g, {0});
    h.images.gamma.assign(shape.r, {0});
    h.images.delta.assign(k, {0});
    h.images.delta[step.i1 - 1] = {1};
    h.images.delta[step.i2 - 1] = {step.prime - 1};
    return h;
}

/// Smallest prime dividing some gcd(n_i1, n_i2), then the least pair.
inline std::optional<PrimeCharacterStep> choose_prime_character(const Signature& sig)
{
    const auto n = sig.periods();
    std::int64_t bound = 1;
    for (auto v : n) {
        bound = std::max(bound, v);
    }
    for (std::int64_t p = 2; p <= bound; ++p) {
        bool prime = true;
        for (std::int64_t d = 2; d * d <= p; ++d) {
            prime = prime && p % d != 0;
        }
        if (!prime) {
            continue;
        }
        for (std::size_t i = 0; i < n.size(); ++i) {
            for (std::size_t j = i + 1; j < n.size(); ++j) {
                if (n[i] % p == 0 && n[j] % p == 0) {
                    return PrimeCharacterStep {p, i + 1, j + 1};
                }
            }
        }
    }
    return std::nullopt;
}

/// Torsion kernel, or the identity when there is no torsion to kill.
inline InducedSignatureResult torsion_kernel_or_identity(const Signature& sig)
{
    return sig.has_periods() ? torsion_kernel_signature(sig) : identity_cover(sig);
}

/// Recomputes a step's cover from its kind and source signature.
inline InducedSignatureResult apply_cover(const CoverKind& kind, const Signature& source, const Limits& limits = {})
{
    struct {
        const Signature& source;
        const Limits& limits;
        InducedSignatureResult operator()(const TorsionKernelStep&) const
        {
            return torsion_kernel_or_identity(source);
        }
        InducedSignatureResult operator()(const ModNStep& s) const
        {
            return induced_signature_abelian(source, mod_n_hom(source, s.n, limits), limits);
        }
        InducedSignatureResult operator()(const PrimeCharacterStep& s) const
        {
            return induced_signature_abelian(source, prime_character_hom(source, s, limits), limits);
        }
        InducedSignatureResult operator()(const CuspDoublingStep& s) const
        {
            if (!(s.hom.source == source)) {
                fail(ErrorCode::MalformedHom, "cusp doubling hom is attached to another signature");
            }
            return induced_signature_abelian(source, s.hom, limits);
        }
    } visitor {source, limits};
    return std::visit(visitor, kind);
}

namespace detail {

inline void push_step(CoverChain& chain, CoverKind kind, const Limits& limits = {})
{
    auto result = apply_cover(kind, chain.final_signature(), limits);
    chain.total_index *= result.index;
    chain.steps.push_back({std::move(kind), std::move(result)});
    chain.quotient_derived_length = static_cast<int>(chain.steps.size());
}

/// Internal consistency check; the message is only built on failure.
template <class Message>
void require(bool condition, Message&& message)
{
    if (!condition) {
        throw std::logic_error(message());
    }
}

/// One or two torsion kernels on a (0,0) stage, as its derived stage requires.
inline void kill_torsion_00(CoverChain& chain)
{
    push_step(chain, TorsionKernelStep {});
    if (!is_torsion_free(chain.final_signature())) {
        require(abelian_period_condition(chain.final_signature()),
                [&] { return "derived stage of " + chain.base.str() + " violates the abelian-period condition"; });
        push_step(chain, TorsionKernelStep {});
    }
}

} // namespace detail

/// A torsion-free normal cover with solvable quotient of derived length <= 3.
inline CoverChain fn_chain(const Signature& sig, const Limits& limits = {})
{
    if (names_trivial_group(sig)) {
        fail(ErrorCode::TrivialInput, sig.str() + " is the trivial group");
    }
    if (is_perfect(sig)) {
        fail(ErrorCode::PerfectInput, sig.str() + " is perfect: it has no solvable quotient");
    }
    CoverChain chain {sig, {}, BigInt(1), 0};
    if (sgn(sig.cusps()) > 0 || abelian_period_condition(sig) || is_bad_cyclic(sig)) {
        detail::push_step(chain, TorsionKernelStep {}, limits);
    } else if (sgn(sig.genus()) > 0) {
        detail::push_step(chain, ModNStep {2}, limits);
        detail::require(abelian_period_condition(chain.final_signature()),
                        [&] { return "mod-2 cover of " + sig.str() + " violates the abelian-period condition"; });
        detail::push_step(chain, TorsionKernelStep {}, limits);
    } else {
        auto derived = torsion_kernel_signature(sig).subgroup;
        if (abelian_period_condition(derived)) {
            detail::kill_torsion_00(chain);
        } else {
            auto step = choose_prime_character(sig);
            detail::require(step.has_value(),
                            [&] { return sig.str() + " is non-perfect but has no shared prime"; });
            detail::push_step(chain, *step, limits);
            detail::require(condition_star(chain.final_signature()),
                            [&] { return "prime character kernel of " + sig.str() + " violates condition (*)"; });
            if (abelian_period_condition(chain.final_signature())) {
                detail::push_step(chain, TorsionKernelStep {}, limits);
            } else {
                detail::kill_torsion_00(chain);
            }
        }
    }
    detail::require(is_torsion_free(chain.final_signature()),
                    [&] { return "chain for " + sig.str() + " ends with torsion: " + chain.final_signature().str(); });
    return chain;
}

struct CertifyReport {
    bool ok = true;
    std::vector<std::string> diagnostics;

    void flag(std::string message)
    {
        ok = false;
        diagnostics.push_back(std::move(message));
    }
};

/// Re-derives every step from its kind, and checks Riemann–Hurwitz, the index
/// product, final torsion-freeness and the declared derived length.
inline CertifyReport certify_chain(const CoverChain& chain, const Limits& limits = {})
{
    CertifyReport report;
    if (chain.steps.empty()) {
        report.flag("chain has no steps");
    }
    Signature current = chain.base;
    BigInt index = 1;
    bool cusp_layers = false;
    for (std::size_t s = 0; s < chain.steps.size(); ++s) {
        const auto& step = chain.steps[s];
        const std::string where = "step " + std::to_string(s + 1) + " (" + cover_kind_name(step.kind) + ")";
        cusp_layers = cusp_layers || std::holds_alternative<CuspDoublingStep>(step.kind);
        try {
            if (auto* d = std::get_if<CuspDoublingStep>(&step.kind); d && !verify_abelian_hom(d->hom, limits)) {
                report.flag(where + ": hom fails the relations");
            }
            if (!(apply_cover(step.kind, current, limits) == step.result)) {
                report.flag(where + ": recomputed cover differs from the recorded one");
            }
        } catch (const Error& e) {
            report.flag(where + ": " + e.what());
        }
        if (step.result.index < 1) {
            report.flag(where + ": index is not positive");
        } else if (euler_characteristic(step.result.subgroup)
                   != Rational(step.result.index) * euler_characteristic(current)) {
            report.flag(where + ": Riemann-Hurwitz fails");
        }
        index *= step.result.index;
        current = step.result.subgroup;
    }
    if (!is_torsion_free(current)) {
        report.flag("final signature " + current.str() + " retains torsion");
    }
    if (index != chain.total_index) {
        report.flag("total index " + chain.total_index.get_str() + " differs from the product " + index.get_str());
    }
    if (chain.quotient_derived_length != static_cast<int>(chain.steps.size())) {
        report.flag("declared derived length " + std::to_string(chain.quotient_derived_length)
                    + " differs from the number of layers");
    }
    if (!cusp_layers && (chain.quotient_derived_length < 1 || chain.quotient_derived_length > 3)) {
        report.flag("derived length outside {1,2,3}");
    }
    return report;
}

/// Z/2 hom on a torsion-free stage that raises the cusp count: γ_1, γ_2 ↦ 1
/// when r >= 3, otherwise α_1, β_1 ↦ 1 when g >= 1.
inline std::optional<AbelianHom> cusp_doubling_hom(const Signature& sig, const Limits& limits = {})
{
    const auto shape = explicit_shape(sig, limits);
    if (!shape.periods.empty() || shape.r < 1) {
        return std::nullopt;
    }
    AbelianHom h {sig, FiniteAbelianGroup({2}), {}};
    h.images.alpha.assign(shape.g, {0});
    h.images.beta.assign(shape.g, {0});
    h.images.gamma.assign(shape.r, {0});
    if (shape.r >= 3) {
        h.images.gamma[0] = {1};
        h.images.gamma[1] = {1};
    } else if (shape.g >= 1) {
        h.images.alpha[0] = {1};
        h.images.beta[0] = {1};
    } else {
        return std::nullopt;
    }
    return h;
}

/// A torsion-free cover with at least r0 cusps: a torsion kernel, then Z/2 layers.
inline CoverChain cusp_growth_chain(const Signature& sig, const BigInt& r0, const Limits& limits = {})
{
    if (sig.cusps() == 0) {
        fail(ErrorCode::NotAffine, sig.str() + " has no cusps");
    }
    if (is_perfect(sig)) {
        fail(ErrorCode::PerfectInput, sig.str() + " is perfect");
    }
    if (!is_hyperbolic(sig)) {
        fail(ErrorCode::DomainError, sig.str() + " is not hyperbolic");
    }
    if (r0 < 1) {
        fail(ErrorCode::DomainError, "target cusp count must be positive");
    }
    CoverChain chain {sig, {}, BigInt(1), 0};
    detail::push_step(chain, TorsionKernelStep {}, limits);
    while (chain.final_signature().cusps() < r0) {
        if (chain.total_index * 2 > big_u(limits.cover_index)) {
            fail(sig.shape_is(0, 1) ? ErrorCode::ZeroOneObstruction : ErrorCode::BoundExceeded,
                 "reaching " + r0.get_str() + " cusps needs index beyond " + std::to_string(limits.cover_index));
        }
        auto hom = cusp_doubling_hom(chain.final_signature(), limits);
        detail::require(hom.has_value(),
                        [&] { return "no cusp doubling available on " + chain.final_signature().str(); });
        auto before = chain.final_signature().cusps();
        detail::push_step(chain, CuspDoublingStep {std::move(*hom)}, limits);
        detail::require(chain.final_signature().cusps() > before,
                        [&] { return "cusp doubling did not increase cusps"; });
    }
    return chain;
}

/// Upper bound for the least derived length of a solvable quotient with torsion-free kernel.
inline int m_delta_upper_bound(const Signature& sig, const Limits& limits = {})
{
    if (!sig.has_periods() || names_trivial_group(sig)) {
        return 0;
    }
    if (is_perfect(sig)) {
        fail(ErrorCode::PerfectInput, sig.str() + " is perfect");
    }
    return fn_chain(sig, limits).quotient_derived_length;
}

} // namespace fgroup
