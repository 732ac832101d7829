#pragma once

#include <cstdint>
#include <functional>
#include <string_view>
#include <vector>

#include "fgroup/induced.hpp"

namespace fgroup {

/// Explicit hom onto Δ^ab_tor: δ_ℓ ↦ its class, γ_j ↦ 0 for j < r, γ_r ↦ −Σδ, α, β ↦ 0.
inline AbelianHom canonical_torsion_hom(const Signature& sig, const Limits& limits = {})
{
    const auto shape = explicit_shape(sig, limits);
    const std::size_t k = shape.periods.size();
    AbelianHom h {sig, {}, {}};
    std::vector<std::int64_t> moduli;
    std::vector<AbelianElement> delta(k);
    if (shape.r >= 1) {
        moduli = shape.periods;
        for (std::size_t l = 0; l < k; ++l) {
            delta[l] = AbelianElement(k, 0);
            delta[l][l] = 1;
        }
    } else {
        if (k > limits.smith_periods) {
            fail(ErrorCode::BoundExceeded, "Smith normal form limited to " + std::to_string(limits.smith_periods)
                                               + " periods");
        }
        auto snf = smith_normal_form(torsion_relation_matrix(sig, limits.smith_periods), k);
        std::vector<std::size_t> kept;
        for (std::size_t t = 0; t < snf.diagonal.size(); ++t) {
            if (snf.diagonal[t] > 1) {
                kept.push_back(t);
                moduli.push_back(to_i64(snf.diagonal[t]));
            }
        }
        for (std::size_t l = 0; l < k; ++l) {
            for (std::size_t c = 0; c < kept.size(); ++c) {
                BigInt v;
                mpz_fdiv_r(v.get_mpz_t(), snf.column_transform[l][kept[c]].get_mpz_t(),
                           snf.diagonal[kept[c]].get_mpz_t());
                delta[l].push_back(v.get_si());
            }
        }
    }
    h.target = FiniteAbelianGroup(std::move(moduli));
    h.images.alpha.assign(shape.g, h.target.zero());
    h.images.beta.assign(shape.g, h.target.zero());
    h.images.gamma.assign(shape.r, h.target.zero());
    if (shape.r >= 1) {
        auto sum = h.target.zero();
        for (const auto& d : delta) {
            h.target.add_into(sum, d);
        }
        h.images.gamma.back() = h.target.neg(sum);
    }
    h.images.delta = std::move(delta);
    return h;
}

/// The trivial cover Δ ⊆ Δ.
inline InducedSignatureResult identity_cover(const Signature& sig)
{
    std::vector<CycleType> cusp_cycles(sig.small_cusps(), CycleType {{1, BigInt(1)}});
    std::vector<PeriodCycles> period_cycles;
    for (const auto& run : sig.runs()) {
        period_cycles.push_back({run.value, run.count, {{1, BigInt(1)}}});
    }
    return detail::assemble(sig, BigInt(1), std::move(cusp_cycles), std::move(period_cycles));
}

/// Kernel of Δ ↠ Δ^ab_tor, from element orders of the canonical hom.
inline InducedSignatureResult torsion_kernel_signature(const Signature& sig)
{
    std::vector<CycleType> cusp_cycles;
    std::vector<PeriodCycles> period_cycles;
    BigInt order;
    if (sgn(sig.cusps()) > 0) {
        if (!sig.has_periods()) {
            fail(ErrorCode::IdentityCover, "no torsion: the kernel is the whole group");
        }
        order = sig.period_product();
        const std::size_t r = sig.small_cusps();
        cusp_cycles.assign(r - 1, detail::translation_cycles(1, order));
        cusp_cycles.push_back(detail::translation_cycles(sig.period_lcm(), order));
        for (const auto& run : sig.runs()) {
            period_cycles.push_back({run.value, run.count, detail::translation_cycles(run.value, order)});
        }
    } else {
        order = torsion_subgroup_order(sig);
        if (order == 1) {
            fail(ErrorCode::IdentityCover, "trivial torsion quotient: the kernel is the whole group");
        }
        auto runs = sig.runs();
        for (std::size_t i = 0; i < runs.size(); ++i) {
            period_cycles.push_back({runs[i].value, runs[i].count,
                                     detail::translation_cycles(delta_order_in_abelianization(sig, i), order)});
        }
    }
    return detail::assemble(sig, std::move(order), std::move(cusp_cycles), std::move(period_cycles));
}

/// Δ^(1) for (0,1;{n_i}): cusps ∏n/lcm, index ∏n, genus ½(−χ·∏n + 2 − cusps).
inline InducedSignatureResult commutator_signature_01(const Signature& sig)
{
    if (!sig.shape_is(0, 1)) {
        fail(ErrorCode::WrongShape, "expected (g,r) = (0,1), got " + sig.str());
    }
    const BigInt product = sig.period_product();
    const std::int64_t l = sig.period_lcm();
    const BigInt cusps = product / big(l);
    Rational twice_genus = -euler_characteristic(sig) * Rational(product) + Rational(BigInt(2 - cusps));
    if (!twice_genus.is_integer() || twice_genus.sign() < 0 || twice_genus.numerator() % 2 != 0) {
        fail(ErrorCode::NonIntegralGenus, "commutator genus formula gives 2g = " + twice_genus.str());
    }
    std::vector<PeriodCycles> period_cycles;
    for (const auto& run : sig.runs()) {
        period_cycles.push_back({run.value, run.count, detail::translation_cycles(run.value, product)});
    }
    InducedSignatureResult out {Signature(twice_genus.numerator() / 2, cusps, {}), product,
                                {detail::translation_cycles(l, product)}, std::move(period_cycles)};
    return out;
}

enum class TowerStatus { Continue, Perfect, TorsionFreeReached, InfiniteAbelianization };

constexpr std::string_view tower_status_name(TowerStatus s) noexcept
{
    switch (s) {
    case TowerStatus::Continue: return "Continue";
    case TowerStatus::Perfect: return "Perfect";
    case TowerStatus::TorsionFreeReached: return "TorsionFreeReached";
    case TowerStatus::InfiniteAbelianization: return "InfiniteAbelianization";
    }
    return "?";
}

struct TowerStep {
    Signature signature;
    BigInt quotient_order;
    TowerStatus status;
    InducedSignatureResult provenance;
};

/// Δ = Δ^(0) ⊇ Δ^(1) ⊇ ... while the derived subgroups stay open.
struct Tower {
    Signature base;
    TowerStatus base_status;
    std::vector<TowerStep> steps;

    TowerStatus status() const { return steps.empty() ? base_status : steps.back().status; }
    const Signature& last() const { return steps.empty() ? base : steps.back().signature; }
};

/// Whether the derived series can continue from this stage by a finite-index step.
inline TowerStatus stage_status(const Signature& sig)
{
    if (names_trivial_group(sig) || (sig.cusps() == 0 && !sig.has_periods())) {
        return TowerStatus::TorsionFreeReached;
    }
    if (is_perfect(sig)) {
        return TowerStatus::Perfect;
    }
    if (abelian_free_rank(sig) > 0) {
        return TowerStatus::InfiniteAbelianization;
    }
    return TowerStatus::Continue;
}

inline Tower derived_tower(const Signature& sig, std::size_t max_depth = Limits {}.tower_depth)
{
    Tower t {sig, stage_status(sig), {}};
    auto status = t.base_status;
    const Signature* current = &t.base;
    for (std::size_t depth = 0; depth < max_depth && status == TowerStatus::Continue; ++depth) {
        auto step = current->shape_is(0, 1) ? commutator_signature_01(*current) : torsion_kernel_signature(*current);
        status = stage_status(step.subgroup);
        t.steps.push_back({step.subgroup, step.index, status, std::move(step)});
        current = &t.steps.back().signature;
    }
    return t;
}

enum class Tri { False, True, Unknown };

constexpr std::string_view tri_name(Tri t) noexcept
{
    return t == Tri::True ? "true" : (t == Tri::False ? "false" : "Unknown");
}

/// Whether Δ^(m) is perfect, decided from the derived tower where possible.
inline Tri m_derived_perfect(const Signature& sig, std::size_t m)
{
    const auto tower = derived_tower(sig, m);
    std::vector<std::pair<const Signature*, TowerStatus>> stages {{&tower.base, tower.base_status}};
    for (const auto& s : tower.steps) {
        stages.emplace_back(&s.signature, s.status);
    }
    for (const auto& [stage, status] : stages) {
        if (status == TowerStatus::Perfect) {
            return Tri::True;
        }
    }
    const std::size_t last = stages.size() - 1;
    const auto& [terminal, status] = stages.back();
    if (status == TowerStatus::TorsionFreeReached) {
        if (names_trivial_group(*terminal)) {
            return Tri::True;
        }
        if (*terminal == Signature::of(1, 0, {})) {
            return m >= last + 1 ? Tri::True : Tri::False;
        }
        return Tri::False;
    }
    if (last >= m) {
        return Tri::False;
    }
    // The tower stopped early with an infinite abelianization.
    if (*terminal == Signature::of(0, 2, {})) {
        return Tri::True;
    }
    if (is_hyperbolic(sig) && !is_perfect(sig)) {
        return Tri::False;
    }
    return Tri::Unknown;
}

/// Tower fingerprint of S_4: quotient orders 2, 3, 4 and a trivial terminus.
inline bool has_s4_fingerprint(const Tower& t)
{
    if (t.steps.size() != 3 || t.status() != TowerStatus::TorsionFreeReached || !names_trivial_group(t.last())) {
        return false;
    }
    return t.steps[0].quotient_order == 2 && t.steps[1].quotient_order == 3 && t.steps[2].quotient_order == 4;
}

/// All (0,0;{...}) with period product <= bound whose tower has the S_4 fingerprint.
inline std::vector<Signature> s4_uniqueness_scan(std::int64_t period_product_bound)
{
    std::vector<Signature> out;
    std::vector<std::int64_t> periods;
    std::function<void(std::int64_t, std::int64_t)> extend = [&](std::int64_t min_period, std::int64_t product) {
        if (!periods.empty()) {
            auto sig = Signature::of(0, 0, periods);
            if (has_s4_fingerprint(derived_tower(sig, 3))) {
                out.push_back(sig);
            }
        }
        for (std::int64_t n = min_period; product * n <= period_product_bound; ++n) {
            periods.push_back(n);
            extend(n, product * n);
            periods.pop_back();
        }
    };
    extend(2, 1);
    return out;
}

} // namespace fgroup
