#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "fgroup/hom.hpp"

namespace fgroup {

/// `count` cycles of length `length`.
struct CycleCount {
    std::int64_t length;
    BigInt count;

    friend bool operator==(const CycleCount&, const CycleCount&) = default;
};

/// Cycle structure of one generator's permutation, sorted by length.
using CycleType = std::vector<CycleCount>;

/// Cycle data shared by `generators` consecutive δ's of the same period.
struct PeriodCycles {
    std::int64_t period;
    std::uint64_t generators;
    CycleType cycles;

    friend bool operator==(const PeriodCycles&, const PeriodCycles&) = default;
};

struct InducedSignatureResult {
    Signature subgroup;
    BigInt index;
    std::vector<CycleType> cusp_cycles;     ///< one entry per γ_j
    std::vector<PeriodCycles> period_cycles; ///< δ's in order, equal neighbours merged

    friend bool operator==(const InducedSignatureResult&, const InducedSignatureResult&) = default;
};

/// The g with 2 − 2g − r − Σ(1 − 1/m) = index·χ.
inline BigInt riemann_hurwitz_genus(const Rational& chi_source, const BigInt& index, const BigInt& cusps,
                                    std::span<const PeriodRun> periods)
{
    if (index < 1) {
        fail(ErrorCode::DomainError, "index must be positive");
    }
    Rational two_g = Rational(BigInt(2 - cusps)) - Rational(index) * chi_source;
    for (const auto& run : periods) {
        if (run.value < 1) {
            fail(ErrorCode::InvalidPeriod, "periods must be positive");
        }
        two_g -= Rational(big_u(run.count)) * (Rational(1) - Rational(BigInt(1), big(run.value)));
    }
    if (!two_g.is_integer() || two_g.sign() < 0) {
        fail(ErrorCode::NonIntegralGenus, "Riemann-Hurwitz gives 2g = " + two_g.str());
    }
    BigInt twice = two_g.numerator();
    if (twice % 2 != 0) {
        fail(ErrorCode::NonIntegralGenus, "Riemann-Hurwitz gives 2g = " + twice.get_str());
    }
    return twice / 2;
}

inline BigInt riemann_hurwitz_genus(const Rational& chi_source, const BigInt& index, const BigInt& cusps,
                                    std::span<const std::int64_t> periods)
{
    std::vector<PeriodRun> runs;
    for (auto m : periods) {
        runs.push_back({m, 1});
    }
    return riemann_hurwitz_genus(chi_source, index, cusps, runs);
}

namespace detail {

inline CycleType to_cycle_type(const CycleTypeMap& m)
{
    CycleType out;
    for (const auto& [len, count] : m) {
        out.push_back({len, big_u(count)});
    }
    return out;
}

/// Translation by an element of order `ord` in a group of order `n`.
inline CycleType translation_cycles(std::int64_t ord, const BigInt& n) { return {{ord, n / big(ord)}}; }

inline void push_period_cycles(std::vector<PeriodCycles>& out, std::int64_t period, std::uint64_t generators,
                               CycleType cycles)
{
    if (!out.empty() && out.back().period == period && out.back().cycles == cycles) {
        out.back().generators = checked_add(out.back().generators, generators);
        return;
    }
    out.push_back({period, generators, std::move(cycles)});
}

inline void check_total(const CycleType& c, const BigInt& index)
{
    BigInt total = 0;
    for (const auto& cc : c) {
        total += cc.count * big(cc.length);
    }
    if (total != index) {
        fail(ErrorCode::MalformedHom, "cycle lengths do not sum to the index");
    }
}

/// Reads off cusps and periods from cycle data and solves for the genus.
inline InducedSignatureResult assemble(const Signature& source, BigInt index, std::vector<CycleType> cusp_cycles,
                                       std::vector<PeriodCycles> period_cycles)
{
    BigInt cusps = 0;
    for (const auto& c : cusp_cycles) {
        check_total(c, index);
        for (const auto& cc : c) {
            cusps += cc.count;
        }
    }
    std::vector<PeriodRun> runs;
    for (const auto& pc : period_cycles) {
        check_total(pc.cycles, index);
        for (const auto& cc : pc.cycles) {
            if (pc.period % cc.length != 0) {
                fail(ErrorCode::MalformedHom, "cycle length does not divide the period");
            }
            if (pc.period == cc.length) {
                continue;
            }
            BigInt mult = cc.count * big_u(pc.generators);
            runs.push_back({pc.period / cc.length, to_u64(mult, "period multiplicity")});
        }
    }
    auto genus = riemann_hurwitz_genus(euler_characteristic(source), index, cusps, runs);
    return {Signature(std::move(genus), std::move(cusps), std::move(runs)), std::move(index),
            std::move(cusp_cycles), std::move(period_cycles)};
}

} // namespace detail

/// Signature of the point stabilizer of a transitive permutation representation.
inline InducedSignatureResult induced_signature(const Signature& source, const PermHom& h,
                                                const Limits& limits = {})
{
    if (!(h.source == source)) {
        fail(ErrorCode::MalformedHom, "hom source differs from the given signature");
    }
    auto shape = explicit_shape(source, limits);
    detail::check_structure(h, shape);
    std::vector<CycleType> cusp_cycles;
    for (const auto& x : h.images.gamma) {
        cusp_cycles.push_back(detail::to_cycle_type(perm::cycle_type(x)));
    }
    std::vector<PeriodCycles> period_cycles;
    for (std::size_t l = 0; l < shape.periods.size(); ++l) {
        detail::push_period_cycles(period_cycles, shape.periods[l], 1,
                                   detail::to_cycle_type(perm::cycle_type(h.images.delta[l])));
    }
    return detail::assemble(source, big_u(h.degree), std::move(cusp_cycles), std::move(period_cycles));
}

/// The same data for the kernel of a surjective abelian hom, read off element orders.
inline InducedSignatureResult induced_signature_abelian(const Signature& source, const AbelianHom& h,
                                                        const Limits& limits = {})
{
    if (!(h.source == source)) {
        fail(ErrorCode::MalformedHom, "hom source differs from the given signature");
    }
    if (!verify_abelian_hom(h, limits)) {
        fail(ErrorCode::MalformedHom, "relations fail in the target");
    }
    auto all = h.images.flat();
    if (!h.target.generated_by(all)) {
        fail(ErrorCode::NonSurjective, "images do not generate the target");
    }
    const BigInt n = h.target.order();
    std::vector<CycleType> cusp_cycles;
    for (const auto& x : h.images.gamma) {
        cusp_cycles.push_back(detail::translation_cycles(h.target.element_order(x), n));
    }
    std::vector<PeriodCycles> period_cycles;
    const auto periods = h.source.periods(limits.explicit_generators);
    for (std::size_t l = 0; l < h.images.delta.size(); ++l) {
        detail::push_period_cycles(period_cycles, periods[l], 1,
                                   detail::translation_cycles(h.target.element_order(h.images.delta[l]), n));
    }
    return detail::assemble(source, n, std::move(cusp_cycles), std::move(period_cycles));
}

/// Translation action of Δ on the target through h.
inline PermHom regular_action(const AbelianHom& h, const Limits& limits = {})
{
    if (!verify_abelian_hom(h, limits)) {
        fail(ErrorCode::MalformedHom, "relations fail in the target");
    }
    auto all = h.images.flat();
    if (!h.target.generated_by(all)) {
        fail(ErrorCode::NonSurjective, "images do not generate the target");
    }
    const auto degree = to_u64(h.target.order(), "target order");
    if (degree > limits.regular_degree) {
        fail(ErrorCode::BoundExceeded, "regular action degree " + std::to_string(degree) + " exceeds "
                                           + std::to_string(limits.regular_degree));
    }
    auto translate = [&](const AbelianElement& x) {
        Permutation p(degree);
        for (std::uint64_t i = 0; i < degree; ++i) {
            p[i] = static_cast<std::uint32_t>(h.target.encode(h.target.add(h.target.decode(i), x)));
        }
        return p;
    };
    PermHom out {h.source, static_cast<std::size_t>(degree), {}};
    for (const auto& x : h.images.alpha) out.images.alpha.push_back(translate(x));
    for (const auto& x : h.images.beta) out.images.beta.push_back(translate(x));
    for (const auto& x : h.images.gamma) out.images.gamma.push_back(translate(x));
    for (const auto& x : h.images.delta) out.images.delta.push_back(translate(x));
    return out;
}

} // namespace fgroup
