#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <string_view>

#include "fgroup/fenchel_nielsen.hpp"
#include "fgroup/table.hpp"

namespace fgroup {

enum class ChenShape { Free, Surface };

constexpr std::string_view chen_shape_name(ChenShape s) noexcept { return s == ChenShape::Free ? "Free" : "Surface"; }

struct ChenData {
    BigInt theta1;
    BigInt theta2;
    ChenShape shape;

    friend bool operator==(const ChenData&, const ChenData&) = default;
};

/// Θ_1 and Θ_2 of a torsion-free non-abelian signature.
inline ChenData chen_ranks(const Signature& sig)
{
    if (sig.has_periods()) {
        fail(ErrorCode::HasTorsion, sig.str() + " has periods");
    }
    ChenData out {abelian_free_rank(sig), 0, sgn(sig.cusps()) > 0 ? ChenShape::Free : ChenShape::Surface};
    // Z^2 is the one rank-2 surface group, and it is abelian.
    if (out.theta1 <= 1 || (out.shape == ChenShape::Surface && out.theta1 == 2)) {
        fail(ErrorCode::AbelianShape, sig.str() + " is abelian");
    }
    const BigInt& t = out.theta1;
    out.theta2 = (t * t - t - (out.shape == ChenShape::Surface ? 2 : 0)) / 2;
    return out;
}

/// 2Θ_2 − Θ_1² + Θ_1 = 0.
inline bool affineness_equation(const ChenData& c)
{
    return 2 * c.theta2 - c.theta1 * c.theta1 + c.theta1 == 0;
}

/// The Heisenberg group mod ℓ: (a,b,c)(a',b',c') = (a+a', b+b', c+c'+ab').
class Heisenberg {
public:
    using Element = std::array<std::int64_t, 3>;

    explicit Heisenberg(std::int64_t ell) : ell_(ell) {}

    Element identity() const { return {0, 0, 0}; }
    Element mul(const Element& x, const Element& y) const
    {
        return {mod(x[0] + y[0]), mod(x[1] + y[1]), mod(x[2] + y[2] + x[0] * y[1])};
    }
    Element inv(const Element& x) const { return {mod(-x[0]), mod(-x[1]), mod(-x[2] + x[0] * x[1])}; }
    Element pow(Element x, std::int64_t n) const
    {
        Element out = identity();
        for (std::int64_t i = 0; i < n; ++i) {
            out = mul(out, x);
        }
        return out;
    }
    Element commutator(const Element& x, const Element& y) const { return mul(mul(mul(x, y), inv(x)), inv(y)); }

private:
    std::int64_t mod(std::int64_t v) const { return ((v % ell_) + ell_) % ell_; }
    std::int64_t ell_;
};

/// Checks that α_1 ↦ x, β_1 ↦ y, δ ↦ [x,y]⁻¹ (everything else trivial) is a
/// hom to H_ℓ under which δ has order ℓ.
inline bool heisenberg_detects(std::int64_t ell, std::int64_t period)
{
    Heisenberg h(ell);
    const Heisenberg::Element x {1, 0, 0};
    const Heisenberg::Element y {0, 1, 0};
    const auto z = h.inv(h.commutator(x, y));
    const auto relation = h.mul(h.commutator(x, y), z);
    return relation == h.identity() && h.pow(z, period) == h.identity() && z != h.identity()
        && h.pow(z, ell) == h.identity();
}

struct TorsionVerdict {
    bool torsion_free;
    std::string witness; ///< empty when torsion-free
};

/// Torsion-freeness of Δ as seen in its metabelian quotient.
inline TorsionVerdict metabelian_torsion_free(const Signature& sig)
{
    if (is_perfect(sig)) {
        fail(ErrorCode::PerfectInput, sig.str() + " is perfect");
    }
    if (!sig.has_periods()) {
        return {true, ""};
    }
    auto runs = sig.runs();
    for (std::size_t i = 0; i < runs.size(); ++i) {
        if (auto ord = delta_order_in_abelianization(sig, i); ord > 1) {
            return {false, "δ survives in Δ^ab (period " + std::to_string(runs[i].value) + ", image of order "
                               + std::to_string(ord) + ")"};
        }
    }
    if (sgn(sig.genus()) > 0) {
        auto n = runs[0].value;
        std::int64_t ell = 2;
        while (n % ell != 0) {
            ++ell;
        }
        if (!heisenberg_detects(ell, n)) {
            throw std::logic_error("Heisenberg witness failed for " + sig.str());
        }
        return {false, "Heisenberg quotient H_" + std::to_string(ell) + " detects δ of order " + std::to_string(n)};
    }
    throw std::logic_error("non-perfect " + sig.str() + " has no surviving torsion witness");
}

/// Derived length of Δ/Δ^(3), capped at 3.
inline int derived_length_upto3(const Signature& sig)
{
    if (names_trivial_group(sig) || is_perfect(sig)) {
        return 0;
    }
    auto c = classify_nonhyperbolic(sig);
    if (auto* e = std::get_if<NonHyperbolicEntry>(&c)) {
        if (e->row == 4) {
            return sig.runs().back().value == 2 ? 1 : 2;
        }
        return e->derived_length.value;
    }
    return 3;
}

/// Hyperbolicity read from the 3-step quotient: derived length 3 and not S_4.
inline bool hyperbolic_3step_check(const Signature& sig)
{
    if (is_perfect(sig)) {
        fail(ErrorCode::PerfectInput, sig.str() + " is perfect");
    }
    return derived_length_upto3(sig) == 3 && !has_s4_fingerprint(derived_tower(sig, 3));
}

/// Affineness read on the canonical cover: an abelian-quotient torsion-free
/// cover exists and its Chen ranks satisfy the equation.
inline bool affineness_3step_check(const Signature& sig, const Limits& limits = {})
{
    if (!is_hyperbolic(sig)) {
        fail(ErrorCode::DomainError, sig.str() + " is not hyperbolic");
    }
    auto chain = fn_chain(sig, limits);
    return chain.quotient_derived_length == 1 && affineness_equation(chen_ranks(chain.final_signature()));
}

} // namespace fgroup
