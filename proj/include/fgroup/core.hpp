#pragma once

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "fgroup/rational.hpp"
#include "fgroup/signature.hpp"
#include "fgroup/smith.hpp"

namespace fgroup {

enum class Curvature { Elliptic, Parabolic, Hyperbolic };

constexpr std::string_view curvature_name(Curvature c) noexcept
{
    switch (c) {
    case Curvature::Elliptic: return "Elliptic";
    case Curvature::Parabolic: return "Parabolic";
    case Curvature::Hyperbolic: return "Hyperbolic";
    }
    return "?";
}

/// χ = 2 − 2g − r − Σ(1 − 1/n_i).
inline Rational euler_characteristic(const Signature& sig)
{
    BigInt integral = 2 - 2 * sig.genus() - sig.cusps();
    mpq_class fractional = 0;
    for (const auto& run : sig.runs()) {
        integral -= big_u(run.count);
        fractional += mpq_class(big_u(run.count), big(run.value));
    }
    fractional.canonicalize();
    return Rational(integral) + Rational(BigInt(fractional.get_num()), BigInt(fractional.get_den()));
}

inline Curvature classify_curvature(const Signature& sig)
{
    int s = euler_characteristic(sig).sign();
    return s > 0 ? Curvature::Elliptic : (s == 0 ? Curvature::Parabolic : Curvature::Hyperbolic);
}

inline bool is_hyperbolic(const Signature& sig) { return euler_characteristic(sig).sign() < 0; }

inline bool is_affine(const Signature& sig) { return sgn(sig.cusps()) > 0; }

struct AbelianInvariants {
    BigInt free_rank;
    std::vector<BigInt> torsion_factors; ///< d_1 | d_2 | ..., each >= 2

    BigInt torsion_order() const
    {
        BigInt p = 1;
        for (const auto& d : torsion_factors) {
            p *= d;
        }
        return p;
    }
    bool trivial() const { return free_rank == 0 && torsion_factors.empty(); }

    friend bool operator==(const AbelianInvariants&, const AbelianInvariants&) = default;
};

/// Free rank of Δ^ab.
inline BigInt abelian_free_rank(const Signature& sig)
{
    return sgn(sig.cusps()) > 0 ? BigInt(2 * sig.genus() + sig.cusps() - 1) : BigInt(2 * sig.genus());
}

/// The relation matrix of Δ^ab_tor on δ_1..δ_k: diag(n_i), plus the all-ones
/// row when r = 0.
inline IntMatrix torsion_relation_matrix(const Signature& sig, std::size_t bound)
{
    auto n = sig.periods(bound);
    const std::size_t k = n.size();
    IntMatrix m(k, std::vector<BigInt>(k, 0));
    for (std::size_t i = 0; i < k; ++i) {
        m[i][i] = big(n[i]);
    }
    if (sig.cusps() == 0) {
        m.emplace_back(k, BigInt(1));
    }
    return m;
}

/// Δ^ab via Smith normal form of the period relation matrix.
inline AbelianInvariants abelianization(const Signature& sig, const Limits& limits = {})
{
    AbelianInvariants out;
    out.free_rank = abelian_free_rank(sig);
    if (sig.period_count() > limits.smith_periods) {
        fail(ErrorCode::BoundExceeded, "Smith normal form limited to " + std::to_string(limits.smith_periods)
                                           + " periods");
    }
    const auto k = static_cast<std::size_t>(sig.period_count());
    for (auto& d : invariant_factors(torsion_relation_matrix(sig, limits.smith_periods), k)) {
        if (d > 1) {
            out.torsion_factors.push_back(d);
        } else if (d == 0) {
            throw std::logic_error("torsion relation matrix lost rank");
        }
    }
    return out;
}

namespace detail {

/// lcm of every period except one copy taken from run `skip`.
inline std::int64_t lcm_excluding_one(const Signature& sig, std::size_t skip)
{
    std::int64_t l = 1;
    auto runs = sig.runs();
    for (std::size_t j = 0; j < runs.size(); ++j) {
        if (j != skip || runs[j].count >= 2) {
            l = lcm_checked(l, runs[j].value);
        }
    }
    return l;
}

/// Whether the multiset minus one copy of run `skip` has two entries sharing a factor.
inline bool others_share_factor(const Signature& sig, std::size_t skip)
{
    auto runs = sig.runs();
    std::vector<std::int64_t> distinct;
    for (std::size_t j = 0; j < runs.size(); ++j) {
        std::uint64_t c = runs[j].count - (j == skip ? 1 : 0);
        if (c >= 2) {
            return true;
        }
        if (c == 1) {
            distinct.push_back(runs[j].value);
        }
    }
    for (std::size_t a = 0; a < distinct.size(); ++a) {
        for (std::size_t b = a + 1; b < distinct.size(); ++b) {
            if (std::gcd(distinct[a], distinct[b]) > 1) {
                return true;
            }
        }
    }
    return false;
}

} // namespace detail

/// |Δ^ab_tor| in closed form.
inline BigInt torsion_subgroup_order(const Signature& sig)
{
    if (sgn(sig.cusps()) > 0) {
        return sig.period_product();
    }
    if (sig.period_count() <= 1) {
        return 1;
    }
    return sig.period_product() / big(sig.period_lcm());
}

/// Order of the image of a δ with period runs()[run] in Δ^ab.
inline std::int64_t delta_order_in_abelianization(const Signature& sig, std::size_t run)
{
    auto n = sig.runs()[run].value;
    if (sgn(sig.cusps()) > 0) {
        return n;
    }
    if (sig.period_count() <= 1) {
        return 1;
    }
    return std::gcd(n, detail::lcm_excluding_one(sig, run));
}

/// Signatures whose group is trivial.
inline bool names_trivial_group(const Signature& sig)
{
    if (sig.shape_is(0, 1)) {
        return !sig.has_periods();
    }
    if (!sig.shape_is(0, 0)) {
        return false;
    }
    if (sig.period_count() <= 1) {
        return true;
    }
    return sig.period_count() == 2 && sig.runs().size() == 2
        && std::gcd(sig.runs()[0].value, sig.runs()[1].value) == 1;
}

/// (0,0;{n_1,n_2}) with gcd > 1: the cyclic group Z/gcd, the one non-trivial
/// group here whose presentation keeps periods that all die in a torsion-free cover.
inline bool is_bad_cyclic(const Signature& sig)
{
    if (!sig.shape_is(0, 0) || sig.period_count() != 2) {
        return false;
    }
    auto runs = sig.runs();
    return runs.size() == 1 || std::gcd(runs[0].value, runs[1].value) > 1;
}

/// Torsion-free as a group: no periods, or the trivial group.
inline bool is_torsion_free(const Signature& sig) { return !sig.has_periods() || names_trivial_group(sig); }

inline bool pairwise_coprime(const Signature& sig)
{
    auto runs = sig.runs();
    for (std::size_t a = 0; a < runs.size(); ++a) {
        if (runs[a].count >= 2) {
            return false;
        }
        for (std::size_t b = a + 1; b < runs.size(); ++b) {
            if (std::gcd(runs[a].value, runs[b].value) > 1) {
                return false;
            }
        }
    }
    return true;
}

/// Δ = [Δ, Δ].
inline bool is_perfect(const Signature& sig)
{
    if (names_trivial_group(sig)) {
        return true;
    }
    return sig.shape_is(0, 0) && pairwise_coprime(sig);
}

/// Every period divides the lcm of the others; true for k = 0, false for k = 1.
inline bool abelian_period_condition(const Signature& sig)
{
    if (sig.period_count() == 0) {
        return true;
    }
    if (sig.period_count() == 1) {
        return false;
    }
    auto runs = sig.runs();
    for (std::size_t i = 0; i < runs.size(); ++i) {
        if (detail::lcm_excluding_one(sig, i) % runs[i].value != 0) {
            return false;
        }
    }
    return true;
}

/// For each i: n_i | lcm(others), or ∏ others / lcm(others) >= 2.
inline bool condition_star(const Signature& sig)
{
    if (sgn(sig.cusps()) > 0) {
        fail(ErrorCode::DomainError, "condition (*) is stated for r = 0");
    }
    auto runs = sig.runs();
    for (std::size_t i = 0; i < runs.size(); ++i) {
        bool divides = detail::lcm_excluding_one(sig, i) % runs[i].value == 0;
        if (!divides && !detail::others_share_factor(sig, i)) {
            return false;
        }
    }
    return true;
}

struct InvariantsReport {
    Rational euler;
    Curvature curvature;
    BigInt rank_tf;
    int epsilon;
    Signature periods; ///< (0,0;{n_i}) carrier of the period multiset
    BigInt torsion_order;
    bool perfect;
};

inline InvariantsReport invariants_report(const Signature& sig, const Limits& limits = {})
{
    auto ab = abelianization(sig, limits);
    InvariantsReport out {
        euler_characteristic(sig),
        classify_curvature(sig),
        ab.free_rank,
        is_affine(sig) ? 1 : 0,
        Signature(0, 0, {sig.runs().begin(), sig.runs().end()}),
        ab.torsion_order(),
        is_perfect(sig),
    };
    Rational rhs = Rational(BigInt(2 - out.rank_tf - out.epsilon));
    for (const auto& run : sig.runs()) {
        rhs -= Rational(big_u(run.count)) * (Rational(1) - Rational(1, big(run.value)));
    }
    if (rhs != out.euler) {
        throw std::logic_error("invariant identity failed for " + sig.str());
    }
    if (out.perfect != ab.trivial()) {
        throw std::logic_error("perfectness disagrees with abelianization for " + sig.str());
    }
    return out;
}

/// (rank_tf, ε, periods) agree. Necessary for isomorphism, not sufficient.
inline bool invariants_equal(const Signature& a, const Signature& b)
{
    if (names_trivial_group(a) || names_trivial_group(b)) {
        fail(ErrorCode::TrivialGroupInput, "invariants are only meaningful for non-trivial groups");
    }
    return abelian_free_rank(a) == abelian_free_rank(b) && is_affine(a) == is_affine(b)
        && std::equal(a.runs().begin(), a.runs().end(), b.runs().begin(), b.runs().end());
}

} // namespace fgroup
