#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "fgroup/step_invariants.hpp"

namespace fgroup {

/// g <= g_max, r <= r_max, at most k_max periods drawn from 2..n_max.
struct ScanRanges {
    std::int64_t g_max = 0;
    std::int64_t r_max = 0;
    std::int64_t k_max = 0;
    std::int64_t n_max = 2;
};

inline std::uint64_t scan_size(const ScanRanges& ranges)
{
    if (ranges.g_max < 0 || ranges.r_max < 0 || ranges.k_max < 0 || ranges.n_max < 1) {
        fail(ErrorCode::NegativeParameter, "scan bounds must be nonnegative");
    }
    const auto values = static_cast<std::uint64_t>(std::max<std::int64_t>(ranges.n_max - 1, 0));
    // Multisets of size k from `values` values: C(values + k − 1, k).
    BigInt multisets = 0;
    for (std::int64_t k = 0; k <= ranges.k_max; ++k) {
        BigInt c;
        if (values == 0) {
            c = k == 0 ? 1 : 0;
        } else {
            mpz_bin_uiui(c.get_mpz_t(), values + static_cast<std::uint64_t>(k) - 1, static_cast<unsigned long>(k));
        }
        multisets += c;
    }
    BigInt total = multisets * (ranges.g_max + 1) * (ranges.r_max + 1);
    return total.fits_ulong_p() ? total.get_ui() : UINT64_MAX;
}

/// Visits signatures ordered by g, then r, then period count, then periods lexicographically.
inline void for_each_signature(const ScanRanges& ranges, const std::function<void(const Signature&)>& visit)
{
    std::vector<std::int64_t> periods;
    for (std::int64_t g = 0; g <= ranges.g_max; ++g) {
        for (std::int64_t r = 0; r <= ranges.r_max; ++r) {
            for (std::int64_t k = 0; k <= ranges.k_max; ++k) {
                std::function<void(std::int64_t)> extend = [&](std::int64_t lo) {
                    if (static_cast<std::int64_t>(periods.size()) == k) {
                        visit(Signature::of(g, r, periods));
                        return;
                    }
                    for (std::int64_t n = lo; n <= ranges.n_max; ++n) {
                        periods.push_back(n);
                        extend(n);
                        periods.pop_back();
                    }
                };
                extend(2);
            }
        }
    }
}

/// Exact χ(H) = [Δ:H]·χ(Δ).
inline bool riemann_hurwitz_holds(const Signature& source, const InducedSignatureResult& r)
{
    return r.index >= 1 && sgn(r.subgroup.genus()) >= 0
        && euler_characteristic(r.subgroup) == Rational(r.index) * euler_characteristic(source);
}

/// Chain-length conditions, with the cyclic two-period case
/// (whose presentation is not that of its group) counted as satisfying them.
inline bool abelian_quotient_suffices(const Signature& sig)
{
    return sgn(sig.cusps()) > 0 || abelian_period_condition(sig) || is_bad_cyclic(sig);
}

inline bool metabelian_quotient_suffices(const Signature& sig)
{
    if (!sig.shape_is(0, 0) || abelian_quotient_suffices(sig)) {
        return true;
    }
    auto derived = torsion_kernel_signature(sig).subgroup;
    return abelian_period_condition(derived) || names_trivial_group(derived);
}

struct CheckSummary {
    std::string name;
    std::uint64_t passed = 0;
    std::uint64_t failed = 0;
    std::uint64_t skipped = 0;
    std::vector<std::string> counterexamples; ///< first 10
    std::map<std::string, std::string> notes;
};

struct ScanSummary {
    std::uint64_t signatures = 0;
    std::vector<CheckSummary> checks;
};

namespace detail {

/// nullopt: not applicable. Otherwise pass/fail with an optional reason.
struct Verdict {
    bool ok;
    std::string why;
};
using CheckFn = std::function<std::optional<Verdict>(const Signature&, CheckSummary&, const Limits&)>;

inline std::optional<Verdict> pass_if(bool ok, std::string why = {}) { return Verdict {ok, ok ? "" : std::move(why)}; }

inline std::vector<std::pair<Signature, InducedSignatureResult>> covers_of(const Signature& sig, const Limits& limits)
{
    std::vector<std::pair<Signature, InducedSignatureResult>> out;
    if (sig.has_periods() && (sgn(sig.cusps()) > 0 || torsion_subgroup_order(sig) > 1)) {
        out.emplace_back(sig, torsion_kernel_signature(sig));
    }
    auto tower = derived_tower(sig, 4);
    const Signature* prev = &tower.base;
    for (const auto& s : tower.steps) {
        out.emplace_back(*prev, s.provenance);
        prev = &s.signature;
    }
    if (!names_trivial_group(sig) && !is_perfect(sig)) {
        auto chain = fn_chain(sig, limits);
        Signature current = chain.base;
        for (const auto& s : chain.steps) {
            out.emplace_back(current, s.result);
            current = s.result.subgroup;
        }
    }
    return out;
}

inline const std::map<std::string, CheckFn, std::less<>>& check_table()
{
    static const std::map<std::string, CheckFn, std::less<>> table {
        {"rh-integrality",
         [](const Signature& s, CheckSummary&, const Limits& limits) {
             for (const auto& [source, cover] : covers_of(s, limits)) {
                 if (!riemann_hurwitz_holds(source, cover)) {
                     return pass_if(false, "cover " + cover.subgroup.str() + " of " + source.str());
                 }
             }
             return pass_if(true);
         }},
        {"torsion-order",
         [](const Signature& s, CheckSummary&, const Limits& limits) {
             return pass_if(abelianization(s, limits).torsion_order() == torsion_subgroup_order(s));
         }},
        {"perfect-snf",
         [](const Signature& s, CheckSummary&, const Limits& limits) {
             return pass_if(is_perfect(s) == abelianization(s, limits).trivial());
         }},
        {"abelian-period-orders",
         [](const Signature& s, CheckSummary&, const Limits& limits) -> std::optional<Verdict> {
             if (sgn(s.cusps()) > 0) {
                 return std::nullopt;
             }
             auto h = canonical_torsion_hom(s, limits);
             auto n = s.periods();
             bool all_full = true;
             for (std::size_t l = 0; l < n.size(); ++l) {
                 all_full = all_full && h.target.element_order(h.images.delta[l]) == n[l];
             }
             return pass_if(all_full == abelian_period_condition(s));
         }},
        {"report-identity",
         [](const Signature& s, CheckSummary&, const Limits& limits) {
             invariants_report(s, limits);
             return pass_if(true);
         }},
        {"classification",
         [](const Signature& s, CheckSummary&, const Limits&) {
             auto c = classify_nonhyperbolic(s);
             return pass_if(std::holds_alternative<HyperbolicMarker>(c) == is_hyperbolic(s));
         }},
        {"table1-parabolic-count",
         [](const Signature& s, CheckSummary& summary, const Limits&) -> std::optional<Verdict> {
             if (classify_curvature(s) != Curvature::Parabolic) {
                 return std::nullopt;
             }
             const auto c = classify_nonhyperbolic(s);
             const auto& e = std::get<NonHyperbolicEntry>(c);
             auto& seen = summary.notes["parabolic_patterns"];
             seen += (seen.empty() ? "" : " ") + s.str();
             summary.notes["parabolic_found"] = std::to_string(summary.passed + summary.failed + 1);
             return pass_if(e.euler.sign() == 0 && e.row >= 10, "row " + std::to_string(e.row));
         }},
        {"fn-chain",
         [](const Signature& s, CheckSummary&, const Limits& limits) -> std::optional<Verdict> {
             if (names_trivial_group(s) || is_perfect(s)) {
                 return std::nullopt;
             }
             auto chain = fn_chain(s, limits);
             auto report = certify_chain(chain, limits);
             if (!report.ok) {
                 return pass_if(false, report.diagnostics.front());
             }
             const int len = chain.quotient_derived_length;
             if (len < 1 || len > 3) {
                 return pass_if(false, "length " + std::to_string(len));
             }
             if ((len == 1) != abelian_quotient_suffices(s)) {
                 return pass_if(false, "length-1 condition mismatch");
             }
             return pass_if((len <= 2) == metabelian_quotient_suffices(s), "length-2 condition mismatch");
         }},
        {"commutator-01",
         [](const Signature& s, CheckSummary&, const Limits&) -> std::optional<Verdict> {
             if (!s.shape_is(0, 1) || !s.has_periods()) {
                 return std::nullopt;
             }
             auto c = commutator_signature_01(s);
             if (!(c == torsion_kernel_signature(s))) {
                 return pass_if(false, "differs from the torsion kernel");
             }
             return pass_if(!is_hyperbolic(s) || c.subgroup.genus() >= 1, "genus 0 on a hyperbolic input");
         }},
        {"three-step",
         [](const Signature& s, CheckSummary&, const Limits&) -> std::optional<Verdict> {
             if (is_perfect(s)) {
                 return std::nullopt;
             }
             return pass_if(hyperbolic_3step_check(s) == is_hyperbolic(s));
         }},
        {"chen-affineness",
         [](const Signature& s, CheckSummary&, const Limits&) -> std::optional<Verdict> {
             if (s.has_periods() || abelian_free_rank(s) <= 1 || s == Signature::of(1, 0, {})) {
                 return std::nullopt;
             }
             return pass_if(affineness_equation(chen_ranks(s)) == is_affine(s));
         }},
        {"tower-indices",
         [](const Signature& s, CheckSummary&, const Limits&) {
             auto tower = derived_tower(s, 4);
             const auto chi = euler_characteristic(s);
             BigInt index = 1;
             const bool nonperfect_hyperbolic = is_hyperbolic(s) && !is_perfect(s);
             for (const auto& step : tower.steps) {
                 index *= step.quotient_order;
                 if (euler_characteristic(step.signature) != Rational(index) * chi) {
                     return pass_if(false, "chi does not scale at " + step.signature.str());
                 }
                 if (nonperfect_hyperbolic && step.status == TowerStatus::Perfect) {
                     return pass_if(false, "perfect stage " + step.signature.str());
                 }
                 const auto& t = step.signature;
                 if (is_hyperbolic(s) && t.cusps() == 0 && !t.has_periods() && t.genus() < 2) {
                     return pass_if(false, "closed hyperbolic stage of genus < 2");
                 }
             }
             return pass_if(true);
         }},
        {"kernel-oracle",
         [](const Signature& s, CheckSummary&, const Limits& limits) -> std::optional<Verdict> {
             if (!s.has_periods() || (s.cusps() == 0 && torsion_subgroup_order(s) == 1)) {
                 return std::nullopt;
             }
             auto h = canonical_torsion_hom(s, limits);
             if (h.target.order() > 64) {
                 return std::nullopt;
             }
             auto closed = torsion_kernel_signature(s);
             return pass_if(closed == induced_signature_abelian(s, h, limits)
                                && closed == induced_signature(s, regular_action(h, limits), limits));
         }},
    };
    return table;
}

} // namespace detail

inline std::vector<std::string> scan_check_names()
{
    std::vector<std::string> out;
    for (const auto& [name, fn] : detail::check_table()) {
        out.push_back(name);
    }
    return out;
}

/// Runs the named checks over every signature in range.
inline ScanSummary scan(const ScanRanges& ranges, std::span<const std::string> checks, const Limits& limits = {})
{
    const auto& table = detail::check_table();
    std::vector<const detail::CheckFn*> fns;
    ScanSummary summary;
    for (const auto& name : checks) {
        auto it = table.find(name);
        if (it == table.end()) {
            fail(ErrorCode::DomainError, "unknown check \"" + name + "\"");
        }
        fns.push_back(&it->second);
        summary.checks.push_back({name, 0, 0, 0, {}, {}});
    }
    const auto total = scan_size(ranges);
    if (total > limits.scan_ceiling) {
        fail(ErrorCode::BoundExceeded, std::to_string(total) + " signatures exceed the ceiling of "
                                           + std::to_string(limits.scan_ceiling));
    }
    summary.signatures = total;
    for_each_signature(ranges, [&](const Signature& s) {
        for (std::size_t c = 0; c < fns.size(); ++c) {
            auto& out = summary.checks[c];
            std::optional<detail::Verdict> v;
            try {
                v = (*fns[c])(s, out, limits);
            } catch (const std::exception& e) {
                v = detail::Verdict {false, e.what()};
            }
            if (!v) {
                ++out.skipped;
            } else if (v->ok) {
                ++out.passed;
            } else {
                ++out.failed;
                if (out.counterexamples.size() < 10) {
                    out.counterexamples.push_back(s.str() + (v->why.empty() ? "" : ": " + v->why));
                }
            }
        }
    });
    return summary;
}

} // namespace fgroup
