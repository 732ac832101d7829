#pragma once

#include <array>
#include <cstdint>
#include <numeric>
#include <optional>
#include <string>
#include <string_view>
#include <variant>

#include "fgroup/core.hpp"

namespace fgroup {

enum class LengthKind { Exact, AtMost, NonSolvable };

struct DerivedLength {
    LengthKind kind;
    int value; ///< ignored for NonSolvable

    std::string str() const
    {
        switch (kind) {
        case LengthKind::Exact: return std::to_string(value);
        case LengthKind::AtMost: return "<=" + std::to_string(value);
        case LengthKind::NonSolvable: return "non-solvable";
        }
        return "?";
    }
    friend bool operator==(const DerivedLength&, const DerivedLength&) = default;
};

/// One line of the classification of groups with χ >= 0.
struct TableRow {
    int row;
    std::string_view pattern;
    std::string_view group;
    std::string_view euler;
    DerivedLength derived_length;
};

inline constexpr std::array<TableRow, 16> kNonHyperbolicTable {{
    {1, "(0,0;{})", "{1}", "2", {LengthKind::Exact, 0}},
    {2, "(0,0;{n})", "{1}", "1+1/n", {LengthKind::Exact, 0}},
    {3, "(0,0;{n1,n2})", "Z/gcd(n1,n2)Z", "1/n1+1/n2", {LengthKind::Exact, 1}},
    {4, "(0,0;{2,2,n})", "D_n", "1/n", {LengthKind::AtMost, 2}},
    {5, "(0,0;{2,3,3})", "A_4", "1/6", {LengthKind::Exact, 2}},
    {6, "(0,0;{2,3,4})", "S_4", "1/12", {LengthKind::Exact, 3}},
    {7, "(0,0;{2,3,5})", "A_5", "1/30", {LengthKind::NonSolvable, 0}},
    {8, "(0,1;{})", "{1}", "1", {LengthKind::Exact, 0}},
    {9, "(0,1;{n})", "Z/nZ", "1/n", {LengthKind::Exact, 1}},
    {10, "(0,0;{2,3,6})", "(Z x Z) x| Z/6Z", "0", {LengthKind::Exact, 2}},
    {11, "(0,0;{2,4,4})", "(Z x Z) x| Z/4Z", "0", {LengthKind::Exact, 2}},
    {12, "(0,0;{3,3,3})", "(Z x Z) x| Z/3Z", "0", {LengthKind::Exact, 2}},
    {13, "(0,0;{2,2,2,2})", "<a,b,c | a^2,b^2,c^2,(abc)^2>", "0", {LengthKind::Exact, 2}},
    {14, "(0,1;{2,2})", "Z/2Z * Z/2Z", "0", {LengthKind::Exact, 2}},
    {15, "(0,2;{})", "Z", "0", {LengthKind::Exact, 1}},
    {16, "(1,0;{})", "Z x Z", "0", {LengthKind::Exact, 1}},
}};

struct NonHyperbolicEntry {
    int row;
    std::string pattern;          ///< the table's signature pattern
    std::string group;            ///< the table's group label
    std::string instance;         ///< the label with parameters filled in
    Rational euler;
    DerivedLength derived_length;
    std::optional<BigInt> order;  ///< finite group order, elliptic rows only
};

struct HyperbolicMarker {
    Rational euler;
};

using Classification = std::variant<NonHyperbolicEntry, HyperbolicMarker>;

namespace detail {

inline bool periods_are(const Signature& sig, std::initializer_list<std::int64_t> expected)
{
    auto have = sig.runs();
    std::uint64_t total = 0;
    for (const auto& run : have) {
        total += run.count;
    }
    if (total != expected.size()) {
        return false;
    }
    return sig.periods() == std::vector<std::int64_t>(expected);
}

inline NonHyperbolicEntry entry(int row, const Signature& sig, std::string instance, std::optional<BigInt> order)
{
    const auto& t = kNonHyperbolicTable[static_cast<std::size_t>(row - 1)];
    return {row, std::string(t.pattern), std::string(t.group), std::move(instance), euler_characteristic(sig),
            t.derived_length, std::move(order)};
}

} // namespace detail

/// The table row matching a signature with χ >= 0, or a marker when χ < 0.
inline Classification classify_nonhyperbolic(const Signature& sig)
{
    auto chi = euler_characteristic(sig);
    if (chi.sign() < 0) {
        return HyperbolicMarker {chi};
    }
    const auto k = sig.period_count();
    if (sig.shape_is(0, 0)) {
        if (k == 0) {
            return detail::entry(1, sig, "{1}", BigInt(1));
        }
        if (k == 1) {
            return detail::entry(2, sig, "{1}", BigInt(1));
        }
        auto n = sig.periods();
        if (k == 2) {
            auto d = std::gcd(n[0], n[1]);
            return detail::entry(3, sig, "Z/" + std::to_string(d) + "Z", big(d));
        }
        if (k == 3 && n[0] == 2 && n[1] == 2) {
            return detail::entry(4, sig, "D_" + std::to_string(n[2]), big(2 * n[2]));
        }
        using detail::periods_are;
        if (periods_are(sig, {2, 3, 3})) return detail::entry(5, sig, "A_4", BigInt(12));
        if (periods_are(sig, {2, 3, 4})) return detail::entry(6, sig, "S_4", BigInt(24));
        if (periods_are(sig, {2, 3, 5})) return detail::entry(7, sig, "A_5", BigInt(60));
        if (periods_are(sig, {2, 3, 6})) return detail::entry(10, sig, "(Z x Z) x| Z/6Z", std::nullopt);
        if (periods_are(sig, {2, 4, 4})) return detail::entry(11, sig, "(Z x Z) x| Z/4Z", std::nullopt);
        if (periods_are(sig, {3, 3, 3})) return detail::entry(12, sig, "(Z x Z) x| Z/3Z", std::nullopt);
        if (periods_are(sig, {2, 2, 2, 2})) {
            return detail::entry(13, sig, "<a,b,c | a^2,b^2,c^2,(abc)^2>", std::nullopt);
        }
    } else if (sig.shape_is(0, 1)) {
        if (k == 0) {
            return detail::entry(8, sig, "{1}", BigInt(1));
        }
        if (k == 1) {
            auto n = sig.runs()[0].value;
            return detail::entry(9, sig, "Z/" + std::to_string(n) + "Z", big(n));
        }
        if (detail::periods_are(sig, {2, 2})) {
            return detail::entry(14, sig, "Z/2Z * Z/2Z", std::nullopt);
        }
    } else if (sig.shape_is(0, 2) && k == 0) {
        return detail::entry(15, sig, "Z", std::nullopt);
    } else if (sig.shape_is(1, 0) && k == 0) {
        return detail::entry(16, sig, "Z x Z", std::nullopt);
    }
    fail(ErrorCode::ClassificationGap, "no non-hyperbolic pattern matches " + sig.str());
}

} // namespace fgroup
