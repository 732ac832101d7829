#pragma once

#include <algorithm>
#include <cstdint>
#include <initializer_list>
#include <numeric>
#include <ostream>
#include <span>
#include <string>
#include <vector>

#include "fgroup/bigint.hpp"
#include "fgroup/limits.hpp"

namespace fgroup {

/// `count` copies of the period `value`.
struct PeriodRun {
    std::int64_t value;
    std::uint64_t count;

    friend bool operator==(const PeriodRun&, const PeriodRun&) = default;
};

/// The tuple (g, r; {n_1, ..., n_k}). Periods are kept sorted and run-length
/// encoded, because iterated covers replicate periods by the index.
class Signature {
public:
    Signature() = default;

    /// Validates and normalizes: drops 1-periods, sorts, merges equal values.
    Signature(BigInt genus, BigInt cusps, std::vector<PeriodRun> runs)
        : genus_(std::move(genus))
        , cusps_(std::move(cusps))
    {
        if (sgn(genus_) < 0 || sgn(cusps_) < 0) {
            fail(ErrorCode::NegativeParameter, "genus and cusps must be nonnegative");
        }
        std::vector<PeriodRun> kept;
        for (const auto& run : runs) {
            if (run.value <= 0) {
                fail(ErrorCode::InvalidPeriod, "period " + std::to_string(run.value) + " is not positive");
            }
            if (run.value > 1 && run.count > 0) {
                kept.push_back(run);
            }
        }
        std::sort(kept.begin(), kept.end(), [](const auto& a, const auto& b) { return a.value < b.value; });
        for (const auto& run : kept) {
            if (!runs_.empty() && runs_.back().value == run.value) {
                runs_.back().count = checked_add(runs_.back().count, run.count, "period count");
            } else {
                runs_.push_back(run);
            }
        }
        for (const auto& run : runs_) {
            period_count_ = checked_add(period_count_, run.count, "period count");
        }
    }

    static Signature of(std::int64_t g, std::int64_t r, std::span<const std::int64_t> periods)
    {
        if (g < 0 || r < 0) {
            fail(ErrorCode::NegativeParameter, "g and r must be nonnegative");
        }
        std::vector<PeriodRun> runs;
        runs.reserve(periods.size());
        for (auto n : periods) {
            runs.push_back({n, 1});
        }
        return Signature(big(g), big(r), std::move(runs));
    }

    static Signature of(std::int64_t g, std::int64_t r, std::initializer_list<std::int64_t> periods)
    {
        return of(g, r, std::span<const std::int64_t>(periods.begin(), periods.size()));
    }

    const BigInt& genus() const { return genus_; }
    const BigInt& cusps() const { return cusps_; }
    std::span<const PeriodRun> runs() const { return runs_; }
    std::uint64_t period_count() const { return period_count_; }
    bool has_periods() const { return period_count_ > 0; }
    bool genus_is(long g) const { return genus_ == g; }
    bool cusps_is(long r) const { return cusps_ == r; }
    bool shape_is(long g, long r) const { return genus_ == g && cusps_ == r; }

    /// Small genus/cusp values for explicit generator-level work.
    std::size_t small_genus(std::size_t bound = 1u << 16) const { return small(genus_, bound, "genus"); }
    std::size_t small_cusps(std::size_t bound = 1u << 16) const { return small(cusps_, bound, "cusp count"); }

    /// The expanded period list n_1 <= ... <= n_k.
    std::vector<std::int64_t> periods(std::size_t bound = Limits {}.explicit_generators) const
    {
        if (period_count_ > bound) {
            fail(ErrorCode::BoundExceeded,
                 "signature has " + std::to_string(period_count_) + " periods; expansion bound is "
                     + std::to_string(bound));
        }
        std::vector<std::int64_t> out;
        out.reserve(period_count_);
        for (const auto& run : runs_) {
            out.insert(out.end(), run.count, run.value);
        }
        return out;
    }

    /// lcm of all periods (1 if none).
    std::int64_t period_lcm() const
    {
        std::int64_t l = 1;
        for (const auto& run : runs_) {
            l = lcm_checked(l, run.value);
        }
        return l;
    }

    /// Product of all periods.
    BigInt period_product() const
    {
        BigInt p = 1;
        for (const auto& run : runs_) {
            p *= pow_big(run.value, run.count);
        }
        return p;
    }

    std::string str() const
    {
        std::string out = "(" + genus_.get_str() + "," + cusps_.get_str() + ";";
        if (runs_.empty()) {
            return out + "{})";
        }
        out += "{";
        bool first = true;
        for (const auto& run : runs_) {
            if (run.count > 8) {
                out += (first ? "" : ",") + std::to_string(run.value) + "x" + std::to_string(run.count);
                first = false;
                continue;
            }
            for (std::uint64_t i = 0; i < run.count; ++i) {
                out += (first ? "" : ",") + std::to_string(run.value);
                first = false;
            }
        }
        return out + "})";
    }

    friend bool operator==(const Signature&, const Signature&) = default;
    friend std::ostream& operator<<(std::ostream& os, const Signature& s) { return os << s.str(); }

private:
    static std::size_t small(const BigInt& v, std::size_t bound, const char* what)
    {
        if (v > bound) {
            fail(ErrorCode::BoundExceeded, std::string(what) + " " + v.get_str() + " exceeds "
                                               + std::to_string(bound));
        }
        return v.get_ui();
    }

    BigInt genus_ {0};
    BigInt cusps_ {0};
    std::vector<PeriodRun> runs_;
    std::uint64_t period_count_ = 0;
};

/// Drop 1-periods and sort.
inline Signature normalize_signature(std::int64_t g, std::int64_t r, std::span<const std::int64_t> periods)
{
    return Signature::of(g, r, periods);
}

} // namespace fgroup
