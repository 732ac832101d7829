#include <gtest/gtest.h>

#include <vector>

#include "fgroup/fgroup.hpp"
#include "support/oracles.hpp"

using namespace fgroup;

namespace {

Signature sig(std::int64_t g, std::int64_t r, std::initializer_list<std::int64_t> n = {})
{
    return Signature::of(g, r, n);
}

ErrorCode code_of(auto&& f)
{
    try {
        f();
    } catch (const Error& e) {
        return e.code();
    }
    ADD_FAILURE() << "no error raised";
    return ErrorCode::DomainError;
}

std::vector<BigInt> quotient_orders(const Tower& t)
{
    std::vector<BigInt> out;
    for (const auto& s : t.steps) {
        out.push_back(s.quotient_order);
    }
    return out;
}

} // namespace

TEST(TorsionKernel, Examples)
{
    auto a = torsion_kernel_signature(sig(0, 0, {2, 3, 4}));
    EXPECT_EQ(a.subgroup, sig(0, 0, {3, 3, 2}));
    EXPECT_EQ(a.index, 2);
    auto b = torsion_kernel_signature(sig(0, 3, {2}));
    EXPECT_EQ(b.subgroup, sig(0, 5));
    EXPECT_EQ(b.index, 2);
    EXPECT_EQ(code_of([] { torsion_kernel_signature(sig(2, 0)); }), ErrorCode::IdentityCover);
}

TEST(TorsionKernel, ClosedFormMatchesExplicitKernel)
{
    oracle::SignatureGen gen(31);
    gen.n_max = 10;
    int compared = 0;
    for (int i = 0; i < 400; ++i) {
        auto s = gen();
        if (torsion_subgroup_order(s) == 1) {
            continue;
        }
        auto closed = torsion_kernel_signature(s);
        auto h = canonical_torsion_hom(s);
        EXPECT_EQ(h.target.order(), torsion_subgroup_order(s));
        auto explicit_kernel = induced_signature_abelian(s, h);
        EXPECT_EQ(closed, explicit_kernel) << s.str();
        ++compared;
    }
    EXPECT_GT(compared, 100);
}

TEST(Commutator01, Examples)
{
    auto a = commutator_signature_01(sig(0, 1, {2, 2}));
    EXPECT_EQ(a.subgroup, sig(0, 2));
    EXPECT_EQ(a.index, 4);
    for (std::int64_t n : {2, 5, 9}) {
        auto b = commutator_signature_01(Signature::of(0, 1, std::vector<std::int64_t> {n}));
        EXPECT_EQ(b.subgroup, sig(0, 1));
        EXPECT_EQ(b.index, n);
    }
    auto c = commutator_signature_01(sig(0, 1, {2, 3, 7}));
    EXPECT_EQ(c.subgroup, sig(22, 1));
    EXPECT_EQ(c.index, 42);
    EXPECT_EQ(code_of([] { commutator_signature_01(sig(1, 1, {2})); }), ErrorCode::WrongShape);
}

TEST(Commutator01, AgreesWithTorsionKernelAndHasPositiveGenus)
{
    oracle::SignatureGen gen(32);
    gen.k_max = 5;
    for (int i = 0; i < 300; ++i) {
        auto s = gen();
        auto zero_one = Signature(0, 1, {s.runs().begin(), s.runs().end()});
        if (!zero_one.has_periods()) {
            continue;
        }
        auto c = commutator_signature_01(zero_one);
        EXPECT_EQ(c, torsion_kernel_signature(zero_one)) << zero_one.str();
        if (is_hyperbolic(zero_one)) {
            EXPECT_GE(c.subgroup.genus(), 1) << zero_one.str();
        }
    }
}

TEST(Tower, S4)
{
    auto t = derived_tower(sig(0, 0, {2, 3, 4}), 4);
    ASSERT_EQ(t.steps.size(), 3u);
    EXPECT_EQ(t.steps[0].signature, sig(0, 0, {3, 3, 2}));
    EXPECT_EQ(t.steps[1].signature, sig(0, 0, {2, 2, 2}));
    EXPECT_EQ(t.steps[2].signature, sig(0, 0));
    EXPECT_EQ(quotient_orders(t), (std::vector<BigInt> {2, 3, 4}));
    EXPECT_EQ(t.status(), TowerStatus::TorsionFreeReached);
}

TEST(Tower, FenchelExample)
{
    auto t = derived_tower(sig(0, 0, {5, 6, 14}), 2);
    ASSERT_EQ(t.steps.size(), 2u);
    EXPECT_EQ(t.steps[0].signature, sig(0, 0, {5, 5, 3, 7}));
    EXPECT_EQ(t.steps[1].signature, sig(0, 0, {3, 3, 3, 3, 3, 7, 7, 7, 7, 7}));
    EXPECT_EQ(quotient_orders(t), (std::vector<BigInt> {2, 5}));
}

TEST(Tower, PerfectStopsImmediately)
{
    for (std::size_t depth : {1u, 5u}) {
        auto t = derived_tower(sig(0, 0, {2, 3, 5}), depth);
        EXPECT_TRUE(t.steps.empty());
        EXPECT_EQ(t.status(), TowerStatus::Perfect);
    }
}

TEST(Tower, QuotientOrdersMatchPermutationGroupDerivedSeries)
{
    // finite groups with a faithful transitive action of small degree
    const std::vector<std::pair<Signature, std::size_t>> cases {
        {sig(0, 0, {2, 3, 4}), 4}, {sig(0, 0, {2, 3, 3}), 4}, {sig(0, 0, {2, 2, 3}), 3}, {sig(0, 0, {2, 2, 4}), 4},
        {sig(0, 0, {2, 2, 5}), 5}, {sig(0, 0, {2, 2, 6}), 6}, {sig(0, 0, {2, 2, 7}), 7},
    };
    for (const auto& [s, degree] : cases) {
        auto order = std::get<NonHyperbolicEntry>(classify_nonhyperbolic(s)).order.value();
        bool found = false;
        for_each_perm_hom(s, degree, [&](const PermHom& h) {
            auto series = oracle::derived_series_orders(h.images.flat(), degree);
            if (BigInt(series.front()) != order) {
                return true;
            }
            found = true;
            auto t = derived_tower(s, 8);
            EXPECT_EQ(t.status(), TowerStatus::TorsionFreeReached) << s.str();
            EXPECT_EQ(t.steps.size() + 1, series.size()) << s.str();
            if (t.steps.size() + 1 != series.size()) {
                return false;
            }
            for (std::size_t i = 0; i < t.steps.size(); ++i) {
                EXPECT_EQ(t.steps[i].quotient_order, BigInt(series[i] / series[i + 1])) << s.str();
            }
            return false;
        });
        EXPECT_TRUE(found) << s.str();
    }
}

TEST(MDerivedPerfect, Examples)
{
    EXPECT_EQ(m_derived_perfect(sig(0, 0, {2, 3, 5}), 0), Tri::True);
    EXPECT_EQ(m_derived_perfect(sig(0, 0, {2, 3, 4}), 2), Tri::False);
    EXPECT_EQ(m_derived_perfect(sig(0, 0, {2, 3, 4}), 3), Tri::True);
    EXPECT_EQ(m_derived_perfect(sig(0, 3, {2}), 5), Tri::False);
}

TEST(S4Uniqueness, Scan)
{
    EXPECT_EQ(s4_uniqueness_scan(60), (std::vector<Signature> {sig(0, 0, {2, 3, 4})}));
    EXPECT_EQ(s4_uniqueness_scan(24), (std::vector<Signature> {sig(0, 0, {2, 3, 4})}));
    EXPECT_TRUE(s4_uniqueness_scan(23).empty());
}

TEST(Tower, StepsSatisfyRiemannHurwitz)
{
    oracle::SignatureGen gen(33);
    for (int i = 0; i < 200; ++i) {
        auto s = gen();
        auto t = derived_tower(s, 3);
        const Signature* prev = &t.base;
        for (const auto& step : t.steps) {
            EXPECT_EQ(euler_characteristic(step.signature),
                      Rational(step.quotient_order) * euler_characteristic(*prev))
                << s.str();
            prev = &step.signature;
        }
    }
}
