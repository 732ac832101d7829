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

} // namespace

TEST(Chen, Examples)
{
    EXPECT_EQ(chen_ranks(sig(0, 3)), (ChenData {2, 1, ChenShape::Free}));
    EXPECT_EQ(chen_ranks(sig(2, 0)), (ChenData {4, 5, ChenShape::Surface}));
    EXPECT_EQ(code_of([] { chen_ranks(sig(0, 0, {2, 2})); }), ErrorCode::HasTorsion);
    EXPECT_EQ(code_of([] { chen_ranks(sig(1, 0)); }), ErrorCode::AbelianShape);
    EXPECT_EQ(code_of([] { chen_ranks(sig(0, 2)); }), ErrorCode::AbelianShape);
}

TEST(Chen, AffinenessEquation)
{
    EXPECT_TRUE(affineness_equation({2, 1, ChenShape::Free}));
    EXPECT_FALSE(affineness_equation({4, 5, ChenShape::Surface}));
    EXPECT_TRUE(affineness_equation({5, 10, ChenShape::Free}));
}

TEST(Chen, EquationDetectsCusps)
{
    for (std::int64_t g = 0; g <= 6; ++g) {
        for (std::int64_t r = 0; r <= 6; ++r) {
            auto s = sig(g, r);
            if (abelian_free_rank(s) < 2 || s == sig(1, 0)) {
                continue;
            }
            EXPECT_EQ(affineness_equation(chen_ranks(s)), r >= 1) << s.str();
        }
    }
}

TEST(Heisenberg, GroupLaws)
{
    for (std::int64_t ell : {2, 3, 5}) {
        Heisenberg h(ell);
        Heisenberg::Element x {1, 0, 0}, y {0, 1, 0};
        auto z = h.commutator(x, y);
        EXPECT_NE(z, h.identity());
        EXPECT_EQ(h.pow(z, ell), h.identity());
        EXPECT_EQ(h.mul(z, x), h.mul(x, z));
        EXPECT_EQ(h.mul(x, h.inv(x)), h.identity());
        EXPECT_TRUE(heisenberg_detects(ell, ell * 3));
    }
}

TEST(MetabelianTorsion, Examples)
{
    EXPECT_TRUE(metabelian_torsion_free(sig(1, 0)).torsion_free);
    auto a = metabelian_torsion_free(sig(1, 0, {2}));
    EXPECT_FALSE(a.torsion_free);
    EXPECT_EQ(a.witness, "Heisenberg quotient H_2 detects δ of order 2");
    auto b = metabelian_torsion_free(sig(0, 1, {3}));
    EXPECT_FALSE(b.torsion_free);
    EXPECT_EQ(b.witness.rfind("δ survives in Δ^ab", 0), 0u);
}

TEST(MetabelianTorsion, AgreesWithPeriodsOnRandomInputs)
{
    oracle::SignatureGen gen(51);
    for (int i = 0; i < 500; ++i) {
        auto s = gen();
        if (is_perfect(s)) {
            EXPECT_EQ(code_of([&] { metabelian_torsion_free(s); }), ErrorCode::PerfectInput);
            continue;
        }
        EXPECT_EQ(metabelian_torsion_free(s).torsion_free, !s.has_periods()) << s.str();
    }
}

TEST(DerivedLength, Examples)
{
    EXPECT_EQ(derived_length_upto3(sig(0, 0, {2, 3, 6})), 2);
    EXPECT_EQ(derived_length_upto3(sig(0, 0, {2, 3, 4})), 3);
    EXPECT_EQ(derived_length_upto3(sig(0, 0, {2, 4, 3})), 3);
    EXPECT_EQ(derived_length_upto3(sig(0, 0, {2, 2, 3})), 2);
    EXPECT_EQ(derived_length_upto3(sig(0, 0, {2, 2, 2})), 1);
}

TEST(DerivedLength, HyperbolicSamplesHaveLengthThreeQuotients)
{
    // solvable images of derived length 3 found by bounded search
    for (auto s : {sig(0, 0, {2, 2, 3, 4}), sig(0, 2, {2}), sig(0, 1, {2, 3}), sig(0, 0, {3, 4, 4})}) {
        ASSERT_TRUE(is_hyperbolic(s));
        EXPECT_EQ(derived_length_upto3(s), 3);
        bool found = false;
        for (std::size_t degree = 2; degree <= 4 && !found; ++degree) {
            for_each_perm_hom(s, degree, [&](const PermHom& h) {
                found = oracle::derived_length(h.images.flat(), degree) >= 3;
                return !found;
            });
        }
        EXPECT_TRUE(found) << s.str();
    }
}

TEST(ThreeStep, Hyperbolicity)
{
    EXPECT_FALSE(hyperbolic_3step_check(sig(0, 0, {2, 3, 4})));
    EXPECT_TRUE(hyperbolic_3step_check(sig(0, 0, {2, 4, 5})));
    EXPECT_FALSE(hyperbolic_3step_check(sig(0, 0, {3, 3, 3})));
    EXPECT_EQ(code_of([] { hyperbolic_3step_check(sig(0, 0, {2, 3, 5})); }), ErrorCode::PerfectInput);
}

TEST(ThreeStep, SigmaFamilySeparatesAtTwo)
{
    EXPECT_FALSE(hyperbolic_3step_check(sig(0, 0, {2, 2, 3})));
    EXPECT_FALSE(hyperbolic_3step_check(sig(0, 0, {2, 4, 3})));
    for (std::int64_t n = 3; n <= 8; ++n) {
        auto s = Signature::of(0, 0, std::vector<std::int64_t> {2, std::int64_t {1} << n, 3});
        EXPECT_TRUE(is_hyperbolic(s));
        EXPECT_TRUE(hyperbolic_3step_check(s)) << s.str();
        EXPECT_EQ(derived_length_upto3(s), 3);
    }
}

TEST(ThreeStep, MatchesCurvatureOnRandomInputs)
{
    oracle::SignatureGen gen(52);
    for (int i = 0; i < 600; ++i) {
        auto s = gen();
        if (is_perfect(s)) {
            continue;
        }
        EXPECT_EQ(hyperbolic_3step_check(s), is_hyperbolic(s)) << s.str();
    }
}

TEST(ThreeStep, Affineness)
{
    EXPECT_TRUE(affineness_3step_check(sig(0, 3, {2})));
    EXPECT_FALSE(affineness_3step_check(sig(2, 0)));
    EXPECT_EQ(code_of([] { affineness_3step_check(sig(1, 0)); }), ErrorCode::DomainError);
}
