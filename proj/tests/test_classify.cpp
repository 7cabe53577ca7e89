// Copyright 2026 The qtwoblock Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <gtest/gtest.h>

#include "test_util.hpp"

namespace qtwoblock {
namespace {

TEST(Classify, Labels) {
    PrimeField f2(2), f5(5);
    auto c6 = cyclic_group(6);
    EXPECT_EQ(classify(build_2bga(parse_element(c6, f2, "1, x"), parse_element(c6, f2, "1, x^3"))).label,
              CodeClass::Abelian);

    auto d3 = dihedral_group(3);
    auto qc = classify(build_2bga(parse_element(d3, f2, "1, r"), parse_element(d3, f2, "1, r, s")));
    EXPECT_EQ(qc.label, CodeClass::QuasiCyclicReducible);
    EXPECT_TRUE(qc.evidence.ga_cyclic);

    auto a4 = alternating4_group();
    auto ss = classify(build_2bga(parse_element(a4, f5, "1, x, y"), parse_element(a4, f5, "1, y*x, x*y")));
    EXPECT_EQ(ss.label, CodeClass::SemiAbelian);
    EXPECT_TRUE(ss.evidence.group_semisimple);

    auto odd = classify(build_2bga(parse_element(a4, f2, "1, x, y, x^-1*y*x"), parse_element(a4, f2, "1, x, y, y*x")));
    EXPECT_EQ(odd.label, CodeClass::EssentiallyNonAbelian);
    EXPECT_TRUE(odd.evidence.k_odd);
    EXPECT_EQ(odd.evidence.ga_order, 12u);
    EXPECT_EQ(odd.evidence.gb_order, 12u);
}

TEST(Classify, UnclassifiedWhenNothingApplies) {
    // A4 over F_2 with both supports generating the whole group and even k
    auto a4 = alternating4_group();
    PrimeField f(2);
    std::mt19937_64 rng(1);
    int seen = 0;
    for (int t = 0; t < 200 && !seen; ++t) {
        auto a = testing::random_element(rng, a4, f, 3), b = testing::random_element(rng, a4, f, 3);
        auto code = build_2bga(a, b);
        auto c = classify(code);
        if (!support_subgroup(a).is_cyclic() && !support_subgroup(b).is_cyclic() && code.k() % 2 == 0) {
            EXPECT_EQ(c.label, CodeClass::Unclassified);
            ++seen;
        }
    }
    EXPECT_GT(seen, 0);
}

TEST(Classify, RequiresGroupProvenance) {
    PrimeField f(2);
    auto code = build_two_block(FpMatrix::identity(f, 2), FpMatrix::identity(f, 2));
    EXPECT_THROW(classify(code), InputError);
    EXPECT_THROW(central_intersection_bound(code), InputError);
    EXPECT_THROW(hp_equivalence_check(code), InputError);
}

TEST(Classify, GbCodesAreAbelian) {
    PrimeField f(2);
    auto code = build_gb(2, parse_poly("1+x", f), parse_poly("1+x", f));
    EXPECT_EQ(classify(code).label, CodeClass::Abelian);
}

TEST(CentralBound, HoldsOnSupportsInSubgroups) {
    std::mt19937_64 rng(2);
    int applicable = 0;
    for (const auto &g : {cyclic_group(4), cyclic_group(6), direct_product(*cyclic_group(2), *cyclic_group(2))}) {
        for (std::uint32_t p : {2u, 3u}) {
            PrimeField f(p);
            for (int t = 0; t < 10; ++t) {
                auto a = testing::random_element(rng, g, f, 1 + rng() % 3);
                auto b = testing::random_element(rng, g, f, 1 + rng() % 3);
                auto code = build_2bga(a, b);
                auto rep = central_intersection_bound(code);
                EXPECT_TRUE(rep.central);
                EXPECT_EQ(rep.c, intersection(support_subgroup(a), support_subgroup(b)).order());
                if (!rep.applicable) {
                    continue;
                }
                ++applicable;
                auto dz = css_distance_exact(code, CssSide::Z);
                if (rep.bound) {
                    EXPECT_FALSE(distance_less(dz.value, rep.bound));
                }
            }
        }
    }
    EXPECT_GT(applicable, 0);
}

TEST(CentralBound, NonCentralIntersection) {
    auto a4 = alternating4_group();
    PrimeField f(3);
    auto code = build_2bga(parse_element(a4, f, "1, x"), parse_element(a4, f, "1, x, y"));
    auto rep = central_intersection_bound(code);
    EXPECT_EQ(rep.c, 3u);
    EXPECT_FALSE(rep.central);
    EXPECT_FALSE(rep.applicable);
    EXPECT_FALSE(rep.bound);
}

TEST(HypergraphProduct, ToricCode) {
    // repetition-code cycle checks give the 3x3 toric code [[18,2,3]]
    PrimeField f(2);
    auto h = FpMatrix::from_rows(f, {{1, 1, 0}, {0, 1, 1}, {1, 0, 1}});
    auto hp = hp_build(h, h);
    EXPECT_EQ(hp.n(), 18u);
    EXPECT_EQ(hp.k(), 2u);
    EXPECT_EQ(css_distance_exact(hp.hx, hp.hz, CssSide::Z).value, 3u);
    EXPECT_EQ(css_distance_exact(hp.hx, hp.hz, CssSide::X).value, 3u);
}

TEST(HypergraphProduct, OrthogonalInOddCharacteristic) {
    std::mt19937_64 rng(3);
    for (std::uint32_t p : {3u, 5u}) {
        PrimeField f(p);
        auto h1 = testing::random_matrix(rng, f, 3, 4), h2 = testing::random_matrix(rng, f, 2, 3);
        auto hp = hp_build(h1, h2);
        EXPECT_EQ(hp.n(), 4u * 3u + 3u * 2u);
        EXPECT_TRUE(matmul(hp.hx, transpose(hp.hz)).is_zero());
    }
}

TEST(HypergraphProduct, EquivalenceAtTrivialIntersection) {
    PrimeField f(2);
    auto v = direct_product(*cyclic_group(2), *cyclic_group(2));
    auto rep = hp_equivalence_check(build_2bga(parse_element(v, f, "1, x"), parse_element(v, f, "1, y")));
    ASSERT_TRUE(rep.applicable);
    EXPECT_TRUE(rep.parameters_equal);
    EXPECT_EQ(rep.n_hp, 8u);
    EXPECT_EQ(rep.k_hp, 2u);

    auto c6 = direct_product(*cyclic_group(2), *cyclic_group(3));
    auto rep2 = hp_equivalence_check(build_2bga(parse_element(c6, f, "1, x"), parse_element(c6, f, "1, y")));
    ASSERT_TRUE(rep2.applicable);
    EXPECT_TRUE(rep2.parameters_equal);

    auto not_app = hp_equivalence_check(build_2bga(parse_element(v, f, "1, x"), parse_element(v, f, "1, x, y")));
    EXPECT_FALSE(not_app.applicable);
    EXPECT_FALSE(not_app.reason.empty());
}

TEST(HypergraphProduct, EquivalenceOverNonAbelianFactorization) {
    // D_3 = <r> <s>, G_a = <r>, G_b = <s>
    PrimeField f(3);
    auto d3 = dihedral_group(3);
    auto rep = hp_equivalence_check(build_2bga(parse_element(d3, f, "1, 2*r"), parse_element(d3, f, "1, s")));
    ASSERT_TRUE(rep.applicable);
    EXPECT_TRUE(rep.parameters_equal);
}

}  // namespace
}  // namespace qtwoblock
