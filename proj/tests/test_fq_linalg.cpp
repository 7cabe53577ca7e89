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

#include <sstream>

#include "test_util.hpp"

namespace qtwoblock {
namespace {

using testing::random_matrix;

TEST(FpMatrix, Basics) {
    PrimeField f(3);
    auto m = FpMatrix::from_rows(f, {{1, -1, 4}, {0, 2, 3}});
    EXPECT_EQ(m(0, 1), 2);
    EXPECT_EQ(m(0, 2), 1);
    EXPECT_EQ(m(1, 2), 0);
    EXPECT_EQ(transpose(transpose(m)), m);
    EXPECT_THROW(FpMatrix::from_rows(f, {{1, 2}, {1}}), InputError);
    EXPECT_THROW(FpMatrix(f, 2, 2, {1, 2, 3}), InputError);
    EXPECT_THROW(matmul(m, m), InputError);
    EXPECT_THROW(matadd(m, FpMatrix(PrimeField(2), 2, 3)), InputError);
}

TEST(FpMatrix, RankMatchesSpanSize) {
    std::mt19937_64 rng(1);
    for (std::uint32_t p : {2u, 3u, 5u}) {
        PrimeField f(p);
        for (int t = 0; t < 60; ++t) {
            auto m = random_matrix(rng, f, 1 + rng() % 5, 1 + rng() % 6, 0.4);
            EXPECT_EQ(rank(m), testing::brute_rank(m));
        }
    }
}

TEST(FpMatrix, RrefIsReduced) {
    std::mt19937_64 rng(2);
    for (std::uint32_t p : {2u, 7u}) {
        PrimeField f(p);
        for (int t = 0; t < 50; ++t) {
            auto m = random_matrix(rng, f, 1 + rng() % 8, 1 + rng() % 80, 0.3);
            auto rr = rref(m);
            ASSERT_EQ(rr.pivots.size(), rr.rank);
            for (std::size_t i = 0; i < rr.rank; ++i) {
                EXPECT_EQ(rr.reduced(i, rr.pivots[i]), 1);
                for (std::size_t k = 0; k < rr.reduced.rows(); ++k) {
                    if (k != i) {
                        EXPECT_EQ(rr.reduced(k, rr.pivots[i]), 0);
                    }
                }
                if (i) {
                    EXPECT_LT(rr.pivots[i - 1], rr.pivots[i]);
                }
            }
            for (std::size_t i = rr.rank; i < rr.reduced.rows(); ++i) {
                for (std::size_t j = 0; j < m.cols(); ++j) {
                    EXPECT_EQ(rr.reduced(i, j), 0);
                }
            }
            // same row space
            EXPECT_EQ(rank(vstack(m, rr.reduced)), rr.rank);
        }
    }
}

TEST(FpMatrix, KernelBasis) {
    std::mt19937_64 rng(3);
    for (std::uint32_t p : {2u, 3u, 5u}) {
        PrimeField f(p);
        for (int t = 0; t < 60; ++t) {
            auto m = random_matrix(rng, f, 1 + rng() % 10, 1 + rng() % 70, 0.3);
            auto k = kernel_basis(m);
            EXPECT_EQ(k.rows(), m.cols() - rank(m));
            EXPECT_EQ(k.cols(), m.cols());
            EXPECT_EQ(rank(k), k.rows());
            EXPECT_TRUE(matmul(m, transpose(k)).is_zero());
        }
    }
    PrimeField f(2);
    EXPECT_EQ(kernel_basis(FpMatrix::identity(f, 4)).rows(), 0u);
    EXPECT_EQ(kernel_basis(FpMatrix(f, 0, 3)).rows(), 3u);
}

TEST(FpMatrix, PackedProductMatchesNaive) {
    std::mt19937_64 rng(4);
    for (std::uint32_t p : {2u, 3u}) {
        PrimeField f(p);
        for (int t = 0; t < 30; ++t) {
            std::size_t r = 1 + rng() % 20, k = 1 + rng() % 140, c = 1 + rng() % 130;
            auto a = random_matrix(rng, f, r, k), b = random_matrix(rng, f, k, c);
            EXPECT_EQ(matmul(a, b), testing::naive_matmul(a, b));
        }
    }
}

TEST(FpMatrix, Kron) {
    PrimeField f(5);
    auto a = FpMatrix::from_rows(f, {{1, 2}});
    auto b = FpMatrix::from_rows(f, {{1}, {3}});
    EXPECT_EQ(kron(a, b), FpMatrix::from_rows(f, {{1, 2}, {3, 6}}));
    std::mt19937_64 rng(5);
    // mixed product property
    for (int t = 0; t < 20; ++t) {
        auto a1 = random_matrix(rng, f, 2, 3), a2 = random_matrix(rng, f, 3, 2);
        auto b1 = random_matrix(rng, f, 2, 2), b2 = random_matrix(rng, f, 2, 3);
        EXPECT_EQ(matmul(kron(a1, b1), kron(a2, b2)), kron(matmul(a1, a2), matmul(b1, b2)));
    }
}

TEST(FpMatrix, Inverse) {
    std::mt19937_64 rng(6);
    for (std::uint32_t p : {2u, 3u, 11u}) {
        PrimeField f(p);
        int found = 0;
        for (int t = 0; t < 200 && found < 20; ++t) {
            auto m = random_matrix(rng, f, 6, 6);
            if (rank(m) != 6) {
                EXPECT_THROW(inverse(m), std::domain_error);
                continue;
            }
            ++found;
            EXPECT_EQ(matmul(m, inverse(m)), FpMatrix::identity(f, 6));
            EXPECT_EQ(matmul(inverse(m), m), FpMatrix::identity(f, 6));
        }
        EXPECT_GT(found, 0);
    }
    EXPECT_THROW(inverse(FpMatrix(PrimeField(2), 2, 3)), InputError);
}

TEST(FpMatrix, SmithNormalForm) {
    std::mt19937_64 rng(7);
    for (std::uint32_t p : {2u, 3u, 5u}) {
        PrimeField f(p);
        for (int t = 0; t < 50; ++t) {
            std::size_t r = 1 + rng() % 7, c = 1 + rng() % 7;
            auto m = random_matrix(rng, f, r, c, 0.3);
            auto s = smith_normal_form(m);
            EXPECT_EQ(s.rank, rank(m));
            EXPECT_EQ(matmul(matmul(s.U, s.D), s.V), m);
            EXPECT_EQ(matmul(s.U, s.U_inverse), FpMatrix::identity(f, r));
            EXPECT_EQ(rank(s.V), c);
            for (std::size_t i = 0; i < r; ++i) {
                for (std::size_t j = 0; j < c; ++j) {
                    EXPECT_EQ(s.D(i, j), (i == j && i < s.rank) ? 1 : 0);
                }
            }
        }
    }
}

TEST(FpMatrix, IdempotentPair) {
    std::mt19937_64 rng(8);
    for (std::uint32_t p : {2u, 3u, 5u}) {
        PrimeField f(p);
        for (int t = 0; t < 50; ++t) {
            std::size_t n = 1 + rng() % 8;
            auto a = random_matrix(rng, f, n, n, 0.25);
            auto [e, fm] = idempotent_pair(a);
            EXPECT_EQ(matmul(e, e), e);
            EXPECT_EQ(matmul(fm, fm), fm);
            EXPECT_EQ(matmul(e, a), a);
            EXPECT_EQ(matmul(a, fm), a);
            EXPECT_EQ(rank(e), rank(a));
            EXPECT_EQ(rank(fm), rank(a));
        }
    }
    EXPECT_THROW(idempotent_pair(FpMatrix(PrimeField(2), 2, 3)), InputError);
}

TEST(FpMatrix, FittingIdempotent) {
    PrimeField f(2);
    // nilpotent: image inside kernel
    EXPECT_FALSE(fitting_idempotent(FpMatrix::from_rows(f, {{0, 1}, {0, 0}})));
    std::mt19937_64 rng(9);
    for (std::uint32_t p : {2u, 3u, 5u}) {
        PrimeField fp(p);
        for (int t = 0; t < 80; ++t) {
            std::size_t n = 1 + rng() % 7;
            auto a = random_matrix(rng, fp, n, n, 0.3);
            auto e = fitting_idempotent(a);
            ASSERT_EQ(e.has_value(), rank(a) == rank(matmul(a, a)));
            if (!e) {
                continue;
            }
            EXPECT_EQ(matmul(*e, *e), *e);
            EXPECT_EQ(matmul(*e, a), a);
            EXPECT_EQ(matmul(a, *e), a);
            // commutes with polynomials in a
            auto poly = matadd(matmul(a, a), matadd(a, FpMatrix::identity(fp, n)));
            EXPECT_EQ(matmul(*e, poly), matmul(poly, *e));
        }
    }
}

TEST(FpMatrix, RowSpaceMembership) {
    PrimeField f(3);
    auto m = FpMatrix::from_rows(f, {{1, 1, 0}, {0, 1, 1}});
    std::vector<FieldElem> in{1, 2, 1}, out{1, 0, 0};
    EXPECT_TRUE(in_rowspace(m, in));
    EXPECT_FALSE(in_rowspace(m, out));
    std::vector<FieldElem> wrong{1, 0};
    EXPECT_THROW(in_rowspace(m, wrong), InputError);
}

TEST(FpMatrix, TextRoundTrip) {
    std::mt19937_64 rng(10);
    auto m = random_matrix(rng, PrimeField(7), 3, 5);
    std::stringstream ss;
    write_matrix(ss, m);
    EXPECT_EQ(read_matrix(ss), m);
    std::istringstream bad("2 2 2\n1 0\n1");
    EXPECT_THROW(read_matrix(bad), InputError);
    std::istringstream bad_p("1 1 4\n1");
    EXPECT_THROW(read_matrix(bad_p), InputError);
}

TEST(FpMatrix, PermutedAndStacks) {
    PrimeField f(2);
    auto m = FpMatrix::from_rows(f, {{1, 0, 1}, {0, 1, 1}});
    std::vector<std::uint32_t> rows{1, 0}, cols{2, 0, 1};
    EXPECT_EQ(permuted(m, rows, cols), FpMatrix::from_rows(f, {{1, 0, 1}, {1, 1, 0}}));
    EXPECT_EQ(hstack(m, m).cols(), 6u);
    EXPECT_EQ(vstack(m, m).rows(), 4u);
    EXPECT_THROW(hstack(m, FpMatrix(f, 3, 1)), InputError);
}

}  // namespace
}  // namespace qtwoblock
