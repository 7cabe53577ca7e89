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

#ifndef QTWOBLOCK_DISTANCE_HPP
#define QTWOBLOCK_DISTANCE_HPP

#include <algorithm>
#include <bit>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <optional>
#include <random>
#include <span>
#include <stdexcept>
#include <utility>
#include <vector>

#include "qtwoblock/error.hpp"
#include "qtwoblock/fq_linalg.hpp"
#include "qtwoblock/two_block_code.hpp"

namespace qtwoblock {

inline constexpr std::uint64_t kDefaultBudget = std::uint64_t{1} << 26;

enum class CssSide { X, Z };

enum class DistanceMethod { ExhaustiveKernel, RandomInformationSet };

inline const char *to_string(DistanceMethod m) {
    return m == DistanceMethod::ExhaustiveKernel ? "exhaustive-kernel" : "random-information-set";
}

inline const char *to_string(CssSide s) {
    return s == CssSide::X ? "X" : "Z";
}

struct DistanceResult {
    std::optional<std::size_t> value;  ///< nullopt means infinity
    bool exact = false;
    DistanceMethod method = DistanceMethod::ExhaustiveKernel;
    std::uint64_t examined = 0;
    std::optional<std::uint64_t> seed;
    std::vector<FieldElem> witness;  ///< achieving vector, empty for infinity

    bool is_infinite() const noexcept {
        return !value.has_value();
    }
};

/// Orders finite values below infinity.
inline bool distance_less(const std::optional<std::size_t> &a, const std::optional<std::size_t> &b) {
    if (!a) {
        return false;
    }
    return !b || *a < *b;
}

namespace detail {

/// Basis of a space V split into a "trivial" part (a basis of the
/// degeneracy subspace S) followed by complement rows; a vector of V is
/// nontrivial iff some complement coefficient is nonzero.
struct SplitBasis {
    FpMatrix rows;
    std::size_t trivial_count;

    std::size_t dim() const noexcept {
        return rows.rows();
    }
};

/// Incremental reduced echelon basis used to extend a basis.
class EchelonBuilder {
   public:
    EchelonBuilder(PrimeField field, std::size_t cols) : field_(field), cols_(cols) {
    }
    /// Adds v if independent; returns whether it was added.
    bool insert(std::span<const FieldElem> v) {
        std::vector<FieldElem> w(v.begin(), v.end());
        reduce(w);
        auto lead = std::find_if(w.begin(), w.end(), [](FieldElem x) { return x != 0; });
        if (lead == w.end()) {
            return false;
        }
        auto s = field_.inv(*lead);
        for (auto &x : w) {
            x = field_.mul(x, s);
        }
        pivots_.push_back(static_cast<std::size_t>(lead - w.begin()));
        rows_.push_back(std::move(w));
        return true;
    }

   private:
    void reduce(std::vector<FieldElem> &w) const {
        for (std::size_t i = 0; i < rows_.size(); ++i) {
            auto c = w[pivots_[i]];
            if (!c) {
                continue;
            }
            for (std::size_t j = 0; j < cols_; ++j) {
                if (rows_[i][j]) {
                    w[j] = field_.sub(w[j], field_.mul(c, rows_[i][j]));
                }
            }
        }
    }

    PrimeField field_;
    std::size_t cols_;
    std::vector<std::vector<FieldElem>> rows_;
    std::vector<std::size_t> pivots_;
};

/// ker(h_kernel) with the row space of h_trivial placed first.
inline SplitBasis split_kernel_basis(const FpMatrix &h_kernel, const FpMatrix *h_trivial) {
    const auto &F = h_kernel.field();
    const std::size_t n = h_kernel.cols();
    auto ker = kernel_basis(h_kernel);
    std::vector<std::vector<FieldElem>> out;
    EchelonBuilder eb(F, n);
    std::size_t trivial = 0;
    if (h_trivial) {
        auto rr = rref(*h_trivial);
        for (std::size_t i = 0; i < rr.rank; ++i) {
            auto r = rr.reduced.row(i);
            eb.insert(r);
            out.emplace_back(r.begin(), r.end());
        }
        trivial = rr.rank;
    }
    for (std::size_t i = 0; i < ker.rows(); ++i) {
        if (eb.insert(ker.row(i))) {
            out.emplace_back(ker.row(i).begin(), ker.row(i).end());
        }
    }
    if (out.size() != ker.rows()) {
        throw std::logic_error("degeneracy subspace is not contained in the kernel");
    }
    FpMatrix rows(F, out.size(), n);
    for (std::size_t i = 0; i < out.size(); ++i) {
        std::copy(out[i].begin(), out[i].end(), rows.row(i).begin());
    }
    return {std::move(rows), trivial};
}

/// q^dim, or nullopt when it exceeds `budget`.
inline std::optional<std::uint64_t> enumeration_size(std::uint32_t q, std::size_t dim, std::uint64_t budget) {
    std::uint64_t total = 1;
    for (std::size_t i = 0; i < dim; ++i) {
        if (total > budget / q) {
            return std::nullopt;
        }
        total *= q;
    }
    return total;
}

/// Lexicographic comparison on entries (index 0 first) of packed binary vectors.
inline bool packed_less(const std::vector<std::uint64_t> &a, const std::vector<std::uint64_t> &b) {
    for (std::size_t w = 0; w < a.size(); ++w) {
        if (auto d = a[w] ^ b[w]) {
            return (a[w] & (d & (~d + 1))) == 0;
        }
    }
    return false;
}

/// Minimum weight over all vectors of the span with a nonzero complement
/// coefficient, by modular q-ary Gray code over basis coefficients: step m
/// adds basis row t once, with t the number of trailing zero base-q digits of m.
inline DistanceResult enumerate_min_weight(const SplitBasis &basis, std::uint64_t budget) {
    const auto &F = basis.rows.field();
    const std::uint32_t q = F.p();
    const std::size_t dim = basis.dim(), n = basis.rows.cols();
    DistanceResult res;
    res.method = DistanceMethod::ExhaustiveKernel;
    if (basis.trivial_count == dim) {
        res.exact = true;
        return res;  // every kernel vector is trivial
    }
    auto total = enumeration_size(q, dim, budget);
    if (!total) {
        throw BudgetExceeded(dim, budget);
    }
    std::size_t best = std::numeric_limits<std::size_t>::max();
    std::size_t nontrivial_digits = 0;
    std::vector<std::uint32_t> digits(dim, 0);
    std::uint64_t examined = 1;  // the zero vector

    if (F.is_binary()) {
        Gf2Rows rows(basis.rows);
        const std::size_t words = rows.words();
        std::vector<std::uint64_t> cur(words, 0), best_vec(words, 0);
        for (std::uint64_t step = 1; step < *total; ++step) {
            auto t = static_cast<std::size_t>(std::countr_zero(step));
            const auto *r = rows.row(t);
            for (std::size_t w = 0; w < words; ++w) {
                cur[w] ^= r[w];
            }
            digits[t] ^= 1u;
            if (t >= basis.trivial_count) {
                nontrivial_digits += digits[t] ? 1 : std::size_t(-1);
            }
            ++examined;
            if (nontrivial_digits == 0) {
                continue;
            }
            std::size_t wt = 0;
            for (std::size_t w = 0; w < words; ++w) {
                wt += static_cast<std::size_t>(std::popcount(cur[w]));
            }
            if (wt < best || (wt == best && packed_less(cur, best_vec))) {
                best = wt;
                best_vec = cur;
            }
        }
        if (best != std::numeric_limits<std::size_t>::max()) {
            res.witness.assign(n, 0);
            for (std::size_t c = 0; c < n; ++c) {
                res.witness[c] = static_cast<FieldElem>((best_vec[c / 64] >> (c % 64)) & 1u);
            }
        }
    } else {
        std::vector<FieldElem> cur(n, 0), best_vec;
        std::size_t wt = 0;
        for (std::uint64_t step = 1; step < *total; ++step) {
            std::size_t t = 0;
            for (auto m = step; m % q == 0; m /= q) {
                ++t;
            }
            auto r = basis.rows.row(t);
            for (std::size_t j = 0; j < n; ++j) {
                if (!r[j]) {
                    continue;
                }
                bool was = cur[j] != 0;
                cur[j] = F.add(cur[j], r[j]);
                bool now = cur[j] != 0;
                wt += now;
                wt -= was;
            }
            bool was_nonzero = digits[t] != 0;
            digits[t] = (digits[t] + 1) % q;
            if (t >= basis.trivial_count) {
                bool now_nonzero = digits[t] != 0;
                nontrivial_digits += now_nonzero;
                nontrivial_digits -= was_nonzero;
            }
            ++examined;
            if (nontrivial_digits == 0) {
                continue;
            }
            if (wt < best || (wt == best && cur < best_vec)) {
                best = wt;
                best_vec = cur;
            }
        }
        res.witness = std::move(best_vec);
    }
    if (examined != *total) {
        throw std::logic_error("enumeration count mismatch");
    }
    res.examined = examined;
    res.exact = true;
    if (best != std::numeric_limits<std::size_t>::max()) {
        res.value = best;
    }
    return res;
}

inline std::size_t weight(std::span<const FieldElem> v) {
    return static_cast<std::size_t>(std::count_if(v.begin(), v.end(), [](FieldElem x) { return x != 0; }));
}

inline std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ull;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
    return x ^ (x >> 31);
}

/// Uniform integer in [0, bound) from a 64-bit engine, by rejection.
inline std::uint64_t uniform_below(std::mt19937_64 &rng, std::uint64_t bound) {
    const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() - std::numeric_limits<std::uint64_t>::max() % bound;
    std::uint64_t x;
    do {
        x = rng();
    } while (x >= limit);
    return x % bound;
}

}  // namespace detail

/// Exact d_Z (kernel of H_X outside the row space of H_Z) or d_X (roles swapped).
inline DistanceResult css_distance_exact(const FpMatrix &hx, const FpMatrix &hz, CssSide side,
                                         std::uint64_t budget = kDefaultBudget) {
    const FpMatrix &h_kernel = side == CssSide::Z ? hx : hz;
    const FpMatrix &h_trivial = side == CssSide::Z ? hz : hx;
    auto basis = detail::split_kernel_basis(h_kernel, &h_trivial);
    auto res = detail::enumerate_min_weight(basis, budget);
    if (res.value) {
        // audit the witness
        auto wt = FpMatrix(hx.field(), 1, res.witness.size(), res.witness);
        if (!matmul(h_kernel, transpose(wt)).is_zero() || in_rowspace(h_trivial, res.witness) ||
            detail::weight(res.witness) != *res.value) {
            throw std::logic_error("distance witness failed verification");
        }
    }
    return res;
}

inline DistanceResult css_distance_exact(const TwoBlockCode &code, CssSide side,
                                         std::uint64_t budget = kDefaultBudget) {
    return css_distance_exact(code.hx(), code.hz(), side, budget);
}

/// Randomized information-set upper bound. Each iteration draws a column
/// permutation from mt19937_64 seeded with splitmix64(seed + iteration),
/// brings the kernel generator matrix to reduced form on the permuted
/// columns, and examines every row and every combination r_i + c r_j.
inline DistanceResult css_distance_upper(const FpMatrix &hx, const FpMatrix &hz, CssSide side,
                                         std::uint64_t iterations, std::uint64_t seed) {
    if (iterations < 1) {
        throw InputError("iterations must be at least 1");
    }
    const FpMatrix &h_kernel = side == CssSide::Z ? hx : hz;
    const FpMatrix &h_trivial = side == CssSide::Z ? hz : hx;
    const auto &F = hx.field();
    const std::size_t n = h_kernel.cols();
    auto gen = kernel_basis(h_kernel);
    RowSpace trivial(h_trivial);
    DistanceResult res;
    res.method = DistanceMethod::RandomInformationSet;
    res.exact = false;
    res.seed = seed;
    if (gen.rows() == trivial.dim()) {
        return res;  // no logical operators
    }
    std::size_t best = std::numeric_limits<std::size_t>::max();
    std::vector<FieldElem> best_vec;
    std::vector<FieldElem> cand(n);
    auto consider = [&](const std::vector<FieldElem> &v) {
        ++res.examined;
        auto w = detail::weight(v);
        if (w == 0 || w > best || (w == best && !(v < best_vec))) {
            return;
        }
        if (trivial.contains(v)) {
            return;
        }
        best = w;
        best_vec = v;
    };
    std::vector<std::uint32_t> perm(n);
    for (std::uint64_t it = 0; it < iterations; ++it) {
        std::mt19937_64 rng(detail::splitmix64(seed + it));
        for (std::size_t i = 0; i < n; ++i) {
            perm[i] = static_cast<std::uint32_t>(i);
        }
        for (std::size_t i = n; i > 1; --i) {
            std::swap(perm[i - 1], perm[detail::uniform_below(rng, i)]);
        }
        std::vector<std::uint32_t> identity_rows(gen.rows());
        for (std::size_t i = 0; i < gen.rows(); ++i) {
            identity_rows[i] = static_cast<std::uint32_t>(i);
        }
        auto reduced = rref(permuted(gen, identity_rows, perm)).reduced;
        std::vector<std::uint32_t> inv(n);
        for (std::size_t i = 0; i < n; ++i) {
            inv[perm[i]] = static_cast<std::uint32_t>(i);
        }
        auto rows = permuted(reduced, identity_rows, inv);
        for (std::size_t i = 0; i < rows.rows(); ++i) {
            cand.assign(rows.row(i).begin(), rows.row(i).end());
            consider(cand);
            for (std::size_t j = i + 1; j < rows.rows(); ++j) {
                for (std::uint32_t c = 1; c < F.p(); ++c) {
                    auto ri = rows.row(i), rj = rows.row(j);
                    for (std::size_t t = 0; t < n; ++t) {
                        cand[t] = F.add(ri[t], F.mul(static_cast<FieldElem>(c), rj[t]));
                    }
                    consider(cand);
                }
            }
        }
    }
    if (best != std::numeric_limits<std::size_t>::max()) {
        res.value = best;
        res.witness = std::move(best_vec);
    }
    return res;
}

inline DistanceResult css_distance_upper(const TwoBlockCode &code, CssSide side, std::uint64_t iterations,
                                         std::uint64_t seed) {
    return css_distance_upper(code.hx(), code.hz(), side, iterations, seed);
}

/// Minimum weight of a nonzero vector of ker h (infinity for a trivial kernel).
inline DistanceResult classical_kernel_distance(const FpMatrix &h, std::uint64_t budget = kDefaultBudget) {
    auto basis = detail::split_kernel_basis(h, nullptr);
    return detail::enumerate_min_weight(basis, budget);
}

struct CssLowerBounds {
    DistanceResult dz_lower;  ///< d(C_{H_X}^perp)
    DistanceResult dx_lower;  ///< d(C_{H_Z}^perp)
};

/// Usual CSS bounds d_Z >= d(ker H_X), d_X >= d(ker H_Z). Each is at most
/// the minimum row weight of the other matrix, so they are weak for LDPC codes.
inline CssLowerBounds css_lower_bound(const FpMatrix &hx, const FpMatrix &hz,
                                      std::uint64_t budget = kDefaultBudget) {
    return {classical_kernel_distance(hx, budget), classical_kernel_distance(hz, budget)};
}

inline CssLowerBounds css_lower_bound(const TwoBlockCode &code, std::uint64_t budget = kDefaultBudget) {
    return css_lower_bound(code.hx(), code.hz(), budget);
}

}  // namespace qtwoblock

#endif
