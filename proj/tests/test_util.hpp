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

#ifndef QTWOBLOCK_TESTS_TEST_UTIL_HPP
#define QTWOBLOCK_TESTS_TEST_UTIL_HPP

#include <cstdint>
#include <optional>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "qtwoblock/qtwoblock.hpp"

namespace qtwoblock::testing {

inline FieldElem random_elem(std::mt19937_64 &rng, const PrimeField &f) {
    return static_cast<FieldElem>(rng() % f.p());
}

inline FpMatrix random_matrix(std::mt19937_64 &rng, const PrimeField &f, std::size_t r, std::size_t c,
                              double density = 0.5) {
    FpMatrix m(f, r, c);
    std::bernoulli_distribution keep(density);
    for (std::size_t i = 0; i < r; ++i) {
        for (std::size_t j = 0; j < c; ++j) {
            if (keep(rng)) {
                m.set(i, j, static_cast<FieldElem>(1 + rng() % (f.p() - 1)));
            }
        }
    }
    return m;
}

/// Random element with the given number of nonzero coefficients.
inline GroupAlgebraElement random_element(std::mt19937_64 &rng, const GroupPtr &g, const PrimeField &f,
                                          std::size_t weight) {
    std::vector<ElementIndex> idx(g->order());
    for (ElementIndex i = 0; i < idx.size(); ++i) {
        idx[i] = i;
    }
    std::shuffle(idx.begin(), idx.end(), rng);
    std::vector<FieldElem> c(g->order(), 0);
    for (std::size_t i = 0; i < std::min(weight, idx.size()); ++i) {
        c[idx[i]] = static_cast<FieldElem>(1 + rng() % (f.p() - 1));
    }
    return GroupAlgebraElement(g, f, std::move(c));
}

/// A small menagerie of groups of order <= max_order.
inline std::vector<GroupPtr> small_groups(std::size_t max_order) {
    std::vector<GroupPtr> out;
    for (std::size_t l = 1; l <= max_order; ++l) {
        out.push_back(cyclic_group(l));
    }
    for (std::size_t n = 2; 2 * n <= max_order; ++n) {
        out.push_back(dihedral_group(n));
    }
    auto c2 = cyclic_group(2), c3 = cyclic_group(3), c4 = cyclic_group(4);
    for (auto [a, b] : {std::pair{c2, c2}, {c2, c3}, {c2, c4}, {c3, c3}, {c2, cyclic_group(6)}, {c4, c4}}) {
        if (a->order() * b->order() <= max_order) {
            out.push_back(direct_product(*a, *b));
        }
    }
    if (max_order >= 12) {
        out.push_back(alternating4_group());
    }
    if (max_order >= 24) {
        out.push_back(direct_product(*alternating4_group(), *c2));
    }
    return out;
}

inline std::vector<ElementIndex> random_permutation(std::mt19937_64 &rng, std::size_t n, bool keep_zero = true) {
    std::vector<ElementIndex> p(n);
    for (ElementIndex i = 0; i < n; ++i) {
        p[i] = i;
    }
    std::shuffle(p.begin() + (keep_zero ? 1 : 0), p.end(), rng);
    return p;
}

/// All vectors of the row space, by closure (q^rank of them).
inline std::set<std::vector<FieldElem>> brute_span(const FpMatrix &m) {
    const auto &f = m.field();
    std::set<std::vector<FieldElem>> span{std::vector<FieldElem>(m.cols(), 0)};
    for (std::size_t r = 0; r < m.rows(); ++r) {
        std::set<std::vector<FieldElem>> next;
        for (const auto &v : span) {
            for (std::uint32_t c = 0; c < f.p(); ++c) {
                auto w = v;
                for (std::size_t j = 0; j < m.cols(); ++j) {
                    w[j] = f.add(w[j], f.mul(static_cast<FieldElem>(c), m(r, j)));
                }
                next.insert(std::move(w));
            }
        }
        span = std::move(next);
    }
    return span;
}

inline std::size_t brute_rank(const FpMatrix &m) {
    auto size = brute_span(m).size();
    std::size_t r = 0;
    while (size > 1) {
        size /= m.field().p();
        ++r;
    }
    return r;
}

/// min weight over ker(h_kernel) \ rowspace(h_trivial) by running over all of F_q^n.
inline std::optional<std::size_t> brute_css_distance(const FpMatrix &h_kernel, const FpMatrix &h_trivial) {
    const auto &f = h_kernel.field();
    const std::size_t n = h_kernel.cols();
    auto trivial = brute_span(h_trivial);
    std::optional<std::size_t> best;
    std::vector<FieldElem> v(n, 0);
    while (true) {
        std::size_t i = 0;
        while (i < n && v[i] == f.p() - 1) {
            v[i++] = 0;
        }
        if (i == n) {
            break;
        }
        ++v[i];
        std::size_t w = 0;
        for (auto x : v) {
            w += x != 0;
        }
        if (best && w >= *best) {
            continue;
        }
        bool in_kernel = true;
        for (std::size_t r = 0; r < h_kernel.rows() && in_kernel; ++r) {
            std::uint32_t s = 0;
            for (std::size_t j = 0; j < n; ++j) {
                s = (s + std::uint32_t(h_kernel(r, j)) * v[j]) % f.p();
            }
            in_kernel = s == 0;
        }
        if (in_kernel && !trivial.count(v)) {
            best = w;
        }
    }
    return best;
}

/// Bitmask variant for F_2 and n <= 32.
inline std::optional<std::size_t> brute_css_distance_gf2(const FpMatrix &h_kernel, const FpMatrix &h_trivial) {
    const std::size_t n = h_kernel.cols();
    auto pack = [&](const FpMatrix &m, std::size_t r) {
        std::uint32_t x = 0;
        for (std::size_t j = 0; j < n; ++j) {
            x |= std::uint32_t(m(r, j) & 1u) << j;
        }
        return x;
    };
    std::vector<std::uint32_t> checks;
    for (std::size_t r = 0; r < h_kernel.rows(); ++r) {
        checks.push_back(pack(h_kernel, r));
    }
    std::set<std::uint32_t> trivial{0};
    for (std::size_t r = 0; r < h_trivial.rows(); ++r) {
        auto row = pack(h_trivial, r);
        std::set<std::uint32_t> next = trivial;
        for (auto t : trivial) {
            next.insert(t ^ row);
        }
        trivial = std::move(next);
    }
    std::optional<std::size_t> best;
    for (std::uint64_t v = 1; v < (std::uint64_t{1} << n); ++v) {
        auto w = static_cast<std::size_t>(__builtin_popcountll(v));
        if (best && w >= *best) {
            continue;
        }
        bool ok = true;
        for (auto c : checks) {
            if (__builtin_popcount(c & static_cast<std::uint32_t>(v)) & 1) {
                ok = false;
                break;
            }
        }
        if (ok && !trivial.count(static_cast<std::uint32_t>(v))) {
            best = w;
        }
    }
    return best;
}

inline FpMatrix naive_matmul(const FpMatrix &a, const FpMatrix &b) {
    const auto &f = a.field();
    FpMatrix c(f, a.rows(), b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t j = 0; j < b.cols(); ++j) {
            std::uint64_t s = 0;
            for (std::size_t k = 0; k < a.cols(); ++k) {
                s += std::uint64_t(a(i, k)) * b(k, j);
            }
            c.set(i, j, static_cast<FieldElem>(s % f.p()));
        }
    }
    return c;
}

}  // namespace qtwoblock::testing

#endif
