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

#ifndef QTWOBLOCK_CLASSIFY_HPP
#define QTWOBLOCK_CLASSIFY_HPP

#include <cstddef>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>

#include "qtwoblock/distance.hpp"
#include "qtwoblock/error.hpp"
#include "qtwoblock/finite_group.hpp"
#include "qtwoblock/fq_linalg.hpp"
#include "qtwoblock/group_algebra.hpp"
#include "qtwoblock/two_block_code.hpp"

namespace qtwoblock {

enum class CodeClass { Abelian, QuasiCyclicReducible, SemiAbelian, EssentiallyNonAbelian, Unclassified };

inline const char *to_string(CodeClass c) {
    switch (c) {
        case CodeClass::Abelian:
            return "abelian";
        case CodeClass::QuasiCyclicReducible:
            return "quasi-cyclic-reducible";
        case CodeClass::SemiAbelian:
            return "semi-abelian";
        case CodeClass::EssentiallyNonAbelian:
            return "essentially-non-abelian";
        case CodeClass::Unclassified:
            break;
    }
    return "unclassified";
}

/// Every sufficient condition evaluated by classify().
struct ClassificationEvidence {
    std::size_t group_order = 0;
    std::size_t ga_order = 0;
    std::size_t gb_order = 0;
    bool group_abelian = false;
    bool ga_cyclic = false;
    bool gb_cyclic = false;
    bool group_semisimple = false;  ///< gcd(p, |G|) = 1
    bool ga_semisimple = false;     ///< gcd(p, |G_a|) = 1
    bool gb_semisimple = false;     ///< gcd(p, |G_b|) = 1
    bool k_odd = false;
};

struct Classification {
    CodeClass label;
    ClassificationEvidence evidence;
};

namespace detail {
inline GroupProvenance require_group_provenance(const TwoBlockCode &code) {
    auto g = group_provenance(code);
    if (!g) {
        throw InputError("classification requires group provenance");
    }
    return *g;
}
}  // namespace detail

/// First match of abelian > quasi-cyclic-reducible > semi-abelian >
/// essentially-non-abelian (odd k) > unclassified. The first three imply even k.
inline Classification classify(const TwoBlockCode &code) {
    auto prov = detail::require_group_provenance(code);
    const auto &G = prov.a.group();
    const std::size_t p = prov.a.field().p();
    auto ga = support_subgroup(prov.a);
    auto gb = support_subgroup(prov.b);
    ClassificationEvidence ev;
    ev.group_order = G->order();
    ev.ga_order = ga.order();
    ev.gb_order = gb.order();
    ev.group_abelian = G->is_abelian();
    ev.ga_cyclic = ga.is_cyclic();
    ev.gb_cyclic = gb.is_cyclic();
    ev.group_semisimple = std::gcd(p, G->order()) == 1;
    ev.ga_semisimple = std::gcd(p, ga.order()) == 1;
    ev.gb_semisimple = std::gcd(p, gb.order()) == 1;
    ev.k_odd = code.k() % 2 == 1;

    CodeClass label = CodeClass::Unclassified;
    if (ev.group_abelian) {
        label = CodeClass::Abelian;
    } else if (ev.ga_cyclic || ev.gb_cyclic) {
        label = CodeClass::QuasiCyclicReducible;
    } else if (ev.group_semisimple || ev.ga_semisimple || ev.gb_semisimple) {
        label = CodeClass::SemiAbelian;
    } else if (ev.k_odd) {
        label = CodeClass::EssentiallyNonAbelian;
    }
    if (ev.k_odd && label != CodeClass::EssentiallyNonAbelian && label != CodeClass::Unclassified) {
        throw std::logic_error(std::string("odd k for a code labeled ") + to_string(label));
    }
    return {label, ev};
}

struct CentralIntersectionReport {
    Subgroup ga;
    Subgroup gb;
    Subgroup intersection;
    std::size_t c;
    bool central;
    bool gcd_ok;
    DistanceResult dist_a;  ///< d(C_A^perp), A = L(a)
    DistanceResult dist_b;  ///< d(C_B^perp), B = R(b)
    std::optional<std::size_t> d0;  ///< nullopt means infinity
    bool applicable;                ///< central and gcd(p, c) = 1
    bool degenerate;                ///< applicable with d0 = infinity
    std::optional<std::size_t> bound;  ///< floor(d0 / c); nullopt when not applicable or infinite
};

/// d_Z >= floor(d0 / c) when N = G_a cap G_b is central with gcd(p, |N|) = 1.
inline CentralIntersectionReport central_intersection_bound(const TwoBlockCode &code,
                                                            std::uint64_t budget = kDefaultBudget) {
    auto prov = detail::require_group_provenance(code);
    const auto &G = prov.a.group();
    auto ga = support_subgroup(prov.a);
    auto gb = support_subgroup(prov.b);
    auto nn = intersection(ga, gb);
    const std::size_t c = nn.order();
    bool central = is_central(G, nn);
    bool gcd_ok = std::gcd(static_cast<std::size_t>(prov.a.field().p()), c) == 1;
    auto da = classical_kernel_distance(left_matrix(prov.a), budget);
    auto db = classical_kernel_distance(right_matrix(prov.b), budget);
    std::optional<std::size_t> d0 = distance_less(da.value, db.value) ? da.value : db.value;
    bool applicable = central && gcd_ok;
    std::optional<std::size_t> bound;
    if (applicable && d0) {
        bound = *d0 / c;
    }
    return {std::move(ga), std::move(gb),        std::move(nn),      c,       central, gcd_ok, std::move(da),
            std::move(db), d0, applicable, applicable && !d0, bound};
}

/// A CSS code given by its two check matrices.
struct CssCode {
    FpMatrix hx;
    FpMatrix hz;
    std::size_t rank_hx;
    std::size_t rank_hz;

    std::size_t n() const noexcept {
        return hx.cols();
    }
    std::size_t k() const noexcept {
        return n() - rank_hx - rank_hz;
    }
};

/// H_X = (h1 (x) I_{n2} | I_{m1} (x) h2^T), H_Z = (I_{n1} (x) h2 | -h1^T (x) I_{m2}).
inline CssCode hp_build(const FpMatrix &h1, const FpMatrix &h2) {
    detail::require_same_field(h1, h2);
    const auto &F = h1.field();
    const std::size_t m1 = h1.rows(), n1 = h1.cols(), m2 = h2.rows(), n2 = h2.cols();
    auto hx = hstack(kron(h1, FpMatrix::identity(F, n2)), kron(FpMatrix::identity(F, m1), transpose(h2)));
    // second block negated so that H_X H_Z^T = 0 in odd characteristic too
    auto hz = hstack(kron(FpMatrix::identity(F, n1), h2), negate(kron(transpose(h1), FpMatrix::identity(F, m2))));
    if (!matmul(hx, transpose(hz)).is_zero()) {
        throw std::logic_error("hypergraph product is not orthogonal");
    }
    auto rx = rank(hx), rz = rank(hz);
    return {std::move(hx), std::move(hz), rx, rz};
}

struct HpEquivalenceReport {
    bool applicable = false;
    std::string reason;  ///< why not applicable
    std::size_t ga_order = 0;
    std::size_t gb_order = 0;
    std::size_t n_code = 0, k_code = 0, n_hp = 0, k_hp = 0;
    DistanceResult dz_code, dx_code, dz_hp, dx_hp;
    bool parameters_equal = false;
};

/// Applicable when G_a cap G_b = {1} and |G_a||G_b| = |G|, so that every
/// element factors uniquely as alpha * beta. Then L(a) = L_{G_a}(a) (x) I and
/// R(b) = I (x) R_{G_b}(b) in the (alpha, beta) basis, i.e. H_X matches the
/// product built from h1 = L_{G_a}(a) and h2 = R_{G_b}(b)^T.
inline HpEquivalenceReport hp_equivalence_check(const TwoBlockCode &code, std::uint64_t budget = kDefaultBudget) {
    auto prov = detail::require_group_provenance(code);
    const auto &G = prov.a.group();
    auto ga = support_subgroup(prov.a);
    auto gb = support_subgroup(prov.b);
    HpEquivalenceReport rep;
    rep.ga_order = ga.order();
    rep.gb_order = gb.order();
    rep.n_code = code.n();
    rep.k_code = code.k();
    if (!intersection(ga, gb).is_trivial()) {
        rep.reason = "G_a and G_b intersect nontrivially";
        return rep;
    }
    if (ga.order() * gb.order() != G->order()) {
        rep.reason = "|G_a||G_b| != |G|";
        return rep;
    }
    rep.applicable = true;
    auto hp = hp_build(left_matrix_on(prov.a, ga), transpose(right_matrix_on(prov.b, gb)));
    rep.n_hp = hp.n();
    rep.k_hp = hp.k();
    rep.dz_code = css_distance_exact(code, CssSide::Z, budget);
    rep.dx_code = css_distance_exact(code, CssSide::X, budget);
    rep.dz_hp = css_distance_exact(hp.hx, hp.hz, CssSide::Z, budget);
    rep.dx_hp = css_distance_exact(hp.hx, hp.hz, CssSide::X, budget);
    rep.parameters_equal = rep.n_code == rep.n_hp && rep.k_code == rep.k_hp &&
                           rep.dz_code.value == rep.dz_hp.value && rep.dx_code.value == rep.dx_hp.value;
    return rep;
}

}  // namespace qtwoblock

#endif
