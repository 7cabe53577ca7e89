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

#ifndef QTWOBLOCK_TWO_BLOCK_CODE_HPP
#define QTWOBLOCK_TWO_BLOCK_CODE_HPP

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <variant>

#include "qtwoblock/error.hpp"
#include "qtwoblock/finite_group.hpp"
#include "qtwoblock/fq_algebra.hpp"
#include "qtwoblock/fq_linalg.hpp"
#include "qtwoblock/group_algebra.hpp"

namespace qtwoblock {

struct RawProvenance {};

/// 2BGA code LP[a, b]; the group is a.group().
struct GroupProvenance {
    GroupAlgebraElement a;
    GroupAlgebraElement b;
};

/// GB code over F_p[x]/(x^l - 1).
struct GbProvenance {
    std::size_t ell;
    FpPoly a;
    FpPoly b;
};

using Provenance = std::variant<RawProvenance, GroupProvenance, GbProvenance>;

/// CSS code with H_X = (A | B) and H_Z = (B^T | -A^T) for commuting square A, B.
class TwoBlockCode {
   public:
    /// Rejects non-commuting blocks.
    static TwoBlockCode from_blocks(FpMatrix a, FpMatrix b, Provenance provenance = RawProvenance{}) {
        detail::require_same_field(a, b);
        if (!a.is_square() || !b.is_square() || a.rows() != b.rows()) {
            throw InputError("blocks must be square matrices of the same size");
        }
        if (!(matmul(a, b) == matmul(b, a))) {
            throw InputError("blocks do not commute");
        }
        return TwoBlockCode(std::move(a), std::move(b), std::move(provenance));
    }

    const PrimeField &field() const noexcept {
        return a_.field();
    }
    std::size_t ell() const noexcept {
        return a_.rows();
    }
    std::size_t n() const noexcept {
        return 2 * a_.rows();
    }
    std::size_t k() const noexcept {
        return n() - rank_hx_ - rank_hz_;
    }
    std::size_t rank_hx() const noexcept {
        return rank_hx_;
    }
    std::size_t rank_hz() const noexcept {
        return rank_hz_;
    }
    const FpMatrix &a() const noexcept {
        return a_;
    }
    const FpMatrix &b() const noexcept {
        return b_;
    }
    const FpMatrix &hx() const noexcept {
        return hx_;
    }
    const FpMatrix &hz() const noexcept {
        return hz_;
    }
    const Provenance &provenance() const noexcept {
        return provenance_;
    }

   private:
    TwoBlockCode(FpMatrix a, FpMatrix b, Provenance provenance)
        : a_(std::move(a)),
          b_(std::move(b)),
          hx_(hstack(a_, b_)),
          hz_(hstack(transpose(b_), negate(transpose(a_)))),
          provenance_(std::move(provenance)) {
        if (!matmul(hx_, transpose(hz_)).is_zero()) {
            throw std::logic_error("H_X H_Z^T != 0 for commuting blocks");
        }
        rank_hx_ = rank(hx_);
        rank_hz_ = rank(hz_);
    }

    FpMatrix a_;
    FpMatrix b_;
    FpMatrix hx_;
    FpMatrix hz_;
    Provenance provenance_;
    std::size_t rank_hx_ = 0;
    std::size_t rank_hz_ = 0;
};

inline TwoBlockCode build_two_block(FpMatrix a, FpMatrix b) {
    return TwoBlockCode::from_blocks(std::move(a), std::move(b));
}

/// LP[a, b] with A = L(a), B = R(b).
inline TwoBlockCode build_2bga(const GroupAlgebraElement &a, const GroupAlgebraElement &b) {
    detail::require_compatible(a, b);
    return TwoBlockCode::from_blocks(left_matrix(a), right_matrix(b), GroupProvenance{a, b});
}

/// f(P) for the l x l cyclic shift P (P e_i = e_{i+1 mod l}).
inline FpMatrix circulant(const FpPoly &f, std::size_t l) {
    if (l == 0) {
        throw InputError("circulant size must be positive");
    }
    const auto &F = f.field();
    FpMatrix m(F, l, l);
    for (std::size_t i = 0; i < f.coeffs().size(); ++i) {
        if (!f.coeffs()[i]) {
            continue;
        }
        for (std::size_t beta = 0; beta < l; ++beta) {
            auto alpha = (beta + i) % l;
            m.set(alpha, beta, F.add(m(alpha, beta), f.coeffs()[i]));
        }
    }
    return m;
}

inline TwoBlockCode build_gb(std::int64_t ell, const FpPoly &a, const FpPoly &b) {
    if (ell <= 0) {
        throw InputError("GB block size must be positive");
    }
    auto l = static_cast<std::size_t>(ell);
    if (!(a.field() == b.field())) {
        throw InputError("polynomials over different fields");
    }
    if ((a.degree() && *a.degree() >= l) || (b.degree() && *b.degree() >= l)) {
        throw InputError("polynomial degree must be below l");
    }
    return TwoBlockCode::from_blocks(circulant(a, l), circulant(b, l), GbProvenance{l, a, b});
}

/// The group-algebra view of a 2BGA or GB code (GB maps to the cyclic group, x^i -> element i).
inline std::optional<GroupProvenance> group_provenance(const TwoBlockCode &code) {
    if (auto *g = std::get_if<GroupProvenance>(&code.provenance())) {
        return *g;
    }
    if (auto *gb = std::get_if<GbProvenance>(&code.provenance())) {
        auto group = cyclic_group(gb->ell);
        auto lift = [&](const FpPoly &f) {
            std::vector<FieldElem> c(gb->ell, 0);
            for (std::size_t i = 0; i < f.coeffs().size(); ++i) {
                c[i] = f.coeffs()[i];
            }
            return GroupAlgebraElement(group, f.field(), std::move(c));
        };
        return GroupProvenance{lift(gb->a), lift(gb->b)};
    }
    return std::nullopt;
}

struct GbDimension {
    std::size_t k;
    FpPoly h;         ///< gcd(a, b, x^l - 1)
    bool degenerate;  ///< a = b = 0, h taken as x^l - 1
};

/// k = 2 deg gcd(a(x), b(x), x^l - 1).
inline GbDimension gb_dimension(std::int64_t ell, const FpPoly &a, const FpPoly &b) {
    if (ell <= 0) {
        throw InputError("GB block size must be positive");
    }
    auto l = static_cast<std::size_t>(ell);
    auto modulus = FpPoly::cyclotomic_modulus(a.field(), l);
    if (a.is_zero() && b.is_zero()) {
        return {2 * l, modulus, true};
    }
    auto h = poly_gcd(poly_gcd(a, b), modulus);
    return {2 * *h.degree(), h, false};
}

struct IdempotentRanks {
    std::size_t rank_a;
    std::size_t rank_hx_term;  ///< rank (I - E_A) B
    std::size_t rank_hz_term;  ///< rank B (I - F_A)
    std::size_t rank_hx() const noexcept {
        return rank_a + rank_hx_term;
    }
    std::size_t rank_hz() const noexcept {
        return rank_a + rank_hz_term;
    }
};

inline IdempotentRanks rank_via_idempotents(const TwoBlockCode &code) {
    auto [e, f] = idempotent_pair(code.a());
    auto id = FpMatrix::identity(code.field(), code.ell());
    return {rank(code.a()), rank(matmul(matsub(id, e), code.b())), rank(matmul(code.b(), matsub(id, f)))};
}

enum class RankEquality { GuaranteedEqual, GuaranteedEqualSwapped, Inconclusive };

inline const char *to_string(RankEquality r) {
    switch (r) {
        case RankEquality::GuaranteedEqual:
            return "guaranteed-equal";
        case RankEquality::GuaranteedEqualSwapped:
            return "guaranteed-equal-swapped";
        case RankEquality::Inconclusive:
            break;
    }
    return "inconclusive";
}

struct Statement1Result {
    RankEquality verdict;
    /// snf-idempotents, fitting-idempotent, abelian-group, or none
    std::string route;
    bool observed_equal;
};

/// Looks for idempotents E, F of one block commuting with the other block:
/// the elimination-based pair and, when it exists, the projection onto
/// im A along ker A. Codes over an abelian group are also accepted.
inline Statement1Result statement1_check(const TwoBlockCode &code) {
    Statement1Result out{RankEquality::Inconclusive, "none", code.rank_hx() == code.rank_hz()};
    auto commutes = [](const FpMatrix &x, const FpMatrix &y) { return matmul(x, y) == matmul(y, x); };
    auto try_blocks = [&](const FpMatrix &first, const FpMatrix &other) -> std::optional<std::string> {
        auto [e, f] = idempotent_pair(first);
        if (commutes(e, other) && commutes(f, other)) {
            return "snf-idempotents";
        }
        if (fitting_idempotent(first)) {
            return "fitting-idempotent";  // commutes with everything commuting with `first`
        }
        return std::nullopt;
    };
    if (auto r = try_blocks(code.a(), code.b())) {
        out.verdict = RankEquality::GuaranteedEqual;
        out.route = *r;
    } else if (auto r2 = try_blocks(code.b(), code.a())) {
        out.verdict = RankEquality::GuaranteedEqualSwapped;
        out.route = *r2;
    } else if (auto g = group_provenance(code); g && g->a.group()->is_abelian()) {
        out.verdict = RankEquality::GuaranteedEqual;
        out.route = "abelian-group";
    }
    if (out.verdict != RankEquality::Inconclusive && (!out.observed_equal || code.k() % 2 != 0)) {
        throw std::logic_error("rank equality guaranteed but rank H_X != rank H_Z");
    }
    return out;
}

}  // namespace qtwoblock

#endif
