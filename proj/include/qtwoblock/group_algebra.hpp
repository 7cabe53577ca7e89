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

#ifndef QTWOBLOCK_GROUP_ALGEBRA_HPP
#define QTWOBLOCK_GROUP_ALGEBRA_HPP

#include <cctype>
#include <cstddef>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "qtwoblock/error.hpp"
#include "qtwoblock/finite_group.hpp"
#include "qtwoblock/fq_algebra.hpp"
#include "qtwoblock/fq_linalg.hpp"

namespace qtwoblock {

/// x = sum_g x_g g in F_p[G]; coeffs()[i] is the coefficient of element i.
class GroupAlgebraElement {
   public:
    GroupAlgebraElement(GroupPtr group, PrimeField field)
        : group_(std::move(group)), field_(field), coeffs_(group_->order(), 0) {
    }
    GroupAlgebraElement(GroupPtr group, PrimeField field, std::vector<FieldElem> coeffs)
        : group_(std::move(group)), field_(field), coeffs_(std::move(coeffs)) {
        if (coeffs_.size() != group_->order()) {
            throw InputError("coefficient vector length must equal the group order");
        }
        for (auto &c : coeffs_) {
            c = field_.reduce(c);
        }
    }
    static GroupAlgebraElement unit(GroupPtr group, PrimeField field) {
        return basis(std::move(group), field, FiniteGroup::identity());
    }
    static GroupAlgebraElement basis(GroupPtr group, PrimeField field, ElementIndex g, FieldElem c = 1) {
        GroupAlgebraElement x(std::move(group), field);
        x.coeffs_.at(g) = field.reduce(c);
        return x;
    }
    /// Sum of the listed elements, each with coefficient 1 (repeats accumulate).
    static GroupAlgebraElement from_support(GroupPtr group, PrimeField field,
                                            const std::vector<ElementIndex> &support) {
        GroupAlgebraElement x(std::move(group), field);
        for (auto g : support) {
            x.coeffs_.at(g) = field.add(x.coeffs_.at(g), 1);
        }
        return x;
    }

    const GroupPtr &group() const noexcept {
        return group_;
    }
    const PrimeField &field() const noexcept {
        return field_;
    }
    const std::vector<FieldElem> &coeffs() const noexcept {
        return coeffs_;
    }
    FieldElem coeff(ElementIndex g) const {
        return coeffs_.at(g);
    }
    std::vector<ElementIndex> support() const {
        std::vector<ElementIndex> s;
        for (ElementIndex g = 0; g < coeffs_.size(); ++g) {
            if (coeffs_[g]) {
                s.push_back(g);
            }
        }
        return s;
    }
    bool is_zero() const noexcept {
        for (auto c : coeffs_) {
            if (c) {
                return false;
            }
        }
        return true;
    }

    friend bool operator==(const GroupAlgebraElement &a, const GroupAlgebraElement &b) {
        return a.field_ == b.field_ && a.coeffs_ == b.coeffs_ && a.group_->same_structure(*b.group_);
    }

   private:
    GroupPtr group_;
    PrimeField field_;
    std::vector<FieldElem> coeffs_;
};

namespace detail {
inline void require_compatible(const GroupAlgebraElement &a, const GroupAlgebraElement &b) {
    if (!(a.field() == b.field())) {
        throw InputError("group algebra elements over different fields");
    }
    if (a.group() != b.group() && !a.group()->same_structure(*b.group())) {
        throw InputError("group algebra elements over different groups");
    }
}
}  // namespace detail

/// (ab)_g = sum_h a_h b_{h^-1 g}
inline GroupAlgebraElement ga_product(const GroupAlgebraElement &a, const GroupAlgebraElement &b) {
    detail::require_compatible(a, b);
    const auto &G = *a.group();
    const auto &F = a.field();
    std::vector<FieldElem> out(G.order(), 0);
    for (ElementIndex h = 0; h < G.order(); ++h) {
        if (!a.coeff(h)) {
            continue;
        }
        for (ElementIndex k = 0; k < G.order(); ++k) {
            if (b.coeff(k)) {
                auto g = G.mul(h, k);
                out[g] = F.add(out[g], F.mul(a.coeff(h), b.coeff(k)));
            }
        }
    }
    return GroupAlgebraElement(a.group(), F, std::move(out));
}

inline GroupAlgebraElement operator*(const GroupAlgebraElement &a, const GroupAlgebraElement &b) {
    return ga_product(a, b);
}

inline GroupAlgebraElement operator+(const GroupAlgebraElement &a, const GroupAlgebraElement &b) {
    detail::require_compatible(a, b);
    std::vector<FieldElem> out(a.coeffs().size());
    for (std::size_t i = 0; i < out.size(); ++i) {
        out[i] = a.field().add(a.coeffs()[i], b.coeffs()[i]);
    }
    return GroupAlgebraElement(a.group(), a.field(), std::move(out));
}

/// [L(x)]_{alpha,beta} = sum_g x_g delta_{alpha, g beta}
inline FpMatrix left_matrix(const GroupAlgebraElement &x) {
    const auto &G = *x.group();
    FpMatrix m(x.field(), G.order(), G.order());
    for (auto g : x.support()) {
        for (ElementIndex beta = 0; beta < G.order(); ++beta) {
            auto alpha = G.mul(g, beta);
            m.set(alpha, beta, x.field().add(m(alpha, beta), x.coeff(g)));
        }
    }
    return m;
}

/// [R(x)]_{alpha,beta} = sum_g x_g delta_{alpha, beta g}
inline FpMatrix right_matrix(const GroupAlgebraElement &x) {
    const auto &G = *x.group();
    FpMatrix m(x.field(), G.order(), G.order());
    for (auto g : x.support()) {
        for (ElementIndex beta = 0; beta < G.order(); ++beta) {
            auto alpha = G.mul(beta, g);
            m.set(alpha, beta, x.field().add(m(alpha, beta), x.coeff(g)));
        }
    }
    return m;
}

namespace detail {
template <bool Left>
FpMatrix restricted_matrix(const GroupAlgebraElement &x, const Subgroup &k) {
    require_same_parent(k, x.group());
    const auto &G = *x.group();
    for (auto g : x.support()) {
        if (!k.contains(g)) {
            throw InputError("element is not supported on the subgroup");
        }
    }
    const auto &mem = k.members();
    std::vector<std::size_t> pos(G.order(), 0);
    for (std::size_t i = 0; i < mem.size(); ++i) {
        pos[mem[i]] = i;
    }
    FpMatrix m(x.field(), mem.size(), mem.size());
    for (auto g : x.support()) {
        for (std::size_t b = 0; b < mem.size(); ++b) {
            auto alpha = Left ? G.mul(g, mem[b]) : G.mul(mem[b], g);
            m.set(pos[alpha], b, x.field().add(m(pos[alpha], b), x.coeff(g)));
        }
    }
    return m;
}
}  // namespace detail

/// L_K(x): rows and columns indexed by the members of K (sorted order).
inline FpMatrix left_matrix_on(const GroupAlgebraElement &x, const Subgroup &k) {
    return detail::restricted_matrix<true>(x, k);
}

inline FpMatrix right_matrix_on(const GroupAlgebraElement &x, const Subgroup &k) {
    return detail::restricted_matrix<false>(x, k);
}

inline Subgroup support_subgroup(const GroupAlgebraElement &x) {
    return subgroup_generated(x.group(), x.support());
}

inline bool is_idempotent(const GroupAlgebraElement &e) {
    return ga_product(e, e) == e;
}

inline std::size_t row_weight(const GroupAlgebraElement &x) {
    return x.support().size();
}

/// Comma-separated terms `coeff*word`, coeff omitted when 1; e.g. `1, x, y, x^-1*y*x`.
inline GroupAlgebraElement parse_element(const GroupPtr &g, const PrimeField &field, std::string_view text) {
    GroupAlgebraElement x(g, field);
    std::vector<FieldElem> coeffs(g->order(), 0);
    std::size_t start = 0;
    bool any = false;
    while (start <= text.size()) {
        std::size_t end = text.find(',', start);
        if (end == std::string_view::npos) {
            end = text.size();
        }
        auto term = text.substr(start, end - start);
        std::size_t lead = 0;
        while (lead < term.size() && std::isspace(static_cast<unsigned char>(term[lead]))) {
            ++lead;
        }
        std::size_t trail = term.size();
        while (trail > lead && std::isspace(static_cast<unsigned char>(term[trail - 1]))) {
            --trail;
        }
        auto body = term.substr(lead, trail - lead);
        std::size_t body_off = start + lead;
        if (body.empty()) {
            throw ParseError("empty term", body_off);
        }
        std::size_t d = 0;
        while (d < body.size() && std::isdigit(static_cast<unsigned char>(body[d]))) {
            ++d;
        }
        std::size_t after = d;
        while (after < body.size() && std::isspace(static_cast<unsigned char>(body[after]))) {
            ++after;
        }
        auto read_coeff = [&] {
            if (d > 18) {
                throw ParseError("coefficient too large", body_off);
            }
            return std::stoull(std::string(body.substr(0, d)));
        };
        std::uint64_t c = 1;
        ElementIndex elem;
        if (d == body.size()) {
            // bare number: coefficient times the identity
            c = read_coeff();
            elem = FiniteGroup::identity();
        } else if (d > 0 && body[after] == '*') {
            c = read_coeff();
            elem = parse_word(*g, body.substr(after + 1), body_off + after + 1);
        } else {
            elem = parse_word(*g, body, body_off);
        }
        coeffs[elem] = field.add(coeffs[elem], field.reduce(static_cast<std::int64_t>(c % field.p())));
        any = true;
        start = end + 1;
    }
    if (!any) {
        throw ParseError("empty element", 0);
    }
    return GroupAlgebraElement(g, field, std::move(coeffs));
}

/// Inverse of parse_element using canonical words; zero prints as `0`.
inline std::string format_element(const GroupAlgebraElement &x) {
    std::string out;
    for (auto g : x.support()) {
        if (!out.empty()) {
            out += ", ";
        }
        if (x.coeff(g) != 1) {
            out += std::to_string(x.coeff(g)) + '*';
        }
        out += x.group()->word(g);
    }
    return out.empty() ? "0" : out;
}

/// Carries x to a relabeled copy of its group (old element i is new element perm[i]).
inline GroupAlgebraElement relabel_element(const GroupAlgebraElement &x, GroupPtr relabeled,
                                           const std::vector<ElementIndex> &perm) {
    std::vector<FieldElem> c(x.coeffs().size(), 0);
    for (std::size_t i = 0; i < c.size(); ++i) {
        c[perm[i]] = x.coeffs()[i];
    }
    return GroupAlgebraElement(std::move(relabeled), x.field(), std::move(c));
}

}  // namespace qtwoblock

#endif
