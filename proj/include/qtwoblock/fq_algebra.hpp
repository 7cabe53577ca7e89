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

#ifndef QTWOBLOCK_FQ_ALGEBRA_HPP
#define QTWOBLOCK_FQ_ALGEBRA_HPP

#include <algorithm>
#include <cctype>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <tuple>
#include <utility>
#include <vector>

#include "qtwoblock/error.hpp"

namespace qtwoblock {

/// An element of F_p, always stored reduced.
using FieldElem = std::uint16_t;

/// The prime field F_p with 2 <= p < 2^16.
class PrimeField {
   public:
    explicit PrimeField(std::uint32_t p) : p_(p) {
        if (p < 2 || p >= (1u << 16)) {
            throw InputError("field modulus must satisfy 2 <= p < 65536, got " + std::to_string(p));
        }
        for (std::uint32_t d = 2; d * d <= p; ++d) {
            if (p % d == 0) {
                throw InputError("field modulus " + std::to_string(p) + " is not prime");
            }
        }
    }

    std::uint32_t p() const noexcept {
        return p_;
    }
    bool is_binary() const noexcept {
        return p_ == 2;
    }

    FieldElem reduce(std::int64_t v) const noexcept {
        auto r = v % static_cast<std::int64_t>(p_);
        if (r < 0) {
            r += p_;
        }
        return static_cast<FieldElem>(r);
    }
    FieldElem add(FieldElem a, FieldElem b) const noexcept {
        std::uint32_t s = std::uint32_t{a} + b;
        return static_cast<FieldElem>(s >= p_ ? s - p_ : s);
    }
    FieldElem sub(FieldElem a, FieldElem b) const noexcept {
        return a >= b ? static_cast<FieldElem>(a - b) : static_cast<FieldElem>(p_ - (b - a));
    }
    FieldElem neg(FieldElem a) const noexcept {
        return a == 0 ? FieldElem{0} : static_cast<FieldElem>(p_ - a);
    }
    FieldElem mul(FieldElem a, FieldElem b) const noexcept {
        return static_cast<FieldElem>((std::uint32_t{a} * b) % p_);
    }
    FieldElem inv(FieldElem a) const {
        if (a % p_ == 0) {
            throw std::domain_error("non-invertible element");
        }
        // extended Euclid on (a, p)
        std::int64_t r0 = p_, r1 = a, t0 = 0, t1 = 1;
        while (r1 != 0) {
            std::int64_t q = r0 / r1;
            std::tie(r0, r1) = std::pair{r1, r0 - q * r1};
            std::tie(t0, t1) = std::pair{t1, t0 - q * t1};
        }
        return reduce(t0);
    }

    friend bool operator==(const PrimeField &, const PrimeField &) = default;

   private:
    std::uint32_t p_;
};

/// Polynomial over F_p, coefficients lowest degree first, no trailing zeros.
class FpPoly {
   public:
    explicit FpPoly(PrimeField field) : field_(field) {
    }
    FpPoly(PrimeField field, std::vector<FieldElem> coeffs) : field_(field), coeffs_(std::move(coeffs)) {
        for (auto &c : coeffs_) {
            c = field_.reduce(c);
        }
        trim();
    }

    static FpPoly monomial(PrimeField field, std::size_t degree, FieldElem c = 1) {
        std::vector<FieldElem> v(degree + 1, 0);
        v[degree] = c;
        return FpPoly(field, std::move(v));
    }
    /// x^l - 1
    static FpPoly cyclotomic_modulus(PrimeField field, std::size_t l) {
        std::vector<FieldElem> v(l + 1, 0);
        v[0] = field.neg(1);
        v[l] = field.add(v[l], 1);
        return FpPoly(field, std::move(v));
    }

    const PrimeField &field() const noexcept {
        return field_;
    }
    const std::vector<FieldElem> &coeffs() const noexcept {
        return coeffs_;
    }
    bool is_zero() const noexcept {
        return coeffs_.empty();
    }
    /// nullopt for the zero polynomial.
    std::optional<std::size_t> degree() const noexcept {
        if (coeffs_.empty()) {
            return std::nullopt;
        }
        return coeffs_.size() - 1;
    }
    FieldElem coeff(std::size_t i) const noexcept {
        return i < coeffs_.size() ? coeffs_[i] : FieldElem{0};
    }
    FieldElem leading() const noexcept {
        return coeffs_.empty() ? FieldElem{0} : coeffs_.back();
    }

    FpPoly monic() const {
        if (is_zero()) {
            return *this;
        }
        FieldElem s = field_.inv(leading());
        std::vector<FieldElem> v(coeffs_);
        for (auto &c : v) {
            c = field_.mul(c, s);
        }
        return FpPoly(field_, std::move(v));
    }

    friend FpPoly operator+(const FpPoly &f, const FpPoly &g) {
        check_same_field(f, g);
        std::vector<FieldElem> v(std::max(f.coeffs_.size(), g.coeffs_.size()), 0);
        for (std::size_t i = 0; i < v.size(); ++i) {
            v[i] = f.field_.add(f.coeff(i), g.coeff(i));
        }
        return FpPoly(f.field_, std::move(v));
    }
    friend FpPoly operator-(const FpPoly &f, const FpPoly &g) {
        check_same_field(f, g);
        std::vector<FieldElem> v(std::max(f.coeffs_.size(), g.coeffs_.size()), 0);
        for (std::size_t i = 0; i < v.size(); ++i) {
            v[i] = f.field_.sub(f.coeff(i), g.coeff(i));
        }
        return FpPoly(f.field_, std::move(v));
    }
    friend FpPoly operator*(const FpPoly &f, const FpPoly &g) {
        check_same_field(f, g);
        if (f.is_zero() || g.is_zero()) {
            return FpPoly(f.field_);
        }
        std::vector<FieldElem> v(f.coeffs_.size() + g.coeffs_.size() - 1, 0);
        for (std::size_t i = 0; i < f.coeffs_.size(); ++i) {
            for (std::size_t j = 0; j < g.coeffs_.size(); ++j) {
                v[i + j] = f.field_.add(v[i + j], f.field_.mul(f.coeffs_[i], g.coeffs_[j]));
            }
        }
        return FpPoly(f.field_, std::move(v));
    }

    /// Euclidean division; returns (quotient, remainder).
    friend std::pair<FpPoly, FpPoly> divmod(const FpPoly &f, const FpPoly &g) {
        check_same_field(f, g);
        if (g.is_zero()) {
            throw std::domain_error("polynomial division by zero");
        }
        const PrimeField &F = f.field_;
        std::vector<FieldElem> rem(f.coeffs_);
        std::size_t dg = *g.degree();
        if (rem.size() <= dg) {
            return {FpPoly(F), f};
        }
        std::vector<FieldElem> quot(rem.size() - dg, 0);
        FieldElem lead_inv = F.inv(g.leading());
        for (std::size_t i = rem.size(); i-- > dg;) {
            FieldElem c = F.mul(rem[i], lead_inv);
            if (c == 0) {
                continue;
            }
            quot[i - dg] = c;
            for (std::size_t j = 0; j <= dg; ++j) {
                rem[i - dg + j] = F.sub(rem[i - dg + j], F.mul(c, g.coeffs_[j]));
            }
        }
        return {FpPoly(F, std::move(quot)), FpPoly(F, std::move(rem))};
    }

    friend bool operator==(const FpPoly &, const FpPoly &) = default;

   private:
    static void check_same_field(const FpPoly &f, const FpPoly &g) {
        if (!(f.field_ == g.field_)) {
            throw InputError("polynomials over different fields");
        }
    }
    void trim() {
        while (!coeffs_.empty() && coeffs_.back() == 0) {
            coeffs_.pop_back();
        }
    }

    PrimeField field_;
    std::vector<FieldElem> coeffs_;
};

/// Monic gcd by the Euclidean algorithm.
inline FpPoly poly_gcd(const FpPoly &f, const FpPoly &g) {
    if (f.is_zero() && g.is_zero()) {
        throw std::domain_error("gcd undefined");
    }
    FpPoly r0 = f, r1 = g;
    while (!r1.is_zero()) {
        auto rem = divmod(r0, r1).second;
        r0 = std::move(r1);
        r1 = std::move(rem);
    }
    return r0.monic();
}

/// f * g reduced modulo x^l - 1.
inline FpPoly poly_mul_mod(const FpPoly &f, const FpPoly &g, std::int64_t l) {
    if (l <= 0) {
        throw InputError("modulus degree must be positive");
    }
    auto prod = f * g;
    std::vector<FieldElem> v(static_cast<std::size_t>(l), 0);
    const PrimeField &F = f.field();
    for (std::size_t i = 0; i < prod.coeffs().size(); ++i) {
        auto &slot = v[i % static_cast<std::size_t>(l)];
        slot = F.add(slot, prod.coeffs()[i]);
    }
    return FpPoly(F, std::move(v));
}

/// Parses `1+x+3*x^4`; whitespace ignored, repeated exponents accumulate.
inline FpPoly parse_poly(std::string_view text, const PrimeField &field) {
    std::string s;
    std::vector<std::size_t> origin;
    for (std::size_t i = 0; i < text.size(); ++i) {
        if (!std::isspace(static_cast<unsigned char>(text[i]))) {
            s.push_back(text[i]);
            origin.push_back(i);
        }
    }
    auto at = [&](std::size_t pos) { return pos < origin.size() ? origin[pos] : text.size(); };
    if (s.empty()) {
        throw ParseError("empty polynomial", 0);
    }
    auto read_uint = [&](std::size_t &pos) -> std::uint64_t {
        std::size_t start = pos;
        std::uint64_t v = 0;
        while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) {
            v = v * 10 + static_cast<std::uint64_t>(s[pos] - '0');
            if (v > (1ull << 40)) {
                throw ParseError("number too large", at(start));
            }
            ++pos;
        }
        if (pos == start) {
            throw ParseError("expected a number", at(pos));
        }
        return v;
    };

    std::vector<FieldElem> coeffs;
    std::size_t pos = 0;
    while (true) {
        std::uint64_t c = 1;
        std::uint64_t e = 0;
        bool have_coeff = false;
        if (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) {
            c = read_uint(pos);
            have_coeff = true;
        }
        if (have_coeff && pos < s.size() && s[pos] == '*') {
            ++pos;
            if (pos >= s.size() || s[pos] != 'x') {
                throw ParseError("expected 'x' after '*'", at(pos));
            }
        }
        if (pos < s.size() && s[pos] == 'x') {
            ++pos;
            e = 1;
            if (pos < s.size() && s[pos] == '^') {
                ++pos;
                e = read_uint(pos);
            }
        } else if (!have_coeff) {
            throw ParseError("expected a term", at(pos));
        }
        if (e > 100000) {
            throw ParseError("exponent too large", at(pos));
        }
        if (coeffs.size() <= e) {
            coeffs.resize(e + 1, 0);
        }
        coeffs[e] = field.add(coeffs[e], field.reduce(static_cast<std::int64_t>(c % field.p())));
        if (pos == s.size()) {
            break;
        }
        if (s[pos] != '+') {
            throw ParseError("expected '+'", at(pos));
        }
        ++pos;
    }
    return FpPoly(field, std::move(coeffs));
}

inline std::string format_poly(const FpPoly &f) {
    if (f.is_zero()) {
        return "0";
    }
    std::string out;
    for (std::size_t i = 0; i < f.coeffs().size(); ++i) {
        FieldElem c = f.coeffs()[i];
        if (c == 0) {
            continue;
        }
        if (!out.empty()) {
            out += '+';
        }
        if (i == 0) {
            out += std::to_string(c);
            continue;
        }
        if (c != 1) {
            out += std::to_string(c) + '*';
        }
        out += 'x';
        if (i > 1) {
            out += '^' + std::to_string(i);
        }
    }
    return out;
}

}  // namespace qtwoblock

#endif
