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

#ifndef QTWOBLOCK_FQ_LINALG_HPP
#define QTWOBLOCK_FQ_LINALG_HPP

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <istream>
#include <optional>
#include <ostream>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "qtwoblock/error.hpp"
#include "qtwoblock/fq_algebra.hpp"

namespace qtwoblock {

/// Dense row-major matrix over F_p.
class FpMatrix {
   public:
    FpMatrix(PrimeField field, std::size_t rows, std::size_t cols)
        : field_(field), rows_(rows), cols_(cols), data_(rows * cols, 0) {
    }
    FpMatrix(PrimeField field, std::size_t rows, std::size_t cols, std::vector<FieldElem> data)
        : field_(field), rows_(rows), cols_(cols), data_(std::move(data)) {
        if (data_.size() != rows * cols) {
            throw InputError("matrix data has wrong size");
        }
        for (auto &v : data_) {
            v = field_.reduce(v);
        }
    }
    static FpMatrix identity(PrimeField field, std::size_t n) {
        FpMatrix m(field, n, n);
        for (std::size_t i = 0; i < n; ++i) {
            m.set(i, i, 1);
        }
        return m;
    }
    /// Rows given as signed integers, reduced mod p.
    static FpMatrix from_rows(PrimeField field, std::initializer_list<std::initializer_list<long long>> rows) {
        std::size_t r = rows.size(), c = r ? rows.begin()->size() : 0;
        FpMatrix m(field, r, c);
        std::size_t i = 0;
        for (const auto &row : rows) {
            if (row.size() != c) {
                throw InputError("ragged matrix rows");
            }
            std::size_t j = 0;
            for (auto v : row) {
                m.set(i, j++, field.reduce(v));
            }
            ++i;
        }
        return m;
    }

    const PrimeField &field() const noexcept {
        return field_;
    }
    std::size_t rows() const noexcept {
        return rows_;
    }
    std::size_t cols() const noexcept {
        return cols_;
    }
    bool is_square() const noexcept {
        return rows_ == cols_;
    }
    FieldElem operator()(std::size_t r, std::size_t c) const noexcept {
        return data_[r * cols_ + c];
    }
    void set(std::size_t r, std::size_t c, FieldElem v) noexcept {
        data_[r * cols_ + c] = v;
    }
    std::span<const FieldElem> row(std::size_t r) const noexcept {
        return {data_.data() + r * cols_, cols_};
    }
    std::span<FieldElem> row(std::size_t r) noexcept {
        return {data_.data() + r * cols_, cols_};
    }
    const std::vector<FieldElem> &data() const noexcept {
        return data_;
    }
    bool is_zero() const noexcept {
        return std::all_of(data_.begin(), data_.end(), [](FieldElem v) { return v == 0; });
    }

    friend bool operator==(const FpMatrix &, const FpMatrix &) = default;

   private:
    PrimeField field_;
    std::size_t rows_;
    std::size_t cols_;
    std::vector<FieldElem> data_;
};

namespace detail {

inline void require_same_field(const FpMatrix &a, const FpMatrix &b) {
    if (!(a.field() == b.field())) {
        throw InputError("matrices over different fields");
    }
}

/// Rows of a binary matrix packed 64 columns per word.
class Gf2Rows {
   public:
    Gf2Rows(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), words_((cols + 63) / 64), bits_(rows * words_, 0) {
    }
    explicit Gf2Rows(const FpMatrix &m) : Gf2Rows(m.rows(), m.cols()) {
        for (std::size_t r = 0; r < rows_; ++r) {
            for (std::size_t c = 0; c < cols_; ++c) {
                if (m(r, c)) {
                    flip(r, c);
                }
            }
        }
    }
    std::size_t rows() const noexcept {
        return rows_;
    }
    std::size_t cols() const noexcept {
        return cols_;
    }
    std::size_t words() const noexcept {
        return words_;
    }
    bool get(std::size_t r, std::size_t c) const noexcept {
        return (bits_[r * words_ + c / 64] >> (c % 64)) & 1u;
    }
    void flip(std::size_t r, std::size_t c) noexcept {
        bits_[r * words_ + c / 64] ^= std::uint64_t{1} << (c % 64);
    }
    std::uint64_t *row(std::size_t r) noexcept {
        return bits_.data() + r * words_;
    }
    const std::uint64_t *row(std::size_t r) const noexcept {
        return bits_.data() + r * words_;
    }
    void xor_into(std::size_t dst, std::size_t src) noexcept {
        auto *d = row(dst);
        const auto *s = row(src);
        for (std::size_t w = 0; w < words_; ++w) {
            d[w] ^= s[w];
        }
    }
    void swap_rows(std::size_t a, std::size_t b) noexcept {
        if (a != b) {
            std::swap_ranges(row(a), row(a) + words_, row(b));
        }
    }
    FpMatrix to_matrix() const {
        FpMatrix m(PrimeField(2), rows_, cols_);
        for (std::size_t r = 0; r < rows_; ++r) {
            for (std::size_t c = 0; c < cols_; ++c) {
                if (get(r, c)) {
                    m.set(r, c, 1);
                }
            }
        }
        return m;
    }

   private:
    std::size_t rows_, cols_, words_;
    std::vector<std::uint64_t> bits_;
};

}  // namespace detail

struct RrefResult {
    FpMatrix reduced;
    std::vector<std::size_t> pivots;  ///< pivot column of each nonzero row
    std::size_t rank;
};

namespace detail {

/// Gauss-Jordan elimination; when `transform` is set, it is updated so that
/// transform * m == reduced (start it at the identity).
inline RrefResult rref_impl(const FpMatrix &m, FpMatrix *transform) {
    const auto &F = m.field();
    std::vector<std::size_t> pivots;
    if (F.is_binary()) {
        Gf2Rows a(m);
        std::optional<Gf2Rows> t;
        if (transform) {
            t.emplace(*transform);
        }
        std::size_t r = 0;
        for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
            std::size_t piv = r;
            while (piv < m.rows() && !a.get(piv, c)) {
                ++piv;
            }
            if (piv == m.rows()) {
                continue;
            }
            a.swap_rows(r, piv);
            if (t) {
                t->swap_rows(r, piv);
            }
            for (std::size_t i = 0; i < m.rows(); ++i) {
                if (i != r && a.get(i, c)) {
                    a.xor_into(i, r);
                    if (t) {
                        t->xor_into(i, r);
                    }
                }
            }
            pivots.push_back(c);
            ++r;
        }
        if (t) {
            *transform = t->to_matrix();
        }
        return {a.to_matrix(), pivots, r};
    }

    FpMatrix a = m;
    auto row_op = [&](FpMatrix &x, std::size_t dst, std::size_t src, FieldElem factor) {
        // x[dst] -= factor * x[src]
        auto d = x.row(dst);
        auto s = std::as_const(x).row(src);
        for (std::size_t j = 0; j < x.cols(); ++j) {
            if (s[j]) {
                d[j] = F.sub(d[j], F.mul(factor, s[j]));
            }
        }
    };
    auto swap_rows = [](FpMatrix &x, std::size_t i, std::size_t j) {
        if (i != j) {
            std::swap_ranges(x.row(i).begin(), x.row(i).end(), x.row(j).begin());
        }
    };
    auto scale = [&](FpMatrix &x, std::size_t i, FieldElem s) {
        for (auto &v : x.row(i)) {
            v = F.mul(v, s);
        }
    };
    std::size_t r = 0;
    for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
        std::size_t piv = r;
        while (piv < m.rows() && a(piv, c) == 0) {
            ++piv;
        }
        if (piv == m.rows()) {
            continue;
        }
        swap_rows(a, r, piv);
        if (transform) {
            swap_rows(*transform, r, piv);
        }
        FieldElem s = F.inv(a(r, c));
        scale(a, r, s);
        if (transform) {
            scale(*transform, r, s);
        }
        for (std::size_t i = 0; i < m.rows(); ++i) {
            FieldElem f = a(i, c);
            if (i != r && f) {
                row_op(a, i, r, f);
                if (transform) {
                    row_op(*transform, i, r, f);
                }
            }
        }
        pivots.push_back(c);
        ++r;
    }
    return {std::move(a), pivots, r};
}

}  // namespace detail

inline RrefResult rref(const FpMatrix &m) {
    return detail::rref_impl(m, nullptr);
}

inline std::size_t rank(const FpMatrix &m) {
    return rref(m).rank;
}

/// Rows form a basis of {v : m v^T = 0}.
inline FpMatrix kernel_basis(const FpMatrix &m) {
    const auto &F = m.field();
    auto rr = rref(m);
    std::vector<char> is_pivot(m.cols(), 0);
    for (auto c : rr.pivots) {
        is_pivot[c] = 1;
    }
    FpMatrix k(F, m.cols() - rr.rank, m.cols());
    std::size_t out = 0;
    for (std::size_t f = 0; f < m.cols(); ++f) {
        if (is_pivot[f]) {
            continue;
        }
        k.set(out, f, 1);
        for (std::size_t i = 0; i < rr.rank; ++i) {
            k.set(out, rr.pivots[i], F.neg(rr.reduced(i, f)));
        }
        ++out;
    }
    return k;
}

inline FpMatrix transpose(const FpMatrix &m) {
    FpMatrix t(m.field(), m.cols(), m.rows());
    for (std::size_t r = 0; r < m.rows(); ++r) {
        for (std::size_t c = 0; c < m.cols(); ++c) {
            t.set(c, r, m(r, c));
        }
    }
    return t;
}

inline FpMatrix matmul(const FpMatrix &a, const FpMatrix &b) {
    detail::require_same_field(a, b);
    if (a.cols() != b.rows()) {
        throw InputError("matmul dimension mismatch");
    }
    const auto &F = a.field();
    FpMatrix c(F, a.rows(), b.cols());
    if (F.is_binary()) {
        detail::Gf2Rows bb(b), cc(a.rows(), b.cols());
        for (std::size_t i = 0; i < a.rows(); ++i) {
            auto *dst = cc.row(i);
            for (std::size_t k = 0; k < a.cols(); ++k) {
                if (a(i, k)) {
                    const auto *src = bb.row(k);
                    for (std::size_t w = 0; w < bb.words(); ++w) {
                        dst[w] ^= src[w];
                    }
                }
            }
        }
        return cc.to_matrix();
    }
    const std::uint64_t p = F.p();
    std::vector<std::uint64_t> acc(b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i) {
        std::fill(acc.begin(), acc.end(), 0);
        for (std::size_t k = 0; k < a.cols(); ++k) {
            std::uint64_t x = a(i, k);
            if (!x) {
                continue;
            }
            auto br = b.row(k);
            for (std::size_t j = 0; j < b.cols(); ++j) {
                acc[j] += x * br[j];
            }
            if ((k & 0xfff) == 0xfff) {
                for (auto &v : acc) {
                    v %= p;
                }
            }
        }
        for (std::size_t j = 0; j < b.cols(); ++j) {
            c.set(i, j, static_cast<FieldElem>(acc[j] % p));
        }
    }
    return c;
}

inline FpMatrix matadd(const FpMatrix &a, const FpMatrix &b) {
    detail::require_same_field(a, b);
    if (a.rows() != b.rows() || a.cols() != b.cols()) {
        throw InputError("matadd dimension mismatch");
    }
    FpMatrix c = a;
    for (std::size_t r = 0; r < a.rows(); ++r) {
        for (std::size_t j = 0; j < a.cols(); ++j) {
            c.set(r, j, a.field().add(a(r, j), b(r, j)));
        }
    }
    return c;
}

inline FpMatrix negate(const FpMatrix &a) {
    FpMatrix c = a;
    for (std::size_t r = 0; r < a.rows(); ++r) {
        for (std::size_t j = 0; j < a.cols(); ++j) {
            c.set(r, j, a.field().neg(a(r, j)));
        }
    }
    return c;
}

inline FpMatrix matsub(const FpMatrix &a, const FpMatrix &b) {
    return matadd(a, negate(b));
}

inline FpMatrix hstack(std::span<const FpMatrix> blocks) {
    if (blocks.empty()) {
        throw InputError("hstack of no blocks");
    }
    std::size_t rows = blocks[0].rows(), cols = 0;
    for (const auto &b : blocks) {
        detail::require_same_field(blocks[0], b);
        if (b.rows() != rows) {
            throw InputError("hstack row mismatch");
        }
        cols += b.cols();
    }
    FpMatrix out(blocks[0].field(), rows, cols);
    std::size_t off = 0;
    for (const auto &b : blocks) {
        for (std::size_t r = 0; r < rows; ++r) {
            std::copy(b.row(r).begin(), b.row(r).end(), out.row(r).begin() + static_cast<std::ptrdiff_t>(off));
        }
        off += b.cols();
    }
    return out;
}

inline FpMatrix vstack(std::span<const FpMatrix> blocks) {
    if (blocks.empty()) {
        throw InputError("vstack of no blocks");
    }
    std::size_t cols = blocks[0].cols(), rows = 0;
    for (const auto &b : blocks) {
        detail::require_same_field(blocks[0], b);
        if (b.cols() != cols) {
            throw InputError("vstack column mismatch");
        }
        rows += b.rows();
    }
    std::vector<FieldElem> data;
    data.reserve(rows * cols);
    for (const auto &b : blocks) {
        data.insert(data.end(), b.data().begin(), b.data().end());
    }
    return FpMatrix(blocks[0].field(), rows, cols, std::move(data));
}

inline FpMatrix hstack(const FpMatrix &a, const FpMatrix &b) {
    std::vector<FpMatrix> v{a, b};
    return hstack(v);
}

inline FpMatrix vstack(const FpMatrix &a, const FpMatrix &b) {
    std::vector<FpMatrix> v{a, b};
    return vstack(v);
}

inline FpMatrix kron(const FpMatrix &a, const FpMatrix &b) {
    detail::require_same_field(a, b);
    const auto &F = a.field();
    FpMatrix out(F, a.rows() * b.rows(), a.cols() * b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t j = 0; j < a.cols(); ++j) {
            if (!a(i, j)) {
                continue;
            }
            for (std::size_t k = 0; k < b.rows(); ++k) {
                for (std::size_t l = 0; l < b.cols(); ++l) {
                    out.set(i * b.rows() + k, j * b.cols() + l, F.mul(a(i, j), b(k, l)));
                }
            }
        }
    }
    return out;
}

/// out(i, j) = m(row_order[i], col_order[j])
inline FpMatrix permuted(const FpMatrix &m, std::span<const std::uint32_t> row_order,
                         std::span<const std::uint32_t> col_order) {
    if (row_order.size() != m.rows() || col_order.size() != m.cols()) {
        throw InputError("permutation size mismatch");
    }
    FpMatrix out(m.field(), m.rows(), m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i) {
        for (std::size_t j = 0; j < m.cols(); ++j) {
            out.set(i, j, m(row_order[i], col_order[j]));
        }
    }
    return out;
}

inline FpMatrix inverse(const FpMatrix &m) {
    if (!m.is_square()) {
        throw InputError("inverse of a non-square matrix");
    }
    FpMatrix t = FpMatrix::identity(m.field(), m.rows());
    auto rr = detail::rref_impl(m, &t);
    if (rr.rank != m.rows()) {
        throw std::domain_error("matrix is singular");
    }
    return t;
}

/// m == U * D * V with U, V invertible and D = diag(1, ..., 1, 0, ..., 0).
struct SnfDecomposition {
    FpMatrix U;
    FpMatrix D;
    FpMatrix V;
    std::size_t rank;
    FpMatrix U_inverse;  ///< kept from the elimination, saves an inversion
};

/// Over a field all invariant factors are 1. With P*m = R (reduced row
/// echelon form): U = P^-1, and V stacks the nonzero rows of R over unit
/// rows e_j for the non-pivot columns j.
inline SnfDecomposition smith_normal_form(const FpMatrix &m) {
    const auto &F = m.field();
    FpMatrix p = FpMatrix::identity(F, m.rows());
    auto rr = detail::rref_impl(m, &p);
    FpMatrix v(F, m.cols(), m.cols());
    for (std::size_t i = 0; i < rr.rank; ++i) {
        std::copy(rr.reduced.row(i).begin(), rr.reduced.row(i).end(), v.row(i).begin());
    }
    std::vector<char> is_pivot(m.cols(), 0);
    for (auto c : rr.pivots) {
        is_pivot[c] = 1;
    }
    std::size_t next = rr.rank;
    for (std::size_t c = 0; c < m.cols(); ++c) {
        if (!is_pivot[c]) {
            v.set(next++, c, 1);
        }
    }
    FpMatrix d(F, m.rows(), m.cols());
    for (std::size_t i = 0; i < rr.rank; ++i) {
        d.set(i, i, 1);
    }
    return {inverse(p), std::move(d), std::move(v), rr.rank, std::move(p)};
}

/// Idempotents E, F with E*a = a*F = a and rank E = rank F = rank a,
/// built as E = U D U^-1 and F = V^-1 D V. Not unique.
inline std::pair<FpMatrix, FpMatrix> idempotent_pair(const FpMatrix &a) {
    if (!a.is_square()) {
        throw InputError("idempotent_pair requires a square matrix");
    }
    auto snf = smith_normal_form(a);
    auto e = matmul(matmul(snf.U, snf.D), snf.U_inverse);
    auto f = matmul(matmul(inverse(snf.V), snf.D), snf.V);
    return {std::move(e), std::move(f)};
}

/// Projection onto im(a) along ker(a), available when the two are
/// complementary (rank a == rank a^2). It commutes with every matrix that
/// commutes with a, and serves as both E and F.
inline std::optional<FpMatrix> fitting_idempotent(const FpMatrix &a) {
    if (!a.is_square()) {
        throw InputError("fitting_idempotent requires a square matrix");
    }
    const auto &F = a.field();
    const std::size_t n = a.rows();
    auto rr = rref(a);
    auto ker = kernel_basis(a);
    // columns: image basis (pivot columns of a), then kernel basis
    FpMatrix basis(F, n, n);
    for (std::size_t j = 0; j < rr.rank; ++j) {
        for (std::size_t i = 0; i < n; ++i) {
            basis.set(i, j, a(i, rr.pivots[j]));
        }
    }
    for (std::size_t j = 0; j < ker.rows(); ++j) {
        for (std::size_t i = 0; i < n; ++i) {
            basis.set(i, rr.rank + j, ker(j, i));
        }
    }
    if (rank(basis) != n) {
        return std::nullopt;
    }
    FpMatrix d(F, n, n);
    for (std::size_t i = 0; i < rr.rank; ++i) {
        d.set(i, i, 1);
    }
    return matmul(matmul(basis, d), inverse(basis));
}

/// Precomputed reduced echelon basis of a row space, for repeated membership tests.
class RowSpace {
   public:
    explicit RowSpace(const FpMatrix &m) : rr_(rref(m)) {
    }
    std::size_t dim() const noexcept {
        return rr_.rank;
    }
    std::size_t cols() const noexcept {
        return rr_.reduced.cols();
    }
    bool contains(std::span<const FieldElem> v) const {
        if (v.size() != cols()) {
            throw InputError("vector length does not match matrix columns");
        }
        const auto &F = rr_.reduced.field();
        std::vector<FieldElem> w(v.begin(), v.end());
        for (std::size_t i = 0; i < rr_.rank; ++i) {
            FieldElem c = w[rr_.pivots[i]];
            if (!c) {
                continue;
            }
            auto row = rr_.reduced.row(i);
            for (std::size_t j = 0; j < w.size(); ++j) {
                if (row[j]) {
                    w[j] = F.sub(w[j], F.mul(c, row[j]));
                }
            }
        }
        return std::all_of(w.begin(), w.end(), [](FieldElem x) { return x == 0; });
    }
    const RrefResult &echelon() const noexcept {
        return rr_;
    }

   private:
    RrefResult rr_;
};

inline bool in_rowspace(const FpMatrix &m, std::span<const FieldElem> v) {
    return RowSpace(m).contains(v);
}

/// `rows cols p` followed by `rows` lines of entries.
inline FpMatrix read_matrix(std::istream &in) {
    long long rows, cols, p;
    if (!(in >> rows >> cols >> p) || rows < 0 || cols < 0) {
        throw InputError("matrix header must be 'rows cols p'");
    }
    PrimeField F(static_cast<std::uint32_t>(p));
    std::vector<FieldElem> data(static_cast<std::size_t>(rows * cols));
    for (auto &v : data) {
        long long x;
        if (!(in >> x)) {
            throw InputError("matrix data truncated");
        }
        v = F.reduce(x);
    }
    return FpMatrix(F, static_cast<std::size_t>(rows), static_cast<std::size_t>(cols), std::move(data));
}

inline void write_matrix(std::ostream &out, const FpMatrix &m) {
    out << m.rows() << ' ' << m.cols() << ' ' << m.field().p() << '\n';
    for (std::size_t r = 0; r < m.rows(); ++r) {
        for (std::size_t c = 0; c < m.cols(); ++c) {
            out << (c ? " " : "") << m(r, c);
        }
        out << '\n';
    }
}

}  // namespace qtwoblock

#endif
