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

#ifndef QTWOBLOCK_FINITE_GROUP_HPP
#define QTWOBLOCK_FINITE_GROUP_HPP

#include <algorithm>
#include <cctype>
#include <cstddef>
#include <cstdint>
#include <deque>
#include <fstream>
#include <map>
#include <memory>
#include <numeric>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include "qtwoblock/error.hpp"

namespace qtwoblock {

using ElementIndex = std::uint32_t;

struct Generator {
    std::string name;
    ElementIndex index;
    friend bool operator==(const Generator &, const Generator &) = default;
};

inline constexpr std::size_t kDefaultGroupCap = 10000;

class FiniteGroup;
using GroupPtr = std::shared_ptr<const FiniteGroup>;

/// A finite group stored as a Cayley table; element 0 is the identity.
///
/// The table is validated on construction: identity row and column, Latin
/// square property, associativity (exhaustive up to order 256, one million
/// sampled triples above). Every element receives a canonical word over the
/// generators; elements unreachable from the supplied generators are
/// registered as extra generators named `g<index>`.
class FiniteGroup {
   public:
    static GroupPtr from_table(std::size_t order, std::vector<ElementIndex> cayley,
                               std::vector<Generator> generators) {
        return std::shared_ptr<const FiniteGroup>(
            new FiniteGroup(order, std::move(cayley), std::move(generators)));
    }

    std::size_t order() const noexcept {
        return order_;
    }
    static constexpr ElementIndex identity() noexcept {
        return 0;
    }
    ElementIndex mul(ElementIndex a, ElementIndex b) const noexcept {
        return cayley_[static_cast<std::size_t>(a) * order_ + b];
    }
    ElementIndex inverse(ElementIndex a) const noexcept {
        return inverse_[a];
    }
    ElementIndex power(ElementIndex a, std::int64_t e) const {
        ElementIndex base = e < 0 ? inverse(a) : a;
        std::uint64_t n = static_cast<std::uint64_t>(e < 0 ? -e : e) % element_order(a);
        ElementIndex r = identity();
        while (n > 0) {
            if (n & 1) {
                r = mul(r, base);
            }
            base = mul(base, base);
            n >>= 1;
        }
        return r;
    }
    std::size_t element_order(ElementIndex a) const noexcept {
        std::size_t n = 1;
        for (ElementIndex x = a; x != identity(); x = mul(x, a)) {
            ++n;
        }
        return n;
    }

    const std::vector<Generator> &generators() const noexcept {
        return generators_;
    }
    std::optional<ElementIndex> generator(std::string_view name) const {
        for (const auto &g : generators_) {
            if (g.name == name) {
                return g.index;
            }
        }
        return std::nullopt;
    }
    /// Shortest word over the generators (positive powers), e.g. `x^2*y`.
    const std::string &word(ElementIndex a) const {
        return words_.at(a);
    }
    const std::vector<ElementIndex> &table() const noexcept {
        return cayley_;
    }

    bool is_abelian() const noexcept {
        for (ElementIndex i = 0; i < order_; ++i) {
            for (ElementIndex j = i + 1; j < order_; ++j) {
                if (mul(i, j) != mul(j, i)) {
                    return false;
                }
            }
        }
        return true;
    }
    bool is_cyclic() const noexcept {
        for (ElementIndex i = 0; i < order_; ++i) {
            if (element_order(i) == order_) {
                return true;
            }
        }
        return false;
    }

    /// Same multiplication table (generator names are not compared).
    bool same_structure(const FiniteGroup &other) const noexcept {
        return order_ == other.order_ && cayley_ == other.cayley_;
    }

   private:
    FiniteGroup(std::size_t order, std::vector<ElementIndex> cayley, std::vector<Generator> generators)
        : order_(order), cayley_(std::move(cayley)), generators_(std::move(generators)) {
        validate();
        build_words();
    }

    void validate() {
        if (order_ == 0) {
            throw InputError("group order must be positive");
        }
        if (order_ > kDefaultGroupCap) {
            throw InputError("group too large");
        }
        if (cayley_.size() != order_ * order_) {
            throw InputError("Cayley table has wrong size");
        }
        for (auto v : cayley_) {
            if (v >= order_) {
                throw InputError("Cayley table entry out of range");
            }
        }
        std::vector<char> seen(order_);
        for (std::size_t i = 0; i < order_; ++i) {
            if (mul(0, static_cast<ElementIndex>(i)) != i || mul(static_cast<ElementIndex>(i), 0) != i) {
                throw InputError("row and column 0 of the Cayley table must be the identity");
            }
            std::fill(seen.begin(), seen.end(), 0);
            for (std::size_t j = 0; j < order_; ++j) {
                auto v = cayley_[i * order_ + j];
                if (seen[v]++) {
                    throw InputError("Cayley table row " + std::to_string(i) + " is not a permutation");
                }
            }
            std::fill(seen.begin(), seen.end(), 0);
            for (std::size_t j = 0; j < order_; ++j) {
                auto v = cayley_[j * order_ + i];
                if (seen[v]++) {
                    throw InputError("Cayley table column " + std::to_string(i) + " is not a permutation");
                }
            }
        }
        auto assoc = [&](ElementIndex a, ElementIndex b, ElementIndex c) {
            if (mul(mul(a, b), c) != mul(a, mul(b, c))) {
                throw InputError("Cayley table is not associative");
            }
        };
        auto n = static_cast<ElementIndex>(order_);
        if (order_ <= 256) {
            for (ElementIndex a = 0; a < n; ++a) {
                for (ElementIndex b = 0; b < n; ++b) {
                    for (ElementIndex c = 0; c < n; ++c) {
                        assoc(a, b, c);
                    }
                }
            }
        } else {
            std::mt19937_64 rng(0x9e3779b97f4a7c15ull);
            std::uniform_int_distribution<ElementIndex> pick(0, n - 1);
            for (int t = 0; t < 1000000; ++t) {
                assoc(pick(rng), pick(rng), pick(rng));
            }
        }
        inverse_.assign(order_, 0);
        for (ElementIndex a = 0; a < n; ++a) {
            for (ElementIndex b = 0; b < n; ++b) {
                if (mul(a, b) == 0) {
                    inverse_[a] = b;
                    break;
                }
            }
        }
        for (std::size_t i = 0; i < generators_.size(); ++i) {
            const auto &g = generators_[i];
            if (g.index >= order_) {
                throw InputError("generator '" + g.name + "' index out of range");
            }
            if (!valid_name(g.name)) {
                throw InputError("invalid generator name '" + g.name + "'");
            }
            for (std::size_t j = 0; j < i; ++j) {
                if (generators_[j].name == g.name) {
                    throw InputError("duplicate generator name '" + g.name + "'");
                }
            }
        }
    }

    void build_words() {
        // BFS over right multiplication by generators; unreached elements get
        // their own generator so that every element has a word.
        std::vector<std::vector<std::pair<std::size_t, std::int64_t>>> factors(order_);
        std::vector<char> reached(order_, 0);
        reached[0] = 1;
        std::deque<ElementIndex> queue{0};
        auto run = [&]() {
            while (!queue.empty()) {
                auto e = queue.front();
                queue.pop_front();
                for (std::size_t gi = 0; gi < generators_.size(); ++gi) {
                    auto next = mul(e, generators_[gi].index);
                    if (reached[next]) {
                        continue;
                    }
                    reached[next] = 1;
                    factors[next] = factors[e];
                    if (!factors[next].empty() && factors[next].back().first == gi) {
                        ++factors[next].back().second;
                    } else {
                        factors[next].emplace_back(gi, 1);
                    }
                    queue.push_back(next);
                }
            }
        };
        run();
        for (ElementIndex a = 1; a < order_; ++a) {
            if (reached[a]) {
                continue;
            }
            std::string name = "g" + std::to_string(a);
            while (generator(name)) {
                name += "_";
            }
            generators_.push_back({name, a});
            // restart from everything reached so far
            for (ElementIndex b = 0; b < order_; ++b) {
                if (reached[b]) {
                    queue.push_back(b);
                }
            }
            run();
        }
        words_.assign(order_, "1");
        for (ElementIndex a = 1; a < order_; ++a) {
            std::string w;
            for (auto [gi, e] : factors[a]) {
                if (!w.empty()) {
                    w += '*';
                }
                w += generators_[gi].name;
                if (e != 1) {
                    w += '^' + std::to_string(e);
                }
            }
            words_[a] = w;
        }
    }

    static bool valid_name(std::string_view s) {
        if (s.empty() || !(std::isalpha(static_cast<unsigned char>(s[0])) || s[0] == '_')) {
            return false;
        }
        return std::all_of(s.begin(), s.end(),
                           [](char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; });
    }

    std::size_t order_;
    std::vector<ElementIndex> cayley_;
    std::vector<ElementIndex> inverse_;
    std::vector<Generator> generators_;
    std::vector<std::string> words_;
};

/// A permutation of 0..n-1 as an image list.
using Permutation = std::vector<std::uint32_t>;

struct NamedPermutation {
    std::string name;
    Permutation perm;
};

/// Closure of permutation generators. Products apply the left factor first,
/// so (g*h)(i) = h(g(i)). Element order: identity, then breadth-first
/// products existing*generator in generator order.
inline GroupPtr group_from_permutations(std::size_t degree, const std::vector<NamedPermutation> &gens,
                                        std::size_t cap = kDefaultGroupCap) {
    for (const auto &g : gens) {
        if (g.perm.size() != degree) {
            throw InputError("generator '" + g.name + "' has wrong degree");
        }
        std::vector<char> hit(degree, 0);
        for (auto v : g.perm) {
            if (v >= degree || hit[v]++) {
                throw InputError("generator '" + g.name + "' is not a permutation");
            }
        }
    }
    auto compose = [](const Permutation &first, const Permutation &second) {
        Permutation r(first.size());
        for (std::size_t i = 0; i < first.size(); ++i) {
            r[i] = second[first[i]];
        }
        return r;
    };
    Permutation id(degree);
    std::iota(id.begin(), id.end(), 0u);
    std::map<Permutation, ElementIndex> index_of;
    std::vector<Permutation> elems{id};
    std::vector<std::pair<ElementIndex, std::size_t>> parent{{0, 0}};  // (element, generator)
    index_of.emplace(id, 0);
    std::vector<std::vector<ElementIndex>> right_gen(gens.size());
    for (std::size_t e = 0; e < elems.size(); ++e) {
        for (std::size_t gi = 0; gi < gens.size(); ++gi) {
            auto prod = compose(elems[e], gens[gi].perm);
            auto it = index_of.find(prod);
            ElementIndex idx;
            if (it == index_of.end()) {
                if (elems.size() >= cap) {
                    throw InputError("group too large");
                }
                idx = static_cast<ElementIndex>(elems.size());
                index_of.emplace(prod, idx);
                elems.push_back(std::move(prod));
                parent.emplace_back(static_cast<ElementIndex>(e), gi);
            } else {
                idx = it->second;
            }
            right_gen[gi].push_back(idx);
        }
    }
    const std::size_t n = elems.size();
    std::vector<ElementIndex> table(n * n);
    for (std::size_t i = 0; i < n; ++i) {
        table[i * n] = static_cast<ElementIndex>(i);
        for (std::size_t j = 1; j < n; ++j) {
            auto [pj, gi] = parent[j];  // j = pj * gen, parents precede children
            table[i * n + j] = right_gen[gi][table[i * n + pj]];
        }
    }
    std::vector<Generator> named;
    for (const auto &g : gens) {
        named.push_back({g.name, index_of.at(g.perm)});
    }
    return FiniteGroup::from_table(n, std::move(table), std::move(named));
}

/// Parses cycle notation such as `(0 1 2)(3 4)` on `degree` points; `()` is the identity.
inline Permutation parse_cycles(std::string_view text, std::size_t degree) {
    Permutation p(degree);
    std::iota(p.begin(), p.end(), 0u);
    std::vector<char> used(degree, 0);
    std::size_t pos = 0;
    auto skip = [&] {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) {
            ++pos;
        }
    };
    skip();
    if (pos == text.size()) {
        throw ParseError("empty permutation", pos);
    }
    while (true) {
        skip();
        if (pos == text.size()) {
            break;
        }
        if (text[pos] != '(') {
            throw ParseError("expected '('", pos);
        }
        ++pos;
        std::vector<std::uint32_t> cycle;
        while (true) {
            skip();
            if (pos < text.size() && text[pos] == ')') {
                ++pos;
                break;
            }
            if (pos >= text.size() || !std::isdigit(static_cast<unsigned char>(text[pos]))) {
                throw ParseError("expected point or ')'", pos);
            }
            std::size_t start = pos;
            std::uint64_t v = 0;
            while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
                v = v * 10 + static_cast<std::uint64_t>(text[pos] - '0');
                if (v >= degree) {
                    throw ParseError("point out of range", start);
                }
                ++pos;
            }
            if (used[v]++) {
                throw ParseError("point repeated in cycles", start);
            }
            cycle.push_back(static_cast<std::uint32_t>(v));
        }
        for (std::size_t i = 0; i < cycle.size(); ++i) {
            p[cycle[i]] = cycle[(i + 1) % cycle.size()];
        }
    }
    return p;
}

inline GroupPtr cyclic_group(std::size_t l) {
    if (l == 0) {
        throw InputError("cyclic group order must be positive");
    }
    std::vector<ElementIndex> t(l * l);
    for (std::size_t i = 0; i < l; ++i) {
        for (std::size_t j = 0; j < l; ++j) {
            t[i * l + j] = static_cast<ElementIndex>((i + j) % l);
        }
    }
    return FiniteGroup::from_table(l, std::move(t), {{"x", static_cast<ElementIndex>(1 % l)}});
}

/// Dihedral group of order 2n; element r^i s^j has index i + n*j.
inline GroupPtr dihedral_group(std::size_t n) {
    if (n == 0) {
        throw InputError("dihedral group parameter must be positive");
    }
    const std::size_t order = 2 * n;
    std::vector<ElementIndex> t(order * order);
    for (std::size_t a = 0; a < order; ++a) {
        for (std::size_t b = 0; b < order; ++b) {
            std::size_t i = a % n, ja = a / n, k = b % n, jb = b / n;
            std::size_t rot = ja == 0 ? (i + k) % n : (i + n - k) % n;
            t[a * order + b] = static_cast<ElementIndex>(rot + n * ((ja + jb) % 2));
        }
    }
    return FiniteGroup::from_table(order, std::move(t),
                                   {{"r", static_cast<ElementIndex>(1 % n)}, {"s", static_cast<ElementIndex>(n)}});
}

/// G x H with index g*|H| + h. Colliding generator names of H are renamed
/// to the next unused name from x, y, z, u, v, w, t, then `h<k>`.
inline GroupPtr direct_product(const FiniteGroup &g, const FiniteGroup &h) {
    const std::size_t ng = g.order(), nh = h.order(), n = ng * nh;
    if (n > kDefaultGroupCap) {
        throw InputError("group too large");
    }
    std::vector<ElementIndex> t(n * n);
    for (std::size_t a = 0; a < n; ++a) {
        for (std::size_t b = 0; b < n; ++b) {
            auto gg = g.mul(static_cast<ElementIndex>(a / nh), static_cast<ElementIndex>(b / nh));
            auto hh = h.mul(static_cast<ElementIndex>(a % nh), static_cast<ElementIndex>(b % nh));
            t[a * n + b] = static_cast<ElementIndex>(gg * nh + hh);
        }
    }
    std::vector<Generator> gens;
    for (const auto &x : g.generators()) {
        gens.push_back({x.name, static_cast<ElementIndex>(x.index * nh)});
    }
    auto taken = [&](const std::string &name) {
        return std::any_of(gens.begin(), gens.end(), [&](const Generator &x) { return x.name == name; }) ||
               std::any_of(h.generators().begin(), h.generators().end(),
                           [&](const Generator &x) { return x.name == name; });
    };
    for (const auto &x : h.generators()) {
        std::string name = x.name;
        bool collides =
            std::any_of(gens.begin(), gens.end(), [&](const Generator &y) { return y.name == name; });
        if (collides) {
            static const char *fallback[] = {"x", "y", "z", "u", "v", "w", "t"};
            name.clear();
            for (const char *c : fallback) {
                if (!taken(c)) {
                    name = c;
                    break;
                }
            }
            for (int k = 1; name.empty(); ++k) {
                if (!taken("h" + std::to_string(k))) {
                    name = "h" + std::to_string(k);
                }
            }
        }
        gens.push_back({name, x.index});
    }
    return FiniteGroup::from_table(n, std::move(t), std::move(gens));
}

/// A4 generated by x = (0 1 2), y = (0 1)(2 3); the relations
/// x^3 = (yx)^3 = y^2 = 1 are checked.
inline GroupPtr alternating4_group() {
    auto g = group_from_permutations(4, {{"x", {1, 2, 0, 3}}, {"y", {1, 0, 3, 2}}});
    auto x = *g->generator("x"), y = *g->generator("y");
    auto yx = g->mul(y, x);
    if (g->order() != 12 || g->power(x, 3) != 0 || g->mul(y, y) != 0 || g->mul(yx, g->mul(yx, yx)) != 0) {
        throw std::logic_error("A4 realization violates its presentation");
    }
    return g;
}

/// Relabels elements: old element i becomes new element perm[i]; perm[0] must be 0.
inline GroupPtr relabel_group(const FiniteGroup &g, const std::vector<ElementIndex> &perm) {
    const std::size_t n = g.order();
    if (perm.size() != n || perm[0] != 0) {
        throw InputError("relabeling must be a permutation fixing the identity");
    }
    std::vector<ElementIndex> t(n * n);
    for (ElementIndex a = 0; a < n; ++a) {
        for (ElementIndex b = 0; b < n; ++b) {
            t[perm[a] * n + perm[b]] = perm[g.mul(a, b)];
        }
    }
    std::vector<Generator> gens;
    for (const auto &x : g.generators()) {
        gens.push_back({x.name, perm[x.index]});
    }
    return FiniteGroup::from_table(n, std::move(t), std::move(gens));
}

/// Reads the plain-text Cayley format: `order l`, l rows of l indices, then
/// optional `gen <name> <index>` lines.
inline GroupPtr read_cayley_table(std::istream &in) {
    std::string word;
    std::size_t order = 0;
    if (!(in >> word) || word != "order" || !(in >> order) || order == 0) {
        throw InputError("Cayley file must start with 'order <l>'");
    }
    if (order > kDefaultGroupCap) {
        throw InputError("group too large");
    }
    std::vector<ElementIndex> t(order * order);
    for (auto &v : t) {
        long long x;
        if (!(in >> x) || x < 0) {
            throw InputError("Cayley table truncated or has negative entries");
        }
        v = static_cast<ElementIndex>(x);
    }
    std::vector<Generator> gens;
    while (in >> word) {
        long long idx;
        std::string name;
        if (word != "gen" || !(in >> name >> idx) || idx < 0) {
            throw InputError("expected 'gen <name> <index>' after the Cayley table");
        }
        gens.push_back({name, static_cast<ElementIndex>(idx)});
    }
    return FiniteGroup::from_table(order, std::move(t), std::move(gens));
}

inline GroupPtr read_cayley_file(const std::string &path) {
    std::ifstream in(path);
    if (!in) {
        throw InputError("cannot open Cayley file '" + path + "'");
    }
    return read_cayley_table(in);
}

inline void write_cayley_table(std::ostream &out, const FiniteGroup &g) {
    out << "order " << g.order() << '\n';
    for (ElementIndex i = 0; i < g.order(); ++i) {
        for (ElementIndex j = 0; j < g.order(); ++j) {
            out << (j ? " " : "") << g.mul(i, j);
        }
        out << '\n';
    }
    for (const auto &x : g.generators()) {
        out << "gen " << x.name << ' ' << x.index << '\n';
    }
}

/// word := `1` | factor (`*` factor)*; factor := name (`^` signed-integer)?
/// Whitespace between tokens is ignored. Errors carry byte offsets into `word`.
inline ElementIndex parse_word(const FiniteGroup &g, std::string_view word, std::size_t base_offset = 0) {
    std::size_t pos = 0;
    auto skip = [&] {
        while (pos < word.size() && std::isspace(static_cast<unsigned char>(word[pos]))) {
            ++pos;
        }
    };
    auto fail = [&](const std::string &what) -> ParseError { return ParseError(what, base_offset + pos); };
    skip();
    if (pos == word.size()) {
        throw fail("empty word");
    }
    if (word[pos] == '1') {
        ++pos;
        skip();
        if (pos != word.size()) {
            throw fail("unexpected input after identity literal");
        }
        return FiniteGroup::identity();
    }
    ElementIndex acc = FiniteGroup::identity();
    while (true) {
        skip();
        std::size_t start = pos;
        while (pos < word.size() && (std::isalnum(static_cast<unsigned char>(word[pos])) || word[pos] == '_')) {
            ++pos;
        }
        if (pos == start || std::isdigit(static_cast<unsigned char>(word[start]))) {
            pos = start;
            throw fail("expected generator name");
        }
        auto name = word.substr(start, pos - start);
        auto gen = g.generator(name);
        if (!gen) {
            pos = start;
            throw fail("unknown generator '" + std::string(name) + "'");
        }
        std::int64_t e = 1;
        skip();
        if (pos < word.size() && word[pos] == '^') {
            ++pos;
            skip();
            bool negative = false;
            if (pos < word.size() && (word[pos] == '-' || word[pos] == '+')) {
                negative = word[pos] == '-';
                ++pos;
            }
            if (pos >= word.size() || !std::isdigit(static_cast<unsigned char>(word[pos]))) {
                throw fail("expected exponent after '^'");
            }
            std::int64_t v = 0;
            while (pos < word.size() && std::isdigit(static_cast<unsigned char>(word[pos]))) {
                v = v * 10 + (word[pos] - '0');
                if (v > 1000000000) {
                    throw fail("exponent too large");
                }
                ++pos;
            }
            e = negative ? -v : v;
        }
        acc = g.mul(acc, g.power(*gen, e));
        skip();
        if (pos == word.size()) {
            return acc;
        }
        if (word[pos] != '*') {
            throw fail("expected '*'");
        }
        ++pos;
    }
}

/// A subgroup as a sorted member list of its parent group.
class Subgroup {
   public:
    Subgroup(GroupPtr parent, std::vector<ElementIndex> members)
        : parent_(std::move(parent)), members_(std::move(members)) {
        std::sort(members_.begin(), members_.end());
        members_.erase(std::unique(members_.begin(), members_.end()), members_.end());
    }
    const GroupPtr &parent() const noexcept {
        return parent_;
    }
    const std::vector<ElementIndex> &members() const noexcept {
        return members_;
    }
    std::size_t order() const noexcept {
        return members_.size();
    }
    bool contains(ElementIndex a) const noexcept {
        return std::binary_search(members_.begin(), members_.end(), a);
    }
    bool is_trivial() const noexcept {
        return members_.size() == 1;
    }
    bool is_whole_group() const noexcept {
        return members_.size() == parent_->order();
    }
    bool is_cyclic() const noexcept {
        return std::any_of(members_.begin(), members_.end(),
                           [&](ElementIndex a) { return parent_->element_order(a) == members_.size(); });
    }
    friend bool operator==(const Subgroup &a, const Subgroup &b) {
        return a.members_ == b.members_ && a.parent_->same_structure(*b.parent_);
    }

   private:
    GroupPtr parent_;
    std::vector<ElementIndex> members_;
};

inline Subgroup subgroup_generated(const GroupPtr &g, const std::vector<ElementIndex> &seeds) {
    std::vector<char> in(g->order(), 0);
    std::vector<ElementIndex> members{0};
    in[0] = 1;
    std::vector<ElementIndex> gens;
    for (auto s : seeds) {
        if (s >= g->order()) {
            throw InputError("subgroup seed out of range");
        }
        if (s != 0) {
            gens.push_back(s);
        }
    }
    // in a finite group, closure under products with the seeds suffices
    for (std::size_t i = 0; i < members.size(); ++i) {
        for (auto s : gens) {
            auto p = g->mul(members[i], s);
            if (!in[p]) {
                in[p] = 1;
                members.push_back(p);
            }
        }
    }
    return Subgroup(g, std::move(members));
}

inline void require_same_parent(const Subgroup &s, const GroupPtr &g) {
    if (s.parent() != g && !s.parent()->same_structure(*g)) {
        throw InputError("subgroup belongs to a different group");
    }
}

inline Subgroup center(const GroupPtr &g) {
    std::vector<ElementIndex> z;
    for (ElementIndex a = 0; a < g->order(); ++a) {
        bool central = true;
        for (ElementIndex b = 0; b < g->order() && central; ++b) {
            central = g->mul(a, b) == g->mul(b, a);
        }
        if (central) {
            z.push_back(a);
        }
    }
    return Subgroup(g, std::move(z));
}

inline bool is_normal(const GroupPtr &g, const Subgroup &s) {
    require_same_parent(s, g);
    for (ElementIndex x = 0; x < g->order(); ++x) {
        for (auto m : s.members()) {
            if (!s.contains(g->mul(g->mul(x, m), g->inverse(x)))) {
                return false;
            }
        }
    }
    return true;
}

inline bool is_central(const GroupPtr &g, const Subgroup &s) {
    require_same_parent(s, g);
    auto z = center(g);
    return std::all_of(s.members().begin(), s.members().end(), [&](ElementIndex m) { return z.contains(m); });
}

inline Subgroup intersection(const Subgroup &a, const Subgroup &b) {
    require_same_parent(b, a.parent());
    std::vector<ElementIndex> out;
    std::set_intersection(a.members().begin(), a.members().end(), b.members().begin(), b.members().end(),
                          std::back_inserter(out));
    return Subgroup(a.parent(), std::move(out));
}

/// Element order grouped by right cosets Hg, each coset listed as h*g for h in H (in member order).
inline std::vector<ElementIndex> right_coset_order(const Subgroup &h) {
    const auto &g = *h.parent();
    std::vector<char> placed(g.order(), 0);
    std::vector<ElementIndex> out;
    for (ElementIndex rep = 0; rep < g.order(); ++rep) {
        if (placed[rep]) {
            continue;
        }
        for (auto m : h.members()) {
            auto e = g.mul(m, rep);
            placed[e] = 1;
            out.push_back(e);
        }
    }
    return out;
}

/// Left cosets gH, each listed as g*h for h in H.
inline std::vector<ElementIndex> left_coset_order(const Subgroup &h) {
    const auto &g = *h.parent();
    std::vector<char> placed(g.order(), 0);
    std::vector<ElementIndex> out;
    for (ElementIndex rep = 0; rep < g.order(); ++rep) {
        if (placed[rep]) {
            continue;
        }
        for (auto m : h.members()) {
            auto e = g.mul(rep, m);
            placed[e] = 1;
            out.push_back(e);
        }
    }
    return out;
}

}  // namespace qtwoblock

#endif
