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

#ifndef QTWOBLOCK_SPEC_FILE_HPP
#define QTWOBLOCK_SPEC_FILE_HPP

#include <cctype>
#include <cstddef>
#include <filesystem>
#include <fstream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "qtwoblock/error.hpp"
#include "qtwoblock/finite_group.hpp"
#include "qtwoblock/fq_algebra.hpp"
#include "qtwoblock/fq_linalg.hpp"
#include "qtwoblock/group_algebra.hpp"
#include "qtwoblock/two_block_code.hpp"

namespace qtwoblock {

namespace detail {

inline std::string trim(std::string_view s) {
    std::size_t b = 0, e = s.size();
    while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) {
        ++b;
    }
    while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) {
        --e;
    }
    return std::string(s.substr(b, e - b));
}

inline std::size_t parse_size(const std::string &s, const std::string &what) {
    if (s.empty() || !std::all_of(s.begin(), s.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); }) ||
        s.size() > 9) {
        throw InputError("expected a positive integer for " + what + ", got '" + s + "'");
    }
    return static_cast<std::size_t>(std::stoul(s));
}

/// Splits at the first comma outside parentheses.
inline std::optional<std::pair<std::string, std::string>> split_top_comma(std::string_view s) {
    int depth = 0;
    for (std::size_t i = 0; i < s.size(); ++i) {
        if (s[i] == '(') {
            ++depth;
        } else if (s[i] == ')') {
            --depth;
        } else if (s[i] == ',' && depth == 0) {
            return std::pair{trim(s.substr(0, i)), trim(s.substr(i + 1))};
        }
    }
    return std::nullopt;
}

inline std::string strip_parens(std::string s) {
    while (s.size() >= 2 && s.front() == '(' && s.back() == ')') {
        int depth = 0;
        bool wraps = true;
        for (std::size_t i = 0; i + 1 < s.size(); ++i) {
            depth += s[i] == '(' ? 1 : s[i] == ')' ? -1 : 0;
            if (depth == 0) {
                wraps = false;
                break;
            }
        }
        if (!wraps) {
            break;
        }
        s = trim(std::string_view(s).substr(1, s.size() - 2));
    }
    return s;
}

}  // namespace detail

/// Group description grammar:
///   alternating4 | cyclic N | dihedral N | product <spec>,<spec> |
///   cayley <path> | perms degree=N name=(cycles) ...
/// `product` splits at the first top-level comma; parenthesize to nest on the left.
/// Relative Cayley paths resolve against `base_dir`.
inline GroupPtr parse_group_spec(std::string_view text, const std::filesystem::path &base_dir = {}) {
    std::string s = detail::strip_parens(detail::trim(text));
    std::string kind, rest;
    {
        auto sp = s.find_first_of(" \t");
        kind = s.substr(0, sp);
        rest = sp == std::string::npos ? "" : detail::trim(std::string_view(s).substr(sp));
    }
    if (kind == "alternating4" || (kind == "alternating" && rest == "4")) {
        return alternating4_group();
    }
    if (kind == "cyclic") {
        return cyclic_group(detail::parse_size(rest, "cyclic order"));
    }
    if (kind == "dihedral") {
        return dihedral_group(detail::parse_size(rest, "dihedral parameter"));
    }
    if (kind == "product") {
        auto parts = detail::split_top_comma(rest);
        if (!parts) {
            throw InputError("product needs two comma-separated group specs");
        }
        auto g = parse_group_spec(parts->first, base_dir);
        auto h = parse_group_spec(parts->second, base_dir);
        return direct_product(*g, *h);
    }
    if (kind == "cayley") {
        if (rest.empty()) {
            throw InputError("cayley needs a file path");
        }
        std::filesystem::path p(rest);
        if (p.is_relative() && !base_dir.empty()) {
            p = base_dir / p;
        }
        return read_cayley_file(p.string());
    }
    if (kind == "perms") {
        // tokens name=value where value runs up to the next `name=`
        std::vector<std::pair<std::string, std::string>> kv;
        std::size_t i = 0;
        while (i < rest.size()) {
            while (i < rest.size() && std::isspace(static_cast<unsigned char>(rest[i]))) {
                ++i;
            }
            std::size_t eq = rest.find('=', i);
            if (eq == std::string::npos) {
                throw InputError("perms: expected name=value");
            }
            std::string name = detail::trim(std::string_view(rest).substr(i, eq - i));
            std::size_t j = eq + 1, next = rest.size();
            for (std::size_t t = j; t < rest.size(); ++t) {
                if (rest[t] == '=') {
                    std::size_t b = t;
                    while (b > j && (std::isalnum(static_cast<unsigned char>(rest[b - 1])) || rest[b - 1] == '_')) {
                        --b;
                    }
                    next = b;
                    break;
                }
            }
            kv.emplace_back(name, detail::trim(std::string_view(rest).substr(j, next - j)));
            i = next;
        }
        if (kv.empty() || kv.front().first != "degree") {
            throw InputError("perms: first token must be degree=N");
        }
        auto degree = detail::parse_size(kv.front().second, "degree");
        std::vector<NamedPermutation> gens;
        for (std::size_t t = 1; t < kv.size(); ++t) {
            gens.push_back({kv[t].first, parse_cycles(kv[t].second, degree)});
        }
        return group_from_permutations(degree, gens);
    }
    throw InputError("unsupported group spec '" + s + "'");
}

/// A parsed code specification file.
struct CodeSpec {
    PrimeField field{2};
    std::string group_label;  ///< group description as written (2BGA) or `cyclic l` (GB)
    std::optional<GroupProvenance> group_code;
    std::optional<GbProvenance> gb_code;
    std::optional<std::pair<FpMatrix, FpMatrix>> raw_code;
};

/// Section-based format:
///   [field] p = 2
///   [group] kind = alternating4
///   [a]     terms = 1, x, y, x^-1*y*x
///   [b]     terms = 1, x, y, y*x
/// or `[gb] l = 12, a = 1+x+x^3, b = 1+x^2`, or `[raw] A = <file>, B = <file>`
/// with matrices in the `rows cols p` text format. `#` starts a comment.
inline CodeSpec parse_code_spec(std::string_view text, const std::filesystem::path &base_dir = {}) {
    std::map<std::string, std::map<std::string, std::pair<std::string, std::size_t>>> sections;
    std::string current;
    std::size_t line_no = 0;
    std::istringstream in{std::string(text)};
    std::string line;
    auto fail = [&](std::size_t ln, const std::string &what) {
        return InputError("line " + std::to_string(ln) + ": " + what);
    };
    while (std::getline(in, line)) {
        ++line_no;
        if (auto hash = line.find('#'); hash != std::string::npos) {
            line.erase(hash);
        }
        std::string body = detail::trim(line);
        if (body.empty()) {
            continue;
        }
        if (body.front() == '[') {
            auto close = body.find(']');
            if (close == std::string::npos) {
                throw fail(line_no, "unterminated section header");
            }
            current = detail::trim(std::string_view(body).substr(1, close - 1));
            static const char *known[] = {"field", "group", "a", "b", "gb", "raw"};
            if (std::find(std::begin(known), std::end(known), current) == std::end(known)) {
                throw fail(line_no, "unknown section [" + current + "]");
            }
            if (sections.count(current)) {
                throw fail(line_no, "duplicate section [" + current + "]");
            }
            sections[current];
            body = detail::trim(std::string_view(body).substr(close + 1));
            if (body.empty()) {
                continue;
            }
        }
        if (current.empty()) {
            throw fail(line_no, "content outside of a section");
        }
        // [gb] and [raw] take comma-separated key = value lists; element terms contain commas
        std::vector<std::string> items;
        if (current == "gb" || current == "raw") {
            std::string remaining = body;
            while (auto parts = detail::split_top_comma(remaining)) {
                items.push_back(parts->first);
                remaining = parts->second;
            }
            items.push_back(remaining);
        } else {
            items.push_back(body);
        }
        for (const auto &item : items) {
            auto eq = item.find('=');
            if (eq == std::string::npos) {
                throw fail(line_no, "expected key = value");
            }
            auto key = detail::trim(std::string_view(item).substr(0, eq));
            auto value = detail::trim(std::string_view(item).substr(eq + 1));
            auto &sec = sections[current];
            if (sec.count(key)) {
                throw fail(line_no, "duplicate key '" + key + "'");
            }
            sec[key] = {value, line_no};
        }
    }

    auto get = [&](const std::string &sec, const std::string &key) -> std::pair<std::string, std::size_t> {
        auto s = sections.find(sec);
        if (s == sections.end() || !s->second.count(key)) {
            throw InputError("missing '" + key + "' in section [" + sec + "]");
        }
        return s->second.at(key);
    };
    auto check_keys = [&](const std::string &sec, std::initializer_list<const char *> allowed) {
        for (const auto &[k, v] : sections[sec]) {
            if (std::none_of(allowed.begin(), allowed.end(), [&](const char *a) { return k == a; })) {
                throw fail(v.second, "unknown key '" + k + "' in section [" + sec + "]");
            }
        }
    };
    auto wrap = [&](std::size_t ln, auto &&fn) {
        try {
            return fn();
        } catch (const ParseError &e) {
            throw ParseError("line " + std::to_string(ln) + ": " + e.what(), e.offset());
        } catch (const InputError &e) {
            throw fail(ln, e.what());
        }
    };

    CodeSpec spec;
    if (sections.count("field")) {
        check_keys("field", {"p"});
        auto [p, ln] = get("field", "p");
        spec.field = wrap(ln, [&] { return PrimeField(static_cast<std::uint32_t>(detail::parse_size(p, "p"))); });
    }
    bool has_group = sections.count("group") || sections.count("a") || sections.count("b");
    int kinds = int(has_group) + int(sections.count("gb") > 0) + int(sections.count("raw") > 0);
    if (kinds != 1) {
        throw InputError("exactly one of [group]+[a]+[b], [gb], or [raw] must be present");
    }
    if (has_group) {
        check_keys("group", {"kind"});
        check_keys("a", {"terms"});
        check_keys("b", {"terms"});
        auto [kind, gl] = get("group", "kind");
        auto group = wrap(gl, [&] { return parse_group_spec(kind, base_dir); });
        auto [at, al] = get("a", "terms");
        auto [bt, bl] = get("b", "terms");
        auto a = wrap(al, [&] { return parse_element(group, spec.field, at); });
        auto b = wrap(bl, [&] { return parse_element(group, spec.field, bt); });
        spec.group_label = kind;
        spec.group_code = GroupProvenance{std::move(a), std::move(b)};
    } else if (sections.count("gb")) {
        check_keys("gb", {"l", "a", "b"});
        auto [l, ll] = get("gb", "l");
        auto ell = wrap(ll, [&] { return detail::parse_size(l, "l"); });
        if (ell == 0) {
            throw fail(ll, "l must be positive");
        }
        auto [at, al] = get("gb", "a");
        auto [bt, bl] = get("gb", "b");
        auto a = wrap(al, [&] { return parse_poly(at, spec.field); });
        auto b = wrap(bl, [&] { return parse_poly(bt, spec.field); });
        spec.group_label = "cyclic " + std::to_string(ell);
        spec.gb_code = GbProvenance{ell, std::move(a), std::move(b)};
    } else {
        check_keys("raw", {"A", "B"});
        auto load = [&](const std::string &key) {
            auto [path, ln] = get("raw", key);
            return wrap(ln, [&] {
                std::filesystem::path p(path);
                if (p.is_relative() && !base_dir.empty()) {
                    p = base_dir / p;
                }
                std::ifstream f(p);
                if (!f) {
                    throw InputError("cannot open matrix file '" + p.string() + "'");
                }
                auto m = read_matrix(f);
                if (!(m.field() == spec.field)) {
                    throw InputError("matrix field does not match [field]");
                }
                return m;
            });
        };
        spec.group_label = "raw";
        spec.raw_code = std::pair{load("A"), load("B")};
    }
    return spec;
}

inline CodeSpec read_code_spec(const std::filesystem::path &path) {
    std::ifstream in(path);
    if (!in) {
        throw InputError("cannot open spec file '" + path.string() + "'");
    }
    std::stringstream ss;
    ss << in.rdbuf();
    return parse_code_spec(ss.str(), path.parent_path());
}

inline TwoBlockCode build_code(const CodeSpec &spec) {
    if (spec.group_code) {
        return build_2bga(spec.group_code->a, spec.group_code->b);
    }
    if (spec.gb_code) {
        return build_gb(static_cast<std::int64_t>(spec.gb_code->ell), spec.gb_code->a, spec.gb_code->b);
    }
    return build_two_block(spec.raw_code->first, spec.raw_code->second);
}

}  // namespace qtwoblock

#endif
