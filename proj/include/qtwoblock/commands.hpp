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

#ifndef QTWOBLOCK_COMMANDS_HPP
#define QTWOBLOCK_COMMANDS_HPP

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <cstdint>
#include <exception>
#include <filesystem>
#include <fstream>
#include <mutex>
#include <optional>
#include <ostream>
#include <set>
#include <string>
#include <thread>
#include <tuple>
#include <utility>
#include <vector>

#include "qtwoblock/classify.hpp"
#include "qtwoblock/distance.hpp"
#include "qtwoblock/error.hpp"
#include "qtwoblock/spec_file.hpp"
#include "qtwoblock/two_block_code.hpp"

namespace qtwoblock {

inline constexpr const char *kCsvVersionLine = "# qtwoblock-csv v1";
inline constexpr const char *kCsvHeader = "group,p,a,b,n,k,dZ,dZ_exact,dX,dX_exact,label,bound";

/// Exit codes of the command-line front end.
enum ExitCode : int { kExitOk = 0, kExitFailure = 1, kExitInput = 2, kExitBudget = 3 };

struct RunOptions {
    std::uint64_t budget = kDefaultBudget;
    std::uint64_t iterations = 200;
    std::uint64_t seed = 0;
    bool witness = false;
    bool no_fallback = false;
    bool csv = false;
    std::string dump_matrices;  ///< directory, empty for none
};

/// Parameters and whatever distance/classification data a command computed.
struct CodeReport {
    std::size_t n = 0, k = 0, q = 0, rank_hx = 0, rank_hz = 0;
    std::optional<DistanceResult> dz, dx;
    std::optional<Classification> classification;
    std::optional<CentralIntersectionReport> central;

    std::optional<std::size_t> d() const {
        if (!dz || !dx) {
            return std::nullopt;
        }
        return distance_less(dz->value, dx->value) ? dz->value : dx->value;
    }
    bool d_exact() const {
        return dz && dx && dz->exact && dx->exact;
    }
};

namespace detail {

inline std::string distance_text(const std::optional<std::size_t> &v) {
    return v ? std::to_string(*v) : "inf";
}

inline std::string csv_field(const std::string &s) {
    if (s.find_first_of(",\"\n") == std::string::npos) {
        return s;
    }
    std::string out = "\"";
    for (char c : s) {
        out += c == '"' ? "\"\"" : std::string(1, c);
    }
    return out + "\"";
}

inline const char *bool_text(bool b) {
    return b ? "true" : "false";
}

}  // namespace detail

inline CodeReport params_report(const TwoBlockCode &code) {
    CodeReport r;
    r.n = code.n();
    r.k = code.k();
    r.q = code.field().p();
    r.rank_hx = code.rank_hx();
    r.rank_hz = code.rank_hz();
    return r;
}

/// Exhaustive search, falling back to the randomized upper bound when the
/// budget is exceeded (unless no_fallback is set, which rethrows).
inline DistanceResult distance_with_fallback(const FpMatrix &hx, const FpMatrix &hz, CssSide side,
                                             const RunOptions &opts) {
    try {
        return css_distance_exact(hx, hz, side, opts.budget);
    } catch (const BudgetExceeded &) {
        if (opts.no_fallback) {
            throw;
        }
        return css_distance_upper(hx, hz, side, opts.iterations, opts.seed);
    }
}

inline void add_distances(CodeReport &r, const TwoBlockCode &code, const RunOptions &opts) {
    r.dz = distance_with_fallback(code.hx(), code.hz(), CssSide::Z, opts);
    r.dx = distance_with_fallback(code.hx(), code.hz(), CssSide::X, opts);
}

/// `[[n,k,d]]_q` with `?` for an uncomputed distance and `<=d` for an upper bound.
inline std::string parameters_text(const CodeReport &r) {
    std::string d = "?";
    if (r.dz && r.dx) {
        d = (r.d_exact() ? "" : "<=") + detail::distance_text(r.d());
    }
    return "[[" + std::to_string(r.n) + "," + std::to_string(r.k) + "," + d + "]]_" + std::to_string(r.q);
}

inline std::string element_text(const CodeSpec &spec, bool first) {
    if (spec.group_code) {
        return format_element(first ? spec.group_code->a : spec.group_code->b);
    }
    if (spec.gb_code) {
        return format_poly(first ? spec.gb_code->a : spec.gb_code->b);
    }
    return "";
}

inline const char *provenance_text(const TwoBlockCode &code) {
    switch (code.provenance().index()) {
        case 1:
            return "2bga";
        case 2:
            return "gb";
        default:
            return "raw";
    }
}

inline void print_header(std::ostream &out, const CodeSpec &spec, const TwoBlockCode &code, const CodeReport &r) {
    out << "n = " << r.n << '\n'
        << "k = " << r.k << '\n'
        << "q = " << r.q << '\n'
        << "ell = " << code.ell() << '\n'
        << "rank_HX = " << r.rank_hx << '\n'
        << "rank_HZ = " << r.rank_hz << '\n'
        << "provenance = " << provenance_text(code) << '\n';
    if (!code.provenance().index()) {
        return;
    }
    out << "group = " << spec.group_label << '\n'
        << "a = " << element_text(spec, true) << '\n'
        << "b = " << element_text(spec, false) << '\n';
}

inline void print_side(std::ostream &out, const char *name, const DistanceResult &d, const RunOptions &opts) {
    if (d.exact) {
        out << name << " = " << detail::distance_text(d.value) << " (exact)\n";
    } else {
        out << name << " <= " << detail::distance_text(d.value) << " (not exact)\n";
    }
    out << name << "_exact = " << detail::bool_text(d.exact) << '\n'
        << name << "_method = " << to_string(d.method) << '\n'
        << name << "_examined = " << d.examined << '\n';
    if (d.seed) {
        out << name << "_seed = " << *d.seed << '\n';
    }
    if (opts.witness && !d.witness.empty()) {
        out << name << "_witness =";
        bool binary = true;
        for (std::size_t i = 0; i < d.witness.size(); ++i) {
            if (d.witness[i]) {
                out << ' ' << i;
                binary = binary && d.witness[i] == 1;
            }
        }
        out << '\n';
        if (!binary) {
            out << name << "_witness_values =";
            for (auto v : d.witness) {
                if (v) {
                    out << ' ' << v;
                }
            }
            out << '\n';
        }
    }
}

inline void dump_matrices(const TwoBlockCode &code, const std::string &dir) {
    if (dir.empty()) {
        return;
    }
    std::filesystem::create_directories(dir);
    auto write = [&](const char *name, const FpMatrix &m) {
        std::ofstream f(std::filesystem::path(dir) / name);
        if (!f) {
            throw InputError("cannot write matrix file in '" + dir + "'");
        }
        write_matrix(f, m);
    };
    write("A.txt", code.a());
    write("B.txt", code.b());
    write("HX.txt", code.hx());
    write("HZ.txt", code.hz());
}

/// `bound` column: floor(d0/c), `inf` for the degenerate case, `n/a` otherwise.
inline std::string bound_text(const std::optional<CentralIntersectionReport> &c) {
    if (!c || !c->applicable) {
        return "n/a";
    }
    return detail::distance_text(c->bound);
}

inline std::string csv_row(const std::string &group, std::uint32_t p, const std::string &a, const std::string &b,
                           const CodeReport &r) {
    auto dist = [](const std::optional<DistanceResult> &d) {
        return d ? detail::distance_text(d->value) : std::string();
    };
    auto exact = [](const std::optional<DistanceResult> &d) { return detail::bool_text(d && d->exact); };
    std::string label = r.classification ? to_string(r.classification->label) : "n/a";
    return detail::csv_field(group) + ',' + std::to_string(p) + ',' + detail::csv_field(a) + ',' +
           detail::csv_field(b) + ',' + std::to_string(r.n) + ',' + std::to_string(r.k) + ',' + dist(r.dz) + ',' +
           exact(r.dz) + ',' + dist(r.dx) + ',' + exact(r.dx) + ',' + label + ',' + bound_text(r.central);
}

/// Single-instance CSV with every column filled.
inline void print_full_csv(std::ostream &out, const CodeSpec &spec, const TwoBlockCode &code,
                           const RunOptions &opts) {
    auto r = params_report(code);
    add_distances(r, code, opts);
    if (group_provenance(code)) {
        r.classification = classify(code);
        try {
            r.central = central_intersection_bound(code, opts.budget);
        } catch (const BudgetExceeded &) {
            if (opts.no_fallback) {
                throw;
            }
        }
    }
    out << kCsvVersionLine << '\n'
        << kCsvHeader << '\n'
        << csv_row(spec.group_label, spec.field.p(), element_text(spec, true), element_text(spec, false), r) << '\n';
}

inline int run_params(const CodeSpec &spec, const RunOptions &opts, std::ostream &out) {
    auto code = build_code(spec);
    auto r = params_report(code);
    out << "code = " << parameters_text(r) << '\n';
    print_header(out, spec, code, r);
    dump_matrices(code, opts.dump_matrices);
    return kExitOk;
}

inline int run_distance(const CodeSpec &spec, const RunOptions &opts, std::ostream &out) {
    auto code = build_code(spec);
    if (opts.csv) {
        print_full_csv(out, spec, code, opts);
        return kExitOk;
    }
    auto r = params_report(code);
    add_distances(r, code, opts);
    out << "code = " << parameters_text(r) << (r.d_exact() ? " (exact)" : " (not exact)") << '\n';
    print_header(out, spec, code, r);
    print_side(out, "dZ", *r.dz, opts);
    print_side(out, "dX", *r.dx, opts);
    if (r.d_exact()) {
        out << "d = " << detail::distance_text(r.d()) << '\n';
    } else {
        out << "d <= " << detail::distance_text(r.d()) << '\n';
    }
    dump_matrices(code, opts.dump_matrices);
    return kExitOk;
}

inline int run_classify(const CodeSpec &spec, const RunOptions &opts, std::ostream &out) {
    auto code = build_code(spec);
    if (opts.csv) {
        print_full_csv(out, spec, code, opts);
        return kExitOk;
    }
    auto c = classify(code);
    auto s1 = statement1_check(code);
    const auto &e = c.evidence;
    using detail::bool_text;
    out << "label = " << to_string(c.label) << '\n'
        << "code = " << parameters_text(params_report(code)) << '\n'
        << "group = " << spec.group_label << '\n'
        << "group_order = " << e.group_order << '\n'
        << "Ga_order = " << e.ga_order << '\n'
        << "Gb_order = " << e.gb_order << '\n'
        << "group_abelian = " << bool_text(e.group_abelian) << '\n'
        << "Ga_cyclic = " << bool_text(e.ga_cyclic) << '\n'
        << "Gb_cyclic = " << bool_text(e.gb_cyclic) << '\n'
        << "gcd_p_G_is_1 = " << bool_text(e.group_semisimple) << '\n'
        << "gcd_p_Ga_is_1 = " << bool_text(e.ga_semisimple) << '\n'
        << "gcd_p_Gb_is_1 = " << bool_text(e.gb_semisimple) << '\n'
        << "k_odd = " << bool_text(e.k_odd) << '\n'
        << "rank_HX = " << code.rank_hx() << '\n'
        << "rank_HZ = " << code.rank_hz() << '\n'
        << "rank_equality = " << to_string(s1.verdict) << '\n'
        << "rank_equality_route = " << s1.route << '\n';
    return kExitOk;
}

inline int run_bound(const CodeSpec &spec, const RunOptions &opts, std::ostream &out) {
    auto code = build_code(spec);
    if (opts.csv) {
        print_full_csv(out, spec, code, opts);
        return kExitOk;
    }
    auto c = central_intersection_bound(code, opts.budget);
    auto css = css_lower_bound(code, opts.budget);
    auto dz = distance_with_fallback(code.hx(), code.hz(), CssSide::Z, opts);
    using detail::bool_text;
    using detail::distance_text;
    out << "code = " << parameters_text(params_report(code)) << '\n'
        << "Ga_order = " << c.ga.order() << '\n'
        << "Gb_order = " << c.gb.order() << '\n'
        << "c = " << c.c << '\n'
        << "N_central = " << bool_text(c.central) << '\n'
        << "gcd_p_c_is_1 = " << bool_text(c.gcd_ok) << '\n'
        << "d_CA = " << distance_text(c.dist_a.value) << '\n'
        << "d_CB = " << distance_text(c.dist_b.value) << '\n'
        << "d0 = " << distance_text(c.d0) << '\n'
        << "bound = " << bound_text(c) << '\n'
        << "bound_degenerate = " << bool_text(c.degenerate) << '\n'
        << "css_lower_dZ = " << distance_text(css.dz_lower.value) << '\n'
        << "css_lower_dX = " << distance_text(css.dx_lower.value) << '\n';
    if (dz.exact) {
        out << "dZ = " << distance_text(dz.value) << " (exact)\n";
        if (c.applicable && c.bound) {
            out << "bound_holds = " << bool_text(!distance_less(dz.value, c.bound)) << '\n';
        }
    } else {
        out << "dZ <= " << distance_text(dz.value) << " (not exact)\n";
    }
    return kExitOk;
}

inline int run_hpcheck(const CodeSpec &spec, const RunOptions &opts, std::ostream &out) {
    auto code = build_code(spec);
    if (opts.csv) {
        print_full_csv(out, spec, code, opts);
        return kExitOk;
    }
    auto rep = hp_equivalence_check(code, opts.budget);
    using detail::bool_text;
    using detail::distance_text;
    out << "applicable = " << bool_text(rep.applicable) << '\n'
        << "Ga_order = " << rep.ga_order << '\n'
        << "Gb_order = " << rep.gb_order << '\n';
    if (!rep.applicable) {
        out << "reason = " << rep.reason << '\n';
        return kExitOk;
    }
    out << "code_n = " << rep.n_code << '\n'
        << "code_k = " << rep.k_code << '\n'
        << "code_dZ = " << distance_text(rep.dz_code.value) << '\n'
        << "code_dX = " << distance_text(rep.dx_code.value) << '\n'
        << "hp_n = " << rep.n_hp << '\n'
        << "hp_k = " << rep.k_hp << '\n'
        << "hp_dZ = " << distance_text(rep.dz_hp.value) << '\n'
        << "hp_dX = " << distance_text(rep.dx_hp.value) << '\n'
        << "parameters_equal = " << bool_text(rep.parameters_equal) << '\n';
    return kExitOk;
}

/// GB code from polynomials: distance report plus the gcd dimension formula.
inline int run_gb(std::int64_t ell, const std::string &a, const std::string &b, std::uint32_t p,
                  const RunOptions &opts, std::ostream &out) {
    if (ell <= 0) {
        throw InputError("--l must be positive");
    }
    CodeSpec spec;
    spec.field = PrimeField(p);
    spec.group_label = "cyclic " + std::to_string(ell);
    spec.gb_code = GbProvenance{static_cast<std::size_t>(ell), parse_poly(a, spec.field), parse_poly(b, spec.field)};
    int rc = run_distance(spec, opts, out);
    if (opts.csv) {
        return rc;
    }
    auto dim = gb_dimension(ell, spec.gb_code->a, spec.gb_code->b);
    out << "h = " << format_poly(dim.h) << '\n'
        << "k_formula = " << dim.k << '\n'
        << "k_formula_degenerate = " << detail::bool_text(dim.degenerate) << '\n';
    return rc;
}

enum class KFilter { All, Odd, Even, Nonzero };

struct ScanOptions {
    std::vector<std::string> groups;  ///< group specs, one per instance family
    std::filesystem::path base_dir;   ///< for relative Cayley paths
    std::uint32_t p = 2;
    std::size_t wa = 2;
    std::size_t wb = 2;
    std::size_t min_weight = 2;
    KFilter filter = KFilter::All;
    bool params_only = false;
    unsigned threads = 1;
    RunOptions run;
};

struct ScanRow {
    std::size_t group_index = 0;
    std::string group;
    std::vector<FieldElem> a_key, b_key;
    std::string a, b;
    CodeReport report;
};

/// Elements with weight in [min_weight, cap] and coefficients in F_p^x.
/// Over F_2 the support always contains the identity.
inline std::vector<GroupAlgebraElement> enumerate_elements(const GroupPtr &g, const PrimeField &field,
                                                           std::size_t min_weight, std::size_t cap) {
    const std::size_t l = g->order();
    cap = std::min(cap, l);
    std::vector<GroupAlgebraElement> out;
    std::vector<ElementIndex> support;
    std::vector<FieldElem> coeffs(l, 0);
    const bool binary = field.is_binary();
    auto emit_coeffs = [&](auto &&self, std::size_t pos) -> void {
        if (pos == support.size()) {
            out.emplace_back(g, field, coeffs);
            return;
        }
        for (std::uint32_t c = 1; c < field.p(); ++c) {
            coeffs[support[pos]] = static_cast<FieldElem>(c);
            self(self, pos + 1);
        }
        coeffs[support[pos]] = 0;
    };
    auto choose = [&](auto &&self, ElementIndex start, std::size_t left) -> void {
        if (left == 0) {
            emit_coeffs(emit_coeffs, 0);
            return;
        }
        for (ElementIndex e = start; e + left <= l; ++e) {
            support.push_back(e);
            self(self, e + 1, left - 1);
            support.pop_back();
        }
    };
    for (std::size_t w = std::max<std::size_t>(min_weight, 1); w <= cap; ++w) {
        if (binary) {
            support.assign(1, 0);
            choose(choose, 1, w - 1);
        } else {
            support.clear();
            choose(choose, 0, w);
        }
    }
    return out;
}

inline bool passes(KFilter f, std::size_t k) {
    switch (f) {
        case KFilter::Odd:
            return k % 2 == 1;
        case KFilter::Even:
            return k % 2 == 0;
        case KFilter::Nonzero:
            return k != 0;
        case KFilter::All:
            break;
    }
    return true;
}

/// Enumerates (a, b) pairs per group, dropping (b, a) duplicates, and sorts
/// rows by (n, k, d, group index, a, b) independent of thread count.
inline std::vector<ScanRow> scan_instances(const ScanOptions &opts) {
    if (opts.groups.empty()) {
        throw InputError("empty group list");
    }
    if (opts.wa < 1 || opts.wb < 1) {
        throw InputError("weight caps must be at least 1");
    }
    PrimeField field(opts.p);
    struct Job {
        std::size_t group_index;
        std::size_t ia, ib;
    };
    std::vector<GroupPtr> groups;
    std::vector<std::vector<GroupAlgebraElement>> list_a, list_b;
    std::vector<Job> jobs;
    for (std::size_t gi = 0; gi < opts.groups.size(); ++gi) {
        auto g = parse_group_spec(opts.groups[gi], opts.base_dir);
        groups.push_back(g);
        list_a.push_back(enumerate_elements(g, field, opts.min_weight, opts.wa));
        list_b.push_back(enumerate_elements(g, field, opts.min_weight, opts.wb));
        std::set<std::pair<std::vector<FieldElem>, std::vector<FieldElem>>> seen;
        for (std::size_t ia = 0; ia < list_a[gi].size(); ++ia) {
            for (std::size_t ib = 0; ib < list_b[gi].size(); ++ib) {
                const auto &ka = list_a[gi][ia].coeffs();
                const auto &kb = list_b[gi][ib].coeffs();
                auto key = ka <= kb ? std::pair{ka, kb} : std::pair{kb, ka};
                if (seen.insert(std::move(key)).second) {
                    jobs.push_back({gi, ia, ib});
                }
            }
        }
    }

    std::vector<std::optional<ScanRow>> results(jobs.size());
    std::atomic<std::size_t> next{0};
    std::exception_ptr error;
    std::mutex error_mutex;
    auto worker = [&] {
        for (std::size_t j; (j = next.fetch_add(1)) < jobs.size();) {
            try {
                const auto &job = jobs[j];
                const auto &a = list_a[job.group_index][job.ia];
                const auto &b = list_b[job.group_index][job.ib];
                auto code = build_2bga(a, b);
                if (!passes(opts.filter, code.k())) {
                    continue;
                }
                ScanRow row;
                row.group_index = job.group_index;
                row.group = opts.groups[job.group_index];
                row.a_key = a.coeffs();
                row.b_key = b.coeffs();
                row.a = format_element(a);
                row.b = format_element(b);
                row.report = params_report(code);
                row.report.classification = classify(code);
                try {
                    row.report.central = central_intersection_bound(code, opts.run.budget);
                } catch (const BudgetExceeded &) {
                }
                if (!opts.params_only) {
                    add_distances(row.report, code, opts.run);
                }
                results[j] = std::move(row);
            } catch (...) {
                std::lock_guard lock(error_mutex);
                if (!error) {
                    error = std::current_exception();
                }
                next = jobs.size();
            }
        }
    };
    unsigned nthreads = std::max(1u, opts.threads);
    if (nthreads == 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        for (unsigned t = 0; t < nthreads; ++t) {
            pool.emplace_back(worker);
        }
        for (auto &t : pool) {
            t.join();
        }
    }
    if (error) {
        std::rethrow_exception(error);
    }
    std::vector<ScanRow> rows;
    for (auto &r : results) {
        if (r) {
            rows.push_back(std::move(*r));
        }
    }
    auto sort_key = [](const ScanRow &r) {
        auto d = r.report.d();
        return std::tuple{r.report.n, r.report.k, d.has_value() ? 0 : 1, d.value_or(0), r.group_index};
    };
    std::sort(rows.begin(), rows.end(), [&](const ScanRow &x, const ScanRow &y) {
        auto kx = sort_key(x), ky = sort_key(y);
        if (kx != ky) {
            return kx < ky;
        }
        return std::tie(x.a_key, x.b_key) < std::tie(y.a_key, y.b_key);
    });
    return rows;
}

inline const char *to_string(KFilter f) {
    switch (f) {
        case KFilter::Odd:
            return "odd";
        case KFilter::Even:
            return "even";
        case KFilter::Nonzero:
            return "nonzero";
        case KFilter::All:
            break;
    }
    return "all";
}

inline void write_scan_csv(std::ostream &out, const ScanOptions &opts, const std::vector<ScanRow> &rows) {
    out << kCsvVersionLine << '\n'
        << "# scan p=" << opts.p << " wa=" << opts.wa << " wb=" << opts.wb << " min_weight=" << opts.min_weight
        << " k_filter=" << to_string(opts.filter) << " budget=" << opts.run.budget
        << " iterations=" << opts.run.iterations << " seed=" << opts.run.seed
        << " distances=" << (opts.params_only ? "off" : "on") << '\n'
        << "# normalization="
        << (opts.p == 2 ? "identity-in-support (a and b contain the group identity)" : "none") << '\n'
        << "# dedup=exact-duplicates,(a,b)-swap\n"
        << kCsvHeader << '\n';
    for (const auto &r : rows) {
        out << csv_row(r.group, opts.p, r.a, r.b, r.report) << '\n';
    }
}

inline int run_scan(const ScanOptions &opts, std::ostream &out) {
    auto rows = scan_instances(opts);
    write_scan_csv(out, opts, rows);
    return kExitOk;
}

/// One group spec per line; blank lines and `#` comments ignored.
inline std::vector<std::string> read_group_list(const std::filesystem::path &path) {
    std::ifstream in(path);
    if (!in) {
        throw InputError("cannot open group list '" + path.string() + "'");
    }
    std::vector<std::string> out;
    std::string line;
    while (std::getline(in, line)) {
        if (auto h = line.find('#'); h != std::string::npos) {
            line.erase(h);
        }
        auto t = detail::trim(line);
        if (!t.empty()) {
            out.push_back(t);
        }
    }
    return out;
}

}  // namespace qtwoblock

#endif
