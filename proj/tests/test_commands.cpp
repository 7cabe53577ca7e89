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

#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "test_util.hpp"

#ifndef QTWOBLOCK_SPEC_DIR
#define QTWOBLOCK_SPEC_DIR "specs"
#endif

namespace qtwoblock {
namespace {

const std::filesystem::path kSpecs = QTWOBLOCK_SPEC_DIR;

std::string run(int (*cmd)(const CodeSpec &, const RunOptions &, std::ostream &), const CodeSpec &spec,
                const RunOptions &opts = {}) {
    std::ostringstream out;
    EXPECT_EQ(cmd(spec, opts, out), kExitOk);
    return out.str();
}

bool contains(const std::string &hay, const std::string &needle) {
    return hay.find(needle) != std::string::npos;
}

std::string first_line(const std::string &s) {
    return s.substr(0, s.find('\n'));
}

TEST(SpecFile, GroupGrammar) {
    EXPECT_EQ(parse_group_spec("alternating4")->order(), 12u);
    EXPECT_EQ(parse_group_spec("alternating 4")->order(), 12u);
    EXPECT_EQ(parse_group_spec("cyclic 7")->order(), 7u);
    EXPECT_EQ(parse_group_spec("dihedral 4")->order(), 8u);
    EXPECT_EQ(parse_group_spec("product cyclic 2, cyclic 4")->order(), 8u);
    EXPECT_EQ(parse_group_spec("product (product cyclic 2, cyclic 2), cyclic 3")->order(), 12u);
    EXPECT_EQ(parse_group_spec("perms degree=4 x=(0 1 2) y=(0 1)(2 3)")->order(), 12u);
    EXPECT_THROW(parse_group_spec("cyclic"), InputError);
    EXPECT_THROW(parse_group_spec("cyclic -3"), InputError);
    EXPECT_THROW(parse_group_spec("sporadic 7"), InputError);
    EXPECT_THROW(parse_group_spec("product cyclic 2"), InputError);
}

TEST(SpecFile, CayleyPathsResolveAgainstSpec) {
    auto dir = std::filesystem::temp_directory_path() / "qtwoblock_cayley_test";
    std::filesystem::create_directories(dir);
    {
        std::ofstream f(dir / "c3.txt");
        write_cayley_table(f, *cyclic_group(3));
    }
    auto spec = parse_code_spec("[field]\np = 2\n[group]\nkind = cayley c3.txt\n[a]\nterms = 1, x\n[b]\nterms = 1, x^2\n",
                                dir);
    EXPECT_EQ(build_code(spec).k(), 2u);
    EXPECT_THROW(parse_group_spec("cayley missing.txt", dir), InputError);
    std::filesystem::remove_all(dir);
}

TEST(SpecFile, Example1) {
    auto spec = read_code_spec(kSpecs / "example1.spec");
    ASSERT_TRUE(spec.group_code);
    EXPECT_EQ(spec.field.p(), 2u);
    auto code = build_code(spec);
    EXPECT_EQ(code.n(), 24u);
    EXPECT_EQ(code.k(), 5u);
}

TEST(SpecFile, Errors) {
    auto expect_error = [](const std::string &text, const std::string &fragment) {
        try {
            parse_code_spec(text);
            ADD_FAILURE() << "no error for: " << text;
        } catch (const InputError &e) {
            EXPECT_TRUE(contains(e.what(), fragment)) << e.what();
        }
    };
    expect_error("[field]\np = 4\n[gb]\nl = 2, a = 1, b = 1\n", "line 2");
    expect_error("[colour]\n", "unknown section");
    expect_error("[field]\np = 2\n", "exactly one");
    expect_error("p = 2\n", "outside of a section");
    expect_error("[field]\np = 2\n[gb]\nl = 2, a = 1+y, b = 1\n", "line 4");
    expect_error("[field]\np = 2\n[group]\nkind = cyclic 3\n[a]\nterms = 1, z\n[b]\nterms = 1\n", "line 6");
    expect_error("[field]\np = 2\n[group]\nkind = cyclic 3\n[a]\nterms = 1\n", "[b]");
    EXPECT_THROW(read_code_spec(kSpecs / "does-not-exist.spec"), InputError);
}

TEST(SpecFile, RawBlocks) {
    auto spec = read_code_spec(kSpecs / "noncommuting.spec");
    ASSERT_TRUE(spec.raw_code);
    try {
        build_code(spec);
        FAIL();
    } catch (const InputError &e) {
        EXPECT_STREQ(e.what(), "blocks do not commute");
    }
}

TEST(Commands, Params) {
    auto out = run(run_params, read_code_spec(kSpecs / "example1.spec"));
    EXPECT_EQ(first_line(out), "code = [[24,5,?]]_2");
    EXPECT_TRUE(contains(out, "rank_HX = 10\n"));
    EXPECT_TRUE(contains(out, "rank_HZ = 9\n"));
    EXPECT_EQ(first_line(run(run_params, read_code_spec(kSpecs / "gb_l2.spec"))), "code = [[4,2,?]]_2");
}

TEST(Commands, DistanceExactAndFallback) {
    auto gb = read_code_spec(kSpecs / "gb_l2.spec");
    EXPECT_EQ(first_line(run(run_distance, gb)), "code = [[4,2,2]]_2 (exact)");

    auto ex = read_code_spec(kSpecs / "example1.spec");
    RunOptions tiny;
    tiny.budget = 16;
    auto out = run(run_distance, ex, tiny);
    EXPECT_TRUE(contains(first_line(out), "(not exact)"));
    EXPECT_TRUE(contains(out, "dZ <= "));
    EXPECT_TRUE(contains(out, "dZ_method = random-information-set"));

    tiny.no_fallback = true;
    std::ostringstream sink;
    EXPECT_THROW(run_distance(ex, tiny, sink), BudgetExceeded);
}

TEST(Commands, DistanceWitness) {
    RunOptions opts;
    opts.witness = true;
    auto out = run(run_distance, read_code_spec(kSpecs / "gb_l2.spec"), opts);
    EXPECT_TRUE(contains(out, "dZ_witness = "));
    EXPECT_TRUE(contains(out, "dX_witness = "));
}

TEST(Commands, ClassifyBoundHpcheck) {
    auto ex = read_code_spec(kSpecs / "example1.spec");
    auto c = run(run_classify, ex);
    EXPECT_EQ(first_line(c), "label = essentially-non-abelian");
    EXPECT_TRUE(contains(c, "k_odd = true"));
    auto b = run(run_bound, ex);
    EXPECT_TRUE(contains(b, "N_central = false"));
    EXPECT_TRUE(contains(b, "bound = n/a"));
    auto h = run(run_hpcheck, read_code_spec(kSpecs / "c2xc2.spec"));
    EXPECT_TRUE(contains(h, "applicable = true"));
    EXPECT_TRUE(contains(h, "parameters_equal = true"));
}

TEST(Commands, CsvMode) {
    RunOptions opts;
    opts.csv = true;
    auto out = run(run_classify, read_code_spec(kSpecs / "c2xc2.spec"), opts);
    std::istringstream in(out);
    std::string l1, l2, l3;
    std::getline(in, l1);
    std::getline(in, l2);
    std::getline(in, l3);
    EXPECT_EQ(l1, kCsvVersionLine);
    EXPECT_EQ(l2, kCsvHeader);
    EXPECT_EQ(l3, "\"product cyclic 2, cyclic 2\",2,\"1, x\",\"1, y\",8,2,2,true,2,true,abelian,2");
}

TEST(Commands, Gb) {
    std::ostringstream out;
    EXPECT_EQ(run_gb(2, "1+x", "1+x", 2, {}, out), kExitOk);
    EXPECT_EQ(first_line(out.str()), "code = [[4,2,2]]_2 (exact)");
    EXPECT_TRUE(contains(out.str(), "k_formula = 2\n"));
    EXPECT_TRUE(contains(out.str(), "h = 1+x\n"));
    std::ostringstream sink;
    EXPECT_THROW(run_gb(0, "1", "1", 2, {}, sink), InputError);
    EXPECT_THROW(run_gb(3, "1+w", "1", 2, {}, sink), ParseError);
}

TEST(Commands, DumpMatrices) {
    auto dir = std::filesystem::temp_directory_path() / "qtwoblock_dump_test";
    std::filesystem::remove_all(dir);
    RunOptions opts;
    opts.dump_matrices = dir.string();
    run(run_params, read_code_spec(kSpecs / "gb_l2.spec"), opts);
    std::ifstream in(dir / "HX.txt");
    auto hx = read_matrix(in);
    EXPECT_EQ(hx.rows(), 2u);
    EXPECT_EQ(hx.cols(), 4u);
    std::filesystem::remove_all(dir);
}

TEST(Commands, DeterministicOutput) {
    RunOptions opts;
    opts.budget = 64;
    opts.seed = 7;
    auto ex = read_code_spec(kSpecs / "example1.spec");
    EXPECT_EQ(run(run_distance, ex, opts), run(run_distance, ex, opts));
    opts.csv = true;
    EXPECT_EQ(run(run_distance, ex, opts), run(run_distance, ex, opts));
}

ScanOptions scan_of(std::vector<std::string> groups, std::size_t w) {
    ScanOptions s;
    s.groups = std::move(groups);
    s.wa = s.wb = w;
    return s;
}

TEST(Scan, CyclicTwo) {
    auto rows = scan_instances(scan_of({"cyclic 2"}, 2));
    ASSERT_EQ(rows.size(), 1u);
    EXPECT_EQ(rows[0].a, "1, x");
    EXPECT_EQ(rows[0].b, "1, x");
    EXPECT_EQ(rows[0].report.n, 4u);
    EXPECT_EQ(rows[0].report.k, 2u);
    EXPECT_EQ(rows[0].report.d(), 2u);
}

TEST(Scan, CyclicThree) {
    auto rows = scan_instances(scan_of({"cyclic 3"}, 3));
    bool k2 = false, k0 = false;
    for (const auto &r : rows) {
        k2 = k2 || (r.report.k == 2 && r.a == "1, x" && r.b == "1, x^2");
        k0 = k0 || r.report.k == 0;
        // (a, b) swaps removed
        for (const auto &s : rows) {
            EXPECT_FALSE(&r != &s && r.a == s.b && r.b == s.a && r.a != r.b);
        }
    }
    EXPECT_TRUE(k2);
    EXPECT_TRUE(k0);
}

TEST(Scan, RowsRevalidateThroughParams) {
    auto opts = scan_of({"cyclic 4", "product cyclic 2, cyclic 2"}, 3);
    opts.p = 3;
    opts.params_only = true;
    auto rows = scan_instances(opts);
    ASSERT_FALSE(rows.empty());
    for (std::size_t i = 0; i < rows.size(); i += 7) {
        const auto &r = rows[i];
        std::string text = "[field]\np = 3\n[group]\nkind = " + r.group + "\n[a]\nterms = " + r.a +
                           "\n[b]\nterms = " + r.b + "\n";
        auto code = build_code(parse_code_spec(text));
        EXPECT_EQ(code.n(), r.report.n);
        EXPECT_EQ(code.k(), r.report.k);
    }
}

TEST(Scan, ThreadCountDoesNotChangeOutput) {
    auto opts = scan_of({"cyclic 4", "dihedral 3"}, 3);
    std::ostringstream one, many;
    run_scan(opts, one);
    opts.threads = 3;
    run_scan(opts, many);
    EXPECT_EQ(one.str(), many.str());
    EXPECT_TRUE(contains(one.str(), "# normalization=identity-in-support"));
}

TEST(Scan, FilterAndErrors) {
    auto opts = scan_of({"alternating4"}, 4);
    opts.filter = KFilter::Odd;
    opts.params_only = true;
    auto rows = scan_instances(opts);
    ASSERT_FALSE(rows.empty());
    bool found = false;
    for (const auto &r : rows) {
        EXPECT_EQ(r.report.k % 2, 1u);
        found = found || (r.report.n == 24 && r.report.k == 5);
    }
    EXPECT_TRUE(found);
    EXPECT_THROW(scan_instances(scan_of({}, 2)), InputError);
    EXPECT_THROW(scan_instances(scan_of({"cyclic 2"}, 0)), InputError);
}

TEST(Scan, CapsClampToGroupOrder) {
    auto rows = scan_instances(scan_of({"cyclic 2"}, 8));
    EXPECT_EQ(rows.size(), 1u);
}

TEST(Scan, OddCharacteristicEnumeratesCoefficients) {
    PrimeField f(3);
    auto elems = enumerate_elements(cyclic_group(3), f, 2, 2);
    // 3 supports of size 2, each with 2^2 coefficient choices
    EXPECT_EQ(elems.size(), 12u);
    auto binary = enumerate_elements(cyclic_group(4), PrimeField(2), 2, 3);
    for (const auto &e : binary) {
        EXPECT_EQ(e.coeff(0), 1);
    }
    EXPECT_EQ(binary.size(), 3u + 3u);
}

TEST(GroupList, Reading) {
    auto groups = read_group_list(kSpecs / "small_groups.txt");
    EXPECT_EQ(groups.front(), "cyclic 2");
    EXPECT_EQ(groups.size(), 5u);
    EXPECT_THROW(read_group_list(kSpecs / "nope.txt"), InputError);
}

}  // namespace
}  // namespace qtwoblock
