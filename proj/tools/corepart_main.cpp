// corepart: command-line front door for the core-partition toolkit.
//
// Exit codes: 0 success, 1 usage error, 2 computational error (unbounded
// query or 64-bit overflow), 3 internal failure (engine disagreement or a
// failed self-test).  Machine output (--json / --format json) goes to stdout;
// notes and warnings go to stderr.

#include <cstdint>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "corepart/cache.hpp"
#include "corepart/enumerate.hpp"
#include "corepart/formulas.hpp"
#include "corepart/genfunc.hpp"
#include "corepart/partition.hpp"
#include "corepart/selftest.hpp"
#include "corepart/serialize.hpp"
#include "corepart/tables.hpp"
#include "corepart/verify.hpp"

namespace {

using namespace corepart;

struct CommonOpts {
    bool json = false;
    std::string engine = "both";
    bool no_cache = false;
    std::string cache_dir;
};

void add_engine_flags(CLI::App* cmd, CommonOpts& opts) {
    cmd->add_option("--engine", opts.engine, "Search engine: beta, brute, or both (cross-checked)")
        ->check(CLI::IsMember({"beta", "brute", "both"}))
        ->capture_default_str();
    cmd->add_flag("--no-cache", opts.no_cache, "Disable the on-disk result cache");
    cmd->add_option("--cache-dir", opts.cache_dir,
                    "Cache directory (overrides COREPART_CACHE_DIR)");
}

CacheConfig cache_config(const CommonOpts& opts) {
    CacheConfig cfg{opts.cache_dir.empty() ? default_cache_dir()
                                           : std::filesystem::path(opts.cache_dir),
                    !opts.no_cache};
    return cfg;
}

std::vector<int> parse_spec_list(const std::string& text) {
    std::vector<int> values;
    std::stringstream in(text);
    std::string item;
    while (std::getline(in, item, ',')) {
        if (item.empty()) throw std::invalid_argument("--spec: empty entry in '" + text + "'");
        std::size_t used = 0;
        int v = std::stoi(item, &used);
        if (used != item.size())
            throw std::invalid_argument("--spec: bad integer '" + item + "'");
        values.push_back(v);
    }
    if (values.empty()) throw std::invalid_argument("--spec: no values given");
    return values;
}

std::string join_braces(const std::vector<Partition>& ps) {
    std::string out;
    for (std::size_t i = 0; i < ps.size(); ++i) {
        if (i) out += ", ";
        out += to_brace_string(ps[i]);
    }
    return out;
}

std::string spec_display(const CoreSpec& spec) {
    std::string out = "(";
    const auto& v = spec.values();
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) out += ',';
        out += std::to_string(v[i]);
    }
    return out + ")";
}

void print_enumeration(const EnumerationResult& res, bool list) {
    std::cout << "query: " << spec_display(res.query.spec) << "-core partitions with d = "
              << res.query.d << "\n";
    std::cout << "bound: beta elements <= " << res.bound.value << " (" << res.bound.reason << ")\n";
    std::cout << "count: " << res.count << "\n";
    std::cout << "max size: " << res.max_size << "\n";
    std::cout << "largest: " << join_braces(res.argmax) << "\n";
    if (list) {
        std::cout << "partitions:\n";
        for (const auto& p : res.partitions) std::cout << "  " << to_brace_string(p) << "\n";
    }
}

void print_values(const std::vector<std::int64_t>& values) {
    for (std::size_t i = 0; i < values.size(); ++i) std::cout << (i ? " " : "") << values[i];
    std::cout << "\n";
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"corepart: enumerate and count simultaneous core partitions with d-distinct parts"};
    app.require_subcommand(1);
    int final_rc = 0;

    // ---- enumerate ------------------------------------------------------
    auto* enumerate = app.add_subcommand(
        "enumerate", "List (s,s+r)-core (or general spec) partitions with d-distinct parts");
    struct {
        CommonOpts common;
        int s = 0, r = 1, d = 1;
        int bound = -1;
        std::string spec;
        bool list = false;
    } en;
    auto* en_s = enumerate->add_option("--s", en.s, "First forbidden hook length s (pair (s, s+r))");
    enumerate->add_option("--r", en.r, "Offset r of the second forbidden hook length")
        ->capture_default_str();
    enumerate->add_option("--d", en.d, "Minimum gap between adjacent parts (0 = unrestricted)")
        ->check(CLI::NonNegativeNumber)
        ->capture_default_str();
    auto* en_spec = enumerate->add_option("--spec", en.spec,
                                          "Comma-separated forbidden hook lengths, e.g. 4,6,9");
    auto* en_bound =
        enumerate->add_option("--bound", en.bound, "Explicit beta-element bound (expert override)");
    enumerate->add_flag("--list", en.list, "Print every partition, not just the statistics");
    enumerate->add_flag("--json", en.common.json, "Emit the result as JSON on stdout");
    add_engine_flags(enumerate, en.common);
    en_spec->excludes(en_s);
    enumerate->callback([&] {
        CoreSpec spec = [&] {
            if (en_spec->count()) return CoreSpec(parse_spec_list(en.spec));
            if (!en_s->count())
                throw CLI::RequiredError("enumerate: either --s or --spec");
            if (en.s < 1) throw std::invalid_argument("enumerate: --s must be >= 1");
            if (en.r < 1) throw std::invalid_argument("enumerate: --r must be >= 1");
            return CoreSpec{en.s, en.s + en.r};
        }();
        EnumerationQuery q{std::move(spec), en.d, std::nullopt, engine_from_name(en.common.engine)};
        if (en_bound->count()) q.bound = en.bound;
        const auto res = run_query_cached(q, cache_config(en.common));
        if (en.common.json)
            std::cout << json_of_result(res, /*with_partitions=*/en.list, /*with_engine=*/false).dump(2)
                      << "\n";
        else
            print_enumeration(res, en.list);
    });

    // ---- count ----------------------------------------------------------
    auto* count = app.add_subcommand("count", "Closed-form count sequences (no enumeration)");
    struct {
        CommonOpts common;
        std::string family = "ss1";
        int d = 0, r = 0, s_max = 8, a = 0, b = 0;
    } co;
    count->add_option("--family", co.family, "ss1 | conjecture | straub | anderson | catalan")
        ->check(CLI::IsMember({"ss1", "conjecture", "straub", "anderson", "catalan"}))
        ->capture_default_str();
    count->add_option("--d", co.d, "Distinctness parameter d");
    count->add_option("--r", co.r, "Offset r (conjecture family only)");
    count->add_option("--s-max", co.s_max, "Last index s of the sequence")->capture_default_str();
    count->add_option("--a", co.a, "First core value (anderson family)");
    count->add_option("--b", co.b, "Second core value (anderson family)");
    count->add_flag("--json", co.common.json, "Emit the sequence as JSON on stdout");
    count->callback([&] {
        CountSequence seq = [&]() -> CountSequence {
            if (co.family == "ss1") {
                if (co.d < 1) throw std::invalid_argument("count --family ss1 requires --d >= 1");
                return count_sequence_ss1(co.d, co.s_max);
            }
            if (co.family == "conjecture") {
                if (co.d < 1 || co.r < 1)
                    throw std::invalid_argument("count --family conjecture requires --d and --r");
                return count_sequence_conjecture(co.d, co.r, co.s_max);
            }
            if (co.family == "straub") {
                if (co.d < 1) throw std::invalid_argument("count --family straub requires --d >= 1");
                return count_sequence_straub(co.d, co.s_max);
            }
            if (co.family == "anderson") {
                if (co.a < 1 || co.b < 1)
                    throw std::invalid_argument("count --family anderson requires --a and --b");
                return count_sequence_anderson(co.a, co.b);
            }
            return count_sequence_catalan(co.s_max);
        }();
        if (seq.conjectural)
            std::cerr << "note: conjectural values (the defining recurrence is unproven)\n";
        if (co.common.json)
            std::cout << json_of_count_sequence(seq).dump(2) << "\n";
        else
            print_values(seq.values);
    });

    // ---- largest --------------------------------------------------------
    auto* largest = app.add_subcommand(
        "largest", "Largest size among (s,s+1)-core partitions with d-distinct parts");
    struct {
        CommonOpts common;
        int d = 0, s = 0;
        bool show = false;
    } la;
    largest->add_option("--d", la.d, "Distinctness parameter d (>= 1)")->required();
    largest->add_option("--s", la.s, "Core parameter s of the pair (s, s+1)")->required();
    largest->add_flag("--show", la.show, "Also print the partitions attaining the maximum");
    largest->add_flag("--json", la.common.json, "Emit the result as JSON on stdout");
    largest->callback([&] {
        const auto size = largest_size_ss1(la.d, la.s);
        const auto how_many = num_largest_ss1(la.d, la.s);
        const auto maximal = maximal_partitions_ss1(la.d, la.s);
        if (la.common.json) {
            Json j;
            j["d"] = la.d;
            j["s"] = la.s;
            j["largest_size"] = size;
            j["num_largest"] = how_many;
            Json parts = Json::array();
            for (const auto& p : maximal) parts.push_back(json_of_partition(p));
            j["partitions"] = parts;
            std::cout << j.dump(2) << "\n";
        } else {
            std::cout << "largest size: " << size << "\n";
            std::cout << "count: " << how_many << "\n";
            if (la.show) std::cout << "partitions: " << join_braces(maximal) << "\n";
        }
    });

    // ---- maximal --------------------------------------------------------
    auto* maximal = app.add_subcommand(
        "maximal", "Construct the largest-size (s,s+1)-core partitions with d-distinct parts");
    struct {
        CommonOpts common;
        int d = 0, s = 0;
    } mx;
    maximal->add_option("--d", mx.d, "Distinctness parameter d (>= 1)")->required();
    maximal->add_option("--s", mx.s, "Core parameter s of the pair (s, s+1)")->required();
    maximal->add_flag("--json", mx.common.json, "Emit the partitions as JSON on stdout");
    maximal->callback([&] {
        const auto parts = maximal_partitions_ss1(mx.d, mx.s);
        if (mx.common.json) {
            Json j;
            j["d"] = mx.d;
            j["s"] = mx.s;
            j["largest_size"] = largest_size_ss1(mx.d, mx.s);
            Json arr = Json::array();
            for (const auto& p : parts) arr.push_back(json_of_partition(p));
            j["partitions"] = arr;
            std::cout << j.dump(2) << "\n";
        } else {
            for (const auto& p : parts) std::cout << to_brace_string(p) << "\n";
        }
    });

    // ---- tables ---------------------------------------------------------
    auto* tables = app.add_subcommand(
        "tables", "Render a d-by-(s,s+r) grid of counts (markdown, csv, latex, or json)");
    struct {
        CommonOpts common;
        int r = 0, d_min = 0, d_max = 7, s_min = 1, s_max = 8;
        std::string source = "enumeration";
        std::string format = "markdown";
    } tb;
    tables->add_option("--r", tb.r, "Offset r of the column pairs (s, s+r)")->required();
    auto* tb_dmin = tables->add_option("--d-min", tb.d_min, "First row d (default: r)");
    tables->add_option("--d-max", tb.d_max, "Last row d")->capture_default_str();
    tables->add_option("--s-min", tb.s_min, "First column s")->capture_default_str();
    tables->add_option("--s-max", tb.s_max, "Last column s")->capture_default_str();
    tables->add_option("--source", tb.source, "Cell values: enumeration or formula")
        ->check(CLI::IsMember({"enumeration", "formula"}))
        ->capture_default_str();
    tables->add_option("--format", tb.format, "markdown | csv | latex | json")
        ->check(CLI::IsMember({"markdown", "csv", "latex", "json"}))
        ->capture_default_str();
    add_engine_flags(tables, tb.common);
    tables->callback([&] {
        TableSpec spec;
        spec.r = tb.r;
        spec.d_min = tb_dmin->count() ? tb.d_min : std::max(tb.r, 1);
        spec.d_max = tb.d_max;
        spec.s_min = tb.s_min;
        spec.s_max = tb.s_max;
        spec.source = tb.source == "formula" ? CellSource::Formula : CellSource::Enumeration;
        spec.engine = engine_from_name(tb.common.engine);
        spec.format = table_format_from_name(tb.format);
        const auto cfg = cache_config(tb.common);
        std::cout << build_table(spec, &cfg);
    });

    // ---- verify ---------------------------------------------------------
    auto* verify = app.add_subcommand(
        "verify", "Compare enumerated (s,s+r)-core counts against the predicted recurrence");
    struct {
        CommonOpts common;
        int d_max = 7, s_max = 9;
    } vf;
    verify->add_option("--d-max", vf.d_max, "Check all 1 <= r <= d <= d-max")->capture_default_str();
    verify->add_option("--s-max", vf.s_max, "Check all 1 <= s <= s-max")->capture_default_str();
    verify->add_flag("--json", vf.common.json, "Emit the full report as JSON on stdout");
    add_engine_flags(verify, vf.common);
    verify->callback([&] {
        const auto cfg = cache_config(vf.common);
        const auto report =
            verify_conjecture(vf.d_max, vf.s_max, engine_from_name(vf.common.engine), &cfg);
        if (vf.common.json)
            std::cout << json_of_verification(report).dump(2) << "\n";
        else
            std::cout << format_verification(report);
        // A mismatch is a discovery, not a failure: exit 0 either way.
    });

    // ---- gf -------------------------------------------------------------
    auto* gf = app.add_subcommand(
        "gf", "Rational generating function of a count sequence, with series expansion");
    struct {
        CommonOpts common;
        std::string family = "ss1";
        int d = 0, r = 0, n = 8;
    } gfo;
    gf->add_option("--family", gfo.family, "ss1 | conjecture")
        ->check(CLI::IsMember({"ss1", "conjecture"}))
        ->capture_default_str();
    gf->add_option("--d", gfo.d, "Distinctness parameter d (>= 1)")->required();
    gf->add_option("--r", gfo.r, "Offset r (conjecture family only)");
    gf->add_option("--n", gfo.n, "Number of series coefficients to print")->capture_default_str();
    gf->add_flag("--json", gfo.common.json, "Emit the function and series as JSON on stdout");
    gf->callback([&] {
        if (gfo.d < 1) throw std::invalid_argument("gf requires --d >= 1");
        const bool conjectural = gfo.family == "conjecture";
        if (conjectural && (gfo.r < 1 || gfo.r > gfo.d))
            throw std::invalid_argument("gf --family conjecture requires 1 <= --r <= --d");
        std::vector<std::int64_t> initial;
        for (int s = 1; s <= gfo.d + 1; ++s)
            initial.push_back(conjectural ? conjectured_count(gfo.d, gfo.r, s)
                                          : count_ss1(gfo.d, s));
        const auto fn = gf_from_recurrence(initial, {{1, 1}, {gfo.d + 1, 1}});
        const auto series = series_coefficients(fn, gfo.n);
        if (conjectural)
            std::cerr << "note: conjectural values (the defining recurrence is unproven)\n";
        if (gfo.common.json) {
            Json j;
            j["family"] = gfo.family;
            j["d"] = gfo.d;
            if (conjectural) j["r"] = gfo.r;
            j["conjectural"] = conjectural;
            j["gf"] = json_of_gf(fn);
            j["series"] = series;
            std::cout << j.dump(2) << "\n";
        } else {
            std::cout << "gf: " << format_gf(fn) << "\n";
            std::cout << "series: ";
            print_values(series);
        }
    });

    // ---- selftest -------------------------------------------------------
    auto* selftest = app.add_subcommand(
        "selftest", "Run the reduced-range invariant suite and print a pass/fail matrix");
    selftest->callback([&] {
        if (!print_selftests(std::cout)) final_rc = 3;
    });

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 1;
    } catch (const EngineMismatchError& e) {
        std::cerr << "corepart: engine disagreement: " << e.what() << "\n";
        return 3;
    } catch (const UnboundedQueryError& e) {
        std::cerr << "corepart: unbounded query: " << e.what() << "\n";
        return 2;
    } catch (const std::overflow_error& e) {
        std::cerr << "corepart: overflow: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "corepart: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "corepart: internal error: " << e.what() << "\n";
        return 3;
    }
    return final_rc;
}
