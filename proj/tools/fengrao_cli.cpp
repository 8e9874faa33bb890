// fengrao: command-line front end over the C API.
//
//   fengrao info    SEMIGROUP
//   fengrao fengrao SEMIGROUP [--r R] [--range A:B] [--method fast|generic|oracle] [--cross-check] [--format F]
//   fengrao report  SEMIGROUP --field Q [--range A:B] [--format text|csv|json]
//   fengrao verify  [--max-conductor C] [--r R] [--margin K]
//
// Exit codes: 0 success, 1 usage or input error, 2 verification mismatch,
// 3 arithmetic overflow.

#include <algorithm>
#include <cstdlib>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "CLI11.hpp"
#include "fengrao/fengrao.h"
#include "json.hpp"

namespace {

using json = nlohmann::ordered_json;

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitMismatch = 2;
constexpr int kExitOverflow = 3;

struct Failure {
    int exit_code;
    std::string message;
};

void check(fr_status status) {
    if (status == FR_OK) return;
    std::string message = fr_status_message(status);
    if (const char* detail = fr_last_error(); detail && *detail) message += std::string(": ") + detail;
    throw Failure{status == FR_ERR_OVERFLOW ? kExitOverflow : kExitUsage, message};
}

struct SemigroupDeleter {
    void operator()(fr_semigroup* s) const { fr_semigroup_free(s); }
};
struct ProfileDeleter {
    void operator()(fr_profile* p) const { fr_profile_free(p); }
};
using Semigroup = std::unique_ptr<fr_semigroup, SemigroupDeleter>;
using Profile = std::unique_ptr<fr_profile, ProfileDeleter>;

Semigroup parse(const std::string& text) {
    fr_semigroup* raw = nullptr;
    check(fr_semigroup_parse(text.c_str(), &raw));
    return Semigroup(raw);
}

Profile build_profile(const fr_semigroup* s) {
    fr_profile* raw = nullptr;
    check(fr_profile_build(s, &raw));
    return Profile(raw);
}

template <typename Fn>
std::vector<int64_t> fetch_list(Fn&& fn) {
    size_t len = 0;
    check(fn(nullptr, 0, &len));
    std::vector<int64_t> out(len);
    check(fn(out.data(), out.size(), &len));
    return out;
}

fr_semigroup_summary summary_of(const fr_semigroup* s) {
    fr_semigroup_summary sum{};
    check(fr_semigroup_get_summary(s, &sum));
    return sum;
}

int64_t e2_of(const fr_semigroup* s, const fr_semigroup_summary& sum) {
    int64_t e2 = 0;
    check(sum.is_arf ? fr_e2_sequence(s, &e2) : fr_e2_apery(s, &e2));
    return e2;
}

json semigroup_record(const fr_semigroup* s) {
    const auto sum = summary_of(s);
    json j;
    j["small_elements"] = fetch_list([&](int64_t* b, size_t c, size_t* l) { return fr_semigroup_small_elements(s, b, c, l); });
    j["conductor"] = sum.conductor;
    j["multiplicity"] = sum.multiplicity;
    j["genus"] = sum.genus;
    j["e2"] = e2_of(s, sum);
    return j;
}

struct Range {
    int64_t lo = 0;
    int64_t hi = -1;
    bool given = false;
};

Range parse_range(const std::string& text) {
    Range r;
    if (text.empty()) return r;
    const auto colon = text.find(':');
    if (colon == std::string::npos) throw Failure{kExitUsage, "range must look like A:B, got '" + text + "'"};
    try {
        std::size_t used = 0;
        r.lo = std::stoll(text.substr(0, colon), &used);
        if (used != colon) throw std::invalid_argument("trailing characters");
        const auto rest = text.substr(colon + 1);
        r.hi = std::stoll(rest, &used);
        if (used != rest.size()) throw std::invalid_argument("trailing characters");
    } catch (const std::out_of_range&) {
        throw Failure{kExitOverflow, "range bound out of range: '" + text + "'"};
    } catch (const std::exception&) {
        throw Failure{kExitUsage, "range must look like A:B, got '" + text + "'"};
    }
    if (r.lo > r.hi) throw Failure{kExitUsage, "range start exceeds end: '" + text + "'"};
    r.given = true;
    return r;
}

std::string join(const std::vector<int64_t>& values) {
    std::string out;
    for (std::size_t i = 0; i < values.size(); ++i) {
        if (i) out += ',';
        out += std::to_string(values[i]);
    }
    return out;
}

// Right-aligned columns separated by two spaces.
std::string render_text(const std::vector<std::string>& header, const std::vector<std::vector<int64_t>>& rows) {
    std::vector<std::size_t> width(header.size());
    for (std::size_t c = 0; c < header.size(); ++c) width[c] = header[c].size();
    for (const auto& row : rows)
        for (std::size_t c = 0; c < row.size(); ++c) width[c] = std::max(width[c], std::to_string(row[c]).size());
    std::ostringstream os;
    auto emit = [&](const std::vector<std::string>& cells) {
        for (std::size_t c = 0; c < cells.size(); ++c) {
            if (c) os << "  ";
            os << std::string(width[c] - cells[c].size(), ' ') << cells[c];
        }
        os << '\n';
    };
    emit(header);
    for (const auto& row : rows) {
        std::vector<std::string> cells;
        for (auto v : row) cells.push_back(std::to_string(v));
        emit(cells);
    }
    return os.str();
}

std::string render_csv(const std::vector<std::string>& header, const std::vector<std::vector<int64_t>>& rows) {
    std::ostringstream os;
    for (std::size_t c = 0; c < header.size(); ++c) os << (c ? "," : "") << header[c];
    os << '\n';
    for (const auto& row : rows) os << join(row) << '\n';
    return os.str();
}

std::string render_json(const json& j) { return j.dump(2) + "\n"; }

// ---------------------------------------------------------------------------

int cmd_info(const std::string& spec, const std::string& format) {
    auto s = parse(spec);
    const auto sum = summary_of(s.get());
    const auto seq =
        fetch_list([&](int64_t* b, size_t c, size_t* l) { return fr_semigroup_multiplicity_sequence(s.get(), b, c, l); });
    const auto gens =
        fetch_list([&](int64_t* b, size_t c, size_t* l) { return fr_semigroup_minimal_generators(s.get(), b, c, l); });

    json record;
    record["semigroup"] = semigroup_record(s.get());
    json info;
    info["num_small"] = sum.num_small;
    info["multiplicity_sequence"] = seq;
    info["minimal_generators"] = gens;
    info["is_arf"] = sum.is_arf != 0;
    if (sum.is_arf) {
        int64_t e2_seq = 0;
        check(fr_e2_sequence(s.get(), &e2_seq));
        info["e2_sequence"] = e2_seq;
        // The full Apery scan costs O(e * c); skip it for very large inputs.
        if (sum.multiplicity * (sum.conductor + sum.multiplicity) <= 50'000'000) {
            int64_t e2_ap = 0;
            check(fr_e2_apery(s.get(), &e2_ap));
            info["e2_apery"] = e2_ap;
        }
    }
    record["info"] = info;
    record["results"] = json::array();

    if (format == "json") {
        std::cout << render_json(record);
        return kExitOk;
    }
    const auto& sg = record["semigroup"];
    std::cout << "small_elements: " << join(sg["small_elements"].get<std::vector<int64_t>>()) << '\n'
              << "conductor: " << sum.conductor << '\n'
              << "multiplicity: " << sum.multiplicity << '\n'
              << "genus: " << sum.genus << '\n'
              << "r: " << sum.num_small << '\n'
              << "multiplicity_sequence: " << join(seq) << '\n'
              << "minimal_generators: " << join(gens) << '\n'
              << "is_arf: " << (sum.is_arf ? "true" : "false") << '\n'
              << "e2: " << sg["e2"].get<int64_t>() << '\n';
    if (info.contains("e2_sequence")) std::cout << "e2_sequence: " << info["e2_sequence"].get<int64_t>() << '\n';
    if (info.contains("e2_apery")) std::cout << "e2_apery: " << info["e2_apery"].get<int64_t>() << '\n';
    return kExitOk;
}

fr_method method_of(const std::string& name) {
    if (name == "fast") return FR_METHOD_FAST;
    if (name == "generic") return FR_METHOD_GENERIC;
    return FR_METHOD_ORACLE;
}

struct FengRaoArgs {
    std::string spec;
    int r = 2;
    int max_order = 6;
    std::string range;
    std::string method;
    bool cross_check = false;
    std::string format = "text";
};

int cmd_fengrao(const FengRaoArgs& args) {
    if (args.r < 1) throw Failure{kExitUsage, "--r must be at least 1"};
    if (args.r > args.max_order)
        throw Failure{kExitUsage, "--r " + std::to_string(args.r) + " exceeds --max-order " + std::to_string(args.max_order)};
    auto s = parse(args.spec);
    const auto sum = summary_of(s.get());

    std::string method = args.method;
    if (method.empty()) method = (sum.is_arf && args.r <= 2) ? "fast" : "generic";
    if (method == "fast" && !sum.is_arf) throw Failure{kExitUsage, "method fast requires an Arf semigroup"};
    if (method == "fast" && args.r > 2) throw Failure{kExitUsage, "method fast supports --r 1 or 2"};

    std::string other;
    if (args.cross_check) other = method == "generic" ? "oracle" : "generic";

    Range range = parse_range(args.range);
    if (!range.given) {
        range.lo = sum.conductor;
        range.hi = std::max<int64_t>(2 * sum.conductor - 1, sum.conductor);
    }

    Profile profile;
    if (method == "fast") profile = build_profile(s.get());
    auto evaluate = [&](const std::string& how, int64_t m) {
        int64_t v = 0;
        if (how == "fast")
            check(fr_profile_delta(profile.get(), args.r, m, &v));
        else
            check(fr_feng_rao_distance(s.get(), args.r, m, method_of(how), &v));
        return v;
    };

    std::vector<std::vector<int64_t>> rows;
    for (int64_t m = range.lo; m <= range.hi; ++m) {
        int member = 0;
        check(fr_semigroup_contains(s.get(), m, &member));
        if (!member) {
            if (range.lo == range.hi) throw Failure{kExitUsage, std::to_string(m) + " is not a member of the semigroup"};
            continue;
        }
        const int64_t v = evaluate(method, m);
        if (!other.empty()) {
            const int64_t w = evaluate(other, m);
            if (v != w) {
                std::cerr << "mismatch at m=" << m << ": " << method << "=" << v << " " << other << "=" << w << '\n';
                return kExitMismatch;
            }
        }
        rows.push_back({m, v});
    }

    const std::string key = "delta" + std::to_string(args.r);
    if (args.format == "json") {
        json record;
        record["semigroup"] = semigroup_record(s.get());
        record["order"] = args.r;
        record["method"] = method;
        json results = json::array();
        for (const auto& row : rows) results.push_back(json{{"m", row[0]}, {key, row[1]}});
        record["results"] = results;
        std::cout << render_json(record);
    } else if (args.format == "csv") {
        std::cout << render_csv({"m", key}, rows);
    } else {
        std::cout << render_text({"m", key}, rows);
    }
    return kExitOk;
}

struct ReportArgs {
    std::string spec;
    int64_t field = 0;
    std::string range;
    std::string format = "text";
};

int cmd_report(const ReportArgs& args) {
    auto s = parse(args.spec);
    const auto sum = summary_of(s.get());
    if (!sum.is_arf) throw Failure{kExitUsage, "report requires an Arf semigroup"};
    auto profile = build_profile(s.get());

    Range range = parse_range(args.range);
    if (!range.given) {
        range.lo = std::max<int64_t>(sum.conductor - 1, 0);
        range.hi = std::max<int64_t>(2 * sum.conductor, range.lo);
    }
    size_t len = 0;
    check(fr_bounds_table(profile.get(), args.field, range.lo, range.hi, nullptr, 0, &len));
    std::vector<fr_bounds_row> table(len);
    check(fr_bounds_table(profile.get(), args.field, range.lo, range.hi, table.data(), table.size(), &len));

    const std::vector<std::string> header{"m", "delta2_m1", "delta1_m1", "gob_m1", "delta1_m2", "glb_m"};
    if (args.format == "json") {
        json record;
        record["semigroup"] = semigroup_record(s.get());
        record["field_size"] = args.field;
        json results = json::array();
        for (const auto& row : table) {
            json bounds;
            bounds["delta2_m1"] = row.delta2_m1;
            bounds["delta1_m1"] = row.delta1_m1;
            bounds["gob_m1"] = row.gob_m1;
            bounds["delta1_m2"] = row.delta1_m2;
            bounds["glb_m"] = row.glb_m;
            results.push_back(json{{"m", row.m}, {"bounds", bounds}});
        }
        record["results"] = results;
        std::cout << render_json(record);
        return kExitOk;
    }
    std::vector<std::vector<int64_t>> rows;
    for (const auto& row : table) rows.push_back({row.m, row.delta2_m1, row.delta1_m1, row.gob_m1, row.delta1_m2, row.glb_m});
    std::cout << (args.format == "csv" ? render_csv(header, rows) : render_text(header, rows));
    return kExitOk;
}

struct VerifyArgs {
    int64_t max_conductor = 24;
    int r = 2;
    int64_t margin = 5;
};

unsigned thread_budget() {
    unsigned threads = std::max(1u, std::thread::hardware_concurrency());
    if (const char* env = std::getenv("FENGRAO_THREADS"); env && *env) {
        try {
            const long cap = std::stol(env);
            if (cap >= 1) threads = std::min<unsigned>(threads, static_cast<unsigned>(cap));
        } catch (const std::exception&) {
            throw Failure{kExitUsage, std::string("FENGRAO_THREADS is not a number: '") + env + "'"};
        }
    }
    return threads;
}

int cmd_verify(const VerifyArgs& args) {
    const fr_verify_options options{args.max_conductor, args.r, args.margin, thread_budget()};
    fr_verify_report report{};
    check(fr_verify(&options, &report));
    std::cout << "semigroups: " << report.semigroups << '\n'
              << "checks: " << report.checks << '\n'
              << "mismatches: " << report.mismatches << '\n';
    int code = kExitOk;
    if (report.mismatches > 0) {
        const auto small = fetch_list(
            [&](int64_t* b, size_t c, size_t* l) { return fr_semigroup_small_elements(report.counterexample, b, c, l); });
        std::cout << "counterexample: small:" << join(small) << " r=" << report.r << " m=" << report.m
                  << " fast=" << report.fast << " generic=" << report.generic << " oracle=" << report.oracle << '\n'
                  << "FAIL\n";
        code = kExitMismatch;
    } else {
        std::cout << "PASS\n";
    }
    fr_verify_report_clear(&report);
    return code;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Feng-Rao distances, Feng-Rao numbers and code bounds for numerical semigroups"};
    app.require_subcommand(1);
    const std::string spec_help =
        "Semigroup: gens:5,7,9 | small:0,4,8 | mults:12,12,8,4,4,1 | tower:q=3,n=5 | ind:(a1,b1)(a2,b2)";
    const std::vector<std::string> formats{"text", "csv", "json"};

    std::string info_spec;
    std::string info_format = "text";
    auto* info = app.add_subcommand("info", "Conductor, genus, generators, Arf test and E_2");
    info->add_option("semigroup", info_spec, spec_help)->required();
    info->add_option("--format", info_format, "Output format")->check(CLI::IsMember(formats));

    FengRaoArgs fr;
    auto* fengrao = app.add_subcommand("fengrao", "r-th Feng-Rao distance delta^r(m) over a range of m");
    fengrao->add_option("semigroup", fr.spec, spec_help)->required();
    fengrao->add_option("--r", fr.r, "Order r (default 2)");
    fengrao->add_option("--max-order", fr.max_order, "Largest accepted r (default 6)");
    fengrao->add_option("--range", fr.range, "Inclusive m range A:B (default [c, 2c-1]); gaps are skipped");
    fengrao->add_option("--method", fr.method, "fast (Arf, r<=2) | generic | oracle")
        ->check(CLI::IsMember({"fast", "generic", "oracle"}));
    fengrao->add_flag("--cross-check", fr.cross_check, "Also run a second method and fail on disagreement");
    fengrao->add_option("--format", fr.format, "Output format")->check(CLI::IsMember(formats));

    ReportArgs rep;
    auto* report = app.add_subcommand(
        "report",
        "Bounds table for the dual one-point codes C_m. Columns: m, delta2_m1 = delta^2(m+1), "
        "delta1_m1 = delta^1(m+1), gob_m1 = Griesmer order bound at m+1, delta1_m2 = delta^1(m+2) "
        "(Pellikaan), glb_m = m+2-2g+E_2 (Goppa-like)");
    report->add_option("semigroup", rep.spec, spec_help)->required();
    report->add_option("--field", rep.field, "Size of the code's finite field (e.g. 9 for F_9)")->required();
    report->add_option("--range", rep.range, "Inclusive m range A:B within [c-1, 4c]");
    report->add_option("--format", rep.format, "Output format")->check(CLI::IsMember(formats));

    VerifyArgs ver;
    auto* verify = app.add_subcommand("verify", "Cross-check fast, generic and oracle methods on all Arf semigroups");
    verify->add_option("--max-conductor", ver.max_conductor, "Largest conductor enumerated (default 24)");
    verify->add_option("--r", ver.r, "Largest order checked (default 2)");
    verify->add_option("--margin", ver.margin, "Check m in [c, 2c + margin] (default 5)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (*info) return cmd_info(info_spec, info_format);
        if (*fengrao) return cmd_fengrao(fr);
        if (*report) return cmd_report(rep);
        if (*verify) return cmd_verify(ver);
    } catch (const Failure& f) {
        std::cerr << "error: " << f.message << '\n';
        return f.exit_code;
    }
    return kExitUsage;
}
