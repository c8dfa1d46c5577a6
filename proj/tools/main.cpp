#include <chrono>
#include <fstream>
#include <iostream>

#include <CLI11.hpp>

#include "atgrs/io.hpp"
#include "atgrs/search.hpp"
#include "atgrs/toeplitz.hpp"
#include "atgrs/vandermonde.hpp"
#include "atgrs/wseq.hpp"

namespace {

using atgrs::json;

json load_json(const std::string& path) {
    std::ifstream in(path);
    if (!in) atgrs::fail(atgrs::errc::invalid_argument, "cannot open " + path);
    json j;
    try {
        in >> j;
    } catch (const json::parse_error& e) {
        atgrs::fail(atgrs::errc::invalid_argument, path + ": " + e.what());
    }
    return j;
}

atgrs::MdsMethod parse_method(const std::string& s) {
    if (s == "criterion") return atgrs::MdsMethod::criterion;
    if (s == "brute") return atgrs::MdsMethod::brute_force;
    if (s == "both") return atgrs::MdsMethod::both;
    atgrs::fail(atgrs::errc::invalid_argument, "--method must be criterion, brute or both");
}

int cmd_verify(const std::string& path, const std::string& method, bool full_report,
               const std::string& format, int jobs, const std::vector<std::string>& argv) {
    auto t0 = std::chrono::steady_clock::now();
    atgrs::CodeSpec spec = atgrs::parse_code_spec(load_json(path));
    atgrs::MdsReport rep = atgrs::is_mds(spec, parse_method(method), full_report, jobs);
    double ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();

    if (format == "structured") {
        json out;
        out["command"] = argv;
        out["reports"] = json::array({atgrs::report_to_json(rep)});
        std::cout << out.dump(2) << "\n";
    } else {
        std::cout << atgrs::report_to_text(rep);
    }
    std::cerr << "verified " << path << " in " << ms << " ms\n";
    return rep.mds ? 0 : 1;
}

int cmd_search(const std::string& path, std::optional<std::uint64_t> seed_override,
               const std::string& format, int jobs, const std::vector<std::string>& argv) {
    json j = load_json(path);
    if (seed_override) j["seed"] = *seed_override;
    atgrs::SearchConfig cfg = atgrs::SearchConfig::parse(j);
    atgrs::RunReport rep = atgrs::run_search(cfg, jobs);
    rep.command = argv;

    if (format == "structured") {
        std::cout << atgrs::run_report_to_json(rep).dump(2) << "\n";
    } else {
        std::cout << atgrs::run_report_to_text(rep);
    }
    std::cerr << "searched " << rep.candidates << " candidates in " << rep.duration_ms << " ms\n";
    return 0;
}

int cmd_invert(const std::string& kind, const std::string& path, const std::string& format) {
    json j = load_json(path);
    if (!j.contains("field")) atgrs::fail(atgrs::errc::invalid_argument, "missing field \"field\"");
    atgrs::Field f = atgrs::parse_field(j.at("field"));
    if (!j.contains("alpha")) atgrs::fail(atgrs::errc::invalid_argument, "missing field \"alpha\"");
    std::vector<atgrs::Elt> alpha = atgrs::parse_elt_list(*f, j.at("alpha"), "alpha");
    const std::size_t n = alpha.size();

    atgrs::Mat inv(*f, 1, 1);
    atgrs::Mat subject(*f, 1, 1);
    if (kind == "vandermonde") {
        subject = atgrs::vandermonde(*f, alpha, n);
        inv = atgrs::vandermonde_inverse_explicit(*f, alpha);
    } else {
        atgrs::Poly g = atgrs::poly_from_roots(*f, alpha);
        if (kind == "toeplitz") {
            std::size_t size = j.value("size", n);
            std::vector<atgrs::Elt> col;  // 1, c_1, ..., c_n
            for (std::size_t i = 0; i <= n; ++i) col.push_back(g.coeff(static_cast<int>(n - i)));
            subject = atgrs::toeplitz_lower(*f, col, size);
            inv = atgrs::toeplitz_inverse_unit(*f, col, size, alpha);
        } else if (kind == "toeplitz-reversed") {
            std::vector<atgrs::Elt> col;  // c_n, ..., c_1
            for (std::size_t i = 0; i < n; ++i) col.push_back(g.coeff(static_cast<int>(i)));
            subject = atgrs::toeplitz_lower(*f, col, n);
            inv = atgrs::toeplitz_inverse_reversed(*f, col, alpha);
        } else {
            atgrs::fail(atgrs::errc::invalid_argument,
                        "--kind must be vandermonde, toeplitz or toeplitz-reversed");
        }
    }
    if (!(subject * inv).is_identity())
        atgrs::fail(atgrs::errc::invalid_argument, "internal product check failed");

    if (format == "structured") {
        json out;
        out["kind"] = kind;
        out["matrix"] = atgrs::mat_to_json(inv);
        std::cout << out.dump(2) << "\n";
    } else {
        std::cout << atgrs::mat_to_text(inv);
    }
    return 0;
}

int cmd_wseq(const std::string& path, const std::string& format) {
    json j = load_json(path);
    if (!j.contains("field")) atgrs::fail(atgrs::errc::invalid_argument, "missing field \"field\"");
    atgrs::Field f = atgrs::parse_field(j.at("field"));
    if (!j.contains("alpha")) atgrs::fail(atgrs::errc::invalid_argument, "missing field \"alpha\"");
    std::vector<atgrs::Elt> alpha = atgrs::parse_elt_list(*f, j.at("alpha"), "alpha");
    long lo = j.value("lo", 0L);
    long hi = j.value("hi", static_cast<long>(2 * alpha.size()));
    if (lo > hi) atgrs::fail(atgrs::errc::invalid_argument, "\"lo\" must be <= \"hi\"");

    atgrs::WSeq w(*f, alpha, lo, hi);
    // spot check the register against the defining sum at the endpoints
    if (w.at(lo) != atgrs::wseq_direct(*f, alpha, lo) ||
        w.at(hi) != atgrs::wseq_direct(*f, alpha, hi))
        atgrs::fail(atgrs::errc::invalid_argument, "internal endpoint check failed");

    if (format == "structured") {
        json values = json::array();
        for (long t = lo; t <= hi; ++t) values.push_back(json::array({t, w.at(t).value()}));
        json out;
        out["values"] = std::move(values);
        std::cout << out.dump(2) << "\n";
    } else {
        for (long t = lo; t <= hi; ++t) std::cout << t << " " << w.at(t).value() << "\n";
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact finite-field toolkit for arbitrary-twist generalized Reed-Solomon codes"};
    app.require_subcommand(1);

    std::string format = "text";
    int jobs = 1;

    auto* verify = app.add_subcommand("verify", "Decide whether a code spec is MDS");
    std::string verify_path, method = "criterion";
    bool full_report = false;
    verify->add_option("spec", verify_path, "code spec JSON file")->required();
    verify->add_option("--method", method, "criterion | brute | both")->default_val("criterion");
    verify->add_flag("--full-report", full_report, "list every failing subset instead of stopping at the first");
    verify->add_option("--format", format, "text | structured");
    verify->add_option("--jobs", jobs, "worker threads");

    auto* search = app.add_subcommand("search", "Sweep twist matrices and report the MDS ones");
    std::string search_path;
    std::optional<std::uint64_t> seed;
    search->add_option("config", search_path, "search config JSON file")->required();
    search->add_option("--seed", seed, "override the config seed");
    search->add_option("--format", format, "text | structured");
    search->add_option("--jobs", jobs, "worker threads");

    auto* invert = app.add_subcommand("invert", "Invert a structured matrix defined by its points");
    std::string invert_path, kind;
    invert->add_option("--kind", kind, "vandermonde | toeplitz | toeplitz-reversed")->required();
    invert->add_option("input", invert_path, "input JSON file (field, alpha, optional size)")->required();
    invert->add_option("--format", format, "text | structured");

    auto* wseq = app.add_subcommand("wseq", "Print a window of the w sequence");
    std::string wseq_path;
    wseq->add_option("input", wseq_path, "input JSON file (field, alpha, lo, hi)")->required();
    wseq->add_option("--format", format, "text | structured");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? 0 : 2;
    }

    std::vector<std::string> argvec(argv, argv + argc);
    try {
        if (*verify) return cmd_verify(verify_path, method, full_report, format, jobs, argvec);
        if (*search) return cmd_search(search_path, seed, format, jobs, argvec);
        if (*invert) return cmd_invert(kind, invert_path, format);
        if (*wseq) return cmd_wseq(wseq_path, format);
    } catch (const atgrs::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
