#include "cli.hpp"

#include "seq2adic/adic.hpp"
#include "seq2adic/sequence.hpp"
#include "seq2adic/verify.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <ostream>
#include <stdexcept>
#include <string>

namespace seq2adic::cli {

namespace {

using nlohmann::json;  // std::map keys: canonical (alphabetical) order

constexpr int kExitOk = 0;
constexpr int kExitVerifyFailed = 1;
constexpr int kExitBadInput = 2;
constexpr int kExitIo = 3;

// c2_bits is always rendered with 12 decimal places; JSON stores the value
// rounded to the same 12 places so both views agree.
std::string format_c2(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.12f", v);
    return buf;
}

double round_c2(double v) { return std::strtod(format_c2(v).c_str(), nullptr); }

std::string bool_text(bool v) { return v ? "true" : "false"; }

PrimePair parse_pair(const std::string& p_text, const std::string& q_text) {
    auto parse_int = [](const std::string& text, const char* name) {
        try {
            return mpz_class(text, 10);
        } catch (const std::invalid_argument&) {
            throw std::domain_error(std::string(name) + " must be an integer");
        }
    };
    return PrimePair(parse_int(p_text, "p"), parse_int(q_text, "q"));
}

// Big integers always serialize as decimal strings: the values outgrow any
// fixed-width JSON number.
json report_json(const ComplexityReport& r) {
    json j;
    j["p"] = std::to_string(r.pair.p());
    j["q"] = std::to_string(r.pair.q());
    j["n"] = r.n;
    j["s2"] = r.s2.get_str();
    j["d"] = r.d.get_str();
    j["d1"] = r.d1.get_str();
    j["d2"] = r.d2.get_str();
    j["d3"] = r.d3.get_str();
    j["closed_d1"] = r.closed_d1.get_str();
    j["closed_d2"] = r.closed_d2.get_str();
    j["c2_bits"] = round_c2(r.c2_bits);
    j["is_max"] = r.is_max;
    return j;
}

void print_report_plain(const ComplexityReport& r, std::ostream& out) {
    out << "p: " << r.pair.p() << '\n'
        << "q: " << r.pair.q() << '\n'
        << "n: " << r.n << '\n'
        << "s2: " << r.s2.get_str() << '\n'
        << "d: " << r.d.get_str() << '\n'
        << "d1: " << r.d1.get_str() << '\n'
        << "d2: " << r.d2.get_str() << '\n'
        << "d3: " << r.d3.get_str() << '\n'
        << "closed_d1: " << r.closed_d1.get_str() << '\n'
        << "closed_d2: " << r.closed_d2.get_str() << '\n'
        << "c2_bits: " << format_c2(r.c2_bits) << '\n'
        << "is_max: " << bool_text(r.is_max) << '\n';
}

int run_gen(const PrimePair& pair, const std::string& format, std::ostream& out) {
    const BinarySequence seq = BinarySequence::generate(pair);
    if (format == "bits") {
        out << seq.to_bit_string() << '\n';
    } else if (format == "hex") {
        out << seq.to_hex_string() << '\n';
    } else if (format == "plain") {
        out << "p: " << pair.p() << '\n'
            << "q: " << pair.q() << '\n'
            << "n: " << seq.n() << '\n'
            << "ones: " << seq.ones_count() << '\n'
            << "bits: " << seq.to_bit_string() << '\n';
    } else if (format == "json") {
        json j;
        j["p"] = std::to_string(pair.p());
        j["q"] = std::to_string(pair.q());
        j["n"] = seq.n();
        j["ones"] = seq.ones_count();
        j["bits"] = seq.to_bit_string();
        out << j.dump() << '\n';
    } else {
        throw std::domain_error("format '" + format + "' is not valid for gen");
    }
    return kExitOk;
}

int run_analyze(const PrimePair& pair, const std::string& format, std::ostream& out) {
    const ComplexityReport r = analyze(pair);
    if (format == "plain")
        print_report_plain(r, out);
    else if (format == "json")
        out << report_json(r).dump() << '\n';
    else
        throw std::domain_error("format '" + format + "' is not valid for analyze");
    return kExitOk;
}

int run_verify(const PrimePair& pair, const std::string& format, std::ostream& out) {
    const VerificationCertificate cert = verify_pair(pair);
    if (format == "plain") {
        for (const CheckResult& c : cert.checks) {
            out << c.name << ": " << (c.passed ? "PASS" : "FAIL");
            if (!c.passed) out << "  " << c.detail;
            out << '\n';
        }
    } else if (format == "json") {
        json j;
        j["p"] = std::to_string(pair.p());
        j["q"] = std::to_string(pair.q());
        j["n"] = pair.n();
        j["all_passed"] = cert.all_passed;
        json checks = json::array();
        for (const CheckResult& c : cert.checks) {
            json e;
            e["name"] = c.name;
            e["passed"] = c.passed;
            e["detail"] = c.detail;
            checks.push_back(e);
        }
        j["checks"] = checks;
        out << j.dump() << '\n';
    } else {
        throw std::domain_error("format '" + format + "' is not valid for verify");
    }
    return cert.all_passed ? kExitOk : kExitVerifyFailed;
}

void write_sweep(const std::vector<SweepEntry>& entries, const std::string& format,
                 std::ostream& out) {
    if (format == "csv") {
        out << "p,q,n,d1,d2,d3,d,closed_d1,closed_d2,c2_bits,is_max,all_passed\n";
        for (const SweepEntry& e : entries) {
            const ComplexityReport& r = e.report;
            out << r.pair.p() << ',' << r.pair.q() << ',' << r.n << ',' << r.d1.get_str() << ','
                << r.d2.get_str() << ',' << r.d3.get_str() << ',' << r.d.get_str() << ','
                << r.closed_d1.get_str() << ',' << r.closed_d2.get_str() << ','
                << format_c2(r.c2_bits) << ',' << bool_text(r.is_max) << ','
                << bool_text(e.certificate.all_passed) << '\n';
        }
    } else if (format == "json") {
        json rows = json::array();
        for (const SweepEntry& e : entries) {
            json row = report_json(e.report);
            row["all_passed"] = e.certificate.all_passed;
            rows.push_back(row);
        }
        out << rows.dump() << '\n';
    } else if (format == "plain") {
        for (const SweepEntry& e : entries) {
            const ComplexityReport& r = e.report;
            out << "p=" << r.pair.p() << " q=" << r.pair.q() << " n=" << r.n << " d1="
                << r.d1.get_str() << " d2=" << r.d2.get_str() << " d3=" << r.d3.get_str() << " d="
                << r.d.get_str() << " closed_d1=" << r.closed_d1.get_str() << " closed_d2="
                << r.closed_d2.get_str() << " c2_bits=" << format_c2(r.c2_bits) << " is_max="
                << bool_text(r.is_max) << " all_passed=" << bool_text(e.certificate.all_passed)
                << '\n';
        }
    } else {
        throw std::domain_error("format '" + format + "' is not valid for sweep");
    }
}

int run_sweep(std::uint64_t max_n, const std::string& out_path, unsigned jobs,
              const std::string& format, std::ostream& out, std::ostream& err) {
    const std::vector<SweepEntry> entries = sweep(max_n, jobs);
    const bool all = std::all_of(entries.begin(), entries.end(),
                                 [](const SweepEntry& e) { return e.certificate.all_passed; });
    if (out_path.empty()) {
        write_sweep(entries, format, out);
    } else {
        std::ofstream file(out_path, std::ios::binary);
        if (!file) {
            err << "cannot open '" << out_path << "' for writing\n";
            return kExitIo;
        }
        write_sweep(entries, format, file);
        file.flush();
        if (!file) {
            err << "error while writing '" << out_path << "'\n";
            return kExitIo;
        }
    }
    return all ? kExitOk : kExitVerifyFailed;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    std::vector<const char*> argv;
    argv.reserve(args.size() + 1);
    argv.push_back("seq2adic");
    for (const std::string& a : args) argv.push_back(a.c_str());
    return run(static_cast<int>(argv.size()), argv.data(), out, err);
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"2-adic complexity of generalized binary sequences of order 2 over Z_pq"};
    app.require_subcommand(1);

    std::string p_text, q_text, out_path;
    std::string gen_format = "bits";
    std::string analyze_format = "plain";
    std::string verify_format = "plain";
    std::string sweep_format = "csv";
    std::uint64_t max_n = 0;
    unsigned jobs = 1;

    auto add_pair_opts = [&](CLI::App* cmd) {
        cmd->add_option("--p", p_text, "first odd prime")->required();
        cmd->add_option("--q", q_text, "second odd prime")->required();
    };

    CLI::App* gen = app.add_subcommand("gen", "print one period of the sequence");
    add_pair_opts(gen);
    gen->add_option("--format", gen_format, "bits | hex | plain | json (default: bits)");

    CLI::App* analyze_cmd = app.add_subcommand("analyze", "complexity report for one pair");
    add_pair_opts(analyze_cmd);
    analyze_cmd->add_option("--format", analyze_format, "plain | json (default: plain)");

    CLI::App* verify_cmd = app.add_subcommand("verify", "run the twelve congruence checks");
    add_pair_opts(verify_cmd);
    verify_cmd->add_option("--format", verify_format, "plain | json (default: plain)");

    CLI::App* sweep_cmd = app.add_subcommand("sweep", "verify every pair with p*q <= max-n");
    sweep_cmd->add_option("--max-n", max_n, "largest period to cover")->required();
    sweep_cmd->add_option("--out", out_path, "output file (default: stdout)");
    sweep_cmd->add_option("--jobs", jobs, "worker threads (default: 1)")
        ->envname("SEQ2ADIC_JOBS")
        ->check(CLI::PositiveNumber);
    sweep_cmd->add_option("--format", sweep_format, "csv | json | plain (default: csv)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) {  // --help and friends
            out << app.help();
            return kExitOk;
        }
        err << e.what() << '\n';
        return kExitBadInput;
    }

    try {
        if (gen->parsed()) return run_gen(parse_pair(p_text, q_text), gen_format, out);
        if (analyze_cmd->parsed())
            return run_analyze(parse_pair(p_text, q_text), analyze_format, out);
        if (verify_cmd->parsed()) return run_verify(parse_pair(p_text, q_text), verify_format, out);
        if (sweep_cmd->parsed()) return run_sweep(max_n, out_path, jobs, sweep_format, out, err);
    } catch (const std::domain_error& e) {
        err << e.what() << '\n';
        return kExitBadInput;
    } catch (const std::out_of_range& e) {
        err << e.what() << '\n';
        return kExitBadInput;
    }
    return kExitBadInput;  // unreachable: a subcommand is required
}

}  // namespace seq2adic::cli
