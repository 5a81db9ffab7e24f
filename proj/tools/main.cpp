// Command-line front end: prove | verify | check | list.
// Exit codes: 0 success, 1 mathematical failure, 2 input/usage error.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>

#include "hypsum/database.hpp"
#include "hypsum/errors.hpp"
#include "hypsum/expr.hpp"
#include "hypsum/serialize.hpp"

using namespace hypsum;

namespace {

constexpr int kExitProved = 0;
constexpr int kExitMathFailure = 1;
constexpr int kExitUsage = 2;

std::optional<TheoremEntry> load_entry(const std::string& name_or_file, std::string& err) {
    if (const TheoremEntry* e = find_theorem(name_or_file)) return *e;
    std::ifstream in(name_or_file);
    if (!in) {
        err = "unknown theorem and unreadable file: " + name_or_file;
        return std::nullopt;
    }
    try {
        nlohmann::json j = nlohmann::json::parse(in);
        TheoremEntry e;
        e.spec = theorem_from_json(j);
        if (j.contains("shift"))
            e.shift = {{j["shift"].at("param").get<std::string>(),
                        j["shift"].at("step").get<int>()}};
        if (j.contains("extension")) {
            e.extension_param = j["extension"].at("param").get<std::string>();
            e.extension_times = j["extension"].at("times").get<int>();
        }
        return e;
    } catch (const std::exception& ex) {
        err = std::string("parse error: ") + ex.what();
        return std::nullopt;
    }
}

void write_out(const std::string& path, const nlohmann::json& j) {
    std::ofstream out(path);
    out << j.dump(2) << "\n";
}

int cmd_prove(const std::string& name, const std::string& out_path, bool no_extend,
              int max_order, int samples, long bits) {
    std::string err;
    auto entry = load_entry(name, err);
    if (!entry) {
        std::cerr << "error: " << err << "\n";
        return kExitUsage;
    }

    if (entry->numeric_only) {
        std::cout << "theorem " << entry->spec.name
                  << ": symbolic pipeline disabled for this entry ("
                  << entry->numeric_only_reason << ")\n";
        PrecisionConfig cfg;
        cfg.mantissa_bits = bits;
        NumericReport report = check_theorem_numeric(entry->spec, samples, cfg);
        for (const auto& c : report.checks)
            std::cout << "  " << (c.pass ? "pass" : "FAIL") << "  " << c.name << "  "
                      << c.inputs << "\n";
        std::cout << (report.all_pass() ? "numeric check passed\n" : "numeric check FAILED\n");
        if (!out_path.empty()) write_out(out_path, report_to_json(report));
        return report.all_pass() ? kExitProved : kExitMathFailure;
    }

    ProveOptions opts;
    opts.max_order = max_order;
    ProofTranscript t = prove(entry->spec, opts);
    if (t.verdict == ProofTranscript::Proved && !no_extend && !entry->extension_param.empty())
        t = extend_domain(entry->spec, t, entry->extension_param, entry->extension_times);
    std::cout << t.text();
    if (!out_path.empty()) write_out(out_path, transcript_to_json(t));
    return t.verdict == ProofTranscript::Proved ? kExitProved : kExitMathFailure;
}

int cmd_verify(const std::string& file) {
    std::ifstream in(file);
    if (!in) {
        std::cerr << "error: cannot read " << file << "\n";
        return kExitUsage;
    }
    VerifyInput vin;
    try {
        vin = verify_input_from_json(nlohmann::json::parse(in));
    } catch (const std::exception& ex) {
        std::cerr << "error: " << ex.what() << "\n";
        return kExitUsage;
    }
    try {
        ShiftedTheorem sh = shift_theorem(vin.spec, vin.shift);
        Certificate cert{vin.certificate, false};
        bool ok = verify_certificate(sh.big_f, cert);
        std::cout << "certificate " << (ok ? "verified: exact identity" : "REJECTED") << "\n";
        return ok ? kExitProved : kExitMathFailure;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
}

int cmd_check(const std::string& name, int samples, long bits, const std::string& out_path,
              const std::vector<std::string>& sets) {
    std::string err;
    auto entry = load_entry(name, err);
    if (!entry) {
        std::cerr << "error: " << err << "\n";
        return kExitUsage;
    }
    PrecisionConfig cfg;
    cfg.mantissa_bits = bits;

    std::optional<std::map<std::string, Rational>> fixed;
    if (!sets.empty()) {
        fixed.emplace();
        for (const auto& s : sets) {
            auto eq = s.find('=');
            if (eq == std::string::npos) {
                std::cerr << "error: --set expects name=value, got " << s << "\n";
                return kExitUsage;
            }
            try {
                (*fixed)[s.substr(0, eq)] = parse_rational(s.substr(eq + 1));
            } catch (const ParseError& e) {
                std::cerr << "error: " << e.what() << "\n";
                return kExitUsage;
            }
        }
    }

    // Recover the WZ pair for the certificate replay when the symbolic
    // pipeline applies.
    std::optional<WZData> wz;
    if (!entry->numeric_only) {
        try {
            ShiftedTheorem sh = shift_theorem(entry->spec, entry->shift);
            auto cert = wz_pair(sh.big_f);
            if (cert) wz = WZData{sh.big_f, *cert};
        } catch (const Error&) {
            // numeric comparison still runs
        }
    }
    try {
        NumericReport report = check_theorem_numeric(entry->spec, samples, cfg,
                                                     wz ? &*wz : nullptr,
                                                     fixed ? &*fixed : nullptr);
        for (const auto& c : report.checks) {
            std::cout << (c.pass ? "pass" : "FAIL") << "  " << c.name << "  " << c.inputs;
            if (c.exact)
                std::cout << " exact " << c.lhs << " = " << c.rhs;
            else
                std::cout << " rel_err " << c.rel_err;
            std::cout << "\n";
        }
        if (!out_path.empty()) write_out(out_path, report_to_json(report));
        return report.all_pass() ? kExitProved : kExitMathFailure;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
}

int cmd_list(bool as_json) {
    const auto& db = theorem_database();
    if (as_json) {
        nlohmann::json arr = nlohmann::json::array();
        for (const auto& e : db) {
            nlohmann::json j = theorem_to_json(e.spec);
            if (e.numeric_only) j["numeric_only"] = true;
            arr.push_back(j);
        }
        std::cout << arr.dump(2) << "\n";
        return kExitProved;
    }
    for (const auto& e : db) {
        const auto& s = e.spec;
        std::cout << s.name << ": " << s.upper.size() << "F" << s.lower.size() << "[";
        for (std::size_t i = 0; i < s.upper.size(); ++i)
            std::cout << (i ? ", " : "") << poly_to_string(s.upper[i]);
        std::cout << "; ";
        for (std::size_t i = 0; i < s.lower.size(); ++i)
            std::cout << (i ? ", " : "") << poly_to_string(s.lower[i]);
        std::cout << "; " << rational_to_string(s.z) << "]";
        if (!s.stated_conditions.empty()) {
            std::cout << "  for ";
            for (std::size_t i = 0; i < s.stated_conditions.size(); ++i)
                std::cout << (i ? " and " : "") << s.stated_conditions[i].str();
        }
        if (e.numeric_only) std::cout << "  [numeric check only]";
        std::cout << "\n";
    }
    return kExitProved;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"symbolic prover for non-terminating hypergeometric summation theorems"};
    app.require_subcommand(1);

    std::string name, out_path;
    bool no_extend = false, as_json = false;
    int samples = 5, max_order = 2;
    long bits = 128;
    std::vector<std::string> sets;

    auto* prove_cmd = app.add_subcommand("prove", "run the proof pipeline for a theorem");
    prove_cmd->add_option("name", name, "database entry or spec file")->required();
    prove_cmd->add_option("--out", out_path, "write the structured transcript here");
    prove_cmd->add_flag("--no-extend", no_extend, "skip the contiguous domain extension");
    prove_cmd->add_option("--max-order", max_order, "telescoping order cap");
    prove_cmd->add_option("--samples", samples, "numeric samples (numeric-only entries)");
    prove_cmd->add_option("--bits", bits, "mantissa bits (numeric-only entries)");

    auto* verify_cmd = app.add_subcommand("verify", "check an embedded certificate exactly");
    verify_cmd->add_option("file", name, "spec file with certificate")->required();

    auto* check_cmd = app.add_subcommand("check", "numeric high-precision validation");
    check_cmd->add_option("name", name, "database entry or spec file")->required();
    check_cmd->add_option("--samples", samples, "number of parameter samples");
    check_cmd->add_option("--bits", bits, "mantissa bits");
    check_cmd->add_option("--out", out_path, "write the numeric report here");
    check_cmd->add_option("--set", sets, "fix a parameter, e.g. --set a=-3 (repeatable)");

    auto* list_cmd = app.add_subcommand("list", "list the built-in theorems");
    list_cmd->add_flag("--json", as_json, "machine-readable output");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? 0 : kExitUsage;
    }

    try {
        if (prove_cmd->parsed())
            return cmd_prove(name, out_path, no_extend, max_order, samples, bits);
        if (verify_cmd->parsed()) return cmd_verify(name);
        if (check_cmd->parsed()) return cmd_check(name, samples, bits, out_path, sets);
        if (list_cmd->parsed()) return cmd_list(as_json);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    return kExitUsage;
}
