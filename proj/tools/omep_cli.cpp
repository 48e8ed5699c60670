// Command-line front end: generate the built-in plan families, analyze plan
// files, run the claim-verification suites, and emit orthogonal arrays.
//
// Exit codes: 0 success, 1 verification failure, 2 usage or parse error.

#include "omep/omep.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

namespace {

using namespace omep;

constexpr int kExitOk = 0;
constexpr int kExitVerifyFail = 1;
constexpr int kExitUsage = 2;

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ParseError("cannot open '" + path + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write '" + path + "'");
    out << content;
}

bool ends_with(const std::string& s, const std::string& suffix) {
    return s.size() >= suffix.size() && s.compare(s.size() - suffix.size(), suffix.size(), suffix) == 0;
}

Plan load_plan(const std::string& path) {
    const std::string text = read_file(path);
    return ends_with(path, ".csv") ? plan_from_csv(text) : plan_from_text(text);
}

BlockDesign design_from_selector(const std::string& sel) {
    if (sel.size() == 1 && sel[0] >= 'a' && sel[0] <= 'd') return catalog_design(sel[0]);
    if (sel.rfind("half:", 0) == 0) {
        const std::string v = sel.substr(5);
        if (v.empty() || v.find_first_not_of("0123456789") != std::string::npos)
            throw CLI::ValidationError("--design", "bad half-overlap size '" + v + "'");
        return half_overlap_design(std::stoul(v));
    }
    throw CLI::ValidationError("--design", "unknown design '" + sel + "' (a|b|c|d|half:V)");
}

std::string spectrum_line(const RatMatrix& m) {
    const auto s = rational_spectrum(m);
    std::string out;
    for (const auto& e : s.eigenvalues) {
        if (!out.empty()) out += " ";
        out += e.value.str() + "^" + std::to_string(e.multiplicity);
    }
    if (!s.complete()) {
        if (!out.empty()) out += ", ";
        out += "unfactored part: " + poly_str(s.unfactored, "l");
    }
    return out.empty() ? "(none)" : out;
}

std::string join(const std::vector<std::string>& items, const std::string& sep) {
    std::string out;
    for (const auto& s : items) {
        if (!out.empty()) out += sep;
        out += s;
    }
    return out;
}

// ---------------------------------------------------------------------------
// generate
// ---------------------------------------------------------------------------

struct GenerateOptions {
    std::string family;
    std::string output;
    std::string design;
    std::string oa_file;
    unsigned n = 0;
    unsigned k = 0;
    bool csv = false;
};

Plan build_family(const GenerateOptions& opt) {
    const std::string& f = opt.family;
    if (f == "a12:1") return build_a12(1);
    if (f == "a12:2") return build_a12(2);
    if (f == "a12:3") return build_a12(3);
    if (f == "a8") return build_a8();
    if (f.rfind("series:", 0) == 0) {
        const SeriesVariant v = variant_from_tag(f.substr(7));
        if (opt.n == 0)
            throw CLI::ValidationError("--n", "series generation needs --n");
        if (opt.n < 3) throw std::invalid_argument("n must be >= 3");
        return build_series(v, opt.n);
    }
    if (f == "omep-bl") {
        if (opt.design.empty())
            throw CLI::ValidationError("--design", "omep-bl generation needs --design");
        const BlockDesign d = design_from_selector(opt.design);
        const std::size_t block_k = d.blocks.front().size();
        if (opt.k != 0 && opt.k != block_k)
            throw std::invalid_argument("--k " + std::to_string(opt.k) +
                                        " does not match the design block size " +
                                        std::to_string(block_k));
        if (!opt.oa_file.empty()) return build_omep_bl(d, oa_from_text(read_file(opt.oa_file)));
        return build_omep_bl(d);
    }
    throw CLI::ValidationError(
        "family", "unknown family '" + f + "' (a12:1|a12:2|a12:3|a8|series:i|ii|iii|omep-bl)");
}

int cmd_generate(const GenerateOptions& opt) {
    const Plan plan = build_family(opt);
    const std::string text = opt.csv ? plan_to_csv(plan) : plan_to_text(plan);

    std::ostringstream summary;
    summary << "generated " << plan.family << ": " << plan.runs << " runs, "
            << plan.factor_count() << " factors (";
    std::vector<std::string> parts;
    for (const auto& fac : plan.factors)
        parts.push_back(fac.name + ":" + std::to_string(fac.levels));
    summary << join(parts, " ") << ")";
    if (plan.block_factor) {
        const auto sizes = replication_vector(plan, *plan.block_factor);
        summary << ", " << sizes.size() << " blocks of size " << sizes.front();
    }
    summary << ".";
    for (const auto& note : plan.notes) summary << " note: " << note << ".";

    if (opt.output.empty()) {
        std::cout << text;
        std::cerr << summary.str() << "\n";
    } else {
        write_file(opt.output, text);
        std::cout << summary.str() << " wrote " << opt.output << "\n";
    }
    return kExitOk;
}

// ---------------------------------------------------------------------------
// analyze
// ---------------------------------------------------------------------------

struct AnalyzeOptions {
    std::string plan_file;
    std::vector<std::string> factors;
    std::vector<std::string> eliminate;
};

int cmd_analyze(const AnalyzeOptions& opt) {
    const Plan plan = load_plan(opt.plan_file);

    std::cout << "plan: " << opt.plan_file << "\n";
    std::cout << "runs: " << plan.runs << ", factors: " << plan.factor_count();
    if (plan.block_factor) std::cout << ", block factor: " << *plan.block_factor;
    std::cout << "\n\nreplication:\n";
    for (const auto& f : plan.factors) {
        std::cout << "  " << f.name << " (" << f.levels << " levels):";
        for (std::size_t r : replication_vector(plan, f.name)) std::cout << " " << r;
        std::cout << "\n";
    }

    const auto dof = dof_summary(plan);
    std::cout << "\ndegrees of freedom: model " << dof.model_df << ", residual "
              << dof.residual_df << (dof.residual_df == 0 ? " (saturated)" : "") << "\n";

    std::cout << "\npairwise orthogonality:\n";
    const auto names = plan.factor_names();
    for (std::size_t i = 0; i < names.size(); ++i)
        for (std::size_t j = i + 1; j < names.size(); ++j) {
            std::cout << "  " << names[i] << " ~ " << names[j] << ": ";
            if (is_proportional_frequency(plan, names[i], names[j])) {
                std::cout << "proportional frequency\n";
                continue;
            }
            std::string witness;
            for (const auto& c : names) {
                if (c == names[i] || c == names[j]) continue;
                if (orthogonal_through(plan, names[i], names[j], c)) {
                    witness = c;
                    break;
                }
            }
            if (!witness.empty())
                std::cout << "orthogonal through " << witness << "\n";
            else
                std::cout << "non-orthogonal\n";
        }

    std::vector<std::string> selected = opt.factors.empty() ? names : opt.factors;
    for (const auto& name : selected) {
        const std::vector<std::string> elim =
            opt.eliminate.empty() ? plan.factors_except({name}) : opt.eliminate;
        const auto res = c_matrix(plan, name, name, elim);
        std::cout << "\nC-matrix of " << name << " eliminating {" << join(res.eliminated, ", ")
                  << "}:\n"
                  << res.matrix.pretty();
        std::cout << "  spectrum: " << spectrum_line(res.matrix) << "\n";
    }
    return kExitOk;
}

// ---------------------------------------------------------------------------
// verify
// ---------------------------------------------------------------------------

struct VerifyOptions {
    std::string suite;
    std::string report_file;
    std::string array_file;
};

std::vector<ClaimReport> run_suite(const VerifyOptions& opt) {
    const std::string& s = opt.suite;
    if (s == "all") return verify_all();
    if (s == "a12") return verify_a12();
    if (s == "a8") return verify_a8();
    if (s.rfind("series:", 0) == 0) {
        const std::string rest = s.substr(7);
        const auto colon = rest.find(':');
        if (colon == std::string::npos)
            throw CLI::ValidationError("suite", "series suite is series:N:VARIANT");
        const std::string num = rest.substr(0, colon);
        if (num.empty() || num.find_first_not_of("0123456789") != std::string::npos)
            throw CLI::ValidationError("suite", "bad series n '" + num + "'");
        return verify_series(std::stoul(num), variant_from_tag(rest.substr(colon + 1)));
    }
    if (s.rfind("omep-bl:", 0) == 0) {
        const std::string sel = s.substr(8);
        return verify_omep_bl(design_from_selector(sel), sel);
    }
    if (s == "l12-ref") {
        if (opt.array_file.empty())
            throw CLI::ValidationError("suite",
                                       "the l12-ref suite needs --array with a 12-run plan file");
        return verify_reference_l12(load_plan(opt.array_file));
    }
    throw CLI::ValidationError(
        "suite", "unknown suite '" + s + "' (a12|a8|series:N:VARIANT|omep-bl:NAME|l12-ref|all)");
}

int cmd_verify(const VerifyOptions& opt) {
    const auto reports = run_suite(opt);
    std::cout << reports_to_text(reports);
    if (!opt.report_file.empty()) write_file(opt.report_file, reports_to_jsonl(reports));
    return all_pass(reports) ? kExitOk : kExitVerifyFail;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"orthogonal main effect plans on small blocks: construction, "
                 "exact information-matrix analysis, and claim verification"};
    app.require_subcommand(1);

    GenerateOptions gen;
    auto* generate = app.add_subcommand("generate", "construct a built-in plan family");
    generate->add_option("family", gen.family,
                         "a12:1 | a12:2 | a12:3 | a8 | series:i|ii|iii | omep-bl")
        ->required();
    generate->add_option("-o,--output", gen.output, "output path (stdout when omitted)");
    generate->add_option("--n", gen.n, "series length n (>= 3)");
    generate->add_option("--design", gen.design, "block design: a|b|c|d|half:V");
    generate->add_option("--oa", gen.oa_file, "orthogonal-array file for omep-bl");
    generate->add_option("--k", gen.k, "block size check / field order for omep-bl");
    generate->add_flag("--csv", gen.csv, "write CSV instead of the structured format");

    AnalyzeOptions ana;
    auto* analyze = app.add_subcommand("analyze", "analyze a plan file");
    analyze->add_option("plan", ana.plan_file, "plan file (.csv or structured text)")->required();
    analyze->add_option("--factor", ana.factors, "factor(s) to report C-matrices for");
    analyze->add_option("--eliminate", ana.eliminate,
                        "factors to eliminate (default: all others)")
        ->delimiter(',');

    VerifyOptions ver;
    auto* verify = app.add_subcommand("verify", "run a claim-verification suite");
    verify->add_option("suite", ver.suite,
                       "a12 | a8 | series:N:VARIANT | omep-bl:NAME | l12-ref | all")
        ->required();
    verify->add_option("--report", ver.report_file, "write a JSONL record per claim");
    verify->add_option("--array", ver.array_file, "user-supplied plan file for l12-ref");

    unsigned oa_k = 0;
    std::string oa_out;
    auto* oa = app.add_subcommand("oa", "emit the strength-2 orthogonal array on k symbols");
    oa->add_option("--k", oa_k, "prime-power symbol count")->required();
    oa->add_option("-o,--output", oa_out, "output path (stdout when omitted)");

    auto* catalog = app.add_subcommand("catalog", "list the built-in block designs");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        app.exit(e);  // prints help or the error message
        return e.get_exit_code() == static_cast<int>(CLI::ExitCodes::Success) ? kExitOk
                                                                              : kExitUsage;
    }

    try {
        if (generate->parsed()) return cmd_generate(gen);
        if (analyze->parsed()) return cmd_analyze(ana);
        if (verify->parsed()) return cmd_verify(ver);
        if (oa->parsed()) {
            const std::string text = oa_to_text(oa_from_field(oa_k));
            if (oa_out.empty())
                std::cout << text;
            else {
                write_file(oa_out, text);
                std::cout << "wrote OA(" << oa_k * oa_k << ", " << oa_k + 1 << ", " << oa_k
                          << ", 2) to " << oa_out << "\n";
            }
            return kExitOk;
        }
        if (catalog->parsed()) {
            std::cout << "built-in block designs (0-indexed treatments):\n";
            for (const auto& entry : design_catalog()) {
                std::cout << "  (" << entry.name << ") v=" << entry.design.treatments
                          << ", b=" << entry.design.blocks.size()
                          << ", k=" << entry.design.blocks.front().size() << ": blocks";
                for (const auto& blk : entry.design.blocks) {
                    std::cout << " {";
                    for (std::size_t i = 0; i < blk.size(); ++i)
                        std::cout << (i ? "," : "") << blk[i];
                    std::cout << "}";
                }
                std::cout << "  ->  " << entry.description << "\n";
            }
            std::cout << "half-overlap generator: --design half:V (V >= 4) takes k = smallest "
                         "prime power with 2k > V\nand blocks {0..k-1}, {V-k..V-1}, giving a "
                         "V^k experiment on 2k blocks of size k.\n";
            return kExitOk;
        }
    } catch (const CLI::ValidationError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    return kExitUsage;
}
