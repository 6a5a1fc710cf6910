// Command-line front end: exact plethysm/tensor multiplicities, sequence
// generation over dilations, quasi-polynomial fitting, and the full
// asymptotic-theorem verification. All printed values are exact integers or
// "num/den" rationals; nothing is ever rounded.

#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "plethysm/plethysm.hpp"

namespace {

constexpr int kExitCheckFailed = 1;
constexpr int kExitInvalidInput = 2;
constexpr int kExitResourceGuard = 3;

using plethysm::Partition;
using plethysm::Rat;

struct SequenceSpec {
    std::string lambda_text;
    int p = 0;
    int k = 0;
    std::string mu_text;
    int dmax = 9;
    std::string what = "both"; // a | c | both
    bool use_cache = true;
};

std::vector<std::pair<long, Rat>> read_csv(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw plethysm::invalid_input("cannot open " + path);
    std::vector<std::pair<long, Rat>> rows;
    std::string line;
    bool header = true;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        if (header) {
            if (line != "d,value") throw plethysm::invalid_input("CSV must start with 'd,value'");
            header = false;
            continue;
        }
        const auto comma = line.find(',');
        if (comma == std::string::npos) throw plethysm::invalid_input("bad CSV row: " + line);
        rows.emplace_back(std::stol(line.substr(0, comma)),
                          plethysm::rat_from_string(line.substr(comma + 1)));
    }
    return rows;
}

void write_csv(std::ostream& out, const std::vector<std::pair<long, Rat>>& rows) {
    out << "d,value\n";
    for (const auto& [d, v] : rows) out << d << ',' << plethysm::rat_to_string(v) << "\n";
}

/// Sequence values with the on-disk cache consulted per d (single writer:
/// values are computed, recorded, then flushed once).
std::vector<std::pair<long, Rat>> cached_sequence(const SequenceSpec& spec, const std::string& what) {
    const Partition lambda = Partition::parse(spec.lambda_text);
    const Partition mu = what == "a" ? Partition::parse(spec.mu_text) : Partition();
    plethysm::SequenceCache cache(what, lambda, spec.p, spec.k, what == "a" ? spec.mu_text : "");
    std::vector<std::pair<long, Rat>> rows;
    for (int d = 0; d <= spec.dmax; ++d) {
        std::optional<Rat> hit = spec.use_cache ? cache.get(d) : std::nullopt;
        if (!hit) {
            const plethysm::Int value = what == "a"
                                            ? plethysm::a_value(lambda, spec.p, spec.k, mu, d)
                                            : plethysm::c_value(lambda, spec.p, spec.k, d);
            hit = Rat(value);
            if (spec.use_cache) cache.put(d, *hit);
        }
        rows.emplace_back(d, *hit);
    }
    if (spec.use_cache) cache.flush();
    return rows;
}

int run_coeff(const std::string& mu_text, const std::string& lambda_text, int k,
              const std::string& pi_text, const std::string& engine, const std::string& inner,
              bool with_c, bool as_json) {
    const Partition mu = Partition::parse(mu_text);
    const Partition pi = Partition::parse(pi_text);
    plethysm::Int a;
    nlohmann::json record{{"mu", mu_text}, {"pi", pi_text}, {"engine", engine}};

    if (!lambda_text.empty()) {
        const Partition lambda = Partition::parse(lambda_text);
        if (engine == "hwv")
            throw plethysm::invalid_input("--engine hwv supports the one-row inner shape only");
        a = plethysm::plethysm_coefficient(mu, lambda, pi);
        record["lambda"] = lambda_text;
    } else {
        const auto row = inner == "e" ? plethysm::InnerRow::elementary : plethysm::InnerRow::complete;
        if (engine == "hwv") {
            if (row == plethysm::InnerRow::elementary)
                throw plethysm::invalid_input("--engine hwv supports --inner h only");
            a = plethysm::multiplicity_by_character(pi, mu.size(), k, std::max(pi.length(), 1), mu);
        } else {
            a = plethysm::plethysm_coefficient_fast(mu, k, pi, row);
        }
        record["k"] = k;
        record["inner"] = inner;
        if (with_c) {
            const plethysm::Int c = plethysm::tensor_multiplicity(pi, mu.size(), k);
            record["c"] = c.get_str();
            if (!as_json) std::cout << "c = " << c.get_str() << "\n";
        }
    }
    record["a"] = a.get_str();
    if (as_json)
        std::cout << record.dump(1) << "\n";
    else
        std::cout << a.get_str() << "\n";
    return 0;
}

int run_sequence(const SequenceSpec& spec, bool as_json, const std::string& out_path) {
    if (spec.what == "a" && spec.mu_text.empty())
        throw plethysm::invalid_input("--what a requires --mu");
    nlohmann::json record{{"lambda", spec.lambda_text}, {"p", spec.p}, {"k", spec.k},
                          {"dmax", spec.dmax}, {"what", spec.what}};

    std::vector<std::pair<long, Rat>> a_rows, c_rows;
    if (spec.what == "a" || spec.what == "both") {
        if (spec.mu_text.empty()) throw plethysm::invalid_input("--what both requires --mu");
        a_rows = cached_sequence(spec, "a");
        record["mu"] = spec.mu_text;
        nlohmann::json rows = nlohmann::json::array();
        for (const auto& [d, v] : a_rows) rows.push_back({d, plethysm::rat_to_string(v)});
        record["a"] = rows;
    }
    if (spec.what == "c" || spec.what == "both") {
        c_rows = cached_sequence(spec, "c");
        nlohmann::json rows = nlohmann::json::array();
        for (const auto& [d, v] : c_rows) rows.push_back({d, plethysm::rat_to_string(v)});
        record["c"] = rows;
    }

    std::ofstream file;
    std::ostream* out = &std::cout;
    if (!out_path.empty()) {
        file.open(out_path);
        if (!file) throw plethysm::invalid_input("cannot write " + out_path);
        out = &file;
    }
    if (as_json) {
        *out << record.dump(1) << "\n";
    } else {
        if (spec.what == "both")
            throw plethysm::invalid_input("CSV output is a single d,value series; use --what a|c or --json");
        write_csv(*out, spec.what == "a" ? a_rows : c_rows);
    }
    return 0;
}

int run_fit(const std::string& input, const SequenceSpec& spec, int max_period, int max_degree,
            int drop_prefix) {
    std::vector<std::pair<long, Rat>> samples;
    if (!input.empty()) {
        samples = read_csv(input);
    } else {
        if (spec.what == "both") throw plethysm::invalid_input("fit needs --what a or --what c");
        if (spec.what == "a" && spec.mu_text.empty())
            throw plethysm::invalid_input("--what a requires --mu");
        samples = cached_sequence(spec, spec.what);
    }
    const int degree_bound = max_degree > 0 ? max_degree : std::max(2, spec.p * (spec.p + 1) / 2);
    const plethysm::QuasiPolynomial fit =
        plethysm::fit_quasipolynomial(samples, degree_bound, max_period, drop_prefix);

    nlohmann::json residuals = nlohmann::json::array();
    bool all_zero = true;
    for (const auto& [d, v] : samples) {
        const Rat r = v - fit.evaluate(d);
        if (r != 0) all_zero = false;
        residuals.push_back(plethysm::rat_to_string(r));
    }
    const plethysm::LeadingTermReport lead = plethysm::leading_term_report(fit);
    nlohmann::json leading = nlohmann::json::array();
    for (const Rat& c : lead.per_residue_leading) leading.push_back(plethysm::rat_to_string(c));
    nlohmann::json out{{"quasipolynomial", fit.to_json()},
                       {"validation", {{"residuals", residuals}, {"all_zero", all_zero}}},
                       {"leading",
                        {{"degree", lead.degree},
                         {"constant", lead.constant_leading},
                         {"per_residue", leading}}}};
    std::cout << out.dump(1) << "\n";
    return all_zero ? 0 : kExitCheckFailed;
}

int run_verify(const std::string& lambda_text, int p, int k, int dmax, int max_period,
               double budget_seconds, bool as_json) {
    plethysm::VerifyOptions opts;
    opts.dmax = dmax;
    opts.max_period = max_period;
    opts.budget_seconds = budget_seconds;
    const plethysm::VerificationReport report =
        plethysm::verify_theorem(Partition::parse(lambda_text), p, k, opts);
    if (as_json)
        std::cout << report.to_json().dump(1) << "\n";
    else
        std::cout << report.summary();
    return report.passed ? 0 : kExitCheckFailed;
}

int run_cache(const std::string& action, int p) {
    namespace fs = std::filesystem;
    const fs::path dir = plethysm::cache_dir();
    if (action == "info") {
        std::cout << "cache dir: " << dir.string() << "\n";
        if (!fs::exists(dir)) {
            std::cout << "(empty)\n";
            return 0;
        }
        for (const auto& entry : fs::directory_iterator(dir))
            std::cout << entry.path().filename().string() << " (" << fs::file_size(entry.path())
                      << " bytes)\n";
        return 0;
    }
    if (action == "clear") {
        if (fs::exists(dir))
            for (const auto& entry : fs::directory_iterator(dir)) fs::remove_all(entry.path());
        std::cout << "cleared " << dir.string() << "\n";
        return 0;
    }
    if (action == "warm") {
        if (p < 1) throw plethysm::invalid_input("cache warm requires --p");
        plethysm::save_character_table(plethysm::CharacterTable::build(p));
        std::cout << "wrote " << plethysm::character_table_path(p).string() << "\n";
        return 0;
    }
    throw plethysm::invalid_input("unknown cache action: " + action);
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact plethysm coefficients, tensor multiplicities, and their quasi-polynomial asymptotics"};
    app.require_subcommand(1);

    // coeff
    std::string mu_text, lambda_text, pi_text, engine = "symfunc", inner = "h";
    int coeff_k = -1;
    bool with_c = false, coeff_json = false;
    CLI::App* coeff = app.add_subcommand("coeff", "one plethysm coefficient a^pi");
    coeff->add_option("--mu", mu_text, "outer partition")->required();
    coeff->add_option("--pi", pi_text, "target partition")->required();
    CLI::Option* lambda_opt = coeff->add_option("--lambda", lambda_text, "inner partition (slow general path)");
    CLI::Option* k_opt = coeff->add_option("--k", coeff_k, "inner one-row degree (fast path)");
    k_opt->excludes(lambda_opt);
    coeff->add_option("--inner", inner, "one-row flavor: h or e")->check(CLI::IsMember({"h", "e"}));
    coeff->add_option("--engine", engine, "symfunc or hwv")->check(CLI::IsMember({"symfunc", "hwv"}));
    coeff->add_flag("--with-c", with_c, "also print the tensor multiplicity c");
    coeff->add_flag("--json", coeff_json, "structured output");

    // sequence
    SequenceSpec seq;
    bool seq_json = false;
    std::string seq_out;
    CLI::App* sequence = app.add_subcommand("sequence", "a- and c-sequences over dilations d");
    sequence->add_option("--lambda", seq.lambda_text)->required();
    sequence->add_option("--p", seq.p)->required();
    sequence->add_option("--k", seq.k)->required();
    sequence->add_option("--mu", seq.mu_text);
    sequence->add_option("--dmax", seq.dmax)->required();
    sequence->add_option("--what", seq.what)->check(CLI::IsMember({"a", "c", "both"}));
    sequence->add_flag("--json", seq_json);
    sequence->add_option("--out", seq_out, "write to file instead of stdout");
    bool seq_no_cache = false;
    sequence->add_flag("--no-cache", seq_no_cache, "bypass the on-disk cache");

    // fit
    SequenceSpec fit_seq;
    std::string fit_input;
    int max_period = 12, max_degree = -1, drop_prefix = 0;
    CLI::App* fit = app.add_subcommand("fit", "exact quasi-polynomial fit of a sequence");
    fit->add_option("--input", fit_input, "CSV file with header d,value");
    fit->add_option("--lambda", fit_seq.lambda_text);
    fit->add_option("--p", fit_seq.p);
    fit->add_option("--k", fit_seq.k);
    fit->add_option("--mu", fit_seq.mu_text);
    fit->add_option("--dmax", fit_seq.dmax);
    fit->add_option("--what", fit_seq.what)->check(CLI::IsMember({"a", "c", "both"}));
    fit->add_option("--max-period", max_period);
    fit->add_option("--max-degree", max_degree);
    fit->add_option("--drop-prefix", drop_prefix);

    // verify
    std::string verify_lambda;
    int verify_p = 0, verify_k = 0, verify_dmax = -1, verify_period = 12;
    double budget_seconds = 600.0;
    bool verify_json = false;
    CLI::App* verify = app.add_subcommand("verify", "check the asymptotic theorem on an instance");
    verify->add_option("--lambda", verify_lambda)->required();
    verify->add_option("--p", verify_p)->required();
    verify->add_option("--k", verify_k)->required();
    verify->add_option("--dmax", verify_dmax);
    verify->add_option("--max-period", verify_period);
    verify->add_option("--budget-seconds", budget_seconds);
    verify->add_flag("--json", verify_json);

    // cache
    std::string cache_action;
    int cache_p = 0;
    CLI::App* cache = app.add_subcommand("cache", "inspect or manage the on-disk cache");
    cache->add_option("action", cache_action, "info | clear | warm")->required();
    cache->add_option("--p", cache_p, "symmetric group size for warm");

    CLI11_PARSE(app, argc, argv);

    try {
        if (coeff->parsed()) {
            if (lambda_text.empty() && coeff_k < 0)
                throw plethysm::invalid_input("coeff needs --lambda or --k");
            return run_coeff(mu_text, lambda_text, coeff_k, pi_text, engine, inner, with_c,
                             coeff_json);
        }
        if (sequence->parsed()) {
            seq.use_cache = !seq_no_cache;
            return run_sequence(seq, seq_json, seq_out);
        }
        if (fit->parsed()) return run_fit(fit_input, fit_seq, max_period, max_degree, drop_prefix);
        if (verify->parsed())
            return run_verify(verify_lambda, verify_p, verify_k, verify_dmax, verify_period,
                              budget_seconds, verify_json);
        if (cache->parsed()) return run_cache(cache_action, cache_p);
    } catch (const plethysm::resource_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitResourceGuard;
    } catch (const plethysm::FitError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitCheckFailed;
    } catch (const plethysm::invalid_input& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInvalidInput;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInvalidInput;
    }
    return 0;
}
