// Command-line front end. Exit codes: 0 when every theorem-grade verdict
// holds, 1 when an internal invariant is violated (or the pipeline cannot
// finish), 2 for usage and parse errors.
#pragma once

#include "spcert/certify.hpp"
#include "spcert/generate.hpp"
#include "spcert/set_io.hpp"

#include <CLI11.hpp>

#include <cstdio>
#include <fstream>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

namespace spcert {

namespace cli_detail {

inline ComplexSet load_set(const std::string& path) {
    std::ifstream in(path);
    if (!in)
        throw std::invalid_argument("cannot open " + path);
    return parse_set_file(in, path);
}

inline void write_text_file(const std::string& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    if (!out)
        throw std::invalid_argument("cannot write " + path);
    out << text;
}

inline std::string format_double(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.12g", v);
    return buf;
}

// True when every theorem-grade verdict in the certificate holds. Global
// injectivity is not a theorem and is deliberately not part of this.
inline bool theorems_hold(const InjectionCertificate& cert) {
    if (!cert.eq1_holds || !cert.within_pair_injective)
        return false;
    if (cert.theorem_bound && !*cert.theorem_bound)
        return false;
    return true;
}

struct AnalyzeReport {
    std::size_t set_size, sumset_size, productset_size;
    BigInt energy;
    CauchySchwarzVerdict eq1;
    std::vector<DyadicClass> classes;
    ClassSelection selection;
};

inline AnalyzeReport analyze_set(const ComplexSet& A) {
    AnalyzeReport r{};
    r.set_size = A.size();
    r.sumset_size = sumset(A).size();
    r.productset_size = productset(A).size();
    DirectionTally tally = direction_tally(A);
    r.energy = tally.energy;
    r.eq1 = cauchy_schwarz_check(tally, A, r.productset_size);
    r.classes = dyadic_decompose(tally);
    r.selection = select_popular_class(r.classes, A.size());
    return r;
}

inline nlohmann::ordered_json analyze_json(const AnalyzeReport& r) {
    nlohmann::ordered_json j;
    j["set_size"] = r.set_size;
    j["sumset_size"] = r.sumset_size;
    j["productset_size"] = r.productset_size;
    j["energy"] = r.energy.str();
    j["eq1"] = {{"lower_bound", to_string(r.eq1.lower_bound)},
                {"holds", r.eq1.holds}};
    nlohmann::ordered_json classes = nlohmann::ordered_json::array();
    for (const auto& cls : r.classes)
        classes.push_back({{"k", cls.k},
                           {"size", cls.members.size()},
                           {"mass", cls.mass.str()}});
    j["classes"] = std::move(classes);
    j["selected"] = {{"class_k", r.selection.selected.k},
                     {"class_size", r.selection.selected.members.size()},
                     {"class_mass", r.selection.selected.mass.str()}};
    j["pigeonhole_holds"] = r.selection.pigeonhole_holds;
    j["provable_bound_holds"] = r.selection.provable_bound_holds;
    if (r.selection.paper_bound_holds)
        j["paper_bound_holds"] = *r.selection.paper_bound_holds;
    else
        j["paper_bound_holds"] = nullptr;
    return j;
}

inline int cmd_analyze(const std::string& path, bool as_json, std::ostream& out) {
    AnalyzeReport r = analyze_set(load_set(path));
    if (as_json) {
        out << analyze_json(r).dump(2) << "\n";
    } else {
        out << "|A| = " << r.set_size << "\n";
        out << "|A+A| = " << r.sumset_size << "\n";
        out << "|A*A| = " << r.productset_size << "\n";
        out << "E(A) = " << r.energy.str() << "\n";
        out << "eq1: E >= |A|^4/|A*A|: " << r.energy.str() << " >= "
            << to_string(r.eq1.lower_bound) << ": "
            << (r.eq1.holds ? "holds" : "VIOLATED") << "\n";
        out << "dyadic classes: " << r.classes.size() << "\n";
        for (const auto& cls : r.classes)
            out << "  k=" << cls.k << ": size " << cls.members.size()
                << ", mass " << cls.mass.str() << "\n";
        out << "selected: k=" << r.selection.selected.k << ", |T'| = "
            << r.selection.selected.members.size() << ", mass "
            << r.selection.selected.mass.str() << "\n";
        out << "pigeonhole (mass x classes >= E): "
            << (r.selection.pigeonhole_holds ? "holds" : "VIOLATED") << "\n";
    }
    bool ok = r.eq1.holds && r.selection.pigeonhole_holds &&
              r.selection.provable_bound_holds;
    return ok ? 0 : 1;
}

inline int cmd_oracle_check(const std::string& path, std::size_t cap,
                            std::ostream& out) {
    ComplexSet A = load_set(path);
    BigInt via_tally = direction_tally(A).energy;
    BigInt via_oracle = energy_oracle(A, cap);
    bool equal = via_tally == via_oracle;
    out << via_tally.str() << (equal ? " == " : " != ") << via_oracle.str()
        << "\n";
    return equal ? 0 : 1;
}

inline int cmd_certify(const std::string& path, std::uint64_t seed, int retries,
                       const std::optional<std::string>& out_path,
                       std::ostream& out) {
    ComplexSet A = load_set(path);
    InjectionCertificate cert = certify(A, seed, retries);
    std::string text = certificate_to_string(cert);
    if (out_path) {
        write_text_file(*out_path, text);
        out << "certificate written to " << *out_path
            << ": globally_injective="
            << (cert.globally_injective ? "true" : "false")
            << " attempts=" << cert.attempts
            << " N=" << cert.distinct_sum_count.str() << "\n";
    } else {
        out << text;
    }
    return theorems_hold(cert) ? 0 : 1;
}

struct SweepOptions {
    Family family;
    std::string family_name;
    std::size_t n_min, n_max;
    std::uint64_t seed;
    GenParams params;
    int retries = 32;
};

inline std::string sweep_csv(const SweepOptions& opt, bool& all_theorems_hold) {
    std::ostringstream csv;
    csv << "family,n,size_a,sumset_size,productset_size,energy,"
           "selected_class_mass,theorem_constant,effective_exponent,"
           "globally_injective,retries_used\n";
    std::size_t row = 0;
    for (std::size_t n = opt.n_min; n <= opt.n_max; ++n) {
        if (opt.family == Family::grid) {
            std::size_t side = 0;
            while ((side + 1) * (side + 1) <= n)
                ++side;
            if (side * side != n)
                continue; // grid only exists at perfect-square sizes
        }
        ComplexSet A = generate(opt.family, n, opt.params, opt.seed + row);
        InjectionCertificate cert = certify(A, opt.seed + row, opt.retries);
        all_theorems_hold = all_theorems_hold && theorems_hold(cert);
        csv << opt.family_name << "," << n << "," << cert.set_size << ","
            << cert.sumset_size << "," << cert.productset_size << ","
            << cert.energy.str() << "," << cert.dyadic_class_mass.str() << ",";
        if (cert.effective_constant)
            csv << format_double(*cert.effective_constant);
        csv << ",";
        if (cert.effective_exponent)
            csv << format_double(*cert.effective_exponent);
        csv << "," << (cert.globally_injective ? "true" : "false") << ","
            << (cert.attempts - 1) << "\n";
        ++row;
    }
    return csv.str();
}

} // namespace cli_detail

// args excludes the program name.
inline int run_cli(std::vector<std::string> args, std::ostream& out,
                   std::ostream& err) {
    CLI::App app{"sum-product statistics and injection certificates for "
                 "finite sets of complex rationals"};
    app.require_subcommand(1);

    std::string family_name, set_path, out_path, csv_path, ratio_text = "2";
    std::uint64_t seed = 0;
    std::size_t n = 0, n_min = 0, n_max = 0, cap = 16;
    std::int64_t bound = 10;
    int retries = 32;
    bool as_json = false;

    auto* gen = app.add_subcommand("gen", "generate a set file");
    gen->add_option("--family", family_name, "ap|gp|grid|random")->required();
    gen->add_option("--n", n, "number of elements")->required()
        ->check(CLI::PositiveNumber);
    gen->add_option("--ratio", ratio_text, "gp ratio (Gaussian rational)");
    gen->add_option("--bound", bound, "random family coefficient bound")
        ->check(CLI::PositiveNumber);
    gen->add_option("--seed", seed, "random family seed");
    gen->add_option("--out", out_path, "output set file")->required();

    auto* analyze = app.add_subcommand("analyze", "sizes, energy, dyadic summary");
    analyze->add_option("file", set_path, "set file")->required();
    analyze->add_flag("--json", as_json, "emit JSON");

    auto* oracle = app.add_subcommand(
        "oracle-check", "compare tally energy against the brute-force oracle");
    oracle->add_option("file", set_path, "set file")->required();
    oracle->add_option("--cap", cap, "oracle size cap")->check(CLI::PositiveNumber);

    auto* cert = app.add_subcommand("certify", "run the full pipeline and "
                                               "emit an injection certificate");
    cert->add_option("file", set_path, "set file")->required();
    cert->add_option("--seed", seed, "sampling seed");
    cert->add_option("--retries", retries, "hyperplane retry cap")
        ->check(CLI::PositiveNumber);
    cert->add_option("--out", out_path, "certificate output path (default stdout)");

    auto* sweep = app.add_subcommand("sweep", "certify a family over a size range");
    sweep->add_option("--family", family_name, "ap|gp|grid|random")->required();
    sweep->add_option("--n-min", n_min, "smallest n")->required()
        ->check(CLI::PositiveNumber);
    sweep->add_option("--n-max", n_max, "largest n")->required()
        ->check(CLI::PositiveNumber);
    sweep->add_option("--seed", seed, "base seed (row i uses seed + i)");
    sweep->add_option("--ratio", ratio_text, "gp ratio");
    sweep->add_option("--bound", bound, "random family coefficient bound")
        ->check(CLI::PositiveNumber);
    sweep->add_option("--retries", retries, "hyperplane retry cap")
        ->check(CLI::PositiveNumber);
    sweep->add_option("--csv", csv_path, "output CSV path")->required();

    try {
        std::reverse(args.begin(), args.end());
        app.parse(std::move(args));
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        err << e.what() << "\n";
        return 2;
    }

    try {
        if (gen->parsed()) {
            GenParams params;
            params.ratio = parse_gaussian(ratio_text);
            params.bound = bound;
            Family family = family_from_string(family_name);
            ComplexSet A = generate(family, n, params, seed);
            std::ostringstream text;
            std::string comment = "spcert set: family=" + family_name +
                                  " n=" + std::to_string(n);
            if (family == Family::gp)
                comment += " ratio=" + ratio_text;
            if (family == Family::random_values)
                comment += " bound=" + std::to_string(bound) +
                           " seed=" + std::to_string(seed);
            write_set_file(text, A, comment);
            cli_detail::write_text_file(out_path, text.str());
            out << "wrote " << A.size() << " elements to " << out_path << "\n";
            return 0;
        }
        if (analyze->parsed())
            return cli_detail::cmd_analyze(set_path, as_json, out);
        if (oracle->parsed())
            return cli_detail::cmd_oracle_check(set_path, cap, out);
        if (cert->parsed()) {
            std::optional<std::string> maybe_out;
            if (!out_path.empty())
                maybe_out = out_path;
            return cli_detail::cmd_certify(set_path, seed, retries, maybe_out, out);
        }
        if (sweep->parsed()) {
            if (n_min > n_max)
                throw std::invalid_argument("sweep: --n-min exceeds --n-max");
            cli_detail::SweepOptions opt{family_from_string(family_name),
                                         family_name,
                                         n_min,
                                         n_max,
                                         seed,
                                         GenParams{},
                                         retries};
            opt.params.ratio = parse_gaussian(ratio_text);
            opt.params.bound = bound;
            bool theorems = true;
            std::string csv = cli_detail::sweep_csv(opt, theorems);
            cli_detail::write_text_file(csv_path, csv);
            out << "wrote sweep to " << csv_path << "\n";
            return theorems ? 0 : 1;
        }
    } catch (const OracleCapExceeded& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}

} // namespace spcert
