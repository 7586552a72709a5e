// lineideal: facet ideals of matching complexes of paths.

#include <iostream>
#include <sstream>
#include <stdexcept>
#include <string>

#include <CLI11.hpp>

#include "harness/render.hpp"
#include "harness/verify.hpp"
#include "lineideal/complexes.hpp"
#include "lineideal/line_formulas.hpp"

using namespace lineideal;
using namespace lineideal::harness;

namespace {

constexpr int kUsageError = 2;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

void add_format(CLI::App* cmd, std::string& format) {
    cmd->add_option("--format", format, "Output format")->check(CLI::IsMember({"text", "json", "csv"}));
}

std::string render_sets(std::span<const VarSet> sets, Format format, Json header, bool as_sets) {
    switch (format) {
    case Format::json: {
        header["generators"] = to_json(sets);
        return dump(header);
    }
    case Format::csv: return to_csv(sets);
    case Format::text: break;
    }
    std::ostringstream out;
    for (VarSet s : sets) out << (as_sets ? to_set_string(s) : to_monomial_string(s)) << '\n';
    return out.str();
}

int cmd_facets(int n, int offset, Format format) {
    if (n < 1) throw UsageError("n must be at least 1");
    if (offset < 0) throw UsageError("offset must be non-negative");
    const auto facets = line_facets(n, offset);
    Json header;
    header["n"] = n;
    header["offset"] = offset;
    header["variables"] = variable_names(n + offset);
    std::cout << render_sets(facets, format, std::move(header), true);
    return 0;
}

int cmd_ideal(int n, const std::string& which, Format format) {
    MonomialIdeal ideal = MonomialIdeal::zero(1);
    if (which == "facet") {
        if (n < 1) throw UsageError("n must be at least 1");
        ideal = line_facet_ideal(n);
    } else if (which == "sr") {
        if (n < 1) throw UsageError("n must be at least 1");
        ideal = stanley_reisner_ideal(matching_complex(path_graph(n)));
    } else {
        if (n < 5) throw UsageError("the ideal P_n needs n >= 5");
        ideal = p_ideal(n);
    }
    Json header;
    header["n"] = n;
    header["which"] = which;
    header["variables"] = variable_names(ideal.nvars());
    std::cout << render_sets(ideal.generators(), format, std::move(header), false);
    return 0;
}

std::string text_prime(VarSet vars) {
    std::string out = "(";
    bool first = true;
    for (int v : vars.indices()) {
        out += (first ? "x" : ", x") + std::to_string(v);
        first = false;
    }
    return out + ")";
}

int cmd_decompose(int n, const std::string& source, Format format) {
    if (n < 1) throw UsageError("n must be at least 1");
    const bool closed = source != "brute-force";
    const bool brute = source != "closed-form";

    const auto family = omega(n);
    std::vector<VarSet> computed;
    if (brute)
        for (const auto& p : irreducible_decomposition(line_facet_ideal(n))) computed.push_back(p.vars);
    const bool equal = !(closed && brute) || family.vertex_sets() == computed;

    if (format == Format::json) {
        Json out;
        out["n"] = n;
        out["source"] = source;
        out["variables"] = variable_names(n);
        if (closed) {
            Json members = Json::array();
            for (const auto& m : family.members) members.push_back(to_json(m));
            out["closed_form"] = std::move(members);
        }
        if (brute) out["brute_force"] = to_json(computed);
        if (closed && brute) out["equal"] = equal;
        std::cout << dump(out);
    } else if (format == Format::csv) {
        std::cout << "source,kind,monomial,vars\n";
        auto row = [](const char* src, const std::string& kind, VarSet v) {
            std::cout << src << ',' << kind << ',' << to_monomial_string(v) << ',';
            const auto idx = v.indices();
            for (std::size_t k = 0; k < idx.size(); ++k) std::cout << (k ? " " : "") << idx[k];
            std::cout << '\n';
        };
        if (closed)
            for (const auto& m : family.members) row("closed-form", m.label(), m.vars);
        if (brute)
            for (VarSet v : computed) row("brute-force", "", v);
    } else {
        if (closed) {
            if (brute) std::cout << "closed form:\n";
            for (const auto& m : family.members) std::cout << m.label() << ' ' << text_prime(m.vars) << '\n';
        }
        if (brute) {
            if (closed) std::cout << "brute force:\n";
            for (VarSet v : computed) std::cout << text_prime(v) << '\n';
        }
        if (closed && brute)
            std::cout << (equal ? "equal" : "NOT equal") << ", " << family.members.size() << " vs " << computed.size()
                      << " components\n";
    }
    return equal ? 0 : 1;
}

int cmd_invariants(int n, const std::string& method, const std::string& field_name, unsigned jobs, int max_nvars,
                   bool allow_large, Format format) {
    if (n < 1) throw UsageError("n must be at least 1");
    const Field field = Field::parse(field_name);
    InvariantReport report;
    if (method == "closed-form") {
        report = closed_form_invariants(n);
        report.field = field;
    } else {
        if (n > max_nvars && !allow_large)
            throw UsageError("n = " + std::to_string(n) + " exceeds the variable limit " + std::to_string(max_nvars) +
                             "; pass --allow-large to override");
        report = hochster_invariants(line_facet_ideal(n), {field, jobs});
        report.n = n;
        if (report.height != reference_height(n)) report.flags = closed_form_invariants(n).flags;
    }

    if (format == Format::json) {
        std::cout << dump(to_json(report));
    } else if (format == Format::csv) {
        std::cout << "invariant,value\n"
                  << "pd," << report.pd << "\nreg," << report.reg << "\ndepth," << report.depth << "\nheight,"
                  << report.height << "\nbight," << report.bight << '\n';
    } else {
        std::cout << "F(L_" << n << ") in " << report.nvars << " variables, source " << to_string(report.source)
                  << ", field " << report.field.name() << '\n'
                  << "pd     " << report.pd << '\n'
                  << "reg    " << report.reg << '\n'
                  << "depth  " << report.depth << '\n'
                  << "height " << report.height << '\n'
                  << "bight  " << report.bight << '\n';
        for (const auto& f : report.flags)
            std::cout << "flag: " << f.invariant << " is " << f.reported_value << ", reference table says "
                      << f.reference_value << " (" << f.note << ")\n";
        if (report.betti)
            for (const auto& [key, beta] : report.betti->entries())
                std::cout << "beta_{" << key.first << "," << key.second << "} = " << beta << '\n';
    }
    return 0;
}

void print_verify_text(const VerificationReport& report) {
    for (const auto& c : report.checks) {
        std::size_t pass = 0;
        std::size_t fail = 0;
        std::size_t flagged = 0;
        for (const auto& r : c.results) {
            pass += r.status == Status::pass;
            fail += r.status == Status::fail;
            flagged += r.status == Status::flagged;
        }
        std::cout << c.name << " n=" << c.n_first << ".." << c.n_last << ": " << pass << " pass, " << fail
                  << " fail, " << flagged << " flagged\n";
        if (!c.note.empty()) std::cout << "  note: " << c.note << '\n';
        for (const auto& r : c.results) {
            for (const auto& m : r.mismatches)
                std::cout << "  n=" << r.n << " " << m.quantity << ": expected " << m.expected.dump() << ", computed "
                          << m.computed.dump() << '\n';
            for (const auto& f : r.flags)
                std::cout << "  n=" << r.n << " flag " << f.invariant << ": reported " << f.reported_value
                          << ", reference " << f.reference_value << '\n';
            if (r.seconds) std::cout << "  n=" << r.n << " " << *r.seconds << " s\n";
        }
    }
    std::cout << (report.exit_code() == 0 ? "status: pass" : "status: FAIL") << '\n';
}

int cmd_verify(VerifyOptions options, Format format) {
    if (options.max_n < 1) throw UsageError("max-n must be at least 1");
    const auto report = run_verify(options);
    if (format == Format::json) {
        std::cout << dump(to_json(report));
    } else if (format == Format::csv) {
        std::cout << "check,n,status\n";
        for (const auto& c : report.checks)
            for (const auto& r : c.results) std::cout << c.name << ',' << r.n << ',' << to_string(r.status) << '\n';
    } else {
        print_verify_text(report);
    }
    return report.exit_code();
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Facet ideals of matching complexes of paths"};
    app.require_subcommand(1);

    int n = 0;
    int offset = 0;
    std::string format = "text";

    auto* facets = app.add_subcommand("facets", "Facets of the matching complex of the path with n edges");
    facets->add_option("n", n, "Number of edges")->required();
    facets->add_option("--offset", offset, "Shift every variable index");
    add_format(facets, format);

    std::string which = "facet";
    auto* ideal = app.add_subcommand("ideal", "Generators of F(L_n), its Stanley-Reisner ideal, or P_n");
    ideal->add_option("n", n, "Number of edges")->required();
    ideal->add_option("--which", which, "facet, sr or p")->check(CLI::IsMember({"facet", "sr", "p"}));
    add_format(ideal, format);

    std::string source = "closed-form";
    auto* decompose = app.add_subcommand("decompose", "Minimal primes of F(L_n)");
    decompose->add_option("n", n, "Number of edges")->required();
    decompose->add_option("--source", source, "closed-form, brute-force or both")
        ->check(CLI::IsMember({"closed-form", "brute-force", "both"}));
    add_format(decompose, format);

    std::string method = "closed-form";
    std::string field = "QQ";
    unsigned jobs = 0;
    int max_nvars = 12;
    bool allow_large = false;
    auto* invariants = app.add_subcommand("invariants", "pd, reg, depth, height and bight of F(L_n)");
    invariants->add_option("n", n, "Number of edges")->required();
    invariants->add_option("--method", method, "closed-form or hochster")
        ->check(CLI::IsMember({"closed-form", "hochster"}));
    invariants->add_option("--field", field, "QQ or a prime characteristic");
    invariants->add_option("--jobs", jobs, "Worker threads, 0 for all cores");
    invariants->add_option("--max-nvars", max_nvars, "Largest n accepted by the hochster method");
    invariants->add_flag("--allow-large", allow_large, "Ignore --max-nvars");
    add_format(invariants, format);

    VerifyOptions verify_options;
    std::string checks = "all";
    auto* verify = app.add_subcommand("verify", "Check closed forms against direct computation for n = 1..max-n");
    verify->add_option("--max-n", verify_options.max_n, "Largest path length");
    verify->add_option("--checks", checks, "Comma separated: " + [] {
        std::string all;
        for (const auto& c : kAllChecks) all += (all.empty() ? "" : ",") + c;
        return all;
    }());
    verify->add_option("--field", field, "QQ or a prime characteristic");
    verify->add_option("--jobs", jobs, "Worker threads, 0 for all cores");
    verify->add_option("--max-nvars", verify_options.max_nvars, "Betti-table checks stop at this n");
    verify->add_flag("--strict", verify_options.strict, "Count flagged discrepancies as failures");
    verify->add_flag("--timings", verify_options.timings, "Record wall time per n");
    add_format(verify, format);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : kUsageError;
    }

    try {
        const Format fmt = parse_format(format);
        if (facets->parsed()) return cmd_facets(n, offset, fmt);
        if (ideal->parsed()) return cmd_ideal(n, which, fmt);
        if (decompose->parsed()) return cmd_decompose(n, source, fmt);
        if (invariants->parsed())
            return cmd_invariants(n, method, field, jobs, max_nvars, allow_large, fmt);
        verify_options.checks = parse_checks(checks);
        verify_options.field = Field::parse(field);
        verify_options.jobs = jobs;
        return cmd_verify(verify_options, fmt);
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kUsageError;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kUsageError;
    } catch (const std::out_of_range& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kUsageError;
    } catch (const std::domain_error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kUsageError;
    }
}
