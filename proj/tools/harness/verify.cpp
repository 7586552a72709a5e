#include "harness/verify.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <stdexcept>

#include "lineideal/complexes.hpp"

namespace lineideal::harness {

namespace {

using CheckFn = std::function<void(int n, NResult&)>;

struct Context {
    const VerifyOptions& options;
    BettiOptions betti() const { return {options.field, options.jobs}; }
};

template <typename T>
void expect_equal(NResult& r, std::string quantity, const T& expected, const T& computed) {
    if (expected == computed) return;
    r.mismatches.push_back({std::move(quantity), Json(expected), Json(computed)});
}

void expect_equal(NResult& r, std::string quantity, const std::vector<VarSet>& expected,
                  const std::vector<VarSet>& computed) {
    if (expected == computed) return;
    r.mismatches.push_back({std::move(quantity), to_json(expected), to_json(computed)});
}

void expect_equal(NResult& r, std::string quantity, const MonomialIdeal& expected, const MonomialIdeal& computed) {
    if (expected == computed) return;
    r.mismatches.push_back({std::move(quantity), to_json(expected), to_json(computed)});
}

MonomialIdeal path_edge_ideal(int vertices) {
    std::vector<Monomial> edges;
    for (int i = 1; i < vertices; ++i) edges.push_back(Monomial{i, i + 1});
    return MonomialIdeal::generated_by(vertices, std::move(edges));
}

void check_facets(int n, NResult& r) {
    const auto complex = matching_complex(path_graph(n));
    const std::vector<VarSet> enumerated(complex.facets().begin(), complex.facets().end());
    expect_equal(r, "facets", enumerated, line_facets(n));
    expect_equal(r, "facet ideal", facet_ideal(complex), line_facet_ideal(n));
}

void check_decomposition(int n, NResult& r) {
    std::vector<VarSet> brute;
    for (const auto& p : irreducible_decomposition(line_facet_ideal(n))) brute.push_back(p.vars);
    expect_equal(r, "minimal primes", brute, omega(n).vertex_sets());
}

void check_recursion(int n, NResult& r) {
    const auto f = line_facet_ideal(n);
    const auto s = recursion_split(n);
    expect_equal(r, "J + K", f, sum(s.j, s.k));
    expect_equal(r, "generator count", f.size(), s.j.size() + s.k.size());
    if (n < 5) return;
    expect_equal(r, "J meet K", scale(Monomial{1, 2}, *s.p), intersect(s.j, s.k));
    expect_equal(r, "M + N", *s.p, sum(*s.m, *s.n_part));
}

void check_p_ideal(const Context& ctx, int n, NResult& r) {
    const auto [p, d] = residue_mod3(n);
    const auto t = graded_betti(p_ideal(n), ctx.betti());
    expect_equal(r, "reg", d == 2 ? 2 * p : 2 * p - 1, t.regularity());
    const int bound = d == 2 ? p : p - 1;
    if (t.projective_dimension() > bound)
        r.mismatches.push_back({"pd upper bound", Json(bound), Json(t.projective_dimension())});
}

void check_invariants(const Context& ctx, int n, NResult& r) {
    const auto closed = closed_form_invariants(n);
    const auto computed = hochster_invariants(line_facet_ideal(n), ctx.betti());
    expect_equal(r, "pd", closed.pd, computed.pd);
    expect_equal(r, "reg", closed.reg, computed.reg);
    expect_equal(r, "depth", closed.depth, computed.depth);
    expect_equal(r, "height", closed.height, computed.height);
    expect_equal(r, "bight", closed.bight, computed.bight);
    if (computed.height != reference_height(n)) r.flags = closed.flags;
}

void check_sr_ideal(const Context& ctx, int n, NResult& r) {
    const auto sr = stanley_reisner_ideal(matching_complex(path_graph(n)));
    expect_equal(r, "edge ideal", path_edge_ideal(n), sr);
    const auto [p, d] = residue_mod3(n);
    const auto t = graded_betti(sr, ctx.betti());
    expect_equal(r, "pd", d == 2 ? 2 * p : 2 * p - 1, t.projective_dimension());
    expect_equal(r, "reg", d == 2 ? p + 2 : p + 1, t.regularity());
}

// Scaling, disjoint-sum and big-height relations on the pieces of F(L_n).
void check_lemmas(const Context& ctx, int n, NResult& r) {
    const auto f = line_facet_ideal(n);
    const auto tf = graded_betti(f, ctx.betti());
    if (bight(f) > tf.projective_dimension() + 1)
        r.mismatches.push_back({"bight <= pd + 1", Json(tf.projective_dimension() + 1), Json(bight(f))});

    const auto tail2 = graded_betti(line_facet_ideal(n - 2), ctx.betti());
    const auto j = graded_betti(scale(Monomial{1}, shifted_line_facet_ideal(n - 2, 2, n)), ctx.betti());
    expect_equal(r, "pd(J)", tail2.projective_dimension(), j.projective_dimension());
    expect_equal(r, "reg(J)", tail2.regularity() + 1, j.regularity());

    const auto disjoint = sum(MonomialIdeal::generated_by(n, {Monomial{1}}), shifted_line_facet_ideal(n - 2, 2, n));
    const auto td = graded_betti(disjoint, ctx.betti());
    expect_equal(r, "pd(x1 + tail)", tail2.projective_dimension() + 1, td.projective_dimension());
    expect_equal(r, "reg(x1 + tail)", tail2.regularity(), td.regularity());

    if (n < 4) return;
    const auto tail3 = graded_betti(line_facet_ideal(n - 3), ctx.betti());
    const auto k = graded_betti(scale(Monomial{2}, shifted_line_facet_ideal(n - 3, 3, n)), ctx.betti());
    expect_equal(r, "pd(K)", tail3.projective_dimension(), k.projective_dimension());
    expect_equal(r, "reg(K)", tail3.regularity() + 1, k.regularity());
}

CheckReport run_check(const Context& ctx, const std::string& name) {
    const VerifyOptions& o = ctx.options;
    const int capped = std::min(o.max_n, o.max_nvars);
    CheckReport report{name, 1, o.max_n, {}, {}};
    CheckFn fn;
    bool uses_betti = true;

    if (name == "facets") {
        fn = check_facets;
        uses_betti = false;
    } else if (name == "decomposition") {
        fn = check_decomposition;
        uses_betti = false;
    } else if (name == "recursion") {
        report.n_first = 2;
        fn = check_recursion;
        uses_betti = false;
    } else if (name == "p-ideal") {
        report.n_first = 5;
        fn = [&](int n, NResult& r) { check_p_ideal(ctx, n, r); };
    } else if (name == "invariants") {
        fn = [&](int n, NResult& r) { check_invariants(ctx, n, r); };
    } else if (name == "sr-ideal") {
        report.n_first = 2;
        fn = [&](int n, NResult& r) { check_sr_ideal(ctx, n, r); };
    } else if (name == "lemmas") {
        report.n_first = 3;
        fn = [&](int n, NResult& r) { check_lemmas(ctx, n, r); };
    } else {
        throw std::invalid_argument("unknown check: " + name);
    }

    if (uses_betti && capped < o.max_n) {
        report.n_last = capped;
        report.note = "stopped at n = " + std::to_string(capped) + ", the Betti table variable limit";
    }

    for (int n = report.n_first; n <= report.n_last; ++n) {
        NResult r;
        r.n = n;
        const auto start = std::chrono::steady_clock::now();
        fn(n, r);
        if (o.timings)
            r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        r.status = !r.mismatches.empty() ? Status::fail : !r.flags.empty() ? Status::flagged : Status::pass;
        report.results.push_back(std::move(r));
    }
    return report;
}

} // namespace

std::vector<std::string> parse_checks(std::string_view list) {
    if (list == "all") return kAllChecks;
    std::vector<std::string> requested;
    std::size_t start = 0;
    while (start <= list.size()) {
        const std::size_t comma = std::min(list.find(',', start), list.size());
        std::string name(list.substr(start, comma - start));
        if (std::find(kAllChecks.begin(), kAllChecks.end(), name) == kAllChecks.end())
            throw std::invalid_argument("unknown check: '" + name + "'");
        requested.push_back(std::move(name));
        start = comma + 1;
    }
    // Canonical order, no repeats.
    std::vector<std::string> out;
    for (const auto& c : kAllChecks)
        if (std::find(requested.begin(), requested.end(), c) != requested.end()) out.push_back(c);
    return out;
}

std::string to_string(Status status) {
    switch (status) {
    case Status::pass: return "pass";
    case Status::fail: return "fail";
    case Status::flagged: return "flagged-discrepancy";
    }
    return "unknown";
}

std::size_t VerificationReport::count(Status status) const {
    std::size_t total = 0;
    for (const auto& c : checks)
        total += static_cast<std::size_t>(
            std::count_if(c.results.begin(), c.results.end(), [&](const NResult& r) { return r.status == status; }));
    return total;
}

int VerificationReport::exit_code() const {
    if (count(Status::fail) > 0) return 1;
    if (options.strict && count(Status::flagged) > 0) return 1;
    return 0;
}

VerificationReport run_verify(const VerifyOptions& options) {
    if (options.max_n < 1) throw std::invalid_argument("max-n must be at least 1");
    const Context ctx{options};
    VerificationReport report{options, {}};
    for (const auto& name : options.checks) report.checks.push_back(run_check(ctx, name));
    return report;
}

Json to_json(const VerificationReport& report) {
    const VerifyOptions& o = report.options;
    Json out;
    out["command"] = "verify";
    out["max_n"] = o.max_n;
    out["field"] = o.field.name();
    out["max_nvars"] = o.max_nvars;
    out["strict"] = o.strict;
    Json checks = Json::array();
    for (const auto& c : report.checks) {
        Json check;
        check["name"] = c.name;
        check["n_first"] = c.n_first;
        check["n_last"] = c.n_last;
        if (!c.note.empty()) check["note"] = c.note;
        Json results = Json::array();
        for (const auto& r : c.results) {
            Json entry;
            entry["n"] = r.n;
            entry["status"] = to_string(r.status);
            if (!r.mismatches.empty()) {
                Json ms = Json::array();
                for (const auto& m : r.mismatches)
                    ms.push_back({{"quantity", m.quantity}, {"expected", m.expected}, {"computed", m.computed}});
                entry["mismatches"] = std::move(ms);
            }
            if (!r.flags.empty()) {
                Json fs = Json::array();
                for (const auto& f : r.flags) fs.push_back(to_json(f));
                entry["flags"] = std::move(fs);
            }
            if (r.seconds) entry["seconds"] = *r.seconds;
            results.push_back(std::move(entry));
        }
        check["results"] = std::move(results);
        checks.push_back(std::move(check));
    }
    out["checks"] = std::move(checks);
    out["summary"] = {{"pass", report.count(Status::pass)},
                      {"fail", report.count(Status::fail)},
                      {"flagged", report.count(Status::flagged)},
                      {"exit_code", report.exit_code()}};
    return out;
}

} // namespace lineideal::harness
