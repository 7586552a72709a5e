#include "lineideal/betti.hpp"

#include <algorithm>
#include <atomic>
#include <stdexcept>
#include <thread>

#include "lineideal/complexes.hpp"

namespace lineideal {

namespace {

using Entries = std::map<BettiTable::Key, std::uint64_t>;

void add_entries(Entries& into, const Entries& from) {
    for (const auto& [key, value] : from) into[key] += value;
}

// Contribution of the subsets W with mask in [begin, end) to the S/I table.
void sweep_subsets(const SimplicialComplex& complex, Field field, std::uint64_t begin, std::uint64_t end,
                   Entries& out) {
    for (std::uint64_t mask = begin; mask < end; ++mask) {
        const VarSet subset = VarSet::from_bits(mask);
        const SimplicialComplex restricted = induced_subcomplex(complex, subset);
        if (is_cone(restricted)) continue;
        const HomologyRanks h = reduced_homology_ranks(restricted, field);
        const int j = subset.size();
        for (int d = -1; d <= h.top_dimension(); ++d) {
            const std::uint64_t r = h.rank(d);
            if (r != 0) out[{j - d - 1, j}] += r;
        }
    }
}

} // namespace

BettiTable::BettiTable(int nvars, Field field, std::map<Key, std::uint64_t> ideal_entries)
    : nvars_(nvars), field_(field), entries_(std::move(ideal_entries)) {
    std::erase_if(entries_, [](const auto& kv) { return kv.second == 0; });
}

BettiTable BettiTable::from_quotient(int nvars, Field field, const std::map<Key, std::uint64_t>& quotient_entries) {
    std::map<Key, std::uint64_t> ideal;
    for (const auto& [key, value] : quotient_entries)
        if (key.first >= 1) ideal[{key.first - 1, key.second}] = value;
    return BettiTable(nvars, field, std::move(ideal));
}

std::uint64_t BettiTable::at(int i, int j) const {
    const auto it = entries_.find({i, j});
    return it == entries_.end() ? 0 : it->second;
}

std::map<BettiTable::Key, std::uint64_t> BettiTable::quotient_entries() const {
    std::map<Key, std::uint64_t> out;
    out[{0, 0}] = 1;
    for (const auto& [key, value] : entries_) out[{key.first + 1, key.second}] = value;
    return out;
}

int BettiTable::projective_dimension() const {
    if (entries_.empty()) throw std::domain_error("empty Betti table");
    int best = 0;
    for (const auto& [key, value] : entries_) best = std::max(best, key.first);
    return best;
}

int BettiTable::regularity() const {
    if (entries_.empty()) throw std::domain_error("empty Betti table");
    int best = entries_.begin()->first.second - entries_.begin()->first.first;
    for (const auto& [key, value] : entries_) best = std::max(best, key.second - key.first);
    return best;
}

BettiTable graded_betti(const MonomialIdeal& ideal, const BettiOptions& options) {
    if (!ideal.is_proper()) throw std::domain_error("graded Betti numbers need a proper nonzero ideal");
    if (ideal.nvars() > 30) throw std::domain_error("the subset sweep is limited to 30 variables");

    const SimplicialComplex complex = sr_complex_of_ideal(ideal);
    const std::uint64_t total = std::uint64_t{1} << ideal.nvars();

    unsigned jobs = options.jobs != 0 ? options.jobs : std::max(1U, std::thread::hardware_concurrency());
    jobs = static_cast<unsigned>(std::min<std::uint64_t>(jobs, total));

    // Fixed-size chunks handed out dynamically; the reduction is a sum, so
    // the result does not depend on which worker handled which chunk.
    constexpr std::uint64_t kChunk = 64;
    std::atomic<std::uint64_t> next{0};
    std::vector<Entries> partial(jobs);
    auto worker = [&](unsigned w) {
        while (true) {
            const std::uint64_t begin = next.fetch_add(kChunk);
            if (begin >= total) break;
            sweep_subsets(complex, options.field, begin, std::min(total, begin + kChunk), partial[w]);
        }
    };
    if (jobs == 1) {
        worker(0);
    } else {
        std::vector<std::jthread> threads;
        threads.reserve(jobs);
        for (unsigned w = 0; w < jobs; ++w) threads.emplace_back(worker, w);
    }

    Entries quotient;
    for (const Entries& p : partial) add_entries(quotient, p);
    return BettiTable::from_quotient(ideal.nvars(), options.field, quotient);
}

int projective_dimension(const BettiTable& table) { return table.projective_dimension(); }

int regularity(const BettiTable& table) { return table.regularity(); }

int depth(const MonomialIdeal& ideal, const BettiTable& table) {
    return ideal.nvars() - table.projective_dimension();
}

int depth(const MonomialIdeal& ideal, const BettiOptions& options) {
    return depth(ideal, graded_betti(ideal, options));
}

int height(const MonomialIdeal& ideal) {
    const auto primes = irreducible_decomposition(ideal);
    return std::min_element(primes.begin(), primes.end(), [](const auto& a, const auto& b) {
               return a.height() < b.height();
           })->height();
}

int bight(const MonomialIdeal& ideal) {
    const auto primes = irreducible_decomposition(ideal);
    return std::max_element(primes.begin(), primes.end(), [](const auto& a, const auto& b) {
               return a.height() < b.height();
           })->height();
}

std::string to_string(InvariantSource source) {
    return source == InvariantSource::closed_form ? "closed-form" : "hochster";
}

InvariantReport hochster_invariants(const MonomialIdeal& ideal, const BettiOptions& options) {
    BettiTable table = graded_betti(ideal, options);
    InvariantReport report;
    report.nvars = ideal.nvars();
    report.pd = table.projective_dimension();
    report.reg = table.regularity();
    report.depth = depth(ideal, table);
    report.height = height(ideal);
    report.bight = bight(ideal);
    report.source = InvariantSource::hochster;
    report.field = options.field;
    report.betti = std::move(table);
    return report;
}

} // namespace lineideal
