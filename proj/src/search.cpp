#include "conjucode/search.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

#include "conjucode/errors.hpp"

namespace conjucode {

namespace {

// Sort key for a distance: exact values first by size, unknown ones last.
long distance_rank(const DistanceResult& d) { return d.exact() ? static_cast<long>(d.value) : -1; }

}  // namespace

std::vector<SearchRecord> search(const SearchOptions& options) {
    if (options.n == 0) throw std::invalid_argument("search: n must be positive");
    if (2 * options.n > kMaxSearchLength)
        throw BoundExceeded("search: 2n = " + std::to_string(2 * options.n) + " exceeds " +
                            std::to_string(kMaxSearchLength));
    const std::size_t n = options.n;
    std::vector<SearchRecord> out;
    std::map<BinPoly, DistanceResult> distances;  // many g share one trace code
    for (const BinPoly& g : divisors_of_xn_plus_1(2 * n)) {
        SearchRecord rec;
        rec.g = g;
        const AccCode code = acc_from_gen_poly(g, n);
        rec.acc_dim = code.dim();
        rec.trace = trace_code_of(code);
        if (rec.trace.dim() < options.min_k) continue;
        auto it = distances.find(rec.trace.generator());
        if (it == distances.end())
            it = distances.emplace(rec.trace.generator(), min_distance(rec.trace, options.max_dim)).first;
        rec.d = it->second;
        if (options.min_d > 0 && (!rec.d.exact() || rec.d.value < options.min_d)) continue;
        rec.eaqec = eaqec_from_trace(rec.trace, rec.d);
        if (options.maximal_only && !is_maximal_entanglement(rec.eaqec)) continue;
        out.push_back(std::move(rec));
    }
    std::sort(out.begin(), out.end(), [](const SearchRecord& a, const SearchRecord& b) {
        if (auto da = distance_rank(a.d), db = distance_rank(b.d); da != db) return da > db;
        if (a.trace.dim() != b.trace.dim()) return a.trace.dim() > b.trace.dim();
        return a.g < b.g;
    });
    return out;
}

Record to_record(const SearchRecord& r) {
    const std::size_t n = r.trace.n();
    Record rec;
    rec.emplace_back("n", std::to_string(n));
    rec.emplace_back("g", to_expanded_string(r.g));
    rec.emplace_back("acc_dim", std::to_string(r.acc_dim));
    rec.emplace_back("r", to_expanded_string(r.trace.generator()));
    rec.emplace_back("trace_dim", std::to_string(r.trace.dim()));
    append_distance(rec, "trace", r.d);
    rec.emplace_back("eaqec", format_brackets(r.eaqec));
    rec.emplace_back("maximal", is_maximal_entanglement(r.eaqec) ? "true" : "false");
    return rec;
}

}  // namespace conjucode
