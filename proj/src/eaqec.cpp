#include "conjucode/eaqec.hpp"

#include <algorithm>
#include <cstdio>
#include <stdexcept>

namespace conjucode {

BinMatrix parity_matrix(const CyclicCode& code) { return code.dual().generator_matrix(); }

std::size_t ebit_count(const BinMatrix& h1, const BinMatrix& h2) {
    if (h1.cols() != h2.cols()) throw std::invalid_argument("ebit_count: column counts differ");
    return mat_rank(multiply_transposed(h1, h2));
}

std::size_t hull_dim(const CyclicCode& code) { return cyclic_hull_dim(code); }

EaqecParams eaqec_from_trace(const CyclicCode& code, const DistanceResult& d) {
    const std::size_t hull = hull_dim(code);
    const BinMatrix h = parity_matrix(code);
    EaqecParams p;
    p.n = code.n();
    p.k = code.dim() - hull;
    p.d = d;
    p.c = ebit_count(h, h);
    if (p.c != (code.n() - code.dim()) - hull)
        throw std::logic_error("eaqec_from_trace: rank(HH^T) disagrees with dim(C^perp) - hull");
    return p;
}

namespace {

DistanceResult min_of(const DistanceResult& a, const DistanceResult& b) {
    const bool usable_a = a.status == DistanceStatus::exact || a.status == DistanceStatus::upper_bound;
    const bool usable_b = b.status == DistanceStatus::exact || b.status == DistanceStatus::upper_bound;
    if (!usable_a || !usable_b) return a.status == DistanceStatus::exact ? b : a;
    DistanceResult out = a.value <= b.value ? a : b;
    // The minimum of an exact value and a bound is only a bound.
    if (a.status != b.status) out.status = DistanceStatus::upper_bound;
    out.samples = std::max(a.samples, b.samples);
    return out;
}

}  // namespace

EaqecParams eaqec_wilde_brun(const CyclicCode& c1, const DistanceResult& d1, const CyclicCode& c2,
                             const DistanceResult& d2) {
    if (c1.n() != c2.n()) throw std::invalid_argument("eaqec_wilde_brun: lengths differ");
    EaqecParams p;
    p.n = c1.n();
    p.c = ebit_count(parity_matrix(c1), parity_matrix(c2));
    p.k = c1.dim() + c2.dim() + p.c - p.n;
    p.d = min_of(d1, d2);
    return p;
}

bool is_maximal_entanglement(const EaqecParams& p) { return p.c == p.n - p.k; }

std::string format_brackets(const EaqecParams& p) {
    std::string d;
    switch (p.d.status) {
        case DistanceStatus::exact: d = std::to_string(p.d.value); break;
        case DistanceStatus::upper_bound: d = "<=" + std::to_string(p.d.value); break;
        default: d = "?"; break;
    }
    return "[[" + std::to_string(p.n) + "," + std::to_string(p.k) + "," + d + ";" + std::to_string(p.c) + "]]";
}

std::string format_eaqec(const EaqecParams& p) {
    char buf[96];
    std::snprintf(buf, sizeof buf, " rate=%.6g net=%.6g maximal=%s", p.rate(), p.net_rate(),
                  is_maximal_entanglement(p) ? "true" : "false");
    return format_brackets(p) + buf;
}

}  // namespace conjucode
