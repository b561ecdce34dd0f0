#ifndef CONJUCODE_EAQEC_HPP
#define CONJUCODE_EAQEC_HPP

#include <cstddef>
#include <string>

#include "conjucode/binmatrix.hpp"
#include "conjucode/enumerate.hpp"
#include "conjucode/tracecode.hpp"

namespace conjucode {

/// Parameters [[n, k, d; c]] of an entanglement-assisted quantum code.
struct EaqecParams {
    std::size_t n = 0;
    std::size_t k = 0;
    DistanceResult d;
    std::size_t c = 0;  ///< ebits

    double rate() const { return static_cast<double>(k) / static_cast<double>(n); }
    double net_rate() const { return (static_cast<double>(k) - static_cast<double>(c)) / static_cast<double>(n); }
};

/// Rows x^i h* for i < n - dim; empty for the full space.
BinMatrix parity_matrix(const CyclicCode& code);
/// rank(H1 H2^T). Throws std::invalid_argument when column counts differ.
std::size_t ebit_count(const BinMatrix& h1, const BinMatrix& h2);
/// dim(C intersect C^perp).
std::size_t hull_dim(const CyclicCode& code);

/// [[n, dim - hull, d; rank(H H^T)]]. Throws std::logic_error if
/// rank(H H^T) differs from (n - dim) - hull.
EaqecParams eaqec_from_trace(const CyclicCode& code, const DistanceResult& d);
/// [[n, k1 + k2 - n + c, min(d1, d2); c]] with c = rank(H1 H2^T).
/// Throws std::invalid_argument on a length mismatch.
EaqecParams eaqec_wilde_brun(const CyclicCode& c1, const DistanceResult& d1, const CyclicCode& c2,
                             const DistanceResult& d2);
/// c = n - k.
bool is_maximal_entanglement(const EaqecParams& p);

/// "[[3,2,2;1]]"; an unknown distance prints as "?", a sampled one as "<=d".
std::string format_brackets(const EaqecParams& p);
/// "[[n,k,d;c]] rate=<k/n> net=<(k-c)/n> maximal=<bool>".
std::string format_eaqec(const EaqecParams& p);

}  // namespace conjucode

#endif  // CONJUCODE_EAQEC_HPP
