#ifndef CONJUCODE_SEARCH_HPP
#define CONJUCODE_SEARCH_HPP

#include <cstddef>
#include <string>
#include <vector>

#include "conjucode/analysis.hpp"
#include "conjucode/eaqec.hpp"
#include "conjucode/tracecode.hpp"

namespace conjucode {

/// Largest 2n a search accepts.
inline constexpr std::size_t kMaxSearchLength = 128;

struct SearchOptions {
    std::size_t n = 0;
    bool maximal_only = false;
    std::size_t min_d = 0;  ///< on the trace-code distance; needs an exact value when > 0
    std::size_t min_k = 0;  ///< on the trace-code dimension
    std::size_t max_dim = 16;
};

struct SearchRecord {
    BinPoly g;
    std::size_t acc_dim = 0;
    CyclicCode trace = CyclicCode::full(1);
    DistanceResult d;
    EaqecParams eaqec;
};

/// One record per divisor g of x^{2n}+1 passing the filters, sorted by trace
/// distance (descending; unknown last), trace dimension (descending), then g.
/// Throws BoundExceeded when 2n > kMaxSearchLength or x^{2n}+1 has more than
/// kMaxDivisors divisors, std::invalid_argument for n = 0.
std::vector<SearchRecord> search(const SearchOptions& options);

Record to_record(const SearchRecord& r);

}  // namespace conjucode

#endif  // CONJUCODE_SEARCH_HPP
