#ifndef CONJUCODE_ENUMERATE_HPP
#define CONJUCODE_ENUMERATE_HPP

#include <cstddef>
#include <cstdint>
#include <string>

#include "conjucode/binmatrix.hpp"

namespace conjucode {

enum class DistanceStatus {
    exact,         ///< every nonzero codeword was enumerated
    upper_bound,   ///< minimum over random codewords only
    not_computed,  ///< dimension above the enumeration bound, no sampling requested
    empty_code,    ///< the zero code has no nonzero codeword
};

struct DistanceResult {
    DistanceStatus status = DistanceStatus::not_computed;
    std::size_t value = 0;
    std::size_t dim = 0;
    std::size_t max_dim = 0;
    std::uint64_t samples = 0;

    bool exact() const noexcept { return status == DistanceStatus::exact; }
};

/// "4", "<=6 (consistent-with, 1000000 samples)", "not computed (dim 45 > 24)", "empty code".
std::string to_string(const DistanceResult& r);

/// Default enumeration bound on the dimension.
inline constexpr std::size_t kDefaultMaxDim = 24;

/// Minimum weight of a nonzero vector in the row space of `basis` (rows need
/// not be independent). Walks all 2^rank combinations in Gray-code order,
/// split over `threads` workers (0 = hardware concurrency). The result does not
/// depend on the worker count. Throws BoundExceeded for rank > 62, and
/// std::invalid_argument for the zero space.
std::size_t min_weight_exhaustive(const BinMatrix& basis, unsigned threads = 0);

/// Minimum weight over the basis rows and `samples` uniformly random nonzero
/// combinations drawn from a seeded generator. An upper bound on the true
/// minimum.
std::size_t sampled_min_weight(const BinMatrix& basis, std::uint64_t samples, std::uint64_t seed);

/// Exact when rank <= max_dim; otherwise an upper bound from `samples` random
/// codewords, or not_computed when samples == 0.
DistanceResult min_distance_of_span(const BinMatrix& basis, std::size_t max_dim, std::uint64_t samples = 0,
                                    std::uint64_t seed = 1);

}  // namespace conjucode

#endif  // CONJUCODE_ENUMERATE_HPP
