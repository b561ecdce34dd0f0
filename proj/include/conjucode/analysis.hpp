#ifndef CONJUCODE_ANALYSIS_HPP
#define CONJUCODE_ANALYSIS_HPP

#include <cstddef>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "conjucode/acc.hpp"
#include "conjucode/descriptor.hpp"
#include "conjucode/eaqec.hpp"
#include "conjucode/tracecode.hpp"

namespace conjucode {

struct AnalysisOptions {
    std::size_t max_dim = kDefaultMaxDim;
    /// Random codewords drawn when a dimension exceeds max_dim; 0 skips the distance.
    std::uint64_t samples = 0;
};

struct Analysis {
    Descriptor source;
    AccCode code;
    DualityClass duality;
    std::size_t hull_dim = 0;       ///< 2n - deg lcm(g, h*)
    std::size_t hull_dim_rank = 0;  ///< k - rank(G (.)Tr G^T)
    std::size_t gram_rank = 0;
    bool acd = false;
    AcpRankCheck acp;
    TraceAnalysis trace;
    CyclicCode trace_code = CyclicCode::full(1);
    CyclicCode trace_dual_code = CyclicCode::full(1);
    std::size_t trace_hull_dim = 0;
    bool tr_subset = false;
    DistanceResult acc_d;
    DistanceResult trace_d;
    EaqecParams eaqec;
};

/// Throws DivisibilityError for an invalid generator, std::logic_error if the
/// two hull routes disagree.
Analysis analyze(const Descriptor& d, const AnalysisOptions& options = {});

/// Ordered key/value fields; every value is free of blanks.
using Record = std::vector<std::pair<std::string, std::string>>;

Record to_record(const Analysis& a);
/// Fields of one distance: <prefix>_d and <prefix>_d_status.
void append_distance(Record& rec, const std::string& prefix, const DistanceResult& d);
/// "key=value key=value ...", one line.
std::string render_machine(const Record& rec);
/// Multi-line report for people.
std::string render_human(const Analysis& a);

}  // namespace conjucode

#endif  // CONJUCODE_ANALYSIS_HPP
