#include "conjucode/enumerate.hpp"

#include <algorithm>
#include <array>
#include <atomic>
#include <bit>
#include <limits>
#include <random>
#include <stdexcept>
#include <thread>
#include <vector>

#include "conjucode/errors.hpp"

namespace conjucode {

namespace {

template <std::size_t W>
using Word = std::array<std::uint64_t, W>;

template <std::size_t W>
std::size_t popcount(const Word<W>& w) {
    std::size_t total = 0;
    for (auto x : w) total += static_cast<std::size_t>(std::popcount(x));
    return total;
}

template <std::size_t W>
void xor_into(Word<W>& acc, const Word<W>& v) {
    for (std::size_t i = 0; i < W; ++i) acc[i] ^= v[i];
}

// Rows below `split` are walked by Gray code inside a chunk; rows at or above
// it are fixed per chunk by the chunk index.
template <std::size_t W>
std::size_t enumerate_packed(const BinMatrix& basis, unsigned threads) {
    const std::size_t k = basis.rows();
    std::vector<Word<W>> rows(k);
    for (std::size_t r = 0; r < k; ++r) {
        auto words = basis.row(r).words();
        for (std::size_t i = 0; i < W; ++i) rows[r][i] = i < words.size() ? words[i] : 0;
    }
    const std::size_t high = std::min<std::size_t>(k, 8);
    const std::size_t split = k - high;
    const std::uint64_t chunks = std::uint64_t{1} << high;
    const std::uint64_t steps = std::uint64_t{1} << split;

    std::vector<std::size_t> best(chunks, std::numeric_limits<std::size_t>::max());
    std::atomic<std::uint64_t> next{0};
    auto worker = [&] {
        for (std::uint64_t c = next++; c < chunks; c = next++) {
            Word<W> acc{};
            for (std::size_t b = 0; b < high; ++b)
                if ((c >> b) & 1U) xor_into(acc, rows[split + b]);
            std::size_t m = std::numeric_limits<std::size_t>::max();
            // The all-zero combination only occurs in chunk 0 at step 0.
            if (c != 0) m = popcount(acc);
            for (std::uint64_t i = 1; i < steps; ++i) {
                xor_into(acc, rows[static_cast<std::size_t>(std::countr_zero(i))]);
                m = std::min(m, popcount(acc));
            }
            best[c] = m;
        }
    };
    if (threads == 0) threads = std::max(1U, std::thread::hardware_concurrency());
    threads = static_cast<unsigned>(std::min<std::uint64_t>(threads, chunks));
    std::vector<std::thread> pool;
    for (unsigned t = 1; t < threads; ++t) pool.emplace_back(worker);
    worker();
    for (auto& t : pool) t.join();
    return *std::min_element(best.begin(), best.end());
}

std::size_t enumerate_generic(const BinMatrix& basis) {
    const std::size_t k = basis.rows();
    BitVector acc(basis.cols());
    std::size_t m = std::numeric_limits<std::size_t>::max();
    for (std::uint64_t i = 1; i < (std::uint64_t{1} << k); ++i) {
        acc ^= basis.row(static_cast<std::size_t>(std::countr_zero(i)));
        m = std::min(m, acc.weight());
    }
    return m;
}

}  // namespace

std::string to_string(const DistanceResult& r) {
    switch (r.status) {
        case DistanceStatus::exact: return std::to_string(r.value);
        case DistanceStatus::upper_bound:
            return "<=" + std::to_string(r.value) + " (consistent-with, " + std::to_string(r.samples) + " samples)";
        case DistanceStatus::empty_code: return "empty code";
        case DistanceStatus::not_computed:
            break;
    }
    return "not computed (dim " + std::to_string(r.dim) + " > " + std::to_string(r.max_dim) + ")";
}

std::size_t min_weight_exhaustive(const BinMatrix& input, unsigned threads) {
    const BinMatrix basis = row_basis(input);
    if (basis.rows() == 0) throw std::invalid_argument("min_weight_exhaustive: zero code");
    if (basis.rows() > 62) throw BoundExceeded("min_weight_exhaustive: dimension above 62");
    switch (BitVector::word_count(basis.cols())) {
        case 1: return enumerate_packed<1>(basis, threads);
        case 2: return enumerate_packed<2>(basis, threads);
        case 3: return enumerate_packed<3>(basis, threads);
        case 4: return enumerate_packed<4>(basis, threads);
        default: return enumerate_generic(basis);
    }
}

std::size_t sampled_min_weight(const BinMatrix& input, std::uint64_t samples, std::uint64_t seed) {
    const BinMatrix basis = row_basis(input);
    if (basis.rows() == 0) throw std::invalid_argument("sampled_min_weight: zero code");
    std::size_t m = std::numeric_limits<std::size_t>::max();
    for (const auto& r : basis.row_vectors()) m = std::min(m, r.weight());
    std::mt19937_64 rng(seed);
    BitVector acc(basis.cols());
    for (std::uint64_t s = 0; s < samples; ++s) {
        acc = BitVector(basis.cols());
        bool any = false;
        std::uint64_t bits = 0;
        for (std::size_t r = 0; r < basis.rows(); ++r) {
            if (r % 64 == 0) bits = rng();
            if ((bits >> (r % 64)) & 1U) {
                acc ^= basis.row(r);
                any = true;
            }
        }
        if (any) m = std::min(m, acc.weight());
    }
    return m;
}

DistanceResult min_distance_of_span(const BinMatrix& basis, std::size_t max_dim, std::uint64_t samples,
                                    std::uint64_t seed) {
    DistanceResult r;
    r.dim = mat_rank(basis);
    r.max_dim = max_dim;
    if (r.dim == 0) {
        r.status = DistanceStatus::empty_code;
    } else if (r.dim <= max_dim) {
        r.status = DistanceStatus::exact;
        r.value = min_weight_exhaustive(basis);
    } else if (samples > 0) {
        r.status = DistanceStatus::upper_bound;
        r.samples = samples;
        r.value = sampled_min_weight(basis, samples, seed);
    }
    return r;
}

}  // namespace conjucode
