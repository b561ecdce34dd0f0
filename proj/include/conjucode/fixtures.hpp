#ifndef CONJUCODE_FIXTURES_HPP
#define CONJUCODE_FIXTURES_HPP

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "conjucode/descriptor.hpp"

namespace conjucode {

/// fast: rows checked by default; extended: large enumerations;
/// dims_only: rows whose distances are out of exhaustive reach.
enum class Tier { fast, extended, dims_only };

std::string_view tier_name(Tier t);
/// Accepts "fast", "extended", "dims-only" and "dims_only".
std::optional<Tier> parse_tier(std::string_view s);

struct FixtureCase {
    std::string id;
    Descriptor input;
    Tier tier = Tier::fast;
    /// Expected record fields, compared against to_record().
    std::map<std::string, std::string> expected;
    std::string ref;
    std::size_t line = 0;
};

/// One case per line: `id | input | expected | ref`. Blank lines and lines
/// starting with '#' are skipped. The expected column holds blank-separated
/// key=value pairs and must include tier=. Throws ParseError with the line
/// number as position.
std::vector<FixtureCase> parse_fixtures(std::string_view text);
std::vector<FixtureCase> load_fixtures(const std::string& path);

/// A verification run. fast checks fast rows with exhaustive distances up to
/// dimension 16; dims_only checks every row with the same bound; extended
/// checks every row with bound 33. Larger distances are sampled and only
/// checked for consistency (sampled minimum >= claimed value).
struct VerifyOptions {
    Tier tier = Tier::fast;
    std::string filter;  ///< substring of the id; empty selects all
    std::uint64_t samples = 1'000'000;
};

std::size_t tier_max_dim(Tier t);
bool tier_selects(Tier run, Tier row);

struct FieldCheck {
    std::string key;
    std::string expected;
    std::string actual;
    bool ok = false;
    bool consistent_only = false;  ///< compared against a sampled upper bound
};

struct CaseResult {
    std::string id;
    bool ok = false;
    std::string error;  ///< set when the analysis itself threw
    std::vector<FieldCheck> checks;
};

CaseResult run_case(const FixtureCase& fc, std::size_t max_dim, std::uint64_t samples);

struct VerifySummary {
    std::size_t passed = 0;
    std::size_t failed = 0;
    std::vector<CaseResult> cases;
    bool ok() const noexcept { return failed == 0; }
};

/// Runs the selected cases, printing one line per case (plus a line per
/// mismatching field) to `out`.
VerifySummary verify(const std::vector<FixtureCase>& fixtures, const VerifyOptions& options, std::ostream& out);

}  // namespace conjucode

#endif  // CONJUCODE_FIXTURES_HPP
