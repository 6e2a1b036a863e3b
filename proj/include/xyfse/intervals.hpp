#pragma once

#include <string>
#include <utility>
#include <vector>

namespace xyfse {

// Alternating length pattern [|A1|, |B1|, |A2|, ..., |An|]: odd positions are
// intervals, even positions separators; the list has odd size >= 1.
struct Pattern {
    std::vector<long long> lengths;

    Pattern() = default;
    explicit Pattern(std::vector<long long> ls);

    int n_blocks() const { return int((lengths.size() + 1) / 2); }
    long long total_extent() const;  // intervals plus separators
    long long total_sites() const;   // intervals only

    std::string to_string() const;  // comma-separated, e.g. "1,3,2"

    bool operator==(const Pattern&) const = default;
};

// Uniform dilation: every interval and every separator scaled by lambda.
Pattern dilate(const Pattern& a, long long lambda);

// Parse "1,3,2" or with a dilation suffix "1,3,2x5".
Pattern parse_pattern(const std::string& text);

// One term of the inclusion-exclusion expansion of a multi-interval entropy:
// the contiguous range [first..last] of pattern entries merged into a single
// interval, carrying sign (-1)^(first+last).
struct Constituent {
    long long length = 0;
    int sign = +1;
    int first = 0;  // entry range within the source pattern
    int last = 0;
};

// All contiguous entry ranges of the pattern: n(2n-1) terms for n intervals.
// Throws PatternTooSmall for n < 2.  The signs sum to n (the merged full range
// plus pairwise cancellations), which is what makes the multi-interval
// reference entropy consistent with the dilation identity.
std::vector<Constituent> constituents(const Pattern& a);

// Disjoint integer intervals, anchored at site 0 when built from a pattern.
struct IntervalSet {
    // (offset, length) blocks, sorted, pairwise disjoint, never touching
    // (touching or overlapping blocks merge on construction).
    std::vector<std::pair<long long, long long>> blocks;

    static IntervalSet from_pattern(const Pattern& a);
    static IntervalSet from_blocks(std::vector<std::pair<long long, long long>> bs);

    std::vector<long long> site_list() const;
    long long total_sites() const;
    long long min_block_length() const;
};

}  // namespace xyfse
