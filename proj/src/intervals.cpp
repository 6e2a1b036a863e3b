#include "xyfse/intervals.hpp"

#include <algorithm>
#include <numeric>

#include "xyfse/errors.hpp"
#include "xyfse/util.hpp"

namespace xyfse {

Pattern::Pattern(std::vector<long long> ls) : lengths(std::move(ls)) {
    if (lengths.empty() || lengths.size() % 2 == 0)
        throw Error("pattern must have an odd number of entries");
    for (long long v : lengths)
        if (v <= 0) throw Error("pattern entries must be positive");
}

long long Pattern::total_extent() const {
    return std::accumulate(lengths.begin(), lengths.end(), 0LL);
}

long long Pattern::total_sites() const {
    long long s = 0;
    for (size_t i = 0; i < lengths.size(); i += 2) s += lengths[i];
    return s;
}

std::string Pattern::to_string() const {
    std::string out;
    for (size_t i = 0; i < lengths.size(); ++i) {
        if (i) out += ',';
        out += std::to_string(lengths[i]);
    }
    return out;
}

Pattern dilate(const Pattern& a, long long lambda) {
    if (lambda < 1) throw Error("dilation factor must be >= 1");
    std::vector<long long> ls = a.lengths;
    for (long long& v : ls) v *= lambda;
    return Pattern(std::move(ls));
}

namespace {

long long parse_entry(const std::string& text) {
    std::size_t used = 0;
    long long v;
    try {
        v = std::stoll(text, &used);
    } catch (const std::exception&) {
        throw MalformedInput("cannot parse pattern entry '" + text + "'");
    }
    if (used != text.size())
        throw MalformedInput("trailing junk in pattern entry '" + text + "'");
    return v;
}

}  // namespace

Pattern parse_pattern(const std::string& text) {
    std::string body = trim(text);
    long long lambda = 1;
    if (auto pos = body.rfind('x'); pos != std::string::npos) {
        lambda = parse_entry(trim(body.substr(pos + 1)));
        body = body.substr(0, pos);
    }
    std::vector<long long> ls;
    for (const auto& part : split(body, ','))
        ls.push_back(parse_entry(trim(part)));
    return dilate(Pattern(std::move(ls)), lambda);
}

std::vector<Constituent> constituents(const Pattern& a) {
    const int m = int(a.lengths.size());
    if (a.n_blocks() < 2)
        throw PatternTooSmall("constituents need a pattern with >= 2 intervals");
    std::vector<Constituent> out;
    out.reserve(size_t(m) * (m + 1) / 2);
    for (int i = 0; i < m; ++i) {
        long long len = 0;
        for (int j = i; j < m; ++j) {
            len += a.lengths[j];
            out.push_back({len, (i + j) % 2 == 0 ? +1 : -1, i, j});
        }
    }
    return out;
}

IntervalSet IntervalSet::from_pattern(const Pattern& a) {
    IntervalSet s;
    long long pos = 0;
    for (size_t i = 0; i < a.lengths.size(); ++i) {
        if (i % 2 == 0) s.blocks.emplace_back(pos, a.lengths[i]);
        pos += a.lengths[i];
    }
    return s;
}

IntervalSet IntervalSet::from_blocks(std::vector<std::pair<long long, long long>> bs) {
    for (const auto& [off, len] : bs) {
        (void)off;
        if (len <= 0) throw Error("interval length must be positive");
    }
    std::sort(bs.begin(), bs.end());
    IntervalSet s;
    for (const auto& [off, len] : bs) {
        if (!s.blocks.empty() && off <= s.blocks.back().first + s.blocks.back().second) {
            auto& [boff, blen] = s.blocks.back();
            blen = std::max(blen, off + len - boff);
        } else {
            s.blocks.emplace_back(off, len);
        }
    }
    return s;
}

std::vector<long long> IntervalSet::site_list() const {
    std::vector<long long> sites;
    sites.reserve(size_t(total_sites()));
    for (const auto& [off, len] : blocks)
        for (long long j = 0; j < len; ++j) sites.push_back(off + j);
    return sites;
}

long long IntervalSet::total_sites() const {
    long long s = 0;
    for (const auto& [off, len] : blocks) {
        (void)off;
        s += len;
    }
    return s;
}

long long IntervalSet::min_block_length() const {
    long long m = blocks.empty() ? 0 : blocks.front().second;
    for (const auto& [off, len] : blocks) {
        (void)off;
        m = std::min(m, len);
    }
    return m;
}

}  // namespace xyfse
