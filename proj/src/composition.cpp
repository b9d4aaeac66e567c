#include "wcf/composition.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>

#include "wcf/errors.hpp"

namespace wcf {

void validate_space(const SpaceId& space) {
    if (space.n < 0) throw DomainError("space: n must be non-negative");
    if (space.l < 0) throw DomainError("space: l must be non-negative");
    if (space.l == 0 && space.n != 0) {
        throw DomainError("space: l = 0 requires n = 0");
    }
}

Composition::Composition(std::vector<std::int64_t> parts) : parts_(std::move(parts)) {
    for (std::int64_t p : parts_) {
        if (p < 0) throw DomainError("composition: parts must be non-negative");
    }
}

std::int64_t Composition::part(int i) const {
    if (i < 1 || i > length()) {
        throw DomainError("composition: coordinate " + std::to_string(i) +
                          " out of range [1," + std::to_string(length()) + "]");
    }
    return parts_[static_cast<std::size_t>(i - 1)];
}

std::int64_t Composition::sum() const {
    return std::accumulate(parts_.begin(), parts_.end(), std::int64_t{0});
}

BigInt count_space(const SpaceId& space) {
    validate_space(space);
    if (space.l == 0) return space.n == 0 ? 1 : 0;
    return binomial(space.n + space.l - 1, space.l - 1);
}

std::vector<Composition> enumerate_space(const SpaceId& space, std::uint64_t cap) {
    validate_space(space);
    const BigInt total = count_space(space);
    if (total > cap) {
        throw ResourceLimitError("enumerate_space: |P(" + std::to_string(space.n) + "," +
                                 std::to_string(space.l) + ")| = " + total.str() +
                                 " exceeds cap " + std::to_string(cap));
    }
    std::vector<Composition> out;
    out.reserve(static_cast<std::size_t>(total));
    if (space.l == 0) {
        out.emplace_back(std::vector<std::int64_t>{});
        return out;
    }

    // Ascending lexicographic: start at (0,...,0,n); the successor increments
    // the rightmost coordinate that still has mass to its right, then resets
    // the suffix to its minimum (0,...,0,remainder).
    std::vector<std::int64_t> parts(static_cast<std::size_t>(space.l), 0);
    parts.back() = space.n;
    for (;;) {
        out.emplace_back(parts);
        std::int64_t suffix = parts.back();
        int i = space.l - 2;
        for (; i >= 0; --i) {
            if (suffix > 0) break;
            suffix += parts[static_cast<std::size_t>(i)];
        }
        if (i < 0) break;
        ++parts[static_cast<std::size_t>(i)];
        for (int j = i + 1; j < space.l - 1; ++j) parts[static_cast<std::size_t>(j)] = 0;
        parts.back() = suffix - 1;
    }
    return out;
}

Composition remove_coords(const Composition& u, const std::vector<int>& coords) {
    const int l = u.length();
    std::vector<bool> drop(static_cast<std::size_t>(l), false);
    for (int x : coords) {
        if (x < 1 || x > l) {
            throw DomainError("remove_coords: coordinate " + std::to_string(x) +
                              " out of range [1," + std::to_string(l) + "]");
        }
        if (drop[static_cast<std::size_t>(x - 1)]) {
            throw DomainError("remove_coords: duplicate coordinate " + std::to_string(x));
        }
        drop[static_cast<std::size_t>(x - 1)] = true;
    }
    std::vector<std::int64_t> kept;
    kept.reserve(static_cast<std::size_t>(l) - coords.size());
    for (int i = 0; i < l; ++i) {
        if (!drop[static_cast<std::size_t>(i)]) kept.push_back(u.parts()[static_cast<std::size_t>(i)]);
    }
    return Composition(std::move(kept));
}

std::string format_parts(const Composition& u) {
    std::string out;
    for (int i = 0; i < u.length(); ++i) {
        if (i > 0) out += ',';
        out += std::to_string(u.parts()[static_cast<std::size_t>(i)]);
    }
    return out;
}

Composition parse_parts(const std::string& line) {
    std::vector<std::int64_t> parts;
    std::size_t pos = 0;
    while (pos <= line.size()) {
        std::size_t comma = line.find(',', pos);
        std::string token = line.substr(pos, comma == std::string::npos ? std::string::npos : comma - pos);
        // trim
        std::size_t a = token.find_first_not_of(" \t\r");
        std::size_t b = token.find_last_not_of(" \t\r");
        if (a == std::string::npos) throw DomainError("parse_parts: empty part in '" + line + "'");
        token = token.substr(a, b - a + 1);
        std::size_t used = 0;
        std::int64_t value = 0;
        try {
            value = std::stoll(token, &used);
        } catch (const std::exception&) {
            throw DomainError("parse_parts: bad part '" + token + "'");
        }
        if (used != token.size()) throw DomainError("parse_parts: bad part '" + token + "'");
        if (value < 0) throw DomainError("parse_parts: negative part '" + token + "'");
        parts.push_back(value);
        if (comma == std::string::npos) break;
        pos = comma + 1;
    }
    if (parts.empty()) throw DomainError("parse_parts: no parts in '" + line + "'");
    return Composition(std::move(parts));
}

}  // namespace wcf
