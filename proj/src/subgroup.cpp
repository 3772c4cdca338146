#include "cantor/subgroup.hpp"

#include "cantor/errors.hpp"

namespace cantor {

namespace {

std::uint64_t prefix_value(const std::string& prefix) {
    std::uint64_t v = 0;
    for (char c : prefix) {
        v = (v << 1) | (c == '2' ? 1u : 0u);
    }
    return v;
}

}  // namespace

SubgroupGrid::SubgroupGrid(const Cover& gamma, int depth) : depth_(depth) {
    if (depth < 1) {
        throw DepthTooSmall("enumeration depth must be positive");
    }
    if (static_cast<std::size_t>(depth) < gamma.max_prefix_length()) {
        throw DepthTooSmall("enumeration depth " + std::to_string(depth) +
                            " is below the cover's prefix length " +
                            std::to_string(gamma.max_prefix_length()));
    }
    if (depth > 20) {
        throw Error("enumeration depth " + std::to_string(depth) + " too large");
    }
    blocks_.reserve(gamma.size());
    for (const BasicSet& u : gamma.parts()) {
        std::uint64_t width = std::uint64_t{1} << (depth_ - u.length());
        std::uint64_t begin = prefix_value(u.prefix()) * width;
        blocks_.push_back({begin, begin + width});
    }
    // parts are sorted left to right, so the blocks tile [0, 2^depth)
    suffix_max_.assign(blocks_.size() + 1, 0);
    for (std::size_t i = blocks_.size(); i-- > 0;) {
        std::uint64_t n = blocks_[i].end - blocks_[i].begin;
        suffix_max_[i] = suffix_max_[i + 1] + (n / 2) * 2;
    }
}

CantorPoint SubgroupGrid::point(std::uint64_t index) const {
    std::string word;
    word.reserve(depth_);
    for (int i = depth_ - 1; i >= 0; --i) {
        word.push_back((index >> i) & 1 ? '2' : '0');
    }
    return CantorPoint(std::move(word), Tail::Zeros);
}

std::optional<std::uint64_t> SubgroupGrid::index_of(const CantorPoint& p) const {
    if (p.tail() != Tail::Zeros || p.word().size() > static_cast<std::size_t>(depth_)) {
        return std::nullopt;
    }
    std::uint64_t v = 0;
    for (int i = 0; i < depth_; ++i) {
        v = (v << 1) | (p.digit_at(i) == '2' ? 1u : 0u);
    }
    return v;
}

GroupElement SubgroupGrid::element(const std::vector<std::uint64_t>& tuple) const {
    std::vector<CantorPoint> pts;
    pts.reserve(tuple.size());
    for (std::uint64_t idx : tuple) {
        pts.push_back(point(idx));
    }
    return GroupElement(std::move(pts));
}

std::uint64_t SubgroupGrid::bit_mask(const std::vector<std::uint64_t>& tuple) const {
    if (depth_ > 6) {
        throw Error("bit masks require depth <= 6");
    }
    std::uint64_t mask = 0;
    for (std::uint64_t idx : tuple) {
        mask |= std::uint64_t{1} << idx;
    }
    return mask;
}

std::optional<std::uint64_t> SubgroupGrid::bit_mask(const GroupElement& f) const {
    if (depth_ > 6) {
        return std::nullopt;
    }
    std::uint64_t mask = 0;
    for (const CantorPoint& p : f) {
        auto idx = index_of(p);
        if (!idx) {
            return std::nullopt;
        }
        mask |= std::uint64_t{1} << *idx;
    }
    return mask;
}

std::uint64_t SubgroupGrid::set_mask(const BasicSet& u) const {
    if (depth_ > 6) {
        throw Error("bit masks require depth <= 6");
    }
    std::uint64_t mask = 0;
    for (std::uint64_t i = 0; i < grid_size(); ++i) {
        if (u.contains(point(i))) {
            mask |= std::uint64_t{1} << i;
        }
    }
    return mask;
}

}  // namespace cantor
