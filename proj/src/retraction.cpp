#include "cantor/retraction.hpp"

#include <algorithm>
#include <cstdint>

#include "cantor/errors.hpp"

namespace cantor {

namespace {

// Points in [lo, hi) share their first `level` digits. Splits on the next
// digit, collecting maximal even prefixes and surviving points.
void walk(const std::vector<CantorPoint>& pts, std::size_t lo, std::size_t hi, std::size_t level,
          std::vector<BasicSet>& even_parts, std::vector<CantorPoint>& residue) {
    std::size_t count = hi - lo;
    if (count == 0) {
        return;
    }
    if (count == 1) {
        residue.push_back(pts[lo]);
        return;
    }
    if (count % 2 == 0) {
        even_parts.emplace_back(pts[lo].expansion_prefix(level));
        return;
    }
    // odd count >= 3: within the shared prefix the points sort by their next
    // digit, zeros before twos
    std::size_t mid = lo;
    while (mid < hi && pts[mid].digit_at(level) == '0') {
        ++mid;
    }
    walk(pts, lo, mid, level + 1, even_parts, residue);
    walk(pts, mid, hi, level + 1, even_parts, residue);
}

}  // namespace

EvenDecomposition maximal_even_prefixes(const GroupElement& f) {
    if (f.empty()) {
        throw EmptyElement("maximal_even_prefixes requires a nonempty element");
    }
    EvenDecomposition out;
    std::vector<CantorPoint> residue;
    walk(f.points(), 0, f.size(), 0, out.maximal_even, residue);
    out.residue = GroupElement(std::move(residue));
    return out;
}

CantorPoint retract(const GroupElement& f) {
    if (!f.odd()) {
        throw EvenCardinality("retraction is defined only on elements of odd cardinality");
    }
    EvenDecomposition d = maximal_even_prefixes(f);
    // an odd total leaves an odd, hence nonempty, residue
    return d.residue.points().front();
}

CantorPoint retract_extended(const GroupElement& f) {
    return f.odd() ? retract(f) : CantorPoint();
}

int separation_depth(const GroupElement& f) {
    int depth = 0;
    const auto& pts = f.points();
    for (std::size_t i = 0; i + 1 < pts.size(); ++i) {
        // adjacent points realize the deepest agreements
        std::size_t j = 0;
        while (pts[i].digit_at(j) == pts[i + 1].digit_at(j)) {
            ++j;
        }
        depth = std::max<int>(depth, static_cast<int>(j) + 1);
    }
    return depth;
}

CantorPoint brute_force_retract(const GroupElement& f, int depth) {
    if (!f.odd()) {
        throw EvenCardinality("retraction is defined only on elements of odd cardinality");
    }
    int needed = separation_depth(f);
    if (depth < needed) {
        throw DepthTooSmall("depth " + std::to_string(depth) + " does not separate the points (needs " +
                            std::to_string(needed) + ")");
    }
    if (depth > 20) {
        throw Error("brute-force depth " + std::to_string(depth) + " too large");
    }
    std::vector<bool> covered(f.size(), false);
    for (int len = 0; len <= depth; ++len) {
        std::uint64_t words = std::uint64_t{1} << len;
        for (std::uint64_t w = 0; w < words; ++w) {
            std::string prefix;
            prefix.reserve(len);
            for (int i = 0; i < len; ++i) {
                prefix.push_back((w >> (len - 1 - i)) & 1 ? '2' : '0');
            }
            BasicSet u(prefix);
            std::size_t count = 0;
            for (const CantorPoint& p : f) {
                if (u.contains(p)) {
                    ++count;
                }
            }
            if (count > 0 && count % 2 == 0) {
                for (std::size_t i = 0; i < f.size(); ++i) {
                    if (u.contains(f.points()[i])) {
                        covered[i] = true;
                    }
                }
            }
        }
    }
    for (std::size_t i = 0; i < f.size(); ++i) {
        if (!covered[i]) {
            return f.points()[i];
        }
    }
    throw Error("internal: no point survived the brute-force discarding step");
}

std::string to_string(const EvenDecomposition& d) {
    std::string out = "maximal_even = {";
    bool first = true;
    for (const BasicSet& u : d.maximal_even) {
        if (!first) {
            out += ", ";
        }
        out += to_string(u);
        first = false;
    }
    out += "}; residue = ";
    out += to_string(d.residue);
    return out;
}

}  // namespace cantor
