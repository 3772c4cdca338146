#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "cantor/basic_set.hpp"
#include "cantor/point.hpp"

namespace cantor {

// An element of the Boolean group B(C): a finite set of points of C, the
// group operation being symmetric difference. Every element is its own
// inverse and the empty set is the identity. Points are kept strictly
// increasing in the real order.
class GroupElement {
public:
    GroupElement() = default;  // identity

    // Sorts the points. Throws Error on duplicates.
    explicit GroupElement(std::vector<CantorPoint> points);

    const std::vector<CantorPoint>& points() const { return points_; }
    std::size_t size() const { return points_.size(); }
    bool empty() const { return points_.empty(); }

    // Membership in B_*(C), the elements of odd cardinality.
    bool odd() const { return points_.size() % 2 == 1; }

    bool contains(const CantorPoint& p) const;

    auto begin() const { return points_.begin(); }
    auto end() const { return points_.end(); }

    bool operator==(const GroupElement& other) const = default;

private:
    friend GroupElement symmetric_difference(const GroupElement& a, const GroupElement& b);

    std::vector<CantorPoint> points_;
};

// The group operation: points belonging to exactly one of a, b.
GroupElement symmetric_difference(const GroupElement& a, const GroupElement& b);

// How a basic set meets a finite point set: empty, even and positive, or odd.
enum class Classification { Void, Even, Odd };

Classification classify(const BasicSet& u, const GroupElement& f);
const char* to_string(Classification c);

// Text format: "{p1, p2, ...}" with points in canonical point format,
// ascending. Parsing accepts any order but rejects duplicate points.
GroupElement parse_group_element(std::string_view text);
std::string to_string(const GroupElement& f);

}  // namespace cantor
