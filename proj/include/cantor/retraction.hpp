#pragma once

#include <string>

#include "cantor/basic_set.hpp"
#include "cantor/group_element.hpp"

namespace cantor {

// The inclusion-maximal basic sets meeting f in an even positive number of
// points, together with the points of f they leave uncovered. Their union
// equals the union of all basic sets meeting f evenly, so the residue is
// exactly what survives the discarding step of the retraction.
struct EvenDecomposition {
    std::vector<BasicSet> maximal_even;  // pairwise disjoint, left to right
    GroupElement residue;                // |residue| is odd whenever |f| is odd
};

// Trie walk over the expansions of f's points: an even positive count is
// emitted as a maximal part and not entered, an odd count of at least three
// descends into both children, a count below two stops. Throws EmptyElement.
EvenDecomposition maximal_even_prefixes(const GroupElement& f);

// The retraction of B_*(C) onto C: the least point of f left after removing
// every point covered by a basic set meeting f evenly. Fixes C pointwise and
// always returns a member of f. Throws EvenCardinality unless |f| is odd.
CantorPoint retract(const GroupElement& f);

// Total extension of the retraction to all of B(C): the point 0 on elements
// of even cardinality.
CantorPoint retract_extended(const GroupElement& f);

// Independent oracle for retract: enumerates every prefix of length <= depth,
// marks the points covered by evenly-met prefixes, and takes the minimum of
// what remains. Throws EvenCardinality, and DepthTooSmall when depth does not
// separate the points of f.
CantorPoint brute_force_retract(const GroupElement& f, int depth);

// Least length at which all points of f carry distinct expansion prefixes
// (0 for the empty set and singletons).
int separation_depth(const GroupElement& f);

// "maximal_even = {...}; residue = {...}"
std::string to_string(const EvenDecomposition& d);

}  // namespace cantor
