#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <vector>

#include "genbound/errors.hpp"

namespace genbound::perm {

// Points are 0-based internally; all text I/O is 1-based.
using Point = uint16_t;

// A permutation of {0, ..., degree-1}, stored as its image vector.
// Composition is in action order: (p.then(q))(i) = q(p(i)), matching the
// right-action convention i^(pq) = (i^p)^q used throughout.
class Permutation {
public:
    explicit Permutation(uint32_t degree); // identity
    explicit Permutation(std::vector<Point> images);

    uint32_t degree() const { return static_cast<uint32_t>(img_.size()); }
    Point operator()(Point i) const { return img_[i]; }
    const std::vector<Point>& images() const { return img_; }

    Permutation then(const Permutation& q) const;
    Permutation inverse() const;
    Permutation conjugated_by(const Permutation& g) const; // g^-1 * this * g

    bool is_identity() const;
    uint64_t order() const;

    // Nontrivial cycles, each rotated to start at its least point, sorted by
    // first point. Cycle entries are 0-based.
    std::vector<std::vector<Point>> cycles() const;
    std::string to_cycle_string() const; // 1-based text, "()" for identity

    auto operator<=>(const Permutation&) const = default; // lex on images

private:
    std::vector<Point> img_;
};

// Parses 1-based cycle notation, e.g. "(1 2 3)(4 5)" or "()". Commas are
// accepted as separators. Throws parse_error on malformed input, repeated
// points, or points outside [1, degree].
Permutation parse_permutation(const std::string& text, uint32_t degree);

struct PermHash {
    size_t operator()(const Permutation& p) const;
};

} // namespace genbound::perm
