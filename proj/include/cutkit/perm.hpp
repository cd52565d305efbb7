#pragma once

#include <compare>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace cutkit {

using Point = std::uint32_t;

/// A permutation of {0, ..., degree-1}, acting on the right: the product
/// a * b applies a first, then b.
class Perm {
public:
    Perm() = default;
    /// Throws InvalidPermutation unless images is a bijection.
    explicit Perm(std::vector<Point> images);

    static Perm identity(std::size_t degree);
    /// Builds a permutation from disjoint cycles; throws on overlapping cycles
    /// or points outside the degree.
    static Perm from_cycles(std::size_t degree, const std::vector<std::vector<Point>>& cycles);

    std::size_t degree() const { return images_.size(); }
    Point operator()(Point x) const { return images_[x]; }
    std::span<const Point> images() const { return images_; }

    Perm operator*(const Perm& rhs) const;
    Perm inverse() const;
    Perm pow(std::int64_t k) const;
    bool is_identity() const;
    std::uint64_t order() const;

    /// Same permutation on a larger point set, shifted by offset; points
    /// outside [offset, offset + degree()) are fixed.
    Perm embedded(std::size_t new_degree, std::size_t offset) const;

    std::vector<std::vector<Point>> cycles() const;
    std::string cycle_string() const;

    auto operator<=>(const Perm&) const = default;

private:
    std::vector<Point> images_;
};

std::uint64_t element_order(const Perm& x);

} // namespace cutkit
