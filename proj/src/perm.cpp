#include "cutkit/perm.hpp"

#include "cutkit/error.hpp"
#include "cutkit/numtheory.hpp"

#include <sstream>

namespace cutkit {

Perm::Perm(std::vector<Point> images) : images_(std::move(images))
{
    std::vector<bool> seen(images_.size(), false);
    for (Point p : images_) {
        if (p >= images_.size() || seen[p]) {
            throw Error(ErrorKind::InvalidPermutation, "images do not form a bijection");
        }
        seen[p] = true;
    }
}

Perm Perm::identity(std::size_t degree)
{
    Perm p;
    p.images_.resize(degree);
    for (std::size_t i = 0; i < degree; ++i) p.images_[i] = static_cast<Point>(i);
    return p;
}

Perm Perm::from_cycles(std::size_t degree, const std::vector<std::vector<Point>>& cycles)
{
    Perm p = identity(degree);
    std::vector<bool> used(degree, false);
    for (const auto& cycle : cycles) {
        for (std::size_t i = 0; i < cycle.size(); ++i) {
            Point a = cycle[i];
            if (a >= degree || used[a]) {
                throw Error(ErrorKind::InvalidPermutation, "cycle point out of range or repeated");
            }
            used[a] = true;
            p.images_[a] = cycle[(i + 1) % cycle.size()];
        }
    }
    return p;
}

Perm Perm::operator*(const Perm& rhs) const
{
    Perm out;
    out.images_.resize(images_.size());
    for (std::size_t i = 0; i < images_.size(); ++i) out.images_[i] = rhs.images_[images_[i]];
    return out;
}

Perm Perm::inverse() const
{
    Perm out;
    out.images_.resize(images_.size());
    for (std::size_t i = 0; i < images_.size(); ++i) out.images_[images_[i]] = static_cast<Point>(i);
    return out;
}

Perm Perm::pow(std::int64_t k) const
{
    Perm base = k < 0 ? inverse() : *this;
    std::uint64_t e = k < 0 ? static_cast<std::uint64_t>(-k) : static_cast<std::uint64_t>(k);
    Perm result = identity(degree());
    while (e > 0) {
        if (e & 1) result = result * base;
        base = base * base;
        e >>= 1;
    }
    return result;
}

bool Perm::is_identity() const
{
    for (std::size_t i = 0; i < images_.size(); ++i) {
        if (images_[i] != i) return false;
    }
    return true;
}

std::uint64_t Perm::order() const
{
    std::uint64_t result = 1;
    std::vector<bool> seen(images_.size(), false);
    for (std::size_t i = 0; i < images_.size(); ++i) {
        if (seen[i]) continue;
        std::uint64_t len = 0;
        for (Point j = static_cast<Point>(i); !seen[j]; j = images_[j]) {
            seen[j] = true;
            ++len;
        }
        result = lcm(result, len);
    }
    return result;
}

Perm Perm::embedded(std::size_t new_degree, std::size_t offset) const
{
    Perm out = identity(new_degree);
    for (std::size_t i = 0; i < images_.size(); ++i) {
        out.images_[offset + i] = static_cast<Point>(offset + images_[i]);
    }
    return out;
}

std::vector<std::vector<Point>> Perm::cycles() const
{
    std::vector<std::vector<Point>> out;
    std::vector<bool> seen(images_.size(), false);
    for (std::size_t i = 0; i < images_.size(); ++i) {
        if (seen[i] || images_[i] == i) continue;
        std::vector<Point> cycle;
        for (Point j = static_cast<Point>(i); !seen[j]; j = images_[j]) {
            seen[j] = true;
            cycle.push_back(j);
        }
        out.push_back(std::move(cycle));
    }
    return out;
}

std::string Perm::cycle_string() const
{
    auto cs = cycles();
    if (cs.empty()) return "()";
    std::ostringstream os;
    for (const auto& c : cs) {
        os << '(';
        for (std::size_t i = 0; i < c.size(); ++i) os << (i ? "," : "") << c[i];
        os << ')';
    }
    return os.str();
}

std::uint64_t element_order(const Perm& x) { return x.order(); }

} // namespace cutkit
