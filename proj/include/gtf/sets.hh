// Finite point universes and bitmask-backed point sets.
#ifndef GTF_SETS_HH
#define GTF_SETS_HH

#include <bit>
#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

namespace gtf {

// Base class for everything thrown by this library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Malformed or inconsistent input: bad labels, relations that are not posets,
// structures violating their definitions.
class ValidationError : public Error {
public:
    using Error::Error;
};

// A precondition on an argument does not hold (e.g. a set that must be open).
class DomainError : public Error {
public:
    using Error::Error;
};

// An operation whose cost is exponential in the universe size was asked to run
// past its configured cap.
class ResourceError : public Error {
public:
    using Error::Error;
};

using Mask = std::uint64_t;

// Ordered list of distinct point labels. Indices are stable and serve as bit
// positions in PointSet. At most 64 points.
class Universe {
public:
    explicit Universe(std::vector<std::string> labels);

    std::size_t size() const { return labels_.size(); }
    const std::string& label(std::size_t i) const { return labels_.at(i); }
    bool has_label(const std::string& l) const { return index_.count(l) != 0; }
    std::size_t index_of(const std::string& l) const;
    Mask full_mask() const;

    bool operator==(const Universe& o) const { return labels_ == o.labels_; }

private:
    std::vector<std::string> labels_;
    std::map<std::string, std::size_t> index_;
};

// Subset of a universe, stored as a bitmask over point indices.
class PointSet {
public:
    constexpr PointSet() = default;
    static constexpr PointSet from_mask(Mask m) { return PointSet(m); }
    static constexpr PointSet single(std::size_t i) { return PointSet(Mask{1} << i); }

    constexpr Mask mask() const { return bits_; }
    constexpr bool empty() const { return bits_ == 0; }
    constexpr std::size_t count() const { return static_cast<std::size_t>(std::popcount(bits_)); }
    constexpr bool contains(std::size_t i) const { return (bits_ >> i) & 1; }
    constexpr bool subset_of(PointSet o) const { return (bits_ & ~o.bits_) == 0; }
    constexpr bool intersects(PointSet o) const { return (bits_ & o.bits_) != 0; }

    constexpr PointSet with(std::size_t i) const { return PointSet(bits_ | (Mask{1} << i)); }
    constexpr PointSet complement_in(PointSet universe) const {
        return PointSet(universe.bits_ & ~bits_);
    }

    friend constexpr PointSet operator|(PointSet a, PointSet b) { return PointSet(a.bits_ | b.bits_); }
    friend constexpr PointSet operator&(PointSet a, PointSet b) { return PointSet(a.bits_ & b.bits_); }
    friend constexpr PointSet operator-(PointSet a, PointSet b) { return PointSet(a.bits_ & ~b.bits_); }

    std::vector<std::size_t> members() const;

    bool operator==(const PointSet&) const = default;

private:
    constexpr explicit PointSet(Mask m) : bits_(m) {}
    Mask bits_ = 0;
};

// Canonical order used everywhere sets are listed: first by cardinality, then
// lexicographically by the ascending member sequence.
bool canonical_less(PointSet a, PointSet b);

// Duplicate-free collection of point sets kept in canonical order.
class SetFamily {
public:
    SetFamily() = default;
    explicit SetFamily(std::vector<PointSet> sets);

    void insert(PointSet s);
    bool contains(PointSet s) const;
    std::size_t size() const { return sets_.size(); }
    bool empty() const { return sets_.empty(); }
    const std::vector<PointSet>& sets() const { return sets_; }

    PointSet union_all() const;
    // Intersection of all members; `when_empty` is the value for the empty family.
    PointSet intersect_all(PointSet when_empty) const;

    auto begin() const { return sets_.begin(); }
    auto end() const { return sets_.end(); }

    bool operator==(const SetFamily&) const = default;

private:
    std::vector<PointSet> sets_;
};

// "{w,v}", or the empty-set sign for the empty set.
std::string format_set(const Universe& u, PointSet s);
// "∅, {w}, {w,v}" in canonical order; "(none)" for the empty family.
std::string format_family(const Universe& u, const SetFamily& f);

}  // namespace gtf

#endif
