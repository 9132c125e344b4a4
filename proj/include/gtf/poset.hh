// Finite partially ordered index sets for gnet domains.
#ifndef GTF_POSET_HH
#define GTF_POSET_HH

#include <boost/dynamic_bitset.hpp>
#include <cstddef>
#include <functional>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "gtf/sets.hh"

namespace gtf {

// Validated on construction: the relation must be reflexive, antisymmetric
// and transitive. A relation that fails is reported, never repaired; the
// explicit `from_covers` entry point is the one place where a closure is
// computed, and its result is validated like any other input.
class FinitePoset {
public:
    using Bits = boost::dynamic_bitset<>;

    FinitePoset(std::vector<std::string> labels,
                const std::vector<std::pair<std::size_t, std::size_t>>& leq_pairs);
    static FinitePoset from_relation(std::vector<std::string> labels,
                                     const std::function<bool(std::size_t, std::size_t)>& leq);
    static FinitePoset from_covers(std::vector<std::string> labels,
                                   const std::vector<std::pair<std::size_t, std::size_t>>& covers);
    static FinitePoset chain(std::size_t n, const std::string& prefix = "c");
    static FinitePoset antichain(std::size_t n, const std::string& prefix = "a");

    std::size_t size() const { return labels_.size(); }
    const std::string& label(std::size_t i) const { return labels_.at(i); }
    std::size_t index_of(const std::string& l) const;

    bool leq(std::size_t i, std::size_t j) const { return upsets_[i].test(j); }
    const Bits& upset(std::size_t i) const { return upsets_[i]; }  // {j : i <= j}

    std::vector<std::size_t> maximal_elements() const;
    // Every pair has a common upper bound.
    bool is_directed() const;
    // Totally ordered.
    bool is_sequence() const;

    std::vector<std::pair<std::size_t, std::size_t>> relation_pairs() const;

private:
    FinitePoset(std::vector<std::string> labels, std::vector<Bits> upsets);
    void check_labels();
    void check_order() const;

    std::vector<std::string> labels_;
    std::vector<Bits> upsets_;
    std::map<std::string, std::size_t> index_;
};

}  // namespace gtf

#endif
