#include "gtf/poset.hh"

namespace gtf {

FinitePoset::FinitePoset(std::vector<std::string> labels, std::vector<Bits> upsets)
    : labels_(std::move(labels)), upsets_(std::move(upsets)) {
    check_labels();
    check_order();
}

FinitePoset::FinitePoset(std::vector<std::string> labels,
                         const std::vector<std::pair<std::size_t, std::size_t>>& leq_pairs)
    : labels_(std::move(labels)) {
    check_labels();
    std::size_t n = labels_.size();
    upsets_.assign(n, Bits(n));
    for (auto [i, j] : leq_pairs) {
        if (i >= n || j >= n) throw ValidationError("relation pair out of range");
        upsets_[i].set(j);
    }
    check_order();
}

FinitePoset FinitePoset::from_relation(std::vector<std::string> labels,
                                       const std::function<bool(std::size_t, std::size_t)>& leq) {
    std::size_t n = labels.size();
    std::vector<Bits> up(n, Bits(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            if (leq(i, j)) up[i].set(j);
    return FinitePoset(std::move(labels), std::move(up));
}

FinitePoset FinitePoset::from_covers(std::vector<std::string> labels,
                                     const std::vector<std::pair<std::size_t, std::size_t>>& covers) {
    std::size_t n = labels.size();
    std::vector<Bits> up(n, Bits(n));
    for (std::size_t i = 0; i < n; ++i) up[i].set(i);
    for (auto [i, j] : covers) {
        if (i >= n || j >= n) throw ValidationError("cover pair out of range");
        up[i].set(j);
    }
    // reflexive-transitive closure; antisymmetry is still checked afterwards,
    // so a cycle in the covers is an error rather than a collapsed class
    bool grew = true;
    while (grew) {
        grew = false;
        for (std::size_t i = 0; i < n; ++i) {
            Bits next = up[i];
            for (std::size_t j = up[i].find_first(); j != Bits::npos; j = up[i].find_next(j))
                next |= up[j];
            if (next != up[i]) {
                up[i] = std::move(next);
                grew = true;
            }
        }
    }
    return FinitePoset(std::move(labels), std::move(up));
}

FinitePoset FinitePoset::chain(std::size_t n, const std::string& prefix) {
    std::vector<std::string> labels;
    for (std::size_t i = 0; i < n; ++i) labels.push_back(prefix + std::to_string(i));
    return from_relation(std::move(labels), [](std::size_t i, std::size_t j) { return i <= j; });
}

FinitePoset FinitePoset::antichain(std::size_t n, const std::string& prefix) {
    std::vector<std::string> labels;
    for (std::size_t i = 0; i < n; ++i) labels.push_back(prefix + std::to_string(i));
    return from_relation(std::move(labels), [](std::size_t i, std::size_t j) { return i == j; });
}

void FinitePoset::check_labels() {
    if (labels_.empty()) throw ValidationError("poset must contain at least one element");
    for (std::size_t i = 0; i < labels_.size(); ++i) {
        if (labels_[i].empty()) throw ValidationError("empty poset element label");
        auto [it, fresh] = index_.emplace(labels_[i], i);
        (void)it;
        if (!fresh) throw ValidationError("duplicate poset element label '" + labels_[i] + "'");
    }
}

void FinitePoset::check_order() const {
    std::size_t n = labels_.size();
    for (std::size_t i = 0; i < n; ++i) {
        if (!upsets_[i].test(i))
            throw ValidationError("relation is not reflexive: missing " + labels_[i] +
                                  " <= " + labels_[i]);
    }
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = upsets_[i].find_first(); j != Bits::npos;
             j = upsets_[i].find_next(j)) {
            if (i != j && upsets_[j].test(i))
                throw ValidationError("relation is not antisymmetric: both " + labels_[i] +
                                      " <= " + labels_[j] + " and " + labels_[j] +
                                      " <= " + labels_[i]);
            if (!upsets_[j].is_subset_of(upsets_[i]))
                throw ValidationError("relation is not transitive at " + labels_[i] +
                                      " <= " + labels_[j]);
        }
    }
}

std::size_t FinitePoset::index_of(const std::string& l) const {
    auto it = index_.find(l);
    if (it == index_.end()) throw ValidationError("unknown poset element '" + l + "'");
    return it->second;
}

std::vector<std::size_t> FinitePoset::maximal_elements() const {
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < size(); ++i)
        if (upsets_[i].count() == 1) out.push_back(i);
    return out;
}

bool FinitePoset::is_directed() const {
    for (std::size_t i = 0; i < size(); ++i)
        for (std::size_t j = i + 1; j < size(); ++j)
            if (!(upsets_[i] & upsets_[j]).any()) return false;
    return true;
}

bool FinitePoset::is_sequence() const {
    for (std::size_t i = 0; i < size(); ++i)
        for (std::size_t j = i + 1; j < size(); ++j)
            if (!leq(i, j) && !leq(j, i)) return false;
    return true;
}

std::vector<std::pair<std::size_t, std::size_t>> FinitePoset::relation_pairs() const {
    std::vector<std::pair<std::size_t, std::size_t>> out;
    for (std::size_t i = 0; i < size(); ++i)
        for (std::size_t j = upsets_[i].find_first(); j != Bits::npos;
             j = upsets_[i].find_next(j))
            out.emplace_back(i, j);
    return out;
}

}  // namespace gtf
