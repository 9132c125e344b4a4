#include "gtf/sets.hh"

#include <algorithm>

namespace gtf {

namespace {

bool label_ok(const std::string& l) {
    if (l.empty()) return false;
    for (char c : l) {
        if (c == ',' || c == '{' || c == '}' || c == ' ' || c == '\t' || c == '\n') return false;
    }
    return true;
}

}  // namespace

Universe::Universe(std::vector<std::string> labels) : labels_(std::move(labels)) {
    if (labels_.empty()) throw ValidationError("universe must contain at least one point");
    if (labels_.size() > 64) throw ValidationError("universe larger than 64 points is not supported");
    for (std::size_t i = 0; i < labels_.size(); ++i) {
        if (!label_ok(labels_[i]))
            throw ValidationError("bad point label '" + labels_[i] +
                                  "' (labels are nonempty, without spaces, commas or braces)");
        auto [it, fresh] = index_.emplace(labels_[i], i);
        (void)it;
        if (!fresh) throw ValidationError("duplicate point label '" + labels_[i] + "'");
    }
}

std::size_t Universe::index_of(const std::string& l) const {
    auto it = index_.find(l);
    if (it == index_.end()) throw ValidationError("unknown point label '" + l + "'");
    return it->second;
}

Mask Universe::full_mask() const {
    return labels_.size() == 64 ? ~Mask{0} : (Mask{1} << labels_.size()) - 1;
}

std::vector<std::size_t> PointSet::members() const {
    std::vector<std::size_t> out;
    Mask m = bits_;
    while (m) {
        out.push_back(static_cast<std::size_t>(std::countr_zero(m)));
        m &= m - 1;
    }
    return out;
}

bool canonical_less(PointSet a, PointSet b) {
    if (a.count() != b.count()) return a.count() < b.count();
    if (a == b) return false;
    // With equal cardinality, the set owning the lowest differing index comes
    // first in member-sequence lexicographic order.
    Mask diff = a.mask() ^ b.mask();
    Mask low = diff & (~diff + 1);
    return (a.mask() & low) != 0;
}

SetFamily::SetFamily(std::vector<PointSet> sets) {
    for (PointSet s : sets) insert(s);
}

void SetFamily::insert(PointSet s) {
    auto it = std::lower_bound(sets_.begin(), sets_.end(), s, canonical_less);
    if (it != sets_.end() && *it == s) return;
    sets_.insert(it, s);
}

bool SetFamily::contains(PointSet s) const {
    auto it = std::lower_bound(sets_.begin(), sets_.end(), s, canonical_less);
    return it != sets_.end() && *it == s;
}

PointSet SetFamily::union_all() const {
    PointSet u;
    for (PointSet s : sets_) u = u | s;
    return u;
}

PointSet SetFamily::intersect_all(PointSet when_empty) const {
    if (sets_.empty()) return when_empty;
    PointSet r = sets_.front();
    for (PointSet s : sets_) r = r & s;
    return r;
}

std::string format_set(const Universe& u, PointSet s) {
    if (s.empty()) return "∅";
    std::string out = "{";
    bool first = true;
    for (std::size_t i : s.members()) {
        if (!first) out += ",";
        out += u.label(i);
        first = false;
    }
    out += "}";
    return out;
}

std::string format_family(const Universe& u, const SetFamily& f) {
    if (f.empty()) return "(none)";
    std::string out;
    for (PointSet s : f) {
        if (!out.empty()) out += ", ";
        out += format_set(u, s);
    }
    return out;
}

}  // namespace gtf
