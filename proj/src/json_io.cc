#include "gtf/json_io.hh"

#include <fstream>

namespace gtf {

namespace {

PointSet set_from_json(const Json& j, const Universe& u) {
    if (!j.is_array()) throw ValidationError("a set must be an array of point labels");
    PointSet out;
    for (const auto& e : j) {
        if (!e.is_string()) throw ValidationError("point labels must be strings");
        std::size_t i = u.index_of(e.get<std::string>());
        if (out.contains(i))
            throw ValidationError("duplicate label '" + e.get<std::string>() + "' in a set");
        out = out.with(i);
    }
    return out;
}

SetFamily family_from_json(const Json& j, const Universe& u) {
    if (!j.is_array()) throw ValidationError("a family must be an array of sets");
    SetFamily out;
    for (const auto& e : j) out.insert(set_from_json(e, u));
    return out;
}

Json set_to_json(PointSet s, const Universe& u) {
    Json out = Json::array();
    for (std::size_t i : s.members()) out.push_back(u.label(i));
    return out;
}

Json family_to_json(const SetFamily& f, const Universe& u) {
    Json out = Json::array();
    for (PointSet s : f) out.push_back(set_to_json(s, u));
    return out;
}

}  // namespace

GtfSpace raw_space_from_json(const Json& j) {
    if (!j.is_object()) throw ValidationError("space file must hold a JSON object");
    if (!j.contains("universe")) throw ValidationError("space file lacks \"universe\"");
    std::vector<std::string> labels;
    for (const auto& e : j.at("universe")) {
        if (!e.is_string()) throw ValidationError("universe labels must be strings");
        labels.push_back(e.get<std::string>());
    }
    Universe u{std::move(labels)};

    bool has_mu = j.contains("mu");
    bool has_gen = j.contains("mu_generators");
    if (has_mu == has_gen)
        throw ValidationError("space file needs exactly one of \"mu\" and \"mu_generators\"");
    GeneralizedTopology top;
    if (has_gen) {
        top = build_topology(u, family_from_json(j.at("mu_generators"), u));
    } else {
        top.mu = family_from_json(j.at("mu"), u);
    }

    GtfSpace s{std::move(u), std::move(top), {}};
    s.assoc.resize(s.universe.size());
    PointSet carrier = s.carrier();
    std::vector<bool> given(s.universe.size(), false);
    if (j.contains("assoc")) {
        if (!j.at("assoc").is_object())
            throw ValidationError("\"assoc\" must map point labels to families");
        for (const auto& [key, val] : j.at("assoc").items()) {
            std::size_t w = s.universe.index_of(key);
            s.assoc[w] = family_from_json(val, s.universe);
            given[w] = true;
        }
    }
    // carrier points not listed get their forced families; listed ones are
    // kept as supplied so that validate() reports any conflict
    for (std::size_t w = 0; w < s.universe.size(); ++w) {
        if (carrier.contains(w) && !given[w]) {
            SetFamily forced;
            for (PointSet x : s.topology.mu)
                if (x.contains(w)) forced.insert(x);
            s.assoc[w] = std::move(forced);
        }
    }
    return s;
}

GtfSpace space_from_json(const Json& j) {
    GtfSpace s = raw_space_from_json(j);
    ensure_valid(s);
    return s;
}

Json space_to_json(const GtfSpace& s) {
    Json j;
    Json uni = Json::array();
    for (std::size_t i = 0; i < s.universe.size(); ++i) uni.push_back(s.universe.label(i));
    j["universe"] = std::move(uni);
    j["mu"] = family_to_json(s.topology.mu, s.universe);
    Json assoc = Json::object();
    PointSet carrier = s.carrier();
    for (std::size_t w = 0; w < s.universe.size(); ++w) {
        if (!carrier.contains(w) && !s.assoc[w].empty())
            assoc[s.universe.label(w)] = family_to_json(s.assoc[w], s.universe);
    }
    if (!assoc.empty()) j["assoc"] = std::move(assoc);
    return j;
}

Gnet gnet_from_json(const Json& j, const Universe& u) {
    if (!j.is_object()) throw ValidationError("gnet file must hold a JSON object");
    if (!j.contains("elements") || !j.contains("leq") || !j.contains("map"))
        throw ValidationError("gnet file needs \"elements\", \"leq\" and \"map\"");
    std::vector<std::string> labels;
    for (const auto& e : j.at("elements")) {
        if (!e.is_string()) throw ValidationError("gnet element labels must be strings");
        labels.push_back(e.get<std::string>());
    }
    std::map<std::string, std::size_t> idx;
    for (std::size_t i = 0; i < labels.size(); ++i) idx.emplace(labels[i], i);
    std::vector<std::pair<std::size_t, std::size_t>> pairs;
    for (const auto& e : j.at("leq")) {
        if (!e.is_array() || e.size() != 2 || !e[0].is_string() || !e[1].is_string())
            throw ValidationError("\"leq\" entries must be [lower, upper] label pairs");
        auto a = idx.find(e[0].get<std::string>());
        auto b = idx.find(e[1].get<std::string>());
        if (a == idx.end() || b == idx.end())
            throw ValidationError("\"leq\" mentions an element that is not listed");
        pairs.emplace_back(a->second, b->second);
    }
    bool covers = j.value("covers", false);
    auto poset = covers ? std::make_shared<const FinitePoset>(
                              FinitePoset::from_covers(std::move(labels), pairs))
                        : std::make_shared<const FinitePoset>(
                              FinitePoset(std::move(labels), pairs));

    std::vector<std::size_t> values(poset->size());
    std::vector<bool> seen(poset->size(), false);
    for (const auto& [key, val] : j.at("map").items()) {
        std::size_t e = poset->index_of(key);
        if (!val.is_string()) throw ValidationError("\"map\" values must be point labels");
        values[e] = u.index_of(val.get<std::string>());
        seen[e] = true;
    }
    for (std::size_t e = 0; e < poset->size(); ++e)
        if (!seen[e])
            throw ValidationError("\"map\" lacks a value for element '" + poset->label(e) + "'");
    return Gnet{std::move(poset), std::move(values)};
}

Json gnet_to_json(const Gnet& g, const Universe& u) {
    Json j;
    Json elems = Json::array();
    for (std::size_t i = 0; i < g.domain->size(); ++i) elems.push_back(g.domain->label(i));
    j["elements"] = std::move(elems);
    Json leq = Json::array();
    for (auto [a, b] : g.domain->relation_pairs())
        leq.push_back(Json::array({g.domain->label(a), g.domain->label(b)}));
    j["leq"] = std::move(leq);
    Json map = Json::object();
    for (std::size_t i = 0; i < g.domain->size(); ++i)
        map[g.domain->label(i)] = u.label(g.values[i]);
    j["map"] = std::move(map);
    return j;
}

Json load_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ValidationError("cannot open '" + path + "'");
    Json j;
    try {
        in >> j;
    } catch (const Json::parse_error& e) {
        throw ValidationError("cannot parse '" + path + "': " + e.what());
    }
    return j;
}

GtfSpace load_space_file(const std::string& path) { return space_from_json(load_json_file(path)); }
GtfSpace load_raw_space_file(const std::string& path) {
    return raw_space_from_json(load_json_file(path));
}
Gnet load_gnet_file(const std::string& path, const Universe& u) {
    return gnet_from_json(load_json_file(path), u);
}

PointSet parse_set_literal(const Universe& u, const std::string& literal) {
    PointSet out;
    if (literal.empty()) return out;
    std::size_t start = 0;
    while (true) {
        std::size_t comma = literal.find(',', start);
        std::string label = literal.substr(start, comma - start);
        out = out.with(u.index_of(label));
        if (comma == std::string::npos) break;
        start = comma + 1;
    }
    return out;
}

}  // namespace gtf
