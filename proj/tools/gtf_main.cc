#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "gtf/e_ops.hh"
#include "gtf/f_ops.hh"
#include "gtf/gnet.hh"
#include "gtf/json_io.hh"
#include "gtf/laws.hh"

namespace {

using gtf::Json;

Json labels_json(const gtf::Universe& u, gtf::PointSet a) {
    Json arr = Json::array();
    for (std::size_t i : a.members()) arr.push_back(u.label(i));
    return arr;
}

Json family_json(const gtf::Universe& u, const gtf::SetFamily& fam) {
    Json arr = Json::array();
    for (gtf::PointSet s : fam) arr.push_back(labels_json(u, s));
    return arr;
}

const char* yesno(bool b) { return b ? "yes" : "no"; }

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"finite generalized topological spaces with associating set families"};
    app.require_subcommand(1);

    int exit_code = 0;
    std::string space_path, gnet_path, set_lit, point_lbl, fmt = "text";
    unsigned cap = gtf::kDefaultEnumCap;
    bool use_e = false;

    auto add_space = [&](CLI::App* sub) {
        sub->add_option("space", space_path, "space JSON file")->required();
    };
    auto add_fmt = [&](CLI::App* sub) {
        sub->add_option("--format", fmt, "output format")
            ->check(CLI::IsMember({"text", "json"}));
    };
    auto add_set = [&](CLI::App* sub) {
        sub->add_option("--set", set_lit, "comma-separated point labels, \"\" for the empty set")
            ->required();
    };
    auto add_point = [&](CLI::App* sub) {
        sub->add_option("--point", point_lbl, "point label")->required();
    };
    auto add_cap = [&](CLI::App* sub) {
        sub->add_option("--cap", cap, "universe-size cap for f-open enumeration");
    };
    auto add_gnet = [&](CLI::App* sub) {
        sub->add_option("--gnet", gnet_path, "gnet JSON file")->required();
    };
    auto emit_set = [&](const gtf::Universe& u, gtf::PointSet a, const char* key) {
        if (fmt == "json")
            std::cout << Json{{key, labels_json(u, a)}}.dump(2) << "\n";
        else
            std::cout << gtf::format_set(u, a) << "\n";
    };
    auto emit_family = [&](const gtf::Universe& u, const gtf::SetFamily& fam, const char* key) {
        if (fmt == "json")
            std::cout << Json{{key, family_json(u, fam)}}.dump(2) << "\n";
        else
            std::cout << gtf::format_family(u, fam) << "\n";
    };
    auto emit_bool = [&](bool b, const char* key) {
        if (fmt == "json")
            std::cout << Json{{key, b}}.dump(2) << "\n";
        else
            std::cout << yesno(b) << "\n";
    };

    {
        auto* sub = app.add_subcommand("validate", "check a space file, listing every problem");
        add_space(sub);
        add_fmt(sub);
        sub->callback([&] {
            gtf::GtfSpace s = gtf::load_raw_space_file(space_path);
            gtf::ValidationReport rep = gtf::validate(s);
            if (fmt == "json")
                std::cout << Json{{"valid", rep.pass}, {"problems", rep.problems}}.dump(2) << "\n";
            else
                std::cout << rep.to_string() << "\n";
            if (!rep.pass) exit_code = 2;
        });
    }

    struct SetOp {
        const char* name;
        const char* desc;
        gtf::PointSet (*fn)(const gtf::GtfSpace&, gtf::PointSet);
    };
    for (const SetOp& op : {SetOp{"int", "interior of a set", gtf::interior},
                            SetOp{"cl", "closure of a set", gtf::closure},
                            SetOp{"fint", "f-interior of a set", gtf::f_interior},
                            SetOp{"fcl", "f-closure of a set", gtf::f_closure}}) {
        auto* sub = app.add_subcommand(op.name, op.desc);
        add_space(sub);
        add_set(sub);
        add_fmt(sub);
        auto fn = op.fn;
        sub->callback([&, fn] {
            gtf::GtfSpace s = gtf::load_space_file(space_path);
            gtf::PointSet a = gtf::parse_set_literal(s.universe, set_lit);
            emit_set(s.universe, fn(s, a), "set");
        });
    }

    {
        auto* sub = app.add_subcommand("classify", "openness and closedness flags of a set");
        add_space(sub);
        add_set(sub);
        add_fmt(sub);
        sub->callback([&] {
            gtf::GtfSpace s = gtf::load_space_file(space_path);
            gtf::PointSet a = gtf::parse_set_literal(s.universe, set_lit);
            gtf::OpennessFlags o = gtf::classify_openness(s, a);
            gtf::ClosednessFlags c = gtf::classify_closedness(s, a);
            if (fmt == "json") {
                std::cout << Json{{"f_open", o.f_open},     {"df_open", o.df_open},
                                  {"uf_open", o.uf_open},   {"f_closed", c.f_closed},
                                  {"df_closed", c.df_closed}, {"uf_closed", c.uf_closed}}
                                 .dump(2)
                          << "\n";
            } else {
                std::cout << "f-open: " << yesno(o.f_open) << "\n"
                          << "df-open: " << yesno(o.df_open) << "\n"
                          << "uf-open: " << yesno(o.uf_open) << "\n"
                          << "f-closed: " << yesno(c.f_closed) << "\n"
                          << "df-closed: " << yesno(c.df_closed) << "\n"
                          << "uf-closed: " << yesno(c.uf_closed) << "\n";
            }
        });
    }

    {
        auto* sub = app.add_subcommand("fopen", "enumerate the f-open sets");
        add_space(sub);
        add_cap(sub);
        add_fmt(sub);
        sub->callback([&] {
            gtf::GtfSpace s = gtf::load_space_file(space_path);
            emit_family(s.universe, gtf::enumerate_f_open(s, cap), "f_open");
        });
    }

    {
        auto* sub = app.add_subcommand("eopen", "enumerate the e-open sets");
        add_space(sub);
        add_cap(sub);
        add_fmt(sub);
        sub->callback([&] {
            gtf::GtfSpace s = gtf::load_space_file(space_path);
            emit_family(s.universe, gtf::e_open_family(s, cap).mu, "e_open");
        });
    }

    {
        auto* sub = app.add_subcommand("eneigh", "e-neighbourhoods of a point");
        add_space(sub);
        add_point(sub);
        add_cap(sub);
        add_fmt(sub);
        sub->callback([&] {
            gtf::GtfSpace s = gtf::load_space_file(space_path);
            std::size_t w = s.universe.index_of(point_lbl);
            emit_family(s.universe, gtf::e_neighbourhoods(s, w, cap), "e_neighbourhoods");
        });
    }

    {
        auto* sub = app.add_subcommand("ft1", "pairwise separation through the families");
        add_space(sub);
        add_fmt(sub);
        sub->callback([&] {
            emit_bool(gtf::is_ft1(gtf::load_space_file(space_path)), "ft1");
        });
    }

    {
        auto* sub = app.add_subcommand("et1", "pairwise separation through e-neighbourhoods");
        add_space(sub);
        add_cap(sub);
        add_fmt(sub);
        sub->callback([&] {
            emit_bool(gtf::is_et1(gtf::load_space_file(space_path), cap), "et1");
        });
    }

    {
        auto* sub = app.add_subcommand("converge", "does the gnet converge to the point");
        add_space(sub);
        add_gnet(sub);
        add_point(sub);
        add_fmt(sub);
        sub->callback([&] {
            gtf::GtfSpace s = gtf::load_space_file(space_path);
            gtf::Gnet g = gtf::load_gnet_file(gnet_path, s.universe);
            emit_bool(gtf::converges(s, g, s.universe.index_of(point_lbl)), "converges");
        });
    }

    {
        auto* sub = app.add_subcommand("econverge", "does the gnet e-converge to the point");
        add_space(sub);
        add_gnet(sub);
        add_point(sub);
        add_cap(sub);
        add_fmt(sub);
        sub->callback([&] {
            gtf::GtfSpace s = gtf::load_space_file(space_path);
            gtf::Gnet g = gtf::load_gnet_file(gnet_path, s.universe);
            emit_bool(gtf::e_converges(s, g, s.universe.index_of(point_lbl), cap), "e_converges");
        });
    }

    {
        auto* sub = app.add_subcommand("limits", "all limits of a gnet");
        add_space(sub);
        add_gnet(sub);
        add_cap(sub);
        add_fmt(sub);
        sub->add_flag("--e", use_e, "use e-convergence");
        sub->callback([&] {
            gtf::GtfSpace s = gtf::load_space_file(space_path);
            gtf::Gnet g = gtf::load_gnet_file(gnet_path, s.universe);
            emit_set(s.universe, use_e ? gtf::e_limits(s, g, cap) : gtf::limits(s, g), "limits");
        });
    }

    {
        auto* sub = app.add_subcommand("limit-points", "all limit points of a gnet");
        add_space(sub);
        add_gnet(sub);
        add_cap(sub);
        add_fmt(sub);
        sub->add_flag("--e", use_e, "use the e-level notion");
        sub->callback([&] {
            gtf::GtfSpace s = gtf::load_space_file(space_path);
            gtf::Gnet g = gtf::load_gnet_file(gnet_path, s.universe);
            emit_set(s.universe, use_e ? gtf::e_limit_points(s, g, cap) : gtf::limit_points(s, g),
                     "limit_points");
        });
    }

    {
        auto* sub = app.add_subcommand(
            "witness", "build a gnet inside the set converging to the point, when one exists");
        add_space(sub);
        add_point(sub);
        add_set(sub);
        add_fmt(sub);
        sub->callback([&] {
            gtf::GtfSpace s = gtf::load_space_file(space_path);
            std::size_t w = s.universe.index_of(point_lbl);
            gtf::PointSet a = gtf::parse_set_literal(s.universe, set_lit);
            std::optional<gtf::Gnet> g = gtf::witness_gnet(s, w, a);
            if (fmt == "json") {
                Json j{{"found", g.has_value()}};
                if (g) j["gnet"] = gtf::gnet_to_json(*g, s.universe);
                std::cout << j.dump(2) << "\n";
            } else if (g) {
                std::cout << "witness gnet:\n" << gtf::gnet_to_json(*g, s.universe).dump(2) << "\n";
            } else {
                std::cout << "no witness: the point is outside the f-closure of the set\n";
            }
        });
    }

    {
        auto* sub = app.add_subcommand("example", "emit a family-of-odd-sets example space");
        auto name = std::make_shared<std::string>();
        auto k = std::make_shared<unsigned>(0);
        auto output = std::make_shared<std::string>();
        sub->add_option("--name", *name, "base, prime, double_prime, or triple_prime")->required();
        sub->add_option("--k", *k, "half the universe size")->required();
        sub->add_option("--output", *output, "write to this file instead of stdout");
        sub->callback([name, k, output] {
            gtf::GtfSpace s = gtf::example_space(gtf::parse_variant(*name), *k);
            std::string body = gtf::space_to_json(s).dump(2);
            if (output->empty()) {
                std::cout << body << "\n";
            } else {
                std::ofstream out(*output);
                if (!out) throw gtf::ValidationError("cannot write '" + *output + "'");
                out << body << "\n";
            }
        });
    }

    {
        auto* sub = app.add_subcommand("laws", "run the whole law suite over sampled spaces");
        auto par = std::make_shared<gtf::SuiteParams>();
        auto only = std::make_shared<std::vector<std::string>>();
        sub->add_option("--size", par->space.max_universe_size, "largest random universe size");
        sub->add_option("--samples", par->random_spaces, "number of random spaces");
        sub->add_option("--seed", par->space.seed, "master seed");
        sub->add_option("--exhaustive", par->exhaustive_max,
                        "also run every space of universe size up to this (max 3)");
        sub->add_option("--gnets", par->random_gnets_per_space, "random gnets per space");
        sub->add_option("--chain-len", par->chain_gnet_max_len, "include all gnets over chains up to this length");
        sub->add_option("--families", par->family_samples, "sampled set families per space");
        sub->add_option("--pairs", par->pair_samples, "sampled witness queries per space");
        sub->add_option("--witness-cap", par->witness_cap, "recorded witnesses per law");
        sub->add_option("--only", *only, "restrict to these law ids")->delimiter(',');
        add_fmt(sub);
        sub->callback([&, par, only] {
            std::vector<gtf::LawReport> reports = gtf::run_laws(*par, *only);
            if (fmt == "json")
                std::cout << gtf::reports_to_json(reports, *par).dump(2) << "\n";
            else
                std::cout << gtf::reports_to_text(reports);
            if (!gtf::all_ok(reports)) exit_code = 1;
        });
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? 0 : 2;
    } catch (const gtf::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return exit_code;
}
