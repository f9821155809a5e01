// Command-line driver: file-based conversions and the verification suites.
// Exit codes: 0 success / checked-true, 1 checked-false, 2 usage or format
// errors.

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include "symdelta/correspondence.hpp"
#include "symdelta/hopf.hpp"
#include "symdelta/ribbon.hpp"
#include "symdelta/text_io.hpp"
#include "symdelta/verify.hpp"

using namespace symdelta;
using nlohmann::json;

namespace {

constexpr int kExitTrue = 0;
constexpr int kExitFalse = 1;
constexpr int kExitUsage = 2;

std::string slurp(const std::string& path) {
    std::ifstream in(path);
    if (!in)
        throw ParseError("cannot open " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

SetSystem load_dm(const std::string& path) {
    std::istringstream in(slurp(path));
    return parse_set_system(in);
}

LagrangianSubspace load_lagr(const std::string& path) {
    std::istringstream in(slurp(path));
    return parse_lagrangian(in);
}

RibbonGraph load_ribbon(const std::string& path) {
    std::istringstream in(slurp(path));
    return parse_ribbon(in);
}

json family_json(const SetSystem& s) {
    json fam = json::array();
    for (std::uint64_t f : s.feasible()) {
        json one = json::array();
        for (const auto& lab : s.ground().subset_labels(f))
            one.push_back(lab);
        fam.push_back(one);
    }
    return json{{"ground", s.ground().labels()}, {"feasible", fam}};
}

json element_json(const GradedElement& e) {
    json terms = json::array();
    for (const auto& [k, c] : e.terms())
        terms.push_back({{"class", format_class(k)}, {"coefficient", c.str()}});
    return terms;
}

struct Options {
    bool json_output = false;
};

void emit(const Options& opt, const json& machine, const std::string& human) {
    if (opt.json_output)
        std::cout << machine.dump(2) << "\n";
    else
        std::cout << human;
}

int run(int argc, char** argv) {
    CLI::App app{"Lagrangian subspaces over GF(2), binary delta-matroids, ribbon "
                 "graphs and their Hopf algebras"};
    app.require_subcommand(1);
    Options opt;
    std::string format = "text";
    app.add_option("--format", format, "text or json")
        ->check(CLI::IsMember({"text", "json"}));
    app.add_flag("--json", opt.json_output, "shorthand for --format json");
    app.set_help_all_flag("--help-all");

    // dm ------------------------------------------------------------------
    auto* dm = app.add_subcommand("dm", "delta-matroid checks and twists");
    dm->require_subcommand(1);

    std::string dm_file, dm_set;
    auto* dm_sea = dm->add_subcommand("check-sea", "symmetric exchange axiom");
    dm_sea->add_option("file", dm_file)->required();

    auto* dm_bin = dm->add_subcommand("is-binary", "twist of a non-degeneracy "
                                                   "delta-matroid?");
    dm_bin->add_option("file", dm_file)->required();

    auto* dm_twist = dm->add_subcommand("twist", "XOR every feasible set");
    dm_twist->add_option("--set", dm_set, "comma-separated labels")->required();
    dm_twist->add_option("file", dm_file)->required();

    // lagr ----------------------------------------------------------------
    auto* lagr = app.add_subcommand("lagr", "Lagrangian subspace operations");
    lagr->require_subcommand(1);

    int lagr_n = 0;
    std::string lagr_file, lagr_set;
    auto* lagr_enum = lagr->add_subcommand("enum", "all Lagrangian subspaces");
    lagr_enum->add_option("-n", lagr_n, "ground set size (up to 4)")->required();

    auto* lagr_dual = lagr->add_subcommand("dual", "local duality");
    lagr_dual->add_option("--set", lagr_set)->required();
    lagr_dual->add_option("file", lagr_file)->required();

    auto* lagr_graphify = lagr->add_subcommand("graphify", "subset whose local dual "
                                                           "is graphic");
    lagr_graphify->add_option("file", lagr_file)->required();

    // conv ------------------------------------------------------------------
    auto* conv = app.add_subcommand("conv", "conversions along nu");
    conv->require_subcommand(1);
    std::string conv_file;
    auto* conv_l2d = conv->add_subcommand("l2d", "Lagrangian -> delta-matroid");
    conv_l2d->add_option("file", conv_file)->required();
    auto* conv_d2l = conv->add_subcommand("d2l", "delta-matroid -> Lagrangian");
    conv_d2l->add_option("file", conv_file)->required();

    // rib -------------------------------------------------------------------
    auto* rib = app.add_subcommand("rib", "ribbon graph operations");
    rib->require_subcommand(1);
    std::string rib_file, rib_set;
    auto* rib_boundary = rib->add_subcommand("boundary", "boundary components");
    rib_boundary->add_option("file", rib_file)->required();
    auto* rib_rho = rib->add_subcommand("rho", "quasi-tree delta-matroid");
    rib_rho->add_option("file", rib_file)->required();
    auto* rib_pi = rib->add_subcommand("pi", "Lagrangian subspace of the graph");
    rib_pi->add_option("file", rib_file)->required();
    auto* rib_pdual = rib->add_subcommand("pdual", "partial dual");
    rib_pdual->add_option("--set", rib_set, "comma-separated edge labels")->required();
    rib_pdual->add_option("file", rib_file)->required();

    // hopf ------------------------------------------------------------------
    auto* hopf = app.add_subcommand("hopf", "graded Hopf algebra computations");
    hopf->require_subcommand(1);

    std::string hopf_file, hopf_side = "auto", hopf_suite, hopf_sign = "ie";
    int hopf_degree = 3, hopf_n = 2;
    bool hopf_table = false;
    auto* hopf_cop = hopf->add_subcommand("coproduct", "coproduct of a class");
    hopf_cop->add_option("--side", hopf_side, "l, d, or auto by extension");
    hopf_cop->add_option("file", hopf_file)->required();

    auto* hopf_check = hopf->add_subcommand("check", "exhaustive suites");
    hopf_check->add_option("--degree", hopf_degree, "degree budget (up to 3)");
    hopf_check->add_option("--suite", hopf_suite, "bialgebra | numorphism | fourterm")
        ->required();

    auto* hopf_qdim = hopf->add_subcommand("qdim", "four-term quotient dimension");
    hopf_qdim->add_option("--side", hopf_side, "l or d")->required();
    hopf_qdim->add_option("--n", hopf_n, "degree (up to 3)")->required();
    hopf_qdim->add_option("--sign", hopf_sign, "ie (inclusion-exclusion) or alt");
    hopf_qdim->add_flag("--table", hopf_table, "print the full frozen table instead");

    // verify ----------------------------------------------------------------
    auto* ver = app.add_subcommand("verify", "verification suites");
    ver->require_subcommand(1);
    int ver_max_n = 3;
    std::string ver_golden;
    auto* ver_all = ver->add_subcommand("all", "every acceptance suite");
    ver_all->add_option("--max-n", ver_max_n, "size budget (up to 4)");
    ver_all->add_option("--golden", ver_golden, "four-term golden table to compare");

    // Let --json appear after a subcommand as well.
    for (CLI::App* family : app.get_subcommands(nullptr)) {
        family->fallthrough();
        for (CLI::App* leaf : family->get_subcommands(nullptr))
            leaf->fallthrough();
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        app.exit(e);
        return kExitTrue;
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }
    opt.json_output = opt.json_output || format == "json";

    // dm --------------------------------------------------------------------
    if (dm_sea->parsed()) {
        SetSystem s = load_dm(dm_file);
        SeaCheck r = check_sea(s);
        if (r.holds) {
            emit(opt, json{{"holds", true}}, "symmetric exchange axiom holds\n");
            return kExitTrue;
        }
        std::string witness = "counterexample: phi1=" + format_subset(s.ground(), r.phi1) +
                              " phi2=" + format_subset(s.ground(), r.phi2) +
                              " e=" + s.ground().label(r.element);
        emit(opt,
             json{{"holds", false},
                  {"phi1", s.ground().subset_labels(r.phi1)},
                  {"phi2", s.ground().subset_labels(r.phi2)},
                  {"element", s.ground().label(r.element)}},
             witness + "\n");
        return kExitFalse;
    }
    if (dm_bin->parsed()) {
        SetSystem s = load_dm(dm_file);
        BinaryWitness w = is_binary(s);
        if (!w.binary) {
            emit(opt, json{{"binary", false}}, "not a binary delta-matroid\n");
            return kExitFalse;
        }
        std::ostringstream human;
        human << "binary: twist set "
              << (w.twist_set ? format_subset(s.ground(), w.twist_set) : "{}")
              << ", framed graph adjacency:\n"
              << print_matrix(w.graph->adjacency());
        emit(opt,
             json{{"binary", true},
                  {"twist_set", s.ground().subset_labels(w.twist_set)},
                  {"adjacency", print_matrix(w.graph->adjacency())}},
             human.str());
        return kExitTrue;
    }
    if (dm_twist->parsed()) {
        SetSystem s = load_dm(dm_file);
        SetSystem out = twist(s, parse_subset(s.ground(), dm_set));
        emit(opt, family_json(out), print_set_system(out));
        return kExitTrue;
    }

    // lagr ------------------------------------------------------------------
    if (lagr_enum->parsed()) {
        if (lagr_n < 0 || lagr_n > 4)
            throw CLI::ValidationError("-n", "enumeration is capped at n = 4");
        auto list = enumerate_lagrangians(GroundSet::range(lagr_n));
        if (opt.json_output) {
            json arr = json::array();
            for (const auto& l : list)
                arr.push_back(print_lagrangian(l));
            emit(opt, json{{"count", list.size()}, {"subspaces", arr}}, "");
        } else {
            for (const auto& l : list)
                std::cout << print_lagrangian(l) << "\n";
            std::cout << "total " << list.size() << "\n";
        }
        return kExitTrue;
    }
    if (lagr_dual->parsed()) {
        LagrangianSubspace l = load_lagr(lagr_file);
        LagrangianSubspace out = local_dual(l, parse_subset(l.ground(), lagr_set));
        emit(opt, json{{"basis", print_lagrangian(out)}}, print_lagrangian(out));
        return kExitTrue;
    }
    if (lagr_graphify->parsed()) {
        LagrangianSubspace l = load_lagr(lagr_file);
        std::uint64_t s = graphify(l);
        std::string human = s ? format_subset(l.ground(), s) : "{}";
        emit(opt, json{{"subset", l.ground().subset_labels(s)}}, human + "\n");
        return kExitTrue;
    }

    // conv ------------------------------------------------------------------
    if (conv_l2d->parsed()) {
        SetSystem s = nu(load_lagr(conv_file));
        emit(opt, family_json(s), format_family(s) + "\n");
        return kExitTrue;
    }
    if (conv_d2l->parsed()) {
        LagrangianSubspace l = nu_inverse(load_dm(conv_file));
        emit(opt, json{{"basis", print_lagrangian(l)}}, print_lagrangian(l));
        return kExitTrue;
    }

    // rib -------------------------------------------------------------------
    if (rib_boundary->parsed()) {
        int b = boundary_components(load_ribbon(rib_file));
        emit(opt, json{{"boundary_components", b}}, std::to_string(b) + "\n");
        return kExitTrue;
    }
    if (rib_rho->parsed()) {
        SetSystem s = rho(load_ribbon(rib_file)).system();
        emit(opt, family_json(s), print_set_system(s));
        return kExitTrue;
    }
    if (rib_pi->parsed()) {
        LagrangianSubspace l = pi(load_ribbon(rib_file));
        emit(opt, json{{"basis", print_lagrangian(l)}}, print_lagrangian(l));
        return kExitTrue;
    }
    if (rib_pdual->parsed()) {
        RibbonGraph g = load_ribbon(rib_file);
        GroundSet labels = g.edge_ground();
        RibbonGraph out = partial_dual(g, parse_subset(labels, rib_set));
        emit(opt, json{{"ribbon", print_ribbon(out)}}, print_ribbon(out));
        return kExitTrue;
    }

    // hopf ------------------------------------------------------------------
    if (hopf_cop->parsed()) {
        std::string side = hopf_side;
        if (side == "auto") {
            if (hopf_file.ends_with(".lagr"))
                side = "l";
            else if (hopf_file.ends_with(".dm"))
                side = "d";
            else
                throw CLI::ValidationError("--side",
                                           "cannot infer the side from the extension");
        }
        GradedElement x = side == "l"
                              ? GradedElement::basis(lagrangian_class(load_lagr(hopf_file)))
                              : GradedElement::basis(
                                    deltamatroid_class(load_dm(hopf_file)));
        TensorElement d = coproduct(x);
        if (opt.json_output) {
            json arr = json::array();
            for (const auto& [pair, c] : d.terms())
                arr.push_back({{"left", format_class(pair.first)},
                               {"right", format_class(pair.second)},
                               {"coefficient", c.str()}});
            emit(opt, arr, "");
        } else {
            for (const auto& [pair, c] : d.terms())
                std::cout << c << " * " << format_class(pair.first) << " (x) "
                          << format_class(pair.second) << "\n";
        }
        return kExitTrue;
    }
    if (hopf_check->parsed()) {
        if (hopf_degree < 0 || hopf_degree > 3)
            throw CLI::ValidationError("--degree", "pairwise suites are capped at 3");
        verify::SuiteResult r;
        if (hopf_suite == "bialgebra")
            r = verify::hopf_morphism(hopf_degree);
        else if (hopf_suite == "numorphism")
            r = verify::nu_morphism(hopf_degree);
        else if (hopf_suite == "fourterm")
            r = verify::four_term(hopf_degree);
        else
            throw CLI::ValidationError("--suite", "unknown suite " + hopf_suite);
        emit(opt,
             json{{"suite", r.name},
                  {"pass", r.pass},
                  {"detail", r.detail},
                  {"seconds", r.seconds}},
             r.name + (r.pass ? ": pass (" : ": FAIL (") + r.detail + ")\n");
        return r.pass ? kExitTrue : kExitFalse;
    }
    if (hopf_qdim->parsed()) {
        if (hopf_n < 0 || hopf_n > 3)
            throw CLI::ValidationError("--n", "quotient dimensions are capped at 3");
        if (hopf_table) {
            std::cout << verify::four_term_table(hopf_n);
            return kExitTrue;
        }
        Side side = hopf_side == "l" ? Side::lagrangian : Side::deltamatroid;
        if (hopf_side != "l" && hopf_side != "d")
            throw CLI::ValidationError("--side", "expected l or d");
        FourTermSign sign = hopf_sign == "alt" ? FourTermSign::alternating
                                               : FourTermSign::inclusion_exclusion;
        QuotientReport r = quotient_dimension(side, hopf_n, sign);
        std::ostringstream human;
        human << "degree " << r.degree << ": " << r.n_classes << " classes, relation rank "
              << r.relation_rank << ", quotient dimension " << r.quotient_dim << "\n";
        emit(opt,
             json{{"degree", r.degree},
                  {"classes", r.n_classes},
                  {"rank", r.relation_rank},
                  {"quotient_dim", r.quotient_dim}},
             human.str());
        return kExitTrue;
    }

    // verify ------------------------------------------------------------------
    if (ver_all->parsed()) {
        if (ver_max_n < 0 || ver_max_n > 4)
            throw CLI::ValidationError("--max-n", "enumeration sizes are capped at 4");
        std::string golden;
        if (!ver_golden.empty())
            golden = slurp(ver_golden);
        auto results = verify::run_all(ver_max_n, golden);
        bool all = true;
        json arr = json::array();
        for (const auto& r : results) {
            all = all && r.pass;
            if (opt.json_output)
                arr.push_back({{"suite", r.name},
                               {"pass", r.pass},
                               {"detail", r.detail},
                               {"seconds", r.seconds}});
            else
                std::printf("[%s] %-24s %8.3f s  %s\n", r.pass ? "PASS" : "FAIL",
                            r.name.c_str(), r.seconds, r.detail.c_str());
        }
        if (opt.json_output)
            std::cout << arr.dump(2) << "\n";
        else
            std::printf("%s\n", all ? "all suites passed" : "some suites FAILED");
        return all ? kExitTrue : kExitFalse;
    }

    return kExitUsage;
}

} // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const CLI::ValidationError& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const ParseError& e) {
        std::cerr << "format error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
}
