// gog: graphs of groups, their twist automorphisms, and Out(G) structure
// reports for JSJ-labeled inputs.
//
// Exit codes: 0 success, 1 domain refusal (hypothesis gate or failing check),
// 2 input error.

#include <iostream>
#include <variant>

#include "CLI11.hpp"
#include "json.hpp"

#include "gog/autospec.hpp"
#include "gog/jsj.hpp"
#include "gog/parse.hpp"
#include "gog/twist_lattice.hpp"

namespace {

using namespace gog;

constexpr int kOk = 0;
constexpr int kRefused = 1;
constexpr int kInputError = 2;

int cmd_validate(const std::string& path) {
    GraphOfGroups g = load_graph_file(path);
    ValidationReport rep = validate(g);
    std::cout << rep.to_text();
    return rep.all_pass_or_unknown() ? kOk : kRefused;
}

int cmd_present(const std::string& path) {
    GraphOfGroups g = load_graph_file(path);
    FundamentalPresentation p = fundamental_presentation(g);
    std::cout << presentation_to_text(g, p);
    return kOk;
}

int cmd_twists(const std::string& path, bool matrix, bool kernel, std::optional<int> zg_rank,
               bool machine) {
    GraphOfGroups g = load_graph_file(path);
    auto result = twist_group_structure(g);
    nlohmann::json j;
    j["graph"] = g.name;
    if (std::holds_alternative<AbelianStructure>(result)) {
        const AbelianStructure& st = std::get<AbelianStructure>(result);
        if (machine) {
            j["free_rank"] = st.free_rank;
            j["factors"] = st.factors;
            j["display"] = st.display();
        } else {
            std::cout << "T = " << st.display() << '\n';
        }
    } else {
        const SymbolicTwists& st = std::get<SymbolicTwists>(result);
        if (machine) {
            j["symbolic"] = true;
            j["reason"] = st.reason;
            j["generators"] = st.generators;
            j["relations"] = st.relations;
        } else {
            std::cout << st.to_text();
            std::cout << "caveat: numeric structure unavailable, symbolic presentation shown\n";
        }
    }
    if (matrix) {
        auto built = build_j_matrix(g);
        if (std::holds_alternative<TwistLattice>(built)) {
            const TwistLattice& lat = std::get<TwistLattice>(built);
            if (machine) j["matrix_dump"] = lat.dump();
            else std::cout << lat.dump();
            for (const std::string& c : lat.caveats) {
                if (!machine) std::cout << "caveat: " << c << '\n';
            }
        }
    }
    if (kernel) {
        KernelCheck kc = kernel_check(g, zg_rank);
        if (machine) {
            j["kernel_rank"] = kc.kernel_rank;
            j["declared_center_rank"] = kc.declared_center_rank;
            j["kernel_consistent"] = kc.consistent;
        } else {
            std::cout << "ker j rank = " << kc.kernel_rank
                      << ", declared Z(G) rank = " << kc.declared_center_rank << ": "
                      << (kc.consistent ? "consistent" : "INCONSISTENT") << '\n';
        }
        if (!kc.consistent) {
            if (machine) std::cout << j.dump(2) << '\n';
            return kRefused;
        }
    }
    if (machine) std::cout << j.dump(2) << '\n';
    return kOk;
}

int cmd_report(const std::string& path, bool machine) {
    GraphOfGroups g = load_graph_file(path);
    OutReport rep = structure_report(g);
    std::cout << (machine ? rep.to_machine(g) : rep.to_text(g));
    return kOk;
}

int cmd_apply(const std::string& path, const std::string& autospec,
              const std::optional<std::string>& word) {
    GraphOfGroups g = load_graph_file(path);
    FundamentalPresentation p = fundamental_presentation(g);
    Automorphism a = parse_autospec(autospec, g, p);
    if (word) {
        Word w = parse_presentation_word(*word, g, p);
        std::cout << format_word(apply(g, p, a, w), g.symbols) << '\n';
    } else {
        for (int sym : p.generators)
            std::cout << g.symbols.name(sym) << " -> "
                      << format_word(normal_form(g, p, a.image_of(sym)), g.symbols) << '\n';
    }
    return kOk;
}

int cmd_check(const std::string& path, bool relations, bool commute, bool triangle,
              const std::vector<std::string>& autospecs) {
    GraphOfGroups g = load_graph_file(path);
    FundamentalPresentation p = fundamental_presentation(g);
    bool all_ok = true;
    bool ran = false;

    if (relations) {
        ran = true;
        for (int v : g.vertices_sorted()) {
            const VertexData& vd = g.vertices[static_cast<size_t>(v)];
            auto center = vd.oracle.center(g.symbols);
            if (!center) {
                std::cout << "vertex " << vd.id << ": center unknown, skipped\n";
                continue;
            }
            for (const Word& z : center->basis) {
                bool ok = check_vertex_relation(g, p, v, z);
                std::cout << "vertex " << vd.id << " z=" << format_word(z, g.symbols) << ": "
                          << (ok ? "inner PASS" : "NOT INNER FAIL") << '\n';
                all_ok = all_ok && ok;
            }
        }
        for (int e : g.edges_sorted()) {
            const EdgeData& ed = g.edges[static_cast<size_t>(e)];
            auto center = ed.oracle.center(g.symbols);
            if (!center) {
                std::cout << "edge " << ed.id << ": center unknown, skipped\n";
                continue;
            }
            for (const Word& z : center->basis) {
                bool ok = check_edge_relation(g, p, e, z);
                std::cout << "edge " << ed.id << " z=" << format_word(z, g.symbols) << ": "
                          << (ok ? "inner PASS" : "NOT INNER FAIL") << '\n';
                all_ok = all_ok && ok;
            }
        }
    }

    if (commute) {
        ran = true;
        // Stable-letter twists by the first centralizer basis element, both
        // orders compared representative-by-representative.
        std::vector<std::pair<EdgeEnd, Word>> twists;
        for (int e : p.letters)
            for (bool at_to : {false, true}) {
                EdgeEnd end{e, at_to};
                CentralizerResult c = centralizer_of_edge_image(g, end, false);
                if (c.desc && !c.desc->basis.empty()) twists.push_back({end, c.desc->basis[0]});
            }
        for (size_t i = 0; i < twists.size(); ++i)
            for (size_t j = i + 1; j < twists.size(); ++j) {
                Automorphism a = twist(g, p, twists[i].first, twists[i].second);
                Automorphism b = twist(g, p, twists[j].first, twists[j].second);
                Automorphism ab = compose(g, p, a, b);
                Automorphism ba = compose(g, p, b, a);
                bool ok = true;
                for (int sym : p.generators)
                    if (words_equal(g, p, ab.image_of(sym), ba.image_of(sym)) != Tri::Yes)
                        ok = false;
                std::cout << "commute "
                          << g.edges[static_cast<size_t>(twists[i].first.edge)].id
                          << (twists[i].first.at_to ? "@to" : "@from") << " vs "
                          << g.edges[static_cast<size_t>(twists[j].first.edge)].id
                          << (twists[j].first.at_to ? "@to" : "@from") << ": "
                          << (ok ? "PASS" : "FAIL") << '\n';
                all_ok = all_ok && ok;
            }
        if (twists.size() < 2) std::cout << "commute: fewer than two stable-letter twists\n";
    }

    if (triangle) {
        ran = true;
        if (autospecs.empty()) {
            std::cout << "triangle: supply extension data with --auto\n";
            return kInputError;
        }
        for (const std::string& spec : autospecs) {
            Automorphism a = parse_autospec(spec, g, p);
            const auto* ext = std::get_if<ExtensionProv>(&a.prov);
            if (!ext) {
                std::cout << "triangle: '" << spec << "' is not a single extension\n";
                return kInputError;
            }
            int v = ext->data.vertex;
            bool ok = true;
            RhoResult rho = rho_restriction(g, p, a, v);
            if (rho.ok != Tri::Yes) ok = false;
            else {
                const VertexData& vd = g.vertices[static_cast<size_t>(v)];
                for (size_t i = 0; i < vd.oracle.gens.size(); ++i)
                    if (vd.oracle.equal(rho.images[i], ext->data.beta[i]) != Tri::Yes) ok = false;
            }
            for (size_t w = 0; w < g.vertices.size() && ok; ++w) {
                if (static_cast<int>(w) == v) continue;
                RhoResult r2 = rho_restriction(g, p, a, static_cast<int>(w));
                if (r2.ok != Tri::Yes) {
                    ok = false;
                    break;
                }
                const VertexData& wd = g.vertices[w];
                for (size_t i = 0; i < wd.oracle.gens.size(); ++i)
                    if (wd.oracle.equal(r2.images[i], Word::letter(wd.oracle.gens[i])) != Tri::Yes)
                        ok = false;
            }
            std::cout << "triangle " << g.vertices[static_cast<size_t>(v)].id << ": "
                      << (ok ? "rho o lambda = pi PASS" : "FAIL") << '\n';
            all_ok = all_ok && ok;
        }
    }

    if (!ran) {
        std::cout << "check: choose --relations, --commute or --triangle\n";
        return kInputError;
    }
    return all_ok ? kOk : kRefused;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"graphs of groups: twists, automorphisms and Out(G) reports"};
    app.require_subcommand(1);

    std::string path;
    bool machine = false, matrix = false, kernel = false;
    std::optional<int> zg_rank;
    std::string autospec;
    std::optional<std::string> word;
    bool relations = false, commute = false, triangle = false;
    std::vector<std::string> autospecs;

    CLI::App* validate_cmd = app.add_subcommand("validate", "structural validation report");
    validate_cmd->add_option("file", path)->required();

    CLI::App* present_cmd = app.add_subcommand("present", "fundamental group presentation");
    present_cmd->add_option("file", path)->required();

    CLI::App* twists_cmd = app.add_subcommand("twists", "structure of the group of twists");
    twists_cmd->add_option("file", path)->required();
    twists_cmd->add_flag("--matrix", matrix, "dump the labeled j-matrix");
    twists_cmd->add_flag("--kernel-check", kernel, "compare ker j with the declared Z(G) rank");
    twists_cmd->add_option("--zg-rank", zg_rank, "declared rank of Z(G)");
    twists_cmd->add_flag("--machine", machine, "JSON output");

    CLI::App* report_cmd = app.add_subcommand("report", "Out(G) structure report");
    report_cmd->add_option("file", path)->required();
    report_cmd->add_flag("--machine", machine, "JSON output");

    CLI::App* apply_cmd = app.add_subcommand("apply", "apply an automorphism");
    apply_cmd->add_option("file", path)->required();
    apply_cmd->add_option("--auto", autospec, "autospec")->required();
    apply_cmd->add_option("--word", word, "word to map (default: all generators)");

    CLI::App* check_cmd = app.add_subcommand("check", "verify structural properties");
    check_cmd->add_option("file", path)->required();
    check_cmd->add_flag("--relations", relations, "vertex and edge relations are inner");
    check_cmd->add_flag("--commute", commute, "twists around distinct edges commute");
    check_cmd->add_flag("--triangle", triangle, "rho o lambda = pi on supplied extensions");
    check_cmd->add_option("--auto", autospecs, "extension autospec(s) for --triangle");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) ? kInputError : kOk;
    }

    try {
        if (validate_cmd->parsed()) return cmd_validate(path);
        if (present_cmd->parsed()) return cmd_present(path);
        if (twists_cmd->parsed()) return cmd_twists(path, matrix, kernel, zg_rank, machine);
        if (report_cmd->parsed()) return cmd_report(path, machine);
        if (apply_cmd->parsed()) return cmd_apply(path, autospec, word);
        if (check_cmd->parsed()) return cmd_check(path, relations, commute, triangle, autospecs);
    } catch (const gog::ParseError& e) {
        std::cerr << "input error: " << e.what() << '\n';
        return kInputError;
    } catch (const gog::HypothesisError& e) {
        std::cerr << "refused: " << e.what() << '\n';
        return kRefused;
    } catch (const gog::DomainError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kRefused;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kInputError;
    }
    return kOk;
}
