#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "dyckt/fweight.hpp"
#include "dyckt/json_io.hpp"
#include "dyckt/paren.hpp"
#include "dyckt/render.hpp"
#include "dyckt/verify.hpp"

using namespace dyckt;

namespace {

Node parse_node(const std::string& text)
{
    auto comma = text.find(',');
    if (comma == std::string::npos)
        throw ParseError("expected node as \"a,b\"");
    return {std::stoi(text.substr(0, comma)), std::stoi(text.substr(comma + 1))};
}

int run_tilings(const std::string& action, const std::string& outer_s,
                const std::string& inner_s, const std::string& filter, bool q, bool as_json,
                bool ascii, int cap)
{
    Partition outer = Partition::parse(outer_s);
    Partition inner = Partition::parse(inner_s);
    if (!outer.contains(inner)) {
        if (as_json)
            std::cout << json{{"count", 0}, {"tilings", json::array()}}.dump(2) << "\n";
        else
            std::cout << "0\n";
        return 0;
    }
    SkewShape shape(outer, inner);
    auto keep = [&](const Tiling& t) {
        if (filter == "ci")
            return is_cover_inclusive(t);
        if (filter == "ce")
            return is_cover_expansive(t, Side::Both);
        return true;
    };
    std::vector<Tiling> kept;
    for (const Tiling& t : enumerate_tilings(shape, cap))
        if (keep(t))
            kept.push_back(t);

    if (action == "count") {
        if (q) {
            QPoly p;
            for (const Tiling& t : kept) {
                int k = t.tile_count();
                if (k >= static_cast<int>(p.c.size()))
                    p.c.resize(k + 1, 0);
                ++p.c[k];
            }
            p.normalize();
            if (as_json)
                std::cout << json{{"count", kept.size()}, {"qpoly", p.c}}.dump(2) << "\n";
            else
                std::cout << p.str() << "\n";
        } else if (as_json) {
            std::cout << json{{"count", kept.size()}}.dump(2) << "\n";
        } else {
            std::cout << kept.size() << "\n";
        }
        return 0;
    }
    if (as_json) {
        json arr = json::array();
        for (const Tiling& t : kept)
            arr.push_back(to_json(t));
        std::cout << json{{"count", kept.size()}, {"tilings", arr}}.dump(2) << "\n";
    } else {
        for (size_t i = 0; i < kept.size(); ++i) {
            std::cout << "# " << i + 1 << "\n";
            if (ascii) {
                std::cout << render(kept[i]);
            } else {
                for (const Tile& tile : kept[i].tiles()) {
                    for (Node n : tile.path)
                        std::cout << "(" << n.a << "," << n.b << ")";
                    std::cout << "\n";
                }
            }
        }
    }
    return 0;
}

int run_matrix(int f, int g, const std::string& which, bool q, bool as_json, bool csv)
{
    auto emit_int = [&](const IntMatrix& m) {
        if (as_json)
            std::cout << to_json(m).dump(2) << "\n";
        else if (csv)
            std::cout << to_csv(m);
        else {
            for (int r = 0; r < m.dim(); ++r) {
                for (int c = 0; c < m.dim(); ++c)
                    std::cout << (c ? " " : "") << m.entries[r][c];
                std::cout << "\n";
            }
        }
    };
    auto emit_poly = [&](const PolyMatrix& m) {
        if (as_json)
            std::cout << to_json(m).dump(2) << "\n";
        else if (csv)
            std::cout << to_csv(m);
        else {
            for (int r = 0; r < m.dim(); ++r) {
                for (int c = 0; c < m.dim(); ++c)
                    std::cout << (c ? " | " : "") << m.entries[r][c].str();
                std::cout << "\n";
            }
        }
    };
    if (q) {
        PolyMatrix m;
        if (which == "N")
            m = matrix_Nq(f, g);
        else if (which == "P")
            m = matrix_Pq(f, g);
        else
            m = matrix_Nq(f, g) * matrix_Pq(f, g);
        emit_poly(m);
    } else {
        IntMatrix m;
        if (which == "N")
            m = matrix_N(f, g);
        else if (which == "P")
            m = matrix_P(f, g);
        else
            m = matrix_N(f, g) * matrix_P(f, g);
        emit_int(m);
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv)
{
    CLI::App app{"exact Dyck-tiling combinatorics and homogeneous Garnir elements"};
    app.require_subcommand(1);
    app.fallthrough();
    bool as_json = false;
    app.add_flag("--json", as_json, "emit JSON instead of text");

    // tilings
    auto* tilings = app.add_subcommand("tilings", "enumerate or count Dyck tilings");
    std::string action, outer_s, inner_s = "()", filter;
    bool tq = false, ascii = false;
    int cap = 24;
    tilings->add_option("action", action, "count or list")
        ->check(CLI::IsMember({"count", "list"}))
        ->required();
    tilings->add_option("--outer", outer_s, "outer partition")->required();
    tilings->add_option("--inner", inner_s, "inner partition");
    tilings->add_option("--filter", filter, "restrict to ci or ce tilings")
        ->check(CLI::IsMember({"ci", "ce"}));
    tilings->add_flag("--q", tq, "report the tile-count polynomial");
    tilings->add_flag("--ascii", ascii, "draw each tiling");
    tilings->add_option("--cap", cap, "enumeration cell cap");

    // matrix
    auto* matrix = app.add_subcommand("matrix", "change-of-basis matrices");
    int mf = 1, mg = 1;
    std::string which = "product";
    bool mq = false, csv = false;
    matrix->add_option("--f", mf, "box width")->required();
    matrix->add_option("--g", mg, "box height")->required();
    matrix->add_option("--which", which, "N, P or product")
        ->check(CLI::IsMember({"N", "P", "product"}));
    matrix->add_flag("--q", mq, "q-refined entries");
    matrix->add_flag("--csv", csv, "emit CSV with box labels");

    // fp
    auto* fp = app.add_subcommand("fp", "recursive weight of a partition");
    std::string fp_lambda;
    bool hook = false;
    fp->add_option("--lambda", fp_lambda, "partition")->required();
    fp->add_flag("--hook", hook, "evaluate through the hook product");

    // paren
    auto* paren = app.add_subcommand("paren", "boundary parenthesis sequence");
    std::string pl;
    bool pairs = false;
    paren->add_option("--lambda", pl, "partition")->required();
    paren->add_flag("--pairs", pairs, "number the matched pairs");

    // module
    auto* module = app.add_subcommand("module", "permutation-module checks");
    auto* module_verify = module->add_subcommand("verify", "verify the basis identities");
    int vf = 2, vg = 2;
    module_verify->add_option("--f", vf, "box width")->required();
    module_verify->add_option("--g", vg, "box height")->required();

    // garnir
    auto* garnir = app.add_subcommand("garnir", "modified Garnir element");
    std::string pi_s, node_s;
    int ge = 2, gkappa = 0;
    bool classical = false;
    garnir->add_option("--pi", pi_s, "partition")->required();
    garnir->add_option("--node", node_s, "Garnir node as a,b")->required();
    garnir->add_option("--e", ge, "quantum characteristic (>= 2)")
        ->required()
        ->check(CLI::Range(2, 1 << 20));
    garnir->add_option("--kappa", gkappa, "residue offset");
    garnir->add_flag("--classical", classical, "emit the classical element instead");

    // verify
    auto* verify = app.add_subcommand("verify", "run the property suite");
    std::string verify_what = "all";
    int max_box = 4;
    verify->add_option("what", verify_what)->check(CLI::IsMember({"all"}));
    verify->add_option("--max-box", max_box, "box bound for the tiling checks");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (tilings->parsed())
            return run_tilings(action, outer_s, inner_s, filter, tq, as_json, ascii, cap);
        if (matrix->parsed())
            return run_matrix(mf, mg, which, mq, as_json, csv);
        if (fp->parsed()) {
            Partition la = Partition::parse(fp_lambda);
            Int value = hook ? hook_formula_F(la) : fweight(la);
            if (as_json)
                std::cout << json{{"lambda", to_json(la)},
                                  {"value", value},
                                  {"method", hook ? "hook" : "recursive"}}
                                 .dump(2)
                          << "\n";
            else
                std::cout << value << "\n";
            return 0;
        }
        if (paren->parsed()) {
            Partition la = Partition::parse(pl);
            ParenSeq ps = paren_sequence(la);
            if (as_json) {
                json jp = json::array();
                NestPoset poset = nesting_poset(la, ps.pair_count());
                for (auto [o, c] : poset.pairs)
                    jp.push_back({o, c});
                std::cout << json{{"lambda", to_json(la)},
                                  {"window", ps.window_str()},
                                  {"pad_open", ps.pad_open},
                                  {"pad_close", ps.pad_close},
                                  {"padded", ps.padded_str()},
                                  {"pairs", jp}}
                                 .dump(2)
                          << "\n";
            } else if (pairs) {
                std::cout << render_pairs(la);
            } else {
                std::cout << ps.padded_str() << "\n";
            }
            return 0;
        }
        if (module_verify->parsed()) {
            Report r = verify_basis_theorems(vf, vg);
            if (as_json)
                std::cout << to_json(r).dump(2) << "\n";
            else
                std::cout << r.str();
            return r.pass() ? 0 : 1;
        }
        if (garnir->parsed()) {
            Partition pi = Partition::parse(pi_s);
            Node node = parse_node(node_s);
            if (classical) {
                auto terms = classical_garnir(pi, node, ge, gkappa);
                GarnirData data = brick_data(pi, node, ge, gkappa);
                PsiWord row = row_insertion_word(data);
                if (as_json) {
                    std::cout << classical_to_json(pi, node, ge, gkappa, terms, row).dump(2)
                              << "\n";
                } else {
                    for (const ClassicalTerm& t : terms) {
                        std::cout << "1 * tau" << t.lambda.str() << " [";
                        for (size_t i = 0; i < t.coset_letters.size(); ++i)
                            std::cout << (i ? " " : "") << t.coset_letters[i];
                        std::cout << "]\n";
                    }
                }
                return 0;
            }
            auto terms = modified_garnir(pi, node, ge, gkappa);
            if (as_json) {
                std::cout << garnir_to_json(pi, node, ge, gkappa, terms).dump(2) << "\n";
            } else {
                for (const GarnirTerm& t : terms) {
                    std::cout << t.coeff << " * sigma" << t.lambda.str() << "\n";
                    std::cout << t.tableau.str();
                    std::cout << "word:";
                    for (int l : t.word.letters)
                        std::cout << " " << l;
                    std::cout << "\n\n";
                }
            }
            return 0;
        }
        if (verify->parsed()) {
            VerifyOptions opts;
            opts.box_tilings = max_box;
            opts.box_bijections = std::min(max_box, 3);
            opts.box_q = std::min(max_box, 3);
            Report r = run_verification(opts);
            if (as_json)
                std::cout << to_json(r).dump(2) << "\n";
            else
                std::cout << r.str();
            return r.pass() ? 0 : 1;
        }
    } catch (const ParseError& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return 2;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}
