#include <homcore/cone_orth.hh>
#include <homcore/core.hh>
#include <homcore/gadget.hh>
#include <homcore/json_io.hh>
#include <homcore/mountains.hh>
#include <homcore/path_algebra.hh>

#include <CLI11.hpp>

#include <chrono>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

using namespace homcore;

namespace {

struct GlobalOptions {
    std::uint64_t budget_nodes = 100'000'000;
    std::size_t max_vertices = default_max_product_vertices;
    std::uint64_t seed = 0;
    bool json = false;

    SearchOptions search() const { return SearchOptions{budget_nodes}; }
};

std::string slurp(const std::string & path)
{
    std::ifstream in(path, std::ios::binary);
    if (! in)
        throw ValidationError{"cannot open " + path};
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

void spill(const std::string & path, const std::string & text)
{
    std::ofstream out(path, std::ios::binary);
    if (! out)
        throw ValidationError{"cannot write " + path};
    out << text;
}

std::string fnv1a64(const std::string & bytes)
{
    std::uint64_t hash = 14695981039346656037ull;
    for (unsigned char c : bytes) {
        hash ^= c;
        hash *= 1099511628211ull;
    }
    char buffer[17];
    std::snprintf(buffer, sizeof buffer, "%016llx", static_cast<unsigned long long>(hash));
    return buffer;
}

// A path file starts with "k=<height>"; anything else is the digraph format.
bool looks_like_path_file(const std::string & text)
{
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) {
        std::size_t start = line.find_first_not_of(" \t\r");
        if (start == std::string::npos || line[start] == '#')
            continue;
        return line.compare(start, 2, "k=") == 0;
    }
    return false;
}

Digraph parse_path_file(const std::string & text)
{
    std::istringstream in(text);
    std::string line;
    int k = -1;
    std::string word;
    while (std::getline(in, line)) {
        std::size_t start = line.find_first_not_of(" \t\r");
        if (start == std::string::npos || line[start] == '#')
            continue;
        if (k < 0) {
            if (line.compare(start, 2, "k=") != 0)
                throw ValidationError{"path file must start with k=<height>"};
            k = std::stoi(line.substr(start + 2));
        }
        else {
            word += line.substr(start) + " ";
        }
    }
    if (k < 0)
        throw ValidationError{"path file missing k=<height>"};
    return path_from_word(parse_word(k, word));
}

struct LoadedInput {
    std::string path;
    std::string digest;
    Digraph digraph;
};

LoadedInput load_input(const std::string & path)
{
    std::string text = slurp(path);
    LoadedInput input;
    input.path = path;
    input.digest = fnv1a64(text);
    input.digraph = looks_like_path_file(text) ? parse_path_file(text) : parse_digraph(text);
    return input;
}

// "3,1@k=3"
MountainSeq parse_mountain_literal(const std::string & text)
{
    std::size_t at = text.find("@k=");
    if (at == std::string::npos)
        throw ValidationError{"expected <peaks>@k=<height>, e.g. 3,1@k=3"};
    MountainSeq seq;
    seq.k = std::stoi(text.substr(at + 3));
    std::string peaks = text.substr(0, at);
    std::istringstream in(peaks);
    std::string item;
    while (std::getline(in, item, ','))
        if (! item.empty())
            seq.peaks.push_back(std::stoi(item));
    return seq;
}

Json input_json(const LoadedInput & input)
{
    return Json{{"path", input.path}, {"digest", input.digest},
        {"vertices", input.digraph.size()}, {"arcs", input.digraph.arc_count()}};
}

Json run_report(const std::string & command, const std::vector<LoadedInput> & inputs,
    const GlobalOptions & global, Json body)
{
    Json in = Json::array();
    for (const LoadedInput & i : inputs)
        in.push_back(input_json(i));
    return Json{{"command", command},
        {"inputs", std::move(in)},
        {"budgets", Json{{"max_nodes", global.budget_nodes}, {"max_vertices", global.max_vertices}}},
        {"report", std::move(body)}};
}

int tri_exit(Tri t)
{
    switch (t) {
    case Tri::yes: return 0;
    case Tri::no: return 1;
    default: return 2;
    }
}

void emit(const Json & j)
{
    std::cout << j.dump(2) << "\n";
}

}

int main(int argc, char ** argv)
{
    CLI::App app{"digraph homomorphisms, cores, and products of cores"};
    app.require_subcommand(1);
    app.fallthrough(); // global flags may follow the subcommand

    GlobalOptions global;
    app.add_option("--budget-nodes", global.budget_nodes, "search node budget per query")
        ->envname("HOMCORE_BUDGET_NODES");
    app.add_option("--max-vertices", global.max_vertices, "largest product size to materialize")
        ->envname("HOMCORE_MAX_VERTICES");
    app.add_option("--seed", global.seed, "seed for randomized suites")
        ->envname("HOMCORE_SEED");
    app.add_flag("--json", global.json, "machine-readable output where optional");

    std::string out_path, witness_path, sidecar_path;

    auto * cmd_parse = app.add_subcommand("parse", "validate a digraph or path file");
    std::string parse_file;
    cmd_parse->add_option("file", parse_file)->required();

    auto * cmd_product = app.add_subcommand("product", "tensor product of two or more digraphs");
    std::vector<std::string> product_files;
    cmd_product->add_option("files", product_files)->required()->expected(-2);
    cmd_product->add_option("--out", out_path, "write the product here (default: stdout)");

    auto * cmd_core = app.add_subcommand("core", "compute the core and its retraction");
    std::string core_file;
    cmd_core->add_option("file", core_file)->required();
    cmd_core->add_option("--out", out_path, "write the core digraph here");
    cmd_core->add_option("--witness", witness_path, "write the retraction report here");

    auto * cmd_is_core = app.add_subcommand("is-core", "test whether a digraph is a core");
    std::string is_core_file;
    cmd_is_core->add_option("file", is_core_file)->required();

    auto * cmd_hom = app.add_subcommand("hom", "search for a homomorphism between two digraphs");
    std::string hom_src, hom_tgt;
    std::vector<std::string> hom_pins;
    cmd_hom->add_option("source", hom_src)->required();
    cmd_hom->add_option("target", hom_tgt)->required();
    cmd_hom->add_option("--pin", hom_pins, "fix source=target vertex pairs, e.g. --pin 0=2");

    auto * cmd_orth = app.add_subcommand("orthogonal", "test orthogonality of two digraphs");
    std::string orth_left, orth_right;
    cmd_orth->add_option("left", orth_left)->required();
    cmd_orth->add_option("right", orth_right)->required();

    auto * cmd_orthize = app.add_subcommand("orthogonalize",
        "shrink two factors to product-minimal induced subgraphs");
    std::string orthize_left, orthize_right, out_left, out_right;
    cmd_orthize->add_option("left", orthize_left)->required();
    cmd_orthize->add_option("right", orthize_right)->required();
    cmd_orthize->add_option("--out-left", out_left);
    cmd_orthize->add_option("--out-right", out_right);

    auto * cmd_mountains = app.add_subcommand("mountains", "decreasing-mountain families");
    cmd_mountains->require_subcommand(1);
    auto * cmd_mgen = cmd_mountains->add_subcommand("gen", "list decreasing mountains");
    int m_height = 0, m_peaks = 0;
    std::string m_mode = "fixed-first";
    cmd_mgen->set_help_flag("--help", "print this help message and exit");
    cmd_mgen->add_option("--height,--h", m_height, "height of the mountains")->required();
    cmd_mgen->add_option("--peaks,--l", m_peaks, "number of peaks")->required();
    cmd_mgen->add_option("--mode", m_mode)
        ->check(CLI::IsMember({"fixed-first", "all-decreasing", "both"}));
    auto * cmd_momega = cmd_mountains->add_subcommand("omega", "separator sequence for a member");
    std::string omega_literal;
    cmd_momega->add_option("--d", omega_literal, "member, e.g. 3,1@k=3")->required();

    auto * cmd_gadget = app.add_subcommand("gadget", "arc-to-gadget graph transformation");
    cmd_gadget->require_subcommand(1);
    auto * cmd_gbuild = cmd_gadget->add_subcommand("build", "replace every arc with a gadget copy");
    std::string gadget_file;
    cmd_gbuild->add_option("file", gadget_file)->required();
    cmd_gbuild->add_option("--out", out_path, "write the gadget graph here");
    cmd_gbuild->add_option("--sidecar", sidecar_path, "write the block bookkeeping here");

    auto * cmd_dot = app.add_subcommand("export-dot", "render a digraph for graphviz");
    std::string dot_file;
    cmd_dot->add_option("file", dot_file)->required();
    cmd_dot->add_option("--out", out_path);

    auto * cmd_verify = app.add_subcommand("verify", "theorem condition checkers");
    cmd_verify->require_subcommand(1);

    auto * cmd_vtwo = cmd_verify->add_subcommand("two-cone",
        "two orthogonal incomparable oriented factors make a core of cones");
    std::string two_left, two_right;
    cmd_vtwo->set_help_flag("--help", "print this help message and exit");
    cmd_vtwo->add_option("--g", two_left)->required();
    cmd_vtwo->add_option("--h", two_right)->required();

    auto * cmd_vvsc = cmd_verify->add_subcommand("vsc",
        "sufficient conditions for a family's cone product to be a core");
    std::string vsc_family = "files";
    std::vector<std::string> vsc_files;
    int vsc_height = 0, vsc_peaks = 0;
    std::size_t vsc_core_cap = 400;
    bool vsc_shortcut = false;
    cmd_vvsc->set_help_flag("--help", "print this help message and exit");
    cmd_vvsc->add_option("--family", vsc_family)->check(CLI::IsMember({"dm", "files"}));
    cmd_vvsc->add_option("--files", vsc_files);
    cmd_vvsc->add_option("--height,--h", vsc_height);
    cmd_vvsc->add_option("--peaks,--l", vsc_peaks);
    cmd_vvsc->add_option("--core-cap", vsc_core_cap, "direct core check ceiling");
    cmd_vvsc->add_flag("--digon-shortcut", vsc_shortcut);

    auto * cmd_vgadget = cmd_verify->add_subcommand("gadget",
        "homomorphism equivalence through the gadget transformation");
    std::string gadget_left, gadget_right;
    cmd_vgadget->add_option("--d1", gadget_left)->required();
    cmd_vgadget->add_option("--d2", gadget_right)->required();

    auto * cmd_vmf = cmd_verify->add_subcommand("mountain-family",
        "separators and independence inside a decreasing-mountain family");
    int vmf_height = 0, vmf_peaks = 0;
    cmd_vmf->set_help_flag("--help", "print this help message and exit");
    cmd_vmf->add_option("--height,--h", vmf_height)->required();
    cmd_vmf->add_option("--peaks,--l", vmf_peaks)->required();

    auto * cmd_vlattice = cmd_verify->add_subcommand("lattice",
        "randomized lattice laws for sums of bounded paths");
    int lat_k = 4, lat_trials = 100;
    cmd_vlattice->add_option("--k", lat_k, "height bound");
    cmd_vlattice->add_option("--trials", lat_trials);

    CLI11_PARSE(app, argc, argv);

    const auto started = std::chrono::steady_clock::now();
    int exit_code = 0;

    try {
        if (*cmd_parse) {
            LoadedInput in = load_input(parse_file);
            Json stats{{"vertices", in.digraph.size()},
                {"arcs", in.digraph.arc_count()},
                {"symmetric", in.digraph.is_symmetric()},
                {"antisymmetric", in.digraph.is_antisymmetric()},
                {"digest", in.digest}};
            if (global.json)
                emit(stats);
            else
                std::cout << in.path << ": " << in.digraph.size() << " vertices, "
                          << in.digraph.arc_count() << " arcs"
                          << (in.digraph.is_symmetric() ? ", graph" : "")
                          << (in.digraph.is_antisymmetric() ? ", oriented" : "") << "\n";
        }
        else if (*cmd_product) {
            std::vector<LoadedInput> inputs;
            for (const std::string & f : product_files)
                inputs.push_back(load_input(f));
            std::vector<const Digraph *> factors;
            for (const LoadedInput & i : inputs)
                factors.push_back(&i.digraph);
            ProductResult p = tensor_product_family(factors, global.max_vertices);
            std::string text = format_digraph(p.product);
            if (out_path.empty())
                std::cout << text;
            else
                spill(out_path, text);
            std::cerr << "product: " << p.product.size() << " vertices, "
                      << p.product.arc_count() << " arcs\n";
        }
        else if (*cmd_core) {
            LoadedInput in = load_input(core_file);
            CoreResult c = compute_core(in.digraph, global.search());
            std::string text = format_digraph(c.core);
            if (out_path.empty())
                std::cout << text;
            else
                spill(out_path, text);
            Json witness = run_report("core", {in}, global, to_json(c));
            if (! witness_path.empty())
                spill(witness_path, witness.dump(2) + "\n");
            else if (global.json)
                emit(witness);
            exit_code = c.certified ? 0 : 2;
        }
        else if (*cmd_is_core) {
            LoadedInput in = load_input(is_core_file);
            SearchStats stats;
            Tri verdict = is_core(in.digraph, global.search(), &stats);
            if (global.json)
                emit(run_report("is-core", {in}, global,
                    Json{{"is_core", to_json(verdict)}, {"stats", to_json(stats)}}));
            else
                std::cout << to_string(verdict) << "\n";
            exit_code = tri_exit(verdict);
        }
        else if (*cmd_hom) {
            LoadedInput src = load_input(hom_src), tgt = load_input(hom_tgt);
            PartialMap pins;
            for (const std::string & pin : hom_pins) {
                std::size_t eq = pin.find('=');
                if (eq == std::string::npos)
                    throw ValidationError{"--pin expects u=w"};
                pins.push_back({std::stoi(pin.substr(0, eq)), std::stoi(pin.substr(eq + 1))});
            }
            HomResult r = find_homomorphism(src.digraph, tgt.digraph, pins, global.search());
            Json body{{"found", to_json(r.found)}, {"stats", to_json(r.stats)}};
            if (r.witness)
                body["witness"] = to_json(*r.witness);
            emit(run_report("hom", {src, tgt}, global, std::move(body)));
            exit_code = tri_exit(r.found);
        }
        else if (*cmd_orth) {
            LoadedInput a = load_input(orth_left), b = load_input(orth_right);
            OrthogonalityReport r = are_orthogonal(a.digraph, b.digraph, global.search(),
                global.max_vertices);
            emit(run_report("orthogonal", {a, b}, global, to_json(r)));
            exit_code = tri_exit(r.verdict);
        }
        else if (*cmd_orthize) {
            LoadedInput a = load_input(orthize_left), b = load_input(orthize_right);
            OrthogonalizedPair p = orthogonalize_pair(a.digraph, b.digraph, global.search(),
                global.max_vertices);
            if (! out_left.empty())
                spill(out_left, format_digraph(p.left));
            if (! out_right.empty())
                spill(out_right, format_digraph(p.right));
            emit(run_report("orthogonalize", {a, b}, global,
                Json{{"left_kept", p.left_kept}, {"right_kept", p.right_kept},
                    {"left_size", p.left.size()}, {"right_size", p.right.size()},
                    {"certified", p.certified}, {"stats", to_json(p.stats)}}));
            exit_code = p.certified ? 0 : 2;
        }
        else if (*cmd_mgen) {
            Json body;
            auto dump_mode = [&](MountainGenMode mode) {
                Json list = Json::array();
                for (const MountainSeq & m : gen_decreasing_mountains(m_height, m_peaks, mode))
                    list.push_back(Json{{"peaks", m.peaks}, {"k", m.k},
                        {"vertices", mountain_vertex_count(m)}});
                return list;
            };
            if (m_mode == "fixed-first" || m_mode == "both") {
                body["fixed_first"] = dump_mode(MountainGenMode::fixed_first);
                body["count_fixed_first"] = body["fixed_first"].size();
            }
            if (m_mode == "all-decreasing" || m_mode == "both") {
                body["all_decreasing"] = dump_mode(MountainGenMode::all_decreasing);
                body["count_all_decreasing"] = body["all_decreasing"].size();
            }
            emit(run_report("mountains gen", {}, global, std::move(body)));
        }
        else if (*cmd_momega) {
            MountainSeq d = parse_mountain_literal(omega_literal);
            auto family = gen_decreasing_mountains(d.k + 2, static_cast<int>(d.peaks.size()));
            OmegaResult om = omega_sequence(d, family);
            emit(run_report("mountains omega", {}, global,
                Json{{"d", to_json(d)}, {"omega", to_json(om.omega)},
                    {"degenerate", om.degenerate}}));
        }
        else if (*cmd_gbuild) {
            LoadedInput in = load_input(gadget_file);
            GadgetGraph g = build_gadget_graph(in.digraph);
            std::string text = format_digraph(g.graph);
            if (out_path.empty())
                std::cout << text;
            else
                spill(out_path, text);
            if (! sidecar_path.empty())
                spill(sidecar_path, to_json(g).dump(2) + "\n");
        }
        else if (*cmd_dot) {
            LoadedInput in = load_input(dot_file);
            std::string text = to_dot(in.digraph);
            if (out_path.empty())
                std::cout << text;
            else
                spill(out_path, text);
        }
        else if (*cmd_vtwo) {
            LoadedInput a = load_input(two_left), b = load_input(two_right);
            TwoConeReport r = verify_two_cone_theorem(a.digraph, b.digraph, global.search(),
                global.max_vertices);
            emit(run_report("verify two-cone", {a, b}, global, to_json(r)));
            exit_code = tri_exit(r.overall);
        }
        else if (*cmd_vvsc) {
            std::vector<LoadedInput> inputs;
            std::vector<Digraph> owned;
            std::vector<const Digraph *> family;
            if (vsc_family == "dm") {
                if (vsc_height == 0)
                    throw ValidationError{"--family dm needs --height and --peaks"};
                for (const MountainSeq & m : gen_decreasing_mountains(vsc_height, vsc_peaks))
                    owned.push_back(path_from_word(mountain_from_sequence(m)));
            }
            else {
                if (vsc_files.empty())
                    throw ValidationError{"--files needs at least one digraph"};
                for (const std::string & f : vsc_files) {
                    inputs.push_back(load_input(f));
                    owned.push_back(inputs.back().digraph);
                }
            }
            for (const Digraph & g : owned)
                family.push_back(&g);
            VscFamilyReport r = verify_vsc_conditions(family, global.search(),
                global.max_vertices, vsc_core_cap, vsc_shortcut);
            emit(run_report("verify vsc", inputs, global, to_json(r)));
            exit_code = tri_exit(r.overall);
        }
        else if (*cmd_vgadget) {
            LoadedInput a = load_input(gadget_left), b = load_input(gadget_right);
            GadgetEquivalenceReport r = verify_gadget_equivalence(a.digraph, b.digraph,
                global.search());
            emit(run_report("verify gadget", {a, b}, global, to_json(r)));
            Tri overall = ! r.hypothesis_met ? Tri::no
                : tri_and(r.equivalent,
                      r.restriction_checked ? r.restriction_is_hom : Tri::yes);
            exit_code = tri_exit(overall);
        }
        else if (*cmd_vmf) {
            MountainFamilyReport r = verify_mountain_family(vmf_height, vmf_peaks,
                global.search(), global.max_vertices);
            emit(run_report("verify mountain-family", {}, global, to_json(r)));
            exit_code = tri_exit(r.overall);
        }
        else if (*cmd_vlattice) {
            LatticeLawReport r = check_lattice_laws(global.seed, lat_k, lat_trials, 7,
                global.search());
            emit(run_report("verify lattice", {}, global,
                Json{{"k", lat_k}, {"seed", global.seed}, {"trials", r.trials},
                    {"law_checks", r.law_checks}, {"failures", r.failures},
                    {"overall", to_json(r.overall)}}));
            exit_code = tri_exit(r.overall);
        }
    }
    catch (const ParseError & e) {
        std::cerr << "error: " << e.what() << "\n";
        return 65;
    }
    catch (const ValidationError & e) {
        std::cerr << "error: " << e.what() << "\n";
        return 65;
    }
    catch (const CapacityError & e) {
        std::cerr << "error: " << e.what() << "\n";
        return 66;
    }

    const auto elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(
        std::chrono::steady_clock::now() - started);
    std::cerr << "elapsed_ms=" << elapsed.count() << "\n";
    return exit_code;
}
