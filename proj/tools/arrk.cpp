// Command-line front end: load an arrangement from a file or a named
// example, run one computation or certificate, print a deterministic
// report.  Exit status: 0 all requested certificates pass, 1 a
// certificate failed, 2 input or precondition error.
#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include "arrk/delres.hpp"
#include "arrk/examples.hpp"
#include "arrk/io.hpp"
#include "arrk/kring.hpp"
#include "arrk/ratk.hpp"
#include "arrk/subring.hpp"

using namespace arrk;

namespace {

struct InputOpts {
    std::string file;
    std::string example;
};

void add_input(CLI::App* sub, InputOpts& in) {
    auto* f = sub->add_option("--file,-f", in.file, "arrangement file ('d n' header)");
    auto* e = sub->add_option("--example,-e", in.example,
                              "built-in example: point, two-points, generic-3-lines, "
                              "concurrent-3-lines, boolean-<k>, generic-<d>-plus-1-central");
    f->excludes(e);
}

Arrangement load(const InputOpts& in) {
    if (!in.example.empty()) {
        auto arr = examples::by_name(in.example);
        if (!arr) throw error(errc::parse_error, "unknown example '" + in.example + "'");
        return *arr;
    }
    if (in.file.empty())
        throw error(errc::parse_error, "no input: pass --file or --example");
    std::ifstream fs(in.file);
    if (!fs) throw error(errc::parse_error, "cannot open '" + in.file + "'");
    std::stringstream buf;
    buf << fs.rdbuf();
    auto arr = parse_arrangement(buf.str());
    for (const auto& w : validate(arr)) std::cerr << "warning: " << w << "\n";
    return arr;
}

std::string sign_string(const SignVector& sv) {
    std::string s;
    for (int x : sv) s += (x > 0 ? '+' : (x < 0 ? '-' : '0'));
    return s.empty() ? "()" : s;
}

void emit(const Report& rep, bool machine) {
    std::cout << (machine ? rep.machine() : rep.human());
}

int report_status(const Report& rep) { return rep.ok() ? 0 : 1; }

Report chambers_report(const Arrangement& arr) {
    Report rep("chambers");
    auto ch = enumerate_chambers(arr);
    rep.fact("count", ch.size());
    for (const auto& c : ch) {
        rep.fact(std::to_string(c.index) + ".sign", sign_string(c.sign));
        rep.fact(std::to_string(c.index) + ".witness", vec_to_string(c.witness));
    }
    return rep;
}

Report faces_report(const Arrangement& arr) {
    Report rep("faces");
    auto ch = enumerate_chambers(arr);
    auto faces = enumerate_faces(arr, ch);
    rep.fact("count", faces.size());
    for (size_t k = 0; k < faces.size(); ++k) {
        const auto& f = faces[k];
        rep.fact(std::to_string(k) + ".sign", sign_string(f.sign));
        rep.fact(std::to_string(k) + ".codim", f.codim);
        std::string cof;
        for (size_t ci : f.cofaces) cof += (cof.empty() ? "" : ",") + std::to_string(ci);
        rep.fact(std::to_string(k) + ".cofaces", cof);
        rep.fact(std::to_string(k) + ".witness", vec_to_string(f.witness));
    }
    return rep;
}

Report circuits_report(const Arrangement& arr) {
    Report rep("circuits");
    auto cs = circuits(arr);
    rep.fact("count", cs.size());
    for (size_t k = 0; k < cs.size(); ++k) {
        rep.fact(std::to_string(k) + ".support", index_set_string(cs[k].support));
        rep.fact(std::to_string(k) + ".plus", index_set_string(cs[k].plus));
        rep.fact(std::to_string(k) + ".minus", index_set_string(cs[k].minus));
    }
    return rep;
}

Report nbc_report(const Arrangement& arr) {
    Report rep("nbc");
    auto sets = nbc_sets(arr);
    rep.fact("count", sets.size());
    auto broken = broken_circuits(arr);
    rep.fact("broken_circuits", broken.size());
    for (size_t k = 0; k < broken.size(); ++k)
        rep.fact("broken." + std::to_string(k), index_set_string(broken[k]));
    for (size_t k = 0; k < sets.size(); ++k)
        rep.fact(std::to_string(k), index_set_string(sets[k]));
    return rep;
}

Report relations_report(const Arrangement& arr) {
    Report rep("relations");
    auto gens = ideal_generators(arr);
    rep.fact("count", gens.size());
    for (size_t k = 0; k < gens.size(); ++k) {
        std::string key = std::to_string(k);
        rep.fact(key + ".family", size_t(gens[k].family));
        if (gens[k].family >= 4)
            rep.fact(key + ".pair",
                     index_set_string(gens[k].plus) + "/" + index_set_string(gens[k].minus));
        else if (gens[k].family >= 2)
            rep.fact(key + ".index", gens[k].plus[0] + 1);
        rep.fact(key + ".poly", gens[k].poly.to_string());
    }
    return rep;
}

Report basis_report(const KRing& ring) {
    Report rep("basis");
    rep.fact("size", ring.basis_size());
    rep.fact("chambers", ring.chamber_count());
    for (size_t j = 0; j < ring.basis_size(); ++j) {
        rep.fact(std::to_string(j) + ".monomial", ring.basis()[j].name());
        rep.fact(std::to_string(j) + ".h_image", ring.basis_images()[j].to_string());
    }
    return rep;
}

RingElement parse_coords(const std::string& s, size_t expect) {
    RingElement u;
    std::string tok;
    std::istringstream in(s);
    while (std::getline(in, tok, ',')) {
        try {
            u.emplace_back(tok);
        } catch (const std::invalid_argument&) {
            throw error(errc::parse_error, "bad coordinate '" + tok + "'");
        }
    }
    if (u.size() != expect)
        throw error(errc::parse_error, "expected " + std::to_string(expect) +
                                           " coordinates, got " + std::to_string(u.size()));
    return u;
}

Report table_report(const KRing& ring) {
    Report rep("table");
    rep.fact("size", ring.basis_size());
    auto table = ring.structure_constants();
    for (size_t i = 0; i < ring.basis_size(); ++i)
        for (size_t j = i; j < ring.basis_size(); ++j)
            rep.fact(ring.basis()[i].name() + "*" + ring.basis()[j].name(),
                     ring_element_string(ring.basis(), table[i][j]));
    return rep;
}

Report restrict_report(const Arrangement& arr) {
    if (arr.n() == 0)
        throw error(errc::precondition_failed, "restriction needs at least one hyperplane");
    Report rep("restrict-map");
    auto res = restrict_last(arr);
    rep.fact("d", res.arr.d);
    rep.fact("n", res.arr.n());
    for (const auto& [i, entry] : res.index_map)
        rep.fact("map." + std::to_string(i + 1),
                 std::to_string(entry.first + 1) + (entry.second > 0 ? " +" : " -"));
    for (size_t m = 0; m < res.arr.n(); ++m) {
        const auto& f = res.arr.functionals[m];
        std::string row = vec_to_string(f.a);
        rep.fact("row." + std::to_string(m + 1), (row.empty() ? "" : row + " ") + f.c.get_str());
    }
    return rep;
}

Report delres_report(const Arrangement& arr, bool normalized) {
    Report rep("check-delres");
    auto p = certify_exactness_p(arr);
    rep.merge(p);
    bool simple = is_simple(arr);
    rep.fact("simple", simple ? "yes" : "no");
    if (!simple) {
        rep.fact("b_sequence", "skipped: arrangement is not simple");
        return rep;
    }
    Arrangement target = arr;
    if (normalized) {
        auto norm = normalize_adjacent_to_last(arr);
        if (!norm) {
            rep.fact("b_sequence", "skipped: no chamber has a facet on H_n");
            return rep;
        }
        target = *norm;
    }
    try {
        rep.merge(certify_exactness_b(target));
    } catch (const error& e) {
        if (e.code != errc::precondition_failed) throw;
        rep.fact("b_sequence", std::string("skipped: ") + e.what() +
                                   (normalized ? "" : " (try --normalized)"));
    }
    return rep;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact combinatorial model of the line-bundle K-ring of a real arrangement"};
    app.require_subcommand(1);
    bool machine = false;
    app.add_flag("--machine", machine, "flat key/value output");

    InputOpts in;
    std::string mult_u, mult_w;
    size_t reorient_index = 1;
    size_t base_chamber = 0;
    bool delres_normalized = false;

    auto* chambers_cmd = app.add_subcommand("chambers", "list chambers with exact witnesses");
    auto* faces_cmd = app.add_subcommand("faces", "list faces (simple arrangements)");
    auto* circuits_cmd = app.add_subcommand("circuits", "list circuits with sign splits");
    auto* nbc_cmd = app.add_subcommand("nbc", "list broken circuits and nbc-sets");
    auto* relations_cmd = app.add_subcommand("relations", "list the ideal generators");
    auto* basis_cmd = app.add_subcommand("basis", "list the nbc basis and its h-images");
    auto* mult_cmd = app.add_subcommand("mult", "multiply two elements in basis coordinates");
    mult_cmd->add_option("--u", mult_u, "first factor, comma-separated integers")->required();
    mult_cmd->add_option("--w", mult_w, "second factor, comma-separated integers")->required();
    auto* table_cmd = app.add_subcommand("table", "structure constants over the nbc basis");
    auto* restrict_cmd = app.add_subcommand("restrict-map", "restriction to the last hyperplane");
    auto* pl_cmd = app.add_subcommand("check-pl", "certify the quotient presentation");
    auto* ba_cmd = app.add_subcommand("check-ba", "certify the subring description B(A)");
    auto* delres_cmd = app.add_subcommand("check-delres", "certify deletion-restriction exactness");
    delres_cmd->add_flag("--normalized", delres_normalized,
                         "reorient towards H_n before the B-side check");
    auto* decone_cmd = app.add_subcommand("check-decone", "certify the decone pullback identity");
    auto* dims_cmd = app.add_subcommand("dims", "rational K/KO dimension counts");
    auto* reorient_cmd = app.add_subcommand("reorient", "negate one functional, print the file");
    reorient_cmd->add_option("--index", reorient_index, "hyperplane index (1-based)")->required();
    auto* normalize_cmd =
        app.add_subcommand("normalize", "reorient so a chamber becomes all-minus");
    normalize_cmd->add_option("--chamber", base_chamber, "chamber index (canonical order)");

    for (auto* sub : app.get_subcommands({})) {
        add_input(sub, in);
        sub->fallthrough();  // let --machine appear after the subcommand
    }

    CLI11_PARSE(app, argc, argv);

    try {
        Arrangement arr = load(in);
        if (chambers_cmd->parsed()) {
            emit(chambers_report(arr), machine);
        } else if (faces_cmd->parsed()) {
            emit(faces_report(arr), machine);
        } else if (circuits_cmd->parsed()) {
            emit(circuits_report(arr), machine);
        } else if (nbc_cmd->parsed()) {
            emit(nbc_report(arr), machine);
        } else if (relations_cmd->parsed()) {
            emit(relations_report(arr), machine);
        } else if (basis_cmd->parsed()) {
            emit(basis_report(KRing(arr)), machine);
        } else if (mult_cmd->parsed()) {
            KRing ring(arr);
            auto u = parse_coords(mult_u, ring.basis_size());
            auto w = parse_coords(mult_w, ring.basis_size());
            Report rep("mult");
            rep.fact("u", ring_element_string(ring.basis(), u));
            rep.fact("w", ring_element_string(ring.basis(), w));
            auto prod = ring.multiply(u, w);
            rep.fact("product", ring_element_string(ring.basis(), prod));
            rep.fact("coords", vec_to_string(prod));
            emit(rep, machine);
        } else if (table_cmd->parsed()) {
            emit(table_report(KRing(arr)), machine);
        } else if (restrict_cmd->parsed()) {
            emit(restrict_report(arr), machine);
        } else if (pl_cmd->parsed()) {
            auto rep = certify_theorem_pl(arr);
            emit(rep, machine);
            return report_status(rep);
        } else if (ba_cmd->parsed()) {
            auto rep = certify_pb(arr);
            emit(rep, machine);
            return report_status(rep);
        } else if (delres_cmd->parsed()) {
            auto rep = delres_report(arr, delres_normalized);
            emit(rep, machine);
            return report_status(rep);
        } else if (decone_cmd->parsed()) {
            auto rep = certify_decone_identity(arr);
            emit(rep, machine);
            return report_status(rep);
        } else if (dims_cmd->parsed()) {
            auto rep = dims_report(arr);
            emit(rep, machine);
            return report_status(rep);
        } else if (reorient_cmd->parsed()) {
            if (reorient_index < 1 || reorient_index > arr.n())
                throw error(errc::precondition_failed, "index out of range");
            std::cout << render_arrangement(reorient(arr, reorient_index - 1));
        } else if (normalize_cmd->parsed()) {
            auto ch = enumerate_chambers(arr);
            if (base_chamber >= ch.size())
                throw error(errc::precondition_failed, "chamber index out of range");
            std::cout << render_arrangement(normalize_delta(arr, ch[base_chamber]));
        }
        return 0;
    } catch (const error& e) {
        std::cerr << "error (" << errc_name(e.code) << "): " << e.what() << "\n";
        return 2;
    }
}
