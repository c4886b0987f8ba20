// Command-line front end. Exit codes: 0 success, 1 verification failure,
// 2 malformed input or usage error.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "toric/toric.hpp"

using namespace toric;

namespace {

bool g_color = false;

std::string paint(const std::string& s, const char* code) {
    return g_color ? std::string("\033[") + code + "m" + s + "\033[0m" : s;
}
std::string green(const std::string& s) { return paint(s, "32"); }
std::string red(const std::string& s) { return paint(s, "31"); }

struct Malformed {
    std::string what;
};

void emit(const std::string& text, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream f(out_path, std::ios::binary);
    if (!f) throw Malformed{out_path + ": cannot write"};
    f << text;
}

RatVec parse_point(const std::string& s) {
    RatVec out;
    std::size_t start = 0;
    while (start <= s.size()) {
        auto end = s.find(',', start);
        if (end == std::string::npos) end = s.size();
        auto q = parse_rational_text(s.substr(start, end - start));
        if (!q) throw Malformed{"--point: bad rational \"" + s.substr(start, end - start) + "\""};
        out.push_back(*q);
        start = end + 1;
    }
    return out;
}

SliceDocument load_slice(const std::string& spec) {
    std::ifstream probe(spec);
    if (probe) return slice_document_from_json(load_json_file(spec));
    return {parse_slice_spec(spec), {}, {}};
}

std::string point_list(const std::vector<RatVec>& pts) {
    std::string out;
    for (const auto& p : pts) out += (out.empty() ? "" : " ") + to_string(p);
    return out.empty() ? "none" : out;
}

int cmd_info(const std::string& path) {
    auto doc = load_polytope(path);
    const Polytope& p = doc.polytope;
    if (!doc.name.empty()) std::cout << "name:        " << doc.name << "\n";
    std::cout << "dimension:   " << p.dim() << "\n";
    std::cout << "facets:      " << p.facet_count() << "\n";
    for (std::size_t i = 0; i < p.facet_count(); ++i)
        std::cout << "  " << i + 1 << ": <x, " << to_string(p.facet(i).normal) << "> + " << to_string(p.facet(i).offset)
                  << " >= 0\n";
    auto vs = vertices(p);
    std::cout << "vertices:    " << vs.size() << "\n";
    for (const auto& v : vs) {
        std::cout << "  " << to_string(v.point) << " on facets {";
        for (std::size_t k = 0; k < v.active_facets.size(); ++k)
            std::cout << (k ? ", " : "") << v.active_facets[k] + 1;
        std::cout << "}\n";
    }
    auto mono = is_monotone(p);
    std::cout << "compact:     " << (is_compact(p) ? "yes" : "no") << "\n";
    std::cout << "delzant:     " << (is_delzant(p) ? "yes" : "no") << "\n";
    std::cout << "even:        " << (is_even(p) ? "yes" : "no") << "\n";
    std::cout << "symmetric:   " << (is_symmetric(p) ? "yes" : "no") << "\n";
    std::cout << "monotone:    " << (mono ? "lambda = " + to_string(*mono) : std::string("no")) << "\n";
    if (auto e = equidistant_point(p))
        std::cout << "equidistant: " << to_string(e->point) << " at distance " << to_string(e->distance) << "\n";
    else
        std::cout << "equidistant: none\n";
    if (!doc.marked_points.empty()) std::cout << "marked:      " << point_list(doc.marked_points) << "\n";
    return 0;
}

int cmd_hf(const std::string& path, bool tr_bound) {
    auto p = load_polytope(path).polytope;
    if (is_even(p)) {
        auto rn = rank_gf2(boundary_op(p));
        std::cout << "d_P: nullity " << rn.nullity << ", rank " << rn.rank << "\n";
        std::cout << "HF(P) = " << hf_even(p) << "\n";
    } else {
        auto rep = floer_report(p);
        std::cout << "d odd; d_{PxP}: nullity " << rep.squared_side.nullity << ", rank " << rep.squared_side.rank
                  << ", difference " << rep.hf * rep.hf << "\n";
        std::cout << "HF(P) = " << rep.hf << "\n";
    }
    if (tr_bound) {
        auto b = hf_lower_bound_tr(p);
        std::cout << "#(psi(R) ⋔ T) >= " << b.bound << "\n";
        std::cout << "caveat: " << b.caveat << "\n";
    }
    return 0;
}

int cmd_product(const std::string& a, const std::string& b, const std::string& out) {
    auto d1 = load_polytope(a), d2 = load_polytope(b);
    PolytopeDocument doc;
    doc.name = (d1.name.empty() ? "P1" : d1.name) + " x " + (d2.name.empty() ? "P2" : d2.name);
    doc.polytope = product(d1.polytope, d2.polytope);
    for (const auto& x : d1.marked_points)
        for (const auto& y : d2.marked_points) {
            RatVec z = x;
            z.insert(z.end(), y.begin(), y.end());
            doc.marked_points.push_back(std::move(z));
        }
    emit(to_json_text(doc), out);
    return 0;
}

int cmd_reduce(const std::string& ambient, const std::string& slice_spec, const std::string& out) {
    auto amb = load_polytope(ambient);
    auto slice = load_slice(slice_spec);
    PolytopeDocument doc;
    doc.name = slice.result_name.empty() ? (amb.name.empty() ? "reduced" : amb.name + " reduced") : slice.result_name;
    doc.citation = slice.result_citation;
    doc.polytope = reduce(amb.polytope, slice.slice);
    // marked points lying on the slice carry over
    for (const auto& x : amb.marked_points)
        if (auto y = slice.slice.preimage(x)) doc.marked_points.push_back(*y);
    emit(to_json_text(doc), out);
    return 0;
}

void print_claim(const std::string& name, const VerifiedClaim& c) {
    if (!name.empty()) std::cout << "certificate: " << name << "\n";
    std::cout << "status:      " << green("verified") << "\n";
    std::cout << "claim:       " << to_string(c.kind) << "\n";
    std::cout << "polytope:    dim " << c.polytope.dim() << ", " << c.polytope.facet_count() << " facets\n";
    for (const auto& f : c.polytope.facets())
        std::cout << "  <x, " << to_string(f.normal) << "> + " << to_string(f.offset) << " >= 0\n";
    std::cout << "marked:      " << to_string(c.marked_point) << "\n";
    std::cout << "bound:       " << c.bound.str() << "\n";
    std::cout << "citations:\n";
    for (const auto& s : c.citations) std::cout << "  - " << s << "\n";
    std::cout << "hypotheses:\n";
    if (c.hypotheses.empty()) std::cout << "  (none)\n";
    for (const auto& s : c.hypotheses) std::cout << "  - " << s << "\n";
    std::cout << "steps:\n";
    for (const auto& s : c.steps) std::cout << "  " << s << "\n";
}

int cmd_certify(const std::string& path) {
    auto cert = load_certificate(path);
    try {
        print_claim(cert.name, verify(cert));
        return 0;
    } catch (const Error& e) {
        std::cout << "certificate: " << cert.name << "\n";
        std::cout << "status:      " << red("rejected") << "\n";
        std::cout << "error:       " << e.what() << "\n";
        return 1;
    }
}

int cmd_auto_certify(const std::string& path, const std::string& out) {
    auto doc = load_polytope(path);
    Certificate cert;
    try {
        cert = auto_certify_monotone(doc.polytope);
    } catch (const Error& e) {
        std::cerr << "auto-certify: " << e.what() << "\n";
        return 1;
    }
    cert.name = doc.name.empty() ? "auto" : doc.name + " (auto)";
    auto claim = verify(cert);
    cert.marked_point = claim.marked_point;
    if (out.empty()) {
        std::cout << to_json_text(cert);
    } else {
        emit(to_json_text(cert), out);
        print_claim(cert.name, claim);
    }
    return 0;
}

int cmd_probe(const std::string& path, const std::string& point, long bound) {
    auto p = load_polytope(path).polytope;
    auto u = parse_point(point);
    if (u.size() != p.dim()) throw Malformed{"--point has " + std::to_string(u.size()) + " coordinates"};
    auto hit = probe_scan(p, u, bound);
    if (!hit) {
        std::cout << "no displacing probe with directions in [-" << bound << ", " << bound << "]^" << p.dim()
                  << "\n";
        return 0;
    }
    std::cout << "displaced by probe:\n";
    std::cout << "  facet:     " << hit->probe.facet + 1 << "\n";
    std::cout << "  direction: " << to_string(hit->probe.direction) << "\n";
    std::cout << "  base:      " << to_string(hit->probe.base) << "\n";
    std::cout << "  reach:     " << (hit->reach ? to_string(*hit->reach) : std::string("unbounded")) << "\n";
    std::cout << "  t:         " << to_string(hit->t) << "\n";
    return 0;
}

int cmd_render(const std::string& path, const std::string& out) {
    auto doc = load_polytope(path);
    std::vector<RatVec> marked = doc.marked_points;
    if (marked.empty())
        if (auto e = equidistant_point(doc.polytope)) marked.push_back(e->point);
    emit(render_svg(doc.polytope, marked, doc.name), out);
    return 0;
}

int cmd_corpus(const std::string& dir) {
    auto rows = run_corpus(dir);
    std::size_t w_name = 4, w_exp = 8;
    for (const auto& r : rows) {
        w_name = std::max(w_name, r.name.size());
        w_exp = std::max(w_exp, r.expected.size());
    }
    auto pad = [](std::string s, std::size_t w) {
        s.resize(std::max(w, s.size()), ' ');
        return s;
    };
    std::cout << pad("case", w_name) << "  " << pad("expected", w_exp) << "  computed\n";
    std::size_t failed = 0;
    for (const auto& r : rows) {
        std::cout << pad(r.name, w_name) << "  " << pad(r.expected, w_exp) << "  " << r.computed << "  "
                  << (r.pass ? green("PASS") : red("FAIL")) << "\n";
        if (!r.pass) ++failed;
    }
    std::cout << rows.size() - failed << "/" << rows.size() << " cases pass\n";
    return failed ? 1 : 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact toric polytope toolkit: Floer invariant, reductions, certificates, probes"};
    app.require_subcommand(1);
    app.add_flag("--color", g_color, "Colour PASS/FAIL markers");
    std::string out;

    std::string file, file2, slice, point;
    long bound = 3;
    bool tr = false;

    auto* info = app.add_subcommand("info", "Describe a polytope");
    info->add_option("polytope", file, "Polytope file")->required();

    auto* hfc = app.add_subcommand("hf", "Combinatorial Floer invariant");
    hfc->add_option("polytope", file, "Polytope file")->required();
    hfc->add_flag("--tr-bound", tr, "Also print the torus/real-part intersection bound");

    auto* prod = app.add_subcommand("product", "Cartesian product of two polytopes");
    prod->add_option("first", file, "Polytope file")->required();
    prod->add_option("second", file2, "Polytope file")->required();
    prod->add_option("-o", out, "Output file");

    auto* red_c = app.add_subcommand("reduce", "Reduce along an affine slice");
    red_c->add_option("ambient", file, "Polytope file")->required();
    red_c->add_option("--slice", slice, "Slice file, or inline \"a,b/c,d;x,y\"")->required();
    red_c->add_option("-o", out, "Output file");

    auto* cert = app.add_subcommand("certify", "Verify a certificate");
    cert->add_option("certificate", file, "Certificate file")->required();

    auto* autoc = app.add_subcommand("auto-certify", "Certificate for a monotone Delzant polytope");
    autoc->add_option("polytope", file, "Polytope file")->required();
    autoc->add_option("-o", out, "Output certificate file");

    auto* probe = app.add_subcommand("probe", "Search for a displacing probe");
    probe->add_option("polytope", file, "Polytope file")->required();
    probe->add_option("--point", point, "Point p/q,p/q,...")->required();
    probe->add_option("--bound", bound, "Max-norm of directions")->check(CLI::NonNegativeNumber);

    auto* render = app.add_subcommand("render", "SVG drawing of a planar polytope");
    render->add_option("polytope", file, "Polytope file")->required();
    render->add_option("-o", out, "Output file");

    auto* corpus = app.add_subcommand("corpus", "Golden cases");
    auto* run = corpus->add_subcommand("run", "Run every case in a corpus directory");
    std::string corpus_dir = "corpus";
    run->add_option("dir", corpus_dir, "Corpus directory");
    corpus->require_subcommand(1);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? 0 : 2;
    }

    try {
        if (*info) return cmd_info(file);
        if (*hfc) return cmd_hf(file, tr);
        if (*prod) return cmd_product(file, file2, out);
        if (*red_c) return cmd_reduce(file, slice, out);
        if (*cert) return cmd_certify(file);
        if (*autoc) return cmd_auto_certify(file, out);
        if (*probe) return cmd_probe(file, point, bound);
        if (*render) return cmd_render(file, out);
        if (*run) return cmd_corpus(corpus_dir);
    } catch (const Malformed& m) {
        std::cerr << "error: " << m.what << "\n";
        return 2;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const nlohmann::json::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
