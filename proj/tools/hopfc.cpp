#include "hopfdiag/hopfdiag.hpp"

#include <CLI11.hpp>

#include <filesystem>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

#ifndef HOPFDIAG_FIXTURES
#define HOPFDIAG_FIXTURES "fixtures"
#endif

using namespace hopfdiag;
namespace fs = std::filesystem;

namespace {

struct Options {
    bool json = false;
    std::string trace_dir;
    std::uint64_t seed = 20240601;
    std::string bundle = "zmod2";
    std::string alpha = "uniform";
    std::string kirby_alpha = "all";
    std::string input;
    std::string out;
    int max_size = 3;
    std::string filter;
    std::string fixtures;
    std::vector<std::string> extra_bundles;
};

class usage_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw usage_error("cannot open '" + path + "'");
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

// Keyword of the first non-comment line: hd, braid or tangle.
std::string file_kind(const std::string& text) {
    std::istringstream is(text);
    std::string raw;
    while (std::getline(is, raw)) {
        const std::string line = detail::strip_comment(raw);
        if (line.empty()) continue;
        return line.substr(0, line.find_first_of(" \t"));
    }
    return "";
}

HopfDiagram read_diagram(const std::string& path) {
    std::istringstream is(read_file(path));
    return HopfDiagram(parse_term(is, path));
}

// A braid or presentation file goes straight in; a tangle is extracted first.
StringLinkPresentation read_string_link(const std::string& path, ExtractionTrace* trace = nullptr,
                                        TangleWord* tangle = nullptr) {
    const std::string text = read_file(path);
    const std::string kind = file_kind(text);
    std::istringstream is(text);
    if (kind == "braid") return parse_presentation(is, path);
    if (kind == "tangle") {
        const TangleWord w = parse_tangle(is, path);
        validate_tangle(w, TangleMode::string_link);
        if (tangle) *tangle = w;
        return extract_presentation(w, trace);
    }
    throw parse_error(path, 1, "expected a 'braid' or 'tangle' file");
}

void write_output(const Options& o, const std::string& text) {
    if (o.out.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream f(o.out);
    if (!f) throw usage_error("cannot write '" + o.out + "'");
    f << text;
}

void emit_json(const Options& o, const json& j) { write_output(o, j.dump(2) + "\n"); }

// Stage files are written as NN-name so a directory listing is in pipeline order.
class Tracer {
public:
    explicit Tracer(const std::string& dir) : dir_(dir) {
        if (!dir_.empty()) fs::create_directories(dir_);
    }
    void dump(const std::string& name, const std::string& text) {
        if (dir_.empty()) return;
        std::ostringstream fn;
        fn << std::setw(2) << std::setfill('0') << ++count_ << "-" << name;
        std::ofstream f(fs::path(dir_) / fn.str());
        if (!f) throw usage_error("cannot write trace file in '" + dir_ + "'");
        f << text;
    }

private:
    std::string dir_;
    int count_ = 0;
};

json matrix_json(const std::vector<std::vector<long long>>& m) {
    json a = json::array();
    for (const auto& r : m) a.push_back(r);
    return a;
}

std::string matrix_text(const std::vector<std::vector<long long>>& m) {
    std::string s = "[";
    for (std::size_t i = 0; i < m.size(); ++i) {
        s += i ? ", [" : "[";
        for (std::size_t j = 0; j < m[i].size(); ++j) s += (j ? ", " : "") + std::to_string(m[i][j]);
        s += "]";
    }
    return s + "]";
}

// A named candidate, or a comma-separated list of d scalars.
Mat resolve_alpha(const std::string& spec, const CoendBundle& b) {
    for (const auto& n : named_alphas())
        if (n == spec) return named_alpha(spec, b);
    if (spec.find(',') == std::string::npos && b.d != 1)
        throw usage_error("unknown Kirby candidate '" + spec + "' (expected unit, uniform, zero or a list of " +
                          std::to_string(b.d) + " scalars)");
    Mat a(b.d, 1);
    std::stringstream ss(spec);
    std::string item;
    std::size_t k = 0;
    while (std::getline(ss, item, ',')) {
        if (k >= b.d) throw usage_error("Kirby candidate has more than " + std::to_string(b.d) + " entries");
        a(k++, 0) = Scalar::parse(item);
    }
    if (k != b.d) throw usage_error("Kirby candidate needs " + std::to_string(b.d) + " entries, got " + std::to_string(k));
    return a;
}

int cmd_normalize(const Options& o) {
    Tracer tr(o.trace_dir);
    const HopfDiagram D = read_diagram(o.input);
    tr.dump("input.hd", term_to_string(D.term));
    const BraidedTerm e = eliminate_antipodes(D.term);
    tr.dump("antipode-free.hd", term_to_string(e));
    const BraidedTerm c = canonicalize(D.term);
    tr.dump("canonical.hd", term_to_string(c));
    if (o.json)
        emit_json(o, {{"input_slices", D.term.slices.size()}, {"slices", c.slices.size()}, {"diagram", term_to_string(c)}});
    else
        write_output(o, term_to_string(c));
    return 0;
}

int cmd_translate(const Options& o) {
    Tracer tr(o.trace_dir);
    ExtractionTrace et;
    TangleWord w;
    const StringLinkPresentation T = read_string_link(o.input, &et, &w);
    if (!w.events.empty() || w.bottom_width) tr.dump("input.tangle", tangle_to_string(w));
    for (std::size_t k = 0; k < et.stages.size(); ++k) tr.dump("extract-" + std::to_string(k + 1) + ".tangle", tangle_to_string(et.stages[k]));
    tr.dump("presentation.pres", presentation_to_string(T));
    // Psi(T) step by step: Psi0 of the braid, the contractions, then the twists
    std::vector<std::string> steps;
    HopfDiagram D = psi0(T.P);
    steps.push_back("psi0 letters=" + std::to_string(T.P.letters.size()) + " n=" + std::to_string(T.P.n));
    tr.dump("psi0.hd", term_to_string(D.term));
    for (int j : T.contractions) {
        D = contract_C(D, j);
        steps.push_back("contract C_" + std::to_string(j) + " n=" + std::to_string(D.n()));
        tr.dump("contract-" + std::to_string(j) + ".hd", term_to_string(D.term));
    }
    const HopfDiagram full = psi_full(T);
    std::string tw;
    for (int a : T.twists) tw += " " + std::to_string(a);
    steps.push_back("twists" + tw);
    tr.dump("psi.hd", term_to_string(full.term));
    if (o.json) {
        emit_json(o, {{"presentation", presentation_to_string(T)},
                      {"n", T.n()},
                      {"contractions", T.contractions},
                      {"twists", T.twists},
                      {"steps", steps},
                      {"diagram", term_to_string(full.term)}});
        return 0;
    }
    std::string text;
    std::istringstream ps(presentation_to_string(T));
    for (std::string line; std::getline(ps, line);) text += "# " + line + "\n";
    for (const auto& s : steps) text += "# step " + s + "\n";
    write_output(o, text + term_to_string(full.term));
    return 0;
}

int cmd_phi(const Options& o) {
    Tracer tr(o.trace_dir);
    const HopfDiagram D = read_diagram(o.input);
    const TangleWord h = phi(D);
    tr.dump("input.hd", term_to_string(D.term));
    tr.dump("handle.tangle", tangle_to_string(h));
    if (o.json)
        emit_json(o, {{"n", D.n()}, {"events", h.events.size()}, {"tangle", tangle_to_string(h)}});
    else
        write_output(o, tangle_to_string(h));
    return 0;
}

std::string index_label(std::size_t col, std::size_t d, int n) {
    std::vector<std::size_t> g(n);
    for (int p = n - 1; p >= 0; --p) {
        g[p] = col % d;
        col /= d;
    }
    std::string s = "e[";
    for (int p = 0; p < n; ++p) s += (p ? "," : "") + std::to_string(g[p]);
    return s + "]";
}

int cmd_evaluate(const Options& o) {
    const HopfDiagram D = read_diagram(o.input);
    const CoendBundle B = resolve_bundle(o.bundle);
    const Mat E = eval_term(D.term, B);
    if (o.json) {
        json vals = json::array();
        for (std::size_t k = 0; k < E.cols; ++k) vals.push_back(E(0, k).str());
        emit_json(o, {{"bundle", B.name}, {"d", B.d}, {"n", D.n()}, {"values", vals}});
        return 0;
    }
    std::string text = "bundle=" + B.name + " d=" + std::to_string(B.d) + " n=" + std::to_string(D.n()) + "\n";
    for (std::size_t k = 0; k < E.cols; ++k) text += index_label(k, B.d, D.n()) + " = " + E(0, k).str() + "\n";
    write_output(o, text);
    return 0;
}

json kirby_json(const std::string& name, const KirbyCandidate& k) {
    return {{"alpha", name},
            {"s_fixed", k.s_fixed},
            {"coproduct_law", k.coproduct_law},
            {"kirby_ok", k.kirby_ok},
            {"normalizable", k.normalizable},
            {"theta_plus", k.theta_plus.str()},
            {"theta_minus", k.theta_minus.str()}};
}

int cmd_kirby(const Options& o) {
    const CoendBundle B = resolve_bundle(o.bundle);
    std::vector<std::string> names;
    if (o.kirby_alpha == "all")
        names = named_alphas();
    else
        names = {o.kirby_alpha};
    json all = json::array();
    std::string text;
    for (const auto& n : names) {
        const KirbyCandidate k = kirby_check(resolve_alpha(n, B), B);
        all.push_back(kirby_json(n, k));
        text += "alpha=" + n + " s_fixed=" + (k.s_fixed ? "1" : "0") + " coproduct_law=" + (k.coproduct_law ? "1" : "0") +
                " kirby_ok=" + (k.kirby_ok ? "1" : "0") + " normalizable=" + (k.normalizable ? "1" : "0") +
                " theta_plus=" + k.theta_plus.str() + " theta_minus=" + k.theta_minus.str() + "\n";
    }
    if (o.json)
        emit_json(o, {{"bundle", B.name}, {"candidates", all}});
    else
        write_output(o, text);
    return 0;
}

int cmd_invariant(const Options& o) {
    Tracer tr(o.trace_dir);
    const CoendBundle B = resolve_bundle(o.bundle);
    const Mat alpha = resolve_alpha(o.alpha, B);
    TangleWord w;
    const StringLinkPresentation T = read_string_link(o.input, nullptr, &w);
    if (!w.events.empty() || w.bottom_width) tr.dump("input.tangle", tangle_to_string(w));
    tr.dump("presentation.pres", presentation_to_string(T));
    const TauResult r = invariant_tau(T, alpha, B);
    tr.dump("psi.hd", term_to_string(r.diagram.term));
    if (o.json) {
        emit_json(o, {{"bundle", B.name},
                      {"alpha", o.alpha},
                      {"n_L", r.link.n_L},
                      {"b_minus", r.link.b_minus},
                      {"linking_matrix", matrix_json(r.link.linking_matrix)},
                      {"raw", r.raw.str()},
                      {"tau", r.tau.str()}});
        return 0;
    }
    write_output(o, "tau=" + r.tau.str() + "\nb_minus=" + std::to_string(r.link.b_minus) + " n_L=" +
                        std::to_string(r.link.n_L) + "\nlinking=" + matrix_text(r.link.linking_matrix) + "\nraw=" +
                        r.raw.str() + "\n");
    return 0;
}

int cmd_confluence(const Options& o) {
    const ConfluenceReport r = local_confluence_report(o.max_size);
    if (o.json) {
        emit_json(o, {{"max_size", o.max_size},
                      {"terms", r.terms_enumerated},
                      {"pairs", r.pairs_checked},
                      {"failures", r.failures},
                      {"failure_examples", r.failure_examples}});
    } else {
        std::string text = "terms=" + std::to_string(r.terms_enumerated) + " pairs=" + std::to_string(r.pairs_checked) +
                           "\nfailures=" + std::to_string(r.failures) + "\n";
        for (const auto& f : r.failure_examples) text += "# " + f + "\n";
        write_output(o, text);
    }
    return r.failures == 0 ? 0 : 1;
}

int cmd_selftest(const Options& o) {
    AcceptanceOptions a;
    a.fixtures_dir = o.fixtures;
    a.filter = o.filter;
    a.seed = o.seed;
    for (const auto& b : o.extra_bundles) a.extra_bundles.push_back(resolve_bundle(b, false));
    const auto results = run_acceptance(a, o.json ? nullptr : &std::cout);
    std::size_t failed = 0;
    for (const auto& r : results) failed += r.pass ? 0 : 1;
    if (o.json) {
        json arr = json::array();
        for (const auto& r : results)
            arr.push_back({{"id", r.id}, {"criterion", r.slug}, {"pass", r.pass}, {"seconds", r.seconds}, {"budget", r.budget},
                           {"detail", r.detail}});
        std::cout << json{{"results", arr}, {"failed", failed}}.dump(2) << "\n";
    } else {
        std::cout << results.size() - failed << "/" << results.size() << " criteria passed\n";
    }
    if (results.empty()) throw usage_error("no criterion matches filter '" + o.filter + "'");
    return failed ? 1 : 0;
}

std::string one_line(std::string s) {
    for (auto& ch : s)
        if (ch == '\n' || ch == '\r') ch = ' ';
    return s;
}

}  // namespace

int main(int argc, char** argv) {
    Options o;
    if (const char* f = std::getenv("HOPFC_FIXTURES")) o.fixtures = f;
    if (o.fixtures.empty()) o.fixtures = HOPFDIAG_FIXTURES;

    CLI::App app{"Hopf diagram translator and evaluator"};
    app.require_subcommand(1);
    app.fallthrough();
    app.add_flag("--json", o.json, "machine-readable output");
    app.add_option("--trace", o.trace_dir, "write each pipeline stage into this directory");
    app.add_option("--seed", o.seed, "seed for generated corpora")->capture_default_str();
    app.add_option("-o,--out", o.out, "write the result here instead of stdout");

    auto* normalize = app.add_subcommand("normalize", "canonical form of a Hopf diagram file");
    normalize->add_option("file", o.input)->required();
    auto* translate = app.add_subcommand("translate", "Hopf diagram of a braid, presentation or tangle file");
    translate->add_option("file", o.input)->required();
    auto* phic = app.add_subcommand("phi", "handle tangle of a Hopf diagram file");
    phic->add_option("file", o.input)->required();
    auto* evaluate = app.add_subcommand("evaluate", "evaluate a Hopf diagram against a bundle");
    evaluate->add_option("file", o.input)->required();
    evaluate->add_option("--bundle", o.bundle, "built-in name or bundle file")->capture_default_str();
    auto* kirby = app.add_subcommand("kirby", "check Kirby candidates of a bundle");
    kirby->add_option("--bundle", o.bundle, "built-in name or bundle file")->capture_default_str();
    kirby->add_option("--alpha", o.kirby_alpha, "unit, uniform, zero, all, or a comma-separated vector")->capture_default_str();
    auto* invariant = app.add_subcommand("invariant", "surgery invariant of a braid, presentation or tangle file");
    invariant->add_option("file", o.input)->required();
    invariant->add_option("--bundle", o.bundle, "built-in name or bundle file")->capture_default_str();
    invariant->add_option("--alpha", o.alpha, "unit, uniform, zero or a comma-separated vector")->capture_default_str();
    auto* confluence = app.add_subcommand("confluence", "local confluence of the antipode rules");
    confluence->add_option("--max-size", o.max_size, "largest term size enumerated")->capture_default_str();
    auto* selftest = app.add_subcommand("selftest", "run the acceptance criteria");
    selftest->add_option("--filter", o.filter, "criterion number or slug substring");
    selftest->add_option("--fixtures", o.fixtures, "fixtures directory")->capture_default_str();
    selftest->add_option("--bundle", o.extra_bundles, "extra bundle files that must validate");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (*normalize) return cmd_normalize(o);
        if (*translate) return cmd_translate(o);
        if (*phic) return cmd_phi(o);
        if (*evaluate) return cmd_evaluate(o);
        if (*kirby) return cmd_kirby(o);
        if (*invariant) return cmd_invariant(o);
        if (*confluence) return cmd_confluence(o);
        if (*selftest) return cmd_selftest(o);
    } catch (const bundle_error& e) {
        std::cerr << "hopfc: bundle error (" << e.axiom() << "): " << one_line(e.what()) << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "hopfc: error: " << one_line(e.what()) << "\n";
        return 1;
    }
    return 2;
}
