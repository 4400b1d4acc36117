// Command-line front end: listings, cone data, diagrams, verification
// batteries, and the conjecture explorer. Exit codes: 0 success,
// 1 verification failure, 2 usage or input error.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "lcone/cone.hpp"
#include "lcone/crystal.hpp"
#include "lcone/rectangle.hpp"
#include "lcone/render.hpp"
#include "lcone/verify.hpp"
#include "lcone/wiring.hpp"

using json = nlohmann::ordered_json;
using namespace lcone;

namespace {

int rank_limit() {
    if (const char* e = std::getenv("LCONE_MAX_RANK")) {
        int v = std::atoi(e);
        if (v >= 1) return v;
    }
    return 5;
}

std::vector<int> parse_letters(const std::string& s) {
    std::vector<int> out;
    std::string cur;
    for (char ch : s + " ") {
        if (ch == ',' || ch == ' ' || ch == '\t' || ch == '(' || ch == ')') {
            if (!cur.empty()) {
                out.push_back(std::stoi(cur));
                cur.clear();
            }
        } else if (ch >= '0' && ch <= '9') {
            cur += ch;
        } else {
            throw input_error("cannot parse word: " + s);
        }
    }
    return out;
}

json root_json() { return json{{"format", 1}}; }

json roots_json(const RootMultiset& m) {
    json arr = json::array();
    for (const auto& [r, c] : m)
        arr.push_back({{"i", r.lo}, {"j", r.hi}, {"mult", c}});
    return arr;
}

json label_json(const ConeLabel& label) {
    if (label.simple) return json{{"simple", label.j}};
    return json{{"quiver", label.quiver.str()}};
}

json sset_json(const std::set<PositiveRoot>& s) {
    json arr = json::array();
    for (const PositiveRoot& r : s) arr.push_back({{"i", r.lo}, {"j", r.hi}});
    return arr;
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream f(path);
    if (!f) throw input_error("cannot write " + path);
    f << content;
}

int cmd_words(int n, bool classes, bool count_only, bool as_json) {
    if (classes) {
        CommutationClasses cc = commutation_classes(n, rank_limit());
        if (as_json) {
            json j = root_json();
            j["n"] = n;
            j["class_count"] = cc.classes.size();
            json reps = json::array();
            for (const auto& cls : cc.classes)
                reps.push_back(cc.words[cls[0]].letters);
            j["representatives"] = reps;
            j["braid_edges"] = cc.braid_edges;
            std::cout << j.dump() << "\n";
        } else if (count_only) {
            std::cout << cc.classes.size() << "\n";
        } else {
            for (const auto& cls : cc.classes)
                std::cout << cc.words[cls[0]].str() << "  (size " << cls.size()
                          << ")\n";
        }
        return 0;
    }
    std::vector<ReducedWord> words = enumerate_reduced_words(n, rank_limit());
    if (as_json) {
        json j = root_json();
        j["n"] = n;
        j["count"] = words.size();
        if (!count_only) {
            json arr = json::array();
            for (const ReducedWord& w : words) arr.push_back(w.letters);
            j["words"] = arr;
        }
        std::cout << j.dump() << "\n";
    } else if (count_only) {
        std::cout << words.size() << "\n";
    } else {
        for (const ReducedWord& w : words) std::cout << w.str() << "\n";
    }
    return 0;
}

int cmd_cone(int n, const std::string& word_str, bool as_json) {
    ReducedWord w = make_reduced_word(n, parse_letters(word_str));
    ConeMatrix cm = cone_matrix(w);
    std::vector<SpanningVector> svs = spanning_vectors(w);
    if (as_json) {
        json j = root_json();
        j["n"] = n;
        j["word"] = w.letters;
        j["det"] = cm.det;
        json rows = json::array();
        for (size_t i = 0; i < cm.rows.size(); ++i)
            rows.push_back({{"label", cm.row_labels[i].str()},
                            {"coeffs", cm.rows[i]}});
        j["rows"] = rows;
        json vecs = json::array();
        for (const SpanningVector& sv : svs)
            vecs.push_back(
                {{"label", label_json(sv.label)},
                 {"coords", sv.coords},
                 {"roots", roots_json(root_multiset_of(w, sv.coords))}});
        j["spanning_vectors"] = vecs;
        std::cout << j.dump() << "\n";
        return 0;
    }
    std::cout << "word " << w.str() << ", det " << cm.det << "\n";
    for (size_t i = 0; i < cm.rows.size(); ++i) {
        std::cout << "row " << cm.row_labels[i].str() << ":";
        for (long long x : cm.rows[i]) std::cout << " " << x;
        std::cout << "\n";
    }
    for (const SpanningVector& sv : svs) {
        std::cout << "a(" << sv.label.str() << ") =";
        for (long long x : sv.coords) std::cout << " " << x;
        std::cout << "\n";
    }
    return 0;
}

int cmd_rectangle(int n, const std::string& quiver_str, int simple_j,
                  const std::string& svg_path, bool ascii, bool as_json) {
    RectangleDiagram d = simple_j > 0 ? diagram_simple(n, simple_j)
                                      : diagram(parse_partial_quiver(n, quiver_str));
    std::vector<int> m = mu(d);
    auto fword = monomial_word(d);
    std::set<PositiveRoot> s = s_set(d);
    std::vector<int> v = v_vector(d);

    if (!svg_path.empty()) write_file(svg_path, svg_rectangle_diagram(d));
    if (as_json) {
        json j = root_json();
        j["n"] = n;
        if (d.is_simple)
            j["simple"] = d.simple_j;
        else
            j["quiver"] = d.quiver.str();
        json cells = json::array();
        for (const DiagramCell& c : d.cells)
            cells.push_back({{"u", c.u},
                             {"v", c.v},
                             {"label", c.label},
                             {"mult", c.mult}});
        j["cells"] = cells;
        json rows = json::array();
        for (const BoxRow& br : d.box_rows) rows.push_back(br.count);
        j["box_rows"] = rows;
        j["central_index"] = d.central_index;
        j["mu"] = m;
        json fw = json::array();
        for (auto [letter, exp] : fword)
            fw.push_back({{"letter", letter}, {"exp", exp}});
        j["monomial"] = fw;
        j["s_set"] = sset_json(s);
        j["v"] = v;
        std::cout << j.dump() << "\n";
        return 0;
    }
    if (ascii) std::cout << ascii_rectangle_diagram(d);
    std::cout << "mu =";
    for (int x : m) std::cout << " " << x;
    std::cout << "\nF =";
    for (auto [letter, exp] : fword) {
        std::cout << " F" << letter;
        if (exp > 1) std::cout << "^(" << exp << ")";
    }
    std::cout << "\nS =";
    for (const PositiveRoot& r : s) std::cout << " " << r.str();
    std::cout << "\nv =";
    for (int x : v) std::cout << " " << x;
    std::cout << "\n";
    return 0;
}

int cmd_chambers(int n, const std::string& word_str,
                 const std::string& svg_path, bool as_json) {
    ReducedWord w = make_reduced_word(n, parse_letters(word_str));
    std::vector<Chamber> chambers = chamber_sets(w);
    if (!svg_path.empty()) write_file(svg_path, svg_chamber_diagram(w));
    if (as_json) {
        json j = root_json();
        j["n"] = n;
        j["word"] = w.letters;
        json arr = json::array();
        for (const Chamber& c : chambers)
            arr.push_back({{"s", c.pair.s},
                           {"s_prime", c.pair.s_prime},
                           {"letter", c.pair.letter},
                           {"label", c.label}});
        j["chambers"] = arr;
        std::cout << j.dump() << "\n";
        return 0;
    }
    std::cout << ascii_chamber_diagram(w);
    return 0;
}

int cmd_verify(const std::string& suite, int n, int samples, unsigned seed,
               bool as_json) {
    std::vector<VerifyReport> reports;
    auto pick_n = [&](int dflt) { return n > 0 ? n : dflt; };
    if (suite == "multiset" || suite == "all")
        reports.push_back(verify_multiset(pick_n(4)));
    if (suite == "rectangle-word" || suite == "all")
        reports.push_back(verify_rectangle_word(pick_n(5)));
    if (suite == "theorem63" || suite == "all")
        reports.push_back(verify_theorem63(pick_n(6)));
    if (suite == "crossing-out" || suite == "all")
        reports.push_back(verify_crossing_out(pick_n(5), samples, seed));
    if (suite == "transport" || suite == "all")
        reports.push_back(verify_transport(pick_n(4), samples, seed));
    if (suite == "premat" || suite == "all")
        reports.push_back(verify_premat(pick_n(4), std::min(samples, 100), seed));

    bool ok = true;
    json j = root_json();
    json arr = json::array();
    for (const VerifyReport& r : reports) {
        ok = ok && r.ok();
        if (as_json) {
            json fj = json::array();
            for (size_t i = 0; i < r.failures.size() && i < 20; ++i)
                fj.push_back({{"input", r.failures[i].input},
                              {"expected", r.failures[i].expected},
                              {"got", r.failures[i].got}});
            arr.push_back({{"suite", r.suite},
                           {"instances", r.instances},
                           {"failures", r.failures.size()},
                           {"failure_samples", fj}});
        } else {
            std::cout << r.suite << ": " << r.instances << " instances, "
                      << r.failures.size() << " failures\n";
            for (size_t i = 0; i < r.failures.size() && i < 10; ++i)
                std::cout << "  FAIL " << r.failures[i].input << ": expected "
                          << r.failures[i].expected << ", got "
                          << r.failures[i].got << "\n";
        }
    }
    if (as_json) {
        j["reports"] = arr;
        j["ok"] = ok;
        std::cout << j.dump() << "\n";
    }
    return ok ? 0 : 1;
}

int cmd_conjecture(int n, int samples, unsigned seed, bool as_json) {
    ConjectureReport rep = conjecture_explore(n, samples, seed);
    if (as_json) {
        json j = root_json();
        j["n"] = n;
        j["k_word"] = rep.k_word.letters;
        j["k_prime"] = rep.k_prime.letters;
        json arr = json::array();
        for (const ConjectureClassReport& c : rep.classes)
            arr.push_back({{"class", c.class_index},
                           {"representative", c.representative.letters},
                           {"rank", c.rank},
                           {"independent", c.independent},
                           {"samples", c.samples},
                           {"linearity_violations", c.linearity_violations}});
        j["classes"] = arr;
        j["braid_edges"] = rep.braid_edges;
        std::cout << j.dump() << "\n";
        return 0;
    }
    std::cout << "context word " << rep.k_word.str() << ", opposite "
              << rep.k_prime.str() << "\n";
    for (const ConjectureClassReport& c : rep.classes)
        std::cout << "class " << c.class_index << " rep "
                  << c.representative.str() << ": rank " << c.rank
                  << (c.independent ? " (independent)" : " (DEPENDENT)")
                  << ", linearity violations " << c.linearity_violations << "/"
                  << c.samples << "\n";
    std::cout << "class adjacency:";
    for (auto [a, b] : rep.braid_edges) std::cout << " " << a << "-" << b;
    std::cout << "\n";
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact combinatorics of reduced words, cones, rectangle "
                 "diagrams, and crystal operators"};
    app.require_subcommand(1);
    bool as_json = false;
    app.add_flag("--json", as_json, "machine-readable JSON output");

    auto* words = app.add_subcommand("words", "list reduced words or classes");
    int words_n = 2;
    bool classes = false, count_only = false;
    words->add_option("n", words_n, "rank")->required();
    words->add_flag("--classes", classes, "one representative per class");
    words->add_flag("--count", count_only, "print the count only");

    auto* cone = app.add_subcommand("cone", "cone matrix and spanning vectors");
    int cone_n = 2;
    std::string cone_word;
    cone->add_option("n", cone_n, "rank")->required();
    cone->add_option("-w,--word", cone_word, "reduced word, e.g. \"1,2,1\"")
        ->required();

    auto* rect = app.add_subcommand("rectangle", "glued rectangle diagram");
    int rect_n = 2, rect_simple = 0;
    std::string rect_q, rect_svg;
    bool rect_ascii = false;
    rect->add_option("n", rect_n, "rank")->required();
    rect->add_option("P", rect_q, "partial quiver, e.g. LRL-");
    rect->add_option("--simple", rect_simple, "simple index instead of P");
    rect->add_option("--svg", rect_svg, "write an SVG rendering here");
    rect->add_flag("--ascii", rect_ascii, "text rendering");

    auto* cham = app.add_subcommand("chambers", "wiring diagram chamber sets");
    int cham_n = 2;
    std::string cham_word, cham_svg;
    cham->add_option("n", cham_n, "rank")->required();
    cham->add_option("-w,--word", cham_word, "reduced word")->required();
    cham->add_option("--svg", cham_svg, "write an SVG rendering here");

    auto* ver = app.add_subcommand("verify", "run a verification battery");
    std::string suite;
    int ver_n = 0, ver_samples = 10000;
    unsigned ver_seed = 1;
    ver->add_option("suite", suite, "battery name")
        ->required()
        ->check(CLI::IsMember({"multiset", "rectangle-word", "theorem63",
                               "crossing-out", "transport", "premat", "all"}));
    ver->add_option("-n", ver_n, "override the maximal rank");
    ver->add_option("--samples", ver_samples, "random samples per rank");
    ver->add_option("--seed", ver_seed, "random seed");

    auto* conj = app.add_subcommand("conjecture", "per-class linearity report");
    int conj_n = 2, conj_samples = 100;
    unsigned conj_seed = 1;
    conj->add_option("n", conj_n, "rank (at most 4)")->required();
    conj->add_option("--samples", conj_samples, "sampled combinations");
    conj->add_option("--seed", conj_seed, "random seed");

    try {
        app.parse(argc, argv);
        if (words->parsed())
            return cmd_words(words_n, classes, count_only, as_json);
        if (cone->parsed()) return cmd_cone(cone_n, cone_word, as_json);
        if (rect->parsed()) {
            if (rect_q.empty() && rect_simple == 0)
                throw input_error("rectangle needs a partial quiver or --simple");
            return cmd_rectangle(rect_n, rect_q, rect_simple, rect_svg,
                                 rect_ascii, as_json);
        }
        if (cham->parsed())
            return cmd_chambers(cham_n, cham_word, cham_svg, as_json);
        if (ver->parsed())
            return cmd_verify(suite, ver_n, ver_samples, ver_seed, as_json);
        if (conj->parsed())
            return cmd_conjecture(conj_n, conj_samples, conj_seed, as_json);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    } catch (const input_error& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return 2;
    } catch (const capacity_error& e) {
        std::cerr << "capacity error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}
