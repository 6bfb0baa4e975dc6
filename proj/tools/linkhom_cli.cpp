// Command-line front end: invariants, canonical forms and equivalence
// decisions for colored string links, colored links and spatial bouquet
// graphs, over the text DSL described in the README.

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include <linkhom/cache.hpp>
#include <linkhom/linkhom.hpp>

namespace {

using namespace linkhom;

constexpr int kExitEquivalent = 0;
constexpr int kExitDistinct = 1;
constexpr int kExitUnknown = 2;
constexpr int kExitUsage = 3;
constexpr int kExitParse = 3;
constexpr int kExitInternal = 4;

bool g_json_errors = false;

std::string read_file(const std::string& path)
{
    std::ifstream in(path);
    if (!in)
        throw std::runtime_error("cannot open file '" + path + "'");
    std::stringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

LinkDocument load_link(const std::string& path)
{
    return parse_link(read_file(path));
}

InvariantVector vector_of(const VectorCache& cache, const LinkDocument& doc)
{
    auto basis = make_basis(doc.decomposition);
    ColoredStringLink link(doc.decomposition, doc.word);
    if (!cache.enabled())
        return link.invariant_vector(basis);
    std::string key = VectorCache::key_of(doc.decomposition, doc.word);
    if (auto hit = cache.load(key, basis))
        return *hit;
    InvariantVector v = link.invariant_vector(basis);
    cache.store(key, v);
    return v;
}

int report_error(const std::string& kind, const std::string& message,
                 int line = 0, int column = 0)
{
    if (g_json_errors)
        std::cout << error_json(kind, message, line, column).dump() << "\n";
    else
        std::cerr << "error: " << message << "\n";
    return kind == "internal" ? kExitInternal : kExitParse;
}

int outcome_exit(const DecisionOutcome& o, bool certificate)
{
    switch (o.verdict) {
    case DecisionOutcome::Verdict::Equivalent:
        std::cout << "equivalent";
        if (certificate) {
            std::cout << " (witness:";
            if (o.witness.empty())
                std::cout << " empty";
            for (const auto& m : o.witness)
                std::cout << " [" << to_string(m) << "]";
            std::cout << ")";
        }
        std::cout << "\n";
        return kExitEquivalent;
    case DecisionOutcome::Verdict::Distinct:
        std::cout << "distinct";
        if (certificate && o.certificate)
            std::cout << " (" << describe(*o.certificate) << ")";
        std::cout << "\n";
        return kExitDistinct;
    case DecisionOutcome::Verdict::Unknown:
    default:
        std::cout << "unknown (budget exhausted after " << o.stats.expanded
                  << " expansions)\n";
        return kExitUnknown;
    }
}

std::vector<int> parse_colors_list(const std::string& text)
{
    std::istringstream in(text);
    std::vector<int> counts;
    int v;
    while (in >> v)
        counts.push_back(v);
    if (counts.empty() || !in.eof())
        throw std::runtime_error("expected a space-separated list of counts");
    return counts;
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Milnor homotopy invariants of colored string links, "
                 "colored links and spatial bouquet graphs"};
    app.require_subcommand(1);
    app.add_flag("--json-errors", g_json_errors,
                 "report errors as machine-readable JSON on stdout");

    std::string file_a, file_b, colors_text;
    bool as_json = false, as_tsv = false, show_certificate = false;
    long long budget = 10000;
    int level = 0;
    unsigned jobs = 1;

    auto* inv = app.add_subcommand("invariants",
                                   "print the full invariant vector");
    inv->add_option("file", file_a, "input document")->required();
    inv->add_flag("--json", as_json, "JSON output");
    inv->add_flag("--tsv", as_tsv, "TSV output (default)");

    auto* canon = app.add_subcommand(
        "canon", "print the canonical clasper word in DSL syntax");
    canon->add_option("file", file_a, "input document")->required();

    auto* eq = app.add_subcommand(
        "eq", "string-link equivalence: exit 0 equal, 1 distinct");
    eq->add_option("file1", file_a, "first document")->required();
    eq->add_option("file2", file_b, "second document")->required();

    auto* ceq = app.add_subcommand(
        "closure-eq",
        "closure equivalence: exit 0 equivalent, 1 distinct, 2 unknown");
    ceq->add_option("file1", file_a, "first document")->required();
    ceq->add_option("file2", file_b, "second document")->required();
    ceq->add_option("--budget", budget, "search budget in node expansions");
    ceq->add_option("--jobs", jobs, "worker threads for the search");
    ceq->add_flag("--certificate", show_certificate,
                  "print the witness moves or the separating invariant");

    auto* cnt = app.add_subcommand("count", "invariant coordinate counts");
    cnt->add_option("--colors", colors_text, "strand counts, e.g. \"1 1 1\"")
        ->required();
    cnt->add_option("--level", level, "count one level only");

    auto* geq = app.add_subcommand(
        "graph-eq", "spatial bouquet graph equivalence: exit 0/1/2");
    geq->add_option("file1", file_a, "first document")->required();
    geq->add_option("file2", file_b, "second document")->required();
    geq->add_option("--budget", budget, "search budget in node expansions");
    geq->add_option("--jobs", jobs, "worker threads for the search");
    geq->add_flag("--certificate", show_certificate,
                  "print the witness moves or the separating invariant");

    auto* red = app.add_subcommand(
        "reduce-graph", "print the component decomposition of a graph file");
    red->add_option("file", file_a, "input graph document")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : kExitUsage;
    }

    try {
        VectorCache cache = VectorCache::from_env();

        if (inv->parsed()) {
            LinkDocument doc = load_link(file_a);
            InvariantVector v = vector_of(cache, doc);
            if (as_json)
                std::cout << to_json(v).dump(2) << "\n";
            else
                std::cout << to_tsv(v);
            return 0;
        }

        if (canon->parsed()) {
            LinkDocument doc = load_link(file_a);
            ColoredStringLink link(doc.decomposition, doc.word);
            ColoredStringLink c = canonical_form(link);
            LinkDocument out{c.ambient(), c.word(), doc.name, std::nullopt};
            std::cout << serialize_link(out);
            return 0;
        }

        if (eq->parsed()) {
            LinkDocument da = load_link(file_a), db = load_link(file_b);
            if (!(da.decomposition == db.decomposition))
                return report_error("input", "decompositions differ");
            bool equal = vector_of(cache, da) == vector_of(cache, db);
            std::cout << (equal ? "equal" : "distinct") << "\n";
            return equal ? kExitEquivalent : kExitDistinct;
        }

        if (ceq->parsed() || geq->parsed()) {
            bool graph = geq->parsed();
            ComponentDecomposition la, lb;
            std::vector<GeneratorLink> wa, wb;
            if (graph) {
                GraphDocument da = parse_graph(read_file(file_a));
                GraphDocument db = parse_graph(read_file(file_b));
                la = da.decomposition;
                lb = db.decomposition;
                wa = da.word;
                wb = db.word;
            } else {
                LinkDocument da = load_link(file_a), db = load_link(file_b);
                la = da.decomposition;
                lb = db.decomposition;
                wa = da.word;
                wb = db.word;
            }
            if (!(la == lb))
                return report_error("input", "decompositions differ");
            ColoredStringLink a(la, wa), b(lb, wb);
            DecisionOutcome o = graph
                                    ? gclosure_equivalent(a, b, budget, jobs)
                                    : closure_equivalent(a, b, budget, jobs);
            return outcome_exit(o, show_certificate);
        }

        if (cnt->parsed()) {
            ComponentDecomposition l(parse_colors_list(colors_text));
            if (level > 0)
                std::cout << enumerate_canonical_sequences(l, level).size()
                          << "\n";
            else
                std::cout << invariant_count(l) << "\n";
            return 0;
        }

        if (red->parsed()) {
            GraphDocument doc = parse_graph(read_file(file_a));
            std::cout << "colors:";
            for (int c : doc.decomposition.counts())
                std::cout << " " << c;
            std::cout << "\n";
            return 0;
        }
    } catch (const ParseError& e) {
        return report_error("parse", e.what(), e.line, e.column);
    } catch (const std::invalid_argument& e) {
        return report_error("input", e.what());
    } catch (const std::domain_error& e) {
        return report_error("input", e.what());
    } catch (const std::runtime_error& e) {
        return report_error("io", e.what());
    } catch (const std::exception& e) {
        return report_error("internal", e.what());
    }
    return kExitInternal;
}
