#include <fstream>
#include <sstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include <nlohmann/json.hpp>

#include "gclab/classes.hpp"
#include "gclab/containment.hpp"
#include "gclab/forbidden.hpp"
#include "gclab/graph6.hpp"
#include "gclab/json_io.hpp"
#include "gclab/parallel.hpp"
#include "gclab/recognizers.hpp"

namespace {

using gclab::Graph;

constexpr int kClassifyCapacity = 12;

struct RunConfig {
    std::string input = "-";
    std::string classes_arg = "all";
    std::vector<std::string> classes;
    bool certificates = false;
    std::string format = "jsonl";
    unsigned threads = 0;  // 0: flag absent, use GCLAB_THREADS or hardware
    std::string forb_class;
    int max_n = 8;
    std::string out_path;
    std::string order = "ind";
    std::string pattern_path, host_path;
    bool witness = false;
    int gen_n = 0;
};

unsigned resolve_threads(const RunConfig& cfg) {
    return cfg.threads > 0 ? cfg.threads : gclab::default_thread_count();
}

struct InputLine {
    std::size_t line_no;
    std::string text;
};

std::vector<InputLine> read_graph_lines(std::istream& in) {
    std::vector<InputLine> lines;
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;
        if (line.rfind(">>", 0) == 0) continue;  // format header
        lines.push_back(InputLine{line_no, line});
    }
    return lines;
}

std::optional<Graph> first_graph_in_file(const std::string& path, std::string& error) {
    std::ifstream in(path);
    if (!in) {
        error = "cannot open " + path;
        return std::nullopt;
    }
    const auto lines = read_graph_lines(in);
    if (lines.empty()) {
        error = "no graph6 line in " + path;
        return std::nullopt;
    }
    try {
        return gclab::parse_graph6(lines.front().text);
    } catch (const gclab::Graph6ParseError& e) {
        error = path + ": " + e.what();
        return std::nullopt;
    }
}

int cmd_classify(const RunConfig& cfg) {
    std::vector<gclab::GraphClass> roster;
    for (const auto& name : cfg.classes) roster.push_back(*gclab::class_from_name(name));

    std::ifstream file;
    if (cfg.input != "-") {
        file.open(cfg.input);
        if (!file) {
            std::cerr << "gclab: cannot open " << cfg.input << "\n";
            return 2;
        }
    }
    const auto lines = read_graph_lines(cfg.input == "-" ? std::cin : file);

    bool parse_failed = false;
    std::vector<std::pair<std::size_t, Graph>> graphs;
    for (const auto& line : lines) {
        try {
            Graph g = gclab::parse_graph6(line.text);
            if (g.order() > kClassifyCapacity) {
                std::cerr << "gclab: line " << line.line_no << ": graph on " << g.order()
                          << " vertices exceeds classify capacity (" << kClassifyCapacity
                          << "), skipped\n";
                continue;
            }
            graphs.emplace_back(line.line_no, std::move(g));
        } catch (const gclab::Graph6ParseError& e) {
            std::cerr << "gclab: line " << line.line_no << ": " << e.what() << "\n";
            parse_failed = true;
        }
    }

    auto records = gclab::parallel_map<std::string>(
        graphs.size(), resolve_threads(cfg), [&](std::size_t i) {
            const Graph& g = graphs[i].second;
            if (cfg.format == "tsv") {
                std::string row = gclab::to_graph6(g);
                for (gclab::GraphClass c : roster)
                    row += gclab::is_member(g, c) ? "\t1" : "\t0";
                return row;
            }
            nlohmann::ordered_json rec;
            rec["graph6"] = gclab::to_graph6(g);
            auto& classes = rec["classes"] = nlohmann::ordered_json::object();
            nlohmann::ordered_json certs = nlohmann::ordered_json::object();
            for (gclab::GraphClass c : roster) {
                if (cfg.certificates) {
                    const auto result = gclab::classify_as(g, c);
                    classes[std::string(gclab::class_name(c))] = result.member;
                    if (result.certificate)
                        certs[std::string(gclab::class_name(c))] =
                            gclab::certificate_to_json(*result.certificate);
                } else {
                    classes[std::string(gclab::class_name(c))] = gclab::is_member(g, c);
                }
            }
            if (cfg.certificates) rec["certificates"] = std::move(certs);
            return rec.dump();
        });
    for (const auto& record : records) std::cout << record << "\n";
    return parse_failed ? 2 : 0;
}

int cmd_forb(const RunConfig& cfg) {
    if (cfg.max_n == 9)
        std::cerr << "gclab: max-n 9 enumerates 274668 graphs; this can take a while\n";
    const auto spec = gclab::class_spec(*gclab::class_from_name(cfg.forb_class));
    gclab::ForbiddenReport report;
    try {
        report = gclab::minimal_forbidden(spec, cfg.max_n, resolve_threads(cfg));
    } catch (const gclab::NonHereditaryError& e) {
        std::cerr << "gclab: " << e.what() << "\n";
        return 3;
    }
    const std::string text = gclab::report_to_json(report).dump(2) + "\n";
    if (cfg.out_path.empty()) {
        std::cout << text;
    } else {
        std::ofstream out(cfg.out_path);
        if (!out) {
            std::cerr << "gclab: cannot write " << cfg.out_path << "\n";
            return 2;
        }
        out << text;
    }
    return 0;
}

int cmd_contain(const RunConfig& cfg) {
    std::string error;
    const auto pattern = first_graph_in_file(cfg.pattern_path, error);
    if (!pattern) {
        std::cerr << "gclab: " << error << "\n";
        return 2;
    }
    const auto host = first_graph_in_file(cfg.host_path, error);
    if (!host) {
        std::cerr << "gclab: " << error << "\n";
        return 2;
    }
    const auto kind = *gclab::order_kind_from_name(cfg.order);
    const auto witness = gclab::contains(*host, *pattern, kind);
    nlohmann::ordered_json j;
    j["contained"] = witness.has_value();
    j["order"] = cfg.order;
    if (witness && cfg.witness) j["witness"] = gclab::witness_to_json(*witness, *pattern);
    std::cout << j.dump() << "\n";
    return witness ? 0 : 1;
}

int cmd_gen(const RunConfig& cfg) {
    for (const Graph& g : gclab::enumerate_graphs(cfg.gen_n, resolve_threads(cfg)))
        std::cout << gclab::to_graph6(g) << "\n";
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"gclab: hereditary graph classes, their certificates, and their minimal"
                 " forbidden induced subgraphs, at desk scale"};
    app.require_subcommand(1);
    RunConfig cfg;

    auto* classify = app.add_subcommand(
        "classify", "classify graph6 lines against the class roster (jsonl or tsv out)");
    classify->add_option("--classes", cfg.classes_arg,
                         "comma-separated classes to test (default: all)");
    classify->add_flag("--certificates", cfg.certificates,
                       "emit per-class certificates (jsonl only)");
    classify->add_option("--format", cfg.format, "output format")
        ->check(CLI::IsMember({"jsonl", "tsv"}))
        ->capture_default_str();
    classify->add_option("--threads", cfg.threads, "worker threads (default: GCLAB_THREADS or all)");
    classify->add_option("input", cfg.input, "graph6 file, one graph per line ('-' = stdin)");

    auto* forb = app.add_subcommand(
        "forb", "minimal forbidden induced subgraphs and phi counts for one class");
    forb->add_option("--class", cfg.forb_class, "class name")
        ->required()
        ->check(CLI::IsMember(gclab::class_roster_names()));
    forb->add_option("--max-n", cfg.max_n, "largest order to sweep")
        ->check(CLI::Range(1, 9))
        ->capture_default_str();
    forb->add_option("--out", cfg.out_path, "write the JSON report here instead of stdout");
    forb->add_option("--threads", cfg.threads, "worker threads");

    auto* contain = app.add_subcommand("contain", "decide pattern <= host in a chosen ordering");
    contain->add_option("--order", cfg.order, "ordering")
        ->check(CLI::IsMember({"sub", "top", "minor", "ind", "topind"}))
        ->capture_default_str();
    contain->add_option("--pattern", cfg.pattern_path, "graph6 file with the pattern")->required();
    contain->add_option("--host", cfg.host_path, "graph6 file with the host")->required();
    contain->add_flag("--witness", cfg.witness, "print the embedding when contained");

    auto* gen = app.add_subcommand("gen", "stream all isomorphism classes of a given order");
    gen->add_option("--n", cfg.gen_n, "vertex count")->required()->check(CLI::Range(0, 9));
    gen->add_option("--threads", cfg.threads, "worker threads");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e);
    }

    if (cfg.certificates && cfg.format != "jsonl") {
        std::cerr << "gclab: --certificates requires --format jsonl\n";
        return 2;
    }

    // resolve the class roster before touching any input
    if (cfg.classes_arg == "all") {
        cfg.classes = gclab::class_roster_names();
    } else {
        std::string token;
        std::istringstream split(cfg.classes_arg);
        while (std::getline(split, token, ',')) {
            if (token.empty()) continue;
            if (!gclab::class_from_name(token)) {
                std::cerr << "gclab: unknown class '" << token << "'\n";
                return 2;
            }
            cfg.classes.push_back(token);
        }
        if (cfg.classes.empty()) {
            std::cerr << "gclab: --classes names no classes\n";
            return 2;
        }
    }

    try {
        if (classify->parsed()) return cmd_classify(cfg);
        if (forb->parsed()) return cmd_forb(cfg);
        if (contain->parsed()) return cmd_contain(cfg);
        if (gen->parsed()) return cmd_gen(cfg);
    } catch (const std::exception& e) {
        std::cerr << "gclab: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
