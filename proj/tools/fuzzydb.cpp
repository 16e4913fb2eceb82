// Command-line front end: batch query evaluation over a directory of CSV
// tables, an interactive REPL, and the law-suite runner.

#include <CLI11.hpp>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <json.hpp>
#include <sstream>

#include "fuzzydb/errors.hpp"
#include "fuzzydb/io/table_io.hpp"
#include "fuzzydb/law/laws.hpp"
#include "fuzzydb/query/query.hpp"

namespace fs = std::filesystem;
using namespace fuzzydb;

namespace {

constexpr std::uint64_t kDefaultSeed = 1729;

constexpr int kExitOk = 0;
constexpr int kExitQueryError = 1;
constexpr int kExitIoError = 2;

query::Catalog load_catalog(const std::string& dir) {
    query::Catalog catalog;
    if (dir.empty()) {
        return catalog;
    }
    if (!fs::is_directory(dir)) {
        throw TableIoError("table directory not found: " + dir);
    }
    std::vector<fs::path> files;
    for (const auto& entry : fs::directory_iterator(dir)) {
        if (entry.is_regular_file() && entry.path().extension() == ".csv") {
            files.push_back(entry.path());
        }
    }
    std::sort(files.begin(), files.end());
    for (const fs::path& p : files) {
        std::string name = p.stem().string();
        if (!query::valid_table_name(name)) {
            std::cerr << "warning: skipping '" << p.string()
                      << "': stem is not a valid table name\n";
            continue;
        }
        catalog.emplace(name, io::read_table(p));
    }
    return catalog;
}

void write_result(const FuzzyArray& result, const std::string& output,
                  const std::string& format) {
    std::string text = format == "pretty" ? io::to_pretty(result) : io::to_csv(result);
    if (output.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream out(output, std::ios::binary | std::ios::trunc);
    if (!out) {
        throw TableIoError("cannot open output file: " + output);
    }
    out << text;
    if (!out) {
        throw TableIoError("error writing output file: " + output);
    }
}

int cmd_eval(const std::string& tables, const std::string& inline_query,
             const std::string& query_file, const std::string& output,
             const std::string& format) {
    query::Catalog catalog;
    std::string source = inline_query;
    try {
        catalog = load_catalog(tables);
        if (!query_file.empty()) {
            std::ifstream in(query_file, std::ios::binary);
            if (!in) {
                throw TableIoError("cannot open query file: " + query_file);
            }
            std::ostringstream buf;
            buf << in.rdbuf();
            source = buf.str();
        }
    } catch (const TableIoError& e) {
        std::cerr << "io error: " << e.what() << "\n";
        return kExitIoError;
    }
    try {
        FuzzyArray result = query::evaluate(*query::parse(source), catalog);
        write_result(result, output, format);
    } catch (const QueryError& e) {
        std::cerr << "query error at " << e.what() << "\n";
        return kExitQueryError;
    } catch (const TableIoError& e) {
        std::cerr << "io error: " << e.what() << "\n";
        return kExitIoError;
    }
    return kExitOk;
}

void repl_help(std::ostream& out) {
    out << "commands:\n"
           "  :load <path>          read a CSV table; its name is the file stem\n"
           "  :let <name> = <query> evaluate and bind the result\n"
           "  :schema <name>        print the columns of a table\n"
           "  :quit                 leave\n"
           "anything else is evaluated as a query against the loaded tables\n";
}

std::string trimmed(const std::string& s) {
    auto b = s.find_first_not_of(" \t\r\n");
    if (b == std::string::npos) {
        return "";
    }
    auto e = s.find_last_not_of(" \t\r\n");
    return s.substr(b, e - b + 1);
}

int cmd_repl(const std::string& tables, const std::string& format) {
    query::Catalog catalog;
    try {
        catalog = load_catalog(tables);
    } catch (const TableIoError& e) {
        std::cerr << "io error: " << e.what() << "\n";
        return kExitIoError;
    }
    std::cerr << "fuzzydb repl; :help for commands\n";
    std::string line;
    while (std::cerr << "fuzzydb> " << std::flush, std::getline(std::cin, line)) {
        std::string src = trimmed(line);
        if (src.empty() || src[0] == '#') {
            continue;
        }
        try {
            if (src[0] == ':') {
                std::istringstream words(src);
                std::string cmd;
                words >> cmd;
                if (cmd == ":quit" || cmd == ":q") {
                    return kExitOk;
                }
                if (cmd == ":help") {
                    repl_help(std::cerr);
                } else if (cmd == ":load") {
                    std::string path;
                    words >> path;
                    std::string name = fs::path(path).stem().string();
                    if (!query::valid_table_name(name)) {
                        std::cerr << "error: '" << name << "' is not a valid table name\n";
                        continue;
                    }
                    catalog.insert_or_assign(name, io::read_table(path));
                    std::cerr << "loaded " << name << "\n";
                } else if (cmd == ":let") {
                    std::string name;
                    std::string eq;
                    words >> name >> eq;
                    std::string rest;
                    std::getline(words, rest);
                    if (eq != "=" || !query::valid_table_name(name)) {
                        std::cerr << "usage: :let <name> = <query>\n";
                        continue;
                    }
                    catalog.insert_or_assign(name,
                                             query::evaluate(*query::parse(rest), catalog));
                    std::cerr << "bound " << name << "\n";
                } else if (cmd == ":schema") {
                    std::string name;
                    words >> name;
                    auto it = catalog.find(name);
                    if (it == catalog.end()) {
                        std::cerr << "error: unknown table '" << name << "'\n";
                        continue;
                    }
                    for (const ColumnKey& c : it->second.base().col_keys()) {
                        std::cout << c.to_string() << "\n";
                    }
                } else {
                    std::cerr << "error: unknown command " << cmd << "\n";
                }
                continue;
            }
            FuzzyArray result = query::evaluate(*query::parse(src), catalog);
            std::cout << (format == "pretty" ? io::to_pretty(result) : io::to_csv(result));
        } catch (const QueryError& e) {
            std::cerr << "query error at " << e.what() << "\n";
        } catch (const TableIoError& e) {
            std::cerr << "io error: " << e.what() << "\n";
        }
    }
    return kExitOk;
}

int cmd_check_laws(std::uint64_t seed, int count, const std::string& only_law) {
    std::vector<law::LawReport> reports;
    try {
        if (!only_law.empty()) {
            reports.push_back(law::check_law(only_law, seed, count));
        } else {
            reports = law::check_all_laws(seed, count);
        }
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    bool all_expected = true;
    nlohmann::json summary;
    summary["seed"] = seed;
    summary["count"] = count;
    summary["laws"] = nlohmann::json::array();
    for (const law::LawReport& rep : reports) {
        std::cout << law::report_line(rep) << "\n";
        if (!rep.as_expected) {
            all_expected = false;
            std::cout << rep.witness << "\n";
        }
        nlohmann::json j;
        j["id"] = rep.law_id;
        j["expected"] =
            rep.expected == law::LawExpectation::Holds ? "holds" : "counterexample";
        j["as_expected"] = rep.as_expected;
        if (rep.strict_count >= 0) {
            j["strict"] = rep.strict_count;
        }
        if (rep.random_violations >= 0) {
            j["random_violations"] = rep.random_violations;
        }
        summary["laws"].push_back(std::move(j));
    }
    summary["all_expected"] = all_expected;
    std::cout << summary.dump() << "\n";
    return all_expected ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"fuzzydb: an in-memory fuzzy relational database"};
    app.require_subcommand(1);

    std::string tables;
    std::string inline_query;
    std::string query_file;
    std::string output;
    std::string format = "csv";
    std::uint64_t seed = kDefaultSeed;
    int count = 1000;
    std::string only_law;

    CLI::App* eval = app.add_subcommand("eval", "evaluate one query over a table directory");
    eval->add_option("-t,--tables", tables, "directory of <name>.csv tables")
        ->envname("FUZZYDB_TABLES");
    auto* qopt = eval->add_option("-q,--query", inline_query, "query text");
    auto* fopt = eval->add_option("-f,--query-file", query_file, "file holding the query");
    qopt->excludes(fopt);
    fopt->excludes(qopt);
    eval->add_option("-o,--output", output, "output path (default: standard output)");
    eval->add_option("--format", format, "csv or pretty")
        ->check(CLI::IsMember({"csv", "pretty"}));

    CLI::App* repl = app.add_subcommand("repl", "interactive query loop");
    repl->add_option("-t,--tables", tables, "directory of <name>.csv tables")
        ->envname("FUZZYDB_TABLES");
    repl->add_option("--format", format, "csv or pretty")
        ->check(CLI::IsMember({"csv", "pretty"}));

    CLI::App* laws = app.add_subcommand("check-laws", "run the algebraic law suite");
    laws->add_option("--seed", seed, "base seed for instance generation (default 1729)");
    laws->add_option("--count", count, "instances per law (default 1000)")
        ->check(CLI::PositiveNumber);
    laws->add_option("--law", only_law, "run a single law by id");

    CLI11_PARSE(app, argc, argv);

    if (eval->parsed()) {
        if (inline_query.empty() && query_file.empty()) {
            std::cerr << "error: eval needs exactly one of --query / --query-file\n";
            return kExitQueryError;
        }
        return cmd_eval(tables, inline_query, query_file, output, format);
    }
    if (repl->parsed()) {
        return cmd_repl(tables, format);
    }
    return cmd_check_laws(seed, count, only_law);
}
