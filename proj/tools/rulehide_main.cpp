#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "report.hpp"
#include "rulehide/basket_io.hpp"
#include "rulehide/effects.hpp"
#include "rulehide/errors.hpp"

namespace {

using namespace rulehide;

struct Options {
    std::string db_path;
    std::string before_path;
    std::string after_path;
    std::string min_support;
    std::string min_confidence;
    std::string sensitive;
    std::string out_path;
    std::string report_path;
    std::string format = "text";
    std::string rule;
};

TransactionDB load_database(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error("cannot open '" + path + "'");
    return parse_database(in);
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path);
    if (!out) throw Error("cannot write '" + path + "'");
    out << content;
}

Rational parse_fraction(const std::string& text, const char* what) {
    Rational value = Rational::parse(text);
    if (value > Rational(1, 1))
        throw NumberSyntaxError(std::string(what) + " must be in [0,1], got '" + text + "'");
    return value;
}

Thresholds parse_thresholds(const Options& opt) {
    return Thresholds(parse_fraction(opt.min_support, "min-support"),
                      parse_fraction(opt.min_confidence, "min-confidence"));
}

std::vector<Item> parse_sensitive(const std::string& list) {
    std::vector<Item> items;
    std::stringstream in(list);
    std::string token;
    while (std::getline(in, token, ',')) {
        auto first = token.find_first_not_of(" \t");
        auto last = token.find_last_not_of(" \t");
        if (first == std::string::npos)
            throw Error("empty item in sensitive list '" + list + "'");
        items.emplace_back(token.substr(first, last - first + 1));
    }
    if (items.empty()) throw Error("sensitive list is empty");
    return items;
}

void emit(const std::string& report_path, const std::string& content) {
    if (report_path.empty())
        std::cout << content;
    else
        write_file(report_path, content);
}

int cmd_mine(const Options& opt) {
    TransactionDB db = load_database(opt.db_path);
    RuleSet rules = strong_rules(db, parse_thresholds(opt));
    if (opt.format == "json") {
        std::cout << cli::mine_report_json(rules, db.size()).dump(2) << "\n";
    } else {
        for (const auto& entry : rules) std::cout << cli::rule_line(entry) << "\n";
    }
    return 0;
}

int cmd_hide(const Options& opt) {
    TransactionDB db = load_database(opt.db_path);
    Thresholds th = parse_thresholds(opt);
    std::vector<Item> sensitive = parse_sensitive(opt.sensitive);

    SanitizationResult result = hide_all(db, th, sensitive);
    write_file(opt.out_path, serialize_database(result.transformed));

    SideEffectReport effects = analyze(db, result, th, sensitive);
    if (opt.format == "json")
        emit(opt.report_path,
             cli::hide_report_json(db, result, effects, sensitive).dump(2) + "\n");
    else
        emit(opt.report_path, cli::hide_report_text(db, result, effects, sensitive));
    return result.unhidden.empty() ? 0 : 1;
}

int cmd_eval(const Options& opt) {
    TransactionDB before = load_database(opt.before_path);
    TransactionDB after = load_database(opt.after_path);
    Thresholds th = parse_thresholds(opt);
    std::vector<Item> sensitive;
    if (!opt.sensitive.empty()) sensitive = parse_sensitive(opt.sensitive);

    SideEffectReport report = analyze(before, after, th, sensitive);
    if (opt.format == "json")
        std::cout << cli::effects_json(report).dump(2) << "\n";
    else
        std::cout << cli::effects_text(report);
    return report.surviving_sensitive.empty() ? 0 : 1;
}

int cmd_cover(const Options& opt) {
    Rule base = parse_rule(opt.rule);
    Cover full_cover = cover(base);
    for (const Rule& member : full_cover.members) std::cout << member.to_string() << "\n";
    std::size_t m = base.consequent().size();
    std::cout << "count: 3^" << m << " - 2^" << m << " = " << full_cover.members.size()
              << "\n";
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"mine association rules and hide the ones involving sensitive items"};
    app.require_subcommand(1);
    Options opt;

    auto add_thresholds = [&](CLI::App* cmd) {
        cmd->add_option("--min-support", opt.min_support,
                        "support threshold: \"33%\", \"0.33\" or \"1/3\"")
            ->required();
        cmd->add_option("--min-confidence", opt.min_confidence,
                        "confidence threshold: \"70%\", \"0.7\" or \"7/10\"")
            ->required();
    };
    auto add_format = [&](CLI::App* cmd) {
        cmd->add_option("--format", opt.format, "output format")
            ->check(CLI::IsMember({"text", "json"}));
    };

    CLI::App* mine = app.add_subcommand("mine", "list the strong rules of a basket file");
    mine->add_option("--db", opt.db_path, "basket file")->required();
    add_thresholds(mine);
    add_format(mine);

    CLI::App* hide = app.add_subcommand(
        "hide", "relocate sensitive items until their rules fall below threshold");
    hide->add_option("--db", opt.db_path, "basket file")->required();
    add_thresholds(hide);
    hide->add_option("--sensitive", opt.sensitive, "comma-separated sensitive items")
        ->required();
    hide->add_option("--out", opt.out_path, "path for the sanitized basket file")
        ->required();
    hide->add_option("--report", opt.report_path, "report path (default: stdout)");
    add_format(hide);

    CLI::App* eval = app.add_subcommand("eval", "compare the rules of two basket files");
    eval->add_option("--before", opt.before_path, "original basket file")->required();
    eval->add_option("--after", opt.after_path, "sanitized basket file")->required();
    add_thresholds(eval);
    eval->add_option("--sensitive", opt.sensitive, "comma-separated sensitive items");
    add_format(eval);

    CLI::App* cov = app.add_subcommand("cover", "enumerate the cover of one rule");
    cov->add_option("--rule", opt.rule, "rule literal, e.g. \"C=>A,B\"")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;  // --help exits 0, usage errors exit 2
    }

    try {
        if (mine->parsed()) return cmd_mine(opt);
        if (hide->parsed()) return cmd_hide(opt);
        if (eval->parsed()) return cmd_eval(opt);
        if (cov->parsed()) return cmd_cover(opt);
    } catch (const Error& e) {
        std::cerr << "rulehide: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
