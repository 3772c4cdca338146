// Command-line front end: parsing, retraction, witness construction and
// verification, subgroup enumeration, and property-suite campaigns.
//
// Exit codes: 0 success/pass, 1 usage or input error, 2 verification
// counterexample.

#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "cantor/cover.hpp"
#include "cantor/errors.hpp"
#include "cantor/group_element.hpp"
#include "cantor/point.hpp"
#include "cantor/retraction.hpp"
#include "cantor/verifier.hpp"
#include "cantor/witness.hpp"

namespace {

using namespace cantor;

std::string trim(const std::string& s) {
    std::size_t b = s.find_first_not_of(" \t");
    if (b == std::string::npos) {
        return "";
    }
    std::size_t e = s.find_last_not_of(" \t");
    return s.substr(b, e - b + 1);
}

std::uint64_t parse_uint(const std::string& text, const std::string& where) {
    try {
        std::size_t used = 0;
        std::uint64_t v = std::stoull(text, &used);
        if (used != text.size()) {
            throw std::invalid_argument("trailing characters");
        }
        return v;
    } catch (const std::exception&) {
        throw Error(where + ": expected a non-negative integer, got '" + text + "'");
    }
}

TestCampaign load_config(const std::string& path) {
    std::ifstream in(path);
    if (!in) {
        throw Error("cannot open config file " + path);
    }
    TestCampaign c;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        std::string where = path + ":" + std::to_string(lineno);
        std::size_t hash = line.find('#');
        if (hash != std::string::npos) {
            line.resize(hash);
        }
        line = trim(line);
        if (line.empty()) {
            continue;
        }
        std::size_t eq = line.find('=');
        if (eq == std::string::npos) {
            throw Error(where + ": expected 'key = value'");
        }
        std::string key = trim(line.substr(0, eq));
        std::string value = trim(line.substr(eq + 1));
        if (key == "seed") {
            c.seed = parse_uint(value, where);
        } else if (key == "max_set_size") {
            c.max_set_size = static_cast<int>(parse_uint(value, where));
        } else if (key == "max_word_length") {
            c.max_word_length = static_cast<int>(parse_uint(value, where));
        } else if (key == "enum_depth") {
            c.enum_depth = static_cast<int>(parse_uint(value, where));
        } else if (key == "enum_cap") {
            c.enum_cap = parse_uint(value, where);
        } else if (key == "suites") {
            c.suites.clear();
            std::size_t pos = 0;
            while (pos <= value.size()) {
                std::size_t comma = value.find(',', pos);
                std::string id = trim(value.substr(pos, comma == std::string::npos
                                                            ? std::string::npos
                                                            : comma - pos));
                if (!id.empty()) {
                    c.suites.push_back(id);
                }
                if (comma == std::string::npos) {
                    break;
                }
                pos = comma + 1;
            }
            for (const std::string& id : c.suites) {
                const auto& known = all_suite_ids();
                if (std::find(known.begin(), known.end(), id) == known.end()) {
                    throw Error(where + ": unknown suite id '" + id + "'");
                }
            }
        } else {
            throw Error(where + ": unknown key '" + key + "'");
        }
    }
    return c;
}

int cmd_retract(const std::string& f_text) {
    GroupElement f = parse_group_element(f_text);
    CantorPoint r = retract_extended(f);
    if (f.odd()) {
        std::cout << "r = " << to_string(r) << "\n";
    } else {
        std::cout << "r = " << to_string(r) << " (even cardinality, extended value)\n";
    }
    if (!f.empty()) {
        std::cout << to_string(maximal_even_prefixes(f)) << "\n";
    }
    std::cout << "cardinality = " << (f.odd() ? "odd" : "even") << " (" << f.size()
              << (f.size() == 1 ? " point)" : " points)") << "\n";
    return 0;
}

void print_check_tail(const CheckResult& res) {
    std::cout << "H checked = " << res.checked
              << (res.truncated ? " (truncated at cap)" : " (complete)") << "\n";
}

int cmd_witness(const std::string& f_text, const std::string& u_text, std::optional<int> depth,
                std::uint64_t cap) {
    GroupElement f = parse_group_element(f_text);
    BasicSet u = parse_basic_set(u_text);
    WitnessReport report = build_witness(f, u);
    int d = depth ? *depth : static_cast<int>(report.gamma.max_prefix_length()) + 2;
    CheckResult res = verify_witness(report, f, d, cap);
    std::cout << to_string(report);
    print_check_tail(res);
    if (res.pass) {
        std::cout << "verdict = pass\n";
        return 0;
    }
    std::cout << "verdict = counterexample\n";
    std::cout << "counterexample H = " << to_string(*res.counterexample) << "\n";
    std::cout << "r(F + H) = " << to_string(*res.image) << " outside v_x = "
              << to_string(report.v_x) << "\n";
    return 2;
}

int cmd_check(const std::string& x_text, const std::string& vx_text, const std::string& gamma_text,
              std::optional<int> depth, std::uint64_t cap) {
    CantorPoint x = parse_point(x_text);
    BasicSet v_x = parse_basic_set(vx_text);
    Cover gamma = parse_cover(gamma_text);
    int d = depth ? *depth : static_cast<int>(gamma.max_prefix_length()) + 2;
    CheckResult res = check_subspace_embedding(x, v_x, gamma, d, cap);
    std::cout << "x = " << to_string(x) << "\n";
    std::cout << "v_x = " << to_string(v_x) << "\n";
    std::cout << "gamma = " << to_string(gamma) << "\n";
    print_check_tail(res);
    if (res.pass) {
        std::cout << "verdict = pass\n";
        return 0;
    }
    std::cout << "verdict = counterexample\n";
    std::cout << "counterexample H = " << to_string(*res.counterexample) << "\n";
    std::cout << "x + H = {" << to_string(*res.image) << "} outside v_x = " << to_string(v_x)
              << "\n";
    return 2;
}

int cmd_enumerate(const std::string& gamma_text, std::optional<int> depth, std::uint64_t cap) {
    Cover gamma = parse_cover(gamma_text);
    int d = depth ? *depth : static_cast<int>(gamma.max_prefix_length()) + 2;
    EnumerationStats stats;
    std::vector<GroupElement> hs = enumerate_subgroup(gamma, d, cap, &stats);
    for (const GroupElement& h : hs) {
        std::cout << to_string(h) << "\n";
    }
    std::cout << "count = " << stats.emitted << (stats.truncated ? " (truncated at cap)" : "")
              << "\n";
    return 0;
}

int cmd_campaign(const std::optional<std::string>& config_path, std::optional<std::uint64_t> seed,
                 const std::vector<std::string>& suites, std::optional<int> depth,
                 std::optional<std::uint64_t> cap, const std::string& format) {
    TestCampaign c = config_path ? load_config(*config_path) : TestCampaign{};
    if (seed) {
        c.seed = *seed;
    }
    if (!suites.empty()) {
        c.suites = suites;
    }
    if (depth) {
        c.enum_depth = *depth;
    }
    if (cap) {
        c.enum_cap = *cap;
    }
    CampaignReport report = run_campaign(c);
    std::cout << (format == "lines" ? report.machine_format() : report.text_format());
    return report.all_passed() ? 0 : 2;
}

int cmd_parse(const std::string& kind, const std::string& text) {
    if (kind == "point") {
        std::cout << to_string(parse_point(text)) << "\n";
    } else if (kind == "element") {
        std::cout << to_string(parse_group_element(text)) << "\n";
    } else {
        std::cout << to_string(parse_cover(text)) << "\n";
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Free Boolean group over the Cantor set: exact retraction, parity-subgroup "
                 "covers, and continuity witnesses"};
    app.require_subcommand(1);

    std::string f_text;
    std::string u_text;
    std::string x_text;
    std::string vx_text;
    std::string gamma_text;
    std::string parse_kind;
    std::string parse_text;
    std::string format = "text";
    std::optional<int> depth;
    std::optional<std::uint64_t> cap_opt;
    std::optional<std::uint64_t> seed;
    std::optional<std::string> config_path;
    std::vector<std::string> suites;

    CLI::App* retract_cmd = app.add_subcommand("retract", "Retract a group element onto C");
    retract_cmd->add_option("element", f_text, "group element, e.g. \"{0, 2, 22}\"")->required();

    CLI::App* witness_cmd =
        app.add_subcommand("witness", "Build and verify a continuity witness for r at F");
    witness_cmd->add_option("element", f_text, "odd group element F")->required();
    witness_cmd->add_option("neighborhood", u_text, "basic neighborhood of r(F), e.g. \"2\" or \"*\"")
        ->required();
    witness_cmd->add_option("--depth", depth, "enumeration grid depth (default: cover length + 2)");
    witness_cmd->add_option("--cap", cap_opt, "max subgroup elements to check (default 200000)");

    CLI::App* check_cmd =
        app.add_subcommand("check", "Check the subspace embedding (x + H_gamma) within C into v_x");
    check_cmd->add_option("point", x_text, "point x")->required();
    check_cmd->add_option("vx", vx_text, "basic set v_x, a part of gamma containing x")->required();
    check_cmd->add_option("cover", gamma_text, "cover gamma, e.g. \"{0, 2}\"")->required();
    check_cmd->add_option("--depth", depth, "enumeration grid depth (default: cover length + 2)");
    check_cmd->add_option("--cap", cap_opt, "max subgroup elements to check (default 200000)");

    CLI::App* enumerate_cmd =
        app.add_subcommand("enumerate", "List elements of the parity subgroup H_gamma on a grid");
    enumerate_cmd->add_option("cover", gamma_text, "cover gamma")->required();
    enumerate_cmd->add_option("--depth", depth, "grid depth (default: cover length + 2)");
    enumerate_cmd->add_option("--cap", cap_opt, "max elements to list (default 200000)");

    CLI::App* campaign_cmd =
        app.add_subcommand("campaign", "Run the property-test suites and report per-suite results");
    campaign_cmd->add_option("--config", config_path, "key = value config file");
    campaign_cmd->add_option("--seed", seed, "campaign seed");
    campaign_cmd->add_option("--suite", suites, "suite id (repeatable; default: all)");
    campaign_cmd->add_option("--depth", depth, "enumeration depth override");
    campaign_cmd->add_option("--cap", cap_opt, "enumeration cap override");
    campaign_cmd->add_option("--format", format, "output format")
        ->check(CLI::IsMember({"text", "lines"}));

    CLI::App* parse_cmd = app.add_subcommand("parse", "Parse a value and print its canonical form");
    parse_cmd->add_option("kind", parse_kind, "one of point, element, cover")
        ->required()
        ->check(CLI::IsMember({"point", "element", "cover"}));
    parse_cmd->add_option("text", parse_text, "the value to parse")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 1;
    }

    try {
        if (app.got_subcommand(retract_cmd)) {
            return cmd_retract(f_text);
        }
        if (app.got_subcommand(witness_cmd)) {
            return cmd_witness(f_text, u_text, depth, cap_opt.value_or(200000));
        }
        if (app.got_subcommand(check_cmd)) {
            return cmd_check(x_text, vx_text, gamma_text, depth, cap_opt.value_or(200000));
        }
        if (app.got_subcommand(enumerate_cmd)) {
            return cmd_enumerate(gamma_text, depth, cap_opt.value_or(200000));
        }
        if (app.got_subcommand(campaign_cmd)) {
            return cmd_campaign(config_path, seed, suites, depth, cap_opt, format);
        }
        if (app.got_subcommand(parse_cmd)) {
            return cmd_parse(parse_kind, parse_text);
        }
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 1;
}
