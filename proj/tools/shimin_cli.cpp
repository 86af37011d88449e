// Command-line front end: minimal elements, region tables, oracle verification
// and arc diagram rendering.

#include "shimin/diagrams.hpp"
#include "shimin/errors.hpp"
#include "shimin/oracle.hpp"
#include "shimin/render.hpp"
#include "shimin/serialize.hpp"
#include "shimin/shi.hpp"

#include <CLI11.hpp>
#include <spdlog/sinks/stdout_color_sinks.h>
#include <spdlog/spdlog.h>

#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

using namespace shimin;

namespace {

enum ExitCode : int { exit_ok = 0, exit_parse = 1, exit_inadmissible = 2, exit_verify = 3, exit_resource = 4 };

constexpr int formula_rank_limit = 8;
constexpr int oracle_rank_limit = 5;

using Record = nlohmann::ordered_json;

struct KindArgs {
    std::string family;
    int rank = 0;
};

struct OracleArgs {
    int max_depth = EnumerationLimits{}.max_depth;
    std::size_t max_alcoves = EnumerationLimits{}.max_alcoves;
    unsigned threads = 0;

    EnumerationLimits limits() const
    {
        EnumerationLimits l;
        l.max_depth = max_depth;
        l.max_alcoves = max_alcoves;
        l.threads = threads;
        return l;
    }
};

void add_kind(CLI::App* cmd, KindArgs& k)
{
    cmd->add_option("family,--family", k.family, "Root system family (A, B, C or D)")->required();
    cmd->add_option("rank,--rank", k.rank, "Rank")->required();
}

void add_oracle(CLI::App* cmd, OracleArgs& o)
{
    cmd->add_option("--max-depth", o.max_depth, "Largest BFS layer to expand")->capture_default_str();
    cmd->add_option("--max-alcoves", o.max_alcoves, "Largest number of alcoves to keep")->capture_default_str();
    cmd->add_option("--threads", o.threads, "Worker threads (0 = all cores)")->capture_default_str();
}

RootSystemKind resolve(const KindArgs& k, int rank_limit)
{
    RootSystemKind kind{parse_family(k.family), k.rank};
    kind.validate();
    if (kind.rank > rank_limit)
        throw ConfigError(kind.to_string() + ": rank above the limit " + std::to_string(rank_limit) + " for this command");
    return kind;
}

Record sign_record(const SignType& v)
{
    Record arr = Record::array();
    for (Sign s : v.signs) arr.push_back(std::string(1, to_char(s)));
    return arr;
}

Record row_record(const RootSystemKind& kind, const ParkingFunction& pf, const SignType& sign, const ShiVector& min)
{
    Record p = Record::array();
    for (const Root& r : pf.partition.roots) p.push_back(std::vector<int>(r.coords().begin(), r.coords().end()));
    return Record{{"family", to_string(kind.family)},
                  {"rank", kind.rank},
                  {"sign", sign_record(sign)},
                  {"w", std::vector<int>(pf.w.images().begin(), pf.w.images().end())},
                  {"P", std::move(p)},
                  {"min", min.entries}};
}

std::string partition_text(const NonNestingPartition& p)
{
    std::string out = "{";
    for (std::size_t k = 0; k < p.roots.size(); ++k) out += (k ? "," : "") + p.roots[k].to_string();
    return out + "}";
}

Json parse_json(const std::string& text)
{
    try {
        return Json::parse(text);
    } catch (const Json::exception& e) {
        throw DomainError(std::string("invalid JSON: ") + e.what());
    }
}

/// Parking functions from a JSON argument, or one per non-blank stdin line for "-".
std::vector<ParkingFunction> read_parking_functions(const RootSystem& rs, const std::string& arg)
{
    std::vector<ParkingFunction> out;
    if (arg != "-") {
        out.push_back(parking_function_from_json(rs, parse_json(arg)));
        return out;
    }
    std::string line;
    while (std::getline(std::cin, line)) {
        if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
        out.push_back(parking_function_from_json(rs, parse_json(line)));
    }
    return out;
}

/// Number of Shi regions, (h+1)^n with h the Coxeter number.
double region_count(const RootSystemKind& k)
{
    const int h = k.family == Family::A ? k.rank + 1 : k.family == Family::D ? 2 * k.rank - 2 : 2 * k.rank;
    double n = 1;
    for (int i = 0; i < k.rank; ++i) n *= h + 1;
    return n;
}

class Output {
public:
    explicit Output(const std::string& path)
    {
        if (path.empty() || path == "-") return;
        file_.open(path);
        if (!file_) throw ConfigError("cannot open output file '" + path + "'");
    }
    std::ostream& stream() { return file_.is_open() ? static_cast<std::ostream&>(file_) : std::cout; }

private:
    std::ofstream file_;
};

struct MinArgs {
    KindArgs kind;
    std::string sign, pyramid, pf, format = "text";
};

int run_min(const MinArgs& a, std::ostream& out)
{
    const RootSystem rs(resolve(a.kind, formula_rank_limit));
    if (a.sign.empty() && a.pyramid.empty() && a.pf.empty())
        throw ConfigError("min needs one of --sign, --pyramid or --pf");
    std::vector<ParkingFunction> pfs;
    if (!a.pf.empty()) {
        pfs = read_parking_functions(rs, a.pf);
    } else {
        const SignType v = a.sign.empty() ? parse_pyramid(rs, a.pyramid) : parse_sign_csv(rs, a.sign);
        spdlog::debug("sign type {}", v.to_string());
        pfs.push_back(arr_forward(rs, v));
    }
    for (const auto& pf : pfs) {
        const ShiVector m = minimal_element(rs, pf);
        if (a.format == "json")
            out << row_record(rs.kind(), pf, sign_of(m), m).dump() << '\n';
        else
            out << m.to_csv() << '\n';
    }
    return exit_ok;
}

struct RegionsArgs {
    KindArgs kind;
    std::string format = "text";
    double max_rows = 1e6;
};

int run_regions(const RegionsArgs& a, std::ostream& out)
{
    const RootSystemKind kind = resolve(a.kind, formula_rank_limit);
    if (region_count(kind) > a.max_rows)
        throw ResourceError(kind.to_string() + " has " + fmt::format("{:.0f}", region_count(kind)) +
                                " regions, above --max-rows",
                            0);
    const RootSystem rs(kind);
    const auto pfs = parking_functions(rs);
    if (a.format == "json") {
        for (const auto& pf : pfs) {
            const ShiVector m = minimal_element(rs, pf);
            out << row_record(kind, pf, sign_of(m), m).dump() << '\n';
        }
        return exit_ok;
    }
    std::vector<std::array<std::string, 4>> rows;
    rows.push_back({"sign", "w", "P", "min"});
    for (const auto& pf : pfs) {
        const ShiVector m = minimal_element(rs, pf);
        rows.push_back({sign_of(m).to_string(), pf.w.window(), partition_text(pf.partition), m.to_csv()});
    }
    std::array<std::size_t, 4> width{};
    for (const auto& r : rows)
        for (std::size_t c = 0; c < 4; ++c) width[c] = std::max(width[c], r[c].size());
    for (const auto& r : rows) {
        std::string line;
        for (std::size_t c = 0; c < 4; ++c) {
            line += r[c];
            if (c < 3) line += std::string(width[c] - r[c].size() + 2, ' ');
        }
        out << line << '\n';
    }
    out << pfs.size() << " rows\n";
    return exit_ok;
}

struct VerifyArgs {
    KindArgs kind;
    OracleArgs oracle;
    std::string format = "text";
};

int run_verify(const VerifyArgs& a, std::ostream& out)
{
    const RootSystem rs(resolve(a.kind, oracle_rank_limit));
    const auto started = std::chrono::steady_clock::now();
    const auto pfs = parking_functions(rs);
    const auto e = enumerate_alcoves(rs, UntilRegions{}, a.oracle.limits());
    const auto regions = regions_by_sign(e.alcoves);
    spdlog::info("{}: {} alcoves to depth {}, {} regions", rs.kind().to_string(), e.alcoves.size(), e.depth,
                 regions.size());

    std::vector<std::string> failures;
    std::size_t invalid = 0;
    for (const auto& alc : e.alcoves)
        if (!is_shi_vector(rs, alc.kvec)) ++invalid;
    if (invalid) failures.push_back(std::to_string(invalid) + " alcove K-vectors violate the Shi relations");

    std::size_t matched = 0;
    for (const auto& [sign, group] : regions) {
        const auto oracle = find_dominating(group);
        if (!oracle) {
            failures.push_back(sign.to_string() + ": no dominating alcove (enlarge --max-depth)");
            continue;
        }
        ShiVector formula;
        try {
            formula = minimal_from_sign(rs, sign);
        } catch (const InadmissibleError& err) {
            failures.push_back(sign.to_string() + ": formula side rejects the sign type: " + err.what());
            continue;
        }
        if (formula == *oracle && check_shi_relations(rs, formula).empty())
            ++matched;
        else
            failures.push_back(sign.to_string() + ": formula " + formula.to_csv() + ", oracle " + oracle->to_csv());
    }
    for (const auto& pf : pfs) {
        const SignType s = sign_type_of_pf(rs, pf);
        if (!regions.count(s))
            failures.push_back(s.to_string() + ": parking function w=" + pf.w.window() + " P=" +
                               partition_text(pf.partition) + " has no oracle region");
    }
    if (pfs.size() != regions.size())
        failures.push_back(std::to_string(pfs.size()) + " parking functions but " + std::to_string(regions.size()) +
                           " regions");

    const bool pass = failures.empty();
    const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - started).count();
    if (a.format == "json") {
        out << Record{{"family", to_string(rs.family())},
                      {"rank", rs.rank()},
                      {"status", pass ? "PASS" : "FAIL"},
                      {"regions", regions.size()},
                      {"matched", matched},
                      {"parking_functions", pfs.size()},
                      {"alcoves", e.alcoves.size()},
                      {"depth", e.depth},
                      {"failures", failures}}
                   .dump()
            << '\n';
    } else {
        out << rs.kind().to_string() << ": " << (pass ? "PASS" : "FAIL") << ", " << matched << '/' << regions.size()
            << " regions (" << pfs.size() << " parking functions, " << e.alcoves.size() << " alcoves, depth "
            << e.depth << ")\n";
        for (const auto& f : failures) out << "  " << f << '\n';
    }
    spdlog::info("verify took {:.2f} s", seconds);
    return pass ? exit_ok : exit_verify;
}

struct AlcovesArgs {
    KindArgs kind;
    OracleArgs oracle;
    int radius = 3;
    bool regions = false;
};

int run_alcoves(const AlcovesArgs& a, std::ostream& out)
{
    const RootSystem rs(resolve(a.kind, oracle_rank_limit));
    auto limits = a.oracle.limits();
    limits.max_depth = std::max(limits.max_depth, a.radius);
    const auto e = enumerate_alcoves(rs, Radius{a.radius}, limits);
    if (!a.regions) {
        for (const auto& alc : e.alcoves) out << alcove_record(alc).dump() << '\n';
        return exit_ok;
    }
    for (const auto& [sign, group] : regions_by_sign(e.alcoves)) {
        const auto m = find_dominating(group);
        Json j = region_summary(sign, group.size(), m.value_or(ShiVector{}));
        if (!m) j["min"] = nullptr;
        out << j.dump() << '\n';
    }
    return exit_ok;
}

struct DiagramArgs {
    KindArgs kind;
    std::string pf, format = "text";
};

int run_diagram(const DiagramArgs& a, std::ostream& out)
{
    const RootSystem rs(resolve(a.kind, formula_rank_limit));
    std::string text = a.pf;
    if (a.pf == "-") {
        std::stringstream ss;
        ss << std::cin.rdbuf();
        text = ss.str();
    }
    const auto pf = parking_function_from_json(rs, parse_json(text));
    const auto d = arcs_from_partition(rs, pf.w, pf.partition);
    out << (a.format == "svg" ? render_svg(d) : render_text(d));
    return exit_ok;
}

void setup_logging()
{
    auto logger = spdlog::stderr_color_mt("shimin");
    logger->set_pattern("[%l] %v");
    spdlog::set_default_logger(logger);
    spdlog::set_level(spdlog::level::warn);
    if (const char* env = std::getenv("SHIMIN_LOG")) {
        const auto level = spdlog::level::from_str(env);
        // from_str maps unknown names to off; only honour it when asked for
        if (level != spdlog::level::off || std::string_view(env) == "off") spdlog::set_level(level);
    }
}

} // namespace

int main(int argc, char** argv)
{
    setup_logging();

    CLI::App app{"Minimal elements of Shi regions for classical root systems"};
    app.require_subcommand(1);
    std::string output;
    app.add_option("-o,--output", output, "Write results to this file instead of stdout");

    MinArgs min_args;
    auto* min_cmd = app.add_subcommand("min", "Minimal element of a Shi region");
    add_kind(min_cmd, min_args.kind);
    auto* sign_opt = min_cmd->add_option("--sign", min_args.sign, "Sign type, comma separated in canonical root order");
    auto* pyr_opt = min_cmd->add_option("--pyramid", min_args.pyramid, "Type A sign type as pyramid rows, top first, '/' separated");
    auto* pf_opt = min_cmd->add_option("--pf", min_args.pf, "Parking function JSON {\"w\":[...],\"P\":[...]}, or - for JSON lines on stdin");
    sign_opt->excludes(pyr_opt)->excludes(pf_opt);
    pyr_opt->excludes(pf_opt);
    min_cmd->add_option("--format", min_args.format)->check(CLI::IsMember({"text", "json"}))->capture_default_str();

    RegionsArgs regions_args;
    auto* regions_cmd = app.add_subcommand("regions", "Every parking function with its sign type and minimal element");
    add_kind(regions_cmd, regions_args.kind);
    regions_cmd->add_option("--format", regions_args.format)->check(CLI::IsMember({"text", "json"}))->capture_default_str();
    regions_cmd->add_option("--max-rows", regions_args.max_rows, "Refuse larger tables")->capture_default_str();

    VerifyArgs verify_args;
    auto* verify_cmd = app.add_subcommand("verify", "Compare the formula with the alcove enumeration on every region");
    add_kind(verify_cmd, verify_args.kind);
    add_oracle(verify_cmd, verify_args.oracle);
    verify_cmd->add_option("--format", verify_args.format)->check(CLI::IsMember({"text", "json"}))->capture_default_str();

    AlcovesArgs alcoves_args;
    auto* alcoves_cmd = app.add_subcommand("alcoves", "Stream alcove records (JSON lines) up to a BFS radius");
    add_kind(alcoves_cmd, alcoves_args.kind);
    add_oracle(alcoves_cmd, alcoves_args.oracle);
    alcoves_cmd->add_option("--radius", alcoves_args.radius, "BFS radius")->capture_default_str();
    alcoves_cmd->add_flag("--regions", alcoves_args.regions, "Print one summary per sign type instead");

    DiagramArgs diagram_args;
    auto* diagram_cmd = app.add_subcommand("diagram", "Draw the arc diagram of a parking function");
    add_kind(diagram_cmd, diagram_args.kind);
    diagram_cmd->add_option("--pf", diagram_args.pf, "Parking function JSON, or - for stdin")->required();
    diagram_cmd->add_option("--format", diagram_args.format)->check(CLI::IsMember({"text", "svg"}))->capture_default_str();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? exit_ok : exit_parse;
    }

    try {
        Output sink(output);
        std::ostream& out = sink.stream();
        if (min_cmd->parsed()) return run_min(min_args, out);
        if (regions_cmd->parsed()) return run_regions(regions_args, out);
        if (verify_cmd->parsed()) return run_verify(verify_args, out);
        if (alcoves_cmd->parsed()) return run_alcoves(alcoves_args, out);
        if (diagram_cmd->parsed()) return run_diagram(diagram_args, out);
    } catch (const InadmissibleError& e) {
        std::cerr << "inadmissible: " << e.what() << '\n';
        return exit_inadmissible;
    } catch (const ResourceError& e) {
        std::cerr << "resource limit: " << e.what() << '\n';
        return exit_resource;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return exit_parse;
    }
    return exit_parse;
}
