#include "cli.hpp"

#include <fstream>
#include <iostream>
#include <random>

#include "CLI11.hpp"
#include "fideal/engine.hpp"
#include "fideal/error.hpp"
#include "fideal/graph.hpp"
#include "fideal/perfect.hpp"
#include "fideal/report.hpp"
#include "fideal/unmixed.hpp"

namespace fideal::cli {

namespace {

struct Config {
    int n = 0;
    int d = 2;
    std::string gens;
    std::string file;
    std::string set;
    std::string b;
    std::string extra = "auto";
    std::string mode = "V";
    std::string method = "formula";
    std::string format = "json";
    unsigned workers = 1;
    std::uint64_t max_candidates = std::uint64_t{1} << 32;
    int max_scan_bits = default_face_scan_bits;
    std::uint64_t seed = 1;
    int count = 10;
    int max_gens = 6;
};

const char* yes_no(bool b) { return b ? "true" : "false"; }

SearchOptions search_options(const Config& c) { return SearchOptions{c.max_candidates, c.workers}; }

/// Verdict, classification and unmixedness of one ideal; returns whether it is an f-ideal.
bool check_one(const Config& c, const Ideal& ideal, std::ostream& out) {
    const auto verdict = is_f_ideal(ideal, c.max_scan_bits);
    std::optional<TypeReport> type;
    if (verdict.is_f_ideal && ideal.is_homogeneous() && ideal.degree() == 2) type = detect_type(ideal);
    const auto unmixed = unmixed_report(ideal, c.max_scan_bits);

    if (c.format == "human") {
        out << "generators: " << to_string(ideal.generators()) << '\n';
        out << "f-ideal: " << yes_no(verdict.is_f_ideal) << '\n';
        out << "route: " << to_string(verdict.route) << '\n';
        if (verdict.failure_detail) out << "detail: " << *verdict.failure_detail << '\n';
        if (type) {
            out << "type: " << to_string(type->kind);
            if (type->kind == IdealType::type_l) out << " l=" << type->l;
            out << '\n';
        }
        out << "unmixed: " << yes_no(unmixed.unmixed) << '\n';
        out << "codim: " << unmixed.codim << '\n';
        return verdict.is_f_ideal;
    }
    Json j{{"n", ideal.ambient()}, {"generators", to_json(ideal.generators())}, {"f_ideal", to_json(verdict)}};
    j["type"] = type ? to_json(*type) : Json(nullptr);
    j["unmixed"] = to_json(unmixed);
    out << j.dump() << '\n';
    return verdict.is_f_ideal;
}

int cmd_check(const Config& c, std::ostream& out) {
    if (c.gens.empty() == c.file.empty()) throw InputError("check needs exactly one of --gens and --file");
    if (!c.gens.empty()) return check_one(c, Ideal::parse(c.gens, c.n), out) ? yes : no;

    std::ifstream in(c.file);
    if (!in) throw InputError("cannot open " + c.file);
    // Parse everything first so a bad line produces no partial output.
    std::vector<Ideal> ideals;
    std::string line;
    for (int lineno = 1; std::getline(in, line); ++lineno) {
        if (line.find_first_not_of(" \t\r") == std::string::npos || line[0] == '#') continue;
        try {
            ideals.push_back(Ideal::parse(line, c.n));
        } catch (const InputError& e) {
            throw InputError(c.file + ":" + std::to_string(lineno) + ": " + e.what());
        }
    }
    bool all = true;
    for (const auto& ideal : ideals) all = check_one(c, ideal, out) && all;
    return all ? yes : no;
}

int cmd_enumerate(const Config& c, std::ostream& out) {
    std::uint64_t index = 0;
    enumerate_f_ideals(c.n, c.d, search_options(c), [&](const Ideal& ideal) {
        ++index;
        if (c.format == "tsv") {
            out << index << '\t' << to_string(ideal.generators()) << '\n';
        } else if (c.format == "human") {
            out << to_string(ideal.generators()) << '\n';
        } else {
            out << Json{{"n", c.n}, {"d", c.d}, {"generators", to_json(ideal.generators())}}.dump() << '\n';
        }
    });
    if (c.format == "human") out << index << " f-ideals\n";
    return yes;
}

CountResult count_u_by_enumeration(const Config& c) {
    CountResult r{c.n, 2, 0, CountMethod::enumeration};
    enumerate_f_ideals(c.n, 2, search_options(c), [&](const Ideal& ideal) {
        auto t = detect_type(ideal);
        if (t.kind == IdealType::type_l && t.l == c.n / 2) r.value += 1;
    });
    return r;
}

int cmd_count(const Config& c, std::ostream& out) {
    Json j;
    std::string value;
    if (c.mode == "perfect-number") {
        PerfectMethod m;
        if (c.method == "formula") {
            m = PerfectMethod::formula;
        } else if (c.method == "brute") {
            m = PerfectMethod::brute;
        } else {
            throw InputError("perfect-number takes --method formula or brute");
        }
        auto p = perfect_number(c.n, c.d, m, search_options(c));
        j = to_json(p);
        value = std::to_string(p.value);
    } else {
        const bool enumerate = c.method == "enumeration";
        if (!enumerate && c.method != "formula") throw InputError("--mode " + c.mode + " takes --method formula or enumeration");
        if (c.mode != "U" && c.mode != "V") throw InputError("unknown mode " + c.mode);
        if (c.d != 2 && !(c.mode == "V" && enumerate)) throw InputError("only V by enumeration supports d != 2");
        CountResult r;
        if (c.mode == "U") {
            r = enumerate ? count_u_by_enumeration(c) : count_U(c.n);
        } else {
            r = enumerate ? count_by_enumeration(c.n, c.d, search_options(c)) : count_V(c.n);
        }
        j = to_json(r);
        j["mode"] = c.mode;
        value = r.value.str();
    }
    if (c.format == "human" || c.format == "tsv") {
        out << value << '\n';
    } else {
        out << j.dump() << '\n';
    }
    return yes;
}

int cmd_construct(const Config& c, std::ostream& out) {
    const Mask b = parse_monomial(c.b, c.n).support();
    const MonomialSet extra = c.extra == "auto" ? auto_extra(c.n, b) : parse_monomial_set(c.extra, c.n);
    const Ideal ideal = construct_f_ideal(c.n, b, extra);
    const auto verdict = is_f_ideal(ideal, c.max_scan_bits);
    const auto type = detect_type(ideal);
    if (c.format == "human") {
        out << "generators: " << to_string(ideal.generators()) << '\n';
        out << "extra: " << to_string(extra) << '\n';
        out << "f-ideal: " << yes_no(verdict.is_f_ideal) << '\n';
        out << "type: " << to_string(type.kind) << " l=" << type.l << '\n';
        return yes;
    }
    Json j{{"n", c.n},
           {"B", indices_json(b)},
           {"extra", to_json(extra)},
           {"generators", to_json(ideal.generators())},
           {"f_ideal", to_json(verdict)},
           {"type", to_json(type)}};
    out << j.dump() << '\n';
    return yes;
}

int cmd_perfect(const Config& c, std::ostream& out) {
    const auto a = parse_monomial_set(c.set, c.n);
    const bool up = is_upper_perfect(a, c.d);
    const bool low = is_lower_perfect(a, c.d);
    if (c.format == "human") {
        out << "upper: " << yes_no(up) << "\nlower: " << yes_no(low) << "\nperfect: " << yes_no(up && low) << '\n';
    } else {
        Json j{{"n", c.n}, {"d", c.d}, {"set", to_json(a)}, {"upper", up}, {"lower", low}, {"perfect", up && low}};
        out << j.dump() << '\n';
    }
    return up && low ? yes : no;
}

/// Seeded corpus of antichains, one generator string per line (the --file grammar).
int cmd_random(const Config& c, std::ostream& out) {
    if (c.count < 0 || c.max_gens < 1) throw InputError("--count must be >= 0 and --max-gens >= 1");
    check_ambient(c.n);
    std::mt19937_64 rng(c.seed);
    const Mask all = full_mask(c.n);
    std::uniform_int_distribution<Mask> pick(1, all);
    std::uniform_int_distribution<int> how_many(1, c.max_gens);
    for (int i = 0; i < c.count; ++i) {
        std::vector<Mask> raw;
        for (int g = how_many(rng); g > 0; --g) raw.push_back(pick(rng));
        out << to_string(MonomialSet(c.n, std::span<const Mask>(minimal_elements(raw)))) << '\n';
    }
    return yes;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    Config c;
    CLI::App app{"Decide, enumerate, construct and count f-ideals", "fideal"};
    app.require_subcommand(1);
    auto formats = CLI::IsMember({"json", "ndjson", "tsv", "human"});

    auto add_common = [&](CLI::App* sub) {
        sub->add_option("--n", c.n, "number of variables")->required()->check(CLI::Range(1, 64));
        sub->add_option("--format", c.format, "json, ndjson, tsv or human (json and ndjson both print one object per line)")->check(formats);
        sub->add_option("--workers", c.workers, "search threads")->check(CLI::PositiveNumber);
        sub->add_option("--max-candidates", c.max_candidates, "search budget")->check(CLI::PositiveNumber);
        sub->add_option("--max-scan-bits", c.max_scan_bits, "largest n for 2^n face scans")->check(CLI::Range(1, 30));
    };

    auto* check = app.add_subcommand("check", "f-ideal verdict, type and unmixedness");
    add_common(check);
    check->add_option("--gens", c.gens, "generators, e.g. 1.2,2.3");
    check->add_option("--file", c.file, "one generator set per line");

    auto* enumerate = app.add_subcommand("enumerate", "all f-ideals generated in degree d");
    add_common(enumerate);
    enumerate->add_option("--d", c.d)->check(CLI::PositiveNumber);

    auto* count = app.add_subcommand("count", "count f-ideals or compute a perfect number");
    add_common(count);
    count->add_option("--d", c.d)->check(CLI::PositiveNumber);
    count->add_option("--mode", c.mode)->check(CLI::IsMember({"U", "V", "perfect-number"}));
    count->add_option("--method", c.method)->check(CLI::IsMember({"formula", "enumeration", "brute"}));

    auto* construct = app.add_subcommand("construct", "f-ideal containing W_B");
    add_common(construct);
    construct->add_option("--B", c.b, "the part B, e.g. 1.2")->required();
    construct->add_option("--extra", c.extra, "extra generators or 'auto'");

    auto* perfect = app.add_subcommand("perfect", "perfectness of a homogeneous set");
    add_common(perfect);
    perfect->add_option("--d", c.d)->required()->check(CLI::PositiveNumber);
    perfect->add_option("--set", c.set)->required();

    auto* random = app.add_subcommand("random", "seeded corpus of random generator sets");
    add_common(random);
    random->add_option("--seed", c.seed);
    random->add_option("--count", c.count);
    random->add_option("--max-gens", c.max_gens);

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return yes;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << '\n';
        return input_error;
    }

    try {
        if (*check) return cmd_check(c, out);
        if (*enumerate) return cmd_enumerate(c, out);
        if (*count) return cmd_count(c, out);
        if (*construct) return cmd_construct(c, out);
        if (*perfect) return cmd_perfect(c, out);
        return cmd_random(c, out);
    } catch (const InputError& e) {
        err << "error: " << e.what() << '\n';
        return input_error;
    } catch (const BudgetExceeded& e) {
        err << "budget exceeded: " << e.what() << '\n';
        return budget;
    } catch (const ConstructionError& e) {
        err << "not an f-ideal: " << e.what() << '\n';
        return no;
    }
}

}  // namespace fideal::cli
