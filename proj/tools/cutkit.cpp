#include "cutkit/cache.hpp"
#include "cutkit/chartab.hpp"
#include "cutkit/descriptor.hpp"
#include "cutkit/error.hpp"
#include "cutkit/frobenius.hpp"
#include "cutkit/rationality.hpp"
#include "cutkit/verify.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

using json = nlohmann::json;
using namespace cutkit;

namespace {

struct Globals {
    std::string cache_dir = "./.cutkit-cache";
    std::size_t max_order = kDefaultMaxOrder;
    std::string format = "text";
};

Cache make_cache(const Globals& g)
{
    return Cache(g.cache_dir, [](const std::string& m) { std::cerr << "warning: " << m << "\n"; });
}

std::string scalar_text(const json& v) { return v.is_string() ? v.get<std::string>() : v.dump(); }

void print_flat(std::ostream& out, const json& j)
{
    for (const auto& [k, v] : j.items()) out << k << ": " << scalar_text(v) << "\n";
}

json group_summary(const PermutationGroup& g)
{
    json annotations = json::object();
    for (const auto& [k, v] : g.annotations()) annotations[k] = v;
    const ClassData& cd = g.classes();
    return json{{"descriptor", g.descriptor()},
                {"order", g.order()},
                {"degree", g.degree()},
                {"generators", g.generators().size()},
                {"exponent", cd.exponent()},
                {"classes", cd.class_count()},
                {"abelian", is_abelian(g)},
                {"solvable", is_solvable(g)},
                {"spectrum", prime_spectrum(g)},
                {"annotations", annotations}};
}

json compute_flag(const std::string& flag, const PermutationGroup& g)
{
    if (flag == "cut") return is_cut_by_classes(g);
    if (flag == "rational") return rationality_report(g.classes()).rational_group;
    if (flag == "semirational") return rationality_report(g.classes()).semi_rational_group;
    if (flag == "camina") return is_camina(g);
    auto s = detect_frobenius(g);
    if (!s) return json{{"frobenius", false}};
    return json{{"frobenius", true}, {"kernel_order", s->kernel.order()}, {"complement_order", s->complement.order()}};
}

json table_json(const CharacterTable& t)
{
    const ClassData& cd = t.classes();
    json classes = json::array();
    for (std::size_t c = 0; c < cd.class_count(); ++c) {
        classes.push_back(json{{"order", cd.rep_order(c)}, {"size", cd.size(c)}});
    }
    json characters = json::array();
    for (std::size_t i = 0; i < t.rows.size(); ++i) {
        json values = json::array();
        for (const auto& v : t.rows[i]) values.push_back(v.to_string());
        characters.push_back(json{{"degree", t.degrees[i]}, {"values", values}, {"field", t.fields[i].to_string()}});
    }
    return json{{"descriptor", t.group.descriptor()},
                {"order", cd.group_order()},
                {"conductor", t.conductor},
                {"prime", t.prime},
                {"classes", classes},
                {"characters", characters}};
}

void print_table_text(std::ostream& out, const json& t, bool fields)
{
    out << t["descriptor"].get<std::string>() << "  order " << t["order"] << "  values in Q(z" << t["conductor"]
        << ")\n";
    std::vector<std::vector<std::string>> cells;
    std::vector<std::string> head{"", "class"};
    std::vector<std::string> sizes{"", "size"};
    for (std::size_t c = 0; c < t["classes"].size(); ++c) {
        head.push_back(std::to_string(c) + "/" + scalar_text(t["classes"][c]["order"]));
        sizes.push_back(scalar_text(t["classes"][c]["size"]));
    }
    if (fields) {
        head.push_back("field");
        sizes.push_back("");
    }
    cells.push_back(head);
    cells.push_back(sizes);
    for (std::size_t i = 0; i < t["characters"].size(); ++i) {
        const auto& ch = t["characters"][i];
        std::vector<std::string> row{"X" + std::to_string(i), ""};
        for (const auto& v : ch["values"]) row.push_back(v.get<std::string>());
        if (fields) row.push_back(ch["field"].get<std::string>());
        cells.push_back(row);
    }
    std::vector<std::size_t> width(head.size(), 0);
    for (const auto& r : cells) {
        for (std::size_t j = 0; j < r.size(); ++j) width[j] = std::max(width[j], r[j].size());
    }
    for (const auto& r : cells) {
        std::string line;
        for (std::size_t j = 0; j < r.size(); ++j) {
            line += r[j] + std::string(width[j] - r[j].size() + 2, ' ');
        }
        while (!line.empty() && line.back() == ' ') line.pop_back();
        out << line << "\n";
    }
}

void emit(const Globals& g, const json& j, const std::function<void(std::ostream&)>& text, std::ostream& out = std::cout)
{
    if (g.format == "json") {
        out << j.dump(2) << "\n";
    } else {
        text(out);
    }
}

PermutationGroup load_group(const std::string& desc, const Globals& g)
{
    PermutationGroup group = build_group(desc);
    group.materialize(g.max_order);
    return group;
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Cut property, character tables and Frobenius structure of finite groups"};
    app.require_subcommand(1);
    Globals globals;
    app.add_option("--cache-dir", globals.cache_dir, "Cache directory")->capture_default_str();
    app.add_option("--max-order", globals.max_order, "Largest group order to enumerate")->capture_default_str();
    app.add_option("--format", globals.format, "Output format")
        ->check(CLI::IsMember({"json", "text"}))
        ->capture_default_str();

    std::string desc;
    std::string out_path;
    auto* construct = app.add_subcommand("construct", "Build a group and print a summary");
    construct->add_option("descriptor", desc, "Group descriptor")->required();
    construct->add_option("--out", out_path, "Write the summary to a file");

    auto* check = app.add_subcommand("check", "Decide properties of a group");
    check->add_option("descriptor", desc, "Group descriptor")->required();
    std::map<std::string, bool> flags{{"cut", false},       {"rational", false}, {"semirational", false},
                                      {"frobenius", false}, {"camina", false}};
    for (auto& [name, value] : flags) check->add_flag("--" + name, value);
    bool all = false;
    check->add_flag("--all", all, "Every property");

    auto* chartab = app.add_subcommand("chartab", "Character table");
    chartab->add_option("descriptor", desc, "Group descriptor")->required();
    bool fields = false;
    chartab->add_flag("--fields", fields, "Show character fields");

    auto* verify = app.add_subcommand("verify", "Run verification suites");
    std::string suite;
    unsigned jobs = 1;
    bool timings = false;
    verify->add_option("suite", suite, "Suite name or all")->required();
    verify->add_option("--max-order", globals.max_order, "Largest group order to enumerate");
    verify->add_option("--jobs", jobs, "Worker threads")->check(CLI::PositiveNumber);
    verify->add_flag("--timings", timings, "Include elapsed times");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (*construct) {
            PermutationGroup g = load_group(desc, globals);
            json j = group_summary(g);
            std::ostringstream text;
            emit(globals, j, [&](std::ostream& o) { print_flat(o, j); }, text);
            if (!out_path.empty()) {
                std::ofstream f(out_path);
                f << j.dump(2) << "\n";
                if (!f) throw std::runtime_error("cannot write " + out_path);
            }
            std::cout << text.str();
            return 0;
        }
        if (*check) {
            PermutationGroup g = load_group(desc, globals);
            Cache cache = make_cache(globals);
            const std::string key = g.descriptor();
            json cached = cache.get(key, g.order(), "check").value_or(json::object());
            const bool none = std::none_of(flags.begin(), flags.end(), [](const auto& f) { return f.second; });
            json result = json::object();
            bool dirty = false;
            for (const auto& [name, wanted] : flags) {
                if (!(wanted || all || none)) continue;
                if (!cached.contains(name)) {
                    cached[name] = compute_flag(name, g);
                    dirty = true;
                }
                result[name] = cached[name];
            }
            if (dirty) cache.put(key, g.order(), "check", cached);
            emit(globals, result, [&](std::ostream& o) {
                for (const auto& [k, v] : result.items()) {
                    if (v.is_object()) {
                        o << k << ": " << scalar_text(v["frobenius"]);
                        if (v["frobenius"].get<bool>()) {
                            o << " (kernel " << v["kernel_order"] << ", complement " << v["complement_order"] << ")";
                        }
                        o << "\n";
                    } else {
                        o << k << ": " << scalar_text(v) << "\n";
                    }
                }
            });
            return 0;
        }
        if (*chartab) {
            PermutationGroup g = load_group(desc, globals);
            Cache cache = make_cache(globals);
            const std::string key = g.descriptor();
            json t;
            if (auto hit = cache.get(key, g.order(), "chartab")) {
                t = *hit;
            } else {
                t = table_json(character_table(g));
                cache.put(key, g.order(), "chartab", t);
            }
            if (!fields) {
                for (auto& ch : t["characters"]) ch.erase("field");
            }
            emit(globals, t, [&](std::ostream& o) { print_table_text(o, t, fields); });
            return 0;
        }
        if (*verify) {
            VerifyOptions opts;
            opts.max_order = globals.max_order;
            opts.jobs = jobs;
            auto reports = run_suites(suite, opts);
            json j = to_json(reports, timings);
            emit(globals, j, [&](std::ostream& o) {
                for (const auto& r : reports) {
                    o << r.suite << ": " << (r.passed() ? "PASS" : "FAIL") << "  pass " << r.count(Status::Pass)
                      << ", fail " << r.count(Status::Fail) << ", skipped " << r.count(Status::Skipped);
                    if (timings) o << ", " << r.elapsed_seconds << " s";
                    o << "\n";
                    for (const auto& a : r.assertions) {
                        if (a.status == Status::Pass) continue;
                        o << "  " << to_string(a.status) << ": " << a.claim;
                        if (!a.reason.empty()) o << " (" << a.reason << ")";
                        o << "\n    " << a.witness.dump() << "\n";
                    }
                }
            });
            return j["passed"].get<bool>() ? 0 : 1;
        }
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}
