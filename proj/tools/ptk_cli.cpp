/*
 * Command line front end.  Each subcommand runs one workflow, prints a
 * short text summary (or the full report with --json), and can write the
 * JSON report to a file with --out.  Reports embed the complete run
 * configuration.  A config file of `key = value` lines supplies defaults
 * that explicit flags override.
 *
 * Exit codes: 0 success, 1 domain error, 2 precision or budget error,
 * 64 usage error.
 */

#include <algorithm>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <map>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "ptk/bar.hpp"
#include "ptk/ck.hpp"
#include "ptk/descent.hpp"
#include "ptk/errors.hpp"
#include "ptk/ffield.hpp"
#include "ptk/group.hpp"
#include "ptk/padic.hpp"
#include "ptk/polylog.hpp"
#include "ptk/zetap.hpp"

using nlohmann::ordered_json;
using namespace ptk;

namespace {

struct Run {
    long long p = 5;
    int prec = 20;
    int slack = 3;
    int depth = 2;
    long long k = 2;
    long long s = 2;
    std::string z = "2";
    std::vector<long long> set{2};
    int bound = 20;
    long long a = 0;
    long long b = -1;
    double max_height = 3.0;
    long long budget = 0; // 0 keeps the library defaults
    std::string input;
    int jobs = 1;
    std::string out;
    bool as_json = false;
};

std::string rstr(const Rat& r) {
    std::ostringstream os;
    os << r;
    return os.str();
}

Rat parse_rat(const std::string& text) {
    try {
        Rat r(text);
        return r;
    } catch (const std::exception&) {
        throw domain_error("malformed rational: " + text);
    }
}

void validate_core(const Run& r) {
    if (!is_odd_prime(r.p)) throw domain_error("p must be an odd prime");
    if (r.prec < 8 || r.prec > 2048)
        throw domain_error("precision must be between 8 and 2048");
    if (r.slack < 0 || r.slack >= r.prec)
        throw domain_error("slack must be nonnegative and smaller than the precision");
}

ordered_json base_report(const char* command, const Run& r) {
    ordered_json cfg;
    cfg["p"] = r.p;
    cfg["prec"] = r.prec;
    cfg["slack"] = r.slack;
    cfg["depth"] = r.depth;
    cfg["set"] = r.set;
    cfg["bound"] = r.bound;
    cfg["a"] = r.a;
    cfg["b"] = r.b;
    cfg["max_height"] = r.max_height;
    cfg["budget"] = r.budget;
    cfg["jobs"] = r.jobs;
    cfg["out"] = r.out;

    ordered_json j;
    j["schema"] = 1;
    j["command"] = command;
    j["config"] = std::move(cfg);
    return j;
}

ordered_json point_json(const CurvePoint& p) {
    ordered_json j;
    if (p.infinite) {
        j["infinite"] = true;
    } else {
        j["x"] = rstr(p.x);
        j["y"] = rstr(p.y);
    }
    return j;
}

std::string point_str(const CurvePoint& p) {
    if (p.infinite) return "O";
    return "(" + rstr(p.x) + ", " + rstr(p.y) + ")";
}

ordered_json run_polylog(const Run& r, std::vector<std::string>& text) {
    validate_core(r);
    if (r.k < 1 || r.k > 16) throw domain_error("polylog depth must be between 1 and 16");
    Rat z = parse_rat(r.z);
    PolylogTable table(r.p, r.prec, static_cast<int>(r.k));
    PadicNumber val = table.ell(static_cast<int>(r.k),
                                PadicNumber::from_rational(z, r.p, r.prec));
    ordered_json j = base_report("polylog", r);
    j["config"]["k"] = r.k;
    j["config"]["z"] = rstr(z);
    j["value"] = val.str();
    text.push_back(val.str());
    return j;
}

ordered_json run_zetap(const Run& r, std::vector<std::string>& text) {
    validate_core(r);
    PadicNumber val = zeta_p(r.s, r.p, r.prec);
    ordered_json j = base_report("zetap", r);
    j["config"]["s"] = r.s;
    j["value"] = val.str();
    text.push_back(val.str());
    return j;
}

ordered_json run_ck_solve(const Run& r, std::vector<std::string>& text) {
    validate_core(r);
    if (r.depth != 2 && r.depth != 4) throw domain_error("depth must be 2 or 4");
    std::vector<Rat> candidates = s_unit_points({2}, 20);
    SolveReport rep = solve_unit_equation(r.p, r.prec, r.depth, candidates, r.slack);

    ordered_json j = base_report("ck solve", r);
    ordered_json rows = ordered_json::array();
    ordered_json matched = ordered_json::array();
    int found = 0;
    for (const auto& c : rep.candidates) {
        ordered_json row;
        row["value"] = rstr(c.value);
        row["disk"] = c.disk;
        row["found"] = c.found;
        row["zero"] = c.zero ? ordered_json(c.zero->str()) : ordered_json(nullptr);
        rows.push_back(std::move(row));
        if (c.found) {
            matched.push_back(rstr(c.value));
            ++found;
        }
        std::string line = "candidate " + rstr(c.value) + ": ";
        if (c.disk < 0) {
            line += "not a unit";
        } else if (c.found) {
            line += "disk " + std::to_string(c.disk) + ", matched";
        } else {
            line += "disk " + std::to_string(c.disk) + ", no zero";
        }
        text.push_back(line);
    }
    ordered_json disks = ordered_json::array();
    long long undecided = 0;
    for (const auto& d : rep.disks) {
        ordered_json row;
        row["disk"] = d.disk;
        ordered_json zs = ordered_json::array();
        for (const auto& z : d.zeros) zs.push_back(z.str());
        ordered_json us = ordered_json::array();
        for (const auto& u : d.undecided) us.push_back(u.str());
        undecided += static_cast<long long>(d.undecided.size());
        row["zeros"] = std::move(zs);
        row["undecided"] = std::move(us);
        disks.push_back(std::move(row));
    }
    ordered_json extras = ordered_json::array();
    for (const auto& e : rep.extras) extras.push_back(e.str());

    j["candidates"] = std::move(rows);
    j["matched"] = std::move(matched);
    j["extras"] = std::move(extras);
    j["disks"] = std::move(disks);
    text.push_back("matched " + std::to_string(found) + " of " +
                   std::to_string(rep.candidates.size()) + " candidates, " +
                   std::to_string(rep.extras.size()) + " extra zeros, " +
                   std::to_string(undecided) + " undecided subdisks");
    return j;
}

ordered_json run_ck_verify(const Run& r, std::vector<std::string>& text) {
    validate_core(r);
    if (r.depth != 2 && r.depth != 4) throw domain_error("depth must be 2 or 4");
    Rat z = parse_rat(r.z);
    PolylogTable table(r.p, r.prec + 8, r.depth);
    LocallyAnalyticFunction f =
        r.depth == 2 ? depth_two_function(table) : depth_four_function(table);
    PadicNumber val = f.evaluate(PadicNumber::from_rational(z, r.p, r.prec + 8));
    int threshold = r.prec - r.slack;
    bool vanishes = val.zero_to(threshold);

    ordered_json j = base_report("ck verify", r);
    j["config"]["z"] = rstr(z);
    j["value"] = val.str();
    j["threshold_exponent"] = threshold;
    j["vanishes"] = vanishes;
    text.push_back(val.str());
    text.push_back("|f(z)| <= " + std::to_string(r.p) + "^-" + std::to_string(threshold) +
                   ": " + (vanishes ? "yes" : "no"));
    return j;
}

ordered_json run_descent(const Run& r, std::vector<std::string>& text) {
    CurveModel e(r.a, r.b);
    DescentReport rep = conditional_rank(e, r.max_height);

    ordered_json j = base_report("descent", r);
    j["verdict"] = rep.verdict();
    j["selmer_upper_bound"] = rep.selmer_upper_bound;
    j["rank_lower_bound"] = rep.rank_lower_bound;
    j["rank_determined"] = rep.rank_determined;
    j["flagged"] = rep.flagged;
    auto selmer_json = [](const SelmerSet& s) {
        ordered_json out;
        std::vector<long long> cl, un;
        for (const auto& d : s.classes) cl.push_back(d.convert_to<long long>());
        for (const auto& d : s.undecided) un.push_back(d.convert_to<long long>());
        out["classes"] = cl;
        out["undecided"] = un;
        return out;
    };
    j["selmer"] = selmer_json(rep.selmer);
    j["partner_selmer"] = selmer_json(rep.partner_selmer);
    ordered_json pts = ordered_json::array();
    for (const auto& p : rep.points_found) pts.push_back(point_json(p));
    j["points_found"] = std::move(pts);
    j["heights"] = rep.heights;
    ordered_json gens = ordered_json::array();
    for (const auto& g : rep.generators) gens.push_back(point_json(g));
    j["generators"] = std::move(gens);

    text.push_back(std::string("verdict: ") + rep.verdict());
    if (rep.rank_determined) {
        text.push_back("rank: " + std::to_string(rep.rank_lower_bound));
    } else {
        text.push_back("rank between " + std::to_string(rep.rank_lower_bound) +
                       " and " + std::to_string(rep.selmer_upper_bound));
    }
    for (const auto& g : rep.generators) text.push_back("generator: " + point_str(g));
    return j;
}

ordered_json run_sunits(const Run& r, std::vector<std::string>& text) {
    if (r.bound < 0) throw domain_error("bound must be nonnegative");
    std::vector<Rat> pts = s_unit_points(r.set, r.bound);
    ordered_json j = base_report("sunits", r);
    ordered_json arr = ordered_json::array();
    for (const auto& z : pts) {
        arr.push_back(rstr(z));
        text.push_back(rstr(z));
    }
    j["points"] = std::move(arr);
    j["count"] = pts.size();
    return j;
}

FiniteGroup group_from_json(const ordered_json& g) {
    if (g.contains("cyclic")) return FiniteGroup::cyclic(g.at("cyclic").get<int>());
    if (g.contains("dihedral")) return FiniteGroup::dihedral(g.at("dihedral").get<int>());
    if (g.contains("table"))
        return FiniteGroup(g.at("table").get<std::vector<std::vector<int>>>());
    throw domain_error("group description needs cyclic, dihedral, or table");
}

ordered_json load_input(const std::string& path) {
    if (path.empty()) throw domain_error("this subcommand needs --input");
    std::ifstream in(path);
    if (!in) throw domain_error("cannot read input file: " + path);
    return ordered_json::parse(in);
}

ordered_json run_coh(const Run& r, const std::string& sub, std::vector<std::string>& text) {
    ordered_json data = load_input(r.input);
    ordered_json j = base_report(("coh " + sub).c_str(), r);
    j["config"]["input"] = r.input;
    j["input"] = data;

    if (sub == "h1") {
        GroupAction ga;
        ga.g = group_from_json(data.at("group"));
        ga.a = group_from_json(data.at("coefficients"));
        ga.act = data.at("action").get<std::vector<std::vector<int>>>();
        ga.validate();
        auto z = r.budget > 0 ? z1_cocycles(ga, r.budget) : z1_cocycles(ga);
        auto cls = h1_classes(ga, z);
        j["cocycles"] = z.size();
        j["classes"] = cls.size();
        j["representatives"] = cls;
        text.push_back("cocycles: " + std::to_string(z.size()));
        text.push_back("classes: " + std::to_string(cls.size()));
        return j;
    }
    if (sub == "bar") {
        BarModule mod;
        mod.g = group_from_json(data.at("group"));
        for (long long m : data.at("moduli").get<std::vector<long long>>())
            mod.m.push_back(Int(m));
        if (data.contains("action")) {
            for (const auto& mats : data.at("action")) {
                IntMat mt;
                for (const auto& row : mats) {
                    std::vector<Int> ro;
                    for (long long v : row.get<std::vector<long long>>()) ro.push_back(Int(v));
                    mt.push_back(std::move(ro));
                }
                mod.act.push_back(std::move(mt));
            }
        } else {
            mod = BarModule::trivial(mod.g, mod.m);
        }
        mod.validate();
        int k = data.at("degree").get<int>();
        auto inv = bar_cohomology(mod, k, r.budget > 0 ? r.budget : 200000);
        std::vector<long long> out;
        long long order = 1;
        for (const auto& d : inv) {
            out.push_back(d.convert_to<long long>());
            order *= out.back();
        }
        j["degree"] = k;
        j["invariants"] = out;
        j["order"] = order;
        std::string line = "H^" + std::to_string(k) + " invariants:";
        if (out.empty()) line += " none";
        for (long long d : out) line += " " + std::to_string(d);
        text.push_back(line);
        text.push_back("order: " + std::to_string(order));
        return j;
    }
    if (sub == "les") {
        auto seed = data.at("seed").get<std::uint64_t>();
        ShortExactSequence s = random_sequence(seed);
        LesReport rep = r.budget > 0 ? les_check(s, r.budget) : les_check(s);
        std::vector<long long> orders;
        for (const auto& h : rep.h_orders) orders.push_back(h.convert_to<long long>());
        j["seed"] = seed;
        j["h_orders"] = orders;
        j["exact"] = rep.exact;
        std::string line = "orders:";
        for (long long h : orders) line += " " + std::to_string(h);
        text.push_back(line);
        text.push_back(std::string("exact: ") + (rep.exact ? "yes" : "no"));
        return j;
    }
    if (sub == "kummer") {
        KummerReport rep = kummer_h1(data.at("q").get<long long>(),
                                     data.at("n").get<long long>(),
                                     data.at("m").get<int>());
        j["q"] = rep.q;
        j["n"] = rep.n;
        j["m"] = rep.m;
        j["mu_order"] = rep.mu_order;
        j["h1_order"] = rep.h1_order;
        j["unit_index"] = rep.unit_index;
        text.push_back("mu_order: " + std::to_string(rep.mu_order));
        text.push_back("h1_order: " + std::to_string(rep.h1_order));
        text.push_back("unit_index: " + std::to_string(rep.unit_index));
        return j;
    }
    if (sub == "cs") {
        auto n = data.at("n").get<long long>();
        FiniteGroup g = data.contains("group") ? group_from_json(data.at("group"))
                                               : FiniteGroup::cyclic(static_cast<int>(n));
        std::vector<int> rho;
        const auto& rj = data.at("rho");
        if (rj.is_string()) {
            std::string kind = rj.get<std::string>();
            if (kind == "identity") {
                for (int i = 0; i < g.n; ++i) rho.push_back(i % static_cast<int>(n));
            } else if (kind == "trivial") {
                rho.assign(static_cast<size_t>(g.n), 0);
            } else {
                throw domain_error("rho must be identity, trivial, or a residue list");
            }
        } else {
            rho = rj.get<std::vector<int>>();
        }
        Int order = cs_class(g, rho, n, r.budget > 0 ? r.budget : 200000);
        j["n"] = n;
        j["class_order"] = order.convert_to<long long>();
        text.push_back("class order: " + order.str());
        return j;
    }
    throw domain_error("unknown coh subcommand: " + sub);
}

struct UsageError {
    std::string message;
};

const std::map<std::string, std::set<std::string>>& config_keys() {
    static const std::map<std::string, std::set<std::string>> keys{
        {"", {}},
        {"polylog", {"k", "z", "p", "prec"}},
        {"zetap", {"s", "p", "prec"}},
        {"ck solve", {"p", "prec", "depth"}},
        {"ck verify", {"p", "prec", "depth", "z"}},
        {"descent", {"a", "b", "max-height"}},
        {"coh h1", {"input", "budget"}},
        {"coh bar", {"input", "budget"}},
        {"coh les", {"input", "budget"}},
        {"coh kummer", {"input", "budget"}},
        {"coh cs", {"input", "budget"}},
        {"sunits", {"set", "bound"}},
    };
    return keys;
}

std::string trim(const std::string& s) {
    size_t b = s.find_first_not_of(" \t\r\n");
    if (b == std::string::npos) return "";
    size_t e = s.find_last_not_of(" \t\r\n");
    return s.substr(b, e - b + 1);
}

// Applies a config file to the argument list: each `key = value` line that
// names an option of the active subcommand and is absent from the command
// line is inserted as a flag right after the subcommand tokens.
void apply_config(std::vector<std::string>& args) {
    std::string path;
    for (size_t i = 0; i < args.size(); ++i) {
        if (args[i] == "--config" && i + 1 < args.size()) path = args[i + 1];
        else if (args[i].rfind("--config=", 0) == 0) path = args[i].substr(9);
    }
    if (path.empty()) return;

    std::string sub;
    size_t insert_at = 0;
    for (size_t i = 0; i < args.size(); ++i) {
        if (!args[i].empty() && args[i][0] == '-') break;
        sub = sub.empty() ? args[i] : sub + " " + args[i];
        insert_at = i + 1;
        if (args[i] != "ck" && args[i] != "coh") break;
    }
    auto it = config_keys().find(sub);
    if (it == config_keys().end()) throw UsageError{"config file needs a known subcommand"};
    static const std::set<std::string> global_keys{"slack", "jobs", "out", "json"};

    std::ifstream in(path);
    if (!in) throw UsageError{"cannot read config file: " + path};
    std::vector<std::string> extra;
    std::string line;
    size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        size_t hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        line = trim(line);
        if (line.empty()) continue;
        size_t eq = line.find('=');
        if (eq == std::string::npos)
            throw UsageError{"config line " + std::to_string(lineno) + " has no '='"};
        std::string key = trim(line.substr(0, eq));
        std::string val = trim(line.substr(eq + 1));
        if (key.empty() || val.empty())
            throw UsageError{"config line " + std::to_string(lineno) + " is incomplete"};
        if (it->second.count(key) == 0 && global_keys.count(key) == 0)
            throw UsageError{"unknown config key: " + key};

        std::string flag = "--" + key;
        bool given = false;
        for (const auto& a : args)
            if (a == flag || a.rfind(flag + "=", 0) == 0) given = true;
        if (given) continue;

        if (key == "json") {
            if (val == "1" || val == "true" || val == "yes" || val == "on")
                extra.push_back(flag);
            else if (val != "0" && val != "false" && val != "no" && val != "off")
                throw UsageError{"config key json must be a boolean"};
            continue;
        }
        extra.push_back(flag);
        extra.push_back(val);
    }
    args.insert(args.begin() + static_cast<long>(insert_at), extra.begin(), extra.end());
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"p-adic computation toolkit"};
    app.require_subcommand(1);
    Run r;
    std::string config_path;

    app.add_option("--slack", r.slack, "agreement slack in digits")->capture_default_str();
    app.add_option("--jobs", r.jobs, "worker cap")->capture_default_str();
    app.add_option("--config", config_path, "config file of key = value lines");
    app.add_option("--out", r.out, "write the JSON report to this file");
    app.add_flag("--json", r.as_json, "print the JSON report instead of text");

    CLI::App* pl = app.add_subcommand("polylog", "evaluate a p-adic polylogarithm");
    pl->fallthrough();
    pl->add_option("--k", r.k, "polylog depth")->capture_default_str();
    pl->add_option("--z", r.z, "argument, a rational a/b")->capture_default_str();
    pl->add_option("--p", r.p, "odd prime")->capture_default_str();
    pl->add_option("--prec", r.prec, "p-adic precision")->capture_default_str();

    CLI::App* zp = app.add_subcommand("zetap", "evaluate the p-adic zeta function");
    zp->fallthrough();
    zp->add_option("--s", r.s, "integer argument")->capture_default_str();
    zp->add_option("--p", r.p, "odd prime")->capture_default_str();
    zp->add_option("--prec", r.prec, "p-adic precision")->capture_default_str();

    CLI::App* ck = app.add_subcommand("ck", "unit equation workflows");
    ck->require_subcommand(1);
    ck->fallthrough();
    ck->add_option("--p", r.p, "odd prime")->capture_default_str();
    ck->add_option("--prec", r.prec, "p-adic precision")->capture_default_str();
    ck->add_option("--depth", r.depth, "2 or 4")->capture_default_str();
    CLI::App* ck_solve = ck->add_subcommand("solve", "locate the 2-unit points");
    ck_solve->fallthrough();
    CLI::App* ck_verify = ck->add_subcommand("verify", "evaluate the vanishing function");
    ck_verify->fallthrough();
    ck_verify->add_option("--z", r.z, "argument, a rational a/b")->capture_default_str();

    CLI::App* de = app.add_subcommand("descent", "rank bounds for y^2 = x^3 + ax^2 + bx");
    de->fallthrough();
    de->add_option("--a", r.a, "coefficient a")->capture_default_str();
    de->add_option("--b", r.b, "coefficient b")->capture_default_str();
    de->add_option("--max-height", r.max_height, "point search cap")->capture_default_str();

    CLI::App* coh = app.add_subcommand("coh", "finite group cohomology");
    coh->require_subcommand(1);
    coh->fallthrough();
    coh->add_option("--input", r.input, "JSON input file");
    coh->add_option("--budget", r.budget, "enumeration cap, 0 for defaults")
        ->capture_default_str();
    std::vector<std::string> coh_subs{"h1", "bar", "les", "kummer", "cs"};
    std::map<std::string, CLI::App*> coh_apps;
    for (const auto& name : coh_subs) {
        CLI::App* sc = coh->add_subcommand(name, "coh " + name);
        sc->fallthrough();
        coh_apps[name] = sc;
    }

    CLI::App* su = app.add_subcommand("sunits", "enumerate S-unit points");
    su->fallthrough();
    su->add_option("--set", r.set, "primes, comma separated")->delimiter(',');
    su->add_option("--bound", r.bound, "exponent bound")->capture_default_str();

    std::vector<std::string> args(argv + 1, argv + argc);
    try {
        apply_config(args);
    } catch (const UsageError& e) {
        std::cerr << "usage error: " << e.message << "\n";
        return 64;
    }
    std::reverse(args.begin(), args.end());
    try {
        app.parse(args);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 64;
    }

    try {
        if (r.jobs < 1) throw domain_error("jobs must be at least 1");
        ordered_json rep;
        std::vector<std::string> text;
        if (pl->parsed()) {
            rep = run_polylog(r, text);
        } else if (zp->parsed()) {
            rep = run_zetap(r, text);
        } else if (ck->parsed()) {
            rep = ck_solve->parsed() ? run_ck_solve(r, text) : run_ck_verify(r, text);
        } else if (de->parsed()) {
            rep = run_descent(r, text);
        } else if (coh->parsed()) {
            for (const auto& [name, sc] : coh_apps)
                if (sc->parsed()) rep = run_coh(r, name, text);
        } else if (su->parsed()) {
            rep = run_sunits(r, text);
        }

        if (!r.out.empty()) {
            std::ofstream f(r.out);
            if (!f) throw domain_error("cannot write report file: " + r.out);
            f << rep.dump(2) << "\n";
        }
        if (r.as_json) {
            std::cout << rep.dump(2) << "\n";
        } else {
            for (const auto& line : text) std::cout << line << "\n";
        }
        return 0;
    } catch (const precision_error& e) {
        std::cerr << "precision error: " << e.what() << "\n";
        return 2;
    } catch (const resource_error& e) {
        std::cerr << "resource error: " << e.what() << "\n";
        return 2;
    } catch (const domain_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
