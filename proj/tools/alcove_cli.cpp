// Command-line front end.  Talks to the library exclusively through the
// public C interface (include/alcove.h); everything here is argument
// plumbing, JSON/CSV serialization, and exit-code mapping.
//
// Exit codes: 0 success, 1 validation-suite failure, 2 invalid input,
// 3 method unavailable, 4 internal error.
#include "alcove.h"

#include "CLI11.hpp"
#include "json.hpp"

#include <chrono>
#include <cinttypes>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <optional>
#include <string>
#include <vector>

using nlohmann::json;

namespace {

int to_exit(alc_status s) {
    switch (s) {
    case ALC_OK: return 0;
    case ALC_VALIDATION_FAILED: return 1;
    case ALC_INVALID_INPUT: return 2;
    case ALC_UNSUPPORTED: return 3;
    default: return 4;
    }
}

[[noreturn]] void die(int code, const std::string& msg) {
    std::fprintf(stderr, "alcove: %s\n", msg.c_str());
    std::exit(code);
}

std::string g17(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

struct TGrid {
    double start = 0.0;
    double stop = 0.0;
    int count = 0;
    bool log = false;

    std::vector<double> points() const {
        std::vector<double> ts;
        ts.reserve(static_cast<size_t>(count));
        if (count == 1) {
            ts.push_back(start);
            return ts;
        }
        for (int i = 0; i < count; ++i) {
            const double u = static_cast<double>(i) / (count - 1);
            ts.push_back(log ? start * std::pow(stop / start, u)
                             : start + u * (stop - start));
        }
        return ts;
    }
};

struct Args {
    std::string type;
    int k = 0;
    std::vector<double> x;
    std::optional<double> t;
    std::string tgrid_raw;
    std::optional<TGrid> tgrid;
    std::string method = "formula";
    double tol = 0.0; // 0 -> library default
    std::string output = "json";
    std::string config_path;

    // simulation controls (sentinels mean "not set")
    long long paths = -1;
    double dt = 0.0;
    double horizon = 0.0;
    int workers = -1;
    std::optional<uint64_t> seed;

    // eigen
    std::vector<double> p;
    bool neumann = false;

    // debruijn
    std::string battery_path;

    // validate
    std::string suite = "all";
};

TGrid parse_tgrid(const std::string& raw) {
    TGrid g;
    char scale[16] = "linear";
    const int got = std::sscanf(raw.c_str(), "%lf,%lf,%d,%15s", &g.start, &g.stop,
                                &g.count, scale);
    if (got < 3)
        die(2, "--t-grid expects start,stop,count[,log|linear]");
    const std::string sc(scale);
    if (sc == "log")
        g.log = true;
    else if (sc != "linear")
        die(2, "--t-grid scale must be log or linear");
    if (g.count < 1) die(2, "--t-grid count must be >= 1");
    if (g.start < 0 || g.stop < 0) die(2, "--t-grid endpoints must be >= 0");
    if (g.log && g.start <= 0) die(2, "log t-grid needs start > 0");
    return g;
}

json load_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) die(2, "cannot open " + path);
    json j;
    try {
        in >> j;
    } catch (const std::exception& e) {
        die(2, path + ": " + e.what());
    }
    return j;
}

// Fill fields the command line left unset from a config object.  Flags win.
void overlay_config(const CLI::App* sub, const json& cfg, Args& a) {
    auto unset = [&](const char* flag) {
        const CLI::Option* o = sub->get_option_no_throw(flag);
        return o != nullptr && o->count() == 0;
    };
    try {
        if (cfg.contains("type") && unset("--type")) a.type = cfg["type"];
        if (cfg.contains("k") && unset("--k")) a.k = cfg["k"];
        if (cfg.contains("x") && unset("--x"))
            a.x = cfg["x"].get<std::vector<double>>();
        if (cfg.contains("t") && unset("--t") && !cfg["t"].is_null())
            a.t = cfg["t"].get<double>();
        if (cfg.contains("t_grid") && unset("--t-grid")) {
            const json& g = cfg["t_grid"];
            TGrid tg;
            tg.start = g.at("start");
            tg.stop = g.at("stop");
            tg.count = g.at("count");
            tg.log = g.value("scale", "linear") == std::string("log");
            a.tgrid = tg;
        }
        if (cfg.contains("method") && unset("--method")) a.method = cfg["method"];
        if (cfg.contains("tol") && unset("--tol") && !cfg["tol"].is_null())
            a.tol = cfg["tol"].get<double>();
        if (cfg.contains("output") && unset("--output")) a.output = cfg["output"];
        if (cfg.contains("p") && unset("--p"))
            a.p = cfg["p"].get<std::vector<double>>();
        if (cfg.contains("neumann") && unset("--neumann"))
            a.neumann = cfg["neumann"].get<bool>();
        if (cfg.contains("suite") && unset("suite")) a.suite = cfg["suite"];
        if (cfg.contains("mc")) {
            const json& m = cfg["mc"];
            if (m.contains("paths") && unset("--paths"))
                a.paths = m["paths"].get<long long>();
            if (m.contains("dt") && unset("--dt")) a.dt = m["dt"].get<double>();
            if (m.contains("horizon") && unset("--horizon"))
                a.horizon = m["horizon"].get<double>();
            if (m.contains("workers") && unset("--workers"))
                a.workers = m["workers"].get<int>();
            if (m.contains("seed") && unset("--seed"))
                a.seed = m["seed"].get<uint64_t>();
        }
    } catch (const std::exception& e) {
        die(2, std::string("config: ") + e.what());
    }
}

alc_mc_config resolve_mc(const Args& a) {
    alc_mc_config c = alc_mc_config_default();
    if (a.paths >= 0) c.paths = a.paths;
    if (a.dt > 0) c.dt = a.dt;
    if (a.horizon > 0) c.horizon = a.horizon;
    if (a.workers >= 0) c.workers = a.workers;
    if (a.seed.has_value()) {
        c.seed = *a.seed;
    } else if (const char* env = std::getenv("ALCOVE_SEED")) {
        char* end = nullptr;
        c.seed = std::strtoull(env, &end, 10);
        if (end == env) die(2, "ALCOVE_SEED is not a number");
    }
    return c;
}

json mc_echo(const alc_mc_config& c) {
    return json{{"paths", c.paths},
                {"dt", c.dt},
                {"horizon", c.horizon},
                {"seed", c.seed},
                {"workers", c.workers}};
}

struct Timer {
    std::chrono::steady_clock::time_point t0 = std::chrono::steady_clock::now();
    double ms() const {
        return std::chrono::duration<double, std::milli>(
                   std::chrono::steady_clock::now() - t0)
            .count();
    }
};

void emit(const json& out, const Args& a) {
    if (a.output == "json") {
        std::printf("%s\n", out.dump(2).c_str());
        return;
    }
    // fixed CSV columns: t, value, error_bound, method
    std::string csv = "t,value,error_bound,method\n";
    const std::string method = out.at("method");
    if (out.contains("values")) {
        for (const json& row : out.at("values"))
            csv += g17(row.at("t")) + "," + g17(row.at("value")) + "," +
                   g17(row.at("error_bound")) + "," + method + "\n";
    } else {
        const double t = out.at("query").value("t", 0.0);
        csv += g17(t) + "," + g17(out.at("value")) + "," +
               g17(out.at("error_bound")) + "," + method + "\n";
    }
    std::fputs(csv.c_str(), stdout);
}

// Shared handle creation; "chamber" is served without a handle.
alc_datum* make_handle_or_die(const Args& a) {
    alc_datum* d = nullptr;
    const alc_status s = alc_datum_create(a.type.c_str(), a.k, &d);
    if (s != ALC_OK) die(to_exit(s), alc_last_error());
    return d;
}

void require_x(const Args& a) {
    if (a.x.empty()) die(2, "--x is required");
}

json result_json(const alc_result& r) {
    json out{{"value", r.value},
             {"error_bound", r.error_bound},
             {"method", r.method},
             {"terms", r.terms}};
    if (std::string(r.method) == "mc") {
        out["paths"] = r.terms;
        out["exited_fraction"] = r.exited_fraction;
    }
    return out;
}

int cmd_survival(const Args& a) {
    require_x(a);
    if (!a.t.has_value() && !a.tgrid.has_value())
        die(2, "provide --t or --t-grid");
    if (a.t.has_value() && a.tgrid.has_value())
        die(2, "--t and --t-grid are mutually exclusive");
    const bool chamber = a.type == "chamber";
    if (chamber && a.method != "formula")
        die(3, "the order chamber is served by the closed form only");

    alc_datum* d = chamber ? nullptr : make_handle_or_die(a);
    const alc_mc_config mc = resolve_mc(a);

    json query{{"command", "survival"},
               {"type", a.type},
               {"k", a.k},
               {"x", a.x},
               {"method", a.method}};
    if (a.tol > 0) query["tol"] = a.tol;
    if (a.method == "mc") query["mc"] = mc_echo(mc);
    if (a.t.has_value())
        query["t"] = *a.t;
    else
        query["t_grid"] = json{{"start", a.tgrid->start},
                               {"stop", a.tgrid->stop},
                               {"count", a.tgrid->count},
                               {"scale", a.tgrid->log ? "log" : "linear"}};

    auto eval = [&](double t, alc_result* r) {
        if (chamber)
            return alc_chamber_survival(static_cast<int>(a.x.size()), a.x.data(),
                                        t, a.tol, r);
        if (a.method == "formula")
            return alc_survival(d, a.x.data(), static_cast<int>(a.x.size()), t,
                                a.tol, r);
        if (a.method == "image-sum")
            return alc_survival_images(d, a.x.data(),
                                       static_cast<int>(a.x.size()), t, a.tol, r);
        if (a.method == "mc")
            return alc_survival_mc(d, a.x.data(), static_cast<int>(a.x.size()), t,
                                   &mc, r);
        die(2, "--method must be formula, image-sum, or mc");
    };

    Timer timer;
    json out{{"schema", 1}, {"query", query}};
    alc_result r{};
    if (a.t.has_value()) {
        const alc_status s = eval(*a.t, &r);
        if (s != ALC_OK) {
            alc_datum_free(d);
            die(to_exit(s), alc_last_error());
        }
        out.update(result_json(r));
    } else {
        json rows = json::array();
        std::string method;
        for (double t : a.tgrid->points()) {
            const alc_status s = eval(t, &r);
            if (s != ALC_OK) {
                alc_datum_free(d);
                die(to_exit(s), alc_last_error());
            }
            method = r.method;
            json row{{"t", t}, {"value", r.value}, {"error_bound", r.error_bound}};
            if (method == "mc") row["exited_fraction"] = r.exited_fraction;
            rows.push_back(std::move(row));
        }
        out["values"] = std::move(rows);
        out["method"] = method;
    }
    out["wall_time_ms"] = timer.ms();
    alc_datum_free(d);
    emit(out, a);
    return 0;
}

int cmd_expected(const Args& a) {
    require_x(a);
    if (a.type == "chamber")
        die(3, "expected exit time is not served for the unbounded chamber");
    if (a.method == "image-sum")
        die(3, "expected exit time has no image-sum method");
    alc_datum* d = make_handle_or_die(a);
    const alc_mc_config mc = resolve_mc(a);

    json query{{"command", "expected"},
               {"type", a.type},
               {"k", a.k},
               {"x", a.x},
               {"method", a.method}};
    if (a.tol > 0) query["tol"] = a.tol;
    if (a.method == "mc") query["mc"] = mc_echo(mc);

    Timer timer;
    alc_result r{};
    const alc_status s =
        a.method == "mc"
            ? alc_expected_exit_mc(d, a.x.data(), static_cast<int>(a.x.size()),
                                   &mc, &r)
            : alc_expected_exit(d, a.x.data(), static_cast<int>(a.x.size()),
                                a.tol, &r);
    if (s != ALC_OK) {
        alc_datum_free(d);
        die(to_exit(s), alc_last_error());
    }
    json out{{"schema", 1}, {"query", query}};
    out.update(result_json(r));
    out["wall_time_ms"] = timer.ms();
    alc_datum_free(d);
    emit(out, a);
    return 0;
}

int cmd_eigen(const Args& a) {
    require_x(a);
    if (a.p.empty()) die(2, "--p is required");
    if (a.output == "csv") die(2, "eigen queries emit JSON only");
    alc_datum* d = make_handle_or_die(a);

    json query{{"command", "eigen"}, {"type", a.type},       {"k", a.k},
               {"p", a.p},           {"x", a.x},             {"neumann", a.neumann}};
    Timer timer;
    double re = 0, im = 0, lam = 0;
    int is_real = 0;
    const alc_status s =
        alc_eigen(d, a.p.data(), a.x.data(), static_cast<int>(a.x.size()),
                  a.neumann ? 1 : 0, &re, &im, &lam, &is_real);
    if (s != ALC_OK) {
        alc_datum_free(d);
        die(to_exit(s), alc_last_error());
    }
    const json out{{"schema", 1},
                   {"query", query},
                   {"value_re", re},
                   {"value_im", im},
                   {"eigenvalue", lam},
                   {"is_real", is_real != 0},
                   {"method", a.neumann ? "orbit-sum" : "alternating-orbit-sum"},
                   {"wall_time_ms", timer.ms()}};
    alc_datum_free(d);
    std::printf("%s\n", out.dump(2).c_str());
    return 0;
}

int cmd_debruijn(const Args& a, const json& inline_cfg) {
    if (a.output == "csv") die(2, "debruijn queries emit JSON only");
    json battery;
    if (!a.battery_path.empty())
        battery = load_json_file(a.battery_path);
    else if (inline_cfg.contains("battery"))
        battery = inline_cfg["battery"];
    else
        die(2, "provide --battery file.json (or a config with a battery object)");

    std::vector<alc_debruijn_factor> fs;
    double tol = a.tol;
    int alcove_points = 0;
    try {
        for (const json& f : battery.at("factors")) {
            alc_debruijn_factor af{};
            const std::string kind = f.at("kind");
            if (kind == "gaussian") {
                af.kind = 0;
                af.p1 = f.at("mean");
                af.p2 = f.at("sigma");
            } else if (kind == "indicator") {
                af.kind = 1;
                af.p1 = f.at("lo");
                af.p2 = f.at("hi");
            } else {
                die(2, "factor kind must be gaussian or indicator");
            }
            af.amp = f.value("amp", 1.0);
            fs.push_back(af);
        }
        if (tol <= 0) tol = battery.value("tol", 0.0);
        alcove_points = battery.value("alcove_points", 0);
    } catch (const std::exception& e) {
        die(2, std::string("battery: ") + e.what());
    }

    json factors_echo = json::array();
    for (const alc_debruijn_factor& f : fs) {
        json jf{{"kind", f.kind == 0 ? "gaussian" : "indicator"}, {"amp", f.amp}};
        if (f.kind == 0) {
            jf["mean"] = f.p1;
            jf["sigma"] = f.p2;
        } else {
            jf["lo"] = f.p1;
            jf["hi"] = f.p2;
        }
        factors_echo.push_back(std::move(jf));
    }
    json query{{"command", "debruijn"},
               {"battery",
                json{{"factors", factors_echo},
                     {"tol", tol > 0 ? tol : 1e-7},
                     {"alcove_points", alcove_points != 0 ? alcove_points : 16}}}};

    Timer timer;
    alc_debruijn_result r{};
    const alc_status s = alc_debruijn(fs.data(), static_cast<int>(fs.size()), tol,
                                      alcove_points, &r);
    if (s != ALC_OK) die(to_exit(s), alc_last_error());
    const json out{{"schema", 1},
                   {"query", query},
                   {"lhs", r.lhs},
                   {"rhs", r.rhs},
                   {"abs_diff", std::abs(r.lhs - r.rhs)},
                   {"lhs_bound", r.lhs_bound},
                   {"terms", r.terms},
                   {"method", "cylinder-vs-pfaffian"},
                   {"wall_time_ms", timer.ms()}};
    std::printf("%s\n", out.dump(2).c_str());
    return 0;
}

int cmd_validate(const Args& a) {
    if (a.output == "csv") die(2, "validate emits JSON only");
    Timer timer;
    char* report = nullptr;
    const alc_status s = alc_validate(a.suite.c_str(), &report);
    if (report == nullptr) die(to_exit(s), alc_last_error());

    json checks = json::array();
    int passed = 0, total = 0;
    std::string text(report);
    alc_string_free(report);
    size_t pos = 0;
    while (pos < text.size()) {
        const size_t nl = text.find('\n', pos);
        const std::string line = text.substr(pos, nl - pos);
        pos = (nl == std::string::npos) ? text.size() : nl + 1;
        const bool is_pass = line.rfind("PASS ", 0) == 0;
        const bool is_fail = line.rfind("FAIL ", 0) == 0;
        if (!is_pass && !is_fail) continue; // summary line
        const size_t colon = line.find(": ");
        json row{{"name", line.substr(5, colon - 5)}, {"pass", is_pass}};
        if (colon != std::string::npos) row["detail"] = line.substr(colon + 2);
        checks.push_back(std::move(row));
        ++total;
        if (is_pass) ++passed;
    }
    const json out{{"schema", 1},
                   {"query", json{{"command", "validate"}, {"suite", a.suite}}},
                   {"checks", checks},
                   {"passed", passed},
                   {"total", total},
                   {"wall_time_ms", timer.ms()}};
    std::printf("%s\n", out.dump(2).c_str());
    return to_exit(s);
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"First-exit times of Brownian motion from reflection-group "
                 "alcoves: closed forms, oracles, and simulation"};
    app.require_subcommand(1);
    app.set_version_flag("--version", alc_version());

    Args a;
    auto add_common = [&](CLI::App* sub, bool with_t) {
        sub->add_option("--type", a.type,
                        "family: A, B, C, D, G2, or chamber (order chamber)");
        sub->add_option("--k", a.k, "coordinate count / rank");
        sub->add_option("--x", a.x, "start point, comma-separated")
            ->delimiter(',');
        sub->add_option("--method", a.method, "formula | image-sum | mc")
            ->check(CLI::IsMember({"formula", "image-sum", "mc"}));
        sub->add_option("--tol", a.tol, "tolerance for deterministic methods");
        sub->add_option("--output", a.output, "json | csv")
            ->check(CLI::IsMember({"json", "csv"}));
        sub->add_option("--config", a.config_path,
                        "JSON file with defaults (flags win)");
        sub->add_option("--paths", a.paths, "simulation paths");
        sub->add_option("--dt", a.dt, "simulation time step");
        sub->add_option("--horizon", a.horizon, "simulation horizon");
        sub->add_option("--workers", a.workers, "worker threads (0 = auto)");
        sub->add_option("--seed", a.seed, "RNG seed (or env ALCOVE_SEED)");
        if (with_t) {
            sub->add_option("--t", a.t, "time horizon");
            sub->add_option("--t-grid", a.tgrid_raw,
                            "sweep: start,stop,count[,log|linear]");
        }
    };

    CLI::App* survival = app.add_subcommand("survival", "P(first exit time > t)");
    add_common(survival, true);
    CLI::App* expected = app.add_subcommand("expected", "expected exit time");
    add_common(expected, false);
    CLI::App* eigen =
        app.add_subcommand("eigen", "alcove Laplacian eigenfunction at a weight");
    add_common(eigen, false);
    eigen->add_option("--p", a.p, "weight, comma-separated")->delimiter(',');
    eigen->add_flag("--neumann", a.neumann,
                    "plain orbit sum instead of the alternating one");
    CLI::App* debruijn = app.add_subcommand(
        "debruijn", "both sides of the alternating integral identity");
    add_common(debruijn, false);
    debruijn->add_option("--battery", a.battery_path,
                         "JSON battery description");
    CLI::App* validate =
        app.add_subcommand("validate", "run a named self-check suite");
    add_common(validate, false);
    validate->add_option("suite", a.suite,
                         "kernels|survival|expected|eigen|debruijn|mc|all");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        std::exit(app.exit(e));
    } catch (const CLI::CallForVersion& e) {
        std::exit(app.exit(e));
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        std::exit(2);
    }

    CLI::App* sub = app.get_subcommands().front();
    json cfg;
    if (!a.config_path.empty()) {
        cfg = load_json_file(a.config_path);
        overlay_config(sub, cfg, a);
    }
    if (!a.tgrid_raw.empty()) a.tgrid = parse_tgrid(a.tgrid_raw);
    if (a.k == 0) // infer the family parameter from the coordinate count
        a.k = (a.type == "G2" || a.type == "g2") ? 2
                                                 : static_cast<int>(a.x.size());

    if (sub == survival) return cmd_survival(a);
    if (sub == expected) return cmd_expected(a);
    if (sub == eigen) return cmd_eigen(a);
    if (sub == debruijn) return cmd_debruijn(a, cfg);
    return cmd_validate(a);
}
