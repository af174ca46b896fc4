// Copyright 2026 The dicke-slocc Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "cli.hpp"

#include <filesystem>
#include <fstream>
#include <optional>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "dicke/errors.hpp"
#include "dicke/invariants.hpp"
#include "dicke/monogamy.hpp"
#include "dicke/report_json.hpp"
#include "dicke/slocc.hpp"
#include "dicke/state.hpp"
#include "dicke/state_io.hpp"

namespace dicke::cli {

namespace {

using nlohmann::json;

struct CommandConfig {
    std::string command;
    std::vector<int> dicke;
    std::optional<int> ghz;
    std::optional<int> w;
    std::optional<int> n;
    std::optional<int> l;
    std::optional<int> n_min;
    std::optional<int> n_max;
    std::string in;
    std::string out;
    std::uint64_t seed = 0;
    int trials = 100;
    std::string format = "json";
    int max_n = kDefaultMaxQubits;
    bool exact = false;
    bool sparse = false;
};

json echo(const CommandConfig &c) {
    const auto opt = [](const std::optional<int> &v) { return v ? json(*v) : json(nullptr); };
    return json{{"command", c.command},
                {"dicke", c.dicke.empty() ? json(nullptr) : json(c.dicke)},
                {"ghz", opt(c.ghz)},
                {"w", opt(c.w)},
                {"n", opt(c.n)},
                {"l", opt(c.l)},
                {"n_min", opt(c.n_min)},
                {"n_max", opt(c.n_max)},
                {"in", c.in.empty() ? json(nullptr) : json(c.in)},
                {"out", c.out.empty() ? json(nullptr) : json(c.out)},
                {"seed", c.seed},
                {"trials", c.trials},
                {"format", c.format},
                {"max_n", c.max_n},
                {"exact", c.exact},
                {"sparse", c.sparse}};
}

json tolerances() {
    ClassifyOptions classify_defaults;
    return json{{"norm", kNormTolerance},
                {"rank", kRankTolerance},
                {"zero", kZeroTolerance},
                {"classify_guard", classify_defaults.guard},
                {"covariance", kCovarianceTolerance},
                {"invertibility_floor", kInvertibilityFloor},
                {"chi_routes", kChiRouteTolerance}};
}

json envelope(const CommandConfig &c, json report) {
    report["tool"] = kToolName;
    report["version"] = kToolVersion;
    report["config"] = echo(c);
    report["tolerances"] = tolerances();
    return report;
}

// A reference state picked by flags, or a state file.
struct Selection {
    std::string subject;
    enum class Kind { dicke, ghz, w, file } kind;
    int n = 0;
    int l = 0;
    bool via_n_l = false;
};

Selection select_state(const CommandConfig &c) {
    int chosen = 0;
    Selection s{};
    if (!c.dicke.empty()) {
        ++chosen;
        if (c.dicke.size() != 2) throw ValidationError("--dicke expects two integers N L");
        s = {"", Selection::Kind::dicke, c.dicke[0], c.dicke[1]};
    }
    if (c.ghz) {
        ++chosen;
        s = {"", Selection::Kind::ghz, *c.ghz, 0};
    }
    if (c.w) {
        ++chosen;
        s = {"", Selection::Kind::w, *c.w, 0};
    }
    if (!c.in.empty()) {
        ++chosen;
        s = {"file:" + c.in, Selection::Kind::file, 0, 0};
    }
    if (chosen == 0 && c.n && c.l) {
        ++chosen;
        s = {"", Selection::Kind::dicke, *c.n, *c.l, true};
    }
    if (chosen != 1) throw ValidationError("select exactly one state: --dicke N L, --ghz N, --w N, --in FILE");
    switch (s.kind) {
        case Selection::Kind::dicke: s.subject = "dicke(" + std::to_string(s.n) + "," + std::to_string(s.l) + ")"; break;
        case Selection::Kind::ghz: s.subject = "ghz(" + std::to_string(s.n) + ")"; break;
        case Selection::Kind::w: s.subject = "w(" + std::to_string(s.n) + ")"; break;
        case Selection::Kind::file: break;
    }
    return s;
}

StateVector build_state(const Selection &s, const CommandConfig &c) {
    switch (s.kind) {
        case Selection::Kind::dicke: return dicke_state(DickeSpec(s.n, s.l, c.max_n));
        case Selection::Kind::ghz: return ghz_state(s.n, c.max_n);
        case Selection::Kind::w: return w_state(s.n, c.max_n);
        case Selection::Kind::file: return load_state(std::filesystem::path(c.in), c.max_n);
    }
    throw ValidationError("unreachable state selection");
}

IntegerState build_exact_state(const Selection &s, const CommandConfig &c) {
    switch (s.kind) {
        case Selection::Kind::dicke: return exact_dicke_state(DickeSpec(s.n, s.l, c.max_n));
        case Selection::Kind::ghz: return exact_ghz_state(s.n, c.max_n);
        case Selection::Kind::w: return exact_w_state(s.n, c.max_n);
        case Selection::Kind::file: break;
    }
    throw ValidationError("--exact is only available for --dicke, --ghz and --w");
}

void require_json(const CommandConfig &c) {
    if (c.format != "json") throw ValidationError("--format csv is only available for monogamy and sweep");
}

void write(std::ostream &out, const json &j) { out << j.dump(2) << '\n'; }

int run_state(const CommandConfig &c, std::ostream &out) {
    require_json(c);
    const Selection sel = select_state(c);
    const StateVector s = build_state(sel, c);
    const StateFormat fmt = c.sparse ? StateFormat::sparse : StateFormat::dense;
    if (c.out.empty()) {
        store_state(s, out, fmt);
        return kOk;
    }
    store_state(s, std::filesystem::path(c.out), fmt);
    write(out, envelope(c, json{{"state", sel.subject},
                                {"n", s.num_qubits()},
                                {"written", c.out},
                                {"format", c.sparse ? "sparse" : "dense"},
                                {"norm_squared", s.norm_squared()}}));
    return kOk;
}

int run_invariants(const CommandConfig &c, std::ostream &out) {
    require_json(c);
    const Selection sel = select_state(c);
    const InvariantReport r =
        c.exact ? invariant_report(build_exact_state(sel, c)) : invariant_report(build_state(sel, c));
    json j = r;
    j["state"] = sel.subject;
    if (c.command == "dcrit" && c.l && !sel.via_n_l) {
        const auto it = r.d_values.find(*c.l);
        if (it == r.d_values.end()) {
            throw ValidationError("--l " + std::to_string(*c.l) + " outside [2, n-2]");
        }
        j["selected"] = {{"l", *c.l},
                         {"d", json::array({it->second.real(), it->second.imag()})},
                         {"zero", r.zero_flags.at("d" + std::to_string(*c.l))}};
    }
    write(out, envelope(c, std::move(j)));
    return kOk;
}

int run_classify(const CommandConfig &c, std::ostream &out) {
    require_json(c);
    const Selection sel = select_state(c);
    const Verdict v = classify(build_state(sel, c), sel.subject);
    write(out, envelope(c, json{{"verdict", v}}));
    return kOk;
}

int run_orbit(const CommandConfig &c, std::ostream &out) {
    require_json(c);
    const Selection sel = select_state(c);
    const OrbitReport r = run_orbit_campaign(build_state(sel, c), sel.subject, c.trials, c.seed);
    write(out, envelope(c, r));
    return r.passed ? kOk : kNumerical;
}

int run_monogamy(const CommandConfig &c, std::ostream &out) {
    if (!c.n || !c.l) throw ValidationError("monogamy needs --n and --l");
    const bool numeric = *c.n <= std::min(c.max_n, kDefaultMaxQubits);
    MonogamySweep single;
    single.n_min = single.n_max = *c.n;
    single.rows.push_back(monogamy_report(*c.n, *c.l, numeric));
    if (c.format == "csv") {
        out << to_csv(single);
    } else {
        write(out, envelope(c, single.rows.front()));
    }
    return kOk;
}

int run_sweep(const CommandConfig &c, std::ostream &out) {
    const int n_max = c.n_max.value_or(c.n.value_or(12));
    const int n_min = c.n_min.value_or(2);
    const int numeric_cap = std::min(c.max_n, kDefaultNumericCap);
    const MonogamySweep sweep = monogamy_sweep(n_min, n_max, numeric_cap);
    if (c.format == "csv") {
        out << to_csv(sweep);
    } else {
        write(out, envelope(c, sweep));
    }
    return sweep.all_claims_hold() ? kOk : kNumerical;
}

int run_conjecture(const CommandConfig &c, std::ostream &out) {
    require_json(c);
    if (!c.n) throw ValidationError("conjecture needs --n");
    write(out, envelope(c, discriminant_cross_table(*c.n, c.max_n)));
    return kOk;
}

void add_state_options(CLI::App *sub, CommandConfig &c) {
    sub->add_option("--dicke", c.dicke, "Dicke state |L,N>")->expected(2)->type_name("N L");
    sub->add_option("--ghz", c.ghz, "GHZ state on N qubits");
    sub->add_option("--w", c.w, "W state on N qubits");
    sub->add_option("--in", c.in, "state file (dense or sparse JSON)");
    sub->add_option("--n", c.n, "qubit count (with --l: Dicke state)");
    sub->add_option("--l", c.l, "excitation count");
}

void add_common_options(CLI::App *sub, CommandConfig &c) {
    sub->add_option("--format", c.format, "output format")->check(CLI::IsMember({"json", "csv"}));
    sub->add_option("--max-n", c.max_n, "qubit cap for dense states")->check(CLI::Range(2, 62));
}

void error_message(std::ostream &err, const char *kind, const std::string &message) {
    err << json{{"error", {{"kind", kind}, {"message", message}}}}.dump() << '\n';
}

}  // namespace

int run(const std::vector<std::string> &args, std::ostream &out, std::ostream &err) {
    CommandConfig cfg;
    CLI::App app{"Dicke, GHZ and W states: SLOCC invariants, classification and monogamy", kToolName};
    app.require_subcommand(1, 1);
    app.set_version_flag("--version", kToolVersion);

    struct Entry {
        const char *name;
        const char *help;
        int (*fn)(const CommandConfig &, std::ostream &);
    };
    const Entry entries[] = {
        {"state", "write a state file", run_state},
        {"tau", "tau and D^(l) invariant report", run_invariants},
        {"dcrit", "D^(l) discriminants (--l selects one)", run_invariants},
        {"classify", "one-sided SLOCC verdict against GHZ, W and |n/2,n>", run_classify},
        {"orbit", "tau covariance campaign over random invertible local operators", run_orbit},
        {"monogamy", "concurrences and monogamy gap for |l,n>", run_monogamy},
        {"sweep", "monogamy table over a range of n", run_sweep},
        {"conjecture", "D^(k)(|l,n>) cross table", run_conjecture},
    };
    std::vector<std::pair<CLI::App *, const Entry *>> subs;
    for (const Entry &e : entries) {
        CLI::App *sub = app.add_subcommand(e.name, e.help);
        add_common_options(sub, cfg);
        subs.emplace_back(sub, &e);
    }
    for (auto &[sub, e] : subs) {
        const std::string name = e->name;
        if (name == "monogamy" || name == "conjecture") {
            sub->add_option("--n", cfg.n, "qubit count");
            if (name == "monogamy") sub->add_option("--l", cfg.l, "excitation count");
        } else if (name == "sweep") {
            sub->add_option("--n", cfg.n, "largest n (same as --n-max)");
            sub->add_option("--n-min", cfg.n_min, "smallest n (default 2)");
            sub->add_option("--n-max", cfg.n_max, "largest n (default 12)");
        } else {
            add_state_options(sub, cfg);
        }
        if (name == "state") {
            sub->add_option("--out", cfg.out, "output path (stdout if omitted)");
            sub->add_flag("--sparse", cfg.sparse, "write the sparse format");
        }
        if (name == "tau" || name == "dcrit") sub->add_flag("--exact", cfg.exact, "exact rational arithmetic");
        if (name == "orbit") {
            sub->add_option("--seed", cfg.seed, "PRNG seed");
            sub->add_option("--trials", cfg.trials, "number of random chains")->check(CLI::PositiveNumber);
        }
    }

    std::vector<std::string> argv_storage;
    argv_storage.reserve(args.size() + 1);
    argv_storage.emplace_back(kToolName);
    argv_storage.insert(argv_storage.end(), args.begin(), args.end());
    std::vector<char *> argv;
    for (auto &a : argv_storage) argv.push_back(a.data());

    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp &e) {
        return app.exit(e, out, err);
    } catch (const CLI::CallForAllHelp &e) {
        return app.exit(e, out, err);
    } catch (const CLI::CallForVersion &e) {
        return app.exit(e, out, err);
    } catch (const CLI::ParseError &e) {
        error_message(err, "validation", e.what());
        return kValidation;
    }

    try {
        for (auto &[sub, e] : subs) {
            if (!sub->parsed()) continue;
            cfg.command = e->name;
            return e->fn(cfg, out);
        }
        error_message(err, "validation", "no command given");
        return kValidation;
    } catch (const ValidationError &e) {
        error_message(err, "validation", e.what());
        return kValidation;
    } catch (const NumericalError &e) {
        error_message(err, "numerical", e.what());
        return kNumerical;
    } catch (const std::bad_alloc &) {
        error_message(err, "numerical", "out of memory allocating the state vector");
        return kNumerical;
    } catch (const std::exception &e) {
        error_message(err, "validation", e.what());
        return kValidation;
    }
}

}  // namespace dicke::cli
