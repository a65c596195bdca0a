/*
   Copyright 2026 The sextic-strata Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

// sextic-strata: classify, sample and inspect presentations of sheaves in M(6,1).

#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <variant>

#include <CLI11.hpp>

#include "sextic/sextic.hpp"

namespace {

using sextic::Json;

enum Exit { ok = 0, malformed = 1, contract = 2, budget = 3 };

struct Output {
    bool human = false;
    void emit(const Json& j, const std::string& text) const {
        if (human)
            std::cout << text;
        else
            std::cout << j.dump(2) << "\n";
    }
};

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw sextic::ParseError("cannot open '" + path + "'");
    std::ostringstream s;
    s << in.rdbuf();
    return s.str();
}

sextic::AnyPresentation load(const std::string& path) { return sextic::parse_presentation(read_file(path)); }

std::string profile_text(const sextic::ClassificationReport& r) {
    std::ostringstream s;
    s << "label:      " << (r.label ? sextic::stratum_name(*r.label) : "none") << "\n";
    if (r.profile) s << "profile:    " << r.profile->str() << "\n";
    if (r.hilbert) s << "hilbert:    " << r.hilbert->r.str() << "m + " << r.hilbert->chi.str() << "\n";
    s << "det degree: " << r.det_degree << "\n";
    for (const auto& v : r.violations) s << "violation:  " << v << "\n";
    return s.str();
}

int cmd_classify(const Output& out, const std::string& path) {
    const auto p = load(path);
    const auto report = std::visit([](const auto& x) { return sextic::classification_report(x); }, p);
    out.emit(sextic::classification_to_json(report), profile_text(report));
    return report.label && report.violations.empty() ? ok : contract;
}

int cmd_sample(const std::string& stratum, const std::string& field, std::uint64_t seed,
               std::size_t max_rejects, bool allow_rational, const std::string& path) {
    sextic::SampleRequest req;
    req.label = sextic::parse_stratum(stratum);
    req.seed = seed;
    req.max_rejects = max_rejects;
    req.allow_rational = allow_rational;
    const Json j = std::visit(
        [&](const auto& f) {
            const auto s = sextic::sample(f, req);
            return sextic::presentation_to_json(s.presentation, sextic::metadata_to_json(s.metadata));
        },
        sextic::parse_field(field));
    if (!path.empty()) {
        std::ofstream o(path, std::ios::binary);
        if (!o) throw sextic::ParseError("cannot write '" + path + "'");
        o << sextic::format_presentation(j);
        return ok;
    }
    std::cout << sextic::format_presentation(j);
    return ok;
}

int cmd_dual(const std::string& path) {
    const auto p = load(path);
    const Json j = std::visit([](const auto& x) { return sextic::presentation_to_json(sextic::dual(x)); }, p);
    std::cout << sextic::format_presentation(j);
    return ok;
}

int cmd_det(const Output& out, const std::string& path) {
    const auto p = load(path);
    return std::visit(
        [&](const auto& x) {
            if (!x.is_square()) throw sextic::ShapeError("det: presentation is not square");
            if (auto v = sextic::validate_grid(x); !v.empty()) throw sextic::ShapeError("det: " + v.front());
            const auto d = sextic::fitting_determinant(x);
            Json j = sextic::report_header("det");
            j["degree"] = d.degree();
            j["form"] = d.to_string();
            out.emit(j, d.to_string() + "\n");
            return static_cast<int>(ok);
        },
        p);
}

int cmd_cohomology(const Output& out, const std::string& path, int tmin, int tmax) {
    if (tmin > tmax) throw sextic::ParseError("--tmin must not exceed --tmax");
    const auto p = load(path);
    const auto rows = std::visit([&](const auto& x) { return sextic::cohomology_table(x, tmin, tmax); }, p);
    std::ostringstream s;
    s << "t\th0\th1\tchi\n";
    for (const auto& r : rows) s << r.t << "\t" << r.h0 << "\t" << r.h1 << "\t" << r.chi.str() << "\n";
    out.emit(sextic::cohomology_to_json(rows), s.str());
    return ok;
}

sextic::KroneckerMode parse_mode(const std::string& m) {
    if (m == "exact") return sextic::KroneckerMode::exact_smallfield;
    if (m == "pruned") return sextic::KroneckerMode::exact_pruned;
    if (m == "randomized") return sextic::KroneckerMode::randomized;
    throw sextic::ParseError("unknown mode '" + m + "'");
}

/// Kronecker module of a file: the linear block of an X0 presentation, otherwise the whole (linear) matrix.
template <class K>
sextic::KroneckerModule<K> module_of(const sextic::Presentation<K>& p) {
    const auto s0 = sextic::stratum_shape(sextic::Stratum::X0);
    if (p.source() == s0.source && p.target() == s0.target)
        return sextic::KroneckerModule<K>(sextic::x0_linear_block(p));
    return sextic::KroneckerModule<K>(p.matrix());
}

int cmd_kron_check(const Output& out, const std::string& path, const std::string& mode_text,
                   const sextic::KroneckerOptions& opt) {
    const auto p = load(path);
    return std::visit(
        [&](const auto& x) {
            const auto r = sextic::is_semistable(module_of(x), parse_mode(mode_text), opt);
            std::ostringstream s;
            s << "status: " << sextic::stability_name(r.status) << " (" << sextic::mode_name(r.mode) << ", "
              << r.checked << " checked)\n";
            if (r.witness)
                s << "witness: dim S = " << r.witness->dimS << ", dim T = " << r.witness->dimT << "\n";
            if (!r.note.empty()) s << "note: " << r.note << "\n";
            out.emit(sextic::stability_to_json(r), s.str());
            return static_cast<int>(r.status == sextic::Stability::unstable ? contract : ok);
        },
        p);
}

int cmd_kron_window(const Output& out, long long grid) {
    const auto w = sextic::polarization_window_42(grid);
    const Json j = sextic::window_to_json(w);
    std::ostringstream s;
    auto line = [&](const char* name, const Json& r) {
        s << name << ": ";
        if (r["count"] == 0)
            s << "empty\n";
        else
            s << r["first"].get<std::string>() << " .. " << r["last"].get<std::string>() << " (" << r["count"]
              << " points)\n";
    };
    line("six inequalities", j["six_inequalities"]);
    line("augmented", j["augmented"]);
    line("mu2", j["mu2"]);
    out.emit(j, s.str());
    return ok;
}

int cmd_verify(const Output& out, const std::string& suite, std::uint64_t seed) {
    sextic::VerifyOptions opt;
    opt.seed = seed;
    const auto results = sextic::run_suite(suite, opt);
    Json j = sextic::report_header("verify");
    j["suite"] = suite;
    j["seed"] = seed;
    Json arr = Json::array();
    bool all = true;
    std::ostringstream s;
    for (const auto& r : results) {
        arr.push_back({{"criterion", r.id}, {"name", r.name}, {"passed", r.passed}, {"details", r.details}});
        s << "[" << (r.passed ? "PASS" : "FAIL") << "] " << r.id << " " << r.name << "\n";
        for (const auto& d : r.details) s << "    " << d << "\n";
        all = all && r.passed;
    }
    j["criteria"] = std::move(arr);
    j["passed"] = all;
    out.emit(j, s.str());
    return all ? ok : contract;
}

int cmd_dims(const Output& out) {
    const auto rows = sextic::stratum_dimensions();
    std::ostringstream s;
    s << "label\tcodim\tbase\tfibre\tdim\n";
    for (const auto& r : rows)
        s << sextic::stratum_name(r.label) << "\t" << r.codim << "\t" << r.base_dim << "\t" << r.fibre_dim << "\t"
          << r.dim() << "\n";
    out.emit(sextic::dimensions_to_json(rows), s.str());
    return ok;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact classification of presentations of sheaves in M(6,1) on the projective plane"};
    app.require_subcommand(1);
    app.fallthrough();
    Output out;
    app.add_flag("--human", out.human, "human-readable output instead of JSON");

    std::string file, stratum, field = "p:101", mode = "pruned", suite = "all", out_path;
    std::uint64_t seed = 0;
    std::size_t max_rejects = 1000;
    bool allow_rational = false;
    int tmin = -3, tmax = 3;
    long long grid = 700;
    sextic::KroneckerOptions kopt;

    auto* classify = app.add_subcommand("classify", "classify a presentation file by its cohomology");
    classify->add_option("file", file, "presentation file")->required();

    auto* sample = app.add_subcommand("sample", "draw a random presentation of a stratum");
    sample->add_option("--stratum", stratum, "X0..X5")->required();
    sample->add_option("--field", field, "q or p:<prime>");
    sample->add_option("--seed", seed, "64-bit seed");
    sample->add_option("--max-rejects", max_rejects, "rejection budget")->check(CLI::PositiveNumber);
    sample->add_flag("--allow-rational", allow_rational, "permit sampling over Q");
    sample->add_option("--out", out_path, "write the presentation here instead of stdout");

    auto* dual = app.add_subcommand("dual", "dual presentation (twists t -> -2 - t)");
    dual->add_option("file", file)->required();

    auto* det = app.add_subcommand("det", "Fitting determinant");
    det->add_option("file", file)->required();

    auto* coh = app.add_subcommand("cohomology", "table of h0, h1 and chi of the twists");
    coh->add_option("file", file)->required();
    coh->add_option("--tmin", tmin);
    coh->add_option("--tmax", tmax);

    auto* kron = app.add_subcommand("kron", "Kronecker module tools");
    kron->require_subcommand(1);
    kron->fallthrough();
    auto* check = kron->add_subcommand("check", "semistability of a linear matrix or an X0 linear block");
    check->add_option("file", file)->required();
    check->add_option("--mode", mode, "exact (full enumeration), pruned (default) or randomized")
        ->check(CLI::IsMember({"exact", "pruned", "randomized"}));
    check->add_option("--budget", kopt.budget, "subspace budget for exact mode (default 10^7)");
    check->add_option("--trials", kopt.trials, "trials for randomized mode");
    check->add_option("--seed", kopt.seed, "seed for randomized mode");
    auto* window = kron->add_subcommand("window", "sweep the polarization windows");
    window->add_option("--grid", grid, "denominator of the lambda2 grid (at least 100)");

    auto* verify = app.add_subcommand("verify", "run acceptance suites");
    verify->add_option("--suite", suite)->check(CLI::IsMember({"table", "duality", "oracle", "dims", "x5", "negative", "all"}));
    verify->add_option("--seed", seed);

    app.add_subcommand("dims", "stratum dimension table");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? ok : malformed;
    }

    try {
        if (*classify) return cmd_classify(out, file);
        if (*sample) return cmd_sample(stratum, field, seed, max_rejects, allow_rational, out_path);
        if (*dual) return cmd_dual(file);
        if (*det) return cmd_det(out, file);
        if (*coh) return cmd_cohomology(out, file, tmin, tmax);
        if (*check) return cmd_kron_check(out, file, mode, kopt);
        if (*window) return cmd_kron_window(out, grid);
        if (*verify) return cmd_verify(out, suite, seed == 0 ? 1 : seed);
        return cmd_dims(out);
    } catch (const sextic::ProfileNotInTable& e) {
        std::cerr << e.what() << "\n";
        return contract;
    } catch (const sextic::ParseError& e) {
        std::cout << sextic::error_to_json("malformed_input", e.what()).dump(2) << "\n";
        return malformed;
    } catch (const sextic::BudgetExceeded& e) {
        std::cout << sextic::error_to_json("budget_exceeded", e.what()).dump(2) << "\n";
        return budget;
    } catch (const sextic::Error& e) {
        std::cout << sextic::error_to_json("contract_violation", e.what()).dump(2) << "\n";
        return contract;
    } catch (const std::invalid_argument& e) {
        std::cout << sextic::error_to_json("malformed_input", e.what()).dump(2) << "\n";
        return malformed;
    }
}
