/*
   Copyright 2026 The srbkit Authors

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

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "srbkit/json_io.hpp"
#include "srbkit/verify.hpp"

namespace {

using namespace srbkit;

constexpr int kExitOk = 0;
constexpr int kExitCheckFailed = 1;
constexpr int kExitUsage = 2;
constexpr int kExitTheoremFalsified = 3;
constexpr int kExitUnknownVerdict = 4;

struct CommonOptions {
    std::string family = "A";
    int rank = 2;
    int k = 1;
    bool json = false;
    std::string out;
    std::optional<std::uint64_t> seed;
};

void add_common(CLI::App* cmd, CommonOptions& opt, bool with_k = true) {
    cmd->add_option("--family", opt.family, "Root system family (A, B, C, D, G)")->required();
    cmd->add_option("--rank", opt.rank, "Root system rank")->required();
    if (with_k) cmd->add_option("-k,--k", opt.k, "Number of translate levels");
    cmd->add_flag("--json", opt.json, "Emit JSON instead of text");
    cmd->add_option("--out", opt.out, "Write output to a file instead of stdout");
    cmd->add_option("--seed", opt.seed, "Seed for the freeness search");
}

int max_supported_k() {
    if (const char* env = std::getenv("SRBKIT_MAX_K")) {
        const int v = std::atoi(env);
        if (v >= 1) return v;
    }
    return 2;
}

RootSystem validated_root_system(const CommonOptions& opt, bool check_k) {
    if (opt.family.size() != 1) throw std::invalid_argument("family must be a single letter (A, B, C, D, G)");
    if (check_k && (opt.k < 1 || opt.k > max_supported_k()))
        throw std::invalid_argument("k = " + std::to_string(opt.k) + " is outside the supported range 1.." +
                                    std::to_string(max_supported_k()) + " (raise with SRBKIT_MAX_K)");
    return build_root_system(family_from_char(opt.family[0]), opt.rank);
}

FreenessOptions freeness_options(const CommonOptions& opt) {
    FreenessOptions fo;
    if (opt.seed) fo.seed = *opt.seed;
    if (const char* env = std::getenv("SRBKIT_MAX_DEGREE")) {
        const int v = std::atoi(env);
        if (v >= 1) fo.max_degree = v;
    }
    return fo;
}

void emit(const CommonOptions& opt, const std::string& text) {
    if (opt.out.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream f(opt.out);
    if (!f) throw std::invalid_argument("cannot open output file " + opt.out);
    f << text;
}

std::vector<int> parse_coords(const std::string& s, int rank) {
    std::vector<int> v;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ',')) {
        size_t pos = 0;
        const int value = std::stoi(item, &pos);
        if (pos != item.size()) throw std::invalid_argument("bad coordinate list '" + s + "'");
        v.push_back(value);
    }
    if (static_cast<int>(v.size()) != rank)
        throw std::invalid_argument("expected " + std::to_string(rank) + " coordinates in '" + s + "'");
    return v;
}

std::string root_system_text(const RootSystem& rs) {
    std::string s = rs.name() + ": " + std::to_string(rs.positive_count()) + " positive roots, h = " +
                    std::to_string(rs.coxeter_number()) + ", exponents (";
    for (size_t i = 0; i < rs.exponents().size(); ++i) {
        if (i) s += ",";
        s += std::to_string(rs.exponents()[i]);
    }
    s += ")\n";
    for (const auto& r : rs.positive_roots()) {
        s += "  " + root_form(r).to_text(false) + "\n";
    }
    return s;
}

std::vector<LinearForm> factor_candidates(const RootSystem& rs, int k) {
    std::vector<LinearForm> out;
    const int arity = rs.rank() + 1;
    for (int i = 0; i < arity; ++i) {
        LinearForm f;
        f.coefficients.assign(arity, Rational(0));
        f.coefficients[i] = 1;
        out.push_back(std::move(f));
    }
    for (const auto& f : cone(catalan_arrangement(rs, k)).forms)
        if (f.nonzero_count() > 1) out.push_back(f);
    return out;
}

std::string srb_text(const SrbResult& r) {
    const auto candidates = factor_candidates(r.rs, r.k);
    const int kh = r.k * r.rs.coxeter_number();
    std::string s = "SRB for " + r.rs.name() + ", k = " + std::to_string(r.k) + " (degree kh = " +
                    std::to_string(kh) + ")\n";
    auto render = [&](const std::string& label, const Derivation& d) {
        s += label + ":\n";
        for (int i = 0; i < d.arity; ++i) {
            const std::string var = (i == d.arity - 1) ? "z" : "x" + std::to_string(i + 1);
            s += "  theta(" + var + ") = " + factored_text(d.coefficients[i], candidates, true) + "\n";
        }
    };
    for (int i = 0; i < r.rs.rank(); ++i) render("phi+[" + std::to_string(i + 1) + "]", r.plus[i]);
    for (int i = 0; i < r.rs.rank(); ++i) render("phi-[" + std::to_string(i + 1) + "]", r.minus[i]);
    for (int i = 0; i < r.rs.rank(); ++i) render("hat(phi-)[" + std::to_string(i + 1) + "]", r.hat_minus[i]);
    render("eta", r.eta);
    s += "scalars:";
    for (const auto& c : r.scalars) s += " " + to_string(c);
    s += "\n";
    return s;
}

int cmd_roots(const CommonOptions& opt) {
    const RootSystem rs = validated_root_system(opt, false);
    emit(opt, opt.json ? to_json(rs).dump(2) + "\n" : root_system_text(rs));
    return kExitOk;
}

struct ArrOptions {
    bool catalan = false;
    bool make_cone = false;
    std::string gamma;
    std::string sign = "+";
};

int cmd_arr(const CommonOptions& opt, const ArrOptions& arr) {
    // k = 0 is meaningful for the Catalan family (the reflection
    // arrangement itself); everything else needs k >= 1.
    const int min_k = arr.catalan ? 0 : 1;
    if (opt.k < min_k || opt.k > max_supported_k())
        throw std::invalid_argument("k = " + std::to_string(opt.k) + " is outside the supported range " +
                                    std::to_string(min_k) + ".." + std::to_string(max_supported_k()) +
                                    " (raise with SRBKIT_MAX_K)");
    const RootSystem rs = validated_root_system(opt, false);
    if (!arr.gamma.empty() || arr.sign != "+") {
        std::set<int> gamma;
        if (!arr.gamma.empty()) {
            std::stringstream ss(arr.gamma);
            std::string item;
            while (std::getline(ss, item, ',')) gamma.insert(std::stoi(item));
        }
        if (arr.sign != "+" && arr.sign != "-") throw std::invalid_argument("--sign must be + or -");
        const CentralArrangement c = b_gamma(rs, opt.k, gamma, arr.sign[0]);
        emit(opt, opt.json ? to_json(c).dump(2) + "\n" : [&] {
            std::string s;
            for (const auto& f : c.forms) s += f.to_text(true) + "\n";
            return s;
        }());
        return kExitOk;
    }
    const AffineArrangement aff = arr.catalan ? catalan_arrangement(rs, opt.k) : shi_arrangement(rs, opt.k);
    if (arr.make_cone) {
        const CentralArrangement c = cone(aff);
        emit(opt, opt.json ? to_json(c).dump(2) + "\n" : [&] {
            std::string s;
            for (const auto& f : c.forms) s += f.to_text(true) + "\n";
            return s;
        }());
    } else {
        emit(opt, opt.json ? to_json(aff).dump(2) + "\n" : aff.to_text());
    }
    return kExitOk;
}

int cmd_srb(const CommonOptions& opt) {
    const RootSystem rs = validated_root_system(opt, true);
    const SrbResult r = compute_srb(rs, opt.k);
    emit(opt, opt.json ? to_json(r).dump(2) + "\n" : srb_text(r));
    return kExitOk;
}

int cmd_verify(const CommonOptions& opt, const std::vector<std::string>& suites_arg) {
    const RootSystem rs = validated_root_system(opt, true);
    const std::vector<std::string> known = {"characterization", "simplefree", "keuler",
                                            "reflections",      "exponents",  "ziegler"};
    std::vector<std::string> suites;
    for (const auto& s : suites_arg) {
        std::stringstream ss(s);
        std::string item;
        while (std::getline(ss, item, ',')) suites.push_back(item);
    }
    if (suites.empty()) suites.push_back("all");
    if (suites.size() == 1 && suites[0] == "all") suites = known;
    for (const auto& s : suites)
        if (std::find(known.begin(), known.end(), s) == known.end())
            throw std::invalid_argument("unknown suite '" + s + "'; known: characterization, simplefree, keuler, "
                                        "reflections, exponents, ziegler, all");

    const FreenessOptions fo = freeness_options(opt);
    std::optional<SrbResult> srb;
    auto srb_of = [&]() -> const SrbResult& {
        if (!srb) srb = compute_srb(rs, opt.k);
        return *srb;
    };

    std::vector<VerificationReport> reports;
    for (const auto& s : suites) {
        if (s == "characterization") reports.push_back(verify_characterization(srb_of(), &std::cerr));
        else if (s == "keuler") reports.push_back(verify_k_euler(srb_of(), &std::cerr));
        else if (s == "reflections") reports.push_back(verify_reflections(srb_of(), &std::cerr));
        else if (s == "simplefree") reports.push_back(verify_simplefree(rs, opt.k, fo, &std::cerr));
        else if (s == "exponents") reports.push_back(verify_exponents(rs, opt.k, default_gammas(rs.rank()), fo, &std::cerr));
        else if (s == "ziegler") reports.push_back(verify_ziegler(rs, opt.k, &std::cerr));
    }

    std::string text;
    Json all = Json::array();
    bool ok = true, unknown = false;
    for (const auto& r : reports) {
        text += r.to_text() + "\n";
        all.push_back(to_json(r));
        ok = ok && r.all_passed();
        unknown = unknown || r.any_unknown();
    }
    emit(opt, opt.json ? all.dump(2) + "\n" : text);
    if (unknown) return kExitUnknownVerdict;
    return ok ? kExitOk : kExitCheckFailed;
}

struct FreenessCliOptions {
    std::string add_root;
    std::string delete_root;
};

int cmd_freeness(const CommonOptions& opt, const FreenessCliOptions& fopt) {
    const RootSystem rs = validated_root_system(opt, true);
    if (!fopt.add_root.empty() && !fopt.delete_root.empty())
        throw std::invalid_argument("--add-root and --delete-root are mutually exclusive");
    const int kh = opt.k * rs.coxeter_number();
    CentralArrangement target = cone(shi_arrangement(rs, opt.k));
    std::vector<int> hyp;
    hyp.push_back(1);
    if (!fopt.add_root.empty()) {
        const auto coords = parse_coords(fopt.add_root, rs.rank());
        if (!rs.is_positive_root(coords)) throw std::invalid_argument("--add-root is not a positive root");
        target = target.adding(cone_form(coords, -opt.k, rs.rank() + 1));
        hyp.push_back(kh + 1);
        for (int i = 1; i < rs.rank(); ++i) hyp.push_back(kh);
    } else if (!fopt.delete_root.empty()) {
        const auto coords = parse_coords(fopt.delete_root, rs.rank());
        if (!rs.is_positive_root(coords)) throw std::invalid_argument("--delete-root is not a positive root");
        target = target.removing(cone_form(coords, opt.k, rs.rank() + 1));
        hyp.push_back(kh - 1);
        for (int i = 1; i < rs.rank(); ++i) hyp.push_back(kh);
    } else {
        for (int i = 0; i < rs.rank(); ++i) hyp.push_back(kh);
    }

    const FreenessVerdict v = decide_freeness(target, hyp, freeness_options(opt));
    if (opt.json) {
        emit(opt, to_json(v).dump(2) + "\n");
    } else {
        std::string s = to_string(v.status);
        if (v.status == Freeness::Free) {
            // exp0: the certified exponents with one Euler exponent removed.
            std::vector<int> exp0 = v.exponents;
            const auto one = std::find(exp0.begin(), exp0.end(), 1);
            if (one != exp0.end()) exp0.erase(one);
            s += ", exp0 = (";
            for (size_t i = 0; i < exp0.size(); ++i) {
                if (i) s += ",";
                s += std::to_string(exp0[i]);
            }
            s += ")";
        } else if (v.certificate_degree) {
            s += ", certificate degree " + std::to_string(*v.certificate_degree) + ": dimension " +
                 std::to_string(*v.computed_dimension) + ", hypothesized " +
                 std::to_string(*v.hypothesized_dimension);
        }
        emit(opt, s + "\n");
    }
    return v.status == Freeness::Unknown ? kExitUnknownVerdict : kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact construction and machine verification of simple-root bases for Shi arrangement cones"};
    app.require_subcommand(1);

    CommonOptions roots_opt, arr_opt_common, srb_opt, verify_opt, freeness_opt;
    ArrOptions arr_opt;
    FreenessCliOptions freeness_cli;
    std::vector<std::string> suites;

    CLI::App* roots = app.add_subcommand("roots", "Print a root system");
    add_common(roots, roots_opt, false);

    CLI::App* arr = app.add_subcommand("arr", "Print an arrangement");
    add_common(arr, arr_opt_common);
    arr->add_flag("--catalan", arr_opt.catalan, "Use the Catalan translate set instead of the Shi one");
    arr->add_flag("--cone", arr_opt.make_cone, "Print the cone (central forms) instead of the affine table");
    arr->add_option("--gamma", arr_opt.gamma, "Simple-root indices for the added/deleted cone, e.g. 1,2");
    arr->add_option("--sign", arr_opt.sign, "+ to add forms alpha_i + k z, - to delete forms alpha_i - k z");

    CLI::App* srb = app.add_subcommand("srb", "Construct the simple-root bases");
    add_common(srb, srb_opt);

    CLI::App* verify = app.add_subcommand("verify", "Run verification suites");
    add_common(verify, verify_opt);
    verify->add_option("--suite", suites, "Suites to run (comma-separated or repeated); 'all' for everything");

    CLI::App* freeness = app.add_subcommand("freeness", "Decide freeness of an (edited) Shi cone");
    add_common(freeness, freeness_opt);
    freeness->add_option("--add-root", freeness_cli.add_root, "Positive root coordinates; adds alpha + k z");
    freeness->add_option("--delete-root", freeness_cli.delete_root, "Positive root coordinates; deletes alpha - k z");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    try {
        if (roots->parsed()) return cmd_roots(roots_opt);
        if (arr->parsed()) return cmd_arr(arr_opt_common, arr_opt);
        if (srb->parsed()) return cmd_srb(srb_opt);
        if (verify->parsed()) return cmd_verify(verify_opt, suites);
        if (freeness->parsed()) return cmd_freeness(freeness_opt, freeness_cli);
    } catch (const theorem_falsified& e) {
        std::cerr << "theorem falsified: " << e.what() << "\n";
        return kExitTheoremFalsified;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    return kExitUsage;
}
