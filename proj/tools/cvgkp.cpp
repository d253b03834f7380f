// Copyright 2026 The cvgkp Authors
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

// cvgkp: command-line front end. JSON reports for plan-kerr, decompose, gkp,
// ft-budget and verify; CSV for tables, curves and sample.
//
// Exit codes: 0 success, 2 usage or input error, 3 verification failure.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "cvgkp/comb.hpp"
#include "cvgkp/ftcalc.hpp"
#include "cvgkp/gridsim.hpp"
#include "cvgkp/kerrplan.hpp"
#include "cvgkp/sampler.hpp"
#include "cvgkp/symplectic.hpp"
#include "cvgkp/verify.hpp"
#include "report.hpp"

namespace {

using namespace cvgkp;
using cvgkp::cli::Csv;
using cvgkp::cli::json;
using cvgkp::cli::Report;

constexpr int kExitUsage = 2;
constexpr int kExitVerify = 3;

// Reference labels for published values.
constexpr const char *kRefBinomTable = "table:binomial-gkp-comparison";
constexpr const char *kRefUniversal = "table:parameters-universal";
constexpr const char *kRefKerr = "text:kerr-plan-y0.1";
constexpr const char *kRefFt = "text:fault-tolerance-estimates";

void emit(const std::string &text, const std::string &path) {
    if (path.empty() || path == "-") {
        std::cout << text;
        return;
    }
    std::ofstream f(path, std::ios::binary);
    if (!f) throw CLI::ValidationError("--out", "cannot open " + path);
    f << text;
}

void emit_json(const Report &r, const std::string &path) { emit(r.finish().dump(2) + "\n", path); }

json gate_json(const Gate &g) {
    json j = {{"kind", gate_name(g.kind)}, {"param", g.param}, {"mode", g.mode}};
    if (g.two_mode()) j["mode2"] = g.mode2;
    return j;
}

json gates_json(const GateSequence &s) {
    json a = json::array();
    for (const auto &g : s.gates) a.push_back(gate_json(g));
    return a;
}

// ---------------------------------------------------------------- plan-kerr

struct PlanKerrArgs {
    double y = 0.1;
    std::string out;
};

int run_plan_kerr(const PlanKerrArgs &a) {
    Report r("plan-kerr");
    r.inputs() = {{"y", a.y}};
    const auto pl = kerr::plan(a.y);
    const auto c = kerr::count_report(a.y);
    const bool published = std::abs(a.y - 0.1) < 1e-12;
    if (published) {
        r.referenced("p", pl.p, kRefKerr, 18, 0);
        r.referenced("k", pl.k, kRefKerr, 2, 0);
        r.referenced("l", pl.l, kRefKerr, 8, 0);
        r.referenced("table_angles.cz_small", pl.table_angles.cz_small, kRefUniversal, 0.011, 1e-3);
        r.referenced("table_angles.cubic_small", pl.table_angles.cubic_small, kRefUniversal, 0.011, 1e-3);
        r.referenced("table_angles.cubic_big", pl.table_angles.cubic_big, kRefUniversal, 0.086, 1e-3);
        r.referenced("counts.asymptotic_printed", c.asymptotic_printed, kRefKerr, 1.09e3, 0.01e3);
    } else {
        r.derived("p", pl.p);
        r.derived("k", pl.k);
        r.derived("l", pl.l);
        r.derived("table_angles.cz_small", pl.table_angles.cz_small);
        r.derived("table_angles.cubic_small", pl.table_angles.cubic_small);
        r.derived("table_angles.cubic_big", pl.table_angles.cubic_big);
        r.derived("counts.asymptotic_printed", c.asymptotic_printed);
    }
    r.derived("p_raw", pl.p_raw);
    r.derived("k_raw", pl.k_raw);
    r.derived("l_raw", pl.l_raw);
    r.derived("tau", pl.tau);
    r.derived("per_block_count", pl.per_block_count);
    r.derived("total_count", pl.total_count);
    r.derived("derived_angles.cz_small", pl.derived_angles.cz_small);
    r.derived("derived_angles.cubic_small", pl.derived_angles.cubic_small);
    r.derived("derived_angles.cubic_big", pl.derived_angles.cubic_big);
    r.derived("counts.exact_total_real", c.exact_total_real);
    r.derived("counts.exact_total_ceiled", c.exact_total_ceiled);
    r.derived("counts.asymptotic_consistent", c.asymptotic_consistent);
    r.derived("counts.materialized", c.materialized);
    r.derived("counts.prefactor_discrepancy", c.prefactor_discrepancy);
    if (c.prefactor_discrepancy)
        r.discrepancy("counts.asymptotic_prefactor", c.asymptotic_printed, c.asymptotic_consistent,
                      "printed asymptotic count uses pi^(3/2); the exact unrounded total follows pi^6");
    if (published && std::abs(pl.derived_angles.cubic_big - 0.086) > 1e-3)
        r.discrepancy("derived_angles.cubic_big", 0.086, pl.derived_angles.cubic_big,
                      "with the executed step tau = pi/p the angle rounds to 0.085");
    emit_json(r, a.out);
    return 0;
}

// ---------------------------------------------------------------- decompose

struct DecomposeArgs {
    std::string gate = "squeeze";
    double param = 2.0;
    std::string form = "r-dependent";
    std::string out;
};

int run_decompose(const DecomposeArgs &a) {
    Report r("decompose");
    r.inputs() = {{"gate", a.gate}, {"param", a.param}, {"form", a.form}};
    GateSequence seq;
    SymplecticMatrix target;
    if (a.gate == "squeeze") {
        seq = decompose_squeeze(a.param);
        target = squeeze_target(a.param);
    } else if (a.gate == "beamsplitter") {
        const auto form = a.form == "fixed" ? BeamsplitterForm::FixedCoefficient : BeamsplitterForm::RDependent;
        seq = decompose_beamsplitter(a.param, form);
        target = beamsplitter_target(a.param);
    } else {
        seq = decompose_rotation(a.param);
        target = rotation_target(a.param);
    }
    const double res = residual(seq, target);
    r.derived("gates", gates_json(seq));
    r.derived("gate_count", static_cast<int>(seq.size()));
    r.derived("residual", res);
    r.derived("is_symplectic", is_symplectic(compose(seq)));
    if (res > 1e-12)
        r.discrepancy("residual", 0.0, res,
                      a.gate == "beamsplitter" && a.form == "fixed"
                          ? "the fixed-coefficient block composes to a different matrix than M_R"
                          : "composed matrix differs from the target beyond rounding");
    emit_json(r, a.out);
    return 0;
}

// ---------------------------------------------------------------- gkp

struct GkpArgs {
    int m = 1;
    int K = 315;
    int grid = 0;
    std::string out;
};

int run_gkp(const GkpArgs &a) {
    Report r("gkp");
    r.inputs() = {{"m", a.m}, {"K", a.K}, {"grid", a.grid}};
    const auto sq = comb::sigma_of_m(a.m);
    const double eta = grid::HomodyneSpec{a.K}.eta();
    r.derived("sigma", sq.sigma);
    r.derived("squeezing_db", sq.squeezing_db);
    r.derived("alpha", comb::alpha_of_m(a.m, sq.sigma));
    r.derived("cat_center", comb::cat_center(a.m));
    r.derived("eta", eta);
    const double overlap[] = {0.9976, 0.9986, 0.9997, 0.9999};
    const double coeff[] = {1.7, 6.3, 1.2e2, 5.6e4};
    if (a.m <= 4) {
        r.referenced("overlap_gaussian", comb::overlap_gaussian(a.m), kRefBinomTable, overlap[a.m - 1], 2e-3);
        const double c = comb::success_coefficient(a.m);
        r.referenced("success_coefficient", c, kRefBinomTable, coeff[a.m - 1], 0.02 * coeff[a.m - 1],
                     "exact coefficient C(2^(m+1),2^m) 2^(-2^m) (2/sqrt(pi))^(2^m-1)");
    } else {
        r.derived("overlap_gaussian", comb::overlap_gaussian(a.m));
        r.derived("success_coefficient", comb::success_coefficient(a.m));
    }
    r.derived("success_probability", comb::success_probability(a.m, eta, sq.sigma));
    if (a.m <= 8) {
        const auto syn = comb::synthesize_gkp(a.m, sq.sigma, eta);
        r.derived("round_probabilities", syn.round_probs);
        json peaks = json::array();
        for (const auto &t : syn.comb.terms) peaks.push_back({{"center", t.center}, {"amp", t.amp.real()}});
        r.derived("peaks", peaks);
    }
    if (a.grid > 0) {
        if (a.m != 1) throw CLI::ValidationError("--grid", "the grid oracle runs for m = 1 only");
        const long cap = static_cast<long>(a.grid) * a.grid;
        const auto o = grid::grid_synthesis_m1(grid::GridSpec::symmetric(a.grid, 20.0), a.K, cap);
        r.derived("grid.fidelity", o.fidelity);
        r.derived("grid.success", o.grid_success);
        r.derived("grid.comb_success", o.comb_success);
        r.derived("grid.success_ratio", o.grid_success / o.comb_success);
    }
    emit_json(r, a.out);
    return 0;
}

// ---------------------------------------------------------------- ft-budget

struct FtArgs {
    int m = 1;
    double y = 0.1;
    double eps_q = 0.0;
    double eps_p = 0.0;
    double eps_th = 1e-6;
    std::string out;
};

int run_ft_budget(const FtArgs &a) {
    using namespace cvgkp::ft;
    Report r("ft-budget");
    r.inputs() = {{"m", a.m}, {"y", a.y}, {"eps_q", a.eps_q}, {"eps_p", a.eps_p}, {"eps_th", a.eps_th}};
    const auto b = FTBudget::make(a.m, a.y, a.eps_q, a.eps_p, a.eps_th);
    if (a.m == 1) r.referenced("zeta_m", b.zeta_m, kRefFt, 0.069, 0.005);
    else r.derived("zeta_m", b.zeta_m);
    r.derived("epsilon_m", b.epsilon_m);
    r.derived("sigma_m", b.sigma_m);
    const double db = comb::sigma_of_m(a.m).squeezing_db;
    if (a.m == 6) r.referenced("squeezing_db", db, kRefFt, 19.0, 0.5, "10 log10(2^(m-1) pi) gives 20.0 dB at m = 6");
    else r.derived("squeezing_db", db);
    for (auto conv : {ErfConvention::Literal, ErfConvention::Strict}) {
        const std::string tag = convention_name(conv);
        json ps = nullptr;
        try {
            ps = p_succ(a.m, a.y, conv);
        } catch (const Error &e) {
            if (e.code() != ErrorCode::BudgetExhausted) throw;
        }
        if (a.m == 1 && std::abs(a.y - 0.1) < 1e-12 && conv == ErfConvention::Literal && !ps.is_null())
            r.referenced("p_succ." + tag, ps.get<double>(), kRefFt, 0.97, 0.01);
        else r.derived("p_succ." + tag, ps);
        r.derived("failure_probability." + tag, failure_probability(b, conv));
        r.derived("threshold_ok." + tag, threshold_ok(b, conv));
        r.derived("cviqp_failure." + tag, cviqp_failure(a.m, a.y, conv));
        try {
            const auto mm = cviqp_minimal_m(a.eps_th, a.y, conv);
            const bool pub = std::abs(a.eps_th - 1e-6) < 1e-18 && std::abs(a.y - 1e-3) < 1e-15;
            if (pub) {
                r.referenced("cviqp_minimal_m." + tag, mm.m_min, kRefFt, 6, 1);
                if (mm.m_min != 6)
                    r.discrepancy("cviqp_minimal_m." + tag, 6, mm.m_min,
                                  "within the stated +-1; the value depends on the erf convention");
            } else {
                r.derived("cviqp_minimal_m." + tag, mm.m_min);
            }
            r.derived("cviqp_max_y_at_m." + tag, mm.max_y_at_m);
        } catch (const Error &e) {
            if (e.code() != ErrorCode::Infeasible) throw;
            r.derived("cviqp_minimal_m." + tag, nullptr);
        }
    }
    emit_json(r, a.out);
    return 0;
}

// ---------------------------------------------------------------- tables

std::string table_gkp_binom() {
    const double overlap[] = {0.9976, 0.9986, 0.9997, 0.9999};
    const double coeff[] = {1.7, 6.3, 1.2e2, 5.6e4};
    const long db[] = {5, 8, 11, 14};
    Csv csv({"m", "squeezing_db", "printed_db", "overlap", "printed_overlap", "success_coefficient",
             "printed_coefficient", "match"});
    for (int m = 1; m <= 4; ++m) {
        const double d = comb::sigma_of_m(m).squeezing_db;
        const double o = comb::overlap_gaussian(m);
        const double c = comb::success_coefficient(m);
        const bool match = std::lround(d) == db[m - 1] && std::abs(o - overlap[m - 1]) <= 2e-3 &&
                           std::abs(c / coeff[m - 1] - 1) <= 0.02;
        csv.cell(m).cell(d).cell(db[m - 1]).cell(o).cell(overlap[m - 1]).cell(c).cell(coeff[m - 1]).cell(match);
    }
    return csv.str();
}

std::string table_params(ft::Model model, int m, double y) {
    const auto t = ft::gate_parameter_table(model, m, y);
    Csv csv({"evolution", "symbol", "computed", "printed", "printed_unit", "match"});
    for (const auto &row : t.rows) {
        csv.cell(row.evolution).cell(row.symbol).cell(row.computed).cell(row.printed);
        if (row.printed) csv.cell(row.printed_unit);
        else csv.empty();
        csv.cell(row.match);
    }
    return csv.str();
}

struct TablesArgs {
    std::string name;
    int m = 0;
    double y = 0.0;
    std::string out;
};

int run_tables(const TablesArgs &a) {
    std::string text;
    if (a.name == "gkp-binom") text = table_gkp_binom();
    else if (a.name == "params-universal") text = table_params(ft::Model::Universal, a.m ? a.m : 1, a.y > 0 ? a.y : 0.1);
    else if (a.name == "params-cviqp") text = table_params(ft::Model::CVIQP, a.m ? a.m : 6, a.y > 0 ? a.y : 1e-3);
    else throw Error(ErrorCode::UnknownTable, "unknown table '" + a.name + "' (gkp-binom, params-universal, params-cviqp)");
    emit(text, a.out);
    return 0;
}

// ---------------------------------------------------------------- curves

struct CurvesArgs {
    std::string name;
    int m = 1;
    int points = 801;
    double y_max = 0.45;
    std::string out;
};

int run_curves(const CurvesArgs &a) {
    if (a.name == "psucc-vs-y") {
        Csv csv({"y", "p_succ_literal", "p_succ_strict"});
        for (const auto &p : ft::psucc_curve(a.m, a.y_max, std::max(1, a.points - 1)))
            csv.cell(p.y).cell(p.p_literal).cell(p.p_strict);
        emit(csv.str(), a.out);
        return 0;
    }
    if (a.name == "gkp-wavefunction") {
        const auto sp = comb::GKPSpec::from_m(a.m);
        const double half = 6.0 * kSqrtPi * std::pow(kSqrt2, a.m - 1);
        Csv csv({"q", "binomial", "gaussian_gkp"});
        for (int i = 0; i < a.points; ++i) {
            const double q = -half + 2 * half * i / std::max(1, a.points - 1);
            csv.cell(q).cell(comb::binomial_wavefunction(a.m, sp.sigma, q)).cell(comb::gaussian_gkp_wavefunction(sp, 0, q));
        }
        emit(csv.str(), a.out);
        return 0;
    }
    throw Error(ErrorCode::UnknownTable, "unknown curve '" + a.name + "' (psucc-vs-y, gkp-wavefunction)");
}

// ---------------------------------------------------------------- sample

struct SampleArgs {
    std::string model = "cviqp";
    int modes = 1;
    int depth = 8;
    int K = 8;
    long shots = 1000;
    std::uint64_t seed = 0;
    int m = 0;
    double y = 0.0;
    double sigma = 0.5;
    int window = 8;
    std::string out;
    std::string report;
};

int run_sample(const SampleArgs &a) {
    using namespace cvgkp::sampler;
    CircuitModel model;
    if (a.model == "cviqp") model = CircuitModel::cviqp(a.m ? a.m : 6, a.y > 0 ? a.y : 1e-3, a.sigma);
    else model = CircuitModel::random_cv(a.m ? a.m : 1, a.y > 0 ? a.y : 0.1);
    const auto spec = draw_circuit(model, a.modes, a.depth, a.seed, a.K);
    SimOptions opt;
    opt.window = a.window;
    const auto dist = simulate_distribution(spec, opt);
    // Shots use a stream separate from the circuit draw.
    const auto rec = sample_from(dist, a.shots, a.seed ^ 0x5A5A5A5A5A5A5A5Aull);
    Csv csv({"shot", "mode", "bin", "center"});
    for (const auto &o : rec) csv.cell(o.shot).cell(o.mode).cell(o.bin).cell(o.center);
    emit(csv.str(), a.out);
    if (!a.report.empty()) {
        Report r("sample");
        r.inputs() = {{"model", a.model}, {"modes", a.modes}, {"depth", a.depth}, {"K", a.K},
                      {"shots", a.shots}, {"seed", a.seed},   {"m", model.m},     {"y", model.y},
                      {"input_sigma", model.input_sigma},     {"window", a.window}};
        r.derived("gates", gates_json(spec.gates));
        r.derived("path", path_name(dist.path));
        r.derived("grid_points", dist.grid_points);
        json modes = json::array();
        for (const auto &md : dist.modes)
            modes.push_back({{"mode", md.mode}, {"k_min", md.k_min}, {"masses", md.masses},
                             {"underflow", md.underflow}, {"overflow", md.overflow}, {"total", md.total()}});
        r.derived("distributions", modes);
        emit_json(r, a.report);
    }
    return 0;
}

// ---------------------------------------------------------------- verify

struct VerifyArgs {
    std::vector<int> only;
    std::string out;
};

int run_verify(const VerifyArgs &a) {
    Report r("verify");
    r.inputs() = {{"only", a.only}};
    bool all = true;
    json results = json::array();
    for (const auto &c : verify::run_all(a.only)) {
        results.push_back({{"id", c.id}, {"name", c.name}, {"pass", c.pass}, {"detail", c.detail}, {"runtime_ms", c.runtime_ms}});
        all = all && c.pass;
        if (!c.pass) r.discrepancy("criterion " + std::to_string(c.id) + " " + c.name, "PASS", "FAIL", c.detail);
    }
    r.derived("criteria", results);
    r.derived("all_pass", all);
    emit_json(r, a.out);
    return all ? 0 : kExitVerify;
}

}  // namespace

int main(int argc, char **argv) {
    CLI::App app{"cvgkp: GKP synthesis, gate compilation and CV sampling toolkit"};
    app.require_subcommand(1);
    app.set_config("--config", "", "key = value file; [subcommand] sections; explicit flags win");

    PlanKerrArgs pk;
    auto *c_pk = app.add_subcommand("plan-kerr", "Precision-budgeted cross-Kerr compilation plan (JSON)");
    c_pk->add_option("--y", pk.y, "Total error budget y in (0, pi)")->capture_default_str();
    c_pk->add_option("--out", pk.out, "Write the report here instead of stdout");

    DecomposeArgs dc;
    auto *c_dc = app.add_subcommand("decompose", "Gaussian gate as shears, CZ and Fourier (JSON)");
    c_dc->add_option("--gate", dc.gate)->check(CLI::IsMember({"squeeze", "beamsplitter", "rotation"}))->capture_default_str();
    c_dc->add_option("--param", dc.param, "s, R or theta")->capture_default_str();
    c_dc->add_option("--form", dc.form, "Beamsplitter coefficients")
        ->check(CLI::IsMember({"r-dependent", "fixed"}))
        ->capture_default_str();
    c_dc->add_option("--out", dc.out);

    GkpArgs gk;
    auto *c_gk = app.add_subcommand("gkp", "Binomial GKP synthesis of order m (JSON)");
    c_gk->add_option("--m", gk.m)->check(CLI::Range(1, 20))->capture_default_str();
    c_gk->add_option("--K", gk.K, "Homodyne bins: eta = sqrt(pi) / K")->check(CLI::PositiveNumber)->capture_default_str();
    c_gk->add_option("--grid", gk.grid, "Also run the m=1 two-mode grid oracle with this many points per axis")
        ->check(CLI::Range(0, 4096));
    c_gk->add_option("--out", gk.out);

    FtArgs fa;
    auto *c_ft = app.add_subcommand("ft-budget", "Fault-tolerance budget and threshold checks (JSON)");
    c_ft->add_option("--m", fa.m)->check(CLI::Range(1, 20))->capture_default_str();
    c_ft->add_option("--y", fa.y)->check(CLI::NonNegativeNumber)->capture_default_str();
    c_ft->add_option("--eps-q", fa.eps_q)->check(CLI::NonNegativeNumber);
    c_ft->add_option("--eps-p", fa.eps_p)->check(CLI::NonNegativeNumber);
    c_ft->add_option("--eps-th", fa.eps_th)->check(CLI::Range(0.0, 1.0))->capture_default_str();
    c_ft->add_option("--out", fa.out);

    TablesArgs ta;
    auto *c_ta = app.add_subcommand("tables", "Reproduce a parameter table (CSV)");
    c_ta->add_option("--name", ta.name, "gkp-binom | params-universal | params-cviqp")->required();
    c_ta->add_option("--m", ta.m, "Override m for parameter tables");
    c_ta->add_option("--y", ta.y, "Override y for parameter tables");
    c_ta->add_option("--out", ta.out);

    CurvesArgs cu;
    auto *c_cu = app.add_subcommand("curves", "Curve data (CSV)");
    c_cu->add_option("--name", cu.name, "psucc-vs-y | gkp-wavefunction")->required();
    c_cu->add_option("--m", cu.m)->check(CLI::Range(1, 12))->capture_default_str();
    c_cu->add_option("--points", cu.points)->check(CLI::Range(2, 1000000))->capture_default_str();
    c_cu->add_option("--y-max", cu.y_max)->check(CLI::PositiveNumber)->capture_default_str();
    c_cu->add_option("--out", cu.out);

    SampleArgs sa;
    auto *c_sa = app.add_subcommand("sample", "Draw a circuit and sample binned homodyne outcomes (CSV)");
    c_sa->add_option("--model", sa.model)->check(CLI::IsMember({"cviqp", "random-cv"}))->capture_default_str();
    c_sa->add_option("--modes", sa.modes)->check(CLI::PositiveNumber)->capture_default_str();
    c_sa->add_option("--depth", sa.depth)->check(CLI::NonNegativeNumber)->capture_default_str();
    c_sa->add_option("--K", sa.K)->check(CLI::PositiveNumber)->capture_default_str();
    c_sa->add_option("--shots", sa.shots)->check(CLI::NonNegativeNumber)->capture_default_str();
    c_sa->add_option("--seed", sa.seed)->capture_default_str();
    c_sa->add_option("--m", sa.m, "Gate-table order (default 1 random-cv, 6 cviqp)");
    c_sa->add_option("--y", sa.y, "Gate-table budget (default 0.1 random-cv, 1e-3 cviqp)");
    c_sa->add_option("--sigma", sa.sigma, "CVIQP input momentum width, in (0, 1)")->capture_default_str();
    c_sa->add_option("--window", sa.window, "Bins cover |p| <= sqrt(pi) * window")->check(CLI::PositiveNumber);
    c_sa->add_option("--out", sa.out, "CSV destination");
    c_sa->add_option("--report", sa.report, "Also write a JSON report with the circuit and distributions");

    VerifyArgs va;
    auto *c_va = app.add_subcommand("verify", "Run the acceptance checks (JSON); exit 3 on any failure");
    c_va->add_option("--only", va.only, "Criterion ids to run")->delimiter(',');
    c_va->add_option("--out", va.out);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError &e) {
        if (e.get_exit_code() == 0) return app.exit(e);
        app.exit(e);
        std::cerr << app.help();
        return kExitUsage;
    }

    try {
        if (*c_pk) return run_plan_kerr(pk);
        if (*c_dc) return run_decompose(dc);
        if (*c_gk) return run_gkp(gk);
        if (*c_ft) return run_ft_budget(fa);
        if (*c_ta) return run_tables(ta);
        if (*c_cu) return run_curves(cu);
        if (*c_sa) return run_sample(sa);
        if (*c_va) return run_verify(va);
    } catch (const CLI::Error &e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const Error &e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    return kExitUsage;
}
