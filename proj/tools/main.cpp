// Command-line front end: ensemble sampling, distance verification,
// threshold/exponent reports, figure data, erasure simulation, benchmarking.

#include "ldpcdist/alist.hpp"
#include "ldpcdist/distance.hpp"
#include "ldpcdist/ensembles.hpp"
#include "ldpcdist/spectra.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <chrono>
#include <cmath>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

using nlohmann::json;
using namespace ldpcdist;

namespace {

constexpr const char* kVersion = "0.1.0";

// Exit codes: 0 conclusive, 2 inconclusive result, 3 input error, 4 internal.
constexpr int kOk = 0;
constexpr int kInconclusive = 2;
constexpr int kInputError = 3;
constexpr int kInternal = 4;

struct Timer {
    std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();
    double seconds() const {
        return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    }
};

json counters_json(const Counters& c) {
    return {{"row_xors", c.row_xors},
            {"patterns", c.patterns},
            {"trials", c.trials},
            {"eliminations", c.eliminations},
            {"skipped_bcap", c.skipped_bcap}};
}

json result_json(const DistanceResult& r) {
    json j;
    if (r.distance) j["distance"] = *r.distance;
    else j["distance"] = nullptr;
    if (r.witness) j["witness_hex"] = r.witness->to_hex();
    else j["witness_hex"] = nullptr;
    j["certificate"] = to_string(r.certificate);
    if (r.certificate == Certificate::probabilistic) j["confidence"] = r.confidence;
    if (r.certificate == Certificate::inconclusive) j["reason"] = r.reason;
    j["counters"] = counters_json(r.counters);
    return j;
}

json report_json(const ThresholdReport& t) {
    return {{"ell", t.ell},
            {"emm", t.emm},
            {"rate", t.rate},
            {"delta_star", t.delta_star},
            {"theta_star", t.theta_star},
            {"f_sw", t.f_sw},
            {"f_mb", t.f_mb},
            {"f_comb", t.f_comb},
            {"f_cs", t.f_cs},
            {"generic_gv_delta", t.generic_gv_delta},
            {"generic_f_swmb", t.generic_f_swmb},
            {"generic_f_cs", t.generic_f_cs}};
}

json make_record(const std::string& command, json params, json result, double duration) {
    return {{"command", command},
            {"params", std::move(params)},
            {"result", std::move(result)},
            {"duration_s", duration},
            {"version", kVersion}};
}

void write_output(const std::string& text, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream f(out_path, std::ios::binary);
    if (!f) throw std::runtime_error("cannot open output file " + out_path);
    f << text;
}

void emit_record(const json& record, bool json_mode, const std::string& out_path,
                 const std::string& human_text) {
    if (json_mode) write_output(record.dump(2) + "\n", out_path);
    else write_output(human_text, out_path);
}

// If every column weight and row weight of h is uniform, return the spec.
std::optional<EnsembleSpec> infer_regular(const BitMatrix& h) {
    if (h.rows() == 0 || h.cols() == 0) return std::nullopt;
    std::size_t ell = h.column_weight(0), emm = h.row_weight(0);
    EnsembleSpec spec{unsigned(ell), unsigned(emm), h.cols(), true};
    if (ell < 2 || emm < ell) return std::nullopt;
    if (!validate_regular(h, spec)) return std::nullopt;
    return spec;
}

std::vector<double> parse_double_list(const std::string& csv) {
    std::vector<double> out;
    std::stringstream ss(csv);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        if (!tok.empty()) out.push_back(std::stod(tok));
    }
    return out;
}

std::vector<std::size_t> parse_size_list(const std::string& csv) {
    std::vector<std::size_t> out;
    std::stringstream ss(csv);
    std::string tok;
    while (std::getline(ss, tok, ','))
        if (!tok.empty()) out.push_back(std::size_t(std::stoull(tok)));
    return out;
}

int run_sample(const std::string& ensemble, unsigned ell, unsigned emm, std::size_t n,
               std::uint64_t seed, bool allow_low, const std::string& out_path,
               bool json_mode) {
    Timer timer;
    EnsembleSpec spec{ell, emm, n, allow_low};
    BitMatrix h = (ensemble == "B") ? sample_b(spec, seed) : sample_a(spec, seed);
    std::string alist = alist_to_string(h);

    json params = {{"ensemble", ensemble}, {"ell", ell},  {"emm", emm},
                   {"n", n},               {"seed", seed}, {"out", out_path}};
    json result = {{"rows", h.rows()}, {"cols", h.cols()}, {"alist", alist}};
    json record = make_record("sample", params, result, timer.seconds());

    if (json_mode) {
        std::cout << record.dump(2) << "\n";
        if (!out_path.empty()) write_output(alist, out_path);
    } else {
        write_output(alist, out_path);
    }
    return kOk;
}

int run_distance(const std::string& in_path, const std::string& alg, double theta_flag,
                 unsigned d_max, unsigned b_cap, std::uint64_t seed, unsigned threads,
                 bool json_mode, const std::string& out_path) {
    Timer timer;
    BitMatrix h = alist_read_file(in_path);
    Code code(std::move(h));

    double theta = theta_flag;
    if (theta == 0.0 && (alg == "sw" || alg == "cs")) {
        auto spec = infer_regular(code.h());
        if (!spec)
            throw std::invalid_argument(
                "matrix is not regular; pass --theta explicitly for " + alg);
        SpectrumParams p{spec->alpha(), spec->emm};
        theta = theta_star(p) - 0.02;
    }

    DistanceResult res;
    if (alg == "exhaustive") res = distance_exhaustive(code);
    else if (alg == "sw") res = distance_sw(code, {theta, d_max, std::uint64_t(1) << 20, true});
    else if (alg == "mb") res = distance_mb(code, {d_max, std::uint64_t(1) << 20, true});
    else if (alg == "cs") res = distance_cs(code, {theta, d_max, b_cap, seed, threads});
    else throw std::invalid_argument("unknown algorithm " + alg);

    json params = {{"in", in_path}, {"alg", alg},   {"theta", theta},
                   {"dmax", d_max}, {"bcap", b_cap}, {"seed", seed},
                   {"threads", threads}};
    json record = make_record("distance", params, result_json(res), timer.seconds());

    std::ostringstream human;
    if (res.distance) human << "distance: " << *res.distance << "\n";
    else human << "distance: none\n";
    human << "certificate: " << to_string(res.certificate);
    if (res.certificate == Certificate::inconclusive) human << " (" << res.reason << ")";
    human << "\n";
    if (res.witness) human << "witness: " << res.witness->to_hex() << "\n";
    human << "counters: row_xors=" << res.counters.row_xors
          << " patterns=" << res.counters.patterns << " trials=" << res.counters.trials
          << " eliminations=" << res.counters.eliminations
          << " skipped_bcap=" << res.counters.skipped_bcap << "\n";

    emit_record(record, json_mode, out_path, human.str());
    return res.certificate == Certificate::inconclusive ? kInconclusive : kOk;
}

int run_thresholds(unsigned ell, unsigned emm, bool json_mode, const std::string& out_path) {
    Timer timer;
    SpectrumParams p{double(ell) / double(emm), emm};
    ThresholdReport rep = ldpc_exponents(p);

    json params = {{"ell", ell}, {"emm", emm}};
    json record = make_record("thresholds", params, report_json(rep), timer.seconds());

    std::ostringstream human;
    human << "(" << ell << "," << emm << ") rate " << rep.rate << "\n"
          << "delta_star = " << rep.delta_star << "\n"
          << "theta_star = " << rep.theta_star << "\n"
          << "F_SW   = " << rep.f_sw << "\n"
          << "F_MB   = " << rep.f_mb << "\n"
          << "F_comb = " << rep.f_comb << "\n"
          << "F_CS   = " << rep.f_cs << "\n"
          << "generic: gv_delta = " << rep.generic_gv_delta
          << ", F_SW/MB = " << rep.generic_f_swmb << ", F_CS = " << rep.generic_f_cs << "\n";

    emit_record(record, json_mode, out_path, human.str());
    return kOk;
}

int run_figure(const std::string& codes, double rate_step, const std::string& out_path) {
    std::ostringstream csv;
    csv << "kind,rate,generic_f_swmb,generic_f_cs,ell,emm,delta_star,theta_star,f_comb,f_cs\n";
    for (double rate = rate_step; rate < 1.0 - 1e-12; rate += rate_step) {
        GenericExponents g = generic_exponents(rate);
        csv << "generic," << rate << "," << g.f_swmb << "," << g.f_cs << ",,,,,,\n";
    }
    std::stringstream ss(codes);
    std::string pair;
    while (std::getline(ss, pair, ',')) {
        if (pair.empty()) continue;
        auto colon = pair.find(':');
        if (colon == std::string::npos)
            throw std::invalid_argument("bad ensemble pair '" + pair + "', expected ell:m");
        unsigned ell = unsigned(std::stoul(pair.substr(0, colon)));
        unsigned emm = unsigned(std::stoul(pair.substr(colon + 1)));
        SpectrumParams p{double(ell) / double(emm), emm};
        ThresholdReport rep = ldpc_exponents(p);
        csv << "ldpc," << rep.rate << "," << rep.generic_f_swmb << "," << rep.generic_f_cs
            << "," << ell << "," << emm << "," << rep.delta_star << "," << rep.theta_star
            << "," << rep.f_comb << "," << rep.f_cs << "\n";
    }
    write_output(csv.str(), out_path);
    return kOk;
}

int run_erasure_sim(unsigned ell, unsigned emm, std::size_t n, const std::string& thetas_csv,
                    std::size_t trials, std::uint64_t seed, bool fixed_code, bool json_mode,
                    const std::string& out_path) {
    Timer timer;
    EnsembleSpec spec{ell, emm, n, false};
    spec.validate();
    auto thetas = parse_double_list(thetas_csv);
    if (thetas.empty()) throw std::invalid_argument("no theta values given");
    for (double th : thetas)
        if (!(th > 0.0 && th < 1.0)) throw std::invalid_argument("theta outside (0,1)");

    std::optional<BitMatrix> fixed_h;
    if (fixed_code) fixed_h = sample_a(spec, seed);

    json points = json::array();
    std::ostringstream human;
    human << "theta,trials,successes,failures,success_rate,mean_corank\n";
    std::uint64_t stream = 0;
    for (double th : thetas) {
        std::size_t erased = std::size_t(th * n);
        std::size_t successes = 0;
        double corank_sum = 0.0;
        for (std::size_t trial = 0; trial < trials; ++trial) {
            Rng rng = Rng::child(seed, ++stream);
            BitMatrix h = fixed_h ? *fixed_h : sample_a(spec, rng.next());
            auto J = rng.subset(n, erased);
            std::sort(J.begin(), J.end());
            std::size_t b = corank(column_submatrix(h, J));
            corank_sum += double(b);
            if (b == 0) ++successes;
        }
        double rate = trials ? double(successes) / double(trials) : 0.0;
        double mean_b = trials ? corank_sum / double(trials) : 0.0;
        points.push_back({{"theta", th},
                          {"trials", trials},
                          {"successes", successes},
                          {"failures", trials - successes},
                          {"success_rate", rate},
                          {"mean_corank", mean_b}});
        human << th << "," << trials << "," << successes << "," << (trials - successes) << ","
              << rate << "," << mean_b << "\n";
    }

    json params = {{"ell", ell},     {"emm", emm},   {"n", n},
                   {"thetas", thetas}, {"trials", trials}, {"seed", seed},
                   {"fixed_code", fixed_code}};
    json record = make_record("erasure-sim", params, {{"points", points}}, timer.seconds());
    emit_record(record, json_mode, out_path, human.str());
    return kOk;
}

int run_bench(unsigned ell, unsigned emm, const std::string& n_grid, const std::string& alg,
              double theta_flag, std::uint64_t seed, unsigned threads,
              const std::string& out_path) {
    auto ns = parse_size_list(n_grid);
    if (ns.empty()) throw std::invalid_argument("empty --n-grid");

    SpectrumParams p{double(ell) / double(emm), emm};
    ThresholdReport rep = ldpc_exponents(p);
    double predicted = rep.rate; // exhaustive baseline F = R
    if (alg == "sw") predicted = rep.f_sw;
    else if (alg == "mb") predicted = rep.f_mb;
    else if (alg == "cs") predicted = rep.f_cs;

    double theta = theta_flag != 0.0 ? theta_flag : rep.theta_star - 0.02;

    std::ostringstream csv;
    csv << "n,distance,certificate,patterns,row_xors,trials,eliminations,"
           "log2_patterns_over_n,predicted_exponent\n";
    for (std::size_t n : ns) {
        EnsembleSpec spec{ell, emm, n, false};
        Code code(sample_a(spec, seed + n));
        DistanceResult res;
        if (alg == "exhaustive") res = distance_exhaustive(code);
        else if (alg == "sw") res = distance_sw(code, {theta, 0, std::uint64_t(1) << 20, true});
        else if (alg == "mb") res = distance_mb(code, {0, std::uint64_t(1) << 20, true});
        else if (alg == "cs") res = distance_cs(code, {theta, 0, 20, seed, threads});
        else throw std::invalid_argument("unknown algorithm " + alg);
        double norm = res.counters.patterns
                          ? std::log2(double(res.counters.patterns)) / double(n)
                          : 0.0;
        csv << n << "," << (res.distance ? std::to_string(*res.distance) : "") << ","
            << to_string(res.certificate) << "," << res.counters.patterns << ","
            << res.counters.row_xors << "," << res.counters.trials << ","
            << res.counters.eliminations << "," << norm << "," << predicted << "\n";
    }
    write_output(csv.str(), out_path);
    return kOk;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Minimum-distance verification and complexity analysis for regular LDPC codes"};
    app.require_subcommand(1);

    std::uint64_t seed = 0;
    bool json_mode = false;
    std::string out_path;
    unsigned threads = 1;
    app.add_option("--seed", seed, "PRNG seed")->capture_default_str();
    app.add_flag("--json", json_mode, "emit a machine-readable run record");
    app.add_option("--out", out_path, "output file (default stdout)");
    app.add_option("--threads", threads, "worker threads for covering-set trials")
        ->capture_default_str();

    // sample
    auto* sample = app.add_subcommand("sample", "sample a parity-check matrix");
    std::string ensemble = "A";
    unsigned ell = 3, emm = 6;
    std::size_t n = 0;
    bool allow_low = false;
    sample->add_option("--ensemble", ensemble, "A or B")->check(CLI::IsMember({"A", "B"}));
    sample->add_option("--ell", ell, "column weight")->required();
    sample->add_option("--emm", emm, "row weight")->required();
    sample->add_option("--n", n, "block length")->required();
    sample->add_flag("--allow-ell-2", allow_low, "permit column weight 2");

    // distance
    auto* dist = app.add_subcommand("distance", "verify minimum distance of an alist code");
    std::string in_path, alg = "exhaustive";
    double theta = 0.0;
    unsigned d_max = 0, b_cap = 20;
    dist->add_option("--in", in_path, "input alist file")->required();
    dist->add_option("--alg", alg, "exhaustive|sw|mb|cs")
        ->check(CLI::IsMember({"exhaustive", "sw", "mb", "cs"}));
    dist->add_option("--theta", theta, "window/covering parameter (default theta*-0.02)");
    dist->add_option("--dmax", d_max, "largest weight to try (default n)");
    dist->add_option("--bcap", b_cap, "co-rank cap for CS trials")->capture_default_str();

    // thresholds
    auto* thr = app.add_subcommand("thresholds", "ensemble thresholds and complexity exponents");
    thr->add_option("--ell", ell, "column weight")->required();
    thr->add_option("--emm", emm, "row weight")->required();

    // figure
    auto* fig = app.add_subcommand("figure", "CSV of exponents vs rate");
    std::string codes = "3:6,4:8,3:4,4:5";
    double rate_step = 0.005;
    fig->add_option("--codes", codes, "comma list of ell:m pairs")->capture_default_str();
    fig->add_option("--rate-grid", rate_step, "rate grid step for generic curves")
        ->capture_default_str();

    // erasure-sim
    auto* era = app.add_subcommand("erasure-sim", "empirical ML erasure correction rates");
    std::string thetas = "0.05,0.2,0.35,0.45,0.55,0.6";
    std::size_t trials = 200;
    bool fixed_code = false;
    era->add_option("--ell", ell, "column weight")->required();
    era->add_option("--emm", emm, "row weight")->required();
    era->add_option("--n", n, "block length")->required();
    era->add_option("--thetas", thetas, "comma list of erasure fractions")->capture_default_str();
    era->add_option("--trials", trials, "trials per theta")->capture_default_str();
    era->add_flag("--fixed-code", fixed_code, "reuse one code for all trials");

    // bench
    auto* ben = app.add_subcommand("bench", "counter measurements across block lengths");
    std::string n_grid = "12,16,20,24";
    ben->add_option("--ell", ell, "column weight")->required();
    ben->add_option("--emm", emm, "row weight")->required();
    ben->add_option("--n-grid", n_grid, "comma list of block lengths")->capture_default_str();
    ben->add_option("--alg", alg, "exhaustive|sw|mb|cs")
        ->check(CLI::IsMember({"exhaustive", "sw", "mb", "cs"}));
    ben->add_option("--theta", theta, "window/covering parameter");

    for (auto* sub : app.get_subcommands({})) sub->fallthrough();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? 0 : kInputError;
    }

    try {
        if (sample->parsed())
            return run_sample(ensemble, ell, emm, n, seed, allow_low, out_path, json_mode);
        if (dist->parsed())
            return run_distance(in_path, alg, theta, d_max, b_cap, seed, threads, json_mode,
                                out_path);
        if (thr->parsed()) return run_thresholds(ell, emm, json_mode, out_path);
        if (fig->parsed()) return run_figure(codes, rate_step, out_path);
        if (era->parsed())
            return run_erasure_sim(ell, emm, n, thetas, trials, seed, fixed_code, json_mode,
                                   out_path);
        if (ben->parsed())
            return run_bench(ell, emm, n_grid, alg, theta, seed, threads, out_path);
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kInputError;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kInternal;
    }
    return kInternal;
}
