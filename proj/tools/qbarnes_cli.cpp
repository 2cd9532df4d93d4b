// qbarnes: exact computation of extended Changhee q-Bernoulli numbers,
// Barnes multiple Bernoulli polynomials, and mechanical verification of the
// identities relating them (distribution relation, inversion formula,
// character twists, q->1 limits) against a p-adic Riemann-sum oracle.

#include <qbarnes/barnes.hpp>
#include <qbarnes/characters.hpp>
#include <qbarnes/errors.hpp>
#include <qbarnes/padic.hpp>
#include <qbarnes/qbern.hpp>
#include <qbarnes/report.hpp>

#include <fstream>
#include <iomanip>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

namespace {

using namespace qbarnes;

template <typename T>
std::vector<T> split_list(const std::string& s, const std::string& flag) {
    std::vector<T> out;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (item.empty()) continue;
        try {
            if constexpr (std::is_same_v<T, int>) out.push_back(std::stoi(item));
            else if constexpr (std::is_same_v<T, long>) out.push_back(std::stol(item));
            else out.push_back(static_cast<T>(std::stoul(item)));
        } catch (const std::exception&) {
            throw std::invalid_argument(flag + ": cannot parse '" + item + "'");
        }
    }
    if (out.empty()) throw std::invalid_argument(flag + ": empty list");
    return out;
}

std::vector<BigRat> split_rationals(const std::string& s, const std::string& flag) {
    std::vector<BigRat> out;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (item.empty()) continue;
        out.push_back(BigRat::from_string(item));
    }
    if (out.empty()) throw std::invalid_argument(flag + ": empty list");
    return out;
}

struct SweepFlags {
    std::string identity;
    std::optional<unsigned> n_max;
    std::optional<unsigned> r_max;
    std::string h_set;
    std::string h_offsets;
    std::string alpha_set;
    std::string w_set;
    std::string d_set;
    std::optional<unsigned long> p;
    std::optional<long> q0;
    std::optional<unsigned> N_max;
    std::optional<std::string> variant;
    std::string config_path;
    std::string out_path;
    std::string format = "json";
};

void add_sweep_options(CLI::App* cmd, SweepFlags& f, bool identity_positional) {
    if (identity_positional)
        cmd->add_option("identity", f.identity,
                        "thm1_vs_oracle|thm2|thm3|thm4|w_expansion|h_recurrence|remark1|remark3_limit");
    cmd->add_option("--n-max,--m-max", f.n_max, "degree bound");
    cmd->add_option("--r-max", f.r_max, "number of q-integrations bound");
    cmd->add_option("--h-set", f.h_set, "absolute weights, e.g. 2,3,4");
    cmd->add_option("--h-offset", f.h_offsets, "weights relative to r, e.g. 0,1,2");
    cmd->add_option("--alpha-set", f.alpha_set, "twist values, e.g. 1,2");
    cmd->add_option("--w-set", f.w_set, "integer shifts, e.g. 0,1,3");
    cmd->add_option("--d-set", f.d_set, "conductors (thm2) or character moduli (thm4)");
    cmd->add_option("--p", f.p, "oracle prime");
    cmd->add_option("--q0", f.q0, "oracle evaluation point (default 1+p)");
    cmd->add_option("--N-max", f.N_max, "oracle levels 1..N_max");
    cmd->add_option("--variant", f.variant, "h_recurrence gate: derived|as_printed");
    cmd->add_option("--config", f.config_path, "JSON config file (flags override)");
    cmd->add_option("--out", f.out_path, "report output path");
    cmd->add_option("--format", f.format, "json|csv")->check(CLI::IsMember({"json", "csv"}));
}

SweepConfig build_config(const SweepFlags& f) {
    SweepConfig c;
    std::string identity = f.identity;
    if (!f.config_path.empty()) {
        std::ifstream in(f.config_path);
        if (!in) throw std::invalid_argument("cannot open config file '" + f.config_path + "'");
        nlohmann::json j;
        try {
            in >> j;
        } catch (const nlohmann::json::exception& e) {
            throw std::invalid_argument("config file '" + f.config_path + "': " + e.what());
        }
        if (identity.empty() && j.contains("identity")) identity = j["identity"].get<std::string>();
        if (j.contains("n_max")) c.n_max = j["n_max"].get<unsigned>();
        if (j.contains("m_max")) c.n_max = j["m_max"].get<unsigned>();
        if (j.contains("r_max")) c.r_max = j["r_max"].get<unsigned>();
        if (j.contains("h_set")) c.h_set = j["h_set"].get<std::vector<int>>();
        if (j.contains("h_offsets")) c.h_offsets = j["h_offsets"].get<std::vector<int>>();
        if (j.contains("alpha_set")) c.alpha_set = j["alpha_set"].get<std::vector<long>>();
        if (j.contains("w_set")) c.w_set = j["w_set"].get<std::vector<long>>();
        if (j.contains("d_set")) c.d_set = j["d_set"].get<std::vector<unsigned long>>();
        if (j.contains("p")) c.p = j["p"].get<unsigned long>();
        if (j.contains("q0")) c.q0 = j["q0"].get<long>();
        if (j.contains("N_max")) c.N_max = j["N_max"].get<unsigned>();
        if (j.contains("variant")) c.variant = j["variant"].get<std::string>();
    }
    if (identity.empty())
        throw std::invalid_argument("no identity given (positional argument or config file)");
    c.identity = identity_from_string(identity);
    if (f.n_max) c.n_max = *f.n_max;
    if (f.r_max) c.r_max = *f.r_max;
    if (!f.h_set.empty()) c.h_set = split_list<int>(f.h_set, "--h-set");
    if (!f.h_offsets.empty()) c.h_offsets = split_list<int>(f.h_offsets, "--h-offset");
    if (!f.alpha_set.empty()) c.alpha_set = split_list<long>(f.alpha_set, "--alpha-set");
    if (!f.w_set.empty()) c.w_set = split_list<long>(f.w_set, "--w-set");
    if (!f.d_set.empty()) c.d_set = split_list<unsigned long>(f.d_set, "--d-set");
    if (f.p) c.p = *f.p;
    if (f.q0) c.q0 = *f.q0;
    if (f.N_max) c.N_max = *f.N_max;
    if (f.variant) c.variant = *f.variant;
    return c;
}

int run_sweep_command(const SweepFlags& f) {
    const SweepConfig c = build_config(f);
    const Report report = run_sweep(c);
    const ReportSummary s = report.summary();
    std::cout << report.identity << ": " << s.pass << " pass, " << s.fail << " fail, "
              << s.skipped_singular << " skipped-singular (" << s.total() << " cases)\n";
    for (const auto& rec : report.records) {
        if (rec.status == CaseStatus::fail)
            std::cout << "  FAIL " << rec.params << "\n    lhs = " << rec.lhs
                      << "\n    rhs = " << rec.rhs << "\n";
    }
    if (!f.out_path.empty()) {
        write_report_file(report, f.out_path, f.format);
        std::cout << "report written to " << f.out_path << "\n";
    }
    return report.exit_status();
}

int run_remark1(const std::string& out_path, const std::string& format) {
    const auto rows = remark1_table();
    std::size_t w_entry = 5, w_paper = 11, w_comp = 14;
    for (const auto& r : rows) {
        w_entry = std::max(w_entry, r.entry.size());
        w_paper = std::max(w_paper, r.paper_value.size());
        w_comp = std::max(w_comp, r.computed_value.size());
    }
    std::cout << std::left << std::setw(static_cast<int>(w_entry) + 2) << "entry"
              << std::setw(static_cast<int>(w_paper) + 2) << "paper_value"
              << std::setw(static_cast<int>(w_comp) + 2) << "computed_value"
              << "verdict\n";
    bool ok = true;
    for (const auto& r : rows) {
        std::cout << std::left << std::setw(static_cast<int>(w_entry) + 2) << r.entry
                  << std::setw(static_cast<int>(w_paper) + 2) << r.paper_value
                  << std::setw(static_cast<int>(w_comp) + 2) << r.computed_value
                  << to_string(r.verdict)
                  << (r.requirement == "none" ? "" : " [required: " + r.requirement + "]") << "\n";
        ok = ok && r.requirement_met();
    }
    if (!out_path.empty()) {
        Report rep{"remark1", {}};
        for (const auto& r : rows) {
            CaseRecord rec;
            rec.identity = "remark1";
            rec.params = r.entry + " requirement=" + r.requirement;
            rec.lhs = r.computed_value;
            rec.rhs = r.paper_value;
            rec.residual = to_string(r.verdict);
            rec.note = "verdict=" + to_string(r.verdict);
            rec.status = r.requirement_met() ? CaseStatus::pass : CaseStatus::fail;
            rep.records.push_back(std::move(rec));
        }
        write_report_file(rep, out_path, format);
        std::cout << "report written to " << out_path << "\n";
    }
    return ok ? 0 : 1;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact q-Bernoulli / Barnes-Bernoulli calculator and identity verifier"};
    app.require_subcommand(1);
    // --h is a domain flag (the weight), so help is --help only
    app.set_help_flag("--help", "print help");

    // beta
    struct {
        unsigned n = 0;
        int h = 1;
        std::string alphas = "1";
        std::string w = "0";
        unsigned long s = 1;
    } bf;
    auto* beta_cmd = app.add_subcommand("beta", "print beta_n^{(h,r)}(w, q^s | alphas)");
    beta_cmd->set_help_flag("--help", "print help");
    beta_cmd->add_option("--n", bf.n, "degree")->required();
    beta_cmd->add_option("--h", bf.h, "weight")->required();
    beta_cmd->add_option("--alphas", bf.alphas, "comma-separated twists")->required();
    beta_cmd->add_option("--w", bf.w, "shift (integer or a/b with s*w integral)");
    beta_cmd->add_option("--s", bf.s, "base power: the variable is q^s");

    // moment
    unsigned moment_m = 0;
    auto* moment_cmd = app.add_subcommand("moment", "print the m-th basic q-moment");
    moment_cmd->add_option("--m", moment_m, "degree")->required();

    // barnes
    struct {
        unsigned n = 0;
        std::string weights = "1";
        std::string x = "0";
    } gf;
    auto* barnes_cmd = app.add_subcommand("barnes", "print B_n^{(r)}(x | weights)");
    barnes_cmd->add_option("--n", gf.n, "degree")->required();
    barnes_cmd->add_option("--weights", gf.weights, "comma-separated nonzero rationals")->required();
    barnes_cmd->add_option("--x", gf.x, "argument (rational)");

    // chi-beta
    struct {
        unsigned m = 0;
        int h = 1;
        std::string alphas = "1";
        unsigned long mod = 1;
        unsigned long index = 0;
        std::string dump_chi;
    } cf;
    auto* chi_cmd = app.add_subcommand("chi-beta", "print the character-twisted number");
    chi_cmd->set_help_flag("--help", "print help");
    chi_cmd->add_option("--m", cf.m, "degree")->required();
    chi_cmd->add_option("--h", cf.h, "weight")->required();
    chi_cmd->add_option("--alphas", cf.alphas, "comma-separated twists")->required();
    chi_cmd->add_option("--chi-mod", cf.mod, "character modulus d")->required();
    chi_cmd->add_option("--chi-index", cf.index, "index in the enumeration chi_{d}_{index}");
    chi_cmd->add_option("--dump-chi", cf.dump_chi, "write the character value table as JSON");

    // verify / oracle
    SweepFlags vf, of;
    auto* verify_cmd = app.add_subcommand("verify", "run an identity-verification sweep");
    add_sweep_options(verify_cmd, vf, true);
    auto* oracle_cmd =
        app.add_subcommand("oracle", "run a p-adic oracle sweep (thm1_vs_oracle or thm4)");
    add_sweep_options(oracle_cmd, of, true);

    // report-remark1
    std::string r1_out, r1_format = "json";
    auto* r1_cmd = app.add_subcommand("report-remark1",
                                      "reconcile the printed low-degree values (sign typos)");
    r1_cmd->add_option("--out", r1_out, "report output path");
    r1_cmd->add_option("--format", r1_format, "json|csv")->check(CLI::IsMember({"json", "csv"}));

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (app.got_subcommand(beta_cmd)) {
            BetaParams p{bf.n, bf.h, split_list<long>(bf.alphas, "--alphas"),
                         BigRat::from_string(bf.w), bf.s};
            std::cout << beta(p).to_string() << "\n";
            return 0;
        }
        if (app.got_subcommand(moment_cmd)) {
            std::cout << moment(moment_m).to_string() << "\n";
            return 0;
        }
        if (app.got_subcommand(barnes_cmd)) {
            BarnesParams p;
            p.n = gf.n;
            p.weights = split_rationals(gf.weights, "--weights");
            p.x = BigRat::from_string(gf.x);
            std::cout << barnes_poly(p).to_string() << "\n";
            return 0;
        }
        if (app.got_subcommand(chi_cmd)) {
            const auto chars = enumerate_characters(cf.mod);
            if (cf.index >= chars.size())
                throw std::invalid_argument("--chi-index: only " + std::to_string(chars.size()) +
                                            " characters mod " + std::to_string(cf.mod));
            const auto& chi = chars[cf.index];
            if (!cf.dump_chi.empty()) {
                nlohmann::ordered_json j;
                j["name"] = "chi_" + std::to_string(cf.mod) + "_" + std::to_string(cf.index);
                j["modulus"] = chi.modulus();
                j["order"] = chi.order();
                nlohmann::ordered_json table;
                for (unsigned long a = 0; a < chi.modulus(); ++a) {
                    const auto e = chi.exponent(a);
                    if (e) table[std::to_string(a)] = *e;
                    else table[std::to_string(a)] = nullptr;
                }
                j["values"] = table;
                std::ofstream out(cf.dump_chi);
                if (!out) throw Error("cannot open '" + cf.dump_chi + "' for writing");
                out << j.dump(2) << "\n";
            }
            const CycloElem v = beta_chi(cf.m, cf.h, split_list<long>(cf.alphas, "--alphas"), chi);
            std::cout << v.to_string() << "\n";
            return 0;
        }
        if (app.got_subcommand(verify_cmd)) return run_sweep_command(vf);
        if (app.got_subcommand(oracle_cmd)) {
            if (of.identity.empty()) of.identity = "thm1_vs_oracle";
            if (of.identity != "thm1_vs_oracle" && of.identity != "thm4")
                throw std::invalid_argument("oracle: identity must be thm1_vs_oracle or thm4");
            return run_sweep_command(of);
        }
        if (app.got_subcommand(r1_cmd)) return run_remark1(r1_out, r1_format);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
