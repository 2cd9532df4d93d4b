// Drives the installed CLI binary (path in argv[1]) and checks the
// documented exit-code and output contract.

#include <sys/wait.h>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

namespace {

int failures = 0;

struct RunResult {
    int exit_code = -1;
    std::string out;
};

std::string shell_quote(const std::string& s) {
    return "'" + s + "'";
}

RunResult run(const std::string& binary, const std::string& args) {
    const std::string out_path = "/tmp/qbarnes_cli_driver_out.txt";
    const std::string cmd = shell_quote(binary) + " " + args + " > " + out_path + " 2>&1";
    const int status = std::system(cmd.c_str());
    RunResult r;
    r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    std::ifstream in(out_path);
    std::stringstream ss;
    ss << in.rdbuf();
    r.out = ss.str();
    return r;
}

void expect(bool cond, const std::string& what) {
    if (!cond) {
        std::cerr << "[FAIL] " << what << "\n";
        ++failures;
    } else {
        std::cout << "[ ok ] " << what << "\n";
    }
}

std::string strip_timestamp(std::string s) {
    const auto pos = s.find("\"timestamp\"");
    if (pos == std::string::npos) return s;
    const auto end = s.find('\n', pos);
    s.erase(pos, end - pos);
    return s;
}

std::string slurp(const std::string& path) {
    std::ifstream in(path);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

} // namespace

int main(int argc, char** argv) {
    if (argc < 2) {
        std::cerr << "usage: qbarnes_cli_driver <path-to-qbarnes>\n";
        return 2;
    }
    const std::string bin = argv[1];

    // canonical single values
    auto r = run(bin, "beta --n 0 --h 2 --alphas 1 --w 0");
    expect(r.exit_code == 0 && r.out == "2/(q + 1)\n", "beta prints 2/(q + 1)");

    r = run(bin, "beta --n 1 --h 2 --alphas 1 --w 0");
    expect(r.exit_code == 0 && r.out == "(-2*q - 1)/(q^3 + 2*q^2 + 2*q + 1)\n",
           "beta_1^{(2,1)} carries the corrected sign");

    r = run(bin, "moment --m 1");
    expect(r.exit_code == 0 && r.out == "-1/(q + 1)\n", "moment prints -1/(q + 1)");

    r = run(bin, "barnes --n 1 --weights 1 --x 0");
    expect(r.exit_code == 0 && r.out == "-1/2\n", "barnes prints B_1 = -1/2");

    r = run(bin, "chi-beta --m 0 --h 1 --alphas 1 --chi-mod 3 --chi-index 1 --dump-chi /tmp/chi31.json");
    expect(r.exit_code == 0 && r.out == "((-q^2 + q)/(q^2 + q + 1)) mod Phi_2(z)\n",
           "chi-beta prints the mod-3 twisted number");
    const std::string chi_json = slurp("/tmp/chi31.json");
    expect(chi_json.find("\"name\": \"chi_3_1\"") != std::string::npos &&
               chi_json.find("\"0\": null") != std::string::npos &&
               chi_json.find("\"2\": 1") != std::string::npos,
           "character table serializes residues to exponent-or-null");

    // verify: passing sweep writes a report, exit 0
    r = run(bin, "verify thm3 --m-max 2 --r-max 1 --alpha-set 1 --h-set 1,2 --out /tmp/qb_r1.json");
    expect(r.exit_code == 0, "verify thm3 exits 0");
    r = run(bin, "verify thm3 --m-max 2 --r-max 1 --alpha-set 1 --h-set 1,2 --out /tmp/qb_r2.json");
    expect(strip_timestamp(slurp("/tmp/qb_r1.json")) == strip_timestamp(slurp("/tmp/qb_r2.json")),
           "identical config gives byte-identical reports modulo timestamp");

    r = run(bin, "verify thm3 --m-max 1 --r-max 1 --alpha-set 1 --h-set 1 --format csv --out /tmp/qb_r3.csv");
    expect(r.exit_code == 0 &&
               slurp("/tmp/qb_r3.csv").rfind("identity,params,status,lhs,rhs,residual,note", 0) == 0,
           "CSV report has the documented column order");

    // config file + flag override
    {
        std::ofstream cfg("/tmp/qb_cfg.json");
        cfg << R"({"identity": "thm3", "m_max": 1, "r_max": 1, "alpha_set": [1], "h_set": [0]})";
    }
    // with h=0 from the config both cases are singular; the flag unskips them
    r = run(bin, "verify --config /tmp/qb_cfg.json");
    expect(r.exit_code == 0 && r.out.find("0 pass, 0 fail, 2 skipped-singular") != std::string::npos,
           "config file drives the sweep");
    r = run(bin, "verify --config /tmp/qb_cfg.json --h-set 2");
    expect(r.exit_code == 0 && r.out.find("2 pass, 0 fail, 0 skipped-singular") != std::string::npos,
           "flags override config values");

    // failing sweep: the as-printed recurrence variant is wrong -> exit 1
    r = run(bin, "verify h_recurrence --m-max 1 --r-max 1 --h-set 2 --variant as_printed");
    expect(r.exit_code == 1 && r.out.find("FAIL") != std::string::npos,
           "as-printed recurrence variant fails with exit 1");

    // singular parameters on direct value commands are config errors
    r = run(bin, "beta --n 1 --h 0 --alphas 1 --w 0");
    expect(r.exit_code == 2 && r.out.find("singular factor") != std::string::npos,
           "singular beta parameters exit 2 with the offending indices");

    // usage errors
    r = run(bin, "beta --n 1 --alphas 1");
    expect(r.exit_code == 2, "missing required flag exits 2");
    r = run(bin, "verify thm5");
    expect(r.exit_code == 2, "unknown identity exits 2");
    r = run(bin, "no-such-command");
    expect(r.exit_code == 2, "unknown subcommand exits 2");
    r = run(bin, "oracle thm2");
    expect(r.exit_code == 2, "oracle restricted to the p-adic identities");

    // oracle smoke runs (small levels)
    r = run(bin, "oracle thm1_vs_oracle --n-max 1 --r-max 1 --alpha-set 1 --h-offset 0 --w-set 0 --N-max 3");
    expect(r.exit_code == 0, "thm1 oracle ladder passes at small parameters");
    r = run(bin, "oracle thm4 --m-max 1 --r-max 1 --alpha-set 1 --h-set 1 --d-set 3 --p 7 --N-max 2");
    expect(r.exit_code == 0, "thm4 oracle ladder passes for the mod-3 characters");

    // remark1 table on stdout
    r = run(bin, "report-remark1");
    expect(r.exit_code == 0 && r.out.find("sign-flip") != std::string::npos &&
               r.out.find("mismatch") == std::string::npos,
           "remark1 report classifies sign flips and finds no mismatches");

    if (failures == 0) std::cout << "cli contract: all checks passed\n";
    return failures == 0 ? 0 : 1;
}
