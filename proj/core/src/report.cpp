#include <qbarnes/report.hpp>

#include <qbarnes/barnes.hpp>
#include <qbarnes/characters.hpp>
#include <qbarnes/errors.hpp>
#include <qbarnes/padic.hpp>
#include <qbarnes/qbern.hpp>

#include <chrono>
#include <ctime>
#include <fstream>
#include <functional>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace qbarnes {

std::string to_string(CaseStatus s) {
    switch (s) {
        case CaseStatus::pass: return "pass";
        case CaseStatus::fail: return "fail";
        case CaseStatus::skipped_singular: return "skipped-singular";
    }
    return "?";
}

std::string to_string(Identity id) {
    switch (id) {
        case Identity::thm1_vs_oracle: return "thm1_vs_oracle";
        case Identity::thm2: return "thm2";
        case Identity::thm3: return "thm3";
        case Identity::thm4: return "thm4";
        case Identity::w_expansion: return "w_expansion";
        case Identity::h_recurrence: return "h_recurrence";
        case Identity::remark1: return "remark1";
        case Identity::remark3_limit: return "remark3_limit";
    }
    return "?";
}

Identity identity_from_string(const std::string& s) {
    for (const auto id : {Identity::thm1_vs_oracle, Identity::thm2, Identity::thm3, Identity::thm4,
                          Identity::w_expansion, Identity::h_recurrence, Identity::remark1,
                          Identity::remark3_limit}) {
        if (to_string(id) == s) return id;
    }
    throw std::invalid_argument("unknown identity '" + s + "'");
}

std::string to_string(Remark1Verdict v) {
    switch (v) {
        case Remark1Verdict::exact: return "exact";
        case Remark1Verdict::sign_flip: return "sign-flip";
        case Remark1Verdict::mismatch: return "mismatch";
    }
    return "?";
}

ReportSummary Report::summary() const {
    ReportSummary s;
    for (const auto& r : records) {
        if (r.status == CaseStatus::pass) ++s.pass;
        if (r.status == CaseStatus::fail) ++s.fail;
        if (r.status == CaseStatus::skipped_singular) ++s.skipped_singular;
    }
    return s;
}

namespace {

std::vector<int> resolve_h(const SweepConfig& c, unsigned r) {
    if (!c.h_set.empty()) return c.h_set;
    std::vector<int> hs;
    hs.reserve(c.h_offsets.size());
    for (const int off : c.h_offsets) hs.push_back(static_cast<int>(r) + off);
    return hs;
}

// Lexicographic enumeration of alpha_set^r (first coordinate slowest).
void for_each_alpha_tuple(const std::vector<long>& set, unsigned r,
                          const std::function<void(const std::vector<long>&)>& fn) {
    std::vector<std::size_t> idx(r, 0);
    std::vector<long> tuple(r);
    while (true) {
        for (unsigned i = 0; i < r; ++i) tuple[i] = set[idx[i]];
        fn(tuple);
        std::size_t pos = r;
        while (pos > 0 && ++idx[pos - 1] == set.size()) idx[--pos] = 0;
        if (pos == 0) break;
    }
}

std::string alphas_to_string(const std::vector<long>& alphas) {
    std::string a = "[";
    for (std::size_t i = 0; i < alphas.size(); ++i) {
        if (i) a += ",";
        a += std::to_string(alphas[i]);
    }
    return a + "]";
}

std::string valuation_ladder_to_string(const OracleReport& rep) {
    std::string out = "[";
    for (std::size_t i = 0; i < rep.rows.size(); ++i) {
        if (i) out += ", ";
        out += rep.rows[i].exact_zero ? "inf" : std::to_string(rep.rows[i].residual_valuation);
    }
    return out + "]";
}

using CaseBody = std::function<void(CaseRecord&)>;

// Runs one case, mapping singular preconditions to skipped-singular and any
// other computation error (pole, exhausted precision) to an honest failure.
void run_case(Report& report, const std::string& params, const CaseBody& body) {
    CaseRecord rec;
    rec.identity = report.identity;
    rec.params = params;
    try {
        body(rec);
    } catch (const SingularFactorError& e) {
        rec.status = CaseStatus::skipped_singular;
        rec.note = e.what();
        rec.lhs = rec.rhs = rec.residual = "";
    } catch (const Error& e) {
        rec.status = CaseStatus::fail;
        rec.note = e.what();
    }
    report.records.push_back(std::move(rec));
}

void equality_case(CaseRecord& rec, const RatFun& lhs, const RatFun& rhs) {
    rec.lhs = lhs.to_string();
    rec.rhs = rhs.to_string();
    rec.residual = (lhs - rhs).to_string();
    rec.status = lhs == rhs ? CaseStatus::pass : CaseStatus::fail;
}

Report sweep_thm2(const SweepConfig& c) {
    Report report{to_string(Identity::thm2), {}};
    for (unsigned r = 1; r <= c.r_max; ++r) {
        for (unsigned n = 0; n <= c.n_max; ++n) {
            for (const int h : resolve_h(c, r)) {
                for_each_alpha_tuple(c.alpha_set, r, [&](const std::vector<long>& alphas) {
                    for (const long w : c.w_set) {
                        for (const unsigned long d : c.d_set) {
                            BetaParams p{n, h, alphas, BigRat(w), 1};
                            run_case(report, p.to_string() + " d=" + std::to_string(d),
                                     [&](CaseRecord& rec) {
                                         equality_case(rec, beta(p), theorem2_rhs(p, d));
                                     });
                        }
                    }
                });
            }
        }
    }
    return report;
}

Report sweep_thm3(const SweepConfig& c) {
    Report report{to_string(Identity::thm3), {}};
    for (unsigned r = 1; r <= c.r_max; ++r) {
        for (unsigned m = 0; m <= c.n_max; ++m) {
            for (const int h : resolve_h(c, r)) {
                for_each_alpha_tuple(c.alpha_set, r, [&](const std::vector<long>& alphas) {
                    const std::string params = "m=" + std::to_string(m) + " h=" + std::to_string(h) +
                                               " r=" + std::to_string(r) +
                                               " alphas=" + alphas_to_string(alphas);
                    run_case(report, params, [&](CaseRecord& rec) {
                        equality_case(rec, theorem3_lhs(m, h, alphas), theorem3_rhs(m, h, alphas));
                    });
                });
            }
        }
    }
    return report;
}

Report sweep_w_expansion(const SweepConfig& c) {
    Report report{to_string(Identity::w_expansion), {}};
    for (unsigned r = 1; r <= c.r_max; ++r) {
        for (unsigned n = 0; n <= c.n_max; ++n) {
            for (const int h : resolve_h(c, r)) {
                for_each_alpha_tuple(c.alpha_set, r, [&](const std::vector<long>& alphas) {
                    for (const long w : c.w_set) {
                        BetaParams p{n, h, alphas, BigRat(w), 1};
                        run_case(report, p.to_string(), [&](CaseRecord& rec) {
                            equality_case(rec, beta_w_expansion(n, h, alphas, w), beta(p));
                        });
                    }
                });
            }
        }
    }
    return report;
}

Report sweep_h_recurrence(const SweepConfig& c) {
    Report report{to_string(Identity::h_recurrence), {}};
    const bool gate_derived = c.variant != "as_printed";
    for (unsigned r = 1; r <= c.r_max; ++r) {
        for (unsigned m = 0; m <= c.n_max; ++m) {
            for (const int h : resolve_h(c, r)) {
                const std::string params = "m=" + std::to_string(m) + " h=" + std::to_string(h) +
                                           " r=" + std::to_string(r) +
                                           " variant=" + (gate_derived ? "derived" : "as_printed");
                run_case(report, params, [&](CaseRecord& rec) {
                    const HRecurrenceReport hr = verify_h_recurrence(m, h, r);
                    const std::vector<long> ones(r, 1L);
                    const RatFun lhs = beta(BetaParams{m, h, ones, BigRat(0L), 1});
                    const RatFun& res = gate_derived ? hr.derived_residual : hr.as_printed_residual;
                    rec.lhs = lhs.to_string();
                    rec.rhs = (lhs - res).to_string();
                    rec.residual = res.to_string();
                    rec.status = (gate_derived ? hr.derived_holds : hr.as_printed_holds)
                                     ? CaseStatus::pass
                                     : CaseStatus::fail;
                    rec.note = std::string("derived_holds=") + (hr.derived_holds ? "true" : "false") +
                               " as_printed_holds=" + (hr.as_printed_holds ? "true" : "false") +
                               " as_printed_residual=" + hr.as_printed_residual.to_string();
                });
            }
        }
    }
    return report;
}

Report sweep_remark3_limit(const SweepConfig& c) {
    Report report{to_string(Identity::remark3_limit), {}};
    for (unsigned r = 1; r <= c.r_max; ++r) {
        for (unsigned n = 0; n <= c.n_max; ++n) {
            for (const int h : resolve_h(c, r)) {
                for_each_alpha_tuple(c.alpha_set, r, [&](const std::vector<long>& alphas) {
                    for (const long w : c.w_set) {
                        BetaParams p{n, h, alphas, BigRat(w), 1};
                        run_case(report, p.to_string(), [&](CaseRecord& rec) {
                            const BigRat lim = limit_q1(beta(p));
                            BarnesParams bp;
                            bp.n = n;
                            bp.weights.clear();
                            for (const long a : alphas) bp.weights.emplace_back(a);
                            bp.x = BigRat(w);
                            const BigRat barnes_val = barnes_poly(bp);
                            rec.lhs = lim.to_string();
                            rec.rhs = barnes_val.to_string();
                            rec.residual = (lim - barnes_val).to_string();
                            rec.status =
                                lim == barnes_val ? CaseStatus::pass : CaseStatus::fail;
                        });
                    }
                });
            }
        }
    }
    return report;
}

Report sweep_thm1_vs_oracle(const SweepConfig& c) {
    Report report{to_string(Identity::thm1_vs_oracle), {}};
    const long q0 = c.q0 != 0 ? c.q0 : static_cast<long>(c.p) + 1;

    // Total-mass anchor: the n=0, h=1, d=1 level sums must equal 1 exactly.
    {
        CaseRecord rec;
        rec.identity = report.identity;
        rec.params = "mass-check n=0 h=1 r=1 alphas=[1] w=0 d=1 p=" + std::to_string(c.p) +
                     " q0=" + std::to_string(q0) + " N=1.." + std::to_string(c.N_max);
        rec.lhs = "1";
        rec.rhs = "S_N";
        bool all_exact = true;
        std::string ladder = "[";
        for (unsigned N = 1; N <= c.N_max; ++N) {
            OracleJob job{c.p, mpz_class(q0), 1, N, BetaParams{0, 1, {1}, BigRat(0L), 1}, {}};
            const PadicApprox s = riemann_sum(job);
            const PadicApprox res = s - PadicApprox::from_integer(1, c.p, oracle_working_precision(job));
            const bool exact = res.is_zero();
            all_exact = all_exact && exact;
            if (N > 1) ladder += ", ";
            ladder += exact ? "0" : ("p^" + std::to_string(res.valuation()));
        }
        rec.residual = ladder + "]";
        rec.status = all_exact ? CaseStatus::pass : CaseStatus::fail;
        report.records.push_back(std::move(rec));
    }

    for (unsigned r = 1; r <= c.r_max; ++r) {
        for (unsigned n = 0; n <= c.n_max; ++n) {
            for (const int h : resolve_h(c, r)) {
                for_each_alpha_tuple(c.alpha_set, r, [&](const std::vector<long>& alphas) {
                    for (const long w : c.w_set) {
                        BetaParams p{n, h, alphas, BigRat(w), 1};
                        const std::string params = p.to_string() + " p=" + std::to_string(c.p) +
                                                   " q0=" + std::to_string(q0) + " N=1.." +
                                                   std::to_string(c.N_max);
                        run_case(report, params, [&](CaseRecord& rec) {
                            const RatFun closed = beta(p);
                            OracleJob base{c.p, mpz_class(q0), 1, 1, p, {}};
                            const OracleReport orep =
                                oracle_compare(closed, job_ladder(base, c.N_max));
                            rec.lhs = closed.to_string();
                            rec.rhs = "p-adic Riemann sums at q0=" + std::to_string(q0);
                            rec.residual = "v_" + std::to_string(c.p) +
                                           "(residual) = " + valuation_ladder_to_string(orep);
                            rec.note = oracle_rows_json(orep);
                            rec.status = orep.pass ? CaseStatus::pass : CaseStatus::fail;
                        });
                    }
                });
            }
        }
    }
    return report;
}

Report sweep_thm4(const SweepConfig& c) {
    Report report{to_string(Identity::thm4), {}};
    const long q0 = c.q0 != 0 ? c.q0 : static_cast<long>(c.p) + 1;
    for (const unsigned long d : c.d_set) {
        const auto chars = enumerate_characters(d);
        for (std::size_t ci = 0; ci < chars.size(); ++ci) {
            const auto& chi = chars[ci];
            const std::string chi_name = "chi_" + std::to_string(d) + "_" + std::to_string(ci);
            for (unsigned r = 1; r <= c.r_max; ++r) {
                for (unsigned m = 0; m <= c.n_max; ++m) {
                    for (const int h : resolve_h(c, r)) {
                        for_each_alpha_tuple(c.alpha_set, r, [&](const std::vector<long>& alphas) {
                            const std::string params =
                                "m=" + std::to_string(m) + " h=" + std::to_string(h) +
                                " r=" + std::to_string(r) + " alphas=" + alphas_to_string(alphas) +
                                " chi=" + chi_name;
                            if (d == 1) {
                                run_case(report, params + " (symbolic reduction)",
                                         [&](CaseRecord& rec) {
                                             const RatFun lhs =
                                                 beta_chi(m, h, alphas, chi).as_ratfun();
                                             const RatFun rhs =
                                                 beta(BetaParams{m, h, alphas, BigRat(0L), 1});
                                             equality_case(rec, lhs, rhs);
                                         });
                            } else {
                                run_case(report,
                                         params + " p=" + std::to_string(c.p) + " q0=" +
                                             std::to_string(q0) + " N=1.." + std::to_string(c.N_max),
                                         [&](CaseRecord& rec) {
                                             const CycloElem closed = beta_chi(m, h, alphas, chi);
                                             OracleJob base{c.p, mpz_class(q0), d, 1,
                                                            BetaParams{m, h, alphas, BigRat(0L), 1},
                                                            chi};
                                             const OracleReport orep = oracle_compare(
                                                 closed, job_ladder(base, c.N_max));
                                             rec.lhs = closed.to_string();
                                             rec.rhs = "character-weighted Riemann sums at q0=" +
                                                       std::to_string(q0);
                                             rec.residual =
                                                 "v_" + std::to_string(c.p) + "(residual) = " +
                                                 valuation_ladder_to_string(orep);
                                             rec.note = oracle_rows_json(orep);
                                             rec.status = orep.pass ? CaseStatus::pass
                                                                    : CaseStatus::fail;
                                         });
                            }
                        });
                    }
                }
            }
        }
    }
    return report;
}

Report sweep_remark1() {
    Report report{to_string(Identity::remark1), {}};
    for (const auto& row : remark1_table()) {
        CaseRecord rec;
        rec.identity = report.identity;
        rec.params = row.entry + " requirement=" + row.requirement;
        rec.lhs = row.computed_value;
        rec.rhs = row.paper_value;
        rec.residual = to_string(row.verdict);
        rec.note = "verdict=" + to_string(row.verdict);
        rec.status = row.requirement_met() ? CaseStatus::pass : CaseStatus::fail;
        report.records.push_back(std::move(rec));
    }
    return report;
}

} // namespace

Report run_sweep(const SweepConfig& config) {
    if (config.r_max < 1) throw std::invalid_argument("sweep: r_max must be >= 1");
    if (config.alpha_set.empty()) throw std::invalid_argument("sweep: empty alpha set");
    if (config.w_set.empty()) throw std::invalid_argument("sweep: empty w set");
    if (config.d_set.empty()) throw std::invalid_argument("sweep: empty d set");
    if (config.h_set.empty() && config.h_offsets.empty())
        throw std::invalid_argument("sweep: no weights (h_set and h_offsets both empty)");
    if (config.variant != "derived" && config.variant != "as_printed")
        throw std::invalid_argument("sweep: variant must be derived or as_printed");
    switch (config.identity) {
        case Identity::thm1_vs_oracle: return sweep_thm1_vs_oracle(config);
        case Identity::thm2: return sweep_thm2(config);
        case Identity::thm3: return sweep_thm3(config);
        case Identity::thm4: return sweep_thm4(config);
        case Identity::w_expansion: return sweep_w_expansion(config);
        case Identity::h_recurrence: return sweep_h_recurrence(config);
        case Identity::remark1: return sweep_remark1();
        case Identity::remark3_limit: return sweep_remark3_limit(config);
    }
    throw std::invalid_argument("run_sweep: unknown identity");
}

bool Remark1Row::requirement_met() const {
    if (requirement == "exact") return verdict == Remark1Verdict::exact;
    if (requirement == "sign") return verdict != Remark1Verdict::mismatch;
    return true;
}

namespace {

Remark1Verdict classify(const RatFun& computed, const RatFun& paper) {
    if (computed == paper) return Remark1Verdict::exact;
    if (computed == -paper) return Remark1Verdict::sign_flip;
    return Remark1Verdict::mismatch;
}

Remark1Row make_row(std::string entry, const RatFun& computed, const RatFun& paper,
                    std::string requirement) {
    Remark1Row row;
    row.entry = std::move(entry);
    row.paper_value = paper.to_string();
    row.computed_value = computed.to_string();
    row.verdict = classify(computed, paper);
    row.requirement = std::move(requirement);
    return row;
}

RatFun beta_n_h_r(unsigned n, int h, unsigned r) {
    return beta(BetaParams{n, h, std::vector<long>(r, 1L), BigRat(0L), 1});
}

} // namespace

std::vector<Remark1Row> remark1_table() {
    std::vector<Remark1Row> rows;
    const RatFun one(1L);
    const RatFun q = RatFun::q_power(1);
    auto brk = [](long k) { return q_int(BigRat(k)); };

    rows.push_back(make_row("beta_0^{(2,1)}(q|1)", beta_n_h_r(0, 2, 1), RatFun(2L) / brk(2),
                            "exact"));
    for (int h = 1; h <= 6; ++h) {
        rows.push_back(make_row("beta_0^{(" + std::to_string(h) + ",1)}(q|1)",
                                beta_n_h_r(0, h, 1), RatFun(BigRat(h)) / brk(h), "exact"));
    }
    rows.push_back(make_row("beta_0^{(2,2)}(q|1,1)", beta_n_h_r(0, 2, 2),
                            RatFun(2L) / (brk(2) * brk(1)), "exact"));
    rows.push_back(make_row("beta_1^{(2,1)}(q|1)", beta_n_h_r(1, 2, 1),
                            (RatFun(2L) * q + one) / (brk(2) * brk(3)), "sign"));
    rows.push_back(make_row("beta_2^{(2,1)}(q|1)", beta_n_h_r(2, 2, 1),
                            RatFun(2L) * q * q / (brk(3) * brk(4)), "none"));
    rows.push_back(make_row("beta_3^{(2,1)}(q|1)", beta_n_h_r(3, 2, 1),
                            -(q * q * (q - one) * (RatFun(2L) * brk(3) + q)) /
                                (brk(3) * brk(4) * brk(5)),
                            "none"));
    for (int h = 2; h <= 5; ++h) {
        RatFun num;
        for (int k = 0; k < h; ++k) num += RatFun::q_power(k) * brk(h - k);
        rows.push_back(make_row("beta_1^{(" + std::to_string(h) + ",1)}(q|1)",
                                beta_n_h_r(1, h, 1), -num / (brk(h) * brk(h + 1)), "none"));
    }
    rows.push_back(make_row("beta_1^{(2,2)}(q|1,1)", beta_n_h_r(1, 2, 2),
                            -(RatFun(2L) * (q + RatFun(2L))) / (brk(2) * brk(3)), "none"));
    rows.push_back(make_row("beta_2^{(2,2)}(q|1,1)", beta_n_h_r(2, 2, 2),
                            -(RatFun(2L) * ((q - one) * (q - one) + RatFun(5L) * q)) /
                                (brk(3) * brk(4)),
                            "none"));
    for (unsigned r = 1; r <= 4; ++r) {
        RatFun den(1L);
        for (unsigned k = 1; k <= r; ++k) den *= brk(static_cast<long>(k));
        rows.push_back(make_row("beta_0^{(" + std::to_string(r) + "," + std::to_string(r) +
                                    ")}(q|1^" + std::to_string(r) + ")",
                                beta_n_h_r(0, static_cast<int>(r), r),
                                -RatFun(BigRat::factorial(r)) / den, "sign"));
    }
    return rows;
}

namespace {

std::string iso8601_now() {
    const auto now = std::chrono::system_clock::now();
    const std::time_t t = std::chrono::system_clock::to_time_t(now);
    char buf[32];
    std::tm tm{};
    gmtime_r(&t, &tm);
    std::strftime(buf, sizeof(buf), "%Y-%m-%dT%H:%M:%SZ", &tm);
    return buf;
}

std::string csv_escape(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string out = "\"";
    for (const char c : s) {
        if (c == '"') out += "\"\"";
        else out += c;
    }
    return out + "\"";
}

} // namespace

std::string report_to_json(const Report& report) {
    nlohmann::ordered_json j;
    j["identity"] = report.identity;
    j["records"] = nlohmann::ordered_json::array();
    for (const auto& r : report.records) {
        nlohmann::ordered_json rec;
        rec["identity"] = r.identity;
        rec["params"] = r.params;
        rec["status"] = to_string(r.status);
        rec["lhs"] = r.lhs;
        rec["rhs"] = r.rhs;
        rec["residual"] = r.residual;
        rec["note"] = r.note;
        j["records"].push_back(std::move(rec));
    }
    const ReportSummary s = report.summary();
    j["summary"] = {{"pass", s.pass},
                    {"fail", s.fail},
                    {"skipped_singular", s.skipped_singular},
                    {"total", s.total()},
                    {"exit_status", report.exit_status()},
                    {"timestamp", iso8601_now()}};
    return j.dump(2) + "\n";
}

std::string report_to_csv(const Report& report) {
    std::string out = "identity,params,status,lhs,rhs,residual,note\n";
    for (const auto& r : report.records) {
        out += csv_escape(r.identity) + "," + csv_escape(r.params) + "," +
               csv_escape(to_string(r.status)) + "," + csv_escape(r.lhs) + "," +
               csv_escape(r.rhs) + "," + csv_escape(r.residual) + "," + csv_escape(r.note) + "\n";
    }
    return out;
}

void write_report_file(const Report& report, const std::string& path, const std::string& format) {
    std::ofstream out(path);
    if (!out) throw Error("cannot open report file '" + path + "' for writing");
    out << (format == "csv" ? report_to_csv(report) : report_to_json(report));
    if (!out) throw Error("failed while writing report file '" + path + "'");
}

} // namespace qbarnes
