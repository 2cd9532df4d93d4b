#pragma once

#include <string>
#include <vector>

#include <qbarnes/ratfun.hpp>

namespace qbarnes {

enum class CaseStatus { pass, fail, skipped_singular };
std::string to_string(CaseStatus s);

struct CaseRecord {
    std::string identity;
    std::string params;
    CaseStatus status = CaseStatus::pass;
    std::string lhs;
    std::string rhs;
    std::string residual;
    std::string note;
};

struct ReportSummary {
    std::size_t pass = 0;
    std::size_t fail = 0;
    std::size_t skipped_singular = 0;
    std::size_t total() const { return pass + fail + skipped_singular; }
};

struct Report {
    std::string identity;
    std::vector<CaseRecord> records;

    ReportSummary summary() const;
    bool all_passed() const { return summary().fail == 0; }
    int exit_status() const { return all_passed() ? 0 : 1; }
};

enum class Identity {
    thm1_vs_oracle,
    thm2,
    thm3,
    thm4,
    w_expansion,
    h_recurrence,
    remark1,
    remark3_limit,
};
std::string to_string(Identity id);
Identity identity_from_string(const std::string& s);

/**
 * Parameter ranges for one verification sweep. Cases are enumerated in a
 * fixed order (r ascending, then degree, then h, then alpha tuples
 * lexicographically over alpha_set, then w, then d), so identical configs
 * produce byte-identical reports. Tuples violating a module precondition
 * become skipped-singular records, never crashes.
 */
struct SweepConfig {
    Identity identity = Identity::thm3;
    unsigned n_max = 2;               // degree bound (n or m depending on identity)
    unsigned r_max = 2;
    std::vector<int> h_set;           // absolute weights; empty -> use h_offsets
    std::vector<int> h_offsets{0, 1}; // h = r + offset
    std::vector<long> alpha_set{1};
    std::vector<long> w_set{0};
    std::vector<unsigned long> d_set{1}; // thm2 conductors / thm4 character moduli
    unsigned long p = 3;                 // oracle prime
    long q0 = 0;                         // oracle point; 0 -> 1 + p
    unsigned N_max = 3;                  // oracle levels 1..N_max
    std::string variant = "derived";     // h_recurrence gate: derived | as_printed
};

Report run_sweep(const SweepConfig& config);

/// Reconciliation of the printed low-degree table against the closed form.
enum class Remark1Verdict { exact, sign_flip, mismatch };
std::string to_string(Remark1Verdict v);

struct Remark1Row {
    std::string entry;
    std::string paper_value;
    std::string computed_value;
    Remark1Verdict verdict = Remark1Verdict::mismatch;
    /// Gate: "exact" entries must match exactly, "sign" entries at least up
    /// to sign, "none" entries are informational.
    std::string requirement = "none";
    bool requirement_met() const;
};

std::vector<Remark1Row> remark1_table();

/// JSON: one object {"identity", "records": [...], "summary": {...}};
/// summary carries a "timestamp" field, everything else is deterministic.
std::string report_to_json(const Report& report);
/// CSV columns, fixed order: identity,params,status,lhs,rhs,residual,note.
std::string report_to_csv(const Report& report);
void write_report_file(const Report& report, const std::string& path, const std::string& format);

} // namespace qbarnes
