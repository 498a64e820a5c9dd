#pragma once

#include "jordanlab/char_class.hpp"
#include "jordanlab/char_solver.hpp"
#include "jordanlab/dim_solver.hpp"

#include <string>
#include <vector>

namespace jordanlab {

enum class Format { json, csv, md };
Format parse_format(const std::string& s);

enum class Status { pass, fail, report_only };
std::string status_str(Status s);

/// Where an expected value comes from: a published table or quote, an independent computation, or a
/// trivial identity.
enum class Source { published, derived, trivial };
std::string source_str(Source s);

struct VerificationResult {
    std::string suite;
    std::string case_id;
    std::string expected;
    std::string computed;
    Source source = Source::derived;
    Status status = Status::fail;
    std::string note;
};

struct VerifyOptions {
    int d_max = 4;
    /// 0 keeps each table's full published range.
    int n_max = 0;
    unsigned threads = 1;
    DimCache cache{};
};

const std::vector<std::string>& suite_names();

/// Runs one suite ("paper-tables", "oracle-cross", "branching", "jacobi") or "all".
/// Throws std::invalid_argument for an unknown name.
std::vector<VerificationResult> run_suite(const std::string& suite, const VerifyOptions& opts);

std::size_t count_failures(const std::vector<VerificationResult>& results);

std::string format_report(const std::vector<VerificationResult>& results, Format f);
std::string format_dims(const std::string& form, const DimTable& tbl, Format f);
std::string format_chars(const ConjectureTables& t, CharBasis basis, Format f);
std::string format_closed(int d, int n_max, Format f);

struct OracleRow {
    int n = 0;
    std::size_t sj = 0, cj = 0, inner_cj = 0, inner_sj = 0;
};

std::vector<OracleRow> oracle_table(int d, int n_max);
/// Single row for the multilinear component in d letters.
OracleRow oracle_multilinear(int d);
std::string format_oracle(const std::vector<OracleRow>& rows, Format f);

} // namespace jordanlab
