#include "jordanlab/report.hpp"

#include <doctest.h>

#include <algorithm>

using namespace jordanlab;

TEST_CASE("formats")
{
    CHECK(parse_format("csv") == Format::csv);
    CHECK_THROWS(parse_format("xml"));
    const DimTable t = solve_weak(2, 3);
    CHECK(format_dims("weak", t, Format::csv) == "n,a_n,b_n\n1,2,0\n2,3,1\n3,6,2\n");
    CHECK(format_dims("weak", t, Format::json) == dim_table_to_json("weak", t) + "\n");
    CHECK(format_dims("weakest", solve_weakest(2, 2), Format::csv) == "n,a_n\n1,2\n2,3\n");
    const std::string md = format_dims("weak", t, Format::md);
    CHECK(md.rfind("| n | a_n | b_n |", 0) == 0);
}

TEST_CASE("character table")
{
    const ConjectureTables t = solve_characters(3, 4);
    const std::string csv = format_chars(t, CharBasis::schur, Format::csv);
    CHECK(csv.find("2,A,2,1\n") != std::string::npos);
    CHECK(csv.find("2,B,\"1,1\",1\n") != std::string::npos);
    CHECK(csv.find("1,B,") == std::string::npos);
    const std::string json = format_chars(t, CharBasis::monomial, Format::json);
    CHECK(json.find("\"monomial\"") != std::string::npos);
}

TEST_CASE("closed and oracle tables")
{
    CHECK(format_closed(2, 6, Format::csv).find("6,36,27,1,0,0") != std::string::npos);
    const auto rows = oracle_table(2, 3);
    CHECK(rows.size() == 3);
    CHECK(rows[2].sj == 6);
    CHECK(format_oracle(rows, Format::csv).rfind("n,dim SJ,dim CJ,dim M,", 0) == 0);
    CHECK(oracle_multilinear(4).cj == 12);
}

TEST_CASE("suites")
{
    VerifyOptions opts;
    CHECK_THROWS_AS(run_suite("nope", opts), std::invalid_argument);
    const auto jac = run_suite("jacobi", opts);
    CHECK(jac.size() == 6);
    CHECK(count_failures(jac) == 0);
    const auto br = run_suite("branching", opts);
    CHECK(count_failures(br) == 0);
    CHECK(std::any_of(br.begin(), br.end(), [](const auto& r) { return r.status == Status::report_only; }));
    opts.d_max = 2;
    opts.n_max = 6;
    opts.threads = 2;
    const auto tables = run_suite("paper-tables", opts);
    CHECK(count_failures(tables) == 0);
    CHECK(format_report(jac, Format::md).find("6 passed, 0 failed, 0 report-only") != std::string::npos);
}
