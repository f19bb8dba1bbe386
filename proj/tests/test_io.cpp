#include "doctest.h"

#include "hera/io.hpp"

#include <sstream>

using namespace hera;

TEST_CASE("matrix round-trips through the file format") {
    Field f9 = FieldSpec::make_default(3, 2);
    FieldMatrix m = FieldMatrix::from_rows(f9, {{0, 8, 3}, {5, 1, 2}});
    std::ostringstream os;
    write_matrix(os, m);
    std::string text = os.str();
    CHECK(text.find("# field 3,2,221") == 0);
    CHECK(text.find("2,3\n") != std::string::npos);
    std::istringstream is(text);
    CHECK(read_matrix(is, f9) == m);
}

TEST_CASE("matrix reader tolerates comments and blank lines") {
    Field f4 = FieldSpec::make_default(2, 2);
    std::istringstream is("# a comment\n\n1,2\n# another\n3,0\n");
    FieldMatrix m = read_matrix(is, f4);
    CHECK(m.rows() == 1);
    CHECK(m.cols() == 2);
    CHECK(m.enc_at(0, 0) == 3);
    CHECK(m.enc_at(0, 1) == 0);
}

TEST_CASE("matrix reader rejects bad input") {
    Field f4 = FieldSpec::make_default(2, 2);
    std::istringstream bad_header("x,2\n1,2\n");
    CHECK_THROWS_AS(read_matrix(bad_header, f4), ParseError);
    std::istringstream wrong_count("1,3\n1,2\n");
    CHECK_THROWS_AS(read_matrix(wrong_count, f4), ParseError);
    std::istringstream out_of_range("1,2\n1,7\n");
    CHECK_THROWS_AS(read_matrix(out_of_range, f4), ParseError);
    std::istringstream truncated("2,2\n1,2\n");
    CHECK_THROWS_AS(read_matrix(truncated, f4), ParseError);
}

TEST_CASE("scheme config parsing") {
    std::istringstream is(
        "# demo\nq=3\nL = 2\nT=2\na=1\nb=2\nc=1\nseed=99\npoints=0,1,3,9\n");
    SchemeConfig cfg = parse_scheme_config(is);
    CHECK(cfg.q == 3);
    CHECK(cfg.L == 2);
    CHECK(cfg.T == 2);
    CHECK(cfg.a == 1);
    CHECK(cfg.b == 2);
    CHECK(cfg.c == 1);
    CHECK(cfg.seed == 99);
    REQUIRE(cfg.points.has_value());
    CHECK(*cfg.points == std::vector<size_t>{0, 1, 3, 9});
}

TEST_CASE("scheme config rejects unknown keys and bad values") {
    std::istringstream unknown("q=2\nbogus=1\n");
    CHECK_THROWS_AS(parse_scheme_config(unknown), ParseError);
    std::istringstream bad("q=two\n");
    CHECK_THROWS_AS(parse_scheme_config(bad), ParseError);
    std::istringstream noeq("q\n");
    CHECK_THROWS_AS(parse_scheme_config(noeq), ParseError);
}

TEST_CASE("index list parsing") {
    CHECK(parse_index_list("0,5, 7") == std::vector<size_t>{0, 5, 7});
    CHECK_THROWS_AS(parse_index_list("1,,2"), ParseError);
    CHECK_THROWS_AS(parse_index_list("1,a"), ParseError);
}

TEST_CASE("file helpers work through the filesystem") {
    Field f4 = FieldSpec::make_default(2, 2);
    FieldMatrix m = FieldMatrix::from_rows(f4, {{1, 2}, {3, 0}});
    std::string path = "io_test_matrix.csv";
    write_matrix_file(path, m);
    CHECK(read_matrix_file(path, f4) == m);
    CHECK_THROWS_AS(read_matrix_file("does_not_exist.csv", f4), ParseError);
}
