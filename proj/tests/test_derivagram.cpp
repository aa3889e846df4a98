#include <catch2/catch_amalgamated.hpp>

#include <tb/derivagram.hpp>
#include <tb/signal.hpp>

#include "xml_check.hpp"

#include <cmath>
#include <cstddef>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

using namespace tb;
using Catch::Matchers::WithinAbs;

namespace {

std::string slurp(const std::string& path) {
    std::ifstream in(path);
    REQUIRE(in);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

void spit(const std::string& path, const std::string& text) {
    std::ofstream out(path);
    REQUIRE(out);
    out << text;
}

std::size_t count_occurrences(const std::string& doc, const std::string& needle) {
    std::size_t n = 0;
    for (std::size_t pos = doc.find(needle); pos != std::string::npos;
         pos = doc.find(needle, pos + needle.size()))
        ++n;
    return n;
}

} // namespace

TEST_CASE("derivagram column matches the energy decomposition") {
    derivagram d = dgram::compute(builtin("gaussian"), {0.0}, 10);
    CHECK(d.name == "gaussian");
    CHECK(d.levels == 10);
    REQUIRE(d.values.size() == 10);
    REQUIRE(d.values[0].size() == 1);

    energy_decomposition ed = parseval_taylor(builtin("gaussian"), 0.0, 9);
    for (std::size_t n = 0; n < 10; ++n) CHECK(d.values[n][0] == ed.de[n]);
    for (std::size_t n = 1; n < 10; n += 2) CHECK_THAT(d.values[n][0], WithinAbs(0.0, 1e-10));

    double sum = 0.0;
    for (std::size_t n = 0; n < 10; ++n) sum += d.values[n][0];
    CHECK_THAT(sum, WithinAbs(ed.cumulative[9], 1e-12));
}

TEST_CASE("derivagram over a log pulse grid") {
    std::vector<double> grid;
    for (int i = 1; i <= 9; ++i) grid.push_back(i / 10.0);
    derivagram d = dgram::compute(builtin("logpulse"), grid, 10);
    REQUIRE(d.values.size() == 10);
    for (const auto& row : d.values) CHECK(row.size() == 9);
    CHECK(d.grid == grid);

    energy_decomposition ed = parseval_taylor(builtin("logpulse"), 0.5, 9);
    double sum = 0.0;
    for (std::size_t n = 0; n < 10; ++n) sum += d.values[n][4];
    CHECK_THAT(sum, WithinAbs(ed.cumulative[9], 1e-10));

    std::string path = "tb_test_logpulse_map.svg";
    dgram::render_svg(d, path, svg_mode::graymap);
    std::string doc = slurp(path);
    std::string why;
    CHECK(tbtest::xml_well_formed(doc, &why));
    INFO(why);
    CHECK(count_occurrences(doc, "<rect") == 90);
}

TEST_CASE("derivagram input validation") {
    CHECK_THROWS_AS(dgram::compute(builtin("logpulse"), {-0.5}, 3), domain_error);
    CHECK_THROWS_AS(dgram::compute(builtin("gaussian"), {0.0}, 0), std::invalid_argument);
}

TEST_CASE("derivagram CSV round trip") {
    derivagram d = dgram::compute(builtin("gaussian"), {0.0, 0.5}, 2);
    std::string path = "tb_test_roundtrip.csv";
    dgram::render_csv(d, path);

    std::string text = slurp(path);
    CHECK(text.rfind("n,t0,DE\n", 0) == 0);
    CHECK(count_occurrences(text, "\n") == 5); // header + 4 rows

    derivagram back = dgram::read_csv(path);
    CHECK(back.levels == d.levels);
    REQUIRE(back.grid == d.grid);
    REQUIRE(back.values.size() == d.values.size());
    for (std::size_t n = 0; n < d.values.size(); ++n) CHECK(back.values[n] == d.values[n]);
}

TEST_CASE("derivagram CSV reader details") {
    std::string path = "tb_test_handmade.csv";
    spit(path, "n,t0,DE\n# comment line\n0,0,1\n0,1,2\n1,0,3\n1,1,4\n");
    derivagram d = dgram::read_csv(path);
    CHECK(d.levels == 2);
    CHECK(d.grid == std::vector<double>{0.0, 1.0});
    CHECK(d.values[0] == std::vector<double>{1.0, 2.0});
    CHECK(d.values[1] == std::vector<double>{3.0, 4.0});

    spit("tb_test_badheader.csv", "x,y,z\n0,0,1\n");
    CHECK_THROWS_AS(dgram::read_csv("tb_test_badheader.csv"), std::runtime_error);
    CHECK_THROWS_AS(dgram::read_csv("tb_test_does_not_exist.csv"), std::runtime_error);
}

TEST_CASE("empty grid renders a header-only CSV") {
    derivagram d = dgram::compute(builtin("gaussian"), {}, 3);
    std::string path = "tb_test_empty.csv";
    dgram::render_csv(d, path);
    CHECK(slurp(path) == "n,t0,DE\n");
}

TEST_CASE("graymap fills span black to white") {
    derivagram d;
    d.name = "handmade";
    d.levels = 1;
    d.grid = {0.0, 1.0, 2.0};
    d.values = {{-1.0, 0.0, 2.0}};

    std::string path = "tb_test_gray.svg";
    dgram::render_svg(d, path, svg_mode::graymap);
    std::string doc = slurp(path);
    std::string why;
    CHECK(tbtest::xml_well_formed(doc, &why));
    INFO(why);

    std::size_t black = doc.find("#000000");
    std::size_t mid = doc.find("#555555");
    std::size_t white = doc.find("#ffffff");
    REQUIRE(black != std::string::npos);
    REQUIRE(mid != std::string::npos);
    REQUIRE(white != std::string::npos);
    CHECK(black < mid);
    CHECK(mid < white);
}

TEST_CASE("constant graymap sits at mid gray") {
    derivagram d;
    d.name = "flat";
    d.levels = 2;
    d.grid = {0.0, 1.0};
    d.values = {{7.0, 7.0}, {7.0, 7.0}};

    std::string path = "tb_test_flat.svg";
    dgram::render_svg(d, path, svg_mode::graymap);
    std::string doc = slurp(path);
    CHECK(count_occurrences(doc, "#808080") == 4);
}

TEST_CASE("bargraph output") {
    derivagram d = dgram::compute(builtin("gaussian"), {0.0}, 10);
    std::string path = "tb_test_bars.svg";
    dgram::render_svg(d, path, svg_mode::bargraph, 0);
    std::string doc = slurp(path);
    std::string why;
    CHECK(tbtest::xml_well_formed(doc, &why));
    INFO(why);
    CHECK(count_occurrences(doc, "<rect") == 10);
    CHECK(doc.find("#404040") != std::string::npos); // positive levels
    CHECK(doc.find("#a0a0a0") != std::string::npos); // negative levels
    CHECK(doc.find("<line") != std::string::npos);   // zero axis

    CHECK_THROWS_AS(dgram::render_svg(d, path, svg_mode::bargraph, 5), std::invalid_argument);
    derivagram empty;
    CHECK_THROWS_AS(dgram::render_svg(empty, path, svg_mode::graymap), std::invalid_argument);
}
