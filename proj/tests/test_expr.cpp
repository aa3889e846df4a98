#include <catch2/catch_amalgamated.hpp>

#include <tb/expr.hpp>

#include <cmath>
#include <random>

using namespace tb;

TEST_CASE("parse builds the documented trees") {
    // Unary minus binds at factor level, so -t^2/2 is (-(t^2))/2.
    expression gauss =
        ast::exp(ast::div(ast::neg(ast::pow(ast::variable(), 2)), ast::constant(2.0)));
    CHECK(parse("exp(-t^2/2)") == gauss);

    expression logpulse = ast::ln(ast::sub(ast::constant(1.0), ast::variable()));
    CHECK(parse("ln(1-t)") == logpulse);

    CHECK(parse("5") == ast::constant(5.0));
}

TEST_CASE("parse reports the failing position") {
    try {
        parse("ln(1-");
        FAIL("expected parse_error");
    } catch (const parse_error& e) {
        CHECK(e.position() == 5);
        CHECK(std::string(e.what()).find("position 5") != std::string::npos);
    }

    CHECK_THROWS_AS(parse(""), parse_error);
    CHECK_THROWS_AS(parse("t)"), parse_error);
    CHECK_THROWS_AS(parse("(t"), parse_error);
    CHECK_THROWS_AS(parse("t^x"), parse_error);
    CHECK_THROWS_AS(parse("1 + * 2"), parse_error);
}

TEST_CASE("unknown function names are rejected by name") {
    try {
        parse("tan(t)");
        FAIL("expected parse_error");
    } catch (const parse_error& e) {
        CHECK(std::string(e.what()).find("unknown function name 'tan'") != std::string::npos);
        CHECK(e.position() == 0);
    }
    CHECK_THROWS_AS(parse("1+foo(t)"), parse_error);
}

TEST_CASE("evaluation basics") {
    CHECK(eval(parse("exp(-t^2/2)"), 0.0) == 1.0);
    CHECK(eval(parse("ln(1-t)"), 0.0) == 0.0);
    CHECK(eval(parse("2+3*4"), 0.0) == 14.0);
    CHECK(eval(parse("(2+3)*4"), 0.0) == 20.0);
    CHECK(eval(parse("2.5e-1*t"), 2.0) == 0.5);
}

TEST_CASE("domain errors during evaluation") {
    CHECK_THROWS_AS(eval(parse("ln(1-t)"), 2.0), domain_error);
    CHECK_THROWS_AS(eval(parse("sqrt(t)"), -1.0), domain_error);
    CHECK_THROWS_AS(eval(parse("1/t"), 0.0), domain_error);
    CHECK_THROWS_AS(eval(parse("t^-1"), 0.0), domain_error);
    CHECK_THROWS_AS(eval(parse("ln(t)"), 0.0), domain_error);
}

TEST_CASE("unary minus binds looser than the exponent") {
    CHECK(parse("-t^2") == ast::neg(ast::pow(ast::variable(), 2)));
    CHECK(eval(parse("-t^2"), 3.0) == -9.0);
    CHECK(eval(parse("(-t)^2"), 3.0) == 9.0);
    CHECK(eval(parse("--t"), 4.0) == 4.0);
}

TEST_CASE("integer exponents, including negative ones") {
    CHECK(eval(parse("t^0"), 7.0) == 1.0);
    CHECK(eval(parse("t^-2"), 2.0) == 0.25);
    CHECK(eval(parse("t^10"), 2.0) == 1024.0);
    CHECK(eval(parse("2^3"), 0.0) == 8.0);
}

TEST_CASE("int_pow_value is sign-symmetric and guards 0^negative") {
    CHECK(int_pow_value(0.0, 0) == 1.0);
    CHECK(int_pow_value(0.0, 5) == 0.0);
    CHECK(int_pow_value(-3.0, 3) == -27.0);
    CHECK(int_pow_value(-3.0, 4) == 81.0);
    CHECK(int_pow_value(0.7, 3) == -int_pow_value(-0.7, 3));
    CHECK_THROWS_AS(int_pow_value(0.0, -1), domain_error);
}

TEST_CASE("round-trip corpus against direct evaluation") {
    struct entry {
        const char* text;
        double (*ref)(double);
    };
    static const entry corpus[] = {
        {"t", [](double t) { return t; }},
        {"1+2*t", [](double t) { return 1.0 + 2.0 * t; }},
        {"t^3-2*t+1", [](double t) { return t * t * t - 2.0 * t + 1.0; }},
        {"exp(t/4)", [](double t) { return std::exp(t / 4.0); }},
        {"sin(t)*cos(t)", [](double t) { return std::sin(t) * std::cos(t); }},
        {"sqrt(t^2+1)", [](double t) { return std::sqrt(t * t + 1.0); }},
        {"ln(t^2+1)", [](double t) { return std::log(t * t + 1.0); }},
        {"exp(-t^2/2)", [](double t) { return std::exp(-t * t / 2.0); }},
        {"(t+1)/(t^2+1)", [](double t) { return (t + 1.0) / (t * t + 1.0); }},
        {"2.5e-1*t+1e2", [](double t) { return 0.25 * t + 100.0; }},
    };

    std::mt19937 rng(20260822);
    std::uniform_real_distribution<double> dist(-3.0, 3.0);
    for (const entry& e : corpus) {
        expression parsed = parse(e.text);
        for (int i = 0; i < 100; ++i) {
            double t = dist(rng);
            double got = eval(parsed, t);
            double want = e.ref(t);
            CHECK_THAT(got, Catch::Matchers::WithinRel(want, 1e-14) ||
                                Catch::Matchers::WithinAbs(want, 1e-14));
        }
    }
}

TEST_CASE("parsing is whitespace-insensitive and structurally stable") {
    CHECK(parse("  exp ( - t ^ 2 / 2 )  ") == parse("exp(-t^2/2)"));
    CHECK(parse("t+1") == parse("t+1"));
    CHECK(parse("t+1") != parse("1+t"));
    CHECK(parse("t*(1+t)") != parse("t*1+t"));
}

TEST_CASE("reflect substitutes t -> -t structurally") {
    expression e = parse("ln(1-t)");
    expression r = reflect(e);
    CHECK(r == parse("ln(1--t)"));
    CHECK(eval(r, 0.5) == eval(e, -0.5));

    expression g = parse("exp(-t^2/2)");
    CHECK(eval(reflect(g), 1.3) == eval(g, 1.3));
}
