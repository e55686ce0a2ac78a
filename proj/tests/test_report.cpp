#include <doctest.h>

#include "forge/errors.hpp"
#include "forge/report.hpp"
#include "forge/smallhh.hpp"

using namespace forge;

TEST_CASE("config validation enforces the grading hypotheses") {
    RunConfig odd;
    odd.n = 3;
    CHECK_THROWS_AS(odd.validate(), ConfigError);
    RunConfig neg;
    neg.n = -2;
    CHECK_THROWS_AS(neg.validate(), ConfigError);
    RunConfig small;
    small.n = 2;
    small.max_arity = 3;  // below n+2
    CHECK_THROWS_AS(small.validate(), ConfigError);
    RunConfig ok;
    CHECK_NOTHROW(ok.validate());
}

TEST_CASE("config json overrides the base values") {
    RunConfig base;
    Json j = Json::parse(R"({"n": 4, "seed": 99, "t_window": [-1, 1]})");
    RunConfig c = RunConfig::from_json(j, base);
    CHECK(c.n == 4);
    CHECK(c.max_arity == 11);  // 2n+3 recomputed when only n is given
    CHECK(c.seed == 99);
    CHECK(c.t_window_lo == -1);
    CHECK(c.t_window_hi == 1);
    CHECK(c.order_bound == base.order_bound);
}

TEST_CASE("laurent reports are byte-identical across runs") {
    RunConfig cfg;
    RunResult a = cmd_laurent(4, cfg);
    RunResult b = cmd_laurent(4, cfg);
    CHECK(a.report.dump() == b.report.dump());
    CHECK(a.exit_code == 0);
}

TEST_CASE("hh and kunneth commands run from json text") {
    auto fx = fixture_algebras();
    std::string dual = fx[1].to_json();
    RunConfig cfg;
    RunResult h = cmd_hh(dual, 3, cfg);
    CHECK(h.exit_code == 0);
    std::vector<int> dims = h.report["steps"][0]["dims"].get<std::vector<int>>();
    CHECK(dims == std::vector<int>{2, 1, 1, 1});

    RunResult k = cmd_kunneth(dual, dual, 3, cfg);
    CHECK(k.exit_code == 0);
    CHECK(k.report["steps"][0]["lhs_tensor_dims"] == k.report["steps"][0]["rhs_convolution_dims"]);

    CHECK_THROWS_AS(cmd_hh("{\"dim\": 0}", 3, cfg), ParseError);
}

TEST_CASE("obstruction command certifies a user spec") {
    RunConfig cfg;
    std::string aut = R"({"images_x": ["x2", "x1", "x3 + x1^2"], "t_unit": "1/x3"})";
    RunResult r = cmd_obstruction(aut, cfg);
    CHECK(r.exit_code == 0);
    CHECK(r.report["steps"][0]["verdict"] == "pass");

    std::string bad = R"({"images_x": ["x1", "x1", "x3"], "t_unit": "1"})";
    CHECK_THROWS_AS(cmd_obstruction(bad, cfg), InvalidAutomorphism);
}

TEST_CASE("autspec json round-trips") {
    Tower tw{2};
    std::string text = R"({"images_x": ["x2", "x1", "x3"], "t_unit": "x1"})";
    AutSpec f = autspec_from_json(tw, text);
    AutSpec back = autspec_from_json(tw, autspec_to_json(f));
    CHECK(back.images_x == f.images_x);
    CHECK(back.t_unit == f.t_unit);
}

TEST_CASE("tw check command evaluates complexes from json") {
    RunConfig cfg;
    std::string good = R"({"shifts": [0, 1], "delta": [[1, 0, "x1*t"]]})";
    RunResult r = cmd_tw_check(good, false, cfg);
    CHECK(r.exit_code == 0);
    std::string chain = R"({"shifts": [0, 1, 2], "delta": [[1, 0, "t"], [2, 1, "x3*t"]]})";
    RunResult r2 = cmd_tw_check(chain, false, cfg);
    CHECK(r2.exit_code == 1);
    CHECK(r2.report["steps"][0]["mc_holds"] == false);
}
