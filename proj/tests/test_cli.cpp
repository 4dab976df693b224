#include <doctest.h>

#include <regex>
#include <sstream>

#include "braidrep/cli.hpp"
#include "braidrep/error.hpp"
#include "braidrep/reps.hpp"
#include "braidrep/serialize.hpp"
#include "reference_data.hpp"

using namespace braidrep;

namespace {

struct Outcome {
    int code;
    std::string out;
    std::string err;
};

Outcome call(std::vector<std::string> args)
{
    std::ostringstream out;
    std::ostringstream err;
    const int code = cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

bool has_float(const std::string& text) { return std::regex_search(text, std::regex(R"(\d\.\d|\d[eE][+-]?\d)")); }

} // namespace

TEST_CASE("rep: Tuba-Wenzl matrix of sigma_1")
{
    const auto r = call({"rep", "rho", "--n", "3", "--symbolic", "--word", "1", "--basis", "tuba-wenzl"});
    REQUIRE(r.code == cli::Ok);
    const Json j = Json::parse(r.out);
    CHECK(poly_matrix_from_json(j.at("matrix"), 1) == refdata::tuba_wenzl_sigma1_reference());
    CHECK(j.at("variables") == Json::array({"a"}));
    CHECK_FALSE(has_float(r.out));
}

TEST_CASE("rep: empty word gives the identity")
{
    const auto r = call({"rep", "rho", "--n", "3", "--word", ""});
    REQUIRE(r.code == cli::Ok);
    CHECK(poly_matrix_from_json(Json::parse(r.out).at("matrix"), 1).is_identity());
    const auto numeric = call({"rep", "mu", "--n", "3", "--alpha", "2", "--beta", "1/3"});
    REQUIRE(numeric.code == cli::Ok);
    CHECK(rational_matrix_from_json(Json::parse(numeric.out).at("matrix")).is_identity());
}

TEST_CASE("rep: numeric output agrees with the library")
{
    const auto r = call({"rep", "rho", "--n", "4", "--alpha", "2", "--word", "[[3,1],[1,-1]]"});
    REQUIRE(r.code == cli::Ok);
    const auto expected = rho_at(4, 2).eval_word(BraidWord::parse(4, "3 -1"));
    CHECK(rational_matrix_from_json(Json::parse(r.out).at("matrix")) == expected);
    const auto latex = call({"rep", "mu", "--n", "3", "--word", "2", "--out", "latex"});
    REQUIRE(latex.code == cli::Ok);
    CHECK(latex.out.rfind("\\left[\\begin{array}{cccccccc}", 0) == 0);
}

TEST_CASE("char and decompose")
{
    const auto r = call({"char", "--rep", "mu", "--n", "4", "--decompose"});
    REQUIRE(r.code == cli::Ok);
    const Json j = Json::parse(r.out);
    CHECK(j.at("character").at("1+1+1+1") == 35);
    CHECK(j.at("character").at("4") == -1);
    CHECK(j.at("character").at("2+2") == 3);
    std::map<std::string, long long> mult;
    for (const auto& e : j.at("decomposition")) {
        mult[e.at("name").get<std::string>()] = e.at("multiplicity").get<long long>();
    }
    CHECK(mult == std::map<std::string, long long>{{"alt", 1}, {"triv", 2}, {"wedge2V", 3}, {"W", 4}, {"V", 5}});

    const auto d = call({"decompose", "--n", "3", "--char", R"({"1+1+1": 8, "2+1": 0, "3": -1})"});
    REQUIRE(d.code == cli::Ok);
    CHECK(Json::parse(d.out).at("decomposition").size() == 3);
    CHECK(call({"decompose", "--n", "3", "--char", R"({"1+1+1": 1, "2+1": 0, "3": 0})"}).code == cli::DomainFailure);
    CHECK(call({"decompose", "--n", "3", "--char", R"({"1+1+1": 1})"}).code == cli::DomainFailure);
    CHECK(call({"decompose", "--n", "3"}).code == cli::UsageFailure);
}

TEST_CASE("verify, congruence, kohno, graded")
{
    const auto v = call({"verify", "--rep", "lkb", "--n", "4"});
    CHECK(v.code == cli::Ok);
    CHECK(Json::parse(v.out).at("relations") == true);

    const auto c = call({"congruence", "--rep", "rho", "--n", "3"});
    REQUIRE(c.code == cli::Ok);
    const Json cj = Json::parse(c.out);
    CHECK(cj.at("results").size() == 3);
    for (const auto& e : cj.at("results")) {
        CHECK(e.at("level").get<int>() >= 1);
    }

    const auto k = call({"kohno", "--n", "4", "--depth", "8"});
    REQUIRE(k.code == cli::Ok);
    const Json kj = Json::parse(k.out);
    CHECK(kj.at("ranks")[5] == "125");
    CHECK(kj.at("threshold").at("index") == 6);

    const auto g = call({"graded", "image", "--n", "3", "--word", "2 1 1 -2", "--level", "1"});
    REQUIRE(g.code == cli::Ok);
    CHECK(Json::parse(g.out).at("image") == "e21 + e23");

    const auto s = call({"graded", "search", "--n", "3", "--depth", "2", "--budget", "10"});
    REQUIRE(s.code == cli::Ok);
    std::istringstream lines(s.out);
    std::string line;
    int count = 0;
    while (std::getline(lines, line)) {
        CHECK(Json::parse(line).contains("kernel_hit"));
        ++count;
    }
    CHECK(count == 6);
}

TEST_CASE("pingpong")
{
    const auto r = call({"pingpong", "--n", "4", "--alpha", "2", "--word-x", "3 -1", "--word-y", "2 3 -1 -2"});
    REQUIRE(r.code == cli::Ok);
    const Json j = Json::parse(r.out);
    CHECK(j.at("certified") == true);
    CHECK(j.at("witnesses").size() == 4);
    CHECK(j.at("remark").at("Yv1_minus_v2_sq_ge_1") == true);
    CHECK_FALSE(has_float(r.out));
    CHECK(call({"pingpong", "--n", "4", "--alpha", "2", "--word-x", "1 -1", "--word-y", "2"}).code ==
          cli::Ok);
}

TEST_CASE("exit codes")
{
    CHECK(call({"--help"}).code == cli::Ok);
    CHECK(call({}).code == cli::UsageFailure);
    CHECK(call({"frobnicate"}).code == cli::UsageFailure);
    CHECK(call({"rep", "rho"}).code == cli::UsageFailure);
    CHECK(call({"rep", "rho", "--n", "3", "--out", "xml"}).code == cli::UsageFailure);
    const auto bad_flag = call({"rep", "rho", "--n", "3", "--nope"});
    CHECK(bad_flag.code == cli::UsageFailure);
    CHECK(bad_flag.err.find("--nope") != std::string::npos);
    CHECK(call({"rep", "rho", "--n", "3", "--word", "5"}).code == cli::DomainFailure);
    CHECK(call({"rep", "mu", "--n", "2"}).code == cli::DomainFailure);
    CHECK(call({"rep", "rho", "--n", "3", "--alpha", "1/0"}).code == cli::DomainFailure);
    CHECK(call({"rep", "rho", "--n", "3", "--word", "[[1]]"}).code == cli::DomainFailure);
    CHECK(call({"graded", "image", "--n", "3", "--word", "1 1", "--level", "2"}).code == cli::DomainFailure);
}

TEST_CASE("parse_word_arg")
{
    CHECK(cli::parse_word_arg(4, "3 -1") == BraidWord::parse(4, "3 -1"));
    CHECK(cli::parse_word_arg(4, "[[3,1],[1,-1]]") == BraidWord::parse(4, "3 -1"));
    CHECK(cli::parse_word_arg(4, "[]").letters().empty());
    CHECK_THROWS_AS(cli::parse_word_arg(4, "[[3,1"), DomainError);
}
