#include <doctest.h>

#include <sstream>

#include <json.hpp>

#include "covolume/cli.hpp"

using json = nlohmann::ordered_json;

namespace {

struct Invocation {
    int code;
    std::string out;
    std::string err;
};

Invocation invoke(std::vector<std::string> args, covol::cli::Context const & ctx = {})
{
    args.insert(args.begin(), "covolume");
    std::ostringstream out;
    std::ostringstream err;
    int code = covol::cli::run(args, out, err, ctx);
    return {code, out.str(), err.str()};
}

} // namespace

TEST_SUITE("cli")
{
    TEST_CASE("nu emits exact JSON by default off a terminal")
    {
        auto r = invoke({"nu", "--d", "3", "--n", "9"});
        REQUIRE(r.code == 0);
        auto j = json::parse(r.out);
        CHECK(j["chi"] == "-809/5746705367040");
        CHECK(j["nu"] == "809/5746705367040");
        CHECK(j["epsilon"] == "2");
        CHECK(j["exact"] == true);
    }

    TEST_CASE("table default on a terminal")
    {
        covol::cli::Context ctx;
        ctx.interactive = true;
        auto r = invoke({"nu", "--d", "3", "--n", "2"}, ctx);
        CHECK(r.code == 0);
        CHECK(r.out.rfind("d ", 0) == 0);
        CHECK(r.out.find("1/72") != std::string::npos);
    }

    TEST_CASE("scan CSV")
    {
        auto r = invoke({"scan", "--n", "2", "--max-disc", "20", "--format", "csv"});
        REQUIRE(r.code == 0);
        std::istringstream lines(r.out);
        std::string line;
        std::getline(lines, line);
        CHECK(line == "d,disc,n,nu,chi,volume,h,h_torsion,r,epsilon,mult_lo,mult_hi,exact");
        int rows = 0;
        while (std::getline(lines, line))
            ++rows;
        CHECK(rows == 8);
    }

    TEST_CASE("minimal")
    {
        auto r = invoke({"minimal", "--n", "9"});
        REQUIRE(r.code == 0);
        CHECK(json::parse(r.out)["d"] == 3);
        auto o = invoke({"minimal", "--overall", "--n-max", "20"});
        REQUIRE(o.code == 0);
        auto j = json::parse(o.out);
        CHECK(j["n_star"] == 9);
        CHECK(j["n_star_volume"] == 9);
        CHECK(invoke({"minimal"}).code == 2);
    }

    TEST_CASE("growth, hwang, classgroup")
    {
        auto g = invoke({"growth", "--d", "3", "--n-min", "2", "--n-max", "4"});
        REQUIRE(g.code == 0);
        CHECK(g.out.find("\"1/90\"") != std::string::npos);
        auto h = invoke({"hwang", "--n", "2", "--format", "csv"});
        REQUIRE(h.code == 0);
        CHECK(h.out.find("2,1,91,28,") != std::string::npos);
        auto c = invoke({"classgroup", "--d", "23", "--m", "3"});
        REQUIRE(c.code == 0);
        auto j = json::parse(c.out);
        CHECK(j["h"] == 3);
        CHECK(j["torsion"] == 3);
    }

    TEST_CASE("selfcheck passes on the shared cache")
    {
        auto r = invoke({"selfcheck", "--quick"});
        CHECK(r.code == 0);
        CHECK(r.err.find("3/3 passed") != std::string::npos);
        auto full = invoke({"selfcheck", "--max-disc", "40", "--n-max", "12", "--format", "json"});
        CHECK(full.code == 0);
    }

    TEST_CASE("selfcheck detects a perturbed Bernoulli number")
    {
        auto cache = covol::BernoulliCache::with_override(10, covol::Rational(5, 67));
        covol::cli::Context ctx;
        ctx.cache = cache.get();
        auto r = invoke({"selfcheck", "--quick"}, ctx);
        CHECK(r.code == 1);
        CHECK(r.err.find("d=3 n=9") != std::string::npos);
    }

    TEST_CASE("usage errors exit 2")
    {
        CHECK(invoke({}).code == 2);
        CHECK(invoke({"nu", "--d", "4", "--n", "2"}).code == 2);
        CHECK(invoke({"nu", "--d", "-3", "--n", "2"}).code == 2);
        CHECK(invoke({"nu", "--d", "3", "--n", "1"}).code == 2);
        CHECK(invoke({"nu", "--d", "3"}).code == 2);
        CHECK(invoke({"nu", "--d", "3", "--n", "2", "--format", "xml"}).code == 2);
        CHECK(invoke({"frobnicate"}).code == 2);
        auto r = invoke({"nu", "--d", "12", "--n", "2"});
        CHECK(r.err.find("squarefree") != std::string::npos);
        CHECK(r.out.empty());
    }

    TEST_CASE("help exits 0")
    {
        auto r = invoke({"--help"});
        CHECK(r.code == 0);
        CHECK(r.out.find("selfcheck") != std::string::npos);
    }
}
