#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "jetalg/cli.hpp"
#include "jetalg/parse.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>

using namespace jetalg;

namespace {

struct CliResult {
    int code;
    std::string out;
    std::string err;
};

CliResult cli(const std::vector<std::string>& args) {
    std::ostringstream out, err;
    int code = run_cli(args, out, err);
    return {code, out.str(), err.str()};
}

} // namespace

TEST_CASE("jet verb") {
    auto r = cli({"jet", "--ring", "s=2 n=1", "--f", "x1*x2", "--j", "1"});
    CHECK(r.code == 0);
    CHECK(r.out == "x1^(0)*x2^(1) + x1^(1)*x2^(0)\n");
    // output re-parses under the polynomial grammar
    CHECK_NOTHROW(parse_poly(r.out));
}

TEST_CASE("gamma verb") {
    auto r = cli({"gamma", "--ring", "s=1 n=1", "--f", "x1^2"});
    CHECK(r.code == 0);
    CHECK(r.out == "(x1^(0)^2) + (2*x1^(0)*x1^(1))*t\n");
}

TEST_CASE("apply verb evaluates a derivation") {
    auto r = cli({"apply", "--ring", "s=1 n=0", "--deriv", "deriv m=2 / value x0^2 1", "--f",
                  "x0^3"});
    CHECK(r.code == 0);
    CHECK(r.out == "3*x1^(0)\n");
}

TEST_CASE("kernel verb") {
    auto r = cli({"kernel", "--n", "2", "--deriv", "deriv m=2 / partial x2,x2 1/2"});
    CHECK(r.code == 0);
    CHECK(r.out == "{\"member\":true}\n");

    auto bad = cli({"kernel", "--n", "1", "--deriv", "deriv m=2 / partial x0,x1 1"});
    CHECK(bad.code == 0);
    CHECK(bad.out.find("\"member\":false") != std::string::npos);
    CHECK(bad.out.find("witness") != std::string::npos);
}

TEST_CASE("tower verb output feeds back into kernel") {
    auto r = cli({"tower", "--k", "3"});
    CHECK(r.code == 0);
    CHECK(r.out.find("deriv m=2") == 0);
    std::string spec = r.out.substr(0, r.out.size() - 1);
    auto member = cli({"kernel", "--n", "3", "--deriv", spec});
    CHECK(member.code == 0);
    CHECK(member.out == "{\"member\":true}\n");
}

TEST_CASE("phi and section verbs") {
    auto lifted = cli({"phi", "--ring", "s=1 n=1", "--deriv", "deriv m=2 / partial x1,x1 1/2"});
    CHECK(lifted.code == 0);
    CHECK(lifted.out.find("E0(x1^(0)) = 0") != std::string::npos);
    CHECK(lifted.out.find("E1(") != std::string::npos);

    auto sect = cli({"section", "--ring", "s=1 n=1", "--deriv", "deriv m=2 / value x0^2 1",
                     "--deriv", "deriv m=2 / value x0 1"});
    CHECK(sect.code == 0);
    CHECK(sect.out.find("D(x1^(1)) = 1") != std::string::npos);
    CHECK(sect.out.find("D(x1^(0)^2) = 1") != std::string::npos);
}

TEST_CASE("phi verb accepts quotient ring descriptors") {
    auto r = cli({"phi", "--ring", "s=2 n=1 / rel x1*x2", "--deriv",
                  "deriv m=2 / value x1^(1)*x2^(0) 1"});
    CHECK(r.code == 0);
    CHECK(r.out.find("E1(x1^(0)*x2^(0)) = 1") != std::string::npos);
}

TEST_CASE("commute verb") {
    auto r = cli({"commute", "--ring", "s=1 n=2", "--alpha", "x1^(1)", "--l", "2", "--f",
                  "x1^2", "--json"});
    CHECK(r.code == 0);
    CHECK(r.out.find("\"equal\":true") != std::string::npos);
    CHECK(r.out.find("2*x1^(1)") != std::string::npos);
}

TEST_CASE("section3 verb") {
    auto r = cli({"section3"});
    CHECK(r.code == 0);
    CHECK(r.out.find("\"certificate\":true") != std::string::npos);
    CHECK(r.out.find("\"nonmembership_infeasible\":true") != std::string::npos);
    CHECK(r.out.find("\"ok\":true") != std::string::npos);
}

TEST_CASE("verify verb emits a deterministic JSON report") {
    auto a = cli({"verify", "--suite", "jet-expansion", "--seed", "42"});
    auto b = cli({"verify", "--suite", "jet-expansion", "--seed", "42"});
    CHECK(a.code == 0);
    CHECK(a.out == b.out);
    CHECK(a.out.find("\"suite\":\"jet-expansion\"") != std::string::npos);
    CHECK(a.out.find("\"cases\":400") != std::string::npos);
    CHECK(a.out.find("\"passed\":400") != std::string::npos);
    CHECK(a.out.find("\"failed\":0") != std::string::npos);
    CHECK(a.out.find("\"first_failure\":null") != std::string::npos);
    CHECK(a.out.find("\"seed\":42") != std::string::npos);

    auto other = cli({"verify", "--suite", "leibniz", "--seed", "7"});
    CHECK(other.code == 0);
    CHECK(other.out.find("\"seed\":7") != std::string::npos);
}

TEST_CASE("derivation specs load from files") {
    std::string path = "deriv_spec_tmp.txt";
    {
        std::ofstream f(path);
        f << "deriv m=2\npartial x2,x2 1/2\n";
    }
    auto r = cli({"kernel", "--n", "2", "--deriv", "@" + path});
    std::remove(path.c_str());
    CHECK(r.code == 0);
    CHECK(r.out == "{\"member\":true}\n");

    auto missing = cli({"kernel", "--n", "2", "--deriv", "@no_such_file_here"});
    CHECK(missing.code == 2);

    auto noderiv = cli({"kernel", "--n", "2"});
    CHECK(noderiv.code == 2);
    CHECK(noderiv.err.find("missing --deriv") != std::string::npos);
}

TEST_CASE("help exits cleanly") {
    auto r = cli({"--help"});
    CHECK(r.code == 0);
    CHECK(r.out.find("jet") != std::string::npos);
}

TEST_CASE("usage and input errors exit with 2") {
    auto r = cli({"jet", "--ring", "s=2 n=1", "--f", "x1*"});
    CHECK(r.code == 2);
    CHECK(r.err.find("error") != std::string::npos);

    auto unknown = cli({"frobnicate"});
    CHECK(unknown.code == 2);

    auto badsuite = cli({"verify", "--suite", "no-such-suite"});
    CHECK(badsuite.code == 2);

    auto outofrange = cli({"jet", "--ring", "s=2 n=1", "--f", "x1", "--j", "5"});
    CHECK(outofrange.code == 2);
}
