#include <doctest.h>

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <sys/wait.h>
#include <fstream>
#include <sstream>
#include <string>

#ifndef SUBFRAC_CLI_PATH
#error "SUBFRAC_CLI_PATH must point at the built CLI binary"
#endif

namespace {

int run(const std::string& args, const std::string& out_path)
{
    const std::string cmd = std::string(SUBFRAC_CLI_PATH) + " " + args + " > " + out_path
        + " 2> /dev/null";
    const int rc = std::system(cmd.c_str());
    return WEXITSTATUS(rc);
}

std::string slurp(const std::string& path)
{
    std::ifstream in(path, std::ios::binary);
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

} // namespace

TEST_CASE("density CSV: layout, precision, reproducibility")
{
    const std::string out1 = "cli_density_1.csv", out2 = "cli_density_2.csv";
    const std::string args = "density --law l --nu 1/2 --t 1 --x 0.5:2:4";
    REQUIRE(run(args, out1) == 0);
    REQUIRE(run(args, out2) == 0);
    const std::string text = slurp(out1);
    CHECK(text == slurp(out2)); // byte-identical reruns

    std::istringstream is(text);
    std::string line;
    REQUIRE(std::getline(is, line));
    CHECK(line.substr(0, 9) == "# params:");
    REQUIRE(std::getline(is, line));
    CHECK(line == "x,t,value");
    int rows = 0;
    while (std::getline(is, line)) {
        ++rows;
        double x = 0.0, t = 0.0, v = 0.0;
        char c1 = 0, c2 = 0;
        std::istringstream row(line);
        REQUIRE((row >> x >> c1 >> t >> c2 >> v));
        CHECK(c1 == ',');
        CHECK(c2 == ',');
        // round-trip at %.17g must reproduce the closed form of l_{1/2}
        const double exact = std::exp(-x * x / 4.0) / std::sqrt(M_PI);
        CHECK(v == doctest::Approx(exact).epsilon(1e-13));
    }
    CHECK(rows == 4);
    // no carriage returns: LF endings only
    CHECK(text.find('\r') == std::string::npos);
    std::remove(out1.c_str());
    std::remove(out2.c_str());
}

TEST_CASE("solve methods agree through the CLI")
{
    const std::string ca = "cli_solve_a.csv", cb = "cli_solve_b.csv";
    REQUIRE(run("solve --nu 1/3 --gamma 1 --mu 1 --t 1 --x 1:1:1 --method composition", ca) == 0);
    REQUIRE(run("solve --nu 1/3 --gamma 1 --mu 1 --t 1 --x 1:1:1 --method foxh", cb) == 0);
    auto value_of = [](const std::string& path) {
        std::ifstream in(path);
        std::string line;
        std::getline(in, line); // params
        std::getline(in, line); // header
        std::getline(in, line);
        return std::stod(line.substr(line.rfind(',') + 1));
    };
    CHECK(value_of(ca) == doctest::Approx(value_of(cb)).epsilon(1e-7));
    std::remove(ca.c_str());
    std::remove(cb.c_str());
}

TEST_CASE("sample output is seeded and reproducible")
{
    const std::string s1 = "cli_sample_1.csv", s2 = "cli_sample_2.csv", s3 = "cli_sample_3.csv";
    REQUIRE(run("sample --law stable --nu 1/2 --t 1 --n 32 --seed 7", s1) == 0);
    REQUIRE(run("sample --law stable --nu 1/2 --t 1 --n 32 --seed 7", s2) == 0);
    REQUIRE(run("sample --law stable --nu 1/2 --t 1 --n 32 --seed 8", s3) == 0);
    CHECK(slurp(s1) == slurp(s2));
    CHECK(slurp(s1) != slurp(s3));
    std::remove(s1.c_str());
    std::remove(s2.c_str());
    std::remove(s3.c_str());
}

TEST_CASE("exit codes distinguish usage errors from numerical failures")
{
    const std::string devnull = "cli_err.out";
    CHECK(run("density --law z --x 1:2:2", devnull) == 2);       // unknown law
    CHECK(run("density --law l --x 2:1:5", devnull) == 2);       // malformed grid
    CHECK(run("density --law l --nu 7/2 --x 1:2:2", devnull) == 2); // nu out of range
    CHECK(run("bogus-subcommand", devnull) == 2);                 // parse error
    CHECK(run("validate --suite 99", devnull) == 2);              // bad suite id
    std::remove(devnull.c_str());
}
