#include <doctest.h>

#include <cstdlib>
#include <sstream>

#include "ntcodes/cli.hpp"
#include "ntcodes/codes.hpp"
#include "ntcodes/enumerators.hpp"

using namespace ntcodes;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

}  // namespace

TEST_CASE("card") {
  CHECK(run({"card", "tenengolts", "--n", "3", "--r", "3", "--a1", "0", "--a2", "0"}).out == "5\n");
  CHECK(run({"card", "tenengolts", "--n", "3", "--r", "3", "--a1", "1", "--a2", "0"}).out == "2\n");
  CHECK(run({"card", "tenengolts", "--n", "1", "--r", "4", "--a1", "0", "--a2", "2"}).out == "1\n");
  CHECK(run({"card", "tenengolts", "--n", "3", "--r", "3", "--a1", "1", "--a2", "0", "--method", "oracle"}).out ==
        "2\n");
  CHECK(run({"card", "tenengolts", "--n", "3", "--r", "3", "--a1", "0", "--a2", "0", "--format", "json"}).out ==
        "{\"cardinality\":\"5\"}\n");
  CHECK(run({"card", "vt", "--n", "4"}).out == "4\n");
  // large values stay exact decimal strings
  const auto big = run({"card", "tenengolts", "--n", "40", "--r", "7", "--a1", "0", "--a2", "0"});
  CHECK(big.code == 0);
  CHECK(big.out.find_first_not_of("0123456789\n") == std::string::npos);
  CHECK(big.out == enumerators::tenengolts_cardinality(40, 7, 0, 0).str() + "\n");
}

TEST_CASE("enum") {
  const std::vector<std::string> t33{"enum", "tenengolts", "--n", "3", "--r", "3", "--a1", "0", "--a2", "0"};
  auto with = [&](std::vector<std::string> extra) {
    auto a = t33;
    a.insert(a.end(), extra.begin(), extra.end());
    return run(a);
  };
  CHECK(with({"--kind", "hamming"}).out == "1 + 2*w^2 + 2*w^3\n");
  CHECK(with({"--kind", "complete"}).out == "w0^3 + 2*w0*w1*w2 + w1^3 + w2^3\n");
  CHECK(with({"--kind", "extended"}).out ==
        "w0^3 + z2^3*w0*w1*w2 + z2^3*w1^3 + z1^3*z2^3*w0*w1*w2 + z2^6*w2^3\n");
  CHECK(with({"--kind", "extended", "--method", "oracle"}).out == with({"--kind", "extended"}).out);
  CHECK(with({"--format", "csv"}).out == "w,coef\n0,1\n2,2\n3,2\n");

  const auto json = with({"--format", "json"});
  const auto parsed = enumerators::Enumerator::from_json(nlohmann::json::parse(json.out));
  CHECK(to_text(parsed.poly) == "1 + 2*w^2 + 2*w^3");
  CHECK(parsed.method == enumerators::Method::ClosedForm);
  const auto ext = enumerators::Enumerator::from_json(nlohmann::json::parse(with({"--kind", "extended", "--format", "json"}).out));
  CHECK(ext.cardinality() == 5);

  CHECK(run({"enum", "lc", "--n", "4", "--m", "5", "--r", "2", "--h", "1,2,3,4", "--a", "0", "--kind", "hamming"}).out ==
        "1 + 2*w^2 + w^4\n");
  CHECK(run({"enum", "nonbinary-svt", "--n", "4", "--r", "3", "--m", "5", "--a", "1", "--b", "0", "--c", "2"}).out ==
        run({"enum", "nonbinary-svt", "--n", "4", "--r", "3", "--m", "5", "--a", "1", "--b", "0", "--c", "2",
             "--method", "oracle"}).out);
  const auto spec = codes::tenengolts(3, 3, 0, 0).to_json().dump();
  CHECK(run({"enum", "spec", "--spec", spec}).out == "1 + 2*w^2 + 2*w^3\n");
}

TEST_CASE("verify") {
  const auto v = run({"verify", "--family", "tenengolts", "--max-n", "4", "--max-r", "3"});
  CHECK(v.code == 0);
  CHECK(v.out.find("tenengolts n=4 r=3 a1=3 a2=2 variant=le") != std::string::npos);
  CHECK(v.out.find("mismatches 0") != std::string::npos);
  const auto lc = run({"verify", "--family", "lc", "--seed", "3", "--count", "5"});
  CHECK(lc.code == 0);
  CHECK(lc.out == run({"verify", "--family", "lc", "--seed", "3", "--count", "5"}).out);
  CHECK(run({"verify", "--family", "macwilliams", "--count", "3"}).code == 0);
}

TEST_CASE("table") {
  const auto t = run({"table", "t33"});
  CHECK(t.code == 0);
  CHECK(t.out.find("0 | {000, 012, 111, 210, 222} | {001, 022, 112} | {002, 011, 122}") != std::string::npos);
  CHECK(t.out.find("1 | 2 | 3 | 3") != std::string::npos);
  CHECK(run({"table", "t23"}).out.find("<1,1> | {10} | {10, 22} | {01} | {01, 22}") != std::string::npos);
  const auto ext = run({"table", "t33-extended"});
  CHECK(ext.out.find("210 | 3 | 3 | 1 | 1 | 1 | z1^3*z2^3*w0*w1*w2") != std::string::npos);
  const auto j = nlohmann::json::parse(run({"table", "t33", "--format", "json"}).out);
  CHECK(j["cells"].size() == 9);
  CHECK(run({"table", "t99"}).code == 2);
}

TEST_CASE("macwilliams") {
  const auto m = run({"macwilliams", "--r", "2", "--H", "1,1"});
  CHECK(m.code == 0);
  CHECK(nlohmann::json::parse(m.out) ==
        nlohmann::json::parse(R"({"left":"w0^2 + w1^2","right":"w0^2 + w1^2","verified":true,"dual_size":2})"));
  const auto deficient = run({"macwilliams", "--r", "2", "--H", "0,0"});
  CHECK(deficient.code == 0);
  CHECK(nlohmann::json::parse(deficient.out)["right"].is_null());
  CHECK(run({"macwilliams", "--r", "2", "--H", "1,1;0"}).code == 2);
}

TEST_CASE("exit codes") {
  CHECK(run({}).code == 2);
  CHECK(run({"--help"}).code == 0);
  CHECK(run({"card", "--help"}).code == 0);
  CHECK(run({"frobnicate"}).code == 2);
  CHECK(run({"card", "nosuch"}).code == 2);
  CHECK(run({"card", "tenengolts", "--n", "3"}).code == 2);
  CHECK(run({"card", "tenengolts", "--n", "3", "--r", "3", "--a1", "5", "--a2", "0"}).code == 2);
  CHECK(run({"card", "tenengolts", "--n", "3", "--r", "3", "--a1", "0", "--a2", "0", "--format", "xml"}).code == 2);
  CHECK(run({"enum", "spec", "--spec", "{not json"}).code == 2);

  // product-form families never enumerate, so the budget does not apply to them
  CHECK(run({"enum", "vt", "--n", "12", "--kind", "extended", "--budget", "100"}).code == 0);
  const auto b = run({"enum", "nonbinary-svt", "--n", "8", "--r", "3", "--m", "5", "--a", "0", "--b", "0", "--c", "0",
                      "--budget", "100"});
  CHECK(b.code == 3);
  CHECK(b.err.find("budget") != std::string::npos);

  ::setenv("CODES_BUDGET", "100", 1);
  CHECK(run({"enum", "vt", "--n", "12", "--kind", "extended", "--method", "oracle"}).code == 3);
  CHECK(run({"enum", "vt", "--n", "12", "--kind", "extended", "--method", "oracle", "--budget", "5000"}).code == 0);
  ::unsetenv("CODES_BUDGET");
  CHECK(run({"enum", "vt", "--n", "12", "--kind", "extended", "--method", "oracle"}).code == 0);
}
