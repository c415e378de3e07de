#include <doctest.h>
#include <json.hpp>

#include <string>

#include "binoconv/identities.hpp"
#include "binoconv/numeric.hpp"
#include "run_cli.hpp"

using namespace binoconv;

TEST_CASE("seq emits exact b-file lines") {
  const CliResult r = run_cli("seq --a 2 --k 0 --nmax 3 --form naive --format bfile");
  CHECK(r.exit_code == 0);
  CHECK(r.out == "0 1\n1 4\n2 16\n3 64\n");
}

TEST_CASE("seq b-file for a=3 via eq7") {
  const CliResult r = run_cli("seq --a 3 --k 0 --nmax 3 --form eq7 --format bfile");
  CHECK(r.exit_code == 0);
  CHECK(r.out == "0 1\n1 6\n2 39\n3 258\n");
}

TEST_CASE("seq csv with header") {
  const CliResult r = run_cli("seq --a 1 --k 0 --nmax 4 --form eq6 --format csv");
  CHECK(r.exit_code == 0);
  CHECK(r.out == "n,value\n0,1\n1,2\n2,3\n3,4\n4,5\n");
}

TEST_CASE("seq jsonl records") {
  const CliResult r = run_cli("seq --a 3 --k 0 --nmax 3 --form eq7 --format jsonl");
  CHECK(r.exit_code == 0);
  CHECK(r.out.substr(0, r.out.find('\n')) ==
        R"({"n":0,"a":3,"k":"0","form":"eq7","value":"1"})");
  const std::vector<Int> expected = form_series(EvalForm::Eq7, 3, 3);
  size_t pos = 0;
  long n = 0;
  while (pos < r.out.size()) {
    const size_t end = r.out.find('\n', pos);
    const auto rec = nlohmann::json::parse(r.out.substr(pos, end - pos));
    CHECK(rec.at("n").get<long>() == n);
    CHECK(rec.at("a").get<long>() == 3);
    CHECK(rec.at("k").get<std::string>() == "0");
    CHECK(rec.at("form").get<std::string>() == "eq7");
    CHECK(rec.at("value").get<std::string>() == to_string(expected[static_cast<size_t>(n)]));
    pos = end + 1;
    ++n;
  }
  CHECK(n == 4);
}

TEST_CASE("seq jsonl carries exact rationals at fractional k") {
  const CliResult r = run_cli("seq --a 2 --k -1/2 --nmax 2 --form naive --format jsonl");
  CHECK(r.exit_code == 0);
  CHECK(r.out.find(R"({"n":1,"a":2,"k":"-1/2","form":"naive","value":"7/2"})") != std::string::npos);
}

TEST_CASE("seq output is identical across forms, runs, and rational k") {
  for (const char* k : {"0", "2", "-1/2"}) {
    const std::string base = "seq --a 3 --k " + std::string(k) + " --nmax 6 --format bfile --form ";
    const CliResult naive = run_cli(base + "naive");
    const CliResult e6 = run_cli(base + "eq6");
    const CliResult e7 = run_cli(base + "eq7");
    CHECK(naive.exit_code == 0);
    CHECK(naive.out == e6.out);
    CHECK(naive.out == e7.out);
    const CliResult again = run_cli(base + "naive");
    CHECK(again.out == naive.out);
  }
}

TEST_CASE("seq usage errors exit 2") {
  CHECK(run_cli("seq --a 2").exit_code == 2);                                // missing --nmax
  CHECK(run_cli("seq --a 2 --nmax 3 --form bogus").exit_code == 2);
  CHECK(run_cli("seq --a 2 --nmax -1").exit_code == 2);
  CHECK(run_cli("seq --a 2 --nmax 3 --k 1//2").exit_code == 2);
  CHECK(run_cli("nosuchcommand").exit_code == 2);
}

TEST_CASE("verify sweeps exit 0 and print verdicts") {
  const CliResult thm1 = run_cli("verify thm1 --amin -3 --amax 5 --nmin 0 --nmax 6");
  CHECK(thm1.exit_code == 0);
  CHECK(thm1.out.find("thm1 a=-3 n=0 mode=symbolic: holds") != std::string::npos);
  CHECK(thm1.out.find("all 63 instances hold") != std::string::npos);

  const CliResult grid = run_cli("verify thm1 --amin 2 --amax 2 --nmin 0 --nmax 4 --mode grid");
  CHECK(grid.exit_code == 0);
  CHECK(grid.out.find("mode=grid: holds") != std::string::npos);

  const CliResult thm2 = run_cli("verify thm2 --nmin 0 --nmax 2 --amin 3 --amax 3");
  CHECK(thm2.exit_code == 0);
  CHECK(thm2.out.find("out of closed-form range") != std::string::npos);

  const CliResult lemma3 = run_cli("verify lemma3 --smax 3 --tmax 3");
  CHECK(lemma3.exit_code == 0);
  CHECK(lemma3.out.find("subsets round-tripped") != std::string::npos);

  const CliResult eq34 = run_cli("verify eq3eq4 --nmax 30");
  CHECK(eq34.exit_code == 0);

  const CliResult a34 = run_cli("verify a34 --nmax 20");
  CHECK(a34.exit_code == 0);
  CHECK(a34.out.find("a3forms") != std::string::npos);
  CHECK(a34.out.find("a4forms") != std::string::npos);
}

TEST_CASE("verify output is byte-identical under the worker cap variable") {
  const CliResult sequential = run_cli("verify lemma2 --nmax 12");
  CHECK(sequential.exit_code == 0);
  const CliResult parallel = run_cli("verify lemma2 --nmax 12", "BINOCONV_WORKERS=4");
  CHECK(parallel.exit_code == 0);
  CHECK(parallel.out == sequential.out);
}

TEST_CASE("verify usage errors exit 2") {
  CHECK(run_cli("verify nosuch").exit_code == 2);
  CHECK(run_cli("verify thm1 --nmin 5 --nmax 2").exit_code == 2);
  CHECK(run_cli("verify thm1 --nmin -3 --nmax 2").exit_code == 2);
  CHECK(run_cli("verify lemma3 --smin 0").exit_code == 2);
}

TEST_CASE("bijection demo with an explicit subset") {
  const CliResult r = run_cli("bijection --s 2 --t 1 --j 1 --set 4");
  CHECK(r.exit_code == 0);
  CHECK(r.out.find("p(A) = 2, i = 1") != std::string::npos);
  CHECK(r.out.find("B = {} in [1]") != std::string::npos);
  CHECK(r.out.find("C = {2} in [2]") != std::string::npos);
  CHECK(r.out.find("round-trip OK") != std::string::npos);
}

TEST_CASE("bijection enumeration mode") {
  const CliResult r = run_cli("bijection --s 1 --t 1 --j 1");
  CHECK(r.exit_code == 0);
  CHECK(r.out.find("i=0: 1 subsets (expected 1)") != std::string::npos);
  CHECK(r.out.find("i=1: 2 subsets (expected 2)") != std::string::npos);
  CHECK(r.out.find("total 3 = C(3,1) = 3") != std::string::npos);

  const CliResult empty = run_cli("bijection --s 3 --t 2 --j 0");
  CHECK(empty.exit_code == 0);
  CHECK(empty.out.find("total 1 = C(6,0) = 1") != std::string::npos);
}

TEST_CASE("bijection invalid subsets exit 2") {
  CHECK(run_cli("bijection --s 2 --t 1 --j 1 --set 9").exit_code == 2);    // out of range
  CHECK(run_cli("bijection --s 2 --t 1 --j 1 --set 1,2").exit_code == 2);  // wrong size
  CHECK(run_cli("bijection --s 2 --t 1 --j 1 --set x").exit_code == 2);
  CHECK(run_cli("bijection --s 2 --t 1 --j 3 --set 1,2,3").exit_code == 2);  // j > s
  CHECK(run_cli("bijection --s 2 --t 0 --j 1 --set 1").exit_code == 2);      // t < 1
}

TEST_CASE("bench gates on correctness and prints a timing table") {
  const CliResult r = run_cli("bench --a 2 --n 10 --reps 2");
  CHECK(r.exit_code == 0);
  CHECK(r.out.find("forms agree") != std::string::npos);
  CHECK(r.out.find("1048576") != std::string::npos);  // P_2(10) = 4^10
  CHECK(r.out.find("median-ms") != std::string::npos);
  CHECK(r.out.find("naive") != std::string::npos);
  CHECK(r.out.find("eq6") != std::string::npos);
  CHECK(r.out.find("eq7") != std::string::npos);

  const CliResult subset = run_cli("bench --a 3 --n 5 --forms eq6,eq7 --reps 1");
  CHECK(subset.exit_code == 0);
  CHECK(subset.out.find("naive") == std::string::npos);

  const CliResult small = run_cli("bench --a 4 --n 2 --reps 1");
  CHECK(small.exit_code == 0);
  CHECK(small.out.find("P_4(2) = 72") != std::string::npos);
}

TEST_CASE("bench usage errors exit 2") {
  CHECK(run_cli("bench --a 2 --n 5 --reps 0").exit_code == 2);
  CHECK(run_cli("bench --a 2 --n 5 --forms bogus").exit_code == 2);
  CHECK(run_cli("bench --a 2 --n -4").exit_code == 2);
  CHECK(run_cli("bench --n 5").exit_code == 2);
}
