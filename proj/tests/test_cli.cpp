#include <doctest.h>

#include <algorithm>
#include <cstdlib>
#include <filesystem>
#include <fstream>

#include "subprocess.hpp"

namespace {

const std::string cli = QROT_CLI_PATH;
const std::string golden = QROT_GOLDEN_DIR;

std::string golden_file(const std::string& name) {
  return read_file(golden + "/" + name);
}

}  // namespace

TEST_CASE("partitions subcommand") {
  auto r = run_command(cli + " partitions --class nc2 --k 4");
  CHECK(r.exit_code == 0);
  CHECK(r.out == "{1,2}{3,4}\n{1,4}{2,3}\n");

  auto odd = run_command(cli + " partitions --class nc2 --k 3");
  CHECK(odd.exit_code == 2);
  CHECK(odd.out.empty());
  auto err = run_command_stderr(cli + " partitions --class nc2 --k 3");
  CHECK(err.out.find("odd") != std::string::npos);

  auto dec = run_command(cli + " partitions --class nc2d --d '1*'");
  CHECK(dec.exit_code == 0);
  CHECK(dec.out == "{1,2}\n");

  auto none = run_command(cli + " partitions --class nc2d --d '11'");
  CHECK(none.exit_code == 0);
  CHECK(none.out.empty());

  auto nc4 = run_command(cli + " partitions --class nc --k 4");
  CHECK(nc4.exit_code == 0);
  // 14 lines, top first (canonical order), singletons last
  CHECK(std::count(nc4.out.begin(), nc4.out.end(), '\n') == 14);
  CHECK(nc4.out.starts_with("{1,2,3,4}\n"));
  CHECK(nc4.out.ends_with("{1}{2}{3}{4}\n"));
  CHECK(nc4.out.find("{1,3}{2,4}") == std::string::npos);

  auto bad = run_command(cli + " partitions --class frob --k 2");
  CHECK(bad.exit_code == 2);
}

TEST_CASE("mobius subcommand") {
  auto r = run_command(cli + " mobius --lower '{1}{2}{3}{4}' --upper "
                             "'{1,2,3,4}'");
  CHECK(r.exit_code == 0);
  CHECK(r.out == "-5\n");

  auto json = run_command(cli + " --format json mobius --lower '{1}{2}' "
                                "--upper '{1,2}'");
  CHECK(json.exit_code == 0);
  CHECK(json.out == "\"-1/1\"\n");

  auto bad = run_command(cli + " mobius --lower '{1,3}{2,4}' --upper "
                               "'{1,2,3,4}'");
  CHECK(bad.exit_code == 2);
}

TEST_CASE("weingarten subcommand") {
  auto j = run_command(
      cli + " --format json weingarten --flavor orthogonal --k 2 --n 2");
  CHECK(j.exit_code == 0);
  CHECK(j.out == golden_file("weingarten_orthogonal_k2_n2.json"));

  auto small = run_command(cli + " weingarten --flavor orthogonal --k 2 --n 1");
  CHECK(small.exit_code == 2);

  auto u = run_command(
      cli + " --format json weingarten --flavor unitary --d '1*1*' --n 3");
  CHECK(u.exit_code == 0);
  CHECK(u.out == golden_file("weingarten_unitary_d1s1s_n3.json"));
  // same matrix as the orthogonal k=2, n=3 table
  auto o3 = run_command(
      cli + " --format json weingarten --flavor orthogonal --k 2 --n 3");
  auto tail = [](const std::string& s) {
    return s.substr(s.find("\"index\""));
  };
  CHECK(tail(u.out) == tail(o3.out));

  auto plain = run_command(cli + " weingarten --flavor orthogonal --k 2 --n 2");
  CHECK(plain.out ==
        "{1,2}{3,4}\n{1,4}{2,3}\n1/3 -1/6\n-1/6 1/3\n");

  auto csv = run_command(
      cli + " --format csv weingarten --flavor orthogonal --k 2 --n 2");
  CHECK(csv.out ==
        "{1,2}{3,4},{1,4}{2,3}\n1/3,-1/6\n-1/6,1/3\n");
}

TEST_CASE("haar subcommand") {
  auto a = run_command(cli + " haar --flavor orthogonal --n 3 --word '1,1 1,1'");
  CHECK(a.exit_code == 0);
  CHECK(a.out == "1/3\n");
  auto b = run_command(
      cli + " haar --flavor orthogonal --n 2 --word '1,1 1,1 1,1 1,1'");
  CHECK(b.out == "1/3\n");
  auto c = run_command(
      cli + " haar --flavor orthogonal --n 2 --word '1,1 1,2 2,1'");
  CHECK(c.exit_code == 0);
  CHECK(c.out == "0\n");
  auto u = run_command(cli + " haar --flavor unitary --n 2 --word '1,1 1,1*'");
  CHECK(u.out == "1/2\n");
  auto bad = run_command(cli + " haar --flavor orthogonal --n 2 --word '3,1 3,1'");
  CHECK(bad.exit_code == 2);
  auto approx =
      run_command(cli + " --approx haar --flavor orthogonal --n 3 --word '1,1 1,1'");
  CHECK(approx.out.starts_with("1/3 ~= 0.333333"));
}

TEST_CASE("moments and cumulants subcommands") {
  auto m = run_command(
      cli + " moments --model semicircle:c=1 --word '1 1 1 1'");
  CHECK(m.out == "2\n");
  auto circ = run_command(
      cli + " moments --model 'circular:eta=1,theta=2' --word '1 1*'");
  CHECK(circ.out == "2\n");
  auto row = run_command(
      cli + " moments --model row-orthogonal:n=2 --word '1 1 1 1'");
  CHECK(row.out == "1/3\n");

  auto cum = run_command(
      cli + " cumulants --model semicircle:c=1 --word '1 1 1 1'");
  CHECK(cum.exit_code == 0);
  CHECK(cum.out == golden_file("cumulants_semicircle_1111.json"));

  auto csv = run_command(
      cli + " --format csv cumulants --model semicircle:c=1 --word '1 1'");
  CHECK(csv.out == "partition,value\n{1,2},1/1\n{1}{2},0/1\n");

  auto bad = run_command(cli + " moments --model nonsense:x=1 --word '1'");
  CHECK(bad.exit_code == 2);
}

TEST_CASE("verify subcommands") {
  auto rot = run_command(cli + " verify rotatable --model semicircle:c=1 "
                               "--flavor orthogonal --n 2 --max-degree 4");
  CHECK(rot.exit_code == 0);
  CHECK(rot.out == golden_file("verify_rotatable_semicircle_n2.json"));

  auto cex = run_command(cli + " verify counterexample --n 2");
  CHECK(cex.exit_code == 0);
  CHECK(cex.out == golden_file("verify_counterexample_n2.json"));

  auto scan = run_command(cli + " verify bound-scan --flavor orthogonal --k 2 "
                                "--n-min 2 --n-max 50");
  CHECK(scan.exit_code == 0);
  CHECK(scan.out == golden_file("verify_bound_scan_k2.json"));

  auto bad = run_command(cli + " verify rotatable --model semicircle:c=1 "
                               "--flavor orthogonal --n 1");
  CHECK(bad.exit_code == 2);
}

TEST_CASE("byte determinism") {
  for (const std::string args :
       {" --format json weingarten --flavor orthogonal --k 3 --n 5",
        " verify counterexample --n 3",
        " cumulants --model 'circular:eta=1,theta=1' --word '1 1* 1 1*'"}) {
    auto a = run_command(cli + args);
    auto b = run_command(cli + args);
    CHECK(a.exit_code == b.exit_code);
    CHECK(a.out == b.out);
  }
}

TEST_CASE("cache flow through the CLI") {
  namespace fs = std::filesystem;
  fs::path dir = fs::temp_directory_path() / "qrot_cli_cache_test";
  fs::remove_all(dir);
  fs::create_directories(dir);
  std::string base = cli + " --cache-dir " + dir.string();

  auto first = run_command(
      base + " --format json weingarten --flavor orthogonal --k 2 --n 3");
  CHECK(first.exit_code == 0);
  fs::path file = dir / "orthogonal_k2_n3.wgt";
  REQUIRE(fs::exists(file));

  auto ok = run_command(base + " cache validate");
  CHECK(ok.exit_code == 0);
  CHECK(ok.out == "orthogonal_k2_n3.wgt OK\n");

  auto again = run_command(
      base + " --format json weingarten --flavor orthogonal --k 2 --n 3");
  CHECK(again.out == first.out);

  // corrupt one matrix entry: validation must fail with exit 3
  std::string contents = read_file(file.string());
  auto pos = contents.find("1/8");
  REQUIRE(pos != std::string::npos);
  contents.replace(pos, 3, "1/9");
  std::ofstream(file, std::ios::binary) << contents;
  auto corrupt = run_command(base + " cache validate");
  CHECK(corrupt.exit_code == 3);

  // the environment variable is an alternative to the flag
  fs::remove_all(dir);
  fs::create_directories(dir);
  auto env = run_command("QROT_CACHE_DIR=" + dir.string() + " " + cli +
                         " weingarten --flavor orthogonal --k 1 --n 3");
  CHECK(env.exit_code == 0);
  CHECK(env.out == "{1,2}\n1/3\n");
  CHECK(fs::exists(dir / "orthogonal_k1_n3.wgt"));
  fs::remove_all(dir);
}

TEST_CASE("usage errors exit 2") {
  CHECK(run_command(cli).exit_code == 2);
  CHECK(run_command(cli + " weingarten --flavor orthogonal --k 2").exit_code ==
        2);  // missing --n
  CHECK(run_command(cli + " --format yaml partitions --class nc --k 2")
            .exit_code == 2);
}
