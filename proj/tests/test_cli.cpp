#include <doctest.h>

#include <array>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sys/wait.h>

namespace {

struct Outcome {
  int status;
  std::string out;
};

Outcome run(const std::string& args) {
  const std::string cmd = std::string(BWSD_CLI_PATH) + " " + args + " 2>/dev/null";
  Outcome o{0, {}};
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::array<char, 4096> buf{};
  std::size_t got;
  while ((got = fread(buf.data(), 1, buf.size(), pipe)) > 0) o.out.append(buf.data(), got);
  int raw = pclose(pipe);
  o.status = WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
  return o;
}

std::string temp_file(const std::string& name, const std::string& content) {
  auto path = std::filesystem::temp_directory_path() / ("bwsd_cli_" + name);
  std::ofstream(path, std::ios::binary) << content;
  return path.string();
}

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

}  // namespace

TEST_CASE("worked example through the CLI") {
  const auto input = temp_file("pair.txt", "banana\nanaba\n");
  auto dm = run("--input " + input + " --format lines --algorithm sf --measure dm");
  CHECK(dm.status == 0);
  CHECK(dm.out == "1\t2\n0.000000\t0.181818\n0.181818\t0.000000\n");

  auto de = run("--input " + input + " --algorithm rmq --measure de");
  CHECK(de.status == 0);
  CHECK(de.out.find("0.684038") != std::string::npos);
}

TEST_CASE("all engines and thread counts give byte-identical files") {
  const auto input = temp_file("many.fa",
                               ">a\nacgtacgt\n>b\nacgaacgt\n>c\nttttacg\n>d\nacgtacgt\n>e\ng\n");
  const auto reference = run("-i " + input + " -a sf");
  REQUIRE(reference.status == 0);
  for (std::string a : {"bit", "bit-sd", "wt", "rmq", "rmq-light"}) {
    for (std::string t : {"1", "3"}) {
      auto r = run("-i " + input + " -a " + a + " -t " + t);
      CHECK(r.status == 0);
      CHECK(r.out == reference.out);
    }
  }
  CHECK(reference.out.rfind("a\tb\tc\td\te\n", 0) == 0);
}

TEST_CASE("output options") {
  const auto input = temp_file("out.txt", "banana\nanaba\n");
  auto phylip = run("-i " + input + " --output-format phylip");
  CHECK(phylip.out == "2\n1         0.000000 0.181818\n2         0.181818 0.000000\n");

  const auto out = (std::filesystem::temp_directory_path() / "bwsd_cli_matrix").string();
  CHECK(run("-i " + input + " -o " + out).status == 0);
  CHECK(slurp(out).find("0.181818") != std::string::npos);

  CHECK(run("-i " + input + " -m both -o " + out).status == 0);
  CHECK(slurp(out + ".dm").find("0.181818") != std::string::npos);
  CHECK(slurp(out + ".de").find("0.684038") != std::string::npos);
  CHECK(run("-i " + input + " -m both").status == 1);

  auto limited = run("-i " + input + " --docs 1");
  CHECK(limited.status == 0);
  CHECK(limited.out == "1\n0.000000\n");
}

TEST_CASE("exit codes") {
  const auto input = temp_file("codes.txt", "banana\nanaba\n");
  CHECK(run("-i " + input + " --docs 0").status == 1);
  CHECK(run("-i " + input + " --docs 3").status == 1);
  CHECK(run("-i " + input + " --bogus").status == 1);
  CHECK(run("-i " + input + " -a fast").status == 1);
  CHECK(run("-i " + input + " -t 0").status == 1);
  CHECK(run("").status == 1);
  CHECK(run("-i /nonexistent/bwsd.txt").status == 2);
  CHECK(run("-i " + temp_file("bad.fa", "acgt\n") + " -f fasta").status == 3);
  CHECK(run("-i " + temp_file("empty.txt", "")).status == 3);
}
