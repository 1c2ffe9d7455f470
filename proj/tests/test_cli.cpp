// Copyright 2026 the ccpark authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "ccpark/io.hpp"

namespace fs = std::filesystem;

namespace {

std::string cli() { return CCPARK_CLI_PATH; }
std::string scenario(const std::string & name)
{
  return std::string(CCPARK_SCENARIO_DIR) + "/" + name;
}

int run(const std::string & args)
{
  const std::string cmd = cli() + " " + args + " > /dev/null 2>&1";
  const int status = std::system(cmd.c_str());
  return WEXITSTATUS(status);
}

fs::path fresh_dir(const std::string & tag)
{
  const fs::path dir = fs::temp_directory_path() / ("ccpark_cli_" + tag);
  fs::remove_all(dir);
  fs::create_directories(dir);
  return dir;
}

}  // namespace

TEST_CASE("cli plan: success artifacts and exit code")
{
  const fs::path out = fresh_dir("plan");
  const int code =
      run("plan " + scenario("empty.scn") + " --seed 7 --iters 500 --out " + out.string() +
          " --svg");
  CHECK(code == 0);
  CHECK(fs::exists(out / "path.csv"));
  CHECK(fs::exists(out / "history.csv"));
  CHECK(fs::exists(out / "stats.txt"));
  CHECK(fs::exists(out / "tree.csv"));
  CHECK(fs::exists(out / "plan.svg"));
}

TEST_CASE("cli plan: no path and input errors map to distinct exit codes")
{
  const fs::path out = fresh_dir("fail");
  CHECK(run("plan " + scenario("walled.scn") + " --iters 120 --out " + out.string()) == 2);
  CHECK(run("plan /nonexistent/file.scn --out " + out.string()) == 1);
  CHECK(run("plan " + scenario("empty.scn") + " --iters 100 --tmax 1 --out " + out.string()) ==
        1);
}

TEST_CASE("cli plan: identical seed and budget give byte-identical output")
{
  const fs::path a = fresh_dir("det_a");
  const fs::path b = fresh_dir("det_b");
  REQUIRE(run("plan " + scenario("empty.scn") + " --seed 9 --iters 400 --out " + a.string()) ==
          0);
  REQUIRE(run("plan " + scenario("empty.scn") + " --seed 9 --iters 400 --out " + b.string()) ==
          0);
  CHECK(ccpark::read_file((a / "path.csv").string()) ==
        ccpark::read_file((b / "path.csv").string()));
  CHECK(ccpark::read_file((a / "history.csv").string()) ==
        ccpark::read_file((b / "history.csv").string()));
}

TEST_CASE("cli render: well-formed vector output with styled tree segments")
{
  const fs::path out = fresh_dir("render");
  REQUIRE(run("plan " + scenario("perpendicular_open.scn") + " --seed 3 --iters 500 --out " +
              out.string()) == 0);
  const std::string svg_file = (out / "scene.svg").string();
  REQUIRE(run("render " + scenario("perpendicular_open.scn") + " --tree " +
              (out / "tree.csv").string() + " --path " + (out / "path.csv").string() +
              " --svg-out " + svg_file) == 0);
  const std::string svg = ccpark::read_file(svg_file);
  CHECK(svg.find("<svg") != std::string::npos);
  CHECK(svg.rfind("</svg>") != std::string::npos);
  CHECK(svg.find("seg-straight") != std::string::npos);
  CHECK(svg.find("seg-clothoid") != std::string::npos);
  CHECK(svg.find("seg-arc") != std::string::npos);
  CHECK(svg.find("class=\"plan\"") != std::string::npos);
  // Scenario-only rendering also works.
  CHECK(run("render " + scenario("empty.scn") + " --svg-out " + (out / "env.svg").string()) ==
        0);
}

TEST_CASE("cli simulate: prerecorded path input produces a report")
{
  const fs::path out = fresh_dir("sim");
  REQUIRE(run("plan " + scenario("perpendicular_open.scn") + " --seed 4 --iters 700 --out " +
              out.string()) == 0);
  CHECK(run("simulate " + scenario("perpendicular_open.scn") + " --path " +
            (out / "path.csv").string() + " --out " + out.string()) == 0);
  CHECK(fs::exists(out / "tracking.csv"));
  CHECK(fs::exists(out / "tracking_summary.txt"));
}

TEST_CASE("cli bench: single run produces the report files")
{
  const fs::path out = fresh_dir("bench");
  CHECK(run("bench " + scenario("empty.scn") +
            " --variants min_cost_tree --runs 1 --iters 400 --seed 2 --out " + out.string()) ==
        0);
  REQUIRE(fs::exists(out / "bench.csv"));
  REQUIRE(fs::exists(out / "bench.txt"));
  const std::string csv = ccpark::read_file((out / "bench.csv").string());
  // Header plus exactly one data row.
  CHECK(std::count(csv.begin(), csv.end(), '\n') == 2);
  CHECK(csv.find("min_cost_tree") != std::string::npos);
}
