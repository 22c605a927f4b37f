/*
 * Copyright 2026 The spep Authors.
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#include <sys/wait.h>

#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>

#include "doctest.h"

namespace {

struct Run {
  int status = -1;
  std::string out;
};

Run run(const std::string& args) {
  const std::string cmd = std::string(SPEP_CLI_PATH) + " " + args + " 2>/dev/null";
  Run r;
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) return r;
  char buf[4096];
  std::size_t n = 0;
  while ((n = std::fread(buf, 1, sizeof buf, pipe)) > 0) r.out.append(buf, n);
  const int raw = pclose(pipe);
  r.status = WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
  return r;
}

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

}  // namespace

TEST_CASE("curves to stdout") {
  const Run r = run("curves --points 6");
  CHECK(r.status == 0);
  CHECK(r.out.find("F,f_opt,f_1,theta_opt,p_opt,p_1\n") != std::string::npos);
  CHECK(r.out.find("\n1,1,1,0.392699081698724,0.5,0.5\n") != std::string::npos);
}

TEST_CASE("output file and byte-identical reruns") {
  const std::string a = "cli_curves_a.csv";
  const std::string b = "cli_curves_b.csv";
  REQUIRE(run("curves --points 21 --out " + a).status == 0);
  REQUIRE(run("curves --points 21 --out " + b).status == 0);
  CHECK(!slurp(a).empty());
  CHECK(slurp(a) == slurp(b));
  std::remove(a.c_str());
  std::remove(b.c_str());
}

TEST_CASE("optimize output is independent of the worker count") {
  const std::string flags = "optimize --fidelities 0.8 --ancilla 0,1 --restarts 3 --seed 5";
  const Run one = run(flags + " --workers 1");
  const Run four = run(flags + " --workers 4");
  CHECK(one.status == 0);
  CHECK(one.out == four.out);
  CHECK(one.out.find("F,ancilla_per_side,best_fidelity,f_opt,gap,evaluations\n") != std::string::npos);
}

TEST_CASE("visibility columns") {
  const Run r = run("visibility --points 3 --visibilities 1,0.9");
  CHECK(r.status == 0);
  CHECK(r.out.find("F,dF_V1,dF_V0.9\n") != std::string::npos);
}

TEST_CASE("verify exit status") {
  const Run ok = run("verify");
  CHECK(ok.status == 0);
  CHECK(ok.out.find("all checks passed") != std::string::npos);
  const Run bad = run("verify --inject-fault b-minus-sign");
  CHECK(bad.status == 1);
  CHECK(bad.out.find("FAIL conditional-coefficients") != std::string::npos);
}

TEST_CASE("usage and io errors") {
  CHECK(run("").status == 2);
  CHECK(run("nonsense").status == 2);
  CHECK(run("curves --points 1").status == 2);
  CHECK(run("curves --points many").status == 2);
  CHECK(run("optimize --ancilla 3").status == 2);
  CHECK(run("curves --out /nonexistent-dir/x.csv").status == 3);
  CHECK(run("--help").status == 0);
}
