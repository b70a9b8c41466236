#include <filesystem>
#include <set>

#include "doctest.h"
#include "smashcoh/cli/run.hpp"

using namespace smashcoh;

namespace {

bool mentions(const std::vector<std::string>& msgs, const std::string& needle) {
  for (const auto& m : msgs)
    if (m.find(needle) != std::string::npos) return true;
  return false;
}

std::vector<std::string> parse_errors(const std::string& text) {
  try {
    parse_job_text(text, "inline");
  } catch (const ParseError& e) {
    return e.errors();
  }
  return {};
}

std::vector<std::string> violations(const std::string& text) {
  try {
    parse_job_text(text, "inline");
  } catch (const ValidationError& e) {
    return e.violations();
  }
  return {};
}

const char* kMinimal = "[gamma]\ngroup = trivial\n[algebra]\nbuiltin = ground\n";

}  // namespace

TEST_CASE("every fixture parses and validates") {
  int seen = 0;
  std::set<std::string> tasks;
  for (const auto& entry : std::filesystem::directory_iterator(SMASHCOH_FIXTURE_DIR)) {
    if (entry.path().extension() != ".job") continue;
    CAPTURE(entry.path().string());
    JobSpec job = parse_job(entry.path().string());
    tasks.insert(job.task);
    ++seen;
    job.task = "validate";
    Report r = run_job(job);
    CHECK(r.exit_code == 0);
  }
  CHECK(seen >= 8);
  CHECK(tasks.count("lhs") == 1);
  CHECK(tasks.count("oracle-compare") == 1);
}

TEST_CASE("minimal trivial job") {
  JobSpec job = parse_job_text(kMinimal, "minimal");
  CHECK(job.task == "hh");
  CHECK(job.maxdeg == 3);
  CHECK(job.field.is_rational());
  Report r = run_job(job);
  CHECK(r.exit_code == 0);
  CHECK(r.text.find("dims 1,0,0,0") != std::string::npos);
  CHECK(r.json.find("\"dims\"") != std::string::npos);
  CHECK(run_job(job).json == r.json);
}

TEST_CASE("overrides take precedence over the file") {
  JobOverrides over;
  over.maxdeg = 1;
  over.field = "p=3";
  over.task = "validate";
  JobSpec job = parse_job_text(std::string("maxdeg = 5\nfield = q\n") + kMinimal, "over", over);
  CHECK(job.maxdeg == 1);
  CHECK(job.field.characteristic() == 3);
  CHECK(job.task == "validate");
}

TEST_CASE("syntax errors carry line numbers") {
  auto errs = parse_errors("task = hh\nbogus line\n[gamma]\ngroup = cyclic 2\n[algebra]\nbuiltin = ground\n[nope]\n");
  CHECK(mentions(errs, "line 2: expected 'key = value'"));
  CHECK(mentions(errs, "line 7: unknown section [nope]"));
  CHECK(mentions(parse_errors("task = frobnicate\n"), "line 1: unknown task"));
  CHECK(mentions(parse_errors("maxdeg = x\n"), "line 1: 'maxdeg' must be an integer"));
  CHECK(mentions(parse_errors("field = p=4\n"), "line 1: bad prime field"));
  CHECK(mentions(parse_errors(std::string(kMinimal) + "[action]\nact t 1 = 1\n"), "line 6: unknown basis element"));
  CHECK(mentions(parse_errors("[gamma]\ngroup = cyclic 2\n[algebra]\nbasis = 1 x\nunit = 1\nmul x x = 2*y\n"),
                 "line 6: unknown basis element 'y'"));
  CHECK(mentions(parse_errors("task = ext\n[gamma]\ngroup = trivial\n[algebra]\nbuiltin = ground\n"),
                 "task ext needs a [module] section"));
  CHECK(mentions(parse_errors("maxdeg = 1\nmaxdeg = 2\n"), "line 2: duplicate key"));
}

TEST_CASE("a non-associative multiplication table is rejected") {
  // x.x = y, x.y = 0, y.x = x breaks (x x) x = x (x x)
  auto bad = violations("[gamma]\ngroup = trivial\n[algebra]\nbasis = 1 x y\nunit = 1\nmul x x = y\nmul y x = x\n");
  CHECK(mentions(bad, "algebra: associativity fails"));
}

TEST_CASE("actions that are not module-algebra actions are rejected") {
  // x -> 2x is not an algebra automorphism of order two
  auto bad = violations("[gamma]\ngroup = cyclic 2 t\n[algebra]\nbuiltin = truncated 2 x\n[action]\nact t x = 2*x\n");
  CHECK(!bad.empty());
  CHECK(mentions(bad, "action: "));
  auto lhs = violations("task = lhs\n[lhs]\nn = cyclic 3 r\ng = cyclic 2 s\nact s = 1 r r^2 \nact 1 = r 1 r^2\n");
  CHECK(mentions(lhs, "lhs: "));
}

TEST_CASE("custom Hopf algebra agrees with the builtin Sweedler algebra") {
  std::string custom = R"(
maxdeg = 1
[gamma]
hopf = custom
basis = 1 g x gx
unit = 1
mul g g = 1
mul g x = gx
mul g gx = x
mul x g = -gx
mul x x = 0
mul x gx = 0
mul gx g = -x
mul gx x = 0
mul gx gx = 0
coproduct 1 = 1|1
coproduct g = g|g
coproduct x = x|1 + g|x
coproduct gx = gx|g + 1|gx
counit 1 = 1
counit g = 1
counit x = 0
counit gx = 0
antipode 1 = 1
antipode g = g
antipode x = -gx
antipode gx = x
[algebra]
builtin = truncated 2 y
[action]
act g y = -y
act x y = 1
act gx y = 1
)";
  std::string builtin = "maxdeg = 1\n[gamma]\nhopf = sweedler\n[algebra]\nbuiltin = truncated 2 y\n[action]\n"
                        "act g y = -y\nact x y = 1\nact gx y = 1\n";
  JobSpec a = parse_job_text(custom, "custom"), b = parse_job_text(builtin, "builtin");
  CHECK(a.action->hopf.dim() == 4);
  CHECK(antipode_order(a.action->hopf) == 4);
  a.name = b.name = "h4";
  CHECK(run_job(a).json == run_job(b).json);
}

TEST_CASE("modules and extensions from job text") {
  std::string base = "[gamma]\ngroup = cyclic 2 t\n[algebra]\nbuiltin = truncated 2 x\n[action]\nact t x = -x\n";
  JobSpec m = parse_job_text(base + "[module]\nkind = matrices\ndim = 1\na x = 0\ng t = -1\n", "sgn");
  CHECK(m.module->dim == 1);
  auto bad = violations(base + "[module]\nkind = matrices\ndim = 1\na x = 1\ng t = 1\n");
  CHECK(mentions(bad, "module: "));
  CHECK(mentions(parse_errors(base + "[module]\nkind = matrices\ndim = 2\na x = 0 1\ng t = 1 0; 0 -1\n"),
                 "matrix needs 2 rows"));
  JobSpec c = parse_job_text(base + "[extension]\nkind = character\n", "counit");
  CHECK(c.extension->target.dim() == 1);
}

TEST_CASE("oracle-compare and ss tasks on the sign action") {
  std::string base = "maxdeg = 2\n[gamma]\ngroup = cyclic 2 t\n[algebra]\nbuiltin = truncated 2 x\n[action]\nact t x = -x\n";
  JobOverrides o;
  o.task = "oracle-compare";
  Report r = run_job(parse_job_text(base, "sign", o));
  CHECK(r.exit_code == 0);
  CHECK(r.text.find("agree") != std::string::npos);
  o.task = "ss";
  r = run_job(parse_job_text(base, "sign", o));
  CHECK(r.exit_code == 0);
  CHECK(r.text.find("E_inf") != std::string::npos);
}
