#include <fstream>
#include <iostream>

#include "CLI11.hpp"

#include "smashcoh/cli/run.hpp"

int main(int argc, char** argv) {
  CLI::App app{"Cohomology of smash products A # Gamma from a job file"};
  app.set_version_flag("--version", std::string("smashcoh ") + smashcoh::kVersion);
  std::string path, out;
  smashcoh::JobOverrides over;
  app.add_option("job", path, "Job file")->required()->check(CLI::ExistingFile);
  app.add_option("--maxdeg", over.maxdeg, "Highest cohomological degree")->check(CLI::NonNegativeNumber);
  app.add_option("--pages", over.pages, "Number of spectral sequence pages")->check(CLI::PositiveNumber);
  app.add_option("--field", over.field, "q or p=<prime>");
  app.add_option("--task", over.task, "Task to run")->check(CLI::IsMember(smashcoh::job_tasks()));
  app.add_option("--out", out, "Write the report here instead of stdout");
  bool json = false;
  app.add_flag("--json", json, "Emit JSON regardless of the job's output key");
  CLI11_PARSE(app, argc, argv);

  try {
    smashcoh::JobSpec job = smashcoh::parse_job(path, over);
    smashcoh::Report report = smashcoh::run_job(job);
    const std::string& body = json || job.output == "json" ? report.json : report.text;
    if (out.empty()) {
      std::cout << body;
    } else {
      std::ofstream f(out);
      if (!f) {
        std::cerr << "cannot write " << out << "\n";
        return 2;
      }
      f << body;
    }
    return report.exit_code;
  } catch (const smashcoh::ParseError& e) {
    std::cerr << path << ": " << e.what() << "\n";
    for (const auto& err : e.errors()) std::cerr << "  " << err << "\n";
    return 3;
  } catch (const smashcoh::ValidationError& e) {
    std::cerr << path << ": " << e.what() << "\n";
    for (const auto& v : e.violations()) std::cerr << "  " << v << "\n";
    return 4;
  } catch (const std::exception& e) {
    std::cerr << path << ": " << e.what() << "\n";
    return 5;
  }
}
