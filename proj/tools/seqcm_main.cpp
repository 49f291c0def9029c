#include <CLI11.hpp>

#include <fstream>
#include <iostream>

#include "seqcm/session.hpp"

int main(int argc, char** argv) {
  CLI::App app{"seqcm: sequential Cohen-Macaulay profiles of graded quotients over Q"};

  std::string input_file;
  std::string fixture;
  bool list_fixtures = false;
  std::uint64_t seed = 0;
  int samples = 25;
  std::string format = "human";

  app.add_option("input", input_file, "input file (ring/ideal/element declarations + command)");
  app.add_option("--fixture", fixture, "run a bundled example input by name");
  app.add_flag("--list-fixtures", list_fixtures, "list bundled example inputs");
  app.add_option("--seed", seed, "seed for all randomized searches (default 0)");
  app.add_option("--samples", samples, "sample count for the harness (default 25)");
  app.add_option("--format", format, "human | json")
      ->check(CLI::IsMember({"human", "json"}));

  CLI11_PARSE(app, argc, argv);

  if (list_fixtures) {
    for (const auto& [name, text] : seqcm::fixtures()) {
      std::string first_line = text.substr(0, text.find('\n'));
      std::cout << name << "  " << first_line << "\n";
    }
    return 0;
  }

  std::string text;
  if (!fixture.empty()) {
    auto it = seqcm::fixtures().find(fixture);
    if (it == seqcm::fixtures().end()) {
      std::cerr << "error: unknown fixture '" << fixture << "' (try --list-fixtures)\n";
      return 2;
    }
    text = it->second;
  } else if (!input_file.empty()) {
    std::ifstream f(input_file);
    if (!f) {
      std::cerr << "error: cannot open '" << input_file << "'\n";
      return 2;
    }
    std::ostringstream ss;
    ss << f.rdbuf();
    text = ss.str();
  } else {
    std::cerr << "error: provide an input file or --fixture NAME\n";
    return 2;
  }

  try {
    seqcm::SessionInput in = seqcm::parse_session(text);
    seqcm::RunOptions opts;
    opts.seed = seed;
    opts.samples = samples;
    auto t0 = std::chrono::steady_clock::now();
    seqcm::ReportDocument doc = seqcm::run_session(in, opts);
    auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                  std::chrono::steady_clock::now() - t0)
                  .count();
    if (format == "json") {
      std::cout << doc.json;
    } else {
      std::cout << doc.human;
      std::cout << "(" << ms << " ms, seed " << seed << ")\n";
    }
    return 0;
  } catch (const seqcm::ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const seqcm::EngineError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 1;
  }
}
