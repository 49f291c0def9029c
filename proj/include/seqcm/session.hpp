#pragma once

#include <map>
#include <string>

#include "invariants.hpp"

namespace seqcm {

// Parse error with 1-based line information.
struct ParseError : std::runtime_error {
  int line;
  ParseError(int line_, const std::string& msg)
      : std::runtime_error("line " + std::to_string(line_) + ": " + msg), line(line_) {}
};

struct EngineError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Command {
  std::string verb;                 // profile | classify | check-seq | find-seq |
                                    // decide | invariants | harness
  std::string ideal_name;
  std::string what;                 // decide: cm|gcm|scm|sgcm; check/find: kind
  std::vector<Polynomial> elements; // classify / check-seq arguments
  int length = 0;                   // find-seq
};

// A parsed input file: one ring, named ideals and elements, one command.
struct SessionInput {
  RingPtr ring;
  std::map<std::string, MonomialIdeal> monomial_ideals;
  std::map<std::string, std::vector<Polynomial>> ideals;  // generator lists as given
  std::map<std::string, Polynomial> elements;
  Command command;
};

SessionInput parse_session(const std::string& text);

struct RunOptions {
  std::uint64_t seed = 0;
  int samples = 25;
};

// Human text and the canonical machine-readable document; the latter is
// byte-stable for a fixed input and seed.
struct ReportDocument {
  std::string human;
  std::string json;
};

ReportDocument run_session(const SessionInput& in, const RunOptions& opts);

// Bundled example inputs (name -> input text).
const std::map<std::string, std::string>& fixtures();

}  // namespace seqcm
