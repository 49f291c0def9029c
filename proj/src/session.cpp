#include "seqcm/session.hpp"

#include <json.hpp>

#include <sstream>

namespace seqcm {

namespace {

using Json = nlohmann::ordered_json;

std::string trim(const std::string& s) {
  size_t a = s.find_first_not_of(" \t\r\n");
  if (a == std::string::npos) return "";
  size_t b = s.find_last_not_of(" \t\r\n");
  return s.substr(a, b - a + 1);
}

// Statements are separated by newlines or by semicolons at paren depth zero.
std::vector<std::pair<int, std::string>> split_statements(const std::string& text) {
  std::vector<std::pair<int, std::string>> out;
  std::string cur;
  int line = 1, start_line = 1, depth = 0;
  auto flush = [&] {
    std::string t = trim(cur);
    if (!t.empty() && t[0] != '#') out.push_back({start_line, t});
    cur.clear();
    start_line = line;
  };
  for (char ch : text) {
    if (ch == '(') ++depth;
    if (ch == ')') --depth;
    if (ch == '\n') {
      flush();
      ++line;
      start_line = line;
      continue;
    }
    if (ch == ';' && depth == 0) {
      flush();
      continue;
    }
    cur.push_back(ch);
  }
  flush();
  return out;
}

std::vector<std::string> split_top_level(const std::string& s, const std::string& seps) {
  std::vector<std::string> out;
  std::string cur;
  int depth = 0;
  for (char ch : s) {
    if (ch == '(') ++depth;
    if (ch == ')') --depth;
    if (depth == 0 && seps.find(ch) != std::string::npos) {
      out.push_back(trim(cur));
      cur.clear();
      continue;
    }
    cur.push_back(ch);
  }
  out.push_back(trim(cur));
  return out;
}

std::vector<std::string> words(const std::string& s) {
  std::istringstream is(s);
  std::vector<std::string> out;
  std::string w;
  while (is >> w) out.push_back(w);
  return out;
}

bool valid_name(const std::string& s) {
  if (s.empty() || (!std::isalpha(static_cast<unsigned char>(s[0])) && s[0] != '_')) return false;
  for (char c : s)
    if (!std::isalnum(static_cast<unsigned char>(c)) && c != '_' && c != '-') return false;
  return true;
}

// "(p1, p2, ...)" -> generator polynomials
std::vector<Polynomial> parse_gen_list(const RingPtr& ring, const std::string& text, int line) {
  std::string t = trim(text);
  if (t.size() < 2 || t.front() != '(' || t.back() != ')')
    throw ParseError(line, "expected a parenthesized generator list");
  std::vector<Polynomial> out;
  for (const auto& part : split_top_level(t.substr(1, t.size() - 2), ",")) {
    if (part.empty()) throw ParseError(line, "empty generator");
    try {
      out.push_back(parse_polynomial(ring, part));
    } catch (const std::invalid_argument& e) {
      throw ParseError(line, std::string(e.what()) + " in '" + part + "'");
    }
  }
  return out;
}

std::optional<MonomialIdeal> as_monomial_ideal(const RingPtr& ring,
                                               const std::vector<Polynomial>& gens) {
  std::vector<Monomial> ms;
  for (const auto& g : gens) {
    if (g.is_zero()) continue;
    if (!g.is_term()) return std::nullopt;
    ms.push_back(g.leading_term().mono);
  }
  return MonomialIdeal(ring, ms);
}

Polynomial element_arg(const SessionInput& in, const std::string& tok, int line) {
  auto it = in.elements.find(tok);
  if (it != in.elements.end()) return it->second;
  try {
    return parse_polynomial(in.ring, tok);
  } catch (const std::invalid_argument&) {
    throw ParseError(line, "undeclared element '" + tok + "'");
  }
}

}  // namespace

SessionInput parse_session(const std::string& text) {
  SessionInput in;
  bool have_command = false;
  for (const auto& [line, stmt] : split_statements(text)) {
    auto ws = words(stmt);
    if (ws.empty()) continue;
    const std::string& head = ws[0];

    if (head == "ring") {
      if (in.ring) throw ParseError(line, "ring already declared");
      std::string rest = trim(stmt.substr(4));
      if (rest.rfind("Q[", 0) != 0 || rest.back() != ']')
        throw ParseError(line, "expected ring Q[v1,...,vn]");
      std::vector<std::string> names;
      for (const auto& v : split_top_level(rest.substr(2, rest.size() - 3), ","))
        if (!v.empty()) names.push_back(v);
      if (names.empty()) throw ParseError(line, "ring needs at least one variable");
      try {
        in.ring = make_ring(names);
      } catch (const std::invalid_argument& e) {
        throw ParseError(line, e.what());
      }
      continue;
    }

    if (head == "ideal" || head == "element") {
      if (!in.ring) throw ParseError(line, "declare the ring first");
      size_t eq = stmt.find('=');
      if (eq == std::string::npos) throw ParseError(line, "expected '='");
      auto lhs = words(stmt.substr(0, eq));
      if (lhs.size() != 2 || !valid_name(lhs[1]))
        throw ParseError(line, "expected '" + head + " NAME = ...'");
      std::string name = lhs[1];
      std::string rhs = trim(stmt.substr(eq + 1));
      if (head == "element") {
        try {
          Polynomial p = parse_polynomial(in.ring, rhs);
          if (!p.is_homogeneous())
            throw ParseError(line, "element '" + name + "' is not homogeneous");
          in.elements.emplace(name, std::move(p));
        } catch (const std::invalid_argument& e) {
          throw ParseError(line, e.what());
        }
        continue;
      }
      // ideal
      std::vector<Polynomial> gens;
      if (rhs.rfind("intersect", 0) == 0) {
        std::string args = trim(rhs.substr(9));
        if (args.size() < 2 || args.front() != '(' || args.back() != ')')
          throw ParseError(line, "expected intersect(LIST, LIST, ...)");
        std::vector<MonomialIdeal> parts;
        for (const auto& lst : split_top_level(args.substr(1, args.size() - 2), ",;")) {
          if (lst.empty()) continue;
          auto plist = parse_gen_list(in.ring, lst, line);
          auto mono = as_monomial_ideal(in.ring, plist);
          if (!mono) throw ParseError(line, "intersect expects monomial generator lists");
          parts.push_back(*mono);
        }
        if (parts.empty()) throw ParseError(line, "intersect of nothing");
        MonomialIdeal I = intersect_all(parts);
        gens = I.to_polynomials();
        in.monomial_ideals.emplace(name, std::move(I));
      } else {
        gens = parse_gen_list(in.ring, rhs, line);
        for (const auto& g : gens)
          if (!g.is_homogeneous())
            throw ParseError(line, "ideal '" + name + "' has an inhomogeneous generator");
        auto mono = as_monomial_ideal(in.ring, gens);
        if (mono) in.monomial_ideals.emplace(name, std::move(*mono));
      }
      in.ideals.emplace(name, std::move(gens));
      continue;
    }

    // command
    if (have_command) throw ParseError(line, "only one command per input");
    have_command = true;
    if (!in.ring) throw ParseError(line, "declare the ring first");
    Command& cmd = in.command;
    cmd.verb = head;

    auto need_ideal = [&](const std::string& tok) {
      if (in.ideals.find(tok) == in.ideals.end())
        throw ParseError(line, "undeclared ideal '" + tok + "'");
      return tok;
    };

    if (head == "profile" || head == "invariants" || head == "harness") {
      if (ws.size() != 2) throw ParseError(line, head + " takes one ideal name");
      cmd.ideal_name = need_ideal(ws[1]);
    } else if (head == "decide") {
      if (ws.size() != 3) throw ParseError(line, "expected 'decide cm|gcm|scm|sgcm IDEAL'");
      if (ws[1] != "cm" && ws[1] != "gcm" && ws[1] != "scm" && ws[1] != "sgcm")
        throw ParseError(line, "unknown property '" + ws[1] + "'");
      cmd.what = ws[1];
      cmd.ideal_name = need_ideal(ws[2]);
    } else if (head == "classify") {
      if (ws.size() != 3) throw ParseError(line, "expected 'classify IDEAL ELEMENT'");
      cmd.ideal_name = need_ideal(ws[1]);
      cmd.elements.push_back(element_arg(in, ws[2], line));
    } else if (head == "check-seq") {
      if (ws.size() < 4) throw ParseError(line, "expected 'check-seq KIND IDEAL (e1, ...)'");
      if (!kind_from_name(ws[1])) throw ParseError(line, "unknown sequence kind '" + ws[1] + "'");
      cmd.what = ws[1];
      cmd.ideal_name = need_ideal(ws[2]);
      size_t paren = stmt.find('(');
      if (paren == std::string::npos) throw ParseError(line, "expected an element list");
      std::string lst = trim(stmt.substr(paren));
      if (lst.back() != ')') throw ParseError(line, "expected ')'");
      for (const auto& part : split_top_level(lst.substr(1, lst.size() - 2), ",;"))
        if (!part.empty()) cmd.elements.push_back(element_arg(in, part, line));
    } else if (head == "find-seq") {
      if (ws.size() != 4) throw ParseError(line, "expected 'find-seq KIND IDEAL LENGTH'");
      if (!kind_from_name(ws[1])) throw ParseError(line, "unknown sequence kind '" + ws[1] + "'");
      cmd.what = ws[1];
      cmd.ideal_name = need_ideal(ws[2]);
      try {
        cmd.length = std::stoi(ws[3]);
      } catch (...) {
        throw ParseError(line, "bad length '" + ws[3] + "'");
      }
      if (cmd.length < 0) throw ParseError(line, "length must be nonnegative");
    } else {
      throw ParseError(line, "unknown statement '" + head + "'");
    }
  }
  if (!have_command) throw ParseError(1, "input contains no command");
  return in;
}

// ---------------------------------------------------------------------------

namespace {

Json prime_json(const Ring& ring, const MonomialPrime& p) {
  Json arr = Json::array();
  for (int i = 0; i < ring.nvars(); ++i)
    if (p.vars & (VarMask(1) << i)) arr.push_back(ring.vars[i]);
  return arr;
}

Json primes_json(const Ring& ring, const PrimeSet& ps) {
  Json arr = Json::array();
  for (const auto& p : ps) arr.push_back(prime_json(ring, p));
  return arr;
}

std::string primes_str(const Ring& ring, const PrimeSet& ps) {
  if (ps.empty()) return "{}";
  std::string s = "{";
  for (size_t i = 0; i < ps.size(); ++i) {
    if (i) s += ", ";
    s += ps[i].to_string(ring);
  }
  return s + "}";
}

Json polys_json(const std::vector<Polynomial>& ps) {
  Json arr = Json::array();
  for (const auto& p : ps) arr.push_back(p.to_string());
  return arr;
}

std::string polys_str(const std::vector<Polynomial>& ps) {
  std::string s = "(";
  for (size_t i = 0; i < ps.size(); ++i) {
    if (i) s += ", ";
    s += ps[i].to_string();
  }
  return s + ")";
}

const MonomialIdeal& require_monomial(const SessionInput& in) {
  auto it = in.monomial_ideals.find(in.command.ideal_name);
  if (it == in.monomial_ideals.end())
    throw EngineError("ideal '" + in.command.ideal_name +
                      "' is not monomial; this command needs a monomial ideal");
  if (it->second.is_unit()) throw EngineError("ideal '" + in.command.ideal_name + "' is the unit ideal");
  return it->second;
}

PresentedModule module_of(const SessionInput& in) {
  auto& gens = in.ideals.at(in.command.ideal_name);
  PresentedModule M = PresentedModule::quotient_ring(in.ring, gens);
  if (M.is_zero()) throw EngineError("the quotient by '" + in.command.ideal_name + "' is zero");
  return M;
}

}  // namespace

ReportDocument run_session(const SessionInput& in, const RunOptions& opts) {
  const Command& cmd = in.command;
  const Ring& ring = *in.ring;

  Json doc;
  doc["engine"] = {{"name", "seqcm"}, {"version", "1.0.0"}, {"seed", opts.seed},
                   {"samples", opts.samples}};
  Json ring_vars = Json::array();
  for (const auto& v : ring.vars) ring_vars.push_back(v);
  doc["ring"] = {{"vars", ring_vars}};
  doc["command"] = cmd.verb;
  doc["ideal"] = {{"name", cmd.ideal_name}, {"generators", polys_json(in.ideals.at(cmd.ideal_name))}};

  std::ostringstream hu;
  hu << "ring Q[";
  for (size_t i = 0; i < ring.vars.size(); ++i) hu << (i ? "," : "") << ring.vars[i];
  hu << "], ideal " << cmd.ideal_name << " = " << polys_str(in.ideals.at(cmd.ideal_name)) << "\n";

  if (cmd.verb == "profile") {
    const MonomialIdeal& I = require_monomial(in);
    Profile pr = profile(I, opts.seed);
    Json j;
    j["dim"] = pr.dim;
    j["depth"] = pr.depth;
    j["ass"] = primes_json(ring, pr.ass);
    Json att = Json::array();
    for (const auto& a : pr.att) att.push_back(primes_json(ring, a));
    j["att"] = att;
    Json filt;
    filt["dims"] = pr.filtration_dims;
    Json fideals = Json::array();
    for (const auto& gi : pr.filtration_ideals) fideals.push_back(polys_json(gi));
    filt["ideals"] = fideals;
    Json qcm = Json::array(), qgcm = Json::array();
    for (char b : pr.quotient_cm) qcm.push_back(static_cast<bool>(b));
    for (char b : pr.quotient_gcm) qgcm.push_back(static_cast<bool>(b));
    filt["quotient_cm"] = qcm;
    filt["quotient_gcm"] = qgcm;
    j["filtration"] = filt;
    j["cm"] = pr.is_cm;
    j["gcm"] = pr.is_gcm;
    j["scm"] = pr.is_scm;
    j["sgcm"] = pr.is_sgcm;
    j["p"] = pr.p;
    j["sp"] = pr.sp;
    j["sp_breakdown"] = {{"quotient_p", pr.breakdown.quotient_p},
                         {"ass_dims", pr.breakdown.ass_dims},
                         {"q1", pr.breakdown.q1},
                         {"q2", pr.breakdown.q2}};
    j["ncm_locus_dim"] = pr.ncm_dim;
    j["u0_dim"] = pr.u0;
    j["witness_sequential_sop"] =
        pr.witness_sequential_sop ? polys_json(*pr.witness_sequential_sop) : Json();
    j["falsifying_sop"] = pr.falsifying_sop ? polys_json(*pr.falsifying_sop) : Json();
    doc["profile"] = j;

    hu << "dim " << pr.dim << ", depth " << pr.depth << "\n";
    hu << "Ass = " << primes_str(ring, pr.ass) << "\n";
    for (size_t i = 0; i < pr.att.size(); ++i)
      hu << "Att H^" << i << " = " << primes_str(ring, pr.att[i]) << "\n";
    hu << "filtration dims:";
    for (int d : pr.filtration_dims) hu << " " << d;
    hu << "\n";
    hu << "CM " << (pr.is_cm ? "yes" : "no") << ", gCM " << (pr.is_gcm ? "yes" : "no")
       << ", sequentially CM " << (pr.is_scm ? "yes" : "no") << ", sequentially gCM "
       << (pr.is_sgcm ? "yes" : "no") << "\n";
    hu << "p = " << pr.p << ", sp = " << pr.sp << " (q1 = " << pr.breakdown.q1
       << ", q2 = " << pr.breakdown.q2 << ")\n";
    hu << "dim nCM = " << pr.ncm_dim << ", dim U_M(0) = " << pr.u0 << "\n";
    if (pr.witness_sequential_sop)
      hu << "sequential s.o.p. witness: " << polys_str(*pr.witness_sequential_sop) << "\n";
    if (pr.falsifying_sop)
      hu << "s.o.p. that is not a sequential sequence: " << polys_str(*pr.falsifying_sop)
         << "\n";
  } else if (cmd.verb == "classify") {
    PresentedModule M = module_of(in);
    ElementClassification c = classify_element(M, cmd.elements[0]);
    Json j;
    j["element"] = cmd.elements[0].to_string();
    j["regular"] = c.regular;
    j["f_element"] = c.f_element;
    j["generalized_regular"] = c.generalized_regular;
    j["sequential"] = c.sequential;
    j["sequential_f"] = c.sequential_f;
    j["kernel_dim"] = c.kernel_dim;
    j["battery_kernel_dims"] = c.battery_kernel_dims;
    j["note"] = c.failure_note;
    doc["classify"] = j;

    hu << "element " << cmd.elements[0].to_string() << ":\n";
    hu << "  regular             " << (c.regular ? "yes" : "no") << "\n";
    hu << "  f-element           " << (c.f_element ? "yes" : "no") << "\n";
    hu << "  generalized regular " << (c.generalized_regular ? "yes" : "no") << "\n";
    hu << "  sequential          " << (c.sequential ? "yes" : "no") << "\n";
    hu << "  sequential f        " << (c.sequential_f ? "yes" : "no") << "\n";
    if (!c.failure_note.empty()) hu << "  note: " << c.failure_note << "\n";
  } else if (cmd.verb == "check-seq") {
    PresentedModule M = module_of(in);
    SequenceKind kind = *kind_from_name(cmd.what);
    SequenceReport r = check_sequence(M, cmd.elements, kind);
    Json j;
    j["kind"] = kind_name(kind);
    j["elements"] = polys_json(cmd.elements);
    j["verdict"] = r.verdict;
    j["first_failure"] = r.first_failure;
    j["reason"] = r.reason;
    j["dims_trail"] = r.dims_trail;
    doc["check"] = j;
    hu << kind_name(kind) << " sequence check for " << polys_str(cmd.elements) << ": "
       << (r.verdict ? "yes" : "no") << "\n";
    if (!r.verdict) hu << "  " << r.reason << "\n";
  } else if (cmd.verb == "find-seq") {
    PresentedModule M = module_of(in);
    SequenceKind kind = *kind_from_name(cmd.what);
    auto fs = find_sequence(M, kind, cmd.length, opts.seed);
    Json j;
    j["kind"] = kind_name(kind);
    j["length"] = cmd.length;
    j["found"] = fs.has_value();
    j["sequence"] = fs ? polys_json(*fs) : Json();
    doc["find"] = j;
    if (fs)
      hu << "found " << kind_name(kind) << " sequence: " << polys_str(*fs) << "\n";
    else
      hu << "no " << kind_name(kind) << " sequence of length " << cmd.length
         << " found within the retry budget\n";
  } else if (cmd.verb == "decide") {
    Json j;
    bool value = false;
    if (cmd.what == "cm" || cmd.what == "gcm") {
      PresentedModule M = module_of(in);
      value = cmd.what == "cm" ? is_cohen_macaulay(M) : is_generalized_cm(M);
    } else {
      const MonomialIdeal& I = require_monomial(in);
      value = cmd.what == "scm" ? is_sequentially_cm(I) : is_sequentially_gcm(I);
    }
    j["what"] = cmd.what;
    j["value"] = value;
    doc["decide"] = j;
    hu << cmd.what << ": " << (value ? "yes" : "no") << "\n";
  } else if (cmd.verb == "invariants") {
    const MonomialIdeal& I = require_monomial(in);
    SpBreakdown b = sp_breakdown(I);
    int p = polynomial_type(I.quotient_module());
    Json j;
    j["p"] = p;
    j["sp"] = b.value();
    j["sp_breakdown"] = {{"quotient_p", b.quotient_p},
                         {"ass_dims", b.ass_dims},
                         {"q1", b.q1},
                         {"q2", b.q2}};
    j["ncm_locus_dim"] = non_cm_locus_dim(I);
    j["u0_dim"] = u0_dim(I);
    doc["invariants"] = j;
    hu << "p = " << p << ", sp = " << b.value() << " (q1 = " << b.q1 << ", q2 = " << b.q2
       << ")\n";
    hu << "dim nCM = " << j["ncm_locus_dim"] << ", dim U_M(0) = " << j["u0_dim"] << "\n";
  } else if (cmd.verb == "harness") {
    const MonomialIdeal& I = require_monomial(in);
    HarnessReport r = sampling_harness(I, opts.samples, opts.seed);
    Json j;
    j["samples"] = r.samples;
    j["seed"] = r.seed;
    Json clauses = Json::array();
    for (const auto& c : r.clauses) {
      Json cj;
      cj["clause"] = c.clause;
      cj["decider"] = c.decider;
      cj["conditions"] = c.conditions;
      cj["samples_pass"] = c.samples_pass;
      cj["samples_total"] = c.samples_total;
      cj["falsifier"] = c.falsifier ? polys_json(*c.falsifier) : Json();
      cj["agree"] = c.agree;
      clauses.push_back(cj);
    }
    j["clauses"] = clauses;
    j["all_agree"] = r.all_agree;
    doc["harness"] = j;
    hu << "sampled " << r.samples << " s.o.p.s per clause (seed " << r.seed << ")\n";
    for (const auto& c : r.clauses) {
      hu << "  [" << (c.agree ? "agree" : "DISAGREE") << "] " << c.clause << ": verdict "
         << (c.decider ? "yes" : "no") << ", " << c.samples_pass << "/" << c.samples_total
         << " samples pass";
      if (c.falsifier) hu << ", falsifier " << polys_str(*c.falsifier);
      hu << "\n";
    }
  } else {
    throw EngineError("unknown command '" + cmd.verb + "'");
  }

  ReportDocument out;
  out.human = hu.str();
  out.json = doc.dump(2) + "\n";
  return out;
}

const std::map<std::string, std::string>& fixtures() {
  static const std::map<std::string, std::string> fx = {
      {"two-planes-line",
       "# two 3-planes glued along a line: not sequentially CM, p = sp = 1\n"
       "ring Q[x,y,z,t,w]\n"
       "ideal I = intersect((x,y), (z,t))\n"
       "profile I\n"},
      {"mixed-chain",
       "# components of dimensions 2, 1, 0: sequentially CM, p = 1\n"
       "ring Q[x,y,z]\n"
       "ideal I = intersect((x), (y,z), (x^2,y^2,z))\n"
       "profile I\n"},
      {"embedded-plane",
       "# two hyperplanes with an embedded plane: sequentially CM, p = 2\n"
       "ring Q[x,y,z,t]\n"
       "ideal I = intersect((x), (y), (x^2,y^2))\n"
       "profile I\n"},
      {"two-planes-point",
       "# two planes meeting at the origin: generalized CM, p = sp = 0\n"
       "ring Q[x,y,z,t]\n"
       "ideal I = intersect((x,y), (z,t))\n"
       "profile I\n"},
  };
  return fx;
}

}  // namespace seqcm
