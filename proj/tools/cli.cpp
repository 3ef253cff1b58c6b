#include "cli.hpp"

#include <CLI11.hpp>

#include <charconv>
#include <fstream>
#include <functional>
#include <map>
#include <ostream>
#include <sstream>

#include "monocodes/codes.hpp"
#include "monocodes/error.hpp"
#include "monocodes/json_io.hpp"
#include "monocodes/structure.hpp"

namespace monocodes::cli {

namespace {

// ------------------------------------------------------------ flag parsing

struct RawFlags {
  std::optional<long long> p;
  long long m = 1;
  std::optional<long long> n;
  std::string a;
  std::string sigma;
  std::optional<std::string> select;
  std::string vectors;
  std::uint64_t seed = kDefaultSeed;
  std::size_t budget = 4096;
  std::string input;
  bool one_based = false;
  bool nontrivial = false;
  bool pretty = false;
  bool json = false;
};

struct Token {
  std::string text;
  std::size_t position;  // 1-based position within the flag value
};

std::vector<Token> split(const std::string& text, char sep) {
  std::vector<Token> out;
  std::size_t start = 0;
  while (true) {
    const std::size_t end = text.find(sep, start);
    std::string piece = text.substr(start, end == std::string::npos ? std::string::npos : end - start);
    const auto first = piece.find_first_not_of(" \t");
    const auto last = piece.find_last_not_of(" \t");
    out.push_back({first == std::string::npos ? "" : piece.substr(first, last - first + 1), out.size() + 1});
    if (end == std::string::npos) break;
    start = end + 1;
  }
  return out;
}

std::vector<Code> parse_elements(const FieldSpec& field, const std::string& text, const std::string& flag) {
  std::vector<Code> out;
  for (const auto& token : split(text, ',')) {
    try {
      out.push_back(field.parse(token.text));
    } catch (const Error& e) {
      throw PreconditionError(flag + " token " + std::to_string(token.position) + " ('" + token.text + "'): " + e.what());
    }
  }
  return out;
}

std::vector<std::size_t> parse_indices(const std::string& text, const std::string& flag) {
  std::vector<std::size_t> out;
  if (text.find_first_not_of(" \t") == std::string::npos) return out;
  for (const auto& token : split(text, ',')) {
    std::size_t value = 0;
    const char* end = token.text.data() + token.text.size();
    const auto [ptr, ec] = std::from_chars(token.text.data(), end, value);
    if (token.text.empty() || ec != std::errc{} || ptr != end) {
      throw PreconditionError(flag + " token " + std::to_string(token.position) + " ('" + token.text +
                              "') is not a non-negative integer");
    }
    out.push_back(value);
  }
  return out;
}

std::uint32_t positive(const std::optional<long long>& value, const std::string& flag) {
  if (!value) throw PreconditionError("missing required flag " + flag);
  if (*value < 1 || *value > (1LL << 20)) throw PreconditionError(flag + " = " + std::to_string(*value) + " is out of range");
  return static_cast<std::uint32_t>(*value);
}

JobSpec build_job(const std::string& command, const RawFlags& raw) {
  JobSpec job;
  job.command = command;
  job.seed = raw.seed;
  job.budget = raw.budget;
  job.nontrivial = raw.nontrivial;
  job.input = raw.input;
  if (command == "paper-examples") return job;
  if (command == "distance" && !raw.input.empty()) return job;

  job.p = positive(raw.p, "--p");
  if (raw.m < 1) throw PreconditionError("--m = " + std::to_string(raw.m) + " must be at least 1");
  job.m = static_cast<std::uint32_t>(raw.m);
  const FieldSpec field(job.p, job.m);
  job.n = positive(raw.n, "--n");

  if (raw.a.empty()) {
    job.a.assign(job.n, 1);
  } else {
    job.a = parse_elements(field, raw.a, "--a");
    if (job.a.size() != job.n) {
      throw PreconditionError("--a has " + std::to_string(job.a.size()) + " entries but --n is " + std::to_string(job.n));
    }
  }
  for (std::size_t i = 0; i < job.a.size(); ++i) {
    if (job.a[i] == 0) throw PreconditionError("--a token " + std::to_string(i + 1) + " is zero; monomial coefficients must be nonzero");
  }

  job.sigma = raw.sigma.empty() ? Permutation::standard_cycle(job.n).map()
                                : Permutation::parse(raw.sigma, job.n, raw.one_based).map();
  if (raw.select) job.select = parse_indices(*raw.select, "--select");
  if (!raw.vectors.empty()) {
    for (const auto& row : split(raw.vectors, ';')) {
      auto v = parse_elements(field, row.text, "--vectors row " + std::to_string(row.position));
      if (v.size() != job.n) {
        throw PreconditionError("--vectors row " + std::to_string(row.position) + " has " + std::to_string(v.size()) +
                                " entries but --n is " + std::to_string(job.n));
      }
      job.vectors.push_back(std::move(v));
    }
  }
  return job;
}

// ------------------------------------------------------------- job helpers

FieldSpec job_field(const JobSpec& job) { return FieldSpec(job.p, job.m); }

MonomialMatrix job_matrix(const JobSpec& job) {
  const FieldSpec f = job_field(job);
  return MonomialMatrix::general(VectorFq(f, job.a), Permutation(job.sigma));
}

Subspace job_subspace(const JobSpec& job) {
  const FieldSpec f = job_field(job);
  std::vector<VectorFq> rows;
  for (const auto& v : job.vectors) rows.emplace_back(f, v);
  return Subspace::span(f, job.n, rows);
}

const std::vector<std::size_t>& require_select(const JobSpec& job) {
  if (!job.select) throw PreconditionError(job.command + " needs --select (comma-separated component indices)");
  return *job.select;
}

void guard_centralizer(std::size_t n) {
  if (n > kMaxCentralizerN) {
    throw ResourceGuardError("centralizer refused: n = " + std::to_string(n) + " exceeds " + std::to_string(kMaxCentralizerN));
  }
}

std::string vector_text(const VectorFq& v) { return v.to_string(); }

std::string basis_text(const Subspace& s) {
  if (s.is_zero()) return "{0}";
  std::string out;
  for (const auto& v : s.vectors()) out += (out.empty() ? "" : " ") + vector_text(v);
  return out;
}

// ----------------------------------------------------------------- reports

struct Report {
  Json json;
  std::string text;
  int exit = kOk;
};

Json component_json(const MinimalComponent& c) {
  return {{"index", c.index}, {"factor", to_json(c.factor)}, {"factor_text", c.factor.to_string()},
          {"dim", c.space.dim()}, {"basis", to_json(c.space)}};
}

std::string code_text(const LinearCode& code) {
  std::ostringstream os;
  os << "selection [";
  for (std::size_t i = 0; i < code.selection().size(); ++i) os << (i ? "," : "") << code.selection()[i];
  os << "]  k = " << code.k() << "  g = " << code.g().to_string();
  if (code.cached_distance()) os << "  d = " << *code.cached_distance();
  os << "\n  basis " << basis_text(code.space()) << "\n";
  return os.str();
}

Report cmd_factor(const JobSpec& job) {
  const Decomposition d = decompose(job_matrix(job));
  Report r;
  r.json = {{"char_poly", to_json(d.char_poly)}, {"factorization", to_json(d.factorization)}};
  r.text = "char poly  " + d.char_poly.expanded().to_string() + "\nfactors    " + d.factorization.to_string() + "\n";
  return r;
}

Report cmd_decompose(const JobSpec& job) {
  const Decomposition d = decompose(job_matrix(job));
  Report r;
  r.json = {{"char_poly", to_json(d.char_poly)}, {"components", Json::array()}};
  r.text = "char poly  " + d.char_poly.expanded().to_string() + "\n";
  for (const auto& c : d.components) {
    r.json["components"].push_back(component_json(c));
    r.text += "W" + std::to_string(c.index) + "  " + c.factor.to_string() + "  dim " + std::to_string(c.space.dim()) +
              "  " + basis_text(c.space) + "\n";
  }
  return r;
}

Report cmd_enumerate(const JobSpec& job) {
  const auto codes = enumerate_codes(decompose(job_matrix(job)), !job.nontrivial);
  Report r;
  r.json = {{"count", codes.size()}, {"codes", Json::array()}};
  for (const auto& c : codes) {
    r.json["codes"].push_back(to_json(c));
    r.text += code_text(c);
  }
  r.text += std::to_string(codes.size()) + " codes\n";
  return r;
}

Report cmd_code(const JobSpec& job) {
  const LinearCode code = make_code(decompose(job_matrix(job)), require_select(job));
  return {{{"code", to_json(code)}}, code_text(code)};
}

Report cmd_distance(const JobSpec& job) {
  std::optional<LinearCode> code;
  if (!job.input.empty()) {
    std::ifstream in(job.input);
    if (!in) throw PreconditionError("cannot read --input file '" + job.input + "'");
    code.emplace(code_from_json(Json::parse(in)));
  } else {
    code.emplace(make_code(decompose(job_matrix(job)), require_select(job)));
  }
  code->distance();
  return {{{"code", to_json(*code)}}, code_text(*code)};
}

Report cmd_centralizer(const JobSpec& job) {
  guard_centralizer(job.n);
  const CentralizerBasis c = centralizer(job_matrix(job).matrix());
  Report r;
  r.json = {{"dim", c.dim()}, {"basis", Json::array()}};
  r.text = "dim C(A) = " + std::to_string(c.dim()) + "\n";
  for (std::size_t i = 0; i < c.basis.size(); ++i) {
    r.json["basis"].push_back(to_json(c.basis[i]));
    r.text += "X" + std::to_string(i) + "\n" + c.basis[i].to_string() + "\n";
  }
  return r;
}

Report cmd_check_characteristic(const JobSpec& job) {
  guard_centralizer(job.n);
  WitnessSearchOptions options;
  options.seed = job.seed;
  options.budget = job.budget;
  const CharacteristicReport report = check_characteristic(job_subspace(job), job_matrix(job).matrix(), options);
  Report r;
  r.json = {{"report", to_json(report)}};
  r.text = "subspace        " + basis_text(report.subspace) + "\ninvariant       " + (report.invariant ? "yes" : "no") +
           "\nhyperinvariant  " + (report.hyperinvariant ? "yes" : "no") + "\ncharacteristic  " + to_string(report.status) +
           "  (search " + report.search + ", " + std::to_string(report.candidates_examined) + " candidates)\n";
  if (report.witness) r.text += "witness\n" + report.witness->to_string() + "\n";
  return r;
}

Report cmd_generalized(const JobSpec& job) {
  const auto parts = decompose_generalized(job_subspace(job), job_matrix(job));
  Report r;
  r.json = {{"components", Json::array()}};
  for (const auto& part : parts) {
    r.json["components"].push_back({{"cycle_index", part.cycle_index},
                                    {"coords", part.coords},
                                    {"annihilator", to_json(part.annihilator)},
                                    {"dim", part.space.dim()},
                                    {"basis", to_json(part.space)}});
    r.text += "C" + std::to_string(part.cycle_index) + "  " + part.annihilator.to_string() + "  " +
              basis_text(part.space) + "\n";
  }
  if (parts.empty()) r.text = "no nonzero components\n";
  return r;
}

// --------------------------------------------------------- worked examples

struct Check {
  std::string name;
  Json expected;
  Json actual;
};

Json rows_json(const FieldSpec& f, const std::vector<std::vector<long long>>& rows) {
  Json out = Json::array();
  for (const auto& r : rows) out.push_back(to_json(VectorFq::from_ints(f, r)));
  return out;
}

Subspace span_of(const FieldSpec& f, const std::vector<std::vector<long long>>& rows) {
  std::vector<VectorFq> vs;
  for (const auto& r : rows) vs.push_back(VectorFq::from_ints(f, r));
  return Subspace::span(f, vs.front().size(), vs);
}

std::vector<Check> shift_checks(std::vector<std::string>& notes) {
  const FieldSpec f(5);
  const MatrixFq a = MatrixFq::from_ints(f, {{0, 0, 0, 1}, {3, 0, 0, 0}, {0, 4, 0, 0}, {0, 0, 3, 0}});
  const MonomialMatrix m = MonomialMatrix::simple(VectorFq::from_ints(f, {3, 4, 3, 1}));
  const MonomialMatrix stated = MonomialMatrix::simple(VectorFq::from_ints(f, {1, 1, 1, 3}));
  notes.push_back("shift: the stated coefficient vector (1,1,1,3) has product " + stated.product().to_string() +
                  " and builds a different matrix; the displayed entries (3,4,3,1) with product " +
                  m.product().to_string() + " are used");

  std::vector<Check> out;
  out.push_back({"shift.matrix", to_json(a), to_json(m.matrix())});
  const CharPoly cp = char_poly(m);
  out.push_back({"shift.char_poly", to_json(Polynomial::from_ints(f, {4, 0, 0, 0, 1})), to_json(cp.expanded())});
  out.push_back({"shift.char_poly_cross_check", to_json(cp.monic), to_json(characteristic_polynomial(a))});
  Json expected_factors = Json::array();
  for (long long c = 1; c <= 4; ++c) expected_factors.push_back({to_json(Polynomial::from_ints(f, {c, 1})), 1});
  Json actual_factors = Json::array();
  for (const auto& fp : factorize(cp.monic).factors) actual_factors.push_back({to_json(fp.factor), fp.multiplicity});
  out.push_back({"shift.factorization", expected_factors, actual_factors});

  const MatrixFq id = MatrixFq::identity(f, 4);
  out.push_back({"shift.ker_a_plus_1", rows_json(f, {{1, 2, 2, 4}}), to_json(kernel(a + id))});
  out.push_back({"shift.ker_a_plus_2", rows_json(f, {{1, 1, 3, 3}}), to_json(kernel(a + f.from_int(2) * id))});
  const MatrixFq quad = evaluate(Polynomial::from_ints(f, {2, 3, 1}), a);
  out.push_back({"shift.quadratic_at_a",
                 to_json(MatrixFq::from_ints(f, {{2, 0, 3, 3}, {4, 2, 0, 3}, {2, 2, 2, 0}, {0, 2, 4, 2}})), to_json(quad)});
  // Compared as subspaces: both sides in canonical RREF.
  out.push_back({"shift.code_basis", to_json(span_of(f, {{1, 3, 2, 1}, {0, 4, 1, 1}})), to_json(kernel(quad))});
  out.push_back({"shift.code_dim", 2, kernel(quad).dim()});
  return out;
}

std::vector<Check> two_cycle_checks(std::uint64_t seed) {
  const FieldSpec f(5);
  const MatrixFq a = MatrixFq::from_ints(f, {{0, 0, 1, 0, 0, 0},
                                             {2, 0, 0, 0, 0, 0},
                                             {0, 3, 0, 0, 0, 0},
                                             {0, 0, 0, 0, 0, 1},
                                             {0, 0, 0, 2, 0, 0},
                                             {0, 0, 0, 0, 3, 0}});
  const MatrixFq c = MatrixFq::from_ints(f, {{0, 0, 0, 1, 3, 1},
                                             {0, 0, 0, 2, 1, 2},
                                             {0, 0, 0, 1, 3, 1},
                                             {1, 3, 1, 0, 0, 0},
                                             {2, 1, 2, 0, 0, 0},
                                             {1, 3, 1, 0, 0, 0}});
  const MatrixFq swap = Permutation::parse("(0 3)(1 4)(2 5)", 6).matrix(f);
  const MonomialMatrix m =
      MonomialMatrix::general(VectorFq::from_ints(f, {2, 3, 1, 2, 3, 1}), Permutation::parse("(0 1 2)(3 4 5)", 6));
  const VectorFq gen = VectorFq::from_ints(f, {1, 2, 1, 0, 0, 0});
  const Subspace v = Subspace::span(f, 6, {gen});
  WitnessSearchOptions options;
  options.seed = seed;

  std::vector<Check> out;
  out.push_back({"two_cycle.matrix", to_json(a), to_json(m.matrix())});
  out.push_back({"two_cycle.v_invariant", true, is_invariant(v, a)});
  out.push_back({"two_cycle.commutant_commutes", true, a * c == c * a});
  out.push_back({"two_cycle.swap_commutes", true, a * swap == swap * a});
  out.push_back({"two_cycle.swap_invertible", true, is_invertible(swap)});
  out.push_back({"two_cycle.swap_image", to_json(VectorFq::from_ints(f, {0, 0, 0, 1, 2, 1})), to_json(swap * gen)});
  out.push_back({"two_cycle.swap_image_outside_v", true, !v.contains(swap * gen)});
  out.push_back({"two_cycle.characteristic", "refuted", to_string(check_characteristic(v, a, options).status)});
  return out;
}

Report cmd_paper_examples(const JobSpec& job) {
  std::vector<std::string> notes;
  std::vector<Check> checks = shift_checks(notes);
  for (auto& c : two_cycle_checks(job.seed)) checks.push_back(std::move(c));

  Report r;
  r.json = {{"checks", Json::array()}, {"notes", notes}};
  std::size_t failed = 0;
  for (const auto& c : checks) {
    const bool pass = c.expected == c.actual;
    failed += pass ? 0 : 1;
    Json entry{{"name", c.name}, {"pass", pass}};
    if (!pass) entry["diff"] = {{"expected", c.expected}, {"actual", c.actual}};
    r.json["checks"].push_back(std::move(entry));
    r.text += std::string(pass ? "PASS " : "FAIL ") + c.name + "\n";
    if (!pass) r.text += "     expected " + c.expected.dump() + "\n     actual   " + c.actual.dump() + "\n";
  }
  for (const auto& note : notes) r.text += "note: " + note + "\n";
  r.text += std::to_string(checks.size() - failed) + "/" + std::to_string(checks.size()) + " checks passed\n";
  r.json["passed"] = checks.size() - failed;
  r.json["total"] = checks.size();
  r.exit = failed == 0 ? kOk : kMismatch;
  return r;
}

Report dispatch(const JobSpec& job) {
  static const std::map<std::string, std::function<Report(const JobSpec&)>> table{
      {"factor", cmd_factor},
      {"decompose", cmd_decompose},
      {"enumerate", cmd_enumerate},
      {"code", cmd_code},
      {"distance", cmd_distance},
      {"centralizer", cmd_centralizer},
      {"check-characteristic", cmd_check_characteristic},
      {"generalized", cmd_generalized},
  };
  if (job.command == "paper-examples") return cmd_paper_examples(job);
  return table.at(job.command)(job);
}

void add_common_flags(CLI::App* sub, RawFlags& raw) {
  sub->add_option("--p", raw.p, "field characteristic (prime)");
  sub->add_option("--m", raw.m, "extension degree, q = p^m");
  sub->add_option("--n", raw.n, "code length");
  sub->add_option("--a", raw.a, "comma-separated nonzero coefficients (default all ones)");
  sub->add_option("--sigma", raw.sigma, "permutation, cycles \"(0 1 2)(3 4)\" or one-line \"[1,2,0,4,3]\"");
  sub->add_flag("--one-based", raw.one_based, "read --sigma indices as 1-based");
  sub->add_flag("--pretty", raw.pretty, "human-readable output instead of JSON");
  sub->add_flag("--json", raw.json, "JSON output (the default except for paper-examples)");
  sub->add_option("--seed", raw.seed, "seed for sampled witness searches");
}

}  // namespace

// ------------------------------------------------------------ JobSpec JSON

Json to_json(const JobSpec& job) {
  Json j{{"command", job.command}, {"seed", job.seed}, {"budget", job.budget}, {"nontrivial", job.nontrivial},
         {"input", job.input}};
  if (job.p == 0) return j;
  const FieldSpec f = job_field(job);
  j["field"] = to_json(f);
  j["n"] = job.n;
  j["a"] = to_json(VectorFq(f, job.a));
  j["sigma"] = Permutation(job.sigma).to_string();
  if (job.select) j["select"] = *job.select;
  Json vectors = Json::array();
  for (const auto& v : job.vectors) vectors.push_back(to_json(VectorFq(f, v)));
  j["vectors"] = vectors;
  return j;
}

JobSpec job_from_json(const Json& j) {
  JobSpec job;
  job.command = j.at("command").get<std::string>();
  job.seed = j.at("seed").get<std::uint64_t>();
  job.budget = j.at("budget").get<std::size_t>();
  job.nontrivial = j.at("nontrivial").get<bool>();
  job.input = j.at("input").get<std::string>();
  if (!j.contains("field")) return job;
  const FieldSpec f = field_from_json(j.at("field"));
  job.p = f.p();
  job.m = f.m();
  job.n = j.at("n").get<std::size_t>();
  job.a = vector_from_json(f, j.at("a")).codes();
  job.sigma = Permutation::parse(j.at("sigma").get<std::string>(), job.n).map();
  if (j.contains("select")) job.select = j.at("select").get<std::vector<std::size_t>>();
  for (const auto& v : j.at("vectors")) job.vectors.push_back(vector_from_json(f, v).codes());
  return job;
}

// ---------------------------------------------------------------- run

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Monomial codes over finite fields"};
  app.require_subcommand(1, 1);
  RawFlags raw;

  const std::vector<std::pair<std::string, std::string>> commands{
      {"factor", "characteristic polynomial of the monomial matrix and its factorization"},
      {"decompose", "minimal invariant subspaces W_i = ker f_i(A)"},
      {"enumerate", "every monomial code, one per subset of components"},
      {"code", "the code selected by --select"},
      {"distance", "minimum distance of the --select code or an --input code record"},
      {"centralizer", "basis of the matrices commuting with A"},
      {"check-characteristic", "characteristic-subspace status of span(--vectors)"},
      {"generalized", "split span(--vectors) along the cycles of sigma"},
      {"paper-examples", "reproduce the two worked examples as pass/fail checks"},
  };
  for (const auto& [name, help] : commands) {
    CLI::App* sub = app.add_subcommand(name, help);
    add_common_flags(sub, raw);
    if (name == "code" || name == "distance") sub->add_option("--select", raw.select, "comma-separated component indices");
    if (name == "enumerate") sub->add_flag("--nontrivial", raw.nontrivial, "drop the zero code and the full space");
    if (name == "distance") sub->add_option("--input", raw.input, "code record JSON file");
    if (name == "check-characteristic" || name == "generalized") {
      sub->add_option("--vectors", raw.vectors, "';'-separated generators, each comma-separated");
    }
    if (name == "check-characteristic") sub->add_option("--budget", raw.budget, "random witness samples");
  }

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kPrecondition;
  }
  std::string command;
  for (const auto* sub : app.get_subcommands()) command = sub->get_name();

  try {
    const JobSpec job = build_job(command, raw);
    Report report = dispatch(job);
    report.json["job"] = to_json(job);
    const bool text = raw.pretty || (command == "paper-examples" && !raw.json);
    if (text) {
      out << report.text;
    } else {
      out << report.json.dump() << "\n";
    }
    return report.exit;
  } catch (const PreconditionError& e) {
    err << "precondition: " << e.what() << "\n";
    return kPrecondition;
  } catch (const ResourceGuardError& e) {
    err << "resource guard: " << e.what() << "\n";
    return kResourceGuard;
  } catch (const InvariantViolation& e) {
    err << "assertion: " << e.what() << "\n";
    return kMismatch;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kPrecondition;
  } catch (const nlohmann::json::exception& e) {
    err << "precondition: malformed JSON: " << e.what() << "\n";
    return kPrecondition;
  } catch (const std::bad_alloc&) {
    err << "resource guard: out of memory\n";
    return kResourceGuard;
  }
}

}  // namespace monocodes::cli
