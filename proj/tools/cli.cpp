#include "cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>

#include "tabalg/chartab.hpp"
#include "tabalg/closed.hpp"
#include "tabalg/duality.hpp"
#include "tabalg/errors.hpp"
#include "tabalg/scheme.hpp"
#include "tabalg/table.hpp"
#include "tabalg/tba_io.hpp"

namespace tabalg::cli {

namespace {

using Json = nlohmann::ordered_json;

struct Options {
  std::uint64_t seed = CharacterOptions{}.seed;
  double tol = kDefaultTolerance;
  bool exact = false;
  bool json = false;

  CharacterOptions characters() const { return {tol, seed, exact}; }
};

struct Input {
  std::string path;
  std::string bytes;
};

class InputError : public Error {
 public:
  using Error::Error;
};

Input load(const std::string& path, std::istream& in) {
  std::ostringstream buf;
  if (path == "-") {
    buf << in.rdbuf();
  } else {
    std::ifstream file(path, std::ios::binary);
    if (!file) throw InputError("cannot read '" + path + "'");
    buf << file.rdbuf();
  }
  return {path, buf.str()};
}

Json scalar_json(const Scalar& v) {
  if (v.is_exact()) return v.str();
  if (v.is_real()) return v.real();
  return Json{{"re", v.real()}, {"im", v.imag()}};
}

Json scalars_json(const std::vector<Scalar>& v) {
  Json a = Json::array();
  for (const auto& x : v) a.push_back(scalar_json(x));
  return a;
}

std::string yes_no(bool b) { return b ? "yes" : "no"; }

std::string format_double(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3g", x == 0.0 ? 0.0 : x);
  return buf;
}

std::string join(const std::vector<std::string>& parts, const std::string& sep) {
  std::string s;
  for (std::size_t i = 0; i < parts.size(); ++i) s += (i ? sep : "") + parts[i];
  return s;
}

std::string subset_text(const StructureConstantTable& t, const std::vector<BasisIndex>& members) {
  std::vector<std::string> names;
  for (auto m : members) names.push_back(t.label(m));
  return "{" + join(names, ", ") + "}";
}

/// Collects report lines and a mirrored JSON document.
class Report {
 public:
  Report(const Options& opts, std::string echo) : opts_(opts) {
    doc_["command"] = echo;
    lines_.push_back("command: " + echo);
  }

  void input(const Input& in) {
    std::string digest = fnv1a64(in.bytes);
    doc_["input"] = {{"path", in.path}, {"fnv1a64", digest}};
    lines_.push_back("input: " + in.path + " fnv1a64=" + digest);
  }

  void line(std::string text) { lines_.push_back(std::move(text)); }
  Json& operator[](const char* key) { return doc_[key]; }

  int emit(std::ostream& out, int status, const std::string& tba = {}) {
    doc_["exit"] = status;
    if (opts_.json) {
      if (!tba.empty()) doc_["tba"] = tba;
      out << doc_.dump(2) << '\n';
      return status;
    }
    const bool comment = !tba.empty();
    for (const auto& l : lines_) out << (comment ? "# " : "") << l << '\n';
    out << (comment ? "# " : "") << "exit: " << status << '\n';
    out << tba;
    return status;
  }

 private:
  const Options& opts_;
  Json doc_;
  std::vector<std::string> lines_;
};

StructureConstantTable read_table(const Input& in, const Options& opts) {
  auto t = parse_tba(in.bytes);
  if (opts.exact && !t.is_exact()) {
    throw ExactnessError("--exact given but the table has approximate constants");
  }
  return t;
}

void require_valid(const StructureConstantTable& t, const Options& opts) {
  auto report = validate(t, opts.tol);
  if (!report.ok()) {
    const auto& v = report.violations.front();
    throw StructuralError("not a C-algebra: " + to_string(v.axiom) + ": " + v.detail);
  }
}

std::vector<std::string> table_lines(const StructureConstantTable& t, const CharacterTable& ct) {
  std::vector<std::vector<std::string>> cells;
  std::vector<std::string> header{""};
  for (BasisIndex b = 0; b < t.rank(); ++b) header.push_back(t.label(b));
  header.push_back("|");
  if (!ct.commutative) header.push_back("chi(1)");
  header.push_back("zeta");
  cells.push_back(header);
  for (std::size_t chi = 0; chi < ct.size(); ++chi) {
    std::vector<std::string> row{"chi" + std::to_string(chi + 1)};
    for (const auto& v : ct.values[chi]) row.push_back(v.str());
    row.push_back("|");
    if (!ct.commutative) row.push_back(ct.degrees[chi].str());
    row.push_back(ct.zeta[chi].str());
    cells.push_back(row);
  }
  std::vector<std::size_t> width(header.size(), 0);
  for (const auto& row : cells)
    for (std::size_t i = 0; i < row.size(); ++i) width[i] = std::max(width[i], row[i].size());
  std::vector<std::string> out;
  for (const auto& row : cells) {
    std::string s;
    for (std::size_t i = 0; i < row.size(); ++i) {
      if (i) s += "  ";
      std::string pad(width[i] - row[i].size(), ' ');
      s += i == 0 ? row[i] + pad : pad + row[i];
    }
    while (!s.empty() && s.back() == ' ') s.pop_back();
    out.push_back(s);
  }
  return out;
}

Json table_json(const StructureConstantTable& t, const CharacterTable& ct) {
  Json chars = Json::array();
  for (std::size_t chi = 0; chi < ct.size(); ++chi) {
    chars.push_back({{"values", scalars_json(ct.values[chi])},
                     {"degree", scalar_json(ct.degrees[chi])},
                     {"zeta", scalar_json(ct.zeta[chi])}});
  }
  return {{"labels", t.labels()},
          {"commutative", ct.commutative},
          {"exact", ct.exact},
          {"characters", chars},
          {"warnings", ct.warnings}};
}

void standard_lines(Report& r, const chartab::StandardVerdict& v) {
  std::vector<std::string> bad;
  Json offending = Json::array();
  for (const auto& [row, z] : v.offending) {
    bad.push_back("zeta(chi" + std::to_string(row + 1) + ") = " + z.str());
    offending.push_back({{"character", row + 1}, {"zeta", scalar_json(z)}});
  }
  r["standard_class"] = {{"member", v.in_standard_class}, {"offending", offending}};
  r.line("standard class: " + std::string(v.in_standard_class ? "yes" : "no") +
         (bad.empty() ? "" : " (" + join(bad, ", ") + ")"));
}

// verify ------------------------------------------------------------------

int cmd_verify(const Options& opts, const Input& input, Report& r, std::ostream& out) {
  auto t = read_table(input, opts);
  auto report = validate(t, opts.tol);
  r["rank"] = t.rank();
  r["exact"] = t.is_exact();
  r.line("rank: " + std::to_string(t.rank()));
  r.line("exact: " + yes_no(t.is_exact()));
  Json violations = Json::array();
  for (const auto& v : report.violations) {
    std::vector<std::string> w;
    for (auto i : v.witness) w.push_back(std::to_string(i));
    violations.push_back({{"axiom", to_string(v.axiom)}, {"witness", v.witness}, {"detail", v.detail}});
    r.line("violation: " + to_string(v.axiom) + " at (" + join(w, ",") + "): " + v.detail);
  }
  r["violations"] = violations;
  r.line("c-algebra: " + yes_no(report.ok()));
  r["c_algebra"] = report.ok();
  if (report.ok()) {
    Json cls = {{"table_algebra", is_table_algebra(t, opts.tol)},
                {"integral", is_integral(t, opts.tol)},
                {"commutative", is_commutative(t, opts.tol)},
                {"integral_degree", is_integral_degree(t, opts.tol)}};
    for (const auto& [k, v] : cls.items()) r.line(k + ": " + yes_no(v.get<bool>()));
    r["classification"] = cls;
  }
  return r.emit(out, report.ok() ? kOk : kNegative);
}

// chartab / standard -------------------------------------------------------

struct Computed {
  StructureConstantTable table;
  CharacterData data;
};

Computed compute(const Options& opts, const Input& input) {
  auto t = read_table(input, opts);
  require_valid(t, opts);
  auto data = chartab::character_table(t, opts.characters());
  return {std::move(t), std::move(data)};
}

int cmd_chartab(const Options& opts, const Input& input, Report& r, std::ostream& out) {
  auto [t, data] = compute(opts, input);
  const auto& ct = data.table;
  r["table"] = table_json(t, ct);
  r.line("characters: " + std::to_string(ct.size()) + " (" +
         (ct.commutative ? "commutative" : "noncommutative") + ", " +
         (ct.exact ? "exact" : "floating") + ")");
  for (const auto& l : table_lines(t, ct)) r.line(l);
  for (const auto& w : ct.warnings) r.line("warning: " + w);

  auto residual = chartab::orthogonality_residual(ct, t);
  const double check_tol = ct.exact ? 0.0 : std::max(opts.tol, 1e-9) * 10;
  bool orthogonal = residual.vanishes(check_tol);
  bool reconstructs = chartab::reconstructs_standard_trace(ct, t, check_tol);
  bool idempotents = chartab::idempotent_axioms_hold(t, data.idempotents, 1e-7);
  r["orthogonality"] = {{"max_residual", residual.max_abs()}, {"vanishes", orthogonal}};
  r["reconstructs_standard_trace"] = reconstructs;
  r["idempotent_axioms"] = idempotents;
  r.line("orthogonality residual: " + format_double(residual.max_abs()) +
         (ct.exact ? " (exact)" : ""));
  r.line("standard trace reconstructed: " + yes_no(reconstructs));
  r.line("idempotent axioms: " + yes_no(idempotents));
  standard_lines(r, chartab::check_standard_condition(ct));
  return r.emit(out, orthogonal && reconstructs && idempotents ? kOk : kNegative);
}

int cmd_standard(const Options& opts, const Input& input, Report& r, std::ostream& out) {
  auto [t, data] = compute(opts, input);
  const auto& ct = data.table;
  r["zeta"] = scalars_json(ct.zeta);
  std::vector<std::string> z;
  for (const auto& v : ct.zeta) z.push_back(v.str());
  r.line("zeta: (" + join(z, ", ") + ")");
  auto verdict = chartab::check_standard_condition(ct);
  standard_lines(r, verdict);
  return r.emit(out, verdict.in_standard_class ? kOk : kNegative);
}

// closed / quotient ------------------------------------------------------

int cmd_closed(const Options& opts, const Input& input, Report& r, std::ostream& out) {
  auto t = read_table(input, opts);
  require_valid(t, opts);
  auto subsets = closed::enumerate_closed_subsets(t);
  Json list = Json::array();
  r.line("closed subsets: " + std::to_string(subsets.size()));
  for (const auto& c : subsets) {
    list.push_back({{"members", c.members}, {"c_plus", scalar_json(c.c_plus_degree)}});
    r.line(subset_text(t, c.members) + "  |C+| = " + c.c_plus_degree.str());
  }
  r["closed_subsets"] = list;
  return r.emit(out, kOk);
}

std::vector<BasisIndex> parse_subset(const StructureConstantTable& t, const std::string& spec) {
  std::vector<BasisIndex> members;
  std::stringstream ss(spec);
  for (std::string tok; std::getline(ss, tok, ',');) {
    if (tok.empty()) continue;
    auto it = std::find(t.labels().begin(), t.labels().end(), tok);
    if (tok.find_first_not_of("0123456789") == std::string::npos) {
      BasisIndex i = std::stoul(tok);
      if (i >= t.rank()) throw InputError("subset index " + tok + " out of range");
      members.push_back(i);
    } else if (it != t.labels().end()) {
      members.push_back(static_cast<BasisIndex>(it - t.labels().begin()));
    } else {
      throw InputError("unknown basis element '" + tok + "' in --subset");
    }
  }
  if (std::find(members.begin(), members.end(), 0) == members.end()) members.push_back(0);
  std::sort(members.begin(), members.end());
  members.erase(std::unique(members.begin(), members.end()), members.end());
  return members;
}

int cmd_quotient(const Options& opts, const Input& input, const std::string& subset_spec,
                 Report& r, std::ostream& out) {
  auto t = read_table(input, opts);
  require_valid(t, opts);
  auto members = parse_subset(t, subset_spec);
  if (!closed::is_closed(t, members)) {
    auto c = closed::closure(t, members);
    throw InputError("subset " + subset_text(t, members) + " is not closed; its closure is " +
                     subset_text(t, c.members));
  }
  auto c = closed::closure(t, members);
  auto q = closed::quotient(t, c, opts.tol);
  bool embedding = closed::verify_embedding(q, std::max(opts.tol, 1e-9));
  auto preservation = closed::quotient_multiplicity_preservation(t, c, opts.characters());

  r.line("subset: " + subset_text(t, c.members) + "  |C+| = " + c.c_plus_degree.str());
  Json cosets = Json::array();
  for (const auto& coset : q.cosets) {
    cosets.push_back(coset);
    r.line("double coset: " + subset_text(t, coset));
  }
  r["subset"] = c.members;
  r["cosets"] = cosets;
  r["embedding"] = embedding;
  r.line("embedding eAe: " + yes_no(embedding));
  Json matches = Json::array();
  for (const auto& m : preservation.matches) {
    matches.push_back({{"parent", m.parent_character + 1},
                       {"quotient", m.quotient_character + 1},
                       {"parent_zeta", scalar_json(m.parent_zeta)},
                       {"quotient_zeta", scalar_json(m.quotient_zeta)}});
    r.line("chi" + std::to_string(m.parent_character + 1) + " -> quotient chi" +
           std::to_string(m.quotient_character + 1) + ": zeta " + m.parent_zeta.str() + " = " +
           m.quotient_zeta.str());
  }
  r["multiplicity_preservation"] = {{"holds", preservation.holds}, {"matches", matches}};
  r.line("multiplicities preserved: " + yes_no(preservation.holds));
  return r.emit(out, embedding && preservation.holds ? kOk : kNegative, write_tba(q.table));
}

// dual --------------------------------------------------------------------

int cmd_dual(const Options& opts, const Input& input, Report& r, std::ostream& out) {
  auto [t, data] = compute(opts, input);
  const auto& ct = data.table;
  const double tol = ct.exact ? 0.0 : std::max(opts.tol, 1e-9) * 10;
  auto pq = duality::eigenmatrices(t, ct, opts.tol);
  Matrix target = Matrix::identity(t.rank()) * pq.b_plus;
  bool pq_ok = near(pq.P * pq.Q, target, tol) && near(pq.Q * pq.P, target, tol);
  bool q_column = true;
  for (std::size_t chi = 0; chi < ct.size(); ++chi)
    q_column = q_column && near(pq.Q(0, chi), ct.zeta[chi], tol);
  auto da = duality::dual_algebra(t, ct, opts.tol);
  auto lemma = duality::dual_zeta_matches_degrees(t, ct, opts.characters());
  auto consistency = duality::duality_standard_consistency(t, ct, opts.characters());

  r["pq_equals_b_plus_identity"] = pq_ok;
  r["q_first_row_is_zeta"] = q_column;
  r.line("PQ = QP = |B+| I: " + yes_no(pq_ok));
  r.line("q_chi(1) = zeta_chi: " + yes_no(q_column));
  r["dual_degrees"] = scalars_json(da.table.degrees());
  std::vector<std::string> degs;
  for (const auto& d : da.table.degrees()) degs.push_back(d.str());
  r.line("dual degrees: (" + join(degs, ", ") + ")");
  std::vector<std::string> lhs;
  for (const auto& d : lemma.lhs) lhs.push_back(d.str());
  r["dual_zeta_matches_degrees"] = {{"holds", lemma.holds}, {"dual_zeta", scalars_json(lemma.lhs)}};
  r.line("dual zeta multiset {" + join(lhs, ", ") + "} equals degrees: " + yes_no(lemma.holds));
  r["standard_consistency"] = {
      {"primal", {{"integral_degree", consistency.primal_integral_degree},
                  {"in_standard_class", consistency.primal_in_standard_class}}},
      {"dual", {{"integral_degree", consistency.dual_integral_degree},
                {"in_standard_class", consistency.dual_in_standard_class}}},
      {"consistent", consistency.consistent},
      {"double_dual_zeta_matches", consistency.double_dual_zeta_matches}};
  r.line("primal integral degree / in S: " + yes_no(consistency.primal_integral_degree) + " / " +
         yes_no(consistency.primal_in_standard_class));
  r.line("dual integral degree / in S: " + yes_no(consistency.dual_integral_degree) + " / " +
         yes_no(consistency.dual_in_standard_class));
  r.line("consistent: " + yes_no(consistency.consistent));
  r.line("double dual zeta matches: " + yes_no(consistency.double_dual_zeta_matches));
  bool ok = pq_ok && q_column && lemma.holds && consistency.consistent &&
            consistency.double_dual_zeta_matches;
  return r.emit(out, ok ? kOk : kNegative, write_tba(da.table));
}

// scheme ------------------------------------------------------------------

int cmd_scheme_check(const Input& input, Report& r, std::ostream& out) {
  auto s = scheme::parse_scheme(input.bytes);
  auto check = scheme::check_scheme(s);
  r["points"] = s.n;
  r["relations"] = s.rank();
  r["scheme"] = check.ok;
  r.line("points: " + std::to_string(s.n));
  r.line("relations: " + std::to_string(s.rank()));
  if (check.ok) {
    r.line("scheme: yes");
  } else {
    std::vector<std::string> w;
    for (auto i : check.witness) w.push_back(std::to_string(i));
    r["reason"] = check.reason;
    r["witness"] = check.witness;
    r.line("scheme: no (" + check.reason + (w.empty() ? "" : "; points " + join(w, ",")) + ")");
  }
  return r.emit(out, check.ok ? kOk : kNegative);
}

int cmd_scheme_algebra(const Options& opts, const Input& input, Report& r, std::ostream& out) {
  auto s = scheme::parse_scheme(input.bytes);
  auto alg = scheme::scheme_to_algebra(s);
  auto ct = chartab::character_table(alg.table, opts.characters()).table;
  auto verdict = chartab::check_standard_condition(ct);
  auto image = scheme::verify_adjacency_image(alg.table, alg.adjacency, opts.tol);
  r["points"] = s.n;
  r["adjacency_image"] = image.is_adjacency_image;
  r.line("points: " + std::to_string(s.n) + ", relations: " + std::to_string(s.rank()));
  r.line("adjacency matrices form an adjacency image: " + yes_no(image.is_adjacency_image));
  standard_lines(r, verdict);
  bool ok = verdict.in_standard_class && image.is_adjacency_image;
  return r.emit(out, ok ? kOk : kNegative, write_tba(alg.table));
}

// gen ---------------------------------------------------------------------

int cmd_gen_affine(long q, Report& r, std::ostream& out) {
  auto t = scheme::affine_plane_algebra(q);
  r["q"] = q;
  r.line("affine plane order " + std::to_string(q) + ", rank " + std::to_string(t.rank()));
  return r.emit(out, kOk, write_tba(t));
}

int cmd_gen_srg(const Options& opts, const std::vector<long>& p, Report& r, std::ostream& out) {
  auto result = scheme::srg_algebra(p[0], p[1], p[2], p[3], opts.characters());
  std::vector<std::string> z;
  for (const auto& v : result.zeta) z.push_back(v.str());
  r["parameters"] = p;
  r["integrality_ok"] = result.integrality_ok;
  r["standard_ok"] = result.standard_ok;
  r["agree"] = result.agree;
  r["zeta"] = scalars_json(result.zeta);
  r.line("parameters: (" + std::to_string(p[0]) + "," + std::to_string(p[1]) + "," +
         std::to_string(p[2]) + "," + std::to_string(p[3]) + ")");
  r.line("zeta: {" + join(z, ", ") + "}");
  r.line("multiplicities integral: " + yes_no(result.integrality_ok));
  r.line("standard class: " + yes_no(result.standard_ok));
  r.line("agree: " + yes_no(result.agree));
  return r.emit(out, result.agree ? kOk : kNegative, write_tba(result.table));
}

}  // namespace

std::string fnv1a64(const std::string& bytes) {
  std::uint64_t h = 14695981039346656037ULL;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
        std::ostream& err) {
  Options opts;
  CLI::App app{"Table algebras, character tables and association schemes", "tabalg"};
  app.fallthrough();
  app.require_subcommand(1);
  app.add_option("--seed", opts.seed, "Seed for the randomized diagonalization");
  app.add_option("--tol", opts.tol, "Numerical tolerance")->check(CLI::PositiveNumber);
  app.add_flag("--exact", opts.exact, "Require exact rational results");
  app.add_flag("--json", opts.json, "Structured JSON output");

  std::string file;
  std::string subset;
  long q = 0;
  std::vector<long> srg;
  auto file_cmd = [&](const char* name, const char* help) {
    auto* sub = app.add_subcommand(name, help);
    sub->add_option("file", file, "Input file, - for stdin")->required();
    return sub;
  };
  auto* verify = file_cmd("verify", "Check the C-algebra axioms");
  auto* chartab_cmd = file_cmd("chartab", "Character table and multiplicities");
  auto* standard = file_cmd("standard", "Check whether every standard multiplicity is a positive integer");
  auto* closed_cmd = file_cmd("closed", "Enumerate closed subsets");
  auto* quotient = file_cmd("quotient", "Quotient by a closed subset");
  quotient->add_option("--subset", subset, "Comma-separated indices or labels; numeric tokens are indices")->required();
  auto* dual = file_cmd("dual", "Dual C-algebra and duality checks");
  auto* scheme_cmd = app.add_subcommand("scheme", "Association schemes");
  scheme_cmd->require_subcommand(1);
  auto* scheme_check = scheme_cmd->add_subcommand("check", "Validate a relation matrix");
  scheme_check->add_option("file", file, "Input file, - for stdin")->required();
  auto* scheme_algebra = scheme_cmd->add_subcommand("algebra", "Emit the adjacency algebra");
  scheme_algebra->add_option("file", file, "Input file, - for stdin")->required();
  auto* gen = app.add_subcommand("gen", "Generate algebras");
  gen->require_subcommand(1);
  auto* gen_affine = gen->add_subcommand("affine", "Affine plane algebra of order q");
  gen_affine->add_option("q", q, "Order")->required();
  auto* gen_srg = gen->add_subcommand("srg", "Rank-3 algebra of an SRG parameter set");
  gen_srg->add_option("params", srg, "n k lambda mu")->required()->expected(4);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kInputError;
  }

  std::string echo = "tabalg";
  for (const auto& a : args) echo += " " + a;
  Report report(opts, echo);
  auto with_input = [&](auto&& body) {
    Input input = load(file, in);
    report.input(input);
    return body(input);
  };

  try {
    if (verify->parsed())
      return with_input([&](const Input& i) { return cmd_verify(opts, i, report, out); });
    if (chartab_cmd->parsed())
      return with_input([&](const Input& i) { return cmd_chartab(opts, i, report, out); });
    if (standard->parsed())
      return with_input([&](const Input& i) { return cmd_standard(opts, i, report, out); });
    if (closed_cmd->parsed())
      return with_input([&](const Input& i) { return cmd_closed(opts, i, report, out); });
    if (quotient->parsed())
      return with_input(
          [&](const Input& i) { return cmd_quotient(opts, i, subset, report, out); });
    if (dual->parsed())
      return with_input([&](const Input& i) { return cmd_dual(opts, i, report, out); });
    if (scheme_check->parsed())
      return with_input([&](const Input& i) { return cmd_scheme_check(i, report, out); });
    if (scheme_algebra->parsed())
      return with_input([&](const Input& i) { return cmd_scheme_algebra(opts, i, report, out); });
    if (gen_affine->parsed()) return cmd_gen_affine(q, report, out);
    if (gen_srg->parsed()) return cmd_gen_srg(opts, srg, report, out);
  } catch (const ParseError& e) {
    err << "error: " << file << ":" << e.what() << '\n';
    return kInputError;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kInputError;
  }
  err << "error: no command\n";
  return kInputError;
}

}  // namespace tabalg::cli
