#include "slie/cli.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include "slie/capability.hpp"
#include "slie/catalog.hpp"
#include "slie/io.hpp"
#include "slie/multiplier.hpp"
#include "slie/recognize.hpp"

namespace slie {

namespace {

// Input errors that are not usage errors.
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

SuperAlgebra load(const std::string& source, ParseMode mode) {
  constexpr std::string_view prefix = "catalog:";
  if (source.rfind(prefix, 0) == 0) {
    const auto id = source.substr(prefix.size());
    const auto* e = find_entry(id);
    if (!e) throw InputError("unknown catalog id '" + id + "'");
    return e->algebra;
  }
  std::string text;
  if (source == "-") {
    std::ostringstream buf;
    buf << std::cin.rdbuf();
    text = buf.str();
  } else {
    std::ifstream in(source);
    if (!in) throw InputError("cannot read '" + source + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    text = buf.str();
  }
  try {
    return parse_algebra(text, mode);
  } catch (const ParseError& ex) {
    throw InputError(source + ": " + ex.what());
  }
}

std::string join(const std::vector<std::string>& items, const std::string& sep = ", ") {
  std::string out;
  for (const auto& s : items) {
    if (!out.empty()) out += sep;
    out += s;
  }
  return out.empty() ? "-" : out;
}

std::string basis_str(const SuperAlgebra& a, const GradedSubspace& s) {
  std::vector<std::string> parts;
  for (const auto& v : s.basis_vectors()) parts.push_back(format_vector(a, v));
  return parts.empty() ? "0" : join(parts, "; ");
}

int cmd_validate(const std::string& file, std::ostream& out) {
  const auto a = load(file, ParseMode::Lenient);
  const auto v = validate(a);
  out << "algebra: " << a.name() << "\n";
  out << "dim: " << a.dim().str() << "\n";
  out << "violations: " << v.size() << "\n";
  for (const auto& x : v) {
    std::vector<std::string> idx;
    for (auto b : x.basis) idx.push_back(std::to_string(b));
    out << "violation: " << x.axiom << " (" << join(idx, ",") << ") " << x.detail << "\n";
  }
  out << "status: " << (v.empty() ? "PASS" : "FAIL") << "\n";
  return v.empty() ? 0 : 1;
}

int cmd_invariants(const std::string& file, std::ostream& out) {
  const auto a = load(file, ParseMode::Lenient);
  if (auto v = validate(a); !v.empty()) throw InputError(a.name() + " fails validation: " + v.front().detail);
  const auto z = center(a);
  const auto l2 = derived(a);
  const auto lcs = lower_central_series(a);
  out << "algebra: " << a.name() << "\n";
  out << "dim: " << a.dim().str() << "\n";
  out << "dim_total: " << a.dim().total() << "\n";
  out << "center: " << z.dim().str() << "\n";
  out << "center_basis: " << basis_str(a, z) << "\n";
  out << "derived: " << l2.dim().str() << "\n";
  out << "derived_basis: " << basis_str(a, l2) << "\n";
  for (std::size_t k = 0; k < lcs.terms.size(); ++k)
    out << "lcs_" << k + 1 << ": " << lcs.terms[k].dim().str() << "\n";
  if (lcs.nilpotency_class) {
    out << "nilpotency_class: " << *lcs.nilpotency_class << "\n";
    out << "family: " << recognize(a).str() << "\n";
  } else {
    out << "nilpotency_class: not nilpotent\n";
  }
  return 0;
}

void print_result(const MultiplierResult& r, std::ostream& out, const std::string& prefix) {
  out << prefix << "dim: " << r.dim.str() << "\n";
  out << prefix << "dim_total: " << r.dim.total() << "\n";
  if (r.method == MultiplierMethod::Tags) {
    out << prefix << "tag_count: " << r.tag_count << "\n";
    out << prefix << "absorbed: " << join(r.absorbed) << "\n";
    out << prefix << "relation_rank: " << r.relation_rank << "\n";
    out << prefix << "free_generators: " << join(r.free_generators) << "\n";
  } else if (r.method == MultiplierMethod::Homology) {
    out << prefix << "chain_c2_dim: " << r.tag_count << "\n";
    out << prefix << "boundary_rank: " << r.relation_rank << "\n";
  } else if (r.method == MultiplierMethod::Formula) {
    out << prefix << "family: " << r.family << "\n";
  }
}

int cmd_multiplier(const std::string& file, const std::string& method, std::ostream& out) {
  const auto a = load(file, ParseMode::Strict);
  out << "algebra: " << a.name() << "\n";
  out << "method: " << method << "\n";
  if (method == "tags") {
    print_result(multiplier_tags(a), out, "");
    return 0;
  }
  if (method == "homology") {
    print_result(multiplier_homology(a), out, "");
    return 0;
  }
  if (method == "formula") {
    print_result(multiplier_formula(recognize(a)), out, "");
    return 0;
  }
  const auto tags = multiplier_tags(a);
  const auto hom = multiplier_homology(a);
  bool agree = tags.dim == hom.dim;
  print_result(tags, out, "tags_");
  print_result(hom, out, "homology_");
  try {
    const auto f = multiplier_formula(recognize(a));
    print_result(f, out, "formula_");
    agree = agree && f.dim == tags.dim;
  } catch (const UnsupportedFamily&) {
    out << "formula_dim: n/a\n";
  }
  out << "dim: " << tags.dim.str() << "\n";
  out << "dim_total: " << tags.dim.total() << "\n";
  out << "agree: " << (agree ? "yes" : "no") << "\n";
  out << "status: " << (agree ? "PASS" : "FAIL") << "\n";
  return agree ? 0 : 1;
}

void print_verdict(const SuperAlgebra& a, const CapabilityVerdict& v, std::ostream& out, const std::string& prefix) {
  out << prefix << "status: " << to_string(v.status) << "\n";
  out << prefix << "rule: " << v.rule << "\n";
  if (v.witness) {
    out << prefix << "witness: " << basis_str(a, *v.witness) << "\n";
    out << prefix << "witness_dim: " << v.witness->dim().str() << "\n";
  } else {
    out << prefix << "witness: none\n";
  }
  out << prefix << "notes: " << (v.notes.empty() ? "-" : v.notes) << "\n";
  out << prefix << "cross_check: " << (v.cross_check.empty() ? "-" : v.cross_check) << "\n";
}

int cmd_capability(const std::string& file, std::size_t grid, std::ostream& out) {
  const auto a = load(file, ParseMode::Lenient);
  const auto v = capability_verdict(a, grid);
  out << "algebra: " << a.name() << "\n";
  out << "grid_bound: " << grid << "\n";
  print_verdict(a, v, out, "");
  return 0;
}

int cmd_quotient(const std::string& file, const std::string& ideal, std::ostream& out) {
  const auto a = load(file, ParseMode::Strict);
  std::vector<Vector> gens;
  std::istringstream in(ideal);
  for (std::string part; std::getline(in, part, ';');) {
    if (part.find_first_not_of(" \t") == std::string::npos) continue;
    try {
      gens.push_back(parse_vector(a, part));
    } catch (const ParseError& ex) {
      throw InputError(std::string("--ideal: ") + ex.what());
    }
  }
  GradedIdeal n;
  try {
    n = GradedIdeal(a, gens);
  } catch (const AlgebraError& ex) {
    throw InputError(std::string("--ideal: ") + ex.what());
  }
  out << print_algebra(quotient(a, n));
  return 0;
}

int cmd_dsum(const std::string& f, const std::string& g, std::ostream& out) {
  out << print_algebra(direct_sum(load(f, ParseMode::Strict), load(g, ParseMode::Strict)));
  return 0;
}

std::string multiplier_str(const CatalogEntry& e) {
  if (e.expected_multiplier_graded) return e.expected_multiplier_graded->str();
  return e.expected_multiplier ? std::to_string(*e.expected_multiplier) : "-";
}

int cmd_catalog_list(std::ostream& out) {
  for (const auto& e : load_catalog())
    out << e.id << ": dim " << e.algebra.dim().str() << ", group " << e.group << ", expected "
        << to_string(e.expected_verdict) << ", multiplier " << multiplier_str(e) << ", flags " << join(e.flags)
        << "\n";
  return 0;
}

int cmd_catalog_show(const std::string& id, std::ostream& out) {
  const auto* e = find_entry(id);
  if (!e) throw InputError("unknown catalog id '" + id + "'");
  out << "# id: " << e->id << "\n";
  if (!e->aliases.empty()) out << "# aliases: " << join(e->aliases) << "\n";
  out << "# group: " << e->group << "\n";
  out << "# expected_verdict: " << to_string(e->expected_verdict) << "\n";
  out << "# expected_multiplier: " << multiplier_str(*e) << "\n";
  out << "# provenance: " << e->provenance << "\n";
  if (!e->flags.empty()) out << "# flags: " << join(e->flags) << "\n";
  if (!e->note.empty()) out << "# note: " << e->note << "\n";
  for (const auto& r : e->alternate_readings) out << "# alternate_reading: " << r << "\n";
  out << print_algebra(e->algebra);
  return 0;
}

int cmd_catalog_verify(const std::optional<std::string>& id, std::size_t grid, std::ostream& out) {
  VerifyOptions opt;
  opt.grid_bound = grid;
  opt.only_id = id;
  if (id && !find_entry(*id)) throw InputError("unknown catalog id '" + *id + "'");
  const auto rep = verify_catalog(load_catalog(), opt);
  for (const auto& e : rep.entries) {
    out << e.id << ": " << to_string(e.status);
    if (e.multiplier_tags) out << ", multiplier " << e.multiplier_tags->str();
    if (e.verdict) out << ", verdict " << to_string(e.verdict->status) << " (" << e.verdict->rule << ")";
    if (!e.failures.empty()) out << ", " << join(e.failures, "; ");
    if (!e.reason.empty()) out << ", reason " << e.reason;
    out << "\n";
  }
  out << "passed: " << rep.passed << "\n";
  out << "failed: " << rep.failed << "\n";
  out << "skipped: " << rep.skipped << "\n";
  out << "status: " << (rep.ok() ? "PASS" : "FAIL") << "\n";
  return rep.ok() ? 0 : 1;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact computations for nilpotent Lie superalgebras", "slie"};
  app.require_subcommand(1);

  std::string file, file2, method = "tags", ideal, id;
  std::size_t grid = default_grid_bound();
  std::optional<std::string> verify_id;

  auto* validate_cmd = app.add_subcommand("validate", "Check grading, skew-symmetry and Jacobi");
  validate_cmd->add_option("file", file, "algebra file, '-' or catalog:<id>")->required();

  auto* inv_cmd = app.add_subcommand("invariants", "Center, derived algebra, lower central series");
  inv_cmd->add_option("file", file)->required();

  auto* mult_cmd = app.add_subcommand("multiplier", "Schur multiplier dimension");
  mult_cmd->add_option("file", file)->required();
  mult_cmd->add_option("--method", method)->check(CLI::IsMember({"tags", "homology", "formula", "all"}));

  auto* cap_cmd = app.add_subcommand("capability", "Capability verdict");
  cap_cmd->add_option("file", file)->required();
  cap_cmd->add_option("--grid", grid, "witness grid bound (default SLIE_GRID_BOUND or 2)");

  auto* quo_cmd = app.add_subcommand("quotient", "Quotient by a graded ideal");
  quo_cmd->add_option("file", file)->required();
  quo_cmd->add_option("--ideal", ideal, "generators separated by ';'")->required();

  auto* dsum_cmd = app.add_subcommand("dsum", "Direct sum of two algebras");
  dsum_cmd->add_option("first", file)->required();
  dsum_cmd->add_option("second", file2)->required();

  auto* cat_cmd = app.add_subcommand("catalog", "Built-in algebras");
  cat_cmd->require_subcommand(1);
  auto* cat_list = cat_cmd->add_subcommand("list", "List entries");
  auto* cat_show = cat_cmd->add_subcommand("show", "Print an entry as an algebra file");
  cat_show->add_option("id", id)->required();
  auto* cat_verify = cat_cmd->add_subcommand("verify", "Recompute and compare with expectations");
  cat_verify->add_option("--id", verify_id);
  cat_verify->add_option("--grid", grid);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }

  try {
    if (*validate_cmd) return cmd_validate(file, out);
    if (*inv_cmd) return cmd_invariants(file, out);
    if (*mult_cmd) return cmd_multiplier(file, method, out);
    if (*cap_cmd) return cmd_capability(file, grid, out);
    if (*quo_cmd) return cmd_quotient(file, ideal, out);
    if (*dsum_cmd) return cmd_dsum(file, file2, out);
    if (*cat_list) return cmd_catalog_list(out);
    if (*cat_show) return cmd_catalog_show(id, out);
    if (*cat_verify) return cmd_catalog_verify(verify_id, grid, out);
  } catch (const std::exception& ex) {
    err << "error: " << ex.what() << "\n";
    return 1;
  }
  return 2;
}

}  // namespace slie
