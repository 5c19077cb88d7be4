// Command-line front end: group construction, validation, equivalence,
// classification, and the CRT reduction pipeline over exact invariant data.

#include <CLI11.hpp>

#include <cstdlib>
#include <iostream>
#include <optional>
#include <string>

#include "fspt/classify.hpp"
#include "fspt/io.hpp"
#include "fspt/report.hpp"
#include "fspt/sample.hpp"

namespace {

using namespace fspt;

struct OutputOptions {
  std::string format = "text";
};

int finish(Report& report, const OutputOptions& out) {
  std::cout << (out.format == "json" ? emit_json(report) : emit_text(report));
  return report.exit_status;
}

Json violation_json(const TripleViolation& v) {
  Json j;
  j["constraint"] = v.constraint;
  j["tuple"] = v.tuple;
  j["lhs"] = v.lhs;
  j["rhs"] = v.rhs;
  return j;
}

Json violation_json(const CrtViolation& v) {
  Json j;
  j["constraint"] = v.constraint;
  j["tuple"] = v.tuple;
  j["lhs"] = v.lhs;
  j["rhs"] = v.rhs;
  return j;
}

std::vector<Bit> parse_b_spec(const std::string& spec, const FiniteGroup& g, std::uint64_t seed) {
  if (spec == "zero") return std::vector<Bit>(static_cast<std::size_t>(g.order()), 0);
  if (spec == "random") return random_b(g, seed);
  std::vector<Bit> b;
  std::size_t pos = 0;
  while (pos <= spec.size()) {
    const std::size_t comma = spec.find(',', pos);
    const std::string tok = spec.substr(pos, comma == std::string::npos ? spec.size() - pos
                                                                        : comma - pos);
    if (tok != "0" && tok != "1")
      throw std::invalid_argument("--b expects 'zero', 'random', or comma-separated bits");
    b.push_back(static_cast<Bit>(tok == "1"));
    if (comma == std::string::npos) break;
    pos = comma + 1;
  }
  if (b.size() != static_cast<std::size_t>(g.order()))
    throw std::invalid_argument("--b bit list length must equal the group order");
  return b;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact invariants of 2-d fermionic symmetry-protected phases"};
  app.require_subcommand(1);
  OutputOptions out;
  app.add_option("--format", out.format, "report format: text or json")
      ->check(CLI::IsMember({"text", "json"}));

  // make-group
  auto* make_group = app.add_subcommand("make-group", "construct a group file");
  std::optional<int> cyclic_n, dihedral_n;
  std::vector<std::string> product_files;
  std::string group_out;
  make_group->add_option("--cyclic", cyclic_n, "cyclic group of order n");
  make_group->add_option("--dihedral", dihedral_n, "dihedral group of order 2n");
  make_group->add_option("--product", product_files, "direct product of two group files")
      ->expected(2);
  make_group->add_option("--out", group_out, "output path")->required();

  // validate-triple
  auto* vtriple = app.add_subcommand("validate-triple", "check the triple constraints");
  std::string vtriple_in;
  vtriple->add_option("--in", vtriple_in, "triple file")->required();

  // validate-crt
  auto* vcrt = app.add_subcommand("validate-crt", "check the pentuple constraints");
  std::string vcrt_in;
  vcrt->add_option("--in", vcrt_in, "pentuple file")->required();

  // reduce
  auto* red = app.add_subcommand("reduce", "carry a pentuple to a diagonal triple");
  std::string red_in, red_out, red_cert;
  red->add_option("--in", red_in, "pentuple file")->required();
  red->add_option("--out", red_out, "output triple file");
  red->add_option("--cert", red_cert, "output certificate file");

  // equiv
  auto* eq = app.add_subcommand("equiv", "decide equivalence of two triples");
  std::string eq_left, eq_right;
  int eq_budget = 20;
  bool eq_enumerate = false;
  eq->add_option("--left", eq_left, "left triple file")->required();
  eq->add_option("--right", eq_right, "right triple file")->required();
  eq->add_option("--budget", eq_budget, "log2 cap on enumerated kernel combinations");
  eq->add_flag("--enumerate", eq_enumerate,
               "walk the m-coset instead of the complete linear reduction");

  // classify
  auto* cls = app.add_subcommand("classify", "classify sectors for one a (or all a)");
  std::string cls_group;
  std::optional<int> cls_a;
  std::int64_t cls_den = 0;
  bool cls_diagonal = false;
  std::uint64_t cls_max_reps = 4096;
  cls->add_option("--group", cls_group, "group file")->required();
  cls->add_option("--a", cls_a, "index into the lexicographic list of Z2 homomorphisms");
  cls->add_option("--denominator", cls_den, "phase torsion (default lcm(|G|, 8))");
  cls->add_flag("--diagonal-only", cls_diagonal, "count classes with diagonal representatives");
  cls->add_option("--max-reps", cls_max_reps, "cap on enumerated representatives per sector");

  // synthesize
  auto* syn = app.add_subcommand("synthesize", "build a pentuple from a diagonal triple");
  std::string syn_triple, syn_b = "zero", syn_out;
  std::uint64_t syn_seed = 0;
  syn->add_option("--triple", syn_triple, "diagonal triple file")->required();
  syn->add_option("--b", syn_b, "b spec: zero, random, or comma-separated bits");
  syn->add_option("--seed", syn_seed, "seed for --b random");
  syn->add_option("--out", syn_out, "output pentuple file");

  CLI11_PARSE(app, argc, argv);

  Report report;
  try {
    if (make_group->parsed()) {
      report.command = "make-group";
      int modes = (cyclic_n ? 1 : 0) + (dihedral_n ? 1 : 0) + (product_files.empty() ? 0 : 1);
      if (modes != 1)
        throw std::invalid_argument("choose exactly one of --cyclic, --dihedral, --product");
      GroupPtr g;
      if (cyclic_n) {
        report.options["cyclic"] = *cyclic_n;
        g = std::make_shared<const FiniteGroup>(FiniteGroup::cyclic(*cyclic_n));
      } else if (dihedral_n) {
        report.options["dihedral"] = *dihedral_n;
        g = std::make_shared<const FiniteGroup>(FiniteGroup::dihedral(*dihedral_n));
      } else {
        report.options["product"] = product_files;
        GroupPtr lhs = load_group(product_files[0]);
        GroupPtr rhs = load_group(product_files[1]);
        g = std::make_shared<const FiniteGroup>(FiniteGroup::direct_product(*lhs, *rhs));
      }
      write_json_file(group_out, group_to_json(*g));
      report.options["out"] = group_out;
      report.result["order"] = g->order();
      report.result["written"] = group_out;
    } else if (vtriple->parsed()) {
      report.command = "validate-triple";
      report.options["in"] = vtriple_in;
      const PD0Triple t = load_triple(vtriple_in);
      if (auto v = validate_triple(t)) {
        report.result["verdict"] = "violation";
        report.result["violation"] = violation_json(*v);
        report.exit_status = kExitViolation;
      } else {
        report.result["verdict"] = "ok";
        report.result["diagonal"] = is_diagonal(t);
      }
    } else if (vcrt->parsed()) {
      report.command = "validate-crt";
      report.options["in"] = vcrt_in;
      const CRTPentuple p = load_pentuple(vcrt_in);
      if (auto v = validate_crt(p)) {
        report.result["verdict"] = "violation";
        report.result["violation"] = violation_json(*v);
        report.exit_status = kExitViolation;
      } else {
        report.result["verdict"] = "ok";
      }
    } else if (red->parsed()) {
      report.command = "reduce";
      report.options["in"] = red_in;
      const CRTPentuple p = load_pentuple(red_in);
      const ReduceOutcome outcome = reduce(p);
      if (outcome.rejected) {
        report.result["verdict"] = "rejected";
        report.result["violation"] = violation_json(*outcome.rejected);
        report.exit_status = kExitViolation;
      } else if (outcome.inconsistency) {
        report.result["verdict"] = "internal-inconsistency";
        Json j;
        j["identity"] = outcome.inconsistency->name;
        j["tuple"] = outcome.inconsistency->tuple;
        j["detail"] = outcome.inconsistency->detail;
        report.result["failure"] = std::move(j);
        report.exit_status = kExitViolation;
      } else {
        report.result["verdict"] = "reduced";
        report.result["diagonal"] = is_diagonal(*outcome.triple);
        report.result["triple_digest"] = digest(triple_to_json(*outcome.triple));
        if (!red_out.empty()) {
          write_json_file(red_out, triple_to_json(*outcome.triple));
          report.result["out"] = red_out;
        }
        if (!red_cert.empty()) {
          write_json_file(red_cert, reduction_certificate_to_json(*outcome.certificate));
          report.result["cert"] = red_cert;
        }
      }
    } else if (eq->parsed()) {
      report.command = "equiv";
      report.options["left"] = eq_left;
      report.options["right"] = eq_right;
      report.options["budget"] = eq_budget;
      report.options["enumerate"] = eq_enumerate;
      const PD0Triple t1 = load_triple(eq_left);
      const PD0Triple t2 = load_triple(eq_right);
      EquivOptions opts;
      opts.budget_log2 = eq_budget;
      opts.enumerate = eq_enumerate;
      const EquivResult res = equiv(t1, t2, opts);
      switch (res.verdict) {
        case EquivVerdict::equivalent:
          report.result["verdict"] = "equivalent";
          report.result["certificate"] = equiv_certificate_to_json(*res.certificate);
          break;
        case EquivVerdict::inequivalent:
          report.result["verdict"] = "inequivalent";
          report.result["reason"] = res.reason;
          report.exit_status = kExitViolation;
          break;
        case EquivVerdict::budget_exceeded:
          report.result["verdict"] = "budget-exceeded";
          report.exit_status = kExitBudgetExceeded;
          break;
      }
    } else if (cls->parsed()) {
      report.command = "classify";
      report.options["group"] = cls_group;
      report.options["denominator"] = cls_den;
      report.options["diagonal_only"] = cls_diagonal;
      report.options["max_reps"] = cls_max_reps;
      GroupPtr g = load_group(cls_group);
      ClassifyOptions opts;
      opts.denominator = cls_den;
      opts.diagonal_only = cls_diagonal;
      opts.max_reps = cls_max_reps;
      // the only environment-variable configuration: worker count
      if (const char* env = std::getenv("FSPT_WORKERS")) {
        char* end = nullptr;
        const long w = std::strtol(env, &end, 10);
        if (!end || *end != '\0' || w < 1 || w > 256)
          throw std::invalid_argument("FSPT_WORKERS must be an integer in 1..256");
        opts.workers = static_cast<int>(w);
      }
      report.options["workers"] = opts.workers;
      const std::vector<Z2Hom> homs = all_z2_homs(*g);

      auto sector_json = [](const SectorResult& s) {
        Json j;
        j["kappa_digest"] = digest(cochain_to_json(s.kappa_rep));
        j["empty"] = s.empty;
        j["class_count"] = s.class_count;
        Json reps = Json::array();
        for (const auto& r : s.representatives) {
          Json rj;
          rj["digest"] = digest(cochain_to_json(r));
          rj["entries"] = cochain_to_json(r)["entries"];
          rj["denominator"] = r.den();
          reps.push_back(std::move(rj));
        }
        j["representatives"] = std::move(reps);
        j["representatives_complete"] = s.reps_complete;
        return j;
      };

      Json per_a = Json::array();
      std::uint64_t total = 0;
      std::vector<int> indices;
      if (cls_a) {
        if (*cls_a < 0 || *cls_a >= static_cast<int>(homs.size()))
          throw std::invalid_argument("--a index out of range; the group has " +
                                      std::to_string(homs.size()) + " homomorphisms");
        indices.push_back(*cls_a);
        report.options["a"] = *cls_a;
      } else {
        for (int i = 0; i < static_cast<int>(homs.size()); ++i) indices.push_back(i);
        report.options["a"] = "all";
      }
      for (int i : indices) {
        const ClassifyResult r = classify_sector(g, homs[static_cast<std::size_t>(i)], opts);
        Json aj;
        aj["a_index"] = i;
        Json values = Json::array();
        for (Bit v : homs[static_cast<std::size_t>(i)].values) values.push_back(static_cast<int>(v));
        aj["a_values"] = std::move(values);
        aj["denominator"] = r.denominator;
        Json sectors = Json::array();
        for (const auto& s : r.sectors) sectors.push_back(sector_json(s));
        aj["sectors"] = std::move(sectors);
        aj["class_count"] = r.total_classes;
        total += r.total_classes;
        per_a.push_back(std::move(aj));
      }
      report.result["per_a"] = std::move(per_a);
      report.result["class_count"] = total;
    } else if (syn->parsed()) {
      report.command = "synthesize";
      report.options["triple"] = syn_triple;
      report.options["b"] = syn_b;
      report.options["seed"] = syn_seed;
      const PD0Triple t = load_triple(syn_triple);
      const std::vector<Bit> b = parse_b_spec(syn_b, *t.group, syn_seed);
      const CRTPentuple p = synthesize_pentuple(t, b);
      Json bj = Json::array();
      for (Bit v : b) bj.push_back(static_cast<int>(v));
      report.result["b"] = std::move(bj);
      report.result["verdict"] = "synthesized";
      report.result["pentuple_digest"] = digest(pentuple_to_json(p));
      if (!syn_out.empty()) {
        write_json_file(syn_out, pentuple_to_json(p));
        report.result["out"] = syn_out;
      }
    }
  } catch (const ConventionDiscrepancy& e) {
    report.result["verdict"] = "convention-discrepancy";
    report.result["violation"] = violation_json(e.violation);
    report.exit_status = kExitViolation;
  } catch (const SchemaError& e) {
    report.result["error"] = e.what();
    report.exit_status = kExitInputError;
  } catch (const GroupError& e) {
    report.result["error"] = e.what();
    report.exit_status = kExitInputError;
  } catch (const std::invalid_argument& e) {
    report.result["error"] = e.what();
    report.exit_status = kExitInputError;
  } catch (const std::exception& e) {
    report.result["error"] = e.what();
    report.exit_status = kExitViolation;
  }
  return finish(report, out);
}
