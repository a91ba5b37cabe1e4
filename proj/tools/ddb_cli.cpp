// Command-line surface for the double-disk-bundle decision library.

#include <CLI11.hpp>

#include <atomic>
#include <cstdlib>
#include <iostream>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "ddb/ddb.hpp"

namespace {

struct Options {
  bool json = false;
  bool strict = false;
  std::size_t coset_limit = 1'000'000;
  bool saw_unknown = false;

  ddb::EnumLimit limit() const { return {coset_limit}; }
};

ddb::GluingMatrix parse_matrix(const std::string& text) {
  std::vector<ddb::Int> entries;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) entries.emplace_back(item);
  if (entries.size() != 4)
    throw ddb::Error("matrix: expected four comma-separated integers a,b,c,d");
  return {entries[0], entries[1], entries[2], entries[3]};
}

ddb::TorusSublattice parse_sublattice(const std::string& s) {
  if (s == "first") return ddb::TorusSublattice::FirstSquared;
  if (s == "second") return ddb::TorusSublattice::SecondSquared;
  if (s == "diagonal") return ddb::TorusSublattice::Diagonal;
  throw ddb::Error("unknown sublattice '" + s +
                   "' (expected first, second or diagonal)");
}

ddb::BaseType parse_base(const std::string& s) {
  if (s == "pt") return ddb::BaseType::Point;
  if (s == "RP2") return ddb::BaseType::RP2;
  if (s == "S1") return ddb::BaseType::Circle;
  if (s == "T2") return ddb::BaseType::Torus2;
  if (s == "K") return ddb::BaseType::KleinBottle;
  throw ddb::Error("unknown base '" + s + "' (expected pt, RP2, S1, T2 or K)");
}

void emit(const Options& opt, const ddb::json& machine,
          const std::string& human) {
  if (opt.json)
    std::cout << machine.dump() << "\n";
  else
    std::cout << human << "\n";
}

std::string human_report(const ddb::Pi1Report& r) {
  std::ostringstream os;
  os << "presentation:   " << ddb::to_text(r.presentation) << "\n"
     << "order:          " << r.order.str() << "\n"
     << "classification: " << r.classification.str() << "\n"
     << "h1:             " << ddb::json_of(r.invariants).dump() << "\n"
     << "abelian:        " << (r.abelian ? "yes" : "no");
  for (const auto& line : r.certificate) os << "\ncertificate:    " << line;
  return os.str();
}

std::string human_verdict(const ddb::Verdict& v) {
  std::ostringstream os;
  os << "answer:      " << ddb::answer_name(v.answer);
  if (!v.rule.empty()) os << "\nrule:        " << v.rule;
  if (!v.group.empty()) os << "\ngroup:       " << v.group;
  os << "\nh1:          " << ddb::json_of(v.invariants).dump();
  if (v.order) os << "\norder:       " << *v.order;
  os << "\nhomogeneous: " << (v.homogeneous ? "yes" : "no");
  if (!v.note.empty()) os << "\nnote:        " << v.note;
  return os.str();
}

void track_unknown(Options& opt, const ddb::OrderInfo& order) {
  if (order.kind == ddb::OrderKind::Unknown) opt.saw_unknown = true;
}

void cmd_order(Options& opt, const std::string& text) {
  auto p = ddb::parse_presentation(text);
  auto n = ddb::group_order(p, opt.limit());
  if (!n) opt.saw_unknown = true;
  ddb::OrderInfo info =
      n ? ddb::OrderInfo::finite(*n) : ddb::OrderInfo::unknown();
  emit(opt, ddb::json_of(info), info.str());
}

void cmd_abelianize(Options& opt, const std::string& text) {
  auto f = ddb::h1_invariants(ddb::parse_presentation(text));
  emit(opt, ddb::json_of(f), ddb::json_of(f).dump());
}

void cmd_glue(Options& opt, const std::string& leaf, const std::string& minus,
              std::string plus, const std::string& matrix_text,
              const std::string& sublattice) {
  if (plus.empty()) plus = leaf == "S2" ? "pt" : "S1";
  if (leaf == "S2") {
    auto side_minus = ddb::SideDescriptor::make(ddb::LeafType::Sphere2,
                                                parse_base(minus));
    auto side_plus =
        ddb::SideDescriptor::make(ddb::LeafType::Sphere2, parse_base(plus));
    auto m = ddb::classify_sphere_leaf(side_minus, side_plus);
    emit(opt, ddb::json{{"manifold", ddb::manifold_name(m)}},
         std::string("manifold: ") + ddb::manifold_name(m));
    return;
  }
  if (leaf != "T2") throw ddb::Error("unknown leaf '" + leaf + "' (expected S2 or T2)");
  if (plus != "S1")
    throw ddb::Error("torus gluings need the circle side as --plus S1");
  auto side_minus =
      ddb::SideDescriptor::make(ddb::LeafType::Torus2, parse_base(minus));
  ddb::GluingMatrix m = parse_matrix(matrix_text);
  if (m.det() == -1) {
    m = ddb::matrix_orbit_reduce(m);
    std::cerr << "note: determinant -1 gluing reduced to " << m.str() << "\n";
  }
  auto report = ddb::torus_gluing_pi1(m, side_minus,
                                      parse_sublattice(sublattice), opt.limit());
  track_unknown(opt, report.order);
  emit(opt, ddb::json_of(report), human_report(report));
}

void cmd_enumerate(Options& opt, long long bound, const std::string& minus,
                   unsigned jobs) {
  if (bound < 0) throw ddb::Error("--bound must be non-negative");
  auto side_minus =
      ddb::SideDescriptor::make(ddb::LeafType::Torus2, parse_base(minus));
  std::vector<ddb::GluingMatrix> matrices;
  for (long long a = -bound; a <= bound; ++a)
    for (long long b = -bound; b <= bound; ++b)
      for (long long c = -bound; c <= bound; ++c)
        for (long long d = -bound; d <= bound; ++d)
          if (a * d - b * c == 1)
            matrices.push_back({ddb::Int(a), ddb::Int(b), ddb::Int(c), ddb::Int(d)});

  std::vector<ddb::Pi1Report> reports(matrices.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&]() {
    while (true) {
      std::size_t i = next.fetch_add(1);
      if (i >= matrices.size()) break;
      reports[i] = ddb::torus_gluing_pi1(matrices[i], side_minus,
                                         ddb::TorusSublattice::FirstSquared,
                                         opt.limit());
    }
  };
  if (jobs < 1) jobs = 1;
  std::vector<std::thread> pool;
  for (unsigned t = 1; t < jobs; ++t) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();

  ddb::json out = ddb::json::array();
  for (std::size_t i = 0; i < matrices.size(); ++i) {
    track_unknown(opt, reports[i].order);
    if (opt.json) {
      ddb::json row = ddb::json_of(reports[i]);
      row["matrix"] = {ddb::json_int(matrices[i].alpha), ddb::json_int(matrices[i].beta),
                       ddb::json_int(matrices[i].gamma), ddb::json_int(matrices[i].delta)};
      out.push_back(std::move(row));
    } else {
      std::cout << matrices[i].str() << "  order " << reports[i].order.str()
                << "  " << reports[i].classification.str() << "  h1 "
                << ddb::json_of(reports[i].invariants).dump() << "\n";
    }
  }
  if (opt.json) std::cout << out.dump() << "\n";
}

void cmd_decide_spaceform(Options& opt, const std::string& text) {
  ddb::json j;
  try {
    j = ddb::json::parse(text);
  } catch (const std::exception& e) {
    throw ddb::Error(std::string("descriptor JSON: ") + e.what());
  }
  auto v = ddb::decide_spaceform(ddb::descriptor_from_json(j));
  emit(opt, ddb::json_of(v), human_verdict(v));
}

void cmd_decide_flat(Options& opt, const std::string& text) {
  auto f = ddb::h1_invariants(ddb::parse_presentation(text));
  auto v = ddb::decide_flat(f);
  emit(opt, ddb::json_of(v), human_verdict(v));
}

void cmd_catalog(Options& opt, long long max_order) {
  auto entries = ddb::enumerate_descriptors(ddb::Int(max_order));
  if (opt.json) {
    ddb::json out = ddb::json::array();
    for (const auto& e : entries) out.push_back(ddb::json_of(e));
    std::cout << out.dump() << "\n";
    return;
  }
  for (const auto& e : entries) {
    std::cout << "order " << e.order << "  " << e.descriptor.label();
    for (const auto& c : e.coincidences) std::cout << "  [" << c << "]";
    std::cout << "\n";
  }
}

void cmd_check_rules(Options& opt, const std::string& text, bool aspherical,
                     bool ell_minus_zero, bool both_ell_zero) {
  ddb::Pi1Report report;
  report.presentation = ddb::parse_presentation(text);
  report.invariants = ddb::h1_invariants(report.presentation);
  auto n = ddb::group_order(report.presentation, opt.limit());
  report.order = n ? ddb::OrderInfo::finite(*n) : ddb::OrderInfo::unknown();
  track_unknown(opt, report.order);
  auto outcomes = ddb::check_structural_rules(
      report, {aspherical, ell_minus_zero, both_ell_zero});
  if (opt.json) {
    std::cout << ddb::json_of(outcomes).dump() << "\n";
    return;
  }
  for (const auto& r : outcomes) {
    std::cout << r.rule << ": " << ddb::status_name(r.status);
    if (!r.detail.empty()) std::cout << " -- " << r.detail;
    std::cout << "\n";
  }
}

}  // namespace

int main(int argc, char** argv) {
  Options opt;
  if (const char* env = std::getenv("DDB_COSET_LIMIT")) {
    char* end = nullptr;
    unsigned long long v = std::strtoull(env, &end, 10);
    if (end && *end == '\0' && v > 0) opt.coset_limit = v;
  }

  CLI::App app{"decides double disk bundle structures on candidate manifolds"};
  app.require_subcommand(1);
  app.add_flag("--json", opt.json, "machine-readable JSON output");
  app.add_flag("--strict", opt.strict,
               "exit 2 when an enumeration cap left a result unknown");
  app.add_option("--coset-limit", opt.coset_limit,
                 "max cosets per enumeration (env DDB_COSET_LIMIT)");

  std::string pres_text, desc_text, leaf = "T2", minus = "K", plus;
  std::string matrix_text = "1,0,0,1", sublattice = "first";
  long long bound = 1, max_order = 24;
  unsigned jobs = 1;
  bool aspherical = false, ell_minus_zero = false, both_ell_zero = false;

  auto* order_cmd = app.add_subcommand("order", "group order by coset enumeration");
  order_cmd->add_option("presentation", pres_text)->required();
  order_cmd->callback([&] { cmd_order(opt, pres_text); });

  auto* ab_cmd = app.add_subcommand("abelianize", "first homology invariant factors");
  ab_cmd->add_option("presentation", pres_text)->required();
  ab_cmd->callback([&] { cmd_abelianize(opt, pres_text); });

  auto* glue_cmd = app.add_subcommand("glue", "fundamental group of one gluing");
  glue_cmd->add_option("--leaf", leaf, "S2 or T2")->required();
  glue_cmd->add_option("--minus", minus, "pt, RP2, S1, T2 or K")->required();
  glue_cmd->add_option("--plus", plus, "pt, RP2 or S1 (default fits the leaf)");
  glue_cmd->add_option("--matrix", matrix_text, "a,b,c,d gluing matrix");
  glue_cmd->add_option("--sublattice", sublattice,
                       "index-2 sublattice for a T2 minus side: "
                       "first, second or diagonal");
  glue_cmd->callback(
      [&] { cmd_glue(opt, leaf, minus, plus, matrix_text, sublattice); });

  auto* enum_cmd = app.add_subcommand(
      "enumerate-gluings", "sweep all unimodular gluing matrices in a box");
  enum_cmd->add_option("--bound", bound, "matrix entries range over [-N, N]")
      ->required();
  enum_cmd->add_option("--minus", minus, "S1, T2 or K")->required();
  enum_cmd->add_option("--jobs", jobs, "worker threads");
  enum_cmd->callback([&] { cmd_enumerate(opt, bound, minus, jobs); });

  auto* dsf_cmd = app.add_subcommand("decide-spaceform",
                                     "verdict for a spherical space form");
  dsf_cmd->add_option("descriptor", desc_text, "descriptor JSON")->required();
  dsf_cmd->callback([&] { cmd_decide_spaceform(opt, desc_text); });

  auto* df_cmd = app.add_subcommand(
      "decide-flat", "flat-manifold obstruction from first homology");
  df_cmd->add_option("presentation", pres_text)->required();
  df_cmd->callback([&] { cmd_decide_flat(opt, pres_text); });

  auto* cat_cmd = app.add_subcommand("catalog", "space form descriptors by order");
  cat_cmd->add_option("--max-order", max_order)->required();
  cat_cmd->callback([&] { cmd_catalog(opt, max_order); });

  auto* rules_cmd = app.add_subcommand("check-rules",
                                       "structural necessary conditions");
  rules_cmd->add_option("presentation", pres_text)->required();
  rules_cmd->add_flag("--aspherical", aspherical);
  rules_cmd->add_flag("--ell-minus-zero", ell_minus_zero);
  rules_cmd->add_flag("--both-ell-zero", both_ell_zero);
  rules_cmd->callback([&] {
    cmd_check_rules(opt, pres_text, aspherical, ell_minus_zero, both_ell_zero);
  });

  for (auto* sub : app.get_subcommands({})) sub->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e);
  } catch (const ddb::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return opt.strict && opt.saw_unknown ? 2 : 0;
}
